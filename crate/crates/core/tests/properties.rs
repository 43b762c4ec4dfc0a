use proptest::prelude::*;

use peakmatch::bijections::{
    even_decode, even_encode, from_arc_diagram, odd_decode, odd_encode, tau, tau_inverse,
    to_arc_diagram,
};
use peakmatch::formulas::euler_number;
use peakmatch::oracle::{gen_alternating, peak_set_census};
use peakmatch::{Census, CyclePermutation, Label, Matching, MatchingPair, Permutation};

fn any_permutation() -> impl Strategy<Value = Permutation> {
    (0usize..=12)
        .prop_flat_map(|n| Just((1..=n as Label).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::from_word(w).unwrap())
}

/// The `i`-th alternating permutation of `1..=n` in generator order.
fn alternating(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), 0..euler_number(n).unwrap() as usize))
        .prop_map(|(n, i)| gen_alternating(n).nth(i).unwrap())
}

fn alternating_even() -> impl Strategy<Value = Permutation> {
    alternating(8).prop_filter("even length", |p| p.len() % 2 == 0)
}

fn alternating_odd() -> impl Strategy<Value = Permutation> {
    alternating(9).prop_filter("odd length", |p| p.len() % 2 == 1)
}

fn json_roundtrip<T>(value: &T) -> T
where
    T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let text = serde_json::to_string(value).unwrap();
    let back: T = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, value);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
    back
}

proptest! {
    #[test]
    fn reverse_is_an_involution(p in any_permutation()) {
        prop_assert_eq!(p.reverse().reverse(), p);
    }

    #[test]
    fn cycle_form_roundtrip(p in any_permutation()) {
        let cp = p.to_cycle_form();
        prop_assert_eq!(Permutation::from_cycle_form(&cp), p.clone());
        let reparsed: CyclePermutation = cp.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, cp);
    }

    #[test]
    fn text_roundtrip(p in any_permutation()) {
        let back: Permutation = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn permutation_json_roundtrip(p in any_permutation()) {
        json_roundtrip(&p);
    }

    #[test]
    fn reversal_swaps_alternating_and_up_down(p in any_permutation()) {
        if p.len() % 2 == 0 {
            prop_assert_eq!(p.is_alternating(), p.reverse().is_up_down());
        }
    }

    #[test]
    fn even_chain_roundtrip(sigma in alternating_even()) {
        let pair = even_encode(&sigma).unwrap();
        prop_assert_eq!(pair.closer_set(), sigma.peak_values().unwrap());
        prop_assert_eq!(even_decode(&pair).unwrap(), sigma);
        json_roundtrip(&pair);
        json_roundtrip(pair.above());
    }

    #[test]
    fn odd_chain_roundtrip(sigma in alternating_odd()) {
        let pair = odd_encode(&sigma).unwrap();
        prop_assert_eq!(pair.closer_set(), sigma.peak_values().unwrap());
        prop_assert_eq!(pair.union_cycle_count(), 1);
        prop_assert_eq!(odd_decode(&pair).unwrap(), sigma);
        json_roundtrip(&pair);
    }

    #[test]
    fn tau_and_arc_diagram_invert(sigma in alternating_even()) {
        let up_down = sigma.reverse();
        let cp = tau(&up_down).unwrap();
        prop_assert!(cp.is_cycle_up_down() && cp.all_cycles_even());
        prop_assert_eq!(tau_inverse(&cp).unwrap(), up_down);
        let pair = to_arc_diagram(&cp).unwrap();
        prop_assert_eq!(from_arc_diagram(&pair).unwrap(), cp);
    }

    #[test]
    fn matching_json_roundtrip(p in any_permutation()) {
        // pair consecutive letters of a random word into arcs
        let arcs: Vec<(Label, Label)> = p
            .word()
            .chunks_exact(2)
            .map(|c| (c[0], c[1]))
            .collect();
        let m = Matching::from_arcs(arcs).unwrap();
        let back = json_roundtrip(&m);
        prop_assert!(back.arcs().iter().all(|&(o, c)| o < c));
        let pair = MatchingPair::new(m.clone(), m).unwrap();
        json_roundtrip(&pair);
    }
}

#[test]
fn census_json_roundtrip() {
    for n in 0..=8 {
        let census = peak_set_census(n);
        let back: Census = json_roundtrip(&census);
        assert_eq!(back.total(), euler_number(n).unwrap());
    }
}
