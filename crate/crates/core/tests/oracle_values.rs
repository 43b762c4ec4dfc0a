//! Closed forms checked against brute force, plus values frozen from those
//! checks.

use std::collections::BTreeMap;

use peakmatch::formulas::{
    candidate_peak_sets, euler_number, euler_number_with, peak_set_count, Limits,
};
use peakmatch::matchings::{count_all_matchings, count_matchings_with_closers};
use peakmatch::oracle::{all_matchings, alternating_by_filter, gen_alternating, peak_set_census};
use peakmatch::{Error, Label, PeakSet};

const EULER: [u128; 21] = [
    1,
    1,
    1,
    2,
    5,
    16,
    61,
    272,
    1385,
    7936,
    50521,
    353792,
    2702765,
    22368256,
    199360981,
    1903757312,
    19391512145,
    209865342976,
    2404879675441,
    29088885112832,
    370371188237525,
];

fn peaks(v: &[Label]) -> PeakSet {
    PeakSet::new(v.to_vec()).unwrap()
}

#[test]
fn euler_numbers_match_brute_force() {
    for n in 0..=9 {
        assert_eq!(
            alternating_by_filter(n).len() as u128,
            euler_number(n).unwrap(),
            "n={n}"
        );
    }
    for (n, &e) in EULER.iter().enumerate() {
        assert_eq!(euler_number(n).unwrap(), e, "n={n}");
    }
}

#[test]
fn euler_cap_is_configurable() {
    assert_eq!(euler_number(31), Err(Error::CapExceeded { n: 31, cap: 30 }));
    let wide = Limits { max_n: 40 };
    assert!(euler_number_with(31, wide).unwrap() > euler_number(30).unwrap());
}

#[test]
fn pruned_generator_agrees_with_filter() {
    for n in 0..=9 {
        let pruned: Vec<_> = gen_alternating(n).collect();
        assert_eq!(pruned, alternating_by_filter(n), "n={n}");
    }
}

#[test]
fn census_agrees_with_filter_tally() {
    for n in 1..=9 {
        let mut tally: BTreeMap<PeakSet, u128> = BTreeMap::new();
        for p in alternating_by_filter(n) {
            *tally.entry(p.peak_values().unwrap()).or_default() += 1;
        }
        let census = peak_set_census(n);
        assert_eq!(census.entries, tally, "n={n}");
    }
}

#[test]
fn small_census_values() {
    let c4 = peak_set_census(4);
    assert_eq!(c4.get(&peaks(&[2, 4])), 1);
    assert_eq!(c4.get(&peaks(&[3, 4])), 4);
    assert_eq!(c4.total(), 5);

    let c5 = peak_set_census(5);
    assert_eq!(c5.get(&peaks(&[2, 4, 5])), 4);
    assert_eq!(c5.get(&peaks(&[3, 4, 5])), 12);
    assert_eq!(c5.total(), 16);

    let c9 = peak_set_census(9);
    assert_eq!(c9.get(&peaks(&[4, 5, 7, 8, 9])), 864);
    assert_eq!(c9.get(&peaks(&[2, 3, 7, 8, 9])), 0);
    assert_eq!(c9.total(), 7936);
}

#[test]
fn formula_matches_census_for_every_candidate() {
    for n in 1..=10 {
        let census = peak_set_census(n);
        for p in candidate_peak_sets(n) {
            let formula = peak_set_count(&p, n).unwrap().formula_count;
            assert_eq!(formula, census.get(&p), "n={n} peaks={p}");
        }
    }
}

#[test]
fn closer_counts_match_brute_force() {
    for k in 0..=5 {
        let labels: Vec<Label> = (1..=2 * k as Label).collect();
        let mut by_closers: BTreeMap<PeakSet, u128> = BTreeMap::new();
        for m in all_matchings(&labels) {
            *by_closers.entry(m.closer_set()).or_default() += 1;
        }
        let total: u128 = by_closers.values().sum();
        assert_eq!(total, count_all_matchings(k).unwrap(), "k={k}");
        for p in candidate_closer_sets(k) {
            let formula = count_matchings_with_closers(&p, k).unwrap();
            assert_eq!(
                formula,
                by_closers.get(&p).copied().unwrap_or(0),
                "k={k} {p}"
            );
        }
    }
}

fn candidate_closer_sets(k: usize) -> Vec<PeakSet> {
    use itertools::Itertools;
    (1..=2 * k as Label)
        .combinations(k)
        .map(PeakSet::new)
        .collect::<Result<_, _>>()
        .unwrap()
}

#[test]
fn double_factorials() {
    let expected = [1u128, 1, 3, 15, 105, 945, 10395];
    for (k, &e) in expected.iter().enumerate() {
        assert_eq!(count_all_matchings(k).unwrap(), e);
    }
}
