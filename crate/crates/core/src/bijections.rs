//! The chain linking alternating permutations with a fixed peak set to arc
//! diagrams with the same closer set.
//!
//! Even length `2k`:
//!
//! ```text
//! alternating sigma --reverse--> up-down word --tau--> cycle up-down, even cycles
//!                   --draw-->    (above, below) matchings, closers = peaks(sigma)
//! ```
//!
//! Odd length `2k+1`: append `0` to `sigma` (the result is alternating on
//! `0..=2k+1`), then run the same chain. Since `0` is the only left-to-right
//! minimum of the reversed word, the result is a single cycle, so the arc
//! diagram's union is one closed circle.

use crate::error::{Error, Result};
use crate::matchings::{Matching, MatchingPair};
use crate::perm::{CyclePermutation, Permutation};
use crate::Label;

/// Cuts an up-down word at its left-to-right minima; each piece becomes one
/// cycle. The pieces start at their minima and come in decreasing order of
/// minimum, so the output is already in standard form.
pub fn tau(p: &Permutation) -> Result<CyclePermutation> {
    if !p.is_up_down() {
        return Err(Error::NotUpDown(p.to_string()));
    }
    let word = p.word();
    let starts: Vec<usize> = p
        .left_to_right_minima()
        .into_iter()
        .map(|(i, _)| i)
        .collect();
    let cycles = starts
        .iter()
        .zip(starts.iter().skip(1).chain([&word.len()]))
        .map(|(&a, &b)| word[a..b].to_vec())
        .collect();
    CyclePermutation::new(cycles)
}

/// Erases the parentheses of a cycle up-down permutation in standard form.
pub fn tau_inverse(cp: &CyclePermutation) -> Result<Permutation> {
    if !cp.is_cycle_up_down() {
        return Err(Error::NotCycleUpDown(cp.to_string()));
    }
    Permutation::from_word(cp.cycles().concat())
}

/// Draws `a -> sigma(a)` above the line when `a < sigma(a)` and below it
/// otherwise.
pub fn to_arc_diagram(cp: &CyclePermutation) -> Result<MatchingPair> {
    if !cp.all_cycles_even() {
        return Err(Error::OddCycle(cp.to_string()));
    }
    if !cp.is_cycle_up_down() {
        return Err(Error::NotCycleUpDown(cp.to_string()));
    }
    let labels = cp.labels();
    let mut above = Vec::with_capacity(labels.len() / 2);
    let mut below = Vec::with_capacity(labels.len() / 2);
    for cycle in cp.cycles() {
        for (i, &a) in cycle.iter().enumerate() {
            let b = cycle[(i + 1) % cycle.len()];
            if a < b {
                above.push((a, b));
            } else {
                below.push((b, a));
            }
        }
    }
    let above = Matching::new(labels.clone(), above)?;
    let below = Matching::new(labels, below)?;
    MatchingPair::new(above, below)
}

/// Walks the diagram entering above arcs at their opener and below arcs at
/// their closer: openers map to their above partner, closers to their below
/// partner.
pub fn from_arc_diagram(pair: &MatchingPair) -> Result<CyclePermutation> {
    let labels = pair.labels().to_vec();
    let mut word = vec![0; labels.len()];
    let idx = |x: Label| labels.binary_search(&x).unwrap();
    for &(o, c) in pair.above().arcs() {
        word[idx(o)] = c;
    }
    for &(o, c) in pair.below().arcs() {
        word[idx(c)] = o;
    }
    let cp = Permutation::new(labels, word)?.to_cycle_form();
    debug_assert!(cp.is_cycle_up_down() && cp.all_cycles_even());
    Ok(cp)
}

fn expect_labels(found: &[Label], first: Label, len: usize) -> Result<()> {
    let ok = found.len() == len
        && found
            .iter()
            .enumerate()
            .all(|(i, &l)| l == first + i as Label);
    if ok {
        return Ok(());
    }
    Err(Error::WrongLabelSet {
        expected: format!("{first}..={}", first as i64 + len as i64 - 1),
        found: format!("{found:?}"),
    })
}

/// Alternating permutation of `1..=2k` to a pair of matchings whose closer
/// set equals its peak set.
pub fn even_encode(p: &Permutation) -> Result<MatchingPair> {
    if !p.len().is_multiple_of(2) {
        return Err(Error::WrongLabelSet {
            expected: "an even number of labels".into(),
            found: format!("{:?}", p.labels()),
        });
    }
    expect_labels(p.labels(), 1, p.len())?;
    if !p.is_alternating() {
        return Err(Error::NotAlternating(p.to_string()));
    }
    to_arc_diagram(&tau(&p.reverse())?)
}

pub fn even_decode(pair: &MatchingPair) -> Result<Permutation> {
    expect_labels(pair.labels(), 1, pair.labels().len())?;
    let up_down = tau_inverse(&from_arc_diagram(pair)?)?;
    Ok(up_down.reverse())
}

/// `sigma` followed by a trailing 0, on `0..=n`.
pub fn append_zero(p: &Permutation) -> Permutation {
    let mut word = p.word().to_vec();
    word.push(0);
    Permutation::from_word(word).expect("0 is not a label of a permutation of 1..=n")
}

/// Alternating permutation of `1..=2k+1` to a single-circle pair of
/// matchings on `0..=2k+1` whose closer set equals its peak set.
pub fn odd_encode(p: &Permutation) -> Result<MatchingPair> {
    if p.len() % 2 != 1 {
        return Err(Error::WrongLabelSet {
            expected: "an odd number of labels".into(),
            found: format!("{:?}", p.labels()),
        });
    }
    expect_labels(p.labels(), 1, p.len())?;
    if !p.is_alternating() {
        return Err(Error::NotAlternating(p.to_string()));
    }
    let cp = tau(&append_zero(p).reverse())?;
    debug_assert_eq!(cp.num_cycles(), 1);
    to_arc_diagram(&cp)
}

pub fn odd_decode(pair: &MatchingPair) -> Result<Permutation> {
    expect_labels(pair.labels(), 0, pair.labels().len())?;
    let circles = pair.union_cycle_count();
    if circles != 1 {
        return Err(Error::ClosedCircle(circles));
    }
    let extended = tau_inverse(&from_arc_diagram(pair)?)?.reverse();
    let mut word = extended.into_word();
    debug_assert_eq!(word.last(), Some(&0));
    word.pop();
    Permutation::from_word(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cp(s: &str) -> CyclePermutation {
        s.parse().unwrap()
    }

    type Arcs = Vec<(Label, Label)>;

    fn arcs(pair: &MatchingPair) -> (Arcs, Arcs) {
        let mut a = pair.above().arcs().to_vec();
        let mut b = pair.below().arcs().to_vec();
        a.sort();
        b.sort();
        (a, b)
    }

    #[test]
    fn tau_examples() {
        assert_eq!(
            tau(&p("6 7 2 4 1 8 3 5")).unwrap(),
            cp("(6,7)(2,4)(1,8,3,5)")
        );
        assert_eq!(
            tau(&p("0 5 2 9 1 4 3 7 6 8")).unwrap(),
            cp("(0,5,2,9,1,4,3,7,6,8)")
        );
        assert_eq!(tau(&p("1 2")).unwrap(), cp("(1,2)"));
        assert!(matches!(tau(&p("2 1")), Err(Error::NotUpDown(_))));
    }

    #[test]
    fn tau_inverse_examples() {
        assert_eq!(
            tau_inverse(&cp("(6,7)(2,4)(1,8,3,5)")).unwrap(),
            p("6 7 2 4 1 8 3 5")
        );
        assert_eq!(tau_inverse(&cp("(1,2)")).unwrap(), p("1 2"));
        assert!(matches!(
            tau_inverse(&cp("(1,2,4,3)")),
            Err(Error::NotCycleUpDown(_))
        ));
    }

    #[test]
    fn arc_diagram_examples() {
        let even_example = to_arc_diagram(&cp("(6,7)(2,4)(1,8,3,5)")).unwrap();
        assert_eq!(
            arcs(&even_example),
            (
                vec![(1, 8), (2, 4), (3, 5), (6, 7)],
                vec![(1, 5), (2, 4), (3, 8), (6, 7)]
            )
        );
        let odd_example = to_arc_diagram(&cp("(0,5,2,9,1,4,3,7,6,8)")).unwrap();
        assert_eq!(
            arcs(&odd_example),
            (
                vec![(0, 5), (1, 4), (2, 9), (3, 7), (6, 8)],
                vec![(0, 8), (1, 9), (2, 5), (3, 4), (6, 7)]
            )
        );
        let tiny = to_arc_diagram(&cp("(1,2)")).unwrap();
        assert_eq!(arcs(&tiny), (vec![(1, 2)], vec![(1, 2)]));

        assert_eq!(
            from_arc_diagram(&even_example).unwrap(),
            cp("(6,7)(2,4)(1,8,3,5)")
        );
        assert_eq!(
            from_arc_diagram(&odd_example).unwrap(),
            cp("(0,5,2,9,1,4,3,7,6,8)")
        );
        assert_eq!(from_arc_diagram(&tiny).unwrap(), cp("(1,2)"));

        assert!(matches!(
            to_arc_diagram(&cp("(1)(2,3)")),
            Err(Error::OddCycle(_))
        ));
    }

    #[test]
    fn even_chain() {
        let sigma = p("5 3 8 1 4 2 7 6");
        let pair = even_encode(&sigma).unwrap();
        assert_eq!(pair.closer_set().as_slice(), [4, 5, 7, 8]);
        assert_eq!(
            arcs(&pair),
            (
                vec![(1, 8), (2, 4), (3, 5), (6, 7)],
                vec![(1, 5), (2, 4), (3, 8), (6, 7)]
            )
        );
        assert_eq!(even_decode(&pair).unwrap(), sigma);

        let pair = even_encode(&p("2 1")).unwrap();
        assert_eq!(arcs(&pair), (vec![(1, 2)], vec![(1, 2)]));
        assert_eq!(even_decode(&pair).unwrap(), p("2 1"));

        assert!(matches!(
            even_encode(&p("1 2")),
            Err(Error::NotAlternating(_))
        ));
        assert!(even_encode(&p("3 2")).is_err());
        assert!(even_encode(&p("2 1 3")).is_err());
    }

    #[test]
    fn odd_chain() {
        let sigma = p("8 6 7 3 4 1 9 2 5");
        let pair = odd_encode(&sigma).unwrap();
        assert_eq!(pair.closer_set().as_slice(), [4, 5, 7, 8, 9]);
        assert_eq!(pair.union_cycle_count(), 1);
        assert_eq!(
            arcs(&pair),
            (
                vec![(0, 5), (1, 4), (2, 9), (3, 7), (6, 8)],
                vec![(0, 8), (1, 9), (2, 5), (3, 4), (6, 7)]
            )
        );
        assert_eq!(odd_decode(&pair).unwrap(), sigma);

        let pair = odd_encode(&p("1")).unwrap();
        assert_eq!(arcs(&pair), (vec![(0, 1)], vec![(0, 1)]));
        assert_eq!(odd_decode(&pair).unwrap(), p("1"));
    }

    #[test]
    fn odd_decode_rejects_several_circles() {
        let above = Matching::from_arcs(vec![(0, 1), (2, 3)]).unwrap();
        let pair = MatchingPair::new(above.clone(), above).unwrap();
        assert_eq!(odd_decode(&pair), Err(Error::ClosedCircle(2)));
    }

    #[test]
    fn decoders_check_label_sets() {
        let pair = odd_encode(&p("1")).unwrap();
        assert!(matches!(
            even_decode(&pair),
            Err(Error::WrongLabelSet { .. })
        ));
        let pair = even_encode(&p("2 1")).unwrap();
        assert!(matches!(
            odd_decode(&pair),
            Err(Error::WrongLabelSet { .. })
        ));
    }
}
