//! Perfect matchings drawn as arc diagrams, counted and enumerated by their
//! closer sets.
//!
//! Enumeration walks the closers from left to right. When closer `c` is
//! reached, every opener left of `c` that no earlier closer has taken is a
//! legal partner, so the search branches over exactly those openers. The
//! number of branches at the `j`-th closer depends only on its position,
//! which is where the closed-form counts come from.
//!
//! For pairs whose union must be a single cycle, the below matching is built
//! the same way, except that at every closer but the last the one opener that
//! would close a circle among the arcs already drawn is skipped.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::PeakSet;
use crate::Label;

/// A perfect matching of an ordered label set.
///
/// Arcs are stored as `(opener, closer)` with `opener < closer`, sorted by
/// closer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatching")]
pub struct Matching {
    labels: Vec<Label>,
    arcs: Vec<(Label, Label)>,
}

#[derive(Deserialize)]
struct RawMatching {
    labels: Vec<Label>,
    arcs: Vec<(Label, Label)>,
}

impl TryFrom<RawMatching> for Matching {
    type Error = Error;

    fn try_from(raw: RawMatching) -> Result<Self> {
        Matching::new(raw.labels, raw.arcs)
    }
}

impl Matching {
    /// Arcs may be given in either orientation and any order.
    pub fn new(mut labels: Vec<Label>, arcs: Vec<(Label, Label)>) -> Result<Self> {
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0]));
        }
        let mut covered = vec![false; labels.len()];
        let mut norm = Vec::with_capacity(arcs.len());
        for (a, b) in arcs {
            if a == b {
                return Err(Error::InvalidMatching(format!("loop arc ({a},{b})")));
            }
            for x in [a, b] {
                let idx = labels
                    .binary_search(&x)
                    .map_err(|_| Error::UnknownLabel(x))?;
                if std::mem::replace(&mut covered[idx], true) {
                    return Err(Error::InvalidMatching(format!(
                        "label {x} is an endpoint of two arcs"
                    )));
                }
            }
            norm.push((a.min(b), a.max(b)));
        }
        if let Some(idx) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidMatching(format!(
                "label {} is not covered by any arc",
                labels[idx]
            )));
        }
        norm.sort_unstable_by_key(|&(_, c)| c);
        Ok(Self { labels, arcs: norm })
    }

    /// Label set inferred from the arc endpoints.
    pub fn from_arcs(arcs: Vec<(Label, Label)>) -> Result<Self> {
        let labels = arcs.iter().flat_map(|&(a, b)| [a, b]).collect();
        Self::new(labels, arcs)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// `(opener, closer)` pairs sorted by closer.
    pub fn arcs(&self) -> &[(Label, Label)] {
        &self.arcs
    }

    pub fn closer_set(&self) -> PeakSet {
        PeakSet::new_unchecked(self.arcs.iter().map(|&(_, c)| c).collect())
    }

    pub fn opener_set(&self) -> Vec<Label> {
        let mut openers: Vec<Label> = self.arcs.iter().map(|&(o, _)| o).collect();
        openers.sort_unstable();
        openers
    }

    pub fn partner(&self, label: Label) -> Option<Label> {
        self.arcs.iter().find_map(|&(o, c)| match label {
            l if l == o => Some(c),
            l if l == c => Some(o),
            _ => None,
        })
    }

    fn partner_map(&self) -> HashMap<Label, Label> {
        self.arcs
            .iter()
            .flat_map(|&(o, c)| [(o, c), (c, o)])
            .collect()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (o, c)) in self.arcs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{{{o},{c}}}")?;
        }
        Ok(())
    }
}

/// An arc diagram: two matchings on the same labels whose opener sets (and
/// hence closer sets) agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct MatchingPair {
    above: Matching,
    below: Matching,
}

#[derive(Deserialize)]
struct RawPair {
    above: Matching,
    below: Matching,
}

impl TryFrom<RawPair> for MatchingPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        MatchingPair::new(raw.above, raw.below)
    }
}

impl MatchingPair {
    pub fn new(above: Matching, below: Matching) -> Result<Self> {
        if above.labels != below.labels {
            return Err(Error::InvalidPair(
                "above and below matchings have different label sets".into(),
            ));
        }
        if above.closer_set() != below.closer_set() {
            return Err(Error::InvalidPair(format!(
                "closer sets differ: above {}, below {}",
                above.closer_set(),
                below.closer_set()
            )));
        }
        Ok(Self { above, below })
    }

    pub fn above(&self) -> &Matching {
        &self.above
    }

    pub fn below(&self) -> &Matching {
        &self.below
    }

    pub fn labels(&self) -> &[Label] {
        &self.above.labels
    }

    pub fn closer_set(&self) -> PeakSet {
        self.above.closer_set()
    }

    /// Number of connected components of the union of both arc sets. Every
    /// vertex has degree two, so each component is a closed circle.
    pub fn union_cycle_count(&self) -> usize {
        let labels = &self.above.labels;
        let idx = |x: Label| labels.binary_search(&x).unwrap();
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = labels.len();
        for &(o, c) in self.above.arcs.iter().chain(&self.below.arcs) {
            let (ro, rc) = (find(&mut parent, idx(o)), find(&mut parent, idx(c)));
            if ro != rc {
                parent[ro] = rc;
                components -= 1;
            }
        }
        components
    }
}

/// `(2k-1)!!`, the number of perfect matchings of `2k` labels.
pub fn count_all_matchings(k: usize) -> Result<u128> {
    (1..=k).try_fold(1u128, |acc, j| {
        acc.checked_mul(2 * j as u128 - 1)
            .ok_or(Error::Overflow("(2k-1)!!"))
    })
}

/// Product of `factors`, or 0 if any factor is not positive.
pub(crate) fn clamped_product(factors: &[i64]) -> Result<u128> {
    if factors.iter().any(|&f| f <= 0) {
        return Ok(0);
    }
    factors.iter().try_fold(1u128, |acc, &f| {
        acc.checked_mul(f as u128)
            .ok_or(Error::Overflow("closed-form count"))
    })
}

/// Number of matchings of `1..=2k` whose closer set is `closers`:
/// `prod_{j<k} (i_j - 2j + 1)`, or 0 when no such matching exists.
pub fn count_matchings_with_closers(closers: &PeakSet, k: usize) -> Result<u128> {
    if closers.len() != k {
        return Err(Error::MalformedPeakSet(format!(
            "{closers} has {} entries, expected {k}",
            closers.len()
        )));
    }
    if let Some(x) = closers.iter().find(|&x| x as usize > 2 * k) {
        return Err(Error::MalformedPeakSet(format!(
            "closer {x} lies outside 1..={}",
            2 * k
        )));
    }
    // The last factor i_k - 2k + 1 is 1 exactly when i_k = 2k, and not
    // positive otherwise, which covers the trailing unmatched openers.
    let factors: Vec<i64> = closers
        .iter()
        .enumerate()
        .map(|(j, x)| x as i64 - 2 * (j as i64 + 1) + 1)
        .collect();
    clamped_product(&factors)
}

fn check_odd_closers(closers: &PeakSet) -> Result<usize> {
    let len = closers.len();
    if len == 0 {
        return Err(Error::MalformedPeakSet("closer set is empty".into()));
    }
    let k = len - 1;
    if closers.max() != Some(2 * k as Label + 1) {
        return Err(Error::MalformedPeakSet(format!(
            "{closers} must end at {} for {} closers",
            2 * k + 1,
            len
        )));
    }
    Ok(k)
}

/// Above matchings on `0..=2k+1` with closer set `{i_1<...<i_{k+1}}`:
/// `prod_{j<=k} (i_j - 2j + 2)`.
pub fn count_odd_above(closers: &PeakSet) -> Result<u128> {
    clamped_product(&odd_factors(closers, 2)?)
}

/// Below matchings compatible with a fixed above matching such that the
/// union is one circle: `prod_{j<=k} (i_j - 2j + 1)`.
pub fn count_odd_below(closers: &PeakSet) -> Result<u128> {
    clamped_product(&odd_factors(closers, 1)?)
}

fn odd_factors(closers: &PeakSet, offset: i64) -> Result<Vec<i64>> {
    let k = check_odd_closers(closers)?;
    Ok(closers
        .iter()
        .take(k)
        .enumerate()
        .map(|(j, x)| x as i64 - 2 * (j as i64 + 1) + offset)
        .collect())
}

/// Shared closer-driven search over one matching.
///
/// Frames hold the candidate openers for each closer decided so far; the
/// search is a resumable depth-first walk over them.
#[derive(Debug, Clone)]
struct CloserSearch {
    labels: Vec<Label>,
    is_closer: Vec<bool>,
    num_closers: usize,
    /// Above partners when building a below matching that must stay a
    /// single circle.
    circle_guard: Option<HashMap<Label, Label>>,
    frames: Vec<Frame>,
    started: bool,
    done: bool,
}

#[derive(Debug, Clone)]
struct Frame {
    closer: Label,
    candidates: Vec<Label>,
    pos: usize,
}

impl Frame {
    fn chosen(&self) -> Label {
        self.candidates[self.pos]
    }
}

impl CloserSearch {
    fn new(closers: &PeakSet, labels: &[Label]) -> Result<Self> {
        let mut labels = labels.to_vec();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0]));
        }
        let mut is_closer = vec![false; labels.len()];
        for c in closers.iter() {
            let idx = labels
                .binary_search(&c)
                .map_err(|_| Error::UnknownLabel(c))?;
            is_closer[idx] = true;
        }
        let num_closers = closers.len();
        // an unbalanced label set has no perfect matching with these closers
        let done = 2 * num_closers != labels.len();
        Ok(Self {
            labels,
            is_closer,
            num_closers,
            circle_guard: None,
            frames: Vec::new(),
            started: false,
            done,
        })
    }

    fn closer_label(&self, j: usize) -> Label {
        self.labels
            .iter()
            .zip(&self.is_closer)
            .filter(|(_, &c)| c)
            .nth(j)
            .map(|(&l, _)| l)
            .unwrap()
    }

    fn candidates_for(&self, j: usize) -> (Label, Vec<Label>) {
        let closer = self.closer_label(j);
        let taken: Vec<Label> = self.frames.iter().map(Frame::chosen).collect();
        let mut candidates: Vec<Label> = self
            .labels
            .iter()
            .zip(&self.is_closer)
            .take_while(|(&l, _)| l < closer)
            .filter(|(l, &c)| !c && !taken.contains(l))
            .map(|(&l, _)| l)
            .collect();
        if let Some(above) = &self.circle_guard {
            if j + 1 < self.num_closers {
                if let Some(bad) = self.circle_closing_opener(above, closer) {
                    candidates.retain(|&o| o != bad);
                }
            }
        }
        (closer, candidates)
    }

    /// Follows the path that starts at `closer` along its above arc and then
    /// alternates below/above through the arcs drawn so far. The opener where
    /// the path stops is the one whose choice would close a circle.
    fn circle_closing_opener(&self, above: &HashMap<Label, Label>, closer: Label) -> Option<Label> {
        let below_closer_of = |opener: Label| {
            self.frames
                .iter()
                .find(|f| f.chosen() == opener)
                .map(|f| f.closer)
        };
        let mut opener = above[&closer];
        while let Some(next_closer) = below_closer_of(opener) {
            opener = above[&next_closer];
        }
        (opener < closer).then_some(opener)
    }

    /// Pushes frames until every closer has a partner (true) or some closer
    /// has no candidate left (false).
    fn descend(&mut self) -> bool {
        while self.frames.len() < self.num_closers {
            let (closer, candidates) = self.candidates_for(self.frames.len());
            if candidates.is_empty() {
                return false;
            }
            self.frames.push(Frame {
                closer,
                candidates,
                pos: 0,
            });
        }
        true
    }

    fn advance(&mut self) -> bool {
        while let Some(top) = self.frames.last_mut() {
            top.pos += 1;
            if top.pos < top.candidates.len() {
                return true;
            }
            self.frames.pop();
        }
        false
    }

    fn emit(&self) -> Matching {
        Matching {
            labels: self.labels.clone(),
            arcs: self.frames.iter().map(|f| (f.chosen(), f.closer)).collect(),
        }
    }
}

impl Iterator for CloserSearch {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        loop {
            if self.descend() {
                return Some(self.emit());
            }
            if !self.advance() {
                self.done = true;
                return None;
            }
        }
    }
}

/// Lazy stream of the matchings of `labels` with closer set `closers`.
#[derive(Debug, Clone)]
pub struct MatchingsWithClosers(CloserSearch);

impl Iterator for MatchingsWithClosers {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        self.0.next()
    }
}

pub fn enumerate_matchings_with_closers(
    closers: &PeakSet,
    labels: &[Label],
) -> Result<MatchingsWithClosers> {
    CloserSearch::new(closers, labels).map(MatchingsWithClosers)
}

/// Every (above, below) combination of matchings with the given closers,
/// above-major.
#[derive(Debug, Clone)]
pub struct IndependentPairs {
    prototype: CloserSearch,
    outer: CloserSearch,
    current: Option<(Matching, CloserSearch)>,
}

impl Iterator for IndependentPairs {
    type Item = MatchingPair;

    fn next(&mut self) -> Option<MatchingPair> {
        loop {
            if let Some((above, inner)) = &mut self.current {
                if let Some(below) = inner.next() {
                    return Some(MatchingPair {
                        above: above.clone(),
                        below,
                    });
                }
            }
            let above = self.outer.next()?;
            self.current = Some((above, self.prototype.clone()));
        }
    }
}

pub fn enumerate_independent_pairs(
    closers: &PeakSet,
    labels: &[Label],
) -> Result<IndependentPairs> {
    let prototype = CloserSearch::new(closers, labels)?;
    Ok(IndependentPairs {
        outer: prototype.clone(),
        prototype,
        current: None,
    })
}

/// Pairs whose union is a single circle, built constructively.
#[derive(Debug, Clone)]
pub struct SingleCyclePairs {
    prototype: CloserSearch,
    outer: CloserSearch,
    current: Option<(Matching, CloserSearch)>,
}

impl Iterator for SingleCyclePairs {
    type Item = MatchingPair;

    fn next(&mut self) -> Option<MatchingPair> {
        loop {
            if let Some((above, inner)) = &mut self.current {
                if let Some(below) = inner.next() {
                    return Some(MatchingPair {
                        above: above.clone(),
                        below,
                    });
                }
            }
            let above = self.outer.next()?;
            let mut inner = self.prototype.clone();
            inner.circle_guard = Some(above.partner_map());
            self.current = Some((above, inner));
        }
    }
}

/// Matching pairs on `labels` (which must contain 0) with closer set
/// `closers` whose union of arcs is one closed circle.
pub fn enumerate_single_cycle_pairs(
    closers: &PeakSet,
    labels: &[Label],
) -> Result<SingleCyclePairs> {
    if !labels.contains(&0) {
        return Err(Error::MissingLabel(0));
    }
    let prototype = CloserSearch::new(closers, labels)?;
    Ok(SingleCyclePairs {
        outer: prototype.clone(),
        prototype,
        current: None,
    })
}
