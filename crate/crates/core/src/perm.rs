//! Permutations in one-line and standard cycle form, peaks and the
//! alternation predicates.
//!
//! Permutations carry an explicit label set. The usual case is `1..=n`, but
//! the odd half of the peak-set bijection works on `0..=2k+1`, so nothing in
//! here assumes labels start at one. The only place where label `0` is
//! forbidden is [`Permutation::peak_values`], because `0` doubles as the
//! boundary sentinel of peak detection.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Label;

/// A bijection of a finite ordered label set, stored in one-line notation.
///
/// `word[i]` is the image of the `i`-th smallest label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation")]
pub struct Permutation {
    labels: Vec<Label>,
    word: Vec<Label>,
}

#[derive(Deserialize)]
struct RawPermutation {
    labels: Vec<Label>,
    word: Vec<Label>,
}

impl TryFrom<RawPermutation> for Permutation {
    type Error = Error;

    fn try_from(raw: RawPermutation) -> Result<Self> {
        Permutation::new(raw.labels, raw.word)
    }
}

impl Permutation {
    /// Builds a permutation of `labels` (any order, no duplicates) whose
    /// one-line word is `word`.
    pub fn new(mut labels: Vec<Label>, word: Vec<Label>) -> Result<Self> {
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0]));
        }
        if labels.len() != word.len() {
            return Err(Error::LengthMismatch {
                word: word.len(),
                labels: labels.len(),
            });
        }
        let mut seen = vec![false; labels.len()];
        for &x in &word {
            let idx = labels
                .binary_search(&x)
                .map_err(|_| Error::UnknownLabel(x))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::DuplicateLabel(x));
            }
        }
        Ok(Self { labels, word })
    }

    /// Builds a permutation from a word of distinct labels; the label set is
    /// the set of entries.
    pub fn from_word(word: Vec<Label>) -> Result<Self> {
        Self::new(word.clone(), word)
    }

    /// Permutation of `1..=word.len()` without validation. Used by the
    /// generators, which produce valid words by construction.
    pub(crate) fn standard_unchecked(word: Vec<Label>) -> Self {
        debug_assert!(Self::from_word(word.clone()).is_ok());
        let labels = (1..=word.len() as Label).collect();
        Self { labels, word }
    }

    pub fn identity(labels: Vec<Label>) -> Result<Self> {
        Self::new(labels.clone(), labels)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn word(&self) -> &[Label] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn into_word(self) -> Vec<Label> {
        self.word
    }

    /// True when the label set is exactly `first..=first + len - 1`.
    pub fn has_labels_from(&self, first: Label) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, &l)| l == first + i as Label)
    }

    /// Image of `label`, if it belongs to the label set.
    pub fn apply(&self, label: Label) -> Option<Label> {
        self.labels
            .binary_search(&label)
            .ok()
            .map(|idx| self.word[idx])
    }

    /// `w1 > w2 < w3 > ...`
    pub fn is_alternating(&self) -> bool {
        is_alternating(&self.word)
    }

    /// `w1 < w2 > w3 < ...`
    pub fn is_up_down(&self) -> bool {
        is_up_down(&self.word)
    }

    /// The word read backwards, on the same label set.
    pub fn reverse(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Self {
            labels: self.labels.clone(),
            word,
        }
    }

    /// Values `w_i` with `w_{i-1} < w_i > w_{i+1}`, where `w_0 = w_{n+1} = 0`.
    pub fn peak_values(&self) -> Result<PeakSet> {
        if self.labels.first() == Some(&0) {
            return Err(Error::ZeroLabel);
        }
        Ok(PeakSet(peak_values_of(&self.word)))
    }

    /// Left-to-right minima as `(index, value)` pairs; indices are 0-based.
    pub fn left_to_right_minima(&self) -> Vec<(usize, Label)> {
        let mut out = Vec::new();
        let mut current = Label::MAX;
        for (i, &x) in self.word.iter().enumerate() {
            if x < current {
                current = x;
                out.push((i, x));
            }
        }
        out
    }

    /// Standard cycle form: each cycle starts at its minimum, cycles are
    /// listed by decreasing minimum.
    pub fn to_cycle_form(&self) -> CyclePermutation {
        let n = self.labels.len();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        // labels are sorted, so scanning indices upward visits each cycle
        // first at its minimum
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut idx = start;
            while !visited[idx] {
                visited[idx] = true;
                cycle.push(self.labels[idx]);
                idx = self.index_of(self.word[idx]);
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        CyclePermutation { cycles }
    }

    /// Inverse of [`Permutation::to_cycle_form`].
    pub fn from_cycle_form(cp: &CyclePermutation) -> Self {
        let mut labels: Vec<Label> = cp.cycles.iter().flatten().copied().collect();
        labels.sort_unstable();
        let mut word = vec![0; labels.len()];
        for cycle in &cp.cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                word[labels.binary_search(&a).unwrap()] = b;
            }
        }
        Self { labels, word }
    }

    /// Composes disjoint cycles into a permutation of `labels`; labels not
    /// mentioned by any cycle are an error rather than implicit fixed points.
    pub fn from_cycles(labels: Vec<Label>, cycles: Vec<Vec<Label>>) -> Result<Self> {
        let cp = CyclePermutation::from_cycles(cycles)?;
        let p = Self::from_cycle_form(&cp);
        let mut expected = labels;
        expected.sort_unstable();
        if let Some(w) = expected.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0]));
        }
        if let Some(&missing) = expected.iter().find(|l| p.labels.binary_search(l).is_err()) {
            return Err(Error::MissingLabel(missing));
        }
        if let Some(&extra) = p.labels.iter().find(|l| expected.binary_search(l).is_err()) {
            return Err(Error::UnknownLabel(extra));
        }
        Ok(p)
    }

    fn index_of(&self, label: Label) -> usize {
        self.labels.binary_search(&label).unwrap()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses a whitespace- or comma-separated word.
    fn from_str(s: &str) -> Result<Self> {
        Self::from_word(parse_labels(s)?)
    }
}

pub(crate) fn write_word(f: &mut impl fmt::Write, word: &[Label]) -> fmt::Result {
    for (i, x) in word.iter().enumerate() {
        if i > 0 {
            f.write_char(' ')?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_labels(s: &str) -> Result<Vec<Label>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Label>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

pub fn is_alternating(word: &[Label]) -> bool {
    word.windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

pub fn is_up_down(word: &[Label]) -> bool {
    word.windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] < w[1] } else { w[0] > w[1] })
}

/// Peak values of a word of positive labels, sorted increasingly.
pub(crate) fn peak_values_of(word: &[Label]) -> Vec<Label> {
    let n = word.len();
    let mut peaks: Vec<Label> = (0..n)
        .filter(|&i| {
            let left = if i == 0 { 0 } else { word[i - 1] };
            let right = if i + 1 == n { 0 } else { word[i + 1] };
            left < word[i] && word[i] > right
        })
        .map(|i| word[i])
        .collect();
    peaks.sort_unstable();
    peaks
}

/// A permutation in standard cycle form.
///
/// Invariants: cycles are non-empty and pairwise disjoint, every cycle
/// starts at its minimum, and cycles are ordered by strictly decreasing
/// minimum. With this ordering, erasing the parentheses of a cycle up-down
/// permutation gives back the word it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclePermutation {
    cycles: Vec<Vec<Label>>,
}

impl CyclePermutation {
    /// Accepts cycles already in standard form, rejecting anything else.
    pub fn new(cycles: Vec<Vec<Label>>) -> Result<Self> {
        check_disjoint(&cycles)?;
        for c in &cycles {
            if c.is_empty() {
                return Err(Error::EmptyCycle);
            }
            if c.iter().min() != Some(&c[0]) {
                return Err(Error::NonCanonicalCycles(format!(
                    "cycle {} does not start at its minimum",
                    CycleDisplay(c)
                )));
            }
        }
        if cycles.windows(2).any(|w| w[0][0] <= w[1][0]) {
            return Err(Error::NonCanonicalCycles(
                "cycles are not ordered by decreasing minimum".into(),
            ));
        }
        Ok(Self { cycles })
    }

    /// Accepts any disjoint cycles and rotates/sorts them into standard form.
    pub fn from_cycles(cycles: Vec<Vec<Label>>) -> Result<Self> {
        check_disjoint(&cycles)?;
        let mut cycles = cycles
            .into_iter()
            .map(|mut c| {
                let pos = c
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, x)| *x)
                    .map(|(i, _)| i)
                    .ok_or(Error::EmptyCycle)?;
                c.rotate_left(pos);
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        cycles.sort_unstable_by(|a, b| b[0].cmp(&a[0]));
        Ok(Self { cycles })
    }

    pub fn cycles(&self) -> &[Vec<Label>] {
        &self.cycles
    }

    /// Sorted union of all cycle entries.
    pub fn labels(&self) -> Vec<Label> {
        let mut labels: Vec<Label> = self.cycles.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels
    }

    /// Every cycle word is up-down.
    pub fn is_cycle_up_down(&self) -> bool {
        self.cycles.iter().all(|c| is_up_down(c))
    }

    pub fn all_cycles_even(&self) -> bool {
        self.cycles.iter().all(|c| c.len() % 2 == 0)
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }
}

fn check_disjoint(cycles: &[Vec<Label>]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &x in cycles.iter().flatten() {
        if !seen.insert(x) {
            return Err(Error::DuplicateLabel(x));
        }
    }
    Ok(())
}

struct CycleDisplay<'a>(&'a [Label]);

impl fmt::Display for CycleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for CyclePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "{}", CycleDisplay(c))?;
        }
        Ok(())
    }
}

impl FromStr for CyclePermutation {
    type Err = Error;

    /// Parses `(6,7)(2,4)(1,8,3,5)` in any rotation/order.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let end = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            cycles.push(parse_labels(&body[..end])?);
            rest = body[end + 1..].trim_start();
        }
        Self::from_cycles(cycles)
    }
}

/// A strictly increasing sequence of positive labels: the peak values of a
/// permutation, or equivalently the closer set of a matching.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Label>", into = "Vec<Label>")]
pub struct PeakSet(Vec<Label>);

impl PeakSet {
    pub fn new(values: Vec<Label>) -> Result<Self> {
        if values.first() == Some(&0) {
            return Err(Error::MalformedPeakSet("entries must be positive".into()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedPeakSet(format!(
                "{values:?} is not strictly increasing"
            )));
        }
        Ok(Self(values))
    }

    pub(crate) fn new_unchecked(values: Vec<Label>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self(values)
    }

    pub fn as_slice(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<Label> {
        self.0.last().copied()
    }

    pub fn contains(&self, label: Label) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.0.iter().copied()
    }
}

impl TryFrom<Vec<Label>> for PeakSet {
    type Error = Error;

    fn try_from(values: Vec<Label>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<PeakSet> for Vec<Label> {
    fn from(p: PeakSet) -> Self {
        p.0
    }
}

impl fmt::Display for PeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for PeakSet {
    type Err = Error;

    /// Parses `4,5,7,8`, optionally wrapped in braces.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        Self::new(parse_labels(s)?)
    }
}
