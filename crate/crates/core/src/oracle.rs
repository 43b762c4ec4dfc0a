//! Brute-force generators and the harness that checks every closed form and
//! every bijection against exhaustive enumeration.
//!
//! The generators here never go through the bijections they are used to
//! check. The alternating-permutation generator is itself checked against a
//! plain filter of all `n!` words at small `n`.

use std::collections::{BTreeMap, HashMap, HashSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijections::{even_decode, even_encode, odd_decode, odd_encode, tau, tau_inverse};
use crate::error::Result;
use crate::formulas::{candidate_peak_sets, euler_number, peak_set_count};
use crate::matchings::{
    count_all_matchings, count_matchings_with_closers, count_odd_above, count_odd_below,
    enumerate_independent_pairs, enumerate_matchings_with_closers, enumerate_single_cycle_pairs,
    Matching, MatchingPair,
};
use crate::perm::{is_alternating, peak_values_of, CyclePermutation, PeakSet, Permutation};
use crate::Label;

/// Largest `n` the bitmask-based generators support.
pub const MAX_GEN_N: usize = 62;

/// Depth-first generator of alternating words of `1..=n`.
///
/// A value is placed only if it continues the alternation and leaves at
/// least one unused value on the side the next position needs.
#[derive(Debug, Clone)]
pub struct AlternatingWords {
    n: usize,
    first: Option<Label>,
    word: Vec<Label>,
    used: u64,
    next_try: Vec<Label>,
    started: bool,
    done: bool,
}

impl AlternatingWords {
    pub fn new(n: usize) -> Self {
        Self::build(n, None)
    }

    /// Only the words starting with `first`; the shards of [`Self::new`].
    pub fn starting_with(n: usize, first: Label) -> Self {
        Self::build(n, Some(first))
    }

    fn build(n: usize, first: Option<Label>) -> Self {
        assert!(n <= MAX_GEN_N, "n = {n} exceeds {MAX_GEN_N}");
        let done = matches!(first, Some(f) if f == 0 || f as usize > n);
        Self {
            n,
            first,
            word: Vec::with_capacity(n),
            used: 0,
            next_try: vec![0; n + 1],
            started: false,
            done,
        }
    }

    fn range_at(&self, depth: usize) -> (Label, Label) {
        let n = self.n as Label;
        match depth {
            0 => self.first.map_or((1, n), |f| (f, f)),
            d if d % 2 == 1 => (1, self.word[d - 1].saturating_sub(1)),
            d => (self.word[d - 1] + 1, n),
        }
    }

    fn viable(&self, depth: usize, v: Label) -> bool {
        if self.used & (1 << v) != 0 {
            return false;
        }
        if depth + 1 == self.n {
            return true;
        }
        let full = ((1u64 << self.n) - 1) << 1;
        let free = full & !self.used & !(1 << v);
        if (depth + 1) % 2 == 1 {
            free & ((1u64 << v) - 1) != 0
        } else {
            free >> (v + 1) != 0
        }
    }

    /// Advances to the next word and lends it out.
    pub fn next_word(&mut self) -> Option<&[Label]> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(&[]);
        }
        if self.started {
            let v = self.word.pop().unwrap();
            self.used &= !(1 << v);
        } else {
            self.started = true;
            self.next_try[0] = self.range_at(0).0;
        }
        loop {
            let depth = self.word.len();
            let (_, hi) = self.range_at(depth);
            let found = (self.next_try[depth]..=hi).find(|&v| self.viable(depth, v));
            match found {
                Some(v) => {
                    self.next_try[depth] = v + 1;
                    self.word.push(v);
                    self.used |= 1 << v;
                    if self.word.len() == self.n {
                        return Some(&self.word);
                    }
                    self.next_try[depth + 1] = self.range_at(depth + 1).0;
                }
                None => {
                    let Some(v) = self.word.pop() else {
                        self.done = true;
                        return None;
                    };
                    self.used &= !(1 << v);
                }
            }
        }
    }
}

impl Iterator for AlternatingWords {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.next_word()
            .map(|w| Permutation::standard_unchecked(w.to_vec()))
    }
}

/// Alternating permutations of `1..=n`, lexicographically.
pub fn gen_alternating(n: usize) -> AlternatingWords {
    AlternatingWords::new(n)
}

/// Meta-oracle: all `n!` words of `1..=n` filtered by the definition.
pub fn alternating_by_filter(n: usize) -> Vec<Permutation> {
    (1..=n as Label)
        .permutations(n)
        .filter(|w| is_alternating(w))
        .map(Permutation::standard_unchecked)
        .collect()
}

/// All cycle up-down permutations of `1..=2k` whose cycles are all even,
/// built cycle by cycle: each new cycle opens at the smallest unused label
/// and grows along the up-down pattern.
pub fn gen_cycle_updown_even(k: usize) -> std::vec::IntoIter<CyclePermutation> {
    fn grow(
        n: Label,
        used: &mut Vec<bool>,
        done: &mut Vec<Vec<Label>>,
        cur: &mut Vec<Label>,
        out: &mut Vec<CyclePermutation>,
    ) {
        if cur.is_empty() {
            match (1..=n).find(|&l| !used[l as usize]) {
                None => out.push(CyclePermutation::from_cycles(done.clone()).unwrap()),
                Some(start) => {
                    used[start as usize] = true;
                    cur.push(start);
                    grow(n, used, done, cur, out);
                    cur.pop();
                    used[start as usize] = false;
                }
            }
            return;
        }
        if cur.len().is_multiple_of(2) {
            done.push(std::mem::take(cur));
            grow(n, used, done, cur, out);
            *cur = done.pop().unwrap();
        }
        let (start, last) = (cur[0], *cur.last().unwrap());
        let ascent = cur.len() % 2 == 1;
        for x in start + 1..=n {
            if used[x as usize] || (ascent != (x > last)) {
                continue;
            }
            used[x as usize] = true;
            cur.push(x);
            grow(n, used, done, cur, out);
            cur.pop();
            used[x as usize] = false;
        }
    }
    let n = 2 * k as Label;
    let mut out = Vec::new();
    grow(
        n,
        &mut vec![false; n as usize + 1],
        &mut Vec::new(),
        &mut Vec::new(),
        &mut out,
    );
    out.into_iter()
}

/// Meta-oracle: every perfect matching of `labels`, by pairing the smallest
/// free label with each other free label in turn.
pub fn all_matchings(labels: &[Label]) -> Vec<Matching> {
    fn rec(
        free: &[Label],
        arcs: &mut Vec<(Label, Label)>,
        labels: &[Label],
        out: &mut Vec<Matching>,
    ) {
        let Some((&first, rest)) = free.split_first() else {
            out.push(Matching::new(labels.to_vec(), arcs.clone()).unwrap());
            return;
        };
        for (i, &other) in rest.iter().enumerate() {
            let remaining: Vec<Label> = rest
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            arcs.push((first, other));
            rec(&remaining, arcs, labels, out);
            arcs.pop();
        }
    }
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    if sorted.len().is_multiple_of(2) {
        rec(&sorted, &mut Vec::new(), &sorted, &mut out);
    }
    out
}

/// Alternating permutations of `1..=n` grouped by peak set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub entries: BTreeMap<PeakSet, u128>,
}

impl Census {
    pub fn total(&self) -> u128 {
        self.entries.values().sum()
    }

    pub fn get(&self, peaks: &PeakSet) -> u128 {
        self.entries.get(peaks).copied().unwrap_or(0)
    }

    fn merge(mut self, other: Census) -> Census {
        for (k, v) in other.entries {
            *self.entries.entry(k).or_insert(0) += v;
        }
        self
    }
}

#[derive(Serialize, Deserialize)]
struct CensusEntry {
    peaks: PeakSet,
    count: u128,
}

#[derive(Serialize, Deserialize)]
struct CensusJson {
    n: usize,
    entries: Vec<CensusEntry>,
}

impl Serialize for Census {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CensusJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(peaks, &count)| CensusEntry {
                    peaks: peaks.clone(),
                    count,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Census {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = CensusJson::deserialize(d)?;
        let mut entries = BTreeMap::new();
        for e in raw.entries {
            if entries.insert(e.peaks.clone(), e.count).is_some() {
                return Err(serde::de::Error::custom(format!(
                    "duplicate census entry {}",
                    e.peaks
                )));
            }
        }
        Ok(Census { n: raw.n, entries })
    }
}

fn census_shard(n: usize, first: Option<Label>) -> Census {
    let mut gen = match first {
        Some(f) => AlternatingWords::starting_with(n, f),
        None => AlternatingWords::new(n),
    };
    let mut counts: HashMap<Vec<Label>, u128> = HashMap::new();
    while let Some(w) = gen.next_word() {
        *counts.entry(peak_values_of(w)).or_insert(0) += 1;
    }
    Census {
        n,
        entries: counts
            .into_iter()
            .map(|(k, v)| (PeakSet::new_unchecked(k), v))
            .collect(),
    }
}

/// Groups the alternating permutations of `1..=n` by peak set. The search
/// tree is sharded by first letter across the current rayon pool.
pub fn peak_set_census(n: usize) -> Census {
    if n == 0 {
        return census_shard(0, None);
    }
    (1..=n as Label)
        .into_par_iter()
        .map(|first| census_shard(n, Some(first)))
        .reduce(
            || Census {
                n,
                entries: BTreeMap::new(),
            },
            Census::merge,
        )
}

/// A count that disagrees between two routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub peaks: PeakSet,
    pub expected: u128,
    pub found: u128,
    pub what: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub peaks: PeakSet,
    pub formula: u128,
    pub census: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub rows: Vec<TheoremRow>,
    pub mismatches: Vec<Mismatch>,
    pub census_total: u128,
    pub euler: u128,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.census_total == self.euler
    }
}

/// Closed-form peak-set counts against the census, set by set.
pub fn verify_theorem(n: usize) -> Result<TheoremReport> {
    let census = peak_set_census(n);
    verify_theorem_against(&census)
}

pub fn verify_theorem_against(census: &Census) -> Result<TheoremReport> {
    let n = census.n;
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut seen = HashSet::new();
    for peaks in candidate_peak_sets(n) {
        let formula = peak_set_count(&peaks, n)?.formula_count;
        let found = census.get(&peaks);
        if formula != found {
            mismatches.push(Mismatch {
                peaks: peaks.clone(),
                expected: formula,
                found,
                what: "census",
            });
        }
        seen.insert(peaks.clone());
        rows.push(TheoremRow {
            peaks,
            formula,
            census: found,
        });
    }
    for (peaks, &count) in &census.entries {
        if !seen.contains(peaks) {
            mismatches.push(Mismatch {
                peaks: peaks.clone(),
                expected: 0,
                found: count,
                what: "census entry outside the candidate sets",
            });
        }
    }
    Ok(TheoremReport {
        n,
        rows,
        mismatches,
        census_total: census.total(),
        euler: euler_number(n)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaRow {
    pub closers: PeakSet,
    pub formula: u128,
    pub enumerated: u128,
    pub brute_force: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub k: usize,
    pub rows: Vec<LemmaRow>,
    pub mismatches: Vec<Mismatch>,
    pub total: u128,
    pub double_factorial: u128,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.total == self.double_factorial
    }
}

/// Matchings of `1..=2k` by closer set, over every `k`-subset of `1..=2k`:
/// closed form, closer-driven enumeration and unrestricted brute force.
pub fn verify_lemma(k: usize) -> Result<LemmaReport> {
    let labels: Vec<Label> = (1..=2 * k as Label).collect();
    let mut brute: HashMap<PeakSet, u128> = HashMap::new();
    for m in all_matchings(&labels) {
        *brute.entry(m.closer_set()).or_insert(0) += 1;
    }
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut total = 0;
    for subset in labels.iter().copied().combinations(k) {
        let closers = PeakSet::new_unchecked(subset);
        let formula = count_matchings_with_closers(&closers, k)?;
        let enumerated = enumerate_matchings_with_closers(&closers, &labels)?
            .inspect(|m| debug_assert_eq!(m.closer_set(), closers))
            .count() as u128;
        let brute_force = brute.get(&closers).copied().unwrap_or(0);
        for (found, what) in [(enumerated, "enumeration"), (brute_force, "brute force")] {
            if found != formula {
                mismatches.push(Mismatch {
                    peaks: closers.clone(),
                    expected: formula,
                    found,
                    what,
                });
            }
        }
        total += enumerated;
        rows.push(LemmaRow {
            closers,
            formula,
            enumerated,
            brute_force,
        });
    }
    Ok(LemmaReport {
        k,
        rows,
        mismatches,
        total,
        double_factorial: count_all_matchings(k)?,
    })
}

/// One way the bijection chain failed on a concrete input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BijectionFailure {
    Encode {
        perm: String,
        error: String,
    },
    Decode {
        perm: String,
        error: String,
    },
    CloserSetDiffers {
        perm: String,
        peaks: PeakSet,
        closers: PeakSet,
    },
    RoundtripDiffers {
        perm: String,
        decoded: String,
    },
    NotSingleCycle {
        perm: String,
        circles: usize,
    },
    Collision {
        perm: String,
        closers: PeakSet,
    },
    ImageDiffers {
        closers: PeakSet,
        image: usize,
        enumerated: usize,
        formula: u128,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageRow {
    pub closers: PeakSet,
    pub image: usize,
    pub enumerated: usize,
    pub formula: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub roundtrips: usize,
    pub images: Vec<ImageRow>,
    pub failures: Vec<BijectionFailure>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Encodes every alternating permutation of `1..=n`, decodes it back, and
/// compares each per-closer-set image with the matching-pair enumeration.
pub fn verify_bijections(n: usize) -> Result<BijectionReport> {
    let odd = n % 2 == 1;
    let mut failures = Vec::new();
    let mut images: HashMap<PeakSet, HashSet<MatchingPair>> = HashMap::new();
    let mut roundtrips = 0;
    for p in gen_alternating(n) {
        let encoded = if odd { odd_encode(&p) } else { even_encode(&p) };
        let pair = match encoded {
            Ok(pair) => pair,
            Err(e) => {
                failures.push(BijectionFailure::Encode {
                    perm: p.to_string(),
                    error: e.to_string(),
                });
                continue;
            }
        };
        let peaks = p.peak_values()?;
        let closers = pair.closer_set();
        if closers != peaks {
            failures.push(BijectionFailure::CloserSetDiffers {
                perm: p.to_string(),
                peaks: peaks.clone(),
                closers: closers.clone(),
            });
        }
        if odd {
            let circles = pair.union_cycle_count();
            if circles != 1 {
                failures.push(BijectionFailure::NotSingleCycle {
                    perm: p.to_string(),
                    circles,
                });
            }
        }
        match if odd {
            odd_decode(&pair)
        } else {
            even_decode(&pair)
        } {
            Ok(back) if back == p => roundtrips += 1,
            Ok(back) => failures.push(BijectionFailure::RoundtripDiffers {
                perm: p.to_string(),
                decoded: back.to_string(),
            }),
            Err(e) => failures.push(BijectionFailure::Decode {
                perm: p.to_string(),
                error: e.to_string(),
            }),
        }
        if !images.entry(closers.clone()).or_default().insert(pair) {
            failures.push(BijectionFailure::Collision {
                perm: p.to_string(),
                closers,
            });
        }
    }

    let labels: Vec<Label> = if odd {
        (0..=n as Label).collect()
    } else {
        (1..=n as Label).collect()
    };
    let mut rows = Vec::new();
    let mut candidates: Vec<PeakSet> = candidate_peak_sets(n).collect();
    // an image under a non-candidate set is already a closer-set failure,
    // but it still has to show up as an image mismatch
    for key in images.keys() {
        if !candidates.contains(key) {
            candidates.push(key.clone());
        }
    }
    for closers in candidates {
        let formula = peak_set_count(&closers, n).map_or(0, |r| r.formula_count);
        let enumerated: HashSet<MatchingPair> = if odd {
            enumerate_single_cycle_pairs(&closers, &labels)?.collect()
        } else {
            enumerate_independent_pairs(&closers, &labels)?.collect()
        };
        let empty = HashSet::new();
        let image = images.get(&closers).unwrap_or(&empty);
        if *image != enumerated || enumerated.len() as u128 != formula {
            failures.push(BijectionFailure::ImageDiffers {
                closers: closers.clone(),
                image: image.len(),
                enumerated: enumerated.len(),
                formula,
            });
        }
        rows.push(ImageRow {
            closers,
            image: image.len(),
            enumerated: enumerated.len(),
            formula,
        });
    }
    Ok(BijectionReport {
        n,
        roundtrips,
        images: rows,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleUpDownReport {
    pub k: usize,
    pub up_down_words: usize,
    pub generated: usize,
    pub euler: u128,
    pub failures: Vec<String>,
}

impl CycleUpDownReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.generated as u128 == self.euler
            && self.up_down_words as u128 == self.euler
    }
}

/// Checks that `tau` maps the up-down words of `1..=2k` onto exactly the
/// cycle up-down permutations with even cycles found by direct generation.
pub fn verify_cycle_updown(k: usize) -> Result<CycleUpDownReport> {
    let mut failures = Vec::new();
    let mut image = HashSet::new();
    let mut up_down_words = 0;
    for p in gen_alternating(2 * k) {
        let q = p.reverse();
        up_down_words += 1;
        let cp = match tau(&q) {
            Ok(cp) => cp,
            Err(e) => {
                failures.push(format!("tau({q}): {e}"));
                continue;
            }
        };
        if !cp.is_cycle_up_down() || !cp.all_cycles_even() {
            failures.push(format!(
                "tau({q}) = {cp} is not cycle up-down with even cycles"
            ));
        }
        match tau_inverse(&cp) {
            Ok(back) if back == q => {}
            Ok(back) => failures.push(format!("tau_inverse({cp}) = {back}, expected {q}")),
            Err(e) => failures.push(format!("tau_inverse({cp}): {e}")),
        }
        if !image.insert(cp.clone()) {
            failures.push(format!("tau is not injective at {cp}"));
        }
    }
    let generated: HashSet<CyclePermutation> = gen_cycle_updown_even(k).collect();
    if generated != image {
        failures.push(format!(
            "image of tau has {} elements, direct generation {}; sets differ",
            image.len(),
            generated.len()
        ));
    }
    Ok(CycleUpDownReport {
        k,
        up_down_words,
        generated: generated.len(),
        euler: euler_number(2 * k)?,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddPairRow {
    pub closers: PeakSet,
    pub above: u128,
    pub below: u128,
    pub filtered: u128,
    pub constructed: u128,
    pub formula: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddPairReport {
    pub n: usize,
    pub rows: Vec<OddPairRow>,
    pub mismatches: Vec<Mismatch>,
}

impl OddPairReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For odd `n`, compares per candidate closer set on `0..=n`: the product of
/// the above/below counts, the independent pairs filtered to a single
/// circle, the constructive single-circle enumeration, and the closed form.
pub fn verify_odd_factorization(n: usize) -> Result<OddPairReport> {
    assert!(n % 2 == 1, "odd factorization needs odd n");
    let labels: Vec<Label> = (0..=n as Label).collect();
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for closers in candidate_peak_sets(n) {
        let above = count_odd_above(&closers)?;
        let below = count_odd_below(&closers)?;
        let filtered: HashSet<MatchingPair> = enumerate_independent_pairs(&closers, &labels)?
            .filter(|p| p.union_cycle_count() == 1)
            .collect();
        let constructed: Vec<MatchingPair> =
            enumerate_single_cycle_pairs(&closers, &labels)?.collect();
        let constructed_set: HashSet<MatchingPair> = constructed.iter().cloned().collect();
        let formula = peak_set_count(&closers, n)?.formula_count;
        let product = above * below;
        let mut check = |expected: u128, found: u128, what| {
            if expected != found {
                mismatches.push(Mismatch {
                    peaks: closers.clone(),
                    expected,
                    found,
                    what,
                });
            }
        };
        check(formula, product, "above x below");
        check(
            formula,
            filtered.len() as u128,
            "filtered independent pairs",
        );
        check(
            formula,
            constructed.len() as u128,
            "constructive enumeration",
        );
        if constructed_set.len() != constructed.len() || constructed_set != filtered {
            check(
                filtered.len() as u128,
                constructed_set.len() as u128,
                "constructive set differs from filtered set",
            );
        }
        rows.push(OddPairRow {
            closers,
            above,
            below,
            filtered: filtered.len() as u128,
            constructed: constructed.len() as u128,
            formula,
        });
    }
    Ok(OddPairReport {
        n,
        rows,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_generators() {
        let words: Vec<String> = gen_alternating(3).map(|p| p.to_string()).collect();
        assert_eq!(words, ["2 1 3", "3 1 2"]);
        assert_eq!(gen_alternating(1).count(), 1);
        assert_eq!(gen_alternating(0).count(), 1);
        assert_eq!(gen_alternating(8).count(), 1385);
    }

    #[test]
    fn shards_partition_the_stream() {
        let total: usize = (1..=7)
            .map(|f| AlternatingWords::starting_with(7, f).count())
            .sum();
        assert_eq!(total, 272);
        assert_eq!(AlternatingWords::starting_with(7, 1).count(), 0);
        assert_eq!(AlternatingWords::starting_with(7, 9).count(), 0);
    }

    #[test]
    fn pruned_generator_matches_filter() {
        for n in 0..=7 {
            let pruned: Vec<_> = gen_alternating(n).collect();
            assert_eq!(pruned, alternating_by_filter(n), "n = {n}");
        }
    }

    #[test]
    fn cycle_updown_generator() {
        let v: Vec<_> = gen_cycle_updown_even(1).collect();
        assert_eq!(v, ["(1,2)".parse::<CyclePermutation>().unwrap()]);
        assert_eq!(gen_cycle_updown_even(2).count(), 5);
        assert_eq!(gen_cycle_updown_even(4).count(), 1385);
    }

    #[test]
    fn brute_force_matchings() {
        assert_eq!(all_matchings(&[1, 2, 3, 4, 5, 6]).len(), 15);
        assert_eq!(all_matchings(&(1..=8).collect::<Vec<_>>()).len(), 105);
        assert!(all_matchings(&[1, 2, 3]).is_empty());
    }

    #[test]
    fn census_examples() {
        let c = peak_set_census(4);
        let show: Vec<(String, u128)> =
            c.entries.iter().map(|(k, &v)| (k.to_string(), v)).collect();
        assert_eq!(show, [("{2,4}".to_string(), 1), ("{3,4}".to_string(), 4)]);
        assert_eq!(peak_set_census(3).entries.len(), 1);
        assert_eq!(peak_set_census(3).total(), 2);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"n":4,"entries":[{"peaks":[2,4],"count":1},{"peaks":[3,4],"count":4}]}"#
        );
    }

    #[test]
    fn reports_small() {
        let r = verify_theorem(5).unwrap();
        assert!(r.passed());
        assert_eq!(r.census_total, 16);
        assert_eq!(r.rows[0].formula, 0);
        assert!(verify_lemma(1).unwrap().passed());
        let l = verify_lemma(2).unwrap();
        assert!(l.passed());
        assert_eq!(l.total, 3);
        let b = verify_bijections(1).unwrap();
        assert!(b.passed());
        assert_eq!(b.roundtrips, 1);
        assert!(verify_cycle_updown(2).unwrap().passed());
        assert!(verify_odd_factorization(5).unwrap().passed());
    }

    #[test]
    fn theorem_report_flags_a_bad_census() {
        let mut census = peak_set_census(4);
        *census.entries.values_mut().next().unwrap() += 1;
        let r = verify_theorem_against(&census).unwrap();
        assert!(!r.passed());
        assert_eq!(r.mismatches.len(), 1);
    }
}
