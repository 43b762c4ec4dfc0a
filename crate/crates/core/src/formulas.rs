//! Closed-form counts of alternating permutations by peak set, and Euler
//! numbers.
//!
//! For `n = 2k` and peak set `i_1 < ... < i_k = 2k`:
//!
//! ```text
//! s_k = prod_{j<k} (i_j - 2j + 1)^2
//! ```
//!
//! For `n = 2k+1` and peak set `i_1 < ... < i_{k+1} = 2k+1`:
//!
//! ```text
//! t_k = prod_{j<=k} (i_j - 2j + 2)(i_j - 2j + 1)
//! ```
//!
//! Both are products of an "above" and a "below" factor per index `j`, and a
//! peak set with any non-positive factor has no permutation at all.

use std::env;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matchings::clamped_product;
use crate::perm::PeakSet;
use crate::Label;

/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "PEAKMATCH_MAX_N";

/// Largest `n` accepted by default. `E_n` first overflows `u128` a little
/// past 30, and checked arithmetic still guards any raised cap.
pub const DEFAULT_MAX_N: usize = 30;

/// Upper bound on `n` for Euler-number tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl Limits {
    /// Reads [`MAX_N_ENV`], falling back to the default when it is unset.
    pub fn from_env() -> Result<Self> {
        match env::var(MAX_N_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_n| Self { max_n })
                .map_err(|e| Error::Parse(format!("{MAX_N_ENV}={v:?}: {e}"))),
            Err(_) => Ok(Self::default()),
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded { n, cap: self.max_n });
        }
        Ok(())
    }
}

/// The closed-form count for one peak set, with the per-index factors kept
/// for diagnostics.
///
/// Factors come in (above, below) pairs per index `j`. `formula_count` is
/// their product when every factor is positive, and 0 otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub peak_set: PeakSet,
    pub formula_count: u128,
    pub factors: Vec<i64>,
}

fn check_peak_set(peaks: &PeakSet, len: usize, n: usize) -> Result<()> {
    if peaks.len() != len {
        return Err(Error::MalformedPeakSet(format!(
            "{peaks} has {} entries; n = {n} needs {len}",
            peaks.len()
        )));
    }
    if n > 0 && peaks.max() != Some(n as Label) {
        return Err(Error::MalformedPeakSet(format!(
            "the largest peak of {peaks} must be n = {n}"
        )));
    }
    if n >= 2 && peaks.as_slice()[0] < 2 {
        return Err(Error::MalformedPeakSet(format!(
            "{peaks} contains 1, which is never a peak for n >= 2"
        )));
    }
    Ok(())
}

/// Alternating permutations of `1..=2k` with peak set `peaks`.
pub fn s_count(peaks: &PeakSet, k: usize) -> Result<CountReport> {
    check_peak_set(peaks, k, 2 * k)?;
    let factors = peaks
        .iter()
        .take(k.saturating_sub(1))
        .enumerate()
        .flat_map(|(j, i)| {
            let f = i as i64 - 2 * (j as i64 + 1) + 1;
            [f, f]
        })
        .collect_vec();
    Ok(CountReport {
        peak_set: peaks.clone(),
        formula_count: clamped_product(&factors)?,
        factors,
    })
}

/// Alternating permutations of `1..=2k+1` with peak set `peaks`.
pub fn t_count(peaks: &PeakSet, k: usize) -> Result<CountReport> {
    check_peak_set(peaks, k + 1, 2 * k + 1)?;
    let factors = peaks
        .iter()
        .take(k)
        .enumerate()
        .flat_map(|(j, i)| {
            let base = i as i64 - 2 * (j as i64 + 1);
            [base + 2, base + 1]
        })
        .collect_vec();
    Ok(CountReport {
        peak_set: peaks.clone(),
        formula_count: clamped_product(&factors)?,
        factors,
    })
}

/// Dispatches to [`s_count`] or [`t_count`] on the parity of `n`.
pub fn peak_set_count(peaks: &PeakSet, n: usize) -> Result<CountReport> {
    if n.is_multiple_of(2) {
        s_count(peaks, n / 2)
    } else {
        t_count(peaks, n / 2)
    }
}

/// `E_n` under the default cap.
pub fn euler_number(n: usize) -> Result<u128> {
    euler_number_with(n, Limits::default())
}

pub fn euler_number_with(n: usize, limits: Limits) -> Result<u128> {
    Ok(*euler_numbers_with(n, limits)?.last().unwrap())
}

/// `E_0..=E_max_n`, computed with the Entringer (boustrophedon) triangle:
/// `T(m, 0) = 0` for `m > 0`, `T(m, j) = T(m, j-1) + T(m-1, m-j)`, and
/// `E_m = T(m, m)`.
pub fn euler_numbers_with(max_n: usize, limits: Limits) -> Result<Vec<u128>> {
    limits.check(max_n)?;
    let mut out = Vec::with_capacity(max_n + 1);
    let mut row: Vec<u128> = vec![1];
    out.push(1);
    for m in 1..=max_n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(0u128);
        for j in 1..=m {
            let v = next[j - 1]
                .checked_add(row[m - j])
                .ok_or(Error::Overflow("Euler number"))?;
            next.push(v);
        }
        out.push(next[m]);
        row = next;
    }
    Ok(out)
}

/// Every strictly increasing sequence of length `ceil(n/2)` that ends at `n`
/// and otherwise draws from `2..n`, in lexicographic order. Infeasible sets
/// (formula count 0) are included.
pub fn candidate_peak_sets(n: usize) -> impl Iterator<Item = PeakSet> {
    let len = n.div_ceil(2);
    let inner = len.saturating_sub(1);
    let (pool, tail): (Vec<Label>, Option<Label>) = if n == 0 {
        (Vec::new(), None)
    } else {
        ((2..n as Label).collect(), Some(n as Label))
    };
    pool.into_iter().combinations(inner).map(move |mut c| {
        c.extend(tail);
        PeakSet::new_unchecked(c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Label]) -> PeakSet {
        PeakSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_count(&set(&[2, 4]), 2).unwrap().formula_count, 1);
        assert_eq!(s_count(&set(&[3, 4]), 2).unwrap().formula_count, 4);
        let r = s_count(&set(&[4, 5, 7, 8]), 4).unwrap();
        assert_eq!(r.formula_count, 144);
        assert_eq!(r.factors, [3, 3, 2, 2, 2, 2]);
        assert_eq!(s_count(&set(&[2]), 1).unwrap().formula_count, 1);
        assert_eq!(s_count(&set(&[]), 0).unwrap().formula_count, 1);
    }

    #[test]
    fn t_examples() {
        assert_eq!(t_count(&set(&[2, 3]), 1).unwrap().formula_count, 2);
        let r = t_count(&set(&[2, 3, 5]), 2).unwrap();
        assert_eq!(r.formula_count, 0);
        assert_eq!(r.factors, [2, 1, 1, 0]);
        assert_eq!(t_count(&set(&[2, 4, 5]), 2).unwrap().formula_count, 4);
        assert_eq!(t_count(&set(&[3, 4, 5]), 2).unwrap().formula_count, 12);
        let r = t_count(&set(&[4, 5, 7, 8, 9]), 4).unwrap();
        assert_eq!(r.formula_count, 864);
        assert_eq!(r.factors, [4, 3, 3, 2, 3, 2, 2, 1]);
        assert_eq!(t_count(&set(&[1]), 0).unwrap().formula_count, 1);
    }

    #[test]
    fn malformed_peak_sets() {
        assert!(s_count(&set(&[2, 3]), 2).is_err());
        assert!(s_count(&set(&[4]), 2).is_err());
        assert!(t_count(&set(&[2, 4]), 1).is_err());
        assert!(s_count(&set(&[1, 4]), 2).is_err());
    }

    #[test]
    fn euler_numbers() {
        let e = euler_numbers_with(10, Limits::default()).unwrap();
        assert_eq!(e, [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]);
        assert_eq!(euler_number(12), Ok(2702765));
        assert_eq!(euler_number(31), Err(Error::CapExceeded { n: 31, cap: 30 }));
        assert_eq!(
            euler_number_with(200, Limits { max_n: 200 }),
            Err(Error::Overflow("Euler number"))
        );
    }

    #[test]
    fn candidates() {
        let show = |n| candidate_peak_sets(n).map(|p| p.to_string()).collect_vec();
        assert_eq!(show(4), ["{2,4}", "{3,4}"]);
        assert_eq!(show(5), ["{2,3,5}", "{2,4,5}", "{3,4,5}"]);
        assert_eq!(show(2), ["{2}"]);
        assert_eq!(show(1), ["{1}"]);
        assert_eq!(candidate_peak_sets(8).count(), 20);
    }
}
