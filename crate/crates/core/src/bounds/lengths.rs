//! Realizable lengths of projective `2^r`-divisible codes.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use crate::bounds::lp::exclude_length;
use crate::error::{Error, Result};

/// Largest integer not a nonnegative combination of coprime `a` and `b`.
pub fn frobenius(a: u64, b: u64) -> Result<i64> {
    if a == 0 || b == 0 || a.gcd(&b) != 1 {
        return Err(Error::InvalidParameter(format!("{a} and {b} are not coprime")));
    }
    Ok((a as i64 - 1) * (b as i64 - 1) - 1)
}

/// Frobenius number of the simplex and affine lengths `2^(r+1) - 1`, `2^(r+1)`.
pub fn eq1_bound(r: u32) -> Result<i64> {
    frobenius((1 << (r + 1)) - 1, 1 << (r + 1))
}

/// `2^(2r) - 2^(r-1) - 1`.
pub fn theorem3_bound(r: u32) -> Result<i64> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    Ok((1i64 << (2 * r)) - (1i64 << (r - 1)) - 1)
}

/// Whether a projective 2-divisible `[n,k]` code exists: `k+1 <= n <= 2^k-1`
/// and `n` is neither `2^k-3` nor `2^k-2`.
pub fn pd21_predicate(n: u64, k: u32) -> bool {
    if n == 0 || k == 0 || k >= 63 {
        return false;
    }
    let top = (1u64 << k) - 1;
    (k as u64) < n && n <= top && n != top - 2 && n != top - 1
}

/// Three-way split of `1..=bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSet {
    pub r: u32,
    pub bound: usize,
    /// realizable lengths below `threshold`
    pub realizable: BTreeSet<usize>,
    /// every length `>= threshold` is realizable
    pub threshold: Option<usize>,
    pub excluded: BTreeSet<usize>,
    pub unknown: BTreeSet<usize>,
}

impl LengthSet {
    pub fn is_realizable(&self, n: usize) -> bool {
        self.realizable.contains(&n) || self.threshold.is_some_and(|t| n >= t)
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, s: &BTreeSet<usize>) -> fmt::Result {
    // collapse runs
    let v: Vec<usize> = s.iter().copied().collect();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j + 1 < v.len() && v[j + 1] == v[j] + 1 {
            j += 1;
        }
        parts.push(if j > i { format!("{}..{}", v[i], v[j]) } else { v[i].to_string() });
        i = j + 1;
    }
    write!(f, "{{{}}}", parts.join(", "))
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "realizable: ")?;
        fmt_set(f, &self.realizable)?;
        if let Some(t) = self.threshold {
            write!(f, " and all n >= {t}")?;
        }
        write!(f, "\nexcluded:   ")?;
        fmt_set(f, &self.excluded)?;
        write!(f, "\nunknown:    ")?;
        fmt_set(f, &self.unknown)?;
        writeln!(f)
    }
}

/// Additive closure of `seeds` split against the moment-LP exclusions on
/// `1..=theorem3_bound(r) + 2^(r+1)`. A length that is both constructed and
/// excluded is reported as an error.
pub fn length_closure(r: u32, seeds: &[usize]) -> Result<LengthSet> {
    let bound = (theorem3_bound(r)? + (1 << (r + 1))) as usize;
    let gens: BTreeSet<usize> = seeds.iter().copied().filter(|&s| s > 0).collect();
    let smallest = gens.iter().next().copied();
    // reach up to bound plus one full period of the smallest generator
    let limit = bound + smallest.unwrap_or(0);
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for n in 1..=limit {
        reach[n] = gens.iter().any(|&g| g <= n && reach[n - g]);
    }
    let threshold = smallest.and_then(|s| {
        // first t with a full run of s reachable lengths ending inside the table
        (1..=bound).find(|&t| t + s <= limit + 1 && (t..t + s).all(|n| reach[n]))
    });

    let candidates: Vec<usize> = (1..=bound).filter(|&n| !reach[n]).collect();
    let delta = 1usize << r;
    let excluded_list: Vec<usize> = candidates
        .par_iter()
        .copied()
        .filter(|&n| exclude_length(n, delta))
        .collect();
    let excluded: BTreeSet<usize> = excluded_list.into_iter().collect();
    // consistency: no constructed length may be excluded
    for n in 1..=bound {
        if reach[n] && gens.contains(&n) && exclude_length(n, delta) {
            return Err(Error::LengthContradiction { n: n as u64 });
        }
    }
    let below = threshold.unwrap_or(bound + 1);
    let realizable: BTreeSet<usize> = (1..below.min(bound + 1)).filter(|&n| reach[n]).collect();
    let unknown: BTreeSet<usize> = (1..=bound)
        .filter(|&n| !reach[n] && !excluded.contains(&n))
        .collect();
    Ok(LengthSet {
        r,
        bound,
        realizable,
        threshold,
        excluded,
        unknown,
    })
}
