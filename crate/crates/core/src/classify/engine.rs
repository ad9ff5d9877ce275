//! Exhaustive isomorph-free classification.
//!
//! Two engines share the same pattern: expand a frontier of class
//! representatives one dimension at a time, key every child, keep the first
//! child per key. Parents are processed in key order and ties are broken by
//! `(parent index, child index)`, so the output does not depend on the
//! number of workers.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::classify::key::{canonical_columns, canonical_key, CanonicalKey};
use crate::codes::{weight_distribution, LinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::gf2::{kernel_basis, reduced_basis, walsh_hadamard, walsh_hadamard_wrapping, BitMatrix};

/// Longest length for the 2-divisible descent.
pub const TWO_DIVISIBLE_MAX_N: usize = 14;
/// Longest lengths for the augmentation engine, by divisor.
pub const DOUBLY_EVEN_MAX_N: usize = 22;
pub const TRIPLY_EVEN_MAX_N: usize = 32;

/// One equivalence class produced by an engine.
#[derive(Clone, Debug)]
pub struct ClassifiedCode {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub key: CanonicalKey,
    pub code: LinearCode,
    pub weights: WeightDistribution,
    pub projective: bool,
    pub origin: String,
}

/// Class counts indexed by `n` then `k`.
pub type CountTable = BTreeMap<usize, BTreeMap<usize, usize>>;

pub fn count_table<'a, I: IntoIterator<Item = &'a ClassifiedCode>>(classes: I, projective_only: bool) -> CountTable {
    let mut t = CountTable::new();
    for c in classes {
        if projective_only && !c.projective {
            continue;
        }
        *t.entry(c.n).or_default().entry(c.k).or_default() += 1;
    }
    t
}

/// Runs `f` on a pool of `workers` threads (0 = rayon default).
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Keeps the first child per key, ordered by `(parent, index)`.
fn merge_children<T: Send>(per_parent: Vec<Vec<(CanonicalKey, usize, T)>>) -> Vec<(CanonicalKey, T)> {
    let mut best: HashMap<CanonicalKey, ((usize, usize), T)> = HashMap::new();
    for (p, children) in per_parent.into_iter().enumerate() {
        for (key, i, child) in children {
            match best.get(&key) {
                Some((tag, _)) if *tag <= (p, i) => {}
                _ => {
                    best.insert(key, ((p, i), child));
                }
            }
        }
    }
    let mut out: Vec<(CanonicalKey, T)> = best.into_iter().map(|(k, (_, c))| (k, c)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn dedup_local<T>(children: Vec<(CanonicalKey, usize, T)>) -> Vec<(CanonicalKey, usize, T)> {
    let mut seen = std::collections::HashSet::new();
    children
        .into_iter()
        .filter(|(k, _, _)| seen.insert(k.clone()))
        .collect()
}

// ---------------------------------------------------------------------------
// 2-divisible descent

/// Projective 2-divisible codes of length `n`, all dimensions, by descent
/// from the even-weight code. A codimension-1 subcode is the projection of
/// the point set from a point `q`; it stays projective exactly when `q` is
/// neither a point nor the sum of two points.
pub fn classify_2divisible_length(n: usize) -> Result<Vec<ClassifiedCode>> {
    if !(3..=TWO_DIVISIBLE_MAX_N).contains(&n) {
        return Err(Error::BudgetExceeded {
            what: format!("2-divisible classification at n = {n}"),
            limit: TWO_DIVISIBLE_MAX_N,
        });
    }
    // even-weight code: the projective basis of F_2^(n-1)
    let k0 = n - 1;
    let mut start: Vec<u64> = (0..k0).map(|i| 1u64 << i).collect();
    start.push((1u64 << k0) - 1);
    let key0 = canonical_key(&LinearCode::from_columns(k0, &start)?)?;
    let mut frontier: Vec<(CanonicalKey, Vec<u64>)> = vec![(key0, start)];
    let mut k = k0;
    let mut out = Vec::new();
    while !frontier.is_empty() {
        for (key, pts) in &frontier {
            out.push(record(n, k, 2, key.clone(), pts, "descent")?);
        }
        if k == 1 {
            break;
        }
        let per_parent: Vec<Vec<(CanonicalKey, usize, Vec<u64>)>> = frontier
            .par_iter()
            .map(|(_, pts)| -> Result<Vec<_>> {
                let mut blocked = vec![false; 1usize << k];
                for (i, &a) in pts.iter().enumerate() {
                    blocked[a as usize] = true;
                    for &b in &pts[i + 1..] {
                        blocked[(a ^ b) as usize] = true;
                    }
                }
                let mut children = Vec::new();
                for q in 1u64..(1u64 << k) {
                    if blocked[q as usize] {
                        continue;
                    }
                    let child = project(pts, q);
                    let key = canonical_key(&LinearCode::from_columns(k - 1, &child)?)?;
                    children.push((key, q as usize, child));
                }
                Ok(dedup_local(children))
            })
            .collect::<Result<_>>()?;
        frontier = merge_children(per_parent);
        k -= 1;
    }
    out.sort_by(|a, b| (a.k, &a.key).cmp(&(b.k, &b.key)));
    Ok(out)
}

/// Projection from `q`: eliminate the top bit of `q`, then delete it.
fn project(pts: &[u64], q: u64) -> Vec<u64> {
    let pivot = 63 - q.leading_zeros();
    let low = (1u64 << pivot) - 1;
    pts.iter()
        .map(|&p| {
            let p = if (p >> pivot) & 1 == 1 { p ^ q } else { p };
            (p & low) | ((p >> (pivot + 1)) << pivot)
        })
        .collect()
}

fn record(n: usize, k: usize, delta: usize, key: CanonicalKey, columns: &[u64], origin: &str) -> Result<ClassifiedCode> {
    let code = LinearCode::from_columns(k, columns)?;
    let weights = weight_distribution(&code)?;
    let projective = crate::codes::is_projective(&code);
    Ok(ClassifiedCode {
        n,
        k,
        delta,
        key,
        code,
        weights,
        projective,
        origin: origin.to_string(),
    })
}

/// All lengths `3..=n_max`.
pub fn classify_2divisible(n_max: usize, workers: usize) -> Result<Vec<ClassifiedCode>> {
    with_workers(workers, || {
        let mut all = Vec::new();
        for n in 3..=n_max {
            all.extend(classify_2divisible_length(n)?);
        }
        Ok(all)
    })?
}

// ---------------------------------------------------------------------------
// doubly- and triply-even augmentation

/// A code in canonical coordinates: `zeros` zero columns plus the support
/// with multiplicities, spanning `F_2^k`.
#[derive(Clone, Debug)]
struct Augmentable {
    k: usize,
    zeros: usize,
    pts: Vec<u64>,
    mult: Vec<u32>,
}

impl Augmentable {
    fn columns(&self) -> Vec<u64> {
        let mut c = vec![0u64; self.zeros];
        for (&p, &m) in self.pts.iter().zip(&self.mult) {
            c.extend(std::iter::repeat_n(p, m as usize));
        }
        c
    }

    fn from_columns(k: usize, columns: &[u64]) -> Self {
        let zeros = columns.iter().filter(|&&c| c == 0).count();
        let mut pts: Vec<u64> = Vec::new();
        let mut mult: Vec<u32> = Vec::new();
        let mut sorted: Vec<u64> = columns.iter().copied().filter(|&c| c != 0).collect();
        sorted.sort_unstable();
        for c in sorted {
            if pts.last() == Some(&c) {
                *mult.last_mut().unwrap() += 1;
            } else {
                pts.push(c);
                mult.push(1);
            }
        }
        Augmentable { k, zeros, pts, mult }
    }
}

/// Parity patterns of a `delta/2`-divisible sub-multiset: kernel of the
/// evaluations of the monomials of degree 1 (and 2 for `delta = 8`).
fn parity_kernel(a: &Augmentable, delta: usize) -> Vec<u64> {
    let s = a.pts.len();
    if s == 0 {
        return Vec::new();
    }
    let mut rows: Vec<u64> = Vec::new();
    for l in 0..a.k {
        rows.push(mask_where(&a.pts, |p| (p >> l) & 1 == 1));
    }
    if delta == 8 {
        for l in 0..a.k {
            for m in l + 1..a.k {
                rows.push(mask_where(&a.pts, |p| (p >> l) & (p >> m) & 1 == 1));
            }
        }
    }
    let basis = kernel_basis(&BitMatrix::from_row_masks(s, &rows));
    (0..basis.rows()).map(|i| basis.row_mask(i)).collect()
}

fn mask_where(pts: &[u64], pred: impl Fn(u64) -> bool) -> u64 {
    pts.iter()
        .enumerate()
        .filter(|(_, &p)| pred(p))
        .fold(0, |m, (i, _)| m | (1u64 << i))
}

/// Every extension of `a` by one generator that keeps the code
/// `delta`-divisible: `t[i]` copies of point `i` and `t0` zero columns get a
/// 1 in the new coordinate.
fn children(a: &Augmentable, delta: usize, mut emit: impl FnMut(Vec<u64>) -> Result<()>) -> Result<()> {
    let s = a.pts.len();
    let kernel = parity_kernel(a, delta);
    let high = 1u64 << a.k;
    let mut pattern = 0u64;
    let total = 1u64 << kernel.len();
    for step in 0..total {
        if step > 0 {
            pattern ^= kernel[step.trailing_zeros() as usize];
        }
        // odometer over lifts t_i = p_i + 2 j_i <= m_i
        let mut t: Vec<u32> = (0..s).map(|i| ((pattern >> i) & 1) as u32).collect();
        if t.iter().zip(&a.mult).any(|(x, m)| x > m) {
            continue;
        }
        loop {
            if delta != 8 || coordinate_sums_ok(a, &t) {
                let size: usize = t.iter().map(|&x| x as usize).sum();
                let mut t0 = (delta - size % delta) % delta;
                while t0 <= a.zeros {
                    let mut cols = Vec::with_capacity(a.zeros + a.mult.iter().sum::<u32>() as usize);
                    cols.extend(std::iter::repeat_n(0, a.zeros - t0));
                    cols.extend(std::iter::repeat_n(high, t0));
                    for i in 0..s {
                        cols.extend(std::iter::repeat_n(a.pts[i], (a.mult[i] - t[i]) as usize));
                        cols.extend(std::iter::repeat_n(a.pts[i] | high, t[i] as usize));
                    }
                    if reduced_basis(&cols).len() == a.k + 1 {
                        emit(cols)?;
                    }
                    t0 += delta;
                }
            }
            // advance
            let mut i = 0;
            while i < s {
                if t[i] + 2 <= a.mult[i] {
                    t[i] += 2;
                    break;
                }
                t[i] = ((pattern >> i) & 1) as u32;
                i += 1;
            }
            if i == s {
                break;
            }
        }
    }
    Ok(())
}

/// For `delta = 8`: the new word meets every old codeword in a multiple of
/// 4 exactly when each coordinate sum of the chosen multiset is `0 mod 4`.
fn coordinate_sums_ok(a: &Augmentable, t: &[u32]) -> bool {
    (0..a.k).all(|l| {
        let sum: u32 = a
            .pts
            .iter()
            .zip(t)
            .filter(|(p, _)| (*p >> l) & 1 == 1)
            .map(|(_, &x)| x)
            .sum();
        sum.is_multiple_of(4)
    })
}

/// Cheap isomorph rejection. The parent of a child in `F_2^(k+1)` is its
/// projection from the last unit vector `e_k`. Every point `q` gets the
/// invariant `(multiplicity of q, hash of the weight enumerator of the
/// subcode orthogonal to q)`; a child is kept only if `e_k` attains the
/// least value. Each class still arises from some parent along a minimising
/// point, so nothing is lost; duplicates are removed by key afterwards.
fn is_canonical_deletion(cols: &[u64], dim: usize) -> bool {
    let size = 1usize << dim;
    let mut counts = vec![0i64; size];
    for &c in cols {
        counts[c as usize] += 1;
    }
    let mult = counts.clone();
    walsh_hadamard(&mut counts);
    let n = cols.len() as i64;
    let mut spectrum: Vec<u64> = counts.iter().map(|&f| mix((n - f) as u64 / 2)).collect();
    walsh_hadamard_wrapping(&mut spectrum);
    let last = 1usize << (dim - 1);
    let mine = (mult[last], spectrum[last]);
    (1..size).all(|q| (mult[q], spectrum[q]) >= mine)
}

fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// All `delta`-divisible codes of length at most `n_max` with full support,
/// projective or not, one record per equivalence class.
pub fn classify_divisible(delta: usize, n_max: usize, workers: usize) -> Result<Vec<ClassifiedCode>> {
    let limit = match delta {
        4 => DOUBLY_EVEN_MAX_N,
        8 => TRIPLY_EVEN_MAX_N,
        _ => return Err(Error::InvalidParameter(format!("delta must be 4 or 8, got {delta}"))),
    };
    if n_max > limit {
        return Err(Error::BudgetExceeded {
            what: format!("{delta}-divisible classification at n = {n_max}"),
            limit,
        });
    }
    with_workers(workers, || classify_divisible_inner(delta, n_max))?
}

fn classify_divisible_inner(delta: usize, n_max: usize) -> Result<Vec<ClassifiedCode>> {
    let mut frontier: Vec<(CanonicalKey, Augmentable)> = vec![(
        CanonicalKey::from_hex("")?,
        Augmentable {
            k: 0,
            zeros: n_max,
            pts: Vec::new(),
            mult: Vec::new(),
        },
    )];
    let mut out = Vec::new();
    let mut k = 0;
    while !frontier.is_empty() && 2 * (k + 1) <= n_max {
        let per_parent: Vec<Vec<(CanonicalKey, usize, Augmentable)>> = frontier
            .par_iter()
            .map(|(_, parent)| -> Result<Vec<_>> {
                let mut found = Vec::new();
                let mut index = 0;
                children(parent, delta, |cols| {
                    if !is_canonical_deletion(&cols, k + 1) {
                        return Ok(());
                    }
                    let (key, canon) = canonical_columns(k + 1, &cols)?;
                    found.push((key, index, Augmentable::from_columns(k + 1, &canon)));
                    index += 1;
                    Ok(())
                })?;
                Ok(dedup_local(found))
            })
            .collect::<Result<_>>()?;
        frontier = merge_children(per_parent);
        k += 1;
        for (_, a) in &frontier {
            let n = n_max - a.zeros;
            let support: Vec<u64> = a.columns().into_iter().filter(|&c| c != 0).collect();
            // key of the code on its own support
            let own = canonical_key(&LinearCode::from_columns(k, &support)?)?;
            out.push(record(n, k, delta, own, &support, "augmentation")?);
        }
    }
    out.sort_by(|a, b| (a.n, a.k, &a.key).cmp(&(b.n, b.k, &b.key)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(classes: &[ClassifiedCode]) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for c in classes {
            *m.entry(c.k).or_default() += 1;
        }
        m
    }

    #[test]
    fn projection_deletes_the_pivot() {
        // project {e0, e1, e2} from e0+e2 in F_2^3: pivot bit 2
        assert_eq!(project(&[1, 2, 4], 0b101), vec![1, 2, 1]);
    }

    #[test]
    fn small_two_divisible_rows() {
        let c = classify_2divisible_length(3).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].n, c[0].k), (3, 2));
        let c = classify_2divisible_length(7).unwrap();
        // row n=7: k=3..6 -> 1, 1, 1, 1 (simplex, ..., even weight)
        assert_eq!(counts(&c).values().sum::<usize>(), 4);
        for x in &c {
            assert!(x.projective && x.weights.is_divisible(2));
        }
    }

    #[test]
    fn doubly_even_small() {
        let all = classify_divisible(4, 8, 1).unwrap();
        let proj = count_table(&all, true);
        assert_eq!(proj.get(&7).map(|r| r.values().sum::<usize>()), Some(1));
        assert_eq!(proj.get(&8).map(|r| r.values().sum::<usize>()), Some(1));
        for c in &all {
            assert!(c.weights.is_divisible(4));
            assert_eq!(c.code.n(), c.n);
        }
        // [4,1] repetition, [8,2] two disjoint blocks, [8,4] extended Hamming ...
        assert!(all.iter().any(|c| (c.n, c.k) == (4, 1)));
        assert!(all.iter().any(|c| (c.n, c.k) == (8, 4)));
    }

    #[test]
    fn bad_parameters() {
        assert!(classify_divisible(2, 10, 1).is_err());
        assert!(matches!(classify_divisible(4, 23, 1), Err(Error::BudgetExceeded { .. })));
        assert!(classify_2divisible_length(15).is_err());
    }
}
