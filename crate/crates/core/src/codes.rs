//! Binary linear codes.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf2::{kernel_basis, rref, BitMatrix};

/// Largest dimension accepted by [`weight_distribution`].
pub const WEIGHT_ENUMERATION_MAX_K: usize = 28;

/// A binary `[n, k]` code given by a full-rank generator matrix kept in
/// reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCode {
    gen: BitMatrix,
}

impl LinearCode {
    /// Accepts a generator with independent rows.
    pub fn from_generator(gen: &BitMatrix) -> Result<Self> {
        let r = rref(gen);
        if r.rank != gen.rows() {
            return Err(Error::RankDeficient {
                rows: gen.rows(),
                rank: r.rank,
            });
        }
        Self::from_rref(r.matrix, r.rank)
    }

    /// Row space of `rows`, whatever their rank.
    pub fn from_spanning_rows(rows: &BitMatrix) -> Result<Self> {
        let r = rref(rows);
        Self::from_rref(r.matrix, r.rank)
    }

    fn from_rref(m: BitMatrix, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameter("code has dimension 0".into()));
        }
        let keep: Vec<usize> = (0..rank).collect();
        Ok(LinearCode {
            gen: m.select_rows(&keep),
        })
    }

    /// Code whose generator has column `j` equal to the mask `columns[j]`
    /// in `F_2^k`. The row space is taken, so the result may have
    /// dimension below `k` when the columns do not span.
    pub fn from_columns(k: usize, columns: &[u64]) -> Result<Self> {
        Self::from_spanning_rows(&BitMatrix::from_columns(k, columns))
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.gen
    }

    /// Generator columns as masks over the `k` rows. Requires `k <= 64`.
    pub fn column_masks(&self) -> Vec<u64> {
        self.gen.column_masks()
    }

    /// Codeword `sum_i msg_i * row_i` as packed words.
    pub fn encode(&self, msg: u64) -> Vec<u64> {
        let stride = self.n().div_ceil(64);
        let mut out = vec![0u64; stride];
        for i in 0..self.k() {
            if (msg >> i) & 1 == 1 {
                for (o, w) in out.iter_mut().zip(self.gen.row(i)) {
                    *o ^= w;
                }
            }
        }
        out
    }

    pub fn contains(&self, word: &BitMatrix) -> bool {
        assert_eq!(word.rows(), 1);
        assert_eq!(word.cols(), self.n());
        rref(&self.gen.vstack(word)).rank == self.k()
    }

    /// True when every row of `other` lies in this code.
    pub fn contains_code(&self, other: &LinearCode) -> bool {
        other.n() == self.n() && rref(&self.gen.vstack(&other.gen)).rank == self.k()
    }

    pub fn min_distance(&self) -> Result<usize> {
        let wd = weight_distribution(self)?;
        Ok(wd.min_nonzero_weight().unwrap_or(0))
    }
}

/// Weight counts `A_0..A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    pub counts: Vec<u128>,
}

impl WeightDistribution {
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// Weights `i > 0` with `A_i > 0`, ascending.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        (1..self.counts.len()).filter(|&i| self.counts[i] > 0).collect()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.nonzero_weights().first().copied()
    }

    pub fn is_divisible(&self, delta: usize) -> bool {
        assert!(delta >= 1);
        self.nonzero_weights().iter().all(|w| w % delta == 0)
    }

    /// `(weight, count)` pairs with nonzero count.
    pub fn support(&self) -> Vec<(usize, u128)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }
}

/// Weight distribution by Gray-code traversal of all `2^k` messages.
pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    let k = code.k();
    if k > WEIGHT_ENUMERATION_MAX_K {
        return Err(Error::BudgetExceeded {
            what: format!("weight enumeration of a dimension-{k} code"),
            limit: WEIGHT_ENUMERATION_MAX_K,
        });
    }
    let n = code.n();
    let mut counts = vec![0u128; n + 1];
    let stride = n.div_ceil(64);
    let mut word = vec![0u64; stride];
    counts[0] = 1;
    for step in 1u64..(1u64 << k) {
        let flip = step.trailing_zeros() as usize;
        for (w, r) in word.iter_mut().zip(code.gen.row(flip)) {
            *w ^= r;
        }
        let wt: u32 = word.iter().map(|w| w.count_ones()).sum();
        counts[wt as usize] += 1;
    }
    Ok(WeightDistribution { counts })
}

pub fn is_divisible(code: &LinearCode, delta: usize) -> Result<bool> {
    Ok(weight_distribution(code)?.is_divisible(delta))
}

/// Columns nonzero and pairwise distinct.
pub fn is_projective(code: &LinearCode) -> bool {
    let t = code.gen.transpose();
    let mut seen = HashSet::with_capacity(t.rows());
    for j in 0..t.rows() {
        let col = t.row(j);
        if col.iter().all(|&w| w == 0) || !seen.insert(col.to_vec()) {
            return false;
        }
    }
    true
}

/// Minimum distance of the dual. `None` when the dual is the zero code.
/// Enumerates whichever of the code and its dual is smaller, going through
/// MacWilliams in the first case.
pub fn dual_min_distance(code: &LinearCode) -> Result<Option<usize>> {
    if code.k() == code.n() {
        return Ok(None);
    }
    if code.n() - code.k() <= code.k() {
        return dual(code)?.min_distance().map(Some);
    }
    let wd = macwilliams(&weight_distribution(code)?, code.k())?;
    Ok(wd.min_nonzero_weight())
}

pub fn dual(code: &LinearCode) -> Result<LinearCode> {
    if code.k() == code.n() {
        return Err(Error::InvalidParameter(
            "the dual of the full space is the zero code".into(),
        ));
    }
    LinearCode::from_generator(&kernel_basis(&code.gen))
}

/// Krawtchouk value `K_j(i) = sum_s (-1)^s C(i,s) C(n-i,j-s)`.
pub fn krawtchouk(n: usize, j: usize, i: usize) -> BigInt {
    let mut total = BigInt::zero();
    for s in 0..=j.min(i) {
        if j - s > n - i {
            continue;
        }
        let term = binomial(i, s) * binomial(n - i, j - s);
        if s % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for t in 0..r {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// Dual weight distribution `B_j = 2^-k sum_i A_i K_j(i)` in exact arithmetic.
pub fn macwilliams(wd: &WeightDistribution, k: usize) -> Result<WeightDistribution> {
    let n = wd.n();
    let size = BigInt::one() << k;
    let total: BigInt = wd.counts.iter().map(|&c| BigInt::from(c)).sum();
    if total != size {
        return Err(Error::InconsistentDistribution(format!(
            "counts sum to {total}, expected 2^{k}"
        )));
    }
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, &a) in wd.counts.iter().enumerate() {
            if a > 0 {
                acc += BigInt::from(a) * krawtchouk(n, j, i);
            }
        }
        let (q, r) = acc.div_rem(&size);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::InconsistentDistribution(format!(
                "B_{j} = {acc}/2^{k} is not a nonnegative integer"
            )));
        }
        out.push(q.to_u128().expect("dual count fits in u128"));
    }
    Ok(WeightDistribution { counts: out })
}

/// The `2^k - 1` subcodes of codimension one, one per nonzero functional on
/// the message space.
pub fn codim1_subcodes(code: &LinearCode) -> Result<impl Iterator<Item = LinearCode> + '_> {
    let k = code.k();
    if k < 2 {
        return Err(Error::InvalidParameter(
            "codimension-one subcodes need dimension at least 2".into(),
        ));
    }
    if k > 63 {
        return Err(Error::BudgetExceeded {
            what: "subcode enumeration".into(),
            limit: 63,
        });
    }
    Ok((1u64..(1u64 << k)).map(move |f| {
        let functional = BitMatrix::from_row_masks(k, &[f]);
        let msgs = kernel_basis(&functional);
        LinearCode::from_generator(&msgs.mul(&code.gen)).expect("kernel rows stay independent")
    }))
}

/// Block-diagonal direct sum.
pub fn direct_sum(a: &LinearCode, b: &LinearCode) -> LinearCode {
    let (n1, n2) = (a.n(), b.n());
    let mut g = BitMatrix::zeros(a.k() + b.k(), n1 + n2);
    for i in 0..a.k() {
        for j in 0..n1 {
            if a.gen.get(i, j) {
                g.set(i, j, true);
            }
        }
    }
    for i in 0..b.k() {
        for j in 0..n2 {
            if b.gen.get(i, j) {
                g.set(a.k() + i, n1 + j, true);
            }
        }
    }
    LinearCode::from_generator(&g).expect("block-diagonal rows are independent")
}

/// Keeps the codewords vanishing on `coords` and deletes those coordinates.
pub fn shorten(code: &LinearCode, coords: &[usize]) -> Result<LinearCode> {
    let n = code.n();
    let mut drop = vec![false; n];
    for &c in coords {
        if c >= n {
            return Err(Error::InvalidParameter(format!("coordinate {c} out of range")));
        }
        if drop[c] {
            return Err(Error::InvalidParameter(format!("coordinate {c} repeated")));
        }
        drop[c] = true;
    }
    // messages x with (xG)|coords = 0
    let restricted = code.gen.select_columns(coords);
    let msgs = kernel_basis(&restricted.transpose());
    if msgs.rows() == 0 {
        return Err(Error::InvalidParameter("shortening leaves the zero code".into()));
    }
    let words = msgs.mul(&code.gen);
    let keep: Vec<usize> = (0..n).filter(|&j| !drop[j]).collect();
    LinearCode::from_generator(&words.select_columns(&keep))
}

/// Adds one generator.
pub fn augment(code: &LinearCode, word: &BitMatrix) -> Result<LinearCode> {
    if word.rows() != 1 || word.cols() != code.n() {
        return Err(Error::InvalidParameter("augmenting word has the wrong shape".into()));
    }
    if code.contains(word) {
        return Err(Error::WordInCode);
    }
    LinearCode::from_generator(&code.gen.vstack(word))
}

/// Generator of the extended binary Golay code in systematic form: the cyclic
/// code of `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1` extended by a parity bit.
pub const GOLAY24_ROWS: [&str; 12] = [
    "100000000000101011100011",
    "010000000000111110010010",
    "001000000000110100101011",
    "000100000000110001110110",
    "000010000000110011011001",
    "000001000000011001101101",
    "000000100000001100110111",
    "000000010000101101111000",
    "000000001000010110111100",
    "000000000100001011011110",
    "000000000010101110001101",
    "000000000001010111000111",
];

pub fn golay24() -> LinearCode {
    let rows: Vec<Vec<bool>> = GOLAY24_ROWS
        .iter()
        .map(|r| r.bytes().map(|b| b == b'1').collect())
        .collect();
    LinearCode::from_generator(&BitMatrix::from_bool_rows(&rows)).expect("Golay rows are independent")
}
