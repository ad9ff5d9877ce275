//! Linear algebra over GF(2).
//!
//! [`BitMatrix`] stores rows as packed `u64` words. Small vectors (ambient
//! dimension at most 64) are passed around as plain `u64` masks where bit `i`
//! is coordinate `i`; the helpers at the bottom of this module work on that
//! representation.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD)
}

/// Row-major bit-packed matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows given as `u64` masks. Requires `cols <= 64`.
    pub fn from_row_masks(cols: usize, rows: &[u64]) -> Self {
        assert!(cols <= WORD, "from_row_masks supports at most 64 columns");
        let mask = low_mask(cols);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, &r) in rows.iter().enumerate() {
            if m.stride > 0 {
                m.data[i * m.stride] = r & mask;
            }
        }
        m
    }

    /// Builds a `rows x columns.len()` matrix whose column `j` is the mask
    /// `columns[j]`. Requires `rows <= 64`.
    pub fn from_columns(rows: usize, columns: &[u64]) -> Self {
        assert!(rows <= WORD, "from_columns supports at most 64 rows");
        let mut m = Self::zeros(rows, columns.len());
        for (j, &c) in columns.iter().enumerate() {
            for i in 0..rows {
                if (c >> i) & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn from_bool_rows(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                if b {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / WORD];
        let bit = 1u64 << (j % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Row `i` as a mask. Requires `cols <= 64`.
    pub fn row_mask(&self, i: usize) -> u64 {
        assert!(self.cols <= WORD);
        if self.stride == 0 {
            0
        } else {
            self.data[i * self.stride]
        }
    }

    /// Column `j` as a mask. Requires `rows <= 64`.
    pub fn column_mask(&self, j: usize) -> u64 {
        assert!(self.rows <= WORD);
        let mut c = 0u64;
        for i in 0..self.rows {
            if self.get(i, j) {
                c |= 1 << i;
            }
        }
        c
    }

    /// All columns as masks. Requires `rows <= 64`.
    pub fn column_masks(&self) -> Vec<u64> {
        assert!(self.rows <= WORD);
        let mut out = vec![0u64; self.cols];
        for i in 0..self.rows {
            let row = self.row(i);
            for (j, c) in out.iter_mut().enumerate() {
                if (row[j / WORD] >> (j % WORD)) & 1 == 1 {
                    *c |= 1 << i;
                }
            }
        }
        out
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|&w| w == 0)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// `row[dst] ^= row[src]`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        if src == dst {
            for w in self.row_mut(dst) {
                *w = 0;
            }
            return;
        }
        for w in 0..self.stride {
            let v = self.data[src * self.stride + w];
            self.data[dst * self.stride + w] ^= v;
        }
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.stride);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                if self.get(i, l) {
                    for w in 0..out.stride {
                        out.data[i * out.stride + w] ^= other.data[l * other.stride + w];
                    }
                }
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        out
    }

    /// Keeps the listed columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                if self.get(i, j) {
                    out.set(i, jj, true);
                }
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(0, self.cols);
        for &i in rows {
            out.push_row(self.row(i));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: BitMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &BitMatrix) -> Rref {
    let mut r = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..r.cols {
        if row == r.rows {
            break;
        }
        let Some(p) = (row..r.rows).find(|&i| r.get(i, col)) else {
            continue;
        };
        r.swap_rows(p, row);
        for i in 0..r.rows {
            if i != row && r.get(i, col) {
                r.add_row(row, i);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref {
        matrix: r,
        rank: row,
        pivots,
    }
}

/// Basis (as rows) of the right kernel `{x : M x^T = 0}`.
pub fn kernel_basis(m: &BitMatrix) -> BitMatrix {
    let Rref {
        matrix: r,
        rank,
        pivots,
    } = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = BitMatrix::zeros(0, n);
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut x = BitMatrix::zeros(1, n);
        x.set(0, free, true);
        for (i, &p) in pivots.iter().enumerate().take(rank) {
            if r.get(i, free) {
                x.set(0, p, true);
            }
        }
        out.push_row(x.row(0));
    }
    out
}

/// Matrix model of GF(2^m): the powers of the companion matrix of a fixed
/// primitive polynomial, together with the zero matrix.
#[derive(Clone, Debug)]
pub struct FieldRep {
    pub m: usize,
    pub companion: BitMatrix,
    /// `elements[0]` is zero, `elements[1 + t]` is `companion^t`.
    pub elements: Vec<BitMatrix>,
}

/// Primitive polynomials, indexed by degree. Bit `i` is the coefficient of
/// `x^i`; the leading term is included.
const PRIMITIVE_POLYS: [u32; 17] = [
    0,
    0b11,                   // x + 1
    0b111,                  // x^2 + x + 1
    0b1011,                 // x^3 + x + 1
    0b10011,                // x^4 + x + 1
    0b100101,               // x^5 + x^2 + 1
    0b1000011,              // x^6 + x + 1
    0b10000011,             // x^7 + x + 1
    0b100011101,            // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,           // x^9 + x^4 + 1
    0b10000001001,          // x^10 + x^3 + 1
    0b100000000101,         // x^11 + x^2 + 1
    0b1000001010011,        // x^12 + x^6 + x^4 + x + 1
    0b10000000011011,       // x^13 + x^4 + x^3 + x + 1
    0b100010001000011,      // x^14 + x^10 + x^6 + x + 1
    0b1000000000000011,     // x^15 + x + 1
    0b10001000000001011,    // x^16 + x^12 + x^3 + x + 1
];

/// The fixed primitive polynomial of degree `m` (bit `i` = coefficient of `x^i`).
pub fn primitive_poly(m: usize) -> Result<u32> {
    if !(1..=16).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    Ok(PRIMITIVE_POLYS[m])
}

pub fn companion_matrix(m: usize) -> Result<BitMatrix> {
    let poly = primitive_poly(m)?;
    let mut a = BitMatrix::zeros(m, m);
    // multiplication by x on the basis 1, x, ..., x^(m-1)
    for j in 0..m - 1 {
        a.set(j + 1, j, true);
    }
    for i in 0..m {
        if (poly >> i) & 1 == 1 {
            a.set(i, m - 1, true);
        }
    }
    Ok(a)
}

pub fn field_rep(m: usize) -> Result<FieldRep> {
    let companion = companion_matrix(m)?;
    let order = (1usize << m) - 1;
    let mut elements = Vec::with_capacity(order + 1);
    elements.push(BitMatrix::zeros(m, m));
    let mut power = BitMatrix::identity(m);
    for _ in 0..order {
        let next = power.mul(&companion);
        elements.push(power);
        power = next;
    }
    Ok(FieldRep {
        m,
        companion,
        elements,
    })
}

/// Table-driven arithmetic in GF(2^m) on the polynomial basis, using the same
/// primitive polynomial as [`field_rep`]. Element `x` is a mask of
/// polynomial coefficients, so it is also the first column of its matrix in
/// the [`FieldRep`].
#[derive(Clone, Debug)]
pub struct Gf2m {
    pub m: usize,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Gf2m {
    pub fn new(m: usize) -> Result<Self> {
        let poly = primitive_poly(m)?;
        let order = (1usize << m) - 1;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; order + 1];
        let mut x = 1u32;
        for (t, e) in exp.iter_mut().enumerate().take(order) {
            *e = x;
            log[x as usize] = t as u32;
            x <<= 1;
            if x & (1 << m) != 0 {
                x ^= poly;
            }
        }
        for t in order..2 * order {
            exp[t] = exp[t - order];
        }
        Ok(Gf2m { m, exp, log })
    }

    pub fn size(&self) -> usize {
        1 << self.m
    }

    pub fn order(&self) -> usize {
        (1 << self.m) - 1
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let o = self.order() as u32;
        self.exp[((o - self.log[a as usize]) % o) as usize]
    }

    /// The primitive element raised to `t`.
    pub fn pow_gen(&self, t: usize) -> u32 {
        self.exp[t % self.order()]
    }
}

/// The `2^d - 1` nonzero vectors of the row space of `basis`, ascending by
/// integer value. Requires `basis.cols() <= 64`.
pub fn subspace_points(basis: &BitMatrix) -> Result<Vec<u64>> {
    if basis.cols() > WORD {
        return Err(Error::InvalidParameter(
            "subspace_points supports ambient dimension at most 64".into(),
        ));
    }
    let rows: Vec<u64> = (0..basis.rows()).map(|i| basis.row_mask(i)).collect();
    if rank_of(&rows) != rows.len() {
        return Err(Error::DependentBasis);
    }
    let mut pts = span(&rows);
    pts.retain(|&v| v != 0);
    pts.sort_unstable();
    Ok(pts)
}

// ---------------------------------------------------------------------------
// small-vector helpers (vectors as u64 masks)

pub fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

#[inline]
pub fn parity(x: u64) -> u32 {
    x.count_ones() & 1
}

#[inline]
pub fn dot(a: u64, b: u64) -> u32 {
    parity(a & b)
}

/// Rank of a list of vectors.
pub fn rank_of(vectors: &[u64]) -> usize {
    reduced_basis(vectors).len()
}

/// An echelonised basis of the span: each entry has a distinct leading bit.
pub fn reduced_basis(vectors: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vectors {
        let r = reduce(&basis, v);
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// Reduces `v` against an echelonised basis (as produced by [`reduced_basis`]).
pub fn reduce(basis: &[u64], mut v: u64) -> u64 {
    for &b in basis {
        let lead = 63 - b.leading_zeros();
        if (v >> lead) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

pub fn in_span(basis: &[u64], v: u64) -> bool {
    reduce(basis, v) == 0
}

/// All `2^d` elements of the span of `gens` (which should be independent);
/// element `i` is the combination selected by the bits of `i`.
pub fn span(gens: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64];
    for &g in gens {
        let len = out.len();
        for i in 0..len {
            out.push(out[i] ^ g);
        }
    }
    out
}

/// For an invertible `k x k` basis `b_0..b_{k-1}` of `F_2^k`, returns masks
/// `inv` with `coordinate_j(v) = parity(inv[j] & v)`, i.e. `v = sum_j x_j b_j`.
pub fn coordinate_maps(basis: &[u64], k: usize) -> Option<Vec<u64>> {
    // Gauss-Jordan on rows of M (M has the basis vectors as columns),
    // with the identity alongside.
    let mut rows: Vec<(u64, u64)> = (0..k)
        .map(|i| {
            let mut r = 0u64;
            for (j, &b) in basis.iter().enumerate() {
                if (b >> i) & 1 == 1 {
                    r |= 1 << j;
                }
            }
            (r, 1u64 << i)
        })
        .collect();
    for col in 0..k {
        let p = (col..k).find(|&i| (rows[i].0 >> col) & 1 == 1)?;
        rows.swap(p, col);
        let (pr, pi) = rows[col];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != col && (row.0 >> col) & 1 == 1 {
                row.0 ^= pr;
                row.1 ^= pi;
            }
        }
    }
    Some(rows.into_iter().map(|(_, inv)| inv).collect())
}

/// Applies coordinate maps from [`coordinate_maps`].
#[inline]
pub fn coordinates(maps: &[u64], v: u64) -> u64 {
    let mut x = 0u64;
    for (j, &m) in maps.iter().enumerate() {
        x |= (parity(m & v) as u64) << j;
    }
    x
}

/// In-place Walsh-Hadamard transform with wrapping arithmetic:
/// `out[a] = sum_v f[v] * (-1)^{a.v}`.
pub fn walsh_hadamard_wrapping(f: &mut [u64]) {
    let n = f.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for i in block..block + h {
                let x = f[i];
                let y = f[i + h];
                f[i] = x.wrapping_add(y);
                f[i + h] = x.wrapping_sub(y);
            }
        }
        h *= 2;
    }
}

/// Exact Walsh-Hadamard transform over `i64`.
pub fn walsh_hadamard(f: &mut [i64]) {
    let n = f.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for i in block..block + h {
                let x = f[i];
                let y = f[i + h];
                f[i] = x + y;
                f[i + h] = x - y;
            }
        }
        h *= 2;
    }
}
