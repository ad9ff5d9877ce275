//! Point multisets in `PG(k-1, 2)` and the constructions that act on them.
//!
//! A nonzero vector of `F_2^k` is stored as a `u64` mask and stands for the
//! projective point it spans. The columns of a generator matrix give a
//! multiset of points, and the weight of the codeword `a G` is `n` minus the
//! number of points on the hyperplane `a^perp`.

use std::collections::BTreeMap;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{coordinate_maps, coordinates, dot, in_span, low_mask, rank_of, reduced_basis, span, walsh_hadamard};

/// Largest ambient dimension for which full hyperplane scans are attempted.
pub const HYPERPLANE_SCAN_MAX_DIM: usize = 26;

/// Multiset of points of `PG(ambient-1, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PointMultiset {
    ambient: usize,
    mult: BTreeMap<u64, u32>,
}

impl PointMultiset {
    pub fn new(ambient: usize) -> Self {
        assert!(ambient <= 64, "ambient dimension above 64");
        PointMultiset {
            ambient,
            mult: BTreeMap::new(),
        }
    }

    /// Collects points (with repetition) into a multiset. Zero vectors and
    /// vectors outside the ambient space are rejected.
    pub fn from_points<I: IntoIterator<Item = u64>>(ambient: usize, points: I) -> Result<Self> {
        let mut k = Self::new(ambient);
        for p in points {
            k.add(p, 1)?;
        }
        Ok(k)
    }

    pub fn add(&mut self, p: u64, m: u32) -> Result<()> {
        if p == 0 {
            return Err(Error::InvalidParameter("the zero vector is not a point".into()));
        }
        if p & !low_mask(self.ambient) != 0 {
            return Err(Error::InvalidParameter(format!(
                "vector {p:#x} lies outside the ambient dimension {}",
                self.ambient
            )));
        }
        if m > 0 {
            *self.mult.entry(p).or_insert(0) += m;
        }
        Ok(())
    }

    /// Removes one copy of `p`; returns false if `p` was absent.
    pub fn remove_one(&mut self, p: u64) -> bool {
        match self.mult.get_mut(&p) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.mult.remove(&p);
                true
            }
            None => false,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn multiplicity(&self, p: u64) -> u32 {
        self.mult.get(&p).copied().unwrap_or(0)
    }

    pub fn contains(&self, p: u64) -> bool {
        self.mult.contains_key(&p)
    }

    /// Total size counted with multiplicity.
    pub fn size(&self) -> usize {
        self.mult.values().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// `(point, multiplicity)` in ascending point order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.mult.iter().map(|(&p, &m)| (p, m))
    }

    pub fn support(&self) -> Vec<u64> {
        self.mult.keys().copied().collect()
    }

    /// Points repeated by multiplicity, ascending.
    pub fn columns(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.size());
        for (p, m) in self.iter() {
            out.extend(std::iter::repeat_n(p, m as usize));
        }
        out
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.mult.values().copied().max().unwrap_or(0)
    }

    pub fn is_set(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.support())
    }

    pub fn is_spanning(&self) -> bool {
        self.rank() == self.ambient
    }

    /// Same points in a larger ambient space (zero padded coordinates).
    pub fn lift(&self, ambient: usize) -> Self {
        assert!(ambient >= self.ambient && ambient <= 64);
        PointMultiset {
            ambient,
            mult: self.mult.clone(),
        }
    }

    /// Multiset sum of two point sets in the same ambient space.
    pub fn union(&self, other: &PointMultiset) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut out = self.clone();
        for (p, m) in other.iter() {
            *out.mult.entry(p).or_insert(0) += m;
        }
        out
    }

    /// Applies the linear map sending `e_i` to `images[i]`.
    pub fn map_linear(&self, images: &[u64], ambient: usize) -> Result<Self> {
        assert_eq!(images.len(), self.ambient);
        let mut out = Self::new(ambient);
        for (p, m) in self.iter() {
            let mut q = 0u64;
            for (i, &img) in images.iter().enumerate() {
                if (p >> i) & 1 == 1 {
                    q ^= img;
                }
            }
            if q == 0 {
                return Err(Error::InvalidParameter("linear map sends a point to zero".into()));
            }
            out.add(q, m)?;
        }
        Ok(out)
    }

    /// Re-expresses the points in coordinates of a basis of their span, so
    /// that the result is spanning.
    pub fn reduce_to_span(&self) -> Self {
        let basis = span_basis(&self.support());
        let d = basis.len();
        let maps = coordinate_maps_in_span(&basis);
        let mut out = Self::new(d);
        for (p, m) in self.iter() {
            out.add(coordinates(&maps, p), m).expect("nonzero point stays nonzero");
        }
        out
    }
}

/// A basis of the span of `vectors` picked from the vectors themselves,
/// greedily in the given order.
fn span_basis(vectors: &[u64]) -> Vec<u64> {
    let mut ech: Vec<u64> = Vec::new();
    let mut picked = Vec::new();
    for &v in vectors {
        if !in_span(&ech, v) {
            picked.push(v);
            ech = reduced_basis(&picked);
        }
    }
    picked
}

/// Coordinate maps for an independent (not necessarily spanning) list.
fn coordinate_maps_in_span(basis: &[u64]) -> Vec<u64> {
    // complete to a basis of F_2^64 restricted to the relevant bits, invert,
    // then keep the first d maps
    let top = basis.iter().fold(0u64, |a, &b| a | b);
    let width = 64 - top.leading_zeros() as usize;
    let mut full = basis.to_vec();
    let mut ech = reduced_basis(&full);
    for i in 0..width {
        let e = 1u64 << i;
        if !in_span(&ech, e) {
            full.push(e);
            ech = reduced_basis(&full);
        }
    }
    let mut maps = coordinate_maps(&full, width).expect("completed basis is invertible");
    maps.truncate(basis.len());
    maps
}

/// A linear subspace of `F_2^ambient` stored by an echelonised basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<u64>,
}

impl Subspace {
    pub fn new(ambient: usize, gens: &[u64]) -> Result<Self> {
        if gens.iter().any(|&g| g & !low_mask(ambient) != 0) {
            return Err(Error::InvalidParameter("generator outside the ambient space".into()));
        }
        let basis = reduced_basis(gens);
        if basis.len() != gens.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Subspace { ambient, basis })
    }

    /// Span of `gens`, dependent generators allowed.
    pub fn spanned_by(ambient: usize, gens: &[u64]) -> Self {
        Subspace {
            ambient,
            basis: reduced_basis(gens),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn contains(&self, v: u64) -> bool {
        in_span(&self.basis, v)
    }

    /// The `2^dim - 1` points, ascending.
    pub fn points(&self) -> Vec<u64> {
        let mut pts = span(&self.basis);
        pts.retain(|&v| v != 0);
        pts.sort_unstable();
        pts
    }

    pub fn as_pointset(&self) -> PointMultiset {
        PointMultiset::from_points(self.ambient, self.points()).expect("subspace points are valid")
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|&b| other.contains(b))
    }

    pub fn intersects_trivially(&self, other: &Subspace) -> bool {
        let mut all = self.basis.clone();
        all.extend_from_slice(&other.basis);
        rank_of(&all) == self.dim() + other.dim()
    }
}

/// Point multiset of the generator columns. Requires `k <= 64`.
pub fn code_to_points(code: &LinearCode) -> Result<PointMultiset> {
    let k = code.k();
    if k > 64 {
        return Err(Error::InvalidParameter("dimension above 64".into()));
    }
    let mut out = PointMultiset::new(k);
    for (j, c) in code.column_masks().into_iter().enumerate() {
        if c == 0 {
            return Err(Error::ZeroCoordinate(j));
        }
        out.add(c, 1)?;
    }
    Ok(out)
}

/// Code whose generator columns are the points. A non-spanning multiset is
/// first re-expressed in coordinates of its span, so the code dimension is
/// the rank of the points.
pub fn points_to_code(points: &PointMultiset) -> Result<LinearCode> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if points.is_spanning() {
        LinearCode::from_columns(points.ambient(), &points.columns())
    } else {
        let r = points.reduce_to_span();
        LinearCode::from_columns(r.ambient(), &r.columns())
    }
}

/// Weight of the codeword `a G`, i.e. the number of points off `a^perp`.
pub fn hyperplane_weight(points: &PointMultiset, a: u64) -> usize {
    assert!(a != 0, "functional must be nonzero");
    points
        .iter()
        .filter(|&(p, _)| dot(a, p) == 1)
        .map(|(_, m)| m as usize)
        .sum()
}

/// Weights of all `2^ambient` functionals (entry 0 is 0), by a
/// Walsh-Hadamard transform of the multiplicity function.
pub fn hyperplane_weights(points: &PointMultiset) -> Result<Vec<u64>> {
    let k = points.ambient();
    if k > HYPERPLANE_SCAN_MAX_DIM {
        return Err(Error::BudgetExceeded {
            what: format!("hyperplane scan in dimension {k}"),
            limit: HYPERPLANE_SCAN_MAX_DIM,
        });
    }
    let mut f = vec![0i64; 1 << k];
    for (p, m) in points.iter() {
        f[p as usize] += m as i64;
    }
    walsh_hadamard(&mut f);
    let n = points.size() as i64;
    Ok(f.into_iter().map(|x| ((n - x) / 2) as u64).collect())
}

/// Largest `e <= cap` such that every hyperplane weight is divisible by `2^e`.
pub fn divisibility_exponent(points: &PointMultiset, cap: u32) -> Result<u32> {
    let reduced = points.reduce_to_span();
    let weights = hyperplane_weights(&reduced)?;
    let mut e = cap;
    for &w in &weights[1..] {
        if w != 0 {
            e = e.min(w.trailing_zeros());
        }
    }
    Ok(e)
}

pub fn is_divisible_pointset(points: &PointMultiset, delta: usize) -> Result<bool> {
    assert!(delta >= 1);
    let reduced = points.reduce_to_span();
    Ok(hyperplane_weights(&reduced)?[1..]
        .iter()
        .all(|&w| (w as usize).is_multiple_of(delta)))
}

/// The points of `PG(ambient-1, 2)` not in the set.
pub fn complement(points: &PointMultiset) -> Result<PointMultiset> {
    if let Some(m) = points.iter().map(|(_, m)| m).find(|&m| m > 1) {
        return Err(Error::NotASet(m));
    }
    let k = points.ambient();
    if k > HYPERPLANE_SCAN_MAX_DIM {
        return Err(Error::BudgetExceeded {
            what: format!("complement in dimension {k}"),
            limit: HYPERPLANE_SCAN_MAX_DIM,
        });
    }
    PointMultiset::from_points(k, (1u64..(1u64 << k)).filter(|&p| !points.contains(p)))
}

/// Replaces the unique point of `line` in the set by the other two points.
pub fn tangent_switch(points: &PointMultiset, line: &Subspace) -> Result<PointMultiset> {
    if !points.is_set() {
        return Err(Error::NotASet(points.max_multiplicity()));
    }
    if line.dim() != 2 {
        return Err(Error::InvalidParameter(format!(
            "a line has vector dimension 2, got {}",
            line.dim()
        )));
    }
    let on: Vec<u64> = line.points().into_iter().filter(|&p| points.contains(p)).collect();
    if on.len() != 1 {
        return Err(Error::NotTangent(on.len()));
    }
    let mut out = points.clone();
    out.remove_one(on[0]);
    for p in line.points() {
        if p != on[0] {
            out.add(p, 1)?;
        }
    }
    Ok(out)
}

/// Sunflower switching: replaces the points of `t` by the affine part
/// `s2 \ t` of a subspace one dimension larger.
pub fn sunflower_switch(points: &PointMultiset, t: &Subspace, s2: &Subspace) -> Result<PointMultiset> {
    if s2.dim() != t.dim() + 1 {
        return Err(Error::SwitchPrecondition(format!(
            "outer subspace has dimension {} but must have dimension {}",
            s2.dim(),
            t.dim() + 1
        )));
    }
    if !t.is_subspace_of(s2) {
        return Err(Error::SwitchPrecondition(
            "switched subspace is not contained in the outer subspace".into(),
        ));
    }
    let mut out = points.clone();
    for p in t.points() {
        if !out.remove_one(p) {
            return Err(Error::SwitchPrecondition(format!(
                "point {p:#x} of the switched subspace is missing from the set"
            )));
        }
    }
    for p in s2.points() {
        if t.contains(p) {
            continue;
        }
        if points.contains(p) {
            return Err(Error::SwitchPrecondition(format!(
                "affine point {p:#x} already lies in the set"
            )));
        }
        out.add(p, 1)?;
    }
    Ok(out)
}

/// Cone over `base` with a vertex flat of projective dimension
/// `vertex_dim` spanned by the new coordinates `base.ambient() ..=
/// base.ambient() + vertex_dim`.
///
/// The result contains `P + v` for every base point `P` and every vector
/// `v` of the vertex, and the vertex points themselves when
/// `include_vertex`. If the base is `2^a`-divisible (`a` maximal) the result
/// is checked to be `2^(a + vertex_dim + 1)`-divisible.
pub fn cone(base: &PointMultiset, vertex_dim: usize, include_vertex: bool) -> Result<PointMultiset> {
    if base.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let b = base.ambient();
    let ambient = b + vertex_dim + 1;
    if ambient > 64 {
        return Err(Error::InvalidParameter("cone ambient above 64".into()));
    }
    let vertex_gens: Vec<u64> = (b..ambient).map(|i| 1u64 << i).collect();
    let vertex = span(&vertex_gens);
    let mut out = PointMultiset::new(ambient);
    for (p, m) in base.iter() {
        for &v in &vertex {
            out.add(p ^ v, m)?;
        }
    }
    if include_vertex {
        for &v in &vertex[1..] {
            out.add(v, 1)?;
        }
    }
    let a = divisibility_exponent(base, 32)?;
    let target = a + vertex_dim as u32 + 1;
    if !is_divisible_pointset(&out, 1usize << target)? {
        return Err(Error::Divisibility(format!(
            "cone over a 2^{a}-divisible base of size {} with vertex dimension {vertex_dim} \
             ({} vertex) is not 2^{target}-divisible",
            base.size(),
            if include_vertex { "with" } else { "without" }
        )));
    }
    Ok(out)
}

/// Largest vector dimension of a subspace containing no point of the
/// multiset.
pub fn empty_subspace_max_dim(points: &PointMultiset) -> Result<usize> {
    let k = points.ambient();
    if k > 20 {
        return Err(Error::BudgetExceeded {
            what: format!("empty-subspace search in dimension {k}"),
            limit: 20,
        });
    }
    let free: Vec<u64> = (1u64..(1u64 << k)).filter(|&p| !points.contains(p)).collect();
    let mut best = 0;
    search_empty(points, &[], &free, k, &mut best);
    Ok(best)
}

fn search_empty(points: &PointMultiset, gens: &[u64], candidates: &[u64], k: usize, best: &mut usize) {
    *best = (*best).max(gens.len());
    if *best == k {
        return;
    }
    let current = span(gens);
    for (idx, &c) in candidates.iter().enumerate() {
        // the candidate list keeps only vectors whose coset avoids the set;
        // each new subspace is reached once via its ascending basis
        if gens.len() + 1 + rank_bound(&candidates[idx + 1..]) <= *best {
            break;
        }
        if current.iter().any(|&s| points.contains(s ^ c)) {
            continue;
        }
        let mut next_gens = gens.to_vec();
        next_gens.push(c);
        let ext = span(&next_gens);
        let rest: Vec<u64> = candidates[idx + 1..]
            .iter()
            .copied()
            .filter(|&x| !in_span(&reduced_basis(&next_gens), x) && ext.iter().all(|&s| !points.contains(s ^ x)))
            .collect();
        search_empty(points, &next_gens, &rest, k, best);
        if *best == k {
            return;
        }
    }
}

fn rank_bound(vectors: &[u64]) -> usize {
    rank_of(vectors)
}

/// Places `a` and `b` in `F_2^k` with disjoint supports and `span = F_2^k`.
///
/// The realizable range is `ka + kb - m ..= ka + kb` where `m` is the larger
/// of the two empty-subspace dimensions: the copies share a subspace of
/// dimension `ka + kb - k` that is point-free for one of them.
pub fn disjoint_embed(a: &PointMultiset, b: &PointMultiset, k: usize) -> Result<PointMultiset> {
    let (a, b) = (a.reduce_to_span(), b.reduce_to_span());
    let (ka, kb) = (a.ambient(), b.ambient());
    let ma = empty_subspace_max_dim(&a)?;
    let mb = empty_subspace_max_dim(&b)?;
    let m = ma.max(mb);
    if k > ka + kb || k + m < ka + kb {
        return Err(Error::InvalidParameter(format!(
            "dimension {k} outside the realizable range {}..={}",
            ka + kb - m,
            ka + kb
        )));
    }
    if k > 64 {
        return Err(Error::InvalidParameter("ambient above 64".into()));
    }
    let shared = ka + kb - k;
    // the set with the larger empty subspace supplies the shared part
    let (first, second) = if ma >= mb { (&a, &b) } else { (&b, &a) };
    let (k1, k2) = (first.ambient(), second.ambient());

    let w = empty_subspace_basis(first, shared)?;
    let first_basis = complete_basis(&w, k1);
    let first_coords = coordinate_maps(&first_basis, k1).expect("completed basis");
    let mut out = PointMultiset::new(k);
    for (p, mlt) in first.iter() {
        out.add(coordinates(&first_coords, p), mlt)?;
    }
    // second copy: e_0..e_{shared-1} of its own space go onto the shared
    // flat, the rest onto fresh coordinates k1..k-1
    let images: Vec<u64> = (0..k2)
        .map(|i| if i < shared { 1u64 << i } else { 1u64 << (k1 + i - shared) })
        .collect();
    let second_img = second.map_linear(&images, k)?;
    for (p, mlt) in second_img.iter() {
        if out.contains(p) {
            return Err(Error::InvalidParameter("embedding produced overlapping supports".into()));
        }
        out.add(p, mlt)?;
    }
    Ok(out)
}

/// A basis of some `dim`-dimensional subspace free of points of the set.
fn empty_subspace_basis(points: &PointMultiset, dim: usize) -> Result<Vec<u64>> {
    fn go(points: &PointMultiset, gens: &mut Vec<u64>, dim: usize, start: u64, top: u64) -> bool {
        if gens.len() == dim {
            return true;
        }
        let current = span(gens);
        for c in start..top {
            if in_span(&reduced_basis(gens), c) || current.iter().any(|&s| points.contains(s ^ c)) {
                continue;
            }
            gens.push(c);
            if go(points, gens, dim, c + 1, top) {
                return true;
            }
            gens.pop();
        }
        false
    }
    let mut gens = Vec::new();
    if go(points, &mut gens, dim, 1, 1u64 << points.ambient()) {
        Ok(gens)
    } else {
        Err(Error::InvalidParameter(format!("no point-free subspace of dimension {dim}")))
    }
}

/// Extends independent vectors to a basis of `F_2^k` with unit vectors.
pub fn complete_basis(partial: &[u64], k: usize) -> Vec<u64> {
    let mut out = partial.to_vec();
    for i in 0..k {
        let e = 1u64 << i;
        if !in_span(&reduced_basis(&out), e) {
            out.push(e);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{is_divisible, is_projective, weight_distribution};
    use crate::gf2::BitMatrix;
    use proptest::prelude::*;

    fn simplex_points(k: usize) -> PointMultiset {
        PointMultiset::from_points(k, 1..(1u64 << k)).unwrap()
    }

    fn affine_solid() -> PointMultiset {
        PointMultiset::from_points(4, (0..8u64).map(|x| 8 | x)).unwrap()
    }

    fn projective_basis(k: usize) -> PointMultiset {
        let mut pts: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
        pts.push(low_mask(k));
        PointMultiset::from_points(k, pts).unwrap()
    }

    #[test]
    fn dictionary_examples() {
        let c = LinearCode::from_columns(3, &(1..8).collect::<Vec<_>>()).unwrap();
        let k = code_to_points(&c).unwrap();
        assert_eq!(k.size(), 7);
        assert!(k.is_set() && k.is_spanning());
        let rep = LinearCode::from_columns(1, &[1, 1, 1, 1]).unwrap();
        let k = code_to_points(&rep).unwrap();
        assert_eq!(k.iter().collect::<Vec<_>>(), vec![(1, 4)]);
        assert!(matches!(points_to_code(&PointMultiset::new(3)), Err(Error::EmptyPointSet)));
    }

    #[test]
    fn non_spanning_reduced() {
        let k = PointMultiset::from_points(6, [0b000011, 0b000101, 0b000110]).unwrap();
        let c = points_to_code(&k).unwrap();
        assert_eq!((c.n(), c.k()), (3, 2));
    }

    #[test]
    fn hyperplane_weight_examples() {
        let s = simplex_points(3);
        for a in 1..8 {
            assert_eq!(hyperplane_weight(&s, a), 4);
        }
        let single = PointMultiset::from_points(3, [0b001]).unwrap();
        assert_eq!(hyperplane_weight(&single, 0b010), 0);
    }

    #[test]
    fn divisibility_examples() {
        assert!(is_divisible_pointset(&simplex_points(3), 4).unwrap());
        assert!(is_divisible_pointset(&affine_solid(), 4).unwrap());
        let plane = PointMultiset::from_points(4, 1..8u64).unwrap();
        let comp = complement(&plane).unwrap();
        assert_eq!(comp, affine_solid());
        assert!(is_divisible_pointset(&comp, 2).unwrap());
        assert!(complement(&simplex_points(4)).unwrap().is_empty());
    }

    #[test]
    fn complement_rejects_multisets() {
        let mut k = simplex_points(3);
        k.add(1, 1).unwrap();
        assert!(matches!(complement(&k), Err(Error::NotASet(2))));
    }

    #[test]
    fn tangent_switch_examples() {
        let b = projective_basis(4);
        let line = Subspace::new(4, &[0b0001, 0b0110]).unwrap();
        let out = tangent_switch(&b, &line).unwrap();
        assert_eq!(out.size(), 6);
        assert!(is_divisible_pointset(&out, 2).unwrap());
        assert!(out.is_spanning());

        let plane = PointMultiset::from_points(4, 1..8u64).unwrap();
        let comp = complement(&plane).unwrap();
        for a in 1..16u64 {
            for c in a + 1..16 {
                let l = Subspace::new(4, &[a, c]).unwrap();
                assert!(matches!(tangent_switch(&comp, &l), Err(Error::NotTangent(_))));
            }
        }
    }

    #[test]
    fn sunflower_switch_on_a_solid() {
        let solid = Subspace::new(8, &[1, 2, 4, 8]).unwrap().as_pointset();
        // a line spread of the solid: the GF(4)-points of PG(1,4)
        let lines = [[0b0001u64, 0b0010], [0b0100, 0b1000], [0b0101, 0b1010], [0b1001, 0b0111]];
        let mut k = solid.clone();
        for (i, l) in lines.iter().enumerate() {
            let t = Subspace::new(8, l).unwrap();
            let u = 1u64 << (4 + i);
            let s2 = Subspace::new(8, &[l[0], l[1], u]).unwrap();
            k = sunflower_switch(&k, &t, &s2).unwrap();
            assert_eq!(k.size(), 15 + i + 1);
            assert!(is_divisible_pointset(&k, 4).unwrap());
        }
        assert_eq!(k.size(), 19);
        let bad_t = Subspace::new(8, &[1 << 4, 1 << 5]).unwrap();
        let bad_s = Subspace::new(8, &[1 << 4, 1 << 5, 1 << 6]).unwrap();
        assert!(matches!(sunflower_switch(&solid, &bad_t, &bad_s), Err(Error::SwitchPrecondition(_))));
    }

    #[test]
    fn cone_examples() {
        // 7 points, 2-divisible, 7 = -1 mod 4: the cone with vertex is doubly even
        let c = cone(&projective_basis(6), 0, true).unwrap();
        assert_eq!((c.size(), c.ambient()), (15, 7));
        let code = points_to_code(&c).unwrap();
        assert!(is_projective(&code) && is_divisible(&code, 4).unwrap());

        let c = cone(&projective_basis(7), 0, false).unwrap();
        assert_eq!((c.size(), c.ambient()), (16, 8));
        let code = points_to_code(&c).unwrap();
        assert!(is_divisible(&code, 4).unwrap());
        assert_eq!(crate::codes::dual(&code).unwrap(), code);

        assert!(matches!(cone(&projective_basis(6), 0, false), Err(Error::Divisibility(_))));
    }

    #[test]
    fn cone_sizes_match_enumeration() {
        let base = projective_basis(6);
        for s in 0..3 {
            let c = cone(&base, s, true).unwrap();
            assert_eq!(c.size(), (1 << (s + 1)) * base.size() + (1 << (s + 1)) - 1);
            assert!(is_divisible_pointset(&c, 1 << (s + 2)).unwrap());
        }
    }

    #[test]
    fn disjoint_embedding_range() {
        let fano = simplex_points(3);
        let solid = affine_solid();
        assert_eq!(empty_subspace_max_dim(&fano).unwrap(), 0);
        assert_eq!(empty_subspace_max_dim(&solid).unwrap(), 3);
        for k in 4..=7 {
            let e = disjoint_embed(&fano, &solid, k).unwrap();
            assert_eq!((e.size(), e.rank()), (15, k));
            assert!(e.is_set());
            assert!(is_divisible_pointset(&e, 4).unwrap());
        }
        assert!(disjoint_embed(&fano, &solid, 3).is_err());
        assert!(disjoint_embed(&fano, &solid, 8).is_err());

        let two = disjoint_embed(&fano, &fano, 6).unwrap();
        assert_eq!(two.size(), 14);
        assert!(disjoint_embed(&fano, &fano, 5).is_err());
    }

    fn arb_pointset() -> impl Strategy<Value = PointMultiset> {
        (2usize..7).prop_flat_map(|k| {
            proptest::collection::vec((1u64..(1u64 << k), 1u32..3), 1..12)
                .prop_map(move |pts| {
                    let mut m = PointMultiset::new(k);
                    for (p, c) in pts {
                        m.add(p, c).unwrap();
                    }
                    m
                })
        })
    }

    proptest! {
        #[test]
        fn dictionary_consistency(k in arb_pointset(), delta in 1usize..9) {
            let code = points_to_code(&k).unwrap();
            prop_assert_eq!(is_divisible_pointset(&k, delta).unwrap(), is_divisible(&code, delta).unwrap());
        }

        #[test]
        fn hyperplane_weights_match_codewords(k in arb_pointset()) {
            let cols = k.columns();
            let gen = BitMatrix::from_columns(k.ambient(), &cols);
            let fast = hyperplane_weights(&k).unwrap();
            for a in 1u64..(1u64 << k.ambient()) {
                let mut word = 0usize;
                for j in 0..cols.len() {
                    let mut bit = false;
                    for i in 0..k.ambient() {
                        bit ^= (a >> i) & 1 == 1 && gen.get(i, j);
                    }
                    word += bit as usize;
                }
                prop_assert_eq!(hyperplane_weight(&k, a), word);
                prop_assert_eq!(fast[a as usize] as usize, word);
            }
        }

        #[test]
        fn round_trip_keeps_columns(cols in proptest::collection::btree_set(1u64..4096, 12..20)) {
            let cols: Vec<u64> = cols.into_iter().collect();
            let k = PointMultiset::from_points(12, cols.iter().copied()).unwrap();
            prop_assume!(k.is_spanning());
            let code = points_to_code(&k).unwrap();
            prop_assert!(is_projective(&code));
            let back = code_to_points(&code).unwrap();
            prop_assert_eq!(back.size(), cols.len());
            let w1 = weight_distribution(&code).unwrap();
            let w2 = weight_distribution(&points_to_code(&back).unwrap()).unwrap();
            prop_assert_eq!(w1, w2);
        }

        #[test]
        fn complement_preserves_evenness(k in 3usize..6, seed in any::<u64>()) {
            // random 2-divisible sets from tangent switches on a projective basis
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut set = projective_basis(k);
            for _ in 0..4 {
                let a = rng.gen_range(1..(1u64 << k));
                let b = rng.gen_range(1..(1u64 << k));
                if a == b { continue; }
                let l = Subspace::new(k, &[a, b]).unwrap();
                if let Ok(next) = tangent_switch(&set, &l) {
                    set = next;
                }
            }
            prop_assert!(is_divisible_pointset(&set, 2).unwrap());
            let c = complement(&set).unwrap();
            prop_assert!(c.is_empty() || is_divisible_pointset(&c, 2).unwrap());
            prop_assert_eq!(complement(&c).unwrap(), set);
        }
    }
}
