//! Named constructions of projective divisible codes.
//!
//! Families are parametrised by the divisibility exponent `r` (divisor
//! `2^r`). A projective `r`-flat has vector dimension `r + 1`; an affine
//! `(r+1)`-flat is the complement of a hyperplane in a projective
//! `(r+1)`-flat.

use std::fmt;
use std::str::FromStr;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::geometry::{cone, is_divisible_pointset, points_to_code, sunflower_switch, PointMultiset, Subspace};
use crate::gf2::{low_mask, BitMatrix, Gf2m};
use crate::textfmt::parse_matrix;

pub use crate::spreads::corollary2_spread;

/// The `[2^d - 1, d]` simplex code.
pub fn simplex(dim: usize) -> Result<LinearCode> {
    points_to_code(&simplex_points(dim)?)
}

/// All points of `PG(dim-1, 2)`.
pub fn simplex_points(dim: usize) -> Result<PointMultiset> {
    if dim == 0 || dim > 24 {
        return Err(Error::InvalidParameter(format!("simplex dimension {dim} out of range")));
    }
    PointMultiset::from_points(dim, 1..(1u64 << dim))
}

/// The `2^dim` points of an affine `dim`-flat in `F_2^(dim+1)`: vectors with
/// the last coordinate set.
pub fn affine_flat(dim: usize) -> Result<PointMultiset> {
    if dim == 0 || dim > 23 {
        return Err(Error::InvalidParameter(format!("affine dimension {dim} out of range")));
    }
    PointMultiset::from_points(dim + 1, (0..(1u64 << dim)).map(|x| x | (1u64 << dim)))
}

/// The `[n, n-1]` code of all even-weight words.
pub fn even_weight(n: usize) -> Result<LinearCode> {
    if !(3..=64).contains(&n) {
        return Err(Error::InvalidParameter(format!("even-weight length {n} out of range 3..=64")));
    }
    points_to_code(&projective_basis(n - 1)?)
}

/// `e_0, ..., e_{k-1}` and their sum.
pub fn projective_basis(k: usize) -> Result<PointMultiset> {
    if !(2..=63).contains(&k) {
        return Err(Error::InvalidParameter(format!("projective basis dimension {k} out of range")));
    }
    let mut pts: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
    pts.push(low_mask(k));
    PointMultiset::from_points(k, pts)
}

fn unit_span(ambient: usize, coords: impl IntoIterator<Item = usize>) -> Subspace {
    let gens: Vec<u64> = coords.into_iter().map(|i| 1u64 << i).collect();
    Subspace::new(ambient, &gens).expect("unit vectors are independent")
}

/// Which hyperplane of the second affine flat is at infinity relative to
/// the shared subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwoAffineVariant {
    /// the shared subspace lies at infinity for both flats
    A,
    /// the shared subspace lies at infinity only for the first flat
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Example19Variant {
    I,
    II,
    III,
}

impl FromStr for Example19Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "I" | "1" => Ok(Example19Variant::I),
            "ii" | "II" | "2" => Ok(Example19Variant::II),
            "iii" | "III" | "3" => Ok(Example19Variant::III),
            _ => Err(Error::InvalidParameter(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    ProjectiveFlat,
    AffineFlat,
    TwoFlats,
    /// projective flat plus a disjoint affine flat, `s` = dimension of the
    /// flat's intersection with the affine flat's hyperplane at infinity
    FlatPlusAffine { s: usize },
    /// seven flats through a common vertex, a cone over a projective basis
    /// of `PG(5,2)`
    SevenFlats,
    TwoAffine { k: usize, variant: TwoAffineVariant },
    /// cone over a projective basis of `PG(6,2)`, vertex removed
    EightFlats,
    /// cone over a line plus a projective basis of `PG(3,2)`, vertex removed
    LinePlusBasisCone,
    ThreeFlats { k: usize },
    TwoWeight45,
    Example19(Example19Variant),
    OvoidConcat,
}

impl Family {
    /// Looks a family up by [`Family::name`]. `s` and `k` are required by the
    /// families that take them; `variant` selects `a`/`b` for `two_affine` and
    /// `i`/`ii`/`iii` for `example19`.
    pub fn from_name(name: &str, s: Option<usize>, k: Option<usize>, variant: Option<&str>) -> Result<Self> {
        let need = |what: &str, v: Option<usize>| {
            v.ok_or_else(|| Error::InvalidParameter(format!("family {name} needs {what}")))
        };
        Ok(match name {
            "simplex" => Family::ProjectiveFlat,
            "affine" => Family::AffineFlat,
            "two_flats" => Family::TwoFlats,
            "flat_plus_affine" => Family::FlatPlusAffine { s: need("s", s)? },
            "seven_flats" => Family::SevenFlats,
            "two_affine" => {
                let variant = match variant.unwrap_or("a") {
                    "a" | "A" => TwoAffineVariant::A,
                    "b" | "B" => TwoAffineVariant::B,
                    other => {
                        return Err(Error::InvalidParameter(format!(
                            "two_affine variant must be a or b, got {other:?}"
                        )))
                    }
                };
                Family::TwoAffine { k: need("k", k)?, variant }
            }
            "eight_flats" => Family::EightFlats,
            "line_plus_basis_cone" => Family::LinePlusBasisCone,
            "three_flats" => Family::ThreeFlats { k: need("k", k)? },
            "two_weight_45" => Family::TwoWeight45,
            "example19" => Family::Example19(variant.unwrap_or("i").parse()?),
            "ovoid_concat" => Family::OvoidConcat,
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        })
    }

    /// The only `r` a fixture exists for, or 2 for the general families.
    pub fn default_r(&self) -> usize {
        match self {
            Family::TwoWeight45 | Family::OvoidConcat => 3,
            _ => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::ProjectiveFlat => "simplex",
            Family::AffineFlat => "affine",
            Family::TwoFlats => "two_flats",
            Family::FlatPlusAffine { .. } => "flat_plus_affine",
            Family::SevenFlats => "seven_flats",
            Family::TwoAffine { .. } => "two_affine",
            Family::EightFlats => "eight_flats",
            Family::LinePlusBasisCone => "line_plus_basis_cone",
            Family::ThreeFlats { .. } => "three_flats",
            Family::TwoWeight45 => "two_weight_45",
            Family::Example19(_) => "example19",
            Family::OvoidConcat => "ovoid_concat",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::FlatPlusAffine { s } => write!(f, "flat_plus_affine(s={s})"),
            Family::TwoAffine { k, variant } => write!(f, "two_affine(k={k},{variant:?})"),
            Family::ThreeFlats { k } => write!(f, "three_flats(k={k})"),
            Family::Example19(v) => write!(f, "example19({v:?})"),
            other => f.write_str(other.name()),
        }
    }
}

/// A family member with its declared parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CatalogEntry {
    pub family: Family,
    pub r: usize,
    pub expected_n: usize,
    pub expected_k: usize,
    pub expected_delta: usize,
}

impl CatalogEntry {
    pub fn new(family: Family, r: usize) -> Result<Self> {
        if !(1..=6).contains(&r) {
            return Err(Error::InvalidParameter(format!("r = {r} outside 1..=6")));
        }
        let bad = |what: String| Err(Error::InvalidParameter(what));
        let flat = (1usize << (r + 1)) - 1;
        let (n, k) = match family {
            Family::ProjectiveFlat => (flat, r + 1),
            Family::AffineFlat => (flat + 1, r + 2),
            Family::TwoFlats => (2 * flat, 2 * r + 2),
            Family::FlatPlusAffine { s } => {
                if s > r + 1 {
                    return bad(format!("s = {s} exceeds r + 1"));
                }
                (2 * flat + 1, 2 * r + 3 - s)
            }
            Family::SevenFlats => (2 * flat + 1, r + 5),
            Family::TwoAffine { k, variant } => {
                let max = if variant == TwoAffineVariant::A { 2 * r + 4 } else { 2 * r + 3 };
                if k < r + 3 || k > max {
                    return bad(format!("two_affine {variant:?} needs {}..={max}, got k = {k}", r + 3));
                }
                (2 * flat + 2, k)
            }
            Family::EightFlats => (2 * flat + 2, r + 6),
            Family::LinePlusBasisCone => (2 * flat + 2, r + 5),
            Family::ThreeFlats { k } => {
                if k < 2 * r + 2 || k > 3 * r + 3 {
                    return bad(format!("three_flats needs {}..={}, got k = {k}", 2 * r + 2, 3 * r + 3));
                }
                (3 * flat, k)
            }
            Family::TwoWeight45 => {
                if r != 3 {
                    return bad("two_weight_45 exists for r = 3 only".into());
                }
                (45, 8)
            }
            Family::Example19(v) => {
                if r != 2 {
                    return bad("example19 exists for r = 2 only".into());
                }
                (19, if v == Example19Variant::III { 8 } else { 7 })
            }
            Family::OvoidConcat => {
                if r != 3 {
                    return bad("ovoid_concat exists for r = 3 only".into());
                }
                (51, 8)
            }
        };
        Ok(CatalogEntry {
            family,
            r,
            expected_n: n,
            expected_k: k,
            expected_delta: 1 << r,
        })
    }
}

/// Every member of the bullet-list families for this `r`.
pub fn bullet_entries(r: usize) -> Result<Vec<CatalogEntry>> {
    let mut fams = vec![Family::ProjectiveFlat, Family::AffineFlat, Family::TwoFlats];
    fams.extend((0..=r + 1).map(|s| Family::FlatPlusAffine { s }));
    fams.push(Family::SevenFlats);
    for k in r + 3..=2 * r + 3 {
        fams.push(Family::TwoAffine { k, variant: TwoAffineVariant::A });
        fams.push(Family::TwoAffine { k, variant: TwoAffineVariant::B });
    }
    fams.push(Family::TwoAffine { k: 2 * r + 4, variant: TwoAffineVariant::A });
    fams.push(Family::EightFlats);
    fams.push(Family::LinePlusBasisCone);
    fams.extend((2 * r + 2..=3 * r + 3).map(|k| Family::ThreeFlats { k }));
    fams.into_iter().map(|f| CatalogEntry::new(f, r)).collect()
}

/// Bullet-list entries plus the fixtures that exist for this `r`.
pub fn all_entries(r: usize) -> Result<Vec<CatalogEntry>> {
    let mut out = bullet_entries(r)?;
    match r {
        2 => {
            for v in [Example19Variant::I, Example19Variant::II, Example19Variant::III] {
                out.push(CatalogEntry::new(Family::Example19(v), 2)?);
            }
        }
        3 => {
            out.push(CatalogEntry::new(Family::TwoWeight45, 3)?);
            out.push(CatalogEntry::new(Family::OvoidConcat, 3)?);
        }
        _ => {}
    }
    Ok(out)
}

/// Builds the point set and checks it against the declared parameters.
pub fn family(entry: &CatalogEntry) -> Result<PointMultiset> {
    let r = entry.r;
    let pts = match entry.family {
        Family::ProjectiveFlat => simplex_points(r + 1)?,
        Family::AffineFlat => affine_flat(r + 1)?,
        Family::TwoFlats => {
            let a = unit_span(2 * r + 2, 0..=r).as_pointset();
            a.union(&unit_span(2 * r + 2, r + 1..=2 * r + 1).as_pointset())
        }
        Family::FlatPlusAffine { s } => flat_plus_affine(r, s)?,
        Family::SevenFlats => vertex_cone(&projective_basis(6)?, r, true)?,
        Family::TwoAffine { k, variant } => two_affine(r, k, variant)?,
        Family::EightFlats => vertex_cone(&projective_basis(7)?, r, false)?,
        Family::LinePlusBasisCone => vertex_cone(&line_plus_basis()?, r, false)?,
        Family::ThreeFlats { k } => three_flats(r, k)?,
        Family::TwoWeight45 => two_weight_45()?,
        Family::Example19(v) => example19(v)?,
        Family::OvoidConcat => ovoid_points()?,
    };
    verify_entry(entry, &pts)?;
    Ok(pts)
}

fn verify_entry(entry: &CatalogEntry, pts: &PointMultiset) -> Result<()> {
    let (n, k) = (pts.size(), pts.rank());
    if !pts.is_set() || n != entry.expected_n || k != entry.expected_k || pts.ambient() != k {
        return Err(Error::InvalidParameter(format!(
            "{} built [{n},{k}] (set: {}), expected [{},{}]",
            entry.family,
            pts.is_set(),
            entry.expected_n,
            entry.expected_k
        )));
    }
    if !is_divisible_pointset(pts, entry.expected_delta)? {
        return Err(Error::Divisibility(format!(
            "{} is not {}-divisible",
            entry.family, entry.expected_delta
        )));
    }
    Ok(())
}

/// Cone with a vertex of vector dimension `r - 1` on the coordinates after
/// the base; for `r = 1` the base itself.
fn vertex_cone(base: &PointMultiset, r: usize, include_vertex: bool) -> Result<PointMultiset> {
    if r == 1 {
        Ok(base.clone())
    } else {
        cone(base, r - 2, include_vertex)
    }
}

fn flat_plus_affine(r: usize, s: usize) -> Result<PointMultiset> {
    // closure of the affine flat: coordinates 0..=r+1, infinity: x_{r+1} = 0
    let k = 2 * r + 3 - s;
    let affine = PointMultiset::from_points(k, (0..(1u64 << (r + 1))).map(|x| x | (1u64 << (r + 1))))?;
    // the flat shares e_0..e_{s-1} with the hyperplane at infinity
    let flat = unit_span(k, (0..s).chain(r + 2..k));
    Ok(affine.union(&flat.as_pointset()))
}

fn two_affine(r: usize, k: usize, variant: TwoAffineVariant) -> Result<PointMultiset> {
    let shared = 2 * r + 4 - k;
    // first closure: coordinates 0..=r+1, infinity x_{r+1} = 0, containing
    // the shared part e_0..e_{shared-1}
    let first = unit_span(k, 0..=r + 1);
    let second = unit_span(k, (0..shared).chain(r + 2..k));
    let a1 = first.points().into_iter().filter(|&p| (p >> (r + 1)) & 1 == 1);
    let a2: Vec<u64> = match variant {
        TwoAffineVariant::A => second.points().into_iter().filter(|&p| (p >> (k - 1)) & 1 == 1).collect(),
        TwoAffineVariant::B => second.points().into_iter().filter(|&p| p & 1 == 1).collect(),
    };
    PointMultiset::from_points(k, a1.chain(a2))
}

fn line_plus_basis() -> Result<PointMultiset> {
    let mut pts = vec![0b000001u64, 0b000010, 0b000011];
    pts.extend([0b000100u64, 0b001000, 0b010000, 0b100000, 0b111100]);
    PointMultiset::from_points(6, pts)
}

fn three_flats(r: usize, k: usize) -> Result<PointMultiset> {
    let d = 3 * r + 3 - k;
    let s1 = unit_span(k, 0..=r);
    let s2 = unit_span(k, r + 1..=2 * r + 1);
    let gens: Vec<u64> = (0..=r)
        .map(|i| {
            if i < d {
                (1u64 << i) | (1u64 << (r + 1 + i))
            } else {
                1u64 << (2 * r + 2 + i - d)
            }
        })
        .collect();
    let s3 = Subspace::new(k, &gens)?;
    let mut out = s1.as_pointset().union(&s2.as_pointset());
    for p in s3.points() {
        out.add(p, 1)?;
    }
    Ok(out)
}

/// A projective basis `P_1..P_9` of `PG(7,2)` and the third points of the
/// 36 lines `P_i P_j`.
pub fn two_weight_45() -> Result<PointMultiset> {
    let mut basis: Vec<u64> = (0..8).map(|i| 1u64 << i).collect();
    basis.push(0xff);
    let mut pts = basis.clone();
    for i in 0..9 {
        for j in i + 1..9 {
            pts.push(basis[i] ^ basis[j]);
        }
    }
    PointMultiset::from_points(8, pts)
}

/// Binary lines of `PG(1,4)` in `F_2^4`, one per point of the projective
/// line over `GF(4)`, in the order `(1,0), (0,1), (1,1), (1,w), (1,w^2)`.
fn pg1_4_line_spread() -> Result<Vec<Subspace>> {
    let f = Gf2m::new(2)?;
    let reps: [(u32, u32); 5] = [(1, 0), (0, 1), (1, 1), (1, 2), (1, 3)];
    reps.iter()
        .map(|&(a, b)| {
            let gens: Vec<u64> = [1u32, 2]
                .iter()
                .map(|&l| (f.mul(l, a) as u64) | ((f.mul(l, b) as u64) << 2))
                .collect();
            Subspace::new(4, &gens)
        })
        .collect()
}

/// Three doubly-even projective 19-point sets: a solid of `PG(7,2)` with
/// four lines of a spread switched into affine planes. The planes, seen
/// from the solid, form (i) a quadrangle, (ii) a line plus a point,
/// (iii) four points in general position.
pub fn example19(variant: Example19Variant) -> Result<PointMultiset> {
    let directions: [u64; 4] = match variant {
        Example19Variant::I => [1 << 4, 1 << 5, 1 << 6, (1 << 4) | (1 << 5) | (1 << 6)],
        Example19Variant::II => [1 << 4, 1 << 5, (1 << 4) | (1 << 5), 1 << 6],
        Example19Variant::III => [1 << 4, 1 << 5, 1 << 6, 1 << 7],
    };
    let lines: Vec<Subspace> = pg1_4_line_spread()?
        .into_iter()
        .map(|l| Subspace::new(8, l.basis()))
        .collect::<Result<_>>()?;
    let mut k = unit_span(8, 0..4).as_pointset();
    for (line, &u) in lines.iter().zip(directions.iter()) {
        let mut gens = line.basis().to_vec();
        gens.push(u);
        k = sunflower_switch(&k, line, &Subspace::new(8, &gens)?)?;
    }
    Ok(k.reduce_to_span())
}

/// Binary expansion of `lambda * p` for `p` over `GF(2^e)`: coordinate `i`
/// occupies bits `i*e .. i*e + e`.
fn expand(f: &Gf2m, p: &[u32], lambda: u32) -> u64 {
    let e = f.m;
    p.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &x)| acc | ((f.mul(lambda, x) as u64) << (i * e)))
}

/// Concatenation of a code over `GF(2^e)`, given by its projective points,
/// with the `[2^e - 1, e]` simplex code, as a binary point set. Every outer
/// weight `w` becomes `2^(e-1) w`, so for a `2^a`-divisible outer code the
/// result is checked to be `2^(a+e-1)`-divisible.
pub fn concatenate_points(outer: &[Vec<u32>], e: usize) -> Result<PointMultiset> {
    if !(1..=4).contains(&e) {
        return Err(Error::InvalidParameter(format!("inner degree {e} outside 1..=4")));
    }
    let m = outer.first().map_or(0, |p| p.len());
    if outer.is_empty() || m == 0 || outer.iter().any(|p| p.len() != m) {
        return Err(Error::EmptyPointSet);
    }
    if m * e > 24 {
        return Err(Error::BudgetExceeded {
            what: "concatenation ambient dimension".into(),
            limit: 24,
        });
    }
    let f = Gf2m::new(e)?;
    if outer.iter().flatten().any(|&x| x as usize >= f.size()) || outer.iter().any(|p| p.iter().all(|&x| x == 0)) {
        return Err(Error::InvalidParameter("outer point outside GF(2^e)^m or zero".into()));
    }
    let a = outer_divisibility_exponent(&f, outer)?;
    let mut pts = PointMultiset::new(m * e);
    for p in outer {
        for lambda in 1..f.size() as u32 {
            pts.add(expand(&f, p, lambda), 1)?;
        }
    }
    let target = 1usize << (a + e as u32 - 1);
    if !is_divisible_pointset(&pts, target)? {
        return Err(Error::Divisibility(format!("concatenation is not {target}-divisible")));
    }
    Ok(pts)
}

pub fn concatenate(outer: &[Vec<u32>], e: usize) -> Result<LinearCode> {
    points_to_code(&concatenate_points(outer, e)?)
}

/// 2-adic valuation of the gcd of all outer codeword weights.
fn outer_divisibility_exponent(f: &Gf2m, outer: &[Vec<u32>]) -> Result<u32> {
    let m = outer[0].len();
    let q = f.size();
    let total = q.checked_pow(m as u32).filter(|&t| t <= 1 << 22).ok_or(Error::BudgetExceeded {
        what: "outer weight enumeration".into(),
        limit: 1 << 22,
    })?;
    let mut exp = 32u32;
    let mut a = vec![0u32; m];
    for idx in 1..total {
        let mut t = idx;
        for x in a.iter_mut() {
            *x = (t % q) as u32;
            t /= q;
        }
        let w = outer
            .iter()
            .filter(|p| p.iter().zip(&a).fold(0u32, |acc, (&x, &y)| acc ^ f.mul(x, y)) != 0)
            .count();
        if w != 0 {
            exp = exp.min(w.trailing_zeros());
        }
    }
    Ok(exp)
}

/// Normalised points (first nonzero coordinate 1) of `PG(m-1, 2^e)`.
pub fn projective_points(e: usize, m: usize) -> Result<Vec<Vec<u32>>> {
    let q = 1usize << e;
    let mut out = Vec::new();
    for lead in 0..m {
        let free = m - lead - 1;
        for idx in 0..q.pow(free as u32) {
            let mut p = vec![0u32; m];
            p[lead] = 1;
            let mut t = idx;
            for x in p.iter_mut().skip(lead + 1) {
                *x = (t % q) as u32;
                t /= q;
            }
            out.push(p);
        }
    }
    Ok(out)
}

/// The elliptic quadric `x0 x1 + x2^2 + x2 x3 + w x3^2 = 0` in `PG(3,4)`.
pub fn ovoid() -> Result<Vec<Vec<u32>>> {
    let f = Gf2m::new(2)?;
    let w = 2u32;
    let q = |p: &[u32]| f.mul(p[0], p[1]) ^ f.mul(p[2], p[2]) ^ f.mul(p[2], p[3]) ^ f.mul(w, f.mul(p[3], p[3]));
    Ok(projective_points(2, 4)?.into_iter().filter(|p| q(p) == 0).collect())
}

pub fn ovoid_points() -> Result<PointMultiset> {
    concatenate_points(&ovoid()?, 2)
}

/// The `[51, 8]` triply-even projective code.
pub fn ovoid_concat() -> Result<LinearCode> {
    points_to_code(&ovoid_points()?)
}

/// Hyperoval of `PG(2,8)`: the conic `(1, t, t^2)`, `(0,0,1)` and its
/// nucleus `(0,1,0)`.
pub fn hyperoval8() -> Result<Vec<Vec<u32>>> {
    let f = Gf2m::new(3)?;
    let mut pts: Vec<Vec<u32>> = (0..8u32).map(|t| vec![1, t, f.mul(t, t)]).collect();
    pts.push(vec![0, 0, 1]);
    pts.push(vec![0, 1, 0]);
    Ok(pts)
}

/// Successive sunflower switches of `subspaces` (each contained in the
/// set), each into a fresh coordinate. Returns the set after every step.
pub fn switch_chain(start: &PointMultiset, subspaces: &[Subspace]) -> Result<Vec<PointMultiset>> {
    let ambient = start.ambient() + subspaces.len();
    if ambient > 64 {
        return Err(Error::InvalidParameter("switch chain ambient above 64".into()));
    }
    let mut k = start.lift(ambient);
    let mut out = Vec::with_capacity(subspaces.len());
    for (i, t) in subspaces.iter().enumerate() {
        let t = Subspace::new(ambient, t.basis())?;
        let mut gens = t.basis().to_vec();
        gens.push(1u64 << (start.ambient() + i));
        k = sunflower_switch(&k, &t, &Subspace::new(ambient, &gens)?)?;
        out.push(k.reduce_to_span());
    }
    Ok(out)
}

/// Subspaces `{lambda p}` of the binary expansion, one per outer point.
fn field_planes(outer: &[Vec<u32>], e: usize) -> Result<Vec<Subspace>> {
    let f = Gf2m::new(e)?;
    let m = outer[0].len();
    outer
        .iter()
        .map(|p| {
            let gens: Vec<u64> = (0..e).map(|i| expand(&f, p, 1 << i)).collect();
            Subspace::new(m * e, &gens)
        })
        .collect()
}

/// A point set certifying that some length is realizable.
#[derive(Clone, Debug)]
pub struct Seed {
    pub n: usize,
    pub points: PointMultiset,
    pub origin: String,
}

/// Explicit constructions of projective `2^r`-divisible point sets, enough
/// for the additive closure to cover every realizable length known to us.
/// Each seed is verified before it is returned.
pub fn length_seeds(r: usize) -> Result<Vec<Seed>> {
    let mut seeds = Vec::new();
    let mut push = |points: PointMultiset, origin: String| {
        seeds.push(Seed {
            n: points.size(),
            points,
            origin,
        })
    };
    match r {
        1 => {
            for n in 3..=5 {
                push(projective_basis(n - 1)?, format!("projective basis of PG({},2)", n - 2));
            }
        }
        2 => {
            push(simplex_points(3)?, "simplex".into());
            push(affine_flat(3)?, "affine".into());
            let solid = simplex_points(4)?;
            push(solid.clone(), "solid".into());
            for (i, k) in switch_chain(&solid, &pg1_4_line_spread()?)?.into_iter().enumerate() {
                push(k, format!("solid with {} spread lines switched", i + 1));
            }
        }
        3 => {
            for entry in [
                CatalogEntry::new(Family::ProjectiveFlat, 3)?,
                CatalogEntry::new(Family::AffineFlat, 3)?,
                CatalogEntry::new(Family::TwoFlats, 3)?,
                CatalogEntry::new(Family::FlatPlusAffine { s: 0 }, 3)?,
                CatalogEntry::new(Family::TwoAffine { k: 10, variant: TwoAffineVariant::A }, 3)?,
                CatalogEntry::new(Family::ThreeFlats { k: 8 }, 3)?,
                CatalogEntry::new(Family::OvoidConcat, 3)?,
            ] {
                push(family(&entry)?, entry.family.to_string());
            }
            let three = family(&CatalogEntry::new(Family::ThreeFlats { k: 8 }, 3)?)?;
            let planes = [
                Subspace::new(8, &[1 << 0, 1 << 1, 1 << 2])?,
                Subspace::new(8, &[1 << 4, 1 << 5, 1 << 6])?,
                Subspace::new(8, &[(1 << 0) | (1 << 4), (1 << 1) | (1 << 5), (1 << 2) | (1 << 6)])?,
            ];
            for (i, k) in switch_chain(&three, &planes)?.into_iter().enumerate() {
                push(k, format!("three solids with {} planes switched", i + 1));
            }
            for n in [49, 50] {
                push(search_fixture(n)?, format!("search fixture {n}"));
            }
            let line8 = projective_points(3, 2)?;
            let pg5 = concatenate_points(&line8, 3)?;
            push(pg5.clone(), "PG(5,2) as PG(1,8)".into());
            for (i, k) in switch_chain(&pg5, &field_planes(&line8, 3)?)?.into_iter().enumerate() {
                push(k, format!("PG(5,2) with {} spread planes switched", i + 1));
            }
            let oval = hyperoval8()?;
            let hyper = concatenate_points(&oval, 3)?;
            push(hyper.clone(), "hyperoval of PG(2,8) concatenated".into());
            for (i, k) in switch_chain(&hyper, &field_planes(&oval, 3)?)?.into_iter().enumerate() {
                push(k, format!("hyperoval set with {} planes switched", i + 1));
            }
        }
        _ => {
            return Err(Error::InvalidParameter(format!("no seed list for r = {r}")));
        }
    }
    let delta = 1usize << r;
    for s in &seeds {
        if !s.points.is_set() || !is_divisible_pointset(&s.points, delta)? {
            return Err(Error::Divisibility(format!("seed {} failed verification", s.origin)));
        }
    }
    Ok(seeds)
}

/// A projective 8-divisible 49-set in `PG(7,2)` found by integer
/// programming over the hyperplane-weight constraints.
pub const SEARCH_FIXTURE_49: [u64; 49] = [
    1, 2, 4, 7, 8, 16, 17, 23, 25, 30, 31, 32, 38, 64, 69, 70, 74, 75, 76, 83, 88, 93, 94, 121, 127,
    128, 134, 167, 168, 169, 174, 177, 184, 187, 189, 190, 191, 217, 223, 224, 225, 228, 230, 231,
    234, 242, 243, 245, 252,
];

/// A projective 8-divisible 50-set in `PG(7,2)`: ten orbits of the order-5
/// subgroup of a Singer cycle of `GF(256)` (modulus `x^8+x^4+x^3+x^2+1`).
pub const SEARCH_FIXTURE_50: [u64; 50] = [
    2, 6, 19, 20, 21, 24, 43, 46, 48, 49, 53, 57, 58, 60, 64, 75, 89, 92, 98, 99, 100, 111, 115, 116,
    125, 126, 129, 130, 133, 136, 167, 168, 181, 182, 185, 186, 190, 191, 206, 207, 208, 223, 240,
    242, 243, 244, 247, 248, 249, 253,
];

pub fn search_fixture(n: usize) -> Result<PointMultiset> {
    match n {
        49 => PointMultiset::from_points(8, SEARCH_FIXTURE_49),
        50 => PointMultiset::from_points(8, SEARCH_FIXTURE_50),
        _ => Err(Error::InvalidParameter(format!("no search fixture of size {n}"))),
    }
}

const EXAMPLE2_FIRST: &str = "15 7
111100000000000
110011000000000
110000110000000
110000001100000
110000000011000
110000000000110
101010101010101
";

const EXAMPLE2_SECOND: &str = "16 8
1111000000000000
1100110000000000
1100001100000000
1100000011000000
1100000000110000
1100000000001100
1100000000000011
1010101010101010
";

/// The `[15,7]` cone over a projective basis of `PG(5,2)`, vertex included.
pub fn example2_first() -> BitMatrix {
    parse_matrix(EXAMPLE2_FIRST).expect("fixture parses").matrix
}

/// The self-dual `[16,8]` cone over a projective basis of `PG(6,2)`.
pub fn example2_second() -> BitMatrix {
    parse_matrix(EXAMPLE2_SECOND).expect("fixture parses").matrix
}
