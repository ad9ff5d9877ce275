//! Partial spreads and their hole sets.

use rand::Rng;

use crate::codes::{is_divisible, is_projective, LinearCode};
use crate::error::{Error, Result};
use crate::geometry::{points_to_code, PointMultiset, Subspace};
use crate::gf2::field_rep;

/// Pairwise trivially intersecting `r`-dimensional subspaces of `F_2^v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSpread {
    pub v: usize,
    pub r: usize,
    pub members: Vec<Subspace>,
}

impl PartialSpread {
    pub fn new(v: usize, r: usize) -> Self {
        PartialSpread {
            v,
            r,
            members: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Member dimensions are `r` and every pair meets trivially.
pub fn validate(spread: &PartialSpread) -> bool {
    let ok_dims = spread
        .members
        .iter()
        .all(|m| m.dim() == spread.r && m.ambient() == spread.v);
    ok_dims
        && spread.members.iter().enumerate().all(|(i, a)| {
            spread.members[i + 1..]
                .iter()
                .all(|b| a.intersects_trivially(b))
        })
}

/// Points of `PG(v-1, 2)` covered by no member.
pub fn holes(spread: &PartialSpread) -> Result<PointMultiset> {
    if !validate(spread) {
        return Err(Error::InvalidSpread("members overlap or have the wrong dimension".into()));
    }
    if spread.v > 24 {
        return Err(Error::BudgetExceeded {
            what: format!("hole enumeration in dimension {}", spread.v),
            limit: 24,
        });
    }
    let mut covered = vec![false; 1usize << spread.v];
    for m in &spread.members {
        for p in m.points() {
            covered[p as usize] = true;
        }
    }
    PointMultiset::from_points(spread.v, (1u64..(1u64 << spread.v)).filter(|&p| !covered[p as usize]))
}

pub fn hole_code(spread: &PartialSpread) -> Result<LinearCode> {
    let h = holes(spread)?;
    if h.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    points_to_code(&h)
}

/// Outcome of checking the hole-code statement on one spread.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop1Report {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub projective: bool,
    pub divisible: bool,
    pub length_formula: bool,
    pub dimension_bound: bool,
}

impl Prop1Report {
    pub fn all_pass(&self) -> bool {
        self.projective && self.divisible && self.length_formula && self.dimension_bound
    }

    /// `(assertion, passed)` in a fixed order.
    pub fn assertions(&self) -> [(&'static str, bool); 4] {
        [
            ("projective", self.projective),
            ("divisible", self.divisible),
            ("length formula", self.length_formula),
            ("dimension bound", self.dimension_bound),
        ]
    }
}

/// The hole code is projective, `2^(r-1)`-divisible, has length
/// `2^v - 1 - |S| (2^r - 1)` and dimension at most `v`.
pub fn prop1_check(spread: &PartialSpread) -> Result<Prop1Report> {
    let code = hole_code(spread)?;
    let delta = 1usize << (spread.r - 1);
    let expected_n = (1usize << spread.v) - 1 - spread.len() * ((1usize << spread.r) - 1);
    Ok(Prop1Report {
        n: code.n(),
        k: code.k(),
        delta,
        projective: is_projective(&code),
        divisible: is_divisible(&code, delta)?,
        length_formula: code.n() == expected_n,
        dimension_bound: code.k() <= spread.v,
    })
}

fn check_params(v: usize, r: usize) -> Result<()> {
    if r < 2 || v < 2 * r + 1 || v % r != 1 {
        return Err(Error::InvalidParameter(format!(
            "need r >= 2, v >= 2r+1 and v = 1 mod r (got v={v}, r={r})"
        )));
    }
    Ok(())
}

/// `2^(v-r) + 2^(v-2r) + ... + 2^(r+1) + 1`.
pub fn max_size(v: usize, r: usize) -> Result<u64> {
    check_params(v, r)?;
    let mut total = 1u64;
    let mut e = v - r;
    while e > r {
        total += 1u64 << e;
        e -= r;
    }
    Ok(total)
}

/// Maximum partial spread built from a matrix model of `GF(2^(v-r))`: the
/// column spaces of `[I_r; A]` with `A` truncated to its first `r`
/// columns, then recursively a spread of the last `v-r` coordinates, ending
/// with the span of the last `r` coordinates.
pub fn corollary2_spread(v: usize, r: usize) -> Result<PartialSpread> {
    check_params(v, r)?;
    if v > 24 {
        return Err(Error::BudgetExceeded {
            what: format!("spread construction in dimension {v}"),
            limit: 24,
        });
    }
    let mut spread = PartialSpread::new(v, r);
    let mut offset = 0;
    let mut width = v;
    while width > r + 1 {
        let rest = width - r;
        let rep = field_rep(rest)?;
        for a in &rep.elements {
            let gens: Vec<u64> = (0..r)
                .map(|j| {
                    let col = a.column_mask(j);
                    (1u64 << (offset + j)) | (col << (offset + r))
                })
                .collect();
            spread.members.push(Subspace::new(v, &gens)?);
        }
        offset += r;
        width = rest;
    }
    // width == r + 1: the last r coordinates
    let gens: Vec<u64> = (v - r..v).map(|i| 1u64 << i).collect();
    spread.members.push(Subspace::new(v, &gens)?);
    Ok(spread)
}

/// Adds random `r`-subspaces disjoint from the current members until
/// `attempts` consecutive draws fail. Used to produce non-extremal spreads.
pub fn random_greedy_spread<R: Rng>(v: usize, r: usize, rng: &mut R, attempts: usize) -> Result<PartialSpread> {
    if r == 0 || r > v || v > 24 {
        return Err(Error::InvalidParameter(format!("bad spread parameters v={v}, r={r}")));
    }
    let mut spread = PartialSpread::new(v, r);
    let mut covered = vec![false; 1usize << v];
    let mut misses = 0;
    while misses < attempts {
        let gens: Vec<u64> = (0..r).map(|_| rng.gen_range(1u64..(1u64 << v))).collect();
        let Ok(s) = Subspace::new(v, &gens) else {
            misses += 1;
            continue;
        };
        let pts = s.points();
        if pts.iter().any(|&p| covered[p as usize]) {
            misses += 1;
            continue;
        }
        for p in pts {
            covered[p as usize] = true;
        }
        spread.members.push(s);
        misses = 0;
    }
    Ok(spread)
}
