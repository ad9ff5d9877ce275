//! Power-moment feasibility for projective divisible codes.
//!
//! Unknowns are the weight counts `A_i` for `i` a positive multiple of
//! `delta`. The first three binary power moments of a projective code
//! (dual distance at least 3) give equalities and the fourth gives an
//! inequality because the number of dual words of weight 3 is nonnegative.
//! Feasibility over the rationals is decided by Gaussian elimination of the
//! equalities followed by Fourier-Motzkin elimination. Every derived row
//! carries its multipliers over the original rows, so an infeasible system
//! comes with a Farkas certificate that can be checked on its own.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    Eq,
    /// `coeffs . x <= rhs`
    Le,
}

#[derive(Clone, Debug)]
pub struct Row {
    pub label: String,
    pub kind: RowKind,
    pub coeffs: Vec<Q>,
    pub rhs: Q,
}

/// The moment system of a putative projective `delta`-divisible `[n,k]` code.
#[derive(Clone, Debug)]
pub struct MomentSystem {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    /// weights `i` carrying an unknown `A_i`
    pub weights: Vec<usize>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MomentOptions {
    /// Adds `A_n <= 1`. Off by default so the system is exactly the four
    /// moment relations.
    pub all_ones_bound: bool,
}

fn q(x: impl Into<BigInt>) -> Q {
    Q::from_integer(x.into())
}

fn pow2(e: i64) -> Q {
    if e >= 0 {
        q(BigInt::one() << e as usize)
    } else {
        Q::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

impl MomentSystem {
    pub fn new(n: usize, k: usize, delta: usize, opts: MomentOptions) -> Self {
        let weights: Vec<usize> = (1..=n / delta.max(1)).map(|j| j * delta).collect();
        let nq = q(n as u64);
        let ki = k as i64;
        let power_row = |p: u32| weights.iter().map(|&i| q((i as u64).pow(p))).collect::<Vec<_>>();
        let mut rows = vec![
            Row {
                label: "sum A_i = 2^k - 1".into(),
                kind: RowKind::Eq,
                coeffs: power_row(0),
                rhs: pow2(ki) - Q::one(),
            },
            Row {
                label: "sum i A_i = 2^(k-1) n".into(),
                kind: RowKind::Eq,
                coeffs: power_row(1),
                rhs: pow2(ki - 1) * &nq,
            },
            Row {
                label: "sum i^2 A_i = 2^(k-2) n (n+1)".into(),
                kind: RowKind::Eq,
                coeffs: power_row(2),
                rhs: pow2(ki - 2) * &nq * (&nq + Q::one()),
            },
            Row {
                label: "sum i^3 A_i <= 2^(k-3) n^2 (n+3)".into(),
                kind: RowKind::Le,
                coeffs: power_row(3),
                rhs: pow2(ki - 3) * &nq * &nq * (&nq + q(3)),
            },
        ];
        for (j, &i) in weights.iter().enumerate() {
            let mut c = vec![Q::zero(); weights.len()];
            c[j] = -Q::one();
            rows.push(Row {
                label: format!("A_{i} >= 0"),
                kind: RowKind::Le,
                coeffs: c,
                rhs: Q::zero(),
            });
        }
        if opts.all_ones_bound && n.is_multiple_of(delta) && n > 0 {
            let mut c = vec![Q::zero(); weights.len()];
            c[weights.len() - 1] = Q::one();
            rows.push(Row {
                label: format!("A_{n} <= 1"),
                kind: RowKind::Le,
                coeffs: c,
                rhs: Q::one(),
            });
        }
        MomentSystem {
            n,
            k,
            delta,
            weights,
            rows,
        }
    }

    /// Whether `counts` (`A_i` per entry of `weights`) satisfies every row.
    pub fn satisfied_by(&self, counts: &[Q]) -> bool {
        self.rows.iter().all(|r| {
            let lhs: Q = r.coeffs.iter().zip(counts).map(|(a, x)| a * x).sum();
            match r.kind {
                RowKind::Eq => lhs == r.rhs,
                RowKind::Le => lhs <= r.rhs,
            }
        })
    }
}

/// Multipliers over the rows of a [`MomentSystem`] whose combination reads
/// `0 <= negative` (or `0 = nonzero`).
#[derive(Clone, Debug)]
pub struct Certificate {
    pub multipliers: Vec<Q>,
    pub labels: Vec<String>,
}

impl Certificate {
    /// Independent check: `y >= 0` on inequality rows, `y^T A = 0` and the
    /// combined right-hand side contradicts.
    pub fn verify(&self, system: &MomentSystem) -> bool {
        if self.multipliers.len() != system.rows.len() {
            return false;
        }
        let m = system.weights.len();
        let mut coeffs = vec![Q::zero(); m];
        let mut rhs = Q::zero();
        let mut has_eq_only = true;
        for (y, r) in self.multipliers.iter().zip(&system.rows) {
            if y.is_zero() {
                continue;
            }
            if r.kind == RowKind::Le {
                if y.is_negative() {
                    return false;
                }
                has_eq_only = false;
            }
            for (c, a) in coeffs.iter_mut().zip(&r.coeffs) {
                *c += y * a;
            }
            rhs += y * &r.rhs;
        }
        if !coeffs.iter().all(Zero::is_zero) {
            return false;
        }
        if has_eq_only {
            !rhs.is_zero()
        } else {
            rhs.is_negative()
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (y, l) in self.multipliers.iter().zip(&self.labels) {
            if !y.is_zero() {
                writeln!(f, "  {y:>12} x [{l}]")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub enum LpOutcome {
    Feasible,
    Infeasible(Certificate),
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible)
    }
}

#[derive(Clone)]
struct Derived {
    coeffs: Vec<Q>,
    rhs: Q,
    /// multipliers over the original rows
    combo: Vec<Q>,
}

impl Derived {
    fn scale(&mut self, s: &Q) {
        for c in self.coeffs.iter_mut().chain(self.combo.iter_mut()) {
            *c *= s;
        }
        self.rhs *= s;
    }

    fn add_scaled(&mut self, other: &Derived, s: &Q) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * s;
        }
        for (a, b) in self.combo.iter_mut().zip(&other.combo) {
            *a += b * s;
        }
        self.rhs += &other.rhs * s;
    }

    /// Scales so the first nonzero coefficient has absolute value 1.
    fn normalise(&mut self) {
        if let Some(c) = self.coeffs.iter().find(|c| !c.is_zero()) {
            let s = Q::one() / c.abs();
            self.scale(&s);
        }
    }
}

fn certificate(system: &MomentSystem, row: &Derived) -> Certificate {
    Certificate {
        multipliers: row.combo.clone(),
        labels: system.rows.iter().map(|r| r.label.clone()).collect(),
    }
}

/// Decides the system exactly.
pub fn solve(system: &MomentSystem) -> LpOutcome {
    let m = system.rows.len();
    let unit = |i: usize| {
        let mut c = vec![Q::zero(); m];
        c[i] = Q::one();
        c
    };
    let mut eqs: Vec<Derived> = Vec::new();
    let mut les: Vec<Derived> = Vec::new();
    for (i, r) in system.rows.iter().enumerate() {
        let d = Derived {
            coeffs: r.coeffs.clone(),
            rhs: r.rhs.clone(),
            combo: unit(i),
        };
        match r.kind {
            RowKind::Eq => eqs.push(d),
            RowKind::Le => les.push(d),
        }
    }

    // Gaussian elimination of the equalities.
    while let Some(mut e) = eqs.pop() {
        let Some(var) = e.coeffs.iter().position(|c| !c.is_zero()) else {
            if !e.rhs.is_zero() {
                return LpOutcome::Infeasible(certificate(system, &e));
            }
            continue;
        };
        let s = Q::one() / &e.coeffs[var];
        e.scale(&s);
        for other in eqs.iter_mut().chain(les.iter_mut()) {
            let c = other.coeffs[var].clone();
            if !c.is_zero() {
                other.add_scaled(&e, &-c);
            }
        }
    }

    // Fourier-Motzkin on the inequalities.
    loop {
        let mut trivial = Vec::new();
        les.retain(|r| {
            if r.coeffs.iter().all(Zero::is_zero) {
                trivial.push(r.clone());
                false
            } else {
                true
            }
        });
        if let Some(bad) = trivial.iter().find(|r| r.rhs.is_negative()) {
            return LpOutcome::Infeasible(certificate(system, bad));
        }
        if les.is_empty() {
            return LpOutcome::Feasible;
        }
        let nvars = les[0].coeffs.len();
        // variable with the fewest new rows
        let var = (0..nvars)
            .filter(|&v| les.iter().any(|r| !r.coeffs[v].is_zero()))
            .min_by_key(|&v| {
                let p = les.iter().filter(|r| r.coeffs[v].is_positive()).count();
                let n = les.iter().filter(|r| r.coeffs[v].is_negative()).count();
                p * n
            })
            .expect("some row has a nonzero coefficient");
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in les.drain(..) {
            if r.coeffs[var].is_positive() {
                pos.push(r);
            } else if r.coeffs[var].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        for p in &pos {
            for n in &neg {
                // p / p_v + n / |n_v| cancels the variable
                let mut row = p.clone();
                let s = Q::one() / &p.coeffs[var];
                row.scale(&s);
                row.add_scaled(n, &(Q::one() / n.coeffs[var].abs()));
                row.coeffs[var] = Q::zero();
                row.normalise();
                rest.push(row);
            }
        }
        // drop exact duplicates
        rest.sort_by(|a, b| (&a.coeffs, &a.rhs).cmp(&(&b.coeffs, &b.rhs)));
        rest.dedup_by(|a, b| a.coeffs == b.coeffs);
        les = rest;
    }
}

/// Feasibility of the moment system for `(n, k, delta)` with default options.
pub fn moment_lp(n: usize, k: usize, delta: usize) -> LpOutcome {
    moment_lp_with(n, k, delta, MomentOptions::default())
}

pub fn moment_lp_with(n: usize, k: usize, delta: usize, opts: MomentOptions) -> LpOutcome {
    solve(&MomentSystem::new(n, k, delta, opts))
}

/// True when the moment system is infeasible for every `1 <= k <= n`.
pub fn exclude_length(n: usize, delta: usize) -> bool {
    exclude_length_with(n, delta, MomentOptions::default())
}

pub fn exclude_length_with(n: usize, delta: usize, opts: MomentOptions) -> bool {
    (1..=n)
        .into_par_iter()
        .all(|k| !moment_lp_with(n, k, delta, opts).is_feasible())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn infeasible_with_valid_certificate(n: usize, k: usize, delta: usize) -> bool {
        let sys = MomentSystem::new(n, k, delta, MomentOptions::default());
        match solve(&sys) {
            LpOutcome::Feasible => false,
            LpOutcome::Infeasible(c) => {
                assert!(c.verify(&sys), "bad certificate for ({n},{k},{delta})");
                true
            }
        }
    }

    #[test]
    fn simplex_is_feasible() {
        assert!(moment_lp(7, 3, 4).is_feasible());
        let sys = MomentSystem::new(7, 3, 4, MomentOptions::default());
        assert!(sys.satisfied_by(&[q(7)]));
    }

    #[test]
    fn length_twelve_is_excluded() {
        for k in 1..=12 {
            assert!(infeasible_with_valid_certificate(12, k, 4), "k={k}");
        }
    }

    #[test]
    fn length_four_is_excluded() {
        for k in 1..=4 {
            assert!(infeasible_with_valid_certificate(4, k, 4));
        }
        // hand elimination: A_4 = 2^k - 1 and 4 A_4 = 2^(k-1) 4
        let sys = MomentSystem::new(4, 3, 4, MomentOptions::default());
        assert!(!sys.satisfied_by(&[q(7)]));
    }

    #[test]
    fn doubly_even_exclusions() {
        for n in (1..=6).chain(9..=13) {
            assert!(exclude_length(n, 4), "n={n}");
        }
        for n in [7, 8, 14] {
            assert!(!exclude_length(n, 4), "n={n}");
        }
    }

    #[test]
    fn certificate_checker_rejects_tampering() {
        let sys = MomentSystem::new(12, 6, 4, MomentOptions::default());
        let LpOutcome::Infeasible(mut c) = solve(&sys) else { panic!() };
        assert!(c.verify(&sys));
        let i = c.multipliers.iter().position(|y| !y.is_zero()).unwrap();
        c.multipliers[i] += Q::one();
        assert!(!c.verify(&sys));
    }

    #[test]
    fn all_ones_option_adds_a_row() {
        let a = MomentSystem::new(16, 5, 8, MomentOptions::default());
        let b = MomentSystem::new(16, 5, 8, MomentOptions { all_ones_bound: true });
        assert_eq!(b.rows.len(), a.rows.len() + 1);
        assert!(solve(&a).is_feasible());
    }
}
