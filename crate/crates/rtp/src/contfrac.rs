//! Branched Stieltjes-type continued fractions.
//!
//! An `m`-branched continued fraction over coefficients `alpha_s` is the
//! family of formal power series
//!
//! ```text
//! F(s) = 1 / (1 - alpha_s t F(s+1) F(s+2) ... F(s+m))
//! ```
//!
//! whose value is read off at `F(m)`, so only `alpha_m, alpha_{m+1}, ...`
//! are ever consulted; `m = 1` recovers the classical Stieltjes fraction.
//! Coefficient schedules of interest here repeat in blocks of length
//! `m + 1`:
//!
//! ```text
//! alpha_{m..} = nu, x_1, ..., x_m, nu + step, 2 x_1, ..., 2 x_m, nu + 2 step, ...
//! ```
//!
//! Two independent evaluation routes are provided and kept deliberately
//! separate.  The *recursive* route ([`bsf_series`]) expands the defining
//! fixed-point equation with memoization.  The *production-matrix* route
//! ([`bsf_series_via_production`]) builds
//!
//! ```text
//! P = L(x_1) L(x_2) ... L(x_m) U
//! ```
//!
//! where `L(x)` is unit lower bidiagonal with subdiagonal `j x` and `U` is
//! upper bidiagonal with diagonal `nu + j step` and unit superdiagonal, and
//! reads term `n` as the `(0, 0)` entry of `P^n`.  Agreement of the two
//! routes is a theorem, so the test suite checks it rather than assuming
//! it.

use std::collections::HashMap;

use crate::arith::{rat, Poly, Ring};
use crate::matrix::RingMatrix;
use crate::series::Series;
use crate::{Error, Result};

/// How the coefficients `alpha_m, alpha_{m+1}, ...` are produced.
#[derive(Clone, Debug)]
pub enum AlphaSchedule {
    /// The block pattern `nu, x_1..x_m, nu + step, 2x_1..2x_m, ...`.
    Blocks { nu: Poly, step: Poly, xs: Vec<Poly> },
    /// Explicit values for `alpha_m, alpha_{m+1}, ...` in order.
    Explicit(Vec<Poly>),
}

/// An `m`-branched continued fraction's branching order plus coefficient
/// schedule.
#[derive(Clone, Debug)]
pub struct Schedule {
    m: usize,
    alphas: AlphaSchedule,
}

impl Schedule {
    /// Block schedule; `m` is taken from `xs.len()`, which must be positive.
    pub fn blocks(nu: Poly, step: Poly, xs: Vec<Poly>) -> Schedule {
        assert!(!xs.is_empty(), "block schedule needs at least one x");
        Schedule { m: xs.len(), alphas: AlphaSchedule::Blocks { nu, step, xs } }
    }

    /// Explicit schedule: `alphas[p]` is consumed as `alpha_{m+p}`.
    pub fn explicit(m: usize, alphas: Vec<Poly>) -> Schedule {
        assert!(m >= 1, "branching order must be at least 1");
        Schedule { m, alphas: AlphaSchedule::Explicit(alphas) }
    }

    pub fn branching(&self) -> usize {
        self.m
    }

    /// The coefficient `alpha_i` for `i >= m`.
    pub fn alpha(&self, i: usize) -> Result<Poly> {
        if i < self.m {
            return Err(Error::Domain(format!(
                "alpha_{i} lies above the top level m = {}",
                self.m
            )));
        }
        let p = i - self.m;
        match &self.alphas {
            AlphaSchedule::Blocks { nu, step, xs } => {
                let j = p / (self.m + 1);
                let r = p % (self.m + 1);
                Ok(if r == 0 {
                    nu.add(&step.scale(&rat(j as i64)))
                } else {
                    xs[r - 1].scale(&rat(j as i64 + 1))
                })
            }
            AlphaSchedule::Explicit(v) => v.get(p).cloned().ok_or(Error::InsufficientTerms {
                needed: p + 1,
                have: v.len(),
            }),
        }
    }
}

/// Schedule for the row-polynomial generating function of a Sheffer-type
/// pair `(e^{lam f}, f)` whose reverted derivative factors as
/// `1/fbar' = prod_i (1 + x_i t)`: block coefficients `nu = lam + q`,
/// constant diagonal (`step = 0`), and the given `xs`.
pub fn schedule_sheffer(lam: &Poly, q: &Poly, xs: &[Poly]) -> Schedule {
    Schedule::blocks(lam.add(q), Poly::zero(), xs.to_vec())
}

/// Companion schedule generating the *reversed* row polynomials of the same
/// pair: `nu = q lam + 1` and every `x_i` multiplied by `q`.
pub fn schedule_sheffer_star(lam: &Poly, q: &Poly, xs: &[Poly]) -> Schedule {
    let scaled: Vec<Poly> = xs.iter().map(|x| x.mul(q)).collect();
    Schedule::blocks(q.mul(lam).add(&Poly::one()), Poly::zero(), scaled)
}

/// General block schedule with a drifting diagonal, as used when certifying
/// Hankel-type total positivity of row-sum sequences.
pub fn schedule_hankel_thm(nu: &Poly, step: &Poly, xs: &[Poly]) -> Schedule {
    Schedule::blocks(nu.clone(), step.clone(), xs.to_vec())
}

/// Schedule for the generalized Lah row polynomials at `d = 0`: branching
/// `m = a + 1`, diagonal `nu = c (q + lam)`, and `xs = (b, ..., b)`.
pub fn schedule_gen_lah(a: usize, b: &Poly, c: &Poly, lam: &Poly, q: &Poly) -> Schedule {
    Schedule::blocks(c.mul(&q.add(lam)), Poly::zero(), vec![b.clone(); a + 1])
}

/// Expands `F(m)` to the requested order by memoized recursion on the
/// defining equation.
pub fn bsf_series(schedule: &Schedule, order: usize) -> Result<Series<Poly>> {
    let mut memo: HashMap<(usize, usize), Series<Poly>> = HashMap::new();
    expand(schedule.m, order, schedule, &mut memo)
}

fn expand(
    s: usize,
    order: usize,
    schedule: &Schedule,
    memo: &mut HashMap<(usize, usize), Series<Poly>>,
) -> Result<Series<Poly>> {
    if order == 0 {
        return Ok(Series::constant(Poly::one(), 0));
    }
    if let Some(hit) = memo.get(&(s, order)) {
        return Ok(hit.clone());
    }
    let mut prod = Series::constant(Poly::one(), order - 1);
    for i in 1..=schedule.m {
        prod = prod.mul(&expand(s + i, order - 1, schedule, memo)?);
    }
    let alpha = schedule.alpha(s)?;
    // X = alpha_s * t * prod, then F = 1/(1 - X).
    let x = Series::from_fn(order, |i| {
        if i == 0 {
            Poly::zero()
        } else {
            prod.coeff(i - 1).mul(&alpha)
        }
    });
    let denom = Series::constant(Poly::one(), order).sub(&x);
    let f = Series::constant(Poly::one(), order).div(&denom)?;
    memo.insert((s, order), f.clone());
    Ok(f)
}

/// The production matrix `P = L(x_1) ... L(x_m) U` of a block schedule,
/// truncated to `size` rows.
pub fn bsf_production_matrix(nu: &Poly, step: &Poly, xs: &[Poly], size: usize) -> RingMatrix<Poly> {
    let mut p = RingMatrix::identity(size);
    for x in xs {
        p = p.mul(&lower_bidiagonal(x, size));
    }
    p.mul(&upper_bidiagonal(nu, step, size))
}

/// Reads the series of the block schedule off powers of its production
/// matrix: term `n` is `(P^n)[0][0]`.
pub fn bsf_series_via_production(nu: &Poly, step: &Poly, xs: &[Poly], order: usize) -> Series<Poly> {
    let size = order + 1;
    let p = bsf_production_matrix(nu, step, xs, size);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Poly::one());
    let mut v = vec![Poly::zero(); size];
    v[0] = Poly::one();
    for _ in 1..=order {
        let mut next = vec![Poly::zero(); size];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, slot) in next.iter_mut().enumerate() {
                let pij = p.get(i, j);
                if !pij.is_zero() {
                    *slot = slot.add(&vi.mul(pij));
                }
            }
        }
        v = next;
        coeffs.push(v[0].clone());
    }
    Series::from_coeffs(coeffs)
}

fn lower_bidiagonal(x: &Poly, size: usize) -> RingMatrix<Poly> {
    let mut l = RingMatrix::identity(size);
    for j in 1..size {
        l.set(j, j - 1, x.scale(&rat(j as i64)));
    }
    l
}

fn upper_bidiagonal(nu: &Poly, step: &Poly, size: usize) -> RingMatrix<Poly> {
    let mut u = RingMatrix::zeros(size, size);
    for j in 0..size {
        u.set(j, j, nu.add(&step.scale(&rat(j as i64))));
        if j + 1 < size {
            u.set(j, j + 1, Poly::one());
        }
    }
    u
}
