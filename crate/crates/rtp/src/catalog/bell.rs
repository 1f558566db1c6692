//! Partition-flavored constructions over an arbitrary weight sequence:
//! partial Bell triangles, logarithmic and fractional companions of a
//! series, and the cycle-index recurrence with its symmetric-function
//! specializations.

use crate::arith::{binomial, factorial, rat, Poly, Rational, Ring};
use crate::matrix::RingMatrix;
use crate::riordan::ExpRiordan;
use crate::series::Series;
use crate::{Error, Result};

/// Partial Bell triangle `B(n, k)` over block weights `xs = (x1, x2, ...)`:
/// the weight `x_j` is collected once per block of size `j`.  Uses the
/// anchor recurrence `B(n, k) = sum_j C(n-1, j-1) x_j B(n-j, k-1)` on the
/// block containing the last element.
pub fn bell_partial_recurrence(xs: &[Poly], n: usize) -> RingMatrix<Poly> {
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, Poly::one());
    for r in 1..=n {
        for k in 1..=r {
            let mut acc = Poly::zero();
            for j in 1..=r.min(xs.len()) {
                let ways = Rational::from_integer(binomial(r as i64 - 1, j as i64 - 1));
                let term = xs[j - 1].mul(m.get(r - j, k - 1)).scale(&ways);
                acc = acc.add(&term);
            }
            m.set(r, k, acc);
        }
    }
    m
}

/// Partial Bell triangle as the pair `(1, sum_j x_j t^j / j!)`.
pub fn bell_partial_pair(xs: &[Poly], order: usize) -> Result<ExpRiordan<Poly>> {
    let mut co = vec![Poly::zero(); order + 1];
    for (j, x) in xs.iter().enumerate().take(order) {
        co[j + 1] = x.scale(&Rational::new(1.into(), factorial(j + 1)));
    }
    ExpRiordan::new(Series::constant(Poly::one(), order), Series::from_coeffs(co))
}

/// Logarithmic companion triangle of a series with `f(0) = 0`:
/// `L(n, k) = n! [t^n] f^k / k` for `k >= 1` (these are the coefficients of
/// `-log(1 - q f)` as an exponential series), with `L(0, 0) = 1` so the
/// triangle stays unit lower triangular in shape.
pub fn logarithmic_triangle<R: Ring>(f: &Series<R>, n: usize) -> Result<RingMatrix<R>> {
    companion_triangle(f, n, true)
}

/// Fractional companion triangle of a series with `f(0) = 0`:
/// `L~(n, k) = n! [t^n] f^k`, the coefficients of `1/(1 - q f)`.  Satisfies
/// `L~(n, k) = k L(n, k)` against the logarithmic companion and
/// `L~(n, k) = k! T(n, k)` against the triangle of the pair `(1, f)`.
pub fn fractional_triangle<R: Ring>(f: &Series<R>, n: usize) -> Result<RingMatrix<R>> {
    companion_triangle(f, n, false)
}

fn companion_triangle<R: Ring>(f: &Series<R>, n: usize, logarithmic: bool) -> Result<RingMatrix<R>> {
    if !f.coeff(0).is_zero() {
        return Err(Error::ConstantTermNotZero(
            "companion triangles need f(0) = 0".into(),
        ));
    }
    if n > f.order() {
        return Err(Error::OrderExceeded { wanted: n, order: f.order() });
    }
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, R::one());
    let mut fk = Series::constant(R::one(), f.order());
    for k in 1..=n {
        fk = fk.mul(f);
        for r in k..=n {
            let mut scalar = Rational::from_integer(factorial(r));
            if logarithmic {
                scalar /= rat(k as i64);
            }
            m.set(r, k, fk.coeff(r).scale(&scalar));
        }
    }
    Ok(m)
}

/// Cycle-index style sequence over weights `xs`:
/// `A(0) = 1`, `A(n) = (1/n) sum_{j<=min(n, len)} x_j A(n-j)`.  With
/// `x_j = p_j(lambda)` (power sums) this yields the complete homogeneous
/// symmetric functions `h_n(lambda)`; with every `x_j = 1` it is constantly
/// one (so `n! A(n)` counts all permutations).
pub fn cycle_index(xs: &[Poly], n: usize) -> Vec<Poly> {
    let mut a = Vec::with_capacity(n + 1);
    a.push(Poly::one());
    for r in 1..=n {
        let mut acc = Poly::zero();
        for j in 1..=r.min(xs.len()) {
            acc = acc.add(&xs[j - 1].mul(&a[r - j]));
        }
        a.push(acc.scale(&crate::arith::ratio(1, r as i64)));
    }
    a
}

/// Power sums `p_j = sum_i lambda_i^j` for `j = 1..=count`.
pub fn power_sums(lambdas: &[Rational], count: usize) -> Vec<Rational> {
    (1..=count)
        .map(|j| {
            lambdas
                .iter()
                .fold(rat(0), |acc, l| acc + crate::arith::pow_rat(l, j as i64))
        })
        .collect()
}

/// Complete homogeneous symmetric functions `h_0..h_n` of the given values,
/// read off the product `prod_i 1/(1 - lambda_i t)`.
pub fn complete_homogeneous(lambdas: &[Rational], n: usize) -> Vec<Rational> {
    let mut acc = Series::constant(rat(1), n);
    for l in lambdas {
        let geo = Series::from_fn(n, |i| crate::arith::pow_rat(l, i as i64));
        acc = acc.mul(&geo);
    }
    acc.coeffs().to_vec()
}
