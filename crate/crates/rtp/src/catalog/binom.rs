//! Two three-parameter families with pure binomial-product entries.
//!
//! The *first* family, rows indexed by `n` with parameters `(m, c, d)`
//! subject to `m >= 0`, `d >= 1`, `d >= c`, has entries
//!
//! ```text
//! T[n][k] = C(n, k) C(n+ck, m+dk) (n-k)!
//! ```
//!
//! and (when `d > c`) is the improper exponential Riordan pair
//! `(t^m / (1-t)^{m+1}, t^{d-c} / (1-t)^d)`; at `d = c` the would-be `f` has
//! `f(0) = 1` and no Riordan form exists, leaving the closed form as the
//! only route.  The *second* family fixes `n` and indexes rows by `m`, with
//! parameters `(n, c, d)` subject to `n >= 0`, `c >= 0`, `d <= -1`, entries
//!
//! ```text
//! T[m][k] = C(m, k) C(n+ck, m+dk) (m-k)!
//! ```
//!
//! and pair `((1+t)^n, t^{-d} (1+t)^c)`.  Both identities follow from
//! reading `C(n+ck, m+dk)` as a coefficient of a binomial power.  The
//! *bare* variants strip the `C(rows, k)(rows-k)!` frame and keep the inner
//! binomial alone, which is the row-`1/r!`, column-`k!` diagonal rescaling
//! of the framed triangle.

use crate::arith::{binomial, factorial, rat, Rational};
use crate::matrix::RingMatrix;
use crate::riordan::ExpRiordan;
use crate::series::Series;
use crate::{Error, Result};

fn first_domain(m: i64, c: i64, d: i64) -> Result<()> {
    if m < 0 || d < 1 || d < c {
        return Err(Error::ParameterDomain(format!(
            "first binomial family needs m >= 0, d >= 1, d >= c; got (m, c, d) = ({m}, {c}, {d})"
        )));
    }
    Ok(())
}

fn second_domain(n: i64, c: i64, d: i64) -> Result<()> {
    if n < 0 || c < 0 || d > -1 {
        return Err(Error::ParameterDomain(format!(
            "second binomial family needs n >= 0, c >= 0, d <= -1; got (n, c, d) = ({n}, {c}, {d})"
        )));
    }
    Ok(())
}

/// First family, framed entries `C(n, k) C(n+ck, m+dk) (n-k)!`.
pub fn binomial_first(m: i64, c: i64, d: i64, rows: usize) -> Result<RingMatrix<Rational>> {
    first_domain(m, c, d)?;
    Ok(framed(rows, |r, k| (r + c * k, m + d * k)))
}

/// First family without the frame: `C(n+ck, m+dk)` on the triangle.
pub fn binomial_first_bare(m: i64, c: i64, d: i64, rows: usize) -> Result<RingMatrix<Rational>> {
    first_domain(m, c, d)?;
    Ok(bare(rows, |r, k| (r + c * k, m + d * k)))
}

/// First family as the pair `(t^m / (1-t)^{m+1}, t^{d-c} / (1-t)^d)`;
/// improper whenever `m >= 1` or `d - c >= 2`, and nonexistent at `d = c`.
pub fn binomial_first_pair(m: i64, c: i64, d: i64, order: usize) -> Result<ExpRiordan<Rational>> {
    first_domain(m, c, d)?;
    if d == c {
        return Err(Error::ImproperPair(
            "first binomial family has f(0) = 1 when d = c; no Riordan form".into(),
        ));
    }
    let one_minus_t = Series::constant(rat(1), order).sub(&Series::t(order));
    let g = one_minus_t
        .pow_rational(&rat(-(m + 1)))?
        .shift_up(m as usize);
    let f = one_minus_t.pow_rational(&rat(-d))?.shift_up((d - c) as usize);
    ExpRiordan::new(g, f)
}

/// Second family, framed entries `C(m, k) C(n+ck, m+dk) (m-k)!`.
pub fn binomial_second(n: i64, c: i64, d: i64, rows: usize) -> Result<RingMatrix<Rational>> {
    second_domain(n, c, d)?;
    Ok(framed(rows, |r, k| (n + c * k, r + d * k)))
}

/// Second family without the frame: `C(n+ck, m+dk)` on the triangle.
pub fn binomial_second_bare(n: i64, c: i64, d: i64, rows: usize) -> Result<RingMatrix<Rational>> {
    second_domain(n, c, d)?;
    Ok(bare(rows, |r, k| (n + c * k, r + d * k)))
}

/// Second family as the pair `((1+t)^n, t^{-d} (1+t)^c)`; proper exactly
/// when `d = -1`.
pub fn binomial_second_pair(n: i64, c: i64, d: i64, order: usize) -> Result<ExpRiordan<Rational>> {
    second_domain(n, c, d)?;
    let one_plus_t = Series::constant(rat(1), order).add(&Series::t(order));
    let g = one_plus_t.pow_rational(&rat(n))?;
    let f = one_plus_t.pow_rational(&rat(c))?.shift_up((-d) as usize);
    ExpRiordan::new(g, f)
}

fn framed(rows: usize, inner: impl Fn(i64, i64) -> (i64, i64)) -> RingMatrix<Rational> {
    RingMatrix::from_fn(rows + 1, rows + 1, |r, k| {
        if k > r {
            return rat(0);
        }
        let (top, bottom) = inner(r as i64, k as i64);
        Rational::from_integer(
            binomial(r as i64, k as i64) * binomial(top, bottom) * factorial(r - k),
        )
    })
}

fn bare(rows: usize, inner: impl Fn(i64, i64) -> (i64, i64)) -> RingMatrix<Rational> {
    RingMatrix::from_fn(rows + 1, rows + 1, |r, k| {
        if k > r {
            return rat(0);
        }
        let (top, bottom) = inner(r as i64, k as i64);
        Rational::from_integer(binomial(top, bottom))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::classics::laguerre_closed;
    use crate::positivity::{diag_scale, factorial_scalars, is_tp_r};

    fn rows_equal(a: &RingMatrix<Rational>, b: &RingMatrix<Rational>) {
        assert_eq!(a.rows(), b.rows());
        for r in 0..a.rows() {
            for k in 0..a.cols() {
                assert_eq!(a.get(r, k), b.get(r, k), "mismatch at ({r}, {k})");
            }
        }
    }

    #[test]
    fn first_family_at_origin_is_laguerre() {
        let fam = binomial_first(0, 0, 1, 6).unwrap();
        rows_equal(&fam, &laguerre_closed(&rat(0), 6));
    }

    #[test]
    fn first_family_matches_its_riordan_pair() {
        for (m, c, d) in [(0i64, 0i64, 1i64), (1, 1, 2), (2, 0, 1), (0, -1, 1)] {
            let closed = binomial_first(m, c, d, 7).unwrap();
            let tri = binomial_first_pair(m, c, d, 8).unwrap().triangle(7).unwrap();
            rows_equal(&closed, &tri);
        }
    }

    #[test]
    fn second_family_matches_its_riordan_pair() {
        for (n, c, d) in [(4i64, 1i64, -1i64), (5, 2, -2), (3, 0, -1)] {
            let closed = binomial_second(n, c, d, 7).unwrap();
            let tri = binomial_second_pair(n, c, d, 8).unwrap().triangle(7).unwrap();
            rows_equal(&closed, &tri);
        }
    }

    #[test]
    fn bare_variants_are_diagonal_rescalings() {
        let (inv_fact, fact) = factorial_scalars(6);
        let framed = binomial_first(1, 1, 2, 6).unwrap();
        let bare = binomial_first_bare(1, 1, 2, 6).unwrap();
        rows_equal(&bare, &diag_scale(&framed, &inv_fact, &fact).unwrap());

        let framed2 = binomial_second(4, 1, -1, 6).unwrap();
        let bare2 = binomial_second_bare(4, 1, -1, 6).unwrap();
        rows_equal(&bare2, &diag_scale(&framed2, &inv_fact, &fact).unwrap());
    }

    #[test]
    fn domain_violations_are_rejected() {
        assert!(matches!(binomial_first(0, 0, 0, 4), Err(Error::ParameterDomain(_))));
        assert!(matches!(binomial_first(0, 3, 2, 4), Err(Error::ParameterDomain(_))));
        assert!(matches!(binomial_first(-1, 0, 1, 4), Err(Error::ParameterDomain(_))));
        assert!(matches!(binomial_first_pair(0, 1, 1, 4), Err(Error::ImproperPair(_))));
        assert!(matches!(binomial_second(4, 1, 0, 4), Err(Error::ParameterDomain(_))));
        assert!(matches!(binomial_second(4, -1, -1, 4), Err(Error::ParameterDomain(_))));
        assert!(matches!(binomial_second(-2, 1, -1, 4), Err(Error::ParameterDomain(_))));
    }

    #[test]
    fn sample_instances_are_totally_positive() {
        let first = binomial_first(1, 1, 2, 5).unwrap();
        assert!(is_tp_r(&first, 3).unwrap().pass);
        let second = binomial_second(4, 1, -1, 5).unwrap();
        assert!(is_tp_r(&second, 3).unwrap().pass);
    }
}
