//! Named rational triangles: binomial, Stirling, Lah, Laguerre, rook,
//! double-factorial/Bessel, Callan-style histoire, idempotent, labeled-tree,
//! and Eulerian numbers.
//!
//! Each triangle ships in at least two independent realizations (closed
//! form, recurrence, Riordan pair, or exhaustive oracle) so the test suite
//! can cross-check them entry by entry.

use itertools::Itertools;

use crate::arith::{
    binomial, binomial_rat, factorial, odd_double_factorial, pow_rat, rat, Poly, Rational, VarSet,
};
use crate::matrix::RingMatrix;
use crate::riordan::ExpRiordan;
use crate::series::Series;
use crate::{Error, Result};

/// Binomial coefficients `C(n, k)`.
pub fn pascal_closed(n: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n + 1, n + 1, |r, k| {
        Rational::from_integer(binomial(r as i64, k as i64))
    })
}

/// Pascal's triangle as the exponential Riordan pair `(e^t, t)`.
pub fn pascal_pair(order: usize) -> Result<ExpRiordan<Rational>> {
    ExpRiordan::new(Series::exp_t(order), Series::t(order))
}

/// Stirling numbers of the second kind by inclusion–exclusion:
/// `S(n, k) = (1/k!) sum_j (-1)^{k-j} C(k, j) j^n`.
pub fn stirling2_closed(n: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n + 1, n + 1, |r, k| {
        if k > r {
            return rat(0);
        }
        let mut acc = rat(0);
        for j in 0..=k as i64 {
            let mut term = Rational::new(binomial(k as i64, j), factorial(k));
            term *= pow_rat(&rat(j), r as i64);
            if (k as i64 - j) % 2 != 0 {
                term = -term;
            }
            acc += term;
        }
        acc
    })
}

/// Stirling numbers of the second kind as the pair `(1, e^t - 1)`.
pub fn stirling2_pair(order: usize) -> Result<ExpRiordan<Rational>> {
    let f = Series::exp_t(order).sub(&Series::constant(rat(1), order));
    ExpRiordan::new(Series::constant(rat(1), order), f)
}

/// Signless Lah numbers by the one-step recurrence
/// `L(n, k) = L(n-1, k-1) + (n - 1 + k) L(n-1, k)`.
pub fn lah_recurrence(n: usize) -> RingMatrix<Rational> {
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, rat(1));
    for r in 1..=n {
        for k in 1..=r {
            let mut acc = m.get(r - 1, k - 1).clone();
            acc += m.get(r - 1, k) * rat((r - 1 + k) as i64);
            m.set(r, k, acc);
        }
    }
    m
}

/// Signless Lah numbers in closed form `C(n-1, k-1) n!/k!`.
pub fn lah_closed(n: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n + 1, n + 1, |r, k| {
        if r == 0 && k == 0 {
            return rat(1);
        }
        if k == 0 || k > r {
            return rat(0);
        }
        Rational::new(binomial(r as i64 - 1, k as i64 - 1) * factorial(r), factorial(k))
    })
}

/// Lah numbers as the pair `(1, t/(1-t))`.
pub fn lah_pair(order: usize) -> Result<ExpRiordan<Rational>> {
    let f = Series::geometric(order).shift_up(1);
    ExpRiordan::new(Series::constant(rat(1), order), f)
}

/// Signless Laguerre coefficients `C(n+alpha, n-k) n!/k!`; `alpha = 0`
/// recovers `C(n, k) n!/k!`.
pub fn laguerre_closed(alpha: &Rational, n: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n + 1, n + 1, |r, k| {
        if k > r {
            return rat(0);
        }
        let choose = binomial_rat(&(alpha + rat(r as i64)), (r - k) as i64);
        choose * Rational::new(factorial(r), factorial(k))
    })
}

/// Laguerre coefficients as the pair `((1-t)^{-(alpha+1)}, t/(1-t))`.
pub fn laguerre_pair(alpha: &Rational, order: usize) -> Result<ExpRiordan<Rational>> {
    let one_minus_t = Series::constant(rat(1), order).sub(&Series::t(order));
    let g = one_minus_t.pow_rational(&-(alpha + rat(1)))?;
    ExpRiordan::new(g, Series::geometric(order).shift_up(1))
}

/// Rook polynomials of the full `n x n` board:
/// `S_n(q) = sum_k C(n, k)^2 k! q^k`.
pub fn rook_polys(vs: &VarSet, q: &str, n: usize) -> Vec<Poly> {
    let qi = vs
        .index_of(q)
        .unwrap_or_else(|| panic!("variable '{q}' not declared"));
    (0..=n)
        .map(|r| {
            Poly::from_terms(
                vs,
                (0..=r).map(|k| {
                    let c = binomial(r as i64, k as i64);
                    let mut exp = vec![0u32; vs.len()];
                    exp[qi] = k as u32;
                    (exp, Rational::from_integer(&c * &c * factorial(k)))
                }),
            )
        })
        .collect()
}

/// Ordered-image refinement of the Bessel-style triangle:
/// `H(n, k) = k! C(2n-k-1, k-1) (2n-2k-1)!!` with `H(0, 0) = 1`; row sums
/// are the odd double factorials `(2n-1)!!`.
pub fn callan_closed(n: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n + 1, n + 1, |r, k| {
        if r == 0 && k == 0 {
            return rat(1);
        }
        if k == 0 || k > r {
            return rat(0);
        }
        let dfac = odd_double_factorial(2 * r as i64 - 2 * k as i64 - 1);
        Rational::from_integer(
            factorial(k) * binomial(2 * r as i64 - k as i64 - 1, k as i64 - 1) * dfac,
        )
    })
}

/// The same triangle by `H(n, k) = (2n-k-2) H(n-1, k) + k H(n-1, k-1)`.
pub fn callan_recurrence(n: usize) -> RingMatrix<Rational> {
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, rat(1));
    for r in 1..=n {
        for k in 1..=r {
            let mut acc = m.get(r - 1, k) * rat(2 * r as i64 - k as i64 - 2);
            acc += m.get(r - 1, k - 1) * rat(k as i64);
            m.set(r, k, acc);
        }
    }
    m
}

/// Bessel-style triangle `b(n, k) = C(2n-k-1, k-1) (2n-2k-1)!!` whose rows
/// sum to the Bessel polynomial values `1, 1, 2, 7, 37, ...`.
pub fn doublefac_closed(n: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n + 1, n + 1, |r, k| {
        if r == 0 && k == 0 {
            return rat(1);
        }
        if k == 0 || k > r {
            return rat(0);
        }
        let dfac = odd_double_factorial(2 * r as i64 - 2 * k as i64 - 1);
        Rational::from_integer(binomial(2 * r as i64 - k as i64 - 1, k as i64 - 1) * dfac)
    })
}

/// The same triangle by `b(n, k) = (2n-k-2) b(n-1, k) + b(n-1, k-1)`.
pub fn doublefac_recurrence(n: usize) -> RingMatrix<Rational> {
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, rat(1));
    for r in 1..=n {
        for k in 1..=r {
            let mut acc = m.get(r - 1, k) * rat(2 * r as i64 - k as i64 - 2);
            acc += m.get(r - 1, k - 1);
            m.set(r, k, acc);
        }
    }
    m
}

/// Idempotent numbers `C(n, k) k^{n-k}`, counting idempotent maps on `[n]`
/// with image size `k`.
pub fn idempotent_closed(n: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n + 1, n + 1, |r, k| {
        if k > r {
            return rat(0);
        }
        Rational::from_integer(binomial(r as i64, k as i64)) * pow_rat(&rat(k as i64), (r - k) as i64)
    })
}

/// Idempotent numbers as the pair `(1, t e^t)`.
pub fn idempotent_pair(order: usize) -> Result<ExpRiordan<Rational>> {
    ExpRiordan::new(Series::constant(rat(1), order), Series::exp_t(order).shift_up(1))
}

/// Signed forest counts `(-1)^{n-k} C(n-1, k-1) n^{n-k}`: the matrix inverse
/// of the idempotent triangle, i.e. the pair `(1, revert(t e^t))`.
pub fn tree_closed(n: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n + 1, n + 1, |r, k| {
        if r == 0 && k == 0 {
            return rat(1);
        }
        if k == 0 || k > r {
            return rat(0);
        }
        let mut v = Rational::from_integer(binomial(r as i64 - 1, k as i64 - 1))
            * pow_rat(&rat(r as i64), (r - k) as i64);
        if (r - k) % 2 != 0 {
            v = -v;
        }
        v
    })
}

/// Eulerian numbers by `A(n, k) = k A(n-1, k) + (n-k+1) A(n-1, k-1)`.
pub fn eulerian_recurrence(n: usize) -> RingMatrix<Rational> {
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, rat(1));
    for r in 1..=n {
        for k in 1..=r {
            let mut acc = m.get(r - 1, k) * rat(k as i64);
            acc += m.get(r - 1, k - 1) * rat((r - k + 1) as i64);
            m.set(r, k, acc);
        }
    }
    m
}

/// Eulerian numbers by the alternating-sum closed form
/// `A(n, k) = sum_j (-1)^j C(n+1, j) (k-j)^n`.
pub fn eulerian_closed(n: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n + 1, n + 1, |r, k| {
        if k > r {
            return rat(0);
        }
        let mut acc = rat(0);
        for j in 0..=k as i64 {
            let mut term = Rational::from_integer(binomial(r as i64 + 1, j))
                * pow_rat(&rat(k as i64 - j), r as i64);
            if j % 2 != 0 {
                term = -term;
            }
            acc += term;
        }
        acc
    })
}

/// Exhaustive oracle: counts permutations of `[n]` by number of strict
/// excedances (`sigma(i) > i`), placing those with `e` excedances in column
/// `e + 1` (row 0 keeps its lone entry at column 0).  Capped at `n <= 8`.
pub fn eulerian_oracle(n: usize) -> Result<RingMatrix<Rational>> {
    if n > 8 {
        return Err(Error::Domain(format!(
            "oracle enumeration capped at 8 elements, asked for {n}"
        )));
    }
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, rat(1));
    for r in 1..=n {
        for perm in (1..=r).permutations(r) {
            let exc = perm.iter().enumerate().filter(|&(i, &v)| v > i + 1).count();
            let cur = m.get(r, exc + 1) + rat(1);
            m.set(r, exc + 1, cur);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::reciprocal_triangle;
    use crate::riordan::row_polys_rational;

    fn rows_equal(a: &RingMatrix<Rational>, b: &RingMatrix<Rational>) {
        assert_eq!(a.rows(), b.rows());
        for r in 0..a.rows() {
            for k in 0..a.cols() {
                assert_eq!(a.get(r, k), b.get(r, k), "mismatch at ({r}, {k})");
            }
        }
    }

    #[test]
    fn pascal_routes_agree() {
        let closed = pascal_closed(7);
        let pair = pascal_pair(8).unwrap().triangle(7).unwrap();
        rows_equal(&closed, &pair);
        let row4: Vec<Rational> = (0..=4).map(|k| closed.get(4, k).clone()).collect();
        assert_eq!(row4, vec![rat(1), rat(4), rat(6), rat(4), rat(1)]);
    }

    #[test]
    fn stirling2_routes_agree() {
        let closed = stirling2_closed(7);
        assert_eq!(closed.get(4, 2), &rat(7));
        let pair = stirling2_pair(8).unwrap().triangle(7).unwrap();
        rows_equal(&closed, &pair);
    }

    #[test]
    fn lah_routes_agree() {
        let rec = lah_recurrence(8);
        let closed = lah_closed(8);
        rows_equal(&rec, &closed);
        let pair = lah_pair(9).unwrap().triangle(8).unwrap();
        rows_equal(&closed, &pair);
        let row3: Vec<Rational> = (0..=3).map(|k| closed.get(3, k).clone()).collect();
        assert_eq!(row3, vec![rat(0), rat(6), rat(6), rat(1)]);
    }

    #[test]
    fn laguerre_routes_agree_and_alpha_minus_one_is_lah() {
        let closed = laguerre_closed(&rat(0), 6);
        let pair = laguerre_pair(&rat(0), 7).unwrap().triangle(6).unwrap();
        rows_equal(&closed, &pair);
        let row2: Vec<Rational> = (0..=2).map(|k| closed.get(2, k).clone()).collect();
        assert_eq!(row2, vec![rat(2), rat(4), rat(1)]);

        let at_minus_one = laguerre_closed(&rat(-1), 6);
        rows_equal(&at_minus_one, &lah_closed(6));

        let half = laguerre_closed(&crate::arith::ratio(1, 2), 5);
        let half_pair = laguerre_pair(&crate::arith::ratio(1, 2), 6)
            .unwrap()
            .triangle(5)
            .unwrap();
        rows_equal(&half, &half_pair);
    }

    #[test]
    fn rook_polynomials_reverse_laguerre_rows() {
        let vs = VarSet::new(["q"]);
        let rook = rook_polys(&vs, "q", 5);
        assert_eq!(rook[2].to_string(), "1 + 4*q + 2*q^2");
        assert_eq!(rook[3].to_string(), "1 + 9*q + 18*q^2 + 6*q^3");

        let lag = laguerre_closed(&rat(0), 5);
        let lag_rows = row_polys_rational(&lag, &vs, "q").unwrap();
        for (r, poly) in rook.iter().enumerate() {
            assert_eq!(&lag_rows[r].reverse_in("q", r).unwrap(), poly);
        }
    }

    #[test]
    fn callan_routes_agree_with_double_factorial_row_sums() {
        let closed = callan_closed(8);
        rows_equal(&closed, &callan_recurrence(8));
        let row3: Vec<Rational> = (0..=3).map(|k| closed.get(3, k).clone()).collect();
        assert_eq!(row3, vec![rat(0), rat(3), rat(6), rat(6)]);
        for r in 0..=8usize {
            let sum = (0..=r).fold(rat(0), |acc, k| acc + closed.get(r, k));
            let expect = Rational::from_integer(odd_double_factorial(2 * r as i64 - 1));
            assert_eq!(sum, expect, "row {r} sum");
        }
    }

    #[test]
    fn doublefac_routes_agree_and_scale_to_callan() {
        let closed = doublefac_closed(8);
        rows_equal(&closed, &doublefac_recurrence(8));
        let sums: Vec<Rational> = (0..=4)
            .map(|r| (0..=r).fold(rat(0), |acc, k| acc + closed.get(r, k)))
            .collect();
        assert_eq!(sums, vec![rat(1), rat(1), rat(2), rat(7), rat(37)]);

        let callan = callan_closed(8);
        for r in 0..=8 {
            for k in 0..=8 {
                let scaled = closed.get(r, k) * Rational::from_integer(factorial(k));
                assert_eq!(&scaled, callan.get(r, k));
            }
        }
    }

    #[test]
    fn idempotent_and_tree_triangles_are_inverse_pairs() {
        let idem = idempotent_closed(6);
        assert_eq!(idem.get(4, 2), &rat(24));
        let pair = idempotent_pair(7).unwrap().triangle(6).unwrap();
        rows_equal(&idem, &pair);

        let tree = tree_closed(6);
        assert_eq!(tree.get(3, 1), &rat(9));
        assert_eq!(tree.get(0, 0), &rat(1));
        rows_equal(&idem.mul(&tree), &RingMatrix::identity(7));

        let reverted = idempotent_pair(7).unwrap().inverse().unwrap().triangle(6).unwrap();
        rows_equal(&tree, &reverted);
    }

    #[test]
    fn eulerian_routes_agree() {
        let rec = eulerian_recurrence(7);
        rows_equal(&rec, &eulerian_closed(7));
        rows_equal(&eulerian_recurrence(6), &eulerian_oracle(6).unwrap());
        let row4: Vec<Rational> = (0..=4).map(|k| rec.get(4, k).clone()).collect();
        assert_eq!(row4, vec![rat(0), rat(1), rat(11), rat(11), rat(1)]);
    }

    #[test]
    fn reciprocal_triangle_reverses_rows() {
        let lah = lah_closed(5);
        let rec = reciprocal_triangle(&lah);
        for r in 0..=5 {
            for k in 0..=r {
                assert_eq!(rec.get(r, k), lah.get(r, r - k));
            }
        }
    }
}
