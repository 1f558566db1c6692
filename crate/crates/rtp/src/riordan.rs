//! Exponential Riordan pairs and their production (Stieltjes) matrices.
//!
//! A pair `(g, f)` of truncated series with `f(0) = 0` generates the triangle
//! `T[n][k] = (n!/k!) [t^n] g(t) f(t)^k`.  When the pair is *proper* —
//! `g(0)` and `f'(0)` units — the triangle is invertible lower-triangular and
//! the full structure theory applies:
//!
//! - group law `(g, f) * (h, l) = (g * h(f), l(f))` and inverse
//!   `(1/g(fbar), fbar)` with `fbar = revert(f)` ([`ExpRiordan::multiply`],
//!   [`ExpRiordan::inverse`]);
//! - the Z- and A-sequences `Z = g'(fbar)/g(fbar)`, `A = f'(fbar)`
//!   ([`ExpRiordan::za_sequences`]);
//! - the production matrix `P` with `p[i][j] = (i!/j!) (z_{i-j} + j a_{i-j+1})`
//!   characterized by `R̄ = R P`, where `R̄` is the triangle with its top row
//!   removed ([`ExpRiordan::production_matrix`],
//!   [`ExpRiordan::verify_production`]), plus the `k!`-scaled variant whose
//!   production entries drop the `i!/j!` prefactor.
//!
//! Improper pairs (`g(0) = 0` or `f'(0) = 0`) still generate triangles —
//! several binomial-product families need exactly that — but reversion-based
//! operations reject them with a typed error.

use crate::arith::{factorial, Poly, Rational, Ring};
use crate::matrix::RingMatrix;
use crate::series::Series;
use crate::{Error, Result};

/// An exponential Riordan pair `(g, f)` with `f(0) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpRiordan<R: Ring> {
    g: Series<R>,
    f: Series<R>,
}

impl<R: Ring> ExpRiordan<R> {
    /// Wraps the pair; `f` must vanish at 0 and both series must reach at
    /// least order 1.
    pub fn new(g: Series<R>, f: Series<R>) -> Result<Self> {
        if !f.coeff(0).is_zero() {
            return Err(Error::ConstantTermNotZero("Riordan pair f".into()));
        }
        if g.order() == 0 || f.order() == 0 {
            return Err(Error::OrderExceeded { wanted: 1, order: 0 });
        }
        Ok(ExpRiordan { g, f })
    }

    pub fn g(&self) -> &Series<R> {
        &self.g
    }

    pub fn f(&self) -> &Series<R> {
        &self.f
    }

    /// Usable truncation order: the smaller of the two component orders.
    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    /// A pair is proper when `g(0)` and `f'(0)` are units; only proper pairs
    /// support inversion, Z/A-sequences and production matrices.
    pub fn is_proper(&self) -> bool {
        self.g.coeff(0).inv_unit().is_some() && self.f.coeff(1).inv_unit().is_some()
    }

    fn require_proper(&self, what: &str) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::ImproperPair(format!(
                "{what} needs units g(0) and f'(0); got g(0) = {}, f'(0) = {}",
                self.g.coeff(0),
                self.f.coeff(1)
            )))
        }
    }

    /// The triangle `T[i][k] = (i!/k!) [t^i] g f^k` for `i, k <= n`.
    /// Requires `n` within the truncation order.
    pub fn triangle(&self, n: usize) -> Result<RingMatrix<R>> {
        self.triangle_inner(n, false)
    }

    /// The `k!`-scaled triangle `T[i][k] = i! [t^i] g f^k`, whose production
    /// matrix loses the factorial prefactor.
    pub fn triangle_scaled(&self, n: usize) -> Result<RingMatrix<R>> {
        self.triangle_inner(n, true)
    }

    fn triangle_inner(&self, n: usize, scaled: bool) -> Result<RingMatrix<R>> {
        if n > self.order() {
            return Err(Error::OrderExceeded { wanted: n, order: self.order() });
        }
        let mut m = RingMatrix::zeros(n + 1, n + 1);
        let mut col = self.g.truncate(n);
        let f = self.f.truncate(n);
        for k in 0..=n {
            for i in 0..=n {
                let scale = if scaled {
                    Rational::from_integer(factorial(i))
                } else {
                    Rational::new(factorial(i), factorial(k))
                };
                m.set(i, k, col.coeff(i).scale(&scale));
            }
            if k < n {
                col = col.mul(&f);
            }
        }
        Ok(m)
    }

    /// Group law: `self * other = (g * h(f), l(f))` for `other = (h, l)`.
    /// On triangles this is plain matrix multiplication.
    pub fn multiply(&self, other: &ExpRiordan<R>) -> Result<ExpRiordan<R>> {
        let h_of_f = other.g.compose(&self.f)?;
        let l_of_f = other.f.compose(&self.f)?;
        ExpRiordan::new(self.g.mul(&h_of_f), l_of_f)
    }

    /// Group inverse `(1/g(fbar), fbar)`; requires a proper pair.
    pub fn inverse(&self) -> Result<ExpRiordan<R>> {
        self.require_proper("inverse")?;
        let fbar = self.f.revert()?;
        let g_of_fbar = self.g.compose(&fbar)?;
        let g_inv = Series::constant(R::one(), g_of_fbar.order()).div(&g_of_fbar)?;
        ExpRiordan::new(g_inv, fbar)
    }

    /// The Z- and A-sequences `(Z, A)` with `Z = g'(fbar)/g(fbar)` and
    /// `A = f'(fbar)`, both truncated at order `N - 1` (one order is consumed
    /// by the derivative).  `A` equals `1/fbar'` — a cross-check exercised in
    /// tests, not assumed here.
    pub fn za_sequences(&self) -> Result<(Series<R>, Series<R>)> {
        self.require_proper("Z/A-sequences")?;
        let n = self.order();
        let fbar = self.f.revert()?.truncate(n - 1);
        let a = self.f.derivative().compose(&fbar)?;
        let g_prime = self.g.derivative().compose(&fbar)?;
        let g_comp = self.g.truncate(n - 1).compose(&fbar)?;
        let z = g_prime.div(&g_comp)?;
        Ok((z, a))
    }

    /// Production matrix truncation of the given size (rows and columns
    /// `0..size`): `p[i][j] = (i!/j!) (z_{i-j} + j a_{i-j+1})`, zero for
    /// `j > i + 1`.  Requires `size <= order`.
    pub fn production_matrix(&self, size: usize) -> Result<RingMatrix<R>> {
        self.production_inner(size, false)
    }

    /// Production matrix of the `k!`-scaled triangle:
    /// `p[i][j] = z_{i-j} + j a_{i-j+1}`.
    pub fn production_matrix_scaled(&self, size: usize) -> Result<RingMatrix<R>> {
        self.production_inner(size, true)
    }

    fn production_inner(&self, size: usize, scaled: bool) -> Result<RingMatrix<R>> {
        if size == 0 {
            return Ok(RingMatrix::zeros(0, 0));
        }
        if size > self.order() {
            return Err(Error::OrderExceeded { wanted: size, order: self.order() });
        }
        let (z, a) = self.za_sequences()?;
        let mut p = RingMatrix::zeros(size, size);
        for i in 0..size {
            for j in 0..=(i + 1).min(size - 1) {
                let mut entry = if j <= i { z.coeff(i - j).clone() } else { R::zero() };
                if j >= 1 {
                    entry = entry.add(&a.coeff(i + 1 - j).scale(&Rational::from_integer(j.into())));
                }
                if !scaled {
                    entry = entry.scale(&Rational::new(factorial(i), factorial(j)));
                }
                p.set(i, j, entry);
            }
        }
        Ok(p)
    }

    /// Checks the defining identity of the production matrix exactly on a
    /// truncation: rows `1..=n` of the triangle must equal
    /// `(rows 0..n) * P`.  Consumes one extra order of series data, so it
    /// needs `n < order`.  Set `scaled` to check the `k!`-scaled variant.
    pub fn verify_production(&self, n: usize, scaled: bool) -> Result<bool> {
        let t = self.triangle_inner(n, scaled)?;
        let p = self.production_inner(n + 1, scaled)?;
        let top = t.submatrix(&(0..n).collect::<Vec<_>>(), &(0..=n).collect::<Vec<_>>());
        let shifted = t.submatrix(&(1..=n).collect::<Vec<_>>(), &(0..=n).collect::<Vec<_>>());
        Ok(top.mul(&p) == shifted)
    }
}

/// Divides row `n` by `n!`, turning the exponential triangle reading into
/// the ordinary one (`P_n/n!`, the cycle-index normalization).
pub fn divide_rows_by_factorial<R: Ring>(m: &RingMatrix<R>) -> RingMatrix<R> {
    RingMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        m.get(i, j).scale(&Rational::new(1.into(), factorial(i)))
    })
}

/// Row generating polynomials `sum_k T[n][k] q^k` of a polynomial-entry
/// triangle.  At least one entry must declare `q` in its variable set (the
/// rest may be plain constants, which promote), and no entry may already
/// use it.
pub fn row_polys(m: &RingMatrix<Poly>, q: &str) -> Result<Vec<Poly>> {
    let mut declaring = None;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).vars().index_of(q).is_some() {
                declaring = Some(m.get(i, j).vars().clone());
                break;
            }
        }
    }
    let vs = declaring.ok_or_else(|| {
        Error::Domain(format!("no triangle entry declares '{q}' in its variable set"))
    })?;
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut acc = Poly::zero();
        for j in 0..m.cols() {
            let entry = m.get(i, j);
            if entry.is_zero() {
                continue;
            }
            if entry.degree_in(q) > 0 {
                return Err(Error::Domain(format!(
                    "triangle entry ({i},{j}) already involves '{q}'"
                )));
            }
            let qk = Poly::var(&vs, q).pow(j);
            acc = acc.add(&entry.mul(&qk));
        }
        rows.push(acc);
    }
    Ok(rows)
}

/// Row generating polynomials of a rational triangle, lifted into the
/// polynomial ring over `vars` (which must declare `q`).
pub fn row_polys_rational(
    m: &RingMatrix<Rational>,
    vars: &crate::arith::VarSet,
    q: &str,
) -> Result<Vec<Poly>> {
    row_polys(&m.lift(vars), q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio, VarSet};

    fn pascal(order: usize) -> ExpRiordan<Rational> {
        ExpRiordan::new(Series::exp_t(order), Series::t(order)).unwrap()
    }

    fn laguerre0(order: usize) -> ExpRiordan<Rational> {
        let g = Series::geometric(order);
        let f = Series::t(order).mul(&g);
        ExpRiordan::new(g, f).unwrap()
    }

    fn lah(order: usize) -> ExpRiordan<Rational> {
        let f = Series::t(order).mul(&Series::geometric(order));
        ExpRiordan::new(Series::constant(rat(1), order), f).unwrap()
    }

    #[test]
    fn pascal_triangle_entries() {
        let t = pascal(5).triangle(5).unwrap();
        for n in 0..=5i64 {
            for k in 0..=5i64 {
                let expect = Rational::from_integer(crate::arith::binomial(n, k));
                assert_eq!(*t.get(n as usize, k as usize), expect, "({n},{k})");
            }
        }
    }

    #[test]
    fn partition_pair_counts_small_blocks() {
        // (1, t + t^2/2): partitions into blocks of size <= 2
        let f = Series::from_coeffs(vec![rat(0), rat(1), ratio(1, 2), rat(0), rat(0)]);
        let era = ExpRiordan::new(Series::constant(rat(1), 4), f).unwrap();
        let t = era.triangle(4).unwrap();
        assert_eq!(*t.get(4, 2), rat(3));
        assert_eq!(*t.get(4, 3), rat(6));
        assert_eq!(*t.get(3, 2), rat(3));
    }

    #[test]
    fn lah_row_polynomials() {
        let t = lah(4).triangle(4).unwrap();
        let vs = VarSet::new(["q"]);
        let rows = row_polys_rational(&t, &vs, "q").unwrap();
        let q = Poly::var(&vs, "q");
        let expect = q
            .scale(&rat(6))
            .add(&q.pow(2).scale(&rat(6)))
            .add(&q.pow(3));
        assert_eq!(rows[3], expect);
    }

    #[test]
    fn laguerre_row_two() {
        let t = laguerre0(4).triangle(4).unwrap();
        assert_eq!(t.row(2), &[rat(2), rat(4), rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn group_law_matches_matrix_product() {
        let n = 6;
        let a = laguerre0(n);
        let b = pascal(n);
        let prod = a.multiply(&b).unwrap();
        let lhs = prod.triangle(n).unwrap();
        let rhs = a.triangle(n).unwrap().mul(&b.triangle(n).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_against_matrix_inverse() {
        let n = 6;
        let era = laguerre0(n);
        let inv = era.inverse().unwrap();
        let product = era.triangle(n).unwrap().mul(&inv.triangle(n).unwrap());
        assert_eq!(product, RingMatrix::identity(n + 1));
    }

    #[test]
    fn tree_function_pair_is_inverse_of_idempotent_pair() {
        let n = 6;
        let f = Series::t(n).mul(&Series::exp_t(n));
        let era = ExpRiordan::new(Series::constant(rat(1), n), f).unwrap();
        let inv = era.inverse().unwrap();
        // fbar = revert(t e^t) = t - t^2 + 3/2 t^3 - ...
        assert_eq!(inv.f().coeff(2), &rat(-1));
        assert_eq!(inv.f().coeff(3), &ratio(3, 2));
        assert_eq!(inv.g().coeff(0), &rat(1));
    }

    #[test]
    fn za_sequences_of_laguerre() {
        let (z, a) = laguerre0(6).za_sequences().unwrap();
        // Z = 1 + t, A = (1 + t)^2
        assert_eq!(z.coeffs()[..4], [rat(1), rat(1), rat(0), rat(0)]);
        assert_eq!(a.coeffs()[..4], [rat(1), rat(2), rat(1), rat(0)]);
        // A * fbar' = 1
        let fbar = laguerre0(6).f().revert().unwrap();
        let check = a.mul(&fbar.derivative());
        assert_eq!(check, Series::constant(rat(1), check.order()));
    }

    #[test]
    fn za_sequences_symbolic_exponential_pair() {
        // (e^(lambda t), t): Z = lambda, A = 1
        let vs = VarSet::new(["lambda"]);
        let lam = Poly::var(&vs, "lambda");
        let f = Series::t(6).map(|c: &Rational| Poly::constant(&vs, c.clone()));
        let g = f.scale(&lam).exp().unwrap();
        let era = ExpRiordan::new(g, f).unwrap();
        let (z, a) = era.za_sequences().unwrap();
        assert_eq!(z, Series::constant(lam, 5));
        assert_eq!(a, Series::constant(Poly::constant(&vs, rat(1)), 5));
    }

    #[test]
    fn production_matrix_of_laguerre() {
        // Derived by hand from R̄ = R P on the signless Laguerre triangle.
        let p = laguerre0(6).production_matrix(4).unwrap();
        let expect = RingMatrix::new(
            4,
            4,
            [1, 1, 0, 0, 1, 3, 1, 0, 0, 4, 5, 1, 0, 0, 9, 7]
                .iter()
                .map(|&x| rat(x))
                .collect(),
        );
        assert_eq!(p, expect);
        assert!(laguerre0(8).verify_production(7, false).unwrap());
    }

    #[test]
    fn production_matrix_of_pascal_is_bidiagonal() {
        let p = pascal(6).production_matrix(5).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j || j == i + 1 { rat(1) } else { rat(0) };
                assert_eq!(*p.get(i, j), expect, "({i},{j})");
            }
        }
        assert!(pascal(8).verify_production(7, false).unwrap());
        assert!(pascal(8).verify_production(7, true).unwrap());
    }

    #[test]
    fn scaled_production_of_identity_pair() {
        // (1, t): unscaled production is the shift matrix; the k!-scaled
        // variant carries 1, 2, 3, ... on the superdiagonal.
        let era = ExpRiordan::new(Series::constant(rat(1), 6), Series::t(6)).unwrap();
        let p = era.production_matrix(4).unwrap();
        let ps = era.production_matrix_scaled(4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if j == i + 1 { rat(1) } else { rat(0) };
                assert_eq!(*p.get(i, j), expect);
                let expect_scaled = if j == i + 1 { rat(j as i64) } else { rat(0) };
                assert_eq!(*ps.get(i, j), expect_scaled);
            }
        }
        assert!(era.verify_production(5, true).unwrap());
    }

    #[test]
    fn improper_pairs_generate_but_do_not_invert() {
        // f = t^2 has f'(0) = 0
        let f = Series::t(6).mul(&Series::t(6));
        let era = ExpRiordan::new(Series::exp_t(6), f).unwrap();
        let t = era.triangle(6).unwrap();
        // column 1 comes from g * t^2: entry (2,1) = 2!/1! * [t^2] e^t t^2 = 2
        assert_eq!(*t.get(2, 1), rat(2));
        assert!(matches!(era.inverse(), Err(Error::ImproperPair(_))));
        assert!(matches!(era.za_sequences(), Err(Error::ImproperPair(_))));
        // f(0) != 0 is rejected outright
        assert!(matches!(
            ExpRiordan::new(Series::exp_t(4), Series::geometric(4)),
            Err(Error::ConstantTermNotZero(_))
        ));
    }

    #[test]
    fn factorial_normalization() {
        let t = pascal(3).triangle(3).unwrap();
        let a = divide_rows_by_factorial(&t);
        assert_eq!(
            a.row(3),
            &[ratio(1, 6), ratio(1, 2), ratio(1, 2), ratio(1, 6)]
        );
    }

    #[test]
    fn triangle_order_guard() {
        assert!(matches!(
            pascal(4).triangle(9),
            Err(Error::OrderExceeded { wanted: 9, order: 4 })
        ));
    }
}
