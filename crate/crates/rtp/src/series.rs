//! Truncated formal power series over a [`Ring`].
//!
//! A [`Series`] stores coefficients `c_0..c_N` for a fixed truncation order
//! `N`; binary operations truncate to the smaller order of their operands and
//! [`Series::derivative`] drops the order by one, so results never pretend to
//! know coefficients they cannot.  On top of the ring operations this module
//! provides the full compositional calculus needed for exponential Riordan
//! work:
//!
//! - [`Series::mul`], [`Series::div`] (unit constant term),
//! - [`Series::compose`] (inner series vanishing at 0),
//! - [`Series::revert`] — compositional inverse by Lagrange inversion,
//! - [`Series::exp`], [`Series::log`] — via exact first-order recurrences
//!   that only ever divide by integer scalars,
//! - [`Series::pow_rational`] — `g^e = exp(e log g)` for `g(0) = 1`,
//! - [`Series::egf_coeff`] — the exponential reading `n! [t^n]`.

use num_traits::Signed;

use crate::arith::{factorial, rat, Rational, Ring};
use crate::{Error, Result};

/// Power series truncated at a fixed order: `c_0 + c_1 t + ... + c_N t^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Builds from coefficients `c_0..c_N` (at least one required).
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        Series { coeffs }
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![R::zero(); order + 1] }
    }

    /// The constant series `c` at the given order.
    pub fn constant(c: R, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// The identity series `t` at the given order (which must be >= 1).
    pub fn t(order: usize) -> Self {
        assert!(order >= 1, "series t needs order >= 1");
        let mut coeffs = vec![R::zero(); order + 1];
        coeffs[1] = R::one();
        Series { coeffs }
    }

    /// Builds `c_n = f(n)` for `n = 0..=order`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> R) -> Self {
        Series { coeffs: (0..=order).map(|n| f(n)).collect() }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `t^n`.
    ///
    /// # Panics
    /// Panics beyond the truncation order; use [`Series::egf_coeff`] for a
    /// checked variant.
    pub fn coeff(&self, n: usize) -> &R {
        assert!(n < self.coeffs.len(), "coefficient {n} beyond order {}", self.order());
        &self.coeffs[n]
    }

    /// Exponential reading `n! * c_n`, with an order check.
    pub fn egf_coeff(&self, n: usize) -> Result<R> {
        if n >= self.coeffs.len() {
            return Err(Error::OrderExceeded { wanted: n, order: self.order() });
        }
        Ok(self.coeffs[n].scale(&Rational::from_integer(factorial(n))))
    }

    /// Lowers the truncation order (no-op when already lower or equal).
    pub fn truncate(&self, order: usize) -> Series<R> {
        let n = order.min(self.order());
        Series { coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn add(&self, other: &Series<R>) -> Series<R> {
        let n = self.order().min(other.order());
        Series::from_fn(n, |i| self.coeffs[i].add(&other.coeffs[i]))
    }

    pub fn sub(&self, other: &Series<R>) -> Series<R> {
        let n = self.order().min(other.order());
        Series::from_fn(n, |i| self.coeffs[i].sub(&other.coeffs[i]))
    }

    pub fn neg(&self) -> Series<R> {
        Series { coeffs: self.coeffs.iter().map(Ring::neg).collect() }
    }

    /// Scalar multiple by a ring element.
    pub fn scale(&self, c: &R) -> Series<R> {
        Series { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    /// Scalar multiple by a rational.
    pub fn scale_rat(&self, c: &Rational) -> Series<R> {
        Series { coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    /// Cauchy product, truncated to the smaller operand order.
    pub fn mul(&self, other: &Series<R>) -> Series<R> {
        let n = self.order().min(other.order());
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Series { coeffs }
    }

    /// Multiplies by `t^k` at fixed order (top coefficients fall off).
    pub fn shift_up(&self, k: usize) -> Series<R> {
        Series::from_fn(self.order(), |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                R::zero()
            }
        })
    }

    /// Quotient; requires the divisor's constant term to be a unit.
    pub fn div(&self, other: &Series<R>) -> Result<Series<R>> {
        let b0_inv = other.coeffs[0]
            .inv_unit()
            .ok_or_else(|| Error::NonUnitConstantTerm("series division".into()))?;
        let n = self.order().min(other.order());
        let mut coeffs: Vec<R> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for (k, c) in coeffs.iter().enumerate() {
                acc = acc.sub(&c.mul(&other.coeffs[i - k]));
            }
            coeffs.push(acc.mul(&b0_inv));
        }
        Ok(Series { coeffs })
    }

    /// Formal derivative; the order drops by one.
    ///
    /// # Panics
    /// Panics at order 0 (a derivative there would know nothing).
    pub fn derivative(&self) -> Series<R> {
        assert!(self.order() >= 1, "derivative of an order-0 series");
        Series::from_fn(self.order() - 1, |i| {
            self.coeffs[i + 1].scale(&rat((i + 1) as i64))
        })
    }

    /// Formal antiderivative with constant term 0; the order rises by one.
    pub fn integrate(&self) -> Series<R> {
        let mut coeffs = vec![R::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] = c.scale(&Rational::new(1.into(), (i as i64 + 1).into()));
        }
        Series { coeffs }
    }

    /// Composition `self(inner)`; the inner series must vanish at 0.
    pub fn compose(&self, inner: &Series<R>) -> Result<Series<R>> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero("composition inner series".into()));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion: needs `c_0 = 0` and `c_1`
    /// a unit.  The result `g` satisfies `self(g) = g(self) = t` up to the
    /// truncation order.
    pub fn revert(&self) -> Result<Series<R>> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero("reversion".into()));
        }
        let n = self.order();
        if n == 0 || self.coeffs[1].inv_unit().is_none() {
            return Err(Error::NonUnitConstantTerm("reversion needs a unit linear term".into()));
        }
        // h = t / self, truncated at n-1
        let shifted = Series { coeffs: self.coeffs[1..].to_vec() };
        let h = Series::constant(R::one(), n - 1).div(&shifted.truncate(n - 1))?;
        // g_k = (1/k) [t^(k-1)] h^k
        let mut coeffs = vec![R::zero(); n + 1];
        let mut power = h.clone();
        coeffs[1] = power.coeffs[0].clone();
        for k in 2..=n {
            power = power.mul(&h);
            coeffs[k] = power.coeffs[k - 1].scale(&Rational::new(1.into(), (k as i64).into()));
        }
        Ok(Series { coeffs })
    }

    /// Exponential of a series with zero constant term, through the exact
    /// recurrence `n e_n = sum_j j f_j e_{n-j}` (divisions by integers only).
    pub fn exp(&self) -> Result<Series<R>> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero("series exp".into()));
        }
        let n = self.order();
        let mut e = vec![R::zero(); n + 1];
        e[0] = R::one();
        for m in 1..=n {
            let mut acc = R::zero();
            for j in 1..=m {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].scale(&rat(j as i64)).mul(&e[m - j]));
            }
            e[m] = acc.scale(&Rational::new(1.into(), (m as i64).into()));
        }
        Ok(Series { coeffs: e })
    }

    /// Logarithm of a series with constant term 1, through the recurrence
    /// `n g_n = sum_j j L_j g_{n-j}` solved for `L_n` (no ring division).
    pub fn log(&self) -> Result<Series<R>> {
        if self.coeffs[0] != R::one() {
            return Err(Error::ConstantTermNotOne("series log".into()));
        }
        let n = self.order();
        let mut l = vec![R::zero(); n + 1];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&rat(m as i64));
            for j in 1..m {
                if l[j].is_zero() {
                    continue;
                }
                acc = acc.sub(&l[j].scale(&rat(j as i64)).mul(&self.coeffs[m - j]));
            }
            l[m] = acc.scale(&Rational::new(1.into(), (m as i64).into()));
        }
        Ok(Series { coeffs: l })
    }

    /// Rational power `self^e = exp(e log self)`; requires constant term 1.
    pub fn pow_rational(&self, e: &Rational) -> Result<Series<R>> {
        if self.coeffs[0] != R::one() {
            return Err(Error::ConstantTermNotOne("rational power".into()));
        }
        self.log()?.scale_rat(e).exp()
    }

    /// Integer power by repeated multiplication (negative powers invert,
    /// which needs a unit constant term).
    pub fn pow_int(&self, e: i64) -> Result<Series<R>> {
        let base = if e < 0 {
            Series::constant(R::one(), self.order()).div(self)?
        } else {
            self.clone()
        };
        let mut acc = Series::constant(R::one(), self.order());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Entrywise map into another ring (used to lift rational series into a
    /// polynomial coefficient domain).
    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Coefficients as a JSON array.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(Ring::to_json).collect())
    }
}

impl Series<Rational> {
    /// The exponential series of a rational sequence: `sum a_n t^n / n!`.
    pub fn egf_of(terms: &[Rational]) -> Series<Rational> {
        assert!(!terms.is_empty());
        Series::from_fn(terms.len() - 1, |n| {
            &terms[n] / Rational::from_integer(factorial(n))
        })
    }

    /// `exp(t)` truncated at the given order.
    pub fn exp_t(order: usize) -> Series<Rational> {
        Series::from_fn(order, |n| Rational::new(1.into(), factorial(n)))
    }

    /// `1/(1-t)` truncated at the given order.
    pub fn geometric(order: usize) -> Series<Rational> {
        Series::from_fn(order, |_| rat(1))
    }

    /// True when every coefficient is nonnegative.
    pub fn is_coeff_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ratio, Poly, VarSet};

    fn srat(coeffs: &[i64]) -> Series<Rational> {
        Series::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn product_truncates_to_smaller_order() {
        let a = srat(&[1, 1, 0, 0, 0]); // 1 + t at order 4
        let b = srat(&[1, -1, 0, 0, 0]);
        assert_eq!(a.mul(&b), srat(&[1, 0, -1, 0, 0]));
        let short = srat(&[1, -1]);
        assert_eq!(a.mul(&short).order(), 1);
    }

    #[test]
    fn geometric_division() {
        let one = Series::constant(rat(1), 5);
        let denom = srat(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(one.div(&denom).unwrap(), Series::geometric(5));
        // dividing by t is rejected
        let t = Series::<Rational>::t(5);
        assert!(matches!(one.div(&t), Err(Error::NonUnitConstantTerm(_))));
    }

    #[test]
    fn compose_moebius_into_geometric() {
        // 1/(1-u) at u = t/(1+t) collapses to 1 + t
        let outer = Series::geometric(6);
        let inner = Series::<Rational>::t(6)
            .div(&srat(&[1, 1, 0, 0, 0, 0, 0]))
            .unwrap();
        let composed = outer.compose(&inner).unwrap();
        assert_eq!(composed, srat(&[1, 1, 0, 0, 0, 0, 0]));
        // inner constant term must vanish
        assert!(matches!(
            outer.compose(&Series::constant(rat(1), 6)),
            Err(Error::ConstantTermNotZero(_))
        ));
    }

    #[test]
    fn reversion_of_t_exp_t() {
        // revert(t e^t) = sum (-n)^(n-1) t^n / n! = t - t^2 + 3/2 t^3 - ...
        let f = Series::<Rational>::t(3).mul(&Series::exp_t(3));
        let w = f.revert().unwrap();
        assert_eq!(w.coeffs(), &[rat(0), rat(1), rat(-1), ratio(3, 2)]);
        assert_eq!(w.egf_coeff(3).unwrap(), rat(9));
        assert!(matches!(w.egf_coeff(4), Err(Error::OrderExceeded { wanted: 4, order: 3 })));
        // round trip both ways
        let n = 8;
        let f = Series::<Rational>::t(n).mul(&Series::exp_t(n));
        let w = f.revert().unwrap();
        assert_eq!(f.compose(&w).unwrap(), Series::t(n));
        assert_eq!(w.compose(&f).unwrap(), Series::t(n));
    }

    #[test]
    fn exp_log_round_trip() {
        let f = Series::from_coeffs(vec![rat(0), rat(1), ratio(1, 2), rat(-2), ratio(5, 3)]);
        let e = f.exp().unwrap();
        assert_eq!(e.log().unwrap(), f);
        assert!(matches!(
            Series::constant(rat(1), 3).add(&Series::t(3)).exp().err(),
            Some(Error::ConstantTermNotZero(_))
        ));
        assert!(matches!(
            Series::<Rational>::t(3).log().err(),
            Some(Error::ConstantTermNotOne(_))
        ));
    }

    #[test]
    fn square_root_of_one_minus_two_t() {
        let base = srat(&[1, -2, 0]);
        let root = base.pow_rational(&ratio(1, 2)).unwrap();
        assert_eq!(root.coeffs(), &[rat(1), rat(-1), ratio(-1, 2)]);
        // pow is additive in the exponent: g^(1/2) * g^(1/2) = g
        let again = root.mul(&root);
        assert_eq!(again, base);
    }

    #[test]
    fn integer_powers_allow_non_unit_base() {
        let f = Series::<Rational>::t(6).mul(&Series::exp_t(6));
        let cube = f.pow_int(3).unwrap();
        assert_eq!(cube, f.mul(&f).mul(&f));
        let inv = srat(&[1, 1, 0, 0]).pow_int(-1).unwrap();
        assert_eq!(inv.coeffs(), &[rat(1), rat(-1), rat(1), rat(-1)]);
    }

    #[test]
    fn derivative_drops_order() {
        // sum t^j / j for j >= 1, truncated at 4
        let f = Series::from_coeffs(vec![
            rat(0),
            rat(1),
            ratio(1, 2),
            ratio(1, 3),
            ratio(1, 4),
        ]);
        let d = f.derivative();
        assert_eq!(d.coeffs(), &[rat(1), rat(1), rat(1), rat(1)]);
        assert_eq!(d.order(), 3);
        assert_eq!(f.derivative().integrate(), f);
    }

    #[test]
    fn works_over_polynomial_coefficients() {
        // exp(lambda * (e^t - 1)) has coefficient Bell-polynomial(lambda)/n!
        let vs = VarSet::new(["lambda"]);
        let lam = Poly::var(&vs, "lambda");
        let expm1 = Series::exp_t(5).sub(&Series::constant(rat(1), 5));
        let lifted = expm1.map(|c| Poly::constant(&vs, c.clone()));
        let g = lifted.scale(&lam).exp().unwrap();
        // n = 3: Bell polynomial lambda + 3 lambda^2 + lambda^3
        let expect = lam
            .add(&lam.pow(2).scale(&rat(3)))
            .add(&lam.pow(3));
        assert_eq!(g.egf_coeff(3).unwrap(), expect);
    }
}
