//! The coefficient-ring abstraction and rational-number helpers.

use std::fmt::{Debug, Display};
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, Sign};
use num_traits::One;

use crate::{Error, Result};

/// Arbitrary-precision rational scalar.  Values are always reduced and carry
/// a positive denominator; `Display` renders `p` for integers and `p/q`
/// otherwise, which is exactly the serialization format used in job files
/// and reports.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the reduced fraction `p/q`.
///
/// # Panics
/// Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` (optionally signed) into a [`Rational`].
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = || Error::Parse(format!("invalid rational '{text}'"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| err()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if num_traits::Zero::is_zero(&q) {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// `n!` as an exact integer, served from a process-wide append-only cache.
pub fn factorial(n: usize) -> BigInt {
    static CACHE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(vec![BigInt::one()]));
    {
        let table = cache.read().unwrap();
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = cache.write().unwrap();
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient through the falling-factorial definition
/// `C(x, k) = x(x-1)...(x-k+1)/k!` for integer `x`, with `C(x, k) = 0` for
/// `k < 0`.  For `x >= 0` this agrees with the combinatorial convention,
/// including `C(x, k) = 0` for `k > x`.
pub fn binomial(x: i64, k: i64) -> BigInt {
    if k < 0 {
        return <BigInt as num_traits::Zero>::zero();
    }
    let mut acc = BigInt::one();
    for s in 0..k {
        acc *= BigInt::from(x - s);
    }
    acc / factorial(k as usize)
}

/// Binomial coefficient `C(x, k)` with a rational (possibly non-integer)
/// upper argument, again via falling factorials; `0` for `k < 0`.
pub fn binomial_rat(x: &Rational, k: i64) -> Rational {
    if k < 0 {
        return rat(0);
    }
    falling(x, k as usize) / Rational::from_integer(factorial(k as usize))
}

/// Falling factorial `x(x-1)(x-2)...(x-n+1)`; the empty product for `n = 0`.
pub fn falling(x: &Rational, n: usize) -> Rational {
    let mut acc = rat(1);
    for s in 0..n {
        acc *= x - rat(s as i64);
    }
    acc
}

/// Odd double factorial `m!! = m(m-2)(m-4)...1` for odd `m >= -1`, with the
/// empty-product conventions `(-1)!! = 1!! = 1`.
///
/// # Panics
/// Panics if `m` is even or below `-1`.
pub fn odd_double_factorial(m: i64) -> BigInt {
    assert!(m >= -1 && m % 2 != 0, "double factorial defined here for odd m >= -1, got {m}");
    let mut acc = BigInt::one();
    let mut k = m;
    while k >= 2 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    acc
}

/// Integer power of a rational with the empty-product convention `0^0 = 1`.
///
/// # Panics
/// Panics on negative powers of zero.
pub fn pow_rat(base: &Rational, e: i64) -> Rational {
    if e == 0 {
        return rat(1);
    }
    if num_traits::Zero::is_zero(base) {
        assert!(e > 0, "negative power of zero");
        return rat(0);
    }
    let mut acc = rat(1);
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Exact coefficient domain used by series, matrices, triangles and
/// certificates.  Implementors are commutative rings containing the
/// rationals; both implementations in this crate ([`Rational`] itself and
/// [`crate::arith::Poly`]) are integral domains, which the fraction-free
/// determinant relies on.
pub trait Ring: Clone + PartialEq + Debug + Display {
    /// Additive identity.
    fn zero() -> Self;
    /// Multiplicative identity.
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Embeds a rational scalar.
    fn from_rational(r: &Rational) -> Self;
    /// Exact multiplication by a rational scalar (always defined).
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse, when `self` is a unit of the ring.
    fn inv_unit(&self) -> Option<Self>;
    /// Exact ring division: `Some(q)` with `q * other == self`, else `None`.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    /// Nonnegativity in the sense used by positivity checks: sign test for
    /// rationals, *every coefficient nonnegative* for polynomials.
    fn is_nonneg(&self) -> bool;
    /// Matrices up to this size use memoized cofactor expansion for
    /// determinants instead of fraction-free elimination (`0` = never).
    const EXPANSION_DET_LIMIT: usize;
    /// JSON rendering used in reports and serialized triangles.
    fn to_json(&self) -> serde_json::Value;
    /// Inverse of [`Ring::to_json`]; certificates read witnesses back through
    /// this when re-validating a stored report.
    fn from_json(v: &serde_json::Value) -> crate::Result<Self>;
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as num_traits::Zero>::zero()
    }

    fn one() -> Self {
        <Rational as num_traits::One>::one()
    }

    fn is_zero(&self) -> bool {
        <Rational as num_traits::Zero>::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn inv_unit(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }

    fn is_nonneg(&self) -> bool {
        self.numer().sign() != Sign::Minus
    }

    const EXPANSION_DET_LIMIT: usize = 0;

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }

    fn from_json(v: &serde_json::Value) -> crate::Result<Self> {
        match v {
            serde_json::Value::String(s) => parse_rational(s),
            other => Err(crate::Error::Parse(format!(
                "expected a rational string, got {other}"
            ))),
        }
    }
}
