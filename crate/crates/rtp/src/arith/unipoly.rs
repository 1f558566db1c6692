//! Univariate polynomials over [`Rational`] and exact Sturm root counting.
//!
//! [`sturm_real_root_count`] counts *distinct* real roots on a half-open
//! interval `(lo, hi]` whose endpoints may be `±∞` (see [`Endpoint`]); the
//! chain is built on the square-free part, every remainder is scaled to a
//! primitive integer polynomial to keep coefficients small, and sign
//! variations are evaluated with the drop-zeros convention, which makes the
//! half-open endpoint semantics exact.  [`real_root_count_with_multiplicity`]
//! layers the classical gcd recursion on top so that full real-rootedness
//! (`count == degree`) can be certified even with repeated roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::Rational;
use crate::{Error, Result};

/// Interval endpoint for root counting: finite rational or `±∞`.
/// These tagged infinities are only legal here, never inside arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Endpoint {
    /// `true` when `self` is strictly below `other` on the extended line.
    fn below(&self, other: &Endpoint) -> bool {
        match (self, other) {
            (Endpoint::NegInf, Endpoint::NegInf) | (Endpoint::PosInf, Endpoint::PosInf) => false,
            (Endpoint::NegInf, _) | (_, Endpoint::PosInf) => true,
            (_, Endpoint::NegInf) | (Endpoint::PosInf, _) => false,
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a < b,
        }
    }
}

/// Univariate polynomial, coefficients lowest-degree first with no stored
/// trailing zeros; the zero polynomial stores no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    /// Builds from lowest-first coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        UniPoly::new(coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    /// Quotient and remainder of exact rational long division.
    ///
    /// # Panics
    /// Panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let mut sub = vec![Rational::zero(); shift + dd + 1];
            for (i, c) in divisor.coeffs.iter().enumerate() {
                sub[shift + i] = c * &factor;
            }
            rem = rem.sub(&UniPoly::new(sub));
        }
        (UniPoly::new(quot), rem)
    }

    /// Exact quotient; `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Multiplicity of the root at 0 (number of leading zero coefficients);
    /// 0 for the zero polynomial.
    pub fn root_multiplicity_at_zero(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divides out `x^m`.
    ///
    /// # Panics
    /// Panics if the first `m` coefficients are not all zero.
    pub fn shift_down(&self, m: usize) -> UniPoly {
        assert!(
            self.coeffs.iter().take(m).all(|c| c.is_zero()),
            "polynomial not divisible by x^{m}"
        );
        UniPoly::new(self.coeffs.iter().skip(m).cloned().collect())
    }

    /// Scales to a primitive integer polynomial (content 1), preserving all
    /// signs.  Sturm chains use this to keep coefficient sizes in check; any
    /// positive rescaling leaves sign variations untouched.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let content = scaled
            .iter()
            .filter(|n| !n.is_zero())
            .fold(BigInt::zero(), |acc, n| acc.gcd(n));
        UniPoly {
            coeffs: scaled
                .into_iter()
                .map(|n| Rational::from_integer(n / &content))
                .collect(),
        }
    }

    /// Primitive gcd with positive leading coefficient; `gcd(p, 0) = p`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        if a.leading().map_or(false, |c| c.is_negative()) {
            a = a.neg();
        }
        a
    }

    /// Square-free part `self / gcd(self, self')`, carrying exactly the
    /// distinct roots of `self`.
    pub fn square_free_part(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive();
        }
        self.div_exact(&g)
            .expect("gcd(p, p') always divides p")
            .primitive()
    }

    /// Sign of the polynomial at a (possibly infinite) endpoint:
    /// `-1`, `0`, or `1`.
    fn sign_at(&self, at: &Endpoint) -> i8 {
        let Some(deg) = self.degree() else { return 0 };
        let sign_of = |r: &Rational| -> i8 {
            if r.is_zero() {
                0
            } else if r.is_negative() {
                -1
            } else {
                1
            }
        };
        match at {
            Endpoint::Finite(x) => sign_of(&self.eval(x)),
            Endpoint::PosInf => sign_of(self.leading().unwrap()),
            Endpoint::NegInf => {
                let s = sign_of(self.leading().unwrap());
                if deg % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let body = match i {
                0 => abs.to_string(),
                1 if abs.is_one() => "x".to_string(),
                1 => format!("{abs}*x"),
                _ if abs.is_one() => format!("x^{i}"),
                _ => format!("{abs}*x^{i}"),
            };
            if first {
                write!(f, "{}{body}", if c.is_negative() { "-" } else { "" })?;
                first = false;
            } else {
                write!(f, "{}{body}", if c.is_negative() { " - " } else { " + " })?;
            }
        }
        Ok(())
    }
}

/// Sturm chain of the square-free part: `p0 = p, p1 = p', p_{k+1} =
/// -rem(p_{k-1}, p_k)`, each member reduced to a primitive integer
/// polynomial.
fn sturm_chain(square_free: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![square_free.clone()];
    let d = square_free.derivative().primitive();
    if !d.is_zero() {
        chain.push(d);
    }
    while chain.last().unwrap().degree().map_or(false, |d| d > 0) {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().primitive());
    }
    chain
}

/// Sign variations of the chain at an endpoint, zeros dropped.
fn variations(chain: &[UniPoly], at: &Endpoint) -> usize {
    let signs: Vec<i8> = chain.iter().map(|p| p.sign_at(at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Counts **distinct** real roots of `p` in the half-open interval
/// `(lo, hi]`; endpoints may be `±∞`.  Errors on the zero polynomial.
pub fn sturm_real_root_count(p: &UniPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.below(hi) {
        return Ok(0);
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(&p.square_free_part());
    let at_lo = variations(&chain, lo);
    let at_hi = variations(&chain, hi);
    Ok(at_lo.saturating_sub(at_hi))
}

/// Counts real roots of `p` in `(lo, hi]` **with multiplicity**, via the
/// recursion `count(p) = distinct(p) + count(gcd(p, p'))`.
pub fn real_root_count_with_multiplicity(
    p: &UniPoly,
    lo: &Endpoint,
    hi: &Endpoint,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut total = 0;
    let mut current = p.primitive();
    while current.degree().map_or(false, |d| d > 0) {
        total += sturm_real_root_count(&current, lo, hi)?;
        current = current.gcd(&current.derivative());
    }
    Ok(total)
}
