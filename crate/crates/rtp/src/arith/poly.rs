//! Multivariate polynomials over [`Rational`] with a declared variable list.
//!
//! A [`VarSet`] fixes the ordered list of symbols for a whole job up front;
//! every [`Poly`] carries its set, and arithmetic between polynomials over
//! *different* non-empty sets is a programming error (it panics rather than
//! guessing a merge).  Constants produced through the [`Ring`] trait carry an
//! empty set and silently promote to either operand's set, so generic series
//! and matrix code works unchanged.
//!
//! Terms live in a sorted map from dense exponent vectors to nonzero
//! coefficients, which makes iteration order — and therefore rendering,
//! serialization and reported witnesses — deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Signed;

use super::ring::{parse_rational, rat, Rational, Ring};
use super::unipoly::UniPoly;
use crate::{Error, Result};

/// Ordered, immutable list of variable names shared by all polynomials of a
/// job.  Cloning is cheap (reference-counted).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    /// Declares a variable list.  Names must be distinct and non-empty.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!n.is_empty(), "empty variable name");
            assert!(!names[..i].contains(n), "duplicate variable '{n}'");
        }
        VarSet(Arc::new(names))
    }

    /// The empty set used for ring constants.
    pub fn empty() -> Self {
        VarSet(Arc::new(Vec::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    /// Position of `name`, or `None` if undeclared.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

/// Multivariate polynomial: sorted map from dense exponent vectors (one slot
/// per declared variable) to nonzero rational coefficients.
#[derive(Clone, Debug)]
pub struct Poly {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    /// The zero polynomial over `vars`.
    pub fn zero_in(vars: &VarSet) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    /// A constant polynomial over `vars`.
    pub fn constant(vars: &VarSet, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(vec![0; vars.len()], value);
        }
        Poly { vars: vars.clone(), terms }
    }

    /// The polynomial `name` (degree-1 monomial).
    ///
    /// # Panics
    /// Panics if `name` is not declared in `vars`.
    pub fn var(vars: &VarSet, name: &str) -> Self {
        let i = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("variable '{name}' not declared in {:?}", vars.names()));
        let mut exp = vec![0; vars.len()];
        exp[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, rat(1));
        Poly { vars: vars.clone(), terms }
    }

    /// Builds a polynomial from `(exponent vector, coefficient)` pairs.
    /// Duplicate exponent vectors accumulate; zero coefficients drop out.
    pub fn from_terms(
        vars: &VarSet,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (exp, coef) in terms {
            assert_eq!(exp.len(), vars.len(), "exponent vector length != variable count");
            let entry = map.entry(exp).or_insert_with(Rational::zero);
            *entry += coef;
        }
        map.retain(|_, c| !c.is_zero());
        Poly { vars: vars.clone(), terms: map }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Iterates terms in deterministic (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `Some(value)` when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(rat(0)),
            1 => {
                let (exp, coef) = self.terms.iter().next().unwrap();
                if exp.iter().all(|&e| e == 0) {
                    Some(coef.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Degree in a single variable (`0` for the zero polynomial).
    pub fn degree_in(&self, name: &str) -> usize {
        let Some(i) = self.vars.index_of(name) else { return 0 };
        self.terms.keys().map(|e| e[i] as usize).max().unwrap_or(0)
    }

    /// Total degree (`0` for the zero polynomial).
    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// The coefficient of `name^k`, as a polynomial with that variable's
    /// exponent zeroed (same variable set).
    pub fn coeff_of(&self, name: &str, k: usize) -> Poly {
        let Some(i) = self.vars.index_of(name) else {
            return if k == 0 { self.clone() } else { Poly::zero_in(&self.vars) };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] as usize == k)
            .map(|(e, c)| {
                let mut e = e.clone();
                e[i] = 0;
                (e, c.clone())
            });
        Poly::from_terms(&self.vars, terms)
    }

    /// Substitutes a rational value for one variable.
    pub fn bind(&self, name: &str, value: &Rational) -> Poly {
        let Some(i) = self.vars.index_of(name) else { return self.clone() };
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            let k = e[i];
            e[i] = 0;
            (e, c * super::ring::pow_rat(value, k as i64))
        });
        Poly::from_terms(&self.vars, terms)
    }

    /// Evaluates at a fully rational point.  Errors if any variable with a
    /// nonzero exponent is missing from `point`.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let mut acc = rat(0);
        for (exp, coef) in &self.terms {
            let mut term = coef.clone();
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &self.vars.names()[i];
                let v = point
                    .get(name)
                    .ok_or_else(|| Error::Domain(format!("unbound variable '{name}'")))?;
                term *= super::ring::pow_rat(v, e as i64);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Reverses the exponents of one variable against a ceiling `n`:
    /// `name^e` becomes `name^(n-e)`.  This is the reciprocal transform
    /// `P*(q) = q^n P(1/q)` for polynomials of degree at most `n`.
    pub fn reverse_in(&self, name: &str, n: usize) -> Result<Poly> {
        let deg = self.degree_in(name);
        if deg > n {
            return Err(Error::DegreeExceedsIndex { index: n, degree: deg });
        }
        let Some(i) = self.vars.index_of(name) else {
            return Err(Error::Domain(format!("variable '{name}' not declared")));
        };
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            e[i] = (n - e[i] as usize) as u32;
            (e, c.clone())
        });
        Ok(Poly::from_terms(&self.vars, terms))
    }

    /// Converts to a univariate polynomial in `name`; every other variable
    /// must have exponent zero throughout.
    pub fn to_unipoly(&self, name: &str) -> Result<UniPoly> {
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::Domain(format!("variable '{name}' not declared")))?;
        let mut coeffs = vec![rat(0); self.degree_in(name) + 1];
        for (exp, coef) in &self.terms {
            for (j, &e) in exp.iter().enumerate() {
                if j != i && e != 0 {
                    return Err(Error::Domain(format!(
                        "polynomial is not univariate in '{name}': {self}"
                    )));
                }
            }
            coeffs[exp[i] as usize] = coef.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: usize) -> Poly {
        let mut acc = Poly::constant(&self.vars, rat(1));
        for _ in 0..n {
            acc = Ring::mul(&acc, self);
        }
        acc
    }

    /// Aligns variable sets, promoting empty-set constants; panics when both
    /// sets are non-empty and different.
    fn aligned(&self, other: &Poly) -> (Poly, Poly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        if self.vars.is_empty() {
            return (other.promote_constant_from(self), other.clone());
        }
        if other.vars.is_empty() {
            return (self.clone(), self.promote_constant_from(other));
        }
        panic!(
            "polynomial variable sets differ: {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
    }

    /// Re-homes an empty-set constant into `self`'s variable set.
    fn promote_constant_from(&self, constant: &Poly) -> Poly {
        let value = constant
            .as_constant()
            .expect("only constants may be promoted between variable sets");
        Poly::constant(&self.vars, value)
    }

    /// Leading term under the map's lexicographic order (a valid monomial
    /// order for the exact-division algorithm).
    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        // Constants compare across variable sets; anything else is unequal.
        if self.vars.is_empty() || other.vars.is_empty() {
            let (a, b) = self.aligned(other);
            return a.terms == b.terms;
        }
        false
    }
}

impl Eq for Poly {}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (i, (exp, coef)) in self.terms.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for (j, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[j].clone()),
                    _ => factors.push(format!("{}^{}", names[j], e)),
                }
            }
            let abs = coef.abs();
            let mut piece = if factors.is_empty() {
                abs.to_string()
            } else if abs == rat(1) {
                factors.join("*")
            } else {
                format!("{}*{}", abs, factors.join("*"))
            };
            if i == 0 {
                if coef.is_negative() {
                    piece = format!("-{piece}");
                }
            } else {
                piece = format!("{}{piece}", if coef.is_negative() { " - " } else { " + " });
            }
            write!(f, "{piece}")?;
        }
        Ok(())
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero_in(&VarSet::empty())
    }

    fn one() -> Self {
        Poly::constant(&VarSet::empty(), rat(1))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (exp, coef) in b.terms {
            let entry = a.terms.entry(exp).or_insert_with(Rational::zero);
            *entry += coef;
        }
        a.terms.retain(|_, c| !c.is_zero());
        a
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c));
        Poly { vars: self.vars.clone(), terms: terms.collect() }
    }

    fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(exp).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { vars: a.vars, terms }
    }

    fn from_rational(r: &Rational) -> Self {
        Poly::constant(&VarSet::empty(), r.clone())
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Poly::zero_in(&self.vars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * r));
        Poly { vars: self.vars.clone(), terms: terms.collect() }
    }

    fn inv_unit(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if c.is_zero() {
            None
        } else {
            Some(Poly::constant(&self.vars, c.recip()))
        }
    }

    /// Single-divisor multivariate division; `Some` exactly when the
    /// division is remainder-free.
    fn exact_div(&self, other: &Self) -> Option<Self> {
        let (mut rem, d) = self.aligned(other);
        let (dexp, dcoef) = d.leading()?; // None for division by zero
        let (dexp, dcoef) = (dexp.clone(), dcoef.clone());
        let mut quot = Poly::zero_in(&rem.vars);
        while let Some((rexp, rcoef)) = rem.leading() {
            if rexp.iter().zip(&dexp).any(|(r, d)| r < d) {
                return None;
            }
            let qexp: Vec<u32> = rexp.iter().zip(&dexp).map(|(r, d)| r - d).collect();
            let qcoef = rcoef / &dcoef;
            let piece = Poly::from_terms(&rem.vars, [(qexp, qcoef)]);
            rem = rem.sub(&piece.mul(&d));
            quot = quot.add(&piece);
        }
        Some(quot)
    }

    fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    const EXPANSION_DET_LIMIT: usize = 8;

    fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(exp, coef)| {
                serde_json::json!({
                    "exp": exp,
                    "coef": coef.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "vars": self.vars.names(),
            "terms": terms,
        })
    }

    fn from_json(v: &serde_json::Value) -> crate::Result<Self> {
        let bad = |what: &str| crate::Error::Parse(format!("polynomial JSON: {what}"));
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let names: Vec<String> = obj
            .get("vars")
            .and_then(|n| n.as_array())
            .ok_or_else(|| bad("missing 'vars' array"))?
            .iter()
            .map(|n| n.as_str().map(String::from).ok_or_else(|| bad("non-string variable name")))
            .collect::<crate::Result<_>>()?;
        let vars = if names.is_empty() { VarSet::empty() } else { VarSet::new(names) };
        let mut terms = Vec::new();
        for term in obj
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| bad("missing 'terms' array"))?
        {
            let exp: Vec<u32> = term
                .get("exp")
                .and_then(|e| e.as_array())
                .ok_or_else(|| bad("term missing 'exp'"))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| bad("exponent out of range"))
                })
                .collect::<crate::Result<_>>()?;
            if exp.len() != vars.len() {
                return Err(bad("exponent vector length != variable count"));
            }
            let coef = term
                .get("coef")
                .and_then(|c| c.as_str())
                .ok_or_else(|| bad("term missing 'coef' string"))?;
            terms.push((exp, parse_rational(coef)?));
        }
        Ok(Poly::from_terms(&vars, terms))
    }
}
