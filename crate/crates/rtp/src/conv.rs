//! Triangle-weighted convolutions of moment sequences, and probes for
//! whether a triangle *preserves* the Stieltjes moment property.
//!
//! The transform under test is
//!
//! ```text
//! z_n = sum_k A[n][k] x_k y_{n-k}
//! ```
//!
//! for a lower-triangular weight matrix `A`.  For several triangles in the
//! catalog this provably sends pairs of Stieltjes moment sequences to
//! Stieltjes moment sequences; [`sm_preservation_probe`] checks that claim
//! exhaustively over a registered sample library at a finite truncation, and
//! produces a re-checkable [`Witness`] when it fails.  Samples themselves
//! are validated at registration time ([`SmSample::new`]), so a probe
//! failure always indicts the triangle, not the inputs.
//!
//! [`alternating_pascal`] is a deliberate non-preserver kept for witness
//! plumbing: convolved with `(k!)` and the constant sequence it produces the
//! derangement numbers, whose shifted Hankel matrix has a negative minor.

use crate::arith::{factorial, pow_rat, rat, ratio, Poly, Rational, Ring};
use crate::matrix::RingMatrix;
use crate::positivity::{is_sm_r, Verdict};
use crate::{Error, Result};

/// Term count used by [`standard_library`].
pub const LIBRARY_TERMS: usize = 17;
/// Minor order used when validating library samples.
pub const LIBRARY_MINOR_ORDER: usize = 3;
/// Registration validates at the largest truncation the terms support, but
/// no further than this (Hankel minors over long fast-growing sequences get
/// expensive without strengthening the certificate meaningfully).
pub const VALIDATION_TRUNCATION_CAP: usize = 5;

/// A named rational sequence registered as a Stieltjes moment sequence.
#[derive(Clone, Debug)]
pub struct SmSample {
    name: String,
    terms: Vec<Rational>,
    note: String,
}

impl SmSample {
    /// Registers a sample after verifying the moment property at the
    /// largest truncation its terms support (capped at
    /// [`VALIDATION_TRUNCATION_CAP`]), with minors up to order `r`.
    pub fn new(name: &str, terms: Vec<Rational>, note: &str, r: usize) -> Result<SmSample> {
        if terms.len() < 3 {
            return Err(Error::InsufficientTerms { needed: 3, have: terms.len() });
        }
        let n = ((terms.len() - 2) / 2).min(VALIDATION_TRUNCATION_CAP);
        let verdict = is_sm_r(&terms, n, r)?;
        if !verdict.pass {
            return Err(Error::SampleNotSm(format!(
                "sample '{name}' fails the moment probe at truncation {n}, minor order {r}"
            )));
        }
        Ok(SmSample { name: name.into(), terms, note: note.into() })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    /// Human-readable description of where the sequence comes from.
    pub fn note(&self) -> &str {
        &self.note
    }
}

/// A geometric sample `1, r, r^2, ...`; the ratio must be positive (it is
/// the support point of the representing measure).
pub fn geometric_sample(ratio: &Rational, len: usize, r: usize) -> Result<SmSample> {
    if ratio <= &rat(0) {
        return Err(Error::NonPositiveScale(format!(
            "geometric sample needs a positive ratio, got {ratio}"
        )));
    }
    let terms: Vec<Rational> = (0..len).map(|n| pow_rat(ratio, n as i64)).collect();
    SmSample::new(&format!("geometric-{ratio}"), terms, "powers of a positive ratio", r)
}

/// The standard six-sample library: factorials, Catalan numbers, the
/// quotients `(2n)!/n!`, the constant sequence, a geometric sequence, and
/// the rooted-forest counts `(n+1)^n`.
pub fn standard_library() -> Result<Vec<SmSample>> {
    let len = LIBRARY_TERMS;
    let r = LIBRARY_MINOR_ORDER;
    let mut catalan = Vec::with_capacity(len);
    catalan.push(rat(1));
    for n in 0..len - 1 {
        let next = &catalan[n] * ratio(2 * (2 * n as i64 + 1), n as i64 + 2);
        catalan.push(next);
    }
    Ok(vec![
        SmSample::new(
            "factorial",
            (0..len).map(|n| Rational::from_integer(factorial(n))).collect(),
            "n!",
            r,
        )?,
        SmSample::new("catalan", catalan, "Catalan numbers", r)?,
        SmSample::new(
            "even-factorial-quotient",
            (0..len)
                .map(|n| Rational::new(factorial(2 * n), factorial(n)))
                .collect(),
            "(2n)!/n!",
            r,
        )?,
        SmSample::new("ones", vec![rat(1); len], "constant one", r)?,
        geometric_sample(&rat(2), len, r)?,
        SmSample::new(
            "rooted-forests",
            (0..len).map(|n| pow_rat(&rat(n as i64 + 1), n as i64)).collect(),
            "(n+1)^n",
            r,
        )?,
    ])
}

/// The weighted convolution `z_n = sum_k A[n][k] x_k y_{n-k}` for
/// `n = 0..=n_max`.
pub fn a_convolution<R: Ring>(
    a: &RingMatrix<R>,
    xs: &[R],
    ys: &[R],
    n_max: usize,
) -> Result<Vec<R>> {
    if a.rows() <= n_max || a.cols() <= n_max {
        return Err(Error::OrderExceeded { wanted: n_max, order: a.rows().saturating_sub(1) });
    }
    let have = xs.len().min(ys.len());
    if have <= n_max {
        return Err(Error::InsufficientTerms { needed: n_max + 1, have });
    }
    Ok((0..=n_max)
        .map(|n| {
            let mut acc = R::zero();
            for k in 0..=n {
                acc = acc.add(&a.get(n, k).mul(&xs[k]).mul(&ys[n - k]));
            }
            acc
        })
        .collect())
}

/// Pointwise (Hadamard) product, truncated to the shorter input.
pub fn hadamard<R: Ring>(xs: &[R], ys: &[R]) -> Vec<R> {
    xs.iter().zip(ys).map(|(x, y)| x.mul(y)).collect()
}

/// One sample pair's outcome inside a probe report.
#[derive(Clone, Debug)]
pub struct ProbeCase {
    pub left: String,
    pub right: String,
    pub verdict: Verdict<Rational>,
}

/// Outcome of a preservation probe over every ordered sample pair.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub pass: bool,
    pub cases: Vec<ProbeCase>,
}

impl ProbeReport {
    pub fn first_failure(&self) -> Option<&ProbeCase> {
        self.cases.iter().find(|c| !c.verdict.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pass": self.pass,
            "cases": self.cases.iter().map(|c| {
                serde_json::json!({
                    "left": c.left,
                    "right": c.right,
                    "verdict": c.verdict.to_json(),
                })
            }).collect::<Vec<_>>(),
        })
    }
}

/// Convolves every ordered pair of library samples through the triangle and
/// runs the moment probe on each result at truncation `(n_max - 1) / 2`
/// (the largest the `n_max + 1` output terms support), minor order `r`.
pub fn sm_preservation_probe(
    a: &RingMatrix<Rational>,
    library: &[SmSample],
    n_max: usize,
    r: usize,
) -> Result<ProbeReport> {
    let trunc = n_max.saturating_sub(1) / 2;
    let mut cases = Vec::with_capacity(library.len() * library.len());
    for x in library {
        for y in library {
            let z = a_convolution(a, x.terms(), y.terms(), n_max)?;
            let verdict = is_sm_r(&z, trunc, r)?;
            cases.push(ProbeCase {
                left: x.name().to_string(),
                right: y.name().to_string(),
                verdict,
            });
        }
    }
    Ok(ProbeReport { pass: cases.iter().all(|c| c.verdict.pass), cases })
}

/// The same probe for a triangle with entries polynomial in one parameter:
/// the triangle is bound at each grid value and probed there.  Every entry
/// must become constant once `var` is bound.
pub fn sm_preservation_probe_bound(
    a: &RingMatrix<Poly>,
    var: &str,
    grid: &[Rational],
    library: &[SmSample],
    n_max: usize,
    r: usize,
) -> Result<Vec<(Rational, ProbeReport)>> {
    grid.iter()
        .map(|q| {
            let bound = bind_to_rationals(a, var, q)?;
            Ok((q.clone(), sm_preservation_probe(&bound, library, n_max, r)?))
        })
        .collect()
}

/// Hadamard-closure probe: the pointwise product of every ordered pair,
/// truncated to `n_max + 1` terms, must again pass the moment check.
pub fn hadamard_closure_probe(library: &[SmSample], n_max: usize, r: usize) -> Result<ProbeReport> {
    let trunc = n_max.saturating_sub(1) / 2;
    let mut cases = Vec::with_capacity(library.len() * library.len());
    for x in library {
        for y in library {
            let mut z = hadamard(x.terms(), y.terms());
            if z.len() <= n_max {
                return Err(Error::InsufficientTerms { needed: n_max + 1, have: z.len() });
            }
            z.truncate(n_max + 1);
            let verdict = is_sm_r(&z, trunc, r)?;
            cases.push(ProbeCase {
                left: x.name().to_string(),
                right: y.name().to_string(),
                verdict,
            });
        }
    }
    Ok(ProbeReport { pass: cases.iter().all(|c| c.verdict.pass), cases })
}

/// The sign-alternating binomial triangle `(-1)^{n-k} C(n, k)`: a
/// deliberately non-preserving transform used to exercise failure
/// witnesses.
pub fn alternating_pascal(rows: usize) -> RingMatrix<Rational> {
    RingMatrix::from_fn(rows + 1, rows + 1, |n, k| {
        if k > n {
            return rat(0);
        }
        let mut v = Rational::from_integer(crate::arith::binomial(n as i64, k as i64));
        if (n - k) % 2 != 0 {
            v = -v;
        }
        v
    })
}

fn bind_to_rationals(a: &RingMatrix<Poly>, var: &str, q: &Rational) -> Result<RingMatrix<Rational>> {
    let mut out = RingMatrix::zeros(a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let bound = a.get(i, j).bind(var, q);
            out.set(i, j, bound.eval(&Default::default())?);
        }
    }
    Ok(out)
}
