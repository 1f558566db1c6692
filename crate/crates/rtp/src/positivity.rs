//! Finite positivity certificates: total positivity of matrices, Pólya
//! frequency and Stieltjes moment probes for sequences, iterated
//! log-convexity, and the reciprocal (coefficient-reversing) transform.
//!
//! Everything here is *exact and finite*: a passing verdict certifies that
//! every enumerated minor (or difference) is nonnegative at the requested
//! truncation, nothing more.  For rational entries "nonnegative" is the sign
//! test; for polynomial entries it means every coefficient is nonnegative,
//! which is the usual sufficient condition for positivity on the closed
//! positive orthant.
//!
//! Failing verdicts carry a [`Witness`] — the exact submatrix and its
//! determinant — which can be serialized into a report and later re-checked,
//! optionally after binding the symbolic parameters to rational values
//! ([`Witness::bind`]).  Minors are enumerated by ascending order and then
//! lexicographically by row and column index sets, so the recorded witness is
//! deterministic: the first violation in that scan.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::arith::{Poly, Rational, Ring, VarSet};
use crate::matrix::RingMatrix;
use crate::{Error, Result};

/// Default minor order for rational-entry checks.
pub const DEFAULT_MINOR_ORDER: usize = 4;
/// Default minor order for polynomial-entry (coefficientwise) checks.
pub const DEFAULT_MINOR_ORDER_SYMBOLIC: usize = 3;
/// Default matrix size (rows = columns) for rational sequence probes.
pub const DEFAULT_WINDOW: usize = 8;
/// Default matrix size for polynomial sequence probes.
pub const DEFAULT_WINDOW_SYMBOLIC: usize = 6;

/// The exact minor at which a positivity scan failed.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<R: Ring> {
    /// Which matrix the minor was taken from (e.g. `"matrix"`, `"toeplitz"`,
    /// `"hankel"`, `"hankel-shifted"`, `"hankel-window-2"`).
    pub source: String,
    /// Minor order `k`.
    pub minor_order: usize,
    /// Row indices of the minor, ascending.
    pub rows: Vec<usize>,
    /// Column indices of the minor, ascending.
    pub cols: Vec<usize>,
    /// The `k x k` submatrix, row-major.
    pub entries: Vec<R>,
    /// Its determinant — the value that failed the nonnegativity test.
    pub determinant: R,
}

impl<R: Ring> Witness<R> {
    /// The witness submatrix as a matrix again.
    pub fn matrix(&self) -> RingMatrix<R> {
        RingMatrix::new(self.minor_order, self.minor_order, self.entries.clone())
    }

    /// Recomputes the determinant from the stored entries; a certificate is
    /// internally consistent when this equals [`Witness::determinant`].
    pub fn recompute_determinant(&self) -> Result<R> {
        self.matrix().det()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "source": self.source,
            "minor_order": self.minor_order,
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entries.iter().map(Ring::to_json).collect::<Vec<_>>(),
            "determinant": self.determinant.to_json(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("witness JSON: {what}"));
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let source = obj
            .get("source")
            .and_then(|s| s.as_str())
            .ok_or_else(|| bad("missing 'source'"))?
            .to_string();
        let minor_order = obj
            .get("minor_order")
            .and_then(|k| k.as_u64())
            .ok_or_else(|| bad("missing 'minor_order'"))? as usize;
        let indices = |key: &str| -> Result<Vec<usize>> {
            obj.get(key)
                .and_then(|a| a.as_array())
                .ok_or_else(|| bad(&format!("missing '{key}'")))?
                .iter()
                .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| bad("bad index")))
                .collect()
        };
        let rows = indices("rows")?;
        let cols = indices("cols")?;
        let entries: Vec<R> = obj
            .get("entries")
            .and_then(|a| a.as_array())
            .ok_or_else(|| bad("missing 'entries'"))?
            .iter()
            .map(R::from_json)
            .collect::<Result<_>>()?;
        if entries.len() != minor_order * minor_order {
            return Err(bad("entry count != minor_order^2"));
        }
        let determinant =
            R::from_json(obj.get("determinant").ok_or_else(|| bad("missing 'determinant'"))?)?;
        Ok(Witness { source, minor_order, rows, cols, entries, determinant })
    }
}

impl Witness<Poly> {
    /// Binds parameters in the witness matrix and re-evaluates its
    /// determinant as an exact rational — the re-validation step for
    /// symbolic certificates.  Every variable appearing in the entries must
    /// be bound.
    pub fn bind(&self, bindings: &BTreeMap<String, Rational>) -> Result<Rational> {
        let m = self.matrix().map(|p| {
            let mut q = p.clone();
            for (name, value) in bindings {
                if q.vars().index_of(name).is_some() {
                    q = q.bind(name, value);
                }
            }
            q
        });
        let det = m.det()?;
        det.as_constant().ok_or_else(|| {
            Error::Domain("witness still symbolic after binding; bind every parameter".into())
        })
    }
}

/// Outcome of a positivity scan: `pass` with the number of minors checked,
/// or `fail` with the first offending minor.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<R: Ring> {
    pub pass: bool,
    pub minors_checked: usize,
    pub witness: Option<Witness<R>>,
}

impl<R: Ring> Verdict<R> {
    fn pass(minors_checked: usize) -> Self {
        Verdict { pass: true, minors_checked, witness: None }
    }

    fn fail(minors_checked: usize, witness: Witness<R>) -> Self {
        Verdict { pass: false, minors_checked, witness: Some(witness) }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pass": self.pass,
            "minors_checked": self.minors_checked,
            "witness": self.witness.as_ref().map(Witness::to_json),
        })
    }
}

/// Checks every minor of order `1..=r` of `m` for nonnegativity, scanning
/// orders ascending and index sets lexicographically, stopping at the first
/// violation.  `source` labels the matrix in any witness produced.
pub fn is_tp_r_labeled<R: Ring>(m: &RingMatrix<R>, r: usize, source: &str) -> Result<Verdict<R>> {
    let max_k = r.min(m.rows()).min(m.cols());
    let mut checked = 0usize;
    for k in 1..=max_k {
        for rows in (0..m.rows()).combinations(k) {
            for cols in (0..m.cols()).combinations(k) {
                let sub = m.submatrix(&rows, &cols);
                let det = sub.det()?;
                checked += 1;
                if !det.is_nonneg() {
                    return Ok(Verdict::fail(
                        checked,
                        Witness {
                            source: source.to_string(),
                            minor_order: k,
                            rows,
                            cols,
                            entries: sub.into_data(),
                            determinant: det,
                        },
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass(checked))
}

/// Total positivity of order `r`: every minor of order `<= r` nonnegative.
pub fn is_tp_r<R: Ring>(m: &RingMatrix<R>, r: usize) -> Result<Verdict<R>> {
    is_tp_r_labeled(m, r, "matrix")
}

/// Coefficientwise total positivity — the same scan, named for call sites
/// with polynomial entries where "nonnegative" means every coefficient is.
pub fn is_coeffwise_tp_r(m: &RingMatrix<Poly>, r: usize) -> Result<Verdict<Poly>> {
    is_tp_r_labeled(m, r, "matrix")
}

/// The `(n+1) x (n+1)` Toeplitz truncation `T[i][j] = a_{i-j}` of a
/// sequence, reading indices past either end as zero (a finite sequence is
/// its own zero-padded extension).
pub fn toeplitz<R: Ring>(seq: &[R], n: usize) -> RingMatrix<R> {
    RingMatrix::from_fn(n + 1, n + 1, |i, j| {
        if i >= j && i - j < seq.len() {
            seq[i - j].clone()
        } else {
            R::zero()
        }
    })
}

/// The `(n+1) x (n+1)` Hankel truncation `H[i][j] = a_{i+j}`; needs
/// `2n + 1` terms and does not zero-pad (a missing tail would silently turn
/// a moment question into a different one).
pub fn hankel<R: Ring>(seq: &[R], n: usize) -> Result<RingMatrix<R>> {
    hankel_window(seq, n + 1, 0)
}

/// The shifted Hankel truncation `H[i][j] = a_{i+j+1}`; needs `2n + 2`
/// terms.
pub fn hankel_shifted<R: Ring>(seq: &[R], n: usize) -> Result<RingMatrix<R>> {
    hankel_window(seq, n + 1, 1)
}

/// A `size x size` Hankel window `H[i][j] = a_{i+j+shift}`.
pub fn hankel_window<R: Ring>(seq: &[R], size: usize, shift: usize) -> Result<RingMatrix<R>> {
    if size == 0 {
        return Ok(RingMatrix::zeros(0, 0));
    }
    let needed = 2 * (size - 1) + shift + 1;
    if seq.len() < needed {
        return Err(Error::InsufficientTerms { needed, have: seq.len() });
    }
    Ok(RingMatrix::from_fn(size, size, |i, j| seq[i + j + shift].clone()))
}

/// Pólya-frequency probe of order `r` at truncation `n`: total positivity of
/// the Toeplitz matrix [`toeplitz`]`(seq, n)`.
pub fn is_pf_r<R: Ring>(seq: &[R], n: usize, r: usize) -> Result<Verdict<R>> {
    is_tp_r_labeled(&toeplitz(seq, n), r, "toeplitz")
}

/// Stieltjes-moment probe of order `r` at truncation `n`: total positivity
/// of both the Hankel matrix and its shift.  The first failing minor (Hankel
/// scanned first) becomes the witness.
pub fn is_sm_r<R: Ring>(seq: &[R], n: usize, r: usize) -> Result<Verdict<R>> {
    let plain = is_tp_r_labeled(&hankel(seq, n)?, r, "hankel")?;
    if !plain.pass {
        return Ok(plain);
    }
    let shifted = is_tp_r_labeled(&hankel_shifted(seq, n)?, r, "hankel-shifted")?;
    Ok(Verdict {
        pass: shifted.pass,
        minors_checked: plain.minors_checked + shifted.minors_checked,
        witness: shifted.witness,
    })
}

/// Sliding-window Hankel probe: for each `shift` in `0..=max_shift`, checks
/// minors of order `<= r` of the `size x size` window `[a_{i+j+shift}]`.
/// Catches positivity failures that sit deeper in a sequence than the
/// leading Hankel truncation reaches.
pub fn hankel_window_sweep<R: Ring>(
    seq: &[R],
    size: usize,
    max_shift: usize,
    r: usize,
) -> Result<Verdict<R>> {
    let mut checked = 0usize;
    for shift in 0..=max_shift {
        let window = hankel_window(seq, size, shift)?;
        let label = format!("hankel-window-{shift}");
        let verdict = is_tp_r_labeled(&window, r, &label)?;
        checked += verdict.minors_checked;
        if !verdict.pass {
            return Ok(Verdict { pass: false, minors_checked: checked, witness: verdict.witness });
        }
    }
    Ok(Verdict::pass(checked))
}

/// One log-convexity step: `L[a]_i = a_{i-1} a_{i+1} - a_i^2`, two terms
/// shorter than the input.
pub fn lcx_step<R: Ring>(seq: &[R]) -> Vec<R> {
    if seq.len() < 3 {
        return Vec::new();
    }
    (1..seq.len() - 1)
        .map(|i| seq[i - 1].mul(&seq[i + 1]).sub(&seq[i].mul(&seq[i])))
        .collect()
}

/// Failure location of an iterated log-convexity check.
#[derive(Clone, Debug, PartialEq)]
pub struct LcxWitness<R: Ring> {
    /// Which application of the step failed (1-based).
    pub iteration: usize,
    /// Index into that iteration's output.
    pub index: usize,
    /// The negative value found there.
    pub value: R,
}

impl<R: Ring> LcxWitness<R> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "iteration": self.iteration,
            "index": self.index,
            "value": self.value.to_json(),
        })
    }
}

/// Verdict of [`is_k_log_convex`].
#[derive(Clone, Debug, PartialEq)]
pub struct LcxVerdict<R: Ring> {
    pub pass: bool,
    pub witness: Option<LcxWitness<R>>,
}

impl<R: Ring> LcxVerdict<R> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pass": self.pass,
            "witness": self.witness.as_ref().map(LcxWitness::to_json),
        })
    }
}

/// `k`-fold log-convexity: the sequences `L[a], L^2[a], ..., L^k[a]` must all
/// be (coefficientwise) nonnegative.  Needs at least `2k + 1` terms so the
/// final iterate is nonempty.
pub fn is_k_log_convex<R: Ring>(seq: &[R], k: usize) -> Result<LcxVerdict<R>> {
    if seq.len() < 2 * k + 1 {
        return Err(Error::InsufficientTerms { needed: 2 * k + 1, have: seq.len() });
    }
    let mut current = seq.to_vec();
    for iteration in 1..=k {
        current = lcx_step(&current);
        for (index, value) in current.iter().enumerate() {
            if !value.is_nonneg() {
                return Ok(LcxVerdict {
                    pass: false,
                    witness: Some(LcxWitness { iteration, index, value: value.clone() }),
                });
            }
        }
    }
    Ok(LcxVerdict { pass: true, witness: None })
}

/// Reciprocal transform of row polynomials: row `n` maps to
/// `q^n p(1/q)`, reversing the coefficient list within degree `n`.  Errors if
/// some row's degree exceeds its index.
pub fn reciprocal_polys(rows: &[Poly], var: &str) -> Result<Vec<Poly>> {
    rows.iter()
        .enumerate()
        .map(|(n, p)| p.reverse_in(var, n))
        .collect()
}

/// Scales entry `(i, j)` by `row[i] * col[j]`.  All scalars must be strictly
/// positive — positive diagonal scalings are exactly the ones that preserve
/// every positivity verdict in this module.
pub fn diag_scale<R: Ring>(
    m: &RingMatrix<R>,
    row: &[Rational],
    col: &[Rational],
) -> Result<RingMatrix<R>> {
    if row.len() != m.rows() || col.len() != m.cols() {
        return Err(Error::Domain(format!(
            "diagonal scaling needs {} row and {} column scalars, got {} and {}",
            m.rows(),
            m.cols(),
            row.len(),
            col.len()
        )));
    }
    for s in row.iter().chain(col) {
        if !(Ring::is_nonneg(s) && !Ring::is_zero(s)) {
            return Err(Error::NonPositiveScale(s.to_string()));
        }
    }
    Ok(RingMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        m.get(i, j).scale(&(&row[i] * &col[j]))
    }))
}

/// Positive diagonal scalars `(1/0!, 1/1!, ..., 1/n!)` and
/// `(0!, 1!, ..., n!)` — the pair that moves between the exponential triangle
/// reading and the `k!`-scaled one without touching positivity verdicts.
pub fn factorial_scalars(n: usize) -> (Vec<Rational>, Vec<Rational>) {
    let inv: Vec<Rational> = (0..=n)
        .map(|i| Rational::new(1.into(), crate::arith::factorial(i)))
        .collect();
    let fwd: Vec<Rational> =
        (0..=n).map(|i| Rational::from_integer(crate::arith::factorial(i))).collect();
    (inv, fwd)
}

/// Lifts rational rows into a polynomial ring — convenience for feeding
/// rational data through the symbolic entry points.
pub fn lift_rows(rows: &[Rational], vars: &VarSet) -> Vec<Poly> {
    rows.iter().map(|r| Poly::constant(vars, r.clone())).collect()
}
