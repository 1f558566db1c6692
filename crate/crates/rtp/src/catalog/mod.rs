//! Named triangle and polynomial families, each buildable by several
//! independent routes (recurrence, Riordan pair, closed formula, exhaustive
//! combinatorial oracle) so that constructions cross-validate instead of
//! trusting a single transcription.
//!
//! Layout:
//! - [`parametric`]: the five-parameter triangles built on powers of
//!   `(1 - abt)` — the generalized Bessel triangle, the generalized Lah
//!   triangle obtained from it by `(a, b) -> (-a, -b)`, and the weighted
//!   small-block partition triangle from the cubic pair `(1, at+bt^2+ct^3)` —
//!   plus their `k!`-scaled and reciprocal recurrences.
//! - [`classics`]: fixed classical triangles (Pascal, Stirling, Lah,
//!   Laguerre, rook polynomials, the double-factorial triangle and its row-sum
//!   identity, idempotent/tree pair, Eulerian numbers with a permutation
//!   oracle).
//! - [`bell`]: partial Bell triangles for arbitrary weight lists, the
//!   logarithmic/fractional variants, and cycle-index sequences.
//! - [`binom`]: two doubly-indexed binomial-product families and their
//!   Riordan identifications.
//!
//! Everything returns plain matrices/polynomials over [`Poly`] or
//! [`Rational`]; symbolic parameters must all live in one declared variable
//! set.

pub mod bell;
pub mod binom;
pub mod classics;
pub mod parametric;

use crate::arith::{
    real_root_count_with_multiplicity, Endpoint, Poly, Rational, Ring,
};
use crate::matrix::RingMatrix;
use crate::Result;

pub use bell::{bell_partial_pair, bell_partial_recurrence, complete_homogeneous, cycle_index, fractional_triangle, logarithmic_triangle, power_sums};
pub use binom::{binomial_first, binomial_first_bare, binomial_first_pair, binomial_second, binomial_second_bare, binomial_second_pair};
pub use classics::{
    callan_closed, callan_recurrence, doublefac_closed, doublefac_recurrence, eulerian_closed,
    eulerian_oracle, eulerian_recurrence, idempotent_closed, idempotent_pair, laguerre_closed,
    laguerre_pair, lah_closed, lah_pair, lah_recurrence, pascal_closed, pascal_pair, rook_polys,
    stirling2_closed, stirling2_pair, tree_closed,
};
pub use parametric::{
    blocks3_closed, blocks3_oracle, blocks3_pair, blocks3_recurrence, five_param_domain_ok,
    gen_bessel_closed, gen_bessel_pair, gen_bessel_recurrence, gen_bessel_reciprocal_recurrence,
    gen_bessel_scaled_recurrence, gen_lah_closed, gen_lah_pair, gen_lah_recurrence,
    gen_lah_reciprocal_recurrence, gen_lah_scaled_recurrence,
};

/// Row reversal `T*[n][k] = T[n][n-k]` (entries above the diagonal are
/// dropped, so this is an involution on lower-triangular truncations).
pub fn reciprocal_triangle<R: Ring>(m: &RingMatrix<R>) -> RingMatrix<R> {
    RingMatrix::from_fn(m.rows(), m.cols(), |n, k| {
        if k <= n {
            m.get(n, n - k).clone()
        } else {
            R::zero()
        }
    })
}

/// Per-row outcome of [`real_roots_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct RowRootCount {
    pub row: usize,
    pub degree: usize,
    /// Multiplicity of the root at `q = 0`.
    pub roots_at_zero: usize,
    /// Real roots (with multiplicity) found in `(-inf, -lambda]` after
    /// stripping the power of `q`.
    pub counted: usize,
    pub pass: bool,
}

/// Verdict of [`real_roots_check`]: per-row counts plus the first failing
/// row, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRootsVerdict {
    pub pass: bool,
    pub rows: Vec<RowRootCount>,
    pub first_failure: Option<usize>,
}

impl RealRootsVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pass": self.pass,
            "first_failure": self.first_failure,
            "rows": self.rows.iter().map(|r| serde_json::json!({
                "row": r.row,
                "degree": r.degree,
                "roots_at_zero": r.roots_at_zero,
                "counted": r.counted,
                "pass": r.pass,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Certifies by exact Sturm counting that every row polynomial has a full
/// set of real roots, all `<= -lambda`.  A root at `0` is admissible exactly
/// when `-lambda >= 0`; remaining roots are counted with multiplicity on
/// `(-inf, -lambda]`.  Row polynomials must be univariate in `var` with any
/// parameters already bound.
pub fn real_roots_check(rows: &[Poly], var: &str, lambda: &Rational) -> Result<RealRootsVerdict> {
    let minus_lambda = -lambda;
    let zero_ok = Ring::is_nonneg(&minus_lambda);
    let mut records = Vec::with_capacity(rows.len());
    let mut first_failure = None;
    for (n, p) in rows.iter().enumerate() {
        let u = p.to_unipoly(var)?;
        let degree = u.degree().ok_or(crate::Error::ZeroPolynomial)?;
        let mult = u.root_multiplicity_at_zero();
        let stripped = u.shift_down(mult);
        let counted = real_root_count_with_multiplicity(
            &stripped,
            &Endpoint::NegInf,
            &Endpoint::Finite(minus_lambda.clone()),
        )?;
        let pass = (mult == 0 || zero_ok) && counted + mult == degree;
        if !pass && first_failure.is_none() {
            first_failure = Some(n);
        }
        records.push(RowRootCount { row: n, degree, roots_at_zero: mult, counted, pass });
    }
    Ok(RealRootsVerdict { pass: first_failure.is_none(), rows: records, first_failure })
}
