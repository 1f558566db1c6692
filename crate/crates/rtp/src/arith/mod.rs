//! Exact scalar arithmetic: rationals, multivariate and univariate
//! polynomials, and the [`Ring`] abstraction shared by every higher layer.
//!
//! - [`Rational`] — arbitrary-precision rational numbers (always reduced,
//!   positive denominator), with parsing/formatting as `p/q` strings and the
//!   combinatorial helpers [`factorial`], [`binomial`], [`binomial_rat`],
//!   [`falling`], [`odd_double_factorial`].
//! - [`Ring`] — the coefficient-domain trait: exact add/mul, exact division,
//!   unit inversion, rational embedding, and a coefficientwise nonnegativity
//!   test.  Implemented for [`Rational`] and [`Poly`].
//! - [`Poly`] / [`VarSet`] — multivariate polynomials over a fixed, declared
//!   variable list; dense exponent vectors, sorted term maps, no stored zero
//!   coefficients.
//! - [`UniPoly`] — univariate polynomials over [`Rational`] with exact Sturm
//!   sequences, distinct-root counting on half-open intervals with `±∞`
//!   endpoints, and root counting with multiplicity.

mod ring;
mod poly;
mod unipoly;

pub use ring::{
    binomial, binomial_rat, factorial, falling, odd_double_factorial, parse_rational, pow_rat,
    rat, ratio, Rational, Ring,
};
pub use poly::{Poly, VarSet};
pub use unipoly::{real_root_count_with_multiplicity, sturm_real_root_count, Endpoint, UniPoly};
