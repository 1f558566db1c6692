//! The exact power-series layer: composition, reversion, fractional powers,
//! and the small expression language used to enter generating functions.
//!
//! Run with: cargo run --example series_and_expressions

use std::collections::BTreeMap;

use rtp::arith::{factorial, pow_rat, rat, ratio, Rational};
use rtp::expr::Expr;
use rtp::series::Series;

fn main() -> rtp::Result<()> {
    // Reversion of t*e^t: the labeled-forest series, with coefficients
    // (-n)^(n-1)/n!.
    let te_t = Series::t(10).mul(&Series::exp_t(10));
    let w = te_t.revert()?;
    println!("revert(t e^t) coefficients:");
    for n in 1..=8usize {
        let expect =
            pow_rat(&rat(-(n as i64)), n as i64 - 1) / Rational::from_integer(factorial(n));
        assert_eq!(w.coeff(n), &expect);
        println!("  [t^{n}] = {}", w.coeff(n));
    }
    println!();

    // Fractional powers through the binomial series.
    let sqrt = Expr::parse("(1-t)^(-1/2)")?.eval_rational(6, &BTreeMap::new())?;
    println!(
        "(1-t)^(-1/2) = {}",
        sqrt.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    );

    // Expressions may hold parameters, bound at evaluation time.
    let expr = Expr::parse("exp(a*(exp(t)-1))")?;
    println!("parameters of {:?}: {:?}", "exp(a*(exp(t)-1))", expr.params());
    let bell_like = expr.eval_rational(6, &BTreeMap::from([("a".to_string(), rat(1))]))?;
    println!(
        "egf coefficients at a=1 (Bell numbers): {}",
        (0..=6).map(|n| bell_like.egf_coeff(n).unwrap().to_string()).collect::<Vec<_>>().join(", ")
    );

    // Composition and reversion are inverse operations.
    let f = Expr::parse("t/(1-t)")?.eval_rational(8, &BTreeMap::new())?;
    let fbar = f.revert()?;
    assert_eq!(f.compose(&fbar)?, Series::t(8));
    assert_eq!(fbar, Expr::parse("t/(1+t)")?.eval_rational(8, &BTreeMap::new())?);
    println!("\nrevert(t/(1-t)) == t/(1+t), verified to order 8");

    // Exact rational arithmetic end to end: no floats anywhere.
    let g = Expr::parse("(1+t)^(1/3)")?.eval_rational(5, &BTreeMap::new())?;
    assert_eq!(g.coeff(2), &ratio(-1, 9));
    println!("[t^2] (1+t)^(1/3) = -1/9, exactly");
    Ok(())
}
