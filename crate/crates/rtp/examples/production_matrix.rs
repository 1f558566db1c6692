//! Computes Z/A-sequences and production matrices of exponential Riordan
//! pairs, and verifies the defining identity "shifted triangle = triangle
//! times production matrix" exactly.
//!
//! Run with: cargo run --example production_matrix

use rtp::arith::{rat, Poly, Ring, VarSet};
use rtp::catalog::gen_lah_pair;
use rtp::expr::Expr;
use rtp::matrix::RingMatrix;

fn print_matrix<R: rtp::arith::Ring>(title: &str, m: &RingMatrix<R>) {
    println!("{title}");
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        println!("  {}", row.join("  "));
    }
    println!();
}

fn main() -> rtp::Result<()> {
    // The signless Laguerre pair (1/(1-t), t/(1-t)), entered as expressions.
    let bindings = Default::default();
    let g = Expr::parse("1/(1-t)")?.eval_rational(9, &bindings)?;
    let f = Expr::parse("t/(1-t)")?.eval_rational(9, &bindings)?;
    let pair = rtp::riordan::ExpRiordan::new(g, f)?;

    let (z, a) = pair.za_sequences()?;
    println!("Z-sequence: {:?}", z.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("A-sequence: {:?}", a.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!();

    print_matrix("production matrix (tridiagonal-with-growth shape):", &pair.production_matrix(6)?);
    assert!(pair.verify_production(8, false)?);
    assert!(pair.verify_production(8, true)?);
    println!("identity verified on the 9x9 truncation, plain and k!-scaled\n");

    // Production matrices stay exact with a symbolic exponential weight.
    let vs = VarSet::new(["lam"]);
    let lam = Poly::var(&vs, "lam");
    let symbolic = gen_lah_pair(&rat(1), &rat(0), &Poly::one(), &Poly::one(), &lam, 7)?;
    print_matrix("production matrix with symbolic lam:", &symbolic.production_matrix(4)?);
    assert!(symbolic.verify_production(6, false)?);
    println!("symbolic identity verified on the 7x7 truncation");
    Ok(())
}
