//! Branched continued fractions: expanding block schedules by recursion,
//! cross-checking against the production-matrix route, and recovering row
//! polynomials of a triangle from a 2-branched schedule.
//!
//! Run with: cargo run --example branched_fractions

use rtp::arith::{Poly, Ring, VarSet};
use rtp::catalog::lah_closed;
use rtp::contfrac::{bsf_series, bsf_series_via_production, schedule_gen_lah, Schedule};
use rtp::riordan::row_polys_rational;

fn main() -> rtp::Result<()> {
    // Branching 1, all coefficients 1: the classic expansion with Catalan
    // numbers as coefficients.
    let ones = Schedule::explicit(1, vec![Poly::one(); 12]);
    let catalan = bsf_series(&ones, 8)?;
    println!(
        "catalan:   {}",
        catalan.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    );

    // A block schedule with unit weights: depth-dependent coefficients
    // 1, 1, 2, 2, 3, 3, ... give the Bell numbers.
    let nu = Poly::one();
    let step = Poly::zero();
    let xs = vec![Poly::one()];
    let bell = bsf_series(&Schedule::blocks(nu.clone(), step.clone(), xs.clone()), 8)?;
    println!(
        "bell:      {}",
        bell.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    );

    // Same series read off powers of the bidiagonal-product production
    // matrix: an independent route through the same data.
    assert_eq!(bell, bsf_series_via_production(&nu, &step, &xs, 8));
    println!("recursive and production routes agree\n");

    // The 2-branched schedule with diagonal q: ordinary generating function
    // whose n-th coefficient is the n-th Lah row polynomial.
    let vs = VarSet::new(["q"]);
    let q = Poly::var(&vs, "q");
    let sched = schedule_gen_lah(1, &Poly::one(), &Poly::one(), &Poly::zero(), &q);
    let series = bsf_series(&sched, 6)?;
    let rows = row_polys_rational(&lah_closed(6), &vs, "q")?;
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(series.coeff(n), row);
        println!("L_{n}(q) = {row}");
    }
    Ok(())
}
