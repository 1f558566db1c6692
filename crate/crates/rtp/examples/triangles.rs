//! Builds catalog triangles through their independent realizations —
//! closed form, two-term recurrence, and exponential Riordan pair — and
//! shows they coincide.
//!
//! Run with: cargo run --example triangles

use rtp::arith::{rat, ratio, Poly, Rational, Ring, VarSet};
use rtp::catalog::{
    gen_lah_closed, gen_lah_pair, gen_lah_recurrence, lah_closed, laguerre_closed, pascal_closed,
    pascal_pair, stirling2_closed,
};
use rtp::matrix::RingMatrix;

fn print_rows<R: rtp::arith::Ring>(title: &str, m: &RingMatrix<R>, upto: usize) {
    println!("{title}");
    for i in 0..=upto.min(m.rows() - 1) {
        let row: Vec<String> = (0..=i).map(|j| m.get(i, j).to_string()).collect();
        println!("  {}", row.join("  "));
    }
    println!();
}

fn main() -> rtp::Result<()> {
    // Pascal, from the closed form and from the pair (e^t, t).
    let closed = pascal_closed(6);
    let era = pascal_pair(6)?.triangle(6)?;
    assert_eq!(closed, era);
    print_rows("pascal (closed form == Riordan pair):", &closed, 6);

    // The classic special cases of the five-parameter geometric-kernel
    // family: (1,1,1,0,0) gives Lah numbers, (0,1,1,0,0) Stirling subset
    // numbers, and d = alpha + 1 the signless Laguerre triangle.
    let one = Poly::one();
    let zero = Poly::zero();
    let lift = |m: &RingMatrix<Rational>| m.map(Poly::from_rational);

    let lah = gen_lah_recurrence(&one, &one, &one, &zero, &zero, 5);
    assert_eq!(lah, lift(&lah_closed(5)));
    print_rows("lah = geometric kernel at (1,1,1,0,0):", &lah, 5);

    let stirling = gen_lah_recurrence(&zero, &one, &one, &zero, &zero, 5);
    assert_eq!(stirling, lift(&stirling2_closed(5)));
    print_rows("stirling subsets = geometric kernel at (0,1,1,0,0):", &stirling, 5);

    let alpha = ratio(1, 2);
    let d = Poly::from_rational(&(&alpha + rat(1)));
    let laguerre = gen_lah_recurrence(&one, &one, &one, &d, &zero, 4);
    assert_eq!(laguerre, lift(&laguerre_closed(&alpha, 4)));
    print_rows("signless laguerre(1/2) = geometric kernel at d = 3/2:", &laguerre, 4);

    // The exponential weight can stay symbolic: every entry is then a
    // polynomial in lam, and all realizations still agree exactly.
    let vs = VarSet::new(["lam"]);
    let lam = Poly::var(&vs, "lam");
    let symbolic = gen_lah_recurrence(&one, &one, &one, &zero, &lam, 4);
    assert_eq!(symbolic, gen_lah_closed(&one, &one, &one, &zero, &lam, 4));
    assert_eq!(symbolic, gen_lah_pair(&rat(1), &rat(0), &one, &one, &lam, 4)?.triangle(4)?);
    print_rows("same family with symbolic weight lam:", &symbolic, 4);

    println!("all realization cross-checks passed");
    Ok(())
}
