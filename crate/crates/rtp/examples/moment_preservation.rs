//! Probes whether a triangle's weighted convolution maps Stieltjes moment
//! sequences to Stieltjes moment sequences, over a library of known moment
//! sequences — and shows a signed triangle failing with a concrete witness.
//!
//! Run with: cargo run --example moment_preservation

use rtp::arith::rat;
use rtp::catalog::fractional_triangle;
use rtp::conv::{alternating_pascal, sm_preservation_probe, standard_library};
use rtp::series::Series;

fn main() -> rtp::Result<()> {
    let library = standard_library()?;
    println!("sample library:");
    for sample in &library {
        println!("  {:28} {}", sample.name(), sample.note());
    }
    println!();

    // Pascal preserves the moment property: z_n = sum C(n,k) x_k y_{n-k}
    // stays a moment sequence for every pair from the library.
    let pascal = rtp::catalog::pascal_closed(6);
    let probe = sm_preservation_probe(&pascal, &library, 6, 3)?;
    println!("pascal: pass={} over {} convolution pairs", probe.pass, probe.cases.len());

    // So does the fractional companion triangle of t/(1-t).
    let f = Series::from_fn(7, |i| if i == 0 { rat(0) } else { rat(1) });
    let frac = fractional_triangle(&f, 6)?;
    let probe = sm_preservation_probe(&frac, &library, 6, 3)?;
    println!("fractional companion of t/(1-t): pass={}", probe.pass);

    // A sign-alternating triangle does not; the failing convolution and the
    // negative Hankel minor are reported.
    let probe = sm_preservation_probe(&alternating_pascal(6), &library, 6, 3)?;
    assert!(!probe.pass);
    let case = probe.first_failure().expect("failing probe");
    let witness = case.verdict.witness.as_ref().expect("witness");
    println!(
        "signed pascal: first failure on ({}, {}) with {} determinant {}",
        case.left, case.right, witness.source, witness.determinant
    );
    assert_eq!(witness.recompute_determinant()?, witness.determinant);
    println!("the witness minor re-validates from its own data");
    Ok(())
}
