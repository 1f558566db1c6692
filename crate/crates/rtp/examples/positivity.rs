//! Total-positivity certification: minor enumeration with exact arithmetic,
//! failure witnesses that re-validate, and the Hankel/Toeplitz sequence
//! tests built on top.
//!
//! Run with: cargo run --example positivity

use rtp::arith::{rat, VarSet};
use rtp::catalog::{pascal_closed, rook_polys};
use rtp::positivity::{hankel_window_sweep, is_k_log_convex, is_pf_r, is_sm_r, is_tp_r, Witness};

fn main() -> rtp::Result<()> {
    // Pascal's 8x8 truncation: every minor of order <= 4 is nonnegative.
    let verdict = is_tp_r(&pascal_closed(7), 4)?;
    println!("pascal 8x8 TP(4): pass={} after {} minors", verdict.pass, verdict.minors_checked);

    // 1, 2, 3 is not a Stieltjes moment sequence; the checker returns the
    // offending minor as a witness.
    let seq = [rat(1), rat(2), rat(3)];
    let verdict = is_sm_r(&seq, 1, 2)?;
    assert!(!verdict.pass);
    let witness = verdict.witness.expect("failing check carries a witness");
    println!(
        "moment check on 1,2,3: fails in {} with determinant {}",
        witness.source, witness.determinant
    );

    // The witness is self-contained: serialize, re-load, recompute.
    let json = witness.to_json();
    let reloaded: Witness<rtp::arith::Rational> = Witness::from_json(&json)?;
    assert_eq!(reloaded.recompute_determinant()?, witness.determinant);
    println!("witness re-validates after a JSON round trip");

    // Geometric sequences have vanishing higher Hankel minors: still TP.
    let geometric: Vec<_> = (0..9).map(|n| rat(1 << n)).collect();
    println!("powers of two PF(3): pass={}", is_pf_r(&geometric, 8, 3)?.pass);

    // Polynomial sequences run coefficientwise: rook polynomials pass a
    // sliding-window Hankel TP(3) probe and are 3-fold log-convex.
    let vs = VarSet::new(["q"]);
    let rook = rook_polys(&vs, "q", 8);
    let sweep = hankel_window_sweep(&rook, 4, 2, 3)?;
    println!("rook 4x4 Hankel windows TP(3): pass={} ({} minors)", sweep.pass, sweep.minors_checked);
    let lcx = is_k_log_convex(&rook, 3)?;
    println!("rook 3-fold log-convexity: pass={}", lcx.pass);
    Ok(())
}
