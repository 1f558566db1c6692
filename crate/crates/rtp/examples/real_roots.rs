//! Real-rootedness certificates via exact Sturm counting, and the
//! row-reversal (reciprocal) transform that preserves positivity verdicts.
//!
//! Run with: cargo run --example real_roots

use rtp::arith::{rat, VarSet};
use rtp::catalog::{lah_closed, real_roots_check, rook_polys};
use rtp::positivity::{hankel, is_tp_r_labeled, reciprocal_polys};
use rtp::riordan::row_polys_rational;

fn main() -> rtp::Result<()> {
    let vs = VarSet::new(["q"]);

    // Every Lah row polynomial has a full set of real roots, all <= 0.
    let rows = row_polys_rational(&lah_closed(8), &vs, "q")?;
    let verdict = real_roots_check(&rows, "q", &rat(0))?;
    println!("lah rows real-rooted with roots <= 0: pass={}", verdict.pass);
    for row in &verdict.rows {
        println!(
            "  row {}: degree {}, {} roots at zero, {} counted on the negative axis",
            row.row, row.degree, row.roots_at_zero, row.counted
        );
    }
    println!();

    // Rook polynomials pass the same certificate.
    let rook = rook_polys(&vs, "q", 8);
    println!("rook rows real-rooted with roots <= 0: pass={}", real_roots_check(&rook, "q", &rat(0))?.pass);

    // Reversing each row polynomial (q^n P(1/q)) maps the root set through
    // x -> 1/x, and leaves coefficientwise Hankel verdicts unchanged.
    let before = is_tp_r_labeled(&hankel(&rook[..7], 3)?, 2, "hankel")?;
    let reversed = reciprocal_polys(&rook[..7], "q")?;
    let after = is_tp_r_labeled(&hankel(&reversed, 3)?, 2, "hankel")?;
    println!(
        "rook Hankel TP(2) before/after reversal: {} / {} ({} minors each)",
        before.pass, after.pass, before.minors_checked
    );
    assert_eq!(before.pass, after.pass);
    Ok(())
}
