//! Batch verification through job files: several targets and checks in one
//! JSON document, a deterministic report, and witness re-validation.
//!
//! Run with: cargo run --example job_files

use std::collections::BTreeMap;

use rtp::arith::ratio;
use rtp::job::{revalidate_report, run_job_str};

fn main() -> rtp::Result<()> {
    // Checks come in an object form and a compact string form ("kind k=v").
    let job = r#"{
        "tasks": [
            {"family": "eulerian", "N": 7, "checks": ["tp r=3"]},
            {"family": "rook", "N": 8,
             "checks": ["hankel r=2 size=4", "klogconvex k=3", "realroots"]},
            {"family": "gen_lah", "a": 1, "b": "1", "c": "1", "lambda": "sym",
             "N": 7, "checks": ["production", "tp r=1"]},
            {"era": {"g": "1/(1-t)", "f": "t/(1-t)"}, "N": 8,
             "checks": ["production scaled=true"]},
            {"label": "not a moment sequence", "sequence": [1, 2, 3],
             "checks": ["sm r=2"]}
        ]
    }"#;

    let report = run_job_str(job)?;
    print!("{}", report.render_text());
    println!();

    // The last task fails by design; its witness is embedded in the JSON
    // report and can be re-validated without re-running the job.
    let value = report.to_json();
    let summary = revalidate_report(&value, &BTreeMap::new())?;
    println!(
        "re-validated {} of {} stored witnesses",
        summary.valid, summary.witnesses
    );
    assert!(summary.all_valid());

    // Symbolic witnesses additionally accept parameter bindings.
    let bindings = BTreeMap::from([("lambda".to_string(), ratio(1, 2))]);
    let summary = revalidate_report(&value, &bindings)?;
    assert!(summary.all_valid());
    println!("witnesses also re-validate under lambda = 1/2");
    Ok(())
}
