//! Command-line front end: every subcommand assembles a one-task job (or a
//! direct construction) and delegates to the library.
//!
//! Exit codes: `0` success / all checks pass, `1` a check failed (the
//! report is still printed), `2` syntax errors, `3` domain errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rtp::arith::{parse_rational, Poly, Rational, Ring};
use rtp::contfrac::{bsf_series, bsf_series_via_production, Schedule};
use rtp::job::{
    self, build_pair, build_target, Built, CheckSpec, JobSpec, ParamValue, Report, Task,
    TargetSpec, DEFAULT_ORDER,
};
use rtp::matrix::RingMatrix;
use rtp::positivity::DEFAULT_MINOR_ORDER;
use rtp::{Error, Result};

#[derive(Parser)]
#[command(name = "rtp", about = "Exact construction and positivity certification of \
combinatorial triangles", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Target selection shared by the construction/check subcommands.
#[derive(Args)]
struct TargetArgs {
    /// Catalog family name (e.g. pascal, lah, rook, gen_lah, blocks3).
    #[arg(long, value_name = "NAME")]
    family: Option<String>,

    /// Generating function g of an exponential Riordan pair.
    #[arg(long, value_name = "EXPR", requires = "f")]
    g: Option<String>,

    /// Generating function f of an exponential Riordan pair.
    #[arg(long, value_name = "EXPR", requires = "g")]
    f: Option<String>,

    /// Build the fractional companion triangle of this series.
    #[arg(long, value_name = "EXPR")]
    fractional: Option<String>,

    /// Literal sequence, comma-separated rationals.
    #[arg(long, value_name = "a0,a1,...")]
    sequence: Option<String>,

    /// Bind a parameter: NAME=RATIONAL, or NAME=sym to keep it symbolic.
    #[arg(long = "bind", value_name = "NAME=VALUE")]
    bind: Vec<String>,

    /// Convert the triangle to its row polynomials in q first.
    #[arg(long)]
    row_polys: bool,
}

impl TargetArgs {
    fn to_spec(&self) -> Result<TargetSpec> {
        let params = parse_bindings(&self.bind)?;
        let mut specs = Vec::new();
        if let Some(name) = &self.family {
            specs.push(TargetSpec::Family { name: name.clone(), params: params.clone() });
        }
        if let (Some(g), Some(f)) = (&self.g, &self.f) {
            specs.push(TargetSpec::Era { g: g.clone(), f: f.clone(), params: params.clone() });
        }
        if let Some(f) = &self.fractional {
            specs.push(TargetSpec::Fractional { f: f.clone(), params: params.clone() });
        }
        if let Some(seq) = &self.sequence {
            if !params.is_empty() {
                return Err(Error::Domain("a sequence target takes no bindings".into()));
            }
            let seq = seq
                .split(',')
                .map(|s| parse_rational(s.trim()))
                .collect::<Result<Vec<Rational>>>()?;
            specs.push(TargetSpec::Sequence(seq));
        }
        if specs.len() != 1 {
            return Err(Error::Domain(
                "choose exactly one target: --family, --g/--f, --fractional, or --sequence"
                    .into(),
            ));
        }
        Ok(specs.pop().unwrap())
    }

    fn one_check_task(&self, order: usize, check: CheckSpec) -> Result<Task> {
        let target = self.to_spec()?;
        Ok(Task {
            label: target_label(&target),
            target,
            order,
            as_row_polys: self.row_polys,
            checks: vec![check],
        })
    }
}

fn target_label(t: &TargetSpec) -> String {
    match t {
        TargetSpec::Family { name, .. } => name.clone(),
        TargetSpec::Era { .. } => "era".into(),
        TargetSpec::Fractional { .. } => "fractional".into(),
        TargetSpec::Sequence(_) => "sequence".into(),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle or sequence.
    Triangle {
        #[command(flatten)]
        target: TargetArgs,
        /// Truncation order.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },

    /// Total positivity of a triangle: all minors of order <= r.
    Tpcheck {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Largest minor order r.
        #[arg(long, default_value_t = DEFAULT_MINOR_ORDER)]
        minor_order: usize,
        #[arg(long)]
        json: bool,
    },

    /// Sliding-window Hankel positivity of a sequence.
    Hankel {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_MINOR_ORDER)]
        minor_order: usize,
        /// Window size (defaults to what the terms support).
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        json: bool,
    },

    /// Toeplitz (Polya-frequency) positivity of a sequence.
    Toeplitz {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_MINOR_ORDER)]
        minor_order: usize,
        /// Toeplitz truncation (defaults to the full sequence).
        #[arg(long)]
        truncation: Option<usize>,
        #[arg(long)]
        json: bool,
    },

    /// Print the production matrix of an exponential Riordan pair.
    Prodmat {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Use the k!-scaled variant.
        #[arg(long)]
        scaled: bool,
        #[arg(long)]
        json: bool,
    },

    /// Expand a branched continued fraction.
    Cf {
        /// Diagonal seed of a block schedule.
        #[arg(long, value_name = "RATIONAL", conflicts_with = "alphas")]
        nu: Option<String>,
        /// Diagonal drift per level.
        #[arg(long, value_name = "RATIONAL", requires = "nu")]
        step: Option<String>,
        /// Off-diagonal block weights x_1..x_m, comma-separated.
        #[arg(long, value_name = "x1,...,xm", requires = "nu")]
        xs: Option<String>,
        /// Explicit coefficient list starting at depth m.
        #[arg(long, value_name = "a_m,a_m+1,...", conflicts_with = "nu")]
        alphas: Option<String>,
        /// Branching width for --alphas schedules.
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long)]
        json: bool,
    },

    /// Probe whether a triangle preserves the Stieltjes moment property.
    Conv {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(long, default_value_t = 3)]
        minor_order: usize,
        #[arg(long)]
        json: bool,
    },

    /// Run a JSON job file, or re-validate a stored report.
    Verify {
        /// Path to the job file.
        #[arg(value_name = "JOB", required_unless_present = "revalidate")]
        job: Option<String>,
        /// Re-check every witness stored in this report instead.
        #[arg(long, value_name = "REPORT", conflicts_with = "job")]
        revalidate: Option<String>,
        /// Bindings NAME=RATIONAL applied to symbolic witnesses.
        #[arg(long = "bind", value_name = "NAME=VALUE")]
        bind: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_bindings(pairs: &[String]) -> Result<BTreeMap<String, ParamValue>> {
    let mut out = BTreeMap::new();
    for pair in pairs {
        let (name, value) = pair
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("--bind needs NAME=VALUE, got '{pair}'")))?;
        let value = if value == "sym" {
            ParamValue::Sym
        } else {
            ParamValue::Rat(parse_rational(value)?)
        };
        out.insert(name.trim().to_string(), value);
    }
    Ok(out)
}

fn rational_bindings(pairs: &[String]) -> Result<BTreeMap<String, Rational>> {
    parse_bindings(pairs)?
        .into_iter()
        .map(|(name, v)| match v {
            ParamValue::Rat(r) => Ok((name, r)),
            ParamValue::Sym => {
                Err(Error::Domain(format!("binding '{name}' must be a rational here")))
            }
        })
        .collect()
}

fn print_report(report: &Report, json: bool) -> i32 {
    if json {
        print!("{}", report.to_json_string());
    } else {
        print!("{}", report.render_text());
    }
    i32::from(!report.pass)
}

fn run_single_check(target: &TargetArgs, order: usize, check: CheckSpec, json: bool) -> Result<i32> {
    let task = target.one_check_task(order, check)?;
    let report = job::run_job(&JobSpec { tasks: vec![task] })?;
    Ok(print_report(&report, json))
}

fn print_matrix(m: &RingMatrix<Poly>, lower_only: bool, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&m.to_json()).expect("matrix serializes"));
        return;
    }
    for i in 0..m.rows() {
        let cols = if lower_only { i.min(m.cols() - 1) } else { m.cols() - 1 };
        let row: Vec<String> = (0..=cols).map(|j| m.get(i, j).to_string()).collect();
        println!("{}", row.join("  "));
    }
}

fn print_seq(seq: &[Poly], json: bool) {
    if json {
        let v: Vec<serde_json::Value> = seq.iter().map(Ring::to_json).collect();
        println!("{}", serde_json::to_string_pretty(&serde_json::Value::Array(v)).unwrap());
        return;
    }
    for (n, p) in seq.iter().enumerate() {
        println!("{n}: {p}");
    }
}

fn comma_rationals(text: &str) -> Result<Vec<Poly>> {
    text.split(',')
        .map(|s| Ok(Poly::from_rational(&parse_rational(s.trim())?)))
        .collect()
}

fn run_cf(
    nu: Option<String>,
    step: Option<String>,
    xs: Option<String>,
    alphas: Option<String>,
    m: usize,
    order: usize,
    json: bool,
) -> Result<i32> {
    let (schedule, production) = match (&nu, &alphas) {
        (Some(nu), None) => {
            let nu = Poly::from_rational(&parse_rational(nu)?);
            let step = match step {
                Some(s) => Poly::from_rational(&parse_rational(&s)?),
                None => Poly::zero(),
            };
            let xs = comma_rationals(
                xs.as_deref()
                    .ok_or_else(|| Error::Domain("--nu schedules need --xs".into()))?,
            )?;
            let prod = bsf_series_via_production(&nu, &step, &xs, order);
            (Schedule::blocks(nu, step, xs), Some(prod))
        }
        (None, Some(list)) => {
            if m == 0 {
                return Err(Error::Domain("--m must be at least 1".into()));
            }
            (Schedule::explicit(m, comma_rationals(list)?), None)
        }
        _ => {
            return Err(Error::Domain(
                "give either --nu/--step/--xs (block schedule) or --alphas".into(),
            ))
        }
    };

    let series = bsf_series(&schedule, order)?;
    let routes_agree = production.as_ref().map(|p| p == &series);
    if json {
        let payload = serde_json::json!({
            "order": order,
            "coefficients": series.coeffs().iter().map(Ring::to_json).collect::<Vec<_>>(),
            "routes_agree": routes_agree,
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        print_seq(series.coeffs(), false);
        if let Some(agree) = routes_agree {
            println!("recursive and production routes agree: {agree}");
        }
    }
    Ok(i32::from(routes_agree == Some(false)))
}

fn run_verify(
    job_path: Option<String>,
    revalidate: Option<String>,
    bind: Vec<String>,
    json: bool,
) -> Result<i32> {
    if let Some(path) = revalidate {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        let bindings = rational_bindings(&bind)?;
        let summary = job::revalidate_report(&value, &bindings)?;
        if json {
            let payload = serde_json::json!({
                "witnesses": summary.witnesses,
                "valid": summary.valid,
                "all_valid": summary.all_valid(),
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        } else {
            println!(
                "witnesses: {} / re-validated: {} / {}",
                summary.witnesses,
                summary.valid,
                if summary.all_valid() { "all valid" } else { "MISMATCH" }
            );
        }
        return Ok(i32::from(!summary.all_valid()));
    }

    let path = job_path.expect("clap enforces job / --revalidate");
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    let report = job::run_job_str(&text)?;
    Ok(print_report(&report, json))
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Triangle { target, order, json } => {
            let built = build_target(&target.to_spec()?, order, target.row_polys)?;
            match built {
                Built::Triangle(m) => print_matrix(&m, true, json),
                Built::Seq(seq) => print_seq(&seq, json),
            }
            Ok(0)
        }
        Command::Tpcheck { target, order, minor_order, json } => {
            run_single_check(&target, order, CheckSpec::Tp { r: minor_order }, json)
        }
        Command::Hankel { target, order, minor_order, size, json } => {
            run_single_check(&target, order, CheckSpec::Hankel { r: minor_order, size }, json)
        }
        Command::Toeplitz { target, order, minor_order, truncation, json } => run_single_check(
            &target,
            order,
            CheckSpec::Toeplitz { r: minor_order, n: truncation },
            json,
        ),
        Command::Prodmat { target, order, scaled, json } => {
            let pair = build_pair(&target.to_spec()?, order + 1)?;
            let p = if scaled {
                pair.production_matrix_scaled(order + 1)?
            } else {
                pair.production_matrix(order + 1)?
            };
            print_matrix(&p, false, json);
            Ok(0)
        }
        Command::Cf { nu, step, xs, alphas, m, order, json } => {
            run_cf(nu, step, xs, alphas, m, order, json)
        }
        Command::Conv { target, order, minor_order, json } => run_single_check(
            &target,
            order,
            CheckSpec::SmPreserve { r: minor_order, n: order },
            json,
        ),
        Command::Verify { job, revalidate, bind, json } => run_verify(job, revalidate, bind, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(job::error_exit_code(&e) as u8)
        }
    }
}
