//! Batch job driver: parse a JSON job description, construct the requested
//! triangles or sequences, run registered checks, and emit a deterministic
//! report.
//!
//! A job file is either a single task object or `{"tasks": [...]}`.  Each
//! task names a target:
//!
//! * `"family"`: a catalog triangle or polynomial sequence by name, with
//!   its parameters as additional top-level keys (rationals as JSON
//!   integers or `"p/q"` strings, `"sym"` for a symbolic parameter);
//! * `"era"`: `{"g": expr, "f": expr}`, an exponential Riordan pair in the
//!   series expression grammar, extra keys binding expression parameters;
//! * `"fractional"`: a power-series expression `f`, building the triangle
//!   `n!/k^0 [t^n] f(t)^k` read row by row (the `k!`-free fractional
//!   companion);
//! * `"sequence"`: a literal rational sequence.
//!
//! `"N"` (or `"order"`) sets the truncation, `"as": "row-polys"` turns a
//! fully numeric triangle into its row polynomials in `q`, and `"checks"`
//! lists the probes to run.  Registered check kinds:
//!
//! | kind                      | target    | parameters            |
//! |---------------------------|-----------|-----------------------|
//! | `tp` / `coeffwise-tp`     | triangle  | `r`                   |
//! | `hankel`/`coeffwise-hankel`| sequence | `r`, optional `size`  |
//! | `toeplitz` / `pf`         | sequence  | `r`, optional `n`     |
//! | `sm`                      | sequence  | `r`                   |
//! | `klogconvex`              | sequence  | `k`                   |
//! | `realroots`               | poly seq  | optional `bound`      |
//! | `production`              | ERA       | optional `scaled`     |
//! | `sm-preserve`             | triangle  | `r`, optional `n`     |
//! | `reciprocal-invariance`   | poly seq  | `r`, optional `size`  |
//!
//! Checks on symbolic targets automatically run coefficientwise.  Reports
//! carry schema `"rtp-report/1"`, serialize byte-identically across runs,
//! and every failure embeds the exact minor witness, which
//! [`revalidate_report`] re-checks independently later.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::arith::{parse_rational, Poly, Rational, Ring, VarSet};
use crate::catalog::{
    bell_partial_recurrence, binomial_first, binomial_first_bare, binomial_first_pair,
    binomial_second, binomial_second_bare, binomial_second_pair, blocks3_pair,
    blocks3_recurrence, callan_closed, doublefac_closed, eulerian_recurrence,
    five_param_domain_ok, fractional_triangle, gen_bessel_pair, gen_bessel_recurrence,
    gen_lah_pair, gen_lah_recurrence, idempotent_closed, idempotent_pair, lah_closed, lah_pair,
    laguerre_closed, laguerre_pair, pascal_closed, pascal_pair, real_roots_check, rook_polys,
    stirling2_closed, stirling2_pair, tree_closed,
};
use crate::conv::{alternating_pascal, sm_preservation_probe, standard_library};
use crate::expr::Expr;
use crate::matrix::RingMatrix;
use crate::positivity::{
    hankel, hankel_shifted, hankel_window_sweep, is_coeffwise_tp_r, is_k_log_convex, is_pf_r,
    is_tp_r, is_tp_r_labeled, reciprocal_polys, Witness, DEFAULT_MINOR_ORDER, DEFAULT_WINDOW,
    DEFAULT_WINDOW_SYMBOLIC,
};
use crate::riordan::{row_polys_rational, ExpRiordan};
use crate::{Error, Result};

/// Report schema identifier.
pub const REPORT_SCHEMA: &str = "rtp-report/1";
/// Truncation order used when a task does not specify one.
pub const DEFAULT_ORDER: usize = 12;
/// Variable name used for row polynomials built by `"as": "row-polys"`.
pub const ROW_POLY_VAR: &str = "q";

/// A family or expression parameter: an exact rational, or symbolic.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Rat(Rational),
    Sym,
}

impl ParamValue {
    fn from_json(name: &str, v: &Value) -> Result<ParamValue> {
        match v {
            Value::Number(n) => match n.as_i64() {
                Some(i) => Ok(ParamValue::Rat(crate::arith::rat(i))),
                None => Err(Error::Parse(format!(
                    "parameter '{name}': write non-integer rationals as strings like \"1/2\""
                ))),
            },
            Value::String(s) if s == "sym" => Ok(ParamValue::Sym),
            Value::String(s) => Ok(ParamValue::Rat(parse_rational(s)?)),
            other => Err(Error::Parse(format!("parameter '{name}': invalid value {other}"))),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            ParamValue::Rat(r) => Value::String(r.to_string()),
            ParamValue::Sym => Value::String("sym".into()),
        }
    }
}

/// What a task builds and checks.
#[derive(Clone, Debug, PartialEq)]
pub enum TargetSpec {
    Family { name: String, params: BTreeMap<String, ParamValue> },
    Era { g: String, f: String, params: BTreeMap<String, ParamValue> },
    Fractional { f: String, params: BTreeMap<String, ParamValue> },
    Sequence(Vec<Rational>),
}

impl TargetSpec {
    fn label(&self) -> String {
        match self {
            TargetSpec::Family { name, .. } => name.clone(),
            TargetSpec::Era { .. } => "era".into(),
            TargetSpec::Fractional { .. } => "fractional".into(),
            TargetSpec::Sequence(_) => "sequence".into(),
        }
    }

    fn to_json(&self) -> Value {
        let params_json = |params: &BTreeMap<String, ParamValue>| {
            params.iter().map(|(k, v)| (k.clone(), v.to_json())).collect::<serde_json::Map<_, _>>()
        };
        match self {
            TargetSpec::Family { name, params } => {
                json!({"family": name, "params": params_json(params)})
            }
            TargetSpec::Era { g, f, params } => {
                json!({"era": {"g": g, "f": f}, "params": params_json(params)})
            }
            TargetSpec::Fractional { f, params } => {
                json!({"fractional": f, "params": params_json(params)})
            }
            TargetSpec::Sequence(seq) => {
                json!({"sequence": seq.iter().map(Ring::to_json).collect::<Vec<_>>()})
            }
        }
    }
}

/// A registered check with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum CheckSpec {
    Tp { r: usize },
    Hankel { r: usize, size: Option<usize> },
    Toeplitz { r: usize, n: Option<usize> },
    Sm { r: usize },
    KLogConvex { k: usize },
    RealRoots { bound: Rational },
    Production { scaled: bool },
    SmPreserve { r: usize, n: usize },
    ReciprocalInvariance { r: usize, size: Option<usize> },
}

impl CheckSpec {
    /// Expands the compact string form `"kind key=value ..."` (e.g. `"tp r=3"`)
    /// into the equivalent object form.
    fn from_compact(text: &str) -> Result<Value> {
        let mut words = text.split_whitespace();
        let kind = words
            .next()
            .ok_or_else(|| Error::Parse("empty check string".into()))?;
        let mut obj = serde_json::Map::new();
        obj.insert("kind".into(), Value::String(kind.into()));
        for word in words {
            let (key, value) = word.split_once('=').ok_or_else(|| {
                Error::Parse(format!("check '{text}': expected key=value, got '{word}'"))
            })?;
            let value = match value {
                "true" => Value::Bool(true),
                "false" => Value::Bool(false),
                _ => match value.parse::<i64>() {
                    Ok(n) => Value::Number(n.into()),
                    Err(_) => Value::String(value.into()),
                },
            };
            obj.insert(key.into(), value);
        }
        Ok(Value::Object(obj))
    }

    fn from_json(v: &Value) -> Result<CheckSpec> {
        if let Value::String(text) = v {
            return CheckSpec::from_json(&CheckSpec::from_compact(text)?);
        }
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("check must be an object, got {v}")))?;
        let kind = obj
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("check needs a string \"kind\"".into()))?;
        let get_usize = |key: &str, default: usize| -> Result<usize> {
            match obj.get(key) {
                None => Ok(default),
                Some(v) => v
                    .as_u64()
                    .map(|n| n as usize)
                    .ok_or_else(|| Error::Parse(format!("check field '{key}' must be a nonnegative integer"))),
            }
        };
        let get_opt_usize = |key: &str| -> Result<Option<usize>> {
            match obj.get(key) {
                None => Ok(None),
                Some(v) => v
                    .as_u64()
                    .map(|n| Some(n as usize))
                    .ok_or_else(|| Error::Parse(format!("check field '{key}' must be a nonnegative integer"))),
            }
        };
        match kind {
            "tp" | "coeffwise-tp" => Ok(CheckSpec::Tp { r: get_usize("r", DEFAULT_MINOR_ORDER)? }),
            "hankel" | "coeffwise-hankel" => Ok(CheckSpec::Hankel {
                r: get_usize("r", DEFAULT_MINOR_ORDER)?,
                size: get_opt_usize("size")?,
            }),
            "toeplitz" | "pf" => Ok(CheckSpec::Toeplitz {
                r: get_usize("r", DEFAULT_MINOR_ORDER)?,
                n: get_opt_usize("n")?,
            }),
            "sm" => Ok(CheckSpec::Sm { r: get_usize("r", DEFAULT_MINOR_ORDER)? }),
            "klogconvex" => Ok(CheckSpec::KLogConvex { k: get_usize("k", 3)? }),
            "realroots" => {
                let bound = match obj.get("bound") {
                    None => crate::arith::rat(0),
                    Some(Value::String(s)) => parse_rational(s)?,
                    Some(Value::Number(n)) => match n.as_i64() {
                        Some(i) => crate::arith::rat(i),
                        None => {
                            return Err(Error::Parse(
                                "check field 'bound' must be an integer or \"p/q\" string".into(),
                            ))
                        }
                    },
                    Some(other) => {
                        return Err(Error::Parse(format!("invalid 'bound' value {other}")))
                    }
                };
                Ok(CheckSpec::RealRoots { bound })
            }
            "production" => {
                let scaled = match obj.get("scaled") {
                    None => false,
                    Some(Value::Bool(b)) => *b,
                    Some(other) => {
                        return Err(Error::Parse(format!("invalid 'scaled' value {other}")))
                    }
                };
                Ok(CheckSpec::Production { scaled })
            }
            "sm-preserve" => Ok(CheckSpec::SmPreserve {
                r: get_usize("r", 3)?,
                n: get_usize("n", 6)?,
            }),
            "reciprocal-invariance" => Ok(CheckSpec::ReciprocalInvariance {
                r: get_usize("r", 2)?,
                size: get_opt_usize("size")?,
            }),
            other => Err(Error::Domain(format!("unknown check kind '{other}'"))),
        }
    }

    fn label(&self) -> String {
        match self {
            CheckSpec::Tp { r } => format!("tp(r={r})"),
            CheckSpec::Hankel { r, size: None } => format!("hankel(r={r})"),
            CheckSpec::Hankel { r, size: Some(s) } => format!("hankel(r={r},size={s})"),
            CheckSpec::Toeplitz { r, n: None } => format!("toeplitz(r={r})"),
            CheckSpec::Toeplitz { r, n: Some(n) } => format!("toeplitz(r={r},n={n})"),
            CheckSpec::Sm { r } => format!("sm(r={r})"),
            CheckSpec::KLogConvex { k } => format!("klogconvex(k={k})"),
            CheckSpec::RealRoots { bound } => format!("realroots(bound={bound})"),
            CheckSpec::Production { scaled } => format!("production(scaled={scaled})"),
            CheckSpec::SmPreserve { r, n } => format!("sm-preserve(r={r},n={n})"),
            CheckSpec::ReciprocalInvariance { r, size: None } => {
                format!("reciprocal-invariance(r={r})")
            }
            CheckSpec::ReciprocalInvariance { r, size: Some(s) } => {
                format!("reciprocal-invariance(r={r},size={s})")
            }
        }
    }
}

/// One build-and-check unit of a job.
#[derive(Clone, Debug, PartialEq)]
pub struct Task {
    pub label: String,
    pub target: TargetSpec,
    pub order: usize,
    pub as_row_polys: bool,
    pub checks: Vec<CheckSpec>,
}

/// A parsed job file.
#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub tasks: Vec<Task>,
}

impl JobSpec {
    /// Parses job-file text (a task object, or `{"tasks": [...]}`).
    pub fn parse(src: &str) -> Result<JobSpec> {
        let v: Value =
            serde_json::from_str(src).map_err(|e| Error::Parse(format!("job file: {e}")))?;
        JobSpec::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<JobSpec> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("job file must be a JSON object".into()))?;
        let tasks = match obj.get("tasks") {
            Some(Value::Array(items)) => {
                items.iter().map(Task::from_json).collect::<Result<Vec<_>>>()?
            }
            Some(other) => {
                return Err(Error::Parse(format!("\"tasks\" must be an array, got {other}")))
            }
            None => vec![Task::from_json(v)?],
        };
        if tasks.is_empty() {
            return Err(Error::Domain("job has no tasks".into()));
        }
        Ok(JobSpec { tasks })
    }
}

const TASK_KEYS: &[&str] =
    &["label", "family", "era", "fractional", "sequence", "N", "order", "checks", "as", "tasks"];

impl Task {
    pub fn from_json(v: &Value) -> Result<Task> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("task must be an object, got {v}")))?;

        let mut params = BTreeMap::new();
        for (key, val) in obj {
            if !TASK_KEYS.contains(&key.as_str()) {
                params.insert(key.clone(), ParamValue::from_json(key, val)?);
            }
        }

        let mut targets = Vec::new();
        if let Some(name) = obj.get("family") {
            let name = name
                .as_str()
                .ok_or_else(|| Error::Parse("\"family\" must be a string".into()))?;
            targets.push(TargetSpec::Family { name: name.into(), params: params.clone() });
        }
        if let Some(era) = obj.get("era") {
            let sub = era
                .as_object()
                .ok_or_else(|| Error::Parse("\"era\" must be {\"g\": ..., \"f\": ...}".into()))?;
            let field = |k: &str| -> Result<String> {
                sub.get(k)
                    .and_then(Value::as_str)
                    .map(String::from)
                    .ok_or_else(|| Error::Parse(format!("\"era\" needs a string \"{k}\"")))
            };
            targets.push(TargetSpec::Era { g: field("g")?, f: field("f")?, params: params.clone() });
        }
        if let Some(f) = obj.get("fractional") {
            let f = f
                .as_str()
                .ok_or_else(|| Error::Parse("\"fractional\" must be an expression string".into()))?;
            targets.push(TargetSpec::Fractional { f: f.into(), params: params.clone() });
        }
        if let Some(seq) = obj.get("sequence") {
            let items = seq
                .as_array()
                .ok_or_else(|| Error::Parse("\"sequence\" must be an array".into()))?;
            let seq = items
                .iter()
                .map(|x| match x {
                    Value::Number(n) => n
                        .as_i64()
                        .map(crate::arith::rat)
                        .ok_or_else(|| Error::Parse("sequence entries must be exact".into())),
                    Value::String(s) => parse_rational(s),
                    other => Err(Error::Parse(format!("invalid sequence entry {other}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            if !params.is_empty() {
                return Err(Error::Domain("a sequence target takes no parameters".into()));
            }
            targets.push(TargetSpec::Sequence(seq));
        }
        if targets.len() != 1 {
            return Err(Error::Parse(
                "task needs exactly one of \"family\", \"era\", \"fractional\", \"sequence\""
                    .into(),
            ));
        }
        let target = targets.pop().unwrap();

        let order = match (obj.get("N"), obj.get("order")) {
            (None, None) => DEFAULT_ORDER,
            (Some(v), None) | (None, Some(v)) => v
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| Error::Parse("order must be a nonnegative integer".into()))?,
            (Some(_), Some(_)) => {
                return Err(Error::Parse("give either \"N\" or \"order\", not both".into()))
            }
        };

        let as_row_polys = match obj.get("as") {
            None => false,
            Some(Value::String(s)) if s == "triangle" => false,
            Some(Value::String(s)) if s == "row-polys" => true,
            Some(other) => {
                return Err(Error::Parse(format!(
                    "\"as\" must be \"triangle\" or \"row-polys\", got {other}"
                )))
            }
        };

        let checks = match obj.get("checks") {
            None => Vec::new(),
            Some(Value::Array(items)) => {
                items.iter().map(CheckSpec::from_json).collect::<Result<Vec<_>>>()?
            }
            Some(other) => {
                return Err(Error::Parse(format!("\"checks\" must be an array, got {other}")))
            }
        };

        let label = match obj.get("label") {
            None => target.label(),
            Some(Value::String(s)) => s.clone(),
            Some(other) => return Err(Error::Parse(format!("\"label\" must be a string, got {other}"))),
        };

        Ok(Task { label, target, order, as_row_polys, checks })
    }
}

/// What a target builds into: a triangle or a sequence, both over
/// polynomial entries (numeric data carries constant polynomials).
#[derive(Clone, Debug)]
pub enum Built {
    Triangle(RingMatrix<Poly>),
    Seq(Vec<Poly>),
}

fn rational_matrix(m: &RingMatrix<Poly>) -> Option<RingMatrix<Rational>> {
    let mut out = RingMatrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, m.get(i, j).as_constant()?);
        }
    }
    Some(out)
}

fn rational_seq(seq: &[Poly]) -> Option<Vec<Rational>> {
    seq.iter().map(Poly::as_constant).collect()
}

fn lift_matrix(m: &RingMatrix<Rational>) -> RingMatrix<Poly> {
    m.map(Poly::from_rational)
}

/// Resolves string/`"sym"` parameters into polynomials over a shared
/// variable set (declared in sorted name order).
struct ParamEnv {
    vars: VarSet,
    values: BTreeMap<String, Rational>,
}

impl ParamEnv {
    fn new(params: &BTreeMap<String, ParamValue>) -> ParamEnv {
        let sym: BTreeSet<&str> = params
            .iter()
            .filter(|(_, v)| **v == ParamValue::Sym)
            .map(|(k, _)| k.as_str())
            .collect();
        let values = params
            .iter()
            .filter_map(|(k, v)| match v {
                ParamValue::Rat(r) => Some((k.clone(), r.clone())),
                ParamValue::Sym => None,
            })
            .collect();
        ParamEnv { vars: VarSet::new(sym), values }
    }

    fn poly(&self, params: &BTreeMap<String, ParamValue>, name: &str) -> Result<Poly> {
        match params.get(name) {
            Some(ParamValue::Rat(r)) => Ok(Poly::from_rational(r)),
            Some(ParamValue::Sym) => Ok(Poly::var(&self.vars, name)),
            None => Err(Error::Domain(format!("family needs parameter '{name}'"))),
        }
    }

    fn rat(&self, params: &BTreeMap<String, ParamValue>, name: &str) -> Result<Rational> {
        match params.get(name) {
            Some(ParamValue::Rat(r)) => Ok(r.clone()),
            Some(ParamValue::Sym) => {
                Err(Error::Domain(format!("parameter '{name}' must be a rational here")))
            }
            None => Err(Error::Domain(format!("family needs parameter '{name}'"))),
        }
    }
}

fn int_param(params: &BTreeMap<String, ParamValue>, name: &str) -> Result<i64> {
    match params.get(name) {
        Some(ParamValue::Rat(r)) if r.is_integer() => {
            use num_traits::ToPrimitive;
            r.to_integer()
                .to_i64()
                .ok_or_else(|| Error::Domain(format!("parameter '{name}' out of range")))
        }
        Some(_) => Err(Error::Domain(format!("parameter '{name}' must be an integer"))),
        None => Err(Error::Domain(format!("family needs parameter '{name}'"))),
    }
}

fn expect_params(
    family: &str,
    params: &BTreeMap<String, ParamValue>,
    allowed: &[&str],
) -> Result<()> {
    for key in params.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::Domain(format!(
                "family '{family}' does not take a parameter '{key}' (allowed: {allowed:?})"
            )));
        }
    }
    Ok(())
}

/// Five-parameter inputs with `d` and `lambda` defaulting to zero.
fn five_params(
    params: &BTreeMap<String, ParamValue>,
) -> BTreeMap<String, ParamValue> {
    let mut full = params.clone();
    for name in ["d", "lambda"] {
        full.entry(name.into()).or_insert_with(|| ParamValue::Rat(crate::arith::rat(0)));
    }
    full
}

/// Applies the positivity-hypothesis guard when every structural parameter
/// is numeric; symbolic parameters defer the hypotheses to the checks.
fn guard_five_params(params: &BTreeMap<String, ParamValue>, allow_zero_a: bool) -> Result<()> {
    let rat_of = |name: &str| match params.get(name) {
        Some(ParamValue::Rat(r)) => Some(r.clone()),
        _ => None,
    };
    if let (Some(a), Some(b), Some(c), Some(d)) =
        (rat_of("a"), rat_of("b"), rat_of("c"), rat_of("d"))
    {
        five_param_domain_ok(&a, &b, &c, &d, allow_zero_a)?;
    }
    Ok(())
}

/// Builds a task's target at the given order.
pub fn build_target(target: &TargetSpec, order: usize, as_row_polys: bool) -> Result<Built> {
    let built = match target {
        TargetSpec::Sequence(seq) => {
            Built::Seq(seq.iter().map(Poly::from_rational).collect())
        }
        TargetSpec::Fractional { f, params } => {
            let env = ParamEnv::new(params);
            let fs = Expr::parse(f)?.eval_poly(order, &env.vars, &env.values)?;
            Built::Triangle(fractional_triangle(&fs, order)?)
        }
        TargetSpec::Era { g, f, params } => {
            let env = ParamEnv::new(params);
            let gs = Expr::parse(g)?.eval_poly(order, &env.vars, &env.values)?;
            let fs = Expr::parse(f)?.eval_poly(order, &env.vars, &env.values)?;
            Built::Triangle(ExpRiordan::new(gs, fs)?.triangle(order)?)
        }
        TargetSpec::Family { name, params } => build_family(name, params, order)?,
    };
    if !as_row_polys {
        return Ok(built);
    }
    match built {
        Built::Seq(_) => Err(Error::Domain(
            "\"as\": \"row-polys\" applies to triangle targets only".into(),
        )),
        Built::Triangle(m) => {
            let rm = rational_matrix(&m).ok_or_else(|| {
                Error::Domain("bind all parameters before requesting row polynomials".into())
            })?;
            let vars = VarSet::new([ROW_POLY_VAR]);
            Ok(Built::Seq(row_polys_rational(&rm, &vars, ROW_POLY_VAR)?))
        }
    }
}

fn build_family(
    name: &str,
    params: &BTreeMap<String, ParamValue>,
    order: usize,
) -> Result<Built> {
    match name {
        "pascal" => {
            expect_params(name, params, &[])?;
            Ok(Built::Triangle(lift_matrix(&pascal_closed(order))))
        }
        "stirling2" => {
            expect_params(name, params, &[])?;
            Ok(Built::Triangle(lift_matrix(&stirling2_closed(order))))
        }
        "lah" => {
            expect_params(name, params, &[])?;
            Ok(Built::Triangle(lift_matrix(&lah_closed(order))))
        }
        "laguerre" => {
            expect_params(name, params, &["alpha"])?;
            let env = ParamEnv::new(params);
            let alpha = env.rat(params, "alpha")?;
            Ok(Built::Triangle(lift_matrix(&laguerre_closed(&alpha, order))))
        }
        "callan" => {
            expect_params(name, params, &[])?;
            Ok(Built::Triangle(lift_matrix(&callan_closed(order))))
        }
        "doublefac" => {
            expect_params(name, params, &[])?;
            Ok(Built::Triangle(lift_matrix(&doublefac_closed(order))))
        }
        "idempotent" => {
            expect_params(name, params, &[])?;
            Ok(Built::Triangle(lift_matrix(&idempotent_closed(order))))
        }
        "tree" => {
            expect_params(name, params, &[])?;
            Ok(Built::Triangle(lift_matrix(&tree_closed(order))))
        }
        "eulerian" => {
            expect_params(name, params, &[])?;
            Ok(Built::Triangle(lift_matrix(&eulerian_recurrence(order))))
        }
        "alternating-pascal" => {
            expect_params(name, params, &[])?;
            Ok(Built::Triangle(lift_matrix(&alternating_pascal(order))))
        }
        "rook" => {
            expect_params(name, params, &[])?;
            let vars = VarSet::new([ROW_POLY_VAR]);
            Ok(Built::Seq(rook_polys(&vars, ROW_POLY_VAR, order)))
        }
        "bell" => {
            expect_params(name, params, &["m"])?;
            let m = int_param(params, "m")?;
            if m < 1 {
                return Err(Error::Domain("parameter 'm' must be at least 1".into()));
            }
            let vars = VarSet::new((1..=m).map(|i| format!("x{i}")));
            let xs: Vec<Poly> =
                (1..=m).map(|i| Poly::var(&vars, &format!("x{i}"))).collect();
            Ok(Built::Triangle(bell_partial_recurrence(&xs, order)))
        }
        "gen_bessel" | "gen_lah" => {
            expect_params(name, params, &["a", "b", "c", "d", "lambda"])?;
            let full = five_params(params);
            guard_five_params(&full, name == "gen_lah")?;
            let env = ParamEnv::new(&full);
            let [a, b, c, d, lam] = ["a", "b", "c", "d", "lambda"]
                .map(|p| env.poly(&full, p));
            let (a, b, c, d, lam) = (a?, b?, c?, d?, lam?);
            let tri = if name == "gen_bessel" {
                gen_bessel_recurrence(&a, &b, &c, &d, &lam, order)
            } else {
                gen_lah_recurrence(&a, &b, &c, &d, &lam, order)
            };
            Ok(Built::Triangle(tri))
        }
        "blocks3" => {
            expect_params(name, params, &["a", "b", "c"])?;
            let env = ParamEnv::new(params);
            let [a, b, c] = ["a", "b", "c"].map(|p| env.poly(params, p));
            Ok(Built::Triangle(blocks3_recurrence(&a?, &b?, &c?, order)))
        }
        "binomial1" | "binomial1-bare" | "binomial2" | "binomial2-bare" => {
            let first_param = if name.starts_with("binomial1") { "m" } else { "n" };
            expect_params(name, params, &[first_param, "c", "d"])?;
            let p0 = int_param(params, first_param)?;
            let c = int_param(params, "c")?;
            let d = int_param(params, "d")?;
            let tri = match name {
                "binomial1" => binomial_first(p0, c, d, order)?,
                "binomial1-bare" => binomial_first_bare(p0, c, d, order)?,
                "binomial2" => binomial_second(p0, c, d, order)?,
                _ => binomial_second_bare(p0, c, d, order)?,
            };
            Ok(Built::Triangle(lift_matrix(&tri)))
        }
        other => Err(Error::Domain(format!("unknown family '{other}'"))),
    }
}

/// Builds the exponential Riordan pair behind a target, for checks that need
/// the generating-function realization rather than the triangle.
pub fn build_pair(target: &TargetSpec, order: usize) -> Result<ExpRiordan<Poly>> {
    let lift_pair = |pair: ExpRiordan<Rational>| -> Result<ExpRiordan<Poly>> {
        ExpRiordan::new(pair.g().map(Poly::from_rational), pair.f().map(Poly::from_rational))
    };
    match target {
        TargetSpec::Era { g, f, params } => {
            let env = ParamEnv::new(params);
            let gs = Expr::parse(g)?.eval_poly(order, &env.vars, &env.values)?;
            let fs = Expr::parse(f)?.eval_poly(order, &env.vars, &env.values)?;
            ExpRiordan::new(gs, fs)
        }
        TargetSpec::Family { name, params } => match name.as_str() {
            "pascal" => lift_pair(pascal_pair(order)?),
            "stirling2" => lift_pair(stirling2_pair(order)?),
            "lah" => lift_pair(lah_pair(order)?),
            "laguerre" => {
                let env = ParamEnv::new(params);
                lift_pair(laguerre_pair(&env.rat(params, "alpha")?, order)?)
            }
            "idempotent" => lift_pair(idempotent_pair(order)?),
            "tree" => lift_pair(idempotent_pair(order)?.inverse()?),
            "bell" => {
                let m = int_param(params, "m")?;
                let vars = VarSet::new((1..=m).map(|i| format!("x{i}")));
                let xs: Vec<Poly> =
                    (1..=m).map(|i| Poly::var(&vars, &format!("x{i}"))).collect();
                crate::catalog::bell_partial_pair(&xs, order)
            }
            "gen_bessel" | "gen_lah" => {
                let full = five_params(params);
                guard_five_params(&full, name == "gen_lah")?;
                let env = ParamEnv::new(&full);
                let a = env.rat(&full, "a")?;
                let d = env.rat(&full, "d")?;
                let b = env.poly(&full, "b")?;
                let c = env.poly(&full, "c")?;
                let lam = env.poly(&full, "lambda")?;
                if name == "gen_bessel" {
                    gen_bessel_pair(&a, &d, &b, &c, &lam, order)
                } else {
                    gen_lah_pair(&a, &d, &b, &c, &lam, order)
                }
            }
            "blocks3" => {
                let env = ParamEnv::new(params);
                let [a, b, c] = ["a", "b", "c"].map(|p| env.poly(params, p));
                blocks3_pair(&a?, &b?, &c?, order)
            }
            "binomial1" => {
                let (m, c, d) =
                    (int_param(params, "m")?, int_param(params, "c")?, int_param(params, "d")?);
                lift_pair(binomial_first_pair(m, c, d, order)?)
            }
            "binomial2" => {
                let (n, c, d) =
                    (int_param(params, "n")?, int_param(params, "c")?, int_param(params, "d")?);
                lift_pair(binomial_second_pair(n, c, d, order)?)
            }
            other => Err(Error::Domain(format!(
                "family '{other}' has no exponential Riordan realization registered"
            ))),
        },
        _ => Err(Error::Domain(
            "this target has no exponential Riordan realization".into(),
        )),
    }
}

/// Outcome of a single check.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub label: String,
    pub pass: bool,
    pub detail: Value,
}

/// Outcome of one task.
#[derive(Clone, Debug)]
pub struct TaskRecord {
    pub index: usize,
    pub label: String,
    pub target: Value,
    pub order: usize,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

/// Full job outcome.
#[derive(Clone, Debug)]
pub struct Report {
    pub pass: bool,
    pub tasks: Vec<TaskRecord>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": REPORT_SCHEMA,
            "pass": self.pass,
            "tasks": self.tasks.iter().map(|t| json!({
                "index": t.index,
                "label": t.label,
                "target": t.target,
                "order": t.order,
                "pass": t.pass,
                "checks": t.checks.iter().map(|c| json!({
                    "check": c.label,
                    "pass": c.pass,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Canonical serialization: pretty-printed with sorted keys, trailing
    /// newline.  Byte-identical across runs of the same job.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable summary table.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for t in &self.tasks {
            let status = if t.pass { "pass" } else { "FAIL" };
            let _ = writeln!(out, "task {} ({}, order {}): {status}", t.index, t.label, t.order);
            for c in &t.checks {
                let status = if c.pass { "pass" } else { "FAIL" };
                let _ = writeln!(out, "  {:<32} {status}", c.label);
            }
        }
        let _ = writeln!(out, "overall: {}", if self.pass { "pass" } else { "FAIL" });
        out
    }
}

/// Maps an error to the process exit code used by the command-line driver:
/// `2` for syntax problems, `3` for everything structurally valid but
/// outside the domain (check failures are not errors; they exit `1`).
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        _ => 3,
    }
}

/// Runs a parsed job.
pub fn run_job(spec: &JobSpec) -> Result<Report> {
    let mut tasks = Vec::with_capacity(spec.tasks.len());
    for (index, task) in spec.tasks.iter().enumerate() {
        let built = build_target(&task.target, task.order, task.as_row_polys)?;
        let mut checks = Vec::with_capacity(task.checks.len());
        for check in &task.checks {
            let (pass, detail) = run_check(task, &built, check)?;
            checks.push(CheckRecord { label: check.label(), pass, detail });
        }
        let pass = checks.iter().all(|c| c.pass);
        tasks.push(TaskRecord {
            index,
            label: task.label.clone(),
            target: task.target.to_json(),
            order: task.order,
            pass,
            checks,
        });
    }
    Ok(Report { pass: tasks.iter().all(|t| t.pass), tasks })
}

/// Parses and runs a job in one step.
pub fn run_job_str(src: &str) -> Result<Report> {
    run_job(&JobSpec::parse(src)?)
}

fn seq_target<'a>(built: &'a Built, kind: &str) -> Result<&'a [Poly]> {
    match built {
        Built::Seq(seq) => Ok(seq),
        Built::Triangle(_) => Err(Error::Domain(format!(
            "'{kind}' needs a sequence target (did you mean \"as\": \"row-polys\"?)"
        ))),
    }
}

fn triangle_target<'a>(built: &'a Built, kind: &str) -> Result<&'a RingMatrix<Poly>> {
    match built {
        Built::Triangle(m) => Ok(m),
        Built::Seq(_) => Err(Error::Domain(format!("'{kind}' needs a triangle target"))),
    }
}

/// The single variable of a polynomial sequence, if one exists.
fn seq_var(seq: &[Poly]) -> Result<String> {
    let mut names: BTreeSet<&str> = BTreeSet::new();
    for p in seq {
        for (exps, _) in p.terms() {
            for (i, e) in exps.iter().enumerate() {
                if *e > 0 {
                    names.insert(&p.vars().names()[i]);
                }
            }
        }
    }
    match names.len() {
        0 => Ok(ROW_POLY_VAR.into()),
        1 => Ok(names.into_iter().next().unwrap().to_string()),
        _ => Err(Error::Domain(format!(
            "sequence mixes several variables {names:?}; this check needs univariate rows"
        ))),
    }
}

fn run_check(task: &Task, built: &Built, check: &CheckSpec) -> Result<(bool, Value)> {
    match check {
        CheckSpec::Tp { r } => {
            let m = triangle_target(built, "tp")?;
            let verdict_json = match rational_matrix(m) {
                Some(rm) => {
                    let v = is_tp_r(&rm, *r)?;
                    (v.pass, v.to_json())
                }
                None => {
                    let v = is_coeffwise_tp_r(m, *r)?;
                    (v.pass, v.to_json())
                }
            };
            Ok(verdict_json)
        }
        CheckSpec::Hankel { r, size } => {
            let seq = seq_target(built, "hankel")?;
            match rational_seq(seq) {
                Some(rs) => {
                    let (size, max_shift) = window_geometry(rs.len(), *size, DEFAULT_WINDOW)?;
                    let v = hankel_window_sweep(&rs, size, max_shift, *r)?;
                    Ok((v.pass, v.to_json()))
                }
                None => {
                    let (size, max_shift) =
                        window_geometry(seq.len(), *size, DEFAULT_WINDOW_SYMBOLIC)?;
                    let v = hankel_window_sweep(seq, size, max_shift, *r)?;
                    Ok((v.pass, v.to_json()))
                }
            }
        }
        CheckSpec::Toeplitz { r, n } => {
            let seq = seq_target(built, "toeplitz")?;
            let n = n.unwrap_or(seq.len().saturating_sub(1));
            match rational_seq(seq) {
                Some(rs) => {
                    let v = is_pf_r(&rs, n, *r)?;
                    Ok((v.pass, v.to_json()))
                }
                None => {
                    let v = is_pf_r(seq, n, *r)?;
                    Ok((v.pass, v.to_json()))
                }
            }
        }
        CheckSpec::Sm { r } => {
            let seq = seq_target(built, "sm")?;
            let rs = rational_seq(seq).ok_or_else(|| {
                Error::Domain("'sm' needs a fully numeric sequence; bind parameters first".into())
            })?;
            if rs.len() < 2 {
                return Err(Error::InsufficientTerms { needed: 2, have: rs.len() });
            }
            // Each matrix at the largest truncation the terms support.
            let plain = is_tp_r_labeled(&hankel(&rs, (rs.len() - 1) / 2)?, *r, "hankel")?;
            if !plain.pass {
                let detail = json!({"hankel": plain.to_json(), "hankel-shifted": Value::Null});
                return Ok((false, detail));
            }
            let shifted =
                is_tp_r_labeled(&hankel_shifted(&rs, (rs.len() - 2) / 2)?, *r, "hankel-shifted")?;
            let pass = shifted.pass;
            Ok((pass, json!({"hankel": plain.to_json(), "hankel-shifted": shifted.to_json()})))
        }
        CheckSpec::KLogConvex { k } => {
            let seq = seq_target(built, "klogconvex")?;
            match rational_seq(seq) {
                Some(rs) => {
                    let v = is_k_log_convex(&rs, *k)?;
                    Ok((v.pass, v.to_json()))
                }
                None => {
                    let v = is_k_log_convex(seq, *k)?;
                    Ok((v.pass, v.to_json()))
                }
            }
        }
        CheckSpec::RealRoots { bound } => {
            let seq = seq_target(built, "realroots")?;
            let var = seq_var(seq)?;
            let v = real_roots_check(seq, &var, bound)?;
            Ok((v.pass, v.to_json()))
        }
        CheckSpec::Production { scaled } => {
            // The identity consumes one extra order of series data.
            let pair = build_pair(&task.target, task.order + 1)?;
            let agrees = pair.verify_production(task.order, *scaled)?;
            Ok((agrees, json!({"agrees": agrees, "scaled": scaled})))
        }
        CheckSpec::SmPreserve { r, n } => {
            let m = triangle_target(built, "sm-preserve")?;
            let rm = rational_matrix(m).ok_or_else(|| {
                Error::Domain(
                    "'sm-preserve' needs a fully numeric triangle; bind parameters first".into(),
                )
            })?;
            let library = standard_library()?;
            let report = sm_preservation_probe(&rm, &library, *n, *r)?;
            Ok((report.pass, report.to_json()))
        }
        CheckSpec::ReciprocalInvariance { r, size } => {
            let seq = seq_target(built, "reciprocal-invariance")?;
            let var = seq_var(seq)?;
            let flipped = reciprocal_polys(seq, &var)?;
            let (w, max_shift) = window_geometry(seq.len(), *size, DEFAULT_WINDOW_SYMBOLIC)?;
            let before = hankel_window_sweep(seq, w, max_shift, *r)?;
            let after = hankel_window_sweep(&flipped, w, max_shift, *r)?;
            let invariant = before.pass == after.pass;
            Ok((
                invariant,
                json!({
                    "before": before.to_json(),
                    "after": after.to_json(),
                    "invariant": invariant,
                }),
            ))
        }
    }
}

/// Chooses a Hankel window size (requested or default, clamped to what the
/// terms support) and the largest shift that still fits.
fn window_geometry(len: usize, requested: Option<usize>, default: usize) -> Result<(usize, usize)> {
    if len == 0 {
        return Err(Error::InsufficientTerms { needed: 1, have: 0 });
    }
    let supported = len.div_ceil(2);
    let size = match requested {
        Some(s) => {
            if s == 0 || s > supported {
                return Err(Error::Domain(format!(
                    "window size {s} unsupported by {len} terms (max {supported})"
                )));
            }
            s
        }
        None => default.min(supported),
    };
    Ok((size, len - (2 * size - 1)))
}

/// Outcome of re-validating the witnesses stored in a report.
#[derive(Clone, Debug, PartialEq)]
pub struct RevalidationSummary {
    /// Number of witness objects found.
    pub witnesses: usize,
    /// How many re-validated (stored determinant matches a fresh
    /// recomputation from the stored entries, and under any supplied
    /// bindings the bound determinant matches too).
    pub valid: usize,
}

impl RevalidationSummary {
    pub fn all_valid(&self) -> bool {
        self.witnesses == self.valid
    }
}

/// Walks a report (or any JSON value), finds every stored minor witness,
/// and re-checks it by recomputing the determinant from the stored entries.
/// With `bindings`, symbolic witnesses are additionally bound to rationals
/// and re-checked numerically.
pub fn revalidate_report(
    report: &Value,
    bindings: &BTreeMap<String, Rational>,
) -> Result<RevalidationSummary> {
    let mut summary = RevalidationSummary { witnesses: 0, valid: 0 };
    revalidate_walk(report, bindings, &mut summary)?;
    Ok(summary)
}

fn looks_like_witness(v: &Value) -> bool {
    v.as_object().is_some_and(|o| {
        ["source", "minor_order", "rows", "cols", "entries", "determinant"]
            .iter()
            .all(|k| o.contains_key(*k))
    })
}

fn revalidate_walk(
    v: &Value,
    bindings: &BTreeMap<String, Rational>,
    summary: &mut RevalidationSummary,
) -> Result<()> {
    match v {
        Value::Array(items) => {
            for item in items {
                revalidate_walk(item, bindings, summary)?;
            }
        }
        Value::Object(obj) => {
            if looks_like_witness(v) {
                summary.witnesses += 1;
                if revalidate_witness(v, bindings)? {
                    summary.valid += 1;
                }
                return Ok(());
            }
            for item in obj.values() {
                revalidate_walk(item, bindings, summary)?;
            }
        }
        _ => {}
    }
    Ok(())
}

fn revalidate_witness(v: &Value, bindings: &BTreeMap<String, Rational>) -> Result<bool> {
    if let Ok(w) = Witness::<Rational>::from_json(v) {
        return Ok(w.recompute_determinant()? == w.determinant);
    }
    let w = Witness::<Poly>::from_json(v)?;
    if w.recompute_determinant()? != w.determinant {
        return Ok(false);
    }
    if !bindings.is_empty() {
        let bound = w.bind(bindings)?;
        let mut det = w.determinant.clone();
        for (name, value) in bindings {
            det = det.bind(name, value);
        }
        let det = det.eval(&BTreeMap::new())?;
        return Ok(bound == det);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn family_check_runs_and_reports_deterministically() {
        let src = r#"{"family": "eulerian", "N": 7, "checks": [{"kind": "tp", "r": 3}]}"#;
        let report = run_job_str(src).unwrap();
        assert!(report.pass);
        assert_eq!(report.tasks.len(), 1);
        assert_eq!(report.tasks[0].checks[0].label, "tp(r=3)");

        let again = run_job_str(src).unwrap();
        assert_eq!(report.to_json_string(), again.to_json_string());
        assert!(report.to_json_string().contains("\"schema\": \"rtp-report/1\""));
        assert!(report.render_text().contains("overall: pass"));
    }

    #[test]
    fn sequence_moment_check_fails_with_revalidating_witness() {
        let src = r#"{"sequence": [1, 2, 3], "checks": [{"kind": "sm", "r": 2}]}"#;
        let report = run_job_str(src).unwrap();
        assert!(!report.pass);
        let detail = &report.tasks[0].checks[0].detail;
        let witness = &detail["hankel"]["witness"];
        assert_eq!(witness["determinant"], json!("-1"));

        let summary = revalidate_report(&report.to_json(), &BTreeMap::new()).unwrap();
        assert_eq!(summary, RevalidationSummary { witnesses: 1, valid: 1 });
        assert!(summary.all_valid());
    }

    #[test]
    fn rook_sequence_passes_registered_probes() {
        let src = r#"{
            "family": "rook", "N": 8,
            "checks": [
                {"kind": "coeffwise-hankel", "r": 2, "size": 4},
                {"kind": "klogconvex", "k": 3}
            ]
        }"#;
        let report = run_job_str(src).unwrap();
        assert!(report.pass, "{}", report.render_text());
        assert_eq!(report.tasks[0].checks.len(), 2);
    }

    #[test]
    fn five_parameter_family_guards_domain_and_verifies_production() {
        let src = r#"{
            "family": "gen_lah",
            "a": 1, "b": "1", "c": "1", "d": 0, "lambda": "sym",
            "N": 7,
            "checks": [{"kind": "production"}]
        }"#;
        let report = run_job_str(src).unwrap();
        assert!(report.pass);

        let bad = r#"{"family": "gen_lah", "a": 1, "b": "1", "c": "-1", "N": 5, "checks": []}"#;
        let err = run_job_str(bad).unwrap_err();
        assert!(matches!(err, Error::ParameterDomain(_)));
        assert_eq!(error_exit_code(&err), 3);
        assert_eq!(error_exit_code(&Error::Parse("x".into())), 2);
    }

    #[test]
    fn era_expressions_build_and_pass_checks() {
        let src = r#"{
            "era": {"g": "1/(1-t)", "f": "t/(1-t)"},
            "N": 8,
            "checks": [{"kind": "production"}, {"kind": "tp", "r": 3}]
        }"#;
        let report = run_job_str(src).unwrap();
        assert!(report.pass, "{}", report.render_text());
    }

    #[test]
    fn row_polynomial_targets_support_root_and_reciprocal_checks() {
        let src = r#"{
            "family": "lah", "N": 8, "as": "row-polys",
            "checks": [
                {"kind": "realroots"},
                {"kind": "reciprocal-invariance", "r": 2, "size": 4}
            ]
        }"#;
        let report = run_job_str(src).unwrap();
        assert!(report.pass, "{}", report.render_text());
    }

    #[test]
    fn preservation_probe_passes_and_signed_triangle_fails() {
        let good = r#"{
            "fractional": "t/(1-t)", "N": 6,
            "checks": [{"kind": "sm-preserve", "r": 3, "n": 6}]
        }"#;
        assert!(run_job_str(good).unwrap().pass);

        let bad = r#"{
            "family": "alternating-pascal", "N": 6,
            "checks": [{"kind": "sm-preserve", "r": 3, "n": 6}]
        }"#;
        let report = run_job_str(bad).unwrap();
        assert!(!report.pass);
        let summary = revalidate_report(&report.to_json(), &BTreeMap::new()).unwrap();
        assert!(summary.witnesses >= 1);
        assert!(summary.all_valid());
    }

    #[test]
    fn symbolic_witnesses_revalidate_under_bindings() {
        // A 10x10 symbolic-lambda triangle is expensive; a tiny synthetic
        // report exercises the binding path directly instead.
        let vars = VarSet::new(["x"]);
        let x = Poly::var(&vars, "x");
        let w = Witness::<Poly> {
            source: "matrix".into(),
            minor_order: 2,
            rows: vec![0, 1],
            cols: vec![0, 1],
            entries: vec![Poly::one(), x.clone(), x.clone(), Poly::from_rational(&rat(1))],
            determinant: Poly::one().sub(&x.mul(&x)),
        };
        let report = json!({"tasks": [{"checks": [{"detail": {"witness": w.to_json()}}]}]});

        let mut bindings = BTreeMap::new();
        bindings.insert("x".to_string(), ratio(1, 2));
        let summary = revalidate_report(&report, &bindings).unwrap();
        assert_eq!(summary, RevalidationSummary { witnesses: 1, valid: 1 });

        // Tampered determinant must be caught.
        let mut tampered = w.clone();
        tampered.determinant = x.clone();
        let report = json!({"witness": tampered.to_json()});
        let summary = revalidate_report(&report, &BTreeMap::new()).unwrap();
        assert_eq!(summary, RevalidationSummary { witnesses: 1, valid: 0 });
    }

    #[test]
    fn malformed_jobs_map_to_parse_or_domain_errors() {
        assert!(matches!(run_job_str("not json"), Err(Error::Parse(_))));
        assert!(matches!(run_job_str(r#"{"tasks": []}"#), Err(Error::Domain(_))));
        assert!(matches!(
            run_job_str(r#"{"family": "no-such-family", "checks": []}"#),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            run_job_str(r#"{"family": "pascal", "checks": [{"kind": "made-up"}]}"#),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            run_job_str(r#"{"family": "pascal", "extra": 1, "checks": []}"#),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            run_job_str(r#"{"sequence": [1], "checks": [{"kind": "tp"}]}"#),
            Err(Error::Domain(_))
        ));
        // Sequence too short for the probes it asks for.
        assert!(matches!(
            run_job_str(r#"{"sequence": [1], "checks": [{"kind": "sm", "r": 1}]}"#),
            Err(Error::InsufficientTerms { .. })
        ));
    }

    #[test]
    fn compact_check_strings_expand_to_object_form() {
        let compact = run_job_str(r#"{"family": "pascal", "N": 6, "checks": ["tp r=3"]}"#)
            .expect("compact job runs");
        let object =
            run_job_str(r#"{"family": "pascal", "N": 6, "checks": [{"kind": "tp", "r": 3}]}"#)
                .expect("object job runs");
        assert_eq!(compact.to_json_string(), object.to_json_string());
        assert!(matches!(
            run_job_str(r#"{"family": "pascal", "checks": ["tp r"]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            run_job_str(r#"{"family": "pascal", "checks": [""]}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn bell_and_blocks_families_build_symbolically() {
        // Symbolic weights keep f'(0) non-invertible, so the production
        // check needs the linear weight bound to a rational.
        let src = r#"{
            "tasks": [
                {"family": "bell", "m": 3, "N": 6, "checks": [{"kind": "tp", "r": 1}]},
                {"family": "blocks3", "a": 1, "b": "sym", "c": "sym", "N": 6,
                 "checks": [{"kind": "production"}]},
                {"family": "gen_bessel", "a": 1, "b": "1", "c": "1", "d": 1, "lambda": "1/2",
                 "N": 6, "checks": [{"kind": "tp", "r": 2}, {"kind": "production"}]}
            ]
        }"#;
        let report = run_job_str(src).unwrap();
        assert!(report.pass, "{}", report.render_text());
        assert_eq!(report.tasks.len(), 3);

        let symbolic_linear = r#"{"family": "bell", "m": 2, "N": 5,
                                  "checks": [{"kind": "production"}]}"#;
        assert!(matches!(run_job_str(symbolic_linear), Err(Error::ImproperPair(_))));
    }
}
