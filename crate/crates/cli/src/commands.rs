use std::fmt::Write as _;
use std::path::Path;

use blockalg::criterion::{detect_recurrence, quasifinite_verdict, sigma_series, WitnessOptions};
use blockalg::files::{parse_order, parse_weight};
use blockalg::oracle::{run_all, SampleConfig};
use blockalg::order::{
    b_alpha_sample, classify, fmt_element, irreducibility_verdict, non_archimedean_witness, OrderKind,
};
use blockalg::verma::DEFAULT_MAX_ROWS;
use blockalg::{AnalysisParams, Error, Weight};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error as ThisError;

use crate::expr::{eval_words, parse_input, Input};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CERTIFICATE: i32 = 3;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Certificate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Certificate(_) => EXIT_CERTIFICATE,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::WindowInsufficient { .. } | Error::WindowTooShort(_) => CliError::Certificate(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}

/// Rendered result of a command: both forms are always built from the same data.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub exit_code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, exit_code: EXIT_OK }
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

pub fn read_weight(path: &Path) -> Result<Weight, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_weight(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// `-2,-1,0` or `-2..2`.
pub fn parse_j_set(s: &str) -> Result<Vec<i64>, CliError> {
    let bad = || CliError::Input(format!("invalid j set {s:?}: expected a comma list or lo..hi"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if hi < lo {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    let v: Vec<i64> = s.split(',').map(|p| p.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
    if v.is_empty() {
        return Err(bad());
    }
    Ok(v)
}

pub struct AnalyzeArgs {
    pub max_degree: usize,
    pub j_set: Vec<i64>,
    pub terms: usize,
    pub max_rows: Option<usize>,
}

impl Default for AnalyzeArgs {
    fn default() -> Self {
        let p = AnalysisParams::default();
        Self { max_degree: p.max_degree, j_set: p.j_set, terms: p.terms, max_rows: None }
    }
}

pub fn analyze(weight: &Weight, args: &AnalyzeArgs) -> Result<Output, CliError> {
    let params = AnalysisParams {
        max_degree: args.max_degree,
        j_set: args.j_set.clone(),
        terms: args.terms,
        witness: WitnessOptions { k_floor: None, max_rows: args.max_rows.unwrap_or(DEFAULT_MAX_ROWS) },
    };
    let report = quasifinite_verdict(weight, &params)?;
    Ok(Output::ok(report.to_string(), to_json(&report)))
}

pub fn act(weight: &Weight, src: &str) -> Result<Output, CliError> {
    let input = parse_input(src).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(match input {
        Input::Element(e) => {
            let x = e.eval();
            let terms: Vec<Value> = x
                .terms()
                .map(|(s, c)| json!({"symbol": s.to_string(), "coeff": c.to_string()}))
                .collect();
            Output::ok(
                format!("{x}\n"),
                json!({"input": e.to_string(), "kind": "element", "result": x.to_string(), "terms": terms}),
            )
        }
        Input::Vector(words) => {
            let v = eval_words(&words, weight);
            let rendered: Vec<String> = words.iter().map(ToString::to_string).collect();
            let terms: Vec<Value> = v
                .terms()
                .map(|(m, c)| json!({"monomial": m.factors(), "coeff": c.to_string()}))
                .collect();
            Output::ok(
                format!("{v}\n"),
                json!({"input": rendered.join(" + "), "kind": "vector", "result": v.to_string(), "terms": terms}),
            )
        }
    })
}

pub fn series(weight: &Weight, j_set: &[i64], terms: usize) -> Result<Output, CliError> {
    let max_order = terms / 2;
    let mut text = String::new();
    let mut rows = Vec::new();
    for &j in j_set {
        let w = sigma_series(weight, j, terms);
        let coeffs: Vec<String> = w.coeffs.iter().map(ToString::to_string).collect();
        let rec = detect_recurrence(&w, max_order)?
            .map(|r| r.char_poly.iter().map(ToString::to_string).collect::<Vec<_>>());
        let list = format!("[{}]", coeffs.join(", "));
        let rec_text = rec.as_ref().map_or("none".to_string(), |r| format!("[{}]", r.join(", ")));
        if j_set.len() == 1 {
            let _ = writeln!(text, "{list}");
            let _ = writeln!(text, "minimal recurrence (ascending, order <= {max_order}): {rec_text}");
        } else {
            let _ = writeln!(text, "j={j}: {list}; minimal recurrence {rec_text}");
        }
        rows.push(json!({"j": j, "coeffs": coeffs, "minimal_recurrence": rec}));
    }
    let _ = writeln!(text, "basis z^i/i!, coefficients 0..={terms}; c z^j/j! is taken as 0 for j < 0");
    let json = json!({
        "terms": terms,
        "max_order": max_order,
        "series": rows,
        "conventions": {"series_basis": "coefficient i multiplies z^i/i!", "negative_j": "c z^j/j! is taken as 0 for j < 0"},
    });
    Ok(Output::ok(text, json))
}

pub fn order(path: &Path) -> Result<Output, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let (o, g) = parse_order(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let c = classify(&o, g)?;
    let nonzero = irreducibility_verdict(&o, g, false)?;
    let zero = irreducibility_verdict(&o, g, true)?;
    let arch = if c.archimedean { "archimedean" } else { "non-archimedean" };
    let mut out = String::new();
    let mut json = json!({
        "rank": g.rank,
        "kind": c.kind.to_string(),
        "archimedean": c.archimedean,
        "minimal_positive": c.minimal_positive,
        "verdict_nonzero_weight": nonzero.to_string(),
        "verdict_zero_weight": zero.to_string(),
    });
    match c.kind {
        OrderKind::Dense => {
            let _ = writeln!(out, "dense, {arch}; the dense-order criterion applies");
            let alpha = (0..g.rank)
                .map(|k| {
                    let mut e = vec![0; g.rank];
                    e[k] = 1;
                    e
                })
                .find(|e| o.is_positive(e).unwrap_or(false))
                .unwrap_or_else(|| {
                    let mut e = vec![0; g.rank];
                    e[0] = -1;
                    e
                });
            if g.rank <= 2 {
                let counts = [5, 10, 20]
                    .iter()
                    .map(|&b| b_alpha_sample(&o, &alpha, b).map(|s| s.len()))
                    .collect::<Result<Vec<_>, _>>()?;
                let _ = writeln!(
                    out,
                    "elements strictly between 0 and {} with coefficients bounded by 5, 10, 20: {:?}",
                    fmt_element(&alpha),
                    counts
                );
                json["b_alpha"] = json!({"alpha": alpha, "bounds": [5, 10, 20], "counts": counts});
            }
        }
        OrderKind::Discrete => {
            let min = c.minimal_positive.clone().expect("discrete orders have a minimal positive element");
            let _ = writeln!(out, "discrete, {arch}; minimal positive element {}", fmt_element(&min));
            if let Some((x, y)) = non_archimedean_witness(&o, 100)? {
                let _ = writeln!(
                    out,
                    "non-archimedean witness: n*{} < {} for every n in 1..=100",
                    fmt_element(&x),
                    fmt_element(&y)
                );
                json["non_archimedean_witness"] = json!({"x": x, "y": y, "n_max": 100});
            }
        }
    }
    let _ = writeln!(out, "nonzero weight: {nonzero}");
    let _ = writeln!(out, "zero weight: {zero}");
    Ok(Output::ok(out, json))
}

pub fn selftest(seed: u64, trials: usize) -> Result<Output, CliError> {
    let cfg = SampleConfig { seed, trials, ..SampleConfig::default() };
    let reports = run_all(&cfg)?;
    let passed = reports.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{r}");
    }
    let overall = if passed { "PASS" } else { "FAIL" };
    let _ = writeln!(text, "overall: {overall} (seed {seed})");
    let json = json!({"seed": seed, "trials": trials, "overall": overall, "checks": reports});
    Ok(Output { text, json, exit_code: if passed { EXIT_OK } else { EXIT_CERTIFICATE } })
}
