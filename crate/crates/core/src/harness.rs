//! End-to-end experiments: generate, simplify, solve the LP, round, measure,
//! and compare with the analytic bounds. Output is CSV or JSON and is
//! byte-stable for a fixed input regardless of worker count.

use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{rho_first, rho_refined, REFINED_BETA_MIN};
use crate::degree::{build_degree_sequence, PlgParams};
use crate::error::{Error, Result};
use crate::exact::{exact_vc, DEFAULT_BUDGET};
use crate::generator::{generate, GenSeed};
use crate::graph::simplify;
use crate::lp::solve_half_integral;
use crate::rounding::{check_guarantees, compute_vstar, round, vstar_lower_bound_witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentOpts {
    /// Run the exact solver only when the simplified graph has at most this
    /// many vertices.
    pub exact_limit: usize,
    pub exact_budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for ExperimentOpts {
    fn default() -> Self {
        ExperimentOpts { exact_limit: 60, exact_budget: DEFAULT_BUDGET, threads: None }
    }
}

/// Measurements for one successful run. `x_*` values are in half-units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMetrics {
    pub n: usize,
    pub m_multi: usize,
    pub m_simple: usize,
    pub loops: usize,
    pub parallels: usize,
    pub x_v: u64,
    pub x_vstar: u64,
    pub y_v: u64,
    pub y_vstar: u64,
    /// `y(V) / x(V)`.
    pub ratio_lp: Option<f64>,
    /// `y(V*) / x(V*)`.
    pub ratio_vstar: Option<f64>,
    /// `2 − ½·x(V*)/x(V)`, the per-run analogue of the ρ bounds.
    pub rho_run: Option<f64>,
    pub exact_opt: Option<usize>,
    pub exact_timed_out: bool,
    /// `y(V) / OPT`.
    pub ratio_exact: Option<f64>,
    pub vstar_witness: usize,
    /// Every rounding guarantee checked on this instance.
    pub guarantees_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub seed: u64,
    pub alpha: f64,
    pub beta: f64,
    pub bound_rho_first: f64,
    pub bound_rho_refined: Option<f64>,
    /// `None` when the run failed; `error` then says why.
    pub metrics: Option<RunMetrics>,
    pub error: Option<String>,
}

fn measure(p: &PlgParams, seed: GenSeed, opts: &ExperimentOpts) -> Result<RunMetrics> {
    let seq = build_degree_sequence(p);
    let mg = generate(&seq, seed)?;
    let g = simplify(&mg);
    let x = solve_half_integral(&g);
    let y = round(&g, &x)?;
    let vstar = compute_vstar(&g);
    let x_v = x.cost_halves();
    let x_vstar = x.cost_halves_on(&vstar);
    let y_v = y.cost() as u64;
    let y_vstar = y.cost_on(&vstar) as u64;
    let div = |num: u64, den: u64| (den > 0).then(|| num as f64 / den as f64);

    let (exact_opt, exact_timed_out) = if g.n() <= opts.exact_limit {
        let r = exact_vc(&g, opts.exact_budget);
        ((!r.timed_out).then_some(r.opt_size), r.timed_out)
    } else {
        (None, false)
    };
    let loops = mg.loop_count();
    Ok(RunMetrics {
        n: g.n(),
        m_multi: mg.edge_count(),
        m_simple: g.edge_count(),
        loops,
        parallels: mg.edge_count() - g.edge_count() - loops,
        x_v,
        x_vstar,
        y_v,
        y_vstar,
        ratio_lp: div(2 * y_v, x_v),
        ratio_vstar: div(2 * y_vstar, x_vstar),
        rho_run: div(x_vstar, x_v).map(|f| 2.0 - 0.5 * f),
        exact_opt,
        exact_timed_out,
        ratio_exact: exact_opt.and_then(|o| div(y_v, o as u64)),
        vstar_witness: vstar_lower_bound_witness(&g),
        guarantees_ok: check_guarantees(&g, &x, &y)?.all(),
    })
}

/// One record per seed, in seed order. Seeds run concurrently on
/// `opts.threads` workers.
pub fn run_experiment(p: &PlgParams, seeds: &[GenSeed], opts: &ExperimentOpts) -> Result<Vec<ExperimentRecord>> {
    let bound_rho_first = rho_first(p.beta())?;
    let bound_rho_refined =
        if p.beta() > REFINED_BETA_MIN { Some(rho_refined(p.beta(), Some(p.scale()))?) } else { None };
    let one = |&seed: &GenSeed| {
        let (metrics, error) = match measure(p, seed, opts) {
            Ok(m) => (Some(m), None),
            Err(e) => (None, Some(e.to_string())),
        };
        ExperimentRecord {
            seed: seed.0,
            alpha: p.alpha(),
            beta: p.beta(),
            bound_rho_first,
            bound_rho_refined,
            metrics,
            error,
        }
    };
    match opts.threads {
        None => Ok(seeds.par_iter().map(one).collect()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
            Ok(pool.install(|| seeds.par_iter().map(one).collect()))
        }
    }
}

/// Formats `v` with 12 significant digits, dropping trailing zeros.
/// Magnitudes outside `[1e-5, 1e12)` use exponent notation.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{v:.11e}");
        let (mantissa, e) = s.split_once('e').expect("exponent format");
        let mantissa = if mantissa.contains('.') {
            mantissa.trim_end_matches('0').trim_end_matches('.')
        } else {
            mantissa
        };
        format!("{mantissa}e{e}")
    }
}

pub const CSV_COLUMNS: [&str; 24] = [
    "seed",
    "alpha",
    "beta",
    "n",
    "m_multi",
    "m_simple",
    "loops",
    "parallels",
    "x_v_halves",
    "x_vstar_halves",
    "y_v",
    "y_vstar",
    "ratio_lp",
    "ratio_vstar",
    "rho_run",
    "exact_opt",
    "exact_timed_out",
    "ratio_exact",
    "bound_rho_first",
    "bound_rho_refined",
    "vstar_witness",
    "guarantees_ok",
    "status",
    "error",
];

fn opt_f(v: Option<f64>) -> String {
    v.map(fmt_sig).unwrap_or_default()
}

fn csv_row(r: &ExperimentRecord) -> Vec<String> {
    let m = r.metrics.as_ref();
    let int = |f: fn(&RunMetrics) -> u64| m.map(|m| f(m).to_string()).unwrap_or_default();
    vec![
        r.seed.to_string(),
        fmt_sig(r.alpha),
        fmt_sig(r.beta),
        int(|m| m.n as u64),
        int(|m| m.m_multi as u64),
        int(|m| m.m_simple as u64),
        int(|m| m.loops as u64),
        int(|m| m.parallels as u64),
        int(|m| m.x_v),
        int(|m| m.x_vstar),
        int(|m| m.y_v),
        int(|m| m.y_vstar),
        opt_f(m.and_then(|m| m.ratio_lp)),
        opt_f(m.and_then(|m| m.ratio_vstar)),
        opt_f(m.and_then(|m| m.rho_run)),
        m.and_then(|m| m.exact_opt).map(|o| o.to_string()).unwrap_or_default(),
        m.map(|m| m.exact_timed_out.to_string()).unwrap_or_default(),
        opt_f(m.and_then(|m| m.ratio_exact)),
        fmt_sig(r.bound_rho_first),
        opt_f(r.bound_rho_refined),
        int(|m| m.vstar_witness as u64),
        m.map(|m| m.guarantees_ok.to_string()).unwrap_or_default(),
        if r.error.is_some() { "failed".into() } else { "ok".into() },
        r.error.clone().unwrap_or_default(),
    ]
}

/// CSV with a fixed header; an empty slice produces the header alone.
pub fn write_csv<W: Write>(records: &[ExperimentRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in records {
        w.write_record(csv_row(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(records: &[ExperimentRecord]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn write_json<W: Write>(records: &[ExperimentRecord], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn read_json(s: &str) -> Result<Vec<ExperimentRecord>> {
    Ok(serde_json::from_str(s)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub beta: f64,
    pub rho_first: f64,
    /// Empty at or below the refined threshold.
    pub rho_refined_asymptotic: Option<f64>,
}

/// Bound values at `β_k = beta_min + k·step` for every `β_k <= beta_max`.
pub fn sweep_beta(beta_min: f64, beta_max: f64, step: f64) -> Result<Vec<SweepRow>> {
    let finite = beta_min.is_finite() && beta_max.is_finite() && step.is_finite();
    if !finite || beta_min <= 2.0 || beta_max < beta_min || step <= 0.0 {
        return Err(Error::InvalidParameters(format!(
            "need 2 < beta_min <= beta_max and step > 0; got [{beta_min}, {beta_max}] step {step}"
        )));
    }
    let count = ((beta_max - beta_min) / step + 1e-9).floor() as u64 + 1;
    (0..count)
        .map(|k| {
            let beta = beta_min + k as f64 * step;
            Ok(SweepRow {
                beta,
                rho_first: rho_first(beta)?,
                rho_refined_asymptotic: if beta > REFINED_BETA_MIN { Some(rho_refined(beta, None)?) } else { None },
            })
        })
        .collect()
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["beta", "rho_first", "rho_refined_asymptotic"])?;
    for r in rows {
        w.write_record([fmt_sig(r.beta), fmt_sig(r.rho_first), opt_f(r.rho_refined_asymptotic)])?;
    }
    w.flush()?;
    Ok(())
}

/// One unsigned seed per line; blank lines and lines starting with `#` are
/// skipped.
pub fn read_seeds<R: BufRead>(input: R) -> Result<Vec<GenSeed>> {
    let mut seeds = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let s = t.parse::<u64>().map_err(|e| Error::Parse { line: i + 1, msg: format!("bad seed {t:?}: {e}") })?;
        seeds.push(GenSeed(s));
    }
    Ok(seeds)
}
