use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use plgvc::bounds::bound_report;
use plgvc::degree::{build_degree_sequence, expected_counts, PlgParams};
use plgvc::exact::{exact_vc, DEFAULT_BUDGET};
use plgvc::generator::{generate, GenSeed};
use plgvc::graph::{simplify, MultiGraph, SimpleGraph};
use plgvc::harness::{read_seeds, run_experiment, sweep_beta, write_csv, write_json, write_sweep_csv, ExperimentOpts};
use plgvc::lp::{nt_partition, solve_half_integral};
use plgvc::rounding::{compute_vstar, ratio_decomposition, round};
use plgvc::{Error, Result};

#[derive(Parser)]
#[command(name = "plgvc", version, about = "Vertex cover LP rounding on random power-law graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the degree sequence for (alpha, beta).
    Degseq {
        #[command(flatten)]
        model: Model,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample one multigraph and write it in edge-list format.
    Gen {
        #[command(flatten)]
        model: Model,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the half-integral LP on a graph file.
    Lp {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Round the LP optimum and report costs and ratios.
    Round {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact minimum vertex cover by branch and bound.
    Exact {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Analytic bounds for beta, and size-dependent ones when alpha is given.
    Bounds {
        #[arg(long)]
        beta: f64,
        #[arg(long, conflicts_with = "e_alpha")]
        alpha: Option<f64>,
        #[arg(long)]
        e_alpha: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate rho_first and the asymptotic rho_refined over a beta grid.
    Sweep {
        #[arg(long, default_value_t = 2.05)]
        beta_min: f64,
        #[arg(long, default_value_t = 4.0)]
        beta_max: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full pipeline over a list of seeds.
    Experiment {
        #[command(flatten)]
        model: Model,
        #[arg(long, conflicts_with = "seeds")]
        seed: Option<u64>,
        /// File with one seed per line.
        #[arg(long)]
        seeds: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = 60)]
        exact_limit: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Args)]
struct Model {
    #[arg(long, required_unless_present = "e_alpha", conflicts_with = "e_alpha")]
    alpha: Option<f64>,
    /// e^alpha, given directly.
    #[arg(long)]
    e_alpha: Option<f64>,
    #[arg(long)]
    beta: f64,
}

impl Model {
    fn params(&self) -> Result<PlgParams> {
        params(self.alpha, self.e_alpha, self.beta)
    }
}

fn params(alpha: Option<f64>, e_alpha: Option<f64>, beta: f64) -> Result<PlgParams> {
    match (alpha, e_alpha) {
        (Some(a), _) => PlgParams::from_alpha(a, beta),
        (None, Some(s)) => PlgParams::from_scale(s, beta),
        (None, None) => Err(Error::InvalidParameters("one of --alpha or --e-alpha is required".into())),
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load_graph(path: &Path) -> Result<(MultiGraph, SimpleGraph)> {
    let mg = MultiGraph::read_text(BufReader::new(File::open(path)?))?;
    let g = simplify(&mg);
    Ok((mg, g))
}

fn print_json(v: &serde_json::Value) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), |r| r.to_string())
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Degseq { model, json, out } => {
            let p = model.params()?;
            let seq = build_degree_sequence(&p);
            let (n_est, m_est) = expected_counts(&p);
            let mut w = output(out.as_deref())?;
            if json {
                let v = json!({
                    "alpha": p.alpha(),
                    "beta": p.beta(),
                    "max_degree": p.max_degree(),
                    "counts": seq.counts(),
                    "n": seq.total_vertices(),
                    "total_degree": seq.total_degree(),
                    "expected_n": n_est,
                    "expected_m": m_est,
                });
                serde_json::to_writer_pretty(&mut w, &v)?;
                writeln!(w)?;
            } else {
                writeln!(w, "# alpha={} beta={} max_degree={}", p.alpha(), p.beta(), p.max_degree())?;
                writeln!(w, "# n={} total_degree={} expected_n={n_est} expected_m={m_est}", seq.total_vertices(), seq.total_degree())?;
                writeln!(w, "degree,count")?;
                for (i, c) in seq.counts().iter().enumerate() {
                    writeln!(w, "{},{c}", i + 1)?;
                }
            }
            w.flush()?;
        }
        Cmd::Gen { model, seed, out } => {
            let p = model.params()?;
            let g = generate(&build_degree_sequence(&p), GenSeed(seed))?;
            let mut w = output(out.as_deref())?;
            g.write_text(&mut w)?;
            w.flush()?;
        }
        Cmd::Lp { input, json } => {
            let (_, g) = load_graph(&input)?;
            let x = solve_half_integral(&g);
            let part = nt_partition(&g, &x)?;
            if json {
                let xs: Vec<f64> = (0..x.len()).map(|v| x.value(v)).collect();
                print_json(&json!({
                    "n": g.n(),
                    "cost": x.cost(),
                    "cost_halves": x.cost_halves(),
                    "x": xs,
                    "p": part.p.len(),
                    "q": part.q.len(),
                    "r": part.r.len(),
                }))?;
            } else {
                println!("n {}", g.n());
                println!("lp_cost {}", x.cost());
                println!("partition P={} Q={} R={}", part.p.len(), part.q.len(), part.r.len());
            }
        }
        Cmd::Round { input, json } => {
            let (_, g) = load_graph(&input)?;
            let x = solve_half_integral(&g);
            let y = round(&g, &x)?;
            let d = ratio_decomposition(&g, &x, &y)?;
            let vstar_size = compute_vstar(&g).iter().filter(|&&b| b).count();
            if json {
                print_json(&json!({
                    "n": g.n(),
                    "cost": y.cost(),
                    "lp_cost_halves": x.cost_halves(),
                    "vstar_size": vstar_size,
                    "decomposition": d,
                }))?;
            } else {
                println!("cost {}", y.cost());
                println!("lp_cost_halves {}", x.cost_halves());
                println!("y_vstar {}", d.y_vstar);
                println!("x_vstar_halves {}", d.x_vstar_halves);
                println!("r_vstar {}", opt(d.r_vstar));
                println!("r_rest {}", opt(d.r_rest));
                println!("r_composite {}", opt(d.r_composite));
            }
        }
        Cmd::Exact { input, budget, json } => {
            let (_, g) = load_graph(&input)?;
            let r = exact_vc(&g, budget);
            if json {
                print_json(&serde_json::to_value(&r)?)?;
            } else {
                println!("opt_size {}", r.opt_size);
                println!("nodes_explored {}", r.nodes_explored);
                println!("timed_out {}", r.timed_out);
            }
        }
        Cmd::Bounds { beta, alpha, e_alpha, json } => {
            let p = if alpha.is_some() || e_alpha.is_some() { Some(params(alpha, e_alpha, beta)?) } else { None };
            let r = bound_report(beta, p.as_ref())?;
            if json {
                print_json(&serde_json::to_value(&r)?)?;
            } else {
                println!("beta {}", r.beta);
                println!("zeta_beta {}", r.zeta_beta);
                println!("zeta_beta_minus1 {}", r.zeta_beta_minus1);
                println!("rho_first {}", r.rho_first);
                println!("rho_refined_asymptotic {}", opt(r.rho_refined_asymptotic));
                println!("rho_refined_finite {}", opt(r.rho_refined_finite));
                println!("delta0 {}", r.delta0);
                println!("ex_vstar_lower {}", opt(r.ex_vstar_lower));
                println!("xv_upper {}", opt(r.xv_upper));
            }
        }
        Cmd::Sweep { beta_min, beta_max, step, out } => {
            let rows = sweep_beta(beta_min, beta_max, step)?;
            let w = output(out.as_deref())?;
            write_sweep_csv(&rows, w)?;
        }
        Cmd::Experiment { model, seed, seeds, out, json, threads, exact_limit, budget } => {
            let p = model.params()?;
            let seeds = match (seed, seeds) {
                (_, Some(path)) => read_seeds(BufReader::new(File::open(path)?))?,
                (Some(s), None) => vec![GenSeed(s)],
                (None, None) => vec![GenSeed(0)],
            };
            if threads == Some(0) {
                return Err(Error::InvalidParameters("--threads must be at least 1".into()));
            }
            let opts = ExperimentOpts { exact_limit, exact_budget: budget, threads };
            let recs = run_experiment(&p, &seeds, &opts)?;
            let mut w = output(out.as_deref())?;
            if json {
                write_json(&recs, &mut w)?;
            } else {
                write_csv(&recs, &mut w)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 3,
        Error::Csv(c) if c.is_io_error() => 3,
        Error::Json(j) if j.is_io() => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("plgvc: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
