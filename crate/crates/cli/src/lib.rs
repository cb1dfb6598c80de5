//! Batch front end: one command per process, one JSON document on stdout.

pub mod output;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ddperm::generate;
use ddperm::hypergraph::HypergraphFile;
use ddperm::reduction::{l1_norm, linear_form};
use ddperm::taylor::default_scan_radius;
use ddperm::types::ONE;
use ddperm::{
    approx_log_permanent, check_strong_dominance, collapse, normalize_strongly_dominant, permanent_ryser,
    permanent_tensor, ApproxConfig, ComplexMatrix, ComplexTensor, LinearFormInstance, ScanGrid, SquareArray,
    WorkCaps,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "ddperm", version, about = "Log-permanents of diagonally dominant matrices and tensors")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Cap on subset-enumeration work of the Taylor path.
    #[arg(long, global = true, default_value_t = 1e9)]
    pub work_cap: f64,
    /// Seed for generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print an aligned table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact permanent of a matrix (Ryser) or tensor (definitional).
    Exact {
        input: PathBuf,
        /// Evaluate per(I + A) instead of per(A).
        #[arg(long)]
        shifted: bool,
    },
    /// Taylor approximation of ln per(I + A).
    Approx {
        input: PathBuf,
        /// Dominance bound (default: measured effective lambda).
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long, default_value_t = 0.01)]
        epsilon: f64,
        /// Force the Taylor order.
        #[arg(long)]
        order: Option<usize>,
        /// Treat the input as a general strongly dominant B; requires --lambda.
        #[arg(long)]
        strongly_dominant: bool,
    },
    /// Row/slice l1 masses and admissibility.
    Dominance {
        input: PathBuf,
        /// Report strong diagonal dominance of a general matrix B.
        #[arg(long)]
        strong: bool,
    },
    /// Weighted count of perfect matchings by distance to a base matching.
    MatchingStats {
        input: PathBuf,
        #[arg(long)]
        lambda: f64,
        #[arg(long, default_value_t = 0.01)]
        epsilon: f64,
    },
    /// |per(I + zA)| on a polar grid over |z| <= radius.
    ZeroScan {
        input: PathBuf,
        /// Scan radius (default: 0.99 / effective lambda).
        #[arg(long)]
        radius: Option<f64>,
        /// Radial x angular resolution.
        #[arg(long, default_value = "64x64", value_parser = parse_grid)]
        grid: ScanGrid,
    },
    /// Collapse a linear form onto one coordinate; random when no input is given.
    CollapseDemo {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        size: usize,
    },
    /// Generate instances.
    Gen {
        kind: GenKind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
        /// Block family: use blocks [[0, l], [-l, 0]] (the small extreme).
        #[arg(long)]
        minus: bool,
        /// Random matrices and tensors: zero the diagonal.
        #[arg(long)]
        zero_diagonal: bool,
        /// Hypergraphs: extra random edges beyond the planted matching.
        #[arg(long, default_value_t = 6)]
        extra: usize,
        /// Hypergraphs: maximum part-1 degree.
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Block,
    Matrix,
    Hermitian,
    Tensor,
    StronglyDominant,
    Hypergraph,
    LinearForm,
}

fn parse_grid(s: &str) -> std::result::Result<ScanGrid, String> {
    let (r, a) = s.split_once(['x', 'X']).ok_or("expected RADIALxANGULAR, e.g. 64x64")?;
    let radial = r.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let angular = a.trim().parse::<usize>().map_err(|e| e.to_string())?;
    Ok(ScanGrid { radial, angular })
}

/// Failure with its process exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INADMISSIBLE: i32 = 2;
pub const EXIT_SIZE_CAP: i32 = 3;

impl From<ddperm::Error> for CliError {
    fn from(e: ddperm::Error) -> Self {
        let code = if e.is_inadmissible() {
            EXIT_INADMISSIBLE
        } else if e.is_size_cap() {
            EXIT_SIZE_CAP
        } else {
            EXIT_PARSE
        };
        CliError { code, message: e.to_string() }
    }
}

fn parse_error(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_PARSE, message: message.into() }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// A matrix or tensor input file.
enum ArrayInput {
    Matrix(ComplexMatrix),
    Tensor(ComplexTensor),
}

fn read_value(path: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_error(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| parse_error(format!("{}: {e}", path.display())))
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value, path: &Path) -> CliResult<T> {
    serde_json::from_value(v).map_err(|e| parse_error(format!("{}: {e}", path.display())))
}

fn read_array(path: &Path) -> CliResult<ArrayInput> {
    let v = read_value(path)?;
    if v.get("d").is_some() {
        Ok(ArrayInput::Tensor(from_value(v, path)?))
    } else {
        Ok(ArrayInput::Matrix(from_value(v, path)?))
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

fn caps(cli: &Cli) -> WorkCaps {
    WorkCaps { taylor_work: cli.work_cap, ..WorkCaps::default() }
}

/// Execute the command and return the rendered standard-output document.
pub fn run(cli: &Cli) -> CliResult<String> {
    let value = execute(cli)?;
    Ok(if cli.pretty { output::to_table(&value) } else { output::to_json(&value) + "\n" })
}

fn approx_any<A: SquareArray + Serialize>(a: &A, cfg: &ApproxConfig) -> CliResult<Value> {
    Ok(to_value(&approx_log_permanent(a, cfg)?))
}

fn execute(cli: &Cli) -> CliResult<Value> {
    let caps = caps(cli);
    match &cli.command {
        Command::Exact { input, shifted } => {
            let per = match read_array(input)? {
                ArrayInput::Matrix(m) if *shifted => permanent_ryser(&m.shifted(ONE))?,
                ArrayInput::Matrix(m) => permanent_ryser(&m)?,
                ArrayInput::Tensor(t) if *shifted => permanent_tensor(&t.shifted(ONE))?,
                ArrayInput::Tensor(t) => permanent_tensor(&t)?,
            };
            Ok(json!({ "permanent": [per.re, per.im] }))
        }
        Command::Approx { input, lambda, epsilon, order, strongly_dominant } => {
            let mut cfg = ApproxConfig::new(if *strongly_dominant { None } else { *lambda }, *epsilon)?.with_caps(caps);
            cfg.order_override = *order;
            match read_array(input)? {
                ArrayInput::Matrix(b) if *strongly_dominant => {
                    let l = lambda.ok_or_else(|| parse_error("--strongly-dominant requires --lambda"))?;
                    let p = normalize_strongly_dominant(&b, l)?;
                    let r = approx_log_permanent(&p.a, &cfg)?;
                    let total = p.log_prefactor + r.value;
                    let mut v = to_value(&r);
                    v["log_prefactor"] = json!([p.log_prefactor.re, p.log_prefactor.im]);
                    v["log_permanent"] = json!([total.re, total.im]);
                    Ok(v)
                }
                ArrayInput::Tensor(_) if *strongly_dominant => {
                    Err(parse_error("--strongly-dominant applies to matrices only"))
                }
                ArrayInput::Matrix(a) => approx_any(&a, &cfg),
                ArrayInput::Tensor(t) => approx_any(&t, &cfg),
            }
        }
        Command::Dominance { input, strong } => {
            let report = match read_array(input)? {
                ArrayInput::Matrix(b) if *strong => check_strong_dominance(&b),
                ArrayInput::Tensor(_) if *strong => return Err(parse_error("--strong applies to matrices only")),
                ArrayInput::Matrix(a) => a.dominance(),
                ArrayInput::Tensor(t) => t.dominance(),
            };
            Ok(to_value(&report))
        }
        Command::MatchingStats { input, lambda, epsilon } => {
            let file: HypergraphFile = from_value(read_value(input)?, input)?;
            let (mut h, m0) = file.into_parts()?;
            if let Some(m0) = m0 {
                h = ddperm::normalize_base_matching(&h, &m0)?;
            }
            Ok(to_value(&ddperm::hypergraph::matching_stats_capped(&h, *lambda, *epsilon, &caps)?))
        }
        Command::ZeroScan { input, radius, grid } => {
            let report = match read_array(input)? {
                ArrayInput::Matrix(a) => {
                    let r = radius.unwrap_or_else(|| default_scan_radius(&a.dominance()));
                    ddperm::zero_scan(&a, r, *grid, &caps)?
                }
                ArrayInput::Tensor(t) => {
                    let r = radius.unwrap_or_else(|| default_scan_radius(&t.dominance()));
                    ddperm::zero_scan(&t, r, *grid, &caps)?
                }
            };
            Ok(to_value(&report))
        }
        Command::CollapseDemo { input, size } => {
            let inst = match input {
                Some(path) => {
                    let raw: LinearFormInstance = from_value(read_value(path)?, path)?;
                    LinearFormInstance::new(raw.alphas, raw.zs)?
                }
                None => generate::random_linear_form(&mut ChaCha8Rng::seed_from_u64(cli.seed), *size),
            };
            let out = collapse(&inst);
            let (before, after) = (inst.value(), linear_form(&inst.alphas, &out));
            Ok(json!({
                "alphas": to_value(&inst.alphas),
                "zs": to_value(&inst.zs),
                "z_star": to_value(&out),
                "form_before": [before.re, before.im],
                "form_after": [after.re, after.im],
                "l1_before": l1_norm(&inst.zs),
                "l1_after": l1_norm(&out),
                "nonzero": out.iter().filter(|z| z.norm() != 0.0).count(),
            }))
        }
        Command::Gen { kind, n, d, lambda, minus, zero_diagonal, extra, max_degree } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let (n, d, l) = (*n, *d, *lambda);
            Ok(match kind {
                GenKind::Block => {
                    let (plus, small) = generate::extremal_pair(n, l);
                    to_value(if *minus { &small } else { &plus })
                }
                GenKind::Matrix => to_value(&generate::random_admissible_matrix(&mut rng, n, l, *zero_diagonal)),
                GenKind::Hermitian => to_value(&generate::random_hermitian_admissible(&mut rng, n, l)),
                GenKind::Tensor => to_value(&generate::random_admissible_tensor(&mut rng, d, n, l, *zero_diagonal)),
                GenKind::StronglyDominant => to_value(&generate::random_strongly_dominant(&mut rng, n, l)),
                GenKind::Hypergraph => {
                    let h = generate::random_hypergraph(&mut rng, d, n, *extra, *max_degree);
                    to_value(&HypergraphFile { d: h.d(), n: h.n(), edges: h.edges().to_vec(), m0: None })
                }
                GenKind::LinearForm => to_value(&generate::random_linear_form(&mut rng, n)),
            })
        }
    }
}
