//! `ellipstab`: exact checks on root systems and bundles over singular cubics.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(name = "ellipstab", version, about)]
pub struct Cli {
    /// Seed for every randomized evaluation.
    #[arg(long, global = true, env = "ELLIPSTAB_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveArg {
    Nodal,
    Cuspidal,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root data of a simple group such as E8 or D5.
    Roots(RootsArgs),
    /// Verify the table of bundles u^k over the singular cubics.
    Table1(Table1Args),
    /// Cohomology of a bundle expression.
    Bundle(BundleArgs),
    /// Semistability of a pushforward from a cycle of rational curves.
    Etale(EtaleArgs),
    /// Sections of the type-A adjoint quotient.
    Adjoint(AdjointArgs),
    /// Weighted projective data and twisting numerology.
    Moduli(ModuliArgs),
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    pub group: String,
    #[arg(long)]
    pub special: bool,
    #[arg(long)]
    pub comarks: bool,
    #[arg(long)]
    pub casimir: bool,
    #[arg(long)]
    pub minuscule: bool,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long)]
    pub group: Option<String>,
    /// Special root (1-based); required in type A.
    #[arg(long)]
    pub alpha: Option<usize>,
    #[arg(long, value_enum, default_value_t = CurveArg::Both)]
    pub curve: CurveArg,
}

#[derive(Debug, Args)]
pub struct BundleArgs {
    /// For example "W2*dual(W3)*dual(W5)".
    pub expr: String,
    #[arg(long, value_enum, default_value_t = CurveArg::Both)]
    pub curve: CurveArg,
    #[arg(long)]
    pub h0: bool,
    #[arg(long)]
    pub h1: bool,
    #[arg(long)]
    pub deg: bool,
    /// Generic-twist instability test; degree-zero bundles only.
    #[arg(long)]
    pub unstable: bool,
}

#[derive(Debug, Args)]
pub struct EtaleArgs {
    /// Comma-separated multidegree, for example 1,-1,0,0.
    #[arg(allow_hyphen_values = true)]
    pub degrees: String,
    #[arg(long)]
    pub wedge: Option<usize>,
    /// Comma-separated nonzero gluing scalars; random when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub gluings: Option<String>,
}

#[derive(Debug, Args)]
pub struct AdjointArgs {
    #[command(subcommand)]
    pub action: AdjointAction,
}

#[derive(Debug, Subcommand)]
pub enum AdjointAction {
    /// Regular element of sl_n with invariants c_2, ..., c_n.
    Kostant {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        invariants: String,
    },
    /// Regular element of SL_n with invariants c_1, ..., c_{n-1}.
    Steinberg {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        invariants: String,
    },
    /// Invariants of a matrix given as rows separated by ';'.
    Invariants {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, value_enum, default_value_t = DatumKind::Cuspidal)]
        kind: DatumKind,
    },
    /// Random round trips and scaling checks.
    Check {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DatumKind {
    Cuspidal,
    Nodal,
}

#[derive(Debug, Args)]
pub struct ModuliArgs {
    pub group: String,
    /// The E8 (weight, degree) pairs and their normalization.
    #[arg(long)]
    pub affine: bool,
    #[arg(long)]
    pub pairing: bool,
    #[arg(long)]
    pub weights: bool,
    /// Block sizes n_1,...,n_t; equal values unless --relation is given.
    #[arg(long)]
    pub conformal: Option<String>,
    /// Coefficients of a relation Σ c_i N_i = 0; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub relation: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match commands::run(&cli, format!("ellipstab {echo}")) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print!("{}", report.to_text());
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
