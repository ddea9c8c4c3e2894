use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use relconvex::Psi;

#[derive(Debug, Parser)]
#[command(name = "relconvex", version, about = "Check relative convexity and related inequalities")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Input file with named sequences (JSON object or CSV with a header), or `-` for stdin.
    #[arg(long, global = true)]
    pub input: Option<String>,

    /// Absolute tolerance.
    #[arg(long, global = true, env = "RELCONVEX_TOL_ABS", default_value_t = 1e-9)]
    pub tol_abs: f64,

    /// Relative tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol_rel: f64,

    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Number of sample points for `extend`.
    #[arg(long, global = true, default_value_t = 256)]
    pub resolution: usize,

    /// Do not verify the preconditions of the inequality being checked.
    #[arg(long, global = true)]
    pub skip_verify: bool,

    /// Convex non-decreasing map: identity, exp, square or relu@c.
    #[arg(long, global = true, default_value = "identity", value_parser = parse_psi)]
    pub psi: Psi<f64>,

    /// Destination of the report (or of the CSV samples for `extend`); `-` is stdout.
    #[arg(long, global = true, default_value = "-")]
    pub output: String,
}

fn parse_psi(s: &str) -> Result<Psi<f64>, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the monotonicity pattern of `a`.
    Classify,
    /// Check convexity of `a`, or convexity relative to `t` with `--wrt`.
    Check {
        #[arg(long)]
        wrt: bool,
    },
    /// Build a witness from `a` and a slope schedule `s`.
    Witness {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t1: f64,
        #[arg(long, default_value_t = 1.0)]
        plateau_step: f64,
    },
    /// Build a witness for `a` spanning `[alpha, beta]`.
    Subdivide {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
    },
    /// Sample the polygonal extension through `(t, a)` as CSV.
    Extend,
    /// Lupas-type inequality for `a`, `b` sharing the witness `t` (weights `p`, default uniform).
    Lupas,
    /// Pecaric inequality for convex `a` and `b`.
    Pecaric,
    /// Weighted Hermite-Hadamard-Fejer sandwich for `a` relative to `t`.
    Hhf,
    /// Upper bound for weighted sums of a convex `a`.
    Niezgoda,
    /// Two-sided bounds for weighted sums of a convex `a`.
    Cor2,
    /// Majorization inequality for points `pvec` and `qvec`; integer positions when `t` is absent.
    Majorize,
    /// Run every characterization of `t` being a witness for `a`, plus decay diagnostics.
    Diagnose {
        /// Minimal witness step for the decay diagnostics.
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        /// Upper bound on `a` for the monotonicity diagnostic; defaults to `max a`.
        #[arg(long, allow_negative_numbers = true)]
        bound: Option<f64>,
    },
    /// Run the inequality engines on seeded random instances.
    Fuzz {
        /// Number of seeds, starting at `--seed`.
        #[arg(long, default_value_t = 100)]
        count: u64,
        /// Length of each generated sequence.
        #[arg(long, default_value_t = 12)]
        len: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Check { .. } => "check",
            Command::Witness { .. } => "witness",
            Command::Subdivide { .. } => "subdivide",
            Command::Extend => "extend",
            Command::Lupas => "lupas",
            Command::Pecaric => "pecaric",
            Command::Hhf => "hhf",
            Command::Niezgoda => "niezgoda",
            Command::Cor2 => "cor2",
            Command::Majorize => "majorize",
            Command::Diagnose { .. } => "diagnose",
            Command::Fuzz { .. } => "fuzz",
        }
    }
}

impl GlobalOpts {
    pub fn output_path(&self) -> Option<PathBuf> {
        (self.output != "-").then(|| PathBuf::from(&self.output))
    }
}
