use clap::{Args, Parser, Subcommand};
use cr4_core::bounds::BoundsCase;
use num::BigInt;

#[derive(Debug, Parser)]
#[command(
    name = "cr4",
    version,
    about = "Intersection forms, adjunction identities and complex jump points"
)]
pub struct Cli {
    /// Print the full {"status", "payload", "warnings"} report instead of the bare payload.
    #[arg(long, global = true)]
    pub report: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integer bilinear forms.
    #[command(subcommand)]
    Form(FormCommand),
    /// Characteristic vectors.
    #[command(subcommand)]
    Char(CharCommand),
    /// Adjunction identity and polarization.
    #[command(subcommand)]
    Adjunction(AdjunctionCommand),
    /// Jump point bounds for characteristic spheres.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Locate complex jump points on a surface in C^2.
    Detect(DetectArgs),
}

#[derive(Debug, Args)]
pub struct FormSource {
    /// Gram matrix file (JSON or plain text), `-` for stdin.
    #[arg(long)]
    pub gram: Option<String>,
    /// Named form: e8, neg_e8, hyperbolic, diag:p,q.
    #[arg(long)]
    pub standard: Option<String>,
}

#[derive(Debug, Args)]
pub struct FormOnly {
    #[command(flatten)]
    pub form: FormSource,
}

#[derive(Debug, Subcommand)]
pub enum FormCommand {
    Inertia(FormOnly),
    Det(FormOnly),
    Parity(FormOnly),
    Classify(FormOnly),
    /// Direct sum of the given forms in order.
    Sum(SumArgs),
    /// Print the Gram matrix of a named form.
    Standard(StandardArgs),
    /// x^T Q y (y defaults to x).
    Pair(PairArgs),
}

#[derive(Debug, Args)]
pub struct SumArgs {
    #[arg(long, num_args = 0..)]
    pub gram: Vec<String>,
}

#[derive(Debug, Args)]
pub struct StandardArgs {
    #[arg(long)]
    pub name: String,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub form: FormSource,
    /// JSON integer array, or @file.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum CharCommand {
    Find(FormOnly),
    Check(CheckArgs),
    Enumerate(EnumerateArgs),
    #[command(name = "validate-c1")]
    ValidateC1(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub form: FormSource,
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub form: FormSource,
    /// Largest absolute coordinate.
    #[arg(long = "box")]
    pub r#box: u32,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub form: FormSource,
    #[arg(long, allow_hyphen_values = true)]
    pub c1: String,
}

#[derive(Debug, Subcommand)]
pub enum AdjunctionCommand {
    #[command(name = "jump-count")]
    JumpCount(JumpCountArgs),
    Genus(GenusArgs),
    #[command(name = "self-int")]
    SelfInt(SelfIntArgs),
    Pair(GeometryPairArgs),
    Reconstruct(ReconstructArgs),
    #[command(name = "lai-check")]
    LaiCheck(LaiArgs),
    #[command(name = "chern-eval")]
    ChernEval(ChernArgs),
    /// Surface data for a form's basis and pairwise sums, accepted by `reconstruct`.
    Synthesize(SynthesizeArgs),
}

#[derive(Debug, Args)]
pub struct JumpCountArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub genus: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub ff: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub c1f: BigInt,
}

#[derive(Debug, Args)]
pub struct GenusArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub ff: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub c1f: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub fc: BigInt,
}

#[derive(Debug, Args)]
pub struct SelfIntArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub genus: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub c1f: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub fc: BigInt,
}

#[derive(Debug, Args)]
pub struct GeometryPairArgs {
    /// {"genus": g, "c1F": n, "FC": n}, inline or @file.
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub g: String,
    #[arg(long)]
    pub fg: String,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    /// {"basis": [...], "pairs": {"i,j": {...}}} file, `-` for stdin.
    #[arg(long)]
    pub input: String,
}

#[derive(Debug, Args)]
pub struct LaiArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub genus: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub ff: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub c1f: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub count: BigInt,
}

#[derive(Debug, Args)]
pub struct ChernArgs {
    #[command(flatten)]
    pub form: FormSource,
    #[arg(long, allow_hyphen_values = true)]
    pub c1: String,
    #[arg(long = "class", allow_hyphen_values = true)]
    pub class: String,
}

#[derive(Debug, Args)]
pub struct SynthesizeArgs {
    #[command(flatten)]
    pub form: FormSource,
    /// Defaults to the {0,1} characteristic vector of the form.
    #[arg(long, allow_hyphen_values = true)]
    pub c1: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    Jump(JumpBoundsArgs),
    Selfint(SelfintBoundsArgs),
    Check(CheckBoundsArgs),
}

#[derive(Debug, Args)]
pub struct JumpBoundsArgs {
    #[arg(long)]
    pub bplus: u64,
    #[arg(long)]
    pub bminus: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub c1f: BigInt,
    #[arg(long)]
    pub case: BoundsCase,
    /// Also report the integers inside the interval.
    #[arg(long)]
    pub feasible: bool,
    /// Restrict the feasible integers to n >= 0.
    #[arg(long)]
    pub nonnegative: bool,
}

#[derive(Debug, Args)]
pub struct SelfintBoundsArgs {
    #[arg(long)]
    pub bplus: u64,
    #[arg(long)]
    pub bminus: u64,
    #[arg(long)]
    pub case: BoundsCase,
}

#[derive(Debug, Args)]
pub struct CheckBoundsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub n: BigInt,
    #[arg(long)]
    pub bplus: u64,
    #[arg(long)]
    pub bminus: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub c1f: BigInt,
    #[arg(long)]
    pub case: BoundsCase,
    /// Treat n as a cardinality (reject n < 0).
    #[arg(long)]
    pub nonnegative: bool,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    /// Preset name (clifford_torus, round_sphere, holomorphic_graph[:d], graph_of_zbar) or a surface JSON file.
    #[arg(long)]
    pub surface: String,
    #[arg(long, default_value_t = 128)]
    pub grid: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Write the sampled defect field as CSV rows `chart,u,v,re,im`.
    #[arg(long)]
    pub dump_field: Option<String>,
    /// Worker threads for grid evaluation; output does not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
}
