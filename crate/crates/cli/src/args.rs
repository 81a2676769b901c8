use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact verification of Yang-Baxter operators built from structure constants.
///
/// Exit status: 0 when every check passes, 1 when any check fails, 2 on
/// usage or input errors.
#[derive(Debug, Parser)]
#[command(name = "ybx", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify an identity and print a report.
    #[command(subcommand)]
    Check(Check),
    /// Print an operator matrix.
    #[command(subcommand)]
    Export(Export),
    /// Validate an algebra or superalgebra file.
    #[command(subcommand)]
    Validate(Validate),
    /// Invert an operator and check the round-trip.
    Invert(InvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ModeArgs {
    /// Exact check with every free parameter kept symbolic (the default).
    #[arg(long, conflicts_with = "samples")]
    pub symbolic: bool,
    /// Check at this many random rational points instead.
    #[arg(long, value_name = "N")]
    pub samples: Option<usize>,
    #[arg(long, value_name = "S", default_value_t = 0)]
    pub seed: u64,
}

/// An algebra file plus optional values for its indeterminates. Without
/// `--algebra` the built-in `k[X]/(X² − mX − n)` is used.
#[derive(Debug, Args)]
pub struct AlgebraArgs {
    #[arg(long, value_name = "PATH")]
    pub algebra: Option<PathBuf>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub n: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub sigma: Option<String>,
}

#[derive(Debug, Args)]
pub struct DnParams {
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub gamma: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Equation {
    Braid,
    Qybe,
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// Braid (or QYBE) equation and inverse for `a⊗b ↦ α ab⊗1 + β 1⊗ab − γ a⊗b`,
    /// or for an operator file.
    Constant {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        params: DnParams,
        /// Check this operator file instead of the algebra family.
        #[arg(long, value_name = "PATH", conflicts_with = "algebra")]
        operator: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Equation::Braid)]
        equation: Equation,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Two-parameter QYBE for the colored family over fresh u, v, w.
    Colored {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        q: Option<String>,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The four commutator conditions of the W, X, Z system.
    Wxz {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        mu: Option<String>,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Braid equation and inverse for `x⊗y ↦ α[x,y]⊗z + (−1)^{|x||y|} y⊗x`.
    Super {
        #[arg(long, value_name = "PATH")]
        superalgebra: PathBuf,
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Which basis vector of the even center to use as z.
        #[arg(long, value_name = "K", default_value_t = 0)]
        z_index: usize,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// QYBE for random operators `v⊗w ↦ f(v⊗w)⊗c + c⊗g(v⊗w)` on `V = W ⊕ kc`,
    /// plus rejection of maps that do not vanish on `V⊗c + c⊗V`.
    SplitCenter {
        #[arg(long, value_name = "N", default_value_t = 3)]
        dim: usize,
        /// Basis index of c.
        #[arg(long, value_name = "K", default_value_t = 0)]
        c_index: usize,
        /// Number of admissible random (f, g) pairs.
        #[arg(long, value_name = "N", default_value_t = 100)]
        samples: usize,
        /// Number of support-violating pairs that must be rejected.
        #[arg(long, value_name = "N", default_value_t = 20)]
        inadmissible: usize,
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `a⊗b ↦ α ab⊗1 + β 1⊗ab − γ a⊗b`
    Dn,
    /// `R(u,v)(a⊗b) = q(u−v) ab⊗1 + p(u−v) 1⊗ab − (pu−qv) b⊗a`
    Colored,
    /// W of the W, X, Z system
    WxzW,
    /// X of the W, X, Z system
    WxzX,
    /// Z of the W, X, Z system
    WxzZ,
    /// The superalgebra operator; needs `--superalgebra`
    Super,
    /// The 4×4 normal form with `--q` and `--eta`
    Canonical,
    /// The flip `v⊗w ↦ w⊗v` on the algebra's underlying space
    Twist,
}

/// Every family parameter; unset ones become fresh indeterminates.
#[derive(Debug, Args)]
pub struct FamilyParams {
    #[command(flatten)]
    pub dn: DnParams,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub u: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub v: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    pub eta: Option<String>,
    #[arg(long, value_name = "K", default_value_t = 0)]
    pub z_index: usize,
}

#[derive(Debug, Subcommand)]
pub enum Export {
    /// Print the matrix of an operator family (column = image of a basis tensor).
    Matrix {
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_name = "PATH")]
        superalgebra: Option<PathBuf>,
        #[command(flatten)]
        params: FamilyParams,
        /// Keep unset parameters symbolic (always the case for export).
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum Validate {
    /// Check the unit law and associativity of an algebra file.
    Algebra {
        #[arg(long = "algebra", value_name = "PATH")]
        flag: Option<PathBuf>,
        #[arg(value_name = "PATH", conflicts_with = "flag", required_unless_present = "flag")]
        path: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check grading, super-antisymmetry and the super-Jacobi identity.
    Superalgebra {
        #[arg(long = "superalgebra", value_name = "PATH")]
        flag: Option<PathBuf>,
        #[arg(value_name = "PATH", conflicts_with = "flag", required_unless_present = "flag")]
        path: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvertFamily {
    Dn,
    Colored,
    Super,
}

#[derive(Debug, Args)]
pub struct InvertArgs {
    /// Invert this operator file by exact elimination.
    #[arg(long, value_name = "PATH", conflicts_with = "family", required_unless_present = "family")]
    pub operator: Option<PathBuf>,
    /// Use the closed-form inverse of a family.
    #[arg(long, value_enum)]
    pub family: Option<InvertFamily>,
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long, value_name = "PATH")]
    pub superalgebra: Option<PathBuf>,
    #[command(flatten)]
    pub params: FamilyParams,
    #[command(flatten)]
    pub output: OutputArgs,
}
