//! File formats, commands and graph export for the `twocat` binary.

pub mod commands;
pub mod dot;
pub mod format;
pub mod report;
pub mod workspace;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use report::Outcome;
pub use workspace::LoadError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("UnknownName: no {kind} named {name:?}")]
    UnknownName { kind: &'static str, name: String },
    #[error("input error: {0}")]
    Input(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Clone, Debug, Args)]
pub struct Global {
    /// Enumeration cap: tuple length for `hat`, cell budget for `mf`/`kx`.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Extra cells enumerated for witnesses.
    #[arg(long, global = true, default_value_t = 1)]
    pub slack: usize,
    /// Seed for sampled property checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    OfI,
    OfP,
}

#[derive(Debug, Parser)]
#[command(name = "twocat", version, about = "Finite 2-categories, pseudo-colimits and 2-pro-objects")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the laws of any document.
    Validate {
        file: PathBuf,
        /// Sampled elevator checks on a 2-category, seeded by --seed.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// F0-F2 on a 2-category.
    CheckFiltered { file: PathBuf },
    /// CF0-CF2 on a pseudo-functor.
    CheckCofinal { file: PathBuf },
    /// The pseudo-colimit of a covariant diagram.
    Colim {
        file: PathBuf,
        /// Compare with the value at a 2-terminal index object.
        #[arg(long)]
        check_terminal_oracle: bool,
    },
    /// The pseudo-limit of a contravariant diagram.
    Lim { file: PathBuf },
    /// Factor a test cone or cocone through the universal one.
    Factor { cone: PathBuf },
    /// The comparison functor L(G F) -> L(G).
    Compare { functor: PathBuf, diagram: PathBuf },
    /// Build and check the truncation M_n(J) with Φ.
    Mj {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Build Â and T: A -> Â; with --into, compare strict and pseudo maps.
    Hat {
        file: PathBuf,
        #[arg(long)]
        into: Option<PathBuf>,
    },
    /// The hom category Pro(C)(X, Y).
    ProHom { x: PathBuf, y: PathBuf },
    /// Representatives of every element and 2-cell of Pro(C)(X, Y).
    Represent { x: PathBuf, y: PathBuf },
    /// Straighten every morphism of coLim_i C(X_i, D).
    Straighten {
        x: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// Find u: i -> i' equalizing pairs of cells after X_u.
    Equalize {
        x: PathBuf,
        #[arg(long)]
        object: String,
        /// Index object i.
        #[arg(long)]
        at: String,
        /// `θ,θ'` cell names; repeatable.
        #[arg(long = "pair", required = true)]
        pairs: Vec<String>,
    },
    /// The index M_f of an element f of Pro(C)(X, Y).
    Mf {
        x: PathBuf,
        y: PathBuf,
        /// Element number; defaults to the identity when X = Y.
        #[arg(long)]
        element: Option<usize>,
    },
    /// K_X for the one-object diagram at X.
    Kx { x: PathBuf },
    /// Reindex X along F: I' -> I and compare hom categories.
    Reindex { x: PathBuf, functor: PathBuf },
    /// Solve a lifting square.
    Lift { square: PathBuf },
    /// Exhibit f ≅ p i as a retract of i or of p.
    Retract {
        file: PathBuf,
        #[arg(long)]
        f: String,
        #[arg(long)]
        i: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        gamma: String,
        #[arg(long, value_enum, default_value_t = CaseArg::OfP)]
        case: CaseArg,
    },
    /// Check the closed 2-bmodel axioms.
    ModelCheck { file: PathBuf },
    /// Graphviz text of the 1-skeleton.
    ExportDot { file: PathBuf },
    /// Evaluate an elevator expression.
    Eval {
        file: PathBuf,
        expr: String,
        #[arg(long)]
        equals: Option<String>,
    },
    /// Print a built-in fixture as a document.
    Fixture {
        name: String,
        /// Emit a category as a locally discrete 2-category.
        #[arg(long)]
        two: bool,
    },
    /// Rewrite a document in canonical form.
    Canonical { file: PathBuf },
}

/// Exit status: 0 all verdicts positive, 1 some verdict negative, 2 input error.
pub fn exit_code(r: &Result<Outcome, CliError>) -> i32 {
    match r {
        Ok(o) if o.ok => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    commands::run(&cli.command, &cli.global)
}
