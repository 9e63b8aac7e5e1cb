//! Command-line front end for the `og10-lattice` toolkit.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

mod commands;
mod error;
mod input;
mod json;
pub mod replay;
mod table;

pub use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "og10lat", version, about = "Exact lattice computations for OG10 moduli spaces on cubic fourfolds")]
struct Cli {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generic lattice operations on a JSON document or catalog name.
    #[command(subcommand)]
    Lat(LatCommand),
    /// Conditions on discriminants of special cubic fourfolds.
    #[command(subcommand)]
    Hassett(HassettCommand),
    /// Lattices of OG10-type moduli spaces.
    #[command(subcommand)]
    Og10(Og10Command),
    /// Primitive embeddings and discriminant forms.
    #[command(subcommand)]
    Nikulin(NikulinCommand),
    /// Reference examples.
    #[command(subcommand)]
    Paper(PaperCommand),
}

#[derive(Subcommand, Debug)]
enum LatCommand {
    /// Rank, determinant, signature, parity, scale and discriminant group.
    Info { file: String },
    /// Divisibility of a vector.
    Div {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Orthogonal complement of a span, given as "v1;v2;...".
    Perp {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        span: String,
    },
    /// Primitive closure of a span.
    Saturate {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        span: String,
    },
    /// Overlattice generated by rational glue vectors (plus any in the document).
    Glue {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        glue: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum HassettCommand {
    /// All predicates for one discriminant.
    Check {
        #[arg(allow_hyphen_values = true)]
        d: i64,
    },
    /// Every admissible discriminant up to a bound (JSON lines under --json).
    List {
        #[arg(long)]
        max: i64,
    },
}

#[derive(Subcommand, Debug)]
enum Og10Command {
    /// The overlattice Γ of λ⊥ ⊕ Zσ.
    Gamma(GammaArgs),
    /// Factoriality of the singular moduli space.
    Factoriality {
        /// Document whose Gram is the Mukai lattice and whose vectors span
        /// the algebraic part (the whole lattice if there are none).
        #[arg(long)]
        picard: String,
        /// λ₀ in lattice coordinates, or as coefficients of the document vectors.
        #[arg(long, allow_hyphen_values = true)]
        lambda0: String,
    },
    /// Picard lattice of the desingularised LPZ variety for discriminant D.
    PicardLpz {
        #[arg(allow_hyphen_values = true)]
        d: i64,
        /// Coefficient bound for the hyperbolic-plane search.
        #[arg(long, default_value_t = og10_lattice::og10::DEFAULT_SEARCH_BOUND)]
        bound: i64,
    },
    /// Birationality criteria for discriminant D.
    Birational {
        #[arg(allow_hyphen_values = true)]
        d: i64,
    },
}

#[derive(Args, Debug)]
struct GammaArgs {
    /// Use the Mukai lattice of a K3 surface.
    #[arg(long, conflicts_with = "cubic")]
    k3: bool,
    /// Use the Mukai lattice of the Kuznetsov component (default).
    #[arg(long)]
    cubic: bool,
    /// λ₀: 24 coordinates, or the shorthand "a,b" (a·λ₁ + b·λ₂ for cubics,
    /// rank a and H⁴ coefficient b for K3).
    #[arg(long, allow_hyphen_values = true)]
    lambda0: Option<String>,
}

#[derive(Subcommand, Debug)]
enum NikulinCommand {
    /// Sufficient criterion for a primitive embedding into an even unimodular lattice.
    Embed {
        file: String,
        #[arg(long)]
        target: String,
    },
}

#[derive(Subcommand, Debug)]
enum PaperCommand {
    /// Re-run every reference example and report pass/fail.
    Replay,
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code: 0 success, 1 invalid input, 2 mathematical
/// rejection.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    use commands::{hassett, lat, nikulin, og10};
    let json = cli.json;
    match cli.command {
        Command::Lat(c) => match c {
            LatCommand::Info { file } => lat::info(&file, json, out),
            LatCommand::Div { file, vector } => lat::div(&file, &vector, json, out),
            LatCommand::Perp { file, span } => lat::perp(&file, &span, json, out),
            LatCommand::Saturate { file, span } => lat::saturate(&file, &span, json, out),
            LatCommand::Glue { file, glue } => lat::glue(&file, &glue, json, out),
        }?,
        Command::Hassett(c) => match c {
            HassettCommand::Check { d } => hassett::check(d, json, out),
            HassettCommand::List { max } => hassett::list(max, json, out),
        }?,
        Command::Og10(c) => match c {
            Og10Command::Gamma(a) => og10::gamma(a.k3, a.lambda0.as_deref(), json, out),
            Og10Command::Factoriality { picard, lambda0 } => og10::factoriality(&picard, &lambda0, json, out),
            Og10Command::PicardLpz { d, bound } => og10::picard_lpz(d, bound, json, out),
            Og10Command::Birational { d } => og10::birational(d, json, out),
        }?,
        Command::Nikulin(NikulinCommand::Embed { file, target }) => nikulin::embed(&file, &target, json, out)?,
        Command::Paper(PaperCommand::Replay) => return replay::run_replay(json, out),
    }
    Ok(0)
}
