mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "antipode-spectrum", version, about = "Characteristic polynomial of S² from Grothendieck data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the fusion ring, the module and, with an m-vector, the matched identities.
    Verify(SpecArgs),
    /// Solve for the dimension eigenspace and the m-vector.
    SolveM(SpecArgs),
    /// Factored characteristic polynomial of S².
    Charpoly(CharpolyArgs),
    /// Characteristic polynomial from squared norms and a sign split.
    Pivotalize(PivotalizeArgs),
    /// Generate a built-in family, as a spec file or run end to end.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Brute-force checks on explicit algebras.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args)]
struct SpecArgs {
    /// Spec file, or `-` for standard input.
    #[arg(default_value = "-")]
    spec: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CharpolyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Comma-separated m-vector literals, overriding the input file.
    #[arg(long)]
    m: Option<String>,
    /// Specialize a symbolic spectrum at torus values (comma-separated literals).
    #[arg(long, conflicts_with = "limit")]
    at: Option<String>,
    /// Leading-term limit of a symbolic spectrum as all Λ_i → 0 or ∞.
    #[arg(long, value_enum)]
    limit: Option<Limit>,
    /// Print only degree and multiplicity statistics.
    #[arg(long)]
    summary: bool,
}

#[derive(Args)]
struct PivotalizeArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Comma-separated m-vector literals used when the file has no pivotalization block.
    #[arg(long)]
    m: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Limit {
    Zero,
    Infinity,
}

#[derive(Args)]
struct RunArgs {
    /// Print the input file (the default).
    #[arg(long, conflicts_with = "run")]
    emit_spec: bool,
    /// Compute the spectrum instead of printing the input file.
    #[arg(long)]
    run: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    summary: bool,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Taft algebra T_n acting on Rep Z/n.
    Taft {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        s: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Dynamical u_q(sl2) family on Rep Z/ℓ.
    Uqsl2 {
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 1)]
        s: i64,
        /// `symbolic` or a literal value of Λ.
        #[arg(long, default_value = "symbolic")]
        lambda: String,
        /// Field order for a literal Λ (default ℓ).
        #[arg(long)]
        order: Option<u64>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Dynamical u_q(g) family for a simply-laced root system (always runs).
    Uqg {
        #[arg(long)]
        root_system: String,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 1)]
        s: i64,
        /// `symbolic`, `numeric`, or comma-separated literals.
        #[arg(long, default_value = "symbolic")]
        lambda: String,
        /// Numeric torus point as `re:im` pairs, comma separated.
        #[arg(long)]
        point: Option<String>,
        /// Field order for literal torus values (default ℓ).
        #[arg(long)]
        order: Option<u64>,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        summary: bool,
    },
    /// Vec_G with dims κ acting on G/H.
    Vecg {
        /// `Zn`, `S3` or `Z2xZ2`.
        #[arg(long)]
        group: String,
        /// Comma-separated character values, in element order (default trivial).
        #[arg(long)]
        kappa: Option<String>,
        /// Comma-separated element names of H (default {e}).
        #[arg(long)]
        subgroup: Option<String>,
        /// Field order for κ literals (default the group exponent).
        #[arg(long)]
        order: Option<u64>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// A fusion category acting on itself.
    Regular {
        /// `fibonacci`.
        #[arg(long, conflicts_with = "from")]
        preset: Option<String>,
        /// Take the category from this spec file.
        #[arg(long)]
        from: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraKind {
    Taft,
    Uqsl2,
}

#[derive(Args)]
struct AlgebraArgs {
    #[arg(long, value_enum)]
    algebra: AlgebraKind,
    /// n for Taft, ℓ for u_q(sl2).
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    s: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Validate a Cartan matrix (default: the family's own).
    Cartan {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Candidate as a JSON integer matrix.
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Jacobson radical from the trace form.
    Radical {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// S² on the Hopf basis of the Taft algebra.
    S2 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        s: i64,
        #[arg(long)]
        json: bool,
    },
}

fn configure_threads() -> Result<(), commands::CliError> {
    if let Ok(v) = std::env::var("ANTIPODE_SPECTRUM_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| commands::CliError::Input(format!("ANTIPODE_SPECTRUM_THREADS must be a count, got '{v}'")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| commands::CliError::Input(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| commands::dispatch(cli.command));
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
