use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use simplicial_cobar::cli;
use simplicial_cobar::verify::Bounds;

/// Exact chain-level computations for simplicial suspensions, loop groups
/// and the James construction.
#[derive(Parser)]
#[command(name = "simplicial-cobar", version, about)]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Materialize a fixture complex from a space spec.
    ///
    /// Specs: `sphere N`, `delta N`, `suspension(SPEC)`, `wedge(A, B)`,
    /// `product(A, B)`, with shorthands like `S1`, `D2`, `ES1`.
    Build {
        /// Space spec, e.g. "suspension (sphere 1)".
        spec: String,
        /// Also write the JSON to a file.
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Evaluate a map on a basis element.
    ///
    /// Maps: aw, ez, phi, alpha, psi, xi, gamma, q, sigma, h, t_ek, theta,
    /// f_k, phi_k, d_operator.
    Eval {
        map: String,
        /// Fixture spec; pairs are written "A,B".
        #[arg(long)]
        fixture: Option<String>,
        /// Input label, e.g. "(1,x)", "[x#1|1#x]", "t((1,x))^-1".
        #[arg(long)]
        input: Option<String>,
        /// Szczarba level for d_operator.
        #[arg(long)]
        n: Option<usize>,
        /// Szczarba index for d_operator.
        #[arg(long)]
        i: Option<usize>,
        /// Component index for f_k / phi_k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 4)]
        max_word_length: usize,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Run a verification suite.
    ///
    /// Suites: simplicial, chains, ez-sdr, gm, james, szczarba, milgram,
    /// homology, all.
    Verify {
        suite: String,
        /// Fixture spec; pairs are written "A,B".
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value_t = 4)]
        max_word_length: usize,
        /// 0 means integer coefficients.
        #[arg(long, default_value_t = 0)]
        modulus: u32,
        #[arg(long, default_value_t = 0xC0BA5EED)]
        seed: u64,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
}

fn emit(value: &serde_json::Value, json_out: Option<&PathBuf>) -> simplicial_cobar::Result<()> {
    use std::io::Write;
    let rendered = serde_json::to_string_pretty(value)?;
    if let Some(path) = json_out {
        std::fs::write(path, &rendered)?;
    }
    if let Err(e) = writeln!(std::io::stdout(), "{rendered}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            // the consumer stopped reading; die quietly like a SIGPIPE
            std::process::exit(141);
        }
        return Err(e.into());
    }
    Ok(())
}

fn run() -> simplicial_cobar::Result<bool> {
    let args = Args::parse();
    match args.cmd {
        Cmd::Build { spec, json_out } => {
            let value = cli::cmd_build(&spec)?;
            emit(&value, json_out.as_ref())?;
            Ok(true)
        }
        Cmd::Eval {
            map,
            fixture,
            input,
            n,
            i,
            k,
            max_word_length,
            json_out,
        } => {
            let value = cli::cmd_eval(
                &map,
                fixture.as_deref(),
                input.as_deref(),
                n,
                i,
                k,
                max_word_length,
            )?;
            emit(&value, json_out.as_ref())?;
            Ok(true)
        }
        Cmd::Verify {
            suite,
            fixture,
            max_degree,
            max_word_length,
            modulus,
            seed,
            json_out,
        } => {
            let bounds = Bounds {
                max_degree,
                max_word_length,
                modulus,
                seed,
            };
            let (value, pass) = cli::cmd_verify(&suite, fixture.as_deref(), &bounds)?;
            emit(&value, json_out.as_ref())?;
            Ok(pass)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
