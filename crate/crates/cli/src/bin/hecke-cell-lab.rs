use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hecke_cell_lab::{run_suite, Format, PointSpec, RunConfig, Suite};
use hecke_core::root_data::RootType;
use hecke_core::scalar::{parse_rational, Q};

#[derive(Parser)]
#[command(name = "hecke-cell-lab", version, about = "Exact checks for affine Hecke algebra cells and quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite and print its report.
    Verify {
        suite: Suite,
        #[arg(long = "type")]
        root_type: RootType,
        /// Specialize q to this rational.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        q: Option<Q>,
        /// Specialize v = sqrt(q) to this rational.
        #[arg(long = "sqrt-q", allow_hyphen_values = true, value_parser = parse_q)]
        sqrt_q: Option<Q>,
        #[arg(long = "max-len")]
        max_len: Option<usize>,
        /// File of torus points, one `q=<r> c_1 ... c_n` per line.
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of sampled torus points when no file is given.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long = "cache-dir")]
        cache_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Print only the reproducible report body.
        #[arg(long)]
        body_only: bool,
    },
}

fn parse_q(s: &str) -> Result<Q, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Verify { suite, root_type, q, sqrt_q, max_len, points, seed, samples, cache_dir, format, body_only } =
        cli.command;
    let points = match points.map(|p| std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))) {
        None => None,
        Some(Err(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Some(Ok(text)) => match PointSpec::parse_file(&text) {
            Ok(p) => Some(p),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    let cfg = RunConfig { suite, root_type, q, sqrt_q, max_len, points, seed, samples, cache_dir };
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run_suite(&cfg) {
        Ok(report) => {
            match (format, body_only) {
                (Format::Tsv, _) => print!("{}", report.to_tsv()),
                (Format::Json, true) => println!("{}", report.body_json()),
                (Format::Json, false) => println!("{}", report.to_json()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e @ (hecke_core::Error::UnsupportedForType(_) | hecke_core::Error::UnsupportedType(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
