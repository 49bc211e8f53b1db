//! Command-line front end: recognition, certificate checking, graph-class
//! recognition, brute-force comparison, instance generation and SVG
//! rendering.
//!
//! Exit codes: 0 for YES/OK, 1 for NO or a failed check, 2 for usage and
//! input errors, 3 for internal contract violations.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use linsemi::graphrec::{
    check_vertex_ordering, recognize_comparability_graph, recognize_incomparability_graph,
};
use linsemi::io;
use linsemi::oracle;
use linsemi::recognizer::{recognize, Recognition};
use linsemi::semiorder::verify_certificate;

mod render;

#[derive(Parser)]
#[command(
    name = "linsemi",
    version,
    about = "Recognize orders that are the intersection of a linear order and a semiorder"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the poset in FILE is a linear-semiorder
    Recognize {
        /// Poset file
        file: PathBuf,
        /// Also emit the certificate (to --out, or stdout)
        #[arg(long)]
        certify: bool,
        /// Certificate output path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a poset
    Verify {
        /// Poset file
        poset: PathBuf,
        /// Certificate file
        certificate: PathBuf,
    },
    /// Recognize comparability or incomparability graphs of the class
    Graph {
        /// Graph file
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: GraphMode,
    },
    /// Brute-force verdict by exhaustive linear-extension search
    Oracle {
        /// Poset file (at most 10 elements)
        file: PathBuf,
    },
    /// Write a reproducible random poset
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a certificate as an SVG triangle diagram
    Render {
        /// Certificate file
        certificate: PathBuf,
        /// SVG output path
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphMode {
    Comparability,
    Incomparability,
}

const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CONTRACT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(AppError { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct AppError {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> AppError {
    AppError {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn contract_error(message: impl Into<String>) -> AppError {
    AppError {
        code: EXIT_CONTRACT,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, content: &str) -> Result<(), AppError> {
    fs::write(path, content).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, AppError> {
    match cli.command {
        Command::Recognize { file, certify, out } => {
            let p = io::parse_poset(&read(&file)?).map_err(|e| input_error(e.to_string()))?;
            match recognize(&p).map_err(|e| contract_error(e.to_string()))? {
                Recognition::Yes(cert) => {
                    println!("YES");
                    if certify {
                        let text = io::serialize_certificate(&cert);
                        match out {
                            Some(path) => write_out(&path, &text)?,
                            None => print!("{text}"),
                        }
                    }
                    Ok(0)
                }
                Recognition::No(_) => {
                    println!("NO");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Verify { poset, certificate } => {
            let p = io::parse_poset(&read(&poset)?).map_err(|e| input_error(e.to_string()))?;
            let cert = io::parse_certificate(&read(&certificate)?)
                .map_err(|e| input_error(e.to_string()))?;
            match verify_certificate(&p, &cert) {
                Ok(()) => {
                    println!("OK");
                    Ok(0)
                }
                Err(reason) => {
                    println!("FAIL: {reason}");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Graph { file, mode } => {
            let g = io::parse_graph(&read(&file)?).map_err(|e| input_error(e.to_string()))?;
            match mode {
                GraphMode::Comparability => {
                    let yes = recognize_comparability_graph(&g)
                        .map_err(|e| contract_error(e.to_string()))?;
                    println!("{}", if yes { "YES" } else { "NO" });
                    Ok(if yes { 0 } else { EXIT_NO })
                }
                GraphMode::Incomparability => {
                    match recognize_incomparability_graph(&g)
                        .map_err(|e| contract_error(e.to_string()))?
                    {
                        Some(sigma) => {
                            debug_assert!(check_vertex_ordering(&g, &sigma).is_empty());
                            println!("YES");
                            let names: Vec<&str> = sigma.iter().map(|v| g.name(v)).collect();
                            println!("{}", names.join(" "));
                            Ok(0)
                        }
                        None => {
                            println!("NO");
                            Ok(EXIT_NO)
                        }
                    }
                }
            }
        }
        Command::Oracle { file } => {
            let p = io::parse_poset(&read(&file)?).map_err(|e| input_error(e.to_string()))?;
            let yes = oracle::oracle_recognize(&p).map_err(|e| input_error(e.to_string()))?;
            println!("{}", if yes { "YES" } else { "NO" });
            Ok(if yes { 0 } else { EXIT_NO })
        }
        Command::Gen {
            n,
            density,
            seed,
            out,
        } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(input_error("density must be within [0, 1]"));
            }
            let p = oracle::random_poset(n, density, seed);
            let text = io::serialize_poset(&p);
            match out {
                Some(path) => write_out(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Render { certificate, out } => {
            let cert = io::parse_certificate(&read(&certificate)?)
                .map_err(|e| input_error(e.to_string()))?;
            write_out(&out, &render::certificate_svg(&cert))?;
            Ok(0)
        }
    }
}
