//! `zernike`: batch front end for Zernike circle functions.
//!
//! File options accept `-` for standard input. Formats are
//! whitespace-separated with `#` comments: expansions as `n m coeff`,
//! polynomials as `p q coeff`, samples as `x y f`.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "zernike",
    version,
    about = "Zernike circle functions over the unit disk"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Map (n, m) to Noll's index j, or j back to "n m"
    Noll(NollArgs),
    /// Evaluate Z_n^(m) at a point given as --x/--y or --r/--phi
    Eval(EvalArgs),
    /// Linearize the product of two expansions
    Product(ProductArgs),
    /// Convert a Zernike expansion to a power-basis polynomial
    Z2p(ConvertArgs),
    /// Convert a power-basis polynomial to a Zernike expansion
    P2z(ConvertArgs),
    /// Least-squares fit of "x y f" samples up to total order K
    Fit(FitArgs),
    /// Run the built-in consistency checks
    Selftest,
}

#[derive(Debug, Args)]
struct NollArgs {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i32>,
    #[arg(long, conflicts_with_all = ["n", "m"])]
    j: Option<u64>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, allow_negative_numbers = true)]
    m: i32,
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    #[arg(long, conflicts_with_all = ["x", "y"])]
    r: Option<f64>,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["x", "y"])]
    phi: Option<f64>,
}

#[derive(Debug, Args)]
struct ProductArgs {
    #[arg(long)]
    file_a: PathBuf,
    #[arg(long)]
    file_b: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FitArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    max_order: u32,
    /// Print Zernike coefficients instead of power-basis ones
    #[arg(long)]
    zernike: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Noll(a) => commands::noll(a.n, a.m, a.j),
        Command::Eval(a) => commands::eval(a.n, a.m, (a.x, a.y), (a.r, a.phi)),
        Command::Product(a) => commands::product(&a.file_a, &a.file_b, a.out.as_deref()),
        Command::Z2p(a) => commands::z2p(&a.file, a.out.as_deref()),
        Command::P2z(a) => commands::p2z(&a.file, a.out.as_deref()),
        Command::Fit(a) => commands::fit(&a.input, a.max_order, a.zernike),
        Command::Selftest => commands::selftest(),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
