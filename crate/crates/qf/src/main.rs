//! qf: exact q-integer power sums and q-Bernoulli numbers on the command
//! line.
//!
//! Exit codes: 0 success, 1 verification or convergence failure, 2 usage
//! error. Rational inputs use the exact literal form `p/r` (for example
//! `9/10`); decimal input is rejected, never rounded. The only numeric output
//! is the fixed-precision decimal display of exact rationals in `tail`.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed};

use qfaulhaber::rational::{decimal_string, parse_ratio};
use qfaulhaber::render::{lext_csv, lext_latex, lext_plain, poly_to_string, OutputFormat};
use qfaulhaber::{
    classical_bernoulli_capped, power_sum, power_sum_infinite, power_sum_partial, q_bernoulli,
    verify_identities, BigRat, SumMethod, DEFAULT_ORDER_CAP,
};

/// Decimal digits printed for the approximate displays in `tail`. The digits
/// come from exact rational arithmetic truncated at print time, so output is
/// deterministic.
const TAIL_DECIMAL_DIGITS: usize = 50;

#[derive(Parser)]
#[command(
    name = "qf",
    about = "Exact q-integer power sums and q-Bernoulli numbers",
    after_help = "Rational arguments use the exact form p/r (e.g. 9/10); decimals are rejected.\n\
                  The environment variable QF_SERIES_ORDER_CAP (positive integer, default 64)\n\
                  bounds the series order used by q -> 1 limits."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
    Latex,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Plain => OutputFormat::Plain,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Latex => OutputFormat::Latex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Recurrence,
    Bernoulli,
    Betadiff,
}

impl From<MethodArg> for SumMethod {
    fn from(m: MethodArg) -> SumMethod {
        match m {
            MethodArg::Brute => SumMethod::BruteForce,
            MethodArg::Recurrence => SumMethod::Recurrence,
            MethodArg::Bernoulli => SumMethod::BernoulliClosedForm,
            MethodArg::Betadiff => SumMethod::BetaDifference,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-Bernoulli number beta_n as the pair (rat, log), where log
    /// is the coefficient of L = (q - 1)/log q
    Bernoulli {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
    /// Print the q-power sum S_n(k) = sum_{l<k} q^l [l]_q^n as a polynomial,
    /// or its exact value at a rational point
    Powersum {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        /// Exact rational evaluation point (form p/r)
        #[arg(long = "eval-q", value_parser = parse_rational_arg)]
        eval_q: Option<BigRat>,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
    /// Print the classical Bernoulli number B_n, computed as the q -> 1
    /// limit of beta_n
    Limit {
        #[arg(long)]
        n: u32,
    },
    /// Compare the closed form of sum_{l>=0} q^l [l]_q^n (|q| < 1) against
    /// its partial sums and report the convergence gap
    Tail {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_rational_arg)]
        q: BigRat,
        /// Gap bound, exact: p/r or scientific with integer mantissa (1e-9)
        #[arg(long, value_parser = parse_tolerance_arg, default_value = "1e-9")]
        tolerance: BigRat,
        #[arg(long = "max-terms", value_parser = clap::value_parser!(u32).range(1..), default_value_t = 500)]
        max_terms: u32,
    },
    /// Run every identity suite over a grid and report pass/fail per suite
    Verify {
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: u32,
        #[arg(long = "max-k", value_parser = clap::value_parser!(u32).range(1..), default_value_t = 12)]
        max_k: u32,
    },
}

fn parse_rational_arg(s: &str) -> Result<BigRat, String> {
    parse_ratio(s)
}

/// Tolerances additionally accept scientific notation with an integer
/// mantissa, e.g. 1e-9 = 1/1000000000, still exactly.
fn parse_tolerance_arg(s: &str) -> Result<BigRat, String> {
    if let Some((mantissa, exponent)) = s.split_once(['e', 'E']) {
        let m = parse_ratio(mantissa)?;
        let e: i32 = exponent
            .parse()
            .map_err(|_| format!("invalid exponent: {exponent:?}"))?;
        let ten = parse_ratio("10")?;
        let scale = qfaulhaber::rational::rat_pow(&ten, e.unsigned_abs());
        return Ok(if e < 0 { m / scale } else { m * scale });
    }
    parse_ratio(s)
}

/// QF_SERIES_ORDER_CAP: positive integer, default 64.
fn series_order_cap() -> Result<i64, String> {
    match std::env::var("QF_SERIES_ORDER_CAP") {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORDER_CAP),
        Err(e) => Err(format!("QF_SERIES_ORDER_CAP: {e}")),
        Ok(s) => match s.parse::<i64>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(format!(
                "QF_SERIES_ORDER_CAP must be a positive integer, got {s:?}"
            )),
        },
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Bernoulli { n, format } => {
            let beta = q_bernoulli(n);
            let text = match format.into() {
                OutputFormat::Plain => lext_plain(&beta),
                OutputFormat::Csv => lext_csv(&beta),
                OutputFormat::Latex => lext_latex(&beta),
            };
            println!("{text}");
            ExitCode::SUCCESS
        }
        Command::Powersum {
            n,
            k,
            method,
            eval_q,
            format,
        } => {
            let poly = power_sum(n, k, method.into());
            match eval_q {
                Some(q) => println!("{}", poly.eval(&q)),
                None => println!("{}", poly_to_string(&poly, format.into())),
            }
            ExitCode::SUCCESS
        }
        Command::Limit { n } => {
            let cap = match series_order_cap() {
                Ok(cap) => cap,
                Err(msg) => return usage_error(&msg),
            };
            match classical_bernoulli_capped(n, cap) {
                Ok(value) => {
                    println!("{value}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Tail {
            n,
            q,
            tolerance,
            max_terms,
        } => {
            if q.abs() >= BigRat::one() {
                return usage_error("divergent series: |q| must be < 1");
            }
            let closed = power_sum_infinite(n, &q).expect("|q| < 1 checked above");
            let partial = power_sum_partial(n, &q, max_terms);
            let gap = (&closed - &partial).abs();
            println!("closed form = {closed}");
            println!(
                "closed form ~= {}",
                decimal_string(&closed, TAIL_DECIMAL_DIGITS)
            );
            if n == 2 {
                // the shifted form sum_j q^(j+1) [j]^2 = q * S, the shape the
                // cubic telescoping closed form produces
                let weighted = &q * &closed;
                println!("q-weighted closed form = {weighted}");
                println!(
                    "q-weighted closed form ~= {}",
                    decimal_string(&weighted, TAIL_DECIMAL_DIGITS)
                );
            }
            println!(
                "partial sum ({max_terms} terms) ~= {}",
                decimal_string(&partial, TAIL_DECIMAL_DIGITS)
            );
            println!("gap ~= {}", decimal_string(&gap, TAIL_DECIMAL_DIGITS));
            println!("tolerance = {tolerance}");
            if gap <= tolerance {
                println!("converged: gap <= tolerance");
                ExitCode::SUCCESS
            } else {
                println!("not converged: gap > tolerance after {max_terms} terms");
                ExitCode::from(1)
            }
        }
        Command::Verify { max_n, max_k } => {
            let report = verify_identities(max_n, max_k);
            print!("{}", report.to_text());
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
