//! `bernoulli`: command-line front end for exact Bernoulli-number computations.
//!
//! Exit status: 0 on success, 1 when a computation fails, 2 on bad usage.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use bernoulli_core::irregular::{irregular_report, is_regular_mod_p};
use bernoulli_core::numeric::primes_up_to;
use bernoulli_core::series::expansion_coeffs;
use bernoulli_core::zeta::{bernoulli_zeta_with_plan, zeta_even};
use bernoulli_core::{
    bernoulli_double_sum, bernoulli_estimate, bernoulli_table, plan_precision, power_sum_exclusive,
    power_sum_inclusive, sc_denominator, sc_fractional_part, Error, FunctionTag, Rational,
};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use render::{fixed_json, rational_json, Mode};

#[derive(Debug, Parser)]
#[command(
    name = "bernoulli",
    version,
    about = "Exact Bernoulli numbers and friends"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Recurrence,
    DoubleSum,
    Zeta,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// B_n for one index `n` or an inclusive range `a..b`.
    Bern {
        index: String,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
    },
    /// Sum of k^r for k = 1..n-1 (default) or k = 1..n with --inclusive.
    Sumpow {
        n: u64,
        r: u32,
        #[arg(long, conflicts_with = "exclusive")]
        inclusive: bool,
        #[arg(long)]
        exclusive: bool,
    },
    /// Fractional part of B_2k in [0, 1).
    Frac { two_k: u64 },
    /// Reduced denominator of B_2k.
    Denom { two_k: u64 },
    /// Nonzero expansion coefficients up to x^max_order.
    Series {
        #[arg(value_parser = parse_tag)]
        tag: FunctionTag,
        #[arg(allow_negative_numbers = true)]
        max_order: i64,
    },
    /// Irregular primes p <= limit with their irregular indices.
    Irregular {
        limit: u64,
        /// Use the modular double-sum path instead of exact numerators.
        #[arg(long)]
        mod_p: bool,
    },
    /// zeta(2k) as a fixed-point value.
    Zeta {
        two_k: u64,
        #[arg(long, default_value_t = 128)]
        bits: u32,
    },
    /// Asymptotic estimate of B_2k.
    Estimate { two_k: u64 },
}

fn parse_tag(s: &str) -> Result<FunctionTag, String> {
    s.parse::<FunctionTag>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ReconstructionFailed { .. } | Error::NonIntegral { .. } => {
                Failure::Compute(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let mode = if cli.json { Mode::Json } else { Mode::Text };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli.command, mode, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, mode: Mode, out: &mut impl Write) -> Outcome {
    match command {
        Command::Bern { index, method } => cmd_bern(&index, method, mode, out),
        Command::Sumpow {
            n,
            r,
            inclusive,
            exclusive: _,
        } => cmd_sumpow(n, r, inclusive, mode, out),
        Command::Frac { two_k } => {
            let frac = sc_fractional_part(two_k)?;
            match mode {
                Mode::Text => writeln!(out, "{frac}")?,
                Mode::Json => render::json_line(
                    out,
                    &serde_json::json!({ "two_k": two_k, "fractional_part": rational_json(frac.value()) }),
                )?,
            }
            Ok(())
        }
        Command::Denom { two_k } => {
            let den = sc_denominator(two_k)?;
            match mode {
                Mode::Text => writeln!(out, "{den}")?,
                Mode::Json => render::json_line(
                    out,
                    &serde_json::json!({ "two_k": two_k, "denominator": den.to_string() }),
                )?,
            }
            Ok(())
        }
        Command::Series { tag, max_order } => cmd_series(tag, max_order, mode, out),
        Command::Irregular { limit, mod_p } => cmd_irregular(limit, mod_p, mode, out),
        Command::Zeta { two_k, bits } => {
            let z = zeta_even(two_k, bits)?;
            match mode {
                Mode::Text => writeln!(
                    out,
                    "{}",
                    z.to_decimal_string(z.significant_decimal_digits())
                )?,
                Mode::Json => render::json_line(
                    out,
                    &serde_json::json!({ "two_k": two_k, "value": fixed_json(&z) }),
                )?,
            }
            Ok(())
        }
        Command::Estimate { two_k } => {
            let est = bernoulli_estimate(two_k)?;
            let plan = plan_precision(two_k)?;
            match mode {
                Mode::Text => {
                    writeln!(
                        out,
                        "{}",
                        est.to_decimal_string(est.significant_decimal_digits())
                    )?;
                    writeln!(out, "numerator digits ~ {}", plan.estimated_decimal_digits)?;
                }
                Mode::Json => render::json_line(
                    out,
                    &serde_json::json!({
                        "two_k": two_k,
                        "estimate": fixed_json(&est),
                        "estimated_decimal_digits": plan.estimated_decimal_digits,
                        "working_scale_bits": plan.working_scale_bits,
                        "guard_bits": plan.guard_bits,
                    }),
                )?,
            }
            Ok(())
        }
    }
}

/// Parses `n` or an inclusive range `a..b`; returns the bounds and whether a range was given.
fn parse_index_spec(spec: &str) -> Result<(u32, u32, bool), Failure> {
    let bad = || Failure::Usage(format!("invalid index {spec:?}: expected n or a..b"));
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    match spec.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(Failure::Usage(format!("empty range {spec:?}")));
            }
            Ok((a, b, true))
        }
        None => {
            let n = num(spec)?;
            Ok((n, n, false))
        }
    }
}

const ZETA_RETRIES: u32 = 3;

fn zeta_with_retry(two_k: u64) -> Result<Rational, Error> {
    let mut plan = plan_precision(two_k)?;
    let mut attempt = 0;
    loop {
        match bernoulli_zeta_with_plan(&plan) {
            Err(Error::ReconstructionFailed { .. }) if attempt < ZETA_RETRIES => {
                plan = plan.with_guard_bits(plan.guard_bits * 2);
                attempt += 1;
            }
            other => return other,
        }
    }
}

fn cmd_bern(spec: &str, method: Method, mode: Mode, out: &mut impl Write) -> Outcome {
    let (lo, hi, is_range) = parse_index_spec(spec)?;
    let values: Vec<(u32, Rational)> = match method {
        Method::Recurrence => {
            let table = bernoulli_table(hi);
            (lo..=hi).map(|n| (n, table[n].clone())).collect()
        }
        Method::DoubleSum => (lo..=hi).map(|n| (n, bernoulli_double_sum(n))).collect(),
        Method::Zeta => {
            let indices: Vec<u32> = if is_range {
                (lo.max(2)..=hi).filter(|n| n % 2 == 0).collect()
            } else {
                vec![lo]
            };
            if indices.is_empty() {
                return Err(Failure::Usage(format!(
                    "range {spec:?} has no even index >= 2"
                )));
            }
            if let Some(&bad) = indices.iter().find(|&&n| n < 2 || n % 2 == 1) {
                return Err(Failure::Usage(format!(
                    "the zeta method needs an even index >= 2, got {bad}"
                )));
            }
            indices
                .par_iter()
                .map(|&n| zeta_with_retry(n.into()).map(|b| (n, b)))
                .collect::<Result<Vec<_>, _>>()?
        }
    };
    match mode {
        Mode::Text => {
            for (n, b) in &values {
                if is_range {
                    writeln!(out, "B_{n} = {b}")?;
                } else {
                    writeln!(out, "{b}")?;
                }
            }
        }
        Mode::Json => {
            let items: Vec<_> = values
                .iter()
                .map(|(n, b)| serde_json::json!({ "n": n, "value": rational_json(b) }))
                .collect();
            render::json_line(out, &serde_json::Value::Array(items))?;
        }
    }
    Ok(())
}

fn cmd_sumpow(n: u64, r: u32, inclusive: bool, mode: Mode, out: &mut impl Write) -> Outcome {
    let value = if inclusive {
        power_sum_inclusive(n, r)?
    } else {
        power_sum_exclusive(n, r)?
    };
    match mode {
        Mode::Text => writeln!(out, "{value}")?,
        Mode::Json => render::json_line(
            out,
            &serde_json::json!({
                "n": n,
                "r": r,
                "convention": if inclusive { "inclusive" } else { "exclusive" },
                "value": value.to_string(),
            }),
        )?,
    }
    Ok(())
}

fn cmd_series(tag: FunctionTag, max_order: i64, mode: Mode, out: &mut impl Write) -> Outcome {
    if max_order < 1 {
        return Err(Failure::Usage(format!(
            "max_order must be at least 1, got {max_order}"
        )));
    }
    let coeffs: Vec<(i64, Rational)> = expansion_coeffs(tag, max_order)?
        .into_iter()
        .filter(|(_, c)| c != &Rational::from_integer(0.into()))
        .collect();
    match mode {
        Mode::Text => {
            for (m, c) in &coeffs {
                writeln!(out, "x^{m} {c}")?;
            }
        }
        Mode::Json => {
            let items: Vec<_> = coeffs
                .iter()
                .map(|(m, c)| serde_json::json!({ "order": m, "coeff": rational_json(c) }))
                .collect();
            render::json_line(out, &serde_json::Value::Array(items))?;
        }
    }
    Ok(())
}

fn cmd_irregular(limit: u64, mod_p: bool, mode: Mode, out: &mut impl Write) -> Outcome {
    let report = if mod_p {
        primes_up_to(limit)
            .into_par_iter()
            .filter(|&p| p >= 5)
            .map(is_regular_mod_p)
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .filter(|r| !r.is_regular())
            .collect()
    } else {
        irregular_report(limit)
    };
    match mode {
        Mode::Text => {
            for r in &report {
                writeln!(out, "{r}")?;
            }
        }
        Mode::Json => {
            let items: Vec<_> = report
                .iter()
                .map(
                    |r| serde_json::json!({ "p": r.p.to_string(), "indices": r.irregular_indices }),
                )
                .collect();
            render::json_line(out, &serde_json::Value::Array(items))?;
        }
    }
    Ok(())
}
