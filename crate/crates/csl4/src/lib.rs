//! Command line front end for the exact coincidence machinery in
//! `csl4-core`: coincidence indices and module bases for given quaternion
//! parameters, counting tables, Dirichlet series coefficients, per-index
//! enumeration and the self-verification harness.
//!
//! Exit codes: 0 success, 1 domain error (non-admissible parameters,
//! out-of-budget requests, values outside the ring), 2 verification
//! mismatch, 3 usage error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use csl4_core::coincidence::{csl_brute, csl_closed, sigma, Family, RotParam};
use csl4_core::counting::{euler_expand, f_csl, f_rot, rotation_count, CountKind};
use csl4_core::enumerate::{verify_pair_criterion, Budget, EnumReport, EnumSession};
use csl4_core::hurwitz::HurwitzQuat;
use csl4_core::icosian::Icosian;
use csl4_core::zmodule::FreeModule;
use csl4_core::CslError;

mod format;

use format::{module_csv, module_json, module_plain, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// Budget ceiling override (applies to every family).
pub const ENV_MAX_N: &str = "CSL4_MAX_N";

#[derive(Parser, Debug)]
#[command(
    name = "csl4",
    version,
    about = "Exact coincidence site lattices of the prominent 4-dimensional lattices",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    D4,
    Z4,
    A4,
    Icosian,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::D4 => Family::D4Star,
            FamilyArg::Z4 => Family::Z4,
            FamilyArg::A4 => Family::A4,
            FamilyArg::Icosian => Family::IcosianRing,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Rot,
    Csl,
}

impl KindArg {
    fn kind(self) -> CountKind {
        match self {
            KindArg::Rot => CountKind::Rotations,
            KindArg::Csl => CountKind::Csls,
        }
    }
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Lattice/module family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Quaternion q as `a,b,c,d`; components are exact rationals `p/q` or
    /// golden rationals `p+qt/r` with `t` standing for the golden mean.
    #[arg(long)]
    q: String,
    /// Quaternion p (required for d4, z4 and icosian; forbidden for a4).
    #[arg(long)]
    p: Option<String>,
}

#[derive(Args, Debug)]
struct OutArgs {
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
    /// Write the output to a file instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coincidence index of the rotation with the given parameters.
    Sigma {
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Canonical basis of the coincidence module of the given rotation.
    Csl {
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Counting table: f_rot, f_csl, total rotations and modules per index.
    Count {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 17)]
        max_n: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Dirichlet series coefficients from the Euler product expansion.
    Series {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "rot")]
        kind: KindArg,
        #[arg(long, default_value_t = 17)]
        max_n: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Exhaustive enumeration of rotation classes and modules at one index.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Cross-check enumeration against the counting layer, point groups
    /// and the pair-equality criterion; non-zero exit on any mismatch.
    Verify {
        /// Run every family (the default when --family is absent).
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Cap on the verified indices (per family defaults otherwise).
        #[arg(long)]
        max_n: Option<u64>,
        /// Skip the point-group size checks (the icosian one is the
        /// slowest part of the run).
        #[arg(long)]
        skip_point_groups: bool,
        #[command(flatten)]
        out: OutArgs,
    },
}

/// Parses argv and runs the requested command; returns the exit code.
pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message (including --help/--version).
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &CslError) -> i32 {
    match e {
        CslError::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn dispatch(cmd: Command) -> Result<i32, CslError> {
    match cmd {
        Command::Sigma { param, out } => {
            let family = param.family.family();
            let p = build_param(&param)?;
            let s = sigma(family, &p)?;
            emit(&out, &format!("{s}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Csl { param, out } => {
            let family = param.family.family();
            let p = build_param(&param)?;
            let module = csl_closed(family, &p)?;
            let text = match out.format {
                FormatArg::Plain => module_plain(&module),
                FormatArg::Csv => module_csv(&module),
                FormatArg::Json => module_json(&module),
            };
            emit(&out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Count { family, max_n, out } => {
            let family = family.family();
            let mut table = Table::new(&["n", "f_rot", "f_csl", "rotations", "csls"]);
            for n in 1..=max_n {
                table.row(&[
                    n.to_string(),
                    f_rot(family, n)?.to_string(),
                    f_csl(family, n)?.to_string(),
                    rotation_count(family, n)?.to_string(),
                    f_csl(family, n)?.to_string(),
                ]);
            }
            emit(&out, &table.render(out.format)?)?;
            Ok(EXIT_OK)
        }
        Command::Series {
            family,
            kind,
            max_n,
            out,
        } => {
            let family = family.family();
            let kind = kind.kind();
            let coeffs = euler_expand(family, kind, max_n)?;
            let text = match out.format {
                FormatArg::Json => {
                    let list: Vec<serde_json::Value> = coeffs
                        .coefficients()
                        .iter()
                        .map(|c| serde_json::Value::String(c.to_string()))
                        .collect();
                    let v = serde_json::json!({
                        "family": family.name(),
                        "kind": kind.name(),
                        "max_n": max_n,
                        "coefficients": list,
                    });
                    format!("{v}\n")
                }
                _ => {
                    let mut table = Table::new(&["n", "a_n"]);
                    for n in 1..=max_n {
                        table.row(&[n.to_string(), coeffs.get(n).to_string()]);
                    }
                    table.render(out.format)?
                }
            };
            emit(&out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { family, n, out } => {
            let family = family.family();
            let started = Instant::now();
            let mut session = EnumSession::new(family, budget_from_env());
            let mut report = session.count_classes(n)?;
            report.elapsed = Some(started.elapsed());
            // stdout stays byte-identical across runs; timing goes to stderr
            emit(&out, &render_report(&report, out.format)?)?;
            if let Some(d) = report.elapsed {
                eprintln!("elapsed: {} ms", d.as_millis());
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            all,
            family,
            max_n,
            skip_point_groups,
            out,
        } => {
            let families: Vec<Family> = match (all, family) {
                (_, Some(f)) => vec![f.family()],
                _ => Family::ALL.to_vec(),
            };
            let (text, ok) = run_verify(&families, max_n, skip_point_groups, out.format)?;
            emit(&out, &text)?;
            Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn build_param(args: &ParamArgs) -> Result<RotParam, CslError> {
    let family = args.family.family();
    let param = match family {
        Family::D4Star | Family::Z4 => {
            let p = args
                .p
                .as_deref()
                .ok_or_else(|| CslError::Parse("this family needs both --q and --p".into()))?;
            let q: HurwitzQuat = args.q.parse()?;
            let p: HurwitzQuat = p.parse()?;
            RotParam::hurwitz_pair(&q, &p)?
        }
        Family::A4 => {
            if args.p.is_some() {
                return Err(CslError::Parse("a4 takes a single quaternion --q".into()));
            }
            let q: Icosian = args.q.parse()?;
            RotParam::icosian_single(&q)?
        }
        Family::IcosianRing => {
            let p = args
                .p
                .as_deref()
                .ok_or_else(|| CslError::Parse("this family needs both --q and --p".into()))?;
            let q: Icosian = args.q.parse()?;
            let p: Icosian = p.parse()?;
            RotParam::icosian_pair(&q, &p)?
        }
    };
    if param.was_normalized() {
        eprintln!("note: parameters were normalized (content removed or two-part split off)");
    }
    Ok(param)
}

fn budget_from_env() -> Budget {
    match std::env::var(ENV_MAX_N)
        .ok()
        .and_then(|v| v.parse::<u64>().ok())
    {
        Some(n) => Budget::with_max(n),
        None => Budget::default(),
    }
}

fn default_verify_max(family: Family) -> u64 {
    match family {
        Family::D4Star => 17,
        Family::Z4 => 10,
        Family::A4 => 11,
        Family::IcosianRing => 9,
    }
}

fn render_report(report: &EnumReport, fmt: FormatArg) -> Result<String, CslError> {
    match fmt {
        FormatArg::Json => {
            let witnesses: Vec<serde_json::Value> = report
                .witnesses
                .iter()
                .map(|w| serde_json::Value::String(w.to_string()))
                .collect();
            let v = serde_json::json!({
                "family": report.family.name(),
                "n": report.n,
                "rotation_classes": report.rotation_class_count,
                "distinct_csls": report.distinct_csl_count,
                "witnesses": witnesses,
            });
            Ok(format!("{v}\n"))
        }
        FormatArg::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "family,n,rotation_classes,distinct_csls");
            let _ = writeln!(
                s,
                "{},{},{},{}",
                report.family.name(),
                report.n,
                report.rotation_class_count,
                report.distinct_csl_count
            );
            for w in &report.witnesses {
                let _ = writeln!(s, "witness,{w}");
            }
            Ok(s)
        }
        FormatArg::Plain => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "family={} n={} rotation_classes={} distinct_csls={}",
                report.family.name(),
                report.n,
                report.rotation_class_count,
                report.distinct_csl_count
            );
            for w in &report.witnesses {
                let _ = writeln!(s, "witness: {w}");
            }
            Ok(s)
        }
    }
}

fn run_verify(
    families: &[Family],
    max_n: Option<u64>,
    skip_point_groups: bool,
    fmt: FormatArg,
) -> Result<(String, bool), CslError> {
    let mut table = Table::new(&["check", "family", "n", "expected", "got", "status"]);
    let mut all_ok = true;
    let budget = budget_from_env();
    let check =
        |table: &mut Table, name: &str, family: &str, n: String, expected: String, got: String| {
            let ok = expected == got;
            table.row(&[
                name.to_string(),
                family.to_string(),
                n,
                expected,
                got,
                if ok { "ok" } else { "FAIL" }.to_string(),
            ]);
            ok
        };
    for &family in families {
        let top = max_n
            .unwrap_or_else(|| default_verify_max(family))
            .min(budget.max_n(family));
        let mut session = EnumSession::new(family, budget);
        for n in 1..=top {
            let report = session.count_classes(n)?;
            all_ok &= check(
                &mut table,
                "classes",
                family.name(),
                n.to_string(),
                f_rot(family, n)?.to_string(),
                report.rotation_class_count.to_string(),
            );
            all_ok &= check(
                &mut table,
                "csls",
                family.name(),
                n.to_string(),
                f_csl(family, n)?.to_string(),
                report.distinct_csl_count.to_string(),
            );
            let witnesses_ok = report.witnesses.iter().all(|w| {
                let closed = csl_closed(family, w);
                let brute = csl_brute(family, w);
                let idx = closed.as_ref().ok().map(|m| {
                    FreeModule::index_in(m, &family.gamma()).ok() == Some(BigInt::from(n))
                });
                matches!((closed, brute, idx), (Ok(c), Ok(b), Some(true)) if c == b)
            });
            all_ok &= check(
                &mut table,
                "witnesses",
                family.name(),
                n.to_string(),
                "closed=brute".to_string(),
                if witnesses_ok {
                    "closed=brute"
                } else {
                    "mismatch"
                }
                .to_string(),
            );
        }
        if family == Family::D4Star {
            for n in [1u64, 3, 5, 7, 9] {
                if n > top {
                    continue;
                }
                all_ok &= check(
                    &mut table,
                    "pair-criterion",
                    family.name(),
                    n.to_string(),
                    "equivalent".to_string(),
                    if verify_pair_criterion(n)? {
                        "equivalent"
                    } else {
                        "broken"
                    }
                    .to_string(),
                );
            }
        }
        if !skip_point_groups {
            let got = csl4_core::coincidence::point_group_rotations(family).len() as u64;
            all_ok &= check(
                &mut table,
                "point-group",
                family.name(),
                "1".to_string(),
                family.group_order().to_string(),
                got.to_string(),
            );
        }
    }
    Ok((table.render(fmt)?, all_ok))
}

fn emit(out: &OutArgs, text: &str) -> Result<(), CslError> {
    match &out.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| CslError::Parse(format!("cannot create {}: {e}", path.display())))?;
            f.write_all(text.as_bytes())
                .map_err(|e| CslError::Parse(format!("write failed: {e}")))?;
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> i32 {
        run(std::iter::once("csl4".to_string()).chain(args.iter().map(|s| s.to_string())))
    }

    #[test]
    fn usage_errors_exit_3() {
        assert_eq!(run_args(&["sigma", "--family", "d4"]), EXIT_USAGE); // missing --q
        assert_eq!(run_args(&["nonsense"]), EXIT_USAGE);
        assert_eq!(
            run_args(&["sigma", "--family", "a4", "--q", "1,1,0,0", "--p", "1,0,0,0"]),
            EXIT_USAGE
        );
    }

    #[test]
    fn domain_errors_exit_1() {
        // not admissible
        assert_eq!(
            run_args(&["sigma", "--family", "d4", "--q", "1,1,1,0", "--p", "1,0,0,0"]),
            EXIT_DOMAIN
        );
        // not in the ring (mixed parity)
        assert_eq!(
            run_args(&[
                "sigma",
                "--family",
                "d4",
                "--q",
                "1/2,0,0,0",
                "--p",
                "1,0,0,0"
            ]),
            EXIT_DOMAIN
        );
    }
}
