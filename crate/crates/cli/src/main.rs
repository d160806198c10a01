//! `macmahon`: expand MacMahon-type series, count partitions, and verify
//! the registered identities.

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use macmahon_core::identity::{count_passed, verify_grid, DEFAULT_A_MAX, DEFAULT_N_MAX};
use macmahon_core::{
    Error, Family, GridSpec, IdentityId, IdentityReport, Oracle, SeriesSpec, Sign, Truncation,
};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "macmahon",
    version,
    about = "MacMahon-type q-series: expansion, partition counts, identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SignChoice {
    Plus,
    Minus,
    Both,
}

impl SignChoice {
    fn signs(self) -> Vec<Sign> {
        match self {
            SignChoice::Plus => vec![Sign::Plus],
            SignChoice::Minus => vec![Sign::Minus],
            SignChoice::Both => Sign::BOTH.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Stat {
    #[value(name = "a+")]
    APlus,
    #[value(name = "a-")]
    AMinus,
    #[value(name = "c+")]
    CPlus,
    #[value(name = "c-")]
    CMinus,
    #[value(name = "p3")]
    P3,
    #[value(name = "overline-p")]
    Overpartitions,
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
}

impl Stat {
    fn name(self) -> &'static str {
        match self {
            Stat::APlus => "a+",
            Stat::AMinus => "a-",
            Stat::CPlus => "c+",
            Stat::CMinus => "c-",
            Stat::P3 => "p3",
            Stat::Overpartitions => "overline-p",
            Stat::P => "P",
            Stat::Q => "Q",
        }
    }
}

/// A single `n` or an inclusive range `a..b` (also `a..=b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct NRange {
    from: usize,
    to: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid n `{s}`"))
        };
        let (from, to) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if from > to {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Self { from, to })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of A_{k,m}^± or C_{k,m}^± up to q^order.
    Expand {
        /// A (all parts) or C (odd parts)
        family: Family,
        /// plus, minus, + or -
        #[arg(allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long)]
        k: u32,
        /// Number of parts, or `inf`
        #[arg(long, default_value = "inf")]
        m: Truncation,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Count partitions by brute-force enumeration.
    Stat {
        #[arg(value_enum)]
        stat: Stat,
        /// A single n or an inclusive range such as 0..4
        #[arg(long)]
        n: NRange,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Enumerate past the default bound on n
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify one identity, or all of them, over a parameter grid.
    Verify {
        /// Identity id, or `all`
        #[arg(conflicts_with = "identity", required_unless_present = "identity")]
        target: Option<String>,
        #[arg(long)]
        identity: Option<String>,
        #[arg(long, default_value_t = 30)]
        order: usize,
        /// Pin k instead of sweeping it
        #[arg(long)]
        k: Option<u32>,
        /// Pin m instead of sweeping it
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = 3)]
        max_k: u32,
        #[arg(long, default_value_t = 6)]
        max_m: u32,
        #[arg(long, value_enum, default_value_t = SignChoice::Both)]
        sign: SignChoice,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_A_MAX)]
        a_max: u32,
        /// Enumerate past the default bound on n
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Mismatch => f.write_str("at least one identity failed"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Expand {
            family,
            sign,
            k,
            m,
            order,
            format,
        } => expand(family, sign, k, m, order, format),
        Command::Stat {
            stat,
            n,
            k,
            m,
            l,
            s,
            t,
            force,
            format,
        } => {
            let args = StatArgs { k, m, l, s, t };
            stat_cmd(stat, n, &args, force, format)
        }
        Command::Verify {
            target,
            identity,
            order,
            k,
            m,
            max_k,
            max_m,
            sign,
            n_max,
            a_max,
            force,
            format,
        } => {
            let target = target.or(identity).unwrap_or_default();
            let grid = GridSpec {
                order,
                max_k,
                max_m,
                k,
                m,
                signs: sign.signs(),
                n_max,
                a_max,
            };
            verify_cmd(&target, &grid, force, format)
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(e @ Failure::Usage(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn decimal(v: &BigInt) -> String {
    v.to_string()
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report types serialize")
    );
}

#[derive(Serialize)]
struct ExpandOutput {
    family: Family,
    sign: Sign,
    k: u32,
    m: Truncation,
    order: usize,
    coeffs: Vec<String>,
}

fn expand(
    family: Family,
    sign: Sign,
    k: u32,
    m: Truncation,
    order: usize,
    format: Format,
) -> Result<(), Failure> {
    let series = SeriesSpec::new(family, sign, k, m, order).build();
    match format {
        Format::Text => println!("{family}_{{{k},{m}}}^{sign} = {series}"),
        Format::Json => print_json(&ExpandOutput {
            family,
            sign,
            k,
            m,
            order,
            coeffs: series.coeffs().iter().map(decimal).collect(),
        }),
    }
    Ok(())
}

#[derive(Serialize)]
struct StatArgs {
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
}

#[derive(Serialize)]
struct StatValue {
    n: usize,
    value: String,
}

#[derive(Serialize)]
struct StatOutput<'a> {
    stat: &'static str,
    params: &'a StatArgs,
    values: Vec<StatValue>,
}

fn require(value: Option<usize>, flag: &str, stat: Stat) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("`{}` needs --{flag}", stat.name())))
}

fn stat_cmd(
    stat: Stat,
    range: NRange,
    args: &StatArgs,
    force: bool,
    format: Format,
) -> Result<(), Failure> {
    let oracle = if force {
        Oracle::unguarded()
    } else {
        Oracle::default()
    };
    if let Err(e) = oracle.check(range.to) {
        return Err(Failure::Usage(format!(
            "{e}; pass --force to enumerate anyway"
        )));
    }
    let mut values = Vec::new();
    for n in range.from..=range.to {
        let v = match stat {
            Stat::APlus => oracle.a_stat(Sign::Plus, require(args.k, "k", stat)?, n)?,
            Stat::AMinus => oracle.a_stat(Sign::Minus, require(args.k, "k", stat)?, n)?,
            Stat::CPlus => oracle.c_stat(Sign::Plus, require(args.k, "k", stat)?, n)?,
            Stat::CMinus => oracle.c_stat(Sign::Minus, require(args.k, "k", stat)?, n)?,
            Stat::P3 => oracle.p3(n)?,
            Stat::Overpartitions => oracle.overpartition_count(n)?,
            Stat::P => {
                oracle.p_count(require(args.m, "m", stat)?, require(args.l, "l", stat)?, n)?
            }
            Stat::Q => oracle.q_count(
                require(args.m, "m", stat)?,
                require(args.s, "s", stat)?,
                require(args.t, "t", stat)?,
                n,
            )?,
        };
        values.push(StatValue {
            n,
            value: decimal(&v),
        });
    }
    match format {
        Format::Text if values.len() == 1 => println!("{}", values[0].value),
        Format::Text => {
            for v in &values {
                println!("{}\t{}", v.n, v.value);
            }
        }
        Format::Json => print_json(&StatOutput {
            stat: stat.name(),
            params: args,
            values,
        }),
    }
    Ok(())
}

fn verify_cmd(target: &str, grid: &GridSpec, force: bool, format: Format) -> Result<(), Failure> {
    let ids: Vec<IdentityId> = if target == "all" {
        // plus-only identities have nothing to check under a minus-only sweep
        IdentityId::ALL
            .into_iter()
            .filter(|id| !id.is_series() || id.has_both_signs() || grid.signs.contains(&Sign::Plus))
            .collect()
    } else {
        vec![target.parse::<IdentityId>()?]
    };
    let oracle = if force {
        Oracle::unguarded()
    } else {
        Oracle::default()
    };
    let reports = verify_grid(&ids, grid, &oracle)?;
    render_reports(&reports, format);
    let passed = count_passed(&reports);
    if passed == reports.len() {
        Ok(())
    } else {
        for r in reports.iter().filter(|r| !r.passed()) {
            eprintln!("failed: {r}");
        }
        Err(Failure::Mismatch)
    }
}

fn render_reports(reports: &[IdentityReport], format: Format) {
    match format {
        Format::Text => {
            for r in reports {
                println!("{r}");
            }
            println!("{}/{} passed", count_passed(reports), reports.len());
        }
        Format::Json => print_json(&reports),
    }
}
