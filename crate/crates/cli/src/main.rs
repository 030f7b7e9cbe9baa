use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use defrost_core::families::{FamilyKind, FamilySpec};
use defrost_core::verify::{Grid, IdentityId};
use defrost_core::Rational;

mod commands;
mod output;

const DEFAULT_CAP: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "defrost", version, about = "Exact degenerate Frobenius-Euler polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one polynomial, or its value at --x.
    Poly(PolyArgs),
    /// Print numbers, values or coefficient lists for n = 0..=max-n.
    Table(TableArgs),
    /// Check identities over a parameter grid.
    Verify(VerifyArgs),
    /// Apply the Stirling-weighted transform between degenerate and classical families.
    Convert(ConvertArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Dfe,
    #[value(name = "dfe-r")]
    DfeR,
    Dbern,
    Dgen,
    Cfe,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Dfe => FamilyKind::DegFrobeniusEuler,
            FamilyArg::DfeR => FamilyKind::DegFrobeniusEulerOrderR,
            FamilyArg::Dbern => FamilyKind::DegBernoulli,
            FamilyArg::Dgen => FamilyKind::DegGenocchi,
            FamilyArg::Cfe => FamilyKind::ClassicalFrobeniusEuler,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    /// Order r (dfe-r and cfe).
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    order: i64,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: usize,
    /// Evaluate at this point instead of printing coefficients.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Rational>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Evaluate every row at this point (default: the numbers, x = 0).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "poly")]
    x: Option<Rational>,
    /// Print coefficient lists instead of numbers.
    #[arg(long)]
    poly: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity name, or `all`.
    #[arg(long, default_value = "all")]
    identity: String,
    #[arg(long, allow_hyphen_values = true)]
    u: Vec<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Vec<Rational>,
    #[arg(long)]
    d: Vec<u32>,
    #[arg(long, allow_hyphen_values = true)]
    order: Vec<i64>,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    #[value(name = "h2H")]
    HToBigH,
    #[value(name = "H2h")]
    BigHToH,
}

#[derive(Args, Debug)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    direction: Direction,
    #[arg(long, allow_hyphen_values = true)]
    u: Rational,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Rational,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    order: i64,
    #[arg(long, default_value_t = 12)]
    max_m: usize,
    /// Apply the inverse transform afterwards and compare with the input.
    #[arg(long)]
    round_trip: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

/// Parameter or usage problem, reported on stderr with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Largest admissible n; `DEFROST_MAX_N` overrides the default cap.
fn cap() -> Result<usize, UsageError> {
    match std::env::var("DEFROST_MAX_N") {
        Ok(v) => v
            .parse()
            .map_err(|_| UsageError(format!("DEFROST_MAX_N must be a nonnegative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn check_cap(flag: &str, n: usize) -> Result<(), UsageError> {
    let cap = cap()?;
    if n > cap {
        return Err(UsageError(format!("{flag} {n} exceeds the cap {cap} (set DEFROST_MAX_N to raise it)")));
    }
    Ok(())
}

fn order(r: i64) -> Result<u32, UsageError> {
    u32::try_from(r)
        .ok()
        .filter(|&r| r >= 1)
        .ok_or_else(|| UsageError(format!("order r must be at least 1, got {r}")))
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, UsageError> {
        let kind = FamilyKind::from(self.family);
        let order = order(self.order)?;
        if order != 1 && !kind.uses_order() {
            return Err(UsageError(format!("--order applies only to dfe-r and cfe, not {}", kind.cli_name())));
        }
        if kind.uses_u() && self.u.is_none() {
            return Err(UsageError(format!("--u is required for family {}", kind.cli_name())));
        }
        let lambda = match (&self.lambda, kind.uses_lambda()) {
            (Some(l), _) => l.clone(),
            (None, false) => Rational::zero(),
            (None, true) => {
                return Err(UsageError(format!("--lambda is required for family {}", kind.cli_name())))
            }
        };
        Ok(FamilySpec::new(kind, self.u.clone(), lambda, order)?)
    }
}

impl VerifyArgs {
    fn identities(&self) -> Result<Vec<IdentityId>, UsageError> {
        if self.identity == "all" {
            Ok(IdentityId::ALL.to_vec())
        } else {
            Ok(vec![self.identity.parse::<IdentityId>()?])
        }
    }

    fn grid(&self) -> Result<Grid, UsageError> {
        let or_default = |given: &[Rational], default: Vec<Rational>| {
            if given.is_empty() {
                default
            } else {
                given.to_vec()
            }
        };
        let us = or_default(&self.u, Grid::default_us());
        let lambdas = or_default(&self.lambda, Grid::default_lambdas());
        let orders = if self.order.is_empty() {
            Grid::default_orders()
        } else {
            self.order.iter().map(|&r| order(r)).collect::<Result<_, _>>()?
        };
        let ds = if self.d.is_empty() { Grid::default_ds() } else { self.d.clone() };
        if let Some(d) = ds.iter().find(|&&d| d < 1) {
            return Err(UsageError(format!("d must be at least 1, got {d}")));
        }
        Ok(Grid::from_axes(&us, &lambdas, orders, ds))
    }
}

fn run(cli: Cli) -> Result<(String, ExitCode), UsageError> {
    match cli.command {
        Command::Poly(args) => {
            check_cap("--n", args.n)?;
            let spec = args.family.spec()?;
            Ok((commands::poly(&spec, args.n, args.x.as_ref(), args.format)?, ExitCode::SUCCESS))
        }
        Command::Table(args) => {
            check_cap("--max-n", args.max_n)?;
            let spec = args.family.spec()?;
            let mode = match (&args.x, args.poly) {
                (_, true) => commands::TableMode::Coefficients,
                (Some(x), false) => commands::TableMode::Values(x.clone()),
                (None, false) => commands::TableMode::Numbers,
            };
            Ok((commands::table(&spec, args.max_n, mode, args.format)?, ExitCode::SUCCESS))
        }
        Command::Verify(args) => {
            check_cap("--max-n", args.max_n)?;
            let identities = args.identities()?;
            let grid = args.grid()?;
            let (text, ok) = commands::verify(&identities, &grid, args.max_n);
            Ok((text, if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }))
        }
        Command::Convert(args) => {
            check_cap("--max-m", args.max_m)?;
            let r = order(args.order)?;
            if args.u.is_one() {
                return Err(UsageError(defrost_core::Error::UEqualsOne.to_string()));
            }
            let request = commands::ConvertRequest {
                to_classical: args.direction == Direction::HToBigH,
                u: args.u,
                lambda: args.lambda,
                order: r,
                max_m: args.max_m,
                round_trip: args.round_trip,
            };
            let (text, ok) = commands::convert(&request, args.format)?;
            Ok((text, if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
