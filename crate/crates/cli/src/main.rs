//! `motivic`: series, Hodge tables, Omega classes, strata and verification.
//!
//! Exit codes: 0 success, 1 failed verification, 2 invalid parameters,
//! 3 failed exact division.

mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motivic::motives::{zeta, MotiveClass};
use motivic::plethystic::EffSeries;
use motivic::quot::{
    goettsche, hodge_numbers, hodge_product, omega_extract, omega_from_surface, poincare_product, punctual_curve,
    punctual_surface, quot_curve, strata,
};
use motivic::verify::{run_suite, Suite, VerifyConfig, DEFAULT_INSTANCES, DEFAULT_SEED};
use motivic::{BiPoly, Error};

use render::Format;

#[derive(Parser)]
#[command(name = "motivic", version, about = "Motivic power structures and Quot-scheme generating series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generating series truncated at `--order`.
    Series {
        kind: SeriesKind,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        order: Order,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hodge numbers h^{p,q} of Quot_C(O^r, n) for n <= nmax.
    Table {
        #[arg(long, default_value_t = 0)]
        g: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Omega classes of a punctual series, or of the Hilbert series of a surface.
    Omega {
        source: OmegaSource,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        order: Order,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Strata of the t^n coefficient of B(t)^m by support type.
    Strata {
        base: StrataBase,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// Exponent given as a class descriptor; its E-polynomial is used.
        #[arg(long, conflicts_with = "m")]
        class: Option<MotiveClass>,
        /// Exponent given as a polynomial in u, v.
        #[arg(long)]
        m: Option<BiPoly>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[command(flatten)]
        order: Order,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random instances per randomized check.
        #[arg(long, default_value_t = DEFAULT_INSTANCES)]
        instances: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct Params {
    /// Genus of the curve.
    #[arg(long, default_value_t = 0)]
    g: u32,
    /// Rank of the trivial bundle.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    r: u32,
    /// Class descriptor: point, A^d, P^n, curve(g), L^s, raw(<poly>), or a product joined by '*'.
    #[arg(long)]
    class: Option<MotiveClass>,
}

#[derive(Args)]
struct Order {
    /// Truncation order.
    #[arg(long, env = "MOTIVIC_ORDER", default_value_t = 10)]
    order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    QuotCurve,
    PunctualCurve,
    Goettsche,
    PunctualSurface,
    HodgeProduct,
    PoincareProduct,
    Zeta,
}

#[derive(Clone, Copy, ValueEnum)]
enum OmegaSource {
    PunctualCurve,
    PunctualSurface,
    /// Log of the Hilbert series of `--class`, divided by its E-polynomial.
    Surface,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrataBase {
    PunctualCurve,
    PunctualSurface,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    Curve,
    Surface,
    Oracle,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Axioms => Suite::Axioms,
            SuiteArg::Curve => Suite::Curve,
            SuiteArg::Surface => Suite::Surface,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Failure {
    Verify(String),
    Usage(String),
    Arithmetic(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonIntegralResult { .. } => Failure::Arithmetic(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn require_class(params: &Params, what: &str) -> Result<MotiveClass, Failure> {
    params.class.clone().ok_or_else(|| Failure::Usage(format!("{what} needs --class")))
}

fn series(kind: SeriesKind, p: &Params, order: usize) -> Result<EffSeries, Failure> {
    Ok(match kind {
        SeriesKind::QuotCurve => quot_curve(p.g, p.r, order),
        SeriesKind::PunctualCurve => punctual_curve(p.r, order),
        SeriesKind::Goettsche => goettsche(&p.class.clone().unwrap_or_else(|| MotiveClass::affine(2)), order)?,
        SeriesKind::PunctualSurface => punctual_surface(order),
        SeriesKind::HodgeProduct => hodge_product(p.g, p.r, order),
        SeriesKind::PoincareProduct => poincare_product(p.g, p.r, order),
        SeriesKind::Zeta => zeta(&require_class(p, "zeta")?, order),
    })
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Series { kind, params, order, format } => {
            Ok(render::series(series(kind, &params, order.order)?.series(), format))
        }
        Command::Table { g, r, nmax, format } => Ok(render::hodge_table(&hodge_numbers(g, r, nmax), format)),
        Command::Omega { source, params, order, format } => {
            let order = order.order;
            let om = match source {
                OmegaSource::PunctualCurve => omega_extract(&punctual_curve(params.r, order), order)?,
                OmegaSource::PunctualSurface => omega_extract(&punctual_surface(order), order)?,
                OmegaSource::Surface => {
                    let s = require_class(&params, "omega surface")?;
                    omega_from_surface(&s, order)?
                        .ok_or_else(|| Failure::Arithmetic(format!("Log coefficients are not divisible by E({s})")))?
                }
            };
            Ok(render::omegas(&om, format))
        }
        Command::Strata { base, r, class, m, n, format } => {
            let m = match (class, m) {
                (Some(c), None) => c.e_poly().clone(),
                (None, Some(m)) => m,
                _ => return Err(Failure::Usage("strata needs --class or --m".into())),
            };
            let b = match base {
                StrataBase::PunctualCurve => punctual_curve(r, n),
                StrataBase::PunctualSurface => punctual_surface(n),
            };
            Ok(render::strata(&strata(&b, &m, n)?, format))
        }
        Command::Verify { suite, order, seed, instances, format } => {
            let config = VerifyConfig { order: order.order, seed, instances };
            let suite = Suite::from(suite);
            let reports = run_suite(suite, &config);
            let out = render::verify(suite, &config, &reports, format);
            if reports.iter().all(|r| r.passed()) {
                Ok(out)
            } else {
                Err(Failure::Verify(out))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let code = match run(cli.command) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(Failure::Verify(out)) => {
            let _ = stdout.write_all(out.as_bytes());
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Arithmetic(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    };
    ExitCode::from(code)
}
