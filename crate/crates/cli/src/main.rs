mod commands;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pendulum_agm::{ApproxMethod, BoundKind, Error};

use commands::{PeriodArgs, PeriodMethod, TableArgs};
use report::{AngleUnit, Format, OutputSpec, Report};

const STANDARD_GRAVITY: f64 = 9.80665;

/// Pendulum periods via the arithmetic-geometric mean, with rigorous error bounds.
#[derive(Debug, Parser)]
#[command(name = "pendulum-agm", version)]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Unit for angles on input and output.
    #[arg(long, global = true, value_enum, default_value = "deg")]
    unit: AngleUnit,

    /// Significant digits in printed numbers.
    #[arg(long, global = true, default_value_t = 12,
          value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodName {
    Exact,
    Huygens,
    P2,
    Bernoulli,
    Series,
    AgmArithmetic,
    AgmGeometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Trace,
    Closed,
}

impl From<KindArg> for BoundKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Trace => BoundKind::GeneralTrace,
            KindArg::Closed => BoundKind::ClosedForm,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Period of one pendulum, exact or by an approximation.
    Period {
        #[arg(long, allow_negative_numbers = true)]
        amplitude: f64,
        /// Length in metres.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        length: f64,
        /// Gravitational acceleration in m/s².
        #[arg(long, default_value_t = STANDARD_GRAVITY, allow_negative_numbers = true)]
        gravity: f64,
        #[arg(long, value_enum, default_value = "exact")]
        method: MethodName,
        /// Series order (1..=4, default 4) or AGM step count (default 3).
        #[arg(long)]
        order: Option<usize>,
        /// Cross-check against the quadrature oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Error bound for the order-n AGM approximant and the measured errors.
    Bounds {
        #[arg(long, allow_negative_numbers = true)]
        amplitude: f64,
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(long, value_enum, default_value = "trace")]
        kind: KindArg,
    },
    /// Largest amplitude whose error bound stays within epsilon.
    Threshold {
        #[arg(long)]
        order: usize,
        #[arg(long, allow_negative_numbers = true)]
        epsilon: f64,
        #[arg(long, value_enum, default_value = "closed")]
        kind: KindArg,
    },
    /// Iterate the period-preserving renormalization map.
    Renorm {
        #[arg(long, allow_negative_numbers = true)]
        amplitude: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        length: f64,
        #[arg(long, default_value_t = STANDARD_GRAVITY, allow_negative_numbers = true)]
        gravity: f64,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Compare approximations over a range of amplitudes.
    Table {
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        /// Defaults to `from` (a single row).
        #[arg(long, allow_negative_numbers = true)]
        to: Option<f64>,
        #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
        step: f64,
        /// Comma-separated, e.g. huygens,bernoulli,series:4,agm-arithmetic:2.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "huygens,p2,bernoulli,agm-arithmetic:2,agm-geometric:2"
        )]
        methods: Vec<String>,
    },
}

fn period_method(name: MethodName, order: Option<usize>) -> pendulum_agm::Result<PeriodMethod> {
    let spec = match (name, order) {
        (
            MethodName::Exact | MethodName::Huygens | MethodName::P2 | MethodName::Bernoulli,
            Some(_),
        ) => {
            return Err(Error::Domain(
                format!("method {name:?} takes no --order").to_lowercase(),
            ));
        }
        (MethodName::Exact, None) => return Ok(PeriodMethod::Exact),
        (MethodName::Huygens, None) => "huygens".to_string(),
        (MethodName::P2, None) => "p2".to_string(),
        (MethodName::Bernoulli, None) => "bernoulli".to_string(),
        (MethodName::Series, n) => format!("series:{}", n.unwrap_or(4)),
        (MethodName::AgmArithmetic, n) => format!("agm-arithmetic:{}", n.unwrap_or(3)),
        (MethodName::AgmGeometric, n) => format!("agm-geometric:{}", n.unwrap_or(3)),
    };
    Ok(PeriodMethod::Approx(spec.parse()?))
}

fn run(cli: &Cli, out: &OutputSpec) -> pendulum_agm::Result<Report> {
    match &cli.command {
        Command::Period {
            amplitude,
            length,
            gravity,
            method,
            order,
            verify,
        } => commands::period(
            &PeriodArgs {
                amplitude: *amplitude,
                length: *length,
                gravity: *gravity,
                method: period_method(*method, *order)?,
                verify: *verify,
            },
            out,
        ),
        Command::Bounds {
            amplitude,
            order,
            kind,
        } => commands::bounds(*amplitude, *order, (*kind).into(), out),
        Command::Threshold {
            order,
            epsilon,
            kind,
        } => commands::threshold(*order, *epsilon, (*kind).into(), out),
        Command::Renorm {
            amplitude,
            length,
            gravity,
            steps,
        } => commands::renorm(*amplitude, *length, *gravity, *steps, out),
        Command::Table {
            from,
            to,
            step,
            methods,
        } => {
            let methods = methods
                .iter()
                .map(|m| m.parse::<ApproxMethod>())
                .collect::<pendulum_agm::Result<Vec<_>>>()?;
            commands::table(
                &TableArgs {
                    from: *from,
                    to: to.unwrap_or(*from),
                    step: *step,
                    methods,
                },
                out,
            )
        }
    }
}

/// 2 for bad input, 3 when the numerics failed to converge.
fn exit_code(e: &Error) -> u8 {
    if e.is_numerical() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = OutputSpec {
        format: cli.output.format,
        unit: cli.output.unit,
        precision: cli.output.precision as usize,
    };
    match run(&cli, &out) {
        Ok(report) => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            if let Err(e) = report.render(&out, &mut lock).and_then(|_| lock.flush()) {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::FAILURE;
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
