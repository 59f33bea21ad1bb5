//! `dickson`: generate, tabulate, evaluate and verify the Lucas / Fibonacci /
//! Chebyshev / Dickson families from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use dickson::families::{companion, family_recurrence, family_sequence, Kind, Sign};
use dickson::identities::{run_all, Verifier, VerifyConfig, VERIFIER_IDS};
use dickson::seq_eval::{bench, family_value, SeqTarget, Strategy, BENCH_CSV_HEADER};
use dickson::{Error, Exec, FamilyId, Style};

#[derive(Parser, Debug)]
#[command(
    name = "dickson",
    version,
    about = "Lucas, Fibonacci, Chebyshev and Dickson polynomials from companion matrices"
)]
struct Cli {
    /// Also write stdout to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the n-th member of a family.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print members 0..=n-max, one per row.
    Table {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Exact value at an integer point.
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x: BigInt,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        y: BigInt,
        /// Cross-check against the expanded polynomial up to this n.
        #[arg(long, default_value_t = 64)]
        crosscheck: u64,
    },
    /// Run one verifier (or `all`) and stream JSON reports.
    Verify {
        id: String,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        tol: Option<f64>,
        /// Overrides every random-trial count.
        #[arg(long)]
        trials: Option<u32>,
        #[arg(long)]
        sequential: bool,
    },
    /// Time recurrence vs matrix-power evaluation; CSV on stdout.
    Bench {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        reps: u32,
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x: BigInt,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        y: BigInt,
    },
    /// Print the n-th power or symmetric power of a family's companion matrix.
    Matrix {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MatrixKind::Power)]
        kind: MatrixKind,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// A family name, or `dixon` together with --c and --sign.
    #[arg(long)]
    family: String,
    #[arg(long)]
    c: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
    Csv,
}

impl From<Format> for Style {
    fn from(f: Format) -> Style {
        match f {
            Format::Plain => Style::Plain,
            Format::Latex => Style::Latex,
            Format::Json => Style::Json,
            Format::Csv => Style::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Recurrence,
    #[value(name = "matrix_pow", alias = "matrix-pow")]
    MatrixPow,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixKind {
    Power,
    Sym,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Input(_) | Error::Capacity { .. } | Error::Parse(_) => {
                Failure::Usage(e.to_string())
            }
            Error::Exactness { .. } | Error::IdentityViolation(_) => {
                Failure::Verification(e.to_string())
            }
        }
    }
}

const FAMILY_HELP: &str =
    "families: dixon (with --c 1|2 --sign +|-), dickson-std-1, dickson-std-2, \
dickson-reg-1, dickson-reg-2, chebyshev-t, chebyshev-u, reduced-t, reduced-u, lucas, fibonacci";

impl FamilyArgs {
    fn resolve(&self) -> Result<FamilyId, Failure> {
        match self.family.as_str() {
            "dixon" | "dickson" => {
                let (Some(c), Some(sign)) = (self.c, self.sign.as_deref()) else {
                    return Err(Failure::Usage("`dixon` needs --c and --sign".into()));
                };
                Ok(FamilyId::dickson(
                    Kind::from_constant(c)?,
                    sign.parse::<Sign>()?,
                ))
            }
            name => name
                .parse()
                .map_err(|e: Error| Failure::Usage(format!("{e}\n{FAMILY_HELP}"))),
        }
    }
}

fn table(f: FamilyId, n_max: u32, format: Format) -> String {
    let rows = family_sequence(f, n_max);
    let mut out = String::new();
    match format {
        Format::Plain | Format::Latex => {
            for p in &rows {
                out.push_str(&p.format(format.into()));
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str("n,polynomial\n");
            for (n, p) in rows.iter().enumerate() {
                out.push_str(&format!("{n},{p}\n"));
            }
        }
        Format::Json => {
            for (n, p) in rows.iter().enumerate() {
                let mut row = serde_json::to_value(p).expect("polynomial serializes");
                row["n"] = n.into();
                out.push_str(&row.to_string());
                out.push('\n');
            }
        }
    }
    out
}

fn eval(f: FamilyId, n: u64, x: &BigInt, y: &BigInt, crosscheck: u64) -> Result<String, Failure> {
    let value = family_value(f, n, x, y)?;
    if n <= crosscheck {
        let expanded = family_recurrence(f, n as u32).eval_int(x, y);
        if expanded != value {
            return Err(Failure::Verification(format!(
                "matrix power gives {value}, expanded polynomial gives {expanded} ({f}, n = {n})"
            )));
        }
    }
    Ok(format!("{value}\n"))
}

fn verify(
    id: &str,
    n_max: Option<u32>,
    seed: u64,
    tol: Option<f64>,
    trials: Option<u32>,
    sequential: bool,
) -> Result<(String, bool), Failure> {
    let mut config = VerifyConfig {
        seed,
        exec: if sequential {
            Exec::Sequential
        } else {
            Exec::default()
        },
        ..VerifyConfig::default()
    };
    if let Some(n) = n_max {
        config = config.with_n_max(n);
    }
    if let Some(tol) = tol {
        if !tol.is_finite() || tol <= 0.0 {
            return Err(Failure::Usage("--tol must be positive".into()));
        }
        config.tol = tol;
    }
    if let Some(t) = trials {
        config.lemma_trials = t;
        config.prop1_trials = t;
        config.sym_definition_trials = t;
        config.det_trials = t;
    }
    let reports = if id == "all" {
        run_all(&config)?
    } else if VERIFIER_IDS.contains(&id) {
        vec![Verifier::new(config.exec).run_one(id, &config)?]
    } else {
        return Err(Failure::Usage(format!(
            "unknown identity `{id}`; expected `all` or one of: {}",
            VERIFIER_IDS.join(", ")
        )));
    };
    let mut out = String::new();
    for r in &reports {
        out.push_str(&r.to_json());
        out.push('\n');
    }
    Ok((out, reports.iter().all(|r| r.passed)))
}

fn bench_csv(
    f: FamilyId,
    n: u64,
    reps: u32,
    strategy: Option<StrategyArg>,
    x: BigInt,
    y: BigInt,
) -> Result<String, Failure> {
    let target = SeqTarget::family(f, x, y);
    let strategies = match strategy {
        Some(StrategyArg::Recurrence) => vec![Strategy::Recurrence],
        Some(StrategyArg::MatrixPow) => vec![Strategy::MatrixPow],
        None => vec![Strategy::Recurrence, Strategy::MatrixPow],
    };
    let mut out = format!("{BENCH_CSV_HEADER}\n");
    for s in strategies {
        let record = bench(s, &target, n, reps)?;
        out.push_str(&record.csv_row());
        out.push('\n');
    }
    Ok(out)
}

fn matrix(f: FamilyId, n: u32, kind: MatrixKind, format: Format) -> Result<String, Failure> {
    let c = companion(f);
    let m = match kind {
        MatrixKind::Power => c.mat_pow(n),
        MatrixKind::Sym => c.sym_power(n)?,
    };
    Ok(match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&m).expect("matrix serializes")
        ),
        Format::Csv => {
            let mut out = String::new();
            for row in m.rows() {
                let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        Format::Plain | Format::Latex => {
            let mut out = String::new();
            for row in m.rows() {
                let cells: Vec<String> = row.iter().map(|p| p.format(format.into())).collect();
                out.push_str(&format!("[{}]\n", cells.join(", ")));
            }
            out
        }
    })
}

fn dispatch(command: Command) -> Result<(String, bool), Failure> {
    let ok = |s: String| Ok((s, true));
    match command {
        Command::Gen { family, n, format } => {
            let f = family.resolve()?;
            let mut s = family_recurrence(f, n).format(format.into());
            if !s.ends_with('\n') {
                s.push('\n');
            }
            ok(s)
        }
        Command::Table {
            family,
            n_max,
            format,
        } => ok(table(family.resolve()?, n_max, format)),
        Command::Eval {
            family,
            n,
            x,
            y,
            crosscheck,
        } => ok(eval(family.resolve()?, n, &x, &y, crosscheck)?),
        Command::Verify {
            id,
            n_max,
            seed,
            tol,
            trials,
            sequential,
        } => verify(&id, n_max, seed, tol, trials, sequential),
        Command::Bench {
            family,
            n,
            reps,
            strategy,
            x,
            y,
        } => ok(bench_csv(family.resolve()?, n, reps, strategy, x, y)?),
        Command::Matrix {
            family,
            n,
            kind,
            format,
        } => ok(matrix(family.resolve()?, n, kind, format)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok((stdout, passed)) => {
            print!("{stdout}");
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &stdout) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nusage: dickson <gen|table|eval|verify|bench|matrix> --help");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
