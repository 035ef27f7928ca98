//! Command-line front end: `analyze`, `table`, `profile` and `sweep`.
//!
//! Exit codes: 0 success, 1 bad usage (flags, ranges, unknown table, I/O),
//! 2 invalid physical parameters, 3 solver failure. `table` exits 0 iff no
//! row is a FAIL (3 otherwise); `sweep` exits 3 only when every row fails.

mod config;
pub mod format;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::analysis::{analyze_with, reproduce_table_with, table_spec, Tolerances};
use crate::asymptotic::AsymptoticModel;
use crate::error::Error;
use crate::oracle::OracleSettings;
use crate::params::{effective_potential, SystemParams, DEFAULT_DIM, DEFAULT_MASS};
use config::{parse_list, parse_value, read_config};
use format::{csv_line, MISSING};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cornell-lab",
    version,
    about = "Ground-state analysis of the Cornell potential -a/r + b r"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one configuration.
    Analyze(CommonArgs),
    /// Reproduce a published reference table (1, 2 or 3).
    Table {
        id: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Sample the energy-correction profile on a uniform radial grid.
    Profile {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long = "r-min", allow_hyphen_values = true)]
        r_min: Option<String>,
        #[arg(long = "r-max", allow_hyphen_values = true)]
        r_max: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        steps: Option<String>,
    },
    /// Analyze every point of a parameter grid; a, b, N and l accept
    /// comma lists (`0.01,1,100`) or inclusive ranges (`start:stop[:step]`).
    Sweep(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
}

#[derive(Debug, Args, Default)]
pub struct CommonArgs {
    /// Coulomb strength a >= 0.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// String tension b > 0.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Reduced mass (default 0.5, i.e. 2m = 1).
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// Spatial dimension (default 3).
    #[arg(long = "N", allow_hyphen_values = true)]
    pub dim: Option<String>,
    /// Orbital quantum number (default 0).
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flat `key = value` file mirroring the flags; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Oracle target error in GeV (default 1e-6).
    #[arg(long, allow_hyphen_values = true)]
    pub tol: Option<String>,
}

/// Failure carrying its exit code and message.
#[derive(Debug)]
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn from_error(err: &Error) -> Self {
        Self {
            code: if err.is_domain_error() {
                EXIT_DOMAIN
            } else {
                EXIT_SOLVER
            },
            message: err.to_string(),
        }
    }
}

type CmdResult = std::result::Result<(String, i32), Exit>;

/// Flags merged over the optional config file.
struct Settings {
    values: BTreeMap<String, String>,
    format: OutputFormat,
    out: Option<PathBuf>,
}

impl Settings {
    fn merge(common: &CommonArgs, extra: &[(&str, &Option<String>)]) -> Result<Self, Exit> {
        let mut values = match &common.config {
            Some(path) => read_config(path).map_err(Exit::usage)?,
            None => BTreeMap::new(),
        };
        let flags = [
            ("a", &common.a),
            ("b", &common.b),
            ("m", &common.m),
            ("N", &common.dim),
            ("l", &common.l),
            ("tol", &common.tol),
        ];
        for (key, value) in flags.iter().chain(extra) {
            if let Some(v) = value {
                values.insert((*key).to_string(), v.clone());
            }
        }
        let format = match (common.format, values.get("format")) {
            (Some(f), _) => f,
            (None, Some(s)) => OutputFormat::from_str(s, true)
                .map_err(|_| Exit::usage(format!("invalid format '{s}' (expected text or csv)")))?,
            (None, None) => OutputFormat::Text,
        };
        let out = common
            .out
            .clone()
            .or_else(|| values.get("out").map(PathBuf::from));
        Ok(Self {
            values,
            format,
            out,
        })
    }

    fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, Exit> {
        self.values
            .get(key)
            .map(|s| parse_value(key, s).map_err(Exit::usage))
            .transpose()
    }

    fn require<T: std::str::FromStr>(&self, key: &str) -> Result<T, Exit> {
        self.get(key)?
            .ok_or_else(|| Exit::usage(format!("missing required flag --{key}")))
    }

    fn oracle(&self) -> Result<OracleSettings, Exit> {
        let mut settings = OracleSettings::default();
        if let Some(tol) = self.get::<f64>("tol")? {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(Exit::usage(format!("--tol must be positive (got {tol})")));
            }
            settings.target_error = tol;
        }
        Ok(settings)
    }

    fn params(&self) -> Result<SystemParams, Exit> {
        let a: f64 = self.require("a")?;
        let b: f64 = self.require("b")?;
        let m: f64 = self.get("m")?.unwrap_or(DEFAULT_MASS);
        let dim: i32 = self.get("N")?.unwrap_or(DEFAULT_DIM);
        let l: i32 = self.get("l")?.unwrap_or(0);
        SystemParams::new(a, b, m, dim, l).map_err(|e| Exit::from_error(&e))
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let (settings, outcome) = match dispatch(&cli.command) {
        Ok((settings, outcome)) => (Some(settings), outcome),
        Err(exit) => (None, Err(exit)),
    };
    match outcome {
        Ok((body, code)) => {
            let written = match settings.as_ref().and_then(|s| s.out.as_ref()) {
                Some(path) => std::fs::write(path, &body)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(body.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_USAGE
                }
            }
        }
        Err(exit) => {
            let _ = writeln!(stderr, "error: {}", exit.message);
            exit.code
        }
    }
}

fn dispatch(command: &Command) -> Result<(Settings, CmdResult), Exit> {
    Ok(match command {
        Command::Analyze(common) => {
            let s = Settings::merge(common, &[])?;
            let r = cmd_analyze(&s);
            (s, r)
        }
        Command::Table { id, common } => {
            let s = Settings::merge(common, &[])?;
            let r = cmd_table(id, &s);
            (s, r)
        }
        Command::Profile {
            common,
            r_min,
            r_max,
            steps,
        } => {
            let s = Settings::merge(
                common,
                &[("r-min", r_min), ("r-max", r_max), ("steps", steps)],
            )?;
            let r = cmd_profile(&s);
            (s, r)
        }
        Command::Sweep(common) => {
            let s = Settings::merge(common, &[])?;
            let r = cmd_sweep(&s);
            (s, r)
        }
    })
}

fn cmd_analyze(s: &Settings) -> CmdResult {
    let p = s.params()?;
    let res = analyze_with(&p, &s.oracle()?).map_err(|e| Exit::from_error(&e))?;
    let body = match s.format {
        OutputFormat::Text => format::result_text(&res),
        OutputFormat::Csv => {
            csv_line(&format::RESULT_COLUMNS) + &csv_line(&format::result_fields(&res))
        }
    };
    Ok((body, EXIT_OK))
}

fn cmd_table(id: &str, s: &Settings) -> CmdResult {
    let spec = id
        .trim()
        .parse::<u8>()
        .ok()
        .and_then(table_spec)
        .ok_or_else(|| Exit::usage(format!("unknown table '{id}' (expected 1, 2 or 3)")))?;
    let report = reproduce_table_with(&spec, &Tolerances::REPORT, &s.oracle()?);
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|c| format::comparison_fields(&report, c))
        .collect();
    let body = match s.format {
        OutputFormat::Csv => {
            let mut out = csv_line(&format::TABLE_COLUMNS);
            rows.iter().for_each(|r| out.push_str(&csv_line(r)));
            out
        }
        OutputFormat::Text => {
            let mut all = vec![format::TABLE_COLUMNS
                .iter()
                .map(|c| c.to_string())
                .collect()];
            all.extend(rows);
            let mut out = format!("table {}: {}\n", spec.id, spec.caption);
            out.push_str(&format::aligned(&all));
            for c in &report.rows {
                if let Err(e) = &c.result {
                    out.push_str(&format!("b={} l={} a={}: {e}\n", c.row.b, c.row.l, c.row.a));
                }
                if let Some(note) = c.row.note {
                    out.push_str(&format!(
                        "note (b={} l={} a={}): {note}\n",
                        c.row.b, c.row.l, c.row.a
                    ));
                }
            }
            out.push_str(&format!(
                "{} PASS, {} FAIL, {} EXPECTED-DISCREPANCY\n",
                report.count(crate::analysis::Verdict::Pass),
                report.count(crate::analysis::Verdict::Fail),
                report.count(crate::analysis::Verdict::ExpectedDiscrepancy),
            ));
            out
        }
    };
    let code = if report.has_failures() {
        EXIT_SOLVER
    } else {
        EXIT_OK
    };
    Ok((body, code))
}

fn cmd_profile(s: &Settings) -> CmdResult {
    let r_min: f64 = s.require("r-min")?;
    let r_max: f64 = s.require("r-max")?;
    let steps: usize = s.require("steps")?;
    if !(r_min.is_finite() && r_max.is_finite() && r_min > 0.0 && r_max > r_min) {
        return Err(Exit::usage(format!(
            "invalid profile range: requires 0 < r-min < r-max (got {r_min}, {r_max})"
        )));
    }
    if steps < 2 {
        return Err(Exit::usage(format!(
            "--steps must be at least 2 (got {steps})"
        )));
    }
    let p = s.params()?;
    let model = AsymptoticModel::new(&p);
    let columns = ["r", "delta_e", "f_log_deriv", "v_eff"];
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let r = if i + 1 == steps {
            r_max
        } else {
            r_min + (r_max - r_min) * i as f64 / (steps - 1) as f64
        };
        let fields = (|| -> crate::Result<Vec<String>> {
            Ok(vec![
                format::sig(r, format::RADIUS_DIGITS),
                format::energy(model.delta_e_profile(r)?),
                format::energy(model.f_log_deriv(r)?),
                format::energy(effective_potential(&p, r)?),
            ])
        })()
        .map_err(|e| Exit::from_error(&e))?;
        rows.push(fields);
    }
    let body = match s.format {
        OutputFormat::Csv => {
            let mut out = csv_line(&columns);
            rows.iter().for_each(|r| out.push_str(&csv_line(r)));
            out
        }
        OutputFormat::Text => {
            let mut all = vec![columns.iter().map(|c| c.to_string()).collect()];
            all.extend(rows);
            format::aligned(&all)
        }
    };
    Ok((body, EXIT_OK))
}

fn cmd_sweep(s: &Settings) -> CmdResult {
    let list = |key: &str, default: Option<&str>| -> Result<Vec<f64>, Exit> {
        match s.values.get(key).map(String::as_str).or(default) {
            Some(text) => parse_list(key, text).map_err(Exit::usage),
            None => Err(Exit::usage(format!("missing required flag --{key}"))),
        }
    };
    let a_values = list("a", None)?;
    let b_values = list("b", None)?;
    let dims = list("N", Some("3"))?;
    let ls = list("l", Some("0"))?;
    let m: f64 = s.get("m")?.unwrap_or(DEFAULT_MASS);
    let as_int = |key: &str, v: f64| -> Result<i32, Exit> {
        if v.fract() == 0.0 && v.abs() < 1e6 {
            Ok(v as i32)
        } else {
            Err(Exit::usage(format!(
                "--{key} values must be integers (got {v})"
            )))
        }
    };

    let mut grid = Vec::new();
    for &a in &a_values {
        for &b in &b_values {
            for &dim in &dims {
                for &l in &ls {
                    let p = SystemParams::new(a, b, m, as_int("N", dim)?, as_int("l", l)?)
                        .map_err(|e| Exit::from_error(&e))?;
                    grid.push(p);
                }
            }
        }
    }
    let settings = s.oracle()?;
    let run = || {
        grid.par_iter()
            .map(|p| analyze_with(p, &settings))
            .collect::<Vec<_>>()
    };
    let results = match crate::analysis::thread_cap()
        .and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok())
    {
        Some(pool) => pool.install(run),
        None => run(),
    };

    let mut columns: Vec<String> = format::RESULT_COLUMNS
        .iter()
        .map(|c| c.to_string())
        .collect();
    columns.push("status".into());
    let mut rows = vec![];
    for (p, res) in grid.iter().zip(&results) {
        let mut fields = match res {
            Ok(r) => format::result_fields(r),
            Err(_) => {
                let mut f = format::input_fields(p.a(), p.b(), p.m(), p.dim() as i32, p.l() as i32);
                f.resize(format::RESULT_COLUMNS.len(), MISSING.to_string());
                f
            }
        };
        fields.push(match res {
            Ok(_) => "ok".into(),
            Err(e) => e.to_string().replace(',', ";"),
        });
        rows.push(fields);
    }
    let body = match s.format {
        OutputFormat::Csv => {
            let mut out = csv_line(&columns);
            rows.iter().for_each(|r| out.push_str(&csv_line(r)));
            out
        }
        OutputFormat::Text => {
            let mut all = vec![columns];
            all.extend(rows);
            format::aligned(&all)
        }
    };
    let code = if results.iter().all(Result::is_err) {
        EXIT_SOLVER
    } else {
        EXIT_OK
    };
    Ok((body, code))
}
