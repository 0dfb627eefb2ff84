//! Command-line front end. [`run`] does all the work and hands back what the
//! binary should print, so commands are testable without a subprocess.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on invalid input.
//! Invalid input never produces partial standard output.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use lorentz_bott::collineation::{catalog, collineation_space_of, render_table, verify_cases, Verdict};
use lorentz_bott::connection::{bott, Connection, Distribution};
use lorentz_bott::curvature::{bott_ricci, RicciForm};
use lorentz_bott::exact::{Rational, SubspaceBasis, Vector3};
use lorentz_bott::liealg::{build_group, check_jacobi, Group, GroupSpec, JacobiVerdict, Params, StructureConstants, Tensor3};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "lorentz-bott", version, about = "Bott connections and Ricci collineations on 3D Lorentzian Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: CommandLine,
}

#[derive(Subcommand, Debug)]
enum CommandLine {
    /// Symmetrized Ricci tensor of the Bott connection
    Ricci(Flags),
    /// Bott connection constants gamma[i][j][k]
    Connection(Flags),
    /// Left-invariant Ricci collineations
    Collineations(Flags),
    /// Check the theorem cases at seeded samples
    Verify(Flags),
    /// Check the Jacobi identity
    Jacobi(Flags),
}

#[derive(Args, Debug)]
struct Flags {
    /// One of G1..G7
    #[arg(long, conflicts_with = "algebra")]
    group: Option<String>,
    /// JSON file with structure constants {"c": [[[..]]]}
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// b1, b2 or b3
    #[arg(long)]
    dist: Option<String>,
    /// Exact assignments such as alpha=1,beta=-2/3
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Case id or id prefix; repeatable
    #[arg(long = "case")]
    cases: Vec<String>,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CommandKind {
    Ricci,
    Connection,
    Collineations,
    Verify,
    Jacobi,
}

/// Where the structure constants come from.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum AlgebraSource {
    Group { group: Group, params: Params },
    File(PathBuf),
}

/// A validated invocation.
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub command: CommandKind,
    pub algebra: Option<AlgebraSource>,
    pub dist: Option<Distribution>,
    pub format: Format,
    pub seed: u64,
    pub samples: usize,
    pub case_filter: Vec<String>,
    pub output: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, values or files; exit 2.
    Input(String),
}

impl From<lorentz_bott::Error> for CliError {
    fn from(e: lorentz_bott::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn input(message: impl Into<String>) -> CliError {
    CliError::Input(message.into())
}

impl CliConfig {
    fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, flags) = match cli.command {
            CommandLine::Ricci(f) => (CommandKind::Ricci, f),
            CommandLine::Connection(f) => (CommandKind::Connection, f),
            CommandLine::Collineations(f) => (CommandKind::Collineations, f),
            CommandLine::Verify(f) => (CommandKind::Verify, f),
            CommandLine::Jacobi(f) => (CommandKind::Jacobi, f),
        };
        let name = format!("{command:?}").to_lowercase();
        let reject = |present: bool, flag: &str| -> Result<(), CliError> {
            if present {
                Err(input(format!("{name} does not take {flag}")))
            } else {
                Ok(())
            }
        };

        if command == CommandKind::Verify {
            reject(flags.group.is_some(), "--group")?;
            reject(flags.algebra.is_some(), "--algebra")?;
            reject(flags.dist.is_some(), "--dist")?;
            reject(flags.params.is_some(), "--params (verify samples its own)")?;
        } else {
            reject(flags.seed.is_some(), "--seed")?;
            reject(flags.samples.is_some(), "--samples")?;
            reject(!flags.cases.is_empty(), "--case")?;
        }
        if command == CommandKind::Jacobi {
            reject(flags.dist.is_some(), "--dist")?;
        }

        let algebra = match (flags.group, flags.algebra) {
            (Some(g), None) => {
                let group: Group = g.parse()?;
                let params = match &flags.params {
                    Some(p) => Params::parse_assignments(p)?,
                    None => Params::new(),
                };
                Some(AlgebraSource::Group { group, params })
            }
            (None, Some(path)) => {
                reject(flags.params.is_some(), "--params with --algebra")?;
                Some(AlgebraSource::File(path))
            }
            (None, None) => None,
            (Some(_), Some(_)) => return Err(input("--group and --algebra are exclusive")),
        };
        if command != CommandKind::Verify && algebra.is_none() {
            return Err(input(format!("{name} requires --group or --algebra")));
        }
        let dist = flags.dist.as_deref().map(str::parse::<Distribution>).transpose()?;
        if matches!(command, CommandKind::Ricci | CommandKind::Connection | CommandKind::Collineations) && dist.is_none() {
            return Err(input(format!("{name} requires --dist")));
        }
        let samples = flags.samples.unwrap_or(DEFAULT_SAMPLES);
        if samples == 0 {
            return Err(input("--samples must be positive"));
        }
        Ok(CliConfig {
            command,
            algebra,
            dist,
            format: flags.format,
            seed: flags.seed.unwrap_or(DEFAULT_SEED),
            samples,
            case_filter: flags.cases,
            output: flags.output,
        })
    }
}

/// Exit status and the text destined for each stream.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = CliConfig::from_cli(cli).and_then(|config| {
        let (text, ok) = execute(&config)?;
        match &config.output {
            Some(path) => {
                std::fs::write(path, &text).map_err(|e| input(format!("cannot write {}: {e}", path.display())))?;
                Ok((String::new(), ok))
            }
            None => Ok((text, ok)),
        }
    });
    match result {
        Ok((stdout, ok)) => Outcome { code: if ok { 0 } else { 1 }, stdout, stderr: String::new() },
        Err(CliError::Input(message)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {message}\n") },
    }
}

/// Runs a validated command, returning its rendered output and whether any
/// verification it performed passed.
pub fn execute(config: &CliConfig) -> Result<(String, bool), CliError> {
    match config.command {
        CommandKind::Ricci => {
            let ric = bott_ricci(&algebra(config)?, dist(config));
            Ok((render(config.format, &ric, ricci_table)?, true))
        }
        CommandKind::Connection => {
            let conn = bott(&algebra(config)?, dist(config));
            Ok((render(config.format, &conn, connection_table)?, true))
        }
        CommandKind::Collineations => {
            let space = collineation_space_of(&algebra(config)?, dist(config));
            Ok((render(config.format, &space, collineation_table)?, true))
        }
        CommandKind::Jacobi => {
            let verdict = check_jacobi(&unchecked_algebra(config)?);
            let ok = verdict.valid();
            let text = match config.format {
                Format::Json => json_line(&JacobiJson { valid: ok, violations: &verdict })?,
                Format::Table => jacobi_table(&verdict),
            };
            Ok((text, ok))
        }
        CommandKind::Verify => {
            let cases = if config.case_filter.is_empty() {
                catalog().cases.clone()
            } else {
                catalog().select(&config.case_filter)?
            };
            let report = verify_cases(&cases, config.seed, config.samples);
            let ok = report.count(Verdict::Fail) == 0;
            let text = match config.format {
                Format::Json => report.to_json() + "\n",
                Format::Table => render_table(&report),
            };
            Ok((text, ok))
        }
    }
}

fn dist(config: &CliConfig) -> Distribution {
    config.dist.expect("validated in from_cli")
}

fn read_algebra(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

/// Structure constants with the group constraints and Jacobi enforced.
fn algebra(config: &CliConfig) -> Result<StructureConstants, CliError> {
    match config.algebra.as_ref().expect("validated in from_cli") {
        AlgebraSource::Group { group, params } => Ok(build_group(&GroupSpec::new(*group, params.clone()))?),
        AlgebraSource::File(path) => Ok(StructureConstants::from_json(&read_algebra(path)?)?),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    c: Tensor3,
}

/// Structure constants for `jacobi`: parameter names are checked but the
/// standing constraints are not, so the identity can be probed off them.
/// Custom files only need antisymmetry.
fn unchecked_algebra(config: &CliConfig) -> Result<StructureConstants, CliError> {
    match config.algebra.as_ref().expect("validated in from_cli") {
        AlgebraSource::Group { group, params } => match group.check(params) {
            Ok(()) | Err(lorentz_bott::Error::ConstraintViolation { .. }) => {
                Ok(group.structure_constants_unchecked(params)?)
            }
            Err(e) => Err(e.into()),
        },
        AlgebraSource::File(path) => {
            let raw: RawAlgebra = serde_json::from_str(&read_algebra(path)?)
                .map_err(|e| input(format!("custom algebra: {e}")))?;
            Ok(StructureConstants::new(raw.c)?)
        }
    }
}

#[derive(serde::Serialize)]
struct JacobiJson<'a> {
    valid: bool,
    #[serde(flatten)]
    violations: &'a JacobiVerdict,
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value)
        .map(|s| s + "\n")
        .map_err(|e| input(format!("serialization: {e}")))
}

fn render<T: serde::Serialize>(format: Format, value: &T, table: fn(&T) -> String) -> Result<String, CliError> {
    match format {
        Format::Json => json_line(value),
        Format::Table => Ok(table(value)),
    }
}

/// Right-aligned grid with `e1..e3` row and column labels.
fn grid(cells: &[[Rational; 3]; 3]) -> String {
    let text: Vec<[String; 3]> = cells.iter().map(|r| r.each_ref().map(|x| x.to_string())).collect();
    let width = text.iter().flatten().map(String::len).max().unwrap_or(1).max(2);
    let mut out = format!("    {:>width$}  {:>width$}  {:>width$}\n", "e1", "e2", "e3");
    for (i, row) in text.iter().enumerate() {
        let _ = writeln!(out, "e{}  {:>width$}  {:>width$}  {:>width$}", i + 1, row[0], row[1], row[2]);
    }
    out
}

fn tuple(v: &Vector3) -> String {
    format!("({}, {}, {})", v[0], v[1], v[2])
}

fn ricci_table(ric: &RicciForm) -> String {
    format!("{}\n{}", if ric.symmetric { "Ric" } else { "rho" }, grid(&ric.m))
}

fn connection_table(conn: &Connection) -> String {
    let mut out = String::new();
    for i in 0..3 {
        for j in 0..3 {
            let _ = writeln!(out, "nabla_e{} e{} = {}", i + 1, j + 1, tuple(conn.frame(i, j)));
        }
    }
    out
}

fn collineation_table(space: &SubspaceBasis) -> String {
    let mut out = format!("dim {}\n", space.dim());
    for v in space.vectors() {
        let _ = writeln!(out, "  {}", tuple(v));
    }
    out
}

fn jacobi_table(verdict: &JacobiVerdict) -> String {
    if verdict.valid() {
        return "Jacobi identity holds\n".to_string();
    }
    let mut out = "Jacobi identity fails\n".to_string();
    for v in &verdict.violations {
        let (i, j, k) = v.triple;
        let _ = writeln!(out, "  (e{i}, e{j}, e{k}): residual {}", tuple(&v.residual));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lorentz_bott::exact::q;

    #[test]
    fn grid_aligns_fractions() {
        let cells = [
            [q(1, 1), q(-1, 2), q(0, 1)],
            [q(-1, 2), q(3, 1), q(0, 1)],
            [q(0, 1), q(0, 1), q(-7, 3)],
        ];
        let text = grid(&cells);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "      e1    e2    e3");
        assert_eq!(lines[1], "e1     1  -1/2     0");
        assert_eq!(lines[3], "e3     0     0  -7/3");
    }

    #[test]
    fn verify_defaults() {
        let cli = Cli::try_parse_from(["lorentz-bott", "verify"]).unwrap();
        let config = CliConfig::from_cli(cli).unwrap();
        assert_eq!((config.seed, config.samples), (DEFAULT_SEED, DEFAULT_SAMPLES));
        assert!(config.case_filter.is_empty() && config.algebra.is_none());
    }
}
