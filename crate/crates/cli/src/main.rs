mod table;
mod verify;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use yhecke::exactnum::machine_lines;
use yhecke::links::{homflypt, invariant_gamma, jl_invariant, jl_numeric, parse_word};
use yhecke::traces::jl_spec;
use yhecke::{Composition, ESystemParams, LPoly, TraceSpec};

const MAX_D: u32 = 4;
const MAX_N: usize = 6;
const MAX_N_HECKE: usize = 8;
const MAX_N_VERIFY: usize = 4;

#[derive(Parser)]
#[command(
    name = "yhecke",
    version,
    about = "Yokonuma-Hecke algebras, Markov traces and framed link invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant of the closure of a framed braid word under a Markov trace.
    Invariant(InvariantArgs),
    /// HOMFLYPT polynomial of the closure of a braid word.
    Homflypt(HomflyptArgs),
    /// Invariant attached to a subset S of the d-th roots of unity.
    Jl(JlArgs),
    /// Run a verification suite and print one PASS/FAIL line per check.
    Verify(VerifyArgs),
    /// Print trace parameters in the format read by `invariant --spec`.
    ListTraces(ListArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("trace").required(true).args(["mu0", "all_basic", "spec"])))]
struct InvariantArgs {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    n: usize,
    /// Base composition selecting a basic trace, e.g. `1,0,1`.
    #[arg(long)]
    mu0: Option<String>,
    /// One line per basic trace.
    #[arg(long)]
    all_basic: bool,
    /// File of `mu0 = (...) ; alpha = <poly>` lines.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Tokens `K` for σ_|K|^±1 and `tJ^K` for framings.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    #[arg(long)]
    machine: bool,
}

#[derive(Args)]
struct HomflyptArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    #[arg(long)]
    machine: bool,
}

#[derive(Args)]
struct JlArgs {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    n: usize,
    /// Letters a with ξ_a in S, e.g. `1,3`.
    #[arg(long)]
    subset: String,
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    /// Numeric q as `re,im`; needs --z.
    #[arg(long, requires = "z", allow_hyphen_values = true)]
    q: Option<String>,
    /// Numeric z as `re,im`; needs --q.
    #[arg(long, requires = "q", allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long)]
    machine: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Iso,
    Markov,
    Schur,
    Jl,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    subset: Option<String>,
}

/// A computation or validation error; exits with status 1.
struct Failure(String);

impl From<yhecke::Error> for Failure {
    fn from(e: yhecke::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<Vec<String>, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                eprintln!("error: a subcommand is required (see --help)");
                return ExitCode::from(2);
            }
            // first paragraph of clap's message, folded onto one line
            let text = e.render().to_string();
            let para: Vec<&str> = text
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect();
            eprintln!("{}", para.join(" "));
            return ExitCode::from(2);
        }
    };

    let result = match cli.command {
        Command::Invariant(a) => run_invariant(a),
        Command::Homflypt(a) => run_homflypt(a),
        Command::Jl(a) => run_jl(a),
        Command::ListTraces(a) => run_list(a),
        Command::Verify(a) => return run_verify(a),
    };
    match result {
        Ok(lines) => {
            emit(&lines);
            ExitCode::SUCCESS
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(lines: &[String]) {
    let mut out = std::io::stdout().lock();
    for l in lines {
        if writeln!(out, "{l}").is_err() {
            return;
        }
    }
}

fn check_range(name: &str, value: usize, max: usize) -> Result<(), Failure> {
    if value == 0 || value > max {
        return Err(Failure(format!(
            "--{name} must be in 1..={max}, got {value}"
        )));
    }
    Ok(())
}

fn parse_subset(text: &str, d: u32) -> Result<ESystemParams, Failure> {
    let letters = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure(format!("bad subset `{text}`")))?;
    Ok(ESystemParams::new(d, &letters)?)
}

fn parse_mu0(text: &str, d: u32) -> Result<Composition, Failure> {
    let mu0: Composition = text.parse()?;
    if mu0.d() != d as usize {
        return Err(Failure(format!("mu0 {mu0} does not have {d} parts")));
    }
    Ok(mu0)
}

fn parse_complex(text: &str) -> Result<Complex64, Failure> {
    let bad = || Failure(format!("bad complex number `{text}`, expected re,im"));
    let (re, im) = text.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    if !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

fn render(label: Option<&str>, p: &LPoly, d: u32, machine: bool) -> Vec<String> {
    match (label, machine) {
        (Some(l), false) => vec![format!("{l} : {p}")],
        (None, false) => vec![p.to_string()],
        (label, true) => label
            .map(str::to_string)
            .into_iter()
            .chain(machine_lines(p, d))
            .collect(),
    }
}

fn run_invariant(a: InvariantArgs) -> Outcome {
    check_range("d", a.d as usize, MAX_D as usize)?;
    check_range("n", a.n, MAX_N)?;
    let word = parse_word(&a.word, a.n, a.d)?;
    let specs: Vec<(String, TraceSpec)> = if let Some(text) = &a.mu0 {
        let mu0 = parse_mu0(text, a.d)?;
        vec![(format!("mu0={mu0}"), TraceSpec::basic(&mu0)?)]
    } else if a.all_basic {
        TraceSpec::all_basic(a.d)
            .into_iter()
            .map(|(mu0, s)| (format!("mu0={mu0}"), s))
            .collect()
    } else {
        let path = a.spec.as_ref().expect("group requires one");
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
        vec![("spec".to_string(), TraceSpec::parse(&text, a.d)?)]
    };
    let mut lines = Vec::new();
    for (label, spec) in specs {
        let p = invariant_gamma(&word, &spec)?;
        lines.extend(render(Some(&label), &p, a.d, a.machine));
    }
    Ok(lines)
}

fn run_homflypt(a: HomflyptArgs) -> Outcome {
    check_range("n", a.n, MAX_N_HECKE)?;
    let word = parse_word(&a.word, a.n, 1)?;
    let p = homflypt(&word)?;
    Ok(render(None, &p, 1, a.machine))
}

/// Rounds away signed zeros and sub-tolerance noise so output is stable.
fn clean(x: f64) -> f64 {
    if x.abs() < 5e-13 {
        0.0
    } else {
        x
    }
}

fn run_jl(a: JlArgs) -> Outcome {
    check_range("d", a.d as usize, MAX_D as usize)?;
    check_range("n", a.n, MAX_N)?;
    let params = parse_subset(&a.subset, a.d)?;
    let word = parse_word(&a.word, a.n, a.d)?;
    match (&a.q, &a.z) {
        (Some(q), Some(z)) => {
            let value = jl_numeric(&word, &params, parse_complex(q)?, parse_complex(z)?)?;
            Ok(vec![format!(
                "{:.12} {:.12}",
                clean(value.re),
                clean(value.im)
            )])
        }
        _ => {
            let p = jl_invariant(&word, &params)?;
            Ok(render(None, &p, a.d, a.machine))
        }
    }
}

fn run_list(a: ListArgs) -> Outcome {
    check_range("d", a.d as usize, MAX_D as usize)?;
    match &a.subset {
        Some(s) => {
            let spec = jl_spec(&parse_subset(s, a.d)?);
            Ok(spec.to_string().lines().map(str::to_string).collect())
        }
        None => Ok(TraceSpec::all_basic(a.d)
            .into_iter()
            .flat_map(|(_, s)| {
                s.to_string()
                    .lines()
                    .map(str::to_string)
                    .collect::<Vec<_>>()
            })
            .collect()),
    }
}

fn run_verify(a: VerifyArgs) -> ExitCode {
    if a.d == 0 || a.d > MAX_D || a.n == 0 || a.n > MAX_N_VERIFY {
        eprintln!("error: verify needs 1 <= d <= {MAX_D} and 1 <= n <= {MAX_N_VERIFY}");
        return ExitCode::from(2);
    }
    let checks = match a.suite {
        Suite::Iso => verify::iso(a.d, a.n, a.seed),
        Suite::Markov => verify::markov(a.d, a.n, a.seed),
        Suite::Schur => verify::schur(a.d, a.n),
        Suite::Jl => verify::jl(a.d, a.n, a.seed),
    };
    let lines: Vec<String> = checks.iter().map(verify::Check::line).collect();
    emit(&lines);
    let failed = checks.iter().filter(|c| c.failure.is_some()).count();
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: {failed} of {} checks failed", checks.len());
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_arguments() {
        assert_eq!(
            parse_complex("0.5,-1").ok(),
            Some(Complex64::new(0.5, -1.0))
        );
        assert!(parse_complex("0.5").is_err());
        assert!(parse_complex("nan,0").is_err());
    }

    #[test]
    fn subsets_and_compositions() {
        assert_eq!(
            parse_subset("1, 3", 3).ok().map(|p| p.subset().len()),
            Some(2)
        );
        assert!(parse_subset("", 3).is_err());
        assert!(parse_subset("4", 3).is_err());
        assert!(parse_mu0("1,0", 2).is_ok());
        assert!(parse_mu0("1,0", 3).is_err());
    }

    #[test]
    fn machine_rendering_keeps_the_label() {
        let p = LPoly::uvg(1, 0, 0);
        assert_eq!(
            render(Some("mu0=(1)"), &p, 1, true),
            vec!["mu0=(1)", "1 0 0 1"]
        );
        assert_eq!(render(None, &LPoly::uvg(0, 0, 0), 1, false), vec!["1"]);
        assert_eq!(clean(-1e-15), 0.0);
    }
}
