use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use simpconf_cli::pipeline::{run_step, Subcomplex};
use simpconf_cli::{
    action_report, pretty, read_action, read_complex, read_json, run_pipeline, CliError, CliResult, Options, Step,
    DEFAULT_MAX_SIMPLICES,
};
use simpconf_core::document::{self, Severity};

/// Simplicial models of configuration spaces.
#[derive(Parser, Debug)]
#[command(name = "simpconf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Omit wall-clock timings from pipeline reports.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Write the output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, env = "SIMPCONF_MAX_SIMPLICES", default_value_t = DEFAULT_MAX_SIMPLICES, hide = true)]
    max_simplices: u128,
}

#[derive(Args, Debug)]
struct Input {
    /// Complex document (`-` for standard input).
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct WithN {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct WithSub {
    #[command(flatten)]
    input: Input,
    /// Subcomplex document.
    #[arg(long = "with", value_name = "PATH")]
    with: PathBuf,
}

#[derive(Args, Debug)]
struct WithAction {
    #[command(flatten)]
    input: Input,
    /// Action document: `{"generators": [{"name": .., "map": {..}}]}`.
    #[arg(long, value_name = "PATH")]
    action: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Read a complex document and print it in canonical form.
    Build(Input),
    /// Report schema and closure diagnostics for a complex document.
    Validate(Input),
    /// Ordered power X^n.
    Power(WithN),
    /// Barycentric subdivision.
    Bs(Input),
    /// Fat diagonal F_n of X^n.
    Fatdiag(WithN),
    /// Simplicial difference X ⊖ A.
    Diff(WithSub),
    /// Complement model C_{X,A}.
    Complement(WithSub),
    /// C(X,n) = X^n ⊖ F_n.
    Conf(WithN),
    /// C_bs(X,n) = C_{bs(X^n), bs(F_n)}.
    Confbs(WithN),
    /// Quotient by a regular action.
    Quotient(WithAction),
    /// Orbits of simplices of one dimension.
    Orbits {
        #[command(flatten)]
        action: WithAction,
        #[arg(long)]
        dim: usize,
    },
    /// Group order, semiregularity and regularity (with a witness).
    CheckAction(WithAction),
    /// Integer homology.
    Homology {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        reduced: bool,
    },
    /// Simplex counts and Euler characteristic.
    Fvector(Input),
    /// Nerve of the minimal non-face cover of (X, A).
    Nerve(WithSub),
    /// Run a pipeline from a spec file, or from --source and --step flags.
    Pipeline {
        /// Pipeline spec: `{"source": .., "steps": [{"op": ..}, ..]}`.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["source", "step"])]
        input: Option<PathBuf>,
        /// Source complex, when steps are given as flags.
        #[arg(long, value_name = "PATH", requires = "step")]
        source: Option<PathBuf>,
        /// A step as `op[:arg]`, e.g. `conf:2`, `bs`, `quotient`, `diff:a.json`.
        #[arg(long)]
        step: Vec<String>,
    },
}

fn sub(path: &std::path::Path) -> Subcomplex {
    Subcomplex::Path(path.to_string_lossy().into_owned())
}

fn single(input: &Input, action: Option<&PathBuf>, step: Step, opts: &Options) -> CliResult<Value> {
    let complex = read_complex(&input.input)?;
    let act = match action {
        Some(p) => Some(read_action(complex.clone(), p)?),
        None => None,
    };
    let (result, out) = run_step(complex, act, &step, opts)?;
    if let Some(w) = out.get("warning").and_then(Value::as_str) {
        eprintln!("warning: {w}");
    }
    Ok(if step.builds_complex() { document::complex_to_json(&result) } else { out })
}

fn run(cli: &Cli, opts: &mut Options) -> CliResult<(Value, bool)> {
    let ok = |v| Ok((v, true));
    match &cli.command {
        Command::Build(i) => ok(document::complex_to_json(&read_complex(&i.input)?)),
        Command::Validate(i) => {
            let diagnostics = document::validate_complex_document(&read_json(&i.input)?);
            let valid = diagnostics.iter().all(|d| d.severity != Severity::Error);
            let list: Vec<Value> = diagnostics
                .iter()
                .map(|d| {
                    let severity = if d.severity == Severity::Error { "error" } else { "warning" };
                    json!({ "severity": severity, "message": d.message })
                })
                .collect();
            Ok((json!({ "valid": valid, "diagnostics": list }), valid))
        }
        Command::Power(a) => ok(single(&a.input, None, Step::Power(a.n), opts)?),
        Command::Bs(i) => ok(single(i, None, Step::Bs, opts)?),
        Command::Fatdiag(a) => ok(single(&a.input, None, Step::FatDiag(a.n), opts)?),
        Command::Diff(a) => ok(single(&a.input, None, Step::Diff(sub(&a.with)), opts)?),
        Command::Complement(a) => ok(single(&a.input, None, Step::Complement(sub(&a.with)), opts)?),
        Command::Conf(a) => ok(single(&a.input, None, Step::Conf(a.n), opts)?),
        Command::Confbs(a) => ok(single(&a.input, None, Step::ConfBs(a.n), opts)?),
        Command::Nerve(a) => ok(single(&a.input, None, Step::Nerve(sub(&a.with)), opts)?),
        Command::Quotient(a) => ok(single(&a.input, Some(&a.action), Step::Quotient, opts)?),
        Command::Orbits { action, dim } => ok(single(&action.input, Some(&action.action), Step::Orbits(*dim), opts)?),
        Command::CheckAction(a) => {
            let complex = read_complex(&a.input.input)?;
            ok(action_report(&read_action(complex, &a.action)?))
        }
        Command::Homology { input, reduced } => ok(single(input, None, Step::Homology { reduced: *reduced }, opts)?),
        Command::Fvector(i) => ok(single(i, None, Step::FVector, opts)?),
        Command::Pipeline { input: Some(path), .. } => {
            let spec = read_json(path)?;
            if let Some(dir) = path.parent() {
                opts.base_dir = dir.to_path_buf();
            }
            ok(run_pipeline(&spec, opts)?)
        }
        Command::Pipeline { input: None, source, step } => {
            let source = source.as_ref().ok_or_else(|| CliError::Schema("pipeline needs --input or --source".into()))?;
            let steps = step.iter().map(|s| Step::parse_flag(s).map(|_| flag_json(s))).collect::<CliResult<Vec<_>>>()?;
            let spec = json!({ "source": source.to_string_lossy(), "steps": steps });
            ok(run_pipeline(&spec, opts)?)
        }
    }
}

/// The JSON form of a `--step` flag, echoed in the report.
fn flag_json(s: &str) -> Value {
    let (op, arg) = s.split_once(':').map_or((s, None), |(o, a)| (o, Some(a)));
    let mut v = json!({ "op": op });
    if let Some(arg) = arg {
        match op {
            "power" | "fatdiag" | "conf" | "confbs" => v["n"] = json!(arg.parse::<u64>().unwrap_or_default()),
            "orbits" => v["dim"] = json!(arg.parse::<u64>().unwrap_or_default()),
            "homology" => v["reduced"] = json!(true),
            "action" => v["action"] = json!(arg),
            _ => v["with"] = json!(arg),
        }
    }
    v
}

fn emit(cli: &Cli, v: &Value) -> CliResult<()> {
    let text = if cli.pretty {
        pretty::render(v)
    } else {
        let mut s = serde_json::to_string(v).map_err(|e| CliError::Io(e.to_string()))?;
        s.push('\n');
        s
    };
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut opts = Options { max_simplices: cli.max_simplices, timing: !cli.no_timing, ..Options::default() };
    let result = run(&cli, &mut opts).and_then(|(v, success)| emit(&cli, &v).map(|()| success));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
