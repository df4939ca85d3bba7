//! Pipelines: a source complex and a list of steps run in order.
//!
//! ```json
//! {"source": "circle.json",
//!  "steps": [{"op": "conf", "n": 2}, {"op": "bs"}, {"op": "quotient"}, {"op": "fvector"}]}
//! ```
//!
//! The source is a path or an inline complex document. `power`, `fatdiag`,
//! `conf` and `confbs` attach the symmetric group action; `bs`, `diff`,
//! `complement` and `nerve` carry an attached action to the new complex when
//! the subcomplex is invariant, and drop it otherwise. `action` attaches an
//! action document explicitly.

use std::time::Instant;

use serde_json::{json, Map, Value};
use simpconf_core::constructions::barycentric_subdivision_size;
use simpconf_core::document;
use simpconf_core::{
    barycentric_subdivision, complement_model, fat_diagonal, homology_profile, induced_action, is_regular,
    is_semiregular, minimal_nonface_nerve, quotient_complex, simplicial_difference,
    symmetric_group_action, ActionKind, SimplicialAction, SimplicialComplex,
};

use crate::{
    fvector_json, homology_json, orbits_json, read_action, read_complex, witness_json, CliError, CliResult, Options,
};

/// Where a `with` argument comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum Subcomplex {
    Path(String),
    Inline(Value),
    /// The fat diagonal of the power currently held.
    FatDiagonal,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    Power(usize),
    Bs,
    FatDiag(usize),
    Diff(Subcomplex),
    Complement(Subcomplex),
    Conf(usize),
    ConfBs(usize),
    Action(Subcomplex),
    Quotient,
    Homology { reduced: bool },
    FVector,
    CheckSemiregular,
    CheckRegular,
    Orbits(usize),
    Nerve(Subcomplex),
}

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

fn count_arg(v: &Value, key: &str, op: &str) -> CliResult<usize> {
    let n = v
        .get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| schema(format!("step {op:?} needs a nonnegative integer {key:?}")))?;
    usize::try_from(n).map_err(|_| schema(format!("{key} out of range")))
}

fn subcomplex_arg(v: &Value, key: &str, op: &str) -> CliResult<Subcomplex> {
    match v.get(key) {
        Some(Value::String(s)) if s == "fatdiag" => Ok(Subcomplex::FatDiagonal),
        Some(Value::String(s)) => Ok(Subcomplex::Path(s.clone())),
        Some(doc @ Value::Object(_)) => Ok(Subcomplex::Inline(doc.clone())),
        _ => Err(schema(format!("step {op:?} needs {key:?}: a path or an inline document"))),
    }
}

impl Step {
    pub fn from_json(v: &Value) -> CliResult<Step> {
        let op = v.get("op").and_then(Value::as_str).ok_or_else(|| schema(format!("step without \"op\": {v}")))?;
        Ok(match op {
            "power" => Step::Power(count_arg(v, "n", op)?),
            "bs" => Step::Bs,
            "fatdiag" => Step::FatDiag(count_arg(v, "n", op)?),
            "diff" => Step::Diff(subcomplex_arg(v, "with", op)?),
            "complement" => Step::Complement(subcomplex_arg(v, "with", op)?),
            "conf" => Step::Conf(count_arg(v, "n", op)?),
            "confbs" => Step::ConfBs(count_arg(v, "n", op)?),
            "action" => Step::Action(subcomplex_arg(v, "action", op)?),
            "quotient" => Step::Quotient,
            "homology" => Step::Homology { reduced: v.get("reduced").and_then(Value::as_bool).unwrap_or(false) },
            "fvector" => Step::FVector,
            "check-semiregular" => Step::CheckSemiregular,
            "check-regular" => Step::CheckRegular,
            "orbits" => Step::Orbits(count_arg(v, "dim", op)?),
            "nerve" => Step::Nerve(subcomplex_arg(v, "with", op)?),
            other => return Err(schema(format!("unknown step {other:?}"))),
        })
    }

    /// Parses the command-line shorthand `op[:arg]`, e.g. `conf:2`,
    /// `diff:a.json`, `homology:reduced`, `orbits:1`.
    pub fn parse_flag(s: &str) -> CliResult<Step> {
        let (op, arg) = match s.split_once(':') {
            Some((op, arg)) => (op, Some(arg)),
            None => (s, None),
        };
        let mut v = json!({ "op": op });
        if let Some(arg) = arg {
            let key = match op {
                "power" | "fatdiag" | "conf" | "confbs" => "n",
                "orbits" => "dim",
                "diff" | "complement" | "nerve" => "with",
                "action" => "action",
                "homology" if arg == "reduced" => "reduced",
                _ => return Err(schema(format!("step {op:?} takes no argument"))),
            };
            v[key] = match key {
                "n" | "dim" => json!(arg.parse::<u64>().map_err(|_| schema(format!("{op}: {arg:?} is not an integer")))?),
                "reduced" => json!(true),
                _ => json!(arg),
            };
        }
        Step::from_json(&v)
    }
}

/// The value flowing between steps.
struct State {
    complex: SimplicialComplex,
    action: Option<SimplicialAction>,
    /// Base complex and exponent when `complex` is an ordered power.
    power_of: Option<(SimplicialComplex, usize)>,
}

impl State {
    fn require_action(&self, op: &str) -> CliResult<&SimplicialAction> {
        self.action.as_ref().ok_or_else(|| schema(format!("step {op:?} needs a group action; none is attached")))
    }

    fn load(&self, sub: &Subcomplex, opts: &Options) -> CliResult<SimplicialComplex> {
        match sub {
            Subcomplex::Path(p) => read_complex(&opts.resolve(p)),
            Subcomplex::Inline(doc) => Ok(document::complex_from_json(doc)?),
            Subcomplex::FatDiagonal => {
                let (base, n) = self
                    .power_of
                    .as_ref()
                    .ok_or_else(|| schema("\"fatdiag\" as a subcomplex needs the current complex to be a power"))?;
                Ok(fat_diagonal(base, *n)?)
            }
        }
    }

    /// Carries the attached action to `derived`, or drops it if the
    /// construction is not invariant.
    fn carry(&self, derived: &SimplicialComplex, kind: ActionKind) -> Option<SimplicialAction> {
        self.action.as_ref().and_then(|a| induced_action(a, derived, kind).ok())
    }
}

fn power_guard(base: &SimplicialComplex, n: usize, opts: &Options) -> CliResult<()> {
    let vertices = (base.vertex_count() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    opts.check_size(vertices)
}

fn built(opts: &Options, k: &SimplicialComplex) -> CliResult<()> {
    opts.check_size(k.num_simplices() as u128)
}

fn power_with_action(base: &SimplicialComplex, n: usize, opts: &Options) -> CliResult<SimplicialAction> {
    power_guard(base, n, opts)?;
    let act = symmetric_group_action(base, n)?;
    built(opts, act.complex())?;
    Ok(act)
}

fn subdivide(act: Option<&SimplicialAction>, k: &SimplicialComplex, opts: &Options) -> CliResult<(SimplicialComplex, Option<SimplicialAction>)> {
    opts.check_size(barycentric_subdivision_size(k))?;
    let bs = barycentric_subdivision(k);
    let act = act.and_then(|a| induced_action(a, &bs, ActionKind::Subdivision).ok());
    Ok((bs, act))
}

fn complex_summary(state: &State) -> Value {
    json!({
        "fvector": state.complex.f_vector().0,
        "action_order": state.action.as_ref().map(SimplicialAction::order),
    })
}

fn apply(state: State, step: &Step, opts: &Options) -> CliResult<(State, Value)> {
    let next = |complex, action, power_of| State { complex, action, power_of };
    match step {
        Step::Power(n) => {
            let act = power_with_action(&state.complex, *n, opts)?;
            let s = next(act.complex().clone(), Some(act), Some((state.complex, *n)));
            let out = complex_summary(&s);
            Ok((s, out))
        }
        Step::FatDiag(n) => {
            let act = power_with_action(&state.complex, *n, opts)?;
            let fat = fat_diagonal(&state.complex, *n)?;
            let carried = induced_action(&act, &fat, ActionKind::Restriction)?;
            let s = next(fat, Some(carried), None);
            let out = complex_summary(&s);
            Ok((s, out))
        }
        Step::Conf(n) => {
            let act = power_with_action(&state.complex, *n, opts)?;
            let fat = fat_diagonal(&state.complex, *n)?;
            let conf = simplicial_difference(act.complex(), &fat)?;
            built(opts, &conf)?;
            let carried = induced_action(&act, &conf, ActionKind::Difference)?;
            let s = next(conf, Some(carried), None);
            let out = complex_summary(&s);
            Ok((s, out))
        }
        Step::ConfBs(n) => {
            let act = power_with_action(&state.complex, *n, opts)?;
            let fat = fat_diagonal(&state.complex, *n)?;
            let (bs_power, on_bs) = subdivide(Some(&act), act.complex(), opts)?;
            let bs_fat = barycentric_subdivision(&fat);
            let model = complement_model(&bs_power, &bs_fat)?;
            let on_bs = on_bs.ok_or_else(|| CliError::precondition("action does not extend to the subdivision"))?;
            let carried = induced_action(&on_bs, &model.complex, ActionKind::Restriction)?;
            let s = next(model.complex, Some(carried), None);
            let out = complex_summary(&s);
            Ok((s, out))
        }
        Step::Bs => {
            let (bs, act) = subdivide(state.action.as_ref(), &state.complex, opts)?;
            let s = next(bs, act, None);
            let out = complex_summary(&s);
            Ok((s, out))
        }
        Step::Diff(sub) => {
            let a = state.load(sub, opts)?;
            let diff = simplicial_difference(&state.complex, &a)?;
            built(opts, &diff)?;
            let act = state.carry(&diff, ActionKind::Difference);
            let s = next(diff, act, None);
            let out = complex_summary(&s);
            Ok((s, out))
        }
        Step::Nerve(sub) => {
            let a = state.load(sub, opts)?;
            let nerve = minimal_nonface_nerve(&state.complex, &a)?;
            built(opts, &nerve)?;
            let act = state.carry(&nerve, ActionKind::Difference);
            let s = next(nerve, act, None);
            let out = complex_summary(&s);
            Ok((s, out))
        }
        Step::Complement(sub) => {
            let a = state.load(sub, opts)?;
            let model = complement_model(&state.complex, &a)?;
            let act = state.carry(&model.complex, ActionKind::Restriction);
            let s = next(model.complex.clone(), act, None);
            let mut out = complex_summary(&s);
            out["full"] = json!(model.full);
            if let Some(w) = model.warning() {
                out["warning"] = json!(w);
            }
            Ok((s, out))
        }
        Step::Action(sub) => {
            let act = match sub {
                Subcomplex::Path(p) => read_action(state.complex.clone(), &opts.resolve(p))?,
                Subcomplex::Inline(doc) => document::action_from_json(state.complex.clone(), doc)?,
                Subcomplex::FatDiagonal => return Err(schema("\"action\" needs a path or an inline document")),
            };
            let out = json!({ "order": act.order(), "elements": act.names() });
            Ok((next(state.complex, Some(act), state.power_of), out))
        }
        Step::Quotient => {
            let q = quotient_complex(state.require_action("quotient")?)?;
            let s = next(q.complex, None, None);
            let out = complex_summary(&s);
            Ok((s, out))
        }
        Step::Homology { reduced } => {
            let out = homology_json(&homology_profile(&state.complex, *reduced));
            Ok((state, out))
        }
        Step::FVector => {
            let out = fvector_json(&state.complex);
            Ok((state, out))
        }
        Step::CheckSemiregular => {
            let out = json!({ "semiregular": is_semiregular(state.require_action("check-semiregular")?) });
            Ok((state, out))
        }
        Step::CheckRegular => {
            let act = state.require_action("check-regular")?;
            let witness = simpconf_core::actions::regularity_violation(act);
            let out = json!({ "regular": witness.is_none(), "witness": witness.as_ref().map(witness_json) });
            debug_assert_eq!(witness.is_none(), is_regular(act));
            Ok((state, out))
        }
        Step::Orbits(dim) => {
            let out = orbits_json(state.require_action("orbits")?, *dim);
            Ok((state, out))
        }
    }
}

/// Runs a pipeline spec and returns the report: one entry per step with the
/// step echoed, its output and (unless disabled) its wall time, followed by
/// the final complex.
pub fn run_pipeline(spec: &Value, opts: &Options) -> CliResult<Value> {
    let source = spec.get("source").ok_or_else(|| schema("pipeline spec needs a \"source\""))?;
    let complex = match source {
        Value::String(p) => read_complex(&opts.resolve(p))?,
        doc @ Value::Object(_) => document::complex_from_json(doc)?,
        other => return Err(schema(format!("source must be a path or a complex document, found {other}"))),
    };
    let raw_steps = spec
        .get("steps")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("pipeline spec needs a \"steps\" array"))?;
    let steps = raw_steps.iter().map(Step::from_json).collect::<CliResult<Vec<_>>>()?;

    let mut state = State { complex, action: None, power_of: None };
    let mut report = Vec::with_capacity(steps.len());
    for (raw, step) in raw_steps.iter().zip(&steps) {
        let start = Instant::now();
        let (next, output) = apply(state, step, opts)?;
        state = next;
        let mut entry = Map::new();
        entry.insert("step".into(), raw.clone());
        entry.insert("output".into(), output);
        if opts.timing {
            entry.insert("time_ms".into(), json!(start.elapsed().as_secs_f64() * 1e3));
        }
        report.push(Value::Object(entry));
    }
    Ok(json!({
        "source": source,
        "steps": report,
        "result": document::complex_to_json(&state.complex),
    }))
}

/// Runs one step on `complex` (with an optional attached action) and
/// returns the resulting complex and the step's output.
pub fn run_step(
    complex: SimplicialComplex,
    action: Option<SimplicialAction>,
    step: &Step,
    opts: &Options,
) -> CliResult<(SimplicialComplex, Value)> {
    let (state, out) = apply(State { complex, action, power_of: None }, step, opts)?;
    Ok((state.complex, out))
}

impl Step {
    /// Whether the step builds a new complex (as opposed to reporting on one).
    pub fn builds_complex(&self) -> bool {
        !matches!(
            self,
            Step::Homology { .. } | Step::FVector | Step::CheckSemiregular | Step::CheckRegular | Step::Orbits(_) | Step::Action(_)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_flags() {
        assert_eq!(Step::parse_flag("conf:2").unwrap(), Step::Conf(2));
        assert_eq!(Step::parse_flag("bs").unwrap(), Step::Bs);
        assert_eq!(Step::parse_flag("homology:reduced").unwrap(), Step::Homology { reduced: true });
        assert_eq!(Step::parse_flag("orbits:1").unwrap(), Step::Orbits(1));
        assert_eq!(Step::parse_flag("diff:fatdiag").unwrap(), Step::Diff(Subcomplex::FatDiagonal));
        assert_eq!(Step::parse_flag("nerve:a.json").unwrap(), Step::Nerve(Subcomplex::Path("a.json".into())));
        assert!(Step::parse_flag("conf:x").is_err());
        assert!(Step::parse_flag("bs:1").is_err());
        assert!(Step::parse_flag("spin").is_err());
    }

    #[test]
    fn step_documents() {
        assert_eq!(Step::from_json(&json!({"op": "power", "n": 3})).unwrap(), Step::Power(3));
        assert!(matches!(Step::from_json(&json!({"op": "power"})), Err(CliError::Schema(_))));
        let inline = json!({"vertices": ["0"], "facets": []});
        assert_eq!(
            Step::from_json(&json!({"op": "complement", "with": inline.clone()})).unwrap(),
            Step::Complement(Subcomplex::Inline(inline))
        );
    }

    #[test]
    fn cap_is_enforced_before_building() {
        let x = simpconf_core::standard::boundary(2);
        let opts = Options { max_simplices: 8, ..Options::default() };
        let err = run_step(x, None, &Step::Power(2), &opts).unwrap_err();
        assert_eq!(err.exit_code(), 5);
    }
}
