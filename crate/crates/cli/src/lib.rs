//! Batch front end for `simpconf-core`: JSON in, JSON out.
//!
//! Every subcommand of the `simpconf` binary is a one-step pipeline; the
//! `pipeline` subcommand runs several steps on one source complex, carrying
//! a group action along where the constructions allow it.

mod error;
pub mod pipeline;
pub mod pretty;

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use simpconf_core::document;
use simpconf_core::{HomologyProfile, Simplex, SimplicialAction, SimplicialComplex};

pub use error::{witness_json, CliError};
pub use pipeline::{run_pipeline, Step};

pub type CliResult<T> = Result<T, CliError>;

pub const DEFAULT_MAX_SIMPLICES: u128 = 5_000_000;

#[derive(Clone, Debug)]
pub struct Options {
    /// Upper bound on the size of any complex a step may build.
    pub max_simplices: u128,
    pub timing: bool,
    /// Directory against which relative paths in a pipeline spec resolve.
    pub base_dir: PathBuf,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_simplices: DEFAULT_MAX_SIMPLICES, timing: true, base_dir: PathBuf::from(".") }
    }
}

impl Options {
    pub fn check_size(&self, count: u128) -> CliResult<()> {
        if count > self.max_simplices {
            return Err(CliError::TooLarge { count, cap: self.max_simplices });
        }
        Ok(())
    }

    pub fn resolve(&self, path: &str) -> PathBuf {
        let p = Path::new(path);
        if p.is_absolute() || path == "-" {
            p.to_path_buf()
        } else {
            self.base_dir.join(p)
        }
    }
}

/// Reads a JSON file, or standard input for `-`.
pub fn read_json(path: &Path) -> CliResult<Value> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Io(format!("reading stdin: {e}")))?
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{}: invalid JSON: {e}", path.display())))
}

pub fn read_complex(path: &Path) -> CliResult<SimplicialComplex> {
    Ok(document::complex_from_json(&read_json(path)?)?)
}

pub fn read_action(complex: SimplicialComplex, path: &Path) -> CliResult<SimplicialAction> {
    Ok(document::action_from_json(complex, &read_json(path)?)?)
}

pub fn simplex_json(k: &SimplicialComplex, s: &Simplex) -> Value {
    Value::Array(k.labels_of(s).iter().map(|l| Value::String(l.to_string())).collect())
}

pub fn fvector_json(k: &SimplicialComplex) -> Value {
    json!({ "fvector": k.f_vector().0, "euler": k.euler_characteristic() })
}

pub fn homology_json(h: &HomologyProfile) -> Value {
    let torsion: Vec<Vec<Value>> = h
        .torsion
        .iter()
        .map(|t| {
            t.iter()
                .map(|d| match i64::try_from(d) {
                    Ok(small) => json!(small),
                    Err(_) => json!(d.to_string()),
                })
                .collect()
        })
        .collect();
    json!({ "betti": h.betti, "torsion": torsion, "euler": h.euler })
}

pub fn orbits_json(act: &SimplicialAction, dim: usize) -> Value {
    let k = act.complex();
    let orbits: Vec<Value> = simpconf_core::orbit_partition(act, dim)
        .iter()
        .map(|o| Value::Array(o.iter().map(|s| simplex_json(k, s)).collect()))
        .collect();
    json!({ "dim": dim, "orbits": orbits })
}

pub fn action_report(act: &SimplicialAction) -> Value {
    let witness = simpconf_core::actions::regularity_violation(act);
    json!({
        "order": act.order(),
        "elements": act.names(),
        "semiregular": simpconf_core::is_semiregular(act),
        "regular": witness.is_none(),
        "witness": witness.as_ref().map(witness_json),
    })
}
