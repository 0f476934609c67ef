//! Resolving a command-line input into a complex or a polytope.
//!
//! An input is a file path, `-` for stdin, or a builder reference such as
//! `torus_T` or `cube:3` when no file of that name exists.

use std::io::Read;
use std::path::Path;

use pxk::builders::{self, BuilderSpec, Built};
use pxk::{io, SimplePolytope, SimplicialComplex};
use sha2::{Digest, Sha256};

use crate::Failure;

/// Builders whose output is large enough to need `--slow`.
const SLOW_BUILDERS: &[&str] = &["cell120", "cell600"];

pub enum Object {
    Complex(SimplicialComplex),
    Polytope(SimplePolytope),
}

pub struct Input {
    pub source: String,
    /// `sha256:` followed by the hex digest of the input bytes. For builder
    /// references the bytes are the canonical serialization of the result.
    pub digest: String,
    pub object: Object,
}

pub struct Options {
    pub slow: bool,
    pub seed: Option<u64>,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Reads `PXK_SEED`; an unparsable value is a validation error.
pub fn seed_from_env() -> Result<Option<u64>, Failure> {
    match std::env::var("PXK_SEED") {
        Ok(s) => {
            s.trim().parse().map(Some).map_err(|_| Failure::Usage(format!("PXK_SEED={s:?} is not an unsigned integer")))
        }
        Err(_) => Ok(None),
    }
}

/// Applies the `random_pure` seed rules: a missing seed defaults to 0, and
/// `PXK_SEED` overrides whatever was given.
pub fn builder_spec(name: &str, mut params: Vec<i64>, opts: &Options) -> Result<BuilderSpec, Failure> {
    if SLOW_BUILDERS.contains(&name) && !opts.slow {
        return Err(Failure::Usage(format!("{name} is slow to analyse; pass --slow")));
    }
    if name == "random_pure" {
        if params.len() == 2 {
            params.push(0);
        }
        if let (Some(seed), 3) = (opts.seed, params.len()) {
            params[2] = i64::try_from(seed).map_err(|_| Failure::Usage("PXK_SEED is too large".into()))?;
        }
    }
    Ok(BuilderSpec::new(name, params))
}

pub fn build(spec: &BuilderSpec) -> Result<Object, Failure> {
    Ok(match builders::make(spec)? {
        Built::Complex(c) => Object::Complex(c),
        Built::Polytope(p) => Object::Polytope(p),
    })
}

fn as_builder(arg: &str, opts: &Options) -> Option<Result<BuilderSpec, Failure>> {
    let mut parts = arg.split(':');
    let name = parts.next()?;
    if !builders::BUILDERS.iter().any(|(n, _)| *n == name) {
        return None;
    }
    let params: Result<Vec<i64>, _> = parts.map(str::parse).collect();
    Some(match params {
        Ok(p) => builder_spec(name, p, opts),
        Err(_) => Err(Failure::Usage(format!("bad builder parameters in {arg:?}"))),
    })
}

/// Text of a polytope file starts with `{` and has a `"dim"` key.
fn is_polytope_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
        && serde_json::from_str::<serde_json::Value>(text).is_ok_and(|v| v.get("dim").is_some())
}

pub fn load(arg: &str, opts: &Options) -> Result<Input, Failure> {
    if arg != "-" && !Path::new(arg).exists() {
        if let Some(spec) = as_builder(arg, opts) {
            let spec = spec?;
            let object = build(&spec)?;
            let canonical = match &object {
                Object::Complex(c) => io::complex_to_lines(c),
                Object::Polytope(p) => io::polytope_to_json(p),
            };
            return Ok(Input { source: spec.to_string(), digest: digest(canonical.as_bytes()), object });
        }
        return Err(Failure::Usage(format!("{arg}: no such file or builder")));
    }
    let mut bytes = Vec::new();
    if arg == "-" {
        std::io::stdin().read_to_end(&mut bytes).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
    } else {
        bytes = std::fs::read(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
    }
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure::Usage(format!("{arg}: not UTF-8")))?;
    let object = if is_polytope_json(&text) {
        Object::Polytope(io::parse_polytope(&text)?)
    } else {
        Object::Complex(io::parse_complex(&text)?)
    };
    Ok(Input { source: arg.to_owned(), digest: digest(&bytes), object })
}

/// Reads inline JSON, or the contents of a file when `arg` names one.
pub fn json_argument(arg: &str) -> Result<String, Failure> {
    if arg.trim_start().starts_with('[') {
        return Ok(arg.to_owned());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))
}
