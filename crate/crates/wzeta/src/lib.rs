//! File formats and the command-line front end for `wzeta-core`.
//!
//! Polynomials are read either as plain text (`x1^2 + 3/2*x2^3`) or as JSON
//! `{"vars": d, "terms": [{"exp": [..], "coef": "p/q"}]}`. Every command
//! produces an [`Outcome`]: a JSON document, a text rendering and an exit
//! code.

pub mod commands;
pub mod format;
pub mod parse;
pub mod selftest;

use std::path::{Path, PathBuf};

use thiserror::Error;
use wzeta_core::newton::{NondegWitness, SparsePoly};
use wzeta_core::recovery::RecoveryError;

pub use commands::{analyze, compare, recover, zeta, Budget};
pub use parse::{parse_polynomial, ParseError};
pub use selftest::{selftest, SelftestConfig};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    /// Input rejected: unparseable, not convenient, not weighted
    /// homogeneous, or outside a command's precondition.
    Gate = 2,
    /// A compact face is certified degenerate.
    Degenerate = 3,
    /// An internal check failed.
    Invariant = 4,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid polynomial JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Gate(String),
    #[error("face {face} is degenerate: {witness}")]
    Degenerate { face: String, witness: String },
    #[error("recovery failed: {0}")]
    Recovery(RecoveryError),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::Json(_) | CliError::Gate(_) => {
                Status::Gate
            }
            CliError::Recovery(RecoveryError::NonSingular) => Status::Gate,
            CliError::Degenerate { .. } => Status::Degenerate,
            CliError::Recovery(_) | CliError::Invariant(_) => Status::Invariant,
        }
    }

    pub(crate) fn degenerate(face: impl ToString, witness: Option<&NondegWitness>) -> Self {
        CliError::Degenerate {
            face: face.to_string(),
            witness: witness.map_or_else(|| "no witness".into(), format::witness_str),
        }
    }
}

/// Result of a command.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: serde_json::Value,
    pub text: String,
    pub status: Status,
}

impl Outcome {
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

/// Reads JSON when the text starts with `{`, the plain syntax otherwise.
pub fn polynomial_from_str(text: &str) -> Result<SparsePoly, CliError> {
    if text.trim_start().starts_with('{') {
        let p: format::PolyJson = serde_json::from_str(text)?;
        p.to_poly()
    } else {
        Ok(parse_polynomial(text.trim())?)
    }
}

pub fn polynomial_from_file(path: &Path) -> Result<SparsePoly, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    polynomial_from_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_text_inputs_agree() {
        let from_text = polynomial_from_str("x1^2 - 1/3*x2^3").unwrap();
        let json = serde_json::to_string(&format::PolyJson::from_poly(&from_text)).unwrap();
        assert_eq!(
            json,
            r#"{"vars":2,"terms":[{"exp":[0,3],"coef":"-1/3"},{"exp":[2,0],"coef":"1/1"}]}"#
        );
        assert_eq!(polynomial_from_str(&json).unwrap(), from_text);
        assert_eq!(
            polynomial_from_str("{\"vars\": 1}").unwrap_err().status(),
            Status::Gate
        );
        assert_eq!(
            polynomial_from_str(r#"{"vars":1,"terms":[{"exp":[2],"coef":"1/0"}]}"#)
                .unwrap_err()
                .status(),
            Status::Gate
        );
    }
}
