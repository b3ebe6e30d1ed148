//! Proof scripts: a chain of arrow terms linked by axiom applications.
//!
//! ```text
//! theory gamma
//! # comments and blank lines are ignored
//! term: (g{*,*} o id{(*^*)})
//! step: cat1 fwd at root
//! term: g{*,*}
//! ```
//!
//! Each step rewrites the subterm of the preceding term at the given
//! position; the result must agree with the next listed term up to
//! associativity of `∘` and removal of identity factors.

use std::fmt::Write as _;

use thiserror::Error;

use super::pattern::{apply_axiom_all, ApplyError, Direction, Theory};
use super::{ArrowError, ArrowTerm, Endpoints, Path, TheoryKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub axiom: String,
    pub direction: Direction,
    pub path: Path,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofScript {
    pub theory: TheoryKind,
    /// `terms.len() == steps.len() + 1`.
    pub terms: Vec<ArrowTerm>,
    pub steps: Vec<ProofStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ScriptParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("script is for theory {script}, checker is for {checker}")]
    TheoryMismatch {
        script: TheoryKind,
        checker: TheoryKind,
    },
    #[error("term {index} does not type-check: {error}")]
    IllTyped { index: usize, error: ArrowError },
    #[error("term {index} has endpoints {found}, expected {expected}")]
    EndpointsChanged {
        index: usize,
        expected: Endpoints,
        found: Endpoints,
    },
    #[error("step {step}: unknown axiom '{name}'")]
    UnknownAxiom { step: usize, name: String },
    #[error("step {step}: {error}")]
    NotApplicable { step: usize, error: ApplyError },
    #[error("step {step}: rewriting does not produce the next term {expected}")]
    WrongResult { step: usize, expected: String },
}

impl ChainError {
    /// The 1-based step at fault, if the error is attributable to one.
    pub fn step(&self) -> Option<usize> {
        match self {
            ChainError::UnknownAxiom { step, .. }
            | ChainError::NotApplicable { step, .. }
            | ChainError::WrongResult { step, .. } => Some(*step),
            ChainError::IllTyped { index, .. } | ChainError::EndpointsChanged { index, .. } => {
                Some((*index).max(1))
            }
            ChainError::TheoryMismatch { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub steps: usize,
    pub endpoints: Endpoints,
}

impl ProofScript {
    pub fn first(&self) -> &ArrowTerm {
        &self.terms[0]
    }

    pub fn last(&self) -> &ArrowTerm {
        self.terms.last().expect("a script has at least one term")
    }

    pub fn parse(text: &str) -> Result<ProofScript, ScriptParseError> {
        let err = |line: usize, message: String| ScriptParseError { line, message };
        let mut theory = None;
        let mut terms = Vec::new();
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let Some(kind) = theory else {
                let name = content
                    .strip_prefix("theory ")
                    .ok_or_else(|| err(line, "expected 'theory <name>'".into()))?;
                theory = Some(
                    name.trim()
                        .parse::<TheoryKind>()
                        .map_err(|e| err(line, e))?,
                );
                continue;
            };
            if let Some(body) = content.strip_prefix("term:") {
                if terms.len() != steps.len() {
                    return Err(err(line, "expected a step, found a term".into()));
                }
                let t = ArrowTerm::parse(body, kind).map_err(|e| err(line, e.to_string()))?;
                terms.push(t);
            } else if let Some(body) = content.strip_prefix("step:") {
                if terms.len() != steps.len() + 1 {
                    return Err(err(line, "expected a term, found a step".into()));
                }
                steps.push(parse_step(body).map_err(|m| err(line, m))?);
            } else {
                return Err(err(line, "expected 'term:' or 'step:'".into()));
            }
        }
        let last_line = text.lines().count().max(1);
        let theory = theory.ok_or_else(|| err(last_line, "missing 'theory' line".into()))?;
        if terms.is_empty() || terms.len() != steps.len() + 1 {
            return Err(err(last_line, "a script must end with a term".into()));
        }
        Ok(ProofScript {
            theory,
            terms,
            steps,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("theory {}\n", self.theory);
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                let s = &self.steps[i - 1];
                let _ = writeln!(out, "step: {} {} at {}", s.axiom, s.direction, s.path);
            }
            let _ = writeln!(out, "term: {t}");
        }
        out
    }
}

fn parse_step(body: &str) -> Result<ProofStep, String> {
    let words: Vec<&str> = body.split_whitespace().collect();
    match words.as_slice() {
        [axiom, dir, "at", path] => Ok(ProofStep {
            axiom: axiom.to_string(),
            direction: dir.parse()?,
            path: path.parse()?,
        }),
        _ => Err("expected 'step: <axiom> <fwd|bwd> at <position>'".into()),
    }
}

/// Checks every step of the script against the theory's axioms.
pub fn verify_chain(script: &ProofScript, theory: &Theory) -> Result<ChainReport, ChainError> {
    if script.theory != theory.kind {
        return Err(ChainError::TheoryMismatch {
            script: script.theory,
            checker: theory.kind,
        });
    }
    let kind = theory.kind;
    let type_of = |index: usize, t: &ArrowTerm| {
        t.infer_type(kind)
            .map_err(|error| ChainError::IllTyped { index, error })
    };
    let endpoints = type_of(0, &script.terms[0])?;
    for (i, step) in script.steps.iter().enumerate() {
        let n = i + 1;
        let here = &script.terms[i];
        let next = &script.terms[n];
        let found = type_of(n, next)?;
        if found != endpoints {
            return Err(ChainError::EndpointsChanged {
                index: n,
                expected: endpoints,
                found,
            });
        }
        let axiom = theory
            .axiom(&step.axiom)
            .ok_or_else(|| ChainError::UnknownAxiom {
                step: n,
                name: step.axiom.clone(),
            })?;
        let results = apply_axiom_all(here, axiom, step.direction, &step.path, kind)
            .map_err(|error| ChainError::NotApplicable { step: n, error })?;
        let target = next.cat_normal();
        if !results.iter().any(|r| r.cat_normal() == target) {
            return Err(ChainError::WrongResult {
                step: n,
                expected: next.to_string(),
            });
        }
    }
    Ok(ChainReport {
        steps: script.steps.len(),
        endpoints,
    })
}
