//! Machine-checkable verification results.
//!
//! Every nontrivial check in the crate reports a `Certificate`: a list of
//! named claims, each pass/fail, with the dimensions it relied on and — when
//! a claim fails — a concrete witness that can be re-checked by hand.
//!
//! Claims marked `gate` are hypothesis checks. When a gate fails, the
//! statement under test simply does not apply, so the certificate resolves
//! to `NotApplicable` rather than `Fail`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::NotApplicable => write!(f, "not applicable"),
        }
    }
}

/// Concrete evidence attached to a failing (or occasionally passing) claim.
/// All scalar data is carried as exact decimal/fraction strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A distinguished vector, e.g. a nonzero central element.
    Vector { entries: Vec<String> },
    /// A distinguished linear map in basis coordinates, e.g. an outer
    /// derivation.
    Matrix { rows: Vec<Vec<String>> },
    /// Basis indices of a failing triple identity.
    BasisTriple { i: usize, j: usize, k: usize },
    /// A pair of lattice degrees, e.g. exponents whose commutator hits a
    /// target monomial.
    DegreePair { left: Vec<String>, right: Vec<String> },
}

impl Witness {
    pub fn vector<S: ToString>(entries: &[S]) -> Self {
        Witness::Vector {
            entries: entries.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub verdict: Verdict,
    /// Hypothesis checks gate the whole certificate: their failure means the
    /// statement under test does not apply to this input.
    #[serde(default)]
    pub gate: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Claim {
    pub fn new(name: &str, ok: bool) -> Self {
        Claim {
            name: name.to_string(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            gate: false,
            dims: BTreeMap::new(),
            witness: None,
        }
    }

    pub fn gate(name: &str, ok: bool) -> Self {
        let mut c = Claim::new(name, ok);
        c.gate = true;
        c
    }

    pub fn with_dim(mut self, key: &str, value: usize) -> Self {
        self.dims.insert(key.to_string(), value);
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// What was checked, e.g. "derivation algebra of sl2 is complete".
    pub subject: String,
    pub claims: Vec<Claim>,
    pub overall: Verdict,
}

impl Certificate {
    pub fn new(subject: &str) -> Self {
        Certificate {
            subject: subject.to_string(),
            claims: Vec::new(),
            overall: Verdict::Pass,
        }
    }

    pub fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
        self.overall = Certificate::resolve(&self.claims);
    }

    fn resolve(claims: &[Claim]) -> Verdict {
        if claims
            .iter()
            .any(|c| c.gate && c.verdict == Verdict::Fail)
        {
            return Verdict::NotApplicable;
        }
        if claims.iter().any(|c| c.verdict == Verdict::Fail) {
            return Verdict::Fail;
        }
        Verdict::Pass
    }

    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    /// Process-exit mapping: a failed hypothesis is not an error, a failed
    /// conclusion is.
    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Verdict::Pass | Verdict::NotApplicable => 0,
            Verdict::Fail => 1,
        }
    }
}
