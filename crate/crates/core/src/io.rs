//! JSON exchange format for algebras and machine-readable run reports.
//!
//! Coefficients cross the boundary as exact strings ("3/2", "-1", "4"), never
//! floats, so a file round-trips bit-identically. Omitted bracket pairs are
//! zero; pairs may be given with i > j and are folded in antisymmetrically.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::certificate::Verdict;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::forms::BilinearForm;
use crate::lie::{default_labels, LieAlgebra};
use crate::linalg::Mat;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    /// [k, coefficient] pairs: [e_i, e_j] = Σ coeff · e_k.
    pub coeffs: Vec<(usize, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    /// Basis labels; defaults to e0..e{dim-1} when omitted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub table: Vec<TableEntry>,
    /// Optional gram matrix of a bilinear form on the same basis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<String>>>,
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra, form: Option<&BilinearForm>) -> AlgebraFile {
        let n = g.dim();
        let mut table = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: Vec<(usize, String)> = g
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.to_string()))
                    .collect();
                if !coeffs.is_empty() {
                    table.push(TableEntry { i, j, coeffs });
                }
            }
        }
        AlgebraFile {
            field: g.field(),
            dim: n,
            basis: g.labels().to_vec(),
            table,
            form: form.map(|f| f.gram().to_strings()),
        }
    }

    /// Builds the algebra (shape/index/coefficient checks only — run
    /// `validate` on the result for the Jacobi identity) and the optional
    /// form.
    pub fn to_algebra(&self) -> Result<(LieAlgebra, Option<BilinearForm>)> {
        self.field.validate()?;
        let labels = if self.basis.is_empty() {
            default_labels(self.dim)
        } else {
            if self.basis.len() != self.dim {
                return Err(Error::Shape(format!(
                    "dim is {} but there are {} basis labels",
                    self.dim,
                    self.basis.len()
                )));
            }
            self.basis.clone()
        };
        let mut entries = Vec::with_capacity(self.table.len());
        for (pos, e) in self.table.iter().enumerate() {
            let mut coeffs = Vec::with_capacity(e.coeffs.len());
            for (k, text) in &e.coeffs {
                let c = self.field.parse_element(text).map_err(|err| {
                    Error::Parse(format!(
                        "table entry {pos} (pair {},{}): bad coefficient '{text}': {err}",
                        e.i, e.j
                    ))
                })?;
                coeffs.push((*k, c));
            }
            entries.push(((e.i, e.j), coeffs));
        }
        let g = LieAlgebra::from_sparse(self.field, labels, &entries)?;
        let form = match &self.form {
            None => None,
            Some(rows) => {
                if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                    return Err(Error::Shape(format!(
                        "form must be a {0}x{0} matrix of coefficient strings",
                        self.dim
                    )));
                }
                let mut gram = Mat::zeros(self.field, self.dim, self.dim);
                for (i, row) in rows.iter().enumerate() {
                    for (j, text) in row.iter().enumerate() {
                        let c: FieldElement = self.field.parse_element(text).map_err(|err| {
                            Error::Parse(format!("form entry ({i}, {j}): '{text}': {err}"))
                        })?;
                        gram.set(i, j, c);
                    }
                }
                Some(BilinearForm::new(gram)?)
            }
        };
        Ok((g, form))
    }
}

pub fn read_algebra_file(path: &Path) -> Result<AlgebraFile> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Parses without checking the Jacobi identity; `validate` reports on it.
pub fn load_algebra(path: &Path) -> Result<(LieAlgebra, Option<BilinearForm>)> {
    read_algebra_file(path)?.to_algebra()
}

/// Parses and fully validates; the path every computing subcommand takes.
pub fn load_algebra_validated(path: &Path) -> Result<(LieAlgebra, Option<BilinearForm>)> {
    let (g, form) = load_algebra(path)?;
    g.validate()?;
    Ok((g, form))
}

pub fn write_algebra_file(path: &Path, file: &AlgebraFile) -> Result<()> {
    let text = serde_json::to_string_pretty(file)?;
    fs::write(path, text + "\n")?;
    Ok(())
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let out = h.finalize();
    let mut hex = String::with_capacity(7 + 2 * out.len());
    hex.push_str("sha256:");
    for b in out {
        hex.push_str(&format!("{b:02x}"));
    }
    hex
}

pub fn file_digest(path: &Path) -> Result<String> {
    Ok(digest_bytes(&fs::read(path)?))
}

/// Machine-readable run summary written by `--json`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub results: serde_json::Value,
    pub overall: Verdict,
}

pub fn write_report(path: &Path, report: &Report) -> Result<()> {
    let text = serde_json::to_string_pretty(report)?;
    fs::write(path, text + "\n")?;
    Ok(())
}
