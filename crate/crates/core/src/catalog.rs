//! Built-in algebra constructors: abelian spaces, the 3-dim Heisenberg
//! algebra, the nonabelian 2-dim algebra, sl_n in the elementary-matrix
//! basis, truncated current algebras over sl_2, and direct sums of any of
//! these. Constructions that would silently violate their documented flags
//! (perfect / centerless) in small characteristic are refused instead.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::lie::LieAlgebra;
use crate::linalg::Mat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum CatalogSpec {
    Abelian { n: usize },
    Heisenberg,
    Affine2,
    Sl { n: usize },
    CurrentSl2 { k: usize },
    DirectSum { left: Box<CatalogSpec>, right: Box<CatalogSpec> },
}

impl CatalogSpec {
    /// Compact grammar: atoms `heisenberg` (alias `h3`/`h_3`), `affine2`,
    /// `abelian:N`, `sl:N`, `current_sl2:K` (`_` works in place of `:`),
    /// joined left-associatively with `+` for direct sums.
    pub fn parse(text: &str) -> Result<CatalogSpec> {
        let mut parts = text.split('+').map(str::trim);
        let first = parts
            .next()
            .filter(|s| !s.is_empty())
            .ok_or_else(|| Error::Parse("empty catalog name".into()))?;
        let mut spec = CatalogSpec::parse_atom(first)?;
        for part in parts {
            spec = CatalogSpec::DirectSum {
                left: Box::new(spec),
                right: Box::new(CatalogSpec::parse_atom(part)?),
            };
        }
        Ok(spec)
    }

    fn parse_atom(atom: &str) -> Result<CatalogSpec> {
        match atom {
            "heisenberg" | "h3" | "h_3" => return Ok(CatalogSpec::Heisenberg),
            "affine2" => return Ok(CatalogSpec::Affine2),
            _ => {}
        }
        let (name, param) = match atom.split_once(':') {
            Some((n, p)) => (n, p),
            None => atom.rsplit_once('_').ok_or_else(|| {
                Error::Parse(format!("unknown catalog entry '{atom}'"))
            })?,
        };
        let value: usize = param
            .parse()
            .map_err(|_| Error::Parse(format!("bad parameter '{param}' in '{atom}'")))?;
        match name {
            "abelian" => Ok(CatalogSpec::Abelian { n: value }),
            "sl" => Ok(CatalogSpec::Sl { n: value }),
            "current_sl2" => Ok(CatalogSpec::CurrentSl2 { k: value }),
            _ => Err(Error::Parse(format!("unknown catalog entry '{atom}'"))),
        }
    }

    pub fn build(&self, field: FieldSpec) -> Result<LieAlgebra> {
        let g = match self {
            CatalogSpec::Abelian { n } => {
                if *n == 0 {
                    return Err(Error::InvalidParameter(
                        "abelian algebra needs dimension at least 1".into(),
                    ));
                }
                LieAlgebra::abelian(field, *n)
            }
            CatalogSpec::Heisenberg => LieAlgebra::from_sparse(
                field,
                vec!["x".into(), "y".into(), "z".into()],
                &[((0, 1), vec![(2, field.one())])],
            )?,
            CatalogSpec::Affine2 => LieAlgebra::from_sparse(
                field,
                vec!["x".into(), "y".into()],
                &[((0, 1), vec![(1, field.one())])],
            )?,
            CatalogSpec::Sl { n } => build_sl(field, *n)?,
            CatalogSpec::CurrentSl2 { k } => build_current_sl2(field, *k)?,
            CatalogSpec::DirectSum { left, right } => {
                left.build(field)?.direct_sum(&right.build(field)?)?
            }
        };
        g.validate()
            .map_err(|e| Error::Internal(format!("catalog table failed validation: {e}")))?;
        Ok(g)
    }
}

/// Elementary-matrix basis: E_ij (i < j) lexicographically, then E_ij
/// (i > j) lexicographically, then H_i = E_ii - E_{i+1,i+1}. For n = 2 this
/// is the familiar (e, f, h).
fn build_sl(field: FieldSpec, n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "sl_n needs n at least 2".into(),
        ));
    }
    let p = field.characteristic();
    if p != 0 && (n as u64) % p == 0 {
        return Err(Error::InvalidParameter(format!(
            "sl_{n} over a field of characteristic {p} has scalar central elements; refusing"
        )));
    }
    let dim = n * n - 1;
    let mut mats = Vec::with_capacity(dim);
    let mut labels = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            if i < j {
                let mut m = Mat::zeros(field, n, n);
                m.set(i, j, field.one());
                mats.push(m);
                labels.push(format!("E{i}{j}"));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i > j {
                let mut m = Mat::zeros(field, n, n);
                m.set(i, j, field.one());
                mats.push(m);
                labels.push(format!("E{i}{j}"));
            }
        }
    }
    for i in 0..n - 1 {
        let mut m = Mat::zeros(field, n, n);
        m.set(i, i, field.one());
        m.set(i + 1, i + 1, field.from_int(-1));
        mats.push(m);
        labels.push(format!("H{i}"));
    }
    // coordinates of a traceless matrix: off-diagonal entries read off
    // directly; the diagonal decomposes over the H_i by partial sums
    let coords = |m: &Mat| -> Vec<FieldElement> {
        let mut v = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..n {
                if i < j {
                    v.push(m.at(i, j).clone());
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i > j {
                    v.push(m.at(i, j).clone());
                }
            }
        }
        let mut partial = field.zero();
        for i in 0..n - 1 {
            partial = partial.add(m.at(i, i));
            v.push(partial.clone());
        }
        v
    };
    let mut table = Vec::with_capacity(dim * (dim - 1) / 2);
    for a in 0..dim {
        for b in a + 1..dim {
            table.push(coords(&mats[a].commutator(&mats[b])?));
        }
    }
    LieAlgebra::new(field, labels, table)
}

/// sl_2 ⊗ F[t]/(t^k): basis blocks (e, f, h) per power of t, bracket
/// [u⊗t^a, v⊗t^b] = [u,v]⊗t^{a+b}, truncated past t^{k-1}.
fn build_current_sl2(field: FieldSpec, k: usize) -> Result<LieAlgebra> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "current algebra needs truncation order at least 1".into(),
        ));
    }
    let p = field.characteristic();
    if p == 2 || p == 3 {
        return Err(Error::InvalidParameter(format!(
            "sl_2 current algebras degenerate in characteristic {p}; refusing"
        )));
    }
    let dim = 3 * k;
    let labels: Vec<String> = (0..k)
        .flat_map(|a| ["e", "f", "h"].map(|s| format!("{s}{a}")))
        .collect();
    // sl2 in the (e, f, h) basis: [e,f] = h, [e,h] = -2e, [f,h] = 2f
    let sl2_bracket = |s: usize, t: usize| -> Vec<(usize, i64)> {
        match (s, t) {
            (0, 1) => vec![(2, 1)],
            (1, 0) => vec![(2, -1)],
            (0, 2) => vec![(0, -2)],
            (2, 0) => vec![(0, 2)],
            (1, 2) => vec![(1, 2)],
            (2, 1) => vec![(1, -2)],
            _ => vec![],
        }
    };
    let mut table = Vec::with_capacity(dim * (dim - 1) / 2);
    for x in 0..dim {
        for y in x + 1..dim {
            let (a, s) = (x / 3, x % 3);
            let (b, t) = (y / 3, y % 3);
            let mut row = vec![field.zero(); dim];
            if a + b < k {
                for (target, c) in sl2_bracket(s, t) {
                    row[3 * (a + b) + target] = field.from_int(c);
                }
            }
            table.push(row);
        }
    }
    LieAlgebra::new(field, labels, table)
}
