//! Finite-dimensional Lie algebras presented by structure constants.
//!
//! The bracket table stores [e_i, e_j] only for i < j, so antisymmetry and
//! [x, x] = 0 hold by construction; the Jacobi identity is the one axiom that
//! has to be checked, and `validate` checks it exhaustively with a witness
//! triple on failure.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{rref_nullspace, Mat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    /// [e_i, e_j] for i < j in lexicographic order; n(n-1)/2 coefficient
    /// vectors of length n.
    table: Vec<Vec<FieldElement>>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// `table` lists [e_i, e_j] for i < j in lexicographic order. Shapes are
    /// checked here; the Jacobi identity is checked separately by `validate`.
    pub fn new(field: FieldSpec, labels: Vec<String>, table: Vec<Vec<FieldElement>>) -> Result<Self> {
        let dim = labels.len();
        let expected = dim * dim.saturating_sub(1) / 2;
        if table.len() != expected {
            return Err(Error::Shape(format!(
                "dimension {dim} needs {expected} bracket vectors, got {}",
                table.len()
            )));
        }
        for row in &table {
            if row.len() != dim {
                return Err(Error::Shape(format!(
                    "bracket vector of length {} in dimension {dim}",
                    row.len()
                )));
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch(format!(
                        "bracket coefficient over {} in an algebra over {}",
                        e.field(),
                        field
                    )));
                }
            }
        }
        Ok(LieAlgebra {
            field,
            dim,
            labels,
            table,
        })
    }

    /// Builds from a sparse list of brackets: ((i, j), [(k, coeff)]) meaning
    /// [e_i, e_j] = Σ coeff · e_k. Pairs may come in either order; duplicate
    /// pairs are rejected. Unlisted brackets are zero.
    pub fn from_sparse(
        field: FieldSpec,
        labels: Vec<String>,
        entries: &[((usize, usize), Vec<(usize, FieldElement)>)],
    ) -> Result<Self> {
        let dim = labels.len();
        let mut table = vec![vec![field.zero(); dim]; dim * dim.saturating_sub(1) / 2];
        let mut seen = vec![false; table.len()];
        for ((a, b), coeffs) in entries {
            if *a >= dim || *b >= dim {
                return Err(Error::IndexOutOfRange(format!(
                    "bracket pair ({a}, {b}) in dimension {dim}"
                )));
            }
            if a == b {
                return Err(Error::InvalidParameter(format!(
                    "bracket [e{a}, e{a}] is zero by antisymmetry and cannot be set"
                )));
            }
            let (i, j, flip) = if a < b { (*a, *b, false) } else { (*b, *a, true) };
            let idx = pair_index(dim, i, j);
            if seen[idx] {
                return Err(Error::InvalidParameter(format!(
                    "bracket for pair ({i}, {j}) given twice"
                )));
            }
            seen[idx] = true;
            for (k, c) in coeffs {
                if *k >= dim {
                    return Err(Error::IndexOutOfRange(format!(
                        "bracket target e{k} in dimension {dim}"
                    )));
                }
                if c.field() != field {
                    return Err(Error::FieldMismatch(
                        "bracket coefficient over a different field".into(),
                    ));
                }
                let term = if flip { c.neg() } else { c.clone() };
                table[idx][*k] = table[idx][*k].add(&term);
            }
        }
        LieAlgebra::new(field, labels, table)
    }

    pub fn abelian(field: FieldSpec, n: usize) -> Self {
        LieAlgebra::new(field, default_labels(n), vec![vec![field.zero(); n]; n * n.saturating_sub(1) / 2])
            .expect("abelian table is rectangular")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_vector(&self, i: usize) -> Vec<FieldElement> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Coefficient vector of [e_i, e_j] for any i, j.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<FieldElement> {
        if i == j {
            return vec![self.field.zero(); self.dim];
        }
        if i < j {
            self.table[pair_index(self.dim, i, j)].clone()
        } else {
            self.table[pair_index(self.dim, j, i)]
                .iter()
                .map(FieldElement::neg)
                .collect()
        }
    }

    /// Structure constant: coefficient of e_k in [e_i, e_j], with sign.
    pub fn structure_coeff(&self, i: usize, j: usize, k: usize) -> FieldElement {
        if i == j {
            return self.field.zero();
        }
        if i < j {
            self.table[pair_index(self.dim, i, j)][k].clone()
        } else {
            self.table[pair_index(self.dim, j, i)][k].neg()
        }
    }

    pub fn bracket(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::Shape(format!(
                "bracket arguments must have length {}",
                self.dim
            )));
        }
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if j == i || y[j].is_zero() {
                    continue;
                }
                let scale = x[i].mul(&y[j]);
                let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
                let row = &self.table[pair_index(self.dim, a, b)];
                for k in 0..self.dim {
                    if row[k].is_zero() {
                        continue;
                    }
                    let term = scale.mul(&row[k]);
                    out[k] = if flip { out[k].sub(&term) } else { out[k].add(&term) };
                }
            }
        }
        Ok(out)
    }

    /// [v, e_k] for a coefficient vector v.
    fn bracket_vec_basis(&self, v: &[FieldElement], k: usize) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.dim];
        for (a, coeff) in v.iter().enumerate() {
            if coeff.is_zero() || a == k {
                continue;
            }
            let w = self.bracket_basis(a, k);
            for (t, e) in w.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                out[t] = out[t].add(&coeff.mul(e));
            }
        }
        out
    }

    /// Exhaustive Jacobi check over basis triples; reports the first failing
    /// triple. Antisymmetry needs no check — the i < j storage makes it
    /// structural.
    pub fn validate(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let ij = &self.table[pair_index(self.dim, i, j)];
                for k in j + 1..self.dim {
                    let jk = &self.table[pair_index(self.dim, j, k)];
                    let ik = &self.table[pair_index(self.dim, i, k)];
                    let mut total = self.bracket_vec_basis(ij, k);
                    for (t, e) in self.bracket_vec_basis(jk, i).into_iter().enumerate() {
                        total[t] = total[t].add(&e);
                    }
                    // [[e_k, e_i], e_j] = -[[e_i, e_k], e_j]
                    for (t, e) in self.bracket_vec_basis(ik, j).into_iter().enumerate() {
                        total[t] = total[t].sub(&e);
                    }
                    if total.iter().any(|e| !e.is_zero()) {
                        return Err(Error::AxiomViolation {
                            reason: "jacobi identity fails".into(),
                            i,
                            j,
                            k,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of ad_x : y ↦ [x, y] acting on coordinate columns.
    pub fn ad_matrix(&self, x: &[FieldElement]) -> Result<Mat> {
        let mut m = Mat::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &self.basis_vector(j))?;
            for (k, e) in col.into_iter().enumerate() {
                if !e.is_zero() {
                    m.set(k, j, e);
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            if j == i {
                continue;
            }
            let col = self.bracket_basis(i, j);
            for (k, e) in col.into_iter().enumerate() {
                if !e.is_zero() {
                    m.set(k, j, e);
                }
            }
        }
        m
    }

    /// { x : [x, g] = 0 }, as the nullspace of the stacked maps x ↦ [x, e_j].
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                let row: Vec<FieldElement> =
                    (0..n).map(|i| self.structure_coeff(i, j, k)).collect();
                rows.push(row);
            }
        }
        let m = Mat::from_rows(self.field, rows).expect("structure rows are rectangular");
        let (_, ns) = rref_nullspace(&m);
        Subspace::from_spanning(self.field, n, &ns).expect("nullspace vectors have parent length")
    }

    /// [g, g] as a subspace: span of all basis brackets.
    pub fn derived_subspace(&self) -> Subspace {
        Subspace::from_spanning(self.field, self.dim, &self.table)
            .expect("table vectors have parent length")
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subspace().dim() == self.dim
    }

    pub fn is_centerless(&self) -> bool {
        self.center().dim() == 0
    }

    /// Checks that `s` is closed under bracketing with the whole algebra.
    pub fn check_ideal(&self, s: &Subspace) -> Result<()> {
        for (idx, v) in s.basis().iter().enumerate() {
            for j in 0..self.dim {
                let w = self.bracket(v, &self.basis_vector(j))?;
                if !s.contains(&w) {
                    return Err(Error::NotAnIdeal {
                        basis_index: idx,
                        vector: w.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
                    });
                }
            }
        }
        Ok(())
    }

    /// Quotient by an ideal. Returns the quotient algebra and the projection
    /// matrix sending parent coordinates to quotient coordinates.
    ///
    /// Quotient basis: classes of the parent basis vectors at the ideal's
    /// non-pivot columns, making the projection of a reduced vector a plain
    /// coordinate read-off.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Mat)> {
        if ideal.parent_dim() != self.dim || ideal.field() != self.field {
            return Err(Error::Shape("ideal lives in a different space".into()));
        }
        self.check_ideal(ideal)?;
        let keep = ideal.non_pivots();
        let m = keep.len();
        let project = |v: &[FieldElement]| -> Vec<FieldElement> {
            let r = ideal.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let mut table = Vec::with_capacity(m * m.saturating_sub(1) / 2);
        for a in 0..m {
            for b in a + 1..m {
                let w = self.bracket_basis(keep[a], keep[b]);
                table.push(project(&w));
            }
        }
        let labels = keep.iter().map(|&c| self.labels[c].clone()).collect();
        let quotient = LieAlgebra::new(self.field, labels, table)?;
        quotient.validate().map_err(|e| {
            Error::Internal(format!("quotient by a verified ideal broke jacobi: {e}"))
        })?;
        let mut proj = Mat::zeros(self.field, m, self.dim);
        for i in 0..self.dim {
            let col = project(&self.basis_vector(i));
            for (a, e) in col.into_iter().enumerate() {
                if !e.is_zero() {
                    proj.set(a, i, e);
                }
            }
        }
        Ok((quotient, proj))
    }

    /// Block direct sum; label collisions on the right get primes appended.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                "direct sum of algebras over different fields".into(),
            ));
        }
        let n = self.dim + other.dim;
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut candidate = l.clone();
            while labels.contains(&candidate) {
                candidate.push('\'');
            }
            labels.push(candidate);
        }
        let pad_left = |v: &[FieldElement]| -> Vec<FieldElement> {
            let mut w = v.to_vec();
            w.extend(vec![self.field.zero(); other.dim]);
            w
        };
        let pad_right = |v: &[FieldElement]| -> Vec<FieldElement> {
            let mut w = vec![self.field.zero(); self.dim];
            w.extend_from_slice(v);
            w
        };
        let mut table = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let row = if j < self.dim {
                    pad_left(&self.table[pair_index(self.dim, i, j)])
                } else if i >= self.dim {
                    pad_right(&other.table[pair_index(other.dim, i - self.dim, j - self.dim)])
                } else {
                    vec![self.field.zero(); n]
                };
                table.push(row);
            }
        }
        LieAlgebra::new(self.field, labels, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn qe(v: i64) -> FieldElement {
        q().from_int(v)
    }

    /// Basis (e, f, h): [e,f] = h, [e,h] = -2e, [f,h] = 2f.
    fn sl2() -> LieAlgebra {
        LieAlgebra::from_sparse(
            q(),
            vec!["e".into(), "f".into(), "h".into()],
            &[
                ((0, 1), vec![(2, qe(1))]),
                ((0, 2), vec![(0, qe(-2))]),
                ((1, 2), vec![(1, qe(2))]),
            ],
        )
        .unwrap()
    }

    /// Basis (x, y, z): [x, y] = z.
    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_sparse(
            q(),
            vec!["x".into(), "y".into(), "z".into()],
            &[((0, 1), vec![(2, qe(1))])],
        )
        .unwrap()
    }

    /// Basis (x, y): [x, y] = y.
    fn affine2() -> LieAlgebra {
        LieAlgebra::from_sparse(
            q(),
            vec!["x".into(), "y".into()],
            &[((0, 1), vec![(1, qe(1))])],
        )
        .unwrap()
    }

    #[test]
    fn sl2_is_perfect_and_centerless() {
        let g = sl2();
        g.validate().unwrap();
        assert_eq!(g.center().dim(), 0);
        assert_eq!(g.derived_subspace().dim(), 3);
        assert!(g.is_perfect());
        assert!(g.is_centerless());
    }

    #[test]
    fn heisenberg_center_and_derived() {
        let g = heisenberg();
        g.validate().unwrap();
        let c = g.center();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[qe(0), qe(0), qe(1)]));
        assert_eq!(g.derived_subspace().dim(), 1);
        assert!(!g.is_perfect());
    }

    #[test]
    fn affine_line_is_centerless_not_perfect() {
        let g = affine2();
        g.validate().unwrap();
        assert!(g.is_centerless());
        assert!(!g.is_perfect());
        assert_eq!(g.derived_subspace().dim(), 1);
    }

    #[test]
    fn corrupted_table_reports_witness_triple() {
        // sl2 with [f, h] redirected to 2e: jacobi breaks on (0, 1, 2)
        let bad = LieAlgebra::from_sparse(
            q(),
            default_labels(3),
            &[
                ((0, 1), vec![(2, qe(1))]),
                ((0, 2), vec![(0, qe(-2))]),
                ((1, 2), vec![(0, qe(2))]),
            ],
        )
        .unwrap();
        match bad.validate() {
            Err(Error::AxiomViolation { i, j, k, .. }) => assert_eq!((i, j, k), (0, 1, 2)),
            other => panic!("expected axiom violation, got {other:?}"),
        }
    }

    #[test]
    fn bracket_is_antisymmetric_by_construction() {
        let g = sl2();
        let x = vec![qe(1), qe(2), qe(3)];
        let y = vec![qe(-1), qe(0), qe(5)];
        let xy = g.bracket(&x, &y).unwrap();
        let yx = g.bracket(&y, &x).unwrap();
        for (a, b) in xy.iter().zip(&yx) {
            assert_eq!(*a, b.neg());
        }
        assert!(g.bracket(&x, &x).unwrap().iter().all(FieldElement::is_zero));
    }

    #[test]
    fn ad_matrix_matches_bracket() {
        let g = sl2();
        let x = vec![qe(1), qe(-1), qe(2)];
        let ad = g.ad_matrix(&x).unwrap();
        let y = vec![qe(3), qe(0), qe(1)];
        assert_eq!(ad.mul_vec(&y).unwrap(), g.bracket(&x, &y).unwrap());
        // trace of any ad is 0 here: sl2 is perfect, so ad lands in traceless maps
        assert!(ad.trace().is_zero());
    }

    #[test]
    fn heisenberg_modulo_center_is_abelian() {
        let g = heisenberg();
        let (quot, proj) = g.quotient(&g.center()).unwrap();
        assert_eq!(quot.dim(), 2);
        assert_eq!(quot.derived_subspace().dim(), 0);
        // projection kills z and keeps x, y
        assert_eq!(proj.mul_vec(&[qe(0), qe(0), qe(7)]).unwrap(), vec![qe(0), qe(0)]);
        assert_eq!(proj.mul_vec(&[qe(1), qe(2), qe(3)]).unwrap(), vec![qe(1), qe(2)]);
    }

    #[test]
    fn non_ideal_is_rejected_with_location() {
        let g = affine2();
        let line = Subspace::from_spanning(q(), 2, &[vec![qe(1), qe(0)]]).unwrap();
        match g.quotient(&line) {
            Err(Error::NotAnIdeal { basis_index, .. }) => assert_eq!(basis_index, 0),
            other => panic!("expected ideal failure, got {other:?}"),
        }
    }

    #[test]
    fn direct_sum_blocks_do_not_talk() {
        let g = heisenberg().direct_sum(&sl2()).unwrap();
        g.validate().unwrap();
        assert_eq!(g.dim(), 6);
        assert_eq!(g.center().dim(), 1);
        assert_eq!(g.derived_subspace().dim(), 4);
        // cross bracket vanishes
        let x = g.basis_vector(0);
        let e = g.basis_vector(3);
        assert!(g.bracket(&x, &e).unwrap().iter().all(FieldElement::is_zero));
    }

    #[test]
    fn duplicate_label_in_sum_gets_renamed() {
        let a = affine2();
        let sum = a.direct_sum(&a).unwrap();
        assert_eq!(sum.labels(), &["x", "y", "x'", "y'"]);
    }

    #[test]
    fn abelian_center_is_everything() {
        let g = LieAlgebra::abelian(q(), 4);
        assert_eq!(g.center().dim(), 4);
        assert_eq!(g.derived_subspace().dim(), 0);
    }
}
