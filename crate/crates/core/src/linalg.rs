//! Dense exact linear algebra over Q and F_p.
//!
//! Everything funnels through one canonical reduced-row-echelon routine:
//! leftmost pivots, pivots normalized to 1, full elimination above and below.
//! That single convention fixes all basis tie-breaking, so identical inputs
//! give bit-identical bases everywhere downstream.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Dense matrix over a field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<FieldElement>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Shape("ragged matrix rows".into()));
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch(format!(
                        "entry over {} in a {} matrix",
                        e.field(),
                        field
                    )));
                }
                entries.push(e);
            }
        }
        Ok(Mat {
            rows: r,
            cols: c,
            field,
            entries,
        })
    }

    /// Reshapes a flat row-major vector into a matrix.
    pub fn from_flat(field: FieldSpec, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Mat {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Row-major flattening; the convention used for viewing n x n maps as
    /// n^2-vectors throughout the crate.
    pub fn flatten(&self) -> Vec<FieldElement> {
        self.entries.clone()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.zip_check(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.zip_check(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    pub fn neg(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(FieldElement::neg).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = out[r].add(&a.mul(&v[c]));
            }
        }
        Ok(out)
    }

    /// Commutator AB - BA.
    pub fn commutator(&self, other: &Mat) -> Result<Mat> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> FieldElement {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.at(i, i));
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect()
    }

    fn zip_check(&self, other: &Mat) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols || self.field != other.field {
            return Err(Error::Shape("matrix shape/field mismatch".into()));
        }
        Ok(())
    }
}

/// Canonical reduced row echelon form of a list of row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub width: usize,
    pub field: FieldSpec,
    /// Nonzero rows of the RREF, in pivot order; zero rows are dropped.
    pub rows: Vec<Vec<FieldElement>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Reduces `rows` (each of length `width`) to canonical RREF.
pub fn rref(field: FieldSpec, width: usize, mut rows: Vec<Vec<FieldElement>>) -> Echelon {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row >= nrows {
            break;
        }
        let Some(found) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].inverse().expect("nonzero pivot");
        if !rows[pivot_row][col].is_one() {
            for c in col..width {
                rows[pivot_row][c] = rows[pivot_row][c].mul(&inv);
            }
        }
        for r in 0..nrows {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..width {
                if rows[pivot_row][c].is_zero() {
                    continue;
                }
                rows[r][c] = rows[r][c].sub(&factor.mul(&rows[pivot_row][c]));
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    Echelon {
        width,
        field,
        rows,
        pivots,
    }
}

/// Rank and canonical nullspace basis of a matrix.
///
/// Nullspace vectors follow the free-variable unit pattern: one vector per
/// non-pivot column `f`, with entry 1 at `f`, the negated RREF coefficients at
/// the pivot columns, and 0 at all other free columns. Basis vectors are
/// ordered by free column index.
pub fn rref_nullspace(m: &Mat) -> (usize, Vec<Vec<FieldElement>>) {
    let field = m.field();
    let rows: Vec<Vec<FieldElement>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let ech = rref(field, m.cols(), rows);
    let rank = ech.rank();
    let pivot_set: Vec<usize> = ech.pivots.clone();
    let mut basis = Vec::with_capacity(m.cols() - rank);
    for free in 0..m.cols() {
        if pivot_set.binary_search(&free).is_ok() {
            continue;
        }
        let mut v = vec![field.zero(); m.cols()];
        v[free] = field.one();
        for (row_idx, &p) in pivot_set.iter().enumerate() {
            v[p] = ech.rows[row_idx][free].neg();
        }
        basis.push(v);
    }
    (rank, basis)
}

/// Rank and echelonized basis of span(vs ∪ ws).
pub fn span_union_rank(
    field: FieldSpec,
    len: usize,
    vs: &[Vec<FieldElement>],
    ws: &[Vec<FieldElement>],
) -> Result<(usize, Vec<Vec<FieldElement>>)> {
    let mut all = Vec::with_capacity(vs.len() + ws.len());
    for v in vs.iter().chain(ws.iter()) {
        if v.len() != len {
            return Err(Error::Shape(format!(
                "vector of length {} in a span over length {len}",
                v.len()
            )));
        }
        all.push(v.clone());
    }
    let ech = rref(field, len, all);
    Ok((ech.rank(), ech.rows))
}

/// Solves `a x = b` exactly. Returns `None` when inconsistent; with multiple
/// solutions, free variables are set to zero (the canonical particular
/// solution).
pub fn solve(a: &Mat, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
    if b.len() != a.rows() {
        return Err(Error::Shape(format!(
            "system has {} rows but rhs has length {}",
            a.rows(),
            b.len()
        )));
    }
    let field = a.field();
    let aug_width = a.cols() + 1;
    let rows: Vec<Vec<FieldElement>> = (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let ech = rref(field, aug_width, rows);
    if ech.pivots.last() == Some(&a.cols()) {
        return Ok(None); // pivot in the rhs column: inconsistent
    }
    let mut x = vec![field.zero(); a.cols()];
    for (row_idx, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.rows[row_idx][a.cols()].clone();
    }
    Ok(Some(x))
}

/// A subspace of F^n held as a canonical echelonized basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    parent_dim: usize,
    field: FieldSpec,
    basis: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(field: FieldSpec, parent_dim: usize, vecs: &[Vec<FieldElement>]) -> Result<Self> {
        for v in vecs {
            if v.len() != parent_dim {
                return Err(Error::Shape(format!(
                    "spanning vector of length {} in F^{parent_dim}",
                    v.len()
                )));
            }
        }
        let ech = rref(field, parent_dim, vecs.to_vec());
        Ok(Subspace {
            parent_dim,
            field,
            basis: ech.rows,
            pivots: ech.pivots,
        })
    }

    pub fn zero(field: FieldSpec, parent_dim: usize) -> Self {
        Subspace {
            parent_dim,
            field,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, parent_dim: usize) -> Self {
        let basis: Vec<Vec<FieldElement>> = (0..parent_dim)
            .map(|i| {
                let mut v = vec![field.zero(); parent_dim];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace {
            parent_dim,
            field,
            pivots: (0..parent_dim).collect(),
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn parent_dim(&self) -> usize {
        self.parent_dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; the canonical complement coordinates.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.parent_dim)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .collect()
    }

    /// Remainder of `v` after subtracting its projection onto the basis rows.
    pub fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for c in p..self.parent_dim {
                if row[c].is_zero() {
                    continue;
                }
                w[c] = w[c].sub(&factor.mul(&row[c]));
            }
        }
        w
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        v.len() == self.parent_dim && self.reduce(v).iter().all(FieldElement::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if outside.
    ///
    /// Because the basis is in RREF, the coordinate along row k is just the
    /// entry of `v` at that row's pivot column.
    pub fn coordinates(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Canonical bases are unique, so equality of spans is structural equality.
    pub fn same_space(&self, other: &Subspace) -> bool {
        self == other
    }
}
