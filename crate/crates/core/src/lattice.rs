//! Integer matrices, Smith normal form, and kernels of integer maps taken
//! modulo N. Used for the radical of the antisymmetric pairing on exponent
//! lattices, where arithmetic lives in Z and Z/N rather than a field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense matrix over Z, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Shape("ragged integer matrix rows".into()));
            }
            entries.extend(row);
        }
        Ok(IntMat {
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "integer matrix has {} columns, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = q * self.at(k, c);
            let v = self.at(i, c) - delta;
            self.set(i, c, v);
        }
    }

    /// row_t += row_i
    fn row_add(&mut self, t: usize, i: usize) {
        for c in 0..self.cols {
            let v = self.at(t, c) + self.at(i, c);
            self.set(t, c, v);
        }
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let delta = q * self.at(r, t);
            let v = self.at(r, j) - delta;
            self.set(r, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, j);
            self.set(r, j, v);
        }
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.at(r, j).clone()).collect()
    }
}

/// Smith normal form data: `diag` has min(rows, cols) entries, nonnegative,
/// each dividing the next; `right` is the unimodular column transform V with
/// U * M * V diagonal. Only V is kept, which is what kernels need.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub right: IntMat,
}

pub fn smith_normal_form(m: &IntMat) -> Smith {
    let mut d = m.clone();
    let (r, c) = (d.rows(), d.cols());
    let mut v = IntMat::identity(c);
    let steps = r.min(c);
    for t in 0..steps {
        loop {
            // smallest |nonzero| entry of the trailing submatrix, row-major tie-break
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if d.at(i, j).is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => d.at(i, j).abs() < d.at(pi, pj).abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break; // trailing block is zero; diagonal entry stays 0
            };
            d.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            // knock out the pivot row and column; truncated division keeps
            // |remainder| < |pivot|, so re-picking the pivot terminates
            let mut clean = true;
            for i in t + 1..r {
                if d.at(i, t).is_zero() {
                    continue;
                }
                let q = d.at(i, t) / d.at(t, t);
                d.row_sub(i, t, &q);
                if !d.at(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if d.at(t, j).is_zero() {
                    continue;
                }
                let q = d.at(t, j) / d.at(t, t);
                d.col_sub(j, t, &q);
                v.col_sub(j, t, &q);
                if !d.at(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // force the divisibility chain before leaving this pivot
            let mut offender = None;
            'scan: for i in t + 1..r {
                for j in t + 1..c {
                    if !d.at(i, j).mod_floor(d.at(t, t)).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => d.row_add(t, i),
                None => break,
            }
        }
        if d.at(t, t).is_negative() {
            d.negate_col(t);
            v.negate_col(t);
        }
    }
    Smith {
        diag: (0..steps).map(|t| d.at(t, t).clone()).collect(),
        right: v,
    }
}

/// Raw kernel generators: columns of V whose image column in the Smith form
/// is zero.
fn kernel_columns(m: &IntMat) -> Vec<Vec<BigInt>> {
    let smith = smith_normal_form(m);
    let mut out = Vec::new();
    for j in 0..m.cols() {
        let vanishes = match smith.diag.get(j) {
            Some(dj) => dj.is_zero(),
            None => true, // past the diagonal, columns of the Smith form are zero
        };
        if vanishes {
            out.push(smith.right.column(j));
        }
    }
    out
}

/// Canonical basis (row-style Hermite form) of the lattice spanned by `rows`:
/// positive pivots in echelon position, entries above each pivot reduced into
/// [0, pivot). Unique for a given lattice, so bases compare by equality.
pub fn hnf_rows(width: usize, rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut rows = rows;
    let nrows = rows.len();
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row >= nrows {
            break;
        }
        // Euclid on this column until one nonzero entry remains at pivot_row
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..nrows {
                if rows[i][col].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => rows[i][col].abs() < rows[b][col].abs(),
                };
                if better {
                    best = Some(i);
                }
            }
            let Some(b) = best else {
                break;
            };
            rows.swap(pivot_row, b);
            let mut leftover = false;
            for i in pivot_row + 1..nrows {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = &rows[i][col] / &rows[pivot_row][col];
                for c in 0..width {
                    let delta = &q * &rows[pivot_row][c];
                    rows[i][c] -= delta;
                }
                if !rows[i][col].is_zero() {
                    leftover = true;
                }
            }
            if !leftover {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            for c in 0..width {
                rows[pivot_row][c] = -&rows[pivot_row][c];
            }
        }
        // reduce entries above the pivot into [0, pivot)
        for i in 0..pivot_row {
            let q = rows[i][col].div_floor(&rows[pivot_row][col]);
            if q.is_zero() {
                continue;
            }
            for c in 0..width {
                let delta = &q * &rows[pivot_row][c];
                rows[i][c] -= delta;
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

/// Canonical basis of { x in Z^cols : M x = 0 }.
pub fn integer_kernel(m: &IntMat) -> Vec<Vec<BigInt>> {
    hnf_rows(m.cols(), kernel_columns(m))
}

/// Canonical lattice basis of { a in Z^n : E a ≡ 0 (mod N) }, for `modulus`
/// = N > 0. When the modulus is 0 the congruence is over Z itself and this is
/// the plain integer kernel.
///
/// For N > 0 the congruence is solved exactly by augmenting: (a, b) with
/// E a + N b = 0 ranges over the integer kernel of [E | N·I], and projecting
/// to the first n coordinates yields the solution lattice, which always
/// contains N·Z^n.
pub fn smith_kernel(e: &IntMat, modulus: u64) -> Vec<Vec<BigInt>> {
    if modulus == 0 {
        return integer_kernel(e);
    }
    let (r, n) = (e.rows(), e.cols());
    let mut aug = IntMat::zeros(r, n + r);
    for i in 0..r {
        for j in 0..n {
            aug.set(i, j, e.at(i, j).clone());
        }
        aug.set(i, n + i, BigInt::from(modulus));
    }
    let projected: Vec<Vec<BigInt>> = kernel_columns(&aug)
        .into_iter()
        .map(|v| v[..n].to_vec())
        .collect();
    hnf_rows(n, projected)
}

/// Membership test against an echelonized (Hermite-form) lattice basis.
pub fn lattice_contains(width: usize, basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    if v.len() != width {
        return false;
    }
    let mut w = v.to_vec();
    for row in basis {
        let Some(p) = row.iter().position(|e| !e.is_zero()) else {
            continue;
        };
        if w[p].is_zero() {
            continue;
        }
        let (q, rem) = w[p].div_rem(&row[p]);
        if !rem.is_zero() {
            return false;
        }
        for c in 0..width {
            let delta = &q * &row[c];
            w[c] -= delta;
        }
    }
    w.iter().all(Zero::is_zero)
}
