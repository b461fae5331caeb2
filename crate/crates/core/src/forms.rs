//! Bilinear forms on a structure-constant algebra, chiefly the Killing form
//! trace(ad_x · ad_y). For any invariant nondegenerate form the orthogonal
//! complement of [g, g] equals the center, which gives an independent
//! cross-check on both computations.

use crate::certificate::{Certificate, Claim, Witness};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::lie::LieAlgebra;
use crate::linalg::{rref_nullspace, Mat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Mat,
}

impl BilinearForm {
    pub fn new(gram: Mat) -> Result<Self> {
        if gram.rows() != gram.cols() {
            return Err(Error::Shape(format!(
                "gram matrix must be square, got {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// x^T G y
    pub fn evaluate(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<FieldElement> {
        let gy = self.gram.mul_vec(y)?;
        if x.len() != gy.len() {
            return Err(Error::Shape("form arguments have the wrong length".into()));
        }
        let mut acc = self.gram.field().zero();
        for (a, b) in x.iter().zip(&gy) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc = acc.add(&a.mul(b));
        }
        Ok(acc)
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn rank(&self) -> usize {
        rref_nullspace(&self.gram).0
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.dim()
    }

    /// { x : B(x, y) = 0 for all y }
    pub fn radical(&self) -> Subspace {
        // B(x, e_j) = 0 for all j means G^T x = 0
        let (_, ns) = rref_nullspace(&self.gram.transpose());
        Subspace::from_spanning(self.gram.field(), self.dim(), &ns)
            .expect("nullspace vectors match the parent dimension")
    }

    /// First basis triple violating B([e_i, e_j], e_k) = B(e_i, [e_j, e_k]),
    /// or None when the form is invariant.
    pub fn invariance_witness(&self, g: &LieAlgebra) -> Result<Option<(usize, usize, usize)>> {
        if g.dim() != self.dim() {
            return Err(Error::Shape("form and algebra dimensions differ".into()));
        }
        let n = g.dim();
        for i in 0..n {
            for j in 0..n {
                let left_vec = g.bracket_basis(i, j);
                for k in 0..n {
                    let lhs = self.evaluate(&left_vec, &g.basis_vector(k))?;
                    let rhs = self.evaluate(&g.basis_vector(i), &g.bracket_basis(j, k))?;
                    if lhs != rhs {
                        return Ok(Some((i, j, k)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// { x : B(x, v) = 0 for all v in s }
    pub fn orthogonal_complement(&self, s: &Subspace) -> Result<Subspace> {
        if s.parent_dim() != self.dim() {
            return Err(Error::Shape("subspace lives in a different space".into()));
        }
        if s.dim() == 0 {
            return Ok(Subspace::full(self.gram.field(), self.dim()));
        }
        // B(x, v) = x^T (G v): one linear condition per basis vector of s
        let rows: Vec<Vec<FieldElement>> = s
            .basis()
            .iter()
            .map(|v| self.gram.mul_vec(v))
            .collect::<Result<_>>()?;
        let m = Mat::from_rows(self.gram.field(), rows)?;
        let (_, ns) = rref_nullspace(&m);
        Subspace::from_spanning(self.gram.field(), self.dim(), &ns)
    }
}

/// Killing form: gram_{ij} = trace(ad_i ad_j).
pub fn killing_form(g: &LieAlgebra) -> Result<BilinearForm> {
    let n = g.dim();
    let ads: Vec<Mat> = (0..n).map(|i| g.ad_basis(i)).collect();
    let mut gram = Mat::zeros(g.field(), n, n);
    for i in 0..n {
        for j in i..n {
            let t = ads[i].mul(&ads[j])?.trace();
            gram.set(i, j, t.clone());
            if i != j {
                gram.set(j, i, t);
            }
        }
    }
    BilinearForm::new(gram)
}

/// For an invariant nondegenerate form, [g,g]^⊥ must equal C(g). Invariance
/// and nondegeneracy are gates: a form that fails them makes the statement
/// inapplicable rather than false.
pub fn perp_center_certificate(g: &LieAlgebra, form: &BilinearForm) -> Result<Certificate> {
    let mut cert = Certificate::new("orthogonal complement of the derived algebra is the center");
    let witness = form.invariance_witness(g)?;
    let mut inv = Claim::gate("form_invariant", witness.is_none());
    if let Some((i, j, k)) = witness {
        inv = inv.with_witness(Witness::BasisTriple { i, j, k });
    }
    cert.push(inv);
    cert.push(
        Claim::gate("form_nondegenerate", form.is_nondegenerate())
            .with_dim("rank", form.rank())
            .with_dim("dim", form.dim()),
    );
    if !cert.claims.iter().all(Claim::passed) {
        return Ok(cert);
    }
    let derived = g.derived_subspace();
    let perp = form.orthogonal_complement(&derived)?;
    let center = g.center();
    let mut eq = Claim::new("derived_perp_equals_center", perp.same_space(&center))
        .with_dim("derived_dim", derived.dim())
        .with_dim("perp_dim", perp.dim())
        .with_dim("center_dim", center.dim());
    if !perp.same_space(&center) {
        let stray = perp
            .basis()
            .iter()
            .find(|v| !center.contains(v))
            .or_else(|| center.basis().iter().find(|v| !perp.contains(v)));
        if let Some(v) = stray {
            eq = eq.with_witness(Witness::vector(v));
        }
    }
    cert.push(eq);
    Ok(cert)
}
