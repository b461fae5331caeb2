//! Derivation algebras.
//!
//! A derivation is a linear map D with D[x,y] = [Dx,y] + [x,Dy]. On a
//! structure-constant algebra that is a linear condition on the n^2 matrix
//! entries, so Der(g) is the nullspace of one big exact system. Everything
//! else here — inner derivations, completeness, the derivation tower —
//! rides on that nullspace.

use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Claim, Witness};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::lie::LieAlgebra;
use crate::linalg::{rref_nullspace, Mat, Subspace};

/// Der(g) with a canonical matrix basis, plus the inner span ad(g), both as
/// subspaces of the n^2-dimensional space of flattened matrices.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    parent: LieAlgebra,
    basis: Vec<Mat>,
    der_span: Subspace,
    inner_span: Subspace,
}

impl DerivationSpace {
    pub fn of(g: &LieAlgebra) -> Result<Self> {
        let n = g.dim();
        let field = g.field();
        let n2 = n * n;
        // Unknowns: D_{r,c} at flat index r*n + c. One equation block per
        // basis pair i < j, one row per output coordinate k.
        let mut rows = Vec::with_capacity(n2 * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let mut row = vec![field.zero(); n2];
                    // (D [e_i, e_j])_k = Σ_m c_{ij}^m D_{k,m}
                    for m in 0..n {
                        let c = g.structure_coeff(i, j, m);
                        if !c.is_zero() {
                            row[k * n + m] = row[k * n + m].add(&c);
                        }
                    }
                    // -[D e_i, e_j]_k = -Σ_a c_{aj}^k D_{a,i}
                    for a in 0..n {
                        let c = g.structure_coeff(a, j, k);
                        if !c.is_zero() {
                            row[a * n + i] = row[a * n + i].sub(&c);
                        }
                    }
                    // -[e_i, D e_j]_k = -Σ_a c_{ia}^k D_{a,j}
                    for a in 0..n {
                        let c = g.structure_coeff(i, a, k);
                        if !c.is_zero() {
                            row[a * n + j] = row[a * n + j].sub(&c);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let nullspace = if rows.is_empty() {
            // no bracket conditions (dim <= 1): every matrix is a derivation
            (0..n2)
                .map(|t| {
                    let mut v = vec![field.zero(); n2];
                    v[t] = field.one();
                    v
                })
                .collect()
        } else {
            let system = Mat::from_rows(field, rows)?;
            rref_nullspace(&system).1
        };
        let der_span = Subspace::from_spanning(field, n2, &nullspace)?;
        // the subspace's echelonized rows are the canonical matrix basis, so
        // coordinates in the span and positions in `basis` agree
        let basis = der_span
            .basis()
            .iter()
            .map(|v| Mat::from_flat(field, n, n, v.clone()))
            .collect::<Result<Vec<_>>>()?;
        let inner_flat: Vec<Vec<FieldElement>> =
            (0..n).map(|i| g.ad_basis(i).flatten()).collect();
        let inner_span = Subspace::from_spanning(field, n2, &inner_flat)?;
        Ok(DerivationSpace {
            parent: g.clone(),
            basis,
            der_span,
            inner_span,
        })
    }

    pub fn parent(&self) -> &LieAlgebra {
        &self.parent
    }

    /// dim Der(g)
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// dim ad(g) = dim g - dim C(g)
    pub fn inner_dim(&self) -> usize {
        self.inner_span.dim()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn der_span(&self) -> &Subspace {
        &self.der_span
    }

    pub fn inner_span(&self) -> &Subspace {
        &self.inner_span
    }

    pub fn all_inner(&self) -> bool {
        self.der_span.same_space(&self.inner_span)
    }

    /// Coordinates of a matrix in the canonical derivation basis, or None if
    /// it is not a derivation span member.
    pub fn coordinates_of(&self, d: &Mat) -> Option<Vec<FieldElement>> {
        self.der_span.coordinates(&d.flatten())
    }

    /// Der(g) as a structure-constant Lie algebra under the commutator,
    /// in the canonical basis (labels D0, D1, ...).
    pub fn lie_algebra(&self) -> Result<LieAlgebra> {
        let d = self.basis.len();
        let field = self.parent.field();
        let mut table = Vec::with_capacity(d * d.saturating_sub(1) / 2);
        for a in 0..d {
            for b in a + 1..d {
                let comm = self.basis[a].commutator(&self.basis[b])?;
                let coords = self.coordinates_of(&comm).ok_or_else(|| {
                    Error::Internal(
                        "commutator of two derivations escaped the derivation span".into(),
                    )
                })?;
                table.push(coords);
            }
        }
        let labels = (0..d).map(|a| format!("D{a}")).collect();
        let der = LieAlgebra::new(field, labels, table)?;
        der.validate()
            .map_err(|e| Error::Internal(format!("derivation commutators broke jacobi: {e}")))?;
        Ok(der)
    }

    /// ad(g) expressed in derivation-basis coordinates.
    pub fn inner_coords(&self) -> Result<Subspace> {
        let n = self.parent.dim();
        let field = self.parent.field();
        let mut vecs = Vec::with_capacity(n);
        for i in 0..n {
            let ad = self.parent.ad_basis(i);
            let coords = self.coordinates_of(&ad).ok_or_else(|| {
                Error::Internal("an adjoint map is not in the derivation span".into())
            })?;
            vecs.push(coords);
        }
        Subspace::from_spanning(field, self.basis.len(), &vecs)
    }

    /// Completeness: trivial center and every derivation inner. Both claims
    /// are conclusions — a failure is a genuine "no", never "not applicable".
    pub fn completeness_certificate(&self) -> Certificate {
        let mut cert = Certificate::new("trivial center and all derivations inner");
        let center = self.parent.center();
        let mut centerless = Claim::new("center_is_zero", center.dim() == 0)
            .with_dim("dim", self.parent.dim())
            .with_dim("center_dim", center.dim());
        if let Some(z) = center.basis().first() {
            centerless = centerless.with_witness(Witness::vector(z));
        }
        cert.push(centerless);
        let all_inner = self.all_inner();
        let mut inner_claim = Claim::new("derivations_all_inner", all_inner)
            .with_dim("der_dim", self.dim())
            .with_dim("inner_dim", self.inner_dim());
        if !all_inner {
            if let Some(outer) = self
                .basis
                .iter()
                .find(|d| !self.inner_span.contains(&d.flatten()))
            {
                inner_claim = inner_claim.with_witness(Witness::Matrix {
                    rows: outer.to_strings(),
                });
            }
        }
        cert.push(inner_claim);
        cert
    }

    /// Der(g)/ad(g) with its center; the obstruction space for holomorph
    /// completeness.
    pub fn outer_quotient(&self) -> Result<OuterQuotient> {
        let der = self.lie_algebra()?;
        let inner = self.inner_coords()?;
        let (quotient, projection) = der.quotient(&inner)?;
        let center = quotient.center();
        Ok(OuterQuotient {
            der,
            inner,
            quotient,
            projection,
            center,
        })
    }

    /// Lifts quotient coordinates (w.r.t. `outer_quotient`) back to a
    /// derivation matrix whose class is the given one.
    pub fn lift_from_quotient(&self, oq: &OuterQuotient, w: &[FieldElement]) -> Result<Mat> {
        let keep = oq.inner.non_pivots();
        if w.len() != keep.len() {
            return Err(Error::Shape(format!(
                "quotient vector must have length {}",
                keep.len()
            )));
        }
        let field = self.parent.field();
        let n = self.parent.dim();
        let mut m = Mat::zeros(field, n, n);
        for (a, &pos) in keep.iter().enumerate() {
            if w[a].is_zero() {
                continue;
            }
            m = m.add(&self.basis[pos].scale(&w[a]))?;
        }
        Ok(m)
    }
}

/// Der(g)/ad(g) data: the derivation algebra itself, ad(g) in derivation
/// coordinates, the quotient, the projection onto quotient coordinates, and
/// the quotient's center.
#[derive(Clone, Debug)]
pub struct OuterQuotient {
    pub der: LieAlgebra,
    pub inner: Subspace,
    pub quotient: LieAlgebra,
    pub projection: Mat,
    pub center: Subspace,
}

/// Leibniz check for a single matrix; reports the first failing basis pair.
pub fn check_derivation(g: &LieAlgebra, d: &Mat) -> Result<()> {
    let n = g.dim();
    if d.rows() != n || d.cols() != n || d.field() != g.field() {
        return Err(Error::Shape(format!(
            "candidate derivation must be {n}x{n} over {}",
            g.field()
        )));
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(&g.bracket_basis(i, j))?;
            let mut rhs = g.bracket(&d.col(i), &g.basis_vector(j))?;
            for (t, e) in g.bracket(&g.basis_vector(i), &d.col(j))?.into_iter().enumerate() {
                rhs[t] = rhs[t].add(&e);
            }
            if lhs != rhs {
                return Err(Error::NotADerivation { i, j });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TowerStatus {
    /// Some level had all derivations inner; the tower stabilized there.
    Complete,
    MaxLevels,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tower {
    /// Dimensions level by level, starting with the input algebra. The last
    /// entry is the first complete level when status is `Complete`.
    pub dims: Vec<usize>,
    pub status: TowerStatus,
}

/// Iterates g -> Der(g), embedding each level in the next via ad. Requires a
/// centerless start so every embedding is injective and each level stays
/// centerless.
pub fn derivation_tower(g: &LieAlgebra, max_levels: usize) -> Result<Tower> {
    let center = g.center();
    if center.dim() > 0 {
        let z = &center.basis()[0];
        return Err(Error::NotCenterless {
            witness: z.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        });
    }
    let mut current = g.clone();
    let mut dims = vec![current.dim()];
    for _ in 0..max_levels {
        let ds = DerivationSpace::of(&current)?;
        if ds.all_inner() {
            return Ok(Tower {
                dims,
                status: TowerStatus::Complete,
            });
        }
        let next = ds.lie_algebra()?;
        if !next.is_centerless() {
            return Err(Error::Internal(
                "derivation algebra of a centerless algebra acquired a center".into(),
            ));
        }
        dims.push(next.dim());
        current = next;
    }
    Ok(Tower {
        dims,
        status: TowerStatus::MaxLevels,
    })
}
