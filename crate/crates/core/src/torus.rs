//! Twisted Laurent monomials at the exponent level.
//!
//! A family of pairwise commutation factors q_{ij} = ω^{E_ij}, with ω of
//! finite multiplicative order N (or of infinite order when N = 0), makes
//! monomials x^a multiply by x^a x^b = ω^{σ(a,b)} x^{a+b}. Everything this
//! module needs lives in the exponent matrix E and the integer pairing
//!
//! ```text
//! σ(a, b) = Σ_{i<j} E_ij a_j b_i,    f(a, b) = σ(a, b) - σ(b, a),
//! ```
//!
//! so no root of unity is ever materialized: commutation questions are
//! congruences mod N and the set of central degrees is an integer lattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Claim, Witness};
use crate::error::{Error, Result};
use crate::lattice::{lattice_contains, smith_kernel, IntMat};

#[derive(Clone, Debug)]
pub struct ExponentTorus {
    n: usize,
    /// Multiplicative order of ω; 0 means infinite order, making every
    /// congruence below an equality over Z.
    order: u64,
    /// n x n, antisymmetric mod `order`, entries reduced into [0, order).
    exponents: IntMat,
}

impl ExponentTorus {
    pub fn new(n: usize, order: u64, exponents: IntMat) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "need at least one generator".into(),
            ));
        }
        if exponents.rows() != n || exponents.cols() != n {
            return Err(Error::Shape(format!(
                "exponent matrix must be {n}x{n}, got {}x{}",
                exponents.rows(),
                exponents.cols()
            )));
        }
        let modulus = BigInt::from(order);
        let reduce = |v: &BigInt| -> BigInt {
            if order == 0 {
                v.clone()
            } else {
                v.mod_floor(&modulus)
            }
        };
        let mut stored = IntMat::zeros(n, n);
        for i in 0..n {
            if !reduce(exponents.at(i, i)).is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "diagonal exponent at ({i}, {i}) must vanish mod {order}"
                )));
            }
            for j in 0..n {
                let sum = exponents.at(i, j) + exponents.at(j, i);
                if !reduce(&sum).is_zero() {
                    return Err(Error::InvalidParameter(format!(
                        "exponent matrix is not antisymmetric mod {order} at ({i}, {j})"
                    )));
                }
                stored.set(i, j, reduce(exponents.at(i, j)));
            }
        }
        Ok(ExponentTorus {
            n,
            order,
            exponents: stored,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponents(&self) -> &IntMat {
        &self.exponents
    }

    fn check_degree(&self, a: &[i64]) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::Shape(format!(
                "degree vector must have length {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Twist exponent of x^a x^b: σ(a, b) = Σ_{i<j} E_ij a_j b_i, as a plain
    /// integer (reduce mod `order` to get the actual power of ω).
    pub fn sigma(&self, a: &[i64], b: &[i64]) -> Result<BigInt> {
        self.check_degree(a)?;
        self.check_degree(b)?;
        let mut acc = BigInt::zero();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let e = self.exponents.at(i, j);
                if e.is_zero() || a[j] == 0 || b[i] == 0 {
                    continue;
                }
                acc += e * BigInt::from(a[j]) * BigInt::from(b[i]);
            }
        }
        Ok(acc)
    }

    /// f(a, b) = σ(a, b) - σ(b, a): the exponent governing the commutator
    /// [x^a, x^b] = (ω^{σ(a,b)} - ω^{σ(b,a)}) x^{a+b}, which vanishes exactly
    /// when f(a, b) ≡ 0 mod `order`.
    pub fn commutator_exponent(&self, a: &[i64], b: &[i64]) -> Result<BigInt> {
        Ok(self.sigma(a, b)? - self.sigma(b, a)?)
    }

    /// Canonical residue of f(a, b) in [0, order); the raw integer when the
    /// order is 0.
    pub fn commutator_exponent_mod(&self, a: &[i64], b: &[i64]) -> Result<BigInt> {
        let f = self.commutator_exponent(a, b)?;
        Ok(if self.order == 0 {
            f
        } else {
            f.mod_floor(&BigInt::from(self.order))
        })
    }

    pub fn commutes(&self, a: &[i64], b: &[i64]) -> Result<bool> {
        Ok(self.commutator_exponent_mod(a, b)?.is_zero())
    }

    fn residues_mod_order(&self, v: &[BigInt]) -> Vec<BigInt> {
        if self.order == 0 {
            v.to_vec()
        } else {
            let m = BigInt::from(self.order);
            v.iter().map(|e| e.mod_floor(&m)).collect()
        }
    }

    /// x^a is central iff f(a, e_k) ≡ 0 for every generator, i.e. E a ≡ 0
    /// mod `order`.
    pub fn is_central(&self, a: &[i64]) -> Result<bool> {
        self.check_degree(a)?;
        let image = self
            .exponents
            .mul_vec(&a.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())?;
        Ok(self.residues_mod_order(&image).iter().all(Zero::is_zero))
    }

    /// Canonical (Hermite-form) basis of the lattice of central degrees
    /// { a : E a ≡ 0 mod order }. Contains order·Z^n whenever order > 0.
    pub fn radical_basis(&self) -> Vec<Vec<BigInt>> {
        smith_kernel(&self.exponents, self.order)
    }

    /// Classifies every degree in the box [-radius, radius]^n and certifies
    /// the classification.
    pub fn classify_box(&self, radius: i64) -> Result<(Vec<DegreeClass>, Certificate)> {
        if radius < 0 {
            return Err(Error::InvalidParameter("box radius must be >= 0".into()));
        }
        let side = 2 * radius as u128 + 1;
        let total = side.checked_pow(self.n as u32).ok_or_else(|| {
            Error::InvalidParameter("box is astronomically large".into())
        })?;
        if total > 200_000 {
            return Err(Error::InvalidParameter(format!(
                "box holds {total} degrees; keep (2·radius+1)^n at most 200000"
            )));
        }
        let radical = self.radical_basis();
        let mut classes = Vec::with_capacity(total as usize);
        let mut cert = Certificate::new("graded degrees split into central and commutator parts");
        let mut central_count = 0usize;
        let mut witnesses_ok = true;
        let mut witness_fail: Option<Witness> = None;
        let mut radical_agrees = true;
        let mut radical_fail: Option<Witness> = None;

        let mut a = vec![-radius; self.n];
        loop {
            let big_a: Vec<BigInt> = a.iter().map(|&v| BigInt::from(v)).collect();
            let direct = self.is_central(&a)?;
            let via_lattice = lattice_contains(self.n, &radical, &big_a);
            if direct != via_lattice {
                radical_agrees = false;
                radical_fail.get_or_insert_with(|| Witness::vector(&a));
            }
            if direct {
                central_count += 1;
                classes.push(DegreeClass::Central { degree: a.clone() });
            } else {
                // some generator fails to commute with x^a; peel it off
                let image = self.exponents.mul_vec(&big_a)?;
                let k = self
                    .residues_mod_order(&image)
                    .iter()
                    .position(|e| !e.is_zero())
                    .ok_or_else(|| {
                        Error::Internal("non-central degree commutes with every generator".into())
                    })?;
                let mut left = vec![0i64; self.n];
                left[k] = 1;
                let right: Vec<i64> = a.iter().zip(&left).map(|(x, l)| x - l).collect();
                // soundness: the two factors really do not commute, and they
                // really multiply up to x^a
                let sum_ok = left.iter().zip(&right).zip(&a).all(|((l, r), t)| l + r == *t);
                let noncomm = !self.commutes(&left, &right)?;
                if !(sum_ok && noncomm) {
                    witnesses_ok = false;
                    witness_fail.get_or_insert(Witness::DegreePair {
                        left: left.iter().map(ToString::to_string).collect(),
                        right: right.iter().map(ToString::to_string).collect(),
                    });
                }
                classes.push(DegreeClass::Commutator {
                    degree: a.clone(),
                    left,
                    right,
                });
            }
            // odometer step
            let mut pos = 0;
            loop {
                if pos == self.n {
                    break;
                }
                a[pos] += 1;
                if a[pos] <= radius {
                    break;
                }
                a[pos] = -radius;
                pos += 1;
            }
            if pos == self.n {
                break;
            }
        }

        cert.push(
            Claim::new(
                "box_partitioned",
                classes.len() == total as usize
                    && central_count + (classes.len() - central_count) == classes.len(),
            )
            .with_dim("box_size", classes.len())
            .with_dim("central_count", central_count)
            .with_dim("commutator_count", classes.len() - central_count),
        );
        let mut sound = Claim::new("commutator_witnesses_sound", witnesses_ok);
        if let Some(w) = witness_fail {
            sound = sound.with_witness(w);
        }
        cert.push(sound);
        let mut agree = Claim::new("centrality_matches_radical_lattice", radical_agrees)
            .with_dim("radical_rank", radical.len());
        if let Some(w) = radical_fail {
            agree = agree.with_witness(w);
        }
        cert.push(agree);
        Ok((classes, cert))
    }
}

/// One monomial degree with its role in the graded decomposition: central, or
/// expressible as a commutator of the two listed degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegreeClass {
    Central {
        degree: Vec<i64>,
    },
    Commutator {
        degree: Vec<i64>,
        left: Vec<i64>,
        right: Vec<i64>,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two generators, E_01 = 1, ω of order 5.
    fn torus_2_5() -> ExponentTorus {
        ExponentTorus::new(2, 5, IntMat::from_i64(&[&[0, 1], &[-1, 0]])).unwrap()
    }

    #[test]
    fn pinned_sigma_values() {
        let t = torus_2_5();
        assert_eq!(t.sigma(&[0, 1], &[1, 0]).unwrap(), BigInt::from(1));
        assert_eq!(t.sigma(&[1, 0], &[0, 1]).unwrap(), BigInt::from(0));
        let f = t.commutator_exponent(&[1, 0], &[0, 1]).unwrap();
        assert_eq!(f, BigInt::from(-1));
        assert_eq!(
            t.commutator_exponent_mod(&[1, 0], &[0, 1]).unwrap(),
            BigInt::from(4)
        );
        assert!(!t.commutes(&[1, 0], &[0, 1]).unwrap());
    }

    #[test]
    fn sigma_is_a_two_cocycle() {
        // σ(a,b) + σ(a+b,c) = σ(b,c) + σ(a,b+c): the associativity law for
        // the twisted product
        let t = ExponentTorus::new(3, 7, IntMat::from_i64(&[&[0, 2, 3], &[-2, 0, 1], &[-3, -1, 0]]))
            .unwrap();
        let degrees: [&[i64]; 4] = [&[1, 0, 2], &[-1, 3, 0], &[2, -2, 1], &[0, 0, -3]];
        for a in degrees {
            for b in degrees {
                for c in degrees {
                    let ab: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    let bc: Vec<i64> = b.iter().zip(c).map(|(x, y)| x + y).collect();
                    let lhs = t.sigma(a, b).unwrap() + t.sigma(&ab, c).unwrap();
                    let rhs = t.sigma(b, c).unwrap() + t.sigma(a, &bc).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn pairing_against_generators_is_the_matrix_action() {
        let t = ExponentTorus::new(3, 9, IntMat::from_i64(&[&[0, 4, 1], &[-4, 0, 2], &[-1, -2, 0]]))
            .unwrap();
        let a = [2i64, -1, 3];
        let image = t
            .exponents()
            .mul_vec(&a.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
            .unwrap();
        for k in 0..3 {
            let mut ek = [0i64; 3];
            ek[k] = 1;
            let f = t.commutator_exponent(&a, &ek).unwrap();
            let m = BigInt::from(9);
            assert_eq!(f.mod_floor(&m), image[k].mod_floor(&m));
        }
    }

    #[test]
    fn radical_of_unit_pairing_mod_five() {
        let t = torus_2_5();
        let rad = t.radical_basis();
        assert_eq!(
            rad,
            vec![
                vec![BigInt::from(5), BigInt::from(0)],
                vec![BigInt::from(0), BigInt::from(5)]
            ]
        );
    }

    #[test]
    fn box_classification_mod_five() {
        let t = torus_2_5();
        let (classes, cert) = t.classify_box(2).unwrap();
        assert!(cert.passed());
        assert_eq!(classes.len(), 25);
        let central: Vec<_> = classes
            .iter()
            .filter(|c| matches!(c, DegreeClass::Central { .. }))
            .collect();
        // only the origin is central inside [-2,2]^2 when the radical is 5Z^2
        assert_eq!(central.len(), 1);
        assert!(matches!(central[0], DegreeClass::Central { degree } if degree == &vec![0, 0]));
        for c in &classes {
            if let DegreeClass::Commutator { degree, left, right } = c {
                assert!(!t.commutes(left, right).unwrap());
                for i in 0..2 {
                    assert_eq!(left[i] + right[i], degree[i]);
                }
            }
        }
    }

    #[test]
    fn generic_order_nondegenerate_pairing() {
        let t = ExponentTorus::new(2, 0, IntMat::from_i64(&[&[0, 2], &[-2, 0]])).unwrap();
        assert!(t.radical_basis().is_empty());
        let (classes, cert) = t.classify_box(1).unwrap();
        assert!(cert.passed());
        let central = classes
            .iter()
            .filter(|c| matches!(c, DegreeClass::Central { .. }))
            .count();
        assert_eq!(central, 1); // just the origin
    }

    #[test]
    fn order_one_makes_everything_central() {
        let t = ExponentTorus::new(2, 1, IntMat::from_i64(&[&[0, 3], &[2, 0]])).unwrap();
        let (classes, cert) = t.classify_box(1).unwrap();
        assert!(cert.passed());
        assert!(classes
            .iter()
            .all(|c| matches!(c, DegreeClass::Central { .. })));
    }

    #[test]
    fn bad_exponent_matrices_are_rejected() {
        // not antisymmetric mod 5
        assert!(ExponentTorus::new(2, 5, IntMat::from_i64(&[&[0, 1], &[1, 0]])).is_err());
        // nonzero diagonal
        assert!(ExponentTorus::new(2, 5, IntMat::from_i64(&[&[1, 1], &[-1, 0]])).is_err());
        // fine: -1 ≡ 4 mod 5
        let t = ExponentTorus::new(2, 5, IntMat::from_i64(&[&[0, 4], &[1, 0]])).unwrap();
        assert_eq!(*t.exponents().at(0, 1), BigInt::from(4));
        // generic order must be exactly antisymmetric
        assert!(ExponentTorus::new(2, 0, IntMat::from_i64(&[&[0, 1], &[4, 0]])).is_err());
    }

    #[test]
    fn entries_are_stored_reduced() {
        let t = ExponentTorus::new(2, 5, IntMat::from_i64(&[&[0, -1], &[1, 0]])).unwrap();
        assert_eq!(*t.exponents().at(0, 1), BigInt::from(4));
        assert_eq!(*t.exponents().at(1, 0), BigInt::from(1));
        // flipping the sign of E flips f but not the commutation relation
        let u = torus_2_5();
        for a in [[1i64, 0], [0, 1], [2, 3]] {
            for b in [[1i64, 1], [0, 2], [4, 0]] {
                assert_eq!(t.commutes(&a, &b).unwrap(), u.commutes(&a, &b).unwrap());
            }
        }
    }
}
