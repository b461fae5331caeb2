//! Randomized checks of the algebraic axioms and solver postconditions.
//! Everything is exact, so a single failing case is a real bug, never noise.

use num_bigint::BigInt;
use proptest::prelude::*;

use liealg::catalog::CatalogSpec;
use liealg::derivations::DerivationSpace;
use liealg::lattice::{lattice_contains, smith_normal_form, IntMat};
use liealg::linalg::{rref_nullspace, solve};
use liealg::torus::ExponentTorus;
use liealg::{FieldElement, FieldSpec, LieAlgebra, Mat};

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn sl2() -> LieAlgebra {
    CatalogSpec::Sl { n: 2 }.build(q()).unwrap()
}

prop_compose! {
    fn rational()(num in -9i64..=9, den in 1i64..=9) -> FieldElement {
        q().parse_element(&format!("{num}/{den}")).unwrap()
    }
}

fn rational_vec(n: usize) -> impl Strategy<Value = Vec<FieldElement>> {
    proptest::collection::vec(rational(), n)
}

fn combine(vs: &[FieldElement], ws: &[FieldElement], a: &FieldElement, b: &FieldElement) -> Vec<FieldElement> {
    vs.iter()
        .zip(ws)
        .map(|(v, w)| v.mul(a).add(&w.mul(b)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_bilinear_and_alternating(
        x in rational_vec(3),
        y in rational_vec(3),
        z in rational_vec(3),
        a in rational(),
        b in rational(),
    ) {
        let g = sl2();
        let lin = g.bracket(&combine(&x, &y, &a, &b), &z).unwrap();
        let parts = combine(&g.bracket(&x, &z).unwrap(), &g.bracket(&y, &z).unwrap(), &a, &b);
        prop_assert_eq!(lin, parts);

        let xy = g.bracket(&x, &y).unwrap();
        let yx = g.bracket(&y, &x).unwrap();
        prop_assert!(xy.iter().zip(&yx).all(|(p, m)| p.add(m).is_zero()));
        prop_assert!(g.bracket(&x, &x).unwrap().iter().all(FieldElement::is_zero));
    }

    #[test]
    fn jacobi_holds_on_random_vectors(
        x in rational_vec(3),
        y in rational_vec(3),
        z in rational_vec(3),
    ) {
        let g = sl2();
        let t1 = g.bracket(&g.bracket(&x, &y).unwrap(), &z).unwrap();
        let t2 = g.bracket(&g.bracket(&y, &z).unwrap(), &x).unwrap();
        let t3 = g.bracket(&g.bracket(&z, &x).unwrap(), &y).unwrap();
        for k in 0..3 {
            prop_assert!(t1[k].add(&t2[k]).add(&t3[k]).is_zero());
        }
    }

    #[test]
    fn derivation_combinations_satisfy_leibniz(
        coeffs in rational_vec(6),
        x in rational_vec(3),
        y in rational_vec(3),
    ) {
        // Der of the Heisenberg algebra is 6-dimensional; any combination of
        // the basis must still obey the product rule on arbitrary vectors.
        let g = CatalogSpec::parse("heisenberg").unwrap().build(q()).unwrap();
        let ds = DerivationSpace::of(&g).unwrap();
        let mut d = Mat::zeros(q(), 3, 3);
        for (c, m) in coeffs.iter().zip(ds.basis()) {
            d = d.add(&m.scale(c)).unwrap();
        }
        let lhs = d.mul_vec(&g.bracket(&x, &y).unwrap()).unwrap();
        let rhs_x = g.bracket(&d.mul_vec(&x).unwrap(), &y).unwrap();
        let rhs_y = g.bracket(&x, &d.mul_vec(&y).unwrap()).unwrap();
        for k in 0..3 {
            prop_assert_eq!(&lhs[k], &rhs_x[k].add(&rhs_y[k]));
        }
    }

    #[test]
    fn smith_diagonal_is_nonnegative_divisibility_chain(
        entries in proptest::collection::vec(-5i64..=5, 9),
    ) {
        let rows: Vec<&[i64]> = entries.chunks(3).collect();
        let smith = smith_normal_form(&IntMat::from_i64(&rows));
        let zero = BigInt::from(0);
        for d in &smith.diag {
            prop_assert!(*d >= zero);
        }
        for w in smith.diag.windows(2) {
            if w[0] == zero {
                prop_assert_eq!(&w[1], &zero);
            } else {
                prop_assert_eq!(&w[1] % &w[0], zero.clone());
            }
        }
    }

    #[test]
    fn radical_lattice_points_are_central(
        e01 in 0i64..6,
        order in 1u64..=6,
        c0 in -3i64..=3,
        c1 in -3i64..=3,
    ) {
        let torus = ExponentTorus::new(
            2,
            order,
            IntMat::from_i64(&[&[0, e01], &[-e01, 0]]),
        ).unwrap();
        let radical = torus.radical_basis();
        let mut point = vec![BigInt::from(0); 2];
        for (c, row) in [c0, c1].iter().zip(&radical) {
            for (p, r) in point.iter_mut().zip(row) {
                *p += BigInt::from(*c) * r;
            }
        }
        prop_assert!(lattice_contains(2, &radical, &point));
        let as_i64: Vec<i64> = point.iter().map(|b| i64::try_from(b).unwrap()).collect();
        prop_assert!(torus.is_central(&as_i64).unwrap());
    }

    #[test]
    fn modular_arithmetic_satisfies_field_axioms(
        p_idx in 0usize..5,
        a in 0i64..100,
        b in 0i64..100,
        c in 0i64..100,
    ) {
        let p = [2u64, 3, 5, 7, 13][p_idx];
        let f = FieldSpec::prime(p).unwrap();
        let (a, b, c) = (f.from_int(a), f.from_int(b), f.from_int(c));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inverse().unwrap()).is_one());
        }
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn nullspace_vectors_annihilate_and_ranks_add_up(
        entries in proptest::collection::vec(rational(), 12),
    ) {
        let m = Mat::from_flat(q(), 3, 4, entries).unwrap();
        let (rank, nullspace) = rref_nullspace(&m);
        prop_assert_eq!(rank + nullspace.len(), 4);
        for v in &nullspace {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(FieldElement::is_zero));
        }
    }

    #[test]
    fn solve_recovers_a_consistent_system(
        entries in proptest::collection::vec(rational(), 9),
        x in rational_vec(3),
    ) {
        let a = Mat::from_flat(q(), 3, 3, entries).unwrap();
        let b = a.mul_vec(&x).unwrap();
        let y = solve(&a, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
    }
}
