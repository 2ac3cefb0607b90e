//! Root data, matrix realizations, the supertrace form and weight
//! arithmetic for gl(m|n), sl(m|n) and osp(2|2n).

mod algebra;
mod matrix;
mod roots;

pub use algebra::{osp_form, osp_violation, Algebra, BasisElement};
pub use matrix::{bracket, chi, invariant_form, Parity, SuperMatrix};
pub use roots::{build_root_datum, Family, RootDatum, TorusWeight, Weight};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Scalar};
    use proptest::prelude::*;

    const ALGEBRAS: [&str; 5] = ["gl(2|1)", "gl(1|2)", "sl(3|1)", "osp(2|2)", "osp(2|4)"];

    fn sign(x: &SuperMatrix, y: &SuperMatrix) -> Scalar {
        let p = x.parity().bit().unwrap() * y.parity().bit().unwrap();
        int(if p == 1 { -1 } else { 1 })
    }

    // A random parity-homogeneous element: random small coefficients on the
    // basis vectors of one parity.
    fn element(a: &Algebra, odd: bool, coeffs: &[i64]) -> SuperMatrix {
        let c: Vec<Scalar> = a
            .basis()
            .iter()
            .zip(coeffs.iter().cycle())
            .map(|(b, &k)| if b.odd == odd { int(k) } else { int(0) })
            .collect();
        a.combine(&c)
    }

    #[test]
    fn closed_under_bracket() {
        for s in ALGEBRAS {
            let a = Algebra::parse(s).unwrap();
            for x in a.basis() {
                for y in a.basis() {
                    assert!(a.contains(&bracket(&x.matrix, &y.matrix).unwrap()), "{s}");
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn super_jacobi(
            alg in 0usize..ALGEBRAS.len(),
            px in any::<bool>(), py in any::<bool>(), pz in any::<bool>(),
            cx in prop::collection::vec(-3i64..=3, 7),
            cy in prop::collection::vec(-3i64..=3, 5),
            cz in prop::collection::vec(-3i64..=3, 3),
        ) {
            let a = Algebra::parse(ALGEBRAS[alg]).unwrap();
            let x = element(&a, px, &cx);
            let y = element(&a, py, &cy);
            let z = element(&a, pz, &cz);
            let lhs = bracket(&x, &bracket(&y, &z).unwrap()).unwrap();
            let rhs = bracket(&bracket(&x, &y).unwrap(), &z).unwrap()
                .add(&bracket(&y, &bracket(&x, &z).unwrap()).unwrap().scale(&sign(&x, &y)))
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn form_is_invariant(
            alg in 0usize..ALGEBRAS.len(),
            px in any::<bool>(), py in any::<bool>(), pz in any::<bool>(),
            cx in prop::collection::vec(-3i64..=3, 7),
            cy in prop::collection::vec(-3i64..=3, 5),
            cz in prop::collection::vec(-3i64..=3, 3),
        ) {
            let a = Algebra::parse(ALGEBRAS[alg]).unwrap();
            let x = element(&a, px, &cx);
            let y = element(&a, py, &cy);
            let z = element(&a, pz, &cz);
            let l = invariant_form(&x, &bracket(&y, &z).unwrap()).unwrap();
            let r = invariant_form(&bracket(&x, &y).unwrap(), &z).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn restriction_is_linear(
            w1 in prop::collection::vec(-9i64..=9, 3),
            w2 in prop::collection::vec(-9i64..=9, 3),
            a in -5i64..=5, b in -5i64..=5,
        ) {
            let alg = Algebra::parse("gl(2|1)").unwrap();
            let t = vec![
                alg.diagonal(&[int(1), int(1), int(0)]),
                alg.diagonal(&[int(0), int(0), int(1)]),
                alg.diagonal(&[int(1), int(0), int(0)]),
            ];
            let w1 = Weight::from_ints(2, &w1[..2], &w1[2..]);
            let w2 = Weight::from_ints(2, &w2[..2], &w2[2..]);
            let combo = w1.scale(&int(a)).add(&w2.scale(&int(b)));
            let lhs = alg.restrict_to_torus(&combo, &t).unwrap();
            let rhs = alg.restrict_to_torus(&w1, &t).unwrap().scale(&int(a))
                .add(&alg.restrict_to_torus(&w2, &t).unwrap().scale(&int(b)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
