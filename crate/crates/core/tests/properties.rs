use liegrad_core::catalog::{all_fixtures, fixture};
use liegrad_core::duality::{grading_to_action, stable_subspace_check};
use liegrad_core::linalg::{vector, Matrix, Rational, Scalar, Subspace, Vector};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// Elements of Q, Q(i) and Q(ζ3), mixed freely.
fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        rational().prop_map(Scalar::from),
        (rational(), rational()).prop_map(|(a, b)| Scalar::from(a) + &(Scalar::from(b) * &Scalar::root_of_unity(4, 1))),
        (rational(), rational()).prop_map(|(a, b)| Scalar::from(a) + &(Scalar::from(b) * &Scalar::root_of_unity(3, 1))),
    ]
}

fn matrix(gaussian: bool) -> impl Strategy<Value = Matrix> {
    (1usize..=12, 1usize..=12).prop_flat_map(move |(r, c)| {
        let entry = if gaussian {
            (-3i64..=3, -3i64..=3)
                .prop_map(|(a, b)| Scalar::int(a) + &(Scalar::int(b) * &Scalar::root_of_unity(4, 1)))
                .boxed()
        } else {
            rational().prop_map(Scalar::from).boxed()
        };
        // about half the entries zero, so that low ranks actually occur
        let cell = prop_oneof![Just(Scalar::zero()), entry];
        proptest::collection::vec(proptest::collection::vec(cell, c), r)
            .prop_map(move |rows| Matrix::from_rows_with_cols(rows, c).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv(), Scalar::one());
        }
    }
}

fn check_rank_nullity(m: &Matrix) -> Result<(), TestCaseError> {
    let kernel = m.kernel();
    prop_assert_eq!(m.rank() + kernel.len(), m.cols());
    for v in &kernel {
        prop_assert!(vector::is_zero(&m.apply(v).unwrap()));
    }
    let span = Subspace::span(m.cols(), kernel.clone()).unwrap();
    prop_assert_eq!(span.dim(), kernel.len());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_nullity_over_q(m in matrix(false)) {
        check_rank_nullity(&m)?;
    }

    #[test]
    fn rank_nullity_over_gaussian_rationals(m in matrix(true)) {
        check_rank_nullity(&m)?;
    }

    #[test]
    fn rref_is_idempotent(m in matrix(true)) {
        let (r, piv) = m.rref();
        let (rr, piv2) = r.rref();
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(piv, piv2);
        prop_assert_eq!(r.rank(), m.rank());
    }

    #[test]
    fn rank_of_transpose(m in matrix(false)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }
}

fn random_vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vector>> {
    proptest::collection::vec(proptest::collection::vec((-2i64..=2).prop_map(Scalar::int), n), 1..=k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn centralizers_of_homogeneous_sets_are_graded(idx in 0usize..13, pick in proptest::collection::vec(any::<bool>(), 16)) {
        let f = &all_fixtures().unwrap()[idx];
        let gr = &f.grading;
        let alg = gr.algebra();
        let chosen: Vec<Vector> = (0..gr.dim()).filter(|&i| pick[i]).map(|i| vector::unit(gr.dim(), i)).collect();
        let s = Subspace::span(gr.dim(), chosen).unwrap();
        prop_assert!(gr.is_graded_subspace(&alg.centralizer(&s).unwrap()).unwrap());
        prop_assert!(gr.is_graded_subspace(&alg.center().unwrap()).unwrap());
    }

    #[test]
    fn stability_matches_gradedness(vs in random_vectors(5, 3), mask in proptest::collection::vec(any::<bool>(), 5)) {
        // masking coordinates makes graded subspaces common enough to exercise both answers
        let f = fixture("sl2_natural_z2").unwrap();
        let fam = grading_to_action(&f.grading).unwrap();
        let vs: Vec<Vector> = vs.into_iter().map(|v| v.into_iter().zip(&mask).map(|(c, &m)| if m { c } else { Scalar::zero() }).collect()).collect();
        let s = Subspace::span(5, vs).unwrap();
        prop_assert_eq!(stable_subspace_check(&s, &fam).unwrap(), f.grading.is_graded_subspace(&s).unwrap());
    }
}
