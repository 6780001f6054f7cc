use super::*;
use crate::catalog::{all_fixtures, fixture};
use crate::error::ErrorClass;

fn s3() -> FiniteGroup {
    FiniteGroup::symmetric(3).unwrap()
}

#[test]
fn violation_names_the_offending_pair() {
    let f = fixture("sl2_z2").unwrap();
    let alg = f.grading.algebra().clone();
    // h in degree 1 forces [h, e] = 2e into degree 0
    let err = Grading::new(alg, FiniteGroup::cyclic(2).unwrap(), vec![1, 1, 1]).unwrap_err();
    match err {
        Error::GradingViolation { left, right, .. } => assert_eq!((left.as_str(), right.as_str()), ("h", "e")),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn from_names_requires_every_basis_vector() {
    let f = fixture("sl2_z2").unwrap();
    let alg = f.grading.algebra().clone();
    let mut m = BTreeMap::new();
    m.insert("h".to_string(), "r0".to_string());
    let err = Grading::from_names(alg, FiniteGroup::cyclic(2).unwrap(), &m).unwrap_err();
    assert_eq!(err.class(), ErrorClass::Precondition);
}

#[test]
fn dihedral_support_is_not_commutative() {
    let f = fixture("dihedral_sl2").unwrap();
    let g = f.grading.group();
    let mut names = f.grading.support_names();
    names.sort();
    assert_eq!(names, ["(12)", "(23)", "e"]);
    assert!(!f.grading.support_commutativity().unwrap().is_commutative());
    assert_eq!(f.grading.support_subgroup().unwrap().len(), 6);
    assert!(!g.commutes(g.index_of("(12)").unwrap(), g.index_of("(23)").unwrap()));
}

#[test]
fn graded_decomposition_by_projection() {
    let f = fixture("sl2_z2").unwrap();
    let gr = &f.grading;
    let hv = Subspace::span(3, [vector::from_ints(&[1, 0, 0])]).unwrap();
    let d = gr.graded_decomposition(&hv).unwrap().unwrap();
    assert_eq!(d.degrees(), BTreeSet::from([0]));
    let mixed = Subspace::span(3, [vector::from_ints(&[1, 1, 0])]).unwrap();
    assert!(gr.graded_decomposition(&mixed).unwrap().is_none());
    assert!(gr.expect_graded(&mixed, "x").is_err());
}

#[test]
fn chain_products() {
    let f = fixture("dihedral_sl2").unwrap();
    let gr = &f.grading;
    let g = gr.group();
    let (a, b) = (g.index_of("(12)").unwrap(), g.index_of("(23)").unwrap());
    assert!(gr.chain_product(&[a, b]).unwrap().is_zero());
    assert_eq!(gr.chain_product(&[a, a]).unwrap().dim(), 1);
    assert!(gr.chain_product(&[]).is_err());
}

#[test]
fn chain_commutativity_holds_on_every_fixture() {
    for f in all_fixtures().unwrap() {
        let cert = f.grading.check_chain_commutativity(4).unwrap();
        assert_eq!(cert.max_length, 4);
        assert!(cert.tuples_visited > 0, "{}", f.name);
    }
}

#[test]
fn chain_commutativity_counts_chains_on_sl2() {
    let f = fixture("sl2_z2").unwrap();
    let cert = f.grading.check_chain_commutativity(2).unwrap();
    // [L0,L0] = 0; [L0,L1], [L1,L0] and [L1,L1] are nonzero
    assert_eq!(cert.nonzero_chains[&2], 3);
    assert!(f.grading.check_chain_commutativity(1).is_err());
}

#[test]
fn fiber_ideals_on_the_dihedral_fixture() {
    let f = fixture("dihedral_sl2").unwrap();
    let gr = &f.grading;
    let g = gr.group();
    let (a, b) = (g.index_of("(12)").unwrap(), g.index_of("(23)").unwrap());
    let out = gr.check_fiber_ideals(a, b).unwrap();
    assert!(out.holds);
    assert_eq!(out.ideal_g.dim(), 3);
    assert_eq!(*out.ideal_g.total(), Subspace::coordinate(6, 0..3));
    assert_eq!(*out.ideal_h.total(), Subspace::coordinate(6, 3..6));
    assert!(gr.check_fiber_ideals(a, a).is_err());
    assert_eq!(gr.check_fiber_ideals_all().unwrap().len(), 1);
}

#[test]
fn fiber_ideals_and_seeds() {
    let f = fixture("sl2_z2").unwrap();
    let gr = &f.grading;
    assert_eq!(gr.fiber_ideal(0).unwrap().dim(), 3);
    assert!(gr.graded_ideal_generated(&[vector::from_ints(&[1, 1, 0])]).is_err());
}

#[test]
fn graded_simplicity_reasons() {
    let simple = fixture("sl2_z4").unwrap().grading.is_graded_simple().unwrap();
    assert!(simple.simple);
    let ab = fixture("abelian_z2").unwrap().grading.is_graded_simple().unwrap();
    assert_eq!((ab.simple, ab.reason.as_str()), (false, "[L,L]=0"));
    let semi = fixture("sl2_natural_z2").unwrap().grading.is_graded_simple().unwrap();
    assert!(!semi.simple);
    let di = fixture("dihedral_sl2").unwrap().grading.is_graded_simple().unwrap();
    assert!(!di.simple);
    assert!(di.reason.contains("not commutative"));
    let swap = fixture("swap_sl2_sl2").unwrap().grading.is_graded_simple().unwrap();
    assert!(swap.simple);
}

#[test]
fn restriction_keeps_degrees() {
    let f = fixture("sl2_heisenberg_z2").unwrap();
    let r = f.grading.expect_graded(&f.expected.radical, "radical").unwrap();
    let (sub, rows) = f.grading.restrict(&r).unwrap();
    assert_eq!(sub.dim(), 3);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(f.grading.degree_of(row), Some(sub.degree(i)));
    }
    assert!(sub.algebra().is_nilpotent().unwrap());
}

#[test]
fn with_group_embeds_the_degrees() {
    let f = fixture("sl2_z2").unwrap();
    let z4 = FiniteGroup::cyclic(4).unwrap();
    let embedded = f.grading.with_group(z4, &[0, 2]).unwrap();
    assert_eq!(embedded.support_names(), ["r0", "r2"]);
    // Z2 does not sit in S3 through r1 -> (123)
    let bad = f.grading.with_group(s3(), &[0, 4]);
    assert!(bad.is_err());
}

#[test]
fn centralizers_and_centers_of_graded_subspaces_are_graded() {
    for f in all_fixtures().unwrap() {
        let gr = &f.grading;
        let alg = gr.algebra();
        assert!(gr.is_graded_subspace(&alg.center().unwrap()).unwrap(), "{}", f.name);
        for g in gr.support() {
            let c = alg.centralizer(&gr.fiber(g)).unwrap();
            assert!(gr.is_graded_subspace(&c).unwrap(), "{}", f.name);
        }
    }
}
