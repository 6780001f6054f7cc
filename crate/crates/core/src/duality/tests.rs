use super::*;
use crate::catalog::{fixture, scramble};
use crate::error::ErrorClass;
use crate::linalg::Scalar;

const ABELIAN: [&str; 5] = ["sl2_z2", "sl2_z4", "pauli_sl2", "sl2_natural_z2", "sl3_z3"];

fn diag(xs: &[i64]) -> Matrix {
    let mut m = Matrix::zeros(xs.len(), xs.len());
    for (i, &x) in xs.iter().enumerate() {
        m.set(i, i, Scalar::int(x));
    }
    m
}

#[test]
fn sign_character_on_sl2() {
    let f = fixture("sl2_z2").unwrap();
    let fam = grading_to_action(&f.grading).unwrap();
    assert_eq!(fam.maps().len(), 2);
    assert!(fam.maps()[fam.dual().trivial()].map.is_identity());
    let sign = fam.maps().iter().find(|m| !m.character.is_trivial()).unwrap();
    assert_eq!(sign.map.matrix(), &diag(&[1, -1, -1]));
}

#[test]
fn pauli_maps_are_diagonal_signs() {
    let f = fixture("pauli_sl2").unwrap();
    let fam = grading_to_action(&f.grading).unwrap();
    let mut seen: Vec<Matrix> = fam
        .maps()
        .iter()
        .filter(|m| !m.character.is_trivial())
        .map(|m| m.map.matrix().clone())
        .collect();
    seen.sort_by_key(|m| format!("{m:?}"));
    let mut want = vec![diag(&[1, -1, -1]), diag(&[-1, 1, -1]), diag(&[-1, -1, 1])];
    want.sort_by_key(|m| format!("{m:?}"));
    assert_eq!(seen, want);
}

#[test]
fn z4_maps_use_i() {
    let f = fixture("sl2_z4").unwrap();
    let fam = grading_to_action(&f.grading).unwrap();
    let i = Scalar::root_of_unity(4, 1);
    assert!(fam.maps().iter().any(|m| m.map.matrix().get(1, 1) == &i));
}

#[test]
fn round_trip_reproduces_fibers() {
    for name in ABELIAN {
        let f = fixture(name).unwrap();
        let fam = grading_to_action(&f.grading).unwrap();
        let back = action_to_grading(f.grading.algebra(), &fam).unwrap();
        assert_eq!(fibers_by_name(&back.grading), fibers_by_name(&f.grading), "{name}");
        assert_eq!(back.grading.algebra().names(), f.grading.algebra().names());
    }
}

#[test]
fn round_trip_on_a_scrambled_basis() {
    let f = scramble(&fixture("sl2_natural_z2").unwrap(), 5).unwrap();
    let fam = grading_to_action(&f.grading).unwrap();
    let back = action_to_grading(f.grading.algebra(), &fam).unwrap();
    assert_eq!(fibers_by_name(&back.grading), fibers_by_name(&f.grading));
}

#[test]
fn non_diagonal_family_gets_eigenvector_basis() {
    // swapping the two sl2 copies: fibers are the diagonal and anti-diagonal
    let pair = fixture("dihedral_sl2").unwrap().grading.algebra().clone();
    let mut swap = Matrix::zeros(6, 6);
    for k in 0..3 {
        swap.set(k, k + 3, Scalar::int(1));
        swap.set(k + 3, k, Scalar::int(1));
    }
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let dual = DualGroup::new(&z2).unwrap();
    let mut maps = BTreeMap::new();
    for ch in dual.characters() {
        let m = if ch.is_trivial() { Matrix::identity(6) } else { swap.clone() };
        maps.insert(ch.name().to_string(), m);
    }
    let fam = ActionFamily::new(&pair, z2, maps).unwrap();
    let back = action_to_grading(&pair, &fam).unwrap();
    assert_eq!(back.grading.algebra().name(0), "u0");
    assert_eq!(back.fibers.values().map(Subspace::dim).collect::<Vec<_>>(), [3, 3]);
    assert!(back.grading.is_graded_simple().unwrap().simple);
}

#[test]
fn identity_family_gives_trivial_grading() {
    let f = fixture("sl2_z2").unwrap();
    let alg = f.grading.algebra();
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let dual = DualGroup::new(&z2).unwrap();
    let maps = dual.characters().iter().map(|c| (c.name().to_string(), Matrix::identity(3))).collect();
    let fam = ActionFamily::new(alg, z2, maps).unwrap();
    let back = action_to_grading(alg, &fam).unwrap();
    assert_eq!(back.grading.support().len(), 1);
}

#[test]
fn bad_families_are_rejected() {
    let f = fixture("sl2_z2").unwrap();
    let alg = f.grading.algebra();
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let names: Vec<String> = DualGroup::new(&z2).unwrap().characters().iter().map(|c| c.name().to_string()).collect();
    let with = |m: Matrix| -> BTreeMap<String, Matrix> {
        [(names[0].clone(), Matrix::identity(3)), (names[1].clone(), m)].into_iter().collect()
    };
    // not an automorphism
    let err = ActionFamily::new(alg, z2.clone(), with(diag(&[1, 1, -1]))).unwrap_err();
    assert_eq!(err.class(), ErrorClass::Precondition);
    // automorphism of order 4 indexed by a character of order 2
    let i = Scalar::root_of_unity(4, 1);
    let mut m = Matrix::identity(3);
    m.set(1, 1, i.clone());
    m.set(2, 2, i.inv());
    assert!(ActionFamily::new(alg, z2.clone(), with(m)).is_err());
    // missing character
    let one: BTreeMap<String, Matrix> = [(names[0].clone(), Matrix::identity(3))].into_iter().collect();
    assert!(ActionFamily::new(alg, z2, one).is_err());
    // non-abelian group
    assert!(ActionFamily::new(alg, FiniteGroup::symmetric(3).unwrap(), BTreeMap::new()).is_err());
}

#[test]
fn dihedral_grading_has_no_dual_action() {
    let f = fixture("dihedral_sl2").unwrap();
    let err = grading_to_action(&f.grading).unwrap_err();
    assert_eq!(err.class(), ErrorClass::Precondition);
}

#[test]
fn abelian_support_inside_nonabelian_group() {
    // sl2 graded by the subgroup {e, (12)} of S3
    let f = fixture("sl2_z2").unwrap();
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let t = s3.index_of("(12)").unwrap();
    let gr = f.grading.with_group(s3, &[0, t]).unwrap();
    let fam = grading_to_action(&gr).unwrap();
    assert_eq!(fam.group().order(), 2);
    let back = action_to_grading(gr.algebra(), &fam).unwrap();
    assert_eq!(fibers_by_name(&back.grading), fibers_by_name(&gr));
}

#[test]
fn stability_examples() {
    let f = fixture("sl2_z2").unwrap();
    let fam = grading_to_action(&f.grading).unwrap();
    let e_plus_h = Subspace::span(3, [vector::from_ints(&[1, 1, 0])]).unwrap();
    assert!(!stable_subspace_check(&e_plus_h, &fam).unwrap());
    for g in f.grading.support() {
        assert!(stable_subspace_check(&f.grading.fiber(g), &fam).unwrap());
    }
    let r = fixture("sl2_natural_z2").unwrap();
    let fam = grading_to_action(&r.grading).unwrap();
    assert!(stable_subspace_check(&r.expected.radical, &fam).unwrap());
}
