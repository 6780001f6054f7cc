use super::*;
use crate::linalg::vector::from_ints;

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// sl2 on (e, f, h) typed in by hand.
fn sl2_table() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["e", "f", "h"]),
        [
            (0, 1, from_ints(&[0, 0, 1])),
            (0, 2, from_ints(&[-2, 0, 0])),
            (1, 2, from_ints(&[0, 2, 0])),
        ],
    )
    .unwrap()
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Scalar::int(1));
    m
}

fn sl_matrices(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(unit_matrix(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        out.push(unit_matrix(n, i, i).sub(&unit_matrix(n, i + 1, i + 1)).unwrap());
    }
    out
}

fn span_names(k: usize) -> Vec<String> {
    (0..k).map(|i| format!("b{i}")).collect()
}

/// `{X : Xᵀ J + J X = 0}` for a symmetric or skew `J`, as a matrix algebra.
fn preserving(j: &Matrix) -> LieAlgebra {
    let n = j.rows();
    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut row = vector::zero(n * n);
            // (Xᵀ J + J X)_{ab} = Σ_k X_ka J_kb + J_ak X_kb
            for k in 0..n {
                row[k * n + a] += j.get(k, b);
                row[k * n + b] += j.get(a, k);
            }
            rows.push(row);
        }
    }
    let ker = Matrix::from_rows_with_cols(rows, n * n).unwrap().kernel();
    let mats: Vec<Matrix> = ker
        .iter()
        .map(|k| Matrix::from_rows_with_cols(k.chunks(n).map(|c| c.to_vec()).collect(), n).unwrap())
        .collect();
    LieAlgebra::from_matrices(span_names(mats.len()), &mats).unwrap()
}

fn antidiagonal(n: usize) -> Matrix {
    let mut j = Matrix::zeros(n, n);
    for i in 0..n {
        j.set(i, n - 1 - i, Scalar::int(1));
    }
    j
}

fn symplectic(n: usize) -> Matrix {
    let mut j = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j.set(i, 2 * n - 1 - i, Scalar::int(1));
        j.set(2 * n - 1 - i, i, Scalar::int(-1));
    }
    j
}

#[test]
fn sl2_table_matches_matrix_model() {
    let e = unit_matrix(2, 0, 1);
    let f = unit_matrix(2, 1, 0);
    let h = unit_matrix(2, 0, 0).sub(&unit_matrix(2, 1, 1)).unwrap();
    let from_mats = LieAlgebra::from_matrices(names(&["e", "f", "h"]), &[e, f, h]).unwrap();
    assert_eq!(from_mats, sl2_table());
}

#[test]
fn sl2_killing_form() {
    let k = sl2_table().killing_form();
    assert_eq!(k.get(0, 1), &Scalar::int(4));
    assert_eq!(k.get(2, 2), &Scalar::int(8));
    assert_eq!(k.get(0, 0), &Scalar::int(0));
    assert_eq!(k.determinant().unwrap(), Scalar::int(-128));
    let alg = sl2_table();
    assert_eq!(alg.killing(&from_ints(&[1, 0, 0]), &from_ints(&[0, 1, 0])).unwrap(), Scalar::int(4));
}

#[test]
fn jacobi_and_antisymmetry_are_enforced() {
    // [a,b]=a, [b,c]=b, [a,c]=c fails Jacobi
    let bad = LieAlgebra::from_brackets(
        names(&["a", "b", "c"]),
        [
            (0, 1, from_ints(&[1, 0, 0])),
            (1, 2, from_ints(&[0, 1, 0])),
            (0, 2, from_ints(&[0, 0, 1])),
        ],
    );
    assert!(matches!(bad, Err(Error::InvalidAlgebra(_))));
    let mut table = sl2_table().table();
    table[1] = from_ints(&[0, 0, 2]);
    assert!(matches!(LieAlgebra::new(names(&["e", "f", "h"]), table), Err(Error::InvalidAlgebra(_))));
    let reversed = LieAlgebra::from_brackets(names(&["x", "y"]), [(1, 0, from_ints(&[1, 0]))]);
    assert!(reversed.is_err());
}

/// sl2 ⋉ Q² with the natural action, basis (e, f, h, v1, v2).
fn sl2_natural() -> LieAlgebra {
    let mats: Vec<Matrix> = [
        [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [1, 0, 0], [0, 0, 0]],
        [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 0, 0]],
    ]
    .iter()
    .map(|m| Matrix::from_int_rows(&[&m[0], &m[1], &m[2]]))
    .collect();
    LieAlgebra::from_matrices(names(&["e", "f", "h", "v1", "v2"]), &mats).unwrap()
}

#[test]
fn radical_of_semidirect_product() {
    let alg = sl2_natural();
    let r = alg.radical().unwrap();
    assert_eq!(r, Subspace::coordinate(5, [3, 4]));
    assert!(alg.is_ideal(&r).unwrap());
    assert!(!alg.is_semisimple().unwrap());
    assert!(sl2_table().radical().unwrap().is_zero());
    let q = alg.quotient(&r).unwrap();
    assert_eq!(q.algebra, sl2_table());
    assert_eq!(q.complement, vec![0, 1, 2]);
}

#[test]
fn series_and_centre() {
    let alg = sl2_natural();
    let d = alg.derived_series().unwrap();
    assert_eq!(d.len(), 1);
    let r = alg.radical().unwrap();
    let dr = alg.derived_series_of(&r).unwrap();
    assert_eq!(dr.last().unwrap().dim(), 0);
    assert!(alg.center().unwrap().is_zero());
    let heis = LieAlgebra::from_brackets(names(&["x", "y", "z"]), [(0, 1, from_ints(&[0, 0, 1]))]).unwrap();
    assert!(heis.is_nilpotent().unwrap());
    assert_eq!(heis.center().unwrap(), Subspace::coordinate(3, [2]));
    assert_eq!(heis.lower_central_series().unwrap().len(), 3);
}

#[test]
fn ideals_and_subalgebras_by_spinning() {
    let alg = sl2_natural();
    let i = alg.ideal_generated(&[from_ints(&[0, 0, 0, 1, 0])]).unwrap();
    assert_eq!(i.dim(), 2);
    let s = alg.subalgebra_generated(&[from_ints(&[1, 0, 0, 0, 0]), from_ints(&[0, 1, 0, 0, 0])]).unwrap();
    assert_eq!(s, Subspace::coordinate(5, [0, 1, 2]));
    let sub = alg.restrict(&s).unwrap();
    assert_eq!(sub, sl2_table());
    assert_eq!(alg.left_normed(&[from_ints(&[0, 0, 1, 0, 0]), from_ints(&[1, 0, 0, 0, 0]), from_ints(&[0, 1, 0, 0, 0])]).unwrap(), from_ints(&[0, 0, 2, 0, 0]));
}

#[test]
fn basis_change_preserves_killing_determinant_up_to_square() {
    let alg = sl2_table();
    let p = Matrix::from_int_rows(&[&[1, 1, 0], &[1, -1, 0], &[0, 0, 1]]);
    let b = alg.change_basis(&p).unwrap();
    let ratio = b.killing_form().determinant().unwrap() / alg.killing_form().determinant().unwrap();
    assert_eq!(ratio, p.determinant().unwrap() * p.determinant().unwrap());
}

#[test]
fn simple_decomposition_of_sums() {
    let s = LieAlgebra::direct_sum(&sl2_table(), &sl2_table()).unwrap();
    let parts = s.simple_decomposition().unwrap();
    assert_eq!(parts, vec![Subspace::coordinate(6, 0..3), Subspace::coordinate(6, 3..6)]);
    // diagonal / anti-diagonal basis
    let mut rows = Vec::new();
    for k in 0..3 {
        let mut d = vector::zero(6);
        d[k] = Scalar::int(1);
        d[k + 3] = Scalar::int(1);
        let mut a = d.clone();
        a[k + 3] = Scalar::int(-1);
        rows.push(d);
        rows.push(a);
    }
    let swapped = s.change_basis(&Matrix::from_rows(rows).unwrap()).unwrap();
    let parts = swapped.simple_decomposition().unwrap();
    assert_eq!(parts.len(), 2);
    assert!(parts.iter().all(|p| p.dim() == 3));
    let s3 = LieAlgebra::direct_sum(&s, &LieAlgebra::from_matrices(span_names(8), &sl_matrices(3)).unwrap()).unwrap();
    let dims: Vec<usize> = s3.simple_decomposition().unwrap().iter().map(Subspace::dim).collect();
    assert_eq!(dims, vec![3, 3, 8]);
}

/// sl2 over Q(i), seen as a six-dimensional algebra over Q.
fn sl2_gaussian() -> LieAlgebra {
    let base = sl2_table();
    let mut table = Vec::new();
    for a in 0..6 {
        for b in 0..6 {
            let (ra, ia) = (a % 3, a / 3);
            let (rb, ib) = (b % 3, b / 3);
            let br = base.basis_bracket(ra, rb);
            let mut v = vector::zero(6);
            let (shift, sign) = match ia + ib {
                0 => (0, 1),
                1 => (3, 1),
                _ => (0, -1),
            };
            for k in 0..3 {
                v[k + shift] = &br[k] * &Scalar::int(sign);
            }
            table.push(v);
        }
    }
    LieAlgebra::new(names(&["e", "f", "h", "ie", "if", "ih"]), table).unwrap()
}

#[test]
fn non_split_simple_ideal_is_reported() {
    let g = sl2_gaussian();
    assert!(g.is_semisimple().unwrap());
    assert!(matches!(g.simple_decomposition(), Err(Error::NonSplit(_))));
}

#[test]
fn classification_of_small_types() {
    assert_eq!(sl2_table().classify_split_type().unwrap(), SplitType::A(1));
    let sl3 = LieAlgebra::from_matrices(span_names(8), &sl_matrices(3)).unwrap();
    assert_eq!(sl3.classify_split_type().unwrap(), SplitType::A(2));
    let so5 = preserving(&antidiagonal(5));
    assert_eq!(so5.dim(), 10);
    assert_eq!(so5.classify_split_type().unwrap(), SplitType::B(2));
    let sp6 = preserving(&symplectic(3));
    assert_eq!(sp6.dim(), 21);
    assert_eq!(sp6.classify_split_type().unwrap(), SplitType::C(3));
    let so7 = preserving(&antidiagonal(7));
    assert_eq!(so7.classify_split_type().unwrap(), SplitType::B(3));
    // compact so(3): no rational eigenvalues anywhere
    let so3 = LieAlgebra::from_brackets(
        names(&["x", "y", "z"]),
        [(0, 1, from_ints(&[0, 0, 1])), (1, 2, from_ints(&[1, 0, 0])), (0, 2, from_ints(&[0, -1, 0]))],
    )
    .unwrap();
    assert_eq!(so3.classify_split_type().unwrap(), SplitType::Unrecognized);
    assert_eq!(so3.simple_decomposition().unwrap().len(), 1);
}

#[test]
fn type_labels_round_trip() {
    for t in [SplitType::A(3), SplitType::B(2), SplitType::C(4), SplitType::D(5), SplitType::E(7), SplitType::F4, SplitType::G2, SplitType::Unrecognized] {
        let s: String = t.clone().into();
        assert_eq!(SplitType::try_from(s).unwrap(), t);
    }
    assert!(SplitType::try_from("C2".to_string()).is_err());
}

#[test]
fn linear_maps_and_automorphisms() {
    let alg = sl2_table();
    // e ↦ -f, f ↦ -e, h ↦ -h (Chevalley involution)
    let m = Matrix::from_int_rows(&[&[0, -1, 0], &[-1, 0, 0], &[0, 0, -1]]);
    assert!(LinearMap::new(m).unwrap().is_automorphism(&alg).unwrap());
    let bad = Matrix::from_int_rows(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert_eq!(LinearMap::new(bad).unwrap().homomorphism_failure(&alg).unwrap(), Some((0, 1)));
}

