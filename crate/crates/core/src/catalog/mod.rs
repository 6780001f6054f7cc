//! Graded algebras with known answers.

pub mod algebras;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use algebras::{abelian, rep_sum, semidirect, sl2_heisenberg, sl_matrices, sl_n, so_n, two_dim_solvable};

use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::groups::FiniteGroup;
use crate::lie::LieAlgebra;
use crate::linalg::{vector, Matrix, Scalar, Subspace};

/// Answers known from the construction of a fixture.
#[derive(Clone, Debug)]
pub struct Expected {
    pub radical: Subspace,
    /// a Levi subalgebra known by construction
    pub levi: Subspace,
    /// supports of the graded-simple blocks, in block order
    pub block_supports: Vec<BTreeSet<usize>>,
    /// simple summands per block
    pub summands: Vec<usize>,
}

impl Expected {
    pub fn radical_dim(&self) -> usize {
        self.radical.dim()
    }

    pub fn levi_dim(&self) -> usize {
        self.levi.dim()
    }

    pub fn block_count(&self) -> usize {
        self.block_supports.len()
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub grading: Grading,
    pub expected: Expected,
}

/// Names accepted by [`fixture`], in listing order.
pub const FIXTURE_NAMES: [&str; 13] = [
    "sl2_z2",
    "sl2_z4",
    "pauli_sl2",
    "dihedral_sl2",
    "swap_sl2_sl2",
    "sl3_z3",
    "so5_z2",
    "abelian_z2",
    "two_dim_solvable",
    "sl2_natural_z2",
    "sl3_natural_z3",
    "dihedral_semidirect",
    "sl2_heisenberg_z2",
];

/// Fixtures with a nonzero radical and a known Levi complement.
pub const SEMIDIRECT_NAMES: [&str; 4] = ["sl2_natural_z2", "sl3_natural_z3", "dihedral_semidirect", "sl2_heisenberg_z2"];

pub fn all_fixtures() -> Result<Vec<Fixture>> {
    FIXTURE_NAMES.iter().map(|n| fixture(n)).collect()
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let f = match name {
        "sl2_z2" => sl2_z2()?,
        "sl2_z4" => sl2_z4()?,
        "pauli_sl2" => pauli_sl2()?,
        "dihedral_sl2" => dihedral_sl2()?,
        "swap_sl2_sl2" => swap_sl2_sl2()?,
        "sl3_z3" => sl3_z3()?,
        "so5_z2" => so5_z2()?,
        "abelian_z2" => abelian_z2()?,
        "two_dim_solvable" => two_dim_solvable_z2()?,
        "sl2_natural_z2" => sl2_natural_z2()?,
        "sl3_natural_z3" => sl3_natural_z3()?,
        "dihedral_semidirect" => dihedral_semidirect()?,
        "sl2_heisenberg_z2" => sl2_heisenberg_z2()?,
        _ => return Err(Error::Precondition(format!("unknown fixture {name:?}"))),
    };
    verify_expected(&f)?;
    Ok(f)
}

/// Construction-time checks of the expected answers, from the bracket table alone.
fn verify_expected(f: &Fixture) -> Result<()> {
    let alg = f.grading.algebra();
    let n = alg.dim();
    let e = &f.expected;
    let bad = |m: &str| Err(Error::InvariantViolation(format!("fixture {}: {m}", f.name)));
    for r in e.radical.basis() {
        for i in 0..n {
            if !e.radical.contains(&alg.bracket_unchecked(r, &vector::unit(n, i)))? {
                return bad("expected radical is not an ideal");
            }
        }
    }
    // the radical candidate must be solvable: its derived series, term by term from the table
    let mut term = e.radical.clone();
    for _ in 0..=n {
        if term.is_zero() {
            break;
        }
        let mut prods = Vec::new();
        for a in term.basis() {
            for b in term.basis() {
                prods.push(alg.bracket_unchecked(a, b));
            }
        }
        term = Subspace::span(n, prods)?;
    }
    if !term.is_zero() {
        return bad("expected radical is not solvable");
    }
    for a in e.levi.basis() {
        for b in e.levi.basis() {
            if !e.levi.contains(&alg.bracket_unchecked(a, b))? {
                return bad("expected Levi subalgebra is not closed");
            }
        }
    }
    if !e.levi.intersection(&e.radical)?.is_zero() || e.levi.dim() + e.radical.dim() != n {
        return bad("expected Levi subalgebra is not a complement of the radical");
    }
    if e.summands.len() != e.block_supports.len() {
        return bad("summand counts and block supports disagree");
    }
    Ok(())
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn degrees(group: &FiniteGroup, xs: &[&str]) -> Result<Vec<usize>> {
    xs.iter()
        .map(|x| group.index_of(x).ok_or_else(|| Error::Precondition(format!("no element {x:?}"))))
        .collect()
}

fn set(group: &FiniteGroup, xs: &[&str]) -> Result<BTreeSet<usize>> {
    Ok(degrees(group, xs)?.into_iter().collect())
}

fn semisimple(grading: Grading, name: &str, description: &str, supports: Vec<BTreeSet<usize>>, summands: Vec<usize>) -> Fixture {
    let n = grading.dim();
    Fixture {
        name: name.into(),
        description: description.into(),
        grading,
        expected: Expected {
            radical: Subspace::zero(n),
            levi: Subspace::full(n),
            block_supports: supports,
            summands,
        },
    }
}

/// sl2 on (h, e, f) with `h` in degree `r0` and `e, f` in degree `r1`.
fn sl2_hef() -> Result<LieAlgebra> {
    let (_, m) = sl_matrices(2)?;
    LieAlgebra::from_matrices(names(&["h", "e", "f"]), &[m[2].clone(), m[0].clone(), m[1].clone()])
}

fn sl2_z2() -> Result<Fixture> {
    let g = FiniteGroup::cyclic(2)?;
    let d = degrees(&g, &["r0", "r1", "r1"])?;
    let s = set(&g, &["r0", "r1"])?;
    Ok(semisimple(Grading::new(sl2_hef()?, g, d)?, "sl2_z2", "sl2 with L_0 = span(h), L_1 = span(e, f)", vec![s], vec![1]))
}

fn sl2_z4() -> Result<Fixture> {
    let g = FiniteGroup::cyclic(4)?;
    let d = degrees(&g, &["r0", "r1", "r3"])?;
    let s = set(&g, &["r0", "r1", "r3"])?;
    Ok(semisimple(Grading::new(sl2_hef()?, g, d)?, "sl2_z4", "sl2 by Z4: deg h = 0, deg e = 1, deg f = 3", vec![s], vec![1]))
}

/// sl2 on x = h, y = e + f, z = e − f, graded by the Klein group.
pub fn pauli_grading_sl2() -> Result<Fixture> {
    fixture("pauli_sl2")
}

/// sl2 ⊕ sl2 over S3 with root vectors in the non-commuting degrees (12) and (23).
pub fn dihedral_example() -> Result<Fixture> {
    fixture("dihedral_sl2")
}

fn pauli_sl2() -> Result<Fixture> {
    let alg = LieAlgebra::from_brackets(
        names(&["x", "y", "z"]),
        [
            (0, 1, vector::from_ints(&[0, 0, 2])),
            (0, 2, vector::from_ints(&[0, 2, 0])),
            (1, 2, vector::from_ints(&[-2, 0, 0])),
        ],
    )?;
    let z2 = FiniteGroup::cyclic(2)?;
    let g = FiniteGroup::product(&z2, &z2)?;
    let d = degrees(&g, &["(r1,r0)", "(r0,r1)", "(r1,r1)"])?;
    let s = set(&g, &["(r1,r0)", "(r0,r1)", "(r1,r1)"])?;
    Ok(semisimple(
        Grading::new(alg, g, d)?,
        "pauli_sl2",
        "sl2 graded by Z2xZ2 with fibers span(h), span(e+f), span(e-f)",
        vec![s],
        vec![1],
    ))
}

fn sl2_pair() -> Result<LieAlgebra> {
    let a = sl2_hef()?;
    LieAlgebra::direct_sum(&a, &a)?.with_names(names(&["h1", "e1", "f1", "h2", "e2", "f2"]))
}

/// Two copies of sl2 graded over S3 by the non-commuting involutions (12) and (23).
fn dihedral_sl2() -> Result<Fixture> {
    let g = FiniteGroup::symmetric(3)?;
    let d = degrees(&g, &["e", "(12)", "(12)", "e", "(23)", "(23)"])?;
    let supports = vec![set(&g, &["e", "(12)"])?, set(&g, &["e", "(23)"])?];
    Ok(semisimple(
        Grading::new(sl2_pair()?, g, d)?,
        "dihedral_sl2",
        "sl2 + sl2 over S3; root vectors of the copies in degrees (12) and (23)",
        supports,
        vec![1, 1],
    ))
}

/// sl2 ⊕ sl2 on the diagonal (x, x) and anti-diagonal (x, −x) copies, graded by Z2.
fn swap_sl2_sl2() -> Result<Fixture> {
    let pair = sl2_pair()?;
    let mut rows = Vec::new();
    for k in 0..3 {
        let mut d = vector::zero(6);
        d[k] = Scalar::int(1);
        d[k + 3] = Scalar::int(1);
        rows.push(d);
    }
    for k in 0..3 {
        let mut a = vector::zero(6);
        a[k] = Scalar::int(1);
        a[k + 3] = Scalar::int(-1);
        rows.push(a);
    }
    let alg = pair
        .change_basis(&Matrix::from_rows(rows)?)?
        .with_names(names(&["hd", "ed", "fd", "ha", "ea", "fa"]))?;
    let g = FiniteGroup::cyclic(2)?;
    let d = degrees(&g, &["r0", "r0", "r0", "r1", "r1", "r1"])?;
    let s = set(&g, &["r0", "r1"])?;
    Ok(semisimple(
        Grading::new(alg, g, d)?,
        "swap_sl2_sl2",
        "sl2 + sl2 graded by the swap: diagonal in degree 0, anti-diagonal in degree 1",
        vec![s],
        vec![2],
    ))
}

fn sl3_z3_grading() -> Result<(LieAlgebra, Vec<usize>)> {
    let alg = sl_n(3)?;
    let d = alg
        .names()
        .iter()
        .map(|nm| {
            let b = nm.as_bytes();
            if b[0] == b'e' {
                let (i, j) = ((b[1] - b'0') as usize, (b[2] - b'0') as usize);
                (j + 3 - i) % 3
            } else {
                0
            }
        })
        .collect();
    Ok((alg, d))
}

fn sl3_z3() -> Result<Fixture> {
    let g = FiniteGroup::cyclic(3)?;
    let (alg, d) = sl3_z3_grading()?;
    let s = set(&g, &["r0", "r1", "r2"])?;
    Ok(semisimple(Grading::new(alg, g, d)?, "sl3_z3", "sl3 with deg e_ij = j - i mod 3", vec![s], vec![1]))
}

fn so5_z2() -> Result<Fixture> {
    let (alg, _) = so_n(5)?;
    let g = FiniteGroup::cyclic(2)?;
    let d = alg
        .names()
        .iter()
        .map(|nm| {
            let b = nm.as_bytes();
            ((b[1] - b'0') as usize + (b[2] - b'0') as usize) % 2
        })
        .collect();
    let s = set(&g, &["r0", "r1"])?;
    Ok(semisimple(
        Grading::new(alg, g, d)?,
        "so5_z2",
        "split so5 graded by the parity of i + j",
        vec![s],
        vec![1],
    ))
}

fn abelian_z2() -> Result<Fixture> {
    let g = FiniteGroup::cyclic(2)?;
    let d = degrees(&g, &["r0", "r1", "r1"])?;
    Ok(Fixture {
        name: "abelian_z2".into(),
        description: "three-dimensional abelian algebra graded by Z2".into(),
        grading: Grading::new(abelian(3)?, g, d)?,
        expected: Expected {
            radical: Subspace::full(3),
            levi: Subspace::zero(3),
            block_supports: vec![],
            summands: vec![],
        },
    })
}

fn two_dim_solvable_z2() -> Result<Fixture> {
    let g = FiniteGroup::cyclic(2)?;
    let d = degrees(&g, &["r0", "r1"])?;
    Ok(Fixture {
        name: "two_dim_solvable".into(),
        description: "[x, y] = y with y in degree 1".into(),
        grading: Grading::new(two_dim_solvable()?, g, d)?,
        expected: Expected {
            radical: Subspace::full(2),
            levi: Subspace::zero(2),
            block_supports: vec![],
            summands: vec![],
        },
    })
}

fn semidirect_fixture(
    name: &str,
    description: &str,
    grading: Grading,
    levi_dim: usize,
    supports: Vec<BTreeSet<usize>>,
    summands: Vec<usize>,
) -> Fixture {
    let n = grading.dim();
    Fixture {
        name: name.into(),
        description: description.into(),
        grading,
        expected: Expected {
            radical: Subspace::coordinate(n, levi_dim..n),
            levi: Subspace::coordinate(n, 0..levi_dim),
            block_supports: supports,
            summands,
        },
    }
}

fn sl2_natural_z2() -> Result<Fixture> {
    let base = sl_n(2)?;
    let (_, mats) = sl_matrices(2)?;
    let alg = semidirect(&base, &mats, &names(&["v1", "v2"]))?;
    let g = FiniteGroup::cyclic(2)?;
    let d = degrees(&g, &["r1", "r1", "r0", "r1", "r0"])?;
    Ok(semidirect_fixture(
        "sl2_natural_z2",
        "sl2 ⋉ Q^2 (natural module) graded by Z2",
        Grading::new(alg, g.clone(), d)?,
        3,
        vec![set(&g, &["r0", "r1"])?],
        vec![1],
    ))
}

fn sl3_natural_z3() -> Result<Fixture> {
    let base = sl_n(3)?;
    let (_, mats) = sl_matrices(3)?;
    let alg = semidirect(&base, &mats, &names(&["v1", "v2", "v3"]))?;
    let g = FiniteGroup::cyclic(3)?;
    let (_, mut d) = sl3_z3_grading()?;
    // E_ij v_j = v_i forces deg v_i = -i up to a shift
    d.extend([0, 2, 1]);
    Ok(semidirect_fixture(
        "sl3_natural_z3",
        "sl3 ⋉ Q^3 (natural module) graded by Z3",
        Grading::new(alg, g.clone(), d)?,
        8,
        vec![set(&g, &["r0", "r1", "r2"])?],
        vec![1],
    ))
}

fn dihedral_semidirect() -> Result<Fixture> {
    let base = sl2_pair()?;
    let (_, m) = sl_matrices(2)?;
    let hef = [m[2].clone(), m[0].clone(), m[1].clone()];
    let zero = vec![Matrix::zeros(2, 2); 3];
    let first = rep_sum(&hef, &zero)?;
    let second = rep_sum(&zero, &hef)?;
    let rep: Vec<Matrix> = first[..3].iter().chain(&second[3..]).cloned().collect();
    let alg = semidirect(&base, &rep, &names(&["v1", "v2", "w1", "w2"]))?;
    let g = FiniteGroup::symmetric(3)?;
    let d = degrees(&g, &["e", "(12)", "(12)", "e", "(23)", "(23)", "(12)", "e", "(23)", "e"])?;
    Ok(semidirect_fixture(
        "dihedral_semidirect",
        "(sl2 + sl2) ⋉ (Q^2 + Q^2) over S3, each copy acting on its own plane",
        Grading::new(alg, g.clone(), d)?,
        6,
        vec![set(&g, &["e", "(12)"])?, set(&g, &["e", "(23)"])?],
        vec![1, 1],
    ))
}

fn sl2_heisenberg_z2() -> Result<Fixture> {
    let g = FiniteGroup::cyclic(2)?;
    let d = degrees(&g, &["r1", "r1", "r0", "r1", "r0", "r1"])?;
    Ok(semidirect_fixture(
        "sl2_heisenberg_z2",
        "sl2 ⋉ Heisenberg (natural module plus centre) graded by Z2",
        Grading::new(sl2_heisenberg()?, g.clone(), d)?,
        3,
        vec![set(&g, &["r0", "r1"])?],
        vec![1],
    ))
}

/// A pseudorandom degree-preserving change of basis: on each fiber, a product of a
/// lower and an upper unitriangular matrix with entries in `-2..=2`.
pub fn scramble_matrix(gr: &Grading, seed: u64) -> Result<Matrix> {
    let n = gr.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = Matrix::zeros(n, n);
    for g in gr.support() {
        let idx = gr.fiber_indices(g);
        let k = idx.len();
        let mut lower = Matrix::identity(k);
        let mut upper = Matrix::identity(k);
        for i in 0..k {
            for j in 0..i {
                lower.set(i, j, Scalar::int(rng.gen_range(-2..=2)));
                upper.set(j, i, Scalar::int(rng.gen_range(-2..=2)));
            }
        }
        let m = lower.mul(&upper)?;
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                p.set(i, j, m.get(a, b).clone());
            }
        }
    }
    Ok(p)
}

/// Image of a subspace under the change of basis whose rows are `p`.
pub fn transport(s: &Subspace, p_inverse_t: &Matrix) -> Result<Subspace> {
    let vecs = s.basis().iter().map(|c| p_inverse_t.apply(c)).collect::<Result<Vec<_>>>()?;
    Subspace::span(s.ambient(), vecs)
}

/// The fixture rewritten on the basis given by [`scramble_matrix`], with its expected
/// answers carried along. Basis names and degrees stay with their positions.
pub fn scramble(f: &Fixture, seed: u64) -> Result<Fixture> {
    let gr = &f.grading;
    let p = scramble_matrix(gr, seed)?;
    let alg = gr.algebra().change_basis(&p)?.with_names(gr.algebra().names().to_vec())?;
    let grading = Grading::new(alg, gr.group().clone(), gr.degrees().to_vec())?;
    let qt = p.inverse()?.transpose();
    let e = &f.expected;
    let out = Fixture {
        name: format!("{}~{seed}", f.name),
        description: format!("{} (scrambled, seed {seed})", f.description),
        grading,
        expected: Expected {
            radical: transport(&e.radical, &qt)?,
            levi: transport(&e.levi, &qt)?,
            block_supports: e.block_supports.clone(),
            summands: e.summands.clone(),
        },
    };
    verify_expected(&out)?;
    Ok(out)
}

#[cfg(test)]
mod tests;
