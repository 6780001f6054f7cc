//! Abelian gradings and finite abelian groups of automorphisms, in both directions.
//!
//! A grading by `G` gives the action `χ* x_g = χ(g) x_g` of the dual group; a family
//! of commuting automorphisms indexed by the dual group gives back the grading by
//! simultaneous eigenspaces `L_g = {v : χ* v = χ(g) v for all χ}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::groups::{Character, DualGroup, FiniteGroup};
use crate::lie::{LieAlgebra, LinearMap};
use crate::linalg::{vector, Matrix, Subspace, Vector};

/// The automorphism `χ*` induced by one character.
#[derive(Clone, Debug)]
pub struct GradedAutomorphism {
    pub character: Character,
    pub map: LinearMap,
}

/// Maps indexed by the characters of a finite abelian group, in character order.
#[derive(Clone, Debug)]
pub struct ActionFamily {
    group: FiniteGroup,
    dual: DualGroup,
    maps: Vec<GradedAutomorphism>,
}

fn check_abelian(group: &FiniteGroup) -> Result<()> {
    if group.is_abelian() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "duality needs an abelian group; {group} is not abelian"
        )))
    }
}

impl ActionFamily {
    /// Validates a family against `alg`: a map for every character, each an
    /// automorphism, pairwise commuting, with `(χψ)* = χ* ∘ ψ*` and the trivial
    /// character acting as the identity.
    pub fn new(alg: &LieAlgebra, group: FiniteGroup, maps: BTreeMap<String, Matrix>) -> Result<Self> {
        check_abelian(&group)?;
        let dual = DualGroup::new(&group)?;
        for name in maps.keys() {
            if dual.index_of(name).is_none() {
                return Err(Error::Precondition(format!("{name:?} is not a character of {group}")));
            }
        }
        let mut out = Vec::with_capacity(dual.len());
        for ch in dual.characters() {
            let m = maps
                .get(ch.name())
                .ok_or_else(|| Error::Precondition(format!("no map given for character {}", ch.name())))?;
            if m.rows() != alg.dim() || m.cols() != alg.dim() {
                return Err(Error::DimensionMismatch {
                    expected: alg.dim(),
                    found: m.rows().max(m.cols()),
                });
            }
            let map = LinearMap::new(m.clone())?;
            if !map.is_invertible()? {
                return Err(Error::Precondition(format!("map for {} is not invertible", ch.name())));
            }
            if let Some((i, j)) = map.homomorphism_failure(alg)? {
                return Err(Error::Precondition(format!(
                    "map for {} is not an automorphism: fails on ({}, {})",
                    ch.name(),
                    alg.name(i),
                    alg.name(j)
                )));
            }
            out.push(GradedAutomorphism {
                character: ch.clone(),
                map,
            });
        }
        let fam = ActionFamily { group, dual, maps: out };
        fam.check_laws()?;
        Ok(fam)
    }

    fn check_laws(&self) -> Result<()> {
        let k = self.maps.len();
        if !self.maps[self.dual.trivial()].map.is_identity() {
            return Err(Error::Precondition("trivial character does not act as the identity".into()));
        }
        let e = self.dual.exponent() as u32;
        for (i, a) in self.maps.iter().enumerate() {
            if !a.map.matrix().pow(e)?.eq(&Matrix::identity(a.map.dim())) {
                return Err(Error::Precondition(format!(
                    "map for {} has order not dividing {e}",
                    a.character.name()
                )));
            }
            for j in i + 1..k {
                let b = &self.maps[j];
                if !a.map.matrix().commutes_with(b.map.matrix())? {
                    return Err(Error::Precondition(format!(
                        "maps for {} and {} do not commute",
                        a.character.name(),
                        b.character.name()
                    )));
                }
            }
            for (j, b) in self.maps.iter().enumerate() {
                let prod = &self.maps[self.dual.product(i, j)];
                if a.map.compose(&b.map)?.matrix() != prod.map.matrix() {
                    return Err(Error::Precondition(format!(
                        "map for {} is not the composite of the maps for {} and {}",
                        prod.character.name(),
                        a.character.name(),
                        b.character.name()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dual(&self) -> &DualGroup {
        &self.dual
    }

    pub fn maps(&self) -> &[GradedAutomorphism] {
        &self.maps
    }

    pub fn get(&self, character: &str) -> Option<&GradedAutomorphism> {
        self.dual.index_of(character).map(|i| &self.maps[i])
    }

    /// Matrices keyed by character name.
    pub fn matrices(&self) -> BTreeMap<String, Matrix> {
        self.maps
            .iter()
            .map(|m| (m.character.name().to_string(), m.map.matrix().clone()))
            .collect()
    }
}

/// The grading on its support subgroup, which must be abelian. Also returns the
/// embedding of subgroup indices into the original group.
pub fn restrict_to_support_subgroup(gr: &Grading) -> Result<(Grading, Vec<usize>)> {
    let h = gr.support_subgroup()?;
    let (sub, emb) = gr.group().subgroup(&h)?;
    if !sub.is_abelian() {
        return Err(Error::Precondition(format!(
            "the support generates the non-abelian subgroup {}; duality is undefined",
            gr.group().format_set(h.iter().copied())
        )));
    }
    let pos: BTreeMap<usize, usize> = emb.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let degrees = gr.degrees().iter().map(|g| pos[g]).collect();
    Ok((Grading::new(gr.algebra().clone(), sub, degrees)?, emb))
}

/// `χ* x_g = χ(g) x_g` for every character of the support subgroup.
pub fn grading_to_action(gr: &Grading) -> Result<ActionFamily> {
    let (gr, _) = restrict_to_support_subgroup(gr)?;
    let dual = DualGroup::new(gr.group())?;
    let n = gr.dim();
    let mut maps = BTreeMap::new();
    for ch in dual.characters() {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ch.value(gr.degree(i)));
        }
        let map = LinearMap::new(m.clone())?;
        if let Some((i, j)) = map.homomorphism_failure(gr.algebra())? {
            return Err(Error::InvariantViolation(format!(
                "{}* is not an automorphism: fails on ({}, {})",
                ch.name(),
                gr.algebra().name(i),
                gr.algebra().name(j)
            )));
        }
        maps.insert(ch.name().to_string(), m);
    }
    ActionFamily::new(gr.algebra(), gr.group().clone(), maps)
}

/// Grading recovered from an action, with the homogeneous basis it lives on.
#[derive(Clone, Debug)]
pub struct RecoveredGrading {
    pub grading: Grading,
    /// basis of `grading` in the coordinates of the input algebra
    pub basis: Vec<Vector>,
    /// nonzero eigenspaces in the coordinates of the input algebra
    pub fibers: BTreeMap<usize, Subspace>,
}

/// Simultaneous eigenspaces over the generators of the dual group.
///
/// If every eigenvector found is a standard basis vector the input basis and
/// its names are kept; otherwise the grading lives on the eigenvectors, named `u0, u1, …`.
pub fn action_to_grading(alg: &LieAlgebra, fam: &ActionFamily) -> Result<RecoveredGrading> {
    let n = alg.dim();
    let group = fam.group();
    let gens = fam.dual().generators();
    let mut fibers = BTreeMap::new();
    for g in 0..group.order() {
        let mut space = Subspace::full(n);
        for &c in &gens {
            let a = &fam.maps()[c];
            let shifted = a
                .map
                .matrix()
                .sub(&Matrix::identity(n).scale(&a.character.value(g)))?;
            let ker = Subspace::span(n, shifted.kernel())?;
            space = space.intersection(&ker)?;
            if space.is_zero() {
                break;
            }
        }
        if !space.is_zero() {
            fibers.insert(g, space);
        }
    }
    let total: usize = fibers.values().map(Subspace::dim).sum();
    if total != n {
        return Err(Error::InvariantViolation(format!(
            "eigenspaces have total dimension {total}, not {n}"
        )));
    }

    let units: Option<Vec<(usize, usize)>> = fibers
        .iter()
        .flat_map(|(&g, s)| s.basis().iter().map(move |v| vector::as_unit(v).map(|i| (i, g))))
        .collect();
    let (grading, basis) = match units {
        Some(units) => {
            let mut degrees = vec![0; n];
            for (i, g) in units {
                degrees[i] = g;
            }
            let basis = (0..n).map(|i| vector::unit(n, i)).collect();
            (Grading::new(alg.clone(), group.clone(), degrees)?, basis)
        }
        None => {
            let mut rows = Vec::new();
            let mut degrees = Vec::new();
            for (&g, s) in &fibers {
                for v in s.basis() {
                    rows.push(v.clone());
                    degrees.push(g);
                }
            }
            let names = (0..n).map(|i| format!("u{i}")).collect();
            let algebra = alg.change_basis(&Matrix::from_rows(rows.clone())?)?.with_names(names)?;
            (Grading::new(algebra, group.clone(), degrees)?, rows)
        }
    };
    Ok(RecoveredGrading {
        grading,
        basis,
        fibers,
    })
}

/// `χ*(V) = V` for every character.
pub fn stable_subspace_check(v: &Subspace, fam: &ActionFamily) -> Result<bool> {
    for a in fam.maps() {
        if a.map.dim() != v.ambient() {
            return Err(Error::DimensionMismatch {
                expected: a.map.dim(),
                found: v.ambient(),
            });
        }
        if v.image(a.map.matrix())? != *v {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fibers of a grading keyed by element name, for comparing gradings across groups.
pub fn fibers_by_name(gr: &Grading) -> BTreeMap<String, Subspace> {
    gr.support()
        .into_iter()
        .map(|g| (gr.group().name(g).to_string(), gr.fiber(g)))
        .collect()
}

#[cfg(test)]
mod tests;
