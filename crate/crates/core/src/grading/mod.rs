//! Gradings by finite groups, given on a homogeneous basis.

mod checks;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

pub use checks::{ChainCertificate, FiberIdealOutcome};

use crate::error::{Error, Result};
use crate::groups::{Commutativity, FiniteGroup};
use crate::lie::LieAlgebra;
use crate::linalg::{vector, Scalar, Subspace, Vector};

/// A grading `L = ⊕ L_g`, with each basis vector homogeneous of degree `degrees[i]`.
#[derive(Clone, Debug)]
pub struct Grading {
    algebra: LieAlgebra,
    group: FiniteGroup,
    degrees: Vec<usize>,
}

/// A subspace together with its components `V ∩ L_g`, keyed by group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    total: Subspace,
    components: BTreeMap<usize, Subspace>,
}

impl GradedSubspace {
    pub fn total(&self) -> &Subspace {
        &self.total
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.total.is_zero()
    }

    /// Nonzero components by group element.
    pub fn components(&self) -> &BTreeMap<usize, Subspace> {
        &self.components
    }

    pub fn component(&self, g: usize) -> Option<&Subspace> {
        self.components.get(&g)
    }

    pub fn degrees(&self) -> BTreeSet<usize> {
        self.components.keys().copied().collect()
    }

    /// Concatenated component bases in group-element order, each vector with its degree.
    pub fn homogeneous_basis(&self) -> Vec<(usize, Vector)> {
        self.components
            .iter()
            .flat_map(|(&g, s)| s.basis().iter().map(move |v| (g, v.clone())))
            .collect()
    }
}

/// Outcome of [`Grading::is_graded_simple`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedSimplicity {
    pub simple: bool,
    pub reason: String,
}

impl Grading {
    /// Checks `[b_i, b_j] ∈ L_{deg i · deg j}` on every basis pair.
    pub fn new(algebra: LieAlgebra, group: FiniteGroup, degrees: Vec<usize>) -> Result<Self> {
        if degrees.len() != algebra.dim() {
            return Err(Error::Precondition(format!(
                "{} basis vectors but {} degrees",
                algebra.dim(),
                degrees.len()
            )));
        }
        if let Some(&bad) = degrees.iter().find(|&&g| g >= group.order()) {
            return Err(Error::Precondition(format!("degree index {bad} is not a group element")));
        }
        let n = algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let expected = group.mul(degrees[i], degrees[j]);
                if let Some((k, _)) = algebra.basis_bracket_sparse(i, j).iter().find(|(k, _)| degrees[*k] != expected) {
                    return Err(Error::GradingViolation {
                        left: algebra.name(i).to_string(),
                        right: algebra.name(j).to_string(),
                        stray: algebra.name(*k).to_string(),
                        stray_degree: group.name(degrees[*k]).to_string(),
                        expected_degree: group.name(expected).to_string(),
                    });
                }
            }
        }
        Ok(Grading {
            algebra,
            group,
            degrees,
        })
    }

    /// Degrees given by basis name and element name. Every basis vector needs a degree.
    pub fn from_names(algebra: LieAlgebra, group: FiniteGroup, degrees: &BTreeMap<String, String>) -> Result<Self> {
        for b in degrees.keys() {
            if algebra.index_of(b).is_none() {
                return Err(Error::Precondition(format!("degree given for unknown basis vector {b:?}")));
            }
        }
        let mut out = Vec::with_capacity(algebra.dim());
        for name in algebra.names() {
            let el = degrees
                .get(name)
                .ok_or_else(|| Error::Precondition(format!("basis vector {name:?} has no degree")))?;
            let g = group
                .index_of(el)
                .ok_or_else(|| Error::Precondition(format!("{el:?} is not an element of {group}")))?;
            out.push(g);
        }
        Grading::new(algebra, group, out)
    }

    /// Every basis vector in the identity component.
    pub fn trivial(algebra: LieAlgebra, group: FiniteGroup) -> Self {
        let degrees = vec![group.identity(); algebra.dim()];
        Grading {
            algebra,
            group,
            degrees,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `{g : L_g ≠ 0}`.
    pub fn support(&self) -> BTreeSet<usize> {
        self.degrees.iter().copied().collect()
    }

    pub fn support_names(&self) -> Vec<String> {
        self.support().iter().map(|&g| self.group.name(g).to_string()).collect()
    }

    /// Subgroup generated by the support.
    pub fn support_subgroup(&self) -> Result<BTreeSet<usize>> {
        let s: Vec<usize> = self.support().into_iter().collect();
        self.group.subgroup_generated(&s)
    }

    pub fn support_commutativity(&self) -> Result<Commutativity> {
        let s: Vec<usize> = self.support().into_iter().collect();
        self.group.is_commutative_subset(&s)
    }

    pub fn fiber_indices(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == g).collect()
    }

    /// `L_g`, a coordinate subspace.
    pub fn fiber(&self, g: usize) -> Subspace {
        Subspace::coordinate(self.dim(), self.fiber_indices(g))
    }

    /// Component of `v` in `L_g`.
    pub fn project(&self, v: &[Scalar], g: usize) -> Vector {
        v.iter()
            .zip(&self.degrees)
            .map(|(c, &d)| if d == g { c.clone() } else { Scalar::zero() })
            .collect()
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn degree_of(&self, v: &[Scalar]) -> Option<usize> {
        let mut deg = None;
        for (c, &d) in v.iter().zip(&self.degrees) {
            if c.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self, v: &[Scalar]) -> bool {
        vector::is_zero(v) || self.degree_of(v).is_some()
    }

    fn check_space(&self, v: &Subspace) -> Result<()> {
        if v.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.ambient(),
            });
        }
        Ok(())
    }

    /// Decomposition `V = ⊕ (V ∩ L_g)` if `V` is graded, found by projecting onto fibers.
    pub fn graded_decomposition(&self, v: &Subspace) -> Result<Option<GradedSubspace>> {
        self.check_space(v)?;
        let mut components = BTreeMap::new();
        for g in self.support() {
            let proj: Vec<Vector> = v.basis().iter().map(|b| self.project(b, g)).collect();
            let p = Subspace::span(self.dim(), proj)?;
            if !v.contains_subspace(&p)? {
                return Ok(None);
            }
            if !p.is_zero() {
                components.insert(g, p);
            }
        }
        Ok(Some(GradedSubspace {
            total: v.clone(),
            components,
        }))
    }

    pub fn is_graded_subspace(&self, v: &Subspace) -> Result<bool> {
        Ok(self.graded_decomposition(v)?.is_some())
    }

    /// Decomposition of a subspace known to be graded; failure is an invariant violation.
    pub fn expect_graded(&self, v: &Subspace, what: &str) -> Result<GradedSubspace> {
        self.graded_decomposition(v)?
            .ok_or_else(|| Error::InvariantViolation(format!("{what} is not a graded subspace")))
    }

    /// Left-normed `[L_{g1}, …, L_{gm}]`.
    pub fn chain_product(&self, degrees: &[usize]) -> Result<Subspace> {
        let (first, rest) = degrees
            .split_first()
            .ok_or_else(|| Error::Precondition("chain product needs at least one degree".into()))?;
        let mut acc = self.fiber(*first);
        for &g in rest {
            if acc.is_zero() {
                break;
            }
            acc = self.algebra.product_subspace(&acc, &self.fiber(g))?;
        }
        Ok(acc)
    }

    /// Ideal generated by homogeneous vectors, with its graded decomposition.
    pub fn graded_ideal_generated(&self, seed: &[Vector]) -> Result<GradedSubspace> {
        for v in seed {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
            if !self.is_homogeneous(v) {
                return Err(Error::Precondition("seed vector is not homogeneous".into()));
            }
        }
        let ideal = self.algebra.ideal_generated(seed)?;
        self.expect_graded(&ideal, "ideal generated by homogeneous vectors")
    }

    /// `Id(L_g)`.
    pub fn fiber_ideal(&self, g: usize) -> Result<GradedSubspace> {
        self.graded_ideal_generated(self.fiber(g).basis())
    }

    /// Graded simplicity, by the chain of necessary conditions and then the block count.
    pub fn is_graded_simple(&self) -> Result<GradedSimplicity> {
        let no = |reason: &str| {
            Ok(GradedSimplicity {
                simple: false,
                reason: reason.to_string(),
            })
        };
        let full = self.algebra.full();
        if self.algebra.product_subspace(&full, &full)?.is_zero() {
            return no("[L,L]=0");
        }
        if !self.algebra.radical()?.is_zero() {
            return no("radical is nonzero");
        }
        if let Commutativity::Witness(g, h) = self.support_commutativity()? {
            return Ok(GradedSimplicity {
                simple: false,
                reason: format!(
                    "support is not commutative: {} and {} do not commute",
                    self.group.name(g),
                    self.group.name(h)
                ),
            });
        }
        let (_, blocks) = crate::structure::graded_blocks(self)?;
        if blocks.len() == 1 {
            Ok(GradedSimplicity {
                simple: true,
                reason: "semisimple with a single graded block".into(),
            })
        } else {
            Ok(GradedSimplicity {
                simple: false,
                reason: format!("{} graded blocks", blocks.len()),
            })
        }
    }

    /// The grading restricted to a graded subalgebra, on its homogeneous basis.
    /// Also returns those basis vectors in the coordinates of `L`.
    pub fn restrict(&self, sub: &GradedSubspace) -> Result<(Grading, Vec<Vector>)> {
        let hb = sub.homogeneous_basis();
        let rows: Vec<Vector> = hb.iter().map(|(_, v)| v.clone()).collect();
        let algebra = self.algebra.subalgebra_on_basis(&rows)?;
        let degrees = hb.iter().map(|(g, _)| *g).collect();
        let grading = Grading::new(algebra, self.group.clone(), degrees)?;
        Ok((grading, rows))
    }

    /// The same grading on a different target group through an injective map of elements.
    pub fn with_group(&self, group: FiniteGroup, map: &[usize]) -> Result<Grading> {
        let degrees = self.degrees.iter().map(|&g| map[g]).collect();
        Grading::new(self.algebra.clone(), group, degrees)
    }
}

#[cfg(test)]
mod tests;
