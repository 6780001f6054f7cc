//! Radical, graded-simple blocks and homogeneous Levi subalgebras of graded algebras.

mod conjugacy;
mod levi;
mod report;

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use conjugacy::{exp_ad, levi_conjugator, LeviConjugacy};
pub use levi::{homogeneous_levi, homogeneous_levi_with, LeviPath, LeviResult, LeviStrategy};
pub use report::{structure_report, BlockDoc, ComponentDoc, ReportDoc, StructureReport, REPORT_CHECKS};

use crate::error::{Error, Result};
use crate::grading::{GradedSubspace, Grading};
use crate::lie::SplitType;
use crate::linalg::{BasisCoords, Subspace};

/// The radical with its graded decomposition. A radical that is not graded is
/// reported as an invariant violation.
pub fn radical_gradedness(gr: &Grading) -> Result<GradedSubspace> {
    let r = gr.algebra().radical()?;
    gr.expect_graded(&r, "radical")
}

/// How the simple summands of a block were shown to be isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IsomorphismCertificate {
    /// one summand
    Single,
    /// every summand has the same recognized split type
    Strong { label: SplitType },
    /// equal dimension and equal Killing-form rank; no type label available
    Weak { dim: usize, killing_rank: usize },
}

/// A graded-simple ideal `H = B_1 ⊕ … ⊕ B_n` of a semisimple graded algebra.
#[derive(Clone, Debug)]
pub struct GradedSimpleBlock {
    pub space: GradedSubspace,
    pub support: BTreeSet<usize>,
    pub simple_ideals: Vec<Subspace>,
    pub types: Vec<SplitType>,
    pub isomorphism: IsomorphismCertificate,
}

impl GradedSimpleBlock {
    pub fn summands(&self) -> usize {
        self.simple_ideals.len()
    }
}

/// Simple ideals of a semisimple graded algebra and their grouping into graded blocks.
///
/// A block grows from one simple ideal: project the current sum onto every
/// fiber and absorb each simple ideal that some projection touches, until
/// nothing changes. Blocks are listed by their first simple ideal.
pub fn graded_blocks(gr: &Grading) -> Result<(Vec<Subspace>, Vec<Vec<usize>>)> {
    let alg = gr.algebra();
    let ideals = alg.simple_decomposition()?;
    let n = alg.dim();
    let mut owner = Vec::new();
    let mut basis = Vec::new();
    for (i, s) in ideals.iter().enumerate() {
        for v in s.basis() {
            owner.push(i);
            basis.push(v.clone());
        }
    }
    let coords = BasisCoords::new(n, basis)?;
    let support = gr.support();

    let closure = |start: usize| -> Result<BTreeSet<usize>> {
        let mut members = BTreeSet::from([start]);
        loop {
            let sum = Subspace::sum_all(n, members.iter().map(|&i| &ideals[i]))?;
            let mut next = members.clone();
            for v in sum.basis() {
                for &g in &support {
                    let p = gr.project(v, g);
                    let c = coords.coords_unchecked(&p);
                    for (k, x) in c.iter().enumerate() {
                        if !x.is_zero() {
                            next.insert(owner[k]);
                        }
                    }
                }
            }
            if next == members {
                return Ok(members);
            }
            members = next;
        }
    };

    let mut assigned = vec![None; ideals.len()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..ideals.len() {
        if assigned[i].is_some() {
            continue;
        }
        let members = closure(i)?;
        for &j in &members {
            if assigned[j].is_some() {
                return Err(Error::InvariantViolation("graded closures overlap without coinciding".into()));
            }
            assigned[j] = Some(blocks.len());
        }
        blocks.push(members.into_iter().collect());
    }
    for block in &blocks {
        for &j in block {
            if closure(j)?.into_iter().collect::<Vec<_>>() != *block {
                return Err(Error::InvariantViolation("graded closure depends on the starting ideal".into()));
            }
        }
    }
    Ok((ideals, blocks))
}

/// Decomposition of a semisimple graded algebra into graded-simple ideals.
pub fn graded_simple_decomposition(gr: &Grading) -> Result<Vec<GradedSimpleBlock>> {
    let alg = gr.algebra();
    if !alg.is_semisimple()? {
        return Err(Error::Precondition("graded-simple decomposition needs a semisimple algebra".into()));
    }
    let (ideals, blocks) = graded_blocks(gr)?;
    let n = alg.dim();
    let mut out = Vec::with_capacity(blocks.len());
    for block in blocks {
        let simple: Vec<Subspace> = block.iter().map(|&i| ideals[i].clone()).collect();
        let total = Subspace::sum_all(n, &simple)?;
        let space = gr.expect_graded(&total, "graded block")?;
        let support = space.degrees();
        let s: Vec<usize> = support.iter().copied().collect();
        if !gr.group().is_commutative_subset(&s)?.is_commutative() {
            return Err(Error::InvariantViolation(format!(
                "graded block has non-commutative support {}",
                gr.group().format_set(s)
            )));
        }
        let mut types = Vec::with_capacity(simple.len());
        let mut ranks = Vec::with_capacity(simple.len());
        for b in &simple {
            let sub = alg.restrict(b)?;
            types.push(sub.classify_split_type()?);
            ranks.push(sub.killing_form().rank());
        }
        let isomorphism = if simple.len() == 1 {
            IsomorphismCertificate::Single
        } else if types.iter().all(|t| t.is_recognized() && *t == types[0]) {
            IsomorphismCertificate::Strong {
                label: types[0].clone(),
            }
        } else if simple.iter().all(|b| b.dim() == simple[0].dim()) && ranks.iter().all(|&r| r == ranks[0]) {
            IsomorphismCertificate::Weak {
                dim: simple[0].dim(),
                killing_rank: ranks[0],
            }
        } else {
            return Err(Error::InvariantViolation(
                "simple summands of a graded-simple block are not isomorphic".into(),
            ));
        };
        out.push(GradedSimpleBlock {
            space,
            support,
            simple_ideals: simple,
            types,
            isomorphism,
        });
    }
    Ok(out)
}
