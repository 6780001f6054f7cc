use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{graded_simple_decomposition, homogeneous_levi, radical_gradedness, GradedSimpleBlock, IsomorphismCertificate, LeviPath};
use crate::error::{Error, Result};
use crate::grading::{GradedSubspace, Grading};
use crate::lie::SplitType;
use crate::linalg::{vector, Scalar, Subspace, Vector};

/// Radical, homogeneous Levi subalgebra and graded-simple blocks of a graded algebra,
/// all in the coordinates of the input basis.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub radical: GradedSubspace,
    pub levi: GradedSubspace,
    pub levi_path: LeviPath,
    pub levi_stages: usize,
    pub blocks: Vec<GradedSimpleBlock>,
    pub support_subgroup: BTreeSet<usize>,
}

pub fn structure_report(gr: &Grading) -> Result<StructureReport> {
    let radical = radical_gradedness(gr)?;
    let levi = homogeneous_levi(gr)?;
    let n = gr.dim();
    let mut blocks = Vec::new();
    if !levi.levi.is_zero() {
        let (sub, rows) = gr.restrict(&levi.levi)?;
        let to_l = |s: &Subspace| -> Result<Subspace> {
            Subspace::span(n, s.basis().iter().map(|v| vector::combine(v, &rows, n)))
        };
        for b in graded_simple_decomposition(&sub)? {
            let total = to_l(b.space.total())?;
            blocks.push(GradedSimpleBlock {
                space: gr.expect_graded(&total, "graded block")?,
                support: b.support,
                simple_ideals: b.simple_ideals.iter().map(to_l).collect::<Result<_>>()?,
                types: b.types,
                isomorphism: b.isomorphism,
            });
        }
    }
    Ok(StructureReport {
        radical,
        levi: levi.levi,
        levi_path: levi.path,
        levi_stages: levi.stages,
        blocks,
        support_subgroup: gr.support_subgroup()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub degree: String,
    pub basis: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDoc {
    pub dim: usize,
    pub components: Vec<ComponentDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviDoc {
    pub path: LeviPath,
    pub stages: usize,
    pub dim: usize,
    pub components: Vec<ComponentDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDoc {
    pub support: Vec<String>,
    pub commutative: bool,
    pub summands: usize,
    pub types: Vec<SplitType>,
    pub isomorphism: IsomorphismCertificate,
    pub dim: usize,
    pub components: Vec<ComponentDoc>,
    pub simple_ideals: Vec<Vec<Vector>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatesDoc {
    pub radical_graded: bool,
    pub levi_homogeneous: bool,
    pub levi_closed: bool,
    pub levi_meets_radical_trivially: bool,
    pub levi_plus_radical_is_whole: bool,
}

/// Serialized form of a [`StructureReport`]; every claim can be re-checked from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub basis: Vec<String>,
    pub support: Vec<String>,
    pub support_subgroup: Vec<String>,
    pub radical: GradedDoc,
    pub levi: LeviDoc,
    pub blocks: Vec<BlockDoc>,
    pub certificates: CertificatesDoc,
}

fn components_doc(gr: &Grading, s: &GradedSubspace) -> Vec<ComponentDoc> {
    s.components()
        .iter()
        .map(|(&g, c)| ComponentDoc {
            degree: gr.group().name(g).to_string(),
            basis: c.basis().to_vec(),
        })
        .collect()
}

fn names(gr: &Grading, s: &BTreeSet<usize>) -> Vec<String> {
    s.iter().map(|&g| gr.group().name(g).to_string()).collect()
}

impl StructureReport {
    pub fn to_doc(&self, gr: &Grading) -> ReportDoc {
        ReportDoc {
            basis: gr.algebra().names().to_vec(),
            support: gr.support_names(),
            support_subgroup: names(gr, &self.support_subgroup),
            radical: GradedDoc {
                dim: self.radical.dim(),
                components: components_doc(gr, &self.radical),
            },
            levi: LeviDoc {
                path: self.levi_path,
                stages: self.levi_stages,
                dim: self.levi.dim(),
                components: components_doc(gr, &self.levi),
            },
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockDoc {
                    support: names(gr, &b.support),
                    commutative: true,
                    summands: b.summands(),
                    types: b.types.clone(),
                    isomorphism: b.isomorphism.clone(),
                    dim: b.space.dim(),
                    components: components_doc(gr, &b.space),
                    simple_ideals: b.simple_ideals.iter().map(|s| s.basis().to_vec()).collect(),
                })
                .collect(),
            certificates: CertificatesDoc {
                radical_graded: true,
                levi_homogeneous: true,
                levi_closed: true,
                levi_meets_radical_trivially: true,
                levi_plus_radical_is_whole: true,
            },
        }
    }
}

/// Names of the checks performed by [`ReportDoc::verify`].
pub const REPORT_CHECKS: [&str; 10] = [
    "component vectors are homogeneous of their stated degree",
    "radical is a solvable ideal",
    "radical equals the Killing-orthogonal of [L,L]",
    "Levi basis is closed under the bracket",
    "Levi meets the radical in 0 and has complementary dimension",
    "Levi subalgebra has nondegenerate Killing form",
    "blocks are ideals of the Levi subalgebra that sum to it",
    "distinct blocks commute",
    "block supports are the stated commutative sets",
    "simple summands span their block with equal dimensions",
];

impl ReportDoc {
    fn fail(msg: String) -> Error {
        Error::InvariantViolation(format!("report check failed: {msg}"))
    }

    fn decode(&self, gr: &Grading, comps: &[ComponentDoc], what: &str) -> Result<(Subspace, BTreeSet<usize>)> {
        let n = gr.dim();
        let mut all = Vec::new();
        let mut degrees = BTreeSet::new();
        for c in comps {
            let g = gr
                .group()
                .index_of(&c.degree)
                .ok_or_else(|| Self::fail(format!("{what}: unknown degree {:?}", c.degree)))?;
            for v in &c.basis {
                if v.len() != n {
                    return Err(Self::fail(format!("{what}: vector of length {} in dimension {n}", v.len())));
                }
                if gr.degree_of(v) != Some(g) {
                    return Err(Self::fail(format!("{what}: vector is not homogeneous of degree {}", c.degree)));
                }
                all.push(v.clone());
            }
            if !c.basis.is_empty() {
                degrees.insert(g);
            }
        }
        let s = Subspace::span(n, all.iter().cloned())?;
        if s.dim() != all.len() {
            return Err(Self::fail(format!("{what}: stated basis is linearly dependent")));
        }
        Ok((s, degrees))
    }

    /// Re-checks every claim against the grading, using only brackets and linear algebra.
    pub fn verify(&self, gr: &Grading) -> Result<Vec<&'static str>> {
        let alg = gr.algebra();
        let n = alg.dim();
        if self.basis != alg.names() {
            return Err(Self::fail("basis names differ from the algebra".into()));
        }
        let (r, _) = self.decode(gr, &self.radical.components, "radical")?;
        let (b, _) = self.decode(gr, &self.levi.components, "levi")?;
        let mut block_spaces = Vec::new();
        for (k, blk) in self.blocks.iter().enumerate() {
            block_spaces.push(self.decode(gr, &blk.components, &format!("block {k}"))?);
        }

        if !alg.is_ideal(&r)? || !alg.is_solvable_subalgebra(&r)? {
            return Err(Self::fail("radical is not a solvable ideal".into()));
        }
        let full = alg.full();
        let derived = alg.product_subspace(&full, &full)?;
        if alg.killing_orthogonal(&derived, &alg.killing_form())? != r {
            return Err(Self::fail("radical is not the Killing-orthogonal of [L,L]".into()));
        }

        if !alg.is_subalgebra(&b)? {
            return Err(Self::fail("Levi basis is not closed".into()));
        }
        if !b.intersection(&r)?.is_zero() || b.dim() + r.dim() != n {
            return Err(Self::fail("Levi subalgebra is not a complement of the radical".into()));
        }
        if !b.is_zero() {
            let kb = alg.restrict(&b)?.killing_form();
            if kb.determinant()? == Scalar::from(0) {
                return Err(Self::fail("Levi subalgebra is not semisimple".into()));
            }
        }

        let sum = Subspace::sum_all(n, block_spaces.iter().map(|x| &x.0))?;
        if sum != b || block_spaces.iter().map(|x| x.0.dim()).sum::<usize>() != b.dim() {
            return Err(Self::fail("blocks do not decompose the Levi subalgebra".into()));
        }
        for (h, _) in &block_spaces {
            if !h.contains_subspace(&alg.product_subspace(h, &b)?)? {
                return Err(Self::fail("block is not an ideal of the Levi subalgebra".into()));
            }
        }
        for i in 0..block_spaces.len() {
            for j in i + 1..block_spaces.len() {
                if !alg.product_subspace(&block_spaces[i].0, &block_spaces[j].0)?.is_zero() {
                    return Err(Self::fail(format!("blocks {i} and {j} do not commute")));
                }
            }
        }
        for (blk, (h, degrees)) in self.blocks.iter().zip(&block_spaces) {
            let stated: BTreeSet<usize> = blk.support.iter().filter_map(|s| gr.group().index_of(s)).collect();
            if stated != *degrees || stated.len() != blk.support.len() {
                return Err(Self::fail("block support differs from the degrees of its components".into()));
            }
            let s: Vec<usize> = stated.into_iter().collect();
            if !gr.group().is_commutative_subset(&s)?.is_commutative() {
                return Err(Self::fail("block support is not commutative".into()));
            }
            let simple: Vec<Subspace> = blk
                .simple_ideals
                .iter()
                .map(|vs| Subspace::span(n, vs.iter().cloned()))
                .collect::<Result<_>>()?;
            if simple.len() != blk.summands || Subspace::sum_all(n, &simple)? != *h {
                return Err(Self::fail("simple summands do not span their block".into()));
            }
            if simple.iter().map(Subspace::dim).sum::<usize>() != h.dim()
                || simple.iter().any(|s| s.dim() != simple[0].dim())
            {
                return Err(Self::fail("simple summands have unequal dimensions".into()));
            }
        }
        Ok(REPORT_CHECKS.to_vec())
    }
}

impl StructureReport {
    pub fn verify(&self, gr: &Grading) -> Result<Vec<&'static str>> {
        self.to_doc(gr).verify(gr)
    }
}
