use std::collections::BTreeMap;

use serde::Serialize;

use super::{GradedSubspace, Grading};
use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// Every nonzero chain product up to the requested length had pairwise-commuting degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    pub max_length: usize,
    /// number of degree tuples with nonzero chain product, by length
    pub nonzero_chains: BTreeMap<usize, usize>,
    /// tuples visited, including pruned prefixes
    pub tuples_visited: usize,
}

impl ChainCertificate {
    pub fn total_nonzero(&self) -> usize {
        self.nonzero_chains.values().sum()
    }
}

#[derive(Clone, Debug)]
pub struct FiberIdealOutcome {
    pub ideal_g: GradedSubspace,
    pub ideal_h: GradedSubspace,
    /// whether `[Id(L_g), Id(L_h)] = 0`
    pub holds: bool,
}

impl Grading {
    /// Enumerates degree tuples over the support up to length `max_length`,
    /// pruning a prefix as soon as its chain product vanishes.
    ///
    /// A nonzero chain with two non-commuting degrees is reported as an
    /// invariant violation with the offending tuple.
    pub fn check_chain_commutativity(&self, max_length: usize) -> Result<ChainCertificate> {
        if max_length < 2 {
            return Err(Error::Precondition("chain length bound must be at least 2".into()));
        }
        let support: Vec<usize> = self.support().into_iter().collect();
        let fibers: Vec<Subspace> = support.iter().map(|&g| self.fiber(g)).collect();
        let mut cert = ChainCertificate {
            max_length,
            nonzero_chains: (1..=max_length).map(|m| (m, 0)).collect(),
            tuples_visited: 0,
        };
        let mut tuple = Vec::with_capacity(max_length);
        for (k, f) in fibers.iter().enumerate() {
            tuple.push(support[k]);
            self.extend_chain(&support, &fibers, f.clone(), &mut tuple, &mut cert)?;
            tuple.pop();
        }
        Ok(cert)
    }

    fn extend_chain(
        &self,
        support: &[usize],
        fibers: &[Subspace],
        product: Subspace,
        tuple: &mut Vec<usize>,
        cert: &mut ChainCertificate,
    ) -> Result<()> {
        cert.tuples_visited += 1;
        if product.is_zero() {
            return Ok(());
        }
        *cert.nonzero_chains.get_mut(&tuple.len()).unwrap() += 1;
        let last = *tuple.last().unwrap();
        if let Some(&bad) = tuple[..tuple.len() - 1].iter().find(|&&g| !self.group().commutes(g, last)) {
            let names: Vec<&str> = tuple.iter().map(|&g| self.group().name(g)).collect();
            return Err(Error::InvariantViolation(format!(
                "nonzero chain product [L_{}] has non-commuting degrees {} and {}",
                names.join(", L_"),
                self.group().name(bad),
                self.group().name(last)
            )));
        }
        if tuple.len() == cert.max_length {
            return Ok(());
        }
        for (k, f) in fibers.iter().enumerate() {
            let next = self.algebra().product_subspace(&product, f)?;
            tuple.push(support[k]);
            self.extend_chain(support, fibers, next, tuple, cert)?;
            tuple.pop();
        }
        Ok(())
    }

    /// `[Id(L_g), Id(L_h)]` for a non-commuting pair in the support.
    pub fn check_fiber_ideals(&self, g: usize, h: usize) -> Result<FiberIdealOutcome> {
        let group = self.group();
        if g >= group.order() || h >= group.order() {
            return Err(Error::Precondition("element index out of range".into()));
        }
        if group.commutes(g, h) {
            return Err(Error::Precondition(format!(
                "{} and {} commute",
                group.name(g),
                group.name(h)
            )));
        }
        let support = self.support();
        for x in [g, h] {
            if !support.contains(&x) {
                return Err(Error::Precondition(format!("{} is not in the support", group.name(x))));
            }
        }
        let ideal_g = self.fiber_ideal(g)?;
        let ideal_h = self.fiber_ideal(h)?;
        let holds = self.algebra().product_subspace(ideal_g.total(), ideal_h.total())?.is_zero();
        Ok(FiberIdealOutcome { ideal_g, ideal_h, holds })
    }

    /// [`check_fiber_ideals`](Self::check_fiber_ideals) on every non-commuting pair of the support.
    pub fn check_fiber_ideals_all(&self) -> Result<Vec<(usize, usize, FiberIdealOutcome)>> {
        let support: Vec<usize> = self.support().into_iter().collect();
        let mut out = Vec::new();
        for (a, &g) in support.iter().enumerate() {
            for &h in &support[a + 1..] {
                if !self.group().commutes(g, h) {
                    out.push((g, h, self.check_fiber_ideals(g, h)?));
                }
            }
        }
        Ok(out)
    }
}
