use std::collections::BTreeSet;

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::linalg::Scalar;

/// A linear character of a finite abelian group with values in the `exponent`-th roots of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    name: String,
    exponent: u64,
    /// χ(g) = ζ_exponent^powers[g]
    powers: Vec<u64>,
}

impl Character {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn power(&self, g: usize) -> u64 {
        self.powers[g]
    }

    pub fn powers(&self) -> &[u64] {
        &self.powers
    }

    pub fn value(&self, g: usize) -> Scalar {
        Scalar::root_of_unity(self.exponent, self.powers[g])
    }

    pub fn is_trivial(&self) -> bool {
        self.powers.iter().all(|&p| p == 0)
    }
}

/// All characters of a finite abelian group, built from an explicit
/// invariant-factor decomposition `G ≅ Z_{d1} × … × Z_{dk}`.
#[derive(Clone, Debug)]
pub struct DualGroup {
    exponent: u64,
    /// (generator element, its order)
    factors: Vec<(usize, usize)>,
    /// coordinates of every group element with respect to `factors`
    coordinates: Vec<Vec<usize>>,
    characters: Vec<Character>,
}

impl DualGroup {
    pub fn new(group: &FiniteGroup) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::Precondition("dual group defined for abelian G only".into()));
        }
        let factors = invariant_factors(group)?;
        let n = group.order();
        let exponent = group.exponent() as u64;

        let mut coordinates = vec![Vec::new(); n];
        let mut tuple = vec![0usize; factors.len()];
        loop {
            let mut x = group.identity();
            for (&(gen, _), &c) in factors.iter().zip(&tuple) {
                for _ in 0..c {
                    x = group.mul(x, gen);
                }
            }
            if !coordinates[x].is_empty() || (factors.is_empty() && x != group.identity()) {
                return Err(Error::InvariantViolation("invariant-factor coordinates are not unique".into()));
            }
            coordinates[x] = tuple.clone();
            if !advance(&mut tuple, factors.iter().map(|f| f.1)) {
                break;
            }
        }

        let mut characters = Vec::with_capacity(n);
        let mut a = vec![0usize; factors.len()];
        loop {
            let powers = coordinates
                .iter()
                .map(|c| {
                    a.iter()
                        .zip(c)
                        .zip(&factors)
                        .map(|((&ai, &ci), &(_, d))| (ai * ci) as u64 * (exponent / d as u64))
                        .sum::<u64>()
                        % exponent
                })
                .collect();
            let name = if a.is_empty() {
                "chi".to_string()
            } else {
                let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
                format!("chi_{}", parts.join("_"))
            };
            characters.push(Character {
                name,
                exponent,
                powers,
            });
            if !advance(&mut a, factors.iter().map(|f| f.1)) {
                break;
            }
        }
        Ok(DualGroup {
            exponent,
            factors,
            coordinates,
            characters,
        })
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Generators and orders realizing the invariant-factor decomposition.
    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    pub fn coordinates(&self, g: usize) -> &[usize] {
        &self.coordinates[g]
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.characters.iter().position(|c| c.name == name)
    }

    pub fn trivial(&self) -> usize {
        0
    }

    /// Index of the pointwise product χ_i χ_j.
    pub fn product(&self, i: usize, j: usize) -> usize {
        let p: Vec<u64> = self.characters[i]
            .powers
            .iter()
            .zip(&self.characters[j].powers)
            .map(|(a, b)| (a + b) % self.exponent)
            .collect();
        self.characters
            .iter()
            .position(|c| c.powers == p)
            .expect("dual group is closed under products")
    }

    /// The coordinate characters, which generate the dual group.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.factors.len())
            .map(|k| {
                let mut a = vec![0usize; self.factors.len()];
                a[k] = 1;
                // characters are enumerated in mixed-radix order with the last index fastest
                let mut idx = 0;
                for (ai, &(_, d)) in a.iter().zip(&self.factors) {
                    idx = idx * d + ai;
                }
                idx
            })
            .collect()
    }

    pub fn character_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while !self.characters[cur].is_trivial() {
            cur = self.product(cur, i);
            k += 1;
        }
        k
    }
}

/// Mixed-radix increment with the last digit fastest; false on wrap-around.
fn advance(t: &mut [usize], radices: impl DoubleEndedIterator<Item = usize> + Clone) -> bool {
    let radices: Vec<usize> = radices.collect();
    for k in (0..t.len()).rev() {
        t[k] += 1;
        if t[k] < radices[k] {
            return true;
        }
        t[k] = 0;
    }
    false
}

/// Greedy decomposition: repeatedly take the element of largest order modulo the
/// current subgroup and lift it to an element of the same order.
fn invariant_factors(group: &FiniteGroup) -> Result<Vec<(usize, usize)>> {
    let n = group.order();
    let mut h: BTreeSet<usize> = BTreeSet::from([group.identity()]);
    let mut factors = Vec::new();
    while h.len() < n {
        let order_mod = |x: usize| {
            let mut y = x;
            let mut k = 1;
            while !h.contains(&y) {
                y = group.mul(y, x);
                k += 1;
            }
            k
        };
        let (x, d) = (0..n)
            .map(|x| (x, order_mod(x)))
            .fold((group.identity(), 1), |best, cur| if cur.1 > best.1 { cur } else { best });
        let lift = h
            .iter()
            .map(|&k| group.mul(x, k))
            .find(|&y| group.element_order(y) == d)
            .ok_or_else(|| Error::InvariantViolation("no lift of maximal order in invariant-factor search".into()))?;
        factors.push((lift, d));
        let mut gens: Vec<usize> = factors.iter().map(|f| f.0).collect();
        gens.push(group.identity());
        h = group.subgroup_generated(&gens)?;
    }
    Ok(factors)
}
