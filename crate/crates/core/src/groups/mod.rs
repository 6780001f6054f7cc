//! Finite groups given by Cayley tables.

mod dual;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

pub use dual::{Character, DualGroup};

use crate::error::{Error, Result};

/// Default cap on group order.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// A validated finite group. Elements are indices `0..order()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

/// Constructor recipes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    Product(Box<GroupKind>, Box<GroupKind>),
    Dihedral(usize),
    Symmetric(usize),
    Table {
        elements: Vec<String>,
        table: Vec<Vec<String>>,
    },
}

/// Result of a pairwise commutation test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Commutativity {
    Commutative,
    /// A pair `(g, h)` with `gh ≠ hg`.
    Witness(usize, usize),
}

impl Commutativity {
    pub fn is_commutative(&self) -> bool {
        matches!(self, Commutativity::Commutative)
    }
}

impl GroupKind {
    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        let g = match self {
            GroupKind::Cyclic(n) => FiniteGroup::cyclic_unbounded(*n)?,
            GroupKind::Dihedral(n) => FiniteGroup::dihedral_unbounded(*n)?,
            GroupKind::Symmetric(n) => FiniteGroup::symmetric(*n)?,
            GroupKind::Product(a, b) => {
                let a = a.build(max_order)?;
                let b = b.build(max_order)?;
                if a.order() * b.order() > max_order {
                    return Err(Error::GroupTooLarge {
                        order: a.order() * b.order(),
                        bound: max_order,
                    });
                }
                FiniteGroup::product(&a, &b)?
            }
            GroupKind::Table { elements, table } => FiniteGroup::from_named_table(elements.clone(), table)?,
        };
        if g.order() > max_order {
            return Err(Error::GroupTooLarge {
                order: g.order(),
                bound: max_order,
            });
        }
        Ok(g)
    }

    /// Parses shorthand names such as `Z4`, `C3`, `S3`, `D4` (dihedral of the square)
    /// and products like `Z2xZ2`.
    pub fn parse_name(name: &str) -> Result<GroupKind> {
        let parts: Vec<&str> = name.split(['x', '×']).map(str::trim).collect();
        if parts.len() > 1 {
            let mut kinds = parts.iter().map(|p| GroupKind::parse_name(p));
            let mut acc = kinds.next().unwrap()?;
            for k in kinds {
                acc = GroupKind::Product(Box::new(acc), Box::new(k?));
            }
            return Ok(acc);
        }
        let bad = || Error::Parse(format!("unknown group name {name:?}"));
        let (head, num) = name.split_at(name.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let n: usize = num.parse().map_err(|_| bad())?;
        match head {
            "Z" | "C" => Ok(GroupKind::Cyclic(n)),
            "S" => Ok(GroupKind::Symmetric(n)),
            "D" => Ok(GroupKind::Dihedral(n)),
            _ => Err(bad()),
        }
    }
}

impl FiniteGroup {
    /// Validates an index table: Latin square, two-sided identity, associativity, inverses.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty element list".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup(format!("table must be {n}x{n}")));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidGroup("duplicate element names".into()));
        }
        for (i, row) in table.iter().enumerate() {
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!("row {} is not a permutation (not a Latin square)", names[i])));
                }
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if std::mem::replace(&mut seen[row[j]], true) {
                    return Err(Error::InvalidGroup(format!("column {} is not a permutation (not a Latin square)", names[j])));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{} has no inverse", names[a])))?;
        }
        Ok(FiniteGroup {
            names,
            table,
            identity,
            inverses,
        })
    }

    pub fn from_named_table(elements: Vec<String>, table: &[Vec<String>]) -> Result<Self> {
        let index: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let idx = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| {
                        index
                            .get(s.as_str())
                            .copied()
                            .ok_or_else(|| Error::InvalidGroup(format!("unknown element {s:?} in table")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(elements, idx)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        GroupKind::Cyclic(n).build(DEFAULT_MAX_ORDER)
    }

    fn cyclic_unbounded(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        if n > 4096 {
            return Err(Error::GroupTooLarge { order: n, bound: 4096 });
        }
        let names = (0..n).map(|k| format!("r{k}")).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(names, table)
    }

    /// Symmetries of the regular n-gon, order 2n: rotations `r0..`, reflections `s0..`.
    pub fn dihedral(n: usize) -> Result<Self> {
        GroupKind::Dihedral(n).build(DEFAULT_MAX_ORDER)
    }

    fn dihedral_unbounded(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("dihedral group needs n ≥ 1".into()));
        }
        if n > 2048 {
            return Err(Error::GroupTooLarge { order: 2 * n, bound: 4096 });
        }
        let mut names: Vec<String> = (0..n).map(|k| format!("r{k}")).collect();
        names.extend((0..n).map(|k| format!("s{k}")));
        // r_a r_b = r_{a+b}, r_a s_b = s_{a+b}, s_a r_b = s_{a-b}, s_a s_b = r_{a-b}
        let idx = |refl: bool, k: usize| if refl { n + k } else { k };
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for x in 0..2 * n {
            for y in 0..2 * n {
                let (xs, a) = (x >= n, x % n);
                let (ys, b) = (y >= n, y % n);
                let k = if xs { (a + n - b) % n } else { (a + b) % n };
                table[x][y] = idx(xs ^ ys, k);
            }
        }
        Self::from_table(names, table)
    }

    /// The symmetric group on `{1..n}`, `n ≤ 4`, with cycle-notation names.
    /// Permutations compose right to left: `(gh)(x) = g(h(x))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 4 {
            return Err(Error::InvalidGroup(format!("symmetric({n}) unsupported; need 1 ≤ n ≤ 4")));
        }
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut perms);
        perms.sort();
        let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let names = perms.iter().map(|p| cycle_name(p)).collect();
        let table = perms
            .iter()
            .map(|g| {
                perms
                    .iter()
                    .map(|h| index[&h.iter().map(|&x| g[x]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        Self::from_table(names, table)
    }

    /// Direct product with element names `(a,b)`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let (na, nb) = (a.order(), b.order());
        let mut names = Vec::with_capacity(na * nb);
        for x in 0..na {
            for y in 0..nb {
                names.push(format!("({},{})", a.names[x], b.names[y]));
            }
        }
        let mut table = vec![vec![0; na * nb]; na * nb];
        for i in 0..na * nb {
            for j in 0..na * nb {
                let (x1, y1) = (i / nb, i % nb);
                let (x2, y2) = (j / nb, j % nb);
                table[i][j] = a.mul(x1, x2) * nb + b.mul(y1, y2);
            }
        }
        Self::from_table(names, table)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        self.is_commutative_subset(&(0..self.order()).collect::<Vec<_>>())
            .map(|c| c.is_commutative())
            .unwrap_or(false)
    }

    fn check_elements(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&x| x >= self.order()) {
            Some(x) => Err(Error::Precondition(format!(
                "element index {x} does not belong to this group of order {}",
                self.order()
            ))),
            None => Ok(()),
        }
    }

    /// Closure of `s` under products and inverses.
    pub fn subgroup_generated(&self, s: &[usize]) -> Result<BTreeSet<usize>> {
        if s.is_empty() {
            return Err(Error::Precondition("subgroup_generated needs a nonempty set".into()));
        }
        self.check_elements(s)?;
        let mut set: BTreeSet<usize> = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in s {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if set.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        Ok(set)
    }

    pub fn is_commutative_subset(&self, s: &[usize]) -> Result<Commutativity> {
        self.check_elements(s)?;
        for (i, &g) in s.iter().enumerate() {
            for &h in &s[i + 1..] {
                if !self.commutes(g, h) {
                    return Ok(Commutativity::Witness(g, h));
                }
            }
        }
        Ok(Commutativity::Commutative)
    }

    /// The subgroup on `elements` (must be closed) as a group in its own right,
    /// together with the embedding of its indices into `self`.
    pub fn subgroup(&self, elements: &BTreeSet<usize>) -> Result<(FiniteGroup, Vec<usize>)> {
        let emb: Vec<usize> = elements.iter().copied().collect();
        self.check_elements(&emb)?;
        let pos: HashMap<usize, usize> = emb.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut table = vec![vec![0; emb.len()]; emb.len()];
        for (i, &a) in emb.iter().enumerate() {
            for (j, &b) in emb.iter().enumerate() {
                table[i][j] = *pos
                    .get(&self.mul(a, b))
                    .ok_or_else(|| Error::Precondition("element set is not closed under products".into()))?;
            }
        }
        let names = emb.iter().map(|&x| self.names[x].clone()).collect();
        Ok((FiniteGroup::from_table(names, table)?, emb))
    }

    pub fn dual_group(&self) -> Result<DualGroup> {
        DualGroup::new(self)
    }

    pub fn format_set(&self, s: impl IntoIterator<Item = usize>) -> String {
        let names: Vec<&str> = s.into_iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group of order {} {}", self.order(), self.format_set(0..self.order()))
    }
}

fn permutations(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, out);
        p.swap(k, i);
    }
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        s.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            s.push_str(&(x + 1).to_string());
            x = p[x];
        }
        s.push(')');
    }
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}
