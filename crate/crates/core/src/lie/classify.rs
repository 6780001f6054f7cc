use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::decompose::eigenspaces;
use super::LieAlgebra;
use crate::error::Result;
use crate::linalg::{vector, Matrix, Rational, Scalar, Subspace, Vector};

/// Cartan–Killing type of a split simple algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum SplitType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    /// No split Cartan subalgebra was found by the candidate search.
    Unrecognized,
}

impl SplitType {
    pub fn is_recognized(&self) -> bool {
        *self != SplitType::Unrecognized
    }
}

impl fmt::Display for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitType::A(l) => write!(f, "A{l}"),
            SplitType::B(l) => write!(f, "B{l}"),
            SplitType::C(l) => write!(f, "C{l}"),
            SplitType::D(l) => write!(f, "D{l}"),
            SplitType::E(l) => write!(f, "E{l}"),
            SplitType::F4 => write!(f, "F4"),
            SplitType::G2 => write!(f, "G2"),
            SplitType::Unrecognized => write!(f, "unrecognized"),
        }
    }
}

impl From<SplitType> for String {
    fn from(t: SplitType) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for SplitType {
    type Error = String;
    fn try_from(s: String) -> std::result::Result<Self, String> {
        match s.as_str() {
            "F4" => return Ok(SplitType::F4),
            "G2" => return Ok(SplitType::G2),
            "unrecognized" => return Ok(SplitType::Unrecognized),
            _ => {}
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or("empty type label")?;
        let l: usize = chars.as_str().parse().map_err(|_| format!("bad type label {s:?}"))?;
        match head {
            'A' if l >= 1 => Ok(SplitType::A(l)),
            'B' if l >= 2 => Ok(SplitType::B(l)),
            'C' if l >= 3 => Ok(SplitType::C(l)),
            'D' if l >= 4 => Ok(SplitType::D(l)),
            'E' if (6..=8).contains(&l) => Ok(SplitType::E(l)),
            _ => Err(format!("bad type label {s:?}")),
        }
    }
}

/// A split Cartan subalgebra with its root data.
#[derive(Clone, Debug)]
pub struct RootData {
    pub cartan: Subspace,
    /// values of each root on the canonical basis of the Cartan subalgebra
    pub roots: Vec<Vec<Rational>>,
    /// squared root lengths under the dual of the Killing form
    pub lengths: Vec<Rational>,
}

impl LieAlgebra {
    fn root_data_for(&self, h: &Subspace, gram: &Matrix) -> Result<Option<RootData>> {
        let n = self.dim();
        // joint eigenspaces of ad h_1, …, ad h_r
        let mut pieces: Vec<(Vec<Rational>, Subspace)> = vec![(Vec::new(), self.full())];
        for hv in h.basis() {
            let Some(spaces) = eigenspaces(&self.ad(hv)?)? else {
                return Ok(None);
            };
            let mut next = Vec::new();
            for (label, p) in &pieces {
                for (val, e) in &spaces {
                    let x = p.intersection(e)?;
                    if !x.is_zero() {
                        let mut l = label.clone();
                        l.push(val.clone());
                        next.push((l, x));
                    }
                }
            }
            pieces = next;
        }
        let r = h.dim();
        let mut roots = Vec::new();
        for (label, space) in pieces {
            if label.iter().all(|v| v == &Rational::from_integer(0.into())) {
                if space != *h {
                    return Ok(None);
                }
            } else if space.dim() != 1 {
                return Ok(None);
            } else {
                roots.push(label);
            }
        }
        if roots.len() + r != n {
            return Ok(None);
        }
        let kh = Matrix::from_rows(
            h.basis()
                .iter()
                .map(|a| h.basis().iter().map(|b| vector::dot(&gram.apply(a).unwrap(), b)).collect())
                .collect(),
        )?;
        let Ok(inv) = kh.inverse() else {
            return Ok(None);
        };
        let lengths = roots
            .iter()
            .map(|a| {
                let v: Vector = a.iter().cloned().map(Scalar::Rat).collect();
                let len = vector::dot(&v, &inv.apply(&v).unwrap());
                len.as_rational().cloned().unwrap_or_default()
            })
            .collect();
        Ok(Some(RootData {
            cartan: h.clone(),
            roots,
            lengths,
        }))
    }

    /// Candidate elements of `z`: its basis vectors, then small combinations of pairs.
    fn toral_candidates(z: &Subspace) -> impl Iterator<Item = Vector> + '_ {
        let d = z.dim();
        let singles = z.basis().iter().cloned();
        let pairs = [1i64, -1, 2, -2, 3].into_iter().flat_map(move |k| {
            (0..d).flat_map(move |i| {
                (i + 1..d).map(move |j| {
                    let mut v = z.basis()[i].clone();
                    vector::axpy(&mut v, &Scalar::int(k), &z.basis()[j]);
                    v
                })
            })
        });
        singles.chain(pairs)
    }

    /// Split root data of a rational semisimple algebra.
    ///
    /// Grows a split toral subalgebra `T` one ad-diagonalizable element of the
    /// centralizer at a time until `T` is its own centralizer. Returns `None`
    /// when no candidate extends `T` before that point.
    pub fn split_root_data(&self) -> Result<Option<RootData>> {
        let n = self.dim();
        if !self.is_rational() || n == 0 {
            return Ok(None);
        }
        let mut toral = Subspace::zero(n);
        loop {
            let z = self.centralizer(&toral)?;
            if z == toral {
                break;
            }
            let mut found = None;
            for y in Self::toral_candidates(&z) {
                if toral.contains(&y)? {
                    continue;
                }
                if eigenspaces(&self.ad(&y)?)?.is_some() {
                    found = Some(y);
                    break;
                }
            }
            let Some(y) = found else {
                return Ok(None);
            };
            toral = toral.sum(&Subspace::span(n, [y])?)?;
        }
        let gram = self.killing_form();
        self.root_data_for(&toral, &gram)
    }

    /// Type of a split simple algebra from rank, dimension and root lengths.
    pub fn classify_split_type(&self) -> Result<SplitType> {
        let Some(data) = self.split_root_data()? else {
            return Ok(SplitType::Unrecognized);
        };
        Ok(type_from_data(data.cartan.dim(), self.dim(), &data.lengths))
    }
}

fn type_from_data(rank: usize, dim: usize, lengths: &[Rational]) -> SplitType {
    let mut counts: BTreeMap<&Rational, usize> = BTreeMap::new();
    for l in lengths {
        *counts.entry(l).or_default() += 1;
    }
    let l = rank;
    match counts.len() {
        1 => {
            if dim == l * (l + 2) {
                SplitType::A(l)
            } else if l >= 4 && dim == l * (2 * l - 1) {
                SplitType::D(l)
            } else if (l, dim) == (6, 78) || (l, dim) == (7, 133) || (l, dim) == (8, 248) {
                SplitType::E(l)
            } else {
                SplitType::Unrecognized
            }
        }
        2 => {
            let short = *counts.values().next().unwrap();
            if (l, dim) == (2, 14) {
                SplitType::G2
            } else if (l, dim) == (4, 52) {
                SplitType::F4
            } else if l >= 2 && dim == l * (2 * l + 1) {
                if short == 2 * l {
                    SplitType::B(l)
                } else if short == 2 * l * (l - 1) {
                    SplitType::C(l)
                } else {
                    SplitType::Unrecognized
                }
            } else {
                SplitType::Unrecognized
            }
        }
        _ => SplitType::Unrecognized,
    }
}
