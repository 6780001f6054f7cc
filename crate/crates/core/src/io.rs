//! JSON documents for algebras, groups, gradings, automorphism families and reports.
//!
//! Scalars are always strings (`"3/2"`) or `{"order": n, "coeffs": [...]}`, never floats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::duality::ActionFamily;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::groups::{FiniteGroup, GroupKind};
use crate::lie::LieAlgebra;
use crate::linalg::{vector, Matrix, Scalar};
use crate::structure::ReportDoc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: Scalar,
    pub basis: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub left: String,
    pub right: String,
    pub result: Vec<TermDoc>,
}

/// Structure constants by basis name; unlisted pairs bracket to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub basis: Vec<String>,
    pub brackets: Vec<BracketDoc>,
}

/// A group by shorthand name (`"Z4"`, `"S3"`, `"Z2xZ2"`) or by recipe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDoc {
    Name(String),
    Form(GroupForm),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupForm {
    Cyclic { order: usize },
    Dihedral { n: usize },
    Symmetric { n: usize },
    Product { factors: Vec<GroupDoc> },
    Table { elements: Vec<String>, table: Vec<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingDoc {
    pub group: GroupDoc,
    /// basis name ↦ element name
    pub degrees: BTreeMap<String, String>,
}

/// Maps indexed by character name; column `j` of each matrix is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub group: GroupDoc,
    pub maps: BTreeMap<String, Vec<Vec<Scalar>>>,
}

/// Input to most commands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDoc {
    pub algebra: AlgebraDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphisms: Option<FamilyDoc>,
}

/// Output of the `report` command; re-ingesting it recomputes and compares.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub job: JobDoc,
    pub report: ReportDoc,
}

fn is_infinite_name(s: &str) -> bool {
    matches!(s.trim(), "Z" | "C" | "Zinf" | "Z_inf" | "infinite_cyclic")
}

impl GroupDoc {
    pub fn kind(&self) -> Result<GroupKind> {
        match self {
            GroupDoc::Name(s) if is_infinite_name(s) => Err(Error::Precondition(
                "infinite groups are not supported; gradings must be by finite groups".into(),
            )),
            GroupDoc::Name(s) => GroupKind::parse_name(s),
            GroupDoc::Form(GroupForm::Cyclic { order: 0 }) => {
                Err(Error::Precondition("cyclic group of order 0 (infinite) is not supported".into()))
            }
            GroupDoc::Form(GroupForm::Cyclic { order }) => Ok(GroupKind::Cyclic(*order)),
            GroupDoc::Form(GroupForm::Dihedral { n }) => Ok(GroupKind::Dihedral(*n)),
            GroupDoc::Form(GroupForm::Symmetric { n }) => Ok(GroupKind::Symmetric(*n)),
            GroupDoc::Form(GroupForm::Product { factors }) => {
                let mut it = factors.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::Parse("product group needs at least one factor".into()))?
                    .kind()?;
                it.try_fold(first, |acc, f| Ok(GroupKind::Product(Box::new(acc), Box::new(f.kind()?))))
            }
            GroupDoc::Form(GroupForm::Table { elements, table }) => Ok(GroupKind::Table {
                elements: elements.clone(),
                table: table.clone(),
            }),
        }
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        self.kind()?.build(max_order)
    }

    /// Explicit Cayley table, which preserves element names and order.
    pub fn from_group(g: &FiniteGroup) -> GroupDoc {
        let table = g
            .table()
            .iter()
            .map(|row| row.iter().map(|&x| g.name(x).to_string()).collect())
            .collect();
        GroupDoc::Form(GroupForm::Table {
            elements: g.names().to_vec(),
            table,
        })
    }
}

impl AlgebraDoc {
    pub fn from_algebra(alg: &LieAlgebra) -> AlgebraDoc {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms = alg.basis_bracket_sparse(i, j);
                if terms.is_empty() {
                    continue;
                }
                brackets.push(BracketDoc {
                    left: alg.name(i).to_string(),
                    right: alg.name(j).to_string(),
                    result: terms
                        .iter()
                        .map(|(k, c)| TermDoc {
                            coeff: c.clone(),
                            basis: alg.name(*k).to_string(),
                        })
                        .collect(),
                });
            }
        }
        AlgebraDoc {
            basis: alg.names().to_vec(),
            brackets,
        }
    }

    /// Builds and validates the algebra. Each unordered pair may be listed once,
    /// in either order; `[b, a]` entries are negated.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let n = self.basis.len();
        let index: BTreeMap<&str, usize> = self.basis.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        if index.len() != n {
            return Err(Error::Parse("duplicate basis names".into()));
        }
        let look = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::Parse(format!("unknown basis name {s:?}")))
        };
        let mut seen = BTreeMap::new();
        for b in &self.brackets {
            let (i, j) = (look(&b.left)?, look(&b.right)?);
            if i == j {
                if b.result.iter().any(|t| !vector::is_zero(std::slice::from_ref(&t.coeff))) {
                    return Err(Error::InvalidAlgebra(format!("[{0}, {0}] must be zero", b.left)));
                }
                continue;
            }
            let mut v = vector::zero(n);
            for t in &b.result {
                let k = look(&t.basis)?;
                v[k] += &t.coeff;
            }
            let key = (i.min(j), i.max(j));
            if i > j {
                v = vector::scale(&v, &Scalar::int(-1));
            }
            if seen.insert(key, v).is_some() {
                return Err(Error::Parse(format!("bracket [{}, {}] listed twice", b.left, b.right)));
            }
        }
        LieAlgebra::from_brackets(self.basis.clone(), seen.into_iter().map(|((i, j), v)| (i, j, v)))
    }
}

impl GradingDoc {
    pub fn from_grading(gr: &Grading) -> GradingDoc {
        GradingDoc {
            group: GroupDoc::from_group(gr.group()),
            degrees: (0..gr.dim())
                .map(|i| (gr.algebra().name(i).to_string(), gr.group().name(gr.degree(i)).to_string()))
                .collect(),
        }
    }

    pub fn to_grading(&self, alg: LieAlgebra, max_order: usize) -> Result<Grading> {
        let group = self.group.build(max_order)?;
        Grading::from_names(alg, group, &self.degrees)
    }
}

impl FamilyDoc {
    pub fn from_family(fam: &ActionFamily) -> FamilyDoc {
        FamilyDoc {
            group: GroupDoc::from_group(fam.group()),
            maps: fam.matrices().into_iter().map(|(k, m)| (k, m.to_rows())).collect(),
        }
    }

    pub fn to_family(&self, alg: &LieAlgebra, max_order: usize) -> Result<ActionFamily> {
        let group = self.group.build(max_order)?;
        let n = alg.dim();
        let mut maps = BTreeMap::new();
        for (name, rows) in &self.maps {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(rows.len()),
                });
            }
            maps.insert(name.clone(), Matrix::from_rows_with_cols(rows.clone(), n)?);
        }
        ActionFamily::new(alg, group, maps)
    }
}

impl JobDoc {
    pub fn from_grading(gr: &Grading) -> JobDoc {
        JobDoc {
            algebra: AlgebraDoc::from_algebra(gr.algebra()),
            grading: Some(GradingDoc::from_grading(gr)),
            automorphisms: None,
        }
    }

    pub fn algebra(&self) -> Result<LieAlgebra> {
        self.algebra.to_algebra()
    }

    pub fn grading(&self, max_order: usize) -> Result<Grading> {
        let g = self
            .grading
            .as_ref()
            .ok_or_else(|| Error::Precondition("this command needs a \"grading\" section".into()))?;
        g.to_grading(self.algebra()?, max_order)
    }

    pub fn family(&self, max_order: usize) -> Result<ActionFamily> {
        let f = self
            .automorphisms
            .as_ref()
            .ok_or_else(|| Error::Precondition("this command needs an \"automorphisms\" section".into()))?;
        f.to_family(&self.algebra()?, max_order)
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::all_fixtures;
    use crate::duality::grading_to_action;
    use crate::error::ErrorClass;
    use crate::groups::DEFAULT_MAX_ORDER;
    use crate::structure::structure_report;

    #[test]
    fn jobs_round_trip_for_every_fixture() {
        for f in all_fixtures().unwrap() {
            let job = JobDoc::from_grading(&f.grading);
            let text = to_json(&job);
            let back: JobDoc = from_json(&text).unwrap();
            assert_eq!(to_json(&back), text);
            let gr = back.grading(DEFAULT_MAX_ORDER).unwrap();
            assert_eq!(gr.algebra().table(), f.grading.algebra().table());
            assert_eq!(gr.degrees(), f.grading.degrees());
        }
    }

    #[test]
    fn reports_round_trip_bit_exactly() {
        for f in all_fixtures().unwrap() {
            let doc = structure_report(&f.grading).unwrap().to_doc(&f.grading);
            let text = to_json(&doc);
            let back: ReportDoc = from_json(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn families_round_trip_with_roots_of_unity() {
        let f = crate::catalog::fixture("sl2_z4").unwrap();
        let fam = grading_to_action(&f.grading).unwrap();
        let doc = FamilyDoc::from_family(&fam);
        let text = to_json(&doc);
        assert!(text.contains("\"order\""));
        let back: FamilyDoc = from_json(&text).unwrap();
        assert_eq!(to_json(&back), text);
        let fam2 = back.to_family(f.grading.algebra(), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(fam2.matrices(), fam.matrices());
    }

    #[test]
    fn reversed_pairs_are_negated() {
        let doc: AlgebraDoc = from_json(
            r#"{"basis": ["x", "y"], "brackets": [{"left": "y", "right": "x", "result": [{"coeff": "-1", "basis": "y"}]}]}"#,
        )
        .unwrap();
        let alg = doc.to_algebra().unwrap();
        assert_eq!(alg.basis_bracket(0, 1), vector::from_ints(&[0, 1]));
    }

    #[test]
    fn malformed_documents() {
        assert_eq!(from_json::<JobDoc>("{").unwrap_err().class(), ErrorClass::Parse);
        let dup = r#"{"basis": ["x", "x"], "brackets": []}"#;
        assert_eq!(from_json::<AlgebraDoc>(dup).unwrap().to_algebra().unwrap_err().class(), ErrorClass::Parse);
        let jacobi = r#"{"basis": ["x", "y", "z"], "brackets": [
            {"left": "x", "right": "y", "result": [{"coeff": "1", "basis": "x"}]},
            {"left": "x", "right": "z", "result": [{"coeff": "1", "basis": "y"}]}]}"#;
        let err = from_json::<AlgebraDoc>(jacobi).unwrap().to_algebra().unwrap_err();
        assert_eq!(err.class(), ErrorClass::Precondition);
        let float = r#"{"coeff": 0.5, "basis": "x"}"#;
        assert!(from_json::<TermDoc>(float).is_err());
    }

    #[test]
    fn group_documents() {
        let klein: GroupDoc = from_json(r#"{"kind": "product", "factors": ["Z2", {"kind": "cyclic", "order": 2}]}"#).unwrap();
        assert_eq!(klein.build(64).unwrap().order(), 4);
        let inf: GroupDoc = from_json(r#""Z""#).unwrap();
        assert_eq!(inf.build(64).unwrap_err().class(), ErrorClass::Precondition);
        let big: GroupDoc = from_json(r#""Z100""#).unwrap();
        assert!(matches!(big.build(64), Err(Error::GroupTooLarge { .. })));
        assert_eq!(from_json::<GroupDoc>(r#"{"kind": "free"}"#).unwrap_err().class(), ErrorClass::Parse);
    }
}
