use std::fmt::Write as _;
use std::path::Path;

use liegrad_core::catalog::{fixture, scramble, FIXTURE_NAMES};
use liegrad_core::duality::{action_to_grading, grading_to_action};
use liegrad_core::groups::FiniteGroup;
use liegrad_core::io::{from_json, to_json, FamilyDoc, JobDoc, ReportFile};
use liegrad_core::structure::{graded_simple_decomposition, homogeneous_levi, radical_gradedness, structure_report, ReportDoc};
use liegrad_core::{Error, Grading, Result};
use serde_json::{json, Value};

use crate::render;
use crate::{CatalogAction, Cli, Command};

pub struct Output {
    pub human: String,
    /// JSON document, written by `--json` and `--out`
    pub document: String,
}

impl Output {
    fn new(human: String, value: &Value) -> Output {
        Output {
            human,
            document: to_json(value),
        }
    }

    /// Commands whose result is itself a document print it in both modes.
    fn document(text: String) -> Output {
        Output {
            human: text.clone(),
            document: text,
        }
    }
}

struct Input {
    job: JobDoc,
    report: Option<ReportDoc>,
}

fn load(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = from_json(&text)?;
    if value.get("report").is_some() {
        let file: ReportFile = from_json(&text)?;
        Ok(Input {
            job: file.job,
            report: Some(file.report),
        })
    } else {
        Ok(Input {
            job: from_json(&text)?,
            report: None,
        })
    }
}

/// The job's grading, or the trivial grading by the one-element group.
fn grading_of(job: &JobDoc, max_order: usize) -> Result<Grading> {
    match &job.grading {
        Some(_) => job.grading(max_order),
        None => Ok(Grading::trivial(job.algebra()?, FiniteGroup::cyclic(1)?)),
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let max = cli.max_group_order;
    match &cli.command {
        Command::Validate { input } => validate(&load(input)?.job, max),
        Command::Support { input } => support(&grading_of(&load(input)?.job, max)?),
        Command::Radical { input } => radical(&grading_of(&load(input)?.job, max)?),
        Command::Levi { input } => levi(&grading_of(&load(input)?.job, max)?),
        Command::Decompose { input } => decompose(&grading_of(&load(input)?.job, max)?),
        Command::GradedSimple { input } => graded_simple(&grading_of(&load(input)?.job, max)?),
        Command::LemmaCheck { input, max_chain } => lemma_check(&grading_of(&load(input)?.job, max)?, *max_chain),
        Command::Dualize { input } => dualize(&load(input)?.job, max),
        Command::Grade { input } => grade(&load(input)?.job, max),
        Command::Report { input } => report(load(input)?, max),
        Command::Catalog { action } => catalog(action),
    }
}

fn validate(job: &JobDoc, max: usize) -> Result<Output> {
    let alg = job.algebra()?;
    let mut human = format!("algebra: valid, dimension {}\n", alg.dim());
    let mut value = json!({ "valid": true, "dim": alg.dim() });
    if job.grading.is_some() {
        let gr = job.grading(max)?;
        writeln!(
            human,
            "grading: valid, group of order {}, support {}",
            gr.group().order(),
            gr.group().format_set(gr.support())
        )
        .unwrap();
        value["group_order"] = json!(gr.group().order());
        value["support"] = json!(gr.support_names());
    }
    if job.automorphisms.is_some() {
        let fam = job.family(max)?;
        writeln!(human, "automorphisms: valid family of {} maps", fam.maps().len()).unwrap();
        value["automorphisms"] = json!(fam.maps().len());
    }
    Ok(Output::new(human, &value))
}

fn support(gr: &Grading) -> Result<Output> {
    let g = gr.group();
    let comm = gr.support_commutativity()?;
    let witness = match comm {
        liegrad_core::groups::Commutativity::Witness(a, b) => Some([g.name(a).to_string(), g.name(b).to_string()]),
        _ => None,
    };
    let sub = gr.support_subgroup()?;
    let mut human = format!("support: {}\n", g.format_set(gr.support()));
    match &witness {
        None => human.push_str("commutative: yes\n"),
        Some([a, b]) => writeln!(human, "commutative: no ({a} and {b} do not commute)").unwrap(),
    }
    writeln!(human, "generated subgroup: order {} {}", sub.len(), g.format_set(sub.iter().copied())).unwrap();
    let value = json!({
        "support": gr.support_names(),
        "commutative": witness.is_none(),
        "witness": witness,
        "subgroup": sub.iter().map(|&x| g.name(x)).collect::<Vec<_>>(),
    });
    Ok(Output::new(human, &value))
}

fn radical(gr: &Grading) -> Result<Output> {
    let r = radical_gradedness(gr)?;
    let mut human = format!("radical: dimension {} (graded)\n", r.dim());
    human.push_str(&render::components_text(gr, &r));
    Ok(Output::new(human, &render::graded_json(gr, &r)))
}

fn levi(gr: &Grading) -> Result<Output> {
    let res = homogeneous_levi(gr)?;
    let path = serde_json::to_value(res.path).unwrap();
    let mut human = format!(
        "Levi subalgebra: dimension {} ({} construction, {} stage(s))\n",
        res.levi.dim(),
        path.as_str().unwrap_or_default(),
        res.stages
    );
    human.push_str(&render::components_text(gr, &res.levi));
    let mut value = render::graded_json(gr, &res.levi);
    value["path"] = path;
    value["stages"] = json!(res.stages);
    Ok(Output::new(human, &value))
}

fn decompose(gr: &Grading) -> Result<Output> {
    let blocks = graded_simple_decomposition(gr)?;
    let mut human = format!("graded-simple blocks: {}\n", blocks.len());
    for (k, b) in blocks.iter().enumerate() {
        human.push_str(&render::block_text(gr, k, b));
    }
    let value = json!({ "blocks": blocks.iter().map(|b| render::block_json(gr, b)).collect::<Vec<_>>() });
    Ok(Output::new(human, &value))
}

fn graded_simple(gr: &Grading) -> Result<Output> {
    let s = gr.is_graded_simple()?;
    let human = format!("graded simple: {} ({})\n", if s.simple { "yes" } else { "no" }, s.reason);
    Ok(Output::new(human, &serde_json::to_value(&s).unwrap()))
}

fn lemma_check(gr: &Grading, max_chain: usize) -> Result<Output> {
    let g = gr.group();
    let cert = gr.check_chain_commutativity(max_chain)?;
    let pairs = gr.check_fiber_ideals_all()?;
    let mut human = format!(
        "chains up to length {}: {} nonzero products, all with pairwise commuting degrees ({} tuples visited)\n",
        cert.max_length,
        cert.total_nonzero(),
        cert.tuples_visited
    );
    let mut pair_json = Vec::new();
    for (a, b, out) in &pairs {
        if !out.holds {
            return Err(Error::InvariantViolation(format!(
                "[Id(L_{}), Id(L_{})] is nonzero although {} and {} do not commute",
                g.name(*a),
                g.name(*b),
                g.name(*a),
                g.name(*b)
            )));
        }
        writeln!(
            human,
            "fiber ideals for {} and {}: dimensions {} and {}, bracket zero",
            g.name(*a),
            g.name(*b),
            out.ideal_g.dim(),
            out.ideal_h.dim()
        )
        .unwrap();
        pair_json.push(json!({
            "g": g.name(*a),
            "h": g.name(*b),
            "ideal_g_dim": out.ideal_g.dim(),
            "ideal_h_dim": out.ideal_h.dim(),
            "commute": true,
        }));
    }
    if pairs.is_empty() {
        human.push_str("support is commutative: no fiber-ideal pairs to check\n");
    }
    let value = json!({ "chains": cert, "fiber_ideals": pair_json });
    Ok(Output::new(human, &value))
}

fn dualize(job: &JobDoc, max: usize) -> Result<Output> {
    let gr = job.grading(max)?;
    let fam = grading_to_action(&gr)?;
    let doc = JobDoc {
        algebra: job.algebra.clone(),
        grading: None,
        automorphisms: Some(FamilyDoc::from_family(&fam)),
    };
    Ok(Output::document(to_json(&doc)))
}

fn grade(job: &JobDoc, max: usize) -> Result<Output> {
    let alg = job.algebra()?;
    let fam = job.family(max)?;
    let rec = action_to_grading(&alg, &fam)?;
    Ok(Output::document(to_json(&JobDoc::from_grading(&rec.grading))))
}

fn report(input: Input, max: usize) -> Result<Output> {
    let gr = grading_of(&input.job, max)?;
    let rep = structure_report(&gr)?;
    let doc = rep.to_doc(&gr);
    let checks = doc.verify(&gr)?;
    if let Some(old) = &input.report {
        old.verify(&gr)?;
        if *old != doc {
            return Err(Error::InvariantViolation(
                "re-ingested report differs from the recomputed one".into(),
            ));
        }
    }
    let mut human = render::report_text(&gr, &doc);
    writeln!(human, "checks: {} passed", checks.len()).unwrap();
    let file = ReportFile {
        job: input.job,
        report: doc,
    };
    Ok(Output {
        human,
        document: to_json(&file),
    })
}

fn catalog(action: &CatalogAction) -> Result<Output> {
    match action {
        CatalogAction::List => {
            let mut human = String::new();
            let mut list = Vec::new();
            for name in FIXTURE_NAMES {
                let f = fixture(name)?;
                writeln!(human, "{name:<22} {}", f.description).unwrap();
                list.push(json!({ "name": name, "description": f.description, "dim": f.grading.dim() }));
            }
            Ok(Output::new(human, &Value::Array(list)))
        }
        CatalogAction::Emit { name, seed } => {
            let mut f = fixture(name)?;
            if let Some(s) = seed {
                f = scramble(&f, *s)?;
            }
            Ok(Output::document(to_json(&JobDoc::from_grading(&f.grading))))
        }
    }
}
