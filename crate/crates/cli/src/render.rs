use std::fmt::Write as _;

use liegrad_core::grading::GradedSubspace;
use liegrad_core::structure::{GradedSimpleBlock, ReportDoc};
use liegrad_core::{Grading, Scalar};
use num_traits::{One, Zero};
use serde_json::{json, Value};

/// `2*e - h + v1`
pub fn vector_text(names: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = -c;
        let (sign, mag) = match c {
            Scalar::Rat(r) if *r < liegrad_core::Rational::zero() => ("-", neg),
            _ => ("+", c.clone()),
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            write!(out, " {sign} ").unwrap();
        }
        if mag.is_one() {
            out.push_str(name);
        } else {
            write!(out, "{mag}*{name}").unwrap();
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn components_text(gr: &Grading, s: &GradedSubspace) -> String {
    let names = gr.algebra().names();
    let mut out = String::new();
    for (&g, c) in s.components() {
        let vs: Vec<String> = c.basis().iter().map(|v| vector_text(names, v)).collect();
        writeln!(out, "  degree {}: {}", gr.group().name(g), vs.join(", ")).unwrap();
    }
    out
}

pub fn graded_json(gr: &Grading, s: &GradedSubspace) -> Value {
    let comps: Vec<Value> = s
        .components()
        .iter()
        .map(|(&g, c)| json!({ "degree": gr.group().name(g), "basis": c.basis() }))
        .collect();
    json!({ "dim": s.dim(), "components": comps })
}

pub fn block_text(gr: &Grading, k: usize, b: &GradedSimpleBlock) -> String {
    let types: Vec<String> = b.types.iter().map(ToString::to_string).collect();
    let mut out = format!(
        "block {}: dimension {}, support {}, {} simple summand(s) of type {}\n",
        k + 1,
        b.space.dim(),
        gr.group().format_set(b.support.iter().copied()),
        b.summands(),
        types.join(" + ")
    );
    out.push_str(&components_text(gr, &b.space));
    out
}

pub fn block_json(gr: &Grading, b: &GradedSimpleBlock) -> Value {
    let mut v = graded_json(gr, &b.space);
    v["support"] = json!(b.support.iter().map(|&g| gr.group().name(g)).collect::<Vec<_>>());
    v["summands"] = json!(b.summands());
    v["types"] = json!(b.types);
    v["isomorphism"] = json!(b.isomorphism);
    v
}

pub fn report_text(gr: &Grading, doc: &ReportDoc) -> String {
    let names = gr.algebra().names();
    let mut out = String::new();
    writeln!(out, "basis: {}", doc.basis.join(" ")).unwrap();
    writeln!(out, "support: {{{}}}", doc.support.join(", ")).unwrap();
    writeln!(
        out,
        "support subgroup: order {} {{{}}}",
        doc.support_subgroup.len(),
        doc.support_subgroup.join(", ")
    )
    .unwrap();
    let list = |comps: &[liegrad_core::structure::ComponentDoc], out: &mut String| {
        for c in comps {
            let vs: Vec<String> = c.basis.iter().map(|v| vector_text(names, v)).collect();
            writeln!(out, "  degree {}: {}", c.degree, vs.join(", ")).unwrap();
        }
    };
    writeln!(out, "radical: dimension {}", doc.radical.dim).unwrap();
    list(&doc.radical.components, &mut out);
    let path = serde_json::to_value(doc.levi.path).unwrap();
    writeln!(
        out,
        "Levi subalgebra: dimension {} ({} construction, {} stage(s))",
        doc.levi.dim,
        path.as_str().unwrap_or_default(),
        doc.levi.stages
    )
    .unwrap();
    list(&doc.levi.components, &mut out);
    writeln!(out, "graded-simple blocks: {}", doc.blocks.len()).unwrap();
    for (k, b) in doc.blocks.iter().enumerate() {
        let types: Vec<String> = b.types.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "block {}: dimension {}, support {{{}}} (commutative), {} simple summand(s) of type {}",
            k + 1,
            b.dim,
            b.support.join(", "),
            b.summands,
            types.join(" + ")
        )
        .unwrap();
        list(&b.components, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors_print_as_combinations() {
        let names: Vec<String> = ["e", "f", "h"].map(String::from).to_vec();
        let v = vec![Scalar::int(2), Scalar::int(0), Scalar::int(-1)];
        assert_eq!(vector_text(&names, &v), "2*e - h");
        let w = vec![Scalar::int(-1), Scalar::frac(1, 2), Scalar::int(0)];
        assert_eq!(vector_text(&names, &w), "-e + 1/2*f");
        assert_eq!(vector_text(&names, &vec![Scalar::int(0); 3]), "0");
    }
}
