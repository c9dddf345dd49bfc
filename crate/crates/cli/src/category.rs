use std::path::Path;

use anyhow::{bail, Result};
use sset_core::format::write_complex;
use sset_core::homotopy::{
    check_categorical_fibration, check_isofibration, dwyer_kan_check, homotopy_category, is_equivalence_edge, CategoricalFibration,
    Closure, EquivalenceVerdict, Verdict,
};
use sset_core::lifting::default_max_dim;
use sset_core::mapping::hom_left;
use sset_core::{CellId, Simplex};

use crate::io::{self, load_complex, load_map};
use crate::lifting::emit_witness;
use crate::report::{Report, Status};
use crate::RunConfig;

fn verdict_status(v: &Verdict) -> Status {
    match v {
        Verdict::Yes => Status::Positive,
        Verdict::No => Status::Refuted,
        Verdict::Unknown => Status::Unknown,
    }
}

fn verdict_label(v: &Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Unknown => "unknown",
    }
}

pub fn homcat(complex: &Path, hom: Option<&[String]>, cfg: &RunConfig) -> Result<Report> {
    let x = load_complex(complex)?;
    let h = homotopy_category(&x, cfg.word_budget);
    let mut r = Report::new("homcat");
    let vname = |v: usize| x.name(CellId::new(0, v));
    let objects: Vec<String> = (0..h.objects()).map(vname).collect();
    for o in &objects {
        r.line(format!("object {o}"));
    }
    let mut generators = Vec::new();
    for (g, &(s, t)) in h.generator_ends().iter().enumerate() {
        let name = x.name(CellId::new(1, g));
        r.line(format!("generator {name} {} {}", vname(s), vname(t)));
        generators.push(serde_json::json!({ "name": name, "source": vname(s), "target": vname(t) }));
    }
    let mut relations = Vec::new();
    for (a, b) in h.relations() {
        let (a, b) = (h.path_label(a), h.path_label(b));
        r.line(format!("relation {a} = {b}"));
        relations.push(serde_json::json!({ "left": a, "right": b }));
    }
    r.line(format!("confluent: {}", h.is_confluent()));
    r.field("objects", objects);
    r.field("generators", generators);
    r.field("relations", relations);
    r.field("confluent", h.is_confluent());
    if let Some([from, to]) = hom {
        let (a, b) = (io::vertex(&x, from)?.index, io::vertex(&x, to)?.index);
        let set = h.hom_set(a, b);
        let labels: Vec<String> = set.elements.iter().map(|p| h.path_label(p)).collect();
        r.line(format!("hom({from}, {to}) has {} elements", labels.len()));
        for l in &labels {
            r.line(format!("  {l}"));
        }
        match set.status {
            Closure::Exact => r.line("hom-set is exact"),
            Closure::BudgetTruncated(l) => {
                r.line(format!("hom-set enumerated through words of length {l} only"));
                r = r.with_status(Status::Unknown);
            }
        }
        r.field("hom", serde_json::json!({ "from": from, "to": to, "elements": labels, "exact": set.is_exact() }));
    }
    Ok(r)
}

pub fn equiv_edge(complex: &Path, edge: &str, cfg: &RunConfig) -> Result<Report> {
    let x = load_complex(complex)?;
    let e = match x.cell_by_name(edge) {
        Some(c) if c.dim == 1 => c,
        Some(_) => bail!("`{edge}` is not an edge"),
        None => bail!("unknown cell `{edge}`"),
    };
    let h = homotopy_category(&x, cfg.word_budget);
    let mut r = Report::new("equiv-edge");
    match is_equivalence_edge(&h, &Simplex::cell(e)) {
        EquivalenceVerdict::Yes(inv) => {
            let inv = h.path_label(&inv);
            r.line(format!("{edge} is an equivalence with inverse {inv}"));
            r.field("inverse", inv);
        }
        EquivalenceVerdict::No => {
            r = r.with_status(Status::Refuted);
            r.line(format!("{edge} is not an equivalence: no element of the exact reverse hom-set is an inverse"));
        }
        EquivalenceVerdict::Unknown => {
            r = r.with_status(Status::Unknown);
            r.line(format!("no inverse of {edge} found within the word budget"));
        }
    }
    Ok(r)
}

pub fn isofib(map: &Path, witness: Option<&Path>, cfg: &RunConfig) -> Result<Report> {
    let p = load_map(map)?.map;
    let report = check_isofibration(&p, cfg.word_budget);
    let mut r = Report::new("isofib").with_status(verdict_status(&report.verdict));
    r.line(format!("isofibration: {}", verdict_label(&report.verdict)));
    r.field("verdict", verdict_label(&report.verdict));
    if let Some(w) = &report.witness {
        let edge = p.target().token(&w.edge);
        let vertex = p.source().name(w.vertex);
        r.line(format!("the equivalence {edge} has no equivalence lift starting at {vertex}"));
        r.field("edge", edge);
        r.field("vertex", vertex);
        emit_witness(&mut r, &w.problem, "the edge square", witness)?;
    }
    Ok(r)
}

pub fn catfib(map: &Path, witness: Option<&Path>, cfg: &RunConfig) -> Result<Report> {
    let p = load_map(map)?.map;
    let max_dim = cfg.max_dim_or(default_max_dim(&p));
    let mut r = Report::new("catfib");
    match check_categorical_fibration(&p, max_dim, cfg.node_budget, cfg.word_budget) {
        CategoricalFibration::YesUpTo(d) => {
            r = r.with_status(Status::Unknown);
            r.line(format!("inner fibration up to dimension {d} and isofibration on homotopy categories"));
            r.field("checked_dim", d);
        }
        CategoricalFibration::NotInner(w) => {
            r = r.with_status(Status::Refuted);
            r.line("not an inner fibration");
            emit_witness(&mut r, &w, "an inner horn square", witness)?;
        }
        CategoricalFibration::NotIsofibration(w) => {
            r = r.with_status(Status::Refuted);
            r.line(format!("not an isofibration at {}", p.target().token(&w.edge)));
            emit_witness(&mut r, &w.problem, "the edge square", witness)?;
        }
        CategoricalFibration::Unknown(why) => {
            r = r.with_status(Status::Unknown);
            r.line(format!("unknown: {why}"));
            r.field("reason", why);
        }
    }
    Ok(r)
}

pub fn dk_check(map: &Path, cfg: &RunConfig) -> Result<Report> {
    let f = load_map(map)?.map;
    let max_dim = cfg.max_dim_or(default_max_dim(&f));
    let report = dwyer_kan_check(&f, max_dim, cfg.node_budget, cfg.word_budget);
    let (es, ff) = (&report.essentially_surjective, &report.fully_faithful);
    let status = match (es, ff) {
        (Verdict::No, _) | (_, Verdict::No) => Status::Refuted,
        (Verdict::Yes, Verdict::Yes) => Status::Positive,
        _ => Status::Unknown,
    };
    let mut r = Report::new("dk-check").with_status(status);
    r.line(format!("essentially surjective: {}", verdict_label(es)));
    r.line(format!("fully faithful: {}", verdict_label(ff)));
    for n in &report.notes {
        r.line(format!("note: {n}"));
    }
    r.field("essentially_surjective", verdict_label(es));
    r.field("fully_faithful", verdict_label(ff));
    r.field("notes", &report.notes);
    Ok(r)
}

pub fn mapspace(complex: &Path, from: &str, to: &str, up_to: Option<usize>, out: Option<&Path>) -> Result<Report> {
    let x = load_complex(complex)?;
    let (a, b) = (io::vertex(&x, from)?, io::vertex(&x, to)?);
    let up_to = up_to.unwrap_or_else(|| x.dim().unwrap_or(0));
    let hom = hom_left(&x, a, b, up_to)?;
    let space = hom.complex();
    let mut r = Report::new("mapspace");
    r.line(format!("left mapping space from {from} to {to} through level {up_to}"));
    r.line(format!("cells per dimension: {:?}", space.counts()));
    r.field("counts", space.counts());
    r.field("complete", hom.is_complete());
    if let Some(o) = out {
        io::write(o, &write_complex(space))?;
        r.line(format!("wrote {}", o.display()));
    }
    if hom.is_complete() {
        r.line("every simplex of the space is present");
    } else {
        r = r.with_status(Status::Unknown);
        r.line("truncated below the dimension of the complex");
    }
    Ok(r)
}
