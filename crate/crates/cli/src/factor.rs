use std::fmt::Write as _;
use std::path::Path;

use anyhow::Result;
use sset_core::factorize::{complete, descend_over_triangle, mapping_path_space, prefibrantize as soa_prefibrantize, saturate_prefibrant, SoaTrace};
use sset_core::format::simplex_token;
use sset_core::CoreError;

use crate::io::{self, load_complex, load_map};
use crate::report::{Report, Status};
use crate::RunConfig;

fn attachment_log(trace: &SoaTrace, m: usize) -> String {
    let next = &trace.stages[m + 1];
    let mut out = String::new();
    for a in &trace.attachments[m] {
        let face = a.face.map_or_else(|| "-".to_owned(), |f| next.name(f));
        writeln!(out, "attach {} top {} face {}", a.generator, next.name(a.top), face).unwrap();
        let dom = a.map.source();
        for c in dom.cells() {
            writeln!(out, "  image {} {}", dom.name(c), simplex_token(a.map.target(), a.map.image(c))).unwrap();
        }
    }
    out
}

/// Stage files `stage<m>.sset`, inclusions `include<m>.map`, attachment
/// logs `stage<m>.log` and certificates `stage<m>.cert`.
fn write_trace(dir: &Path, trace: &SoaTrace) -> Result<()> {
    for (m, s) in trace.stages.iter().enumerate() {
        io::write_complex_to(dir, &format!("stage{m}.sset"), s)?;
    }
    for (m, inc) in trace.inclusions.iter().enumerate() {
        io::write_map_to(dir, &format!("include{m}.map"), inc.map(), &format!("stage{m}.sset"), &format!("stage{}.sset", m + 1))?;
        io::write(&dir.join(format!("stage{m}.log")), &attachment_log(trace, m))?;
        io::write(&dir.join(format!("stage{m}.cert")), &trace.certificate(m).to_text())?;
    }
    Ok(())
}

pub fn prefibrantize(complex: &Path, out: Option<&Path>, cfg: &RunConfig, all_inner: bool) -> Result<Report> {
    let s = load_complex(complex)?;
    let max_dim = cfg.max_dim_or(s.dim().unwrap_or(0) + 1);
    let (name, trace) = if all_inner {
        ("complete", complete(&s, cfg.stages, max_dim, cfg.node_budget)?)
    } else {
        ("prefibrantize", soa_prefibrantize(&s, cfg.stages, max_dim, cfg.node_budget)?)
    };
    let mut r = Report::new(name);
    r.line(format!("selector {}, generators through dimension {}", trace.selector_id, trace.max_dim));
    let mut stages = Vec::new();
    for (m, st) in trace.stages.iter().enumerate() {
        let attached = if m == 0 { 0 } else { trace.attachments[m - 1].len() };
        r.line(format!("stage {m}: cells per dimension {:?}, {attached} attachments", st.counts()));
        stages.push(serde_json::json!({ "stage": m, "counts": st.counts(), "attachments": attached }));
    }
    r.field("selector", &trace.selector_id);
    r.field("max_dim", trace.max_dim);
    r.field("stages", stages);
    if let Some(dir) = out {
        write_trace(dir, &trace)?;
        r.line(format!("trace written to {}", dir.display()));
    }
    Ok(r)
}

pub fn saturate(complex: &Path, up_to: Option<usize>, out: Option<&Path>, cfg: &RunConfig) -> Result<Report> {
    let s = load_complex(complex)?;
    let up_to = up_to.unwrap_or_else(|| cfg.max_dim_or(s.dim().unwrap_or(0) + 1));
    let sat = saturate_prefibrant(&s, up_to, cfg.node_budget)?;
    let mut r = Report::new("saturate");
    r.line(format!("saturated through dimension {up_to}: cells per dimension {:?}", sat.complex.counts()));
    r.line(format!("{} horn fillers attached", sat.certificate.steps.len()));
    r.field("up_to", up_to);
    r.field("counts", sat.complex.counts());
    r.field("fillers", sat.certificate.steps.len());
    r.field("p2_violations", &sat.p2_violations);
    r.field("mapping_mismatches", &sat.mapping_mismatches);
    for v in &sat.p2_violations {
        r.line(format!("new cell with constant d0 face: {v}"));
    }
    for v in &sat.mapping_mismatches {
        r.line(format!("mapping spaces differ: {v}"));
    }
    if !sat.p2_holds() || !sat.mapping_spaces_agree() {
        r = r.with_status(Status::Refuted);
    }
    if let Some(dir) = out {
        io::write_complex_to(dir, "input.sset", &s)?;
        io::write_complex_to(dir, "saturated.sset", &sat.complex)?;
        io::write_map_to(dir, "include.map", sat.inclusion.map(), "input.sset", "saturated.sset")?;
        io::write(&dir.join("saturated.cert"), &sat.certificate.to_text())?;
        r.line(format!("trace written to {}", dir.display()));
    }
    Ok(r)
}

pub fn descend_triangle(map: &Path, out: Option<&Path>, cfg: &RunConfig) -> Result<Report> {
    let p = load_map(map)?.map;
    let max_dim = cfg.max_dim_or(3);
    let mut r = Report::new("descend-triangle");
    let d = match descend_over_triangle(&p, cfg.stages, max_dim, cfg.node_budget) {
        Ok(d) => d,
        Err(CoreError::Malformed(why)) => {
            r = r.with_status(Status::Refuted);
            r.line(format!("pullback check failed: {why}"));
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    for (m, st) in d.stages.iter().enumerate() {
        let attached = if m == 0 { 0 } else { d.attached[m - 1] };
        r.line(format!("stage {m}: cells per dimension {:?}, {attached} attachments", st.counts()));
    }
    r.line("each stage pulls back to the input over the horn");
    r.field("attached", &d.attached);
    r.field("max_dim", d.max_dim);
    if let Some(dir) = out {
        io::write_complex_to(dir, "triangle.sset", d.over[0].target())?;
        for (m, (st, over)) in d.stages.iter().zip(&d.over).enumerate() {
            let name = io::write_complex_to(dir, &format!("stage{m}.sset"), st)?;
            io::write_map_to(dir, &format!("over{m}.map"), over, &name, "triangle.sset")?;
        }
        let last = d.stages.len() - 1;
        io::write_map_to(dir, "include.map", d.inclusion.map(), "stage0.sset", &format!("stage{last}.sset"))?;
        let log: String = d.attached.iter().enumerate().map(|(m, k)| format!("stage {m} attached {k}\n")).collect();
        io::write(&dir.join("attachments.log"), &log)?;
        r.line(format!("trace written to {}", dir.display()));
    }
    Ok(r)
}

pub fn pathspace(map: &Path, up_to: Option<usize>, out: Option<&Path>, cfg: &RunConfig) -> Result<Report> {
    let f = load_map(map)?.map;
    let up_to = up_to.unwrap_or_else(|| f.source().dim().unwrap_or(0));
    let q = mapping_path_space(&f, up_to, cfg.node_budget)?;
    let mut r = Report::new("pathspace");
    r.line(format!("path space through dimension {up_to}: cells per dimension {:?}", q.complex.counts()));
    r.field("up_to", up_to);
    r.field("counts", q.complex.counts());
    if let Some(dir) = out {
        io::write_complex_to(dir, "source.sset", f.source())?;
        io::write_complex_to(dir, "target.sset", f.target())?;
        io::write_complex_to(dir, "paths.sset", &q.complex)?;
        io::write_map_to(dir, "include.map", &q.include, "source.sset", "paths.sset")?;
        io::write_map_to(dir, "project.map", &q.project, "paths.sset", "target.sset")?;
        io::write_map_to(dir, "first.map", &q.first, "paths.sset", "source.sset")?;
        r.line(format!("factorization written to {}", dir.display()));
    }
    Ok(r)
}
