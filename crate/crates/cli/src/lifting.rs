use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use sset_core::format::{write_complex, write_map};
use sset_core::generators::{boundary_family, horn_family, Cofibration, CofibrationKind};
use sset_core::lifting::{classify_map, default_max_dim, has_rlp, solve_lift, LiftOutcome, LiftingProblem, RlpVerdict};

use crate::io::{self, load_inclusion, load_map};
use crate::report::{Report, Status};
use crate::{ClassArg, RunConfig};

#[derive(Args, Debug)]
pub struct LiftArgs {
    /// The map `p : X -> S`.
    pub map: PathBuf,
    /// One generator: `horn:N:I`, `boundary:N` or `spine:N`. The check is
    /// exhaustive.
    #[arg(long, conflicts_with_all = ["class", "square"])]
    pub generator: Option<String>,
    /// A horn class, or `trivial` for boundary inclusions, through `--max-dim`.
    #[arg(long, conflicts_with = "square")]
    pub class: Option<String>,
    /// One square: inclusion `i : A -> B`, top `u : A -> X`, bottom `v : B -> S`.
    #[arg(long, num_args = 3, value_names = ["I", "U", "V"])]
    pub square: Option<Vec<PathBuf>>,
    /// Where to write the lift, or the witness directory on refutation.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

fn parse_generator(s: &str) -> Result<CofibrationKind> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |t: &str| t.parse::<usize>().with_context(|| format!("bad number `{t}` in generator `{s}`"));
    let kind = match parts[..] {
        ["horn", n, i] => {
            let (n, i) = (num(n)?, num(i)?);
            if n == 0 || i > n {
                bail!("a horn needs n >= 1 and 0 <= i <= n");
            }
            CofibrationKind::Horn { n, i }
        }
        ["boundary", n] => CofibrationKind::Boundary { n: num(n)? },
        ["spine", n] => {
            let n = num(n)?;
            if n == 0 {
                bail!("a spine needs n >= 1");
            }
            CofibrationKind::Spine { n }
        }
        _ => bail!("unknown generator `{s}`; expected horn:N:I, boundary:N or spine:N"),
    };
    Ok(kind)
}

/// Writes the witness square to `dir` as `a`, `b`, `x`, `s` complexes and
/// `i`, `u`, `v`, `p` maps, and records it in the report.
pub fn emit_witness(r: &mut Report, w: &LiftingProblem, label: &str, dir: Option<&Path>) -> Result<()> {
    let u = write_map(&w.u, "a.sset", "x.sset");
    let v = write_map(&w.v, "b.sset", "s.sset");
    r.line(format!("witness: {label} has no lift"));
    r.line(format!("top square map u:\n{}", u.trim_end()));
    r.line(format!("bottom square map v:\n{}", v.trim_end()));
    if let Some(dir) = dir {
        io::write_complex_to(dir, "a.sset", w.i.source())?;
        io::write_complex_to(dir, "b.sset", w.i.target())?;
        io::write_complex_to(dir, "x.sset", w.p.source())?;
        io::write_complex_to(dir, "s.sset", w.p.target())?;
        io::write_map_to(dir, "i.map", w.i.map(), "a.sset", "b.sset")?;
        io::write_map_to(dir, "p.map", &w.p, "x.sset", "s.sset")?;
        io::write(&dir.join("u.map"), &u)?;
        io::write(&dir.join("v.map"), &v)?;
        r.line(format!("witness square written to {}", dir.display()));
    }
    r.field(
        "witness",
        serde_json::json!({
            "problem": label,
            "a": write_complex(w.i.source()),
            "b": write_complex(w.i.target()),
            "i": write_map(w.i.map(), "a.sset", "b.sset"),
            "u": u,
            "v": v,
        }),
    );
    Ok(())
}

fn generators_of(class: &str, max_dim: usize) -> Result<Vec<Cofibration>> {
    Ok(match class {
        "trivial" | "boundary" => boundary_family(max_dim),
        other => {
            let c: ClassArg = clap::ValueEnum::from_str(other, true).map_err(|_| anyhow::anyhow!("unknown class `{other}`"))?;
            horn_family(c.into(), max_dim)
        }
    })
}

pub fn lift(args: &LiftArgs, cfg: &RunConfig) -> Result<Report> {
    let p = load_map(&args.map)?;
    let mut r = Report::new("lift");
    if let Some(files) = &args.square {
        let (i, li) = load_inclusion(&files[0])?;
        let u = load_map(&files[1])?.map;
        let v = load_map(&files[2])?.map;
        let problem = LiftingProblem::new(i, p.map.clone(), u, v).context("the square is not a lifting problem")?;
        match solve_lift(&problem, cfg.node_budget) {
            LiftOutcome::Lift(l) => {
                let text = write_map(&l, &li.target_file.display().to_string(), &p.source_file.display().to_string());
                r.line("lift found");
                match &args.out {
                    Some(o) => {
                        io::write(o, &text)?;
                        r.line(format!("wrote {}", o.display()));
                    }
                    None => r.line(text.trim_end()),
                }
                r.field("lift", text);
            }
            LiftOutcome::None => {
                r = r.with_status(Status::Refuted);
                emit_witness(&mut r, &problem, "the square", args.out.as_deref())?;
            }
            LiftOutcome::Budget(n) => {
                r = r.with_status(Status::Unknown);
                r.line(format!("budget of {n} nodes exceeded"));
            }
        }
        return Ok(r);
    }
    let (gens, max_dim, exhaustive) = match (&args.generator, &args.class) {
        (Some(g), _) => {
            let g = Cofibration::new(parse_generator(g)?);
            let d = g.dim();
            (vec![g], d, true)
        }
        (None, Some(c)) => {
            let d = cfg.max_dim_or(default_max_dim(&p.map));
            (generators_of(c, d)?, d, false)
        }
        (None, None) => bail!("give one of --generator, --class or --square"),
    };
    let verdict = has_rlp(&p.map, &gens, max_dim, cfg.node_budget);
    r.field("verdict", verdict.label());
    match &verdict {
        RlpVerdict::No(w) => {
            r = r.with_status(Status::Refuted);
            r.line("right lifting property: no");
            let label = format!("a square against {}", w_kind(&gens, w));
            emit_witness(&mut r, w, &label, args.out.as_deref())?;
        }
        RlpVerdict::YesUpTo(d) if exhaustive => {
            r.line(format!("right lifting property: yes against {}", gens[0].kind));
            r.field("checked_dim", d);
        }
        RlpVerdict::YesUpTo(d) => {
            r = r.with_status(Status::Unknown);
            r.line(format!("right lifting property: yes up to dimension {d}"));
            r.field("checked_dim", d);
        }
        RlpVerdict::Budget(n) => {
            r = r.with_status(Status::Unknown);
            r.line(format!("budget of {n} nodes exceeded"));
        }
    }
    Ok(r)
}

fn w_kind(gens: &[Cofibration], w: &LiftingProblem) -> String {
    gens.iter()
        .find(|g| **g.inclusion.source() == **w.i.source() && **g.inclusion.target() == **w.i.target())
        .map_or_else(|| "a generator".to_owned(), |g| g.kind.to_string())
}

pub fn classify(map: &Path, witness: Option<&Path>, cfg: &RunConfig) -> Result<Report> {
    let p = load_map(map)?.map;
    let max_dim = cfg.max_dim_or(default_max_dim(&p));
    let report = classify_map(&p, max_dim, cfg.node_budget);
    let mut r = Report::new("classify");
    r.line(format!("checked through dimension {max_dim}"));
    r.line(format!("mono: {}, vertex bijective: {}", report.mono, report.vertex_bijective));
    r.field("checked_dim", max_dim);
    r.field("mono", report.mono);
    r.field("vertex_bijective", report.vertex_bijective);
    let mut verdicts = serde_json::Map::new();
    let mut first_no = None;
    let mut budget = false;
    for (name, v) in report.verdicts() {
        r.line(format!("{name}: {}", v.label()));
        verdicts.insert(name.into(), v.label().into());
        match v {
            RlpVerdict::No(w) if first_no.is_none() => first_no = Some((name, w.clone())),
            RlpVerdict::Budget(_) => budget = true,
            _ => {}
        }
    }
    r.field("verdicts", verdicts);
    if let Some((name, w)) = first_no {
        r = r.with_status(Status::Refuted);
        emit_witness(&mut r, &w, &format!("the {name} class"), witness)?;
    } else {
        r = r.with_status(Status::Unknown);
        if budget {
            r.line("some checks ran out of budget");
        }
    }
    Ok(r)
}
