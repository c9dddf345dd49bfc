use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::Subcommand;
use sset_core::catalog::{s_prime, spine_pushout_complex, square_in_simplex};
use sset_core::constructions::{pushout, skeleton, Join, Product};
use sset_core::format::{parse_complex, write_complex, write_map};
use sset_core::function_complex::{function_complex, restricted_function_complex};
use sset_core::generators::{inclusion_by_names, make_generator, GeneratorKind};
use sset_core::homotopy::pi0;
use sset_core::{SimplicialMap, SimplicialSet};

use crate::io::{self, load_complex, load_inclusion, load_map};
use crate::report::Report;
use crate::RunConfig;

#[derive(Subcommand, Debug)]
pub enum Op {
    /// The `n`-skeleton.
    Skeleton {
        complex: PathBuf,
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    Join {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Pushout of `f : A -> Y` along an inclusion `A ⊆ X`.
    Pushout {
        inclusion: PathBuf,
        map: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Function complex `C^K`, or its restriction to equivalences.
    Fun {
        base: PathBuf,
        exponent: PathBuf,
        #[arg(long)]
        up_to: Option<usize>,
        #[arg(long)]
        restricted: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Connected components.
    Pi0 { complex: PathBuf },
    /// Inclusion of a complex into another, matching cells by name.
    Include {
        sub: PathBuf,
        sup: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The map to a one-vertex complex.
    ToPoint {
        complex: PathBuf,
        point: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

pub fn validate(file: &Path) -> Result<Report> {
    let text = io::read(file)?;
    let mut r = Report::new("validate");
    if io::is_map_file(&text) {
        let m = load_map(file)?;
        let f = &m.map;
        r.line(format!("map {} -> {}", m.source_file.display(), m.target_file.display()));
        r.line(format!("mono: {}", f.is_mono()));
        r.line(format!("vertex bijective: {}", f.is_vertex_bijective()));
        r.field("kind", "map");
        r.field("mono", f.is_mono());
        r.field("vertex_bijective", f.is_vertex_bijective());
    } else {
        let x = parse_complex(&text).with_context(|| format!("{}", file.display()))?;
        r.line(format!("complex of dimension {}", x.dim().map_or(-1, |d| d as i64)));
        r.line(format!("cells per dimension: {:?}", x.counts()));
        r.field("kind", "complex");
        r.field("dim", x.dim());
        r.field("counts", x.counts());
    }
    Ok(r)
}

fn emit_complex(r: &mut Report, x: &SimplicialSet, out: Option<&Path>) -> Result<()> {
    let text = write_complex(x);
    r.field("counts", x.counts());
    match out {
        Some(p) => {
            io::write(p, &text)?;
            r.line(format!("wrote {} (cells per dimension {:?})", p.display(), x.counts()));
            r.field("file", p.display().to_string());
        }
        None => {
            r.line(text.trim_end());
            r.field("complex", text);
        }
    }
    Ok(())
}

fn emit_map(r: &mut Report, f: &SimplicialMap, source: &Path, target: &Path, out: Option<&Path>) -> Result<()> {
    let abs = |p: &Path| p.canonicalize().unwrap_or_else(|_| p.to_path_buf()).display().to_string();
    let text = write_map(f, &abs(source), &abs(target));
    match out {
        Some(p) => {
            io::write(p, &text)?;
            r.line(format!("wrote {}", p.display()));
            r.field("file", p.display().to_string());
        }
        None => {
            r.line(text.trim_end());
            r.field("map", text);
        }
    }
    Ok(())
}

pub fn gen(kind: &str, n: usize, face: Option<usize>, out: Option<&Path>) -> Result<Report> {
    let x = match kind {
        "s-prime" => s_prime(),
        "spine-pushout" => spine_pushout_complex(),
        "square" => (**square_in_simplex().source()).clone(),
        _ => make_generator(kind.parse::<GeneratorKind>()?, n, face)?,
    };
    let mut r = Report::new("gen");
    emit_complex(&mut r, &x, out)?;
    Ok(r)
}

pub fn op(op: &Op, cfg: &RunConfig) -> Result<Report> {
    let mut r = Report::new("op");
    match op {
        Op::Skeleton { complex, n, out } => {
            let x = load_complex(complex)?;
            emit_complex(&mut r, skeleton(&x, *n).source(), out.as_deref())?;
        }
        Op::Product { left, right, out } => {
            let p = Product::new(load_complex(left)?, load_complex(right)?);
            emit_complex(&mut r, &p.complex, out.as_deref())?;
        }
        Op::Join { left, right, out } => {
            let j = Join::new(load_complex(left)?, load_complex(right)?);
            emit_complex(&mut r, &j.complex, out.as_deref())?;
        }
        Op::Pushout { inclusion, map, out } => {
            let (inc, _) = load_inclusion(inclusion)?;
            let f = load_map(map)?.map;
            if **f.source() != **inc.source() {
                bail!("the map and the inclusion have different sources");
            }
            let f = SimplicialMap::new(inc.source().clone(), f.target().clone(), f.images().to_vec())?;
            emit_complex(&mut r, &pushout(&inc, &f)?.complex, out.as_deref())?;
        }
        Op::Fun { base, exponent, up_to, restricted, out } => {
            let c = load_complex(base)?;
            let k = load_complex(exponent)?;
            let up_to = up_to.unwrap_or_else(|| c.dim().unwrap_or(0));
            let fc = if *restricted {
                restricted_function_complex(&c, &k, up_to, cfg.node_budget)?
            } else {
                function_complex(&c, &k, up_to, cfg.node_budget)?
            };
            r.line(format!("levels computed through {up_to}"));
            r.field("up_to", up_to);
            emit_complex(&mut r, fc.complex(), out.as_deref())?;
        }
        Op::Pi0 { complex } => {
            let x = load_complex(complex)?;
            let comps: Vec<Vec<String>> = pi0(&x)
                .into_iter()
                .map(|c| c.into_iter().map(|v| x.name(sset_core::CellId::new(0, v))).collect())
                .collect();
            r.line(format!("{} components", comps.len()));
            for c in &comps {
                r.line(format!("component {}", c.join(" ")));
            }
            r.field("components", comps);
        }
        Op::Include { sub, sup, out } => {
            let inc = inclusion_by_names(load_complex(sub)?, load_complex(sup)?)?;
            emit_map(&mut r, inc.map(), sub, sup, out.as_deref())?;
        }
        Op::ToPoint { complex, point, out } => {
            let pt = load_complex(point)?;
            if pt.counts() != [1] {
                bail!("{} is not a single vertex", point.display());
            }
            let f = SimplicialMap::to_point(load_complex(complex)?, Arc::clone(&pt))?;
            emit_map(&mut r, &f, complex, point, out.as_deref())?;
        }
    }
    Ok(r)
}
