use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use sset_core::certify::{
    check_two_out_of_three, search_certificate_ordered, theoremC_classify, verify_certificate, AnodyneCertificate, CertificateSearch,
    ClassifierBounds, ClassifierVerdict, Refutation, StepOrder,
};
use sset_core::generators::HornClass;

use crate::io::{self, load_inclusion};
use crate::report::{Report, Status};
use crate::{ClassArg, RunConfig};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Ascending,
    Descending,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// An inclusion map file.
    pub inclusion: PathBuf,
    #[arg(long, value_enum, default_value_t = ClassArg::Inner)]
    pub class: ClassArg,
    /// Node budget of the search; defaults to `--node-budget`.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = OrderArg::Ascending)]
    pub order: OrderArg,
    /// Check this certificate instead of searching.
    #[arg(long, conflicts_with = "decide")]
    pub verify: Option<PathBuf>,
    /// Decide inner anodyne-ness, refuting through homotopy categories
    /// when no certificate exists.
    #[arg(long)]
    pub decide: bool,
    /// Where to write a certificate that was found.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

fn emit_certificate(r: &mut Report, cert: &AnodyneCertificate, out: Option<&Path>) -> Result<()> {
    let text = cert.to_text();
    r.line(format!("certificate with {} steps", cert.steps.len()));
    match out {
        Some(o) => {
            io::write(o, &text)?;
            r.line(format!("wrote {}", o.display()));
        }
        None => r.line(text.trim_end()),
    }
    r.field("certificate", cert);
    Ok(())
}

fn refutation_label(refutation: &Refutation) -> String {
    match refutation {
        Refutation::NotVertexBijective => "not bijective on vertices".into(),
        Refutation::EquivalenceRefuted { detail, cellular_search_exhausted } => {
            let tail = if *cellular_search_exhausted { "; no horn-attachment sequence exists" } else { "" };
            format!("not an equivalence on homotopy categories: {detail}{tail}")
        }
    }
}

fn classifier_status(v: &ClassifierVerdict) -> Status {
    match v.definite() {
        Some(true) => Status::Positive,
        Some(false) => Status::Refuted,
        None => Status::Unknown,
    }
}

fn classifier_label(v: &ClassifierVerdict) -> String {
    match v {
        ClassifierVerdict::InnerAnodyne(c) => format!("inner anodyne ({} steps)", c.steps.len()),
        ClassifierVerdict::NotInnerAnodyne(refutation) => format!("not inner anodyne: {}", refutation_label(refutation)),
        ClassifierVerdict::Unknown(notes) => format!("unknown ({})", notes.join("; ")),
    }
}

pub fn certify(args: &CertifyArgs, cfg: &RunConfig) -> Result<Report> {
    let (inc, _) = load_inclusion(&args.inclusion)?;
    let class: HornClass = args.class.into();
    let budget = args.budget.unwrap_or(cfg.node_budget);
    if budget == 0 {
        bail!("--budget must be positive");
    }
    let mut r = Report::new("certify");
    if let Some(path) = &args.verify {
        let cert = AnodyneCertificate::parse(&io::read(path)?).with_context(|| format!("{}", path.display()))?;
        let ok = verify_certificate(&cert, &inc).with_context(|| format!("{}", path.display()))?;
        r.field("valid", ok);
        if ok {
            r.line("certificate verified");
        } else {
            r = r.with_status(Status::Refuted);
            r.line("certificate rejected");
        }
        return Ok(r);
    }
    if args.decide {
        if class != HornClass::Inner {
            bail!("--decide applies to the inner class only");
        }
        let v = theoremC_classify(&inc, ClassifierBounds { node_budget: budget, word_budget: cfg.word_budget });
        r = r.with_status(classifier_status(&v));
        r.line(classifier_label(&v));
        if let ClassifierVerdict::InnerAnodyne(c) = &v {
            emit_certificate(&mut r, c, args.out.as_deref())?;
        }
        r.field("verdict", &v);
        return Ok(r);
    }
    let order = match args.order {
        OrderArg::Ascending => StepOrder::Ascending,
        OrderArg::Descending => StepOrder::Descending,
    };
    match search_certificate_ordered(&inc, class, budget, order) {
        CertificateSearch::Found(cert) => emit_certificate(&mut r, &cert, args.out.as_deref())?,
        CertificateSearch::Exhausted => {
            r = r.with_status(Status::Refuted);
            r.line("no certificate: every attachment order was exhausted");
        }
        CertificateSearch::Budget(n) => {
            r = r.with_status(Status::Unknown);
            r.line(format!("budget of {n} nodes exceeded"));
        }
    }
    Ok(r)
}

pub fn two_of_three(u: &Path, v: &Path, cfg: &RunConfig) -> Result<Report> {
    let (u, _) = load_inclusion(u)?;
    let (v, _) = load_inclusion(v)?;
    let bounds = ClassifierBounds { node_budget: cfg.node_budget, word_budget: cfg.word_budget };
    let report = check_two_out_of_three(&u, &v, bounds)?;
    let mut r = Report::new("two-of-three");
    for (name, verdict) in [("u", &report.u), ("v", &report.v), ("vu", &report.vu)] {
        r.line(format!("{name}: {}", classifier_label(verdict)));
        r.field(name, verdict);
    }
    r.field("alarm", report.alarm);
    let definite = [&report.u, &report.v, &report.vu].iter().all(|x| x.definite().is_some());
    if report.alarm {
        r = r.with_status(Status::Refuted);
        r.line("alarm: two verdicts are positive and the third is negative");
    } else if !definite {
        r = r.with_status(Status::Unknown);
    }
    Ok(r)
}
