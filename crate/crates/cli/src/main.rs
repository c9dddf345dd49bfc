//! `sset`: command-line driver for finite simplicial sets.
//!
//! Exit codes: 0 positive, 1 refuted (a witness is printed), 2 unknown,
//! bounded or out of budget, 3 input error.

mod anodyne;
mod build;
mod category;
mod factor;
mod io;
mod lifting;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sset_core::CoreError;

use report::{Format, Report, Status};

#[derive(Parser, Debug)]
#[command(name = "sset", version, about = "Finite simplicial sets: lifting, homotopy categories, anodyne certificates")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Bounds shared by every command.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Largest generator dimension checked; defaults to input dimension + 1.
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_budget: u64,
    /// Longest word enumerated in hom-sets of homotopy categories.
    #[arg(long, global = true, default_value_t = 8, value_parser = positive)]
    pub word_budget: usize,
    #[arg(long, global = true, default_value_t = 2, value_parser = positive)]
    pub stages: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

impl RunConfig {
    pub fn max_dim_or(&self, default: usize) -> usize {
        self.max_dim.unwrap_or(default)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Inner,
    Left,
    Right,
    Kan,
}

impl From<ClassArg> for sset_core::generators::HornClass {
    fn from(c: ClassArg) -> Self {
        use sset_core::generators::HornClass;
        match c {
            ClassArg::Inner => HornClass::Inner,
            ClassArg::Left => HornClass::Left,
            ClassArg::Right => HornClass::Right,
            ClassArg::Kan => HornClass::Kan,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and check a complex or map file.
    Validate { file: PathBuf },
    /// Write a standard complex: simplex, boundary, horn, spine or j-trunc.
    Gen {
        kind: String,
        n: usize,
        /// Missing face of a horn.
        #[arg(long)]
        face: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Constructions on complexes.
    Op {
        #[command(subcommand)]
        op: build::Op,
    },
    /// Right lifting property of a map against generators, or one square.
    Lift(lifting::LiftArgs),
    /// Fibration classes of a map up to the dimension bound.
    Classify {
        map: PathBuf,
        /// Directory for the witness of the first refuted class.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Presentation of the homotopy category.
    Homcat {
        complex: PathBuf,
        /// Print the hom-set between two vertices.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        hom: Option<Vec<String>>,
    },
    /// Whether an edge is an equivalence in the homotopy category.
    EquivEdge { complex: PathBuf, edge: String },
    /// Whether the induced functor of homotopy categories is an isofibration.
    Isofib {
        map: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Inner fibration plus isofibration on homotopy categories.
    Catfib {
        map: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Essential surjectivity and full faithfulness of a map.
    DkCheck { map: PathBuf },
    /// Left mapping space between two vertices.
    Mapspace {
        complex: PathBuf,
        from: String,
        to: String,
        #[arg(long)]
        up_to: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Search for or verify an anodyne certificate of an inclusion.
    Certify(anodyne::CertifyArgs),
    /// Classifier verdicts for `u`, `v` and `v u`, flagging contradictions.
    TwoOfThree { u: PathBuf, v: PathBuf },
    /// Small-object stages attaching Λ²₁ and the constant-d₀ horns.
    Prefibrantize {
        complex: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Skeletal saturation of a pre-fibrant complex.
    Saturate {
        complex: PathBuf,
        #[arg(long)]
        up_to: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Small-object stages attaching every inner horn.
    Complete {
        complex: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Inner horn fillers over Δ² for a map into Λ²₁.
    DescendTriangle {
        map: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Mapping path space factorization of a map.
    Pathspace {
        map: PathBuf,
        #[arg(long)]
        up_to: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Validate { file } => build::validate(file),
        Command::Gen { kind, n, face, out } => build::gen(kind, *n, *face, out.as_deref()),
        Command::Op { op } => build::op(op, cfg),
        Command::Lift(args) => lifting::lift(args, cfg),
        Command::Classify { map, witness } => lifting::classify(map, witness.as_deref(), cfg),
        Command::Homcat { complex, hom } => category::homcat(complex, hom.as_deref(), cfg),
        Command::EquivEdge { complex, edge } => category::equiv_edge(complex, edge, cfg),
        Command::Isofib { map, witness } => category::isofib(map, witness.as_deref(), cfg),
        Command::Catfib { map, witness } => category::catfib(map, witness.as_deref(), cfg),
        Command::DkCheck { map } => category::dk_check(map, cfg),
        Command::Mapspace { complex, from, to, up_to, out } => category::mapspace(complex, from, to, *up_to, out.as_deref()),
        Command::Certify(args) => anodyne::certify(args, cfg),
        Command::TwoOfThree { u, v } => anodyne::two_of_three(u, v, cfg),
        Command::Prefibrantize { complex, out } => factor::prefibrantize(complex, out.as_deref(), cfg, false),
        Command::Saturate { complex, up_to, out } => factor::saturate(complex, *up_to, out.as_deref(), cfg),
        Command::Complete { complex, out } => factor::prefibrantize(complex, out.as_deref(), cfg, true),
        Command::DescendTriangle { map, out } => factor::descend_triangle(map, out.as_deref(), cfg),
        Command::Pathspace { map, up_to, out } => factor::pathspace(map, *up_to, out.as_deref(), cfg),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Gen { .. } => "gen",
        Command::Op { .. } => "op",
        Command::Lift(_) => "lift",
        Command::Classify { .. } => "classify",
        Command::Homcat { .. } => "homcat",
        Command::EquivEdge { .. } => "equiv-edge",
        Command::Isofib { .. } => "isofib",
        Command::Catfib { .. } => "catfib",
        Command::DkCheck { .. } => "dk-check",
        Command::Mapspace { .. } => "mapspace",
        Command::Certify(_) => "certify",
        Command::TwoOfThree { .. } => "two-of-three",
        Command::Prefibrantize { .. } => "prefibrantize",
        Command::Saturate { .. } => "saturate",
        Command::Complete { .. } => "complete",
        Command::DescendTriangle { .. } => "descend-triangle",
        Command::Pathspace { .. } => "pathspace",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => Status::InputError.code(),
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let report = run(&cli).unwrap_or_else(|e| {
        let status = match e.downcast_ref::<CoreError>() {
            Some(CoreError::Budget(_)) => Status::Unknown,
            _ => Status::InputError,
        };
        eprintln!("error: {e:#}");
        let mut r = Report::new(command_name(&cli.command)).with_status(status);
        r.field("error", format!("{e:#}"));
        r
    });
    print!("{}", report.render(cli.config.format));
    ExitCode::from(report.status.code())
}
