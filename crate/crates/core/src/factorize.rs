//! Small-object constructions: pre-fibrancy, stagewise horn attachment,
//! saturation of pre-fibrant complexes and descent along `Λ²₁ ⊆ Δ²`.
//!
//! Every construction is bounded: stage counts and dimensions are explicit
//! and recorded in the outputs.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::certify::{AnodyneCertificate, CertificateStep};
use crate::complex::{Builder, SimplicialSet};
use crate::constructions::{attach_into_named, pullback, push_simplex, skeleton};
use crate::function_complex::restricted_function_complex;
use crate::error::CoreError;
use crate::generators::{horn, standard_simplex, Cofibration, CofibrationKind, HornClass};
use crate::lifting::{check_generator, has_rlp, has_rlp_filtered, RlpVerdict};
use crate::map::{MonoInclusion, SimplicialMap};
use crate::mapping::hom_left;
use crate::search::{MapSearch, Over, TargetIndex};
use crate::simplex::{CellId, Simplex};

fn levels(x: &SimplicialSet) -> usize {
    x.dim().map_or(0, |d| d + 1)
}

fn point() -> Arc<SimplicialSet> {
    Arc::new(standard_simplex(0))
}

pub fn inner_horns(max_dim: usize) -> Vec<Cofibration> {
    (2..=max_dim).flat_map(|n| (1..n).map(move |i| Cofibration::horn(n, i))).collect()
}

/// Whether the `d₀` face of the horn is sent to a constant simplex.
fn d0_constant(g: &Cofibration, u: &[Vec<Simplex>]) -> bool {
    let f = g.domain_face(0).expect("inner horns contain their 0th face");
    u[f.dim][f.index].is_constant()
}

#[derive(Clone, Debug)]
pub struct PreFibrantReport {
    pub max_dim: usize,
    /// Extension along `Λ²₁ ⊆ Δ²`.
    pub lambda21: RlpVerdict,
    /// Extension along `Λⁿᵢ ⊆ Δⁿ` for horns whose `d₀` face is constant.
    pub constant_horns: Vec<((usize, usize), RlpVerdict)>,
}

impl PreFibrantReport {
    pub fn holds(&self) -> bool {
        self.lambda21.is_yes() && self.constant_horns.iter().all(|(_, v)| v.is_yes())
    }

    pub fn is_refuted(&self) -> bool {
        self.lambda21.is_no() || self.constant_horns.iter().any(|(_, v)| v.is_no())
    }

    pub fn verdicts(&self) -> Vec<(String, &RlpVerdict)> {
        let mut out = vec![("horn(2,1)".to_owned(), &self.lambda21)];
        out.extend(self.constant_horns.iter().map(|((n, i), v)| (format!("horn({n},{i}) with constant d0"), v)));
        out
    }
}

pub fn is_prefibrant(s: &Arc<SimplicialSet>, max_dim: usize, budget: u64) -> PreFibrantReport {
    let p = SimplicialMap::to_point(s.clone(), point()).expect("a point");
    let lambda21 = has_rlp(&p, &[Cofibration::horn(2, 1)], 2, budget);
    let mut constant_horns = Vec::new();
    for n in 3..=max_dim {
        for i in 1..n {
            let v = has_rlp_filtered(&p, &[Cofibration::horn(n, i)], n, budget, &d0_constant);
            constant_horns.push(((n, i), v));
        }
    }
    PreFibrantReport { max_dim, lambda21, constant_horns }
}

/// One horn attached during a stage.
#[derive(Clone, Debug)]
pub struct Attachment {
    pub generator: CofibrationKind,
    /// The attaching map into the previous stage.
    pub map: SimplicialMap,
    /// The top cell it creates.
    pub top: CellId,
    /// The face created with it, for horns.
    pub face: Option<CellId>,
}

#[derive(Clone, Debug)]
pub struct SoaTrace {
    pub stages: Vec<Arc<SimplicialSet>>,
    /// `stages[m] -> stages[m + 1]`.
    pub inclusions: Vec<MonoInclusion>,
    pub attachments: Vec<Vec<Attachment>>,
    pub selector_id: String,
    pub max_dim: usize,
}

impl SoaTrace {
    pub fn last(&self) -> &Arc<SimplicialSet> {
        self.stages.last().expect("a trace has a first stage")
    }

    /// `S(0) -> S(m)`.
    pub fn total_inclusion(&self) -> Result<MonoInclusion, CoreError> {
        let mut out = MonoInclusion::identity(self.stages[0].clone());
        for inc in &self.inclusions {
            out = out.then(inc)?;
        }
        Ok(out)
    }

    /// The stage map `S(m) -> S(m+1)` as a sequence of horn attachments.
    pub fn certificate(&self, m: usize) -> AnodyneCertificate {
        let next = &self.stages[m + 1];
        let steps = self.attachments[m]
            .iter()
            .filter_map(|a| match (a.generator, a.face) {
                (CofibrationKind::Horn { n, i }, Some(face)) => {
                    Some(CertificateStep { n, i, top: next.name(a.top), face: next.name(face) })
                }
                _ => None,
            })
            .collect();
        AnodyneCertificate { class: HornClass::Inner, steps }
    }
}

pub type Selector<'a> = &'a dyn Fn(&Cofibration, &[Vec<Simplex>]) -> bool;

/// Attaches one copy of each generator along every attaching map accepted
/// by `selector`, all in one pushout. Fails as a whole if enumeration runs
/// out of budget.
pub fn soa_stage(
    s: &Arc<SimplicialSet>,
    generators: &[Cofibration],
    selector: Selector,
    budget: u64,
    stage: usize,
) -> Result<(Arc<SimplicialSet>, MonoInclusion, Vec<Attachment>), CoreError> {
    let index = TargetIndex::new(s.clone());
    let mut chosen = Vec::new();
    for g in generators {
        for u in MapSearch::new(g.inclusion.source(), &index).budget(budget).all()? {
            if selector(g, &u) {
                chosen.push((g, u));
            }
        }
    }
    let mut b = Builder::from_complex(s);
    let mut created = Vec::with_capacity(chosen.len());
    for (k, (g, u)) in chosen.iter().enumerate() {
        let images = attach_into_named(&mut b, &g.inclusion, u, &format!("m{stage}a{k}_"))?;
        let n = g.dim();
        let top = images[n][0].base;
        let face = match g.kind {
            CofibrationKind::Horn { i, .. } => Some(b.faces(top)[i].base),
            _ => None,
        };
        created.push((top, face));
    }
    let next = Arc::new(b.build()?);
    let inc = stage_inclusion(s, &next)?;
    let attachments = chosen
        .into_iter()
        .zip(created)
        .map(|((g, u), (top, face))| Attachment {
            generator: g.kind,
            map: SimplicialMap::new_unchecked(g.inclusion.source().clone(), s.clone(), u).expect("search output"),
            top,
            face,
        })
        .collect();
    Ok((next, inc, attachments))
}

/// The inclusion of a complex into one built on top of it.
fn stage_inclusion(s: &Arc<SimplicialSet>, next: &Arc<SimplicialSet>) -> Result<MonoInclusion, CoreError> {
    let images = (0..levels(s)).map(|d| s.cells_of_dim(d).map(Simplex::cell).collect()).collect();
    MonoInclusion::new(SimplicialMap::new_unchecked(s.clone(), next.clone(), images)?)
}

fn run_stages(s: &Arc<SimplicialSet>, stages: usize, max_dim: usize, budget: u64, selector: Selector, id: &str) -> Result<SoaTrace, CoreError> {
    if stages == 0 {
        return Err(CoreError::Precondition("at least one stage is required".into()));
    }
    let generators = inner_horns(max_dim);
    let mut trace = SoaTrace {
        stages: vec![s.clone()],
        inclusions: Vec::new(),
        attachments: Vec::new(),
        selector_id: id.into(),
        max_dim,
    };
    for m in 0..stages {
        let (next, inc, att) = soa_stage(trace.last(), &generators, selector, budget, m + 1)?;
        trace.stages.push(next);
        trace.inclusions.push(inc);
        trace.attachments.push(att);
    }
    Ok(trace)
}

/// Inner horns `Λ²₁` always, and higher inner horns only when `d₀` is
/// constant.
pub fn prefibrantize(s: &Arc<SimplicialSet>, stages: usize, max_dim: usize, budget: u64) -> Result<SoaTrace, CoreError> {
    let selector = |g: &Cofibration, u: &[Vec<Simplex>]| g.dim() == 2 || d0_constant(g, u);
    run_stages(s, stages, max_dim, budget, &selector, "prefibrant")
}

/// Plain inner horn attachment.
pub fn complete(s: &Arc<SimplicialSet>, stages: usize, max_dim: usize, budget: u64) -> Result<SoaTrace, CoreError> {
    run_stages(s, stages, max_dim, budget, &|_, _| true, "all")
}

/// Whether `u : A -> X` extends along `A ⊆ Δⁿ`.
fn extends(inc: &MonoInclusion, u: &[Vec<Simplex>], index: &TargetIndex, budget: u64) -> Result<bool, CoreError> {
    let fixed = inc
        .source()
        .cells()
        .map(|c| (inc.map().image(c).base, u[c.dim][c.index].clone()))
        .collect::<Vec<_>>();
    Ok(MapSearch::new(inc.target(), index).fix_all(fixed).budget(budget).first()?.is_some())
}

#[derive(Clone, Debug)]
pub struct Saturation {
    pub complex: Arc<SimplicialSet>,
    pub inclusion: MonoInclusion,
    pub certificate: AnodyneCertificate,
    pub up_to: usize,
    /// New cells whose `d₀` face is constant.
    pub p2_violations: Vec<String>,
    /// Vertex pairs and levels where the left mapping spaces differ.
    pub mapping_mismatches: Vec<String>,
}

impl Saturation {
    pub fn p2_holds(&self) -> bool {
        self.p2_violations.is_empty()
    }

    pub fn mapping_spaces_agree(&self) -> bool {
        self.mapping_mismatches.is_empty()
    }
}

/// Skeletal saturation of a pre-fibrant complex through dimension `up_to`.
///
/// Stage `n` adds the `n`-cells of `S`, then fills every inner horn
/// `Λⁿᵢ` whose `d₀` face is non-constant and which has no filler yet.
pub fn saturate_prefibrant(s: &Arc<SimplicialSet>, up_to: usize, budget: u64) -> Result<Saturation, CoreError> {
    let report = is_prefibrant(s, up_to, budget);
    if !report.holds() {
        return Err(CoreError::Precondition(format!("input is not pre-fibrant up to dimension {up_to}")));
    }
    let top = s.dim().unwrap_or(0);
    let mut images: Vec<Vec<Simplex>> = vec![Vec::new(); levels(s)];
    let mut b = Builder::new();
    let add_level = |b: &mut Builder, images: &mut Vec<Vec<Simplex>>, d: usize| -> Result<(), CoreError> {
        for c in s.cells_of_dim(d) {
            let faces = s.faces(c).iter().map(|f| push_simplex(images, f)).collect();
            let id = b.push(d, Some(s.name(c)), faces)?;
            images[d].push(Simplex::cell(id));
        }
        Ok(())
    };
    for d in 0..=top.min(2) {
        if d < levels(s) {
            add_level(&mut b, &mut images, d)?;
        }
    }
    let mut steps = Vec::new();
    let mut new_cells: BTreeSet<CellId> = BTreeSet::new();
    for n in 3..=up_to {
        if n < levels(s) {
            add_level(&mut b, &mut images, n)?;
        }
        let current = Arc::new(b.build()?);
        let index = TargetIndex::new(current.clone());
        let mut chosen = Vec::new();
        for i in 1..n {
            let g = Cofibration::horn(n, i);
            let mut failure = Ok(());
            MapSearch::new(g.inclusion.source(), &index).budget(budget).run(|u| {
                if d0_constant(&g, u) {
                    return ControlFlow::Continue(());
                }
                match extends(&g.inclusion, u, &index, budget) {
                    Ok(true) => {}
                    Ok(false) => chosen.push((g.clone(), u.to_vec())),
                    Err(e) => {
                        failure = Err(e);
                        return ControlFlow::Break(());
                    }
                }
                ControlFlow::Continue(())
            })?;
            failure?;
        }
        b = Builder::from_complex(&current);
        for (k, (g, u)) in chosen.iter().enumerate() {
            let CofibrationKind::Horn { n, i } = g.kind else { unreachable!() };
            let att = attach_into_named(&mut b, &g.inclusion, u, &format!("t{n}a{k}_"))?;
            let sigma = att[n][0].base;
            let tau = b.faces(sigma)[i].base;
            new_cells.insert(sigma);
            new_cells.insert(tau);
            steps.push((n, i, sigma, tau));
        }
    }
    for d in up_to.max(2) + 1..levels(s) {
        add_level(&mut b, &mut images, d)?;
    }
    let t = Arc::new(b.build()?);
    let inclusion = MonoInclusion::new(SimplicialMap::new(s.clone(), t.clone(), images)?)?;
    let certificate = AnodyneCertificate {
        class: HornClass::Inner,
        steps: steps
            .iter()
            .map(|&(n, i, sigma, tau)| CertificateStep { n, i, top: t.name(sigma), face: t.name(tau) })
            .collect(),
    };
    let p2_violations = new_cells
        .iter()
        .filter(|c| t.faces(**c)[0].is_constant())
        .map(|c| t.name(*c))
        .collect();
    let mapping_mismatches = compare_mapping_spaces(&inclusion, up_to.saturating_sub(2))?;
    Ok(Saturation { complex: t, inclusion, certificate, up_to, p2_violations, mapping_mismatches })
}

/// Compares level sets of `Hom^L` on both sides of an inclusion.
pub fn compare_mapping_spaces(inc: &MonoInclusion, up_to: usize) -> Result<Vec<String>, CoreError> {
    let (s, t) = (inc.source(), inc.target());
    let mut out = Vec::new();
    for x in s.cells_of_dim(0) {
        for y in s.cells_of_dim(0) {
            let hs = hom_left(s, x, y, up_to)?;
            let ht = hom_left(t, inc.map().image(x).base, inc.map().image(y).base, up_to)?;
            for k in 0..=up_to {
                let mut mapped: Vec<Simplex> = hs.level(k).iter().map(|u| inc.map().apply(u)).collect();
                mapped.sort();
                let mut there = ht.level(k).to_vec();
                there.sort();
                if mapped != there {
                    out.push(format!(
                        "Hom^L({}, {}) level {k}: {} versus {}",
                        s.name(x),
                        s.name(y),
                        mapped.len(),
                        there.len()
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// A complex `Y` over a base, grown by attaching cells over given simplices.
struct Growing {
    builder: Builder,
    over: Vec<Vec<Simplex>>,
}

impl Growing {
    fn new(y: &SimplicialSet, q: &SimplicialMap) -> Self {
        Self { builder: Builder::from_complex(y), over: q.images().to_vec() }
    }

    /// Attaches `Δⁿ` along `inc` and records each new cell's image, which is
    /// `β` acted on by the cell's vertices.
    fn attach(&mut self, inc: &MonoInclusion, u: &[Vec<Simplex>], base: &SimplicialSet, beta: &Simplex, prefix: &str) -> Result<Vec<Vec<Simplex>>, CoreError> {
        let images = attach_into_named(&mut self.builder, inc, u, prefix)?;
        let delta = inc.target();
        for c in delta.cells() {
            if inc.covers(c) {
                continue;
            }
            let id = images[c.dim][c.index].base;
            if self.over.len() <= c.dim {
                self.over.resize(c.dim + 1, Vec::new());
            }
            debug_assert_eq!(self.over[c.dim].len(), id.index);
            self.over[c.dim].push(base.act(beta, delta.cell_vertices(c)));
        }
        Ok(images)
    }

    fn finish(self, base: &Arc<SimplicialSet>) -> Result<(Arc<SimplicialSet>, SimplicialMap), CoreError> {
        let y = Arc::new(self.builder.build()?);
        let mut over = self.over;
        over.truncate(levels(&y));
        let q = SimplicialMap::new(y.clone(), base.clone(), over)?;
        Ok((y, q))
    }
}

/// Whether `X -> A ×_B Y` is an isomorphism, where `g : X -> Y` and
/// `p : X -> A` are given and `i : A ⊆ B`, `q : Y -> B`.
pub fn pullback_is_source(p: &SimplicialMap, i: &MonoInclusion, q: &SimplicialMap, g: &SimplicialMap) -> Result<bool, CoreError> {
    let prod = pullback(i.map(), q)?;
    let pair = prod.pairing(p, g)?;
    Ok(pair.is_mono() && prod.complex.counts() == p.source().counts())
}

#[derive(Clone, Debug)]
pub struct TriangleDescent {
    /// `C(0) = X, C(1), …`.
    pub stages: Vec<Arc<SimplicialSet>>,
    /// `C(m) -> Δ²`.
    pub over: Vec<SimplicialMap>,
    /// Number of horns attached at each stage.
    pub attached: Vec<usize>,
    pub inclusion: MonoInclusion,
    pub max_dim: usize,
}

/// Attaches, stage by stage, fillers for inner horn problems against
/// `C(m) -> Δ²` whose base simplex does not lie in `Λ²₁`, and checks after
/// each stage that `X` is the pullback of `C(m)` to `Λ²₁`.
pub fn descend_over_triangle(p: &SimplicialMap, stages: usize, max_dim: usize, budget: u64) -> Result<TriangleDescent, CoreError> {
    let lambda = Cofibration::horn(2, 1).inclusion;
    if **p.target() != **lambda.source() {
        return Err(CoreError::Precondition("the base must be the horn Λ²₁".into()));
    }
    let generators = inner_horns(max_dim);
    if let RlpVerdict::No(_) = has_rlp(p, &generators, max_dim, budget) {
        return Err(CoreError::Precondition("the map is not an inner fibration".into()));
    }
    let delta2 = lambda.target().clone();
    let x = p.source().clone();
    let mut q = p.then(lambda.map())?;
    let mut out = TriangleDescent {
        stages: vec![x.clone()],
        over: vec![q.clone()],
        attached: Vec::new(),
        inclusion: MonoInclusion::identity(x.clone()),
        max_dim,
    };
    let in_horn = |s: &Simplex| lambda.covers(s.base);
    for m in 1..=stages {
        let c = out.stages.last().unwrap().clone();
        let index = TargetIndex::new(c.clone());
        let mut chosen = Vec::new();
        for g in &generators {
            let a = g.inclusion.source();
            for beta in delta2.simplices(g.dim()).into_iter().filter(|b| !in_horn(b)) {
                let on_a = (0..levels(a))
                    .map(|d| a.cells_of_dim(d).map(|cell| delta2.act(&beta, a.cell_vertices(cell))).collect())
                    .collect();
                for u in MapSearch::new(a, &index).over(Over { p: &q, images: on_a }).budget(budget).all()? {
                    chosen.push((g, beta.clone(), u));
                }
            }
        }
        let mut grow = Growing::new(&c, &q);
        for (k, (g, beta, u)) in chosen.iter().enumerate() {
            grow.attach(&g.inclusion, u, &delta2, beta, &format!("c{m}a{k}_"))?;
        }
        let (next, next_q) = grow.finish(&delta2)?;
        out.attached.push(chosen.len());
        let g = stage_inclusion(&x, &next)?;
        if !pullback_is_source(p, &lambda, &next_q, g.map())? {
            return Err(CoreError::Malformed(format!("pullback check failed at stage {m}")));
        }
        out.inclusion = g;
        out.stages.push(next);
        out.over.push(next_q.clone());
        q = next_q;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum DescentSearch {
    Found { complex: Arc<SimplicialSet>, over: SimplicialMap, inclusion: MonoInclusion },
    /// Every extension with new cells up to this dimension was ruled out.
    None { max_dim: usize },
    Budget(u64),
}

/// Looks for `Y ⊇ X` over `B`, with new cells over `B ∖ A` only, such that
/// `Y -> B` has the inner horn lifting property through `max_dim`.
pub fn search_descent_extension(p: &SimplicialMap, i: &MonoInclusion, max_dim: usize, budget: u64) -> Result<DescentSearch, CoreError> {
    if !Arc::ptr_eq(p.target(), i.source()) && **p.target() != **i.source() {
        return Err(CoreError::NotComposable);
    }
    let q = p.then(i.map())?;
    let mut nodes = 0;
    let x = p.source().clone();
    match descent_dfs(&x, q, i, max_dim, budget, &mut nodes)? {
        Some((y, over)) => {
            let inclusion = stage_inclusion(&x, &y)?;
            debug_assert!(pullback_is_source(p, i, &over, inclusion.map())?);
            Ok(DescentSearch::Found { complex: y, over, inclusion })
        }
        None if nodes > budget => Ok(DescentSearch::Budget(budget)),
        None => Ok(DescentSearch::None { max_dim }),
    }
}

fn descent_dfs(
    y: &Arc<SimplicialSet>,
    q: SimplicialMap,
    i: &MonoInclusion,
    max_dim: usize,
    budget: u64,
    nodes: &mut u64,
) -> Result<Option<(Arc<SimplicialSet>, SimplicialMap)>, CoreError> {
    *nodes += 1;
    if *nodes > budget {
        return Ok(None);
    }
    let index = TargetIndex::new(y.clone());
    let base = i.target().clone();
    let mut witness = None;
    for g in inner_horns(max_dim) {
        match check_generator(&q, &g, &index, budget, &|_, _| true) {
            Ok(Some(w)) => {
                witness = Some((g, w));
                break;
            }
            Ok(None) => {}
            Err(CoreError::Budget(_)) => {
                *nodes = budget + 1;
                return Ok(None);
            }
            Err(e) => return Err(e),
        }
    }
    let Some((g, w)) = witness else { return Ok(Some((y.clone(), q))) };
    let CofibrationKind::Horn { n, i: k } = g.kind else { unreachable!() };
    let beta = w.v.image(CellId::new(n, 0)).clone();
    if i.covers(beta.base) {
        return Ok(None);
    }
    let horn_dom = g.inclusion.source();
    let boundary = Cofibration::boundary(n).inclusion;
    let bd = boundary.source();
    let beta_on = |a: &SimplicialSet| -> Vec<Vec<Simplex>> {
        (0..levels(a)).map(|d| a.cells_of_dim(d).map(|c| base.act(&beta, a.cell_vertices(c))).collect()).collect()
    };
    let fixed: Vec<(CellId, Simplex)> = horn_dom
        .cells()
        .map(|c| (bd.cell_by_name(&horn_dom.name(c)).expect("horns lie in the boundary"), w.u.image(c).clone()))
        .collect();
    let over_bd = beta_on(bd);
    let closings = MapSearch::new(bd, &index)
        .fix_all(fixed)
        .over(Over { p: &q, images: over_bd })
        .budget(budget)
        .all();
    let closings = match closings {
        Ok(c) => c,
        Err(CoreError::Budget(_)) => {
            *nodes = budget + 1;
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    for u in closings {
        let mut grow = Growing::new(y, &q);
        grow.attach(&boundary, &u, &base, &beta, &format!("y{}_", *nodes))?;
        let (next, next_q) = grow.finish(&base)?;
        if let Some(found) = descent_dfs(&next, next_q, i, max_dim, budget, nodes)? {
            return Ok(Some(found));
        }
        if *nodes > budget {
            return Ok(None);
        }
    }
    let face_beta = base.face(&beta, k)?;
    if !i.covers(face_beta.base) {
        let mut grow = Growing::new(y, &q);
        grow.attach(&g.inclusion, w.u.images(), &base, &beta, &format!("y{}_", *nodes))?;
        let (next, next_q) = grow.finish(&base)?;
        if let Some(found) = descent_dfs(&next, next_q, i, max_dim, budget, nodes)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct PathSpaceFactorization {
    /// `Q(f)`, truncated at `up_to`.
    pub complex: Arc<SimplicialSet>,
    /// `i : C -> Q(f)`.
    pub include: SimplicialMap,
    /// `π : Q(f) -> D`.
    pub project: SimplicialMap,
    /// `Q(f) -> C`, a retraction of `i`.
    pub first: SimplicialMap,
    pub up_to: usize,
}

/// `Q(f) = C ×_D D^(Δ¹)` with `D^(Δ¹) -> D` evaluation at `0`, and
/// `π` evaluation at `1`. Requires `up_to ≥ dim C`.
pub fn mapping_path_space(f: &SimplicialMap, up_to: usize, budget: u64) -> Result<PathSpaceFactorization, CoreError> {
    let (c, d) = (f.source(), f.target());
    if c.dim().is_some_and(|n| n > up_to) {
        return Err(CoreError::Precondition(format!("the truncation bound {up_to} is below the dimension of the source")));
    }
    let paths = restricted_function_complex(d, &Arc::new(standard_simplex(1)), up_to, budget)?;
    let ev0 = paths.evaluation(0)?;
    let ev1 = paths.evaluation(1)?;
    let prod = pullback(f, &ev0)?;
    let q = skeleton(&prod.complex, up_to);
    let q_complex = q.source().clone();
    let restrict = |m: &SimplicialMap| q.map().then(m);
    let first = restrict(&prod.projection_left())?;
    let project = restrict(&prod.projection_right())?.then(&ev1)?;
    let mut images = Vec::with_capacity(levels(c));
    for dim in 0..levels(c) {
        let mut level = Vec::with_capacity(c.count(dim));
        for cell in c.cells_of_dim(dim) {
            let x = Simplex::cell(cell);
            let path = paths.constant(f.image(cell));
            let p = paths
                .space
                .simplex(&path)
                .ok_or_else(|| CoreError::Malformed("a constant path is missing".into()))?;
            let pair = prod.simplex(&x, p).ok_or_else(|| CoreError::Malformed("the pullback misses a constant path".into()))?;
            let here = q
                .preimage(pair.base)
                .map(|b| Simplex::from_parts_unchecked(b, pair.word().to_vec()))
                .ok_or_else(|| CoreError::Malformed("truncation misses the image of the source".into()))?;
            level.push(here);
        }
        images.push(level);
    }
    let include = SimplicialMap::new(c.clone(), q_complex.clone(), images)?;
    if include.then(&project)?.images() != f.images() {
        return Err(CoreError::Malformed("π∘i differs from f".into()));
    }
    if include.then(&first)?.images() != SimplicialMap::identity(c.clone()).images() {
        return Err(CoreError::Malformed("i is not a section of the first projection".into()));
    }
    Ok(PathSpaceFactorization { complex: q_complex, include, project, first, up_to })
}

/// `Λ²₁`, for building inputs over it.
pub fn lambda21() -> Arc<SimplicialSet> {
    Arc::new(horn(2, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_certificate;
    use crate::generators::{inclusion_by_names, simplex_subcomplex};

    const B: u64 = 1_000_000;

    #[test]
    fn prefibrancy_examples() {
        let d2 = Arc::new(standard_simplex(2));
        let r = is_prefibrant(&d2, 3, B);
        assert!(r.holds());
        let h = lambda21();
        let r = is_prefibrant(&h, 3, B);
        assert!(r.lambda21.is_no());
        assert!(!r.holds());
    }

    #[test]
    fn stage_counts() {
        let g = inner_horns(2);
        let (next, _, att) = soa_stage(&lambda21(), &g, &|_, _| true, B, 1).unwrap();
        assert_eq!(att.len(), 8);
        assert_eq!(next.total_cells() - horn(2, 1).total_cells(), 16);
        let pt = Arc::new(standard_simplex(0));
        let (next, _, att) = soa_stage(&pt, &g, &|_, _| true, B, 1).unwrap();
        assert_eq!(att.len(), 1);
        assert_eq!(next.total_cells(), 3);
        let (next, _, att) = soa_stage(&pt, &g, &|_, _| false, B, 1).unwrap();
        assert!(att.is_empty());
        assert_eq!(*next, *pt);
    }

    #[test]
    fn prefibrantize_fills_the_horn() {
        let h = lambda21();
        let trace = prefibrantize(&h, 1, 2, B).unwrap();
        let inc = trace.total_inclusion().unwrap();
        let u = Cofibration::horn(2, 1);
        let images: Vec<Vec<Simplex>> = (0..2).map(|d| h.cells_of_dim(d).map(|c| inc.map().image(c).clone()).collect()).collect();
        let index = TargetIndex::new(trace.last().clone());
        assert!(extends(&u.inclusion, &images, &index, B).unwrap());
        let cert = trace.certificate(0);
        assert!(verify_certificate(&cert, &trace.inclusions[0]).unwrap());
    }

    #[test]
    fn saturating_a_triangle() {
        let d2 = Arc::new(standard_simplex(2));
        let sat = saturate_prefibrant(&d2, 4, B).unwrap();
        assert!(sat.p2_holds());
        assert!(sat.mapping_spaces_agree());
        let t = &sat.complex;
        let h = hom_left(t, t.cell_by_name("0").unwrap(), t.cell_by_name("2").unwrap(), 0).unwrap();
        assert_eq!(h.level(0).len(), 1);
        assert_eq!(t.name(h.level(0)[0].base), "02");
        assert!(verify_certificate(&sat.certificate, &sat.inclusion).unwrap());
        assert!(saturate_prefibrant(&lambda21(), 3, B).is_err());
    }

    #[test]
    fn descent_over_the_horn() {
        let h = lambda21();
        let id = SimplicialMap::identity(h.clone());
        let d = descend_over_triangle(&id, 2, 2, B).unwrap();
        assert_eq!(d.attached[0], 1);
        assert_eq!(d.stages[1].counts(), vec![3, 3, 1]);

        let two = Arc::new(simplex_subcomplex(3, &[vec![0, 1], vec![2, 3]]));
        let names = |n: &str| match n {
            "0" => "0",
            "1" | "2" => "1",
            "3" => "2",
            "01" => "01",
            _ => "12",
        };
        let images = (0..2)
            .map(|d| two.cells_of_dim(d).map(|c| Simplex::cell(h.cell_by_name(names(&two.name(c))).unwrap())).collect())
            .collect();
        let p = SimplicialMap::new(two.clone(), h.clone(), images).unwrap();
        let d = descend_over_triangle(&p, 2, 2, B).unwrap();
        assert_eq!(d.attached, vec![0, 0]);
    }

    #[test]
    fn descent_search() {
        let h = lambda21();
        let i = Cofibration::horn(2, 1).inclusion;
        let id = SimplicialMap::identity(h.clone());
        match search_descent_extension(&id, &i, 2, 10_000).unwrap() {
            DescentSearch::Found { complex, .. } => assert_eq!(complex.counts(), vec![3, 3, 1]),
            other => panic!("{other:?}"),
        }

        let l31 = Cofibration::horn(3, 1).inclusion;
        let x = Arc::new(simplex_subcomplex(3, &[vec![0, 2], vec![2, 3]]));
        let p = inclusion_by_names(x, l31.source().clone()).unwrap();
        match search_descent_extension(p.map(), &l31, 2, 10_000).unwrap() {
            DescentSearch::None { max_dim } => assert_eq!(max_dim, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn path_space_examples() {
        let pt = Arc::new(standard_simplex(0));
        let q = mapping_path_space(&SimplicialMap::identity(pt.clone()), 1, B).unwrap();
        assert_eq!(q.complex.counts(), vec![1]);
        let d1 = Arc::new(standard_simplex(1));
        let v0 = inclusion_by_names(pt.clone(), d1.clone()).unwrap();
        let q = mapping_path_space(v0.map(), 0, B).unwrap();
        assert_eq!(q.complex.counts(), vec![1]);
        let d2 = Arc::new(standard_simplex(2));
        let edge = inclusion_by_names(d1.clone(), d2.clone()).unwrap();
        let q = mapping_path_space(edge.map(), 2, B).unwrap();
        assert_eq!(q.include.then(&q.project).unwrap(), *edge.map());
    }
}
