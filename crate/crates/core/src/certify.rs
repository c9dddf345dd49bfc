//! Cellular anodyne certificates, their verification and exhaustive search,
//! and a classifier for inner anodyne monomorphisms.
//!
//! A step attaches `Δⁿ` along `Λⁿᵢ` and so creates two cells: an `n`-cell
//! `σ` and its face `τ = d_i σ`. A certificate for `A ⊆ B` is a sequence of
//! steps creating every cell of `B ∖ A`.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::complex::SimplicialSet;
use crate::error::CoreError;
use crate::generators::HornClass;
use crate::homotopy::{homotopy_category, pi0};
use crate::map::MonoInclusion;
use crate::mapping::hom_left;
use crate::simplex::CellId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateStep {
    pub n: usize,
    pub i: usize,
    /// The attached `n`-cell.
    pub top: String,
    /// Its `i`-th face, created with it.
    pub face: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnodyneCertificate {
    pub class: HornClass,
    pub steps: Vec<CertificateStep>,
}

impl AnodyneCertificate {
    pub fn to_text(&self) -> String {
        let mut out = format!("certificate {}\n", self.class);
        for s in &self.steps {
            out.push_str(&format!("step {} {} {} {}\n", s.n, s.i, s.top, s.face));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, CoreError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line: usize, msg: &str| CoreError::Parse { line, msg: msg.to_owned() };
        let (ln, head) = lines.next().ok_or_else(|| bad(1, "missing `certificate <class>` header"))?;
        let class = head
            .strip_prefix("certificate ")
            .ok_or_else(|| bad(ln, "expected `certificate <class>`"))?
            .trim()
            .parse()
            .map_err(|_| bad(ln, "unknown class"))?;
        let mut steps = Vec::new();
        for (ln, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let ["step", n, i, top, face] = parts[..] else {
                return Err(bad(ln, "expected `step <n> <i> <top> <face>`"));
            };
            let n = n.parse().map_err(|_| bad(ln, "bad dimension"))?;
            let i = i.parse().map_err(|_| bad(ln, "bad face index"))?;
            steps.push(CertificateStep { n, i, top: top.into(), face: face.into() });
        }
        Ok(Self { class, steps })
    }
}

/// The cell created with `σ` by attaching along `Λⁿᵢ`, if the move is legal
/// from `present`.
fn creatable(b: &SimplicialSet, present: &HashSet<CellId>, sigma: CellId, i: usize) -> Result<Option<CellId>, CoreError> {
    let faces = b.faces(sigma);
    let tau = &faces[i];
    if present.contains(&sigma) || !tau.is_nondegenerate() || present.contains(&tau.base) {
        return Ok(None);
    }
    for (j, f) in faces.iter().enumerate() {
        if j == i {
            continue;
        }
        if f.base == tau.base {
            return Ok(None);
        }
        if !present.contains(&f.base) {
            return Err(CoreError::Precondition(format!(
                "face {j} of {} is missing, so the horn is not in the complex",
                b.name(sigma)
            )));
        }
    }
    Ok(Some(tau.base))
}

/// Replays the steps from `A`. Missing horn faces are a structural error;
/// any other mismatch gives `false`.
pub fn verify_certificate(cert: &AnodyneCertificate, inc: &MonoInclusion) -> Result<bool, CoreError> {
    let b = inc.target();
    let mut present: HashSet<CellId> = b.cells().filter(|c| inc.covers(*c)).collect();
    for step in &cert.steps {
        if !cert.class.admits(step.n, step.i) {
            return Ok(false);
        }
        let (Some(sigma), Some(tau)) = (b.cell_by_name(&step.top), b.cell_by_name(&step.face)) else {
            return Ok(false);
        };
        if sigma.dim != step.n || step.i > step.n || step.n == 0 {
            return Ok(false);
        }
        match creatable(b, &present, sigma, step.i)? {
            Some(t) if t == tau => {
                present.insert(sigma);
                present.insert(tau);
            }
            _ => return Ok(false),
        }
    }
    Ok(present.len() == b.total_cells())
}

#[derive(Clone, Debug)]
pub enum CertificateSearch {
    Found(AnodyneCertificate),
    /// Every attachment order was explored.
    Exhausted,
    Budget(u64),
}

/// Order in which candidate steps are tried.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StepOrder {
    #[default]
    Ascending,
    Descending,
}

/// Complete search over attachment orders, with memoized dead states.
pub fn search_certificate(inc: &MonoInclusion, class: HornClass, budget: u64) -> CertificateSearch {
    search_certificate_ordered(inc, class, budget, StepOrder::Ascending)
}

pub fn search_certificate_ordered(inc: &MonoInclusion, class: HornClass, budget: u64, order: StepOrder) -> CertificateSearch {
    let b = inc.target();
    let missing: Vec<CellId> = inc.missing_cells();
    let present: HashSet<CellId> = b.cells().filter(|c| inc.covers(*c)).collect();
    if missing.len() % 2 == 1 {
        return CertificateSearch::Exhausted;
    }
    let mut dead: HashSet<BTreeSet<CellId>> = HashSet::new();
    let mut nodes = 0u64;
    let mut steps = Vec::new();
    let mut missing_set: BTreeSet<CellId> = missing.iter().copied().collect();
    let mut present = present;
    match dfs(b, class, order, &mut present, &mut missing_set, &mut dead, &mut steps, &mut nodes, budget) {
        Ok(true) => CertificateSearch::Found(AnodyneCertificate { class, steps }),
        Ok(false) => CertificateSearch::Exhausted,
        Err(n) => CertificateSearch::Budget(n),
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    b: &SimplicialSet,
    class: HornClass,
    order: StepOrder,
    present: &mut HashSet<CellId>,
    missing: &mut BTreeSet<CellId>,
    dead: &mut HashSet<BTreeSet<CellId>>,
    steps: &mut Vec<CertificateStep>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool, u64> {
    if missing.is_empty() {
        return Ok(true);
    }
    if dead.contains(missing) {
        return Ok(false);
    }
    let mut candidates: Vec<CellId> = missing.iter().copied().filter(|c| c.dim > 0).collect();
    if order == StepOrder::Descending {
        candidates.reverse();
    }
    for sigma in candidates {
        for i in (0..=sigma.dim).filter(|&i| class.admits(sigma.dim, i)) {
            let Ok(Some(tau)) = creatable(b, present, sigma, i) else { continue };
            *nodes += 1;
            if *nodes > budget {
                return Err(budget);
            }
            present.insert(sigma);
            present.insert(tau);
            missing.remove(&sigma);
            missing.remove(&tau);
            steps.push(CertificateStep { n: sigma.dim, i, top: b.name(sigma), face: b.name(tau) });
            if dfs(b, class, order, present, missing, dead, steps, nodes, budget)? {
                return Ok(true);
            }
            steps.pop();
            present.remove(&sigma);
            present.remove(&tau);
            missing.insert(sigma);
            missing.insert(tau);
        }
    }
    dead.insert(missing.clone());
    Ok(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Refutation {
    NotVertexBijective,
    /// A hom-set of `h` that the inclusion cannot carry bijectively.
    EquivalenceRefuted { detail: String, cellular_search_exhausted: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ClassifierVerdict {
    InnerAnodyne(AnodyneCertificate),
    NotInnerAnodyne(Refutation),
    Unknown(Vec<String>),
}

impl ClassifierVerdict {
    /// `Some(true)` / `Some(false)` for definite verdicts.
    pub fn definite(&self) -> Option<bool> {
        match self {
            Self::InnerAnodyne(_) => Some(true),
            Self::NotInnerAnodyne(_) => Some(false),
            Self::Unknown(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifierBounds {
    pub node_budget: u64,
    pub word_budget: usize,
}

impl Default for ClassifierBounds {
    fn default() -> Self {
        Self { node_budget: crate::search::DEFAULT_NODE_BUDGET, word_budget: crate::homotopy::DEFAULT_WORD_BUDGET }
    }
}

/// Compares `h(A)(a, b)` with `h(B)(a, b)` for every pair of vertices.
fn refute_on_homotopy_categories(inc: &MonoInclusion, word_budget: usize) -> Result<String, Vec<String>> {
    let a = inc.source();
    let b = inc.target();
    let ha = homotopy_category(a, word_budget);
    let hb = homotopy_category(b, word_budget);
    let mut notes = Vec::new();
    for x in 0..a.count(0) {
        for y in 0..a.count(0) {
            let (ix, iy) = (inc.map().vertex_image(x), inc.map().vertex_image(y));
            let ea = ha.hom_set(x, y);
            let eb = hb.hom_set(ix, iy);
            let name = |v: usize| a.name(CellId::new(0, v));
            if ea.is_exact() && eb.is_exact() && ea.elements.len() != eb.elements.len() {
                return Ok(format!(
                    "h(A)({}, {}) has {} elements but h(B) has {}",
                    name(x),
                    name(y),
                    ea.elements.len(),
                    eb.elements.len()
                ));
            }
            if !(ea.is_exact() && eb.is_exact()) {
                notes.push(format!("hom-set ({}, {}) truncated at word length {word_budget}", name(x), name(y)));
            }
        }
    }
    Err(notes)
}

#[allow(non_snake_case)]
pub fn theoremC_classify(inc: &MonoInclusion, bounds: ClassifierBounds) -> ClassifierVerdict {
    if !inc.map().is_vertex_bijective() {
        return ClassifierVerdict::NotInnerAnodyne(Refutation::NotVertexBijective);
    }
    let search = search_certificate(inc, HornClass::Inner, bounds.node_budget);
    let exhausted = match search {
        CertificateSearch::Found(cert) => return ClassifierVerdict::InnerAnodyne(cert),
        CertificateSearch::Exhausted => true,
        CertificateSearch::Budget(_) => false,
    };
    match refute_on_homotopy_categories(inc, bounds.word_budget) {
        Ok(detail) => ClassifierVerdict::NotInnerAnodyne(Refutation::EquivalenceRefuted {
            detail,
            cellular_search_exhausted: exhausted,
        }),
        Err(mut notes) => {
            notes.insert(
                0,
                if exhausted {
                    "no cellular inner certificate exists".into()
                } else {
                    format!("certificate search exceeded {} nodes", bounds.node_budget)
                },
            );
            notes.extend(mapping_space_diagnostics(inc));
            ClassifierVerdict::Unknown(notes)
        }
    }
}

/// `π₀` of left mapping spaces on both sides, for the record.
fn mapping_space_diagnostics(inc: &MonoInclusion) -> Vec<String> {
    let a = inc.source();
    let b = inc.target();
    let mut out = Vec::new();
    for x in a.cells_of_dim(0) {
        for y in a.cells_of_dim(0) {
            let ix = CellId::new(0, inc.map().vertex_image(x.index));
            let iy = CellId::new(0, inc.map().vertex_image(y.index));
            let (Ok(ha), Ok(hb)) = (hom_left(a, x, y, 1), hom_left(b, ix, iy, 1)) else { continue };
            let (ca, cb) = (pi0(ha.complex()).len(), pi0(hb.complex()).len());
            if ca != cb {
                out.push(format!("π₀ Hom^L({}, {}): {ca} on the source, {cb} on the target", a.name(x), a.name(y)));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct TwoOutOfThreeReport {
    pub u: ClassifierVerdict,
    pub v: ClassifierVerdict,
    pub vu: ClassifierVerdict,
    /// Two definite positives with a definite negative.
    pub alarm: bool,
}

pub fn check_two_out_of_three(u: &MonoInclusion, v: &MonoInclusion, bounds: ClassifierBounds) -> Result<TwoOutOfThreeReport, CoreError> {
    let vu = u.then(v)?;
    let cu = theoremC_classify(u, bounds);
    let cv = theoremC_classify(v, bounds);
    let cvu = theoremC_classify(&vu, bounds);
    let d = [cu.definite(), cv.definite(), cvu.definite()];
    let yes = d.iter().filter(|x| **x == Some(true)).count();
    let no = d.iter().filter(|x| **x == Some(false)).count();
    Ok(TwoOutOfThreeReport { u: cu, v: cv, vu: cvu, alarm: yes == 2 && no == 1 })
}

/// A certificate for the inclusion of a domain into its own identity.
pub fn empty_certificate(class: HornClass) -> AnodyneCertificate {
    AnodyneCertificate { class, steps: Vec::new() }
}

pub fn arc_inclusion(a: Arc<SimplicialSet>, b: Arc<SimplicialSet>) -> Result<MonoInclusion, CoreError> {
    crate::generators::inclusion_by_names(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::square_in_simplex;
    use crate::generators::{horn, inclusion_by_names, spine, standard_simplex, Cofibration};

    fn inc(a: SimplicialSet, b: SimplicialSet) -> MonoInclusion {
        inclusion_by_names(Arc::new(a), Arc::new(b)).unwrap()
    }

    #[test]
    fn one_step_horn_certificate() {
        let i = Cofibration::horn(2, 1).inclusion;
        let cert = AnodyneCertificate {
            class: HornClass::Inner,
            steps: vec![CertificateStep { n: 2, i: 1, top: "012".into(), face: "02".into() }],
        };
        assert!(verify_certificate(&cert, &i).unwrap());
        let wrong = Cofibration::horn(2, 0).inclusion;
        assert!(!verify_certificate(&cert, &wrong).unwrap());
        assert_eq!(AnodyneCertificate::parse(&cert.to_text()).unwrap(), cert);
    }

    #[test]
    fn spine_of_a_three_simplex() {
        let i = inc(spine(3), standard_simplex(3));
        let cert = AnodyneCertificate {
            class: HornClass::Inner,
            steps: [("012", "02", 2, 1), ("123", "13", 2, 1), ("013", "03", 2, 1), ("0123", "023", 3, 1)]
                .iter()
                .map(|&(t, f, n, i)| CertificateStep { n, i, top: t.into(), face: f.into() })
                .collect(),
        };
        assert!(verify_certificate(&cert, &i).unwrap());
        match search_certificate(&i, HornClass::Inner, 100_000) {
            CertificateSearch::Found(c) => {
                assert_eq!(c.steps.len(), 4);
                assert!(verify_certificate(&c, &i).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_horn_face_is_an_error() {
        let i = inc(spine(3), standard_simplex(3));
        let cert = AnodyneCertificate {
            class: HornClass::Inner,
            steps: vec![CertificateStep { n: 3, i: 1, top: "0123".into(), face: "023".into() }],
        };
        assert!(verify_certificate(&cert, &i).is_err());
    }

    #[test]
    fn square_certificates() {
        let sq = square_in_simplex();
        assert!(matches!(search_certificate(&sq, HornClass::Inner, 100_000), CertificateSearch::Exhausted));
        for class in [HornClass::Left, HornClass::Right] {
            match search_certificate(&sq, class, 100_000) {
                CertificateSearch::Found(c) => assert!(verify_certificate(&c, &sq).unwrap()),
                other => panic!("{class}: {other:?}"),
            }
        }
        let v = theoremC_classify(&sq, ClassifierBounds::default());
        assert!(matches!(v, ClassifierVerdict::NotInnerAnodyne(Refutation::EquivalenceRefuted { cellular_search_exhausted: true, .. })), "{v:?}");
    }

    #[test]
    fn classifier_examples() {
        let v = theoremC_classify(&Cofibration::horn(3, 2).inclusion, ClassifierBounds::default());
        assert!(matches!(v, ClassifierVerdict::InnerAnodyne(_)));
        let v = theoremC_classify(&Cofibration::horn(1, 0).inclusion, ClassifierBounds::default());
        assert_eq!(v, ClassifierVerdict::NotInnerAnodyne(Refutation::NotVertexBijective));
        let v = theoremC_classify(&Cofibration::boundary(1).inclusion, ClassifierBounds::default());
        assert!(matches!(v, ClassifierVerdict::NotInnerAnodyne(Refutation::EquivalenceRefuted { .. })));
    }

    #[test]
    fn certificates_are_class_monotone() {
        let i = inc(spine(3), standard_simplex(3));
        let CertificateSearch::Found(mut c) = search_certificate(&i, HornClass::Inner, 100_000) else { panic!() };
        for class in [HornClass::Left, HornClass::Right, HornClass::Kan] {
            c.class = class;
            assert!(verify_certificate(&c, &i).unwrap());
        }
    }

    #[test]
    fn right_cancellation_instance() {
        let u = inc(spine(3), horn(3, 1));
        let v = inc(horn(3, 1), standard_simplex(3));
        let r = check_two_out_of_three(&u, &v, ClassifierBounds::default()).unwrap();
        assert!(!r.alarm);
        assert!(matches!(r.u, ClassifierVerdict::InnerAnodyne(_)));
        assert!(matches!(r.vu, ClassifierVerdict::InnerAnodyne(_)));
        assert!(matches!(r.v, ClassifierVerdict::InnerAnodyne(_)));
    }
}
