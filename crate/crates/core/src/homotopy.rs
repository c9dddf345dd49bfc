//! Homotopy categories as presented categories, equivalence edges, `π₀`,
//! isofibration and Dwyer–Kan checks.
//!
//! `h(S)` is presented by the vertices, one generator per nondegenerate edge
//! and one relation `d₁σ = d₀σ ∘ d₂σ` per nondegenerate triangle, with
//! degenerate edges read as identities. Words are written in path order, so
//! the relation reads `[d₂σ] [d₀σ] = [d₁σ]`. Relations are completed under
//! shortlex order; when completion finishes, normal forms decide equality
//! and hom-sets are enumerated as irreducible paths.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::complex::SimplicialSet;
use crate::error::CoreError;
use crate::lifting::LiftingProblem;
use crate::map::{MonoInclusion, SimplicialMap};
use crate::rewriting::{CompletionBudget, RewriteSystem, Word};
use crate::simplex::{CellId, Simplex};

pub const DEFAULT_WORD_BUDGET: usize = 8;

/// A composable path of generators starting at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub source: usize,
    pub word: Word,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Closure {
    Exact,
    BudgetTruncated(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct HomSet {
    pub source: usize,
    pub target: usize,
    /// Irreducible representatives, one per class found.
    pub elements: Vec<Path>,
    pub status: Closure,
}

impl HomSet {
    pub fn is_exact(&self) -> bool {
        self.status == Closure::Exact
    }
}

#[derive(Clone, Debug)]
pub struct CategoryPresentation {
    complex: Arc<SimplicialSet>,
    /// Source and target vertex of each generator.
    ends: Vec<(usize, usize)>,
    relations: Vec<(Path, Path)>,
    system: RewriteSystem,
    word_budget: usize,
}

pub fn homotopy_category(s: &Arc<SimplicialSet>, word_budget: usize) -> CategoryPresentation {
    let ends = s
        .cells_of_dim(1)
        .map(|e| {
            let vs = s.cell_vertices(e);
            (vs[0], vs[1])
        })
        .collect();
    let mut pres = CategoryPresentation {
        complex: s.clone(),
        ends,
        relations: Vec::new(),
        system: RewriteSystem::default(),
        word_budget,
    };
    for t in s.cells_of_dim(2) {
        let f = s.faces(t);
        let v = s.cell_vertices(t);
        let mut lhs = pres.edge_word(&f[2]);
        lhs.extend(pres.edge_word(&f[0]));
        let rhs = pres.edge_word(&f[1]);
        pres.relations.push((Path { source: v[0], word: lhs }, Path { source: v[0], word: rhs }));
    }
    let equations: Vec<(Word, Word)> = pres.relations.iter().map(|(a, b)| (a.word.clone(), b.word.clone())).collect();
    pres.system = RewriteSystem::complete(&equations, CompletionBudget::default());
    pres
}

impl CategoryPresentation {
    pub fn complex(&self) -> &Arc<SimplicialSet> {
        &self.complex
    }

    pub fn objects(&self) -> usize {
        self.complex.count(0)
    }

    pub fn generator_ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn relations(&self) -> &[(Path, Path)] {
        &self.relations
    }

    pub fn is_confluent(&self) -> bool {
        self.system.confluent()
    }

    pub fn word_budget(&self) -> usize {
        self.word_budget
    }

    /// The word of an edge; degenerate edges are identities.
    pub fn edge_word(&self, e: &Simplex) -> Word {
        assert_eq!(e.dim(), 1);
        if e.is_nondegenerate() {
            vec![e.base.index as u32]
        } else {
            Vec::new()
        }
    }

    pub fn edge_path(&self, e: &Simplex) -> Path {
        Path { source: self.complex.vertex(e, 0), word: self.edge_word(e) }
    }

    pub fn target_of(&self, p: &Path) -> usize {
        p.word.last().map_or(p.source, |&g| self.ends[g as usize].1)
    }

    pub fn compose(&self, first: &Path, second: &Path) -> Path {
        debug_assert_eq!(self.target_of(first), second.source);
        let mut word = first.word.clone();
        word.extend_from_slice(&second.word);
        Path { source: first.source, word }
    }

    /// The image of a path of `h(X)` under `f : X -> Y`, in `target = h(Y)`.
    pub fn map_path(&self, f: &SimplicialMap, target: &CategoryPresentation, p: &Path) -> Path {
        let word = p
            .word
            .iter()
            .flat_map(|&g| target.edge_word(f.image(CellId::new(1, g as usize))))
            .collect();
        Path { source: f.vertex_image(p.source), word }
    }

    pub fn identity(&self, v: usize) -> Path {
        Path { source: v, word: Vec::new() }
    }

    /// `Some(true)` when provably equal, `Some(false)` when provably
    /// different, `None` when undecided within budget.
    pub fn equal(&self, a: &Path, b: &Path) -> Option<bool> {
        if a.source != b.source || self.target_of(a) != self.target_of(b) {
            return Some(false);
        }
        if self.system.confluent() {
            return Some(self.system.reduce(&a.word) == self.system.reduce(&b.word));
        }
        let limit = self.word_budget.max(a.word.len()).max(b.word.len());
        if self.bounded_class(a, limit).contains(&b.word) {
            Some(true)
        } else {
            None
        }
    }

    /// Paths reachable from `a` by single relation steps through words of
    /// length at most `limit`.
    fn bounded_class(&self, a: &Path, limit: usize) -> HashSet<Word> {
        let mut seen = HashSet::from([a.word.clone()]);
        let mut queue = VecDeque::from([a.word.clone()]);
        while let Some(w) = queue.pop_front() {
            for (l, r) in &self.relations {
                for (from, to) in [(&l.word, &r.word), (&r.word, &l.word)] {
                    if from.is_empty() {
                        continue;
                    }
                    for pos in 0..w.len().saturating_sub(from.len() - 1) {
                        if w[pos..pos + from.len()] == from[..] {
                            let mut next = w[..pos].to_vec();
                            next.extend_from_slice(to);
                            next.extend_from_slice(&w[pos + from.len()..]);
                            if next.len() <= limit && seen.insert(next.clone()) {
                                queue.push_back(next);
                            }
                        }
                    }
                }
            }
            // identity relations can also be inserted anywhere
            for (l, r) in &self.relations {
                for (from, to) in [(&l.word, &r.word), (&r.word, &l.word)] {
                    if !from.is_empty() || to.len() + w.len() > limit {
                        continue;
                    }
                    for pos in 0..=w.len() {
                        let at = if pos == 0 { a.source } else { self.ends[w[pos - 1] as usize].1 };
                        if l.source != at {
                            continue;
                        }
                        let mut next = w[..pos].to_vec();
                        next.extend_from_slice(to);
                        next.extend_from_slice(&w[pos..]);
                        if seen.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        seen
    }

    /// Every path from `v` of length at most `len` that is irreducible (or
    /// every path, when completion did not finish).
    fn paths_from(&self, v: usize, len: usize) -> Vec<Vec<Word>> {
        let mut by_len: Vec<Vec<Word>> = vec![vec![Vec::new()]];
        let out_edges: Vec<Vec<u32>> = {
            let mut out = vec![Vec::new(); self.objects()];
            for (g, &(a, _)) in self.ends.iter().enumerate() {
                out[a].push(g as u32);
            }
            out
        };
        for _ in 0..len {
            let mut next = Vec::new();
            for w in by_len.last().unwrap() {
                let end = w.last().map_or(v, |&g| self.ends[g as usize].1);
                for &g in &out_edges[end] {
                    let mut u = w.clone();
                    u.push(g);
                    if !self.system.confluent() || !self.system.has_reducible_suffix(&u) {
                        next.push(u);
                    }
                }
            }
            by_len.push(next);
        }
        by_len
    }

    pub fn hom_set(&self, a: usize, b: usize) -> HomSet {
        let l = self.word_budget;
        let by_len = self.paths_from(a, l + 1);
        let ends_at_b = |w: &Word| w.last().map_or(a, |&g| self.ends[g as usize].1) == b;
        if self.system.confluent() {
            let elements: Vec<Path> = by_len[..=l]
                .iter()
                .flatten()
                .filter(|w| ends_at_b(w))
                .map(|w| Path { source: a, word: w.clone() })
                .collect();
            let status = if by_len[l + 1].is_empty() { Closure::Exact } else { Closure::BudgetTruncated(l) };
            return HomSet { source: a, target: b, elements, status };
        }
        let mut classes: Vec<HashSet<Word>> = Vec::new();
        let mut elements = Vec::new();
        for w in by_len[..=l].iter().flatten().filter(|w| ends_at_b(w)) {
            if classes.iter().any(|c| c.contains(w)) {
                continue;
            }
            let p = Path { source: a, word: w.clone() };
            classes.push(self.bounded_class(&p, l));
            elements.push(p);
        }
        HomSet { source: a, target: b, elements, status: Closure::BudgetTruncated(l) }
    }

    /// An inverse of `f` among paths of length at most the word budget.
    pub fn inverse(&self, f: &Path) -> EquivalenceVerdict {
        let (a, b) = (f.source, self.target_of(f));
        if f.word.is_empty() || self.equal(f, &self.identity(a)) == Some(true) {
            return EquivalenceVerdict::Yes(self.identity(a));
        }
        let hom = self.hom_set(b, a);
        let mut undecided = false;
        for g in &hom.elements {
            let left = self.equal(&self.compose(f, g), &self.identity(a));
            let right = self.equal(&self.compose(g, f), &self.identity(b));
            match (left, right) {
                (Some(true), Some(true)) => return EquivalenceVerdict::Yes(g.clone()),
                (Some(false), _) | (_, Some(false)) => {}
                _ => undecided = true,
            }
        }
        if hom.is_exact() && !undecided {
            EquivalenceVerdict::No
        } else {
            EquivalenceVerdict::Unknown
        }
    }

    /// Whether `a` and `b` are isomorphic objects.
    pub fn isomorphic(&self, a: usize, b: usize) -> Option<bool> {
        if a == b {
            return Some(true);
        }
        let hom = self.hom_set(a, b);
        let mut undecided = !hom.is_exact();
        for f in &hom.elements {
            match self.inverse(f) {
                EquivalenceVerdict::Yes(_) => return Some(true),
                EquivalenceVerdict::No => {}
                EquivalenceVerdict::Unknown => undecided = true,
            }
        }
        (!undecided).then_some(false)
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.word.is_empty() {
            return format!("id_{}", self.complex.name(CellId::new(0, p.source)));
        }
        p.word
            .iter()
            .rev()
            .map(|&g| self.complex.name(CellId::new(1, g as usize)))
            .collect::<Vec<_>>()
            .join("∘")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EquivalenceVerdict {
    /// With an inverse.
    Yes(Path),
    No,
    Unknown,
}

impl EquivalenceVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Self::Yes(_))
    }
}

pub fn is_equivalence_edge(h: &CategoryPresentation, e: &Simplex) -> EquivalenceVerdict {
    if !e.is_nondegenerate() {
        let v = h.complex.vertex(e, 0);
        return EquivalenceVerdict::Yes(h.identity(v));
    }
    h.inverse(&h.edge_path(e))
}

/// Connected components of a complex, as sorted vertex lists.
pub fn pi0(x: &SimplicialSet) -> Vec<Vec<usize>> {
    let n = x.count(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for e in x.cells_of_dim(1) {
        let vs = x.cell_vertices(e);
        let (a, b) = (root(&mut parent, vs[0]), root(&mut parent, vs[1]));
        parent[a] = b;
    }
    let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..n {
        let r = root(&mut parent, v);
        classes.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    out
}

/// Three-valued verdict shared by the category-level checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// An equivalence edge `f` of the base and a vertex `x` over its source
/// such that every edge of `X` from `x` over `f` is a non-equivalence.
#[derive(Clone, Debug)]
pub struct IsofibrationWitness {
    pub edge: Simplex,
    pub vertex: CellId,
    pub problem: LiftingProblem,
}

#[derive(Clone, Debug)]
pub struct IsofibrationReport {
    pub verdict: Verdict,
    pub witness: Option<IsofibrationWitness>,
}

/// The square `{0} ⊆ Δ¹` against `p` sending `0` to `x` and `Δ¹` to `f`.
fn edge_problem(p: &SimplicialMap, x: CellId, f: &Simplex) -> LiftingProblem {
    let d1 = Arc::new(crate::generators::standard_simplex(1));
    let pt = Arc::new(crate::generators::simplex_subcomplex(1, &[vec![0]]));
    let i = crate::generators::inclusion_by_names(pt.clone(), d1.clone()).expect("vertex inclusion");
    let u = SimplicialMap::new(pt, p.source().clone(), vec![vec![Simplex::cell(x)]]).expect("vertex map");
    let v = crate::lifting::simplex_map(&d1, p.target(), f);
    LiftingProblem::new(i, p.clone(), u, v).expect("square commutes")
}

/// Every lift of an edge problem is a non-equivalence.
pub fn replay_isofibration_witness(w: &IsofibrationWitness, word_budget: usize) -> bool {
    let xs = w.problem.p.source();
    let hx = homotopy_category(xs, word_budget);
    let f = w.problem.v.image(CellId::new(1, 0));
    xs.simplices(1)
        .iter()
        .filter(|u| xs.vertex(u, 0) == w.vertex.index && w.problem.p.apply(u) == *f)
        .all(|u| is_equivalence_edge(&hx, u) == EquivalenceVerdict::No)
}

pub fn check_isofibration(p: &SimplicialMap, word_budget: usize) -> IsofibrationReport {
    let x = p.source();
    let s = p.target();
    let hx = homotopy_category(x, word_budget);
    let hs = homotopy_category(s, word_budget);
    let mut unknown = false;
    let edges_x = x.simplices(1);
    for e in s.cells_of_dim(1) {
        let f = Simplex::cell(e);
        match is_equivalence_edge(&hs, &f) {
            EquivalenceVerdict::No => continue,
            EquivalenceVerdict::Unknown => {
                unknown = true;
                continue;
            }
            EquivalenceVerdict::Yes(_) => {}
        }
        let start = s.vertex(&f, 0);
        for v in x.cells_of_dim(0).filter(|v| p.vertex_image(v.index) == start) {
            let mut found = false;
            let mut open = false;
            for u in edges_x.iter().filter(|u| x.vertex(u, 0) == v.index && p.apply(u) == f) {
                match is_equivalence_edge(&hx, u) {
                    EquivalenceVerdict::Yes(_) => {
                        found = true;
                        break;
                    }
                    EquivalenceVerdict::Unknown => open = true,
                    EquivalenceVerdict::No => {}
                }
            }
            if found {
                continue;
            }
            if open {
                unknown = true;
                continue;
            }
            let witness = IsofibrationWitness { edge: f.clone(), vertex: v, problem: edge_problem(p, v, &f) };
            return IsofibrationReport { verdict: Verdict::No, witness: Some(witness) };
        }
    }
    IsofibrationReport { verdict: if unknown { Verdict::Unknown } else { Verdict::Yes }, witness: None }
}

#[derive(Clone, Debug)]
pub enum CategoricalFibration {
    /// Inner horn lifting holds up to the dimension and `h(p)` is an
    /// isofibration.
    YesUpTo(usize),
    NotInner(Box<LiftingProblem>),
    NotIsofibration(Box<IsofibrationWitness>),
    Unknown(String),
}

pub fn check_categorical_fibration(p: &SimplicialMap, max_dim: usize, budget: u64, word_budget: usize) -> CategoricalFibration {
    let gens = crate::generators::horn_family(crate::generators::HornClass::Inner, max_dim);
    let inner = crate::lifting::has_rlp(p, &gens, max_dim, budget);
    if let crate::lifting::RlpVerdict::No(w) = inner {
        return CategoricalFibration::NotInner(w);
    }
    let iso = check_isofibration(p, word_budget);
    match (inner, iso.verdict) {
        (_, Verdict::No) => CategoricalFibration::NotIsofibration(Box::new(iso.witness.unwrap())),
        (crate::lifting::RlpVerdict::Budget(n), _) => CategoricalFibration::Unknown(format!("inner horn search exceeded {n} nodes")),
        (_, Verdict::Unknown) => CategoricalFibration::Unknown("equivalence edges undecided within the word budget".into()),
        _ => CategoricalFibration::YesUpTo(max_dim),
    }
}

/// Removes free pairs until none remain. Each elementary collapse undoes a
/// horn pushout, so a component collapsing to one vertex is contractible.
pub fn collapse(x: &SimplicialSet) -> SimplicialSet {
    let mut alive: BTreeSet<CellId> = x.cells().collect();
    loop {
        // how often each cell occurs as the base of a face of a live cell
        let mut uses: HashMap<CellId, usize> = HashMap::new();
        let mut owner: HashMap<CellId, (CellId, bool)> = HashMap::new();
        for &c in &alive {
            for f in x.faces(c) {
                *uses.entry(f.base).or_default() += 1;
                owner.insert(f.base, (c, f.is_nondegenerate()));
            }
        }
        let pair = alive.iter().rev().find_map(|&t| {
            if uses.get(&t) != Some(&1) {
                return None;
            }
            let (s, nondeg) = owner[&t];
            (nondeg && !uses.contains_key(&s)).then_some((s, t))
        });
        match pair {
            Some((s, t)) => {
                alive.remove(&s);
                alive.remove(&t);
            }
            None => break,
        }
    }
    let sub = crate::constructions::subcomplex(&Arc::new(x.clone()), |c| alive.contains(&c)).expect("collapses leave subcomplexes");
    (**sub.source()).clone()
}

/// Whether every component collapses to a vertex.
pub fn collapses_to_points(x: &SimplicialSet) -> bool {
    let rest = collapse(x);
    rest.counts().len() <= 1
}

#[derive(Clone, Debug)]
pub struct DwyerKanReport {
    pub essentially_surjective: Verdict,
    pub fully_faithful: Verdict,
    pub notes: Vec<String>,
}

pub fn dwyer_kan_check(f: &SimplicialMap, max_dim: usize, budget: u64, word_budget: usize) -> DwyerKanReport {
    let c = f.source();
    let d = f.target();
    let hd = homotopy_category(d, word_budget);
    let mut notes = Vec::new();
    let images: BTreeSet<usize> = (0..c.count(0)).map(|v| f.vertex_image(v)).collect();
    let mut es = Verdict::Yes;
    for y in 0..d.count(0) {
        if images.contains(&y) {
            continue;
        }
        let mut verdict = Verdict::No;
        for &x in &images {
            match hd.isomorphic(x, y) {
                Some(true) => {
                    verdict = Verdict::Yes;
                    break;
                }
                Some(false) => {}
                None => verdict = Verdict::Unknown,
            }
        }
        match verdict {
            Verdict::Yes => {}
            Verdict::No => {
                notes.push(format!("object {} is not isomorphic to an image", d.name(CellId::new(0, y))));
                es = Verdict::No;
                break;
            }
            Verdict::Unknown => es = Verdict::Unknown,
        }
    }

    let pre_c = crate::factorize::is_prefibrant(c, max_dim, budget).holds();
    let pre_d = crate::factorize::is_prefibrant(d, max_dim, budget).holds();
    let mut ff = Verdict::Yes;
    if !(pre_c && pre_d) {
        notes.push("mapping spaces compared only for pre-fibrant inputs".into());
        ff = Verdict::Unknown;
    } else {
        'pairs: for a in c.cells_of_dim(0) {
            for b in c.cells_of_dim(0) {
                let fa = CellId::new(0, f.vertex_image(a.index));
                let fb = CellId::new(0, f.vertex_image(b.index));
                let top = c.dim().unwrap_or(0).max(d.dim().unwrap_or(0));
                let (Ok(hc), Ok(hdd)) = (crate::mapping::hom_left(c, a, b, top), crate::mapping::hom_left(d, fa, fb, top)) else {
                    ff = Verdict::Unknown;
                    continue;
                };
                let pc = pi0(hc.complex());
                let pd = pi0(hdd.complex());
                // the induced map on components
                let mut hit = vec![false; pd.len()];
                let comp_d: HashMap<usize, usize> =
                    pd.iter().enumerate().flat_map(|(k, cl)| cl.iter().map(move |&v| (v, k))).collect();
                let mut injective = true;
                for cl in &pc {
                    let u = hc.space.element(CellId::new(0, cl[0]));
                    let img = f.apply(u);
                    let Some(s) = hdd.space.simplex(&img) else {
                        ff = Verdict::Unknown;
                        continue 'pairs;
                    };
                    let k = comp_d[&s.base.index];
                    if hit[k] {
                        injective = false;
                    }
                    hit[k] = true;
                }
                if !injective || hit.iter().any(|h| !h) {
                    notes.push(format!(
                        "π₀ of mapping spaces differ at ({}, {})",
                        c.name(a),
                        c.name(b)
                    ));
                    ff = Verdict::No;
                    break 'pairs;
                }
                if !(collapses_to_points(hc.complex()) && collapses_to_points(hdd.complex())) {
                    ff = Verdict::Unknown;
                }
            }
        }
    }
    DwyerKanReport { essentially_surjective: es, fully_faithful: ff, notes }
}

/// `X ⊆ Y` full on vertices: the inclusion of objects into `h`.
pub fn vertex_inclusion(x: &Arc<SimplicialSet>, v: CellId) -> Result<MonoInclusion, CoreError> {
    let pt = Arc::new(crate::generators::standard_simplex(0).relabeled(|_, _| x.name(v))?);
    MonoInclusion::new(SimplicialMap::new(pt, x.clone(), vec![vec![Simplex::cell(v)]])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::s_prime;
    use crate::generators::{boundary, horn, standard_simplex};

    fn arc(x: SimplicialSet) -> Arc<SimplicialSet> {
        Arc::new(x)
    }

    #[test]
    fn simplices_have_trivial_hom_sets() {
        for n in 0..=3 {
            let h = homotopy_category(&arc(standard_simplex(n)), 8);
            assert!(h.is_confluent());
            for a in 0..=n {
                for b in 0..=n {
                    let hom = h.hom_set(a, b);
                    assert!(hom.is_exact());
                    assert_eq!(hom.elements.len(), usize::from(a <= b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn horn_composite() {
        let h = homotopy_category(&arc(horn(2, 1)), 8);
        let hom = h.hom_set(0, 2);
        assert!(hom.is_exact());
        assert_eq!(hom.elements.len(), 1);
        assert_eq!(h.path_label(&hom.elements[0]), "12∘01");
    }

    #[test]
    fn s_prime_presents_the_free_isomorphism() {
        let s = arc(s_prime());
        let h = homotopy_category(&s, 8);
        assert!(h.is_confluent());
        for a in 0..2 {
            for b in 0..2 {
                let hom = h.hom_set(a, b);
                assert!(hom.is_exact());
                assert_eq!(hom.elements.len(), 1);
            }
        }
        let f = Simplex::cell(s.cell_by_name("f").unwrap());
        match is_equivalence_edge(&h, &f) {
            EquivalenceVerdict::Yes(g) => assert_eq!(h.path_label(&g), "g"),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn equivalence_edges() {
        let d1 = arc(standard_simplex(1));
        let h = homotopy_category(&d1, 8);
        assert_eq!(is_equivalence_edge(&h, &Simplex::cell(CellId::new(1, 0))), EquivalenceVerdict::No);
        let s0 = Simplex::degenerate(CellId::new(0, 0), vec![0]).unwrap();
        assert!(is_equivalence_edge(&h, &s0).is_yes());
    }

    #[test]
    fn components() {
        assert_eq!(pi0(&boundary(1)).len(), 2);
        assert_eq!(pi0(&standard_simplex(3)).len(), 1);
    }

    #[test]
    fn isofibration_examples() {
        let s = arc(s_prime());
        assert_eq!(check_isofibration(&SimplicialMap::identity(s.clone()), 8).verdict, Verdict::Yes);
        let x = s.cell_by_name("x").unwrap();
        let inc = vertex_inclusion(&s, x).unwrap();
        let r = check_isofibration(inc.map(), 8);
        assert_eq!(r.verdict, Verdict::No);
        let w = r.witness.unwrap();
        assert_eq!(s.name(w.edge.base), "f");
        assert!(replay_isofibration_witness(&w, 8));
        let d1 = arc(standard_simplex(1));
        let p = SimplicialMap::to_point(d1, arc(standard_simplex(0))).unwrap();
        assert_eq!(check_isofibration(&p, 8).verdict, Verdict::Yes);
    }

    #[test]
    fn collapsing() {
        assert!(collapses_to_points(&standard_simplex(3)));
        assert!(collapses_to_points(&horn(3, 1)));
        assert!(!collapses_to_points(&boundary(2)));
        assert_eq!(collapse(&boundary(1)).counts(), vec![2]);
    }

    #[test]
    fn dwyer_kan_examples() {
        let d2 = arc(standard_simplex(2));
        let r = dwyer_kan_check(&SimplicialMap::identity(d2), 3, 100_000, 8);
        assert_eq!((r.essentially_surjective, r.fully_faithful), (Verdict::Yes, Verdict::Yes));
        let d1 = arc(standard_simplex(1));
        let inc = vertex_inclusion(&d1, CellId::new(0, 0)).unwrap();
        assert_eq!(dwyer_kan_check(inc.map(), 2, 100_000, 8).essentially_surjective, Verdict::No);
        let s = arc(s_prime());
        let inc = vertex_inclusion(&s, s.cell_by_name("x").unwrap()).unwrap();
        assert_eq!(dwyer_kan_check(inc.map(), 2, 100_000, 8).essentially_surjective, Verdict::Yes);
    }
}
