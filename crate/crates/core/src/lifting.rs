//! Lifting problems and right lifting properties against generating
//! inclusions, decided by exhaustive search on finite complexes.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::complex::SimplicialSet;
use crate::error::CoreError;
use crate::generators::{Cofibration, CofibrationKind, HornClass};
use crate::map::{MonoInclusion, SimplicialMap};
use crate::search::{MapSearch, Over, TargetIndex};
use crate::simplex::Simplex;

/// A commuting square `p u = v i` with `i : A -> B` and `p : X -> S`.
#[derive(Clone, Debug)]
pub struct LiftingProblem {
    pub i: MonoInclusion,
    pub p: SimplicialMap,
    pub u: SimplicialMap,
    pub v: SimplicialMap,
}

fn same(a: &Arc<SimplicialSet>, b: &Arc<SimplicialSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl LiftingProblem {
    pub fn new(i: MonoInclusion, p: SimplicialMap, u: SimplicialMap, v: SimplicialMap) -> Result<Self, CoreError> {
        if !same(u.source(), i.source()) || !same(u.target(), p.source()) || !same(v.source(), i.target()) || !same(v.target(), p.target()) {
            return Err(CoreError::NotComposable);
        }
        for a in i.source().cells() {
            if p.apply(u.image(a)) != v.apply(i.map().image(a)) {
                return Err(CoreError::Precondition(format!("square does not commute at {}", i.source().name(a))));
            }
        }
        Ok(Self { i, p, u, v })
    }

    /// Checks that `lift` solves this problem.
    pub fn is_solution(&self, lift: &SimplicialMap) -> bool {
        let b = self.i.target();
        same(lift.source(), b)
            && same(lift.target(), self.p.source())
            && SimplicialMap::new(b.clone(), lift.target().clone(), lift.images().to_vec()).is_ok()
            && self.i.source().cells().all(|a| lift.apply(self.i.map().image(a)) == *self.u.image(a))
            && b.cells().all(|c| self.p.apply(lift.image(c)) == *self.v.image(c))
    }
}

#[derive(Clone, Debug)]
pub enum LiftOutcome {
    Lift(SimplicialMap),
    None,
    Budget(u64),
}

impl LiftOutcome {
    pub fn is_lift(&self) -> bool {
        matches!(self, Self::Lift(_))
    }
}

fn fixed_from(i: &MonoInclusion, u: &[Vec<Simplex>]) -> Vec<(crate::CellId, Simplex)> {
    i.source().cells().map(|a| (i.map().image(a).base, u[a.dim][a.index].clone())).collect()
}

fn lift_images(problem: &LiftingProblem, index: &TargetIndex, budget: u64) -> Result<Option<Vec<Vec<Simplex>>>, CoreError> {
    let b = problem.i.target();
    MapSearch::new(b, index)
        .fix_all(fixed_from(&problem.i, problem.u.images()))
        .over(Over { p: &problem.p, images: problem.v.images().to_vec() })
        .budget(budget)
        .first()
}

pub fn solve_lift(problem: &LiftingProblem, budget: u64) -> LiftOutcome {
    solve_lift_with(problem, &TargetIndex::new(problem.p.source().clone()), budget)
}

pub fn solve_lift_with(problem: &LiftingProblem, index: &TargetIndex, budget: u64) -> LiftOutcome {
    match lift_images(problem, index, budget) {
        Ok(Some(images)) => {
            let lift = SimplicialMap::new_unchecked(problem.i.target().clone(), problem.p.source().clone(), images)
                .expect("search output has the right shape");
            assert!(problem.is_solution(&lift), "search produced an invalid lift");
            LiftOutcome::Lift(lift)
        }
        Ok(None) => LiftOutcome::None,
        Err(CoreError::Budget(n)) => LiftOutcome::Budget(n),
        Err(e) => panic!("unexpected search error: {e}"),
    }
}

/// Extends `f : A -> X` along `i : A -> B`.
pub fn extend_along(f: &SimplicialMap, i: &MonoInclusion, budget: u64) -> Result<LiftOutcome, CoreError> {
    let problem = terminal_problem(i.clone(), f.clone())?;
    Ok(solve_lift(&problem, budget))
}

/// The lifting problem of `f` along `i` over the point.
pub fn terminal_problem(i: MonoInclusion, f: SimplicialMap) -> Result<LiftingProblem, CoreError> {
    let pt = Arc::new(crate::generators::standard_simplex(0));
    let p = SimplicialMap::to_point(f.target().clone(), pt.clone())?;
    let v = SimplicialMap::to_point(i.target().clone(), pt)?;
    LiftingProblem::new(i, p, f, v)
}

/// Every map `A -> X`, in search order.
pub fn enumerate_maps(a: &Arc<SimplicialSet>, x: &Arc<SimplicialSet>, budget: u64) -> Result<Vec<SimplicialMap>, CoreError> {
    let index = TargetIndex::new(x.clone());
    let all = MapSearch::new(a, &index).budget(budget).all()?;
    Ok(all
        .into_iter()
        .map(|imgs| SimplicialMap::new_unchecked(a.clone(), x.clone(), imgs).expect("search output"))
        .collect())
}

/// The map `Δⁿ -> S` picking out an `n`-simplex.
pub fn simplex_map(delta: &Arc<SimplicialSet>, s: &Arc<SimplicialSet>, sigma: &Simplex) -> SimplicialMap {
    let images = (0..delta.dim().map_or(0, |d| d + 1))
        .map(|d| delta.cells_of_dim(d).map(|c| s.act(sigma, delta.cell_vertices(c))).collect())
        .collect();
    SimplicialMap::new_unchecked(delta.clone(), s.clone(), images).expect("simplices give maps")
}

/// Verdict of a bounded right-lifting-property check.
#[derive(Clone, Debug)]
pub enum RlpVerdict {
    /// A problem with no solution; absolute.
    No(Box<LiftingProblem>),
    /// Every instance up to this dimension has a solution.
    YesUpTo(usize),
    Budget(u64),
}

impl RlpVerdict {
    pub fn is_no(&self) -> bool {
        matches!(self, Self::No(_))
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Self::YesUpTo(_))
    }

    pub fn witness(&self) -> Option<&LiftingProblem> {
        match self {
            Self::No(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::No(_) => "no".into(),
            Self::YesUpTo(n) => format!("yes up to dim {n}"),
            Self::Budget(n) => format!("budget of {n} nodes exceeded"),
        }
    }
}

/// Checks one generator. `keep` filters the attaching maps `u : A -> X`.
pub fn check_generator(
    p: &SimplicialMap,
    g: &Cofibration,
    index: &TargetIndex,
    budget: u64,
    keep: &dyn Fn(&Cofibration, &[Vec<Simplex>]) -> bool,
) -> Result<Option<Box<LiftingProblem>>, CoreError> {
    let inc = &g.inclusion;
    let a = inc.source();
    let b = inc.target();
    let s = p.target();
    let mut witness = None;
    for sigma in s.simplices(g.dim()) {
        let v = simplex_map(b, s, &sigma);
        let v_on_a: Vec<Vec<Simplex>> = (0..a.dim().map_or(0, |d| d + 1))
            .map(|d| a.cells_of_dim(d).map(|c| v.image(inc.map().image(c).base).clone()).collect())
            .collect();
        let mut failure: Result<(), CoreError> = Ok(());
        MapSearch::new(a, index).over(Over { p, images: v_on_a }).budget(budget).run(|u| {
            if !keep(g, u) {
                return ControlFlow::Continue(());
            }
            let u_map = SimplicialMap::new_unchecked(a.clone(), p.source().clone(), u.to_vec()).expect("search output");
            let problem = LiftingProblem { i: inc.clone(), p: p.clone(), u: u_map, v: v.clone() };
            match lift_images(&problem, index, budget) {
                Ok(Some(_)) => ControlFlow::Continue(()),
                Ok(None) => {
                    witness = Some(Box::new(problem));
                    ControlFlow::Break(())
                }
                Err(e) => {
                    failure = Err(e);
                    ControlFlow::Break(())
                }
            }
        })?;
        failure?;
        if witness.is_some() {
            break;
        }
    }
    Ok(witness)
}

pub fn has_rlp(p: &SimplicialMap, generators: &[Cofibration], max_dim: usize, budget: u64) -> RlpVerdict {
    has_rlp_filtered(p, generators, max_dim, budget, &|_, _| true)
}

/// As `has_rlp`, considering only attaching maps accepted by `keep`.
pub fn has_rlp_filtered(
    p: &SimplicialMap,
    generators: &[Cofibration],
    max_dim: usize,
    budget: u64,
    keep: &dyn Fn(&Cofibration, &[Vec<Simplex>]) -> bool,
) -> RlpVerdict {
    let index = TargetIndex::new(p.source().clone());
    let mut out_of_budget = None;
    for g in generators.iter().filter(|g| g.dim() <= max_dim) {
        match check_generator(p, g, &index, budget, keep) {
            Ok(Some(w)) => return RlpVerdict::No(w),
            Ok(None) => {}
            Err(CoreError::Budget(n)) => out_of_budget = Some(n),
            Err(e) => panic!("unexpected search error: {e}"),
        }
    }
    match out_of_budget {
        Some(n) => RlpVerdict::Budget(n),
        None => RlpVerdict::YesUpTo(max_dim),
    }
}

#[derive(Clone, Debug)]
pub struct FibrationReport {
    pub inner: RlpVerdict,
    pub left: RlpVerdict,
    pub right: RlpVerdict,
    pub kan: RlpVerdict,
    pub trivial_kan: RlpVerdict,
    pub mono: bool,
    pub vertex_bijective: bool,
    pub checked_dim: usize,
}

impl FibrationReport {
    pub fn verdicts(&self) -> [(&'static str, &RlpVerdict); 5] {
        [
            ("inner", &self.inner),
            ("left", &self.left),
            ("right", &self.right),
            ("kan", &self.kan),
            ("trivial_kan", &self.trivial_kan),
        ]
    }
}

/// `max(dim source, dim target) + 1`.
pub fn default_max_dim(p: &SimplicialMap) -> usize {
    p.source().dim().unwrap_or(0).max(p.target().dim().unwrap_or(0)) + 1
}

fn aggregate(results: &[(Cofibration, Result<Option<Box<LiftingProblem>>, CoreError>)], pick: impl Fn(&CofibrationKind) -> bool, max_dim: usize) -> RlpVerdict {
    let mut budget = None;
    for (_, r) in results.iter().filter(|(g, _)| pick(&g.kind)) {
        match r {
            Ok(Some(w)) => return RlpVerdict::No(w.clone()),
            Ok(None) => {}
            Err(CoreError::Budget(n)) => budget = Some(*n),
            Err(e) => panic!("unexpected search error: {e}"),
        }
    }
    match budget {
        Some(n) => RlpVerdict::Budget(n),
        None => RlpVerdict::YesUpTo(max_dim),
    }
}

pub fn classify_map(p: &SimplicialMap, max_dim: usize, budget: u64) -> FibrationReport {
    let index = TargetIndex::new(p.source().clone());
    let mut gens: Vec<Cofibration> = crate::generators::horn_family(HornClass::Kan, max_dim);
    gens.extend(crate::generators::boundary_family(max_dim));
    let results: Vec<_> = gens
        .into_iter()
        .map(|g| {
            let r = check_generator(p, &g, &index, budget, &|_, _| true);
            (g, r)
        })
        .collect();
    let horn = |class: HornClass| move |k: &CofibrationKind| matches!(k, CofibrationKind::Horn { n, i } if class.admits(*n, *i));
    FibrationReport {
        inner: aggregate(&results, horn(HornClass::Inner), max_dim),
        left: aggregate(&results, horn(HornClass::Left), max_dim),
        right: aggregate(&results, horn(HornClass::Right), max_dim),
        kan: aggregate(&results, horn(HornClass::Kan), max_dim),
        trivial_kan: aggregate(&results, |k| matches!(k, CofibrationKind::Boundary { .. }), max_dim),
        mono: p.is_mono(),
        vertex_bijective: p.is_vertex_bijective(),
        checked_dim: max_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{spine_pushout_complex, square_in_simplex};
    use crate::generators::{horn, horn_family, inclusion_by_names, standard_simplex};

    fn arc(x: SimplicialSet) -> Arc<SimplicialSet> {
        Arc::new(x)
    }

    fn to_point(x: &Arc<SimplicialSet>) -> SimplicialMap {
        SimplicialMap::to_point(x.clone(), arc(standard_simplex(0))).unwrap()
    }

    #[test]
    fn fills_a_horn_in_a_simplex() {
        let d2 = arc(standard_simplex(2));
        let h = arc(horn(2, 1));
        let f = inclusion_by_names(h.clone(), d2.clone()).unwrap();
        let c = Cofibration::horn(2, 1);
        let out = extend_along(f.map(), &c.inclusion, 1000).unwrap();
        assert!(out.is_lift());
        let id = SimplicialMap::identity(h);
        assert!(matches!(extend_along(&id, &c.inclusion, 1000).unwrap(), LiftOutcome::None));
    }

    #[test]
    fn spine_pushout_horn_does_not_extend() {
        let s = arc(spine_pushout_complex());
        let h = Cofibration::horn(3, 1);
        let images = h
            .inclusion
            .source()
            .cells()
            .map(|c| (c.dim, Simplex::cell(s.cell_by_name(&h.inclusion.source().name(c)).unwrap())));
        let mut lv: Vec<Vec<Simplex>> = vec![Vec::new(); 3];
        for (d, x) in images {
            lv[d].push(x);
        }
        let u = SimplicialMap::new(h.inclusion.source().clone(), s.clone(), lv).unwrap();
        assert!(matches!(extend_along(&u, &h.inclusion, 100_000).unwrap(), LiftOutcome::None));
        match has_rlp(&to_point(&s), &horn_family(HornClass::Inner, 3), 3, 100_000) {
            RlpVerdict::No(w) => {
                assert!(matches!(solve_lift(&w, 100_000), LiftOutcome::None));
                assert_eq!(w.i.target().dim(), Some(3));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn degenerate_square_lifts_to_degenerate_edge() {
        let pt = arc(standard_simplex(0));
        let bd = Cofibration::boundary(1);
        let u = SimplicialMap::to_point(bd.inclusion.source().clone(), pt.clone()).unwrap();
        match extend_along(&u, &bd.inclusion, 100).unwrap() {
            LiftOutcome::Lift(l) => assert_eq!(l.image(crate::CellId::new(1, 0)).word(), &[0]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rlp_examples() {
        let d2 = arc(standard_simplex(2));
        let inner2 = vec![Cofibration::horn(2, 1)];
        assert!(has_rlp(&to_point(&d2), &inner2, 2, 10_000).is_yes());
        let h = arc(horn(2, 1));
        match has_rlp(&to_point(&h), &inner2, 2, 10_000) {
            RlpVerdict::No(w) => assert!(w.u.is_mono()),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn classify_examples() {
        let sq = square_in_simplex();
        let r = classify_map(sq.map(), 2, 100_000);
        assert!(r.mono && r.vertex_bijective);

        let d2 = arc(standard_simplex(2));
        let r = classify_map(&SimplicialMap::identity(d2), 3, 100_000);
        assert!(r.verdicts().iter().all(|(_, v)| v.is_yes()));

        let d1 = arc(standard_simplex(1));
        let r = classify_map(&to_point(&d1), 2, 100_000);
        assert!(r.inner.is_yes());
        assert!(r.kan.is_no() && r.left.is_no() && r.right.is_no());
        let w = r.trivial_kan.witness().unwrap();
        assert_eq!(w.i.target().dim(), Some(1));
        assert!(matches!(solve_lift(w, 1000), LiftOutcome::None));
    }
}
