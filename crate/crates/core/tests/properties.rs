use std::sync::Arc;

use proptest::prelude::*;

use sset_core::certify::{
    search_certificate, search_certificate_ordered, theoremC_classify, verify_certificate, CertificateSearch,
    ClassifierBounds, ClassifierVerdict, StepOrder,
};
use sset_core::constructions::{find_isomorphism, full_subcomplex, Join, Product};
use sset_core::factorize::{descend_over_triangle, is_prefibrant, mapping_path_space, prefibrantize, saturate_prefibrant};
use sset_core::format::{parse_complex, parse_map, write_complex, write_map};
use sset_core::generators::{horn_family, inclusion_by_names, poset_nerve, simplex_subcomplex, standard_simplex, Cofibration, HornClass};
use sset_core::homotopy::{homotopy_category, is_equivalence_edge, pi0, EquivalenceVerdict};
use sset_core::lifting::{enumerate_maps, has_rlp, solve_lift, LiftOutcome, LiftingProblem, RlpVerdict};
use sset_core::mapping::{hom_left, slice_under};
use sset_core::{MonoInclusion, Simplex, SimplicialMap, SimplicialSet};

const BUDGET: u64 = 1_000_000;

fn facets(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::sample::subsequence((0..=n).collect::<Vec<_>>(), 1..=n + 1), 1..4)
}

fn sub(n: usize) -> impl Strategy<Value = Arc<SimplicialSet>> {
    facets(n).prop_map(move |f| Arc::new(simplex_subcomplex(n, &f)))
}

/// A pair `A ⊆ B` of subcomplexes of `Δⁿ`.
fn pair(n: usize) -> impl Strategy<Value = MonoInclusion> {
    (facets(n), facets(n), any::<bool>()).prop_map(move |(fb, fa, all_vertices)| {
        let b = simplex_subcomplex(n, &fb);
        let cells: Vec<Vec<usize>> = b
            .cells()
            .map(|c| b.name(c).chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect())
            .collect();
        let mut fa: Vec<Vec<usize>> = fa.into_iter().filter(|f| cells.contains(f)).collect();
        if all_vertices || fa.is_empty() {
            fa.extend(cells.iter().filter(|c| c.len() == 1).cloned());
        }
        let a = simplex_subcomplex(n, &fa);
        inclusion_by_names(Arc::new(a), Arc::new(b)).unwrap()
    })
}

fn poset(max: usize) -> impl Strategy<Value = Arc<SimplicialSet>> {
    (2..=max).prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
        let mut less = vec![vec![false; n]; n];
        for a in 0..n {
            for b in a + 1..n {
                less[a][b] = bits[a * n + b];
            }
        }
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if less[a][k] && less[k][b] {
                        less[a][b] = true;
                    }
                }
            }
        }
        let labels: Vec<String> = (0..n).map(|k| ((b'a' + k as u8) as char).to_string()).collect();
        Arc::new(poset_nerve(&labels, |a, b| less[a][b], 2))
    }))
}

fn point() -> Arc<SimplicialSet> {
    Arc::new(standard_simplex(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn simplicial_identities_hold(x in sub(4), y in sub(2)) {
        prop_assert!(x.validate().is_empty());
        let prod = Product::new(x.clone(), y.clone());
        prop_assert!(prod.complex.validate().is_empty());
        let join = Join::new(x.clone(), y.clone());
        prop_assert!(join.complex.validate().is_empty());
        for m in 0..=3 {
            for s in prod.complex.simplices(m) {
                for j in 0..m {
                    for i in 0..j {
                        let a = prod.complex.face(&prod.complex.face(&s, j).unwrap(), i).unwrap();
                        let b = prod.complex.face(&prod.complex.face(&s, i).unwrap(), j - 1).unwrap();
                        prop_assert_eq!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent(x in sub(3), m in 0usize..4) {
        for s in x.simplices(m) {
            let id: Vec<usize> = (0..=m).collect();
            prop_assert_eq!(x.act(&s, &id), s.clone());
            for j in 0..=m {
                let up = x.degeneracy(&s, j);
                prop_assert_eq!(x.face(&up, j).unwrap(), s.clone());
                prop_assert_eq!(x.face(&up, j + 1).unwrap(), s.clone());
            }
        }
    }

    #[test]
    fn full_subcomplexes(x in sub(4), keep in prop::collection::vec(any::<bool>(), 5)) {
        let vs: Vec<usize> = (0..x.count(0)).filter(|&v| keep[v]).collect();
        let inc = full_subcomplex(&x, &vs);
        prop_assert!(inc.source().validate().is_empty());
        prop_assert!(inc.map().is_mono());
    }

    #[test]
    fn hom_is_the_fiber_of_the_slice(x in sub(3)) {
        for a in x.cells_of_dim(0) {
            let slice = slice_under(&x, a, 2).unwrap();
            for b in x.cells_of_dim(0) {
                let h = hom_left(&x, a, b, 2).unwrap();
                for n in 0..=2 {
                    let fiber: Vec<Simplex> = slice.levels[n]
                        .iter()
                        .filter(|u| {
                            let r = x.face(u, 0).unwrap();
                            r.is_constant() && r.base == b
                        })
                        .cloned()
                        .collect();
                    prop_assert_eq!(h.level(n), &fiber[..]);
                }
            }
        }
    }

    #[test]
    fn lifts_solve_their_squares(inc in pair(2), x in sub(3), pick in any::<prop::sample::Index>()) {
        let p = SimplicialMap::to_point(x.clone(), point()).unwrap();
        let maps = enumerate_maps(inc.source(), &x, BUDGET).unwrap();
        prop_assume!(!maps.is_empty());
        let u = pick.get(&maps).clone();
        let v = SimplicialMap::to_point(inc.target().clone(), point()).unwrap();
        let problem = LiftingProblem::new(inc.clone(), p.clone(), u.clone(), v.clone()).unwrap();
        let first = solve_lift(&problem, BUDGET);
        let again = solve_lift(&problem, BUDGET);
        if let LiftOutcome::Lift(l) = &first {
            prop_assert_eq!(&inc.map().then(l).unwrap(), &u);
            prop_assert_eq!(&l.then(&p).unwrap(), &v);
            let LiftOutcome::Lift(m) = &again else { panic!("not deterministic") };
            prop_assert_eq!(l, m);
        } else {
            prop_assert!(matches!(again, LiftOutcome::None));
        }
        let id = MonoInclusion::identity(inc.source().clone());
        let v = SimplicialMap::to_point(inc.source().clone(), point()).unwrap();
        let forced = LiftingProblem::new(id, p, u.clone(), v).unwrap();
        let LiftOutcome::Lift(l) = solve_lift(&forced, BUDGET) else { panic!("isomorphisms always lift") };
        prop_assert_eq!(l, u);
    }

    #[test]
    fn rlp_of_a_union(x in sub(3), a in prop::collection::vec(any::<bool>(), 9), b in prop::collection::vec(any::<bool>(), 9)) {
        let all = horn_family(HornClass::Kan, 3);
        let g1: Vec<Cofibration> = all.iter().zip(&a).filter(|(_, k)| **k).map(|(g, _)| g.clone()).collect();
        let g2: Vec<Cofibration> = all.iter().zip(&b).filter(|(_, k)| **k).map(|(g, _)| g.clone()).collect();
        let both: Vec<Cofibration> = g1.iter().chain(&g2).cloned().collect();
        let p = SimplicialMap::to_point(x, point()).unwrap();
        let no = |g: &[Cofibration]| matches!(has_rlp(&p, g, 3, BUDGET), RlpVerdict::No(_));
        prop_assert_eq!(no(&both), no(&g1) || no(&g2));
    }

    #[test]
    fn components_count_homs_on_posets(x in poset(5)) {
        prop_assert!(is_prefibrant(&x, 3, BUDGET).holds());
        let h = homotopy_category(&x, 8);
        for a in x.cells_of_dim(0) {
            for b in x.cells_of_dim(0) {
                let hom = h.hom_set(a.index, b.index);
                if hom.is_exact() {
                    let space = hom_left(&x, a, b, 1).unwrap();
                    prop_assert_eq!(pi0(space.complex()).len(), hom.elements.len());
                }
            }
        }
    }

    #[test]
    fn homs_of_a_product(x in poset(3), y in poset(3)) {
        let prod = Product::new(x.clone(), y.clone());
        let (hx, hy) = (homotopy_category(&x, 8), homotopy_category(&y, 8));
        let hp = homotopy_category(&prod.complex, 8);
        let (l, r) = (prod.projection_left(), prod.projection_right());
        for a in prod.complex.cells_of_dim(0) {
            for b in prod.complex.cells_of_dim(0) {
                let e = hp.hom_set(a.index, b.index);
                let ex = hx.hom_set(l.vertex_image(a.index), l.vertex_image(b.index));
                let ey = hy.hom_set(r.vertex_image(a.index), r.vertex_image(b.index));
                if e.is_exact() && ex.is_exact() && ey.is_exact() {
                    prop_assert_eq!(e.elements.len(), ex.elements.len() * ey.elements.len());
                }
            }
        }
    }

    #[test]
    fn maps_act_functorially(x in sub(3), y in sub(3)) {
        let z = Arc::new(standard_simplex(1));
        let maps_xy = enumerate_maps(&x, &y, BUDGET).unwrap();
        let maps_yz = enumerate_maps(&y, &z, BUDGET).unwrap();
        let (hx, hy, hz) = (homotopy_category(&x, 8), homotopy_category(&y, 8), homotopy_category(&z, 8));
        for f in maps_xy.iter().take(3) {
            for g in maps_yz.iter().take(3) {
                let gf = f.then(g).unwrap();
                for e in x.simplices(1) {
                    let p = hx.edge_path(&e);
                    let direct = hx.map_path(&gf, &hz, &p);
                    let stepwise = hy.map_path(g, &hz, &hx.map_path(f, &hy, &p));
                    prop_assert_eq!(hz.equal(&direct, &stepwise), Some(true));
                }
            }
        }
    }

    #[test]
    fn equivalence_edges_survive_relabeling(x in sub(3)) {
        let renamed = Arc::new(x.relabeled(|_, n| format!("r{n}")).unwrap());
        let (h, k) = (homotopy_category(&x, 8), homotopy_category(&renamed, 8));
        for e in x.simplices(1) {
            let kind = |v: EquivalenceVerdict| match v {
                EquivalenceVerdict::Yes(_) => 0,
                EquivalenceVerdict::No => 1,
                EquivalenceVerdict::Unknown => 2,
            };
            prop_assert_eq!(kind(is_equivalence_edge(&h, &e)), kind(is_equivalence_edge(&k, &e)));
        }
    }

    #[test]
    fn stage_maps_are_certified(x in sub(2)) {
        let trace = prefibrantize(&x, 1, 2, BUDGET).unwrap();
        let cert = trace.certificate(0);
        prop_assert!(verify_certificate(&cert, &trace.inclusions[0]).unwrap());
        if let RlpVerdict::No(w) = is_prefibrant(&x, 2, BUDGET).lambda21 {
            let pushed = w.u.then(trace.inclusions[0].map()).unwrap();
            let outcome = sset_core::lifting::extend_along(&pushed, &w.i, BUDGET).unwrap();
            prop_assert!(outcome.is_lift());
        }
    }

    #[test]
    fn certificates_round_trip(inc in pair(3)) {
        for class in [HornClass::Inner, HornClass::Left, HornClass::Right] {
            let up = search_certificate(&inc, class, BUDGET);
            let down = search_certificate_ordered(&inc, class, BUDGET, StepOrder::Descending);
            match (&up, &down) {
                (CertificateSearch::Found(c), CertificateSearch::Found(d)) => {
                    prop_assert!(verify_certificate(c, &inc).unwrap());
                    prop_assert!(verify_certificate(d, &inc).unwrap());
                    let mut kan = c.clone();
                    kan.class = HornClass::Kan;
                    prop_assert!(verify_certificate(&kan, &inc).unwrap());
                }
                (CertificateSearch::Exhausted, CertificateSearch::Exhausted) => {}
                _ => prop_assert!(false, "orders disagree: {:?} / {:?}", up, down),
            }
        }
    }

    #[test]
    fn classifier_agrees_with_certificates(inc in pair(3)) {
        let verdict = theoremC_classify(&inc, ClassifierBounds::default());
        if !inc.map().is_vertex_bijective() {
            prop_assert!(!matches!(verdict, ClassifierVerdict::InnerAnodyne(_)));
        }
        if let CertificateSearch::Found(_) = search_certificate(&inc, HornClass::Inner, BUDGET) {
            prop_assert!(matches!(verdict, ClassifierVerdict::InnerAnodyne(_)));
        }
    }

    #[test]
    fn complexes_and_maps_round_trip(x in sub(3), y in sub(2)) {
        let text = write_complex(&x);
        let back = Arc::new(parse_complex(&text).unwrap());
        prop_assert_eq!(&*back, &*x);
        for f in enumerate_maps(&x, &y, BUDGET).unwrap().iter().take(4) {
            let text = write_map(f, "x.sset", "y.sset");
            let g = parse_map(&text, back.clone(), y.clone()).unwrap();
            prop_assert_eq!(g.images(), f.images());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn saturation_contract(x in poset(4)) {
        let sat = saturate_prefibrant(&x, 4, BUDGET).unwrap();
        prop_assert!(sat.p2_holds());
        prop_assert!(sat.mapping_spaces_agree());
        prop_assert!(verify_certificate(&sat.certificate, &sat.inclusion).unwrap());
    }

    #[test]
    fn descent_pullbacks(fs in facets(3), labels in prop::sample::select(vec![[0, 0, 1, 1], [0, 1, 1, 2], [0, 1, 2, 2], [1, 1, 2, 2], [0, 0, 0, 1]])) {
        let base = Arc::new(sset_core::generators::horn(2, 1));
        let x = Arc::new(simplex_subcomplex(3, &fs));
        let mut images = Vec::new();
        for d in 0..=x.dim().unwrap() {
            let mut level = Vec::new();
            for c in x.cells_of_dim(d) {
                let vs: Vec<usize> = x.cell_vertices(c).iter().map(|&v| labels[v]).collect();
                let mut distinct = vs.clone();
                distinct.dedup();
                let Some(cell) = base.cell_with_vertices(&distinct) else { return Ok(()) };
                let theta: Vec<usize> = vs.iter().map(|v| distinct.iter().position(|w| w == v).unwrap()).collect();
                level.push(base.act(&Simplex::cell(cell), &theta));
            }
            images.push(level);
        }
        let p = SimplicialMap::new(x, base, images).unwrap();
        match descend_over_triangle(&p, 2, 2, BUDGET) {
            Ok(d) => prop_assert_eq!(d.stages.len(), 3),
            Err(sset_core::CoreError::Precondition(_)) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn path_space_factorizes(m in 0usize..3, n in 0usize..3, seed in any::<prop::sample::Index>()) {
        let (c, d) = (Arc::new(standard_simplex(m)), Arc::new(standard_simplex(n)));
        let maps = enumerate_maps(&c, &d, BUDGET).unwrap();
        let f = seed.get(&maps);
        let q = mapping_path_space(f, m, BUDGET).unwrap();
        prop_assert_eq!(&q.include.then(&q.project).unwrap(), f);
        prop_assert_eq!(q.include.then(&q.first).unwrap(), SimplicialMap::identity(c.clone()));
    }
}

#[test]
fn joins_of_simplices_are_simplices() {
    for p in 0..=3 {
        for q in 0..=3 {
            let j = Join::new(Arc::new(standard_simplex(p)), Arc::new(standard_simplex(q)));
            let d = Arc::new(standard_simplex(p + q + 1));
            assert!(find_isomorphism(&j.complex, &d, BUDGET).unwrap().is_some());
        }
    }
}

#[test]
fn join_with_a_point_is_inner_anodyne() {
    let u = Cofibration::horn(2, 1).inclusion;
    let pt = point();
    let small = Join::new(u.source().clone(), pt.clone());
    let big = Join::new(u.target().clone(), pt.clone());
    let joined = sset_core::constructions::join_maps(&small, &big, u.map(), &SimplicialMap::identity(pt)).unwrap();
    let inc = MonoInclusion::new(joined).unwrap();
    match search_certificate(&inc, HornClass::Inner, BUDGET) {
        CertificateSearch::Found(c) => assert!(verify_certificate(&c, &inc).unwrap()),
        other => panic!("{other:?}"),
    }
}
