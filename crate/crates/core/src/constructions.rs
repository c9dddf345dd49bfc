//! Pushouts, products, pullbacks, joins, skeleta and full subcomplexes.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::complex::{degenerate_by, Builder, SimplicialSet};
use crate::error::CoreError;
use crate::map::{MonoInclusion, SimplicialMap};
use crate::simplex::{CellId, Simplex};

fn levels(x: &SimplicialSet) -> usize {
    x.dim().map_or(0, |d| d + 1)
}

/// Image of an arbitrary simplex under a cellwise assignment.
pub(crate) fn push_simplex(images: &[Vec<Simplex>], s: &Simplex) -> Simplex {
    let img = &images[s.base.dim][s.base.index];
    if s.is_nondegenerate() {
        img.clone()
    } else {
        degenerate_by(img, &s.surjection())
    }
}

/// A pushout `Y ∪_A X` along a monomorphism `A ⊆ X`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub complex: Arc<SimplicialSet>,
    /// `Y -> P`, which is a monomorphism.
    pub from_base: MonoInclusion,
    /// `X -> P`.
    pub from_attached: SimplicialMap,
}

/// Adds the cells of `X ∖ A` to `b`, where `f` gives the image in `b` of
/// every cell of `A`. Returns the image of every cell of `X`.
pub fn attach_into(b: &mut Builder, inc: &MonoInclusion, f: &[Vec<Simplex>]) -> Result<Vec<Vec<Simplex>>, CoreError> {
    attach_into_named(b, inc, f, "")
}

/// As `attach_into`, naming each new cell `prefix` followed by its name in `X`.
pub fn attach_into_named(b: &mut Builder, inc: &MonoInclusion, f: &[Vec<Simplex>], prefix: &str) -> Result<Vec<Vec<Simplex>>, CoreError> {
    let x = inc.target();
    let mut images: Vec<Vec<Simplex>> = Vec::with_capacity(levels(x));
    for d in 0..levels(x) {
        let mut level = Vec::with_capacity(x.count(d));
        for c in x.cells_of_dim(d) {
            let img = match inc.preimage(c) {
                Some(a) => f[a.dim][a.index].clone(),
                None => {
                    let faces = x.faces(c).iter().map(|s| push_simplex(&images, s)).collect();
                    let name = b.fresh_name(&format!("{prefix}{}", x.name(c)));
                    Simplex::cell(b.push(d, Some(name), faces)?)
                }
            };
            level.push(img);
        }
        images.push(level);
    }
    Ok(images)
}

/// `Y ∪_A X` for `A ⊆ X` and `f : A -> Y`. Cells of `X ∖ A` keep their names,
/// primed on a clash.
pub fn pushout(inc: &MonoInclusion, f: &SimplicialMap) -> Result<Pushout, CoreError> {
    if !Arc::ptr_eq(inc.source(), f.source()) && inc.source() != f.source() {
        return Err(CoreError::NotComposable);
    }
    let y = f.target().clone();
    let mut b = Builder::from_complex(&y);
    let images = attach_into(&mut b, inc, f.images())?;
    let p = Arc::new(b.build()?);
    let base_images = y.cells().map(|c| (c.dim, Simplex::cell(c))).into_group_map();
    let base_images = (0..levels(&y)).map(|d| base_images.get(&d).cloned().unwrap_or_default()).collect();
    let from_base = MonoInclusion::new(SimplicialMap::new_unchecked(y, p.clone(), base_images)?)?;
    let from_attached = SimplicialMap::new_unchecked(inc.target().clone(), p.clone(), images)?;
    Ok(Pushout { complex: p, from_base, from_attached })
}

/// Attaches several `A_k ⊆ X_k` along maps `A_k -> Y` at once.
pub fn pushout_many(y: Arc<SimplicialSet>, attachments: &[(MonoInclusion, SimplicialMap)]) -> Result<Pushout, CoreError> {
    let mut b = Builder::from_complex(&y);
    let mut last = None;
    for (inc, f) in attachments {
        if !Arc::ptr_eq(f.target(), &y) && **f.target() != *y {
            return Err(CoreError::NotComposable);
        }
        last = Some((inc.target().clone(), attach_into(&mut b, inc, f.images())?));
    }
    let p = Arc::new(b.build()?);
    let from_base = MonoInclusion::new(SimplicialMap::new_unchecked(y.clone(), p.clone(), identity_images(&y))?)?;
    let from_attached = match last {
        Some((x, images)) => SimplicialMap::new_unchecked(x, p.clone(), images)?,
        None => SimplicialMap::from_empty(p.clone()),
    };
    Ok(Pushout { complex: p, from_base, from_attached })
}

pub(crate) fn identity_images(x: &SimplicialSet) -> Vec<Vec<Simplex>> {
    (0..levels(x)).map(|d| x.cells_of_dim(d).map(Simplex::cell).collect()).collect()
}

/// The subcomplex on the cells satisfying `keep`, which must be closed
/// under faces. Names are kept.
pub fn subcomplex(x: &Arc<SimplicialSet>, keep: impl Fn(CellId) -> bool) -> Result<MonoInclusion, CoreError> {
    let mut b = Builder::new();
    let mut new_id: HashMap<CellId, CellId> = HashMap::new();
    let mut images: Vec<Vec<Simplex>> = Vec::new();
    for c in x.cells().filter(|&c| keep(c)) {
        let mut faces = Vec::with_capacity(x.faces(c).len());
        for f in x.faces(c) {
            let base = *new_id
                .get(&f.base)
                .ok_or_else(|| CoreError::Precondition(format!("cell set is not closed under faces at {}", x.name(c))))?;
            faces.push(Simplex::from_parts_unchecked(base, f.word().to_vec()));
        }
        let id = b.push(c.dim, Some(x.name(c)), faces)?;
        new_id.insert(c, id);
        if images.len() <= c.dim {
            images.resize_with(c.dim + 1, Vec::new);
        }
        images[c.dim].push(Simplex::cell(c));
    }
    let sub = Arc::new(b.build()?);
    images.truncate(levels(&sub));
    MonoInclusion::new(SimplicialMap::new_unchecked(sub, x.clone(), images)?)
}

/// `sk_n X ⊆ X`.
pub fn skeleton(x: &Arc<SimplicialSet>, n: usize) -> MonoInclusion {
    subcomplex(x, |c| c.dim <= n).expect("skeleta are subcomplexes")
}

/// The full subcomplex on a set of vertices.
pub fn full_subcomplex(x: &Arc<SimplicialSet>, vertices: &[usize]) -> MonoInclusion {
    subcomplex(x, |c| x.cell_vertices(c).iter().all(|v| vertices.contains(v))).expect("full subcomplexes are closed")
}

/// The subcomplex generated by the given cells.
pub fn generated_subcomplex(x: &Arc<SimplicialSet>, generators: &[CellId]) -> MonoInclusion {
    let mut keep = std::collections::HashSet::new();
    let mut stack: Vec<CellId> = generators.to_vec();
    while let Some(c) = stack.pop() {
        if keep.insert(c) {
            stack.extend(x.faces(c).iter().map(|f| f.base));
        }
    }
    subcomplex(x, |c| keep.contains(&c)).expect("generated sets are closed")
}

/// Section of the surjection with the given degeneracy word.
fn section(word: &[usize], dim: usize) -> Vec<usize> {
    (0..=dim).filter(|j| !word.contains(j)).collect()
}

/// A product `X × Y`, or a subcomplex of it such as a pullback.
#[derive(Clone, Debug)]
pub struct Product {
    pub complex: Arc<SimplicialSet>,
    pub left: Arc<SimplicialSet>,
    pub right: Arc<SimplicialSet>,
    pairs: Vec<Vec<(Simplex, Simplex)>>,
    index: HashMap<(Simplex, Simplex), CellId>,
}

impl Product {
    pub fn new(left: Arc<SimplicialSet>, right: Arc<SimplicialSet>) -> Self {
        Self::filtered(left, right, |_, _| true)
    }

    /// The subcomplex of pairs accepted by `keep`, which must be closed
    /// under faces.
    pub fn filtered(
        left: Arc<SimplicialSet>,
        right: Arc<SimplicialSet>,
        keep: impl Fn(&Simplex, &Simplex) -> bool,
    ) -> Self {
        let top = match (left.dim(), right.dim()) {
            (Some(p), Some(q)) => p + q,
            _ => {
                return Self {
                    complex: Arc::new(SimplicialSet::empty()),
                    left,
                    right,
                    pairs: Vec::new(),
                    index: HashMap::new(),
                }
            }
        };
        let mut b = Builder::new();
        let mut pairs: Vec<Vec<(Simplex, Simplex)>> = vec![Vec::new(); top + 1];
        let mut index = HashMap::new();
        for m in 0..=top {
            let mut found: Vec<(Simplex, Simplex)> = Vec::new();
            for a in left.cells().filter(|a| a.dim <= m) {
                for wa in (0..m).combinations(m - a.dim) {
                    let rest: Vec<usize> = (0..m).filter(|j| !wa.contains(j)).collect();
                    for bc in right.cells().filter(|c| c.dim <= m && m - c.dim <= rest.len()) {
                        for wb in rest.iter().copied().combinations(m - bc.dim) {
                            let x = Simplex::from_parts_unchecked(a, wa.clone());
                            let y = Simplex::from_parts_unchecked(bc, wb);
                            if keep(&x, &y) {
                                found.push((x, y));
                            }
                        }
                    }
                }
            }
            found.sort();
            for (x, y) in found {
                let faces = if m == 0 {
                    Vec::new()
                } else {
                    (0..=m)
                        .map(|i| {
                            let fx = left.face(&x, i).unwrap();
                            let fy = right.face(&y, i).unwrap();
                            normalize_pair(&left, &right, &index, &fx, &fy).expect("faces of kept pairs are kept")
                        })
                        .collect()
                };
                let name = format!("({},{})", left.token(&x), right.token(&y));
                let id = b.push(m, Some(name), faces).expect("product cells are well formed");
                index.insert((x.clone(), y.clone()), id);
                pairs[m].push((x, y));
            }
        }
        let complex = Arc::new(b.build().expect("product names are unique"));
        pairs.truncate(levels(&complex));
        Self { complex, left, right, pairs, index }
    }

    /// The pair of simplices making up a cell.
    pub fn pair(&self, c: CellId) -> &(Simplex, Simplex) {
        &self.pairs[c.dim][c.index]
    }

    /// The simplex `(x, y)`, if it lies in this (sub)product.
    pub fn simplex(&self, x: &Simplex, y: &Simplex) -> Option<Simplex> {
        normalize_pair(&self.left, &self.right, &self.index, x, y)
    }

    pub fn projection_left(&self) -> SimplicialMap {
        let images = self.pairs.iter().map(|l| l.iter().map(|p| p.0.clone()).collect()).collect();
        SimplicialMap::new_unchecked(self.complex.clone(), self.left.clone(), images).expect("projection")
    }

    pub fn projection_right(&self) -> SimplicialMap {
        let images = self.pairs.iter().map(|l| l.iter().map(|p| p.1.clone()).collect()).collect();
        SimplicialMap::new_unchecked(self.complex.clone(), self.right.clone(), images).expect("projection")
    }

    /// The map `Z -> X × Y` with the given components.
    pub fn pairing(&self, f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap, CoreError> {
        let z = f.source();
        let mut images = Vec::with_capacity(levels(z));
        for d in 0..levels(z) {
            let mut level = Vec::new();
            for c in z.cells_of_dim(d) {
                let s = self
                    .simplex(f.image(c), g.image(c))
                    .ok_or_else(|| CoreError::NotAMap("pairing leaves the subproduct".into()))?;
                level.push(s);
            }
            images.push(level);
        }
        SimplicialMap::new_unchecked(z.clone(), self.complex.clone(), images)
    }
}

fn normalize_pair(
    left: &SimplicialSet,
    right: &SimplicialSet,
    index: &HashMap<(Simplex, Simplex), CellId>,
    x: &Simplex,
    y: &Simplex,
) -> Option<Simplex> {
    let common: Vec<usize> = x.word().iter().filter(|j| y.word().contains(j)).copied().collect();
    let dim = x.dim();
    let sec = section(&common, dim);
    let cx = left.act(x, &sec);
    let cy = right.act(y, &sec);
    let id = *index.get(&(cx, cy))?;
    Some(Simplex::from_parts_unchecked(id, common))
}

/// `f × g : X × Y -> X' × Y'`.
pub fn product_map(source: &Product, target: &Product, f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap, CoreError> {
    let mut images = Vec::with_capacity(source.pairs.len());
    for level in &source.pairs {
        let mut out = Vec::with_capacity(level.len());
        for (x, y) in level {
            out.push(
                target
                    .simplex(&f.apply(x), &g.apply(y))
                    .ok_or_else(|| CoreError::NotAMap("product map leaves the target".into()))?,
            );
        }
        images.push(out);
    }
    SimplicialMap::new_unchecked(source.complex.clone(), target.complex.clone(), images)
}

/// `X ×_Z Y` for `f : X -> Z` and `g : Y -> Z`.
pub fn pullback(f: &SimplicialMap, g: &SimplicialMap) -> Result<Product, CoreError> {
    if !Arc::ptr_eq(f.target(), g.target()) && f.target() != g.target() {
        return Err(CoreError::NotComposable);
    }
    Ok(Product::filtered(f.source().clone(), g.source().clone(), |x, y| f.apply(x) == g.apply(y)))
}

/// The join `X ⋆ Y`.
#[derive(Clone, Debug)]
pub struct Join {
    pub complex: Arc<SimplicialSet>,
    pub left: Arc<SimplicialSet>,
    pub right: Arc<SimplicialSet>,
    left_cells: HashMap<CellId, CellId>,
    right_cells: HashMap<CellId, CellId>,
    pairs: HashMap<(CellId, CellId), CellId>,
}

impl Join {
    pub fn new(left: Arc<SimplicialSet>, right: Arc<SimplicialSet>) -> Self {
        let mut b = Builder::new();
        let mut left_cells = HashMap::new();
        let mut right_cells = HashMap::new();
        let mut pairs = HashMap::new();
        let top = left.dim().map_or(0, |d| d + 1) + right.dim().map_or(0, |d| d + 1);
        for m in 0..top {
            for a in left.cells_of_dim(m) {
                let faces = left.faces(a).iter().map(|s| lift(&left_cells, s)).collect();
                left_cells.insert(a, b.push(m, Some(left.name(a)), faces).expect("join cell"));
            }
            for c in right.cells_of_dim(m) {
                let faces = right.faces(c).iter().map(|s| lift(&right_cells, s)).collect();
                let name = b.fresh_name(&right.name(c));
                right_cells.insert(c, b.push(m, Some(name), faces).expect("join cell"));
            }
            for p in 0..m {
                let q = m - 1 - p;
                for a in left.cells_of_dim(p) {
                    for c in right.cells_of_dim(q) {
                        let mut faces = Vec::with_capacity(m + 1);
                        for i in 0..=p {
                            faces.push(if p == 0 {
                                Simplex::cell(right_cells[&c])
                            } else {
                                join_simplex(&pairs, &left.face(&Simplex::cell(a), i).unwrap(), &Simplex::cell(c))
                            });
                        }
                        for j in 0..=q {
                            faces.push(if q == 0 {
                                Simplex::cell(left_cells[&a])
                            } else {
                                join_simplex(&pairs, &Simplex::cell(a), &right.face(&Simplex::cell(c), j).unwrap())
                            });
                        }
                        let name = b.fresh_name(&format!("{}*{}", left.name(a), right.name(c)));
                        pairs.insert((a, c), b.push(m, Some(name), faces).expect("join cell"));
                    }
                }
            }
        }
        let complex = Arc::new(b.build().expect("join names are unique"));
        Self { complex, left, right, left_cells, right_cells, pairs }
    }

    pub fn left_simplex(&self, s: &Simplex) -> Simplex {
        lift(&self.left_cells, s)
    }

    pub fn right_simplex(&self, s: &Simplex) -> Simplex {
        lift(&self.right_cells, s)
    }

    /// The join of a simplex of `X` with a simplex of `Y`.
    pub fn pair_simplex(&self, x: &Simplex, y: &Simplex) -> Simplex {
        join_simplex(&self.pairs, x, y)
    }

    pub fn inclusion_left(&self) -> MonoInclusion {
        self.inclusion(&self.left, &self.left_cells)
    }

    pub fn inclusion_right(&self) -> MonoInclusion {
        self.inclusion(&self.right, &self.right_cells)
    }

    fn inclusion(&self, x: &Arc<SimplicialSet>, cells: &HashMap<CellId, CellId>) -> MonoInclusion {
        let images = (0..levels(x)).map(|d| x.cells_of_dim(d).map(|c| Simplex::cell(cells[&c])).collect()).collect();
        MonoInclusion::new(SimplicialMap::new_unchecked(x.clone(), self.complex.clone(), images).expect("inclusion"))
            .expect("join summands include")
    }
}

fn lift(cells: &HashMap<CellId, CellId>, s: &Simplex) -> Simplex {
    Simplex::from_parts_unchecked(cells[&s.base], s.word().to_vec())
}

fn join_simplex(pairs: &HashMap<(CellId, CellId), CellId>, x: &Simplex, y: &Simplex) -> Simplex {
    let p = x.dim();
    let mut word = x.word().to_vec();
    word.extend(y.word().iter().map(|j| j + p + 1));
    Simplex::from_parts_unchecked(pairs[&(x.base, y.base)], word)
}

/// `f ⋆ g : X ⋆ Y -> X' ⋆ Y'`.
pub fn join_maps(source: &Join, target: &Join, f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap, CoreError> {
    let p = &source.complex;
    let mut images: Vec<Vec<Option<Simplex>>> = (0..levels(p)).map(|d| vec![None; p.count(d)]).collect();
    for (a, c) in &source.left_cells {
        images[c.dim][c.index] = Some(target.left_simplex(f.image(*a)));
    }
    for (a, c) in &source.right_cells {
        images[c.dim][c.index] = Some(target.right_simplex(g.image(*a)));
    }
    for ((a, b), c) in &source.pairs {
        images[c.dim][c.index] = Some(target.pair_simplex(f.image(*a), g.image(*b)));
    }
    let images = images.into_iter().map(|l| l.into_iter().map(Option::unwrap).collect()).collect();
    SimplicialMap::new(p.clone(), target.complex.clone(), images)
}

/// Searches for an isomorphism `X -> Y`, visiting at most `budget` nodes.
pub fn find_isomorphism(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>, budget: u64) -> Result<Option<SimplicialMap>, CoreError> {
    if x.counts() != y.counts() {
        return Ok(None);
    }
    let cells: Vec<CellId> = x.cells().collect();
    let mut images: Vec<Vec<Simplex>> = (0..levels(x)).map(|d| vec![Simplex::cell(CellId::new(d, 0)); x.count(d)]).collect();
    let mut used = std::collections::HashSet::new();
    let mut nodes = 0u64;
    fn go(
        k: usize,
        cells: &[CellId],
        x: &SimplicialSet,
        y: &SimplicialSet,
        images: &mut Vec<Vec<Simplex>>,
        used: &mut std::collections::HashSet<CellId>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool, CoreError> {
        let Some(&c) = cells.get(k) else { return Ok(true) };
        for t in y.cells_of_dim(c.dim) {
            *nodes += 1;
            if *nodes > budget {
                return Err(CoreError::Budget(budget));
            }
            if used.contains(&t) {
                continue;
            }
            let ok = x
                .faces(c)
                .iter()
                .zip(y.faces(t))
                .all(|(f, g)| push_simplex(images, f) == *g);
            if !ok {
                continue;
            }
            images[c.dim][c.index] = Simplex::cell(t);
            used.insert(t);
            if go(k + 1, cells, x, y, images, used, nodes, budget)? {
                return Ok(true);
            }
            used.remove(&t);
        }
        Ok(false)
    }
    if go(0, &cells, x, y, &mut images, &mut used, &mut nodes, budget)? {
        Ok(Some(SimplicialMap::new_unchecked(x.clone(), y.clone(), images)?))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{boundary, horn, inclusion_by_names, simplex_subcomplex, spine, standard_simplex};

    fn arc(x: SimplicialSet) -> Arc<SimplicialSet> {
        Arc::new(x)
    }

    #[test]
    fn product_of_intervals_is_a_square() {
        let i = arc(standard_simplex(1));
        let p = Product::new(i.clone(), i.clone());
        assert_eq!(p.complex.counts(), vec![4, 5, 2]);
        assert!(p.complex.validate().is_empty());
        let sq = arc(simplex_subcomplex(3, &[vec![0, 1, 3], vec![0, 2, 3]]));
        assert!(find_isomorphism(&p.complex, &sq, 10_000).unwrap().is_some());
    }

    #[test]
    fn prism_cell_counts() {
        let p = Product::new(arc(standard_simplex(2)), arc(standard_simplex(1)));
        assert_eq!(p.complex.counts(), vec![6, 12, 10, 3]);
        assert!(p.complex.validate().is_empty());
        let pr = p.projection_left();
        assert!(SimplicialMap::new(pr.source().clone(), pr.target().clone(), pr.images().to_vec()).is_ok());
    }

    #[test]
    fn join_of_simplices_is_a_simplex() {
        let j = Join::new(arc(standard_simplex(1)), arc(standard_simplex(0)));
        assert_eq!(j.complex.counts(), vec![3, 3, 1]);
        assert!(j.complex.validate().is_empty());
        let iso = find_isomorphism(&j.complex, &arc(standard_simplex(2)), 10_000).unwrap();
        assert!(iso.is_some());
        let h = Join::new(arc(horn(2, 1)), arc(standard_simplex(0)));
        assert_eq!(h.complex.counts(), vec![4, 5, 2]);
        assert!(h.complex.validate().is_empty());
    }

    #[test]
    fn pushout_of_spine_into_boundary() {
        let d3 = arc(standard_simplex(3));
        let i3 = arc(spine(3));
        let inc = inclusion_by_names(i3.clone(), d3.clone()).unwrap();
        let bd = arc(boundary(3));
        let f = inclusion_by_names(i3, bd).unwrap();
        let p = pushout(&inc, f.map()).unwrap();
        assert_eq!(p.complex.counts(), vec![4, 9, 8, 1]);
        assert!(p.complex.validate().is_empty());
        assert!(SimplicialMap::new(
            p.from_attached.source().clone(),
            p.complex.clone(),
            p.from_attached.images().to_vec()
        )
        .is_ok());
    }

    #[test]
    fn skeleton_and_full_subcomplex() {
        let d3 = arc(standard_simplex(3));
        assert_eq!(skeleton(&d3, 1).source().counts(), vec![4, 6]);
        assert_eq!(full_subcomplex(&d3, &[0, 2, 3]).source().counts(), vec![3, 3, 1]);
        let g = generated_subcomplex(&d3, &[d3.cell_by_name("013").unwrap()]);
        assert_eq!(g.source().counts(), vec![3, 3, 1]);
    }

    #[test]
    fn pullback_over_a_point_is_the_product() {
        let i = arc(standard_simplex(1));
        let pt = arc(standard_simplex(0));
        let f = SimplicialMap::to_point(i.clone(), pt.clone()).unwrap();
        let pb = pullback(&f, &f).unwrap();
        assert_eq!(pb.complex.counts(), vec![4, 5, 2]);
        let diag = pullback(&SimplicialMap::identity(i.clone()), &SimplicialMap::identity(i)).unwrap();
        assert_eq!(diag.complex.counts(), vec![2, 1]);
    }

    #[test]
    fn product_and_join_examples() {
        let pt = arc(standard_simplex(0));
        let d2 = arc(standard_simplex(2));
        let p = Product::new(pt.clone(), d2.clone());
        assert!(find_isomorphism(&p.complex, &d2, 10_000).unwrap().is_some());
        let p = Product::new(arc(standard_simplex(1)), d2);
        assert_eq!(p.complex.count(3), 3);
        let j = Join::new(pt.clone(), pt.clone());
        assert!(find_isomorphism(&j.complex, &arc(standard_simplex(1)), 1000).unwrap().is_some());
        let cone = Join::new(pt, arc(boundary(1)));
        assert_eq!(cone.complex.counts(), vec![3, 2]);
        for a in 0..=3 {
            for b in 0..=3 {
                let j = Join::new(arc(standard_simplex(a)), arc(standard_simplex(b)));
                assert!(j.complex.validate().is_empty());
                let target = arc(standard_simplex(a + b + 1));
                assert!(find_isomorphism(&j.complex, &target, 1_000_000).unwrap().is_some(), "{a} {b}");
            }
        }
    }

    #[test]
    fn pushout_examples() {
        let h = arc(horn(2, 1));
        let d2 = arc(standard_simplex(2));
        let inc = inclusion_by_names(h.clone(), d2).unwrap();
        let p = pushout(&inc, &SimplicialMap::identity(h.clone())).unwrap();
        assert!(find_isomorphism(&p.complex, &arc(standard_simplex(2)), 1000).unwrap().is_some());

        let e01 = h.cell_by_name("01").unwrap();
        let v1 = h.cell_by_name("1").unwrap();
        let v0 = h.cell_by_name("0").unwrap();
        let s0v1 = Simplex::degenerate(v1, vec![0]).unwrap();
        let images = vec![vec![Simplex::cell(v0), Simplex::cell(v1), Simplex::cell(v1)], vec![Simplex::cell(e01), s0v1]];
        let f = SimplicialMap::new(h.clone(), h.clone(), images).unwrap();
        let p = pushout(&inc, &f).unwrap();
        assert_eq!(p.complex.total_cells(), h.total_cells() + 2);
        assert!(p.complex.validate().is_empty());
    }
}
