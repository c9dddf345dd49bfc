//! Backtracking search for simplicial maps with prescribed values.
//!
//! Cells of the domain without a prescribed image are assigned in order of
//! increasing dimension. A `d`-cell is offered every `d`-simplex of the
//! target (degenerate ones included) whose last face agrees with the image
//! already chosen for the cell's last face, in normal-form lexicographic
//! order; the remaining faces and any constraint over a base are checked
//! before descending.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;
use std::sync::{Arc, Mutex};

use crate::complex::{degenerate_by, SimplicialSet};
use crate::error::CoreError;
use crate::map::SimplicialMap;
use crate::simplex::{CellId, Simplex};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Default)]
struct DimIndex {
    all: Vec<Simplex>,
    by_last_face: HashMap<Simplex, Vec<Simplex>>,
}

/// A target complex with lazily built candidate tables, shareable across
/// many searches.
#[derive(Debug)]
pub struct TargetIndex {
    complex: Arc<SimplicialSet>,
    dims: Mutex<Vec<Option<Arc<DimIndex>>>>,
}

impl TargetIndex {
    pub fn new(complex: Arc<SimplicialSet>) -> Self {
        Self { complex, dims: Mutex::new(Vec::new()) }
    }

    pub fn complex(&self) -> &Arc<SimplicialSet> {
        &self.complex
    }

    fn dim(&self, d: usize) -> Arc<DimIndex> {
        let mut dims = self.dims.lock().unwrap();
        if dims.len() <= d {
            dims.resize(d + 1, None);
        }
        dims[d]
            .get_or_insert_with(|| {
                let all = self.complex.simplices(d);
                let mut by_last_face: HashMap<Simplex, Vec<Simplex>> = HashMap::new();
                if d > 0 {
                    for s in &all {
                        let last = self.complex.face(s, d).unwrap();
                        by_last_face.entry(last).or_default().push(s.clone());
                    }
                }
                Arc::new(DimIndex { all, by_last_face })
            })
            .clone()
    }

    /// Every `d`-simplex of the target in normal-form order.
    pub fn simplices(&self, d: usize) -> Vec<Simplex> {
        self.dim(d).all.clone()
    }
}

/// Requires the image of every domain cell `c` to lie over `over[c]` along `p`.
#[derive(Clone, Debug)]
pub struct Over<'a> {
    pub p: &'a SimplicialMap,
    pub images: Vec<Vec<Simplex>>,
}

/// A search for maps `domain -> target` extending the prescribed values.
pub struct MapSearch<'a> {
    domain: &'a SimplicialSet,
    target: &'a TargetIndex,
    fixed: Vec<Vec<Option<Simplex>>>,
    over: Option<Over<'a>>,
    injective: bool,
    budget: u64,
}

pub(crate) fn image_of(images: &[Vec<Simplex>], s: &Simplex) -> Simplex {
    let img = &images[s.base.dim][s.base.index];
    if s.is_nondegenerate() {
        img.clone()
    } else {
        degenerate_by(img, &s.surjection())
    }
}

impl<'a> MapSearch<'a> {
    pub fn new(domain: &'a SimplicialSet, target: &'a TargetIndex) -> Self {
        let fixed = (0..domain.dim().map_or(0, |d| d + 1)).map(|d| vec![None; domain.count(d)]).collect();
        Self { domain, target, fixed, over: None, injective: false, budget: DEFAULT_NODE_BUDGET }
    }

    pub fn fix(mut self, c: CellId, image: Simplex) -> Self {
        self.fixed[c.dim][c.index] = Some(image);
        self
    }

    pub fn fix_all(mut self, values: impl IntoIterator<Item = (CellId, Simplex)>) -> Self {
        for (c, s) in values {
            self.fixed[c.dim][c.index] = Some(s);
        }
        self
    }

    pub fn over(mut self, over: Over<'a>) -> Self {
        self.over = Some(over);
        self
    }

    /// Only nondegenerate, pairwise distinct images.
    pub fn injective(mut self, yes: bool) -> Self {
        self.injective = yes;
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Calls `visit` on every solution until it breaks. Returns whether the
    /// visitor stopped the search.
    pub fn run(&self, mut visit: impl FnMut(&[Vec<Simplex>]) -> ControlFlow<()>) -> Result<bool, CoreError> {
        let x = self.domain;
        let mut images: Vec<Vec<Simplex>> = Vec::with_capacity(self.fixed.len());
        let mut free = Vec::new();
        let mut used = HashSet::new();
        for (d, level) in self.fixed.iter().enumerate() {
            let mut out = Vec::with_capacity(level.len());
            for (k, s) in level.iter().enumerate() {
                match s {
                    Some(s) => {
                        if self.injective {
                            used.insert(s.base);
                        }
                        out.push(s.clone());
                    }
                    None => {
                        free.push(CellId::new(d, k));
                        out.push(Simplex::cell(CellId::new(0, 0)));
                    }
                }
            }
            images.push(out);
        }
        // fixed cells with a free face are checked once everything is assigned
        let free_set: HashSet<CellId> = free.iter().copied().collect();
        let late: Vec<CellId> = x
            .cells()
            .filter(|c| !free_set.contains(c) && x.faces(*c).iter().any(|f| free_set.contains(&f.base)))
            .collect();
        if let Some(over) = &self.over {
            for c in x.cells().filter(|c| !free_set.contains(c)) {
                if over.p.apply(&images[c.dim][c.index]) != over.images[c.dim][c.index] {
                    return Ok(false);
                }
            }
        }
        for c in x.cells().filter(|c| !free_set.contains(c) && !late.contains(c)) {
            if !self.faces_agree(c, &images[c.dim][c.index], &images) {
                return Ok(false);
            }
        }
        let tables: Vec<Arc<DimIndex>> = (0..images.len()).map(|d| self.target.dim(d)).collect();
        let mut state = State { nodes: 0, images, used };
        let flow = self.descend(0, &free, &late, &tables, &mut state, &mut visit)?;
        Ok(flow.is_break())
    }

    fn faces_agree(&self, c: CellId, t: &Simplex, images: &[Vec<Simplex>]) -> bool {
        let y = self.target.complex();
        self.domain
            .faces(c)
            .iter()
            .enumerate()
            .all(|(i, f)| y.face(t, i).unwrap() == image_of(images, f))
    }

    fn descend(
        &self,
        k: usize,
        free: &[CellId],
        late: &[CellId],
        tables: &[Arc<DimIndex>],
        st: &mut State,
        visit: &mut impl FnMut(&[Vec<Simplex>]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>, CoreError> {
        let Some(&c) = free.get(k) else {
            if late.iter().all(|&c| self.faces_agree(c, &st.images[c.dim][c.index], &st.images)) {
                return Ok(visit(&st.images));
            }
            return Ok(ControlFlow::Continue(()));
        };
        let table = &tables[c.dim];
        let candidates: &[Simplex] = if c.dim == 0 {
            &table.all
        } else {
            let last = image_of(&st.images, &self.domain.faces(c)[c.dim]);
            match table.by_last_face.get(&last) {
                Some(v) => v,
                None => return Ok(ControlFlow::Continue(())),
            }
        };
        let y = self.target.complex();
        for t in candidates {
            st.nodes += 1;
            if st.nodes > self.budget {
                return Err(CoreError::Budget(self.budget));
            }
            if self.injective && (!t.is_nondegenerate() || st.used.contains(&t.base)) {
                continue;
            }
            if let Some(over) = &self.over {
                if over.p.apply(t) != over.images[c.dim][c.index] {
                    continue;
                }
            }
            let faces = self.domain.faces(c);
            let ok = (0..c.dim).all(|i| y.face(t, i).unwrap() == image_of(&st.images, &faces[i]));
            if !ok {
                continue;
            }
            st.images[c.dim][c.index] = t.clone();
            if self.injective {
                st.used.insert(t.base);
            }
            let flow = self.descend(k + 1, free, late, tables, st, visit)?;
            if self.injective {
                st.used.remove(&t.base);
            }
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// The first solution in search order.
    pub fn first(&self) -> Result<Option<Vec<Vec<Simplex>>>, CoreError> {
        let mut found = None;
        self.run(|imgs| {
            found = Some(imgs.to_vec());
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    /// Every solution, in search order.
    pub fn all(&self) -> Result<Vec<Vec<Vec<Simplex>>>, CoreError> {
        let mut out = Vec::new();
        self.run(|imgs| {
            out.push(imgs.to_vec());
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }
}

struct State {
    nodes: u64,
    images: Vec<Vec<Simplex>>,
    used: HashSet<CellId>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{horn, standard_simplex};

    #[test]
    fn counts_maps_between_simplices() {
        // monotone maps [1] -> [2]: 6; [2] -> [2]: 10
        let t = TargetIndex::new(Arc::new(standard_simplex(2)));
        assert_eq!(MapSearch::new(&standard_simplex(1), &t).all().unwrap().len(), 6);
        assert_eq!(MapSearch::new(&standard_simplex(2), &t).all().unwrap().len(), 10);
        assert_eq!(MapSearch::new(&horn(2, 1), &t).all().unwrap().len(), 10);
    }

    #[test]
    fn horn_self_maps() {
        let h = horn(2, 1);
        let t = TargetIndex::new(Arc::new(h.clone()));
        assert_eq!(MapSearch::new(&h, &t).all().unwrap().len(), 8);
        assert_eq!(MapSearch::new(&h, &t).injective(true).all().unwrap().len(), 1);
    }

    #[test]
    fn budget_is_reported() {
        let t = TargetIndex::new(Arc::new(standard_simplex(3)));
        let r = MapSearch::new(&standard_simplex(3), &t).budget(5).all();
        assert!(matches!(r, Err(CoreError::Budget(5))));
    }

    #[test]
    fn fixed_values_constrain() {
        let d2 = Arc::new(standard_simplex(2));
        let t = TargetIndex::new(d2.clone());
        let h = horn(2, 1);
        let fixed = h.cells().map(|c| (c, Simplex::cell(d2.cell_by_name(&h.name(c)).unwrap())));
        let d = standard_simplex(2);
        let fixed: Vec<_> = fixed.map(|(c, s)| (d.cell_by_name(&h.name(c)).unwrap(), s)).collect();
        let sols = MapSearch::new(&d, &t).fix_all(fixed).all().unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0][2][0], Simplex::cell(d2.cell_by_name("012").unwrap()));
    }
}
