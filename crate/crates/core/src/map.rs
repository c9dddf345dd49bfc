//! Simplicial maps and monomorphisms.

use std::collections::HashMap;
use std::sync::Arc;

use crate::complex::SimplicialSet;
use crate::error::CoreError;
use crate::simplex::{CellId, Simplex};

/// A simplicial map, given by the image of every nondegenerate cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    images: Vec<Vec<Simplex>>,
}

impl SimplicialMap {
    /// Checks dimensions and face compatibility.
    pub fn new(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        images: Vec<Vec<Simplex>>,
    ) -> Result<Self, CoreError> {
        let m = Self::new_unchecked(source, target, images)?;
        m.check()?;
        Ok(m)
    }

    /// Checks only that every cell has an image of the right dimension.
    pub fn new_unchecked(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        mut images: Vec<Vec<Simplex>>,
    ) -> Result<Self, CoreError> {
        let levels = source.dim().map_or(0, |d| d + 1);
        images.resize_with(levels.max(images.len()), Vec::new);
        for c in source.cells() {
            let img = images
                .get(c.dim)
                .and_then(|l| l.get(c.index))
                .ok_or_else(|| CoreError::NotAMap(format!("no image for cell {}", source.name(c))))?;
            if img.dim() != c.dim || !target.contains(img.base) {
                return Err(CoreError::NotAMap(format!(
                    "image of {} is not a {}-simplex of the target",
                    source.name(c),
                    c.dim
                )));
            }
        }
        Ok(Self { source, target, images })
    }

    fn check(&self) -> Result<(), CoreError> {
        for c in self.source.cells() {
            if c.dim == 0 {
                continue;
            }
            let img = self.image(c);
            for (i, f) in self.source.faces(c).iter().enumerate() {
                let expected = self.target.face(img, i)?;
                if self.apply(f) != expected {
                    return Err(CoreError::NotAMap(format!(
                        "face {i} of {} is not preserved",
                        self.source.name(c)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(x: Arc<SimplicialSet>) -> Self {
        let images = (0..x.dim().map_or(0, |d| d + 1))
            .map(|d| x.cells_of_dim(d).map(Simplex::cell).collect())
            .collect();
        Self { source: x.clone(), target: x, images }
    }

    /// The unique map out of the empty complex.
    pub fn from_empty(target: Arc<SimplicialSet>) -> Self {
        Self { source: Arc::new(SimplicialSet::empty()), target, images: Vec::new() }
    }

    /// The unique map to a complex with a single vertex.
    pub fn to_point(source: Arc<SimplicialSet>, point: Arc<SimplicialSet>) -> Result<Self, CoreError> {
        if point.counts() != [1] {
            return Err(CoreError::Precondition("target is not a point".into()));
        }
        let v = CellId::new(0, 0);
        let images = (0..source.dim().map_or(0, |d| d + 1))
            .map(|d| {
                let word: Vec<usize> = (0..d).collect();
                vec![Simplex::from_parts_unchecked(v, word); source.count(d)]
            })
            .collect();
        Ok(Self { source, target: point, images })
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.target
    }

    pub fn image(&self, c: CellId) -> &Simplex {
        &self.images[c.dim][c.index]
    }

    pub fn images(&self) -> &[Vec<Simplex>] {
        &self.images
    }

    /// Image of an arbitrary simplex of the source.
    pub fn apply(&self, s: &Simplex) -> Simplex {
        if s.is_nondegenerate() {
            return self.image(s.base).clone();
        }
        self.target.act(self.image(s.base), &s.surjection())
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        self.image(CellId::new(0, v)).base.index
    }

    /// `other o self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap, CoreError> {
        if !Arc::ptr_eq(&self.target, &other.source) && self.target != other.source {
            return Err(CoreError::NotComposable);
        }
        let images = self
            .images
            .iter()
            .map(|level| level.iter().map(|s| other.apply(s)).collect())
            .collect();
        Ok(SimplicialMap { source: self.source.clone(), target: other.target.clone(), images })
    }

    pub fn is_mono(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.source.cells().all(|c| {
            let img = self.image(c);
            img.is_nondegenerate() && seen.insert(img.base)
        })
    }

    pub fn is_vertex_bijective(&self) -> bool {
        let mut hit = vec![false; self.target.count(0)];
        for v in 0..self.source.count(0) {
            let t = self.vertex_image(v);
            if hit[t] {
                return false;
            }
            hit[t] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// A simplicial map that is injective on nondegenerate cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoInclusion {
    map: SimplicialMap,
    preimage: HashMap<CellId, CellId>,
}

impl MonoInclusion {
    pub fn new(map: SimplicialMap) -> Result<Self, CoreError> {
        let mut preimage = HashMap::new();
        for c in map.source.cells() {
            let img = map.image(c);
            if !img.is_nondegenerate() {
                return Err(CoreError::NotMono(format!("{} is sent to a degenerate simplex", map.source.name(c))));
            }
            if preimage.insert(img.base, c).is_some() {
                return Err(CoreError::NotMono(format!("two cells are sent to {}", map.target.name(img.base))));
            }
        }
        Ok(Self { map, preimage })
    }

    pub fn identity(x: Arc<SimplicialSet>) -> Self {
        Self::new(SimplicialMap::identity(x)).expect("identity is mono")
    }

    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.map.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.map.target
    }

    /// The source cell sent to `c`, if any.
    pub fn preimage(&self, c: CellId) -> Option<CellId> {
        self.preimage.get(&c).copied()
    }

    pub fn covers(&self, c: CellId) -> bool {
        self.preimage.contains_key(&c)
    }

    /// Target cells outside the image, by dimension then index.
    pub fn missing_cells(&self) -> Vec<CellId> {
        self.target().cells().filter(|c| !self.covers(*c)).collect()
    }

    pub fn then(&self, other: &MonoInclusion) -> Result<MonoInclusion, CoreError> {
        MonoInclusion::new(self.map.then(&other.map)?)
    }
}
