//! Slices under a vertex and left mapping spaces.
//!
//! Level `n` of `X_{x/}` is the set of `(n+1)`-simplices `u` with `u(0) = x`,
//! with `d_i` acting as `d_{i+1}` and `s_j` as `s_{j+1}`. The left mapping
//! space `Hom^L(x, y)` is the fiber over `y` of `u ↦ d_0 u`. Its
//! nondegenerate elements have degeneracy word contained in `{0}`, so it has
//! no nondegenerate cells above `dim X` and materializing it that far is
//! exact.

use std::sync::Arc;

use crate::complex::SimplicialSet;
use crate::error::CoreError;
use crate::levels::{materialize, Levelwise, Materialized};
use crate::simplex::{CellId, Simplex};

/// `X_{x/}`, optionally restricted to the fiber over a vertex `y`.
pub struct Slice<'a> {
    pub ambient: &'a SimplicialSet,
    pub source: CellId,
    pub fiber: Option<CellId>,
}

impl Levelwise for Slice<'_> {
    type Elem = Simplex;

    fn level(&self, n: usize) -> Result<Vec<Simplex>, CoreError> {
        let x = self.ambient;
        Ok(x.simplices(n + 1)
            .into_iter()
            .filter(|u| x.vertex(u, 0) == self.source.index)
            .filter(|u| match self.fiber {
                None => true,
                Some(y) => {
                    let rest = x.face(u, 0).unwrap();
                    rest.is_constant() && rest.base == y
                }
            })
            .collect())
    }

    fn face(&self, u: &Simplex, _n: usize, i: usize) -> Simplex {
        self.ambient.face(u, i + 1).unwrap()
    }

    fn degeneracy(&self, u: &Simplex, _n: usize, j: usize) -> Simplex {
        self.ambient.degeneracy(u, j + 1)
    }

    fn label(&self, u: &Simplex) -> Option<String> {
        Some(self.ambient.token(u))
    }
}

fn vertex(x: &SimplicialSet, v: CellId) -> Result<CellId, CoreError> {
    if v.dim == 0 && x.contains(v) {
        Ok(v)
    } else {
        Err(CoreError::NotAVertex(v.to_string()))
    }
}

/// `X_{x/}` through level `up_to`.
pub fn slice_under(x: &SimplicialSet, v: CellId, up_to: usize) -> Result<Materialized<Simplex>, CoreError> {
    materialize(&Slice { ambient: x, source: vertex(x, v)?, fiber: None }, up_to)
}

/// `Hom^L_X(x, y)` through a level bound.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub ambient: Arc<SimplicialSet>,
    pub source_vertex: CellId,
    pub target_vertex: CellId,
    pub computed_up_to: usize,
    pub space: Materialized<Simplex>,
}

impl HomSpace {
    pub fn complex(&self) -> &Arc<SimplicialSet> {
        &self.space.complex
    }

    /// Level `n`: every `(n+1)`-simplex of the ambient complex in the space.
    pub fn level(&self, n: usize) -> &[Simplex] {
        &self.space.levels[n]
    }

    /// Whether every nondegenerate cell is present, so the truncation is the
    /// whole space.
    pub fn is_complete(&self) -> bool {
        self.ambient.dim().is_none_or(|d| self.computed_up_to >= d)
    }
}

pub fn hom_left(x: &Arc<SimplicialSet>, from: CellId, to: CellId, up_to: usize) -> Result<HomSpace, CoreError> {
    let slice = Slice { ambient: x, source: vertex(x, from)?, fiber: Some(vertex(x, to)?) };
    Ok(HomSpace {
        ambient: x.clone(),
        source_vertex: from,
        target_vertex: to,
        computed_up_to: up_to,
        space: materialize(&slice, up_to)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::s_prime;
    use crate::generators::{horn, standard_simplex};

    fn v(x: &SimplicialSet, name: &str) -> CellId {
        x.cell_by_name(name).unwrap()
    }

    #[test]
    fn hom_in_a_simplex_is_a_point() {
        let d2 = Arc::new(standard_simplex(2));
        let h = hom_left(&d2, v(&d2, "0"), v(&d2, "2"), 2).unwrap();
        assert_eq!(h.complex().counts(), vec![1]);
        assert_eq!(h.level(0), &[Simplex::cell(v(&d2, "02"))]);
        assert_eq!(h.level(2).len(), 1);
    }

    #[test]
    fn hom_in_a_horn_is_empty() {
        let h2 = Arc::new(horn(2, 1));
        let h = hom_left(&h2, v(&h2, "0"), v(&h2, "2"), 2).unwrap();
        assert!(h.complex().is_empty());
    }

    #[test]
    fn endomorphisms_of_a_point() {
        let pt = Arc::new(standard_simplex(0).relabeled(|_, _| "x".into()).unwrap());
        let h = hom_left(&pt, v(&pt, "x"), v(&pt, "x"), 1).unwrap();
        assert_eq!(h.complex().counts(), vec![1]);
        assert!(h.level(1).iter().all(|u| u.is_constant()));
    }

    #[test]
    fn hom_is_the_fiber_of_the_slice() {
        let s = Arc::new(s_prime());
        for a in s.cells_of_dim(0) {
            let slice = slice_under(&s, a, 2).unwrap();
            for b in s.cells_of_dim(0) {
                let h = hom_left(&s, a, b, 2).unwrap();
                for n in 0..=2 {
                    let fiber: Vec<Simplex> = slice.levels[n]
                        .iter()
                        .filter(|u| {
                            let r = s.face(u, 0).unwrap();
                            r.is_constant() && r.base == b
                        })
                        .cloned()
                        .collect();
                    assert_eq!(h.level(n), &fiber[..]);
                }
            }
        }
    }

    #[test]
    fn rejects_non_vertices() {
        let d1 = Arc::new(standard_simplex(1));
        assert!(hom_left(&d1, CellId::new(1, 0), CellId::new(0, 0), 1).is_err());
    }
}
