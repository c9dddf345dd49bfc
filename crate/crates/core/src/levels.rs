//! Simplicial objects given level by level, and their materialization as
//! finite complexes up to a dimension bound.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use crate::complex::{degenerate_by, Builder, SimplicialSet};
use crate::error::CoreError;
use crate::map::SimplicialMap;
use crate::simplex::{codegeneracy, Simplex};

/// A simplicial set presented by finite levels and face/degeneracy
/// operators on their elements.
pub trait Levelwise {
    type Elem: Clone + Eq + Hash + Ord;

    /// Every element of level `n`.
    fn level(&self, n: usize) -> Result<Vec<Self::Elem>, CoreError>;

    /// `d_i x` for `x` in level `n`.
    fn face(&self, x: &Self::Elem, n: usize, i: usize) -> Self::Elem;

    /// `s_j x` for `x` in level `n`.
    fn degeneracy(&self, x: &Self::Elem, n: usize, j: usize) -> Self::Elem;

    fn label(&self, _x: &Self::Elem) -> Option<String> {
        None
    }
}

/// A levelwise object materialized through level `up_to`.
#[derive(Clone, Debug)]
pub struct Materialized<E> {
    pub complex: Arc<SimplicialSet>,
    pub up_to: usize,
    /// Every element of each level.
    pub levels: Vec<Vec<E>>,
    /// The element carried by each nondegenerate cell.
    pub cells: Vec<Vec<E>>,
    normal: HashMap<E, Simplex>,
}

impl<E: Clone + Eq + Hash> Materialized<E> {
    /// Normal form of an element in the materialized complex.
    pub fn simplex(&self, x: &E) -> Option<&Simplex> {
        self.normal.get(x)
    }

    pub fn element(&self, c: crate::CellId) -> &E {
        &self.cells[c.dim][c.index]
    }
}

pub fn materialize<L: Levelwise>(obj: &L, up_to: usize) -> Result<Materialized<L::Elem>, CoreError> {
    let mut b = Builder::new();
    let mut normal: HashMap<L::Elem, Simplex> = HashMap::new();
    let mut levels = Vec::with_capacity(up_to + 1);
    let mut cells: Vec<Vec<L::Elem>> = Vec::with_capacity(up_to + 1);
    for n in 0..=up_to {
        let mut level = obj.level(n)?;
        level.sort();
        level.dedup();
        let mut here = Vec::new();
        for x in &level {
            let mut found = None;
            for j in 0..n {
                let y = obj.face(x, n, j);
                if obj.degeneracy(&y, n - 1, j) == *x {
                    let s = normal
                        .get(&y)
                        .ok_or_else(|| CoreError::Malformed("face of an element is missing from the level below".into()))?;
                    found = Some(degenerate_by(s, &codegeneracy(n - 1, j)));
                    break;
                }
            }
            let s = match found {
                Some(s) => s,
                None => {
                    let faces = if n == 0 {
                        Vec::new()
                    } else {
                        (0..=n)
                            .map(|i| {
                                normal.get(&obj.face(x, n, i)).cloned().ok_or_else(|| {
                                    CoreError::Malformed("face of an element is missing from the level below".into())
                                })
                            })
                            .collect::<Result<Vec<_>, _>>()?
                    };
                    let label = obj.label(x).map(|l| b.fresh_name(&l));
                    here.push(x.clone());
                    Simplex::cell(b.push(n, label, faces)?)
                }
            };
            normal.insert(x.clone(), s);
        }
        cells.push(here);
        levels.push(level);
    }
    let complex = Arc::new(b.build()?);
    cells.truncate(complex.dim().map_or(0, |d| d + 1));
    Ok(Materialized { complex, up_to, levels, cells, normal })
}

/// The map induced by a levelwise map `f` on elements.
pub fn materialize_map<E: Clone + Eq + Hash>(
    source: &Materialized<E>,
    target: Arc<SimplicialSet>,
    f: impl Fn(&E, usize) -> Simplex,
) -> Result<SimplicialMap, CoreError> {
    let images = source
        .cells
        .iter()
        .enumerate()
        .map(|(n, level)| level.iter().map(|x| f(x, n)).collect())
        .collect();
    SimplicialMap::new(source.complex.clone(), target, images)
}

/// A complex viewed as a levelwise object; materializing recovers it.
pub struct Simplices<'a>(pub &'a SimplicialSet);

impl Levelwise for Simplices<'_> {
    type Elem = Simplex;

    fn level(&self, n: usize) -> Result<Vec<Simplex>, CoreError> {
        Ok(self.0.simplices(n))
    }

    fn face(&self, x: &Simplex, _n: usize, i: usize) -> Simplex {
        self.0.face(x, i).unwrap()
    }

    fn degeneracy(&self, x: &Simplex, _n: usize, j: usize) -> Simplex {
        self.0.degeneracy(x, j)
    }

    fn label(&self, x: &Simplex) -> Option<String> {
        Some(self.0.name(x.base))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::s_prime;
    use crate::constructions::find_isomorphism;
    use crate::generators::{horn, j_truncation, standard_simplex};

    #[test]
    fn materializing_a_complex_recovers_it() {
        for x in [standard_simplex(3), horn(3, 2), j_truncation(2), s_prime()] {
            let top = x.dim().unwrap();
            let m = materialize(&Simplices(&x), top + 1).unwrap();
            assert_eq!(m.complex.counts(), x.counts());
            let x = Arc::new(x);
            assert!(find_isomorphism(&m.complex, &x, 100_000).unwrap().is_some());
            let back = materialize_map(&m, x.clone(), |s, _| s.clone()).unwrap();
            assert!(back.is_mono());
        }
    }
}
