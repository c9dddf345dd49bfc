//! Function complexes `C^K` and their full subcomplexes `C^(K)` on the maps
//! that send every edge of `K` to an equivalence.
//!
//! Level `n` is the set of maps `K × Δⁿ -> C`; faces and degeneracies act by
//! precomposition with `id × δ_i` and `id × σ_j`.

use std::sync::Arc;

use crate::complex::SimplicialSet;
use crate::constructions::{product_map, push_simplex, Product};
use crate::error::CoreError;
use crate::generators::standard_simplex;
use crate::homotopy::{homotopy_category, is_equivalence_edge, CategoryPresentation};
use crate::levels::{materialize, materialize_map, Levelwise, Materialized};
use crate::lifting::simplex_map;
use crate::map::{MonoInclusion, SimplicialMap};
use crate::search::{MapSearch, TargetIndex};
use crate::simplex::{codegeneracy, coface, Simplex};

/// A map `K × Δⁿ -> C`, tagged with `n`.
pub type Element = (usize, Vec<Vec<Simplex>>);

fn levels(x: &SimplicialSet) -> usize {
    x.dim().map_or(0, |d| d + 1)
}

fn apply(images: &[Vec<Simplex>], s: &Simplex) -> Simplex {
    push_simplex(images, s)
}

struct Shapes {
    /// `K × Δⁿ` for `n ≤ up_to + 1`.
    products: Vec<Product>,
    /// `id × δ_i : K × Δ^{n-1} -> K × Δⁿ`, indexed by `n` then `i`.
    cofaces: Vec<Vec<SimplicialMap>>,
    /// `id × σ_j : K × Δ^{n+1} -> K × Δⁿ`, indexed by `n` then `j`.
    codegeneracies: Vec<Vec<SimplicialMap>>,
}

impl Shapes {
    fn new(k: &Arc<SimplicialSet>, up_to: usize) -> Result<Self, CoreError> {
        let simplices: Vec<Arc<SimplicialSet>> = (0..=up_to + 1).map(|n| Arc::new(standard_simplex(n))).collect();
        let products: Vec<Product> = simplices.iter().map(|d| Product::new(k.clone(), d.clone())).collect();
        let id = SimplicialMap::identity(k.clone());
        let top = |n: usize| Simplex::cell(crate::CellId::new(n, 0));
        let mut cofaces = vec![Vec::new()];
        for n in 1..=up_to {
            let mut here = Vec::new();
            for i in 0..=n {
                let delta = simplex_map(&simplices[n - 1], &simplices[n], &simplices[n].act(&top(n), &coface(n, i)));
                here.push(product_map(&products[n - 1], &products[n], &id, &delta)?);
            }
            cofaces.push(here);
        }
        let mut codegeneracies = Vec::new();
        for n in 0..up_to {
            let mut here = Vec::new();
            for j in 0..=n {
                let sigma = simplex_map(&simplices[n + 1], &simplices[n], &simplices[n].act(&top(n), &codegeneracy(n, j)));
                here.push(product_map(&products[n + 1], &products[n], &id, &sigma)?);
            }
            codegeneracies.push(here);
        }
        Ok(Self { products, cofaces, codegeneracies })
    }
}

struct Levels<'a> {
    shapes: &'a Shapes,
    index: TargetIndex,
    budget: u64,
    /// Equivalence test for the restricted complex.
    equivalences: Option<CategoryPresentation>,
}

impl Levels<'_> {
    fn admissible(&self, n: usize, f: &[Vec<Simplex>]) -> bool {
        let Some(h) = &self.equivalences else { return true };
        let prod = &self.shapes.products[n];
        prod.complex.cells_of_dim(1).all(|c| {
            let (x, y) = prod.pair(c);
            !y.is_constant() || x.is_constant() || is_equivalence_edge(h, &f[1][c.index]).is_yes()
        })
    }
}

impl Levelwise for Levels<'_> {
    type Elem = Element;

    fn level(&self, n: usize) -> Result<Vec<Element>, CoreError> {
        let prod = &self.shapes.products[n].complex;
        let maps = MapSearch::new(prod, &self.index).budget(self.budget).all()?;
        Ok(maps.into_iter().filter(|f| self.admissible(n, f)).map(|f| (n, f)).collect())
    }

    fn face(&self, x: &Element, n: usize, i: usize) -> Element {
        let m = &self.shapes.cofaces[n][i];
        (n - 1, m.images().iter().map(|l| l.iter().map(|s| apply(&x.1, s)).collect()).collect())
    }

    fn degeneracy(&self, x: &Element, n: usize, j: usize) -> Element {
        let m = &self.shapes.codegeneracies[n][j];
        (n + 1, m.images().iter().map(|l| l.iter().map(|s| apply(&x.1, s)).collect()).collect())
    }
}

#[derive(Clone, Debug)]
pub struct FunctionComplex {
    pub base: Arc<SimplicialSet>,
    pub exponent: Arc<SimplicialSet>,
    pub up_to: usize,
    pub restricted: bool,
    pub space: Materialized<Element>,
    products: Vec<Product>,
}

impl FunctionComplex {
    pub fn complex(&self) -> &Arc<SimplicialSet> {
        &self.space.complex
    }

    pub fn level(&self, n: usize) -> &[Element] {
        &self.space.levels[n]
    }

    /// The map `K × Δⁿ -> C` of an element.
    pub fn as_map(&self, x: &Element) -> SimplicialMap {
        SimplicialMap::new_unchecked(self.products[x.0].complex.clone(), self.base.clone(), x.1.clone()).expect("level elements are maps")
    }

    /// The element `K × Δⁿ -> Δⁿ -> C` constant along `K`.
    pub fn constant(&self, s: &Simplex) -> Element {
        let n = s.dim();
        let prod = &self.products[n];
        let images = (0..levels(&prod.complex))
            .map(|d| {
                prod.complex
                    .cells_of_dim(d)
                    .map(|c| {
                        let y = &prod.pair(c).1;
                        self.base.act(s, &prod.right.vertices_of(y))
                    })
                    .collect()
            })
            .collect();
        (n, images)
    }

    /// Evaluation at a vertex `k` of `K`, as a map to `C`.
    pub fn evaluation(&self, k: usize) -> Result<SimplicialMap, CoreError> {
        let vertex = Simplex::cell(crate::CellId::new(0, k));
        materialize_map(&self.space, self.base.clone(), |x, n| {
            let prod = &self.products[n];
            let point = crate::complex::degenerate_by(&vertex, &vec![0; n + 1]);
            let top = Simplex::cell(crate::CellId::new(n, 0));
            let s = prod.simplex(&point, &top).expect("K × Δⁿ contains {k} × Δⁿ");
            apply(&x.1, &s)
        })
    }

    /// Restriction along `i : K' ⊆ K`, into the function complex of `K'`.
    pub fn restriction(&self, target: &FunctionComplex, i: &MonoInclusion) -> Result<SimplicialMap, CoreError> {
        if target.up_to < self.up_to {
            return Err(CoreError::Precondition("restriction target is truncated lower".into()));
        }
        let mut along = Vec::new();
        for n in 0..=self.up_to {
            let d = self.products[n].right.clone();
            along.push(product_map(&target.products[n], &self.products[n], i.map(), &SimplicialMap::identity(d))?);
        }
        materialize_map(&self.space, target.complex().clone(), |x, n| {
            let pulled: Element = (n, along[n].images().iter().map(|l| l.iter().map(|s| apply(&x.1, s)).collect()).collect());
            target.space.simplex(&pulled).cloned().expect("restrictions of admissible maps are admissible")
        })
    }
}

fn build(c: &Arc<SimplicialSet>, k: &Arc<SimplicialSet>, up_to: usize, budget: u64, restricted: bool) -> Result<FunctionComplex, CoreError> {
    let shapes = Shapes::new(k, up_to)?;
    let equivalences = restricted.then(|| homotopy_category(c, crate::homotopy::DEFAULT_WORD_BUDGET));
    let levels = Levels { shapes: &shapes, index: TargetIndex::new(c.clone()), budget, equivalences };
    let space = materialize(&levels, up_to)?;
    Ok(FunctionComplex {
        base: c.clone(),
        exponent: k.clone(),
        up_to,
        restricted,
        space,
        products: shapes.products,
    })
}

/// `C^K` through level `up_to`.
pub fn function_complex(c: &Arc<SimplicialSet>, k: &Arc<SimplicialSet>, up_to: usize, budget: u64) -> Result<FunctionComplex, CoreError> {
    build(c, k, up_to, budget, false)
}

/// `C^(K)` through level `up_to`: simplices all of whose vertices send
/// every edge of `K` to an equivalence.
pub fn restricted_function_complex(c: &Arc<SimplicialSet>, k: &Arc<SimplicialSet>, up_to: usize, budget: u64) -> Result<FunctionComplex, CoreError> {
    build(c, k, up_to, budget, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::s_prime;
    use crate::constructions::find_isomorphism;
    use crate::generators::inclusion_by_names;
    use crate::generators::Cofibration;
    use crate::lifting::{has_rlp, RlpVerdict};

    const B: u64 = 1_000_000;

    fn d(n: usize) -> Arc<SimplicialSet> {
        Arc::new(standard_simplex(n))
    }

    #[test]
    fn level_zero_counts() {
        assert_eq!(function_complex(&d(1), &d(0), 0, B).unwrap().level(0).len(), 2);
        assert_eq!(function_complex(&d(1), &d(1), 0, B).unwrap().level(0).len(), 3);
        assert_eq!(restricted_function_complex(&d(1), &d(1), 0, B).unwrap().level(0).len(), 2);
    }

    #[test]
    fn maps_from_a_point_recover_the_base() {
        for c in [d(2), Arc::new(s_prime())] {
            let f = function_complex(&c, &d(0), 2, B).unwrap();
            assert!(find_isomorphism(f.complex(), &c, B).unwrap().is_some());
            assert!(f.evaluation(0).unwrap().is_mono());
        }
    }

    #[test]
    fn restricted_paths_in_a_simplex() {
        let c = d(2);
        let paths = restricted_function_complex(&c, &d(1), 2, B).unwrap();
        let ev = paths.evaluation(0).unwrap();
        assert!(find_isomorphism(paths.complex(), &c, B).unwrap().is_some());
        for n in 0..=2 {
            assert!(matches!(has_rlp(&ev, &[Cofibration::boundary(n)], n, B), RlpVerdict::YesUpTo(_)));
        }
        let point = Arc::new(standard_simplex(0));
        let k0 = inclusion_by_names(point.clone(), d(1)).unwrap();
        let at0 = function_complex(&c, &point, 2, B).unwrap();
        let r = paths.restriction(&at0, &k0).unwrap();
        assert!(r.is_mono());
    }

    #[test]
    fn invertible_paths_in_s_prime() {
        let s = Arc::new(s_prime());
        let paths = restricted_function_complex(&s, &d(1), 0, B).unwrap();
        assert_eq!(paths.level(0).len(), 6);
        let all = function_complex(&s, &d(1), 0, B).unwrap();
        assert_eq!(all.level(0).len(), 6);
    }
}
