//! Named small complexes used as worked examples.

use std::sync::Arc;

use crate::complex::{Builder, SimplicialSet};
use crate::constructions::pushout;
use crate::generators::{boundary, inclusion_by_names, simplex_subcomplex, spine, standard_simplex};
use crate::map::MonoInclusion;
use crate::simplex::Simplex;

/// Two objects `x, y` with edges `f : x -> y`, `g : y -> x` exhibited as
/// mutually inverse by triangles `sigma` (`g f ~ phi`), `sigma'`
/// (`f g ~ psi`), and `tau`, `tau'` making `phi` and `psi` identities.
pub fn s_prime() -> SimplicialSet {
    let mut b = Builder::new();
    let x = b.add_vertex(Some("x".into()));
    let y = b.add_vertex(Some("y".into()));
    let cell = Simplex::cell;
    let s0 = |v| Simplex::degenerate(v, vec![0]).unwrap();
    // an edge's faces are (d0, d1) = (target, source)
    let f = b.add_cell(Some("f".into()), vec![cell(y), cell(x)]).unwrap();
    let g = b.add_cell(Some("g".into()), vec![cell(x), cell(y)]).unwrap();
    let phi = b.add_cell(Some("phi".into()), vec![cell(x), cell(x)]).unwrap();
    let psi = b.add_cell(Some("psi".into()), vec![cell(y), cell(y)]).unwrap();
    b.add_cell(Some("sigma".into()), vec![cell(g), cell(phi), cell(f)]).unwrap();
    b.add_cell(Some("sigma'".into()), vec![cell(f), cell(psi), cell(g)]).unwrap();
    b.add_cell(Some("tau".into()), vec![s0(x), s0(x), cell(phi)]).unwrap();
    b.add_cell(Some("tau'".into()), vec![s0(y), s0(y), cell(psi)]).unwrap();
    b.build().unwrap()
}

/// `Δ³ ∪_{I₃} ∂Δ³`: every spine map into it extends to a simplex, yet it
/// has an unfillable inner horn.
pub fn spine_pushout_complex() -> SimplicialSet {
    let d3 = Arc::new(standard_simplex(3));
    let i3 = Arc::new(spine(3));
    let inc = inclusion_by_names(i3.clone(), d3).unwrap();
    let f = inclusion_by_names(i3, Arc::new(boundary(3))).unwrap();
    let p = pushout(&inc, f.map()).unwrap();
    Arc::try_unwrap(p.complex).unwrap_or_else(|a| (*a).clone())
}

/// `Δ¹ × Δ¹` as the subcomplex `Δ^{013} ∪ Δ^{023}` of `Δ³`.
pub fn square_in_simplex() -> MonoInclusion {
    let sq = simplex_subcomplex(3, &[vec![0, 1, 3], vec![0, 2, 3]]);
    inclusion_by_names(Arc::new(sq), Arc::new(standard_simplex(3))).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_prime_is_well_formed() {
        let s = s_prime();
        assert!(s.validate().is_empty());
        assert_eq!(s.counts(), vec![2, 4, 4]);
        let sigma = s.cell_by_name("sigma").unwrap();
        assert_eq!(s.cell_vertices(sigma), &[0, 1, 0]);
    }

    #[test]
    fn spine_pushout_counts() {
        let s = spine_pushout_complex();
        assert_eq!(s.counts(), vec![4, 9, 8, 1]);
        assert!(s.validate().is_empty());
    }

    #[test]
    fn square_is_mono_and_vertex_bijective() {
        let sq = square_in_simplex();
        assert!(sq.map().is_mono());
        assert!(sq.map().is_vertex_bijective());
        let missing: Vec<String> = sq.missing_cells().into_iter().map(|c| sq.target().name(c)).collect();
        assert_eq!(missing, vec!["12", "012", "123", "0123"]);
    }
}
