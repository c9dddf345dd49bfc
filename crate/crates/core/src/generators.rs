//! Standard complexes: simplices, boundaries, horns, spines, truncations of
//! the groupoid interval and of `cosk_0`, and nerves of finite posets.
//!
//! Every complex built here is a "tuple complex": its nondegenerate
//! `k`-simplices are `(k+1)`-tuples of vertices without consecutive repeats,
//! and the `i`-th face deletes the `i`-th entry. Cells are named by their
//! vertex tuples, so `Δ³` has cells `0`, `01`, ..., `0123`.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::complex::{Builder, SimplicialSet};
use crate::error::CoreError;
use crate::map::{MonoInclusion, SimplicialMap};
use crate::simplex::Simplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeneratorKind {
    Simplex,
    Boundary,
    Horn,
    Spine,
    JTrunc,
}

impl std::str::FromStr for GeneratorKind {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "simplex" => Self::Simplex,
            "boundary" => Self::Boundary,
            "horn" => Self::Horn,
            "spine" => Self::Spine,
            "j_trunc" | "j-trunc" => Self::JTrunc,
            other => return Err(CoreError::InvalidGenerator(format!("unknown kind `{other}`"))),
        })
    }
}

pub fn make_generator(kind: GeneratorKind, n: usize, i: Option<usize>) -> Result<SimplicialSet, CoreError> {
    let bad = |msg: &str| Err(CoreError::InvalidGenerator(msg.to_owned()));
    match (kind, i) {
        (GeneratorKind::Simplex, None) => Ok(standard_simplex(n)),
        (GeneratorKind::Boundary, None) => Ok(boundary(n)),
        (GeneratorKind::Horn, Some(i)) if n >= 1 && i <= n => Ok(horn(n, i)),
        (GeneratorKind::Horn, _) => bad("a horn needs n >= 1 and 0 <= i <= n"),
        (GeneratorKind::Spine, None) if n >= 1 => Ok(spine(n)),
        (GeneratorKind::Spine, None) => bad("a spine needs n >= 1"),
        (GeneratorKind::JTrunc, None) => Ok(j_truncation(n)),
        (_, Some(_)) => bad("only horns take a face index"),
    }
}

/// Builds a tuple complex from its nondegenerate tuples. The set must be
/// closed under deleting an entry and collapsing consecutive repeats.
pub fn tuple_complex(labels: &[String], tuples: impl IntoIterator<Item = Vec<usize>>) -> Result<SimplicialSet, CoreError> {
    let mut tuples: Vec<Vec<usize>> = tuples.into_iter().collect();
    tuples.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    tuples.dedup();
    let short = labels.iter().all(|l| l.chars().count() == 1);
    let name = |t: &[usize]| -> String {
        let parts = t.iter().map(|&v| labels[v].as_str());
        if short {
            parts.collect()
        } else {
            parts.collect::<Vec<_>>().join(".")
        }
    };
    let mut ids = HashMap::new();
    let mut b = Builder::new();
    for t in &tuples {
        if t.windows(2).any(|w| w[0] == w[1]) || t.is_empty() || t.iter().any(|&v| v >= labels.len()) {
            return Err(CoreError::Malformed(format!("bad tuple {t:?}")));
        }
        let id = if t.len() == 1 {
            b.add_vertex(Some(labels[t[0]].clone()))
        } else {
            let mut faces = Vec::with_capacity(t.len());
            for i in 0..t.len() {
                let mut f = t.clone();
                f.remove(i);
                faces.push(collapse(&f, &ids)?);
            }
            b.add_cell(Some(name(t)), faces)?
        };
        ids.insert(t.clone(), id);
    }
    b.build()
}

fn collapse(t: &[usize], ids: &HashMap<Vec<usize>, crate::CellId>) -> Result<Simplex, CoreError> {
    let mut base: Vec<usize> = Vec::with_capacity(t.len());
    let mut word = Vec::new();
    for (j, &v) in t.iter().enumerate() {
        if base.last() == Some(&v) {
            word.push(j - 1);
        } else {
            base.push(v);
        }
    }
    let id = ids
        .get(&base)
        .ok_or_else(|| CoreError::Malformed(format!("tuple {base:?} missing from the face closure")))?;
    Ok(Simplex::from_parts_unchecked(*id, word))
}

fn digit_labels(n: usize) -> Vec<String> {
    (0..n).map(|v| v.to_string()).collect()
}

/// The subcomplex of `Δⁿ` generated by the given vertex sets.
pub fn simplex_subcomplex(n: usize, facets: &[Vec<usize>]) -> SimplicialSet {
    let mut all: Vec<Vec<usize>> = Vec::new();
    for f in facets {
        for k in 1..=f.len() {
            all.extend(f.iter().copied().combinations(k));
        }
    }
    tuple_complex(&digit_labels(n + 1), all).expect("face sets of a simplex are closed")
}

pub fn standard_simplex(n: usize) -> SimplicialSet {
    simplex_subcomplex(n, &[(0..=n).collect()])
}

/// `∂Δⁿ`; for `n = 0` this is empty.
pub fn boundary(n: usize) -> SimplicialSet {
    let facets: Vec<Vec<usize>> = (0..=n).map(|i| (0..=n).filter(|&v| v != i).collect()).collect();
    if n == 0 {
        return SimplicialSet::empty();
    }
    simplex_subcomplex(n, &facets)
}

/// `Λⁿᵢ`: the union of all faces of `Δⁿ` except the `i`-th.
pub fn horn(n: usize, i: usize) -> SimplicialSet {
    assert!(n >= 1 && i <= n);
    let facets: Vec<Vec<usize>> = (0..=n)
        .filter(|&j| j != i)
        .map(|j| (0..=n).filter(|&v| v != j).collect())
        .collect();
    simplex_subcomplex(n, &facets)
}

/// `Iₙ`: the chain of edges `01, 12, ..., (n-1)n`.
pub fn spine(n: usize) -> SimplicialSet {
    if n == 0 {
        return standard_simplex(0);
    }
    let facets: Vec<Vec<usize>> = (0..n).map(|k| vec![k, k + 1]).collect();
    simplex_subcomplex(n, &facets)
}

/// `sk_n cosk_0(V)`: all vertex tuples without consecutive repeats.
pub fn cosk0(labels: &[String], max_dim: usize) -> SimplicialSet {
    let points = labels.len();
    let mut tuples = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..points).map(|v| vec![v]).collect();
    for _ in 0..=max_dim {
        let mut next = Vec::new();
        for t in &frontier {
            for v in 0..points {
                if t.last() != Some(&v) {
                    let mut u = t.clone();
                    u.push(v);
                    next.push(u);
                }
            }
        }
        tuples.append(&mut frontier);
        frontier = next;
    }
    tuple_complex(labels, tuples).expect("cosk0 tuples are closed")
}

/// `sk_n J`, where `J` is the nerve of the free-standing isomorphism.
pub fn j_truncation(n: usize) -> SimplicialSet {
    cosk0(&digit_labels(2), n)
}

/// Nerve of a finite poset (chains of length at most `max_dim + 1`).
/// `less(a, b)` must be a strict partial order.
pub fn poset_nerve(labels: &[String], less: impl Fn(usize, usize) -> bool, max_dim: usize) -> SimplicialSet {
    let points = labels.len();
    let mut tuples = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..points).map(|v| vec![v]).collect();
    for _ in 0..=max_dim {
        let mut next = Vec::new();
        for t in &frontier {
            let last = *t.last().unwrap();
            for v in 0..points {
                if less(last, v) {
                    let mut u = t.clone();
                    u.push(v);
                    next.push(u);
                }
            }
        }
        tuples.append(&mut frontier);
        frontier = next;
    }
    tuple_complex(labels, tuples).expect("chains are closed under deletion")
}

/// The inclusion of a tuple complex into a larger one, matching cells by name.
pub fn inclusion_by_names(sub: Arc<SimplicialSet>, sup: Arc<SimplicialSet>) -> Result<MonoInclusion, CoreError> {
    let mut images: Vec<Vec<Simplex>> = vec![Vec::new(); sub.dim().map_or(0, |d| d + 1)];
    for c in sub.cells() {
        let name = sub.name(c);
        let t = sup
            .cell_by_name(&name)
            .ok_or_else(|| CoreError::NotAMap(format!("cell {name} missing from the target")))?;
        images[c.dim].push(Simplex::cell(t));
    }
    MonoInclusion::new(SimplicialMap::new(sub, sup, images)?)
}

/// The shape of a generating monomorphism into `Δⁿ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CofibrationKind {
    Horn { n: usize, i: usize },
    Boundary { n: usize },
    Spine { n: usize },
}

impl std::fmt::Display for CofibrationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Horn { n, i } => write!(f, "horn({n},{i})"),
            Self::Boundary { n } => write!(f, "boundary({n})"),
            Self::Spine { n } => write!(f, "spine({n})"),
        }
    }
}

/// A generating inclusion `A ⊆ Δⁿ` together with its shape.
#[derive(Clone, Debug)]
pub struct Cofibration {
    pub kind: CofibrationKind,
    pub inclusion: MonoInclusion,
}

impl Cofibration {
    pub fn new(kind: CofibrationKind) -> Self {
        let (n, sub) = match kind {
            CofibrationKind::Horn { n, i } => (n, horn(n, i)),
            CofibrationKind::Boundary { n } => (n, boundary(n)),
            CofibrationKind::Spine { n } => (n, spine(n)),
        };
        let inclusion = inclusion_by_names(Arc::new(sub), Arc::new(standard_simplex(n)))
            .expect("standard subcomplexes include into the simplex");
        Self { kind, inclusion }
    }

    pub fn horn(n: usize, i: usize) -> Self {
        Self::new(CofibrationKind::Horn { n, i })
    }

    pub fn boundary(n: usize) -> Self {
        Self::new(CofibrationKind::Boundary { n })
    }

    pub fn spine(n: usize) -> Self {
        Self::new(CofibrationKind::Spine { n })
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            CofibrationKind::Horn { n, .. } | CofibrationKind::Boundary { n } | CofibrationKind::Spine { n } => n,
        }
    }

    /// The cell of the domain that is the `j`-th face of the top simplex.
    pub fn domain_face(&self, j: usize) -> Option<crate::CellId> {
        let n = self.dim();
        let vs: Vec<usize> = (0..=n).filter(|&v| v != j).collect();
        self.inclusion.source().cell_with_vertices(&vs)
    }
}

/// Horn families by the lifting class they generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HornClass {
    Inner,
    Left,
    Right,
    Kan,
}

impl HornClass {
    pub fn admits(self, n: usize, i: usize) -> bool {
        match self {
            Self::Inner => 0 < i && i < n,
            Self::Left => i < n,
            Self::Right => 0 < i && i <= n,
            Self::Kan => i <= n,
        }
    }
}

impl std::str::FromStr for HornClass {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "inner" => Self::Inner,
            "left" => Self::Left,
            "right" => Self::Right,
            "kan" => Self::Kan,
            other => return Err(CoreError::InvalidGenerator(format!("unknown horn class `{other}`"))),
        })
    }
}

impl std::fmt::Display for HornClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Inner => "inner",
            Self::Left => "left",
            Self::Right => "right",
            Self::Kan => "kan",
        })
    }
}

/// All horn inclusions of a class with `1 <= n <= max_dim`.
pub fn horn_family(class: HornClass, max_dim: usize) -> Vec<Cofibration> {
    (1..=max_dim)
        .flat_map(|n| (0..=n).filter(move |&i| class.admits(n, i)).map(move |i| Cofibration::horn(n, i)))
        .collect()
}

/// `∂Δⁿ ⊆ Δⁿ` for `0 <= n <= max_dim`.
pub fn boundary_family(max_dim: usize) -> Vec<Cofibration> {
    (0..=max_dim).map(Cofibration::boundary).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn generator_examples() {
        assert_eq!(make_generator(GeneratorKind::Boundary, 3, None).unwrap().counts(), vec![4, 6, 4]);
        let h = make_generator(GeneratorKind::Horn, 2, Some(1)).unwrap();
        assert_eq!(h.counts(), vec![3, 2]);
        assert!(h.cell_by_name("01").is_some() && h.cell_by_name("12").is_some());
        let sp = make_generator(GeneratorKind::Spine, 3, None).unwrap();
        assert_eq!(sp.counts(), vec![4, 3]);
        assert!(["01", "12", "23"].iter().all(|e| sp.cell_by_name(e).is_some()));
        assert_eq!(make_generator(GeneratorKind::JTrunc, 2, None).unwrap().counts(), vec![2, 2, 2]);
    }

    #[test]
    fn invalid_generators() {
        assert!(make_generator(GeneratorKind::Horn, 2, Some(3)).is_err());
        assert!(make_generator(GeneratorKind::Horn, 0, Some(0)).is_err());
        assert!(make_generator(GeneratorKind::Spine, 0, None).is_err());
        assert!(make_generator(GeneratorKind::Simplex, 2, Some(0)).is_err());
    }

    #[test]
    fn binomial_cell_counts() {
        for n in 0..=5 {
            let full: Vec<usize> = (0..=n).map(|k| binom(n + 1, k + 1)).collect();
            assert_eq!(standard_simplex(n).counts(), full);
            if n >= 1 {
                let mut bd = full.clone();
                bd.pop();
                assert_eq!(boundary(n).counts(), bd);
                for i in 0..=n {
                    let mut h = bd.clone();
                    h[n - 1] -= 1;
                    while h.last() == Some(&0) {
                        h.pop();
                    }
                    assert_eq!(horn(n, i).counts(), h, "horn({n},{i})");
                }
            }
        }
    }

    #[test]
    fn j_truncation_faces() {
        let j = j_truncation(3);
        assert_eq!(j.counts(), vec![2, 2, 2, 2]);
        assert!(j.validate().is_empty());
        // d_1 of the triangle 010 is the degenerate edge at 0
        let t = j.cell_by_name("010").unwrap();
        let d1 = &j.faces(t)[1];
        assert!(d1.is_constant());
    }
}
