//! Finite simplicial sets stored as nondegenerate cells with face data.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::error::CoreError;
use crate::simplex::{codegeneracy, coface, epi_mono, CellId, Simplex};

#[derive(Clone, Debug)]
struct CellData {
    label: Option<String>,
    faces: Vec<Simplex>,
}

/// A finite simplicial set.
///
/// Only nondegenerate cells are stored. Every `k`-cell with `k >= 1` carries
/// its `k + 1` faces as normal-form simplices of dimension `k - 1`.
#[derive(Clone, Debug)]
pub struct SimplicialSet {
    cells: Vec<Vec<CellData>>,
    vertices: Vec<Vec<Vec<usize>>>,
    names: HashMap<String, CellId>,
}

/// One failed simplicial identity `d_i d_j = d_{j-1} d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub cell: String,
    pub i: usize,
    pub j: usize,
    pub lhs: Simplex,
    pub rhs: Simplex,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cell {}: d{} d{} = {:?} but d{} d{} = {:?}",
            self.cell,
            self.i,
            self.j,
            self.lhs,
            self.j - 1,
            self.i,
            self.rhs
        )
    }
}

impl SimplicialSet {
    pub fn empty() -> Self {
        Builder::new().build().expect("empty complex is well formed")
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().rposition(|c| !c.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(Vec::is_empty)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, Vec::len)
    }

    /// Cell counts per dimension up to the top dimension.
    pub fn counts(&self) -> Vec<usize> {
        match self.dim() {
            Some(d) => (0..=d).map(|k| self.count(k)).collect(),
            None => Vec::new(),
        }
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn cells_of_dim(&self, dim: usize) -> impl Iterator<Item = CellId> + '_ {
        (0..self.count(dim)).map(move |index| CellId::new(dim, index))
    }

    /// All cells ordered by dimension, then index.
    pub fn cells(&self) -> impl Iterator<Item = CellId> + '_ {
        (0..self.cells.len()).flat_map(move |d| self.cells_of_dim(d))
    }

    pub fn contains(&self, c: CellId) -> bool {
        c.index < self.count(c.dim)
    }

    pub fn faces(&self, c: CellId) -> &[Simplex] {
        &self.cells[c.dim][c.index].faces
    }

    pub fn label(&self, c: CellId) -> Option<&str> {
        self.cells[c.dim][c.index].label.as_deref()
    }

    /// Printable name: the label when present, `c<dim>_<index>` otherwise.
    pub fn name(&self, c: CellId) -> String {
        match self.label(c) {
            Some(l) => l.to_owned(),
            None => default_name(c),
        }
    }

    /// Compact printable form: `name`, or `name^j1.j2` when degenerate.
    pub fn token(&self, s: &Simplex) -> String {
        if s.is_nondegenerate() {
            self.name(s.base)
        } else {
            format!("{}^{}", self.name(s.base), s.word().iter().join("."))
        }
    }

    pub fn cell_by_name(&self, name: &str) -> Option<CellId> {
        self.names.get(name).copied()
    }

    /// Vertex list of a nondegenerate cell.
    pub fn cell_vertices(&self, c: CellId) -> &[usize] {
        &self.vertices[c.dim][c.index]
    }

    pub fn vertices_of(&self, s: &Simplex) -> Vec<usize> {
        let vs = self.cell_vertices(s.base);
        s.surjection().into_iter().map(|e| vs[e]).collect()
    }

    pub fn vertex(&self, s: &Simplex, j: usize) -> usize {
        self.cell_vertices(s.base)[s.surjection()[j]]
    }

    /// The unique cell with the given vertex list, if exactly one exists.
    pub fn cell_with_vertices(&self, vs: &[usize]) -> Option<CellId> {
        let dim = vs.len().checked_sub(1)?;
        let mut hits = self.cells_of_dim(dim).filter(|&c| self.cell_vertices(c) == vs);
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }

    /// Acts on `s` by the monotone map `theta : [m] -> [dim s]`.
    pub fn act(&self, s: &Simplex, theta: &[usize]) -> Simplex {
        let eta = s.surjection();
        let composite: Vec<usize> = theta.iter().map(|&t| eta[t]).collect();
        let (epi, mono) = epi_mono(&composite);
        let face = self.restrict_cell(s.base, &mono);
        degenerate_by(&face, &epi)
    }

    /// Restricts a nondegenerate cell along an injective monotone map.
    fn restrict_cell(&self, c: CellId, delta: &[usize]) -> Simplex {
        if delta.len() == c.dim + 1 {
            return Simplex::cell(c);
        }
        let missing = (0..=c.dim)
            .find(|j| delta.binary_search(j).is_err())
            .expect("proper injection misses an index");
        let face = &self.faces(c)[missing];
        let shifted: Vec<usize> = delta.iter().map(|&a| if a < missing { a } else { a - 1 }).collect();
        self.act(face, &shifted)
    }

    /// `d_i s`, reduced to normal form.
    pub fn face(&self, s: &Simplex, i: usize) -> Result<Simplex, CoreError> {
        let n = s.dim();
        if n == 0 || i > n {
            return Err(CoreError::FaceIndex { index: i, dim: n });
        }
        Ok(self.act(s, &coface(n, i)))
    }

    /// `s_j s`.
    pub fn degeneracy(&self, s: &Simplex, j: usize) -> Simplex {
        assert!(j <= s.dim(), "degeneracy index out of range");
        self.act(s, &codegeneracy(s.dim(), j))
    }

    /// Every simplex of dimension `m`, degenerate ones included, in
    /// normal-form lexicographic order.
    pub fn simplices(&self, m: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for k in 0..=m.min(self.cells.len().saturating_sub(1)) {
            if self.count(k) == 0 {
                continue;
            }
            let words: Vec<Vec<usize>> = (0..m).combinations(m - k).collect();
            for c in self.cells_of_dim(k) {
                for w in &words {
                    out.push(Simplex::from_parts_unchecked(c, w.clone()));
                }
            }
        }
        out.sort();
        out
    }

    /// Checks every structural invariant and every simplicial identity.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for c in self.cells() {
            if c.dim < 2 {
                continue;
            }
            let faces = self.faces(c);
            for j in 1..=c.dim {
                for i in 0..j {
                    let lhs = self.act(&faces[j], &coface(c.dim - 1, i));
                    let rhs = self.act(&faces[i], &coface(c.dim - 1, j - 1));
                    if lhs != rhs {
                        out.push(Violation { cell: self.name(c), i, j, lhs, rhs });
                    }
                }
            }
        }
        out
    }

    /// Rebuilds the complex with every cell relabelled by `f`.
    pub fn relabeled(&self, mut f: impl FnMut(CellId, String) -> String) -> Result<Self, CoreError> {
        let mut b = Builder::new();
        for c in self.cells() {
            let name = f(c, self.name(c));
            b.push(c.dim, Some(name), self.faces(c).to_vec())?;
        }
        b.build()
    }
}

fn default_name(c: CellId) -> String {
    format!("c{}_{}", c.dim, c.index)
}

/// Applies the degeneracy operator of a surjection to a simplex.
pub(crate) fn degenerate_by(s: &Simplex, epi: &[usize]) -> Simplex {
    let eta = s.surjection();
    let composite: Vec<usize> = epi.iter().map(|&e| eta[e]).collect();
    Simplex::from_surjection(s.base, &composite)
}

impl PartialEq for SimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        self.counts() == other.counts()
            && self
                .cells()
                .all(|c| self.faces(c) == other.faces(c) && self.name(c) == other.name(c))
    }
}

impl Eq for SimplicialSet {}

/// Incremental construction of a complex, lowest dimension first.
#[derive(Default)]
pub struct Builder {
    cells: Vec<Vec<CellData>>,
    names: HashMap<String, CellId>,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts from a copy of an existing complex; new cells get new ids.
    pub fn from_complex(x: &SimplicialSet) -> Self {
        Self { cells: x.cells.clone(), names: x.names.clone() }
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, Vec::len)
    }

    pub fn faces(&self, c: CellId) -> &[Simplex] {
        &self.cells[c.dim][c.index].faces
    }

    pub fn has_name(&self, name: &str) -> bool {
        self.names.contains_key(name)
    }

    /// `base`, primed until it no longer clashes with an existing name.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_owned();
        while self.names.contains_key(&name) {
            name.push('\'');
        }
        name
    }

    pub fn add_vertex(&mut self, label: Option<String>) -> CellId {
        self.push(0, label, Vec::new()).expect("vertices need no faces")
    }

    /// Adds a cell of dimension `faces.len() - 1`.
    pub fn add_cell(&mut self, label: Option<String>, faces: Vec<Simplex>) -> Result<CellId, CoreError> {
        if faces.len() < 2 {
            return Err(CoreError::Malformed("a positive-dimensional cell needs at least two faces".into()));
        }
        self.push(faces.len() - 1, label, faces)
    }

    /// Adds a cell of the given dimension; vertices take no faces.
    pub fn push(&mut self, dim: usize, label: Option<String>, faces: Vec<Simplex>) -> Result<CellId, CoreError> {
        let expected = if dim == 0 { 0 } else { dim + 1 };
        if faces.len() != expected {
            return Err(CoreError::Malformed(format!("{dim}-cell given {} faces", faces.len())));
        }
        for f in &faces {
            if f.dim() + 1 != dim || f.base.index >= self.count(f.base.dim) {
                return Err(CoreError::Malformed(format!("face {f:?} of a {dim}-cell is not an existing {}-simplex", dim - 1)));
            }
        }
        if self.cells.len() <= dim {
            self.cells.resize_with(dim + 1, Vec::new);
        }
        let id = CellId::new(dim, self.cells[dim].len());
        let name = label.clone().unwrap_or_else(|| default_name(id));
        if self.names.contains_key(&name) {
            return Err(CoreError::DuplicateName(name));
        }
        self.names.insert(name, id);
        self.cells[dim].push(CellData { label, faces });
        Ok(id)
    }

    pub fn build(mut self) -> Result<SimplicialSet, CoreError> {
        while self.cells.last().is_some_and(Vec::is_empty) {
            self.cells.pop();
        }
        let mut set = SimplicialSet { cells: self.cells, vertices: Vec::new(), names: self.names };
        let mut vertices: Vec<Vec<Vec<usize>>> = Vec::with_capacity(set.cells.len());
        for d in 0..set.cells.len() {
            let mut level = Vec::with_capacity(set.count(d));
            for c in set.cells_of_dim(d) {
                if d == 0 {
                    level.push(vec![c.index]);
                    continue;
                }
                let faces = set.faces(c);
                let last = &faces[d];
                let first = &faces[0];
                let lookup = |s: &Simplex, j: usize| vertices[s.base.dim][s.base.index][s.surjection()[j]];
                let mut vs: Vec<usize> = (0..d).map(|j| lookup(last, j)).collect();
                vs.push(lookup(first, d - 1));
                level.push(vs);
            }
            vertices.push(level);
        }
        set.vertices = vertices;
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{standard_simplex, boundary, horn, j_truncation};

    #[test]
    fn face_examples() {
        let d2 = standard_simplex(2);
        let top = Simplex::cell(CellId::new(2, 0));
        let d0 = d2.face(&top, 0).unwrap();
        assert_eq!(d2.name(d0.base), "12");
        assert!(d0.is_nondegenerate());

        let d1 = standard_simplex(1);
        let e = Simplex::cell(CellId::new(1, 0));
        let s1e = d1.degeneracy(&e, 1);
        let y = d1.cell_by_name("1").unwrap();
        assert_eq!(d1.face(&s1e, 0).unwrap(), Simplex::degenerate(y, vec![0]).unwrap());

        let v = Simplex::cell(CellId::new(0, 0));
        let s0v = d1.degeneracy(&v, 0);
        assert_eq!(d1.face(&s0v, 1).unwrap(), v);
    }

    #[test]
    fn face_index_out_of_range() {
        let d2 = standard_simplex(2);
        let top = Simplex::cell(CellId::new(2, 0));
        assert!(matches!(d2.face(&top, 3), Err(CoreError::FaceIndex { .. })));
    }

    #[test]
    fn tampered_triangle_is_reported() {
        let d2 = standard_simplex(2);
        let mut b = Builder::new();
        for c in d2.cells() {
            let mut faces = d2.faces(c).to_vec();
            if c.dim == 2 {
                // replace d_0 = 12 by 01, which breaks d_0 d_1 = d_0 d_0
                faces[0] = Simplex::cell(d2.cell_by_name("01").unwrap());
            }
            b.push(c.dim, Some(d2.name(c)), faces).unwrap();
        }
        let bad = b.build().unwrap();
        let v = bad.validate();
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.cell == "012"));
    }

    #[test]
    fn generators_validate() {
        for n in 0..=5 {
            assert!(standard_simplex(n).validate().is_empty());
            if n > 0 {
                assert!(boundary(n).validate().is_empty());
                assert!(horn(n, n / 2).validate().is_empty());
            }
            assert!(j_truncation(n).validate().is_empty());
        }
    }
}
