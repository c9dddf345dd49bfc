//! Cell identifiers, simplices in Eilenberg–Zilber normal form, and the
//! monotone maps of the simplex category used to act on them.

use std::fmt;

use serde::Serialize;

/// A nondegenerate cell of a complex: its dimension and its position in that
/// dimension's cell list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CellId {
    pub dim: usize,
    pub index: usize,
}

impl CellId {
    pub const fn new(dim: usize, index: usize) -> Self {
        Self { dim, index }
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}.{}", self.dim, self.index)
    }
}

/// A simplex `s_{j_k} ... s_{j_1} base` with `j_1 < ... < j_k`.
///
/// The word is the set of positions `j` at which the associated monotone
/// surjection `[dim] -> [base.dim]` repeats a value, so every simplex of a
/// complex has exactly one representation and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Simplex {
    pub base: CellId,
    word: Vec<usize>,
}

impl Simplex {
    /// The nondegenerate simplex given by a cell.
    pub fn cell(base: CellId) -> Self {
        Self { base, word: Vec::new() }
    }

    /// Builds a simplex from a degeneracy word, checking that the word is
    /// strictly increasing and in range.
    pub fn degenerate(base: CellId, word: Vec<usize>) -> Option<Self> {
        let dim = base.dim + word.len();
        let increasing = word.windows(2).all(|w| w[0] < w[1]);
        let in_range = word.last().is_none_or(|&j| j < dim);
        (increasing && in_range).then_some(Self { base, word })
    }

    pub(crate) fn from_parts_unchecked(base: CellId, word: Vec<usize>) -> Self {
        debug_assert!(Self::degenerate(base, word.clone()).is_some());
        Self { base, word }
    }

    /// Builds `eta^* base` from a monotone surjection `[n] -> [base.dim]`.
    pub(crate) fn from_surjection(base: CellId, eta: &[usize]) -> Self {
        debug_assert_eq!(*eta.last().unwrap(), base.dim);
        let word = (0..eta.len() - 1).filter(|&j| eta[j] == eta[j + 1]).collect();
        Self { base, word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn dim(&self) -> usize {
        self.base.dim + self.word.len()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.word.is_empty()
    }

    /// Constant simplices are iterated degeneracies of a vertex.
    pub fn is_constant(&self) -> bool {
        self.base.dim == 0
    }

    /// The monotone surjection `[dim] -> [base.dim]` encoded by the word.
    pub fn surjection(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim() + 1);
        let mut skipped = 0;
        let mut w = self.word.iter().peekable();
        for j in 0..=self.dim() {
            out.push(j - skipped);
            if w.peek() == Some(&&j) {
                w.next();
                skipped += 1;
            }
        }
        out
    }
}

/// Coface map `delta_i : [n-1] -> [n]`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|a| if a < i { a } else { a + 1 }).collect()
}

/// Codegeneracy map `sigma_j : [n+1] -> [n]`.
pub fn codegeneracy(n: usize, j: usize) -> Vec<usize> {
    (0..=n + 1).map(|a| if a <= j { a } else { a - 1 }).collect()
}

/// Splits a monotone map into a surjection followed by an injection.
pub(crate) fn epi_mono(theta: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut image: Vec<usize> = Vec::with_capacity(theta.len());
    let mut epi = Vec::with_capacity(theta.len());
    for &t in theta {
        if image.last() != Some(&t) {
            image.push(t);
        }
        epi.push(image.len() - 1);
    }
    (epi, image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn surjection_round_trip() {
        let s = Simplex::degenerate(CellId::new(1, 0), vec![0, 2]).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(s.surjection(), vec![0, 0, 1, 1]);
        assert_eq!(Simplex::from_surjection(s.base, &s.surjection()), s);
    }

    #[test]
    fn rejects_bad_words() {
        assert!(Simplex::degenerate(CellId::new(1, 0), vec![1, 0]).is_none());
        assert!(Simplex::degenerate(CellId::new(0, 0), vec![1]).is_none());
        assert!(Simplex::degenerate(CellId::new(0, 0), vec![0]).is_some());
    }

    #[test]
    fn epi_mono_factorization() {
        let (e, m) = epi_mono(&[0, 0, 2, 3, 3]);
        assert_eq!(e, vec![0, 0, 1, 2, 2]);
        assert_eq!(m, vec![0, 2, 3]);
    }

    proptest! {
        #[test]
        fn word_surjection_bijection(k in 0usize..4, mask in 0u32..64) {
            let n = k + 6;
            let word: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
            let base_dim = n - word.len();
            let s = Simplex::degenerate(CellId::new(base_dim, 0), word.clone());
            prop_assume!(s.is_some());
            let s = s.unwrap();
            let eta = s.surjection();
            prop_assert_eq!(eta.len(), n + 1);
            prop_assert_eq!(*eta.last().unwrap(), base_dim);
            let back = Simplex::from_surjection(s.base, &eta);
            prop_assert_eq!(back.word(), &word[..]);
        }
    }
}
