//! Knuth–Bendix completion for string rewriting under shortlex order.

use std::cmp::Ordering;

pub type Word = Vec<u32>;

pub fn shortlex(a: &[u32], b: &[u32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Limits on completion: number of rules and length of a rule's left side.
#[derive(Clone, Copy, Debug)]
pub struct CompletionBudget {
    pub max_rules: usize,
    pub max_len: usize,
}

impl Default for CompletionBudget {
    fn default() -> Self {
        Self { max_rules: 400, max_len: 24 }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RewriteSystem {
    rules: Vec<(Word, Word)>,
    confluent: bool,
}

fn find(hay: &[u32], needle: &[u32]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&k| &hay[k..k + needle.len()] == needle)
}

impl RewriteSystem {
    /// Completes the given equations. `confluent()` reports whether
    /// completion finished within budget.
    pub fn complete(equations: &[(Word, Word)], budget: CompletionBudget) -> Self {
        let mut sys = Self { rules: Vec::new(), confluent: false };
        let mut pending: Vec<(Word, Word)> = equations.to_vec();
        loop {
            while let Some((a, b)) = pending.pop() {
                let a = sys.reduce(&a);
                let b = sys.reduce(&b);
                if a == b {
                    continue;
                }
                let (l, r) = if shortlex(&a, &b) == Ordering::Greater { (a, b) } else { (b, a) };
                if l.len() > budget.max_len || sys.rules.len() >= budget.max_rules {
                    return sys;
                }
                sys.add_rule(l, r, &mut pending);
            }
            let pairs = sys.critical_pairs();
            let mut fresh = Vec::new();
            for (a, b) in pairs {
                let a = sys.reduce(&a);
                let b = sys.reduce(&b);
                if a != b {
                    fresh.push((a, b));
                }
            }
            if fresh.is_empty() {
                sys.confluent = true;
                return sys;
            }
            pending = fresh;
        }
    }

    /// Adds `l -> r` and moves rules it makes reducible back to `pending`.
    fn add_rule(&mut self, l: Word, r: Word, pending: &mut Vec<(Word, Word)>) {
        let mut kept = Vec::with_capacity(self.rules.len() + 1);
        for (a, b) in std::mem::take(&mut self.rules) {
            if find(&a, &l).is_some() {
                pending.push((a, b));
            } else {
                kept.push((a, b));
            }
        }
        self.rules = kept;
        self.rules.push((l, r));
        let snapshot = self.rules.clone();
        for (k, (_, rhs)) in snapshot.iter().enumerate() {
            let reduced = self.reduce(rhs);
            self.rules[k].1 = reduced;
        }
    }

    fn critical_pairs(&self) -> Vec<(Word, Word)> {
        let mut out = Vec::new();
        for (l1, r1) in &self.rules {
            for (l2, r2) in &self.rules {
                // a proper suffix of l1 is a prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let mut a = r1.clone();
                        a.extend_from_slice(&l2[k..]);
                        let mut b = l1[..l1.len() - k].to_vec();
                        b.extend_from_slice(r2);
                        out.push((a, b));
                    }
                }
                if l1 != l2 {
                    if let Some(pos) = find(l1, l2) {
                        let mut b = l1[..pos].to_vec();
                        b.extend_from_slice(r2);
                        b.extend_from_slice(&l1[pos + l2.len()..]);
                        out.push((r1.clone(), b));
                    }
                }
            }
        }
        out
    }

    pub fn confluent(&self) -> bool {
        self.confluent
    }

    pub fn rules(&self) -> &[(Word, Word)] {
        &self.rules
    }

    /// Rewrites to an irreducible word (leftmost rule first).
    pub fn reduce(&self, w: &[u32]) -> Word {
        let mut w = w.to_vec();
        'outer: loop {
            for (l, r) in &self.rules {
                if let Some(pos) = find(&w, l) {
                    w.splice(pos..pos + l.len(), r.iter().copied());
                    continue 'outer;
                }
            }
            return w;
        }
    }

    pub fn is_irreducible(&self, w: &[u32]) -> bool {
        self.rules.iter().all(|(l, _)| find(w, l).is_none())
    }

    /// Whether some rule's left side is a suffix of `w`.
    pub fn has_reducible_suffix(&self, w: &[u32]) -> bool {
        self.rules.iter().any(|(l, _)| w.ends_with(l))
    }
}
