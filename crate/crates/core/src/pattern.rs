//! Order-embedding search.

use crate::bitset::BitSet;
use crate::poset::FinitePoset;

/// Result of an embedding search. `witness[i]` is the host image of pattern element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatch {
    pub witness: Option<Vec<usize>>,
}

impl PatternMatch {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

/// Precomputed host data, reusable across several pattern queries.
pub struct Host<'a> {
    poset: &'a FinitePoset,
    inc: Vec<BitSet>,
    levels: Vec<usize>,
    depths: Vec<usize>,
}

impl<'a> Host<'a> {
    pub fn new(poset: &'a FinitePoset) -> Self {
        let inc = (0..poset.n()).map(|i| poset.incomparable_set(i)).collect();
        Host {
            poset,
            inc,
            levels: poset.levels(),
            depths: poset.depths(),
        }
    }

    pub fn poset(&self) -> &FinitePoset {
        self.poset
    }

    pub fn embed(&self, pattern: &FinitePoset) -> PatternMatch {
        let host = self.poset;
        let k = pattern.n();
        if k > host.n() {
            return PatternMatch { witness: None };
        }
        let order = placement_order(pattern);
        let plevels = pattern.levels();
        let pdepths = pattern.depths();
        let mut allowed = Vec::with_capacity(k);
        for v in 0..k {
            let (pu, pd, pi) = (
                pattern.up(v).count(),
                pattern.down(v).count(),
                pattern.incomparable_set(v).count(),
            );
            let mut s = BitSet::new(host.n());
            for h in 0..host.n() {
                if self.levels[h] >= plevels[v]
                    && self.depths[h] >= pdepths[v]
                    && host.up(h).count() >= pu
                    && host.down(h).count() >= pd
                    && self.inc[h].count() >= pi
                {
                    s.insert(h);
                }
            }
            allowed.push(s);
        }
        let mut map = vec![usize::MAX; k];
        let mut used = BitSet::new(host.n());
        if self.extend(pattern, &order, 0, &allowed, &mut map, &mut used) {
            PatternMatch { witness: Some(map) }
        } else {
            PatternMatch { witness: None }
        }
    }

    fn extend(
        &self,
        pattern: &FinitePoset,
        order: &[usize],
        depth: usize,
        allowed: &[BitSet],
        map: &mut Vec<usize>,
        used: &mut BitSet,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        let mut cand = allowed[v].clone();
        cand.difference_with(used);
        for &u in &order[..depth] {
            let hu = map[u];
            if pattern.lt(u, v) {
                cand.intersect_with(self.poset.up(hu));
            } else if pattern.lt(v, u) {
                cand.intersect_with(self.poset.down(hu));
            } else {
                cand.intersect_with(&self.inc[hu]);
            }
            if cand.is_empty() {
                return false;
            }
        }
        for h in cand.iter() {
            map[v] = h;
            used.insert(h);
            if self.extend(pattern, order, depth + 1, allowed, map, used) {
                return true;
            }
            used.remove(h);
        }
        map[v] = usize::MAX;
        false
    }
}

/// Most constrained first: start with the vertex of most incomparabilities,
/// then repeatedly the vertex with most incomparabilities to placed ones.
fn placement_order(pattern: &FinitePoset) -> Vec<usize> {
    let k = pattern.n();
    let inc: Vec<BitSet> = (0..k).map(|i| pattern.incomparable_set(i)).collect();
    let mut placed = BitSet::new(k);
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let best = (0..k)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                let mut s = inc[v].clone();
                s.intersect_with(&placed);
                let tie = if order.is_empty() {
                    inc[v].count()
                } else {
                    s.count()
                };
                (tie, inc[v].count(), std::cmp::Reverse(v))
            })
            .unwrap();
        placed.insert(best);
        order.push(best);
    }
    order
}

pub fn embeds_pattern(host: &FinitePoset, pattern: &FinitePoset) -> PatternMatch {
    Host::new(host).embed(pattern)
}

/// Checks that `witness` is an order embedding of `pattern` into `host`.
pub fn is_embedding(host: &FinitePoset, pattern: &FinitePoset, witness: &[usize]) -> bool {
    let k = pattern.n();
    if witness.len() != k || witness.iter().any(|&h| h >= host.n()) {
        return false;
    }
    for i in 0..k {
        for j in 0..k {
            if i != j && witness[i] == witness[j] {
                return false;
            }
            if pattern.lt(i, j) != host.lt(witness[i], witness[j]) {
                return false;
            }
        }
    }
    true
}
