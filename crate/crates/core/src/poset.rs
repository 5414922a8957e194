//! Finite posets and quasi-orders stored as dense bit matrices.

use crate::bitset::{BitMatrix, BitSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation has a cycle through element {0}")]
    Cycle(usize),
    #[error("element index {index} out of range for {n} elements")]
    Index { index: usize, n: usize },
    #[error("expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A strict partial order on `0..n`.
///
/// Both the strict up-sets and down-sets are kept so that trace and
/// embedding computations can work row-wise in either direction.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    up: BitMatrix,
    down: BitMatrix,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinitePoset(n={}, [", self.n())?;
        let mut first = true;
        for (i, j) in self.relations() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{i}<{j}")?;
        }
        write!(f, "])")
    }
}

impl FinitePoset {
    /// Transitive closure of `edges`; fails on cycles or bad indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut m = BitMatrix::new(n);
        for &(a, b) in edges {
            for index in [a, b] {
                if index >= n {
                    return Err(PosetError::Index { index, n });
                }
            }
            m.set(a, b, true);
        }
        m.close_transitively();
        if let Some(i) = (0..n).find(|&i| m.get(i, i)) {
            return Err(PosetError::Cycle(i));
        }
        Ok(Self::from_closed(m))
    }

    /// Wraps a relation already known to be irreflexive and transitive.
    pub fn from_closed(up: BitMatrix) -> Self {
        debug_assert!((0..up.n()).all(|i| !up.get(i, i)));
        debug_assert!(up.is_transitive());
        let down = up.transpose();
        FinitePoset {
            up,
            down,
            labels: None,
        }
    }

    /// Builds from a predicate, validating the strict-order axioms.
    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> bool) -> Result<Self, PosetError> {
        let m = BitMatrix::from_fn(n, f);
        if let Some(i) = (0..n).find(|&i| m.get(i, i)) {
            return Err(PosetError::Cycle(i));
        }
        if !m.is_transitive() {
            let mut c = m;
            c.close_transitively();
            let i = (0..n).find(|&i| c.get(i, i));
            return match i {
                Some(i) => Err(PosetError::Cycle(i)),
                None => Ok(Self::from_closed(c)),
            };
        }
        Ok(Self::from_closed(m))
    }

    pub fn chain(n: usize) -> Self {
        Self::from_closed(BitMatrix::from_fn(n, |i, j| i < j))
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_closed(BitMatrix::new(n))
    }

    /// `p ⊕ q`: a chain on `0..p` beside a chain on `p..p+q`.
    pub fn direct_sum_of_chains(p: usize, q: usize) -> Self {
        Self::chain(p).disjoint_union(&Self::chain(q))
    }

    /// Standard example `S_k`: minima `0..k`, maxima `k..2k`, `i < k+j` iff `i != j`.
    pub fn standard_example(k: usize) -> Self {
        Self::from_closed(BitMatrix::from_fn(2 * k, |i, j| {
            i < k && j >= k && j - k != i
        }))
    }

    pub fn disjoint_union(&self, other: &FinitePoset) -> Self {
        Self::lex_sum(&Self::antichain(2), &[self.clone(), other.clone()]).unwrap()
    }

    pub fn linear_sum(&self, other: &FinitePoset) -> Self {
        Self::lex_sum(&Self::chain(2), &[self.clone(), other.clone()]).unwrap()
    }

    /// Lexicographical sum: substitute `components[i]` for index element `i`.
    pub fn lex_sum(index: &FinitePoset, components: &[FinitePoset]) -> Result<Self, PosetError> {
        if components.len() != index.n() {
            return Err(PosetError::Arity {
                expected: index.n(),
                got: components.len(),
            });
        }
        let mut offset = Vec::with_capacity(components.len());
        let mut owner = Vec::new();
        for (c, p) in components.iter().enumerate() {
            offset.push(owner.len());
            owner.extend(std::iter::repeat_n(c, p.n()));
        }
        let total = owner.len();
        let m = BitMatrix::from_fn(total, |x, y| {
            let (cx, cy) = (owner[x], owner[y]);
            if cx == cy {
                components[cx].lt(x - offset[cx], y - offset[cy])
            } else {
                index.lt(cx, cy)
            }
        });
        Ok(Self::from_closed(m))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.up.n()
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.up.get(i, j)
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.up.get(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.up.get(i, j) || self.down.get(i, j)
    }

    #[inline]
    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        i != j && !self.comparable(i, j)
    }

    /// Strict up-set `U(i)`.
    #[inline]
    pub fn up(&self, i: usize) -> &BitSet {
        self.up.row(i)
    }

    /// Strict down-set `D(i)`.
    #[inline]
    pub fn down(&self, i: usize) -> &BitSet {
        self.down.row(i)
    }

    /// Elements incomparable to `i`, excluding `i`.
    pub fn incomparable_set(&self, i: usize) -> BitSet {
        let mut s = BitSet::full(self.n());
        s.difference_with(self.up(i));
        s.difference_with(self.down(i));
        s.remove(i);
        s
    }

    pub fn strict_matrix(&self) -> &BitMatrix {
        &self.up
    }

    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |i| self.up(i).iter().map(move |j| (i, j)))
    }

    pub fn relation_count(&self) -> usize {
        self.up.count()
    }

    /// Pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in self.up(i).iter() {
                if !self.up(i).intersects(self.down(j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n()).all(|i| self.incomparable_set(i).is_empty())
    }

    pub fn is_antichain(&self) -> bool {
        self.up.count() == 0
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        self.levels().iter().map(|&h| h + 1).max().unwrap_or(0)
    }

    /// `levels()[i]` is the length of the longest chain strictly below `i`.
    pub fn levels(&self) -> Vec<usize> {
        let n = self.n();
        let mut lvl = vec![usize::MAX; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.down(i).count());
        for &i in &order {
            lvl[i] = self.down(i).iter().map(|j| lvl[j] + 1).max().unwrap_or(0);
        }
        lvl
    }

    /// Dual of [`levels`](Self::levels): longest chain strictly above.
    pub fn depths(&self) -> Vec<usize> {
        self.dual().levels()
    }

    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            up: self.down.clone(),
            down: self.up.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Subposet induced on `elems`, in the given order.
    pub fn induced(&self, elems: &[usize]) -> FinitePoset {
        let m = BitMatrix::from_fn(elems.len(), |a, b| self.lt(elems[a], elems[b]));
        let mut p = Self::from_closed(m);
        if let Some(l) = &self.labels {
            p.labels = Some(elems.iter().map(|&e| l[e].clone()).collect());
        }
        p
    }

    /// Relabels so that old element `perm[i]` becomes new element `i`.
    pub fn permuted(&self, perm: &[usize]) -> FinitePoset {
        self.induced(perm)
    }

    /// Connected components of the incomparability graph, listed in the
    /// (total) order they inherit from the poset.
    pub fn incomparability_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![];
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(v) = stack.pop() {
                part.push(v);
                for w in self.incomparable_set(v).iter() {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        // Distinct parts are totally ordered: every cross pair is comparable
        // and the direction is uniform across a part pair.
        parts.sort_by(|a, b| {
            if self.lt(a[0], b[0]) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        parts
    }

    pub fn subset_properties(&self, y: &[usize]) -> SubsetProperties {
        let n = self.n();
        let ys = BitSet::from_indices(n, y.iter().copied());
        let autonomous = (0..n).filter(|&x| !ys.contains(x)).all(|x| {
            let a = ys.iter().map(|e| self.lt(x, e)).collect::<Vec<_>>();
            let b = ys.iter().map(|e| self.lt(e, x)).collect::<Vec<_>>();
            a.windows(2).all(|w| w[0] == w[1]) && b.windows(2).all(|w| w[0] == w[1])
        });
        let convex = ys.iter().all(|a| {
            ys.iter().all(|c| {
                let mut between = self.up(a).clone();
                between.intersect_with(self.down(c));
                between.is_subset(&ys)
            })
        });
        let antichain = ys.iter().all(|a| !self.up(a).intersects(&ys));
        let chain = ys.iter().all(|a| {
            let mut inc = self.incomparable_set(a);
            inc.intersect_with(&ys);
            inc.is_empty()
        });
        SubsetProperties {
            autonomous,
            convex,
            antichain,
            chain,
        }
    }

    /// The reflexive closure as a quasi-order.
    pub fn to_quasi_order(&self) -> QuasiOrder {
        let mut le = self.up.clone();
        for i in 0..self.n() {
            le.set(i, i, true);
        }
        QuasiOrder { le }
    }

    /// Checks that `other` is the same order under the identity labelling.
    pub fn same_relation(&self, other: &FinitePoset) -> bool {
        self.up == other.up
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetProperties {
    pub autonomous: bool,
    pub convex: bool,
    pub antichain: bool,
    pub chain: bool,
}

/// Reflexive, transitive relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuasiOrder {
    le: BitMatrix,
}

impl QuasiOrder {
    /// Reflexive-transitive closure of the given relation.
    pub fn closure_of(mut le: BitMatrix) -> Self {
        for i in 0..le.n() {
            le.set(i, i, true);
        }
        le.close_transitively();
        QuasiOrder { le }
    }

    /// Wraps a matrix, checking reflexivity and transitivity.
    pub fn new(le: BitMatrix) -> Option<Self> {
        let ok = (0..le.n()).all(|i| le.get(i, i)) && le.is_transitive();
        ok.then_some(QuasiOrder { le })
    }

    pub fn from_matrix_unchecked(le: BitMatrix) -> Self {
        QuasiOrder { le }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.le.n()
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.le.get(i, j) && !self.le.get(j, i)
    }

    #[inline]
    pub fn equiv(&self, i: usize, j: usize) -> bool {
        self.le.get(i, j) && self.le.get(j, i)
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.le
    }

    pub fn is_total(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (i + 1..n).all(|j| self.le(i, j) || self.le(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (i + 1..n).all(|j| !self.equiv(i, j)))
    }

    pub fn intersection(&self, other: &QuasiOrder) -> QuasiOrder {
        QuasiOrder {
            le: self.le.intersection(&other.le),
        }
    }

    /// Collapses `≡` classes. Class indices follow first occurrence.
    pub fn quotient(&self) -> (FinitePoset, Vec<usize>) {
        let n = self.n();
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for i in 0..n {
            if proj[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(i);
            for j in i..n {
                if self.equiv(i, j) {
                    proj[j] = c;
                }
            }
        }
        let m = BitMatrix::from_fn(reps.len(), |a, b| a != b && self.le(reps[a], reps[b]));
        (FinitePoset::from_closed(m), proj)
    }

    /// Strict part as a poset.
    pub fn strict_part(&self) -> FinitePoset {
        FinitePoset::from_closed(BitMatrix::from_fn(self.n(), |i, j| self.lt(i, j)))
    }

    /// Elements sorted so that `le(order[a], order[b])` for `a <= b` when total.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n()).collect();
        v.sort_by_key(|&i| (0..self.n()).filter(|&j| self.lt(j, i)).count());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn build_examples() {
        let a = FinitePoset::from_edges(2, &[]).unwrap();
        assert!(a.incomparable(0, 1));
        let c = FinitePoset::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(c.lt(0, 2));
        assert_eq!(
            FinitePoset::from_edges(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(PosetError::Cycle(0))
        );
        assert_eq!(
            FinitePoset::from_edges(2, &[(0, 5)]),
            Err(PosetError::Index { index: 5, n: 2 })
        );
    }

    #[test]
    fn lex_sum_examples() {
        let two_two = FinitePoset::lex_sum(
            &FinitePoset::antichain(2),
            &[FinitePoset::chain(2), FinitePoset::chain(2)],
        )
        .unwrap();
        assert!(two_two.same_relation(&FinitePoset::direct_sum_of_chains(2, 2)));
        let weak = FinitePoset::lex_sum(
            &FinitePoset::chain(2),
            &[FinitePoset::antichain(2), FinitePoset::antichain(2)],
        )
        .unwrap();
        assert_eq!(weak.relation_count(), 4);
        assert!(weak.incomparable(0, 1) && weak.incomparable(2, 3));
        let deg = FinitePoset::lex_sum(
            &FinitePoset::chain(2),
            &[FinitePoset::chain(1), FinitePoset::chain(1)],
        )
        .unwrap();
        assert!(deg.same_relation(&FinitePoset::chain(2)));
        assert_eq!(
            FinitePoset::lex_sum(&FinitePoset::chain(2), &[FinitePoset::chain(1)]),
            Err(PosetError::Arity {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn components_examples() {
        let c3 = FinitePoset::chain(3);
        assert_eq!(
            c3.incomparability_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        let tt = FinitePoset::direct_sum_of_chains(2, 2);
        assert_eq!(tt.incomparability_components(), vec![vec![0, 1, 2, 3]]);
        let ls = FinitePoset::chain(2).linear_sum(&FinitePoset::antichain(2));
        assert_eq!(
            ls.incomparability_components(),
            vec![vec![0], vec![1], vec![2, 3]]
        );
        let rev = FinitePoset::antichain(2).linear_sum(&FinitePoset::chain(1));
        assert_eq!(rev.incomparability_components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn subset_examples() {
        let tt = FinitePoset::direct_sum_of_chains(2, 2);
        let p = tt.subset_properties(&[0, 1]);
        assert!(p.autonomous && p.convex && p.chain && !p.antichain);
        let c3 = FinitePoset::chain(3);
        let p = c3.subset_properties(&[0, 2]);
        assert!(!p.convex && !p.autonomous);
        let a3 = FinitePoset::antichain(3);
        let p = a3.subset_properties(&[0, 2]);
        assert!(p.autonomous && p.antichain);
        for s in [&[][..], &[1][..]] {
            assert!(c3.subset_properties(s).autonomous);
        }
    }

    #[test]
    fn quotient_examples() {
        let mut m = BitMatrix::new(3);
        m.set(0, 1, true);
        m.set(1, 0, true);
        m.set(0, 2, true);
        let q = QuasiOrder::closure_of(m);
        let (p, proj) = q.quotient();
        assert!(p.same_relation(&FinitePoset::chain(2)));
        assert_eq!(proj, vec![0, 0, 1]);

        let po = FinitePoset::direct_sum_of_chains(2, 1).to_quasi_order();
        let (p, proj) = po.quotient();
        assert!(p.same_relation(&FinitePoset::direct_sum_of_chains(2, 1)));
        assert_eq!(proj, vec![0, 1, 2]);

        let full = QuasiOrder::new(BitMatrix::from_fn(3, |_, _| true)).unwrap();
        assert_eq!(full.quotient().0.n(), 1);
    }

    #[test]
    fn standard_example_shape() {
        let s3 = FinitePoset::standard_example(3);
        assert_eq!(s3.n(), 6);
        assert_eq!(s3.relation_count(), 6);
        assert!(s3.incomparable(0, 3));
        assert!(s3.lt(0, 4));
    }

    #[test]
    fn covers_and_height() {
        let p = FinitePoset::direct_sum_of_chains(3, 1);
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.height(), 3);
        assert_eq!(FinitePoset::antichain(4).height(), 1);
        assert_eq!(FinitePoset::antichain(0).height(), 0);
    }

    fn arb_poset() -> impl Strategy<Value = FinitePoset> {
        (1usize..8)
            .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..12)))
            .prop_map(|(n, e)| {
                let e: Vec<_> = e.into_iter().filter(|(a, b)| a < b).collect();
                FinitePoset::from_edges(n, &e).unwrap()
            })
    }

    proptest! {
        #[test]
        fn constructors_are_strict_orders(p in arb_poset()) {
            for i in 0..p.n() {
                prop_assert!(!p.lt(i, i));
                for j in 0..p.n() {
                    prop_assert!(!(p.lt(i, j) && p.lt(j, i)));
                }
            }
            prop_assert!(p.strict_matrix().is_transitive());
        }

        #[test]
        fn components_reconstruct(p in arb_poset()) {
            let parts = p.incomparability_components();
            let comps: Vec<_> = parts.iter().map(|s| p.induced(s)).collect();
            let rebuilt = FinitePoset::lex_sum(&FinitePoset::chain(parts.len()), &comps).unwrap();
            let order: Vec<usize> = parts.concat();
            prop_assert!(rebuilt.same_relation(&p.induced(&order)));
        }
    }
}
