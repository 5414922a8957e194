//! Linear extensions and exact dimension by exhaustive search.

use crate::poset::FinitePoset;
use crate::represent::Realizer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimensionResult {
    Exact { k: usize, realizer: Realizer },
    Exceeded,
}

impl DimensionResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            DimensionResult::Exact { k, .. } => Some(*k),
            DimensionResult::Exceeded => None,
        }
    }
}

/// Calls `visit` on every linear extension, in lexicographic order.
pub fn for_each_linear_extension(p: &FinitePoset, mut visit: impl FnMut(&[usize])) {
    let n = p.n();
    let mut indeg: Vec<usize> = (0..n).map(|i| p.down(i).count()).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    fn go(
        p: &FinitePoset,
        indeg: &mut [usize],
        placed: &mut [bool],
        order: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        let n = p.n();
        if order.len() == n {
            visit(order);
            return;
        }
        for v in 0..n {
            if placed[v] || indeg[v] != 0 {
                continue;
            }
            placed[v] = true;
            order.push(v);
            for w in p.up(v).iter() {
                indeg[w] -= 1;
            }
            go(p, indeg, placed, order, visit);
            for w in p.up(v).iter() {
                indeg[w] += 1;
            }
            order.pop();
            placed[v] = false;
        }
    }
    go(p, &mut indeg, &mut placed, &mut order, &mut visit);
}

pub fn linear_extensions(p: &FinitePoset) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_linear_extension(p, |o| out.push(o.to_vec()));
    out
}

/// Least `k <= max_k` such that `k` linear extensions intersect to `p`.
///
/// Each extension is reduced to the set of incomparable ordered pairs
/// `(x, y)` it reverses (places `y` before `x`); a realizer is a family of
/// extensions whose reversal sets cover every such pair.
pub fn brute_force_dimension(p: &FinitePoset, max_k: usize) -> DimensionResult {
    let n = p.n();
    let mut pair_index = vec![vec![usize::MAX; n]; n];
    let mut npairs = 0;
    for x in 0..n {
        for y in p.incomparable_set(x).iter() {
            pair_index[x][y] = npairs;
            npairs += 1;
        }
    }
    assert!(
        npairs <= 128,
        "too many incomparable pairs for exhaustive dimension"
    );
    if npairs == 0 {
        let order = linear_extensions(p).into_iter().next().unwrap_or_default();
        return if max_k >= 1 {
            DimensionResult::Exact {
                k: 1,
                realizer: Realizer {
                    orders: vec![order],
                },
            }
        } else {
            DimensionResult::Exceeded
        };
    }
    let mut masks: Vec<(u128, Vec<usize>)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for_each_linear_extension(p, |order| {
        let mut pos = vec![0; n];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        let mut m = 0u128;
        for x in 0..n {
            for y in 0..n {
                let idx = pair_index[x][y];
                if idx != usize::MAX && pos[y] < pos[x] {
                    m |= 1 << idx;
                }
            }
        }
        if seen.insert(m) {
            masks.push((m, order.to_vec()));
        }
    });
    // Dominated masks never help.
    let maximal: Vec<(u128, Vec<usize>)> = masks
        .iter()
        .filter(|(m, _)| !masks.iter().any(|(o, _)| o != m && m & o == *m))
        .cloned()
        .collect();
    let full: u128 = if npairs == 128 {
        u128::MAX
    } else {
        (1 << npairs) - 1
    };
    for k in 1..=max_k {
        let mut chosen = Vec::new();
        if cover(&maximal, full, 0, k, &mut chosen) {
            let orders = chosen.iter().map(|&i| maximal[i].1.clone()).collect();
            return DimensionResult::Exact {
                k,
                realizer: Realizer { orders },
            };
        }
    }
    DimensionResult::Exceeded
}

fn cover(
    masks: &[(u128, Vec<usize>)],
    full: u128,
    covered: u128,
    left: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if covered == full {
        return true;
    }
    if left == 0 {
        return false;
    }
    let bit = (!covered & full).trailing_zeros();
    for (i, (m, _)) in masks.iter().enumerate() {
        if m >> bit & 1 == 1 {
            chosen.push(i);
            if cover(masks, full, covered | m, left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_counts() {
        assert_eq!(linear_extensions(&FinitePoset::antichain(4)).len(), 24);
        assert_eq!(linear_extensions(&FinitePoset::chain(4)).len(), 1);
        assert_eq!(
            linear_extensions(&FinitePoset::direct_sum_of_chains(2, 2)).len(),
            6
        );
    }

    #[test]
    fn dimension_examples() {
        for n in 1..5 {
            assert_eq!(
                brute_force_dimension(&FinitePoset::chain(n), 3).value(),
                Some(1)
            );
        }
        let tt = FinitePoset::direct_sum_of_chains(2, 2);
        let d = brute_force_dimension(&tt, 3);
        assert_eq!(d.value(), Some(2));
        if let DimensionResult::Exact { realizer, .. } = d {
            assert!(realizer.realizes(&tt));
        }
        let s3 = FinitePoset::standard_example(3);
        let d = brute_force_dimension(&s3, 4);
        assert_eq!(d.value(), Some(3));
        if let DimensionResult::Exact { realizer, .. } = d {
            assert!(realizer.realizes(&s3));
        }
        assert_eq!(brute_force_dimension(&s3, 2), DimensionResult::Exceeded);
        assert_eq!(
            brute_force_dimension(&FinitePoset::standard_example(4), 4).value(),
            Some(4)
        );
    }
}
