//! Interval and unit-interval representations, and the three-order realizer
//! for threshold orders on keyed elements.

use crate::bitset::BitMatrix;
use crate::classify::traces;
use crate::pattern::embeds_pattern;
use crate::poset::FinitePoset;
use crate::Rational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepresentError {
    #[error("poset is not an interval order (it embeds 2+2)")]
    NotIntervalOrder,
    #[error("poset is not a semiorder")]
    NotSemiorder,
    #[error("difference constraints are infeasible")]
    InfeasibleSystem,
    #[error("keys must be pairwise distinct")]
    InvalidKey,
    #[error("threshold must be positive")]
    NonPositiveAlpha,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRepresentation {
    pub intervals: Vec<(Rational, Rational)>,
}

impl IntervalRepresentation {
    /// `x < y` iff `right(x) < left(y)`.
    pub fn to_poset(&self) -> FinitePoset {
        let iv = &self.intervals;
        FinitePoset::from_closed(BitMatrix::from_fn(iv.len(), |x, y| iv[x].1 < iv[y].0))
    }

    pub fn represents(&self, p: &FinitePoset) -> bool {
        self.intervals.len() == p.n()
            && self.intervals.iter().all(|(l, r)| l <= r)
            && self.to_poset().same_relation(p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitRepresentation {
    pub offsets: Vec<Rational>,
}

impl UnitRepresentation {
    /// `x < y` iff `r(y) - r(x) >= 1`.
    pub fn to_poset(&self) -> FinitePoset {
        let r = &self.offsets;
        let one = Rational::from_integer(1.into());
        FinitePoset::from_closed(BitMatrix::from_fn(r.len(), |x, y| &r[y] - &r[x] >= one))
    }

    pub fn represents(&self, p: &FinitePoset) -> bool {
        self.offsets.len() == p.n() && self.to_poset().same_relation(p)
    }
}

/// Linear orders listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizer {
    pub orders: Vec<Vec<usize>>,
}

impl Realizer {
    fn positions(order: &[usize]) -> Vec<usize> {
        let mut pos = vec![0; order.len()];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        pos
    }

    /// The order `x < y` iff `x` precedes `y` in every listed order.
    pub fn intersection(&self, n: usize) -> FinitePoset {
        let pos: Vec<Vec<usize>> = self.orders.iter().map(|o| Self::positions(o)).collect();
        FinitePoset::from_closed(BitMatrix::from_fn(n, |x, y| {
            x != y && pos.iter().all(|p| p[x] < p[y])
        }))
    }

    pub fn is_extension(order: &[usize], p: &FinitePoset) -> bool {
        let mut seen = vec![false; p.n()];
        for &e in order {
            if e >= p.n() || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        if order.len() != p.n() {
            return false;
        }
        let pos = Self::positions(order);
        p.relations().all(|(x, y)| pos[x] < pos[y])
    }

    pub fn realizes(&self, p: &FinitePoset) -> bool {
        self.orders.iter().all(|o| Self::is_extension(o, p))
            && self.intersection(p.n()).same_relation(p)
    }
}

/// Left end is the rank of `D(x)` among the distinct down-sets; right end
/// is the last rank whose down-set still misses `x`.
pub fn interval_representation(p: &FinitePoset) -> Result<IntervalRepresentation, RepresentError> {
    if embeds_pattern(p, &FinitePoset::direct_sum_of_chains(2, 2)).found() {
        return Err(RepresentError::NotIntervalOrder);
    }
    let n = p.n();
    let mut downs: Vec<_> = (0..n).map(|x| p.down(x).clone()).collect();
    downs.sort_by_key(|d| d.count());
    downs.dedup();
    let intervals = (0..n)
        .map(|x| {
            let left = downs.iter().position(|d| d == p.down(x)).unwrap();
            let right = downs.iter().rposition(|d| !d.contains(x)).unwrap();
            (
                Rational::from_integer(left.into()),
                Rational::from_integer(right.into()),
            )
        })
        .collect();
    Ok(IntervalRepresentation { intervals })
}

/// Solves `r(y) - r(x) >= 1` for `x < y` and `|r(y) - r(x)| <= 1 - 1/(n+1)`
/// for incomparable pairs ordered by `pred ∩ succ`, by Bellman-Ford on the
/// constraint graph scaled by `n + 1`.
pub fn unit_representation(p: &FinitePoset) -> Result<UnitRepresentation, RepresentError> {
    let n = p.n();
    let (pred, succ) = traces(p);
    let t = pred.intersection(&succ);
    if !t.is_total() {
        return Err(RepresentError::NotSemiorder);
    }
    let scale = n as i64 + 1;
    // Edge (u, v, w) encodes r(v) - r(u) <= w.
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if p.lt(x, y) {
                edges.push((y, x, -scale));
            } else if !p.lt(y, x) && t.le(x, y) {
                edges.push((x, y, scale - 1));
                edges.push((y, x, 0));
            }
        }
    }
    let mut dist = vec![0i64; n];
    for round in 0..=n {
        let mut changed = false;
        for &(u, v, w) in &edges {
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        if round == n {
            return Err(RepresentError::InfeasibleSystem);
        }
    }
    let min = dist.iter().copied().min().unwrap_or(0);
    let offsets = dist
        .iter()
        .map(|&d| Rational::new((d - min).into(), scale.into()))
        .collect();
    Ok(UnitRepresentation { offsets })
}

fn ceil_div(a: &Rational, b: &Rational) -> num_bigint::BigInt {
    (a / b).ceil().to_integer()
}

/// Three linear orders whose intersection is `x < y` iff
/// `key(y) - key(x) >= alpha`.
///
/// The first order runs through the blocks `]mα, (m+1)α]` in increasing
/// order with keys reversed inside each block. The second and third use
/// blocks `]u, u+2α]` with `u = 2mα` and `u = (2m+1)α`; inside such a block
/// a pair from different halves keeps its key order only when the two keys
/// are at least `α` apart. Keys on a boundary belong to the lower block.
pub fn realizer_dim3_threshold(
    keys: &[Rational],
    alpha: &Rational,
) -> Result<Realizer, RepresentError> {
    if !alpha.is_positive() {
        return Err(RepresentError::NonPositiveAlpha);
    }
    let mut sorted: Vec<&Rational> = keys.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(RepresentError::InvalidKey);
    }
    let n = keys.len();

    let mut l1: Vec<usize> = (0..n).collect();
    l1.sort_by(|&x, &y| {
        let bx = ceil_div(&keys[x], alpha);
        let by = ceil_div(&keys[y], alpha);
        bx.cmp(&by).then_with(|| keys[y].cmp(&keys[x]))
    });

    let two_alpha = alpha * Rational::from_integer(2.into());
    let swapped = |offset: Rational| {
        let block = |x: usize| {
            let m: num_bigint::BigInt = ceil_div(&(&keys[x] - &offset), &two_alpha) - 1;
            let u = Rational::from_integer(m.clone()) * &two_alpha + &offset;
            let upper = &keys[x] - &u > *alpha;
            (m, upper)
        };
        let info: Vec<_> = (0..n).map(block).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&x, &y| {
            let (mx, hx) = &info[x];
            let (my, hy) = &info[y];
            match mx.cmp(my) {
                Ordering::Equal => {}
                o => return o,
            }
            if hx == hy {
                return keys[x].cmp(&keys[y]);
            }
            let (lo, hi, flip) = if !hx { (x, y, false) } else { (y, x, true) };
            let kept = &keys[hi] - &keys[lo] >= *alpha;
            let o = if kept {
                Ordering::Less
            } else {
                Ordering::Greater
            };
            if flip {
                o.reverse()
            } else {
                o
            }
        });
        order
    };
    let l2 = swapped(Rational::zero());
    let l3 = swapped(alpha.clone());
    Ok(Realizer {
        orders: vec![l1, l2, l3],
    })
}

/// The threshold order `x < y` iff `key(y) - key(x) >= alpha`.
pub fn threshold_poset(keys: &[Rational], alpha: &Rational) -> FinitePoset {
    FinitePoset::from_closed(BitMatrix::from_fn(keys.len(), |x, y| {
        &keys[y] - &keys[x] >= *alpha
    }))
}

pub fn integer_keys(range: std::ops::RangeInclusive<i64>) -> Vec<Rational> {
    range.map(|k| Rational::from_integer(k.into())).collect()
}
