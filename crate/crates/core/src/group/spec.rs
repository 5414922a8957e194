use super::weight::WeightOrderSpec;
use super::GroupError;
use std::cmp::Ordering;
use std::fmt;

/// `{x ⪰ θ}` when closed, `{x ≻ θ}` when open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalSegmentSpec {
    pub theta: Vec<i64>,
    pub closed: bool,
}

impl FinalSegmentSpec {
    pub fn closed(theta: Vec<i64>) -> Self {
        FinalSegmentSpec {
            theta,
            closed: true,
        }
    }

    pub fn open(theta: Vec<i64>) -> Self {
        FinalSegmentSpec {
            theta,
            closed: false,
        }
    }

    pub fn contains(&self, order: &WeightOrderSpec, x: &[i64]) -> bool {
        match order.compare(x, &self.theta) {
            Ordering::Greater => true,
            Ordering::Equal => self.closed,
            Ordering::Less => false,
        }
    }
}

/// Membership-defined cones used by the embeddability battery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeKind {
    /// Strict positives of `Z` are the nonzero sums of the generators.
    NumericalSemigroup { gens: Vec<i64> },
    /// On `Z × Z/2`: `(m, 0)` with `m >= 1` and `(m, 1)` with `m >= shift`.
    TwoSheet { shift: i64 },
}

/// A represented abelian group with a compatible strict order given by its
/// set of strictly positive elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOrderSpec {
    /// `x < y` iff `y - x` lies in the final segment of a weight order.
    Zn {
        order: WeightOrderSpec,
        threshold: FinalSegmentSpec,
    },
    /// `Z/k` ordered by equality.
    Cyclic {
        k: u32,
    },
    /// Pairs `(a, b)`, `a` from `inner`, `b` from `outer`:
    /// `(a, b) < (a', b')` iff `b < b'`, or `b = b'` and `a < a'`.
    Lex {
        inner: Box<GroupOrderSpec>,
        outer: Box<GroupOrderSpec>,
    },
    /// Pairs `(a, b)` with `a` in `Z^m`, `b` in a `Zn` group with attained
    /// threshold `α`: `(a, b) < (a', b')` iff `b' - b ≻ α`, or
    /// `b' - b = α` and `a' - a ∈ F`.
    Odot {
        a_order: WeightOrderSpec,
        f: FinalSegmentSpec,
        g: Box<GroupOrderSpec>,
    },
    Cone(ConeKind),
}

impl GroupOrderSpec {
    pub fn zn(rows: Vec<Vec<i64>>, threshold: FinalSegmentSpec) -> Result<Self, GroupError> {
        let order = WeightOrderSpec::new(rows)?;
        Self::zn_from(order, threshold)
    }

    pub fn zn_from(
        order: WeightOrderSpec,
        threshold: FinalSegmentSpec,
    ) -> Result<Self, GroupError> {
        if threshold.theta.len() != order.n() {
            return Err(GroupError::Dimension {
                expected: order.n(),
                got: threshold.theta.len(),
            });
        }
        let s = order.sign(&threshold.theta);
        let ok = if threshold.closed {
            s == Ordering::Greater
        } else {
            s != Ordering::Less
        };
        if !ok {
            return Err(GroupError::InvalidSpec(
                "final segment would contain 0 or a negative element".into(),
            ));
        }
        Ok(GroupOrderSpec::Zn { order, threshold })
    }

    /// `Z` with `x < y` iff `y - x >= theta`.
    pub fn integers(theta: i64) -> Self {
        Self::zn(vec![vec![1]], FinalSegmentSpec::closed(vec![theta]))
            .expect("theta must be positive")
    }

    pub fn cyclic(k: u32) -> Self {
        assert!(k >= 1);
        GroupOrderSpec::Cyclic { k }
    }

    pub fn lex(inner: GroupOrderSpec, outer: GroupOrderSpec) -> Self {
        GroupOrderSpec::Lex {
            inner: Box::new(inner),
            outer: Box::new(outer),
        }
    }

    pub fn odot(
        a_order: WeightOrderSpec,
        f: FinalSegmentSpec,
        g: GroupOrderSpec,
    ) -> Result<Self, GroupError> {
        if f.theta.len() != a_order.n() {
            return Err(GroupError::Dimension {
                expected: a_order.n(),
                got: f.theta.len(),
            });
        }
        match &g {
            GroupOrderSpec::Zn { threshold, .. } if threshold.closed => {}
            _ => {
                return Err(GroupError::InvalidSpec(
                    "second factor must be a Z^n threshold group with attained threshold".into(),
                ))
            }
        }
        Ok(GroupOrderSpec::Odot {
            a_order,
            f,
            g: Box::new(g),
        })
    }

    /// Attained threshold of an `Odot` second factor.
    pub fn alpha(&self) -> Option<&[i64]> {
        match self {
            GroupOrderSpec::Odot { g, .. } => match g.as_ref() {
                GroupOrderSpec::Zn { threshold, .. } => Some(&threshold.theta),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            GroupOrderSpec::Zn { order, .. } => order.n(),
            GroupOrderSpec::Cyclic { .. } => 1,
            GroupOrderSpec::Lex { inner, outer } => inner.dim() + outer.dim(),
            GroupOrderSpec::Odot { a_order, g, .. } => a_order.n() + g.dim(),
            GroupOrderSpec::Cone(ConeKind::NumericalSemigroup { .. }) => 1,
            GroupOrderSpec::Cone(ConeKind::TwoSheet { .. }) => 2,
        }
    }

    /// `Some(k)` for coordinates taken mod `k`, `None` for free coordinates.
    pub fn moduli(&self) -> Vec<Option<u32>> {
        match self {
            GroupOrderSpec::Zn { order, .. } => vec![None; order.n()],
            GroupOrderSpec::Cyclic { k } => vec![Some(*k)],
            GroupOrderSpec::Lex { inner, outer } => {
                let mut v = inner.moduli();
                v.extend(outer.moduli());
                v
            }
            GroupOrderSpec::Odot { a_order, g, .. } => {
                let mut v = vec![None; a_order.n()];
                v.extend(g.moduli());
                v
            }
            GroupOrderSpec::Cone(ConeKind::NumericalSemigroup { .. }) => vec![None],
            GroupOrderSpec::Cone(ConeKind::TwoSheet { .. }) => vec![None, Some(2)],
        }
    }

    pub fn lattice(&self) -> Lattice {
        Lattice {
            moduli: self.moduli(),
        }
    }

    /// Largest absolute threshold coordinate in the spec, at least 1.
    pub fn scale(&self) -> i64 {
        let m = match self {
            GroupOrderSpec::Zn { threshold, .. } => {
                threshold.theta.iter().map(|v| v.abs()).max().unwrap_or(1)
            }
            GroupOrderSpec::Cyclic { .. } => 1,
            GroupOrderSpec::Lex { inner, outer } => inner.scale().max(outer.scale()),
            GroupOrderSpec::Odot { f, g, .. } => f
                .theta
                .iter()
                .map(|v| v.abs())
                .max()
                .unwrap_or(1)
                .max(g.scale()),
            GroupOrderSpec::Cone(ConeKind::NumericalSemigroup { gens }) => {
                gens.iter().copied().max().unwrap_or(1)
            }
            GroupOrderSpec::Cone(ConeKind::TwoSheet { shift }) => shift.abs(),
        };
        m.max(1)
    }

    /// Whether `x` is strictly positive. `x` must be normalized.
    pub fn positive(&self, x: &[i64]) -> bool {
        match self {
            GroupOrderSpec::Zn { order, threshold } => threshold.contains(order, x),
            GroupOrderSpec::Cyclic { .. } => false,
            GroupOrderSpec::Lex { inner, outer } => {
                let (a, b) = x.split_at(inner.dim());
                outer.positive(b) || (b.iter().all(|&v| v == 0) && inner.positive(a))
            }
            GroupOrderSpec::Odot { a_order, f, g } => {
                let (a, b) = x.split_at(a_order.n());
                let GroupOrderSpec::Zn { order, threshold } = g.as_ref() else {
                    unreachable!("validated at construction")
                };
                match order.compare(b, &threshold.theta) {
                    Ordering::Greater => true,
                    Ordering::Equal => f.contains(a_order, a),
                    Ordering::Less => false,
                }
            }
            GroupOrderSpec::Cone(ConeKind::NumericalSemigroup { gens }) => in_semigroup(gens, x[0]),
            GroupOrderSpec::Cone(ConeKind::TwoSheet { shift }) => {
                if x[1] == 0 {
                    x[0] >= 1
                } else {
                    x[0] >= *shift
                }
            }
        }
    }

    pub fn lt(&self, x: &[i64], y: &[i64]) -> bool {
        let d = self.lattice().sub(y, x);
        self.positive(&d)
    }

    pub fn le(&self, x: &[i64], y: &[i64]) -> bool {
        let l = self.lattice();
        l.normalize(x) == l.normalize(y) || self.lt(x, y)
    }

    /// The compatible total order the spec was built from, when there is one.
    pub fn aux_compare(&self, x: &[i64], y: &[i64]) -> Option<Ordering> {
        match self {
            GroupOrderSpec::Zn { order, .. } => Some(order.compare(x, y)),
            GroupOrderSpec::Cyclic { k } => (*k == 1).then_some(Ordering::Equal),
            GroupOrderSpec::Lex { inner, outer } => {
                let d = inner.dim();
                let o = outer.aux_compare(&x[d..], &y[d..])?;
                let i = inner.aux_compare(&x[..d], &y[..d])?;
                Some(o.then(i))
            }
            GroupOrderSpec::Odot { a_order, g, .. } => {
                let d = a_order.n();
                let o = g.aux_compare(&x[d..], &y[d..])?;
                Some(o.then(a_order.compare(&x[..d], &y[..d])))
            }
            GroupOrderSpec::Cone(ConeKind::NumericalSemigroup { .. }) => Some(x[0].cmp(&y[0])),
            GroupOrderSpec::Cone(ConeKind::TwoSheet { .. }) => None,
        }
    }

    /// Window `[-r, r]` on free coordinates and the whole group on cyclic ones.
    pub fn default_window(&self, r: i64) -> Window {
        let bounds = self
            .moduli()
            .iter()
            .map(|m| match m {
                Some(k) => (0, *k as i64 - 1),
                None => (-r, r),
            })
            .collect();
        Window::new(bounds).expect("symmetric window contains 0")
    }

    /// Checks a window against this spec's coordinate layout.
    pub fn check_window(&self, w: &Window) -> Result<(), GroupError> {
        let m = self.moduli();
        if w.dim() != m.len() {
            return Err(GroupError::Dimension {
                expected: m.len(),
                got: w.dim(),
            });
        }
        for (&(lo, hi), md) in w.bounds().iter().zip(&m) {
            if let Some(k) = md {
                if lo < 0 || hi >= *k as i64 {
                    return Err(GroupError::InvalidSpec(format!(
                        "cyclic coordinate window must lie in 0..{}",
                        k - 1
                    )));
                }
            }
        }
        Ok(())
    }
}

pub fn group_le(spec: &GroupOrderSpec, x: &[i64], y: &[i64]) -> Result<bool, GroupError> {
    for v in [x, y] {
        if v.len() != spec.dim() {
            return Err(GroupError::Dimension {
                expected: spec.dim(),
                got: v.len(),
            });
        }
    }
    Ok(spec.le(x, y))
}

fn in_semigroup(gens: &[i64], x: i64) -> bool {
    if x <= 0 {
        return false;
    }
    let x = x as usize;
    let mut reach = vec![false; x + 1];
    reach[0] = true;
    for v in 1..=x {
        reach[v] = gens
            .iter()
            .any(|&g| g > 0 && g as usize <= v && reach[v - g as usize]);
    }
    reach[x]
}

/// Coordinate arithmetic in `Z^a × Z/k1 × ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    pub moduli: Vec<Option<u32>>,
}

impl Lattice {
    pub fn free(n: usize) -> Self {
        Lattice {
            moduli: vec![None; n],
        }
    }

    pub fn normalize(&self, x: &[i64]) -> Vec<i64> {
        x.iter()
            .zip(&self.moduli)
            .map(|(&v, m)| match m {
                Some(k) => v.rem_euclid(*k as i64),
                None => v,
            })
            .collect()
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        self.normalize(&s)
    }

    pub fn sub(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.normalize(&s)
    }

    pub fn neg(&self, x: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = x.iter().map(|a| -a).collect();
        self.normalize(&s)
    }

    pub fn scale(&self, k: i64, x: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = x.iter().map(|a| k * a).collect();
        self.normalize(&s)
    }
}

/// A box of group elements, inclusive on each coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    bounds: Vec<(i64, i64)>,
}

impl Window {
    pub fn new(bounds: Vec<(i64, i64)>) -> Result<Self, GroupError> {
        if bounds.is_empty() {
            return Err(GroupError::InvalidSpec("window has no coordinates".into()));
        }
        if bounds.iter().any(|&(lo, hi)| lo > 0 || hi < 0) {
            return Err(GroupError::InvalidSpec("window must contain 0".into()));
        }
        Ok(Window { bounds })
    }

    pub fn cube(dim: usize, r: i64) -> Self {
        Window::new(vec![(-r, r); dim]).unwrap()
    }

    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn size(&self) -> usize {
        self.bounds
            .iter()
            .map(|&(lo, hi)| (hi - lo + 1) as usize)
            .product()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(&self.bounds)
                .all(|(&v, &(lo, hi))| lo <= v && v <= hi)
    }

    /// Position in [`elements`](Self::elements) order.
    pub fn index_of(&self, x: &[i64]) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        let mut idx = 0usize;
        for (&v, &(lo, hi)) in x.iter().zip(&self.bounds) {
            idx = idx * (hi - lo + 1) as usize + (v - lo) as usize;
        }
        Some(idx)
    }

    /// Elements in lexicographic order, last coordinate fastest.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &(lo, hi) in &self.bounds {
            let mut next = Vec::with_capacity(out.len() * (hi - lo + 1) as usize);
            for p in &out {
                for v in lo..=hi {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }

    /// Widens free coordinates by `by` on both sides.
    pub fn grown(&self, by: i64, moduli: &[Option<u32>]) -> Window {
        let bounds = self
            .bounds
            .iter()
            .zip(moduli)
            .map(|(&(lo, hi), m)| {
                if m.is_some() {
                    (lo, hi)
                } else {
                    (lo - by, hi + by)
                }
            })
            .collect();
        Window { bounds }
    }

    /// At distance at least `margin` from the boundary on every free coordinate.
    pub fn is_interior(&self, x: &[i64], margin: i64, moduli: &[Option<u32>]) -> bool {
        x.iter()
            .zip(&self.bounds)
            .zip(moduli)
            .all(|((&v, &(lo, hi)), m)| m.is_some() || (v - lo >= margin && hi - v >= margin))
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .bounds
            .iter()
            .map(|(lo, hi)| format!("{lo}..{hi}"))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

pub fn format_element(x: &[i64]) -> String {
    if x.len() == 1 {
        return x[0].to_string();
    }
    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex_plane() -> GroupOrderSpec {
        GroupOrderSpec::zn(
            vec![vec![0, 1], vec![1, 0]],
            FinalSegmentSpec::closed(vec![0, 1]),
        )
        .unwrap()
    }

    #[test]
    fn integer_threshold() {
        let g = GroupOrderSpec::integers(2);
        assert!(group_le(&g, &[0], &[2]).unwrap());
        assert!(!group_le(&g, &[0], &[1]).unwrap());
        assert!(group_le(&g, &[0], &[0]).unwrap());
        assert!(group_le(&g, &[0, 0], &[0]).is_err());
    }

    #[test]
    fn odot_rule() {
        let g = GroupOrderSpec::odot(
            WeightOrderSpec::natural(1),
            FinalSegmentSpec::closed(vec![1]),
            GroupOrderSpec::integers(1),
        )
        .unwrap();
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                let expect = b >= 2 || (b == 1 && a >= 1);
                assert_eq!(g.lt(&[0, 0], &[a, b]), expect, "({a},{b})");
            }
        }
    }

    #[test]
    fn lex_plane_cone_matches_literal() {
        let g = lex_plane();
        for n in -6i64..=6 {
            for m in -6i64..=6 {
                let literal = (n >= 0 && m >= 1) || (n < 0 && m >= 2);
                assert_eq!(g.positive(&[n, m]), literal);
            }
        }
        assert!(g.lt(&[0, 0], &[-5, 2]));
        assert!(!g.lt(&[0, 0], &[-5, 1]));
    }

    #[test]
    fn invalid_thresholds() {
        assert!(GroupOrderSpec::zn(vec![vec![1]], FinalSegmentSpec::closed(vec![0])).is_err());
        assert!(GroupOrderSpec::zn(vec![vec![1]], FinalSegmentSpec::open(vec![0])).is_ok());
        assert!(GroupOrderSpec::zn(vec![vec![1]], FinalSegmentSpec::open(vec![-1])).is_err());
        assert!(GroupOrderSpec::odot(
            WeightOrderSpec::natural(1),
            FinalSegmentSpec::closed(vec![1]),
            GroupOrderSpec::cyclic(2)
        )
        .is_err());
    }

    #[test]
    fn semigroup_membership() {
        let gens = [2, 5];
        let members: Vec<i64> = (0..12).filter(|&x| in_semigroup(&gens, x)).collect();
        assert_eq!(members, vec![2, 4, 5, 6, 7, 8, 9, 10, 11]);
    }

    #[test]
    fn window_indexing() {
        let w = Window::new(vec![(-1, 1), (0, 2)]).unwrap();
        let els = w.elements();
        assert_eq!(els.len(), 9);
        for (i, e) in els.iter().enumerate() {
            assert_eq!(w.index_of(e), Some(i));
        }
        assert!(Window::new(vec![(1, 2)]).is_err());
        assert_eq!(w.to_string(), "-1..1 x 0..2");
    }
}
