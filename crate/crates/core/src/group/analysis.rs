//! Finite-window analyses of ordered groups.
//!
//! Trace comparisons only trust interior elements: those at distance at
//! least `margin` from the window boundary on every free coordinate.

use super::spec::{GroupOrderSpec, Lattice, Window};
use super::GroupError;
use crate::bitset::{BitMatrix, BitSet};
use crate::pattern::Host;
use crate::poset::FinitePoset;
use std::cmp::Ordering;

pub const DEFAULT_WINDOW_CAP: usize = 6000;

#[derive(Debug, Clone)]
pub struct WindowPoset {
    pub poset: FinitePoset,
    pub elements: Vec<Vec<i64>>,
    pub window: Window,
}

impl WindowPoset {
    pub fn index_of(&self, x: &[i64]) -> Option<usize> {
        self.window.index_of(x)
    }

    pub fn zero(&self) -> usize {
        self.index_of(&vec![0; self.window.dim()])
            .expect("window contains 0")
    }

    pub fn interior(&self, margin: i64, moduli: &[Option<u32>]) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| self.window.is_interior(&self.elements[i], margin, moduli))
            .collect()
    }
}

pub fn window_poset(spec: &GroupOrderSpec, window: &Window) -> Result<WindowPoset, GroupError> {
    window_poset_capped(spec, window, DEFAULT_WINDOW_CAP)
}

pub fn window_poset_capped(
    spec: &GroupOrderSpec,
    window: &Window,
    cap: usize,
) -> Result<WindowPoset, GroupError> {
    spec.check_window(window)?;
    let size = window.size();
    if size > cap {
        return Err(GroupError::WindowTooLarge { size, cap });
    }
    let elements = window.elements();
    let lat = spec.lattice();
    // Positivity depends only on the difference; cache it per difference.
    let mut cache: std::collections::HashMap<Vec<i64>, bool> = std::collections::HashMap::new();
    let m = BitMatrix::from_fn(size, |i, j| {
        if i == j {
            return false;
        }
        let d = lat.sub(&elements[j], &elements[i]);
        *cache.entry(d).or_insert_with_key(|d| spec.positive(d))
    });
    Ok(WindowPoset {
        poset: FinitePoset::from_closed(m),
        elements,
        window: window.clone(),
    })
}

/// Nonzero window elements incomparable to 0.
pub fn inc0(spec: &GroupOrderSpec, window: &Window) -> Vec<Vec<i64>> {
    let lat = spec.lattice();
    window
        .elements()
        .into_iter()
        .filter(|x| x.iter().any(|&v| v != 0))
        .filter(|x| !spec.positive(x) && !spec.positive(&lat.neg(x)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeReport {
    pub contains_zero: bool,
    pub closure_failure: Option<(Vec<i64>, Vec<i64>)>,
    pub antisymmetry_failure: Option<Vec<i64>>,
    /// Conjugation is trivial in an abelian carrier.
    pub normal: bool,
}

impl ConeReport {
    pub fn ok(&self) -> bool {
        self.contains_zero
            && self.closure_failure.is_none()
            && self.antisymmetry_failure.is_none()
            && self.normal
    }
}

/// Cone axioms checked on window elements: `0 ∈ C`, `C + C ⊆ C` where the
/// sum stays in the window, and `C ∩ -C = {0}`.
pub fn validate_cone(
    lattice: &Lattice,
    member: impl Fn(&[i64]) -> bool,
    window: &Window,
) -> ConeReport {
    let zero = vec![0; window.dim()];
    let elems: Vec<Vec<i64>> = window
        .elements()
        .into_iter()
        .filter(|x| member(x))
        .collect();
    let mut closure_failure = None;
    'outer: for a in &elems {
        for b in &elems {
            let s = lattice.add(a, b);
            if window.contains(&s) && !member(&s) {
                closure_failure = Some((a.clone(), b.clone()));
                break 'outer;
            }
        }
    }
    let antisymmetry_failure = elems
        .iter()
        .find(|x| **x != zero && member(&lattice.neg(x)))
        .cloned();
    ConeReport {
        contains_zero: member(&zero),
        closure_failure,
        antisymmetry_failure,
        normal: true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub margin: i64,
    pub interior: usize,
    pub pred_antisymmetric: bool,
    pub pred_total: bool,
    pub pred_equals_succ: bool,
    /// `None` when the spec has no auxiliary total order.
    pub pred_equals_aux: Option<bool>,
    /// Interior elements of `inc(0)` comparable to no other element of `inc(0)`.
    pub isolated_inc0: Vec<Vec<i64>>,
    pub is_semiorder: bool,
}

impl ThresholdReport {
    pub fn is_threshold(&self) -> bool {
        self.pred_antisymmetric
            && self.pred_total
            && self.pred_equals_succ
            && self.pred_equals_aux.unwrap_or(true)
            && self.isolated_inc0.is_empty()
    }
}

/// Trace relations restricted to interior elements of a window.
pub struct InteriorTraces {
    pub interior: Vec<usize>,
    pub pred: BitMatrix,
    pub succ: BitMatrix,
}

pub fn interior_traces(wp: &WindowPoset, margin: i64, moduli: &[Option<u32>]) -> InteriorTraces {
    let interior = wp.interior(margin, moduli);
    let p = &wp.poset;
    let k = interior.len();
    let pred = BitMatrix::from_fn(k, |a, b| p.down(interior[a]).is_subset(p.down(interior[b])));
    let succ = BitMatrix::from_fn(k, |a, b| p.up(interior[b]).is_subset(p.up(interior[a])));
    InteriorTraces {
        interior,
        pred,
        succ,
    }
}

/// Interior elements of `inc(0)` with no comparable partner inside `inc(0)`.
pub fn isolated_inc0(spec: &GroupOrderSpec, wp: &WindowPoset, margin: i64) -> Vec<Vec<i64>> {
    let moduli = spec.moduli();
    let z = wp.zero();
    let p = &wp.poset;
    let inc = p.incomparable_set(z);
    inc.iter()
        .filter(|&x| wp.window.is_interior(&wp.elements[x], margin, &moduli))
        .filter(|&x| !p.up(x).intersects(&inc) && !p.down(x).intersects(&inc))
        .map(|x| wp.elements[x].clone())
        .collect()
}

pub fn verify_threshold(
    spec: &GroupOrderSpec,
    window: &Window,
    margin: Option<i64>,
) -> Result<ThresholdReport, GroupError> {
    let margin = margin.unwrap_or_else(|| spec.scale());
    let wp = window_poset(spec, window)?;
    let moduli = spec.moduli();
    let t = interior_traces(&wp, margin, &moduli);
    let k = t.interior.len();
    let mut antisym = true;
    let mut total = true;
    let mut eq_succ = true;
    let mut aux_ok = Some(true);
    for a in 0..k {
        for b in 0..k {
            let (pab, pba) = (t.pred.get(a, b), t.pred.get(b, a));
            if a != b && pab && pba {
                antisym = false;
            }
            if !pab && !pba {
                total = false;
            }
            if pab != t.succ.get(a, b) {
                eq_succ = false;
            }
            let (x, y) = (&wp.elements[t.interior[a]], &wp.elements[t.interior[b]]);
            match spec.aux_compare(x, y) {
                Some(o) => {
                    if pab != (o != Ordering::Greater) {
                        aux_ok = aux_ok.map(|_| false);
                    }
                }
                None => aux_ok = None,
            }
        }
    }
    let cls =
        crate::classify::classify(&wp.poset).map_err(|e| GroupError::InvalidSpec(e.to_string()))?;
    Ok(ThresholdReport {
        margin,
        interior: k,
        pred_antisymmetric: antisym,
        pred_total: total,
        pred_equals_succ: eq_succ,
        pred_equals_aux: aux_ok,
        isolated_inc0: isolated_inc0(spec, &wp, margin),
        is_semiorder: cls.is_semiorder,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakOrderReport {
    pub antichain: bool,
    pub closed_under_subtraction: bool,
}

impl WeakOrderReport {
    pub fn is_weak(&self) -> bool {
        self.antichain && self.closed_under_subtraction
    }
}

/// Tests whether `inc(0) ∪ {0}` is an antichain and is closed under
/// subtraction, on pairs whose difference stays in the window.
pub fn weak_order_check(
    spec: &GroupOrderSpec,
    window: &Window,
) -> Result<WeakOrderReport, GroupError> {
    spec.check_window(window)?;
    let lat = spec.lattice();
    let mut s = inc0(spec, window);
    s.push(vec![0; window.dim()]);
    let member = |x: &[i64]| {
        let x = lat.normalize(x);
        x.iter().all(|&v| v == 0) || (!spec.positive(&x) && !spec.positive(&lat.neg(&x)))
    };
    let mut antichain = true;
    let mut closed = true;
    for x in &s {
        for y in &s {
            if spec.lt(x, y) {
                antichain = false;
            }
            let d = lat.sub(x, y);
            if window.contains(&d) && !member(&d) {
                closed = false;
            }
        }
    }
    Ok(WeakOrderReport {
        antichain,
        closed_under_subtraction: closed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransferStatus {
    BothPresent,
    BothAbsent,
    /// The window disagreed but the grown window showed both.
    ResolvedAfterGrowth,
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferEntry {
    pub p: usize,
    pub q: usize,
    pub one_plus_n: bool,
    pub other: bool,
    pub status: TransferStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferReport {
    pub n: usize,
    pub window: Window,
    pub grown: Option<Window>,
    pub entries: Vec<TransferEntry>,
}

impl TransferReport {
    pub fn violations(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.status == TransferStatus::Violation)
            .count()
    }
}

/// For each `p + q = n` with `p, q >= 1`, compares whether `1⊕n` and
/// `(q+1)⊕p` embed in the window poset. A disagreement triggers one retry on
/// a window grown by `margin` (default `scale * (n + 1)`).
pub fn pattern_transfer_check(
    spec: &GroupOrderSpec,
    window: &Window,
    n: usize,
    margin: Option<i64>,
) -> Result<TransferReport, GroupError> {
    let margin = margin.unwrap_or_else(|| spec.scale() * (n as i64 + 1));
    let wp = window_poset(spec, window)?;
    let host = Host::new(&wp.poset);
    let one_n = FinitePoset::direct_sum_of_chains(1, n);
    let has_one_n = host.embed(&one_n).found();
    let mut grown: Option<(Window, WindowPoset)> = None;
    let mut entries = Vec::new();
    for p in 1..n {
        let q = n - p;
        let other = FinitePoset::direct_sum_of_chains(q + 1, p);
        let has_other = host.embed(&other).found();
        let (a, b, status) = if has_one_n == has_other {
            let s = if has_one_n {
                TransferStatus::BothPresent
            } else {
                TransferStatus::BothAbsent
            };
            (has_one_n, has_other, s)
        } else {
            if grown.is_none() {
                let gw = window.grown(margin, &spec.moduli());
                let gp = window_poset(spec, &gw)?;
                grown = Some((gw, gp));
            }
            let gh = Host::new(&grown.as_ref().unwrap().1.poset);
            let a = gh.embed(&one_n).found();
            let b = gh.embed(&other).found();
            let s = if a && b {
                TransferStatus::ResolvedAfterGrowth
            } else {
                TransferStatus::Violation
            };
            (a, b, s)
        };
        entries.push(TransferEntry {
            p,
            q,
            one_plus_n: a,
            other: b,
            status,
        });
    }
    Ok(TransferReport {
        n,
        window: window.clone(),
        grown: grown.map(|(w, _)| w),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub interior: usize,
    pub missing_upper: Vec<Vec<i64>>,
    pub missing_lower: Vec<Vec<i64>>,
}

impl CoverReport {
    pub fn ok(&self) -> bool {
        self.missing_upper.is_empty() && self.missing_lower.is_empty()
    }
}

/// Every interior element should have an upper and a lower cover whose
/// difference from it is within `margin` on every coordinate.
pub fn cover_check(
    spec: &GroupOrderSpec,
    window: &Window,
    margin: Option<i64>,
) -> Result<CoverReport, GroupError> {
    let margin = margin.unwrap_or_else(|| spec.scale());
    let wp = window_poset(spec, window)?;
    let moduli = spec.moduli();
    let p = &wp.poset;
    let near = |a: usize, b: usize| {
        wp.elements[a]
            .iter()
            .zip(&wp.elements[b])
            .zip(&moduli)
            .all(|((x, y), m)| m.is_some() || (x - y).abs() <= margin)
    };
    let is_cover = |a: usize, b: usize| p.lt(a, b) && !p.up(a).intersects(p.down(b));
    let interior = wp.interior(margin, &moduli);
    let mut missing_upper = Vec::new();
    let mut missing_lower = Vec::new();
    for &x in &interior {
        if !p.up(x).iter().any(|y| near(x, y) && is_cover(x, y)) {
            missing_upper.push(wp.elements[x].clone());
        }
        if !p.down(x).iter().any(|y| near(x, y) && is_cover(y, x)) {
            missing_lower.push(wp.elements[x].clone());
        }
    }
    Ok(CoverReport {
        interior: interior.len(),
        missing_upper,
        missing_lower,
    })
}

/// The connected component of 0 in the window's incomparability graph.
pub fn incomparability_component_of_zero(wp: &WindowPoset) -> Vec<Vec<i64>> {
    let p = &wp.poset;
    let z = wp.zero();
    let mut seen = BitSet::new(p.n());
    seen.insert(z);
    let mut stack = vec![z];
    while let Some(v) = stack.pop() {
        for w in p.incomparable_set(v).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen.iter().map(|i| wp.elements[i].clone()).collect()
}
