//! Traces, critical pairs and recognition of interval orders, semiorders,
//! weak orders and threshold orders.

use crate::bitset::BitMatrix;
use crate::pattern::{Host, PatternMatch};
use crate::poset::{FinitePoset, QuasiOrder};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("pattern and trace criteria disagree on {0}")]
    CriteriaDisagreement(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenPattern {
    TwoPlusTwo,
    ThreePlusOne,
    OnePlusTwo,
}

impl ForbiddenPattern {
    pub fn poset(self) -> FinitePoset {
        match self {
            ForbiddenPattern::TwoPlusTwo => FinitePoset::direct_sum_of_chains(2, 2),
            ForbiddenPattern::ThreePlusOne => FinitePoset::direct_sum_of_chains(3, 1),
            ForbiddenPattern::OnePlusTwo => FinitePoset::direct_sum_of_chains(1, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenPattern::TwoPlusTwo => "2+2",
            ForbiddenPattern::ThreePlusOne => "3+1",
            ForbiddenPattern::OnePlusTwo => "1+2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_chain: bool,
    pub is_weak: bool,
    pub is_interval: bool,
    pub is_semiorder: bool,
    pub is_threshold: bool,
    /// The first forbidden pattern found, in the order 2+2, 3+1, 1+2.
    pub forbidden_witness: Option<(ForbiddenPattern, PatternMatch)>,
    pub criteria_agree: bool,
}

/// `pred`: `x <= y` iff `D(x) ⊆ D(y)`; `succ`: `x <= y` iff `U(y) ⊆ U(x)`.
pub fn traces(p: &FinitePoset) -> (QuasiOrder, QuasiOrder) {
    let n = p.n();
    let pred = BitMatrix::from_fn(n, |x, y| p.down(x).is_subset(p.down(y)));
    let succ = BitMatrix::from_fn(n, |x, y| p.up(y).is_subset(p.up(x)));
    (
        QuasiOrder::from_matrix_unchecked(pred),
        QuasiOrder::from_matrix_unchecked(succ),
    )
}

/// Incomparable `(x, y)` with `D(x) ⊆ D(y)` and `U(y) ⊆ U(x)`.
pub fn critical_pairs(p: &FinitePoset) -> Vec<(usize, usize)> {
    let n = p.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in p.incomparable_set(x).iter() {
            if p.down(x).is_subset(p.down(y)) && p.up(y).is_subset(p.up(x)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Minimum number of antichains covering `p`, i.e. its height.
pub fn antichain_cover_number(p: &FinitePoset) -> usize {
    p.height()
}

/// True when "incomparable or equal" is an equivalence relation.
pub fn incomparability_is_equivalence(p: &FinitePoset) -> bool {
    let n = p.n();
    (0..n).all(|x| {
        let ix = p.incomparable_set(x);
        let ok = ix.iter().all(|y| {
            let mut iy = p.incomparable_set(y);
            iy.remove(x);
            let mut ixx = ix.clone();
            ixx.remove(y);
            iy == ixx
        });
        ok
    })
}

pub fn classify(p: &FinitePoset) -> Result<Classification, ClassifyError> {
    let host = Host::new(p);
    let mut witness = None;
    let found = |pat: ForbiddenPattern, witness: &mut Option<(ForbiddenPattern, PatternMatch)>| {
        let m = host.embed(&pat.poset());
        let f = m.found();
        if f && witness.is_none() {
            *witness = Some((pat, m));
        }
        f
    };
    let has22 = found(ForbiddenPattern::TwoPlusTwo, &mut witness);
    let has31 = found(ForbiddenPattern::ThreePlusOne, &mut witness);
    let has12 = found(ForbiddenPattern::OnePlusTwo, &mut witness);

    let (pred, succ) = traces(p);
    let both = pred.intersection(&succ);

    let is_interval = !has22;
    if is_interval != pred.is_total() || is_interval != succ.is_total() {
        return Err(ClassifyError::CriteriaDisagreement("interval order"));
    }
    let is_semiorder = !has22 && !has31;
    if is_semiorder != both.is_total() {
        return Err(ClassifyError::CriteriaDisagreement("semiorder"));
    }
    let is_weak = !has12;
    if is_weak != incomparability_is_equivalence(p) {
        return Err(ClassifyError::CriteriaDisagreement("weak order"));
    }
    let is_threshold = pred == succ && pred.is_antisymmetric() && pred.is_total();
    let is_chain = p.is_chain();
    Ok(Classification {
        is_chain,
        is_weak,
        is_interval,
        is_semiorder,
        is_threshold,
        forbidden_witness: witness,
        criteria_agree: true,
    })
}
