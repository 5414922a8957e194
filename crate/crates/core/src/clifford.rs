//! Clifford's totally ordered group on generators `g(a)`, `a` rational,
//! subject to `g(a) + g(b) = g((a+b)/2) + g(a)` whenever `a > b`.
//!
//! Elements are kept in normal form `m1 g(a1) + ... + ms g(as)` with
//! `a1 < ... < as` and every `mi != 0`. A word is reduced by swapping
//! adjacent out-of-order letters and merging adjacent letters with the same
//! generator. Since `g(a)^m` conjugates `g(b)` to `g(a - (a-b)/2^m)`:
//!
//! ```text
//! g(a)^m g(b)^n  ->  g(a - (a-b)/2^m)^n g(a)^m      (a > b)
//! ```

use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("final segment bound must be positive, or the identity for the strict cone")]
    InvalidSegment,
}

/// `g(alpha)^power`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub alpha: Rational,
    pub power: i64,
}

impl Letter {
    pub fn new(alpha: Rational, power: i64) -> Self {
        Letter { alpha, power }
    }

    pub fn g(alpha: Rational) -> Self {
        Letter { alpha, power: 1 }
    }

    pub fn inverse(&self) -> Self {
        Letter {
            alpha: self.alpha.clone(),
            power: -self.power,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Act on the leftmost reducible pair, resuming the scan just before it.
    LeftmostInnermost,
    /// Act on the rightmost reducible pair.
    RightmostOutermost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// `(alpha - (alpha - beta) / 2^m)`: the image of `beta` under conjugation by `g(alpha)^m`.
pub fn conjugated_alpha(alpha: &Rational, beta: &Rational, m: i64) -> Rational {
    let pow = Rational::from_integer(BigInt::one() << m.unsigned_abs());
    let d = alpha - beta;
    if m >= 0 {
        alpha - d / pow
    } else {
        alpha - d * pow
    }
}

fn reducible(w: &[Letter], i: usize) -> bool {
    w[i].alpha >= w[i + 1].alpha
}

/// Swaps or merges the pair at `i`.
fn rewrite(w: &mut Vec<Letter>, i: usize) {
    if w[i].alpha == w[i + 1].alpha {
        let p = w[i].power + w[i + 1].power;
        w.remove(i + 1);
        if p == 0 {
            w.remove(i);
        } else {
            w[i].power = p;
        }
    } else {
        let beta = conjugated_alpha(&w[i].alpha, &w[i + 1].alpha, w[i].power);
        let n = w[i + 1].power;
        w.swap(i, i + 1);
        w[i] = Letter::new(beta, n);
    }
}

pub fn reduce_with(word: &[Letter], strategy: Strategy) -> CliffordElement {
    let mut w: Vec<Letter> = word.iter().filter(|l| l.power != 0).cloned().collect();
    match strategy {
        Strategy::LeftmostInnermost => {
            let mut i = 0;
            while i + 1 < w.len() {
                if reducible(&w, i) {
                    rewrite(&mut w, i);
                    i = i.saturating_sub(1);
                } else {
                    i += 1;
                }
            }
        }
        Strategy::RightmostOutermost => {
            let mut hint = w.len();
            loop {
                let top = hint.min(w.len().saturating_sub(1));
                let Some(i) = (0..top).rev().find(|&i| reducible(&w, i)) else {
                    break;
                };
                rewrite(&mut w, i);
                hint = i + 2;
            }
        }
    }
    debug_assert!(w.windows(2).all(|p| p[0].alpha < p[1].alpha));
    CliffordElement {
        terms: w.into_iter().map(|l| (l.alpha, l.power)).collect(),
    }
}

pub fn reduce(word: &[Letter]) -> CliffordElement {
    reduce_with(word, Strategy::LeftmostInnermost)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CliffordElement {
    terms: Vec<(Rational, i64)>,
}

impl CliffordElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn g(alpha: Rational) -> Self {
        CliffordElement {
            terms: vec![(alpha, 1)],
        }
    }

    /// Builds an element from terms already in normal form.
    pub fn from_terms(terms: Vec<(Rational, i64)>) -> Option<Self> {
        let ok = terms.iter().all(|t| t.1 != 0) && terms.windows(2).all(|p| p[0].0 < p[1].0);
        ok.then_some(CliffordElement { terms })
    }

    pub fn terms(&self) -> &[(Rational, i64)] {
        &self.terms
    }

    pub fn is_identity(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_word(&self) -> Vec<Letter> {
        self.terms
            .iter()
            .map(|(a, m)| Letter::new(a.clone(), *m))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut w = self.to_word();
        w.extend(other.to_word());
        reduce(&w)
    }

    pub fn neg(&self) -> Self {
        let w: Vec<Letter> = self.to_word().iter().rev().map(Letter::inverse).collect();
        reduce(&w)
    }

    /// `-u + self + u`.
    pub fn conjugate(&self, u: &Self) -> Self {
        let mut w: Vec<Letter> = u.to_word().iter().rev().map(Letter::inverse).collect();
        w.extend(self.to_word());
        w.extend(u.to_word());
        reduce(&w)
    }

    pub fn times(&self, k: i64) -> Self {
        let base = if k < 0 { self.neg() } else { self.clone() };
        let mut w = Vec::new();
        for _ in 0..k.unsigned_abs() {
            w.extend(base.to_word());
        }
        reduce(&w)
    }

    pub fn sign(&self) -> Sign {
        match self.terms.last() {
            None => Sign::Zero,
            Some((_, m)) if *m > 0 => Sign::Positive,
            Some(_) => Sign::Negative,
        }
    }

    pub fn compare(&self, other: &Self) -> Ordering {
        match self.neg().add(other).sign() {
            Sign::Positive => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Negative => Ordering::Greater,
        }
    }

    /// A generator strictly above `self`.
    pub fn dominating_generator(&self) -> Rational {
        match self.terms.last() {
            None => Rational::zero(),
            Some((a, _)) => a + Rational::one(),
        }
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, m)| format!("{m:+}*g({a})"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn perr(pos: usize, msg: impl Into<String>) -> CliffordError {
    CliffordError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn parse_rational(s: &str, pos: usize) -> Result<Rational, CliffordError> {
    let s = s.trim();
    let bad = || perr(pos, format!("bad rational `{s}`"));
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(s.parse().map_err(|_| bad())?),
    };
    Ok(r)
}

/// Parses `g(3/2) g(0)^-1 -2*g(1)`: letters with an optional `^k` power
/// and an optional signed `m*` coefficient. `0` alone is the identity.
pub fn parse_word(text: &str) -> Result<Vec<Letter>, CliffordError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let int_at = |i: &mut usize| -> Option<i64> {
        let start = *i;
        if *i < bytes.len() && (bytes[*i] == b'+' || bytes[*i] == b'-') {
            *i += 1;
        }
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        text[start..*i].parse().ok()
    };
    if text.trim() == "0" {
        return Ok(out);
    }
    loop {
        skip_ws(&mut i);
        if i >= bytes.len() {
            break;
        }
        let start = i;
        let mut coeff = 1;
        if bytes[i] != b'g' {
            coeff = int_at(&mut i).ok_or_else(|| perr(start, "expected `g(` or a coefficient"))?;
            if bytes.get(i) != Some(&b'*') {
                return Err(perr(i, "expected `*` after coefficient"));
            }
            i += 1;
        }
        if !text[i..].starts_with("g(") {
            return Err(perr(i, "expected `g(`"));
        }
        i += 2;
        let close = text[i..].find(')').ok_or_else(|| perr(i, "missing `)`"))? + i;
        let alpha = parse_rational(&text[i..close], i)?;
        i = close + 1;
        let mut power = 1;
        if bytes.get(i) == Some(&b'^') {
            i += 1;
            let p = i;
            power = int_at(&mut i).ok_or_else(|| perr(p, "bad exponent"))?;
        }
        let p = coeff
            .checked_mul(power)
            .ok_or_else(|| perr(start, "exponent overflow"))?;
        if p != 0 {
            out.push(Letter::new(alpha, p));
        }
    }
    Ok(out)
}

impl FromStr for CliffordElement {
    type Err = CliffordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(reduce(&parse_word(s)?))
    }
}

/// `{x : x >= bound}` when closed, `{x : x > bound}` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalSegment {
    pub bound: CliffordElement,
    pub closed: bool,
}

impl FinalSegment {
    pub fn new(bound: CliffordElement, closed: bool) -> Result<Self, CliffordError> {
        match (bound.sign(), closed) {
            (Sign::Positive, _) | (Sign::Zero, false) => Ok(FinalSegment { bound, closed }),
            _ => Err(CliffordError::InvalidSegment),
        }
    }

    pub fn contains(&self, x: &CliffordElement) -> bool {
        match self.bound.compare(x) {
            Ordering::Less => true,
            Ordering::Equal => self.closed,
            Ordering::Greater => false,
        }
    }

    pub fn is_positive_cone(&self) -> bool {
        self.bound.is_identity()
    }
}

/// `f` lies in the segment, `conjugate = -u + f + u` does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityWitness {
    pub f: CliffordElement,
    pub u: CliffordElement,
    pub conjugate: CliffordElement,
}

impl NormalityWitness {
    pub fn verify(&self, seg: &FinalSegment) -> bool {
        seg.contains(&self.f)
            && !seg.contains(&self.conjugate)
            && self.f.conjugate(&self.u) == self.conjugate
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    Witness(NormalityWitness),
    NoneFound { trials: usize },
}

/// Looks for `f` in the segment and `u` with `-u + f + u` outside it.
///
/// Takes a generator `g(b)` inside the segment (the bound itself when it is
/// a generator, else one above it) and `g(r)` below the bound's lowest
/// generator, which lies outside. Conjugating `g(b)` by `g(2b - r)` gives
/// `g(r)`. Random pairs are tried only if that fails.
pub fn probe_final_segment_normality<R: Rng>(
    seg: &FinalSegment,
    trials: usize,
    rng: &mut R,
) -> ProbeOutcome {
    if let Some((lowest, _)) = seg.bound.terms().first() {
        let b = match seg.bound.terms() {
            [(a, 1)] if seg.closed => a.clone(),
            _ => seg.bound.dominating_generator(),
        };
        let r = lowest - Rational::one();
        let f = CliffordElement::g(b.clone());
        let u = CliffordElement::g(Rational::from_integer(BigInt::from(2)) * &b - &r);
        let w = NormalityWitness {
            conjugate: f.conjugate(&u),
            f,
            u,
        };
        if w.verify(seg) {
            return ProbeOutcome::Witness(w);
        }
    }
    for _ in 0..trials {
        let f = random_element(rng, 6, 3, 8);
        if !seg.contains(&f) {
            continue;
        }
        let u = random_element(rng, 6, 3, 8);
        let c = f.conjugate(&u);
        if !seg.contains(&c) {
            return ProbeOutcome::Witness(NormalityWitness { f, u, conjugate: c });
        }
    }
    ProbeOutcome::NoneFound { trials }
}

/// A dyadic rational `k / 2^d` with `|k| <= span * 2^d` and `d <= max_shift`.
pub fn random_dyadic<R: Rng>(rng: &mut R, max_shift: u32, span: i64) -> Rational {
    let d = rng.gen_range(0..=max_shift);
    let scale = 1i64 << d;
    let k = rng.gen_range(-span * scale..=span * scale);
    Rational::new(BigInt::from(k), BigInt::from(scale))
}

/// A word of at most `max_len` letters `g(a)^{+-1}` with dyadic `a`.
pub fn random_word<R: Rng>(rng: &mut R, max_len: usize, max_shift: u32, span: i64) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let a = random_dyadic(rng, max_shift, span);
            Letter::new(a, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect()
}

pub fn random_element<R: Rng>(
    rng: &mut R,
    max_len: usize,
    max_shift: u32,
    span: i64,
) -> CliffordElement {
    reduce(&random_word(rng, max_len, max_shift, span))
}

/// The bound `a <= (s - 1 + m_s) g(a_s)` for `a` with `s` terms, `m_s > 0`.
pub fn generator_multiple_bound(a: &CliffordElement) -> Option<CliffordElement> {
    let (alpha, m) = a.terms().last()?;
    let k = a.terms().len() as i64 - 1 + m.abs();
    Some(CliffordElement::g(alpha.clone()).times(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn el(s: &str) -> CliffordElement {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn spec_words() {
        assert_eq!(el("g(1) g(0)").to_string(), "+1*g(1/2) +1*g(1)");
        assert_eq!(el("g(1)^-1 g(0) g(1)"), CliffordElement::g(q(-1, 1)));
        assert!(el("g(0) g(0)^-1").is_identity());
        assert_eq!(el("g(0)").conjugate(&el("g(1)")), el("g(-1)"));
        assert_eq!(el("g(1)").add(&el("g(0)")).to_string(), "+1*g(1/2) +1*g(1)");
    }

    #[test]
    fn signs_and_order() {
        assert_eq!(el("g(0) g(1)^-1").sign(), Sign::Negative);
        assert_eq!(el("0").sign(), Sign::Zero);
        assert_eq!(el("g(-7/3)").sign(), Sign::Positive);
        assert_eq!(el("g(1/4)").compare(&el("g(1/2)")), Ordering::Less);
        assert_eq!(el("5*g(0)").compare(&el("g(1/1024)")), Ordering::Less);
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "+1*g(1/2) +1*g(1)", "-3*g(-5/8) +2*g(0) -1*g(7)"] {
            assert_eq!(el(s).to_string(), s);
        }
        assert!(matches!(
            "g(1".parse::<CliffordElement>(),
            Err(CliffordError::Parse { .. })
        ));
        assert!(matches!(
            "g(1/0)".parse::<CliffordElement>(),
            Err(CliffordError::Parse { .. })
        ));
        assert!(matches!(
            "h(1)".parse::<CliffordElement>(),
            Err(CliffordError::Parse { .. })
        ));
    }

    #[test]
    fn strategies_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let w = random_word(&mut rng, 12, 4, 4);
            assert_eq!(
                reduce_with(&w, Strategy::LeftmostInnermost),
                reduce_with(&w, Strategy::RightmostOutermost)
            );
        }
    }

    #[test]
    fn probe_segments() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (b, closed) in [
            ("g(0)", true),
            ("g(0)", false),
            ("2*g(5)", true),
            ("2*g(5)", false),
        ] {
            let seg = FinalSegment::new(el(b), closed).unwrap();
            let out = probe_final_segment_normality(&seg, 10, &mut rng);
            if b == "g(0)" && closed {
                let expected = NormalityWitness {
                    f: el("g(0)"),
                    u: el("g(1)"),
                    conjugate: el("g(-1)"),
                };
                assert_eq!(out, ProbeOutcome::Witness(expected));
            }
            match out {
                ProbeOutcome::Witness(w) => assert!(w.verify(&seg)),
                other => panic!("{other:?}"),
            }
        }
        let cone = FinalSegment::new(CliffordElement::identity(), false).unwrap();
        assert_eq!(
            probe_final_segment_normality(&cone, 200, &mut rng),
            ProbeOutcome::NoneFound { trials: 200 }
        );
        assert_eq!(
            FinalSegment::new(el("g(0)^-1"), true),
            Err(CliffordError::InvalidSegment)
        );
        assert_eq!(
            FinalSegment::new(el("0"), true),
            Err(CliffordError::InvalidSegment)
        );
    }

    #[test]
    fn power_rule_matches_repeated_letters() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let a = random_dyadic(&mut rng, 3, 4);
            let b = random_dyadic(&mut rng, 3, 4);
            let m = rng.gen_range(-4i64..=4);
            let n = rng.gen_range(-3i64..=3);
            let packed = reduce(&[Letter::new(a.clone(), m), Letter::new(b.clone(), n)]);
            let mut spread = Vec::new();
            for _ in 0..m.abs() {
                spread.push(Letter::new(a.clone(), m.signum()));
            }
            for _ in 0..n.abs() {
                spread.push(Letter::new(b.clone(), n.signum()));
            }
            assert_eq!(packed, reduce(&spread));
        }
    }
}
