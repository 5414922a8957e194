//! Slow, obviously-correct reference implementations used to check the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use semiorder_core::Rational;

/// A strict order as a plain boolean matrix, `lt[x][y]` meaning `x < y`.
#[derive(Debug, Clone)]
pub struct Rel {
    pub lt: Vec<Vec<bool>>,
}

impl Rel {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        Rel {
            lt: (0..n)
                .map(|x| (0..n).map(|y| x != y && f(x, y)).collect())
                .collect(),
        }
    }

    pub fn of(p: &semiorder_core::poset::FinitePoset) -> Self {
        Self::from_fn(p.n(), |x, y| p.lt(x, y))
    }

    pub fn n(&self) -> usize {
        self.lt.len()
    }

    pub fn inc(&self, x: usize, y: usize) -> bool {
        x != y && !self.lt[x][y] && !self.lt[y][x]
    }

    pub fn is_order(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| {
            !self.lt[x][x]
                && (0..n).all(|y| !(self.lt[x][y] && self.lt[y][x]))
                && (0..n)
                    .all(|y| (0..n).all(|z| !(self.lt[x][y] && self.lt[y][z]) || self.lt[x][z]))
        })
    }

    /// `a < b`, `c < d`, every other pair incomparable.
    pub fn has_two_plus_two(&self) -> bool {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                if !self.lt[a][b] {
                    continue;
                }
                let s: Vec<usize> = (0..n)
                    .filter(|&c| self.inc(a, c) && self.inc(b, c))
                    .collect();
                if s.iter().any(|&c| s.iter().any(|&d| self.lt[c][d])) {
                    return true;
                }
            }
        }
        false
    }

    /// `a < b < c` and `d` incomparable to all three.
    pub fn has_three_plus_one(&self) -> bool {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                if !self.lt[a][b] {
                    continue;
                }
                for c in 0..n {
                    if self.lt[b][c]
                        && (0..n).any(|d| self.inc(a, d) && self.inc(b, d) && self.inc(c, d))
                    {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// `a < b` and `c` incomparable to both.
    pub fn has_one_plus_two(&self) -> bool {
        let n = self.n();
        (0..n).any(|a| {
            (0..n).any(|b| self.lt[a][b] && (0..n).any(|c| self.inc(a, c) && self.inc(b, c)))
        })
    }

    pub fn down(&self, x: usize) -> Vec<bool> {
        (0..self.n()).map(|z| self.lt[z][x]).collect()
    }

    pub fn up(&self, x: usize) -> Vec<bool> {
        (0..self.n()).map(|z| self.lt[x][z]).collect()
    }

    pub fn pred_le(&self, x: usize, y: usize) -> bool {
        (0..self.n()).all(|z| !self.lt[z][x] || self.lt[z][y])
    }

    pub fn succ_le(&self, x: usize, y: usize) -> bool {
        (0..self.n()).all(|z| !self.lt[y][z] || self.lt[x][z])
    }
}

/// Trace relations as packed bit rows, for windows with a few hundred elements.
pub struct Traces {
    pub pred: Vec<Vec<bool>>,
    pub succ: Vec<Vec<bool>>,
}

fn pack(bits: &[bool]) -> Vec<u64> {
    let mut v = vec![0u64; bits.len().div_ceil(64)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            v[i / 64] |= 1 << (i % 64);
        }
    }
    v
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub fn traces(r: &Rel) -> Traces {
    let n = r.n();
    let downs: Vec<Vec<u64>> = (0..n).map(|x| pack(&r.down(x))).collect();
    let ups: Vec<Vec<u64>> = (0..n).map(|x| pack(&r.up(x))).collect();
    Traces {
        pred: (0..n)
            .map(|x| (0..n).map(|y| subset(&downs[x], &downs[y])).collect())
            .collect(),
        succ: (0..n)
            .map(|x| (0..n).map(|y| subset(&ups[y], &ups[x])).collect())
            .collect(),
    }
}

pub fn total_on(m: &[Vec<bool>], items: &[usize]) -> bool {
    items
        .iter()
        .all(|&x| items.iter().all(|&y| m[x][y] || m[y][x]))
}

/// Interval order iff `pred` is total; semiorder iff `pred ∩ succ` is total.
pub fn trace_verdicts(r: &Rel) -> (bool, bool) {
    let t = traces(r);
    let all: Vec<usize> = (0..r.n()).collect();
    let both: Vec<Vec<bool>> = (0..r.n())
        .map(|x| (0..r.n()).map(|y| t.pred[x][y] && t.succ[x][y]).collect())
        .collect();
    (total_on(&t.pred, &all), total_on(&both, &all))
}

/// Every bijection `0..n -> 0..n` that respects the order, by filtering all permutations.
pub fn linear_extensions(r: &Rel) -> Vec<Vec<usize>> {
    let n = r.n();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, r: &Rel, out: &mut Vec<Vec<usize>>) {
        if k == perm.len() {
            let mut pos = vec![0; perm.len()];
            for (i, &e) in perm.iter().enumerate() {
                pos[e] = i;
            }
            let n = perm.len();
            if (0..n).all(|x| (0..n).all(|y| !r.lt[x][y] || pos[x] < pos[y])) {
                out.push(perm.clone());
            }
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, r, out);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, r, &mut out);
    out
}

pub fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &e) in order.iter().enumerate() {
        pos[e] = i;
    }
    pos
}

/// Whether some two linear extensions intersect to the order.
pub fn has_two_realizer(r: &Rel) -> bool {
    let exts: Vec<Vec<usize>> = linear_extensions(r).iter().map(|e| positions(e)).collect();
    let n = r.n();
    let inc: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| r.inc(x, y))
        .collect();
    exts.iter().any(|a| {
        exts.iter()
            .any(|b| inc.iter().all(|&(x, y)| a[y] < a[x] || b[y] < b[x]))
    })
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rewrites words of positive letters `g(a)` with the defining relation
/// only: `g(a) g(b) -> g((a+b)/2) g(a)` for `a > b`, until sorted.
pub fn positive_normal_form(word: &[Rational]) -> Vec<Rational> {
    let mut w = word.to_vec();
    let two = rat(2, 1);
    'outer: loop {
        for i in 0..w.len().saturating_sub(1) {
            if w[i] > w[i + 1] {
                let a = w[i].clone();
                let b = w[i + 1].clone();
                w[i] = (&a + &b) / &two;
                w[i + 1] = a;
                continue 'outer;
            }
        }
        return w;
    }
}

/// A letter `g(a)^{+1}` or `g(a)^{-1}`.
pub type Sym = (Rational, bool);

fn free_cancel(w: &mut Vec<Sym>) {
    let mut out: Vec<Sym> = Vec::new();
    for s in w.drain(..) {
        if let Some(last) = out.last() {
            if last.0 == s.0 && last.1 != s.1 {
                out.pop();
                continue;
            }
        }
        out.push(s);
    }
    *w = out;
}

/// Decides `u = v` when inverse letters can be cleared from both ends by
/// multiplying both sides, then compares positive normal forms. `None`
/// when an inverse letter is left in the interior.
pub fn words_equal(u: &[Sym], v: &[Sym]) -> Option<bool> {
    let (mut u, mut v) = (u.to_vec(), v.to_vec());
    loop {
        free_cancel(&mut u);
        free_cancel(&mut v);
        let head = [&u, &v]
            .into_iter()
            .find_map(|w| w.first().filter(|s| !s.1).cloned());
        if let Some((a, _)) = head {
            u.insert(0, (a.clone(), true));
            v.insert(0, (a, true));
            continue;
        }
        let tail = [&u, &v]
            .into_iter()
            .find_map(|w| w.last().filter(|s| !s.1).cloned());
        if let Some((a, _)) = tail {
            u.push((a.clone(), true));
            v.push((a, true));
            continue;
        }
        break;
    }
    if u.iter().chain(&v).any(|s| !s.1) {
        return None;
    }
    let pu: Vec<Rational> = u.into_iter().map(|s| s.0).collect();
    let pv: Vec<Rational> = v.into_iter().map(|s| s.0).collect();
    Some(positive_normal_form(&pu) == positive_normal_form(&pv))
}

/// Expands `(alpha, m)` terms into unit letters.
pub fn expand(terms: &[(Rational, i64)]) -> Vec<Sym> {
    terms
        .iter()
        .flat_map(|(a, m)| std::iter::repeat_n((a.clone(), *m > 0), m.unsigned_abs() as usize))
        .collect()
}
