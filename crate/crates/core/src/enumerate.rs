//! Isomorphism classes of small posets.
//!
//! Classes on `n` elements are grown from classes on `n - 1` elements by
//! adding a new maximal element above an arbitrary order ideal, then
//! deduplicated by canonical code.

use crate::bitset::BitMatrix;
use crate::poset::FinitePoset;
use std::collections::BTreeMap;

/// Largest size supported by the 64-bit canonical code.
pub const MAX_CANONICAL_N: usize = 8;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub poset: FinitePoset,
    pub automorphisms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Canonical {
    pub code: u64,
    pub automorphisms: u64,
}

fn code_of(p: &FinitePoset, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for i in 0..n {
        let row = p.up(perm[i]);
        for j in 0..n {
            if row.contains(perm[j]) {
                code |= 1 << (i * n + j);
            }
        }
    }
    code
}

/// Colour refinement on (colour, colours above, colours below).
fn refined_colours(p: &FinitePoset) -> Vec<usize> {
    let n = p.n();
    let mut colour: Vec<usize> = vec![0; n];
    let mut classes = 1;
    loop {
        let sig: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|i| {
                let mut up: Vec<usize> = p.up(i).iter().map(|j| colour[j]).collect();
                let mut dn: Vec<usize> = p.down(i).iter().map(|j| colour[j]).collect();
                up.sort_unstable();
                dn.sort_unstable();
                (colour[i], up, dn)
            })
            .collect();
        let mut ids: BTreeMap<&(usize, Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        for s in &sig {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        // Re-number by sorted signature so colours are label independent.
        let ranks: BTreeMap<_, usize> = ids.keys().enumerate().map(|(r, k)| (*k, r)).collect();
        let new: Vec<usize> = sig.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colour = new;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

/// Lex-minimal adjacency code over colour-preserving relabellings,
/// together with the automorphism count.
pub fn canonical_form(p: &FinitePoset) -> Canonical {
    let n = p.n();
    assert!(
        n <= MAX_CANONICAL_N,
        "canonical form supports n <= {MAX_CANONICAL_N}"
    );
    let colour = refined_colours(p);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (colour[i], i));
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut s = 0;
    while s < n {
        let mut e = s;
        while e < n && colour[order[e]] == colour[order[s]] {
            e += 1;
        }
        blocks.push((s, e));
        s = e;
    }
    let mut best = u64::MAX;
    let mut count = 0u64;
    let mut perm = order.clone();
    permute_blocks(&blocks, 0, &mut perm, &mut |perm| {
        let c = code_of(p, perm);
        if c < best {
            best = c;
            count = 1;
        } else if c == best {
            count += 1;
        }
    });
    Canonical {
        code: if n == 0 { 0 } else { best },
        automorphisms: count.max(1),
    }
}

fn permute_blocks(
    blocks: &[(usize, usize)],
    b: usize,
    perm: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if b == blocks.len() {
        visit(perm);
        return;
    }
    let (s, e) = blocks[b];
    heap_permute(perm, s, e - s, &mut |perm| {
        let mut copy = perm.to_vec();
        permute_blocks(blocks, b + 1, &mut copy, visit)
    });
}

/// Heap's algorithm on `perm[s..s + k]`, visiting each arrangement once.
fn heap_permute(perm: &mut [usize], s: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(perm);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(perm, s, k - 1, visit);
        if k.is_multiple_of(2) {
            perm.swap(s + i, s + k - 1);
        } else {
            perm.swap(s, s + k - 1);
        }
    }
    heap_permute(perm, s, k - 1, visit);
}

fn decode(n: usize, code: u64) -> FinitePoset {
    FinitePoset::from_closed(BitMatrix::from_fn(n, |i, j| code >> (i * n + j) & 1 == 1))
}

/// All down-closed subsets of `p`, as element lists.
fn order_ideals(p: &FinitePoset) -> Vec<Vec<usize>> {
    let n = p.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let closed = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| p.down(i).iter().all(|j| mask >> j & 1 == 1));
        if closed {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// One representative per isomorphism class for every size `0..=max_n`,
/// in canonical-code order.
pub fn corpus(max_n: usize) -> Vec<Vec<CorpusEntry>> {
    assert!(max_n <= MAX_CANONICAL_N);
    let mut levels = vec![vec![CorpusEntry {
        poset: FinitePoset::antichain(0),
        automorphisms: 1,
    }]];
    for n in 1..=max_n {
        let mut seen: BTreeMap<u64, u64> = BTreeMap::new();
        for prev in &levels[n - 1] {
            let p = &prev.poset;
            for ideal in order_ideals(p) {
                let m = BitMatrix::from_fn(n, |i, j| {
                    if j == n - 1 {
                        ideal.contains(&i)
                    } else {
                        i < n - 1 && p.lt(i, j)
                    }
                });
                let q = FinitePoset::from_closed(m);
                let c = canonical_form(&q);
                seen.entry(c.code).or_insert(c.automorphisms);
            }
        }
        let level = seen
            .into_iter()
            .map(|(code, aut)| CorpusEntry {
                poset: decode(n, code),
                automorphisms: aut,
            })
            .collect();
        levels.push(level);
    }
    levels
}

/// Number of labeled posets represented by one level of the corpus.
pub fn labeled_count(level: &[CorpusEntry]) -> u64 {
    let n = level.first().map_or(0, |e| e.poset.n()) as u64;
    let fact: u64 = (1..=n).product();
    level.iter().map(|e| fact / e.automorphisms).sum()
}
