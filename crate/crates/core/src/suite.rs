//! The full battery of invariant checks run by `corpus-verify`.

use crate::classify::{classify, ForbiddenPattern};
use crate::clifford::{
    probe_final_segment_normality, random_dyadic, random_element, random_word, reduce, reduce_with,
    CliffordElement, FinalSegment, Letter, ProbeOutcome, Strategy,
};
use crate::dimension::{brute_force_dimension, DimensionResult};
use crate::enumerate::corpus;
use crate::group::analysis::{inc0, interior_traces, window_poset};
use crate::group::{
    pattern_transfer_check, preceq_battery, subgroups_kai, verify_threshold, weak_order_check,
    window_subgroups, BatteryVerdict, FinalSegmentSpec, GroupOrderSpec, WeightOrderSpec, Window,
};
use crate::poset::FinitePoset;
use crate::represent::{
    integer_keys, realizer_dim3_threshold, threshold_poset, unit_representation, RepresentError,
};
use crate::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub max_n: usize,
    /// Sample count for randomized checks.
    pub trials: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 6,
            trials: 10_000,
            seed: 0,
        }
    }
}

/// Runs every check, reporting each one as soon as it finishes.
pub fn run_suite(cfg: &SuiteConfig, mut report: impl FnMut(&Check)) -> Vec<Check> {
    let mut all = Vec::new();
    let mut push = |c: Check| {
        report(&c);
        all.push(c);
    };
    let levels = corpus(cfg.max_n);
    let posets: Vec<&FinitePoset> = levels.iter().flatten().map(|e| &e.poset).collect();
    push(corpus_criteria(&posets));
    push(unit_representations(&posets));
    push(semiorder_dimension(&posets));
    push(threshold_realizers());
    push(transfer());
    push(random_weight_orders(cfg.trials.min(200), cfg.seed));
    push(lex_plane_grid());
    push(weak_orders());
    push(product_examples());
    for c in clifford_checks(cfg.trials, cfg.seed) {
        push(c);
    }
    push(battery_verdicts());
    all
}

pub fn corpus_criteria(posets: &[&FinitePoset]) -> Check {
    let mut bad = 0;
    let (mut interval, mut semi) = (0, 0);
    for p in posets {
        match classify(p) {
            Ok(c) => {
                interval += c.is_interval as usize;
                semi += c.is_semiorder as usize;
            }
            Err(_) => bad += 1,
        }
    }
    Check::new(
        "pattern and trace criteria agree",
        bad == 0,
        format!(
            "{} posets, {interval} interval orders, {semi} semiorders, {bad} disagreements",
            posets.len()
        ),
    )
}

pub fn unit_representations(posets: &[&FinitePoset]) -> Check {
    let mut bad = 0;
    for p in posets {
        let semi = classify(p).map(|c| c.is_semiorder).unwrap_or(false);
        let ok = match unit_representation(p) {
            Ok(r) => semi && r.represents(p),
            Err(RepresentError::NotSemiorder) => !semi,
            Err(_) => false,
        };
        bad += !ok as usize;
    }
    Check::new(
        "unit interval representations round-trip",
        bad == 0,
        format!("{} posets, {bad} failures", posets.len()),
    )
}

pub fn semiorder_dimension(posets: &[&FinitePoset]) -> Check {
    let mut over = 0;
    let mut max = 0;
    let mut count = 0;
    for p in posets {
        if !classify(p).map(|c| c.is_semiorder).unwrap_or(false) {
            continue;
        }
        count += 1;
        match brute_force_dimension(p, 3) {
            DimensionResult::Exact { k, .. } => max = max.max(k),
            DimensionResult::Exceeded => over += 1,
        }
    }
    let crown = brute_force_dimension(&FinitePoset::standard_example(3), 4).value();
    Check::new(
        "semiorders have dimension at most 3",
        over == 0 && crown == Some(3),
        format!(
            "{count} semiorders, max dimension {max}, {over} above 3, crown dimension {crown:?}"
        ),
    )
}

pub fn threshold_realizers() -> Check {
    let mut ok = true;
    for a in 1..=3i64 {
        let keys = integer_keys(-4 * a..=4 * a);
        let alpha = Rational::from_integer(a.into());
        let p = threshold_poset(&keys, &alpha);
        ok &= realizer_dim3_threshold(&keys, &alpha)
            .map(|r| r.realizes(&p))
            .unwrap_or(false);
    }
    Check::new(
        "three linear orders realize Z windows",
        ok,
        "alpha in 1..=3, window [-4a, 4a]",
    )
}

pub fn lex_plane() -> GroupOrderSpec {
    GroupOrderSpec::zn(
        vec![vec![0, 1], vec![1, 0]],
        FinalSegmentSpec::closed(vec![0, 1]),
    )
    .expect("valid spec")
}

pub fn transfer() -> Check {
    let mut specs: Vec<(String, GroupOrderSpec, Window)> = (2..=6)
        .map(|t| {
            (
                format!("Z theta={t}"),
                GroupOrderSpec::integers(t),
                Window::cube(1, 4 * t),
            )
        })
        .collect();
    specs.push(("lex plane".into(), lex_plane(), Window::cube(2, 5)));
    let mut violations = 0;
    let mut grown = 0;
    for (_, spec, w) in &specs {
        for n in 2..=5 {
            match pattern_transfer_check(spec, w, n, None) {
                Ok(r) => {
                    violations += r.violations();
                    grown += r.grown.is_some() as usize;
                }
                Err(_) => violations += 1,
            }
        }
    }
    Check::new(
        "1+n and (q+1)+p co-occur",
        violations == 0,
        format!(
            "{} groups, n in 2..=5, {grown} grown windows, {violations} violations",
            specs.len()
        ),
    )
}

/// A random nonsingular weight order on `Z^n` and a principal final segment
/// of it with threshold coordinates in `-t..=t`.
pub fn random_zn_spec<R: Rng>(rng: &mut R, n: usize, w: i64, t: i64) -> GroupOrderSpec {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-w..=w)).collect())
            .collect();
        let Ok(order) = WeightOrderSpec::new(rows) else {
            continue;
        };
        let theta: Vec<i64> = (0..n).map(|_| rng.gen_range(-t..=t)).collect();
        let closed = rng.gen_bool(0.5);
        if let Ok(s) = GroupOrderSpec::zn_from(order, FinalSegmentSpec { theta, closed }) {
            return s;
        }
    }
}

pub fn random_weight_orders(trials: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    let w = Window::cube(2, 6);
    for _ in 0..trials {
        let spec = random_zn_spec(&mut rng, 2, 3, 2);
        let Ok(wp) = window_poset(&spec, &w) else {
            bad += 1;
            continue;
        };
        let cls = classify(&wp.poset);
        let moduli = spec.moduli();
        let t = interior_traces(&wp, spec.scale(), &moduli);
        let k = t.interior.len();
        let pred_is_aux = (0..k).all(|a| {
            (0..k).all(|b| {
                let (x, y) = (&wp.elements[t.interior[a]], &wp.elements[t.interior[b]]);
                t.pred.get(a, b) == (spec.aux_compare(x, y) != Some(Ordering::Greater))
            })
        });
        let ok = matches!(cls, Ok(c) if c.is_interval == c.is_semiorder) && pred_is_aux;
        bad += !ok as usize;
    }
    Check::new(
        "random Z^2 weight orders: interval iff semiorder, pred is the weight order",
        bad == 0,
        format!("{trials} specs on [-6,6]^2, {bad} failures"),
    )
}

pub fn lex_plane_grid() -> Check {
    let spec = lex_plane();
    let w = Window::cube(2, 5);
    let mut expected: Vec<Vec<i64>> = w
        .elements()
        .into_iter()
        .filter(|x| match x[1] {
            0 => x[0] != 0,
            1 => x[0] < 0,
            -1 => x[0] > 0,
            _ => false,
        })
        .collect();
    expected.sort();
    let mut got = inc0(&spec, &w);
    got.sort();
    let kai = subgroups_kai(&spec, &w, None).ok();
    let kai_ok = kai.as_ref().is_some_and(|r| {
        r.k.to_string() == "{0}" && r.a.to_string() == "span{(1,0)}" && r.i.to_string() == "Z^2"
    });
    let thr = verify_threshold(&spec, &w, None)
        .map(|r| r.is_threshold())
        .unwrap_or(false);
    Check::new(
        "lex plane grid: inc(0), K A I, threshold",
        got == expected && kai_ok && thr,
        format!(
            "inc(0) {} elements (expected {}), K A I {}, threshold {thr}",
            got.len(),
            expected.len(),
            kai.map(|r| format!("{} {} {}", r.k, r.a, r.i))
                .unwrap_or_else(|| "unavailable".into())
        ),
    )
}

pub fn weak_orders() -> Check {
    let weak = GroupOrderSpec::lex(GroupOrderSpec::cyclic(2), GroupOrderSpec::integers(1));
    let a = weak_order_check(&weak, &weak.default_window(6))
        .map(|r| r.antichain && r.closed_under_subtraction);
    let z2 = GroupOrderSpec::integers(2);
    let b = weak_order_check(&z2, &z2.default_window(6))
        .map(|r| !r.antichain && !r.closed_under_subtraction);
    let wp = window_poset(&weak, &weak.default_window(6)).ok();
    let cls = wp
        .and_then(|wp| classify(&wp.poset).ok())
        .map(|c| c.is_weak);
    Check::new(
        "weak order iff inc(0)+0 is an antichain subgroup",
        a == Ok(true) && b == Ok(true) && cls == Some(true),
        format!("Z/2 x Z weak: {a:?}, Z theta=2 both fail: {b:?}"),
    )
}

pub fn cyclic_by_integers(k: u32, theta: i64) -> GroupOrderSpec {
    GroupOrderSpec::lex(GroupOrderSpec::cyclic(k), GroupOrderSpec::integers(theta))
}

pub fn integers_by_integers(theta: i64) -> GroupOrderSpec {
    GroupOrderSpec::lex(GroupOrderSpec::integers(theta), GroupOrderSpec::integers(1))
}

pub fn odot_naturals() -> GroupOrderSpec {
    GroupOrderSpec::odot(
        WeightOrderSpec::natural(1),
        FinalSegmentSpec::closed(vec![1]),
        GroupOrderSpec::integers(1),
    )
    .expect("valid spec")
}

pub fn product_examples() -> Check {
    let mut notes = Vec::new();
    let mut ok = true;
    for (k, t) in [(2, 2), (3, 2), (2, 3)] {
        let g = cyclic_by_integers(k, t);
        let w = g.default_window(4);
        let semi = window_poset(&g, &w)
            .ok()
            .and_then(|wp| classify(&wp.poset).ok())
            .is_some_and(|c| c.is_semiorder);
        let k_big = window_subgroups(&g, &w, None).is_ok_and(|s| s.k.len() > 1);
        ok &= semi && k_big;
        notes.push(format!(
            "Z/{k} x Z_{t}: semiorder {semi}, K nontrivial {k_big}"
        ));
    }
    for t in [2, 3] {
        let g = integers_by_integers(t);
        let thr = verify_threshold(&g, &g.default_window(4), None)
            .is_ok_and(|r| r.is_threshold() && r.is_semiorder);
        ok &= thr;
        notes.push(format!("Z_{t} x Z: threshold {thr}"));
    }
    let g = odot_naturals();
    let r = verify_threshold(&g, &g.default_window(4), None).ok();
    let thr = r
        .as_ref()
        .is_some_and(|r| r.is_threshold() && r.pred_equals_aux == Some(true));
    ok &= thr;
    notes.push(format!("N (.) Z: threshold with lexicographic pred {thr}"));
    Check::new("product constructions", ok, notes.join("; "))
}

pub fn clifford_checks(trials: usize, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc11f);
    let mut out = Vec::new();

    let mut bad = 0;
    for _ in 0..trials {
        let w = random_word(&mut rng, 12, 4, 4);
        bad += (reduce_with(&w, Strategy::LeftmostInnermost)
            != reduce_with(&w, Strategy::RightmostOutermost)) as usize;
    }
    out.push(Check::new(
        "clifford: reduction strategies agree",
        bad == 0,
        format!("{trials} words, {bad} disagreements"),
    ));

    let mut bad = 0;
    for _ in 0..trials {
        let a = random_element(&mut rng, 6, 4, 4);
        let b = random_element(&mut rng, 6, 4, 4);
        let c = random_element(&mut rng, 6, 4, 4);
        let e = CliffordElement::identity();
        let ok = a.add(&b).add(&c) == a.add(&b.add(&c))
            && a.add(&a.neg()).is_identity()
            && a.neg().add(&a).is_identity()
            && a.add(&e) == a
            && e.add(&a) == a;
        bad += !ok as usize;
    }
    out.push(Check::new(
        "clifford: group axioms",
        bad == 0,
        format!("{trials} triples, {bad} failures"),
    ));

    let n = (trials / 10).max(1);
    let mut bad = 0;
    for _ in 0..n {
        let (x, y) = loop {
            let x = random_dyadic(&mut rng, 4, 4);
            let y = random_dyadic(&mut rng, 4, 4);
            if x != y {
                break if x > y { (x, y) } else { (y, x) };
            }
        };
        let mid = (&x + &y) / Rational::from_integer(2.into());
        let lhs = reduce(&[Letter::g(x.clone()), Letter::g(y)]);
        let rhs = reduce(&[Letter::g(mid), Letter::g(x)]);
        bad += (lhs != rhs) as usize;
    }
    out.push(Check::new(
        "clifford: defining relation holds",
        bad == 0,
        format!("{n} instances, {bad} failures"),
    ));

    let mut bad = 0;
    for _ in 0..n {
        let a = random_element(&mut rng, 5, 3, 3);
        let b = random_element(&mut rng, 5, 3, 3);
        let c = random_element(&mut rng, 5, 3, 3);
        let (a, b) = match a.compare(&b) {
            Ordering::Less => (a, b),
            Ordering::Greater => (b, a),
            Ordering::Equal => continue,
        };
        let ok = c.add(&a).compare(&c.add(&b)) == Ordering::Less
            && a.add(&c).compare(&b.add(&c)) == Ordering::Less;
        bad += !ok as usize;
    }
    out.push(Check::new(
        "clifford: order is compatible",
        bad == 0,
        format!("{n} samples, {bad} failures"),
    ));

    let mut notes = Vec::new();
    let mut ok = true;
    for (bound, closed) in [("g(0)", true), ("g(0)", false), ("2*g(5)", true)] {
        let seg =
            FinalSegment::new(bound.parse().expect("literal"), closed).expect("positive bound");
        let found = match probe_final_segment_normality(&seg, 100, &mut rng) {
            ProbeOutcome::Witness(w) => w.verify(&seg),
            ProbeOutcome::NoneFound { .. } => false,
        };
        ok &= found;
        notes.push(format!(
            "{}{bound}: {found}",
            if closed { ">=" } else { ">" }
        ));
    }
    out.push(Check::new(
        "clifford: final segments are not normal",
        ok,
        notes.join(", "),
    ));
    out
}

pub fn battery_verdicts() -> Check {
    let chain2 = FinitePoset::chain(2);
    let tt = ForbiddenPattern::TwoPlusTwo.poset();
    let r1 = matches!(preceq_battery(&tt, &chain2), BatteryVerdict::Refuted { .. });
    let r2 = matches!(
        preceq_battery(&FinitePoset::antichain(3), &FinitePoset::antichain(2)),
        BatteryVerdict::Refuted { .. }
    );
    let s3 = [
        FinitePoset::direct_sum_of_chains(2, 2),
        FinitePoset::direct_sum_of_chains(3, 1),
        FinitePoset::direct_sum_of_chains(1, 3),
    ];
    let mut refuted = 0;
    for p in &s3 {
        for q in &s3 {
            refuted += (preceq_battery(p, q) != BatteryVerdict::NotRefuted) as usize;
        }
    }
    Check::new(
        "witness battery",
        r1 && r2 && refuted == 0,
        format!("2+2 vs 2 refuted {r1}, 3-antichain vs 2-antichain refuted {r2}, {refuted} refutations inside 2+2, 3+1, 1+3"),
    )
}
