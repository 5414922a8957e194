//! Refuting `P ⪯ Q` ("every ordered group embedding `Q` embeds `P`") with
//! a fixed family of witness groups.
//!
//! Each witness group has a bounded window that holds a copy of every
//! pattern of a given size that embeds at all: sorting the points of an
//! embedded pattern along the free coordinate, any gap wider than the
//! group's compression step can be shrunk to that step without changing a
//! single comparison. The search on that window is therefore exact.

use super::analysis::window_poset;
use super::spec::{ConeKind, GroupOrderSpec, Window};
use crate::pattern::Host;
use crate::poset::FinitePoset;

#[derive(Debug, Clone)]
pub struct WitnessGroup {
    pub name: String,
    pub spec: GroupOrderSpec,
    /// Largest needed gap between consecutive free coordinates.
    pub step: i64,
    /// Index of the single free coordinate.
    pub free: usize,
}

impl WitnessGroup {
    /// A window holding a copy of every embeddable `m`-element pattern.
    pub fn window(&self, m: usize) -> Window {
        let span = self.step * (m.max(1) as i64 - 1);
        let bounds = self
            .spec
            .moduli()
            .iter()
            .enumerate()
            .map(|(i, md)| match md {
                Some(k) => (0, *k as i64 - 1),
                None if i == self.free => (0, span),
                None => (0, 0),
            })
            .collect();
        Window::new(bounds).unwrap()
    }

    pub fn embeds(&self, pattern: &FinitePoset) -> bool {
        let wp =
            window_poset(&self.spec, &self.window(pattern.n())).expect("battery windows are small");
        Host::new(&wp.poset).embed(pattern).found()
    }
}

pub fn battery() -> Vec<WitnessGroup> {
    let mut out = vec![WitnessGroup {
        name: "Z".into(),
        spec: GroupOrderSpec::integers(1),
        step: 1,
        free: 0,
    }];
    for k in 2..=6u32 {
        out.push(WitnessGroup {
            name: format!("Z x Z/{k}, cone {{(m,0): m>=0}}"),
            spec: GroupOrderSpec::lex(GroupOrderSpec::integers(1), GroupOrderSpec::cyclic(k)),
            step: 1,
            free: 0,
        });
        out.push(WitnessGroup {
            name: format!("Z x Z/{k}, cone {{(m,0): m>=0}} + {{(m,i): m>=1}}"),
            spec: GroupOrderSpec::lex(GroupOrderSpec::cyclic(k), GroupOrderSpec::integers(1)),
            step: 1,
            free: 1,
        });
    }
    out.push(WitnessGroup {
        name: "Z, cone {m: m>=3}".into(),
        spec: GroupOrderSpec::integers(3),
        step: 3,
        free: 0,
    });
    for k in [2i64, 4, 6] {
        out.push(WitnessGroup {
            name: format!("Z, cone generated by 2 and {}", k + 1),
            spec: GroupOrderSpec::Cone(ConeKind::NumericalSemigroup {
                gens: vec![2, k + 1],
            }),
            step: k,
            free: 0,
        });
    }
    for p in 1..=3i64 {
        out.push(WitnessGroup {
            name: format!("Z x Z/2, strict cone generated by (1,0) and ({},1)", p + 1),
            spec: GroupOrderSpec::Cone(ConeKind::TwoSheet { shift: p + 1 }),
            step: p + 1,
            free: 0,
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BatteryVerdict {
    /// The named group embeds `Q` but not `P`.
    Refuted {
        group: String,
    },
    NotRefuted,
}

pub fn preceq_battery(p: &FinitePoset, q: &FinitePoset) -> BatteryVerdict {
    for g in battery() {
        if g.embeds(q) && !g.embeds(p) {
            return BatteryVerdict::Refuted { group: g.name };
        }
    }
    BatteryVerdict::NotRefuted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::analysis::validate_cone;

    #[test]
    fn spec_examples() {
        let tt = FinitePoset::direct_sum_of_chains(2, 2);
        assert_eq!(
            preceq_battery(&tt, &FinitePoset::chain(2)),
            BatteryVerdict::Refuted { group: "Z".into() }
        );
        let v = preceq_battery(&FinitePoset::antichain(3), &FinitePoset::antichain(2));
        assert_eq!(
            v,
            BatteryVerdict::Refuted {
                group: "Z x Z/2, cone {(m,0): m>=0}".into()
            }
        );
        assert_eq!(
            preceq_battery(&tt, &FinitePoset::direct_sum_of_chains(3, 1)),
            BatteryVerdict::NotRefuted
        );
    }

    #[test]
    fn battery_cones_are_cones() {
        for g in battery() {
            let w = g.window(8).grown(0, &g.spec.moduli());
            let sym = Window::new(
                w.bounds()
                    .iter()
                    .zip(g.spec.moduli())
                    .map(|(&(lo, hi), m)| if m.is_some() { (lo, hi) } else { (-hi, hi) })
                    .collect(),
            )
            .unwrap();
            let lat = g.spec.lattice();
            let member = |x: &[i64]| x.iter().all(|&v| v == 0) || g.spec.positive(x);
            assert!(validate_cone(&lat, member, &sym).ok(), "{}", g.name);
        }
    }

    /// Compression is exact: a wider window never embeds more patterns.
    #[test]
    fn compressed_windows_are_decisive() {
        let crate_corpus = crate::enumerate::corpus(4);
        for g in battery() {
            for level in &crate_corpus[1..] {
                for e in level {
                    let narrow = g.embeds(&e.poset);
                    let wide_w = g.window(e.poset.n() + 3);
                    let wp = window_poset(&g.spec, &wide_w).unwrap();
                    let wide = Host::new(&wp.poset).embed(&e.poset).found();
                    assert_eq!(narrow, wide, "{} {:?}", g.name, e.poset);
                }
            }
        }
    }
}
