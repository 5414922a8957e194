//! The subgroups `K`, `A` and `I` of a semiordered group.
//!
//! For a weight order on `Z^n` the convex subgroups form the chain
//! `H_0 = {0} ⊂ H_1 ⊂ ... ⊂ H_n = Z^n`, where `H_j` is the kernel of the
//! first `n - j` weight rows, so all three are members of that chain.

use super::analysis::{
    incomparability_component_of_zero, isolated_inc0, window_poset, WindowPoset,
};
use super::spec::{format_element, GroupOrderSpec, Window};
use super::weight::WeightOrderSpec;
use super::GroupError;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexSubgroup {
    pub j: usize,
    pub n: usize,
    pub basis: Vec<Vec<i64>>,
}

impl ConvexSubgroup {
    fn new(order: &WeightOrderSpec, j: usize) -> Self {
        let n = order.n();
        ConvexSubgroup {
            j,
            n,
            basis: order.kernel_basis(n - j),
        }
    }

    pub fn contains(&self, order: &WeightOrderSpec, x: &[i64]) -> bool {
        order.image(x)[..self.n - self.j].iter().all(|&v| v == 0)
    }

    pub fn is_subgroup_of(&self, other: &ConvexSubgroup) -> bool {
        self.j <= other.j
    }
}

impl fmt::Display for ConvexSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.j == 0 {
            write!(f, "{{0}}")
        } else if self.j == self.n {
            if self.n == 1 {
                write!(f, "Z")
            } else {
                write!(f, "Z^{}", self.n)
            }
        } else {
            let vs: Vec<String> = self
                .basis
                .iter()
                .map(|v| {
                    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                    format!("({})", parts.join(","))
                })
                .collect();
            write!(f, "span{{{}}}", vs.join(","))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupCrossCheck {
    pub margin: i64,
    /// Interior isolated vertices of `inc(0)` are exactly the interior nonzero elements of `K`.
    pub k: bool,
    /// `A` agrees with the elements whose small multiples all stay incomparable to 0.
    pub a: bool,
    /// `I` contains the incomparability component of 0.
    pub i: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupReport {
    pub k: ConvexSubgroup,
    pub a: ConvexSubgroup,
    pub i: ConvexSubgroup,
    pub window_check: SubgroupCrossCheck,
}

impl SubgroupReport {
    pub fn chain_ok(&self) -> bool {
        self.k.is_subgroup_of(&self.a) && self.a.is_subgroup_of(&self.i)
    }

    /// Every convex subgroup lies inside `A` or contains `I`.
    pub fn convex_dichotomy(&self) -> bool {
        (0..=self.k.n).all(|j| j <= self.a.j || j >= self.i.j)
    }
}

pub fn subgroups_kai(
    spec: &GroupOrderSpec,
    window: &Window,
    margin: Option<i64>,
) -> Result<SubgroupReport, GroupError> {
    let GroupOrderSpec::Zn { order, threshold } = spec else {
        return Err(GroupError::UnsupportedCarrier(
            "exact K, A, I are only available for Z^n weight orders".into(),
        ));
    };
    let n = order.n();
    let theta = &threshold.theta;
    let t = order
        .leading_index(theta)
        .expect("threshold is nonzero or open");
    let i = ConvexSubgroup::new(order, n - t);
    let a = ConvexSubgroup::new(order, n - t - 1);

    // F is a union of H-cosets only if moving theta by a positive element
    // of H never crosses the boundary of F.
    let mut kj = 0;
    for j in (1..=n).rev() {
        let h = ConvexSubgroup::new(order, j);
        let straddles = h.basis.iter().any(|b| {
            let plus: Vec<i64> = theta.iter().zip(b).map(|(x, y)| x + y).collect();
            let minus: Vec<i64> = theta.iter().zip(b).map(|(x, y)| x - y).collect();
            let inside = threshold.contains(order, theta);
            threshold.contains(order, &plus) != inside
                || threshold.contains(order, &minus) != inside
        });
        if !straddles {
            kj = j;
            break;
        }
    }
    let k = ConvexSubgroup::new(order, kj);

    let margin = margin.unwrap_or_else(|| spec.scale());
    let wp = window_poset(spec, window)?;
    let window_check = cross_check(spec, order, &wp, margin, &k, &a, &i, theta);
    Ok(SubgroupReport {
        k,
        a,
        i,
        window_check,
    })
}

#[allow(clippy::too_many_arguments)]
fn cross_check(
    spec: &GroupOrderSpec,
    order: &WeightOrderSpec,
    wp: &WindowPoset,
    margin: i64,
    k: &ConvexSubgroup,
    a: &ConvexSubgroup,
    i: &ConvexSubgroup,
    theta: &[i64],
) -> SubgroupCrossCheck {
    let moduli = spec.moduli();
    let isolated = isolated_inc0(spec, wp, margin);
    let k_ok = wp
        .elements
        .iter()
        .filter(|x| x.iter().any(|&v| v != 0) && wp.window.is_interior(x, margin, &moduli))
        .all(|x| k.contains(order, x) == isolated.contains(x));

    let t = order.leading_index(theta).unwrap();
    let kmax = order.image(theta)[t].unsigned_abs() as i64 + 1;
    let incomparable_or_zero =
        |x: &[i64]| x.iter().all(|&v| v == 0) || (!spec.positive(x) && !spec.positive(&neg(x)));
    let a_ok = wp
        .elements
        .iter()
        .filter(|x| (-kmax..=kmax).all(|c| wp.window.contains(&mul(c, x))))
        .all(|x| {
            let evidence = (-kmax..=kmax).all(|c| incomparable_or_zero(&mul(c, x)));
            evidence == a.contains(order, x)
        });

    let comp = incomparability_component_of_zero(wp);
    let i_ok = comp.iter().all(|x| i.contains(order, x));
    SubgroupCrossCheck {
        margin,
        k: k_ok,
        a: a_ok,
        i: i_ok,
    }
}

fn mul(c: i64, x: &[i64]) -> Vec<i64> {
    x.iter().map(|v| c * v).collect()
}

fn neg(x: &[i64]) -> Vec<i64> {
    mul(-1, x)
}

/// Window evidence for any carrier: isolated vertices of `inc(0)`, elements
/// whose in-window multiples are all incomparable to 0, and the
/// incomparability component of 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSubgroups {
    pub k: Vec<Vec<i64>>,
    pub a: Vec<Vec<i64>>,
    pub i: Vec<Vec<i64>>,
}

impl fmt::Display for WindowSubgroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &[Vec<i64>]| {
            s.iter()
                .map(|x| format_element(x))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "K(window)= {}", show(&self.k))?;
        writeln!(f, "A(window)= {}", show(&self.a))?;
        write!(f, "I(window)= {}", show(&self.i))
    }
}

pub fn window_subgroups(
    spec: &GroupOrderSpec,
    window: &Window,
    margin: Option<i64>,
) -> Result<WindowSubgroups, GroupError> {
    let margin = margin.unwrap_or_else(|| spec.scale());
    let wp = window_poset(spec, window)?;
    let lat = spec.lattice();
    let zero = vec![0; window.dim()];
    let mut k = vec![zero.clone()];
    k.extend(isolated_inc0(spec, &wp, margin));
    k.sort();
    let inc_or_zero = |x: &[i64]| {
        let x = lat.normalize(x);
        x.iter().all(|&v| v == 0) || (!spec.positive(&x) && !spec.positive(&lat.neg(&x)))
    };
    let mut a: Vec<Vec<i64>> = wp
        .elements
        .iter()
        .filter(|x| {
            (1..=64)
                .map(|c| lat.scale(c, x))
                .take_while(|m| wp.window.contains(m))
                .all(|m| inc_or_zero(&m))
        })
        .cloned()
        .collect();
    a.sort();
    let mut i = incomparability_component_of_zero(&wp);
    i.sort();
    Ok(WindowSubgroups { k, a, i })
}
