//! Partially ordered abelian groups given by a positive cone, and the
//! semiorder analyses run on finite windows of them.

pub mod analysis;
pub mod battery;
pub mod parse;
pub mod spec;
pub mod subgroups;
pub mod weight;

pub use analysis::{
    cover_check, pattern_transfer_check, validate_cone, verify_threshold, weak_order_check,
    window_poset, ThresholdReport, TransferReport, WindowPoset,
};
pub use battery::{preceq_battery, BatteryVerdict};
pub use parse::{parse_group, ParsedGroup};
pub use spec::{group_le, ConeKind, FinalSegmentSpec, GroupOrderSpec, Lattice, Window};
pub use subgroups::{subgroups_kai, window_subgroups, SubgroupReport};
pub use weight::{compare_total, WeightOrderSpec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("expected an element of dimension {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("window has {size} elements, above the cap of {cap}")]
    WindowTooLarge { size: usize, cap: usize },
    #[error("unsupported carrier: {0}")]
    UnsupportedCarrier(String),
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
