pub mod bitset;
pub mod classify;
pub mod clifford;
pub mod dimension;
pub mod enumerate;
pub mod group;
pub mod pattern;
pub mod poset;
pub mod represent;
pub mod suite;
pub mod text;

pub type Rational = num_rational::BigRational;
