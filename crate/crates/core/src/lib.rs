//! Finite inverse semigroups and the four faces of their Morita theory:
//! Cauchy completions and category equivalence, presheaves and actions,
//! equivalence bisets, and ordered groupoid enlargements.

pub mod actions;
pub mod biset;
pub mod category;
pub mod cli;
pub mod corpus;
pub mod groupoid;
pub mod report;
pub mod semigroup;
pub mod semigroupoid;
