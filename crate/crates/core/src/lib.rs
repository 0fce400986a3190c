//! Exact linear algebra over prime fields, bound quiver algebras, and the
//! sampling machinery for generic direct-sum decompositions of g-vectors.

pub mod analytics;
pub mod calc;
pub mod field;
pub mod format;
pub mod matrix;
pub mod poly;
pub mod pres;
pub mod quiver;
pub mod rep;
pub mod test_fixtures;
