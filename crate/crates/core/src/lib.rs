//! Exact polyhedral geometry for mitosis operators on parapolytopes,
//! Demazure characters, and pipe-dream combinatorics.

pub mod error;
pub mod geometry;
pub mod instances;
pub mod linalg;
pub mod okounkov;
pub mod paramitosis;
pub mod parapolytope;
pub mod pipedreams;
pub mod rational;
pub mod schubert;
pub mod suites;
pub mod weyl;

pub use error::{Error, Result};
