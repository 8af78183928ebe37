//! Exact verification of an odd presentation of the Weyl group W(E6).
//!
//! Lorentzian lattices `Z^{n,1}` and their reflections, congruence quotients
//! of the reflection groups, Coxeter presentations with deflation relators on
//! the A3, Ã5 and Petersen diagrams, Todd–Coxeter enumeration, Gosset-polytope
//! tile graphs, the Petersen configuration inside the E6 root system, and
//! Eisenstein hexaflections.

pub mod coset_enum;
pub mod e6;
pub mod eisenstein;
pub mod error;
pub mod gosset;
pub mod isometry;
pub mod lattice;
pub mod presentation;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
