//! Canonical connected fundamental domains for the congruence subgroups Γ₀(N).
//!
//! The crate builds the coset-representative set Θ = {ST^i} ∪ {ST^jST^m}
//! for Γ₀(N)\SL₂(Z), classifies the cusps it produces, enumerates and pairs
//! the boundary arcs of the resulting domain with explicit Γ₀(N) elements,
//! computes the genus of X₀(N) from the glued surface and renders the domain
//! as SVG. All arithmetic is exact.
//!
//! ```
//! use gamma0::{arith::Modulus, cosets::build_theta, domain::genus};
//!
//! let n = Modulus::new(12).unwrap();
//! let table = build_theta(n).unwrap();
//! assert_eq!(table.len(), 24);
//! assert_eq!(genus(&table).unwrap().genus, 0);
//! ```

pub mod arith;
pub mod cli;
pub mod cosets;
pub mod cusps;
pub mod domain;
mod error;
pub mod geometry;
pub mod output;
pub mod parallel;
pub mod projline;
pub mod render;
pub mod verify;
pub mod wfunc;
pub mod words;

pub use error::{Error, Result};
