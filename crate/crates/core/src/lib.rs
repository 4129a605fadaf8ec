//! Transcendental Brauer groups of the generalized Kummer K3 surface `Y_C`
//! attached to a diagonal cubic curve `ax^3 + by^3 + cz^3 = 0` over Q.
//!
//! The crate is organised bottom-up:
//!
//! * [`cubeclass`]: cube classes in Q^x/Q^x3 and primitive triples;
//! * [`eisenstein`]: the ring Z[w] with cubic and sextic residue symbols;
//! * [`hecke`]: the Hecke character of `y^2 = x^3 + D` and the m(3) witness scan;
//! * [`nslattice`]: the Néron-Severi lattice of `E x E` and its order-3 cohomology;
//! * [`localarith`]: Hilbert symbols, local solubility and 2-adic evaluation maps;
//! * [`classify`]: the classification report assembling all of the above;
//! * [`cli`]: the command-line front end.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod cubeclass;
pub mod eisenstein;
pub mod error;
pub mod hecke;
pub mod intmatrix;
pub mod localarith;
pub mod nslattice;
pub(crate) mod serde_str;

pub use error::{Error, Result};
