//! Exact computations for complements of complex hyperplane arrangements and
//! for representations of pure braid groups.
//!
//! * [`arrangement`]: intersection posets, Mobius values, Betti numbers.
//! * [`arnold`]: the cohomology ring of P_n in its admissible basis.
//! * [`charclass`]: Stiefel-Whitney classes of representations through 2-tori.
//! * [`ktheory`]: K-groups read off from Betti numbers.
//! * [`burau`]: the Burau representation over Z[t, 1/t] and the Vandermonde map.
//! * [`heisenberg`]: lifts of P_n to the generalized Heisenberg group.

pub mod arnold;
pub mod arrangement;
pub mod burau;
pub mod charclass;
pub mod error;
pub mod exact;
pub mod f2;
pub mod heisenberg;
pub mod ktheory;
pub mod laurent;

pub use error::{ArnoldError, ArrangementError, BurauError, CharClassError, HeisenbergError, ScalarError};
