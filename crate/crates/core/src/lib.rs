//! Exact intersection-form arithmetic and the adjunction identity for embedded
//! surfaces in almost complex four-manifolds.
//!
//! - [`lattice`]: symmetric integer forms, inertia, determinant, parity,
//!   standard lattices and classification of indefinite unimodular forms.
//! - [`characteristic`]: characteristic vectors via linear algebra mod 2.
//! - [`adjunction`]: the identity `2 - 2g + F.F - <c1, F> - 2 F.C = 0` and
//!   reconstruction of a Gram matrix from surface data by polarization.
//! - [`bounds`]: rational bounds on jump point counts of characteristic spheres.
//! - [`detector`]: numerical location of complex jump points on surfaces in `C^2`.

pub mod adjunction;
pub mod bounds;
pub mod characteristic;
pub mod detector;
mod error;
mod gf2;
pub mod json;
pub mod lattice;

pub use error::{Error, Result};
pub use lattice::{HomologyClass, Inertia, IntegerForm, Parity, StandardForm};
