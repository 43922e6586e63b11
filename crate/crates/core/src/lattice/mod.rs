//! Symmetric integer bilinear forms: pairing, congruence invariants, standard
//! lattices and classification of indefinite unimodular forms.

mod classify;
mod form;
mod invariants;
pub mod io;

pub use classify::{classify_indefinite_unimodular, Classification};
pub use form::{direct_sum, HomologyClass, IntegerForm, Parity, StandardForm, E8_HIGHEST_ROOT};
pub use invariants::{determinant, inertia, is_unimodular, Inertia};
