//! Classification of indefinite unimodular forms by rank, signature and parity.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::form::{direct_sum, IntegerForm, Parity, StandardForm};
use super::invariants::{inertia, is_unimodular, Inertia};
use crate::error::{Error, Result};

/// Canonical representative of an indefinite unimodular form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "parity", rename_all = "lowercase")]
pub enum Classification {
    /// `p<1> + q<-1>`.
    Odd { p: usize, q: usize },
    /// `sign * (e8_count * E8) + hyperbolic_count * H`; `e8_sign` is `1` or `-1`
    /// (`1` when `e8_count` is zero).
    Even {
        e8_sign: i8,
        e8_count: usize,
        hyperbolic_count: usize,
    },
}

impl Classification {
    pub fn representative(&self) -> IntegerForm {
        match *self {
            Classification::Odd { p, q } => IntegerForm::standard(StandardForm::DiagonalPQ(p, q)),
            Classification::Even {
                e8_sign,
                e8_count,
                hyperbolic_count,
            } => {
                let e8 = if e8_sign < 0 {
                    StandardForm::NegE8
                } else {
                    StandardForm::E8
                };
                let mut parts = vec![IntegerForm::standard(e8); e8_count];
                parts.extend(std::iter::repeat_n(
                    IntegerForm::standard(StandardForm::Hyperbolic),
                    hyperbolic_count,
                ));
                direct_sum(&parts)
            }
        }
    }

    pub fn parity(&self) -> Parity {
        match self {
            Classification::Odd { .. } => Parity::Odd,
            Classification::Even { .. } => Parity::Even,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Classification::Odd { p, q } => write!(f, "{p}<1> + {q}<-1>"),
            Classification::Even {
                e8_sign,
                e8_count,
                hyperbolic_count,
            } => {
                let sign = if e8_sign < 0 { "-" } else { "" };
                write!(f, "{sign}({e8_count}E8) + {hyperbolic_count}H")
            }
        }
    }
}

pub fn classify_indefinite_unimodular(form: &IntegerForm) -> Result<Classification> {
    let Inertia {
        b_plus,
        b_minus,
        b_zero,
    } = inertia(form);
    if b_zero > 0 {
        return Err(Error::UnsupportedClassification(format!(
            "degenerate form ({b_zero}-dimensional kernel)"
        )));
    }
    if !is_unimodular(form) {
        return Err(Error::UnsupportedClassification(
            "form is not unimodular".into(),
        ));
    }
    if b_plus == 0 || b_minus == 0 {
        return Err(Error::UnsupportedClassification(format!(
            "form is definite (b+ = {b_plus}, b- = {b_minus})"
        )));
    }
    Ok(match form.parity() {
        Parity::Odd => Classification::Odd {
            p: b_plus,
            q: b_minus,
        },
        Parity::Even => {
            let sig = b_plus as i64 - b_minus as i64;
            // van der Blij: the signature of an even unimodular form is divisible by 8.
            if sig % 8 != 0 {
                return Err(Error::UnsupportedClassification(format!(
                    "even unimodular form with signature {sig} not divisible by 8"
                )));
            }
            let e8_count = (sig.unsigned_abs() / 8) as usize;
            Classification::Even {
                e8_sign: if sig < 0 { -1 } else { 1 },
                e8_count,
                hyperbolic_count: (form.rank() - 8 * e8_count) / 2,
            }
        }
    })
}
