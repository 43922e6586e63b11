//! Characteristic vectors: classes `xi` with `xi.x = x.x (mod 2)` for every `x`.

use num::{BigInt, Integer, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2;
use crate::lattice::{inertia, HomologyClass, IntegerForm};

pub const MAX_ENUMERATION_RANK: usize = 12;
pub const MAX_ENUMERATION_BOX: u32 = 5;

/// All characteristic vectors of a form: `base + 2 Z^n + span(mod2_kernel)`.
///
/// `unique_mod_2` is set when the form is nonsingular mod 2 (in particular for
/// every unimodular form); then `mod2_kernel` is empty and any two characteristic
/// vectors differ by an even vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicCoset {
    pub base: HomologyClass,
    pub unique_mod_2: bool,
    pub mod2_kernel: Vec<HomologyClass>,
}

fn odd(x: &BigInt) -> bool {
    x.is_odd()
}

pub fn is_characteristic(form: &IntegerForm, xi: &HomologyClass) -> Result<bool> {
    let q_xi = form.apply(xi)?;
    Ok(q_xi
        .coords()
        .iter()
        .enumerate()
        .all(|(i, v)| odd(v) == odd(form.entry(i, i))))
}

/// Solves `Q xi = diag(Q) (mod 2)`, lifting with coordinates in `{0, 1}`.
pub fn find_characteristic(form: &IntegerForm) -> Result<CharacteristicCoset> {
    let n = form.rank();
    let rows: Vec<Vec<bool>> = form
        .gram()
        .iter()
        .map(|r| r.iter().map(odd).collect())
        .collect();
    let rhs: Vec<bool> = (0..n).map(|i| odd(form.entry(i, i))).collect();
    let sol = gf2::solve(&rows, &rhs).ok_or(Error::NoCharacteristic)?;
    let lift = |bits: &[bool]| -> HomologyClass { bits.iter().map(|&b| i64::from(b)).collect() };
    Ok(CharacteristicCoset {
        base: lift(&sol.particular),
        unique_mod_2: sol.kernel.is_empty(),
        mod2_kernel: sol.kernel.iter().map(|k| lift(k)).collect(),
    })
}

/// Every characteristic vector with all coordinates in `[-max_abs_coord, max_abs_coord]`,
/// in lexicographic order.
pub fn enumerate_characteristic(
    form: &IntegerForm,
    max_abs_coord: u32,
) -> Result<Vec<HomologyClass>> {
    let n = form.rank();
    if n > MAX_ENUMERATION_RANK {
        return Err(Error::SizeLimit(format!(
            "rank {n} exceeds {MAX_ENUMERATION_RANK}"
        )));
    }
    if max_abs_coord > MAX_ENUMERATION_BOX {
        return Err(Error::SizeLimit(format!(
            "box {max_abs_coord} exceeds {MAX_ENUMERATION_BOX}"
        )));
    }
    let coset = find_characteristic(form)?;
    let b = i64::from(max_abs_coord);
    let values =
        |odd: bool| -> Vec<i64> { (-b..=b).filter(|v| (v.rem_euclid(2) == 1) == odd).collect() };

    let mut out = Vec::new();
    let k = coset.mod2_kernel.len();
    for mask in 0u64..(1u64 << k) {
        let mut pattern: Vec<bool> = coset.base.coords().iter().map(odd).collect();
        for (bit, v) in coset.mod2_kernel.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                for (p, c) in pattern.iter_mut().zip(v.coords()) {
                    *p ^= odd(c);
                }
            }
        }
        let choices: Vec<Vec<i64>> = pattern.iter().map(|&p| values(p)).collect();
        cartesian(&choices, &mut Vec::with_capacity(n), &mut out);
    }
    out.sort();
    Ok(out)
}

fn cartesian(choices: &[Vec<i64>], prefix: &mut Vec<i64>, out: &mut Vec<HomologyClass>) {
    match choices.split_first() {
        None => out.push(prefix.iter().copied().collect()),
        Some((head, rest)) => {
            for &v in head {
                prefix.push(v);
                cartesian(rest, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// Outcome of the almost complex compatibility checks for a candidate `c1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct C1Report {
    pub characteristic: bool,
    pub wu_identity: bool,
    #[serde(with = "crate::json::bigint")]
    pub c1_squared: BigInt,
    /// `2 chi + 3 sigma` with `chi = 2 + b+ + b-` and `sigma = b+ - b-`.
    #[serde(with = "crate::json::bigint")]
    pub expected: BigInt,
}

/// Advisory check that `c1` is characteristic and `c1^2 = 2 chi + 3 sigma`.
pub fn validate_c1_almost_complex(form: &IntegerForm, c1: &HomologyClass) -> Result<C1Report> {
    let characteristic = is_characteristic(form, c1)?;
    let c1_squared = form.self_intersection(c1)?;
    let i = inertia(form);
    let chi = 2 + i.b_plus as i64 + i.b_minus as i64;
    let expected = BigInt::from(2 * chi + 3 * i.signature());
    Ok(C1Report {
        characteristic,
        wu_identity: c1_squared == expected,
        c1_squared,
        expected,
    })
}

/// Even iff every coordinate of `x` is even.
pub fn is_even_vector(x: &HomologyClass) -> bool {
    x.coords().iter().all(|c| (c % BigInt::from(2)).is_zero())
}
