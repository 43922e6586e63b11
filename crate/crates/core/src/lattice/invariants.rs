//! Exact congruence invariants: inertia, determinant, unimodularity.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::form::IntegerForm;

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub b_plus: usize,
    pub b_minus: usize,
    pub b_zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.b_plus as i64 - self.b_minus as i64
    }

    pub fn rank(&self) -> usize {
        self.b_plus + self.b_minus + self.b_zero
    }

    pub fn is_indefinite(&self) -> bool {
        self.b_plus > 0 && self.b_minus > 0
    }
}

/// Symmetric congruence reduction over the rationals (Sylvester's law of inertia).
///
/// Each step moves a nonzero diagonal pivot into position `k` and clears row and
/// column `k`. When the remaining block has a zero diagonal but some `q_ij != 0`,
/// adding row/column `j` to `i` produces the pivot `2 q_ij`.
pub fn inertia(form: &IntegerForm) -> Inertia {
    let n = form.rank();
    let mut a: Vec<Vec<BigRational>> = form
        .gram()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut out = Inertia {
        b_plus: 0,
        b_minus: 0,
        b_zero: 0,
    };

    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let off = (k..n)
                    .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                match off {
                    Some((i, j)) => {
                        add_congruent(&mut a, j, i);
                        i
                    }
                    None => {
                        out.b_zero += n - k;
                        return out;
                    }
                }
            }
        };
        swap_congruent(&mut a, k, pivot);

        let p = a[k][k].clone();
        if p.is_positive() {
            out.b_plus += 1;
        } else {
            out.b_minus += 1;
        }
        for i in (k + 1)..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
            for j in k..n {
                a[j][i] = a[i][j].clone();
            }
        }
    }
    out
}

/// Row and column `src` added to row and column `dst`.
fn add_congruent(a: &mut [Vec<BigRational>], src: usize, dst: usize) {
    let n = a.len();
    for j in 0..n {
        let t = a[src][j].clone();
        a[dst][j] += t;
    }
    for i in 0..n {
        let t = a[i][src].clone();
        a[i][dst] += t;
    }
}

fn swap_congruent(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Fraction-free (Bareiss) elimination with row pivoting.
pub fn determinant(form: &IntegerForm) -> BigInt {
    bareiss(form.gram().to_vec())
}

fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..(n - 1) {
        if m[k][k].is_zero() {
            match ((k + 1)..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn is_unimodular(form: &IntegerForm) -> bool {
    determinant(form).abs().is_one()
}
