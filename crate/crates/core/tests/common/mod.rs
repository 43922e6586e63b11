#![allow(dead_code)]

use cr4_core::lattice::{direct_sum, IntegerForm, StandardForm};
use cr4_core::HomologyClass;
use num::BigInt;
use rand::Rng;

pub type IntMatrix = Vec<Vec<i64>>;

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Random product of elementary integer matrices, returned with its inverse.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> (IntMatrix, IntMatrix) {
    let mut u = identity(n);
    let mut inv = identity(n);
    if n == 0 {
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..4) {
            0 | 1 if i != j => {
                let c = *[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap();
                for k in 0..n {
                    u[i][k] += c * u[j][k];
                }
                for row in inv.iter_mut() {
                    row[j] -= c * row[i];
                }
            }
            2 if i != j => {
                u.swap(i, j);
                for row in inv.iter_mut() {
                    row.swap(i, j);
                }
            }
            _ => {
                for x in u[i].iter_mut() {
                    *x = -*x;
                }
                for row in inv.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
    }
    (u, inv)
}

pub fn to_big(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn mat_vec(m: &IntMatrix, x: &HomologyClass) -> HomologyClass {
    HomologyClass(
        m.iter()
            .map(|row| {
                row.iter()
                    .zip(x.coords())
                    .map(|(&a, b)| BigInt::from(a) * b)
                    .sum()
            })
            .collect(),
    )
}

pub fn std_form(f: StandardForm) -> IntegerForm {
    IntegerForm::standard(f)
}

/// Standard unimodular forms of rank at most 10.
pub fn standard_forms_up_to_rank_10() -> Vec<(String, IntegerForm)> {
    let h = std_form(StandardForm::Hyperbolic);
    let e8 = std_form(StandardForm::E8);
    let ne8 = std_form(StandardForm::NegE8);
    let mut out = vec![
        ("H".to_string(), h.clone()),
        ("H+H".to_string(), direct_sum(&[h.clone(), h.clone()])),
        ("E8".to_string(), e8.clone()),
        ("-E8".to_string(), ne8.clone()),
        ("E8+H".to_string(), direct_sum(&[e8.clone(), h.clone()])),
        ("-E8+H".to_string(), direct_sum(&[ne8, h])),
    ];
    for p in 0..=10usize {
        for q in 0..=(10 - p) {
            if p + q > 0 {
                out.push((
                    format!("{p}<1>+{q}<-1>"),
                    std_form(StandardForm::DiagonalPQ(p, q)),
                ));
            }
        }
    }
    out
}
