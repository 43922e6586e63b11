//! Fixtures shared by the criterion benches.

use cr4_core::lattice::{direct_sum, IntegerForm, StandardForm};
use num::BigInt;

/// `k` copies of E8 summed with `k` hyperbolic planes (rank `10k`).
pub fn e8_stack(k: usize) -> IntegerForm {
    let mut parts = vec![IntegerForm::standard(StandardForm::E8); k];
    parts.extend(std::iter::repeat_n(
        IntegerForm::standard(StandardForm::Hyperbolic),
        k,
    ));
    direct_sum(&parts)
}

/// Dense unimodular form obtained from `e8_stack(k)` by a fixed unipotent congruence.
pub fn dense_unimodular(k: usize) -> IntegerForm {
    let base = e8_stack(k);
    let n = base.rank();
    let u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Less => BigInt::from(0),
                    std::cmp::Ordering::Equal => BigInt::from(1),
                    std::cmp::Ordering::Greater => BigInt::from(((i + j) % 3) as i64 - 1),
                })
                .collect()
        })
        .collect();
    base.congruent(&u).expect("square")
}
