//! Dense linear algebra over the two-element field with packed rows.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

/// Solution set of `A x = b`: one particular solution (free variables zero)
/// and a basis of the homogeneous solution space.
#[derive(Debug, Clone)]
pub(crate) struct Solution {
    pub particular: Vec<bool>,
    pub kernel: Vec<Vec<bool>>,
}

/// Gauss-Jordan elimination on the augmented system. `None` if inconsistent.
pub(crate) fn solve(rows: &[Vec<bool>], rhs: &[bool]) -> Option<Solution> {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<BitRow> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut row = BitRow::zeros(n + 1);
            for (j, &x) in r.iter().enumerate() {
                row.set(j, x);
            }
            row.set(n, b);
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| aug[i].get(c)) else {
            continue;
        };
        aug.swap(r, p);
        let pivot_row = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    if aug[r..].iter().any(|row| row.get(n)) {
        return None;
    }

    let mut particular = vec![false; n];
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = aug[row].get(n);
    }
    let kernel = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![false; n];
            v[free] = true;
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = aug[row].get(free);
            }
            v
        })
        .collect();
    Some(Solution { particular, kernel })
}
