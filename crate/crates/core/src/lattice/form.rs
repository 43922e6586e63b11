use std::fmt;

use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;

/// Coordinate vector of a second homology class in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HomologyClass(pub Vec<BigInt>);

impl Serialize for HomologyClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json::int_vec_to_json(&self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomologyClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        json::int_vec_from_json(&v)
            .map(HomologyClass)
            .map_err(serde::de::Error::custom)
    }
}

impl HomologyClass {
    pub fn new(coords: Vec<BigInt>) -> Self {
        HomologyClass(coords)
    }

    pub fn zero(rank: usize) -> Self {
        HomologyClass(vec![BigInt::zero(); rank])
    }

    /// The `i`-th standard basis vector.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut c = Self::zero(rank);
        c.0[i] = BigInt::one();
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn add(&self, other: &HomologyClass) -> HomologyClass {
        HomologyClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &HomologyClass) -> HomologyClass {
        HomologyClass(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> HomologyClass {
        HomologyClass(self.0.iter().map(|a| a * k).collect())
    }
}

impl<T: Into<BigInt>> FromIterator<T> for HomologyClass {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        HomologyClass(iter.into_iter().map(Into::into).collect())
    }
}

impl From<Vec<i64>> for HomologyClass {
    fn from(v: Vec<i64>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[i64; N]> for HomologyClass {
    fn from(v: [i64; N]) -> Self {
        v.into_iter().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// Named lattices with fixed Gram matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardForm {
    /// `p<1> + q<-1>`, positive entries first.
    DiagonalPQ(usize, usize),
    /// `[[0,1],[1,0]]`.
    Hyperbolic,
    /// Cartan matrix of E8 in Bourbaki labelling (node 2 attached to node 4).
    E8,
    NegE8,
}

/// Bourbaki edges of the E8 Dynkin diagram, zero-based.
const E8_EDGES: [(usize, usize); 7] = [(0, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7)];

/// Highest root of E8 in simple-root coordinates (Bourbaki labelling).
pub const E8_HIGHEST_ROOT: [i64; 8] = [2, 3, 4, 6, 5, 4, 3, 2];

/// A symmetric integer bilinear form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerForm {
    gram: Vec<Vec<BigInt>>,
}

impl IntegerForm {
    /// Checks squareness and symmetry.
    pub fn new(gram: Vec<Vec<BigInt>>) -> Result<Self> {
        let rank = gram.len();
        for (row, r) in gram.iter().enumerate() {
            if r.len() != rank {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    rank,
                });
            }
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(IntegerForm { gram })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal<I: IntoIterator<Item = i64>>(entries: I) -> Self {
        let d: Vec<i64> = entries.into_iter().collect();
        let n = d.len();
        let mut gram = vec![vec![BigInt::zero(); n]; n];
        for (i, x) in d.into_iter().enumerate() {
            gram[i][i] = BigInt::from(x);
        }
        IntegerForm { gram }
    }

    pub fn zero(rank: usize) -> Self {
        IntegerForm {
            gram: vec![vec![BigInt::zero(); rank]; rank],
        }
    }

    pub fn standard(name: StandardForm) -> Self {
        match name {
            StandardForm::DiagonalPQ(p, q) => {
                Self::diagonal(std::iter::repeat_n(1, p).chain(std::iter::repeat_n(-1, q)))
            }
            StandardForm::Hyperbolic => IntegerForm {
                gram: vec![
                    vec![BigInt::zero(), BigInt::one()],
                    vec![BigInt::one(), BigInt::zero()],
                ],
            },
            StandardForm::E8 => {
                let mut gram = vec![vec![BigInt::zero(); 8]; 8];
                for (i, row) in gram.iter_mut().enumerate() {
                    row[i] = BigInt::from(2);
                }
                for &(a, b) in &E8_EDGES {
                    gram[a][b] = BigInt::from(-1);
                    gram[b][a] = BigInt::from(-1);
                }
                IntegerForm { gram }
            }
            StandardForm::NegE8 => Self::standard(StandardForm::E8).negated(),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.gram[i][j]
    }

    pub fn negated(&self) -> Self {
        IntegerForm {
            gram: self
                .gram
                .iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect(),
        }
    }

    fn check_len(&self, x: &HomologyClass) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `Q * x` as an integer vector.
    pub fn apply(&self, x: &HomologyClass) -> Result<HomologyClass> {
        self.check_len(x)?;
        Ok(HomologyClass(
            self.gram
                .iter()
                .map(|row| row.iter().zip(&x.0).map(|(q, c)| q * c).sum())
                .collect(),
        ))
    }

    /// `x^T Q y`.
    pub fn pairing(&self, x: &HomologyClass, y: &HomologyClass) -> Result<BigInt> {
        self.check_len(y)?;
        let qx = self.apply(x)?;
        Ok(qx.0.iter().zip(&y.0).map(|(a, b)| a * b).sum())
    }

    pub fn self_intersection(&self, x: &HomologyClass) -> Result<BigInt> {
        self.pairing(x, x)
    }

    /// Even iff every diagonal entry is even.
    pub fn parity(&self) -> Parity {
        let two = BigInt::from(2);
        if self
            .gram
            .iter()
            .enumerate()
            .all(|(i, r)| (&r[i] % &two).is_zero())
        {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `U^T Q U` for a square integer matrix `U` given by rows.
    pub fn congruent(&self, u: &[Vec<BigInt>]) -> Result<Self> {
        let n = self.rank();
        if u.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: u.len(),
            });
        }
        for r in u {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
        }
        // QU first, then U^T (QU).
        let mut qu = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if self.gram[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    qu[i][j] += &self.gram[i][k] * &u[k][j];
                }
            }
        }
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if u[k][i].is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += &u[k][i] * &qu[k][j];
                }
            }
        }
        Ok(IntegerForm { gram: out })
    }

    /// Largest absolute entry, used by the JSON writer to pick a number encoding.
    pub fn max_abs_entry(&self) -> BigInt {
        self.gram
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or_default()
    }
}

/// Block-diagonal sum. The empty sum is the rank-zero form.
pub fn direct_sum(forms: &[IntegerForm]) -> IntegerForm {
    let n: usize = forms.iter().map(IntegerForm::rank).sum();
    let mut gram = vec![vec![BigInt::zero(); n]; n];
    let mut offset = 0;
    for f in forms {
        for (i, row) in f.gram.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                gram[offset + i][offset + j] = x.clone();
            }
        }
        offset += f.rank();
    }
    IntegerForm { gram }
}
