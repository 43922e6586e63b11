//! The adjunction identity `2 - 2g + F.F - <c1, F> - 2 F.C = 0` solved for each
//! variable, and recovery of an intersection form from per-surface data by
//! polarization.

use std::collections::BTreeMap;

use num::{BigInt, Integer, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::json;
use crate::lattice::{determinant, HomologyClass, IntegerForm};

/// Geometric data of a smooth representative: genus, `<c1, F>` and the signed
/// count `F.C` of complex jump points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceGeometry {
    #[serde(with = "json::bigint")]
    pub genus: BigInt,
    #[serde(rename = "c1F", with = "json::bigint")]
    pub chern_eval: BigInt,
    #[serde(rename = "FC", with = "json::bigint")]
    pub jump_count: BigInt,
}

impl SurfaceGeometry {
    pub fn new(
        genus: impl Into<BigInt>,
        chern_eval: impl Into<BigInt>,
        jump_count: impl Into<BigInt>,
    ) -> Self {
        SurfaceGeometry {
            genus: genus.into(),
            chern_eval: chern_eval.into(),
            jump_count: jump_count.into(),
        }
    }
}

fn halve(numerator: BigInt) -> Result<BigInt> {
    if numerator.is_odd() {
        return Err(Error::Parity { numerator });
    }
    Ok(numerator / 2)
}

/// `F.C = (2 - 2g + F.F - c1F) / 2`.
pub fn jump_count(
    genus: impl Into<BigInt>,
    self_int: impl Into<BigInt>,
    c1f: impl Into<BigInt>,
) -> Result<BigInt> {
    let g = genus.into();
    if g.is_negative() {
        return Err(Error::InvalidGenus(g));
    }
    halve(2 - 2 * g + self_int.into() - c1f.into())
}

/// `g = (2 + F.F - c1F - 2 F.C) / 2`, required to be a nonnegative integer.
pub fn genus_from(
    self_int: impl Into<BigInt>,
    c1f: impl Into<BigInt>,
    fc: impl Into<BigInt>,
) -> Result<BigInt> {
    let genus = halve(2 + self_int.into() - c1f.into() - 2 * fc.into())?;
    if genus.is_negative() {
        return Err(Error::NegativeGenus { genus });
    }
    Ok(genus)
}

/// `F.F = 2g - 2 + c1F + 2 F.C`.
pub fn self_int_from_geometry(data: &SurfaceGeometry) -> BigInt {
    2 * &data.genus - 2 + &data.chern_eval + 2 * &data.jump_count
}

/// `F.G = (S(F+G) - S(F) - S(G)) / 2` where `S` is [`self_int_from_geometry`].
pub fn pairing_from_geometry(
    f: &SurfaceGeometry,
    g: &SurfaceGeometry,
    fg: &SurfaceGeometry,
) -> Result<BigInt> {
    let numerator =
        self_int_from_geometry(fg) - self_int_from_geometry(f) - self_int_from_geometry(g);
    if numerator.is_odd() {
        return Err(Error::InconsistentGeometry { numerator });
    }
    Ok(numerator / 2)
}

/// `<c1, F>` computed as the pairing of the Poincare dual class `c1` with `F`.
pub fn chern_eval(form: &IntegerForm, c1: &HomologyClass, f: &HomologyClass) -> Result<BigInt> {
    form.pairing(c1, f)
}

/// Four-dimensional Lai identity with Euler class `2 - 2g` and normal Euler number `F.F`:
/// true iff `(2 - 2g) + F.F - c1F = 2 count`.
pub fn lai_dim4_check(
    genus: impl Into<BigInt>,
    self_int: impl Into<BigInt>,
    c1f: impl Into<BigInt>,
    count: impl Into<BigInt>,
) -> bool {
    2 - 2 * genus.into() + self_int.into() - c1f.into() == 2 * count.into()
}

/// Surface data for a basis `F_0..F_{n-1}` and for representatives of each `F_i + F_j`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReconstructionInput {
    pub basis: Vec<SurfaceGeometry>,
    pub pairs: BTreeMap<(usize, usize), SurfaceGeometry>,
}

impl ReconstructionInput {
    /// Reads `{"basis": [...], "pairs": {"i,j": {...}}}` with zero-based indices.
    pub fn from_json(v: &Value) -> Result<Self> {
        let basis_v = v
            .get("basis")
            .ok_or_else(|| Error::InvalidArgument("missing \"basis\"".into()))?;
        let basis: Vec<SurfaceGeometry> = serde_json::from_value(basis_v.clone())
            .map_err(|e| Error::InvalidArgument(format!("basis: {e}")))?;
        let mut pairs = BTreeMap::new();
        if let Some(p) = v.get("pairs") {
            let obj = p
                .as_object()
                .ok_or_else(|| Error::InvalidArgument("\"pairs\" must be an object".into()))?;
            for (key, data) in obj {
                let (i, j) = parse_pair_key(key)?;
                let data: SurfaceGeometry = serde_json::from_value(data.clone())
                    .map_err(|e| Error::InvalidArgument(format!("pair {key:?}: {e}")))?;
                pairs.insert((i, j), data);
            }
        }
        Ok(ReconstructionInput { basis, pairs })
    }

    pub fn to_json(&self) -> Value {
        let pairs: Map<String, Value> = self
            .pairs
            .iter()
            .map(|((i, j), d)| {
                (
                    format!("{i},{j}"),
                    serde_json::to_value(d).expect("serializable"),
                )
            })
            .collect();
        json!({ "basis": self.basis, "pairs": pairs })
    }
}

fn parse_pair_key(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidPair(key.to_string());
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = a.trim().parse().map_err(|_| bad())?;
    let j: usize = b.trim().parse().map_err(|_| bad())?;
    if i >= j {
        return Err(bad());
    }
    Ok((i, j))
}

/// A reconstructed form. Unimodularity is reported, not enforced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub form: IntegerForm,
    pub determinant: BigInt,
    pub unimodular: bool,
}

pub fn reconstruct_gram(input: &ReconstructionInput) -> Result<Reconstruction> {
    let n = input.basis.len();
    if n == 0 {
        return Err(Error::EmptyBasis);
    }
    for (i, d) in input.basis.iter().enumerate() {
        if d.genus.is_negative() {
            return Err(Error::Reconstruction {
                i,
                j: i,
                source: Box::new(Error::InvalidGenus(d.genus.clone())),
            });
        }
    }
    if let Some(&(i, j)) = input.pairs.keys().find(|&&(i, j)| i >= j || j >= n) {
        return Err(Error::InvalidPair(format!("{i},{j}")));
    }
    let mut gram = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        gram[i][i] = self_int_from_geometry(&input.basis[i]);
        for j in (i + 1)..n {
            let fg = input
                .pairs
                .get(&(i, j))
                .ok_or(Error::MissingPair { i, j })?;
            let q = pairing_from_geometry(&input.basis[i], &input.basis[j], fg).map_err(|e| {
                Error::Reconstruction {
                    i,
                    j,
                    source: Box::new(e),
                }
            })?;
            gram[i][j] = q.clone();
            gram[j][i] = q;
        }
    }
    let form = IntegerForm::new(gram)?;
    let det = determinant(&form);
    Ok(Reconstruction {
        unimodular: det.abs() == BigInt::from(1),
        determinant: det,
        form,
    })
}

/// Geometric data consistent with the adjunction identity for the class `x`.
///
/// Uses `F.C = 0` when that gives a nonnegative genus; otherwise lowers `F.C` to
/// the value that makes the genus exactly zero.
pub fn synthesize_geometry(
    form: &IntegerForm,
    c1: &HomologyClass,
    x: &HomologyClass,
) -> Result<SurfaceGeometry> {
    let self_int = form.self_intersection(x)?;
    let c1f = chern_eval(form, c1, x)?;
    let numerator: BigInt = 2 + &self_int - &c1f;
    let g0 = halve(numerator)?;
    let (genus, fc) = if g0.is_negative() {
        (BigInt::zero(), g0)
    } else {
        (g0, BigInt::zero())
    };
    Ok(SurfaceGeometry {
        genus,
        chern_eval: c1f,
        jump_count: fc,
    })
}

/// Synthesized data for the standard basis of `form` and all pairwise sums.
pub fn synthesize_reconstruction(
    form: &IntegerForm,
    c1: &HomologyClass,
) -> Result<ReconstructionInput> {
    let n = form.rank();
    let e = |i| HomologyClass::basis(n, i);
    let basis = (0..n)
        .map(|i| synthesize_geometry(form, c1, &e(i)))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.insert((i, j), synthesize_geometry(form, c1, &e(i).add(&e(j)))?);
        }
    }
    Ok(ReconstructionInput { basis, pairs })
}
