//! Bounds on the number of complex jump points of an embedded 2-sphere that
//! represents a characteristic class, in terms of `b+`, `b-` and `<c1, F>`.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::json::rational_to_string;

/// Which self-intersection regime applies. `F.F = 0` is not covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundsCase {
    /// `F.F <= -1`
    Negative,
    /// `F.F >= 1`
    Positive,
}

impl FromStr for BoundsCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "negative" | "neg" => Ok(BoundsCase::Negative),
            "positive" | "pos" => Ok(BoundsCase::Positive),
            other => Err(Error::InvalidArgument(format!("unknown case {other:?}"))),
        }
    }
}

impl fmt::Display for BoundsCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundsCase::Negative => "negative",
            BoundsCase::Positive => "positive",
        })
    }
}

/// Closed rational interval `[lo, hi]`; `empty` is set exactly when `lo > hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub empty: bool,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        let empty = lo > hi;
        RationalInterval { lo, hi, empty }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        !self.empty && &self.lo <= x && x <= &self.hi
    }

    /// Image under the increasing affine map `x -> a x + b` (`a > 0`).
    pub fn affine(&self, a: &BigRational, b: &BigRational) -> Self {
        debug_assert!(a.is_positive());
        RationalInterval::new(&self.lo * a + b, &self.hi * a + b)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lo": rational_to_string(&self.lo),
            "hi": rational_to_string(&self.hi),
            "empty": self.empty,
        })
    }
}

/// Inclusive integer range.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntRange {
    pub min: BigInt,
    pub max: BigInt,
}

fn q(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn frac(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// Interval for the jump point count `n`.
///
/// Negative case: `[(b+ - 9b- + 10 - c1F)/2, (b+ - b-/9 - 10/9 - c1F)/2]`.
/// Positive case: `[(b+/9 - b- + 26/9 - c1F)/2, (9b+ - b- - 6 - c1F)/2]`.
pub fn jump_bounds(
    b_plus: u64,
    b_minus: u64,
    c1f: impl Into<BigInt>,
    case: BoundsCase,
) -> RationalInterval {
    let (bp, bm, c) = (q(b_plus), q(b_minus), q(c1f.into()));
    let half = frac(1, 2);
    let ninth = frac(1, 9);
    let (lo, hi) = match case {
        BoundsCase::Negative => (
            &bp - q(9) * &bm + q(10) - &c,
            &bp - &bm * &ninth - frac(10, 9) - &c,
        ),
        BoundsCase::Positive => (
            &bp * &ninth - &bm + frac(26, 9) - &c,
            q(9) * &bp - &bm - q(6) - &c,
        ),
    };
    RationalInterval::new(lo * &half, hi * half)
}

/// Self-intersection bounds for a characteristic sphere, independent of `c1F`.
///
/// Negative case: `[b+ - 9b- + 8, b+ - b-/9 - 28/9]`.
/// Positive case: `[b+/9 - b- + 8/9, 9b+ - b- - 8]`.
pub fn char_sphere_selfint_bounds(b_plus: u64, b_minus: u64, case: BoundsCase) -> RationalInterval {
    let (bp, bm) = (q(b_plus), q(b_minus));
    let ninth = frac(1, 9);
    match case {
        BoundsCase::Negative => {
            RationalInterval::new(&bp - q(9) * &bm + q(8), &bp - &bm * &ninth - frac(28, 9))
        }
        BoundsCase::Positive => {
            RationalInterval::new(&bp * &ninth - &bm + frac(8, 9), q(9) * &bp - &bm - q(8))
        }
    }
}

/// Image of a jump-count interval under the sphere adjunction `F.F = 2n - 2 + c1F`.
pub fn selfint_image(interval: &RationalInterval, c1f: impl Into<BigInt>) -> RationalInterval {
    interval.affine(&q(2), &(q(c1f.into()) - q(2)))
}

/// Integers in the interval, optionally restricted to `n >= 0`. `None` when empty.
pub fn integer_feasible(
    interval: &RationalInterval,
    require_nonnegative: bool,
) -> Option<IntRange> {
    if interval.empty {
        return None;
    }
    let mut min = interval.lo.ceil().to_integer();
    let max = interval.hi.floor().to_integer();
    if require_nonnegative && min.is_negative() {
        min = BigInt::zero();
    }
    (min <= max).then_some(IntRange { min, max })
}

/// True iff `n` lies in [`jump_bounds`]. `n` may be negative (algebraic count).
pub fn check_bounds(
    n: impl Into<BigInt>,
    b_plus: u64,
    b_minus: u64,
    c1f: impl Into<BigInt>,
    case: BoundsCase,
) -> bool {
    jump_bounds(b_plus, b_minus, c1f, case).contains(&q(n.into()))
}

/// [`check_bounds`] for the geometric reading of `n` as a cardinality.
pub fn check_bounds_nonnegative(
    n: impl Into<BigInt>,
    b_plus: u64,
    b_minus: u64,
    c1f: impl Into<BigInt>,
    case: BoundsCase,
) -> bool {
    let n = n.into();
    !n.is_negative() && check_bounds(n, b_plus, b_minus, c1f, case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(lo: (i64, i64), hi: (i64, i64)) -> RationalInterval {
        RationalInterval::new(frac(lo.0, lo.1), frac(hi.0, hi.1))
    }

    #[test]
    fn jump_bound_examples() {
        assert_eq!(
            jump_bounds(1, 0, 3, BoundsCase::Positive),
            iv((0, 1), (0, 1))
        );
        assert_eq!(
            jump_bounds(1, 9, 0, BoundsCase::Positive),
            iv((-3, 1), (-3, 1))
        );
        assert_eq!(
            jump_bounds(3, 19, 0, BoundsCase::Negative),
            iv((-79, 1), (-1, 9))
        );
    }

    #[test]
    fn empty_intervals_are_values() {
        // b+ = 0, b- = 0 positive case: lo = (26/9)/2 > hi = -3
        let i = jump_bounds(0, 0, 0, BoundsCase::Positive);
        assert!(i.empty);
        assert!(!i.contains(&q(0)));
        assert_eq!(integer_feasible(&i, false), None);
    }

    #[test]
    fn feasibility_examples() {
        let r = integer_feasible(&iv((0, 1), (0, 1)), false).unwrap();
        assert_eq!((r.min, r.max), (BigInt::from(0), BigInt::from(0)));
        assert_eq!(integer_feasible(&iv((-79, 1), (-1, 9)), true), None);
        let r = integer_feasible(&iv((-79, 1), (-1, 9)), false).unwrap();
        assert_eq!((r.min, r.max), (BigInt::from(-79), BigInt::from(-1)));
        let r = integer_feasible(&iv((1, 2), (7, 3)), false).unwrap();
        assert_eq!((r.min, r.max), (BigInt::from(1), BigInt::from(2)));
        assert_eq!(integer_feasible(&iv((1, 3), (2, 3)), false), None);
    }

    #[test]
    fn check_examples() {
        assert!(check_bounds(0, 1, 0, 3, BoundsCase::Positive));
        assert!(!check_bounds(1, 1, 0, 3, BoundsCase::Positive));
        assert!(check_bounds(-3, 1, 9, 0, BoundsCase::Positive));
        assert!(!check_bounds_nonnegative(-3, 1, 9, 0, BoundsCase::Positive));
    }

    #[test]
    fn selfint_examples() {
        assert_eq!(
            char_sphere_selfint_bounds(1, 0, BoundsCase::Positive),
            iv((1, 1), (1, 1))
        );
        assert_eq!(
            char_sphere_selfint_bounds(1, 9, BoundsCase::Positive),
            iv((-8, 1), (-8, 1))
        );
        assert_eq!(
            char_sphere_selfint_bounds(3, 19, BoundsCase::Negative),
            iv((-160, 1), (-20, 9))
        );
    }

    #[test]
    fn case_parsing() {
        assert_eq!(
            "positive".parse::<BoundsCase>().unwrap(),
            BoundsCase::Positive
        );
        assert!("zero".parse::<BoundsCase>().is_err());
    }

    proptest! {
        #[test]
        fn composed_bounds_do_not_depend_on_c1(bp in 0u64..200, bm in 0u64..200, c1f in -500i64..500) {
            for case in [BoundsCase::Negative, BoundsCase::Positive] {
                let image = selfint_image(&jump_bounds(bp, bm, c1f, case), c1f);
                prop_assert_eq!(image, char_sphere_selfint_bounds(bp, bm, case));
            }
        }

        #[test]
        fn shifting_c1_by_two_shifts_endpoints_by_one(bp in 0u64..200, bm in 0u64..200, c1f in -500i64..500) {
            for case in [BoundsCase::Negative, BoundsCase::Positive] {
                let a = jump_bounds(bp, bm, c1f, case);
                let b = jump_bounds(bp, bm, c1f + 2, case);
                prop_assert_eq!(&b.lo, &(&a.lo - q(1)));
                prop_assert_eq!(&b.hi, &(&a.hi - q(1)));
            }
        }

        #[test]
        fn endpoint_slopes_in_b_plus_and_b_minus(bp in 0u64..200, bm in 0u64..200, c1f in -500i64..500) {
            let neg = (jump_bounds(bp, bm, c1f, BoundsCase::Negative), jump_bounds(bp + 1, bm, c1f, BoundsCase::Negative), jump_bounds(bp, bm + 1, c1f, BoundsCase::Negative));
            prop_assert_eq!(&neg.1.lo - &neg.0.lo, frac(1, 2));
            prop_assert_eq!(&neg.1.hi - &neg.0.hi, frac(1, 2));
            prop_assert_eq!(&neg.2.lo - &neg.0.lo, frac(-9, 2));
            prop_assert_eq!(&neg.2.hi - &neg.0.hi, frac(-1, 18));
            let pos = (jump_bounds(bp, bm, c1f, BoundsCase::Positive), jump_bounds(bp + 1, bm, c1f, BoundsCase::Positive), jump_bounds(bp, bm + 1, c1f, BoundsCase::Positive));
            prop_assert_eq!(&pos.1.lo - &pos.0.lo, frac(1, 18));
            prop_assert_eq!(&pos.1.hi - &pos.0.hi, frac(9, 2));
            prop_assert_eq!(&pos.2.lo - &pos.0.lo, frac(-1, 2));
            prop_assert_eq!(&pos.2.hi - &pos.0.hi, frac(-1, 2));
        }
    }
}
