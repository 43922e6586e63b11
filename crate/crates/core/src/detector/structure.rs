use std::fmt;
use std::sync::Arc;

use nalgebra::{Matrix4, Vector4};

use crate::error::{Error, Result};

pub const STANDARD_TOLERANCE: f64 = 1e-12;
pub const USER_TOLERANCE: f64 = 1e-8;

type JField = Arc<dyn Fn(&Vector4<f64>) -> Matrix4<f64> + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Standard,
    Constant(Matrix4<f64>),
    Field(JField),
}

/// A field of complex structures `J(p)` on R^4, checked for `J^2 = -I` on evaluation.
#[derive(Clone)]
pub struct AlmostComplexStructure {
    kind: Kind,
}

impl fmt::Debug for AlmostComplexStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Standard => f.write_str("AlmostComplexStructure::Standard"),
            Kind::Constant(m) => write!(f, "AlmostComplexStructure::Constant({m:?})"),
            Kind::Field(_) => f.write_str("AlmostComplexStructure::Field(..)"),
        }
    }
}

/// Multiplication by `i` in the coordinates `(x1, y1, x2, y2)` with `z_k = x_k + i y_k`.
pub fn standard_j() -> Matrix4<f64> {
    Matrix4::new(
        0.0, -1.0, 0.0, 0.0, //
        1.0, 0.0, 0.0, 0.0, //
        0.0, 0.0, 0.0, -1.0, //
        0.0, 0.0, 1.0, 0.0,
    )
}

fn square_residual(j: &Matrix4<f64>) -> f64 {
    (j * j + Matrix4::identity()).amax()
}

impl AlmostComplexStructure {
    pub fn standard() -> Self {
        AlmostComplexStructure {
            kind: Kind::Standard,
        }
    }

    pub fn constant(j: Matrix4<f64>) -> Result<Self> {
        let residual = square_residual(&j);
        if !(residual <= USER_TOLERANCE) {
            return Err(Error::InvalidStructure { residual });
        }
        Ok(AlmostComplexStructure {
            kind: Kind::Constant(j),
        })
    }

    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(&Vector4<f64>) -> Matrix4<f64> + Send + Sync + 'static,
    {
        AlmostComplexStructure {
            kind: Kind::Field(Arc::new(f)),
        }
    }

    pub fn is_standard(&self) -> bool {
        matches!(self.kind, Kind::Standard)
    }

    pub fn at(&self, p: &Vector4<f64>) -> Result<Matrix4<f64>> {
        let (j, tol) = match &self.kind {
            Kind::Standard => return Ok(standard_j()),
            Kind::Constant(m) => return Ok(*m),
            Kind::Field(f) => (f(p), USER_TOLERANCE),
        };
        let residual = square_residual(&j);
        if !(residual <= tol) {
            return Err(Error::InvalidStructure { residual });
        }
        Ok(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_squares_to_minus_identity() {
        assert!(square_residual(&standard_j()) <= STANDARD_TOLERANCE);
    }

    #[test]
    fn rejects_non_complex_structures() {
        assert!(AlmostComplexStructure::constant(Matrix4::identity()).is_err());
        let bad = AlmostComplexStructure::from_fn(|_| Matrix4::zeros());
        assert!(matches!(
            bad.at(&Vector4::zeros()),
            Err(Error::InvalidStructure { .. })
        ));
    }

    #[test]
    fn conjugated_structure_is_accepted() {
        let a = Matrix4::new(
            1.0, 0.5, 0.0, 0.0, 0.0, 1.0, 0.0, 0.2, 0.0, 0.0, 2.0, 0.0, 0.3, 0.0, 0.0, 1.0,
        );
        let j = a * standard_j() * a.try_inverse().unwrap();
        assert!(AlmostComplexStructure::constant(j).is_ok());
    }
}
