//! Kernels on attributes.

use std::fmt;
use std::str::FromStr;

use super::MatchError;
use crate::graph::Attribute;

/// A symmetric, non-negative kernel on attribute values. Whenever
/// either argument is the null marker the value is 0, for every
/// variant; this is what makes non-edges contribute nothing to kernel
/// sums and graph lengths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AttributeKernel {
    /// Inner product of the attribute vectors.
    Dot,
    /// exp(-|a - b|^2 / (2 sigma^2)); sigma must be positive.
    Rbf { sigma: f64 },
    /// 1 when the attribute vectors are identical, else 0.
    Discrete,
}

impl AttributeKernel {
    pub fn rbf(sigma: f64) -> Result<Self, MatchError> {
        if sigma.is_finite() && sigma > 0.0 {
            Ok(AttributeKernel::Rbf { sigma })
        } else {
            Err(MatchError::InvalidSigma(sigma))
        }
    }

    pub fn eval(&self, a: &Attribute, b: &Attribute) -> Result<f64, MatchError> {
        kernel_eval(self, a, b)
    }
}

impl fmt::Display for AttributeKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttributeKernel::Dot => f.write_str("dot"),
            AttributeKernel::Rbf { sigma } => write!(f, "rbf(sigma={sigma})"),
            AttributeKernel::Discrete => f.write_str("discrete"),
        }
    }
}

/// Parses the bare kernel names; rbf gets sigma 1 (callers that expose
/// a sigma flag should construct [`AttributeKernel::rbf`] directly).
impl FromStr for AttributeKernel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dot" => Ok(AttributeKernel::Dot),
            "rbf" => Ok(AttributeKernel::Rbf { sigma: 1.0 }),
            "discrete" => Ok(AttributeKernel::Discrete),
            _ => Err(format!("unknown kernel `{s}` (expected dot|rbf|discrete)")),
        }
    }
}

/// Evaluate the kernel on two attributes. Null short-circuits to 0;
/// dot and rbf require equal dimensions.
pub fn kernel_eval(k: &AttributeKernel, a: &Attribute, b: &Attribute) -> Result<f64, MatchError> {
    let (va, vb) = match (a, b) {
        (Attribute::Null, _) | (_, Attribute::Null) => return Ok(0.0),
        (Attribute::Value(va), Attribute::Value(vb)) => (va, vb),
    };
    match k {
        AttributeKernel::Dot => {
            if va.len() != vb.len() {
                return Err(MatchError::DimensionMismatch {
                    left: va.len(),
                    right: vb.len(),
                });
            }
            Ok(va.iter().zip(vb).map(|(x, y)| x * y).sum())
        }
        AttributeKernel::Rbf { sigma } => {
            if !(sigma.is_finite() && *sigma > 0.0) {
                return Err(MatchError::InvalidSigma(*sigma));
            }
            if va.len() != vb.len() {
                return Err(MatchError::DimensionMismatch {
                    left: va.len(),
                    right: vb.len(),
                });
            }
            let d2: f64 = va.iter().zip(vb).map(|(x, y)| (x - y) * (x - y)).sum();
            Ok((-d2 / (2.0 * sigma * sigma)).exp())
        }
        AttributeKernel::Discrete => Ok(if va == vb { 1.0 } else { 0.0 }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_scalar() {
        let k = AttributeKernel::Dot;
        assert_eq!(
            k.eval(&Attribute::scalar(2.0), &Attribute::scalar(3.0))
                .unwrap(),
            6.0
        );
    }

    #[test]
    fn null_short_circuits_every_variant() {
        for k in [
            AttributeKernel::Dot,
            AttributeKernel::Rbf { sigma: 1.0 },
            AttributeKernel::Discrete,
        ] {
            assert_eq!(
                k.eval(&Attribute::Null, &Attribute::scalar(5.0)).unwrap(),
                0.0
            );
            assert_eq!(
                k.eval(&Attribute::scalar(5.0), &Attribute::Null).unwrap(),
                0.0
            );
            assert_eq!(k.eval(&Attribute::Null, &Attribute::Null).unwrap(), 0.0);
        }
    }

    #[test]
    fn rbf_at_zero_distance() {
        let k = AttributeKernel::rbf(1.0).unwrap();
        let a = Attribute::Value(vec![0.5, -1.0]);
        assert_eq!(k.eval(&a, &a).unwrap(), 1.0);
        assert!(AttributeKernel::rbf(0.0).is_err());
        assert!(AttributeKernel::rbf(-2.0).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let a = Attribute::Value(vec![1.0]);
        let b = Attribute::Value(vec![1.0, 2.0]);
        assert!(matches!(
            AttributeKernel::Dot.eval(&a, &b),
            Err(MatchError::DimensionMismatch { left: 1, right: 2 })
        ));
        // discrete tolerates it: unequal vectors are just unequal
        assert_eq!(AttributeKernel::Discrete.eval(&a, &b).unwrap(), 0.0);
    }

    #[test]
    fn symmetry() {
        let a = Attribute::Value(vec![1.0, 2.0]);
        let b = Attribute::Value(vec![-0.5, 4.0]);
        for k in [
            AttributeKernel::Dot,
            AttributeKernel::Rbf { sigma: 2.0 },
            AttributeKernel::Discrete,
        ] {
            assert_eq!(k.eval(&a, &b).unwrap(), k.eval(&b, &a).unwrap());
        }
    }
}
