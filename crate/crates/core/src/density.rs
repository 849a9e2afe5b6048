//! Emission densities on [0,1].

use std::fmt;
use std::sync::Arc;

use serde::de::Error as DeError;
use serde::ser::Error as SerError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use statrs::function::beta::ln_beta;

use crate::basis::BasisFamily;
use crate::quad::Quadrature;

/// A probability density on [0,1].
///
/// `Beta` and `Expansion` integrate to one by construction (an expansion
/// does so when its coefficients satisfy the basis integral constraint);
/// `Custom` wraps an arbitrary evaluator and is trusted as given.
#[derive(Clone)]
pub enum Density {
    Beta {
        alpha: f64,
        beta: f64,
    },
    Expansion {
        basis: BasisFamily,
        coeffs: Vec<f64>,
    },
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl Density {
    pub fn uniform() -> Self {
        Density::Beta {
            alpha: 1.0,
            beta: 1.0,
        }
    }

    pub fn eval(&self, y: f64) -> f64 {
        match self {
            Density::Beta { alpha, beta } => beta_pdf(*alpha, *beta, y),
            Density::Expansion { basis, coeffs } => {
                let mut phi = vec![0.0; coeffs.len()];
                basis.eval_all(y, &mut phi);
                phi.iter().zip(coeffs).map(|(p, c)| p * c).sum()
            }
            Density::Custom(f) => f(y),
        }
    }

    /// Integral over [0,1], by the default quadrature (exact coefficient sum
    /// for expansions, whose basis functions may be discontinuous).
    pub fn integral(&self) -> f64 {
        match self {
            Density::Expansion { basis, coeffs } => {
                let c = basis.integral_coeffs();
                coeffs.iter().zip(c.iter()).map(|(a, ci)| a * ci).sum()
            }
            _ => Quadrature::unit().integrate(|y| self.eval(y)),
        }
    }
}

fn beta_pdf(alpha: f64, beta: f64, y: f64) -> f64 {
    if !(0.0..=1.0).contains(&y) {
        return 0.0;
    }
    // Endpoints by limits, skipping 0*ln(0) = NaN when an exponent is zero.
    let mut ln = -ln_beta(alpha, beta);
    if alpha != 1.0 {
        ln += (alpha - 1.0) * y.ln();
    }
    if beta != 1.0 {
        ln += (beta - 1.0) * (1.0 - y).ln();
    }
    ln.exp()
}

impl fmt::Debug for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Density::Beta { alpha, beta } => write!(f, "Beta({alpha}, {beta})"),
            Density::Expansion { basis, coeffs } => {
                write!(f, "Expansion({basis:?}, {} coeffs)", coeffs.len())
            }
            Density::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

/// Serialized form: `{"beta": [a, b]}` or `{"expansion": {...}}`.
#[derive(Serialize, Deserialize)]
enum DensityRepr {
    #[serde(rename = "beta")]
    Beta([f64; 2]),
    #[serde(rename = "expansion")]
    Expansion {
        basis: BasisFamily,
        coeffs: Vec<f64>,
    },
}

impl Serialize for Density {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            Density::Beta { alpha, beta } => DensityRepr::Beta([*alpha, *beta]),
            Density::Expansion { basis, coeffs } => DensityRepr::Expansion {
                basis: *basis,
                coeffs: coeffs.clone(),
            },
            Density::Custom(_) => {
                return Err(S::Error::custom("custom densities are not serializable"))
            }
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Density {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match DensityRepr::deserialize(d)? {
            DensityRepr::Beta([alpha, beta]) => {
                if !(alpha > 0.0 && beta > 0.0) {
                    return Err(D::Error::custom("beta parameters must be positive"));
                }
                Density::Beta { alpha, beta }
            }
            DensityRepr::Expansion { basis, coeffs } => Density::Expansion { basis, coeffs },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_integrates_to_one() {
        for (a, b) in [(2.0, 5.0), (4.0, 2.0), (1.5, 5.0), (6.0, 6.0), (7.0, 2.0)] {
            let d = Density::Beta { alpha: a, beta: b };
            // Fractional exponents give the pdf an unbounded derivative at an
            // endpoint, which caps the quadrature accuracy near 1e-9.
            assert!((d.integral() - 1.0).abs() < 1e-8, "Beta({a},{b})");
        }
    }

    #[test]
    fn uniform_is_flat() {
        let d = Density::uniform();
        assert!((d.eval(0.3) - 1.0).abs() < 1e-12);
        assert!((d.eval(0.9) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn beta_json_round_trip() {
        let d = Density::Beta {
            alpha: 2.0,
            beta: 5.0,
        };
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"beta":[2.0,5.0]}"#);
        let back: Density = serde_json::from_str(&s).unwrap();
        assert!(matches!(back, Density::Beta { alpha, beta } if alpha == 2.0 && beta == 5.0));
    }
}
