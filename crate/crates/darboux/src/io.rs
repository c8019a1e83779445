//! JSON descriptions of derivations and diagonal automorphisms.
//!
//! A derivation file gives the variable names plus exactly one of two image
//! encodings: `images` (one polynomial string per variable) or `beta` (an
//! exponent matrix; row i encodes the monomial image of variable i with
//! coefficient 1). `from_derivation` always emits the `images` form so that
//! certificates embed a single canonical encoding.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::context::VarContext;
use crate::cyclotomic::Cyc8;
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::parser::{parse_poly, parse_scalar};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivationSpec {
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<u16>>>,
}

impl DerivationSpec {
    /// Builds the derivation over coefficient field `F`.
    pub fn to_derivation<F: Field>(&self) -> Result<Derivation<F>> {
        let ctx = VarContext::new(self.vars.iter().map(String::as_str))?;
        let images = match (&self.images, &self.beta) {
            (Some(_), Some(_)) => {
                return Err(Error::BadSpec(
                    "give either `images` or `beta`, not both".into(),
                ))
            }
            (None, None) => {
                return Err(Error::BadSpec("give one of `images` or `beta`".into()))
            }
            (Some(texts), None) => {
                if texts.len() != ctx.arity() {
                    return Err(Error::ArityMismatch {
                        expected: ctx.arity(),
                        found: texts.len(),
                    });
                }
                texts
                    .iter()
                    .map(|t| parse_poly::<F>(t, &ctx))
                    .collect::<Result<Vec<_>>>()?
            }
            (None, Some(rows)) => {
                if rows.len() != ctx.arity() {
                    return Err(Error::ArityMismatch {
                        expected: ctx.arity(),
                        found: rows.len(),
                    });
                }
                rows.iter()
                    .map(|row| {
                        if row.len() != ctx.arity() {
                            return Err(Error::ArityMismatch {
                                expected: ctx.arity(),
                                found: row.len(),
                            });
                        }
                        Ok(Poly::from_term(
                            &ctx,
                            Monomial::from_exponents(row.clone()),
                            F::one(),
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Derivation::new(&ctx, images)
    }

    /// Canonical spec for an existing derivation, in the `images` form.
    pub fn from_derivation<F: Field>(d: &Derivation<F>) -> Self {
        DerivationSpec {
            vars: d.context().names().to_vec(),
            images: Some(d.images().iter().map(|p| p.to_string()).collect()),
            beta: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismSpec {
    /// One scalar per variable, e.g. `"z8^3"` or `"-1"`.
    pub scalars: Vec<String>,
}

impl AutomorphismSpec {
    pub fn to_scalars(&self) -> Result<Vec<Cyc8>> {
        self.scalars.iter().map(|s| parse_scalar::<Cyc8>(s)).collect()
    }
}

pub fn read_derivation_spec(path: &Path) -> Result<DerivationSpec> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn read_automorphism_spec(path: &Path) -> Result<AutomorphismSpec> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn cyclic_spec() -> DerivationSpec {
        DerivationSpec {
            vars: vec!["x".into(), "y".into(), "z".into(), "t".into()],
            images: Some(vec!["t^2".into(), "z*t".into(), "y^2".into(), "x*y".into()]),
            beta: None,
        }
    }

    #[test]
    fn images_form_round_trips() {
        let d: Derivation<Rational> = cyclic_spec().to_derivation().unwrap();
        assert_eq!(d.images()[0].to_string(), "t^2");
        assert_eq!(d.images()[1].to_string(), "z*t");
        let back = DerivationSpec::from_derivation(&d);
        assert_eq!(back.to_derivation::<Rational>().unwrap(), d);
        assert!(back.beta.is_none());
    }

    #[test]
    fn beta_form_matches_images_form() {
        let spec = DerivationSpec {
            vars: vec!["x".into(), "y".into(), "z".into(), "t".into()],
            images: None,
            beta: Some(vec![
                vec![0, 0, 0, 2],
                vec![0, 0, 1, 1],
                vec![0, 2, 0, 0],
                vec![1, 1, 0, 0],
            ]),
        };
        let from_beta: Derivation<Rational> = spec.to_derivation().unwrap();
        let from_images: Derivation<Rational> = cyclic_spec().to_derivation().unwrap();
        assert_eq!(from_beta, from_images);
    }

    #[test]
    fn both_or_neither_encoding_is_rejected() {
        let mut both = cyclic_spec();
        both.beta = Some(vec![vec![0, 0, 0, 2]; 4]);
        assert!(matches!(
            both.to_derivation::<Rational>(),
            Err(Error::BadSpec(_))
        ));
        let mut neither = cyclic_spec();
        neither.images = None;
        assert!(matches!(
            neither.to_derivation::<Rational>(),
            Err(Error::BadSpec(_))
        ));
    }

    #[test]
    fn arity_mismatches_are_rejected() {
        let mut short = cyclic_spec();
        short.images = Some(vec!["t^2".into()]);
        assert!(matches!(
            short.to_derivation::<Rational>(),
            Err(Error::ArityMismatch { expected: 4, found: 1 })
        ));
        let ragged = DerivationSpec {
            vars: vec!["x".into(), "y".into()],
            images: None,
            beta: Some(vec![vec![0, 1], vec![1]]),
        };
        assert!(matches!(
            ragged.to_derivation::<Rational>(),
            Err(Error::ArityMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"vars": ["x"], "images": ["x"], "order": 8}"#;
        assert!(serde_json::from_str::<DerivationSpec>(text).is_err());
    }

    #[test]
    fn automorphism_scalars_parse() {
        let spec = AutomorphismSpec {
            scalars: vec!["z8^3".into(), "-1".into(), "z8".into(), "1/2".into()],
        };
        let scalars = spec.to_scalars().unwrap();
        assert_eq!(scalars[0], Cyc8::zeta_pow(3));
        assert_eq!(scalars[1], Cyc8::zeta_pow(4));
        assert_eq!(scalars[2], Cyc8::zeta_pow(1));
    }
}
