//! The JSON arrangement format.
//!
//! ```json
//! { "dim": 2,
//!   "hyperplanes": [ { "coeffs": ["1", "-1/2"], "constant": "0", "mult": 3 } ],
//!   "scalings": ["1"] }
//! ```
//!
//! Rationals are strings so they stay exact; plain JSON integers are also
//! accepted. `constant` defaults to zero, `mult` to one. The optional
//! `scalings` give one positive-system scaling per hyperplane.

use std::io::Read;
use std::path::Path;

use multiarr_core::exact::{format_rational, parse_rational, rat};
use multiarr_core::{Arrangement, Hyperplane, Multiarrangement, Rational};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::builtins;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0:?} is neither a readable file nor a builtin arrangement")]
    NotFound(String),
    #[error("malformed arrangement JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid arrangement: {0}")]
    Invalid(#[from] multiarr_core::Error),
    #[error("{0}")]
    Shape(String),
}

/// An exact rational that serializes as a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Exact(rat(n))),
            Raw::Text(s) => parse_rational(&s)
                .map(Exact)
                .ok_or_else(|| D::Error::custom(format!("not a rational number: {s:?}"))),
        }
    }
}

fn zero() -> Exact {
    Exact(rat(0))
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneDoc {
    pub coeffs: Vec<Exact>,
    #[serde(default = "zero")]
    pub constant: Exact,
    #[serde(default = "one")]
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDoc {
    pub dim: usize,
    pub hyperplanes: Vec<HyperplaneDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalings: Option<Vec<Exact>>,
}

/// A validated document.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub arrangement: Arrangement,
    pub mult: Vec<u32>,
    pub scalings: Option<Vec<Rational>>,
}

impl Loaded {
    pub fn multiarrangement(&self) -> Result<Multiarrangement, InputError> {
        Ok(Multiarrangement::new(self.arrangement.clone(), self.mult.clone())?)
    }
}

impl ArrangementDoc {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("arrangement documents always serialize")
    }

    pub fn from_arrangement(a: &Arrangement) -> Self {
        Self::with_mult(a, &vec![1; a.len()])
    }

    pub fn from_multi(m: &Multiarrangement) -> Self {
        Self::with_mult(m.base(), m.mult())
    }

    pub(crate) fn with_mult(a: &Arrangement, mult: &[u32]) -> Self {
        let hyperplanes = a
            .hyperplanes()
            .iter()
            .zip(mult)
            .map(|(h, &mult)| HyperplaneDoc {
                coeffs: h.normal().iter().cloned().map(Exact).collect(),
                constant: Exact(h.constant().clone()),
                mult,
            })
            .collect();
        ArrangementDoc { dim: a.dim(), hyperplanes, scalings: None }
    }

    pub fn load(&self) -> Result<Loaded, InputError> {
        let hyperplanes = self
            .hyperplanes
            .iter()
            .map(|h| Hyperplane::new(h.coeffs.iter().map(|c| c.0.clone()).collect(), h.constant.0.clone()))
            .collect();
        let arrangement = Arrangement::new(self.dim, hyperplanes)?;
        let scalings = match &self.scalings {
            None => None,
            Some(s) if s.len() != arrangement.len() => {
                return Err(InputError::Shape(format!(
                    "{} scalings given for {} hyperplanes",
                    s.len(),
                    arrangement.len()
                )))
            }
            Some(s) => Some(s.iter().map(|c| c.0.clone()).collect()),
        };
        Ok(Loaded { arrangement, mult: self.hyperplanes.iter().map(|h| h.mult).collect(), scalings })
    }
}

/// Resolves an input argument: `-` reads stdin, an existing path is read as
/// a file, and anything else is looked up among the builtins.
pub fn read_input(arg: &str) -> Result<ArrangementDoc, InputError> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| InputError::Io { path: "<stdin>".into(), source })?;
        return ArrangementDoc::from_json(&text);
    }
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|source| InputError::Io { path: arg.into(), source })?;
        return ArrangementDoc::from_json(&text);
    }
    builtins::builtin(arg).ok_or_else(|| InputError::NotFound(arg.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_integer_literals() {
        let doc = ArrangementDoc::from_json(r#"{"dim":2,"hyperplanes":[{"coeffs":[1,"−1/2"]},{"coeffs":["0","1"],"mult":3}]}"#)
            .unwrap();
        let loaded = doc.load().unwrap();
        assert_eq!(loaded.mult, [1, 3]);
        assert!(loaded.arrangement.is_central());
        assert_eq!(format_rational(&loaded.arrangement.hyperplane(0).normal()[1]), "-1/2");
    }

    #[test]
    fn round_trip() {
        let doc = builtins::builtin("rank2-free-45").unwrap();
        let back = ArrangementDoc::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, back);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ArrangementDoc::from_json("{\"dim\":2").is_err());
        assert!(ArrangementDoc::from_json(r#"{"dim":1,"hyperplanes":[{"coeffs":["1/0"]}]}"#).is_err());
        assert!(ArrangementDoc::from_json(r#"{"dim":1,"hyperplanes":[],"extra":1}"#).is_err());
        let dup = ArrangementDoc::from_json(r#"{"dim":1,"hyperplanes":[{"coeffs":["1"]},{"coeffs":["2"]}]}"#).unwrap();
        assert!(matches!(dup.load(), Err(InputError::Invalid(_))));
        let short = ArrangementDoc::from_json(r#"{"dim":1,"hyperplanes":[{"coeffs":["1"]}],"scalings":[]}"#).unwrap();
        assert!(matches!(short.load(), Err(InputError::Shape(_))));
    }
}
