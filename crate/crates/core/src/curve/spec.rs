//! Curve specification files: a JSON-compatible structured-text format.
//!
//! Three kinds:
//! `{"kind":"monomial","generators":[4,5,6]}`
//! `{"kind":"explicit","differentials":[[["1"],["1"]],...],
//!   "singular_points":["inf","1"],"base_point":"0"}`
//! `{"kind":"parametrized","components":[[["0","1"],["1"]],...]}`
//!
//! A differential or component is a pair [numerator, denominator], each a
//! list of exact-rational coefficient strings in ascending degree.

use serde::{Deserialize, Serialize};

use crate::algebra::{Rat, RationalFunction, UniPoly};
use crate::error::Error;
use crate::semigroup::NumericalSemigroup;
use crate::Result;

use super::{CurveKind, ParamPoint};

/// A curve as specified by the user.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveSpec {
    pub kind: CurveKind,
    pub singular_points: Vec<ParamPoint>,
    pub base_point: Rat,
}

#[derive(Serialize, Deserialize)]
struct CurveFile {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    differentials: Option<Vec<[Vec<String>; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<Vec<[Vec<String>; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    singular_points: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    base_point: Option<String>,
}

fn parse_poly(coeffs: &[String]) -> Result<UniPoly> {
    let cs: Result<Vec<Rat>> = coeffs.iter().map(|s| s.parse()).collect();
    Ok(UniPoly::new(cs?))
}

fn parse_fraction(pair: &[Vec<String>; 2]) -> Result<RationalFunction> {
    let num = parse_poly(&pair[0])?;
    let den = parse_poly(&pair[1])?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator polynomial".into()));
    }
    RationalFunction::new(num, den)
}

fn emit_poly(p: &UniPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn emit_fraction(f: &RationalFunction) -> [Vec<String>; 2] {
    [emit_poly(f.num()), emit_poly(f.den())]
}

impl CurveSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CurveFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let singular_points = file
            .singular_points
            .as_deref()
            .unwrap_or(&[])
            .iter()
            .map(|s| ParamPoint::parse(s))
            .collect::<Result<Vec<_>>>()?;
        let base_point: Rat = file.base_point.as_deref().unwrap_or("0").parse()?;
        let kind = match file.kind.as_str() {
            "monomial" => {
                let gens = file
                    .generators
                    .ok_or_else(|| Error::Parse("monomial curve needs `generators`".into()))?;
                CurveKind::Monomial(NumericalSemigroup::from_generators(&gens)?)
            }
            "explicit" => {
                let diffs = file
                    .differentials
                    .ok_or_else(|| Error::Parse("explicit curve needs `differentials`".into()))?;
                if diffs.is_empty() {
                    return Err(Error::Parse("empty differential list".into()));
                }
                CurveKind::Explicit {
                    differentials: diffs
                        .iter()
                        .map(parse_fraction)
                        .collect::<Result<Vec<_>>>()?,
                }
            }
            "parametrized" => {
                let comps = file
                    .components
                    .ok_or_else(|| Error::Parse("parametrized curve needs `components`".into()))?;
                if comps.len() < 2 {
                    return Err(Error::Parse("need at least two components".into()));
                }
                CurveKind::Parametrized {
                    components: comps
                        .iter()
                        .map(parse_fraction)
                        .collect::<Result<Vec<_>>>()?,
                }
            }
            other => return Err(Error::Parse(format!("unknown curve kind `{other}`"))),
        };
        Ok(CurveSpec {
            kind,
            singular_points,
            base_point,
        })
    }

    pub fn to_json(&self) -> String {
        let mut file = CurveFile {
            kind: String::new(),
            generators: None,
            differentials: None,
            components: None,
            singular_points: if self.singular_points.is_empty() {
                None
            } else {
                Some(self.singular_points.iter().map(|p| p.to_string()).collect())
            },
            base_point: Some(self.base_point.to_string()),
        };
        match &self.kind {
            CurveKind::Monomial(s) => {
                file.kind = "monomial".into();
                file.generators = Some(s.generators().to_vec());
            }
            CurveKind::Explicit { differentials } => {
                file.kind = "explicit".into();
                file.differentials = Some(differentials.iter().map(emit_fraction).collect());
            }
            CurveKind::Parametrized { components } => {
                file.kind = "parametrized".into();
                file.components = Some(components.iter().map(emit_fraction).collect());
            }
        }
        serde_json::to_string_pretty(&file).expect("curve serialization")
    }

    /// Shift coordinates so the base point sits at u = 0.
    pub fn normalized_base(&self) -> Result<CurveSpec> {
        for p in &self.singular_points {
            if let ParamPoint::Finite(a) = p {
                if *a == self.base_point {
                    return Err(Error::BasePointCollision(a.to_string()));
                }
            }
        }
        if self.base_point.is_zero() {
            return Ok(self.clone());
        }
        let b = self.base_point.clone();
        let shift = RationalFunction::from_poly(UniPoly::new(vec![b.clone(), Rat::one()]));
        let shift_points = |pts: &[ParamPoint]| -> Vec<ParamPoint> {
            pts.iter()
                .map(|p| match p {
                    ParamPoint::Finite(a) => ParamPoint::Finite(a - &b),
                    ParamPoint::Infinity => ParamPoint::Infinity,
                })
                .collect()
        };
        let kind = match &self.kind {
            CurveKind::Monomial(s) => CurveKind::Monomial(s.clone()),
            CurveKind::Explicit { differentials } => CurveKind::Explicit {
                differentials: differentials.iter().map(|f| f.compose(&shift)).collect(),
            },
            CurveKind::Parametrized { components } => CurveKind::Parametrized {
                components: components.iter().map(|f| f.compose(&shift)).collect(),
            },
        };
        Ok(CurveSpec {
            kind,
            singular_points: shift_points(&self.singular_points),
            base_point: Rat::zero(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_monomial() {
        let spec = CurveSpec::from_json(r#"{"kind":"monomial","generators":[4,5,6]}"#).unwrap();
        match &spec.kind {
            CurveKind::Monomial(s) => assert_eq!(s.generators(), &[4, 5, 6]),
            _ => panic!("wrong kind"),
        }
        assert!(spec.base_point.is_zero());
    }

    #[test]
    fn parse_explicit_and_roundtrip() {
        let text = r#"{
            "kind": "explicit",
            "differentials": [
                [["1"], ["1"]],
                [["0", "1"], ["1"]],
                [["0","0","0","0","1"], ["1"]],
                [["1"], ["1", "-2", "1"]]
            ],
            "singular_points": ["inf", "1"],
            "base_point": "0"
        }"#;
        let spec = CurveSpec::from_json(text).unwrap();
        assert_eq!(spec.singular_points.len(), 2);
        let again = CurveSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(spec, again);
    }

    #[test]
    fn rejects_malformed() {
        assert!(CurveSpec::from_json("{").is_err());
        assert!(CurveSpec::from_json(r#"{"kind":"nope"}"#).is_err());
        assert!(CurveSpec::from_json(r#"{"kind":"monomial"}"#).is_err());
        assert!(
            CurveSpec::from_json(r#"{"kind":"monomial","generators":[4,6]}"#).is_err(),
            "gcd 2 is not a numerical semigroup"
        );
    }

    #[test]
    fn base_normalization_shifts_poles() {
        let text = r#"{
            "kind": "explicit",
            "differentials": [[["1"], ["1", "-2", "1"]]],
            "singular_points": ["1"],
            "base_point": "3"
        }"#;
        let spec = CurveSpec::from_json(text).unwrap();
        let norm = spec.normalized_base().unwrap();
        assert!(norm.base_point.is_zero());
        assert_eq!(
            norm.singular_points,
            vec![ParamPoint::Finite(Rat::from_int(-2))]
        );
        match &norm.kind {
            CurveKind::Explicit { differentials } => {
                // 1/(1-u)^2 shifted by u+3: 1/((1-(u+3))^2) = 1/(u+2)^2
                let f = &differentials[0];
                assert_eq!(f.order_at(&Rat::from_int(-2)), Some(-2));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn base_collision_rejected() {
        let text = r#"{
            "kind": "explicit",
            "differentials": [[["1"], ["1", "-2", "1"]]],
            "singular_points": ["0"],
            "base_point": "0"
        }"#;
        let spec = CurveSpec::from_json(text).unwrap();
        assert!(matches!(
            spec.normalized_base().unwrap_err(),
            Error::BasePointCollision(_)
        ));
    }
}
