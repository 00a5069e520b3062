//! JSON interchange. Coefficients travel as decimal strings (`"-3"`,
//! `"31/32"`) so nothing is lost to floating point.

use std::collections::BTreeMap;

use ratrec_core::{DiffPoly, HolonomicEq, Monomial, MultiPoly, RatRecEq, UniPoly, VarId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::parse_rationals;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Holonomic,
    Ratrec,
    Diffpoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    /// Variable name to exponent; empty for constants.
    pub monomial: BTreeMap<String, u16>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonEquation {
    pub kind: Kind,
    pub order: u32,
    pub degree: u32,
    pub variables: Vec<String>,
    /// Holonomic: `coefficients[i]` is the polynomial in `n` multiplying `s(n+i)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<Vec<JsonTerm>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inhomogeneous: Option<Vec<JsonTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub num: Option<Vec<JsonTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den: Option<Vec<JsonTerm>>,
    /// Difference polynomial body.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<JsonTerm>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Holonomic(HolonomicEq),
    RatRec(RatRecEq),
    Diff(DiffPoly),
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid equation record: {0}")]
    Schema(String),
}

fn var_name(v: VarId) -> String {
    v.to_string()
}

fn parse_var(name: &str) -> Result<VarId, JsonError> {
    if name == "n" {
        return Ok(VarId::N);
    }
    if name == "s(n)" {
        return Ok(VarId::Shift(0));
    }
    name.strip_prefix("s(n+")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|k| k.parse::<u32>().ok())
        .filter(|&k| k > 0)
        .map(VarId::Shift)
        .ok_or_else(|| JsonError::Schema(format!("unknown variable '{}'", name)))
}

fn encode(p: &MultiPoly) -> Vec<JsonTerm> {
    p.terms()
        .map(|(m, c)| JsonTerm {
            coeff: c.to_string(),
            monomial: m.pairs().map(|(v, e)| (var_name(v), e)).collect(),
        })
        .collect()
}

fn decode(terms: &[JsonTerm]) -> Result<MultiPoly, JsonError> {
    let mut out = MultiPoly::zero();
    for t in terms {
        let c = match parse_rationals(&t.coeff) {
            Ok(v) if v.len() == 1 => v.into_iter().next().unwrap(),
            _ => return Err(JsonError::Schema(format!("bad coefficient '{}'", t.coeff))),
        };
        let pairs = t
            .monomial
            .iter()
            .map(|(k, &e)| parse_var(k).map(|v| (v, e)))
            .collect::<Result<Vec<_>, _>>()?;
        out.add_term(Monomial::from_pairs(pairs), c);
    }
    Ok(out)
}

fn variables<'a>(polys: impl IntoIterator<Item = &'a MultiPoly>) -> Vec<String> {
    let mut vars: Vec<VarId> = polys.into_iter().flat_map(|p| p.variables()).collect();
    vars.sort();
    vars.dedup();
    vars.into_iter().rev().map(var_name).collect()
}

fn field<'a, T>(x: &'a Option<T>, name: &str) -> Result<&'a T, JsonError> {
    x.as_ref().ok_or_else(|| JsonError::Schema(format!("missing field '{}'", name)))
}

impl JsonEquation {
    pub fn from_holonomic(h: &HolonomicEq) -> Self {
        let coeffs: Vec<MultiPoly> = h.coeffs().iter().map(UniPoly::to_mpoly).collect();
        let inhom = h.inhom().map(UniPoly::to_mpoly);
        let body = h.to_diffpoly();
        JsonEquation {
            kind: Kind::Holonomic,
            order: h.order() as u32,
            degree: h.degree() as u32,
            variables: variables([body.body()]),
            coefficients: Some(coeffs.iter().map(encode).collect()),
            inhomogeneous: inhom.as_ref().map(encode),
            num: None,
            den: None,
            terms: None,
        }
    }

    pub fn from_ratrec(r: &RatRecEq) -> Self {
        JsonEquation {
            kind: Kind::Ratrec,
            order: r.order,
            degree: r.degree(),
            variables: variables([&r.num, &r.den, &MultiPoly::s(r.order)]),
            coefficients: None,
            inhomogeneous: None,
            num: Some(encode(&r.num)),
            den: Some(encode(&r.den)),
            terms: None,
        }
    }

    pub fn from_diffpoly(p: &DiffPoly) -> Self {
        JsonEquation {
            kind: Kind::Diffpoly,
            order: p.order(),
            degree: p.body().total_degree(),
            variables: variables([p.body()]),
            coefficients: None,
            inhomogeneous: None,
            num: None,
            den: None,
            terms: Some(encode(p.body())),
        }
    }

    pub fn decode(&self) -> Result<Decoded, JsonError> {
        match self.kind {
            Kind::Holonomic => {
                let coeffs = field(&self.coefficients, "coefficients")?
                    .iter()
                    .map(|c| {
                        let p = decode(c)?;
                        UniPoly::from_mpoly(&p).ok_or_else(|| JsonError::Schema("coefficient must be a polynomial in n".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let inhom = match &self.inhomogeneous {
                    Some(t) => Some(
                        UniPoly::from_mpoly(&decode(t)?)
                            .ok_or_else(|| JsonError::Schema("inhomogeneous part must be a polynomial in n".into()))?,
                    ),
                    None => None,
                };
                HolonomicEq::new(coeffs, inhom)
                    .map(Decoded::Holonomic)
                    .map_err(|e| JsonError::Schema(e.to_string()))
            }
            Kind::Ratrec => {
                let num = decode(field(&self.num, "num")?)?;
                let den = decode(field(&self.den, "den")?)?;
                if den.is_zero() {
                    return Err(JsonError::Schema("zero denominator".into()));
                }
                Ok(Decoded::RatRec(RatRecEq { order: self.order, num, den }))
            }
            Kind::Diffpoly => Ok(Decoded::Diff(DiffPoly::new(decode(field(&self.terms, "terms")?)?))),
        }
    }
}

pub fn to_json(doc: &JsonEquation) -> String {
    serde_json::to_string_pretty(doc).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Decoded, JsonError> {
    let doc: JsonEquation = serde_json::from_str(text)?;
    doc.decode()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_equation, parse_polynomial};

    #[test]
    fn holonomic_round_trip() {
        let h = HolonomicEq::new(
            vec![UniPoly::from_ints(&[1]), UniPoly::from_ints(&[0, 0, 3])],
            Some(UniPoly::from_ints(&[-96, 0, 7])),
        )
        .unwrap();
        let text = to_json(&JsonEquation::from_holonomic(&h));
        assert!(text.contains("\"-96\""));
        assert_eq!(from_json(&text).unwrap(), Decoded::Holonomic(h));
    }

    #[test]
    fn ratrec_round_trip_keeps_big_integers() {
        let num = parse_polynomial("123456789012345678901234567890*s(n+1) - 31/32*s(n)").unwrap();
        let r = RatRecEq { order: 2, num, den: parse_polynomial("s(n) + 1").unwrap() };
        let doc = JsonEquation::from_ratrec(&r);
        assert_eq!(doc.variables, vec!["s(n+2)", "s(n+1)", "s(n)"]);
        assert_eq!(from_json(&to_json(&doc)).unwrap(), Decoded::RatRec(r));
    }

    #[test]
    fn diffpoly_round_trip() {
        let p = parse_equation("n^2*s(n+3)^2 - s(n)*s(n+1) + 5").unwrap();
        assert_eq!(from_json(&to_json(&JsonEquation::from_diffpoly(&p))).unwrap(), Decoded::Diff(p));
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(from_json("{"), Err(JsonError::Syntax(_))));
        let bad = r#"{"kind":"ratrec","order":1,"degree":1,"variables":[],"num":[]}"#;
        assert!(matches!(from_json(bad), Err(JsonError::Schema(_))));
        let bad_var = r#"{"kind":"diffpoly","order":0,"degree":1,"variables":[],"terms":[{"coeff":"1","monomial":{"t":1}}]}"#;
        assert!(matches!(from_json(bad_var), Err(JsonError::Schema(_))));
    }
}
