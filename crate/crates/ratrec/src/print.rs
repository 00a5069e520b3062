//! Canonical text output. Terms always come in descending lex order, so the
//! same equation prints the same way every time.

use std::fmt::Write as _;
use std::str::FromStr;

use ratrec_core::{DiffPoly, HolonomicEq, MultiPoly, RatRecEq};
use thiserror::Error;

use crate::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// `s(n+m) = …`; only for rational recursions.
    Solved,
    /// `… = 0`.
    Zero,
    Json,
}

impl FromStr for Format {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, FormatError> {
        match s {
            "solved" => Ok(Format::Solved),
            "zero" => Ok(Format::Zero),
            "json" => Ok(Format::Json),
            other => Err(FormatError::Unknown(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("the solved format needs a rational recursion, got a {0}")]
    NotSolvable(&'static str),
    #[error("unknown output format '{0}'")]
    Unknown(String),
}

#[derive(Clone, Copy, Debug)]
pub enum Equation<'a> {
    RatRec(&'a RatRecEq),
    Holonomic(&'a HolonomicEq),
    Diff(&'a DiffPoly),
}

impl<'a> From<&'a RatRecEq> for Equation<'a> {
    fn from(r: &'a RatRecEq) -> Self {
        Equation::RatRec(r)
    }
}

impl<'a> From<&'a HolonomicEq> for Equation<'a> {
    fn from(h: &'a HolonomicEq) -> Self {
        Equation::Holonomic(h)
    }
}

impl<'a> From<&'a DiffPoly> for Equation<'a> {
    fn from(p: &'a DiffPoly) -> Self {
        Equation::Diff(p)
    }
}

pub fn print_equation<'a>(eq: impl Into<Equation<'a>>, format: Format) -> Result<String, FormatError> {
    let eq = eq.into();
    match format {
        Format::Solved => match eq {
            Equation::RatRec(r) => Ok(solved(r)),
            Equation::Holonomic(_) => Err(FormatError::NotSolvable("holonomic equation")),
            Equation::Diff(_) => Err(FormatError::NotSolvable("difference polynomial")),
        },
        Format::Zero => {
            let body = match eq {
                Equation::RatRec(r) => r.to_diffpoly().into_body(),
                Equation::Holonomic(h) => h.to_diffpoly().into_body(),
                Equation::Diff(p) => p.body().clone(),
            };
            Ok(format!("{} = 0", body))
        }
        Format::Json => {
            let doc = match eq {
                Equation::RatRec(r) => json::JsonEquation::from_ratrec(r),
                Equation::Holonomic(h) => json::JsonEquation::from_holonomic(h),
                Equation::Diff(p) => json::JsonEquation::from_diffpoly(p),
            };
            Ok(serde_json::to_string_pretty(&doc).expect("plain data serializes"))
        }
    }
}

fn grouped(p: &MultiPoly) -> String {
    if p.len() > 1 {
        format!("({})", p)
    } else {
        p.to_string()
    }
}

fn solved(r: &RatRecEq) -> String {
    let mut out = String::new();
    write!(out, "{} = ", MultiPoly::s(r.order)).unwrap();
    if r.den.is_constant() {
        let c = r.den.constant_term();
        write!(out, "{}", r.num.scale(&c.recip())).unwrap();
    } else {
        write!(out, "{} / {}", grouped(&r.num), grouped(&r.den)).unwrap();
    }
    out
}
