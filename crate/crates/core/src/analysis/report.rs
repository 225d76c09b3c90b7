use std::fmt::Write as _;

use serde::Serialize;

use super::{is_cyclic, is_self_dual, is_separable, min_distance_of, singleton_slack};
use crate::code::{code_type, enumerate_codewords, Caps, CodeType, CyclicCodeSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    #[serde(rename = "type")]
    pub code_type: CodeType,
    /// `None` for the single-codeword code.
    pub min_distance: Option<usize>,
    pub is_mdss: bool,
    pub is_self_dual: bool,
    pub is_separable: bool,
    pub is_cyclic_verified: bool,
}

/// Computes every field of [`CodeReport`] by enumeration.
pub fn report(spec: &CyclicCodeSpec, caps: &Caps) -> Result<CodeReport> {
    let set = enumerate_codewords(spec, caps)?;
    let min_distance = match min_distance_of(&set) {
        Ok(d) => Some(d),
        Err(Error::TrivialCode) => None,
        Err(e) => return Err(e),
    };
    Ok(CodeReport {
        code_type: code_type(spec),
        min_distance,
        is_mdss: min_distance.is_some_and(|d| singleton_slack(spec, d) == 0),
        is_self_dual: is_self_dual(spec, caps)?,
        is_separable: is_separable(spec),
        is_cyclic_verified: is_cyclic(&set),
    })
}

/// A report together with the generator tuple in text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub alpha: usize,
    pub beta: usize,
    pub b: String,
    pub ell: String,
    pub f: String,
    pub h: String,
    pub g: String,
    #[serde(flatten)]
    pub report: CodeReport,
}

impl ReportRecord {
    pub fn new(spec: &CyclicCodeSpec, report: CodeReport) -> Self {
        ReportRecord {
            alpha: spec.alpha(),
            beta: spec.beta(),
            b: spec.b().to_string(),
            ell: spec.ell().to_string(),
            f: spec.f().to_string(),
            h: spec.h().to_string(),
            g: spec.g().to_string(),
            report,
        }
    }

    /// One `key=value` line per field.
    pub fn to_lines(&self) -> String {
        let r = &self.report;
        let t = &r.code_type;
        let mut out = String::new();
        let _ = writeln!(out, "alpha={}", self.alpha);
        let _ = writeln!(out, "beta={}", self.beta);
        let _ = writeln!(out, "b={}", self.b);
        let _ = writeln!(out, "ell={}", self.ell);
        let _ = writeln!(out, "f={}", self.f);
        let _ = writeln!(out, "h={}", self.h);
        let _ = writeln!(out, "g={}", self.g);
        let _ = writeln!(out, "type={t}");
        let _ = writeln!(
            out,
            "kappa1={} kappa2={} delta1={} delta2={}",
            t.kappa1, t.kappa2, t.delta1, t.delta2
        );
        match r.min_distance {
            Some(d) => {
                let _ = writeln!(out, "min_distance={d}");
            }
            None => {
                let _ = writeln!(out, "min_distance=none");
            }
        }
        let _ = writeln!(out, "is_mdss={}", r.is_mdss);
        let _ = writeln!(out, "is_self_dual={}", r.is_self_dual);
        let _ = writeln!(out, "is_separable={}", r.is_separable);
        let _ = writeln!(out, "is_cyclic_verified={}", r.is_cyclic_verified);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2poly::BinPoly;
    use crate::z4poly::QuatPoly;

    #[test]
    fn c1_report_lines_and_json_agree() {
        let spec = CyclicCodeSpec::new(
            3,
            3,
            BinPoly::x_n_minus_1(3),
            BinPoly::from_coeffs([1, 1]),
            QuatPoly::one(),
            QuatPoly::from_coeffs([1, 1, 1]),
        )
        .unwrap();
        let rec = ReportRecord::new(&spec, report(&spec, &Caps::default()).unwrap());
        let lines = rec.to_lines();
        assert!(lines.contains("type=(3,3;2,1;2)"));
        let json = rec.to_json();
        assert_eq!(json["b"], "x^3+1");
        assert_eq!(json["type"]["gamma"], 2);
        assert_eq!(json["is_self_dual"], false);
        let d = json["min_distance"].as_u64().unwrap();
        assert!(lines.contains(&format!("min_distance={d}")));
        assert!(rec.report.is_cyclic_verified);
    }
}
