//! The machine-readable report and its three renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::check::Check;
use crate::poly::{BiPolyTQ, IntPoly};

/// A big integer that travels through JSON as a plain number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n =
            serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigInt::from_str(&n.to_string())
            .map(JsonInt)
            .map_err(|_| serde::de::Error::custom(format!("{n} is not an integer")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiTerm {
    pub t_exp: usize,
    pub q_exp: usize,
    pub coeff: JsonInt,
}

/// Ascending coefficient array, or the nonzero terms of a bivariate polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyValue {
    Uni(Vec<JsonInt>),
    Bi(Vec<BiTerm>),
}

impl From<&IntPoly> for PolyValue {
    fn from(p: &IntPoly) -> Self {
        PolyValue::Uni(p.coeffs().iter().cloned().map(JsonInt).collect())
    }
}

impl From<&BiPolyTQ> for PolyValue {
    fn from(p: &BiPolyTQ) -> Self {
        PolyValue::Bi(
            p.terms()
                .map(|(&(t_exp, q_exp), c)| BiTerm {
                    t_exp,
                    q_exp,
                    coeff: JsonInt(c.clone()),
                })
                .collect(),
        )
    }
}

impl PolyValue {
    pub fn scalar(c: impl Into<BigInt>) -> Self {
        PolyValue::Uni(vec![JsonInt(c.into())])
    }

    pub fn to_int_poly(&self) -> Option<IntPoly> {
        match self {
            PolyValue::Uni(cs) => Some(IntPoly::new(cs.iter().map(|c| c.0.clone()).collect())),
            PolyValue::Bi(_) => None,
        }
    }

    pub fn to_bipoly(&self) -> BiPolyTQ {
        match self {
            PolyValue::Uni(cs) => {
                BiPolyTQ::from_terms(cs.iter().enumerate().map(|(k, c)| ((k, 0), c.0.clone())))
            }
            PolyValue::Bi(terms) => BiPolyTQ::from_terms(
                terms
                    .iter()
                    .map(|t| ((t.t_exp, t.q_exp), t.coeff.0.clone())),
            ),
        }
    }

    fn render(&self, vars: (char, char)) -> String {
        match self {
            PolyValue::Uni(_) => self
                .to_int_poly()
                .expect("univariate value")
                .display(vars.0)
                .to_string(),
            PolyValue::Bi(_) => self.to_bipoly().display(vars).to_string(),
        }
    }

    fn rows(&self) -> Vec<(String, String, String)> {
        match self {
            PolyValue::Uni(cs) => cs
                .iter()
                .enumerate()
                .map(|(k, c)| (k.to_string(), String::new(), c.0.to_string()))
                .collect(),
            PolyValue::Bi(terms) => terms
                .iter()
                .map(|t| {
                    (
                        t.t_exp.to_string(),
                        t.q_exp.to_string(),
                        t.coeff.0.to_string(),
                    )
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultEntry {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
    pub value: Option<PolyValue>,
    /// Variable names for text rendering.
    #[serde(skip, default = "default_vars")]
    pub vars: (char, char),
}

fn default_vars() -> (char, char) {
    ('t', 'q')
}

impl ResultEntry {
    pub fn value(name: impl Into<String>, value: PolyValue, vars: (char, char)) -> Self {
        Self {
            name: name.into(),
            status: Status::Pass,
            witness: None,
            value: Some(value),
            vars,
        }
    }

    /// A theorem-style check: failure is `fail`.
    pub fn check(name: impl Into<String>, outcome: Check) -> Self {
        Self::from_check(name, outcome, Status::Fail)
    }

    /// A conjecture verdict: failure is a `finding`.
    pub fn verdict(name: impl Into<String>, outcome: Check) -> Self {
        Self::from_check(name, outcome, Status::Finding)
    }

    fn from_check(name: impl Into<String>, outcome: Check, on_failure: Status) -> Self {
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (on_failure, Some(w.0)),
        };
        Self {
            name: name.into(),
            status,
            witness,
            value: None,
            vars: default_vars(),
        }
    }

    pub fn with_value(mut self, value: PolyValue) -> Self {
        self.value = Some(value);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Vec<ResultEntry>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "name",
            "status",
            "exponent",
            "q_exponent",
            "coefficient",
            "witness",
        ])
        .expect("in-memory write");
        for r in &self.results {
            let status = status_word(r.status);
            let witness = r.witness.as_deref().unwrap_or("");
            let rows = r.value.as_ref().map(PolyValue::rows).unwrap_or_default();
            if rows.is_empty() {
                w.write_record([r.name.as_str(), status, "", "", "", witness])
                    .expect("in-memory write");
            }
            for (e, qe, c) in rows {
                w.write_record([r.name.as_str(), status, &e, &qe, &c, witness])
                    .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    /// A lone computed value prints bare; anything else prints one line per result.
    pub fn to_text(&self) -> String {
        if let [only] = self.results.as_slice() {
            if only.status == Status::Pass {
                if let Some(v) = &only.value {
                    return format!("{}\n", v.render(only.vars));
                }
            }
        }
        let mut out = String::new();
        for r in &self.results {
            let _ = write!(out, "{:<7} {}", status_word(r.status), r.name);
            if let Some(v) = &r.value {
                let _ = write!(out, " = {}", v.render(r.vars));
            }
            if let Some(w) = &r.witness {
                let _ = write!(out, "  [{w}]");
            }
            out.push('\n');
        }
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Finding => "finding",
    }
}

/// Parses a JSON report.
pub fn parse_report(s: &str) -> serde_json::Result<Report> {
    serde_json::from_str(s)
}

/// Parses a JSON polynomial value.
pub fn parse_poly_value(s: &str) -> serde_json::Result<PolyValue> {
    serde_json::from_str(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Witness;

    #[test]
    fn big_coefficients_are_json_numbers() {
        let p = IntPoly::new(vec![BigInt::from(10).pow(30), BigInt::from(-7)]);
        let json = serde_json::to_string(&PolyValue::from(&p)).unwrap();
        assert_eq!(json, "[1000000000000000000000000000000,-7]");
        assert_eq!(parse_poly_value(&json).unwrap().to_int_poly(), Some(p));
    }

    #[test]
    fn bivariate_round_trip() {
        let p = crate::poly::one_plus_tq(1, 2);
        let json = serde_json::to_string(&PolyValue::from(&p)).unwrap();
        assert_eq!(
            json,
            r#"[{"t_exp":0,"q_exp":0,"coeff":1},{"t_exp":1,"q_exp":2,"coeff":1}]"#
        );
        assert_eq!(parse_poly_value(&json).unwrap().to_bipoly(), p);
    }

    #[test]
    fn fractional_numbers_are_rejected() {
        assert!(parse_poly_value("[1.5]").is_err());
    }

    #[test]
    fn text_and_csv() {
        let report = Report {
            command: "compute alt".into(),
            parameters: BTreeMap::new(),
            results: vec![ResultEntry::value(
                "alt",
                PolyValue::from(&IntPoly::from_i64s(&[1, 1])),
                ('t', 'q'),
            )],
            elapsed_ms: 0,
        };
        assert_eq!(report.to_text(), "1 + t\n");
        assert_eq!(
            report.to_csv(),
            "name,status,exponent,q_exponent,coefficient,witness\nalt,pass,0,,1,\nalt,pass,1,,1,\n"
        );
        let failing = Report {
            results: vec![ResultEntry::check("x", Err(Witness::new("n = 3")))],
            ..report
        };
        assert_eq!(failing.to_text(), "fail    x  [n = 3]\n");
        assert_eq!(failing.exit_code(), 1);
    }
}
