//! Serializable reports and their text / JSON / CSV renderings.

use std::fmt::{self, Write as _};

use aqcc_core::aqec::{AqecParams, SubsystemParams};
use aqcc_core::cyclic::CyclicCode;
use aqcc_core::polyring::{format_set, CyclotomicCoset};
use aqcc_core::weights::WeightReport;
use serde::{Deserialize, Serialize};

use crate::table1::RowAudit;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distance {
    pub value: u32,
    pub method: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub vacuous: bool,
}

impl Distance {
    pub fn is_exact(&self) -> bool {
        self.method != "bound-only"
    }
}

impl From<&WeightReport> for Distance {
    fn from(w: &WeightReport) -> Distance {
        Distance { value: w.value, method: w.method.as_str().to_string(), vacuous: w.vacuous }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "≥{}", self.value)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsReport {
    pub n: u32,
    pub q: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    pub dz: Distance,
    pub dx: Distance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pure: Option<bool>,
    pub c1: String,
    pub c2: String,
    pub route: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl From<&AqecParams> for ParamsReport {
    fn from(p: &AqecParams) -> ParamsReport {
        let notes = p.dimensions.as_ref().and_then(|d| d.discrepancy()).into_iter().collect();
        ParamsReport {
            n: p.n,
            q: p.q,
            k: p.k,
            r: None,
            dz: (&p.dz).into(),
            dx: (&p.dx).into(),
            pure: p.pure,
            c1: p.provenance.c1.to_string(),
            c2: p.provenance.c2.to_string(),
            route: p.provenance.route.to_string(),
            verdict: None,
            notes,
        }
    }
}

impl From<&SubsystemParams> for ParamsReport {
    fn from(s: &SubsystemParams) -> ParamsReport {
        ParamsReport {
            n: s.n,
            q: s.q,
            k: s.k,
            r: Some(s.r),
            dz: (&s.dz).into(),
            dx: (&s.dx).into(),
            pure: s.pure,
            c1: s.provenance.c1.to_string(),
            c2: s.provenance.c2.to_string(),
            route: s.provenance.route.to_string(),
            verdict: None,
            notes: Vec::new(),
        }
    }
}

impl ParamsReport {
    /// `[[n,k,dz/dx]]_q`, or `[[n,k,r,dz/dx]]_q` for subsystem codes.
    pub fn label(&self) -> String {
        match self.r {
            Some(r) => format!("[[{},{},{},{}/{}]]_{}", self.n, self.k, r, self.dz, self.dx, self.q),
            None => format!("[[{},{},{}/{}]]_{}", self.n, self.k, self.dz, self.dx, self.q),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub n: u32,
    pub q: u32,
    pub k: u32,
    pub generator: String,
    pub defining_set: Vec<u32>,
    pub descriptor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Distance>,
}

impl CodeReport {
    pub fn new(code: &CyclicCode, d: Option<&WeightReport>) -> CodeReport {
        CodeReport {
            n: code.n(),
            q: code.q(),
            k: code.k(),
            generator: code.generator().to_string(),
            defining_set: code.defining_set().to_vec(),
            descriptor: code.descriptor().to_string(),
            d: d.map(Distance::from),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetsReport {
    pub n: u32,
    pub q: u32,
    pub cosets: Vec<Vec<u32>>,
}

impl CosetsReport {
    pub fn new(n: u32, q: u32, cosets: &[CyclotomicCoset]) -> CosetsReport {
        CosetsReport { n, q, cosets: cosets.iter().map(|c| c.members().to_vec()).collect() }
    }
}

/// Everything a command can print.
pub enum Output {
    Cosets(CosetsReport),
    Code(CodeReport),
    Params(ParamsReport),
    ParamsList(Vec<ParamsReport>),
    Audit(Vec<RowAudit>),
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

const PARAMS_HEADER: [&str; 13] =
    ["n", "q", "k", "r", "dz", "dz_method", "dx", "dx_method", "pure", "c1", "c2", "route", "verdict"];

fn params_row(p: &ParamsReport) -> Vec<String> {
    let opt = |v: Option<String>| v.unwrap_or_default();
    vec![
        p.n.to_string(),
        p.q.to_string(),
        p.k.to_string(),
        opt(p.r.map(|r| r.to_string())),
        p.dz.value.to_string(),
        p.dz.method.clone(),
        p.dx.value.to_string(),
        p.dx.method.clone(),
        opt(p.pure.map(|b| b.to_string())),
        p.c1.clone(),
        p.c2.clone(),
        p.route.clone(),
        opt(p.verdict.clone()),
    ]
}

fn params_text(p: &ParamsReport) -> String {
    let mut s = format!("{}  route={}  c1={}  c2={}", p.label(), p.route, p.c1, p.c2);
    if let Some(pure) = p.pure {
        let _ = write!(s, "  pure={}", if pure { "yes" } else { "no" });
    }
    for note in &p.notes {
        let _ = write!(s, "\n  note: {note}");
    }
    s
}

fn header(names: &[&str]) -> String {
    csv_line(&names.iter().map(|s| s.to_string()).collect::<Vec<_>>())
}

impl Output {
    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        Ok(match format {
            Format::Json => {
                let mut s = match self {
                    Output::Cosets(r) => serde_json::to_string_pretty(r)?,
                    Output::Code(r) => serde_json::to_string_pretty(r)?,
                    Output::Params(r) => serde_json::to_string_pretty(r)?,
                    Output::ParamsList(r) => serde_json::to_string_pretty(r)?,
                    Output::Audit(r) => serde_json::to_string_pretty(r)?,
                };
                s.push('\n');
                s
            }
            Format::Text => self.text(),
            Format::Csv => self.csv(),
        })
    }

    fn text(&self) -> String {
        let mut out = String::new();
        match self {
            Output::Cosets(r) => {
                for c in &r.cosets {
                    let _ = writeln!(out, "{}", format_set(c.iter().copied()));
                }
            }
            Output::Code(r) => {
                let d = r.d.as_ref().map(|d| format!(",{d}")).unwrap_or_default();
                let _ = writeln!(out, "[{},{}{}]_{}", r.n, r.k, d, r.q);
                let _ = writeln!(out, "g(x) = {}", r.generator);
                let _ = writeln!(out, "T = {}", format_set(r.defining_set.iter().copied()));
                let _ = writeln!(out, "descriptor: {}", r.descriptor);
            }
            Output::Params(p) => {
                let _ = writeln!(out, "{}", params_text(p));
            }
            Output::ParamsList(ps) => {
                for p in ps {
                    let _ = writeln!(out, "{}", params_text(p));
                }
            }
            Output::Audit(rows) => {
                for a in rows {
                    let computed = a.computed.as_ref().map(ParamsReport::label).unwrap_or_else(|| "-".into());
                    let _ = writeln!(
                        out,
                        "row {}  {} / {}  expected {}  computed {}  {}",
                        a.row, a.c1_label, a.c2_label, a.expected, computed, a.verdict
                    );
                    for note in &a.notes {
                        let _ = writeln!(out, "  note: {note}");
                    }
                }
            }
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        match self {
            Output::Cosets(r) => {
                out += &header(&["representative", "size", "members"]);
                for c in &r.cosets {
                    let members = c.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                    out += &csv_line(&[c[0].to_string(), c.len().to_string(), members]);
                }
            }
            Output::Code(r) => {
                out += &header(&["n", "q", "k", "d", "d_method", "descriptor", "generator"]);
                let (d, m) = match &r.d {
                    Some(d) => (d.value.to_string(), d.method.clone()),
                    None => (String::new(), String::new()),
                };
                out += &csv_line(&[
                    r.n.to_string(),
                    r.q.to_string(),
                    r.k.to_string(),
                    d,
                    m,
                    r.descriptor.clone(),
                    r.generator.clone(),
                ]);
            }
            Output::Params(p) => {
                out += &header(&PARAMS_HEADER);
                out += &csv_line(&params_row(p));
            }
            Output::ParamsList(ps) => {
                out += &header(&PARAMS_HEADER);
                for p in ps {
                    out += &csv_line(&params_row(p));
                }
            }
            Output::Audit(rows) => {
                out += &header(&["row", "c1", "c2", "expected", "computed", "verdict", "notes"]);
                for a in rows {
                    out += &csv_line(&[
                        a.row.to_string(),
                        a.c1.clone(),
                        a.c2.clone(),
                        a.expected.clone(),
                        a.computed.as_ref().map(ParamsReport::label).unwrap_or_default(),
                        a.verdict.to_string(),
                        a.notes.join("; "),
                    ]);
                }
            }
        }
        out
    }
}
