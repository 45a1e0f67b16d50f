//! Problem files, the JSON schema, and rendering of results in both.
//!
//! A problem file is UTF-8 text. `key: value` lines set the context, `#`
//! starts a comment, and every other nonblank line is one polynomial:
//!
//! ```text
//! ring: ZZ/8
//! vars: x, y
//! rank: 2
//! order: grlex
//! module-order: top
//! 2*x^2*y*e1
//! x*y^2*e1
//! 4*x*e2
//! ```
//!
//! Input starting with `{` is read as a JSON document instead.

use std::collections::BTreeMap;
use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};
use syzcalc_core::polynomials::{FreeModule, ModuleMonomial, Monomial, PolyVector, Term};
use syzcalc_core::rings::Ring;

use crate::context::{module_order_name, order_name, Basis, PolyContext};
use crate::format::format_polynomial;
use crate::parse::{parse_coefficient, parse_polynomial, ParseError};

/// `[coefficient, exponents, position]`, the position 1-based.
pub type JsonTerm = (String, Vec<u32>, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonContext {
    pub ring: String,
    pub vars: Vec<String>,
    pub rank: usize,
    pub order: String,
    pub module_order: String,
    #[serde(default = "default_basis")]
    pub basis: String,
}

fn default_basis() -> String {
    "e".into()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonSection {
    pub name: String,
    pub context: JsonContext,
    pub polynomials: Vec<Vec<JsonTerm>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<Option<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonDocument {
    pub context: JsonContext,
    pub kind: String,
    pub polynomials: Vec<Vec<JsonTerm>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<Option<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sections: Vec<JsonSection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub info: BTreeMap<String, serde_json::Value>,
}

pub fn json_context(ctx: &PolyContext) -> JsonContext {
    JsonContext {
        ring: ctx.ring.to_string(),
        vars: ctx.vars.clone(),
        rank: ctx.rank,
        order: order_name(ctx.order).into(),
        module_order: module_order_name(ctx.module_order).into(),
        basis: ctx.basis.letter().to_string(),
    }
}

pub fn json_terms<E: Display>(u: &PolyVector<E>) -> Vec<JsonTerm> {
    u.terms()
        .iter()
        .map(|t| {
            (
                t.coeff.to_string(),
                t.monomial.monomial.exponents().to_vec(),
                t.monomial.position + 1,
            )
        })
        .collect()
}

/// Where a problem went wrong, with a 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ProblemError {}

/// One polynomial as it appeared in the input.
#[derive(Clone, Debug, PartialEq)]
pub enum PolySource {
    Text { line: usize, text: String },
    Json { index: usize, terms: Vec<JsonTerm> },
}

/// Context fields as found in the input, all optional.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Headers {
    pub ring: Option<String>,
    pub vars: Option<String>,
    pub rank: Option<String>,
    pub order: Option<String>,
    pub module_order: Option<String>,
    pub basis: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ProblemFile {
    pub headers: Headers,
    pub polynomials: Vec<PolySource>,
}

fn header_slot<'a>(h: &'a mut Headers, key: &str) -> Option<&'a mut Option<String>> {
    match key {
        "ring" => Some(&mut h.ring),
        "vars" | "variables" => Some(&mut h.vars),
        "rank" => Some(&mut h.rank),
        "order" => Some(&mut h.order),
        "module-order" | "module_order" => Some(&mut h.module_order),
        "basis" => Some(&mut h.basis),
        _ => None,
    }
}

pub fn read_problem(text: &str) -> Result<ProblemFile, ProblemError> {
    if text.trim_start().starts_with('{') {
        return read_json(text);
    }
    let mut file = ProblemFile::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some((key, value)) = body.split_once(':') {
            let key = key.trim().to_ascii_lowercase();
            if key == "polynomials" && value.trim().is_empty() {
                continue;
            }
            match header_slot(&mut file.headers, &key) {
                Some(slot) => {
                    if slot.is_some() {
                        return Err(ProblemError {
                            line,
                            message: format!("header `{key}` given twice"),
                        });
                    }
                    *slot = Some(value.trim().to_string());
                    continue;
                }
                None => {
                    return Err(ProblemError {
                        line,
                        message: format!("unknown header `{}`", key),
                    })
                }
            }
        }
        file.polynomials.push(PolySource::Text {
            line,
            text: body.to_string(),
        });
    }
    Ok(file)
}

fn read_json(text: &str) -> Result<ProblemFile, ProblemError> {
    let doc: JsonDocument = serde_json::from_str(text).map_err(|e| ProblemError {
        line: e.line(),
        message: format!("invalid JSON document: {e}"),
    })?;
    let c = doc.context;
    Ok(ProblemFile {
        headers: Headers {
            ring: Some(c.ring),
            vars: Some(c.vars.join(", ")),
            rank: Some(c.rank.to_string()),
            order: Some(c.order),
            module_order: Some(c.module_order),
            basis: Some(c.basis),
        },
        polynomials: doc
            .polynomials
            .into_iter()
            .enumerate()
            .map(|(index, terms)| PolySource::Json { index, terms })
            .collect(),
    })
}

/// Parses every polynomial of `file` in `module`.
pub fn parse_sources<R: Ring>(
    sources: &[PolySource],
    ctx: &PolyContext,
    module: &FreeModule<R>,
) -> Result<Vec<PolyVector<R::Elem>>, ProblemError> {
    sources
        .iter()
        .map(|s| match s {
            PolySource::Text { line, text } => parse_polynomial(text, ctx, module).map_err(|e: ParseError| ProblemError {
                line: *line,
                message: e.to_string(),
            }),
            PolySource::Json { index, terms } => from_json_terms(terms, ctx, module).map_err(|message| ProblemError {
                line: 0,
                message: format!("polynomial {}: {message}", index + 1),
            }),
        })
        .collect()
}

pub fn from_json_terms<R: Ring>(
    terms: &[JsonTerm],
    ctx: &PolyContext,
    module: &FreeModule<R>,
) -> Result<PolyVector<R::Elem>, String> {
    let mut out = Vec::with_capacity(terms.len());
    for (k, (c, exps, pos)) in terms.iter().enumerate() {
        let coeff = parse_coefficient(c, module.ring()).map_err(|e| format!("term {}: coefficient `{c}`: {e}", k + 1))?;
        if exps.len() != ctx.nvars() {
            return Err(format!(
                "term {}: {} exponents for {} variables",
                k + 1,
                exps.len(),
                ctx.nvars()
            ));
        }
        if *pos == 0 || *pos > ctx.rank {
            return Err(format!("term {}: position {pos} is out of range", k + 1));
        }
        out.push(Term::new(coeff, ModuleMonomial::new(Monomial::new(exps.clone()), pos - 1)));
    }
    Ok(module.normalize(out))
}

/// One rendered polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub text: String,
    pub terms: Vec<JsonTerm>,
    pub label: Option<String>,
}

impl Entry {
    pub fn new<E: Display>(u: &PolyVector<E>, ctx: &PolyContext, label: Option<String>) -> Self {
        Entry {
            text: format_polynomial(u, ctx),
            terms: json_terms(u),
            label,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    pub name: String,
    pub ctx: PolyContext,
    pub entries: Vec<Entry>,
}

impl Section {
    pub fn new(name: &str, ctx: PolyContext) -> Self {
        Section {
            name: name.into(),
            ctx,
            entries: Vec::new(),
        }
    }

    pub fn push<E: Display>(&mut self, u: &PolyVector<E>, label: Option<String>) {
        self.entries.push(Entry::new(u, &self.ctx, label));
    }

    fn labels(&self) -> Vec<Option<String>> {
        if self.entries.iter().all(|e| e.label.is_none()) {
            Vec::new()
        } else {
            self.entries.iter().map(|e| e.label.clone()).collect()
        }
    }

    fn json(&self) -> JsonSection {
        JsonSection {
            name: self.name.clone(),
            context: json_context(&self.ctx),
            polynomials: self.entries.iter().map(|e| e.terms.clone()).collect(),
            labels: self.labels(),
        }
    }
}

/// A command's result. The main section renders as a problem file that
/// later commands can read back; notes and further sections become comments.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub kind: String,
    pub main: Section,
    pub notes: Vec<String>,
    pub sections: Vec<Section>,
    pub info: BTreeMap<String, serde_json::Value>,
    /// Replaces the problem-file rendering with one line, the entries
    /// becoming comments.
    pub headline: Option<String>,
}

pub fn context_headers(ctx: &PolyContext) -> String {
    let mut out = format!(
        "ring: {}\nvars: {}\nrank: {}\norder: {}\nmodule-order: {}\n",
        ctx.ring,
        ctx.vars.join(", "),
        ctx.rank,
        order_name(ctx.order),
        module_order_name(ctx.module_order)
    );
    if ctx.basis == Basis::S {
        out.push_str("basis: s\n");
    }
    out
}

impl Report {
    pub fn new(kind: &str, main: Section) -> Self {
        Report {
            kind: kind.into(),
            main,
            notes: Vec::new(),
            sections: Vec::new(),
            info: BTreeMap::new(),
            headline: None,
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn to_text(&self) -> String {
        if let Some(h) = &self.headline {
            let mut out = format!("{h}\n");
            for n in &self.notes {
                out.push_str(&format!("# {n}\n"));
            }
            for e in &self.main.entries {
                out.push_str(&format!("#   {}\n", e.text));
            }
            return out;
        }
        let mut out = context_headers(&self.main.ctx);
        for n in &self.notes {
            out.push_str(&format!("# {n}\n"));
        }
        for s in &self.sections {
            out.push_str(&format!("# {} (rank {}):\n", s.name, s.ctx.rank));
            for e in &s.entries {
                match &e.label {
                    Some(l) => out.push_str(&format!("#   {}  # {l}\n", e.text)),
                    None => out.push_str(&format!("#   {}\n", e.text)),
                }
            }
        }
        for e in &self.main.entries {
            match &e.label {
                Some(l) => out.push_str(&format!("{}  # {l}\n", e.text)),
                None => out.push_str(&format!("{}\n", e.text)),
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut info = self.info.clone();
        if !self.notes.is_empty() {
            info.insert("notes".into(), serde_json::json!(self.notes));
        }
        let doc = JsonDocument {
            context: json_context(&self.main.ctx),
            kind: self.kind.clone(),
            polynomials: self.main.entries.iter().map(|e| e.terms.clone()).collect(),
            labels: self.main.labels(),
            sections: self.sections.iter().map(Section::json).collect(),
            info,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        s.push('\n');
        s
    }
}
