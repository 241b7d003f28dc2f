//! System documents: the text format and its JSON equivalent.
//!
//! Text statements are separated by `;` or newlines, and `#` starts a
//! comment running to the end of the line:
//!
//! ```text
//! name: triangle-group
//! gens: a b c
//! rel: a b 3; rel: b c 4   # unlisted pairs get m = inf
//! ```
//!
//! A right-angled system may be given by its graph instead, each edge
//! `s-t` getting `m = 2` and every other pair `m = inf`:
//!
//! ```text
//! racg: a-b b-c c-d d-e e-a
//! ```
//!
//! Generators keep their order in `gens:`, or their order of first
//! appearance in `racg:` when there is no `gens:` statement.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{CoxeterMatrix, Exponent};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{}{message}: {token:?}", at.map(|(l, c)| format!("line {l}, column {c}: ")).unwrap_or_default())]
    Semantic { at: Option<(usize, usize)>, token: String, message: String },
    #[error("invalid json document: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub s: String,
    pub t: String,
    pub m: Exponent,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    #[serde(default)]
    pub name: String,
    pub generators: Vec<String>,
    #[serde(default)]
    pub relations: Vec<Relation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub racg_edges: Option<Vec<(String, String)>>,
}

/// Source positions for the entries of a parsed document.
#[derive(Default)]
struct Positions {
    generators: Vec<(usize, usize)>,
    relations: Vec<[(usize, usize); 3]>,
    edges: Vec<(usize, usize)>,
}

fn semantic(at: Option<(usize, usize)>, token: &str, message: &str) -> ParseError {
    ParseError::Semantic { at, token: token.to_owned(), message: message.to_owned() }
}

impl SystemDocument {
    /// The general-form document of `m`: every pair with finite exponent.
    pub fn from_matrix(name: &str, m: &CoxeterMatrix) -> Self {
        let relations = m
            .pairs()
            .filter(|&(_, _, e)| e.is_finite())
            .map(|(i, j, e)| Relation { s: m.name(i).into(), t: m.name(j).into(), m: e })
            .collect();
        SystemDocument {
            name: name.to_owned(),
            generators: m.generators().to_vec(),
            relations,
            racg_edges: None,
        }
    }

    pub fn to_matrix(&self) -> Result<CoxeterMatrix, ParseError> {
        self.validate(&Positions::default())
    }

    fn validate(&self, pos: &Positions) -> Result<CoxeterMatrix, ParseError> {
        if self.generators.is_empty() {
            return Err(semantic(None, "", "no generators"));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if self.generators[..i].contains(g) {
                return Err(semantic(pos.generators.get(i).copied(), g, "duplicate generator"));
            }
        }
        let index = |s: &str, at: Option<(usize, usize)>| {
            self.generators
                .iter()
                .position(|g| g == s)
                .ok_or_else(|| semantic(at, s, "unknown generator"))
        };
        let mut seen = BTreeSet::new();
        let mut pair = |i: usize, j: usize, at, token: &str| {
            if i == j {
                return Err(semantic(at, token, "diagonal relation"));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(semantic(at, token, "duplicate pair"));
            }
            Ok(())
        };
        if let Some(edges) = &self.racg_edges {
            if !self.relations.is_empty() {
                return Err(semantic(None, "racg", "racg edges cannot be mixed with relations"));
            }
            let mut out = Vec::with_capacity(edges.len());
            for (k, (s, t)) in edges.iter().enumerate() {
                let at = pos.edges.get(k).copied();
                let (i, j) = (index(s, at)?, index(t, at)?);
                pair(i, j, at, &format!("{s}-{t}"))?;
                out.push((i, j));
            }
            return CoxeterMatrix::right_angled(&self.generators, &out)
                .map_err(|e| semantic(None, "", &e.to_string()));
        }
        let mut rels = Vec::with_capacity(self.relations.len());
        for (k, r) in self.relations.iter().enumerate() {
            let at = pos.relations.get(k).copied();
            let i = index(&r.s, at.map(|a| a[0]))?;
            let j = index(&r.t, at.map(|a| a[1]))?;
            pair(i, j, at.map(|a| a[0]), &r.s)?;
            if let Exponent::Finite(m) = r.m {
                if m < 2 {
                    return Err(semantic(at.map(|a| a[2]), &m.to_string(), "exponent must be at least 2"));
                }
            }
            rels.push((i, j, r.m));
        }
        CoxeterMatrix::new(&self.generators, &rels, Exponent::Infinite)
            .map_err(|e| semantic(None, "", &e.to_string()))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    /// The text form; reparses to the same document.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            out.push_str(&format!("name: {}\n", self.name));
        }
        out.push_str(&format!("gens: {}\n", self.generators.join(" ")));
        if let Some(edges) = &self.racg_edges {
            let e: Vec<String> = edges.iter().map(|(s, t)| format!("{s}-{t}")).collect();
            out.push_str(&format!("racg: {}\n", e.join(" ")));
        }
        for r in &self.relations {
            out.push_str(&format!("rel: {} {} {}\n", r.s, r.t, r.m));
        }
        out
    }
}

fn parse_exponent(tok: &str) -> Option<Exponent> {
    match tok {
        "inf" | "∞" => Some(Exponent::Infinite),
        _ => tok.parse().ok().map(Exponent::Finite),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str, first_col: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices().chain(std::iter::once((s.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(b)) => {
                out.push((first_col + s[..b].chars().count(), &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn valid_symbol(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || "_'.+".contains(c))
}

/// Parses the text format, or JSON when the input starts with `{`.
pub fn parse_document(text: &str) -> Result<SystemDocument, ParseError> {
    Ok(parse_with_positions(text)?.0)
}

fn parse_with_positions(text: &str) -> Result<(SystemDocument, Positions), ParseError> {
    if text.trim_start().starts_with('{') {
        let doc = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        return Ok((doc, Positions::default()));
    }
    let mut doc = SystemDocument::default();
    let mut pos = Positions::default();
    let mut declared = false;
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut seen_racg = false;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for stmt in body.split(';') {
            let col = body[..offset].chars().count() + 1;
            offset += stmt.len() + 1;
            if stmt.trim().is_empty() {
                continue;
            }
            let syntax = |column: usize, message: String| ParseError::Syntax { line, column, message };
            let Some(colon) = stmt.find(':') else {
                let lead = stmt.len() - stmt.trim_start().len();
                return Err(syntax(col + lead, format!("expected `keyword:`, found {:?}", stmt.trim())));
            };
            let key = stmt[..colon].trim();
            let key_col = col + stmt.len() - stmt.trim_start().len();
            let args = tokens(&stmt[colon + 1..], col + stmt[..=colon].chars().count());
            for &(c, t) in &args {
                let ok = match key {
                    "name" => true,
                    "racg" => t.split('-').all(valid_symbol),
                    _ => valid_symbol(t) || t == "∞",
                };
                if !ok {
                    return Err(syntax(c, format!("invalid token {t:?}")));
                }
            }
            match key {
                "name" => {
                    if args.len() != 1 {
                        return Err(syntax(key_col, "`name:` takes one word".into()));
                    }
                    doc.name = args[0].1.to_owned();
                }
                "gens" => {
                    declared = true;
                    for &(c, t) in &args {
                        doc.generators.push(t.to_owned());
                        pos.generators.push((line, c));
                    }
                }
                "rel" => {
                    let [(c1, s), (c2, t), (c3, m)] = args[..] else {
                        return Err(syntax(key_col, format!("`rel:` takes `s t m`, got {} tokens", args.len())));
                    };
                    let m = parse_exponent(m).ok_or_else(|| syntax(c3, format!("expected an integer or inf, found {m:?}")))?;
                    doc.relations.push(Relation { s: s.into(), t: t.into(), m });
                    pos.relations.push([(line, c1), (line, c2), (line, c3)]);
                }
                "racg" => {
                    seen_racg = true;
                    for &(c, t) in &args {
                        let parts: Vec<&str> = t.split('-').collect();
                        let [s, u] = parts[..] else {
                            return Err(syntax(c, format!("expected an edge `s-t`, found {t:?}")));
                        };
                        edges.push((s.into(), u.into()));
                        pos.edges.push((line, c));
                    }
                }
                _ => return Err(syntax(key_col, format!("unknown keyword {key:?}"))),
            }
        }
    }
    if seen_racg {
        if !declared {
            for (k, (s, t)) in edges.iter().enumerate() {
                for g in [s, t] {
                    if !doc.generators.contains(g) {
                        doc.generators.push(g.clone());
                        pos.generators.push(pos.edges[k]);
                    }
                }
            }
        }
        doc.racg_edges = Some(edges);
    }
    Ok((doc, pos))
}

/// Parses and validates a system in either format.
pub fn parse_system(text: &str) -> Result<CoxeterMatrix, ParseError> {
    let (doc, pos) = parse_with_positions(text)?;
    doc.validate(&pos)
}
