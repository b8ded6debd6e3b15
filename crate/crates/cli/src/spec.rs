//! Polynomial-system files.
//!
//! ```text
//! # comment
//! name: parametric-parabola
//! vars: a < b < c < x
//! expect: real=27 complex=8 strict
//! a*x^2+b*x+c
//! ```
//!
//! `name:` and `expect:` are optional. The `vars:` header lists variables from
//! smallest to greatest and must precede the polynomials, one per line.

use std::path::Path;
use tricad::poly::{parse_poly_line, Poly, VarOrder};
use tricad::{Error, Result};

/// Cell counts a run is compared against.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub n_real: Option<usize>,
    pub n_complex: Option<usize>,
    /// A mismatch is a failure rather than an informational note.
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemSpec {
    pub name: String,
    pub order: VarOrder,
    pub polys: Vec<Poly>,
    pub expected: Option<Expected>,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

fn parse_order(rest: &str, line: usize, col: usize) -> Result<VarOrder> {
    let names: Vec<String> = rest.split('<').map(|s| s.trim().to_string()).collect();
    if names.iter().any(|s| s.is_empty()) {
        return Err(syntax(line, col, "empty variable name in `vars:`"));
    }
    if let Some(bad) = names.iter().find(|s| !s.chars().all(|c| c.is_alphanumeric() || c == '_')) {
        return Err(syntax(line, col, format!("bad variable name `{bad}`")));
    }
    VarOrder::new(names)
}

fn parse_expected(rest: &str, line: usize, col: usize) -> Result<Expected> {
    let mut e = Expected::default();
    for word in rest.split_whitespace() {
        match word.split_once('=') {
            None if word == "strict" => e.strict = true,
            Some((key, value)) => {
                let v: usize = value.parse().map_err(|_| syntax(line, col, format!("bad count `{value}`")))?;
                match key {
                    "real" => e.n_real = Some(v),
                    "complex" => e.n_complex = Some(v),
                    _ => return Err(syntax(line, col, format!("unknown expectation `{key}`"))),
                }
            }
            None => return Err(syntax(line, col, format!("unexpected `{word}`"))),
        }
    }
    Ok(e)
}

/// Parses a system file; `default_name` is used when no `name:` line is given.
pub fn parse_system(text: &str, default_name: &str) -> Result<SystemSpec> {
    let mut name = None;
    let mut order = None;
    let mut expected = None;
    let mut polys = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = content.find(trimmed).unwrap_or(0) + 1;
        if let Some((key, rest)) = trimmed.split_once(':') {
            let rest_col = col + key.len() + 1;
            match key.trim() {
                "name" => name = Some(rest.trim().to_string()),
                "vars" if order.is_some() => return Err(syntax(line, col, "duplicate `vars:` header")),
                "vars" => order = Some(parse_order(rest, line, rest_col)?),
                "expect" => expected = Some(parse_expected(rest, line, rest_col)?),
                other => return Err(syntax(line, col, format!("unknown header `{other}`"))),
            }
            continue;
        }
        let Some(o) = &order else {
            return Err(syntax(line, col, "polynomial before the `vars:` header"));
        };
        let p = parse_poly_line(content, o, line)?;
        polys.push(p);
    }
    let order = order.ok_or_else(|| syntax(1, 1, "missing `vars:` header"))?;
    Ok(SystemSpec { name: name.unwrap_or_else(|| default_name.to_string()), order, polys, expected })
}

/// Reads and parses a system file, naming it after the file stem by default.
pub fn load_system(path: &Path) -> anyhow::Result<SystemSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("system");
    parse_system(&text, stem).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

impl SystemSpec {
    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn names(&self) -> &[String] {
        self.order.names()
    }

    /// Serializes in the grammar accepted by [`parse_system`].
    pub fn to_text(&self) -> String {
        let mut out = format!("name: {}\nvars: {}\n", self.name, self.names().join(" < "));
        if let Some(e) = &self.expected {
            let mut words = Vec::new();
            if let Some(r) = e.n_real {
                words.push(format!("real={r}"));
            }
            if let Some(c) = e.n_complex {
                words.push(format!("complex={c}"));
            }
            if e.strict {
                words.push("strict".into());
            }
            out.push_str(&format!("expect: {}\n", words.join(" ")));
        }
        for p in &self.polys {
            out.push_str(&p.to_text(self.names()));
            out.push('\n');
        }
        out
    }
}
