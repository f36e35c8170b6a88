//! Line-oriented key/value documents for certificates and witnesses.
//!
//! Each line is `key: value`. A key with an empty value opens a nested block
//! whose lines are indented by two more spaces. Polynomial values use the
//! canonical text of [`crate::parser::format`], so documents round-trip
//! through [`crate::parser::parse`].
//!
//! ```text
//! kind: certificate
//! vars: u,y
//! main: y
//! mode: weak
//! m: 0
//! n: 1
//! dividend: y''
//! divisor: (y')^2 - 4*y
//! remainder: 4*y'
//! cofactor 1: 1
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::chevalley::{AlgebraicWitness, Witness};
use crate::diffpoly::{Context, Var};
use crate::error::{Error, Result};
use crate::parser::{format, parse};
use crate::reduction::{Certificate, Mode};
use crate::{DiffPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Text(String),
    Block(Document),
}

/// An ordered list of entries; keys may repeat only by caller choice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    entries: Vec<(String, Value)>,
}

impl Document {
    pub fn new() -> Self {
        Document::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.entries.push((key.into(), Value::Text(value.into())));
    }

    pub fn push_block(&mut self, key: impl Into<String>, block: Document) {
        self.entries.push((key.into(), Value::Block(block)));
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn text(&self, key: &str) -> Result<&str> {
        match self.get(key) {
            Some(Value::Text(t)) => Ok(t),
            Some(Value::Block(_)) => Err(Error::Document(format!("`{key}` is a block, expected a value"))),
            None => Err(Error::Document(format!("missing key `{key}`"))),
        }
    }

    pub fn block(&self, key: &str) -> Result<&Document> {
        match self.get(key) {
            Some(Value::Block(b)) => Ok(b),
            Some(Value::Text(_)) => Err(Error::Document(format!("`{key}` is a value, expected a block"))),
            None => Err(Error::Document(format!("missing block `{key}`"))),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, indent: usize) {
        for (key, value) in &self.entries {
            match value {
                Value::Text(t) => writeln!(out, "{:indent$}{key}: {t}", "").unwrap(),
                Value::Block(b) => {
                    writeln!(out, "{:indent$}{key}:", "").unwrap();
                    b.render_into(out, indent + 2);
                }
            }
        }
    }

    pub fn parse(text: &str) -> Result<Document> {
        let lines: Vec<(usize, usize, &str)> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(no, l)| (no + 1, l.len() - l.trim_start_matches(' ').len(), l.trim()))
            .collect();
        let mut pos = 0;
        let doc = Document::parse_block(&lines, &mut pos, 0)?;
        if pos != lines.len() {
            return Err(Error::Document(format!(
                "unexpected indentation on line {}",
                lines[pos].0
            )));
        }
        Ok(doc)
    }

    fn parse_block(lines: &[(usize, usize, &str)], pos: &mut usize, indent: usize) -> Result<Document> {
        let mut doc = Document::new();
        while let Some(&(no, ind, line)) = lines.get(*pos) {
            if ind < indent {
                break;
            }
            if ind > indent {
                return Err(Error::Document(format!("unexpected indentation on line {no}")));
            }
            *pos += 1;
            if let Some(key) = line.strip_suffix(':') {
                let block = Document::parse_block(lines, pos, indent + 2)?;
                doc.push_block(key.trim(), block);
            } else if let Some((key, value)) = line.split_once(": ") {
                doc.push(key.trim(), value.trim());
            } else {
                return Err(Error::Document(format!("line {no} is not `key: value`")));
            }
        }
        Ok(doc)
    }
}

fn poly_field(doc: &Document, key: &str, ctx: &Context) -> Result<DiffPoly> {
    parse(doc.text(key)?, ctx)
}

fn count_field(doc: &Document, key: &str) -> Result<u32> {
    let t = doc.text(key)?;
    t.parse()
        .map_err(|_| Error::Document(format!("`{key}` must be a non-negative integer, got `{t}`")))
}

fn header(doc: &mut Document, kind: &str, ctx: &Context, main: Var) {
    doc.push("kind", kind);
    doc.push("vars", ctx.to_string());
    doc.push("main", ctx.name(main));
}

fn read_header(doc: &Document, kind: &str) -> Result<(Context, Var)> {
    let found = doc.text("kind")?;
    if found != kind {
        return Err(Error::Document(format!("expected kind `{kind}`, found `{found}`")));
    }
    let ctx = Context::from_list(doc.text("vars")?)?;
    let main = ctx.var(doc.text("main")?)?;
    Ok((ctx, main))
}

pub fn certificate_document(cert: &Certificate<Rational>, ctx: &Context) -> Document {
    let mut doc = Document::new();
    header(&mut doc, "certificate", ctx, cert.main);
    doc.push("mode", cert.mode.as_str());
    doc.push("m", cert.m.to_string());
    doc.push("n", cert.n.to_string());
    doc.push("dividend", format(&cert.dividend, ctx));
    doc.push("divisor", format(&cert.divisor, ctx));
    doc.push("remainder", format(&cert.remainder, ctx));
    for (k, c) in &cert.cofactors {
        doc.push(format!("cofactor {k}"), format(c, ctx));
    }
    doc
}

pub fn certificate_to_text(cert: &Certificate<Rational>, ctx: &Context) -> String {
    certificate_document(cert, ctx).render()
}

pub fn certificate_from_document(doc: &Document) -> Result<(Context, Certificate<Rational>)> {
    let (ctx, main) = read_header(doc, "certificate")?;
    let mode = match doc.text("mode")? {
        "full" => Mode::Full,
        "weak" => Mode::Weak,
        other => return Err(Error::Document(format!("unknown mode `{other}`"))),
    };
    let mut cofactors = BTreeMap::new();
    for (key, value) in doc.entries() {
        let Some(index) = key.strip_prefix("cofactor ") else {
            continue;
        };
        let k: u32 = index
            .trim()
            .parse()
            .map_err(|_| Error::Document(format!("bad cofactor index `{index}`")))?;
        let Value::Text(text) = value else {
            return Err(Error::Document(format!("`{key}` must be a value")));
        };
        let c = parse(text, &ctx)?;
        if cofactors.insert(k, c).is_some() {
            return Err(Error::Document(format!("cofactor {k} given twice")));
        }
    }
    cofactors.retain(|_, c: &mut DiffPoly| !c.is_zero());
    let cert = Certificate {
        mode,
        main,
        dividend: poly_field(doc, "dividend", &ctx)?,
        divisor: poly_field(doc, "divisor", &ctx)?,
        m: count_field(doc, "m")?,
        n: count_field(doc, "n")?,
        remainder: poly_field(doc, "remainder", &ctx)?,
        cofactors,
    };
    Ok((ctx, cert))
}

pub fn certificate_from_text(text: &str) -> Result<(Context, Certificate<Rational>)> {
    certificate_from_document(&Document::parse(text)?)
}

/// A witness together with the inputs it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessDocument {
    pub ctx: Context,
    pub main: Var,
    pub target: DiffPoly,
    pub minimal: Option<DiffPoly>,
    pub witness: Witness<Rational>,
}

impl WitnessDocument {
    pub fn to_document(&self) -> Document {
        let ctx = &self.ctx;
        let mut doc = Document::new();
        header(&mut doc, "witness", ctx, self.main);
        doc.push("case", self.witness.case().as_str());
        doc.push("target", format(&self.target, ctx));
        if let Some(minimal) = &self.minimal {
            doc.push("minimal", format(minimal, ctx));
        }
        match &self.witness {
            Witness::Transcendental { a } => doc.push("a", format(a, ctx)),
            Witness::Algebraic(w) => {
                doc.push("a", format(&w.a, ctx));
                doc.push("a1", format(&w.a1, ctx));
                doc.push("a2", format(&w.a2, ctx));
                doc.push("a3", format(&w.a3, ctx));
                doc.push("discriminant", format(&w.discriminant, ctx));
                doc.push("resultant", format(&w.resultant, ctx));
                doc.push("B1", format(&w.b1, ctx));
                doc.push("n", w.n.to_string());
                doc.push_block("certificate", certificate_document(&w.certificate, ctx));
            }
        }
        doc
    }

    pub fn to_text(&self) -> String {
        self.to_document().render()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let doc = Document::parse(text)?;
        let (ctx, main) = read_header(&doc, "witness")?;
        let target = poly_field(&doc, "target", &ctx)?;
        let minimal = match doc.get("minimal") {
            Some(_) => Some(poly_field(&doc, "minimal", &ctx)?),
            None => None,
        };
        let a = poly_field(&doc, "a", &ctx)?;
        let witness = match doc.text("case")? {
            "transcendental" => Witness::Transcendental { a },
            "algebraic" => {
                let (_, certificate) = certificate_from_document(doc.block("certificate")?)?;
                Witness::Algebraic(Box::new(AlgebraicWitness {
                    a1: poly_field(&doc, "a1", &ctx)?,
                    a2: poly_field(&doc, "a2", &ctx)?,
                    a3: poly_field(&doc, "a3", &ctx)?,
                    a,
                    discriminant: poly_field(&doc, "discriminant", &ctx)?,
                    resultant: poly_field(&doc, "resultant", &ctx)?,
                    b1: poly_field(&doc, "B1", &ctx)?,
                    n: count_field(&doc, "n")?,
                    certificate,
                }))
            }
            other => return Err(Error::Document(format!("unknown case `{other}`"))),
        };
        Ok(WitnessDocument {
            ctx,
            main,
            target,
            minimal,
            witness,
        })
    }
}
