//! Plain-text diagram format.
//!
//! ```text
//! marked: true
//! bottom: grg
//! + 1/2 *
//! |g .vR |g      # one slice per line, bottom first
//! m(g)
//! ```
//!
//! Term lines `+ c *` (or `- c *`) start a new summand; slices before any
//! term line form a single summand with coefficient 1. An optional `top:`
//! header is checked against every summand, and a lone `0` line denotes the
//! empty sum.

use std::str::FromStr;

use num_traits::One;

use super::{apply_slice, parse_seq, seq_to_string, Col, DiagramLinComb, Slice, Token};
use crate::error::{Error, Result};
use crate::scalars::{fmt_rational, Rational};

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

pub fn parse_token(s: &str) -> Option<Token> {
    let col = |c: &str| match c {
        "r" | "R" => Some(Col::R),
        "g" | "G" => Some(Col::G),
        _ => None,
    };
    if let Some(rest) = s.strip_prefix('|') {
        return col(rest).map(Token::Id);
    }
    if let Some(rest) = s.strip_prefix(".^") {
        return col(rest).map(Token::DotUp);
    }
    if let Some(rest) = s.strip_prefix(".v") {
        return col(rest).map(Token::DotDown);
    }
    let inner = |p: &str| s.strip_prefix(p).and_then(|r| r.strip_suffix(')')).and_then(col);
    if let Some(c) = inner("m(") {
        return Some(Token::Merge(c));
    }
    inner("s(").map(Token::Split)
}

struct Term {
    line: usize,
    coeff: Rational,
    slices: Vec<(usize, Slice)>,
}

/// Splits a line into tokens paired with 1-based columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = vec![];
    let mut start = None;
    for (k, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..k]));
                start = None;
            }
            (false, None) => start = Some(k),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((line[..s].chars().count() + 1, &line[s..]));
    }
    out
}

pub fn parse_diagram(text: &str) -> Result<DiagramLinComb> {
    let mut marked = None;
    let mut bottom: Option<Vec<Col>> = None;
    let mut top: Option<(usize, Vec<Col>)> = None;
    let mut terms: Vec<Term> = vec![];
    let mut explicit_zero = false;
    let mut body_started = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let trimmed = line.trim();
        if let Some((key, value)) = trimmed.split_once(':') {
            let key = key.trim();
            let value = value.trim();
            let vcol = indent + trimmed.find(':').unwrap() + 2;
            if body_started {
                return Err(parse_err(lineno, indent + 1, format!("header `{key}` after the first slice")));
            }
            match key {
                "marked" => {
                    let v = match value {
                        "true" => true,
                        "false" => false,
                        _ => return Err(parse_err(lineno, vcol, "marked must be true or false")),
                    };
                    if marked.replace(v).is_some() {
                        return Err(parse_err(lineno, indent + 1, "duplicate marked header"));
                    }
                }
                "bottom" | "top" => {
                    let seq = parse_seq(value).map_err(|_| parse_err(lineno, vcol, "colour sequences use r and g"))?;
                    let dup = if key == "bottom" { bottom.replace(seq).is_some() } else { top.replace((lineno, seq)).is_some() };
                    if dup {
                        return Err(parse_err(lineno, indent + 1, format!("duplicate {key} header")));
                    }
                }
                _ => return Err(parse_err(lineno, indent + 1, format!("unknown header `{key}`"))),
            }
            continue;
        }
        body_started = true;
        if trimmed == "0" {
            if explicit_zero || !terms.is_empty() {
                return Err(parse_err(lineno, indent + 1, "the empty sum must stand alone"));
            }
            explicit_zero = true;
            continue;
        }
        if explicit_zero {
            return Err(parse_err(lineno, indent + 1, "the empty sum must stand alone"));
        }
        if let Some(sign) = trimmed.chars().next().filter(|c| *c == '+' || *c == '-') {
            let body = trimmed[1..].trim();
            let Some(num) = body.strip_suffix('*') else {
                return Err(parse_err(lineno, indent + 1, "term lines look like `+ c *`"));
            };
            let num = num.trim();
            let mut coeff = Rational::from_str(num)
                .map_err(|_| parse_err(lineno, indent + 2, format!("bad coefficient `{num}`")))?;
            if sign == '-' {
                coeff = -coeff;
            }
            terms.push(Term { line: lineno, coeff, slices: vec![] });
            continue;
        }
        let mut slice = vec![];
        for (col, w) in words(line) {
            let tok = parse_token(w).ok_or_else(|| parse_err(lineno, col, format!("unknown token `{w}`")))?;
            slice.push(tok);
        }
        if terms.is_empty() {
            terms.push(Term { line: lineno, coeff: Rational::one(), slices: vec![] });
        }
        terms.last_mut().unwrap().slices.push((lineno, slice));
    }

    let marked = marked.unwrap_or(false);
    let bottom = bottom.unwrap_or_default();
    if explicit_zero {
        let top = top.map(|t| t.1).unwrap_or_else(|| bottom.clone());
        return Ok(DiagramLinComb::zero(bottom, top, marked));
    }
    if terms.is_empty() {
        terms.push(Term { line: 0, coeff: Rational::one(), slices: vec![] });
    }
    let mut acc: Option<DiagramLinComb> = None;
    for t in &terms {
        let mut seq = bottom.clone();
        for (k, (line, s)) in t.slices.iter().enumerate() {
            seq = apply_slice(s, &seq).map_err(|msg| Error::Arity { slice: k, line: *line, msg })?;
        }
        if let Some((line, want)) = &top {
            if &seq != want {
                return Err(parse_err(*line, 1, format!("declared top {} but a term ends at {}", seq_to_string(want), seq_to_string(&seq))));
            }
        }
        let slices: Vec<Slice> = t.slices.iter().map(|(_, s)| s.clone()).collect();
        let d = DiagramLinComb::from_slices(&bottom, &slices, marked)?.scale(&t.coeff);
        acc = Some(match acc {
            None => d,
            Some(a) => a.add(&d).map_err(|_| {
                parse_err(t.line, 1, format!("term ends at {} unlike the first term", seq_to_string(&seq)))
            })?,
        });
    }
    Ok(acc.unwrap())
}

pub fn serialize(d: &DiagramLinComb) -> String {
    let mut out = format!(
        "marked: {}\nbottom: {}\ntop: {}\n",
        d.marked,
        seq_to_string(&d.bottom),
        seq_to_string(&d.top)
    );
    if d.is_zero() {
        out.push_str("0\n");
        return out;
    }
    for (slices, c) in d.terms() {
        out.push_str(&format!("+ {} *\n", fmt_rational(c)));
        for s in slices {
            let toks: Vec<String> = s.iter().map(|t| t.dsl()).collect();
            out.push_str(&toks.join(" "));
            out.push('\n');
        }
    }
    out
}
