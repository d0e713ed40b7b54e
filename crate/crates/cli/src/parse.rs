//! Ideal files.
//!
//! ```text
//! # comment
//! vars: x0 x1 x2
//! order: x2 x1        # optional
//! dehom: x0           # optional
//! gens:
//! x0^2 + x1*x2
//! 3/2*x0*x1 - (x1 + x2)^2
//! ```

use segre_core::exactnum::{parse_rational, Rational};
use segre_core::polyring::{ExponentVector, HomogeneousIdeal, MultiPoly, RingError};
use segre_core::valuation::ValuationConfig;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    SyntaxError { line: usize, column: usize, message: String },
    #[error("line {line}: generator `{generator}` is not homogeneous")]
    NotHomogeneous { line: usize, generator: String },
    #[error("need at least 2 variables, got {0}")]
    TooFewVariables(usize),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub generators: Vec<MultiPoly>,
    /// Non-dehomogenizing variables, most significant first.
    pub order: Option<Vec<String>>,
    pub dehom: Option<String>,
}

impl IdealFile {
    pub fn ideal(&self) -> Result<HomogeneousIdeal, ParseError> {
        HomogeneousIdeal::new(self.variables.len(), self.generators.clone()).map_err(|e| match e {
            RingError::TooFewVariables(k) => ParseError::TooFewVariables(k),
            other => ParseError::Invalid(other.to_string()),
        })
    }

    fn index_of(&self, name: &str) -> Result<usize, ParseError> {
        self.variables.iter().position(|v| v == name).ok_or_else(|| ParseError::Invalid(format!("unknown variable `{name}`")))
    }

    /// Valuation from `dehom:` and `order:`, with `order_override` taking the
    /// place of the file's `order:` line when given.
    pub fn valuation(&self, order_override: Option<&[String]>) -> Result<ValuationConfig, ParseError> {
        let dehom = match &self.dehom {
            Some(name) => self.index_of(name)?,
            None => 0,
        };
        let order = order_override.map(|o| o.to_vec()).or_else(|| self.order.clone());
        let priority = match order {
            Some(names) => names.iter().map(|n| self.index_of(n)).collect::<Result<Vec<_>, _>>()?,
            None => (0..self.variables.len()).filter(|&i| i != dehom).collect(),
        };
        ValuationConfig::new(self.variables.len(), dehom, priority).map_err(|e| ParseError::Invalid(e.to_string()))
    }

    pub fn display(&self, p: &MultiPoly) -> String {
        p.display_with(&self.variables)
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn names(rest: &str, line: usize, offset: usize) -> Result<Vec<String>, ParseError> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in rest.char_indices().chain(std::iter::once((rest.len(), ' '))) {
        let sep = c.is_whitespace() || c == ',';
        match (start, sep) {
            (None, false) => start = Some(i),
            (Some(s), true) => {
                let word = &rest[s..i];
                if !word.starts_with(is_name_start) || !word.chars().all(is_name_char) {
                    return Err(ParseError::SyntaxError { line, column: offset + s + 1, message: format!("bad variable name `{word}`") });
                }
                out.push(word.to_string());
                start = None;
            }
            _ => {}
        }
    }
    Ok(out)
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile, ParseError> {
    let mut variables: Option<Vec<String>> = None;
    let mut order = None;
    let mut dehom = None;
    let mut gens: Vec<(usize, usize, String)> = Vec::new();
    let mut in_gens = false;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        let trimmed = body.trim();
        if in_gens {
            gens.push((line, indent, body[indent..].to_string()));
            continue;
        }
        let Some((key, rest)) = trimmed.split_once(':') else {
            return Err(ParseError::SyntaxError { line, column: indent + 1, message: "expected `vars:`, `order:`, `dehom:` or `gens:`".into() });
        };
        let offset = indent + key.len() + 1;
        match key.trim() {
            "vars" => {
                if variables.is_some() {
                    return Err(ParseError::SyntaxError { line, column: indent + 1, message: "`vars:` given twice".into() });
                }
                let v = names(rest, line, offset)?;
                for (i, name) in v.iter().enumerate() {
                    if v[..i].contains(name) {
                        return Err(ParseError::Invalid(format!("variable `{name}` declared twice")));
                    }
                }
                variables = Some(v);
            }
            "order" => order = Some(names(rest, line, offset)?),
            "dehom" => {
                let v = names(rest, line, offset)?;
                if v.len() != 1 {
                    return Err(ParseError::SyntaxError { line, column: offset + 1, message: "`dehom:` takes one variable".into() });
                }
                dehom = v.into_iter().next();
            }
            "gens" => {
                in_gens = true;
                if !rest.trim().is_empty() {
                    let lead = rest.len() - rest.trim_start().len();
                    gens.push((line, offset + lead, rest.trim_start().to_string()));
                }
            }
            other => {
                return Err(ParseError::SyntaxError { line, column: indent + 1, message: format!("unknown header `{other}`") });
            }
        }
    }

    let variables = variables.ok_or_else(|| ParseError::Invalid("missing `vars:` line".into()))?;
    if variables.len() < 2 {
        return Err(ParseError::TooFewVariables(variables.len()));
    }
    if !in_gens {
        return Err(ParseError::Invalid("missing `gens:` line".into()));
    }
    if gens.is_empty() {
        return Err(ParseError::Invalid("no generators after `gens:`".into()));
    }
    let mut generators = Vec::with_capacity(gens.len());
    for (line, col, src) in &gens {
        let p = Expr { src, pos: 0, line: *line, col0: *col, vars: &variables }.parse()?;
        if !p.is_zero() && !p.is_homogeneous() {
            return Err(ParseError::NotHomogeneous { line: *line, generator: src.trim().to_string() });
        }
        generators.push(p);
    }
    for name in order.iter().flatten().chain(dehom.iter()) {
        if !variables.contains(name) {
            return Err(ParseError::Invalid(format!("unknown variable `{name}`")));
        }
    }
    Ok(IdealFile { variables, generators, order, dehom })
}

/// Recursive descent over one generator line.
struct Expr<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col0: usize,
    vars: &'a [String],
}

impl Expr<'_> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::SyntaxError { line: self.line, column: self.col0 + self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(mut self) -> Result<MultiPoly, ParseError> {
        let p = self.expr()?;
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.err(format!("unexpected `{}`", self.peek().unwrap())));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let n = self.vars.len();
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                break;
            }
        }
        debug_assert_eq!(acc.nvars(), n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected a nonnegative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let n = self.vars.len();
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                self.digits();
                let save = self.pos;
                if self.eat('/') {
                    self.skip_ws();
                    if self.digits().is_empty() {
                        return Err(self.err("expected a denominator"));
                    }
                } else {
                    self.pos = save;
                }
                let text: String = self.src[start..self.pos].chars().filter(|c| !c.is_whitespace()).collect();
                let c: Rational = parse_rational(&text).map_err(|e| ParseError::SyntaxError {
                    line: self.line,
                    column: self.col0 + start + 1,
                    message: e.to_string(),
                })?;
                Ok(MultiPoly::constant(n, c))
            }
            Some(c) if is_name_start(c) => {
                let start = self.pos;
                while self.peek().is_some_and(is_name_char) {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                match self.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(MultiPoly::monomial(ExponentVector::unit(n, i), Rational::from_integer(1.into()))),
                    None => {
                        self.pos = start;
                        Err(self.err(format!("unknown variable `{name}`")))
                    }
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}
