//! Reading and writing ideals.
//!
//! Text form: `n=5; x1*x4, x2*x5, x1*x2*x3, x3*x4*x5`. Whitespace is ignored and `1`
//! stands for the unit monomial. Record form is one JSON object per ideal:
//! `{"n":5,"generators":[[1,4],[2,5],[1,2,3],[3,4,5]],"label":"mixed"}`.

use fideal_core::{IdealOptions, MonomialIdeal, SquareFreeMonomial};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: variable x{index} outside x1..x{n}")]
    IndexOutOfRange { line: usize, column: usize, index: usize, n: usize },
    #[error("line {line}, column {column}: the unit monomial needs --allow-unit")]
    UnitNotAllowed { line: usize, column: usize },
    #[error("missing `n=<count>;` header")]
    MissingN,
    #[error("record: {0}")]
    Record(String),
    #[error(transparent)]
    Ideal(#[from] fideal_core::Error),
}

/// The structured form of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDocument {
    pub n: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl IdealDocument {
    pub fn from_ideal(ideal: &MonomialIdeal, label: Option<String>) -> Self {
        Self {
            n: ideal.ambient(),
            generators: ideal.generators().iter().map(|g| g.vars().collect()).collect(),
            label,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub ideal: MonomialIdeal,
    pub label: Option<String>,
    /// Set when the given generators were not already minimal.
    pub warning: Option<String>,
}

/// Parses either form; input starting with `{` is a record.
pub fn parse_ideal(input: &str, allow_unit: bool) -> Result<Parsed, ParseError> {
    if input.trim_start().starts_with('{') {
        parse_record(input, allow_unit)
    } else {
        parse_text(input, allow_unit)
    }
}

/// One ideal per nonblank line; lines starting with `#` are skipped.
pub fn parse_lines(input: &str, allow_unit: bool) -> Result<Vec<Parsed>, ParseError> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(k, l)| {
            parse_ideal(l, allow_unit).map_err(|e| match e {
                ParseError::Syntax { column, message, .. } => {
                    ParseError::Syntax { line: k + 1, column, message }
                }
                ParseError::IndexOutOfRange { column, index, n, .. } => {
                    ParseError::IndexOutOfRange { line: k + 1, column, index, n }
                }
                ParseError::UnitNotAllowed { column, .. } => {
                    ParseError::UnitNotAllowed { line: k + 1, column }
                }
                other => other,
            })
        })
        .collect()
}

pub fn parse_record(input: &str, allow_unit: bool) -> Result<Parsed, ParseError> {
    let doc: IdealDocument =
        serde_json::from_str(input.trim()).map_err(|e| ParseError::Record(e.to_string()))?;
    let mut gens = Vec::with_capacity(doc.generators.len());
    for vars in &doc.generators {
        if let Some(&bad) = vars.iter().find(|&&v| v == 0 || v > doc.n) {
            return Err(ParseError::Record(format!("variable x{bad} outside x1..x{}", doc.n)));
        }
        if vars.is_empty() && !allow_unit {
            return Err(ParseError::Record("the unit monomial needs --allow-unit".into()));
        }
        gens.push(SquareFreeMonomial::new(doc.n, vars.iter().copied())?);
    }
    build(doc.n, gens, doc.label, allow_unit)
}

fn build(
    n: usize,
    gens: Vec<SquareFreeMonomial>,
    label: Option<String>,
    allow_unit: bool,
) -> Result<Parsed, ParseError> {
    let given = gens.len();
    let ideal = MonomialIdeal::with_options(n, gens, IdealOptions { allow_unit })?;
    let warning = (ideal.num_generators() != given).then(|| {
        format!(
            "input was not minimal: {given} generators given, {} after minimalization",
            ideal.num_generators()
        )
    });
    Ok(Parsed { ideal, label, warning })
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Self { chars: input.char_indices().peekable(), line: 1, column: 1 }
    }

    fn skip_ws(&mut self) {
        while let Some(&(_, c)) = self.chars.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, column: self.column, message: message.into() }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        digits.parse().map_err(|_| self.error("number too large"))
    }
}

pub fn parse_text(input: &str, allow_unit: bool) -> Result<Parsed, ParseError> {
    let mut s = Scanner::new(input);
    match s.peek() {
        Some('n') => {
            s.bump();
        }
        _ => return Err(ParseError::MissingN),
    }
    s.expect('=')?;
    let n = s.number()?;
    fideal_core::monomial::check_ambient(n)?;
    s.expect(';')?;

    let mut gens = Vec::new();
    if s.peek().is_some() {
        loop {
            gens.push(monomial(&mut s, n, allow_unit)?);
            match s.peek() {
                Some(',') => {
                    s.bump();
                }
                None => break,
                Some(c) => return Err(s.error(format!("expected `,` or end of input, found `{c}`"))),
            }
        }
    }
    build(n, gens, None, allow_unit)
}

fn monomial(s: &mut Scanner<'_>, n: usize, allow_unit: bool) -> Result<SquareFreeMonomial, ParseError> {
    let (line, column) = {
        s.skip_ws();
        (s.line, s.column)
    };
    if s.peek() == Some('1') {
        s.bump();
        if !allow_unit {
            return Err(ParseError::UnitNotAllowed { line, column });
        }
        return Ok(SquareFreeMonomial::unit(n)?);
    }
    let mut vars = Vec::new();
    loop {
        s.skip_ws();
        let (line, column) = (s.line, s.column);
        match s.peek() {
            Some('x') => {
                s.bump();
            }
            Some(c) => return Err(s.error(format!("expected a variable `x<i>`, found `{c}`"))),
            None => return Err(s.error("expected a variable `x<i>`, found end of input")),
        }
        let index = s.number()?;
        if index == 0 || index > n {
            return Err(ParseError::IndexOutOfRange { line, column, index, n });
        }
        if vars.contains(&index) {
            return Err(ParseError::Syntax {
                line,
                column,
                message: format!("x{index} repeated; monomials must be square-free"),
            });
        }
        vars.push(index);
        if s.peek() == Some('*') {
            s.bump();
        } else {
            break;
        }
    }
    Ok(SquareFreeMonomial::new(n, vars)?)
}

/// `n=5; x1*x4, x2*x5, ...` in canonical generator order.
pub fn render_text(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    if gens.is_empty() {
        format!("n={};", ideal.ambient())
    } else {
        format!("n={}; {}", ideal.ambient(), gens.join(", "))
    }
}

pub fn render_record(ideal: &MonomialIdeal, label: Option<&str>) -> String {
    let doc = IdealDocument::from_ideal(ideal, label.map(str::to_owned));
    serde_json::to_string(&doc).expect("documents always serialize")
}
