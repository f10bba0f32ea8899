//! Text formats: programs (`.adl`), databases (`.adb`), update sets (`.adu`)
//! and interpretations.
//!
//! ```text
//! rule    := head [":-" literal ("," literal)*] "."
//! head    := ["+" | "-"] atom
//! literal := ["not"] ["+" | "-"] atom | term ("=" | "!=") term
//! atom    := pred ["(" term ("," term)* ")"]
//! fact    := atom ("." | "?")          % database: true or unknown
//! update  := ("+" | "-") atom "."      % update set
//! ```
//!
//! Variables start with an uppercase letter or `_`; constants start with a
//! lowercase letter or digit, or are double-quoted. `%` starts a line
//! comment. Rendering is the `Display` implementation of each type, which
//! this module parses back to an equal value.

use std::fmt;
use std::iter::Peekable;
use std::str::CharIndices;

use actlog_core::{
    Atom, Builtin, Database, DatabaseError, DeltaSet, FactStatus, Head, Interpretation, Literal,
    Polarity, Program, Rule, Span, Term, TruthValue, UpdateAtom, UpdateProgram, ValidationError,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("{span}: {message}")]
    Syntax { span: Span, message: String },
    #[error("{0}")]
    Validation(#[from] ValidationError),
    #[error("{span}: {source}")]
    Database { span: Span, source: DatabaseError },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Quoted(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Question,
    Implies,
    Plus,
    Minus,
    Eq,
    Neq,
    Not,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Quoted(s) => write!(f, "\"{s}\""),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Question => f.write_str("`?`"),
            Tok::Implies => f.write_str("`:-`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Neq => f.write_str("`!=`"),
            Tok::Not => f.write_str("`not`"),
        }
    }
}

fn syntax(span: Span, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { span, message: message.into() }
}

struct Lexer<'a> {
    src: &'a str,
    chars: Peekable<CharIndices<'a>>,
    line: u32,
    column: u32,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, chars: src.char_indices().peekable(), line: 1, column: 1 }
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let next = self.chars.next();
        if let Some((_, c)) = next {
            if c == '\n' {
                self.line += 1;
                self.column = 1;
            } else {
                self.column += 1;
            }
        }
        next
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|(_, c)| *c)
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Span)>, FormatError> {
        let mut out = Vec::new();
        loop {
            let span = Span { line: self.line, column: self.column };
            let Some((start, c)) = self.bump() else {
                return Ok(out);
            };
            let tok = match c {
                c if c.is_whitespace() => continue,
                '%' => {
                    while self.peek().is_some_and(|c| c != '\n') {
                        self.bump();
                    }
                    continue;
                }
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '?' => Tok::Question,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '=' => Tok::Eq,
                ':' if self.peek() == Some('-') => {
                    self.bump();
                    Tok::Implies
                }
                '!' if self.peek() == Some('=') => {
                    self.bump();
                    Tok::Neq
                }
                '"' => Tok::Quoted(self.quoted(span)?),
                c if c.is_ascii_alphanumeric() || c == '_' || c == '@' => {
                    let mut end = start + c.len_utf8();
                    while let Some(&(i, c)) = self.chars.peek() {
                        if !actlog_core::model::is_ident_char(c) {
                            break;
                        }
                        end = i + c.len_utf8();
                        self.bump();
                    }
                    match &self.src[start..end] {
                        "not" => Tok::Not,
                        word => Tok::Ident(word.to_string()),
                    }
                }
                other => return Err(syntax(span, format!("unexpected character {other:?}"))),
            };
            out.push((tok, span));
        }
    }

    fn quoted(&mut self, span: Span) -> Result<String, FormatError> {
        let mut s = String::new();
        loop {
            match self.bump() {
                None => return Err(syntax(span, "unterminated string")),
                Some((_, '"')) => return Ok(s),
                Some((_, '\\')) => match self.bump() {
                    Some((_, '"')) => s.push('"'),
                    Some((_, '\\')) => s.push('\\'),
                    Some((_, 'n')) => s.push('\n'),
                    _ => return Err(syntax(span, "bad escape in string")),
                },
                Some((_, c)) => s.push(c),
            }
        }
    }
}

struct Parser {
    tokens: Vec<(Tok, Span)>,
    pos: usize,
    end: Span,
}

impl Parser {
    fn new(src: &str) -> Result<Self, FormatError> {
        let lines = src.split('\n').count() as u32;
        let last = src.rsplit('\n').next().unwrap_or("").chars().count() as u32;
        Ok(Self { tokens: Lexer::new(src).tokens()?, pos: 0, end: Span { line: lines, column: last + 1 } })
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.tokens.get(self.pos + 1).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        self.tokens.get(self.pos).map(|(_, s)| *s).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected(&self, wanted: &str) -> FormatError {
        match self.peek() {
            Some(t) => syntax(self.span(), format!("expected {wanted}, found {t}")),
            None => syntax(self.span(), format!("expected {wanted}, found end of input")),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), FormatError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.to_string()))
        }
    }

    fn term(&mut self) -> Result<Term, FormatError> {
        match self.peek() {
            Some(Tok::Quoted(s)) => {
                let t = Term::constant(s.clone());
                self.pos += 1;
                Ok(t)
            }
            Some(Tok::Ident(s)) if !s.starts_with('@') => {
                let first = s.chars().next().expect("identifiers are non-empty");
                let t = if first.is_ascii_uppercase() || first == '_' {
                    Term::var(s.clone())
                } else {
                    Term::constant(s.clone())
                };
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.unexpected("a term")),
        }
    }

    fn atom(&mut self) -> Result<Atom, FormatError> {
        let predicate = match self.peek() {
            Some(Tok::Ident(s)) if !s.starts_with(|c: char| c.is_ascii_uppercase() || c == '_') => s.clone(),
            _ => return Err(self.unexpected("a predicate")),
        };
        self.pos += 1;
        let mut args = Vec::new();
        if self.eat(&Tok::LParen) {
            loop {
                args.push(self.term()?);
                if self.eat(&Tok::RParen) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        Ok(Atom::new(predicate, args))
    }

    fn polarity(&mut self) -> Option<Polarity> {
        if self.eat(&Tok::Plus) {
            Some(Polarity::Insert)
        } else if self.eat(&Tok::Minus) {
            Some(Polarity::Delete)
        } else {
            None
        }
    }

    fn literal(&mut self) -> Result<Literal, FormatError> {
        let comparison = matches!(self.peek2(), Some(Tok::Eq | Tok::Neq))
            && matches!(self.peek(), Some(Tok::Ident(_) | Tok::Quoted(_)));
        if comparison {
            let left = self.term()?;
            let op = match self.next() {
                Some(Tok::Eq) => Builtin::Eq,
                _ => Builtin::Neq,
            };
            let right = self.term()?;
            return Ok(Literal::builtin(op, left, right));
        }
        let positive = !self.eat(&Tok::Not);
        Ok(match self.polarity() {
            Some(polarity) => Literal::upd(positive, UpdateAtom { polarity, atom: self.atom()? }),
            None => Literal::Std { positive, atom: self.atom()? },
        })
    }

    fn rule(&mut self) -> Result<Rule, FormatError> {
        let origin = self.span();
        let head = match self.polarity() {
            Some(polarity) => Head::Upd(UpdateAtom { polarity, atom: self.atom()? }),
            None => Head::Std(self.atom()?),
        };
        let mut body = Vec::new();
        if self.eat(&Tok::Implies) {
            loop {
                body.push(self.literal()?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::Dot)?;
        Ok(Rule::new(head, body).with_origin(origin))
    }
}

/// Parses rules without validating them. Reserved `@` predicates are
/// accepted, so rewritten programs read back.
pub fn parse_rules(src: &str) -> Result<Vec<Rule>, FormatError> {
    let mut p = Parser::new(src)?;
    let mut rules = Vec::new();
    while !p.at_end() {
        rules.push(p.rule()?);
    }
    Ok(rules)
}

/// Parses and validates a program.
pub fn parse_program(src: &str) -> Result<Program, FormatError> {
    Ok(Program::new(parse_rules(src)?)?)
}

/// Parses a database: `atom.` is a true fact, `atom?` an unknown one.
pub fn parse_database(src: &str) -> Result<Database, FormatError> {
    let mut p = Parser::new(src)?;
    let mut db = Database::new();
    while !p.at_end() {
        let span = p.span();
        let atom = p.atom()?;
        let status = match p.next() {
            Some(Tok::Dot) => FactStatus::True,
            Some(Tok::Question) => FactStatus::Unknown,
            _ => {
                p.pos -= 1;
                return Err(p.unexpected("`.` or `?`"));
            }
        };
        db.insert(atom, status).map_err(|source| FormatError::Database { span, source })?;
    }
    Ok(db)
}

/// Parses an update set of `+atom.` and `-atom.` lines.
pub fn parse_delta(src: &str) -> Result<DeltaSet, FormatError> {
    let mut p = Parser::new(src)?;
    let mut delta = DeltaSet::new();
    while !p.at_end() {
        let span = p.span();
        let Some(polarity) = p.polarity() else {
            return Err(p.unexpected("`+` or `-`"));
        };
        let atom = p.atom()?;
        p.expect(Tok::Dot)?;
        delta
            .insert(UpdateAtom { polarity, atom })
            .map_err(|source| FormatError::Database { span, source })?;
    }
    Ok(delta)
}

/// Parses `a. not b. c?` into an interpretation over the listed atoms.
pub fn parse_interpretation(src: &str) -> Result<Interpretation, FormatError> {
    let mut p = Parser::new(src)?;
    let mut values = Vec::new();
    while !p.at_end() {
        let span = p.span();
        let negated = p.eat(&Tok::Not);
        let atom = p.atom()?;
        if !atom.is_ground() {
            return Err(syntax(span, format!("{atom} is not ground")));
        }
        let value = match (negated, p.next()) {
            (true, Some(Tok::Dot)) => TruthValue::False,
            (false, Some(Tok::Dot)) => TruthValue::True,
            (false, Some(Tok::Question)) => TruthValue::Undefined,
            _ => {
                p.pos -= 1;
                return Err(p.unexpected(if negated { "`.`" } else { "`.` or `?`" }));
            }
        };
        values.push((atom, value));
    }
    Ok(Interpretation::from_values(values))
}

/// A program and its update set.
pub fn parse_update_program(program: &str, delta: &str) -> Result<UpdateProgram, FormatError> {
    Ok(UpdateProgram::new(parse_delta(delta)?, parse_program(program)?)?)
}

/// Canonical text of a program, database, update set or interpretation.
pub fn render(x: &impl fmt::Display) -> String {
    x.to_string()
}
