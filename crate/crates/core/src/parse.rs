//! Surface syntax: a backtracking recursive-descent parser and a printer.
//!
//! ```text
//! term   := 'bd' IDENT '.' term | app
//! app    := prim ('@' stack)*
//! prim   := 'car' '(' stack ')' | '#' CONST | '(' term ')'
//! stack  := term '::' stack | 'cdr' ['^' NAT] '(' stack ')' | 'nil' | IDENT | '(' stack ')'
//! ```

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::constants;
use crate::syntax::{Expr, Stack, Term, VarName};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at line {line}, column {col}: expected {}", expected.join(" | "))]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Bd,
    Car,
    Cdr,
    Nil,
    Ident(String),
    Const(String),
    Nat(usize),
    Dot,
    At,
    Cons,
    LParen,
    RParen,
    Caret,
    Eof,
    /// Unrecognised input; always a parse error.
    Bad(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let word = |start: usize, pred: &dyn Fn(char) -> bool| {
        let mut j = start;
        while j < chars.len() && pred(chars[j]) {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let (tok, len) = match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
                continue;
            }
            '.' => (Tok::Dot, 1),
            '@' => (Tok::At, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '^' => (Tok::Caret, 1),
            ':' if chars.get(i + 1) == Some(&':') => (Tok::Cons, 2),
            '#' => {
                let j = word(i + 1, &|c| c.is_ascii_alphanumeric() || c == '_');
                let name: String = chars[i + 1..j].iter().collect();
                (Tok::Const(name), j - i)
            }
            c if c.is_ascii_digit() => {
                let j = word(i, &|c| c.is_ascii_digit());
                let s: String = chars[i..j].iter().collect();
                match s.parse() {
                    Ok(n) => (Tok::Nat(n), j - i),
                    Err(_) => (Tok::Bad(c), j - i),
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let j = word(i, &|c| c.is_ascii_alphanumeric() || c == '_');
                let s: String = chars[i..j].iter().collect();
                let tok = match s.as_str() {
                    "bd" => Tok::Bd,
                    "car" => Tok::Car,
                    "cdr" => Tok::Cdr,
                    "nil" => Tok::Nil,
                    _ => Tok::Ident(s),
                };
                (tok, j - i)
            }
            other => (Tok::Bad(other), 1),
        };
        out.push(Token {
            tok,
            line: tline,
            col: tcol,
        });
        i += len;
        col += len;
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    out
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    furthest: usize,
    expected: BTreeSet<String>,
}

type PResult<T> = Result<T, ()>;

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            toks: lex(text),
            pos: 0,
            furthest: 0,
            expected: BTreeSet::new(),
        }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn fail<T>(&mut self, what: &str) -> PResult<T> {
        if self.pos > self.furthest {
            self.furthest = self.pos;
            self.expected.clear();
        }
        if self.pos == self.furthest {
            self.expected.insert(what.to_string());
        }
        Err(())
    }

    fn eat(&mut self, tok: &Tok, what: &str) -> PResult<()> {
        if self.peek() == tok {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(what)
        }
    }

    fn error(&self) -> SyntaxError {
        let t = &self.toks[self.furthest.min(self.toks.len() - 1)];
        SyntaxError {
            line: t.line,
            col: t.col,
            expected: self.expected.iter().cloned().collect(),
        }
    }

    fn ident(&mut self) -> PResult<VarName> {
        if let Tok::Ident(s) = self.peek() {
            if let Some(v) = VarName::parse(s) {
                self.pos += 1;
                return Ok(v);
            }
        }
        self.fail("identifier")
    }

    fn term(&mut self) -> PResult<Term> {
        if self.peek() == &Tok::Bd {
            self.pos += 1;
            let v = self.ident()?;
            self.eat(&Tok::Dot, "'.'")?;
            let body = self.term()?;
            return Ok(Term::abs(v, body));
        }
        let mut t = self.prim()?;
        while self.peek() == &Tok::At {
            self.pos += 1;
            let s = self.stack()?;
            t = Term::app(t, s);
        }
        Ok(t)
    }

    fn prim(&mut self) -> PResult<Term> {
        match self.peek().clone() {
            Tok::Car => {
                self.pos += 1;
                self.eat(&Tok::LParen, "'('")?;
                let s = self.stack()?;
                self.eat(&Tok::RParen, "')'")?;
                Ok(Term::car(s))
            }
            Tok::Const(name) => match constants::lookup(&name) {
                Some(t) => {
                    self.pos += 1;
                    Ok(t)
                }
                None => self.fail("constant name"),
            },
            Tok::LParen => {
                self.pos += 1;
                let t = self.term()?;
                self.eat(&Tok::RParen, "')'")?;
                Ok(t)
            }
            _ => self.fail("term"),
        }
    }

    fn stack(&mut self) -> PResult<Stack> {
        match self.peek().clone() {
            Tok::Nil => {
                self.pos += 1;
                Ok(Stack::Nil)
            }
            Tok::Ident(_) => Ok(Stack::Var(self.ident()?)),
            Tok::Cdr => {
                self.pos += 1;
                let mut k = 1;
                if self.peek() == &Tok::Caret {
                    self.pos += 1;
                    match *self.peek() {
                        Tok::Nat(n) => {
                            self.pos += 1;
                            k = n;
                        }
                        _ => return self.fail("natural number"),
                    }
                }
                self.eat(&Tok::LParen, "'('")?;
                let s = self.stack()?;
                self.eat(&Tok::RParen, "')'")?;
                Ok(Stack::cdr_n(s, k))
            }
            Tok::LParen => {
                let start = self.pos;
                if let Ok(t) = self.term() {
                    if self.peek() == &Tok::Cons {
                        self.pos += 1;
                        let tail = self.stack()?;
                        return Ok(Stack::push(t, tail));
                    }
                    let _ = self.fail::<()>("'::'");
                }
                self.pos = start + 1;
                let s = self.stack()?;
                self.eat(&Tok::RParen, "')'")?;
                Ok(s)
            }
            _ => {
                let t = self.term()?;
                self.eat(&Tok::Cons, "'::'")?;
                let tail = self.stack()?;
                Ok(Stack::push(t, tail))
            }
        }
    }

    fn finish<T>(&mut self, r: PResult<T>) -> Result<T, SyntaxError> {
        match r {
            Ok(v) if self.peek() == &Tok::Eof => Ok(v),
            Ok(_) => {
                let _ = self.fail::<()>("end of input");
                Err(self.error())
            }
            Err(()) => Err(self.error()),
        }
    }
}

pub fn parse_term(text: &str) -> Result<Term, SyntaxError> {
    let mut p = Parser::new(text);
    let r = p.term();
    p.finish(r)
}

pub fn parse_stack(text: &str) -> Result<Stack, SyntaxError> {
    let mut p = Parser::new(text);
    let r = p.stack();
    p.finish(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sort {
    Term,
    Stack,
}

pub fn parse(text: &str, sort: Sort) -> Result<Expr, SyntaxError> {
    match sort {
        Sort::Term => parse_term(text).map(Expr::Term),
        Sort::Stack => parse_stack(text).map(Expr::Stack),
    }
}

/// Parses a term if possible, otherwise a stack. Reports the error that got
/// further into the input.
pub fn parse_expr(text: &str) -> Result<Expr, SyntaxError> {
    match parse_term(text) {
        Ok(t) => Ok(Expr::Term(t)),
        Err(te) => parse_stack(text).map(Expr::Stack).map_err(|se| {
            if (se.line, se.col) > (te.line, te.col) {
                se
            } else {
                te
            }
        }),
    }
}

// ---------------------------------------------------------------------------
// Printing

fn write_term(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Term::Abs(b, body) => {
            write!(f, "bd {b}. ")?;
            write_term(body, f)
        }
        Term::App(fun, arg) => {
            write_fun(fun, f)?;
            f.write_str(" @ ")?;
            write_stack(arg, f)
        }
        Term::Car(s) => {
            f.write_str("car(")?;
            write_stack(s, f)?;
            f.write_str(")")
        }
    }
}

fn write_fun(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let Term::Abs(..) = t {
        f.write_str("(")?;
        write_term(t, f)?;
        f.write_str(")")
    } else {
        write_term(t, f)
    }
}

fn write_stack(s: &Stack, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match s {
        Stack::Nil => f.write_str("nil"),
        Stack::Var(v) => write!(f, "{v}"),
        Stack::Cdr(_) => {
            let mut k = 0;
            let mut cur = s;
            while let Stack::Cdr(inner) = cur {
                k += 1;
                cur = inner;
            }
            if k == 1 {
                f.write_str("cdr(")?;
            } else {
                write!(f, "cdr^{k}(")?;
            }
            write_stack(cur, f)?;
            f.write_str(")")
        }
        Stack::Push(h, t) => {
            write_term(h, f)?;
            f.write_str(" :: ")?;
            write_stack(t, f)
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(self, f)
    }
}

impl fmt::Display for Stack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_stack(self, f)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Term(t) => write_term(t, f),
            Expr::Stack(s) => write_stack(s, f),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(self, f)
    }
}

impl fmt::Debug for Stack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_stack(self, f)
    }
}
