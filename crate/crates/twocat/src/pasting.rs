//! A linear notation for pasting 2-cells.
//!
//! ```text
//! expr   := term | expr "v" term
//! term   := factor | term "." factor
//! factor := IDENT | "id" "(" IDENT ")" | "(" expr ")"
//! ```
//!
//! `x v y` stacks `x` on top of `y`, i.e. the vertical composite `y ∘ x`.
//! `b . a` is the horizontal composite `b a` (read right to left, `a`
//! first). Identifiers match `[A-Za-z_][A-Za-z0-9_']*`; `v` is reserved.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::core::traits::TwoCategory;
use crate::core::TwoCat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElevatorExpr {
    Cell(String),
    Id(String),
    /// `Vert(top, bottom)`.
    Vert(Box<ElevatorExpr>, Box<ElevatorExpr>),
    /// `Horiz(left, right)`: the right operand acts first.
    Horiz(Box<ElevatorExpr>, Box<ElevatorExpr>),
}

impl fmt::Display for ElevatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElevatorExpr::Cell(n) => f.write_str(n),
            ElevatorExpr::Id(n) => write!(f, "id({n})"),
            ElevatorExpr::Vert(a, b) => write!(f, "({a} v {b})"),
            ElevatorExpr::Horiz(a, b) => write!(f, "({a} . {b})"),
        }
    }
}

impl ElevatorExpr {
    pub fn cell(n: &str) -> Self {
        ElevatorExpr::Cell(n.to_string())
    }
    pub fn id(n: &str) -> Self {
        ElevatorExpr::Id(n.to_string())
    }
    pub fn vert(top: ElevatorExpr, bottom: ElevatorExpr) -> Self {
        ElevatorExpr::Vert(Box::new(top), Box::new(bottom))
    }
    pub fn horiz(left: ElevatorExpr, right: ElevatorExpr) -> Self {
        ElevatorExpr::Horiz(Box::new(left), Box::new(right))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PastingError {
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("boundary mismatch in `{0}`")]
    BoundaryMismatch(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    V,
    Dot,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, PastingError> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c == '.' {
            out.push((i, Tok::Dot));
            i += 1;
        } else if c == '(' {
            out.push((i, Tok::LParen));
            i += 1;
        } else if c == ')' {
            out.push((i, Tok::RParen));
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_' || b[i] == b'\'') {
                i += 1;
            }
            let word = &text[start..i];
            out.push((start, if word == "v" { Tok::V } else { Tok::Ident(word.to_string()) }));
        } else {
            return Err(PastingError::SyntaxError { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }
    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }
    fn err<T>(&self, msg: &str) -> Result<T, PastingError> {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(t) => format!("{t:?}"),
        };
        Err(PastingError::SyntaxError { pos: self.pos(), msg: format!("{msg}, found {found}") })
    }
    fn expr(&mut self) -> Result<ElevatorExpr, PastingError> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Tok::V) {
            self.at += 1;
            let rhs = self.term()?;
            lhs = ElevatorExpr::vert(lhs, rhs);
        }
        Ok(lhs)
    }
    fn term(&mut self) -> Result<ElevatorExpr, PastingError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Dot) {
            self.at += 1;
            let rhs = self.factor()?;
            lhs = ElevatorExpr::horiz(lhs, rhs);
        }
        Ok(lhs)
    }
    fn factor(&mut self) -> Result<ElevatorExpr, PastingError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "id" && self.peek() == Some(&Tok::LParen) {
                    self.at += 1;
                    let Some(Tok::Ident(arg)) = self.peek().cloned() else {
                        return self.err("expected a 1-cell name");
                    };
                    self.at += 1;
                    if self.peek() != Some(&Tok::RParen) {
                        return self.err("expected `)`");
                    }
                    self.at += 1;
                    Ok(ElevatorExpr::Id(arg))
                } else {
                    Ok(ElevatorExpr::Cell(name))
                }
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(e)
            }
            _ => self.err("expected a cell, `id(..)` or `(`"),
        }
    }
}

pub fn parse_elevator(text: &str) -> Result<ElevatorExpr, PastingError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Name bindings for atoms, over any 2-category.
pub struct CellEnv<'a, K: TwoCategory> {
    pub k: &'a K,
    pub cells: HashMap<String, K::Cell>,
    pub arrows: HashMap<String, K::Arrow>,
}

impl<'a, K: TwoCategory> CellEnv<'a, K> {
    pub fn new(k: &'a K) -> Self {
        CellEnv { k, cells: HashMap::new(), arrows: HashMap::new() }
    }
    pub fn bind_cell(&mut self, name: &str, c: K::Cell) -> &mut Self {
        self.cells.insert(name.to_string(), c);
        self
    }
    pub fn bind_arrow(&mut self, name: &str, f: K::Arrow) -> &mut Self {
        self.arrows.insert(name.to_string(), f);
        self
    }
}

impl<'a> CellEnv<'a, TwoCat> {
    /// Binds every cell and 1-cell of `k` under its own name.
    pub fn of_names(k: &'a TwoCat) -> Self {
        let mut env = CellEnv::new(k);
        for c in k.cells() {
            env.cells.insert(k.cell_name(c).to_string(), c);
        }
        for f in k.arrows() {
            env.arrows.insert(k.arrow_name(f).to_string(), f);
        }
        env
    }
}

/// Folds the tree through the 2-category operations.
pub fn evaluate<K: TwoCategory>(e: &ElevatorExpr, env: &CellEnv<'_, K>) -> Result<K::Cell, PastingError> {
    let k = env.k;
    match e {
        ElevatorExpr::Cell(n) => env.cells.get(n).cloned().ok_or_else(|| PastingError::UnknownAtom(n.clone())),
        ElevatorExpr::Id(n) => {
            let f = env.arrows.get(n).ok_or_else(|| PastingError::UnknownAtom(n.clone()))?;
            Ok(k.id_cell(f))
        }
        ElevatorExpr::Vert(top, bottom) => {
            let a = evaluate(top, env)?;
            let b = evaluate(bottom, env)?;
            k.vertical(&b, &a).ok_or_else(|| PastingError::BoundaryMismatch(e.to_string()))
        }
        ElevatorExpr::Horiz(left, right) => {
            let b = evaluate(left, env)?;
            let a = evaluate(right, env)?;
            k.horizontal(&b, &a).ok_or_else(|| PastingError::BoundaryMismatch(e.to_string()))
        }
    }
}

/// True iff both expressions denote the same cell. Outer boundaries must agree.
pub fn equal<K: TwoCategory>(e1: &ElevatorExpr, e2: &ElevatorExpr, env: &CellEnv<'_, K>) -> Result<bool, PastingError> {
    let a = evaluate(e1, env)?;
    let b = evaluate(e2, env)?;
    let k = env.k;
    if k.cell_src(&a) != k.cell_src(&b) || k.cell_tgt(&a) != k.cell_tgt(&b) {
        return Err(PastingError::BoundaryMismatch(format!("{e1} vs {e2}")));
    }
    Ok(a == b)
}

/// The three sides of the elevator equality for `α: f ⇒ g` (A→B) and
/// `α′: f′ ⇒ g′` (B→C): `(α′ id_g) ∘ (id_{f′} α)`, `(id_{g′} α) ∘ (α′ id_f)`
/// and `α′α`.
pub fn elevator_sides<K: TwoCategory>(k: &K, alpha: &K::Cell, alpha2: &K::Cell) -> Option<[K::Cell; 3]> {
    let (f, g) = (k.cell_src(alpha), k.cell_tgt(alpha));
    let (f2, g2) = (k.cell_src(alpha2), k.cell_tgt(alpha2));
    let first = k.vertical(&k.rwhisker(alpha2, &g)?, &k.lwhisker(&f2, alpha)?)?;
    let second = k.vertical(&k.lwhisker(&g2, alpha)?, &k.rwhisker(alpha2, &f)?)?;
    let third = k.horizontal(alpha2, alpha)?;
    Some([first, second, third])
}
