use std::fmt;

use super::{Atom, BlnError};

/// Boolean formula over atoms.
#[derive(Debug, Clone, PartialEq)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Distinct atoms in first-occurrence order.
    pub fn atoms(&self) -> Vec<&Atom> {
        fn walk<'a>(f: &'a Formula, out: &mut Vec<&'a Atom>) {
            match f {
                Formula::Atom(a) => {
                    if !out.contains(&a) {
                        out.push(a);
                    }
                }
                Formula::Not(x) => walk(x, out),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn eval(&self, value: &dyn Fn(&Atom) -> bool) -> bool {
        match self {
            Formula::Atom(a) => value(a),
            Formula::Not(x) => !x.eval(value),
            Formula::And(a, b) => a.eval(value) && b.eval(value),
            Formula::Or(a, b) => a.eval(value) || b.eval(value),
            Formula::Implies(a, b) => !a.eval(value) || b.eval(value),
        }
    }

    /// Applies `f` to every atom.
    pub fn map_atoms(&self, f: &dyn Fn(&Atom) -> Atom) -> Formula {
        match self {
            Formula::Atom(a) => Formula::Atom(f(a)),
            Formula::Not(x) => Formula::Not(Box::new(x.map_atoms(f))),
            Formula::And(a, b) => Formula::And(Box::new(a.map_atoms(f)), Box::new(b.map_atoms(f))),
            Formula::Or(a, b) => Formula::Or(Box::new(a.map_atoms(f)), Box::new(b.map_atoms(f))),
            Formula::Implies(a, b) => Formula::Implies(Box::new(a.map_atoms(f)), Box::new(b.map_atoms(f))),
        }
    }

    /// Parses `!`, `&`, `|`, `->` (right-associative, lowest precedence) and
    /// parentheses around atoms like `IsA(x,garlic)`.
    pub fn parse(text: &str) -> Result<Formula, BlnError> {
        let tokens = lex(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let f = p.implication()?;
        if p.pos != p.tokens.len() {
            return Err(BlnError::Formula(format!("trailing input in {text:?}")));
        }
        Ok(f)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(x) => write!(f, "!{x}"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Atom(Atom),
    Not,
    And,
    Or,
    Implies,
    Open,
    Close,
}

fn lex(text: &str) -> Result<Vec<Tok>, BlnError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '!' => {
                out.push(Tok::Not);
                i += 1;
            }
            '&' => {
                out.push(Tok::And);
                i += 1;
            }
            '|' => {
                out.push(Tok::Or);
                i += 1;
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push(Tok::Implies);
                i += 2;
            }
            '(' => {
                out.push(Tok::Open);
                i += 1;
            }
            ')' => {
                out.push(Tok::Close);
                i += 1;
            }
            _ => {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or_else(|| BlnError::Formula(format!("unterminated atom in {text:?}")))?;
                let raw: String = chars[i..=i + close].iter().collect();
                out.push(Tok::Atom(raw.parse()?));
                i += close + 1;
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn implication(&mut self) -> Result<Formula, BlnError> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Tok::Implies) {
            self.pos += 1;
            let rhs = self.implication()?;
            return Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, BlnError> {
        let mut lhs = self.conjunction()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            lhs = Formula::Or(Box::new(lhs), Box::new(self.conjunction()?));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, BlnError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            lhs = Formula::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, BlnError> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::Not(Box::new(self.unary()?)))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let f = self.implication()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(BlnError::Formula("missing ')'".into()));
                }
                self.pos += 1;
                Ok(f)
            }
            Some(Tok::Atom(a)) => {
                self.pos += 1;
                Ok(Formula::Atom(a))
            }
            other => Err(BlnError::Formula(format!("unexpected token {other:?}"))),
        }
    }
}
