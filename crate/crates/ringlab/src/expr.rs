//! Boolean expressions over predicate names, for counterexample search.
//!
//! Grammar with the usual precedence `!` > `&` > `|`:
//!
//! ```text
//! expr := or ; or := and ('|' and)* ; and := not ('&' not)* ;
//! not  := '!' not | name | '(' expr ')'
//! ```

use crate::analysis::Analysis;
use crate::error::{Result, RingError};
use crate::predicates::{evaluate, VOCABULARY};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PredicateExpression {
    Name(String),
    Not(Box<PredicateExpression>),
    And(Vec<PredicateExpression>),
    Or(Vec<PredicateExpression>),
}

impl PredicateExpression {
    pub fn eval(&self, a: &Analysis) -> Result<bool> {
        match self {
            PredicateExpression::Name(n) => Ok(evaluate(a, n)?.holds),
            PredicateExpression::Not(e) => Ok(!e.eval(a)?),
            PredicateExpression::And(es) => {
                for e in es {
                    if !e.eval(a)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            PredicateExpression::Or(es) => {
                for e in es {
                    if e.eval(a)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
        let prec = match self {
            PredicateExpression::Or(_) => 0,
            PredicateExpression::And(_) => 1,
            PredicateExpression::Not(_) | PredicateExpression::Name(_) => 2,
        };
        let parens = prec < parent;
        if parens {
            write!(f, "(")?;
        }
        match self {
            PredicateExpression::Name(n) => write!(f, "{n}")?,
            PredicateExpression::Not(e) => {
                write!(f, "!")?;
                e.fmt_prec(f, 3)?;
            }
            PredicateExpression::And(es) => {
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, " & ")?;
                    }
                    e.fmt_prec(f, 2)?;
                }
            }
            PredicateExpression::Or(es) => {
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    e.fmt_prec(f, 1)?;
                }
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for PredicateExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Name(String),
    And,
    Or,
    Not,
    Open,
    Close,
}

/// Tokens with their 1-based starting column.
fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '&' => {
                out.push((col, Token::And));
                i += 1;
            }
            '|' => {
                out.push((col, Token::Or));
                i += 1;
            }
            '!' => {
                out.push((col, Token::Not));
                i += 1;
            }
            '(' => {
                out.push((col, Token::Open));
                i += 1;
            }
            ')' => {
                out.push((col, Token::Close));
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '-') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push((start + 1, Token::Name(name)));
            }
            other => {
                return Err(RingError::SyntaxError {
                    col,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn next_col(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.end_col)
    }

    fn or(&mut self) -> Result<PredicateExpression> {
        let mut terms = vec![self.and()?];
        while matches!(self.peek(), Some((_, Token::Or))) {
            self.pos += 1;
            terms.push(self.and()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            PredicateExpression::Or(terms)
        })
    }

    fn and(&mut self) -> Result<PredicateExpression> {
        let mut terms = vec![self.not()?];
        while matches!(self.peek(), Some((_, Token::And))) {
            self.pos += 1;
            terms.push(self.not()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            PredicateExpression::And(terms)
        })
    }

    fn not(&mut self) -> Result<PredicateExpression> {
        match self.peek() {
            Some((_, Token::Not)) => {
                self.pos += 1;
                Ok(PredicateExpression::Not(Box::new(self.not()?)))
            }
            Some((col, Token::Name(n))) => {
                let (col, n) = (*col, n.clone());
                if !VOCABULARY.contains(&n.as_str()) {
                    return Err(RingError::UnknownPredicate { name: n, col });
                }
                self.pos += 1;
                Ok(PredicateExpression::Name(n))
            }
            Some((_, Token::Open)) => {
                self.pos += 1;
                let inner = self.or()?;
                match self.peek() {
                    Some((_, Token::Close)) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(RingError::SyntaxError {
                        col: self.next_col(),
                        msg: "expected `)`".into(),
                    }),
                }
            }
            _ => Err(RingError::SyntaxError {
                col: self.next_col(),
                msg: "expected a predicate name, `!`, or `(`".into(),
            }),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<PredicateExpression> {
    let tokens = lex(text)?;
    let end_col = text.chars().count() + 1;
    let mut p = Parser {
        tokens,
        pos: 0,
        end_col,
    };
    let expr = p.or()?;
    if let Some((col, _)) = p.peek() {
        return Err(RingError::SyntaxError {
            col: *col,
            msg: "trailing tokens".into(),
        });
    }
    Ok(expr)
}
