//! Element expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | name postfix* | '(' expr ')' postfix*
//! postfix := '^' int | "'"
//! ```
//!
//! `'` is the ghost of an edge expression and the involution of a
//! parenthesised one. A bare scalar stands for scalar times `Σ v`.

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::Symbol;
use crate::lpa::{Element, LeavittAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("ghost of vertex expression `{0}` is ambiguous; write the vertex itself")]
    VertexGhost(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Prime,
    Open,
    Close,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Name(n) => format!("`{n}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Prime => "`'`".into(),
        Tok::Open => "`(`".into(),
        Tok::Close => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, TextError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Tok::Name(chars[start..i].iter().collect())));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((col, Tok::Int(digits.parse().unwrap())));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '\'' => Tok::Prime,
            '(' => Tok::Open,
            ')' => Tok::Close,
            _ => {
                return Err(TextError::Syntax {
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((col, tok));
        i += 1;
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

/// A parsed factor, remembering whether it is built from a vertex name so the
/// ghost marker can be rejected on it.
struct Factor {
    value: Element,
    vertex_name: Option<String>,
    generator: bool,
}

struct Parser<'a> {
    alg: &'a Arc<LeavittAlgebra>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    generator: Option<&'a str>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn column(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, TextError> {
        Err(TextError::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    fn expect_end(&self) -> Result<(), TextError> {
        match self.peek() {
            Tok::End => Ok(()),
            t => self.error(format!("unexpected {}", describe(t))),
        }
    }

    /// Returns the sum and whether every term ended in the module generator.
    fn expr(&mut self) -> Result<(Element, bool), TextError> {
        let mut negate = false;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let (first, mut all_gen) = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            let sub = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
            let (t, gen) = self.term()?;
            all_gen &= gen;
            acc = if sub { &acc - &t } else { &acc + &t };
        }
        Ok((acc, all_gen))
    }

    fn term(&mut self) -> Result<(Element, bool), TextError> {
        let first = self.factor()?;
        let mut ends_in_gen = first.generator;
        let mut acc = first.value;
        while *self.peek() == Tok::Star {
            self.bump();
            if ends_in_gen {
                return self.error("the module generator must be the last factor");
            }
            let f = self.factor()?;
            ends_in_gen = f.generator;
            acc = &acc * &f.value;
        }
        Ok((acc, ends_in_gen))
    }

    fn factor(&mut self) -> Result<Factor, TextError> {
        let column = self.column();
        match self.bump() {
            Tok::Int(n) => {
                let field = self.alg.field();
                let mut c = field.from_bigint(&n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let Tok::Int(d) = self.bump() else {
                        return Err(TextError::Syntax {
                            column: self.toks[self.pos.saturating_sub(1)].0,
                            message: "expected an integer denominator".into(),
                        });
                    };
                    c = field.fraction(&n, &d).map_err(|e| TextError::Syntax {
                        column,
                        message: e.to_string(),
                    })?;
                }
                if matches!(self.peek(), Tok::Caret | Tok::Prime) {
                    return self.error("postfix operators do not apply to scalars");
                }
                Ok(Factor {
                    value: Element::scalar(self.alg, c),
                    vertex_name: None,
                    generator: false,
                })
            }
            Tok::Name(name) => {
                if Some(name.as_str()) == self.generator {
                    return Ok(Factor {
                        value: Element::one(self.alg),
                        vertex_name: None,
                        generator: true,
                    });
                }
                let value = match self.alg.graph().lookup(&name) {
                    Some(Symbol::Vertex(v)) => Element::vertex(self.alg, v),
                    Some(Symbol::Edge(e)) => Element::edge(self.alg, e),
                    None => return Err(TextError::UnknownName(name)),
                };
                let is_vertex = matches!(self.alg.graph().lookup(&name), Some(Symbol::Vertex(_)));
                let f = Factor {
                    value,
                    vertex_name: is_vertex.then_some(name),
                    generator: false,
                };
                self.postfix(f)
            }
            Tok::Open => {
                let (value, gen) = self.expr()?;
                if gen {
                    return Err(TextError::Syntax {
                        column,
                        message: "the module generator cannot appear inside parentheses".into(),
                    });
                }
                if *self.peek() != Tok::Close {
                    return self.error(format!("expected `)`, found {}", describe(self.peek())));
                }
                self.bump();
                self.postfix(Factor {
                    value,
                    vertex_name: None,
                    generator: false,
                })
            }
            t => Err(TextError::Syntax {
                column,
                message: format!("expected a factor, found {}", describe(&t)),
            }),
        }
    }

    fn postfix(&mut self, mut f: Factor) -> Result<Factor, TextError> {
        loop {
            match self.peek() {
                Tok::Caret => {
                    self.bump();
                    let column = self.column();
                    let Tok::Int(k) = self.bump() else {
                        return Err(TextError::Syntax {
                            column,
                            message: "expected an exponent".into(),
                        });
                    };
                    let k: usize = k.try_into().map_err(|_| TextError::Syntax {
                        column,
                        message: "exponent too large".into(),
                    })?;
                    f.value = f.value.pow(k);
                }
                Tok::Prime => {
                    if let Some(name) = &f.vertex_name {
                        return Err(TextError::VertexGhost(name.clone()));
                    }
                    self.bump();
                    f.value = f.value.star();
                }
                _ => return Ok(f),
            }
        }
    }
}

/// Parses an element expression in the given algebra.
pub fn parse_element(text: &str, alg: &Arc<LeavittAlgebra>) -> Result<Element, TextError> {
    let mut p = Parser {
        alg,
        toks: lex(text)?,
        pos: 0,
        generator: None,
    };
    let (x, _) = p.expr()?;
    p.expect_end()?;
    Ok(x)
}

/// Parses `Σ r_i * z` where `z` names the module generator and returns
/// `Σ r_i`. The literal `0` is the zero combination.
pub fn parse_generated(
    text: &str,
    alg: &Arc<LeavittAlgebra>,
    generator: &str,
) -> Result<Element, TextError> {
    if text.trim() == "0" {
        return Ok(Element::zero(alg));
    }
    let mut p = Parser {
        alg,
        toks: lex(text)?,
        pos: 0,
        generator: Some(generator),
    };
    let (x, all_gen) = p.expr()?;
    p.expect_end()?;
    if !all_gen {
        return Err(TextError::Syntax {
            column: 1,
            message: format!("every term must end in the generator `{generator}`"),
        });
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeId, Graph, VertexId};
    use crate::scalars::Field;

    fn r2() -> Arc<LeavittAlgebra> {
        LeavittAlgebra::rose(2, Field::Rational).unwrap()
    }

    #[test]
    fn ghost_times_edge_is_vertex() {
        let a = r2();
        let x = parse_element("e1'*e1", &a).unwrap();
        assert_eq!(x, Element::vertex(&a, VertexId(0)));
        assert!(parse_element("e1'*e2", &a).unwrap().is_zero());
    }

    #[test]
    fn anick_ghost_image_round_trips() {
        let a = r2();
        let x = parse_element("e1'  - e1*e2'", &a).unwrap();
        assert_eq!(x.to_string(), "e1' - e1*e2'");
        assert_eq!(parse_element(&x.to_string(), &a).unwrap(), x);
    }

    #[test]
    fn trailing_star_is_rejected() {
        let err = parse_element("e1*", &r2()).unwrap_err();
        assert_eq!(
            err,
            TextError::Syntax {
                column: 4,
                message: "expected a factor, found end of input".into()
            }
        );
    }

    #[test]
    fn product_of_sums() {
        let a = r2();
        let x = parse_element("(e1+e2)*(e1'+e2')", &a).unwrap();
        assert_eq!(x.to_string(), "v + e1*e2' + e2*e1'");
    }

    #[test]
    fn powers_scalars_and_involution() {
        let a = r2();
        let e1 = Element::edge(&a, EdgeId(0));
        assert_eq!(parse_element("e1^3", &a).unwrap(), e1.pow(3));
        assert_eq!(parse_element("e1^2'", &a).unwrap(), e1.pow(2).star());
        assert_eq!(parse_element("(e1*e2')'", &a).unwrap().to_string(), "e2*e1'");
        let x = parse_element("-2/3*e1 + 1", &a).unwrap();
        assert_eq!(x.to_string(), "v - 2/3*e1");
        assert_eq!(parse_element("e1^0", &a).unwrap(), Element::one(&a));
    }

    #[test]
    fn vertex_ghost_and_unknown_names() {
        let a = r2();
        assert_eq!(
            parse_element("v'", &a),
            Err(TextError::VertexGhost("v".into()))
        );
        assert_eq!(
            parse_element("e3", &a),
            Err(TextError::UnknownName("e3".into()))
        );
        assert!(matches!(
            parse_element("e1 e2", &a),
            Err(TextError::Syntax { column: 4, .. })
        ));
        assert!(matches!(parse_element("(e1", &a), Err(TextError::Syntax { .. })));
        assert!(matches!(parse_element("e1 # 2", &a), Err(TextError::Syntax { column: 4, .. })));
    }

    #[test]
    fn prime_field_coefficients_reduce() {
        let a = LeavittAlgebra::rose(2, Field::Prime(5)).unwrap();
        let x = parse_element("7*e1 - 2*e1", &a).unwrap();
        assert!(x.is_zero());
        assert_eq!(parse_element("1/2*e1", &a).unwrap().to_string(), "3*e1");
    }

    #[test]
    fn generator_expressions() {
        let a = r2();
        let r = parse_generated("2*z + e1*z", &a, "z").unwrap();
        assert_eq!(r, parse_element("2 + e1", &a).unwrap());
        assert!(parse_generated("0", &a, "z").unwrap().is_zero());
        assert!(parse_generated("e1", &a, "z").is_err());
        assert!(parse_generated("z*e1", &a, "z").is_err());
        assert_eq!(
            parse_generated("(e1 + e2)*z", &a, "z").unwrap(),
            parse_element("e1 + e2", &a).unwrap()
        );
    }

    #[test]
    fn mixed_graph_names() {
        let g = Graph::parse("vertex a\nvertex b\nedge f a b\nedge g b a").unwrap();
        let alg = LeavittAlgebra::new(Arc::new(g), Field::Rational);
        let x = parse_element("f*g - a", &alg).unwrap();
        assert_eq!(parse_element(&x.to_string(), &alg).unwrap(), x);
        assert!(parse_element("f*f", &alg).unwrap().is_zero());
    }
}
