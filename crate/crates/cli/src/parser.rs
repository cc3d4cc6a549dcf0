//! Recursive-descent parser for manifold expressions, one token of lookahead.
//!
//! ```text
//! expr := "S3"
//!       | "brieskorn" "(" int "," int "," int ")"
//!       | "catalog" "(" name ")"
//!       | "surgery" "(" int "/" int "," knot ")"
//!       | "splice" "(" side "," side ")"
//!       | "ksplice" "(" int "," knot "," knot ")"
//!       | "sigma4demo"
//! side := knot | "brieskorn" "(" int "," int "," int ")" "@" int
//! knot := "unknot" | "torus" "(" int "," int ")" | "twist" "(" int ")" | ident
//! ```
//!
//! Whitespace is ignored and keywords are case-sensitive. A `catalog` name is
//! taken verbatim up to the matching parenthesis, with whitespace removed.

use std::fmt;

use casson_core::{AmbientKnot, BrieskornTriple, KnotDescriptor, ManifoldExpression};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    Comma,
    Slash,
    At,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::At => f.write_str("`@`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("position {pos}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        pos: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("position {pos}: {message}")]
    Invalid { pos: usize, message: String },
}

impl ParseError {
    /// Character offset of the error in the source.
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::Invalid { pos, .. } => *pos,
        }
    }
}

const EXPR_START: &[&str] = &[
    "`S3`",
    "`brieskorn`",
    "`catalog`",
    "`surgery`",
    "`splice`",
    "`ksplice`",
    "`sigma4demo`",
];
const KNOT_START: &[&str] = &["`unknot`", "`torus`", "`twist`", "knot name"];

struct Parser {
    chars: Vec<char>,
    /// character offset of the next unread character
    cursor: usize,
    peeked: Option<(usize, Tok)>,
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl Parser {
    fn new(src: &str) -> Self {
        Self {
            chars: src.chars().collect(),
            cursor: 0,
            peeked: None,
        }
    }

    fn skip_ws(&mut self) {
        while self.cursor < self.chars.len() && self.chars[self.cursor].is_whitespace() {
            self.cursor += 1;
        }
    }

    fn lex(&mut self) -> Result<(usize, Tok), ParseError> {
        self.skip_ws();
        let start = self.cursor;
        let Some(&c) = self.chars.get(start) else {
            return Ok((start, Tok::Eof));
        };
        self.cursor += 1;
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '/' => Tok::Slash,
            '@' => Tok::At,
            '-' | '+' => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                if digits.is_empty() {
                    return Err(self.syntax(start, &["integer"], format!("`{c}`")));
                }
                let text = format!("{c}{digits}");
                Tok::Int(self.int(start, &text)?)
            }
            c if is_word_char(c) => {
                let rest = self.take_while(is_word_char);
                let word = format!("{c}{rest}");
                if word.chars().all(|c| c.is_ascii_digit()) {
                    Tok::Int(self.int(start, &word)?)
                } else {
                    Tok::Ident(word)
                }
            }
            other => {
                return Err(ParseError::Invalid {
                    pos: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        Ok((start, tok))
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(&c) = self.chars.get(self.cursor) {
            if !pred(c) {
                break;
            }
            s.push(c);
            self.cursor += 1;
        }
        s
    }

    fn int(&self, start: usize, text: &str) -> Result<i64, ParseError> {
        text.parse().map_err(|_| ParseError::Invalid {
            pos: start,
            message: format!("integer `{text}` out of range"),
        })
    }

    fn syntax(&self, pos: usize, expected: &[&str], found: String) -> ParseError {
        ParseError::Syntax {
            pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn peek(&mut self) -> Result<&(usize, Tok), ParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex()?);
        }
        Ok(self.peeked.as_ref().unwrap())
    }

    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        self.peek()?;
        Ok(self.peeked.take().unwrap())
    }

    fn expect(&mut self, want: Tok) -> Result<usize, ParseError> {
        let (pos, tok) = self.next()?;
        if tok == want {
            Ok(pos)
        } else {
            Err(ParseError::Syntax {
                pos,
                expected: vec![want.to_string()],
                found: tok.to_string(),
            })
        }
    }

    fn expect_int(&mut self) -> Result<(usize, i64), ParseError> {
        match self.next()? {
            (pos, Tok::Int(n)) => Ok((pos, n)),
            (pos, tok) => Err(ParseError::Syntax {
                pos,
                expected: vec!["integer".into()],
                found: tok.to_string(),
            }),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.next()? {
            (_, Tok::Eof) => Ok(()),
            (pos, tok) => Err(ParseError::Syntax {
                pos,
                expected: vec!["end of input".into()],
                found: tok.to_string(),
            }),
        }
    }

    /// Raw text up to the `)` matching an already consumed `(`.
    fn balanced_raw(&mut self, open: usize) -> Result<String, ParseError> {
        debug_assert!(self.peeked.is_none());
        let mut depth = 1;
        let mut out = String::new();
        while let Some(&c) = self.chars.get(self.cursor) {
            self.cursor += 1;
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(out);
                    }
                }
                _ => {}
            }
            if !c.is_whitespace() {
                out.push(c);
            }
        }
        Err(ParseError::Invalid {
            pos: open,
            message: "unbalanced `(`".into(),
        })
    }

    fn triple(&mut self) -> Result<(usize, BrieskornTriple), ParseError> {
        let pos = self.expect(Tok::LParen)?;
        let (_, a) = self.expect_int()?;
        self.expect(Tok::Comma)?;
        let (_, b) = self.expect_int()?;
        self.expect(Tok::Comma)?;
        let (_, c) = self.expect_int()?;
        self.expect(Tok::RParen)?;
        let t = BrieskornTriple::new(a, b, c).map_err(|e| ParseError::Invalid {
            pos,
            message: e.to_string(),
        })?;
        Ok((pos, t))
    }

    fn expr(&mut self) -> Result<ManifoldExpression, ParseError> {
        let (pos, tok) = self.next()?;
        let Tok::Ident(word) = &tok else {
            return Err(self.syntax(pos, EXPR_START, tok.to_string()));
        };
        match word.as_str() {
            "S3" => Ok(ManifoldExpression::S3),
            "sigma4demo" => Ok(demo_expression()),
            "brieskorn" => Ok(ManifoldExpression::Brieskorn(self.triple()?.1)),
            "catalog" => {
                let open = self.expect(Tok::LParen)?;
                let name = self.balanced_raw(open)?;
                if name.is_empty() {
                    return Err(ParseError::Invalid {
                        pos: open,
                        message: "empty catalog name".into(),
                    });
                }
                Ok(ManifoldExpression::Catalog(name))
            }
            "surgery" => {
                self.expect(Tok::LParen)?;
                let (_, numerator) = self.expect_int()?;
                self.expect(Tok::Slash)?;
                let (_, denominator) = self.expect_int()?;
                self.expect(Tok::Comma)?;
                let knot = self.knot()?;
                self.expect(Tok::RParen)?;
                Ok(ManifoldExpression::Surgery {
                    numerator,
                    denominator,
                    knot,
                })
            }
            "splice" => {
                self.expect(Tok::LParen)?;
                let a = self.side()?;
                self.expect(Tok::Comma)?;
                let b = self.side()?;
                self.expect(Tok::RParen)?;
                Ok(ManifoldExpression::Splice(a, b))
            }
            "ksplice" => {
                self.expect(Tok::LParen)?;
                let (_, k) = self.expect_int()?;
                self.expect(Tok::Comma)?;
                let knot1 = self.knot()?;
                self.expect(Tok::Comma)?;
                let knot2 = self.knot()?;
                self.expect(Tok::RParen)?;
                Ok(ManifoldExpression::KSplice { k, knot1, knot2 })
            }
            _ => Err(self.syntax(pos, EXPR_START, tok.to_string())),
        }
    }

    fn side(&mut self) -> Result<AmbientKnot, ParseError> {
        if matches!(self.peek()?, (_, Tok::Ident(w)) if w == "brieskorn") {
            self.next()?;
            let (pos, triple) = self.triple()?;
            self.expect(Tok::At)?;
            let (opos, order) = self.expect_int()?;
            let order = u64::try_from(order).map_err(|_| ParseError::Invalid {
                pos: opos,
                message: format!("fiber order {order} must be positive"),
            })?;
            return AmbientKnot::fiber_of_order(triple, order).ok_or(ParseError::Invalid {
                pos,
                message: format!("{triple} has no singular fiber of order {order}"),
            });
        }
        Ok(AmbientKnot::S3(self.knot()?))
    }

    fn knot(&mut self) -> Result<KnotDescriptor, ParseError> {
        let (pos, tok) = self.next()?;
        let invalid = |e: casson_core::knots::KnotError| ParseError::Invalid {
            pos,
            message: e.to_string(),
        };
        match tok {
            Tok::Ident(w) if w == "unknot" => Ok(KnotDescriptor::Unknot),
            Tok::Ident(w) if w == "torus" => {
                self.expect(Tok::LParen)?;
                let (_, p) = self.expect_int()?;
                self.expect(Tok::Comma)?;
                let (_, q) = self.expect_int()?;
                self.expect(Tok::RParen)?;
                KnotDescriptor::torus(p, q).map_err(invalid)
            }
            Tok::Ident(w) if w == "twist" => {
                self.expect(Tok::LParen)?;
                let (_, n) = self.expect_int()?;
                self.expect(Tok::RParen)?;
                KnotDescriptor::twist(n).map_err(invalid)
            }
            Tok::Ident(w) if casson_core::knots::RESERVED_NAMES.contains(&w.as_str()) => {
                Err(self.syntax(pos, KNOT_START, format!("`{w}`")))
            }
            Tok::Ident(w) => Ok(KnotDescriptor::named(w)),
            other => Err(self.syntax(pos, KNOT_START, other.to_string())),
        }
    }
}

/// The splice that realizes `Σ(2,3,5,7)`.
pub fn demo_expression() -> ManifoldExpression {
    let t1 = BrieskornTriple::new(2, 3, 35).expect("valid triple");
    let t2 = BrieskornTriple::new(5, 6, 7).expect("valid triple");
    ManifoldExpression::Splice(
        AmbientKnot::fiber_of_order(t1, 35).expect("fiber of order 35"),
        AmbientKnot::fiber_of_order(t2, 6).expect("fiber of order 6"),
    )
}

pub fn parse_expression(src: &str) -> Result<ManifoldExpression, ParseError> {
    let mut p = Parser::new(src);
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

pub fn parse_knot(src: &str) -> Result<KnotDescriptor, ParseError> {
    let mut p = Parser::new(src);
    let k = p.knot()?;
    p.expect_end()?;
    Ok(k)
}
