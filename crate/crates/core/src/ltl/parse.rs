//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! or     := and ('|' and)*
//! and    := binary ('&' binary)*
//! binary := unary (('U' | 'R') binary)?
//! unary  := ('!' | 'X' | 'F' | 'G' | 'SF') unary | atom
//! atom   := letter | 'true' | 'false' | '(' or ')'
//! ```
//!
//! `SF` is desugared to `X F`.

use super::alphabet::{is_identifier, Alphabet};
use super::formula::Formula;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Bang,
    Amp,
    Pipe,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            c if c.is_whitespace() => i += 1,
            '!' | '~' => {
                out.push((i, Tok::Bang));
                i += 1;
            }
            '&' => {
                out.push((i, Tok::Amp));
                i += if bytes.get(i + 1) == Some(&b'&') {
                    2
                } else {
                    1
                };
            }
            '|' => {
                out.push((i, Tok::Pipe));
                i += if bytes.get(i + 1) == Some(&b'|') {
                    2
                } else {
                    1
                };
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                debug_assert!(is_identifier(word));
                out.push((start, Tok::Ident(word.to_string())));
            }
            other => {
                return Err(Error::Syntax {
                    position: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == kw)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.pos += 1;
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.binary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.pos += 1;
            lhs = Formula::and(lhs, self.binary()?);
        }
        Ok(lhs)
    }

    fn binary(&mut self) -> Result<Formula> {
        let lhs = self.unary()?;
        if self.is_keyword("U") {
            self.pos += 1;
            Ok(Formula::until(lhs, self.binary()?))
        } else if self.is_keyword("R") {
            self.pos += 1;
            Ok(Formula::release(lhs, self.binary()?))
        } else {
            Ok(lhs)
        }
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::Ident(s)) => match s.as_str() {
                "X" => {
                    self.pos += 1;
                    Ok(Formula::next(self.unary()?))
                }
                "F" => {
                    self.pos += 1;
                    Ok(Formula::eventually(self.unary()?))
                }
                "G" => {
                    self.pos += 1;
                    Ok(Formula::always(self.unary()?))
                }
                "SF" => {
                    self.pos += 1;
                    Ok(Formula::strictly_eventually(self.unary()?))
                }
                _ => self.atom(),
            },
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.or()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Ident(s)) => match s.as_str() {
                "true" => {
                    self.pos += 1;
                    Ok(Formula::True)
                }
                "false" => {
                    self.pos += 1;
                    Ok(Formula::False)
                }
                "U" | "R" => self.error(format!("binary operator `{s}` needs a left operand")),
                name => match self.alphabet.lookup(name) {
                    Some(l) => {
                        self.pos += 1;
                        Ok(Formula::Letter(l))
                    }
                    None => Err(Error::UnknownLetter(name.to_string())),
                },
            },
            Some(t) => self.error(format!("unexpected token {t:?}")),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `text` over `alphabet`.
pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Formula> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        alphabet,
    };
    let f = p.or()?;
    if p.pos != p.toks.len() {
        return p.error("trailing input");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltl::Letter;

    fn ab() -> Alphabet {
        Alphabet::parse("a,b").unwrap()
    }

    #[test]
    fn release_and_nesting() {
        let a = Formula::Letter(Letter(0));
        let b = Formula::Letter(Letter(1));
        assert_eq!(
            parse("a R b", &ab()).unwrap(),
            Formula::release(a.clone(), b)
        );
        assert_eq!(
            parse("X F a", &ab()).unwrap(),
            Formula::next(Formula::eventually(a.clone()))
        );
        assert_eq!(
            parse("SF a", &ab()).unwrap(),
            parse("X F a", &ab()).unwrap()
        );
    }

    #[test]
    fn unknown_letter() {
        assert_eq!(parse("a U c", &ab()), Err(Error::UnknownLetter("c".into())));
    }

    #[test]
    fn precedence_and_associativity() {
        let ab = ab();
        assert_eq!(
            parse("a U b U a", &ab).unwrap(),
            parse("a U (b U a)", &ab).unwrap()
        );
        assert_eq!(
            parse("!a & X b | a", &ab).unwrap(),
            parse("((!a) & (X b)) | a", &ab).unwrap()
        );
        assert_eq!(
            parse("a & b U a", &ab).unwrap(),
            parse("a & (b U a)", &ab).unwrap()
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse("a & (b", &ab()) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("U a", &ab()), Err(Error::Syntax { .. })));
        assert!(matches!(parse("a b", &ab()), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse("a $ b", &ab()),
            Err(Error::Syntax { position: 2, .. })
        ));
    }

    #[test]
    fn printer_round_trip() {
        let ab = ab();
        for text in [
            "a R b",
            "!(a U X b) & G F a",
            "SF (a | !b) R b",
            "true U !false",
        ] {
            let f = parse(text, &ab).unwrap();
            assert_eq!(parse(&f.to_text(&ab), &ab).unwrap(), f, "{text}");
        }
    }
}
