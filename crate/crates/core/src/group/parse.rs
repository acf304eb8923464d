//! Parser for group specs such as `Z(6)`, `D(60)`, `Dic(12)`, `S(8)`, `A(5)`
//! and products like `S(3)xZ(5)`.

use thiserror::Error;

use super::{GroupError, GroupHandle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("at position {pos}: {source}")]
    Group {
        pos: usize,
        #[source]
        source: GroupError,
    },
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a positive integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse().map_err(|_| ParseError::Syntax {
            pos: start,
            msg: format!("integer {text} is out of range"),
        })
    }

    fn factor(&mut self) -> Result<GroupHandle, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident();
        self.expect(b'(')?;
        let n = self.number()?;
        self.expect(b')')?;
        let degree = |n: u64| u32::try_from(n).unwrap_or(u32::MAX);
        let built = match name {
            "Z" | "C" => GroupHandle::cyclic(n),
            "D" => GroupHandle::dihedral(n),
            "Dic" => GroupHandle::dicyclic(n),
            "S" => GroupHandle::symmetric(degree(n)),
            "A" => GroupHandle::alternating(degree(n)),
            "" => return Err(ParseError::Syntax { pos: start, msg: "expected a family name".into() }),
            other => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unknown family '{other}' (expected Z, D, Dic, S or A)"),
                })
            }
        };
        built.map_err(|source| ParseError::Group { pos: start, source })
    }
}

/// Parses a group spec. A single factor yields that group; several factors
/// joined by `x` yield their direct product.
pub fn parse_group(spec: &str) -> Result<GroupHandle, ParseError> {
    let mut cur = Cursor { src: spec.as_bytes(), pos: 0 };
    let mut factors = vec![cur.factor()?];
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'x') | Some(b'*') => {
                cur.pos += 1;
                factors.push(cur.factor()?);
            }
            Some(_) => return cur.err("expected 'x' or end of input"),
        }
    }
    if factors.len() == 1 {
        Ok(factors.pop().expect("one factor"))
    } else {
        GroupHandle::direct_product(factors).map_err(|source| ParseError::Group { pos: 0, source })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families_and_products() {
        assert_eq!(parse_group("Z(6)").unwrap().order(), 6);
        assert_eq!(parse_group("D(60)").unwrap().order(), 60);
        assert_eq!(parse_group(" Dic( 12 )").unwrap().order(), 12);
        let g = parse_group("S(3)xZ(5)").unwrap();
        assert_eq!(g.order(), 30);
        assert_eq!(g.to_string(), "S(3)xZ(5)");
        assert_eq!(parse_group("Z(2) x Z(105)").unwrap().order(), 210);
    }

    #[test]
    fn reports_positions() {
        assert_eq!(
            parse_group("Z(6)xQQ(3)").unwrap_err(),
            ParseError::Syntax {
                pos: 5,
                msg: "unknown family 'QQ' (expected Z, D, Dic, S or A)".into()
            }
        );
        assert!(matches!(parse_group("Z(6"), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_group("D(7)"), Err(ParseError::Group { pos: 0, .. })));
        assert!(matches!(parse_group("Z(6) Z(2)"), Err(ParseError::Syntax { pos: 5, .. })));
        assert!(parse_group("").is_err());
    }
}
