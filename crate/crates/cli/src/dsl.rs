//! Presentation files.
//!
//! ```text
//! file   := header line*
//! header := "rank" INT
//! line   := "relator" word
//! word   := term+
//! term   := atom ["^" SIGNED_INT]
//! atom   := "s" INT | "(" word ")"
//! ```
//!
//! Blank lines and `#` comments are ignored. Serialization is the
//! `Display` of [`Presentation`], which prints reduced relators.

use chiralmix::fp::{Presentation, Word};
use chiralmix::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    rank: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, column: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            column: column + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len()
            && (self.src[self.pos] == b' ' || self.src[self.pos] == b'\t')
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn int(&mut self, signed: bool) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if signed && self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return self.err(start, "expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse() {
            Ok(v) => Ok(v),
            Err(_) => self.err(start, format!("integer `{text}` out of range")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        let end = start + kw.len();
        let boundary = self.src.get(end).is_none_or(|c| !c.is_ascii_alphanumeric());
        if self.src.get(start..end) == Some(kw.as_bytes()) && boundary {
            self.pos = end;
            return Ok(());
        }
        self.err(start, format!("expected `{kw}`"))
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = Word::identity();
        while let Some(b's' | b'(') = self.peek() {
            w = w.mul(&self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        let start = self.pos;
        let atom = match self.peek() {
            Some(b's') => {
                self.pos += 1;
                if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    return self.err(start, "expected a generator index after `s`");
                }
                let g = self.int(false)?;
                if g < 1 || g as usize >= self.rank {
                    return self.err(
                        start,
                        format!("generator s{g} out of range for rank {}", self.rank),
                    );
                }
                Word::gen(g as u32)
            }
            Some(b'(') => {
                self.pos += 1;
                if !matches!(self.peek(), Some(b's') | Some(b'(')) {
                    return self.err(self.pos, "expected a word after `(`");
                }
                let w = self.word()?;
                if self.peek() != Some(b')') {
                    return self.err(self.pos, "expected `)`");
                }
                self.pos += 1;
                w
            }
            _ => return self.err(start, "expected `s` or `(`"),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int(true)?;
            return Ok(atom.pow(e));
        }
        Ok(atom)
    }

    fn end(&mut self) -> Result<()> {
        match self.peek() {
            None | Some(b'#') => Ok(()),
            Some(c) => self.err(self.pos, format!("unexpected `{}`", c as char)),
        }
    }
}

/// Parse a presentation file.
pub fn parse(text: &str) -> Result<Presentation> {
    let mut rank = None;
    let mut relators = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        last_line = i + 1;
        let mut c = Cursor {
            src: raw.as_bytes(),
            pos: 0,
            line: i + 1,
            rank: rank.unwrap_or(0),
        };
        if matches!(c.peek(), None | Some(b'#')) {
            continue;
        }
        match rank {
            None => {
                c.keyword("rank")?;
                let col = {
                    c.skip_ws();
                    c.pos
                };
                let n = c.int(false)?;
                if n < 3 {
                    return c.err(col, format!("rank must be at least 3, got {n}"));
                }
                c.end()?;
                rank = Some(n as usize);
            }
            Some(_) => {
                c.keyword("relator")?;
                let col = {
                    c.skip_ws();
                    c.pos
                };
                let w = c.word()?;
                c.end()?;
                if w.is_empty() {
                    return c.err(col, "relator reduces to the identity");
                }
                relators.push(w);
            }
        }
    }
    let Some(rank) = rank else {
        return Err(Error::Parse {
            line: last_line.max(1),
            column: 1,
            message: "missing `rank` header".into(),
        });
    };
    Presentation::new(rank, relators)
}

/// Serialized form, parseable by [`parse`].
pub fn serialize(p: &Presentation) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(text: &str) -> (usize, usize) {
        match parse(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_powers_and_groups() {
        let p = parse("rank 3\nrelator s1^4\nrelator (s1 s2^-1)^2 s2\n").unwrap();
        assert_eq!(p.rank(), 3);
        assert_eq!(p.relators()[0], Word::gen(1).pow(4));
        assert_eq!(p.relators()[1], Word::from_signed(&[1, -2, 1]));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(pos("rank 3\nrelator s0\n"), (2, 9));
        assert_eq!(pos("rank 2\n"), (1, 6));
        assert_eq!(pos("rank 3\nrelator s1 s3"), (2, 12));
        assert_eq!(pos("relator s1"), (1, 1));
        assert_eq!(pos("rank 3\nrelator (s1 s2"), (2, 15));
        assert_eq!(pos("rank 3\nrelator s1 s1^-1"), (2, 9));
        assert_eq!(pos("# nothing\n"), (1, 1));
        assert_eq!(pos("rank 4\nrelator s1^x"), (2, 12));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse("# toroid\nrank 3\n\nrelator s1^4 # order\n").unwrap();
        assert_eq!(p.relators().len(), 1);
    }

    #[test]
    fn round_trip() {
        let p = parse("rank 4\nrelator s1 s1 s2 s2^-1 s3^3\nrelator (s2 s3)^-2\n").unwrap();
        let q = parse(&serialize(&p)).unwrap();
        assert_eq!(p, q);
        assert_eq!(serialize(&p), serialize(&q));
    }
}
