//! Small hand-written cursor shared by the text parsers.

use thiserror::Error;

/// A syntax error at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn offset(&self) -> usize {
        self.pos
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    /// Next non-whitespace character, without consuming it.
    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.rest().chars().next()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    /// Error describing the token found at the current position.
    pub fn unexpected(&mut self, wanted: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError::new(self.pos, format!("expected {wanted}, found {found}"))
    }

    pub fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let digits: &str = {
            let rest = self.rest();
            let end = rest
                .char_indices()
                .find(|(_, c)| !c.is_ascii_digit())
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            &rest[..end]
        };
        if digits.is_empty() {
            return Err(self.unexpected("an index"));
        }
        let start = self.pos;
        let n = digits
            .parse::<usize>()
            .map_err(|_| ParseError::new(start, format!("index '{digits}' is too large")))?;
        self.pos += digits.len();
        Ok(n)
    }

    pub fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            Err(self.unexpected("end of input"))
        } else {
            Ok(())
        }
    }
}
