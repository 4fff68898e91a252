//! Parser for Weyl words written as whitespace-separated tokens:
//! `s<k>`, `t`, `t-`, `w0`, `a<k>`, each optionally followed by `^<exp>`.
//! Tokens are read left to right, so the last token acts first.

use std::fmt;

use mullineux_core::affine_weyl::{alpha_word, w0_word};
use mullineux_core::WeylWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

fn index(digits: &str, l: usize, offset: usize, what: &str) -> Result<usize, ParseError> {
    let err = |message: String| ParseError { offset, message };
    let k: usize = digits
        .parse()
        .map_err(|_| err(format!("expected an index after {what:?}")))?;
    if k == 0 || k >= l {
        return Err(err(format!(
            "index {k} outside 1..{} for level {l}",
            l.saturating_sub(1)
        )));
    }
    Ok(k)
}

/// Parses `text` into a word for level `l`, expanding `a<k>` and `w0`.
pub fn parse_weyl_word(text: &str, l: usize) -> Result<WeylWord, ParseError> {
    let mut word = WeylWord::identity();
    for token in text.split_whitespace() {
        let offset = token.as_ptr() as usize - text.as_ptr() as usize;
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => {
                let exp: usize = e.parse().map_err(|_| ParseError {
                    offset: offset + b.len() + 1,
                    message: format!("invalid exponent {e:?}"),
                })?;
                (b, exp)
            }
            None => (token, 1),
        };
        let piece = match base {
            "t" => WeylWord::tau(),
            "t-" => WeylWord::tau_inv(),
            "w0" => w0_word(l),
            _ if base.starts_with('s') => WeylWord::sigma(index(&base[1..], l, offset, "s")?),
            _ if base.starts_with('a') => {
                alpha_word(index(&base[1..], l, offset, "a")?, l).expect("index already checked")
            }
            _ => {
                return Err(ParseError {
                    offset,
                    message: format!("unknown token {base:?}"),
                })
            }
        };
        word = word.then(&piece.pow(exp));
    }
    Ok(word)
}
