//! Text syntax for words.
//!
//! ```text
//! word   := token*            (whitespace separated)
//! token  := family index "'"?
//! family := "l" | "s" | "v" | "p" | "pb"
//! index  := decimal
//! ```
//!
//! `"pb3' v0 p2"` is `π̄₃⁻¹ v₀ π₂`. The trailing `'` marks an inverse letter.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{Family, GenSymbol, Index, Sign, Word};

/// Largest index accepted from text input.
pub const MAX_INPUT_INDEX: Index = 1_000_000;

pub fn parse_word(text: &str) -> Result<Word> {
    let mut letters = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        letters.push(parse_token(&text[start..pos], start)?);
    }
    Ok(Word::new(letters))
}

fn parse_token(token: &str, offset: usize) -> Result<GenSymbol> {
    let syntax = |at: usize, message: String| Error::Syntax {
        position: offset + at,
        message,
    };
    let (family, rest) = if let Some(r) = token.strip_prefix("pb") {
        (Family::PiBar, r)
    } else if let Some(r) = token.strip_prefix('p') {
        (Family::Pi, r)
    } else if let Some(r) = token.strip_prefix('l') {
        (Family::Lambda, r)
    } else if let Some(r) = token.strip_prefix('s') {
        (Family::Sigma, r)
    } else if let Some(r) = token.strip_prefix('v') {
        (Family::V, r)
    } else {
        return Err(syntax(
            0,
            format!("unknown generator in `{token}` (expected l, s, v, p or pb)"),
        ));
    };
    let at = token.len() - rest.len();
    let (digits, sign) = match rest.strip_suffix('\'') {
        Some(d) => (d, Sign::Neg),
        None => (rest, Sign::Pos),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(at, format!("expected a decimal index in `{token}`")));
    }
    let index: u64 = digits
        .parse()
        .map_err(|_| syntax(at, format!("index out of range in `{token}`")))?;
    if index > MAX_INPUT_INDEX as u64 {
        return Err(syntax(
            at,
            format!("index {index} exceeds the input limit {MAX_INPUT_INDEX}"),
        ));
    }
    Ok(GenSymbol::new(family, index as Index, sign))
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

/// Shorthand used throughout the tests: panics on malformed input.
pub fn w(text: &str) -> Word {
    parse_word(text).unwrap_or_else(|e| panic!("bad word literal {text:?}: {e}"))
}
