//! Square-free words over small alphabets.
//!
//! Everything downstream leans on two classical facts: iterating the
//! substitution `1 -> 12312, 2 -> 131232, 3 -> 1323132` from the seed `1`
//! yields an infinite square-free ternary word, and splitting any square-free
//! ternary word into blocks of two and inserting the fresh symbol `4` between
//! blocks yields a word whose every factor is either square-free or forced
//! through a `4`. The first gives 3-colourings of paths with no repetitively
//! coloured subpath; the second gives 4-colourings killing repetitive walks.

use crate::error::Error;
use crate::Result;
use std::fmt;

/// Alphabet a [`Word`] is declared over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// Symbols 1..=3.
    Ternary,
    /// Symbols 1..=4.
    Quaternary,
}

impl Alphabet {
    fn max_symbol(self) -> u8 {
        match self {
            Alphabet::Ternary => 3,
            Alphabet::Quaternary => 4,
        }
    }
}

/// A finite word over a declared alphabet. Symbols are the digits
/// themselves (`1u8`, not `b'1'`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet: Alphabet,
}

impl Word {
    /// Builds a word, rejecting symbols outside the alphabet.
    pub fn new(symbols: Vec<u8>, alphabet: Alphabet) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| s == 0 || s > alphabet.max_symbol()) {
            return Err(Error::InvalidParameter(format!(
                "symbol {s} outside alphabet (max {})",
                alphabet.max_symbol()
            )));
        }
        Ok(Word { symbols, alphabet })
    }

    /// Parses a digit string such as `"12312"`.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("non-digit character {c:?} in word")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Word::new(symbols, alphabet)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Images of the square-free-preserving substitution on `{1,2,3}`.
const THUE_IMAGES: [&[u8]; 3] = [
    &[1, 2, 3, 1, 2],
    &[1, 3, 1, 2, 3, 2],
    &[1, 3, 2, 3, 1, 3, 2],
];

/// Applies the substitution `1 -> 12312, 2 -> 131232, 3 -> 1323132` to a
/// ternary word. Square-freeness of the input is preserved in the output.
pub fn thue_expand(w: &Word) -> Result<Word> {
    if w.alphabet != Alphabet::Ternary {
        return Err(Error::InvalidParameter(
            "substitution is defined on the ternary alphabet".into(),
        ));
    }
    let mut out = Vec::with_capacity(w.len() * 7);
    for &s in &w.symbols {
        out.extend_from_slice(THUE_IMAGES[(s - 1) as usize]);
    }
    Word::new(out, Alphabet::Ternary)
}

/// Prefix of length `len` of the substitution's fixed point grown from the
/// seed `1`. The seed is a prefix of its own image, so successive expansions
/// agree on ever-longer prefixes and the fixed point is well defined.
pub fn thue_word(len: usize) -> Word {
    let mut w = vec![1u8];
    while w.len() < len {
        let mut next = Vec::with_capacity(w.len() * 7);
        for &s in &w {
            next.extend_from_slice(THUE_IMAGES[(s - 1) as usize]);
        }
        w = next;
    }
    w.truncate(len);
    Word {
        symbols: w,
        alphabet: Alphabet::Ternary,
    }
}

/// Splits a ternary word into blocks of length two and inserts the separator
/// `4` between consecutive blocks: `123132123` becomes `1243143241243`.
/// A trailing block of length one is kept without a trailing separator.
pub fn kp_insert(w: &Word) -> Result<Word> {
    if w.alphabet != Alphabet::Ternary {
        return Err(Error::InvalidParameter(
            "separator insertion expects a ternary word".into(),
        ));
    }
    let mut out = Vec::with_capacity(w.len() + w.len() / 2);
    for (i, chunk) in w.symbols.chunks(2).enumerate() {
        if i > 0 {
            out.push(4);
        }
        out.extend_from_slice(chunk);
    }
    Word::new(out, Alphabet::Quaternary)
}

/// Prefix of length `len` of the separator-inserted fixed point: blocks of
/// two symbols of [`thue_word`] with `4` between blocks.
pub fn kp_word(len: usize) -> Word {
    if len == 0 {
        return Word {
            symbols: Vec::new(),
            alphabet: Alphabet::Quaternary,
        };
    }
    // Every block of two source symbols yields at most three output symbols,
    // so this source length always suffices.
    let source = thue_word(len.div_ceil(3) * 2 + 2);
    let mut out = Vec::with_capacity(len);
    'fill: for (i, chunk) in source.symbols.chunks(2).enumerate() {
        if i > 0 {
            out.push(4);
            if out.len() == len {
                break 'fill;
            }
        }
        for &s in chunk {
            out.push(s);
            if out.len() == len {
                break 'fill;
            }
        }
    }
    debug_assert_eq!(out.len(), len);
    Word {
        symbols: out,
        alphabet: Alphabet::Quaternary,
    }
}

/// Finds the leftmost-shortest square factor `xx` (shortest half-length
/// first, then smallest start). Returns `(start, half_length)`, or `None`
/// when the word is square-free. Quadratic scan with early exit per window.
pub fn find_square(w: &Word) -> Option<(usize, usize)> {
    let s = &w.symbols;
    let n = s.len();
    for half in 1..=n / 2 {
        for start in 0..=n - 2 * half {
            if s[start..start + half] == s[start + half..start + 2 * half] {
                return Some((start, half));
            }
        }
    }
    None
}
