use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Token used for the empty word in every textual format.
pub const EPSILON: &str = "<eps>";

/// A single printable ASCII symbol other than whitespace and `#`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol(u8);

impl Symbol {
    pub fn new(c: char) -> Result<Self> {
        if c.is_ascii_graphic() && c != '#' {
            Ok(Symbol(c as u8))
        } else {
            Err(Error::InvalidSymbol(c))
        }
    }

    pub fn byte(self) -> u8 {
        self.0
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word. The empty word is allowed and prints as `<eps>`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses a word token. `<eps>` is the empty word; an empty string is
    /// rejected so that the empty word always has a visible spelling.
    pub fn parse(token: &str) -> Result<Self> {
        if token == EPSILON {
            return Ok(Word::empty());
        }
        if token.is_empty() {
            return Err(Error::Parse { line: 0, message: format!("empty word; write {EPSILON} for the empty word") });
        }
        let bytes = token.chars().map(|c| Symbol::new(c).map(Symbol::byte)).collect::<Result<Vec<u8>>>()?;
        Ok(Word(bytes))
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        Word(symbols.into_iter().map(Symbol::byte).collect())
    }

    /// `c` repeated `n` times.
    pub fn repeat_symbol(c: Symbol, n: usize) -> Self {
        Word(vec![c.byte(); n])
    }

    /// Internal constructor for generated words whose bytes are known valid.
    pub(crate) fn from_valid_bytes(bytes: Vec<u8>) -> Self {
        debug_assert!(bytes.iter().all(|&b| b.is_ascii_graphic() && b != b'#'));
        Word(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().map(|&b| Symbol(b))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self` repeated `n` times.
    pub fn power(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str(EPSILON)
        } else {
            // bytes are printable ASCII
            f.write_str(std::str::from_utf8(&self.0).expect("ascii"))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}
