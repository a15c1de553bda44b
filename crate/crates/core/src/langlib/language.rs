use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::langlib::word::{Symbol, Word};

/// A finite language: an ordered list of distinct words.
///
/// The order is significant. It fixes the row order of distance matrices and
/// the point numbering used by permutation groups.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Language {
    words: Vec<Word>,
    alphabet: BTreeSet<Symbol>,
}

impl Language {
    pub fn new(words: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(words.len());
        for w in &words {
            if !seen.insert(w) {
                return Err(Error::DuplicateWord(w.to_string()));
            }
        }
        let alphabet = words.iter().flat_map(|w| w.symbols()).collect();
        Ok(Language { words, alphabet })
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn alphabet(&self) -> &BTreeSet<Symbol> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Word> {
        self.words.get(i)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    /// Distinct word lengths, ascending.
    pub fn lengths(&self) -> BTreeSet<usize> {
        self.words.iter().map(Word::len).collect()
    }

    /// Parses the line-oriented text format.
    ///
    /// `#` starts a comment, one word per line, `<eps>` is the empty word.
    /// Lines holding only a comment are skipped; a blank line is an error.
    pub fn parse(text: &str) -> Result<Self> {
        let mut words = Vec::new();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let had_comment = raw.contains('#');
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                if had_comment {
                    continue;
                }
                return Err(Error::Parse { line, message: "blank line (write <eps> for the empty word)".into() });
            }
            if body.split_whitespace().count() != 1 {
                return Err(Error::Parse { line, message: format!("expected one word, got `{body}`") });
            }
            let w = Word::parse(body).map_err(|e| Error::Parse { line, message: e.to_string() })?;
            if !seen.insert(w.clone()) {
                return Err(Error::Parse { line, message: format!("duplicate word `{w}`") });
            }
            words.push(w);
        }
        Language::new(words)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Language::parse(&text)
    }

    /// Serializes to the text format, with an optional leading comment.
    pub fn to_text(&self, header: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(h) = header {
            for l in h.lines() {
                let _ = writeln!(out, "# {l}");
            }
        }
        for w in &self.words {
            let _ = writeln!(out, "{w}");
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>, header: Option<&str>) -> Result<()> {
        std::fs::write(path, self.to_text(header))?;
        Ok(())
    }
}

impl<'a> IntoIterator for &'a Language {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;
    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}
