//! Glyphs, fragments and alphabets.
//!
//! A glyph is one `char`. Transliterations that render a single manuscript
//! glyph as several letters must be mapped to single code points before they
//! reach this crate; every length and edit distance here counts `char`s.

use std::collections::BTreeSet;
use std::fmt;

/// A possibly empty run of glyphs; one piece of a generated word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fragment(String);

impl Fragment {
    pub fn new(glyphs: impl Into<String>) -> Self {
        Fragment(glyphs.into())
    }

    pub fn empty() -> Self {
        Fragment(String::new())
    }

    /// Number of glyphs.
    pub fn len(&self) -> usize {
        self.0.chars().count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn glyphs(&self) -> std::str::Chars<'_> {
        self.0.chars()
    }
}

impl fmt::Display for Fragment {
    /// Empty fragments display as `-`, the convention of the file formats.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&self.0)
        }
    }
}

impl From<&str> for Fragment {
    fn from(s: &str) -> Self {
        Fragment(s.to_owned())
    }
}

impl From<String> for Fragment {
    fn from(s: String) -> Self {
        Fragment(s)
    }
}

/// A set of admissible glyphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    glyphs: BTreeSet<char>,
}

impl Alphabet {
    pub fn new(glyphs: impl IntoIterator<Item = char>) -> Self {
        Alphabet { glyphs: glyphs.into_iter().collect() }
    }

    /// Lowercase basic-Latin letters, the plain EVA letter set.
    pub fn eva() -> Self {
        Alphabet::new('a'..='z')
    }

    pub fn contains(&self, glyph: char) -> bool {
        self.glyphs.contains(&glyph)
    }

    pub fn len(&self) -> usize {
        self.glyphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.glyphs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.glyphs.iter().copied()
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::eva()
    }
}
