//! Building generators from a target vocabulary.
//!
//! [`synthesize_table`] writes the words out split over a flat table and then
//! shifts each column down by its grille hole, so that sliding the grille
//! replays the list. [`decompose_vocabulary`] goes the other way round for
//! wheels: split every type, keep the most frequent fragments per position
//! and measure what the resulting system covers and overgenerates.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::glyph::Fragment;
use crate::grammar::GrammarSpec;
use crate::grille::{grille_to_shifts, shift_table, FragmentTable, Grille};
use crate::wheels::{Wheel, WheelSystem};

/// Cuts a word into a fixed number of contiguous, possibly empty parts.
pub trait Splitter {
    fn split(&self, word: &str, parts: usize) -> Vec<String>;
}

impl<F: Fn(&str, usize) -> Vec<String>> Splitter for F {
    fn split(&self, word: &str, parts: usize) -> Vec<String> {
        self(word, parts)
    }
}

/// Near-even split by glyph count, longer parts first.
pub fn default_splitter(word: &str, parts: usize) -> Vec<String> {
    let glyphs: Vec<char> = word.chars().collect();
    let parts = parts.max(1);
    let (base, extra) = (glyphs.len() / parts, glyphs.len() % parts);
    let mut out = Vec::with_capacity(parts);
    let mut at = 0;
    for i in 0..parts {
        let n = base + usize::from(i < extra);
        out.push(glyphs[at..at + n].iter().collect());
        at += n;
    }
    out
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EvenSplitter;

impl Splitter for EvenSplitter {
    fn split(&self, word: &str, parts: usize) -> Vec<String> {
        default_splitter(word, parts)
    }
}

/// Three-way split guided by a word grammar: leading crust and mantle left,
/// core in the centre, trailing mantle and crust right. Words that do not
/// parse, and part counts other than three, fall back to the even split.
#[derive(Debug, Clone)]
pub struct GrammarSplitter {
    pub spec: GrammarSpec,
}

impl Splitter for GrammarSplitter {
    fn split(&self, word: &str, parts: usize) -> Vec<String> {
        match (parts, self.spec.core_centred_split(word)) {
            (3, Some((l, c, r))) => vec![l, c, r],
            _ => default_splitter(word, parts),
        }
    }
}

/// A table that `grille` reads back as `vocab`, in order, one word per
/// position. The table has `vocab.len() + grille.rows() - 1` rows.
pub fn synthesize_table<S: AsRef<str>>(vocab: &[S], grille: &Grille, splitter: &dyn Splitter) -> Result<FragmentTable> {
    if !grille.is_canonical() {
        return Err(Error::InvalidGrille("synthesis needs a canonical grille".into()));
    }
    let columns = grille.columns();
    let shifts = grille_to_shifts(grille);
    let max_shift = shifts.iter().copied().max().unwrap_or(0);
    let flat_rows = vocab.len() + grille.rows() - 1 - max_shift;
    let mut flat = FragmentTable::empty(1, columns, flat_rows);
    for (r, word) in vocab.iter().enumerate() {
        let parts = splitter.split(word.as_ref(), columns);
        if parts.len() != columns {
            return Err(Error::SplitterArity { expected: columns, got: parts.len() });
        }
        for (k, part) in parts.into_iter().enumerate() {
            flat.set_cell(0, k, r, Fragment::new(part));
        }
    }
    shift_table(&flat, &shifts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Budget {
    Uniform(usize),
    PerWheel(Vec<usize>),
}

impl Budget {
    fn for_wheel(&self, wheel: usize) -> usize {
        match self {
            Budget::Uniform(n) => *n,
            Budget::PerWheel(v) => v.get(wheel).copied().unwrap_or(0),
        }
    }
}

/// Largest vocabulary enumerated when measuring overgeneration.
pub const OVERGENERATION_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub types: usize,
    /// Types whose every part survived pruning, sorted.
    pub covered: Vec<String>,
    /// The rest, sorted.
    pub uncovered: Vec<String>,
    /// Distinct generated words absent from the input; `None` when the
    /// system is larger than [`OVERGENERATION_LIMIT`].
    pub overgeneration: Option<usize>,
}

impl DecompositionReport {
    pub fn coverage(&self) -> f64 {
        if self.types == 0 {
            return 0.0;
        }
        self.covered.len() as f64 / self.types as f64
    }
}

/// Greedy frequency-ranked wheel decomposition. Fragments at each position
/// are ranked by the number of types using them (ties lexicographic) and
/// the top `budget` kept; the empty fragment is always kept when used.
pub fn decompose_vocabulary<S: AsRef<str>>(
    types: &[S],
    wheel_count: usize,
    budget: &Budget,
    splitter: &dyn Splitter,
) -> Result<(WheelSystem, DecompositionReport)> {
    if wheel_count < 2 {
        return Err(Error::TooFewWheels(wheel_count));
    }
    if (0..wheel_count).any(|w| budget.for_wheel(w) < 1) {
        return Err(Error::InvalidBudget);
    }
    let types: Vec<&str> = types.iter().map(AsRef::as_ref).collect::<BTreeSet<_>>().into_iter().collect();

    let mut splits = Vec::with_capacity(types.len());
    let mut counts: Vec<HashMap<String, usize>> = vec![HashMap::new(); wheel_count];
    for word in &types {
        let parts = splitter.split(word, wheel_count);
        if parts.len() != wheel_count {
            return Err(Error::SplitterArity { expected: wheel_count, got: parts.len() });
        }
        for (k, part) in parts.iter().enumerate() {
            *counts[k].entry(part.clone()).or_default() += 1;
        }
        splits.push(parts);
    }

    let mut kept: Vec<HashSet<String>> = Vec::with_capacity(wheel_count);
    let mut wheels = Vec::with_capacity(wheel_count);
    for (k, freq) in counts.into_iter().enumerate() {
        let mut ranked: Vec<(String, usize)> = freq.into_iter().collect();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        let uses_empty = ranked.iter().any(|(f, _)| f.is_empty());
        ranked.truncate(budget.for_wheel(k));
        if uses_empty && !ranked.iter().any(|(f, _)| f.is_empty()) {
            let last = ranked.len() - 1;
            ranked[last] = (String::new(), 0);
        }
        kept.push(ranked.iter().map(|(f, _)| f.clone()).collect());
        wheels.push(Wheel::new(ranked.into_iter().map(|(f, _)| Fragment::new(f)).collect())?);
    }
    let system = WheelSystem::new(wheels)?;

    let (mut covered, mut uncovered) = (Vec::new(), Vec::new());
    for (word, parts) in types.iter().zip(&splits) {
        if parts.iter().zip(&kept).all(|(p, set)| set.contains(p)) {
            covered.push(word.to_string());
        } else {
            uncovered.push(word.to_string());
        }
    }
    let overgeneration = (system.tuple_count() <= OVERGENERATION_LIMIT).then(|| {
        let input: HashSet<&str> = types.iter().copied().collect();
        system
            .enumerate()
            .map(|(_, w)| w)
            .collect::<HashSet<_>>()
            .iter()
            .filter(|w| !input.contains(w.as_str()))
            .count()
    });
    let report = DecompositionReport { types: types.len(), covered, uncovered, overgeneration };
    Ok((system, report))
}

/// Latin with I = J and U = V.
pub const LATIN_24: &str = "abcdefghiklmnopqrstuwxyz";
/// Italian without k and w.
pub const ITALIAN_24: &str = "abcdefghijlmnopqrstuvxyz";
pub const GREEK_24: &str = "αβγδεζηθικλμνξοπρστυφχψω";

/// Folds j onto i and v onto u so that Latin text fits [`LATIN_24`].
pub fn fold_latin(text: &str) -> String {
    text.chars()
        .map(|c| match c.to_ascii_lowercase() {
            'j' => 'i',
            'v' => 'u',
            other => other,
        })
        .collect()
}

/// Maps each plaintext symbol to a fragment: the symbol at position `i` of
/// a group selects, by its alphabet index, a fragment from wheel `i`.
#[derive(Debug, Clone)]
pub struct AlphabetCodec {
    system: WheelSystem,
    alphabet: Vec<char>,
    pad: char,
}

impl AlphabetCodec {
    /// Every wheel must hold exactly one fragment per alphabet symbol.
    pub fn new(system: WheelSystem, alphabet: &str, pad: char) -> Result<Self> {
        let alphabet: Vec<char> = alphabet.chars().collect();
        if alphabet.iter().collect::<HashSet<_>>().len() != alphabet.len() {
            return Err(Error::InvalidAlphabet("repeated symbol".into()));
        }
        if let Some(w) = system.wheels().iter().find(|w| w.len() != alphabet.len()) {
            return Err(Error::InvalidAlphabet(format!(
                "wheel of {} fragments for a {}-symbol alphabet",
                w.len(),
                alphabet.len()
            )));
        }
        if !alphabet.contains(&pad) {
            return Err(Error::NotInAlphabet(pad));
        }
        Ok(AlphabetCodec { system, alphabet, pad })
    }

    pub fn group_len(&self) -> usize {
        self.system.wheel_count()
    }

    /// One word per group of symbols; the last group is padded.
    pub fn encode(&self, plaintext: &str) -> Result<Vec<String>> {
        let mut digits = plaintext
            .chars()
            .map(|c| self.alphabet.iter().position(|&a| a == c).ok_or(Error::NotInAlphabet(c)))
            .collect::<Result<Vec<_>>>()?;
        let n = self.group_len();
        let pad = self.alphabet.iter().position(|&a| a == self.pad).unwrap();
        while digits.len() % n != 0 {
            digits.push(pad);
        }
        Ok(digits.chunks(n).map(|group| self.system.word_for_tuple(group)).collect())
    }

    /// Inverse of [`encode`](Self::encode); padding is kept.
    pub fn decode<S: AsRef<str>>(&self, words: &[S]) -> Result<String> {
        let mut out = String::new();
        for word in words {
            let index = self.system.index_of(word.as_ref())?;
            for digit in self.system.tuple_at(index)? {
                out.push(self.alphabet[digit]);
            }
        }
        Ok(out)
    }
}
