//! N-wheel word generators.
//!
//! A [`WheelSystem`] is an ordered list of [`Wheel`]s; picking one fragment
//! from each wheel and concatenating them yields a word. Tuples are numbered
//! in mixed radix over the wheel sizes with the leftmost wheel as the most
//! significant digit, so for the Roman-numeral preset the index of a tuple
//! is exactly the number it spells.

mod format;
mod preset;

pub use format::{parse_wheels, write_wheels};
pub use preset::{
    binomial_24, nine_wheel, nine_wheel_with, preset, roman, roman_numeral, roman_value, tiltman, Preset,
    NINE_WHEEL_GLYPHS,
};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::glyph::Fragment;

/// A circular, ordered list of fragments with a rotation offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wheel {
    fragments: Vec<Fragment>,
    offset: usize,
}

impl Wheel {
    pub fn new(fragments: Vec<Fragment>) -> Result<Self> {
        if fragments.is_empty() {
            return Err(Error::EmptyWheel);
        }
        Ok(Wheel { fragments, offset: 0 })
    }

    /// Builds a wheel from string literals; `"-"` and `""` both mean the
    /// empty fragment.
    pub fn from_strs<S: AsRef<str>>(fragments: &[S]) -> Result<Self> {
        Wheel::new(
            fragments
                .iter()
                .map(|s| match s.as_ref() {
                    "-" => Fragment::empty(),
                    other => Fragment::new(other),
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.fragments.len()
    }

    /// Always false; wheels are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn fragments(&self) -> &[Fragment] {
        &self.fragments
    }

    pub fn fragment(&self, index: usize) -> &Fragment {
        &self.fragments[index]
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn set_offset(&mut self, offset: i64) {
        self.offset = wrap(offset, self.len());
    }

    pub fn rotate(&mut self, delta: i64) {
        self.offset = wrap(self.offset as i64 + delta, self.len());
    }

    /// The fragment `delta` steps away from the current offset.
    pub fn fragment_at(&self, delta: i64) -> &Fragment {
        &self.fragments[wrap(self.offset as i64 + delta, self.len())]
    }
}

fn wrap(value: i64, modulus: usize) -> usize {
    value.rem_euclid(modulus as i64) as usize
}

/// An ordered set of wheels read left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelSystem {
    wheels: Vec<Wheel>,
}

/// Words spelled by more than one fragment tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub word: String,
    pub tuples: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctReport {
    pub tuples: u128,
    pub distinct: usize,
    /// Sorted by word.
    pub collisions: Vec<Collision>,
}

impl DistinctReport {
    pub fn is_collision_free(&self) -> bool {
        self.collisions.is_empty()
    }
}

impl WheelSystem {
    pub fn new(wheels: Vec<Wheel>) -> Result<Self> {
        if wheels.is_empty() {
            return Err(Error::NoWheels);
        }
        Ok(WheelSystem { wheels })
    }

    pub fn from_strs<S: AsRef<str>>(wheels: &[&[S]]) -> Result<Self> {
        WheelSystem::new(wheels.iter().map(|w| Wheel::from_strs(w)).collect::<Result<_>>()?)
    }

    pub fn wheels(&self) -> &[Wheel] {
        &self.wheels
    }

    pub fn wheels_mut(&mut self) -> &mut [Wheel] {
        &mut self.wheels
    }

    pub fn into_wheels(self) -> Vec<Wheel> {
        self.wheels
    }

    pub fn wheel_count(&self) -> usize {
        self.wheels.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.wheels.iter().map(Wheel::len).collect()
    }

    /// Number of fragment tuples (not distinct words). Saturates at
    /// `u128::MAX`.
    pub fn tuple_count(&self) -> u128 {
        self.wheels.iter().fold(1u128, |acc, w| acc.saturating_mul(w.len() as u128))
    }

    /// Mixed-radix digits of `index`, most significant (leftmost wheel) first.
    pub fn tuple_at(&self, index: u128) -> Result<Vec<usize>> {
        let count = self.tuple_count();
        if index >= count {
            return Err(Error::IndexOutOfRange { index, count });
        }
        let mut digits = vec![0; self.wheels.len()];
        let mut rest = index;
        for (digit, wheel) in digits.iter_mut().zip(&self.wheels).rev() {
            let radix = wheel.len() as u128;
            *digit = (rest % radix) as usize;
            rest /= radix;
        }
        Ok(digits)
    }

    /// Inverse of [`tuple_at`](Self::tuple_at).
    pub fn index_of_tuple(&self, tuple: &[usize]) -> Result<u128> {
        if tuple.len() != self.wheels.len() {
            return Err(Error::LengthMismatch { expected: self.wheels.len(), got: tuple.len() });
        }
        let mut index = 0u128;
        for (&digit, wheel) in tuple.iter().zip(&self.wheels) {
            if digit >= wheel.len() {
                return Err(Error::IndexOutOfRange { index: digit as u128, count: wheel.len() as u128 });
            }
            index = index * wheel.len() as u128 + digit as u128;
        }
        Ok(index)
    }

    /// Concatenation of the selected fragments. Panics if a digit is out of
    /// range for its wheel.
    pub fn word_for_tuple(&self, tuple: &[usize]) -> String {
        let mut word = String::new();
        for (&digit, wheel) in tuple.iter().zip(&self.wheels) {
            word.push_str(wheel.fragment(digit).as_str());
        }
        word
    }

    pub fn word_at(&self, index: u128) -> Result<String> {
        Ok(self.word_for_tuple(&self.tuple_at(index)?))
    }

    /// Every tuple whose concatenation is `word`, found by exhaustive split
    /// search. Tuples come out in ascending index order.
    pub fn parses(&self, word: &str) -> Vec<Vec<usize>> {
        let mut found = Vec::new();
        let mut current = Vec::with_capacity(self.wheels.len());
        self.search(word, 0, &mut current, &mut found);
        found
    }

    fn search(&self, rest: &str, wheel: usize, current: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
        if wheel == self.wheels.len() {
            if rest.is_empty() {
                found.push(current.clone());
            }
            return;
        }
        for (i, fragment) in self.wheels[wheel].fragments().iter().enumerate() {
            if let Some(tail) = rest.strip_prefix(fragment.as_str()) {
                current.push(i);
                self.search(tail, wheel + 1, current, found);
                current.pop();
            }
        }
    }

    pub fn generates(&self, word: &str) -> bool {
        !self.parses(word).is_empty()
    }

    /// The index of the unique tuple spelling `word`.
    pub fn index_of(&self, word: &str) -> Result<u128> {
        let mut parses = self.parses(word);
        match parses.len() {
            0 => Err(Error::NotInVocabulary(word.to_owned())),
            1 => self.index_of_tuple(&parses.pop().unwrap()),
            _ => Err(Error::Ambiguous { word: word.to_owned(), parses }),
        }
    }

    /// All `(index, word)` pairs in index order.
    pub fn enumerate(&self) -> Words<'_> {
        Words { system: self, digits: vec![0; self.wheels.len()], next: 0, count: self.tuple_count() }
    }

    pub fn distinct_words(&self) -> DistinctReport {
        let mut seen: HashMap<String, Vec<u128>> = HashMap::new();
        for (index, word) in self.enumerate() {
            seen.entry(word).or_default().push(index);
        }
        let distinct = seen.len();
        let mut collisions: Vec<Collision> = seen
            .into_iter()
            .filter(|(_, indices)| indices.len() > 1)
            .map(|(word, indices)| Collision {
                word,
                tuples: indices.into_iter().map(|i| self.tuple_at(i).unwrap()).collect(),
            })
            .collect();
        collisions.sort_by(|a, b| a.word.cmp(&b.word));
        DistinctReport { tuples: self.tuple_count(), distinct, collisions }
    }

    /// The word shown when each wheel is turned `deltas[i]` steps past its
    /// stored offset. Does not modify the stored offsets.
    pub fn spin(&self, deltas: &[i64]) -> Result<String> {
        if deltas.len() != self.wheels.len() {
            return Err(Error::LengthMismatch { expected: self.wheels.len(), got: deltas.len() });
        }
        Ok(self.wheels.iter().zip(deltas).map(|(wheel, &d)| wheel.fragment_at(d).as_str()).collect())
    }

    /// The word at the wheels' stored offsets.
    pub fn current_word(&self) -> String {
        self.wheels.iter().map(|w| w.fragment_at(0).as_str()).collect()
    }
}

/// Iterator over the vocabulary of a [`WheelSystem`]; see
/// [`WheelSystem::enumerate`].
#[derive(Debug, Clone)]
pub struct Words<'a> {
    system: &'a WheelSystem,
    digits: Vec<usize>,
    next: u128,
    count: u128,
}

impl Iterator for Words<'_> {
    type Item = (u128, String);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.count {
            return None;
        }
        let item = (self.next, self.system.word_for_tuple(&self.digits));
        self.next += 1;
        for (digit, wheel) in self.digits.iter_mut().zip(&self.system.wheels).rev() {
            *digit += 1;
            if *digit < wheel.len() {
                break;
            }
            *digit = 0;
        }
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.count - self.next;
        match usize::try_from(left) {
            Ok(n) => (n, Some(n)),
            Err(_) => (usize::MAX, None),
        }
    }
}
