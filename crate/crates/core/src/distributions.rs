//! Fragment- and word-length distributions.
//!
//! The length distribution of a wheel system (counted over tuples) is the
//! convolution of its wheels' fragment-length distributions. Three wheels of
//! 24 fragments with 1:3:3:1 length profiles give an exactly binomial
//! 27·C(9, k) word-length distribution over lengths 1 to 10.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::glyph::Fragment;
use crate::wheels::{Wheel, WheelSystem};

/// Counts of items by glyph length.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LengthDistribution {
    counts: BTreeMap<usize, u64>,
}

impl LengthDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Zero counts are dropped.
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut d = Self::new();
        for (len, n) in counts {
            d.add(len, n);
        }
        d
    }

    /// `counts[i]` is the count at length `offset + i`.
    pub fn from_profile(offset: usize, counts: &[u64]) -> Self {
        Self::from_counts(counts.iter().enumerate().map(|(i, &n)| (offset + i, n)))
    }

    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut d = Self::new();
        for len in lengths {
            d.add(len, 1);
        }
        d
    }

    pub fn of_words<'a>(words: impl IntoIterator<Item = &'a str>) -> Self {
        Self::from_lengths(words.into_iter().map(|w| w.chars().count()))
    }

    pub fn add(&mut self, len: usize, n: u64) {
        if n > 0 {
            *self.counts.entry(len).or_default() += n;
        }
    }

    pub fn count(&self, len: usize) -> u64 {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn min_len(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// Non-zero `(length, count)` pairs in ascending length.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&l, &n)| (l, n))
    }

    /// Counts for every length from `min_len` to `max_len`, zeros included.
    pub fn dense(&self) -> Vec<(usize, u64)> {
        match (self.min_len(), self.max_len()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|l| (l, self.count(l))).collect(),
            _ => Vec::new(),
        }
    }

    /// Share of `len` in the total, in percent, unrounded.
    pub fn fraction_percent(&self, len: usize) -> f64 {
        let total = self.total();
        if total == 0 {
            return 0.0;
        }
        100.0 * self.count(len) as f64 / total as f64
    }

    /// `(length, percent)` over the dense range, rounded half-up to two
    /// decimals.
    pub fn percentages(&self) -> Vec<(usize, Percent)> {
        let total = self.total();
        self.dense().into_iter().map(|(l, n)| (l, Percent::of(n, total))).collect()
    }

    /// True when the counts read the same from both ends of the range.
    pub fn is_symmetric(&self) -> bool {
        let dense = self.dense();
        dense.iter().zip(dense.iter().rev()).all(|(a, b)| a.1 == b.1)
    }
}

/// A percentage held in hundredths so that printing is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Percent(u64);

impl Percent {
    /// `100 * count / total` rounded half-up to two decimals.
    pub fn of(count: u64, total: u64) -> Self {
        if total == 0 {
            return Percent(0);
        }
        let num = 20_000u128 * count as u128 + total as u128;
        Percent((num / (2 * total as u128)) as u64)
    }

    pub fn hundredths(self) -> u64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 100.0
    }
}

impl fmt::Display for Percent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = format!("{}.{:02}", self.0 / 100, self.0 % 100);
        f.pad(&text)
    }
}

pub fn convolve(a: &LengthDistribution, b: &LengthDistribution) -> LengthDistribution {
    let mut out = LengthDistribution::new();
    for (la, na) in a.iter() {
        for (lb, nb) in b.iter() {
            out.add(la + lb, na * nb);
        }
    }
    out
}

pub fn wheel_length_distribution(wheel: &Wheel) -> LengthDistribution {
    LengthDistribution::from_lengths(wheel.fragments().iter().map(Fragment::len))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Convolution of the per-wheel distributions.
    Tuple,
    /// Enumerate every tuple and measure the concatenation.
    Exhaustive,
}

pub fn system_length_distribution(system: &WheelSystem, mode: Mode) -> LengthDistribution {
    match mode {
        Mode::Tuple => system
            .wheels()
            .iter()
            .map(wheel_length_distribution)
            .fold(LengthDistribution::from_counts([(0, 1)]), |acc, d| convolve(&acc, &d)),
        Mode::Exhaustive => LengthDistribution::from_lengths(system.enumerate().map(|(_, w)| w.chars().count())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scaling {
    /// Fail unless `total` is a multiple of `2^trials`.
    Exact,
    /// Largest-remainder rounding; counts still sum to `total`.
    Rounded,
}

/// Counts at `shift + k` proportional to `C(trials, k)`, summing to `total`.
pub fn binomial_reference(trials: u32, shift: usize, total: u64, scaling: Scaling) -> Result<LengthDistribution> {
    let row = pascal_row(trials);
    let denom = 1u128 << trials;
    let total_w = total as u128;
    if total_w.is_multiple_of(denom) {
        let scale = total_w / denom;
        return Ok(LengthDistribution::from_counts(
            row.iter().enumerate().map(|(k, &c)| (shift + k, (c * scale) as u64)),
        ));
    }
    if scaling == Scaling::Exact {
        return Err(Error::InexactScaling { trials, total });
    }
    let mut counts: Vec<(usize, u128, u128)> =
        row.iter().enumerate().map(|(k, &c)| (k, c * total_w / denom, c * total_w % denom)).collect();
    let assigned: u128 = counts.iter().map(|c| c.1).sum();
    let mut order: Vec<usize> = (0..counts.len()).collect();
    order.sort_by(|&a, &b| counts[b].2.cmp(&counts[a].2).then(a.cmp(&b)));
    for &i in order.iter().take((total_w - assigned) as usize) {
        counts[i].1 += 1;
    }
    Ok(LengthDistribution::from_counts(counts.into_iter().map(|(k, n, _)| (shift + k, n as u64))))
}

fn pascal_row(n: u32) -> Vec<u128> {
    let mut row = vec![1u128];
    for k in 0..n as u128 {
        let next = row[k as usize] * (n as u128 - k) / (k + 1);
        row.push(next);
    }
    row
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    /// Largest absolute difference in percentage points.
    pub max_abs_points: f64,
    /// Length at which it occurs (the shortest, on ties).
    pub at_length: usize,
    /// Total variation distance, in [0, 1].
    pub total_variation: f64,
}

impl Deviation {
    pub fn within(&self, threshold_points: f64) -> bool {
        self.max_abs_points <= threshold_points
    }
}

pub fn deviation(d: &LengthDistribution, reference: &LengthDistribution) -> Deviation {
    let lo = d.min_len().into_iter().chain(reference.min_len()).min().unwrap_or(0);
    let hi = d.max_len().into_iter().chain(reference.max_len()).max().unwrap_or(0);
    let mut max_abs_points = 0.0;
    let mut at_length = lo;
    let mut abs_sum = 0.0;
    for len in lo..=hi {
        let diff = (d.fraction_percent(len) - reference.fraction_percent(len)).abs();
        abs_sum += diff;
        if diff > max_abs_points {
            max_abs_points = diff;
            at_length = len;
        }
    }
    Deviation { max_abs_points, at_length, total_variation: abs_sum / 200.0 }
}

/// Merges contiguous runs of wheels into single wheels whose fragments are
/// the in-order Cartesian product of the run's fragments.
pub fn group_wheels(system: &WheelSystem, grouping: &[Vec<usize>]) -> Result<WheelSystem> {
    let n = system.wheel_count();
    let mut expected = 0;
    for group in grouping {
        if group.is_empty() {
            return Err(Error::NonContiguousGrouping { wheels: n });
        }
        for &w in group {
            if w != expected {
                return Err(Error::NonContiguousGrouping { wheels: n });
            }
            expected += 1;
        }
    }
    if expected != n {
        return Err(Error::NonContiguousGrouping { wheels: n });
    }
    let wheels = grouping
        .iter()
        .map(|group| {
            let members: Vec<Wheel> = group.iter().map(|&w| system.wheels()[w].clone()).collect();
            let sub = WheelSystem::new(members)?;
            Wheel::new(sub.enumerate().map(|(_, w)| Fragment::new(w)).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    WheelSystem::new(wheels)
}

/// Groups consecutive wheels by run sizes, e.g. `[3, 3, 3]`.
pub fn group_wheels_by_sizes(system: &WheelSystem, sizes: &[usize]) -> Result<WheelSystem> {
    let mut next = 0;
    let grouping: Vec<Vec<usize>> = sizes
        .iter()
        .map(|&s| {
            let g = (next..next + s).collect();
            next += s;
            g
        })
        .collect();
    group_wheels(system, &grouping)
}

/// A per-wheel fragment-length profile: `counts[i]` fragments of length
/// `min_len + i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthProfile {
    pub min_len: usize,
    pub counts: [u64; 4],
}

impl LengthProfile {
    pub fn distribution(&self) -> LengthDistribution {
        LengthDistribution::from_profile(self.min_len, &self.counts)
    }
}

const fn profile(min_len: usize, counts: [u64; 4]) -> LengthProfile {
    LengthProfile { min_len, counts }
}

/// The three fragment-length configurations (left, centre, right) for
/// 24-fragment wheels: binomial and two near-binomial alternatives.
pub const THREE_WHEEL_PROFILES: [(&str, [LengthProfile; 3]); 3] = [
    ("binomial", [profile(0, [3, 9, 9, 3]), profile(0, [3, 9, 9, 3]), profile(1, [3, 9, 9, 3])]),
    ("alternative 1", [profile(0, [2, 10, 8, 4]), profile(0, [3, 7, 10, 4]), profile(1, [5, 7, 9, 3])]),
    ("alternative 2", [profile(0, [5, 7, 7, 5]), profile(0, [1, 11, 11, 1]), profile(1, [4, 8, 8, 4])]),
];

/// A wheel system with the given length profiles and synthetic glyph
/// content (distinct fragments within each length).
pub fn profile_system(profiles: &[LengthProfile]) -> WheelSystem {
    let wheels = profiles
        .iter()
        .map(|p| {
            let mut fragments = Vec::new();
            for (i, &n) in p.counts.iter().enumerate() {
                let len = p.min_len + i;
                fragments.extend((0..n).map(|j| Fragment::new(synthetic_fragment(j, len))));
            }
            Wheel::new(fragments).unwrap()
        })
        .collect();
    WheelSystem::new(wheels).unwrap()
}

fn synthetic_fragment(mut index: u64, len: usize) -> String {
    let mut glyphs = vec![b'a'; len];
    for g in glyphs.iter_mut().rev() {
        *g = b'a' + (index % 26) as u8;
        index /= 26;
    }
    String::from_utf8(glyphs).unwrap()
}

/// Word-length distributions of the three profile configurations.
pub fn three_wheel_table() -> Vec<(&'static str, LengthDistribution)> {
    THREE_WHEEL_PROFILES
        .iter()
        .map(|(name, p)| (*name, system_length_distribution(&profile_system(p), Mode::Tuple)))
        .collect()
}
