#![allow(dead_code)]

use std::collections::BTreeSet;

use grillewheel::grammar::GrammarSpec;
use grillewheel::wheels::{Wheel, WheelSystem};
use grillewheel::Fragment;
use rand::seq::SliceRandom;
use rand::Rng;

pub const CORE: &str = "kt";
pub const MANTLE: &str = "ce";
pub const CRUST: &str = "dlo";

/// Grammar with the glyph classes used by [`grammar_shaped_system`].
pub fn small_grammar() -> GrammarSpec {
    GrammarSpec::new(CORE, MANTLE, CRUST).unwrap()
}

fn run<R: Rng>(rng: &mut R, glyphs: &str, min: usize, max: usize) -> String {
    let glyphs: Vec<char> = glyphs.chars().collect();
    let n = rng.gen_range(min..=max);
    (0..n).map(|_| *glyphs.choose(rng).unwrap()).collect()
}

fn distinct<R: Rng>(rng: &mut R, count: usize, make: impl Fn(&mut R) -> String) -> Vec<String> {
    let mut seen = BTreeSet::new();
    while seen.len() < count {
        seen.insert(make(rng));
    }
    let mut v: Vec<String> = seen.into_iter().collect();
    v.shuffle(rng);
    v
}

/// A random three-wheel system whose words split back uniquely under
/// [`small_grammar`]: left fragments are crust then mantle, centre
/// fragments are non-empty core runs, right fragments are mantle then crust.
pub fn grammar_shaped_system<R: Rng>(rng: &mut R, size: usize) -> WheelSystem {
    let left = distinct(rng, size, |r| run(r, CRUST, 0, 3) + &run(r, MANTLE, 0, 2));
    let centre = distinct(rng, size, |r| run(r, CORE, 1, 5));
    let right = distinct(rng, size, |r| run(r, MANTLE, 0, 2) + &run(r, CRUST, 0, 3));
    WheelSystem::new(
        [left, centre, right]
            .into_iter()
            .map(|w| Wheel::new(w.into_iter().map(Fragment::new).collect()).unwrap())
            .collect(),
    )
    .unwrap()
}

/// Fragment sets per wheel, ignoring order.
pub fn fragment_sets(system: &WheelSystem) -> Vec<BTreeSet<String>> {
    system.wheels().iter().map(|w| w.fragments().iter().map(|f| f.as_str().to_owned()).collect()).collect()
}

/// Random words over `glyphs` with lengths in `lengths`.
pub fn random_words(
    rng: &mut impl Rng,
    glyphs: &str,
    count: usize,
    lengths: std::ops::RangeInclusive<usize>,
) -> Vec<String> {
    let glyphs: Vec<char> = glyphs.chars().collect();
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lengths.clone());
            (0..n).map(|_| *glyphs.choose(rng).unwrap()).collect()
        })
        .collect()
}
