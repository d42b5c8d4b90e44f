use std::str::FromStr;

use super::{parse_wheels, Wheel, WheelSystem};
use crate::error::{Error, Result};
use crate::glyph::Fragment;

const TILTMAN: &str = include_str!("../../data/tiltman.wheels");
const BINOMIAL_24: &str = include_str!("../../data/binomial24.wheels");

/// Default glyphs for [`nine_wheel`]: eight optional glyphs for wheels 1-8,
/// then the two glyphs of wheel 9 (`{g9, g9 g10}`).
pub const NINE_WHEEL_GLYPHS: [char; 10] = ['q', 'o', 'k', 'c', 'h', 'e', 'd', 'a', 'n', 'i'];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Roman,
    Tiltman,
    NineWheel,
    Binomial24,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Roman, Preset::Tiltman, Preset::NineWheel, Preset::Binomial24];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Roman => "roman",
            Preset::Tiltman => "tiltman",
            Preset::NineWheel => "nine_wheel",
            Preset::Binomial24 => "binomial_24",
        }
    }

    pub fn build(self) -> WheelSystem {
        match self {
            Preset::Roman => roman(),
            Preset::Tiltman => tiltman(),
            Preset::NineWheel => nine_wheel(),
            Preset::Binomial24 => binomial_24(),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        Preset::ALL.into_iter().find(|p| p.name() == key).ok_or_else(|| Error::UnknownPreset(s.to_owned()))
    }
}

pub fn preset(name: &str) -> Result<WheelSystem> {
    Ok(name.parse::<Preset>()?.build())
}

/// Seven wheels spelling every additive Roman numeral from 0 to 4999. The
/// tuple index equals the numeric value.
pub fn roman() -> WheelSystem {
    let repeat = |glyph: &str, max: usize| -> Wheel {
        Wheel::new((0..=max).map(|n| Fragment::new(glyph.repeat(n))).collect()).unwrap()
    };
    WheelSystem::new(vec![
        repeat("M", 4),
        repeat("D", 1),
        repeat("C", 4),
        repeat("L", 1),
        repeat("X", 4),
        repeat("V", 1),
        repeat("I", 4),
    ])
    .unwrap()
}

/// Additive Roman numeral for `value` in `0..5000`, read off the preset.
pub fn roman_numeral(value: u32) -> Result<String> {
    roman().word_at(value as u128)
}

/// Value of an additive Roman numeral.
pub fn roman_value(numeral: &str) -> Result<u32> {
    roman().index_of(numeral).map(|i| i as u32)
}

/// Twelve roots on the left wheel, twenty suffixes on the right.
pub fn tiltman() -> WheelSystem {
    parse_wheels(TILTMAN).expect("bundled tiltman preset parses")
}

/// Three 24-fragment wheels with 1:3:3:1 fragment-length profiles.
pub fn binomial_24() -> WheelSystem {
    parse_wheels(BINOMIAL_24).expect("bundled binomial_24 preset parses")
}

pub fn nine_wheel() -> WheelSystem {
    nine_wheel_with(&NINE_WHEEL_GLYPHS)
}

/// Wheels 1-8 are `{empty, glyphs[i]}`; wheel 9 is
/// `{glyphs[8], glyphs[8] glyphs[9]}`.
pub fn nine_wheel_with(glyphs: &[char; 10]) -> WheelSystem {
    let mut wheels: Vec<Wheel> = glyphs[..8]
        .iter()
        .map(|&g| Wheel::new(vec![Fragment::empty(), Fragment::new(g.to_string())]).unwrap())
        .collect();
    let last = glyphs[8].to_string();
    let pair = format!("{}{}", glyphs[8], glyphs[9]);
    wheels.push(Wheel::new(vec![Fragment::new(last), Fragment::new(pair)]).unwrap());
    WheelSystem::new(wheels).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        for p in Preset::ALL {
            assert_eq!(p.name().parse::<Preset>().unwrap(), p);
        }
        assert_eq!("nine-wheel".parse::<Preset>().unwrap(), Preset::NineWheel);
        assert!(matches!(preset("klingon"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn preset_shapes() {
        assert_eq!(roman().sizes(), vec![5, 2, 5, 2, 5, 2, 5]);
        assert_eq!(roman().tuple_count(), 5000);
        assert_eq!(tiltman().sizes(), vec![12, 20]);
        assert_eq!(tiltman().tuple_count(), 240);
        assert_eq!(binomial_24().sizes(), vec![24, 24, 24]);
        let nine = nine_wheel();
        assert_eq!(nine.wheel_count(), 9);
        assert_eq!(nine.tuple_count(), 512);
        assert!(nine.distinct_words().is_collision_free());
    }

    #[test]
    fn roman_index_is_value() {
        let r = roman();
        assert_eq!(r.word_at(0).unwrap(), "");
        assert_eq!(r.word_at(4).unwrap(), "IIII");
        assert_eq!(r.word_at(1967).unwrap(), "MDCCCCLXVII");
        assert_eq!(r.index_of("MDCCCCLXVII").unwrap(), 1967);
        assert_eq!(roman_numeral(4999).unwrap(), "MMMMDCCCCLXXXXVIIII");
        assert!(roman_numeral(5000).is_err());
        assert_eq!(roman_value("XIIII").unwrap(), 14);
        assert!(matches!(roman_value("IV"), Err(Error::NotInVocabulary(_))));
    }
}
