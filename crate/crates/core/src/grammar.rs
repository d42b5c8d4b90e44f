//! Layered word grammar: `crust* mantle* core* mantle* crust*`.
//!
//! Glyphs fall into disjoint classes. Crust glyphs form the outer shell of a
//! word, mantle glyphs the layer inside it and core glyphs the centre; any
//! layer may be empty. Two extra classes refine the crust: prefix glyphs
//! (word-initial) and final glyphs (word-final). With the strict rules off
//! both behave as ordinary crust glyphs wherever they occur.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

const EVA_GRAMMAR: &str = include_str!("../data/eva.grammar");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Core,
    Mantle,
    Crust,
    Prefix,
    Final,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layer {
    Crust,
    Mantle,
    Core,
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layer::Crust => "crust",
            Layer::Mantle => "mantle",
            Layer::Core => "core",
        })
    }
}

/// Positions of the layered pattern, outermost-left to outermost-right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Prefix,
    LeftCrust,
    LeftMantle,
    Core,
    RightMantle,
    RightCrust,
    Final,
}

impl Slot {
    pub const ALL: [Slot; 7] =
        [Slot::Prefix, Slot::LeftCrust, Slot::LeftMantle, Slot::Core, Slot::RightMantle, Slot::RightCrust, Slot::Final];

    pub fn layer(self) -> Layer {
        match self {
            Slot::Core => Layer::Core,
            Slot::LeftMantle | Slot::RightMantle => Layer::Mantle,
            _ => Layer::Crust,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rules {
    /// Prefix glyphs may only open a word.
    pub strict_prefix: bool,
    /// Final glyphs may only close a word.
    pub strict_final: bool,
    /// Longest allowed core run.
    pub max_core_run: Option<usize>,
    /// Let three-part splits move leading core glyphs into the left piece.
    pub core_shift: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrammarSpec {
    classes: BTreeMap<char, Class>,
    pub rules: Rules,
}

impl GrammarSpec {
    pub fn new(core: &str, mantle: &str, crust: &str) -> Result<Self> {
        let mut spec = GrammarSpec { classes: BTreeMap::new(), rules: Rules::default() };
        spec.add_class(Class::Core, core.chars())?;
        spec.add_class(Class::Mantle, mantle.chars())?;
        spec.add_class(Class::Crust, crust.chars())?;
        Ok(spec)
    }

    pub fn with_prefix(mut self, glyphs: &str) -> Result<Self> {
        self.add_class(Class::Prefix, glyphs.chars())?;
        Ok(self)
    }

    pub fn with_final(mut self, glyphs: &str) -> Result<Self> {
        self.add_class(Class::Final, glyphs.chars())?;
        Ok(self)
    }

    pub fn with_rules(mut self, rules: Rules) -> Self {
        self.rules = rules;
        self
    }

    /// The bundled approximate EVA grammar.
    pub fn eva() -> Self {
        parse_grammar(EVA_GRAMMAR).expect("bundled grammar parses")
    }

    fn add_class(&mut self, class: Class, glyphs: impl IntoIterator<Item = char>) -> Result<()> {
        for g in glyphs.into_iter().filter(|c| !c.is_whitespace()) {
            if let Some(prev) = self.classes.insert(g, class) {
                if prev != class {
                    return Err(Error::InvalidGrammar(format!("glyph {g:?} is both {prev:?} and {class:?}")));
                }
            }
        }
        Ok(())
    }

    pub fn class_of(&self, glyph: char) -> Option<Class> {
        self.classes.get(&glyph).copied()
    }

    pub fn glyphs(&self, class: Class) -> BTreeSet<char> {
        self.classes.iter().filter(|(_, &c)| c == class).map(|(&g, _)| g).collect()
    }

    fn acts_as_crust(&self, glyph: char) -> bool {
        match self.class_of(glyph) {
            Some(Class::Crust) => true,
            Some(Class::Prefix) => !self.rules.strict_prefix,
            Some(Class::Final) => !self.rules.strict_final,
            _ => false,
        }
    }

    /// Outermost-first greedy parse.
    pub fn parse_word(&self, word: &str) -> WordParse {
        let glyphs: Vec<char> = word.chars().collect();
        let mut slots: Vec<(Slot, String)> = Vec::with_capacity(Slot::ALL.len());
        let mut i = 0;
        let mut take = |slot: Slot, i: &mut usize, max: usize, pred: &dyn Fn(char) -> bool| {
            let start = *i;
            while *i < glyphs.len() && *i - start < max && pred(glyphs[*i]) {
                *i += 1;
            }
            slots.push((slot, glyphs[start..*i].iter().collect()));
        };
        let is = |class: Class| move |g: char| self.class_of(g) == Some(class);

        take(Slot::Prefix, &mut i, usize::MAX, &is(Class::Prefix));
        take(Slot::LeftCrust, &mut i, usize::MAX, &|g| self.acts_as_crust(g));
        take(Slot::LeftMantle, &mut i, usize::MAX, &is(Class::Mantle));
        take(Slot::Core, &mut i, self.rules.max_core_run.unwrap_or(usize::MAX), &is(Class::Core));
        take(Slot::RightMantle, &mut i, usize::MAX, &is(Class::Mantle));
        take(Slot::RightCrust, &mut i, usize::MAX, &|g| self.acts_as_crust(g));
        // A closing final glyph gets its own slot.
        let at_end = i == glyphs.len();
        let right = &mut slots[5].1;
        let mut fin = String::new();
        if at_end && right.chars().last().is_some_and(|g| self.class_of(g) == Some(Class::Final)) {
            fin.push(right.pop().unwrap());
        } else if i + 1 == glyphs.len() && self.class_of(glyphs[i]) == Some(Class::Final) {
            fin.push(glyphs[i]);
            i += 1;
        }
        slots.push((Slot::Final, fin));

        let valid = i == glyphs.len();
        WordParse { word: word.to_owned(), slots, failure: (!valid).then_some(i) }
    }

    /// All ways of cutting a valid word into left / centre / right pieces:
    /// left holds the leading crust and mantle, centre the core with any
    /// adjacent mantle, right the trailing mantle and crust. Empty when the
    /// word does not parse.
    pub fn three_part_splits(&self, word: &str) -> Vec<(String, String, String)> {
        let parse = self.parse_word(word);
        if !parse.valid() {
            return Vec::new();
        }
        let g = |s: Slot| -> Vec<char> { parse.slot(s).chars().collect() };
        let outer_left: String = parse.slot(Slot::Prefix).to_owned() + parse.slot(Slot::LeftCrust);
        let outer_right: String = parse.slot(Slot::RightCrust).to_owned() + parse.slot(Slot::Final);
        let (ml, core, mr) = (g(Slot::LeftMantle), g(Slot::Core), g(Slot::RightMantle));
        let s = |v: &[char]| v.iter().collect::<String>();

        let mut out = Vec::new();
        if core.is_empty() && ml.is_empty() && mr.is_empty() {
            // crust only: one cut anywhere between prefix and final
            let whole: Vec<char> = outer_left.chars().chain(outer_right.chars()).collect();
            let lo = parse.slot(Slot::Prefix).chars().count();
            let hi = whole.len() - parse.slot(Slot::Final).chars().count();
            for b in lo..=hi.max(lo) {
                out.push((s(&whole[..b]), String::new(), s(&whole[b..])));
            }
            return out;
        }
        if core.is_empty() {
            // all mantle sits in the left mantle slot; cut it twice
            let m: Vec<char> = ml.iter().chain(&mr).copied().collect();
            for a in 0..=m.len() {
                for b in a..=m.len() {
                    out.push((outer_left.clone() + &s(&m[..a]), s(&m[a..b]), s(&m[b..]) + &outer_right));
                }
            }
            return out;
        }
        for i in 0..=ml.len() {
            for j in 0..=mr.len() {
                out.push((
                    outer_left.clone() + &s(&ml[..i]),
                    s(&ml[i..]) + &s(&core) + &s(&mr[..j]),
                    s(&mr[j..]) + &outer_right,
                ));
            }
        }
        if self.rules.core_shift {
            for k in 1..core.len() {
                for j in 0..=mr.len() {
                    out.push((
                        outer_left.clone() + &s(&ml) + &s(&core[..k]),
                        s(&core[k..]) + &s(&mr[..j]),
                        s(&mr[j..]) + &outer_right,
                    ));
                }
            }
        }
        out
    }

    /// The split with the whole core, and nothing else, in the centre.
    pub fn core_centred_split(&self, word: &str) -> Option<(String, String, String)> {
        let parse = self.parse_word(word);
        if !parse.valid() {
            return None;
        }
        let left = [Slot::Prefix, Slot::LeftCrust, Slot::LeftMantle].map(|s| parse.slot(s)).concat();
        let right = [Slot::RightMantle, Slot::RightCrust, Slot::Final].map(|s| parse.slot(s)).concat();
        Some((left, parse.slot(Slot::Core).to_owned(), right))
    }
}

/// A word laid out over the seven slots of the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordParse {
    pub word: String,
    /// Every slot in pattern order, possibly empty.
    pub slots: Vec<(Slot, String)>,
    /// Glyph index of the first glyph the pattern could not absorb.
    pub failure: Option<usize>,
}

impl WordParse {
    pub fn valid(&self) -> bool {
        self.failure.is_none()
    }

    pub fn slot(&self, slot: Slot) -> &str {
        self.slots.iter().find(|(s, _)| *s == slot).map_or("", |(_, t)| t.as_str())
    }

    /// Non-empty runs with their layer labels.
    pub fn runs(&self) -> Vec<(&str, Layer)> {
        self.slots.iter().filter(|(_, t)| !t.is_empty()).map(|(s, t)| (t.as_str(), s.layer())).collect()
    }
}

impl fmt::Display for WordParse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let runs: Vec<String> = self.runs().iter().map(|(t, l)| format!("{l}({t})")).collect();
        write!(f, "{}", runs.join(" "))?;
        if let Some(p) = self.failure {
            let consumed: usize = self.slots.iter().map(|(_, t)| t.chars().count()).sum();
            debug_assert_eq!(consumed, p);
            write!(f, " !{p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverageReport {
    pub types: usize,
    pub parsed: usize,
    /// Failed types keyed by the glyph index where parsing stopped.
    pub failures_by_position: BTreeMap<usize, Vec<String>>,
    /// Failed types that split into two parseable words: `(word, left, right)`.
    pub concatenations: Vec<(String, String, String)>,
}

impl CoverageReport {
    pub fn fraction(&self) -> f64 {
        if self.types == 0 {
            return 0.0;
        }
        self.parsed as f64 / self.types as f64
    }

    pub fn failed(&self) -> usize {
        self.types - self.parsed
    }
}

/// Parse coverage over distinct word types.
pub fn coverage<'a>(words: impl IntoIterator<Item = &'a str>, spec: &GrammarSpec) -> CoverageReport {
    let mut seen = HashSet::new();
    let mut types: Vec<&str> = words.into_iter().filter(|w| seen.insert(*w)).collect();
    types.sort_unstable();
    let mut report = CoverageReport {
        types: types.len(),
        parsed: 0,
        failures_by_position: BTreeMap::new(),
        concatenations: Vec::new(),
    };
    for word in types {
        let parse = spec.parse_word(word);
        match parse.failure {
            None => report.parsed += 1,
            Some(pos) => {
                report.failures_by_position.entry(pos).or_default().push(word.to_owned());
                let split = word
                    .char_indices()
                    .skip(1)
                    .map(|(b, _)| b)
                    .find(|&b| spec.parse_word(&word[..b]).valid() && spec.parse_word(&word[b..]).valid());
                if let Some(b) = split {
                    report.concatenations.push((word.to_owned(), word[..b].to_owned(), word[b..].to_owned()));
                }
            }
        }
    }
    report
}

/// Parses the grammar file format: `core:`, `mantle:`, `crust:`, `prefix:`
/// and `final:` lines listing space-separated glyphs, plus an optional
/// `rules:` line (`strict_prefix strict_final core_shift max_core=N`).
pub fn parse_grammar(text: &str) -> Result<GrammarSpec> {
    let mut spec = GrammarSpec { classes: BTreeMap::new(), rules: Rules::default() };
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: n + 1, message };
        let (section, rest) = line.split_once(':').ok_or_else(|| err(format!("expected \"section:\" in {line:?}")))?;
        let class = match section.trim() {
            "core" => Class::Core,
            "mantle" => Class::Mantle,
            "crust" => Class::Crust,
            "prefix" => Class::Prefix,
            "final" => Class::Final,
            "rules" => {
                for rule in rest.split_whitespace() {
                    match rule {
                        "strict_prefix" => spec.rules.strict_prefix = true,
                        "strict_final" => spec.rules.strict_final = true,
                        "core_shift" => spec.rules.core_shift = true,
                        r => match r.strip_prefix("max_core=").map(str::parse) {
                            Some(Ok(n)) => spec.rules.max_core_run = Some(n),
                            _ => return Err(err(format!("unknown rule {r:?}"))),
                        },
                    }
                }
                continue;
            }
            other => return Err(err(format!("unknown section {other:?}"))),
        };
        let mut glyphs = Vec::new();
        for token in rest.split_whitespace() {
            let mut chars = token.chars();
            match (chars.next(), chars.next()) {
                (Some(g), None) => glyphs.push(g),
                _ => return Err(err(format!("{token:?} is not a single glyph"))),
            }
        }
        spec.add_class(class, glyphs)?;
    }
    Ok(spec)
}
