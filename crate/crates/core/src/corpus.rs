//! Transliteration corpora and the statistics computed over them.
//!
//! The accepted input is a small subset of the IVTFF convention:
//!
//! ```text
//! # comment
//! <f1r>      <! $L=A $H=1>
//! <f1r.1,@P0>   fachys.ykal.ar.ataiin
//! <f1r.2,+P0>   sory.ckhar.or,y.kair
//! ```
//!
//! * A locus without a `.` is a page header; `$KEY=VALUE` pairs inside a
//!   following `<! ... >` become page tags.
//! * A locus `<page.line,CODE>` opens a text line. `CODE` starting with `@`
//!   or `*` begins a paragraph, `+` or `=` continues one. Without a code a
//!   blank line or a new page begins a paragraph.
//! * Lines without any locus belong to the current page; blank lines separate
//!   their paragraphs.
//! * `.` separates words, `,` marks an uncertain space (split or joined per
//!   [`CommaMode`]). Whitespace, `-` and `=` also separate words.
//! * Inline `<...>` annotations and `!` fillers are removed, `{` and `}` are
//!   dropped keeping their content, and `[a:b]` keeps its first reading.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::glyph::Alphabet;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub pages: Vec<Page>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Page {
    pub id: String,
    pub tags: BTreeMap<String, String>,
    pub paragraphs: Vec<Paragraph>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Paragraph {
    pub lines: Vec<Line>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Line {
    pub tokens: Vec<String>,
}

/// Page tag key assumed when a tag query gives only a value.
pub const LANGUAGE_KEY: &str = "L";

impl Page {
    /// Matches `KEY=VALUE`, or a bare `VALUE` against the `L` key.
    pub fn has_tag(&self, tag: &str) -> bool {
        let (key, value) = tag.split_once('=').unwrap_or((LANGUAGE_KEY, tag));
        self.tags.get(key).is_some_and(|v| v == value)
    }
}

/// One token together with its position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TokenRef<'a> {
    pub page: usize,
    pub paragraph: usize,
    /// Line index within its paragraph.
    pub line: usize,
    /// Token index within its line.
    pub index: usize,
    pub line_len: usize,
    pub text: &'a str,
}

impl TokenRef<'_> {
    pub fn paragraph_initial(&self) -> bool {
        self.line == 0 && self.index == 0
    }

    pub fn top_line(&self) -> bool {
        self.line == 0
    }

    pub fn line_final(&self) -> bool {
        self.index + 1 == self.line_len
    }
}

impl Corpus {
    pub fn tokens(&self) -> impl Iterator<Item = TokenRef<'_>> {
        self.pages.iter().enumerate().flat_map(|(p, page)| {
            page.paragraphs.iter().enumerate().flat_map(move |(q, para)| {
                para.lines.iter().enumerate().flat_map(move |(l, line)| {
                    line.tokens.iter().enumerate().map(move |(i, t)| TokenRef {
                        page: p,
                        paragraph: q,
                        line: l,
                        index: i,
                        line_len: line.tokens.len(),
                        text: t,
                    })
                })
            })
        })
    }

    pub fn line_count(&self) -> usize {
        self.pages.iter().flat_map(|p| &p.paragraphs).map(|q| q.lines.len()).sum()
    }

    pub fn paragraph_count(&self) -> usize {
        self.pages.iter().map(|p| p.paragraphs.len()).sum()
    }

    pub fn word_types(&self) -> BTreeSet<&str> {
        self.tokens().map(|t| t.text).collect()
    }

    /// Word types with a leading ornament glyph removed from the first word
    /// of every paragraph.
    pub fn word_types_stripped(&self, ornaments: &BTreeSet<char>) -> BTreeSet<String> {
        self.tokens()
            .map(|t| {
                let mut chars = t.text.chars();
                match chars.next() {
                    Some(first)
                        if t.paragraph_initial() && ornaments.contains(&first) && t.text.len() > first.len_utf8() =>
                    {
                        chars.as_str().to_owned()
                    }
                    _ => t.text.to_owned(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CommaMode {
    /// An uncertain space separates words.
    #[default]
    Split,
    /// An uncertain space is ignored.
    Join,
}

#[derive(Debug, Clone, Default)]
pub struct LoadOptions {
    pub comma: CommaMode,
    /// Glyphs outside this set produce warnings.
    pub alphabet: Option<Alphabet>,
}

#[derive(Debug, Clone, Default)]
pub struct Loaded {
    pub corpus: Corpus,
    pub warnings: Vec<String>,
}

pub fn load_transliteration(path: impl AsRef<Path>, options: &LoadOptions) -> Result<Loaded> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_transliteration(&text, options)
}

#[derive(Default)]
struct Builder {
    corpus: Corpus,
    new_paragraph: bool,
}

impl Builder {
    fn page(&mut self, id: &str) -> &mut Page {
        if self.corpus.pages.last().is_none_or(|p| p.id != id) {
            self.corpus.pages.push(Page { id: id.to_owned(), ..Page::default() });
            self.new_paragraph = true;
        }
        self.corpus.pages.last_mut().unwrap()
    }

    fn push_line(&mut self, page: &str, tokens: Vec<String>) {
        if tokens.is_empty() {
            return;
        }
        self.page(page);
        let start = std::mem::take(&mut self.new_paragraph);
        let page = self.corpus.pages.last_mut().unwrap();
        if start || page.paragraphs.is_empty() {
            page.paragraphs.push(Paragraph::default());
        }
        page.paragraphs.last_mut().unwrap().lines.push(Line { tokens });
    }

    fn current_page(&self) -> String {
        self.corpus.pages.last().map(|p| p.id.clone()).unwrap_or_default()
    }
}

pub fn parse_transliteration(text: &str, options: &LoadOptions) -> Result<Loaded> {
    let mut b = Builder { new_paragraph: true, ..Builder::default() };
    let mut warnings = Vec::new();
    let mut reported: HashSet<char> = HashSet::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if line.is_empty() {
            b.new_paragraph = true;
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let (page, body) = if let Some(rest) = line.strip_prefix('<') {
            let malformed = || Error::MalformedLocus {
                line: line_no,
                tag: line.split_whitespace().next().unwrap_or("").to_owned(),
            };
            let (locus, body) = rest.split_once('>').ok_or_else(malformed)?;
            match locus.split_once('.') {
                None => {
                    let id = locus.trim();
                    if id.is_empty() || id.contains(char::is_whitespace) {
                        return Err(malformed());
                    }
                    let tags = parse_page_tags(body);
                    b.page(id).tags.extend(tags);
                    continue;
                }
                Some((page, rest)) => {
                    let page = page.trim();
                    let (line_id, code) = match rest.split_once([',', ';']) {
                        Some((l, c)) => (l, Some(c.trim())),
                        None => (rest, None),
                    };
                    if page.is_empty() || line_id.trim().is_empty() || page.contains(char::is_whitespace) {
                        return Err(malformed());
                    }
                    match code.and_then(|c| c.chars().next()) {
                        Some('@' | '*') => b.new_paragraph = true,
                        Some('+' | '=') => {}
                        _ => {}
                    }
                    (page.to_owned(), body)
                }
            }
        } else {
            (b.current_page(), line)
        };
        let tokens = tokenize(body, options.comma);
        if let Some(alphabet) = &options.alphabet {
            for g in tokens.iter().flat_map(|t| t.chars()) {
                if !alphabet.contains(g) && reported.insert(g) {
                    let w = format!("line {line_no}: glyph {g:?} outside the alphabet");
                    log::warn!("{w}");
                    warnings.push(w);
                }
            }
        }
        b.push_line(&page, tokens);
    }
    Ok(Loaded { corpus: b.corpus, warnings })
}

fn parse_page_tags(body: &str) -> BTreeMap<String, String> {
    let mut tags = BTreeMap::new();
    if let Some(start) = body.find("<!") {
        let inner = &body[start + 2..];
        let inner = inner.split_once('>').map_or(inner, |(i, _)| i);
        for item in inner.split_whitespace() {
            if let Some((k, v)) = item.trim_start_matches('$').split_once('=') {
                tags.insert(k.to_owned(), v.to_owned());
            }
        }
    }
    tags
}

/// Cleans a text body and splits it into tokens.
pub fn tokenize(body: &str, comma: CommaMode) -> Vec<String> {
    let mut cleaned = String::with_capacity(body.len());
    let mut chars = body.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '<' => {
                for d in chars.by_ref() {
                    if d == '>' {
                        break;
                    }
                }
            }
            '[' => {
                let mut first = String::new();
                let mut in_first = true;
                for d in chars.by_ref() {
                    match d {
                        ']' => break,
                        ':' | '|' => in_first = false,
                        _ if in_first => first.push(d),
                        _ => {}
                    }
                }
                cleaned.push_str(&first);
            }
            '{' | '}' | '!' => {}
            ',' => match comma {
                CommaMode::Split => cleaned.push('.'),
                CommaMode::Join => {}
            },
            '-' | '=' => cleaned.push('.'),
            c if c.is_whitespace() => cleaned.push('.'),
            c => cleaned.push(c),
        }
    }
    cleaned.split('.').filter(|t| !t.is_empty()).map(str::to_owned).collect()
}

/// Writes the canonical form: page headers with tags, then one locus-tagged
/// line per text line with tokens joined by `.`.
pub fn write_transliteration(corpus: &Corpus) -> String {
    let mut out = String::new();
    for page in &corpus.pages {
        let _ = write!(out, "<{}>", page.id);
        if !page.tags.is_empty() {
            let tags: Vec<String> = page.tags.iter().map(|(k, v)| format!("${k}={v}")).collect();
            let _ = write!(out, "\t<! {}>", tags.join(" "));
        }
        out.push('\n');
        let mut n = 0;
        for para in &page.paragraphs {
            for (l, line) in para.lines.iter().enumerate() {
                n += 1;
                let code = if l == 0 { '@' } else { '+' };
                let _ = writeln!(out, "<{}.{n},{code}P0>\t{}", page.id, line.tokens.join("."));
            }
        }
    }
    out
}

/// Token and type totals.
pub fn token_type_counts(corpus: &Corpus) -> (usize, usize) {
    let mut types = HashSet::new();
    let mut tokens = 0;
    for t in corpus.tokens() {
        tokens += 1;
        types.insert(t.text);
    }
    (tokens, types.len())
}

/// Occurrence counts of one glyph by position. `paragraph_initial` is a
/// subset of `top_line`; `elsewhere` counts occurrences in none of the three
/// positional categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PositionCounts {
    pub total: u64,
    pub paragraph_initial: u64,
    pub top_line: u64,
    pub line_final: u64,
    pub elsewhere: u64,
}

impl PositionCounts {
    fn record(&mut self, t: &TokenRef<'_>, n: u64) {
        self.total += n;
        if t.paragraph_initial() {
            self.paragraph_initial += n;
        }
        if t.top_line() {
            self.top_line += n;
        }
        if t.line_final() {
            self.line_final += n;
        }
        if !t.top_line() && !t.line_final() {
            self.elsewhere += n;
        }
    }

    fn frac(&self, n: u64) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            n as f64 / self.total as f64
        }
    }

    pub fn paragraph_initial_fraction(&self) -> f64 {
        self.frac(self.paragraph_initial)
    }

    pub fn top_line_fraction(&self) -> f64 {
        self.frac(self.top_line)
    }

    pub fn line_final_fraction(&self) -> f64 {
        self.frac(self.line_final)
    }

    pub fn elsewhere_fraction(&self) -> f64 {
        self.frac(self.elsewhere)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositionReport {
    pub glyphs: Vec<(char, PositionCounts)>,
    /// The same counts over every glyph in the corpus, for comparison.
    pub all_glyphs: PositionCounts,
}

pub fn positional_stats(corpus: &Corpus, glyphs: &[char]) -> PositionReport {
    let mut per: Vec<(char, PositionCounts)> = glyphs.iter().map(|&g| (g, PositionCounts::default())).collect();
    let mut all = PositionCounts::default();
    for t in corpus.tokens() {
        all.record(&t, t.text.chars().count() as u64);
        for (g, counts) in per.iter_mut() {
            let n = t.text.chars().filter(|c| c == g).count() as u64;
            if n > 0 {
                counts.record(&t, n);
            }
        }
    }
    PositionReport { glyphs: per, all_glyphs: all }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapReport {
    pub types_a: usize,
    pub types_b: usize,
    pub shared: usize,
    pub b_only: usize,
}

impl OverlapReport {
    /// |A ∩ B| / |A|
    pub fn a_in_b(&self) -> f64 {
        ratio(self.shared, self.types_a)
    }

    /// |A ∩ B| / |B|
    pub fn b_in_a(&self) -> f64 {
        ratio(self.shared, self.types_b)
    }
}

fn ratio(n: usize, d: usize) -> f64 {
    if d == 0 {
        0.0
    } else {
        n as f64 / d as f64
    }
}

pub fn subset_overlap(corpus: &Corpus, tag_a: &str, tag_b: &str) -> Result<OverlapReport> {
    let types_for = |tag: &str| -> Result<BTreeSet<&str>> {
        if !corpus.pages.iter().any(|p| p.has_tag(tag)) {
            return Err(Error::UnknownTag(tag.to_owned()));
        }
        Ok(corpus.tokens().filter(|t| corpus.pages[t.page].has_tag(tag)).map(|t| t.text).collect())
    };
    let a = types_for(tag_a)?;
    let b = types_for(tag_b)?;
    let shared = a.intersection(&b).count();
    Ok(OverlapReport { types_a: a.len(), types_b: b.len(), shared, b_only: b.len() - shared })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const FIXTURE: &str = "\
# fixture
<f1r>\t<! $I=H $L=A>
<f1r.1,@P0>\tfachys.ykal.ar.ataiin
<f1r.2,+P0>\tsory.ckhar.or,y.kair
<f1r.3,@P0>\tdaiin.<%>qokedy
<f2r>\t<! $L=B>
<f2r.1,@P0>\tqokedy.daiin.chedy
";

    fn load(text: &str) -> Corpus {
        parse_transliteration(text, &LoadOptions::default()).unwrap().corpus
    }

    #[test]
    fn empty_file_is_empty_corpus() {
        assert_eq!(load(""), Corpus::default());
        assert_eq!(token_type_counts(&load("# only comments\n")), (0, 0));
    }

    #[test]
    fn fixture_structure() {
        let c = load(FIXTURE);
        assert_eq!(c.pages.len(), 2);
        assert_eq!(c.pages[0].tags["L"], "A");
        assert_eq!(c.pages[0].paragraphs.len(), 2);
        assert_eq!(c.paragraph_count(), 3);
        assert_eq!(c.line_count(), 4);
        assert_eq!(c.pages[0].paragraphs[0].lines[1].tokens, vec!["sory", "ckhar", "or", "y", "kair"]);
        assert_eq!(c.pages[0].paragraphs[1].lines[0].tokens, vec!["daiin", "qokedy"]);
    }

    #[test]
    fn comma_join_mode() {
        let opts = LoadOptions { comma: CommaMode::Join, ..LoadOptions::default() };
        let c = parse_transliteration(FIXTURE, &opts).unwrap().corpus;
        assert_eq!(c.pages[0].paragraphs[0].lines[1].tokens, vec!["sory", "ckhar", "ory", "kair"]);
    }

    #[test]
    fn counts_match_brute_force() {
        let c = load(FIXTURE);
        // counted by hand from the fixture text
        let words: Vec<&str> =
            "fachys ykal ar ataiin sory ckhar or y kair daiin qokedy qokedy daiin chedy".split(' ').collect();
        let types: BTreeSet<&str> = words.iter().copied().collect();
        assert_eq!(token_type_counts(&c), (words.len(), types.len()));
        assert_eq!(token_type_counts(&load("a.a.a\na.a\n")), (5, 1));
    }

    #[test]
    fn malformed_loci() {
        let err = |t: &str| parse_transliteration(t, &LoadOptions::default()).unwrap_err();
        assert!(matches!(err("<f1r.1\tdaiin\n"), Error::MalformedLocus { line: 1, .. }));
        assert!(matches!(err("ok\n<.1>\tdaiin\n"), Error::MalformedLocus { line: 2, .. }));
        assert!(matches!(err("<f1r.>\tdaiin\n"), Error::MalformedLocus { .. }));
        assert!(matches!(err("<>\n"), Error::MalformedLocus { .. }));
    }

    #[test]
    fn unknown_glyphs_warn() {
        let opts = LoadOptions { alphabet: Some(Alphabet::eva()), ..LoadOptions::default() };
        let loaded = parse_transliteration("daiin.q0kedy.0\n", &opts).unwrap();
        assert_eq!(loaded.warnings.len(), 1);
        assert_eq!(token_type_counts(&loaded.corpus), (3, 3));
    }

    #[test]
    fn untagged_text_uses_blank_lines() {
        let c = load("a.b\nc\n\nd.e\n");
        assert_eq!(c.pages.len(), 1);
        assert_eq!(c.pages[0].paragraphs.len(), 2);
        assert_eq!(c.pages[0].paragraphs[0].lines.len(), 2);
    }

    #[test]
    fn cleaning() {
        assert_eq!(tokenize("qo[k:t]edy.{ch}ol!.<->da", CommaMode::Split), vec!["qokedy", "chol", "da"]);
        assert_eq!(tokenize("a b-c=d", CommaMode::Split), vec!["a", "b", "c", "d"]);
    }

    #[test]
    fn positions() {
        let c = load("<p>\n<p.1,@P0>\tqa.b.qc\n<p.2,+P0>\td.e.f\n<p.3,+P0>\tx.y\n");
        let r = positional_stats(&c, &['q', 'z', 'e', 'f']);
        let q = r.glyphs[0].1;
        assert_eq!((q.total, q.paragraph_initial, q.top_line, q.line_final, q.elsewhere), (2, 1, 2, 1, 0));
        assert_eq!(q.top_line_fraction(), 1.0);
        assert_eq!(r.glyphs[1].1, PositionCounts::default());
        let e = r.glyphs[2].1;
        assert_eq!((e.total, e.elsewhere), (1, 1));
        let f = r.glyphs[3].1;
        assert_eq!((f.line_final, f.elsewhere), (1, 0));
    }

    #[test]
    fn overlap() {
        let c = load(FIXTURE);
        let r = subset_overlap(&c, "A", "B").unwrap();
        // brute force over the fixture sets
        let a: BTreeSet<&str> = "fachys ykal ar ataiin sory ckhar or y kair daiin qokedy".split(' ').collect();
        let b: BTreeSet<&str> = "qokedy daiin chedy".split(' ').collect();
        let shared = a.intersection(&b).count();
        assert_eq!((r.types_a, r.types_b, r.shared, r.b_only), (a.len(), b.len(), shared, b.len() - shared));
        assert_eq!(subset_overlap(&c, "A", "A").unwrap().a_in_b(), 1.0);
        assert_eq!(subset_overlap(&c, "L=B", "B").unwrap().b_in_a(), 1.0);
        assert!(matches!(subset_overlap(&c, "A", "C"), Err(Error::UnknownTag(_))));

        let disjoint = load("<p1>\t<! $L=A>\n<p1.1>\ta.b\n<p2>\t<! $L=B>\n<p2.1>\tc.d\n");
        assert_eq!(subset_overlap(&disjoint, "A", "B").unwrap().a_in_b(), 0.0);
    }

    #[test]
    fn ornament_stripping() {
        let c = load("<p>\n<p.1,@P0>\tpchedy.daiin\n<p.2,+P0>\tpol\n");
        let stripped = c.word_types_stripped(&['p'].into());
        assert!(stripped.contains("chedy"));
        assert!(stripped.contains("pol"));
    }

    fn arb_corpus() -> impl Strategy<Value = Corpus> {
        let line = prop::collection::vec("[a-z]{1,5}", 1..5).prop_map(|tokens| Line { tokens });
        let para = prop::collection::vec(line, 1..4).prop_map(|lines| Paragraph { lines });
        let page = (prop::collection::vec(para, 1..3), prop::option::of("[AB]")).prop_map(|(paragraphs, lang)| Page {
            id: String::new(),
            tags: lang.into_iter().map(|l| ("L".to_owned(), l)).collect(),
            paragraphs,
        });
        prop::collection::vec(page, 0..4).prop_map(|mut pages| {
            for (i, p) in pages.iter_mut().enumerate() {
                p.id = format!("f{}r", i + 1);
            }
            Corpus { pages }
        })
    }

    proptest! {
        #[test]
        fn canonical_form_round_trips(c in arb_corpus()) {
            prop_assert_eq!(load(&write_transliteration(&c)), c);
        }

        #[test]
        fn tokens_at_least_types(c in arb_corpus()) {
            let (tokens, types) = token_type_counts(&c);
            prop_assert!(tokens >= types);
            let all: Vec<&str> = c.tokens().map(|t| t.text).collect();
            let distinct = all.iter().collect::<HashSet<_>>().len() == all.len();
            prop_assert_eq!(tokens == types, distinct);
        }
    }
}
