//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches to the library and writes to the
//! given streams, which keeps it testable; [`main`] wires it to the process.
//! Exit status is 0 on success, 1 when the library reports a domain error
//! and 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corpus::{
    load_transliteration, parse_transliteration, positional_stats, subset_overlap, token_type_counts, CommaMode,
    LoadOptions, PositionCounts,
};
use crate::distributions::{
    binomial_reference, convolve, deviation, group_wheels_by_sizes, system_length_distribution, three_wheel_table,
    LengthDistribution, Mode, Percent, Scaling,
};
use crate::grammar::{coverage, parse_grammar, GrammarSpec};
use crate::grille::{enumerate_grilles, equivalence_mismatches, grille_count, parse_table, slide, write_table, Grille};
use crate::network::{build_edit_graph, network_stats, write_edge_list};
use crate::synthesis::{decompose_vocabulary, synthesize_table, Budget, EvenSplitter, GrammarSplitter, Splitter};
use crate::wheels::{parse_wheels, preset, roman_numeral, roman_value, write_wheels, Preset, WheelSystem};

#[derive(Debug, Parser)]
#[command(name = "grillewheel", version, about = "Table-and-grille and wheel word generators")]
pub struct Cli {
    /// Output format for tabular results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write results to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wheel systems: enumeration and index/word conversion.
    #[command(subcommand)]
    Wheels(WheelsCmd),
    /// Tables and grilles.
    #[command(subcommand)]
    Grille(GrilleCmd),
    /// Word-length distributions.
    #[command(subcommand)]
    Dist(DistCmd),
    /// Word grammar parsing and coverage.
    #[command(subcommand)]
    Grammar(GrammarCmd),
    /// Transliteration statistics.
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Edit-distance networks.
    #[command(subcommand)]
    Network(NetworkCmd),
    /// Build a table or wheel system from a vocabulary.
    #[command(subcommand)]
    Synthesize(SynthesizeCmd),
    /// Additive Roman numerals via the wheel preset.
    #[command(subcommand)]
    Roman(RomanCmd),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Wheel file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Bundled preset: roman, tiltman, nine_wheel, binomial_24.
    #[arg(long)]
    pub preset: Option<String>,
}

impl Source {
    fn load(&self) -> anyhow::Result<WheelSystem> {
        match (&self.file, &self.preset) {
            (Some(path), _) => Ok(parse_wheels(&read(path)?)?),
            (None, Some(name)) => Ok(preset(name)?),
            (None, None) => unreachable!("clap enforces one source"),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum WheelsCmd {
    /// List `(index, word)` for every tuple.
    Enumerate {
        #[command(flatten)]
        source: Source,
        /// Stop after this many tuples.
        #[arg(long)]
        limit: Option<u128>,
    },
    WordAt {
        #[command(flatten)]
        source: Source,
        index: u128,
    },
    IndexOf {
        #[command(flatten)]
        source: Source,
        word: String,
    },
    /// Print a preset in the wheel file format, or list presets.
    Preset { name: Option<String> },
    /// Count distinct words and list collisions.
    Distinct {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Args)]
pub struct GrilleArg {
    /// Hole row per column, e.g. `0,0,1`.
    #[arg(long)]
    pub grille: String,
    /// Grille height; defaults to one more than the deepest hole.
    #[arg(long)]
    pub rows: Option<usize>,
}

impl GrilleArg {
    fn build(&self) -> anyhow::Result<Grille> {
        Ok(Grille::parse(&self.grille, self.rows)?)
    }
}

#[derive(Debug, Subcommand)]
pub enum GrilleCmd {
    /// Number of grilles with a hole in the top row.
    Count {
        #[arg(long)]
        rows: usize,
        #[arg(long, default_value_t = 3)]
        cols: usize,
    },
    Enumerate {
        #[arg(long)]
        rows: usize,
        #[arg(long, default_value_t = 3)]
        cols: usize,
    },
    /// Every word the grille reads from a table file.
    Slide {
        #[arg(long)]
        table: PathBuf,
        #[command(flatten)]
        grille: GrilleArg,
    },
    /// Compare a flat reading of the table with the grille on the shifted table.
    EquivCheck {
        #[arg(long)]
        table: PathBuf,
        #[command(flatten)]
        grille: GrilleArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Tuple,
    Exhaustive,
}

#[derive(Debug, Subcommand)]
pub enum DistCmd {
    /// Word-length distribution of a wheel system.
    System {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = ModeArg::Tuple)]
        mode: ModeArg,
        /// Merge consecutive wheels by run sizes first, e.g. `3,3,3`.
        #[arg(long, value_delimiter = ',')]
        group: Vec<usize>,
        /// Also write an SVG bar chart.
        #[arg(long)]
        chart: Option<PathBuf>,
    },
    /// Convolve distributions given as `len:count,len:count`.
    Convolve {
        #[arg(required = true)]
        distributions: Vec<String>,
    },
    /// Compare a system's distribution with a binomial reference.
    Compare {
        #[command(flatten)]
        source: Source,
        /// Binomial trials; defaults to the summed per-wheel length spread.
        #[arg(long)]
        trials: Option<u32>,
        /// Shortest reference length; defaults to the summed per-wheel minimum.
        #[arg(long)]
        shift: Option<usize>,
    },
    /// Word-length percentages of the three 24-fragment profiles.
    Table6 {
        #[arg(long)]
        chart: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GrammarArg {
    /// Grammar file; the bundled grammar when absent.
    #[arg(long)]
    pub grammar: Option<PathBuf>,
}

impl GrammarArg {
    fn load(&self) -> anyhow::Result<GrammarSpec> {
        match &self.grammar {
            Some(path) => Ok(parse_grammar(&read(path)?)?),
            None => Ok(GrammarSpec::eva()),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum GrammarCmd {
    Parse {
        #[command(flatten)]
        grammar: GrammarArg,
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Share of distinct word types the grammar parses.
    Coverage {
        /// Word list or transliteration file.
        #[arg(long)]
        words: PathBuf,
        #[command(flatten)]
        grammar: GrammarArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CommaArg {
    Split,
    Join,
}

impl From<CommaArg> for CommaMode {
    fn from(c: CommaArg) -> Self {
        match c {
            CommaArg::Split => CommaMode::Split,
            CommaArg::Join => CommaMode::Join,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum CorpusCmd {
    Stats {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CommaArg::Split)]
        comma: CommaArg,
    },
    /// Positional preferences of the given glyphs.
    Positions {
        file: PathBuf,
        #[arg(long)]
        glyphs: String,
        #[arg(long, value_enum, default_value_t = CommaArg::Split)]
        comma: CommaArg,
    },
    /// Vocabulary overlap of two tagged page subsets.
    Overlap {
        file: PathBuf,
        #[arg(long)]
        tag_a: String,
        #[arg(long)]
        tag_b: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum NetworkCmd {
    Stats {
        #[arg(long)]
        words: PathBuf,
        #[arg(long, default_value_t = 1)]
        distance: usize,
    },
    /// Tab-separated edge list.
    Edges {
        #[arg(long)]
        words: PathBuf,
        #[arg(long, default_value_t = 1)]
        distance: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SplitterArg {
    Even,
    Grammar,
}

#[derive(Debug, Subcommand)]
pub enum SynthesizeCmd {
    /// Table file that the grille reads back as the word list.
    Table {
        #[arg(long)]
        words: PathBuf,
        #[command(flatten)]
        grille: GrilleArg,
        #[arg(long, value_enum, default_value_t = SplitterArg::Even)]
        splitter: SplitterArg,
        #[command(flatten)]
        grammar: GrammarArg,
    },
    /// Wheel file decomposed from the word types.
    Wheels {
        #[arg(long)]
        words: PathBuf,
        #[arg(long, default_value_t = 3)]
        wheels: usize,
        #[arg(long, default_value_t = 24)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = SplitterArg::Even)]
        splitter: SplitterArg,
        #[command(flatten)]
        grammar: GrammarArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum RomanCmd {
    Encode { value: u32 },
    Decode { numeral: String },
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(Into::into),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {e:#}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

pub fn main<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let status = run(args, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(status as u8)
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Words from a plain list (whitespace separated) or, when the file has
/// locus tags, from a transliteration.
fn read_words(path: &Path) -> anyhow::Result<Vec<String>> {
    let text = read(path)?;
    if text.lines().any(|l| l.trim_start().starts_with('<')) {
        let loaded = parse_transliteration(&text, &LoadOptions::default())?;
        return Ok(loaded.corpus.tokens().map(|t| t.text.to_owned()).collect());
    }
    Ok(text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
        .map(str::to_owned)
        .collect())
}

fn unique_sorted(words: Vec<String>) -> Vec<String> {
    let mut words = words;
    words.sort();
    words.dedup();
    words
}

struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(headers: &[&'static str]) -> Self {
        Table { headers: headers.to_vec(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let records =
            std::iter::once(self.headers.iter().map(|h| h.to_string()).collect()).chain(self.rows.iter().cloned());
        for record in records {
            let record: Vec<String> = record;
            w.write_record(&record).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flushing to memory")).expect("utf-8 input")
    }

    fn text(&self) -> String {
        let cols = self.headers.len();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        let mut numeric = vec![true; cols];
        for row in &self.rows {
            for (k, cell) in row.iter().enumerate() {
                widths[k] = widths[k].max(cell.chars().count());
                numeric[k] &= !cell.is_empty() && cell.parse::<f64>().is_ok();
            }
        }
        let line = |cells: &[&str]| {
            let parts: Vec<String> = cells
                .iter()
                .enumerate()
                .map(
                    |(k, c)| {
                        if numeric[k] {
                            format!("{c:>w$}", w = widths[k])
                        } else {
                            format!("{c:<w$}", w = widths[k])
                        }
                    },
                )
                .collect();
            parts.join("  ").trim_end().to_owned()
        };
        let mut out = String::new();
        let _ = writeln!(out, "{}", line(&self.headers));
        for row in &self.rows {
            let cells: Vec<&str> = row.iter().map(String::as_str).collect();
            let _ = writeln!(out, "{}", line(&cells));
        }
        out
    }
}

fn distribution_table(d: &LengthDistribution) -> Table {
    let mut t = Table::new(&["length", "count", "percent"]);
    let total = d.total();
    for (len, n) in d.dense() {
        t.push(vec![len.to_string(), n.to_string(), Percent::of(n, total).to_string()]);
    }
    t
}

fn execute(cli: &Cli) -> anyhow::Result<String> {
    let f = cli.format;
    match &cli.command {
        Command::Wheels(cmd) => wheels(cmd, f),
        Command::Grille(cmd) => grille(cmd, f),
        Command::Dist(cmd) => dist(cmd, f),
        Command::Grammar(cmd) => grammar(cmd, f),
        Command::Corpus(cmd) => corpus(cmd, f),
        Command::Network(cmd) => network(cmd, f),
        Command::Synthesize(cmd) => synthesize(cmd),
        Command::Roman(RomanCmd::Encode { value }) => Ok(format!("{}\n", roman_numeral(*value)?)),
        Command::Roman(RomanCmd::Decode { numeral }) => Ok(format!("{}\n", roman_value(numeral)?)),
    }
}

fn wheels(cmd: &WheelsCmd, f: Format) -> anyhow::Result<String> {
    match cmd {
        WheelsCmd::Enumerate { source, limit } => {
            let system = source.load()?;
            let mut t = Table::new(&["index", "word"]);
            let take = limit.map_or(usize::MAX, |n| usize::try_from(n).unwrap_or(usize::MAX));
            for (i, w) in system.enumerate().take(take) {
                t.push(vec![i.to_string(), w]);
            }
            Ok(t.render(f))
        }
        WheelsCmd::WordAt { source, index } => Ok(format!("{}\n", source.load()?.word_at(*index)?)),
        WheelsCmd::IndexOf { source, word } => Ok(format!("{}\n", source.load()?.index_of(word)?)),
        WheelsCmd::Preset { name: Some(name) } => Ok(write_wheels(&preset(name)?)),
        WheelsCmd::Preset { name: None } => {
            let mut t = Table::new(&["preset", "sizes", "tuples"]);
            for p in Preset::ALL {
                let s = p.build();
                let sizes: Vec<String> = s.sizes().iter().map(usize::to_string).collect();
                t.push(vec![p.name().to_owned(), sizes.join("x"), s.tuple_count().to_string()]);
            }
            Ok(t.render(f))
        }
        WheelsCmd::Distinct { source } => {
            let report = source.load()?.distinct_words();
            let mut out = format!(
                "tuples {}\ndistinct {}\ncollisions {}\n",
                report.tuples,
                report.distinct,
                report.collisions.len()
            );
            if !report.collisions.is_empty() {
                let mut t = Table::new(&["word", "tuples"]);
                for c in &report.collisions {
                    let tuples: Vec<String> = c
                        .tuples
                        .iter()
                        .map(|tu| tu.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                        .collect();
                    t.push(vec![c.word.clone(), tuples.join("; ")]);
                }
                out.push_str(&t.render(f));
            }
            Ok(out)
        }
    }
}

fn grille(cmd: &GrilleCmd, f: Format) -> anyhow::Result<String> {
    match cmd {
        GrilleCmd::Count { rows, cols } => Ok(format!("{}\n", grille_count(*rows, *cols))),
        GrilleCmd::Enumerate { rows, cols } => {
            let mut t = Table::new(&["grille"]);
            for g in enumerate_grilles(*rows, *cols) {
                t.push(vec![holes_text(&g)]);
            }
            Ok(t.render(f))
        }
        GrilleCmd::Slide { table, grille } => {
            let table = parse_table(&read(table)?)?;
            let mut t = Table::new(&["position", "word"]);
            for (i, w) in slide(&table, &grille.build()?)?.into_iter().enumerate() {
                t.push(vec![i.to_string(), w]);
            }
            Ok(t.render(f))
        }
        GrilleCmd::EquivCheck { table, grille } => {
            let table = parse_table(&read(table)?)?;
            let g = grille.build()?;
            let mismatches = equivalence_mismatches(&table, &g)?;
            let mut out = format!("grille {}\nmismatches {}\n", holes_text(&g), mismatches.len());
            if !mismatches.is_empty() {
                let mut t = Table::new(&["group", "row"]);
                for (group, row) in mismatches {
                    t.push(vec![group.to_string(), row.to_string()]);
                }
                out.push_str(&t.render(f));
            }
            Ok(out)
        }
    }
}

fn holes_text(g: &Grille) -> String {
    g.holes().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn dist(cmd: &DistCmd, f: Format) -> anyhow::Result<String> {
    match cmd {
        DistCmd::System { source, mode, group, chart } => {
            let mut system = source.load()?;
            if !group.is_empty() {
                system = group_wheels_by_sizes(&system, group)?;
            }
            let mode = match mode {
                ModeArg::Tuple => Mode::Tuple,
                ModeArg::Exhaustive => Mode::Exhaustive,
            };
            let d = system_length_distribution(&system, mode);
            if let Some(path) = chart {
                write_chart(path, &[("words", &d)])?;
            }
            Ok(distribution_table(&d).render(f))
        }
        DistCmd::Convolve { distributions } => {
            let mut acc = LengthDistribution::from_counts([(0, 1)]);
            for text in distributions {
                acc = convolve(&acc, &parse_distribution(text)?);
            }
            Ok(distribution_table(&acc).render(f))
        }
        DistCmd::Compare { source, trials, shift } => {
            let system = source.load()?;
            let d = system_length_distribution(&system, Mode::Tuple);
            let (mut spread, mut lo) = (0usize, 0usize);
            for w in system.wheels() {
                let lens: Vec<usize> = w.fragments().iter().map(|x| x.len()).collect();
                let (min, max) = (lens.iter().min().copied().unwrap_or(0), lens.iter().max().copied().unwrap_or(0));
                spread += max - min;
                lo += min;
            }
            let trials = trials.unwrap_or(spread as u32);
            let reference = binomial_reference(trials, shift.unwrap_or(lo), d.total(), Scaling::Rounded)?;
            let dev = deviation(&d, &reference);
            let mut t = Table::new(&["length", "count", "percent", "reference", "reference_percent"]);
            let lens = d.dense().into_iter().map(|(l, _)| l).chain(reference.dense().into_iter().map(|(l, _)| l));
            let (min, max) = lens.fold((usize::MAX, 0), |(a, b), l| (a.min(l), b.max(l)));
            for len in min..=max {
                t.push(vec![
                    len.to_string(),
                    d.count(len).to_string(),
                    Percent::of(d.count(len), d.total()).to_string(),
                    reference.count(len).to_string(),
                    Percent::of(reference.count(len), reference.total()).to_string(),
                ]);
            }
            let mut out = t.render(f);
            let _ = writeln!(
                out,
                "max_abs_points {:.2} at length {}\ntotal_variation {:.4}",
                dev.max_abs_points, dev.at_length, dev.total_variation
            );
            Ok(out)
        }
        DistCmd::Table6 { chart } => {
            let columns = three_wheel_table();
            if let Some(path) = chart {
                let series: Vec<(&str, &LengthDistribution)> = columns.iter().map(|(n, d)| (*n, d)).collect();
                write_chart(path, &series)?;
            }
            let mut t = Table::new(&[
                "length",
                "binomial",
                "binomial_percent",
                "alternative_1",
                "alternative_1_percent",
                "alternative_2",
                "alternative_2_percent",
            ]);
            let min = columns.iter().filter_map(|(_, d)| d.min_len()).min().unwrap_or(0);
            let max = columns.iter().filter_map(|(_, d)| d.max_len()).max().unwrap_or(0);
            for len in min..=max {
                let mut row = vec![len.to_string()];
                for (_, d) in &columns {
                    row.push(d.count(len).to_string());
                    row.push(Percent::of(d.count(len), d.total()).to_string());
                }
                t.push(row);
            }
            Ok(t.render(f))
        }
    }
}

fn parse_distribution(text: &str) -> anyhow::Result<LengthDistribution> {
    let mut d = LengthDistribution::new();
    for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let Some((len, count)) = pair.split_once(':') else {
            bail!("expected len:count, got {pair:?}");
        };
        let len: usize = len.trim().parse().with_context(|| format!("bad length in {pair:?}"))?;
        let count: u64 = count.trim().parse().with_context(|| format!("bad count in {pair:?}"))?;
        d.add(len, count);
    }
    Ok(d)
}

/// Grouped SVG bar chart of percentage by word length.
fn chart_svg(series: &[(&str, &LengthDistribution)]) -> String {
    const COLOURS: [&str; 4] = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759"];
    let max_len = series.iter().filter_map(|(_, d)| d.max_len()).max().unwrap_or(0);
    let peak =
        series.iter().flat_map(|(_, d)| d.percentages().into_iter().map(|(_, p)| p.as_f64())).fold(1.0f64, f64::max);
    let (left, top, plot_w, plot_h) = (50.0, 30.0, 40.0 * (max_len + 1) as f64, 240.0);
    let bar_w = 32.0 / series.len().max(1) as f64;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" font-family="sans-serif" font-size="11">"#,
        left + plot_w + 20.0,
        top + plot_h + 50.0
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{left}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        top + plot_h,
        left + plot_w,
        top + plot_h
    );
    for (s, (name, d)) in series.iter().enumerate() {
        let colour = COLOURS[s % COLOURS.len()];
        for (len, p) in d.percentages() {
            let h = plot_h * p.as_f64() / peak;
            let x = left + 40.0 * len as f64 + 4.0 + bar_w * s as f64;
            let _ = writeln!(
                svg,
                r#"<rect x="{x:.1}" y="{:.1}" width="{bar_w:.1}" height="{h:.1}" fill="{colour}"><title>{name} {len}: {p}%</title></rect>"#,
                top + plot_h - h
            );
        }
        let _ =
            writeln!(svg, r#"<text x="{}" y="{}" fill="{colour}">{name}</text>"#, left + 110.0 * s as f64, top - 10.0);
    }
    for len in 0..=max_len {
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{}" text-anchor="middle">{len}</text>"#,
            left + 40.0 * len as f64 + 20.0,
            top + plot_h + 16.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">word length</text>"#,
        left + plot_w / 2.0,
        top + plot_h + 38.0
    );
    svg.push_str("</svg>\n");
    svg
}

fn write_chart(path: &Path, series: &[(&str, &LengthDistribution)]) -> anyhow::Result<()> {
    fs::write(path, chart_svg(series)).with_context(|| format!("writing {}", path.display()))
}

fn grammar(cmd: &GrammarCmd, f: Format) -> anyhow::Result<String> {
    match cmd {
        GrammarCmd::Parse { grammar, words } => {
            let spec = grammar.load()?;
            let mut t = Table::new(&["word", "valid", "parse"]);
            for w in words {
                let p = spec.parse_word(w);
                t.push(vec![w.clone(), p.valid().to_string(), p.to_string()]);
            }
            Ok(t.render(f))
        }
        GrammarCmd::Coverage { words, grammar } => {
            let spec = grammar.load()?;
            let words = read_words(words)?;
            let report = coverage(words.iter().map(String::as_str), &spec);
            let mut out = format!(
                "types {}\nparsed {}\ncoverage {:.4}\nconcatenations {}\n",
                report.types,
                report.parsed,
                report.fraction(),
                report.concatenations.len()
            );
            let mut t = Table::new(&["failure_position", "types", "examples"]);
            for (pos, failed) in &report.failures_by_position {
                let examples: Vec<&str> = failed.iter().take(5).map(String::as_str).collect();
                t.push(vec![pos.to_string(), failed.len().to_string(), examples.join(" ")]);
            }
            if !t.rows.is_empty() {
                out.push_str(&t.render(f));
            }
            Ok(out)
        }
    }
}

fn load_corpus(file: &Path, comma: CommaArg) -> anyhow::Result<crate::corpus::Loaded> {
    Ok(load_transliteration(file, &LoadOptions { comma: comma.into(), alphabet: None })?)
}

fn corpus(cmd: &CorpusCmd, f: Format) -> anyhow::Result<String> {
    match cmd {
        CorpusCmd::Stats { file, comma } => {
            let loaded = load_corpus(file, *comma)?;
            let c = &loaded.corpus;
            let (tokens, types) = token_type_counts(c);
            let mut t = Table::new(&["measure", "value"]);
            for (k, v) in [
                ("pages", c.pages.len()),
                ("paragraphs", c.paragraph_count()),
                ("lines", c.line_count()),
                ("tokens", tokens),
                ("types", types),
                ("warnings", loaded.warnings.len()),
            ] {
                t.push(vec![k.to_owned(), v.to_string()]);
            }
            Ok(t.render(f))
        }
        CorpusCmd::Positions { file, glyphs, comma } => {
            let loaded = load_corpus(file, *comma)?;
            let glyphs: Vec<char> = glyphs.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
            let report = positional_stats(&loaded.corpus, &glyphs);
            let mut t = Table::new(&["glyph", "total", "paragraph_initial", "top_line", "line_final", "elsewhere"]);
            let row = |name: String, c: &PositionCounts| {
                vec![
                    name,
                    c.total.to_string(),
                    format!("{:.4}", c.paragraph_initial_fraction()),
                    format!("{:.4}", c.top_line_fraction()),
                    format!("{:.4}", c.line_final_fraction()),
                    format!("{:.4}", c.elsewhere_fraction()),
                ]
            };
            for (g, c) in &report.glyphs {
                t.push(row(g.to_string(), c));
            }
            t.push(row("*".to_owned(), &report.all_glyphs));
            Ok(t.render(f))
        }
        CorpusCmd::Overlap { file, tag_a, tag_b } => {
            let loaded = load_corpus(file, CommaArg::Split)?;
            let r = subset_overlap(&loaded.corpus, tag_a, tag_b)?;
            let mut t = Table::new(&["measure", "value"]);
            t.push(vec!["types_a".into(), r.types_a.to_string()]);
            t.push(vec!["types_b".into(), r.types_b.to_string()]);
            t.push(vec!["shared".into(), r.shared.to_string()]);
            t.push(vec!["b_only".into(), r.b_only.to_string()]);
            t.push(vec!["a_in_b".into(), format!("{:.4}", r.a_in_b())]);
            t.push(vec!["b_in_a".into(), format!("{:.4}", r.b_in_a())]);
            Ok(t.render(f))
        }
    }
}

fn network(cmd: &NetworkCmd, f: Format) -> anyhow::Result<String> {
    match cmd {
        NetworkCmd::Stats { words, distance } => {
            let graph = build_edit_graph(&unique_sorted(read_words(words)?), *distance);
            let s = network_stats(&graph);
            let mut t = Table::new(&["measure", "value"]);
            t.push(vec!["nodes".into(), s.nodes.to_string()]);
            t.push(vec!["edges".into(), s.edges.to_string()]);
            t.push(vec!["connected_fraction".into(), format!("{:.4}", s.connected_fraction)]);
            t.push(vec!["components".into(), s.components.to_string()]);
            t.push(vec!["largest_component".into(), s.largest_component.to_string()]);
            t.push(vec!["largest_component_fraction".into(), format!("{:.4}", s.largest_component_fraction())]);
            let mut out = t.render(f);
            let mut h = Table::new(&["degree", "nodes"]);
            for (d, n) in &s.degree_histogram {
                h.push(vec![d.to_string(), n.to_string()]);
            }
            out.push_str(&h.render(f));
            Ok(out)
        }
        NetworkCmd::Edges { words, distance } => {
            Ok(write_edge_list(&build_edit_graph(&unique_sorted(read_words(words)?), *distance)))
        }
    }
}

fn splitter(kind: SplitterArg, grammar: &GrammarArg) -> anyhow::Result<Box<dyn Splitter>> {
    Ok(match kind {
        SplitterArg::Even => Box::new(EvenSplitter),
        SplitterArg::Grammar => Box::new(GrammarSplitter { spec: grammar.load()? }),
    })
}

fn synthesize(cmd: &SynthesizeCmd) -> anyhow::Result<String> {
    match cmd {
        SynthesizeCmd::Table { words, grille, splitter: kind, grammar } => {
            let words = read_words(words)?;
            let split = splitter(*kind, grammar)?;
            Ok(write_table(&synthesize_table(&words, &grille.build()?, split.as_ref())?))
        }
        SynthesizeCmd::Wheels { words, wheels, budget, splitter: kind, grammar } => {
            let words = read_words(words)?;
            let split = splitter(*kind, grammar)?;
            let (system, report) = decompose_vocabulary(&words, *wheels, &Budget::Uniform(*budget), split.as_ref())?;
            let over = report.overgeneration.map_or_else(|| "not measured".to_owned(), |n| n.to_string());
            let mut out = format!(
                "# types {}\n# covered {}\n# coverage {:.4}\n# overgeneration {over}\n",
                report.types,
                report.covered.len(),
                report.coverage()
            );
            out.push_str(&write_wheels(&system));
            Ok(out)
        }
    }
}
