//! Token/type counts, positional glyph preferences and subset overlap for a
//! transliteration file.

use std::path::PathBuf;

use grillewheel::corpus::{load_transliteration, positional_stats, subset_overlap, token_type_counts, LoadOptions};

fn main() -> anyhow::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/sample.ivtff")));
    let loaded = load_transliteration(&path, &LoadOptions::default())?;
    for w in &loaded.warnings {
        eprintln!("warning: {w}");
    }
    let corpus = &loaded.corpus;
    let (tokens, types) = token_type_counts(corpus);
    println!("{} pages, {} paragraphs, {} lines", corpus.pages.len(), corpus.paragraph_count(), corpus.line_count());
    println!("{tokens} tokens, {types} types");

    let report = positional_stats(corpus, &['p', 't', 'k', 'f']);
    for (g, c) in &report.glyphs {
        println!(
            "{g}: {:>3} uses, top line {:.2}, paragraph initial {:.2}",
            c.total,
            c.top_line_fraction(),
            c.paragraph_initial_fraction()
        );
    }

    let overlap = subset_overlap(corpus, "A", "B")?;
    println!(
        "A types {}, B types {}, shared {} ({:.0}% of A)",
        overlap.types_a,
        overlap.types_b,
        overlap.shared,
        100.0 * overlap.a_in_b()
    );
    Ok(())
}
