//! Parsing words with the layered grammar and proposing three-part splits.

use grillewheel::grammar::{coverage, GrammarSpec};

fn main() -> grillewheel::Result<()> {
    let spec = GrammarSpec::eva();
    for word in ["qokeedy", "chedy", "daiin", "okaiin", "ykchdy"] {
        let parse = spec.parse_word(word);
        println!("{word:<8} {}  {parse}", if parse.valid() { "ok  " } else { "fail" });
    }

    for (l, c, r) in spec.three_part_splits("qokeedy") {
        println!("  {l:>4} | {c:<4} | {r}");
    }

    // glyphs of another transliteration alphabet
    let toy = GrammarSpec::new("40lf", "c", "8")?.with_final("9")?;
    println!("40lfcc89 -> {}", toy.parse_word("40lfcc89"));

    let words = "qokeedy qokedy chedy daiin shedy ykchdy okaiin chol qokedy".split(' ');
    let report = coverage(words, &spec);
    println!("coverage {}/{} = {:.3}", report.parsed, report.types, report.fraction());
    Ok(())
}
