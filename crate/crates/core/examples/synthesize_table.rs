//! Building a table that a chosen grille reads back as a given word list.

use grillewheel::grammar::GrammarSpec;
use grillewheel::grille::{slide, write_table, Grille};
use grillewheel::synthesis::{synthesize_table, EvenSplitter, GrammarSplitter};

fn main() -> grillewheel::Result<()> {
    let words = ["fachys", "ykal", "ar", "ataiin", "shol", "shory", "cthres", "y", "kor", "sholdy"];
    let grille = Grille::new(3, vec![0, 2, 1])?;

    let table = synthesize_table(&words, &grille, &EvenSplitter)?;
    print!("{}", write_table(&table));
    assert_eq!(slide(&table, &grille)?, words);

    let grammar = GrammarSplitter { spec: GrammarSpec::eva() };
    let table = synthesize_table(&words, &grille, &grammar)?;
    println!("grammar-guided split:");
    print!("{}", write_table(&table));
    println!("replays: {:?}", slide(&table, &grille)?);
    Ok(())
}
