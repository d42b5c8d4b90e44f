//! Greedy wheel decomposition of a vocabulary under a fragment budget.

use grillewheel::grammar::GrammarSpec;
use grillewheel::synthesis::{decompose_vocabulary, Budget, EvenSplitter, GrammarSplitter};
use grillewheel::wheels::{write_wheels, WheelSystem};

fn main() -> grillewheel::Result<()> {
    let source = WheelSystem::from_strs(&[
        &["-", "o", "qo", "d", "ch"][..],
        &["k", "t", "ke", "te"][..],
        &["y", "dy", "edy", "aiin"][..],
    ])?;
    let vocab: Vec<String> = source.enumerate().map(|(_, w)| w).collect();
    println!("{} types from a 5x4x4 system", vocab.len());

    let grammar = GrammarSplitter { spec: GrammarSpec::eva() };
    let (system, report) = decompose_vocabulary(&vocab, 3, &Budget::Uniform(5), &grammar)?;
    println!("grammar split: coverage {:.3}, overgeneration {:?}", report.coverage(), report.overgeneration);
    print!("{}", write_wheels(&system));

    let (_, report) = decompose_vocabulary(&vocab, 3, &Budget::PerWheel(vec![4, 6, 6]), &EvenSplitter)?;
    println!("even split: coverage {:.3}, {} uncovered", report.coverage(), report.uncovered.len());
    Ok(())
}
