//! Index <-> word bijection on the root/suffix preset, plus wheel rotation.

use grillewheel::wheels::tiltman;

fn main() -> grillewheel::Result<()> {
    let system = tiltman();
    println!("sizes {:?}, {} tuples", system.sizes(), system.tuple_count());

    for (index, word) in system.enumerate().take(5) {
        println!("{index:>4}  {word}");
    }

    let word = system.word_at(137)?;
    println!("word 137 is {word}, and index_of({word}) = {}", system.index_of(&word)?);
    println!("tuple digits of 137: {:?}", system.tuple_at(137)?);

    let report = system.distinct_words();
    println!("{} distinct words, {} collisions", report.distinct, report.collisions.len());

    // turning the right wheel by 3 from the rest position
    let mut spun = system.clone();
    spun.wheels_mut()[1].rotate(3);
    println!("after rotating the suffix wheel: {}", spun.current_word());
    Ok(())
}
