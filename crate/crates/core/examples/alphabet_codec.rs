//! Enciphering Latin plaintext as words, one 24-fragment wheel per letter
//! position.

use grillewheel::synthesis::{fold_latin, AlphabetCodec, LATIN_24};
use grillewheel::wheels::{Wheel, WheelSystem};
use grillewheel::Fragment;

fn wheel(stems: &[&str], tails: &[&str]) -> Wheel {
    let fragments = stems.iter().flat_map(|s| tails.iter().map(move |t| Fragment::new(format!("{s}{t}"))));
    Wheel::new(fragments.collect()).unwrap()
}

fn main() -> grillewheel::Result<()> {
    let system = WheelSystem::new(vec![
        wheel(&["q", "o", "ch", "sh", "d", "y"], &["", "o", "a", "e"]),
        wheel(&["k", "t", "p", "f"], &["", "e", "ee", "ch", "h", "o"]),
        wheel(&["y", "dy", "iin", "ol"], &["", "s", "m", "r", "l", "n"]),
    ])?;
    println!("collision free: {}", system.distinct_words().is_collision_free());

    let codec = AlphabetCodec::new(system, LATIN_24, 'x')?;
    let plain = fold_latin("gallia est omnis divisa").replace(' ', "");
    let words = codec.encode(&plain)?;
    println!("{}", words.join(" "));
    println!("{}", codec.decode(&words)?);
    Ok(())
}
