//! The seven-wheel Roman numeral preset: the tuple index is the value.

use grillewheel::wheels::{roman, roman_numeral, roman_value};

fn main() -> grillewheel::Result<()> {
    for v in [1, 4, 9, 14, 1967, 4999] {
        println!("{v:>5} = {}", roman_numeral(v)?);
    }
    println!("MDCCCCLXVII = {}", roman_value("MDCCCCLXVII")?);

    match roman_value("IV") {
        Ok(v) => println!("IV = {v}"),
        Err(e) => println!("IV: {e}"),
    }

    let system = roman();
    println!("{} tuples over wheel sizes {:?}", system.tuple_count(), system.sizes());
    Ok(())
}
