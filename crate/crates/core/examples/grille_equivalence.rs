//! Reading a table through a Y-shaped grille equals reading a column-shifted
//! table through a flat one.

use grillewheel::grille::{
    enumerate_grilles, equivalence_mismatches, grille_count, grille_to_shifts, parse_table, shift_table, slide,
    table_entries_needed, write_table, Grille,
};

fn main() -> anyhow::Result<()> {
    for rows in 2..=5 {
        println!(
            "{rows}-row grilles: {:>3}, table entries for 9500 types: {}",
            grille_count(rows, 3),
            table_entries_needed(9500, rows)
        );
    }
    let nineteen: Vec<String> = enumerate_grilles(3, 3).iter().map(|g| format!("{:?}", g.holes())).collect();
    println!("{}", nineteen.join(" "));

    let table = parse_table(include_str!("data/y_grille.table"))?;
    let flat = Grille::flat(3, 2);
    let y = Grille::new(2, vec![0, 0, 1])?;
    println!("flat: {:?}", slide(&table, &flat)?);
    println!("Y:    {:?}", slide(&table, &y)?);

    let shifted = shift_table(&table, &grille_to_shifts(&y))?;
    print!("{}", write_table(&shifted));
    println!("mismatches: {}", equivalence_mismatches(&table, &y)?.len());
    Ok(())
}
