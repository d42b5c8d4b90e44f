//! Word-length distributions: the three 24-fragment profiles, wheel
//! grouping and the distance from a binomial reference.

use grillewheel::distributions::{
    binomial_reference, deviation, group_wheels_by_sizes, system_length_distribution, three_wheel_table, Mode, Scaling,
};
use grillewheel::wheels::nine_wheel;

fn main() -> grillewheel::Result<()> {
    let columns = three_wheel_table();
    let reference = binomial_reference(9, 1, 13_824, Scaling::Exact)?;
    for (name, d) in &columns {
        println!("{name}");
        for (len, p) in d.percentages() {
            println!("  {len:>2} {:>6} {p:>6}%", d.count(len));
        }
        let dev = deviation(d, &reference);
        println!(
            "  max |diff| {:.2} points at length {}, total variation {:.4}",
            dev.max_abs_points, dev.at_length, dev.total_variation
        );
    }

    let nine = nine_wheel();
    let grouped = group_wheels_by_sizes(&nine, &[3, 3, 3])?;
    println!("nine wheels grouped 3+3+3 -> sizes {:?}", grouped.sizes());
    let a = system_length_distribution(&nine, Mode::Tuple);
    let b = system_length_distribution(&grouped, Mode::Exhaustive);
    println!("same distribution after grouping: {}", a == b);
    Ok(())
}
