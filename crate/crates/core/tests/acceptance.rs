//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use grillewheel::distributions::{
    profile_system, system_length_distribution, three_wheel_table, LengthDistribution, Mode, Percent,
    THREE_WHEEL_PROFILES,
};
use grillewheel::grille::{
    apply_grille, enumerate_grilles, grille_count, grille_to_shifts, positions, shift_table, slide,
    table_entries_needed, FragmentTable, Grille,
};
use grillewheel::network::build_edit_graph;
use grillewheel::synthesis::{decompose_vocabulary, synthesize_table, Budget, EvenSplitter, GrammarSplitter};
use grillewheel::wheels::{binomial_24, roman, tiltman, WheelSystem};
use grillewheel::Fragment;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const THREE_WHEEL_COUNTS: [[u64; 10]; 3] = [
    [27, 243, 972, 2268, 3402, 3402, 2268, 972, 243, 27],
    [30, 262, 932, 2092, 3130, 3322, 2444, 1204, 360, 48],
    [20, 288, 1092, 2284, 3228, 3228, 2284, 1092, 288, 20],
];

const THREE_WHEEL_PERCENT: [[&str; 10]; 3] = [
    ["0.20", "1.76", "7.03", "16.41", "24.61", "24.61", "16.41", "7.03", "1.76", "0.20"],
    ["0.22", "1.90", "6.74", "15.13", "22.64", "24.03", "17.68", "8.71", "2.60", "0.35"],
    ["0.14", "2.08", "7.90", "16.52", "23.35", "23.35", "16.52", "7.90", "2.08", "0.14"],
];

fn expected_column(counts: &[u64; 10]) -> LengthDistribution {
    LengthDistribution::from_profile(1, counts)
}

fn three_wheel_counts() -> Outcome {
    let start = Instant::now();
    for (((name, profiles), expected), (table_name, tuple)) in
        THREE_WHEEL_PROFILES.iter().zip(&THREE_WHEEL_COUNTS).zip(three_wheel_table())
    {
        let expected = expected_column(expected);
        if *name != table_name || tuple != expected {
            return Err(format!("{name}: convolution gave {:?}", tuple.dense()));
        }
        let exhaustive = system_length_distribution(&profile_system(profiles), Mode::Exhaustive);
        if exhaustive != expected {
            return Err(format!("{name}: enumeration gave {:?}", exhaustive.dense()));
        }
        if tuple.total() != 13_824 {
            return Err(format!("{name}: total {}", tuple.total()));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("three columns exact in both modes, {elapsed:.2?}"))
}

fn three_wheel_percentages() -> Outcome {
    for ((name, d), expected) in three_wheel_table().iter().zip(&THREE_WHEEL_PERCENT) {
        let got: Vec<String> = d.percentages().iter().map(|(_, p)| p.to_string()).collect();
        if got != expected.to_vec() {
            return Err(format!("{name}: {got:?}"));
        }
    }
    if Percent::of(27, 13_824).to_string() != "0.20" {
        return Err("Percent::of(27, 13824) is not 0.20".into());
    }
    Ok("30 percentages match".into())
}

fn grille_counts_and_entries() -> Outcome {
    let counts: Vec<u128> = (2..=5).map(|r| grille_count(r, 3)).collect();
    let entries: Vec<u128> = (2..=5).map(|r| table_entries_needed(9500, r)).collect();
    if counts != [7, 19, 37, 61] || entries != [1358, 500, 257, 156] {
        return Err(format!("counts {counts:?}, entries {entries:?}"));
    }
    Ok("7/19/37/61 and 1358/500/257/156".into())
}

fn brute_force_grilles(rows: usize, cols: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let total = (rows as u64).pow(cols as u32);
    for mut code in 0..total {
        let mut holes = vec![0; cols];
        for h in holes.iter_mut().rev() {
            *h = (code % rows as u64) as usize;
            code /= rows as u64;
        }
        if holes.contains(&0) {
            out.insert(holes);
        }
    }
    out
}

fn grille_enumeration() -> Outcome {
    let start = Instant::now();
    let nineteen = enumerate_grilles(3, 3);
    if nineteen.len() != 19 || !nineteen.iter().all(Grille::is_canonical) {
        return Err(format!("enumerate_grilles(3, 3) gave {} grilles", nineteen.len()));
    }
    for rows in 1..=6 {
        for cols in 1..=6 {
            let brute = brute_force_grilles(rows, cols);
            let listed: Vec<Vec<usize>> = enumerate_grilles(rows, cols).iter().map(|g| g.holes().to_vec()).collect();
            let listed_set: BTreeSet<Vec<usize>> = listed.iter().cloned().collect();
            if listed.len() != listed_set.len()
                || listed_set != brute
                || grille_count(rows, cols) != brute.len() as u128
            {
                return Err(format!("mismatch at r={rows} c={cols}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("19 canonical grilles, formula holds for r, c in 1..=6, {elapsed:.2?}"))
}

/// Additive Roman numerals by repeated subtraction, independent of the wheels.
fn additive_roman(mut value: u32) -> String {
    let mut out = String::new();
    for (glyph, unit) in [('M', 1000), ('D', 500), ('C', 100), ('L', 50), ('X', 10), ('V', 5), ('I', 1)] {
        while value >= unit {
            out.push(glyph);
            value -= unit;
        }
    }
    out
}

fn roman_preset() -> Outcome {
    let system = roman();
    if system.tuple_count() != 5000 {
        return Err(format!("{} tuples", system.tuple_count()));
    }
    let words: BTreeSet<String> = system.enumerate().map(|(_, w)| w).filter(|w| !w.is_empty()).collect();
    if words.len() != 4999 {
        return Err(format!("{} distinct non-empty words", words.len()));
    }
    for v in 1..5000u32 {
        let word = system.word_at(v as u128).map_err(|e| e.to_string())?;
        if word != additive_roman(v) {
            return Err(format!("{v}: {word} vs {}", additive_roman(v)));
        }
    }
    if additive_roman(1967) != "MDCCCCLXVII" || additive_roman(4999) != "MMMMDCCCCLXXXXVIIII" {
        return Err("oracle spot values".into());
    }
    Ok("5000 tuples, 4999 words, all agree with the additive oracle".into())
}

fn tiltman_preset() -> Outcome {
    match tiltman().tuple_count() {
        240 => Ok("240 tuples".into()),
        n => Err(format!("{n} tuples")),
    }
}

fn random_fragment(rng: &mut ChaCha8Rng) -> Fragment {
    let n = rng.gen_range(0..=3);
    Fragment::new((0..n).map(|_| *b"qokedyach".choose(rng).unwrap() as char).collect::<String>())
}

fn random_table(rng: &mut ChaCha8Rng) -> FragmentTable {
    let groups = rng.gen_range(1..=2);
    let rows = rng.gen_range(3..=12);
    let mut t = FragmentTable::empty(groups, 3, rows);
    for g in 0..groups {
        for k in 0..3 {
            for r in 0..rows {
                t.set_cell(g, k, r, random_fragment(rng));
            }
        }
    }
    t
}

fn grille_wheel_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let grilles = enumerate_grilles(3, 3);
    let mut checked = 0usize;
    for _ in 0..100 {
        let table = random_table(&mut rng);
        for g in &grilles {
            let flat = Grille::flat(3, g.rows());
            let shifted = shift_table(&table, &grille_to_shifts(g)).map_err(|e| e.to_string())?;
            for group in 0..table.groups() {
                for pos in 0..positions(&table, &flat) {
                    let a = apply_grille(&table, &flat, group, pos).map_err(|e| e.to_string())?;
                    let b = apply_grille(&shifted, g, group, pos).map_err(|e| e.to_string())?;
                    if a != b {
                        return Err(format!("grille {:?} group {group} row {pos}: {a} vs {b}", g.holes()));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} positions agree"))
}

fn synthesis_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let grilles = enumerate_grilles(3, 3);
    for trial in 0..100 {
        let n = rng.gen_range(0..=40);
        let vocab = common::random_words(&mut rng, "qokedyachin", n, 0..=8);
        for g in &grilles {
            let table = synthesize_table(&vocab, g, &EvenSplitter).map_err(|e| e.to_string())?;
            let back = slide(&table, g).map_err(|e| e.to_string())?;
            if back != vocab {
                return Err(format!("trial {trial}, grille {:?}", g.holes()));
            }
        }
    }
    Ok("100 word lists x 19 grilles replay exactly".into())
}

fn index_round_trip(system: &WheelSystem) -> Result<usize, String> {
    let mut failures = 0;
    for i in 0..system.tuple_count() {
        let word = system.word_at(i).map_err(|e| e.to_string())?;
        if system.index_of(&word).ok() != Some(i) {
            failures += 1;
        }
    }
    Ok(failures)
}

fn codec_round_trip() -> Outcome {
    let system = binomial_24();
    let report = system.distinct_words();
    let failures = index_round_trip(&system)?;
    if failures > 0 {
        return Err(format!(
            "{failures} of 13824 indices fail; the preset has {} distinct words and {} colliding words",
            report.distinct,
            report.collisions.len()
        ));
    }
    Ok("13824 indices round-trip".into())
}

fn codec_round_trip_collision_free() -> Outcome {
    let system = common::grammar_shaped_system(&mut ChaCha8Rng::seed_from_u64(9), 24);
    if !system.distinct_words().is_collision_free() {
        return Err("test system has collisions".into());
    }
    match index_round_trip(&system)? {
        0 => Ok("13824 indices of a collision-free 3x24 system round-trip".into()),
        n => Err(format!("{n} failures")),
    }
}

fn edit_graph_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut total_edges = 0;
    for trial in 0..20 {
        let mut types: BTreeSet<String> = BTreeSet::new();
        while types.len() < 1000 {
            types.extend(common::random_words(&mut rng, "okeyda", 1, 1..=6));
        }
        let types: Vec<String> = types.into_iter().collect();
        let graph = build_edit_graph(&types, 1);
        let indexed: BTreeSet<(&str, &str)> = graph.word_edges().into_iter().collect();
        let mut brute = BTreeSet::new();
        for (i, a) in types.iter().enumerate() {
            for b in &types[i + 1..] {
                if strsim::levenshtein(a, b) == 1 {
                    brute.insert((a.as_str(), b.as_str()));
                }
            }
        }
        if indexed != brute {
            let diff = indexed.symmetric_difference(&brute).count();
            return Err(format!("trial {trial}: {diff} discrepancies"));
        }
        total_edges += brute.len();
    }
    Ok(format!("20 trials, {total_edges} edges, no discrepancies"))
}

fn decompose_round_trip() -> Outcome {
    let original = common::grammar_shaped_system(&mut ChaCha8Rng::seed_from_u64(11), 24);
    let vocab: Vec<String> = original.enumerate().map(|(_, w)| w).collect();
    let splitter = GrammarSplitter { spec: common::small_grammar() };
    let (system, report) =
        decompose_vocabulary(&vocab, 3, &Budget::Uniform(24), &splitter).map_err(|e| e.to_string())?;
    if report.coverage() != 1.0 {
        return Err(format!("coverage {:.4}, {} uncovered", report.coverage(), report.uncovered.len()));
    }
    if common::fragment_sets(&system) != common::fragment_sets(&original) {
        return Err("recovered wheels differ from the originals".into());
    }
    Ok(format!("{} types, coverage 1.0, wheels recovered", report.types))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1", three_wheel_counts),
        ("2", three_wheel_percentages),
        ("3", grille_counts_and_entries),
        ("4", grille_enumeration),
        ("5", roman_preset),
        ("6", tiltman_preset),
        ("7", grille_wheel_equivalence),
        ("8", synthesis_round_trip),
        ("9", codec_round_trip),
        ("9, collision-free system", codec_round_trip_collision_free),
        ("10", edit_graph_oracle),
        ("11", decompose_round_trip),
    ];
    let mut failed = 0;
    for (label, check) in criteria {
        match check() {
            Ok(detail) => println!("criterion {label}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {label}: FAIL ({detail})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
