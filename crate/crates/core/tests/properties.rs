mod common;

use std::collections::{BTreeMap, BTreeSet};

use grillewheel::corpus::{parse_transliteration, write_transliteration, LoadOptions};
use grillewheel::distributions::{
    binomial_reference, deviation, group_wheels, system_length_distribution, three_wheel_table, Mode, Scaling,
};
use grillewheel::grille::{apply_grille, enumerate_grilles, grille_to_shifts, shift_table, FragmentTable, Grille};
use grillewheel::network::{build_edit_graph, network_stats};
use grillewheel::synthesis::{decompose_vocabulary, AlphabetCodec, Budget, GrammarSplitter, GREEK_24, LATIN_24};
use grillewheel::wheels::{binomial_24, nine_wheel, nine_wheel_with};
use grillewheel::Fragment;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn alternative_profiles_stay_close_to_binomial() {
    let reference = binomial_reference(9, 1, 13_824, Scaling::Exact).unwrap();
    let table = three_wheel_table();
    let devs: Vec<_> = table.iter().map(|(_, d)| deviation(d, &reference)).collect();
    assert_eq!(devs[0].max_abs_points, 0.0);
    assert!((devs[1].max_abs_points - 1.97).abs() < 0.005);
    assert_eq!(devs[1].at_length, 5);
    assert!((devs[1].total_variation - 0.0411).abs() < 0.00005);
    assert!((devs[2].max_abs_points - 1.26).abs() < 0.005);
    assert!((devs[2].total_variation - 0.0262).abs() < 0.00005);
    assert!(table[2].1.is_symmetric() && !table[1].1.is_symmetric());
}

#[test]
fn binomial_preset_matches_reference_count_for_count() {
    let system = binomial_24();
    let reference = binomial_reference(9, 1, 13_824, Scaling::Exact).unwrap();
    assert_eq!(system_length_distribution(&system, Mode::Tuple), reference);
    assert_eq!(system_length_distribution(&system, Mode::Exhaustive), reference);
    let merged = group_wheels(&system, &[vec![0, 1], vec![2]]).unwrap();
    assert_eq!(merged.sizes(), vec![576, 24]);
    assert_eq!(system_length_distribution(&merged, Mode::Tuple), reference);
}

#[test]
fn nine_wheel_words_are_one_edit_from_nine_others() {
    let words: Vec<String> = nine_wheel().enumerate().map(|(_, w)| w).collect();
    let graph = build_edit_graph(&words, 1);
    let stats = network_stats(&graph);
    assert_eq!(stats.nodes, 512);
    assert_eq!(stats.components, 1);
    assert_eq!(stats.connected_fraction, 1.0);
    assert!(stats.degree_histogram.keys().all(|&d| d >= 9));
}

#[test]
fn glyph_relabelling_keeps_degrees() {
    let glyphs = ['p', 'x', 'm', 'r', 'g', 's', 'l', 'u', 'b', 'w'];
    let a = build_edit_graph(&nine_wheel().enumerate().map(|(_, w)| w).collect::<Vec<_>>(), 1);
    let b = build_edit_graph(&nine_wheel_with(&glyphs).enumerate().map(|(_, w)| w).collect::<Vec<_>>(), 1);
    let by_index = |g: &grillewheel::network::EditGraph, sys: grillewheel::wheels::WheelSystem| -> Vec<usize> {
        sys.enumerate().map(|(_, w)| g.degree(g.index_of(&w).unwrap())).collect()
    };
    assert_eq!(by_index(&a, nine_wheel()), by_index(&b, nine_wheel_with(&glyphs)));
}

#[test]
fn decomposition_recovers_per_wheel_budgets() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let original = common::grammar_shaped_system(&mut rng, 12);
    let vocab: Vec<String> = original.enumerate().map(|(_, w)| w).collect();
    let splitter = GrammarSplitter { spec: common::small_grammar() };

    let (system, report) = decompose_vocabulary(&vocab, 3, &Budget::PerWheel(vec![12, 12, 12]), &splitter).unwrap();
    assert_eq!(report.coverage(), 1.0);
    assert_eq!(report.overgeneration, Some(0));
    assert_eq!(common::fragment_sets(&system), common::fragment_sets(&original));

    let (system, report) = decompose_vocabulary(&vocab, 3, &Budget::PerWheel(vec![12, 6, 12]), &splitter).unwrap();
    assert_eq!(system.wheels()[1].len(), 6);
    assert_eq!(report.covered.len(), 12 * 6 * 12);
    assert_eq!(report.covered.len() + report.uncovered.len(), report.types);
    assert!(report.covered.iter().all(|w| system.generates(w)));
}

#[test]
fn single_type_gives_one_fragment_wheels() {
    let splitter = GrammarSplitter { spec: common::small_grammar() };
    let (system, report) = decompose_vocabulary(&["dcktel"], 3, &Budget::Uniform(24), &splitter).unwrap();
    assert_eq!(system.sizes(), vec![1, 1, 1]);
    assert_eq!(report.coverage(), 1.0);
    assert_eq!(system.word_at(0).unwrap(), "dcktel");
}

#[test]
fn flat_table_equals_grille_on_shifted_table_conversely() {
    // the converse direction: shifting columns up by (max - hole)
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in enumerate_grilles(3, 3) {
        let mut t = FragmentTable::empty(1, 3, 8);
        for k in 0..3 {
            for r in 0..8 {
                t.set_cell(0, k, r, Fragment::new(common::random_words(&mut rng, "abc", 1, 0..=2).remove(0)));
            }
        }
        let holes = grille_to_shifts(&g);
        let max = *holes.iter().max().unwrap();
        let up: Vec<usize> = holes.iter().map(|h| max - h).collect();
        let shifted = shift_table(&t, &up).unwrap();
        let flat = Grille::flat(3, 1);
        for top in 0..(t.rows() + 1 - g.rows()) {
            let read = apply_grille(&t, &g, 0, top).unwrap();
            assert_eq!(read, apply_grille(&shifted, &flat, 0, top + max).unwrap(), "{:?}", g.holes());
        }
    }
}

fn codec_system(seed: u64) -> grillewheel::wheels::WheelSystem {
    common::grammar_shaped_system(&mut ChaCha8Rng::seed_from_u64(seed), 24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn latin_codec_round_trip(idx in prop::collection::vec(0usize..24, 0..40), seed in 0u64..4) {
        let alphabet: Vec<char> = LATIN_24.chars().collect();
        let plain: String = idx.iter().map(|&i| alphabet[i]).collect();
        let codec = AlphabetCodec::new(codec_system(seed), LATIN_24, 'x').unwrap();
        let words = codec.encode(&plain).unwrap();
        prop_assert_eq!(words.len(), plain.chars().count().div_ceil(3));
        let back = codec.decode(&words).unwrap();
        prop_assert!(back.starts_with(&plain));
        prop_assert!(back[plain.len()..].chars().all(|c| c == 'x'));
    }

    #[test]
    fn greek_codec_round_trip(idx in prop::collection::vec(0usize..24, 1..30)) {
        let alphabet: Vec<char> = GREEK_24.chars().collect();
        let plain: String = idx.iter().map(|&i| alphabet[i]).collect();
        let codec = AlphabetCodec::new(codec_system(0), GREEK_24, 'ω').unwrap();
        let back = codec.decode(&codec.encode(&plain).unwrap()).unwrap();
        prop_assert!(back.starts_with(&plain));
    }

    #[test]
    fn transliteration_write_parse_is_stable(
        pages in prop::collection::vec(
            (prop::bool::ANY, prop::collection::vec(prop::collection::vec("[a-z]{1,6}", 1..5), 1..4)),
            1..4,
        )
    ) {
        let mut text = String::new();
        for (p, (lang_a, lines)) in pages.iter().enumerate() {
            text.push_str(&format!("<f{p}r>\t<! $L={}>\n", if *lang_a { "A" } else { "B" }));
            for (n, words) in lines.iter().enumerate() {
                let marker = if n == 0 { '@' } else { '+' };
                text.push_str(&format!("<f{p}r.{},{marker}P0>\t{}\n", n + 1, words.join(".")));
            }
        }
        let first = parse_transliteration(&text, &LoadOptions::default()).unwrap().corpus;
        let again = parse_transliteration(&write_transliteration(&first), &LoadOptions::default()).unwrap().corpus;
        prop_assert_eq!(&first, &again);
        let expected: BTreeMap<String, usize> = pages
            .iter()
            .flat_map(|(_, lines)| lines.iter().flatten())
            .fold(BTreeMap::new(), |mut m, w| { *m.entry(w.clone()).or_default() += 1; m });
        let types: BTreeSet<&str> = first.word_types();
        prop_assert_eq!(types.len(), expected.len());
    }
}
