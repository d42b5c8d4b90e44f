//! Edit-distance-1 network over a small vocabulary.

use grillewheel::network::{build_edit_graph, network_stats, write_edge_list};
use grillewheel::wheels::nine_wheel;

fn main() {
    let words = ["daiin", "aiin", "dain", "qokedy", "okedy", "qokeedy", "chedy", "shedy", "sheedy", "otal"];
    let graph = build_edit_graph(&words, 1);
    print!("{}", write_edge_list(&graph));
    let stats = network_stats(&graph);
    println!(
        "{} nodes, {} edges, {} components, {:.0}% connected",
        stats.nodes,
        stats.edges,
        stats.components,
        100.0 * stats.connected_fraction
    );

    // every word of the nine-wheel system is one edit from another
    let words: Vec<String> = nine_wheel().enumerate().map(|(_, w)| w).collect();
    let stats = network_stats(&build_edit_graph(&words, 1));
    println!("nine wheels: {} words, connected fraction {}", stats.nodes, stats.connected_fraction);
}
