//! Edit-distance networks over word types.
//!
//! Candidate pairs come from a deletion-neighbourhood index: two words within
//! edit distance `k` share at least one variant obtained by deleting at most
//! `k` glyphs from each. Only those pairs are checked with a full Levenshtein
//! computation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;

/// Undirected graph over word types. Nodes are sorted; edges are `(a, b)`
/// node indices with `a < b`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditGraph {
    nodes: Vec<String>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl EditGraph {
    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn index_of(&self, word: &str) -> Option<usize> {
        self.nodes.binary_search_by(|n| n.as_str().cmp(word)).ok()
    }

    /// Edges as word pairs, each pair and the list sorted.
    pub fn word_edges(&self) -> Vec<(&str, &str)> {
        self.edges.iter().map(|&(a, b)| (self.nodes[a].as_str(), self.nodes[b].as_str())).collect()
    }
}

/// Levenshtein distance over glyphs (chars).
pub fn levenshtein(a: &[char], b: &[char]) -> usize {
    let (a, b) = if a.len() < b.len() { (b, a) } else { (a, b) };
    let mut row: Vec<usize> = (0..=b.len()).collect();
    for (i, ca) in a.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = (up + 1).min(row[j] + 1).min(diag + usize::from(ca != cb));
            diag = up;
        }
    }
    row[b.len()]
}

fn deletion_variants(word: &[char], depth: usize, out: &mut BTreeSet<Vec<char>>) {
    if !out.insert(word.to_vec()) || depth == 0 {
        return;
    }
    for i in 0..word.len() {
        let mut shorter = word.to_vec();
        shorter.remove(i);
        deletion_variants(&shorter, depth - 1, out);
    }
}

/// Connects every pair of types at edit distance `1..=max_distance`.
/// Duplicate input words are merged.
pub fn build_edit_graph<S: AsRef<str>>(types: &[S], max_distance: usize) -> EditGraph {
    let nodes: Vec<String> = types.iter().map(|t| t.as_ref().to_owned()).collect::<BTreeSet<_>>().into_iter().collect();
    let glyphs: Vec<Vec<char>> = nodes.iter().map(|w| w.chars().collect()).collect();

    let mut index: HashMap<Vec<char>, Vec<usize>> = HashMap::new();
    for (id, word) in glyphs.iter().enumerate() {
        let mut variants = BTreeSet::new();
        deletion_variants(word, max_distance, &mut variants);
        for v in variants {
            index.entry(v).or_default().push(id);
        }
    }

    let mut edges = BTreeSet::new();
    for bucket in index.values() {
        for (i, &a) in bucket.iter().enumerate() {
            for &b in &bucket[i + 1..] {
                let (a, b) = (a.min(b), a.max(b));
                if edges.contains(&(a, b)) || glyphs[a].len().abs_diff(glyphs[b].len()) > max_distance {
                    continue;
                }
                let d = levenshtein(&glyphs[a], &glyphs[b]);
                if d >= 1 && d <= max_distance {
                    edges.insert((a, b));
                }
            }
        }
    }

    let mut adjacency = vec![Vec::new(); nodes.len()];
    for &(a, b) in &edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    EditGraph { nodes, edges: edges.into_iter().collect(), adjacency }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetworkStats {
    pub nodes: usize,
    pub edges: usize,
    /// Share of nodes with at least one neighbour.
    pub connected_fraction: f64,
    pub components: usize,
    pub largest_component: usize,
    /// Node count by degree.
    pub degree_histogram: BTreeMap<usize, usize>,
}

impl NetworkStats {
    pub fn largest_component_fraction(&self) -> f64 {
        if self.nodes == 0 {
            0.0
        } else {
            self.largest_component as f64 / self.nodes as f64
        }
    }
}

pub fn network_stats(graph: &EditGraph) -> NetworkStats {
    let n = graph.nodes.len();
    let mut uf = UnionFind::<usize>::new(n);
    for &(a, b) in &graph.edges {
        uf.union(a, b);
    }
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for node in 0..n {
        *sizes.entry(uf.find(node)).or_default() += 1;
    }
    let mut degree_histogram = BTreeMap::new();
    for node in 0..n {
        *degree_histogram.entry(graph.degree(node)).or_default() += 1;
    }
    let isolated = degree_histogram.get(&0).copied().unwrap_or(0);
    NetworkStats {
        nodes: n,
        edges: graph.edges.len(),
        connected_fraction: if n == 0 { 0.0 } else { (n - isolated) as f64 / n as f64 },
        components: sizes.len(),
        largest_component: sizes.values().copied().max().unwrap_or(0),
        degree_histogram,
    }
}

/// Tab-separated edge list, one `a<TAB>b` line per edge with `a < b`.
pub fn write_edge_list(graph: &EditGraph) -> String {
    let mut out = String::new();
    for (a, b) in graph.word_edges() {
        let _ = writeln!(out, "{a}\t{b}");
    }
    out
}
