//! Fragment tables read through a sliding grille.
//!
//! A [`FragmentTable`] is a grid of fragments organised in groups of `c`
//! adjacent columns. A [`Grille`] has one hole per column; laid over a group
//! with its top edge at some row it exposes `c` fragments which, concatenated,
//! give the next word. Sliding runs group by group, top row ascending.
//!
//! Reading a table `T` through the flat grille is the same as reading
//! `shift_table(T, grille_to_shifts(G))` through `G`: moving the holes is
//! equivalent to moving the columns.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::glyph::Fragment;

pub const DEFAULT_COLUMNS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentTable {
    columns: usize,
    rows: usize,
    /// `cells[group][column][row]`
    cells: Vec<Vec<Vec<Fragment>>>,
}

impl FragmentTable {
    /// A table of empty fragments.
    pub fn empty(groups: usize, columns: usize, rows: usize) -> Self {
        FragmentTable { columns, rows, cells: vec![vec![vec![Fragment::empty(); rows]; columns]; groups] }
    }

    /// Builds a table from `group_rows[group][row][column]`.
    pub fn from_group_rows(group_rows: Vec<Vec<Vec<Fragment>>>) -> Result<Self> {
        let rows = group_rows.first().map_or(0, Vec::len);
        let columns = group_rows.first().and_then(|g| g.first()).map_or(0, Vec::len);
        if columns == 0 {
            return Err(Error::InvalidTable("table has no columns".into()));
        }
        let mut table = FragmentTable::empty(group_rows.len(), columns, rows);
        for (g, group) in group_rows.into_iter().enumerate() {
            if group.len() != rows {
                return Err(Error::InvalidTable(format!("group {g} has {} rows, expected {rows}", group.len())));
            }
            for (r, row) in group.into_iter().enumerate() {
                if row.len() != columns {
                    return Err(Error::InvalidTable(format!(
                        "group {g} row {r} has {} columns, expected {columns}",
                        row.len()
                    )));
                }
                for (k, cell) in row.into_iter().enumerate() {
                    table.cells[g][k][r] = cell;
                }
            }
        }
        Ok(table)
    }

    pub fn groups(&self) -> usize {
        self.cells.len()
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cell(&self, group: usize, column: usize, row: usize) -> &Fragment {
        &self.cells[group][column][row]
    }

    pub fn set_cell(&mut self, group: usize, column: usize, row: usize, fragment: Fragment) {
        self.cells[group][column][row] = fragment;
    }
}

/// One hole per column, at `holes[k]` rows below the grille's top edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grille {
    rows: usize,
    holes: Vec<usize>,
}

impl Grille {
    pub fn new(rows: usize, holes: Vec<usize>) -> Result<Self> {
        if holes.is_empty() {
            return Err(Error::InvalidGrille("a grille needs at least one column".into()));
        }
        if let Some(&h) = holes.iter().find(|&&h| h >= rows) {
            return Err(Error::InvalidGrille(format!("hole at row {h} outside a {rows}-row grille")));
        }
        Ok(Grille { rows, holes })
    }

    /// The smallest grille holding these holes.
    pub fn from_holes(holes: Vec<usize>) -> Result<Self> {
        let rows = holes.iter().max().map_or(1, |m| m + 1);
        Grille::new(rows, holes)
    }

    /// All holes on the top row.
    pub fn flat(columns: usize, rows: usize) -> Self {
        Grille { rows: rows.max(1), holes: vec![0; columns] }
    }

    /// Parses `"0,0,1"`; `rows` defaults to the smallest fitting height.
    pub fn parse(holes: &str, rows: Option<usize>) -> Result<Self> {
        let holes = holes
            .split(',')
            .map(|h| h.trim().parse::<usize>().map_err(|_| Error::InvalidGrille(format!("bad hole row {h:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match rows {
            Some(r) => Grille::new(r, holes),
            None => Grille::from_holes(holes),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn columns(&self) -> usize {
        self.holes.len()
    }

    pub fn holes(&self) -> &[usize] {
        &self.holes
    }

    pub fn is_canonical(&self) -> bool {
        self.holes.iter().min() == Some(&0)
    }

    /// Translates the holes up so the highest one sits on row 0.
    pub fn canonical(&self) -> Grille {
        let min = *self.holes.iter().min().unwrap();
        Grille { rows: self.rows, holes: self.holes.iter().map(|h| h - min).collect() }
    }
}

/// Distinct one-hole-per-column grilles of `rows` x `cols`: `r^c - (r-1)^c`.
pub fn grille_count(rows: usize, cols: usize) -> u128 {
    if rows == 0 {
        return 0;
    }
    let c = cols as u32;
    (rows as u128).pow(c) - ((rows - 1) as u128).pow(c)
}

/// Every canonical grille of the given size in lexicographic hole order.
pub fn enumerate_grilles(rows: usize, cols: usize) -> Vec<Grille> {
    let mut out = Vec::new();
    if rows == 0 || cols == 0 {
        return out;
    }
    let mut holes = vec![0usize; cols];
    loop {
        if holes.contains(&0) {
            out.push(Grille { rows, holes: holes.clone() });
        }
        // odometer over [0, rows)^cols
        let mut k = cols;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            holes[k] += 1;
            if holes[k] < rows {
                break;
            }
            holes[k] = 0;
        }
    }
}

fn check_columns(table: &FragmentTable, grille: &Grille) -> Result<()> {
    if grille.columns() != table.columns() {
        return Err(Error::LengthMismatch { expected: table.columns(), got: grille.columns() });
    }
    Ok(())
}

/// The word exposed by `grille` over `group` with its top edge at `top_row`.
pub fn apply_grille(table: &FragmentTable, grille: &Grille, group: usize, top_row: usize) -> Result<String> {
    check_columns(table, grille)?;
    if group >= table.groups() {
        return Err(Error::OutOfBounds(format!("group {group} of {}", table.groups())));
    }
    if top_row + grille.rows() > table.rows() {
        return Err(Error::OutOfBounds(format!(
            "a {}-row grille at row {top_row} overruns a {}-row table",
            grille.rows(),
            table.rows()
        )));
    }
    let mut word = String::new();
    for (k, &hole) in grille.holes().iter().enumerate() {
        word.push_str(table.cell(group, k, top_row + hole).as_str());
    }
    Ok(word)
}

/// Number of top-row positions at which `grille` fits inside `table`.
pub fn positions(table: &FragmentTable, grille: &Grille) -> usize {
    (table.rows() + 1).saturating_sub(grille.rows())
}

/// Every word the grille exposes: group by group, then top row ascending.
pub fn slide(table: &FragmentTable, grille: &Grille) -> Result<Vec<String>> {
    check_columns(table, grille)?;
    let n = positions(table, grille);
    let mut words = Vec::with_capacity(n * table.groups());
    for group in 0..table.groups() {
        for top in 0..n {
            words.push(apply_grille(table, grille, group, top)?);
        }
    }
    Ok(words)
}

/// Per-column downward shifts that turn a flat-grille table into one read
/// by `grille`. Equal to the hole rows of the canonical grille.
pub fn grille_to_shifts(grille: &Grille) -> Vec<usize> {
    grille.canonical().holes
}

/// Moves column `k` of every group down by `shifts[k]`. Vacated cells are
/// empty and the table grows by `max(shifts)` rows.
pub fn shift_table(table: &FragmentTable, shifts: &[usize]) -> Result<FragmentTable> {
    if shifts.len() != table.columns() {
        return Err(Error::LengthMismatch { expected: table.columns(), got: shifts.len() });
    }
    let extra = shifts.iter().copied().max().unwrap_or(0);
    let mut out = FragmentTable::empty(table.groups(), table.columns(), table.rows() + extra);
    for g in 0..table.groups() {
        for (k, &s) in shifts.iter().enumerate() {
            for r in 0..table.rows() {
                out.cells[g][k][r + s] = table.cells[g][k][r].clone();
            }
        }
    }
    Ok(out)
}

/// Positions `(group, top_row)` where the flat grille on `table` and
/// `grille` on the shifted table disagree. Empty when the equivalence holds.
pub fn equivalence_mismatches(table: &FragmentTable, grille: &Grille) -> Result<Vec<(usize, usize)>> {
    let flat = Grille::flat(grille.columns(), grille.rows());
    let shifted = shift_table(table, &grille_to_shifts(grille))?;
    let canonical = grille.canonical();
    let mut bad = Vec::new();
    for g in 0..table.groups() {
        for t in 0..positions(table, &flat) {
            if apply_grille(table, &flat, g, t)? != apply_grille(&shifted, &canonical, g, t)? {
                bad.push((g, t));
            }
        }
    }
    Ok(bad)
}

/// Smallest table length that lets all canonical 3-column grilles of
/// `grille_rows` rows together produce `word_types` distinct placements.
pub fn table_entries_needed(word_types: u64, grille_rows: usize) -> u128 {
    (word_types as u128).div_ceil(grille_count(grille_rows, DEFAULT_COLUMNS))
}

/// Parses the tab-separated table format. A cell holding only `|` separates
/// groups, `-` is the empty fragment and lines starting with `#` are comments.
pub fn parse_table(text: &str) -> Result<FragmentTable> {
    let mut group_rows: Vec<Vec<Vec<Fragment>>> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let mut groups: Vec<Vec<Fragment>> = vec![Vec::new()];
        for cell in line.split('\t') {
            match cell.trim() {
                "|" => groups.push(Vec::new()),
                "-" | "" => groups.last_mut().unwrap().push(Fragment::empty()),
                s => groups.last_mut().unwrap().push(Fragment::new(s)),
            }
        }
        if group_rows.is_empty() {
            group_rows = vec![Vec::new(); groups.len()];
        }
        if groups.len() != group_rows.len() {
            return Err(Error::Parse {
                line: n + 1,
                message: format!("{} groups, expected {}", groups.len(), group_rows.len()),
            });
        }
        for (g, row) in groups.into_iter().enumerate() {
            group_rows[g].push(row);
        }
    }
    if group_rows.is_empty() {
        return Err(Error::InvalidTable("no rows".into()));
    }
    FragmentTable::from_group_rows(group_rows)
}

pub fn write_table(table: &FragmentTable) -> String {
    let mut out = String::new();
    for r in 0..table.rows() {
        let mut cells = Vec::new();
        for g in 0..table.groups() {
            if g > 0 {
                cells.push("|".to_owned());
            }
            for k in 0..table.columns() {
                cells.push(table.cell(g, k, r).to_string());
            }
        }
        let _ = writeln!(out, "{}", cells.join("\t"));
    }
    out
}
