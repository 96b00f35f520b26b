//! Young and skew diagrams as cell sets, line classification, the canonical
//! skew diagram of a bicomposition, and border-strip removal.
//!
//! Cells are `(row, column)` pairs with both coordinates starting at 1, rows
//! growing downwards. Adjacency is 4-neighbour (edge) adjacency; diagonal
//! contact does not connect.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinatorics::{Bicomposition, Partition};
use crate::Error;

/// One diagram cell: `(row, column)`, 1-based.
pub type Cell = (u32, u32);

/// A finite set of cells. `BTreeSet` keeps iteration in row-major order.
pub type CellSet = BTreeSet<Cell>;

/// How a diagram sits relative to the grid lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    /// All cells in one row.
    Horizontal,
    /// All cells in one column.
    Vertical,
    /// Both at once: the empty diagram or a single cell.
    Both,
    /// Neither.
    Neither,
}

/// The Young diagram of `alpha`: `{(i, j) : 1 <= j <= alpha_i}`.
pub fn young_diagram(alpha: &Partition) -> CellSet {
    let mut cells = CellSet::new();
    for (i, &row_len) in alpha.parts().iter().enumerate() {
        for j in 1..=row_len {
            cells.insert((i as u32 + 1, j));
        }
    }
    cells
}

/// Splits `cells` into edge-adjacency components, ordered by their minimal
/// cell.
pub fn connected_components(cells: &CellSet) -> Vec<CellSet> {
    let mut components = Vec::new();
    let mut seen = CellSet::new();
    // the smallest unvisited cell is the minimum of its own component, so
    // discovery order is already sorted by minimal cell
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        let mut component = CellSet::new();
        let mut frontier = alloc::vec![start];
        seen.insert(start);
        while let Some((r, c)) = frontier.pop() {
            component.insert((r, c));
            let mut neighbors: Vec<Cell> = alloc::vec![(r + 1, c), (r, c + 1)];
            if r > 1 {
                neighbors.push((r - 1, c));
            }
            if c > 1 {
                neighbors.push((r, c - 1));
            }
            for nb in neighbors {
                if cells.contains(&nb) && seen.insert(nb) {
                    frontier.push(nb);
                }
            }
        }
        components.push(component);
    }
    components
}

/// Classifies a diagram as a horizontal line, a vertical line, both
/// (empty or a single cell), or neither.
pub fn classify_line(cells: &CellSet) -> LineKind {
    let mut rows = cells.iter().map(|&(r, _)| r);
    let mut cols = cells.iter().map(|&(_, c)| c);
    let one_row = rows.clone().next().is_none_or(|first| rows.all(|r| r == first));
    let one_col = cols.clone().next().is_none_or(|first| cols.all(|c| c == first));
    match (one_row, one_col) {
        (true, true) => LineKind::Both,
        (true, false) => LineKind::Horizontal,
        (false, true) => LineKind::Vertical,
        (false, false) => LineKind::Neither,
    }
}

/// A skew shape `outer / inner` given by two nested partitions. The Young
/// diagram of `alpha` is the inner-empty case `alpha / ()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if outer.contains(&inner) {
            Ok(SkewShape { outer, inner })
        } else {
            Err(Error::InvalidSkewShape)
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells, `|outer| - |inner|`.
    pub fn size(&self) -> u32 {
        self.outer.n() - self.inner.n()
    }

    /// The cell set `{(i, j) : inner_i < j <= outer_i}`.
    pub fn cells(&self) -> CellSet {
        let mut cells = CellSet::new();
        for (i, &row_len) in self.outer.parts().iter().enumerate() {
            for j in self.inner.part(i) + 1..=row_len {
                cells.insert((i as u32 + 1, j));
            }
        }
        cells
    }

    /// ASCII rendering: rows top to bottom, `.` for inner cells, `#` for
    /// skew cells. Empty shapes render as the empty string.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for (i, &row_len) in self.outer.parts().iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let inner_len = self.inner.part(i);
            for _ in 0..inner_len {
                out.push('.');
            }
            for _ in inner_len..row_len {
                out.push('#');
            }
        }
        out
    }
}

/// Builds the canonical skew diagram of a bicomposition: its connected
/// components are horizontal lines of lengths `lambda_deg` (zeros of
/// `lambda` dropped, order kept) followed by vertical lines of lengths
/// `mu_deg`, stacked anti-diagonally from top-right to bottom-left so that
/// each block sits strictly below and strictly left of the previous one.
/// Blocks touch at most diagonally, so they stay separate components.
pub fn build_skew_for_bicomposition(b: &Bicomposition) -> SkewShape {
    enum Block {
        Horizontal(u32),
        Vertical(u32),
    }
    let blocks: Vec<Block> = b
        .lambda()
        .strip_zeros()
        .parts()
        .iter()
        .map(|&h| Block::Horizontal(h))
        .chain(b.mu().strip_zeros().parts().iter().map(|&v| Block::Vertical(v)))
        .collect();

    // per-row column spans in a temporary coordinate space that may go
    // non-positive; shifted right afterwards
    let mut spans: Vec<(i64, i64)> = Vec::new();
    let mut col_hi: i64 = 0; // exclusive upper bound for the next block
    for block in &blocks {
        match *block {
            Block::Horizontal(h) => {
                spans.push((col_hi - i64::from(h), col_hi));
                col_hi -= i64::from(h);
            }
            Block::Vertical(v) => {
                for _ in 0..v {
                    spans.push((col_hi - 1, col_hi));
                }
                col_hi -= 1;
            }
        }
    }

    let shift = 1 - spans.iter().map(|&(lo, _)| lo).min().unwrap_or(1);
    let outer: Vec<u32> = spans.iter().map(|&(_, hi)| (hi + shift - 1) as u32).collect();
    let inner: Vec<u32> = spans
        .iter()
        .map(|&(lo, _)| (lo + shift - 1) as u32)
        .filter(|&x| x > 0)
        .collect();
    let outer = Partition::new(outer).expect("block columns decrease down the rows");
    let inner = Partition::new(inner).expect("block columns decrease down the rows");
    SkewShape::new(outer, inner).expect("inner span lies left of outer span in every row")
}

/// One way to remove a border strip (rim hook) from a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderStripRemoval {
    /// What is left after the strip is removed.
    pub result: Partition,
    /// Rows spanned by the strip, minus one; exponent of the sign.
    pub leg_length: u32,
}

/// All ways to remove a connected border strip of `size` cells from `alpha`
/// leaving a partition, ordered by the topmost row of the strip. Each top
/// row admits at most one strip: the strip walks the rim from the end of
/// that row down to wherever `size` cells run out.
pub fn border_strips(alpha: &Partition, size: u32) -> Vec<BorderStripRemoval> {
    assert!(size >= 1, "border strips have at least one cell");
    let parts = alpha.parts();
    let len = parts.len();
    let mut removals = Vec::new();
    for top in 0..len {
        for bottom in top..len {
            // leftmost column of the strip in its bottom row
            let t = i64::from(parts[top]) + (bottom - top) as i64 + 1 - i64::from(size);
            if t > i64::from(parts[bottom]) {
                break; // t grows with bottom while row lengths shrink
            }
            let floor = i64::from(alpha.part(bottom + 1)) + 1;
            if t < 1 || t < floor {
                continue;
            }
            let mut rest: Vec<u32> = Vec::with_capacity(len);
            for (i, &p) in parts.iter().enumerate() {
                let v = if i < top || i > bottom {
                    i64::from(p)
                } else if i < bottom {
                    i64::from(parts[i + 1]) - 1
                } else {
                    t - 1
                };
                if v > 0 {
                    rest.push(v as u32);
                }
            }
            removals.push(BorderStripRemoval {
                result: Partition::new(rest).expect("strip removal leaves a partition"),
                leg_length: (bottom - top) as u32,
            });
            break; // at most one strip per top row
        }
    }
    removals
}
