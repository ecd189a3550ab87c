//! Integer partitions, their Young diagrams and the extended diagram obtained
//! by adjoining the outer border strip.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::PartitionError;

/// A square of a (possibly extended) Young diagram, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-indexed, got ({row},{col})");
        Cell { row, col }
    }

    pub fn transpose(self) -> Self {
        Cell { row: self.col, col: self.row }
    }

    /// Translate by a nonnegative offset.
    pub fn shifted(self, drow: usize, dcol: usize) -> Self {
        Cell { row: self.row + drow, col: self.col + dcol }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        for (k, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(PartitionError::NonPositive { index: k + 1 });
            }
            if k > 0 && parts[k - 1] < p {
                return Err(PartitionError::NotDecreasing { index: k + 1 });
            }
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a sequence that may carry trailing zeros.
    pub(crate) fn from_parts_trimmed(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// The staircase `(n-1, n-2, ..., 1)`; empty for `n <= 1`.
    pub fn staircase(n: usize) -> Self {
        Partition { parts: (1..n).rev().collect() }
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `r` (1-indexed); zero past the last row.
    pub fn part(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.col <= self.part(c.row)
    }

    /// Side of the Durfee square: the largest `k` with `parts[k] >= k`.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(k, &p)| p > k)
            .count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell { row: r + 1, col: c }))
    }

    /// Length of row `r` of the extended diagram: `parts[r-1] + 1`, reading
    /// `parts[0]` as `parts[1]`. Rows past `len() + 1` are empty.
    pub fn extended_row_len(&self, r: usize) -> usize {
        if r == 0 || r > self.len() + 1 {
            return 0;
        }
        let above = if r == 1 { self.part(1) } else { self.part(r - 1) };
        above + 1
    }

    pub fn in_extended(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.extended_row_len(c.row)
    }

    pub fn on_border(&self, c: Cell) -> bool {
        self.in_extended(c) && !self.contains(c)
    }

    pub fn extended(&self) -> ExtendedDiagram {
        ExtendedDiagram::new(self.clone())
    }

    /// The partition formed by the cells `(u,v)` with `u >= c.row`, `v >= c.col`.
    ///
    /// Defined for every cell of the extended diagram; empty on the border.
    pub fn subdiagram(&self, c: Cell) -> Result<Partition, PartitionError> {
        if !self.in_extended(c) {
            return Err(PartitionError::CellOutOfRange(c));
        }
        Ok(self.region(c))
    }

    /// Same as [`Partition::subdiagram`] without the range check: any cell
    /// outside the diagram yields the empty partition.
    pub fn region(&self, c: Cell) -> Partition {
        let parts = self
            .parts
            .iter()
            .skip(c.row - 1)
            .map_while(|&p| (p >= c.col).then(|| p - c.col + 1))
            .collect();
        Partition { parts }
    }

    /// Cells whose removal leaves a partition.
    pub fn removable_corners(&self) -> Result<Vec<Cell>, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        Ok((1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Cell { row: r, col: self.part(r) })
            .collect())
    }

    /// Removes a corner cell. Panics if `c` is not a removable corner.
    pub fn remove_corner(&self, c: Cell) -> Partition {
        assert!(
            c.col == self.part(c.row) && self.part(c.row) > self.part(c.row + 1),
            "{c} is not a removable corner of {self}"
        );
        let mut parts = self.parts.clone();
        parts[c.row - 1] -= 1;
        Partition::from_parts_trimmed(parts)
    }

    /// Every partition `mu` with `mu_k <= parts_k`, in lexicographic order of
    /// the part sequence, smallest first.
    pub fn contained_partitions(&self) -> ContainedPartitions<'_> {
        ContainedPartitions::new(self)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, grouped by size.
    pub fn all_up_to_size(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma separated parts, e.g. `"5,4,1"`; the empty string is the empty
    /// partition.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let value: i64 = token
                .parse()
                .map_err(|_| PartitionError::Parse(token.to_string()))?;
            if value <= 0 {
                return Err(PartitionError::NonPositive { index: parts.len() + 1 });
            }
            parts.push(value as usize);
        }
        Partition::new(parts)
    }
}

pub fn parse_partition(text: &str) -> Result<Partition, PartitionError> {
    text.parse()
}

/// Lexicographic enumeration of the partitions inside a fixed shape.
pub struct ContainedPartitions<'a> {
    bound: &'a Partition,
    // current parts padded with zeros to `bound.len()`
    current: Option<Vec<usize>>,
}

impl<'a> ContainedPartitions<'a> {
    fn new(bound: &'a Partition) -> Self {
        ContainedPartitions { bound, current: Some(vec![0; bound.len()]) }
    }

    fn advance(&self, cur: &[usize]) -> Option<Vec<usize>> {
        // Lexicographic successor: bump the rightmost position that can grow,
        // then reset everything after it to zero.
        for k in (0..cur.len()).rev() {
            let cap = if k == 0 { self.bound.parts[0] } else { self.bound.parts[k].min(cur[k - 1]) };
            if cur[k] < cap {
                let mut next = cur.to_vec();
                next[k] += 1;
                for v in &mut next[k + 1..] {
                    *v = 0;
                }
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for ContainedPartitions<'_> {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        self.current = self.advance(&cur);
        Some(Partition::from_parts_trimmed(cur))
    }
}

/// The extended diagram `λ*`, materialized as a cell set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedDiagram {
    base: Partition,
    cells: BTreeSet<Cell>,
    border: BTreeSet<Cell>,
}

impl ExtendedDiagram {
    fn new(base: Partition) -> Self {
        let mut cells = BTreeSet::new();
        let mut border = BTreeSet::new();
        for r in 1..=base.len() + 1 {
            for c in 1..=base.extended_row_len(r) {
                let cell = Cell { row: r, col: c };
                cells.insert(cell);
                if !base.contains(cell) {
                    border.insert(cell);
                }
            }
        }
        ExtendedDiagram { base, cells, border }
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn border(&self) -> &BTreeSet<Cell> {
        &self.border
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn is_border(&self, c: Cell) -> bool {
        self.border.contains(&c)
    }

    /// Row lengths of the extended shape.
    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.base.len() + 1).map(|r| self.base.extended_row_len(r)).collect()
    }
}
