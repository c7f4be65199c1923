//! Skew diagrams in French orientation: row 1 is the bottom row and cells are
//! left-justified, so row `i` occupies columns `inner_i + 1 ..= outer_i`.

use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};

/// A cell address: `row` counts from the bottom, `col` from the left, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

/// A skew diagram `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Composition,
    inner: Composition,
}

impl SkewShape {
    pub fn new(outer: Composition, inner: Composition) -> Result<Self> {
        if inner.len() > outer.len() {
            return Err(Error::NotContained);
        }
        for (i, &p) in inner.parts().iter().enumerate() {
            if p > outer.parts()[i] {
                return Err(Error::NotContained);
            }
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn from_outer(outer: Composition) -> Self {
        SkewShape {
            outer,
            inner: Composition::empty(),
        }
    }

    pub fn empty() -> Self {
        SkewShape {
            outer: Composition::empty(),
            inner: Composition::empty(),
        }
    }

    pub fn outer(&self) -> &Composition {
        &self.outer
    }

    pub fn inner(&self) -> &Composition {
        &self.inner
    }

    /// Number of rows of the outer shape.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Inner length of the 1-based `row` (0 beyond the inner shape).
    pub fn inner_len(&self, row: usize) -> u32 {
        if row >= 1 && row <= self.inner.len() {
            self.inner.parts()[row - 1]
        } else {
            0
        }
    }

    /// Outer length of the 1-based `row`.
    pub fn outer_len(&self, row: usize) -> u32 {
        self.outer.parts()[row - 1]
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Cells in reading order: bottom row to top row, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for row in 1..=self.rows() {
            for col in self.inner_len(row) + 1..=self.outer_len(row) {
                out.push(Cell {
                    row: row as u32,
                    col,
                });
            }
        }
        out
    }

    pub fn contains_cell(&self, row: u32, col: u32) -> bool {
        row >= 1
            && (row as usize) <= self.rows()
            && col > self.inner_len(row as usize)
            && col <= self.outer_len(row as usize)
    }

    /// True when every row has at least one cell.
    pub fn is_normalized(&self) -> bool {
        (1..=self.rows()).all(|r| self.inner_len(r) < self.outer_len(r))
    }

    /// Removes empty rows; columns are left untouched.
    pub fn normalize(&self) -> SkewShape {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for r in 1..=self.rows() {
            if self.inner_len(r) < self.outer_len(r) {
                outer.push(self.outer_len(r));
                if self.inner_len(r) > 0 {
                    inner.push(self.inner_len(r));
                }
            }
        }
        // inner rows sit below all inner-free rows, so positivity is preserved
        debug_assert!(inner.len() <= outer.len());
        SkewShape {
            outer: Composition::new(outer).expect("outer parts positive"),
            inner: Composition::new(inner).expect("inner parts positive"),
        }
    }

    /// Closed column interval spanned by the 1-based `row`, if the row has cells.
    fn row_span(&self, row: usize) -> Option<(u32, u32)> {
        let lo = self.inner_len(row) + 1;
        let hi = self.outer_len(row);
        (lo <= hi).then_some((lo, hi))
    }

    /// True when the rows cannot be split into two groups whose cells span
    /// disjoint column sets. Evaluated on the rows that have cells.
    pub fn is_connected(&self) -> bool {
        let spans: Vec<(u32, u32)> = (1..=self.rows()).filter_map(|r| self.row_span(r)).collect();
        if spans.len() <= 1 {
            return true;
        }
        // breadth-first search on the interval intersection graph
        let n = spans.len();
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        while let Some(i) = queue.pop() {
            for j in 0..n {
                if !seen[j] && spans[i].0 <= spans[j].1 && spans[j].0 <= spans[i].1 {
                    seen[j] = true;
                    queue.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// True when every inner cell has all outer cells below it in its column
    /// also inner: whenever `inner_i < outer_i` with `i <= len(inner)`, the
    /// rows above within the inner shape are no longer than row `i`.
    pub fn is_extended(&self) -> bool {
        let inner = self.inner.parts();
        for i in 0..inner.len() {
            if inner[i] < self.outer.parts()[i] && inner[i + 1..].iter().any(|&b| b > inner[i]) {
                return false;
            }
        }
        true
    }

    /// Rows and columns exchanged; both shapes must be partitions.
    pub fn transpose(&self) -> Result<SkewShape> {
        if !self.outer.is_partition() {
            return Err(Error::NotPartition("outer shape"));
        }
        if !self.inner.is_partition() {
            return Err(Error::NotPartition("inner shape"));
        }
        let outer = self.outer.to_partition().conjugate().into_composition();
        let inner = self.inner.to_partition().conjugate().into_composition();
        SkewShape::new(outer, inner)
    }

    /// One shape holding both diagrams on disjoint column sets: `other` is
    /// placed in the bottom rows, shifted right past `self`, and `self` keeps
    /// its columns in the rows above. Inputs are normalized first.
    pub fn disjoint_union(&self, other: &SkewShape) -> SkewShape {
        let a = self.normalize();
        let b = other.normalize();
        if a.size() == 0 {
            return b;
        }
        if b.size() == 0 {
            return a;
        }
        let offset = a.outer.parts().iter().copied().max().unwrap_or(0);
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for r in 1..=b.rows() {
            outer.push(b.outer_len(r) + offset);
            inner.push(b.inner_len(r) + offset);
        }
        for r in 1..=a.rows() {
            outer.push(a.outer_len(r));
            if a.inner_len(r) > 0 {
                inner.push(a.inner_len(r));
            }
        }
        SkewShape::new(
            Composition::new(outer).expect("outer parts positive"),
            Composition::new(inner).expect("inner parts positive"),
        )
        .expect("containment holds by construction")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pieces = s.splitn(2, '/');
        let outer: Composition = pieces.next().unwrap_or("").parse()?;
        let inner: Composition = match pieces.next() {
            Some(t) => t.parse()?,
            None => Composition::empty(),
        };
        SkewShape::new(outer, inner)
    }
}
