//! Fillings of skew shapes under row and column comparison rules.
//!
//! One engine drives every generating function in this crate. A
//! [`ConstraintSpec`] fixes which columns are compared (the leftmost column
//! only, or all of them), and whether rows and columns increase weakly or
//! strictly. Two cells of a column are compared when no cell of the shape lies
//! between them, so a column's entries form a single chain even across gaps
//! left by short rows.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::qsym::{Basis, QSymElement};
use crate::shape::{Cell, SkewShape};

/// Which columns participate in the column comparisons.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ColumnScope {
    FirstColumn,
    AllColumns,
}

/// Weak (`<=`) or strict (`<`) increase.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Strictness {
    Strict,
    Weak,
}

/// Row and column rules for one family of fillings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ConstraintSpec {
    pub scope: ColumnScope,
    pub columns: Strictness,
    pub rows: Strictness,
}

impl ConstraintSpec {
    pub const fn new(scope: ColumnScope, columns: Strictness, rows: Strictness) -> Self {
        ConstraintSpec {
            scope,
            columns,
            rows,
        }
    }
}

/// Cell geometry shared by the enumerators: reading-order cells with row
/// membership and in-column predecessors.
struct Grid {
    cells: Vec<Cell>,
    /// 0-based row index per cell.
    row_of: Vec<usize>,
    /// Reading-order predecessor in the same column, skipping gap positions.
    below: Vec<Option<usize>>,
    /// Half-open cell index range per 0-based row.
    row_range: Vec<(usize, usize)>,
}

impl Grid {
    fn new(shape: &SkewShape) -> Grid {
        let cells = shape.cells();
        let mut row_of = Vec::with_capacity(cells.len());
        let mut below = Vec::with_capacity(cells.len());
        let mut row_range = vec![(0, 0); shape.rows()];
        let mut last_in_col: Vec<Option<usize>> = Vec::new();
        let mut prev_row = 0;
        for (i, c) in cells.iter().enumerate() {
            let r = (c.row - 1) as usize;
            row_of.push(r);
            if c.row != prev_row {
                row_range[r].0 = i;
                prev_row = c.row;
            }
            row_range[r].1 = i + 1;
            let col = c.col as usize;
            if col >= last_in_col.len() {
                last_in_col.resize(col + 1, None);
            }
            below.push(last_in_col[col]);
            last_in_col[col] = Some(i);
        }
        Grid {
            cells,
            row_of,
            below,
            row_range,
        }
    }

    fn in_scope_below(&self, i: usize, scope: ColumnScope) -> Option<usize> {
        match scope {
            ColumnScope::AllColumns => self.below[i],
            ColumnScope::FirstColumn => {
                if self.cells[i].col == 1 {
                    self.below[i]
                } else {
                    None
                }
            }
        }
    }
}

/// A filling of a shape's cells by positive integers, stored in reading order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: SkewShape,
    entries: Vec<u32>,
}

impl Tableau {
    pub fn new(shape: SkewShape, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != shape.size() as usize {
            return Err(Error::SizeMismatch);
        }
        if entries.iter().any(|&e| e == 0) {
            return Err(Error::ZeroPart);
        }
        Ok(Tableau { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries in reading order (bottom row to top, left to right).
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry of the cell in `row`, `col` (1-based), if it exists.
    pub fn entry_at(&self, row: u32, col: u32) -> Option<u32> {
        self.shape
            .cells()
            .iter()
            .position(|c| c.row == row && c.col == col)
            .map(|i| self.entries[i])
    }

    /// Occurrence counts of `1..=max_entry`.
    pub fn content_counts(&self) -> Vec<u32> {
        let max = self.entries.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for &e in &self.entries {
            counts[(e - 1) as usize] += 1;
        }
        counts
    }

    /// The content as a composition, when every value up to the maximum occurs.
    pub fn content(&self) -> Option<Composition> {
        let counts = self.content_counts();
        if counts.iter().any(|&c| c == 0) {
            return None;
        }
        Some(Composition::new(counts).expect("counts positive"))
    }

    /// True when the values used are exactly `1..=k` for some `k`.
    pub fn is_packed(&self) -> bool {
        self.content().is_some()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut lines = Vec::new();
        for row in (1..=self.shape.rows() as u32).rev() {
            let mut line = String::new();
            for col in 1..=self.shape.outer_len(row as usize) {
                if !line.is_empty() {
                    line.push(' ');
                }
                match self.entry_at(row, col) {
                    Some(e) => line.push_str(&format!("{e:>width$}")),
                    None => line.push_str(&" ".repeat(width)),
                }
            }
            lines.push(line.trim_end().to_string());
        }
        write!(f, "{}", lines.join("\n"))
    }
}

/// Checks every row pair and every in-scope column pair of `t`.
pub fn satisfies(t: &Tableau, spec: ConstraintSpec) -> bool {
    let grid = Grid::new(t.shape());
    let ok = |lo: u32, hi: u32, s: Strictness| match s {
        Strictness::Strict => lo < hi,
        Strictness::Weak => lo <= hi,
    };
    for i in 0..grid.cells.len() {
        if i > 0 && grid.row_of[i - 1] == grid.row_of[i] && !ok(t.entries[i - 1], t.entries[i], spec.rows)
        {
            return false;
        }
        if let Some(b) = grid.in_scope_below(i, spec.scope) {
            if !ok(t.entries[b], t.entries[i], spec.columns) {
                return false;
            }
        }
    }
    true
}

/// Enumerates packed fillings (values used are exactly `1..=k`) by choosing,
/// for each value in turn, the set of cells that receive it. Each step extends
/// some row prefixes: a strict row takes at most one new cell per value, and a
/// new cell's in-scope lower neighbour must already be filled (strictly
/// earlier for strict columns, no later than this value for weak columns).
struct PackedEnumerator<'a, F> {
    grid: &'a Grid,
    spec: ConstraintSpec,
    /// When set, the exact number of cells each successive value must take.
    target: Option<&'a [u32]>,
    /// Cells filled before the current value, as per-row prefix lengths.
    old_prefix: Vec<usize>,
    /// Prefix lengths including the current value's choices so far.
    new_prefix: Vec<usize>,
    values: Vec<u32>,
    /// Cells added per value; doubles as the content of the filling.
    added: Vec<u32>,
    remaining: usize,
    visit: F,
}

impl<'a, F: FnMut(&[u32], &[u32])> PackedEnumerator<'a, F> {
    fn run(grid: &'a Grid, spec: ConstraintSpec, target: Option<&'a [u32]>, visit: F) -> F {
        let rows = grid.row_range.len();
        let mut e = PackedEnumerator {
            grid,
            spec,
            target,
            old_prefix: vec![0; rows],
            new_prefix: vec![0; rows],
            values: vec![0; grid.cells.len()],
            added: Vec::new(),
            remaining: grid.cells.len(),
            visit,
        };
        if e.remaining == 0 {
            (e.visit)(&[], &[]);
        } else {
            e.extend_row(0, 0);
        }
        e.visit
    }

    /// Cells the current value must still take, when the content is pinned.
    fn quota(&self) -> Option<usize> {
        self.target.map(|t| t[self.added.len()] as usize)
    }

    fn row_len(&self, r: usize) -> usize {
        self.grid.row_range[r].1 - self.grid.row_range[r].0
    }

    /// True when the cell at in-row index `idx` of row `r` may receive the
    /// current value given the lower rows' choices.
    fn addable(&self, r: usize, idx: usize) -> bool {
        let ci = self.grid.row_range[r].0 + idx;
        match self.grid.in_scope_below(ci, self.spec.scope) {
            None => true,
            Some(b) => {
                let br = self.grid.row_of[b];
                let b_idx = b - self.grid.row_range[br].0;
                match self.spec.columns {
                    Strictness::Strict => b_idx < self.old_prefix[br],
                    Strictness::Weak => b_idx < self.new_prefix[br],
                }
            }
        }
    }

    fn extend_row(&mut self, r: usize, added_so_far: usize) {
        if r == self.grid.row_range.len() {
            let complete = match self.quota() {
                Some(q) => added_so_far == q,
                None => added_so_far > 0,
            };
            if complete {
                self.finish_value(added_so_far);
            }
            return;
        }
        // no new cell in this row
        self.extend_row(r + 1, added_so_far);
        let mut cap = match self.spec.rows {
            Strictness::Strict => 1,
            Strictness::Weak => self.row_len(r) - self.old_prefix[r],
        };
        if let Some(q) = self.quota() {
            cap = cap.min(q - added_so_far);
        }
        let base = self.old_prefix[r];
        let mut e = 0;
        while e < cap && base + e < self.row_len(r) && self.addable(r, base + e) {
            e += 1;
            self.new_prefix[r] = base + e;
            self.extend_row(r + 1, added_so_far + e);
        }
        self.new_prefix[r] = base;
    }

    fn finish_value(&mut self, added: usize) {
        let value = self.added.len() as u32 + 1;
        for r in 0..self.grid.row_range.len() {
            for idx in self.old_prefix[r]..self.new_prefix[r] {
                self.values[self.grid.row_range[r].0 + idx] = value;
            }
        }
        self.added.push(added as u32);
        self.remaining -= added;
        let saved: Vec<usize> = self.old_prefix.clone();
        self.old_prefix.copy_from_slice(&self.new_prefix);
        if self.remaining == 0 {
            (self.visit)(&self.values, &self.added);
        } else {
            self.extend_row(0, 0);
        }
        // recursion leaves new_prefix at its entry state, so only the old
        // prefixes need restoring
        self.old_prefix = saved;
        self.added.pop();
        self.remaining += added;
    }
}

/// Calls `visit` once per packed filling with the entries (reading order) and
/// the content counts.
pub fn for_each_packed<F: FnMut(&[u32], &[u32])>(shape: &SkewShape, spec: ConstraintSpec, visit: F) {
    let grid = Grid::new(shape);
    PackedEnumerator::run(&grid, spec, visit);
}

/// All packed fillings, ordered lexicographically by their entry sequence.
pub fn packed_tableaux(shape: &SkewShape, spec: ConstraintSpec) -> Vec<Tableau> {
    let mut all: Vec<Vec<u32>> = Vec::new();
    for_each_packed(shape, spec, |entries, _| all.push(entries.to_vec()));
    all.sort();
    all.into_iter()
        .map(|entries| Tableau {
            shape: shape.clone(),
            entries,
        })
        .collect()
}

/// All fillings with entries bounded by `max_value`, in lexicographic order.
pub fn bounded_tableaux(shape: &SkewShape, spec: ConstraintSpec, max_value: u32) -> Vec<Tableau> {
    let grid = Grid::new(shape);
    let n = grid.cells.len();
    let mut out = Vec::new();
    let mut entries = vec![0u32; n];
    fn rec(
        grid: &Grid,
        spec: ConstraintSpec,
        entries: &mut Vec<u32>,
        i: usize,
        max_value: u32,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == entries.len() {
            out.push(entries.clone());
            return;
        }
        let mut lo = 1;
        if i > 0 && grid.row_of[i - 1] == grid.row_of[i] {
            lo = lo.max(match spec.rows {
                Strictness::Strict => entries[i - 1] + 1,
                Strictness::Weak => entries[i - 1],
            });
        }
        if let Some(b) = grid.in_scope_below(i, spec.scope) {
            lo = lo.max(match spec.columns {
                Strictness::Strict => entries[b] + 1,
                Strictness::Weak => entries[b],
            });
        }
        for v in lo..=max_value {
            entries[i] = v;
            rec(grid, spec, entries, i + 1, max_value, out);
        }
    }
    let mut raw = Vec::new();
    if n == 0 {
        raw.push(Vec::new());
    } else {
        rec(&grid, spec, &mut entries, 0, max_value, &mut raw);
    }
    out.extend(raw.into_iter().map(|entries| Tableau {
        shape: shape.clone(),
        entries,
    }));
    out
}

/// A tableau whose entries are exactly `1..=n`, each once.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau(Tableau);

impl StandardTableau {
    pub fn new(t: Tableau) -> Result<Self> {
        let n = t.size();
        let mut seen = vec![false; n];
        for &e in t.entries() {
            let idx = e as usize - 1;
            if idx >= n || seen[idx] {
                return Err(Error::OutOfRange(format!("entry {e} repeats or exceeds {n}")));
            }
            seen[idx] = true;
        }
        Ok(StandardTableau(t))
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn shape(&self) -> &SkewShape {
        self.0.shape()
    }

    pub fn entries(&self) -> &[u32] {
        self.0.entries()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// 1-based row of each value `1..=n`.
    fn row_of_value(&self) -> Vec<u32> {
        let cells = self.0.shape.cells();
        let mut rows = vec![0u32; self.size()];
        for (i, &e) in self.0.entries.iter().enumerate() {
            rows[(e - 1) as usize] = cells[i].row;
        }
        rows
    }

    /// The standard tableau on the cells holding `1..=k`.
    pub fn restrict_low(&self, k: usize) -> Result<StandardTableau> {
        let n = self.size();
        if k > n {
            return Err(Error::OutOfRange(format!("k = {k} exceeds {n}")));
        }
        let shape = self.shape();
        let (outer, inner, entries) = split_shape(shape, self.entries(), (k as u32) + 1, true)?;
        let sub = SkewShape::new(outer, inner).map_err(|_| Error::NotRestrictable)?;
        Ok(StandardTableau(Tableau {
            shape: sub,
            entries,
        }))
    }

    /// The standard tableau on the cells holding the top `k` values, with
    /// entries shifted down to `1..=k`.
    pub fn restrict_high(&self, k: usize) -> Result<StandardTableau> {
        let n = self.size();
        if k > n {
            return Err(Error::OutOfRange(format!("k = {k} exceeds {n}")));
        }
        let cut = (n - k) as u32 + 1;
        let shape = self.shape();
        let (outer, inner, mut entries) = split_shape(shape, self.entries(), cut, false)?;
        for e in entries.iter_mut() {
            *e -= cut - 1;
        }
        let sub = SkewShape::new(outer, inner).map_err(|_| Error::NotRestrictable)?;
        Ok(StandardTableau(Tableau {
            shape: sub,
            entries,
        }))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Splits a standard filling at entry threshold `cut`. With `low` set, keeps
/// the cells holding values `< cut` (they must form row prefixes); otherwise
/// keeps the complementary row suffixes as a skew sub-shape.
fn split_shape(
    shape: &SkewShape,
    entries: &[u32],
    cut: u32,
    low: bool,
) -> Result<(Composition, Composition, Vec<u32>)> {
    let cells = shape.cells();
    let rows = shape.rows();
    let mut prefix = vec![0u32; rows];
    for (i, c) in cells.iter().enumerate() {
        if entries[i] < cut {
            prefix[(c.row - 1) as usize] += 1;
        }
    }
    // the low cells of each row must be its leftmost cells
    for (i, c) in cells.iter().enumerate() {
        let boundary = shape.inner_len(c.row as usize) + prefix[(c.row - 1) as usize];
        if (entries[i] < cut) != (c.col <= boundary) {
            return Err(Error::NotRestrictable);
        }
    }
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    if low {
        let keep = (1..=rows)
            .rev()
            .find(|&r| prefix[r - 1] > 0 || r <= shape.inner().len())
            .unwrap_or(0);
        for r in 1..=keep {
            let out = shape.inner_len(r) + prefix[r - 1];
            if out == 0 {
                return Err(Error::NotRestrictable);
            }
            outer.push(out);
            if shape.inner_len(r) > 0 {
                inner.push(shape.inner_len(r));
            }
        }
    } else {
        for r in 1..=rows {
            outer.push(shape.outer_len(r));
        }
        let keep = (1..=rows)
            .rev()
            .find(|&r| shape.inner_len(r) + prefix[r - 1] > 0)
            .unwrap_or(0);
        for r in 1..=keep {
            let inn = shape.inner_len(r) + prefix[r - 1];
            if inn == 0 {
                return Err(Error::NotRestrictable);
            }
            inner.push(inn);
        }
    }
    let picked: Vec<u32> = cells
        .iter()
        .zip(entries)
        .filter(|(_, &e)| (e < cut) == low)
        .map(|(_, &e)| e)
        .collect();
    Ok((
        Composition::new(outer).map_err(|_| Error::NotRestrictable)?,
        Composition::new(inner).map_err(|_| Error::NotRestrictable)?,
        picked,
    ))
}

/// All standard tableaux whose rows increase left to right and whose in-scope
/// columns increase bottom to top. Strict versus weak is immaterial for
/// distinct entries, so only the column scope is a parameter.
pub fn standard_tableaux(shape: &SkewShape, scope: ColumnScope) -> Vec<StandardTableau> {
    let grid = Grid::new(shape);
    let n = grid.cells.len();
    let mut filled = vec![false; n];
    let mut entries = vec![0u32; n];
    let mut raw: Vec<Vec<u32>> = Vec::new();
    fn rec(
        grid: &Grid,
        scope: ColumnScope,
        filled: &mut Vec<bool>,
        entries: &mut Vec<u32>,
        v: u32,
        raw: &mut Vec<Vec<u32>>,
    ) {
        let n = entries.len();
        if v as usize > n {
            raw.push(entries.clone());
            return;
        }
        for i in 0..n {
            if filled[i] {
                continue;
            }
            let left_ok = i == 0 || grid.row_of[i - 1] != grid.row_of[i] || filled[i - 1];
            let below_ok = grid.in_scope_below(i, scope).map_or(true, |b| filled[b]);
            if left_ok && below_ok {
                filled[i] = true;
                entries[i] = v;
                rec(grid, scope, filled, entries, v + 1, raw);
                filled[i] = false;
            }
        }
    }
    rec(&grid, scope, &mut filled, &mut entries, 1, &mut raw);
    raw.sort();
    raw.into_iter()
        .map(|entries| {
            StandardTableau(Tableau {
                shape: shape.clone(),
                entries,
            })
        })
        .collect()
}

/// Where `i + 1` sits relative to `i`, by row.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DescentKind {
    StrictlyAbove,
    WeaklyBelow,
    StrictlyBelow,
    WeaklyAbove,
}

/// The positions `i` whose successor `i + 1` sits in the stated row relation.
pub fn descent_set(t: &StandardTableau, kind: DescentKind) -> BTreeSet<u32> {
    let rows = t.row_of_value();
    let mut out = BTreeSet::new();
    for i in 1..t.size() {
        let (cur, next) = (rows[i - 1], rows[i]);
        let hit = match kind {
            DescentKind::StrictlyAbove => next > cur,
            DescentKind::WeaklyBelow => next <= cur,
            DescentKind::StrictlyBelow => next < cur,
            DescentKind::WeaklyAbove => next >= cur,
        };
        if hit {
            out.insert(i as u32);
        }
    }
    out
}

/// Monomial expansion of the generating function of packed fillings: the
/// coefficient of each composition counts the fillings with that content.
pub fn m_expansion(shape: &SkewShape, spec: ConstraintSpec) -> QSymElement {
    let mut counts: std::collections::BTreeMap<Composition, BigInt> = Default::default();
    for_each_packed(shape, spec, |_, content| {
        let comp = Composition::new(content.to_vec()).expect("packed content");
        *counts.entry(comp).or_default() += 1;
    });
    QSymElement::from_map(Basis::Monomial, counts)
}

/// Fundamental expansion from standard tableaux: one `F` term per tableau,
/// indexed by the composition of its descent set.
pub fn f_expansion(shape: &SkewShape, scope: ColumnScope, kind: DescentKind) -> QSymElement {
    let n = shape.size();
    let mut counts: std::collections::BTreeMap<Composition, BigInt> = Default::default();
    for t in standard_tableaux(shape, scope) {
        let comp = Composition::from_descents(&descent_set(&t, kind), n)
            .expect("descents lie in range");
        *counts.entry(comp).or_default() += 1;
    }
    QSymElement::from_map(Basis::Fundamental, counts)
}
