//! Brute-force reference implementations, kept deliberately naive and
//! independent of the library's enumeration engine.

use qsymlab_core::shape::SkewShape;
use qsymlab_core::tableau::{ColumnScope, ConstraintSpec, Strictness};

/// Every assignment of `1..=max_value` to the cells, by base counting.
pub fn brute_fillings(shape: &SkewShape, max_value: u32) -> Vec<Vec<u32>> {
    let n = shape.size() as usize;
    let mut out = Vec::new();
    let mut current = vec![1u32; n];
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    loop {
        out.push(current.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < max_value {
                current[i] += 1;
                for v in current[i + 1..].iter_mut() {
                    *v = 1;
                }
                break;
            }
        }
    }
}

fn respects(lo: u32, hi: u32, s: Strictness) -> bool {
    match s {
        Strictness::Strict => lo < hi,
        Strictness::Weak => lo <= hi,
    }
}

/// Direct pairwise check of the row and column rules, written from the cell
/// list alone.
pub fn brute_satisfies(shape: &SkewShape, entries: &[u32], spec: ConstraintSpec) -> bool {
    let cells = shape.cells();
    // rows: consecutive cells left to right
    for r in 1..=shape.rows() as u32 {
        let row: Vec<usize> = (0..cells.len()).filter(|&i| cells[i].row == r).collect();
        for w in row.windows(2) {
            if !respects(entries[w[0]], entries[w[1]], spec.rows) {
                return false;
            }
        }
    }
    // columns: consecutive cells bottom to top, gaps skipped
    let max_col = cells.iter().map(|c| c.col).max().unwrap_or(0);
    for col in 1..=max_col {
        if spec.scope == ColumnScope::FirstColumn && col != 1 {
            continue;
        }
        let mut column: Vec<usize> = (0..cells.len()).filter(|&i| cells[i].col == col).collect();
        column.sort_by_key(|&i| cells[i].row);
        for w in column.windows(2) {
            if !respects(entries[w[0]], entries[w[1]], spec.columns) {
                return false;
            }
        }
    }
    true
}

pub fn brute_packed(entries: &[u32]) -> bool {
    let max = entries.iter().copied().max().unwrap_or(0);
    (1..=max).all(|v| entries.contains(&v))
}

/// Connectivity by enumerating all two-block splits of the rows with cells.
pub fn brute_connected(shape: &SkewShape) -> bool {
    let spans: Vec<(u32, u32)> = (1..=shape.rows())
        .filter_map(|r| {
            let lo = shape.inner_len(r) + 1;
            let hi = shape.outer_len(r);
            (lo <= hi).then_some((lo, hi))
        })
        .collect();
    let k = spans.len();
    if k <= 1 {
        return true;
    }
    for mask in 1u32..((1 << k) - 1) {
        let mut cols_a = std::collections::BTreeSet::new();
        let mut cols_b = std::collections::BTreeSet::new();
        for (i, &(lo, hi)) in spans.iter().enumerate() {
            let target = if mask & (1 << i) != 0 {
                &mut cols_a
            } else {
                &mut cols_b
            };
            for c in lo..=hi {
                target.insert(c);
            }
        }
        if cols_a.is_disjoint(&cols_b) {
            return false;
        }
    }
    true
}

/// Extended condition by scanning columns: any inner cell must have every
/// outer cell below it in its column inside the inner shape too.
pub fn brute_extended(shape: &SkewShape) -> bool {
    let rows = shape.rows();
    for i in 1..=rows {
        for j in 1..=shape.inner_len(i) {
            for below in 1..i {
                let in_outer = j <= shape.outer_len(below);
                let in_inner = j <= shape.inner_len(below);
                if in_outer && !in_inner {
                    return false;
                }
            }
        }
    }
    true
}
