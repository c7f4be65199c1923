//! Proper colorings of the digraph attached to a shape, the ascent statistic,
//! and the top ascent-degree coefficient of the chromatic generating function.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::qsym::{Basis, QSymElement};
use crate::shape::SkewShape;

/// A digraph on vertices labelled `1..=vertex_count` with directed edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledDigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl LabeledDigraph {
    pub fn new(vertex_count: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        LabeledDigraph {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

impl fmt::Display for LabeledDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (t, h)) in self.edges.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{t}->{h}")?;
        }
        Ok(())
    }
}

/// A color per vertex, indexed by label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring(colors)
    }

    pub fn color(&self, vertex: usize) -> u32 {
        self.0[vertex - 1]
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }
}

/// Vertices are the cells in reading order; edges join cells adjacent in a
/// row (left to right) or in a column (bottom to top), where adjacent means no
/// cell of the shape lies between them.
pub fn build_graph(shape: &SkewShape) -> LabeledDigraph {
    let cells = shape.cells();
    let mut edges = Vec::new();
    let mut last_in_col: Vec<Option<usize>> = Vec::new();
    for (i, c) in cells.iter().enumerate() {
        if i > 0 && cells[i - 1].row == c.row {
            edges.push((i, i + 1));
        }
        let col = c.col as usize;
        if col >= last_in_col.len() {
            last_in_col.resize(col + 1, None);
        }
        if let Some(b) = last_in_col[col] {
            edges.push((b + 1, i + 1));
        }
        last_in_col[col] = Some(i);
    }
    LabeledDigraph::new(cells.len(), edges)
}

/// Counts adjacent label pairs `i < j` with `color(i) < color(j)`; the
/// coloring must assign distinct colors across every edge.
pub fn ascent_count(coloring: &Coloring, graph: &LabeledDigraph) -> Result<usize> {
    let mut count = 0;
    for &(t, h) in graph.edges() {
        let (lo, hi) = (t.min(h), t.max(h));
        let (a, b) = (coloring.color(lo), coloring.color(hi));
        if a == b {
            return Err(Error::ImproperColoring);
        }
        if a < b {
            count += 1;
        }
    }
    Ok(count)
}

/// Monomial expansion of the coefficient of the top ascent power: packed
/// proper colorings in which every edge is an ascent, tallied by content.
/// Computed from the graph alone.
pub fn top_coefficient(shape: &SkewShape) -> QSymElement {
    let graph = build_graph(&shape.normalize());
    let n = graph.vertex_count();
    let mut terms: BTreeMap<Composition, BigInt> = BTreeMap::new();
    if n == 0 {
        terms.insert(Composition::empty(), BigInt::from(1));
        return QSymElement::from_map(Basis::Monomial, terms);
    }
    // lower endpoints per vertex, by label
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(t, h) in graph.edges() {
        let (lo, hi) = (t.min(h), t.max(h));
        preds[hi].push(lo);
    }
    let mut colors = vec![0u32; n + 1];
    fn rec(
        v: usize,
        n: usize,
        preds: &[Vec<usize>],
        colors: &mut Vec<u32>,
        terms: &mut BTreeMap<Composition, BigInt>,
    ) {
        if v > n {
            let mut counts = vec![0u32; n];
            for &c in &colors[1..] {
                counts[(c - 1) as usize] += 1;
            }
            while counts.last() == Some(&0) {
                counts.pop();
            }
            if counts.iter().all(|&c| c > 0) {
                let comp = Composition::new(counts).unwrap();
                *terms.entry(comp).or_default() += 1;
            }
            return;
        }
        let lo = preds[v].iter().map(|&p| colors[p] + 1).max().unwrap_or(1);
        for c in lo..=(n as u32) {
            colors[v] = c;
            rec(v + 1, n, preds, colors, terms);
        }
    }
    rec(1, n, &preds, &mut colors, &mut terms);
    QSymElement::from_map(Basis::Monomial, terms)
}
