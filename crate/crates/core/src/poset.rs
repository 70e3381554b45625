//! Explicit finite cobweb posets `P_N`.
//!
//! Vertices are stored level by level, so the vertex index order is a linear
//! extension of the partial order. Level `s` occupies the index range
//! `level_range(s)`.

use std::fmt;
use std::fmt::Write as _;
use std::ops::Range;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::sequence::FSequence;

/// Element `⟨j,s⟩`: position `j` (1-based) in level `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub j: u64,
    pub s: usize,
}

impl Vertex {
    pub const fn new(j: u64, s: usize) -> Self {
        Vertex { j, s }
    }

    pub fn rank(&self) -> usize {
        self.s
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{},{}⟩", self.j, self.s)
    }
}

#[derive(Clone, Debug)]
pub struct FinitePoset {
    seq: FSequence,
    level_start: Vec<usize>,
    vertices: Vec<Vertex>,
    hasse_edges: Vec<(usize, usize)>,
    pub(crate) covers: OnceLock<Vec<Vec<bool>>>,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.seq.values() == other.seq.values()
    }
}

impl Eq for FinitePoset {}

impl FinitePoset {
    /// Materializes levels `0..=max_level` of the cobweb designated by `seq`.
    pub fn build(seq: &FSequence, max_level: usize) -> Result<Self> {
        let seq = seq.truncate(max_level)?;
        let mut level_start = Vec::with_capacity(max_level + 2);
        let mut vertices = Vec::new();
        for s in 0..=max_level {
            level_start.push(vertices.len());
            vertices.extend((1..=seq.f(s)).map(|j| Vertex::new(j, s)));
        }
        level_start.push(vertices.len());

        // consecutive levels form a complete bipartite digraph
        let mut hasse_edges = Vec::new();
        for p in 0..max_level {
            for a in level_start[p]..level_start[p + 1] {
                for b in level_start[p + 1]..level_start[p + 2] {
                    hasse_edges.push((a, b));
                }
            }
        }

        Ok(FinitePoset {
            seq,
            level_start,
            vertices,
            hasse_edges,
            covers: OnceLock::new(),
        })
    }

    pub fn sequence(&self) -> &FSequence {
        &self.seq
    }

    pub fn max_level(&self) -> usize {
        self.level_start.len() - 2
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        self.vertices[index]
    }

    pub fn level_range(&self, s: usize) -> Range<usize> {
        self.level_start[s]..self.level_start[s + 1]
    }

    pub fn level(&self, s: usize) -> &[Vertex] {
        &self.vertices[self.level_range(s)]
    }

    /// Start of the first level strictly above rank `s` (or `len()`).
    pub(crate) fn above(&self, s: usize) -> usize {
        self.level_start[(s + 1).min(self.level_start.len() - 1)]
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        v.s <= self.max_level() && v.j >= 1 && v.j <= self.seq.f(v.s)
    }

    pub fn index_of(&self, v: &Vertex) -> Result<usize> {
        if !self.contains(v) {
            return Err(Error::NotInPoset(*v));
        }
        Ok(self.level_start[v.s] + (v.j - 1) as usize)
    }

    /// The unique minimal element `⟨1,0⟩`, present iff `F_0 = 1`.
    pub fn bottom(&self) -> Option<Vertex> {
        (self.seq.f(0) == 1).then_some(Vertex::new(1, 0))
    }

    /// Hasse edges as vertex-index pairs, grouped by level.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse_edges
    }

    pub fn hasse_edge_vertices(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.hasse_edges
            .iter()
            .map(|&(a, b)| (self.vertices[a], self.vertices[b]))
    }

    /// `x ≤ y` iff `r(x) < r(y)`, or `x = y`.
    pub fn leq(&self, x: &Vertex, y: &Vertex) -> Result<bool> {
        self.index_of(x)?;
        self.index_of(y)?;
        Ok(order(x, y))
    }

    pub(crate) fn leq_idx(&self, a: usize, b: usize) -> bool {
        order(&self.vertices[a], &self.vertices[b])
    }

    /// All `z` with `x ≤ z ≤ y`, in index order.
    pub fn segment(&self, x: &Vertex, y: &Vertex) -> Result<Vec<Vertex>> {
        self.index_of(x)?;
        self.index_of(y)?;
        Ok(self
            .vertices
            .iter()
            .filter(|z| order(x, z) && order(z, y))
            .copied()
            .collect())
    }

    /// Number of Hasse edges from level `p` to level `p + 1`.
    pub fn edges_between(&self, p: usize) -> usize {
        let from = self.level_range(p);
        self.hasse_edges
            .iter()
            .filter(|(a, _)| from.contains(a))
            .count()
    }

    /// Graphviz rendering of the Hasse diagram, one `rank=same` group per level.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = self.seq.name().unwrap_or("custom");
        let _ = writeln!(out, "// cobweb poset P_{} for {}", self.max_level(), name);
        out.push_str("digraph cobweb {\n");
        out.push_str("    rankdir=BT;\n");
        out.push_str("    node [shape=circle];\n");
        for s in 0..=self.max_level() {
            let level = self.level(s);
            if level.is_empty() {
                continue;
            }
            let _ = write!(out, "    {{ rank=same;");
            for v in level {
                let _ = write!(out, " \"{},{}\";", v.j, v.s);
            }
            out.push_str(" }\n");
        }
        for (x, y) in self.hasse_edge_vertices() {
            let _ = writeln!(out, "    \"{},{}\" -> \"{},{}\";", x.j, x.s, y.j, y.s);
        }
        out.push_str("}\n");
        out
    }
}

fn order(x: &Vertex, y: &Vertex) -> bool {
    x.s < y.s || (x.s == y.s && x.j == y.j)
}
