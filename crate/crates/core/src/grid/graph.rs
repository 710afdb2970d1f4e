use std::fmt;

use crate::error::{Error, Result};

/// Vertex `v_{i,j}` of the grid graph; `row` grows downwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

impl Vertex {
    pub const fn new(row: usize, col: usize) -> Self {
        Vertex { row, col }
    }

    pub fn is_even(self) -> bool {
        (self.row + self.col) % 2 == 0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({},{})", self.row, self.col)
    }
}

/// An undirected edge stored with its lexicographically smaller endpoint
/// first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Canonical edge between two grid-adjacent vertices.
    pub fn between(a: Vertex, b: Vertex) -> Option<Edge> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let adjacent = (a.row == b.row && a.col + 1 == b.col) || (a.col == b.col && a.row + 1 == b.row);
        adjacent.then_some(Edge(a, b))
    }

    /// `v_{i,j} v_{i+1,j}`.
    pub const fn vertical(i: usize, j: usize) -> Edge {
        Edge(Vertex::new(i, j), Vertex::new(i + 1, j))
    }

    /// `v_{i,j} v_{i,j+1}`.
    pub const fn horizontal(i: usize, j: usize) -> Edge {
        Edge(Vertex::new(i, j), Vertex::new(i, j + 1))
    }

    pub fn first(self) -> Vertex {
        self.0
    }

    pub fn second(self) -> Vertex {
        self.1
    }

    pub fn is_vertical(self) -> bool {
        self.0.col == self.1.col
    }

    /// The endpoint with even parity (every edge joins an even and an odd
    /// vertex).
    pub fn even_end(self) -> Vertex {
        if self.0.is_even() {
            self.0
        } else {
            self.1
        }
    }

    pub fn odd_end(self) -> Vertex {
        if self.0.is_even() {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// The graph `G_{m,n}`: vertices `v_{i,j}` for `0 <= i <= m+1`,
/// `0 <= j <= n+1` without the four corners; vertical edges
/// `v_{i,j} v_{i+1,j}` for `0 <= i <= m, 1 <= j <= n` and horizontal edges
/// `v_{i,j} v_{i,j+1}` for `1 <= i <= m, 0 <= j <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridGraph {
    m: usize,
    n: usize,
}

impl GridGraph {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::Range(format!("grid dimensions must be at least 1, got {m} x {n}")));
        }
        Ok(GridGraph { m, n })
    }

    pub(crate) fn square(n: usize) -> Self {
        debug_assert!(n >= 1);
        GridGraph { m: n, n }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        let corner_row = v.row == 0 || v.row == self.m + 1;
        let corner_col = v.col == 0 || v.col == self.n + 1;
        v.row <= self.m + 1 && v.col <= self.n + 1 && !(corner_row && corner_col)
    }

    pub fn is_interior(&self, v: Vertex) -> bool {
        (1..=self.m).contains(&v.row) && (1..=self.n).contains(&v.col)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        for i in 0..=self.m + 1 {
            for j in 0..=self.n + 1 {
                let v = Vertex::new(i, j);
                if self.contains_vertex(v) {
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.m).flat_map(move |i| (1..=self.n).map(move |j| Vertex::new(i, j)))
    }

    pub fn num_edges(&self) -> usize {
        2 * self.m * self.n + self.m + self.n
    }

    fn num_vertical(&self) -> usize {
        (self.m + 1) * self.n
    }

    pub(crate) fn vertical_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= self.m && (1..=self.n).contains(&j));
        i * self.n + (j - 1)
    }

    pub(crate) fn horizontal_index(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.m).contains(&i) && j <= self.n);
        self.num_vertical() + (i - 1) * (self.n + 1) + j
    }

    /// Dense index of `e` in `0..num_edges()`, or `None` if `e` is not an
    /// edge of this graph.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        let (a, _) = (e.first(), e.second());
        if e.is_vertical() {
            (a.row <= self.m && (1..=self.n).contains(&a.col)).then(|| self.vertical_index(a.row, a.col))
        } else {
            ((1..=self.m).contains(&a.row) && a.col <= self.n)
                .then(|| self.horizontal_index(a.row, a.col))
        }
    }

    pub fn edge_at(&self, idx: usize) -> Edge {
        if idx < self.num_vertical() {
            Edge::vertical(idx / self.n, idx % self.n + 1)
        } else {
            let k = idx - self.num_vertical();
            Edge::horizontal(k / (self.n + 1) + 1, k % (self.n + 1))
        }
    }

    /// All edges, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = (0..self.num_edges()).map(|k| self.edge_at(k)).collect();
        edges.sort();
        edges
    }

    /// Edges incident to a boundary vertex.
    pub fn is_boundary_edge(&self, e: Edge) -> bool {
        !self.is_interior(e.first()) || !self.is_interior(e.second())
    }

    /// The up, down, left and right edge indices at an interior vertex.
    pub(crate) fn around(&self, v: Vertex) -> [usize; 4] {
        debug_assert!(self.is_interior(v));
        [
            self.vertical_index(v.row - 1, v.col),
            self.vertical_index(v.row, v.col),
            self.horizontal_index(v.row, v.col - 1),
            self.horizontal_index(v.row, v.col),
        ]
    }
}

/// Whether a boundary edge of `G_{n,n}` belongs to every FPL of order `n`
/// (alternating boundary conditions); `None` for interior edges.
pub fn alternating_boundary(n: usize, e: Edge) -> Option<bool> {
    let (a, b) = (e.first(), e.second());
    let odd_n = n % 2 == 1;
    if e.is_vertical() {
        if a.row == 0 {
            Some(a.col % 2 == 1)
        } else if b.row == n + 1 {
            Some(if odd_n { a.col % 2 == 1 } else { a.col % 2 == 0 })
        } else {
            None
        }
    } else if a.col == 0 {
        Some(a.row % 2 == 0)
    } else if b.col == n + 1 {
        Some(if odd_n { a.row % 2 == 0 } else { a.row % 2 == 1 })
    } else {
        None
    }
}

/// Domain-wall arrow `(tail, head)` for a boundary edge of `G_{n,n}`:
/// left and right arrows point inward, top and bottom arrows outward.
pub fn domain_wall(n: usize, e: Edge) -> Option<(Vertex, Vertex)> {
    let (a, b) = (e.first(), e.second());
    if e.is_vertical() {
        if a.row == 0 {
            Some((b, a))
        } else if b.row == n + 1 {
            Some((a, b))
        } else {
            None
        }
    } else if a.col == 0 {
        Some((a, b))
    } else if b.col == n + 1 {
        Some((b, a))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_graph() {
        let g = GridGraph::new(1, 1).unwrap();
        let vs: Vec<_> = g.vertices();
        assert_eq!(
            vs,
            vec![
                Vertex::new(0, 1),
                Vertex::new(1, 0),
                Vertex::new(1, 1),
                Vertex::new(1, 2),
                Vertex::new(2, 1)
            ]
        );
        assert_eq!(g.num_edges(), 4);
        assert_eq!(g.edges().len(), 4);
    }

    #[test]
    fn counts() {
        let g = GridGraph::new(3, 3).unwrap();
        assert_eq!(g.vertices().len(), 21);
        assert_eq!(g.edges().len(), 24);
        assert_eq!(g.interior_vertices().count(), 9);
        let g = GridGraph::new(2, 3).unwrap();
        assert_eq!(g.vertices().len(), 16);
        assert_eq!(g.edges().len(), 17);
        assert_eq!(g.interior_vertices().count(), 6);
        assert!(GridGraph::new(0, 3).is_err());
    }

    #[test]
    fn edge_indices_are_dense_and_invertible() {
        let g = GridGraph::new(2, 4).unwrap();
        for k in 0..g.num_edges() {
            let e = g.edge_at(k);
            assert_eq!(g.edge_index(e), Some(k));
            assert!(g.contains_vertex(e.first()) && g.contains_vertex(e.second()));
        }
        assert_eq!(g.edge_index(Edge::vertical(0, 0)), None);
        assert_eq!(g.edge_index(Edge::horizontal(0, 1)), None);
    }

    #[test]
    fn canonical_edges() {
        let a = Vertex::new(2, 1);
        let b = Vertex::new(1, 1);
        assert_eq!(Edge::between(a, b), Some(Edge::vertical(1, 1)));
        assert_eq!(Edge::between(a, Vertex::new(2, 3)), None);
        assert_eq!(Edge::vertical(1, 1).even_end(), Vertex::new(1, 1));
    }

    #[test]
    fn boundary_conditions_order_one() {
        assert_eq!(alternating_boundary(1, Edge::vertical(0, 1)), Some(true));
        assert_eq!(alternating_boundary(1, Edge::vertical(1, 1)), Some(true));
        assert_eq!(alternating_boundary(1, Edge::horizontal(1, 0)), Some(false));
        assert_eq!(alternating_boundary(1, Edge::horizontal(1, 1)), Some(false));
        assert_eq!(
            domain_wall(1, Edge::horizontal(1, 1)),
            Some((Vertex::new(1, 2), Vertex::new(1, 1)))
        );
        assert_eq!(
            domain_wall(1, Edge::vertical(0, 1)),
            Some((Vertex::new(1, 1), Vertex::new(0, 1)))
        );
    }
}
