//! Direct searches over FPLs and vertex models.
//!
//! Interior vertices are visited row-major. At each vertex the up and left
//! edges are already decided, so only the down and right edges are branched
//! on (absent before present, or upward/leftward before downward/rightward),
//! after which every local condition centred at the vertex is checked.
//! Complete candidates are then filtered by the pullback.

use std::ops::ControlFlow;

use crate::class::Family;
use crate::grid::fpl::{self, facing_class, forbidden_fpl_structure, incidence_at};
use crate::grid::vertex::{self, arrows_at, forbidden_vertex_structure, odd_structure_ok};
use crate::grid::{alternating_boundary, domain_wall, FacingClass, GridGraph, Vertex};

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Model {
    Fpl,
    Vertex,
}

pub(crate) struct LoopSearch {
    n: usize,
    graph: GridGraph,
    model: Model,
    family: Family,
    /// FPL: edge present. Vertex model: arrow points down or right.
    bits: Vec<bool>,
    pub(crate) rejected: usize,
}

impl LoopSearch {
    pub(crate) fn new(n: usize, model: Model, family: Family) -> Self {
        let graph = GridGraph::square(n);
        let bits = (0..graph.num_edges())
            .map(|k| {
                let e = graph.edge_at(k);
                match model {
                    Model::Fpl => alternating_boundary(n, e).unwrap_or(false),
                    Model::Vertex => domain_wall(n, e).is_some_and(|(tail, _)| tail == e.first()),
                }
            })
            .collect();
        LoopSearch { n, graph, model, family, bits, rejected: 0 }
    }

    pub(crate) fn graph(&self) -> GridGraph {
        self.graph
    }

    pub(crate) fn run(&mut self, sink: &mut dyn FnMut(&[bool]) -> ControlFlow<()>) -> ControlFlow<()> {
        self.visit(1, 1, 0, sink)
    }

    /// Local conditions centred at `v`; updates the row balance.
    fn local_ok(&self, v: Vertex, balance: &mut i64) -> bool {
        let g = &self.graph;
        let magog = self.family == Family::Magog;
        let left_up = || self.bits[g.vertical_index(v.row - 1, v.col - 1)];
        match self.model {
            Model::Fpl => {
                let inc = incidence_at(g, &self.bits, v);
                let deg = inc.degree();
                if !magog {
                    return deg == 2;
                }
                if !(1..=3).contains(&deg) {
                    return false;
                }
                match facing_class(v.is_even(), inc) {
                    FacingClass::Invalid => return false,
                    FacingClass::LeftFacing => *balance += 1,
                    FacingClass::RightFacing => *balance -= 1,
                    FacingClass::Degree2 => {}
                }
                *balance >= 0 && !(v.col >= 2 && forbidden_fpl_structure(v.is_even(), inc, left_up()))
            }
            Model::Vertex => {
                let a = arrows_at(g, &self.bits, v);
                let deg = a.in_degree();
                if !magog {
                    return deg == 2;
                }
                if !(1..=3).contains(&deg) || !odd_structure_ok(a) {
                    return false;
                }
                match deg {
                    1 => *balance += 1,
                    3 => *balance -= 1,
                    _ => {}
                }
                *balance >= 0 && !(v.col >= 2 && forbidden_vertex_structure(a, left_up()))
            }
        }
    }

    fn visit(
        &mut self,
        r: usize,
        c: usize,
        balance: i64,
        sink: &mut dyn FnMut(&[bool]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = self.n;
        if r > n {
            return self.leaf(sink);
        }
        let down = (r < n).then(|| self.graph.vertical_index(r, c));
        let right = (c < n).then(|| self.graph.horizontal_index(r, c));
        let (nr, nc) = if c == n { (r + 1, 1) } else { (r, c + 1) };
        for &d in choices(down) {
            for &rt in choices(right) {
                if let Some(k) = down {
                    self.bits[k] = d;
                }
                if let Some(k) = right {
                    self.bits[k] = rt;
                }
                let mut b = balance;
                if self.local_ok(Vertex::new(r, c), &mut b) {
                    let next_b = if c == n { 0 } else { b };
                    self.visit(nr, nc, next_b, sink)?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn leaf(&mut self, sink: &mut dyn FnMut(&[bool]) -> ControlFlow<()>) -> ControlFlow<()> {
        let consistent = match self.model {
            Model::Fpl => fpl::pull_back(&self.graph, &self.bits, self.family).is_ok(),
            Model::Vertex => {
                let present = vertex::to_fpl_bitmap(&self.graph, &self.bits);
                fpl::full_verdict(&self.graph, &present, self.family).is_valid()
            }
        };
        if consistent {
            sink(&self.bits)
        } else {
            self.rejected += 1;
            ControlFlow::Continue(())
        }
    }
}

/// Undecided edges branch both ways; boundary edges keep their value.
fn choices(edge: Option<usize>) -> &'static [bool] {
    match edge {
        Some(_) => &[false, true],
        None => &[false],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, model: Model, family: Family) -> (usize, usize) {
        let mut k = 0;
        let mut s = LoopSearch::new(n, model, family);
        let _ = s.run(&mut |_| {
            k += 1;
            ControlFlow::Continue(())
        });
        (k, s.rejected)
    }

    #[test]
    fn small_counts() {
        for model in [Model::Fpl, Model::Vertex] {
            for family in Family::ALL {
                let counts: Vec<_> = (1..=4).map(|n| count(n, model, family)).collect();
                assert_eq!(counts, [(1, 0), (2, 0), (7, 0), (42, 0)]);
            }
        }
    }
}
