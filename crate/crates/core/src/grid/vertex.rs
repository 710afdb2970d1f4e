//! Vertex models: orientations of `G_{n,n}`.

use crate::class::Family;
use crate::error::{Error, Location, Result, Verdict, Violation, ViolationKind};

use super::fpl;
use super::graph::{domain_wall, Edge, GridGraph, Vertex};

/// Sides of an interior vertex whose arrow points into the vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Arrows {
    pub up: bool,
    pub down: bool,
    pub left: bool,
    pub right: bool,
}

impl Arrows {
    pub fn in_degree(self) -> u8 {
        self.up as u8 + self.down as u8 + self.left as u8 + self.right as u8
    }
}

/// The forbidden vertex structure: outgoing right and up, incoming left and
/// down, while the up edge of the left neighbour points down into it.
pub fn forbidden_vertex_structure(arrows: Arrows, left_up_points_down: bool) -> bool {
    arrows == Arrows { left: true, down: true, up: false, right: false } && left_up_points_down
}

pub(crate) fn odd_structure_ok(a: Arrows) -> bool {
    match a.in_degree() {
        1 => a.right,
        3 => !a.left,
        _ => true,
    }
}

/// An orientation stored per edge index; `true` points from the
/// lexicographically smaller endpoint (downwards or rightwards).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexModel {
    n: usize,
    family: Family,
    forward: Vec<bool>,
}

fn orientation(n: usize, arrows: &[(Vertex, Vertex)]) -> Result<(GridGraph, Vec<bool>)> {
    if n < 1 {
        return Err(Error::Range("order must be at least 1".into()));
    }
    let graph = GridGraph::square(n);
    let mut forward: Vec<Option<bool>> = vec![None; graph.num_edges()];
    for &(tail, head) in arrows {
        let e = Edge::between(tail, head)
            .ok_or_else(|| Error::Malformed(format!("{tail} and {head} are not adjacent")))?;
        let k = graph
            .edge_index(e)
            .ok_or_else(|| Error::Malformed(format!("{e} is not an edge of G({n},{n})")))?;
        if forward[k].is_some() {
            return Err(Error::Malformed(format!("{e} is oriented twice")));
        }
        forward[k] = Some(tail == e.first());
    }
    let forward = forward
        .into_iter()
        .enumerate()
        .map(|(k, f)| f.ok_or_else(|| Error::Malformed(format!("{} has no orientation", graph.edge_at(k)))))
        .collect::<Result<Vec<bool>>>()?;
    Ok((graph, forward))
}

pub(crate) fn arrows_at(graph: &GridGraph, forward: &[bool], v: Vertex) -> Arrows {
    let [u, d, l, r] = graph.around(v);
    Arrows {
        up: forward[u],
        down: !forward[d],
        left: forward[l],
        right: !forward[r],
    }
}

/// Domain-wall, in-degree, odd-structure, prefix and forbidden-structure
/// checks. Every edge must be oriented exactly once.
pub fn validate_vertex_model_local(
    n: usize,
    arrows: &[(Vertex, Vertex)],
    family: Family,
) -> Result<Verdict> {
    let (graph, forward) = orientation(n, arrows)?;
    Ok(local_verdict(&graph, &forward, family))
}

/// Full validation: the local conditions and, when they hold, validity of
/// the corresponding FPL.
pub fn validate_vertex_model(
    n: usize,
    arrows: &[(Vertex, Vertex)],
    family: Family,
) -> Result<Verdict> {
    let (graph, forward) = orientation(n, arrows)?;
    Ok(full_verdict(&graph, &forward, family))
}

pub(crate) fn full_verdict(graph: &GridGraph, forward: &[bool], family: Family) -> Verdict {
    let mut v = local_verdict(graph, forward, family);
    if v.is_valid() {
        let present = to_fpl_bitmap(graph, forward);
        for x in fpl::full_verdict(graph, &present, family).into_violations() {
            v.push(Violation::new(
                ViolationKind::Pullback,
                x.at,
                format!("corresponding loop configuration: {x}"),
            ));
        }
    }
    v
}

pub(crate) fn local_verdict(graph: &GridGraph, forward: &[bool], family: Family) -> Verdict {
    let n = graph.cols();
    let mut v = Verdict::default();
    for (k, &f) in forward.iter().enumerate() {
        let e = graph.edge_at(k);
        if let Some((tail, _)) = domain_wall(n, e) {
            if f != (tail == e.first()) {
                v.push(Violation::new(
                    ViolationKind::Boundary,
                    Location::Edge(e.first(), e.second()),
                    "arrow violates domain-wall boundary",
                ));
            }
        }
    }
    for i in 1..=n {
        let mut balance = 0i64;
        for j in 1..=n {
            let x = Vertex::new(i, j);
            let a = arrows_at(graph, forward, x);
            let deg = a.in_degree();
            let deg_ok = match family {
                Family::Asm => deg == 2,
                Family::Magog => (1..=3).contains(&deg),
            };
            if !deg_ok {
                v.push(Violation::new(
                    ViolationKind::Degree,
                    Location::Vertex(x),
                    format!("in-degree {deg}"),
                ));
                continue;
            }
            if family == Family::Asm {
                continue;
            }
            if !odd_structure_ok(a) {
                v.push(Violation::new(
                    ViolationKind::OddStructure,
                    Location::Vertex(x),
                    format!("in-degree {deg} with the wrong arrow"),
                ));
            }
            match deg {
                1 => balance += 1,
                3 => balance -= 1,
                _ => {}
            }
            if balance < 0 {
                v.push(Violation::new(
                    ViolationKind::FacingPrefix,
                    Location::Vertex(x),
                    format!("in-degree 1 minus in-degree 3 = {balance}"),
                ));
            }
            if j >= 2 {
                let left_up_down = forward[graph.vertical_index(i - 1, j - 1)];
                if forbidden_vertex_structure(a, left_up_down) {
                    v.push(Violation::new(
                        ViolationKind::ForbiddenStructure,
                        Location::Vertex(x),
                        "",
                    ));
                }
            }
        }
    }
    v
}

/// An edge belongs to the FPL iff its arrow points from the even endpoint.
pub(crate) fn to_fpl_bitmap(graph: &GridGraph, forward: &[bool]) -> Vec<bool> {
    forward
        .iter()
        .enumerate()
        .map(|(k, &f)| {
            let e = graph.edge_at(k);
            let tail = if f { e.first() } else { e.second() };
            tail.is_even()
        })
        .collect()
}

pub(crate) fn from_fpl_bitmap(graph: &GridGraph, present: &[bool]) -> Vec<bool> {
    present
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            let e = graph.edge_at(k);
            let tail = if p { e.even_end() } else { e.odd_end() };
            tail == e.first()
        })
        .collect()
}

impl VertexModel {
    pub fn new(n: usize, arrows: &[(Vertex, Vertex)], family: Family) -> Result<Self> {
        let (graph, forward) = orientation(n, arrows)?;
        Self::from_forward(graph, forward, family)
    }

    pub(crate) fn from_forward(graph: GridGraph, forward: Vec<bool>, family: Family) -> Result<Self> {
        full_verdict(&graph, &forward, family).into_result(format!("{family} vertex model"))?;
        Ok(VertexModel {
            n: graph.cols(),
            family,
            forward,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn graph(&self) -> GridGraph {
        GridGraph::square(self.n)
    }

    pub(crate) fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// `(tail, head)` of the arrow on `e`, if `e` is an edge of the graph.
    pub fn arrow(&self, e: Edge) -> Option<(Vertex, Vertex)> {
        let k = self.graph().edge_index(e)?;
        Some(if self.forward[k] { (e.first(), e.second()) } else { (e.second(), e.first()) })
    }

    /// All arrows as `(tail, head)` pairs, sorted.
    pub fn arrows(&self) -> Vec<(Vertex, Vertex)> {
        let g = self.graph();
        let mut out: Vec<_> = (0..g.num_edges())
            .map(|k| {
                let e = g.edge_at(k);
                if self.forward[k] { (e.first(), e.second()) } else { (e.second(), e.first()) }
            })
            .collect();
        out.sort();
        out
    }

    pub fn incoming(&self, v: Vertex) -> Arrows {
        arrows_at(&self.graph(), &self.forward, v)
    }

    /// `(in-degree 1, in-degree 3)` vertex counts.
    pub fn odd_counts(&self) -> (usize, usize) {
        let g = self.graph();
        let mut counts = (0, 0);
        for v in g.interior_vertices() {
            match self.incoming(v).in_degree() {
                1 => counts.0 += 1,
                3 => counts.1 += 1,
                _ => {}
            }
        }
        counts
    }
}
