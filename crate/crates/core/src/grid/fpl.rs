//! Fully packed loop configurations on `G_{n,n}`.
//!
//! Height cell `h_{i,j}` sits in the face bounded by `v_{i,j}`, `v_{i,j+1}`,
//! `v_{i+1,j}` and `v_{i+1,j+1}`, so interior vertex `v_{i,j}` is surrounded
//! clockwise by `h_{i-1,j-1}, h_{i-1,j}, h_{i,j}, h_{i,j-1}`.

use crate::class::Family;
use crate::error::{Error, Location, Result, Verdict, Violation, ViolationKind};

use super::graph::{alternating_boundary, Edge, GridGraph, Vertex};
use super::height::HeightFunctionMatrix;

/// Which of the four edges at an interior vertex are present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Incidence {
    pub up: bool,
    pub down: bool,
    pub left: bool,
    pub right: bool,
}

impl Incidence {
    pub fn degree(self) -> u8 {
        self.up as u8 + self.down as u8 + self.left as u8 + self.right as u8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FacingClass {
    Degree2,
    RightFacing,
    LeftFacing,
    Invalid,
}

/// Classifies the local structure at an interior vertex.
///
/// Right-facing: an even vertex whose only edge goes left, or an odd vertex
/// of degree 3 missing its left edge. Left-facing: an even vertex of degree
/// 3 missing its right edge, or an odd vertex whose only edge goes right.
pub fn facing_class(even: bool, inc: Incidence) -> FacingClass {
    match (inc.degree(), even) {
        (2, _) => FacingClass::Degree2,
        (1, true) if inc.left => FacingClass::RightFacing,
        (3, true) if !inc.right => FacingClass::LeftFacing,
        (3, false) if !inc.left => FacingClass::RightFacing,
        (1, false) if inc.right => FacingClass::LeftFacing,
        _ => FacingClass::Invalid,
    }
}

/// The two forbidden structures, centred on an interior vertex whose left
/// neighbour is interior. `left_up` is the edge joining the left neighbour
/// to the vertex above it.
///
/// Even centre: exactly the up and right edges, with `left_up` present.
/// Odd centre: exactly the left and down edges, with `left_up` absent.
pub fn forbidden_fpl_structure(even: bool, inc: Incidence, left_up: bool) -> bool {
    if even {
        inc == Incidence { up: true, right: true, down: false, left: false } && left_up
    } else {
        inc == Incidence { left: true, down: true, up: false, right: false } && !left_up
    }
}

pub(crate) fn incidence_at(graph: &GridGraph, present: &[bool], v: Vertex) -> Incidence {
    let [u, d, l, r] = graph.around(v);
    Incidence {
        up: present[u],
        down: present[d],
        left: present[l],
        right: present[r],
    }
}

/// A subgraph of `G_{n,n}` validated as an FPL of the given family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FplConfiguration {
    n: usize,
    family: Family,
    present: Vec<bool>,
}

pub(crate) fn edge_bitmap(n: usize, edges: &[Edge]) -> Result<(GridGraph, Vec<bool>)> {
    if n < 1 {
        return Err(Error::Range("order must be at least 1".into()));
    }
    let graph = GridGraph::square(n);
    let mut present = vec![false; graph.num_edges()];
    for &e in edges {
        let k = graph
            .edge_index(e)
            .ok_or_else(|| Error::Malformed(format!("{e} is not an edge of G({n},{n})")))?;
        present[k] = true;
    }
    Ok((graph, present))
}

/// Boundary, degree, facing, facing-prefix and forbidden-structure checks,
/// in that order, without the pullback.
pub fn validate_fpl_local(n: usize, edges: &[Edge], family: Family) -> Result<Verdict> {
    let (graph, present) = edge_bitmap(n, edges)?;
    Ok(local_verdict(&graph, &present, family))
}

/// Full validation: the local conditions and, when they hold, agreement
/// with the pullback to a height function of the same family.
pub fn validate_fpl(n: usize, edges: &[Edge], family: Family) -> Result<Verdict> {
    let (graph, present) = edge_bitmap(n, edges)?;
    Ok(full_verdict(&graph, &present, family))
}

pub(crate) fn full_verdict(graph: &GridGraph, present: &[bool], family: Family) -> Verdict {
    let mut v = local_verdict(graph, present, family);
    if v.is_valid() {
        if let Err(pull) = pull_back(graph, present, family) {
            v.extend(pull);
        }
    }
    v
}

pub(crate) fn local_verdict(graph: &GridGraph, present: &[bool], family: Family) -> Verdict {
    let n = graph.cols();
    let mut v = Verdict::default();
    for (k, &on) in present.iter().enumerate() {
        let e = graph.edge_at(k);
        if let Some(expected) = alternating_boundary(n, e) {
            if on != expected {
                v.push(Violation::new(
                    ViolationKind::Boundary,
                    Location::Edge(e.first(), e.second()),
                    if expected { "required boundary edge missing" } else { "boundary edge not allowed" },
                ));
            }
        }
    }
    for i in 1..=n {
        let mut balance = 0i64;
        for j in 1..=n {
            let x = Vertex::new(i, j);
            let inc = incidence_at(graph, present, x);
            let deg = inc.degree();
            let deg_ok = match family {
                Family::Asm => deg == 2,
                Family::Magog => (1..=3).contains(&deg),
            };
            if !deg_ok {
                v.push(Violation::new(
                    ViolationKind::Degree,
                    Location::Vertex(x),
                    format!("degree {deg}"),
                ));
                continue;
            }
            if family == Family::Asm {
                continue;
            }
            match facing_class(x.is_even(), inc) {
                FacingClass::Invalid => v.push(Violation::new(
                    ViolationKind::OddStructure,
                    Location::Vertex(x),
                    format!("degree {deg} structure is not left- or right-facing"),
                )),
                FacingClass::LeftFacing => balance += 1,
                FacingClass::RightFacing => balance -= 1,
                FacingClass::Degree2 => {}
            }
            if balance < 0 {
                v.push(Violation::new(
                    ViolationKind::FacingPrefix,
                    Location::Vertex(x),
                    format!("left-facing minus right-facing = {balance}"),
                ));
            }
            if j >= 2 {
                let left_up = present[graph.vertical_index(i - 1, j - 1)];
                if forbidden_fpl_structure(x.is_even(), inc, left_up) {
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

/// Reconstructs the height function: seed `h_{i,0} = i`, propagate each row
/// rightwards across the vertical edges, then require every horizontal edge
/// to agree with the propagated heights and the result to be a valid height
/// function of `family`.
pub(crate) fn pull_back(
    graph: &GridGraph,
    present: &[bool],
    family: Family,
) -> std::result::Result<HeightFunctionMatrix, Verdict> {
    let n = graph.cols();
    let w = n + 1;
    let mut h = vec![0i64; w * w];
    for i in 0..=n {
        h[i * w] = i as i64;
        for j in 1..=n {
            let t = h[i * w + j - 1];
            let edge = present[graph.vertical_index(i, j)];
            // {t, t+1} carries an edge iff t is even, {t-1, t} iff t is odd
            h[i * w + j] = if edge == (t.rem_euclid(2) == 0) { t + 1 } else { t - 1 };
        }
    }
    let mut v = Verdict::default();
    for i in 1..=n {
        for j in 0..=n {
            let expected = horizontal_separates(h[(i - 1) * w + j], h[i * w + j]);
            let k = graph.horizontal_index(i, j);
            if present[k] != expected {
                let e = graph.edge_at(k);
                v.push(Violation::new(
                    ViolationKind::Pullback,
                    Location::Edge(e.first(), e.second()),
                    format!(
                        "edge disagrees with propagated heights {} and {}",
                        h[(i - 1) * w + j],
                        h[i * w + j]
                    ),
                ));
            }
        }
    }
    for x in HeightFunctionMatrix::check_flat(n, &h, family).into_violations() {
        v.push(Violation::new(
            ViolationKind::Pullback,
            x.at,
            format!("propagated height function: {x}"),
        ));
    }
    if !v.is_valid() {
        return Err(v);
    }
    HeightFunctionMatrix::from_flat(n, h, family).map_err(|e| Verdict::new(e.violations().to_vec()))
}

/// Horizontally adjacent heights are separated by an edge iff the smaller
/// one is even.
pub(crate) fn vertical_separates(a: i64, b: i64) -> bool {
    a.min(b).rem_euclid(2) == 0
}

/// Vertically adjacent heights are separated by an edge iff the smaller one
/// is odd.
pub(crate) fn horizontal_separates(a: i64, b: i64) -> bool {
    a.min(b).rem_euclid(2) == 1
}

impl FplConfiguration {
    pub fn new(n: usize, edges: &[Edge], family: Family) -> Result<Self> {
        let (graph, present) = edge_bitmap(n, edges)?;
        Self::from_bitmap(graph, present, family)
    }

    pub(crate) fn from_bitmap(graph: GridGraph, present: Vec<bool>, family: Family) -> Result<Self> {
        full_verdict(&graph, &present, family).into_result(format!("{family} fully packed loop"))?;
        Ok(FplConfiguration {
            n: graph.cols(),
            family,
            present,
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

    pub(crate) fn bitmap(&self) -> &[bool] {
        &self.present
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.graph().edge_index(e).is_some_and(|k| self.present[k])
    }

    /// Present edges, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let g = self.graph();
        let mut out: Vec<Edge> = self
            .present
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(k, _)| g.edge_at(k))
            .collect();
        out.sort();
        out
    }

    pub fn incidence(&self, v: Vertex) -> Incidence {
        incidence_at(&self.graph(), &self.present, v)
    }

    pub fn facing(&self, v: Vertex) -> FacingClass {
        facing_class(v.is_even(), self.incidence(v))
    }

    /// `(right-facing, left-facing)` vertex counts.
    pub fn facing_counts(&self) -> (usize, usize) {
        let g = self.graph();
        let mut counts = (0, 0);
        for v in g.interior_vertices() {
            match self.facing(v) {
                FacingClass::RightFacing => counts.0 += 1,
                FacingClass::LeftFacing => counts.1 += 1,
                _ => {}
            }
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_one_edges() -> Vec<Edge> {
        vec![Edge::vertical(0, 1), Edge::vertical(1, 1)]
    }

    #[test]
    fn order_one_is_valid_in_both_families() {
        for family in Family::ALL {
            assert!(validate_fpl(1, &order_one_edges(), family).unwrap().is_valid());
        }
    }

    #[test]
    fn facing_table() {
        let inc = |up, down, left, right| Incidence { up, down, left, right };
        assert_eq!(facing_class(true, inc(false, false, true, false)), FacingClass::RightFacing);
        assert_eq!(facing_class(true, inc(true, true, true, false)), FacingClass::LeftFacing);
        assert_eq!(facing_class(false, inc(true, true, false, true)), FacingClass::RightFacing);
        assert_eq!(facing_class(false, inc(false, false, false, true)), FacingClass::LeftFacing);
        assert_eq!(facing_class(false, inc(false, false, true, false)), FacingClass::Invalid);
        assert_eq!(facing_class(true, inc(true, true, false, true)), FacingClass::Invalid);
        assert_eq!(facing_class(true, inc(true, false, true, false)), FacingClass::Degree2);
    }

    #[test]
    fn missing_boundary_edge() {
        let v = validate_fpl(1, &[Edge::vertical(0, 1)], Family::Magog).unwrap();
        assert!(v.has(ViolationKind::Boundary));
    }

    #[test]
    fn unknown_edge_is_malformed() {
        assert!(matches!(
            validate_fpl(1, &[Edge::vertical(0, 0)], Family::Magog),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn pullback_of_order_one() {
        let f = FplConfiguration::new(1, &order_one_edges(), Family::Magog).unwrap();
        let h = pull_back(&f.graph(), f.bitmap(), Family::Magog).unwrap();
        assert_eq!(h.cells(), vec![vec![0, 1], vec![1, 0]]);
    }
}
