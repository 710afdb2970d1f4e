//! Bijections along the chain
//! matrix <-> corner sums <-> heights <-> FPL <-> vertex model.
//!
//! Every map preserves the family and every output passes through the
//! validating constructor of its target type.

use crate::error::{Error, Result};
use crate::grid::fpl::{self, horizontal_separates, vertical_separates};
use crate::grid::vertex;
use crate::grid::{CornerSumMatrix, FplConfiguration, GridGraph, HeightFunctionMatrix, VertexModel};
use crate::matrix::FamilyMatrix;
use crate::SignMatrix;

/// `c_{i,j} = sum_{k<=i, l<=j} m_{k,l}`.
pub fn matrix_to_corner(m: &FamilyMatrix) -> Result<CornerSumMatrix> {
    let n = m.n();
    let a = m.matrix();
    let flat = (0..=n)
        .flat_map(|i| (0..=n).map(move |j| a.corner(i, j)))
        .collect();
    CornerSumMatrix::from_flat(n, flat, m.family())
}

/// Inclusion-exclusion: `m_{i,j} = c_{i,j} - c_{i-1,j} - c_{i,j-1} + c_{i-1,j-1}`.
pub fn corner_to_matrix(c: &CornerSumMatrix) -> Result<FamilyMatrix> {
    let n = c.n();
    let rows: Vec<Vec<i64>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| c.get(i, j) - c.get(i - 1, j) - c.get(i, j - 1) + c.get(i - 1, j - 1))
                .collect()
        })
        .collect();
    FamilyMatrix::new(SignMatrix::new(&rows)?, c.family())
}

/// `h_{i,j} = i + j - 2 c_{i,j}`.
pub fn corner_to_height(c: &CornerSumMatrix) -> Result<HeightFunctionMatrix> {
    let n = c.n();
    let w = n + 1;
    let flat = c
        .flat()
        .iter()
        .enumerate()
        .map(|(k, &x)| (k / w + k % w) as i64 - 2 * x)
        .collect();
    HeightFunctionMatrix::from_flat(n, flat, c.family())
}

/// `c_{i,j} = (i + j - h_{i,j}) / 2`.
pub fn height_to_corner(h: &HeightFunctionMatrix) -> Result<CornerSumMatrix> {
    let n = h.n();
    let w = n + 1;
    let flat = h
        .flat()
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let d = (k / w + k % w) as i64 - x;
            if d % 2 != 0 {
                return Err(Error::Internal(format!(
                    "height {x} at ({}, {}) has the wrong parity",
                    k / w,
                    k % w
                )));
            }
            Ok(d / 2)
        })
        .collect::<Result<Vec<_>>>()?;
    CornerSumMatrix::from_flat(n, flat, h.family())
}

/// Draws the edge between two heights exactly when the smaller one is even
/// (across a vertical edge) or odd (across a horizontal edge).
pub fn height_to_fpl(h: &HeightFunctionMatrix) -> Result<FplConfiguration> {
    let n = h.n();
    let graph = GridGraph::square(n);
    let mut present = vec![false; graph.num_edges()];
    for i in 0..=n {
        for j in 1..=n {
            present[graph.vertical_index(i, j)] = vertical_separates(h.get(i, j - 1), h.get(i, j));
        }
    }
    for i in 1..=n {
        for j in 0..=n {
            present[graph.horizontal_index(i, j)] =
                horizontal_separates(h.get(i - 1, j), h.get(i, j));
        }
    }
    FplConfiguration::from_bitmap(graph, present, h.family())
}

/// Inverse of [`height_to_fpl`].
pub fn fpl_to_height(f: &FplConfiguration) -> Result<HeightFunctionMatrix> {
    fpl::pull_back(&f.graph(), f.bitmap(), f.family())
        .map_err(|v| Error::invalid("fully packed loop pullback", v.into_violations()))
}

/// FPL edges point from the even endpoint, absent edges from the odd one.
pub fn fpl_to_vertex(f: &FplConfiguration) -> Result<VertexModel> {
    let graph = f.graph();
    let forward = vertex::from_fpl_bitmap(&graph, f.bitmap());
    VertexModel::from_forward(graph, forward, f.family())
}

/// Inverse of [`fpl_to_vertex`].
pub fn vertex_to_fpl(v: &VertexModel) -> Result<FplConfiguration> {
    let graph = v.graph();
    let present = vertex::to_fpl_bitmap(&graph, v.forward());
    FplConfiguration::from_bitmap(graph, present, v.family())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::Family;

    fn fm(rows: &[&[i64]], family: Family) -> FamilyMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        FamilyMatrix::from_rows(&rows, family).unwrap()
    }

    fn round_trip(m: &FamilyMatrix) {
        let c = matrix_to_corner(m).unwrap();
        let h = corner_to_height(&c).unwrap();
        let f = height_to_fpl(&h).unwrap();
        let v = fpl_to_vertex(&f).unwrap();
        assert_eq!(vertex_to_fpl(&v).unwrap(), f);
        assert_eq!(fpl_to_height(&f).unwrap(), h);
        assert_eq!(height_to_corner(&h).unwrap(), c);
        assert_eq!(&corner_to_matrix(&c).unwrap(), m);
    }

    #[test]
    fn chain_round_trips() {
        round_trip(&fm(&[&[1]], Family::Magog));
        round_trip(&fm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]], Family::Asm));
        round_trip(&fm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]], Family::Magog));
        round_trip(&fm(
            &[&[0, 0, 1, 0], &[0, 1, -1, 1], &[1, -1, 1, 0], &[0, 1, 0, 0]],
            Family::Magog,
        ));
    }

    #[test]
    fn order_one_heights() {
        let c = matrix_to_corner(&fm(&[&[1]], Family::Magog)).unwrap();
        assert_eq!(corner_to_height(&c).unwrap().cells(), vec![vec![0, 1], vec![1, 0]]);
    }
}
