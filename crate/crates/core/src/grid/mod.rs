//! Grid representations: corner-sum matrices, height-function matrices,
//! the graph `G_{m,n}`, fully packed loops and vertex models.

pub(crate) mod corner;
pub(crate) mod fpl;
pub(crate) mod graph;
pub(crate) mod height;
pub(crate) mod vertex;

pub use corner::{validate_corner_sum, CornerSumMatrix};
pub use fpl::{
    facing_class, forbidden_fpl_structure, validate_fpl, validate_fpl_local, FacingClass,
    FplConfiguration, Incidence,
};
pub use graph::{alternating_boundary, domain_wall, Edge, GridGraph, Vertex};
pub use height::{validate_height_function, HeightFunctionMatrix};
pub use vertex::{
    forbidden_vertex_structure, validate_vertex_model, validate_vertex_model_local, Arrows,
    VertexModel,
};

use crate::error::{Error, Result};

/// Flattens an `(n+1) x (n+1)` integer grid, returning `n`.
pub(crate) fn square_cells(cells: &[Vec<i64>], what: &str) -> Result<(usize, Vec<i64>)> {
    let w = cells.len();
    if w < 2 {
        return Err(Error::Malformed(format!(
            "{what} must be at least 2 x 2, got {w} rows"
        )));
    }
    let mut flat = Vec::with_capacity(w * w);
    for (i, row) in cells.iter().enumerate() {
        if row.len() != w {
            return Err(Error::Malformed(format!(
                "{what} is not square: row {i} has {} cells, expected {w}",
                row.len()
            )));
        }
        flat.extend_from_slice(row);
    }
    Ok((w - 1, flat))
}

pub(crate) fn unflatten(n: usize, flat: &[i64]) -> Vec<Vec<i64>> {
    flat.chunks(n + 1).map(|r| r.to_vec()).collect()
}
