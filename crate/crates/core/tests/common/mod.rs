//! Order-3 objects as drawn in the paper's figures, in figure order.

#![allow(dead_code)]

use magogkit::{Edge, Vertex};

pub const CORNER_SUMS: [[[i64; 4]; 4]; 7] = [
    [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 0, 1, 1], [0, 0, 1, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 2, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 2, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 1, 1, 1], [0, 1, 2, 2], [0, 1, 2, 3]],
];

pub const HEIGHTS: [[[i64; 4]; 4]; 7] = [
    [[0, 1, 2, 3], [1, 2, 3, 2], [2, 3, 2, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 2, 3, 2], [2, 1, 2, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 2, 1, 2], [2, 3, 2, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 2, 1, 2], [2, 1, 2, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 2, 3, 2], [2, 1, 0, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 2, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]],
];

/// Edges `((i, j), (i2, j2))` of each drawn loop configuration.
pub const FPLS: [&[((usize, usize), (usize, usize))]; 7] = [
    &[((0, 1), (1, 1)), ((0, 3), (1, 3)), ((1, 1), (1, 2)), ((1, 2), (2, 2)), ((1, 3), (2, 3)), ((2, 0), (2, 1)), ((2, 1), (3, 1)), ((2, 2), (3, 2)), ((2, 3), (2, 4)), ((3, 1), (4, 1)), ((3, 2), (3, 3)), ((3, 3), (4, 3))],
    &[((0, 1), (1, 1)), ((0, 3), (1, 3)), ((1, 1), (1, 2)), ((1, 2), (2, 2)), ((1, 3), (2, 3)), ((2, 0), (2, 1)), ((2, 1), (2, 2)), ((2, 3), (2, 4)), ((3, 1), (3, 2)), ((3, 1), (4, 1)), ((3, 2), (3, 3)), ((3, 3), (4, 3))],
    &[((0, 1), (1, 1)), ((0, 3), (1, 3)), ((1, 1), (1, 2)), ((1, 2), (1, 3)), ((2, 0), (2, 1)), ((2, 1), (3, 1)), ((2, 2), (2, 3)), ((2, 2), (3, 2)), ((2, 3), (2, 4)), ((3, 1), (4, 1)), ((3, 2), (3, 3)), ((3, 3), (4, 3))],
    &[((0, 1), (1, 1)), ((0, 3), (1, 3)), ((1, 1), (1, 2)), ((1, 2), (1, 3)), ((2, 0), (2, 1)), ((2, 1), (2, 2)), ((2, 2), (2, 3)), ((2, 3), (2, 4)), ((3, 1), (3, 2)), ((3, 1), (4, 1)), ((3, 2), (3, 3)), ((3, 3), (4, 3))],
    &[((0, 1), (1, 1)), ((0, 3), (1, 3)), ((1, 1), (1, 2)), ((1, 2), (2, 2)), ((1, 3), (2, 3)), ((2, 0), (2, 1)), ((2, 1), (2, 2)), ((2, 2), (3, 2)), ((2, 3), (2, 4)), ((2, 3), (3, 3)), ((3, 1), (3, 2)), ((3, 1), (4, 1)), ((3, 3), (4, 3))],
    &[((0, 1), (1, 1)), ((0, 3), (1, 3)), ((1, 1), (1, 2)), ((1, 2), (1, 3)), ((2, 0), (2, 1)), ((2, 1), (2, 2)), ((2, 2), (3, 2)), ((2, 3), (2, 4)), ((2, 3), (3, 3)), ((3, 1), (3, 2)), ((3, 1), (4, 1)), ((3, 3), (4, 3))],
    &[((0, 1), (1, 1)), ((0, 3), (1, 3)), ((1, 1), (2, 1)), ((1, 2), (1, 3)), ((1, 2), (2, 2)), ((2, 0), (2, 1)), ((2, 2), (3, 2)), ((2, 3), (2, 4)), ((2, 3), (3, 3)), ((3, 1), (3, 2)), ((3, 1), (4, 1)), ((3, 3), (4, 3))],
];

pub fn grid(rows: &[[i64; 4]; 4]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

pub fn edges(fig: &[((usize, usize), (usize, usize))]) -> Vec<Edge> {
    fig.iter()
        .map(|&((a, b), (c, d))| Edge::between(Vertex::new(a, b), Vertex::new(c, d)).expect("adjacent"))
        .collect()
}
