//! Magog matrices and their equivalent representations.
//!
//! A magog matrix is a square sign matrix satisfying the special
//! inequalities; magog matrices of order `n` are equinumerous with totally
//! symmetric self-complementary plane partitions in a `2n` box. This crate
//! provides validators for magog matrices, magog corner-sum matrices, magog
//! height-function matrices, magog fully packed loops and magog vertex
//! models, the bijections between them, the alternating-sign-matrix
//! counterparts of each, exhaustive enumerators, JSON I/O and ASCII/SVG
//! rendering.

pub mod bijection;
pub mod class;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod io;
pub mod matrix;
pub mod object;
pub mod verify;

pub use bijection::{
    corner_to_height, corner_to_matrix, fpl_to_height, fpl_to_vertex, height_to_corner,
    height_to_fpl, matrix_to_corner, vertex_to_fpl,
};
pub use class::{Family, ObjectClass, Representation};
pub use error::{Error, Location, Result, Verdict, Violation, ViolationKind};
pub use grid::{
    CornerSumMatrix, Edge, FacingClass, FplConfiguration, GridGraph, HeightFunctionMatrix,
    Vertex, VertexModel,
};
pub use matrix::{FamilyMatrix, MatrixKind, SignMatrix};
pub use object::{convert, Object};
