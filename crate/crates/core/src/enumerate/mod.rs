//! Exhaustive enumeration, counting and refined statistics.
//!
//! Every class is generated directly from its own definition. Matrices come
//! out in row-major lexicographic order with -1 < 0 < 1; the other classes
//! come out in the order of their search, which is deterministic.

mod cells;
mod loops;
mod matrix;
mod stats;

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::class::{Family, ObjectClass, Representation};
use crate::error::{Error, Result};
use crate::grid::{CornerSumMatrix, FplConfiguration, GridGraph, HeightFunctionMatrix, VertexModel};
use crate::matrix::{FamilyMatrix, MatrixKind, SignMatrix};
use crate::object::Object;

use cells::{CellSearch, Grid};
use loops::{LoopSearch, Model};
use matrix::{first_row_order, MatrixSearch};

pub use stats::{max_minus_ones, observed_max_minus_ones, refined_stats, Distribution, Stats};

/// Largest order for which objects are streamed one by one.
pub const MAX_STREAM_ORDER: usize = 8;
/// Largest order for which a whole class is collected in memory.
pub const MAX_COLLECT_ORDER: usize = 7;
/// Largest order for the FPL and vertex-model searches.
pub const MAX_LOOP_ORDER: usize = 6;

/// Product formula `prod_{j=0}^{n-1} (3j+1)! / (n+j)!`.
pub fn count_formula(n: usize) -> BigUint {
    let fact = |k: usize| (1..=k).fold(BigUint::from(1u32), |acc, x| acc * x);
    let (mut num, mut den) = (BigUint::from(1u32), BigUint::from(1u32));
    for j in 0..n {
        num *= fact(3 * j + 1);
        den *= fact(n + j);
    }
    num / den
}

fn check_order(n: usize, representation: Representation, max: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::Range(format!("order must be at least 1, got {n}")));
    }
    let max = match representation {
        Representation::Fpl | Representation::VertexModel => max.min(MAX_LOOP_ORDER),
        _ => max,
    };
    if n > max {
        return Err(Error::ResourceLimit(format!(
            "{representation} enumeration is limited to n <= {max}, got n = {n}"
        )));
    }
    Ok(())
}

/// Outcome of a streaming enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Visit {
    /// Objects passed to the visitor.
    pub yielded: usize,
    /// FPL and vertex-model candidates that satisfy every local condition
    /// but fail the pullback.
    pub rejected: usize,
}

/// Streams the sign matrices of `kind` to `f` in canonical order. The
/// entries are row-major and 0-indexed.
pub fn visit_matrices(
    n: usize,
    kind: MatrixKind,
    f: &mut dyn FnMut(&[i8]) -> ControlFlow<()>,
) -> Result<Visit> {
    check_order(n, Representation::Matrix, MAX_STREAM_ORDER)?;
    let mut yielded = 0;
    let _ = MatrixSearch::new(n, kind).run(&mut |e| {
        yielded += 1;
        f(e)
    });
    Ok(Visit { yielded, rejected: 0 })
}

fn matrices(n: usize, kind: MatrixKind) -> Result<Vec<SignMatrix>> {
    check_order(n, Representation::Matrix, MAX_COLLECT_ORDER)?;
    let parts: Vec<Vec<SignMatrix>> = first_row_order(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let _ = MatrixSearch::new(n, kind).run_from(first, &mut |e| {
                out.push(SignMatrix::from_valid_entries(n, e.to_vec()));
                ControlFlow::Continue(())
            });
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

pub fn enumerate_sign(n: usize) -> Result<Vec<SignMatrix>> {
    matrices(n, MatrixKind::Sign)
}

pub fn enumerate_asm(n: usize) -> Result<Vec<FamilyMatrix>> {
    enumerate_family_matrices(n, Family::Asm)
}

pub fn enumerate_magog(n: usize) -> Result<Vec<FamilyMatrix>> {
    enumerate_family_matrices(n, Family::Magog)
}

fn enumerate_family_matrices(n: usize, family: Family) -> Result<Vec<FamilyMatrix>> {
    matrices(n, family.into())?
        .into_iter()
        .map(|m| FamilyMatrix::new(m, family))
        .collect()
}

/// Counts matrices of `kind`, splitting the search by first row.
pub fn count_matrices(n: usize, kind: MatrixKind) -> Result<BigUint> {
    check_order(n, Representation::Matrix, MAX_STREAM_ORDER)?;
    let total: u64 = first_row_order(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|first| {
            let mut k = 0u64;
            let _ = MatrixSearch::new(n, kind).run_from(first, &mut |_| {
                k += 1;
                ControlFlow::Continue(())
            });
            k
        })
        .sum();
    Ok(BigUint::from(total))
}

/// Streams every object of `class` to `f`, each built through its
/// validating constructor. Stops early when `f` breaks.
pub fn visit_class(
    n: usize,
    class: ObjectClass,
    f: &mut dyn FnMut(Object) -> ControlFlow<()>,
) -> Result<Visit> {
    let ObjectClass { representation, family } = class;
    check_order(n, representation, MAX_STREAM_ORDER)?;
    let mut visit = Visit::default();
    let mut failure: Option<Error> = None;
    let mut emit = |x: Result<Object>, visit: &mut Visit| match x {
        Ok(x) => {
            visit.yielded += 1;
            f(x)
        }
        Err(e) => {
            failure = Some(Error::Internal(format!("search produced an invalid object: {e}")));
            ControlFlow::Break(())
        }
    };
    match representation {
        Representation::Matrix => {
            let _ = MatrixSearch::new(n, family.into()).run(&mut |e| {
                let m = FamilyMatrix::new(SignMatrix::from_valid_entries(n, e.to_vec()), family);
                emit(m.map(Object::from), &mut visit)
            });
        }
        Representation::CornerSum | Representation::HeightFunction => {
            let grid = if representation == Representation::CornerSum { Grid::Corner } else { Grid::Height };
            let _ = CellSearch::new(n, grid, family).run(&mut |c| {
                let x = match grid {
                    Grid::Corner => CornerSumMatrix::from_flat(n, c.to_vec(), family).map(Object::from),
                    Grid::Height => HeightFunctionMatrix::from_flat(n, c.to_vec(), family).map(Object::from),
                };
                emit(x, &mut visit)
            });
        }
        Representation::Fpl | Representation::VertexModel => {
            let model = if representation == Representation::Fpl { Model::Fpl } else { Model::Vertex };
            let mut search = LoopSearch::new(n, model, family);
            let graph: GridGraph = search.graph();
            let _ = search.run(&mut |bits| {
                let x = match model {
                    Model::Fpl => FplConfiguration::from_bitmap(graph, bits.to_vec(), family).map(Object::from),
                    Model::Vertex => VertexModel::from_forward(graph, bits.to_vec(), family).map(Object::from),
                };
                emit(x, &mut visit)
            });
            visit.rejected = search.rejected;
        }
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(visit),
    }
}

/// Collects every object of `class`. Matrix classes are searched in
/// parallel and merged in canonical order.
pub fn enumerate_class(n: usize, class: ObjectClass) -> Result<Vec<Object>> {
    check_order(n, class.representation, MAX_COLLECT_ORDER)?;
    if class.representation == Representation::Matrix {
        return Ok(enumerate_family_matrices(n, class.family)?
            .into_iter()
            .map(Object::from)
            .collect());
    }
    let mut out = Vec::new();
    visit_class(n, class, &mut |x| {
        out.push(x);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Number of objects of `class`.
pub fn count_class(n: usize, class: ObjectClass) -> Result<BigUint> {
    if class.representation == Representation::Matrix {
        return count_matrices(n, class.family.into());
    }
    let visit = visit_class(n, class, &mut |_| ControlFlow::Continue(()))?;
    Ok(BigUint::from(visit.yielded))
}

/// Summary of one enumeration run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub n: usize,
    pub class: ObjectClass,
    pub count: BigUint,
    pub elapsed: Duration,
    pub stats: Option<Stats>,
}

impl EnumerationReport {
    pub fn new(n: usize, class: ObjectClass, count: BigUint, elapsed: Duration) -> Self {
        EnumerationReport { n, class, count, elapsed, stats: None }
    }

    /// Counts `class` and, for magog matrices, attaches refined statistics.
    pub fn run(n: usize, class: ObjectClass) -> Result<Self> {
        let start = Instant::now();
        let count = count_class(n, class)?;
        let stats = if class == ObjectClass::new(Representation::Matrix, Family::Magog) {
            Some(refined_stats(n)?)
        } else {
            None
        };
        Ok(EnumerationReport { n, class, count, elapsed: start.elapsed(), stats })
    }
}
