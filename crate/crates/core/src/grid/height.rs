use crate::class::Family;
use crate::error::{Location, Result, Verdict, Violation, ViolationKind};

use super::{square_cells, unflatten};

/// `(n+1) x (n+1)` height-function matrix `h_{i,j}`, `0 <= i, j <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeightFunctionMatrix {
    n: usize,
    family: Family,
    cells: Vec<i64>,
}

/// Checks the height-function conditions of `family`; `Err` only for a
/// malformed grid.
///
/// Both families: first row and column `0..n`, last row and column
/// `n..0`, horizontal neighbours differ by exactly 1. ASM: vertical steps
/// are `+-1`. Magog: vertical steps `h_{i,j} - h_{i-1,j}` lie in
/// `{1, -1, -3, ...}` and `h_{i+1,j+1} + h_{i,j-1} <= 2 h_{i,j} + 1` for
/// `1 <= i, j <= n-2`.
pub fn validate_height_function(cells: &[Vec<i64>], family: Family) -> Result<Verdict> {
    let (n, flat) = square_cells(cells, "height-function matrix")?;
    Ok(verdict(n, &flat, family))
}

/// Whether `step = h_{i,j} - h_{i-1,j}` is allowed in `family`.
pub(crate) fn vertical_step_ok(step: i64, family: Family) -> bool {
    match family {
        Family::Asm => step == 1 || step == -1,
        Family::Magog => step <= 1 && step.rem_euclid(2) == 1,
    }
}

fn verdict(n: usize, flat: &[i64], family: Family) -> Verdict {
    let w = n + 1;
    let h = |i: usize, j: usize| flat[i * w + j];
    let mut v = Verdict::default();
    for i in 0..=n {
        for j in 0..=n {
            let expected = if i == 0 {
                Some(j as i64)
            } else if j == 0 {
                Some(i as i64)
            } else if i == n {
                Some((n - j) as i64)
            } else if j == n {
                Some((n - i) as i64)
            } else {
                None
            };
            if let Some(e) = expected {
                if h(i, j) != e {
                    v.push(Violation::new(
                        ViolationKind::Boundary,
                        Location::Cell(i, j),
                        format!("expected {e}, found {}", h(i, j)),
                    ));
                }
            }
        }
    }
    for i in 1..n {
        for j in 1..=n {
            let step = h(i, j) - h(i, j - 1);
            if step.abs() != 1 {
                v.push(Violation::new(
                    ViolationKind::RowStep,
                    Location::Cell(i, j),
                    format!("h({i},{j}) - h({i},{}) = {step}", j - 1),
                ));
            }
        }
    }
    for i in 1..=n {
        for j in 1..n {
            let step = h(i, j) - h(i - 1, j);
            if !vertical_step_ok(step, family) {
                v.push(Violation::new(
                    ViolationKind::ColumnStep,
                    Location::Cell(i, j),
                    format!("h({i},{j}) - h({},{j}) = {step}", i - 1),
                ));
            }
        }
    }
    if family == Family::Magog {
        for i in 1..n.saturating_sub(1) {
            for j in 1..n.saturating_sub(1) {
                let lhs = h(i + 1, j + 1) + h(i, j - 1);
                let rhs = 2 * h(i, j) + 1;
                if lhs > rhs {
                    v.push(Violation::new(
                        ViolationKind::SpecialInequality,
                        Location::Cell(i, j),
                        format!("h({},{}) + h({i},{}) = {lhs} > {rhs}", i + 1, j + 1, j - 1),
                    ));
                }
            }
        }
    }
    v
}

impl HeightFunctionMatrix {
    pub fn new(cells: &[Vec<i64>], family: Family) -> Result<Self> {
        let (n, flat) = square_cells(cells, "height-function matrix")?;
        Self::from_flat(n, flat, family)
    }

    pub(crate) fn from_flat(n: usize, cells: Vec<i64>, family: Family) -> Result<Self> {
        verdict(n, &cells, family).into_result(format!("{family} height-function matrix"))?;
        Ok(HeightFunctionMatrix { n, family, cells })
    }

    pub(crate) fn check_flat(n: usize, cells: &[i64], family: Family) -> Verdict {
        verdict(n, cells, family)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cells[i * (self.n + 1) + j]
    }

    pub fn cells(&self) -> Vec<Vec<i64>> {
        unflatten(self.n, &self.cells)
    }

    pub(crate) fn flat(&self) -> &[i64] {
        &self.cells
    }
}
