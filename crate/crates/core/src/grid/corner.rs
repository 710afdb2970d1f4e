use crate::class::Family;
use crate::error::{Location, Result, Verdict, Violation, ViolationKind};

use super::{square_cells, unflatten};

/// `(n+1) x (n+1)` corner-sum matrix `c_{i,j}`, `0 <= i, j <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CornerSumMatrix {
    n: usize,
    family: Family,
    cells: Vec<i64>,
}

/// Checks the corner-sum conditions of `family`; `Err` only for a
/// non-square or too small grid.
///
/// Shared conditions: zero first row and column, last row and column
/// `0, 1, ..., n`, row steps in {0, 1}, weakly increasing columns. ASM
/// additionally requires column steps in {0, 1}; magog requires
/// `c_{i+1,j+1} + c_{i,j-1} >= 2 c_{i,j}` for `1 <= i, j <= n-2`.
pub fn validate_corner_sum(cells: &[Vec<i64>], family: Family) -> Result<Verdict> {
    let (n, flat) = square_cells(cells, "corner-sum matrix")?;
    Ok(verdict(n, &flat, family))
}

fn verdict(n: usize, flat: &[i64], family: Family) -> Verdict {
    let w = n + 1;
    let c = |i: usize, j: usize| flat[i * w + j];
    let mut v = Verdict::default();
    for i in 0..=n {
        for j in 0..=n {
            let expected = if i == 0 || j == 0 {
                Some(0)
            } else if i == n {
                Some(j as i64)
            } else if j == n {
                Some(i as i64)
            } else {
                None
            };
            if let Some(e) = expected {
                if c(i, j) != e {
                    v.push(Violation::new(
                        ViolationKind::Boundary,
                        Location::Cell(i, j),
                        format!("expected {e}, found {}", c(i, j)),
                    ));
                }
            }
        }
    }
    for i in 1..n {
        for j in 1..=n {
            let step = c(i, j) - c(i, j - 1);
            if step != 0 && step != 1 {
                v.push(Violation::new(
                    ViolationKind::RowStep,
                    Location::Cell(i, j),
                    format!("c({i},{j}) - c({i},{}) = {step}", j - 1),
                ));
            }
        }
    }
    for i in 1..=n {
        for j in 1..n {
            let step = c(i, j) - c(i - 1, j);
            if step < 0 {
                v.push(Violation::new(
                    ViolationKind::ColumnDecrease,
                    Location::Cell(i, j),
                    format!("c({i},{j}) - c({},{j}) = {step}", i - 1),
                ));
            } else if family == Family::Asm && step > 1 {
                v.push(Violation::new(
                    ViolationKind::ColumnStep,
                    Location::Cell(i, j),
                    format!("c({i},{j}) - c({},{j}) = {step}", i - 1),
                ));
            }
        }
    }
    if family == Family::Magog {
        for i in 1..n.saturating_sub(1) {
            for j in 1..n.saturating_sub(1) {
                let lhs = c(i + 1, j + 1) + c(i, j - 1);
                let rhs = 2 * c(i, j);
                if lhs < rhs {
                    v.push(Violation::new(
                        ViolationKind::SpecialInequality,
                        Location::Cell(i, j),
                        format!("c({},{}) + c({i},{}) = {lhs} < {rhs}", i + 1, j + 1, j - 1),
                    ));
                }
            }
        }
    }
    v
}

impl CornerSumMatrix {
    pub fn new(cells: &[Vec<i64>], family: Family) -> Result<Self> {
        let (n, flat) = square_cells(cells, "corner-sum matrix")?;
        Self::from_flat(n, flat, family)
    }

    pub(crate) fn from_flat(n: usize, cells: Vec<i64>, family: Family) -> Result<Self> {
        verdict(n, &cells, family).into_result(format!("{family} corner-sum matrix"))?;
        Ok(CornerSumMatrix { n, family, cells })
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn g(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn first_figure_entry_is_magog() {
        let c = g(&[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 2], &[0, 1, 2, 3]]);
        assert!(validate_corner_sum(&c, Family::Magog).unwrap().is_valid());
        // anti-diagonal permutation matrix, so ASM as well
        assert!(validate_corner_sum(&c, Family::Asm).unwrap().is_valid());
    }

    #[test]
    fn order_one() {
        assert!(validate_corner_sum(&g(&[&[0, 0], &[0, 1]]), Family::Magog)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn permutation_132_fails_special_inequality() {
        let c = g(&[&[0, 0, 0, 0], &[0, 1, 1, 1], &[0, 1, 1, 2], &[0, 1, 2, 3]]);
        let v = validate_corner_sum(&c, Family::Magog).unwrap();
        assert_eq!(v.violations().len(), 1);
        assert_eq!(v.violations()[0].kind, ViolationKind::SpecialInequality);
        assert_eq!(v.violations()[0].at, Location::Cell(1, 1));
        assert!(validate_corner_sum(&c, Family::Asm).unwrap().is_valid());
    }

    #[test]
    fn column_step_two_is_magog_only() {
        // corner sums of [[0,0,1],[1,1,-1],[0,0,1]]
        let c = g(&[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 1, 2, 2], &[0, 1, 2, 3]]);
        assert!(validate_corner_sum(&c, Family::Magog).unwrap().is_valid());
        let v = validate_corner_sum(&c, Family::Asm).unwrap();
        assert!(v.violations().iter().all(|x| x.kind == ViolationKind::ColumnStep));
        assert!(!v.is_valid());
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            validate_corner_sum(&g(&[&[0]]), Family::Magog),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            validate_corner_sum(&g(&[&[0, 0], &[0]]), Family::Magog),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn boundary_violation_located() {
        let c = g(&[&[0, 0], &[0, 2]]);
        let v = validate_corner_sum(&c, Family::Asm).unwrap();
        assert_eq!(v.violations()[0].kind, ViolationKind::Boundary);
        assert_eq!(v.violations()[0].at, Location::Cell(1, 1));
    }
}
