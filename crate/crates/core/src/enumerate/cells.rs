//! Direct searches over corner-sum and height-function matrices.
//!
//! Interior cells are filled row-major. Each cell differs from its left
//! neighbour by one of two steps, and every condition is tested as soon as
//! its last cell is placed.

use std::ops::ControlFlow;

use crate::class::Family;
use crate::grid::height::vertical_step_ok;

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Grid {
    Corner,
    Height,
}

pub(crate) struct CellSearch {
    n: usize,
    w: usize,
    grid: Grid,
    family: Family,
    cells: Vec<i64>,
}

impl CellSearch {
    pub(crate) fn new(n: usize, grid: Grid, family: Family) -> Self {
        let w = n + 1;
        let mut cells = vec![0i64; w * w];
        for k in 0..=n {
            let (a, b) = match grid {
                // c_{0,k} = c_{k,0} = 0, c_{n,k} = k, c_{k,n} = k
                Grid::Corner => ((0, 0), (k as i64, k as i64)),
                // h_{0,k} = k, h_{k,0} = k, h_{n,k} = n-k, h_{k,n} = n-k
                Grid::Height => (
                    (k as i64, k as i64),
                    ((n - k) as i64, (n - k) as i64),
                ),
            };
            cells[k] = a.0;
            cells[k * w] = a.1;
            cells[n * w + k] = b.0;
            cells[k * w + n] = b.1;
        }
        CellSearch { n, w, grid, family, cells }
    }

    pub(crate) fn run(&mut self, sink: &mut dyn FnMut(&[i64]) -> ControlFlow<()>) -> ControlFlow<()> {
        self.place(1, 1, sink)
    }

    fn at(&self, i: usize, j: usize) -> i64 {
        self.cells[i * self.w + j]
    }

    fn row_ok(&self, left: i64, right: i64) -> bool {
        let d = right - left;
        match self.grid {
            Grid::Corner => d == 0 || d == 1,
            Grid::Height => d == 1 || d == -1,
        }
    }

    fn column_ok(&self, above: i64, below: i64) -> bool {
        let d = below - above;
        match (self.grid, self.family) {
            (Grid::Corner, Family::Asm) => d == 0 || d == 1,
            (Grid::Corner, Family::Magog) => d >= 0,
            (Grid::Height, f) => vertical_step_ok(d, f),
        }
    }

    fn special_ok(&self, i: usize, j: usize) -> bool {
        let lhs = self.at(i + 1, j + 1) + self.at(i, j - 1);
        match self.grid {
            Grid::Corner => lhs >= 2 * self.at(i, j),
            Grid::Height => lhs <= 2 * self.at(i, j) + 1,
        }
    }

    fn fits(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        let x = self.at(i, j);
        if !self.column_ok(self.at(i - 1, j), x) {
            return false;
        }
        if i == n - 1 && !self.column_ok(x, self.at(n, j)) {
            return false;
        }
        if j == n - 1 && !self.row_ok(x, self.at(i, n)) {
            return false;
        }
        if self.family == Family::Magog && i >= 2 && j >= 2 && !self.special_ok(i - 1, j - 1) {
            return false;
        }
        true
    }

    fn place(
        &mut self,
        i: usize,
        j: usize,
        sink: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = self.n;
        if i == n {
            return sink(&self.cells);
        }
        let left = self.at(i, j - 1);
        let steps: [i64; 2] = match self.grid {
            Grid::Corner => [0, 1],
            Grid::Height => [-1, 1],
        };
        let (ni, nj) = if j == n - 1 { (i + 1, 1) } else { (i, j + 1) };
        for s in steps {
            self.cells[i * self.w + j] = left + s;
            if self.fits(i, j) {
                self.place(ni, nj, sink)?;
            }
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, grid: Grid, family: Family) -> usize {
        let mut k = 0;
        let _ = CellSearch::new(n, grid, family).run(&mut |_| {
            k += 1;
            ControlFlow::Continue(())
        });
        k
    }

    #[test]
    fn small_counts() {
        for grid in [Grid::Corner, Grid::Height] {
            for family in Family::ALL {
                let counts: Vec<_> = (1..=5).map(|n| count(n, grid, family)).collect();
                assert_eq!(counts, [1, 2, 7, 42, 429]);
            }
        }
    }
}
