//! Row-major backtracking over sign matrices.
//!
//! Entries are tried in the order -1 < 0 < 1. Column prefixes stay in
//! {0, 1}, so each cell has at most two candidates; the last row is forced.

use std::ops::ControlFlow;

use crate::matrix::MatrixKind;

/// Columns of the first-row 1 in canonical order: `e_n` sorts first.
pub(crate) fn first_row_order(n: usize) -> impl Iterator<Item = usize> {
    (0..n).rev()
}

pub(crate) struct MatrixSearch {
    n: usize,
    kind: MatrixKind,
    entries: Vec<i8>,
    colp: Vec<i8>,
}

impl MatrixSearch {
    pub(crate) fn new(n: usize, kind: MatrixKind) -> Self {
        MatrixSearch {
            n,
            kind,
            entries: vec![0; n * n],
            colp: vec![0; n],
        }
    }

    /// Visits every matrix whose first row has its 1 in column `first`
    /// (0-indexed).
    pub(crate) fn run_from(
        &mut self,
        first: usize,
        sink: &mut dyn FnMut(&[i8]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = self.n;
        self.entries.iter_mut().for_each(|x| *x = 0);
        self.colp.iter_mut().for_each(|x| *x = 0);
        self.entries[first] = 1;
        self.colp[first] = 1;
        if n == 1 {
            return sink(&self.entries);
        }
        self.cell(n, 0, sink)
    }

    pub(crate) fn run(&mut self, sink: &mut dyn FnMut(&[i8]) -> ControlFlow<()>) -> ControlFlow<()> {
        for first in first_row_order(self.n) {
            self.run_from(first, sink)?;
        }
        ControlFlow::Continue(())
    }

    fn cell(
        &mut self,
        pos: usize,
        r: i8,
        sink: &mut dyn FnMut(&[i8]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = self.n;
        if pos == (n - 1) * n {
            return self.last_row(sink);
        }
        let (ri, cj) = (pos / n, pos % n);
        let candidates: [i8; 2] = if self.colp[cj] == 0 { [0, 1] } else { [-1, 0] };
        for x in candidates {
            let r2 = r + x;
            if r2 < 0 || (self.kind == MatrixKind::Asm && r2 > 1) {
                continue;
            }
            if !self.completable(cj, r2) {
                continue;
            }
            if self.kind == MatrixKind::Magog && (1..=n - 2).contains(&ri) && (1..=n - 2).contains(&cj) {
                // row prefix before this cell, plus the new column prefix
                // here, minus the previous column's prefix through the
                // row above
                let above_left = self.colp[cj - 1] - self.entries[pos - 1];
                if r + self.colp[cj] + x - above_left < 0 {
                    continue;
                }
            }
            self.entries[pos] = x;
            self.colp[cj] += x;
            let next_r = if cj == n - 1 { 0 } else { r2 };
            let flow = self.cell(pos + 1, next_r, sink);
            self.colp[cj] -= x;
            self.entries[pos] = 0;
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Whether the row can still reach sum 1 after placing column `cj` with
    /// running sum `r`.
    fn completable(&self, cj: usize, r: i8) -> bool {
        let rest = &self.colp[cj + 1..];
        let zeros = rest.iter().filter(|&&c| c == 0).count() as i8;
        let ones = rest.len() as i8 - zeros;
        let need = 1 - r;
        -ones <= need && need <= zeros
    }

    fn last_row(&mut self, sink: &mut dyn FnMut(&[i8]) -> ControlFlow<()>) -> ControlFlow<()> {
        let n = self.n;
        let base = (n - 1) * n;
        for j in 0..n {
            self.entries[base + j] = 1 - self.colp[j];
        }
        let flow = sink(&self.entries);
        for j in 0..n {
            self.entries[base + j] = 0;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, kind: MatrixKind) -> usize {
        let mut k = 0;
        let _ = MatrixSearch::new(n, kind).run(&mut |_| {
            k += 1;
            ControlFlow::Continue(())
        });
        k
    }

    #[test]
    fn small_counts() {
        assert_eq!((1..=5).map(|n| count(n, MatrixKind::Magog)).collect::<Vec<_>>(), [1, 2, 7, 42, 429]);
        assert_eq!((1..=5).map(|n| count(n, MatrixKind::Asm)).collect::<Vec<_>>(), [1, 2, 7, 42, 429]);
        assert_eq!(count(2, MatrixKind::Sign), 2);
    }

    #[test]
    fn order_is_lexicographic() {
        let mut seen: Vec<Vec<i8>> = Vec::new();
        let _ = MatrixSearch::new(4, MatrixKind::Sign).run(&mut |e| {
            seen.push(e.to_vec());
            ControlFlow::Continue(())
        });
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }
}
