//! Refined statistics over magog matrices.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::Result;
use crate::matrix::MatrixKind;

use super::visit_matrices;

/// Value -> number of matrices.
pub type Distribution = BTreeMap<usize, u64>;

/// Statistic name -> distribution.
pub type Stats = BTreeMap<String, Distribution>;

/// `floor((n-1)/2) * ceil((n-1)/2)`.
pub fn max_minus_ones(n: usize) -> usize {
    let m = n.saturating_sub(1);
    (m / 2) * m.div_ceil(2)
}

pub fn observed_max_minus_ones(n: usize) -> Result<usize> {
    let mut best = 0;
    visit_matrices(n, MatrixKind::Magog, &mut |e| {
        best = best.max(e.iter().filter(|&&x| x == -1).count());
        ControlFlow::Continue(())
    })?;
    Ok(best)
}

/// Distributions over all magog matrices of order `n`:
///
/// * `first_row`, `last_row`: column of the 1 in that row,
/// * `first_column`, `last_column`: row of the topmost 1 in that column,
/// * `minus_ones`: number of -1 entries.
///
/// Positions are 1-indexed. The last column is the only one of the four
/// lines that can hold more than one 1.
pub fn refined_stats(n: usize) -> Result<Stats> {
    let keys = ["first_row", "last_row", "first_column", "last_column", "minus_ones"];
    let mut d: [Distribution; 5] = Default::default();
    visit_matrices(n, MatrixKind::Magog, &mut |e| {
        let at = |i: usize, j: usize| e[i * n + j];
        let in_row = |i: usize| (0..n).find(|&j| at(i, j) == 1).map_or(0, |j| j + 1);
        let in_col = |j: usize| (0..n).find(|&i| at(i, j) == 1).map_or(0, |i| i + 1);
        let values = [
            in_row(0),
            in_row(n - 1),
            in_col(0),
            in_col(n - 1),
            e.iter().filter(|&&x| x == -1).count(),
        ];
        for (dist, v) in d.iter_mut().zip(values) {
            *dist.entry(v).or_default() += 1;
        }
        ControlFlow::Continue(())
    })?;
    Ok(keys.iter().map(|k| k.to_string()).zip(d).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula() {
        let v: Vec<_> = (1..=7).map(max_minus_ones).collect();
        assert_eq!(v, [0, 0, 1, 2, 4, 6, 9]);
    }

    #[test]
    fn order_one_is_trivial() {
        let s = refined_stats(1).unwrap();
        assert_eq!(s.len(), 5);
        for (k, d) in &s {
            let expected = if k == "minus_ones" { 0 } else { 1 };
            assert_eq!(d, &Distribution::from([(expected, 1)]), "{k}");
        }
    }

    #[test]
    fn order_three_minus_ones() {
        let s = refined_stats(3).unwrap();
        assert_eq!(s["minus_ones"], Distribution::from([(0, 5), (1, 2)]));
    }

    #[test]
    fn distributions_sum_to_count() {
        for d in refined_stats(4).unwrap().values() {
            assert_eq!(d.values().sum::<u64>(), 42);
        }
    }
}
