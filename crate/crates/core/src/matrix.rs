//! Square sign matrices, alternating sign matrices and magog matrices.
//!
//! Entries are stored 0-indexed but every public index is 1-indexed:
//! `entry(1, 1)` is the top-left entry and violation locations use the
//! same convention.

use std::fmt;

use crate::class::Family;
use crate::error::{Error, Location, Result, Verdict, Violation, ViolationKind};

/// Validity classes a sign-like matrix can be checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Sign,
    Asm,
    Magog,
}

impl From<Family> for MatrixKind {
    fn from(f: Family) -> Self {
        match f {
            Family::Asm => MatrixKind::Asm,
            Family::Magog => MatrixKind::Magog,
        }
    }
}

/// An `n x n` square sign matrix: rows and columns sum to 1, partial column
/// sums lie in {0, 1} and partial row sums are nonnegative.
///
/// The `(n+1) x (n+1)` table of rectangular prefix sums is computed once at
/// construction and backs every partial-sum query.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignMatrix {
    n: usize,
    entries: Vec<i8>,
    corner: Vec<i32>,
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SignMatrix").field("rows", &self.rows()).finish()
    }
}

fn corner_table(n: usize, entries: &[i8]) -> Vec<i32> {
    let w = n + 1;
    let mut c = vec![0i32; w * w];
    for i in 1..=n {
        for j in 1..=n {
            c[i * w + j] = entries[(i - 1) * n + (j - 1)] as i32 + c[(i - 1) * w + j]
                + c[i * w + j - 1]
                - c[(i - 1) * w + j - 1];
        }
    }
    c
}

/// Shape and alphabet checks shared by every matrix entry point.
fn parse_entries(rows: &[Vec<i64>]) -> Result<(usize, Vec<i8>)> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Malformed("matrix has no rows".into()));
    }
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!(
                "matrix is not square: row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        for (j, &x) in row.iter().enumerate() {
            if !(-1..=1).contains(&x) {
                return Err(Error::Malformed(format!(
                    "entry {x} at ({},{}) is not in {{-1, 0, 1}}",
                    i + 1,
                    j + 1
                )));
            }
            entries.push(x as i8);
        }
    }
    Ok((n, entries))
}

/// Checks the four square-sign-matrix conditions on a raw integer matrix.
///
/// Returns `Err` only for malformed input (non-square, empty, entries outside
/// {-1, 0, 1}); validity failures are reported in the [`Verdict`].
pub fn validate_sign(rows: &[Vec<i64>]) -> Result<Verdict> {
    let (n, entries) = parse_entries(rows)?;
    Ok(sign_verdict(n, &entries, &corner_table(n, &entries)))
}

fn sign_verdict(n: usize, entries: &[i8], corner: &[i32]) -> Verdict {
    let w = n + 1;
    let c = |i: usize, j: usize| corner[i * w + j];
    let mut verdict = Verdict::default();
    for i in 1..=n {
        let sum = c(i, n) - c(i - 1, n);
        if sum != 1 {
            verdict.push(Violation::new(
                ViolationKind::RowSum,
                Location::Row(i),
                format!("row sums to {sum}"),
            ));
        }
    }
    for j in 1..=n {
        let sum = c(n, j) - c(n, j - 1);
        if sum != 1 {
            verdict.push(Violation::new(
                ViolationKind::ColumnSum,
                Location::Column(j),
                format!("column sums to {sum}"),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let col = c(i, j) - c(i, j - 1);
            if col != 0 && col != 1 {
                verdict.push(Violation::new(
                    ViolationKind::ColumnPrefix,
                    Location::Cell(i, j),
                    format!("partial column sum {col}"),
                ));
            }
        }
    }
    for i in 1..=n {
        let mut running = 0i32;
        for j in 1..=n {
            running += entries[(i - 1) * n + (j - 1)] as i32;
            if running < 0 {
                verdict.push(Violation::new(
                    ViolationKind::RowPrefixNegative,
                    Location::Cell(i, j),
                    format!("partial row sum {running}"),
                ));
            }
        }
    }
    verdict
}

impl SignMatrix {
    /// Builds a square sign matrix, rejecting malformed input and any matrix
    /// that violates the sign-matrix conditions.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let (n, entries) = parse_entries(rows)?;
        let corner = corner_table(n, &entries);
        sign_verdict(n, &entries, &corner).into_result("sign matrix")?;
        Ok(SignMatrix { n, entries, corner })
    }

    /// Constructor for search code that already guarantees validity.
    pub(crate) fn from_valid_entries(n: usize, entries: Vec<i8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        let corner = corner_table(n, &entries);
        debug_assert!(sign_verdict(n, &entries, &corner).is_valid());
        SignMatrix { n, entries, corner }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        SignMatrix::from_valid_entries(n, entries)
    }

    /// Permutation matrix with a 1 at `(i, sigma[i-1])`, values 1-indexed.
    pub fn from_permutation(sigma: &[usize]) -> Result<Self> {
        let n = sigma.len();
        let mut rows = vec![vec![0i64; n]; n];
        for (i, &s) in sigma.iter().enumerate() {
            if s == 0 || s > n {
                return Err(Error::Malformed(format!("permutation value {s} out of 1..={n}")));
            }
            rows[i][s - 1] = 1;
        }
        SignMatrix::new(&rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `a_{i,j}`, 1-indexed.
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect()
    }

    /// Rectangular prefix sum `c_{i,j}`, `0 <= i, j <= n`.
    pub fn corner(&self, i: usize, j: usize) -> i64 {
        self.corner[i * (self.n + 1) + j] as i64
    }

    /// Sum of row `i` over columns `1..=j`.
    pub fn row_prefix(&self, i: usize, j: usize) -> i64 {
        self.corner(i, j) - self.corner(i - 1, j)
    }

    /// Sum of column `j` over rows `1..=i`.
    pub fn column_prefix(&self, i: usize, j: usize) -> i64 {
        self.corner(i, j) - self.corner(i, j - 1)
    }

    /// Left-hand side of the `(i,j)`-special inequality:
    /// row `i+1` through column `j`, plus column `j+1` through row `i+1`,
    /// minus column `j` through row `i`.
    pub fn special_inequality_lhs(&self, i: usize, j: usize) -> Result<i64> {
        let max = self.n.saturating_sub(2);
        if i < 1 || j < 1 || i > max || j > max {
            return Err(Error::OutOfRange { i, j, max });
        }
        Ok(self.row_prefix(i + 1, j) + self.column_prefix(i + 1, j + 1) - self.column_prefix(i, j))
    }

    pub fn magog_verdict(&self) -> Verdict {
        let mut verdict = Verdict::default();
        let max = self.n.saturating_sub(2);
        for i in 1..=max {
            for j in 1..=max {
                let lhs = self
                    .special_inequality_lhs(i, j)
                    .expect("index within special-inequality range");
                if lhs < 0 {
                    verdict.push(Violation::new(
                        ViolationKind::SpecialInequality,
                        Location::Cell(i, j),
                        format!("left-hand side {lhs}"),
                    ));
                }
            }
        }
        verdict
    }

    pub fn asm_verdict(&self) -> Verdict {
        let mut verdict = Verdict::default();
        for i in 1..=self.n {
            for j in 1..=self.n {
                let r = self.row_prefix(i, j);
                if r > 1 {
                    verdict.push(Violation::new(
                        ViolationKind::RowPrefixAboveOne,
                        Location::Cell(i, j),
                        format!("partial row sum {r}"),
                    ));
                }
            }
        }
        verdict
    }

    pub fn verdict(&self, kind: MatrixKind) -> Verdict {
        match kind {
            MatrixKind::Sign => Verdict::default(),
            MatrixKind::Asm => self.asm_verdict(),
            MatrixKind::Magog => self.magog_verdict(),
        }
    }

    pub fn is_magog(&self) -> bool {
        self.magog_verdict().is_valid()
    }

    pub fn is_asm(&self) -> bool {
        self.asm_verdict().is_valid()
    }

    pub fn minus_ones(&self) -> usize {
        self.entries.iter().filter(|&&x| x == -1).count()
    }

    /// A sign matrix without `-1` entries is a permutation matrix.
    pub fn is_permutation(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
    }

    /// `sigma[i-1] = j` where `a_{i,j} = 1`, or `None` if some entry is -1.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        if !self.is_permutation() {
            return None;
        }
        Some(
            self.entries
                .chunks(self.n)
                .map(|r| r.iter().position(|&x| x == 1).expect("row sums to 1") + 1)
                .collect(),
        )
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::ascii::integer_grid(&self.rows()))
    }
}

/// True iff `sigma` has no indices `i < k < l` with
/// `sigma[i] < sigma[l] < sigma[k]`. Brute force over all triples.
pub fn permutation_avoids_132(sigma: &[usize]) -> bool {
    let n = sigma.len();
    for i in 0..n {
        for k in i + 1..n {
            for l in k + 1..n {
                if sigma[i] < sigma[l] && sigma[l] < sigma[k] {
                    return false;
                }
            }
        }
    }
    true
}

/// 132-avoidance of a permutation matrix; errors on matrices with `-1`s.
pub fn permutation_pattern_132(m: &SignMatrix) -> Result<bool> {
    let sigma = m
        .permutation()
        .ok_or_else(|| Error::Malformed("not a permutation matrix".into()))?;
    Ok(permutation_avoids_132(&sigma))
}

/// A sign matrix tagged with the family it was validated against.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyMatrix {
    family: Family,
    matrix: SignMatrix,
}

impl FamilyMatrix {
    pub fn new(matrix: SignMatrix, family: Family) -> Result<Self> {
        let what = match family {
            Family::Asm => "alternating sign matrix",
            Family::Magog => "magog matrix",
        };
        matrix.verdict(family.into()).into_result(what)?;
        Ok(FamilyMatrix { family, matrix })
    }

    pub fn from_rows(rows: &[Vec<i64>], family: Family) -> Result<Self> {
        FamilyMatrix::new(SignMatrix::new(rows)?, family)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn matrix(&self) -> &SignMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SignMatrix {
        self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }
}
