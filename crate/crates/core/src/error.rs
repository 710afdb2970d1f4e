use std::fmt;

use thiserror::Error;

use crate::grid::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The input does not have the shape of the requested object at all
    /// (wrong dimensions, entries outside the alphabet, unknown edges).
    #[error("malformed input: {0}")]
    Malformed(String),
    /// The input is well formed but violates the defining conditions.
    #[error("invalid {what}: {}", join(.violations))]
    Invalid {
        what: String,
        violations: Vec<Violation>,
    },
    #[error("index ({i}, {j}) out of range 1..={max}")]
    OutOfRange { i: usize, j: usize, max: usize },
    #[error("out of range: {0}")]
    Range(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(what: impl Into<String>, violations: Vec<Violation>) -> Error {
        Error::Invalid {
            what: what.into(),
            violations,
        }
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Error::Invalid { violations, .. } => violations,
            _ => &[],
        }
    }
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Where a violation occurs. Matrix cells are 1-indexed; corner-sum and
/// height-function cells are 0-indexed; graph vertices use their `v_{i,j}`
/// labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Location {
    Row(usize),
    Column(usize),
    Cell(usize, usize),
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Row(i) => write!(f, "row {i}"),
            Location::Column(j) => write!(f, "column {j}"),
            Location::Cell(i, j) => write!(f, "({i},{j})"),
            Location::Vertex(v) => write!(f, "{v}"),
            Location::Edge(a, b) => write!(f, "{a}-{b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    RowSum,
    ColumnSum,
    ColumnPrefix,
    RowPrefixNegative,
    /// ASM only: a row prefix sum exceeds 1.
    RowPrefixAboveOne,
    SpecialInequality,
    Boundary,
    RowStep,
    ColumnStep,
    /// Columns of a corner-sum matrix must weakly increase downwards.
    ColumnDecrease,
    Degree,
    OddStructure,
    FacingPrefix,
    ForbiddenStructure,
    /// The local conditions hold but the configuration does not pull back
    /// to a valid height function.
    Pullback,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::RowSum => "row-sum",
            ViolationKind::ColumnSum => "column-sum",
            ViolationKind::ColumnPrefix => "column-prefix",
            ViolationKind::RowPrefixNegative => "row-prefix-negative",
            ViolationKind::RowPrefixAboveOne => "row-prefix-above-one",
            ViolationKind::SpecialInequality => "special-inequality",
            ViolationKind::Boundary => "boundary",
            ViolationKind::RowStep => "row-step",
            ViolationKind::ColumnStep => "column-step",
            ViolationKind::ColumnDecrease => "column-decrease",
            ViolationKind::Degree => "degree",
            ViolationKind::OddStructure => "odd-structure",
            ViolationKind::FacingPrefix => "facing-prefix",
            ViolationKind::ForbiddenStructure => "forbidden-structure",
            ViolationKind::Pullback => "pullback",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub kind: ViolationKind,
    pub at: Location,
    pub detail: String,
}

impl Violation {
    pub fn new(kind: ViolationKind, at: Location, detail: impl Into<String>) -> Self {
        Violation {
            kind,
            at,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind.as_str(), self.at)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Outcome of a validator: the complete list of violated conditions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    violations: Vec<Violation>,
}

impl Verdict {
    pub fn new(violations: Vec<Violation>) -> Self {
        Verdict { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn into_violations(self) -> Vec<Violation> {
        self.violations
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub(crate) fn extend(&mut self, other: Verdict) {
        self.violations.extend(other.violations);
    }

    /// `Ok(())` when valid, otherwise an [`Error::Invalid`] naming `what`.
    pub fn into_result(self, what: impl Into<String>) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::invalid(what, self.violations))
        }
    }
}
