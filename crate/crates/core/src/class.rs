use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Which of the two sibling families an object belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Asm,
    Magog,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Asm, Family::Magog];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Asm => "asm",
            Family::Magog => "magog",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "asm" | "ice" => Ok(Family::Asm),
            "magog" => Ok(Family::Magog),
            other => Err(Error::Malformed(format!("unknown class `{other}`"))),
        }
    }
}

/// The five representations, in the order of the bijection chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Representation {
    Matrix,
    CornerSum,
    HeightFunction,
    Fpl,
    VertexModel,
}

impl Representation {
    pub const ALL: [Representation; 5] = [
        Representation::Matrix,
        Representation::CornerSum,
        Representation::HeightFunction,
        Representation::Fpl,
        Representation::VertexModel,
    ];

    /// Position along the chain matrix - corner - height - fpl - vertex.
    pub fn chain_index(self) -> usize {
        self as usize
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Representation::Matrix => "matrix",
            Representation::CornerSum => "corner-sum",
            Representation::HeightFunction => "height-function",
            Representation::Fpl => "fpl",
            Representation::VertexModel => "vertex-model",
        }
    }

    /// The `"kind"` field used in JSON documents.
    pub fn kind(self) -> &'static str {
        match self {
            Representation::Matrix => "sign-matrix",
            other => other.as_str(),
        }
    }

    pub fn from_kind(kind: &str) -> Option<Self> {
        match kind {
            "sign-matrix" | "matrix" => Some(Representation::Matrix),
            "corner-sum" => Some(Representation::CornerSum),
            "height-function" => Some(Representation::HeightFunction),
            "fpl" => Some(Representation::Fpl),
            "vertex-model" => Some(Representation::VertexModel),
            _ => None,
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Representation::from_kind(s)
            .ok_or_else(|| Error::Malformed(format!("unknown representation `{s}`")))
    }
}

/// A representation together with its family, e.g. `magog-fpl`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectClass {
    pub representation: Representation,
    pub family: Family,
}

impl ObjectClass {
    pub const fn new(representation: Representation, family: Family) -> Self {
        ObjectClass {
            representation,
            family,
        }
    }

    /// All ten classes, magog family first.
    pub fn all() -> Vec<ObjectClass> {
        [Family::Magog, Family::Asm]
            .into_iter()
            .flat_map(|f| Representation::ALL.into_iter().map(move |r| ObjectClass::new(r, f)))
            .collect()
    }
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.family, self.representation)
    }
}

impl FromStr for ObjectClass {
    type Err = Error;

    /// Accepts `magog-fpl`, `asm-height-function`, and the aliases
    /// `square-ice` / `asm-ice` for the ASM vertex model.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "square-ice" || s == "asm-ice" {
            return Ok(ObjectClass::new(Representation::VertexModel, Family::Asm));
        }
        let (family, rest) = s
            .split_once('-')
            .ok_or_else(|| Error::Malformed(format!("unknown class `{s}`")))?;
        Ok(ObjectClass::new(rest.parse()?, family.parse()?))
    }
}
