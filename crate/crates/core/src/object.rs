//! A single object of any class, and conversion between representations.

use crate::bijection::*;
use crate::class::{Family, ObjectClass, Representation};
use crate::error::Result;
use crate::grid::{CornerSumMatrix, FplConfiguration, HeightFunctionMatrix, VertexModel};
use crate::matrix::FamilyMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Matrix(FamilyMatrix),
    CornerSum(CornerSumMatrix),
    Height(HeightFunctionMatrix),
    Fpl(FplConfiguration),
    Vertex(VertexModel),
}

impl Object {
    pub fn representation(&self) -> Representation {
        match self {
            Object::Matrix(_) => Representation::Matrix,
            Object::CornerSum(_) => Representation::CornerSum,
            Object::Height(_) => Representation::HeightFunction,
            Object::Fpl(_) => Representation::Fpl,
            Object::Vertex(_) => Representation::VertexModel,
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Object::Matrix(x) => x.family(),
            Object::CornerSum(x) => x.family(),
            Object::Height(x) => x.family(),
            Object::Fpl(x) => x.family(),
            Object::Vertex(x) => x.family(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Object::Matrix(x) => x.n(),
            Object::CornerSum(x) => x.n(),
            Object::Height(x) => x.n(),
            Object::Fpl(x) => x.n(),
            Object::Vertex(x) => x.n(),
        }
    }

    pub fn class(&self) -> ObjectClass {
        ObjectClass::new(self.representation(), self.family())
    }

    fn step_forward(&self) -> Result<Object> {
        Ok(match self {
            Object::Matrix(x) => Object::CornerSum(matrix_to_corner(x)?),
            Object::CornerSum(x) => Object::Height(corner_to_height(x)?),
            Object::Height(x) => Object::Fpl(height_to_fpl(x)?),
            Object::Fpl(x) => Object::Vertex(fpl_to_vertex(x)?),
            Object::Vertex(_) => self.clone(),
        })
    }

    fn step_back(&self) -> Result<Object> {
        Ok(match self {
            Object::Matrix(_) => self.clone(),
            Object::CornerSum(x) => Object::Matrix(corner_to_matrix(x)?),
            Object::Height(x) => Object::CornerSum(height_to_corner(x)?),
            Object::Fpl(x) => Object::Height(fpl_to_height(x)?),
            Object::Vertex(x) => Object::Fpl(vertex_to_fpl(x)?),
        })
    }
}

/// Converts `x` to `target` by walking the chain of bijections; the family
/// is preserved.
pub fn convert(x: &Object, target: Representation) -> Result<Object> {
    let mut cur = x.clone();
    while cur.representation().chain_index() < target.chain_index() {
        cur = cur.step_forward()?;
    }
    while cur.representation().chain_index() > target.chain_index() {
        cur = cur.step_back()?;
    }
    Ok(cur)
}

impl From<FamilyMatrix> for Object {
    fn from(x: FamilyMatrix) -> Self {
        Object::Matrix(x)
    }
}

impl From<CornerSumMatrix> for Object {
    fn from(x: CornerSumMatrix) -> Self {
        Object::CornerSum(x)
    }
}

impl From<HeightFunctionMatrix> for Object {
    fn from(x: HeightFunctionMatrix) -> Self {
        Object::Height(x)
    }
}

impl From<FplConfiguration> for Object {
    fn from(x: FplConfiguration) -> Self {
        Object::Fpl(x)
    }
}

impl From<VertexModel> for Object {
    fn from(x: VertexModel) -> Self {
        Object::Vertex(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convert_across_the_chain_and_back() {
        let m = FamilyMatrix::from_rows(&[vec![0, 1], vec![1, 0]], Family::Magog).unwrap();
        let x = Object::from(m);
        let v = convert(&x, Representation::VertexModel).unwrap();
        assert_eq!(v.class().to_string(), "magog-vertex-model");
        assert_eq!(convert(&v, Representation::Matrix).unwrap(), x);
        assert_eq!(convert(&x, Representation::Matrix).unwrap(), x);
    }
}
