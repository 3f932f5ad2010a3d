use num_bigint::BigInt;
use num_traits::Zero;

use super::element::GroupElement;
use super::group::FgAbGroup;
use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};

/// A homomorphism between groups in normal form, given by the images of the
/// source generators: column `j` holds the target coordinates of generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntegerMatrix,
}

impl Homomorphism {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntegerMatrix) -> Result<Self> {
        if matrix.rows() != target.num_generators() || matrix.cols() != source.num_generators() {
            return Err(Error::IllDefinedHomomorphism(format!(
                "{}x{} matrix cannot map {source} to {target}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        // A generator of order d must land on an element killed by d.
        for (j, d) in source.generator_orders().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let column: Vec<BigInt> = (0..matrix.rows()).map(|i| &matrix[(i, j)] * d).collect();
            let image = GroupElement::from_coords(target.clone(), column)?;
            if !image.is_zero() {
                return Err(Error::IllDefinedHomomorphism(format!(
                    "generator {j} has order {d} but its image does not"
                )));
            }
        }
        Ok(Self { source, target, matrix })
    }

    pub fn identity(group: FgAbGroup) -> Self {
        let n = group.num_generators();
        Self {
            source: group.clone(),
            target: group,
            matrix: IntegerMatrix::identity(n),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.matrix == IntegerMatrix::identity(self.source.num_generators())
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.parent() != &self.source {
            return Err(Error::IncompatibleGroups {
                left: self.source.to_string(),
                right: x.parent().to_string(),
            });
        }
        let image = self.matrix.apply(&x.coords())?;
        GroupElement::from_coords(self.target.clone(), image)
    }
}
