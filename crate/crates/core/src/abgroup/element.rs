use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::group::{FgAbGroup, Notation};
use crate::error::{Error, Result};

/// An element of an [`FgAbGroup`] in normal-form coordinates: free coordinates
/// first, then torsion residues reduced into `0 ≤ x < d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    parent: FgAbGroup,
    free: Vec<BigInt>,
    torsion: Vec<BigInt>,
}

impl GroupElement {
    pub fn new(parent: FgAbGroup, free: Vec<BigInt>, torsion: Vec<BigInt>) -> Result<Self> {
        if free.len() != parent.rank() || torsion.len() != parent.invariant_factors().len() {
            return Err(Error::ShapeMismatch {
                line: None,
                group: parent.to_string(),
                expected: parent.num_generators(),
                found: free.len() + torsion.len(),
            });
        }
        let torsion = torsion
            .into_iter()
            .zip(parent.invariant_factors())
            .map(|(x, d)| x.mod_floor(d))
            .collect();
        Ok(Self { parent, free, torsion })
    }

    /// Builds an element from a flat coordinate list (free coordinates, then torsion).
    pub fn from_coords(parent: FgAbGroup, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != parent.num_generators() {
            return Err(Error::ShapeMismatch {
                line: None,
                group: parent.to_string(),
                expected: parent.num_generators(),
                found: coords.len(),
            });
        }
        let mut free = coords;
        let torsion = free.split_off(parent.rank());
        Self::new(parent, free, torsion)
    }

    pub fn from_i64(parent: FgAbGroup, coords: &[i64]) -> Result<Self> {
        Self::from_coords(parent, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(parent: FgAbGroup) -> Self {
        let free = vec![BigInt::zero(); parent.rank()];
        let torsion = vec![BigInt::zero(); parent.invariant_factors().len()];
        Self { parent, free, torsion }
    }

    pub fn parent(&self) -> &FgAbGroup {
        &self.parent
    }

    pub fn free_coords(&self) -> &[BigInt] {
        &self.free
    }

    pub fn torsion_coords(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn coords(&self) -> Vec<BigInt> {
        self.free.iter().chain(&self.torsion).cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }

    fn check_same_parent(&self, other: &GroupElement) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::IncompatibleGroups {
                left: self.parent.to_string(),
                right: other.parent.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same_parent(other)?;
        let free = self.free.iter().zip(&other.free).map(|(a, b)| a + b).collect();
        let torsion = self.torsion.iter().zip(&other.torsion).map(|(a, b)| a + b).collect();
        Self::new(self.parent.clone(), free, torsion)
    }

    pub fn neg(&self) -> GroupElement {
        let free = self.free.iter().map(|a| -a).collect();
        let torsion = self.torsion.iter().map(|a| -a).collect();
        Self::new(self.parent.clone(), free, torsion).expect("shape preserved")
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.add(&other.neg())
    }

    pub fn render(&self, notation: Notation) -> String {
        let coords: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        format!("({}) in {}", coords.join(", "), self.parent.render(notation))
    }
}

/// Prints the coordinate tuple only, e.g. `(3, 1)`.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        write!(f, "({})", coords.join(", "))
    }
}

pub fn element_add(x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
    x.add(y)
}

pub fn element_neg(x: &GroupElement) -> GroupElement {
    x.neg()
}

pub fn element_is_zero(x: &GroupElement) -> bool {
    x.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(s: &str) -> FgAbGroup {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_in_free_group() {
        let x = GroupElement::from_i64(g("Z^2"), &[3, 5]).unwrap();
        let y = GroupElement::from_i64(g("Z^2"), &[-3, -5]).unwrap();
        let s = element_add(&x, &y).unwrap();
        assert!(element_is_zero(&s));
        assert_eq!(s.to_string(), "(0, 0)");
    }

    #[test]
    fn mod_two() {
        let one = GroupElement::from_i64(g("Z/2"), &[1]).unwrap();
        assert!(one.add(&one).unwrap().is_zero());
    }

    #[test]
    fn mixed_reduction() {
        // ℤ/4 × ℤ in normal form is ℤ × ℤ/4: coordinates are (free, torsion).
        let x = GroupElement::new(g("Z/4 x Z"), vec![2.into()], vec![3.into()]).unwrap();
        let y = GroupElement::new(g("Z/4 x Z"), vec![(-2).into()], vec![2.into()]).unwrap();
        let s = x.add(&y).unwrap();
        assert_eq!(s.torsion_coords(), &[BigInt::from(1)]);
        assert_eq!(s.free_coords(), &[BigInt::from(0)]);
    }

    #[test]
    fn parent_mismatch() {
        let x = GroupElement::from_i64(g("Z"), &[1]).unwrap();
        let y = GroupElement::from_i64(g("Z/2"), &[1]).unwrap();
        let err = x.add(&y).unwrap_err();
        assert!(err.to_string().starts_with("incompatible groups"));
    }

    #[test]
    fn shape_checked() {
        assert!(GroupElement::from_i64(g("Z"), &[1, 2]).is_err());
        assert!(GroupElement::from_i64(g("0"), &[]).unwrap().is_zero());
        assert_eq!(
            GroupElement::from_i64(g("Z/3"), &[-1]).unwrap().torsion_coords(),
            &[BigInt::from(2)]
        );
    }

    fn arb_element(parent: FgAbGroup) -> impl Strategy<Value = GroupElement> {
        proptest::collection::vec(-50i64..50, parent.num_generators())
            .prop_map(move |c| GroupElement::from_i64(parent.clone(), &c).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(
            (x, y, z) in Just(FgAbGroup::from_cyclic_orders([0, 0, 2, 12].map(BigInt::from)))
                .prop_flat_map(|p| (arb_element(p.clone()), arb_element(p.clone()), arb_element(p)))
        ) {
            prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
            prop_assert_eq!(x.add(&y).unwrap().add(&z).unwrap(), x.add(&y.add(&z).unwrap()).unwrap());
            prop_assert!(x.add(&x.neg()).unwrap().is_zero());
        }
    }
}
