//! Finitely generated abelian groups over the integers.
//!
//! Groups are kept in invariant-factor normal form so that isomorphism is
//! plain equality. The homological functors `⊗`, `Hom`, `Ext¹` and `Tor¹`
//! are bi-additive, so they are evaluated summand by summand on the cyclic
//! decomposition with the usual closed forms.

mod element;
mod group;
mod matrix;
mod morphism;
mod snf;

pub use element::{element_add, element_is_zero, element_neg, GroupElement};
pub use group::{cokernel, direct_sum, ext, hom, tensor, tor, FgAbGroup, Notation};
pub use matrix::IntegerMatrix;
pub use morphism::Homomorphism;
pub use snf::{smith_normal_form, SmithForm};
