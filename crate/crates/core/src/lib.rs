//! Exact calculator for connected-cover towers of the indefinite groups
//! `O(p,q)`, `U(p,q)` and `Sp(p,q)`.
//!
//! * [`abgroup`]: finitely generated abelian groups, Smith normal form and the
//!   functors `⊗`, `Hom`, `Ext`, `Tor`.
//! * [`homotopy`]: low-degree homotopy groups of the classical groups and their
//!   indefinite forms.
//! * [`cohomology`]: low-degree (co)homology of classifying spaces through the
//!   Künneth and universal-coefficient formulas, Betti series of `BSpin(n)`.
//! * [`tower`]: the symbolic tower of connected covers with its obstruction classes.
//! * [`lift`]: cohomology profiles and the lifting verdict engine.

pub mod abgroup;
pub mod cohomology;
pub mod error;
pub mod homotopy;
pub mod lift;
pub mod tower;

pub use abgroup::{FgAbGroup, GroupElement, Homomorphism, IntegerMatrix, Notation};
pub use cohomology::{ClassName, ClassRef, GradedGroupList};
pub use error::{Error, Result};
pub use homotopy::{Family, GroupDescriptor, HomotopyAnswer};
pub use lift::{ClassValue, CohomologyProfile, LiftVerdict};
pub use tower::{Tower, TowerStage, TwistKind, TwistSpec};
