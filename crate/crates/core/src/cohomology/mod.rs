//! Low-degree (co)homology of classifying spaces.
//!
//! Integral homology of `BSO(n)` (through degree 2) and `BSpin(n)` (through
//! degree 4) is tabulated; everything else is derived with the Künneth formula
//! for products and the universal-coefficient formula
//! `Hⁿ(X; A) ≅ Hom(Hₙ(X), A) ⊕ Ext(Hₙ₋₁(X), A)`.
//! Nothing past the tabulated degrees is extrapolated.

mod classes;
mod ring;
mod series;

pub use classes::{ClassName, ClassRef};
pub use ring::{ring_generators, RingFamily, RingPresentation};
pub use series::{betti_bspin, betti_series, betti_weights};

use crate::abgroup::{ext, hom, tensor, tor, FgAbGroup};
use crate::error::{Error, Result};

/// Integral homology groups in degrees `0..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGroupList {
    groups: Vec<FgAbGroup>,
}

impl GradedGroupList {
    /// Groups in degree order starting at 0. Panics on an empty list.
    pub fn new(groups: Vec<FgAbGroup>) -> Self {
        assert!(!groups.is_empty(), "a graded list covers at least degree 0");
        Self { groups }
    }

    /// All groups trivial through `max_degree`.
    pub fn trivial(max_degree: usize) -> Self {
        Self::new(vec![FgAbGroup::trivial(); max_degree + 1])
    }

    pub fn max_degree(&self) -> usize {
        self.groups.len() - 1
    }

    pub fn get(&self, k: usize) -> Result<&FgAbGroup> {
        self.groups.get(k).ok_or(Error::InsufficientDegrees {
            needed: k,
            available: self.max_degree(),
        })
    }

    fn require(&self, k: usize) -> Result<()> {
        self.get(k).map(|_| ())
    }
}

pub const BSO_MAX_DEGREE: usize = 2;
pub const BSPIN_MAX_DEGREE: usize = 4;

/// `H_k(BSO(n); ℤ)` for `k ≤ 2`.
pub fn homology_bso(n: u32, k: usize) -> Result<FgAbGroup> {
    if n == 0 {
        return Err(Error::EmptySignature);
    }
    if k > BSO_MAX_DEGREE {
        return Err(Error::OutsideTable(format!(
            "H_{k}(BSO({n})) is outside the table (k <= {BSO_MAX_DEGREE})"
        )));
    }
    Ok(match (k, n) {
        (0, _) => FgAbGroup::integers(),
        (1, _) | (2, 1) => FgAbGroup::trivial(),
        // BSO(2) ≅ ℂP^∞
        (2, 2) => FgAbGroup::integers(),
        _ => FgAbGroup::cyclic(2),
    })
}

/// `H_k(BSpin(n); ℤ)` for `k ≤ 4`.
pub fn homology_bspin(n: u32, k: usize) -> Result<FgAbGroup> {
    if n == 0 {
        return Err(Error::EmptySignature);
    }
    if k > BSPIN_MAX_DEGREE {
        return Err(Error::OutsideTable(format!(
            "H_{k}(BSpin({n})) is outside the table (k <= {BSPIN_MAX_DEGREE})"
        )));
    }
    let z = FgAbGroup::integers;
    let z2 = || FgAbGroup::cyclic(2);
    let zero = FgAbGroup::trivial;
    Ok(match n {
        // Spin(1) = ℤ/2, so BSpin(1) = ℝP^∞
        1 => [z(), z2(), zero(), z2(), zero()][k].clone(),
        // Spin(2) ≅ U(1), so BSpin(2) ≅ ℂP^∞
        2 => [z(), zero(), z(), zero(), z()][k].clone(),
        _ => [z(), zero(), zero(), zero(), z()][k].clone(),
    })
}

pub fn bso_homology(n: u32) -> Result<GradedGroupList> {
    (0..=BSO_MAX_DEGREE)
        .map(|k| homology_bso(n, k))
        .collect::<Result<_>>()
        .map(GradedGroupList::new)
}

pub fn bspin_homology(n: u32) -> Result<GradedGroupList> {
    (0..=BSPIN_MAX_DEGREE)
        .map(|k| homology_bspin(n, k))
        .collect::<Result<_>>()
        .map(GradedGroupList::new)
}

/// `⊕_{r+s=k} H_r(X) ⊗ H_s(Y)`, the tensor part of the Künneth formula.
pub fn kunneth_tensor_part(hx: &GradedGroupList, hy: &GradedGroupList, k: usize) -> Result<FgAbGroup> {
    hx.require(k)?;
    hy.require(k)?;
    let mut out = FgAbGroup::trivial();
    for r in 0..=k {
        out = out.direct_sum(&tensor(hx.get(r)?, hy.get(k - r)?));
    }
    Ok(out)
}

/// `⊕_{r+s=k} Tor(H_r(X), H_s(Y))`; trivial for `k < 0` callers pass as `None`.
pub fn kunneth_tor_part(hx: &GradedGroupList, hy: &GradedGroupList, k: usize) -> Result<FgAbGroup> {
    hx.require(k)?;
    hy.require(k)?;
    let mut out = FgAbGroup::trivial();
    for r in 0..=k {
        out = out.direct_sum(&tor(hx.get(r)?, hy.get(k - r)?));
    }
    Ok(out)
}

/// `H_k(X × Y; ℤ)` by the Künneth formula.
pub fn kunneth_homology(hx: &GradedGroupList, hy: &GradedGroupList, k: usize) -> Result<FgAbGroup> {
    let tensor_part = kunneth_tensor_part(hx, hy, k)?;
    if k == 0 {
        return Ok(tensor_part);
    }
    Ok(tensor_part.direct_sum(&kunneth_tor_part(hx, hy, k - 1)?))
}

/// Künneth homology of `X × Y` in every degree both lists cover.
pub fn product_homology(hx: &GradedGroupList, hy: &GradedGroupList) -> Result<GradedGroupList> {
    let top = hx.max_degree().min(hy.max_degree());
    (0..=top)
        .map(|k| kunneth_homology(hx, hy, k))
        .collect::<Result<_>>()
        .map(GradedGroupList::new)
}

/// The two summands of the universal-coefficient formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UctParts {
    pub hom: FgAbGroup,
    pub ext: FgAbGroup,
}

impl UctParts {
    pub fn total(&self) -> FgAbGroup {
        self.hom.direct_sum(&self.ext)
    }
}

pub fn uct_parts(h_n: &FgAbGroup, h_nminus1: &FgAbGroup, coeff: &FgAbGroup) -> UctParts {
    UctParts {
        hom: hom(h_n, coeff),
        ext: ext(h_nminus1, coeff),
    }
}

/// `Hⁿ(X; A) ≅ Hom(Hₙ, A) ⊕ Ext(Hₙ₋₁, A)`.
pub fn uct_cohomology(h_n: &FgAbGroup, h_nminus1: &FgAbGroup, coeff: &FgAbGroup) -> FgAbGroup {
    uct_parts(h_n, h_nminus1, coeff).total()
}

/// `H^k(X; A)` from the homology of `X`.
pub fn cohomology(h: &GradedGroupList, k: usize, coeff: &FgAbGroup) -> Result<UctParts> {
    let below = if k == 0 {
        FgAbGroup::trivial()
    } else {
        h.get(k - 1)?.clone()
    };
    Ok(uct_parts(h.get(k)?, &below, coeff))
}

/// `H^k(X × Y; A)` through Künneth homology and the universal coefficients.
pub fn product_cohomology(hx: &GradedGroupList, hy: &GradedGroupList, k: usize, coeff: &FgAbGroup) -> Result<UctParts> {
    let below = if k == 0 {
        FgAbGroup::trivial()
    } else {
        kunneth_homology(hx, hy, k - 1)?
    };
    Ok(uct_parts(&kunneth_homology(hx, hy, k)?, &below, coeff))
}

/// `H²(B SO(p,q)⁰; ℤ)` for `p, q ≥ 2`, via `BSO(p) × BSO(q)`.
pub fn h2_bso_indefinite(p: u32, q: u32) -> Result<FgAbGroup> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidArgument(format!(
            "h2_bso_indefinite needs p, q >= 2 (got {p},{q}); smaller ranks follow the tower case rules"
        )));
    }
    Ok(product_cohomology(&bso_homology(p)?, &bso_homology(q)?, 2, &FgAbGroup::integers())?.total())
}

/// `H⁴(BSpin(n); ℤ)` together with its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H4Generators {
    pub group: FgAbGroup,
    pub generators: Vec<ClassRef>,
}

/// `H⁴(BSpin(n); ℤ)`: `ℤ` generated by `½p₁` for `n ≥ 3`, `n ≠ 4`, and two
/// `½p₁` components for `n = 4` through `Spin(4) ≅ Spin(3) × Spin(3)`.
pub fn h4_bspin(n: u32) -> Result<H4Generators> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "h4 of BSpin({n}) has no half_p1 generator; use the h2/h4 tables (homology bspin)"
        )));
    }
    if n == 4 {
        let h = h4_bspin(3)?;
        return Ok(H4Generators {
            group: h.group.direct_sum(&h.group),
            generators: vec![
                ClassRef::new(ClassName::HalfP1, 1).with_sub(1),
                ClassRef::new(ClassName::HalfP1, 1).with_sub(2),
            ],
        });
    }
    let group = cohomology(&bspin_homology(n)?, 4, &FgAbGroup::integers())?.total();
    Ok(H4Generators {
        group,
        generators: vec![ClassRef::new(ClassName::HalfP1, 1)],
    })
}

/// Conditions for `Hⁿ(Y'×Y''; A) ≅ Hⁿ(Y'; A) × Hⁿ(Y''; A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitCondition {
    /// Chain-level flatness; supplied by the caller.
    Flatness = 1,
    /// `⊕_{r+s=n} H_r ⊗ H_s ≅ Hₙ(Y') ⊕ Hₙ(Y'')`.
    SumDecomposition = 2,
    /// `⊕_{r+s=n−1} Tor(H_r, H_s) = 0`.
    TorVanishing = 3,
    /// `Ext(Hₙ₋₁(W), A) = 0` for `W = Y', Y'', Y'×Y''`.
    ExtVanishing = 4,
}

impl SplitCondition {
    pub fn id(self) -> String {
        format!("condition {}", self as u8)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCheck {
    pub holds: bool,
    pub failed: Vec<SplitCondition>,
}

/// Checks whether the degree-`n` cohomology of a product with coefficients
/// `coeff` splits as the product of the factors' cohomology.
pub fn kunneth_split_check(
    hx: &GradedGroupList,
    hy: &GradedGroupList,
    n: usize,
    coeff: &FgAbGroup,
    flat: bool,
) -> Result<SplitCheck> {
    let mut failed = Vec::new();
    if !flat {
        failed.push(SplitCondition::Flatness);
    }
    let sum = hx.get(n)?.direct_sum(hy.get(n)?);
    if kunneth_tensor_part(hx, hy, n)? != sum {
        failed.push(SplitCondition::SumDecomposition);
    }
    if n >= 1 {
        if !kunneth_tor_part(hx, hy, n - 1)?.is_trivial() {
            failed.push(SplitCondition::TorVanishing);
        }
        let product = kunneth_homology(hx, hy, n - 1)?;
        let ext_nonzero = [hx.get(n - 1)?, hy.get(n - 1)?, &product]
            .into_iter()
            .any(|h| !ext(h, coeff).is_trivial());
        if ext_nonzero {
            failed.push(SplitCondition::ExtVanishing);
        }
    }
    Ok(SplitCheck {
        holds: failed.is_empty(),
        failed,
    })
}
