//! Homotopy groups `πᵢ` of the classical groups in low degrees.
//!
//! Answers come from two fixed tables (orthogonal groups `O(n)` for
//! `n ≤ 9, i ≤ 7`, unitary groups `U(n)` for `n ≤ 6, 1 ≤ i ≤ 7`) extended by
//! exactly three rules:
//!
//! * stabilization, `πᵢ(O(n)) ≅ πᵢ(O(n+1))` for `0 < i ≤ n − 2` (and
//!   `πᵢ(U(n))` stable for `i ≤ 2n − 1`);
//! * the maximal-compact product rule `πᵢ(G(p,q)) ≅ πᵢ(K(p)) × πᵢ(K(q))`;
//! * connected covers kill everything up to their level.
//!
//! Anything these do not determine is [`HomotopyAnswer::Unknown`]; no Bott
//! periodicity is imported.
//!
//! Note on `Spin(n)`: the displayed isomorphism this is based on reads
//! "0 for i ≥ 2", which is a typo; we use `πᵢ(Spin(n)) = 0` for `i ≤ 2` and
//! `πᵢ(O(n))` for `i ≥ 3`.

mod descriptor;
mod tables;

use std::fmt;

pub use descriptor::{Family, GroupDescriptor};

use crate::abgroup::FgAbGroup;
use crate::error::{Error, Result};

/// Highest degree covered by the tables.
pub const MAX_TABLE_DEGREE: u32 = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomotopyAnswer {
    Known(FgAbGroup),
    /// Outside table and rule coverage; the string says why.
    Unknown(String),
}

impl HomotopyAnswer {
    fn unknown(msg: impl Into<String>) -> Self {
        HomotopyAnswer::Unknown(msg.into())
    }

    pub fn known(&self) -> Option<&FgAbGroup> {
        match self {
            HomotopyAnswer::Known(g) => Some(g),
            HomotopyAnswer::Unknown(_) => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, HomotopyAnswer::Unknown(_))
    }

    /// Unknown if either side is.
    pub fn product(&self, other: &HomotopyAnswer) -> HomotopyAnswer {
        match (self, other) {
            (HomotopyAnswer::Known(a), HomotopyAnswer::Known(b)) => HomotopyAnswer::Known(a.direct_sum(b)),
            (HomotopyAnswer::Unknown(why), _) | (_, HomotopyAnswer::Unknown(why)) => {
                HomotopyAnswer::Unknown(why.clone())
            }
        }
    }
}

impl From<FgAbGroup> for HomotopyAnswer {
    fn from(g: FgAbGroup) -> Self {
        HomotopyAnswer::Known(g)
    }
}

impl fmt::Display for HomotopyAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyAnswer::Known(g) => write!(f, "{g}"),
            HomotopyAnswer::Unknown(why) => write!(f, "unknown ({why})"),
        }
    }
}

fn trivial() -> HomotopyAnswer {
    HomotopyAnswer::Known(FgAbGroup::trivial())
}

fn nonempty(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::EmptySignature)
    } else {
        Ok(())
    }
}

/// `πᵢ(O(n))`.
pub fn pi_o(n: u32, i: u32) -> Result<HomotopyAnswer> {
    nonempty(n)?;
    if i == 0 {
        return Ok(FgAbGroup::cyclic(2).into());
    }
    if i > MAX_TABLE_DEGREE {
        return Ok(HomotopyAnswer::unknown(format!(
            "pi_{i}(O({n})) is beyond the degree-{MAX_TABLE_DEGREE} table"
        )));
    }
    if n as usize <= tables::O_MAX_RANK {
        if let Some(g) = tables::o_entry(n, i) {
            return Ok(g.into());
        }
    }
    // Blank table cells and ranks past the table sit in the stable range.
    if i + 2 <= n {
        return Ok(tables::o_stable(i).into());
    }
    Ok(HomotopyAnswer::unknown(format!("pi_{i}(O({n})) is not determined")))
}

/// `πᵢ(SO(n))`: trivial `π₀`, otherwise as `O(n)`.
pub fn pi_so(n: u32, i: u32) -> Result<HomotopyAnswer> {
    nonempty(n)?;
    if i == 0 {
        return Ok(trivial());
    }
    pi_o(n, i)
}

/// `πᵢ(Spin(n))` for the definite spin group.
pub fn pi_spin_definite(n: u32, i: u32) -> Result<HomotopyAnswer> {
    nonempty(n)?;
    match n {
        1 => Ok(HomotopyAnswer::unknown(
            "Spin(1) is not covered; use the indefinite pi_1 table for (1,0)",
        )),
        // Spin(2) ≅ U(1)
        2 => pi_u(1, i),
        _ if i <= 2 => Ok(trivial()),
        _ => pi_o(n, i),
    }
}

/// `πᵢ(String(n))`: the 3-connected cover of `O(n)`.
pub fn pi_string_definite(n: u32, i: u32) -> Result<HomotopyAnswer> {
    connected_cover_of_o(n, 3, i)
}

fn connected_cover_of_o(n: u32, level: u32, i: u32) -> Result<HomotopyAnswer> {
    nonempty(n)?;
    if i <= level {
        Ok(trivial())
    } else {
        pi_o(n, i)
    }
}

/// `πᵢ(U(n))`.
pub fn pi_u(n: u32, i: u32) -> Result<HomotopyAnswer> {
    nonempty(n)?;
    if i == 0 {
        return Ok(trivial());
    }
    if i > MAX_TABLE_DEGREE {
        return Ok(HomotopyAnswer::unknown(format!(
            "pi_{i}(U({n})) is beyond the degree-{MAX_TABLE_DEGREE} table"
        )));
    }
    if n as usize <= tables::U_MAX_RANK {
        return Ok(tables::u_entry(n, i).into());
    }
    // n > 6 ≥ (i + 1) / 2: stable range i ≤ 2n − 1.
    Ok(tables::u_stable(i).into())
}

/// `πᵢ(SU(n))`: `U(n) ≅ SU(n) × U(1)` as spaces, so this is `πᵢ(U(n))` for
/// `i ≥ 2` with trivial `π₀` and `π₁`.
pub fn pi_su(n: u32, i: u32) -> Result<HomotopyAnswer> {
    nonempty(n)?;
    if i <= 1 {
        return Ok(trivial());
    }
    pi_u(n, i)
}

/// `πᵢ(Sp(n))`, implemented only through `π₃`.
pub fn pi_sp(n: u32, i: u32) -> Result<HomotopyAnswer> {
    nonempty(n)?;
    match i {
        0..=2 => Ok(trivial()),
        3 => Ok(FgAbGroup::integers().into()),
        _ => Ok(HomotopyAnswer::unknown(format!(
            "pi_{i}(Sp({n})) is not tabulated (only pi_0..pi_3)"
        ))),
    }
}

/// `π₁(Spin(p,q))` by the six-case list; argument order does not matter.
pub fn pi1_spin_indefinite(p: u32, q: u32) -> Result<FgAbGroup> {
    let (big, small) = if p >= q { (p, q) } else { (q, p) };
    Ok(match (big, small) {
        (0, _) => return Err(Error::EmptySignature),
        (1, _) => FgAbGroup::trivial(),
        (2, 0 | 1) => FgAbGroup::integers(),
        (2, 2) => FgAbGroup::free(2),
        (_, 0 | 1) => FgAbGroup::trivial(),
        (_, 2) => FgAbGroup::integers(),
        _ => FgAbGroup::cyclic(2),
    })
}

/// `πᵢ` of an indefinite group through its maximal compact subgroup.
pub fn pi_indefinite(d: &GroupDescriptor, i: u32) -> Result<HomotopyAnswer> {
    if d.is_definite() {
        return Err(Error::InvalidArgument(format!("{d} is not indefinite")));
    }
    let (p, q) = (d.p(), d.q());
    let product =
        |f: fn(u32, u32) -> Result<HomotopyAnswer>| -> Result<HomotopyAnswer> { Ok(f(p, i)?.product(&f(q, i)?)) };
    match d.family() {
        Family::O => product(pi_o),
        Family::SO => product(pi_so),
        Family::U => product(pi_u),
        Family::SU => product(pi_su),
        Family::Sp => product(pi_sp),
        Family::Spin => match i {
            0 => Ok(trivial()),
            1 => Ok(pi1_spin_indefinite(p, q)?.into()),
            // Covering maps are isomorphisms on πᵢ for i ≥ 2, so the factors
            // can be read off O(p) × O(q); this also covers p = 1.
            _ => product(pi_o),
        },
        Family::String => {
            if i <= 3 {
                Ok(trivial())
            } else {
                product(pi_o)
            }
        }
    }
}

/// `πᵢ` of any descriptor, definite or not.
pub fn pi(d: &GroupDescriptor, i: u32) -> Result<HomotopyAnswer> {
    if !d.is_definite() {
        return pi_indefinite(d, i);
    }
    let n = d.p();
    match d.family() {
        Family::O => pi_o(n, i),
        Family::SO => pi_so(n, i),
        Family::Spin => {
            let answer = pi_spin_definite(n, i)?;
            if i != 1 {
                return Ok(answer);
            }
            check_spin_pi1_agreement(n, &answer)?;
            // The (1,0) row of the indefinite list answers what the definite rule leaves open.
            if answer.is_unknown() {
                return Ok(pi1_spin_indefinite(n, 0)?.into());
            }
            Ok(answer)
        }
        Family::String => pi_string_definite(n, i),
        Family::U => pi_u(n, i),
        Family::SU => pi_su(n, i),
        Family::Sp => pi_sp(n, i),
    }
}

/// The `q = 0` rows of the indefinite `π₁(Spin)` list overlap the definite
/// rule; any disagreement is an error rather than a silent preference.
pub fn check_spin_pi1_agreement(n: u32, definite: &HomotopyAnswer) -> Result<()> {
    let indefinite = pi1_spin_indefinite(n, 0)?;
    match definite.known() {
        Some(g) if *g != indefinite => Err(Error::SpinTableConflict {
            p: n,
            q: 0,
            definite: g.to_string(),
            indefinite: indefinite.to_string(),
        }),
        _ => Ok(()),
    }
}

/// `πᵢ(G⟨level⟩)`: trivial for `i ≤ level`, otherwise `πᵢ(G)`.
pub fn connected_cover_pi(d: &GroupDescriptor, level: u32, i: u32) -> Result<HomotopyAnswer> {
    if i <= level {
        return Ok(trivial());
    }
    pi(d, i)
}
