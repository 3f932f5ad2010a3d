//! Symbolic connected-cover towers.
//!
//! Each stage kills one homotopy group of the structure group; lifting a
//! bundle through the stage is obstructed by the listed cohomology classes,
//! one (or two) per maximal-compact factor.
//!
//! * `O(p,q)`: `O → SO⁰` (kill `π₀`, `w1`), `SO⁰ → Spin` (kill `π₁`, `w2`
//!   or `sqrt_p1` on a rank-2 factor), `Spin → String` (kill `π₃`, `half_p1`,
//!   two components on a rank-4 factor).
//! * `U(p,q)`: `U → Û` (kill `π₁`, `c1`; an inference, see below), then
//!   `Û → String` (kill `π₃`, `c2` on factors of rank ≥ 2).
//! * `Sp(p,q)`: a single `String` stage (kill `π₃`, `p1H` per factor).
//!
//! The `c1` stage of the unitary tower is not named in the classical
//! definition, which starts from the universal cover; `c1` is the only
//! degree-2 generator of `H²(BU(n); ℤ)`, so it is what that step must kill.
//! A factor of rank 2 carries no degree-4 class: `H⁴(BSpin(2); ℤ)` is
//! nonzero but `π₃(Spin(2))` vanishes, so there is nothing to kill.
//!
//! A `(p₁, p₁′)`-structure is the `String` stage read over the
//! non-simply-connected `Spin(p,q)`; it is not a separate tower.

use std::fmt;

use crate::abgroup::{FgAbGroup, Homomorphism, IntegerMatrix, Notation};
use crate::cohomology::{ClassName, ClassRef};
use crate::error::{Error, Result};
use crate::homotopy::{Family, GroupDescriptor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerStage {
    pub index: usize,
    /// Short stage name used to pick a lifting target: `SO`, `Spin`,
    /// `Universal` or `String`.
    pub label: &'static str,
    pub source_name: String,
    pub target_name: String,
    pub killed_pi: u32,
    pub obstructions: Vec<ClassRef>,
    /// Direct sum of the obstructions' coefficients, in listed order.
    pub coefficient: FgAbGroup,
}

impl TowerStage {
    fn new(
        index: usize,
        label: &'static str,
        source_name: String,
        target_name: String,
        killed_pi: u32,
        obstructions: Vec<ClassRef>,
    ) -> Self {
        let coefficient = obstructions
            .iter()
            .fold(FgAbGroup::trivial(), |acc, c| acc.direct_sum(c.coefficient()));
        Self {
            index,
            label,
            source_name,
            target_name,
            killed_pi,
            obstructions,
            coefficient,
        }
    }

    pub fn obstruction_degree(&self) -> u32 {
        self.killed_pi + 1
    }

    /// `stage 2: kill pi_3, obstruction half_p1 x half_p1 in H^4(X; Z^2)`
    pub fn render(&self, notation: Notation) -> String {
        let classes = if self.obstructions.is_empty() {
            "none".to_string()
        } else {
            self.obstructions
                .iter()
                .map(ClassRef::label)
                .collect::<Vec<_>>()
                .join(" x ")
        };
        format!(
            "stage {}: kill pi_{}, obstruction {} in H^{}(X; {})",
            self.index,
            self.killed_pi,
            classes,
            self.obstruction_degree(),
            self.coefficient.render(notation)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    descriptor: GroupDescriptor,
    stages: Vec<TowerStage>,
}

impl Tower {
    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.descriptor
    }

    pub fn stages(&self) -> &[TowerStage] {
        &self.stages
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    /// Index of the stage with the given label (case-insensitive).
    pub fn stage_index(&self, label: &str) -> Result<usize> {
        self.stages
            .iter()
            .position(|s| s.label.eq_ignore_ascii_case(label))
            .ok_or_else(|| {
                let known: Vec<_> = self.stages.iter().map(|s| s.label).collect();
                Error::InvalidArgument(format!(
                    "{} has no stage '{label}' (stages: {})",
                    self.descriptor,
                    known.join(", ")
                ))
            })
    }

    /// Every obstruction class of the tower, stage by stage.
    pub fn classes(&self) -> impl Iterator<Item = (usize, &ClassRef)> {
        self.stages
            .iter()
            .flat_map(|s| s.obstructions.iter().map(move |c| (s.index, c)))
    }

    pub fn render(&self, notation: Notation) -> String {
        self.stages.iter().map(|s| s.render(notation) + "\n").collect()
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Ascii))
    }
}

fn factor_id(i: usize) -> u8 {
    u8::try_from(i + 1).expect("at most two factors")
}

/// Per-factor classes killing `π₁` of `SO(n)`.
fn spin_classes(n: u32, factor: u8) -> Vec<ClassRef> {
    match n {
        0 | 1 => vec![],
        2 => vec![ClassRef::new(ClassName::SqrtP1, factor)],
        _ => vec![ClassRef::new(ClassName::W2, factor)],
    }
}

/// Per-factor classes killing `π₃` of `Spin(n)`.
fn string_classes(n: u32, factor: u8) -> Vec<ClassRef> {
    match n {
        0..=2 => vec![],
        // Spin(4) ≅ Spin(3) × Spin(3)
        4 => vec![
            ClassRef::new(ClassName::HalfP1, factor).with_sub(1),
            ClassRef::new(ClassName::HalfP1, factor).with_sub(2),
        ],
        _ => vec![ClassRef::new(ClassName::HalfP1, factor)],
    }
}

fn per_factor(ranks: &[u32], f: impl Fn(u32, u8) -> Vec<ClassRef>) -> Vec<ClassRef> {
    ranks
        .iter()
        .enumerate()
        .flat_map(|(i, &n)| f(n, factor_id(i)))
        .collect()
}

pub fn build_tower(d: &GroupDescriptor) -> Result<Tower> {
    let ranks = d.factor_ranks();
    let sig = d.signature_label();
    let stages = match d.family() {
        Family::O => {
            let so = if d.is_definite() {
                format!("SO({sig})")
            } else {
                format!("SO({sig})⁰")
            };
            vec![
                TowerStage::new(
                    0,
                    "SO",
                    format!("O({sig})"),
                    so.clone(),
                    0,
                    per_factor(&ranks, |_, f| vec![ClassRef::new(ClassName::W1, f)]),
                ),
                TowerStage::new(
                    1,
                    "Spin",
                    so,
                    format!("Spin({sig})"),
                    1,
                    per_factor(&ranks, spin_classes),
                ),
                TowerStage::new(
                    2,
                    "String",
                    format!("Spin({sig})"),
                    format!("String({sig})"),
                    3,
                    per_factor(&ranks, string_classes),
                ),
            ]
        }
        Family::U => vec![
            TowerStage::new(
                0,
                "Universal",
                format!("U({sig})"),
                format!("Û({sig})"),
                1,
                per_factor(&ranks, |_, f| vec![ClassRef::new(ClassName::C1, f)]),
            ),
            TowerStage::new(
                1,
                "String",
                format!("Û({sig})"),
                format!("String(U({sig}))"),
                3,
                per_factor(&ranks, |n, f| {
                    if n >= 2 {
                        vec![ClassRef::new(ClassName::C2, f)]
                    } else {
                        vec![]
                    }
                }),
            ),
        ],
        Family::Sp => vec![TowerStage::new(
            0,
            "String",
            format!("Sp({sig})"),
            format!("String(Sp({sig}))"),
            3,
            per_factor(&ranks, |_, f| vec![ClassRef::new(ClassName::P1H, f)]),
        )],
        other => {
            return Err(Error::UnsupportedFamily(format!(
                "towers start from O, U or Sp, not {other}"
            )))
        }
    };
    Ok(Tower { descriptor: *d, stages })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistKind {
    SO,
    Spin,
    String,
    /// `½p₁` of the tangent side against `c₂` of the gauge side.
    GreenSchwarz,
}

impl TwistKind {
    pub fn name(self) -> &'static str {
        match self {
            TwistKind::SO => "SO",
            TwistKind::Spin => "Spin",
            TwistKind::String => "String",
            TwistKind::GreenSchwarz => "GS",
        }
    }
}

impl fmt::Display for TwistKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TwistKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "SO" => TwistKind::SO,
            "Spin" => TwistKind::Spin,
            "String" => TwistKind::String,
            "GS" | "GreenSchwarz" => TwistKind::GreenSchwarz,
            other => return Err(Error::InvalidArgument(format!("unknown twist kind '{other}'"))),
        })
    }
}

/// A twisted lifting condition `left − hom(right) = 0`.
///
/// Each side may consist of several classes; its coefficient is the direct
/// sum of theirs. `hom` maps the right coefficient to the left one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    pub kind: TwistKind,
    pub left: Vec<ClassRef>,
    pub right: Vec<ClassRef>,
    pub hom: Homomorphism,
}

fn side_coefficient(classes: &[ClassRef]) -> FgAbGroup {
    classes
        .iter()
        .fold(FgAbGroup::trivial(), |acc, c| acc.direct_sum(c.coefficient()))
}

impl TwistSpec {
    /// Identity-twisted spec; both sides must have the same coefficient.
    pub fn identity(kind: TwistKind, left: Vec<ClassRef>, right: Vec<ClassRef>) -> Result<Self> {
        let (l, r) = (side_coefficient(&left), side_coefficient(&right));
        if l != r {
            return Err(Error::IncomparableClasses {
                left: format!("{} in {l}", ids(&left)),
                right: format!("{} in {r}", ids(&right)),
            });
        }
        Ok(Self {
            kind,
            left,
            right,
            hom: Homomorphism::identity(l),
        })
    }

    /// Replaces the identity by an explicit map from the right coefficient to the left one.
    pub fn with_matrix(mut self, matrix: IntegerMatrix) -> Result<Self> {
        self.hom = Homomorphism::new(self.right_coefficient(), self.left_coefficient(), matrix)?;
        Ok(self)
    }

    pub fn left_coefficient(&self) -> FgAbGroup {
        side_coefficient(&self.left)
    }

    pub fn right_coefficient(&self) -> FgAbGroup {
        side_coefficient(&self.right)
    }

    /// `half_p1.1 - c2.2 in H^4(X; Z)`
    pub fn render(&self, notation: Notation) -> String {
        let map = if self.hom.is_identity() {
            String::new()
        } else {
            "phi ".to_string()
        };
        format!(
            "{} - {map}{} in H^{}(X; {})",
            ids(&self.left),
            ids(&self.right),
            self.left.first().map_or(0, ClassRef::degree),
            self.left_coefficient().render(notation)
        )
    }
}

fn ids(classes: &[ClassRef]) -> String {
    let parts: Vec<_> = classes.iter().map(ClassRef::id).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(", "))
    }
}

/// The twisted covering condition of `kind` for signature `(p, q)`.
///
/// `SO` always applies. `Spin` exists for `(2,2)` and for `p, q ≥ 3` only.
/// `String` needs `p, q ≥ 3` with either both or neither factor of rank 4.
pub fn twisted_descriptor(kind: TwistKind, p: u32, q: u32) -> Result<TwistSpec> {
    let none = || Error::NoTwistedCase {
        kind: kind.name().to_string(),
        p,
        q,
    };
    if p == 0 || q == 0 {
        return Err(none());
    }
    let pair = |name: ClassName| (vec![ClassRef::new(name, 1)], vec![ClassRef::new(name, 2)]);
    let (left, right) = match kind {
        TwistKind::SO => pair(ClassName::W1),
        TwistKind::Spin => match (p, q) {
            (2, 2) => pair(ClassName::SqrtP1),
            (p, q) if p >= 3 && q >= 3 => pair(ClassName::W2),
            _ => return Err(none()),
        },
        TwistKind::String => match (p, q) {
            (4, 4) => (string_classes(4, 1), string_classes(4, 2)),
            (p, q) if p >= 3 && q >= 3 && p != 4 && q != 4 => pair(ClassName::HalfP1),
            _ => return Err(none()),
        },
        TwistKind::GreenSchwarz => return Ok(green_schwarz_spec()),
    };
    TwistSpec::identity(kind, left, right)
}

/// `½p₁ − c₂ = 0` over `ℤ`: the Spin side against the `SU` gauge side, both
/// detecting `π₃ ≅ ℤ`.
pub fn green_schwarz_spec() -> TwistSpec {
    TwistSpec::identity(
        TwistKind::GreenSchwarz,
        vec![ClassRef::new(ClassName::HalfP1, 1)],
        vec![ClassRef::new(ClassName::C2, 2)],
    )
    .expect("both sides are integral")
}
