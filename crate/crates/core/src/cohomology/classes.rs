use std::fmt;
use std::str::FromStr;

use crate::abgroup::FgAbGroup;
use crate::error::{Error, Result};

/// Named characteristic classes shared by the tower and the lifting engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassName {
    /// First Stiefel-Whitney class.
    W1,
    /// Second Stiefel-Whitney class.
    W2,
    /// Degree-2 integral generator of `H²(BSO(2))`, squaring to `p₁`.
    SqrtP1,
    /// Generator `½p₁` of `H⁴(BSpin(n))`.
    HalfP1,
    P1,
    C1,
    C2,
    /// First symplectic Pontrjagin class.
    P1H,
    /// Euler class; its degree is the rank.
    E,
}

impl ClassName {
    pub const ALL: [ClassName; 9] = [
        ClassName::W1,
        ClassName::W2,
        ClassName::SqrtP1,
        ClassName::HalfP1,
        ClassName::P1,
        ClassName::C1,
        ClassName::C2,
        ClassName::P1H,
        ClassName::E,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::W1 => "w1",
            ClassName::W2 => "w2",
            ClassName::SqrtP1 => "sqrt_p1",
            ClassName::HalfP1 => "half_p1",
            ClassName::P1 => "p1",
            ClassName::C1 => "c1",
            ClassName::C2 => "c2",
            ClassName::P1H => "p1H",
            ClassName::E => "e",
        }
    }

    /// Catalog degree; `None` for the Euler class, whose degree depends on the rank.
    pub fn catalog_degree(self) -> Option<u32> {
        match self {
            ClassName::W1 => Some(1),
            ClassName::W2 | ClassName::SqrtP1 | ClassName::C1 => Some(2),
            ClassName::HalfP1 | ClassName::P1 | ClassName::C2 | ClassName::P1H => Some(4),
            ClassName::E => None,
        }
    }

    pub fn catalog_coefficient(self) -> FgAbGroup {
        match self {
            ClassName::W1 | ClassName::W2 => FgAbGroup::cyclic(2),
            _ => FgAbGroup::integers(),
        }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown class name '{s}'")))
    }
}

/// A catalog class attached to one maximal-compact factor, optionally split
/// further (the two `½p₁` components of `Spin(4) ≅ Spin(3) × Spin(3)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassRef {
    name: ClassName,
    degree: u32,
    coefficient: FgAbGroup,
    factor: u8,
    sub: Option<u8>,
}

impl ClassRef {
    /// Catalog class on factor `factor` (1 = first, 2 = second).
    ///
    /// Panics for [`ClassName::E`]; use [`ClassRef::euler`].
    pub fn new(name: ClassName, factor: u8) -> Self {
        let degree = name.catalog_degree().expect("the Euler class needs an explicit degree");
        Self {
            name,
            degree,
            coefficient: name.catalog_coefficient(),
            factor,
            sub: None,
        }
    }

    pub fn euler(rank: u32, factor: u8) -> Self {
        Self {
            name: ClassName::E,
            degree: rank,
            coefficient: FgAbGroup::integers(),
            factor,
            sub: None,
        }
    }

    pub fn with_sub(mut self, sub: u8) -> Self {
        self.sub = Some(sub);
        self
    }

    pub fn name(&self) -> ClassName {
        self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficient(&self) -> &FgAbGroup {
        &self.coefficient
    }

    pub fn factor(&self) -> u8 {
        self.factor
    }

    pub fn sub(&self) -> Option<u8> {
        self.sub
    }

    /// Profile key `<name>.<factor>[.<sub>]`, e.g. `half_p1.1.2`.
    pub fn id(&self) -> String {
        match self.sub {
            Some(s) => format!("{}.{}.{}", self.name, self.factor, s),
            None => format!("{}.{}", self.name, self.factor),
        }
    }

    /// Display label `<name>[#<sub>]`, e.g. `half_p1#2`.
    pub fn label(&self) -> String {
        match self.sub {
            Some(s) => format!("{}#{}", self.name, s),
            None => self.name.to_string(),
        }
    }
}

impl fmt::Display for ClassRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}
