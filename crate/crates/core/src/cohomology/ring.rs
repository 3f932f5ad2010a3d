use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingFamily {
    BU,
    BSU,
    BSp,
    /// `H*(BSO(n); ℚ)`.
    BSORational,
}

impl FromStr for RingFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "BU" => RingFamily::BU,
            "BSU" => RingFamily::BSU,
            "BSp" => RingFamily::BSp,
            "BSOQ" | "BSO_rational" => RingFamily::BSORational,
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        })
    }
}

impl fmt::Display for RingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingFamily::BU => "BU",
            RingFamily::BSU => "BSU",
            RingFamily::BSp => "BSp",
            RingFamily::BSORational => "BSOQ",
        })
    }
}

/// Polynomial generators with their degrees plus any relations, as text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub generators: Vec<(String, u32)>,
    pub relations: Vec<String>,
}

pub fn ring_generators(family: RingFamily, n: u32) -> Result<RingPresentation> {
    if n == 0 {
        return Err(Error::EmptySignature);
    }
    let mut relations = Vec::new();
    let generators = match family {
        RingFamily::BU => (1..=n).map(|i| (format!("c{i}"), 2 * i)).collect(),
        RingFamily::BSU => (2..=n).map(|i| (format!("c{i}"), 2 * i)).collect(),
        RingFamily::BSp => (1..=n).map(|i| (format!("p{i}H"), 4 * i)).collect(),
        RingFamily::BSORational => {
            let mut gens: Vec<(String, u32)> = (1..=n / 2).map(|i| (format!("p{i}"), 4 * i)).collect();
            if n.is_multiple_of(2) {
                gens.push(("e".to_string(), n));
                relations.push(format!("p{} = e^2", n / 2));
            }
            gens
        }
    };
    Ok(RingPresentation { generators, relations })
}
