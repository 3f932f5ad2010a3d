use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    O,
    SO,
    Spin,
    String,
    U,
    SU,
    Sp,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::O => "O",
            Family::SO => "SO",
            Family::Spin => "Spin",
            Family::String => "String",
            Family::U => "U",
            Family::SU => "SU",
            Family::Sp => "Sp",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "O" => Family::O,
            "SO" => Family::SO,
            "Spin" => Family::Spin,
            "String" => Family::String,
            "U" => Family::U,
            "SU" => Family::SU,
            "Sp" => Family::Sp,
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        })
    }
}

/// A member of a classical family with signature `(p, q)`; `q = 0` is the
/// definite group of rank `p`.
///
/// The signature is stored with `p ≤ q` when both are positive; the order the
/// user wrote is remembered for display and for naming tower factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    family: Family,
    p: u32,
    q: u32,
    swapped: bool,
}

impl GroupDescriptor {
    pub fn new(family: Family, p: u32, q: u32) -> Result<Self> {
        match (p, q) {
            (0, 0) => Err(Error::EmptySignature),
            (0, n) | (n, 0) => Ok(Self::definite(family, n)),
            (p, q) if p <= q => Ok(Self {
                family,
                p,
                q,
                swapped: false,
            }),
            (p, q) => Ok(Self {
                family,
                p: q,
                q: p,
                swapped: true,
            }),
        }
    }

    pub fn definite(family: Family, n: u32) -> Self {
        Self {
            family,
            p: n,
            q: 0,
            swapped: false,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Normalized signature, smaller entry first for indefinite groups.
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_definite(&self) -> bool {
        self.q == 0
    }

    /// The signature in the order it was written.
    pub fn user_signature(&self) -> (u32, u32) {
        if self.swapped {
            (self.q, self.p)
        } else {
            (self.p, self.q)
        }
    }

    /// Ranks of the maximal-compact factors in the order they were written.
    pub fn factor_ranks(&self) -> Vec<u32> {
        if self.is_definite() {
            vec![self.p]
        } else {
            let (a, b) = self.user_signature();
            vec![a, b]
        }
    }

    pub fn with_family(&self, family: Family) -> Self {
        Self { family, ..*self }
    }

    /// Signature rendered as written, e.g. `3,4` or `7`.
    pub fn signature_label(&self) -> String {
        if self.is_definite() {
            self.p.to_string()
        } else {
            let (a, b) = self.user_signature();
            format!("{a},{b}")
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.signature_label())
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Parses `O(7)`, `O(3,4)`, `Spin(2,2)`, `String(4,4)`, ...
    fn from_str(s: &str) -> Result<Self> {
        let syntax = |msg: String| Error::Syntax { line: None, msg };
        let s = s.trim();
        let (name, rest) = s
            .split_once('(')
            .ok_or_else(|| syntax(format!("expected Family(p[,q]), got '{s}'")))?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(|| syntax(format!("missing ')' in '{s}'")))?;
        let family: Family = name.trim().parse()?;
        let nums: Vec<u32> = args
            .split(',')
            .map(|a| a.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| syntax(format!("bad signature in '{s}'")))?;
        match nums.as_slice() {
            [n] => Self::new(family, *n, 0),
            [p, q] => Self::new(family, *p, *q),
            _ => Err(syntax(format!("expected one or two signature entries in '{s}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_echo() {
        for s in [
            "O(7)",
            "O(3,4)",
            "Spin(2,2)",
            "U(1,5)",
            "Sp(1,1)",
            "String(4,4)",
            "SO(5,2)",
        ] {
            let d: GroupDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
    }

    #[test]
    fn normalization() {
        let d: GroupDescriptor = "SO(5,2)".parse().unwrap();
        assert_eq!((d.p(), d.q()), (2, 5));
        assert_eq!(d.user_signature(), (5, 2));
        assert_eq!(d.factor_ranks(), vec![5, 2]);
        let d: GroupDescriptor = "O(0,5)".parse().unwrap();
        assert!(d.is_definite());
        assert_eq!(d.p(), 5);
    }

    #[test]
    fn errors() {
        assert_eq!("O(0,0)".parse::<GroupDescriptor>(), Err(Error::EmptySignature));
        assert!(matches!(
            "G2(3)".parse::<GroupDescriptor>(),
            Err(Error::UnsupportedFamily(_))
        ));
        assert!("O(3".parse::<GroupDescriptor>().is_err());
        assert!("O(1,2,3)".parse::<GroupDescriptor>().is_err());
        assert!("O(-1)".parse::<GroupDescriptor>().is_err());
    }
}
