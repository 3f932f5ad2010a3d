use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// A finitely generated abelian group `ℤ^r × ℤ/d₁ × … × ℤ/d_k` with
/// `2 ≤ d₁ | d₂ | … | d_k`. Two groups are isomorphic iff they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgAbGroup {
    rank: usize,
    invariant_factors: Vec<BigInt>,
}

/// Rendering style for groups.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Notation {
    #[default]
    Ascii,
    Unicode,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self {
            rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            invariant_factors: Vec::new(),
        }
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    /// `ℤ/m`; `ℤ/1` is trivial and `ℤ/0` is `ℤ`.
    pub fn cyclic(m: u64) -> Self {
        Self::from_cyclic_orders([BigInt::from(m)])
    }

    /// Direct sum of cyclic groups with the given orders, where order 0 means `ℤ`
    /// and negative orders are read by absolute value.
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        let mut rank = 0;
        let mut finite = Vec::new();
        for o in orders {
            let o = o.abs();
            if o.is_zero() {
                rank += 1;
            } else if !o.is_one() {
                finite.push(o);
            }
        }
        // Pairwise (gcd, lcm) replacement leaves a divisibility chain.
        for i in 0..finite.len() {
            for j in i + 1..finite.len() {
                let g = finite[i].gcd(&finite[j]);
                let l = finite[i].lcm(&finite[j]);
                finite[i] = g;
                finite[j] = l;
            }
        }
        finite.retain(|d| !d.is_one());
        Self {
            rank,
            invariant_factors: finite,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Number of cyclic generators in the normal form (free ones first).
    pub fn num_generators(&self) -> usize {
        self.rank + self.invariant_factors.len()
    }

    /// Cyclic orders of the generators in coordinate order, `0` for each `ℤ`.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        std::iter::repeat_n(BigInt::zero(), self.rank)
            .chain(self.invariant_factors.iter().cloned())
            .collect()
    }

    /// Order of the group, `None` if infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    /// The torsion subgroup.
    pub fn torsion(&self) -> FgAbGroup {
        Self {
            rank: 0,
            invariant_factors: self.invariant_factors.clone(),
        }
    }

    /// Number of `ℤ/m` factors in the invariant-factor form.
    pub fn count_factor(&self, m: u64) -> usize {
        let m = BigInt::from(m);
        self.invariant_factors.iter().filter(|d| **d == m).count()
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        Self::from_cyclic_orders(self.generator_orders().into_iter().chain(other.generator_orders()))
    }

    pub fn power(&self, n: usize) -> FgAbGroup {
        (0..n).fold(Self::trivial(), |acc, _| acc.direct_sum(self))
    }

    pub fn render(&self, notation: Notation) -> String {
        let (z, times) = match notation {
            Notation::Ascii => ("Z", " x "),
            Notation::Unicode => ("ℤ", " × "),
        };
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push(z.to_string()),
            r => parts.push(format!("{z}^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("{z}/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(times)
        }
    }
}

impl Default for FgAbGroup {
    fn default() -> Self {
        Self::trivial()
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Ascii))
    }
}

impl FromStr for FgAbGroup {
    type Err = Error;

    /// Parses `Z`, `Z^r`, `Z/m`, `0` and products of these joined by `x`
    /// (or `×`); `ℤ` is accepted for `Z`.
    fn from_str(s: &str) -> Result<Self> {
        let syntax = |msg: String| Error::Syntax { line: None, msg };
        let normalized = s.replace('ℤ', "Z").replace('×', "x");
        let trimmed = normalized.trim();
        if trimmed.is_empty() {
            return Err(syntax("empty group expression".into()));
        }
        let mut orders = Vec::new();
        for raw in trimmed.split('x') {
            let term = raw.trim();
            if term == "0" || term == "1" {
                continue;
            }
            let Some(rest) = term.strip_prefix('Z') else {
                return Err(syntax(format!("bad group term '{term}'")));
            };
            let rest = rest.trim();
            if rest.is_empty() {
                orders.push(BigInt::zero());
            } else if let Some(exp) = rest.strip_prefix('^') {
                let n: usize = exp
                    .trim()
                    .parse()
                    .map_err(|_| syntax(format!("bad exponent in '{term}'")))?;
                orders.extend(std::iter::repeat_n(BigInt::zero(), n));
            } else if let Some(m) = rest.strip_prefix('/') {
                let m: BigInt = m
                    .trim()
                    .parse()
                    .map_err(|_| syntax(format!("bad modulus in '{term}'")))?;
                if !m.is_positive() {
                    return Err(syntax(format!("modulus must be positive in '{term}'")));
                }
                orders.push(m);
            } else {
                return Err(syntax(format!("bad group term '{term}'")));
            }
        }
        Ok(Self::from_cyclic_orders(orders))
    }
}

/// `ℤ^rows / im(M)` for `M : ℤ^cols → ℤ^rows`.
pub fn cokernel(m: &IntegerMatrix) -> FgAbGroup {
    let snf = smith_normal_form(m);
    let diag = snf.invariants();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let rank = m.rows() - nonzero;
    FgAbGroup {
        rank,
        invariant_factors: diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
    }
}

/// Binary functors on cyclic summands; each entry is an order, `0` for `ℤ`.
fn bi_additive(a: &FgAbGroup, b: &FgAbGroup, f: impl Fn(&BigInt, &BigInt) -> Option<BigInt>) -> FgAbGroup {
    let mut out = Vec::new();
    for x in a.generator_orders() {
        for y in b.generator_orders() {
            if let Some(o) = f(&x, &y) {
                out.push(o);
            }
        }
    }
    FgAbGroup::from_cyclic_orders(out)
}

pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    bi_additive(a, b, |m, n| match (m.is_zero(), n.is_zero()) {
        (true, true) => Some(BigInt::zero()),
        (true, false) => Some(n.clone()),
        (false, true) => Some(m.clone()),
        (false, false) => Some(m.gcd(n)),
    })
}

pub fn hom(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    bi_additive(a, b, |m, n| match (m.is_zero(), n.is_zero()) {
        (true, _) => Some(n.clone()),
        (false, true) => None,
        (false, false) => Some(m.gcd(n)),
    })
}

pub fn ext(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    bi_additive(a, b, |m, n| match (m.is_zero(), n.is_zero()) {
        (true, _) => None,
        (false, true) => Some(m.clone()),
        (false, false) => Some(m.gcd(n)),
    })
}

pub fn tor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    bi_additive(a, b, |m, n| (!m.is_zero() && !n.is_zero()).then(|| m.gcd(n)))
}

pub fn direct_sum(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    a.direct_sum(b)
}
