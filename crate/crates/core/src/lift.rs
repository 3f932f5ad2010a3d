//! Lifting verdicts from user-supplied characteristic-class data.
//!
//! A structure lifts one tower stage exactly when every obstruction class of
//! that stage vanishes on the base. Class values are three-valued: a profile
//! may say a class is zero, nonzero (trusted as an assertion), give an
//! explicit element, or leave it unknown. Partial data never fabricates a
//! verdict; it yields [`LiftVerdict::Undetermined`].
//!
//! Profile files are line oriented, with `#` comments:
//!
//! ```text
//! space X
//! class w2.1 degree 2 coeff Z/2 value zero
//! class half_p1.1 degree 4 coeff Z value (3)
//! ```

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::abgroup::{element_is_zero, FgAbGroup, GroupElement, Notation};
use crate::cohomology::ClassRef;
use crate::error::{Error, Result};
use crate::tower::{Tower, TwistSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassValue {
    Zero,
    /// Asserted nonzero without a representative.
    Nonzero,
    Element(GroupElement),
    Unknown,
}

/// Whether a value is known to vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Vanishing {
    Yes,
    No,
    Unknown,
}

impl ClassValue {
    fn vanishing(&self) -> Vanishing {
        match self {
            ClassValue::Zero => Vanishing::Yes,
            ClassValue::Element(x) if element_is_zero(x) => Vanishing::Yes,
            ClassValue::Element(_) | ClassValue::Nonzero => Vanishing::No,
            ClassValue::Unknown => Vanishing::Unknown,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileEntry {
    pub id: String,
    pub degree: u32,
    pub coefficient: FgAbGroup,
    pub value: ClassValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyProfile {
    space_name: String,
    entries: Vec<ProfileEntry>,
    index: HashMap<String, usize>,
}

impl CohomologyProfile {
    pub fn new(space_name: impl Into<String>) -> Self {
        Self {
            space_name: space_name.into(),
            entries: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn space_name(&self) -> &str {
        &self.space_name
    }

    pub fn entries(&self) -> &[ProfileEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&ProfileEntry> {
        self.index.get(id).map(|&i| &self.entries[i])
    }

    /// Adds an entry; `line` is only used for the duplicate diagnostic.
    pub fn insert(&mut self, entry: ProfileEntry, line: usize) -> Result<()> {
        if let ClassValue::Element(x) = &entry.value {
            if x.parent() != &entry.coefficient {
                return Err(Error::IncompatibleGroups {
                    left: entry.coefficient.to_string(),
                    right: x.parent().to_string(),
                });
            }
        }
        if self.index.contains_key(&entry.id) {
            return Err(Error::DuplicateClass { id: entry.id, line });
        }
        self.index.insert(entry.id.clone(), self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    /// Convenience for building profiles in code: every tower class set to `value`.
    pub fn uniform(space_name: &str, tower: &Tower, mut value: impl FnMut(&ClassRef) -> ClassValue) -> Self {
        let mut p = Self::new(space_name);
        for (line, (_, c)) in tower.classes().enumerate() {
            let entry = ProfileEntry {
                id: c.id(),
                degree: c.degree(),
                coefficient: c.coefficient().clone(),
                value: value(c),
            };
            p.insert(entry, line + 1).expect("tower class-ids are unique");
        }
        p
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line: Some(line),
        msg: msg.into(),
    }
}

fn parse_value(text: &str, coefficient: &FgAbGroup, line: usize) -> Result<ClassValue> {
    match text {
        "zero" => return Ok(ClassValue::Zero),
        "nonzero" => return Ok(ClassValue::Nonzero),
        "unknown" => return Ok(ClassValue::Unknown),
        _ => {}
    }
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| {
            syntax(
                line,
                format!("value must be zero, nonzero, unknown or a tuple, got '{text}'"),
            )
        })?;
    let items: Vec<&str> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(str::trim).collect()
    };
    let expected = coefficient.num_generators();
    if items.len() != expected {
        return Err(Error::ShapeMismatch {
            line: Some(line),
            group: coefficient.to_string(),
            expected,
            found: items.len(),
        });
    }
    let coords = items
        .iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| syntax(line, format!("'{s}' is not an integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    GroupElement::from_coords(coefficient.clone(), coords).map(ClassValue::Element)
}

/// Parses one `class ...` line after the leading keyword.
fn parse_class_line(rest: &[&str], line: usize) -> Result<ProfileEntry> {
    let expect = |pos: usize, key: &str| -> Result<()> {
        match rest.get(pos) {
            Some(&k) if k == key => Ok(()),
            Some(k) => Err(syntax(line, format!("expected '{key}', found '{k}'"))),
            None => Err(syntax(line, format!("expected '{key}'"))),
        }
    };
    let id = rest.first().ok_or_else(|| syntax(line, "missing class-id"))?;
    expect(1, "degree")?;
    let degree = rest
        .get(2)
        .ok_or_else(|| syntax(line, "missing degree"))?
        .parse::<u32>()
        .map_err(|_| syntax(line, format!("bad degree '{}'", rest[2])))?;
    expect(3, "coeff")?;
    let value_pos = rest
        .iter()
        .position(|&t| t == "value")
        .ok_or_else(|| syntax(line, "expected 'value'"))?;
    if value_pos <= 4 {
        return Err(syntax(line, "missing coefficient group"));
    }
    let coefficient: FgAbGroup = rest[4..value_pos]
        .join(" ")
        .parse()
        .map_err(|e: Error| syntax(line, e.to_string()))?;
    let value_text = rest[value_pos + 1..].join("");
    if value_text.is_empty() {
        return Err(syntax(line, "missing value"));
    }
    let value = parse_value(&value_text, &coefficient, line)?;
    Ok(ProfileEntry {
        id: id.to_string(),
        degree,
        coefficient,
        value,
    })
}

pub fn parse_profile(text: &str) -> Result<CohomologyProfile> {
    let mut profile: Option<CohomologyProfile> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match (tokens[0], profile.as_mut()) {
            ("space", None) => match tokens.as_slice() {
                [_, name] => profile = Some(CohomologyProfile::new(*name)),
                _ => return Err(syntax(line, "expected 'space <identifier>'")),
            },
            ("space", Some(_)) => return Err(syntax(line, "repeated 'space' line")),
            (_, None) => return Err(syntax(line, "profile must start with 'space <identifier>'")),
            ("class", Some(p)) => {
                let entry = parse_class_line(&tokens[1..], line)?;
                p.insert(entry, line)?;
            }
            (other, Some(_)) => return Err(syntax(line, format!("unrecognized key '{other}'"))),
        }
    }
    profile.ok_or_else(|| Error::Syntax {
        line: None,
        msg: "empty profile; expected 'space <identifier>'".to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftVerdict {
    Lifts,
    Obstructed {
        stage: usize,
        blockers: Vec<String>,
        /// The nonzero difference, for twisted conditions.
        difference: Option<GroupElement>,
    },
    Undetermined {
        stage: usize,
        ids: Vec<String>,
    },
}

impl LiftVerdict {
    pub fn render(&self, notation: Notation) -> String {
        match self {
            LiftVerdict::Lifts => "LIFTS".to_string(),
            LiftVerdict::Obstructed {
                stage,
                blockers,
                difference,
            } => {
                let mut s = format!("OBSTRUCTED at stage {stage}: {}", blockers.join(", "));
                if let Some(d) = difference {
                    s += &format!("; difference {}", d.render(notation));
                }
                s
            }
            LiftVerdict::Undetermined { stage, ids } => {
                format!("UNKNOWN: undetermined at stage {stage}: {}", ids.join(", "))
            }
        }
    }
}

impl fmt::Display for LiftVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Ascii))
    }
}

/// Looks up a tower class, checking the profile agrees on degree and coefficient.
fn lookup<'a>(profile: &'a CohomologyProfile, class: &ClassRef) -> Result<Option<&'a ProfileEntry>> {
    let Some(entry) = profile.get(&class.id()) else {
        return Ok(None);
    };
    if entry.degree != class.degree() {
        return Err(Error::VocabularyMismatch {
            id: entry.id.clone(),
            detail: format!("degree {} declared, tower expects {}", entry.degree, class.degree()),
        });
    }
    if &entry.coefficient != class.coefficient() {
        return Err(Error::VocabularyMismatch {
            id: entry.id.clone(),
            detail: format!(
                "coefficient {} declared, tower expects {}",
                entry.coefficient,
                class.coefficient()
            ),
        });
    }
    Ok(Some(entry))
}

/// Walks stages `0..=target_stage`, stopping at the first stage that is
/// obstructed or cannot be decided.
pub fn evaluate_lift(profile: &CohomologyProfile, tower: &Tower, target_stage: usize) -> Result<LiftVerdict> {
    if target_stage >= tower.len() {
        return Err(Error::InvalidArgument(format!(
            "stage {target_stage} out of range; {} has {} stages",
            tower.descriptor(),
            tower.len()
        )));
    }
    // Vocabulary errors are reported regardless of where the walk stops.
    for (_, class) in tower.classes() {
        lookup(profile, class)?;
    }
    for stage in &tower.stages()[..=target_stage] {
        let mut blockers = Vec::new();
        let mut undecided = Vec::new();
        for class in &stage.obstructions {
            let vanishing = lookup(profile, class)?.map_or(Vanishing::Unknown, |e| e.value.vanishing());
            match vanishing {
                Vanishing::Yes => {}
                Vanishing::No => blockers.push(class.id()),
                Vanishing::Unknown => undecided.push(class.id()),
            }
        }
        if !blockers.is_empty() {
            return Ok(LiftVerdict::Obstructed {
                stage: stage.index,
                blockers,
                difference: None,
            });
        }
        if !undecided.is_empty() {
            return Ok(LiftVerdict::Undetermined {
                stage: stage.index,
                ids: undecided,
            });
        }
    }
    Ok(LiftVerdict::Lifts)
}

/// Concrete element of one side of a twist, or the ids that prevent forming it.
fn side_element(
    profile: &CohomologyProfile,
    classes: &[ClassRef],
    group: &FgAbGroup,
) -> Result<std::result::Result<GroupElement, Vec<String>>> {
    let mut coords: Vec<BigInt> = Vec::new();
    let mut missing = Vec::new();
    for class in classes {
        let entry = lookup(profile, class)?;
        match entry.map(|e| &e.value) {
            Some(ClassValue::Zero) => coords.extend(GroupElement::zero(class.coefficient().clone()).coords()),
            Some(ClassValue::Element(x)) => coords.extend(x.coords()),
            _ => missing.push(class.id()),
        }
    }
    if !missing.is_empty() {
        return Ok(Err(missing));
    }
    // Sides are sums of equal coefficients, so coordinates concatenate.
    GroupElement::from_coords(group.clone(), coords).map(Ok)
}

/// Decides the twisted condition `left − hom(right) = 0`.
pub fn evaluate_twisted(profile: &CohomologyProfile, spec: &TwistSpec) -> Result<LiftVerdict> {
    let (lg, rg) = (spec.left_coefficient(), spec.right_coefficient());
    if spec.hom.source() != &rg || spec.hom.target() != &lg {
        return Err(Error::IncomparableClasses {
            left: lg.to_string(),
            right: rg.to_string(),
        });
    }
    let left = side_element(profile, &spec.left, &lg)?;
    let right = side_element(profile, &spec.right, &rg)?;
    let (left, right) = match (left, right) {
        (Ok(l), Ok(r)) => (l, r),
        (l, r) => {
            let mut ids = l.err().unwrap_or_default();
            ids.extend(r.err().unwrap_or_default());
            return Ok(LiftVerdict::Undetermined { stage: 0, ids });
        }
    };
    let difference = left.sub(&spec.hom.apply(&right)?)?;
    if element_is_zero(&difference) {
        return Ok(LiftVerdict::Lifts);
    }
    Ok(LiftVerdict::Obstructed {
        stage: 0,
        blockers: spec.left.iter().chain(&spec.right).map(ClassRef::id).collect(),
        difference: Some(difference),
    })
}
