//! Command-line front end.
//!
//! [`run`] takes the full argument vector and returns the exit code and both
//! output streams, so the binary and the tests share one code path.
//!
//! Exit codes: 0 answered, 1 usage or parse error, 2 unknown or outside the
//! tables (stdout starts with `UNKNOWN:`), 3 lift obstructed.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use covertower::abgroup::{self, smith_normal_form};
use covertower::cohomology::{self, ring_generators, RingFamily};
use covertower::homotopy::{self, HomotopyAnswer};
use covertower::lift::{evaluate_lift, evaluate_twisted, parse_profile};
use covertower::tower::{build_tower, twisted_descriptor};
use covertower::{Error, FgAbGroup, GroupDescriptor, IntegerMatrix, LiftVerdict, Notation, TwistKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_OBSTRUCTED: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn answer(exit_code: i32, text: String) -> Self {
        let stdout = if text.ends_with('\n') { text } else { text + "\n" };
        Self {
            exit_code,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(msg: impl std::fmt::Display) -> Self {
        Self {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "covertower",
    version,
    about = "Connected-cover towers of indefinite classical groups"
)]
struct Cli {
    /// Render groups as ℤ, ℤ/n and × instead of ASCII.
    #[arg(long, global = true)]
    unicode: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homotopy group pi_i of a group such as O(3,4), Spin(2,2) or U(5).
    Pi { descriptor: String, degree: u32 },
    /// Connected-cover tower of an O, U or Sp group.
    Tower { descriptor: String },
    /// Integral homology of BSO(n) or BSpin(n).
    Homology { space: String, degree: usize },
    /// Rank of H^k(BSpin(n); Z).
    Betti { space: String, degree: usize },
    /// H^4(BSpin(n); Z) with its generators.
    H4 { space: String },
    /// Polynomial generators of BU(n), BSU(n), BSp(n) or BSOQ(n).
    Ring { space: String },
    /// Abelian group arithmetic.
    Abgroup {
        #[command(subcommand)]
        op: AbOp,
    },
    /// Decide whether a structure lifts up the tower.
    Lift {
        #[arg(long)]
        profile: PathBuf,
        /// Stage name (SO, Spin, Universal, String) or index.
        #[arg(long)]
        target: String,
        descriptor: String,
    },
    /// Decide a twisted lifting condition.
    Twisted {
        #[arg(long)]
        profile: PathBuf,
        /// SO, Spin, String or GS.
        #[arg(long)]
        kind: String,
        /// Matrix of the map from the right-hand coefficient to the left-hand one.
        #[arg(long)]
        hom: Option<String>,
        descriptor: String,
    },
}

#[derive(Subcommand, Debug)]
enum AbOp {
    Tensor {
        a: String,
        b: String,
    },
    Hom {
        a: String,
        b: String,
    },
    Ext {
        a: String,
        b: String,
    },
    Tor {
        a: String,
        b: String,
    },
    Sum {
        a: String,
        b: String,
    },
    /// Smith normal form of a matrix given as rows separated by ';'.
    Snf {
        matrix: String,
    },
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return clap_outcome(&e),
    };
    let notation = if cli.unicode {
        Notation::Unicode
    } else {
        Notation::Ascii
    };
    match dispatch(cli.command, notation) {
        Ok(outcome) => outcome,
        Err(e @ (Error::OutsideTable(_) | Error::InsufficientDegrees { .. })) => {
            Outcome::answer(EXIT_UNKNOWN, format!("UNKNOWN: {e}"))
        }
        Err(e) => Outcome::failure(e),
    }
}

fn clap_outcome(e: &clap::Error) -> Outcome {
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::answer(EXIT_OK, e.to_string()),
        _ => {
            let rendered = e.to_string();
            let first = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            Outcome {
                exit_code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("{}\n", first.trim()),
            }
        }
    }
}

fn descriptor(s: &str) -> Result<GroupDescriptor, Error> {
    s.parse()
}

/// Splits `Name(n)` into the name and `n`.
fn space_arg(s: &str) -> Result<(&str, u32), Error> {
    let bad = || Error::Syntax {
        line: None,
        msg: format!("expected Name(n), got '{s}'"),
    };
    let (name, rest) = s.trim().split_once('(').ok_or_else(bad)?;
    let n = rest
        .strip_suffix(')')
        .ok_or_else(bad)?
        .trim()
        .parse()
        .map_err(|_| bad())?;
    Ok((name.trim(), n))
}

fn bspin_rank(s: &str) -> Result<u32, Error> {
    match space_arg(s)? {
        ("BSpin", n) => Ok(n),
        (other, _) => Err(Error::UnsupportedFamily(format!("expected BSpin(n), got {other}"))),
    }
}

fn group(s: &str) -> Result<FgAbGroup, Error> {
    s.parse()
}

/// `1 2; 3 4` or `1,2;3,4`.
fn matrix(s: &str) -> Result<IntegerMatrix, Error> {
    let rows = s
        .split(';')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<i64>().map_err(|_| Error::Syntax {
                        line: None,
                        msg: format!("'{t}' is not an integer"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    IntegerMatrix::from_rows(&rows)
}

fn read_profile(path: &PathBuf) -> Result<covertower::CohomologyProfile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_profile(&text)
}

fn verdict_outcome(v: &LiftVerdict, notation: Notation) -> Outcome {
    let code = match v {
        LiftVerdict::Lifts => EXIT_OK,
        LiftVerdict::Obstructed { .. } => EXIT_OBSTRUCTED,
        LiftVerdict::Undetermined { .. } => EXIT_UNKNOWN,
    };
    Outcome::answer(code, v.render(notation))
}

fn dispatch(command: Command, notation: Notation) -> Result<Outcome, Error> {
    let ok = |text: String| Ok(Outcome::answer(EXIT_OK, text));
    match command {
        Command::Pi { descriptor: d, degree } => match homotopy::pi(&descriptor(&d)?, degree)? {
            HomotopyAnswer::Known(g) => ok(g.render(notation)),
            HomotopyAnswer::Unknown(why) => Ok(Outcome::answer(EXIT_UNKNOWN, format!("UNKNOWN: {why}"))),
        },
        Command::Tower { descriptor: d } => ok(build_tower(&descriptor(&d)?)?.render(notation)),
        Command::Homology { space, degree } => {
            let g = match space_arg(&space)? {
                ("BSO", n) => cohomology::homology_bso(n, degree)?,
                ("BSpin", n) => cohomology::homology_bspin(n, degree)?,
                (other, _) => return Err(Error::UnsupportedFamily(format!("homology of {other}"))),
            };
            ok(g.render(notation))
        }
        Command::Betti { space, degree } => ok(cohomology::betti_bspin(bspin_rank(&space)?, degree)?.to_string()),
        Command::H4 { space } => {
            let h = cohomology::h4_bspin(bspin_rank(&space)?)?;
            let gens: Vec<_> = h.generators.iter().map(|c| c.label()).collect();
            ok(format!("{} generated by {}", h.group.render(notation), gens.join(", ")))
        }
        Command::Ring { space } => {
            let (name, n) = space_arg(&space)?;
            let p = ring_generators(name.parse::<RingFamily>()?, n)?;
            let gens: Vec<_> = p.generators.iter().map(|(g, d)| format!("{g} (degree {d})")).collect();
            let mut text = format!("generators: {}", gens.join(", "));
            for r in &p.relations {
                text += &format!("\nrelation: {r}");
            }
            ok(text)
        }
        Command::Abgroup { op } => {
            let binary = |f: fn(&FgAbGroup, &FgAbGroup) -> FgAbGroup, a: &str, b: &str| {
                Ok::<_, Error>(f(&group(a)?, &group(b)?).render(notation))
            };
            match op {
                AbOp::Tensor { a, b } => ok(binary(abgroup::tensor, &a, &b)?),
                AbOp::Hom { a, b } => ok(binary(abgroup::hom, &a, &b)?),
                AbOp::Ext { a, b } => ok(binary(abgroup::ext, &a, &b)?),
                AbOp::Tor { a, b } => ok(binary(abgroup::tor, &a, &b)?),
                AbOp::Sum { a, b } => ok(binary(abgroup::direct_sum, &a, &b)?),
                AbOp::Snf { matrix: m } => {
                    let m = matrix(&m)?;
                    let snf = smith_normal_form(&m);
                    let diag: Vec<_> = snf.invariants().iter().map(ToString::to_string).collect();
                    ok(format!(
                        "diagonal: {}\ncokernel: {}",
                        if diag.is_empty() {
                            "-".to_string()
                        } else {
                            diag.join(" ")
                        },
                        abgroup::cokernel(&m).render(notation)
                    ))
                }
            }
        }
        Command::Lift {
            profile,
            target,
            descriptor: d,
        } => {
            let tower = build_tower(&descriptor(&d)?)?;
            let stage = match target.parse::<usize>() {
                Ok(i) => i,
                Err(_) => tower.stage_index(&target)?,
            };
            let profile = read_profile(&profile)?;
            Ok(verdict_outcome(&evaluate_lift(&profile, &tower, stage)?, notation))
        }
        Command::Twisted {
            profile,
            kind,
            hom,
            descriptor: d,
        } => {
            let kind: TwistKind = kind.parse()?;
            let (p, q) = descriptor(&d)?.user_signature();
            let mut spec = twisted_descriptor(kind, p, q)?;
            if let Some(h) = hom {
                spec = spec.with_matrix(matrix(&h)?)?;
            }
            let profile = read_profile(&profile)?;
            Ok(verdict_outcome(&evaluate_twisted(&profile, &spec)?, notation))
        }
    }
}
