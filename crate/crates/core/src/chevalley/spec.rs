//! Serializable description of a subalgebra: a toral part (the full Cartan or
//! the kernel of a list of functionals), full root spaces, and mixed lines
//! (one-dimensional spans of root-vector combinations).
//!
//! All rationals travel as canonical strings: "p" for integers, "p/q" in
//! lowest terms otherwise, so files are bit-exact and diff-friendly. A mixed
//! coefficient may be omitted to mark it as unknown (to be solved).

use num_traits::{One, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qlinalg::{QMatrix, QVector, Rat};
use crate::roots::RootSystem;

/// Rational wrapper with canonical string serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatS(pub Rat);

pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let parse_int = |t: &str| -> Result<num_bigint::BigInt, String> {
        t.parse::<num_bigint::BigInt>()
            .map_err(|_| format!("bad integer {t:?}"))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

impl Serialize for RatS {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatS {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map(RatS).map_err(D::Error::custom)
    }
}

pub fn to_rats(v: &[Rat]) -> Vec<RatS> {
    v.iter().cloned().map(RatS).collect()
}

pub fn from_rats(v: &[RatS]) -> QVector {
    v.iter().map(|r| r.0.clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToralSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub functionals: Vec<Vec<RatS>>,
}

impl ToralSpec {
    pub fn full() -> Self {
        ToralSpec {
            kind: "full".into(),
            functionals: Vec::new(),
        }
    }

    pub fn kernel(functionals: Vec<QVector>) -> Self {
        ToralSpec {
            kind: "kernel".into(),
            functionals: functionals.iter().map(|f| to_rats(f)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixedTerm {
    pub root: Vec<RatS>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff: Option<RatS>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubalgebraSpec {
    pub toral: ToralSpec,
    pub root_spaces: Vec<Vec<RatS>>,
    pub mixed: Vec<Vec<MixedTerm>>,
}

impl SubalgebraSpec {
    pub fn full_cartan() -> Self {
        SubalgebraSpec {
            toral: ToralSpec::full(),
            root_spaces: Vec::new(),
            mixed: Vec::new(),
        }
    }

    /// Engine-facing constructor: toral kernel plus root data given as indices
    /// into `rs`, with known coefficients.
    pub fn from_parts(
        rs: &RootSystem,
        toral: ToralSpec,
        root_spaces: &[usize],
        mixed: &[Vec<(usize, Rat)>],
    ) -> Self {
        let mut spaces: Vec<usize> = root_spaces.to_vec();
        spaces.sort_unstable();
        SubalgebraSpec {
            toral,
            root_spaces: spaces.iter().map(|&i| to_rats(rs.root(i))).collect(),
            mixed: mixed
                .iter()
                .map(|line| {
                    line.iter()
                        .map(|(i, c)| MixedTerm {
                            root: to_rats(rs.root(*i)),
                            coeff: Some(RatS(c.clone())),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("coordinate vector {0:?} is not a root of the ambient system")]
    NotARoot(String),
    #[error("functional has wrong dimension: expected {expected}, got {got}")]
    BadDimension { expected: usize, got: usize },
    #[error("unknown toral kind {0:?}")]
    BadToralKind(String),
    #[error("mixed line {0} is empty")]
    EmptyLine(usize),
    #[error("mixed line {0} repeats a root")]
    RepeatedRoot(usize),
    #[error("mixed line {line} is not homogeneous for the toral part: roots {a} and {b} restrict differently")]
    NotHomogeneous { line: usize, a: String, b: String },
}

/// A spec resolved against a concrete root system: root indices instead of
/// coordinate vectors, and an explicit basis of the toral subspace inside the
/// coroot span.
#[derive(Clone, Debug)]
pub struct ResolvedSpec {
    pub toral_basis: Vec<QVector>,
    pub root_spaces: Vec<usize>,
    /// Each line: (root index, Some(coeff) or None for unknown).
    pub mixed: Vec<Vec<(usize, Option<Rat>)>>,
}

impl ResolvedSpec {
    pub fn has_unknowns(&self) -> bool {
        self.mixed
            .iter()
            .any(|l| l.iter().any(|(_, c)| c.is_none()))
    }

    pub fn dim(&self) -> usize {
        self.toral_basis.len() + self.root_spaces.len() + self.mixed.len()
    }
}

/// Basis of the coroot span (the Cartan subalgebra in ambient coordinates).
pub fn cartan_basis(rs: &RootSystem) -> Vec<QVector> {
    let rows: Vec<QVector> = (0..rs.rank())
        .map(|s| rs.coroot(rs.simple_root(s)).clone())
        .collect();
    rows
}

/// Basis of { h in Cartan : (f, h) = 0 for all functionals f }.
pub fn toral_kernel_basis(rs: &RootSystem, functionals: &[QVector]) -> Vec<QVector> {
    let cartan = cartan_basis(rs);
    // Solve for coefficient vectors c with sum c_s (f, h_s) = 0 per f.
    let rows: Vec<QVector> = functionals
        .iter()
        .map(|f| cartan.iter().map(|h| crate::qlinalg::dot(f, h)).collect())
        .collect();
    if rows.is_empty() {
        return cartan;
    }
    let m = QMatrix::new(rows, cartan.len());
    m.kernel()
        .into_iter()
        .map(|c| {
            let mut v = crate::qlinalg::zero_vec(rs.ambient);
            for (ci, h) in c.iter().zip(&cartan) {
                v = crate::qlinalg::vec_axpy(&v, ci, h);
            }
            v
        })
        .collect()
}

pub fn resolve(rs: &RootSystem, spec: &SubalgebraSpec) -> Result<ResolvedSpec, SpecError> {
    let root_of = |coords: &[RatS]| -> Result<usize, SpecError> {
        let v = from_rats(coords);
        if v.len() != rs.ambient {
            return Err(SpecError::BadDimension {
                expected: rs.ambient,
                got: v.len(),
            });
        }
        rs.root_index(&v)
            .ok_or_else(|| SpecError::NotARoot(crate::chevalley::fmt_vec(&v)))
    };

    let toral_basis = match spec.toral.kind.as_str() {
        "full" => cartan_basis(rs),
        "kernel" => {
            let fs: Vec<QVector> = spec
                .toral
                .functionals
                .iter()
                .map(|f| {
                    let v = from_rats(f);
                    if v.len() != rs.ambient {
                        Err(SpecError::BadDimension {
                            expected: rs.ambient,
                            got: v.len(),
                        })
                    } else {
                        Ok(v)
                    }
                })
                .collect::<Result<_, _>>()?;
            toral_kernel_basis(rs, &fs)
        }
        other => return Err(SpecError::BadToralKind(other.to_string())),
    };

    let mut root_spaces = Vec::new();
    for coords in &spec.root_spaces {
        root_spaces.push(root_of(coords)?);
    }

    let mut mixed = Vec::new();
    for (li, line) in spec.mixed.iter().enumerate() {
        if line.is_empty() {
            return Err(SpecError::EmptyLine(li));
        }
        let mut resolved_line = Vec::new();
        for term in line {
            let idx = root_of(&term.root)?;
            resolved_line.push((idx, term.coeff.as_ref().map(|c| c.0.clone())));
        }
        let mut seen: Vec<usize> = resolved_line.iter().map(|(i, _)| *i).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != resolved_line.len() {
            return Err(SpecError::RepeatedRoot(li));
        }
        // Homogeneity: all member roots must restrict equally to the toral part.
        for k in 1..resolved_line.len() {
            let (a, b) = (resolved_line[0].0, resolved_line[k].0);
            let diff = crate::qlinalg::vec_sub(rs.root(a), rs.root(b));
            if toral_basis
                .iter()
                .any(|h| !crate::qlinalg::dot(&diff, h).is_zero())
            {
                return Err(SpecError::NotHomogeneous {
                    line: li,
                    a: crate::chevalley::fmt_vec(rs.root(a)),
                    b: crate::chevalley::fmt_vec(rs.root(b)),
                });
            }
        }
        mixed.push(resolved_line);
    }

    Ok(ResolvedSpec {
        toral_basis,
        root_spaces,
        mixed,
    })
}

/// Rebuild a serializable spec from a resolved one (known coefficients only).
pub fn unresolve(rs: &RootSystem, toral: ToralSpec, r: &ResolvedSpec) -> SubalgebraSpec {
    SubalgebraSpec {
        toral,
        root_spaces: r
            .root_spaces
            .iter()
            .map(|&i| to_rats(rs.root(i)))
            .collect(),
        mixed: r
            .mixed
            .iter()
            .map(|line| {
                line.iter()
                    .map(|(i, c)| MixedTerm {
                        root: to_rats(rs.root(*i)),
                        coeff: c.clone().map(RatS),
                    })
                    .collect()
            })
            .collect(),
    }
}
