//! JSON input documents: algebras, subalgebras, Lie actions, modules and
//! user-supplied resolutions.
//!
//! Rationals are written as strings `"p/q"`. Vectors are sparse lists of
//! `[index, "c"]`, structure constants are `[i, j, k, "c"]` meaning
//! `e_i e_j = Σ c e_k`, and matrices are lists of `[row, col, "c"]`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    AugmentedSubalgebra, FinAlgebra, LeftModule, LieAction, LieAlgebra, ValidationError,
};
use crate::complexes::{AMatrix, ComplexError, FreeAComplex};
use crate::linalg::{format_scalar, parse_scalar, Matrix, Scalar, SparseVec};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("{field}: invalid rational {value:?}")]
    Scalar { field: String, value: String },
    #[error("{context}: {source}")]
    Validation {
        context: String,
        source: ValidationError,
    },
    #[error("resolution: {0}")]
    Complex(#[from] ComplexError),
    #[error("input has no `{0}` section")]
    Missing(&'static str),
    #[error("unknown module {0:?}")]
    UnknownModule(String),
}

impl InputError {
    /// The violated axiom, for validation failures.
    pub fn axiom(&self) -> Option<&'static str> {
        match self {
            Self::Validation { source, .. } => Some(source.axiom()),
            _ => None,
        }
    }
}

pub type Entry = (usize, String);
pub type Triple = (usize, usize, usize, String);
pub type MatrixEntry = (usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub unit: Vec<Entry>,
    pub structure: Vec<Triple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraSpec {
    /// Images in `A` of the basis of `B`.
    pub inclusion: Vec<Vec<Entry>>,
    pub eps: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieSpec {
    pub dim: usize,
    #[serde(default)]
    pub bracket: Vec<Triple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub rho: Vec<Vec<Entry>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    #[default]
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub dim: usize,
    #[serde(default)]
    pub side: Side,
    /// One matrix per basis element of `A`.
    pub action: Vec<Vec<MatrixEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub algebra: AlgebraSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra: Option<SubalgebraSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie: Option<LieSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
}

/// A validated input document.
#[derive(Clone, Debug)]
pub struct Problem {
    pub name: Option<String>,
    pub algebra: Arc<FinAlgebra>,
    pub pair: Option<AugmentedSubalgebra>,
    pub action: Option<LieAction>,
    /// Right modules are stored as left modules over the opposite algebra.
    pub modules: BTreeMap<String, (Side, LeftModule)>,
}

fn scalar(field: &str, s: &str) -> Result<Scalar, InputError> {
    parse_scalar(s).map_err(|_| InputError::Scalar {
        field: field.to_string(),
        value: s.to_string(),
    })
}

fn vector(field: &str, entries: &[Entry], dim: usize) -> Result<SparseVec, InputError> {
    let mut pairs = Vec::with_capacity(entries.len());
    for (i, c) in entries {
        if *i >= dim {
            return Err(shape(
                field,
                format!("index {i} out of range for dimension {dim}"),
            ));
        }
        pairs.push((*i, scalar(field, c)?));
    }
    Ok(SparseVec::from_pairs(pairs))
}

fn triples(field: &str, ts: &[Triple]) -> Result<Vec<(usize, usize, usize, Scalar)>, InputError> {
    ts.iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, scalar(field, c)?)))
        .collect()
}

fn matrix(
    field: &str,
    entries: &[MatrixEntry],
    rows: usize,
    cols: usize,
) -> Result<Matrix, InputError> {
    let mut ts = Vec::with_capacity(entries.len());
    for (r, c, x) in entries {
        if *r >= rows || *c >= cols {
            return Err(shape(
                field,
                format!("entry ({r},{c}) outside {rows}x{cols}"),
            ));
        }
        ts.push((*r, *c, scalar(field, x)?));
    }
    Ok(Matrix::from_triplets(rows, cols, ts))
}

fn shape(context: &str, msg: String) -> InputError {
    InputError::Validation {
        context: context.to_string(),
        source: ValidationError::Shape(msg),
    }
}

fn validated<T>(context: &str, r: Result<T, ValidationError>) -> Result<T, InputError> {
    r.map_err(|source| InputError::Validation {
        context: context.to_string(),
        source,
    })
}

fn entries_of(v: &SparseVec) -> Vec<Entry> {
    v.iter().map(|(i, c)| (i, format_scalar(c))).collect()
}

fn matrix_entries(m: &Matrix) -> Vec<MatrixEntry> {
    (0..m.rows())
        .flat_map(|r| m.row(r).iter().map(move |(c, x)| (r, c, format_scalar(x))))
        .collect()
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn validate(&self) -> Result<Problem, InputError> {
        let spec = &self.algebra;
        let labels = match &spec.labels {
            Some(l) if l.len() != spec.dim => {
                return Err(shape(
                    "algebra.labels",
                    format!("{} labels for dimension {}", l.len(), spec.dim),
                ))
            }
            Some(l) => l.clone(),
            None => (0..spec.dim).map(|i| format!("e{i}")).collect(),
        };
        let unit = vector("algebra.unit", &spec.unit, spec.dim)?;
        let algebra = Arc::new(validated(
            "algebra",
            FinAlgebra::from_triples(
                labels,
                unit,
                &triples("algebra.structure", &spec.structure)?,
            ),
        )?);

        let pair = match &self.subalgebra {
            None => None,
            Some(s) => {
                let inclusion = s
                    .inclusion
                    .iter()
                    .map(|col| vector("subalgebra.inclusion", col, algebra.dim()))
                    .collect::<Result<Vec<_>, _>>()?;
                let eps = s
                    .eps
                    .iter()
                    .map(|c| scalar("subalgebra.eps", c))
                    .collect::<Result<Vec<_>, _>>()?;
                if eps.len() != inclusion.len() {
                    return Err(shape(
                        "subalgebra",
                        format!(
                            "{} augmentation values for {} basis vectors",
                            eps.len(),
                            inclusion.len()
                        ),
                    ));
                }
                Some(validated(
                    "subalgebra",
                    AugmentedSubalgebra::new(algebra.clone(), inclusion, eps),
                )?)
            }
        };

        let action = match (&self.lie, &self.action) {
            (None, None) => None,
            (None, Some(_)) => return Err(InputError::Missing("lie")),
            (Some(_), None) => return Err(InputError::Missing("action")),
            (Some(l), Some(a)) => {
                let lie = Arc::new(validated(
                    "lie",
                    LieAlgebra::from_triples(l.dim, &triples("lie.bracket", &l.bracket)?),
                )?);
                let rho = a
                    .rho
                    .iter()
                    .map(|v| vector("action.rho", v, algebra.dim()))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(validated(
                    "action",
                    LieAction::new(lie, algebra.clone(), rho),
                )?)
            }
        };

        let mut modules = BTreeMap::new();
        for (name, m) in &self.modules {
            let field = format!("modules.{name}");
            let over = match m.side {
                Side::Left => algebra.clone(),
                Side::Right => Arc::new(algebra.opposite()),
            };
            let mats = m
                .action
                .iter()
                .map(|e| matrix(&field, e, m.dim, m.dim))
                .collect::<Result<Vec<_>, _>>()?;
            modules.insert(
                name.clone(),
                (
                    m.side,
                    validated(&field, LeftModule::new(over, m.dim, mats))?,
                ),
            );
        }
        Ok(Problem {
            name: self.name.clone(),
            algebra,
            pair,
            action,
            modules,
        })
    }
}

impl Problem {
    pub fn pair(&self) -> Result<&AugmentedSubalgebra, InputError> {
        self.pair.as_ref().ok_or(InputError::Missing("subalgebra"))
    }

    pub fn lie_action(&self) -> Result<&LieAction, InputError> {
        self.action.as_ref().ok_or(InputError::Missing("action"))
    }

    pub fn module(&self, name: &str) -> Result<&(Side, LeftModule), InputError> {
        self.modules
            .get(name)
            .ok_or_else(|| InputError::UnknownModule(name.to_string()))
    }

    pub fn to_document(&self) -> InputDocument {
        let a = &self.algebra;
        let structure = a
            .triples()
            .into_iter()
            .map(|(i, j, k, c)| (i, j, k, format_scalar(&c)))
            .collect();
        InputDocument {
            name: self.name.clone(),
            algebra: AlgebraSpec {
                dim: a.dim(),
                labels: Some(a.labels().to_vec()),
                unit: entries_of(a.unit()),
                structure,
            },
            subalgebra: self.pair.as_ref().map(|b| SubalgebraSpec {
                inclusion: b.inclusion().iter().map(entries_of).collect(),
                eps: b.eps().iter().map(format_scalar).collect(),
            }),
            lie: self.action.as_ref().map(|act| LieSpec {
                dim: act.lie().dim(),
                bracket: act
                    .lie()
                    .triples()
                    .into_iter()
                    .map(|(i, j, k, c)| (i, j, k, format_scalar(&c)))
                    .collect(),
            }),
            action: self.action.as_ref().map(|act| ActionSpec {
                rho: act.rho().iter().map(entries_of).collect(),
            }),
            modules: self
                .modules
                .iter()
                .map(|(n, (side, m))| {
                    let action = m.action().iter().map(matrix_entries).collect();
                    (
                        n.clone(),
                        ModuleSpec {
                            dim: m.dim(),
                            side: *side,
                            action,
                        },
                    )
                })
                .collect(),
        }
    }
}

pub fn read_input(path: &Path) -> Result<Problem, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    InputDocument::from_json(&text)?.validate()
}

/// A complex of free `B`-modules: `differentials[s-1]` lists the entries
/// `[row, col, [[basis index of B, "c"], ...]]` of `d_s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDocument {
    pub fibers: Vec<usize>,
    #[serde(default)]
    pub bounded: bool,
    pub differentials: Vec<Vec<(usize, usize, Vec<Entry>)>>,
}

impl ResolutionDocument {
    pub fn from_complex(x: &FreeAComplex) -> Self {
        let differentials = x
            .differentials()
            .iter()
            .map(|d| d.entries().map(|(i, j, v)| (i, j, entries_of(v))).collect())
            .collect();
        Self {
            fibers: x.fiber_dims().to_vec(),
            bounded: x.is_bounded(),
            differentials,
        }
    }

    /// The complex over `b.algebra()`; exactness is checked later by the Hecke pipeline.
    pub fn to_complex(&self, b: &AugmentedSubalgebra) -> Result<FreeAComplex, InputError> {
        let dim = b.algebra().dim();
        let mut d = Vec::with_capacity(self.differentials.len());
        for (k, entries) in self.differentials.iter().enumerate() {
            let (rows, cols) = match (self.fibers.get(k + 1), self.fibers.get(k)) {
                (Some(r), Some(c)) => (*r, *c),
                _ => {
                    return Err(shape(
                        "resolution",
                        format!("differential d_{} has no fibers", k + 1),
                    ))
                }
            };
            let mut es = Vec::with_capacity(entries.len());
            for (i, j, v) in entries {
                if *i >= rows || *j >= cols {
                    return Err(shape(
                        "resolution",
                        format!("d_{} entry ({i},{j}) outside {rows}x{cols}", k + 1),
                    ));
                }
                es.push((*i, *j, vector("resolution", v, dim)?));
            }
            d.push(AMatrix::from_entries(rows, cols, es));
        }
        Ok(FreeAComplex::new(
            b.algebra().clone(),
            self.fibers.clone(),
            d,
            self.bounded,
        )?)
    }
}

pub fn read_resolution(path: &Path, b: &AugmentedSubalgebra) -> Result<FreeAComplex, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let doc: ResolutionDocument = serde_json::from_str(&text)?;
    doc.to_complex(b)
}
