//! The JSON spec-file format: Grothendieck data, dimensions and m-vectors
//! as scalar literal strings.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{FamilyInstance, MValue};
use crate::grothendieck::FusionData;
use crate::linalg::IntMatrix;
use crate::modcat::ModuleActionData;
use crate::pivotalization::PivotalizationData;
use crate::scalar::literal::{parse_cyc, parse_factored, torus_rank};
use crate::scalar::{CycField, CycNum, NumericScalar, DEFAULT_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendMode {
    Cyclotomic,
    Numeric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalarBackend {
    pub mode: BackendMode,
    /// `z` in literals is a primitive `order`-th root of unity.
    pub order: u64,
    /// Comparison tolerance in numeric mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusBlock {
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryBlock {
    pub labels: Vec<String>,
    pub unit: String,
    pub dual: IndexMap<String, String>,
    /// `[q, r, s, c]`: `X_q X_r` contains `X_s` with multiplicity `c`.
    pub fusion: Vec<(String, String, String, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<IntMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlock {
    pub labels: Vec<String>,
    /// Category label ↦ `N_r` with `N_r[j][i] = N_{ri}^j`.
    pub action: IndexMap<String, IntMatrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PivotalizationBlock {
    pub nu: Vec<String>,
    pub n_plus: IndexMap<String, IntMatrix>,
    pub n_minus: IndexMap<String, IntMatrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub scalar_backend: ScalarBackend,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<TorusBlock>,
    pub category: CategoryBlock,
    pub module: ModuleBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_vector: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivotalization: Option<PivotalizationBlock>,
}

/// A validated document with all literals parsed exactly.
#[derive(Debug, Clone)]
pub struct LoadedSpec {
    pub mode: BackendMode,
    pub tolerance: f64,
    pub field: CycField,
    pub torus_rank: usize,
    pub fusion: FusionData<CycNum>,
    pub module: ModuleActionData,
    /// `None` when the document carries no m-vector.
    pub m: Option<MValue>,
    pub pivotalization: Option<PivotalizationData<CycNum>>,
}

impl LoadedSpec {
    /// The fusion data with dims as floats, for numeric mode.
    pub fn numeric_fusion(&self) -> FusionData<NumericScalar> {
        self.fusion.map_dims(|d| NumericScalar::new(d.to_complex(), self.tolerance))
    }

    pub fn to_numeric(&self, v: &[CycNum]) -> Vec<NumericScalar> {
        v.iter().map(|x| NumericScalar::new(x.to_complex(), self.tolerance)).collect()
    }
}

fn locate(path: &str, e: Error) -> Error {
    match e {
        Error::Parse { line, column, message } => Error::Parse { line, column, message: format!("{path}: {message}") },
        other => other,
    }
}

fn label_index(labels: &[String], label: &str, what: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::Schema(format!("{what} references undeclared label '{label}'")))
}

fn check_labels(labels: &[String], what: &str) -> Result<()> {
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::Schema(format!("{what} declares label '{l}' twice")));
        }
    }
    Ok(())
}

/// Orders a label-keyed matrix map by category label, requiring every label.
fn matrices_by_label(map: &IndexMap<String, IntMatrix>, labels: &[String], what: &str) -> Result<Vec<IntMatrix>> {
    for key in map.keys() {
        label_index(labels, key, what)?;
    }
    labels
        .iter()
        .map(|l| map.get(l).cloned().ok_or_else(|| Error::Schema(format!("{what} is missing label '{l}'"))))
        .collect()
}

impl SpecDocument {
    /// Parses JSON; syntax and schema errors carry line and column.
    pub fn from_json(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Checks label references and shapes and parses every literal.
    pub fn load(&self) -> Result<LoadedSpec> {
        let field = CycField::new(self.scalar_backend.order)?;
        let tolerance = self.scalar_backend.precision.unwrap_or(DEFAULT_TOLERANCE);
        if tolerance.is_nan() || tolerance <= 0.0 {
            return Err(Error::Schema("scalar_backend.precision must be positive".into()));
        }
        let cat = &self.category;
        check_labels(&cat.labels, "category")?;
        let unit = label_index(&cat.labels, &cat.unit, "category.unit")?;
        let mut dual = vec![usize::MAX; cat.labels.len()];
        for (a, b) in &cat.dual {
            dual[label_index(&cat.labels, a, "category.dual")?] = label_index(&cat.labels, b, "category.dual")?;
        }
        if let Some(i) = dual.iter().position(|&d| d == usize::MAX) {
            return Err(Error::Schema(format!("category.dual is missing label '{}'", cat.labels[i])));
        }
        let mut constants = std::collections::BTreeMap::new();
        for (q, r, s, c) in &cat.fusion {
            let key = (
                label_index(&cat.labels, q, "category.fusion")?,
                label_index(&cat.labels, r, "category.fusion")?,
                label_index(&cat.labels, s, "category.fusion")?,
            );
            if constants.insert(key, *c).is_some() {
                return Err(Error::Schema(format!("category.fusion lists ({q}, {r}, {s}) twice")));
            }
        }
        let dims = cat
            .dims
            .as_ref()
            .map(|ds| {
                ds.iter()
                    .enumerate()
                    .map(|(i, d)| parse_cyc(d, &field).map_err(|e| locate(&format!("category.dims[{i}]"), e)))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        let fusion = FusionData::new(cat.labels.clone(), unit, dual, constants, cat.cartan.clone(), dims)?;

        check_labels(&self.module.labels, "module")?;
        let action = matrices_by_label(&self.module.action, &cat.labels, "module.action")?;
        let module = ModuleActionData::new(self.module.labels.clone(), action)?;

        let declared = self.torus.as_ref().map(|t| t.rank);
        let mut rank = declared.unwrap_or(0);
        if let Some(ms) = &self.m_vector {
            for (i, m) in ms.iter().enumerate() {
                let k = torus_rank(m).map_err(|e| locate(&format!("m_vector[{i}]"), e))?;
                match declared {
                    Some(d) if k > d => {
                        return Err(Error::Schema(format!("m_vector[{i}] uses L{k} but torus.rank is {d}")));
                    }
                    _ => rank = rank.max(k),
                }
            }
        }
        let m = match &self.m_vector {
            None => None,
            Some(ms) if ms.len() != module.size() => {
                return Err(Error::DimensionMismatch(format!(
                    "m_vector has {} entries, module has {} labels",
                    ms.len(),
                    module.size()
                )));
            }
            Some(ms) if rank == 0 => Some(MValue::Exact(
                ms.iter()
                    .enumerate()
                    .map(|(i, m)| parse_cyc(m, &field).map_err(|e| locate(&format!("m_vector[{i}]"), e)))
                    .collect::<Result<_>>()?,
            )),
            Some(ms) => Some(MValue::Symbolic(
                ms.iter()
                    .enumerate()
                    .map(|(i, m)| parse_factored(m, &field, rank).map_err(|e| locate(&format!("m_vector[{i}]"), e)))
                    .collect::<Result<_>>()?,
            )),
        };
        if rank > 0 && self.scalar_backend.mode == BackendMode::Numeric {
            return Err(Error::Schema("symbolic m_vector requires the cyclotomic backend".into()));
        }

        let pivotalization = self
            .pivotalization
            .as_ref()
            .map(|p| {
                let nu = p
                    .nu
                    .iter()
                    .enumerate()
                    .map(|(i, v)| parse_cyc(v, &field).map_err(|e| locate(&format!("pivotalization.nu[{i}]"), e)))
                    .collect::<Result<Vec<_>>>()?;
                Ok::<_, Error>(PivotalizationData {
                    nu,
                    n_plus: matrices_by_label(&p.n_plus, &cat.labels, "pivotalization.n_plus")?,
                    n_minus: matrices_by_label(&p.n_minus, &cat.labels, "pivotalization.n_minus")?,
                })
            })
            .transpose()?;

        Ok(LoadedSpec {
            mode: self.scalar_backend.mode,
            tolerance,
            field,
            torus_rank: rank,
            fusion,
            module,
            m,
            pivotalization,
        })
    }

    /// The document describing a generated family member.
    pub fn from_family(fam: &FamilyInstance) -> Self {
        let f = &fam.fusion;
        let labels = f.labels.clone();
        let fusion = f
            .constants
            .iter()
            .map(|(&(q, r, s), &c)| (labels[q].clone(), labels[r].clone(), labels[s].clone(), c))
            .collect();
        let (torus, m_vector) = match &fam.m {
            MValue::Exact(m) => (None, Some(m.iter().map(CycNum::to_literal).collect())),
            MValue::Symbolic(m) => (
                m.first().map(|v| TorusBlock { rank: v.nvars() }),
                Some(m.iter().map(|v| v.to_literal()).collect()),
            ),
            MValue::Unmatched(_) => (None, None),
        };
        SpecDocument {
            scalar_backend: ScalarBackend { mode: BackendMode::Cyclotomic, order: fam.field.order(), precision: None },
            torus,
            category: CategoryBlock {
                labels: labels.clone(),
                unit: labels[f.unit].clone(),
                dual: (0..f.rank()).map(|r| (labels[r].clone(), labels[f.dual[r]].clone())).collect(),
                fusion,
                cartan: f.cartan.clone(),
                dims: f.dims.as_ref().map(|d| d.iter().map(CycNum::to_literal).collect()),
            },
            module: ModuleBlock {
                labels: fam.module.labels.clone(),
                action: labels.iter().cloned().zip(fam.module.action.iter().cloned()).collect(),
            },
            m_vector,
            pivotalization: None,
        }
    }

    /// Attaches the pivotalization block.
    pub fn with_pivotalization(mut self, p: &PivotalizationData<CycNum>) -> Self {
        let labels = &self.category.labels;
        self.pivotalization = Some(PivotalizationBlock {
            nu: p.nu.iter().map(CycNum::to_literal).collect(),
            n_plus: labels.iter().cloned().zip(p.n_plus.iter().cloned()).collect(),
            n_minus: labels.iter().cloned().zip(p.n_minus.iter().cloned()).collect(),
        });
        self
    }
}
