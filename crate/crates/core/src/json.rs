//! JSON schemas for forms, chains, and three-dimensional vector fields.
//!
//! Every ring element is serialized as a string, so exact values survive
//! the trip regardless of magnitude. Component arrays are flattened
//! row-major with the last axis fastest; multi-index keys are
//! comma-separated ascending axis numbers, with the empty string keying the
//! single degree-0 component. Serialization is canonical: serializing a
//! parsed file reproduces it byte for byte whenever the file itself was
//! produced by this module.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chains::{Cell, Chain};
use crate::error::{CoreError, Result};
use crate::forms::{GridForm, ScalarGrid};
use crate::lattice::{LatticeBox, LatticePoint, MultiIndex};
use crate::ring::{Ring, RingSpec};
use crate::vec3::VectorField3;

/// On-disk representation of a [`GridForm`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormJson {
    pub dimension: usize,
    pub extents: Vec<usize>,
    pub ring: RingSpec,
    pub degree: usize,
    pub components: BTreeMap<String, Vec<String>>,
}

/// On-disk representation of a [`Chain`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainJson {
    pub dimension: usize,
    pub degree: usize,
    pub ring: RingSpec,
    pub cells: Vec<CellJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellJson {
    pub base: Vec<usize>,
    pub dirs: Vec<usize>,
    pub coeff: String,
}

/// On-disk representation of a [`VectorField3`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VectorFieldJson {
    pub kind: String,
    pub dimension: usize,
    pub extents: Vec<usize>,
    pub ring: RingSpec,
    pub components: BTreeMap<String, Vec<String>>,
}

pub const VECTOR_FIELD_KIND: &str = "vecfield3";

fn multi_index_key(mi: &MultiIndex) -> String {
    mi.indices()
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_multi_index_key(key: &str) -> Result<MultiIndex> {
    if key.is_empty() {
        return Ok(MultiIndex::empty());
    }
    let indices = key
        .split(',')
        .map(|part| {
            part.parse::<usize>()
                .map_err(|e| CoreError::Parse(format!("bad multi-index key {key:?}: {e}")))
        })
        .collect::<Result<Vec<usize>>>()?;
    MultiIndex::new(indices)
        .map_err(|_| CoreError::Parse(format!("multi-index key {key:?} is not ascending")))
}

impl FormJson {
    pub fn from_form(form: &GridForm) -> FormJson {
        let ring = form.ring();
        let components = form
            .components()
            .iter()
            .map(|(mi, grid)| {
                (
                    multi_index_key(mi),
                    grid.values().iter().map(|v| ring.format(v)).collect(),
                )
            })
            .collect();
        FormJson {
            dimension: form.dimension(),
            extents: form.domain().extents().to_vec(),
            ring: ring.spec(),
            degree: form.degree(),
            components,
        }
    }

    pub fn to_form(&self) -> Result<GridForm> {
        if self.extents.len() != self.dimension {
            return Err(CoreError::Parse(format!(
                "dimension {} does not match {} extents",
                self.dimension,
                self.extents.len()
            )));
        }
        let ring = Ring::from_spec(&self.ring)?;
        let domain = LatticeBox::new(self.extents.clone())?;
        let mut components = BTreeMap::new();
        for (key, raw_values) in &self.components {
            let mi = parse_multi_index_key(key)?;
            let values = raw_values
                .iter()
                .map(|s| ring.parse(s))
                .collect::<Result<Vec<_>>>()?;
            components.insert(mi, ScalarGrid::new(ring.clone(), domain.clone(), values)?);
        }
        GridForm::new(ring, domain, self.degree, components)
    }
}

impl ChainJson {
    pub fn from_chain(chain: &Chain) -> ChainJson {
        let ring = chain.ring();
        let cells = chain
            .terms()
            .map(|(cell, coeff)| CellJson {
                base: cell.base().coords().to_vec(),
                dirs: cell.dirs().indices().to_vec(),
                coeff: ring.format(coeff),
            })
            .collect();
        ChainJson {
            dimension: chain.dimension(),
            degree: chain.degree(),
            ring: ring.spec(),
            cells,
        }
    }

    pub fn to_chain(&self) -> Result<Chain> {
        let ring = Ring::from_spec(&self.ring)?;
        let mut terms = Vec::with_capacity(self.cells.len());
        for cell in &self.cells {
            let base = LatticePoint::new(cell.base.clone())?;
            if base.dimension() != self.dimension {
                return Err(CoreError::Parse(format!(
                    "cell base {:?} does not match dimension {}",
                    cell.base, self.dimension
                )));
            }
            let dirs = MultiIndex::new(cell.dirs.clone())?;
            if dirs.len() != self.degree {
                return Err(CoreError::Parse(format!(
                    "cell dirs {:?} do not match degree {}",
                    cell.dirs, self.degree
                )));
            }
            terms.push((Cell::new(base, dirs)?, ring.parse(&cell.coeff)?));
        }
        Chain::from_terms(ring, self.dimension, self.degree, terms)
    }
}

impl VectorFieldJson {
    pub fn from_field(field: &VectorField3) -> VectorFieldJson {
        let ring = field.ring();
        let components = (1..=3)
            .map(|axis| {
                (
                    format!("a{axis}"),
                    field
                        .component(axis)
                        .values()
                        .iter()
                        .map(|v| ring.format(v))
                        .collect(),
                )
            })
            .collect();
        VectorFieldJson {
            kind: VECTOR_FIELD_KIND.to_string(),
            dimension: 3,
            extents: field.domain().extents().to_vec(),
            ring: ring.spec(),
            components,
        }
    }

    pub fn to_field(&self) -> Result<VectorField3> {
        if self.kind != VECTOR_FIELD_KIND {
            return Err(CoreError::Parse(format!(
                "expected kind {VECTOR_FIELD_KIND:?}, got {:?}",
                self.kind
            )));
        }
        if self.dimension != 3 || self.extents.len() != 3 {
            return Err(CoreError::Parse(
                "vector fields live on 3-dimensional boxes".into(),
            ));
        }
        let ring = Ring::from_spec(&self.ring)?;
        let domain = LatticeBox::new(self.extents.clone())?;
        let mut grids = Vec::with_capacity(3);
        for axis in 1..=3 {
            let key = format!("a{axis}");
            let raw = self
                .components
                .get(&key)
                .ok_or_else(|| CoreError::Parse(format!("missing component {key:?}")))?;
            let values = raw
                .iter()
                .map(|s| ring.parse(s))
                .collect::<Result<Vec<_>>>()?;
            grids.push(ScalarGrid::new(ring.clone(), domain.clone(), values)?);
        }
        let a3 = grids.pop().expect("three grids");
        let a2 = grids.pop().expect("three grids");
        let a1 = grids.pop().expect("three grids");
        VectorField3::new(a1, a2, a3)
    }
}

/// Canonical single-line JSON for a form.
pub fn form_to_json_string(form: &GridForm) -> String {
    serde_json::to_string(&FormJson::from_form(form)).expect("form serializes")
}

pub fn form_from_json_str(s: &str) -> Result<GridForm> {
    let parsed: FormJson =
        serde_json::from_str(s).map_err(|e| CoreError::Parse(format!("bad form JSON: {e}")))?;
    parsed.to_form()
}

/// Canonical single-line JSON for a chain.
pub fn chain_to_json_string(chain: &Chain) -> String {
    serde_json::to_string(&ChainJson::from_chain(chain)).expect("chain serializes")
}

pub fn chain_from_json_str(s: &str) -> Result<Chain> {
    let parsed: ChainJson =
        serde_json::from_str(s).map_err(|e| CoreError::Parse(format!("bad chain JSON: {e}")))?;
    parsed.to_chain()
}

/// Canonical single-line JSON for a vector field.
pub fn field_to_json_string(field: &VectorField3) -> String {
    serde_json::to_string(&VectorFieldJson::from_field(field)).expect("field serializes")
}

pub fn field_from_json_str(s: &str) -> Result<VectorField3> {
    let parsed: VectorFieldJson =
        serde_json::from_str(s).map_err(|e| CoreError::Parse(format!("bad field JSON: {e}")))?;
    parsed.to_field()
}
