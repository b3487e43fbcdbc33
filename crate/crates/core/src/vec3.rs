//! Vector calculus for triples of grids on three-dimensional boxes.
//!
//! Gradient, curl, and divergence are the exterior derivative in degrees
//! 0, 1, and 2, transported through fixed encodings:
//!
//! - a field `(b_1, b_2, b_3)` as the 1-form `b_1 dx₁ + b_2 dx₂ + b_3 dx₃`;
//! - a field `(a_1, a_2, a_3)` as the 2-form
//!   `a_1 dx₂∧dx₃ - a_2 dx₁∧dx₃ + a_3 dx₁∧dx₂`.
//!
//! The sign on the middle 2-form component is what makes the componentwise
//! formulas come out as `curl b = (∂₂b₃-∂₃b₂, ∂₃b₁-∂₁b₃, ∂₁b₂-∂₂b₁)` and
//! `div a = ∂₁a₁ + ∂₂a₂ + ∂₃a₃`. Potentials are recovered by the recursive
//! solver on the encoded forms.

use std::collections::BTreeMap;

use crate::error::{CoreError, Result};
use crate::forms::{exterior_derivative, GridForm, ScalarGrid};
use crate::lattice::{LatticeBox, MultiIndex};
use crate::poincare::solve_potential;
use crate::ring::Ring;

/// Three scalar grids over one three-dimensional box.
#[derive(Debug, Clone)]
pub struct VectorField3 {
    comps: [ScalarGrid; 3],
}

impl VectorField3 {
    pub fn new(a1: ScalarGrid, a2: ScalarGrid, a3: ScalarGrid) -> Result<Self> {
        if a1.domain().dimension() != 3 {
            return Err(CoreError::Validation(format!(
                "vector fields need a 3-dimensional box, got {:?}",
                a1.domain().extents()
            )));
        }
        for other in [&a2, &a3] {
            if other.ring() != a1.ring() || other.domain() != a1.domain() {
                return Err(CoreError::Mismatch(
                    "field components differ in ring or box".into(),
                ));
            }
        }
        Ok(VectorField3 {
            comps: [a1, a2, a3],
        })
    }

    pub fn zero(ring: Ring, domain: LatticeBox) -> Result<Self> {
        let grid = ScalarGrid::zero(ring, domain);
        VectorField3::new(grid.clone(), grid.clone(), grid)
    }

    pub fn ring(&self) -> &Ring {
        self.comps[0].ring()
    }

    pub fn domain(&self) -> &LatticeBox {
        self.comps[0].domain()
    }

    /// Component along a 1-based axis.
    pub fn component(&self, axis: usize) -> &ScalarGrid {
        &self.comps[axis - 1]
    }

    pub fn components(&self) -> &[ScalarGrid; 3] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|g| g.is_zero())
    }

    pub fn equals(&self, other: &VectorField3) -> bool {
        self.comps
            .iter()
            .zip(&other.comps)
            .all(|(a, b)| a.equals(b))
    }

    pub fn restrict(&self, sub: &LatticeBox) -> Result<VectorField3> {
        VectorField3::new(
            self.comps[0].restrict(sub)?,
            self.comps[1].restrict(sub)?,
            self.comps[2].restrict(sub)?,
        )
    }
}

fn mi(indices: Vec<usize>) -> MultiIndex {
    MultiIndex::new(indices).expect("static multi-index")
}

/// Encodes a field as the 1-form `b₁ dx₁ + b₂ dx₂ + b₃ dx₃`.
pub fn field_to_one_form(field: &VectorField3) -> GridForm {
    let mut components = BTreeMap::new();
    for axis in 1..=3 {
        components.insert(mi(vec![axis]), field.component(axis).clone());
    }
    GridForm::new(field.ring().clone(), field.domain().clone(), 1, components)
        .expect("components cover all singletons")
}

/// Decodes a 1-form on a three-dimensional box back into a field.
pub fn one_form_to_field(form: &GridForm) -> Result<VectorField3> {
    if form.dimension() != 3 || form.degree() != 1 {
        return Err(CoreError::Validation(format!(
            "expected a 1-form in dimension 3, got degree {} in dimension {}",
            form.degree(),
            form.dimension()
        )));
    }
    VectorField3::new(
        form.component(&mi(vec![1]))?.clone(),
        form.component(&mi(vec![2]))?.clone(),
        form.component(&mi(vec![3]))?.clone(),
    )
}

/// Encodes a field as the 2-form `a₁ dx₂∧dx₃ - a₂ dx₁∧dx₃ + a₃ dx₁∧dx₂`.
pub fn field_to_two_form(field: &VectorField3) -> GridForm {
    let mut components = BTreeMap::new();
    components.insert(mi(vec![2, 3]), field.component(1).clone());
    components.insert(mi(vec![1, 3]), field.component(2).neg());
    components.insert(mi(vec![1, 2]), field.component(3).clone());
    GridForm::new(field.ring().clone(), field.domain().clone(), 2, components)
        .expect("components cover all pairs")
}

/// Decodes a 2-form on a three-dimensional box back into a field.
pub fn two_form_to_field(form: &GridForm) -> Result<VectorField3> {
    if form.dimension() != 3 || form.degree() != 2 {
        return Err(CoreError::Validation(format!(
            "expected a 2-form in dimension 3, got degree {} in dimension {}",
            form.degree(),
            form.dimension()
        )));
    }
    VectorField3::new(
        form.component(&mi(vec![2, 3]))?.clone(),
        form.component(&mi(vec![1, 3]))?.neg(),
        form.component(&mi(vec![1, 2]))?.clone(),
    )
}

/// `grad f = (∂₁f, ∂₂f, ∂₃f)` on the shrunken box.
pub fn grad(f: &ScalarGrid) -> Result<VectorField3> {
    if f.domain().dimension() != 3 {
        return Err(CoreError::Validation(
            "grad is defined on 3-dimensional boxes".into(),
        ));
    }
    let derivative = exterior_derivative(&GridForm::from_scalar(f.clone()))?;
    one_form_to_field(&derivative)
}

/// `curl b = (∂₂b₃-∂₃b₂, ∂₃b₁-∂₁b₃, ∂₁b₂-∂₂b₁)` on the shrunken box.
pub fn curl(b: &VectorField3) -> Result<VectorField3> {
    let derivative = exterior_derivative(&field_to_one_form(b))?;
    two_form_to_field(&derivative)
}

/// `div a = ∂₁a₁ + ∂₂a₂ + ∂₃a₃` on the shrunken box.
pub fn div(a: &VectorField3) -> Result<ScalarGrid> {
    let derivative = exterior_derivative(&field_to_two_form(a))?;
    Ok(derivative.component(&mi(vec![1, 2, 3]))?.clone())
}

/// Solves `grad b = a` for a scalar grid `b` on the input box; requires
/// `∂_j a_i = ∂_i a_j`, rejected otherwise with the violating pair and
/// point. The gradient reproduces `a` on the shrunken box.
pub fn scalar_potential3(a: &VectorField3) -> Result<ScalarGrid> {
    let result = solve_potential(&field_to_one_form(a))?;
    Ok(result.potential.as_scalar()?.clone())
}

/// Solves `curl b = a` for a field `b` on the input box; requires
/// `div a = 0`, rejected otherwise with the violating point. The curl
/// reproduces `a` on the shrunken box.
pub fn vector_potential3(a: &VectorField3) -> Result<VectorField3> {
    let result = solve_potential(&field_to_two_form(a))?;
    one_form_to_field(&result.potential)
}
