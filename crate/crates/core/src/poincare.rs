//! Constructive potential recovery: closedness tests, cylinder maps, the
//! homotopy operator, and the recursive solver for `Dξ = ω`.
//!
//! The solver peels off the last axis. Writing `m` for the current
//! dimension, `π* : Ω^q(base) -> Ω^q(cylinder)` replicates components along
//! a new last axis, `s* : Ω^q(cylinder) -> Ω^q(base)` slices at `t = 1` and
//! drops components containing the last axis, and the homotopy operator `K`
//! antidifferences along the last axis. These satisfy
//! `Id - π*∘s* = DK + KD`, which turns a closed form into an exact one,
//! one axis at a time:
//!
//! `ξ = Kω` when `m == q` (the sliced form lives in a zero module), and
//! `ξ = Kω + π*(solve(s*ω))` otherwise.
//!
//! On a finite box the derivative of the reconstructed potential is only
//! defined on the shrunken box, so `Dξ = ω` is guaranteed exactly there and
//! nowhere else: entries of `ω` on the far boundary faces are not
//! constrained by closedness and cannot be matched by any potential.

use crate::error::{CoreError, Result};
use crate::forms::{exterior_derivative, partial, GridForm, ScalarGrid};
use crate::lattice::{LatticeBox, LatticePoint, MultiIndex};

/// A potential together with the sub-box on which its derivative is
/// guaranteed to reproduce the input.
#[derive(Debug, Clone)]
pub struct PotentialResult {
    pub potential: GridForm,
    pub guarantee_box: LatticeBox,
}

/// True iff `Dω` vanishes. Top-degree forms are closed by convention.
pub fn check_closed(form: &GridForm) -> Result<bool> {
    Ok(closedness_violation(form)?.is_none())
}

/// The first component/point (in enumeration order) where `Dω` is nonzero,
/// or `None` when the form is closed. Top-degree forms never violate.
pub fn closedness_violation(form: &GridForm) -> Result<Option<(MultiIndex, LatticePoint)>> {
    if form.degree() == form.dimension() {
        return Ok(None);
    }
    let derivative = exterior_derivative(form)?;
    for (mi, grid) in derivative.components() {
        for (offset, value) in grid.values().iter().enumerate() {
            if !form.ring().is_zero(value) {
                return Ok(Some((mi.clone(), grid.domain().point_at(offset))));
            }
        }
    }
    Ok(None)
}

/// Pullback along the projection that forgets a new last axis: every
/// component is replicated along the added axis, and components containing
/// the new axis are zero.
pub fn pullback_cylinder(form: &GridForm, t_extent: usize) -> Result<GridForm> {
    let cylinder = form.domain().with_axis(t_extent)?;
    let new_axis = cylinder.dimension();
    GridForm::from_fn(form.ring().clone(), cylinder, form.degree(), |mi, p| {
        if mi.contains(new_axis) {
            form.ring().zero()
        } else {
            form.get(mi, &p.base_point())
                .expect("base component and point exist")
                .clone()
        }
    })
}

/// Pullback along the slice embedding `t = 1`: components without the last
/// axis are sliced there, components containing it are discarded.
pub fn restrict_base(form: &GridForm) -> Result<GridForm> {
    let base = form.domain().base_box()?;
    if form.degree() > base.dimension() {
        // the restricted form would live in a zero module with no valid degree
        return Err(CoreError::Degree(format!(
            "cannot restrict a degree-{} form to a {}-dimensional base",
            form.degree(),
            base.dimension()
        )));
    }
    GridForm::from_fn(form.ring().clone(), base, form.degree(), |mi, p| {
        form.get(mi, &p.with_coord(1))
            .expect("sliced component and point exist")
            .clone()
    })
}

/// The homotopy operator: antidifference along the last axis.
///
/// Components without the last axis contribute nothing. A component
/// `f_I dx_I` with the last axis in `I` contributes
/// `σ (Σ_{k=1}^{t-1} f_I(·, k)) dx_{I \ {last}}` with `σ = (-1)^(|I|-1)`,
/// the sign of commuting `dx_last` to the front of `dx_I`. The sum at
/// `t = 1` is empty, hence zero.
pub fn homotopy_k(form: &GridForm) -> Result<GridForm> {
    if form.degree() == 0 {
        return Err(CoreError::Degree(
            "homotopy operator needs degree >= 1".into(),
        ));
    }
    let ring = form.ring().clone();
    let domain = form.domain().clone();
    let last = domain.dimension();
    let t_extent = domain.extent(last);

    // distinct sources have distinct targets, so each target is built once
    let sigma_negative = (form.degree() - 1) % 2 == 1;
    let mut components = std::collections::BTreeMap::new();
    for (mi, grid) in form.components() {
        if !mi.contains(last) {
            continue;
        }
        // prefix sums along the last axis: out(·, t) = Σ_{k<t} f(·, k); the
        // last axis is the fastest-varying one, so the sweep runs in blocks
        let mut values = vec![ring.zero(); domain.volume()];
        for block in 0..domain.volume() / t_extent {
            let start = block * t_extent;
            let mut acc = ring.zero();
            for t in 0..t_extent {
                values[start + t] = acc.clone();
                acc = ring.add(&acc, grid.value_at(start + t));
            }
        }
        if sigma_negative {
            for v in &mut values {
                *v = ring.neg(v);
            }
        }
        components.insert(
            mi.without(last),
            ScalarGrid::new(ring.clone(), domain.clone(), values)?,
        );
    }
    for mi in MultiIndex::all(domain.dimension(), form.degree() - 1) {
        components
            .entry(mi)
            .or_insert_with(|| ScalarGrid::zero(ring.clone(), domain.clone()));
    }
    GridForm::new(ring, domain, form.degree() - 1, components)
}

/// Solves `Dξ = ω` for a closed form of degree >= 1, returning a potential
/// on the input box whose derivative reproduces `ω` on the shrunken box.
///
/// Closedness is checked eagerly; a non-closed input is rejected with the
/// first violating component and point. The recursion itself preserves
/// closedness, so inner levels do not re-check.
pub fn solve_potential(form: &GridForm) -> Result<PotentialResult> {
    if form.degree() == 0 {
        return Err(CoreError::Degree(
            "potentials exist for degree >= 1 only".into(),
        ));
    }
    let guarantee_box = form.domain().shrink()?;
    if let Some((component, point)) = closedness_violation(form)? {
        return Err(CoreError::NotClosed { component, point });
    }
    let potential = solve_recursive(form)?;
    Ok(PotentialResult {
        potential,
        guarantee_box,
    })
}

fn solve_recursive(form: &GridForm) -> Result<GridForm> {
    let k_part = homotopy_k(form)?;
    if form.dimension() == form.degree() {
        return Ok(k_part);
    }
    let sliced = restrict_base(form)?;
    let inner = solve_recursive(&sliced)?;
    let lifted = pullback_cylinder(&inner, form.domain().extent(form.dimension()))?;
    k_part.add(&lifted)
}

/// Solves the gradient system `∂_i F = f_i` by iterated path sums:
///
/// `F(n) = Σ_{k<n_1} f_1(k, 1, ..., 1) + Σ_{k<n_2} f_2(n_1, k, 1, ..., 1)
///       + ... + Σ_{k<n_d} f_d(n_1, ..., n_{d-1}, k)`.
///
/// Requires `∂_i f_j = ∂_j f_i` for every pair, checked on the region where
/// both sides are evaluable (shrunk in axes i and j only). The result
/// satisfies `∂_i F = f_i` on the shrunken box; it is an independent
/// construction of the same potential the degree-1 homotopy recursion
/// produces.
pub fn pathsum_scalar_potential(fields: &[ScalarGrid]) -> Result<ScalarGrid> {
    if fields.is_empty() {
        return Err(CoreError::Validation("no component grids given".into()));
    }
    let ring = fields[0].ring().clone();
    let domain = fields[0].domain().clone();
    let d = domain.dimension();
    if fields.len() != d {
        return Err(CoreError::Validation(format!(
            "expected {d} component grids, got {}",
            fields.len()
        )));
    }
    for f in fields {
        if f.ring() != &ring || f.domain() != &domain {
            return Err(CoreError::Mismatch(
                "component grids differ in ring or box".into(),
            ));
        }
    }
    // the guarantee region must be nonempty, as for the homotopy solver
    domain.shrink()?;
    // compatibility on the pairwise-shrunken regions
    for i in 1..=d {
        for j in (i + 1)..=d {
            let dj_fi = partial(&fields[i - 1], j)?;
            let di_fj = partial(&fields[j - 1], i)?;
            let region = domain.shrink_axis(i)?.shrink_axis(j)?;
            for p in region.points() {
                let lhs = di_fj.get(&p)?;
                let rhs = dj_fi.get(&p)?;
                if !ring.eq(lhs, rhs) {
                    return Err(CoreError::NotClosed {
                        component: MultiIndex::new(vec![i, j]).expect("i < j"),
                        point: p,
                    });
                }
            }
        }
    }

    ScalarGrid::from_fn(ring.clone(), domain.clone(), |n| {
        let mut total = ring.zero();
        for axis in 1..=d {
            // argument pattern (n_1, ..., n_{axis-1}, k, 1, ..., 1)
            let mut coords: Vec<usize> = n.coords().to_vec();
            for c in coords.iter_mut().skip(axis) {
                *c = 1;
            }
            for k in 1..n.coord(axis) {
                coords[axis - 1] = k;
                let p = LatticePoint::new(coords.clone()).expect("positive coords");
                total = ring.add(&total, fields[axis - 1].get(&p).expect("point inside box"));
            }
        }
        total
    })
}

/// True iff every forward difference of a 0-form vanishes wherever it is
/// evaluable, i.e. the grid lies in the kernel of the gradient.
///
/// The differences are tested on the per-axis domains (shrunk only in the
/// differentiated axis), which on a finite box is exactly what makes the
/// kernel the constant grids: testing only the uniformly shrunken box would
/// leave entries near the far corner unconstrained.
pub fn h0_kernel_check(form: &GridForm) -> Result<bool> {
    let grid = form.as_scalar()?;
    for axis in 1..=form.dimension() {
        if !partial(grid, axis)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff all entries equal the entry at the origin corner.
pub fn is_constant_grid(grid: &ScalarGrid) -> bool {
    let first = match grid.values().first() {
        Some(v) => v,
        None => return true,
    };
    grid.values().iter().all(|v| grid.ring().eq(v, first))
}
