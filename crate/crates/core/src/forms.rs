//! Discrete differential forms on lattice boxes.
//!
//! A degree-q form assigns one scalar grid to every strictly increasing
//! multi-index of size q. The exterior derivative is built from the forward
//! difference `(∂_i f)(a) = f(a + e_i) - f(a)`; it maps a form on extents
//! `(N_1, ..., N_d)` to a form on the uniformly shrunken box
//! `(N_1 - 1, ..., N_d - 1)`, so that compositions such as `D∘D` stay on
//! rectangular domains without per-component bookkeeping.

use std::collections::BTreeMap;

use crate::error::{CoreError, Result};
use crate::lattice::{LatticeBox, LatticePoint, MultiIndex};
use crate::ring::{Ring, RingElement};

/// Sign of moving `dx_j` past the factors of `dx_I` with smaller index:
/// `+1` when `#{i in I : i < j}` is even, `-1` when odd.
pub fn sign_s(index: &MultiIndex, j: usize) -> i32 {
    let count = index.indices().iter().filter(|&&i| i < j).count();
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A dense grid of ring elements over a box, in row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarGrid {
    ring: Ring,
    domain: LatticeBox,
    values: Vec<RingElement>,
}

impl ScalarGrid {
    pub fn new(ring: Ring, domain: LatticeBox, values: Vec<RingElement>) -> Result<Self> {
        if values.len() != domain.volume() {
            return Err(CoreError::Validation(format!(
                "grid needs {} values for extents {:?}, got {}",
                domain.volume(),
                domain.extents(),
                values.len()
            )));
        }
        for v in &values {
            ring.check(v)?;
        }
        Ok(ScalarGrid {
            ring,
            domain,
            values,
        })
    }

    pub fn zero(ring: Ring, domain: LatticeBox) -> Self {
        let values = vec![ring.zero(); domain.volume()];
        ScalarGrid {
            ring,
            domain,
            values,
        }
    }

    pub fn constant(ring: Ring, domain: LatticeBox, value: RingElement) -> Result<Self> {
        ring.check(&value)?;
        let values = vec![value; domain.volume()];
        Ok(ScalarGrid {
            ring,
            domain,
            values,
        })
    }

    pub fn from_fn(
        ring: Ring,
        domain: LatticeBox,
        f: impl Fn(&LatticePoint) -> RingElement,
    ) -> Result<Self> {
        let values: Vec<RingElement> = domain.points().map(|p| f(&p)).collect();
        ScalarGrid::new(ring, domain, values)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn domain(&self) -> &LatticeBox {
        &self.domain
    }

    pub fn values(&self) -> &[RingElement] {
        &self.values
    }

    pub fn get(&self, p: &LatticePoint) -> Result<&RingElement> {
        Ok(&self.values[self.domain.offset_of(p)?])
    }

    pub(crate) fn value_at(&self, offset: usize) -> &RingElement {
        &self.values[offset]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.ring.is_zero(v))
    }

    /// Pointwise ring equality; false on any ring or domain mismatch.
    pub fn equals(&self, other: &ScalarGrid) -> bool {
        self.ring == other.ring
            && self.domain == other.domain
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| self.ring.eq(a, b))
    }

    fn check_compatible(&self, other: &ScalarGrid) -> Result<()> {
        if self.ring != other.ring {
            return Err(CoreError::Mismatch("grids over different rings".into()));
        }
        if self.domain != other.domain {
            return Err(CoreError::Mismatch(format!(
                "grids over different boxes {:?} vs {:?}",
                self.domain.extents(),
                other.domain.extents()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &ScalarGrid) -> Result<ScalarGrid> {
        self.check_compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(ScalarGrid {
            ring: self.ring.clone(),
            domain: self.domain.clone(),
            values,
        })
    }

    pub fn sub(&self, other: &ScalarGrid) -> Result<ScalarGrid> {
        self.check_compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect();
        Ok(ScalarGrid {
            ring: self.ring.clone(),
            domain: self.domain.clone(),
            values,
        })
    }

    pub fn neg(&self) -> ScalarGrid {
        ScalarGrid {
            ring: self.ring.clone(),
            domain: self.domain.clone(),
            values: self.values.iter().map(|v| self.ring.neg(v)).collect(),
        }
    }

    pub fn scale(&self, r: &RingElement) -> Result<ScalarGrid> {
        self.ring.check(r)?;
        let values = self.values.iter().map(|v| self.ring.mul(r, v)).collect();
        Ok(ScalarGrid {
            ring: self.ring.clone(),
            domain: self.domain.clone(),
            values,
        })
    }

    /// Copies the values over a sub-box anchored at the origin corner.
    pub fn restrict(&self, sub: &LatticeBox) -> Result<ScalarGrid> {
        if !self.domain.contains_box(sub) {
            return Err(CoreError::Validation(format!(
                "{:?} is not a sub-box of {:?}",
                sub.extents(),
                self.domain.extents()
            )));
        }
        let values = sub
            .points()
            .map(|p| self.values[self.domain.offset_of(&p).expect("sub-box point")].clone())
            .collect();
        Ok(ScalarGrid {
            ring: self.ring.clone(),
            domain: sub.clone(),
            values,
        })
    }
}

/// Forward difference along a 1-based axis: `out(a) = f(a + e_i) - f(a)`,
/// on the box shrunk by one in that axis only.
pub fn partial(grid: &ScalarGrid, axis: usize) -> Result<ScalarGrid> {
    let out_box = grid.domain().shrink_axis(axis)?;
    let ring = grid.ring().clone();
    let values = out_box
        .points()
        .map(|p| {
            let here = grid.domain().offset_of(&p).expect("in domain");
            let ahead = grid
                .domain()
                .offset_of(&p.shifted(axis))
                .expect("in domain");
            ring.sub(grid.value_at(ahead), grid.value_at(here))
        })
        .collect();
    ScalarGrid::new(ring, out_box, values)
}

/// A discrete differential form: one scalar grid per size-q multi-index.
#[derive(Debug, Clone)]
pub struct GridForm {
    ring: Ring,
    domain: LatticeBox,
    degree: usize,
    components: BTreeMap<MultiIndex, ScalarGrid>,
}

impl GridForm {
    /// Validating constructor: exactly `C(d, q)` components, one per size-q
    /// multi-index over `1..=d`, all on the same box and ring.
    pub fn new(
        ring: Ring,
        domain: LatticeBox,
        degree: usize,
        components: BTreeMap<MultiIndex, ScalarGrid>,
    ) -> Result<Self> {
        let d = domain.dimension();
        if degree > d {
            return Err(CoreError::Degree(format!(
                "degree {degree} exceeds dimension {d}"
            )));
        }
        let expected = MultiIndex::all(d, degree);
        if components.len() != expected.len() {
            return Err(CoreError::Validation(format!(
                "form of degree {degree} in dimension {d} needs {} components, got {}",
                expected.len(),
                components.len()
            )));
        }
        for mi in &expected {
            let grid = components
                .get(mi)
                .ok_or_else(|| CoreError::Validation(format!("missing component {mi}")))?;
            if grid.ring() != &ring {
                return Err(CoreError::Mismatch(format!(
                    "component {mi} uses a different ring"
                )));
            }
            if grid.domain() != &domain {
                return Err(CoreError::Validation(format!(
                    "component {mi} has extents {:?}, expected {:?}",
                    grid.domain().extents(),
                    domain.extents()
                )));
            }
        }
        Ok(GridForm {
            ring,
            domain,
            degree,
            components,
        })
    }

    pub fn zero(ring: Ring, domain: LatticeBox, degree: usize) -> Result<Self> {
        let components = MultiIndex::all(domain.dimension(), degree)
            .into_iter()
            .map(|mi| (mi, ScalarGrid::zero(ring.clone(), domain.clone())))
            .collect();
        GridForm::new(ring, domain, degree, components)
    }

    pub fn from_fn(
        ring: Ring,
        domain: LatticeBox,
        degree: usize,
        f: impl Fn(&MultiIndex, &LatticePoint) -> RingElement,
    ) -> Result<Self> {
        let mut components = BTreeMap::new();
        for mi in MultiIndex::all(domain.dimension(), degree) {
            let grid = ScalarGrid::from_fn(ring.clone(), domain.clone(), |p| f(&mi, p))?;
            components.insert(mi, grid);
        }
        GridForm::new(ring, domain, degree, components)
    }

    /// Wraps a scalar grid as a 0-form.
    pub fn from_scalar(grid: ScalarGrid) -> GridForm {
        let mut components = BTreeMap::new();
        let ring = grid.ring().clone();
        let domain = grid.domain().clone();
        components.insert(MultiIndex::empty(), grid);
        GridForm {
            ring,
            domain,
            degree: 0,
            components,
        }
    }

    /// The single component of a 0-form.
    pub fn as_scalar(&self) -> Result<&ScalarGrid> {
        if self.degree != 0 {
            return Err(CoreError::Degree(format!(
                "expected a 0-form, got degree {}",
                self.degree
            )));
        }
        Ok(&self.components[&MultiIndex::empty()])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn domain(&self) -> &LatticeBox {
        &self.domain
    }

    pub fn dimension(&self) -> usize {
        self.domain.dimension()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &BTreeMap<MultiIndex, ScalarGrid> {
        &self.components
    }

    pub fn component(&self, mi: &MultiIndex) -> Result<&ScalarGrid> {
        self.components.get(mi).ok_or_else(|| {
            CoreError::Validation(format!(
                "no component {mi} on a degree-{} form in dimension {}",
                self.degree,
                self.dimension()
            ))
        })
    }

    pub fn get(&self, mi: &MultiIndex, p: &LatticePoint) -> Result<&RingElement> {
        self.component(mi)?.get(p)
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(|g| g.is_zero())
    }

    /// Componentwise ring equality; false on any structural mismatch.
    pub fn equals(&self, other: &GridForm) -> bool {
        self.ring == other.ring
            && self.domain == other.domain
            && self.degree == other.degree
            && self
                .components
                .iter()
                .all(|(mi, g)| other.components.get(mi).is_some_and(|h| g.equals(h)))
    }

    fn check_compatible(&self, other: &GridForm) -> Result<()> {
        if self.ring != other.ring {
            return Err(CoreError::Mismatch("forms over different rings".into()));
        }
        if self.domain != other.domain {
            return Err(CoreError::Mismatch(format!(
                "forms over different boxes {:?} vs {:?}",
                self.domain.extents(),
                other.domain.extents()
            )));
        }
        if self.degree != other.degree {
            return Err(CoreError::Mismatch(format!(
                "forms of different degrees {} vs {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &GridForm) -> Result<GridForm> {
        self.check_compatible(other)?;
        let mut components = BTreeMap::new();
        for (mi, g) in &self.components {
            components.insert(mi.clone(), g.add(&other.components[mi])?);
        }
        GridForm::new(
            self.ring.clone(),
            self.domain.clone(),
            self.degree,
            components,
        )
    }

    pub fn sub(&self, other: &GridForm) -> Result<GridForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GridForm {
        let components = self
            .components
            .iter()
            .map(|(mi, g)| (mi.clone(), g.neg()))
            .collect();
        GridForm {
            ring: self.ring.clone(),
            domain: self.domain.clone(),
            degree: self.degree,
            components,
        }
    }

    pub fn scale(&self, r: &RingElement) -> Result<GridForm> {
        self.ring.check(r)?;
        let mut components = BTreeMap::new();
        for (mi, g) in &self.components {
            components.insert(mi.clone(), g.scale(r)?);
        }
        GridForm::new(
            self.ring.clone(),
            self.domain.clone(),
            self.degree,
            components,
        )
    }

    /// Restricts every component to a sub-box anchored at the origin corner.
    pub fn restrict(&self, sub: &LatticeBox) -> Result<GridForm> {
        let mut components = BTreeMap::new();
        for (mi, g) in &self.components {
            components.insert(mi.clone(), g.restrict(sub)?);
        }
        GridForm::new(self.ring.clone(), sub.clone(), self.degree, components)
    }
}

/// The exterior derivative `D`: a degree-q form on extents `(N_i)` becomes a
/// degree-(q+1) form on extents `(N_i - 1)`.
///
/// For an output multi-index `L = {l_1 < ... < l_{q+1}}`,
/// `(Dω)_L = Σ_m (-1)^(m-1) ∂_{l_m} f_{L \ {l_m}}`.
pub fn exterior_derivative(form: &GridForm) -> Result<GridForm> {
    let d = form.dimension();
    if form.degree() >= d {
        return Err(CoreError::Degree(format!(
            "no exterior derivative of a degree-{} form in dimension {d}",
            form.degree()
        )));
    }
    let out_box = form.domain().shrink()?;
    let ring = form.ring().clone();
    let in_box = form.domain();

    let mut components = BTreeMap::new();
    for target in MultiIndex::all(d, form.degree() + 1) {
        let mut values = vec![ring.zero(); out_box.volume()];
        for (m, &axis) in target.indices().iter().enumerate() {
            let source = target.without(axis);
            let grid = form.component(&source)?;
            let negate = m % 2 == 1;
            for (out_off, p) in out_box.points().enumerate() {
                let here = in_box.offset_of(&p).expect("shrunken point in domain");
                let ahead = in_box
                    .offset_of(&p.shifted(axis))
                    .expect("shifted point in domain");
                let diff = ring.sub(grid.value_at(ahead), grid.value_at(here));
                let term = if negate { ring.neg(&diff) } else { diff };
                values[out_off] = ring.add(&values[out_off], &term);
            }
        }
        components.insert(
            target,
            ScalarGrid::new(ring.clone(), out_box.clone(), values)?,
        );
    }
    GridForm::new(ring, out_box, form.degree() + 1, components)
}

/// The wedge product. Coefficients multiply pointwise; basis blades merge
/// with the shuffle sign, and blades sharing an axis vanish.
pub fn wedge(left: &GridForm, right: &GridForm) -> Result<GridForm> {
    if left.ring() != right.ring() {
        return Err(CoreError::Mismatch("wedge over different rings".into()));
    }
    if left.domain() != right.domain() {
        return Err(CoreError::Mismatch(format!(
            "wedge over different boxes {:?} vs {:?}",
            left.domain().extents(),
            right.domain().extents()
        )));
    }
    let d = left.dimension();
    let degree = left.degree() + right.degree();
    if degree > d {
        return Err(CoreError::Degree(format!(
            "wedge of degrees {} and {} exceeds dimension {d}",
            left.degree(),
            right.degree()
        )));
    }
    let ring = left.ring().clone();
    let domain = left.domain().clone();
    let mut out = GridForm::zero(ring.clone(), domain, degree)?;
    for (mi_l, grid_l) in left.components() {
        for (mi_r, grid_r) in right.components() {
            let Some((target, sign)) = mi_l.merge_with_sign(mi_r) else {
                continue;
            };
            let product = ScalarGrid::new(
                ring.clone(),
                grid_l.domain().clone(),
                grid_l
                    .values()
                    .iter()
                    .zip(grid_r.values())
                    .map(|(a, b)| ring.mul(a, b))
                    .collect(),
            )?;
            let signed = if sign < 0 { product.neg() } else { product };
            let updated = out.component(&target)?.add(&signed)?;
            out.components.insert(target, updated);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_grid_2x2() -> ScalarGrid {
        // f(1,1)=1, f(1,2)=2, f(2,1)=4, f(2,2)=8
        let b = LatticeBox::new(vec![2, 2]).unwrap();
        let z = Ring::Integer;
        ScalarGrid::new(
            z.clone(),
            b,
            vec![z.from_i64(1), z.from_i64(2), z.from_i64(4), z.from_i64(8)],
        )
        .unwrap()
    }

    #[test]
    fn sign_s_matches_parity_rule() {
        let i123 = MultiIndex::new(vec![1, 2, 3]).unwrap();
        assert_eq!(sign_s(&i123, 2), -1);
        assert_eq!(sign_s(&MultiIndex::empty(), 5), 1);
        let i1234 = MultiIndex::new(vec![1, 2, 3, 4]).unwrap();
        assert_eq!(sign_s(&i1234, 4), -1);
    }

    #[test]
    fn partial_takes_forward_differences() {
        let f = int_grid_2x2();
        let d1 = partial(&f, 1).unwrap();
        assert_eq!(d1.domain().extents(), &[1, 2]);
        assert_eq!(
            d1.get(&LatticePoint::new(vec![1, 1]).unwrap()).unwrap(),
            &Ring::Integer.from_i64(3)
        );
        assert_eq!(
            d1.get(&LatticePoint::new(vec![1, 2]).unwrap()).unwrap(),
            &Ring::Integer.from_i64(6)
        );

        let c = ScalarGrid::constant(
            Ring::Integer,
            LatticeBox::new(vec![3, 3]).unwrap(),
            Ring::Integer.from_i64(9),
        )
        .unwrap();
        assert!(partial(&c, 2).unwrap().is_zero());
    }

    #[test]
    fn partials_commute() {
        let f = int_grid_2x2();
        let d12 = partial(&partial(&f, 1).unwrap(), 2).unwrap();
        let d21 = partial(&partial(&f, 2).unwrap(), 1).unwrap();
        assert!(d12.equals(&d21));
        // the single remaining value is 8 - 4 - 2 + 1 = 3
        assert_eq!(d12.values(), &[Ring::Integer.from_i64(3)]);
    }

    #[test]
    fn partial_rejects_extent_one() {
        let g = ScalarGrid::zero(Ring::Integer, LatticeBox::new(vec![1, 3]).unwrap());
        assert!(matches!(partial(&g, 1), Err(CoreError::EmptyDomain(_))));
    }

    #[test]
    fn derivative_of_zero_form() {
        let f = GridForm::from_scalar(int_grid_2x2());
        let df = exterior_derivative(&f).unwrap();
        assert_eq!(df.degree(), 1);
        assert_eq!(df.domain().extents(), &[1, 1]);
        let p = LatticePoint::new(vec![1, 1]).unwrap();
        assert_eq!(
            df.get(&MultiIndex::singleton(1), &p).unwrap(),
            &Ring::Integer.from_i64(3)
        );
        assert_eq!(
            df.get(&MultiIndex::singleton(2), &p).unwrap(),
            &Ring::Integer.from_i64(1)
        );
    }

    #[test]
    fn derivative_of_one_form_is_discrete_curl() {
        // ω = n₂ dx₁ on a 3x3 box: Dω = (∂₁ f₂ - ∂₂ f₁) dx₁∧dx₂ = -1 everywhere
        let z = Ring::Integer;
        let b = LatticeBox::new(vec![3, 3]).unwrap();
        let form = GridForm::from_fn(z.clone(), b, 1, |mi, p| {
            if mi.indices() == [1] {
                z.from_i64(p.coord(2) as i64)
            } else {
                z.zero()
            }
        })
        .unwrap();
        let curl = exterior_derivative(&form).unwrap();
        let mi12 = MultiIndex::new(vec![1, 2]).unwrap();
        for p in curl.domain().points() {
            assert_eq!(curl.get(&mi12, &p).unwrap(), &z.from_i64(-1));
        }
    }

    #[test]
    fn d_squared_is_zero() {
        let f = GridForm::from_scalar(
            ScalarGrid::from_fn(Ring::Integer, LatticeBox::new(vec![4, 4]).unwrap(), |p| {
                Ring::Integer.from_i64((p.coord(1) * p.coord(1) + 3 * p.coord(2)) as i64)
            })
            .unwrap(),
        );
        let dd = exterior_derivative(&exterior_derivative(&f).unwrap()).unwrap();
        assert!(dd.is_zero());
    }

    #[test]
    fn derivative_degree_and_domain_errors() {
        let z = Ring::Integer;
        let top = GridForm::zero(z.clone(), LatticeBox::new(vec![2, 2]).unwrap(), 2).unwrap();
        assert!(matches!(
            exterior_derivative(&top),
            Err(CoreError::Degree(_))
        ));
        let thin = GridForm::zero(z, LatticeBox::new(vec![1, 3]).unwrap(), 0).unwrap();
        assert!(matches!(
            exterior_derivative(&thin),
            Err(CoreError::EmptyDomain(_))
        ));
    }

    #[test]
    fn wedge_constants() {
        let z = Ring::Integer;
        let b = LatticeBox::new(vec![2, 2]).unwrap();
        let two_dx1 = GridForm::from_fn(z.clone(), b.clone(), 1, |mi, _| {
            if mi.indices() == [1] {
                z.from_i64(2)
            } else {
                z.zero()
            }
        })
        .unwrap();
        let three_dx2 = GridForm::from_fn(z.clone(), b.clone(), 1, |mi, _| {
            if mi.indices() == [2] {
                z.from_i64(3)
            } else {
                z.zero()
            }
        })
        .unwrap();
        let product = wedge(&two_dx1, &three_dx2).unwrap();
        let mi12 = MultiIndex::new(vec![1, 2]).unwrap();
        for p in b.points() {
            assert_eq!(product.get(&mi12, &p).unwrap(), &z.from_i64(6));
        }

        // dx₁ ∧ dx₁ = 0
        let self_product = wedge(&two_dx1, &two_dx1).unwrap();
        assert!(self_product.is_zero());

        // dx₂ ∧ dx₁ = -dx₁ ∧ dx₂
        let swapped = wedge(&three_dx2, &two_dx1).unwrap();
        assert!(swapped.equals(&product.neg()));
    }

    #[test]
    fn wedge_errors() {
        let z = Ring::Integer;
        let a = GridForm::zero(z.clone(), LatticeBox::new(vec![2, 2]).unwrap(), 1).unwrap();
        let b = GridForm::zero(z.clone(), LatticeBox::new(vec![3, 2]).unwrap(), 1).unwrap();
        assert!(matches!(wedge(&a, &b), Err(CoreError::Mismatch(_))));
        let q = GridForm::zero(Ring::Rational, LatticeBox::new(vec![2, 2]).unwrap(), 1).unwrap();
        assert!(matches!(wedge(&a, &q), Err(CoreError::Mismatch(_))));
        let top = GridForm::zero(z, LatticeBox::new(vec![2, 2]).unwrap(), 2).unwrap();
        assert!(matches!(wedge(&a, &top), Err(CoreError::Degree(_))));
    }

    #[test]
    fn constructor_validates_components() {
        let z = Ring::Integer;
        let b = LatticeBox::new(vec![2, 2]).unwrap();
        // missing component
        let mut components = BTreeMap::new();
        components.insert(
            MultiIndex::singleton(1),
            ScalarGrid::zero(z.clone(), b.clone()),
        );
        assert!(matches!(
            GridForm::new(z.clone(), b.clone(), 1, components),
            Err(CoreError::Validation(_))
        ));
        // wrong grid shape
        let mut components = BTreeMap::new();
        components.insert(
            MultiIndex::singleton(1),
            ScalarGrid::zero(z.clone(), b.clone()),
        );
        components.insert(
            MultiIndex::singleton(2),
            ScalarGrid::zero(z.clone(), LatticeBox::new(vec![2, 3]).unwrap()),
        );
        assert!(matches!(
            GridForm::new(z, b, 1, components),
            Err(CoreError::Validation(_))
        ));
    }

    #[test]
    fn get_and_is_zero() {
        let z = Ring::Integer;
        let b = LatticeBox::new(vec![2, 3]).unwrap();
        let mi12 = MultiIndex::new(vec![1, 2]).unwrap();
        let form = GridForm::from_fn(z.clone(), b.clone(), 2, |_, p| {
            if p.coords() == [1, 2] {
                z.from_i64(5)
            } else {
                z.zero()
            }
        })
        .unwrap();
        let p = LatticePoint::new(vec![1, 2]).unwrap();
        assert_eq!(form.get(&mi12, &p).unwrap(), &z.from_i64(5));
        assert!(!form.is_zero());
        assert!(GridForm::zero(z, b, 2).unwrap().is_zero());
        assert!(form.get(&MultiIndex::singleton(1), &p).is_err());
        assert!(form
            .get(&mi12, &LatticePoint::new(vec![5, 5]).unwrap())
            .is_err());
    }
}
