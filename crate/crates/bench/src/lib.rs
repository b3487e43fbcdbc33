//! Shared input builders for the criterion benchmarks.

use difforms_core::{GridForm, LatticeBox, MultiIndex, Ring, ScalarGrid};

/// A dense integer q-form with deterministic mixed-term entries.
pub fn sample_form(extents: &[usize], degree: usize) -> GridForm {
    let ring = Ring::Integer;
    let domain = LatticeBox::new(extents.to_vec()).unwrap();
    GridForm::from_fn(ring.clone(), domain, degree, |mi, p| {
        let mut v: i64 = 1;
        for &i in mi.indices() {
            v = v.wrapping_mul(i as i64 + 2);
        }
        for (axis, &c) in p.coords().iter().enumerate() {
            v = v.wrapping_add((axis as i64 + 1) * c as i64 * c as i64);
        }
        ring.from_i64(v % 97 - 48)
    })
    .unwrap()
}

/// A rational grid suited to the solver and oracle benchmarks.
pub fn sample_rational_grid(extents: &[usize]) -> ScalarGrid {
    let ring = Ring::Rational;
    let domain = LatticeBox::new(extents.to_vec()).unwrap();
    ScalarGrid::from_fn(ring.clone(), domain, |p| {
        let num: usize = p
            .coords()
            .iter()
            .enumerate()
            .map(|(axis, &c)| (axis + 1) * c * c)
            .sum();
        let den = p.coords().iter().sum::<usize>() % 5 + 1;
        ring.parse(&format!("{num}/{den}")).unwrap()
    })
    .unwrap()
}

/// All size-q multi-indices for the given dimension, for building chains.
pub fn direction_sets(dimension: usize, degree: usize) -> Vec<MultiIndex> {
    MultiIndex::all(dimension, degree)
}
