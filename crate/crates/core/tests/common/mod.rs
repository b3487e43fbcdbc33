//! Seeded random generators shared by the integration suites.

#![allow(dead_code)]

use difforms_core::{Cell, Chain, GridForm, LatticeBox, MultiIndex, Ring, RingElement, ScalarGrid};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> SmallRng {
    SmallRng::seed_from_u64(seed)
}

/// The three exact rings every sweep runs over.
pub fn exact_rings() -> Vec<Ring> {
    vec![Ring::Integer, Ring::Rational, Ring::Modular { modulus: 7 }]
}

pub fn random_element(rng: &mut SmallRng, ring: &Ring) -> RingElement {
    match ring {
        Ring::Integer => ring.from_i64(rng.gen_range(-9..=9)),
        Ring::Rational => {
            let num = rng.gen_range(-9..=9);
            let den = rng.gen_range(1..=9);
            ring.parse(&format!("{num}/{den}")).unwrap()
        }
        Ring::Modular { modulus } => ring.from_i64(rng.gen_range(0..*modulus) as i64),
        Ring::Float { .. } => ring.from_i64(rng.gen_range(-9..=9)),
    }
}

pub fn random_box(rng: &mut SmallRng, dimension: usize, lo: usize, hi: usize) -> LatticeBox {
    let extents = (0..dimension).map(|_| rng.gen_range(lo..=hi)).collect();
    LatticeBox::new(extents).unwrap()
}

pub fn random_grid(rng: &mut SmallRng, ring: &Ring, domain: &LatticeBox) -> ScalarGrid {
    let values = (0..domain.volume())
        .map(|_| random_element(rng, ring))
        .collect();
    ScalarGrid::new(ring.clone(), domain.clone(), values).unwrap()
}

pub fn random_form(
    rng: &mut SmallRng,
    ring: &Ring,
    domain: &LatticeBox,
    degree: usize,
) -> GridForm {
    let mut components = std::collections::BTreeMap::new();
    for mi in MultiIndex::all(domain.dimension(), degree) {
        components.insert(mi, random_grid(rng, ring, domain));
    }
    GridForm::new(ring.clone(), domain.clone(), degree, components).unwrap()
}

/// A random cell of the given degree whose base lies inside `domain`.
pub fn random_cell_in(rng: &mut SmallRng, domain: &LatticeBox, degree: usize) -> Cell {
    let coords = domain
        .extents()
        .iter()
        .map(|&n| rng.gen_range(1..=n))
        .collect();
    let all = MultiIndex::all(domain.dimension(), degree);
    let dirs = all[rng.gen_range(0..all.len())].clone();
    Cell::new(difforms_core::LatticePoint::new(coords).unwrap(), dirs).unwrap()
}

pub fn random_chain(
    rng: &mut SmallRng,
    ring: &Ring,
    domain: &LatticeBox,
    degree: usize,
    terms: usize,
) -> Chain {
    let cells = (0..terms)
        .map(|_| {
            (
                random_cell_in(rng, domain, degree),
                random_element(rng, ring),
            )
        })
        .collect::<Vec<_>>();
    Chain::from_terms(ring.clone(), domain.dimension(), degree, cells).unwrap()
}

/// Extent bounds that keep the sweep volumes at desk scale per dimension.
pub fn extent_range(dimension: usize) -> (usize, usize) {
    match dimension {
        1 => (3, 6),
        2 => (3, 6),
        3 => (3, 5),
        4 => (3, 4),
        _ => (3, 3),
    }
}
