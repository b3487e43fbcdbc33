//! Algebraic laws: ring axioms, wedge algebra, linearity, and the cylinder
//! operator identities. All checks are exact over the exact rings.

mod common;

use common::*;
use difforms_core::poincare::is_constant_grid;
use difforms_core::*;
use proptest::prelude::*;
use rand::Rng;

fn rings_under_test() -> Vec<Ring> {
    vec![
        Ring::Integer,
        Ring::Rational,
        Ring::Modular { modulus: 7 },
        Ring::Modular { modulus: 12 }, // composite modulus on purpose
    ]
}

fn element_from_seed(ring: &Ring, num: i64, den: u8) -> RingElement {
    match ring {
        Ring::Rational => ring.parse(&format!("{num}/{}", u8::max(den, 1))).unwrap(),
        _ => ring.from_i64(num),
    }
}

proptest! {
    #[test]
    fn ring_axioms_hold(
        an in -50i64..=50, ad in 1u8..=9,
        bn in -50i64..=50, bd in 1u8..=9,
        cn in -50i64..=50, cd in 1u8..=9,
    ) {
        for ring in rings_under_test() {
            let a = element_from_seed(&ring, an, ad);
            let b = element_from_seed(&ring, bn, bd);
            let c = element_from_seed(&ring, cn, cd);

            // additive group
            prop_assert_eq!(ring.add(&ring.add(&a, &b), &c), ring.add(&a, &ring.add(&b, &c)));
            prop_assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
            prop_assert_eq!(ring.add(&a, &ring.zero()), a.clone());
            prop_assert_eq!(ring.add(&a, &ring.neg(&a)), ring.zero());

            // multiplicative monoid and distributivity
            prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
            prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
            prop_assert_eq!(ring.mul(&a, &ring.one()), a.clone());
            prop_assert_eq!(
                ring.mul(&a, &ring.add(&b, &c)),
                ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
            );
        }
    }

    #[test]
    fn parse_format_is_identity(
        num in any::<i64>(), den in 1u64..=1_000_000,
        residue in 0u64..97,
    ) {
        let z = Ring::Integer;
        let x = z.from_i64(num);
        prop_assert_eq!(z.parse(&z.format(&x)).unwrap(), x);

        let q = Ring::Rational;
        let x = q.parse(&format!("{num}/{den}")).unwrap();
        prop_assert_eq!(q.parse(&q.format(&x)).unwrap(), x);

        let m = Ring::Modular { modulus: 97 };
        let x = m.from_i64(residue as i64);
        prop_assert_eq!(m.parse(&m.format(&x)).unwrap(), x);
    }
}

#[test]
fn wedge_is_graded_antisymmetric() {
    let mut rng = rng(701);
    for trial in 0..60 {
        let ring = &exact_rings()[trial % 3];
        let d = rng.gen_range(2..=4);
        let (lo, hi) = extent_range(d);
        let domain = random_box(&mut rng, d, lo, hi);
        let p = rng.gen_range(0..=d);
        let q = rng.gen_range(0..=(d - p));
        let left = random_form(&mut rng, ring, &domain, p);
        let right = random_form(&mut rng, ring, &domain, q);
        let lr = wedge(&left, &right).unwrap();
        let rl = wedge(&right, &left).unwrap();
        let expected = if (p * q) % 2 == 0 { rl } else { rl.neg() };
        assert!(lr.equals(&expected), "degrees {p},{q} on {domain:?}");
    }
}

#[test]
fn wedge_is_associative() {
    let mut rng = rng(702);
    for trial in 0..40 {
        let ring = &exact_rings()[trial % 3];
        let d = rng.gen_range(2..=4);
        let (lo, hi) = extent_range(d);
        let domain = random_box(&mut rng, d, lo, hi);
        // split d among three degrees
        let p = rng.gen_range(0..=d);
        let q = rng.gen_range(0..=(d - p));
        let r = rng.gen_range(0..=(d - p - q));
        let a = random_form(&mut rng, ring, &domain, p);
        let b = random_form(&mut rng, ring, &domain, q);
        let c = random_form(&mut rng, ring, &domain, r);
        let left = wedge(&wedge(&a, &b).unwrap(), &c).unwrap();
        let right = wedge(&a, &wedge(&b, &c).unwrap()).unwrap();
        assert!(left.equals(&right), "degrees {p},{q},{r}");
    }
}

#[test]
fn derivative_is_linear() {
    let mut rng = rng(703);
    for trial in 0..60 {
        let ring = &exact_rings()[trial % 3];
        let d = rng.gen_range(1..=4);
        let (lo, hi) = extent_range(d);
        let domain = random_box(&mut rng, d, lo, hi);
        let q = rng.gen_range(0..d);
        let omega = random_form(&mut rng, ring, &domain, q);
        let eta = random_form(&mut rng, ring, &domain, q);
        let scalar = random_element(&mut rng, ring);
        let lhs = exterior_derivative(&omega.add(&eta.scale(&scalar).unwrap()).unwrap()).unwrap();
        let rhs = exterior_derivative(&omega)
            .unwrap()
            .add(&exterior_derivative(&eta).unwrap().scale(&scalar).unwrap())
            .unwrap();
        assert!(lhs.equals(&rhs));
    }
}

#[test]
fn partials_commute_on_random_grids() {
    let mut rng = rng(704);
    for trial in 0..60 {
        let ring = &exact_rings()[trial % 3];
        let d = rng.gen_range(2..=4);
        let (lo, hi) = extent_range(d);
        let domain = random_box(&mut rng, d, lo, hi);
        let grid = random_grid(&mut rng, ring, &domain);
        let i = rng.gen_range(1..=d);
        let mut j = rng.gen_range(1..=d);
        if j == i {
            j = if i == d { 1 } else { i + 1 };
        }
        let ij = partial(&partial(&grid, i).unwrap(), j).unwrap();
        let ji = partial(&partial(&grid, j).unwrap(), i).unwrap();
        assert!(ij.equals(&ji));
    }
}

#[test]
fn boundary_is_linear() {
    use difforms_core::boundary;
    let mut rng = rng(711);
    for trial in 0..40 {
        let ring = &exact_rings()[trial % 3];
        let d = rng.gen_range(2..=4);
        let (lo, hi) = extent_range(d);
        let domain = random_box(&mut rng, d, lo, hi);
        let q = rng.gen_range(1..=d);
        let c1 = random_chain(&mut rng, ring, &domain, q, 4);
        let c2 = random_chain(&mut rng, ring, &domain, q, 4);
        let scalar = random_element(&mut rng, ring);
        let lhs = boundary(&c1.scale(&scalar).unwrap().add(&c2).unwrap()).unwrap();
        let rhs = boundary(&c1)
            .unwrap()
            .scale(&scalar)
            .unwrap()
            .add(&boundary(&c2).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn slice_after_lift_is_identity() {
    let mut rng = rng(705);
    for trial in 0..40 {
        let ring = &exact_rings()[trial % 3];
        let d = rng.gen_range(1..=3);
        let (lo, hi) = extent_range(d + 1);
        let base = random_box(&mut rng, d, lo, hi);
        let q = rng.gen_range(0..=d);
        let form = random_form(&mut rng, ring, &base, q);
        let t_extent = rng.gen_range(1..=4);
        let round = restrict_base(&pullback_cylinder(&form, t_extent).unwrap()).unwrap();
        assert!(round.equals(&form));
    }
}

#[test]
fn cylinder_maps_commute_with_derivative() {
    let mut rng = rng(706);
    for trial in 0..40 {
        let ring = &exact_rings()[trial % 3];
        let d = rng.gen_range(1..=3);

        // lift then differentiate vs differentiate then lift
        let base = random_box(&mut rng, d, 3, 4);
        let q = rng.gen_range(0..d);
        let form = random_form(&mut rng, ring, &base, q);
        let t_extent = rng.gen_range(2..=4);
        let lifted_then_d =
            exterior_derivative(&pullback_cylinder(&form, t_extent).unwrap()).unwrap();
        let d_then_lifted =
            pullback_cylinder(&exterior_derivative(&form).unwrap(), t_extent).unwrap();
        // common domain: base shrunk everywhere, cylinder axis one shorter
        let common = lifted_then_d.domain().clone();
        assert!(lifted_then_d.equals(&d_then_lifted.restrict(&common).unwrap()));

        // slice then differentiate vs differentiate then slice
        let cylinder = random_box(&mut rng, d + 1, 3, 4);
        let q = rng.gen_range(0..d);
        let omega = random_form(&mut rng, ring, &cylinder, q);
        let slice_then_d = exterior_derivative(&restrict_base(&omega).unwrap()).unwrap();
        let d_then_slice = restrict_base(&exterior_derivative(&omega).unwrap()).unwrap();
        assert!(slice_then_d.equals(&d_then_slice));
    }
}

#[test]
fn solver_is_linear() {
    let mut rng = rng(707);
    for trial in 0..30 {
        let ring = &exact_rings()[trial % 3];
        let d = rng.gen_range(1..=3);
        let source = random_box(&mut rng, d, 3, 4);
        let q = rng.gen_range(0..d);
        let omega = exterior_derivative(&random_form(&mut rng, ring, &source, q)).unwrap();
        let eta = exterior_derivative(&random_form(&mut rng, ring, &source, q)).unwrap();
        let scalar = random_element(&mut rng, ring);
        let combined = omega.add(&eta.scale(&scalar).unwrap()).unwrap();
        let lhs = solve_potential(&combined).unwrap().potential;
        let rhs = solve_potential(&omega)
            .unwrap()
            .potential
            .add(
                &solve_potential(&eta)
                    .unwrap()
                    .potential
                    .scale(&scalar)
                    .unwrap(),
            )
            .unwrap();
        assert!(lhs.equals(&rhs));
    }
}

#[test]
fn h0_kernel_membership_is_constancy() {
    let mut rng = rng(708);
    for trial in 0..40 {
        let ring = &exact_rings()[trial % 3];
        let d = rng.gen_range(1..=3);
        let (lo, hi) = extent_range(d);
        let domain = random_box(&mut rng, d, lo, hi);

        let value = random_element(&mut rng, ring);
        let constant = GridForm::from_scalar(
            ScalarGrid::constant(ring.clone(), domain.clone(), value).unwrap(),
        );
        assert!(h0_kernel_check(&constant).unwrap());

        let grid = random_grid(&mut rng, ring, &domain);
        let form = GridForm::from_scalar(grid.clone());
        assert_eq!(
            h0_kernel_check(&form).unwrap(),
            is_constant_grid(&grid),
            "membership must coincide with constancy"
        );
    }
}

#[test]
fn vec3_encoding_round_trips() {
    use difforms_core::vec3::{
        field_to_one_form, field_to_two_form, one_form_to_field, two_form_to_field,
    };
    let mut rng = rng(709);
    for trial in 0..30 {
        let ring = &exact_rings()[trial % 3];
        let domain = random_box(&mut rng, 3, 2, 4);
        let field = VectorField3::new(
            random_grid(&mut rng, ring, &domain),
            random_grid(&mut rng, ring, &domain),
            random_grid(&mut rng, ring, &domain),
        )
        .unwrap();
        assert!(one_form_to_field(&field_to_one_form(&field))
            .unwrap()
            .equals(&field));
        assert!(two_form_to_field(&field_to_two_form(&field))
            .unwrap()
            .equals(&field));
    }
}

#[test]
fn json_round_trips_all_rings() {
    use difforms_core::json::*;
    let mut rng = rng(710);
    let rings = [
        Ring::Integer,
        Ring::Rational,
        Ring::Modular { modulus: 97 },
        Ring::Float { tolerance: 1e-9 },
    ];
    for trial in 0..40 {
        let ring = &rings[trial % rings.len()];
        let d = rng.gen_range(1..=4);
        let (lo, hi) = extent_range(d);
        let domain = random_box(&mut rng, d, lo, hi);
        let q = rng.gen_range(0..=d);

        let form = random_form(&mut rng, ring, &domain, q);
        let text = form_to_json_string(&form);
        let reparsed = form_from_json_str(&text).unwrap();
        assert!(reparsed.equals(&form));
        assert_eq!(form_to_json_string(&reparsed), text, "canonical stability");

        let chain = random_chain(&mut rng, ring, &domain, q, 5);
        let text = chain_to_json_string(&chain);
        let reparsed = chain_from_json_str(&text).unwrap();
        assert!(reparsed == chain);
        assert_eq!(chain_to_json_string(&reparsed), text);
    }
}
