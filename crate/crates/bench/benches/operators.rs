use criterion::{black_box, criterion_group, criterion_main, Criterion};

use difforms_bench::{direction_sets, sample_form, sample_rational_grid};
use difforms_core::oracle::{kernel_basis, matrix_of_d};
use difforms_core::{
    boundary, exterior_derivative, solve_potential, Cell, Chain, GridForm, LatticeBox,
    LatticePoint, Ring,
};

fn bench_exterior_derivative(c: &mut Criterion) {
    let one_form = sample_form(&[12, 12, 12], 1);
    c.bench_function("derive 1-form 12x12x12", |b| {
        b.iter(|| exterior_derivative(black_box(&one_form)).unwrap())
    });
}

fn bench_solve_potential(c: &mut Criterion) {
    let source = GridForm::from_scalar(sample_rational_grid(&[9, 9, 9]));
    let closed = exterior_derivative(&source).unwrap();
    c.bench_function("solve closed 1-form 8x8x8", |b| {
        b.iter(|| solve_potential(black_box(&closed)).unwrap())
    });
}

fn bench_boundary(c: &mut Criterion) {
    let ring = Ring::Integer;
    let domain = LatticeBox::new(vec![5, 5, 5, 5]).unwrap();
    let dirs = direction_sets(4, 2);
    let terms: Vec<(Cell, _)> = domain
        .points()
        .enumerate()
        .map(|(i, p)| {
            let cell = Cell::new(
                LatticePoint::new(p.coords().to_vec()).unwrap(),
                dirs[i % dirs.len()].clone(),
            )
            .unwrap();
            (cell, ring.from_i64(i as i64 % 7 - 3))
        })
        .collect();
    let chain = Chain::from_terms(ring, 4, 2, terms).unwrap();
    c.bench_function("boundary 625-cell 2-chain", |b| {
        b.iter(|| boundary(black_box(&chain)).unwrap())
    });
}

fn bench_kernel(c: &mut Criterion) {
    let domain = LatticeBox::new(vec![3, 3, 3]).unwrap();
    let matrix = matrix_of_d(&domain, 1).unwrap();
    c.bench_function("kernel of 1-form derivative on 3x3x3", |b| {
        b.iter(|| kernel_basis(black_box(&matrix)))
    });
}

criterion_group!(
    benches,
    bench_exterior_derivative,
    bench_solve_potential,
    bench_boundary,
    bench_kernel
);
criterion_main!(benches);
