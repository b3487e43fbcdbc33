//! Brute-force verifier: materializes the derivative and boundary operators
//! as explicit rational matrices on small boxes and decides kernel/image
//! questions by exact Gaussian elimination.
//!
//! This is an independent second route to the same definitions the rest of
//! the crate implements by grid sweeps: matrices are assembled entry by
//! entry from the difference formulas and the sign rule, never by probing
//! the library operators. Unknowns are enumerated with multi-indices in
//! lexicographic order and points in row-major order, so every matrix is
//! reproducible byte for byte.
//!
//! Everything here works over the rationals; this module is the only place
//! in the crate that divides.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chains::{Cell, Chain};
use crate::error::{CoreError, Result};
use crate::forms::{sign_s, GridForm, ScalarGrid};
use crate::lattice::{LatticeBox, MultiIndex};
use crate::poincare::solve_potential;
use crate::ring::{Ring, RingElement};

/// Hard cap on the number of unknowns on either side of a matrix.
pub const MAX_UNKNOWNS: usize = 2000;

/// A dense rational matrix, row-major.
#[derive(Debug, Clone)]
pub struct LinearMapMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl LinearMapMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows > MAX_UNKNOWNS || cols > MAX_UNKNOWNS {
            return Err(CoreError::Resource(format!(
                "matrix {rows}x{cols} exceeds the {MAX_UNKNOWNS}-unknown cap"
            )));
        }
        Ok(LinearMapMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.cols + col]
    }

    fn add_at(&mut self, row: usize, col: usize, delta: i64) {
        let e = &mut self.entries[row * self.cols + col];
        *e += BigRational::from_integer(BigInt::from(delta));
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn apply(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.cols {
            return Err(CoreError::Mismatch(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let row = &self.entries[r * self.cols..(r + 1) * self.cols];
                let mut acc = BigRational::zero();
                for (e, x) in row.iter().zip(v) {
                    if !e.is_zero() {
                        acc += e * x;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn multiply(&self, other: &LinearMapMatrix) -> Result<LinearMapMatrix> {
        if self.cols != other.rows {
            return Err(CoreError::Mismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = LinearMapMatrix::zeros(self.rows, other.cols)?;
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        let prod = a * b;
                        out.entries[idx] += prod;
                    }
                }
            }
        }
        Ok(out)
    }

    fn to_row_vecs(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }
}

/// Matrix of the exterior derivative
/// `D : Ω^p(domain) -> Ω^(p+1)(shrink(domain))`.
///
/// Columns enumerate (size-p multi-index, point of `domain`); rows enumerate
/// (size-(p+1) multi-index, point of the shrunken box); multi-indices run in
/// lexicographic order, points in row-major order with the last axis
/// fastest. Entries are -1, 0, or +1.
pub fn matrix_of_d(domain: &LatticeBox, source_degree: usize) -> Result<LinearMapMatrix> {
    let d = domain.dimension();
    if source_degree >= d {
        return Err(CoreError::Degree(format!(
            "no derivative out of degree {source_degree} in dimension {d}"
        )));
    }
    let shrunk = domain.shrink()?;
    let source_mis = MultiIndex::all(d, source_degree);
    let target_mis = MultiIndex::all(d, source_degree + 1);
    let cols = source_mis.len() * domain.volume();
    let rows = target_mis.len() * shrunk.volume();
    let mut m = LinearMapMatrix::zeros(rows, cols)?;

    let source_pos = |mi: &MultiIndex| source_mis.iter().position(|x| x == mi).expect("source");
    for (t_pos, target) in target_mis.iter().enumerate() {
        for (p_off, p) in shrunk.points().enumerate() {
            let row = t_pos * shrunk.volume() + p_off;
            for (m0, &axis) in target.indices().iter().enumerate() {
                let source = target.without(axis);
                let s_pos = source_pos(&source);
                let sign: i64 = if m0 % 2 == 0 { 1 } else { -1 };
                let here = domain.offset_of(&p)?;
                let ahead = domain.offset_of(&p.shifted(axis))?;
                m.add_at(row, s_pos * domain.volume() + ahead, sign);
                m.add_at(row, s_pos * domain.volume() + here, -sign);
            }
        }
    }
    Ok(m)
}

/// Matrix of the boundary map on chains of one degree whose cell bases lie
/// in `region`; the image lives on cells with bases in the grown region.
///
/// Columns enumerate (size-q direction set, base point of `region`); rows
/// enumerate (size-(q-1) direction set, base point of `grow(region)`), in
/// the same lexicographic/row-major order as [`matrix_of_d`].
pub fn matrix_of_boundary(region: &LatticeBox, degree: usize) -> Result<LinearMapMatrix> {
    let d = region.dimension();
    if degree == 0 || degree > d {
        return Err(CoreError::Degree(format!(
            "boundary matrix needs degree in 1..={d}, got {degree}"
        )));
    }
    let grown = region.grow();
    let source_mis = MultiIndex::all(d, degree);
    let target_mis = MultiIndex::all(d, degree - 1);
    let cols = source_mis.len() * region.volume();
    let rows = target_mis.len() * grown.volume();
    let mut m = LinearMapMatrix::zeros(rows, cols)?;

    let target_pos = |mi: &MultiIndex| target_mis.iter().position(|x| x == mi).expect("target");
    for (s_pos, dirs) in source_mis.iter().enumerate() {
        for (p_off, base) in region.points().enumerate() {
            let col = s_pos * region.volume() + p_off;
            for &axis in dirs.indices() {
                let face = dirs.without(axis);
                let t_pos = target_pos(&face);
                let sign = i64::from(sign_s(dirs, axis));
                let shifted = grown.offset_of(&base.shifted(axis))?;
                let here = grown.offset_of(&base)?;
                m.add_at(t_pos * grown.volume() + shifted, col, sign);
                m.add_at(t_pos * grown.volume() + here, col, -sign);
            }
        }
    }
    Ok(m)
}

/// Matrix of the stacked per-axis forward differences
/// `f -> (∂_1 f, ..., ∂_d f)`, each difference on the box shrunk in its own
/// axis only. The kernel of this matrix is exactly the constant grids.
pub fn scalar_difference_matrix(domain: &LatticeBox) -> Result<LinearMapMatrix> {
    let d = domain.dimension();
    let mut row_blocks = Vec::with_capacity(d);
    let mut rows = 0usize;
    for axis in 1..=d {
        let shrunk = domain.shrink_axis(axis)?;
        row_blocks.push((axis, shrunk.clone(), rows));
        rows += shrunk.volume();
    }
    let mut m = LinearMapMatrix::zeros(rows, domain.volume())?;
    for (axis, shrunk, row_start) in row_blocks {
        for (p_off, p) in shrunk.points().enumerate() {
            let row = row_start + p_off;
            m.add_at(row, domain.offset_of(&p.shifted(axis))?, 1);
            m.add_at(row, domain.offset_of(&p)?, -1);
        }
    }
    Ok(m)
}

/// Matrix restricting degree-q forms on `domain` to a sub-box anchored at
/// the origin corner.
pub fn restriction_matrix(
    domain: &LatticeBox,
    sub: &LatticeBox,
    degree: usize,
) -> Result<LinearMapMatrix> {
    if !domain.contains_box(sub) {
        return Err(CoreError::Validation(format!(
            "{:?} is not a sub-box of {:?}",
            sub.extents(),
            domain.extents()
        )));
    }
    let mis = MultiIndex::all(domain.dimension(), degree);
    let mut m = LinearMapMatrix::zeros(mis.len() * sub.volume(), mis.len() * domain.volume())?;
    for mi_pos in 0..mis.len() {
        for (p_off, p) in sub.points().enumerate() {
            m.add_at(
                mi_pos * sub.volume() + p_off,
                mi_pos * domain.volume() + domain.offset_of(&p)?,
                1,
            );
        }
    }
    Ok(m)
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(mat: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pivot_row) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pivot_row);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// A basis of the kernel, one vector per free column of the echelon form.
pub fn kernel_basis(m: &LinearMapMatrix) -> Vec<Vec<BigRational>> {
    let mut work = m.to_row_vecs();
    let pivots = rref(&mut work);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); m.cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -work[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank by exact elimination.
pub fn rank(m: &LinearMapMatrix) -> usize {
    let mut work = m.to_row_vecs();
    rref(&mut work).len()
}

/// Rank of the span of a set of vectors.
pub fn span_rank(vectors: &[Vec<BigRational>]) -> usize {
    let mut work: Vec<Vec<BigRational>> = vectors.to_vec();
    rref(&mut work).len()
}

/// Decides `v ∈ Im(m)` exactly, by eliminating the augmented system.
pub fn in_image(m: &LinearMapMatrix, v: &[BigRational]) -> Result<bool> {
    if v.len() != m.rows {
        return Err(CoreError::Mismatch(format!(
            "vector length {} vs {} rows",
            v.len(),
            m.rows
        )));
    }
    let mut work: Vec<Vec<BigRational>> = (0..m.rows)
        .map(|r| {
            let mut row = m.entries[r * m.cols..(r + 1) * m.cols].to_vec();
            row.push(v[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut work);
    Ok(!pivots.contains(&m.cols))
}

/// Flattens a rational form in the documented enumeration order.
pub fn form_to_vector(form: &GridForm) -> Result<Vec<BigRational>> {
    if form.ring() != &Ring::Rational {
        return Err(CoreError::Mismatch(
            "the oracle flattens rational forms only".into(),
        ));
    }
    let mut out = Vec::with_capacity(form.components().len() * form.domain().volume());
    for grid in form.components().values() {
        for value in grid.values() {
            match value {
                RingElement::Rational(r) => out.push(r.clone()),
                _ => unreachable!("rational ring holds rational elements"),
            }
        }
    }
    Ok(out)
}

/// Rebuilds a rational form from its flattened vector.
pub fn vector_to_form(v: &[BigRational], domain: &LatticeBox, degree: usize) -> Result<GridForm> {
    let mis = MultiIndex::all(domain.dimension(), degree);
    if v.len() != mis.len() * domain.volume() {
        return Err(CoreError::Validation(format!(
            "vector length {} does not match {} components of volume {}",
            v.len(),
            mis.len(),
            domain.volume()
        )));
    }
    let mut components = std::collections::BTreeMap::new();
    for (pos, mi) in mis.into_iter().enumerate() {
        let values = v[pos * domain.volume()..(pos + 1) * domain.volume()]
            .iter()
            .map(|r| RingElement::Rational(r.clone()))
            .collect();
        components.insert(mi, ScalarGrid::new(Ring::Rational, domain.clone(), values)?);
    }
    GridForm::new(Ring::Rational, domain.clone(), degree, components)
}

/// Flattens a rational chain supported on bases inside `region`.
pub fn chain_to_vector(chain: &Chain, region: &LatticeBox) -> Result<Vec<BigRational>> {
    if chain.ring() != &Ring::Rational {
        return Err(CoreError::Mismatch(
            "the oracle flattens rational chains only".into(),
        ));
    }
    let mis = MultiIndex::all(chain.dimension(), chain.degree());
    let mut out = vec![BigRational::zero(); mis.len() * region.volume()];
    for (cell, coeff) in chain.terms() {
        let mi_pos = mis
            .iter()
            .position(|x| x == cell.dirs())
            .expect("direction set enumerated");
        let offset = region.offset_of(cell.base())?;
        match coeff {
            RingElement::Rational(r) => out[mi_pos * region.volume() + offset] = r.clone(),
            _ => unreachable!("rational ring holds rational elements"),
        }
    }
    Ok(out)
}

/// Rebuilds a rational chain from its flattened vector over `region`.
pub fn vector_to_chain(v: &[BigRational], region: &LatticeBox, degree: usize) -> Result<Chain> {
    let mis = MultiIndex::all(region.dimension(), degree);
    if v.len() != mis.len() * region.volume() {
        return Err(CoreError::Validation(format!(
            "vector length {} does not match {} direction sets of volume {}",
            v.len(),
            mis.len(),
            region.volume()
        )));
    }
    let mut terms = Vec::new();
    for (pos, mi) in mis.iter().enumerate() {
        for (p_off, p) in region.points().enumerate() {
            let value = &v[pos * region.volume() + p_off];
            if !value.is_zero() {
                terms.push((
                    Cell::new(p, mi.clone())?,
                    RingElement::Rational(value.clone()),
                ));
            }
        }
    }
    Chain::from_terms(Ring::Rational, region.dimension(), degree, terms)
}

/// One named pass/fail line of the verification suite.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

// deterministic value stream for the agreement checks
struct SplitMix(u64);

impl SplitMix {
    fn next_small(&mut self) -> i64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        ((z ^ (z >> 31)) % 19) as i64 - 9
    }
}

fn pseudo_random_form(domain: &LatticeBox, degree: usize, seed: u64) -> GridForm {
    let ring = Ring::Rational;
    GridForm::from_fn(ring.clone(), domain.clone(), degree, |mi, p| {
        let mut h = seed;
        for &i in mi.indices() {
            h = h.wrapping_mul(31).wrapping_add(i as u64);
        }
        for &c in p.coords() {
            h = h.wrapping_mul(131).wrapping_add(c as u64);
        }
        ring.from_i64(SplitMix(h).next_small())
    })
    .expect("well-formed pseudo-random form")
}

/// Runs the full verification suite on one box over the rationals:
/// matrix/operator agreement, complex identities at the matrix level, the
/// window cohomology certification for every positive degree, and the
/// constants-only kernel in degree 0.
pub fn verify_box(extents: &[usize]) -> Result<Vec<CheckOutcome>> {
    let domain = LatticeBox::new(extents.to_vec())?;
    let d = domain.dimension();
    let shrunk = domain.shrink()?;
    let mut checks = Vec::new();

    // matrix application agrees with the sweep implementation of D
    for p in 0..d {
        let m = matrix_of_d(&domain, p)?;
        let mut pass = true;
        for trial in 0..3u64 {
            let form = pseudo_random_form(&domain, p, 1000 * trial + p as u64);
            let via_matrix = m.apply(&form_to_vector(&form)?)?;
            let via_operator = form_to_vector(&crate::forms::exterior_derivative(&form)?)?;
            pass &= via_matrix == via_operator;
        }
        checks.push(CheckOutcome::new(
            format!("matrix agrees with derivative on {p}-forms"),
            pass,
            format!("{}x{}", m.rows(), m.cols()),
        ));
    }

    // D∘D = 0 at the matrix level (needs room for two shrinks)
    if shrunk.extents().iter().all(|&n| n >= 2) {
        for p in 0..d.saturating_sub(1) {
            let first = matrix_of_d(&domain, p)?;
            let second = matrix_of_d(&shrunk, p + 1)?;
            checks.push(CheckOutcome::new(
                format!("derivative matrices compose to zero from {p}-forms"),
                second.multiply(&first)?.is_zero(),
                String::new(),
            ));
        }
    }

    // boundary matrices: agreement on basis cells and ∂∘∂ = 0
    for q in 1..=d {
        let m = matrix_of_boundary(&domain, q)?;
        let grown = domain.grow();
        let mut pass = true;
        let mis = MultiIndex::all(d, q);
        for (s_pos, mi) in mis.iter().enumerate() {
            for (p_off, base) in domain.points().enumerate() {
                let chain = Chain::single(Ring::Rational, Cell::new(base, mi.clone())?)?;
                let expected = chain_to_vector(&crate::chains::boundary(&chain)?, &grown)?;
                let mut unit = vec![BigRational::zero(); m.cols()];
                unit[s_pos * domain.volume() + p_off] = BigRational::one();
                pass &= m.apply(&unit)? == expected;
            }
        }
        checks.push(CheckOutcome::new(
            format!("matrix agrees with boundary on {q}-cells"),
            pass,
            format!("{}x{}", m.rows(), m.cols()),
        ));
        if q >= 2 {
            let inner = matrix_of_boundary(&domain, q)?;
            let outer = matrix_of_boundary(&domain.grow(), q - 1)?;
            checks.push(CheckOutcome::new(
                format!("boundary matrices compose to zero from {q}-cells"),
                outer.multiply(&inner)?.is_zero(),
                String::new(),
            ));
        }
    }

    // window cohomology: closed q-forms restricted to the shrunken box are
    // exactly the derivatives of (q-1)-forms, and the solver realizes each
    for q in 1..=d {
        let closed_basis: Vec<Vec<BigRational>> = if q < d {
            kernel_basis(&matrix_of_d(&domain, q)?)
        } else {
            let n = MultiIndex::all(d, d).len() * domain.volume();
            (0..n)
                .map(|i| {
                    let mut v = vec![BigRational::zero(); n];
                    v[i] = BigRational::one();
                    v
                })
                .collect()
        };
        let restrict = restriction_matrix(&domain, &shrunk, q)?;
        let image = matrix_of_d(&domain, q - 1)?;
        let restricted: Vec<Vec<BigRational>> = closed_basis
            .iter()
            .map(|v| restrict.apply(v))
            .collect::<Result<_>>()?;

        let dim_restricted_kernel = span_rank(&restricted);
        let dim_image = rank(&image);
        checks.push(CheckOutcome::new(
            format!("closed {q}-forms restrict onto exact ones (dimensions)"),
            dim_restricted_kernel == dim_image,
            format!("kernel restricts to dim {dim_restricted_kernel}, image has dim {dim_image}"),
        ));

        let mut membership = true;
        for rv in &restricted {
            membership &= in_image(&image, rv)?;
        }
        checks.push(CheckOutcome::new(
            format!("every closed {q}-form restriction lies in the image"),
            membership,
            format!("{} basis vectors", restricted.len()),
        ));

        let mut solved = true;
        for v in &closed_basis {
            let form = vector_to_form(v, &domain, q)?;
            match solve_potential(&form) {
                Ok(result) => {
                    let derivative = crate::forms::exterior_derivative(&result.potential)?;
                    solved &= derivative.equals(&form.restrict(&shrunk)?);
                }
                Err(_) => solved = false,
            }
        }
        checks.push(CheckOutcome::new(
            format!("solver recovers a potential for every closed {q}-form"),
            solved,
            format!("{} basis vectors", closed_basis.len()),
        ));
    }

    // degree 0: the kernel of the stacked differences is the constants
    let grad_matrix = scalar_difference_matrix(&domain)?;
    let kernel = kernel_basis(&grad_matrix);
    let constants_only = kernel.len() == 1 && {
        let v = &kernel[0];
        !v[0].is_zero() && v.iter().all(|x| x == &v[0])
    };
    checks.push(CheckOutcome::new(
        "difference kernel on 0-forms is the constants",
        constants_only,
        format!("kernel dimension {}", kernel.len()),
    ));

    Ok(checks)
}
