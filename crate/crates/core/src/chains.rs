//! Cells, chains, the boundary map, and the integral pairing.
//!
//! A cell `[a : e_{l_1}, ..., e_{l_q}]` is a base point with q distinct unit
//! directions; a chain is a finite linear combination of cells. Cells carry
//! absolute coordinates and are not tied to any box — the boundary of a cell
//! references shifted points that always exist in the infinite lattice. Box
//! membership is only checked when a chain is paired against a form.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{CoreError, Result};
use crate::forms::{exterior_derivative, sign_s, GridForm};
use crate::lattice::{LatticePoint, MultiIndex};
use crate::ring::{Ring, RingElement};

/// An oriented lattice cell: base point plus strictly increasing directions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    base: LatticePoint,
    dirs: MultiIndex,
}

impl Cell {
    pub fn new(base: LatticePoint, dirs: MultiIndex) -> Result<Self> {
        if let Some(max) = dirs.max_entry() {
            if max > base.dimension() {
                return Err(CoreError::Validation(format!(
                    "direction {max} exceeds dimension {}",
                    base.dimension()
                )));
            }
        }
        Ok(Cell { base, dirs })
    }

    /// A degree-0 cell `[a]`.
    pub fn point(base: LatticePoint) -> Self {
        Cell {
            base,
            dirs: MultiIndex::empty(),
        }
    }

    pub fn base(&self) -> &LatticePoint {
        &self.base
    }

    pub fn dirs(&self) -> &MultiIndex {
        &self.dirs
    }

    pub fn degree(&self) -> usize {
        self.dirs.len()
    }

    pub fn dimension(&self) -> usize {
        self.base.dimension()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.base, self.dirs)
    }
}

/// A finite linear combination of cells of one degree, in canonical form:
/// cells sorted by base then directions, zero coefficients dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    ring: Ring,
    dimension: usize,
    degree: usize,
    terms: BTreeMap<Cell, RingElement>,
}

impl Chain {
    pub fn zero(ring: Ring, dimension: usize, degree: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(CoreError::Validation("dimension must be positive".into()));
        }
        if degree > dimension {
            return Err(CoreError::Degree(format!(
                "degree {degree} exceeds dimension {dimension}"
            )));
        }
        Ok(Chain {
            ring,
            dimension,
            degree,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_terms(
        ring: Ring,
        dimension: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Cell, RingElement)>,
    ) -> Result<Self> {
        let mut chain = Chain::zero(ring, dimension, degree)?;
        for (cell, coeff) in terms {
            chain.accumulate(cell, coeff)?;
        }
        Ok(chain)
    }

    /// A single cell with unit coefficient.
    pub fn single(ring: Ring, cell: Cell) -> Result<Self> {
        let one = ring.one();
        Chain::from_terms(ring, cell.dimension(), cell.degree(), [(cell, one)])
    }

    /// Adds `coeff * cell`, keeping the canonical form.
    pub fn accumulate(&mut self, cell: Cell, coeff: RingElement) -> Result<()> {
        self.ring.check(&coeff)?;
        if cell.dimension() != self.dimension {
            return Err(CoreError::Mismatch(format!(
                "cell {cell} has dimension {}, chain has {}",
                cell.dimension(),
                self.dimension
            )));
        }
        if cell.degree() != self.degree {
            return Err(CoreError::Mismatch(format!(
                "cell {cell} has degree {}, chain has {}",
                cell.degree(),
                self.degree
            )));
        }
        let updated = match self.terms.get(&cell) {
            Some(existing) => self.ring.add(existing, &coeff),
            None => coeff,
        };
        if self.ring.is_zero(&updated) {
            self.terms.remove(&cell);
        } else {
            self.terms.insert(cell, updated);
        }
        Ok(())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Cell, &RingElement)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, cell: &Cell) -> RingElement {
        self.terms
            .get(cell)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn add(&self, other: &Chain) -> Result<Chain> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (cell, coeff) in &other.terms {
            out.accumulate(cell.clone(), coeff.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Chain {
        let terms = self
            .terms
            .iter()
            .map(|(c, r)| (c.clone(), self.ring.neg(r)))
            .collect();
        Chain {
            ring: self.ring.clone(),
            dimension: self.dimension,
            degree: self.degree,
            terms,
        }
    }

    pub fn sub(&self, other: &Chain) -> Result<Chain> {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &RingElement) -> Result<Chain> {
        self.ring.check(r)?;
        let mut out = Chain::zero(self.ring.clone(), self.dimension, self.degree)?;
        for (cell, coeff) in &self.terms {
            out.accumulate(cell.clone(), self.ring.mul(r, coeff))?;
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Chain) -> Result<()> {
        if self.ring != other.ring {
            return Err(CoreError::Mismatch("chains over different rings".into()));
        }
        if self.dimension != other.dimension || self.degree != other.degree {
            return Err(CoreError::Mismatch(format!(
                "chain shape mismatch: ({}, {}) vs ({}, {})",
                self.dimension, self.degree, other.dimension, other.degree
            )));
        }
        Ok(())
    }
}

/// The boundary map, extended linearly from
/// `D'[a : e_{l_1}, ..., e_{l_q}] = Σ_i s_I(l_i) ([a + e_{l_i} : ...omit l_i...] - [a : ...omit l_i...])`.
///
/// Since the directions are sorted, `s_I(l_i) = (-1)^(i-1)`.
pub fn boundary(chain: &Chain) -> Result<Chain> {
    if chain.degree() == 0 {
        return Err(CoreError::Degree(
            "boundary of a degree-0 chain is undefined".into(),
        ));
    }
    let ring = chain.ring().clone();
    let mut out = Chain::zero(ring.clone(), chain.dimension(), chain.degree() - 1)?;
    for (cell, coeff) in chain.terms() {
        for &axis in cell.dirs().indices() {
            let face_dirs = cell.dirs().without(axis);
            let signed = if sign_s(cell.dirs(), axis) < 0 {
                ring.neg(coeff)
            } else {
                coeff.clone()
            };
            out.accumulate(
                Cell::new(cell.base().shifted(axis), face_dirs.clone())?,
                signed.clone(),
            )?;
            out.accumulate(
                Cell::new(cell.base().clone(), face_dirs)?,
                ring.neg(&signed),
            )?;
        }
    }
    Ok(out)
}

/// The integral pairing `B(ω, Σ r_A [a : I]) = Σ r_A f_I(a)`.
///
/// Every cell base must lie in the form's box; the first offending cell is
/// named in the error.
pub fn pair(form: &GridForm, chain: &Chain) -> Result<RingElement> {
    if form.ring() != chain.ring() {
        return Err(CoreError::Mismatch(
            "form and chain over different rings".into(),
        ));
    }
    if form.dimension() != chain.dimension() {
        return Err(CoreError::Mismatch(format!(
            "form dimension {} vs chain dimension {}",
            form.dimension(),
            chain.dimension()
        )));
    }
    if form.degree() != chain.degree() {
        return Err(CoreError::Mismatch(format!(
            "form degree {} vs chain degree {}",
            form.degree(),
            chain.degree()
        )));
    }
    let ring = form.ring();
    let mut total = ring.zero();
    for (cell, coeff) in chain.terms() {
        if !form.domain().contains(cell.base()) {
            return Err(CoreError::OutOfDomain(format!(
                "cell {cell} has base outside box with extents {:?}",
                form.domain().extents()
            )));
        }
        let value = form.get(cell.dirs(), cell.base())?;
        total = ring.add(&total, &ring.mul(coeff, value));
    }
    Ok(total)
}

/// Both sides of the discrete Stokes identity for one (form, chain) pair.
#[derive(Debug, Clone)]
pub struct StokesReport {
    /// `B(Dω, c)`
    pub lhs: RingElement,
    /// `B(ω, D'c)`
    pub rhs: RingElement,
    pub equal: bool,
}

/// Evaluates `B(Dω, c)` against `B(ω, D'c)`. Every cell base must lie in the
/// shrunken box so that the derivative side is defined.
pub fn stokes_verify(form: &GridForm, chain: &Chain) -> Result<StokesReport> {
    let derivative = exterior_derivative(form)?;
    let lhs = pair(&derivative, chain)?;
    let rhs = pair(form, &boundary(chain)?)?;
    let equal = form.ring().eq(&lhs, &rhs);
    Ok(StokesReport { lhs, rhs, equal })
}
