//! Finite axis-aligned boxes in the positive lattice, their points, and
//! strictly increasing multi-indices.
//!
//! Coordinates and axis numbers are 1-based throughout the public API: a box
//! with extents `(N_1, ..., N_d)` contains exactly the points `a` with
//! `1 <= a_i <= N_i`. Dense storage is row-major with the last axis fastest:
//! `offset(a) = sum_i (a_i - 1) * stride_i`, `stride_d = 1`,
//! `stride_i = stride_{i+1} * N_{i+1}`.

use std::fmt;

use crate::error::{CoreError, Result};

/// A finite window of the positive lattice: points `a` with `1 <= a_i <= N_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeBox {
    extents: Vec<usize>,
}

impl LatticeBox {
    pub fn new(extents: Vec<usize>) -> Result<Self> {
        if extents.is_empty() {
            return Err(CoreError::Validation("box needs at least one axis".into()));
        }
        if extents.contains(&0) {
            return Err(CoreError::Validation(format!(
                "extents must be positive, got {extents:?}"
            )));
        }
        Ok(LatticeBox { extents })
    }

    pub fn dimension(&self) -> usize {
        self.extents.len()
    }

    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    /// Extent along a 1-based axis.
    pub fn extent(&self, axis: usize) -> usize {
        self.extents[axis - 1]
    }

    pub fn volume(&self) -> usize {
        self.extents.iter().product()
    }

    /// The box with every extent reduced by one; defined only when all
    /// extents are at least 2.
    pub fn shrink(&self) -> Result<LatticeBox> {
        if let Some(axis) = self.extents.iter().position(|&n| n < 2) {
            return Err(CoreError::EmptyDomain(format!(
                "cannot shrink extent {} along axis {}",
                self.extents[axis],
                axis + 1
            )));
        }
        Ok(LatticeBox {
            extents: self.extents.iter().map(|&n| n - 1).collect(),
        })
    }

    /// The box with every extent increased by one.
    pub fn grow(&self) -> LatticeBox {
        LatticeBox {
            extents: self.extents.iter().map(|&n| n + 1).collect(),
        }
    }

    /// Reduces the extent along one 1-based axis only.
    pub fn shrink_axis(&self, axis: usize) -> Result<LatticeBox> {
        self.check_axis(axis)?;
        if self.extents[axis - 1] < 2 {
            return Err(CoreError::EmptyDomain(format!(
                "cannot shrink extent 1 along axis {axis}"
            )));
        }
        let mut extents = self.extents.clone();
        extents[axis - 1] -= 1;
        Ok(LatticeBox { extents })
    }

    /// Drops the last axis; requires dimension >= 2.
    pub fn base_box(&self) -> Result<LatticeBox> {
        if self.dimension() < 2 {
            return Err(CoreError::Validation(
                "cannot drop the last axis of a one-dimensional box".into(),
            ));
        }
        Ok(LatticeBox {
            extents: self.extents[..self.extents.len() - 1].to_vec(),
        })
    }

    /// Appends a new last axis with the given extent.
    pub fn with_axis(&self, extent: usize) -> Result<LatticeBox> {
        if extent == 0 {
            return Err(CoreError::Validation("new axis extent must be >= 1".into()));
        }
        let mut extents = self.extents.clone();
        extents.push(extent);
        Ok(LatticeBox { extents })
    }

    pub fn check_axis(&self, axis: usize) -> Result<()> {
        if axis == 0 || axis > self.dimension() {
            return Err(CoreError::Validation(format!(
                "axis {axis} out of range 1..={}",
                self.dimension()
            )));
        }
        Ok(())
    }

    /// True when `sub` has the same dimension and fits inside this box
    /// (corner at the origin).
    pub fn contains_box(&self, sub: &LatticeBox) -> bool {
        self.dimension() == sub.dimension()
            && sub.extents.iter().zip(&self.extents).all(|(&s, &n)| s <= n)
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        p.coords.len() == self.dimension()
            && p.coords
                .iter()
                .zip(&self.extents)
                .all(|(&c, &n)| c >= 1 && c <= n)
    }

    pub fn stride(&self, axis: usize) -> usize {
        self.extents[axis..].iter().product()
    }

    pub fn offset_of(&self, p: &LatticePoint) -> Result<usize> {
        if !self.contains(p) {
            return Err(CoreError::OutOfDomain(format!(
                "point {p} outside box with extents {:?}",
                self.extents
            )));
        }
        let mut offset = 0;
        let mut stride = 1;
        for (c, n) in p.coords.iter().zip(&self.extents).rev() {
            offset += (c - 1) * stride;
            stride *= n;
        }
        Ok(offset)
    }

    pub fn point_at(&self, mut offset: usize) -> LatticePoint {
        debug_assert!(offset < self.volume());
        let mut coords = vec![1; self.dimension()];
        for i in (0..self.dimension()).rev() {
            coords[i] = offset % self.extents[i] + 1;
            offset /= self.extents[i];
        }
        LatticePoint { coords }
    }

    /// Iterates all points in row-major order (last axis fastest), matching
    /// the storage offset order.
    pub fn points(&self) -> PointIter<'_> {
        PointIter {
            boxref: self,
            next: if self.volume() == 0 {
                None
            } else {
                Some(vec![1; self.dimension()])
            },
        }
    }
}

pub struct PointIter<'a> {
    boxref: &'a LatticeBox,
    next: Option<Vec<usize>>,
}

impl Iterator for PointIter<'_> {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        let coords = self.next.take()?;
        let mut succ = coords.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break; // wrapped past the first axis: iteration is done
            }
            i -= 1;
            if succ[i] < self.boxref.extents[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 1;
        }
        Some(LatticePoint { coords })
    }
}

/// A point of the positive lattice, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<usize>,
}

impl LatticePoint {
    pub fn new(coords: Vec<usize>) -> Result<Self> {
        if coords.is_empty() {
            return Err(CoreError::Validation(
                "point needs at least one axis".into(),
            ));
        }
        if coords.contains(&0) {
            return Err(CoreError::Validation(format!(
                "coordinates are 1-based, got {coords:?}"
            )));
        }
        Ok(LatticePoint { coords })
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// Coordinate along a 1-based axis.
    pub fn coord(&self, axis: usize) -> usize {
        self.coords[axis - 1]
    }

    /// The point `a + e_axis`.
    pub fn shifted(&self, axis: usize) -> LatticePoint {
        let mut coords = self.coords.clone();
        coords[axis - 1] += 1;
        LatticePoint { coords }
    }

    /// Drops the last coordinate; requires dimension >= 2.
    pub fn base_point(&self) -> LatticePoint {
        debug_assert!(self.dimension() >= 2);
        LatticePoint {
            coords: self.coords[..self.coords.len() - 1].to_vec(),
        }
    }

    /// Appends a last coordinate.
    pub fn with_coord(&self, c: usize) -> LatticePoint {
        debug_assert!(c >= 1);
        let mut coords = self.coords.clone();
        coords.push(c);
        LatticePoint { coords }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A strictly increasing list of 1-based axis numbers, possibly empty.
///
/// Multi-indices label the basis q-blades `dx_{i_1} ∧ ... ∧ dx_{i_q}` and
/// the direction sets of cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    indices: Vec<usize>,
}

impl MultiIndex {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.contains(&0) {
            return Err(CoreError::Validation(
                "multi-index entries are 1-based".into(),
            ));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CoreError::Validation(format!(
                "multi-index must be strictly increasing, got {indices:?}"
            )));
        }
        Ok(MultiIndex { indices })
    }

    pub fn empty() -> Self {
        MultiIndex { indices: vec![] }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i >= 1);
        MultiIndex { indices: vec![i] }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn max_entry(&self) -> Option<usize> {
        self.indices.last().copied()
    }

    /// All size-`q` multi-indices over axes `1..=d`, in lexicographic order.
    pub fn all(dimension: usize, size: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(size);
        fn rec(d: usize, q: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if cur.len() == q {
                out.push(MultiIndex {
                    indices: cur.clone(),
                });
                return;
            }
            for i in start..=d {
                cur.push(i);
                rec(d, q, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(dimension, size, 1, &mut current, &mut out);
        out
    }

    /// Removes one entry (which must be present).
    pub fn without(&self, value: usize) -> MultiIndex {
        let pos = self
            .indices
            .binary_search(&value)
            .expect("without: value not in multi-index");
        let mut indices = self.indices.clone();
        indices.remove(pos);
        MultiIndex { indices }
    }

    /// Inserts `j`, returning the enlarged index and the sign picked up by
    /// moving `dx_j` into sorted position; `None` if `j` is already present.
    pub fn insert_with_sign(&self, j: usize) -> Option<(MultiIndex, i32)> {
        match self.indices.binary_search(&j) {
            Ok(_) => None,
            Err(pos) => {
                let mut indices = self.indices.clone();
                indices.insert(pos, j);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                Some((MultiIndex { indices }, sign))
            }
        }
    }

    /// Merges two disjoint multi-indices, returning the sorted union and the
    /// sign of the shuffle; `None` if they intersect.
    pub fn merge_with_sign(&self, other: &MultiIndex) -> Option<(MultiIndex, i32)> {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let mut inversions = 0usize;
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.indices.len() || j < other.indices.len() {
            if j >= other.indices.len() {
                merged.push(self.indices[i]);
                i += 1;
            } else if i >= self.indices.len() {
                merged.push(other.indices[j]);
                j += 1;
            } else if self.indices[i] < other.indices[j] {
                merged.push(self.indices[i]);
                i += 1;
            } else if self.indices[i] > other.indices[j] {
                // other[j] jumps over every remaining entry of self
                inversions += self.indices.len() - i;
                merged.push(other.indices[j]);
                j += 1;
            } else {
                return None;
            }
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((MultiIndex { indices: merged }, sign))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, idx) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, "}}")
    }
}
