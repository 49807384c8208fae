//! Points, α-spaces and α-planes of the affine space F_q^δ.
//!
//! Subspaces are kept in reduced row echelon form and planes carry the
//! unique offset with zeros in every pivot coordinate, so structural
//! equality of [`AffinePlane`] values coincides with equality of the
//! underlying point sets.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};

/// Default ceiling on `q^δ` for anything that enumerates points or planes.
pub const DEFAULT_POINT_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("invalid dimensions: need 0 < alpha <= delta (alpha={alpha}, delta={delta})")]
    InvalidDimensions { alpha: u32, delta: u32 },
    #[error("geometry has {points} points, above the enumeration cap {cap}")]
    TooLarge { points: u128, cap: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the two planes are identical")]
    SamePlane,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

fn check_dims(delta: u32, alpha: u32) -> Result<()> {
    if alpha == 0 || alpha > delta {
        return Err(GeometryError::InvalidDimensions { alpha, delta });
    }
    Ok(())
}

/// Number of α-spaces of F_q^δ, which is also the number of α-planes
/// through any fixed point.
pub fn kappa(q: u64, delta: u32, alpha: u32) -> Result<BigUint> {
    check_dims(delta, alpha)?;
    let q = BigUint::from(q);
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for i in 1..=alpha {
        let qi = q.pow(i - 1);
        num *= q.pow(delta) - &qi;
        den *= q.pow(alpha) - &qi;
    }
    let (k, r) = num.div_rem(&den);
    debug_assert!(r == BigUint::ZERO);
    Ok(k)
}

/// Number of α-planes through two fixed distinct points.
pub fn kappa2(q: u64, delta: u32, alpha: u32) -> Result<BigUint> {
    let k = kappa(q, delta, alpha)?;
    let qb = BigUint::from(q);
    let (k2, r) = (k * (qb.pow(alpha) - 1u32)).div_rem(&(qb.pow(delta) - 1u32));
    debug_assert!(r == BigUint::ZERO);
    Ok(k2)
}

/// Total number of α-planes in F_q^δ.
pub fn plane_count(q: u64, delta: u32, alpha: u32) -> Result<BigUint> {
    Ok(BigUint::from(q).pow(delta - alpha.min(delta)) * kappa(q, delta, alpha)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<FieldElement>,
}

impl Point {
    pub fn new(coords: Vec<FieldElement>) -> Self {
        Point { coords }
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }
}

/// An α-dimensional linear subspace, basis in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn alpha(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

/// An α-plane `offset + W` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePlane {
    subspace: Subspace,
    offset: Point,
}

impl AffinePlane {
    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn offset(&self) -> &Point {
        &self.offset
    }

    pub fn alpha(&self) -> u32 {
        self.subspace.alpha()
    }
}

/// The affine space F_q^δ together with an enumeration cap.
#[derive(Clone, Debug)]
pub struct AffineSpace {
    field: Field,
    delta: u32,
    cap: u64,
}

impl AffineSpace {
    pub fn new(field: Field, delta: u32) -> Result<Self> {
        if delta == 0 {
            return Err(GeometryError::InvalidDimensions { alpha: 0, delta });
        }
        Ok(AffineSpace { field, delta, cap: DEFAULT_POINT_CAP })
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    /// `q^δ`, saturating at `u128::MAX`.
    pub fn point_count(&self) -> u128 {
        (self.q() as u128).checked_pow(self.delta).unwrap_or(u128::MAX)
    }

    /// Fails with `TooLarge` when the space exceeds the enumeration cap.
    pub fn ensure_enumerable(&self) -> Result<usize> {
        let n = self.point_count();
        if n > self.cap as u128 {
            return Err(GeometryError::TooLarge { points: n, cap: self.cap });
        }
        Ok(n as usize)
    }

    fn dim(&self) -> usize {
        self.delta as usize
    }

    fn check_point(&self, x: &Point) -> Result<()> {
        if x.dimension() != self.dim() {
            return Err(GeometryError::DimensionMismatch { expected: self.dim(), found: x.dimension() });
        }
        Ok(())
    }

    fn check_plane(&self, pl: &AffinePlane) -> Result<()> {
        self.check_point(&pl.offset)
    }

    /// Row-major base-q index; the first coordinate is most significant.
    pub fn point_index(&self, x: &Point) -> Result<u64> {
        self.check_point(x)?;
        Ok(self.raw_index(&raw(&x.coords)))
    }

    pub fn point(&self, index: u64) -> Point {
        self.wrap_point(self.raw_point(index))
    }

    pub fn points(&self) -> Result<impl Iterator<Item = Point> + '_> {
        let n = self.ensure_enumerable()? as u64;
        Ok((0..n).map(move |i| self.point(i)))
    }

    pub(crate) fn raw_index(&self, v: &[u32]) -> u64 {
        let q = self.q();
        v.iter().fold(0u64, |acc, &c| acc * q + c as u64)
    }

    pub(crate) fn raw_point(&self, mut index: u64) -> Vec<u32> {
        let q = self.q();
        let mut v = vec![0u32; self.dim()];
        for slot in v.iter_mut().rev() {
            *slot = (index % q) as u32;
            index /= q;
        }
        v
    }

    fn wrap(&self, v: u32) -> FieldElement {
        self.field.element(v as u64).expect("raw coordinate in range")
    }

    fn wrap_point(&self, v: Vec<u32>) -> Point {
        Point { coords: v.into_iter().map(|c| self.wrap(c)).collect() }
    }

    fn wrap_subspace(&self, rows: Vec<Vec<u32>>, pivots: Vec<usize>) -> Subspace {
        Subspace {
            rows: rows.into_iter().map(|r| r.into_iter().map(|c| self.wrap(c)).collect()).collect(),
            pivots,
        }
    }

    /// All α-spaces in a fixed order: pivot patterns (ascending α-subsets of
    /// the δ columns) and, within each, the free entries counted in base q.
    pub fn enumerate_subspaces(&self, alpha: u32) -> Result<SubspaceIter<'_>> {
        check_dims(self.delta, alpha)?;
        self.ensure_enumerable()?;
        Ok(SubspaceIter::new(self, alpha))
    }

    /// All α-planes: for each subspace in enumeration order, its `q^{δ-α}`
    /// cosets.
    pub fn enumerate_planes(&self, alpha: u32) -> Result<PlaneIter<'_>> {
        let subspaces = self.enumerate_subspaces(alpha)?;
        Ok(PlaneIter { space: self, subspaces, current: None, next_offset: 0 })
    }

    /// The `q^α` points of a plane, ordered by their coefficient vectors.
    pub fn plane_points(&self, pl: &AffinePlane) -> Vec<Point> {
        self.plane_point_indices(pl).into_iter().map(|i| self.point(i)).collect()
    }

    /// Point indices of a plane, in the same order as [`Self::plane_points`].
    pub fn plane_point_indices(&self, pl: &AffinePlane) -> Vec<u64> {
        let rows: Vec<Vec<u32>> = pl.subspace.rows.iter().map(|r| raw(r)).collect();
        let offset = raw(&pl.offset.coords);
        let q = self.q();
        let alpha = rows.len() as u32;
        let total = q.pow(alpha);
        let mut out = Vec::with_capacity(total as usize);
        for t in 0..total {
            let mut v = offset.clone();
            let mut rest = t;
            for row in rows.iter().rev() {
                let coef = (rest % q) as u32;
                rest /= q;
                if coef != 0 {
                    axpy(&self.field, &mut v, coef, row);
                }
            }
            out.push(self.raw_index(&v));
        }
        out
    }

    /// Membership test without materializing the plane.
    pub fn contains(&self, pl: &AffinePlane, x: &Point) -> Result<bool> {
        self.check_plane(pl)?;
        self.check_point(x)?;
        Ok(self.contains_raw(pl, &raw(&x.coords)))
    }

    pub(crate) fn contains_raw(&self, pl: &AffinePlane, x: &[u32]) -> bool {
        let f = &self.field;
        let mut v: Vec<u32> = x.iter().zip(&pl.offset.coords).map(|(&a, b)| f.sub_raw(a, b.value())).collect();
        for (row, &piv) in pl.subspace.rows.iter().zip(&pl.subspace.pivots) {
            let t = v[piv];
            if t != 0 {
                let row = raw(row);
                axpy(f, &mut v, f.neg_raw(t), &row);
            }
        }
        v.iter().all(|&c| c == 0)
    }

    /// The α-plane equal to the affine span of `points`, provided that span
    /// has dimension exactly α. Any other span dimension gives `None`.
    pub fn plane_through(&self, points: &[Point], alpha: u32) -> Result<Option<AffinePlane>> {
        check_dims(self.delta, alpha)?;
        let Some(base) = points.first() else {
            return Err(GeometryError::DimensionMismatch { expected: 1, found: 0 });
        };
        for x in points {
            self.check_point(x)?;
        }
        let f = &self.field;
        let base = raw(&base.coords);
        let diffs: Vec<Vec<u32>> = points[1..]
            .iter()
            .map(|x| x.coords.iter().zip(&base).map(|(a, &b)| f.sub_raw(a.value(), b)).collect())
            .collect();
        let (rows, pivots) = rref(f, diffs);
        if rows.len() != alpha as usize {
            return Ok(None);
        }
        let offset = reduce(f, base, &rows, &pivots);
        Ok(Some(AffinePlane { subspace: self.wrap_subspace(rows, pivots), offset: self.wrap_point(offset) }))
    }

    /// `|U ∩ W|` for distinct planes of equal dimension: 0 or a power of q.
    pub fn intersection_size(&self, u: &AffinePlane, w: &AffinePlane) -> Result<u64> {
        self.check_plane(u)?;
        self.check_plane(w)?;
        if u.alpha() != w.alpha() {
            return Err(GeometryError::DimensionMismatch { expected: u.alpha() as usize, found: w.alpha() as usize });
        }
        if u == w {
            return Err(GeometryError::SamePlane);
        }
        let f = &self.field;
        let mut stacked: Vec<Vec<u32>> = u.subspace.rows.iter().chain(&w.subspace.rows).map(|r| raw(r)).collect();
        let (sum_rows, _) = rref(f, stacked.clone());
        let diff: Vec<u32> = w.offset.coords.iter().zip(&u.offset.coords).map(|(a, b)| f.sub_raw(a.value(), b.value())).collect();
        stacked.push(diff);
        let (with_diff, _) = rref(f, stacked);
        if with_diff.len() > sum_rows.len() {
            return Ok(0);
        }
        let meet_dim = 2 * u.alpha() - sum_rows.len() as u32;
        Ok(self.q().pow(meet_dim))
    }

    /// Canonical form of `offset + span(rows)`. Rows need not be reduced or
    /// independent; `None` if their span is not α-dimensional.
    pub fn plane_from_basis(&self, rows: &[Vec<FieldElement>], offset: &Point, alpha: u32) -> Result<Option<AffinePlane>> {
        check_dims(self.delta, alpha)?;
        self.check_point(offset)?;
        for r in rows {
            if r.len() != self.dim() {
                return Err(GeometryError::DimensionMismatch { expected: self.dim(), found: r.len() });
            }
        }
        let (rows, pivots) = rref(&self.field, rows.iter().map(|r| raw(r)).collect());
        if rows.len() != alpha as usize {
            return Ok(None);
        }
        let off = reduce(&self.field, raw(&offset.coords), &rows, &pivots);
        Ok(Some(AffinePlane { subspace: self.wrap_subspace(rows, pivots), offset: self.wrap_point(off) }))
    }

    /// `(c1,c2,...)` with coordinates in the field's digit-string form.
    pub fn format_point(&self, x: &Point) -> String {
        let parts: Vec<String> = x.coords.iter().map(|&c| self.field.format_element(c)).collect();
        format!("({})", parts.join(","))
    }

    pub fn parse_point(&self, s: &str) -> Result<Point> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| GeometryError::Parse(s.to_string()))?;
        let coords = inner.split(',').map(|t| self.field.parse_element(t)).collect::<std::result::Result<Vec<_>, _>>()?;
        let x = Point { coords };
        self.check_point(&x)?;
        Ok(x)
    }

    /// Basis rows separated by spaces in brackets, then `; ` and the offset,
    /// e.g. `[1 0 2] [0 1 1]; (0,0,4)`.
    pub fn format_plane(&self, pl: &AffinePlane) -> String {
        let rows: Vec<String> = pl
            .subspace
            .rows
            .iter()
            .map(|r| {
                let els: Vec<String> = r.iter().map(|&c| self.field.format_element(c)).collect();
                format!("[{}]", els.join(" "))
            })
            .collect();
        format!("{}; {}", rows.join(" "), self.format_point(&pl.offset))
    }

    pub fn parse_plane(&self, s: &str) -> Result<AffinePlane> {
        let bad = || GeometryError::Parse(s.to_string());
        let (rows_s, offset_s) = s.split_once(';').ok_or_else(bad)?;
        let offset = self.parse_point(offset_s)?;
        let mut rows = Vec::new();
        for chunk in rows_s.split(']') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let body = chunk.strip_prefix('[').ok_or_else(bad)?;
            let row = body.split_whitespace().map(|t| self.field.parse_element(t)).collect::<std::result::Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let alpha = rows.len() as u32;
        let pl = self.plane_from_basis(&rows, &offset, alpha)?.ok_or_else(bad)?;
        // only canonical text round-trips
        if pl.subspace.rows != rows || pl.offset != offset {
            return Err(bad());
        }
        Ok(pl)
    }
}

fn raw(v: &[FieldElement]) -> Vec<u32> {
    v.iter().map(|c| c.value()).collect()
}

/// `v += coef * row`
fn axpy(f: &Field, v: &mut [u32], coef: u32, row: &[u32]) {
    for (x, &r) in v.iter_mut().zip(row) {
        if r != 0 {
            *x = f.add_raw(*x, f.mul_raw(coef, r));
        }
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivots.
pub(crate) fn rref(f: &Field, mut rows: Vec<Vec<u32>>) -> (Vec<Vec<u32>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, sel);
        let inv = f.inv_raw(rows[r][col]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = f.mul_raw(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let t = f.neg_raw(row[col]);
                axpy(f, row, t, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Zeroes the pivot coordinates of `v` by subtracting basis rows.
fn reduce(f: &Field, mut v: Vec<u32>, rows: &[Vec<u32>], pivots: &[usize]) -> Vec<u32> {
    for (row, &piv) in rows.iter().zip(pivots) {
        let t = v[piv];
        if t != 0 {
            axpy(f, &mut v, f.neg_raw(t), row);
        }
    }
    v
}

/// Ascending α-subsets of `0..delta` in lexicographic order.
fn combinations(delta: usize, alpha: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..alpha).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..alpha).rev().find(|&i| cur[i] < delta - alpha + i) else { break };
        cur[i] += 1;
        for j in i + 1..alpha {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

pub struct SubspaceIter<'a> {
    space: &'a AffineSpace,
    patterns: Vec<Vec<usize>>,
    pattern: usize,
    free: Vec<(usize, usize)>,
    counter: u64,
    total: u64,
}

impl<'a> SubspaceIter<'a> {
    fn new(space: &'a AffineSpace, alpha: u32) -> Self {
        let patterns = combinations(space.dim(), alpha as usize);
        let mut it = SubspaceIter { space, patterns, pattern: 0, free: Vec::new(), counter: 0, total: 0 };
        it.load_pattern();
        it
    }

    fn load_pattern(&mut self) {
        let Some(pat) = self.patterns.get(self.pattern) else { return };
        self.free = pat
            .iter()
            .enumerate()
            .flat_map(|(i, &piv)| (piv + 1..self.space.dim()).filter(|c| !pat.contains(c)).map(move |c| (i, c)))
            .collect();
        self.counter = 0;
        self.total = self.space.q().pow(self.free.len() as u32);
    }
}

impl Iterator for SubspaceIter<'_> {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        while self.counter >= self.total {
            self.pattern += 1;
            if self.pattern >= self.patterns.len() {
                return None;
            }
            self.load_pattern();
        }
        let pat = &self.patterns[self.pattern];
        let q = self.space.q();
        let mut rows = vec![vec![0u32; self.space.dim()]; pat.len()];
        for (i, &piv) in pat.iter().enumerate() {
            rows[i][piv] = 1;
        }
        let mut rest = self.counter;
        for &(i, c) in self.free.iter().rev() {
            rows[i][c] = (rest % q) as u32;
            rest /= q;
        }
        self.counter += 1;
        Some(self.space.wrap_subspace(rows, pat.clone()))
    }
}

pub struct PlaneIter<'a> {
    space: &'a AffineSpace,
    subspaces: SubspaceIter<'a>,
    current: Option<Subspace>,
    next_offset: u64,
}

impl Iterator for PlaneIter<'_> {
    type Item = AffinePlane;

    fn next(&mut self) -> Option<AffinePlane> {
        let space = self.space;
        let cosets = space.q().pow(space.delta - self.subspaces.patterns[0].len() as u32);
        if self.current.is_none() || self.next_offset >= cosets {
            self.current = Some(self.subspaces.next()?);
            self.next_offset = 0;
        }
        let sub = self.current.as_ref().unwrap();
        let q = space.q();
        let mut offset = vec![0u32; space.dim()];
        let mut rest = self.next_offset;
        for c in (0..space.dim()).rev().filter(|c| !sub.pivots.contains(c)) {
            offset[c] = (rest % q) as u32;
            rest /= q;
        }
        self.next_offset += 1;
        Some(AffinePlane { subspace: sub.clone(), offset: space.wrap_point(offset) })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.value().to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Converts a [`BigUint`] count to `u64`, for sizes already known to be small.
pub fn small(n: &BigUint) -> u64 {
    n.to_u64().expect("count fits in u64")
}
