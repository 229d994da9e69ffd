//! Linear algebra over the two-element field.
//!
//! Vectors are bit-packed into a single machine word (ambient dimension is
//! capped at 32, far above the rank-plus-one spaces this crate works in), and
//! subspaces are kept in reduced row echelon form so that structural equality
//! of the representation coincides with equality of the subspace.

use crate::error::{Error, Result};

/// Largest supported ambient dimension for [`F2Vector`].
pub const MAX_DIM: usize = 32;

/// Ambient-dimension limit for [`enumerate_subspaces`].
pub const MAX_ENUM_DIM: usize = 16;

/// A vector in `F_2^n`, `n <= 32`. Coordinate `i` is bit `i`.
///
/// The `Ord` instance orders first by ambient dimension, then by the packed
/// bits read as an integer; within a fixed ambient space this gives the
/// deterministic "least vector" used for canonical representatives.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F2Vector {
    dim: u8,
    bits: u32,
}

impl F2Vector {
    /// The zero vector of the given ambient dimension.
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "ambient dimension {dim} exceeds {MAX_DIM}");
        F2Vector { dim: dim as u8, bits: 0 }
    }

    /// Builds a vector from packed bits; bits at positions `>= dim` must be clear.
    pub fn from_bits(bits: u32, dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "ambient dimension {dim} exceeds {MAX_DIM}");
        if dim < 32 {
            assert!(bits >> dim == 0, "bits set beyond ambient dimension {dim}");
        }
        F2Vector { dim: dim as u8, bits }
    }

    /// The standard basis vector `e_i` (0-indexed).
    pub fn unit(i: usize, dim: usize) -> Self {
        assert!(i < dim, "coordinate {i} out of range for dimension {dim}");
        Self::from_bits(1 << i, dim)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinate `i` as a boolean.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.dim(), "coordinate {i} out of range");
        self.bits >> i & 1 == 1
    }

    /// Returns a copy with coordinate `i` set to `value`.
    pub fn with(&self, i: usize, value: bool) -> Self {
        assert!(i < self.dim(), "coordinate {i} out of range");
        let bits = if value { self.bits | 1 << i } else { self.bits & !(1 << i) };
        F2Vector { dim: self.dim, bits }
    }

    /// Coordinatewise sum. Panics if the ambient dimensions differ.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "ambient dimension mismatch");
        F2Vector { dim: self.dim, bits: self.bits ^ other.bits }
    }

    /// Parity of the coordinatewise product, `sum_i x_i y_i`.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.dim, other.dim, "ambient dimension mismatch");
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(|&i| self.get(i))
    }

    /// Keeps the first `k` coordinates, dropping the rest.
    pub fn truncate(&self, k: usize) -> Self {
        assert!(k <= self.dim());
        let mask = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        F2Vector { dim: k as u8, bits: self.bits & mask }
    }

    /// Extends by zero coordinates up to dimension `k`.
    pub fn extend(&self, k: usize) -> Self {
        assert!(k >= self.dim() && k <= MAX_DIM);
        F2Vector { dim: k as u8, bits: self.bits }
    }

    /// All `2^dim` vectors of the ambient space, in increasing bit order.
    pub fn all(dim: usize) -> impl Iterator<Item = F2Vector> {
        assert!(dim <= MAX_ENUM_DIM, "refusing to enumerate 2^{dim} vectors");
        (0..1u64 << dim).map(move |b| F2Vector::from_bits(b as u32, dim))
    }
}

impl std::fmt::Display for F2Vector {
    /// Little-endian bitstring: the character at position `i` is coordinate `i`,
    /// so `"1101"` denotes `e_1 + e_2 + e_4` in 1-indexed terms.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.dim() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F2Vector({self})")
    }
}

impl std::str::FromStr for F2Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > MAX_DIM {
            return Err(Error::Document(format!(
                "bitstring length must be between 1 and {MAX_DIM}, got {}",
                s.len()
            )));
        }
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << i,
                '0' => {}
                other => {
                    return Err(Error::Document(format!("invalid bitstring character {other:?}")))
                }
            }
        }
        Ok(F2Vector::from_bits(bits, s.len()))
    }
}

/// A subspace of `F_2^n`, stored as a reduced-row-echelon basis.
///
/// The basis rows are kept with strictly increasing pivot positions and each
/// pivot column cleared in every other row, so two values compare equal
/// exactly when they denote the same subspace of the same ambient space.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct F2Subspace {
    ambient: usize,
    basis: Vec<F2Vector>,
    pivots: Vec<usize>,
}

impl F2Subspace {
    /// The zero subspace.
    pub fn zero(ambient: usize) -> Self {
        assert!(ambient <= MAX_DIM);
        F2Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    /// The full ambient space.
    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, (0..ambient).map(|i| F2Vector::unit(i, ambient)))
    }

    /// The span of the given vectors, reduced to canonical form.
    ///
    /// Panics if any vector has a different ambient dimension.
    pub fn from_vectors<I: IntoIterator<Item = F2Vector>>(ambient: usize, vectors: I) -> Self {
        assert!(ambient <= MAX_DIM);
        let mut space = Self::zero(ambient);
        for v in vectors {
            space.insert(&v);
        }
        space
    }

    /// Adds a vector to the span, keeping the basis in canonical form.
    pub fn insert(&mut self, v: &F2Vector) {
        assert_eq!(v.dim(), self.ambient, "ambient dimension mismatch");
        let mut v = *v;
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v.get(p) {
                v = v.add(row);
            }
        }
        if v.is_zero() {
            return;
        }
        let pivot = v.support().next().unwrap();
        // Clear the new pivot column in the existing rows, then splice the row
        // in at its sorted position.
        for row in &mut self.basis {
            if row.get(pivot) {
                *row = row.add(&v);
            }
        }
        let at = self.pivots.iter().position(|&p| p > pivot).unwrap_or(self.pivots.len());
        self.basis.insert(at, v);
        self.pivots.insert(at, pivot);
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The canonical basis rows, pivot positions strictly increasing.
    pub fn basis(&self) -> &[F2Vector] {
        &self.basis
    }

    /// Pivot coordinates of the canonical basis.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace: the result is the canonical coset
    /// representative, supported away from the pivot coordinates.
    pub fn reduce(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.dim(), self.ambient, "ambient dimension mismatch");
        let mut v = *v;
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v.get(p) {
                v = v.add(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &F2Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        other.basis.iter().all(|v| self.contains(v))
    }

    /// All `2^dim` elements, in the order induced by binary counting over the
    /// canonical basis.
    pub fn elements(&self) -> impl Iterator<Item = F2Vector> + '_ {
        assert!(self.dim() <= MAX_ENUM_DIM, "refusing to enumerate 2^{} elements", self.dim());
        (0..1u64 << self.dim()).map(move |mask| {
            let mut v = F2Vector::zero(self.ambient);
            for (i, row) in self.basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v = v.add(row);
                }
            }
            v
        })
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &F2Subspace) -> F2Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v);
        }
        out
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersection(&self, other: &F2Subspace) -> F2Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        // Zassenhaus: row-reduce [v | v] for v in self and [w | 0] for w in
        // other; rows that vanish on the left carry intersection vectors on
        // the right.
        let n = self.ambient;
        let mut rows: Vec<u64> = Vec::new();
        let push = |mut row: u64, rows: &mut Vec<u64>| {
            for r in rows.iter() {
                let p = 63 - r.leading_zeros();
                if row >> p & 1 == 1 {
                    row ^= r;
                }
            }
            if row != 0 {
                rows.push(row);
                rows.sort_unstable_by(|a, b| b.cmp(a));
            }
        };
        for v in &self.basis {
            push((v.bits() as u64) << n | v.bits() as u64, &mut rows);
        }
        for w in &other.basis {
            push((w.bits() as u64) << n, &mut rows);
        }
        let mask = (1u64 << n) - 1;
        let vectors = rows
            .iter()
            .filter(|r| *r >> n == 0)
            .map(|r| F2Vector::from_bits((r & mask) as u32, n));
        F2Subspace::from_vectors(n, vectors)
    }

    /// The canonical projection onto the quotient by this subspace, realized
    /// as the map reading off the non-pivot coordinates of [`reduce`].
    ///
    /// Its kernel is exactly this subspace, and composing with [`section`]
    /// is the identity on the quotient.
    ///
    /// [`reduce`]: F2Subspace::reduce
    /// [`section`]: F2Subspace::section
    pub fn quotient_map(&self) -> F2LinearMap {
        let free: Vec<usize> =
            (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect();
        let cod = free.len();
        let cols = (0..self.ambient)
            .map(|i| {
                let r = self.reduce(&F2Vector::unit(i, self.ambient));
                let mut out = F2Vector::zero(cod);
                for (j, &f) in free.iter().enumerate() {
                    if r.get(f) {
                        out = out.with(j, true);
                    }
                }
                out
            })
            .collect();
        F2LinearMap::from_columns(self.ambient, cod, cols)
    }

    /// The canonical section of [`quotient_map`](F2Subspace::quotient_map):
    /// places quotient coordinates at the non-pivot positions.
    pub fn section(&self) -> F2LinearMap {
        let free: Vec<usize> =
            (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect();
        let cols = free.iter().map(|&f| F2Vector::unit(f, self.ambient)).collect();
        F2LinearMap::from_columns(free.len(), self.ambient, cols)
    }
}

/// A linear map `F_2^dom -> F_2^cod`, stored by columns: column `j` is the
/// image of the `j`-th standard basis vector, and the map acts on column
/// vectors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct F2LinearMap {
    dom: usize,
    cod: usize,
    cols: Vec<F2Vector>,
}

impl F2LinearMap {
    pub fn from_columns(dom: usize, cod: usize, cols: Vec<F2Vector>) -> Self {
        assert_eq!(cols.len(), dom, "expected {dom} columns");
        assert!(cols.iter().all(|c| c.dim() == cod), "column dimension mismatch");
        F2LinearMap { dom, cod, cols }
    }

    /// Builds the map sending the `j`-th basis vector to `f(j)`.
    pub fn from_fn(dom: usize, cod: usize, f: impl Fn(usize) -> F2Vector) -> Self {
        Self::from_columns(dom, cod, (0..dom).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |j| F2Vector::unit(j, n))
    }

    pub fn zero(dom: usize, cod: usize) -> Self {
        Self::from_fn(dom, cod, |_| F2Vector::zero(cod))
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn columns(&self) -> &[F2Vector] {
        &self.cols
    }

    pub fn apply(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.dim(), self.dom, "ambient dimension mismatch");
        let mut out = F2Vector::zero(self.cod);
        let mut bits = v.bits();
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            out = out.add(&self.cols[j]);
            bits &= bits - 1;
        }
        out
    }

    /// Composition `self . other`, applying `other` first.
    pub fn compose(&self, other: &F2LinearMap) -> F2LinearMap {
        assert_eq!(self.dom, other.cod, "composition dimension mismatch");
        F2LinearMap::from_fn(other.dom, self.cod, |j| self.apply(&other.cols[j]))
    }

    /// Image of a subspace under the map.
    pub fn image_of(&self, s: &F2Subspace) -> F2Subspace {
        F2Subspace::from_vectors(self.cod, s.basis().iter().map(|v| self.apply(v)))
    }

    /// The image of the whole domain.
    pub fn image(&self) -> F2Subspace {
        F2Subspace::from_vectors(self.cod, self.cols.iter().copied())
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    pub fn kernel(&self) -> F2Subspace {
        // Reduce the columns while tracking the domain combination producing
        // each; combinations that reach zero span the kernel.
        let mut rows: Vec<(F2Vector, F2Vector)> = Vec::new();
        let mut kernel = Vec::new();
        for j in 0..self.dom {
            let mut img = self.cols[j];
            let mut pre = F2Vector::unit(j, self.dom);
            for (rimg, rpre) in &rows {
                let p = rimg.support().next().unwrap();
                if img.get(p) {
                    img = img.add(rimg);
                    pre = pre.add(rpre);
                }
            }
            if img.is_zero() {
                kernel.push(pre);
            } else {
                rows.push((img, pre));
                rows.sort_unstable_by_key(|(i, _)| i.support().next().unwrap());
            }
        }
        F2Subspace::from_vectors(self.dom, kernel)
    }

    pub fn is_invertible(&self) -> bool {
        self.dom == self.cod && self.rank() == self.dom
    }

    pub fn inverse(&self) -> Result<F2LinearMap> {
        if self.dom != self.cod {
            return Err(Error::NotInvertible);
        }
        // Gauss-Jordan on [M | I].
        let n = self.dom;
        let mut m: Vec<F2Vector> = (0..n)
            .map(|i| {
                let mut row = F2Vector::zero(2 * n);
                for j in 0..n {
                    if self.cols[j].get(i) {
                        row = row.with(j, true);
                    }
                }
                row.with(n + i, true)
            })
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| m[r].get(col)) else {
                return Err(Error::NotInvertible);
            };
            m.swap(col, p);
            for r in 0..n {
                if r != col && m[r].get(col) {
                    m[r] = m[r].add(&m[col]);
                }
            }
        }
        Ok(F2LinearMap::from_fn(n, n, |j| {
            let mut c = F2Vector::zero(n);
            for (i, row) in m.iter().enumerate() {
                if row.get(n + j) {
                    c = c.with(i, true);
                }
            }
            c
        }))
    }

    /// All solutions of `self * x = b` as `(particular, kernel)`; `None` when
    /// `b` is outside the image.
    pub fn solve(&self, b: &F2Vector) -> Option<(F2Vector, F2Subspace)> {
        assert_eq!(b.dim(), self.cod, "ambient dimension mismatch");
        let mut rows: Vec<(F2Vector, F2Vector)> = Vec::new();
        for j in 0..self.dom {
            let mut img = self.cols[j];
            let mut pre = F2Vector::unit(j, self.dom);
            for (rimg, rpre) in &rows {
                let p = rimg.support().next().unwrap();
                if img.get(p) {
                    img = img.add(rimg);
                    pre = pre.add(rpre);
                }
            }
            if !img.is_zero() {
                rows.push((img, pre));
                rows.sort_unstable_by_key(|(i, _)| i.support().next().unwrap());
            }
        }
        let mut rhs = *b;
        let mut part = F2Vector::zero(self.dom);
        for (rimg, rpre) in &rows {
            let p = rimg.support().next().unwrap();
            if rhs.get(p) {
                rhs = rhs.add(rimg);
                part = part.add(rpre);
            }
        }
        if rhs.is_zero() {
            Some((part, self.kernel()))
        } else {
            None
        }
    }

    /// Packs the matrix column-major into a `u64`; requires `dom * cod <= 64`.
    pub fn pack(&self) -> u64 {
        assert!(self.dom * self.cod <= 64, "matrix too large to pack");
        let mut out = 0u64;
        for (j, c) in self.cols.iter().enumerate() {
            out |= (c.bits() as u64) << (j * self.cod);
        }
        out
    }

    pub fn unpack(dom: usize, cod: usize, packed: u64) -> Self {
        assert!(dom * cod <= 64, "matrix too large to pack");
        let mask = if cod == 64 { u64::MAX } else { (1u64 << cod) - 1 };
        Self::from_fn(dom, cod, |j| {
            F2Vector::from_bits((packed >> (j * cod) & mask) as u32, cod)
        })
    }
}

/// `|GL_n(F_2)| = prod_{i<n} (2^n - 2^i)`. Panics if the order overflows `u64`.
pub fn gl_order(n: usize) -> u64 {
    let mut acc: u128 = 1;
    for i in 0..n {
        acc *= (1u128 << n) - (1u128 << i);
    }
    u64::try_from(acc).expect("GL order exceeds u64")
}

/// Gaussian binomial `[n choose k]_2`: the number of `k`-dimensional
/// subspaces of `F_2^n`.
pub fn gaussian_binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (k - i)) - 1;
    }
    u64::try_from(num / den).expect("Gaussian binomial exceeds u64")
}

/// Enumerates every `k`-dimensional subspace of `F_2^n` exactly once, by
/// reduced-echelon shape: all pivot-column choices, then all fillings of the
/// free entries. The order is deterministic.
pub fn enumerate_subspaces(n: usize, k: usize) -> Result<Vec<F2Subspace>> {
    if n > MAX_ENUM_DIM {
        return Err(Error::AmbientTooLarge(n, MAX_ENUM_DIM));
    }
    assert!(k <= n, "subspace dimension {k} exceeds ambient {n}");
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    enumerate_pivots(n, k, 0, &mut pivots, &mut out);
    Ok(out)
}

fn enumerate_pivots(
    n: usize,
    k: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<F2Subspace>,
) {
    if pivots.len() == k {
        emit_for_pivots(n, pivots, out);
        return;
    }
    let remaining = k - pivots.len();
    for p in start..=n - remaining {
        pivots.push(p);
        enumerate_pivots(n, k, p + 1, pivots, out);
        pivots.pop();
    }
}

fn emit_for_pivots(n: usize, pivots: &[usize], out: &mut Vec<F2Subspace>) {
    // Free cells: row i may have arbitrary entries in columns beyond its
    // pivot that are not pivots of other rows.
    let mut free = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for col in p + 1..n {
            if !pivots.contains(&col) {
                free.push((i, col));
            }
        }
    }
    assert!(free.len() <= 32, "free-cell mask overflow");
    for mask in 0..1u64 << free.len() {
        let mut rows: Vec<F2Vector> =
            pivots.iter().map(|&p| F2Vector::unit(p, n)).collect();
        for (bit, &(i, col)) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rows[i] = rows[i].with(col, true);
            }
        }
        let k = pivots.len();
        out.push(F2Subspace {
            ambient: n,
            basis: rows,
            pivots: pivots.to_vec(),
        });
        debug_assert_eq!(out.last().unwrap().dim(), k);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> F2Vector {
        s.parse().unwrap()
    }

    #[test]
    fn bitstring_is_little_endian() {
        let x = v("1101");
        assert!(x.get(0) && x.get(1) && !x.get(2) && x.get(3));
        assert_eq!(x.to_string(), "1101");
    }

    #[test]
    fn rref_of_dependent_triple_has_dim_two() {
        let s = F2Subspace::from_vectors(3, [v("110"), v("011"), v("101")]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v("101")));
        assert!(!s.contains(&v("100")));
    }

    #[test]
    fn rref_is_canonical_under_basis_order() {
        let a = F2Subspace::from_vectors(4, [v("1100"), v("0110")]);
        let b = F2Subspace::from_vectors(4, [v("0110"), v("1010"), v("1100")]);
        assert_eq!(a, b);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        assert_eq!(enumerate_subspaces(3, 1).unwrap().len(), 7);
        assert_eq!(enumerate_subspaces(4, 2).unwrap().len(), 35);
        for n in 0..=6 {
            for k in 0..=n {
                let listed = enumerate_subspaces(n, k).unwrap();
                assert_eq!(listed.len() as u64, gaussian_binomial(n, k), "n={n} k={k}");
                // No duplicates: canonical forms must be pairwise distinct.
                let mut seen = std::collections::HashSet::new();
                for s in &listed {
                    assert_eq!(s.dim(), k);
                    assert!(seen.insert(s.clone()), "duplicate subspace for n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn enumerate_guard_rejects_large_ambient() {
        assert!(enumerate_subspaces(17, 1).is_err());
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(0), 1);
        assert_eq!(gl_order(1), 1);
        assert_eq!(gl_order(2), 6);
        assert_eq!(gl_order(3), 168);
        assert_eq!(gl_order(4), 20160);
        assert_eq!(gl_order(5), 9_999_360);
    }

    #[test]
    fn quotient_map_kernel_is_the_subspace() {
        let s = F2Subspace::from_vectors(5, [v("11000"), v("00110")]);
        let q = s.quotient_map();
        assert_eq!(q.cod(), 3);
        for x in F2Vector::all(5) {
            assert_eq!(q.apply(&x).is_zero(), s.contains(&x), "x={x}");
        }
        // Section composed with the projection is the identity on the quotient.
        let sec = s.section();
        for y in F2Vector::all(3) {
            assert_eq!(q.apply(&sec.apply(&y)), y);
        }
    }

    #[test]
    fn intersection_and_sum() {
        let a = F2Subspace::from_vectors(4, [v("1100"), v("0011")]);
        let b = F2Subspace::from_vectors(4, [v("1100"), v("1010")]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v("1100")));
        let s = a.sum(&b);
        assert_eq!(s.dim(), 3);
        // Dimension formula.
        assert_eq!(a.dim() + b.dim(), i.dim() + s.dim());
    }

    #[test]
    fn solve_returns_full_solution_set() {
        let m = F2LinearMap::from_columns(3, 2, vec![v("11"), v("01"), v("10")]);
        let (p, k) = m.solve(&v("10")).unwrap();
        assert_eq!(m.apply(&p), v("10"));
        assert_eq!(k.dim(), 1);
        for z in k.elements() {
            assert_eq!(m.apply(&p.add(&z)), v("10"));
        }
        assert!(m.solve(&v("00")).is_some());
    }

    #[test]
    fn pack_roundtrip() {
        let m = F2LinearMap::from_columns(3, 3, vec![v("110"), v("011"), v("111")]);
        assert_eq!(F2LinearMap::unpack(3, 3, m.pack()), m);
    }

    fn arb_vector(dim: usize) -> impl Strategy<Value = F2Vector> {
        (0u32..1 << dim).prop_map(move |b| F2Vector::from_bits(b, dim))
    }

    proptest! {
        #[test]
        fn bitstring_roundtrip(x in arb_vector(9)) {
            prop_assert_eq!(x.to_string().parse::<F2Vector>().unwrap(), x);
        }

        #[test]
        fn rref_spans_its_inputs(vs in proptest::collection::vec(arb_vector(7), 0..6)) {
            let s = F2Subspace::from_vectors(7, vs.iter().copied());
            for x in &vs {
                prop_assert!(s.contains(x));
            }
            prop_assert_eq!(s.elements().count(), 1usize << s.dim());
            // Re-reducing the canonical basis changes nothing.
            let again = F2Subspace::from_vectors(7, s.basis().iter().copied());
            prop_assert_eq!(again, s);
        }

        #[test]
        fn element_count_matches_dimension(vs in proptest::collection::vec(arb_vector(6), 0..5)) {
            let s = F2Subspace::from_vectors(6, vs.iter().copied());
            let members = F2Vector::all(6).filter(|x| s.contains(x)).count();
            prop_assert_eq!(members, 1usize << s.dim());
        }

        #[test]
        fn inverse_composes_to_identity(cols in proptest::collection::vec(arb_vector(5), 5)) {
            let m = F2LinearMap::from_columns(5, 5, cols);
            if let Ok(inv) = m.inverse() {
                prop_assert_eq!(m.compose(&inv), F2LinearMap::identity(5));
                prop_assert_eq!(inv.compose(&m), F2LinearMap::identity(5));
            } else {
                prop_assert!(m.rank() < 5);
            }
        }

        #[test]
        fn kernel_dimension_complements_rank(cols in proptest::collection::vec(arb_vector(4), 6)) {
            let m = F2LinearMap::from_columns(6, 4, cols);
            prop_assert_eq!(m.rank() + m.kernel().dim(), 6);
            for z in m.kernel().elements() {
                prop_assert!(m.apply(&z).is_zero());
            }
        }
    }
}
