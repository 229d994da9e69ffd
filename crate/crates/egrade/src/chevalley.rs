//! Integral Chevalley bases with explicit structure constants.
//!
//! The basis of the algebra is one vector `E_r` per root plus the simple
//! coroots `h_1 .. h_l`; every element is an integer coordinate vector over
//! it and every bracket is computed exactly. Structure constants come from a
//! bimultiplicative sign cocycle on the root lattice (the asymmetry function
//! of the Cartan matrix), rescaled so that `[E_r, E_{-r}] = h_r` uniformly.
//! On this basis the constants satisfy `N(-a, -b) = -N(a, b)`, all brackets
//! of root vectors with root vectors are `0`, `+-E_{a+b}` or a coroot, and
//! the Jacobi identity holds identically.

use crate::f2::F2Vector;
use crate::rootsys::{Kind, RootSystem};

/// A simple Lie algebra of type E6, E7 or E8 over the integers, presented
/// by structure constants on a Chevalley basis.
pub struct LieAlgebra {
    rs: RootSystem,
}

impl LieAlgebra {
    pub fn new(kind: Kind) -> LieAlgebra {
        LieAlgebra {
            rs: RootSystem::new(kind),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn kind(&self) -> Kind {
        self.rs.kind()
    }

    /// Number of root-vector basis elements.
    pub fn n_roots(&self) -> usize {
        self.rs.roots().len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.n_roots() + self.rank()
    }

    /// Basis index of the root vector `E_r`.
    pub fn e_index(&self, root: usize) -> usize {
        root
    }

    /// Basis index of the simple coroot `h_i`.
    pub fn h_index(&self, i: usize) -> usize {
        self.n_roots() + i
    }

    /// The basis vector `E_r` as an element.
    pub fn e(&self, root: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[self.e_index(root)] = 1;
        v
    }

    /// The basis vector `h_i` as an element.
    pub fn h(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[self.h_index(i)] = 1;
        v
    }

    /// Sign `+1` for positive roots, `-1` for negative ones.
    fn root_sign(&self, r: usize) -> i64 {
        if self.rs.is_positive(r) {
            1
        } else {
            -1
        }
    }

    /// The asymmetry sign `(-1)^{sum m_i B_ij n_j}` with
    /// `B = I + strict upper part of the Cartan matrix mod 2`.
    fn eps(&self, a: usize, b: usize) -> i64 {
        let m = self.rs.root(a);
        let n = self.rs.root(b);
        let cartan = self.kind().cartan_matrix();
        let mut parity = 0i64;
        for i in 0..m.len() {
            parity += m[i] * n[i];
            for j in i + 1..n.len() {
                parity += m[i] * n[j] * cartan[i][j];
            }
        }
        if parity.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// Structure constant `N(a, b)` with `[E_a, E_b] = N(a, b) E_{a+b}`.
    /// Only meaningful when `a + b` is a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        let s = self
            .rs
            .sum_index(a, b)
            .expect("structure constant needs a root sum");
        self.root_sign(a) * self.root_sign(b) * self.root_sign(s) * self.eps(a, b)
    }

    /// Bracket of two basis elements as a sparse list of `(index, coeff)`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        let nr = self.n_roots();
        match (i < nr, j < nr) {
            (true, true) => {
                if j == self.rs.negative(i) {
                    // [E_r, E_{-r}] = h_r, with coroot coordinates equal to
                    // the root coordinates in the simply-laced case.
                    self.rs.root(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| (self.h_index(k), c))
                        .collect()
                } else if let Some(s) = self.rs.sum_index(i, j) {
                    vec![(s, self.structure_constant(i, j))]
                } else {
                    Vec::new()
                }
            }
            (false, false) => Vec::new(),
            (false, true) => {
                // [h_i, E_b] = (alpha_i | b) E_b.
                let k = i - nr;
                let c = self.pairing_with_simple(k, j);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(j, c)]
                }
            }
            (true, false) => {
                let k = j - nr;
                let c = self.pairing_with_simple(k, i);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(i, -c)]
                }
            }
        }
    }

    /// `(alpha_k | root_r)` read off the Cartan matrix.
    fn pairing_with_simple(&self, k: usize, r: usize) -> i64 {
        let cartan = self.kind().cartan_matrix();
        self.rs.root(r)
            .iter()
            .enumerate()
            .map(|(j, &c)| cartan[k][j] * c)
            .sum()
    }

    /// Bracket of two elements in coordinates.
    pub fn bracket(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        let mut out = vec![0i64; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                for (k, c) in self.bracket_basis(i, j) {
                    out[k] = out[k]
                        .checked_add(a.checked_mul(b).and_then(|ab| ab.checked_mul(c)).expect("bracket overflow"))
                        .expect("bracket overflow");
                }
            }
        }
        out
    }

    /// Basis of the joint centralizer of the given elements, as primitive
    /// integer vectors. Computed by progressively intersecting kernels of
    /// adjoint maps with exact fraction-free elimination.
    pub fn centralizer(&self, elements: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let dim = self.dim();
        let mut current: Vec<Vec<i64>> = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            })
            .collect();
        for g in elements {
            if current.is_empty() {
                break;
            }
            // Columns: ad(g) applied to the current basis, in ambient rows.
            let cols: Vec<Vec<i64>> = current.iter().map(|v| self.bracket(g, v)).collect();
            let matrix: Vec<Vec<i128>> = (0..dim)
                .map(|r| cols.iter().map(|c| c[r] as i128).collect())
                .collect();
            let kernel = kernel_z(&matrix, current.len());
            current = kernel
                .iter()
                .map(|coeffs| {
                    let mut v = vec![0i128; dim];
                    for (c, &k) in coeffs.iter().enumerate() {
                        if k != 0 {
                            for (t, &b) in current[c].iter().enumerate() {
                                v[t] = v[t]
                                    .checked_add(k.checked_mul(b as i128).expect("centralizer overflow"))
                                    .expect("centralizer overflow");
                            }
                        }
                    }
                    primitive(&v)
                })
                .collect();
        }
        current
    }
}

/// Divides by the gcd and fixes the sign of the leading entry.
fn primitive(v: &[i128]) -> Vec<i64> {
    let mut g: i128 = 0;
    for &x in v {
        g = gcd(g, x.abs());
    }
    if g == 0 {
        g = 1;
    }
    let lead = v.iter().find(|&&x| x != 0).copied().unwrap_or(1);
    let s = if lead < 0 { -1 } else { 1 };
    v.iter()
        .map(|&x| i64::try_from(s * x / g).expect("centralizer overflow"))
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Basis of the rational kernel of an integer matrix (rows by `cols`
/// columns), as primitive integer coefficient vectors.
fn kernel_z(matrix: &[Vec<i128>], cols: usize) -> Vec<Vec<i128>> {
    let mut rows: Vec<Vec<i128>> = matrix
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0usize;
    for c in 0..cols {
        let Some(p) = (next..rows.len())
            .filter(|&i| rows[i][c] != 0)
            .min_by_key(|&i| rows[i][c].unsigned_abs())
        else {
            continue;
        };
        rows.swap(next, p);
        let pivot_row = rows[next].clone();
        let pv = pivot_row[c];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in 0..cols {
                let a = row[j].checked_mul(pv).expect("kernel overflow");
                let b = pivot_row[j].checked_mul(f).expect("kernel overflow");
                row[j] = a.checked_sub(b).expect("kernel overflow");
            }
            let mut g = 0i128;
            for &x in row.iter() {
                g = gcd(g, x.abs());
            }
            if g > 1 {
                for x in row.iter_mut() {
                    *x /= g;
                }
            }
        }
        pivots.push((next, c));
        next += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut kernel = Vec::new();
    for f in 0..cols {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut l: i128 = 1;
        for &(r, c) in &pivots {
            if rows[r][f] != 0 {
                let pv = rows[r][c].abs();
                l = l / gcd(l, pv) * pv;
            }
        }
        let mut v = vec![0i128; cols];
        v[f] = l;
        for &(r, c) in &pivots {
            if rows[r][f] != 0 {
                v[c] = -rows[r][f].checked_mul(l / rows[r][c]).expect("kernel overflow");
            }
        }
        let mut g = 0i128;
        for &x in &v {
            g = gcd(g, x.abs());
        }
        if g > 1 {
            for x in v.iter_mut() {
                *x /= g;
            }
        }
        kernel.push(v);
    }
    kernel
}

/// Rank over the rationals of a list of integer vectors.
pub(crate) fn rank_z(vectors: &[Vec<i64>]) -> usize {
    let cols = vectors.first().map_or(0, |v| v.len());
    let mut rows: Vec<Vec<i128>> = vectors
        .iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0usize;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len())
            .filter(|&i| rows[i][c] != 0)
            .min_by_key(|&i| rows[i][c].unsigned_abs())
        else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[c];
        for row in rows.iter_mut().skip(rank + 1) {
            if row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in 0..cols {
                let a = row[j].checked_mul(pv).expect("rank overflow");
                let b = pivot_row[j].checked_mul(f).expect("rank overflow");
                row[j] = a.checked_sub(b).expect("rank overflow");
            }
            let mut g = 0i128;
            for &x in row.iter() {
                g = gcd(g, x.abs());
            }
            if g > 1 {
                for x in row.iter_mut() {
                    *x /= g;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A linear map sending each basis vector to a signed basis vector:
/// `b_i -> sign_i * b_{perm_i}`. The involutions defining pure gradings all
/// have this shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedMonomialMap {
    perm: Vec<usize>,
    sign: Vec<i64>,
}

impl SignedMonomialMap {
    pub fn new(perm: Vec<usize>, sign: Vec<i64>) -> SignedMonomialMap {
        assert_eq!(perm.len(), sign.len());
        assert!(sign.iter().all(|&s| s == 1 || s == -1));
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(!seen[p], "not a permutation");
            seen[p] = true;
        }
        SignedMonomialMap { perm, sign }
    }

    pub fn identity(dim: usize) -> SignedMonomialMap {
        SignedMonomialMap {
            perm: (0..dim).collect(),
            sign: vec![1; dim],
        }
    }

    /// The involution `E_r -> -E_{-r}`, `h -> -h` fixing the split real
    /// structure; its fixed and swapped combinations are the vectors
    /// `E_r - E_{-r}` and `E_r + E_{-r}`.
    pub fn sigma(alg: &LieAlgebra) -> SignedMonomialMap {
        let mut perm = Vec::with_capacity(alg.dim());
        let mut sign = Vec::with_capacity(alg.dim());
        for r in 0..alg.n_roots() {
            perm.push(alg.rs.negative(r));
            sign.push(-1);
        }
        for i in 0..alg.rank() {
            perm.push(alg.h_index(i));
            sign.push(-1);
        }
        SignedMonomialMap { perm, sign }
    }

    /// The diagonal involution `E_r -> (-1)^{chi(class of r)} E_r`, `h -> h`
    /// for a linear character `chi` of the mod-2 root lattice given by a
    /// mask vector.
    pub fn tau(alg: &LieAlgebra, chi: &F2Vector) -> SignedMonomialMap {
        assert_eq!(chi.dim(), alg.rank());
        let perm: Vec<usize> = (0..alg.dim()).collect();
        let mut sign = vec![1i64; alg.dim()];
        for r in 0..alg.n_roots() {
            if chi.dot(&alg.rs.root_class(r)) {
                sign[r] = -1;
            }
        }
        SignedMonomialMap { perm, sign }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.perm.len());
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] += self.sign[i] * x;
        }
        out
    }

    /// Composition applying `other` first.
    pub fn compose(&self, other: &SignedMonomialMap) -> SignedMonomialMap {
        assert_eq!(self.perm.len(), other.perm.len());
        let perm: Vec<usize> = (0..other.perm.len()).map(|i| self.perm[other.perm[i]]).collect();
        let sign: Vec<i64> = (0..other.perm.len())
            .map(|i| other.sign[i] * self.sign[other.perm[i]])
            .collect();
        SignedMonomialMap { perm, sign }
    }

    /// Checks the automorphism property on every pair of basis vectors.
    pub fn is_automorphism(&self, alg: &LieAlgebra) -> bool {
        let dim = alg.dim();
        assert_eq!(self.perm.len(), dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut lhs = vec![0i64; dim];
                for (k, c) in alg.bracket_basis(i, j) {
                    // Image of c * b_k under the map.
                    lhs[self.perm[k]] += self.sign[k] * c;
                }
                let mut rhs = vec![0i64; dim];
                for (k, c) in alg.bracket_basis(self.perm[i], self.perm[j]) {
                    rhs[k] += self.sign[i] * self.sign[j] * c;
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}
