//! Quadratic forms over `F_2`.
//!
//! In characteristic 2 a quadratic form and its polarization carry different
//! information: the polarization `b(x, y) = Q(x + y) + Q(x) + Q(y)` is always
//! alternating, and may be degenerate while `Q` itself is still regular (its
//! restriction to the radical of `b` has trivial kernel). The forms this
//! crate cares about are the mod-2 reductions of the E6/E7/E8 root lattices:
//! E6 and E8 give regular forms with nondegenerate polarization, E7 gives a
//! regular odd-dimensional form whose polarization has a one-dimensional
//! radical on which `Q` takes the value 1.

mod group;
mod witt;

pub use group::{o_group_elements, orthogonal_group_order, reflection, reflection_closure_order, Isometry};
pub use witt::{canonical_isotropic, ti_orbit_check, witt_extend, witt_index, WittCase, WittData};

use crate::error::{Error, Result};
use crate::f2::{F2LinearMap, F2Subspace, F2Vector, MAX_ENUM_DIM};

/// The Arf invariant of a regular quadratic form, read off by counting: more
/// isotropic than nonisotropic vectors gives `Zero`, fewer gives `One`, and a
/// tie (exactly the odd-dimensional case) leaves it `Undefined`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Arf {
    Zero,
    One,
    Undefined,
}

/// A quadratic form on `F_2^n` given by an upper-triangular coefficient
/// matrix: `Q(x) = sum_{i <= j} c_{ij} x_i x_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticSpace {
    dim: usize,
    /// Row `i` holds the bits `c_{ij}` for `j >= i`.
    rows: Vec<u32>,
}

impl QuadraticSpace {
    /// Builds a form from its set coefficient positions `(i, j)` with `i <= j`.
    pub fn new(dim: usize, coeffs: &[(usize, usize)]) -> Self {
        assert!(dim <= crate::f2::MAX_DIM);
        let mut rows = vec![0u32; dim];
        for &(i, j) in coeffs {
            assert!(i <= j && j < dim, "coefficient ({i},{j}) out of range");
            rows[i] |= 1 << j;
        }
        QuadraticSpace { dim, rows }
    }

    /// Reconstructs a form from prescribed basis values and polarization:
    /// `Q(e_i) = values[i]` and `b(e_i, e_j) = pairs(i, j)`.
    pub fn from_gram(dim: usize, values: impl Fn(usize) -> bool, pairs: impl Fn(usize, usize) -> bool) -> Self {
        let mut coeffs = Vec::new();
        for i in 0..dim {
            if values(i) {
                coeffs.push((i, i));
            }
            for j in i + 1..dim {
                if pairs(i, j) {
                    coeffs.push((i, j));
                }
            }
        }
        Self::new(dim, &coeffs)
    }

    /// The hyperbolic form `x_1 x_2 + x_3 x_4 + ...` on `2m` coordinates.
    pub fn hyperbolic(m: usize) -> Self {
        let coeffs: Vec<_> = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
        Self::new(2 * m, &coeffs)
    }

    /// The regular odd-dimensional form `x_1 x_2 + ... + x_{2m+1}^2`.
    pub fn odd_normal(m: usize) -> Self {
        let mut coeffs: Vec<_> = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
        coeffs.push((2 * m, 2 * m));
        Self::new(2 * m + 1, &coeffs)
    }

    /// The even form of nontrivial Arf invariant: `m - 1` hyperbolic pairs
    /// plus the anisotropic plane `x^2 + xy + y^2`.
    pub fn even_arf1(m: usize) -> Self {
        assert!(m >= 1);
        let mut coeffs: Vec<_> = (0..m - 1).map(|i| (2 * i, 2 * i + 1)).collect();
        let p = 2 * (m - 1);
        coeffs.extend([(p, p), (p, p + 1), (p + 1, p + 1)]);
        Self::new(2 * m, &coeffs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Set coefficient positions `(i, j)`, `i <= j`, ascending.
    pub fn coeffs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                if self.rows[i] >> j & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Evaluates the form.
    pub fn eval(&self, v: &F2Vector) -> bool {
        assert_eq!(v.dim(), self.dim, "ambient dimension mismatch");
        let mut acc = 0u32;
        let mut bits = v.bits();
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc ^= (self.rows[i] & v.bits()).count_ones();
            bits &= bits - 1;
        }
        acc & 1 == 1
    }

    /// The polarization `b(x, y) = Q(x+y) + Q(x) + Q(y)`.
    pub fn b(&self, x: &F2Vector, y: &F2Vector) -> bool {
        self.eval(&x.add(y)) ^ self.eval(x) ^ self.eval(y)
    }

    /// The polarization as a matrix (column `j` is `b(., e_j)` by rows).
    /// Always symmetric with zero diagonal: polarizations are alternating in
    /// characteristic 2.
    pub fn polarization(&self) -> F2LinearMap {
        F2LinearMap::from_fn(self.dim, self.dim, |j| {
            let ej = F2Vector::unit(j, self.dim);
            let mut col = F2Vector::zero(self.dim);
            for i in 0..self.dim {
                if self.b(&F2Vector::unit(i, self.dim), &ej) {
                    col = col.with(i, true);
                }
            }
            col
        })
    }

    /// All `2^dim` values of the form, indexed by packed bits.
    pub fn value_table(&self) -> Vec<bool> {
        assert!(self.dim <= MAX_ENUM_DIM, "refusing to tabulate 2^{} values", self.dim);
        (0..1u64 << self.dim)
            .map(|bits| self.eval(&F2Vector::from_bits(bits as u32, self.dim)))
            .collect()
    }

    /// Radical of the polarization: `{x : b(x, .) = 0}`.
    pub fn radical_b(&self) -> F2Subspace {
        self.polarization().kernel()
    }

    /// Radical of the form: the kernel of `Q` restricted to the radical of
    /// the polarization (`Q` is linear there).
    pub fn radical_q(&self) -> F2Subspace {
        let rb = self.radical_b();
        F2Subspace::from_vectors(
            self.dim,
            rb.elements().filter(|v| !v.is_zero() && !self.eval(v)),
        )
    }

    /// A form is regular when the radical of `Q` vanishes; the polarization
    /// may still be degenerate (odd-dimensional regular forms).
    pub fn is_regular(&self) -> bool {
        self.radical_q().dim() == 0
    }

    /// The nonzero vectors with `Q = 1`, in ascending bit order.
    pub fn nonisotropic_vectors(&self) -> Vec<F2Vector> {
        assert!(self.dim <= MAX_ENUM_DIM);
        F2Vector::all(self.dim).filter(|v| self.eval(v)).collect()
    }

    /// Number of isotropic vectors, the zero vector included.
    pub fn isotropic_count(&self) -> u64 {
        (1u64 << self.dim) - self.nonisotropic_vectors().len() as u64
    }

    /// Whether the subspace is totally isotropic (`Q` vanishes identically on it).
    pub fn is_totally_isotropic(&self, s: &F2Subspace) -> bool {
        assert_eq!(s.ambient(), self.dim, "ambient dimension mismatch");
        let basis = s.basis();
        basis.iter().all(|v| !self.eval(v))
            && (0..basis.len())
                .all(|i| (i + 1..basis.len()).all(|j| !self.b(&basis[i], &basis[j])))
    }

    /// Restriction of the form to a subspace, in the coordinates of its
    /// canonical basis.
    pub fn restrict(&self, s: &F2Subspace) -> QuadraticSpace {
        assert_eq!(s.ambient(), self.dim, "ambient dimension mismatch");
        let basis = s.basis();
        QuadraticSpace::from_gram(
            basis.len(),
            |i| self.eval(&basis[i]),
            |i, j| self.b(&basis[i], &basis[j]),
        )
    }

    /// The orthogonal complement `{x : b(x, s) = 0 for all s in S}`.
    pub fn perp(&self, s: &F2Subspace) -> F2Subspace {
        assert_eq!(s.ambient(), self.dim, "ambient dimension mismatch");
        let basis = s.basis();
        let pairing = F2LinearMap::from_fn(self.dim, basis.len(), |j| {
            let x = F2Vector::unit(j, self.dim);
            let mut out = F2Vector::zero(basis.len());
            for (i, b) in basis.iter().enumerate() {
                if self.b(&x, b) {
                    out = out.with(i, true);
                }
            }
            out
        });
        pairing.kernel()
    }

    /// The form induced on `E^perp / E` for a totally isotropic `E`, in the
    /// coordinates of the canonical quotient basis.
    pub fn induced_on_quotient(&self, e: &F2Subspace) -> Result<QuadraticSpace> {
        if !self.is_totally_isotropic(e) {
            return Err(Error::NotTotallyIsotropic);
        }
        let reps = self.quotient_reps(e);
        Ok(QuadraticSpace::from_gram(
            reps.len(),
            |i| self.eval(&reps[i]),
            |i, j| self.b(&reps[i], &reps[j]),
        ))
    }

    /// Canonical coset representatives for a basis of `E^perp / E`.
    pub(crate) fn quotient_reps(&self, e: &F2Subspace) -> Vec<F2Vector> {
        let p = self.perp(e);
        let qm = e.quotient_map();
        let image = qm.compose(&F2LinearMap::from_columns(
            p.dim(),
            self.dim,
            p.basis().to_vec(),
        ));
        let sec = e.section();
        image
            .image()
            .basis()
            .iter()
            .map(|w| sec.apply(w))
            .collect()
    }

    /// Perpendicular direct sum of two forms.
    pub fn direct_sum(&self, other: &QuadraticSpace) -> QuadraticSpace {
        let n = self.dim + other.dim;
        let mut coeffs = self.coeffs();
        coeffs.extend(other.coeffs().iter().map(|&(i, j)| (i + self.dim, j + self.dim)));
        QuadraticSpace::new(n, &coeffs)
    }

    /// Transports the form along an invertible map: the result evaluates on
    /// `x` as this form does on `t(x)`.
    pub fn pullback(&self, t: &F2LinearMap) -> QuadraticSpace {
        assert_eq!(t.cod(), self.dim, "ambient dimension mismatch");
        let n = t.dom();
        QuadraticSpace::from_gram(
            n,
            |i| self.eval(&t.apply(&F2Vector::unit(i, n))),
            |i, j| self.b(&t.apply(&F2Vector::unit(i, n)), &t.apply(&F2Vector::unit(j, n))),
        )
    }

    /// The Arf invariant by majority count. Errors on non-regular forms.
    pub fn arf(&self) -> Result<Arf> {
        if !self.is_regular() {
            return Err(Error::NotRegular(format!(
                "radical of Q has dimension {}",
                self.radical_q().dim()
            )));
        }
        let iso = self.isotropic_count();
        let noniso = (1u64 << self.dim) - iso;
        Ok(match iso.cmp(&noniso) {
            std::cmp::Ordering::Greater => Arf::Zero,
            std::cmp::Ordering::Less => Arf::One,
            std::cmp::Ordering::Equal => Arf::Undefined,
        })
    }
}
