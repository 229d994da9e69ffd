//! Witt decomposition and the constructive Witt extension theorem.
//!
//! Every regular form over `F_2` splits as hyperbolic pairs plus an
//! anisotropic tail of dimension at most 2, and every partial isometry
//! between subspaces extends to the whole space. Odd-dimensional regular
//! forms need care: the polarization has a one-dimensional radical that any
//! isometry must fix, so a partial map is extendable exactly when it is
//! compatible with the radical. The extension then reduces to a symplectic
//! extension on a complement, with the radical component of each image
//! forced by value preservation.

use super::group::Isometry;
use super::QuadraticSpace;
use crate::error::{Error, Result};
use crate::f2::{F2LinearMap, F2Subspace, F2Vector, MAX_ENUM_DIM};

/// Shape of the anisotropic tail of a regular form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WittCase {
    /// Even dimension, trivial Arf invariant: fully hyperbolic.
    EvenArf0,
    /// Even dimension, nontrivial Arf invariant: anisotropic plane left over.
    EvenArf1,
    /// Odd dimension: a single nonisotropic radical vector left over.
    Odd,
}

/// A hyperbolic decomposition: mutually orthogonal hyperbolic pairs
/// `(u_i, v_i)` with `Q(u_i) = Q(v_i) = 0`, `b(u_i, v_i) = 1`, plus an
/// anisotropic tail orthogonal to all of them.
#[derive(Clone, Debug)]
pub struct WittData {
    pub pairs: Vec<(F2Vector, F2Vector)>,
    pub tail: Vec<F2Vector>,
    pub case: WittCase,
}

impl WittData {
    /// The Witt index: number of hyperbolic pairs.
    pub fn index(&self) -> usize {
        self.pairs.len()
    }
}

impl QuadraticSpace {
    /// Splits a regular form into hyperbolic pairs and an anisotropic tail.
    /// Deterministic: each pair takes the least available isotropic vector
    /// and its least admissible partner.
    pub fn witt_decompose(&self) -> Result<WittData> {
        if !self.is_regular() {
            return Err(Error::NotRegular(format!(
                "radical of Q has dimension {}",
                self.radical_q().dim()
            )));
        }
        assert!(self.dim() <= MAX_ENUM_DIM);
        let n = self.dim();
        let mut rem = F2Subspace::full(n);
        let mut pairs = Vec::new();
        loop {
            let mut elems: Vec<F2Vector> = rem.elements().collect();
            elems.sort_by_key(F2Vector::bits);
            let found = elems.iter().find_map(|u| {
                if u.is_zero() || self.eval(u) {
                    return None;
                }
                elems
                    .iter()
                    .find(|w| self.b(u, w))
                    .map(|w| (*u, if self.eval(w) { w.add(u) } else { *w }))
            });
            let Some((u, v)) = found else { break };
            pairs.push((u, v));
            let cut = self.perp(&F2Subspace::from_vectors(n, [u, v]));
            rem = rem.intersection(&cut);
        }
        let tail: Vec<F2Vector> = rem.basis().to_vec();
        let case = match tail.len() {
            0 => WittCase::EvenArf0,
            1 => {
                assert!(self.eval(&tail[0]), "regular form cannot leave an isotropic tail line");
                WittCase::Odd
            }
            2 => {
                assert!(
                    rem.elements().all(|x| x.is_zero() || self.eval(&x)),
                    "regular form cannot leave an isotropic vector in a tail plane"
                );
                WittCase::EvenArf1
            }
            d => unreachable!("anisotropic tail of dimension {d} over F_2"),
        };
        Ok(WittData { pairs, tail, case })
    }
}

/// The Witt index of a regular form.
pub fn witt_index(q: &QuadraticSpace) -> Result<usize> {
    q.witt_decompose().map(|w| w.index())
}

/// Extends a partial isometry `x_i -> y_i` (independent sources, matching
/// values and pairings) to an isometry of the whole space.
///
/// Even-dimensional forms extend greedily: at each step the least vector not
/// yet in the domain span is matched with the least vector satisfying the
/// same value and pairing constraints. Odd-dimensional forms first check
/// compatibility with the radical line, then extend the induced symplectic
/// map on a complement and lift it back with the forced radical components.
pub fn witt_extend(q: &QuadraticSpace, pairs: &[(F2Vector, F2Vector)]) -> Result<Isometry> {
    let n = q.dim();
    assert!(n <= MAX_ENUM_DIM);
    for (x, y) in pairs {
        assert_eq!(x.dim(), n, "ambient dimension mismatch");
        assert_eq!(y.dim(), n, "ambient dimension mismatch");
    }
    if !q.is_regular() {
        return Err(Error::NotRegular(format!(
            "radical of Q has dimension {}",
            q.radical_q().dim()
        )));
    }
    let xs: Vec<F2Vector> = pairs.iter().map(|p| p.0).collect();
    let ys: Vec<F2Vector> = pairs.iter().map(|p| p.1).collect();
    let span_x = F2Subspace::from_vectors(n, xs.iter().copied());
    let span_y = F2Subspace::from_vectors(n, ys.iter().copied());
    if span_x.dim() != xs.len() {
        return Err(Error::InvalidPartialIsometry("source vectors are dependent".into()));
    }
    if span_y.dim() != ys.len() {
        return Err(Error::InvalidPartialIsometry("image vectors are dependent".into()));
    }
    for i in 0..xs.len() {
        if q.eval(&xs[i]) != q.eval(&ys[i]) {
            return Err(Error::InvalidPartialIsometry(format!(
                "value mismatch on pair {i}"
            )));
        }
        for j in i + 1..xs.len() {
            if q.b(&xs[i], &xs[j]) != q.b(&ys[i], &ys[j]) {
                return Err(Error::InvalidPartialIsometry(format!(
                    "pairing mismatch on pairs {i}, {j}"
                )));
            }
        }
    }

    let map = if n % 2 == 0 {
        extend_even(q, &xs, &ys)
    } else {
        extend_odd(q, &xs, &ys, &span_x, &span_y)?
    };

    let iso = Isometry::new(q, map).expect("extension must preserve the form");
    for (x, y) in pairs {
        assert_eq!(&iso.apply(x), y, "extension must agree with the partial map");
    }
    Ok(iso)
}

/// Greedy extension for even-dimensional regular forms, where every
/// value-and-pairing-compatible candidate outside the image span works.
fn extend_even(q: &QuadraticSpace, xs: &[F2Vector], ys: &[F2Vector]) -> F2LinearMap {
    let n = q.dim();
    let mut xs = xs.to_vec();
    let mut ys = ys.to_vec();
    let mut span_x = F2Subspace::from_vectors(n, xs.iter().copied());
    let mut span_y = F2Subspace::from_vectors(n, ys.iter().copied());
    while span_x.dim() < n {
        let target = F2Vector::all(n).find(|v| !span_x.contains(v)).unwrap();
        let image = F2Vector::all(n)
            .find(|u| {
                !span_y.contains(u)
                    && q.eval(u) == q.eval(&target)
                    && xs.iter().zip(&ys).all(|(x, y)| q.b(u, y) == q.b(&target, x))
            })
            .expect("regular even-dimensional forms admit an extension step");
        span_x.insert(&target);
        span_y.insert(&image);
        xs.push(target);
        ys.push(image);
    }
    map_from_images(n, &xs, &ys)
}

/// Extension for odd-dimensional regular forms via the symplectic quotient
/// by the radical line.
fn extend_odd(
    q: &QuadraticSpace,
    xs: &[F2Vector],
    ys: &[F2Vector],
    span_x: &F2Subspace,
    span_y: &F2Subspace,
) -> Result<F2LinearMap> {
    let n = q.dim();
    let rad = q.radical_b();
    assert_eq!(rad.dim(), 1);
    let a = rad.basis()[0];
    // Any isometry fixes a (it spans the radical and Q(a) = 1), so the
    // partial map must already respect it.
    match (span_x.contains(&a), span_y.contains(&a)) {
        (true, true) | (false, false) => {}
        _ => {
            return Err(Error::InvalidPartialIsometry(
                "partial map moves the radical line".into(),
            ))
        }
    }
    if span_x.contains(&a) {
        let src = F2LinearMap::from_columns(xs.len(), n, xs.to_vec());
        let (coords, _) = src.solve(&a).unwrap();
        let image = ys
            .iter()
            .enumerate()
            .filter(|(i, _)| coords.get(*i))
            .fold(F2Vector::zero(n), |acc, (_, y)| acc.add(y));
        if image != a {
            return Err(Error::InvalidPartialIsometry(
                "partial map moves the radical line".into(),
            ));
        }
    }

    // Project along a onto the complement of its pivot coordinate; the
    // polarization descends to a nondegenerate alternating form there.
    let pivot = a.support().next().unwrap();
    let proj = |v: &F2Vector| if v.get(pivot) { v.add(&a) } else { *v };
    let in_complement = |v: &F2Vector| !v.get(pivot);

    // Seed the symplectic extension with an independent subset of the
    // projected sources (projections can collapse only combinations equal to
    // a, and those were checked to map consistently).
    let mut dom: Vec<F2Vector> = Vec::new();
    let mut img: Vec<F2Vector> = Vec::new();
    let mut span_d = F2Subspace::zero(n);
    for (x, y) in xs.iter().zip(ys) {
        let w = proj(x);
        if !span_d.contains(&w) {
            span_d.insert(&w);
            dom.push(w);
            img.push(proj(y));
        }
    }
    let mut span_i = F2Subspace::from_vectors(n, img.iter().copied());
    assert_eq!(span_i.dim(), dom.len());
    while span_d.dim() < n - 1 {
        let target = F2Vector::all(n)
            .find(|v| in_complement(v) && !span_d.contains(v))
            .unwrap();
        let image = F2Vector::all(n)
            .find(|u| {
                in_complement(u)
                    && !span_i.contains(u)
                    && dom.iter().zip(&img).all(|(d, i)| q.b(u, i) == q.b(&target, d))
            })
            .expect("nondegenerate alternating forms admit an extension step");
        span_d.insert(&target);
        span_i.insert(&image);
        dom.push(target);
        img.push(image);
    }

    // Lift: phi(w) = A(w) + (Q(A w) + Q(w)) a on the complement, phi(a) = a.
    let mut basis = Vec::with_capacity(n);
    let mut images = Vec::with_capacity(n);
    for (d, i) in dom.iter().zip(&img) {
        basis.push(*d);
        let lift = if q.eval(i) != q.eval(d) { i.add(&a) } else { *i };
        images.push(lift);
    }
    basis.push(a);
    images.push(a);
    Ok(map_from_images(n, &basis, &images))
}

/// The linear map sending the basis `xs` to `ys`.
fn map_from_images(n: usize, xs: &[F2Vector], ys: &[F2Vector]) -> F2LinearMap {
    let src = F2LinearMap::from_columns(n, n, xs.to_vec());
    let dst = F2LinearMap::from_columns(n, n, ys.to_vec());
    dst.compose(&src.inverse().expect("images of a basis"))
}

/// The first totally isotropic `k`-dimensional subspace in canonical
/// enumeration order, if any exists.
pub fn canonical_isotropic(q: &QuadraticSpace, k: usize) -> Result<Option<F2Subspace>> {
    let subs = crate::f2::enumerate_subspaces(q.dim(), k)?;
    Ok(subs.into_iter().find(|s| q.is_totally_isotropic(s)))
}

/// Checks that the isometry group acts transitively on totally isotropic
/// `k`-dimensional subspaces, by linking each one to the canonical first one
/// through an explicit Witt extension.
pub fn ti_orbit_check(q: &QuadraticSpace, k: usize) -> Result<bool> {
    if q.dim() > 9 {
        return Err(Error::AmbientTooLarge(q.dim(), 9));
    }
    let subs = crate::f2::enumerate_subspaces(q.dim(), k)?;
    let ti: Vec<&F2Subspace> = subs.iter().filter(|s| q.is_totally_isotropic(s)).collect();
    let Some(first) = ti.first() else {
        return Ok(true);
    };
    for other in &ti[1..] {
        let pairs: Vec<_> = first
            .basis()
            .iter()
            .zip(other.basis())
            .map(|(x, y)| (*x, *y))
            .collect();
        let iso = witt_extend(q, &pairs)?;
        let image = F2Subspace::from_vectors(q.dim(), first.basis().iter().map(|v| iso.apply(v)));
        if image != **other {
            return Ok(false);
        }
    }
    Ok(true)
}
