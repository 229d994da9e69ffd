//! Orthogonal groups of regular forms: reflections, exact orders by frame
//! counting, and explicit closures.

use super::QuadraticSpace;
use crate::error::{Error, Result};
use crate::f2::{F2LinearMap, F2Vector};
use std::collections::HashSet;

/// An invertible linear map verified to preserve a quadratic form.
///
/// Verification checks values on the basis and all pairings, which
/// determines `Q` everywhere in characteristic 2; small dimensions are also
/// checked exhaustively.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Isometry {
    map: F2LinearMap,
}

impl Isometry {
    pub fn new(q: &QuadraticSpace, map: F2LinearMap) -> Result<Isometry> {
        let n = q.dim();
        assert_eq!(map.dom(), n, "ambient dimension mismatch");
        assert_eq!(map.cod(), n, "ambient dimension mismatch");
        if !map.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let ok_basis = (0..n).all(|i| {
            let ei = F2Vector::unit(i, n);
            q.eval(&map.apply(&ei)) == q.eval(&ei)
                && (i + 1..n).all(|j| {
                    let ej = F2Vector::unit(j, n);
                    q.b(&map.apply(&ei), &map.apply(&ej)) == q.b(&ei, &ej)
                })
        });
        if !ok_basis {
            return Err(Error::InvalidPartialIsometry(
                "map does not preserve the form".into(),
            ));
        }
        if n <= 12 {
            debug_assert!(F2Vector::all(n).all(|v| q.eval(&map.apply(&v)) == q.eval(&v)));
        }
        Ok(Isometry { map })
    }

    pub fn identity(q: &QuadraticSpace) -> Isometry {
        Isometry {
            map: F2LinearMap::identity(q.dim()),
        }
    }

    pub fn apply(&self, v: &F2Vector) -> F2Vector {
        self.map.apply(v)
    }

    pub fn linear_map(&self) -> &F2LinearMap {
        &self.map
    }

    /// Composition applying `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            map: self.map.compose(&other.map),
        }
    }

    pub fn inverse(&self) -> Isometry {
        Isometry {
            map: self.map.inverse().expect("isometries are invertible"),
        }
    }
}

/// The reflection `x -> x + b(x, v) v` in a nonisotropic vector.
pub fn reflection(q: &QuadraticSpace, v: &F2Vector) -> Result<Isometry> {
    if !q.eval(v) {
        return Err(Error::NotNonisotropic);
    }
    let n = q.dim();
    let map = F2LinearMap::from_fn(n, n, |j| {
        let ej = F2Vector::unit(j, n);
        if q.b(&ej, v) {
            ej.add(v)
        } else {
            ej
        }
    });
    Isometry::new(q, map)
}

/// Order of the full isometry group of a regular form, by frame counting:
/// the number of Gram-compatible images of the standard basis is the group
/// order, and transitivity of the group on partial frames (witnessed by
/// explicit Witt extensions) lets the count factor through one canonical
/// prefix per level.
pub fn orthogonal_group_order(q: &QuadraticSpace) -> Result<u64> {
    if !q.is_regular() {
        return Err(Error::NotRegular(format!(
            "radical of Q has dimension {}",
            q.radical_q().dim()
        )));
    }
    let n = q.dim();
    let mut order: u128 = 1;
    for i in 0..n {
        let ei = F2Vector::unit(i, n);
        // Candidates are the possible images of e_i under isometries fixing
        // e_0 .. e_{i-1}; the cheap Gram filter is necessary, and an
        // explicit Witt extension certifies each survivor (ruling out
        // dependent images and radical-incompatible ones).
        let count = F2Vector::all(n)
            .filter(|u| {
                q.eval(u) == q.eval(&ei)
                    && (0..i).all(|j| {
                        let ej = F2Vector::unit(j, n);
                        q.b(u, &ej) == q.b(&ei, &ej)
                    })
            })
            .filter(|u| {
                let mut partial: Vec<(F2Vector, F2Vector)> = (0..i)
                    .map(|j| (F2Vector::unit(j, n), F2Vector::unit(j, n)))
                    .collect();
                partial.push((ei, *u));
                super::witt::witt_extend(q, &partial).is_ok()
            })
            .count();
        assert!(count > 0, "the identity always fixes its own prefix");
        order *= count as u128;
    }
    Ok(u64::try_from(order).expect("group order fits in u64"))
}

/// Every element of the isometry group for small ambient dimension, by
/// exhaustive matrix enumeration.
pub fn o_group_elements(q: &QuadraticSpace) -> Result<Vec<Isometry>> {
    let n = q.dim();
    if n > 4 {
        return Err(Error::AmbientTooLarge(n, 4));
    }
    let mut out = Vec::new();
    let total = 1u64 << (n * n);
    for code in 0..total {
        let cols: Vec<F2Vector> = (0..n)
            .map(|j| F2Vector::from_bits((code >> (j * n)) as u32 & ((1 << n) - 1), n))
            .collect();
        let m = F2LinearMap::from_columns(n, n, cols);
        if let Ok(iso) = Isometry::new(q, m) {
            out.push(iso);
        }
    }
    Ok(out)
}

/// Size of the group generated by all reflections, by breadth-first closure
/// over bit-packed matrices. Errors with `NotEnumerable` if the closure
/// exceeds `cap` elements.
pub fn reflection_closure_order(q: &QuadraticSpace, cap: usize) -> Result<u64> {
    let n = q.dim();
    assert!(n * n <= 64, "packed closure needs dim <= 8");
    let colmask: u64 = (1 << n) - 1;
    // A reflection acts on a column c as c ^= parity(c & bmask) * vbits.
    let gens: Vec<(u64, u64)> = q
        .nonisotropic_vectors()
        .iter()
        .map(|v| {
            let bmask: u64 = (0..n)
                .filter(|&i| q.b(&F2Vector::unit(i, n), v))
                .map(|i| 1 << i)
                .sum();
            (v.bits() as u64, bmask)
        })
        .collect();
    let id: u64 = (0..n as u64).map(|j| (1 << j) << (j * n as u64)).sum();
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(id);
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for &(vbits, bmask) in &gens {
            let mut next = 0u64;
            for j in 0..n {
                let mut c = (m >> (j * n)) & colmask;
                if (c & bmask).count_ones() & 1 == 1 {
                    c ^= vbits;
                }
                next |= c << (j * n);
            }
            if seen.insert(next) {
                if seen.len() > cap {
                    return Err(Error::NotEnumerable);
                }
                frontier.push(next);
            }
        }
    }
    Ok(seen.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::super::tests::random_regular;
    use super::super::witt::WittCase;
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn reflections_are_involutions() {
        let mut rng = StdRng::seed_from_u64(61);
        let q = random_regular(WittCase::EvenArf1, 2, &mut rng);
        for v in q.nonisotropic_vectors() {
            let r = reflection(&q, &v).unwrap();
            // The polarization is alternating, so the reflection fixes its
            // own vector and is an involution.
            assert_eq!(r.apply(&v), v);
            assert_eq!(r.compose(&r), Isometry::identity(&q));
            // Fixes the hyperplane orthogonal to v.
            for x in F2Vector::all(4) {
                if !q.b(&x, &v) {
                    assert_eq!(r.apply(&x), x);
                }
            }
        }
        let iso = F2Vector::all(4).find(|v| !v.is_zero() && !q.eval(v)).unwrap();
        assert!(matches!(reflection(&q, &iso), Err(Error::NotNonisotropic)));
    }

    #[test]
    fn small_orthogonal_group_orders() {
        assert_eq!(orthogonal_group_order(&QuadraticSpace::hyperbolic(1)).unwrap(), 2);
        // The anisotropic plane is preserved by all of GL_2(F_2): every
        // nonzero vector is nonisotropic, so any linear bijection works.
        assert_eq!(orthogonal_group_order(&QuadraticSpace::even_arf1(1)).unwrap(), 6);
        assert_eq!(orthogonal_group_order(&QuadraticSpace::hyperbolic(2)).unwrap(), 72);
        assert_eq!(orthogonal_group_order(&QuadraticSpace::even_arf1(2)).unwrap(), 120);
        assert_eq!(orthogonal_group_order(&QuadraticSpace::hyperbolic(3)).unwrap(), 40_320);
        assert_eq!(orthogonal_group_order(&QuadraticSpace::even_arf1(3)).unwrap(), 51_840);
    }

    #[test]
    fn odd_orthogonal_groups_match_symplectic_orders() {
        // |Sp_{2m}(2)| = 2^{m^2} prod (4^i - 1).
        assert_eq!(orthogonal_group_order(&QuadraticSpace::odd_normal(1)).unwrap(), 6);
        assert_eq!(orthogonal_group_order(&QuadraticSpace::odd_normal(2)).unwrap(), 720);
        assert_eq!(orthogonal_group_order(&QuadraticSpace::odd_normal(3)).unwrap(), 1_451_520);
    }

    #[test]
    fn dimension_eight_orders() {
        assert_eq!(
            orthogonal_group_order(&QuadraticSpace::hyperbolic(4)).unwrap(),
            348_364_800
        );
        assert_eq!(
            orthogonal_group_order(&QuadraticSpace::even_arf1(4)).unwrap(),
            394_813_440
        );
    }

    #[test]
    fn order_is_a_basis_invariant() {
        let mut rng = StdRng::seed_from_u64(71);
        for case in [WittCase::EvenArf0, WittCase::EvenArf1, WittCase::Odd] {
            let q = random_regular(case, 3, &mut rng);
            let base = match case {
                WittCase::EvenArf0 => QuadraticSpace::hyperbolic(3),
                WittCase::EvenArf1 => QuadraticSpace::even_arf1(3),
                WittCase::Odd => QuadraticSpace::odd_normal(3),
            };
            assert_eq!(
                orthogonal_group_order(&q).unwrap(),
                orthogonal_group_order(&base).unwrap()
            );
        }
    }

    #[test]
    fn exhaustive_enumeration_agrees_with_frame_counting() {
        for q in [
            QuadraticSpace::hyperbolic(1),
            QuadraticSpace::even_arf1(1),
            QuadraticSpace::odd_normal(1),
            QuadraticSpace::hyperbolic(2),
            QuadraticSpace::even_arf1(2),
        ] {
            let all = o_group_elements(&q).unwrap();
            assert_eq!(all.len() as u64, orthogonal_group_order(&q).unwrap());
        }
        assert!(o_group_elements(&QuadraticSpace::odd_normal(2)).is_err());
    }

    #[test]
    fn reflections_generate_most_orthogonal_groups() {
        for q in [
            QuadraticSpace::even_arf1(1),
            QuadraticSpace::even_arf1(2),
            QuadraticSpace::odd_normal(1),
            QuadraticSpace::odd_normal(2),
            QuadraticSpace::hyperbolic(3),
            QuadraticSpace::even_arf1(3),
        ] {
            assert_eq!(
                reflection_closure_order(&q, 60_000).unwrap(),
                orthogonal_group_order(&q).unwrap()
            );
        }
    }

    #[test]
    fn hyperbolic_dim_four_is_the_reflection_exception() {
        // The one classical failure of reflection generation over F_2: for
        // the rank-2 hyperbolic form the reflections generate an index-2
        // subgroup of the order-72 isometry group.
        let q = QuadraticSpace::hyperbolic(2);
        assert_eq!(reflection_closure_order(&q, 100).unwrap(), 36);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let q = QuadraticSpace::hyperbolic(3);
        assert!(matches!(
            reflection_closure_order(&q, 1000),
            Err(Error::NotEnumerable)
        ));
    }
}
