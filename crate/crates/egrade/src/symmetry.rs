//! Weyl groups of the classified gradings: stabilizer orders and membership
//! tests on the grading group, flag stabilizers, explicit symmetries
//! permuting the Cartan components, and the dimensions of the subalgebras
//! fixed by the involutions in the grading torus.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::f2::{gl_order, F2LinearMap, F2Subspace, F2Vector};
use crate::gradings::UniversalGrading;
use crate::quadform::{o_group_elements, orthogonal_group_order, reflection};
use crate::rootsys::{Kind, RootSystem};

/// A decomposition of the mod-2 root lattice adapted to a totally isotropic
/// subspace: the subspace itself, a totally isotropic partner on which the
/// polar pairing with the subspace is perfect, and the orthogonal complement
/// of the two.
pub struct WittSplit {
    pub ebar: F2Subspace,
    pub eprime: F2Subspace,
    pub wbar: F2Subspace,
}

/// Splits the lattice deterministically: partners are chosen greedily, least
/// vector first.
///
/// # Panics
///
/// Panics if the subspace is not totally isotropic for the kind's form.
pub fn witt_split(kind: Kind, ebar: &F2Subspace) -> WittSplit {
    let q = RootSystem::new(kind).mod2_form();
    assert!(q.is_totally_isotropic(ebar), "the defining subspace must be totally isotropic");
    let n = q.dim();
    let mut partners: Vec<F2Vector> = Vec::new();
    for i in 0..ebar.dim() {
        let partner = F2Vector::all(n)
            .find(|c| {
                !q.eval(c)
                    && ebar.basis().iter().enumerate().all(|(j, ej)| q.b(ej, c) == (i == j))
                    && partners.iter().all(|p| !q.b(p, c))
            })
            .expect("totally isotropic subspaces admit hyperbolic partners");
        partners.push(partner);
    }
    let eprime = F2Subspace::from_vectors(n, partners);
    assert_eq!(eprime.dim(), ebar.dim());
    assert!(q.is_totally_isotropic(&eprime));
    let sum = ebar.sum(&eprime);
    assert_eq!(sum.dim(), 2 * ebar.dim());
    let wbar = q.perp(&sum);
    assert_eq!(wbar.dim(), n - sum.dim());
    assert_eq!(sum.intersection(&wbar).dim(), 0, "the pairing is perfect on the paired part");
    WittSplit { ebar: ebar.clone(), eprime, wbar }
}

/// Order of the stabilizer of the distinguished degree inside the Weyl group
/// of the grading: the product of the isometry group of the form restricted
/// to the complement, the general linear group of the partner, and the two
/// free homomorphism spaces of the block parametrization.
pub fn ws_order(ug: &UniversalGrading) -> u64 {
    let q = RootSystem::new(ug.kind()).mod2_form();
    let split = witt_split(ug.kind(), ug.ebar());
    let k = split.eprime.dim();
    let h = split.wbar.dim();
    let qw = q.restrict(&split.wbar);
    orthogonal_group_order(&qw).expect("the restricted form is regular")
        * gl_order(k)
        * (1u64 << (k * h))
        * (1u64 << (k + h))
}

/// Order of the affine orthogonal group of the form restricted to the
/// orthogonal complement of the defining subspace: translations of the
/// complement extended by its isometries. For E6 and E8 this group is
/// another description of the stabilizer of the distinguished degree, so it
/// must agree with [`ws_order`].
///
/// # Panics
///
/// Panics for E7, whose polar form is degenerate on the ambient space; the
/// complement description is stated for the nondegenerate kinds only.
pub fn affine_orthogonal_order(kind: Kind, ebar: &F2Subspace) -> u64 {
    assert!(
        kind != Kind::E7,
        "the complement description requires a nondegenerate polar form"
    );
    let q = RootSystem::new(kind).mod2_form();
    let perp = q.perp(ebar);
    let qp = q.restrict(&perp);
    let radical = qp.radical_q();
    assert_eq!(radical.dim(), ebar.dim());
    let induced = qp.induced_on_quotient(&radical).expect("the radical is totally isotropic");
    (1u64 << perp.dim())
        * orthogonal_group_order(&induced).expect("the induced form is regular")
        * gl_order(radical.dim())
        * (1u64 << (radical.dim() * induced.dim()))
}

/// Precomputed membership data for the stabilizer of the distinguished
/// degree: the degree itself, the subgroup over the orthogonal complement of
/// the defining subspace, and the form transferred to its quotient by the
/// distinguished degree, tabulated on the subgroup.
pub struct WsTest {
    group_dim: usize,
    s: F2Vector,
    h: F2Subspace,
    table: Vec<(F2Vector, bool)>,
}

impl WsTest {
    pub fn new(ug: &UniversalGrading) -> WsTest {
        let q = RootSystem::new(ug.kind()).mod2_form();
        let gd = ug.group_dim();
        let m = gd - 1;
        let perp = q.perp(ug.ebar());
        let quotient = ug.quotient_map();
        let mut h = F2Subspace::from_vectors(
            gd,
            perp.basis().iter().map(|x| quotient.apply(x).extend(gd)),
        );
        let s = ug.s();
        h.insert(&s);
        let table = h
            .elements()
            .map(|g| {
                let (lift, _) = quotient
                    .solve(&g.truncate(m))
                    .expect("subgroup elements project from the complement");
                (g, q.eval(&lift))
            })
            .collect();
        WsTest { group_dim: gd, s, h, table }
    }

    /// The subgroup whose quotient carries the transferred form.
    pub fn subgroup(&self) -> &F2Subspace {
        &self.h
    }

    /// The tabulated subgroup elements with their transferred form values.
    pub fn entries(&self) -> &[(F2Vector, bool)] {
        &self.table
    }

    /// Value of the transferred form at a subgroup element.
    pub fn value(&self, g: &F2Vector) -> bool {
        self.table
            .iter()
            .find(|(x, _)| x == g)
            .expect("the element must lie in the subgroup")
            .1
    }

    /// Whether a map belongs to the stabilizer of the distinguished degree:
    /// it must fix that degree, stabilize the subgroup, and preserve the
    /// transferred form value at every subgroup element.
    pub fn passes(&self, w: &F2LinearMap) -> Result<bool> {
        assert_eq!(w.dom(), self.group_dim);
        assert_eq!(w.cod(), self.group_dim);
        if !w.is_invertible() {
            return Err(Error::NotInvertible);
        }
        if w.apply(&self.s) != self.s {
            return Ok(false);
        }
        if w.image_of(&self.h) != self.h {
            return Ok(false);
        }
        for (g, value) in &self.table {
            if self.value(&w.apply(g)) != *value {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One-shot form of [`WsTest::passes`].
pub fn ws_membership(ug: &UniversalGrading, w: &F2LinearMap) -> Result<bool> {
    WsTest::new(ug).passes(w)
}

/// Span of the degrees whose components are Cartan subalgebras.
pub fn cartan_span(ug: &UniversalGrading) -> F2Subspace {
    F2Subspace::from_vectors(ug.group_dim(), ug.cartan_degrees())
}

/// Span of the degrees carrying no component.
pub fn zero_degree_span(ug: &UniversalGrading) -> F2Subspace {
    let gd = ug.group_dim();
    F2Subspace::from_vectors(gd, F2Vector::all(gd).filter(|v| ug.component(v).is_none()))
}

/// The chain of proper nonzero subgroups preserved by every symmetry of the
/// grading: the span of the Cartan degrees, then the span of the zero
/// degrees when that is strictly larger. For the gradings with three Cartan
/// components the full Weyl group is exactly the stabilizer of this chain,
/// and for the grading whose Cartan degrees span everything the chain is
/// empty and the Weyl group is all of the automorphisms.
pub fn weyl_flag(ug: &UniversalGrading) -> Vec<F2Subspace> {
    let gd = ug.group_dim();
    let s = cartan_span(ug);
    let z = zero_degree_span(ug);
    let mut flag = Vec::new();
    if s.dim() > 0 && s.dim() < gd {
        flag.push(s.clone());
    }
    if z.dim() < gd && z.contains_subspace(&s) && z.dim() > s.dim() {
        flag.push(z);
    }
    flag
}

/// Order of the stabilizer in the general linear group of a nested chain of
/// subspaces: the product of the general linear orders of the successive
/// gaps times the free below-diagonal blocks.
pub fn flag_stabilizer_order(dim: usize, flag: &[F2Subspace]) -> Result<u64> {
    let gaps = flag_gaps(dim, flag)?;
    let blocks: u64 = gaps.iter().map(|&g| gl_order(g)).product();
    let mut cross = 0usize;
    for (i, gi) in gaps.iter().enumerate() {
        for gj in &gaps[i + 1..] {
            cross += gi * gj;
        }
    }
    Ok(blocks << cross)
}

fn flag_gaps(dim: usize, flag: &[F2Subspace]) -> Result<Vec<usize>> {
    let mut prev = F2Subspace::zero(dim);
    let mut gaps = Vec::with_capacity(flag.len() + 1);
    for part in flag {
        if part.ambient() != dim || !part.contains_subspace(&prev) {
            return Err(Error::InvalidFlag);
        }
        gaps.push(part.dim() - prev.dim());
        prev = part.clone();
    }
    gaps.push(dim - prev.dim());
    Ok(gaps)
}

/// Counts the invertible matrices stabilizing every member of the flag by
/// enumerating all matrices, as an independent check of the block formula.
/// Feasible through dimension five.
pub fn flag_stabilizer_count(dim: usize, flag: &[F2Subspace]) -> Result<u64> {
    if dim > 5 {
        return Err(Error::NotEnumerable);
    }
    flag_gaps(dim, flag)?;
    // Flag parts as reduction rows (bits, pivot) for a fast containment test.
    let parts: Vec<Vec<(u32, usize)>> = flag
        .iter()
        .map(|p| {
            p.basis().iter().zip(p.pivots()).map(|(b, &piv)| (b.bits(), piv)).collect()
        })
        .collect();
    let bases: Vec<Vec<u32>> =
        flag.iter().map(|p| p.basis().iter().map(F2Vector::bits).collect()).collect();
    let reduces = |rows: &[(u32, usize)], mut v: u32| -> bool {
        for &(b, piv) in rows {
            if v >> piv & 1 == 1 {
                v ^= b;
            }
        }
        v == 0
    };
    let mask = (1u32 << dim) - 1;
    let mut count = 0u64;
    'matrices: for key in 0..1u64 << (dim * dim) {
        let col = |j: usize| (key >> (j * dim)) as u32 & mask;
        // The image of each flag part must stay inside it; equality follows
        // from invertibility.
        for (rows, basis) in parts.iter().zip(&bases) {
            for &b in basis {
                let mut image = 0u32;
                for j in 0..dim {
                    if b >> j & 1 == 1 {
                        image ^= col(j);
                    }
                }
                if !reduces(rows, image) {
                    continue 'matrices;
                }
            }
        }
        let mut cols: Vec<u32> = (0..dim).map(col).collect();
        let mut rank = 0;
        for r in 0..dim {
            if let Some(p) = (rank..dim).find(|&j| cols[j] >> r & 1 == 1) {
                cols.swap(rank, p);
                let pivot = cols[rank];
                for c in cols.iter_mut().skip(rank + 1) {
                    if *c >> r & 1 == 1 {
                        *c ^= pivot;
                    }
                }
                rank += 1;
            }
        }
        if rank == dim {
            count += 1;
        }
    }
    Ok(count)
}

/// Order of the full Weyl group: the stabilizer order when the Cartan
/// component is unique, three times it when there are exactly three Cartan
/// components, and the whole general linear group when every nonzero degree
/// carries one.
pub fn full_weyl_order(ug: &UniversalGrading) -> u64 {
    let cartans = ug.cartan_degrees().len();
    match cartans {
        1 => ws_order(ug),
        3 => 3 * ws_order(ug),
        _ => {
            assert_eq!(cartans, (1usize << ug.group_dim()) - 1);
            gl_order(ug.group_dim())
        }
    }
}

/// Explicit order-2 and order-3 flag-stabilizing maps permuting the three
/// Cartan degrees of a grading that has exactly three. Their existence shows
/// the Weyl group surjects onto the symmetric group of the Cartan degrees.
///
/// # Panics
///
/// Panics unless the grading has exactly three Cartan components.
pub fn s3_witnesses(ug: &UniversalGrading) -> (F2LinearMap, F2LinearMap) {
    let gd = ug.group_dim();
    let cartans = ug.cartan_degrees();
    assert_eq!(cartans.len(), 3, "the witnesses permute exactly three Cartan degrees");
    let span = F2Subspace::from_vectors(gd, cartans);
    assert_eq!(span.dim(), 2);

    // A basis adapted to the stabilized chain, starting with the Cartan span.
    let mut basis: Vec<F2Vector> = Vec::new();
    let mut seen = F2Subspace::zero(gd);
    let mut chain = vec![span];
    chain.extend(weyl_flag(ug));
    chain.push(F2Subspace::full(gd));
    for part in &chain {
        for v in part.basis() {
            if !seen.contains(v) {
                basis.push(*v);
                seen.insert(v);
            }
        }
    }
    assert_eq!(basis.len(), gd);
    let p = F2LinearMap::from_columns(gd, gd, basis);
    let p_inv = p.inverse().expect("a completed basis is invertible");

    let conjugated = |cols2: [F2Vector; 2]| {
        let d = F2LinearMap::from_fn(gd, gd, |j| {
            if j < 2 {
                cols2[j].extend(gd)
            } else {
                F2Vector::unit(j, gd)
            }
        });
        p.compose(&d).compose(&p_inv)
    };
    let swap = conjugated([F2Vector::unit(1, 2), F2Vector::unit(0, 2)]);
    let cycle = conjugated([F2Vector::unit(1, 2), F2Vector::from_bits(0b11, 2)]);
    (swap, cycle)
}

/// Generators whose closure is the full Weyl group of the grading: block
/// generators of the stabilizer of the distinguished degree, extended with
/// the Cartan-permuting witnesses when there are three Cartan components,
/// or plain general linear generators when the Cartan degrees span the
/// whole group.
pub fn weyl_generators(ug: &UniversalGrading) -> Vec<F2LinearMap> {
    let gd = ug.group_dim();
    let cartans = ug.cartan_degrees().len();
    if cartans == (1usize << gd) - 1 {
        let transvection = F2LinearMap::from_fn(gd, gd, |j| {
            if j == 0 {
                F2Vector::unit(0, gd).with(1, true)
            } else {
                F2Vector::unit(j, gd)
            }
        });
        let cycle = F2LinearMap::from_fn(gd, gd, |j| F2Vector::unit((j + 1) % gd, gd));
        return vec![transvection, cycle];
    }

    let q = RootSystem::new(ug.kind()).mod2_form();
    let split = witt_split(ug.kind(), ug.ebar());
    let m = gd - 1;
    let h = split.wbar.dim();
    let k = split.eprime.dim();

    // Identification of the quotient coordinates with the split coordinates:
    // complement part first, partner part last.
    let iota = F2LinearMap::from_columns(
        m,
        m,
        split
            .wbar
            .basis()
            .iter()
            .chain(split.eprime.basis())
            .map(|b| ug.quotient_map().apply(b))
            .collect(),
    );
    let iota_inv = iota.inverse().expect("the split bases project to a basis of the quotient");
    let lift = |block: F2LinearMap| iota.compose(&block).compose(&iota_inv);
    let zero_xi = F2Vector::zero(m);

    let mut gens: Vec<F2LinearMap> = Vec::new();

    let qw = q.restrict(&split.wbar);
    let o_blocks: Vec<F2LinearMap> = if h <= 4 {
        o_group_elements(&qw)
            .expect("small complements are enumerable")
            .into_iter()
            .map(|iso| iso.linear_map().clone())
            .collect()
    } else {
        // Reflections generate the isometry group in every dimension above
        // four (the lone exception is the four-dimensional split form,
        // which takes the enumerated branch).
        qw.nonisotropic_vectors()
            .iter()
            .map(|v| reflection(&qw, v).expect("reflection vectors are nonisotropic").linear_map().clone())
            .collect()
    };
    for g in o_blocks {
        let block = F2LinearMap::from_fn(m, m, |j| {
            if j < h {
                g.apply(&F2Vector::unit(j, h)).extend(m)
            } else {
                F2Vector::unit(j, m)
            }
        });
        gens.push(embed(&lift(block), &zero_xi, gd));
    }

    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let block = F2LinearMap::from_fn(m, m, |c| {
                if c == h + j {
                    F2Vector::unit(c, m).with(h + i, true)
                } else {
                    F2Vector::unit(c, m)
                }
            });
            gens.push(embed(&lift(block), &zero_xi, gd));
        }
    }

    for i in 0..h {
        for j in 0..k {
            let block = F2LinearMap::from_fn(m, m, |c| {
                if c == h + j {
                    F2Vector::unit(c, m).with(i, true)
                } else {
                    F2Vector::unit(c, m)
                }
            });
            gens.push(embed(&lift(block), &zero_xi, gd));
        }
    }

    for j in 0..m {
        gens.push(embed(&F2LinearMap::identity(m), &F2Vector::unit(j, m), gd));
    }

    if cartans == 3 {
        let (swap, cycle) = s3_witnesses(ug);
        gens.push(swap);
        gens.push(cycle);
    }
    gens
}

/// Extends a map on the quotient coordinates to the grading group: the sign
/// coordinate picks up the given functional and is otherwise fixed.
fn embed(block: &F2LinearMap, xi: &F2Vector, group_dim: usize) -> F2LinearMap {
    let m = group_dim - 1;
    assert_eq!(block.dom(), m);
    assert_eq!(xi.dim(), m);
    F2LinearMap::from_fn(group_dim, group_dim, |j| {
        if j < m {
            block.apply(&F2Vector::unit(j, m)).extend(group_dim).with(m, xi.get(j))
        } else {
            F2Vector::unit(m, group_dim)
        }
    })
}

/// Packs the columns of a square map on at most eight coordinates into one
/// word, lowest column first.
pub fn pack_map(w: &F2LinearMap) -> u64 {
    let n = w.dom();
    assert_eq!(w.cod(), n);
    assert!(n * n <= 64, "packed maps hold at most 64 bits");
    w.columns()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (j, c)| acc | (c.bits() as u64) << (j * n))
}

/// Inverse of [`pack_map`].
pub fn unpack_map(dim: usize, key: u64) -> F2LinearMap {
    let mask = (1u64 << dim) - 1;
    F2LinearMap::from_columns(
        dim,
        dim,
        (0..dim).map(|j| F2Vector::from_bits((key >> (j * dim) & mask) as u32, dim)).collect(),
    )
}

/// All elements of the subgroup generated by the given invertible maps, as
/// packed words in increasing order. Errors when the dimension does not
/// pack, when a generator is singular, or when the closure exceeds the cap.
pub fn generated_group(dim: usize, gens: &[F2LinearMap], cap: usize) -> Result<Vec<u64>> {
    if dim * dim > 64 {
        return Err(Error::NotEnumerable);
    }
    for g in gens {
        assert_eq!(g.dom(), dim);
        assert_eq!(g.cod(), dim);
        if !g.is_invertible() {
            return Err(Error::NotInvertible);
        }
    }
    let mask = (1u64 << dim) - 1;
    let gen_cols: Vec<Vec<u64>> = gens
        .iter()
        .map(|g| g.columns().iter().map(|c| c.bits() as u64).collect())
        .collect();
    let apply = |w: u64, vbits: u64| -> u64 {
        let mut acc = 0u64;
        let mut v = vbits;
        while v != 0 {
            let b = v.trailing_zeros() as usize;
            acc ^= w >> (b * dim) & mask;
            v &= v - 1;
        }
        acc
    };
    let compose = |w: u64, cols: &[u64]| -> u64 {
        cols.iter().enumerate().fold(0u64, |acc, (j, &c)| acc | apply(w, c) << (j * dim))
    };

    let identity = pack_map(&F2LinearMap::identity(dim));
    let mut elements: Vec<u64> = Vec::new();
    let mut stack: Vec<u64> = Vec::new();

    // Dense visited bits fit in memory through dimension five; beyond that a
    // hash set carries the closure.
    if dim <= 5 {
        let mut visited = vec![0u64; (1usize << (dim * dim)) / 64 + 1];
        let mut insert = |key: u64| -> bool {
            let slot = (key / 64) as usize;
            let bit = 1u64 << (key % 64);
            if visited[slot] & bit != 0 {
                return false;
            }
            visited[slot] |= bit;
            true
        };
        insert(identity);
        elements.push(identity);
        stack.push(identity);
        while let Some(w) = stack.pop() {
            for cols in &gen_cols {
                let next = compose(w, cols);
                if insert(next) {
                    if elements.len() >= cap {
                        return Err(Error::NotEnumerable);
                    }
                    elements.push(next);
                    stack.push(next);
                }
            }
        }
    } else {
        let mut visited: HashSet<u64> = HashSet::new();
        visited.insert(identity);
        elements.push(identity);
        stack.push(identity);
        while let Some(w) = stack.pop() {
            for cols in &gen_cols {
                let next = compose(w, cols);
                if visited.insert(next) {
                    if elements.len() >= cap {
                        return Err(Error::NotEnumerable);
                    }
                    elements.push(next);
                    stack.push(next);
                }
            }
        }
    }
    elements.sort_unstable();
    Ok(elements)
}

/// The fully materialized Weyl group of a classified grading.
pub struct WeylClosure {
    dim: usize,
    elements: Vec<u64>,
}

impl WeylClosure {
    /// Materializes the group from its generators, up to the cap.
    pub fn for_grading(ug: &UniversalGrading, cap: usize) -> Result<WeylClosure> {
        let gens = weyl_generators(ug);
        let elements = generated_group(ug.group_dim(), &gens, cap)?;
        Ok(WeylClosure { dim: ug.group_dim(), elements })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, w: &F2LinearMap) -> bool {
        self.elements.binary_search(&pack_map(w)).is_ok()
    }

    pub fn maps(&self) -> impl Iterator<Item = F2LinearMap> + '_ {
        self.elements.iter().map(move |&key| unpack_map(self.dim, key))
    }
}

/// Dimension of the subalgebra fixed by the involution indexed by a nonzero
/// vector of the mod-2 root lattice: the rank plus the number of roots whose
/// class pairs to zero with the vector.
///
/// # Panics
///
/// Panics on the zero vector, whose involution is the identity.
pub fn involution_fixed_dim(kind: Kind, v: &F2Vector) -> usize {
    assert!(!v.is_zero(), "the trivial character fixes the whole algebra");
    assert_eq!(v.dim(), kind.rank());
    let rs = RootSystem::new(kind);
    let q = rs.mod2_form();
    kind.rank() + (0..rs.roots().len()).filter(|&r| !q.b(&rs.root_class(r), v)).count()
}
