//! Isomorphism classification of gradings over arbitrary elementary abelian
//! 2-groups: coarsenings of the universal gradings, the invariant sequence
//! that decides isomorphism, and the Weyl-orbit oracle the decision is
//! checked against.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::f2::{F2LinearMap, F2Subspace, F2Vector};
use crate::gradings::UniversalGrading;
use crate::rootsys::{Kind, RootSystem};
use crate::symmetry::{WeylClosure, WsTest};

/// Largest Weyl group the oracle will materialize.
pub const ORACLE_CAP: usize = 10_500_000;

/// A grading over an arbitrary elementary abelian 2-group, presented as a
/// re-indexing of a universal grading along a homomorphism of grading
/// groups. The homomorphism must keep the components apart: no two support
/// degrees may collide and none may land on the identity.
pub struct CoarseGrading<'a> {
    base: &'a UniversalGrading,
    alpha: F2LinearMap,
}

impl<'a> CoarseGrading<'a> {
    pub fn new(base: &'a UniversalGrading, alpha: F2LinearMap) -> Result<CoarseGrading<'a>> {
        assert_eq!(alpha.dom(), base.group_dim());
        let mut seen = HashSet::new();
        for g in base.support() {
            let image = alpha.apply(&g);
            if image.is_zero() {
                return Err(Error::InvalidCoarsening(
                    "a component degree maps to the identity".into(),
                ));
            }
            if !seen.insert(image) {
                return Err(Error::InvalidCoarsening(
                    "two component degrees collide".into(),
                ));
            }
        }
        Ok(CoarseGrading { base, alpha })
    }

    /// The grading viewed over its own universal group.
    pub fn universal(base: &'a UniversalGrading) -> CoarseGrading<'a> {
        CoarseGrading::new(base, F2LinearMap::identity(base.group_dim()))
            .expect("the identity re-indexing is always valid")
    }

    pub fn base(&self) -> &UniversalGrading {
        self.base
    }

    pub fn alpha(&self) -> &F2LinearMap {
        &self.alpha
    }

    pub fn target_dim(&self) -> usize {
        self.alpha.cod()
    }
}

/// The shape of an invariant sequence, determined by the equivalence class
/// of the underlying grading: which subgroups appear and which transferred
/// form, if any, accompanies them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvCase {
    /// The support subgroup alone suffices.
    SupportOnly,
    /// Support subgroup, zero-degree subgroup, and Cartan subgroup.
    SupportKernelCartan,
    /// Support subgroup and Cartan subgroup.
    SupportCartan,
    /// Support and Cartan subgroups with the transferred alternating form.
    CartanBilinear,
    /// Support, complement and Cartan subgroups with the transferred
    /// quadratic form.
    CartanQuadratic,
}

/// The full isomorphism invariant of a coarse grading: subgroups of the
/// target group plus the transferred form tabulated in the coordinates of
/// the quotient by the Cartan subgroup. Two coarse gradings over the same
/// target are isomorphic exactly when these sequences are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvSequence {
    case: InvCase,
    support: F2Subspace,
    kernel: Option<F2Subspace>,
    cartan: Option<F2Subspace>,
    complement: Option<F2Subspace>,
    quadratic: Option<Vec<(F2Vector, bool)>>,
    bilinear: Option<Vec<(F2Vector, F2Vector, bool)>>,
}

impl InvSequence {
    pub fn case(&self) -> InvCase {
        self.case
    }

    pub fn support_group(&self) -> &F2Subspace {
        &self.support
    }

    pub fn kernel_group(&self) -> Option<&F2Subspace> {
        self.kernel.as_ref()
    }

    pub fn cartan_group(&self) -> Option<&F2Subspace> {
        self.cartan.as_ref()
    }

    pub fn complement_group(&self) -> Option<&F2Subspace> {
        self.complement.as_ref()
    }

    /// Transferred quadratic form as (quotient element, value) pairs.
    pub fn quadratic_table(&self) -> Option<&[(F2Vector, bool)]> {
        self.quadratic.as_deref()
    }

    /// Transferred alternating form on the quotient basis pairs.
    pub fn bilinear_table(&self) -> Option<&[(F2Vector, F2Vector, bool)]> {
        self.bilinear.as_deref()
    }
}

/// Subgroup of the target generated by the degrees that carry a component.
pub fn support_subgroup(cg: &CoarseGrading) -> F2Subspace {
    F2Subspace::from_vectors(
        cg.target_dim(),
        cg.base().support().iter().map(|g| cg.alpha().apply(g)),
    )
}

fn cartan_subgroup(cg: &CoarseGrading) -> F2Subspace {
    F2Subspace::from_vectors(
        cg.target_dim(),
        cg.base().cartan_degrees().iter().map(|g| cg.alpha().apply(g)),
    )
}

fn zero_degree_subgroup(cg: &CoarseGrading) -> F2Subspace {
    let support = support_subgroup(cg);
    let images: HashSet<F2Vector> =
        cg.base().support().iter().map(|g| cg.alpha().apply(g)).collect();
    F2Subspace::from_vectors(
        cg.target_dim(),
        support.elements().filter(|x| !x.is_zero() && !images.contains(x)),
    )
}

/// The transferred quadratic form: push the tabulated values of the
/// subgroup over the orthogonal complement through the re-indexing and the
/// quotient by the Cartan subgroup. The push-forward must be single-valued;
/// a representative-dependent value would mean the re-indexing is invalid.
fn transferred_quadratic(
    cg: &CoarseGrading,
    cartan: &F2Subspace,
) -> (F2Subspace, Vec<(F2Vector, bool)>) {
    let test = WsTest::new(cg.base());
    let complement = cg.alpha().image_of(test.subgroup());
    let pi = cartan.quotient_map();
    let mut table: BTreeMap<F2Vector, bool> = BTreeMap::new();
    for (g, value) in test.entries() {
        let image = pi.apply(&cg.alpha().apply(g));
        match table.entry(image) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(*value);
            }
            std::collections::btree_map::Entry::Occupied(slot) => {
                assert_eq!(
                    *slot.get(),
                    *value,
                    "the transferred form value must not depend on the representative"
                );
            }
        }
    }
    (complement, table.into_iter().collect())
}

/// The transferred alternating form on the quotient of the support subgroup
/// by the Cartan subgroup, tabulated on the quotient basis pairs. Lifts are
/// taken through the support subgroup and the re-indexing; the polar form of
/// the mod-2 root form evaluates the pair upstairs.
fn transferred_bilinear(
    cg: &CoarseGrading,
    support: &F2Subspace,
    cartan: &F2Subspace,
) -> Vec<(F2Vector, F2Vector, bool)> {
    let q = RootSystem::new(cg.base().kind()).mod2_form();
    let m = cg.base().group_dim() - 1;
    let pi = cartan.quotient_map();
    let quotient = F2Subspace::from_vectors(
        pi.cod(),
        support.basis().iter().map(|b| pi.apply(b)),
    );
    let lift_to_root_lattice = |tbar: &F2Vector| -> F2Vector {
        let (particular, _) = pi.solve(tbar).expect("the quotient map is surjective");
        let in_support = cartan
            .elements()
            .map(|c| particular.add(&c))
            .find(|t| support.contains(t))
            .expect("quotient elements of the support lift into it");
        let (upstairs, _) = cg
            .alpha()
            .solve(&in_support)
            .expect("the support subgroup is the image of the re-indexing");
        upstairs.truncate(m)
    };
    let lifts: Vec<F2Vector> = quotient.basis().iter().map(lift_to_root_lattice).collect();
    let mut table = Vec::new();
    for (i, bi) in quotient.basis().iter().enumerate() {
        for (j, bj) in quotient.basis().iter().enumerate() {
            table.push((*bi, *bj, q.b(&lifts[i], &lifts[j])));
        }
    }
    table
}

/// Computes the invariant sequence of a coarse grading. The shape follows
/// the equivalence class of the base grading; the deepest E7 grading
/// additionally splits on whether the re-indexing drops the support
/// subgroup to dimension seven.
pub fn compute_inv(cg: &CoarseGrading) -> InvSequence {
    let kind = cg.base().kind();
    let depth = cg.base().ebar().dim();
    let support = support_subgroup(cg);
    let cartan = cartan_subgroup(cg);
    match (kind, depth) {
        (Kind::E8, 4) => InvSequence {
            case: InvCase::SupportOnly,
            support,
            kernel: None,
            cartan: None,
            complement: None,
            quadratic: None,
            bilinear: None,
        },
        (Kind::E8, 3) => {
            let kernel = zero_degree_subgroup(cg);
            assert!(kernel.contains_subspace(&cartan));
            assert!(support.contains_subspace(&kernel));
            InvSequence {
                case: InvCase::SupportKernelCartan,
                support,
                kernel: Some(kernel),
                cartan: Some(cartan),
                complement: None,
                quadratic: None,
                bilinear: None,
            }
        }
        (Kind::E7, 3) => InvSequence {
            case: InvCase::SupportCartan,
            support,
            kernel: None,
            cartan: Some(cartan),
            complement: None,
            quadratic: None,
            bilinear: None,
        },
        (Kind::E7, 0) if support.dim() == 7 => {
            let bilinear = transferred_bilinear(cg, &support, &cartan);
            InvSequence {
                case: InvCase::CartanBilinear,
                support,
                kernel: None,
                cartan: Some(cartan),
                complement: None,
                quadratic: None,
                bilinear: Some(bilinear),
            }
        }
        _ => {
            let (complement, table) = transferred_quadratic(cg, &cartan);
            assert!(complement.contains_subspace(&cartan));
            assert!(support.contains_subspace(&complement));
            InvSequence {
                case: InvCase::CartanQuadratic,
                support,
                kernel: None,
                cartan: Some(cartan),
                complement: Some(complement),
                quadratic: Some(table),
                bilinear: None,
            }
        }
    }
}

/// Names the first constituent in which two invariant sequences differ.
pub fn first_difference(a: &InvSequence, b: &InvSequence) -> Option<&'static str> {
    if a.case != b.case {
        return Some("invariant shape");
    }
    if a.support != b.support {
        return Some("support subgroup");
    }
    if a.kernel != b.kernel {
        return Some("zero-degree subgroup");
    }
    if a.cartan != b.cartan {
        return Some("cartan subgroup");
    }
    if a.complement != b.complement {
        return Some("complement subgroup");
    }
    if a.quadratic != b.quadratic {
        return Some("quadratic form table");
    }
    if a.bilinear != b.bilinear {
        return Some("bilinear form table");
    }
    None
}

/// Decides whether two coarse gradings over the same target group are
/// isomorphic, by comparing their invariant sequences. Gradings of
/// different kinds or depths are never isomorphic; gradings over different
/// targets are not comparable.
pub fn is_isomorphic(cg1: &CoarseGrading, cg2: &CoarseGrading) -> Result<bool> {
    if cg1.target_dim() != cg2.target_dim() {
        return Err(Error::TargetMismatch(cg1.target_dim(), cg2.target_dim()));
    }
    if cg1.base().kind() != cg2.base().kind()
        || cg1.base().ebar().dim() != cg2.base().ebar().dim()
    {
        return Ok(false);
    }
    Ok(compute_inv(cg1) == compute_inv(cg2))
}

/// Decides isomorphism by searching the Weyl group of the common base for a
/// symmetry carrying one re-indexing to the other. Materializes the group
/// first; see [`weyl_orbit_oracle_with`] to reuse a materialized group
/// across many comparisons.
pub fn weyl_orbit_oracle(cg1: &CoarseGrading, cg2: &CoarseGrading) -> Result<bool> {
    let closure = WeylClosure::for_grading(cg1.base(), ORACLE_CAP)?;
    weyl_orbit_oracle_with(cg1, cg2, &closure)
}

/// Oracle against a previously materialized Weyl group of the common base
/// grading: solves the re-indexing equation column by column and tests every
/// solution for membership.
pub fn weyl_orbit_oracle_with(
    cg1: &CoarseGrading,
    cg2: &CoarseGrading,
    closure: &WeylClosure,
) -> Result<bool> {
    if cg1.target_dim() != cg2.target_dim() {
        return Err(Error::TargetMismatch(cg1.target_dim(), cg2.target_dim()));
    }
    assert_eq!(
        cg1.base().ebar(),
        cg2.base().ebar(),
        "the oracle compares re-indexings of one universal grading"
    );
    assert_eq!(cg1.base().kind(), cg2.base().kind());
    let gd = cg1.base().group_dim();
    assert_eq!(closure.dim(), gd);

    let beta = cg2.alpha();
    let mut particulars = Vec::with_capacity(gd);
    let mut kernel = None;
    for j in 0..gd {
        let target = cg1.alpha().apply(&F2Vector::unit(j, gd));
        match beta.solve(&target) {
            None => return Ok(false),
            Some((p, ker)) => {
                particulars.push(p);
                kernel.get_or_insert(ker);
            }
        }
    }
    let kernel = kernel.expect("grading groups are nontrivial");
    if kernel.dim() * gd > 20 {
        return Err(Error::NotEnumerable);
    }
    let offsets: Vec<F2Vector> = kernel.elements().collect();

    let mut choice = vec![0usize; gd];
    loop {
        let cols: Vec<F2Vector> = particulars
            .iter()
            .zip(&choice)
            .map(|(p, &c)| p.add(&offsets[c]))
            .collect();
        let omega = F2LinearMap::from_columns(gd, gd, cols);
        if closure.contains(&omega) {
            return Ok(true);
        }
        let mut digit = 0;
        loop {
            if digit == gd {
                return Ok(false);
            }
            choice[digit] += 1;
            if choice[digit] < offsets.len() {
                break;
            }
            choice[digit] = 0;
            digit += 1;
        }
    }
}
