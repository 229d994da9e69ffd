//! Construction and classification of special pure gradings.
//!
//! A grading is selected by a totally isotropic subspace of the mod-2 root
//! lattice that avoids every root class. The homogeneous components are
//! indexed by the quotient of the lattice by the subspace together with one
//! extra sign bit: each positive root contributes a difference vector at sign
//! bit 0 and a sum vector at sign bit 1, and the Cartan subalgebra sits at
//! the degree whose quotient part is zero and whose sign bit is set.

use std::collections::BTreeMap;
use std::fmt;

use crate::chevalley::{self, LieAlgebra};
use crate::error::{Error, Result};
use crate::f2::{F2LinearMap, F2Subspace, F2Vector};
use crate::quadform::{canonical_isotropic, ti_orbit_check, witt_index};
use crate::rootsys::{Kind, RootSystem};

/// A subspace of the mod-2 root lattice selecting a pure grading.
///
/// The subspace must avoid every root class. Beyond that it is either
/// totally isotropic for the mod-2 form, or, for E7 only, the radical line
/// of the polar form. The radical line is representable so that the span
/// criterion can reject it explicitly, but it never yields a grading: see
/// [`validate_ecirc`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplementaryData {
    kind: Kind,
    ebar: F2Subspace,
    radical_case: bool,
}

impl ComplementaryData {
    /// Validates a subspace against the mod-2 form of the given kind.
    ///
    /// # Panics
    ///
    /// Panics if the ambient dimension of the subspace is not the rank.
    pub fn new(kind: Kind, ebar: F2Subspace) -> Result<Self> {
        assert_eq!(ebar.ambient(), kind.rank(), "subspace must sit in the mod-2 root lattice");
        let rs = RootSystem::new(kind);
        let q = rs.mod2_form();
        if rs.root_classes().iter().any(|c| ebar.contains(c)) {
            return Err(Error::NotSpecial);
        }
        if q.is_totally_isotropic(&ebar) {
            return Ok(ComplementaryData { kind, ebar, radical_case: false });
        }
        if kind == Kind::E7 && ebar == q.radical_b() {
            return Ok(ComplementaryData { kind, ebar, radical_case: true });
        }
        Err(Error::NotTotallyIsotropic)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn ebar(&self) -> &F2Subspace {
        &self.ebar
    }

    /// True when the subspace is the E7 radical line rather than totally
    /// isotropic.
    pub fn is_radical_case(&self) -> bool {
        self.radical_case
    }
}

/// Checks that the subspace is spanned by the sums of pairs of distinct
/// positive-root classes lying inside it, together with any root classes it
/// contains (none, by construction). Totally isotropic subspaces always
/// pass. The E7 radical line fails: the sum of two distinct root classes is
/// never the radical generator, since adding the generator to a root class
/// flips the value of the form.
pub fn validate_ecirc(comp: &ComplementaryData) -> bool {
    let rs = RootSystem::new(comp.kind);
    let classes = rs.root_classes();
    let mut span = F2Subspace::zero(comp.ebar.ambient());
    for (i, a) in classes.iter().enumerate() {
        if comp.ebar.contains(a) {
            span.insert(a);
        }
        for b in classes.iter().skip(i + 1) {
            let sum = a.add(b);
            if comp.ebar.contains(&sum) {
                span.insert(&sum);
            }
        }
    }
    span == comp.ebar
}

/// A basis vector of a homogeneous component, described against the
/// Chevalley basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HomogeneousVector {
    /// `E_r - E_{-r}` for the positive root with index `r`.
    Difference(usize),
    /// `E_r + E_{-r}` for the positive root with index `r`.
    Sum(usize),
    /// The Cartan generator `h_i`.
    Cartan(usize),
}

impl HomogeneousVector {
    /// The element as a coordinate vector over the Chevalley basis.
    pub fn element(&self, alg: &LieAlgebra) -> Vec<i64> {
        let mut v = vec![0; alg.dim()];
        match *self {
            HomogeneousVector::Difference(r) => {
                v[alg.e_index(r)] = 1;
                v[alg.e_index(alg.root_system().negative(r))] = -1;
            }
            HomogeneousVector::Sum(r) => {
                v[alg.e_index(r)] = 1;
                v[alg.e_index(alg.root_system().negative(r))] = 1;
            }
            HomogeneousVector::Cartan(i) => v[alg.h_index(i)] = 1,
        }
        v
    }
}

/// One homogeneous component of a grading.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    degree: F2Vector,
    basis: Vec<HomogeneousVector>,
    cartan: bool,
}

impl Component {
    pub fn degree(&self) -> F2Vector {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[HomogeneousVector] {
        &self.basis
    }

    /// Whether the coset analysis marks this component as a Cartan
    /// subalgebra. The flag is structural; building a model certifies it.
    pub fn is_cartan(&self) -> bool {
        self.cartan
    }

    /// Indices of the positive roots contributing to this component.
    pub fn roots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .filter_map(|hv| match *hv {
                HomogeneousVector::Difference(r) | HomogeneousVector::Sum(r) => Some(r),
                HomogeneousVector::Cartan(_) => None,
            })
            .collect()
    }
}

/// A special pure grading with its universal group.
///
/// Degrees are vectors of length `(rank - dim Ebar) + 1`: the quotient
/// coordinates of a root class followed by the sign bit. The distinguished
/// degree `s` is the last standard basis vector, and its component is the
/// Cartan subalgebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniversalGrading {
    comp: ComplementaryData,
    quotient: F2LinearMap,
    group_dim: usize,
    components: BTreeMap<F2Vector, Component>,
}

impl UniversalGrading {
    /// Builds the grading determined by a totally isotropic subspace that
    /// avoids every root class.
    pub fn new(kind: Kind, ebar: &F2Subspace) -> Result<UniversalGrading> {
        let comp = ComplementaryData::new(kind, ebar.clone())?;
        if comp.radical_case {
            return Err(Error::NotTotallyIsotropic);
        }
        let rs = RootSystem::new(kind);
        let rank = kind.rank();
        let m = rank - ebar.dim();
        let group_dim = m + 1;
        let quotient = ebar.quotient_map();
        let mut components: BTreeMap<F2Vector, Component> = BTreeMap::new();
        let mut push = |degree: F2Vector, hv: HomogeneousVector| {
            components
                .entry(degree)
                .or_insert_with(|| Component { degree, basis: Vec::new(), cartan: false })
                .basis
                .push(hv);
        };
        for p in rs.positive_roots() {
            let image = quotient.apply(&rs.root_class(p));
            push(degree_vector(&image, false, group_dim), HomogeneousVector::Difference(p));
            push(degree_vector(&image, true, group_dim), HomogeneousVector::Sum(p));
        }
        let s = F2Vector::unit(m, group_dim);
        for i in 0..rank {
            push(s, HomogeneousVector::Cartan(i));
        }
        for c in components.values_mut() {
            c.cartan = c.basis.len() == rank;
        }
        let grading = UniversalGrading { comp, quotient, group_dim, components };
        assert_eq!(
            grading.components.values().map(Component::dim).sum::<usize>(),
            rank + rs.roots().len(),
            "components must account for the whole algebra"
        );
        assert!(
            !grading.components.contains_key(&F2Vector::zero(group_dim)),
            "the identity component of a special grading vanishes"
        );
        assert_eq!(
            F2Subspace::from_vectors(group_dim, grading.components.keys().copied()).dim(),
            group_dim,
            "the support must span the universal group"
        );
        Ok(grading)
    }

    pub fn kind(&self) -> Kind {
        self.comp.kind
    }

    pub fn data(&self) -> &ComplementaryData {
        &self.comp
    }

    pub fn ebar(&self) -> &F2Subspace {
        &self.comp.ebar
    }

    /// The quotient map from the mod-2 root lattice onto the non-sign
    /// coordinates of the grading group.
    pub fn quotient_map(&self) -> &F2LinearMap {
        &self.quotient
    }

    pub fn group_dim(&self) -> usize {
        self.group_dim
    }

    /// The distinguished degree whose component is the Cartan subalgebra.
    pub fn s(&self) -> F2Vector {
        F2Vector::unit(self.group_dim - 1, self.group_dim)
    }

    pub fn components(&self) -> impl Iterator<Item = &Component> {
        self.components.values()
    }

    pub fn component(&self, degree: &F2Vector) -> Option<&Component> {
        self.components.get(degree)
    }

    /// Degrees carrying a nonzero component, in increasing bit order.
    pub fn support(&self) -> Vec<F2Vector> {
        self.components.keys().copied().collect()
    }

    /// Degrees whose components are flagged as Cartan subalgebras.
    pub fn cartan_degrees(&self) -> Vec<F2Vector> {
        self.components.values().filter(|c| c.cartan).map(|c| c.degree).collect()
    }

    /// The degree of a homogeneous basis vector.
    pub fn degree_of(&self, hv: &HomogeneousVector, rs: &RootSystem) -> F2Vector {
        match *hv {
            HomogeneousVector::Difference(r) => {
                degree_vector(&self.quotient.apply(&rs.root_class(r)), false, self.group_dim)
            }
            HomogeneousVector::Sum(r) => {
                degree_vector(&self.quotient.apply(&rs.root_class(r)), true, self.group_dim)
            }
            HomogeneousVector::Cartan(_) => self.s(),
        }
    }

    pub fn grading_type(&self) -> GradingType {
        GradingType::from_dims(self.components.values().map(Component::dim))
    }
}

fn degree_vector(image: &F2Vector, sign: bool, group_dim: usize) -> F2Vector {
    let d = image.extend(group_dim);
    if sign {
        d.with(group_dim - 1, true)
    } else {
        d
    }
}

/// Dimension census of a grading: entry `i` counts the homogeneous
/// components of dimension `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradingType(Vec<usize>);

impl GradingType {
    pub fn from_dims(dims: impl IntoIterator<Item = usize>) -> GradingType {
        let mut counts: Vec<usize> = Vec::new();
        for d in dims {
            assert!(d > 0, "only nonzero components enter the type");
            if counts.len() < d {
                counts.resize(d, 0);
            }
            counts[d - 1] += 1;
        }
        GradingType(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Total dimension of the graded algebra.
    pub fn total(&self) -> usize {
        self.0.iter().enumerate().map(|(i, n)| (i + 1) * n).sum()
    }
}

impl fmt::Display for GradingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

/// One equivalence class of special pure gradings.
#[derive(Clone, Debug)]
pub struct ClassifiedGrading {
    /// The canonical defining subspace: least in enumeration order among the
    /// totally isotropic subspaces of its dimension.
    pub ebar: F2Subspace,
    pub grading_type: GradingType,
    pub group_dim: usize,
}

/// All special pure gradings on the algebra of the given kind up to
/// equivalence, one per dimension of the defining subspace from zero to the
/// Witt index. Uniqueness for each dimension is certified by linking every
/// totally isotropic subspace of that dimension to the canonical one through
/// an isometry.
pub fn classify(kind: Kind) -> Vec<ClassifiedGrading> {
    let q = RootSystem::new(kind).mod2_form();
    let max = witt_index(&q).expect("the mod-2 form of a root lattice is regular");
    (0..=max)
        .map(|k| {
            let ebar = canonical_isotropic(&q, k)
                .expect("the rank is within the enumeration bound")
                .expect("totally isotropic subspaces exist up to the Witt index");
            assert!(
                ti_orbit_check(&q, k).expect("the rank is within the enumeration bound"),
                "totally isotropic subspaces of one dimension form a single orbit"
            );
            let grading =
                UniversalGrading::new(kind, &ebar).expect("canonical subspaces are admissible");
            ClassifiedGrading {
                ebar,
                grading_type: grading.grading_type(),
                group_dim: grading.group_dim(),
            }
        })
        .collect()
}

/// A grading realized on the Chevalley basis with the grading axioms checked
/// exactly: the components are independent and exhaust the algebra, every
/// bracket of homogeneous vectors lands in the component of the sum of the
/// degrees, and each component flagged as Cartan is certified through its
/// centralizer.
pub struct GradedModel {
    algebra: LieAlgebra,
    grading: UniversalGrading,
}

impl GradedModel {
    /// Builds and verifies the model.
    ///
    /// # Panics
    ///
    /// Panics if any grading axiom fails, or if the structural Cartan flags
    /// disagree with the centralizer certification. Either would be a
    /// construction bug, not a property of the input.
    pub fn new(grading: &UniversalGrading) -> GradedModel {
        let model =
            GradedModel { algebra: LieAlgebra::new(grading.kind()), grading: grading.clone() };
        model.verify();
        model
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn grading(&self) -> &UniversalGrading {
        &self.grading
    }

    /// The component bases as integer coordinate vectors, keyed by degree.
    pub fn component_vectors(&self) -> BTreeMap<F2Vector, Vec<Vec<i64>>> {
        self.grading
            .components()
            .map(|c| {
                (c.degree(), c.basis().iter().map(|hv| hv.element(&self.algebra)).collect())
            })
            .collect()
    }

    fn verify(&self) {
        let rs = self.algebra.root_system();
        let rank = self.algebra.rank();
        let dim = self.algebra.dim();

        let all: Vec<Vec<i64>> = self
            .grading
            .components()
            .flat_map(|c| c.basis().iter().map(|hv| hv.element(&self.algebra)))
            .collect();
        assert_eq!(all.len(), dim, "component bases must exhaust the algebra");
        assert_eq!(chevalley::rank_z(&all), dim, "component bases must be independent");

        // Quotient image of each root, indexed over the full root list.
        let images: Vec<F2Vector> = (0..rs.roots().len())
            .map(|r| self.grading.quotient_map().apply(&rs.root_class(r)))
            .collect();

        let components: Vec<&Component> = self.grading.components().collect();
        crate::par::for_each_chunk(components.len(), |range| {
            for c1 in &components[range] {
                for c2 in &components {
                    let target = c1.degree().add(&c2.degree());
                    for x in c1.basis() {
                        for y in c2.basis() {
                            let z = self.basis_bracket(x, y);
                            assert!(
                                self.lies_in(&z, &target, &images),
                                "bracket of degrees {} and {} must land in degree {}",
                                c1.degree(),
                                c2.degree(),
                                target
                            );
                        }
                    }
                }
            }
        });

        for c in &components {
            if c.dim() != rank {
                assert!(!c.is_cartan(), "Cartan flags are reserved for full-rank components");
                continue;
            }
            // Abelian holds already: the bracket check above sends
            // [L_g, L_g] into the identity component, which is zero.
            let basis: Vec<Vec<i64>> =
                c.basis().iter().map(|hv| hv.element(&self.algebra)).collect();
            let cent = self.algebra.centralizer(&basis);
            assert_eq!(cent.len(), rank, "a Cartan component centralizes exactly itself");
            let mut stacked = basis;
            stacked.extend(cent);
            assert_eq!(
                chevalley::rank_z(&stacked),
                rank,
                "the centralizer must coincide with the component"
            );
            assert!(c.is_cartan(), "certified Cartan components must carry the flag");
        }
    }

    fn basis_bracket(&self, x: &HomogeneousVector, y: &HomogeneousVector) -> Vec<i64> {
        let mut out = vec![0i64; self.algebra.dim()];
        for (i, a) in self.terms(x) {
            for (j, b) in self.terms(y) {
                for (t, c) in self.algebra.bracket_basis(i, j) {
                    out[t] += a * b * c;
                }
            }
        }
        out
    }

    fn terms(&self, hv: &HomogeneousVector) -> Vec<(usize, i64)> {
        let rs = self.algebra.root_system();
        match *hv {
            HomogeneousVector::Difference(r) => vec![
                (self.algebra.e_index(r), 1),
                (self.algebra.e_index(rs.negative(r)), -1),
            ],
            HomogeneousVector::Sum(r) => vec![
                (self.algebra.e_index(r), 1),
                (self.algebra.e_index(rs.negative(r)), 1),
            ],
            HomogeneousVector::Cartan(i) => vec![(self.algebra.h_index(i), 1)],
        }
    }

    /// Membership of an element in the component at `target`, decided
    /// coordinate by coordinate: Cartan coordinates only at the
    /// distinguished degree, root coordinates only over the matching coset
    /// and with the sign pairing dictated by the sign bit.
    fn lies_in(&self, z: &[i64], target: &F2Vector, images: &[F2Vector]) -> bool {
        let rs = self.algebra.root_system();
        let rank = self.algebra.rank();
        let m = self.grading.group_dim() - 1;
        let sign = target.get(m);
        let image = target.truncate(m);
        if *target != self.grading.s()
            && (0..rank).any(|i| z[self.algebra.h_index(i)] != 0)
        {
            return false;
        }
        for p in rs.positive_roots() {
            let cp = z[self.algebra.e_index(p)];
            let cm = z[self.algebra.e_index(rs.negative(p))];
            if cp == 0 && cm == 0 {
                continue;
            }
            if images[p] != image {
                return false;
            }
            let paired = if sign { cm == cp } else { cm == -cp };
            if !paired {
                return false;
            }
        }
        true
    }
}

/// A binary linear code given by its complete word list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryCode {
    length: usize,
    words: Vec<F2Vector>,
}

impl BinaryCode {
    /// The extended Hamming code of length 8: the zero word, the all-ones
    /// word, and fourteen words of weight four.
    pub fn hamming() -> BinaryCode {
        BinaryCode::from_words(
            8,
            &[
                "00000000", "11111111", "11110000", "00001111", "11001100", "11000011",
                "00111100", "00110011", "10101010", "10100101", "01011010", "01010101",
                "10011001", "10010110", "01101001", "01100110",
            ],
        )
    }

    /// The simplex code of length 7: the zero word and seven words of
    /// weight four.
    pub fn simplex() -> BinaryCode {
        BinaryCode::from_words(
            7,
            &["0000000", "1100110", "0110011", "1010101", "1111000", "0011110", "1001011", "0101101"],
        )
    }

    fn from_words(length: usize, words: &[&str]) -> BinaryCode {
        let mut parsed: Vec<F2Vector> = words
            .iter()
            .map(|w| w.parse().expect("code words are valid bitstrings"))
            .collect();
        assert!(parsed.iter().all(|w| w.dim() == length), "code words must share the length");
        parsed.sort();
        parsed.dedup();
        assert_eq!(parsed.len(), words.len(), "code words must be distinct");
        for a in &parsed {
            for b in &parsed {
                assert!(
                    parsed.binary_search(&a.add(b)).is_ok(),
                    "a linear code is closed under addition"
                );
            }
        }
        BinaryCode { length, words: parsed }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// All codewords in increasing bit order.
    pub fn words(&self) -> &[F2Vector] {
        &self.words
    }

    pub fn dimension(&self) -> usize {
        F2Subspace::from_vectors(self.length, self.words.iter().copied()).dim()
    }

    pub fn contains(&self, w: &F2Vector) -> bool {
        self.words.binary_search(w).is_ok()
    }
}

/// The dimension layout of a code-based model. Degrees live in the product
/// of the code with two extra sign bits, encoded as vectors with the word
/// first and the two extra bits last.
#[derive(Clone, Debug)]
pub struct CodeGrading {
    kind: Kind,
    code: BinaryCode,
    dims: BTreeMap<F2Vector, usize>,
}

/// The combinatorial layout of the code-based model for E7 or E8: the code
/// word zero carries the Cartan pieces on its three nonzero sign pairs, the
/// all-ones word (present only in the length-8 code) carries nothing, and
/// every other word carries a four-dimensional piece at each sign pair.
///
/// # Panics
///
/// Panics for E6, which has no code-based model.
pub fn code_grading(kind: Kind) -> CodeGrading {
    let code = match kind {
        Kind::E8 => BinaryCode::hamming(),
        Kind::E7 => BinaryCode::simplex(),
        Kind::E6 => panic!("code-based models exist for E7 and E8 only"),
    };
    let rank = kind.rank();
    let n = code.length();
    let group_dim = n + 2;
    let mut dims = BTreeMap::new();
    for w in code.words() {
        for i in 0..2u32 {
            for j in 0..2u32 {
                let mut degree = w.extend(group_dim);
                degree = degree.with(n, i == 1).with(n + 1, j == 1);
                let d = if w.is_zero() {
                    if i == 0 && j == 0 {
                        0
                    } else {
                        rank
                    }
                } else if kind == Kind::E8 && w.weight() as usize == n {
                    0
                } else {
                    4
                };
                dims.insert(degree, d);
            }
        }
    }
    CodeGrading { kind, code, dims }
}

impl CodeGrading {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn code(&self) -> &BinaryCode {
        &self.code
    }

    pub fn group_dim(&self) -> usize {
        self.code.length() + 2
    }

    /// Component dimension per degree, over the whole grading group.
    pub fn dims(&self) -> &BTreeMap<F2Vector, usize> {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn grading_type(&self) -> GradingType {
        GradingType::from_dims(self.dims.values().copied().filter(|&d| d > 0))
    }

    /// Span of the degrees whose components are Cartan subalgebras.
    pub fn cartan_span(&self) -> F2Subspace {
        let rank = self.kind.rank();
        F2Subspace::from_vectors(
            self.code.length() + 2,
            self.dims.iter().filter(|&(_, &d)| d == rank).map(|(g, _)| *g),
        )
    }

    /// Span of the degrees whose components vanish.
    pub fn zero_span(&self) -> F2Subspace {
        F2Subspace::from_vectors(
            self.code.length() + 2,
            self.dims.iter().filter(|&(_, &d)| d == 0).map(|(g, _)| *g),
        )
    }
}
