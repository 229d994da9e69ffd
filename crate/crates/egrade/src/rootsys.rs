//! The root systems E6, E7 and E8 and their mod-2 quadratic forms.
//!
//! Roots are kept as integer coordinate vectors over the simple-root basis,
//! numbered as in Bourbaki: the branch node is 4, the short chain is
//! 1-3-4-5-6(-7-8), and node 2 hangs off the branch node. With all roots
//! normalized to squared length 2, the Cartan matrix is the Gram matrix, and
//! reducing coordinates mod 2 turns half the squared length into a quadratic
//! form on `F_2^rank` whose polarization is the mod-2 inner product. Every
//! root is nonisotropic for this form, and roots collapse exactly in pairs
//! `{a, -a}`.

use crate::f2::F2Vector;
use crate::quadform::QuadraticSpace;
use std::collections::HashMap;

/// The three exceptional types handled by this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    E6,
    E7,
    E8,
}

impl Kind {
    pub fn all() -> [Kind; 3] {
        [Kind::E6, Kind::E7, Kind::E8]
    }

    pub fn rank(self) -> usize {
        match self {
            Kind::E6 => 6,
            Kind::E7 => 7,
            Kind::E8 => 8,
        }
    }

    pub fn root_count(self) -> usize {
        match self {
            Kind::E6 => 72,
            Kind::E7 => 126,
            Kind::E8 => 240,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::E6 => "E6",
            Kind::E7 => "E7",
            Kind::E8 => "E8",
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u64 {
        match self {
            Kind::E6 => 51_840,
            Kind::E7 => 2_903_040,
            Kind::E8 => 696_729_600,
        }
    }

    /// Cartan matrix over the Bourbaki simple roots.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let edges: &[(usize, usize)] = &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
        }
        for &(p, q) in edges {
            if p <= n && q <= n {
                a[p - 1][q - 1] = -1;
                a[q - 1][p - 1] = -1;
            }
        }
        a
    }
}

/// A root system with a fixed, sorted list of roots in simple-root
/// coordinates and constant-time lookup by coordinates.
pub struct RootSystem {
    kind: Kind,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    /// Generates all roots by closing the simple roots under the simple
    /// reflections.
    pub fn new(kind: Kind) -> RootSystem {
        let n = kind.rank();
        let cartan = kind.cartan_matrix();
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            seen.insert(v.clone(), 0);
            queue.push(v);
        }
        while let Some(v) = queue.pop() {
            for i in 0..n {
                // s_i(v) = v - (v | alpha_i) alpha_i.
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * v[j]).sum();
                let mut w = v.clone();
                w[i] -= pairing;
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), 0);
                    queue.push(w);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_keys().collect();
        roots.sort();
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let rs = RootSystem {
            kind,
            cartan,
            roots,
            index,
        };
        assert_eq!(rs.roots.len(), kind.root_count());
        rs
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of the negative of root `i`.
    pub fn negative(&self, i: usize) -> usize {
        let neg: Vec<i64> = self.roots[i].iter().map(|c| -c).collect();
        self.index[&neg]
    }

    /// Index of the sum of roots `i` and `j`, when the sum is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[i]
            .iter()
            .zip(&self.roots[j])
            .map(|(a, b)| a + b)
            .collect();
        self.index.get(&s).copied()
    }

    /// Inner product with all roots normalized to squared length 2.
    pub fn inner(&self, v: &[i64], w: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            for j in 0..n {
                acc += v[i] * self.cartan[i][j] * w[j];
            }
        }
        acc
    }

    /// A root is positive exactly when its coordinates are all nonnegative.
    pub fn is_positive(&self, i: usize) -> bool {
        self.roots[i].iter().all(|&c| c >= 0)
    }

    /// Indices of the positive roots.
    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.is_positive(i)).collect()
    }

    /// Coordinates of root `i` reduced mod 2.
    pub fn root_class(&self, i: usize) -> F2Vector {
        let n = self.rank();
        let mut v = F2Vector::zero(n);
        for (j, &c) in self.roots[i].iter().enumerate() {
            if c.rem_euclid(2) == 1 {
                v = v.with(j, true);
            }
        }
        v
    }

    /// The mod-2 quadratic form `q(x) = (x | x)/2 mod 2` on coordinate
    /// vectors, with coefficients read off the Cartan matrix.
    pub fn mod2_form(&self) -> QuadraticSpace {
        let n = self.rank();
        QuadraticSpace::from_gram(
            n,
            |_| true,
            |i, j| self.cartan[i][j].rem_euclid(2) == 1,
        )
    }

    /// The distinct mod-2 classes of roots, sorted. Each holds exactly one
    /// pair `{a, -a}`.
    pub fn root_classes(&self) -> Vec<F2Vector> {
        let mut classes: Vec<F2Vector> = (0..self.roots.len())
            .filter(|&i| self.is_positive(i))
            .map(|i| self.root_class(i))
            .collect();
        classes.sort();
        classes.dedup();
        classes
    }

    /// Root indices in each mod-2 class.
    pub fn class_fibers(&self) -> HashMap<F2Vector, Vec<usize>> {
        let mut fibers: HashMap<F2Vector, Vec<usize>> = HashMap::new();
        for i in 0..self.roots.len() {
            fibers.entry(self.root_class(i)).or_default().push(i);
        }
        fibers
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::{orthogonal_group_order, witt_index, Arf};

    #[test]
    fn root_counts_and_norms() {
        for kind in Kind::all() {
            let rs = RootSystem::new(kind);
            assert_eq!(rs.roots().len(), kind.root_count());
            assert_eq!(rs.positive_roots().len(), kind.root_count() / 2);
            for i in 0..rs.roots().len() {
                assert_eq!(rs.inner(rs.root(i), rs.root(i)), 2);
                let neg = rs.negative(i);
                assert_ne!(neg, i);
                assert_eq!(rs.negative(neg), i);
                // Exactly one of a root and its negative is positive.
                assert_ne!(rs.is_positive(i), rs.is_positive(neg));
            }
        }
    }

    #[test]
    fn sums_follow_inner_products() {
        // For simply-laced systems, alpha + beta is a root exactly when
        // (alpha | beta) = -1, for beta != +-alpha.
        let rs = RootSystem::new(Kind::E6);
        for i in 0..72 {
            for j in 0..72 {
                if j == i || j == rs.negative(i) {
                    continue;
                }
                let p = rs.inner(rs.root(i), rs.root(j));
                assert_eq!(rs.sum_index(i, j).is_some(), p == -1, "roots {i}, {j}");
            }
        }
    }

    #[test]
    fn mod2_form_values_on_roots() {
        for kind in Kind::all() {
            let rs = RootSystem::new(kind);
            let q = rs.mod2_form();
            for i in 0..rs.roots().len() {
                assert!(q.eval(&rs.root_class(i)), "roots are nonisotropic");
                for j in 0..rs.roots().len() {
                    let b = q.b(&rs.root_class(i), &rs.root_class(j));
                    assert_eq!(b, rs.inner(rs.root(i), rs.root(j)).rem_euclid(2) == 1);
                }
            }
        }
    }

    #[test]
    fn classes_are_plus_minus_pairs() {
        for kind in Kind::all() {
            let rs = RootSystem::new(kind);
            let classes = rs.root_classes();
            assert_eq!(classes.len(), kind.root_count() / 2);
            for (class, fiber) in rs.class_fibers() {
                assert_eq!(fiber.len(), 2, "class {class} fiber");
                assert_eq!(rs.negative(fiber[0]), fiber[1]);
            }
        }
    }

    #[test]
    fn e6_form_is_minus_type() {
        let q = RootSystem::new(Kind::E6).mod2_form();
        assert_eq!(q.arf().unwrap(), Arf::One);
        assert_eq!(witt_index(&q).unwrap(), 2);
        assert_eq!(q.nonisotropic_vectors().len(), 36);
        assert_eq!(orthogonal_group_order(&q).unwrap(), 51_840);
        // All nonisotropic vectors are root classes.
        let classes = RootSystem::new(Kind::E6).root_classes();
        assert_eq!(q.nonisotropic_vectors(), classes);
    }

    #[test]
    fn e8_form_is_plus_type() {
        let rs = RootSystem::new(Kind::E8);
        let q = rs.mod2_form();
        assert_eq!(q.arf().unwrap(), Arf::Zero);
        assert_eq!(witt_index(&q).unwrap(), 4);
        assert_eq!(q.nonisotropic_vectors().len(), 120);
        assert_eq!(orthogonal_group_order(&q).unwrap(), 348_364_800);
        assert_eq!(q.nonisotropic_vectors(), rs.root_classes());
    }

    #[test]
    fn e7_form_has_a_radical_line() {
        let rs = RootSystem::new(Kind::E7);
        let q = rs.mod2_form();
        assert!(q.is_regular());
        assert_eq!(q.arf().unwrap(), Arf::Undefined);
        assert_eq!(witt_index(&q).unwrap(), 3);
        assert_eq!(orthogonal_group_order(&q).unwrap(), 1_451_520);
        let rad = q.radical_b();
        assert_eq!(rad.dim(), 1);
        let a = rad.basis()[0];
        assert!(q.eval(&a));
        // 64 nonisotropic vectors: the 63 root classes plus the radical
        // generator, which is not a root class.
        let noniso = q.nonisotropic_vectors();
        assert_eq!(noniso.len(), 64);
        let classes = rs.root_classes();
        assert_eq!(classes.len(), 63);
        assert!(!classes.contains(&a));
        for c in &classes {
            assert!(noniso.contains(c));
        }
    }

    #[test]
    fn weyl_orders_match_orthogonal_groups() {
        // W(E6) is the full orthogonal group of the mod-2 form; for E7 and
        // E8 the Weyl group is a double cover of it.
        for (kind, factor) in [(Kind::E6, 1), (Kind::E7, 2), (Kind::E8, 2)] {
            let q = RootSystem::new(kind).mod2_form();
            assert_eq!(
                kind.weyl_order(),
                factor * orthogonal_group_order(&q).unwrap()
            );
        }
    }
}
