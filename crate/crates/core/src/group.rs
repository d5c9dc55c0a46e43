//! Finite groups as multiplication tables over element indices.
//!
//! Groups are generated from 2x2 matrices by breadth-first closure; after
//! that the matrices are kept only for display and for traces. Index 0 is
//! always the identity.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Mat2;

/// Default bound on the number of elements produced by [`FiniteGroup::generate`].
pub const DEFAULT_CAP: usize = 10_000;

const ALIASES: [&str; 3] = ["x", "y", "z"];

/// A conjugacy class with, for every member `h`, an element `y` such that
/// `y * rep * y^-1 = h`.
#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub conjugators: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Conjugator carrying the representative to `h`, if `h` is a member.
    pub fn conjugator(&self, h: usize) -> Option<usize> {
        self.members.binary_search(&h).ok().map(|i| self.conjugators[i])
    }
}

#[derive(Debug)]
struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

/// A finite group given by its multiplication table.
#[derive(Debug)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    matrices: Option<Vec<Mat2>>,
    generators: Vec<usize>,
    classes: OnceLock<ClassData>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            n: self.n,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            labels: self.labels.clone(),
            matrices: self.matrices.clone(),
            generators: self.generators.clone(),
            classes: OnceLock::new(),
        }
    }
}

impl FiniteGroup {
    /// Closes `gens` under multiplication.
    ///
    /// Generators must have determinant 1. Fails if more than `cap` elements
    /// are produced.
    pub fn generate(gens: &[Mat2], cap: usize) -> Result<FiniteGroup> {
        for (index, g) in gens.iter().enumerate() {
            if !g.det().is_one() {
                return Err(Error::NotUnimodular { index });
            }
        }
        let order = gens.iter().fold(1u32, |acc, g| acc.lcm(&g.order_lcm()));
        let gens: Vec<Mat2> = gens.iter().map(|g| g.lift_to(order)).collect();

        let mut elems = vec![Mat2::identity().lift_to(order)];
        let mut index: HashMap<Vec<_>, usize> = HashMap::new();
        index.insert(elems[0].key(), 0);
        // right[s][i] = index of elems[i] * gens[s]
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (s, g) in gens.iter().enumerate() {
                let p = &elems[i] * g;
                let key = p.key();
                let j = match index.get(&key) {
                    Some(&j) => j,
                    None => {
                        let j = elems.len();
                        if j >= cap {
                            return Err(Error::NotClosed { cap });
                        }
                        index.insert(key, j);
                        elems.push(p);
                        parent.push((i, s));
                        queue.push_back(j);
                        j
                    }
                };
                let r = &mut right[s];
                if r.len() <= i {
                    r.resize(i + 1, 0);
                }
                r[i] = j as u32;
            }
        }
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            mul[i * n] = i as u32;
            for j in 1..n {
                let (p, s) = parent[j];
                mul[i * n + j] = right[s][mul[i * n + p] as usize];
            }
        }
        let generators: Vec<usize> = gens.iter().map(|g| index[&g.key()]).collect();
        let mut labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        for (k, &g) in generators.iter().enumerate().take(ALIASES.len()) {
            if g != 0 && labels[g].starts_with('g') {
                labels[g] = ALIASES[k].to_string();
            }
        }
        let mut group = Self::assemble(n, mul, labels, generators);
        group.matrices = Some(elems);
        Ok(group)
    }

    /// Builds a group from a row-major table with identity at index 0.
    pub fn from_table(n: usize, mul: Vec<u32>, labels: Vec<String>) -> Result<FiniteGroup> {
        if mul.len() != n * n || labels.len() != n || n == 0 {
            return Err(Error::InvalidConfig("table has the wrong shape".into()));
        }
        for i in 0..n {
            if mul[i * n] as usize != i || mul[i] as usize != i {
                return Err(Error::InvalidConfig("index 0 is not the identity".into()));
            }
        }
        Ok(Self::assemble(n, mul, labels, Vec::new()))
    }

    /// The additive group `Z_n` with element `k` at index `k`.
    pub fn cyclic_table(n: usize) -> FiniteGroup {
        let mul = (0..n * n).map(|t| ((t / n + t % n) % n) as u32).collect();
        let labels = (0..n).map(|k| k.to_string()).collect();
        let mut g = Self::assemble(n, mul, labels, Vec::new());
        if n > 1 {
            g.generators = vec![1];
        }
        g
    }

    fn assemble(n: usize, mul: Vec<u32>, labels: Vec<String>, generators: Vec<usize>) -> FiniteGroup {
        let mut inv = vec![0u32; n];
        for i in 0..n {
            inv[i] = (0..n).find(|&j| mul[i * n + j] == 0).expect("missing inverse") as u32;
        }
        FiniteGroup { n, mul, inv, labels, matrices: None, generators, classes: OnceLock::new() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `y * a * y^-1`.
    #[inline]
    pub fn conj(&self, y: usize, a: usize) -> usize {
        self.mul(self.mul(y, a), self.inv(y))
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self, a: usize) -> Option<&Mat2> {
        self.matrices.as_ref().map(|m| &m[a])
    }

    pub fn has_matrices(&self) -> bool {
        self.matrices.is_some()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Index of the element with the given label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.n).any(|a| self.element_order(a) == self.n)
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let mut class_of = vec![usize::MAX; self.n];
            let mut classes = Vec::new();
            for rep in 0..self.n {
                if class_of[rep] != usize::MAX {
                    continue;
                }
                let c = classes.len();
                let mut found: Vec<(usize, usize)> = Vec::new();
                for y in 0..self.n {
                    let h = self.conj(y, rep);
                    if class_of[h] == usize::MAX {
                        class_of[h] = c;
                        found.push((h, y));
                    }
                }
                found.sort_unstable();
                classes.push(ConjugacyClass {
                    representative: rep,
                    members: found.iter().map(|p| p.0).collect(),
                    conjugators: found.iter().map(|p| p.1).collect(),
                });
            }
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy classes ordered by representative; the representative is
    /// the minimal index of its class.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_data().class_of[a]
    }

    /// Class index of `a^k`, for power maps.
    pub fn class_of_power(&self, a: usize, k: i64) -> usize {
        self.class_of(self.pow(a, k))
    }

    pub fn center(&self) -> Subgroup {
        Subgroup::new_unchecked(
            (0..self.n).filter(|&a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a))).collect(),
        )
    }

    /// Centralizer of a single element.
    pub fn element_centralizer(&self, a: usize) -> Subgroup {
        Subgroup::new_unchecked((0..self.n).filter(|&x| self.mul(a, x) == self.mul(x, a)).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::new_unchecked(vec![0])
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::new_unchecked((0..self.n).collect())
    }

    /// The subgroup generated by the given elements.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut members = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    members.push(b);
                    queue.push_back(b);
                }
            }
        }
        members.sort_unstable();
        Subgroup::new_unchecked(members)
    }

    /// Wraps `indices` as a subgroup after checking closure.
    pub fn subgroup_from(&self, indices: &[usize]) -> Result<Subgroup> {
        let mut members = indices.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) || members.iter().any(|&a| a >= self.n) {
            return Err(Error::InvalidConfig("subset must contain the identity".into()));
        }
        let sub = Subgroup::new_unchecked(members);
        for &a in sub.members() {
            if !sub.contains(self.inv(a)) || sub.members().iter().any(|&b| !sub.contains(self.mul(a, b))) {
                return Err(Error::InvalidConfig("subset is not closed under multiplication".into()));
            }
        }
        Ok(sub)
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        s.members().iter().all(|&a| (0..self.n).all(|y| s.contains(self.conj(y, a))))
    }

    /// Exhaustive associativity check; returns a violating triple.
    pub fn check_associativity(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            for b in 0..self.n {
                let ab = self.mul(a, b);
                for c in 0..self.n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Generators chosen greedily by decreasing element order.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.n).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for a in by_order {
            if current.order() == self.n {
                break;
            }
            if !current.contains(a) {
                gens.push(a);
                current = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<_> = self
            .conjugacy_classes()
            .iter()
            .map(|c| {
                serde_json::json!({
                    "representative": self.label(c.representative),
                    "size": c.size(),
                    "members": c.members,
                })
            })
            .collect();
        serde_json::json!({
            "order": self.n,
            "mul": self.mul,
            "labels": self.labels,
            "classes": classes,
        })
    }
}

/// A subgroup, stored as the sorted list of its parent indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    fn new_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// Local index of a parent element.
    pub fn position(&self, a: usize) -> Option<usize> {
        self.members.binary_search(&a).ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }

    /// The subgroup as a group in its own right; local index `i` is parent
    /// element `members()[i]`.
    pub fn as_group(&self, parent: &FiniteGroup) -> FiniteGroup {
        let n = self.order();
        let mut mul = vec![0u32; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                mul[i * n + j] = self.position(parent.mul(a, b)).expect("subgroup not closed") as u32;
            }
        }
        let labels = self.members.iter().map(|&a| parent.label(a).to_string()).collect();
        let mut g = FiniteGroup::assemble(n, mul, labels, Vec::new());
        if let Some(m) = &parent.matrices {
            g.matrices = Some(self.members.iter().map(|&a| m[a].clone()).collect());
        }
        g.generators = g.small_generating_set();
        g
    }
}

/// The projection `G -> G/N` together with a section.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    kernel: Subgroup,
    target: FiniteGroup,
    projection: Vec<usize>,
    section: Vec<usize>,
}

impl QuotientMap {
    /// Quotient by a normal subgroup. Cosets are numbered by their minimal
    /// element, which also serves as the section.
    pub fn new(g: &FiniteGroup, kernel: &Subgroup) -> Result<QuotientMap> {
        if !g.is_normal(kernel) {
            return Err(Error::NotNormal(format!(
                "subgroup of order {} is not closed under conjugation",
                kernel.order()
            )));
        }
        let n = g.order();
        let mut projection = vec![usize::MAX; n];
        let mut section = Vec::new();
        for a in 0..n {
            if projection[a] == usize::MAX {
                let c = section.len();
                section.push(a);
                for &k in kernel.members() {
                    projection[g.mul(a, k)] = c;
                }
            }
        }
        let m = section.len();
        let mut mul = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                mul[i * m + j] = projection[g.mul(section[i], section[j])] as u32;
            }
        }
        let labels = section.iter().map(|&a| g.label(a).to_string()).collect();
        let mut target = FiniteGroup::assemble(m, mul, labels, Vec::new());
        let mut gens: Vec<usize> = g.generators().iter().map(|&a| projection[a]).filter(|&c| c != 0).collect();
        gens.dedup();
        target.generators = gens;
        Ok(QuotientMap { kernel: kernel.clone(), target, projection, section })
    }

    /// Replaces the section; it must pick one element of each coset and send
    /// the identity coset to the identity.
    pub fn with_section(mut self, section: Vec<usize>) -> Result<QuotientMap> {
        if section.len() != self.section.len()
            || section[0] != 0
            || section.iter().enumerate().any(|(c, &a)| self.projection.get(a) != Some(&c))
        {
            return Err(Error::InvalidConfig("not a section of the quotient map".into()));
        }
        self.section = section;
        Ok(self)
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    #[inline]
    pub fn project(&self, a: usize) -> usize {
        self.projection[a]
    }

    #[inline]
    pub fn section(&self, c: usize) -> usize {
        self.section[c]
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    /// Right conjugation `gbar^x = xbar^-1 gbar xbar`.
    #[inline]
    pub fn conj_action(&self, gbar: usize, x: usize) -> usize {
        let xb = self.projection[x];
        self.target.mul(self.target.mul(self.target.inv(xb), gbar), xb)
    }

    /// Stabilizer `{x in G : gbar^x = gbar}`.
    pub fn centralizer(&self, gbar: usize) -> Subgroup {
        Subgroup::new_unchecked(
            (0..self.projection.len()).filter(|&x| self.conj_action(gbar, x) == gbar).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyclotomic;

    fn binary_dihedral(n: u32) -> FiniteGroup {
        let z = Cyclotomic::root_of_unity(2 * n, 1);
        let a = Mat2::diag(z.clone(), z.conj());
        let b = Mat2::new(Cyclotomic::zero(), Cyclotomic::one(), Cyclotomic::from_integer(-1), Cyclotomic::zero());
        FiniteGroup::generate(&[a, b], DEFAULT_CAP).unwrap()
    }

    #[test]
    fn minus_identity_generates_order_two() {
        let g = FiniteGroup::generate(&[Mat2::scalar(Cyclotomic::from_integer(-1))], 10).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.conjugacy_classes().len(), 2);
    }

    #[test]
    fn binary_dihedral_three_has_order_twelve() {
        let g = binary_dihedral(3);
        assert_eq!(g.order(), 12);
        assert!(g.check_associativity().is_none());
        assert_eq!(g.center().order(), 2);
        assert_eq!(g.label(g.generators()[0]), "x");
    }

    #[test]
    fn non_unimodular_generator_rejected() {
        let m = Mat2::diag(Cyclotomic::from_integer(2), Cyclotomic::one());
        assert_eq!(FiniteGroup::generate(&[m], 10).unwrap_err(), Error::NotUnimodular { index: 0 });
    }

    #[test]
    fn closure_cap_enforced() {
        let z = Cyclotomic::root_of_unity(7, 1);
        let m = Mat2::diag(z.clone(), z.conj());
        assert_eq!(FiniteGroup::generate(&[m], 5).unwrap_err(), Error::NotClosed { cap: 5 });
    }

    #[test]
    fn class_conjugators_verify() {
        let g = binary_dihedral(4);
        let total: usize = g.conjugacy_classes().iter().map(ConjugacyClass::size).sum();
        assert_eq!(total, g.order());
        for c in g.conjugacy_classes() {
            assert_eq!(g.order() % c.size(), 0);
            assert_eq!(c.representative, c.members[0]);
            assert_eq!(c.conjugator(c.representative), Some(0));
            for (&h, &y) in c.members.iter().zip(&c.conjugators) {
                assert_eq!(g.conj(y, c.representative), h);
            }
        }
    }

    #[test]
    fn quotient_by_center() {
        let g = binary_dihedral(3);
        let q = QuotientMap::new(&g, &g.center()).unwrap();
        assert_eq!(q.target().order(), 6);
        let mut fibers = [0; 6];
        for a in 0..12 {
            fibers[q.project(a)] += 1;
        }
        assert!(fibers.iter().all(|&f| f == 2));
        for c in 0..6 {
            assert_eq!(q.project(q.section(c)), c);
        }
        assert_eq!(q.section(0), 0);
        // the quotient of BD_3 by its center is dihedral of order 6
        assert_eq!(q.target().conjugacy_classes().len(), 3);
        assert_eq!(q.centralizer(0).order(), 12);
    }

    #[test]
    fn non_normal_quotient_rejected() {
        let g = binary_dihedral(3);
        let y = g.generators()[1];
        let s = g.subgroup_generated(&[y]);
        assert!(!g.is_normal(&s));
        assert!(matches!(QuotientMap::new(&g, &s), Err(Error::NotNormal(_))));
    }

    #[test]
    fn conj_action_fixes_centralizer() {
        let g = binary_dihedral(4);
        let q = QuotientMap::new(&g, &g.center()).unwrap();
        for gbar in 0..q.target().order() {
            for &x in q.centralizer(gbar).members() {
                assert_eq!(q.conj_action(gbar, x), gbar);
            }
            assert!(g.center().is_subset_of(&q.centralizer(gbar)));
        }
    }

    #[test]
    fn subgroup_as_group_round_trip() {
        let g = binary_dihedral(3);
        let s = g.subgroup_generated(&[g.generators()[0]]);
        assert_eq!(s.order(), 6);
        let h = s.as_group(&g);
        assert!(h.is_cyclic());
        assert!(h.check_associativity().is_none());
        assert!(g.subgroup_from(&[0, g.generators()[1]]).is_err());
    }
}
