//! The quasi-Hopf algebra `D^w(G, N)` on the basis `e(gbar) ⋈ x`, with
//! `gbar` in `G/N` and `x` in `G`.
//!
//! Structure maps, with right conjugation `gbar^x = xbar^-1 gbar xbar`:
//!
//! * product `(e(g)⋈x)(e(h)⋈y) = δ(g^x, h) θ_g(x, y) e(g)⋈xy`
//! * coproduct `Δ(e(g)⋈x) = Σ_{hk=g} γ_x(h, k) e(h)⋈x ⊗ e(k)⋈x`
//! * associator `Φ = Σ w(g, h, k)^-1 e(g)⋈1 ⊗ e(h)⋈1 ⊗ e(k)⋈1`
//! * counit `ε(e(g)⋈x) = δ(g, 1)`
//! * antipode `S(e(g)⋈x) = θ_{g^-1}(x, x^-1)^-1 γ_x(g, g^-1)^-1 e((g^x)^-1)⋈x^-1`
//! * `α = 1`, `β = Σ w(g, g^-1, g) e(g)⋈1`
//!
//! `θ` and `γ` are evaluated on the images of `x, y` in `G/N`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cocycle::{verify_3cocycle, Cochains, Cocycle3};
use crate::cyclotomic::{Cyclotomic, Root};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientMap, Subgroup};
use crate::linalg::{SparseVec, Subspace};
use crate::par::Exec;

/// Algebras of at most this dimension are checked on every basis tuple.
pub const FULL_CHECK_LIMIT: usize = 64;
/// Default number of sampled instances per axiom.
pub const DEFAULT_SAMPLES: usize = 10_000;
/// Largest group order for which the quotient by the normal image is formed.
pub const QUOTIENT_GROUP_LIMIT: usize = 48;

const CHUNK: usize = 256;
const SAME: &str = "operands belong to this algebra";

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

fn next_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

fn times(c: &Cyclotomic, r: Root) -> Cyclotomic {
    if r.is_one() {
        c.clone()
    } else {
        c.mul(&r.to_cyclotomic())
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Cyclotomic>, key: K, c: Cyclotomic) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// An element of a specific algebra, as a sparse combination of basis
/// indices `gbar * |G| + x`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    parent: u64,
    terms: BTreeMap<usize, Cyclotomic>,
}

impl AlgebraElement {
    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn terms(&self) -> &BTreeMap<usize, Cyclotomic> {
        &self.terms
    }

    pub fn coefficient(&self, b: usize) -> Cyclotomic {
        self.terms.get(&b).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_parent(&self, other: &AlgebraElement) -> Result<()> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.same_parent(other)?;
        let mut out = self.clone();
        for (&b, c) in &other.terms {
            accumulate(&mut out.terms, b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&Cyclotomic::from_integer(-1)))
    }

    pub fn scale(&self, s: &Cyclotomic) -> AlgebraElement {
        let mut out = AlgebraElement { parent: self.parent, terms: BTreeMap::new() };
        for (&b, c) in &self.terms {
            accumulate(&mut out.terms, b, c.mul(s));
        }
        out
    }

    pub fn to_sparse(&self) -> SparseVec {
        self.terms.clone()
    }
}

type KeyIndex<const K: usize> = HashMap<[usize; K], Vec<[usize; K]>>;

/// An element of the `K`-fold tensor power of an algebra.
#[derive(Clone, Debug)]
pub struct Tensor<const K: usize> {
    parent: u64,
    terms: BTreeMap<[usize; K], Cyclotomic>,
    // keys grouped by their quotient parts, and by the quotient parts a
    // right factor must have; built on first use
    by_source: OnceLock<KeyIndex<K>>,
    by_target: OnceLock<KeyIndex<K>>,
}

impl<const K: usize> PartialEq for Tensor<K> {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.terms == other.terms
    }
}

impl<const K: usize> Tensor<K> {
    fn new(parent: u64, terms: BTreeMap<[usize; K], Cyclotomic>) -> Self {
        Tensor { parent, terms, by_source: OnceLock::new(), by_target: OnceLock::new() }
    }

    pub fn terms(&self) -> &BTreeMap<[usize; K], Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &[usize; K]) -> Cyclotomic {
        self.terms.get(key).cloned().unwrap_or_else(Cyclotomic::zero)
    }
}

/// How many instances an axiom sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every basis element, pair, triple and every quadruple of `G/N`.
    Full,
    /// A fixed number of instances drawn from a seeded generator.
    Sampled { instances: usize, seed: u64 },
}

impl VerifyMode {
    /// Full for algebras of dimension at most [`FULL_CHECK_LIMIT`], sampled otherwise.
    pub fn auto(dimension: usize, instances: usize, seed: u64) -> VerifyMode {
        if dimension <= FULL_CHECK_LIMIT {
            VerifyMode::Full
        } else {
            VerifyMode::Sampled { instances, seed }
        }
    }

    fn name(&self) -> &'static str {
        match self {
            VerifyMode::Full => "full",
            VerifyMode::Sampled { .. } => "sampled",
        }
    }
}

/// Outcome of one axiom.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub instances: usize,
    /// Description of the first failing instance.
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiHopfReport {
    pub dimension: usize,
    pub mode: String,
    pub seed: Option<u64>,
    pub checks: Vec<AxiomCheck>,
}

impl QuasiHopfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }
}

/// Result of testing that the image of `D^w(G, N)` in `D^w'(G)` is closed
/// under both adjoint actions.
#[derive(Clone, Debug, Serialize)]
pub struct NormalityReport {
    pub central: bool,
    pub image_dimension: usize,
    pub mode: String,
    pub pairs_checked: usize,
    pub witness: Option<String>,
}

impl NormalityReport {
    pub fn normal(&self) -> bool {
        self.witness.is_none()
    }
}

/// The quotient of `D^w'(G)` by the left ideal generated by the augmentation
/// part of the normal image.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub dimension: usize,
    pub ideal_dimension: usize,
    pub codimension: usize,
    pub normal_order: usize,
    /// The images of `e(m)⋈1`, `m ∈ N`, are linearly independent.
    pub idempotents_independent: bool,
    /// `1 - Σ_{m ∈ N} e(m)⋈1` lies in the ideal.
    pub unit_decomposes: bool,
}

impl QuotientReport {
    pub fn is_function_algebra_on_normal(&self) -> bool {
        self.codimension == self.normal_order && self.idempotents_independent && self.unit_decomposes
    }
}

/// The extension 2-cocycle `σ(a, b) = s(a) s(b) s(ab)^-1` of a central
/// extension, tabulated on `G/N × G/N` as elements of `G`.
#[derive(Clone, Debug)]
pub struct ExtensionCocycle {
    n: usize,
    values: Vec<usize>,
}

impl ExtensionCocycle {
    pub fn value(&self, a: usize, b: usize) -> usize {
        self.values[a * self.n + b]
    }

    /// Whether the chosen section is a homomorphism.
    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// The algebra `D^w(G, N)`.
#[derive(Clone, Debug)]
pub struct Gtqd {
    id: u64,
    group: Arc<FiniteGroup>,
    quotient: QuotientMap,
    omega: Cocycle3,
    cochains: Cochains,
    conj: Vec<u32>,
    associator: OnceLock<Tensor<3>>,
}

impl Gtqd {
    pub fn new(group: Arc<FiniteGroup>, normal: &Subgroup, omega: Cocycle3) -> Result<Gtqd> {
        let q = QuotientMap::new(&group, normal)?;
        Gtqd::from_quotient(group, q, omega)
    }

    /// Builds the algebra from an explicit quotient map, which fixes the
    /// section used by [`Gtqd::phi_map`] and [`Gtqd::extension_cocycle`].
    pub fn from_quotient(group: Arc<FiniteGroup>, quotient: QuotientMap, omega: Cocycle3) -> Result<Gtqd> {
        let k = quotient.target();
        if omega.group_order() != k.order() {
            return Err(Error::InvalidConfig(format!(
                "cocycle is defined on a group of order {}, quotient has order {}",
                omega.group_order(),
                k.order()
            )));
        }
        if let Some(v) = verify_3cocycle(&omega, k, 0) {
            return Err(Error::InvalidConfig(format!(
                "not a normalized 3-cocycle: {} fails at {:?}",
                if v.normalization { "normalization" } else { "the cocycle identity" },
                v.elements
            )));
        }
        let cochains = Cochains::new(k, &omega);
        let n = group.order();
        let mut conj = vec![0u32; k.order() * n];
        for g in 0..k.order() {
            for x in 0..n {
                conj[g * n + x] = quotient.conj_action(g, x) as u32;
            }
        }
        Ok(Gtqd { id: next_id(), group, quotient, omega, cochains, conj, associator: OnceLock::new() })
    }

    /// A copy whose `θ` has one value replaced. Used to confirm that the
    /// axiom checks detect corrupted structure constants.
    pub fn with_theta_perturbed(&self, gbar: usize, xbar: usize, ybar: usize, value: Root) -> Gtqd {
        let mut out = self.clone();
        out.id = next_id();
        out.cochains = self.cochains.with_theta(gbar, xbar, ybar, value);
        out.associator = OnceLock::new();
        out
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn quotient(&self) -> &QuotientMap {
        &self.quotient
    }

    pub fn normal(&self) -> &Subgroup {
        self.quotient.kernel()
    }

    pub fn omega(&self) -> &Cocycle3 {
        &self.omega
    }

    pub fn cochains(&self) -> &Cochains {
        &self.cochains
    }

    pub fn group_order(&self) -> usize {
        self.group.order()
    }

    pub fn quotient_order(&self) -> usize {
        self.quotient.target().order()
    }

    pub fn dim(&self) -> usize {
        self.quotient_order() * self.group_order()
    }

    #[inline]
    pub fn basis_index(&self, gbar: usize, x: usize) -> usize {
        gbar * self.group_order() + x
    }

    #[inline]
    pub fn split(&self, b: usize) -> (usize, usize) {
        (b / self.group_order(), b % self.group_order())
    }

    pub fn basis_label(&self, b: usize) -> String {
        let (g, x) = self.split(b);
        format!("e({})⋈{}", self.quotient.target().label(g), self.group.label(x))
    }

    /// `gbar^x`.
    #[inline]
    pub fn conj_action(&self, gbar: usize, x: usize) -> usize {
        self.conj[gbar * self.group_order() + x] as usize
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { parent: self.id, terms: BTreeMap::new() }
    }

    pub fn basis_element(&self, b: usize) -> AlgebraElement {
        self.element([(b, Cyclotomic::one())])
    }

    pub fn element(&self, terms: impl IntoIterator<Item = (usize, Cyclotomic)>) -> AlgebraElement {
        let mut out = self.zero();
        for (b, c) in terms {
            assert!(b < self.dim(), "basis index {b} out of range");
            accumulate(&mut out.terms, b, c);
        }
        out
    }

    pub fn unit(&self) -> AlgebraElement {
        self.element((0..self.quotient_order()).map(|g| (self.basis_index(g, 0), Cyclotomic::one())))
    }

    pub fn alpha(&self) -> AlgebraElement {
        self.unit()
    }

    pub fn beta(&self) -> AlgebraElement {
        let k = self.quotient.target();
        self.element((0..k.order()).map(|g| {
            (self.basis_index(g, 0), self.omega.value(g, k.inv(g), g).to_cyclotomic())
        }))
    }

    fn own(&self, a: &AlgebraElement) -> Result<()> {
        if a.parent == self.id {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    fn own_tensor<const K: usize>(&self, t: &Tensor<K>) -> Result<()> {
        if t.parent == self.id {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Product of two basis elements: a phase and a basis index, or zero.
    #[inline]
    pub fn mul_basis(&self, b1: usize, b2: usize) -> Option<(Root, usize)> {
        let (g, x) = self.split(b1);
        let (h, y) = self.split(b2);
        if self.conj_action(g, x) != h {
            return None;
        }
        let q = &self.quotient;
        let phase = self.cochains.theta(g, q.project(x), q.project(y));
        Some((phase, self.basis_index(g, self.group.mul(x, y))))
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.own(a)?;
        self.own(b)?;
        let n = self.group_order();
        let mut out = self.zero();
        for (&b1, c1) in &a.terms {
            let (g, x) = self.split(b1);
            let h = self.conj_action(g, x);
            for (&b2, c2) in b.terms.range(h * n..(h + 1) * n) {
                if let Some((phase, b3)) = self.mul_basis(b1, b2) {
                    accumulate(&mut out.terms, b3, times(&c1.mul(c2), phase));
                }
            }
        }
        Ok(out)
    }

    /// `Δ` of a basis element as `(phase, left, right)` triples.
    pub fn coproduct_basis(&self, b: usize) -> Vec<(Root, usize, usize)> {
        let (g, x) = self.split(b);
        let k = self.quotient.target();
        let xb = self.quotient.project(x);
        (0..k.order())
            .map(|h| {
                let kk = k.mul(k.inv(h), g);
                (self.cochains.gamma(xb, h, kk), self.basis_index(h, x), self.basis_index(kk, x))
            })
            .collect()
    }

    pub fn coproduct(&self, a: &AlgebraElement) -> Result<Tensor<2>> {
        self.own(a)?;
        let mut out = Tensor::new(self.id, BTreeMap::new());
        for (&b, c) in &a.terms {
            for (phase, l, r) in self.coproduct_basis(b) {
                accumulate(&mut out.terms, [l, r], times(c, phase));
            }
        }
        Ok(out)
    }

    /// `Δ ⊗ id`.
    pub fn coproduct_left(&self, t: &Tensor<2>) -> Result<Tensor<3>> {
        self.own_tensor(t)?;
        let mut out = Tensor::new(self.id, BTreeMap::new());
        for (&[a, b], c) in &t.terms {
            for (phase, l, r) in self.coproduct_basis(a) {
                accumulate(&mut out.terms, [l, r, b], times(c, phase));
            }
        }
        Ok(out)
    }

    /// `id ⊗ Δ`.
    pub fn coproduct_right(&self, t: &Tensor<2>) -> Result<Tensor<3>> {
        self.own_tensor(t)?;
        let mut out = Tensor::new(self.id, BTreeMap::new());
        for (&[a, b], c) in &t.terms {
            for (phase, l, r) in self.coproduct_basis(b) {
                accumulate(&mut out.terms, [a, l, r], times(c, phase));
            }
        }
        Ok(out)
    }

    fn sources<const K: usize>(&self, key: &[usize; K]) -> [usize; K] {
        key.map(|b| self.split(b).0)
    }

    fn targets<const K: usize>(&self, key: &[usize; K]) -> [usize; K] {
        key.map(|b| {
            let (g, x) = self.split(b);
            self.conj_action(g, x)
        })
    }

    fn index_by<'t, const K: usize>(
        &self,
        cell: &'t OnceLock<KeyIndex<K>>,
        t: &Tensor<K>,
        f: impl Fn(&[usize; K]) -> [usize; K],
    ) -> &'t KeyIndex<K> {
        cell.get_or_init(|| {
            let mut index: KeyIndex<K> = HashMap::new();
            for key in t.terms.keys() {
                index.entry(f(key)).or_default().push(*key);
            }
            index
        })
    }

    /// Componentwise product in the tensor power.
    pub fn multiply_tensor<const K: usize>(&self, a: &Tensor<K>, b: &Tensor<K>) -> Result<Tensor<K>> {
        self.own_tensor(a)?;
        self.own_tensor(b)?;
        let mut out = Tensor::new(self.id, BTreeMap::new());
        let mut push = |ka: &[usize; K], kb: &[usize; K]| {
            let mut phase = Root::ONE;
            let mut key = [0usize; K];
            for i in 0..K {
                let (p, k) = self.mul_basis(ka[i], kb[i]).expect("matched factors compose");
                phase = phase * p;
                key[i] = k;
            }
            accumulate(&mut out.terms, key, times(&a.terms[ka].mul(&b.terms[kb]), phase));
        };
        // walk the smaller factor and look up partners in the other
        if a.terms.len() <= b.terms.len() {
            let index = self.index_by(&b.by_source, b, |k| self.sources(k));
            for ka in a.terms.keys() {
                for kb in index.get(&self.targets(ka)).into_iter().flatten() {
                    push(ka, kb);
                }
            }
        } else {
            let index = self.index_by(&a.by_target, a, |k| self.targets(k));
            for kb in b.terms.keys() {
                for ka in index.get(&self.sources(kb)).into_iter().flatten() {
                    push(ka, kb);
                }
            }
        }
        Ok(out)
    }

    pub fn tensor_of<const K: usize>(&self, factors: [&AlgebraElement; K]) -> Result<Tensor<K>> {
        for f in factors {
            self.own(f)?;
        }
        let mut partial: Vec<([usize; K], Cyclotomic)> = vec![([0; K], Cyclotomic::one())];
        for (i, f) in factors.iter().enumerate() {
            let mut next = Vec::new();
            for (key, c) in &partial {
                for (&b, d) in &f.terms {
                    let mut k = *key;
                    k[i] = b;
                    next.push((k, c.mul(d)));
                }
            }
            partial = next;
        }
        let mut terms = BTreeMap::new();
        for (k, c) in partial {
            accumulate(&mut terms, k, c);
        }
        Ok(Tensor::new(self.id, terms))
    }

    /// Coefficient of `e(g)⋈1 ⊗ e(h)⋈1 ⊗ e(k)⋈1` in `Φ`.
    pub fn associator_coefficient(&self, g: usize, h: usize, k: usize) -> Root {
        self.omega.value(g, h, k).inv()
    }

    pub fn associator(&self) -> &Tensor<3> {
        self.associator.get_or_init(|| {
            let n = self.quotient_order();
            let mut terms = BTreeMap::new();
            for g in 0..n {
                for h in 0..n {
                    for k in 0..n {
                        let key = [self.basis_index(g, 0), self.basis_index(h, 0), self.basis_index(k, 0)];
                        terms.insert(key, self.associator_coefficient(g, h, k).to_cyclotomic());
                    }
                }
            }
            Tensor::new(self.id, terms)
        })
    }

    pub fn associator_inverse(&self) -> Tensor<3> {
        let n = self.quotient_order();
        let mut terms = BTreeMap::new();
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let key = [self.basis_index(g, 0), self.basis_index(h, 0), self.basis_index(k, 0)];
                    terms.insert(key, self.omega.value(g, h, k).to_cyclotomic());
                }
            }
        }
        Tensor::new(self.id, terms)
    }

    pub fn counit_basis(&self, b: usize) -> bool {
        self.split(b).0 == 0
    }

    pub fn counit(&self, a: &AlgebraElement) -> Result<Cyclotomic> {
        self.own(a)?;
        let mut s = Cyclotomic::zero();
        for (&b, c) in &a.terms {
            if self.counit_basis(b) {
                s = s.add(c);
            }
        }
        Ok(s)
    }

    pub fn antipode_basis(&self, b: usize) -> (Root, usize) {
        let (g, x) = self.split(b);
        let k = self.quotient.target();
        let xb = self.quotient.project(x);
        let ginv = k.inv(g);
        let phase = self.cochains.theta(ginv, xb, k.inv(xb)).inv() * self.cochains.gamma(xb, g, ginv).inv();
        let target = k.inv(self.conj_action(g, x));
        (phase, self.basis_index(target, self.group.inv(x)))
    }

    pub fn antipode(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.own(a)?;
        let mut out = self.zero();
        for (&b, c) in &a.terms {
            let (phase, t) = self.antipode_basis(b);
            accumulate(&mut out.terms, t, times(c, phase));
        }
        Ok(out)
    }

    /// `D^w'(G)`: the same group with trivial normal subgroup and the
    /// inflated cocycle.
    pub fn inflated(&self) -> Result<Gtqd> {
        let w = self.omega.inflate(&self.quotient);
        Gtqd::new(self.group.clone(), &self.group.trivial_subgroup(), w)
    }

    /// `D^w(G/N)`.
    pub fn quotient_double(&self) -> Result<Gtqd> {
        let k = Arc::new(self.quotient.target().clone());
        Gtqd::new(k.clone(), &k.trivial_subgroup(), self.omega.clone())
    }

    fn check_inflated(&self, inflated: &Gtqd) -> Result<()> {
        if inflated.group_order() != self.group_order() || inflated.quotient_order() != self.group_order() {
            return Err(Error::InvalidConfig("target is not the inflated double of this algebra".into()));
        }
        Ok(())
    }

    /// `φ(e(gbar)⋈x) = Σ_{n ∈ N} e(s(gbar) n)⋈x`, into `D^w'(G)`.
    pub fn phi_map(&self, inflated: &Gtqd, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.own(a)?;
        self.check_inflated(inflated)?;
        let mut out = inflated.zero();
        for (&b, c) in &a.terms {
            let (g, x) = self.split(b);
            let s = self.quotient.section(g);
            for &m in self.normal().members() {
                let gm = inflated.quotient.project(self.group.mul(s, m));
                accumulate(&mut out.terms, inflated.basis_index(gm, x), c.clone());
            }
        }
        Ok(out)
    }

    /// `ψ(e(g)⋈x) = e(gbar)⋈xbar`, from `D^w'(G)` into `D^w(G/N)`.
    pub fn psi_map(&self, inflated: &Gtqd, quotient_double: &Gtqd, a: &AlgebraElement) -> Result<AlgebraElement> {
        inflated.own(a)?;
        self.check_inflated(inflated)?;
        if quotient_double.group_order() != self.quotient_order() || quotient_double.quotient_order() != self.quotient_order() {
            return Err(Error::InvalidConfig("target is not the double of the quotient group".into()));
        }
        let mut out = quotient_double.zero();
        for (&b, c) in &a.terms {
            let (g, x) = inflated.split(b);
            let gb = self.quotient.project(inflated.quotient.section(g));
            let xb = self.quotient.project(x);
            let target = quotient_double.basis_index(quotient_double.quotient.project(gb), xb);
            accumulate(&mut out.terms, target, c.clone());
        }
        Ok(out)
    }

    /// Runs every quasi-Hopf axiom on the structure maps above.
    pub fn verify_quasihopf(&self, mode: VerifyMode, exec: Exec) -> Result<QuasiHopfReport> {
        let dim = self.dim();
        if mode == VerifyMode::Full && dim > FULL_CHECK_LIMIT {
            return Err(Error::InvalidConfig(format!(
                "full verification is limited to dimension {FULL_CHECK_LIMIT}, got {dim}"
            )));
        }
        let samples = Samples::new(self, mode);
        let mut checks = Vec::new();
        let mut push = |axiom: &str, instances: usize, witness: Option<String>| {
            checks.push(AxiomCheck { axiom: axiom.to_string(), instances, witness });
        };

        let w = first_failure(exec, &samples.triples, |&[a, b, c]| {
            let (x, y, z) = (self.basis_element(a), self.basis_element(b), self.basis_element(c));
            let l = self.multiply(&self.multiply(&x, &y).expect(SAME), &z).expect(SAME);
            let r = self.multiply(&x, &self.multiply(&y, &z).expect(SAME)).expect(SAME);
            (l != r).then(|| format!("(ab)c != a(bc) for a={}, b={}, c={}", self.basis_label(a), self.basis_label(b), self.basis_label(c)))
        });
        push("associativity", samples.triples.len(), w);

        let unit = self.unit();
        let w = first_failure(exec, &samples.singles, |&a| {
            let x = self.basis_element(a);
            let ok = self.multiply(&unit, &x).expect(SAME) == x && self.multiply(&x, &unit).expect(SAME) == x;
            (!ok).then(|| format!("1a != a or a1 != a for a={}", self.basis_label(a)))
        });
        push("unit", samples.singles.len(), w);

        let w = first_failure(exec, &samples.pairs, |&[a, b]| {
            let (x, y) = (self.basis_element(a), self.basis_element(b));
            let l = self.coproduct(&self.multiply(&x, &y).expect(SAME)).expect(SAME);
            let r = self.multiply_tensor(&self.coproduct(&x).expect(SAME), &self.coproduct(&y).expect(SAME)).expect(SAME);
            (l != r).then(|| format!("Δ(ab) != Δ(a)Δ(b) for a={}, b={}", self.basis_label(a), self.basis_label(b)))
        });
        push("coproduct is multiplicative", samples.pairs.len(), w);

        let phi = self.associator();
        let w = first_failure(exec, &samples.singles, |&a| {
            let d = self.coproduct(&self.basis_element(a)).expect(SAME);
            let l = self.multiply_tensor(phi, &self.coproduct_left(&d).expect(SAME)).expect(SAME);
            let r = self.multiply_tensor(&self.coproduct_right(&d).expect(SAME), phi).expect(SAME);
            (l != r).then(|| format!("Φ (Δ⊗id)Δ(a) != (id⊗Δ)Δ(a) Φ for a={}", self.basis_label(a)))
        });
        push("quasi-coassociativity", samples.singles.len(), w);

        let w = first_failure(exec, &samples.quadruples, |&q| self.pentagon_at(q));
        push("pentagon", samples.quadruples.len(), w);

        let mut w = self.counit_associator_failure();
        if w.is_none() {
            w = first_failure(exec, &samples.singles, |&a| self.counit_failure(a));
        }
        if w.is_none() {
            w = first_failure(exec, &samples.pairs, |&[a, b]| {
                let (x, y) = (self.basis_element(a), self.basis_element(b));
                let l = self.counit(&self.multiply(&x, &y).expect(SAME)).expect(SAME);
                let r = self.counit(&x).expect(SAME).mul(&self.counit(&y).expect(SAME));
                (l != r).then(|| format!("ε(ab) != ε(a)ε(b) for a={}, b={}", self.basis_label(a), self.basis_label(b)))
            });
        }
        push("counit", samples.singles.len() + samples.pairs.len() + 1, w);

        let mut w = self.antipode_associator_failure();
        if w.is_none() {
            w = first_failure(exec, &samples.singles, |&a| self.antipode_failure(a));
        }
        push("antipode", samples.singles.len() + 2, w);

        let w = first_failure(exec, &samples.pairs, |&[a, b]| {
            let (x, y) = (self.basis_element(a), self.basis_element(b));
            let l = self.antipode(&self.multiply(&x, &y).expect(SAME)).expect(SAME);
            let r = self.multiply(&self.antipode(&y).expect(SAME), &self.antipode(&x).expect(SAME)).expect(SAME);
            (l != r).then(|| format!("S(ab) != S(b)S(a) for a={}, b={}", self.basis_label(a), self.basis_label(b)))
        });
        push("antipode is an anti-homomorphism", samples.pairs.len(), w);

        Ok(QuasiHopfReport {
            dimension: dim,
            mode: mode.name().to_string(),
            seed: match mode {
                VerifyMode::Full => None,
                VerifyMode::Sampled { seed, .. } => Some(seed),
            },
            checks,
        })
    }

    /// Compares the coefficients of `e(g)⊗e(h)⊗e(k)⊗e(l)` (all `⋈1`) on both
    /// sides of the pentagon identity
    /// `(id⊗id⊗Δ)(Φ) (Δ⊗id⊗id)(Φ) = (1⊗Φ) (id⊗Δ⊗id)(Φ) (Φ⊗1)`.
    fn pentagon_at(&self, q: [usize; 4]) -> Option<String> {
        let k = self.quotient.target();
        let [g, h, kk, l] = q;
        let e = |a: usize| self.basis_index(a, 0);
        // coefficient of e(a)⊗e(b) in Δ(e(ab)⋈1)
        let split_coeff = |a: usize, b: usize| -> Root {
            self.coproduct_basis(e(k.mul(a, b)))
                .into_iter()
                .find(|&(_, x, y)| x == e(a) && y == e(b))
                .map(|(p, _, _)| p)
                .expect("coproduct covers every factorization")
        };
        // product of diagonal factors in each slot
        let slots = |factors: &[Root]| -> Option<Root> {
            let mut phase = factors.iter().fold(Root::ONE, |acc, &f| acc * f);
            for &a in &q {
                let mut b = e(a);
                for _ in 1..factors.len() {
                    let (p, c) = self.mul_basis(b, e(a))?;
                    phase = phase * p;
                    b = c;
                }
            }
            Some(phase)
        };
        let phi = |a, b, c| self.associator_coefficient(a, b, c);
        let lhs = slots(&[
            phi(g, h, k.mul(kk, l)) * split_coeff(kk, l),
            phi(k.mul(g, h), kk, l) * split_coeff(g, h),
        ]);
        let rhs = slots(&[phi(h, kk, l), phi(g, k.mul(h, kk), l) * split_coeff(h, kk), phi(g, h, kk)]);
        (lhs != rhs).then(|| {
            format!(
                "pentagon coefficients differ at ({}, {}, {}, {})",
                k.label(g),
                k.label(h),
                k.label(kk),
                k.label(l)
            )
        })
    }

    fn counit_associator_failure(&self) -> Option<String> {
        // (id⊗ε⊗id)Φ = 1⊗1
        let mut terms: BTreeMap<[usize; 2], Cyclotomic> = BTreeMap::new();
        for (&[a, b, c], v) in &self.associator().terms {
            if self.counit_basis(b) {
                accumulate(&mut terms, [a, c], v.clone());
            }
        }
        let unit = self.unit();
        let expected = self.tensor_of([&unit, &unit]).expect(SAME);
        (terms != expected.terms).then(|| "(id⊗ε⊗id)Φ != 1⊗1".to_string())
    }

    fn counit_failure(&self, a: usize) -> Option<String> {
        let x = self.basis_element(a);
        let mut left = self.zero();
        let mut right = self.zero();
        for (p, l, r) in self.coproduct_basis(a) {
            let c = p.to_cyclotomic();
            if self.counit_basis(l) {
                accumulate(&mut left.terms, r, c.clone());
            }
            if self.counit_basis(r) {
                accumulate(&mut right.terms, l, c);
            }
        }
        (left != x || right != x).then(|| format!("(ε⊗id)Δ(a) or (id⊗ε)Δ(a) differs from a for a={}", self.basis_label(a)))
    }

    fn antipode_failure(&self, a: usize) -> Option<String> {
        let alpha = self.alpha();
        let beta = self.beta();
        let eps = if self.counit_basis(a) { Cyclotomic::one() } else { Cyclotomic::zero() };
        let mut l1 = self.zero();
        let mut l2 = self.zero();
        for (p, x, y) in self.coproduct_basis(a) {
            let (x, y) = (self.basis_element(x), self.basis_element(y));
            let t = self.multiply(&self.multiply(&self.antipode(&x).expect(SAME), &alpha).expect(SAME), &y).expect(SAME);
            l1 = l1.add(&t.scale(&p.to_cyclotomic())).expect(SAME);
            let t = self.multiply(&self.multiply(&x, &beta).expect(SAME), &self.antipode(&y).expect(SAME)).expect(SAME);
            l2 = l2.add(&t.scale(&p.to_cyclotomic())).expect(SAME);
        }
        if l1 != alpha.scale(&eps) {
            return Some(format!("Σ S(a1) α a2 != ε(a) α for a={}", self.basis_label(a)));
        }
        if l2 != beta.scale(&eps) {
            return Some(format!("Σ a1 β S(a2) != ε(a) β for a={}", self.basis_label(a)));
        }
        None
    }

    fn antipode_associator_failure(&self) -> Option<String> {
        let alpha = self.alpha();
        let beta = self.beta();
        let unit = self.unit();
        let mut s1 = self.zero();
        for (&[a, b, c], v) in &self.associator().terms {
            let (x, y, z) = (self.basis_element(a), self.basis_element(b), self.basis_element(c));
            let t = self.multiply(&self.multiply(&x, &beta).expect(SAME), &self.antipode(&y).expect(SAME)).expect(SAME);
            let t = self.multiply(&self.multiply(&t, &alpha).expect(SAME), &z).expect(SAME);
            s1 = s1.add(&t.scale(v)).expect(SAME);
        }
        if s1 != unit {
            return Some("Σ X1 β S(X2) α X3 != 1".to_string());
        }
        let mut s2 = self.zero();
        for (&[a, b, c], v) in &self.associator_inverse().terms {
            let (x, y, z) = (self.basis_element(a), self.basis_element(b), self.basis_element(c));
            let t = self.multiply(&self.multiply(&self.antipode(&x).expect(SAME), &alpha).expect(SAME), &y).expect(SAME);
            let t = self.multiply(&self.multiply(&t, &beta).expect(SAME), &self.antipode(&z).expect(SAME)).expect(SAME);
            s2 = s2.add(&t.scale(v)).expect(SAME);
        }
        (s2 != unit).then(|| "Σ S(x1) α x2 β S(x3) != 1 for Φ^-1 = Σ x1⊗x2⊗x3".to_string())
    }

    /// Checks that `φ(D^w(G, N))` is stable under the left and right adjoint
    /// actions `ad_l(u)(v) = Σ u1 v S(u2)` and `ad_r(u)(v) = Σ S(u1) v u2` of
    /// `D^w'(G)`.
    pub fn check_normal_image(&self, mode: VerifyMode, exec: Exec) -> Result<NormalityReport> {
        let big = self.inflated()?;
        let image: Vec<(usize, AlgebraElement)> = (0..self.dim())
            .map(|b| Ok((b, self.phi_map(&big, &self.basis_element(b))?)))
            .collect::<Result<_>>()?;
        let space = Subspace::spanned_by(image.iter().map(|(_, v)| &v.terms));
        let pairs: Vec<(usize, usize)> = match mode {
            VerifyMode::Full => (0..big.dim()).flat_map(|u| (0..image.len()).map(move |v| (u, v))).collect(),
            VerifyMode::Sampled { instances, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..instances).map(|_| (rng.gen_range(0..big.dim()), rng.gen_range(0..image.len()))).collect()
            }
        };
        let witness = first_failure(exec, &pairs, |&(u, vi)| {
            let (b, v) = &image[vi];
            let mut left = big.zero();
            let mut right = big.zero();
            for (p, u1, u2) in big.coproduct_basis(u) {
                let (u1, u2) = (big.basis_element(u1), big.basis_element(u2));
                let c = p.to_cyclotomic();
                let t = big.multiply(&big.multiply(&u1, v).expect(SAME), &big.antipode(&u2).expect(SAME)).expect(SAME);
                left = left.add(&t.scale(&c)).expect(SAME);
                let t = big.multiply(&big.multiply(&big.antipode(&u1).expect(SAME), v).expect(SAME), &u2).expect(SAME);
                right = right.add(&t.scale(&c)).expect(SAME);
            }
            let side = if !space.contains(&left.terms) {
                "left"
            } else if !space.contains(&right.terms) {
                "right"
            } else {
                return None;
            };
            Some(format!(
                "{side} adjoint action of u={} moves φ({}) out of the image",
                big.basis_label(u),
                self.basis_label(*b)
            ))
        });
        let center = self.group.center();
        Ok(NormalityReport {
            central: self.normal().is_subset_of(&center),
            image_dimension: space.dim(),
            mode: mode.name().to_string(),
            pairs_checked: pairs.len(),
            witness,
        })
    }

    /// Forms the quotient of `D^w'(G)` by the left ideal generated by the
    /// augmentation part of `φ(D^w(G, N))`. Requires `N` central.
    pub fn quotient_by_normal_image(&self) -> Result<QuotientReport> {
        if !self.normal().is_subset_of(&self.group.center()) {
            return Err(Error::NotNormal("the normal subgroup is not central".into()));
        }
        if self.group_order() > QUOTIENT_GROUP_LIMIT {
            return Err(Error::InvalidConfig(format!(
                "the quotient is formed only for groups of order at most {QUOTIENT_GROUP_LIMIT}"
            )));
        }
        let big = self.inflated()?;
        let image: Vec<AlgebraElement> =
            (0..self.dim()).map(|b| self.phi_map(&big, &self.basis_element(b))).collect::<Result<_>>()?;
        // augmentation part: kill ε against one vector with ε != 0
        let mut plus = Vec::new();
        let pivot = image.iter().find(|v| !big.counit(v).map(|e| e.is_zero()).unwrap_or(true)).cloned();
        for v in &image {
            let e = big.counit(v)?;
            match &pivot {
                Some(p) if !e.is_zero() => {
                    let ep = big.counit(p)?;
                    let w = v.sub(&p.scale(&e.div(&ep)?))?;
                    if !w.is_zero() {
                        plus.push(w);
                    }
                }
                _ => plus.push(v.clone()),
            }
        }
        let mut ideal = Subspace::new();
        let n = big.group_order();
        for h in &plus {
            let mut seen = HashSet::new();
            for &b in h.terms.keys() {
                let (g, _) = big.split(b);
                // left factors e(k)⋈y with k^y = g
                for y in 0..n {
                    let kk = big.group.conj(y, big.quotient.section(g));
                    let k = big.quotient.project(kk);
                    let left = big.basis_index(k, y);
                    if seen.insert(left) {
                        let prod = big.multiply(&big.basis_element(left), h)?;
                        ideal.insert(&prod.terms);
                    }
                }
            }
        }
        let mut extended = ideal.clone();
        let idempotents: Vec<AlgebraElement> = self
            .normal()
            .members()
            .iter()
            .map(|&m| big.basis_element(big.basis_index(big.quotient.project(m), 0)))
            .collect();
        let independent = idempotents.iter().all(|e| extended.insert(&e.terms));
        let mut rest = big.unit();
        for e in &idempotents {
            rest = rest.sub(e)?;
        }
        Ok(QuotientReport {
            dimension: big.dim(),
            ideal_dimension: ideal.dim(),
            codimension: big.dim() - ideal.dim(),
            normal_order: self.normal().order(),
            idempotents_independent: independent,
            unit_decomposes: ideal.contains(&rest.terms),
        })
    }

    /// The 2-cocycle of the central extension `N -> G -> G/N` determined by
    /// the section of the quotient map.
    pub fn extension_cocycle(&self) -> Result<ExtensionCocycle> {
        if !self.normal().is_subset_of(&self.group.center()) {
            return Err(Error::NotNormal("the normal subgroup is not central".into()));
        }
        let q = &self.quotient;
        let k = q.target();
        let g = &self.group;
        let n = k.order();
        let mut values = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let v = g.mul(g.mul(q.section(a), q.section(b)), g.inv(q.section(k.mul(a, b))));
                if !self.normal().contains(v) {
                    return Err(Error::Internal("section defect outside the kernel".into()));
                }
                values[a * n + b] = v;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = g.mul(values[a * n + b], values[k.mul(a, b) * n + c]);
                    let r = g.mul(values[b * n + c], values[a * n + k.mul(b, c)]);
                    if l != r {
                        return Err(Error::Internal(format!("extension cocycle identity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(ExtensionCocycle { n, values })
    }

    /// Structure constants of all maps in the basis `e(gbar)⋈x`.
    pub fn structure_json(&self) -> serde_json::Value {
        let dim = self.dim();
        let n = self.group_order();
        let k = self.quotient.target();
        let mut product = Vec::new();
        for b1 in 0..dim {
            let (g, x) = self.split(b1);
            let h = self.conj_action(g, x);
            for y in 0..n {
                let b2 = self.basis_index(h, y);
                if let Some((p, b3)) = self.mul_basis(b1, b2) {
                    product.push(serde_json::json!([b1, b2, b3, p]));
                }
            }
        }
        let coproduct: Vec<_> = (0..dim)
            .flat_map(|b| self.coproduct_basis(b).into_iter().map(move |(p, l, r)| serde_json::json!([b, l, r, p])))
            .collect();
        let antipode: Vec<_> = (0..dim)
            .map(|b| {
                let (p, t) = self.antipode_basis(b);
                serde_json::json!([b, t, p])
            })
            .collect();
        let mut associator = Vec::new();
        for a in 0..k.order() {
            for b in 0..k.order() {
                for c in 0..k.order() {
                    let p = self.associator_coefficient(a, b, c);
                    if !p.is_one() {
                        associator.push(serde_json::json!([a, b, c, p]));
                    }
                }
            }
        }
        let beta: Vec<_> = (0..k.order()).map(|g| self.omega.value(g, k.inv(g), g)).collect();
        serde_json::json!({
            "dimension": dim,
            "group_order": n,
            "quotient_order": k.order(),
            "basis": (0..dim).map(|b| self.basis_label(b)).collect::<Vec<_>>(),
            "product": product,
            "coproduct": coproduct,
            "antipode": antipode,
            "associator_nontrivial": associator,
            "beta": beta,
        })
    }
}

/// Instances for the axiom sweeps, generated up front so that results do
/// not depend on the execution strategy.
struct Samples {
    singles: Vec<usize>,
    pairs: Vec<[usize; 2]>,
    triples: Vec<[usize; 3]>,
    quadruples: Vec<[usize; 4]>,
}

impl Samples {
    fn new(a: &Gtqd, mode: VerifyMode) -> Samples {
        let dim = a.dim();
        let k = a.quotient_order();
        match mode {
            VerifyMode::Full => Samples {
                singles: (0..dim).collect(),
                pairs: (0..dim).flat_map(|x| (0..dim).map(move |y| [x, y])).collect(),
                triples: (0..dim)
                    .flat_map(|x| (0..dim).flat_map(move |y| (0..dim).map(move |z| [x, y, z])))
                    .collect(),
                quadruples: (0..k * k * k * k).map(|i| [i / (k * k * k), i / (k * k) % k, i / k % k, i % k]).collect(),
            },
            VerifyMode::Sampled { instances, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let n = a.group_order();
                // mostly composable successors, so that products are nonzero
                let next = |rng: &mut ChaCha8Rng, b: usize| -> usize {
                    if rng.gen_range(0..4) == 0 {
                        rng.gen_range(0..dim)
                    } else {
                        let (g, x) = a.split(b);
                        a.basis_index(a.conj_action(g, x), rng.gen_range(0..n))
                    }
                };
                let singles = (0..instances).map(|_| rng.gen_range(0..dim)).collect();
                let pairs = (0..instances)
                    .map(|_| {
                        let x = rng.gen_range(0..dim);
                        [x, next(&mut rng, x)]
                    })
                    .collect();
                let triples = (0..instances)
                    .map(|_| {
                        let x = rng.gen_range(0..dim);
                        let y = next(&mut rng, x);
                        [x, y, next(&mut rng, y)]
                    })
                    .collect();
                let quadruples = (0..instances)
                    .map(|_| [rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k)])
                    .collect();
                Samples { singles, pairs, triples, quadruples }
            }
        }
    }
}

/// First failing instance in input order, processed in chunks so that a
/// failure stops the sweep early.
fn first_failure<T, F>(exec: Exec, items: &[T], f: F) -> Option<String>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    for chunk in items.chunks(CHUNK) {
        if let Some(w) = exec.map(chunk, &f).into_iter().flatten().next() {
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedral::{build, GroupSpec};

    fn cyclic(n: usize, normal: &[usize], q: i64) -> Gtqd {
        let g = Arc::new(FiniteGroup::cyclic_table(n));
        let nsub = g.subgroup_generated(normal);
        let quot = QuotientMap::new(&g, &nsub).unwrap();
        let k = quot.target();
        let gen = (0..k.order()).find(|&a| k.element_order(a) == k.order()).unwrap();
        let w = Cocycle3::cyclic_on(k, gen, q).unwrap();
        Gtqd::from_quotient(g, quot, w).unwrap()
    }

    #[test]
    fn dimension_and_unit() {
        let a = cyclic(4, &[2], 1);
        assert_eq!(a.dim(), 8);
        let u = a.unit();
        for b in 0..a.dim() {
            let x = a.basis_element(b);
            assert_eq!(a.multiply(&u, &x).unwrap(), x);
        }
    }

    #[test]
    fn full_axioms_on_small_twisted_algebras() {
        for (n, normal, q) in [(4, vec![2], 1), (6, vec![2], 1), (6, vec![3], 1), (2, vec![], 1), (3, vec![], 1)] {
            let a = cyclic(n, &normal, q);
            let r = a.verify_quasihopf(VerifyMode::Full, Exec::default()).unwrap();
            assert!(r.passed(), "Z_{n} q={q}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn sampled_axioms_on_binary_dihedral() {
        let p = build(&GroupSpec::BinaryDihedral(3)).unwrap();
        let a = Gtqd::new(p.group.clone(), &p.involution_subgroup().unwrap(), Cocycle3::trivial(6)).unwrap();
        let r = a.verify_quasihopf(VerifyMode::Sampled { instances: 500, seed: 7 }, Exec::default()).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
    }

    #[test]
    fn perturbed_theta_breaks_associativity() {
        // on Z_2 every normalized 2-cochain is a cocycle, so perturb over Z_3
        let a = cyclic(6, &[3], 1).with_theta_perturbed(1, 1, 1, Root::new(4, 1));
        let r = a.verify_quasihopf(VerifyMode::Full, Exec::Sequential).unwrap();
        let f = r.first_failure().unwrap();
        assert_eq!(f.axiom, "associativity");
    }

    #[test]
    fn antipode_without_inverse_fails() {
        // the phase must be inverted; the uninverted formula breaks the antipode axioms
        let a = cyclic(6, &[3], 1);
        let k = a.quotient().target();
        let mut broken = false;
        for b in 0..a.dim() {
            let (g, x) = a.split(b);
            let xb = a.quotient().project(x);
            let ginv = k.inv(g);
            let inverted = a.antipode_basis(b).0;
            let literal = a.cochains().theta(ginv, xb, k.inv(xb)) * a.cochains().gamma(xb, g, ginv);
            broken |= inverted != literal;
        }
        assert!(broken);
    }

    #[test]
    fn parent_mismatch_is_an_error() {
        let a = cyclic(4, &[2], 1);
        let b = cyclic(4, &[2], 1);
        assert_eq!(a.multiply(&a.unit(), &b.unit()), Err(Error::ParentMismatch));
    }

    #[test]
    fn phi_is_multiplicative_and_unital() {
        let a = cyclic(4, &[2], 1);
        let big = a.inflated().unwrap();
        assert_eq!(a.phi_map(&big, &a.unit()).unwrap(), big.unit());
        for b1 in 0..a.dim() {
            for b2 in 0..a.dim() {
                let (x, y) = (a.basis_element(b1), a.basis_element(b2));
                let l = a.phi_map(&big, &a.multiply(&x, &y).unwrap()).unwrap();
                let r = big.multiply(&a.phi_map(&big, &x).unwrap(), &a.phi_map(&big, &y).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn psi_is_not_multiplicative_for_nontrivial_kernel() {
        let a = cyclic(4, &[2], 1);
        let big = a.inflated().unwrap();
        let small = a.quotient_double().unwrap();
        let image_of_unit = a.psi_map(&big, &small, &big.unit()).unwrap();
        assert_eq!(image_of_unit, small.unit().scale(&Cyclotomic::from_integer(2)));
        let mut fails = false;
        for b1 in 0..big.dim() {
            for b2 in 0..big.dim() {
                let (x, y) = (big.basis_element(b1), big.basis_element(b2));
                let l = a.psi_map(&big, &small, &big.multiply(&x, &y).unwrap()).unwrap();
                let r = small
                    .multiply(&a.psi_map(&big, &small, &x).unwrap(), &a.psi_map(&big, &small, &y).unwrap())
                    .unwrap();
                fails |= l != r;
            }
        }
        assert!(fails);
    }

    #[test]
    fn central_image_is_normal_and_quotient_is_functions_on_kernel() {
        let a = cyclic(4, &[2], 1);
        let r = a.check_normal_image(VerifyMode::Full, Exec::default()).unwrap();
        assert!(r.central && r.normal(), "{:?}", r.witness);
        let q = a.quotient_by_normal_image().unwrap();
        assert!(q.is_function_algebra_on_normal(), "{q:?}");
        assert_eq!(q.codimension, 2);
    }

    #[test]
    fn noncentral_normal_subgroup_image_is_not_normal() {
        let p = build(&GroupSpec::BinaryDihedral(3)).unwrap();
        let g = &p.group;
        // the cyclic subgroup of order 6 generated by the rotation
        let rot = (0..g.order()).find(|&a| g.element_order(a) == 6).unwrap();
        let n = g.subgroup_generated(&[g.pow(rot, 2)]);
        assert_eq!(n.order(), 3);
        let a = Gtqd::new(g.clone(), &n, Cocycle3::trivial(4)).unwrap();
        let r = a.check_normal_image(VerifyMode::Full, Exec::default()).unwrap();
        assert!(!r.central);
        assert!(!r.normal());
    }

    #[test]
    fn split_extension_has_trivial_cocycle_for_homomorphic_section() {
        let g = Arc::new(FiniteGroup::cyclic_table(6));
        let n = g.subgroup_generated(&[3]);
        let q = QuotientMap::new(&g, &n).unwrap();
        // cosets of {0, 3}: 0, 1, 2; the section onto {0, 2, 4} is a homomorphism
        let section: Vec<usize> = (0..3).map(|c| (0..6).find(|&a| a % 2 == 0 && q.project(a) == c).unwrap()).collect();
        let q = q.with_section(section).unwrap();
        let a = Gtqd::from_quotient(g.clone(), q, Cocycle3::trivial(3)).unwrap();
        assert!(a.extension_cocycle().unwrap().is_trivial());
        let b = Gtqd::new(g, &FiniteGroup::cyclic_table(6).subgroup_generated(&[3]), Cocycle3::trivial(3)).unwrap();
        assert!(!b.extension_cocycle().unwrap().is_trivial());
    }
}
