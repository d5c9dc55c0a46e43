//! Normalized 3-cocycles with root-of-unity values, their inflation along a
//! quotient map, and the derived 2-cochains `theta` and `gamma`.
//!
//! Values are stored as exponents: `w(a, b, c) = zeta_M^{exp}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclotomic::Root;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientMap};

/// Groups up to this order are checked exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 60;
const RANDOM_QUADRUPLES: usize = 1_000_000;

/// A normalized 3-cocycle on a group of order `n` with values in `mu_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle3 {
    n: usize,
    m: u32,
    // dense n^3 table, empty for the trivial cocycle
    exps: Vec<u32>,
}

impl Cocycle3 {
    pub fn trivial(n: usize) -> Self {
        Cocycle3 { n, m: 1, exps: Vec::new() }
    }

    /// Tabulates `f` (exponents mod `m`).
    pub fn from_fn(n: usize, m: u32, f: impl Fn(usize, usize, usize) -> i64) -> Self {
        let mut exps = vec![0u32; n * n * n];
        let mut nontrivial = false;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let e = f(a, b, c).rem_euclid(m as i64) as u32;
                    nontrivial |= e != 0;
                    exps[(a * n + b) * n + c] = e;
                }
            }
        }
        if nontrivial {
            Cocycle3 { n, m, exps }
        } else {
            Cocycle3::trivial(n)
        }
    }

    /// `w(a, b, c) = zeta_n^{q a floor((b + c) / n)}` on `Z_n`, where the
    /// element at index `i` is the residue `i`.
    pub fn cyclic_cocycle(n: usize, q: i64) -> Self {
        Self::from_fn(n, n as u32, |a, b, c| q * a as i64 * ((b + c) / n) as i64)
    }

    /// The same cocycle transported to a cyclic group through a generator.
    pub fn cyclic_on(g: &FiniteGroup, generator: usize, q: i64) -> Result<Self> {
        let n = g.order();
        if g.element_order(generator) != n {
            return Err(Error::InvalidConfig("cyclic cocycles need a cyclic group and a generator".into()));
        }
        let mut residue = vec![0usize; n];
        let mut x = 0;
        for (k, _) in (0..n).enumerate() {
            residue[x] = k;
            x = g.mul(x, generator);
        }
        Ok(Self::from_fn(n, n as u32, |a, b, c| {
            q * residue[a] as i64 * ((residue[b] + residue[c]) / n) as i64
        }))
    }

    pub fn group_order(&self) -> usize {
        self.n
    }

    /// `M` such that all values are `M`-th roots of unity.
    pub fn value_order(&self) -> u32 {
        self.m
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.is_empty()
    }

    #[inline]
    pub fn exp(&self, a: usize, b: usize, c: usize) -> u32 {
        if self.exps.is_empty() {
            0
        } else {
            self.exps[(a * self.n + b) * self.n + c]
        }
    }

    pub fn value(&self, a: usize, b: usize, c: usize) -> Root {
        Root::new(self.m, self.exp(a, b, c) as i64)
    }

    /// A copy with one value replaced, for mutation tests.
    pub fn with_value(&self, a: usize, b: usize, c: usize, v: Root) -> Self {
        let m = num_integer::lcm(self.m, v.order());
        let mut exps: Vec<u32> = if self.exps.is_empty() {
            vec![0; self.n * self.n * self.n]
        } else {
            self.exps.iter().map(|&e| e * (m / self.m)).collect()
        };
        exps[(a * self.n + b) * self.n + c] = v.exp_at(m);
        Cocycle3 { n: self.n, m, exps }
    }

    /// Pull-back to the source of `q`: `w'(g, x, y) = w(gbar, xbar, ybar)`.
    pub fn inflate(&self, q: &QuotientMap) -> Cocycle3 {
        let n = q.projection().len();
        if self.is_trivial() {
            return Cocycle3::trivial(n);
        }
        let p = q.projection();
        Self::from_fn(n, self.m, |a, b, c| self.exp(p[a], p[b], p[c]) as i64)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.n,
            "value_order": self.m,
            "trivial": self.is_trivial(),
        })
    }
}

/// A quadruple `(g, h, k, l)` violating the cocycle identity, or a triple
/// violating normalization (with `l` unused).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleViolation {
    pub normalization: bool,
    pub elements: [usize; 4],
}

fn identity_holds(w: &Cocycle3, g: &FiniteGroup, a: usize, b: usize, c: usize, d: usize) -> bool {
    let m = w.m as u64;
    let lhs = w.exp(b, c, d) as u64 + w.exp(a, g.mul(b, c), d) as u64 + w.exp(a, b, c) as u64;
    let rhs = w.exp(g.mul(a, b), c, d) as u64 + w.exp(a, b, g.mul(c, d)) as u64;
    lhs % m == rhs % m
}

/// Checks normalization and the 3-cocycle identity
/// `w(h,k,l) w(g,hk,l) w(g,h,k) = w(gh,k,l) w(g,h,kl)`.
///
/// Exhaustive for groups of order at most [`EXHAUSTIVE_LIMIT`], otherwise on
/// a million random quadruples drawn from `seed`.
pub fn verify_3cocycle(w: &Cocycle3, g: &FiniteGroup, seed: u64) -> Option<CocycleViolation> {
    let n = g.order();
    assert_eq!(n, w.n, "cocycle lives on a group of different order");
    for a in 0..n {
        for b in 0..n {
            for (x, y, z) in [(0, a, b), (a, 0, b), (a, b, 0)] {
                if w.exp(x, y, z) != 0 {
                    return Some(CocycleViolation { normalization: true, elements: [x, y, z, 0] });
                }
            }
        }
    }
    if n <= EXHAUSTIVE_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if !identity_holds(w, g, a, b, c, d) {
                            return Some(CocycleViolation { normalization: false, elements: [a, b, c, d] });
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_QUADRUPLES {
            let q = [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)];
            if !identity_holds(w, g, q[0], q[1], q[2], q[3]) {
                return Some(CocycleViolation { normalization: false, elements: q });
            }
        }
    }
    None
}

/// The 2-cochains derived from a 3-cocycle `w` on a group `K`:
///
/// `theta_g(x, y) = w(g, x, y) w(x, y, g^{xy}) / w(x, g^x, y)` and
/// `gamma_g(x, y) = w(x, y, g) w(g, x^g, y^g) / w(x, g, y^g)`,
///
/// with right conjugation `g^x = x^-1 g x`.
#[derive(Clone, Debug)]
pub struct Cochains {
    n: usize,
    m: u32,
    theta: Vec<u32>,
    gamma: Vec<u32>,
}

impl Cochains {
    pub fn new(k: &FiniteGroup, w: &Cocycle3) -> Self {
        let n = k.order();
        let m = w.value_order();
        if w.is_trivial() {
            return Cochains { n, m: 1, theta: Vec::new(), gamma: Vec::new() };
        }
        let rc = |g: usize, x: usize| k.mul(k.mul(k.inv(x), g), x);
        let mm = m as i64;
        let e = |a, b, c| w.exp(a, b, c) as i64;
        let mut theta = vec![0u32; n * n * n];
        let mut gamma = vec![0u32; n * n * n];
        for g in 0..n {
            for x in 0..n {
                let gx = rc(g, x);
                for y in 0..n {
                    let xy = k.mul(x, y);
                    let t = e(g, x, y) + e(x, y, rc(g, xy)) - e(x, gx, y);
                    let gy = rc(y, g);
                    let c = e(x, y, g) + e(g, rc(x, g), gy) - e(x, g, gy);
                    let i = (g * n + x) * n + y;
                    theta[i] = t.rem_euclid(mm) as u32;
                    gamma[i] = c.rem_euclid(mm) as u32;
                }
            }
        }
        Cochains { n, m, theta, gamma }
    }

    pub fn value_order(&self) -> u32 {
        self.m
    }

    pub fn is_trivial(&self) -> bool {
        self.theta.is_empty()
    }

    #[inline]
    pub fn theta_exp(&self, g: usize, x: usize, y: usize) -> u32 {
        if self.theta.is_empty() {
            0
        } else {
            self.theta[(g * self.n + x) * self.n + y]
        }
    }

    #[inline]
    pub fn gamma_exp(&self, g: usize, x: usize, y: usize) -> u32 {
        if self.gamma.is_empty() {
            0
        } else {
            self.gamma[(g * self.n + x) * self.n + y]
        }
    }

    pub fn theta(&self, g: usize, x: usize, y: usize) -> Root {
        Root::new(self.m, self.theta_exp(g, x, y) as i64)
    }

    pub fn gamma(&self, g: usize, x: usize, y: usize) -> Root {
        Root::new(self.m, self.gamma_exp(g, x, y) as i64)
    }

    /// Replaces one `theta` value, for mutation tests.
    pub fn with_theta(&self, g: usize, x: usize, y: usize, v: Root) -> Self {
        let m = num_integer::lcm(self.m, v.order());
        let scale = |t: &Vec<u32>| -> Vec<u32> {
            if t.is_empty() {
                vec![0; self.n * self.n * self.n]
            } else {
                t.iter().map(|&e| e * (m / self.m)).collect()
            }
        };
        let mut theta = scale(&self.theta);
        let gamma = scale(&self.gamma);
        theta[(g * self.n + x) * self.n + y] = v.exp_at(m);
        Cochains { n: self.n, m, theta, gamma }
    }
}

/// Checks that `theta_gbar` restricted to the centralizer of `gbar` in `K`
/// is a 2-cocycle. Returns a violating triple.
pub fn theta_restricted_is_2cocycle(k: &FiniteGroup, c: &Cochains, gbar: usize) -> Option<(usize, usize, usize)> {
    let cent = k.element_centralizer(gbar);
    let m = c.value_order() as u64;
    for &x in cent.members() {
        for &y in cent.members() {
            let xy = k.mul(x, y);
            for &z in cent.members() {
                let lhs = c.theta_exp(gbar, x, y) as u64 + c.theta_exp(gbar, xy, z) as u64;
                let rhs = c.theta_exp(gbar, y, z) as u64 + c.theta_exp(gbar, x, k.mul(y, z)) as u64;
                if lhs % m != rhs % m {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Checks `theta_g(x,y) theta_g(xy,z) = theta_{g^x}(y,z) theta_g(x,yz)` for
/// all `g, x, y, z` in `K`. Returns a violating quadruple.
pub fn check_theta_twisted_cocycle(k: &FiniteGroup, c: &Cochains) -> Option<[usize; 4]> {
    let n = k.order();
    let m = c.value_order() as u64;
    for g in 0..n {
        for x in 0..n {
            let gx = k.mul(k.mul(k.inv(x), g), x);
            for y in 0..n {
                let xy = k.mul(x, y);
                for z in 0..n {
                    let lhs = c.theta_exp(g, x, y) as u64 + c.theta_exp(g, xy, z) as u64;
                    let rhs = c.theta_exp(gx, y, z) as u64 + c.theta_exp(g, x, k.mul(y, z)) as u64;
                    if lhs % m != rhs % m {
                        return Some([g, x, y, z]);
                    }
                }
            }
        }
    }
    None
}

/// A failure of the conjugation identity for `theta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationWitness {
    /// Class representative `f` in the quotient.
    pub class_rep: usize,
    /// `t` in the stabilizer, as an element of `G`.
    pub t: usize,
    /// The conjugating element `w` of `G`.
    pub w: usize,
    pub value: Root,
}

/// Checks `theta_{w f w^-1}(w t w^-1, w) / theta_f(w, t) = 1` for every class
/// representative `f` of `G/N`, every `t` in the stabilizer of `f`, and every
/// `w` in `G`.
pub fn check_theta_conjugation_identity(
    g: &FiniteGroup,
    q: &QuotientMap,
    c: &Cochains,
) -> std::result::Result<(), ConjugationWitness> {
    let k = q.target();
    for class in k.conjugacy_classes() {
        let f = class.representative;
        let stab = q.centralizer(f);
        for &t in stab.members() {
            let tb = q.project(t);
            for w in 0..g.order() {
                let wb = q.project(w);
                let fw = k.conj(wb, f);
                let twb = q.project(g.conj(w, t));
                let e = c.theta_exp(fw, twb, wb) as i64 - c.theta_exp(f, wb, tb) as i64;
                let value = Root::new(c.value_order(), e);
                if !value.is_one() {
                    return Err(ConjugationWitness { class_rep: f, t, w, value });
                }
            }
        }
    }
    Ok(())
}
