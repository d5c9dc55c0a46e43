//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! A [`Cyclotomic`] is a polynomial in `zeta_m` reduced modulo the `m`-th
//! cyclotomic polynomial, so its coefficient vector has length `phi(m)` and
//! is canonical for a fixed `m`. Values remember the order they were built
//! at; binary operations lift both operands to the least common multiple of
//! their orders first.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use num_integer::Integer;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rational::Rational;

type Coeffs = SmallVec<[Rational; 8]>;

/// Largest order accepted by [`cyclotomic_polynomial`].
pub const MAX_ORDER: u32 = 10_000;

fn phi_table() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static TABLE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

fn root_table() -> &'static RwLock<HashMap<u32, Arc<Vec<Cyclotomic>>>> {
    static TABLE: OnceLock<RwLock<HashMap<u32, Arc<Vec<Cyclotomic>>>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn compute_cyclotomic(m: u32) -> Vec<i64> {
    // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}; multiply the positive factors
    // first so every division is exact.
    let divisors: Vec<u32> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    let mut poly: Vec<i64> = vec![1];
    for &d in &divisors {
        if mobius(m / d) == 1 {
            let d = d as usize;
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i] -= c;
                next[i + d] += c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(m / d) == -1 {
            let d = d as usize;
            let qlen = poly.len() - d;
            let mut q = vec![0i64; qlen];
            for i in 0..qlen {
                let prev = if i >= d { q[i - d] } else { 0 };
                q[i] = prev - poly[i];
            }
            poly = q;
        }
    }
    poly
}

/// The `m`-th cyclotomic polynomial, coefficients from the constant term up.
///
/// Memoized; safe to call from several threads.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    assert!((1..=MAX_ORDER).contains(&m), "cyclotomic order {m} out of range");
    if let Some(p) = phi_table().read().unwrap().get(&m) {
        return p.clone();
    }
    let p = Arc::new(compute_cyclotomic(m));
    phi_table().write().unwrap().entry(m).or_insert(p).clone()
}

/// Reduces a polynomial in `zeta_m` to canonical form.
fn reduce(m: u32, mut poly: Vec<Rational>) -> Coeffs {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for i in (deg..poly.len()).rev() {
            if poly[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[i]);
            let base = i - deg;
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    let t = c.mul_int(pj);
                    poly[base + j] -= &t;
                }
            }
        }
        poly.truncate(deg);
    } else {
        poly.resize(deg, Rational::ZERO);
    }
    poly.into_iter().collect()
}

/// An exact element of `Q(zeta_m)`.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Coeffs,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::ZERO)
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::ONE)
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = Coeffs::new();
        coeffs.push(r);
        Cyclotomic { order: 1, coeffs }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// Zero represented at order `m`.
    pub fn zero_at(m: u32) -> Self {
        let deg = totient(m);
        Cyclotomic { order: m, coeffs: std::iter::repeat_n(Rational::ZERO, deg).collect() }
    }

    /// Builds `sum_i coeffs[i] * zeta_m^i` for an arbitrary-length coefficient list.
    pub fn from_poly(m: u32, coeffs: Vec<Rational>) -> Self {
        assert!(m >= 1);
        Cyclotomic { order: m, coeffs: reduce(m, coeffs) }
    }

    /// `zeta_m^k`.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        assert!(m >= 1, "root of unity of order 0");
        let k = k.rem_euclid(m as i64) as usize;
        if let Some(t) = root_table().read().unwrap().get(&m) {
            return t[k].clone();
        }
        let table: Vec<Cyclotomic> = (0..m as usize)
            .map(|j| {
                let mut poly = vec![Rational::ZERO; j + 1];
                poly[j] = Rational::ONE;
                Cyclotomic::from_poly(m, poly)
            })
            .collect();
        let table = Arc::new(table);
        let t = root_table().write().unwrap().entry(m).or_insert(table).clone();
        t[k].clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients on the power basis `1, zeta, ..., zeta^{phi(m)-1}`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational().and_then(|r| r.to_i64())
    }

    /// Re-expresses the value at order `target`, which must be a multiple of
    /// the current order.
    pub fn lift_to(&self, target: u32) -> Cyclotomic {
        if target == self.order {
            return self.clone();
        }
        assert!(target.is_multiple_of(self.order), "cannot lift order {} to {}", self.order, target);
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::ZERO; (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i * step] = c.clone();
            }
        }
        Cyclotomic::from_poly(target, poly)
    }

    /// Coefficient vector at a common order, lifting when necessary.
    pub fn coeffs_at(&self, target: u32) -> Vec<Rational> {
        self.lift_to(target).coeffs.into_vec()
    }

    fn binary<F>(a: &Cyclotomic, b: &Cyclotomic, f: F) -> Cyclotomic
    where
        F: Fn(u32, &[Rational], &[Rational]) -> Cyclotomic,
    {
        if a.order == b.order {
            return f(a.order, &a.coeffs, &b.coeffs);
        }
        let l = a.order.lcm(&b.order);
        let la = a.lift_to(l);
        let lb = b.lift_to(l);
        f(l, &la.coeffs, &lb.coeffs)
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        Self::binary(self, other, |m, x, y| Cyclotomic {
            order: m,
            coeffs: x.iter().zip(y).map(|(p, q)| p + q).collect(),
        })
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        Self::binary(self, other, |m, x, y| Cyclotomic {
            order: m,
            coeffs: x.iter().zip(y).map(|(p, q)| p - q).collect(),
        })
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        // rational scalars skip the convolution
        if self.order <= 2 && other.order > 2 {
            return other.scale(&self.coeffs[0]);
        }
        if other.order <= 2 && self.order > 2 {
            return self.scale(&other.coeffs[0]);
        }
        Self::binary(self, other, |m, x, y| {
            if x.len() == 1 {
                return Cyclotomic::from_rational(&x[0] * &y[0]).with_order(m);
            }
            let mut poly = vec![Rational::ZERO; x.len() + y.len() - 1];
            for (i, p) in x.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                for (j, q) in y.iter().enumerate() {
                    if !q.is_zero() {
                        let t = p * q;
                        poly[i + j] += &t;
                    }
                }
            }
            Cyclotomic::from_poly(m, poly)
        })
    }

    fn with_order(mut self, m: u32) -> Cyclotomic {
        // only valid for orders with phi(m) == 1
        debug_assert!(totient(m) == 1);
        self.order = m;
        self
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn mul_int(&self, k: i64) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c.mul_int(k)).collect() }
    }

    /// Complex conjugation, `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        if self.order <= 2 {
            return self.clone();
        }
        let m = self.order as usize;
        let mut poly = vec![Rational::ZERO; m];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(m - i) % m] += c;
            }
        }
        Cyclotomic::from_poly(self.order, poly)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo `Phi_m`.
    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            let r = self.coeffs[0].recip().ok_or(Error::DivisionByZero)?;
            return Ok(Cyclotomic { order: self.order, coeffs: std::iter::once(r).collect() });
        }
        let modulus: Vec<Rational> =
            cyclotomic_polynomial(self.order).iter().map(|&c| Rational::from_integer(c)).collect();
        let s = poly::inverse_mod(&self.coeffs, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(Cyclotomic::from_poly(self.order, s))
    }

    pub fn div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Cyclotomic> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Floating-point image under `zeta_m -> exp(2 pi i / m)`. Diagnostics only.
    pub fn embed_complex(&self) -> Complex64 {
        let m = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let angle = std::f64::consts::TAU * i as f64 / m;
                Complex64::from_polar(c.to_f64(), angle)
            })
            .sum()
    }

    /// A total order on values: lexicographic comparison of coefficient
    /// vectors at the common order. Used only for deterministic sorting.
    pub fn cmp_canonical(&self, other: &Cyclotomic) -> Ordering {
        let l = self.order.lcm(&other.order);
        self.coeffs_at(l).cmp(&other.coeffs_at(l))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = self.order.lcm(&other.order);
        self.lift_to(l).coeffs == other.lift_to(l).coeffs
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::add(self, rhs)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::sub(self, rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::mul(self, rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::neg(self)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "z{}^{}", self.order, i)?,
                (_, false) => write!(f, "{abs}*z{}^{}", self.order, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// JSON form: `{"order": m, "coeffs": [[num, den], ...]}`; numerators and
/// denominators outside the `i64` range are written as decimal strings.
impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<[serde_json::Value; 2]> = self
            .coeffs
            .iter()
            .map(|c| [json_int(&c.numer()), json_int(&c.denom())])
            .collect();
        let mut s = serializer.serialize_struct("Cyclotomic", 2)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

fn json_int(n: &num_bigint::BigInt) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

fn parse_int<E: de::Error>(v: &serde_json::Value) -> std::result::Result<num_bigint::BigInt, E> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(num_bigint::BigInt::from)
            .ok_or_else(|| E::custom("coefficient is not an integer")),
        serde_json::Value::String(s) => s.parse().map_err(|_| E::custom("bad integer string")),
        _ => Err(E::custom("coefficient must be a number or string")),
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: u32,
            coeffs: Vec<[serde_json::Value; 2]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.order == 0 || raw.order > MAX_ORDER {
            return Err(de::Error::custom("order out of range"));
        }
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for [n, d] in &raw.coeffs {
            let den = parse_int::<D::Error>(d)?;
            if num_traits::Zero::is_zero(&den) {
                return Err(de::Error::custom("zero denominator"));
            }
            coeffs.push(Rational::from_big(parse_int::<D::Error>(n)?, den));
        }
        Ok(Cyclotomic::from_poly(raw.order, coeffs))
    }
}

/// Dense polynomial helpers over `Q` used by inversion.
mod poly {
    use crate::rational::Rational;

    fn trim(p: &mut Vec<Rational>) {
        while p.len() > 1 && p.last().is_some_and(Rational::is_zero) {
            p.pop();
        }
    }

    fn degree(p: &[Rational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let db = degree(b).expect("division by zero polynomial");
        let lead = b[db].recip().unwrap();
        let mut r = a.to_vec();
        let da = match degree(&r) {
            Some(d) if d >= db => d,
            _ => return (vec![Rational::ZERO], r),
        };
        let mut q = vec![Rational::ZERO; da - db + 1];
        for i in (db..=da).rev() {
            if r[i].is_zero() {
                continue;
            }
            let c = &r[i] * &lead;
            for j in 0..=db {
                let t = &c * &b[j];
                r[i - db + j] -= &t;
            }
            q[i - db] = c;
        }
        trim(&mut r);
        (q, r)
    }

    fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        out
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let mut out: Vec<Rational> = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                let y = b.get(i).cloned().unwrap_or_default();
                &x - &y
            })
            .collect();
        trim(&mut out);
        out
    }

    /// `s` with `s * a == 1 (mod m)`, or `None` when `gcd(a, m) != 1`.
    pub fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
        let mut r0 = m.to_vec();
        let mut r1 = a.to_vec();
        trim(&mut r1);
        let mut s0 = vec![Rational::ZERO];
        let mut s1 = vec![Rational::ONE];
        degree(&r1)?;
        while degree(&r1).is_some_and(|d| d > 0) {
            let (q, r) = divrem(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            degree(&r1)?;
        }
        // r1 is a nonzero constant
        let c = r1[0].recip()?;
        Some(s1.iter().map(|x| x * &c).collect())
    }
}

/// A root of unity stored by its exponent, `zeta_order^exp`, reduced so
/// that equal values have equal representations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Root {
    order: u32,
    exp: u32,
}

impl Root {
    pub const ONE: Root = Root { order: 1, exp: 0 };

    pub fn new(order: u32, exp: i64) -> Root {
        assert!(order >= 1);
        let e = exp.rem_euclid(order as i64) as u32;
        let g = e.gcd(&order);
        if e == 0 {
            Root::ONE
        } else {
            Root { order: order / g, exp: e / g }
        }
    }

    /// Order of the value in the multiplicative group.
    pub fn order(self) -> u32 {
        self.order
    }

    pub fn exp(self) -> u32 {
        self.exp
    }

    pub fn is_one(self) -> bool {
        self.exp == 0
    }

    /// Exponent relative to `zeta_m`; `m` must be a multiple of the order.
    pub fn exp_at(self, m: u32) -> u32 {
        assert!(m.is_multiple_of(self.order), "root of order {} does not live in mu_{m}", self.order);
        self.exp * (m / self.order)
    }

    pub fn mul(self, other: Root) -> Root {
        let l = self.order.lcm(&other.order);
        Root::new(l, self.exp_at(l) as i64 + other.exp_at(l) as i64)
    }

    pub fn inv(self) -> Root {
        Root::new(self.order, -(self.exp as i64))
    }

    pub fn to_cyclotomic(self) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.order, self.exp as i64)
    }
}

impl Mul for Root {
    type Output = Root;
    fn mul(self, rhs: Root) -> Root {
        Root::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    // oracle: Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d by long division
    fn phi_by_division(m: u32) -> Vec<i64> {
        let mut num = vec![0i64; m as usize + 1];
        num[0] = -1;
        num[m as usize] = 1;
        for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
            let den = phi_by_division(d);
            let dd = den.len() - 1;
            let mut q = vec![0i64; num.len() - dd];
            let mut r = num.clone();
            for i in (dd..r.len()).rev() {
                let c = r[i];
                q[i - dd] = c;
                for (j, &b) in den.iter().enumerate() {
                    r[i - dd + j] -= c * b;
                }
            }
            assert!(r.iter().all(|&x| x == 0));
            num = q;
        }
        num
    }

    #[test]
    fn cyclotomic_polynomial_small_cases() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(7), vec![1; 7]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(phi_by_division(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cyclotomic_polynomial_matches_division_oracle() {
        for m in 1..=60 {
            assert_eq!(*cyclotomic_polynomial(m), phi_by_division(m), "m = {m}");
            assert_eq!(cyclotomic_polynomial(m).len() - 1, totient(m));
        }
        // the first order with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn large_order_is_fast_and_monic() {
        let p = cyclotomic_polynomial(9240);
        assert_eq!(p.len() - 1, totient(9240));
        assert_eq!(*p.last().unwrap(), 1);
    }

    #[test]
    fn roots_of_unity_basics() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.coeffs(), &ints(&[0, 1])[..]);
        assert_eq!(Cyclotomic::root_of_unity(2, 1), Cyclotomic::from_integer(-1));
        assert!(Cyclotomic::root_of_unity(9, 0).is_one());
        let sqrt2 = &Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::root_of_unity(8, -1);
        assert_eq!(&sqrt2 * &sqrt2, Cyclotomic::from_integer(2));
    }

    #[test]
    fn vanishing_sum_and_conjugation() {
        let z = |k| Cyclotomic::root_of_unity(3, k);
        assert!((&(&z(1) + &z(2)) + &Cyclotomic::one()).is_zero());
        assert_eq!(Cyclotomic::root_of_unity(5, 1).conj(), Cyclotomic::root_of_unity(5, 4));
    }

    #[test]
    fn inverse_of_one_plus_zeta8() {
        let a = &Cyclotomic::one() + &Cyclotomic::root_of_unity(8, 1);
        let inv = a.inv().unwrap();
        assert!((&inv * &a).is_one());
        // oracle: (1 + z)(1 - z + z^2 - z^3) = 1 - z^4 = 2 in Q(zeta_8)
        let expected =
            Cyclotomic::from_poly(8, vec![Rational::new(1, 2), Rational::new(-1, 2), Rational::new(1, 2), Rational::new(-1, 2)]);
        assert_eq!(inv, expected);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Cyclotomic::zero_at(12).inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn mixed_orders_lift_to_lcm() {
        let a = Cyclotomic::root_of_unity(4, 1);
        let b = Cyclotomic::root_of_unity(6, 1);
        let c = &a * &b;
        assert_eq!(c.order(), 12);
        assert_eq!(c, Cyclotomic::root_of_unity(12, 5));
        assert_eq!(Cyclotomic::root_of_unity(3, 1), Cyclotomic::root_of_unity(12, 4));
    }

    #[test]
    fn embedding() {
        assert_eq!(Cyclotomic::zero().embed_complex(), Complex64::new(0.0, 0.0));
        let i = Cyclotomic::root_of_unity(4, 1).embed_complex();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        let s = (&Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::root_of_unity(8, -1)).embed_complex();
        assert!((s.re - 2f64.sqrt()).abs() < 1e-9 && s.im.abs() < 1e-9);
    }

    #[test]
    fn json_round_trip() {
        let a = Cyclotomic::from_poly(5, ints(&[3, 0, -2, 7]));
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"order":5,"coeffs":[[3,1],[0,1],[-2,1],[7,1]]}"#);
        let b: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn root_type_normalizes() {
        assert_eq!(Root::new(4, 2), Root::new(2, 1));
        assert_eq!(Root::new(6, 6), Root::ONE);
        assert_eq!(Root::new(4, 1) * Root::new(4, 3), Root::ONE);
        assert_eq!(Root::new(3, 1).to_cyclotomic(), Cyclotomic::root_of_unity(3, 1));
    }
}
