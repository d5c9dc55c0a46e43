//! 2x2 matrices over cyclotomic fields, used only while generating groups.

use std::ops::Mul;

use num_integer::Integer;

use crate::cyclotomic::Cyclotomic;
use crate::rational::Rational;

/// A 2x2 matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub entries: [Cyclotomic; 4],
}

impl Mat2 {
    pub fn new(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> Self {
        Mat2 { entries: [a, b, c, d] }
    }

    pub fn identity() -> Self {
        Self::scalar(Cyclotomic::one())
    }

    pub fn scalar(s: Cyclotomic) -> Self {
        Mat2::new(s.clone(), Cyclotomic::zero(), Cyclotomic::zero(), s)
    }

    pub fn diag(a: Cyclotomic, d: Cyclotomic) -> Self {
        Mat2::new(a, Cyclotomic::zero(), Cyclotomic::zero(), d)
    }

    /// The quaternion `a + b i + c j + d k` as `[[a+bi, c+di], [-c+di, a-bi]]`.
    pub fn quaternion(a: &Cyclotomic, b: &Cyclotomic, c: &Cyclotomic, d: &Cyclotomic) -> Self {
        let i = Cyclotomic::root_of_unity(4, 1);
        let bi = b * &i;
        let di = d * &i;
        Mat2::new(a + &bi, c + &di, &di - c, a - &bi)
    }

    pub fn det(&self) -> Cyclotomic {
        let [a, b, c, d] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> Cyclotomic {
        &self.entries[0] + &self.entries[3]
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    /// Least common multiple of the entry orders.
    pub fn order_lcm(&self) -> u32 {
        self.entries.iter().fold(1, |acc, e| acc.lcm(&e.order()))
    }

    pub fn lift_to(&self, m: u32) -> Mat2 {
        Mat2 { entries: self.entries.clone().map(|e| e.lift_to(m)) }
    }

    /// Hashable canonical form; all entries must already sit at the same order.
    pub fn key(&self) -> Vec<Rational> {
        let m = self.entries[0].order();
        debug_assert!(self.entries.iter().all(|e| e.order() == m));
        self.entries.iter().flat_map(|e| e.coeffs().iter().cloned()).collect()
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        Mat2::new(&(a * e) + &(b * g), &(a * f) + &(b * h), &(c * e) + &(d * g), &(c * f) + &(d * h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_units_multiply_like_quaternions() {
        let z = Cyclotomic::zero();
        let o = Cyclotomic::one();
        let i = Mat2::quaternion(&z, &o, &z, &z);
        let j = Mat2::quaternion(&z, &z, &o, &z);
        let k = Mat2::quaternion(&z, &z, &z, &o);
        assert_eq!(&i * &j, k);
        assert_eq!(&i * &i, Mat2::scalar(Cyclotomic::from_integer(-1)));
        assert!(i.det().is_one());
    }
}
