//! Prime-field arithmetic for the character-table algorithm.

/// Arithmetic modulo a prime `p < 2^63`.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u64 {
        let factors = prime_factors(self.p - 1);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .expect("prime field has a primitive root")
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, pr);
            let inv = self.inv(rows[r][c]);
            for v in rows[r].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for k in 0..ncols {
                        let t = self.mul(f, rows[r][k]);
                        rows[i][k] = self.sub(rows[i][k], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of the right kernel `{c : A c = 0}` of a square matrix.
    pub fn kernel(self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.len();
        let mut rows = a.to_vec();
        let pivots = self.rref(&mut rows);
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = self.neg(rows[r][free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial `det(x I - A)`, constant term first, via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h = a.to_vec();
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
            if piv != j + 1 {
                h.swap(piv, j + 1);
                for row in h.iter_mut() {
                    row.swap(piv, j + 1);
                }
            }
            let inv = self.inv(h[j + 1][j]);
            for i in j + 2..n {
                let f = self.mul(h[i][j], inv);
                if f == 0 {
                    continue;
                }
                for k in 0..n {
                    let t = self.mul(f, h[j + 1][k]);
                    h[i][k] = self.sub(h[i][k], t);
                }
                // similarity: add f * column i to column j+1
                for row in h.iter_mut() {
                    let t = self.mul(f, row[i]);
                    row[j + 1] = self.add(row[j + 1], t);
                }
            }
        }
        // p_k = det(x I - H[0..k, 0..k])
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let prev = &polys[k];
            let mut next = vec![0u64; k + 2];
            for (i, &c) in prev.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.sub(next[i], self.mul(h[k][k], c));
            }
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                let f = self.mul(prod, h[i][k]);
                if f != 0 {
                    for (t, &c) in polys[i].iter().enumerate() {
                        next[t] = self.sub(next[t], self.mul(f, c));
                    }
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p = k * e + 1 > bound`.
pub fn prime_congruent_one(e: u64, bound: u64) -> Option<u64> {
    let mut k = bound / e + 1;
    loop {
        let p = k.checked_mul(e)?.checked_add(1)?;
        if p >= 1 << 63 {
            return None;
        }
        if p > bound && is_prime(p) {
            return Some(p);
        }
        k += 1;
    }
}
