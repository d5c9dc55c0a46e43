//! Exact character tables by the Burnside-Dixon method, and projective
//! (twisted) tables obtained by trivializing a 2-cocycle.
//!
//! Class-multiplication matrices are diagonalized simultaneously over a
//! prime field `F_p` with `p = 1 (mod exponent)`. Character values mod `p`
//! are lifted back to `Q(zeta_e)` through their eigenvalue multiplicities,
//! which are small nonnegative integers.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use num_integer::Integer;
use serde_json::json;

use crate::cyclotomic::{Cyclotomic, Root};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, FiniteGroup, Subgroup};
use crate::modp::{prime_congruent_one, Fp};
use crate::rational::Rational;

/// Irreducible characters of a finite group, one row per irreducible and one
/// column per conjugacy class.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: usize,
    exponent: u32,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    table: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
}

impl CharacterTable {
    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.table
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn num_irreps(&self) -> usize {
        self.table.len()
    }

    /// Value of character `row` at element `g`.
    pub fn value(&self, row: usize, g: usize) -> &Cyclotomic {
        &self.table[row][self.class_of[g]]
    }

    /// Character `row` expanded to one value per group element.
    pub fn row_by_element(&self, row: usize) -> Vec<Cyclotomic> {
        self.class_of.iter().map(|&c| self.table[row][c].clone()).collect()
    }

    /// Exact row and column orthogonality; returns a description of the
    /// first failure.
    pub fn check_orthogonality(&self) -> std::result::Result<(), String> {
        let r = self.table.len();
        let n = Cyclotomic::from_integer(self.order as i64);
        for a in 0..r {
            for b in a..r {
                let mut s = Cyclotomic::zero();
                for (c, class) in self.classes.iter().enumerate() {
                    let t = &self.table[a][c] * &self.table[b][c].conj();
                    s = &s + &t.mul_int(class.size() as i64);
                }
                let expected = if a == b { n.clone() } else { Cyclotomic::zero() };
                if s != expected {
                    return Err(format!("rows {a} and {b} have inner product {s}"));
                }
            }
        }
        for c in 0..self.classes.len() {
            for d in c..self.classes.len() {
                let mut s = Cyclotomic::zero();
                for row in &self.table {
                    s = &s + &(&row[c] * &row[d].conj());
                }
                let expected = if c == d {
                    Cyclotomic::from_integer((self.order / self.classes[c].size()) as i64)
                } else {
                    Cyclotomic::zero()
                };
                if s != expected {
                    return Err(format!("columns {c} and {d} have inner product {s}"));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, group: &FiniteGroup) -> serde_json::Value {
        json!({
            "classes": self.classes.iter().map(|c| json!({
                "representative": group.label(c.representative),
                "size": c.size(),
            })).collect::<Vec<_>>(),
            "rows": self.table.iter().zip(&self.degrees).map(|(row, d)| json!({
                "degree": d,
                "values": row,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Computes the irreducible characters of `g`.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let n = g.order();
    let classes = g.conjugacy_classes().to_vec();
    let r = classes.len();
    let class_of: Vec<usize> = (0..n).map(|a| g.class_of(a)).collect();
    let e = g.exponent() as u64;
    let inverse_class: Vec<usize> = classes.iter().map(|c| g.class_of(g.inv(c.representative))).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();

    let bound = 2 * ((n as f64).sqrt().ceil() as u64) * n as u64;
    let p = prime_congruent_one(e, bound).ok_or(Error::NoSuitablePrime { exponent: e })?;
    let f = Fp::new(p);

    // class multiplication matrix M_j[i][k] = #{x in C_j : x^-1 z_k in C_i}
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; r]; r];
        for (k, ck) in classes.iter().enumerate() {
            let z = ck.representative;
            for &x in &classes[j].members {
                let i = class_of[g.mul(g.inv(x), z)];
                m[i][k] += 1;
            }
        }
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v %= p;
            }
        }
        m
    };

    // each space: basis vectors in reduced echelon form, with their pivots
    let mut spaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = {
        let basis: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect();
        vec![(basis, (0..r).collect())]
    };
    for j in 1..r {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let m = class_matrix(j);
        let mut next = Vec::new();
        for (basis, pivots) in spaces {
            let d = basis.len();
            if d == 1 {
                next.push((basis, pivots));
                continue;
            }
            // restricted action: M b_t = sum_s A[s][t] b_s
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|i| (0..r).fold(0, |acc, k| f.add(acc, f.mul(m[i][k], b[k]))))
                        .collect()
                })
                .collect();
            let a: Vec<Vec<u64>> = (0..d).map(|s| (0..d).map(|t| images[t][pivots[s]]).collect()).collect();
            let cp = f.charpoly(&a);
            let mut found = 0;
            for lambda in 0..p {
                if f.eval(&cp, lambda) != 0 {
                    continue;
                }
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|s| (0..d).map(|t| if s == t { f.sub(a[s][t], lambda) } else { a[s][t] }).collect())
                    .collect();
                let ker = f.kernel(&shifted);
                found += ker.len();
                let mut vecs: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|c| {
                        (0..r).map(|i| (0..d).fold(0, |acc, t| f.add(acc, f.mul(c[t], basis[t][i])))).collect()
                    })
                    .collect();
                let piv = f.rref(&mut vecs);
                next.push((vecs, piv));
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(Error::Internal(format!("class matrix {j} is not diagonalizable mod {p}")));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Internal("class matrices failed to separate the characters".into()));
    }

    // power maps for lifting
    let orders: Vec<usize> = classes.iter().map(|c| g.element_order(c.representative)).collect();
    let z = f.pow(f.primitive_root(), (p - 1) / e);
    let root = |k: u64| f.pow(z, k % e);

    let mut rows: Vec<(u64, Vec<Cyclotomic>)> = Vec::with_capacity(r);
    for (basis, _) in &spaces {
        let v = &basis[0];
        if v[0] == 0 {
            return Err(Error::Internal("eigenvector vanishes at the identity class".into()));
        }
        let scale = f.inv(v[0]);
        let v: Vec<u64> = v.iter().map(|&x| f.mul(x, scale)).collect();
        let s = (0..r).fold(0, |acc, i| f.add(acc, f.mul(f.mul(v[i], v[inverse_class[i]]), f.inv(sizes[i] % p))));
        let d2 = f.mul(n as u64 % p, f.inv(s));
        let deg = (1..=((n as f64).sqrt() as u64 + 1))
            .find(|&d| d * d % p == d2)
            .ok_or_else(|| Error::Internal("character degree not found".into()))?;
        let modp: Vec<u64> = (0..r).map(|i| f.mul(f.mul(v[i], deg % p), f.inv(sizes[i] % p))).collect();
        let mut values = Vec::with_capacity(r);
        for (i, c) in classes.iter().enumerate() {
            let o = orders[i] as u64;
            let step = e / o;
            let o_inv = f.inv(o % p);
            let mut poly = vec![Rational::ZERO; e as usize];
            let mut total = 0;
            for k in 0..o {
                let mut acc = 0u64;
                for l in 0..o {
                    let cls = g.class_of_power(c.representative, l as i64);
                    // zeta_o^{-kl} = z^{-step k l}
                    let w = root(e - (step * k * l) % e);
                    acc = f.add(acc, f.mul(modp[cls], w));
                }
                let mult = f.mul(acc, o_inv);
                if mult > deg {
                    return Err(Error::Internal(format!("eigenvalue multiplicity {mult} exceeds degree {deg}")));
                }
                total += mult;
                poly[(step * k) as usize] = Rational::from_integer(mult as i64);
            }
            if total != deg {
                return Err(Error::Internal("eigenvalue multiplicities do not sum to the degree".into()));
            }
            values.push(Cyclotomic::from_poly(e as u32, poly));
        }
        rows.push((deg, values));
    }
    rows.sort_by(compare_rows);
    let (degrees, table): (Vec<u64>, Vec<Vec<Cyclotomic>>) = rows.into_iter().unzip();
    let ct = CharacterTable { order: n, exponent: e as u32, classes, class_of, table, degrees };
    ct.check_orthogonality().map_err(Error::Internal)?;
    if ct.degrees.iter().map(|d| d * d).sum::<u64>() != n as u64 {
        return Err(Error::Internal("squared degrees do not sum to the group order".into()));
    }
    Ok(ct)
}

fn compare_rows(a: &(u64, Vec<Cyclotomic>), b: &(u64, Vec<Cyclotomic>)) -> Ordering {
    let trivial = |row: &[Cyclotomic]| row.iter().all(Cyclotomic::is_one);
    a.0.cmp(&b.0).then_with(|| trivial(&b.1).cmp(&trivial(&a.1))).then_with(|| {
        a.1.iter().zip(&b.1).map(|(x, y)| x.cmp_canonical(y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    })
}

/// `(1/|H|) sum_h chi1(h) conj(chi2(h))` for functions given per element.
pub fn inner_product_ordinary(chi1: &[Cyclotomic], chi2: &[Cyclotomic]) -> Result<Rational> {
    assert_eq!(chi1.len(), chi2.len(), "class functions on different groups");
    let mut s = Cyclotomic::zero();
    for (a, b) in chi1.iter().zip(chi2) {
        s = &s + &(a * &b.conj());
    }
    let r = s.as_rational().ok_or_else(|| Error::Internal(format!("inner product {s} is not rational")))?;
    Ok(&r / &Rational::from_integer(chi1.len() as i64))
}

/// Restriction of a per-element function on `G` to the subgroup `h`, in
/// the subgroup's local indexing.
pub fn restrict(chi: &[Cyclotomic], h: &Subgroup) -> Vec<Cyclotomic> {
    h.members().iter().map(|&a| chi[a].clone()).collect()
}

/// Projective characters for a 2-cocycle `theta` that is a coboundary.
#[derive(Clone, Debug)]
pub struct TwistedCharacterTable {
    mu: Vec<Root>,
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
}

impl TwistedCharacterTable {
    /// The trivializing cochain: `mu(x) mu(y) / mu(xy) = theta(x, y)`.
    pub fn mu(&self) -> &[Root] {
        &self.mu
    }

    /// Row `i`, one value per element.
    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn num_irreps(&self) -> usize {
        self.rows.len()
    }
}

/// Checks the 2-cocycle identity on all triples; returns a violating triple.
pub fn check_2cocycle(h: &FiniteGroup, theta: &dyn Fn(usize, usize) -> Root) -> Option<(usize, usize, usize)> {
    let n = h.order();
    for x in 0..n {
        for y in 0..n {
            let xy = h.mul(x, y);
            let lhs0 = theta(x, y);
            for z in 0..n {
                let lhs = lhs0 * theta(xy, z);
                let rhs = theta(y, z) * theta(x, h.mul(y, z));
                if lhs != rhs {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Largest search space tried when solving for the trivializing cochain.
const SEARCH_CAP: u64 = 10_000_000;

/// Projective character table of `h` for the 2-cocycle `theta`.
///
/// Finds `mu` with `delta mu = theta` by solving the coboundary equations
/// over `Z_K`, where `K` is the value order of `theta` times the exponent of
/// `h`; twisted rows are `mu * chi` for the ordinary rows `chi` of `base`.
pub fn twisted_table(
    h: &FiniteGroup,
    base: &CharacterTable,
    theta: &dyn Fn(usize, usize) -> Root,
) -> Result<TwistedCharacterTable> {
    let n = h.order();
    let mut m = 1u32;
    let mut trivial = true;
    for x in 0..n {
        for y in 0..n {
            let t = theta(x, y);
            trivial &= t.is_one();
            m = m.lcm(&t.order());
        }
    }
    let mu = if trivial {
        vec![Root::ONE; n]
    } else {
        if let Some((x, y, z)) = check_2cocycle(h, theta) {
            return Err(Error::InvalidConfig(format!("not a 2-cocycle at ({x}, {y}, {z})")));
        }
        solve_coboundary(h, theta, m * h.exponent() as u32)?
    };
    for x in 0..n {
        for y in 0..n {
            if mu[x] * mu[y] * mu[h.mul(x, y)].inv() != theta(x, y) {
                return Err(Error::Internal("trivializing cochain does not reproduce the cocycle".into()));
            }
        }
    }
    let rows: Vec<Vec<Cyclotomic>> = (0..base.num_irreps())
        .map(|i| (0..n).map(|a| &mu[a].to_cyclotomic() * base.value(i, a)).collect())
        .collect();
    Ok(TwistedCharacterTable { mu, rows, degrees: base.degrees().to_vec() })
}

fn solve_coboundary(h: &FiniteGroup, theta: &dyn Fn(usize, usize) -> Root, k_mod: u32) -> Result<Vec<Root>> {
    let n = h.order();
    let k = k_mod as i64;
    let gens = if h.generators().is_empty() { h.small_generating_set() } else { h.generators().to_vec() };
    let ng = gens.len();
    let t = |x: usize, y: usize| theta(x, y).exp_at(k_mod) as i64;

    // affine form of log mu(x) in the unknown generator values
    let mut forms: Vec<Option<(Vec<i64>, i64)>> = vec![None; n];
    forms[0] = Some((vec![0; ng], 0));
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let (cx, kx) = forms[x].clone().unwrap();
        for (s, &gs) in gens.iter().enumerate() {
            let y = h.mul(x, gs);
            if forms[y].is_none() {
                let mut c = cx.clone();
                c[s] = (c[s] + 1).rem_euclid(k);
                // a(x s) = a(x) + a(s) - t(x, s)
                forms[y] = Some((c, (kx - t(x, gs)).rem_euclid(k)));
                queue.push_back(y);
            }
        }
    }
    let forms: Vec<(Vec<i64>, i64)> = forms.into_iter().map(|f| f.expect("generators span")).collect();

    // constraints a(x) + a(y) - a(xy) = t(x, y)
    let mut constraints: HashSet<(Vec<i64>, i64)> = HashSet::new();
    for x in 0..n {
        for y in 0..n {
            let xy = h.mul(x, y);
            let c: Vec<i64> = (0..ng).map(|s| (forms[x].0[s] + forms[y].0[s] - forms[xy].0[s]).rem_euclid(k)).collect();
            let rhs = (t(x, y) - forms[x].1 - forms[y].1 + forms[xy].1).rem_euclid(k);
            constraints.insert((c, rhs));
        }
    }
    let mut constraints: Vec<_> = constraints.into_iter().collect();
    constraints.sort();
    if let Some((_, rhs)) = constraints.iter().find(|(c, rhs)| c.iter().all(|&v| v == 0) && *rhs != 0) {
        return Err(Error::NontrivialCohomology(format!("inconsistent constant equation 0 = {rhs} mod {k}")));
    }
    let space = (k as u64).checked_pow(ng as u32).filter(|&s| s <= SEARCH_CAP).ok_or_else(|| {
        Error::NontrivialCohomology(format!("search space {k}^{ng} exceeds the solver limit"))
    })?;
    let mut values = vec![0i64; ng];
    for code in 0..space {
        let mut c = code;
        for v in values.iter_mut() {
            *v = (c % k as u64) as i64;
            c /= k as u64;
        }
        let ok = constraints.iter().all(|(coef, rhs)| {
            coef.iter().zip(&values).map(|(a, b)| a * b).sum::<i64>().rem_euclid(k) == *rhs
        });
        if ok {
            return Ok(forms
                .iter()
                .map(|(coef, c0)| {
                    let e = coef.iter().zip(&values).map(|(a, b)| a * b).sum::<i64>() + c0;
                    Root::new(k_mod, e)
                })
                .collect());
        }
    }
    Err(Error::NontrivialCohomology(format!("no 1-cochain with values in mu_{k} has coboundary theta")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedral::{build, GroupSpec};

    #[test]
    fn z2_table() {
        let g = FiniteGroup::cyclic_table(2);
        let t = character_table(&g).unwrap();
        let one = Cyclotomic::one();
        let m1 = Cyclotomic::from_integer(-1);
        assert_eq!(t.rows(), &[vec![one.clone(), one.clone()], vec![one, m1]]);
    }

    #[test]
    fn quaternion_group_degrees() {
        let g = build(&GroupSpec::BinaryDihedral(2)).unwrap().group;
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
    }

    #[test]
    fn binary_icosahedral_degrees() {
        let g = build(&GroupSpec::BinaryIcosahedral).unwrap().group;
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 2, 2, 3, 3, 4, 4, 5, 6]);
        assert!(t.check_orthogonality().is_ok());
        for d in t.degrees() {
            assert_eq!(120 % d, 0);
        }
    }

    #[test]
    fn regular_character_of_z3_contains_trivial_once() {
        let g = FiniteGroup::cyclic_table(3);
        let reg = vec![Cyclotomic::from_integer(3), Cyclotomic::zero(), Cyclotomic::zero()];
        let triv = vec![Cyclotomic::one(); 3];
        assert_eq!(inner_product_ordinary(&reg, &triv).unwrap(), Rational::ONE);
        let t = character_table(&g).unwrap();
        assert_eq!(inner_product_ordinary(&t.row_by_element(1), &t.row_by_element(2)).unwrap(), Rational::ZERO);
    }

    #[test]
    fn trivial_twist_gives_ordinary_table() {
        let g = FiniteGroup::cyclic_table(4);
        let t = character_table(&g).unwrap();
        let tw = twisted_table(&g, &t, &|_, _| Root::ONE).unwrap();
        assert!(tw.mu().iter().all(|m| m.is_one()));
        for i in 0..4 {
            assert_eq!(tw.row(i), &t.row_by_element(i)[..]);
        }
    }

    #[test]
    fn coboundary_of_random_cochain_on_q8_is_recovered() {
        let g = build(&GroupSpec::BinaryDihedral(2)).unwrap().group;
        let t = character_table(&g).unwrap();
        let nu: Vec<Root> = (0..8).map(|i| if i == 0 { Root::ONE } else { Root::new(8, (i * 5 + 3) as i64) }).collect();
        let theta = |x: usize, y: usize| nu[x] * nu[y] * nu[g.mul(x, y)].inv();
        let tw = twisted_table(&g, &t, &theta).unwrap();
        // every twisted row is nu times an ordinary character
        let mut expected: Vec<Vec<Cyclotomic>> = (0..t.num_irreps())
            .map(|i| (0..8).map(|a| &nu[a].to_cyclotomic() * t.value(i, a)).collect())
            .collect();
        let mut got = tw.rows().to_vec();
        let key = |r: &Vec<Cyclotomic>| format!("{r:?}");
        expected.sort_by_key(key);
        got.sort_by_key(key);
        assert_eq!(got, expected);
    }

    #[test]
    fn restriction_of_canonical_module_to_cyclic_eight() {
        let p = build(&GroupSpec::BinaryOctahedral).unwrap();
        let g = &p.group;
        let a = (0..g.order()).find(|&a| g.element_order(a) == 8).unwrap();
        let h = g.subgroup_generated(&[a]);
        let r = restrict(p.w.values(), &h);
        let local = h.position(a).unwrap();
        let z8 = &Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::root_of_unity(8, -1);
        let z83 = &Cyclotomic::root_of_unity(8, 3) + &Cyclotomic::root_of_unity(8, -3);
        assert!(r[local] == z8 || r[local] == z83);
        let trivial = g.trivial_subgroup();
        assert_eq!(restrict(p.w.values(), &trivial), vec![Cyclotomic::from_integer(2)]);
    }
}
