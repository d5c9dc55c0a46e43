#![allow(dead_code)]

use std::collections::BTreeSet;

use gtqd::cocycle::Cocycle3;
use gtqd::polyhedral::{build, GroupSpec, Polyhedral};
use gtqd::qdouble::Gtqd;
use gtqd::{FiniteGroup, QuotientMap, Subgroup};

pub struct Config {
    pub name: String,
    pub poly: Polyhedral,
    pub normal: Subgroup,
    pub q: i64,
}

impl Config {
    pub fn algebra(&self) -> Gtqd {
        algebra(&self.poly, &self.normal, self.q)
    }
}

pub fn cyclic_generator(k: &FiniteGroup) -> Option<usize> {
    (0..k.order()).find(|&a| k.element_order(a) == k.order())
}

/// `D^w(G, N)` with the cyclic cocycle of exponent `q` on `G/N`, which
/// must be cyclic unless `q = 0`.
pub fn algebra(p: &Polyhedral, normal: &Subgroup, q: i64) -> Gtqd {
    let quot = QuotientMap::new(&p.group, normal).unwrap();
    let k = quot.target();
    let w = if q == 0 {
        Cocycle3::trivial(k.order())
    } else {
        Cocycle3::cyclic_on(k, cyclic_generator(k).unwrap(), q).unwrap()
    };
    Gtqd::from_quotient(p.group.clone(), quot, w).unwrap()
}

pub fn center_algebra(spec: GroupSpec) -> Gtqd {
    let p = build(&spec).unwrap();
    let n = p.involution_subgroup().unwrap();
    algebra(&p, &n, 0)
}

/// The groups of order at most `max_order` among cyclic groups, binary
/// dihedral groups and the binary polyhedral groups.
pub fn groups(max_order: usize) -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = (1..=max_order as u32).filter(|&m| m <= 12).map(GroupSpec::Cyclic).collect();
    out.extend((2..=12u32).filter(|&n| 4 * n as usize <= max_order).map(GroupSpec::BinaryDihedral));
    for s in [GroupSpec::BinaryTetrahedral, GroupSpec::BinaryOctahedral, GroupSpec::BinaryIcosahedral] {
        if s.order() <= max_order {
            out.push(s);
        }
    }
    out
}

/// Every normal subgroup among: trivial, `{±I}`, the whole group, and the
/// normal cyclic subgroups with cyclic quotient. Paired with every cyclic
/// cocycle exponent when the quotient is cyclic.
pub fn sweep(max_order: usize) -> Vec<Config> {
    let mut out = Vec::new();
    for spec in groups(max_order) {
        let p = build(&spec).unwrap();
        let g = p.group.clone();
        let mut normals: Vec<Subgroup> = vec![g.trivial_subgroup(), g.whole()];
        if let Ok(c) = p.involution_subgroup() {
            normals.push(c);
        }
        for a in 0..g.order() {
            let n = g.subgroup_generated(&[a]);
            if g.is_normal(&n) && QuotientMap::new(&g, &n).unwrap().target().is_cyclic() {
                normals.push(n);
            }
        }
        let mut seen = BTreeSet::new();
        for n in normals {
            if !seen.insert(n.members().to_vec()) {
                continue;
            }
            let k = QuotientMap::new(&g, &n).unwrap().target().clone();
            let qs: Vec<i64> = if k.is_cyclic() && k.order() > 1 { (0..k.order() as i64).collect() } else { vec![0] };
            for q in qs {
                out.push(Config {
                    name: format!("{spec} |N|={} q={q}", n.order()),
                    poly: p.clone(),
                    normal: n.clone(),
                    q,
                });
            }
        }
    }
    out
}
