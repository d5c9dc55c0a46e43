//! The finite subgroups of SU(2): cyclic, binary dihedral, and the three
//! binary polyhedral groups, realized by explicit unimodular matrices.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, DEFAULT_CAP};
use crate::matrix::Mat2;
use crate::rational::Rational;

/// Isomorphism type of a finite subgroup of SU(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupSpec {
    Cyclic(u32),
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match *self {
            GroupSpec::Cyclic(m) => m as usize,
            GroupSpec::BinaryDihedral(n) => 4 * n as usize,
            GroupSpec::BinaryTetrahedral => 24,
            GroupSpec::BinaryOctahedral => 48,
            GroupSpec::BinaryIcosahedral => 120,
        }
    }

    /// Parses `cyclic:m`, `bd:n`, `bt`, `bo` or `bi`.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let bad = || Error::InvalidConfig(format!("unknown group `{s}`; expected cyclic:m, bd:n, bt, bo or bi"));
        let spec = match s.split_once(':') {
            Some(("cyclic", m)) => GroupSpec::Cyclic(m.parse().map_err(|_| bad())?),
            Some(("bd", n)) => GroupSpec::BinaryDihedral(n.parse().map_err(|_| bad())?),
            None if s == "bt" => GroupSpec::BinaryTetrahedral,
            None if s == "bo" => GroupSpec::BinaryOctahedral,
            None if s == "bi" => GroupSpec::BinaryIcosahedral,
            _ => return Err(bad()),
        };
        match spec {
            GroupSpec::Cyclic(0) | GroupSpec::BinaryDihedral(0) => {
                Err(Error::InvalidConfig("group parameter must be positive".into()))
            }
            _ => Ok(spec),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(m) => write!(f, "Z{m}"),
            GroupSpec::BinaryDihedral(n) => write!(f, "BD{n}"),
            GroupSpec::BinaryTetrahedral => write!(f, "2T"),
            GroupSpec::BinaryOctahedral => write!(f, "2O"),
            GroupSpec::BinaryIcosahedral => write!(f, "2I"),
        }
    }
}

/// The natural 2-dimensional module: its character, one value per element.
///
/// For cyclic groups this is a faithful linear character plus its dual,
/// which coincides with the matrix trace of the chosen embedding.
#[derive(Clone, Debug)]
pub struct CanonicalW {
    values: Vec<Cyclotomic>,
}

impl CanonicalW {
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn dimension(&self) -> usize {
        2
    }

    /// Values at the class representatives, in class order.
    pub fn class_values(&self, g: &FiniteGroup) -> Vec<Cyclotomic> {
        g.conjugacy_classes().iter().map(|c| self.values[c.representative].clone()).collect()
    }
}

/// A constructed group with its natural module.
#[derive(Clone, Debug)]
pub struct Polyhedral {
    pub spec: GroupSpec,
    pub group: Arc<FiniteGroup>,
    pub w: CanonicalW,
    central_involution: Option<usize>,
}

impl Polyhedral {
    /// Index of `-I`; fails for cyclic groups of odd order.
    pub fn central_involution(&self) -> Result<usize> {
        self.central_involution.ok_or(Error::NoCentralInvolution)
    }

    /// The subgroup `{I, -I}`.
    pub fn involution_subgroup(&self) -> Result<Subgroup> {
        let t = self.central_involution()?;
        Ok(self.group.subgroup_generated(&[t]))
    }
}

fn q(a: Rational) -> Cyclotomic {
    Cyclotomic::from_rational(a)
}

fn generators(spec: &GroupSpec) -> Vec<Mat2> {
    let zero = Cyclotomic::zero();
    let half = q(Rational::new(1, 2));
    let unit_i = Mat2::quaternion(&zero, &Cyclotomic::one(), &zero, &zero);
    let hurwitz = {
        let h = half.clone();
        Mat2::quaternion(&q(Rational::new(-1, 2)), &h, &h, &h)
    };
    let rotation = |m: u32| {
        let z = Cyclotomic::root_of_unity(m, 1);
        Mat2::diag(z.clone(), z.conj())
    };
    match *spec {
        GroupSpec::Cyclic(m) => vec![rotation(m)],
        GroupSpec::BinaryDihedral(n) => vec![
            rotation(2 * n),
            Mat2::new(zero.clone(), Cyclotomic::one(), Cyclotomic::from_integer(-1), zero),
        ],
        GroupSpec::BinaryTetrahedral => vec![unit_i, hurwitz],
        GroupSpec::BinaryOctahedral => vec![unit_i, hurwitz, rotation(8)],
        GroupSpec::BinaryIcosahedral => {
            let phi = &Cyclotomic::root_of_unity(10, 1) + &Cyclotomic::root_of_unity(10, -1);
            let phi_inv = &phi - &Cyclotomic::one();
            let sigma = Mat2::quaternion(&(&phi * &half), &(&phi_inv * &half), &half, &zero);
            vec![unit_i, hurwitz, sigma]
        }
    }
}

/// Builds the group, verifying its order and center.
pub fn build(spec: &GroupSpec) -> Result<Polyhedral> {
    build_with_cap(spec, DEFAULT_CAP)
}

pub fn build_with_cap(spec: &GroupSpec, cap: usize) -> Result<Polyhedral> {
    let group = FiniteGroup::generate(&generators(spec), cap)?;
    if group.order() != spec.order() {
        return Err(Error::Internal(format!("{spec} generated a group of order {}", group.order())));
    }
    let minus_one = Mat2::scalar(Cyclotomic::from_integer(-1));
    let central_involution = (0..group.order()).find(|&a| group.matrix(a) == Some(&minus_one));
    let non_cyclic = !matches!(spec, GroupSpec::Cyclic(_) | GroupSpec::BinaryDihedral(1));
    if non_cyclic && (group.center().order() != 2 || central_involution.is_none()) {
        return Err(Error::Internal(format!("{spec} does not have center {{I, -I}}")));
    }
    let values = (0..group.order()).map(|a| group.matrix(a).unwrap().trace()).collect();
    Ok(Polyhedral { spec: *spec, group: Arc::new(group), w: CanonicalW { values }, central_involution })
}

/// Identifies the isomorphism type of a finite subgroup of SU(2).
pub fn recognize(h: &FiniteGroup) -> Result<GroupSpec> {
    let n = h.order();
    let max_order = (0..n).map(|a| h.element_order(a)).max().unwrap_or(1);
    if max_order == n {
        return Ok(GroupSpec::Cyclic(n as u32));
    }
    if n.is_multiple_of(4) && max_order == n / 2 {
        return Ok(GroupSpec::BinaryDihedral((n / 4) as u32));
    }
    let classes = h.conjugacy_classes().len();
    match (n, classes) {
        (24, 7) => Ok(GroupSpec::BinaryTetrahedral),
        (48, 8) => Ok(GroupSpec::BinaryOctahedral),
        (120, 9) => Ok(GroupSpec::BinaryIcosahedral),
        _ => Err(Error::Unrecognized(format!("order {n} with {classes} classes"))),
    }
}

/// [`recognize`] applied to a subgroup of `parent`.
pub fn recognize_subgroup(parent: &FiniteGroup, h: &Subgroup) -> Result<GroupSpec> {
    recognize(&h.as_group(parent))
}
