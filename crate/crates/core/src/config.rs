//! Run configuration shared by the command-line tool: group, normal
//! subgroup and cocycle, parsed from their string forms.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::cocycle::Cocycle3;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientMap, Subgroup};
use crate::polyhedral::{build_with_cap, GroupSpec, Polyhedral};
use crate::qdouble::Gtqd;

/// `trivial | center | full | gens:<word>,<word>,...`
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalSpec {
    Trivial,
    /// The subgroup `{I, -I}`.
    Center,
    Full,
    Gens(Vec<String>),
}

impl FromStr for NormalSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(NormalSpec::Trivial),
            "center" => Ok(NormalSpec::Center),
            "full" => Ok(NormalSpec::Full),
            _ => match s.strip_prefix("gens:") {
                Some(rest) if !rest.is_empty() => Ok(NormalSpec::Gens(rest.split(',').map(|w| w.trim().to_string()).collect())),
                _ => Err(Error::InvalidConfig(format!(
                    "normal subgroup '{s}': expected trivial, center, full or gens:<words>"
                ))),
            },
        }
    }
}

impl fmt::Display for NormalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalSpec::Trivial => write!(f, "trivial"),
            NormalSpec::Center => write!(f, "center"),
            NormalSpec::Full => write!(f, "full"),
            NormalSpec::Gens(g) => write!(f, "gens:{}", g.join(",")),
        }
    }
}

/// `trivial | cyclic:q`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleSpec {
    Trivial,
    Cyclic(i64),
}

impl FromStr for CocycleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "trivial" {
            return Ok(CocycleSpec::Trivial);
        }
        s.strip_prefix("cyclic:")
            .and_then(|q| q.parse().ok())
            .map(CocycleSpec::Cyclic)
            .ok_or_else(|| Error::InvalidConfig(format!("cocycle '{s}': expected trivial or cyclic:<integer>")))
    }
}

impl fmt::Display for CocycleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleSpec::Trivial => write!(f, "trivial"),
            CocycleSpec::Cyclic(q) => write!(f, "cyclic:{q}"),
        }
    }
}

/// Resolves an element name: an exact label (`g5`, `x`), or a word in the
/// generator aliases with optional integer exponents (`x2`, `xy`, `y-1x`).
pub fn parse_element(g: &FiniteGroup, word: &str) -> Result<usize> {
    if let Some(a) = g.find_label(word) {
        return Ok(a);
    }
    let bad = || Error::InvalidConfig(format!("unknown element '{word}'"));
    let chars: Vec<char> = word.chars().collect();
    if chars.is_empty() {
        return Err(bad());
    }
    let mut acc = g.identity();
    let mut i = 0;
    while i < chars.len() {
        let name = chars[i].to_string();
        let base = g.find_label(&name).filter(|_| chars[i].is_ascii_alphabetic()).ok_or_else(bad)?;
        i += 1;
        let start = i;
        if i < chars.len() && chars[i] == '-' {
            i += 1;
        }
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let exp: i64 = if i == start {
            1
        } else {
            chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())?
        };
        acc = g.mul(acc, g.pow(base, exp));
    }
    Ok(acc)
}

/// A fully specified configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: GroupSpec,
    pub normal: NormalSpec,
    pub cocycle: CocycleSpec,
    pub cap: usize,
}

/// The objects a configuration resolves to.
#[derive(Clone, Debug)]
pub struct Setup {
    pub polyhedral: Polyhedral,
    pub normal: Subgroup,
    pub algebra: Gtqd,
}

impl RunConfig {
    pub fn resolve_normal(&self, p: &Polyhedral) -> Result<Subgroup> {
        let g = &p.group;
        let n = match &self.normal {
            NormalSpec::Trivial => g.trivial_subgroup(),
            NormalSpec::Center => p.involution_subgroup().map_err(|_| {
                Error::InvalidConfig(format!("{} has no element -I, so 'center' is unavailable", self.group))
            })?,
            NormalSpec::Full => g.whole(),
            NormalSpec::Gens(words) => {
                let gens = words.iter().map(|w| parse_element(g, w)).collect::<Result<Vec<_>>>()?;
                g.subgroup_generated(&gens)
            }
        };
        if !g.is_normal(&n) {
            return Err(Error::NotNormal(format!("{} does not generate a normal subgroup", self.normal)));
        }
        Ok(n)
    }

    /// The cocycle on `G/N`; cyclic cocycles use the first generator of the
    /// cyclic quotient in index order.
    pub fn resolve_cocycle(&self, quotient: &FiniteGroup) -> Result<Cocycle3> {
        match self.cocycle {
            CocycleSpec::Trivial => Ok(Cocycle3::trivial(quotient.order())),
            CocycleSpec::Cyclic(q) => {
                let n = quotient.order();
                let gen = (0..n).find(|&a| quotient.element_order(a) == n).ok_or_else(|| {
                    Error::InvalidConfig(format!(
                        "cocycle cyclic:{q} needs a cyclic quotient G/N, but G/N of order {n} is not cyclic"
                    ))
                })?;
                Cocycle3::cyclic_on(quotient, gen, q)
            }
        }
    }

    pub fn build(&self) -> Result<Setup> {
        let polyhedral = build_with_cap(&self.group, self.cap)?;
        let normal = self.resolve_normal(&polyhedral)?;
        let g: Arc<FiniteGroup> = polyhedral.group.clone();
        let q = QuotientMap::new(&g, &normal)?;
        let w = self.resolve_cocycle(q.target())?;
        let algebra = Gtqd::from_quotient(g, q, w)?;
        Ok(Setup { polyhedral, normal, algebra })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    fn config(group: &str, normal: &str, cocycle: &str) -> RunConfig {
        RunConfig {
            group: GroupSpec::parse(group).unwrap(),
            normal: normal.parse().unwrap(),
            cocycle: cocycle.parse().unwrap(),
            cap: DEFAULT_CAP,
        }
    }

    #[test]
    fn parses_grammar() {
        assert_eq!("gens:x2,y".parse::<NormalSpec>().unwrap(), NormalSpec::Gens(vec!["x2".into(), "y".into()]));
        assert!("gens:".parse::<NormalSpec>().is_err());
        assert_eq!("cyclic:3".parse::<CocycleSpec>().unwrap(), CocycleSpec::Cyclic(3));
        assert!("cyclic:x".parse::<CocycleSpec>().is_err());
    }

    #[test]
    fn element_words() {
        let p = build_with_cap(&GroupSpec::BinaryDihedral(3), DEFAULT_CAP).unwrap();
        let g = &p.group;
        let x = g.find_label("x").unwrap();
        assert_eq!(parse_element(g, "x2").unwrap(), g.mul(x, x));
        assert_eq!(parse_element(g, "x-1").unwrap(), g.inv(x));
        assert_eq!(parse_element(g, "g0").unwrap(), 0);
        assert!(parse_element(g, "q").is_err());
    }

    #[test]
    fn builds_configurations() {
        let s = config("bd:3", "gens:x2", "trivial").build().unwrap();
        assert_eq!(s.normal.order(), 3);
        let s = config("cyclic:4", "center", "cyclic:1").build().unwrap();
        assert_eq!(s.algebra.dim(), 8);
        assert!(config("cyclic:5", "center", "trivial").build().is_err());
        assert!(config("bt", "center", "cyclic:1").build().is_err());
        assert!(config("bd:3", "gens:y", "trivial").build().is_err());
    }
}
