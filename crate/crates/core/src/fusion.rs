//! Simple modules of `D^w(G, N)`, their characters, and fusion rules.
//!
//! A simple module is induced from a projective irreducible of the
//! stabilizer `C = {x in G : gbar^x = gbar}` of a class representative, with
//! 2-cocycle `θ'(x, y) = θ_gbar(xbar, ybar)`. Its character at
//! `e(kbar)⋈x` with `kbar = y gbar y^-1` is
//!
//! `θ'_{kbar}(x, y) θ'_gbar(y, t)^-1 χ(t)`, `t = y^-1 x y`,
//!
//! and zero unless `kbar` is in the class and `t` lies in `C`. In every
//! configuration the phase is 1; each evaluation computes it and reports a
//! failure as an internal error.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde::Serialize;

use crate::chartab::{character_table, twisted_table, CharacterTable, TwistedCharacterTable};
use crate::cyclotomic::{Cyclotomic, Root};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::par::Exec;
use crate::polyhedral::{recognize, GroupSpec};
use crate::qdouble::Gtqd;
use crate::rational::Rational;

static DUAL_EVALUATIONS: AtomicU64 = AtomicU64::new(0);

/// Number of character evaluations in this process whose phase was
/// computed and found to be 1.
pub fn dual_evaluation_count() -> u64 {
    DUAL_EVALUATIONS.load(Ordering::Relaxed)
}

/// A simple module: a class of `G/N` and a row of the stabilizer's twisted
/// character table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IrrepLabel {
    pub class: usize,
    pub row: usize,
    pub dimension: usize,
}

/// A class of `G/N` with its stabilizer data.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub representative: usize,
    pub members: Vec<usize>,
    /// For each member `kbar`, an element `y` of `G` with `y gbar y^-1 = kbar`.
    pub conjugators: Vec<usize>,
    pub stabilizer: Subgroup,
    pub stabilizer_group: FiniteGroup,
    pub table: CharacterTable,
    pub twisted: TwistedCharacterTable,
}

impl ClassInfo {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Isomorphism type of the stabilizer, when it is a finite subgroup of SU(2).
    pub fn stabilizer_type(&self) -> Result<GroupSpec> {
        recognize(&self.stabilizer_group)
    }
}

/// A character of a `D^w(G, N)`-module, evaluated lazily.
#[derive(Clone, Debug)]
pub enum ModuleCharacter {
    Simple(IrrepLabel),
    /// A `G`-module on which `e(kbar)⋈x` acts as `δ(kbar, 1) ρ(x)`; holds the
    /// character of `ρ`, one value per element of `G`.
    GModule(Vec<Cyclotomic>),
    Tensor(Box<ModuleCharacter>, Box<ModuleCharacter>),
}

/// The simple modules of one algebra.
#[derive(Clone, Debug)]
pub struct SimpleModules {
    algebra: Gtqd,
    classes: Vec<ClassInfo>,
    class_of: Vec<usize>,
    labels: Vec<IrrepLabel>,
}

impl SimpleModules {
    pub fn new(algebra: &Gtqd) -> Result<SimpleModules> {
        let g = algebra.group().clone();
        let q = algebra.quotient();
        let k = q.target();
        let mut classes = Vec::new();
        let mut class_of = vec![0; k.order()];
        for (ci, c) in k.conjugacy_classes().iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci;
            }
            let rep = c.representative;
            let stabilizer = q.centralizer(rep);
            let stabilizer_group = stabilizer.as_group(&g);
            let table = character_table(&stabilizer_group)?;
            let members = stabilizer.members().to_vec();
            let cochains = algebra.cochains();
            let theta = |x: usize, y: usize| cochains.theta(rep, q.project(members[x]), q.project(members[y]));
            let twisted = twisted_table(&stabilizer_group, &table, &theta)?;
            classes.push(ClassInfo {
                representative: rep,
                members: c.members.clone(),
                conjugators: c.conjugators.iter().map(|&y| q.section(y)).collect(),
                stabilizer,
                stabilizer_group,
                table,
                twisted,
            });
        }
        let n = g.order();
        let labels = classes
            .iter()
            .enumerate()
            .flat_map(|(ci, c)| {
                let index = n / c.stabilizer.order();
                c.twisted.degrees().iter().enumerate().map(move |(row, &d)| IrrepLabel {
                    class: ci,
                    row,
                    dimension: index * d as usize,
                })
            })
            .collect();
        Ok(SimpleModules { algebra: algebra.clone(), classes, class_of, labels })
    }

    pub fn algebra(&self) -> &Gtqd {
        &self.algebra
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.algebra.group()
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    /// Class index of an element of `G/N`.
    pub fn class_of(&self, kbar: usize) -> usize {
        self.class_of[kbar]
    }

    /// Labels ordered by class, then by row.
    pub fn labels(&self) -> &[IrrepLabel] {
        &self.labels
    }

    pub fn labels_of_class(&self, class: usize) -> impl Iterator<Item = &IrrepLabel> {
        self.labels.iter().filter(move |l| l.class == class)
    }

    pub fn label(&self, class: usize, row: usize) -> Result<IrrepLabel> {
        self.labels
            .iter()
            .find(|l| l.class == class && l.row == row)
            .copied()
            .ok_or_else(|| Error::InvalidConfig(format!("no simple module {class}/{row}")))
    }

    /// The trivial module: identity class, trivial stabilizer character.
    pub fn trivial_label(&self) -> IrrepLabel {
        self.labels[0]
    }

    /// Text form `<class rep label>/<row>`.
    pub fn label_name(&self, l: &IrrepLabel) -> String {
        let rep = self.classes[l.class].representative;
        format!("{}/{}", self.algebra.quotient().target().label(rep), l.row)
    }

    /// `Σ dim² = |G/N| |G|`.
    pub fn dimension_count(&self) -> usize {
        self.labels.iter().map(|l| l.dimension * l.dimension).sum()
    }

    /// Character of a simple module at `e(kbar)⋈x`, using the stored conjugator.
    pub fn character_value(&self, label: &IrrepLabel, kbar: usize, x: usize) -> Result<Cyclotomic> {
        let c = &self.classes[label.class];
        let Ok(pos) = c.members.binary_search(&kbar) else { return Ok(Cyclotomic::zero()) };
        self.character_value_with_conjugator(label, kbar, x, c.conjugators[pos])
    }

    /// Same as [`SimpleModules::character_value`] with an explicit conjugator
    /// `y`, which must satisfy `y gbar y^-1 = kbar` in `G/N`.
    pub fn character_value_with_conjugator(&self, label: &IrrepLabel, kbar: usize, x: usize, y: usize) -> Result<Cyclotomic> {
        let c = &self.classes[label.class];
        let g = self.group();
        let q = self.algebra.quotient();
        let k = q.target();
        if k.conj(q.project(y), c.representative) != kbar {
            return Err(Error::InvalidConfig("conjugator does not carry the class representative to the element".into()));
        }
        let t = g.mul(g.mul(g.inv(y), x), y);
        let Some(local) = c.stabilizer.position(t) else { return Ok(Cyclotomic::zero()) };
        let value = &c.twisted.row(label.row)[local];
        let th = self.algebra.cochains();
        let phase: Root = th.theta(kbar, q.project(x), q.project(y)) * th.theta(c.representative, q.project(y), q.project(t)).inv();
        let laden = if phase.is_one() { value.clone() } else { value.mul(&phase.to_cyclotomic()) };
        if &laden != value {
            return Err(Error::Internal(format!(
                "theta phase {phase:?} at class {}, x = {}, y = {}",
                self.label_name(label),
                g.label(x),
                g.label(y)
            )));
        }
        DUAL_EVALUATIONS.fetch_add(1, Ordering::Relaxed);
        Ok(value.clone())
    }

    /// Value of any module character at `e(kbar)⋈x`.
    pub fn value(&self, chi: &ModuleCharacter, kbar: usize, x: usize) -> Result<Cyclotomic> {
        match chi {
            ModuleCharacter::Simple(l) => self.character_value(l, kbar, x),
            ModuleCharacter::GModule(v) => Ok(if kbar == 0 { v[x].clone() } else { Cyclotomic::zero() }),
            ModuleCharacter::Tensor(a, b) => {
                let k = self.algebra.quotient().target();
                let xb = self.algebra.quotient().project(x);
                let bs: Vec<usize> = match self.support_class(b) {
                    Some(ci) => self.classes[ci].members.clone(),
                    None => (0..k.order()).collect(),
                };
                let mut s = Cyclotomic::zero();
                for bb in bs {
                    let vb = self.value(b, bb, x)?;
                    if vb.is_zero() {
                        continue;
                    }
                    let aa = k.mul(kbar, k.inv(bb));
                    let va = self.value(a, aa, x)?;
                    if va.is_zero() {
                        continue;
                    }
                    let gamma = self.algebra.cochains().gamma(xb, aa, bb);
                    let term = va.mul(&vb);
                    s = s.add(&if gamma.is_one() { term } else { term.mul(&gamma.to_cyclotomic()) });
                }
                Ok(s)
            }
        }
    }

    fn support_class(&self, chi: &ModuleCharacter) -> Option<usize> {
        match chi {
            ModuleCharacter::Simple(l) => Some(l.class),
            ModuleCharacter::GModule(_) => Some(self.class_of[0]),
            ModuleCharacter::Tensor(..) => None,
        }
    }

    /// Points `(kbar, x)` where a character supported on `class` can be nonzero.
    fn support_points(&self, class: usize) -> Vec<(usize, usize)> {
        let c = &self.classes[class];
        let g = self.group();
        let mut pts = Vec::with_capacity(c.size() * c.stabilizer.order());
        for (&kbar, &y) in c.members.iter().zip(&c.conjugators) {
            for &t in c.stabilizer.members() {
                pts.push((kbar, g.mul(g.mul(y, t), g.inv(y))));
            }
        }
        pts
    }

    /// `(1/|G|) Σ_{kbar, x} χ1(e(kbar)⋈x) conj(χ2(e(kbar)⋈x))`, summed over
    /// the points where one of the two can be nonzero.
    pub fn inner_product(&self, chi1: &ModuleCharacter, chi2: &ModuleCharacter) -> Result<Rational> {
        let pts: Vec<(usize, usize)> = match self.support_class(chi2).or_else(|| self.support_class(chi1)) {
            Some(ci) => self.support_points(ci),
            None => {
                let n = self.group().order();
                (0..self.algebra.quotient_order()).flat_map(|k| (0..n).map(move |x| (k, x))).collect()
            }
        };
        let mut s = Cyclotomic::zero();
        for (kbar, x) in pts {
            let b = self.value(chi2, kbar, x)?;
            if b.is_zero() {
                continue;
            }
            let a = self.value(chi1, kbar, x)?;
            s = s.add(&a.mul(&b.conj()));
        }
        let r = s.as_rational().ok_or_else(|| Error::Internal(format!("inner product {s} is not rational")))?;
        Ok(&r / &Rational::from_integer(self.group().order() as i64))
    }

    pub fn tensor_character(&self, v: &IrrepLabel, w: &IrrepLabel) -> ModuleCharacter {
        ModuleCharacter::Tensor(Box::new(ModuleCharacter::Simple(*v)), Box::new(ModuleCharacter::Simple(*w)))
    }

    /// Multiplicity of `U` in `V ⊗ W`, from the tensor character.
    pub fn fusion_coefficient(&self, v: &IrrepLabel, w: &IrrepLabel, u: &IrrepLabel) -> Result<u64> {
        let r = self.inner_product(&self.tensor_character(v, w), &ModuleCharacter::Simple(*u))?;
        as_multiplicity(&r, || format!("{} ⊗ {} -> {}", self.label_name(v), self.label_name(w), self.label_name(u)))
    }

    /// Multiplicity of `U` in `V ⊗ W` for a `G`-module `W` (character `w`,
    /// one value per element of `G`), computed in the stabilizer:
    /// `(1/|C|) Σ_{t in C} χ_V(t) χ_W(t) conj(χ_U(t))`, and 0 when `V` and `U`
    /// lie over different classes.
    ///
    /// Debug builds also evaluate the tensor-character route and report any
    /// disagreement as an internal error.
    pub fn fusion_with_g_module(&self, v: &IrrepLabel, w: &[Cyclotomic], u: &IrrepLabel) -> Result<u64> {
        let local = self.local_fusion(v, w, u)?;
        if cfg!(debug_assertions) {
            let general = self.fusion_with_g_module_general(v, w, u)?;
            if general != local {
                return Err(Error::Internal(format!(
                    "stabilizer fusion {local} differs from tensor-character fusion {general} for {} and {}",
                    self.label_name(v),
                    self.label_name(u)
                )));
            }
        }
        Ok(local)
    }

    fn local_fusion(&self, v: &IrrepLabel, w: &[Cyclotomic], u: &IrrepLabel) -> Result<u64> {
        if v.class != u.class {
            return Ok(0);
        }
        let c = &self.classes[v.class];
        let cv = c.twisted.row(v.row);
        let cu = c.twisted.row(u.row);
        let mut s = Cyclotomic::zero();
        for (i, &t) in c.stabilizer.members().iter().enumerate() {
            s = s.add(&cv[i].mul(&w[t]).mul(&cu[i].conj()));
        }
        let r = s.as_rational().ok_or_else(|| Error::Internal(format!("stabilizer fusion sum {s} is not rational")))?;
        let r = &r / &Rational::from_integer(c.stabilizer.order() as i64);
        as_multiplicity(&r, || format!("{} ⊗ W -> {}", self.label_name(v), self.label_name(u)))
    }

    /// The same multiplicity through the tensor character of `V ⊗ W`.
    pub fn fusion_with_g_module_general(&self, v: &IrrepLabel, w: &[Cyclotomic], u: &IrrepLabel) -> Result<u64> {
        let chi = ModuleCharacter::Tensor(
            Box::new(ModuleCharacter::Simple(*v)),
            Box::new(ModuleCharacter::GModule(w.to_vec())),
        );
        let r = self.inner_product(&chi, &ModuleCharacter::Simple(*u))?;
        as_multiplicity(&r, || format!("{} ⊗ W -> {}", self.label_name(v), self.label_name(u)))
    }

    /// Gram matrix of the listed simple characters.
    pub fn gram_matrix(&self, labels: &[IrrepLabel], exec: Exec) -> Result<Vec<Vec<Rational>>> {
        exec.map(labels, |a| {
            labels
                .iter()
                .map(|b| self.inner_product(&ModuleCharacter::Simple(*a), &ModuleCharacter::Simple(*b)))
                .collect::<Result<Vec<_>>>()
        })
        .into_iter()
        .collect()
    }

    /// All nonzero `N_{VW}^U` as `(V, W, U, multiplicity)` label indices.
    pub fn fusion_tensor(&self, exec: Exec) -> Result<Vec<(usize, usize, usize, u64)>> {
        let n = self.labels.len();
        let k = self.algebra.quotient().target();
        // U can occur only on classes meeting K_V K_W
        let reachable = |cv: usize, cw: usize| -> Vec<bool> {
            let mut r = vec![false; self.classes.len()];
            for &a in &self.classes[cv].members {
                for &b in &self.classes[cw].members {
                    r[self.class_of[k.mul(a, b)]] = true;
                }
            }
            r
        };
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..n).map(move |w| (v, w))).collect();
        let rows = exec.map(&pairs, |&(v, w)| -> Result<Vec<(usize, usize, usize, u64)>> {
            let (lv, lw) = (self.labels[v], self.labels[w]);
            let reach = reachable(lv.class, lw.class);
            let mut out = Vec::new();
            for (u, lu) in self.labels.iter().enumerate() {
                if reach[lu.class] {
                    let m = self.fusion_coefficient(&lv, &lw, lu)?;
                    if m > 0 {
                        out.push((v, w, u, m));
                    }
                }
            }
            Ok(out)
        });
        let mut all = Vec::new();
        for r in rows {
            all.extend(r?);
        }
        Ok(all)
    }

    pub fn labels_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.labels
                .iter()
                .map(|l| {
                    let c = &self.classes[l.class];
                    serde_json::json!({
                        "name": self.label_name(l),
                        "class": l.class,
                        "class_rep": self.algebra.quotient().target().label(c.representative),
                        "row": l.row,
                        "stabilizer_degree": c.twisted.degrees()[l.row],
                        "dimension": l.dimension,
                    })
                })
                .collect(),
        )
    }
}

fn as_multiplicity(r: &Rational, what: impl Fn() -> String) -> Result<u64> {
    match r.to_i64() {
        Some(m) if r.is_integer() && m >= 0 => Ok(m as u64),
        _ => Err(Error::Internal(format!("multiplicity {r} is not a nonnegative integer for {}", what()))),
    }
}
