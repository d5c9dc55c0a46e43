//! Acceptance run: one pass/fail line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gtqd::chartab::restrict;
use gtqd::cocycle::check_theta_conjugation_identity;
use gtqd::fusion::{dual_evaluation_count, SimpleModules};
use gtqd::mckay::{classical_mckay, classify_ade, verify_orbifold_mckay, McKayGraph};
use gtqd::polyhedral::{build, GroupSpec};
use gtqd::qdouble::{VerifyMode, DEFAULT_SAMPLES};
use gtqd::{Exec, Rational};

use common::{algebra, center_algebra, sweep};

const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn six() -> Vec<GroupSpec> {
    vec![
        GroupSpec::Cyclic(6),
        GroupSpec::BinaryDihedral(3),
        GroupSpec::BinaryDihedral(4),
        GroupSpec::BinaryTetrahedral,
        GroupSpec::BinaryOctahedral,
        GroupSpec::BinaryIcosahedral,
    ]
}

fn ac1() -> Outcome {
    let expected = [18, 16, 32, 24, 34, 40];
    let mut slowest = Duration::ZERO;
    for (spec, want) in six().into_iter().zip(expected) {
        let start = Instant::now();
        let a = center_algebra(spec);
        let m = SimpleModules::new(&a).map_err(|e| e.to_string())?;
        let got = m.labels().len();
        let took = start.elapsed();
        slowest = slowest.max(took);
        if got != want {
            return Err(format!("{spec}/center: {got} simple modules, expected {want}"));
        }
        if m.dimension_count() != a.quotient_order() * a.group_order() {
            return Err(format!("{spec}/center: squared dimensions do not sum to the algebra dimension"));
        }
        if took > Duration::from_secs(60) {
            return Err(format!("{spec}/center took {took:?}"));
        }
    }
    Ok(format!("counts 18 16 32 24 34 40, slowest {slowest:.2?}"))
}

fn ac2() -> Outcome {
    let exec = Exec::default();
    let mut runs: Vec<(String, gtqd::qdouble::Gtqd, gtqd::polyhedral::Polyhedral)> = Vec::new();
    for spec in six() {
        let p = build(&spec).unwrap();
        runs.push((format!("{spec}/center"), center_algebra(spec), p));
    }
    for spec in [GroupSpec::BinaryTetrahedral, GroupSpec::BinaryOctahedral] {
        let p = build(&spec).unwrap();
        runs.push((format!("{spec}/trivial"), algebra(&p, &p.group.trivial_subgroup(), 0), p.clone()));
        runs.push((format!("{spec}/full"), algebra(&p, &p.group.whole(), 0), p));
    }
    for (name, a, p) in &runs {
        let m = SimpleModules::new(a).map_err(|e| e.to_string())?;
        let report = verify_orbifold_mckay(&m, p.w.values(), exec).map_err(|e| e.to_string())?;
        if let Some(c) = report.clauses.iter().find(|c| !c.passed) {
            return Err(format!("{name}: {} fails: {}", c.name, c.witness.clone().unwrap_or_default()));
        }
    }

    // 2O over {±I}: the diagrams, also derived from the centralizers directly
    let p = build(&GroupSpec::BinaryOctahedral).unwrap();
    let a = center_algebra(GroupSpec::BinaryOctahedral);
    let m = SimpleModules::new(&a).map_err(|e| e.to_string())?;
    let graph = McKayGraph::build(&m, p.w.values(), exec).map_err(|e| e.to_string())?;
    let mut from_graph: Vec<String> = graph
        .components
        .iter()
        .map(|c| c.diagram.clone().map(|d| d.to_string()).unwrap_or_else(|e| e))
        .collect();
    let mut from_oracle = Vec::new();
    for c in m.classes() {
        let w = restrict(p.w.values(), &c.stabilizer);
        let adj = classical_mckay(&c.stabilizer_group, &w).map_err(|e| e.to_string())?;
        from_oracle.push(classify_ade(&adj).map_err(|e| e.to_string())?.to_string());
    }
    let mut expected: Vec<String> = ["E~_7", "D~_4", "D~_6", "A~_7", "A~_5"].iter().map(|s| s.to_string()).collect();
    from_graph.sort();
    from_oracle.sort();
    expected.sort();
    if from_graph != expected || from_oracle != expected {
        return Err(format!("2O/center diagrams {from_graph:?}, centralizer oracle {from_oracle:?}"));
    }
    Ok(format!("{} configurations, 2O/center components {}", runs.len(), expected.join(" ")))
}

fn ac3() -> Outcome {
    let configs = sweep(120);
    let mut nontrivial = 0;
    for c in &configs {
        let a = c.algebra();
        if !a.omega().is_trivial() {
            nontrivial += 1;
        }
        if let Err(w) = check_theta_conjugation_identity(a.group(), a.quotient(), a.cochains()) {
            return Err(format!("{}: phase {:?} at class rep {}, t={}, w={}", c.name, w.value, w.class_rep, w.t, w.w));
        }
    }
    // the character evaluations made by the other criteria all recompute the phase
    let before = dual_evaluation_count();
    for c in configs.iter().filter(|c| c.q != 0 && c.poly.group.order() <= 24) {
        let m = SimpleModules::new(&c.algebra()).map_err(|e| e.to_string())?;
        for l in m.labels() {
            m.inner_product(
                &gtqd::fusion::ModuleCharacter::Simple(*l),
                &gtqd::fusion::ModuleCharacter::Simple(*l),
            )
            .map_err(|e| format!("{}: {e}", c.name))?;
        }
    }
    let evaluated = dual_evaluation_count() - before;
    if evaluated == 0 {
        return Err("no character evaluations recorded".into());
    }
    Ok(format!(
        "{} configurations ({nontrivial} with nontrivial cocycle), {evaluated} dual evaluations, 0 failures",
        configs.len()
    ))
}

fn ac4() -> Outcome {
    let exec = Exec::default();
    let configs = sweep(48);
    let one = Rational::from_integer(1);
    let zero = Rational::from_integer(0);
    let check = |name: &str, gram: &[Vec<Rational>]| -> Result<(), String> {
        for (i, row) in gram.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if *v != if i == j { one.clone() } else { zero.clone() } {
                    return Err(format!("{name}: Gram entry ({i}, {j}) is {v}"));
                }
            }
        }
        Ok(())
    };
    for c in &configs {
        let m = SimpleModules::new(&c.algebra()).map_err(|e| e.to_string())?;
        let gram = m.gram_matrix(m.labels(), exec).map_err(|e| e.to_string())?;
        check(&c.name, &gram)?;
    }
    let m = SimpleModules::new(&center_algebra(GroupSpec::BinaryIcosahedral)).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let picked: Vec<_> = sample(&mut rng, m.labels().len(), 10).into_iter().map(|i| m.labels()[i]).collect();
    let gram = m.gram_matrix(&picked, exec).map_err(|e| e.to_string())?;
    check("2I/center", &gram)?;
    Ok(format!("{} configurations with |G| <= 48 exact, 2I/center 10x10 sample exact", configs.len()))
}

fn ac5() -> Outcome {
    let exec = Exec::default();
    let mut full = 0;
    for (m, qs) in [(4u32, 0..4i64), (6, 0..3)] {
        let p = build(&GroupSpec::Cyclic(m)).unwrap();
        let n = p.involution_subgroup().unwrap();
        for q in qs {
            let a = algebra(&p, &n, q);
            let r = a.verify_quasihopf(VerifyMode::Full, exec).map_err(|e| e.to_string())?;
            if let Some(f) = r.first_failure() {
                return Err(format!("Z{m}/Z2 q={q}: {} fails: {}", f.axiom, f.witness.clone().unwrap_or_default()));
            }
            full += 1;
        }
    }
    let mut sampled = Vec::new();
    for spec in six() {
        let start = Instant::now();
        let a = center_algebra(spec);
        let mode = VerifyMode::Sampled { instances: DEFAULT_SAMPLES, seed: SEED };
        let r = a.verify_quasihopf(mode, exec).map_err(|e| e.to_string())?;
        if let Some(f) = r.first_failure() {
            return Err(format!("{spec}/center: {} fails: {}", f.axiom, f.witness.clone().unwrap_or_default()));
        }
        sampled.push(format!("{spec} {:.1?}", start.elapsed()));
    }
    Ok(format!("{full} configurations full, sampled 10^4 on {}", sampled.join(", ")))
}

fn ac6() -> Outcome {
    let exec = Exec::default();
    let bd3 = build(&GroupSpec::BinaryDihedral(3)).unwrap();
    let x = bd3.group.find_label("x").unwrap();
    let order3 = bd3.group.subgroup_generated(&[bd3.group.mul(x, x)]);
    let cases = [
        ("Z4/Z2", center_algebra(GroupSpec::Cyclic(4)), true),
        ("BD4/center", center_algebra(GroupSpec::BinaryDihedral(4)), true),
        ("BD3/order 3", algebra(&bd3, &order3, 0), false),
    ];
    let mut out = Vec::new();
    for (name, a, want) in cases {
        let r = a.check_normal_image(VerifyMode::Full, exec).map_err(|e| e.to_string())?;
        if r.normal() != want || r.central != want {
            return Err(format!("{name}: normal {} central {}, expected {want}", r.normal(), r.central));
        }
        out.push(format!("{name} {}", r.normal()));
    }
    Ok(out.join(", "))
}

fn ac7() -> Outcome {
    let exec = Exec::default();
    let mut findings = Vec::new();
    for n in 1..=6u32 {
        let p = build(&GroupSpec::Cyclic(2 * n)).unwrap();
        let normal = p.involution_subgroup().unwrap();
        let mut graphs = BTreeMap::new();
        for q in 0..n as i64 {
            let m = SimpleModules::new(&algebra(&p, &normal, q)).map_err(|e| e.to_string())?;
            let g = McKayGraph::build(&m, p.w.values(), exec).map_err(|e| e.to_string())?;
            graphs.insert(q, g.adjacency);
        }
        let differing: Vec<i64> = graphs.iter().filter(|(_, a)| **a != graphs[&0]).map(|(q, _)| *q).collect();
        if differing.is_empty() {
            findings.push(format!("Z{} identical over {n} cocycles", 2 * n));
        } else {
            findings.push(format!("Z{} differs for q in {differing:?}", 2 * n));
        }
    }
    Ok(format!("finding: {}", findings.join("; ")))
}

fn ac8() -> Outcome {
    let mut queried = 0;
    let mut discrepancies = Vec::new();
    // every triple on the small groups with q <= 1, same-class triples for the
    // other cocycles and on the {±I} configurations
    let mut runs: Vec<(String, gtqd::qdouble::Gtqd, bool)> = sweep(16)
        .into_iter()
        .filter(|c| c.normal.order() <= 2)
        .map(|c| (c.name.clone(), c.algebra(), c.q <= 1))
        .collect();
    runs.extend(six().into_iter().map(|s| (format!("{s}/center"), center_algebra(s), false)));
    for (name, a, all_triples) in &runs {
        let m = SimpleModules::new(a).map_err(|e| e.to_string())?;
        let g = m.group();
        let identity_class = m.class_of(m.algebra().quotient().target().identity());
        let k0 = m.algebra().quotient().target().identity();
        for w in m.labels_of_class(identity_class) {
            let chi: Vec<_> = (0..g.order())
                .map(|x| m.character_value(w, k0, x))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            for v in m.labels() {
                for u in m.labels().iter().filter(|u| *all_triples || u.class == v.class) {
                    let local = m.fusion_with_g_module(v, &chi, u).map_err(|e| e.to_string())?;
                    let general = m.fusion_coefficient(v, w, u).map_err(|e| e.to_string())?;
                    queried += 1;
                    if local != general {
                        discrepancies.push(format!(
                            "{}: {} x {} -> {}: {local} vs {general}",
                            name,
                            m.label_name(v),
                            m.label_name(w),
                            m.label_name(u)
                        ));
                    }
                }
            }
        }
    }
    match discrepancies.first() {
        None => Ok(format!("{queried} triples over {} configurations, 0 discrepancies", runs.len())),
        Some(d) => Err(format!("{} discrepancies, first {d}", discrepancies.len())),
    }
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1", "simple-module counts over {±I}", ac1),
        ("AC2", "orbifold McKay correspondence", ac2),
        ("AC3", "theta conjugation identity", ac3),
        ("AC4", "character orthonormality", ac4),
        ("AC5", "quasi-Hopf axioms", ac5),
        ("AC6", "normality of the image", ac6),
        ("AC7", "cocycle dependence of McKay graphs", ac7),
        ("AC8", "stabilizer fusion agrees with tensor fusion", ac8),
    ];
    let mut failed = 0;
    for (id, what, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("{id} PASS  {what}: {detail} [{took:.1?}]"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL  {what}: {detail} [{took:.1?}]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
