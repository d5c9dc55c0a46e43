mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use gtqd::cocycle::{verify_3cocycle, Cocycle3};
use gtqd::fusion::SimpleModules;
use gtqd::polyhedral::{build, GroupSpec};
use gtqd::{Cyclotomic, FiniteGroup, Rational};

fn element(m: u32) -> impl Strategy<Value = Cyclotomic> {
    proptest::collection::vec((-4i64..=4, 1i64..=3), m as usize).prop_map(move |c| {
        Cyclotomic::from_poly(m, c.into_iter().map(|(p, q)| Rational::new(p, q)).collect())
    })
}

fn order_and_pair() -> impl Strategy<Value = (u32, Cyclotomic, Cyclotomic, Cyclotomic)> {
    (1u32..=24).prop_flat_map(|m| (Just(m), element(m), element(m), element(m)))
}

fn binary_octahedral() -> &'static FiniteGroup {
    static G: OnceLock<FiniteGroup> = OnceLock::new();
    G.get_or_init(|| (*build(&GroupSpec::BinaryOctahedral).unwrap().group).clone())
}

fn bd3_modules() -> &'static SimpleModules {
    static M: OnceLock<SimpleModules> = OnceLock::new();
    M.get_or_init(|| SimpleModules::new(&common::center_algebra(GroupSpec::BinaryDihedral(3))).unwrap())
}

fn twisted_z8_modules() -> &'static SimpleModules {
    static M: OnceLock<SimpleModules> = OnceLock::new();
    M.get_or_init(|| {
        let p = build(&GroupSpec::Cyclic(8)).unwrap();
        let n = p.involution_subgroup().unwrap();
        SimpleModules::new(&common::algebra(&p, &n, 3)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms((_m, a, b, c) in order_and_pair()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.sub(&a), Cyclotomic::zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism((_m, a, b, _c) in order_and_pair()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
    }

    #[test]
    fn roots_of_unity_have_their_order(m in 1u32..=60, k in -100i64..100) {
        let z = Cyclotomic::root_of_unity(m, k);
        prop_assert!(z.pow(m as i64).unwrap().is_one());
        prop_assert_eq!(z.mul(&Cyclotomic::root_of_unity(m, -k)), Cyclotomic::one());
        prop_assert_eq!(z.conj(), Cyclotomic::root_of_unity(m, -k));
    }

    #[test]
    fn group_multiplication_is_associative(a in 0usize..48, b in 0usize..48, c in 0usize..48) {
        let g = binary_octahedral();
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
    }

    #[test]
    fn cyclic_cocycles_are_cocycles(n in 1usize..=12, q in -20i64..20, seed in any::<u64>()) {
        let g = FiniteGroup::cyclic_table(n);
        prop_assert_eq!(verify_3cocycle(&Cocycle3::cyclic_cocycle(n, q), &g, seed), None);
    }

    /// Replacing the stored conjugator by any other valid one leaves the
    /// character value unchanged.
    #[test]
    fn characters_do_not_depend_on_the_conjugator(label in 0usize..16, x in 0usize..12, s in 0usize..64, member in 0usize..64) {
        let m = bd3_modules();
        let l = m.labels()[label];
        let info = &m.classes()[l.class];
        let i = member % info.members.len();
        let kbar = info.members[i];
        let g = m.group();
        let stab = info.stabilizer.members();
        let y = g.mul(info.conjugators[i], stab[s % stab.len()]);
        prop_assert_eq!(m.character_value_with_conjugator(&l, kbar, x, y).unwrap(), m.character_value(&l, kbar, x).unwrap());
    }

    #[test]
    fn twisted_characters_do_not_depend_on_the_conjugator(label in 0usize..32, x in 0usize..8, s in 0usize..64, member in 0usize..64) {
        let m = twisted_z8_modules();
        let l = m.labels()[label % m.labels().len()];
        let info = &m.classes()[l.class];
        let i = member % info.members.len();
        let kbar = info.members[i];
        let g = m.group();
        let stab = info.stabilizer.members();
        let y = g.mul(info.conjugators[i], stab[s % stab.len()]);
        prop_assert_eq!(m.character_value_with_conjugator(&l, kbar, x, y).unwrap(), m.character_value(&l, kbar, x).unwrap());
    }

    #[test]
    fn fusion_is_commutative_and_dimensions_add_up(v in 0usize..16, w in 0usize..16) {
        let m = bd3_modules();
        let (lv, lw) = (m.labels()[v], m.labels()[w]);
        let mut total = 0;
        for lu in m.labels() {
            let n = m.fusion_coefficient(&lv, &lw, lu).unwrap();
            prop_assert_eq!(n, m.fusion_coefficient(&lw, &lv, lu).unwrap());
            total += n as usize * lu.dimension;
        }
        prop_assert_eq!(total, lv.dimension * lw.dimension);
    }

    #[test]
    fn twisted_fusion_dimensions_add_up(v in 0usize..32, w in 0usize..32) {
        let m = twisted_z8_modules();
        let n = m.labels().len();
        let (lv, lw) = (m.labels()[v % n], m.labels()[w % n]);
        let total: usize = m.labels().iter().map(|lu| m.fusion_coefficient(&lv, &lw, lu).unwrap() as usize * lu.dimension).sum();
        prop_assert_eq!(total, lv.dimension * lw.dimension);
    }
}
