//! Cross-module properties on randomly drawn small instances.

use letterplace::homset::{enumerate_isotone, DEFAULT_ENUMERATION_CAP};
use letterplace::letterplace::{
    ascent, coletterplace_ideal, letterplace_ideal, principal_letterplace_gens, support,
};
use letterplace::monomial::minimalize;
use letterplace::pstable::lambda_bar;
use letterplace::quotient::{FiberKind, FiberMap, Strictness};
use letterplace::stronglystable::{is_strongly_stable, ss_from_homideal};
use letterplace::{HomIdeal, Poset};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: usize = DEFAULT_ENUMERATION_CAP;

fn posets() -> Vec<Poset> {
    (1..=4).flat_map(Poset::all_up_to_isomorphism).collect()
}

// a poset on at most four elements and an isotone map with values <= bound
fn generator(bound: u32) -> impl Strategy<Value = (Poset, Vec<u32>)> {
    (0..posets().len(), any::<u64>()).prop_map(move |(k, seed)| {
        let p = posets()[k].clone();
        let maps = enumerate_isotone(&p, bound, CAP).unwrap();
        let alpha = maps[(seed % maps.len() as u64) as usize].values().to_vec();
        (p, alpha)
    })
}

fn principal(bound: u32) -> impl Strategy<Value = HomIdeal> {
    generator(bound).prop_map(|(p, alpha)| HomIdeal::principal(p, alpha).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strict_merges_give_regular_quotients(j in principal(2), seed in any::<u64>()) {
        let p = j.poset();
        let s: Vec<(usize, u32)> = support(&j, CAP).unwrap().into_iter().collect();
        let l = letterplace_ideal(&j, CAP).unwrap().ideal;
        let co = coletterplace_ideal(&j, CAP).unwrap().ideal;
        prop_assert!(FiberMap::identity(s.clone()).regular_quotient_check(&l).unwrap());
        prop_assert!(FiberMap::p1(s.clone()).regular_quotient_check(&l).unwrap());
        let p2 = FiberMap::p2(s.clone());
        if matches!(p2.fiber_kind(p), FiberKind::LeftStrict | FiberKind::Both) {
            prop_assert!(p2.regular_quotient_check(&co).unwrap());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs: Vec<(usize, usize)> =
            (0..s.len()).flat_map(|a| (a + 1..s.len()).map(move |b| (a, b))).collect();
        pairs.shuffle(&mut rng);
        let r = FiberMap::merge_fibers(p, s.clone(), Strictness::Right, &pairs);
        prop_assert!(r.regular_quotient_check(&l).unwrap());
        let lf = FiberMap::merge_fibers(p, s, Strictness::Left, &pairs);
        prop_assert!(lf.regular_quotient_check(&co).unwrap());
    }

    #[test]
    fn graphs_of_members_meet_ascents_of_non_members(j in principal(2)) {
        let p = j.poset();
        for phi in enumerate_isotone(p, j.nmax() + 1, CAP).unwrap() {
            if !j.member(phi.values()) {
                continue;
            }
            for psi in enumerate_isotone(p, j.nmax() + 1, CAP).unwrap() {
                if j.member(psi.values()) {
                    continue;
                }
                let asc = ascent(p, psi.values()).unwrap();
                prop_assert!(phi.graph().iter().any(|g| asc.contains(g)), "{:?} {:?}", phi, psi);
            }
        }
    }

    #[test]
    fn principal_fast_path((p, alpha) in generator(3)) {
        let fast = principal_letterplace_gens(&p, &alpha).unwrap();
        let j = HomIdeal::principal(p, alpha).unwrap();
        let general = letterplace_ideal(&j, CAP).unwrap().ideal;
        prop_assert_eq!(fast.gens(), general.gens());
    }

    #[test]
    fn lambda_bar_of_the_complement_is_the_p1_projection(j in principal(2)) {
        let p = j.poset();
        let images: Vec<_> = enumerate_isotone(p, j.nmax() + 1, CAP)
            .unwrap()
            .iter()
            .filter(|m| !j.member(m.values()))
            .map(|m| lambda_bar(p, m.values()).unwrap())
            .collect();
        let s: Vec<(usize, u32)> = support(&j, CAP).unwrap().into_iter().collect();
        let l = letterplace_ideal(&j, CAP).unwrap().ideal;
        let projected = FiberMap::p1(s).project_ideal(&l).unwrap();
        prop_assert!(images.iter().all(|m| projected.contains(m)));
        prop_assert_eq!(minimalize(images), projected.gens().to_vec());
    }

    #[test]
    fn chain_projections_are_strongly_stable(m in 1usize..=4, seed in any::<u64>()) {
        let c = Poset::chain(m);
        let maps = enumerate_isotone(&c, 3, CAP).unwrap();
        let alpha = maps[(seed % maps.len() as u64) as usize].values().to_vec();
        let j = HomIdeal::principal(c, alpha).unwrap();
        prop_assert!(is_strongly_stable(&ss_from_homideal(&j, CAP).unwrap()));
    }
}
