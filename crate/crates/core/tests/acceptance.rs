//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion does. All comparisons are exact.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use letterplace::determinantal::{check_reduction, i_sequence, terrace, verify_main, LSequence};
use letterplace::groebner::Budget;
use letterplace::homset::{enumerate_isotone, DEFAULT_ENUMERATION_CAP};
use letterplace::letterplace::{coletterplace_ideal, letterplace_ideal, pair_monomial, support};
use letterplace::pstable::{
    antichains_above, elem_monomial, is_p_stable, lambda_bar, lambda_bar_inv, max_ideal_power_stable,
    DenseArtinian, StabilityMode,
};
use letterplace::quotient::{FiberKind, FiberMap, Strictness};
use letterplace::stronglystable::{dualize_bounded, dualize_ss, homideal_from_ss, ss_from_homideal};
use letterplace::{HomIdeal, Monomial, MonomialIdeal, Poset, VarIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: usize = DEFAULT_ENUMERATION_CAP;

// wall-clock limits per criterion
const LIMIT_LETTERPLACE: Duration = Duration::from_secs(1);
const LIMIT_DUALITY: Duration = Duration::from_secs(120);
const LIMIT_LAMBDA: Duration = Duration::from_secs(60);
const LIMIT_STRONGLY_STABLE: Duration = Duration::from_secs(120);
const LIMIT_SMALL_DET: Duration = Duration::from_secs(5);
const LIMIT_RUNNING_DET: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    if t <= limit {
        Ok(format!("{:.2?}", t))
    } else {
        Err(format!("took {:.2?}, limit {:?}", t, limit))
    }
}

fn sorted(mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort();
    v
}

fn posets_up_to(n: usize) -> Vec<Poset> {
    (1..=n).flat_map(Poset::all_up_to_isomorphism).collect()
}

// 1-based chain labels
fn lp(pairs: &[(usize, u32)]) -> Monomial {
    pair_monomial(&pairs.iter().map(|&(p, i)| (p - 1, i)).collect::<Vec<_>>())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let j = HomIdeal::principal(Poset::chain(3), vec![1, 1, 2]).map_err(|e| e.to_string())?;
    let got = letterplace_ideal(&j, CAP).map_err(|e| e.to_string())?.ideal;
    let want = vec![
        lp(&[(1, 0), (1, 1)]),
        lp(&[(1, 0), (2, 1)]),
        lp(&[(2, 0), (2, 1)]),
        lp(&[(1, 0), (3, 1), (3, 2)]),
        lp(&[(2, 0), (3, 1), (3, 2)]),
        lp(&[(3, 0), (3, 1), (3, 2)]),
    ];
    ensure!(sorted(got.gens().to_vec()) == sorted(want), "generators differ: {:?}", got.gens());
    let t = within(start, LIMIT_LETTERPLACE)?;
    Ok(format!("six generators reproduced in {t}"))
}

// minimal transversals by brute force over subsets of the support
fn brute_dual(gens: &[Monomial], vars: &[VarIndex]) -> Vec<Monomial> {
    let index: BTreeMap<VarIndex, usize> = vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let edges: Vec<u32> = gens
        .iter()
        .map(|g| g.support().fold(0u32, |acc, v| acc | 1 << index[&v]))
        .collect();
    let mut hits: Vec<u32> = (0u32..1 << vars.len())
        .filter(|&s| edges.iter().all(|&e| e & s != 0))
        .collect();
    hits.sort_by_key(|s| s.count_ones());
    let mut minimal: Vec<u32> = Vec::new();
    for s in hits {
        if minimal.iter().all(|&t| t & s != t) {
            minimal.push(s);
        }
    }
    minimal
        .into_iter()
        .map(|s| Monomial::squarefree((0..vars.len()).filter(|&k| s >> k & 1 == 1).map(|k| vars[k])))
        .collect()
}

fn duality_holds(j: &HomIdeal) -> Result<bool, String> {
    let l = letterplace_ideal(j, CAP).map_err(|e| e.to_string())?.ideal;
    let co = coletterplace_ideal(j, CAP).map_err(|e| e.to_string())?.ideal;
    let vars: Vec<VarIndex> = support(j, CAP)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(p, i)| VarIndex::pair(p, i))
        .collect();
    if vars.len() > 20 {
        return Err(format!("support of {} variables is too large for the brute dual", vars.len()));
    }
    let lib = co.with_universe(vars.iter().copied()).alexander_dual().map_err(|e| e.to_string())?;
    let brute = sorted(brute_dual(co.gens(), &vars));
    Ok(sorted(l.gens().to_vec()) == brute && lib.gens() == l.gens())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut principal = 0;
    for p in posets_up_to(4) {
        for alpha in enumerate_isotone(&p, 2, CAP).map_err(|e| e.to_string())? {
            let j = HomIdeal::principal(p.clone(), alpha.values().to_vec()).map_err(|e| e.to_string())?;
            ensure!(duality_holds(&j)?, "duality fails for {:?}", j);
            principal += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pool = posets_up_to(4);
    let mut cofinite = 0;
    while cofinite < 50 {
        let p = pool.choose(&mut rng).unwrap().clone();
        let maps = enumerate_isotone(&p, 3, CAP).map_err(|e| e.to_string())?;
        let k = rng.gen_range(1..=3);
        let gens: Vec<Vec<u32>> = maps
            .choose_multiple(&mut rng, k)
            .map(|m| m.values().to_vec())
            .filter(|v| v.iter().any(|&x| x > 0))
            .collect();
        if gens.is_empty() {
            continue;
        }
        let j = HomIdeal::cofinite(p, gens).map_err(|e| e.to_string())?;
        ensure!(duality_holds(&j)?, "duality fails for {:?}", j);
        cofinite += 1;
    }
    let t = within(start, LIMIT_DUALITY)?;
    Ok(format!("{principal} principal and {cofinite} cofinite ideals in {t}"))
}

fn dense(p: &Poset, m: &Monomial) -> Vec<u32> {
    (0..p.n()).map(|q| m.exponent(VarIndex::Elem(q as u32))).collect()
}

// exponent at q is phi(q) minus the largest value strictly below q
fn lambda_oracle(p: &Poset, phi: &[u32]) -> Vec<u32> {
    (0..p.n())
        .map(|q| {
            let below = (0..p.n()).filter(|&r| p.lt(r, q)).map(|r| phi[r]).max().unwrap_or(0);
            phi[q] - below
        })
        .collect()
}

fn exponent_vectors(n: usize, max_degree: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=max_degree - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let (mut maps_checked, mut monomials_checked) = (0usize, 0usize);
    for p in posets_up_to(4) {
        for phi in enumerate_isotone(&p, 5, CAP).map_err(|e| e.to_string())? {
            let m = lambda_bar(&p, phi.values()).map_err(|e| e.to_string())?;
            ensure!(dense(&p, &m) == lambda_oracle(&p, phi.values()), "exponents differ at {:?}", phi);
            let back = lambda_bar_inv(&p, &m).map_err(|e| e.to_string())?;
            ensure!(back.values() == phi.values(), "round trip fails at {:?}", phi);
            maps_checked += 1;
        }
        for e in exponent_vectors(p.n(), 5) {
            let m = elem_monomial(&e);
            let phi = lambda_bar_inv(&p, &m).map_err(|e| e.to_string())?;
            ensure!(lambda_oracle(&p, phi.values()) == e, "round trip fails at {:?}", e);
            monomials_checked += 1;
        }
    }
    let t = within(start, LIMIT_LAMBDA)?;
    Ok(format!("{maps_checked} maps and {monomials_checked} monomials, zero failures, in {t}"))
}

fn numerators_agree(f: &FiberMap, ideal: &MonomialIdeal) -> Result<bool, String> {
    let ok = f.regular_quotient_check(ideal).map_err(|e| e.to_string())?;
    // independent numerator when the generator count keeps inclusion-exclusion small
    if ideal.gens().len() <= 12 {
        let projected = f.project_ideal(ideal).map_err(|e| e.to_string())?;
        let by_hand = projected.hilbert_numerator_incl_excl() == ideal.hilbert_numerator_incl_excl();
        if by_hand != ok {
            return Err("pivot and inclusion-exclusion numerators disagree".into());
        }
    }
    Ok(ok)
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut ideals, mut p2_checks, mut merges) = (0, 0, 0);
    for p in posets_up_to(3) {
        for alpha in enumerate_isotone(&p, 2, CAP).map_err(|e| e.to_string())? {
            let j = HomIdeal::principal(p.clone(), alpha.values().to_vec()).map_err(|e| e.to_string())?;
            let s: Vec<(usize, u32)> = support(&j, CAP).map_err(|e| e.to_string())?.into_iter().collect();
            let l = letterplace_ideal(&j, CAP).map_err(|e| e.to_string())?.ideal;
            let co = coletterplace_ideal(&j, CAP).map_err(|e| e.to_string())?.ideal;
            ensure!(numerators_agree(&FiberMap::p1(s.clone()), &l)?, "p1 fails for {:?}", j);
            // p2 has left strict chain fibers exactly when P is a chain
            let p2 = FiberMap::p2(s.clone());
            if matches!(p2.fiber_kind(&p), FiberKind::LeftStrict | FiberKind::Both) {
                ensure!(numerators_agree(&p2, &co)?, "p2 fails for {:?}", j);
                p2_checks += 1;
            }
            let mut pairs: Vec<(usize, usize)> =
                (0..s.len()).flat_map(|a| (a + 1..s.len()).map(move |b| (a, b))).collect();
            for _ in 0..20 {
                pairs.shuffle(&mut rng);
                let r = FiberMap::merge_fibers(&p, s.clone(), Strictness::Right, &pairs);
                ensure!(
                    matches!(r.fiber_kind(&p), FiberKind::RightStrict | FiberKind::Both),
                    "merge is not right strict"
                );
                ensure!(numerators_agree(&r, &l)?, "right strict merge fails for {:?}: {:?}", j, r);
                let lf = FiberMap::merge_fibers(&p, s.clone(), Strictness::Left, &pairs);
                ensure!(
                    matches!(lf.fiber_kind(&p), FiberKind::LeftStrict | FiberKind::Both),
                    "merge is not left strict"
                );
                ensure!(numerators_agree(&lf, &co)?, "left strict merge fails for {:?}: {:?}", j, lf);
                merges += 2;
            }
            ideals += 1;
        }
    }
    // two incomparable minimal elements identified at level 0
    let ab = Poset::antichain(2);
    let j = HomIdeal::principal(ab.clone(), vec![0, 0]).map_err(|e| e.to_string())?;
    let l = letterplace_ideal(&j, CAP).map_err(|e| e.to_string())?.ideal;
    let bad = FiberMap::p2([(0, 0), (1, 0)]);
    ensure!(bad.fiber_kind(&ab) == FiberKind::Neither, "engineered merge should be non-strict");
    ensure!(!numerators_agree(&bad, &l)?, "non-strict merge unexpectedly regular");
    Ok(format!(
        "{ideals} ideals, p2 on {p2_checks} chain cases, {merges} strict merges; non-strict merge fails as required"
    ))
}

// artinian ideals generated in degree <= 3: filters of the degree <= 3
// monomials under divisibility that contain every cube
fn degree3_artinian(n: usize) -> Vec<Vec<Vec<u32>>> {
    let mut monos = exponent_vectors(n, 3);
    monos.sort_by_key(|e| e.iter().sum::<u32>());
    let pos: BTreeMap<Vec<u32>, usize> = monos.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect();
    let lower: Vec<Vec<usize>> = monos
        .iter()
        .map(|e| {
            (0..n)
                .filter(|&q| e[q] > 0)
                .map(|q| {
                    let mut f = e.clone();
                    f[q] -= 1;
                    pos[&f]
                })
                .collect()
        })
        .collect();
    let cube = |e: &[u32]| e.iter().filter(|&&x| x > 0).count() == 1 && e.iter().sum::<u32>() == 3;
    let mut out = Vec::new();
    let mut inside = vec![false; monos.len()];
    fn rec(
        k: usize,
        monos: &[Vec<u32>],
        lower: &[Vec<usize>],
        cube: &dyn Fn(&[u32]) -> bool,
        inside: &mut Vec<bool>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if k == monos.len() {
            let gens = (0..monos.len())
                .filter(|&i| inside[i] && lower[i].iter().all(|&d| !inside[d]))
                .map(|i| monos[i].clone())
                .collect();
            out.push(gens);
            return;
        }
        let forced = lower[k].iter().any(|&d| inside[d]) || cube(&monos[k]);
        inside[k] = true;
        rec(k + 1, monos, lower, cube, inside, out);
        if !forced {
            inside[k] = false;
            rec(k + 1, monos, lower, cube, inside, out);
        }
        inside[k] = false;
    }
    rec(0, &monos, &lower, &cube, &mut inside, &mut out);
    out
}

fn one_cover_forest(p: &Poset) -> bool {
    (0..p.n()).all(|x| {
        let covers = (0..p.n())
            .filter(|&y| p.lt(x, y) && !(0..p.n()).any(|z| p.lt(x, z) && p.lt(z, y)))
            .count();
        covers <= 1
    })
}

fn criterion_5() -> Outcome {
    // filter test against the definitional test
    let mut instances = 0usize;
    let mut stable = 0usize;
    let mut full_bounded = 0usize;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=4 {
        let family = degree3_artinian(n);
        for p in Poset::all_up_to_isomorphism(n) {
            let above = antichains_above(&p);
            for gens in &family {
                let ideal = MonomialIdeal::new(gens.iter().map(|e| elem_monomial(e)), (0..n).map(VarIndex::elem));
                let d = DenseArtinian::new(&p, &ideal).map_err(|e| e.to_string())?;
                let filter = d.filter_test(&p);
                ensure!(filter == d.definitional_test(&p, &above), "verdicts differ on {:?} over {:?}", gens, p);
                // the unrestricted bounded test on every ideal up to three
                // elements and a seeded sample at four
                if n <= 3 || rng.gen_ratio(1, 400) {
                    let exact = is_p_stable(&p, &ideal, StabilityMode::Exact).map_err(|e| e.to_string())?;
                    let bound = letterplace::pstable::complete_degree_bound(&p, &ideal).map_err(|e| e.to_string())?;
                    let bounded =
                        is_p_stable(&p, &ideal, StabilityMode::Bounded(bound)).map_err(|e| e.to_string())?;
                    ensure!(exact == filter && bounded == filter, "bounded verdict differs on {:?} over {:?}", gens, p);
                    full_bounded += 1;
                }
                instances += 1;
                stable += filter as usize;
            }
        }
    }
    // powers of the maximal ideal
    let mut posets = 0;
    for p in posets_up_to(5) {
        for d in [2, 3] {
            let (stable, forest) = max_ideal_power_stable(&p, d).map_err(|e| e.to_string())?;
            ensure!(forest == one_cover_forest(&p), "cover count differs on {:?}", p);
            ensure!(stable == forest, "power {d} disagrees with the cover test on {:?}", p);
        }
        posets += 1;
    }
    // (a, b, c)^2 on the chain, the antichain and the V
    let sq = |p: &Poset| -> Result<bool, String> {
        let gens = exponent_vectors(3, 2)
            .into_iter()
            .filter(|e| e.iter().sum::<u32>() == 2)
            .map(|e| elem_monomial(&e));
        is_p_stable(p, &MonomialIdeal::new(gens, (0..3).map(VarIndex::elem)), StabilityMode::Exact)
            .map_err(|e| e.to_string())
    };
    let v = Poset::from_covers(3, &[(0, 1), (0, 2)]).map_err(|e| e.to_string())?;
    let triple = (sq(&Poset::chain(3))?, sq(&Poset::antichain(3))?, sq(&v)?);
    ensure!(triple == (true, true, false), "(a,b,c)^2 verdicts {:?}", triple);
    Ok(format!(
        "{instances} ideal/poset pairs agree ({stable} stable, {full_bounded} also through the full bounded test); \
         power criterion on {posets} posets; (a,b,c)^2 gives chain true, antichain true, V false"
    ))
}

fn nat_monomial(idx: &[u32]) -> Monomial {
    Monomial::from_factors(idx.iter().map(|&i| (VarIndex::Nat(i), 1)))
}

// degree-d monomials in x_0..x_n as weakly increasing index lists
fn degree_monomials(d: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let lo = v.last().copied().unwrap_or(0);
                (lo..=n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

// every move x_j -> x_{j-1} stays in the set
fn borel_closed(set: &BTreeSet<Vec<u32>>) -> bool {
    set.iter().all(|m| {
        (0..m.len()).filter(|&k| m[k] > 0).all(|k| {
            let mut w = m.clone();
            w[k] -= 1;
            w.sort();
            set.contains(&w)
        })
    })
}

fn borel_close(seed: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let mut set: BTreeSet<Vec<u32>> = seed.iter().cloned().collect();
    let mut stack: Vec<Vec<u32>> = seed.to_vec();
    while let Some(m) = stack.pop() {
        for k in 0..m.len() {
            if m[k] > 0 {
                let mut w = m.clone();
                w[k] -= 1;
                w.sort();
                if set.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
    }
    set
}

fn check_bounded_pair(set: &BTreeSet<Vec<u32>>, m: usize, n: u32) -> Result<MonomialIdeal, String> {
    let ideal = MonomialIdeal::new(set.iter().map(|e| nat_monomial(e)), (0..=n).map(VarIndex::Nat));
    let dual = dualize_bounded(&ideal, m, n, CAP).map_err(|e| e.to_string())?;
    ensure!(dual.gens().iter().all(|g| g.degree() == n), "dual of {:?} not generated in degree {n}", set);
    let dual_set: BTreeSet<Vec<u32>> = dual
        .gens()
        .iter()
        .map(|g| {
            let mut v: Vec<u32> = g
                .factors()
                .iter()
                .flat_map(|&(var, e)| match var {
                    VarIndex::Nat(i) => vec![i; e as usize],
                    _ => vec![u32::MAX],
                })
                .collect();
            v.sort();
            v
        })
        .collect();
    ensure!(borel_closed(&dual_set) && dual_set.iter().all(|v| v.iter().all(|&i| i <= m as u32)), "dual of {:?} is not strongly stable in x_0..x_{m}", set);
    let back = dualize_bounded(&dual, n as usize, m as u32, CAP).map_err(|e| e.to_string())?;
    ensure!(back == ideal, "dualizing twice does not return {:?}", set);
    Ok(dual)
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    for n in 1..=5u32 {
        let power = MonomialIdeal::new([Monomial::from_factors([(VarIndex::Elem(0), n)])], [VarIndex::Elem(0)]);
        let dual = dualize_ss(&power, 1, CAP).map_err(|e| e.to_string())?;
        let want: Vec<Monomial> = (0..n).map(|i| Monomial::var(VarIndex::Nat(i))).collect();
        ensure!(dual.gens() == want.as_slice(), "(x1^{n}) gives {:?}", dual.gens());
        let j = homideal_from_ss(&power, 1).map_err(|e| e.to_string())?;
        ensure!(ss_from_homideal(&j, CAP).map_err(|e| e.to_string())? == power, "(x1^{n}) does not round trip");
    }
    let mut exhaustive = 0;
    for m in 1..=2usize {
        for n in 1..=2u32 {
            let monos = degree_monomials(m, n);
            let mut duals = BTreeSet::new();
            let mut count = 0;
            for mask in 1u32..1 << monos.len() {
                let set: BTreeSet<Vec<u32>> =
                    (0..monos.len()).filter(|&k| mask >> k & 1 == 1).map(|k| monos[k].clone()).collect();
                if !borel_closed(&set) {
                    continue;
                }
                duals.insert(check_bounded_pair(&set, m, n)?.gens().to_vec());
                count += 1;
            }
            ensure!(duals.len() == count, "duality is not injective for m={m}, n={n}");
            let mirrored = degree_monomials(n as usize, m as u32);
            let mirror_count = (1u32..1 << mirrored.len())
                .filter(|&mask| {
                    let s: BTreeSet<Vec<u32>> =
                        (0..mirrored.len()).filter(|&k| mask >> k & 1 == 1).map(|k| mirrored[k].clone()).collect();
                    borel_closed(&s)
                })
                .count();
            ensure!(count == mirror_count, "counts differ for m={m}, n={n}: {count} vs {mirror_count}");
            exhaustive += count;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let monos = degree_monomials(3, 3);
    for _ in 0..40 {
        let k = rng.gen_range(1..=3);
        let seed: Vec<Vec<u32>> = monos.choose_multiple(&mut rng, k).cloned().collect();
        check_bounded_pair(&borel_close(&seed), 3, 3)?;
    }
    let t = within(start, LIMIT_STRONGLY_STABLE)?;
    Ok(format!("(x1^n) for n <= 5, {exhaustive} ideals with m, n <= 2 and 40 random at m = n = 3 in {t}"))
}

fn seq(a: u32, vals: &[u32]) -> Result<LSequence, String> {
    LSequence::new(a, vals.to_vec()).map_err(|e| e.to_string())
}

fn criterion_7() -> Outcome {
    let mut lines = Vec::new();
    for vals in [&[0, 2][..], &[0, 1, 2], &[0, 0, 4], &[0, 1, 3]] {
        let start = Instant::now();
        let r = verify_main(&seq(0, vals)?, Budget::default()).map_err(|e| e.to_string())?;
        ensure!(r.ok, "l = {:?} fails: {:?}", vals, r);
        lines.push(format!("{:?} {}", vals, within(start, LIMIT_SMALL_DET)?));
    }
    let start = Instant::now();
    let r = verify_main(&seq(0, &[0, 0, 3, 4, 6])?, Budget::default()).map_err(|e| e.to_string())?;
    ensure!(r.ok, "l = (0,0,3,4,6) fails: {:?}", r);
    lines.push(format!(
        "(0,0,3,4,6) codim {} gb {} {}",
        r.raw.codim.initial_height,
        r.raw.gb_size,
        within(start, LIMIT_RUNNING_DET)?
    ));
    let l = seq(2, &[3, 3, 5, 7, 8, 11])?;
    let t = terrace(&l);
    ensure!(t.vals() == [3, 3, 5, 7, 7, 11], "terrace {:?}", t.vals());
    let i = i_sequence(&t).map_err(|e| e.to_string())?;
    ensure!(i.vals() == [1, 1, 2, 3, 3, 5], "i-sequence {:?}", i.vals());
    lines.push("terrace (3,3,5,7,7,11), i = (1,1,2,3,3,5)".into());
    Ok(lines.join("; "))
}

fn criterion_8() -> Outcome {
    let l = seq(0, &[0, 1, 2])?;
    let r = check_reduction(&l, 1, Budget::default()).map_err(|e| e.to_string())?;
    ensure!(r == Some(true), "reduction check returned {:?}", r);
    Ok("I(0,1,2) = I(0,1), both containments by normal forms".into())
}

fn criterion_9(regular_ok: bool, det_ok: bool) -> Outcome {
    ensure!(
        regular_ok && det_ok,
        "the substitute checks (regular quotients, codimension) did not pass"
    );
    Ok("Cohen-Macaulayness, simplicial balls and resolutions are out of scope; \
        codimension and regular-quotient checks above stand in for them"
        .into())
}

fn run(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    match &outcome {
        Ok(detail) => println!("PASS {name}: {detail}"),
        Err(why) => println!("FAIL {name}: {why}"),
    }
    outcome.is_ok()
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    results.push(run("1 letterplace ideal of (1,1,2) on the 3-chain", criterion_1));
    results.push(run("2 Alexander duality over the support", criterion_2));
    results.push(run("3 Lambda-bar bijection", criterion_3));
    let regular = run("4 regular quotients by strict fiber maps", criterion_4);
    results.push(regular);
    results.push(run("5 P-stability", criterion_5));
    results.push(run("6 strongly stable duality", criterion_6));
    let det = run("7 staircase determinantal ideals", criterion_7);
    results.push(det);
    results.push(run("8 reduction to a shorter sequence", criterion_8));
    results.push(run("9 excluded results", || criterion_9(regular, det)));
    assert!(results.iter().all(|&ok| ok), "some acceptance criteria failed");
}
