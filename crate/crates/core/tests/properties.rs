use std::sync::atomic::{AtomicUsize, Ordering};

use aqcc_core::aqec::{build_stabilizer_matrix, check_css_commutativity, Deriver, Purity};
use aqcc_core::cyclic::{CyclicCode, DefiningSet};
use aqcc_core::polyring::{CodeSpace, Poly};
use aqcc_core::weights::{macwilliams_transform, Executor, Method, WeightEngine, DEFAULT_BUDGET};
use proptest::prelude::*;

/// Spreads jobs over scoped threads that pull indices from a shared counter.
struct Threads(usize);

impl Executor for Threads {
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) + Sync)) {
        let next = AtomicUsize::new(0);
        std::thread::scope(|s| {
            for _ in 0..self.0 {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= jobs {
                        break;
                    }
                    job(i);
                });
            }
        });
    }

    fn workers(&self) -> usize {
        self.0
    }
}

fn codes(n: u32) -> Vec<CyclicCode> {
    CyclicCode::all(&CodeSpace::new(n, 2).unwrap(), 8).unwrap()
}

fn brute_min_weight(code: &CyclicCode) -> u32 {
    let rows: Vec<u64> = code
        .generator_matrix()
        .rows()
        .iter()
        .map(|r| r.iter().enumerate().fold(0, |acc, (i, &b)| acc | (b as u64) << i))
        .collect();
    (1u64..1 << rows.len())
        .map(|m| {
            rows.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).fold(0u64, |acc, (_, r)| acc ^ r).count_ones()
        })
        .min()
        .unwrap_or(0)
}

fn nested_pairs(n: u32) -> Vec<(CyclicCode, CyclicCode)> {
    let all = codes(n);
    let mut out = Vec::new();
    for c1 in &all {
        for c2 in &all {
            if c1.contains(&c2.dual().unwrap()).unwrap() {
                out.push((c1.clone(), c2.clone()));
            }
        }
    }
    out
}

#[test]
fn classical_distances_from_table() {
    let engine = WeightEngine::serial(DEFAULT_BUDGET);
    let s15 = CodeSpace::new(15, 2).unwrap();
    let s31 = CodeSpace::new(31, 2).unwrap();
    let cases = [
        (CyclicCode::bch(&s15, 3, 1).unwrap(), 11, 3),
        (CyclicCode::bch(&s15, 5, 1).unwrap(), 7, 5),
        (CyclicCode::bch(&s31, 5, 1).unwrap(), 21, 5),
        (CyclicCode::bch(&s31, 7, 1).unwrap(), 16, 7),
        (CyclicCode::bch(&s31, 11, 1).unwrap(), 11, 11),
        (CyclicCode::bch(&s31, 15, 1).unwrap(), 6, 15),
    ];
    for (code, k, d) in cases {
        assert_eq!(code.k(), k);
        let r = engine.min_weight(&code).unwrap();
        assert_eq!((r.value, r.method), (d, Method::Exhaustive), "{code}");
    }
}

#[test]
fn bch_bound_never_exceeds_min_weight() {
    for n in [7, 15, 21] {
        for code in codes(n).iter().filter(|c| c.k() > 0) {
            assert!(code.bch_bound() <= brute_min_weight(code), "{code:?}");
        }
    }
}

#[test]
fn macwilliams_double_transform_on_length_15() {
    let engine = WeightEngine::serial(DEFAULT_BUDGET);
    for code in codes(15) {
        let dist = engine.weight_distribution(&code).unwrap();
        let dual = code.dual().unwrap();
        let once = macwilliams_transform(&dist, 15, 2, code.k()).unwrap();
        assert_eq!(once.counts, engine.weight_distribution(&dual).unwrap().counts, "{code:?}");
        let twice = macwilliams_transform(&once, 15, 2, dual.k()).unwrap();
        assert_eq!(twice.counts, dist.counts);
    }
}

#[test]
fn parallel_matches_serial() {
    let threads = Threads(4);
    let parallel = WeightEngine::new(DEFAULT_BUDGET, &threads);
    let serial = WeightEngine::serial(DEFAULT_BUDGET);
    for n in [15, 31] {
        let all = if n == 15 { codes(15) } else { CyclicCode::all(&CodeSpace::new(31, 2).unwrap(), 8).unwrap() };
        for code in all.iter().filter(|c| c.k() <= 21) {
            assert_eq!(parallel.min_weight(code).unwrap(), serial.min_weight(code).unwrap(), "{code:?}");
            if n == 15 {
                assert_eq!(parallel.weight_distribution(code).unwrap(), serial.weight_distribution(code).unwrap());
            }
        }
    }
}

#[test]
fn nested_pairs_commute_and_order_distances() {
    let deriver = Deriver::new(WeightEngine::serial(DEFAULT_BUDGET), Purity::Never);
    for n in [7, 15] {
        for (c1, c2) in nested_pairs(n) {
            let m = build_stabilizer_matrix(&c1, &c2).unwrap();
            assert!(check_css_commutativity(&m.hx, &m.hz).unwrap());
            let p = deriver.css(&c1, &c2).unwrap();
            assert!(p.dz.value >= p.dx.value);
            let d = p.dimensions.as_ref().unwrap();
            assert_eq!((d.by_dual, d.by_sum, d.by_sets), (p.k as i64, p.k as i64, p.k as i64));
            let swapped = deriver.css(&c2, &c1).unwrap();
            assert_eq!((swapped.k, swapped.dz.value, swapped.dx.value), (p.k, p.dz.value, p.dx.value));
        }
    }
}

#[test]
fn extension_routes_agree_for_hamming_15() {
    let space = CodeSpace::new(15, 2).unwrap();
    let ham = CyclicCode::from_defining_set(&space, [1, 2, 4, 8]).unwrap();
    let deriver = Deriver::serial(DEFAULT_BUDGET);
    let allowed = ham.dual().unwrap().defining_set().difference(ham.defining_set()).unwrap();
    let cosets: Vec<_> = space.cosets().iter().filter(|c| allowed.contains(c.representative())).collect();
    assert_eq!(cosets.len(), 3);
    let mut checked = 0;
    for mask in 1u32..1 << cosets.len() {
        let chosen: Vec<_> = (0..cosets.len()).filter(|i| mask >> i & 1 == 1).map(|i| cosets[i]).collect();
        let t = DefiningSet::new(15, 2, chosen.iter().flat_map(|c| c.members().to_vec())).unwrap();
        let spread = t.union(&t.negated()).unwrap();
        let mut f = Poly::one(space.base());
        for c in space.cosets().iter().filter(|c| spread.contains(c.representative())) {
            f = &f * &space.minimal_polynomial(c).unwrap();
        }
        let (c2_set, by_set) = deriver.extend_by_defining_set(&ham, &t).unwrap();
        let (c2_poly, by_poly) = deriver.extend_by_polynomial(&ham, &f).unwrap();
        assert_eq!(c2_set, c2_poly);
        assert_eq!(
            (by_set.k, &by_set.dz, &by_set.dx, by_set.pure),
            (by_poly.k, &by_poly.dz, &by_poly.dx, by_poly.pure)
        );
        assert_eq!(by_set.k as usize, spread.len());
        assert!(by_set.dimensions.as_ref().unwrap().discrepancy().is_some());
        checked += 1;
    }
    assert_eq!(checked, 7);
}

#[test]
fn enlarging_inner_code_never_increases_k() {
    let deriver = Deriver::new(WeightEngine::serial(DEFAULT_BUDGET), Purity::Never);
    for (c1, c2) in nested_pairs(15) {
        let inner = c2.dual().unwrap();
        let k = deriver.css(&c1, &c2).unwrap().k;
        for coset in c1.space().cosets() {
            let Ok(extra) = DefiningSet::new(15, 2, coset.members().to_vec()) else { continue };
            // adding a coset to the complement of T(C2^⊥) enlarges C2^⊥
            let smaller = inner.defining_set().difference(&extra).unwrap();
            if !c1.defining_set().is_subset(&smaller).unwrap() || &smaller == inner.defining_set() {
                continue;
            }
            let bigger_inner = CyclicCode::from_set(c1.space(), smaller).unwrap();
            let c2b = bigger_inner.dual().unwrap();
            assert!(deriver.css(&c1, &c2b).unwrap().k < k);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn min_weight_matches_brute_force(mask in 0u32..32) {
        let code = &codes(15)[mask as usize];
        let r = WeightEngine::serial(DEFAULT_BUDGET).min_weight(code).unwrap();
        prop_assert_eq!(r.value, brute_min_weight(code));
    }

    #[test]
    fn difference_weight_is_at_least_outer_weight(a in 0usize..32, b in 0usize..32) {
        let all = codes(15);
        let (outer, inner) = (&all[a], &all[b]);
        prop_assume!(outer.contains(inner).unwrap() && inner != outer);
        let engine = WeightEngine::serial(DEFAULT_BUDGET);
        let diff = engine.min_weight_difference(outer, inner).unwrap();
        prop_assert!(diff.value >= engine.min_weight(outer).unwrap().value);
    }
}
