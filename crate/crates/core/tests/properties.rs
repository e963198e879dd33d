use std::sync::Arc;

use deephole_core::combin::pow_u128;
use deephole_core::dist::{
    covering_radius_brute, covering_radius_syndrome, error_distance_brute, error_distance_mds, nested_max_distance,
    prs_bound_via_rs, CosetRep, MdsDecoder, SyndromeLevels,
};
use deephole_core::{prs_code, rs_code, Elem, EvalDomain, Field, LinearCode, Poly};
use proptest::prelude::*;

const BUDGET: u128 = 100_000_000;

fn field(q: u32) -> Arc<Field> {
    Arc::new(Field::of_order(q).unwrap())
}

fn elems(f: &Field, raw: &[u32]) -> Vec<Elem> {
    raw.iter().map(|&x| f.elements()[(x % f.q()) as usize]).collect()
}

fn all_words(f: &Field, n: usize) -> Vec<Vec<Elem>> {
    let q = f.q() as u128;
    (0..pow_u128(f.q(), n))
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let e = f.elements()[(idx % q) as usize];
                    idx /= q;
                    e
                })
                .collect()
        })
        .collect()
}

#[test]
fn rs_sandwich_exhaustive_over_f5() {
    let f = field(5);
    let n = 5;
    let dom = EvalDomain::full(&f);
    for k in 1..n {
        let code = rs_code(f.clone(), None, k).unwrap();
        let dec = MdsDecoder::new(&code).unwrap();
        for coeffs in all_words(&f, n) {
            let poly = Poly::from_coeffs(coeffs);
            let Some(deg) = poly.degree() else { continue };
            if deg < k {
                continue;
            }
            let d = dec.distance(dom.evaluate(&f, &poly).entries());
            assert!(n - deg <= d && d <= n - k, "k={k} deg={deg} d={d}");
        }
    }
}

#[test]
fn bfs_levels_match_weight_enumeration() {
    let f = field(5);
    let code = prs_code(f.clone(), 3).unwrap();
    let levels = SyndromeLevels::compute(&code, BUDGET).unwrap();
    let mut lightest = vec![usize::MAX; levels.table_size()];
    for w in all_words(&f, code.n()) {
        let s = code.syndrome(&w);
        let idx = s
            .iter()
            .rev()
            .fold(0usize, |acc, e| acc * f.q() as usize + e.value() as usize);
        let wt = w.iter().filter(|e| !e.is_zero()).count();
        lightest[idx] = lightest[idx].min(wt);
    }
    for (idx, &wt) in lightest.iter().enumerate() {
        assert_eq!(levels.level(&levels.syndrome_of_index(idx)), wt, "syndrome {idx}");
    }
    let mut covered = 0u128;
    for &c in levels.counts() {
        assert!(c > 0);
        covered += c;
    }
    assert_eq!(covered, levels.table_size() as u128);
}

#[test]
fn bfs_is_independent_of_thread_count() {
    let f = field(7);
    let code = prs_code(f, 3).unwrap();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| SyndromeLevels::compute(&code, BUDGET).unwrap())
    };
    let one = run(1);
    let many = run(4);
    assert_eq!(one.counts(), many.counts());
    for idx in 0..one.table_size() {
        assert_eq!(one.level_of_index(idx), many.level_of_index(idx));
    }
}

fn random_code(f: &Arc<Field>, k: usize, n: usize, raw: &[u32]) -> Option<LinearCode> {
    let rows: Vec<Vec<Elem>> = raw.chunks(n).take(k).map(|r| elems(f, r)).collect();
    LinearCode::from_matrix(f.clone(), rows, None).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nested_radius_inequality(
        q in prop::sample::select(vec![5u32, 7]),
        k in 1usize..4,
        raw in prop::collection::vec(0u32..1000, 7),
    ) {
        let f = field(q);
        let small = rs_code(f.clone(), None, k).unwrap();
        let u = elems(&f, &raw[..q as usize]);
        prop_assume!(!small.contains(&u));
        let mut rows = small.generator().row_vecs();
        rows.push(u.clone());
        let big = LinearCode::from_matrix(f.clone(), rows, None).unwrap();
        let rho1 = covering_radius_syndrome(&small, BUDGET).unwrap().rho;
        let rho2 = covering_radius_syndrome(&big, BUDGET).unwrap().rho;
        let m = nested_max_distance(&small, &big, BUDGET).unwrap().m;
        prop_assert!(rho1 <= rho2 + m);
        // M over span(u) + C1 is d(u, C1)
        prop_assert_eq!(m, error_distance_mds(&small, &u).unwrap().0);
    }

    #[test]
    fn mds_radius_is_d_minus_one_or_two(
        q in prop::sample::select(vec![5u32, 7]),
        k in 1usize..5,
        extra in 1usize..4,
        shuffle in prop::collection::vec(0u32..1000, 8),
    ) {
        let f = field(q);
        let n = (k + extra).min(q as usize);
        prop_assume!(n > k);
        let mut pts: Vec<Elem> = f.elements().to_vec();
        for (i, s) in shuffle.iter().enumerate().take(pts.len()) {
            let j = i + (*s as usize) % (pts.len() - i);
            pts.swap(i, j);
        }
        pts.truncate(n);
        let code = rs_code(f.clone(), Some(&pts), k).unwrap();
        let rho = covering_radius_syndrome(&code, BUDGET).unwrap().rho;
        let d = n - k + 1;
        prop_assert!(rho == d - 1 || rho == d - 2, "n={} k={} rho={}", n, k, rho);
    }

    #[test]
    fn prs_bound_holds_over_f7(
        raw in prop::collection::vec(0u32..1000, 8),
    ) {
        let f = field(7);
        let k = 3;
        let poly = Poly::from_coeffs(elems(&f, &raw[..7]));
        let v = elems(&f, &raw[7..])[0];
        let code = prs_code(f.clone(), k).unwrap();
        let mut word = EvalDomain::full(&f).evaluate(&f, &poly).0;
        word.push(v);
        let lhs = error_distance_mds(&code, &word).unwrap().0;
        let rhs = prs_bound_via_rs(&f, &poly, v, k).unwrap();
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn mds_decoder_agrees_with_brute(
        k in 1usize..6,
        raw in prop::collection::vec(0u32..1000, 8),
    ) {
        let f = field(7);
        let code = prs_code(f.clone(), k).unwrap();
        let u = elems(&f, &raw);
        let (a, ca) = error_distance_mds(&code, &u).unwrap();
        let (b, _) = error_distance_brute(&code, &u, BUDGET).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(code.contains(ca.entries()));
    }

    #[test]
    fn coset_rep_is_coset_invariant(
        q in prop::sample::select(vec![5u32, 7, 9]),
        k in 1usize..4,
        raw in prop::collection::vec(0u32..1000, 14),
        msg in prop::collection::vec(0u32..1000, 4),
        projective in any::<bool>(),
    ) {
        let f = field(q);
        let code = if projective { prs_code(f.clone(), k) } else { rs_code(f.clone(), None, k) }.unwrap();
        let u = elems(&f, &raw[..code.n()]);
        let c = code.encode(&elems(&f, &msg[..k]));
        let shifted: Vec<Elem> = u.iter().zip(c.entries()).map(|(&a, &b)| f.add(a, b)).collect();
        let rep = CosetRep::of_word(&code, &u);
        prop_assert_eq!(&rep, &CosetRep::of_word(&code, &shifted));
        let back = rep.to_word(&code);
        prop_assert_eq!(code.syndrome(back.entries()), code.syndrome(&u));
    }

    #[test]
    fn syndrome_radius_matches_brute_on_random_codes(
        k in 1usize..4,
        raw in prop::collection::vec(0u32..1000, 18),
    ) {
        let f = field(5);
        let n = 6;
        let Some(code) = random_code(&f, k, n, &raw) else { return Ok(()) };
        let bfs = covering_radius_syndrome(&code, BUDGET).unwrap().rho;
        let brute = covering_radius_brute(&code, BUDGET).unwrap().rho;
        prop_assert_eq!(bfs, brute);
    }
}
