//! Cross-checks against independent oracles written here from scratch,
//! plus property tests over seeded random instances.

use std::collections::BTreeSet;

use frs_lab::bounds::{self, AgreementGraph};
use frs_lab::decode::{self, WalkOutcome};
use frs_lab::rng;
use frs_lab::suite::{self, Summary};
use frs_lab::{AffineSubspace, AlphaRule, FrsCode, Polynomial, Rational, Word};
use proptest::prelude::*;

fn code(q: u64, k: usize, s: usize, n: usize) -> FrsCode {
    FrsCode::new(q, k, s, n, AlphaRule::Default).unwrap()
}

fn modpow(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r
}

/// Encoding by direct evaluation at `g^{s i + j}`, with `g` the smallest
/// primitive root found by brute force.
fn naive_encode(q: u64, s: usize, n: usize, coeffs: &[u64]) -> Vec<Vec<u64>> {
    let g = (2..q)
        .find(|&g| (1..q - 1).all(|e| modpow(g, e, q) != 1))
        .unwrap();
    (0..n)
        .map(|i| {
            (0..s)
                .map(|j| {
                    let x = modpow(g, (s * i + j) as u64, q);
                    coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % q)
                })
                .collect()
        })
        .collect()
}

/// `(n − agreement) < ρ n`, with ρ given as an integer fraction.
fn naive_in_ball(agreement: usize, n: usize, num: i128, den: i128) -> bool {
    ((n - agreement) as i128) * den < (n as i128) * num
}

fn naive_list(
    q: u64,
    k: usize,
    s: usize,
    n: usize,
    y: &[Vec<u64>],
    num: i128,
    den: i128,
) -> Vec<Vec<u64>> {
    let total = q.pow(k as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let coeffs: Vec<u64> = (0..k).map(|c| idx / q.pow(c as u32) % q).collect();
        let w = naive_encode(q, s, n, &coeffs);
        let agr = w.iter().zip(y).filter(|(a, b)| a == b).count();
        if naive_in_ball(agr, n, num, den) {
            let mut trimmed = coeffs.clone();
            while trimmed.last() == Some(&0) {
                trimmed.pop();
            }
            out.push(trimmed);
        }
    }
    out.sort();
    out
}

#[test]
fn encoder_matches_direct_evaluation() {
    let c = code(13, 3, 3, 4);
    assert_eq!(c.alphas(), &[1, 8, 12, 5]);
    let mut rng = rng::stream(1, 0);
    for _ in 0..50 {
        let f = suite::random_message(&c, &mut rng);
        let want = naive_encode(13, 3, 4, &f.coeff_vec(3));
        assert_eq!(c.encode(&f).unwrap().to_symbols(), want);
    }
}

#[test]
fn oracle_matches_naive_enumeration() {
    for (k, s, n) in [(3, 3, 4), (3, 2, 6)] {
        let c = code(13, k, s, n);
        let mut rng = rng::stream(2, k as u64 * 10 + s as u64);
        for (num, den) in [(0, 1), (1, 3), (1, 2), (3, 4), (5, 6), (1, 1)] {
            let y = suite::received_word(&c, 2, &mut rng);
            let rho = Rational::new(num as i64, den as i64);
            let got: Vec<Vec<u64>> = decode::brute_force_list(&c, &y, &rho)
                .unwrap()
                .iter()
                .map(|p| p.coeffs().to_vec())
                .collect();
            assert_eq!(
                got,
                naive_list(13, k, s, n, &y.to_symbols(), num, den),
                "rho = {rho}"
            );
        }
    }
}

/// Determinant over F_q by elimination, used to spot-check the symbolic Wronskian.
fn naive_det(mut m: Vec<Vec<u64>>, q: u64) -> u64 {
    let r = m.len();
    let mut det = 1;
    for c in 0..r {
        let Some(p) = (c..r).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            det = (q - det) % q;
        }
        det = det * m[c][c] % q;
        let inv = modpow(m[c][c], q - 2, q);
        for i in c + 1..r {
            let f = m[i][c] * inv % q;
            for j in c..r {
                m[i][j] = (m[i][j] + q * q - f * m[c][j] % q) % q;
            }
        }
    }
    det
}

#[test]
fn wronskian_matches_pointwise_determinants() {
    let c = code(13, 4, 3, 4);
    let g = c.field().gamma();
    let mut rng = rng::stream(3, 0);
    for r in 1..=3 {
        for _ in 0..10 {
            let a = suite::random_subspace(&c, r, &mut rng);
            let w = bounds::folded_wronskian(a.basis()).unwrap();
            for x in 0..13u64 {
                let m: Vec<Vec<u64>> = (0..r)
                    .map(|j| {
                        a.basis()
                            .iter()
                            .map(|f| f.eval_raw(modpow(g, j as u64, 13) * x % 13))
                            .collect()
                    })
                    .collect();
                assert_eq!(w.eval_raw(x), naive_det(m, 13));
            }
        }
    }
}

#[test]
fn wronskian_degree_of_monomials() {
    // W(x^{e_1}, …, x^{e_r}) is a nonzero multiple of x^{Σ e_u}
    let c = code(13, 4, 3, 4);
    let f = c.field();
    let mono: Vec<Polynomial> = [0, 2, 3]
        .iter()
        .map(|&e| Polynomial::monomial(f, e))
        .collect();
    let w = bounds::folded_wronskian(&mono).unwrap();
    assert_eq!(w.degree(), Some(5));
    assert_eq!(w.coeffs().iter().filter(|&&c| c != 0).count(), 1);
}

fn richer_codes() -> Vec<FrsCode> {
    vec![code(13, 4, 3, 4), code(13, 4, 2, 6), code(13, 3, 2, 6)]
}

#[test]
fn bound_suites_on_richer_parameters() {
    for c in richer_codes() {
        let dims: Vec<usize> = (1..=c.s().min(c.k())).collect();
        let gk = suite::gk_suite(&c, &dims, 300, 5).unwrap();
        assert!(Summary::of(&gk).violations == 0, "{:?}", c.descriptor());
        assert!(
            gk.iter().any(|r| r.lhs.is_positive()),
            "no nonzero slice sums for {:?}",
            c.descriptor()
        );
        let wr = suite::wronskian_suite(&c, &dims, 100, 6).unwrap();
        assert_eq!(Summary::of(&wr).violations, 0);
        for r in 1..=c.s().min(c.k()) {
            for t in r..=c.s() {
                let sr = suite::srivastava_suite(&c, r, t, 150, 7).unwrap();
                assert_eq!(Summary::of(&sr).violations, 0, "r={r} t={t}");
            }
        }
    }
}

#[test]
fn chen_zhang_on_richer_parameters() {
    for c in richer_codes() {
        let rho = c.relative_distance() - Rational::new(1, 4);
        let edge = suite::cz_edge_suite(&c, &rho, 200, 8).unwrap();
        assert_eq!(Summary::of(&edge).violations, 0);
        for t in 1..=c.s() {
            let th = suite::cz_theorem_suite(&c, t, 150, 9).unwrap();
            assert_eq!(Summary::of(&th).violations, 0, "t={t}");
        }
    }
}

#[test]
fn multi_codeword_lists_appear() {
    // at (13, 4, 2, 6) two codewords may share a coordinate, so lists of
    // size >= 2 at radius 7/12 exercise the edge bound with overlaps
    let c = code(13, 4, 2, 6);
    let rho = Rational::new(7, 12);
    let edge = suite::cz_edge_suite(&c, &rho, 300, 10).unwrap();
    let list_len = |d: &str| {
        d.strip_prefix("list=")
            .and_then(|s| s.split(' ').next()?.parse::<usize>().ok())
    };
    let big = edge
        .iter()
        .filter(|r| r.detail.as_deref().and_then(list_len).unwrap_or(0) >= 2)
        .count();
    assert!(big > 0);
    assert_eq!(Summary::of(&edge).violations, 0);
}

#[test]
fn pruning_completeness_on_richer_parameters() {
    let c = code(13, 4, 2, 6);
    let runs = suite::prune_suite(&c, &Rational::new(1, 4), 4096, 40, 11).unwrap();
    assert!(runs.iter().all(|r| r.sound));
    let complete = runs.iter().filter(|r| r.complete).count();
    assert!(complete >= 39, "complete in {complete}/40");
    assert!(runs.iter().any(|r| r.oracle_size >= 1));
}

#[test]
fn gw_containment_on_richer_parameters() {
    for c in richer_codes() {
        for m in 1..=c.s() {
            if decode::gw_radius(&c, m).is_err() {
                continue;
            }
            let reps = suite::gw_containment_suite(&c, m, 100, 12).unwrap();
            assert_eq!(
                Summary::of(&reps).violations,
                0,
                "m={m} {:?}",
                c.descriptor()
            );
        }
    }
}

#[test]
fn list_recovery_growth() {
    let c = code(13, 5, 2, 6);
    let sizes: Vec<usize> = (1..=3)
        .map(|ell| {
            let b: Vec<u64> = (1..=ell).collect();
            frs_lab::recovery::measure(&frs_lab::recovery::build_counterexample(&c, 2, &b).unwrap())
                .unwrap()
                .family_size
        })
        .collect();
    assert_eq!(sizes, vec![1, 4, 9]);
}

fn distinct_list(c: &FrsCode, len: usize, seed: u64) -> Vec<Polynomial> {
    let mut rng = rng::stream(seed, 0);
    let mut set = BTreeSet::new();
    while set.len() < len {
        set.insert(suite::random_message(c, &mut rng));
    }
    set.into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_count_duality(seed in any::<u64>(), len in 1usize..6) {
        let c = code(13, 4, 2, 6);
        let list = distinct_list(&c, len, seed);
        let y = suite::received_word(&c, 3, &mut rng::stream(seed, 1));
        let g: AgreementGraph = bounds::agreement_graph(&c, &list, &y).unwrap();
        let left: usize = (0..g.m()).map(|i| g.left_degree(i)).sum();
        let right: usize = (0..g.n()).map(|j| g.right_degree(j)).sum();
        prop_assert_eq!(left, g.edge_count());
        prop_assert_eq!(right, g.edge_count());
    }

    #[test]
    fn genuine_lists_have_many_edges(seed in any::<u64>()) {
        let c = code(13, 4, 2, 6);
        let y = suite::received_word(&c, 2, &mut rng::stream(seed, 0));
        let rho = Rational::new(7, 12);
        let list = decode::brute_force_list(&c, &y, &rho).unwrap();
        prop_assume!(!list.is_empty());
        let g = bounds::agreement_graph(&c, &list, &y).unwrap();
        // Σ deg > m (1 − ρ) n
        let rhs = Rational::from(g.m()) * (Rational::one() - rho) * Rational::from(c.n());
        prop_assert!(Rational::from(g.edge_count()) > rhs);
    }

    #[test]
    fn partition_cells_cover_the_list(seed in any::<u64>(), len in 1usize..7) {
        let c = code(13, 4, 2, 6);
        // points on a random low-dimensional subspace so the hull is small
        let mut rng = rng::stream(seed, 0);
        let a = suite::random_subspace(&c, 2, &mut rng);
        let mut set = BTreeSet::new();
        for _ in 0..len {
            set.insert(suite::random_member(&a, &mut rng));
        }
        let list: Vec<Polynomial> = set.into_iter().collect();
        let part = bounds::cz_partition(&list, c.k()).unwrap();
        let mut seen: Vec<usize> = part.cells.iter().flatten().copied().collect();
        seen.sort();
        prop_assert_eq!(seen, (0..list.len()).collect::<Vec<_>>());
        prop_assert!(part.cells.iter().all(|cell| !cell.is_empty()));
        for (i, &rep) in part.representatives.iter().enumerate() {
            prop_assert!(part.cells[i].contains(&rep));
        }
        prop_assert_eq!(part.r() as isize, AffineSubspace::hull(&list, c.k()).unwrap().dim());
        prop_assert!(part.cross_picks_independent(c.k()));
        let y = suite::planted_word(&c, &a, &mut rng);
        prop_assert!(bounds::partition_slice_violations(&c, &part, &y).unwrap().is_empty());
    }

    #[test]
    fn certificates_are_minimal(seed in any::<u64>()) {
        let c = code(13, 4, 2, 6);
        let mut rng = rng::stream(seed, 0);
        let y = suite::received_word(&c, 2, &mut rng);
        let full = AffineSubspace::full(c.field(), c.k());
        let rho = Rational::new(7, 12);
        if let WalkOutcome::Resolved { certificate, .. } = decode::certificate_walk(&c, &y, &full, &rho, &mut rng) {
            let coords = &certificate.coords;
            let mut cur = full.clone();
            for (step, &i) in coords.iter().enumerate() {
                if step + 1 < coords.len() {
                    cur = cur.slice(&c.agreement_constraints(i, y.symbol(i))).unwrap();
                    prop_assert!(cur.dim() >= 1);
                }
            }
            let last = coords[coords.len() - 1];
            let fin = cur.slice(&c.agreement_constraints(last, y.symbol(last))).unwrap();
            prop_assert_eq!(fin.dim(), 0);
            prop_assert_eq!(fin.offset(), certificate.codeword.as_ref());
        }
    }

    #[test]
    fn prune_is_sound(seed in any::<u64>()) {
        let c = code(13, 4, 2, 6);
        let y = suite::received_word(&c, 3, &mut rng::stream(seed, 0));
        let rho = Rational::new(7, 12);
        let full = AffineSubspace::full(c.field(), c.k());
        let res = decode::prune_certificates(&c, &y, &full, &rho, 64, seed).unwrap();
        let oracle = decode::brute_force_list(&c, &y, &rho).unwrap();
        for f in res.messages() {
            prop_assert!(oracle.contains(&f));
        }
    }

    #[test]
    fn ball_membership_is_strict(num in 0i64..=12, seed in any::<u64>()) {
        let c = code(13, 4, 2, 6);
        let rho = Rational::new(num, 12);
        let mut rng = rng::stream(seed, 0);
        let y = suite::random_word(&c, &mut rng);
        let w: Word = c.encode(&suite::random_message(&c, &mut rng)).unwrap();
        let agr = w.agreement(&y);
        prop_assert_eq!(c.in_ball(&w, &y, &rho).unwrap(), naive_in_ball(agr, 6, num as i128, 12));
    }
}
