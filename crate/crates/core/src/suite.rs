//! Seeded randomized suites.
//!
//! Sample `i` of a suite run with seed `seed` draws everything from
//! [`rng::stream`]`(seed, i)`, samples run in parallel, and results come back
//! in sample order, so a suite's output depends only on its arguments.

use rand::seq::SliceRandom;
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, BoundReport};
use crate::decode;
use crate::error::{Error, Result};
use crate::frs::{FrsCode, Word};
use crate::linalg::{rank_of, AffineSubspace};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::rng::{self, Rng};

pub fn random_message(code: &FrsCode, rng: &mut Rng) -> Polynomial {
    let q = code.field().modulus();
    Polynomial::new(code.field(), (0..code.k()).map(|_| rng.random_range(0..q)))
}

pub fn random_word(code: &FrsCode, rng: &mut Rng) -> Word {
    let q = code.field().modulus();
    let mut w = Word::zeros(code.n(), code.s());
    for i in 0..code.n() {
        for v in w.symbol_mut(i) {
            *v = rng.random_range(0..q);
        }
    }
    w
}

/// Uniform affine subspace of dimension `r <= k` (rejection-sampled basis).
pub fn random_subspace(code: &FrsCode, r: usize, rng: &mut Rng) -> AffineSubspace {
    assert!(r <= code.k(), "dimension exceeds k");
    let offset = random_message(code, rng);
    loop {
        let basis: Vec<Polynomial> = (0..r).map(|_| random_message(code, rng)).collect();
        if rank_of(code.field(), &basis, code.k()) == r {
            return AffineSubspace::new(offset, basis, code.k()).expect("independent basis");
        }
    }
}

pub fn random_member(a: &AffineSubspace, rng: &mut Rng) -> Polynomial {
    let q = a.field().modulus();
    let betas: Vec<u64> = (0..a.dim().max(0))
        .map(|_| rng.random_range(0..q))
        .collect();
    a.member(&betas).expect("nonempty subspace")
}

/// Deals the coordinates, in random order, round-robin to `sources`; each
/// coordinate copies its source's symbol unless a 1/8 coin leaves it
/// uniform.
pub fn mixed_word(code: &FrsCode, sources: &[Word], rng: &mut Rng) -> Word {
    let mut y = random_word(code, rng);
    if sources.is_empty() {
        return y;
    }
    let mut order: Vec<usize> = (0..code.n()).collect();
    order.shuffle(rng);
    for (pos, &i) in order.iter().enumerate() {
        if !rng.random_ratio(1, 8) {
            y.symbol_mut(i)
                .copy_from_slice(sources[pos % sources.len()].symbol(i));
        }
    }
    y
}

/// A received word built from one to three random members of `a`.
pub fn planted_word(code: &FrsCode, a: &AffineSubspace, rng: &mut Rng) -> Word {
    let count = rng.random_range(1..=3);
    let sources: Vec<Word> = (0..count)
        .map(|_| code.encode_unchecked(&random_member(a, rng)))
        .collect();
    mixed_word(code, &sources, rng)
}

/// A received word for whole-code suites: uniform with probability 1/4,
/// otherwise mixed from one to `max_sources` random codewords.
pub fn received_word(code: &FrsCode, max_sources: usize, rng: &mut Rng) -> Word {
    if rng.random_ratio(1, 4) {
        return random_word(code, rng);
    }
    let count = rng.random_range(1..=max_sources.max(1));
    let sources: Vec<Word> = (0..count)
        .map(|_| code.encode_unchecked(&random_message(code, rng)))
        .collect();
    mixed_word(code, &sources, rng)
}

fn run<T: Send>(
    samples: u64,
    seed: u64,
    f: impl Fn(u64, &mut Rng) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    (0..samples)
        .into_par_iter()
        .map(|i| f(i, &mut rng::stream(seed, i)))
        .collect()
}

/// Guruswami–Kopparty on random `(A, y)`; sample `i` uses `dims[i % len]`.
pub fn gk_suite(
    code: &FrsCode,
    dims: &[usize],
    samples: u64,
    seed: u64,
) -> Result<Vec<BoundReport>> {
    check_dims(code, dims)?;
    run(samples, seed, |i, rng| {
        let a = random_subspace(code, dims[i as usize % dims.len()], rng);
        let y = planted_word(code, &a, rng);
        Ok(bounds::check_gk(code, &a, &y)?.with_seed(i))
    })
}

pub fn wronskian_suite(
    code: &FrsCode,
    dims: &[usize],
    samples: u64,
    seed: u64,
) -> Result<Vec<BoundReport>> {
    check_dims(code, dims)?;
    if dims.contains(&0) {
        return Err(Error::InvalidParameters(
            "the Wronskian suite needs dimensions >= 1".into(),
        ));
    }
    run(samples, seed, |i, rng| {
        let a = random_subspace(code, dims[i as usize % dims.len()], rng);
        let y = planted_word(code, &a, rng);
        Ok(bounds::check_wronskian_multiplicity(code, &a, &y)?.with_seed(i))
    })
}

fn check_dims(code: &FrsCode, dims: &[usize]) -> Result<()> {
    if dims.is_empty() {
        return Err(Error::EmptyInput("subspace dimensions"));
    }
    if let Some(&r) = dims.iter().find(|&&r| r > code.s() || r > code.k()) {
        return Err(Error::InvalidParameters(format!(
            "dimension {r} exceeds min(s, k)"
        )));
    }
    Ok(())
}

pub fn srivastava_suite(
    code: &FrsCode,
    r: usize,
    t: usize,
    samples: u64,
    seed: u64,
) -> Result<Vec<BoundReport>> {
    if r > code.k() {
        return Err(Error::InvalidParameters(format!(
            "r = {r} exceeds k = {}",
            code.k()
        )));
    }
    run(samples, seed, |i, rng| {
        let a = random_subspace(code, r, rng);
        let y = planted_word(code, &a, rng);
        Ok(bounds::check_srivastava(code, &a, &y, t)?.with_seed(i))
    })
}

/// Edge bound on every nonempty sublist of the oracle list `B(y, ρ) ∩ C`.
/// The per-sample report is the sublist with the least slack; `holds` also
/// requires the chain-partition checks on the full list.
pub fn cz_edge_suite(
    code: &FrsCode,
    rho: &Rational,
    samples: u64,
    seed: u64,
) -> Result<Vec<BoundReport>> {
    run(samples, seed, |i, rng| {
        let y = received_word(code, 3, rng);
        let list = decode::brute_force_list(code, &y, rho)?;
        Ok(sublist_edge_report(code, &list, &y)?
            .with_seed(i)
            .with_rho(rho.clone()))
    })
}

const MAX_SUBLIST_LIST: usize = 12;

fn sublist_edge_report(code: &FrsCode, list: &[Polynomial], y: &Word) -> Result<BoundReport> {
    if list.is_empty() {
        return Ok(
            BoundReport::new("cz-edge", Rational::zero(), Rational::zero())
                .with_m(0)
                .with_detail("empty list"),
        );
    }
    if list.len() > MAX_SUBLIST_LIST {
        return Err(Error::InvalidParameters(format!(
            "list of {} is too long for sublist enumeration",
            list.len()
        )));
    }
    let mut worst: Option<(Rational, BoundReport)> = None;
    let mut failing = 0usize;
    let total = (1usize << list.len()) - 1;
    for mask in 1..=total {
        let sub: Vec<Polynomial> = (0..list.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| list[b].clone())
            .collect();
        let rep = bounds::check_cz_edge_bound(code, &sub, y)?;
        failing += usize::from(!rep.holds);
        let slack = &rep.rhs - &rep.lhs;
        if worst.as_ref().is_none_or(|(w, _)| slack < *w) {
            worst = Some((slack, rep));
        }
    }
    let part = bounds::cz_partition(list, code.k())?;
    let partition_ok = part.cross_picks_independent(code.k())
        && bounds::partition_slice_violations(code, &part, y)?.is_empty();
    let (_, mut rep) = worst.expect("at least one sublist");
    rep.holds = failing == 0 && partition_ok;
    Ok(rep.with_detail(format!(
        "list={} sublists={total} failing={failing} partition_ok={partition_ok}",
        list.len()
    )))
}

pub fn cz_theorem_suite(
    code: &FrsCode,
    t: usize,
    samples: u64,
    seed: u64,
) -> Result<Vec<BoundReport>> {
    run(samples, seed, |i, rng| {
        let y = received_word(code, t + 2, rng);
        Ok(bounds::check_cz_theorem(code, &y, t)?.with_seed(i))
    })
}

/// Final state of one hill-climb.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzOutcome {
    pub seed: u64,
    pub y: Word,
    pub list_size: usize,
    /// Sum of the `t + 1` largest agreements with `y` over the code.
    pub top_agreement: usize,
    pub report: BoundReport,
}

fn fuzz_score(
    code: &FrsCode,
    y: &Word,
    need: usize,
    t: usize,
) -> Result<(usize, usize, Vec<Word>)> {
    // keep the t + 2 best codewords; the ones just outside the ball guide the next move
    let keep = t + 2;
    let mut best: Vec<(usize, Word)> = Vec::with_capacity(keep + 1);
    let mut in_ball = 0usize;
    code.for_each_codeword(crate::linalg::ENUMERATION_CAP, |_, w| {
        let a = w.agreement(y);
        if a >= need {
            in_ball += 1;
        }
        if best.len() < keep || a > best[best.len() - 1].0 {
            let pos = best.partition_point(|(b, _)| *b >= a);
            best.insert(pos, (a, w.clone()));
            best.truncate(keep);
        }
    })?;
    let top = best.iter().take(t + 1).map(|(a, _)| a).sum();
    Ok((in_ball, top, best.into_iter().map(|(_, w)| w).collect()))
}

/// Hill-climbing search for a received word with a large list at the
/// Chen–Zhang radius for `t`. Score is the list size, ties broken by the
/// sum of the top `t + 1` agreements; moves that do not lower the score are
/// kept. Each restart is one sample.
pub fn fuzz(
    code: &FrsCode,
    t: usize,
    samples: u64,
    steps: usize,
    seed: u64,
) -> Result<Vec<FuzzOutcome>> {
    let rho = bounds::cz_radius(code, t, t)?;
    let Some(need) = code.min_agreement_for(&rho) else {
        return run(samples, seed, |i, rng| {
            let y = random_word(code, rng);
            let report = BoundReport::new("fuzz", Rational::zero(), Rational::from(t))
                .with_t(t)
                .with_rho(rho.clone())
                .with_seed(i);
            Ok(FuzzOutcome {
                seed: i,
                y,
                list_size: 0,
                top_agreement: 0,
                report,
            })
        });
    };
    let q = code.field().modulus();
    run(samples, seed, |i, rng| {
        let mut y = received_word(code, t + 2, rng);
        let (mut size, mut top, mut near) = fuzz_score(code, &y, need, t)?;
        for _ in 0..steps {
            let mut cand = y.clone();
            let j = rng.random_range(0..code.n());
            if rng.random_ratio(3, 4) && !near.is_empty() {
                let src = &near[rng.random_range(0..near.len())];
                cand.symbol_mut(j).copy_from_slice(src.symbol(j));
            } else {
                for v in cand.symbol_mut(j) {
                    *v = rng.random_range(0..q);
                }
            }
            let (s2, t2, n2) = fuzz_score(code, &cand, need, t)?;
            if (s2, t2) >= (size, top) {
                (y, size, top, near) = (cand, s2, t2, n2);
            }
        }
        let mut report = BoundReport::new("fuzz", Rational::from(size), Rational::from(t))
            .with_t(t)
            .with_rho(rho.clone())
            .with_seed(i);
        if !report.holds {
            report = report.with_detail(format!(
                "witness y = {}",
                serde_json::to_string(&y).expect("word serializes")
            ));
        }
        Ok(FuzzOutcome {
            seed: i,
            y,
            list_size: size,
            top_agreement: top,
            report,
        })
    })
}

/// One pruning run compared against the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PruneSample {
    pub seed: u64,
    pub prune_seed: u64,
    pub candidate_dim: isize,
    pub gw_m: Option<usize>,
    pub oracle_size: usize,
    pub found: usize,
    pub sound: bool,
    pub complete: bool,
    /// Smallest per-trial hit frequency among found codewords.
    pub min_hit_rate: Option<Rational>,
    pub abandoned: u64,
}

impl PruneSample {
    pub fn report(&self, eps: &Rational, rho: &Rational) -> BoundReport {
        let extra = if self.sound { 0 } else { 1 };
        let mut rep = BoundReport::new("prune", Rational::from_int(extra), Rational::zero())
            .with_rho(rho.clone())
            .with_seed(self.seed);
        rep.r = usize::try_from(self.candidate_dim).ok();
        let floor = self.candidate_dim.max(0) as i32;
        let eps_r = (0..floor).fold(Rational::one(), |acc, _| acc * eps.clone());
        rep.with_detail(format!(
            "oracle={} found={} complete={} min_hit_rate={} eps^r={eps_r}",
            self.oracle_size,
            self.found,
            self.complete,
            self.min_hit_rate
                .as_ref()
                .map_or("-".into(), ToString::to_string)
        ))
    }
}

/// Pruning at `ρ = δ − ε` from the smallest interpolation space covering
/// `ρ` (or the full message space), against the brute-force list.
pub fn prune_suite(
    code: &FrsCode,
    eps: &Rational,
    trials: u64,
    samples: u64,
    seed: u64,
) -> Result<Vec<PruneSample>> {
    let rho = code.relative_distance() - eps.clone();
    if !rho.is_positive() {
        return Err(Error::InvalidParameters(format!(
            "radius delta - eps = {rho} is not positive"
        )));
    }
    // samples run in sequence; the trials inside each run are parallel
    (0..samples)
        .map(|i| {
            let mut rng = rng::stream(seed, i);
            let y = received_word(code, 3, &mut rng);
            let prune_seed: u64 = rng.random();
            let oracle = decode::brute_force_list(code, &y, &rho)?;
            let (a, gw_m) = decode::candidate_space(code, &y, &rho)?;
            let res = if a.is_empty() {
                None
            } else {
                Some(decode::prune_certificates(
                    code, &y, &a, &rho, trials, prune_seed,
                )?)
            };
            let found = res.as_ref().map(|r| r.messages()).unwrap_or_default();
            let sound = found.iter().all(|f| oracle.binary_search(f).is_ok());
            let min_hit_rate = res
                .as_ref()
                .and_then(|r| r.entries.iter().map(|e| e.hits).min())
                .map(|h| Rational::new(h as i64, trials as i64));
            Ok(PruneSample {
                seed: i,
                prune_seed,
                candidate_dim: a.dim(),
                gw_m,
                oracle_size: oracle.len(),
                found: found.len(),
                sound,
                complete: found == oracle,
                min_hit_rate,
                abandoned: res.map_or(0, |r| r.abandoned),
            })
        })
        .collect()
}

/// `B(y, ρ_GW) ∩ C ⊆ A` and `dim A <= m − 1`. The report compares `dim A`
/// with `m − 1`; `holds` also requires containment.
pub fn gw_containment_suite(
    code: &FrsCode,
    m: usize,
    samples: u64,
    seed: u64,
) -> Result<Vec<BoundReport>> {
    let rho = decode::gw_radius(code, m)?;
    run(samples, seed, |i, rng| {
        let y = received_word(code, m + 1, rng);
        let a = decode::gw_subspace(code, &y, m)?;
        let list = decode::brute_force_list(code, &y, &rho)?;
        let contained = list.iter().all(|f| a.contains(f));
        let mut rep = BoundReport::new(
            "gw-containment",
            Rational::from_int(a.dim() as i64),
            Rational::from(m - 1),
        )
        .with_m(m)
        .with_rho(rho.clone())
        .with_seed(i);
        rep.holds &= contained;
        Ok(rep.with_detail(format!("list={} contained={contained}", list.len())))
    })
}

/// Twenty rates `R_i = i (s − t + 1) / (21 s)`, so `τ_t = i/21` stays
/// below 1.
pub fn rate_grid(eps: &Rational) -> Result<Vec<Rational>> {
    let (t, s) = bounds::chain_parameters(eps)?;
    Ok((1..=20)
        .map(|i| Rational::new(i * (s - t + 1) as i64, 21 * s as i64))
        .collect())
}

pub fn parameter_chain_grid(eps_list: &[Rational]) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for eps in eps_list {
        for rate in rate_grid(eps)? {
            out.push(bounds::check_parameter_chain(eps, &rate)?);
        }
    }
    Ok(out)
}

/// Counts over a batch of reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub violations: usize,
    pub not_applicable: usize,
}

impl Summary {
    pub fn of(reports: &[BoundReport]) -> Self {
        let mut s = Summary {
            total: reports.len(),
            ..Default::default()
        };
        for r in reports {
            if !r.applicable {
                s.not_applicable += 1;
            } else if r.holds {
                s.holds += 1;
            } else {
                s.violations += 1;
            }
        }
        s
    }

    pub fn all_hold(&self) -> bool {
        self.violations == 0
    }
}
