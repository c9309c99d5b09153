//! List decoding.
//!
//! Three pieces live here:
//!
//! 1. A linear-algebraic interpolation decoder. For `1 <= m <= s` it finds
//!    a nonzero `(A_0, …, A_m)` with `deg A_0 <= D + k − 1`, `deg A_u <= D`
//!    and
//!
//!    ```text
//!    A_0(γ^j α_i) + Σ_u A_u(γ^j α_i) · y_i[j + u − 1] = 0
//!    ```
//!
//!    for every coordinate `i` and shift `0 <= j <= s − m`. Every message
//!    `f` solving `A_0(x) + Σ_u A_u(x) f(γ^{u−1} x) ≡ 0` forms an affine
//!    space of dimension at most `m − 1`, and it contains each codeword
//!    whose agreement `N` with `y` satisfies `N (s − m + 1) > D + k − 1`.
//! 2. Randomized certificate pruning: walks that slice a candidate space
//!    by agreement at uniformly random coordinates until at most one
//!    candidate remains.
//! 3. The brute-force oracle over all `q^k` messages.

use std::collections::BTreeMap;

use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frs::{FrsCode, Word};
use crate::linalg::{AffineSubspace, MatrixFq, ENUMERATION_CAP};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpolant {
    pub m: usize,
    pub degree_bound: usize,
    /// `A_0, A_1, …, A_m`.
    pub polys: Vec<Polynomial>,
}

impl Interpolant {
    /// `A_0(x) + Σ_u A_u(x) f(γ^{u−1} x)`.
    pub fn residual(&self, code: &FrsCode, f: &Polynomial) -> Polynomial {
        let field = code.field();
        self.polys[1..]
            .iter()
            .enumerate()
            .fold(self.polys[0].clone(), |acc, (u, a)| {
                acc.add(&a.mul(&f.dilate(field.gamma_pow(u as u64))))
            })
    }

    /// Evaluates the interpolation constraint at coordinate `i`, shift `j`.
    pub fn constraint_value(&self, code: &FrsCode, y: &Word, i: usize, j: usize) -> u64 {
        let f = code.field();
        let x = code.orbit(i)[j];
        let sym = y.symbol(i);
        self.polys[1..]
            .iter()
            .enumerate()
            .fold(self.polys[0].eval_raw(x), |acc, (u, a)| {
                f.add(acc, f.mul(a.eval_raw(x), sym[j + u]))
            })
    }
}

fn check_m(code: &FrsCode, m: usize) -> Result<()> {
    if m == 0 || m > code.s() {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= m <= s = {}, got m = {m}",
            code.s()
        )));
    }
    Ok(())
}

/// `D = floor((n(s−m+1) − k + 1)/(m+1))`, the smallest degree bound for
/// which unknowns outnumber constraints.
pub fn interpolation_degree(code: &FrsCode, m: usize) -> Result<usize> {
    check_m(code, m)?;
    let constraints = code.n() * (code.s() - m + 1);
    let numer = constraints as i64 - code.k() as i64 + 1;
    if numer < 0 {
        return Err(Error::InvalidParameters(format!(
            "interpolation infeasible for m = {m}: {constraints} constraints but k - 1 = {} (deficit {})",
            code.k() - 1,
            -numer
        )));
    }
    Ok(numer as usize / (m + 1))
}

/// Agreement needed for the decoder to capture a codeword:
/// `ceil((D + k)/(s − m + 1))`.
pub fn guaranteed_agreement(code: &FrsCode, m: usize) -> Result<usize> {
    let d = interpolation_degree(code, m)?;
    Ok((d + code.k()).div_ceil(code.s() - m + 1))
}

/// Radius `ρ_GW = (n − N + 1)/n` with `N` the guaranteed agreement, so that
/// `B(y, ρ_GW)` is exactly the set of words agreeing with `y` on `>= N`
/// coordinates. Non-positive when the decoder guarantees nothing.
pub fn gw_radius(code: &FrsCode, m: usize) -> Result<Rational> {
    let need = guaranteed_agreement(code, m)? as i64;
    Ok(Rational::new(code.n() as i64 - need + 1, code.n() as i64))
}

/// `min(s, ceil(2/ε))`.
pub fn default_m(code: &FrsCode, eps: &Rational) -> Result<usize> {
    if !eps.is_positive() {
        return Err(Error::InvalidParameters(format!(
            "epsilon must be positive, got {eps}"
        )));
    }
    let m = (Rational::from_int(2) / eps.clone())
        .ceil_usize()
        .unwrap_or(usize::MAX);
    Ok(m.clamp(1, code.s()))
}

pub fn gw_interpolate(code: &FrsCode, y: &Word, m: usize) -> Result<Interpolant> {
    code.check_word(y)?;
    let d = interpolation_degree(code, m)?;
    let field = code.field();
    let (k, s, n) = (code.k(), code.s(), code.n());
    let cols = (d + k) + m * (d + 1);
    let rows = n * (s - m + 1);
    let mut mat = MatrixFq::zeros(field, rows, cols);
    let mut row = 0;
    for i in 0..n {
        let sym = y.symbol(i);
        for j in 0..=(s - m) {
            let x = code.orbit(i)[j];
            let mut pw = 1;
            for e in 0..(d + k) {
                if e <= d {
                    for u in 1..=m {
                        let col = (d + k) + (u - 1) * (d + 1) + e;
                        mat.set(row, col, field.mul(pw, sym[j + u - 1]));
                    }
                }
                mat.set(row, e, pw);
                pw = field.mul(pw, x);
            }
            row += 1;
        }
    }
    let kernel = mat.kernel();
    let v = kernel.first().ok_or_else(|| {
        Error::InvalidParameters(format!(
            "interpolation system has {cols} unknowns for {rows} constraints"
        ))
    })?;
    let mut polys = vec![Polynomial::new(field, v[..d + k].iter().copied())];
    for u in 0..m {
        let start = (d + k) + u * (d + 1);
        polys.push(Polynomial::new(
            field,
            v[start..start + d + 1].iter().copied(),
        ));
    }
    Ok(Interpolant {
        m,
        degree_bound: d,
        polys,
    })
}

/// All `f` of degree `< k` with `A_0(x) + Σ_u A_u(x) f(γ^{u−1} x) ≡ 0`.
pub fn solution_space(code: &FrsCode, interp: &Interpolant) -> AffineSubspace {
    let field = code.field();
    let k = code.k();
    let d = interp.degree_bound;
    let rows = d + k;
    // B_c(x) = Σ_u γ^{(u−1)c} A_u(x); the coefficient of x^e in x^c B_c(x)
    // multiplies the unknown f_c.
    let mut mat = MatrixFq::zeros(field, rows, k);
    for c in 0..k {
        let b_c = interp.polys[1..]
            .iter()
            .enumerate()
            .fold(Polynomial::zero(field), |acc, (u, a)| {
                acc.add(&a.scale(field.gamma_pow((u * c) as u64)))
            });
        for (t, &coef) in b_c.coeffs().iter().enumerate() {
            if c + t < rows {
                mat.set(c + t, c, coef);
            }
        }
    }
    let rhs: Vec<u64> = (0..rows)
        .map(|e| field.neg(interp.polys[0].coeff(e)))
        .collect();
    AffineSubspace::full(field, k).restrict(&mat, &rhs)
}

/// Interpolation followed by solving for the candidate space.
pub fn gw_subspace(code: &FrsCode, y: &Word, m: usize) -> Result<AffineSubspace> {
    let interp = gw_interpolate(code, y, m)?;
    Ok(solution_space(code, &interp))
}

/// Picks a candidate space containing `B(y, ρ) ∩ C`: the smallest
/// interpolation space among the `m` whose guaranteed radius covers `ρ`,
/// otherwise the whole message space. Returns the space and the `m` used.
pub fn candidate_space(
    code: &FrsCode,
    y: &Word,
    rho: &Rational,
) -> Result<(AffineSubspace, Option<usize>)> {
    let mut best: Option<(usize, isize)> = None;
    for m in 1..=code.s() {
        let Ok(radius) = gw_radius(code, m) else {
            continue;
        };
        if rho > &radius {
            continue;
        }
        let a = gw_subspace(code, y, m)?;
        if best.is_none_or(|(_, dim)| a.dim() < dim) {
            best = Some((m, a.dim()));
        }
    }
    match best {
        Some((m, _)) => Ok((gw_subspace(code, y, m)?, Some(m))),
        None => Ok((AffineSubspace::full(code.field(), code.k()), None)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// Coordinates in the order they were drawn.
    pub coords: Vec<usize>,
    /// The unique remaining candidate, or `None` when the last slice was empty.
    #[serde(serialize_with = "ser_opt_poly")]
    pub codeword: Option<Polynomial>,
}

fn ser_opt_poly<S: serde::Serializer>(
    p: &Option<Polynomial>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    p.as_ref().map(|p| p.coeffs().to_vec()).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkOutcome {
    /// Slicing pinned a single candidate.
    Resolved {
        certificate: Certificate,
        in_ball: bool,
    },
    /// A slice became empty.
    DeadEnd { coords: Vec<usize> },
    /// `n` consecutive draws failed to shrink the space.
    Abandoned { coords: Vec<usize> },
}

/// One certificate walk from `a` (which must be nonempty).
pub fn certificate_walk(
    code: &FrsCode,
    y: &Word,
    a: &AffineSubspace,
    rho: &Rational,
    rng: &mut rng::Rng,
) -> WalkOutcome {
    let mut cur = a.clone();
    let mut coords = Vec::new();
    let mut stalled = 0;
    while cur.dim() > 0 {
        let i = rng.random_range(0..code.n());
        coords.push(i);
        let next = cur
            .slice(&code.agreement_constraints(i, y.symbol(i)))
            .expect("constraints match k");
        if next.dim() < cur.dim() {
            stalled = 0;
        } else {
            stalled += 1;
            if stalled >= code.n() {
                return WalkOutcome::Abandoned { coords };
            }
        }
        cur = next;
    }
    match cur.offset() {
        None => WalkOutcome::DeadEnd { coords },
        Some(f) => {
            let in_ball = code.within_radius(code.encode_unchecked(f).agreement(y), rho);
            WalkOutcome::Resolved {
                certificate: Certificate {
                    coords,
                    codeword: Some(f.clone()),
                },
                in_ball,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListEntry {
    #[serde(serialize_with = "ser_poly")]
    pub message: Polynomial,
    pub hits: u64,
    /// Certificate from the earliest trial that found this codeword.
    pub certificate: Certificate,
}

fn ser_poly<S: serde::Serializer>(p: &Polynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.coeffs().serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PruneResult {
    /// Sorted by canonical polynomial order.
    pub entries: Vec<ListEntry>,
    pub trials: u64,
    pub resolved: u64,
    pub outside_ball: u64,
    pub dead_ends: u64,
    pub abandoned: u64,
}

impl PruneResult {
    pub fn messages(&self) -> Vec<Polynomial> {
        self.entries.iter().map(|e| e.message.clone()).collect()
    }
}

/// Runs `trials` independent certificate walks (trial `t` uses stream `t`
/// of `seed`) and returns every resolved codeword inside `B(y, ρ)`.
pub fn prune_certificates(
    code: &FrsCode,
    y: &Word,
    a: &AffineSubspace,
    rho: &Rational,
    trials: u64,
    seed: u64,
) -> Result<PruneResult> {
    code.check_word(y)?;
    if trials == 0 {
        return Err(Error::InvalidParameters("trials must be at least 1".into()));
    }
    if a.is_empty() {
        return Err(Error::InvalidParameters(
            "certificate walks need a nonempty candidate space".into(),
        ));
    }
    if a.k() != code.k() {
        return Err(Error::DimensionMismatch(format!(
            "candidate space has k = {}, code has k = {}",
            a.k(),
            code.k()
        )));
    }
    let outcomes: Vec<WalkOutcome> = (0..trials)
        .into_par_iter()
        .map(|t| certificate_walk(code, y, a, rho, &mut rng::stream(seed, t)))
        .collect();
    let mut found: BTreeMap<Polynomial, (u64, Certificate)> = BTreeMap::new();
    let mut res = PruneResult {
        entries: Vec::new(),
        trials,
        resolved: 0,
        outside_ball: 0,
        dead_ends: 0,
        abandoned: 0,
    };
    for o in outcomes {
        match o {
            WalkOutcome::Resolved {
                certificate,
                in_ball,
            } => {
                res.resolved += 1;
                if !in_ball {
                    res.outside_ball += 1;
                    continue;
                }
                let f = certificate
                    .codeword
                    .clone()
                    .expect("resolved walks carry a codeword");
                found.entry(f).or_insert((0, certificate)).0 += 1;
            }
            WalkOutcome::DeadEnd { .. } => res.dead_ends += 1,
            WalkOutcome::Abandoned { .. } => res.abandoned += 1,
        }
    }
    res.entries = found
        .into_iter()
        .map(|(message, (hits, certificate))| ListEntry {
            message,
            hits,
            certificate,
        })
        .collect();
    Ok(res)
}

/// Trials sufficient for full coverage with probability `>= 1 − η` when each
/// member is hit with probability `>= ε^r` per trial:
/// `ceil(ln(r q / η) / ε^r)`.
pub fn recommended_trials(eps: &Rational, r: usize, q: u64, eta: f64) -> u64 {
    let p = eps.to_f64().powi(r as i32);
    let numer = ((r.max(1) as f64) * q as f64 / eta).ln().max(0.0);
    (numer / p).ceil().max(1.0) as u64
}

/// Exact `B(y, ρ) ∩ C` by enumerating all `q^k` messages, sorted canonically.
pub fn brute_force_list(code: &FrsCode, y: &Word, rho: &Rational) -> Result<Vec<Polynomial>> {
    brute_force_list_capped(code, y, rho, ENUMERATION_CAP)
}

pub fn brute_force_list_capped(
    code: &FrsCode,
    y: &Word,
    rho: &Rational,
    cap: u128,
) -> Result<Vec<Polynomial>> {
    Ok(brute_force_agreements(code, y, rho, cap)?
        .into_iter()
        .map(|(p, _)| p)
        .collect())
}

/// Like [`brute_force_list`], also returning each member's agreement with `y`.
pub fn brute_force_agreements(
    code: &FrsCode,
    y: &Word,
    rho: &Rational,
    cap: u128,
) -> Result<Vec<(Polynomial, usize)>> {
    code.check_word(y)?;
    let Some(need) = code.min_agreement_for(rho) else {
        // still enforce the cap so callers see consistent refusals
        if code.message_count() > cap {
            return Err(Error::EnumerationCap {
                required: code.message_count(),
                cap,
            });
        }
        return Ok(Vec::new());
    };
    let field = code.field();
    let mut out = Vec::new();
    code.for_each_codeword(cap, |coeffs, w| {
        let agr = w.agreement(y);
        if agr >= need {
            out.push((Polynomial::new(field, coeffs.iter().copied()), agr));
        }
    })?;
    out.sort();
    Ok(out)
}
