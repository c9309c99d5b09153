//! Agreement graphs, slice dimensions, the folded Wronskian, and executable
//! checks of the list-size bounds for folded Reed–Solomon codes.
//!
//! Every `check_*` function returns a [`BoundReport`] whose `holds` field
//! is `lhs <= rhs` computed with exact integers and rationals. The bounds
//! are theorems, so a report with `holds == false` on valid input points
//! at a defect in this crate.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::frs::{FrsCode, Word};
use crate::linalg::{rank_of, AffineSubspace, ENUMERATION_CAP};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Outcome of one bound check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub bound: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    /// False when the inputs fall outside the regime the bound speaks
    /// about; such reports are informational and never count as failures.
    pub applicable: bool,
    pub r: Option<usize>,
    pub t: Option<usize>,
    pub m: Option<usize>,
    pub rho: Option<Rational>,
    pub seed: Option<u64>,
    pub detail: Option<String>,
}

impl BoundReport {
    pub fn new(bound: &str, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs <= rhs;
        Self {
            bound: bound.into(),
            lhs,
            rhs,
            holds,
            applicable: true,
            r: None,
            t: None,
            m: None,
            rho: None,
            seed: None,
            detail: None,
        }
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }
    pub fn with_t(mut self, t: usize) -> Self {
        self.t = Some(t);
        self
    }
    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }
    pub fn with_rho(mut self, rho: Rational) -> Self {
        self.rho = Some(rho);
        self
    }
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// A violation is an applicable report that does not hold.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }

    /// Flat row used for both JSON and CSV output.
    pub fn row(&self) -> ReportRow {
        ReportRow {
            bound: self.bound.clone(),
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
            holds: self.holds,
            applicable: self.applicable,
            r: self.r,
            t: self.t,
            m: self.m,
            rho_num: self.rho.as_ref().map(|r| r.numer().to_string()),
            rho_den: self.rho.as_ref().map(|r| r.denom().to_string()),
            seed: self.seed,
            detail: self.detail.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub bound: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub applicable: bool,
    pub r: Option<usize>,
    pub t: Option<usize>,
    pub m: Option<usize>,
    pub rho_num: Option<String>,
    pub rho_den: Option<String>,
    pub seed: Option<u64>,
    pub detail: Option<String>,
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.row().serialize(s)
    }
}

/// Bipartite incidence between a list of distinct codewords (left) and the
/// `n` coordinates (right); `(i, j)` is an edge when codeword `i` agrees
/// with `y` at coordinate `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementGraph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    right_degree: Vec<usize>,
}

impl AgreementGraph {
    pub fn from_words(words: &[Word], y: &Word) -> Self {
        let n = y.n();
        let adjacency: Vec<Vec<usize>> = words.iter().map(|w| w.agreeing_coords(y)).collect();
        let mut right_degree = vec![0; n];
        for j in adjacency.iter().flatten() {
            right_degree[*j] += 1;
        }
        Self {
            n,
            adjacency,
            right_degree,
        }
    }

    /// Number of left vertices.
    pub fn m(&self) -> usize {
        self.adjacency.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `E_G`.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// `n_G`: right vertices of degree at least one.
    pub fn covered(&self) -> usize {
        self.right_degree.iter().filter(|&&d| d > 0).count()
    }

    pub fn left_degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn right_degree(&self, j: usize) -> usize {
        self.right_degree[j]
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Subgraph induced by a subset of left vertices.
    pub fn induced(&self, left: &[usize]) -> Self {
        let adjacency: Vec<Vec<usize>> = left.iter().map(|&i| self.adjacency[i].clone()).collect();
        let mut right_degree = vec![0; self.n];
        for j in adjacency.iter().flatten() {
            right_degree[*j] += 1;
        }
        Self {
            n: self.n,
            adjacency,
            right_degree,
        }
    }
}

fn check_distinct(list: &[Polynomial]) -> Result<()> {
    let set: BTreeSet<&Polynomial> = list.iter().collect();
    if set.len() != list.len() {
        return Err(Error::InvalidParameters(
            "codeword list contains duplicates".into(),
        ));
    }
    Ok(())
}

/// Agreement graph of a list of distinct messages against `y`.
pub fn agreement_graph(code: &FrsCode, list: &[Polynomial], y: &Word) -> Result<AgreementGraph> {
    code.check_word(y)?;
    check_distinct(list)?;
    let words = list
        .iter()
        .map(|f| code.encode(f))
        .collect::<Result<Vec<_>>>()?;
    Ok(AgreementGraph::from_words(&words, y))
}

/// Slice dimensions `r_i = dim{f ∈ A : f agrees with y at i}`, with `-1`
/// for coordinates where no member agrees.
pub fn slice_dims(code: &FrsCode, a: &AffineSubspace, y: &Word) -> Result<Vec<isize>> {
    code.check_word(y)?;
    if a.is_empty() {
        return Err(Error::InvalidParameters(
            "slice dimensions of the empty subspace".into(),
        ));
    }
    (0..code.n())
        .map(|i| Ok(a.slice(&code.agreement_constraints(i, y.symbol(i)))?.dim()))
        .collect()
}

fn nonempty_dim(a: &AffineSubspace, code: &FrsCode) -> Result<usize> {
    if a.is_empty() {
        return Err(Error::InvalidParameters(
            "bound checks need a nonempty affine subspace".into(),
        ));
    }
    if a.k() != code.k() || a.field() != code.field() {
        return Err(Error::DimensionMismatch(
            "subspace does not live in this code's message space".into(),
        ));
    }
    Ok(a.dim() as usize)
}

/// `Σ_i max(r_i, 0) <= r · τ_r · n = rk/(s − r + 1)`.
pub fn check_gk(code: &FrsCode, a: &AffineSubspace, y: &Word) -> Result<BoundReport> {
    let r = nonempty_dim(a, code)?;
    let tau = code.tau(r)?;
    let dims = slice_dims(code, a, y)?;
    let lhs: isize = dims.iter().map(|&d| d.max(0)).sum();
    let rhs = Rational::from(r) * tau * Rational::from(code.n());
    Ok(BoundReport::new("gk", Rational::from(lhs as usize), rhs).with_r(r))
}

/// Determinant of the `r × r` matrix with entry `(j, u) = f_u(γ^j x)`,
/// expanded by cofactors over the polynomial ring.
pub fn folded_wronskian(fs: &[Polynomial]) -> Result<Polynomial> {
    let first = fs
        .first()
        .ok_or(Error::EmptyInput("folded Wronskian of no polynomials"))?;
    let field = first.field();
    for f in fs {
        field.check_same(&f.field())?;
    }
    let width = fs.iter().map(|f| f.coeffs().len()).max().unwrap_or(0);
    if rank_of(field, fs, width) != fs.len() {
        return Err(Error::LinearlyDependent);
    }
    let r = fs.len();
    let matrix: Vec<Vec<Polynomial>> = (0..r)
        .map(|j| {
            fs.iter()
                .map(|f| f.dilate(field.gamma_pow(j as u64)))
                .collect()
        })
        .collect();
    let cols: Vec<usize> = (0..r).collect();
    Ok(cofactor_det(&matrix, 0, &cols))
}

fn cofactor_det(m: &[Vec<Polynomial>], row: usize, cols: &[usize]) -> Polynomial {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let field = m[0][0].field();
    let mut acc = Polynomial::zero(field);
    for (idx, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = m[row][c].mul(&cofactor_det(m, row + 1, &rest));
        acc = if idx % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// For every coordinate with `r_i >= 1`, each `σ ∈ {α_i, γα_i, …,
/// γ^{s−r}α_i}` must be a root of the folded Wronskian of `A`'s basis with
/// multiplicity at least `r_i`. The report compares `Σ r_i (s − r + 1)`
/// with `rk`; `holds` additionally requires every multiplicity check and
/// `Σ r_i (s − r + 1) <= deg W <= rk`.
pub fn check_wronskian_multiplicity(
    code: &FrsCode,
    a: &AffineSubspace,
    y: &Word,
) -> Result<BoundReport> {
    let r = nonempty_dim(a, code)?;
    if r == 0 {
        return Err(Error::InvalidParameters(
            "the Wronskian check needs dim A >= 1".into(),
        ));
    }
    if r > code.s() {
        return Err(Error::InvalidParameters(format!(
            "dim A = {r} exceeds s = {}",
            code.s()
        )));
    }
    let w = folded_wronskian(a.basis())?;
    let deg_w = w
        .degree()
        .ok_or_else(|| Error::InvalidParameters("folded Wronskian vanished".into()))?;
    let dims = slice_dims(code, a, y)?;
    let window = code.s() - r + 1;
    let mut weighted = 0usize;
    let mut failures = Vec::new();
    for (i, &ri) in dims.iter().enumerate() {
        if ri < 1 {
            continue;
        }
        let ri = ri as usize;
        weighted += ri * window;
        for &sigma in &code.orbit(i)[..window] {
            let mult = w.root_multiplicity(sigma).expect("W is nonzero");
            if mult < ri {
                failures.push(format!("coord {i}: mult at {sigma} is {mult} < {ri}"));
            }
        }
    }
    let rk = r * code.k();
    let mut rep =
        BoundReport::new("wronskian", Rational::from(weighted), Rational::from(rk)).with_r(r);
    rep.holds = failures.is_empty() && weighted <= deg_w && deg_w <= rk;
    let detail = if failures.is_empty() {
        format!("deg W = {deg_w}")
    } else {
        format!("deg W = {deg_w}; {}", failures.join("; "))
    };
    Ok(rep.with_detail(detail))
}

/// Visits every member of `a` with its encoding, in the same order as
/// [`AffineSubspace::enumerate`]. Encodings are updated incrementally.
pub fn for_each_member_encoding(
    code: &FrsCode,
    a: &AffineSubspace,
    cap: u128,
    mut visit: impl FnMut(&[u64], &Word),
) -> Result<()> {
    let size = a.size();
    if size > cap {
        return Err(Error::EnumerationCap {
            required: size,
            cap,
        });
    }
    let Some(offset) = a.offset() else {
        return Ok(());
    };
    let field = code.field();
    let q = field.modulus();
    let dirs: Vec<Word> = a
        .basis()
        .iter()
        .map(|b| code.encode(b))
        .collect::<Result<_>>()?;
    let r = dirs.len();
    let mut word = code.encode(offset)?;
    let mut betas = vec![0u64; r];
    for step in 0..size {
        visit(&betas, &word);
        if step + 1 == size {
            break;
        }
        for u in (0..r).rev() {
            betas[u] += 1;
            if betas[u] < q {
                word = word.lin_comb(1, &dirs[u], 1, field);
                break;
            }
            betas[u] = 0;
            word = word.lin_comb(1, &dirs[u], 1, field);
        }
    }
    Ok(())
}

/// `|B(y, ρ) ∩ A|` by enumeration.
pub fn count_in_ball(
    code: &FrsCode,
    a: &AffineSubspace,
    y: &Word,
    rho: &Rational,
) -> Result<usize> {
    code.check_word(y)?;
    let Some(need) = code.min_agreement_for(rho) else {
        return Ok(0);
    };
    let mut count = 0;
    for_each_member_encoding(code, a, ENUMERATION_CAP, |_, w| {
        if w.agreement(y) >= need {
            count += 1;
        }
    })?;
    Ok(count)
}

/// `|B(y, (t/(t+1))(1 − τ_r)) ∩ A| <= (t − 1) r + 1` for `r = dim A <= t <= s`.
/// When `r = 1` the right side is `t`, which is the base-case bound at radius
/// `(t/(t+1))(1 − R)`.
pub fn check_srivastava(
    code: &FrsCode,
    a: &AffineSubspace,
    y: &Word,
    t: usize,
) -> Result<BoundReport> {
    let r = nonempty_dim(a, code)?;
    if t < r || t > code.s() {
        return Err(Error::InvalidParameters(format!(
            "need r <= t <= s, got r={r}, t={t}, s={}",
            code.s()
        )));
    }
    let rho = cz_radius(code, t, r)?;
    let lhs = count_in_ball(code, a, y, &rho)?;
    let rhs = ((t as i64 - 1) * r as i64 + 1).max(0);
    let mut rep = BoundReport::new("srivastava", Rational::from(lhs), Rational::from_int(rhs))
        .with_r(r)
        .with_t(t)
        .with_rho(rho);
    if r == 1 {
        rep = rep.with_detail(format!("base case: {lhs} <= t = {t}"));
    }
    Ok(rep)
}

/// `(t/(t+1)) (1 − τ_r)`.
pub fn cz_radius(code: &FrsCode, t: usize, r: usize) -> Result<Rational> {
    let tau = code.tau(r)?;
    Ok(Rational::new(t as i64, t as i64 + 1) * (Rational::one() - tau))
}

/// `E_G <= (m − 1) · n · τ_r + n_G` with `r` the dimension of the affine hull.
pub fn check_cz_edge_bound(code: &FrsCode, list: &[Polynomial], y: &Word) -> Result<BoundReport> {
    if list.is_empty() {
        return Err(Error::EmptyInput("edge bound of an empty list"));
    }
    let g = agreement_graph(code, list, y)?;
    let r = AffineSubspace::hull(list, code.k())?.dim() as usize;
    edge_bound_report(code, &g, r)
}

fn edge_bound_report(code: &FrsCode, g: &AgreementGraph, r: usize) -> Result<BoundReport> {
    let tau = code.tau(r)?;
    let m = g.m();
    let rhs = Rational::from(m - 1) * Rational::from(code.n()) * tau + Rational::from(g.covered());
    Ok(
        BoundReport::new("cz-edge", Rational::from(g.edge_count()), rhs)
            .with_r(r)
            .with_m(m),
    )
}

/// The chain partition `(H_0, …, H_r)` of a list by a greedy spanning
/// sequence `f^(0), …, f^(r)` (scan in canonical order, keep whatever
/// enlarges the affine hull).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CzPartition {
    /// The list in canonical order; indices below refer to it.
    pub list: Vec<Polynomial>,
    pub representatives: Vec<usize>,
    pub cells: Vec<Vec<usize>>,
}

impl CzPartition {
    pub fn r(&self) -> usize {
        self.cells.len() - 1
    }

    /// Which cell holds list element `idx`.
    pub fn cell_of(&self, idx: usize) -> usize {
        self.cells
            .iter()
            .position(|c| c.contains(&idx))
            .expect("partition covers the list")
    }

    /// Every choice of at most one element per cell is affinely
    /// independent. Exhaustive over all `Π (|H_i| + 1)` selections.
    pub fn cross_picks_independent(&self, k: usize) -> bool {
        let field = self.list[0].field();
        let mut choice = vec![0usize; self.cells.len()]; // 0 = skip, c = cells[i][c-1]
        loop {
            let picked: Vec<&Polynomial> = choice
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| &self.list[self.cells[i][c - 1]])
                .collect();
            if let Some((first, rest)) = picked.split_first() {
                let diffs: Vec<Polynomial> = rest.iter().map(|p| p.sub(first)).collect();
                if rank_of(field, &diffs, k) != diffs.len() {
                    return false;
                }
            }
            // advance the mixed-radix counter
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return true;
                }
                choice[i] += 1;
                if choice[i] <= self.cells[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

pub fn cz_partition(list: &[Polynomial], k: usize) -> Result<CzPartition> {
    if list.is_empty() {
        return Err(Error::EmptyInput("partition of an empty list"));
    }
    check_distinct(list)?;
    let mut list = list.to_vec();
    list.sort();
    let field = list[0].field();
    let mut reps = vec![0usize];
    let mut dirs: Vec<Polynomial> = Vec::new();
    for (idx, p) in list.iter().enumerate().skip(1) {
        let mut cand = dirs.clone();
        cand.push(p.sub(&list[0]));
        if rank_of(field, &cand, k) == cand.len() {
            dirs = cand;
            reps.push(idx);
        }
    }
    // chain A^(0) ⊂ A^(1) ⊂ … ; element goes to the first level containing it
    let chain: Vec<AffineSubspace> = (0..reps.len())
        .map(|i| {
            let pts: Vec<Polynomial> = reps[..=i].iter().map(|&j| list[j].clone()).collect();
            AffineSubspace::hull(&pts, k)
        })
        .collect::<Result<_>>()?;
    let mut cells = vec![Vec::new(); reps.len()];
    for (idx, p) in list.iter().enumerate() {
        let level = chain
            .iter()
            .position(|a| a.contains(p))
            .expect("top of the chain is the hull");
        cells[level].push(idx);
    }
    Ok(CzPartition {
        list,
        representatives: reps,
        cells,
    })
}

/// For each covered coordinate `j`, the slice of the hull agreeing with `y`
/// at `j` has dimension at least `t_j − 1`, where `t_j` counts the cells
/// with an edge into `j`. Returns the violating coordinates (none expected).
pub fn partition_slice_violations(
    code: &FrsCode,
    part: &CzPartition,
    y: &Word,
) -> Result<Vec<usize>> {
    let hull = AffineSubspace::hull(&part.list, code.k())?;
    let dims = slice_dims(code, &hull, y)?;
    let g = agreement_graph(code, &part.list, y)?;
    let mut touched = vec![BTreeSet::new(); code.n()];
    for idx in 0..part.list.len() {
        let cell = part.cell_of(idx);
        for &j in g.neighbours(idx) {
            touched[j].insert(cell);
        }
    }
    Ok((0..code.n())
        .filter(|&j| !touched[j].is_empty() && dims[j] < touched[j].len() as isize - 1)
        .collect())
}

/// `|B(y, (t/(t+1))(1 − τ_t)) ∩ C| <= t`, with the left side from the
/// brute-force oracle.
pub fn check_cz_theorem(code: &FrsCode, y: &Word, t: usize) -> Result<BoundReport> {
    if t > code.s() {
        return Err(Error::InvalidParameters(format!(
            "need 0 <= t <= s = {}, got {t}",
            code.s()
        )));
    }
    let rho = cz_radius(code, t, t)?;
    let list = crate::decode::brute_force_list(code, y, &rho)?;
    Ok(
        BoundReport::new("cz-theorem", Rational::from(list.len()), Rational::from(t))
            .with_t(t)
            .with_rho(rho),
    )
}

/// Generalized Singleton floor `(1 − R − ε)/ε` on the list size at radius
/// `1 − R − ε`.
pub fn singleton_floor(rate: &Rational, eps: &Rational) -> Result<Rational> {
    let cap = Rational::one() - rate.clone();
    if !eps.is_positive() || eps >= &cap {
        return Err(Error::InvalidParameters(format!(
            "need 0 < eps < 1 - R, got eps = {eps}, R = {rate}"
        )));
    }
    Ok((cap - eps.clone()) / eps.clone())
}

/// The `(t, s)` pair used for a target gap `ε`: `t = ceil(2/ε)`,
/// `s = ceil(3/ε²)`.
pub fn chain_parameters(eps: &Rational) -> Result<(usize, usize)> {
    if !eps.is_positive() {
        return Err(Error::InvalidParameters(format!(
            "epsilon must be positive, got {eps}"
        )));
    }
    let t = (Rational::from_int(2) / eps.clone()).ceil_usize();
    let s = (Rational::from_int(3) / (eps * eps)).ceil_usize();
    match (t, s) {
        (Some(t), Some(s)) if t <= s => Ok((t, s)),
        _ => Err(Error::InvalidParameters(format!(
            "epsilon {eps} gives unusable t, s"
        ))),
    }
}

/// Exact check of `ρ = (t/(t+1))(1 − τ_t) >= 1 − R − ε` with `τ_t = sR/(s−t+1)`.
/// Reports with `τ_t >= 1` are marked not applicable.
pub fn check_parameter_chain(eps: &Rational, rate: &Rational) -> Result<BoundReport> {
    if !rate.is_positive() || rate >= &Rational::one() {
        return Err(Error::InvalidParameters(format!(
            "rate must lie in (0, 1), got {rate}"
        )));
    }
    let (t, s) = chain_parameters(eps)?;
    let tau = Rational::from(s) * rate.clone() / Rational::from(s - t + 1);
    let rho = Rational::new(t as i64, t as i64 + 1) * (Rational::one() - tau.clone());
    let capacity = Rational::one() - rate.clone() - eps.clone();
    let mut rep = BoundReport::new("params", capacity, rho.clone())
        .with_t(t)
        .with_rho(rho)
        .with_detail(format!("s={s} R={rate} eps={eps}"));
    if tau >= Rational::one() {
        rep.applicable = false;
        rep.detail = Some(format!(
            "out of regime: tau_t = {tau} >= 1 (s={s} R={rate} eps={eps})"
        ));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frs::AlphaRule;
    use crate::gf::Field;

    fn code() -> FrsCode {
        FrsCode::new(13, 3, 3, 4, AlphaRule::Default).unwrap()
    }

    fn p(c: &[u64]) -> Polynomial {
        Polynomial::new(Field::new(13).unwrap(), c.iter().copied())
    }

    #[test]
    fn graph_of_single_codeword() {
        let c = code();
        let f = p(&[1, 2, 3]);
        let y = c.encode(&f).unwrap();
        let g = agreement_graph(&c, std::slice::from_ref(&f), &y).unwrap();
        assert_eq!((g.edge_count(), g.covered()), (4, 4));
        // disagree with every symbol
        let mut far = y.clone();
        for i in 0..4 {
            far.symbol_mut(i)[0] = (far.symbol(i)[0] + 1) % 13;
        }
        let g = agreement_graph(&c, std::slice::from_ref(&f), &far).unwrap();
        assert_eq!((g.edge_count(), g.covered()), (0, 0));
        assert!(agreement_graph(&c, &[f.clone(), f], &y).is_err());
    }

    #[test]
    fn slice_dims_examples() {
        let c = code();
        let f0 = p(&[2, 0, 5]);
        let y = c.encode(&f0).unwrap();
        let pt = AffineSubspace::point(f0, 3).unwrap();
        assert_eq!(slice_dims(&c, &pt, &y).unwrap(), vec![0, 0, 0, 0]);
        let rep = check_gk(&c, &pt, &y).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lhs, Rational::zero());
        // a line none of whose members matches a garbage symbol at coord 0
        let line = AffineSubspace::new(p(&[0]), vec![p(&[1])], 3).unwrap();
        let mut y2 = Word::zeros(4, 3);
        y2.symbol_mut(0).copy_from_slice(&[1, 2, 3]);
        assert_eq!(slice_dims(&c, &line, &y2).unwrap()[0], -1);
        assert!(slice_dims(&c, &AffineSubspace::empty(c.field(), 3), &y2).is_err());
    }

    #[test]
    fn gk_on_random_dim_two_spaces() {
        let c = code();
        let mut rng = crate::rng::stream(5, 0);
        for _ in 0..50 {
            let a = crate::suite::random_subspace(&c, 2, &mut rng);
            let y = crate::suite::planted_word(&c, &a, &mut rng);
            let rep = check_gk(&c, &a, &y).unwrap();
            assert_eq!(rep.rhs, Rational::from_int(3));
            assert!(rep.holds, "{rep:?}");
            // oracle: r_i from counting agreeing members (q^{r_i} of them)
            let dims = slice_dims(&c, &a, &y).unwrap();
            let members = a.enumerate().unwrap();
            for (i, &d) in dims.iter().enumerate() {
                let cnt = members
                    .iter()
                    .filter(|m| c.encode(m).unwrap().symbol(i) == y.symbol(i))
                    .count();
                let want = if d < 0 { 0 } else { 13usize.pow(d as u32) };
                assert_eq!(cnt, want);
            }
        }
    }

    #[test]
    fn gk_rejects_large_dimension() {
        let c = FrsCode::new(13, 5, 2, 6, AlphaRule::Default).unwrap();
        let a = AffineSubspace::full(c.field(), 5);
        assert!(check_gk(&c, &a, &Word::zeros(6, 2)).is_err());
    }

    #[test]
    fn tau_remark_instance() {
        // s = 48, r = 8: tau_8 = 48R/41
        let f = Field::new(193).unwrap();
        let c = FrsCode::with_field(f, 10, 48, 4, AlphaRule::Default).unwrap();
        assert_eq!(
            c.tau(8).unwrap(),
            Rational::from_int(48) * c.rate() / Rational::from_int(41)
        );
    }

    #[test]
    fn wronskian_examples() {
        let f1 = p(&[3, 1, 4]);
        assert_eq!(folded_wronskian(std::slice::from_ref(&f1)).unwrap(), f1);
        // det [[1, x], [1, 2x]] = x
        assert_eq!(
            folded_wronskian(&[p(&[1]), p(&[0, 1])]).unwrap(),
            p(&[0, 1])
        );
        assert_eq!(
            folded_wronskian(&[p(&[1, 1]), p(&[2, 2])]),
            Err(Error::LinearlyDependent)
        );
        assert!(folded_wronskian(&[]).is_err());
    }

    #[test]
    fn wronskian_of_monomials() {
        // W(1, x, x^2) is a Vandermonde in (1, γ, γ^2) times x^3
        let w = folded_wronskian(&[p(&[1]), p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
        assert_eq!(w.degree(), Some(3));
        // (γ-1)(γ^2-1)(γ^2-γ) with γ = 2: 1 * 3 * 2 = 6
        assert_eq!(w.coeff(3), 6);
    }

    #[test]
    fn wronskian_random_triples() {
        let c = FrsCode::new(13, 4, 3, 4, AlphaRule::Default).unwrap();
        let mut rng = crate::rng::stream(6, 0);
        for _ in 0..30 {
            let a = crate::suite::random_subspace(&c, 3, &mut rng);
            let w = folded_wronskian(a.basis()).unwrap();
            assert!(!w.is_zero());
            assert!(w.degree().unwrap() <= 3 * 4);
        }
    }

    #[test]
    fn planted_wronskian_roots() {
        let c = FrsCode::new(13, 4, 3, 4, AlphaRule::Default).unwrap();
        let f0 = p(&[1, 5, 0, 2]);
        let a = AffineSubspace::new(f0.clone(), vec![c.q_poly(0).clone(), p(&[1])], 4).unwrap();
        let y = c.encode(&f0).unwrap();
        assert_eq!(slice_dims(&c, &a, &y).unwrap()[0], 1);
        let w = folded_wronskian(a.basis()).unwrap();
        for &sigma in &c.orbit(0)[..2] {
            assert!(w.root_multiplicity(sigma).unwrap() >= 1);
        }
        let rep = check_wronskian_multiplicity(&c, &a, &y).unwrap();
        assert!(rep.holds, "{rep:?}");
    }

    #[test]
    fn wronskian_vacuous_case() {
        let c = code();
        let a = AffineSubspace::new(p(&[0]), vec![p(&[0, 1])], 3).unwrap();
        let mut y = Word::zeros(4, 3);
        for i in 0..4 {
            y.symbol_mut(i).copy_from_slice(&[1, 7, 9]);
        }
        let rep = check_wronskian_multiplicity(&c, &a, &y).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lhs, Rational::zero());
    }

    #[test]
    fn srivastava_small_cases() {
        let c = code();
        let f0 = p(&[4, 4, 4]);
        let y = c.encode(&f0).unwrap();
        let pt = AffineSubspace::point(f0.clone(), 3).unwrap();
        let rep = check_srivastava(&c, &pt, &y, 2).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.rhs, Rational::one());
        let line = AffineSubspace::new(f0, vec![p(&[1, 1])], 3).unwrap();
        let rep = check_srivastava(&c, &line, &y, 3).unwrap();
        assert_eq!(rep.rhs, Rational::from_int(3));
        assert!(rep.holds);
        assert!(check_srivastava(&c, &line, &y, 4).is_err());
        let plane = AffineSubspace::new(p(&[]), vec![p(&[1]), p(&[0, 1])], 3).unwrap();
        assert!(check_srivastava(&c, &plane, &y, 1).is_err());
    }

    #[test]
    fn count_in_ball_matches_enumeration() {
        let c = code();
        let mut rng = crate::rng::stream(8, 0);
        for r in 0..=2 {
            let a = crate::suite::random_subspace(&c, r, &mut rng);
            let y = crate::suite::planted_word(&c, &a, &mut rng);
            let rho = Rational::new(3, 4);
            let direct = a
                .enumerate()
                .unwrap()
                .iter()
                .filter(|m| c.in_ball(&c.encode(m).unwrap(), &y, &rho).unwrap())
                .count();
            assert_eq!(count_in_ball(&c, &a, &y, &rho).unwrap(), direct);
        }
    }

    #[test]
    fn edge_bound_examples() {
        let c = code();
        let f1 = p(&[1, 2, 3]);
        let y = c.encode(&f1).unwrap();
        let rep = check_cz_edge_bound(&c, std::slice::from_ref(&f1), &y).unwrap();
        assert_eq!(rep.lhs, rep.rhs);
        assert!(rep.holds);
        // second codeword: E_G = n + agreement(f2, y)
        let c2 = FrsCode::new(13, 4, 3, 4, AlphaRule::Default).unwrap();
        let g1 = p(&[1, 2, 3, 1]);
        let g2 = g1.add(&c2.q_poly(1).scale(5));
        let y2 = c2.encode(&g1).unwrap();
        let rep = check_cz_edge_bound(&c2, &[g1.clone(), g2.clone()], &y2).unwrap();
        let agr = c2.agreement(&c2.encode(&g2).unwrap(), &y2).unwrap();
        assert_eq!(agr, 1);
        assert_eq!(rep.lhs, Rational::from(4 + agr));
        // 1 * n * tau_1 + n_G = 4 * (4/12) + 4
        assert_eq!(rep.rhs, Rational::new(16, 3));
        assert!(rep.holds);
        assert!(check_cz_edge_bound(&c, &[], &y).is_err());
    }

    #[test]
    fn partition_examples() {
        let single = cz_partition(&[p(&[1, 2])], 3).unwrap();
        assert_eq!(single.cells, vec![vec![0]]);
        // three points on one line
        let base = p(&[1, 1, 0]);
        let dir = p(&[0, 2, 1]);
        let list = vec![base.clone(), base.add(&dir), base.add(&dir.scale(5))];
        let part = cz_partition(&list, 3).unwrap();
        assert_eq!(part.r(), 1);
        assert_eq!(part.cells[0].len(), 1);
        assert_eq!(part.cells[1].len(), 2);
        assert_eq!(
            part.list[part.representatives[0]],
            part.list[part.cells[0][0]]
        );
        assert!(part.cross_picks_independent(3));
    }

    #[test]
    fn cz_theorem_t_zero() {
        let c = code();
        let y = c.encode(&p(&[1])).unwrap();
        let rep = check_cz_theorem(&c, &y, 0).unwrap();
        assert_eq!(rep.rho, Some(Rational::zero()));
        assert_eq!(rep.lhs, Rational::zero());
        assert!(rep.holds);
        assert!(check_cz_theorem(&c, &y, 4).is_err());
    }

    #[test]
    fn singleton_values() {
        assert_eq!(
            singleton_floor(&Rational::new(1, 2), &Rational::new(1, 4)).unwrap(),
            Rational::one()
        );
        assert_eq!(
            singleton_floor(&Rational::new(1, 4), &Rational::new(1, 4)).unwrap(),
            Rational::from_int(2)
        );
        assert_eq!(
            singleton_floor(&Rational::new(5, 12), &Rational::new(1, 12)).unwrap(),
            Rational::from_int(6)
        );
        assert!(singleton_floor(&Rational::new(1, 2), &Rational::new(1, 2)).is_err());
        assert!(singleton_floor(&Rational::new(1, 2), &Rational::zero()).is_err());
    }

    #[test]
    fn parameter_chain_examples() {
        assert_eq!(chain_parameters(&Rational::new(1, 2)).unwrap(), (4, 12));
        assert_eq!(chain_parameters(&Rational::new(1, 4)).unwrap(), (8, 48));
        assert_eq!(chain_parameters(&Rational::new(1, 8)).unwrap(), (16, 192));
        let rep = check_parameter_chain(&Rational::new(1, 4), &Rational::new(1, 3)).unwrap();
        // (8/9)(1 - 48/123) = (8/9)(75/123)
        assert_eq!(rep.rho, Some(Rational::new(8, 9) * Rational::new(75, 123)));
        assert!(rep.holds && rep.applicable);
        let out = check_parameter_chain(&Rational::new(1, 2), &Rational::new(4, 5)).unwrap();
        assert!(!out.applicable);
        assert!(!out.is_violation());
    }

    #[test]
    fn report_row_serialization() {
        let rep = BoundReport::new("gk", Rational::from_int(2), Rational::new(3, 2))
            .with_r(1)
            .with_rho(Rational::new(5, 12));
        assert!(!rep.holds);
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["rho_num"], "5");
        assert_eq!(json["rho_den"], "12");
        assert_eq!(json["rhs"], "3/2");
        assert_eq!(json["holds"], false);
    }
}
