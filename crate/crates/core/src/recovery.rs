//! The list-recovery lower-bound family.
//!
//! Pick `m >= 2` and let `p = floor(m · floor((k−1)/s) / (m−1))`. Split the
//! first `p` coordinates into residue classes `class(j) = ((j−1) mod m) + 1`
//! (1-based) and set
//!
//! ```text
//! f_i = Π_{j ∈ [p], class(j) ≠ i} Q_j(x),    i = 1, …, m.
//! ```
//!
//! For `g = β_1 f_1 + … + β_m f_m` with every `β_i` drawn from a set `B` of
//! size `ℓ`, the residue `g mod Q_j` equals `β_{class(j)} (f_{class(j)} mod
//! Q_j)`, so each of the first `p` coordinates takes one of only `ℓ`
//! values while the family has `ℓ^m` members.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::frs::{FrsCode, Word};
use crate::linalg::{rank_of, ENUMERATION_CAP};
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct CounterexampleFamily {
    code: FrsCode,
    m: usize,
    p: usize,
    basis: Vec<Polynomial>,
    scalars: Vec<u64>,
}

/// `p = floor(m · floor((k−1)/s) / (m−1))`.
pub fn prefix_length(k: usize, s: usize, m: usize) -> Result<usize> {
    if m < 2 {
        return Err(Error::InvalidParameters(format!(
            "need m >= 2, got m = {m}"
        )));
    }
    Ok(m * ((k - 1) / s) / (m - 1))
}

/// 1-based residue class of 1-based coordinate `j`.
pub fn class_of(j: usize, m: usize) -> usize {
    (j - 1) % m + 1
}

/// `m = ceil(R/ε) + 1`.
pub fn m_for_epsilon(rate: &Rational, eps: &Rational) -> Result<usize> {
    if !eps.is_positive() {
        return Err(Error::InvalidParameters(format!(
            "epsilon must be positive, got {eps}"
        )));
    }
    let m = (rate / eps)
        .ceil_usize()
        .ok_or_else(|| Error::InvalidParameters("R/eps too large".into()))?;
    Ok(m + 1)
}

pub fn build_counterexample(
    code: &FrsCode,
    m: usize,
    scalars: &[u64],
) -> Result<CounterexampleFamily> {
    let p = prefix_length(code.k(), code.s(), m)?;
    if p > code.n() {
        return Err(Error::InvalidParameters(format!(
            "p = {p} exceeds n = {}",
            code.n()
        )));
    }
    if p < m {
        return Err(Error::InvalidParameters(format!(
            "p = {p} < m = {m}: some residue class of [p] is empty"
        )));
    }
    let field = code.field();
    let basis = (1..=m)
        .map(|i| {
            (1..=p)
                .filter(|&j| class_of(j, m) != i)
                .fold(Polynomial::constant(field, 1), |acc, j| {
                    acc.mul(code.q_poly(j - 1))
                })
        })
        .collect();
    CounterexampleFamily::from_parts(code, m, p, basis, scalars)
}

impl CounterexampleFamily {
    /// Assembles a family from explicit parts and runs every construction
    /// check (degrees, independence, the residue witness).
    pub fn from_parts(
        code: &FrsCode,
        m: usize,
        p: usize,
        basis: Vec<Polynomial>,
        scalars: &[u64],
    ) -> Result<Self> {
        if basis.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "{} basis polynomials for m = {m}",
                basis.len()
            )));
        }
        if p < m || p > code.n() {
            return Err(Error::InvalidParameters(format!(
                "need m <= p <= n, got m = {m}, p = {p}, n = {}",
                code.n()
            )));
        }
        if scalars.is_empty() {
            return Err(Error::EmptyInput("scaling set B"));
        }
        let q = code.field().modulus();
        let set: BTreeSet<u64> = scalars.iter().copied().collect();
        if set.len() != scalars.len() || scalars.iter().any(|&b| b >= q) {
            return Err(Error::InvalidParameters(
                "B must be distinct field elements".into(),
            ));
        }
        for (i, f) in basis.iter().enumerate() {
            if !f.degree_below(code.k()) {
                return Err(Error::InvalidParameters(format!(
                    "deg f_{} = {:?} exceeds k - 1 = {}",
                    i + 1,
                    f.degree(),
                    code.k() - 1
                )));
            }
        }
        if rank_of(code.field(), &basis, code.k()) != m {
            return Err(Error::LinearlyDependent);
        }
        let fam = Self {
            code: code.clone(),
            m,
            p,
            basis,
            scalars: scalars.to_vec(),
        };
        if !fam.independence_witness() {
            return Err(Error::InvalidParameters(
                "residue witness failed: f_i mod Q_j is not diagonal".into(),
            ));
        }
        Ok(fam)
    }

    pub fn code(&self) -> &FrsCode {
        &self.code
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn p(&self) -> usize {
        self.p
    }
    pub fn ell(&self) -> usize {
        self.scalars.len()
    }
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }
    pub fn scalars(&self) -> &[u64] {
        &self.scalars
    }

    /// For every `i ∈ [m]`: `f_i mod Q_i ≠ 0` and `f_u mod Q_i = 0` for
    /// `u ≠ i`. Reducing a dependency modulo `Q_i` then isolates `c_i`.
    pub fn independence_witness(&self) -> bool {
        (0..self.m).all(|i| {
            self.basis.iter().enumerate().all(|(u, f)| {
                let r = f.rem(self.code.q_poly(i)).expect("Q_i is monic");
                r.is_zero() != (u == i)
            })
        })
    }

    /// `β_1 f_1 + … + β_m f_m`.
    pub fn member(&self, betas: &[u64]) -> Polynomial {
        let field = self.code.field();
        self.basis
            .iter()
            .zip(betas)
            .fold(Polynomial::zero(field), |acc, (f, &b)| acc.add(&f.scale(b)))
    }

    /// `ℓ^m`, saturating.
    pub fn family_size(&self) -> u128 {
        (self.ell() as u128).saturating_pow(self.m as u32)
    }

    /// Every member with its β tuple (β_1 most significant).
    pub fn enumerate(&self) -> Result<Vec<(Vec<u64>, Polynomial)>> {
        let size = self.family_size();
        if size > ENUMERATION_CAP {
            return Err(Error::EnumerationCap {
                required: size,
                cap: ENUMERATION_CAP,
            });
        }
        let ell = self.ell();
        let mut out = Vec::with_capacity(size as usize);
        let mut idx = vec![0usize; self.m];
        for _ in 0..size {
            let betas: Vec<u64> = idx.iter().map(|&i| self.scalars[i]).collect();
            out.push((betas.clone(), self.member(&betas)));
            for d in (0..self.m).rev() {
                idx[d] += 1;
                if idx[d] < ell {
                    break;
                }
                idx[d] = 0;
            }
        }
        Ok(out)
    }

    /// The `ℓ` candidate symbols at 0-based coordinate `j < p`: encodings of
    /// `β · (f_{class} mod Q_j)` for `β ∈ B`.
    pub fn candidate_symbols(&self, j: usize) -> Vec<Vec<u64>> {
        let f = &self.basis[class_of(j + 1, self.m) - 1];
        let res = f.rem(self.code.q_poly(j)).expect("Q_j is monic");
        self.scalars
            .iter()
            .map(|&b| {
                self.code
                    .orbit(j)
                    .iter()
                    .map(|&x| res.scale(b).eval_raw(x))
                    .collect()
            })
            .collect()
    }
}

/// Measured properties of a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecoveryCheck {
    pub m: usize,
    pub p: usize,
    pub ell: usize,
    pub basis: Vec<Vec<u64>>,
    pub basis_degrees: Vec<Option<usize>>,
    /// Distinct encodings among the `ℓ^m` members.
    pub family_size: usize,
    pub expected_size: u128,
    /// Distinct symbols over the family at each of the first `p` coordinates.
    pub per_coord_sizes: Vec<usize>,
    /// Every member's symbol lies in the coordinate's candidate list, and
    /// every residue matches `β_{class} (f_{class} mod Q_j)`.
    pub candidate_lists_ok: bool,
    pub residues_ok: bool,
    pub independence_witness: bool,
    pub prefix_fraction: Rational,
    pub rate: Rational,
}

impl RecoveryCheck {
    pub fn holds(&self) -> bool {
        self.family_size as u128 == self.expected_size
            && self.per_coord_sizes.iter().all(|&c| c <= self.ell)
            && self.candidate_lists_ok
            && self.residues_ok
            && self.independence_witness
            && self.prefix_fraction >= self.rate
    }
}

pub fn measure(fam: &CounterexampleFamily) -> Result<RecoveryCheck> {
    let code = fam.code();
    let members = fam.enumerate()?;
    let words: Vec<Word> = members
        .iter()
        .map(|(_, g)| code.encode(g))
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<&Word> = words.iter().collect();
    let mut per_coord = Vec::with_capacity(fam.p());
    let mut candidates_ok = true;
    let mut residues_ok = true;
    for j in 0..fam.p() {
        let syms: BTreeSet<&[u64]> = words.iter().map(|w| w.symbol(j)).collect();
        per_coord.push(syms.len());
        let cands = fam.candidate_symbols(j);
        candidates_ok &= words
            .iter()
            .all(|w| cands.iter().any(|c| c.as_slice() == w.symbol(j)));
        let cls = class_of(j + 1, fam.m()) - 1;
        let base = fam.basis()[cls].rem(code.q_poly(j))?;
        for (betas, g) in &members {
            residues_ok &= code.residue(g, j)? == base.scale(betas[cls]);
        }
    }
    Ok(RecoveryCheck {
        m: fam.m(),
        p: fam.p(),
        ell: fam.ell(),
        basis: fam.basis().iter().map(|f| f.coeffs().to_vec()).collect(),
        basis_degrees: fam.basis().iter().map(Polynomial::degree).collect(),
        family_size: distinct.len(),
        expected_size: fam.family_size(),
        per_coord_sizes: per_coord,
        candidate_lists_ok: candidates_ok,
        residues_ok,
        independence_witness: fam.independence_witness(),
        prefix_fraction: Rational::new(fam.p() as i64, code.n() as i64),
        rate: code.rate(),
    })
}

/// Report with `lhs` the largest per-coordinate symbol count and `rhs = ℓ`;
/// `holds` also folds in the family size, candidate-list, residue,
/// independence and `p/n >= R` checks.
pub fn verify_counterexample(fam: &CounterexampleFamily) -> Result<BoundReport> {
    let chk = measure(fam)?;
    let worst = chk.per_coord_sizes.iter().copied().max().unwrap_or(0);
    let mut rep = BoundReport::new(
        "list-recovery",
        Rational::from(worst),
        Rational::from(chk.ell),
    )
    .with_m(chk.m);
    rep.holds = chk.holds();
    Ok(rep.with_detail(format!(
        "|G| = {} (expected {}), p = {}, p/n = {}, R = {}",
        chk.family_size, chk.expected_size, chk.p, chk.prefix_fraction, chk.rate
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frs::AlphaRule;

    fn code() -> FrsCode {
        FrsCode::new(13, 5, 2, 6, AlphaRule::Default).unwrap()
    }

    #[test]
    fn reference_instance() {
        let c = code();
        let fam = build_counterexample(&c, 2, &[1, 2]).unwrap();
        assert_eq!(fam.p(), 4);
        assert_eq!(fam.basis()[0], c.q_poly(1).mul(c.q_poly(3)));
        assert_eq!(fam.basis()[1], c.q_poly(0).mul(c.q_poly(2)));
        assert!(fam.basis().iter().all(|f| f.degree() == Some(4)));
        let chk = measure(&fam).unwrap();
        assert_eq!(chk.family_size, 4);
        assert_eq!(chk.per_coord_sizes.len(), 4);
        assert!(chk.per_coord_sizes.iter().all(|&s| s <= 2));
        assert!(chk.holds());
        assert!(verify_counterexample(&fam).unwrap().holds);
    }

    #[test]
    fn growth_with_ell() {
        let c = code();
        let sizes: Vec<usize> = [vec![1], vec![1, 2], vec![1, 2, 3]]
            .iter()
            .map(|b| {
                measure(&build_counterexample(&c, 2, b).unwrap())
                    .unwrap()
                    .family_size
            })
            .collect();
        assert_eq!(sizes, vec![1, 4, 9]);
        let four = measure(&build_counterexample(&c, 2, &[1, 2, 3, 4]).unwrap()).unwrap();
        assert_eq!(four.family_size, 4 * sizes[1]);
    }

    #[test]
    fn degenerate_scaling_set() {
        let fam = build_counterexample(&code(), 2, &[0]).unwrap();
        let members = fam.enumerate().unwrap();
        assert_eq!(members.len(), 1);
        assert!(members[0].1.is_zero());
        assert!(measure(&fam).unwrap().holds());
    }

    #[test]
    fn infeasible_parameters() {
        let c = code();
        // p = floor(3 * 2 / 2) = 3 >= m = 3 works; m = 5 gives p = 2 < 5
        assert!(build_counterexample(&c, 3, &[1]).is_ok());
        assert!(build_counterexample(&c, 5, &[1]).is_err());
        assert!(build_counterexample(&c, 1, &[1]).is_err());
        assert!(build_counterexample(&c, 2, &[]).is_err());
        assert!(build_counterexample(&c, 2, &[1, 1]).is_err());
    }

    #[test]
    fn corrupted_family_is_rejected() {
        let c = code();
        let fam = build_counterexample(&c, 2, &[1, 2]).unwrap();
        let f2 = fam.basis()[1].clone();
        let err =
            CounterexampleFamily::from_parts(&c, 2, 4, vec![f2.clone(), f2], &[1, 2]).unwrap_err();
        assert_eq!(err, Error::LinearlyDependent);
    }

    #[test]
    fn epsilon_helper() {
        assert_eq!(
            m_for_epsilon(&Rational::new(1, 2), &Rational::new(1, 4)).unwrap(),
            3
        );
        assert_eq!(
            m_for_epsilon(&Rational::new(5, 12), &Rational::new(1, 4)).unwrap(),
            3
        );
        assert!(m_for_epsilon(&Rational::new(1, 2), &Rational::zero()).is_err());
    }
}
