//! Exact linear algebra over `F_q` and affine subspaces of `F_q[x]^{<k}`.
//!
//! Elimination always pivots on the first nonzero entry found scanning rows
//! top-down in the leftmost remaining column, so kernels, particular
//! solutions and every basis derived from them are reproducible.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::Polynomial;

/// Default refusal threshold for exhaustive enumeration.
pub const ENUMERATION_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFq {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Result of `MatrixFq::solve`: one particular solution plus a kernel basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<u64>,
    pub kernel: Vec<Vec<u64>>,
}

impl MatrixFq {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let q = field.modulus();
        let data = rows.iter().flatten().map(|&v| v % q).collect();
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.field.modulus();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// Reduced row-echelon form in place; returns the pivot columns.
    fn reduce(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("pivot is nonzero");
            for c in col..self.cols {
                let v = f.mul(self.get(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.reduce();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column
    /// in increasing column order.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let (m, pivots) = self.rref();
        kernel_from_rref(&m, &pivots, self.cols)
    }

    /// Solves `M v = b`. `Ok(None)` means the system is inconsistent.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Solution>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} equations but right-hand side of length {}",
                self.rows,
                b.len()
            )));
        }
        let f = self.field;
        let mut aug = Self::zeros(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let pivots = aug.reduce();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut particular = vec![0; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            particular[col] = aug.get(row, self.cols);
        }
        let kernel = kernel_from_rref(&aug, &pivots, self.cols);
        Ok(Some(Solution { particular, kernel }))
    }
}

fn kernel_from_rref(m: &MatrixFq, pivots: &[usize], cols: usize) -> Vec<Vec<u64>> {
    let f = m.field;
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(row, free));
            }
            v
        })
        .collect()
}

/// Affine conditions `row · (f_0, …, f_{k-1}) = rhs` on message coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraints {
    field: Field,
    k: usize,
    rows: Vec<Vec<u64>>,
    rhs: Vec<u64>,
}

impl LinearConstraints {
    pub fn new(field: Field, k: usize) -> Self {
        Self {
            field,
            k,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<u64>, rhs: u64) -> Result<()> {
        if row.len() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "constraint over {} coefficients, expected {}",
                row.len(),
                self.k
            )));
        }
        let q = self.field.modulus();
        self.rows.push(row.into_iter().map(|v| v % q).collect());
        self.rhs.push(rhs % q);
        Ok(())
    }

    /// The condition `f(point) = value`.
    pub fn push_evaluation(&mut self, point: u64, value: u64) {
        let f = self.field;
        let mut pw = 1;
        let row = (0..self.k)
            .map(|_| {
                let v = pw;
                pw = f.mul(pw, point);
                v
            })
            .collect();
        self.push(row, value).expect("row has length k");
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_satisfied_by(&self, p: &Polynomial) -> bool {
        let f = self.field;
        self.rows.iter().zip(&self.rhs).all(|(row, &b)| {
            let lhs = row
                .iter()
                .enumerate()
                .fold(0, |acc, (i, &a)| f.add(acc, f.mul(a, p.coeff(i))));
            lhs == b
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Flat {
    offset: Polynomial,
    basis: Vec<Polynomial>,
}

/// An affine subspace `offset + span(basis)` of the polynomials of degree
/// `< k`, or the empty set. `dim()` is `-1` for the empty subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSubspace {
    field: Field,
    k: usize,
    flat: Option<Flat>,
}

impl AffineSubspace {
    pub fn empty(field: Field, k: usize) -> Self {
        Self {
            field,
            k,
            flat: None,
        }
    }

    pub fn point(p: Polynomial, k: usize) -> Result<Self> {
        Self::new(p, Vec::new(), k)
    }

    /// All of `F_q[x]^{<k}`, with the monomial basis.
    pub fn full(field: Field, k: usize) -> Self {
        let basis = (0..k).map(|d| Polynomial::monomial(field, d)).collect();
        Self {
            field,
            k,
            flat: Some(Flat {
                offset: Polynomial::zero(field),
                basis,
            }),
        }
    }

    /// Validates degrees and linear independence of `basis`.
    pub fn new(offset: Polynomial, basis: Vec<Polynomial>, k: usize) -> Result<Self> {
        let field = offset.field();
        for p in std::iter::once(&offset).chain(&basis) {
            field.check_same(&p.field())?;
            if !p.degree_below(k) {
                return Err(Error::InvalidParameters(format!(
                    "{p} has degree >= k = {k}"
                )));
            }
        }
        if rank_of(field, &basis, k) != basis.len() {
            return Err(Error::LinearlyDependent);
        }
        Ok(Self {
            field,
            k,
            flat: Some(Flat { offset, basis }),
        })
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    /// Ambient message length.
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> isize {
        self.flat.as_ref().map_or(-1, |fl| fl.basis.len() as isize)
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_none()
    }

    pub fn offset(&self) -> Option<&Polynomial> {
        self.flat.as_ref().map(|fl| &fl.offset)
    }

    pub fn basis(&self) -> &[Polynomial] {
        self.flat.as_ref().map_or(&[], |fl| &fl.basis)
    }

    /// Number of members, `q^dim` (zero when empty).
    pub fn size(&self) -> u128 {
        match self.flat {
            None => 0,
            Some(ref fl) => (self.field.modulus() as u128).saturating_pow(fl.basis.len() as u32),
        }
    }

    /// `offset + Σ betas[u] · basis[u]`.
    pub fn member(&self, betas: &[u64]) -> Option<Polynomial> {
        let fl = self.flat.as_ref()?;
        assert_eq!(betas.len(), fl.basis.len());
        Some(
            fl.basis
                .iter()
                .zip(betas)
                .fold(fl.offset.clone(), |acc, (b, &beta)| acc.add(&b.scale(beta))),
        )
    }

    /// Coordinates of `p` with respect to the basis, if `p` is a member.
    pub fn coordinates(&self, p: &Polynomial) -> Option<Vec<u64>> {
        let fl = self.flat.as_ref()?;
        if !p.degree_below(self.k) || p.field() != self.field {
            return None;
        }
        let f = self.field;
        let rows: Vec<Vec<u64>> = (0..self.k)
            .map(|c| fl.basis.iter().map(|b| b.coeff(c)).collect())
            .collect();
        let target = p.sub(&fl.offset).coeff_vec(self.k);
        if fl.basis.is_empty() {
            return target.iter().all(|&v| v == 0).then(Vec::new);
        }
        let m = MatrixFq::from_rows(f, &rows).expect("rectangular");
        m.solve(&target)
            .expect("shapes agree")
            .map(|s| s.particular)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.coordinates(p).is_some()
    }

    /// Set equality: same offset coset and same direction space.
    pub fn same_space(&self, other: &Self) -> bool {
        match (&self.flat, &other.flat) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                a.basis.len() == b.basis.len()
                    && self.contains(&b.offset)
                    && b.basis.iter().all(|v| self.contains(&a.offset.add(v)))
            }
            _ => false,
        }
    }

    /// Restricts to the members satisfying every constraint. The result
    /// never has larger dimension and is empty when the conditions are
    /// inconsistent within this subspace.
    pub fn slice(&self, cons: &LinearConstraints) -> Result<Self> {
        if cons.k != self.k {
            return Err(Error::DimensionMismatch(format!(
                "constraints over {} coefficients applied to k = {}",
                cons.k, self.k
            )));
        }
        self.field.check_same(&cons.field)?;
        let Some(fl) = &self.flat else {
            return Ok(self.clone());
        };
        if cons.is_empty() {
            return Ok(self.clone());
        }
        let f = self.field;
        let dot = |row: &[u64], p: &Polynomial| {
            row.iter()
                .enumerate()
                .fold(0, |acc, (i, &a)| f.add(acc, f.mul(a, p.coeff(i))))
        };
        let r = fl.basis.len();
        let mut m = MatrixFq::zeros(f, cons.len(), r);
        let mut rhs = Vec::with_capacity(cons.len());
        for (i, (row, &b)) in cons.rows.iter().zip(&cons.rhs).enumerate() {
            for (u, bp) in fl.basis.iter().enumerate() {
                m.set(i, u, dot(row, bp));
            }
            rhs.push(f.sub(b, dot(row, &fl.offset)));
        }
        Ok(self.restrict(&m, &rhs))
    }

    /// Restricts to `{offset + Σ β_u basis_u : M β = rhs}` for a system `M`
    /// stated directly in basis coordinates.
    pub fn restrict(&self, m: &MatrixFq, rhs: &[u64]) -> Self {
        let Some(fl) = &self.flat else {
            return self.clone();
        };
        if fl.basis.is_empty() {
            return if rhs.iter().all(|&v| v == 0) {
                self.clone()
            } else {
                Self::empty(self.field, self.k)
            };
        }
        match m.solve(rhs).expect("restriction system is well-shaped") {
            None => Self::empty(self.field, self.k),
            Some(sol) => {
                let combine = |coords: &[u64], base: Polynomial| {
                    fl.basis.iter().zip(coords).fold(base, |acc, (b, &c)| {
                        if c == 0 {
                            acc
                        } else {
                            acc.add(&b.scale(c))
                        }
                    })
                };
                let offset = combine(&sol.particular, fl.offset.clone());
                let basis = sol
                    .kernel
                    .iter()
                    .map(|v| combine(v, Polynomial::zero(self.field)))
                    .collect();
                Self {
                    field: self.field,
                    k: self.k,
                    flat: Some(Flat { offset, basis }),
                }
            }
        }
    }

    /// Smallest affine subspace containing every point. The first point is
    /// the offset; differences are kept greedily in input order whenever
    /// they enlarge the span.
    pub fn hull(points: &[Polynomial], k: usize) -> Result<Self> {
        let (first, rest) = points
            .split_first()
            .ok_or(Error::EmptyInput("affine hull of no points"))?;
        let field = first.field();
        let mut basis: Vec<Polynomial> = Vec::new();
        for p in rest {
            field.check_same(&p.field())?;
            let d = p.sub(first);
            let mut cand = basis.clone();
            cand.push(d);
            if rank_of(field, &cand, k) == cand.len() {
                basis = cand;
            }
        }
        Self::new(first.clone(), basis, k)
    }

    /// Every member exactly once, ordered lexicographically by the basis
    /// coordinates `(β_1, …, β_r)` with `β_1` most significant.
    pub fn enumerate(&self) -> Result<Vec<Polynomial>> {
        self.enumerate_capped(ENUMERATION_CAP)
    }

    pub fn enumerate_capped(&self, cap: u128) -> Result<Vec<Polynomial>> {
        let size = self.size();
        if size > cap {
            return Err(Error::EnumerationCap {
                required: size,
                cap,
            });
        }
        let Some(fl) = &self.flat else {
            return Ok(Vec::new());
        };
        let q = self.field.modulus();
        let r = fl.basis.len();
        let mut betas = vec![0u64; r];
        let mut out = Vec::with_capacity(size as usize);
        for _ in 0..size {
            out.push(self.member(&betas).expect("nonempty"));
            for u in (0..r).rev() {
                betas[u] += 1;
                if betas[u] < q {
                    break;
                }
                betas[u] = 0;
            }
        }
        Ok(out)
    }
}

/// Rank of the coefficient matrix of `polys` (as rows of length `k`).
pub fn rank_of(field: Field, polys: &[Polynomial], k: usize) -> usize {
    if polys.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<u64>> = polys.iter().map(|p| p.coeff_vec(k)).collect();
    MatrixFq::from_rows(field, &rows)
        .expect("rectangular")
        .rank()
}
