//! Folded Reed–Solomon codes.
//!
//! A message `f` with `deg f < k` is mapped to `n` symbols; symbol `i` is
//! `(f(α_i), f(γα_i), …, f(γ^{s-1}α_i))`. Coordinates are 0-based in this
//! API. Each coordinate also has the monic `Q_i = Π_j (x − γ^j α_i)`, and
//! symbol `i` carries the same information as `f mod Q_i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{LinearConstraints, ENUMERATION_CAP};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// How evaluation points are chosen.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum AlphaRule {
    /// `α_i = γ^{s·i}` (0-based), giving consecutive disjoint orbits.
    #[default]
    Default,
    Explicit(Vec<u64>),
}

/// JSON descriptor `{q, k, s, n, alphas}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub q: u64,
    pub k: usize,
    pub s: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphas: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrsCode {
    field: Field,
    k: usize,
    s: usize,
    n: usize,
    alphas: Vec<u64>,
    // points[i * s + j] = γ^j α_i
    points: Vec<u64>,
    q_polys: Vec<Polynomial>,
}

impl FrsCode {
    pub fn new(q: u64, k: usize, s: usize, n: usize, rule: AlphaRule) -> Result<Self> {
        let field = Field::new(q)?;
        Self::with_field(field, k, s, n, rule)
    }

    pub fn with_field(field: Field, k: usize, s: usize, n: usize, rule: AlphaRule) -> Result<Self> {
        let q = field.modulus();
        if k == 0 || s == 0 || n == 0 {
            return Err(Error::InvalidParameters(format!(
                "k, s, n must be positive (k={k}, s={s}, n={n})"
            )));
        }
        if q as u128 <= k as u128 {
            return Err(Error::InvalidParameters(format!(
                "need q > k, got q={q}, k={k}"
            )));
        }
        if (n as u128) * (s as u128) > (q - 1) as u128 {
            return Err(Error::InvalidParameters(format!(
                "need n*s <= q-1, got {n}*{s} > {}",
                q - 1
            )));
        }
        let alphas = match rule {
            AlphaRule::Default => (0..n).map(|i| field.gamma_pow((s * i) as u64)).collect(),
            AlphaRule::Explicit(a) => {
                if a.len() != n {
                    return Err(Error::InvalidParameters(format!(
                        "{} evaluation points given, n = {n}",
                        a.len()
                    )));
                }
                a.into_iter().map(|v| v % q).collect::<Vec<_>>()
            }
        };
        let mut points = Vec::with_capacity(n * s);
        for &a in &alphas {
            if a == 0 {
                return Err(Error::InvalidParameters(
                    "evaluation point 0 has a degenerate orbit".into(),
                ));
            }
            for j in 0..s {
                points.push(field.mul(field.gamma_pow(j as u64), a));
            }
        }
        // orbits of distinct nonzero α under <γ> have s distinct points when s <= q-1;
        // overlap between two orbits is the only failure mode left.
        let mut owner = std::collections::HashMap::with_capacity(n * s);
        for (idx, &pt) in points.iter().enumerate() {
            let i = idx / s;
            if let Some(&other) = owner.get(&pt) {
                return Err(Error::InvalidParameters(format!(
                    "orbits of alpha[{other}] = {} and alpha[{i}] = {} overlap at {pt}",
                    alphas[other], alphas[i]
                )));
            }
            owner.insert(pt, i);
        }
        let q_polys = points
            .chunks(s)
            .map(|orbit| {
                let roots: Vec<_> = orbit.iter().map(|&p| field.elem(p)).collect();
                Polynomial::from_roots(field, &roots).expect("same field")
            })
            .collect();
        Ok(Self {
            field,
            k,
            s,
            n,
            alphas,
            points,
            q_polys,
        })
    }

    pub fn from_descriptor(d: &CodeDescriptor) -> Result<Self> {
        let rule = d
            .alphas
            .clone()
            .map_or(AlphaRule::Default, AlphaRule::Explicit);
        Self::new(d.q, d.k, d.s, d.n, rule)
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            q: self.field.modulus(),
            k: self.k,
            s: self.s,
            n: self.n,
            alphas: Some(self.alphas.clone()),
        }
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }
    #[inline]
    pub fn s(&self) -> usize {
        self.s
    }
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn alphas(&self) -> &[u64] {
        &self.alphas
    }

    /// The orbit `(α_i, γα_i, …, γ^{s-1}α_i)`.
    pub fn orbit(&self, i: usize) -> &[u64] {
        &self.points[i * self.s..(i + 1) * self.s]
    }

    /// `Q_i`, monic of degree `s`, vanishing on orbit `i`.
    pub fn q_poly(&self, i: usize) -> &Polynomial {
        &self.q_polys[i]
    }

    /// `R = k / (n s)`.
    pub fn rate(&self) -> Rational {
        Rational::new(self.k as i64, (self.n * self.s) as i64)
    }

    /// Most coordinates two distinct codewords can share: `floor((k-1)/s)`.
    pub fn max_agreement(&self) -> usize {
        (self.k - 1) / self.s
    }

    /// Minimum distance in coordinates, `n − floor((k−1)/s)`.
    pub fn min_distance(&self) -> usize {
        self.n - self.max_agreement()
    }

    /// Exact fractional distance `δ`, at least `1 − R`.
    pub fn relative_distance(&self) -> Rational {
        Rational::new(self.min_distance() as i64, self.n as i64)
    }

    /// `τ_r = sR/(s−r+1) = k/(n(s−r+1))`.
    pub fn tau(&self, r: usize) -> Result<Rational> {
        if r > self.s {
            return Err(Error::InvalidParameters(format!(
                "tau_r needs r <= s, got r={r}, s={}",
                self.s
            )));
        }
        Ok(Rational::new(
            self.k as i64,
            (self.n * (self.s - r + 1)) as i64,
        ))
    }

    pub fn check_message(&self, f: &Polynomial) -> Result<()> {
        self.field.check_same(&f.field())?;
        if !f.degree_below(self.k) {
            return Err(Error::InvalidParameters(format!(
                "message degree {} >= k = {}",
                f.degree().unwrap(),
                self.k
            )));
        }
        Ok(())
    }

    pub fn encode(&self, f: &Polynomial) -> Result<Word> {
        self.check_message(f)?;
        Ok(self.encode_unchecked(f))
    }

    pub(crate) fn encode_unchecked(&self, f: &Polynomial) -> Word {
        Word {
            n: self.n,
            s: self.s,
            data: self.points.iter().map(|&x| f.eval_raw(x)).collect(),
        }
    }

    /// `g mod Q_i`.
    pub fn residue(&self, g: &Polynomial, i: usize) -> Result<Polynomial> {
        self.check_message(g)?;
        self.check_coord(i)?;
        g.rem(&self.q_polys[i])
    }

    fn check_coord(&self, i: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::InvalidParameters(format!(
                "coordinate {i} out of range for n = {}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        if w.n != self.n || w.s != self.s {
            return Err(Error::DimensionMismatch(format!(
                "word of shape {}x{} for a code with n={}, s={}",
                w.n, w.s, self.n, self.s
            )));
        }
        let q = self.field.modulus();
        if w.data.iter().any(|&v| v >= q) {
            return Err(Error::InvalidParameters(format!(
                "word entry out of range for q = {q}"
            )));
        }
        Ok(())
    }

    /// Whole-symbol agreements between two words.
    pub fn agreement(&self, w1: &Word, w2: &Word) -> Result<usize> {
        self.check_word(w1)?;
        self.check_word(w2)?;
        Ok(w1.agreement(w2))
    }

    /// `w1 ∈ B(w2, ρ)`, i.e. `#disagreements < ρ·n` (strict), decided exactly.
    pub fn in_ball(&self, w1: &Word, w2: &Word, rho: &Rational) -> Result<bool> {
        let agr = self.agreement(w1, w2)?;
        Ok(self.within_radius(agr, rho))
    }

    /// Ball membership for a word with `agreement` agreeing coordinates.
    pub fn within_radius(&self, agreement: usize, rho: &Rational) -> bool {
        Rational::int_lt_scaled((self.n - agreement) as u64, self.n as u64, rho)
    }

    /// Smallest agreement that places a word strictly inside `B(y, ρ)`, or
    /// `None` when even full agreement does not (ρ ≤ 0).
    pub fn min_agreement_for(&self, rho: &Rational) -> Option<usize> {
        (0..=self.n).find(|&a| self.within_radius(a, rho))
    }

    /// Constraints on message coefficients forcing agreement with `symbol`
    /// at coordinate `i`.
    pub fn agreement_constraints(&self, i: usize, symbol: &[u64]) -> LinearConstraints {
        assert_eq!(symbol.len(), self.s);
        let mut c = LinearConstraints::new(self.field, self.k);
        for (&x, &v) in self.orbit(i).iter().zip(symbol) {
            c.push_evaluation(x, v);
        }
        c
    }

    /// Number of messages, `q^k`.
    pub fn message_count(&self) -> u128 {
        (self.field.modulus() as u128).saturating_pow(self.k as u32)
    }

    /// Visits every message together with its codeword, updating the
    /// encoding incrementally (odometer order, constant term fastest).
    pub fn for_each_codeword(&self, cap: u128, mut visit: impl FnMut(&[u64], &Word)) -> Result<()> {
        let total = self.message_count();
        if total > cap {
            return Err(Error::EnumerationCap {
                required: total,
                cap,
            });
        }
        let f = self.field;
        let q = f.modulus();
        let ns = self.n * self.s;
        // cols[c][p] = (point p)^c
        let cols: Vec<Vec<u64>> = (0..self.k)
            .map(|c| self.points.iter().map(|&x| f.pow(x, c as u64)).collect())
            .collect();
        let mut coeffs = vec![0u64; self.k];
        let mut word = Word {
            n: self.n,
            s: self.s,
            data: vec![0; ns],
        };
        for step in 0..total {
            visit(&coeffs, &word);
            if step + 1 == total {
                break;
            }
            for c in 0..self.k {
                coeffs[c] += 1;
                if coeffs[c] < q {
                    for (w, &m) in word.data.iter_mut().zip(&cols[c]) {
                        *w = f.add(*w, m);
                    }
                    break;
                }
                // wrapped from q-1 to 0: subtract (q-1)·x^c
                coeffs[c] = 0;
                for (w, &m) in word.data.iter_mut().zip(&cols[c]) {
                    *w = f.sub(*w, f.mul(q - 1, m));
                }
            }
        }
        Ok(())
    }

    pub fn default_cap() -> u128 {
        ENUMERATION_CAP
    }
}

/// An element of `(F_q^s)^n`, stored flat (symbol `i` is
/// `data[i*s..(i+1)*s]`). Serializes as a list of `n` lists of `s` integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    n: usize,
    s: usize,
    data: Vec<u64>,
}

impl Word {
    pub fn from_symbols(symbols: Vec<Vec<u64>>) -> Result<Self> {
        let n = symbols.len();
        let s = symbols.first().map_or(0, Vec::len);
        if n == 0 || s == 0 || symbols.iter().any(|sym| sym.len() != s) {
            return Err(Error::DimensionMismatch(
                "word symbols must be nonempty and of equal length".into(),
            ));
        }
        Ok(Self {
            n,
            s,
            data: symbols.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(n: usize, s: usize) -> Self {
        Self {
            n,
            s,
            data: vec![0; n * s],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn symbol(&self, i: usize) -> &[u64] {
        &self.data[i * self.s..(i + 1) * self.s]
    }

    pub fn symbol_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.s..(i + 1) * self.s]
    }

    pub fn symbols(&self) -> impl Iterator<Item = &[u64]> {
        self.data.chunks(self.s)
    }

    pub fn to_symbols(&self) -> Vec<Vec<u64>> {
        self.symbols().map(<[u64]>::to_vec).collect()
    }

    /// Whole-symbol agreement count; shapes must match.
    pub fn agreement(&self, other: &Word) -> usize {
        debug_assert_eq!((self.n, self.s), (other.n, other.s));
        self.symbols()
            .zip(other.symbols())
            .filter(|(a, b)| a == b)
            .count()
    }

    /// Coordinates where the two words agree.
    pub fn agreeing_coords(&self, other: &Word) -> Vec<usize> {
        self.symbols()
            .zip(other.symbols())
            .enumerate()
            .filter(|(_, (a, b))| a == b)
            .map(|(i, _)| i)
            .collect()
    }

    /// `a·self + b·other`, symbol-wise.
    pub fn lin_comb(&self, a: u64, other: &Word, b: u64, field: Field) -> Word {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&x, &y)| field.add(field.mul(a, x), field.mul(b, y)))
            .collect();
        Word {
            n: self.n,
            s: self.s,
            data,
        }
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_symbols().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let symbols = Vec::<Vec<u64>>::deserialize(d)?;
        Word::from_symbols(symbols).map_err(serde::de::Error::custom)
    }
}
