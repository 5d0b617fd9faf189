//! Vector bundles on nodal and cuspidal Weierstrass cubics.
//!
//! A bundle is stored as its pullback to the normalization `P^1`, a sum of
//! `O(a_i p_0)`, together with one matrix `A` describing the descent data at
//! the singular point. The normalization has affine coordinate `t`, the point
//! `p_0` sits at `t = ∞`, the cusp lies under `t = 0` and the node under
//! `t = 0` and `t = 1`.
//!
//! A global section is a tuple of polynomials `p_i` with `deg p_i ≤ a_i`
//! satisfying `p'(0) = A p(0)` (cuspidal) or `p(1) = A p(0)` (nodal).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{q, Poly, PolyMatrix, RationalMatrix, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubicError {
    #[error("curve kinds differ: {0} vs {1}")]
    CurveMismatch(CurveKind, CurveKind),
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("glue matrix is {rows}x{cols}, expected {rank}x{rank}")]
    GlueShape {
        rows: usize,
        cols: usize,
        rank: usize,
    },
    #[error("nodal glue matrix is singular")]
    SingularGlue,
    #[error("bundle has degree {0}, expected 0")]
    NonzeroDegree(i64),
    #[error("nodal Pic^0 parameter must be nonzero")]
    ZeroParameter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveKind {
    Nodal,
    Cuspidal,
}

impl CurveKind {
    pub const BOTH: [CurveKind; 2] = [CurveKind::Nodal, CurveKind::Cuspidal];
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveKind::Nodal => "nodal",
            CurveKind::Cuspidal => "cuspidal",
        })
    }
}

impl FromStr for CurveKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "nodal" => Ok(CurveKind::Nodal),
            "cuspidal" => Ok(CurveKind::Cuspidal),
            other => Err(format!("unknown curve kind {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleOnCubic {
    curve: CurveKind,
    twists: Vec<i64>,
    glue: RationalMatrix,
}

/// A degree-zero line bundle: `μ ∈ Q^*` for nodal curves, `c ∈ Q` for cuspidal ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pic0Element {
    curve: CurveKind,
    param: Q,
}

impl Pic0Element {
    pub fn new(curve: CurveKind, param: Q) -> Result<Self, CubicError> {
        if curve == CurveKind::Nodal && param.is_zero() {
            return Err(CubicError::ZeroParameter);
        }
        Ok(Pic0Element { curve, param })
    }

    pub fn identity(curve: CurveKind) -> Self {
        let param = match curve {
            CurveKind::Nodal => Q::one(),
            CurveKind::Cuspidal => Q::zero(),
        };
        Pic0Element { curve, param }
    }

    pub fn curve(&self) -> CurveKind {
        self.curve
    }

    pub fn param(&self) -> &Q {
        &self.param
    }
}

impl BundleOnCubic {
    pub fn new(
        curve: CurveKind,
        twists: Vec<i64>,
        glue: RationalMatrix,
    ) -> Result<Self, CubicError> {
        let n = twists.len();
        if glue.rows() != n || glue.cols() != n {
            return Err(CubicError::GlueShape {
                rows: glue.rows(),
                cols: glue.cols(),
                rank: n,
            });
        }
        if curve == CurveKind::Nodal && n > 0 && glue.det().is_zero() {
            return Err(CubicError::SingularGlue);
        }
        Ok(BundleOnCubic {
            curve,
            twists,
            glue,
        })
    }

    /// Trivial-pullback bundle with descent matrix `glue`.
    pub fn trivial_pullback(curve: CurveKind, glue: RationalMatrix) -> Result<Self, CubicError> {
        let n = glue.rows();
        Self::new(curve, vec![0; n], glue)
    }

    pub fn structure_sheaf(curve: CurveKind) -> Self {
        Self::line_bundle(curve, 0)
    }

    /// `O_C(m p_0)`.
    pub fn line_bundle(curve: CurveKind, m: i64) -> Self {
        BundleOnCubic {
            curve,
            twists: vec![m],
            glue: identity_glue(curve, 1),
        }
    }

    /// The trivial bundle of rank `n`.
    pub fn trivial(curve: CurveKind, n: usize) -> Self {
        BundleOnCubic {
            curve,
            twists: vec![0; n],
            glue: identity_glue(curve, n),
        }
    }

    /// `W_n∨`: pullback `O(-p_0) ⊕ O^{n-1}` with a single Jordan block,
    /// `A e_i = e_{i-1}` (cuspidal) or `A e_i = e_i + e_{i-1}` (nodal).
    pub fn w_dual(curve: CurveKind, n: usize) -> Result<Self, CubicError> {
        if n < 1 {
            return Err(CubicError::InvalidRank(n));
        }
        let mut twists = vec![0; n];
        twists[0] = -1;
        let glue = RationalMatrix::from_fn(n, n, |i, j| {
            if j == i + 1 || (curve == CurveKind::Nodal && i == j) {
                Q::one()
            } else {
                Q::zero()
            }
        });
        Ok(BundleOnCubic {
            curve,
            twists,
            glue,
        })
    }

    /// `W_n`, the dual of [`BundleOnCubic::w_dual`].
    pub fn w(curve: CurveKind, n: usize) -> Result<Self, CubicError> {
        Ok(Self::w_dual(curve, n)?.dual())
    }

    pub fn curve(&self) -> CurveKind {
        self.curve
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn glue(&self) -> &RationalMatrix {
        &self.glue
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn degree(&self) -> i64 {
        self.twists.iter().sum()
    }

    pub fn dual(&self) -> Self {
        let glue = match self.curve {
            CurveKind::Cuspidal => -&self.glue.transpose(),
            CurveKind::Nodal => self
                .glue
                .inverse()
                .expect("nodal glue is invertible")
                .transpose(),
        };
        BundleOnCubic {
            curve: self.curve,
            twists: self.twists.iter().map(|a| -a).collect(),
            glue,
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), CubicError> {
        if self.curve == other.curve {
            Ok(())
        } else {
            Err(CubicError::CurveMismatch(self.curve, other.curve))
        }
    }

    /// `V ⊗ W`, basis `e_i ⊗ f_j` in lexicographic order.
    pub fn tensor(&self, other: &Self) -> Result<Self, CubicError> {
        self.check_same(other)?;
        let twists = self
            .twists
            .iter()
            .flat_map(|a| other.twists.iter().map(move |b| a + b))
            .collect();
        let glue = match self.curve {
            CurveKind::Cuspidal => {
                let left = self.glue.kron(&RationalMatrix::identity(other.rank()));
                let right = RationalMatrix::identity(self.rank()).kron(&other.glue);
                &left + &right
            }
            CurveKind::Nodal => self.glue.kron(&other.glue),
        };
        Ok(BundleOnCubic {
            curve: self.curve,
            twists,
            glue,
        })
    }

    /// `V ⊕ W`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, CubicError> {
        self.check_same(other)?;
        let (n, m) = (self.rank(), other.rank());
        let glue = RationalMatrix::from_fn(n + m, n + m, |i, j| {
            if i < n && j < n {
                self.glue[(i, j)].clone()
            } else if i >= n && j >= n {
                other.glue[(i - n, j - n)].clone()
            } else {
                Q::zero()
            }
        });
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        Ok(BundleOnCubic {
            curve: self.curve,
            twists,
            glue,
        })
    }

    /// `V ⊗ O(m p_0)`.
    pub fn twist(&self, m: i64) -> Self {
        BundleOnCubic {
            curve: self.curve,
            twists: self.twists.iter().map(|a| a + m).collect(),
            glue: self.glue.clone(),
        }
    }

    /// `V ⊗ λ` for a degree-zero line bundle `λ`.
    pub fn twist_pic0(&self, lambda: &Pic0Element) -> Result<Self, CubicError> {
        if lambda.curve != self.curve {
            return Err(CubicError::CurveMismatch(self.curve, lambda.curve));
        }
        Ok(BundleOnCubic {
            curve: self.curve,
            twists: self.twists.clone(),
            glue: twisted_glue(self.curve, &self.glue, &lambda.param),
        })
    }

    /// `∧^k V` on the basis of increasing `k`-subsets.
    pub fn wedge(&self, k: usize) -> Self {
        let basis = k_subsets(self.rank(), k);
        let glue = match self.curve {
            CurveKind::Cuspidal => induced_derivation(&self.glue, &basis, true),
            CurveKind::Nodal => wedge_power(&self.glue, &basis),
        };
        BundleOnCubic {
            curve: self.curve,
            twists: self.sum_twists(&basis),
            glue,
        }
    }

    /// `Sym^k V` on the basis of non-decreasing `k`-tuples (monomials).
    pub fn sym(&self, k: usize) -> Self {
        let basis = multisets(self.rank(), k);
        let glue = match self.curve {
            CurveKind::Cuspidal => induced_derivation(&self.glue, &basis, false),
            CurveKind::Nodal => sym_power(&self.glue, &basis),
        };
        BundleOnCubic {
            curve: self.curve,
            twists: self.sum_twists(&basis),
            glue,
        }
    }

    fn sum_twists(&self, basis: &[Vec<usize>]) -> Vec<i64> {
        basis
            .iter()
            .map(|s| s.iter().map(|&i| self.twists[i]).sum())
            .collect()
    }

    /// Trace-free endomorphisms `ad V`, on the basis `E_ij` (`i ≠ j`, row-major)
    /// followed by `H_i = E_ii − E_{i+1,i+1}`.
    pub fn end0(&self) -> Self {
        let n = self.rank();
        let mut basis: Vec<RationalMatrix> = Vec::new();
        let mut twists = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    basis.push(RationalMatrix::from_fn(n, n, |r, c| {
                        q(i64::from(r == i && c == j))
                    }));
                    twists.push(self.twists[i] - self.twists[j]);
                }
            }
        }
        for i in 0..n.saturating_sub(1) {
            basis.push(RationalMatrix::from_fn(n, n, |r, c| {
                if r != c {
                    q(0)
                } else if r == i {
                    q(1)
                } else if r == i + 1 {
                    q(-1)
                } else {
                    q(0)
                }
            }));
            twists.push(0);
        }
        let a = &self.glue;
        let act = |x: &RationalMatrix| match self.curve {
            CurveKind::Cuspidal => &(a * x) - &(x * a),
            CurveKind::Nodal => {
                let inv = a.inverse().expect("nodal glue is invertible");
                &(a * x) * &inv
            }
        };
        let dim = basis.len();
        let mut glue = RationalMatrix::zeros(dim, dim);
        for (col, b) in basis.iter().enumerate() {
            let img = act(b);
            let coords = traceless_coords(&img);
            for (row, c) in coords.into_iter().enumerate() {
                glue[(row, col)] = c;
            }
        }
        BundleOnCubic {
            curve: self.curve,
            twists,
            glue,
        }
    }

    /// Replaces the descent matrix by `T A T^{-1}`, a change of frame at the
    /// singular point that preserves the isomorphism class when all twists agree.
    pub fn conjugate_glue(&self, t: &RationalMatrix) -> Option<Self> {
        let inv = t.inverse()?;
        Some(BundleOnCubic {
            curve: self.curve,
            twists: self.twists.clone(),
            glue: &(t * &self.glue) * &inv,
        })
    }
}

fn identity_glue(curve: CurveKind, n: usize) -> RationalMatrix {
    match curve {
        CurveKind::Nodal => RationalMatrix::identity(n),
        CurveKind::Cuspidal => RationalMatrix::zeros(n, n),
    }
}

fn twisted_glue(curve: CurveKind, glue: &RationalMatrix, param: &Q) -> RationalMatrix {
    match curve {
        CurveKind::Nodal => glue.scale(param),
        CurveKind::Cuspidal => &RationalMatrix::identity(glue.rows()).scale(param) + glue,
    }
}

/// Coordinates of a traceless matrix in the `E_ij`, `H_i` basis of [`BundleOnCubic::end0`].
fn traceless_coords(x: &RationalMatrix) -> Vec<Q> {
    let n = x.rows();
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(x[(i, j)].clone());
            }
        }
    }
    // diag = Σ h_i (e_i − e_{i+1}) gives h_i = d_0 + ... + d_i.
    let mut acc = Q::zero();
    for i in 0..n.saturating_sub(1) {
        acc += &x[(i, i)];
        out.push(acc.clone());
    }
    out
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Non-decreasing `k`-tuples from `0..n` in lexicographic order.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn index_of(basis: &[Vec<usize>]) -> BTreeMap<&[usize], usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect()
}

/// The derivation `D(e_{i_1} ⋯ e_{i_k}) = Σ_j e_{i_1} ⋯ (A e_{i_j}) ⋯ e_{i_k}` on
/// `∧^k` (`alternating = true`) or `Sym^k`.
fn induced_derivation(
    a: &RationalMatrix,
    basis: &[Vec<usize>],
    alternating: bool,
) -> RationalMatrix {
    let index = index_of(basis);
    let n = a.rows();
    let dim = basis.len();
    let mut out = RationalMatrix::zeros(dim, dim);
    for (col, s) in basis.iter().enumerate() {
        for pos in 0..s.len() {
            for l in 0..n {
                let coeff = &a[(l, s[pos])];
                if coeff.is_zero() {
                    continue;
                }
                let mut t = s.clone();
                t[pos] = l;
                let sign = if alternating {
                    match sort_with_sign(&mut t) {
                        Some(sign) => sign,
                        None => continue,
                    }
                } else {
                    t.sort_unstable();
                    1
                };
                let row = index[t.as_slice()];
                out[(row, col)] += coeff * q(sign);
            }
        }
    }
    out
}

/// Sorts in place and returns the permutation sign, or `None` on a repeated index.
fn sort_with_sign(t: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// `∧^k A`: the `(S, T)` entry is the minor on rows `S`, columns `T`.
fn wedge_power(a: &RationalMatrix, basis: &[Vec<usize>]) -> RationalMatrix {
    let dim = basis.len();
    RationalMatrix::from_fn(dim, dim, |r, c| {
        let (s, t) = (&basis[r], &basis[c]);
        RationalMatrix::from_fn(s.len(), t.len(), |i, j| a[(s[i], t[j])].clone()).det()
    })
}

/// `Sym^k A` on monomials: expand `Π_j (A e_{i_j})`.
fn sym_power(a: &RationalMatrix, basis: &[Vec<usize>]) -> RationalMatrix {
    let index = index_of(basis);
    let n = a.rows();
    let dim = basis.len();
    let mut out = RationalMatrix::zeros(dim, dim);
    for (col, s) in basis.iter().enumerate() {
        let mut terms: BTreeMap<Vec<usize>, Q> = BTreeMap::from([(Vec::new(), Q::one())]);
        for &i in s {
            let mut next: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
            for (mono, c) in &terms {
                for l in 0..n {
                    let entry = &a[(l, i)];
                    if entry.is_zero() {
                        continue;
                    }
                    let mut m = mono.clone();
                    let at = m.partition_point(|&x| x <= l);
                    m.insert(at, l);
                    *next.entry(m).or_insert_with(Q::zero) += c * entry;
                }
            }
            terms = next;
        }
        for (mono, c) in terms {
            out[(index[mono.as_slice()], col)] += c;
        }
    }
    out
}

/// Column offsets of the unknown polynomial coefficients, one block per summand.
fn unknown_layout(twists: &[i64]) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(twists.len());
    let mut total = 0;
    for &a in twists {
        offsets.push(total);
        if a >= 0 {
            total += a as usize + 1;
        }
    }
    (offsets, total)
}

/// The linear system whose kernel is `H^0`: one row per component of the
/// descent condition, one column per polynomial coefficient.
pub fn section_system(curve: CurveKind, twists: &[i64], glue: &RationalMatrix) -> RationalMatrix {
    let n = twists.len();
    let (offsets, cols) = unknown_layout(twists);
    let mut m = RationalMatrix::zeros(n, cols);
    for r in 0..n {
        // left side: p'(0)_r or p(1)_r
        if twists[r] >= 0 {
            let off = offsets[r];
            match curve {
                CurveKind::Cuspidal => {
                    if twists[r] >= 1 {
                        m[(r, off + 1)] += q(1);
                    }
                }
                CurveKind::Nodal => {
                    for j in 0..=twists[r] as usize {
                        m[(r, off + j)] += q(1);
                    }
                }
            }
        }
        // right side: −(A p(0))_r
        for s in 0..n {
            if twists[s] >= 0 && !glue[(r, s)].is_zero() {
                m[(r, offsets[s])] -= &glue[(r, s)];
            }
        }
    }
    m
}

/// `h^0(V)`.
pub fn h0(v: &BundleOnCubic) -> usize {
    section_system(v.curve, &v.twists, &v.glue).nullity()
}

/// `h^1(V) = h^0(V) − deg V` (Riemann–Roch on a curve of arithmetic genus one).
pub fn h1(v: &BundleOnCubic) -> i64 {
    h0(v) as i64 - v.degree()
}

/// `h^1(V)` computed independently as `h^0(V∨)`; the dualizing sheaf of a
/// Weierstrass cubic is trivial.
pub fn h1_serre(v: &BundleOnCubic) -> usize {
    h0(&v.dual())
}

/// A basis of `H^0(V)`, each element a tuple of polynomials in `t`.
pub fn sections(v: &BundleOnCubic) -> Vec<Vec<Poly>> {
    let (offsets, _) = unknown_layout(&v.twists);
    section_system(v.curve, &v.twists, &v.glue)
        .kernel()
        .into_iter()
        .map(|x| {
            v.twists
                .iter()
                .zip(&offsets)
                .map(|(&a, &off)| {
                    if a < 0 {
                        Poly::zero()
                    } else {
                        Poly::new(x[off..=off + a as usize].to_vec())
                    }
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cohomology {
    pub h0: usize,
    pub h1: i64,
}

pub fn cohomology(v: &BundleOnCubic) -> Cohomology {
    let h0 = h0(v);
    Cohomology {
        h0,
        h1: h0 as i64 - v.degree(),
    }
}

/// Generic value of `h^0(V ⊗ λ)` as `λ` ranges over `Pic^0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericH0 {
    pub h0: usize,
    /// `true` when the random evaluations disagreed and the rank was taken
    /// over the rational function field instead.
    pub symbolic: bool,
}

const GENERIC_SAMPLES: usize = 3;
const SAMPLE_RANGE: i64 = 1_000_000;

/// `h^0(V ⊗ λ)` for generic `λ ∈ Pic^0`, from seeded random evaluations with an
/// exact fallback over `Q(x)`.
pub fn generic_twisted_h0(v: &BundleOnCubic, seed: u64) -> GenericH0 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<usize> = (0..GENERIC_SAMPLES)
        .map(|_| {
            let x = random_nonzero_rational(&mut rng);
            let glue = twisted_glue(v.curve, &v.glue, &x);
            section_system(v.curve, &v.twists, &glue).nullity()
        })
        .collect();
    if samples.iter().all(|&s| s == samples[0]) {
        return GenericH0 {
            h0: samples[0],
            symbolic: false,
        };
    }
    GenericH0 {
        h0: symbolic_twisted_h0(v),
        symbolic: true,
    }
}

/// Rank computation over `Q(x)` where `x` is the `Pic^0` parameter.
pub fn symbolic_twisted_h0(v: &BundleOnCubic) -> usize {
    // The section system is affine in the glue, and the twisted glue is
    // A + xI or xA, so the system is S_0 + x S_1.
    let (base, slope) = match v.curve {
        CurveKind::Cuspidal => {
            let s0 = section_system(v.curve, &v.twists, &v.glue);
            let shifted = &v.glue + &RationalMatrix::identity(v.rank());
            let s1 = &section_system(v.curve, &v.twists, &shifted) - &s0;
            (s0, s1)
        }
        CurveKind::Nodal => {
            let zero = RationalMatrix::zeros(v.rank(), v.rank());
            let s0 = section_system(v.curve, &v.twists, &zero);
            let s1 = &section_system(v.curve, &v.twists, &v.glue) - &s0;
            (s0, s1)
        }
    };
    let mut pm = PolyMatrix::zeros(base.rows(), base.cols());
    for i in 0..base.rows() {
        for j in 0..base.cols() {
            pm.set(
                i,
                j,
                Poly::linear(base[(i, j)].clone(), slope[(i, j)].clone()),
            );
        }
    }
    base.cols() - pm.rank()
}

fn random_nonzero_rational(rng: &mut impl Rng) -> Q {
    loop {
        let num: i64 = rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE);
        let den: i64 = rng.gen_range(1..=SAMPLE_RANGE);
        if num != 0 {
            return Q::new(BigInt::from(num), BigInt::from(den));
        }
    }
}

/// A degree-zero bundle is unstable iff `h^0(V ⊗ λ) > 0` for generic `λ`.
pub fn is_unstable_deg0(v: &BundleOnCubic, seed: u64) -> Result<bool, CubicError> {
    if v.degree() != 0 {
        return Err(CubicError::NonzeroDegree(v.degree()));
    }
    Ok(generic_twisted_h0(v, seed).h0 > 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeierstrassType {
    Smooth,
    Nodal,
    Cuspidal,
}

/// Type of `y^2 = x^3 + g_2 x + g_3`.
pub fn classify_weierstrass(g2: &Q, g3: &Q) -> WeierstrassType {
    if g2.is_zero() && g3.is_zero() {
        return WeierstrassType::Cuspidal;
    }
    let disc = q(4) * g2 * g2 * g2 + q(27) * g3 * g3;
    if disc.is_zero() {
        WeierstrassType::Nodal
    } else {
        WeierstrassType::Smooth
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qr;

    use CurveKind::{Cuspidal, Nodal};

    fn wd(c: CurveKind, n: usize) -> BundleOnCubic {
        BundleOnCubic::w_dual(c, n).unwrap()
    }

    fn w(c: CurveKind, n: usize) -> BundleOnCubic {
        BundleOnCubic::w(c, n).unwrap()
    }

    #[test]
    fn line_bundles() {
        for c in CurveKind::BOTH {
            assert_eq!(h0(&BundleOnCubic::structure_sheaf(c)), 1);
            let minus = BundleOnCubic::line_bundle(c, -1);
            assert_eq!((h0(&minus), h1(&minus)), (0, 1));
            assert_eq!(h0(&BundleOnCubic::line_bundle(c, 1)), 1);
            assert_eq!(h0(&BundleOnCubic::line_bundle(c, 3)), 3);
        }
    }

    #[test]
    fn w_dual_has_no_sections() {
        for c in CurveKind::BOTH {
            for n in 1..=5 {
                let v = wd(c, n);
                assert_eq!(h0(&v), 0);
                assert_eq!(v.degree(), -1);
                assert_eq!(h0(&w(c, n)), 1);
            }
            assert_eq!(wd(c, 1), BundleOnCubic::line_bundle(c, -1));
        }
    }

    #[test]
    fn dual_is_involution() {
        for c in CurveKind::BOTH {
            let v = wd(c, 3).tensor(&w(c, 2)).unwrap();
            assert_eq!(v.dual().dual(), v);
            assert_eq!(v.dual().degree(), -v.degree());
        }
    }

    #[test]
    fn lemma_values() {
        for c in CurveKind::BOTH {
            for n in 1..=4 {
                let v = w(c, n).tensor(&wd(c, n + 1)).unwrap();
                assert_eq!(cohomology(&v), Cohomology { h0: 1, h1: 0 }, "{c} {n}");
            }
            let v = w(c, 2)
                .tensor(&wd(c, 3))
                .unwrap()
                .tensor(&wd(c, 3))
                .unwrap();
            assert_eq!(cohomology(&v), Cohomology { h0: 0, h1: 3 });
            let v = w(c, 2)
                .tensor(&wd(c, 3))
                .unwrap()
                .tensor(&wd(c, 4))
                .unwrap();
            assert_eq!(h0(&v), 0);
            assert_eq!(h0(&wd(c, 2).end0()), 0);
        }
        let e8 = |c| {
            w(c, 2)
                .tensor(&wd(c, 3))
                .unwrap()
                .tensor(&wd(c, 5))
                .unwrap()
        };
        assert_eq!(h0(&e8(Cuspidal)), 1);
        assert_eq!(h0(&e8(Nodal)), 0);
        let v = w(Cuspidal, 2)
            .tensor(&wd(Cuspidal, 3))
            .unwrap()
            .tensor(&wd(Cuspidal, 4))
            .unwrap();
        assert_eq!(h1(&v), 2);
    }

    #[test]
    fn sections_satisfy_descent() {
        let v = w(Nodal, 3).tensor(&wd(Nodal, 4)).unwrap();
        let basis = sections(&v);
        assert_eq!(basis.len(), 1);
        let s = &basis[0];
        let at0: Vec<Q> = s.iter().map(|p| p.eval(&q(0))).collect();
        let at1: Vec<Q> = s.iter().map(|p| p.eval(&q(1))).collect();
        assert_eq!(v.glue().mul_vec(&at0), at1);
    }

    #[test]
    fn pic0_twists() {
        for c in CurveKind::BOTH {
            let v = wd(c, 3).tensor(&w(c, 2)).unwrap();
            assert_eq!(v.twist_pic0(&Pic0Element::identity(c)).unwrap(), v);
        }
        let lam = Pic0Element::new(Nodal, q(2)).unwrap();
        let o = BundleOnCubic::structure_sheaf(Nodal);
        assert_eq!(h0(&o.twist_pic0(&lam).unwrap()), 0);
        let lam = Pic0Element::new(Cuspidal, qr(1, 3)).unwrap();
        assert_eq!(
            h0(&BundleOnCubic::structure_sheaf(Cuspidal)
                .twist_pic0(&lam)
                .unwrap()),
            0
        );
        assert_eq!(
            Pic0Element::new(Nodal, q(0)),
            Err(CubicError::ZeroParameter)
        );
        let lam = Pic0Element::new(Nodal, q(2)).unwrap();
        assert!(matches!(
            BundleOnCubic::structure_sheaf(Cuspidal).twist_pic0(&lam),
            Err(CubicError::CurveMismatch(..))
        ));
    }

    #[test]
    fn instability_examples() {
        for c in CurveKind::BOTH {
            assert!(!is_unstable_deg0(&BundleOnCubic::trivial(c, 3), 7).unwrap());
            let split = BundleOnCubic::line_bundle(c, 1)
                .direct_sum(&BundleOnCubic::line_bundle(c, -1))
                .unwrap();
            assert!(is_unstable_deg0(&split, 7).unwrap());
            assert_eq!(
                is_unstable_deg0(&wd(c, 2), 7),
                Err(CubicError::NonzeroDegree(-1))
            );
            for n in 1..=4 {
                let v = wd(c, n).tensor(&w(c, n)).unwrap();
                // W_n ⊗ W_n∨ = O ⊕ ad W_n is semistable of degree 0.
                assert!(!is_unstable_deg0(&v, 3).unwrap());
            }
        }
    }

    #[test]
    fn symbolic_matches_sampling() {
        for c in CurveKind::BOTH {
            let v = wd(c, 3).tensor(&w(c, 3)).unwrap();
            assert_eq!(symbolic_twisted_h0(&v), generic_twisted_h0(&v, 1).h0);
            let split = BundleOnCubic::line_bundle(c, 2)
                .direct_sum(&wd(c, 2))
                .unwrap();
            assert_eq!(symbolic_twisted_h0(&split), 2);
        }
    }

    #[test]
    fn wedge_and_sym_shapes() {
        for c in CurveKind::BOTH {
            let v = wd(c, 4);
            let w2 = v.wedge(2);
            assert_eq!((w2.rank(), w2.degree()), (6, -3));
            let s2 = v.sym(2);
            assert_eq!((s2.rank(), s2.degree()), (10, -5));
            assert_eq!(v.wedge(4).degree(), -1);
            assert_eq!(v.wedge(5).rank(), 0);
            assert_eq!(v.end0().rank(), 15);
            assert_eq!(v.end0().degree(), 0);
        }
    }

    #[test]
    fn nodal_wedge_is_multiplicative() {
        let a = RationalMatrix::from_i64(&[vec![1, 2, 0], vec![0, 1, 3], vec![1, 0, 1]]);
        let b = RationalMatrix::from_i64(&[vec![2, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
        let ab = &a * &b;
        let basis = multisets(3, 2);
        assert_eq!(
            sym_power(&ab, &basis),
            &sym_power(&a, &basis) * &sym_power(&b, &basis)
        );
        let basis = k_subsets(3, 2);
        assert_eq!(
            wedge_power(&ab, &basis),
            &wedge_power(&a, &basis) * &wedge_power(&b, &basis)
        );
    }

    #[test]
    fn derivation_is_lie_morphism() {
        let a = RationalMatrix::from_i64(&[vec![1, 2, 0], vec![0, -1, 3], vec![1, 0, 2]]);
        let b = RationalMatrix::from_i64(&[vec![0, 0, 1], vec![1, 1, 0], vec![0, -2, 1]]);
        let br = &(&a * &b) - &(&b * &a);
        for (basis, alt) in [(k_subsets(3, 2), true), (multisets(3, 3), false)] {
            let da = induced_derivation(&a, &basis, alt);
            let db = induced_derivation(&b, &basis, alt);
            assert_eq!(
                induced_derivation(&br, &basis, alt),
                &(&da * &db) - &(&db * &da)
            );
        }
    }

    #[test]
    fn weierstrass() {
        assert_eq!(
            classify_weierstrass(&q(0), &q(0)),
            WeierstrassType::Cuspidal
        );
        assert_eq!(classify_weierstrass(&q(-3), &q(-2)), WeierstrassType::Nodal);
        assert_eq!(classify_weierstrass(&q(1), &q(1)), WeierstrassType::Smooth);
    }
}
