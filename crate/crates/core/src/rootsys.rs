//! Simple root systems of types A–G and the root combinatorics built on them.
//!
//! Simple roots are numbered in Bourbaki order, 1-based in user-facing APIs
//! and 0-based internally:
//!
//! * `A_n`: chain `1 - 2 - ... - n`.
//! * `B_n`: chain, `α_n` short.
//! * `C_n`: chain, `α_n` long.
//! * `D_n`: chain `1 - ... - (n-2)`, with `α_{n-1}` and `α_n` both attached to `α_{n-2}`.
//! * `E_n`: chain `1 - 3 - 4 - ... - n`, with `α_2` attached to `α_4`.
//! * `F_4`: `1 - 2 => 3 - 4`, `α_1, α_2` long.
//! * `G_2`: `α_1` short, `α_2` long.
//!
//! The Cartan matrix entry `a[i][j]` is `⟨α_i∨, α_j⟩ = 2(α_i, α_j)/(α_i, α_i)`.
//! The bilinear form is normalized so that long roots have squared length 2.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Far above the 240 roots of E8; hitting it means the matrix is not of finite type.
const MAX_ROOTS: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("invalid group {0}")]
    InvalidGroup(String),
    #[error("simple root index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("simple root {0} is not special")]
    NotSpecial(usize),
    #[error("type A has several special roots; pass one explicitly")]
    AmbiguousSpecialRoot,
    #[error("no root has α-coefficient {0}")]
    NoRootAtLevel(i64),
    #[error("roots at level {0} have no unique maximum")]
    NoMaximalRoot(i64),
    #[error("simple roots {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("fundamental weight {0} is not minuscule")]
    NotMinuscule(usize),
    #[error("matrix is not a Cartan matrix: {0}")]
    InvalidCartan(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupId {
    series: Series,
    rank: usize,
}

impl GroupId {
    pub fn new(series: Series, rank: usize) -> Result<Self, RootError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(GroupId { series, rank })
        } else {
            Err(RootError::InvalidGroup(format!(
                "{}{}",
                series.letter(),
                rank
            )))
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every simple type of rank at most `max_rank`, one representative per
    /// isomorphism class (`B_2 = C_2` and `D_3 = A_3` are listed once).
    pub fn all_up_to_rank(max_rank: usize) -> Vec<GroupId> {
        let mut out = Vec::new();
        for r in 1..=max_rank {
            out.push(GroupId {
                series: Series::A,
                rank: r,
            });
        }
        for r in 2..=max_rank {
            out.push(GroupId {
                series: Series::B,
                rank: r,
            });
        }
        for r in 3..=max_rank {
            out.push(GroupId {
                series: Series::C,
                rank: r,
            });
        }
        for r in 4..=max_rank {
            out.push(GroupId {
                series: Series::D,
                rank: r,
            });
        }
        for r in 6..=max_rank.min(8) {
            out.push(GroupId {
                series: Series::E,
                rank: r,
            });
        }
        if max_rank >= 4 {
            out.push(GroupId {
                series: Series::F,
                rank: 4,
            });
        }
        if max_rank >= 2 {
            out.push(GroupId {
                series: Series::G,
                rank: 2,
            });
        }
        out
    }

    fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Series::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Series::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Series::G => link(0, 1),
        }
        match self.series {
            Series::B => a[n - 1][n - 2] = -2,
            Series::C => a[n - 2][n - 1] = -2,
            Series::F => a[2][1] = -2,
            Series::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for GroupId {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootError::InvalidGroup(s.to_string());
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| bad())?;
        GroupId::new(series, rank)
    }
}

/// A root written in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector {
    pub coeffs: Vec<i64>,
    pub height: i64,
    pub length_sq: Rational64,
}

impl RootVector {
    /// Coefficient `c_γ(β)` of simple root `γ` (0-based).
    pub fn coeff(&self, gamma: usize) -> i64 {
        self.coeffs[gamma]
    }

    pub fn is_positive(&self) -> bool {
        self.height > 0
    }

    /// `true` iff `other - self` is a nonnegative combination of simple roots.
    pub fn le(&self, other: &RootVector) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A coroot written in the simple-coroot basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CorootVector {
    pub coeffs: Vec<Rational64>,
}

impl CorootVector {
    pub fn coeff(&self, i: usize) -> Rational64 {
        self.coeffs[i]
    }

    /// Integer coefficients; panics if any coefficient is fractional.
    pub fn integral(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral coroot coefficient");
                c.to_integer()
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialRootData {
    /// 0-based simple root index.
    pub alpha: usize,
    /// Sizes `n_i` of the `GL_{n_i}` blocks of the Levi factor, ascending.
    pub levi_blocks: Vec<usize>,
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleWeight {
    /// 0-based simple root index `δ`.
    pub delta: usize,
    pub minuscule: bool,
    pub quasi_minuscule: bool,
}

#[derive(Clone, Debug)]
pub struct SurgeryReport {
    pub nu: RootVector,
    pub m: i64,
    /// Simple roots of the new system, as roots of the old one. `ν` sits in
    /// the slot of `α`; `α_1` is removed.
    pub new_simple_roots: Vec<RootVector>,
    pub subsystem: GroupId,
    pub subsystem_cartan: Vec<Vec<i64>>,
    /// Position of `ν` among `new_simple_roots`.
    pub nu_index: usize,
    pub nu_is_special: bool,
    /// The arm `α_1, α_2, ..., α_k` walking away from `α` (0-based).
    pub arm: Vec<usize>,
    /// Positive roots with `c_α > 0` violating `m c_α ≥ c_{α_1} ≥ ... ≥ c_{α_k}`.
    pub violations: Vec<RootVector>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    group: GroupId,
    cartan: Vec<Vec<i64>>,
    simple_lengths: Vec<Rational64>,
    positive_roots: Vec<RootVector>,
}

/// Builds the root system of `g` by reflection closure of the simple roots.
pub fn build_root_system(g: GroupId) -> RootSystem {
    RootSystem::with_group(g, g.cartan()).expect("built-in Cartan matrices are valid")
}

impl RootSystem {
    /// Builds a root system from a connected Cartan matrix and identifies its type.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self, RootError> {
        let placeholder = GroupId {
            series: Series::A,
            rank: cartan.len().max(1),
        };
        let mut rs = Self::with_group(placeholder, cartan)?;
        rs.group = rs.classify()?;
        Ok(rs)
    }

    fn with_group(group: GroupId, cartan: Vec<Vec<i64>>) -> Result<Self, RootError> {
        let n = cartan.len();
        if n == 0 || cartan.iter().any(|r| r.len() != n) {
            return Err(RootError::InvalidCartan("not square".into()));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row[i] != 2 {
                return Err(RootError::InvalidCartan("diagonal entry is not 2".into()));
            }
            for (j, &a) in row.iter().enumerate() {
                if i != j && (a > 0 || (a == 0) != (cartan[j][i] == 0)) {
                    return Err(RootError::InvalidCartan(format!("bad entry ({i},{j})")));
                }
            }
        }
        let simple_lengths = symmetrize(&cartan)?;
        let mut rs = RootSystem {
            group,
            cartan,
            simple_lengths,
            positive_roots: Vec::new(),
        };
        rs.positive_roots = rs
            .enumerate_positive_roots()
            .ok_or_else(|| RootError::InvalidCartan("not of finite type".into()))?;
        Ok(rs)
    }

    fn enumerate_positive_roots(&self) -> Option<Vec<RootVector>> {
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let image = self.reflect_coeffs(&beta, i);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
            if seen.len() > MAX_ROOTS {
                return None;
            }
        }
        let mut pos: Vec<RootVector> = seen
            .into_iter()
            .filter(|c| c.iter().all(|&x| x >= 0))
            .map(|c| self.root_from_coeffs(c))
            .collect();
        pos.sort_by(|a, b| (a.height, &a.coeffs).cmp(&(b.height, &b.coeffs)));
        Some(pos)
    }

    fn root_from_coeffs(&self, coeffs: Vec<i64>) -> RootVector {
        let length_sq = self.inner_coeffs(&coeffs, &coeffs);
        RootVector {
            height: coeffs.iter().sum(),
            coeffs,
            length_sq,
        }
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_lengths(&self) -> &[Rational64] {
        &self.simple_lengths
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    /// Every root, positive and negative.
    pub fn all_roots(&self) -> Vec<RootVector> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|r| {
            let c: Vec<i64> = r.coeffs.iter().map(|x| -x).collect();
            self.root_from_coeffs(c)
        }));
        out
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        self.root_from_coeffs(c)
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        let pos = coeffs.iter().all(|&x| x >= 0);
        let key: Vec<i64> = if pos {
            coeffs.to_vec()
        } else {
            coeffs.iter().map(|x| -x).collect()
        };
        (pos || coeffs.iter().all(|&x| x <= 0))
            && self.positive_roots.iter().any(|r| r.coeffs == key)
    }

    fn long_length(&self) -> Rational64 {
        *self.simple_lengths.iter().max().expect("nonempty")
    }

    pub fn is_long(&self, root: &RootVector) -> bool {
        root.length_sq == self.long_length()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.simple_lengths
            .iter()
            .all(|l| *l == self.simple_lengths[0])
    }

    fn inner_coeffs(&self, a: &[i64], b: &[i64]) -> Rational64 {
        let mut acc = Rational64::zero();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                // (α_i, α_j) = a_ij |α_i|^2 / 2
                let form = Rational64::from(self.cartan[i][j]) * self.simple_lengths[i] / 2;
                acc += form * Rational64::from(x * y);
            }
        }
        acc
    }

    /// The symmetric bilinear form `(β, γ)`.
    pub fn inner(&self, a: &RootVector, b: &RootVector) -> Rational64 {
        self.inner_coeffs(&a.coeffs, &b.coeffs)
    }

    /// The pairing `⟨β, γ∨⟩ = 2(β, γ)/(γ, γ)`.
    pub fn pairing(&self, beta: &RootVector, gamma: &RootVector) -> i64 {
        let v = self.inner(beta, gamma) * 2 / gamma.length_sq;
        assert!(v.is_integer(), "non-integral root pairing");
        v.to_integer()
    }

    fn reflect_coeffs(&self, beta: &[i64], i: usize) -> Vec<i64> {
        let p: i64 = beta
            .iter()
            .enumerate()
            .map(|(j, &b)| b * self.cartan[i][j])
            .sum();
        let mut out = beta.to_vec();
        out[i] -= p;
        out
    }

    /// Simple reflection `s_i(β) = β − ⟨β, α_i∨⟩ α_i`.
    pub fn reflect(&self, beta: &RootVector, i: usize) -> RootVector {
        self.root_from_coeffs(self.reflect_coeffs(&beta.coeffs, i))
    }

    /// `β∨` in the simple-coroot basis: `Σ c_j |α_j|² / |β|² · α_j∨`.
    pub fn coroot(&self, beta: &RootVector) -> CorootVector {
        CorootVector {
            coeffs: beta
                .coeffs
                .iter()
                .zip(&self.simple_lengths)
                .map(|(&c, l)| Rational64::from(c) * l / beta.length_sq)
                .collect(),
        }
    }

    /// Coordinates of a root in the fundamental-weight basis: `⟨β, α_i∨⟩`.
    pub fn weight_coords(&self, beta: &RootVector) -> Vec<i64> {
        (0..self.rank())
            .map(|i| {
                beta.coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, &b)| b * self.cartan[i][j])
                    .sum()
            })
            .collect()
    }

    pub fn highest_root(&self) -> &RootVector {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn highest_short_root(&self) -> &RootVector {
        self.positive_roots
            .iter()
            .rev()
            .find(|r| r.length_sq == *self.simple_lengths.iter().min().unwrap())
            .expect("some root is short")
    }

    fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.cartan[i][j] != 0)
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    fn check_index(&self, i: usize) -> Result<(), RootError> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(RootError::IndexOutOfRange(i + 1))
        }
    }

    /// Comarks `(g_0, g_1, ..., g_r)` with `g_0 = 1`: the coefficients of the
    /// highest coroot `α̃∨` on the simple coroots.
    pub fn comarks(&self) -> Vec<i64> {
        let mut out = vec![1];
        out.extend(self.coroot(self.highest_root()).integral());
        out
    }

    /// Exponents read off the positive-root height histogram.
    pub fn exponents(&self) -> Vec<i64> {
        let max_h = self.highest_root().height as usize;
        let mut count = vec![0usize; max_h + 2];
        for r in &self.positive_roots {
            count[r.height as usize] += 1;
        }
        // m occurs count[m] - count[m+1] times.
        let mut out = Vec::new();
        for m in 1..=max_h {
            for _ in 0..count[m].saturating_sub(count[m + 1]) {
                out.push(m as i64);
            }
        }
        out
    }

    /// Degrees `d_i = m_i + 1` of the basic invariants, non-decreasing.
    pub fn casimir_weights(&self) -> Vec<i64> {
        self.exponents().into_iter().map(|m| m + 1).collect()
    }

    /// Every simple root whose removal leaves A-type components, each met at an
    /// end, and which is long.
    pub fn special_roots(&self) -> Vec<SpecialRootData> {
        (0..self.rank())
            .filter_map(|a| self.special_root_data(a))
            .collect()
    }

    fn special_root_data(&self, alpha: usize) -> Option<SpecialRootData> {
        if !self.is_long(&self.simple_root(alpha)) {
            return None;
        }
        let mut blocks = Vec::new();
        for comp in self.components_without(alpha) {
            let set: BTreeSet<usize> = comp.iter().copied().collect();
            let deg = |v: usize| self.neighbors(v).filter(|w| set.contains(w)).count();
            let edges: usize = comp.iter().map(|&v| deg(v)).sum::<usize>() / 2;
            let is_path = edges + 1 == comp.len() && comp.iter().all(|&v| deg(v) <= 2);
            let simply_laced = comp.iter().all(|&v| {
                self.neighbors(v)
                    .filter(|w| set.contains(w))
                    .all(|w| self.cartan[v][w] == -1 && self.cartan[w][v] == -1)
            });
            if !is_path || !simply_laced {
                return None;
            }
            let touching: Vec<usize> = self.neighbors(alpha).filter(|w| set.contains(w)).collect();
            if touching.len() != 1 || deg(touching[0]) > 1 {
                return None;
            }
            blocks.push(comp.len() + 1);
        }
        blocks.sort_unstable();
        Some(SpecialRootData {
            alpha,
            t: blocks.len(),
            levi_blocks: blocks,
        })
    }

    fn components_without(&self, removed: usize) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        seen[removed] = true;
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Resolves the special root: explicit index (0-based) if given, otherwise
    /// the unique one. Type A requires an explicit choice when `rank > 1`.
    pub fn resolve_special(&self, alpha: Option<usize>) -> Result<usize, RootError> {
        match alpha {
            Some(a) => {
                self.check_index(a)?;
                if self.special_root_data(a).is_some() {
                    Ok(a)
                } else {
                    Err(RootError::NotSpecial(a + 1))
                }
            }
            None => {
                let sp = self.special_roots();
                if sp.len() == 1 {
                    Ok(sp[0].alpha)
                } else {
                    Err(RootError::AmbiguousSpecialRoot)
                }
            }
        }
    }

    /// Largest `k` with a root of `α`-coefficient `k`.
    pub fn max_level(&self, alpha: usize) -> i64 {
        self.highest_root().coeff(alpha)
    }

    /// `#{β > 0 : c_α(β) = k}`, the dimension of the graded piece `u^k`.
    pub fn uk_dimension(&self, alpha: usize, k: i64) -> usize {
        self.positive_roots
            .iter()
            .filter(|b| b.coeff(alpha) == k)
            .count()
    }

    /// Number of affine-diagram nodes (including the extra node) with comark `k`.
    pub fn i_of_k(&self, k: i64) -> usize {
        self.comarks().into_iter().filter(|&g| g == k).count()
    }

    /// The highest root with `α`-coefficient `k`.
    pub fn lambda_k(&self, alpha: usize, k: i64) -> Result<RootVector, RootError> {
        let level: Vec<&RootVector> = self
            .positive_roots
            .iter()
            .filter(|b| b.coeff(alpha) == k)
            .collect();
        if level.is_empty() {
            return Err(RootError::NoRootAtLevel(k));
        }
        level
            .iter()
            .find(|m| level.iter().all(|b| b.le(m)))
            .map(|m| (*m).clone())
            .ok_or(RootError::NoMaximalRoot(k))
    }

    /// Whether `λ_1(α)∨` equals the sum of all simple coroots.
    pub fn lambda1_coroot_identity(&self, alpha: usize) -> Result<bool, RootError> {
        let l1 = self.lambda_k(alpha, 1)?;
        Ok(self.coroot(&l1).coeffs.iter().all(|c| c.is_one()))
    }

    /// `{−⟨β, λ_1(α)∨⟩ : c_α(β) = k}`, sorted ascending.
    pub fn pullback_degree_multiset(&self, alpha: usize, k: i64) -> Result<Vec<i64>, RootError> {
        let l1 = self.lambda_k(alpha, 1)?;
        let mut out: Vec<i64> = self
            .positive_roots
            .iter()
            .filter(|b| b.coeff(alpha) == k)
            .map(|b| -self.pairing(b, &l1))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    fn max_coroot_coeff(&self, delta: usize, only_long: bool) -> Rational64 {
        self.positive_roots
            .iter()
            .filter(|b| !only_long || self.is_long(b))
            .map(|b| self.coroot(b).coeff(delta))
            .max()
            .expect("nonempty")
    }

    /// `⟨ϖ_δ, β∨⟩ ∈ {−1, 0, 1}` for every root `β`.
    pub fn is_minuscule(&self, delta: usize) -> bool {
        self.max_coroot_coeff(delta, false) <= Rational64::one()
    }

    /// Nodes with comark 1 whose fundamental weight pairs to at most 1 with
    /// every short coroot (the coroots of long roots).
    pub fn admissible_fundamental_weights(&self) -> Vec<AdmissibleWeight> {
        let comarks = self.comarks();
        let qm = if self.is_simply_laced() {
            None
        } else {
            Some(self.weight_coords(self.highest_short_root()))
        };
        (0..self.rank())
            .filter(|&d| comarks[d + 1] == 1 && self.max_coroot_coeff(d, true) <= Rational64::one())
            .map(|d| AdmissibleWeight {
                delta: d,
                minuscule: self.is_minuscule(d),
                quasi_minuscule: qm
                    .as_ref()
                    .is_some_and(|w| w.iter().enumerate().all(|(i, &x)| x == i64::from(i == d))),
            })
            .collect()
    }

    /// Size of the Weyl orbit of the minuscule weight `ϖ_δ`.
    pub fn weight_orbit_size(&self, delta: usize) -> Result<usize, RootError> {
        self.check_index(delta)?;
        if !self.is_minuscule(delta) {
            return Err(RootError::NotMinuscule(delta + 1));
        }
        let n = self.rank();
        let mut start = vec![0i64; n];
        start[delta] = 1;
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            for i in 0..n {
                if w[i] == 0 {
                    continue;
                }
                // α_i has weight coordinates given by column i of the Cartan matrix.
                let img: Vec<i64> = (0..n).map(|j| w[j] - w[i] * self.cartan[j][i]).collect();
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        Ok(seen.len())
    }

    /// Replaces `α` and its neighbour `α_1` by `ν = α + mα_1`, `m = −⟨α, α_1∨⟩`,
    /// identifies the resulting root system, and checks that coefficients of
    /// positive roots decrease along the arm through `α_1`.
    pub fn parabolic_induction_surgery(
        &self,
        alpha: usize,
        alpha1: usize,
    ) -> Result<SurgeryReport, RootError> {
        self.check_index(alpha)?;
        self.check_index(alpha1)?;
        if !self.are_adjacent(alpha, alpha1) {
            return Err(RootError::NotAdjacent(alpha + 1, alpha1 + 1));
        }
        if self.special_root_data(alpha).is_none() {
            return Err(RootError::NotSpecial(alpha + 1));
        }
        let m = -self.cartan[alpha1][alpha];
        let mut nu_c = vec![0; self.rank()];
        nu_c[alpha] = 1;
        nu_c[alpha1] = m;
        let nu = self.root_from_coeffs(nu_c);
        debug_assert!(self.is_root(&nu.coeffs));

        let mut new_simple = Vec::new();
        let mut nu_index = 0;
        for i in 0..self.rank() {
            if i == alpha1 {
                continue;
            }
            if i == alpha {
                nu_index = new_simple.len();
                new_simple.push(nu.clone());
            } else {
                new_simple.push(self.simple_root(i));
            }
        }
        let k = new_simple.len();
        let cartan: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| self.pairing(&new_simple[j], &new_simple[i]))
                    .collect()
            })
            .collect();
        let sub = RootSystem::from_cartan(cartan.clone())?;
        let nu_is_special = sub.special_root_data(nu_index).is_some();

        let arm = self.arm_from(alpha, alpha1);
        let violations = self
            .positive_roots
            .iter()
            .filter(|b| b.coeff(alpha) > 0)
            .filter(|b| {
                let mut prev = m * b.coeff(alpha);
                for &g in &arm {
                    if b.coeff(g) > prev {
                        return true;
                    }
                    prev = b.coeff(g);
                }
                false
            })
            .cloned()
            .collect();

        Ok(SurgeryReport {
            nu,
            m,
            new_simple_roots: new_simple,
            subsystem: sub.group(),
            subsystem_cartan: cartan,
            nu_index,
            nu_is_special,
            arm,
            violations,
        })
    }

    fn arm_from(&self, alpha: usize, alpha1: usize) -> Vec<usize> {
        let mut arm = vec![alpha1];
        let mut prev = alpha;
        let mut cur = alpha1;
        loop {
            let next: Vec<usize> = self
                .neighbors(cur)
                .filter(|&w| w != prev && w != alpha)
                .collect();
            if next.len() != 1 {
                break;
            }
            prev = cur;
            cur = next[0];
            arm.push(cur);
        }
        arm
    }

    fn classify(&self) -> Result<GroupId, RootError> {
        let r = self.rank();
        let npos = self.positive_roots.len();
        let short_len = *self.simple_lengths.iter().min().unwrap();
        let nshort = self
            .positive_roots
            .iter()
            .filter(|b| b.length_sq == short_len)
            .count();
        let series = if self.is_simply_laced() {
            match (r, npos) {
                (_, p) if p == r * (r + 1) / 2 => Series::A,
                (_, p) if r >= 4 && p == r * (r - 1) => Series::D,
                (6, 36) | (7, 63) | (8, 120) => Series::E,
                _ => return Err(RootError::InvalidCartan("not of finite type".into())),
            }
        } else {
            match (r, npos) {
                (2, 6) => Series::G,
                (4, 24) if nshort == 12 => Series::F,
                (_, p) if p == r * r && nshort == r => Series::B,
                (_, p) if p == r * r => Series::C,
                _ => return Err(RootError::InvalidCartan("not of finite type".into())),
            }
        };
        GroupId::new(series, r)
    }
}

/// Squared lengths of the simple roots, long roots normalized to 2.
fn symmetrize(cartan: &[Vec<i64>]) -> Result<Vec<Rational64>, RootError> {
    let n = cartan.len();
    let mut len: Vec<Option<Rational64>> = vec![None; n];
    len[0] = Some(Rational64::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let li = len[i].unwrap();
        for j in 0..n {
            if j == i || cartan[i][j] == 0 {
                continue;
            }
            // a_ij |α_i|^2 = a_ji |α_j|^2
            let lj = li * Rational64::from(cartan[i][j]) / Rational64::from(cartan[j][i]);
            match len[j] {
                None => {
                    len[j] = Some(lj);
                    stack.push(j);
                }
                Some(existing) if existing != lj => {
                    return Err(RootError::InvalidCartan("not symmetrizable".into()))
                }
                _ => {}
            }
        }
    }
    let len: Vec<Rational64> = len
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| RootError::InvalidCartan("disconnected diagram".into()))?;
    let max = *len.iter().max().unwrap();
    Ok(len.iter().map(|l| l * 2 / max).collect())
}
