//! Line bundles on the connected degree-`n` étale cover of a nodal cubic.
//!
//! The cover is a cycle of `n` projective lines; a line bundle on it is given
//! by its multidegree `(d_0, ..., d_{n-1})`, read cyclically.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cubic::{BundleOnCubic, CubicError, CurveKind};
use crate::linalg::{RationalMatrix, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("a cycle cover needs n ≥ 2 components, got {0}")]
    TooShort(usize),
    #[error("entry {0} is outside {{-1, 0, 1}}")]
    EntryOutOfScope(i64),
    #[error("multidegree sums to {0}, expected 0")]
    NonzeroSum(i64),
    #[error("wedge power {k} out of range 1..={max}")]
    WedgeOutOfRange { k: usize, max: usize },
    #[error("expected {expected} gluing scalars, got {got}")]
    GluingCount { expected: usize, got: usize },
    #[error("gluing scalars must be nonzero")]
    ZeroGluing,
    #[error(transparent)]
    Bundle(#[from] CubicError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiDegree {
    degrees: Vec<i64>,
}

impl MultiDegree {
    pub fn new(degrees: Vec<i64>) -> Result<Self, CycleError> {
        if degrees.len() < 2 {
            return Err(CycleError::TooShort(degrees.len()));
        }
        Ok(MultiDegree { degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn rotate(&self, by: usize) -> Self {
        let mut d = self.degrees.clone();
        let n = d.len();
        d.rotate_left(by % n);
        MultiDegree { degrees: d }
    }

    pub fn reverse(&self) -> Self {
        let mut d = self.degrees.clone();
        d.reverse();
        MultiDegree { degrees: d }
    }

    pub fn negate(&self) -> Self {
        MultiDegree {
            degrees: self.degrees.iter().map(|x| -x).collect(),
        }
    }

    fn check_scope(&self) -> Result<(), CycleError> {
        if let Some(&bad) = self.degrees.iter().find(|d| d.abs() > 1) {
            return Err(CycleError::EntryOutOfScope(bad));
        }
        match self.total() {
            0 => Ok(()),
            s => Err(CycleError::NonzeroSum(s)),
        }
    }

    /// Every multidegree of length `n` with entries in `{-1, 0, 1}` summing to zero.
    pub fn all_balanced(n: usize) -> Vec<MultiDegree> {
        let mut out = Vec::new();
        let total = 3usize.pow(n as u32);
        for mut code in 0..total {
            let mut d = Vec::with_capacity(n);
            for _ in 0..n {
                d.push((code % 3) as i64 - 1);
                code /= 3;
            }
            if d.iter().sum::<i64>() == 0 {
                out.push(MultiDegree { degrees: d });
            }
        }
        out
    }
}

/// Nonzero entries alternate in sign around the cycle.
fn alternates(degrees: &[i64]) -> bool {
    let nonzero: Vec<i64> = degrees.iter().copied().filter(|&d| d != 0).collect();
    nonzero.is_empty()
        || (0..nonzero.len()).all(|i| nonzero[i] * nonzero[(i + 1) % nonzero.len()] < 0)
}

/// Semistability of the pushforward: nonzero entries alternate in sign.
pub fn is_semistable(d: &MultiDegree) -> Result<bool, CycleError> {
    d.check_scope()?;
    Ok(alternates(&d.degrees))
}

/// Exactly one entry `+1` and one entry `−1`.
pub fn is_strongly_indecomposable(d: &MultiDegree) -> Result<bool, CycleError> {
    d.check_scope()?;
    let plus = d.degrees.iter().filter(|&&x| x == 1).count();
    let minus = d.degrees.iter().filter(|&&x| x == -1).count();
    Ok(plus == 1 && minus == 1)
}

/// An orbit of `k`-subsets of `Z/n` under `S ↦ S + 1`, with the degree
/// `Σ_{a ∈ S} d_a` of each member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeCycle {
    pub members: Vec<Vec<usize>>,
    pub degrees: Vec<i64>,
}

impl WedgeCycle {
    pub fn alternates(&self) -> bool {
        self.degrees.iter().all(|d| d.abs() <= 1) && alternates(&self.degrees)
    }
}

fn mask_to_set(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn shift_mask(mask: u64, n: usize) -> u64 {
    let full = (1u64 << n) - 1;
    ((mask << 1) | (mask >> (n - 1))) & full
}

/// The components of the cover carrying `∧^k` of the pushforward.
pub fn wedge_cycles(d: &MultiDegree, k: usize) -> Result<Vec<WedgeCycle>, CycleError> {
    let n = d.len();
    if k == 0 || k >= n {
        return Err(CycleError::WedgeOutOfRange { k, max: n - 1 });
    }
    let mut seen = vec![false; 1 << n];
    let mut cycles = Vec::new();
    for start in 0u64..(1 << n) {
        if start.count_ones() as usize != k || seen[start as usize] {
            continue;
        }
        let mut members = Vec::new();
        let mut degrees = Vec::new();
        let mut m = start;
        while !seen[m as usize] {
            seen[m as usize] = true;
            let set = mask_to_set(m, n);
            degrees.push(set.iter().map(|&a| d.degrees[a]).sum());
            members.push(set);
            m = shift_mask(m, n);
        }
        cycles.push(WedgeCycle { members, degrees });
    }
    Ok(cycles)
}

/// `∧^k` of the pushforward is semistable iff every wedge cycle alternates.
/// A component of degree `±2` or more always destabilizes.
pub fn wedge_is_semistable(d: &MultiDegree, k: usize) -> Result<bool, CycleError> {
    d.check_scope()?;
    Ok(wedge_cycles(d, k)?.iter().all(WedgeCycle::alternates))
}

/// Pushforward of the line bundle of multidegree `d`, glued around the cycle
/// by the given scalars: twists `d`, `(A v)_i = g_i v_{i+1}`.
pub fn pushforward_bundle(d: &MultiDegree, gluings: &[Q]) -> Result<BundleOnCubic, CycleError> {
    let n = d.len();
    if gluings.len() != n {
        return Err(CycleError::GluingCount {
            expected: n,
            got: gluings.len(),
        });
    }
    if gluings.iter().any(Zero::is_zero) {
        return Err(CycleError::ZeroGluing);
    }
    let glue = RationalMatrix::from_fn(n, n, |i, j| {
        if j == (i + 1) % n {
            gluings[i].clone()
        } else {
            Q::zero()
        }
    });
    Ok(BundleOnCubic::new(
        CurveKind::Nodal,
        d.degrees.clone(),
        glue,
    )?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlnWedgeReport {
    pub a: usize,
    pub b: usize,
    /// `(k, semistable)` for `2 ≤ k ≤ min(kmax, n − 2)`.
    pub entries: Vec<(usize, bool)>,
    /// `true` when `min(a, b) = 1`.
    pub expect_semistable: bool,
    /// Values of `k` contradicting the expected dichotomy, for manual review.
    pub flagged: Vec<usize>,
}

impl SlnWedgeReport {
    pub fn consistent(&self) -> bool {
        self.flagged.is_empty()
    }
}

/// Wedge powers of the pushforward of `d = e_0 − e_a` on the cover of degree `a + b`.
pub fn sln_wedge_report(a: usize, b: usize, kmax: usize) -> Result<SlnWedgeReport, CycleError> {
    let n = a + b;
    if a == 0 || b == 0 {
        return Err(CycleError::TooShort(n));
    }
    let mut deg = vec![0; n];
    deg[0] = 1;
    deg[a] = -1;
    let d = MultiDegree::new(deg)?;
    let expect_semistable = a.min(b) == 1;
    let mut entries = Vec::new();
    let mut flagged = Vec::new();
    for k in 2..=kmax.min(n.saturating_sub(2)) {
        let ok = wedge_is_semistable(&d, k)?;
        if ok != expect_semistable {
            flagged.push(k);
        }
        entries.push((k, ok));
    }
    Ok(SlnWedgeReport {
        a,
        b,
        entries,
        expect_semistable,
        flagged,
    })
}
