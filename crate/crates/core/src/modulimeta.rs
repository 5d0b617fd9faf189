//! Weights and degrees of the weighted projective moduli spaces, the `E_8`
//! ten-term decomposition, and the arithmetic of conformal determinant twists.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{build_root_system, GroupId, Series};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuliError {
    #[error("E8 has no Casimir pairing; use the affine data instead")]
    E8Pairing,
    #[error("{divisor} does not divide weight·m = {value}")]
    NotDivisible { value: i64, divisor: i64 },
    #[error("divisor must be positive")]
    ZeroDivisor,
    #[error("need at least two weights, got {0}")]
    TooFewWeights(usize),
    #[error("weights must be positive, got {0}")]
    NonPositiveWeight(i64),
    #[error("relation has {got} coefficients for {expected} blocks")]
    RelationLength { expected: usize, got: usize },
    #[error("block list is empty")]
    NoBlocks,
}

/// `(weight, degree)` pairs, in the order documented by each constructor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedDecomposition {
    pub pairs: Vec<(i64, i64)>,
}

impl WeightedDecomposition {
    pub fn weights(&self) -> Vec<i64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.pairs.iter().map(|p| p.1).collect()
    }
}

/// `(g_0, g_1, ..., g_r)`.
pub fn wp_weights(g: GroupId) -> Vec<i64> {
    build_root_system(g).comarks()
}

/// Weights sorted ascending against degrees `0, d_1, ..., d_r` sorted ascending;
/// for `D_n` the degrees are taken in the order `0, 2, 4, n, 6, ..., 2n − 2`.
pub fn casimir_pairing(g: GroupId) -> Result<WeightedDecomposition, ModuliError> {
    if g.series() == Series::E && g.rank() == 8 {
        return Err(ModuliError::E8Pairing);
    }
    let mut weights = wp_weights(g);
    weights.sort_unstable();
    let degrees: Vec<i64> = if g.series() == Series::D {
        let n = g.rank() as i64;
        let mut d = vec![0, 2, 4, n];
        d.extend((3..n).map(|i| 2 * i));
        d
    } else {
        let mut d = vec![0];
        d.extend(build_root_system(g).casimir_weights());
        d
    };
    Ok(WeightedDecomposition {
        pairs: weights.into_iter().zip(degrees).collect(),
    })
}

/// `e_i ↦ e_i + w_i m / n`.
pub fn weighted_tensor(
    dec: &WeightedDecomposition,
    m: i64,
    n: i64,
) -> Result<WeightedDecomposition, ModuliError> {
    if n <= 0 {
        return Err(ModuliError::ZeroDivisor);
    }
    let pairs = dec
        .pairs
        .iter()
        .map(|&(w, e)| {
            let value = w * m;
            if value % n != 0 {
                Err(ModuliError::NotDivisible { value, divisor: n })
            } else {
                Ok((w, e + value / n))
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(WeightedDecomposition { pairs })
}

/// The ten `(C^*-weight, degree)` pairs of the `E_8` slice, in the printed order.
pub fn e8_affine_data() -> WeightedDecomposition {
    WeightedDecomposition {
        pairs: vec![
            (1, 4),
            (1, 2),
            (2, 2),
            (2, 0),
            (3, 0),
            (3, -2),
            (4, -2),
            (4, -4),
            (5, -4),
            (6, -6),
        ],
    }
}

fn primes_up_to(n: i64) -> Vec<i64> {
    (2..=n)
        .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect()
}

/// No prime divides `r` of the `r + 1` weights.
pub fn admits_unique_extension(weights: &[i64]) -> Result<bool, ModuliError> {
    if weights.len() < 2 {
        return Err(ModuliError::TooFewWeights(weights.len()));
    }
    if let Some(&w) = weights.iter().find(|&&w| w <= 0) {
        return Err(ModuliError::NonPositiveWeight(w));
    }
    let r = weights.len() - 1;
    let max = *weights.iter().max().unwrap();
    Ok(primes_up_to(max)
        .into_iter()
        .all(|p| weights.iter().filter(|&&w| w % p == 0).count() < r))
}

/// Outcome of [`conformal_twists`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConformalOutcome {
    /// Twists `a_i` with their values `N_i = n_i(n_i − 1)/2 + a_i n_i`.
    Solution {
        twists: Vec<i64>,
        values: Vec<i64>,
    },
    /// Multipliers `u` with `Σ_j u_j R_j` identically zero mod `modulus` on the
    /// unknowns but nonzero on the constant term.
    NoSolution {
        modulus: i64,
        multipliers: Vec<i64>,
    },
    Undetermined,
}

/// Relations `N_1 = N_2 = ... = N_t`, as coefficient vectors.
pub fn pairwise_relations(t: usize) -> Vec<Vec<i64>> {
    (0..t.saturating_sub(1))
        .map(|i| {
            let mut c = vec![0; t];
            c[i] = 1;
            c[i + 1] = -1;
            c
        })
        .collect()
}

fn block_value(n: i64, a: i64) -> i64 {
    n * (n - 1) / 2 + a * n
}

const CERTIFICATE_MODULI: [i64; 8] = [2, 3, 4, 5, 7, 8, 9, 11];

/// Integer twists `a_i` with `Σ_i c_i N_i = 0` for every relation `c`.
///
/// Nonexistence is certified by a residue argument; otherwise the smallest
/// solution in the max norm (ties broken lexicographically) is returned,
/// searching up to `|a_i| ≤ 4 max(n_i)^2`.
pub fn conformal_twists(
    blocks: &[i64],
    relations: &[Vec<i64>],
) -> Result<ConformalOutcome, ModuliError> {
    let t = blocks.len();
    if t == 0 {
        return Err(ModuliError::NoBlocks);
    }
    if let Some(r) = relations.iter().find(|r| r.len() != t) {
        return Err(ModuliError::RelationLength {
            expected: t,
            got: r.len(),
        });
    }
    // Relation j reads Σ_i c_ji n_i a_i = −Σ_i c_ji n_i(n_i − 1)/2.
    let lhs: Vec<Vec<i64>> = relations
        .iter()
        .map(|c| c.iter().zip(blocks).map(|(ci, ni)| ci * ni).collect())
        .collect();
    let rhs: Vec<i64> = relations
        .iter()
        .map(|c| {
            -c.iter()
                .zip(blocks)
                .map(|(ci, ni)| ci * block_value(*ni, 0))
                .sum::<i64>()
        })
        .collect();

    if let Some((modulus, multipliers)) = residue_certificate(&lhs, &rhs) {
        return Ok(ConformalOutcome::NoSolution {
            modulus,
            multipliers,
        });
    }

    let max_n = *blocks.iter().max().unwrap();
    let bound = 4 * max_n * max_n;
    let satisfied = |a: &[i64]| {
        lhs.iter()
            .zip(&rhs)
            .all(|(row, r)| row.iter().zip(a).map(|(x, y)| x * y).sum::<i64>() == *r)
    };
    for level in 0..=bound {
        if let Some(a) = shell_search(t, level, &satisfied) {
            let values: Vec<i64> = blocks
                .iter()
                .zip(&a)
                .map(|(&n, &ai)| block_value(n, ai))
                .collect();
            assert!(relations.iter().all(|c| c
                .iter()
                .zip(&values)
                .map(|(x, y)| x * y)
                .sum::<i64>()
                == 0));
            return Ok(ConformalOutcome::Solution { twists: a, values });
        }
    }
    Ok(ConformalOutcome::Undetermined)
}

fn residue_certificate(lhs: &[Vec<i64>], rhs: &[i64]) -> Option<(i64, Vec<i64>)> {
    let m = lhs.len();
    if m == 0 {
        return None;
    }
    for q in CERTIFICATE_MODULI {
        let total = (q as usize).pow(m as u32);
        for code in 1..total {
            let mut u = Vec::with_capacity(m);
            let mut c = code;
            for _ in 0..m {
                u.push((c % q as usize) as i64);
                c /= q as usize;
            }
            let cols = lhs[0].len();
            let kills =
                (0..cols).all(|i| (0..m).map(|j| u[j] * lhs[j][i]).sum::<i64>().mod_floor(&q) == 0);
            let constant = (0..m).map(|j| u[j] * rhs[j]).sum::<i64>().mod_floor(&q);
            if kills && constant != 0 {
                return Some((q, u));
            }
        }
    }
    None
}

/// First vector (lexicographically) with max norm exactly `level` satisfying `ok`.
fn shell_search(t: usize, level: i64, ok: &impl Fn(&[i64]) -> bool) -> Option<Vec<i64>> {
    let mut a = vec![-level; t];
    loop {
        if a.iter().any(|x| x.abs() == level) && ok(&a) {
            return Some(a);
        }
        // advance odometer, last coordinate fastest
        let mut i = t;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if a[i] < level {
                a[i] += 1;
                for x in a.iter_mut().skip(i + 1) {
                    *x = -level;
                }
                break;
            }
        }
    }
}
