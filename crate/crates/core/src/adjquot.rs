//! Type-A adjoint quotient: bundles with trivial pullback, characteristic
//! polynomial invariants and companion-matrix sections.
//!
//! A cuspidal datum is a traceless `X ∈ sl_n`, a nodal datum a `g ∈ SL_n`.
//! Invariants are the coefficients of `det(t I − X) = t^n + c_1 t^{n-1} + ... + c_n`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cubic::{BundleOnCubic, CurveKind};
use crate::linalg::{q, q_to_string, RationalMatrix, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdjError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix has trace {0}, expected 0")]
    NotTraceless(String),
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(String),
    #[error("invariant c_1 = {0} must vanish for sl_n")]
    NonzeroC1(String),
    #[error("invariant c_n = {got} must be {expected} for SL_n")]
    BadDeterminantCoefficient { got: String, expected: String },
    #[error("ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("cannot compare a cuspidal datum with a nodal one")]
    KindMismatch,
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("rank must be at least 1")]
    EmptyInvariants,
}

/// `X ∈ sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalDatum {
    x: RationalMatrix,
}

impl CuspidalDatum {
    pub fn new(x: RationalMatrix) -> Result<Self, AdjError> {
        if !x.is_square() {
            return Err(AdjError::NotSquare);
        }
        let tr = x.trace();
        if !tr.is_zero() {
            return Err(AdjError::NotTraceless(q_to_string(&tr)));
        }
        Ok(CuspidalDatum { x })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.x.rows()
    }
}

/// `g ∈ SL_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodalDatum {
    g: RationalMatrix,
}

impl NodalDatum {
    pub fn new(g: RationalMatrix) -> Result<Self, AdjError> {
        if !g.is_square() {
            return Err(AdjError::NotSquare);
        }
        let det = g.det();
        if !det.is_one() {
            return Err(AdjError::NotUnimodular(q_to_string(&det)));
        }
        Ok(NodalDatum { g })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Datum {
    Cuspidal(CuspidalDatum),
    Nodal(NodalDatum),
}

impl Datum {
    pub fn n(&self) -> usize {
        match self {
            Datum::Cuspidal(d) => d.n(),
            Datum::Nodal(d) => d.n(),
        }
    }

    pub fn invariants(&self) -> InvariantVector {
        match self {
            Datum::Cuspidal(d) => invariants_cuspidal(d),
            Datum::Nodal(d) => invariants_nodal(d),
        }
    }
}

/// Characteristic-polynomial coefficients `c_1, ..., c_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantVector {
    coeffs: Vec<Q>,
}

impl InvariantVector {
    /// From the full list `c_1, ..., c_n`.
    pub fn new(coeffs: Vec<Q>) -> Result<Self, AdjError> {
        if coeffs.is_empty() {
            return Err(AdjError::EmptyInvariants);
        }
        Ok(InvariantVector { coeffs })
    }

    /// An `sl_n` invariant vector from `c_2, ..., c_n` (`c_1 = 0`).
    pub fn traceless(rest: Vec<Q>) -> Self {
        let mut coeffs = vec![Q::zero()];
        coeffs.extend(rest);
        InvariantVector { coeffs }
    }

    /// An `SL_n` invariant vector from `c_1, ..., c_{n-1}` (`c_n = (−1)^n`).
    pub fn unimodular(head: Vec<Q>) -> Self {
        let n = head.len() + 1;
        let mut coeffs = head;
        coeffs.push(q(if n.is_multiple_of(2) { 1 } else { -1 }));
        InvariantVector { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_d` for `1 ≤ d ≤ n`.
    pub fn c(&self, d: usize) -> &Q {
        &self.coeffs[d - 1]
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }
}

/// `det(t I − A)` as `[1, c_1, ..., c_n]`, by Berkowitz's division-free algorithm.
pub fn char_poly(a: &RationalMatrix) -> Vec<Q> {
    let n = a.rows();
    if n == 0 {
        return vec![Q::one()];
    }
    let mut v = vec![Q::one(), -a[(0, 0)].clone()];
    for r in 1..n {
        // Bordered matrix [[M, C], [R, a_rr]] with M the leading r × r block.
        let c: Vec<Q> = (0..r).map(|i| a[(i, r)].clone()).collect();
        let row: Vec<Q> = (0..r).map(|j| a[(r, j)].clone()).collect();
        let mut t = Vec::with_capacity(r + 2);
        t.push(Q::one());
        t.push(-a[(r, r)].clone());
        let mut mc = c;
        for _ in 0..r {
            let dot: Q = row.iter().zip(&mc).map(|(x, y)| x * y).sum();
            t.push(-dot);
            mc = (0..r)
                .map(|i| (0..r).map(|j| &a[(i, j)] * &mc[j]).sum())
                .collect();
        }
        let next: Vec<Q> = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &v[j]).sum())
            .collect();
        v = next;
    }
    v
}

fn invariants_of(a: &RationalMatrix) -> InvariantVector {
    InvariantVector {
        coeffs: char_poly(a)[1..].to_vec(),
    }
}

pub fn invariants_cuspidal(x: &CuspidalDatum) -> InvariantVector {
    invariants_of(&x.x)
}

pub fn invariants_nodal(g: &NodalDatum) -> InvariantVector {
    invariants_of(&g.g)
}

/// Centralizer dimension in `gl_n` of `X` under the adjoint action.
fn centralizer_dim_lie(x: &RationalMatrix) -> usize {
    let n = x.rows();
    let id = RationalMatrix::identity(n);
    (&x.kron(&id) - &id.kron(&x.transpose())).nullity()
}

fn centralizer_dim_group(g: &RationalMatrix) -> usize {
    let n = g.rows();
    let inv_t = g.inverse().expect("SL_n element is invertible").transpose();
    (&g.kron(&inv_t) - &RationalMatrix::identity(n * n)).nullity()
}

/// `X` is regular iff its centralizer in `gl_n` has dimension `n`.
pub fn is_regular_cuspidal(x: &CuspidalDatum) -> bool {
    centralizer_dim_lie(&x.x) == x.n()
}

pub fn is_regular_nodal(g: &NodalDatum) -> bool {
    centralizer_dim_group(&g.g) == g.n()
}

/// Companion matrix: ones on the subdiagonal, last column `(−c_n, ..., −c_1)`.
pub fn companion(c: &InvariantVector) -> RationalMatrix {
    let n = c.n();
    RationalMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -c.c(n - i).clone()
        } else if i == j + 1 {
            Q::one()
        } else {
            Q::zero()
        }
    })
}

/// The regular element of `sl_n` with invariants `c`.
pub fn kostant_section(c: &InvariantVector) -> Result<CuspidalDatum, AdjError> {
    if !c.c(1).is_zero() {
        return Err(AdjError::NonzeroC1(q_to_string(c.c(1))));
    }
    CuspidalDatum::new(companion(c))
}

/// The regular element of `SL_n` with invariants `c`.
pub fn steinberg_section(c: &InvariantVector) -> Result<NodalDatum, AdjError> {
    let n = c.n();
    let expected = q(if n.is_multiple_of(2) { 1 } else { -1 });
    if *c.c(n) != expected {
        return Err(AdjError::BadDeterminantCoefficient {
            got: q_to_string(c.c(n)),
            expected: q_to_string(&expected),
        });
    }
    NodalDatum::new(companion(c))
}

/// The standard-representation bundle: trivial pullback, descent matrix `X` or `g`.
pub fn bundle_from_datum(d: &Datum) -> BundleOnCubic {
    let (curve, m) = match d {
        Datum::Cuspidal(x) => (CurveKind::Cuspidal, x.x.clone()),
        Datum::Nodal(g) => (CurveKind::Nodal, g.g.clone()),
    };
    BundleOnCubic::trivial_pullback(curve, m).expect("datum matrices are valid descent data")
}

/// Checks `c_d(μ^{-1} X) = μ^{-d} c_d(X)` for the degrees `d = 2, ..., n` of `sl_n`.
pub fn scaling_check(x: &CuspidalDatum, mu: &Q) -> Result<bool, AdjError> {
    if mu.is_zero() {
        return Err(AdjError::ZeroScale);
    }
    let inv = mu.recip();
    let before = invariants_cuspidal(x);
    let after = invariants_of(&x.x.scale(&inv));
    let mut factor = inv.clone();
    let mut ok = true;
    for d in 2..=x.n() {
        factor = &factor * &inv;
        ok &= *after.c(d) == before.c(d) * &factor;
    }
    Ok(ok)
}

/// Two data are S-equivalent iff they have the same invariants.
pub fn sequivalence_equal(a: &Datum, b: &Datum) -> Result<bool, AdjError> {
    match (a, b) {
        (Datum::Cuspidal(_), Datum::Nodal(_)) | (Datum::Nodal(_), Datum::Cuspidal(_)) => {
            return Err(AdjError::KindMismatch)
        }
        _ => {}
    }
    if a.n() != b.n() {
        return Err(AdjError::RankMismatch(a.n(), b.n()));
    }
    Ok(a.invariants() == b.invariants())
}

/// Human-readable invariant list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantStrings(pub Vec<String>);

impl From<&InvariantVector> for InvariantStrings {
    fn from(c: &InvariantVector) -> Self {
        InvariantStrings(c.coeffs.iter().map(q_to_string).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::h0;
    use crate::linalg::qr;

    fn m(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_i64(rows)
    }

    /// Faddeev–LeVerrier, independent of Berkowitz.
    fn leverrier(a: &RationalMatrix) -> Vec<Q> {
        let n = a.rows();
        let mut coeffs = vec![Q::one()];
        let mut mk = RationalMatrix::zeros(n, n);
        for k in 1..=n {
            let prev = coeffs[k - 1].clone();
            mk = &(a * &mk) + &RationalMatrix::identity(n).scale(&prev);
            let ck = -(a * &mk).trace() / q(k as i64);
            coeffs.push(ck);
        }
        coeffs
    }

    #[test]
    fn char_poly_matches_leverrier() {
        let a = m(&[
            vec![2, -1, 0, 3],
            vec![1, 0, 4, -2],
            vec![0, 5, -1, 1],
            vec![7, 0, 1, 1],
        ]);
        assert_eq!(char_poly(&a), leverrier(&a));
        let b = m(&[vec![0, 1], vec![-1, 0]]);
        assert_eq!(char_poly(&b), vec![q(1), q(0), q(1)]);
    }

    #[test]
    fn invariant_examples() {
        let zero = CuspidalDatum::new(RationalMatrix::zeros(3, 3)).unwrap();
        assert!(invariants_cuspidal(&zero)
            .coeffs()
            .iter()
            .all(Zero::is_zero));
        let d = CuspidalDatum::new(m(&[vec![1, 0], vec![0, -1]])).unwrap();
        assert_eq!(*invariants_cuspidal(&d).c(2), q(-1));
        let id = NodalDatum::new(RationalMatrix::identity(3)).unwrap();
        assert_eq!(invariants_nodal(&id).coeffs(), &[q(-3), q(3), q(-1)]);
        assert!(CuspidalDatum::new(RationalMatrix::identity(2)).is_err());
        assert!(NodalDatum::new(RationalMatrix::identity(2).scale(&q(2))).is_err());
    }

    #[test]
    fn regularity_examples() {
        let nil = CuspidalDatum::new(m(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]])).unwrap();
        assert!(is_regular_cuspidal(&nil));
        assert!(!is_regular_cuspidal(
            &CuspidalDatum::new(RationalMatrix::zeros(2, 2)).unwrap()
        ));
        // t^3 − 1: c = (0, 0, −1), c_3 = (−1)^3.
        let g = steinberg_section(&InvariantVector::unimodular(vec![q(0), q(0)])).unwrap();
        assert!(is_regular_nodal(&g));
        assert!(!is_regular_nodal(
            &NodalDatum::new(RationalMatrix::identity(2)).unwrap()
        ));
    }

    #[test]
    fn sections_round_trip() {
        let c = InvariantVector::traceless(vec![q(0), q(1), q(2)]);
        let x = kostant_section(&c).unwrap();
        assert_eq!(invariants_cuspidal(&x), c);
        assert!(is_regular_cuspidal(&x));
        let zero = kostant_section(&InvariantVector::traceless(vec![q(0); 3])).unwrap();
        assert!(is_regular_cuspidal(&zero));
        // (t − 1)^3 = t^3 − 3t^2 + 3t − 1
        let u = InvariantVector::unimodular(vec![q(-3), q(3)]);
        let g = steinberg_section(&u).unwrap();
        assert_eq!(invariants_nodal(&g), u);
        assert!(is_regular_nodal(&g));
        assert!(kostant_section(&InvariantVector::new(vec![q(1), q(0)]).unwrap()).is_err());
        assert!(steinberg_section(&InvariantVector::new(vec![q(0), q(2)]).unwrap()).is_err());
    }

    #[test]
    fn bundle_examples() {
        let x = CuspidalDatum::new(m(&[vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, -1]])).unwrap();
        assert_eq!(h0(&bundle_from_datum(&Datum::Cuspidal(x))), 1);
        let g = NodalDatum::new(RationalMatrix::identity(4)).unwrap();
        assert_eq!(h0(&bundle_from_datum(&Datum::Nodal(g))), 4);
    }

    #[test]
    fn scaling_examples() {
        let x = CuspidalDatum::new(m(&[vec![1, 0], vec![0, -1]])).unwrap();
        assert!(scaling_check(&x, &q(1)).unwrap());
        assert!(scaling_check(&x, &q(2)).unwrap());
        let scaled = invariants_of(&x.matrix().scale(&qr(1, 2)));
        assert_eq!(*scaled.c(2), qr(-1, 4));
        assert_eq!(scaling_check(&x, &q(0)), Err(AdjError::ZeroScale));
    }

    #[test]
    fn sequivalence_examples() {
        let x = m(&[vec![1, 2], vec![3, -1]]);
        let t = m(&[vec![1, 1], vec![0, 1]]);
        let y = &(&t * &x) * &t.inverse().unwrap();
        let a = Datum::Cuspidal(CuspidalDatum::new(x).unwrap());
        let b = Datum::Cuspidal(CuspidalDatum::new(y).unwrap());
        assert!(sequivalence_equal(&a, &b).unwrap());
        let nil = Datum::Cuspidal(CuspidalDatum::new(m(&[vec![0, 1], vec![0, 0]])).unwrap());
        let zero = Datum::Cuspidal(CuspidalDatum::new(RationalMatrix::zeros(2, 2)).unwrap());
        assert!(sequivalence_equal(&nil, &zero).unwrap());
        let d1 = Datum::Cuspidal(CuspidalDatum::new(m(&[vec![1, 0], vec![0, -1]])).unwrap());
        let d2 = Datum::Cuspidal(CuspidalDatum::new(m(&[vec![2, 0], vec![0, -2]])).unwrap());
        assert!(!sequivalence_equal(&d1, &d2).unwrap());
        let three = Datum::Cuspidal(CuspidalDatum::new(RationalMatrix::zeros(3, 3)).unwrap());
        assert_eq!(
            sequivalence_equal(&zero, &three),
            Err(AdjError::RankMismatch(2, 3))
        );
    }

    #[test]
    fn descent_sign_does_not_matter() {
        let x = m(&[vec![0, 1, 0], vec![0, 0, 1], vec![2, -1, 0]]);
        let plus = bundle_from_datum(&Datum::Cuspidal(CuspidalDatum::new(x.clone()).unwrap()));
        let minus = bundle_from_datum(&Datum::Cuspidal(CuspidalDatum::new(-&x).unwrap()));
        for (a, b) in [
            (plus.clone(), minus.clone()),
            (plus.end0(), minus.end0()),
            (plus.sym(2).twist(-1), minus.sym(2).twist(-1)),
            (plus.wedge(2).twist(1), minus.wedge(2).twist(1)),
        ] {
            assert_eq!(h0(&a), h0(&b));
        }
    }
}
