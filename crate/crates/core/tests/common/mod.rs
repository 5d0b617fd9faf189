//! Random generators shared by the integration tests.
#![allow(dead_code)]

use ellipstab::linalg::{q, qr};
use ellipstab::{Expr, RationalMatrix, Q};
use rand::Rng;

pub fn small_rational(rng: &mut impl Rng) -> Q {
    qr(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Q {
    loop {
        let x = small_rational(rng);
        if x != q(0) {
            return x;
        }
    }
}

/// Random traceless `n × n` matrix.
pub fn random_traceless(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    let mut x = RationalMatrix::from_fn(n, n, |_, _| small_rational(rng));
    let tr = x.trace();
    x[(n - 1, n - 1)] -= tr;
    x
}

/// Random element of `SL_n(Q)`: unit lower times diagonal times unit upper.
pub fn random_sl(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    let lower = RationalMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Greater => small_rational(rng),
        std::cmp::Ordering::Equal => q(1),
        std::cmp::Ordering::Less => q(0),
    });
    let upper = RationalMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => small_rational(rng),
        std::cmp::Ordering::Equal => q(1),
        std::cmp::Ordering::Greater => q(0),
    });
    let mut diag = RationalMatrix::identity(n);
    let mut prod = q(1);
    for i in 0..n - 1 {
        let d = nonzero_rational(rng);
        prod *= &d;
        diag[(i, i)] = d;
    }
    diag[(n - 1, n - 1)] = prod.recip();
    &(&lower * &diag) * &upper
}

/// Random invertible matrix.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    loop {
        let m = RationalMatrix::from_fn(n, n, |_, _| small_rational(rng));
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// A random bundle expression whose rank stays at most `max_rank`.
pub fn random_expr(rng: &mut impl Rng, depth: u32, max_rank: usize) -> Expr {
    loop {
        let e = random_expr_raw(rng, depth);
        let r = e.rank();
        if (1..=max_rank).contains(&r) {
            return e;
        }
    }
}

fn random_expr_raw(rng: &mut impl Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..3) {
            0 => Expr::W(rng.gen_range(1..=4)),
            1 => Expr::Wd(rng.gen_range(1..=4)),
            _ => Expr::O(rng.gen_range(-3..=3)),
        };
    }
    let sub = |rng: &mut _| Box::new(random_expr_raw(rng, depth - 1));
    match rng.gen_range(0..6) {
        0 => Expr::Dual(sub(rng)),
        1 => Expr::Tensor(sub(rng), sub(rng)),
        2 => Expr::Wedge(sub(rng), rng.gen_range(1..=3)),
        3 => Expr::Sym(sub(rng), rng.gen_range(1..=3)),
        4 => Expr::Ad(sub(rng)),
        _ => Expr::Twist(sub(rng), rng.gen_range(-2..=2)),
    }
}
