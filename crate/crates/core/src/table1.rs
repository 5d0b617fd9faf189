//! The graded pieces `u^k` of the unipotent radical, as bundles on a singular cubic.
//!
//! Each row is keyed by a group, its special root `α` and a level `k`. The bundle
//! is written in the expression language; where two isomorphic forms are
//! printed, both are kept and the simplified one is used for the sweep.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cubic::{cohomology, BundleOnCubic, CurveKind};
use crate::expr::{parse, Expr};
use crate::rootsys::{build_root_system, GroupId, RootError, RootSystem, Series};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Table1Error {
    #[error("({group}, k = {k}) is not a row of the table")]
    NotInTable { group: GroupId, k: i64 },
    #[error(transparent)]
    Root(#[from] RootError),
}

/// A row: the bundle expressions (simplified form first) and the tabulated `i(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub group: GroupId,
    /// 0-based special root.
    pub alpha: usize,
    pub k: i64,
    pub i_k: usize,
    pub forms: Vec<Expr>,
}

impl Table1Row {
    pub fn expr(&self) -> &Expr {
        &self.forms[0]
    }

    pub fn bundle(&self, curve: CurveKind) -> BundleOnCubic {
        self.expr()
            .evaluate(curve)
            .expect("table expressions are well formed")
    }
}

fn forms(list: &[&str]) -> Vec<Expr> {
    list.iter()
        .map(|s| parse(s).expect("table expression parses"))
        .collect()
}

/// Looks up the row `(g, α, k)`. Type A needs `α`; other types use their unique special root.
pub fn table1_row(g: GroupId, alpha: Option<usize>, k: i64) -> Result<Table1Row, Table1Error> {
    let rs = build_root_system(g);
    let alpha = rs.resolve_special(alpha)?;
    let n = g.rank() as i64;
    let missing = || Table1Error::NotInTable { group: g, k };
    let (i_k, list): (i64, Vec<String>) = match (g.series(), k) {
        (Series::A, 1) => {
            let j = alpha as i64 + 1;
            (n + 1, vec![format!("Wd{j}*Wd{}", n + 1 - j)])
        }
        (Series::B, 1) => (3, vec![format!("Wd{}*ad(W2)", n - 1)]),
        (Series::B, 2) => (n - 2, vec![format!("wedge(Wd{},2)", n - 1)]),
        (Series::C, 1) => (n + 1, vec![format!("sym(Wd{n},2)")]),
        (Series::D, 1) if n >= 4 => (4, vec![format!("Wd{}*(W2*Wd2)", n - 2)]),
        (Series::D, 2) if n >= 4 => (n - 3, vec![format!("wedge(Wd{},2)", n - 2)]),
        (Series::E, _) | (Series::F, _) | (Series::G, _) => {
            let (i_k, strs): (i64, &[&str]) = match (g.series(), n, k) {
                (Series::E, 6, 1) => (3, &["W2*Wd3*Wd3", "Wd2*Wd3*Wd3*O(1)"]),
                (Series::E, 6, 2) => (3, &["W3*W3*O(-1)", "wedge(Wd3,2)*wedge(Wd3,2)*O(1)"]),
                (Series::E, 6, 3) => (1, &["Wd2"]),
                (Series::E, 7, 1) => (2, &["W2*Wd3*Wd4", "Wd2*Wd3*Wd4*O(1)"]),
                (Series::E, 7, 2) => (
                    3,
                    &["W3*wedge(W4,2)*O(-1)", "wedge(Wd3,2)*wedge(Wd4,2)*O(1)"],
                ),
                (Series::E, 7, 3) => (2, &["W4*Wd2", "wedge(Wd4,3)*Wd2*O(1)"]),
                (Series::E, 7, 4) => (1, &["Wd3"]),
                (Series::E, 8, 1) => (1, &["W2*Wd3*Wd5", "Wd2*Wd3*Wd5*O(1)"]),
                (Series::E, 8, 2) => (2, &["wedge(Wd5,2)*W3", "wedge(Wd3,2)*wedge(Wd5,2)*O(1)"]),
                (Series::E, 8, 3) => (2, &["wedge(W5,2)*Wd2", "Wd2*wedge(Wd5,3)*O(1)"]),
                (Series::E, 8, 4) => (2, &["W5*Wd3", "Wd3*wedge(Wd5,4)*O(1)"]),
                (Series::E, 8, 5) => (1, &["Wd2*W3", "Wd2*wedge(Wd3,2)*O(1)"]),
                (Series::E, 8, 6) => (1, &["Wd5"]),
                (Series::F, 4, 1) => (2, &["Wd2*sym(Wd3,2)*O(1)"]),
                (Series::F, 4, 2) => (2, &["sym(W3,2)*O(-1)"]),
                (Series::F, 4, 3) => (1, &["Wd2"]),
                (Series::G, 2, 1) => (2, &["sym(Wd2,3)*O(1)"]),
                (Series::G, 2, 2) => (1, &["O(-1)"]),
                _ => return Err(missing()),
            };
            (i_k, strs.iter().map(|s| s.to_string()).collect())
        }
        _ => return Err(missing()),
    };
    let refs: Vec<&str> = list.iter().map(String::as_str).collect();
    Ok(Table1Row {
        group: g,
        alpha,
        k,
        i_k: i_k as usize,
        forms: forms(&refs),
    })
}

/// `u^k` as a bundle on the given curve.
pub fn table1_bundle(
    g: GroupId,
    alpha: Option<usize>,
    k: i64,
    curve: CurveKind,
) -> Result<BundleOnCubic, Table1Error> {
    Ok(table1_row(g, alpha, k)?.bundle(curve))
}

/// All rows of one group, `k = 1, ..., c_α(α̃)`.
pub fn table1_rows(g: GroupId, alpha: Option<usize>) -> Result<Vec<Table1Row>, Table1Error> {
    let rs = build_root_system(g);
    let a = rs.resolve_special(alpha)?;
    (1..=rs.max_level(a))
        .map(|k| table1_row(g, Some(a), k))
        .collect()
}

/// One representative per table line: `A_4` with `α = α_2`, then `B_4, C_4, D_5`
/// and the exceptional groups, 24 rows in all.
pub fn canonical_sweep() -> Vec<(GroupId, Option<usize>)> {
    ["A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"]
        .iter()
        .map(|s| {
            let g: GroupId = s.parse().unwrap();
            let alpha = (g.series() == Series::A).then_some(1);
            (g, alpha)
        })
        .collect()
}

/// Every group of rank ≤ 8 covered by the table, every special root in type A.
pub fn extended_sweep() -> Vec<(GroupId, Option<usize>)> {
    let mut out = Vec::new();
    for g in GroupId::all_up_to_rank(8) {
        match g.series() {
            Series::A => out.extend((0..g.rank()).map(|a| (g, Some(a)))),
            _ => out.push((g, None)),
        }
    }
    let c2: GroupId = "C2".parse().unwrap();
    out.push((c2, None));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowReport {
    pub group: String,
    /// 1-based special root.
    pub alpha: usize,
    pub k: i64,
    pub curve: CurveKind,
    pub expr: String,
    pub rank: usize,
    pub expected_rank: usize,
    pub degree: i64,
    pub expected_degree: i64,
    pub tabulated_i_k: usize,
    pub twists: Vec<i64>,
    pub expected_twists: Vec<i64>,
    pub h0: usize,
    pub expected_h0: usize,
    pub h1: i64,
    /// `h^0` of every alternative printed form agrees with the main one.
    pub forms_agree: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumReport {
    pub group: String,
    pub alpha: usize,
    pub curve: CurveKind,
    pub sum_h1: i64,
    pub expected: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<RowReport>,
    pub sums: Vec<SumReport>,
}

impl Table1Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass) && self.sums.iter().all(|s| s.pass)
    }
}

fn is_e8_cuspidal(g: GroupId, curve: CurveKind) -> bool {
    g.series() == Series::E && g.rank() == 8 && curve == CurveKind::Cuspidal
}

fn check_row(rs: &RootSystem, row: &Table1Row, curve: CurveKind) -> RowReport {
    let v = row.bundle(curve);
    let coh = cohomology(&v);
    let mut twists = v.twists().to_vec();
    twists.sort_unstable();
    let expected_twists = rs
        .pullback_degree_multiset(row.alpha, row.k)
        .expect("row level is populated");
    let expected_rank = rs.uk_dimension(row.alpha, row.k);
    let expected_degree = -(rs.i_of_k(row.k) as i64);
    let expected_h0 = usize::from(is_e8_cuspidal(row.group, curve) && row.k == 1);
    let forms_agree = row.forms[1..].iter().all(|f| {
        let alt = f
            .evaluate(curve)
            .expect("table expressions are well formed");
        let mut alt_twists = alt.twists().to_vec();
        alt_twists.sort_unstable();
        alt_twists == twists && cohomology(&alt) == coh
    });
    let pass = v.rank() == expected_rank
        && v.degree() == expected_degree
        && row.i_k as i64 == -expected_degree
        && twists == expected_twists
        && coh.h0 == expected_h0
        && forms_agree;
    RowReport {
        group: row.group.to_string(),
        alpha: row.alpha + 1,
        k: row.k,
        curve,
        expr: row.expr().to_string(),
        rank: v.rank(),
        expected_rank,
        degree: v.degree(),
        expected_degree,
        tabulated_i_k: row.i_k,
        twists,
        expected_twists,
        h0: coh.h0,
        expected_h0,
        h1: coh.h1,
        forms_agree,
        pass,
    }
}

/// Checks every row of the given groups on one curve: rank, degree, pullback
/// splitting and `h^0`, plus the per-group sum of `h^1`.
pub fn verify_table1(
    curve: CurveKind,
    groups: &[(GroupId, Option<usize>)],
) -> Result<Table1Report, Table1Error> {
    let mut report = Table1Report::default();
    for &(g, alpha) in groups {
        let rs = build_root_system(g);
        let rows = table1_rows(g, alpha)?;
        let mut sum = 0;
        for row in &rows {
            let r = check_row(&rs, row, curve);
            sum += r.h1;
            report.rows.push(r);
        }
        let expected = if is_e8_cuspidal(g, curve) {
            10
        } else {
            g.rank() as i64 + 1
        };
        report.sums.push(SumReport {
            group: g.to_string(),
            alpha: rows[0].alpha + 1,
            curve,
            sum_h1: sum,
            expected,
            pass: sum == expected,
        });
    }
    Ok(report)
}
