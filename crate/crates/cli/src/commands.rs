//! One function per subcommand, each producing a [`Report`].

use std::collections::BTreeMap;

use ellipstab::linalg::parse_q;
use ellipstab::modulimeta::e8_affine_data;
use ellipstab::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::report::{braces, join, Builder, Kind, Report};
use crate::{
    AdjointAction, AdjointArgs, BundleArgs, Cli, Command, CurveArg, DatumKind, EtaleArgs,
    ModuliArgs, RootsArgs, Table1Args,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error\n{0}")]
    Expr(String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Table(#[from] Table1Error),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Adjoint(#[from] AdjError),
    #[error(transparent)]
    Moduli(#[from] ModuliError),
    #[error(transparent)]
    Bundle(#[from] CubicError),
}

pub fn run(cli: &Cli, echo: String) -> Result<Report, CliError> {
    let mut b = Builder::new(echo, cli.seed);
    match &cli.command {
        Command::Roots(a) => roots(&mut b, a)?,
        Command::Table1(a) => table1(&mut b, a)?,
        Command::Bundle(a) => bundle(&mut b, a, cli.seed)?,
        Command::Etale(a) => etale(&mut b, a, cli.seed)?,
        Command::Adjoint(a) => adjoint(&mut b, a, cli.seed)?,
        Command::Moduli(a) => moduli(&mut b, a)?,
    }
    Ok(b.finish())
}

fn curves(c: CurveArg) -> Vec<CurveKind> {
    match c {
        CurveArg::Nodal => vec![CurveKind::Nodal],
        CurveArg::Cuspidal => vec![CurveKind::Cuspidal],
        CurveArg::Both => CurveKind::BOTH.to_vec(),
    }
}

fn group(s: &str) -> Result<GroupId, CliError> {
    Ok(s.parse()?)
}

fn int_list(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("malformed integer {x:?} in {s:?}")))
        })
        .collect()
}

fn rational_list(s: &str) -> Result<Vec<Q>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            parse_q(x).ok_or_else(|| CliError::Usage(format!("malformed rational {x:?} in {s:?}")))
        })
        .collect()
}

fn matrix_string(m: &RationalMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| format!("[{}]", join((0..m.cols()).map(|j| q_to_string(&m[(i, j)])))))
        .collect();
    format!("[{}]", rows.join(","))
}

fn roots(b: &mut Builder, a: &RootsArgs) -> Result<(), CliError> {
    let g = group(&a.group)?;
    let rs = build_root_system(g);
    let all = !(a.special || a.comarks || a.casimir || a.minuscule);
    b.query("rank", rs.rank());
    b.query("positive roots", rs.positive_roots().len());
    if all || a.special {
        let sp = rs.special_roots();
        b.query("special roots", braces(sp.iter().map(|s| s.alpha + 1)));
        for s in &sp {
            b.query(
                format!("alpha{} levi blocks", s.alpha + 1),
                braces(&s.levi_blocks),
            );
            b.check(
                format!(
                    "alpha{} coroot of lambda_1 is the sum of simple coroots",
                    s.alpha + 1
                ),
                true,
                rs.lambda1_coroot_identity(s.alpha)?,
                Kind::Oracle,
            );
        }
    }
    if all || a.comarks {
        let comarks = rs.comarks();
        let mut sorted = comarks.clone();
        sorted.sort_unstable();
        b.query("comarks", braces(&sorted));
        b.query("comarks by node (extra node first)", join(&comarks));
        let top = *sorted.last().unwrap();
        let total: usize = (1..=top).map(|k| rs.i_of_k(k)).sum();
        b.check("sum of i(k)", rs.rank() + 1, total, Kind::Reference);
    }
    if all || a.casimir {
        b.query("exponents", braces(rs.exponents()));
        b.query("casimir degrees", braces(rs.casimir_weights()));
        b.check(
            "sum of exponents",
            rs.positive_roots().len() as i64,
            rs.exponents().iter().sum::<i64>(),
            Kind::Oracle,
        );
    }
    if all || a.minuscule {
        let adm = rs.admissible_fundamental_weights();
        let minuscule: Vec<usize> = adm
            .iter()
            .filter(|w| w.minuscule)
            .map(|w| w.delta + 1)
            .collect();
        let quasi: Vec<usize> = adm
            .iter()
            .filter(|w| w.quasi_minuscule)
            .map(|w| w.delta + 1)
            .collect();
        b.query(
            "minuscule",
            if minuscule.is_empty() {
                "none".into()
            } else {
                braces(&minuscule)
            },
        );
        b.query(
            "quasi-minuscule",
            if quasi.is_empty() {
                "none".into()
            } else {
                braces(&quasi)
            },
        );
        for d in minuscule {
            b.query(format!("orbit of weight {d}"), rs.weight_orbit_size(d - 1)?);
        }
    }
    Ok(())
}

fn table1(b: &mut Builder, a: &Table1Args) -> Result<(), CliError> {
    let groups = match &a.group {
        None => {
            if a.alpha.is_some() {
                return Err(CliError::Usage("--alpha needs --group".into()));
            }
            canonical_sweep()
        }
        Some(s) => {
            let g = group(s)?;
            let alpha = match a.alpha {
                Some(0) => return Err(CliError::Usage("--alpha is 1-based".into())),
                Some(i) => Some(i - 1),
                None => canonical_sweep()
                    .into_iter()
                    .find(|(h, _)| *h == g)
                    .and_then(|(_, al)| al),
            };
            vec![(g, alpha)]
        }
    };
    let mut rows = Vec::new();
    let mut sums = Vec::new();
    for curve in curves(a.curve) {
        let report = verify_table1(curve, &groups)?;
        rows.extend(report.rows);
        sums.extend(report.sums);
    }
    rows.sort_by(|x, y| {
        (&x.group, x.k, x.curve.to_string()).cmp(&(&y.group, y.k, y.curve.to_string()))
    });
    for r in &rows {
        let key = format!("{} alpha{} k={} {}", r.group, r.alpha, r.k, r.curve);
        b.check(format!("{key} h0"), r.expected_h0, r.h0, Kind::Reference);
        b.check(format!("{key} rank"), r.expected_rank, r.rank, Kind::Oracle);
        b.check(
            format!("{key} degree"),
            r.expected_degree,
            r.degree,
            Kind::Reference,
        );
        b.check(
            format!("{key} twists"),
            braces(&r.expected_twists),
            braces(&r.twists),
            Kind::Oracle,
        );
        b.check(
            format!("{key} printed forms agree"),
            true,
            r.forms_agree,
            Kind::Oracle,
        );
        let mut row = BTreeMap::new();
        row.insert("group".into(), r.group.clone());
        row.insert("alpha".into(), r.alpha.to_string());
        row.insert("k".into(), r.k.to_string());
        row.insert("curve".into(), r.curve.to_string());
        row.insert("expr".into(), r.expr.clone());
        row.insert("rank".into(), r.rank.to_string());
        row.insert("degree".into(), r.degree.to_string());
        row.insert("h0".into(), r.h0.to_string());
        row.insert("h1".into(), r.h1.to_string());
        row.insert("twists".into(), braces(&r.twists));
        b.row(row);
    }
    sums.sort_by(|x, y| (&x.group, x.curve.to_string()).cmp(&(&y.group, y.curve.to_string())));
    for s in &sums {
        b.check(
            format!("{} {} sum of h1", s.group, s.curve),
            s.expected,
            s.sum_h1,
            Kind::Reference,
        );
    }
    Ok(())
}

fn bundle(b: &mut Builder, a: &BundleArgs, seed: u64) -> Result<(), CliError> {
    let e = parse(&a.expr).map_err(|err| CliError::Expr(err.render(&a.expr)))?;
    let all = !(a.h0 || a.h1 || a.deg || a.unstable);
    b.query("expression", &e);
    for curve in curves(a.curve) {
        let v = e.evaluate(curve)?;
        let c = cohomology(&v);
        if all {
            b.query(format!("{curve} rank"), v.rank());
            b.query(format!("{curve} pullback twists"), braces(v.twists()));
        }
        if all || a.deg {
            b.query(format!("{curve} deg"), v.degree());
        }
        if all || a.h0 {
            b.query(format!("{curve} h0"), c.h0);
        }
        if all || a.h1 {
            b.query(format!("{curve} h1"), c.h1);
            b.check(
                format!("{curve} h1 by duality"),
                c.h1,
                h1_serre(&v) as i64,
                Kind::Oracle,
            );
        }
        if a.unstable {
            b.query(format!("{curve} unstable"), is_unstable_deg0(&v, seed)?);
        }
    }
    Ok(())
}

fn etale(b: &mut Builder, a: &EtaleArgs, seed: u64) -> Result<(), CliError> {
    let d = MultiDegree::new(int_list(&a.degrees)?)?;
    let n = d.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gluings = match &a.gluings {
        Some(s) => rational_list(s)?,
        None => (0..n)
            .map(|_| loop {
                let x = Q::new(rng.gen_range(-50..=50).into(), rng.gen_range(1..=50).into());
                if x != Q::from_integer(0.into()) {
                    break x;
                }
            })
            .collect(),
    };
    b.query("multidegree", braces(d.degrees()));
    b.query("gluings", join(gluings.iter().map(q_to_string)));
    let v = pushforward_bundle(&d, &gluings)?;
    let (label, combinatorial, bundle) = match a.wedge {
        None => ("pushforward".to_string(), is_semistable(&d)?, v),
        Some(k) => {
            let ss = wedge_is_semistable(&d, k)?;
            for c in wedge_cycles(&d, k)? {
                b.query(
                    format!("wedge {k} cycle of length {}", c.members.len()),
                    braces(&c.degrees),
                );
            }
            (format!("wedge {k}"), ss, v.wedge(k))
        }
    };
    if a.wedge.is_none() {
        b.query("strongly indecomposable", is_strongly_indecomposable(&d)?);
    }
    b.query(
        label.clone(),
        if combinatorial {
            "semistable"
        } else {
            "unstable"
        },
    );
    b.check(
        format!("{label} bundle test agrees"),
        combinatorial,
        !is_unstable_deg0(&bundle, seed)?,
        Kind::Oracle,
    );
    Ok(())
}

fn invariant_checks(b: &mut Builder, datum: &Datum, c: &InvariantVector) {
    let (computed, regular) = match datum {
        Datum::Cuspidal(x) => (invariants_cuspidal(x), is_regular_cuspidal(x)),
        Datum::Nodal(g) => (invariants_nodal(g), is_regular_nodal(g)),
    };
    b.check(
        "invariants of section",
        join(c.coeffs().iter().map(q_to_string)),
        join(computed.coeffs().iter().map(q_to_string)),
        Kind::Oracle,
    );
    b.check("regular", true, regular, Kind::Oracle);
    b.query("h0 of associated bundle", h0(&bundle_from_datum(datum)));
}

fn check_length(n: usize, got: usize, want: usize) -> Result<(), CliError> {
    if got != want {
        return Err(CliError::Usage(format!(
            "n = {n} needs {want} invariants, got {got}"
        )));
    }
    Ok(())
}

fn adjoint(b: &mut Builder, a: &AdjointArgs, seed: u64) -> Result<(), CliError> {
    match &a.action {
        AdjointAction::Kostant { n, invariants } => {
            let rest = rational_list(invariants)?;
            check_length(*n, rest.len(), n.saturating_sub(1))?;
            let c = InvariantVector::traceless(rest);
            let x = kostant_section(&c)?;
            b.query("matrix", matrix_string(x.matrix()));
            invariant_checks(b, &Datum::Cuspidal(x), &c);
        }
        AdjointAction::Steinberg { n, invariants } => {
            let head = rational_list(invariants)?;
            check_length(*n, head.len(), n.saturating_sub(1))?;
            let c = InvariantVector::unimodular(head);
            let g = steinberg_section(&c)?;
            b.query("matrix", matrix_string(g.matrix()));
            invariant_checks(b, &Datum::Nodal(g), &c);
        }
        AdjointAction::Invariants { matrix, kind } => {
            let rows: Vec<Vec<Q>> = matrix
                .split(';')
                .map(rational_list)
                .collect::<Result<_, _>>()?;
            if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
                return Err(CliError::Usage(
                    "matrix must be square, rows separated by ';'".into(),
                ));
            }
            let m = RationalMatrix::from_rows(rows);
            let datum = match kind {
                DatumKind::Cuspidal => Datum::Cuspidal(CuspidalDatum::new(m)?),
                DatumKind::Nodal => Datum::Nodal(NodalDatum::new(m)?),
            };
            let c = datum.invariants();
            b.query("invariants", join(c.coeffs().iter().map(q_to_string)));
            let regular = match &datum {
                Datum::Cuspidal(x) => is_regular_cuspidal(x),
                Datum::Nodal(g) => is_regular_nodal(g),
            };
            b.query("regular", regular);
        }
        AdjointAction::Check { n, trials } => {
            if *n < 2 {
                return Err(CliError::Usage("--n must be at least 2".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rq = |rng: &mut ChaCha8Rng| {
                Q::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into())
            };
            let (mut round, mut scaled) = (0, 0);
            for _ in 0..*trials {
                let c = InvariantVector::traceless((2..=*n).map(|_| rq(&mut rng)).collect());
                let x = kostant_section(&c)?;
                round += usize::from(invariants_cuspidal(&x) == c && is_regular_cuspidal(&x));
                let u = InvariantVector::unimodular((1..*n).map(|_| rq(&mut rng)).collect());
                let g = steinberg_section(&u)?;
                round += usize::from(invariants_nodal(&g) == u && is_regular_nodal(&g));
                let mut m = RationalMatrix::from_fn(*n, *n, |_, _| rq(&mut rng));
                let tr = m.trace();
                m = &m
                    - &RationalMatrix::identity(*n)
                        .scale(&(tr / Q::from_integer((*n as i64).into())));
                let mu = loop {
                    let v = rq(&mut rng);
                    if v != Q::from_integer(0.into()) {
                        break v;
                    }
                };
                scaled += usize::from(scaling_check(&CuspidalDatum::new(m.clone())?, &mu)?);
            }
            b.check("section round trips", 2 * trials, round, Kind::Oracle);
            b.check("scaling checks", *trials, scaled, Kind::Oracle);
        }
    }
    Ok(())
}

fn moduli(b: &mut Builder, a: &ModuliArgs) -> Result<(), CliError> {
    let g = group(&a.group)?;
    let all = !(a.affine || a.pairing || a.weights || a.conformal.is_some());
    let is_e8 = g.series() == Series::E && g.rank() == 8;
    if all || a.weights {
        let w = wp_weights(g);
        b.query("weights", braces(&w));
        b.query("unique extension", admits_unique_extension(&w)?);
    }
    if all || a.pairing {
        match casimir_pairing(g) {
            Ok(dec) => b.query(
                "pairs (weight, degree)",
                join(dec.pairs.iter().map(|(w, e)| format!("({w},{e})"))),
            ),
            Err(ModuliError::E8Pairing) if all => {
                b.query("pairs (weight, degree)", "see --affine");
            }
            Err(e) => return Err(e.into()),
        }
    }
    if a.affine || (all && is_e8) {
        if !is_e8 {
            return Err(CliError::Usage("--affine is only available for E8".into()));
        }
        let data = e8_affine_data();
        b.query(
            "affine pairs (weight, degree)",
            join(data.pairs.iter().map(|(w, e)| format!("({w},{e})"))),
        );
        let t = weighted_tensor(&data, -4, 1)?;
        b.check(
            "degrees after weighted tensor by -4",
            braces([0, -2, -6, -8, -12, -14, -18, -20, -24, -30]),
            braces(t.degrees()),
            Kind::Reference,
        );
    }
    if let Some(blocks) = &a.conformal {
        let blocks = int_list(blocks)?;
        if blocks.iter().any(|&n| n < 1) {
            return Err(CliError::Usage("block sizes must be positive".into()));
        }
        let relations = if a.relation.is_empty() {
            pairwise_relations(blocks.len())
        } else {
            a.relation
                .iter()
                .map(|r| int_list(r))
                .collect::<Result<_, _>>()?
        };
        b.query("blocks", braces(&blocks));
        match conformal_twists(&blocks, &relations)? {
            ConformalOutcome::Solution { twists, values } => {
                b.query("twists", braces(&twists));
                b.query("values", braces(&values));
            }
            ConformalOutcome::NoSolution {
                modulus,
                multipliers,
            } => {
                b.query(
                    "no solution",
                    format!(
                        "residue obstruction mod {modulus}, multipliers {}",
                        braces(&multipliers)
                    ),
                );
            }
            ConformalOutcome::Undetermined => {
                b.query("outcome", "undetermined within search bound")
            }
        }
    }
    Ok(())
}
