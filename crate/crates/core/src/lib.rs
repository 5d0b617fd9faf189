//! Exact computations on root systems, on vector bundles over nodal and
//! cuspidal Weierstrass cubics, and on the type-A adjoint quotient.
//!
//! Everything is exact: rationals are arbitrary precision and generic ranks
//! fall back to elimination over `Q(x)` when random evaluations disagree.

pub mod adjquot;
pub mod cubic;
pub mod cyclecover;
pub mod expr;
pub mod linalg;
pub mod modulimeta;
pub mod rootsys;
pub mod table1;

pub use adjquot::{
    bundle_from_datum, invariants_cuspidal, invariants_nodal, is_regular_cuspidal,
    is_regular_nodal, kostant_section, scaling_check, sequivalence_equal, steinberg_section,
    AdjError, CuspidalDatum, Datum, InvariantVector, NodalDatum,
};
pub use cubic::{
    classify_weierstrass, cohomology, generic_twisted_h0, h0, h1, h1_serre, is_unstable_deg0,
    BundleOnCubic, Cohomology, CubicError, CurveKind, Pic0Element, WeierstrassType,
};
pub use cyclecover::{
    is_semistable, is_strongly_indecomposable, pushforward_bundle, sln_wedge_report, wedge_cycles,
    wedge_is_semistable, CycleError, MultiDegree, SlnWedgeReport, WedgeCycle,
};
pub use expr::{evaluate_str, parse, Expr, ExprError, ParseError};
pub use linalg::{parse_q, q_to_string, PolyMatrix, RationalMatrix, Q};
pub use modulimeta::{
    admits_unique_extension, casimir_pairing, conformal_twists, e8_affine_data, pairwise_relations,
    weighted_tensor, wp_weights, ConformalOutcome, ModuliError, WeightedDecomposition,
};
pub use rootsys::{
    build_root_system, AdmissibleWeight, CorootVector, GroupId, RootError, RootSystem, RootVector,
    Series, SpecialRootData, SurgeryReport,
};
pub use table1::{
    canonical_sweep, extended_sweep, table1_bundle, table1_row, verify_table1, Table1Error,
    Table1Report,
};
