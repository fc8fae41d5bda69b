//! Configurations of four or five cusps on a rational plane curve.

mod audit;
mod config;
mod feasible;
mod filters;
mod poly;
mod search;

pub use audit::{audit_case, AuditCase, AuditReport, BmyCheck, GroupInductance};
pub use config::{degree_of, p2_of, Configuration, DerivedGlobals};
pub use feasible::{feasible_lambda_tuples, ind_lower_bound};
pub use filters::{hurwitz_projection_filter, matsuoka_sakai_filter, Check, FilterVerdict, Relation};
pub use poly::{
    check_parametrization, quintic, verify_perturbed_quintic, verify_quintic, IntPolynomial, Monomial, QuinticCheck,
    QUINTIC, QUINTIC_PARAMETRIZATION,
};
pub use search::{
    passes_global, run_classification, CaseReport, Classification, ClassifyOptions, FilterLabels, TupleEntry, Witnesses,
};
