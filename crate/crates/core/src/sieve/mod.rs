//! Cyclic actions on finite sets, fixed-point counting, and the drivers that
//! compare fixed points with polynomial evaluations at roots of unity.

mod action;
mod report;
mod theorems;

pub use action::CyclicAction;
pub use report::{realizable_orbit_profile, verify_csp_triple, CspReport, CspRow, Evaluation, OrbitProfile};
pub use theorems::{
    content_product_at_root, cyclotomic_product_closed_form, is_nonnegative_integer, perturb,
    q_binomial_root_closed_form, subset_action, theorem_b_with, verify_product_eval,
    verify_subset_csp, verify_theorem_a, verify_theorem_b, verify_trivial_csp, verify_twist_sign,
    verify_unified_chain, PowerEvaluation, ProductEvalRecord, RectangleSieve, TheoremBRecord,
    TwistSignRecord, UnifiedChainRecord,
};
