//! The assume-guarantee rule engine: rule application, certificates, and
//! monolithic cross-checks of compositional conclusions.

mod apply;
mod certificate;
mod crosscheck;
mod monotone;

pub use apply::{
    apply_asymmetric, apply_asymmetric_n, apply_circular, apply_conjunction,
    apply_interleaving, apply_monotonicity, apply_reward_sum, RuleVariant,
};
pub use certificate::{CertStatus, Certificate, Conclusion, Premise, SideCondition};
pub use crosscheck::{cross_check, Agreement, AgreementReport};
pub use monotone::{check_monotone, Direction, MonotoneTarget};
