//! Exact q-series engine for partition identities and congruences.
//!
//! Everything is exact integer arithmetic on truncated formal power series:
//! no floating point, no modular shortcuts. The crate machine-checks, to any
//! requested order, the classical dissection identities for the ordinary
//! partition function p(n) (Ramanujan, Zuckerman) and for the cubic
//! partition function a(n) (Chan, Xiong), together with the congruence
//! families they imply, such as `a(9n+8) == 0 (mod 27)`.
//!
//! The pieces:
//!
//! * [`series`] — dense truncated power series over big integers: ring
//!   operations, inversion, power substitution, m-dissection;
//! * [`products`] — q-Pochhammer and Euler products, eta-quotient terms
//!   ([`products::ProductSpec`]) and the named theta-style functions;
//! * [`polyring`] — a small graded polynomial ring in four opaque symbols,
//!   used to expand the dissection trinomials symbolically;
//! * [`partitions`] — p(n) and a(n) by independent routes (series inversion,
//!   pentagonal recurrence, counting DP) so checks have a ground truth;
//! * [`identities`] — the registry of verifiable statements and the
//!   verification engine producing structured reports;
//! * [`expr`] — a small expression language (`E(a,b)`, `eta(k)`, `phi(k)`,
//!   `psi(k)`, `P(k)`, `X(k)`, `q^s`, integer arithmetic) shared by the CLI
//!   and the registry;
//! * [`cli`] — the `qcubic` command-line front end.
//!
//! The `examples/` directory has one runnable example per capability; start
//! with `cargo run --example verify_all`.

pub mod cli;
pub mod expr;
pub mod identities;
pub mod partitions;
pub mod polyring;
pub mod products;
pub mod series;

pub use identities::{
    registry, verify, verify_all, verify_cases, IdentityCase, Status, VerificationReport,
};
pub use partitions::{a_series, dp_oracle, p_pentagonal, p_series, PartitionKind, PartitionTable};
pub use polyring::GradedPoly;
pub use products::{euler, eval_product_spec, p_func, phi_neg, pochhammer, psi, x_neg, ProductSpec};
pub use series::{Comparison, SeriesError, TruncatedSeries};
