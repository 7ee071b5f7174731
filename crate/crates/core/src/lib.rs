//! Canonical forms and recursive sequence tables for PSL₂(q).
//!
//! The crate builds, over any prime-power field GF(p^κ) up to 2^20 elements:
//!
//! - exact field arithmetic with a deterministic element encoding ([`gf`]);
//! - projective 2×2 matrices with the generators u(x), h(y), s ([`psl2`]);
//! - the parameter pair (a, b) and the recursive sequences a_k, b_ℓ, α_r,
//!   β_r, γ_r they induce ([`seq`]);
//! - the triangular-coset canonical form and the power-word canonical form
//!   of group elements, with conversions in both directions ([`decomp`]);
//! - exhaustive verification suites with counterexample reporting ([`verify`]).
//!
//! Heavy scans run data-parallel under the default `parallel` feature and
//! fall back to sequential loops without it.

pub mod decomp;
pub mod error;
pub mod exec;
pub mod gf;
pub mod psl2;
pub mod report;
pub mod seq;
pub mod verify;

pub use decomp::{BnForm, OgsForm};
pub use error::Error;
pub use gf::{Field, FieldElement, FieldParams};
pub use psl2::{gen_h, gen_s, gen_u, sl2_order_of_us, ProjMatrix};
pub use report::{Check, CheckReport, Counterexample};
pub use seq::{OgsParams, SeqTables};
pub use verify::{run_suite, run_suite_seq, Suite};
