//! Exact tilt-stability arithmetic on polarized threefolds of Picard rank one.
//!
//! Every Chern character is stored in reduced form `(v0, v1, v2, v3)` with
//! `ch_i = v_i H^i`, where `H` generates the Picard group and `D = H^3`.
//! A tilt parameter is the pair `(alpha_sq, beta)` encoding `omega = alpha H`
//! and `B = beta H`. All computations are carried out in exact rational
//! arithmetic; odd powers of `alpha` are never evaluated; quantities that
//! carry them are either rescaled (see [`tilt::slope_nu_hat`]) or kept as
//! [`tilt::AlphaTerm`] values until the powers pair up.
//!
//! Modules:
//!
//! * [`chern`]: Chern vectors, twists, duals, shifts and the standard objects
//!   (line bundles, ideal and structure sheaves of curves).
//! * [`tilt`]: slopes, central charge, discriminants, BMT-type inequalities.
//! * [`criteria`]: stability criteria for line-bundle shifts, sheaves with
//!   twice-minimal `omega^2 ch_1`, twisted ideal sheaves of curves, and a
//!   family of tilt-unstable rank-three reflexive sheaves on `P^3`.
//! * [`search`] and [`wall`]: numerical destabilizer candidates and
//!   pseudo-wall equations in the `(beta, alpha_sq)` plane.
//! * [`cli`]: job specification, report envelope and serialization used by
//!   the `tiltstab` binary.

pub mod chern;
pub mod cli;
pub mod criteria;
mod error;
pub mod rational;
pub mod search;
pub mod tilt;
pub mod wall;

pub use chern::{genus_to_ch3, ChernVector, CurveData, PolarizedGeometry, TiltParameter};
pub use error::{Error, Result};
pub use rational::{q, qi, Q};
pub use tilt::{BmtForm, CentralCharge, SlopeValue};
