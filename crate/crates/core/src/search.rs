//! Enumeration of numerical destabilizer candidates.
//!
//! For a target `v`, a candidate is a lattice character `w = (w0, w1, w2, 0)`
//! that could be the character of a subobject `M` of an object of class `v`
//! in the tilted heart with `nu(M) >= nu(v)`. Every filter is a necessary
//! condition; a surviving candidate is numerical only and says nothing about
//! the existence of an actual subobject. `ch_3` plays no role because `nu`
//! does not depend on it.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chern::{ChernVector, PolarizedGeometry, TiltParameter};
use crate::rational::{self, qi, Q};
use crate::tilt::{self, SlopeValue};
use crate::{Error, Result};

/// Finite box `|w0| <= rank_bound`, `|w2| <= ch2_bound`. The range of `w1`
/// is cut out by `0 <= t_1(w) <= t_1(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub rank_bound: u32,
    #[serde(with = "rational::as_string")]
    pub ch2_bound: Q,
}

impl SearchBounds {
    pub fn new(rank_bound: u32, ch2_bound: Q) -> Result<Self> {
        if ch2_bound.is_negative() {
            return Err(Error::precondition(
                "ch2_bound",
                "finite nonnegative search box",
                format!("got {ch2_bound}"),
            ));
        }
        Ok(Self {
            rank_bound,
            ch2_bound,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Require `Delta_bar(v - w) >= 0` as well. Off by default: only the
    /// first HN factor of a destabilizing sequence is forced to be
    /// semistable, the quotient is not.
    pub quotient_positivity: bool,
    /// Require `Im Z >= 0` for sub and quotient whenever their `t_1`
    /// vanishes, as it does for every object of the heart with `t_1 = 0`.
    pub heart_phase: bool,
    /// Cut the `w2` range of positive-rank subobjects of a shifted line
    /// bundle with the explicit large-volume slope bound. Never changes
    /// the result.
    pub prune_line_bundle_bound: bool,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            quotient_positivity: false,
            heart_phase: true,
            prune_line_bundle_bound: false,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DestabilizerCandidate {
    pub w: ChernVector,
    pub nu_hat_w: SlopeValue,
    /// `nu_hat(w) > nu_hat(v)`.
    pub strict: bool,
    #[serde(with = "rational::as_string")]
    pub sub_delta_bar: Q,
    #[serde(with = "rational::as_string")]
    pub quotient_delta_bar: Q,
    pub quotient_nu_hat: SlopeValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    #[serde(with = "rational::as_string")]
    pub nu_hat_v: Q,
    /// Candidates with `t_1(w) > 0`, sorted by `(w0, w1, w2)`.
    pub finite: Vec<DestabilizerCandidate>,
    /// Candidates with `t_1(w) = 0` (infinite slope), same order.
    pub infinite_slope: Vec<DestabilizerCandidate>,
    /// Lattice points skipped by the slope-bound pruning.
    pub pruned: u64,
}

impl SearchOutcome {
    pub fn strict(&self) -> impl Iterator<Item = &DestabilizerCandidate> {
        self.finite.iter().filter(|c| c.strict)
    }

    pub fn all(&self) -> impl Iterator<Item = &DestabilizerCandidate> {
        self.finite.iter().chain(&self.infinite_slope)
    }
}

/// Runs the search with [`SearchOptions::default`].
pub fn destabilizer_search(
    v: &ChernVector,
    p: &TiltParameter,
    geom: &PolarizedGeometry,
    bounds: &SearchBounds,
) -> Result<SearchOutcome> {
    destabilizer_search_with(v, p, geom, bounds, &SearchOptions::default())
}

fn floor_i64(x: &Q) -> i64 {
    x.floor().to_integer().to_i64().expect("search box fits in i64")
}

fn ceil_i64(x: &Q) -> i64 {
    x.ceil().to_integer().to_i64().expect("search box fits in i64")
}

fn lattice(n: i64, denom: u32) -> Q {
    Q::new(BigInt::from(n), BigInt::from(denom))
}

/// `t_1(E)` when `v = ch(E[1])` for a line bundle `E`, else `None`.
fn line_bundle_shift_degree(v: &ChernVector, beta: &Q) -> Option<Q> {
    let k = -v.ch1();
    let e = ChernVector::line_bundle(&k);
    (v.ch0() == &qi(-1) && v.shift(1).same_up_to_ch3(&e)).then(|| k - beta)
}

struct Ctx<'a> {
    v: &'a ChernVector,
    p: &'a TiltParameter,
    geom: &'a PolarizedGeometry,
    nu_v: Q,
    t1_v: Q,
    opts: &'a SearchOptions,
    prune_bound: Option<Q>,
    w2_limit: i64,
}

impl Ctx<'_> {
    fn slice(&self, i0: i64) -> (Vec<DestabilizerCandidate>, u64) {
        let [q0, q1, q2, _] = self.geom.lattice_denoms();
        let beta = self.p.beta();
        let w0 = lattice(i0, q0);
        let shift = beta * &w0;
        let lo = ceil_i64(&(&shift * qi(q1 as i64)));
        let hi = floor_i64(&((&shift + &self.t1_v) * qi(q1 as i64)));
        let mut out = Vec::new();
        let mut pruned = 0u64;
        for i1 in lo..=hi {
            let w1 = lattice(i1, q1);
            let t1_w = &w1 - &shift;
            let mut l_max = self.w2_limit;
            if let Some(bound) = &self.prune_bound {
                if w0.is_positive() && t1_w.is_positive() {
                    // nu_hat(w) <= bound  <=>  w2 <= bound t1 + beta w1 - beta^2 w0/2 + alpha^2 w0/6
                    let cap = bound * &t1_w + beta * &w1 - beta * beta * &w0 / qi(2)
                        + self.p.alpha_sq() * &w0 / qi(6);
                    let cap = floor_i64(&(cap * qi(q2 as i64)));
                    if cap < l_max {
                        pruned += (l_max - cap.max(-self.w2_limit - 1)) as u64;
                        l_max = cap;
                    }
                }
            }
            for i2 in -self.w2_limit..=l_max {
                let w = ChernVector::new(w0.clone(), w1.clone(), lattice(i2, q2), Q::zero());
                if let Some(c) = self.check(w) {
                    out.push(c);
                }
            }
        }
        (out, pruned)
    }

    fn check(&self, w: ChernVector) -> Option<DestabilizerCandidate> {
        if w.is_zero() || w.same_up_to_ch3(self.v) {
            return None;
        }
        let p = self.p;
        let u = &self.v.with_ch3(Q::zero()) - &w;
        let t1_w = w.twist_by_b(p.beta()).ch1().clone();
        let t1_u = &self.t1_v - &t1_w;
        if self.opts.heart_phase {
            if t1_w.is_zero() && tilt::tilt_numerator(&w, p).is_negative() {
                return None;
            }
            if t1_u.is_zero() && tilt::tilt_numerator(&u, p).is_negative() {
                return None;
            }
        }
        let nu_hat_w = tilt::slope_nu_hat(&w, p).ok()?;
        let strict = match &nu_hat_w {
            SlopeValue::Infinite => true,
            SlopeValue::Finite(x) if x < &self.nu_v => return None,
            SlopeValue::Finite(x) => x > &self.nu_v,
        };
        let sub_delta_bar = tilt::discriminant_delta_bar(&w, p, self.geom);
        if sub_delta_bar.is_negative() {
            return None;
        }
        let quotient_delta_bar = tilt::discriminant_delta_bar(&u, p, self.geom);
        if self.opts.quotient_positivity && quotient_delta_bar.is_negative() {
            return None;
        }
        let quotient_nu_hat = tilt::slope_nu_hat(&u, p).ok()?;
        Some(DestabilizerCandidate {
            w,
            nu_hat_w,
            strict,
            sub_delta_bar,
            quotient_delta_bar,
            quotient_nu_hat,
        })
    }
}

/// Enumerates all lattice `w = (w0, w1, w2, 0)` in the box with
/// `0 <= t_1(w) <= t_1(v)`, `Delta_bar(w) >= 0` and `nu_hat(w) >=
/// nu_hat(v)`, excluding `0` and `v` itself, subject to `opts`.
///
/// The box is split into `w0` slices, processed by `opts.workers` threads;
/// the output order does not depend on the worker count.
pub fn destabilizer_search_with(
    v: &ChernVector,
    p: &TiltParameter,
    geom: &PolarizedGeometry,
    bounds: &SearchBounds,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    let nu_v = match tilt::slope_nu_hat(v, p)? {
        SlopeValue::Finite(x) => x,
        SlopeValue::Infinite => {
            return Err(Error::precondition(
                "v",
                "finite tilt slope (omega^2 tch_1 != 0)",
                format!("t_1(v) = 0 for v = {v}"),
            ))
        }
    };
    let t1_v = v.twist_by_b(p.beta()).ch1().clone();
    let [q0, _, q2, _] = geom.lattice_denoms();
    let prune_bound = if opts.prune_line_bundle_bound {
        line_bundle_shift_degree(v, p.beta())
            .filter(|delta| delta.is_negative())
            .map(|delta| tilt::destabilizer_slope_bound(&delta))
            .transpose()?
    } else {
        None
    };
    let ctx = Ctx {
        v,
        p,
        geom,
        nu_v: nu_v.clone(),
        t1_v,
        opts,
        prune_bound,
        w2_limit: floor_i64(&(&bounds.ch2_bound * qi(q2 as i64))),
    };
    let r0 = bounds.rank_bound as i64 * q0 as i64;
    let slices: Vec<i64> = (-r0..=r0).collect();
    let run = || -> Vec<(Vec<DestabilizerCandidate>, u64)> {
        slices.par_iter().map(|&i0| ctx.slice(i0)).collect()
    };
    let parts = if opts.workers <= 1 {
        slices.iter().map(|&i0| ctx.slice(i0)).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run)
    };
    let mut finite = Vec::new();
    let mut infinite_slope = Vec::new();
    let mut pruned = 0;
    for (cands, n) in parts {
        pruned += n;
        for c in cands {
            if c.nu_hat_w.is_infinite() {
                infinite_slope.push(c);
            } else {
                finite.push(c);
            }
        }
    }
    finite.sort_by(|a, b| a.w.cmp(&b.w));
    infinite_slope.sort_by(|a, b| a.w.cmp(&b.w));
    Ok(SearchOutcome {
        nu_hat_v: nu_v,
        finite,
        infinite_slope,
        pruned,
    })
}

/// Candidates sorted by `omega^2 tch_1(M)` in units of the minimal positive
/// value `c`, for a target with `omega^2 tch_1 = 2c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCSplit {
    #[serde(with = "rational::as_string")]
    pub c: Q,
    /// `(2c, 0)`: the quotient has infinite slope and cannot destabilize.
    pub sub_full: Vec<DestabilizerCandidate>,
    /// `(c, c)`: the only case that needs an argument.
    pub balanced: Vec<DestabilizerCandidate>,
    /// `(0, 2c)`: the subobject has infinite slope.
    pub sub_zero: Vec<DestabilizerCandidate>,
    /// Candidates whose degree is not a multiple of `c`; empty whenever the
    /// lattice is `Pic = Z H`.
    pub unclassified: Vec<DestabilizerCandidate>,
}

pub fn case_split_2c(
    v: &ChernVector,
    p: &TiltParameter,
    geom: &PolarizedGeometry,
    bounds: &SearchBounds,
) -> Result<TwoCSplit> {
    let c = tilt::compute_c(p, geom);
    let degree = |w: &ChernVector| p.alpha_sq() * geom.degree() * w.twist_by_b(p.beta()).ch1();
    if degree(v) != qi(2) * &c {
        return Err(Error::precondition(
            "v",
            "omega^2 tch_1(v) = 2c",
            format!("omega^2 tch_1 = {} but c = {c}", degree(v)),
        ));
    }
    let outcome = destabilizer_search(v, p, geom, bounds)?;
    let mut split = TwoCSplit {
        c: c.clone(),
        sub_full: Vec::new(),
        balanced: Vec::new(),
        sub_zero: Vec::new(),
        unclassified: Vec::new(),
    };
    for cand in outcome.all() {
        let d = degree(&cand.w);
        let bucket = if d.is_zero() {
            &mut split.sub_zero
        } else if d == c {
            &mut split.balanced
        } else if d == qi(2) * &c {
            &mut split.sub_full
        } else {
            &mut split.unclassified
        };
        bucket.push(cand.clone());
    }
    Ok(split)
}
