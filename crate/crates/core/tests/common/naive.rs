//! Brute-force destabilizer enumeration written directly from the defining
//! inequalities, sharing no code with the library search.

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use tiltstab::rational::{q, qi, Q};
use tiltstab::search::{SearchBounds, SearchOutcome};
use tiltstab::{ChernVector, PolarizedGeometry, TiltParameter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub w: [Q; 3],
    /// `None` for infinite slope.
    pub nu_hat: Option<Q>,
    pub strict: bool,
}

pub struct Setup<'a> {
    pub v: [Q; 3],
    pub alpha_sq: &'a Q,
    pub beta: &'a Q,
    pub denoms: [i64; 3],
    pub rank_bound: i64,
    pub ch2_bound: &'a Q,
    pub quotient_positivity: bool,
}

fn twist(x: &[Q; 3], b: &Q) -> [Q; 3] {
    [
        x[0].clone(),
        &x[1] - b * &x[0],
        &x[2] - b * &x[1] + b * b * &x[0] / qi(2),
    ]
}

fn im(t: &[Q; 3], a: &Q) -> Q {
    &t[2] - a * &t[0] / qi(6)
}

fn disc(x: &[Q; 3]) -> Q {
    &x[1] * &x[1] - qi(2) * &x[0] * &x[2]
}

pub fn enumerate(s: &Setup) -> Vec<Hit> {
    let tv = twist(&s.v, s.beta);
    let nu_v = im(&tv, s.alpha_sq) / &tv[1];
    let [q0, q1, q2] = s.denoms;
    let w1_span = (s.rank_bound * s.beta.abs().ceil().to_integer().try_into().unwrap_or(0i64)
        + tv[1].abs().ceil().to_integer().try_into().unwrap_or(0i64)
        + 2)
        * q1;
    let l_max: i64 = (s.ch2_bound * qi(q2)).floor().to_integer().try_into().unwrap();
    let mut out = Vec::new();
    for i in -s.rank_bound * q0..=s.rank_bound * q0 {
        for j in -w1_span..=w1_span {
            for l in -l_max..=l_max {
                let w = [q(i, q0), q(j, q1), q(l, q2)];
                let u = [&s.v[0] - &w[0], &s.v[1] - &w[1], &s.v[2] - &w[2]];
                if w.iter().all(Zero::is_zero) || u.iter().all(Zero::is_zero) {
                    continue;
                }
                let (tw, tu) = (twist(&w, s.beta), twist(&u, s.beta));
                if tw[1].is_negative() || tu[1].is_negative() {
                    continue;
                }
                if tw[1].is_zero() && im(&tw, s.alpha_sq).is_negative() {
                    continue;
                }
                if tu[1].is_zero() && im(&tu, s.alpha_sq).is_negative() {
                    continue;
                }
                if disc(&w).is_negative() {
                    continue;
                }
                if s.quotient_positivity && disc(&u).is_negative() {
                    continue;
                }
                let hit = if tw[1].is_zero() {
                    Hit { w, nu_hat: None, strict: true }
                } else {
                    let nu = im(&tw, s.alpha_sq) / &tw[1];
                    if nu < nu_v {
                        continue;
                    }
                    let strict = nu > nu_v;
                    Hit { w, nu_hat: Some(nu), strict }
                };
                out.push(hit);
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub v: ChernVector,
    pub p: TiltParameter,
    pub geom: PolarizedGeometry,
    pub bounds: SearchBounds,
}

pub fn instance() -> impl Strategy<Value = Instance> {
    (
        -3i64..=3,
        -4i64..=4,
        -8i64..=8,
        1i64..=6,
        (-3i64..=3, 1i64..=3),
        (1i64..=4, 1i64..=3),
        0u32..=4,
        1i64..=4,
    )
        .prop_filter_map("finite slope", |(v0, v1, v2, a, (bn, bd), (dn, dd), r, c)| {
            let beta = q(bn, bd);
            let mut v = ChernVector::new(qi(v0), qi(v1), q(v2, 2), qi(0));
            let t1 = v.twist_by_b(&beta).ch1().clone();
            if t1.is_zero() {
                return None;
            }
            if t1.is_negative() {
                v = -v;
            }
            Some(Instance {
                v,
                p: TiltParameter::new(q(a, 2), beta).unwrap(),
                geom: PolarizedGeometry::new(q(dn, dd)).unwrap(),
                bounds: SearchBounds::new(r, qi(c)).unwrap(),
            })
        })
}

pub fn oracle(inst: &Instance, quotient_positivity: bool) -> Vec<Hit> {
    let [q0, q1, q2, _] = inst.geom.lattice_denoms();
    enumerate(&Setup {
        v: [inst.v.ch0().clone(), inst.v.ch1().clone(), inst.v.ch2().clone()],
        alpha_sq: inst.p.alpha_sq(),
        beta: inst.p.beta(),
        denoms: [q0 as i64, q1 as i64, q2 as i64],
        rank_bound: inst.bounds.rank_bound as i64,
        ch2_bound: &inst.bounds.ch2_bound,
        quotient_positivity,
    })
}

pub fn as_hits(out: &SearchOutcome) -> Vec<Hit> {
    let mut hits: Vec<Hit> = out
        .all()
        .map(|c| Hit {
            w: [c.w.ch0().clone(), c.w.ch1().clone(), c.w.ch2().clone()],
            nu_hat: c.nu_hat_w.finite().cloned(),
            strict: c.strict,
        })
        .collect();
    hits.sort_by(|a, b| a.w.cmp(&b.w));
    hits
}
