//! Numerical walls: the locus in the `(beta, A = alpha^2)` half-plane where
//! two characters have the same tilt slope.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chern::ChernVector;
use crate::rational::{self, qi, Q};
use crate::{Error, Result};

/// `a_coef * A + beta_sq * beta^2 + beta * beta + constant = 0`, with
/// integer coefficients of content 1 and the first nonzero coefficient in
/// the order `(a_coef, beta_sq, beta, constant)` positive.
///
/// The polynomial is `6 [t_2(v) t_1(w) - t_2(w) t_1(v)] - A (v_0 t_1(w) -
/// w_0 t_1(v))` up to that normalization; the terms cubic in `beta` cancel.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WallEquation {
    #[serde(with = "bigint_string")]
    pub a_coef: BigInt,
    #[serde(with = "bigint_string")]
    pub beta_sq: BigInt,
    #[serde(with = "bigint_string")]
    pub beta: BigInt,
    #[serde(with = "bigint_string")]
    pub constant: BigInt,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

impl WallEquation {
    pub fn evaluate(&self, beta: &Q, alpha_sq: &Q) -> Q {
        let c = |x: &BigInt| Q::from_integer(x.clone());
        c(&self.a_coef) * alpha_sq + c(&self.beta_sq) * beta * beta + c(&self.beta) * beta + c(&self.constant)
    }

    /// The image under `beta -> -beta`, renormalized.
    pub fn reflect(&self) -> Self {
        normalize([
            Q::from_integer(self.a_coef.clone()),
            Q::from_integer(self.beta_sq.clone()),
            Q::from_integer(-self.beta.clone()),
            Q::from_integer(self.constant.clone()),
        ])
        .expect("reflection of a nonzero polynomial is nonzero")
    }

    /// `A` on the wall above `beta`, when the wall is not vertical.
    pub fn alpha_sq_at(&self, beta: &Q) -> Option<Q> {
        if self.a_coef.is_zero() {
            return None;
        }
        Some(-self.evaluate(beta, &Q::zero()) / Q::from_integer(self.a_coef.clone()))
    }
}

impl std::fmt::Display for WallEquation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut out = String::new();
        for (c, m) in [
            (&self.a_coef, "A"),
            (&self.beta_sq, "beta^2"),
            (&self.beta, "beta"),
            (&self.constant, ""),
        ] {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            if m.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(m);
        }
        write!(f, "{out} = 0")
    }
}

fn normalize(coefs: [Q; 4]) -> Result<WallEquation> {
    if coefs.iter().all(Zero::is_zero) {
        return Err(Error::precondition(
            "w",
            "w not proportional to v",
            "the two characters have equal slope at every parameter",
        ));
    }
    let lcm = coefs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coefs
        .iter()
        .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        g = -g;
    }
    let [a_coef, beta_sq, beta, constant]: [BigInt; 4] = ints
        .into_iter()
        .map(|x| x / &g)
        .collect::<Vec<_>>()
        .try_into()
        .expect("four coefficients");
    Ok(WallEquation {
        a_coef,
        beta_sq,
        beta,
        constant,
    })
}

/// The normalized equation of `nu_hat(v) = nu_hat(w)` as a polynomial in
/// `(beta, A)`.
pub fn wall_equation(v: &ChernVector, w: &ChernVector) -> Result<WallEquation> {
    let (v0, v1, v2) = (v.ch0(), v.ch1(), v.ch2());
    let (w0, w1, w2) = (w.ch0(), w.ch1(), w.ch2());
    let cross01 = w0 * v1 - v0 * w1;
    normalize([
        &cross01 / qi(6),
        &cross01 / qi(2),
        w2 * v0 - v2 * w0,
        v2 * w1 - w2 * v1,
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallPoint {
    #[serde(with = "rational::as_string")]
    pub beta: Q,
    #[serde(with = "rational::as_string")]
    pub alpha_sq: Q,
}

/// A root in `beta` of a wall that does not depend on `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum VerticalRoot {
    Exact {
        #[serde(with = "rational::as_string")]
        beta: Q,
    },
    /// The unique root lies strictly between `lo` and `hi`.
    Interval {
        #[serde(with = "rational::as_string")]
        lo: Q,
        #[serde(with = "rational::as_string")]
        hi: Q,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallSample {
    pub points: Vec<WallPoint>,
    /// Only populated for walls with `a_coef = 0`; such a wall is a union of
    /// vertical lines and carries no `A` values.
    pub vertical: Vec<VerticalRoot>,
}

/// Samples the wall at `count` evenly spaced `beta` in `[lo, hi]`, keeping
/// points with `A > 0`. `count = 1` samples the midpoint.
pub fn wall_sample(eq: &WallEquation, lo: &Q, hi: &Q, count: u32) -> Result<WallSample> {
    if count == 0 {
        return Err(Error::precondition("count", "count >= 1", "got 0"));
    }
    if lo > hi {
        return Err(Error::precondition(
            "beta_range",
            "lo <= hi",
            format!("[{lo}, {hi}]"),
        ));
    }
    if eq.a_coef.is_zero() {
        return Ok(WallSample {
            points: Vec::new(),
            vertical: vertical_roots(eq),
        });
    }
    let betas: Vec<Q> = if count == 1 {
        vec![(lo + hi) / qi(2)]
    } else {
        let step = (hi - lo) / qi(count as i64 - 1);
        (0..count).map(|i| lo + &step * qi(i as i64)).collect()
    };
    let points = betas
        .into_iter()
        .filter_map(|beta| {
            let a = eq.alpha_sq_at(&beta)?;
            a.is_positive().then_some(WallPoint { beta, alpha_sq: a })
        })
        .collect();
    Ok(WallSample {
        points,
        vertical: Vec::new(),
    })
}

fn vertical_roots(eq: &WallEquation) -> Vec<VerticalRoot> {
    let (a, b, c) = (&eq.beta_sq, &eq.beta, &eq.constant);
    if a.is_zero() {
        return if b.is_zero() {
            Vec::new()
        } else {
            vec![VerticalRoot::Exact {
                beta: Q::new(-c.clone(), b.clone()),
            }]
        };
    }
    let disc: BigInt = b * b - BigInt::from(4) * a * c;
    if disc.is_negative() {
        return Vec::new();
    }
    let two_a = BigInt::from(2) * a;
    let root = |s: &BigInt| Q::new(-b + s, two_a.clone());
    let s = disc.sqrt();
    let mut out: Vec<VerticalRoot> = if &s * &s == disc {
        let mut r = vec![root(&-&s), root(&s)];
        r.sort();
        r.dedup();
        r.into_iter().map(|beta| VerticalRoot::Exact { beta }).collect()
    } else {
        // s < sqrt(disc) < s + 1
        let s1: BigInt = &s + BigInt::one();
        [(-&s1, -&s), (s.clone(), s1.clone())]
            .into_iter()
            .map(|(x, y)| {
                let (p, q) = (root(&x), root(&y));
                let (lo, hi) = if p < q { (p, q) } else { (q, p) };
                VerticalRoot::Interval { lo, hi }
            })
            .collect()
    };
    out.sort_by(|x, y| key(x).cmp(key(y)));
    out
}

fn key(r: &VerticalRoot) -> &Q {
    match r {
        VerticalRoot::Exact { beta } => beta,
        VerticalRoot::Interval { lo, .. } => lo,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::TiltParameter;
    use crate::rational::q;
    use crate::tilt::slope_nu_hat;

    fn eq(a: i64, b2: i64, b: i64, c: i64) -> WallEquation {
        WallEquation {
            a_coef: a.into(),
            beta_sq: b2.into(),
            beta: b.into(),
            constant: c.into(),
        }
    }

    #[test]
    fn rank_one_wall() {
        let v = ChernVector::from_ints([1, 0, 0, 0]);
        let w = ChernVector::from_ratios([(1, 1), (1, 1), (1, 2), (0, 1)]);
        let e = wall_equation(&v, &w).unwrap();
        assert_eq!(e, eq(1, 3, -3, 0));
        assert_eq!(e.to_string(), "A + 3beta^2 - 3beta = 0");
        let w_ref = ChernVector::from_ratios([(1, 1), (-1, 1), (1, 2), (0, 1)]);
        assert_eq!(wall_equation(&v, &w_ref).unwrap(), e.reflect());
        assert!(wall_equation(&v, &v.scale(&qi(2))).is_err());
    }

    #[test]
    fn samples() {
        let e = eq(1, 3, -3, 0);
        let s = wall_sample(&e, &qi(0), &qi(1), 5).unwrap();
        let got: Vec<_> = s.points.iter().map(|p| (p.beta.clone(), p.alpha_sq.clone())).collect();
        assert_eq!(
            got,
            vec![(q(1, 4), q(9, 16)), (q(1, 2), q(3, 4)), (q(3, 4), q(9, 16))]
        );
        let mid = wall_sample(&e, &q(1, 2), &q(1, 2), 1).unwrap();
        assert_eq!(mid.points, vec![WallPoint { beta: q(1, 2), alpha_sq: q(3, 4) }]);
        assert!(wall_sample(&e, &qi(2), &qi(3), 4).unwrap().points.is_empty());
        assert!(wall_sample(&e, &qi(0), &qi(1), 0).is_err());
    }

    #[test]
    fn sampled_points_have_equal_slope() {
        let v = ChernVector::from_ints([1, 0, 0, 0]);
        let w = ChernVector::from_ratios([(1, 1), (1, 1), (1, 2), (0, 1)]);
        let e = wall_equation(&v, &w).unwrap();
        for pt in wall_sample(&e, &qi(0), &qi(1), 9).unwrap().points {
            let p = TiltParameter::new(pt.alpha_sq, pt.beta).unwrap();
            assert_eq!(slope_nu_hat(&v, &p).unwrap(), slope_nu_hat(&w, &p).unwrap());
        }
    }

    #[test]
    fn vertical_walls() {
        // 2 beta^2 - 1: irrational roots
        let r = vertical_roots(&eq(0, 2, 0, -1));
        assert_eq!(r.len(), 2);
        for root in &r {
            let VerticalRoot::Interval { lo, hi } = root else { panic!() };
            let f = |x: &Q| qi(2) * x * x - qi(1);
            assert!(f(lo).is_positive() != f(hi).is_positive());
        }
        assert_eq!(
            vertical_roots(&eq(0, 1, -1, 0)),
            vec![VerticalRoot::Exact { beta: qi(0) }, VerticalRoot::Exact { beta: qi(1) }]
        );
        assert_eq!(vertical_roots(&eq(0, 0, 2, -1)), vec![VerticalRoot::Exact { beta: q(1, 2) }]);
    }
}
