//! Slope functions, central charge and discriminants at a tilt parameter.
//!
//! With `omega = alpha H` the tilt slope `nu` carries an odd power of
//! `alpha`, which is irrational in general. Every comparison of `nu` values
//! at a common parameter shares the same positive factor `1/alpha`, so this
//! module works with the rescaled slope `nu_hat = alpha * nu`, a rational
//! function of `alpha^2` with the same sign and the same order.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chern::{ChernVector, PolarizedGeometry, TiltParameter};
use crate::rational::{self, qi, Q};
use crate::{Error, Result};

/// A slope value: a rational, or `+inf`, which dominates every rational.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlopeValue {
    Finite(Q),
    Infinite,
}

impl SlopeValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, SlopeValue::Infinite)
    }

    pub fn finite(&self) -> Option<&Q> {
        match self {
            SlopeValue::Finite(x) => Some(x),
            SlopeValue::Infinite => None,
        }
    }
}

impl fmt::Display for SlopeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeValue::Finite(x) => write!(f, "{x}"),
            SlopeValue::Infinite => f.write_str("+inf"),
        }
    }
}

impl Serialize for SlopeValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SlopeValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        if text == "+inf" {
            Ok(SlopeValue::Infinite)
        } else {
            rational::parse("slope", &text)
                .map(SlopeValue::Finite)
                .map_err(serde::de::Error::custom)
        }
    }
}

/// `coef * alpha^power`: an intersection number of powers of `omega`
/// before the odd powers of `alpha` have paired up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaTerm {
    pub coef: Q,
    pub power: i32,
}

impl AlphaTerm {
    pub fn new(coef: Q, power: i32) -> Self {
        Self { coef, power }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.coef * &other.coef, self.power + other.power)
    }

    /// Panics on division by a zero coefficient.
    pub fn div(&self, other: &Self) -> Self {
        Self::new(&self.coef / &other.coef, self.power - other.power)
    }

    /// Sum of two terms of equal `alpha`-degree; a zero term adapts to the
    /// other's degree. Returns `None` for genuinely mixed degrees.
    pub fn add(&self, other: &Self) -> Option<Self> {
        if self.coef.is_zero() {
            Some(other.clone())
        } else if other.coef.is_zero() || self.power == other.power {
            Some(Self::new(&self.coef + &other.coef, self.power))
        } else {
            None
        }
    }

    pub fn scale(&self, lambda: &Q) -> Self {
        Self::new(&self.coef * lambda, self.power)
    }

    /// The rational value, available when the power of `alpha` is even.
    pub fn eval(&self, alpha_sq: &Q) -> Option<Q> {
        if self.coef.is_zero() {
            return Some(Q::zero());
        }
        if self.power % 2 != 0 {
            return None;
        }
        let half = self.power / 2;
        let base = if half >= 0 {
            alpha_sq.clone()
        } else {
            alpha_sq.recip()
        };
        let mut out = self.coef.clone();
        for _ in 0..half.unsigned_abs() {
            out *= &base;
        }
        Some(out)
    }
}

/// `omega^{3-i} . tch_i = alpha^{3-i} D t_i`.
pub fn omega_intersection(
    v: &ChernVector,
    p: &TiltParameter,
    geom: &PolarizedGeometry,
    i: usize,
) -> AlphaTerm {
    let t = v.twist_by_b(p.beta());
    AlphaTerm::new(t.ch(i) * geom.degree(), 3 - i as i32)
}

/// `omega^3 = alpha^3 D`.
pub fn omega_cubed(geom: &PolarizedGeometry) -> AlphaTerm {
    AlphaTerm::new(geom.degree().clone(), 3)
}

fn reject_zero(v: &ChernVector, op: &'static str) -> Result<()> {
    if v.is_zero() {
        Err(Error::ZeroVector { op })
    } else {
        Ok(())
    }
}

/// `mu = omega^2 tch_1 / tch_0 = alpha^2 D t_1 / v_0`, infinite for rank zero.
pub fn slope_mu(v: &ChernVector, p: &TiltParameter, geom: &PolarizedGeometry) -> Result<SlopeValue> {
    reject_zero(v, "slope_mu")?;
    if v.ch0().is_zero() {
        return Ok(SlopeValue::Infinite);
    }
    let t1 = v.twist_by_b(p.beta()).ch1().clone();
    Ok(SlopeValue::Finite(p.alpha_sq() * geom.degree() * t1 / v.ch0()))
}

/// Numerator of `nu_hat`: `t_2 - (alpha^2/6) t_0`. This is `Im Z / (alpha D)`.
pub fn tilt_numerator(v: &ChernVector, p: &TiltParameter) -> Q {
    let t = v.twist_by_b(p.beta());
    t.ch2() - p.alpha_sq() * t.ch0() / qi(6)
}

/// `nu_hat = alpha * nu = (t_2 - (alpha^2/6) t_0) / t_1`, infinite when
/// `t_1 = 0`. The degree `D` cancels.
pub fn slope_nu_hat(v: &ChernVector, p: &TiltParameter) -> Result<SlopeValue> {
    reject_zero(v, "slope_nu_hat")?;
    let t1 = v.twist_by_b(p.beta()).ch1().clone();
    if t1.is_zero() {
        return Ok(SlopeValue::Infinite);
    }
    Ok(SlopeValue::Finite(tilt_numerator(v, p) / t1))
}

/// Central charge with `Im Z = alpha * im_coef`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralCharge {
    #[serde(with = "rational::as_string")]
    pub re: Q,
    #[serde(with = "rational::as_string")]
    pub im_coef: Q,
}

/// `Z = (-tch_3 + (omega^2/2) tch_1) + i (omega tch_2 - (omega^3/6) tch_0)`.
pub fn central_charge(v: &ChernVector, p: &TiltParameter, geom: &PolarizedGeometry) -> CentralCharge {
    let t = v.twist_by_b(p.beta());
    let degree = geom.degree();
    let a = p.alpha_sq();
    CentralCharge {
        re: -(degree * t.ch3()) + a * degree * t.ch1() / qi(2),
        im_coef: degree * t.ch2() - a * degree * t.ch0() / qi(6),
    }
}

/// `Z(v)` on the negative real axis: `Im Z = 0` and `Re Z < 0`.
///
/// For `Im Z < 0` the class cannot lie in the heart and no phase is
/// assigned, so the answer is `false`.
pub fn phase_one(v: &ChernVector, p: &TiltParameter, geom: &PolarizedGeometry) -> Result<bool> {
    reject_zero(v, "phase_one")?;
    let z = central_charge(v, p, geom);
    Ok(z.im_coef.is_zero() && z.re.is_negative())
}

/// Coefficient of `omega Delta`: `D (t_1^2 - 2 t_0 t_2)`, with
/// `omega Delta = alpha * discriminant_delta`. Independent of `beta`.
pub fn discriminant_delta(v: &ChernVector, p: &TiltParameter, geom: &PolarizedGeometry) -> Q {
    let t = v.twist_by_b(p.beta());
    geom.degree() * (t.ch1() * t.ch1() - qi(2) * t.ch0() * t.ch2())
}

/// `Delta_bar = (omega^2 tch_1)^2 - 2 (omega^3 tch_0)(omega tch_2)` from the
/// twisted intersection numbers.
pub fn delta_bar_definitional(v: &ChernVector, p: &TiltParameter, geom: &PolarizedGeometry) -> Q {
    let w1 = omega_intersection(v, p, geom, 1);
    let w0 = omega_intersection(v, p, geom, 0);
    let w2 = omega_intersection(v, p, geom, 2);
    let value = w1
        .mul(&w1)
        .add(&w0.mul(&w2).scale(&qi(-2)))
        .expect("both terms have alpha-degree 4");
    value.eval(p.alpha_sq()).expect("even alpha-degree")
}

/// `Delta_bar = alpha^4 D^2 (v_1^2 - 2 v_0 v_2)` on the untwisted character.
pub fn delta_bar_closed_form(v: &ChernVector, p: &TiltParameter, geom: &PolarizedGeometry) -> Q {
    let a = p.alpha_sq();
    let degree = geom.degree();
    a * a * degree * degree * (v.ch1() * v.ch1() - qi(2) * v.ch0() * v.ch2())
}

/// Drezet-type discriminant `Delta_bar_omega`.
pub fn discriminant_delta_bar(v: &ChernVector, p: &TiltParameter, geom: &PolarizedGeometry) -> Q {
    let value = delta_bar_definitional(v, p, geom);
    debug_assert_eq!(value, delta_bar_closed_form(v, p, geom));
    value
}

/// `Delta_bar - (omega Delta) omega^3`. The Hodge index comparison bounds
/// this below by zero; for `Pic = Z H` it vanishes identically.
pub fn hodge_index_gap(v: &ChernVector, p: &TiltParameter, geom: &PolarizedGeometry) -> Q {
    let omega_delta = AlphaTerm::new(discriminant_delta(v, p, geom), 1);
    let product = omega_delta
        .mul(&omega_cubed(geom))
        .eval(p.alpha_sq())
        .expect("alpha-degree 4");
    discriminant_delta_bar(v, p, geom) - product
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BmtForm {
    /// `tch_3 <= (omega^2/18) tch_1`.
    Strong,
    /// `tch_3 < (omega^2/2) tch_1`.
    Weak,
}

impl std::str::FromStr for BmtForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(BmtForm::Strong),
            "weak" => Ok(BmtForm::Weak),
            _ => Err(Error::Parse {
                field: "form".into(),
                value: s.into(),
                message: "expected strong or weak".into(),
            }),
        }
    }
}

/// Outcome of a BMT-type inequality. `margin = RHS - LHS`.
///
/// Only the inequality is evaluated. The conjecture's hypotheses are
/// `nu = 0`, recorded in `nu_hat_zero`, and tilt-stability, which numerics
/// cannot see and callers must assume.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BmtVerdict {
    pub form: BmtForm,
    pub satisfied: bool,
    #[serde(with = "rational::as_string")]
    pub margin: Q,
    pub nu_hat_zero: bool,
}

/// Strong: `t_3 <= (alpha^2/18) t_1`. Weak: `t_3 < (alpha^2/2) t_1`.
/// The common factor `D` is dropped.
pub fn bmt_check(v: &ChernVector, p: &TiltParameter, form: BmtForm) -> BmtVerdict {
    let t = v.twist_by_b(p.beta());
    let factor = match form {
        BmtForm::Strong => qi(18),
        BmtForm::Weak => qi(2),
    };
    let margin = p.alpha_sq() / factor * t.ch1() - t.ch3();
    let satisfied = match form {
        BmtForm::Strong => !margin.is_negative(),
        BmtForm::Weak => margin.is_positive(),
    };
    let nu_hat_zero = matches!(slope_nu_hat(v, p), Ok(SlopeValue::Finite(ref x)) if x.is_zero());
    BmtVerdict {
        form,
        satisfied,
        margin,
        nu_hat_zero,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Positivity {
    pub delta_bar_ok: bool,
    #[serde(with = "rational::as_string")]
    pub value: Q,
}

/// `Delta_bar >= 0`, necessary for `nu`-semistability. A failure shows that
/// no semistable object has this character.
pub fn positivity_check(v: &ChernVector, p: &TiltParameter, geom: &PolarizedGeometry) -> Positivity {
    let value = discriminant_delta_bar(v, p, geom);
    Positivity {
        delta_bar_ok: !value.is_negative(),
        value,
    }
}

/// `c = min { omega^2 tch_1(F) > 0 }` over integral characters.
///
/// With `Pic = Z H` and `beta = p/q` in lowest terms, `q v_1 - p v_0` ranges
/// over all of `Z`, so the minimum is `alpha^2 D / q`.
pub fn compute_c(p: &TiltParameter, geom: &PolarizedGeometry) -> Q {
    let q = Q::from_integer(rational::denominator(p.beta()));
    p.alpha_sq() * geom.degree() / q
}

/// Eventual order of `nu_{m omega, B}(a)` and `nu_{m omega, B}(c)` as
/// `m -> infinity`.
///
/// Up to the positive factor `1/alpha`, `nu_{m omega} = -(m/6)(t_0/t_1) +
/// (1/m)(t_2/t_1)`, so the order is lexicographic in `(-t_0/t_1, t_2/t_1)`.
/// The answer does not depend on `alpha`.
pub fn large_m_compare(a: &ChernVector, c: &ChernVector, beta: &Q) -> Result<Ordering> {
    let key = |v: &ChernVector, name: &str| -> Result<(Q, Q)> {
        let t = v.twist_by_b(beta);
        if t.ch1().is_zero() {
            return Err(Error::precondition(
                name,
                "omega^2 tch_1 != 0",
                "a rank-zero twisted degree has no finite large-volume slope",
            ));
        }
        Ok((-(t.ch0() / t.ch1()), t.ch2() / t.ch1()))
    };
    Ok(key(a, "vA")?.cmp(&key(c, "vC")?))
}

/// Upper bound on `nu_hat` of a positivity-feasible sheaf subobject `M`
/// (positive rank, `0 < t_1(M) <= -delta`) of a shifted line bundle `E[1]`
/// with `t_1(E) = delta < 0`.
///
/// In `nu` units the bound is `-omega^2 delta / (2 omega^3)
/// = -alpha^2 D delta / (2 alpha^3 D) = -delta / (2 alpha)`, so in `nu_hat`
/// units it is `-delta / 2`, independent of `alpha` and `D`.
pub fn destabilizer_slope_bound(delta_t1: &Q) -> Result<Q> {
    if !delta_t1.is_negative() {
        return Err(Error::precondition(
            "delta",
            "omega^2 tch_1(E) < 0",
            format!("got delta = {delta_t1}"),
        ));
    }
    Ok(-delta_t1 / qi(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn par(a: Q, b: Q) -> TiltParameter {
        TiltParameter::new(a, b).unwrap()
    }

    fn geom(d: i64) -> PolarizedGeometry {
        PolarizedGeometry::new(qi(d)).unwrap()
    }

    fn fin(x: Q) -> SlopeValue {
        SlopeValue::Finite(x)
    }

    #[test]
    fn slope_order() {
        assert!(fin(qi(1_000_000)) < SlopeValue::Infinite);
        assert!(fin(q(-1, 2)) < fin(qi(0)));
        assert_eq!(SlopeValue::Infinite, SlopeValue::Infinite);
    }

    #[test]
    fn mu_examples() {
        let torsion = ChernVector::from_ints([0, 0, 1, 0]);
        assert_eq!(
            slope_mu(&torsion, &par(qi(5), q(1, 3)), &geom(2)).unwrap(),
            SlopeValue::Infinite
        );
        let f = ChernVector::from_ratios([(3, 1), (-9, 1), (1, 2), (-7, 2)]);
        assert_eq!(slope_mu(&f, &par(qi(1), qi(0)), &geom(1)).unwrap(), fin(qi(-3)));
        let v = ChernVector::from_ints([1, 2, 0, 0]);
        assert_eq!(slope_mu(&v, &par(qi(1), qi(1)), &geom(2)).unwrap(), fin(qi(2)));
        assert!(matches!(
            slope_mu(&ChernVector::zero(), &par(qi(1), qi(0)), &geom(1)),
            Err(Error::ZeroVector { .. })
        ));
    }

    #[test]
    fn mu_shifts_by_b() {
        // mu_{omega,B} = mu_omega - B omega^2
        let v = ChernVector::from_ratios([(2, 1), (3, 1), (1, 5), (0, 1)]);
        let g = geom(3);
        let b = q(2, 7);
        let a = q(5, 3);
        let with_b = slope_mu(&v, &par(a.clone(), b.clone()), &g).unwrap();
        let without = slope_mu(&v, &par(a.clone(), qi(0)), &g).unwrap();
        let shift = &b * &a * g.degree();
        assert_eq!(with_b, fin(without.finite().unwrap() - shift));
    }

    #[test]
    fn nu_hat_examples() {
        // L^2 (x) I_C with D = d = 1 at m^2 = 12 - 6 d/D = 6
        let e = ChernVector::from_ints([1, 2, 1, 0]);
        assert_eq!(slope_nu_hat(&e, &par(qi(6), qi(0))).unwrap(), fin(qi(0)));
        // I_Z (x) L with alpha^2 = 3 l^2
        for l in 1..5 {
            let ell = qi(l);
            let v = ChernVector::line_bundle(&ell).with_ch3(qi(-7));
            assert_eq!(
                slope_nu_hat(&v, &par(qi(3 * l * l), qi(0))).unwrap(),
                fin(qi(0))
            );
        }
        let f = ChernVector::from_ints([-3, 6, -2, 2]);
        assert_eq!(slope_nu_hat(&f, &par(qi(4), qi(0))).unwrap(), fin(qi(0)));
        let t = ChernVector::from_ints([0, 0, 2, 1]);
        assert_eq!(slope_nu_hat(&t, &par(qi(4), qi(0))).unwrap(), SlopeValue::Infinite);
    }

    #[test]
    fn central_charge_examples() {
        let o = ChernVector::from_ints([1, 0, 0, 0]);
        let z = central_charge(&o, &par(q(7, 2), qi(0)), &geom(3));
        assert_eq!(z.re, qi(0));
        assert_eq!(z.im_coef, -(q(7, 2) * qi(3) / qi(6)));
        assert!(z.im_coef.is_negative());

        let p = par(qi(3), qi(0));
        let o_minus_one_shift = ChernVector::from_ratios([(-1, 1), (1, 1), (-1, 2), (1, 6)]);
        let z = central_charge(&o_minus_one_shift, &p, &geom(1));
        assert_eq!(z.re, q(4, 3));
        assert_eq!(z.im_coef, qi(0));

        let v = ChernVector::from_ints([1, 2, 1, 0]);
        let p = par(q(2, 5), q(1, 3));
        let z = central_charge(&v, &p, &geom(2));
        let zs = central_charge(&v.shift(1), &p, &geom(2));
        assert_eq!(zs.re, -z.re);
        assert_eq!(zs.im_coef, -z.im_coef);
    }

    #[test]
    fn phase_one_examples() {
        let g = geom(1);
        for l in 1..4 {
            let p = par(qi(3 * l * l), qi(0));
            let ch_iz_l = ChernVector::line_bundle(&qi(l)) - ChernVector::from_ints([0, 0, 0, 2]);
            assert!(phase_one(&ch_iz_l.dual().shift(2), &p, &g).unwrap());
        }
        assert!(!phase_one(&ChernVector::from_ints([1, 0, 0, 0]), &par(qi(1), qi(0)), &g).unwrap());
        let p = par(qi(3), qi(0));
        let x = ChernVector::from_ratios([(-1, 1), (1, 1), (-1, 2), (1, 6)]);
        assert!(!phase_one(&x, &p, &g).unwrap());
        assert!(phase_one(&x.shift(1), &p, &g).unwrap());
        assert!(phase_one(&ChernVector::zero(), &p, &g).is_err());
    }

    #[test]
    fn discriminant_examples() {
        let p = par(qi(1), qi(0));
        for k in -3..4 {
            let l = ChernVector::line_bundle(&qi(k));
            assert_eq!(discriminant_delta(&l, &p, &geom(4)), qi(0));
            assert_eq!(discriminant_delta_bar(&l, &par(q(3, 7), q(1, 2)), &geom(4)), qi(0));
        }
        let (d, big_d) = (qi(3), qi(2));
        let ideal = ChernVector::new(qi(1), qi(0), -&d / &big_d, qi(0));
        assert_eq!(discriminant_delta(&ideal, &p, &geom(2)), qi(6));
        let f = ChernVector::from_ratios([(3, 1), (-9, 1), (1, 2), (0, 1)]);
        assert_eq!(discriminant_delta(&f, &p, &geom(1)), qi(78));

        let ideal3 = ChernVector::from_ints([1, 0, -3, 0]);
        assert_eq!(discriminant_delta_bar(&ideal3, &p, &geom(1)), qi(6));
        let v = ChernVector::from_ints([2, 3, -1, 5]);
        let p = par(q(5, 7), q(1, 3));
        assert_eq!(hodge_index_gap(&v, &p, &geom(4)), qi(0));
        assert_eq!(
            delta_bar_definitional(&v, &p, &geom(4)),
            delta_bar_closed_form(&v, &p, &geom(4))
        );
    }

    #[test]
    fn bmt_examples() {
        let p = par(qi(3), qi(0));
        let x = ChernVector::from_ratios([(-1, 1), (1, 1), (-1, 2), (1, 6)]);
        let r = bmt_check(&x, &p, BmtForm::Strong);
        assert!(r.satisfied && r.nu_hat_zero);
        assert_eq!(r.margin, qi(0));

        let f = ChernVector::from_ints([-3, 6, -2, 2]);
        let r = bmt_check(&f, &par(qi(4), qi(0)), BmtForm::Strong);
        assert!(!r.satisfied);
        assert_eq!(r.margin, q(-2, 3));

        let o = ChernVector::from_ints([1, 0, 0, 0]);
        let r = bmt_check(&o, &par(q(9, 4), qi(0)), BmtForm::Strong);
        assert!(r.satisfied);
        assert_eq!(r.margin, qi(0));
        // Weak form is strict: equality fails it.
        assert!(!bmt_check(&o, &par(q(9, 4), qi(0)), BmtForm::Weak).satisfied);
    }

    #[test]
    fn positivity_examples() {
        let r = positivity_check(&ChernVector::line_bundle(&qi(-2)), &par(qi(2), qi(0)), &geom(1));
        assert!(r.delta_bar_ok);
        assert_eq!(r.value, qi(0));
        for a in [q(1, 3), qi(1), qi(7)] {
            let r = positivity_check(&ChernVector::from_ints([2, 1, 1, 0]), &par(a.clone(), qi(0)), &geom(1));
            assert!(!r.delta_bar_ok);
            assert_eq!(r.value, &a * &a * qi(-3));
        }
        let r = positivity_check(&ChernVector::from_ints([1, 0, -1, 0]), &par(qi(1), qi(0)), &geom(1));
        assert!(r.delta_bar_ok);
        assert_eq!(r.value, qi(2));
    }

    #[test]
    fn compute_c_examples() {
        assert_eq!(compute_c(&par(qi(1), qi(0)), &geom(1)), qi(1));
        // Oracle: minimum positive value of v1 - v0/2 over a box.
        let mut best: Option<Q> = None;
        for v0 in -6..=6 {
            for v1 in -6..=6 {
                let x = qi(v1) - qi(v0) * q(1, 2);
                if x.is_positive() && best.as_ref().is_none_or(|b| &x < b) {
                    best = Some(x);
                }
            }
        }
        assert_eq!(best.unwrap(), q(1, 2));
        assert_eq!(compute_c(&par(qi(1), q(1, 2)), &geom(1)), q(1, 2));
        let m_sq = qi(12) - qi(6) * qi(5) / qi(5);
        assert_eq!(compute_c(&par(m_sq, qi(0)), &geom(5)), qi(30));
    }

    #[test]
    fn large_m_examples() {
        let a = ChernVector::from_ints([1, -2, 0, 0]);
        let c = ChernVector::from_ints([1, -1, 0, 0]);
        assert_eq!(large_m_compare(&a, &c, &qi(0)).unwrap(), Ordering::Less);
        assert_eq!(large_m_compare(&a, &a, &qi(0)).unwrap(), Ordering::Equal);
        let a = ChernVector::from_ints([0, 1, 1, 0]);
        let c = ChernVector::from_ints([0, 1, 2, 0]);
        assert_eq!(large_m_compare(&a, &c, &qi(0)).unwrap(), Ordering::Less);
        let bad = ChernVector::from_ints([1, 0, 0, 0]);
        assert!(large_m_compare(&bad, &c, &qi(0)).is_err());
    }

    #[test]
    fn slope_bound_examples() {
        assert_eq!(destabilizer_slope_bound(&qi(-1)).unwrap(), q(1, 2));
        assert_eq!(destabilizer_slope_bound(&qi(-2)).unwrap(), qi(1));
        assert!(destabilizer_slope_bound(&qi(0)).is_err());
        assert!(destabilizer_slope_bound(&qi(3)).is_err());
    }

    #[test]
    fn alpha_term_eval() {
        let t = AlphaTerm::new(qi(2), 4);
        assert_eq!(t.eval(&qi(3)).unwrap(), qi(18));
        assert!(AlphaTerm::new(qi(1), 3).eval(&qi(3)).is_none());
        assert_eq!(AlphaTerm::new(qi(5), -2).eval(&qi(5)).unwrap(), qi(1));
        assert!(AlphaTerm::new(qi(1), 1).add(&AlphaTerm::new(qi(1), 3)).is_none());
    }
}
