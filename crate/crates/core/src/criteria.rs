//! Stability criteria as executable predicates.
//!
//! Each check returns a structured report instead of a bare verdict: the
//! criteria are sufficient (or necessary) conditions that hold under
//! hypotheses numerics cannot verify, and callers need to see which ones.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chern::{ChernVector, CurveData, PolarizedGeometry, TiltParameter};
use crate::rational::{self, q, qi, Q};
use crate::tilt::{self, BmtForm, SlopeValue};
use crate::{Error, Result};

/// Values of `m^2` (with `omega` replaced by `m omega`) attached to a
/// shifted line bundle `O(kH)[1]`, `k < 0`, at `B = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleThresholds {
    /// `nu(E[1]) = 0` exactly at `m^2 = 3 c_1^2 omega / omega^3`.
    #[serde(with = "rational::as_string")]
    pub m_sq_nu_zero: Q,
    /// `E[1]` is `nu`-stable at its `nu = 0` parameter once
    /// `m^2 >= 3 d^2 / (omega^3)^2`, `d = c_1 omega^2`.
    #[serde(with = "rational::as_string")]
    pub m_sq_stability: Q,
    /// The weak inequality `tch_3 < (m^2 omega^2/2) tch_1` holds iff
    /// `m^2 > c_1^3 / (3d)`.
    #[serde(with = "rational::as_string")]
    pub m_sq_weak_conj: Q,
    pub stable_at_nu_zero: bool,
    /// Strong BMT margin of `E[1]` at `m^2 = m_sq_nu_zero`.
    #[serde(with = "rational::as_string")]
    pub bmt_margin_at_nu_zero: Q,
}

fn require_b_zero(p: &TiltParameter, criterion: &str) -> Result<()> {
    if p.beta().is_zero() {
        Ok(())
    } else {
        Err(Error::precondition(
            "beta",
            format!("B = 0 required by the {criterion}"),
            format!("got beta = {}", p.beta()),
        ))
    }
}

pub fn line_bundle_thresholds(
    k: &Q,
    p: &TiltParameter,
    geom: &PolarizedGeometry,
) -> Result<LineBundleThresholds> {
    require_b_zero(p, "line-bundle threshold criterion")?;
    if !k.is_negative() {
        return Err(Error::precondition(
            "k",
            "d = c_1(E) omega^2 < 0",
            format!("got k = {k}"),
        ));
    }
    let e = ChernVector::line_bundle(k);
    let omega3 = tilt::omega_cubed(geom);
    // c_1 = kH: c_1^2 omega = k^2 alpha D, d = c_1 omega^2 = k alpha^2 D,
    // c_1^3 = k^3 D.
    let c1_sq_omega = tilt::AlphaTerm::new(k * k * geom.degree(), 1);
    let d = tilt::AlphaTerm::new(k * geom.degree(), 2);
    let c1_cubed = tilt::AlphaTerm::new(k * k * k * geom.degree(), 0);
    let a = p.alpha_sq();
    let eval = |t: tilt::AlphaTerm| t.eval(a).expect("even alpha-degree");

    let m_sq_nu_zero = eval(c1_sq_omega.scale(&qi(3)).div(&omega3));
    let m_sq_stability = eval(d.mul(&d).scale(&qi(3)).div(&omega3.mul(&omega3)));
    let m_sq_weak_conj = eval(c1_cubed.div(&d.scale(&qi(3))));

    let shifted = e.shift(1);
    let at_zero = p.scaled(&m_sq_nu_zero)?;
    debug_assert_eq!(
        tilt::slope_nu_hat(&shifted, &at_zero)?,
        SlopeValue::Finite(Q::zero())
    );
    let bmt = tilt::bmt_check(&shifted, &at_zero, BmtForm::Strong);
    Ok(LineBundleThresholds {
        stable_at_nu_zero: m_sq_nu_zero >= m_sq_stability,
        m_sq_nu_zero,
        m_sq_stability,
        m_sq_weak_conj,
        bmt_margin_at_nu_zero: bmt.margin,
    })
}

/// Report for a torsion-free sheaf with `nu = 0` and `omega^2 tch_1 = 2c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCReport {
    /// `mu_max < omega^3 / sqrt 3`. `None` when no maximal slope is known.
    pub criterion1: Option<bool>,
    /// `omega^3 > 3 omega tch_1(M)^2` for every `M` with `omega^2 tch_1(M) = c`.
    pub criterion2: bool,
    pub preconditions_ok: bool,
    pub torsion_free_rank: bool,
    pub nu_zero: bool,
    pub twice_minimal: bool,
    #[serde(with = "rational::as_string")]
    pub c: Q,
    #[serde(with = "rational::as_opt_string")]
    pub mu_max_sq: Option<Q>,
}

/// Sufficient conditions for `nu`-stability when `omega^2 tch_1 = 2c`.
///
/// `mu_max_sq` is the square of the maximal HN slope `mu_{omega,B,max}`,
/// which only the sheaf itself determines; the verdict of `criterion1` is
/// conditional on it. For rank one `mu_max = mu` and it may be omitted.
///
/// `criterion2` uses `Pic = Z H`: `omega^2 tch_1(M) = c` forces
/// `t_1(M) = 1/q` for `beta = p/q`, so the condition reads
/// `alpha^3 D > 3 alpha D / q^2`, i.e. `alpha^2 > 3/q^2`.
pub fn two_c_stability_check(
    v: &ChernVector,
    p: &TiltParameter,
    geom: &PolarizedGeometry,
    mu_max_sq: Option<Q>,
) -> Result<TwoCReport> {
    let c = tilt::compute_c(p, geom);
    let torsion_free_rank = v.ch0() >= &qi(1);
    let nu_zero = matches!(tilt::slope_nu_hat(v, p)?, SlopeValue::Finite(ref x) if x.is_zero());
    let t1 = v.twist_by_b(p.beta()).ch1().clone();
    let twice_minimal = p.alpha_sq() * geom.degree() * t1 == qi(2) * &c;

    let mu_max_sq = match mu_max_sq {
        Some(x) => Some(x),
        None if v.ch0() == &qi(1) => match tilt::slope_mu(v, p, geom)? {
            SlopeValue::Finite(mu) => Some(&mu * &mu),
            SlopeValue::Infinite => None,
        },
        None => None,
    };
    let a = p.alpha_sq();
    let omega3_sq = a * a * a * geom.degree() * geom.degree();
    let criterion1 = mu_max_sq.as_ref().map(|m| qi(3) * m < omega3_sq);

    let q_den = Q::from_integer(rational::denominator(p.beta()));
    let criterion2 = a > &(qi(3) / (&q_den * &q_den));

    Ok(TwoCReport {
        criterion1,
        criterion2,
        preconditions_ok: torsion_free_rank && nu_zero && twice_minimal,
        torsion_free_rank,
        nu_zero,
        twice_minimal,
        c,
        mu_max_sq,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityStatus {
    /// `d < 3D/2`: `L^2 (x) I_C` is `nu`-stable at its `nu = 0` parameter.
    Stable,
    /// `3D/2 <= d < 2D`: the criterion is silent.
    Unknown,
    /// `d >= 2D`: no ample `omega = mH` gives `nu = 0`.
    NoNuZeroParameter,
}

/// Report on `E = L^2 (x) I_C` with `Pic = Z L`, `h = c_1(L)`, `B = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealTwistReport {
    pub chern_e: ChernVector,
    /// `12 - 6d/D`, the `m^2` at which `nu(E) = 0`.
    #[serde(with = "rational::as_string")]
    pub m_sq: Q,
    pub nu_zero_feasible: bool,
    pub stable_flag: bool,
    pub stability: StabilityStatus,
    /// `-ch_3(O_C) <= 4d/3`, the strong BMT inequality for `E`.
    pub bmt_flag: Option<bool>,
    /// Strong BMT margin evaluated directly on `ch(E)` at `alpha^2 = m^2`.
    #[serde(with = "rational::as_opt_string")]
    pub bmt_margin: Option<Q>,
    /// `dD/2 - 7d/6 + 1`.
    #[serde(with = "rational::as_opt_string")]
    pub genus_bound: Option<Q>,
    /// `g <= genus_bound`: the BMT inequality after Riemann-Roch.
    pub genus_route: Option<bool>,
    /// `(d-1)(d-2)/2`.
    #[serde(with = "rational::as_opt_string")]
    pub castelnuovo_bound: Option<Q>,
    pub castelnuovo_applicable: bool,
    /// `castelnuovo_bound <= genus_bound`, so Castelnuovo implies the bound.
    pub castelnuovo_implies_bound: Option<bool>,
}

pub fn ideal_sheaf_twist_report(
    curve: &CurveData,
    geom: &PolarizedGeometry,
    hypersurface_in_p4: bool,
) -> Result<IdealTwistReport> {
    let d = curve.degree();
    let big_d = geom.degree();
    if !d.is_positive() {
        return Err(Error::precondition("d", "curve degree d > 0", format!("got {d}")));
    }
    let chern_e = ChernVector::ideal_sheaf_of_curve(curve, geom).twist(&qi(2));
    let m_sq = qi(12) - qi(6) * d / big_d;
    let nu_zero_feasible = m_sq.is_positive();
    debug_assert_eq!(nu_zero_feasible, d < &(qi(2) * big_d));
    let stable_flag = nu_zero_feasible && d < &(q(3, 2) * big_d);
    let stability = match (nu_zero_feasible, stable_flag) {
        (false, _) => StabilityStatus::NoNuZeroParameter,
        (true, true) => StabilityStatus::Stable,
        (true, false) => StabilityStatus::Unknown,
    };

    let (bmt_flag, bmt_margin) = if nu_zero_feasible {
        let flag = -curve.ch3_oc() <= q(4, 3) * d;
        let p = TiltParameter::new(m_sq.clone(), Q::zero())?;
        let direct = tilt::bmt_check(&chern_e, &p, BmtForm::Strong);
        debug_assert!(direct.nu_hat_zero);
        debug_assert_eq!(direct.satisfied, flag);
        (Some(flag), Some(direct.margin))
    } else {
        (None, None)
    };

    let genus = curve.genus().filter(|_| hypersurface_in_p4);
    let genus_bound = genus.map(|_| d * big_d / qi(2) - q(7, 6) * d + qi(1));
    let genus_route = genus
        .zip(genus_bound.as_ref())
        .filter(|_| nu_zero_feasible)
        .map(|(g, bound)| &qi(g) <= bound);
    let castelnuovo_bound = genus.map(|_| (d - qi(1)) * (d - qi(2)) / qi(2));
    let castelnuovo_applicable = d <= big_d;
    let castelnuovo_implies_bound = castelnuovo_bound
        .as_ref()
        .zip(genus_bound.as_ref())
        .map(|(c, g)| c <= g);

    Ok(IdealTwistReport {
        chern_e,
        m_sq,
        nu_zero_feasible,
        stable_flag,
        stability,
        bmt_flag,
        bmt_margin,
        genus_bound,
        genus_route,
        castelnuovo_bound,
        castelnuovo_applicable,
        castelnuovo_implies_bound,
    })
}

/// Known existence box for rank-three stable reflexive sheaves on `P^3`
/// with `c_1 = 0`: `c_2 >= 3`, `c_3` even, `-c_2^2 + c_2 <= c_3 <= 0`.
pub fn miro_roig_feasible(c2: i64, c3: i64) -> bool {
    c2 >= 3 && c3 % 2 == 0 && -c2 * c2 + c2 <= c3 && c3 <= 0
}

/// `F = E(-n)[1]` for a rank-three reflexive `E` on `P^3` with
/// `c(E) = (0, c2, c3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub n: i64,
    pub m: i64,
    pub c2: i64,
    pub c3: i64,
    pub chern_f: ChernVector,
    pub nu_zero_verified: bool,
    pub bmt_violated: bool,
    #[serde(with = "rational::as_string")]
    pub bmt_margin: Q,
    #[serde(with = "rational::as_string")]
    pub delta_bar: Q,
}

/// Members and the two closed-form `c_3` bounds that accompany them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub n: i64,
    pub m: i64,
    pub c2: i64,
    /// `-c_2^2 + c_2`.
    pub c3_lower: i64,
    /// Members found by evaluating `ch_3(F) > (m^2/18) omega^2 ch_1(F)`.
    pub members: Vec<FamilyMember>,
    /// Bound as displayed with the family: `c_3 < -(2n^3 + 2nm^2/3)`.
    #[serde(with = "rational::as_string")]
    pub displayed_bound: Q,
    /// Bound obtained by expanding the inequality: `c_3 < -2n^3 + 2nm^2/3`.
    #[serde(with = "rational::as_string")]
    pub derived_bound: Q,
    pub displayed_c3: Vec<i64>,
    pub derived_c3: Vec<i64>,
    /// Set when the displayed bound selects a different `c_3` set than
    /// direct evaluation.
    pub discrepancy: bool,
}

impl FamilyReport {
    pub fn member_c3(&self) -> Vec<i64> {
        self.members.iter().map(|m| m.c3).collect()
    }
}

/// Chern character of `F = E(-n)[1]` for `c(E) = (0, c2, c3)`, rank 3.
pub fn family_character(n: i64, c2: i64, c3: i64) -> ChernVector {
    ChernVector::from_chern_classes(3, &qi(0), &qi(c2), &qi(c3))
        .expect("rank 3")
        .twist(&qi(-n))
        .shift(1)
}

/// Rank-three `c_1 = 0` reflexive sheaves `E` on `P^3` whose shift
/// `F = E(-n)[1]` has `nu_{m omega, 0}(F) = 0` and violates the strong BMT
/// inequality, hence is tilt-unstable (the inequality is known on `P^3`).
///
/// Setting: `D = 1`, `B = 0`, `omega = m H`, `c_2 = (3n^2 - m^2)/2`. Output
/// is sorted ascending in `c_3`.
pub fn p3_unstable_family(n: i64, m: i64) -> Result<FamilyReport> {
    let fail = |field: &str, hyp: &str| {
        Err(Error::precondition(field, hyp, format!("got (n, m) = ({n}, {m})")))
    };
    if n < 1 || m < 1 {
        return fail("n", "n, m positive integers");
    }
    if (n - m).rem_euclid(2) != 0 {
        return fail("m", "n and m of the same parity");
    }
    if 3 * n * n - m * m < 6 {
        return fail("m", "3n^2 - m^2 >= 6");
    }
    let c2 = (3 * n * n - m * m) / 2;
    let c3_lower = -c2 * c2 + c2;
    let p = TiltParameter::new(qi(m * m), Q::zero())?;
    let geom = PolarizedGeometry::p3();

    let nq = qi(n);
    let mq = qi(m);
    let displayed_bound = -(qi(2) * &nq * &nq * &nq + qi(2) * &nq * &mq * &mq / qi(3));
    let derived_bound = -(qi(2) * &nq * &nq * &nq) + qi(2) * &nq * &mq * &mq / qi(3);

    let mut members = Vec::new();
    let mut displayed_c3 = Vec::new();
    let mut derived_c3 = Vec::new();
    for c3 in (c3_lower..=0).filter(|c3| miro_roig_feasible(c2, *c3)) {
        let f = family_character(n, c2, c3);
        let verdict = tilt::bmt_check(&f, &p, BmtForm::Strong);
        if qi(c3) < displayed_bound {
            displayed_c3.push(c3);
        }
        if qi(c3) < derived_bound {
            derived_c3.push(c3);
        }
        if !verdict.satisfied {
            members.push(FamilyMember {
                n,
                m,
                c2,
                c3,
                nu_zero_verified: verdict.nu_hat_zero,
                bmt_violated: true,
                bmt_margin: verdict.margin,
                delta_bar: tilt::discriminant_delta_bar(&f, &p, &geom),
                chern_f: f,
            });
        }
    }
    let direct: Vec<i64> = members.iter().map(|m| m.c3).collect();
    Ok(FamilyReport {
        n,
        m,
        c2,
        c3_lower,
        discrepancy: displayed_c3 != direct,
        members,
        displayed_bound,
        derived_bound,
        displayed_c3,
        derived_c3,
    })
}
