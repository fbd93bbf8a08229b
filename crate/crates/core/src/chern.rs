//! Reduced Chern characters on a polarized threefold with `Pic = Z H`.
//!
//! A [`ChernVector`] `(v0, v1, v2, v3)` stands for `ch_i = v_i H^i`, so the
//! intersection number `H^{3-i} ch_i` equals `v_i D` with `D = H^3`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, q, qi, Q};
use crate::{Error, Result};

/// Ambient numerical data: `D = H^3` and the lattice of integral characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizedGeometry {
    #[serde(with = "rational::as_string")]
    degree: Q,
    lattice_denoms: [u32; 4],
}

impl PolarizedGeometry {
    /// Integral characters satisfy `v_i ∈ (1/q_i) Z` with these defaults,
    /// which match `P^3`.
    pub const DEFAULT_DENOMS: [u32; 4] = [1, 1, 2, 6];

    pub fn new(degree: Q) -> Result<Self> {
        Self::with_lattice(degree, Self::DEFAULT_DENOMS)
    }

    pub fn with_lattice(degree: Q, lattice_denoms: [u32; 4]) -> Result<Self> {
        if !degree.is_positive() {
            return Err(Error::precondition(
                "D",
                "D = H^3 > 0",
                format!("got {degree}"),
            ));
        }
        if lattice_denoms.contains(&0) {
            return Err(Error::precondition(
                "lattice",
                "lattice denominators >= 1",
                format!("got {lattice_denoms:?}"),
            ));
        }
        Ok(Self {
            degree,
            lattice_denoms,
        })
    }

    /// Projective three-space: `D = 1`, default lattice.
    pub fn p3() -> Self {
        Self::new(qi(1)).expect("D = 1 is positive")
    }

    pub fn degree(&self) -> &Q {
        &self.degree
    }

    pub fn lattice_denoms(&self) -> [u32; 4] {
        self.lattice_denoms
    }
}

/// `omega = alpha H`, `B = beta H`, stored as `(alpha^2, beta)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltParameter {
    #[serde(with = "rational::as_string")]
    alpha_sq: Q,
    #[serde(with = "rational::as_string")]
    beta: Q,
}

impl TiltParameter {
    pub fn new(alpha_sq: Q, beta: Q) -> Result<Self> {
        if !alpha_sq.is_positive() {
            return Err(Error::precondition(
                "alpha_sq",
                "omega ample (alpha^2 > 0)",
                format!("got {alpha_sq}"),
            ));
        }
        Ok(Self { alpha_sq, beta })
    }

    pub fn alpha_sq(&self) -> &Q {
        &self.alpha_sq
    }

    pub fn beta(&self) -> &Q {
        &self.beta
    }

    /// The same `B` with `omega` replaced by `m omega`, given `m^2`.
    pub fn scaled(&self, m_sq: &Q) -> Result<Self> {
        Self::new(&self.alpha_sq * m_sq, self.beta.clone())
    }
}

/// Reduced rational Chern character `(v0, v1, v2, v3)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChernVector(#[serde(with = "rational::as_string_vec")] Vec<Q>);

impl ChernVector {
    pub fn new(v0: Q, v1: Q, v2: Q, v3: Q) -> Self {
        ChernVector(vec![v0, v1, v2, v3])
    }

    pub fn from_slice(v: &[Q; 4]) -> Self {
        ChernVector(v.to_vec())
    }

    /// Builds a vector from `(numerator, denominator)` pairs.
    pub fn from_ratios(v: [(i64, i64); 4]) -> Self {
        ChernVector(v.iter().map(|&(n, d)| q(n, d)).collect())
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        ChernVector(v.iter().map(|&n| qi(n)).collect())
    }

    pub fn zero() -> Self {
        ChernVector(vec![Q::zero(), Q::zero(), Q::zero(), Q::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn ch(&self, i: usize) -> &Q {
        &self.0[i]
    }

    pub fn ch0(&self) -> &Q {
        &self.0[0]
    }

    pub fn ch1(&self) -> &Q {
        &self.0[1]
    }

    pub fn ch2(&self) -> &Q {
        &self.0[2]
    }

    pub fn ch3(&self) -> &Q {
        &self.0[3]
    }

    pub fn components(&self) -> &[Q] {
        &self.0
    }

    pub fn with_ch3(&self, v3: Q) -> Self {
        let mut out = self.clone();
        out.0[3] = v3;
        out
    }

    /// True when `v0, v1, v2` agree; `ch3` is ignored.
    pub fn same_up_to_ch3(&self, other: &Self) -> bool {
        self.0[..3] == other.0[..3]
    }

    pub fn scale(&self, lambda: &Q) -> Self {
        ChernVector(self.0.iter().map(|x| x * lambda).collect())
    }

    /// `ch(O(kH)) = e^{kH}`.
    pub fn line_bundle(k: &Q) -> Self {
        let k2 = k * k;
        let k3 = &k2 * k;
        ChernVector::new(Q::one(), k.clone(), k2 / qi(2), k3 / qi(6))
    }

    /// Character from Chern classes `c_i = c_i H^i` for rank at most three.
    ///
    /// `v2 = (c1^2 - 2 c2)/2`, `v3 = (c1^3 - 3 c1 c2 + 3 c3)/6`. These are
    /// valid only when the classes above the rank vanish identically, hence
    /// the rank cap.
    pub fn from_chern_classes(rank: i64, c1: &Q, c2: &Q, c3: &Q) -> Result<Self> {
        if !(0..=3).contains(&rank) {
            return Err(Error::precondition(
                "rank",
                "class-to-character conversion needs 0 <= rank <= 3",
                format!("got rank {rank}"),
            ));
        }
        let v2 = (c1 * c1 - c2 * qi(2)) / qi(2);
        let v3 = (c1 * c1 * c1 - c1 * c2 * qi(3) + c3 * qi(3)) / qi(6);
        Ok(ChernVector::new(qi(rank), c1.clone(), v2, v3))
    }

    /// Inverse of [`from_chern_classes`](Self::from_chern_classes):
    /// returns `(c1, c2, c3)`.
    pub fn to_chern_classes(&self) -> Result<(Q, Q, Q)> {
        let rank_ok = self.ch0().is_integer() && (qi(0)..=qi(3)).contains(self.ch0());
        if !rank_ok {
            return Err(Error::precondition(
                "v0",
                "character-to-class conversion needs integral rank in 0..=3",
                format!("got v0 = {}", self.ch0()),
            ));
        }
        let c1 = self.ch1().clone();
        let c2 = &c1 * &c1 / qi(2) - self.ch2();
        let c3 = self.ch3() * qi(2) - &c1 * &c1 * &c1 / qi(3) + &c1 * &c2;
        Ok((c1, c2, c3))
    }

    /// Multiplication by `e^{kH}`: `v'_i = sum_{j<=i} v_j k^{i-j}/(i-j)!`.
    pub fn twist(&self, k: &Q) -> Self {
        let k2 = k * k / qi(2);
        let k3 = k * k * k / qi(6);
        let [v0, v1, v2, v3] = [&self.0[0], &self.0[1], &self.0[2], &self.0[3]];
        ChernVector::new(
            v0.clone(),
            v1 + v0 * k,
            v2 + v1 * k + v0 * &k2,
            v3 + v2 * k + v1 * &k2 + v0 * &k3,
        )
    }

    /// Twisted character `e^{-B} ch` for `B = beta H`; components are the
    /// `t_i` used by every slope function.
    pub fn twist_by_b(&self, beta: &Q) -> Self {
        self.twist(&-beta)
    }

    /// Derived dual: `(v0, -v1, v2, -v3)`.
    pub fn dual(&self) -> Self {
        let [v0, v1, v2, v3] = [&self.0[0], &self.0[1], &self.0[2], &self.0[3]];
        ChernVector::new(v0.clone(), -v1, v2.clone(), -v3)
    }

    /// Shift `[k]` multiplies the character by `(-1)^k`.
    pub fn shift(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            self.clone()
        } else {
            -self.clone()
        }
    }

    /// `ch(I_C) = ch(O_X) - ch(O_C) = (1, 0, -d/D, -e/D)`.
    pub fn ideal_sheaf_of_curve(curve: &CurveData, geom: &PolarizedGeometry) -> Self {
        ChernVector::from_ints([1, 0, 0, 0]) - Self::structure_sheaf_of_curve(curve, geom)
    }

    /// `ch(O_C) = (0, 0, d/D, e/D)` with `d = H.C` and `e = ch_3(O_C)`.
    pub fn structure_sheaf_of_curve(curve: &CurveData, geom: &PolarizedGeometry) -> Self {
        let degree = geom.degree();
        ChernVector::new(
            Q::zero(),
            Q::zero(),
            curve.degree() / degree,
            curve.ch3_oc() / degree,
        )
    }
}

impl fmt::Debug for ChernVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ChernVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.0[0], self.0[1], self.0[2], self.0[3]
        )
    }
}

impl Add for ChernVector {
    type Output = ChernVector;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Add for &ChernVector {
    type Output = ChernVector;
    fn add(self, rhs: Self) -> ChernVector {
        ChernVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for ChernVector {
    type Output = ChernVector;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Sub for &ChernVector {
    type Output = ChernVector;
    fn sub(self, rhs: Self) -> ChernVector {
        ChernVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for ChernVector {
    type Output = ChernVector;
    fn neg(self) -> Self {
        ChernVector(self.0.into_iter().map(|x| -x).collect())
    }
}

/// Numerical data of a curve `C`: degree `d = H.C`, `e = ch_3(O_C)`, and
/// optionally its arithmetic genus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveData {
    #[serde(with = "rational::as_string")]
    degree: Q,
    #[serde(with = "rational::as_string")]
    ch3_oc: Q,
    genus: Option<i64>,
}

impl CurveData {
    pub fn new(degree: Q, ch3_oc: Q) -> Result<Self> {
        if !degree.is_positive() {
            return Err(Error::precondition(
                "d",
                "curve degree d = H.C > 0",
                format!("got {degree}"),
            ));
        }
        Ok(Self {
            degree,
            ch3_oc,
            genus: None,
        })
    }

    /// A curve of genus `g` on a smooth degree-`D` hypersurface in `P^4`;
    /// `ch_3(O_C)` is derived by Riemann-Roch.
    pub fn on_hypersurface(degree: Q, genus: i64, geom: &PolarizedGeometry) -> Result<Self> {
        if genus < 0 {
            return Err(Error::precondition("genus", "g >= 0", format!("got {genus}")));
        }
        let e = genus_to_ch3(&degree, geom.degree(), genus);
        Ok(Self {
            genus: Some(genus),
            ..Self::new(degree, e)?
        })
    }

    /// Attaches a genus, checking the Riemann-Roch relation
    /// `ch_3(O_C) = 1 - g - (d/2)(5 - D)` when `hypersurface_in_p4` is set.
    pub fn with_genus(
        self,
        genus: i64,
        geom: &PolarizedGeometry,
        hypersurface_in_p4: bool,
    ) -> Result<Self> {
        if genus < 0 {
            return Err(Error::precondition("genus", "g >= 0", format!("got {genus}")));
        }
        if hypersurface_in_p4 {
            let expected = genus_to_ch3(&self.degree, geom.degree(), genus);
            if expected != self.ch3_oc {
                return Err(Error::precondition(
                    "ch3_oc",
                    "1 - g = ch3(O_C) + (d/2)(5 - D) on a hypersurface in P^4",
                    format!("ch3_oc = {} but genus {genus} requires {expected}", self.ch3_oc),
                ));
            }
        }
        Ok(Self {
            genus: Some(genus),
            ..self
        })
    }

    pub fn degree(&self) -> &Q {
        &self.degree
    }

    pub fn ch3_oc(&self) -> &Q {
        &self.ch3_oc
    }

    pub fn genus(&self) -> Option<i64> {
        self.genus
    }
}

/// `ch_3(O_C) = 1 - g - (d/2)(5 - D)` for a curve on a degree-`D`
/// hypersurface in `P^4` (Hirzebruch-Riemann-Roch with `chi(O_C) = 1 - g`).
pub fn genus_to_ch3(d: &Q, degree: &Q, g: i64) -> Q {
    qi(1) - qi(g) - d / qi(2) * (qi(5) - degree)
}
