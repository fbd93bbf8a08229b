#![allow(dead_code)]

use proptest::prelude::*;
use tiltstab::rational::{q, Q};
use tiltstab::{ChernVector, PolarizedGeometry, TiltParameter};

pub fn rational(num: i64, den: i64) -> impl Strategy<Value = Q> {
    (-num..=num, 1..=den).prop_map(|(n, d)| q(n, d))
}

pub fn positive(num: i64, den: i64) -> impl Strategy<Value = Q> {
    (1..=num, 1..=den).prop_map(|(n, d)| q(n, d))
}

pub fn vector() -> impl Strategy<Value = ChernVector> {
    [rational(30, 12), rational(30, 12), rational(30, 12), rational(30, 12)]
        .prop_map(|[a, b, c, d]| ChernVector::new(a, b, c, d))
}

pub fn parameter() -> impl Strategy<Value = TiltParameter> {
    (positive(40, 9), rational(20, 7)).prop_map(|(a, b)| TiltParameter::new(a, b).unwrap())
}

pub fn geometry() -> impl Strategy<Value = PolarizedGeometry> {
    positive(30, 4).prop_map(|d| PolarizedGeometry::new(d).unwrap())
}

pub mod naive;
pub mod jobs;
