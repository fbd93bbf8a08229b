// Slopes, tilt slope and central charge of a few classes on `P^3`.

use tiltstab::rational::{q, qi};
use tiltstab::tilt;
use tiltstab::{ChernVector, PolarizedGeometry, TiltParameter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let geom = PolarizedGeometry::p3();
    let p = TiltParameter::new(qi(3), q(-1, 2))?;
    let classes = [
        ("O", ChernVector::line_bundle(&qi(0))),
        ("O(-1)[1]", ChernVector::line_bundle(&qi(-1)).shift(1)),
        ("O_line", ChernVector::from_ratios([(0, 1), (0, 1), (1, 1), (-1, 1)])),
    ];
    for (name, v) in classes {
        let mu = tilt::slope_mu(&v, &p, &geom)?;
        let nu = tilt::slope_nu_hat(&v, &p)?;
        let z = tilt::central_charge(&v, &p, &geom);
        println!(
            "{name:>9}  ch = {v}  mu = {mu}  nu_hat = {nu}  Z = {} + i alpha ({})",
            z.re, z.im_coef
        );
    }
    let zero = ChernVector::zero();
    assert!(tilt::slope_nu_hat(&zero, &p).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
