// Numerical walls between `O` and its neighbours, sampled exactly.

use tiltstab::rational::qi;
use tiltstab::tilt;
use tiltstab::wall;
use tiltstab::{ChernVector, TiltParameter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let v = ChernVector::from_ints([1, 0, 0, 0]);
    let others = [
        ChernVector::from_ratios([(1, 1), (1, 1), (1, 2), (0, 1)]),
        ChernVector::from_ratios([(1, 1), (-1, 1), (1, 2), (0, 1)]),
        ChernVector::from_ratios([(0, 1), (1, 1), (-1, 2), (0, 1)]),
    ];
    for w in others {
        let eq = wall::wall_equation(&v, &w)?;
        let sample = wall::wall_sample(&eq, &qi(-1), &qi(1), 9)?;
        println!("w = {w}:  {eq}");
        for pt in &sample.points {
            let p = TiltParameter::new(pt.alpha_sq.clone(), pt.beta.clone())?;
            assert_eq!(tilt::slope_nu_hat(&v, &p)?, tilt::slope_nu_hat(&w, &p)?);
            println!("    beta = {:>5}  alpha^2 = {}", pt.beta, pt.alpha_sq);
        }
        for root in &sample.vertical {
            println!("    vertical: {root:?}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
