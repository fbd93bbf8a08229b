// The discriminants `Delta` and `Delta_bar`, computed two ways, and the
// positivity check.

use tiltstab::rational::{q, qi};
use tiltstab::tilt;
use tiltstab::{ChernVector, PolarizedGeometry, TiltParameter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let geom = PolarizedGeometry::new(qi(5))?;
    let v = ChernVector::from_ratios([(2, 1), (1, 1), (-3, 2), (1, 3)]);
    for beta in [qi(0), q(1, 3), q(-7, 2)] {
        let p = TiltParameter::new(q(4, 9), beta)?;
        let def = tilt::delta_bar_definitional(&v, &p, &geom);
        let closed = tilt::delta_bar_closed_form(&v, &p, &geom);
        assert_eq!(def, closed);
        let pos = tilt::positivity_check(&v, &p, &geom);
        println!(
            "beta = {:>4}  Delta = alpha * {}  Delta_bar = {def}  semistable possible: {}",
            p.beta(),
            tilt::discriminant_delta(&v, &p, &geom),
            pos.delta_bar_ok
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
