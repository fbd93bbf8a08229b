// `m^2` thresholds for shifted line bundles `O(k)[1]` on `P^3`.

use tiltstab::criteria;
use tiltstab::rational::qi;
use tiltstab::{PolarizedGeometry, TiltParameter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let geom = PolarizedGeometry::p3();
    let p = TiltParameter::new(qi(1), qi(0))?;
    println!("  k  nu=0  stable  weak   margin");
    for k in -4..=-1 {
        let t = criteria::line_bundle_thresholds(&qi(k), &p, &geom)?;
        println!(
            "{k:>3}  {:>4}  {:>6}  {:>5}  {:>6}",
            t.m_sq_nu_zero, t.m_sq_stability, t.m_sq_weak_conj, t.bmt_margin_at_nu_zero
        );
    }
    assert!(criteria::line_bundle_thresholds(&qi(1), &p, &geom).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
