// The two sufficient conditions for stability when `omega^2 tch_1 = 2c`,
// and the case split of numerical destabilizers.

use tiltstab::rational::qi;
use tiltstab::search::{self, SearchBounds};
use tiltstab::{criteria, CurveData, ChernVector, PolarizedGeometry, TiltParameter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let geom = PolarizedGeometry::p3();
    let curve = CurveData::new(qi(1), qi(-1))?;
    let e = ChernVector::ideal_sheaf_of_curve(&curve, &geom).twist(&qi(2));
    let p = TiltParameter::new(qi(6), qi(0))?;
    let r = criteria::two_c_stability_check(&e, &p, &geom, None)?;
    println!("ch(E) = {e}: c = {}, criterion 1 {:?}, criterion 2 {}", r.c, r.criterion1, r.criterion2);

    let split = search::case_split_2c(&e, &p, &geom, &SearchBounds::new(3, qi(3))?)?;
    println!(
        "(2c,0): {}  (c,c): {}  (0,2c): {}",
        split.sub_full.len(),
        split.balanced.len(),
        split.sub_zero.len()
    );
    for c in split.balanced.iter().take(3) {
        println!("  balanced candidate {} nu_hat {} strict {}", c.w, c.nu_hat_w, c.strict);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
