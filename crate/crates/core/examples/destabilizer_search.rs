// Numerical destabilizers of `O(-1)[1]` on `P^3` on either side of the
// stability threshold `alpha^2 = 3`.

use tiltstab::rational::qi;
use tiltstab::search::{self, SearchBounds, SearchOptions};
use tiltstab::{ChernVector, PolarizedGeometry, TiltParameter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let geom = PolarizedGeometry::p3();
    let v = ChernVector::line_bundle(&qi(-1)).shift(1);
    let bounds = SearchBounds::new(6, qi(6))?;
    for a in [2, 3, 4] {
        let p = TiltParameter::new(qi(a), qi(0))?;
        let opts = SearchOptions {
            workers: 4,
            prune_line_bundle_bound: true,
            ..SearchOptions::default()
        };
        let out = search::destabilizer_search_with(&v, &p, &geom, &bounds, &opts)?;
        println!(
            "alpha^2 = {a}: nu_hat(v) = {}, {} strict, {} equal-slope, {} infinite-slope, {} pruned",
            out.nu_hat_v,
            out.strict().count(),
            out.finite.len() - out.strict().count(),
            out.infinite_slope.len(),
            out.pruned
        );
        for c in out.finite.iter().take(3) {
            println!("    w = {}  nu_hat = {}", c.w, c.nu_hat_w);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
