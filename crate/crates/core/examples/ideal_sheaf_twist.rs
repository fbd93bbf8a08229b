// `L^2 (x) I_C` for curves on hypersurfaces in `P^4`: the `nu = 0`
// parameter, the stability verdict and the genus form of the BMT bound.

use tiltstab::criteria;
use tiltstab::rational::qi;
use tiltstab::{CurveData, PolarizedGeometry};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (big_d, d, g) in [(1, 1, 0), (3, 3, 1), (4, 5, 2), (5, 9, 12)] {
        let geom = PolarizedGeometry::new(qi(big_d))?;
        let curve = CurveData::on_hypersurface(qi(d), g, &geom)?;
        let r = criteria::ideal_sheaf_twist_report(&curve, &geom, true)?;
        println!(
            "D={big_d} d={d} g={g}: ch(E) = {}  m^2 = {}  {:?}  bmt {:?}  g <= {:?}",
            r.chern_e,
            r.m_sq,
            r.stability,
            r.bmt_flag,
            r.genus_bound.map(|b| b.to_string())
        );
        if let (Some(a), Some(b)) = (r.bmt_flag, r.genus_route) {
            assert_eq!(a, b);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
