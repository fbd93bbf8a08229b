// Strong and weak BMT inequalities for `O(-2)[1]` along `alpha^2`.

use tiltstab::rational::qi;
use tiltstab::tilt::{self, BmtForm};
use tiltstab::{ChernVector, TiltParameter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let v = ChernVector::line_bundle(&qi(-2)).shift(1);
    for a in [1, 4, 12, 20] {
        let p = TiltParameter::new(qi(a), qi(0))?;
        let strong = tilt::bmt_check(&v, &p, BmtForm::Strong);
        let weak = tilt::bmt_check(&v, &p, BmtForm::Weak);
        println!(
            "alpha^2 = {a:>2}  nu = 0: {:5}  strong margin {:>5}  weak margin {:>5}",
            strong.nu_hat_zero, strong.margin, weak.margin
        );
    }
    let at_nu_zero = tilt::bmt_check(&v, &TiltParameter::new(qi(12), qi(0))?, BmtForm::Strong);
    assert!(at_nu_zero.nu_hat_zero && at_nu_zero.margin == qi(0));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
