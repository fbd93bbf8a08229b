// Rank-three reflexive sheaves on `P^3` whose shifted twists violate the
// strong BMT inequality at `nu = 0`, with the closed-form bound compared.

use tiltstab::criteria;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, m) in [(3, 1), (2, 2), (4, 2)] {
        let r = criteria::p3_unstable_family(n, m)?;
        let c3 = r.member_c3();
        println!(
            "(n, m) = ({n}, {m}): c2 = {}, {} members, c3 in [{:?}, {:?}], displayed bound keeps {}{}",
            r.c2,
            c3.len(),
            c3.first(),
            c3.last(),
            r.displayed_c3.len(),
            if r.discrepancy { "  [discrepancy]" } else { "" }
        );
        assert!(r.members.iter().all(|f| f.nu_zero_verified && f.bmt_violated));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
