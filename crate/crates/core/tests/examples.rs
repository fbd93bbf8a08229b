mod bmt_inequality {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bmt_inequality.rs"));
}

#[test]
fn bmt_inequality_runs() {
    bmt_inequality::run_example().expect("bmt_inequality example should run");
}

mod destabilizer_search {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/destabilizer_search.rs"));
}

#[test]
fn destabilizer_search_runs() {
    destabilizer_search::run_example().expect("destabilizer_search example should run");
}

mod discriminants {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/discriminants.rs"));
}

#[test]
fn discriminants_runs() {
    discriminants::run_example().expect("discriminants example should run");
}

mod ideal_sheaf_twist {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ideal_sheaf_twist.rs"));
}

#[test]
fn ideal_sheaf_twist_runs() {
    ideal_sheaf_twist::run_example().expect("ideal_sheaf_twist example should run");
}

mod jobfile_cli {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/jobfile_cli.rs"));
}

#[test]
fn jobfile_cli_runs() {
    jobfile_cli::run_example().expect("jobfile_cli example should run");
}

mod line_bundle_thresholds {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/line_bundle_thresholds.rs"));
}

#[test]
fn line_bundle_thresholds_runs() {
    line_bundle_thresholds::run_example().expect("line_bundle_thresholds example should run");
}

mod p3_family {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/p3_family.rs"));
}

#[test]
fn p3_family_runs() {
    p3_family::run_example().expect("p3_family example should run");
}

mod pseudo_walls {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pseudo_walls.rs"));
}

#[test]
fn pseudo_walls_runs() {
    pseudo_walls::run_example().expect("pseudo_walls example should run");
}

mod slopes_and_charge {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/slopes_and_charge.rs"));
}

#[test]
fn slopes_and_charge_runs() {
    slopes_and_charge::run_example().expect("slopes_and_charge example should run");
}

mod two_c_criterion {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/two_c_criterion.rs"));
}

#[test]
fn two_c_criterion_runs() {
    two_c_criterion::run_example().expect("two_c_criterion example should run");
}
