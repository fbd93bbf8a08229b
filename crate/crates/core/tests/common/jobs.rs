//! A fixed corpus of jobs, each expressible both as flags and as a job file,
//! and a generator of random command lines.

use proptest::prelude::*;

pub struct Job {
    pub name: &'static str,
    pub command: &'static str,
    pub fields: &'static [(&'static str, &'static str)],
}

pub const CORPUS: &[Job] = &[
    Job { name: "slope_torsion_free", command: "slope", fields: &[("v", "1,0,-1,1"), ("alpha_sq", "3"), ("beta", "0"), ("D", "1")] },
    Job { name: "slope_shift", command: "slope", fields: &[("v", "-1,1,-1/2,1/6"), ("alpha_sq", "2"), ("beta", "-1/2"), ("D", "2")] },
    Job { name: "charge_line", command: "charge", fields: &[("v", "0,0,1,-1"), ("alpha_sq", "3")] },
    Job { name: "charge_rank_two", command: "charge", fields: &[("v", "2,1,-3/2,1/3"), ("alpha_sq", "4/9"), ("beta", "1/3"), ("D", "5")] },
    Job { name: "discriminant_rank_two", command: "discriminant", fields: &[("v", "2,3,-1,0"), ("alpha_sq", "5/7"), ("beta", "1/3"), ("D", "4")] },
    Job { name: "discriminant_structure_sheaf", command: "discriminant", fields: &[("v", "1,0,0,0"), ("alpha_sq", "1")] },
    Job { name: "bmt_strong_equality", command: "bmt", fields: &[("v", "-1,2,-2,4/3"), ("alpha_sq", "12")] },
    Job { name: "bmt_weak", command: "bmt", fields: &[("v", "-1,2,-2,4/3"), ("alpha_sq", "4"), ("form", "weak")] },
    Job { name: "line_bundle_minus_one", command: "line-bundle", fields: &[("k", "-1")] },
    Job { name: "line_bundle_minus_five", command: "line-bundle", fields: &[("k", "-5"), ("alpha_sq", "2"), ("D", "3")] },
    Job { name: "two_c_ideal_twist", command: "two-c", fields: &[("v", "1,2,1,1/3"), ("alpha_sq", "6")] },
    Job { name: "two_c_supplied_mu", command: "two-c", fields: &[("v", "2,2,1,0"), ("alpha_sq", "3"), ("beta", "1/2"), ("mu_max_sq", "4")] },
    Job { name: "ideal_sheaf_line", command: "ideal-sheaf", fields: &[("D", "1"), ("d", "1"), ("ch3_oc", "-1")] },
    Job { name: "ideal_sheaf_genus", command: "ideal-sheaf", fields: &[("D", "4"), ("d", "5"), ("genus", "2"), ("hypersurface", "true")] },
    Job { name: "ideal_sheaf_no_nu_zero", command: "ideal-sheaf", fields: &[("D", "3"), ("d", "7"), ("ch3_oc", "-2")] },
    Job { name: "family_two_two", command: "p3-family", fields: &[("n", "2"), ("m", "2")] },
    Job { name: "family_three_one", command: "p3-family", fields: &[("n", "3"), ("m", "1")] },
    Job { name: "search_threshold", command: "search", fields: &[("v", "-1,1,-1/2,1/6"), ("alpha_sq", "3"), ("rank_bound", "3"), ("ch2_bound", "3")] },
    Job { name: "search_pruned", command: "search", fields: &[("v", "-1,1,-1/2,1/6"), ("alpha_sq", "2"), ("beta", "1/3"), ("rank_bound", "2"), ("ch2_bound", "2"), ("prune", "true"), ("quotient_positivity", "true")] },
    Job { name: "wall_rank_one", command: "wall", fields: &[("v", "1,0,0,0"), ("w", "1,1,1/2,0"), ("beta_lo", "0"), ("beta_hi", "1"), ("count", "5")] },
];

const INT_FIELDS: &[&str] = &["n", "m", "genus", "rank_bound", "count"];

impl Job {
    pub fn flags(&self) -> Vec<String> {
        let mut args = vec!["tiltstab".to_string(), self.command.to_string()];
        for (k, v) in self.fields {
            let flag = format!("--{}", k.replace('_', "-"));
            match *v {
                "true" => args.push(flag),
                "false" => {}
                _ => {
                    args.push(flag);
                    args.push(v.to_string());
                }
            }
        }
        args
    }

    /// Job file text. `dashed` writes keys with `-` instead of `_`.
    pub fn jobfile(&self, dashed: bool) -> String {
        let mut out = format!("# {}\ncommand = \"{}\"\n", self.name, self.command);
        for (k, v) in self.fields {
            let key = if dashed { k.replace('_', "-") } else { k.to_string() };
            let value = if *v == "true" || *v == "false" || (INT_FIELDS.contains(k) && v.parse::<i64>().is_ok()) {
                v.to_string()
            } else if k == &"v" || k == &"w" {
                let parts: Vec<String> = v.split(',').map(|p| format!("\"{p}\"")).collect();
                format!("[{}]", parts.join(", "))
            } else {
                format!("\"{v}\"")
            };
            out.push_str(&format!("{key} = {value}\n"));
        }
        out
    }
}

fn small_rational() -> impl Strategy<Value = String> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| format!("{n}/{d}"))
}

pub fn job_args() -> impl Strategy<Value = Vec<String>> {
    let vec4 = || proptest::collection::vec(small_rational(), 4).prop_map(|v| v.join(","));
    let alpha = || (1i64..=20, 1i64..=5).prop_map(|(n, d)| format!("{n}/{d}"));
    prop_oneof![
        (vec4(), alpha(), small_rational()).prop_map(|(v, a, b)| vec!["discriminant".into(), "--v".into(), v, "--alpha-sq".into(), a, "--beta".into(), b]),
        (vec4(), alpha(), small_rational()).prop_map(|(v, a, b)| vec!["bmt".into(), "--v".into(), v, "--alpha-sq".into(), a, "--beta".into(), b]),
        (vec4(), alpha(), small_rational()).prop_map(|(v, a, b)| vec!["charge".into(), "--v".into(), v, "--alpha-sq".into(), a, "--beta".into(), b]),
        (vec4(), vec4(), small_rational()).prop_map(|(v, w, lo)| vec!["wall".into(), "--v".into(), v, "--w".into(), w, "--beta-lo".into(), lo, "--beta-hi".into(), "3".into()]),
        (1i64..=6, 1i64..=6).prop_map(|(n, m)| vec!["p3-family".into(), "--n".into(), n.to_string(), "--m".into(), m.to_string()]),
    ]
}
