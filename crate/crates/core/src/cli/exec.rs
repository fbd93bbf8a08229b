//! Executes a [`JobSpec`] against the library and wraps the result.

use serde::Serialize;
use serde_json::{json, Value};

use super::job::{CommandName, JobSpec};
use super::report::{ReportEnvelope, SCHEMA_VERSION};
use crate::chern::{ChernVector, CurveData, PolarizedGeometry, TiltParameter};
use crate::criteria;
use crate::search::{self, SearchBounds, SearchOptions};
use crate::tilt;
use crate::wall;
use crate::{Error, Result};

const PIC: &str = "Pic(X) = Z H; all classes are multiples of powers of H";

struct Report {
    results: Value,
    assumptions: Vec<String>,
    warnings: Vec<String>,
    proposition: Option<&'static str>,
}

impl Report {
    fn new(results: impl Serialize) -> Self {
        Self {
            results: serde_json::to_value(results).expect("results serialize"),
            assumptions: vec![PIC.to_string()],
            warnings: Vec::new(),
            proposition: None,
        }
    }

    fn assume(mut self, a: &str) -> Self {
        self.assumptions.push(a.to_string());
        self
    }

    fn warn_if(mut self, cond: bool, w: &str) -> Self {
        if cond {
            self.warnings.push(w.to_string());
        }
        self
    }

    fn criterion(mut self, p: &'static str) -> Self {
        self.proposition = Some(p);
        self
    }
}

fn geometry(job: &JobSpec) -> Result<PolarizedGeometry> {
    let degree = job.rational("D").expect("D has a default").clone();
    PolarizedGeometry::with_lattice(degree, job.lattice().expect("lattice has a default"))
}

fn parameter(job: &JobSpec) -> Result<TiltParameter> {
    TiltParameter::new(
        job.rational("alpha_sq").expect("alpha_sq resolved").clone(),
        job.rational("beta").expect("beta resolved").clone(),
    )
}

fn vector(job: &JobSpec, key: &str) -> ChernVector {
    let xs = job.vector(key).expect("vector resolved");
    ChernVector::new(xs[0].clone(), xs[1].clone(), xs[2].clone(), xs[3].clone())
}

fn required<T>(x: Option<T>, key: &str) -> T {
    x.unwrap_or_else(|| panic!("{key} resolved by JobSpec"))
}

pub fn execute(job: &JobSpec, workers: usize) -> Result<ReportEnvelope> {
    let report = match job.command {
        CommandName::Slope => {
            let (v, p, g) = (vector(job, "v"), parameter(job)?, geometry(job)?);
            Report::new(json!({
                "twisted": v.twist_by_b(p.beta()),
                "mu": tilt::slope_mu(&v, &p, &g)?,
                "nu_hat": tilt::slope_nu_hat(&v, &p)?,
                "nu_numerator": crate::rational::format(&tilt::tilt_numerator(&v, &p)),
            }))
        }
        CommandName::Charge => {
            let (v, p, g) = (vector(job, "v"), parameter(job)?, geometry(job)?);
            Report::new(json!({
                "central_charge": tilt::central_charge(&v, &p, &g),
                "phase_one": tilt::phase_one(&v, &p, &g)?,
            }))
            .assume("Im Z = alpha * im_coef")
        }
        CommandName::Discriminant => {
            let (v, p, g) = (vector(job, "v"), parameter(job)?, geometry(job)?);
            let f = |x| crate::rational::format(&x);
            Report::new(json!({
                "delta": f(tilt::discriminant_delta(&v, &p, &g)),
                "delta_bar": f(tilt::discriminant_delta_bar(&v, &p, &g)),
                "delta_bar_definitional": f(tilt::delta_bar_definitional(&v, &p, &g)),
                "delta_bar_closed_form": f(tilt::delta_bar_closed_form(&v, &p, &g)),
                "hodge_index_gap": f(tilt::hodge_index_gap(&v, &p, &g)),
                "positivity": tilt::positivity_check(&v, &p, &g),
            }))
            .assume("omega Delta = alpha * delta")
            .criterion("Delta_bar >= 0 for nu-semistable objects")
        }
        CommandName::Bmt => {
            let (v, p) = (vector(job, "v"), parameter(job)?);
            let verdict = tilt::bmt_check(&v, &p, job.form());
            let unset = !verdict.nu_hat_zero;
            Report::new(verdict)
                .assume("v is the class of a nu-tilt-stable object")
                .warn_if(unset, "nu(v) != 0: the inequality is only asserted at nu = 0")
                .criterion("BMT inequality")
        }
        CommandName::LineBundle => {
            let (p, g) = (parameter(job)?, geometry(job)?);
            let k = required(job.rational("k"), "k");
            Report::new(criteria::line_bundle_thresholds(k, &p, &g)?)
                .assume("B = 0")
                .criterion("line-bundle threshold criterion")
        }
        CommandName::TwoC => {
            let (v, p, g) = (vector(job, "v"), parameter(job)?, geometry(job)?);
            let supplied = job.rational("mu_max_sq").cloned();
            let given = supplied.is_some();
            let r = criteria::two_c_stability_check(&v, &p, &g, supplied)?;
            let off = !r.preconditions_ok;
            let mut rep = Report::new(r)
                .assume("v is the class of a torsion-free sheaf")
                .warn_if(off, "preconditions not met: neither criterion is conclusive")
                .criterion("twice-minimal-degree stability criterion");
            if given {
                rep = rep.assume("mu_max_sq is the square of the maximal HN slope");
            }
            rep
        }
        CommandName::IdealSheaf => {
            let g = geometry(job)?;
            let d = required(job.rational("d"), "d").clone();
            let hyper = job.flag("hypersurface");
            let curve = match (job.rational("ch3_oc"), job.int("genus")) {
                (Some(e), None) => CurveData::new(d, e.clone())?,
                (Some(e), Some(genus)) => CurveData::new(d, e.clone())?.with_genus(genus, &g, hyper)?,
                (None, Some(genus)) if hyper => CurveData::on_hypersurface(d, genus, &g)?,
                (None, Some(_)) => {
                    return Err(Error::precondition(
                        "ch3_oc",
                        "ch3_oc given, or genus on a hypersurface in P^4",
                        "genus alone determines ch3_oc only with hypersurface = true",
                    ))
                }
                (None, None) => {
                    return Err(Error::precondition("ch3_oc", "required field", "give ch3_oc or genus"))
                }
            };
            let r = criteria::ideal_sheaf_twist_report(&curve, &g, hyper)?;
            let with_genus = r.genus_route.is_some();
            let mut rep = Report::new(r)
                .assume("E = L^2 (x) I_C with Pic(X) = Z L, L = O(H), B = 0")
                .criterion("ideal-sheaf twist criterion");
            if with_genus {
                rep = rep.assume("X is a smooth degree-D hypersurface in P^4");
            }
            rep
        }
        CommandName::P3Family => {
            let n = required(job.int("n"), "n");
            let m = required(job.int("m"), "m");
            let r = criteria::p3_unstable_family(n, m)?;
            let flag = r.discrepancy;
            Report::new(r)
                .assume("X = P^3, B = 0, omega = m H")
                .assume("E is a rank-three stable reflexive sheaf with c_1 = 0 (existence not checked)")
                .warn_if(
                    flag,
                    "bound discrepancy: the displayed closed-form c_3 bound selects a different set than direct evaluation",
                )
                .criterion("rank-three reflexive family violating the BMT inequality")
        }
        CommandName::Search => {
            let (v, p, g) = (vector(job, "v"), parameter(job)?, geometry(job)?);
            let rank = required(job.int("rank_bound"), "rank_bound");
            let rank = u32::try_from(rank).map_err(|_| {
                Error::precondition("rank_bound", "0 <= rank_bound < 2^32", format!("got {rank}"))
            })?;
            let bounds = SearchBounds::new(rank, required(job.rational("ch2_bound"), "ch2_bound").clone())?;
            let opts = SearchOptions {
                quotient_positivity: job.flag("quotient_positivity"),
                prune_line_bundle_bound: job.flag("prune"),
                workers,
                ..SearchOptions::default()
            };
            Report::new(search::destabilizer_search_with(&v, &p, &g, &bounds, &opts)?)
                .assume("candidates satisfy numerical necessary conditions only")
        }
        CommandName::Wall => {
            let (v, w) = (vector(job, "v"), vector(job, "w"));
            let eq = wall::wall_equation(&v, &w)?;
            let count = required(job.int("count"), "count");
            let count = u32::try_from(count)
                .map_err(|_| Error::precondition("count", "count >= 1", format!("got {count}")))?;
            let lo = required(job.rational("beta_lo"), "beta_lo");
            let hi = required(job.rational("beta_hi"), "beta_hi");
            let sample = wall::wall_sample(&eq, lo, hi, count)?;
            Report::new(json!({
                "equation": eq,
                "display": eq.to_string(),
                "sample": sample,
            }))
            .assume("A = alpha^2; a numerical wall need not be an actual wall")
        }
    };
    Ok(ReportEnvelope {
        schema: SCHEMA_VERSION,
        command: job.command.to_string(),
        inputs: job.echo(),
        results: report.results,
        assumptions: report.assumptions,
        warnings: report.warnings,
        proposition: report.proposition.map(str::to_string),
    })
}
