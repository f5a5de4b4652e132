//! The verification sweep: every check in [`checks`] over a seeded set of
//! parameters, summarized against the table of properties of `C_a`.

pub mod checks;
mod table;

pub use checks::Check;
pub use table::{table_rows, RowStatus, TableRow};

use crate::numerics::{real, Cx};
use crate::par::Execution;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const PROFILE_PARAMETERS: [f64; 6] = [0.1, -0.1, 0.5, -0.5, 0.9, -0.9];
pub const TILDE_PARAMETERS: [f64; 4] = [0.1, 1.0 / 3.0, 0.5, 0.9];
pub const CYCLE_PARAMETERS: [f64; 3] = [0.1, 0.5, 0.9];
pub const FIGURE_PARAMETERS: [f64; 2] = [0.5, -0.5];

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    /// Parameters drawn per sign.
    pub sweep: usize,
    pub seed: u64,
    /// Replaces the drawn parameters when set.
    pub params: Option<Vec<f64>>,
    /// Adds this to the linear numerator coefficient of the map used by
    /// the pointwise checks; the oddness check must then fail.
    pub perturb: Option<f64>,
    pub points_per_parameter: usize,
    pub raster_size: usize,
    pub exec: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            sweep: 20,
            seed: 42,
            params: None,
            perturb: None,
            points_per_parameter: 1000,
            raster_size: 200,
            exec: Execution::default(),
        }
    }
}

/// `n` parameters uniform in `(0.05, 0.95)`, then `n` uniform in
/// `(-0.95, -0.05)`, from a ChaCha8 stream seeded with `seed`.
pub fn sweep_parameters(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pos: Vec<f64> = (0..n).map(|_| rng.random_range(0.05..0.95)).collect();
    let neg: Vec<f64> = (0..n).map(|_| -rng.random_range(0.05..0.95)).collect();
    pos.into_iter().chain(neg).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub parameters: Vec<f64>,
    pub checks: Vec<Check>,
    pub table: Vec<TableRow>,
}

#[derive(Serialize)]
struct FailureEntry<'a> {
    check: &'a str,
    detail: &'a str,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One line per check, the table, then a JSON failure list.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("parameters: {}\n", self.parameters.len()));
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {}: {}\n", c.name, c.evidence));
            for f in &c.failures {
                out.push_str(&format!("    {f}\n"));
            }
        }
        out.push_str("\nproperties of C_a\n");
        for r in &self.table {
            out.push_str(&format!("[{}] {}\n", r.status.tag(), r.property));
            if r.positive == r.negative {
                out.push_str(&format!("    both signs: {}\n", r.positive));
            } else {
                out.push_str(&format!("    a > 0: {}\n    a < 0: {}\n", r.positive, r.negative));
            }
            out.push_str(&format!("    evidence: {}\n", r.evidence));
        }
        let failures: Vec<FailureEntry> = self
            .checks
            .iter()
            .flat_map(|c| {
                c.failures.iter().map(move |f| FailureEntry {
                    check: &c.name,
                    detail: f,
                })
            })
            .collect();
        out.push_str(&serde_json::json!({ "failures": failures }).to_string());
        out.push('\n');
        out
    }
}

fn union(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut v: Vec<f64> = a.to_vec();
    for &x in b {
        if !v.contains(&x) {
            v.push(x);
        }
    }
    v
}

pub fn run_verify(cfg: &VerifyConfig) -> VerifySummary {
    let params = cfg
        .params
        .clone()
        .unwrap_or_else(|| sweep_parameters(cfg.sweep, cfg.seed));
    let n = cfg.points_per_parameter;
    let rng = |offset: u64| ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(offset));
    let complex: Vec<Cx> = params.iter().map(|&a| real(a)).collect();
    let cycle = union(&CYCLE_PARAMETERS, &params);
    let rays = union(&FIGURE_PARAMETERS, &params);
    let checks = vec![
        checks::infinity_multiplier(&complex),
        checks::fixed_point_census(&complex),
        checks::extraneous_census(&params),
        checks::critical_structure(&complex),
        checks::no_indifferent(&params),
        checks::lambda_floor(&params, &PROFILE_PARAMETERS),
        checks::lambda_tilde_floor(&params, &TILDE_PARAMETERS),
        checks::symmetry_pointwise(&params, &mut rng(1), n, cfg.perturb),
        checks::axis_conjugacy(&params, &mut rng(2), n),
        checks::closed_form_agreement(&params, &mut rng(3), n, cfg.perturb),
        checks::derivative_check(&params, &mut rng(4), n),
        checks::scaling_theorem(&mut rng(5), n),
        checks::reduction_conjugacy(&mut rng(6), n),
        checks::two_cycle(&cycle),
        checks::rays(&rays, cfg.exec),
        checks::raster(&FIGURE_PARAMETERS, cfg.raster_size, cfg.exec),
    ];
    let table = table_rows(&checks);
    VerifySummary {
        parameters: params,
        checks,
        table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_is_deterministic() {
        let p = sweep_parameters(20, 42);
        assert_eq!(p, sweep_parameters(20, 42));
        assert_eq!(p.len(), 40);
        assert!(p[..20].iter().all(|&a| a > 0.05 && a < 0.95));
        assert!(p[20..].iter().all(|&a| a < -0.05 && a > -0.95));
        assert_ne!(p, sweep_parameters(20, 43));
    }

    #[test]
    fn restricted_run_passes() {
        let cfg = VerifyConfig {
            params: Some(vec![0.9]),
            points_per_parameter: 200,
            raster_size: 40,
            ..VerifyConfig::default()
        };
        let s = run_verify(&cfg);
        assert!(s.passed(), "{}", s.render());
        assert!(s.render().ends_with("{\"failures\":[]}\n"));
    }

    #[test]
    fn perturbed_run_fails_oddness() {
        let cfg = VerifyConfig {
            params: Some(vec![0.5]),
            perturb: Some(1e-3),
            points_per_parameter: 100,
            raster_size: 20,
            ..VerifyConfig::default()
        };
        let s = run_verify(&cfg);
        assert!(!s.passed());
        assert!(!s.check("oddness-and-conjugation").unwrap().passed);
    }
}
