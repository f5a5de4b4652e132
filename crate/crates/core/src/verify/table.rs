use super::checks::Check;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowStatus {
    Verified,
    Failed,
    /// Topological statement; only indirect numerical evidence is given.
    NotReproducible,
}

impl RowStatus {
    pub fn tag(self) -> &'static str {
        match self {
            RowStatus::Verified => "verified",
            RowStatus::Failed => "FAILED",
            RowStatus::NotReproducible => "not reproducible, surrogate evidence only",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub property: String,
    pub positive: String,
    pub negative: String,
    /// Names of the checks backing the row.
    pub evidence: String,
    pub status: RowStatus,
}

/// The properties of `C_a` for `a > 0` and `a < 0`, each tied to the
/// checks that support it.
pub fn table_rows(checks: &[Check]) -> Vec<TableRow> {
    let row = |property: &str, positive: &str, negative: &str, names: &[&str], topological: bool| {
        let ok = names
            .iter()
            .all(|n| checks.iter().find(|c| c.name == *n).is_some_and(|c| c.passed));
        let status = match (ok, topological) {
            (false, _) => RowStatus::Failed,
            (true, true) => RowStatus::NotReproducible,
            (true, false) => RowStatus::Verified,
        };
        TableRow {
            property: property.to_string(),
            positive: positive.to_string(),
            negative: negative.to_string(),
            evidence: names.join(", "),
            status,
        }
    };
    let axes = "the real and imaginary axes are invariant and the Julia set is symmetric about both";
    let critical = "roots and poles are double critical points; four simple non-real critical \
                    points c, -c, conj(c), -conj(c)";
    vec![
        row(
            "axis invariance and symmetry",
            axes,
            axes,
            &["oddness-and-conjugation", "imaginary-axis-conjugacy", "raster-symmetry"],
            false,
        ),
        row(
            "critical points",
            critical,
            critical,
            &["critical-points"],
            false,
        ),
        row(
            "extraneous fixed points",
            "six, all real and repelling",
            "six: four real, two purely imaginary, all repelling",
            &["fixed-point-census", "extraneous-census", "lambda-floor", "lambda-tilde-floor"],
            false,
        ),
        row(
            "unbounded immediate basins",
            "the immediate basins of 1 and -1",
            "the immediate basins of 1, -1, sqrt(a) and -sqrt(a)",
            &["rays-in-basins"],
            false,
        ),
        row(
            "simply connected immediate basins",
            "at least two",
            "at least two; those of sqrt(a) and -sqrt(a)",
            &["raster-symmetry"],
            true,
        ),
        row(
            "Herman rings",
            "none",
            "none",
            &["no-indifferent-fixed-point", "raster-symmetry"],
            true,
        ),
        row(
            "invariant Siegel disks",
            "none: no fixed point is indifferent",
            "none: no fixed point is indifferent",
            &["no-indifferent-fixed-point", "lambda-floor", "lambda-tilde-floor"],
            false,
        ),
    ]
}
