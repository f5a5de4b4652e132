//! The analysis report: fixed and critical points, axis data and
//! per-parameter checks, serialized as JSON with 17 significant digits.

use crate::axis::{
    axis_zeros, find_two_cycle, imaginary_root, ray_checks, ExtraneousLayout,
};
use crate::chebyshev::{
    critical_points, fixed_points, free_critical_values, Classification, CriticalKind, FixedKind,
    Point,
};
use crate::numerics::{cx, real, CaseTag, Cx, QuarticReduction};
use crate::verify::checks::{self, Check};
use crate::{Error, Result};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use std::io;

pub const SCHEMA_VERSION: u32 = 1;

/// Points sampled by the pointwise checks of a single-parameter report.
const REPORT_POINTS: usize = 200;
const REPORT_SEED: u64 = 42;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<Cx> for Complex {
    fn from(z: Cx) -> Self {
        Complex { re: z.re, im: z.im }
    }
}

impl From<Complex> for Cx {
    fn from(c: Complex) -> Self {
        cx(c.re, c.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reduction {
    /// Input coefficients, leading first.
    pub input: Vec<Complex>,
    pub affine_shift: Complex,
    pub scale_lambda: Complex,
    pub pre_scale: Complex,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixedPointEntry {
    /// `None` for the point at infinity.
    pub location: Option<Complex>,
    pub kind: FixedKind,
    pub multiplier: Complex,
    pub modulus: f64,
    pub classification: Classification,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalEntry {
    pub location: Complex,
    pub multiplicity: u32,
    pub kind: CriticalKind,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalValueEntry {
    pub point: Complex,
    /// `None` when the value is infinity.
    pub value: Option<Complex>,
    /// Value rebuilt from the polynomials `R(a)` and `S(a)`; real `a` only.
    pub reconstructed: Option<Complex>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "sign", rename_all = "lowercase")]
pub enum LayoutSummary {
    Positive { a1: f64, a2: f64, a3: f64 },
    Negative { b1: f64, b2: f64, b3: f64, b1_equals_b3: bool },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoCycleSummary {
    pub y_low: f64,
    pub partner: f64,
    pub cycle_multiplier: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RaySummary {
    pub label: String,
    pub lo: f64,
    pub hi: f64,
    pub samples: usize,
    pub violations: usize,
}

/// On-axis data for real `a` in `(-1, 1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxisSummary {
    pub layout: LayoutSummary,
    pub ordering_holds: bool,
    /// Positive zeros of `C_a` on the real axis (the negatives are zeros too).
    pub real_zeros: Vec<f64>,
    /// Positive `y` with `C_a(iy) = 0`.
    pub imaginary_zeros: Vec<f64>,
    pub zeta: Option<f64>,
    pub two_cycle: Option<TwoCycleSummary>,
    pub rays: Vec<RaySummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    /// `None` when the input quartic does not reduce to the family.
    pub parameter: Option<Complex>,
    pub case_tag: CaseTag,
    pub disposition: String,
    pub reduction: Option<Reduction>,
    pub fixed_points: Vec<FixedPointEntry>,
    pub critical_points: Vec<CriticalEntry>,
    pub free_critical_values: Vec<CriticalValueEntry>,
    pub axis: Option<AxisSummary>,
    pub checks: Vec<Check>,
}

impl AnalysisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

fn is_real_family_parameter(a: Cx) -> bool {
    a.im == 0.0 && a.re > -1.0 && a.re < 1.0 && a.re != 0.0
}

fn axis_summary(a: f64) -> Result<AxisSummary> {
    let layout = ExtraneousLayout::new(a)?;
    let (real_zeros, imaginary_zeros) = axis_zeros(a)?;
    let (zeta, two_cycle) = if a > 0.0 {
        let c = find_two_cycle(a)?;
        (
            Some(imaginary_root(a)?),
            Some(TwoCycleSummary {
                y_low: c.y_low,
                partner: c.partner,
                cycle_multiplier: c.cycle_multiplier,
                residual: c.residual,
            }),
        )
    } else {
        (None, None)
    };
    let rays = ray_checks(a)?
        .intervals
        .into_iter()
        .map(|c| RaySummary {
            label: c.label,
            lo: c.lo,
            hi: c.hi,
            samples: c.samples,
            violations: c.violations.len(),
        })
        .collect();
    Ok(AxisSummary {
        layout: match layout {
            ExtraneousLayout::Positive { a1, a2, a3 } => LayoutSummary::Positive { a1, a2, a3 },
            ExtraneousLayout::Negative { b1, b2, b3 } => LayoutSummary::Negative {
                b1,
                b2,
                b3,
                b1_equals_b3: (b1 - b3).abs() <= 1e-12,
            },
        },
        ordering_holds: layout.ordering_holds(a),
        real_zeros,
        imaginary_zeros,
        zeta,
        two_cycle,
        rays,
    })
}

/// Checks that apply to a single parameter. Real parameters in `(-1, 1)`
/// get the full set; others only the statements that hold for every `a`.
pub fn parameter_checks(a: Cx) -> Vec<Check> {
    let mut out = vec![
        checks::infinity_multiplier(&[a]),
        checks::fixed_point_census(&[a]),
        checks::critical_structure(&[a]),
    ];
    if is_real_family_parameter(a) {
        let x = [a.re];
        let mut rng = ChaCha8Rng::seed_from_u64(REPORT_SEED);
        out.extend([
            checks::extraneous_census(&x),
            checks::no_indifferent(&x),
            checks::lambda_floor(&x, &[]),
            checks::symmetry_pointwise(&x, &mut rng, REPORT_POINTS, None),
            checks::axis_conjugacy(&x, &mut rng, REPORT_POINTS),
            checks::closed_form_agreement(&x, &mut rng, REPORT_POINTS, None),
            checks::derivative_check(&x, &mut rng, REPORT_POINTS),
            checks::rays(&x, crate::par::Execution::Sequential),
        ]);
        if a.re > 0.0 {
            out.push(checks::two_cycle(&x));
        } else {
            out.push(checks::lambda_tilde_floor(&x, &[]));
        }
    }
    out
}

/// Full report for `a`, outside `{-1, 0, 1}`.
pub fn analyze(a: Cx) -> Result<AnalysisReport> {
    if [-1.0, 0.0, 1.0].iter().any(|&e| a == real(e)) {
        return Err(Error::ParameterOutOfRange(a));
    }
    let fixed = fixed_points(a)?
        .into_iter()
        .map(|f| FixedPointEntry {
            location: f.location.finite().map(Complex::from),
            kind: f.kind,
            multiplier: f.multiplier.into(),
            modulus: f.multiplier.norm(),
            classification: f.classification,
        })
        .collect();
    let critical = critical_points(a)
        .into_iter()
        .map(|c| CriticalEntry {
            location: c.location.into(),
            multiplicity: c.multiplicity,
            kind: c.kind,
        })
        .collect();
    let values = free_critical_values(a)?
        .into_iter()
        .map(|v| CriticalValueEntry {
            point: v.point.into(),
            value: match v.value {
                Point::Finite(z) => Some(z.into()),
                Point::Infinity => None,
            },
            reconstructed: v.reconstructed.map(Complex::from),
        })
        .collect();
    let axis = if is_real_family_parameter(a) {
        Some(axis_summary(a.re)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        parameter: Some(a.into()),
        case_tag: CaseTag::Case3Generic,
        disposition: CaseTag::Case3Generic.disposition().to_string(),
        reduction: None,
        fixed_points: fixed,
        critical_points: critical,
        free_critical_values: values,
        axis,
        checks: parameter_checks(a),
    })
}

/// Report for a quartic given by its coefficients, leading first. Quartics
/// that do not reduce to the family get a report carrying only the case
/// and what is known about it.
pub fn analyze_quartic(coeffs: [Cx; 5], red: &QuarticReduction) -> Result<AnalysisReport> {
    let reduction = Reduction {
        input: coeffs.iter().map(|&c| c.into()).collect(),
        affine_shift: red.affine_shift.into(),
        scale_lambda: red.scale_lambda.into(),
        pre_scale: red.pre_scale.into(),
    };
    match (red.case_tag, red.a) {
        (CaseTag::Case3Generic, Some(a)) => {
            let mut r = analyze(a)?;
            r.reduction = Some(reduction);
            Ok(r)
        }
        (tag, _) => Ok(AnalysisReport {
            schema_version: SCHEMA_VERSION,
            parameter: None,
            case_tag: tag,
            disposition: tag.disposition().to_string(),
            reduction: Some(reduction),
            fixed_points: Vec::new(),
            critical_points: Vec::new(),
            free_critical_values: Vec::new(),
            axis: None,
            checks: Vec::new(),
        }),
    }
}

/// Pretty JSON with every float written as `{:.16e}`, which round-trips.
struct Precise<'a>(PrettyFormatter<'a>);

impl Formatter for Precise<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        write!(w, "{v:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f32) -> io::Result<()> {
        self.write_f64(w, v as f64)
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Serializes `value` as indented JSON with 17 significant digits per float.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Precise(PrettyFormatter::new()));
    value
        .serialize(&mut ser)
        .expect("report types serialize without error");
    buf.push(b'\n');
    String::from_utf8(buf).expect("JSON is UTF-8")
}
