//! Command-line interface: `analyze`, `render`, `orbit` and `verify`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error
//! (including excluded parameters), 3 I/O error.

use crate::numerics::{cx, reduce_quartic, Cx};
use crate::par::{configure_threads, Execution};
use crate::raster::{iterate_orbit_traced, render_basins, to_ppm, GridSpec, OrbitOutcome, Viewport};
use crate::report::{analyze, analyze_quartic, to_json, Complex};
use crate::verify::{run_verify, VerifyConfig};
use crate::Error;

use clap::{Parser, Subcommand};
use serde::Serialize;

use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

const COMPLEX_HELP: &str = "Complex literals: `re`, `re+imi`, `re-imi`, `imi` or `re,im` \
                            (for example 0.5, 0.3+0.4i, -0.2-1e-3i, 0.3,-0.4).";

#[derive(Parser, Debug)]
#[command(name = "cheb4", version, about = "Chebyshev's method on quartics (z^2 - 1)(z^2 - a)", after_help = COMPLEX_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// JSON report: fixed and critical points, axis data, per-parameter checks.
    Analyze {
        /// Family parameter a (complex literal), outside {-1, 0, 1}.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, conflicts_with = "quartic", required_unless_present = "quartic")]
        a: Option<Cx>,
        /// Quartic coefficients c4,c3,c2,c1,c0 (real), reduced to the family first.
        #[arg(long, value_parser = parse_quartic, allow_hyphen_values = true)]
        quartic: Option<[f64; 5]>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Binary PPM (P6) of the basins of the four roots.
    Render {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a: Cx,
        /// re_min,re_max,im_min,im_max
        #[arg(long, value_parser = parse_viewport, allow_hyphen_values = true, default_value = "-2,2,-2,2")]
        viewport: Viewport,
        /// WIDTHxHEIGHT
        #[arg(long, value_parser = parse_size, default_value = "800x800")]
        size: (usize, usize),
        #[arg(long, default_value_t = 500)]
        iters: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
        /// Render on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
    /// Orbit of one seed as JSON.
    Orbit {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a: Cx,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        seed: Cx,
        #[arg(long, default_value_t = 500)]
        iters: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Maximum number of orbit points to record.
        #[arg(long, default_value_t = 64)]
        trace: usize,
    },
    /// Full verification sweep; exits 1 if any check fails.
    Verify {
        /// Parameters drawn per sign.
        #[arg(long, default_value_t = 20)]
        sweep: usize,
        #[arg(long = "seed-rng", default_value_t = 42)]
        seed_rng: u64,
        /// Comma-separated real parameters replacing the drawn ones.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Option<Vec<f64>>,
        /// Side length of the symmetry rasters.
        #[arg(long, default_value_t = 200)]
        raster_size: usize,
        #[arg(long)]
        sequential: bool,
        #[arg(long = "perturb-coeff", hide = true)]
        perturb_coeff: Option<f64>,
    },
}

/// Parses `re`, `re+imi`, `re-imi`, `imi` or `re,im`.
pub fn parse_complex(s: &str) -> Result<Cx, String> {
    let t = s.trim();
    let bad = || format!("malformed complex number `{s}`");
    let num = |x: &str| x.trim().parse::<f64>().map_err(|_| bad());
    let z = if let Some((re, im)) = t.split_once(',') {
        cx(num(re)?, num(im)?)
    } else if let Some(body) = t.strip_suffix('i') {
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        match split {
            Some(k) => {
                let im = &body[k..];
                let im = if im == "+" || im == "-" { format!("{im}1") } else { im.to_string() };
                cx(num(&body[..k])?, num(&im)?)
            }
            None if body.is_empty() || body == "+" || body == "-" => cx(0.0, num(&format!("{body}1"))?),
            None => cx(0.0, num(body)?),
        }
    } else {
        cx(num(t)?, 0.0)
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

fn parse_reals<const N: usize>(s: &str, what: &str) -> Result<[f64; N], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("malformed {what} `{s}`"))?;
    v.try_into()
        .map_err(|_| format!("{what} needs {N} comma-separated numbers, got `{s}`"))
}

fn parse_quartic(s: &str) -> Result<[f64; 5], String> {
    parse_reals(s, "quartic")
}

fn parse_viewport(s: &str) -> Result<Viewport, String> {
    let [re_min, re_max, im_min, im_max] = parse_reals(s, "viewport")?;
    Ok(Viewport {
        re_min,
        re_max,
        im_min,
        im_max,
    })
}

fn parse_size(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("malformed size `{s}`, expected WIDTHxHEIGHT");
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((w.trim().parse().map_err(|_| bad())?, h.trim().parse().map_err(|_| bad())?))
}

fn check_parameter(a: Cx) -> Result<(), String> {
    for e in [-1.0, 0.0, 1.0] {
        if a == cx(e, 0.0) {
            return Err(format!(
                "parameter a = {e} is excluded: the family degenerates at -1, 0 and 1"
            ));
        }
    }
    Ok(())
}

fn write_output(out: &Option<PathBuf>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), String> {
    match out {
        Some(path) => write_file(path, bytes),
        None => stdout.write_all(bytes).map_err(|e| format!("cannot write output: {e}")),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), String> {
    std::fs::write(path, bytes).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

#[derive(Serialize)]
struct OrbitJson {
    a: Complex,
    seed: Complex,
    outcome: OrbitOutcome,
    /// Basin label 1..=4, 0 when unresolved.
    label: u8,
    root: Option<Complex>,
    iterations: usize,
    /// `None` for the point at infinity.
    final_point: Option<Complex>,
    trajectory: Vec<Option<Complex>>,
}

fn threads_from_env() -> Result<(), String> {
    match std::env::var("CHEB4_THREADS") {
        Ok(v) if !v.trim().is_empty() => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| format!("CHEB4_THREADS must be a non-negative integer, got `{v}`"))?;
            configure_threads(n);
            Ok(())
        }
        _ => Ok(()),
    }
}

/// Runs the command line `args` (program name first), writing to the given
/// streams, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let fail = |stderr: &mut dyn Write, code: i32, msg: String| {
        let _ = writeln!(stderr, "error: {msg}");
        code
    };
    if let Err(m) = threads_from_env() {
        return fail(stderr, EXIT_USAGE, m);
    }
    match cli.command {
        Command::Analyze { a, quartic, out } => {
            let report = match (a, quartic) {
                (Some(a), _) => {
                    if let Err(m) = check_parameter(a) {
                        return fail(stderr, EXIT_USAGE, m);
                    }
                    analyze(a)
                }
                (None, Some(q)) => {
                    let coeffs = q.map(|c| cx(c, 0.0));
                    match reduce_quartic(coeffs) {
                        Ok(red) => analyze_quartic(coeffs, &red),
                        Err(e) => return fail(stderr, EXIT_USAGE, e.to_string()),
                    }
                }
                (None, None) => unreachable!("clap requires one of --a and --quartic"),
            };
            let report = match report {
                Ok(r) => r,
                Err(e @ Error::ParameterOutOfRange(_)) => return fail(stderr, EXIT_USAGE, e.to_string()),
                Err(e) => return fail(stderr, EXIT_VERIFY, e.to_string()),
            };
            if let Err(m) = write_output(&out, report.to_json().as_bytes(), stdout) {
                return fail(stderr, EXIT_IO, m);
            }
            if report.passed() {
                EXIT_OK
            } else {
                fail(stderr, EXIT_VERIFY, "a per-parameter check failed".to_string())
            }
        }
        Command::Render {
            a,
            viewport,
            size,
            iters,
            tol,
            out,
            sequential,
        } => {
            if let Err(m) = check_parameter(a) {
                return fail(stderr, EXIT_USAGE, m);
            }
            let spec = GridSpec {
                width: size.0,
                height: size.1,
                viewport,
                max_iterations: iters,
                tolerance: tol,
            };
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let grid = match render_basins(a, &spec, exec) {
                Ok(g) => g,
                Err(e) => return fail(stderr, EXIT_USAGE, e.to_string()),
            };
            if let Err(m) = write_file(&out, &to_ppm(&grid)) {
                return fail(stderr, EXIT_IO, m);
            }
            let c = grid.counts();
            let _ = writeln!(
                stdout,
                "wrote {} ({}x{}); pixels per label 0..4: {} {} {} {} {}",
                out.display(),
                spec.width,
                spec.height,
                c[0],
                c[1],
                c[2],
                c[3],
                c[4]
            );
            EXIT_OK
        }
        Command::Orbit {
            a,
            seed,
            iters,
            tol,
            trace,
        } => {
            if let Err(m) = check_parameter(a) {
                return fail(stderr, EXIT_USAGE, m);
            }
            if iters == 0 || tol.is_nan() || tol <= 0.0 {
                return fail(stderr, EXIT_USAGE, "--iters must be at least 1 and --tol positive".to_string());
            }
            let r = iterate_orbit_traced(a, seed, iters, tol, trace);
            let roots = crate::raster::Stepper::new(a).roots().to_owned();
            let json = OrbitJson {
                a: a.into(),
                seed: seed.into(),
                outcome: r.outcome,
                label: r.label(),
                root: match r.outcome {
                    OrbitOutcome::ConvergedToRoot(k) => Some(roots[k].into()),
                    _ => None,
                },
                iterations: r.iterations,
                final_point: r.final_point.finite().map(Complex::from),
                trajectory: r
                    .trajectory
                    .unwrap_or_default()
                    .into_iter()
                    .map(|p| p.finite().map(Complex::from))
                    .collect(),
            };
            match stdout.write_all(to_json(&json).as_bytes()) {
                Ok(()) => EXIT_OK,
                Err(e) => fail(stderr, EXIT_IO, e.to_string()),
            }
        }
        Command::Verify {
            sweep,
            seed_rng,
            params,
            raster_size,
            sequential,
            perturb_coeff,
        } => {
            if let Some(p) = &params {
                if let Some(bad) = p.iter().find(|&&a| !(a > -1.0 && a < 1.0 && a != 0.0)) {
                    return fail(
                        stderr,
                        EXIT_USAGE,
                        format!("parameter {bad} is outside (-1, 1) \\ {{0}}"),
                    );
                }
            }
            if raster_size == 0 {
                return fail(stderr, EXIT_USAGE, "--raster-size must be at least 1".to_string());
            }
            let cfg = VerifyConfig {
                sweep,
                seed: seed_rng,
                params,
                perturb: perturb_coeff,
                raster_size,
                exec: if sequential { Execution::Sequential } else { Execution::Parallel },
                ..VerifyConfig::default()
            };
            let summary = run_verify(&cfg);
            if let Err(e) = stdout.write_all(summary.render().as_bytes()) {
                return fail(stderr, EXIT_IO, e.to_string());
            }
            if summary.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("0.5"), Ok(cx(0.5, 0.0)));
        assert_eq!(parse_complex("-0.5"), Ok(cx(-0.5, 0.0)));
        assert_eq!(parse_complex("0.3+0.4i"), Ok(cx(0.3, 0.4)));
        assert_eq!(parse_complex("0.3-0.4i"), Ok(cx(0.3, -0.4)));
        assert_eq!(parse_complex("-1e-3-2e-1i"), Ok(cx(-1e-3, -0.2)));
        assert_eq!(parse_complex("1e+2+1e+2i"), Ok(cx(100.0, 100.0)));
        assert_eq!(parse_complex("0.5i"), Ok(cx(0.0, 0.5)));
        assert_eq!(parse_complex("-i"), Ok(cx(0.0, -1.0)));
        assert_eq!(parse_complex("2+i"), Ok(cx(2.0, 1.0)));
        assert_eq!(parse_complex("0.3,-0.4"), Ok(cx(0.3, -0.4)));
        for bad in ["", "abc", "1,2,3", "1+2", "nan", "1++2i"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn sizes_and_viewports() {
        assert_eq!(parse_size("800x600"), Ok((800, 600)));
        assert!(parse_size("800").is_err());
        assert!(parse_viewport("-1,1,-2").is_err());
        assert_eq!(parse_viewport("-1,1,-2,2").unwrap().im_max, 2.0);
    }

    #[test]
    fn excluded_parameter_exit_code() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["cheb4", "analyze", "--a", "1"], &mut o, &mut e), EXIT_USAGE);
        assert!(String::from_utf8(e).unwrap().contains("a = 1"));
    }
}
