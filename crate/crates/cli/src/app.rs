//! Command dispatch. [`run`] never prints or exits; `main` does both.

use std::path::PathBuf;

use chgeom::elements::parse_elements;
use chgeom::{coboundary, cocycle_eval, CHPoint, GeomError};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sphtorsion::chernweil::sphere_bundle_torsion_class;
use sphtorsion::cpn::{evaluate_torsion_class, nonvanishing_report};
use sphtorsion::torsion::{circle_torsion, equivariant_euler, torsion_series};
use sphtorsion::zeta::zeta_eval;
use sphtorsion::DEFAULT_MAX_DEGREE;

use crate::output::Graded;
use crate::repexpr::parse_rep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;

const DEFAULT_DIGITS: u32 = 16;

#[derive(Debug, Parser)]
#[command(name = "sphtorsion", version, about = "Exact higher torsion of sphere bundles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Substitute numeric zeta values into coefficients.
    #[arg(long, global = true)]
    numeric: bool,
    /// Significant digits for --numeric; fractional digits for `zeta`.
    #[arg(long, global = true)]
    digits: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Torsion series of a torus representation sphere.
    Torsion {
        #[arg(long)]
        rep: String,
        /// Truncation degree in the weight variables.
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_deg: u32,
    },
    /// Torsion class of the unit sphere bundle of a rank-n complex bundle.
    Class {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_deg: u32,
    },
    /// Torsion class of the unit tangent sphere bundle of CP^n.
    Cpn {
        #[arg(long)]
        n: usize,
        /// Also list which degrees 4j are nonzero.
        #[arg(long)]
        report: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_deg: u32,
    },
    /// Orbit types of a representation sphere.
    Orbits {
        #[arg(long)]
        rep: String,
    },
    /// Torsion of the circle acting with weight r.
    Circle {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_deg: u32,
    },
    /// Value of zeta at an odd integer.
    Zeta {
        #[arg(long)]
        k: u32,
    },
    /// Integral of the k-th power of the Kähler form over the geodesic
    /// simplex spanned by an orbit of the origin.
    Cocycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        elements: PathBuf,
        /// Gauss–Legendre nodes per axis and chamber.
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Read 2k+2 elements and evaluate the coboundary instead.
        #[arg(long)]
        check_coboundary: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

struct Failure(i32, String);

impl From<sphtorsion::Error> for Failure {
    fn from(e: sphtorsion::Error) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        let code = match e {
            GeomError::NoConvergence { .. } | GeomError::Degenerate(_) => EXIT_SOLVER,
            _ => EXIT_INPUT,
        };
        Failure(code, e.to_string())
    }
}

fn input(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, msg.into())
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => Outcome::ok(out),
        Err(Failure(code, msg)) => Outcome::fail(code, msg),
    }
}

fn render(cli: &Cli, g: &Graded) -> String {
    let digits = cli.numeric.then(|| cli.digits.unwrap_or(DEFAULT_DIGITS));
    if cli.json {
        pretty(&g.to_json(digits))
    } else {
        g.to_text(digits)
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    if cli.digits == Some(0) {
        return Err(input("--digits must be positive"));
    }
    match &cli.command {
        Command::Torsion { rep, max_deg } => {
            let rep = parse_rep(rep).map_err(|e| input(e.to_string()))?.evaluate()?;
            Ok(render(cli, &Graded::from_poly(&torsion_series(&rep, *max_deg)?)))
        }
        Command::Class { n, max_deg } => {
            Ok(render(cli, &Graded::from_class(&sphere_bundle_torsion_class(*n, *max_deg)?)))
        }
        Command::Cpn { n, report, max_deg } => {
            let g = Graded::from_cpn(&evaluate_torsion_class(*n, *max_deg)?);
            if !report {
                return Ok(render(cli, &g));
            }
            let rep = nonvanishing_report(*n)?;
            if cli.json {
                let digits = cli.numeric.then(|| cli.digits.unwrap_or(DEFAULT_DIGITS));
                let flags: serde_json::Map<String, Value> =
                    rep.iter().map(|(d, b)| (d.to_string(), json!(b))).collect();
                Ok(pretty(&json!({ "class": g.to_json(digits), "nonzero": flags })))
            } else {
                let mut out = render(cli, &g);
                for (d, nonzero) in rep {
                    out.push_str(&format!("T[{d}]: {}\n", if nonzero { "nonzero" } else { "zero" }));
                }
                Ok(out)
            }
        }
        Command::Orbits { rep } => {
            let rep = parse_rep(rep).map_err(|e| input(e.to_string()))?.evaluate()?;
            let orbits = equivariant_euler(&rep)?;
            if cli.json {
                let list: Vec<Value> = orbits
                    .iter()
                    .map(|o| {
                        json!({
                            "weight": o.weight().coords(),
                            "multiplicity": o.multiplicity(),
                            "quotient": o.quotient(),
                            "euler_number": o.euler_number(),
                            "stabilizer_kernel": o.stabilizer_kernel(),
                        })
                    })
                    .collect();
                Ok(pretty(&Value::Array(list)))
            } else {
                Ok(orbits.iter().map(|o| format!("{o}\n")).collect())
            }
        }
        Command::Circle { r, max_deg } => {
            Ok(render(cli, &Graded::from_poly(&circle_torsion(*r, *max_deg)?)))
        }
        Command::Zeta { k } => {
            let digits = cli.digits.unwrap_or(DEFAULT_DIGITS);
            let value = zeta_eval(*k, digits)?.to_string();
            if cli.json {
                Ok(pretty(&json!({ "k": k, "digits": digits, "value": value })))
            } else {
                Ok(value + "\n")
            }
        }
        Command::Cocycle {
            n,
            k,
            elements,
            order,
            check_coboundary,
        } => {
            let text = std::fs::read_to_string(elements)
                .map_err(|e| input(format!("{}: {e}", elements.display())))?;
            let els = parse_elements(&text)?;
            if let Some(g) = els.iter().find(|g| g.n() != *n) {
                return Err(input(format!("elements act on CH^{}, expected CH^{n}", g.n())));
            }
            let base = CHPoint::origin(*n);
            if *check_coboundary {
                let cb = coboundary(&els, &base, *k, *order)?;
                if cli.json {
                    Ok(pretty(&json!({
                        "faces": cb.faces,
                        "residual": cb.residual(),
                        "max_face": cb.max_face(),
                    })))
                } else {
                    let mut out = String::new();
                    for (i, c) in cb.faces.iter().enumerate() {
                        out.push_str(&format!("face {i}: {c:e}\n"));
                    }
                    out.push_str(&format!("residual = {:e}\nmax face = {:e}\n", cb.residual(), cb.max_face()));
                    Ok(out)
                }
            } else {
                let c = cocycle_eval(&els, &base, *k, *order)?;
                if cli.json {
                    Ok(pretty(&json!({ "value": c })))
                } else {
                    Ok(format!("C = {c:e}\n"))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &str) -> Outcome {
        run(std::iter::once("sphtorsion").chain(args.split_whitespace()))
    }

    #[test]
    fn cpn_two() {
        let o = go("cpn --n 2");
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("T[4] = 45/8 * z3 * H^2"));
    }

    #[test]
    fn zeta_digits() {
        assert_eq!(go("zeta --k 3 --digits 12").stdout, "1.202056903160\n");
        assert_eq!(go("zeta --k 4").code, EXIT_INPUT);
        assert_eq!(go("zeta --k 3 --digits 0").code, EXIT_INPUT);
    }

    #[test]
    fn fixed_point_is_input_error() {
        let o = run(["sphtorsion", "torsion", "--rep", "{(0,0)}"]);
        assert_eq!(o.code, EXIT_INPUT);
        assert!(o.stderr.contains("fixed point"), "{}", o.stderr);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(go("frobnicate").code, EXIT_INPUT);
        assert_eq!(go("class").code, EXIT_INPUT);
        assert_eq!(go("--help").code, EXIT_OK);
        assert_eq!(go("class --n 0").code, EXIT_INPUT);
    }

    #[test]
    fn report() {
        let o = go("cpn --n 4 --report");
        assert!(o.stdout.contains("T[4]: nonzero") && o.stdout.contains("T[8]: nonzero"));
        assert!(o.stdout.contains("T[12]: zero"));
    }

    #[test]
    fn orbits() {
        let o = run(["sphtorsion", "orbits", "--rep", "std(2) + std(2)"]);
        assert_eq!(o.stdout.lines().count(), 2);
        assert!(o.stdout.contains("CP^1"));
    }
}
