//! Command-line front end: every table and certificate as JSON or aligned text.

use std::io::Write;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::fock::ModelParams;
use crate::jack::{jack_degree, JackPair};
use crate::scalars::{parse_rational, KappaFunction, Scalar};
use crate::screening::{
    proportionality, singular_certificate, singular_vector, struct_const, Sign, StructKind,
    PROPORTIONALITY_RS_GUARD,
};
use crate::virchar::{
    felder_euler, kx_characters, kx_solver_cutoff, solve_simple_characters, top_lowest_weight,
    verify_socle_sum, CharSeries,
};
use crate::walgebra::{g_polys, kac_table, omega_poly, rep_check, simple_census};

pub const JACK_DEG_GUARD: usize = 10;
/// Largest `rs` covered by the singular-vector checks of `verify-all`.
pub const VERIFY_RS_BOUND: i64 = 8;
/// Largest `|n|` covered by the socle-sum checks of `verify-all`.
pub const VERIFY_SOCLE_N: i64 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fockjack",
    version,
    about = "Exact Jack, Fock and W-algebra certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit aligned text (default).
    #[arg(long, global = true)]
    pub text: bool,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ModelArgs {
    #[arg(long)]
    pub pp: i64,
    #[arg(long)]
    pub pm: i64,
}

impl ModelArgs {
    fn model(&self) -> Result<ModelParams> {
        ModelParams::new(self.pp, self.pm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    A,
    B,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jack polynomials P and Q of one degree.
    Jack {
        #[arg(long)]
        deg: usize,
        /// Specialize κ to a rational `p/q`; generic κ otherwise.
        #[arg(long)]
        kappa: Option<String>,
    },
    /// Screening singular vector with its certificates.
    Singvec {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Kac table of the minimal model.
    Kac {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Zero-mode polynomial ω_n in β.
    Omega {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: i64,
    },
    /// g₀, g₁, g₂ in h with root certificates.
    Gpoly {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Simple modules of the zero-mode algebra.
    Census {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        count_only: bool,
    },
    /// Structure constants a_{n,k} or b_{n,k}.
    Structconst {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Simple Virasoro characters solved from the Fock socles.
    Characters {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
    },
    /// Euler characteristic of a Felder complex.
    Felder {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
    },
    /// Full certificate suite for one model.
    VerifyAll {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
    },
}

/// Result of a subcommand before formatting.
struct Report {
    json: Value,
    text: String,
    certificates: Vec<Certificate>,
}

impl Report {
    fn plain(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            certificates: Vec::new(),
        }
    }
}

/// Validation failures exit with 2, computational failures with 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::OutOfRange(_)
        | Error::NotCoprime(..)
        | Error::SizeGuardExceeded(_)
        | Error::DegreeGuardExceeded(_)
        | Error::OutOfSector(_)
        | Error::LengthExceedsN(..)
        | Error::EmptyPartition
        | Error::PoleAtKappa(_)
        | Error::BoxOutOfDiagram(..) => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name), runs the subcommand and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let report = match execute(&cli.command, err) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let written = if cli.json {
        writeln!(out, "{}", report.json)
    } else {
        let mut text = report.text;
        for c in &report.certificates {
            text.push_str(&format!("{c}\n"));
        }
        write!(out, "{text}")
    };
    if written.is_err() {
        return 1;
    }
    let failed: Vec<&Certificate> = report.certificates.iter().filter(|c| !c.pass).collect();
    for c in &failed {
        let _ = writeln!(
            err,
            "certificate failed: {}\n  lhs: {}\n  rhs: {}",
            c.name, c.lhs, c.rhs
        );
    }
    i32::from(!failed.is_empty())
}

fn certs_json(certs: &[Certificate]) -> Value {
    Value::Array(certs.iter().map(Certificate::to_json).collect())
}

fn execute(cmd: &Command, progress: &mut dyn Write) -> Result<Report> {
    match cmd {
        Command::Jack { deg, kappa } => jack_report(*deg, kappa.as_deref()),
        Command::Singvec { model, r, s, sign } => {
            singvec_report(&model.model()?, *r, *s, (*sign).into())
        }
        Command::Kac { model } => {
            let t = kac_table(&model.model()?);
            let mut text = format!("{:<8}{}\n", "rs", "delta");
            for c in &t.classes {
                text.push_str(&format!(
                    "{:<8}{}\n",
                    format!("({},{})", c.rs.0, c.rs.1),
                    c.delta
                ));
            }
            Ok(Report::plain(t.to_json(), text))
        }
        Command::Omega { model, n } => {
            let w = omega_poly(&model.model()?, *n)?;
            let mut certificates = Vec::new();
            if w.second_route.is_some() {
                certificates.push(w.certificate());
            }
            let json = json!({"n": w.n, "omega": w.poly.to_json("beta"), "certificates": certs_json(&certificates)});
            let text = format!("omega_{}(beta) = {}\n", w.n, w.poly.fmt_var("beta"));
            Ok(Report {
                json,
                text,
                certificates,
            })
        }
        Command::Gpoly { model } => {
            let gp = g_polys(&model.model()?)?;
            let json = json!({
                "g": gp.g.iter().map(|g| g.to_json("h")).collect::<Vec<_>>(),
                "certificates": certs_json(&gp.certificates),
            });
            let mut text = String::new();
            for (i, g) in gp.g.iter().enumerate() {
                text.push_str(&format!("g{i}(h) = {}\n", g.fmt_var("h")));
            }
            Ok(Report {
                json,
                text,
                certificates: gp.certificates,
            })
        }
        Command::Census { model, count_only } => {
            let census = simple_census(&model.model()?)?;
            if *count_only {
                return Ok(Report::plain(
                    json!(census.len()),
                    format!("{}\n", census.len()),
                ));
            }
            let mut text = format!("{:<10}{:<8}{:<12}{}\n", "kind", "rs", "delta", "dim");
            for d in &census {
                text.push_str(&format!(
                    "{:<10}{:<8}{:<12}{}\n",
                    d.kind.name(),
                    format!("({},{})", d.rs.0, d.rs.1),
                    d.delta.to_string(),
                    d.dim
                ));
            }
            Ok(Report::plain(
                Value::Array(census.iter().map(|d| d.to_json()).collect()),
                text,
            ))
        }
        Command::Structconst { model, kind, n, k } => {
            let kind = match kind {
                KindArg::A => StructKind::A,
                KindArg::B => StructKind::B,
            };
            let c = struct_const(&model.model()?, kind, *n, *k)?;
            let cert = c.certificate();
            let mut text = format!("{} = {}  (partition {})\n", cert.name, c.value, c.partition);
            let certificates = if c.second_route.is_some() {
                vec![cert]
            } else {
                text.push_str("second route beyond the size guard\n");
                Vec::new()
            };
            let mut json = c.to_json();
            json["certificates"] = certs_json(&certificates);
            Ok(Report {
                json,
                text,
                certificates,
            })
        }
        Command::Characters { model, cutoff } => {
            let m = model.model()?;
            let chars = solve_simple_characters(&m, *cutoff)?;
            let mut text = String::new();
            for (h, c) in &chars.chars {
                text.push_str(&format!("ch L({h}) = {}\n", c.truncate(*cutoff)));
            }
            Ok(Report::plain(chars.to_json(), text))
        }
        Command::Felder {
            model,
            r,
            s,
            sign,
            cutoff,
        } => {
            let m = model.model()?;
            let sign: Sign = (*sign).into();
            let (series, cert) = felder_certificate(&m, sign, *r, *s, *cutoff)?;
            let json = json!({"euler": series.to_json(), "certificates": [cert.to_json()]});
            let text = format!("chi = {series}\n");
            Ok(Report {
                json,
                text,
                certificates: vec![cert],
            })
        }
        Command::VerifyAll { model, cutoff } => {
            let certificates = verify_all(&model.model()?, *cutoff, progress)?;
            let passed = certificates.iter().filter(|c| c.pass).count();
            let json = json!({"passed": passed, "total": certificates.len(), "certificates": certs_json(&certificates)});
            let text = format!("{passed}/{} certificates pass\n", certificates.len());
            Ok(Report {
                json,
                text,
                certificates,
            })
        }
    }
}

fn jack_text<C: Scalar>(pairs: &[JackPair<C>]) -> String {
    pairs
        .iter()
        .map(|j| {
            format!(
                "P_{l} = {}\nQ_{l} = {}\nb_{l} = {}\n",
                j.p,
                j.q,
                j.b,
                l = j.lambda
            )
        })
        .collect()
}

fn jack_report(deg: usize, kappa: Option<&str>) -> Result<Report> {
    if deg > JACK_DEG_GUARD {
        return Err(Error::SizeGuardExceeded(format!(
            "degree {deg} > {JACK_DEG_GUARD}"
        )));
    }
    match kappa {
        None => {
            let pairs = jack_degree(deg, &KappaFunction::kappa())?;
            Ok(Report::plain(
                Value::Array(pairs.iter().map(JackPair::to_json).collect()),
                jack_text(&pairs),
            ))
        }
        Some(k) => {
            let pairs = jack_degree(deg, &parse_rational(k)?)?;
            Ok(Report::plain(
                Value::Array(pairs.iter().map(JackPair::to_json).collect()),
                jack_text(&pairs),
            ))
        }
    }
}

fn singvec_report(m: &ModelParams, r: i64, s: i64, sign: Sign) -> Result<Report> {
    let v = singular_vector(m, sign, r, s)?;
    let mut certificates = vec![singular_certificate(m, sign, r, s)?];
    if r * s <= PROPORTIONALITY_RS_GUARD {
        certificates.push(proportionality(m, r, s)?);
    }
    let json = json!({"vector": v.to_json(), "certificates": certs_json(&certificates)});
    Ok(Report {
        json,
        text: format!("{v}\n"),
        certificates,
    })
}

/// The Felder Euler characteristic against `ch L(h_{r,s;0})`, or zero on the edge.
pub fn felder_certificate(
    m: &ModelParams,
    sign: Sign,
    r: i64,
    s: i64,
    cutoff: usize,
) -> Result<(CharSeries, Certificate)> {
    let series = felder_euler(m, sign, r, s, cutoff)?;
    let h = m.h_label(r, s, 0);
    let edge = match sign {
        Sign::Plus => s == m.pm,
        Sign::Minus => r == m.pp,
    };
    let expected = if edge {
        CharSeries::zero(h.clone(), cutoff)
    } else {
        let solver_cutoff = (&h - top_lowest_weight(m)).ceil().to_integer();
        let extra = usize::try_from(solver_cutoff).unwrap_or(0);
        let chars = solve_simple_characters(m, cutoff + extra)?;
        chars
            .get(&h)?
            .realign(&h, &(&h + crate::scalars::rat(cutoff as i64, 1)))?
    };
    let cert = Certificate::new(
        format!("felder ({},{}) {sign} r={r} s={s}", m.pp, m.pm),
        series == expected,
        series.to_json(),
        expected.to_json(),
    );
    Ok((series, cert))
}

fn labels(m: &ModelParams) -> Vec<(i64, i64)> {
    (1..=m.pp)
        .flat_map(|r| (1..=m.pm).map(move |s| (r, s)))
        .collect()
}

fn screening_certificates(m: &ModelParams) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for r in 1..=VERIFY_RS_BOUND {
        for s in 1..=VERIFY_RS_BOUND / r {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(singular_certificate(m, sign, r, s)?);
            }
            out.push(proportionality(m, r, s)?);
        }
    }
    Ok(out)
}

fn walgebra_certificates(m: &ModelParams) -> Result<Vec<Certificate>> {
    let gp = g_polys(m)?;
    let mut out = gp.certificates.clone();
    for n in 1..=2 {
        let w = omega_poly(m, n)?;
        if w.second_route.is_some() {
            out.push(w.certificate());
        }
    }
    for d in simple_census(m)? {
        out.push(rep_check(&gp, &d)?);
    }
    for kind in [StructKind::A, StructKind::B] {
        for n in 0..=3 {
            for k in -1..=3 {
                match struct_const(m, kind, n, k) {
                    Ok(c) if c.second_route.is_some() => out.push(c.certificate()),
                    Ok(_) | Err(Error::OutOfRange(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(out)
}

fn character_certificates(m: &ModelParams, cutoff: usize) -> Result<Vec<Certificate>> {
    let top = labels(m)
        .into_iter()
        .flat_map(|(r, s)| (-VERIFY_SOCLE_N..=VERIFY_SOCLE_N).map(move |n| (r, s, n)))
        .map(|(r, s, n)| m.h_label(r, s, n))
        .max()
        .expect("nonempty grid");
    let socle_cutoff =
        usize::try_from((top - top_lowest_weight(m)).ceil().to_integer()).unwrap_or(0) + cutoff;
    let chars = solve_simple_characters(m, socle_cutoff.max(kx_solver_cutoff(m, cutoff)?))?;
    let mut out = Vec::new();
    for (r, s) in labels(m) {
        for n in -VERIFY_SOCLE_N..=VERIFY_SOCLE_N {
            out.push(verify_socle_sum(m, &chars, r, s, n, cutoff)?);
        }
    }
    for (r, s) in labels(m) {
        for sign in [Sign::Plus, Sign::Minus] {
            let on_grid = match sign {
                Sign::Plus => r < m.pp,
                Sign::Minus => s < m.pm,
            };
            if on_grid {
                out.push(felder_certificate(m, sign, r, s, cutoff)?.1);
            }
            out.push(kx_characters(m, &chars, r, s, sign, cutoff)?.certificate());
        }
    }
    Ok(out)
}

/// All certificate families for one model, computed in parallel and returned in a fixed order.
pub fn verify_all(
    m: &ModelParams,
    cutoff: usize,
    progress: &mut dyn Write,
) -> Result<Vec<Certificate>> {
    let _ = writeln!(
        progress,
        "verify-all ({},{}): screening, zero modes, characters",
        m.pp, m.pm
    );
    let results = thread::scope(|scope| {
        let a = scope.spawn(|| screening_certificates(m));
        let b = scope.spawn(|| walgebra_certificates(m));
        let c = scope.spawn(|| character_certificates(m, cutoff));
        [a, b, c].map(|h| h.join().expect("worker panicked"))
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    let _ = writeln!(
        progress,
        "verify-all ({},{}): {} certificates",
        m.pp,
        m.pm,
        out.len()
    );
    Ok(out)
}
