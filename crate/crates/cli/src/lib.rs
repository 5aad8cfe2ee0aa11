//! The `qtorus` command line: argument handling, named constants and the
//! check reports behind each subcommand.

pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use qtorus_core::constants::{source, SOURCES};
use qtorus_core::groebner::reduce;
use qtorus_core::jones::colored_jones_fig8;
use qtorus_core::pipeline::{self, paper_operator, step2_build_dio, DIO_SCALE};
use qtorus_core::{
    buchberger_extended, parse_laurent, verify_conditions, MonomialOrder, MultiLaurent, Operator, PaperConstants,
    PipelineOptions, RelationTable, Var,
};

pub use report::{CheckResult, Report, Status};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] qtorus_core::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(name = "qtorus", version, about = "Exact checks for the figure-eight knot recurrence")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Record the wall time of each check.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Knot {
    Fig8,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

impl OrderArg {
    fn order(self) -> MonomialOrder {
        match self {
            OrderArg::Lex => MonomialOrder::lex(),
            OrderArg::Grevlex => MonomialOrder::grevlex(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Colored Jones values.
    Jones {
        #[arg(long, value_enum, default_value = "fig8")]
        knot: Knot,
        /// A single color.
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        /// Colors `a..b` (inclusive).
        #[arg(long, conflicts_with = "n", allow_hyphen_values = true)]
        range: Option<String>,
        /// Colors `1..nmax` when neither `--n` nor `--range` is given.
        #[arg(long, default_value_t = 20)]
        nmax: i64,
    },
    /// Groebner basis with conversion matrix.
    Groebner {
        /// Generators: expressions or named constants.
        #[arg(default_values_t = ["A2".to_string(), "B2".to_string()])]
        polys: Vec<String>,
        /// One generator per line.
        #[arg(long)]
        poly_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
    },
    /// Normal form modulo the basis of an ideal.
    Reduce {
        #[arg(long, required_unless_present = "poly_file")]
        target: Option<String>,
        /// Comma-separated generators of the ideal.
        #[arg(long, value_delimiter = ',', required = true)]
        basis_from: Vec<String>,
        /// Target read from a file.
        #[arg(long)]
        poly_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
    },
    /// Build the symmetric recurrence and check it.
    Derive {
        /// Write every intermediate with its provenance as JSON.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Report whether the result coincides with the published one.
        #[arg(long)]
        compare_paper: bool,
        /// Use the published particular solution and `k`.
        #[arg(long)]
        paper_choices: bool,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
        #[arg(long, default_value_t = 20)]
        nmax: i64,
    },
    /// Check every published constant and claim.
    VerifyPaper {
        #[arg(long, default_value_t = 20)]
        nmax: i64,
    },
    /// Check an operator given in normal order (`t`, `M` left of `L`).
    Verify {
        /// An expression or a named constant; defaults to the published `P`.
        #[arg(long)]
        operator: Option<String>,
        #[arg(long)]
        poly_file: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        nmax: i64,
    },
}

/// What a run produced: the process exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

/// Parse `argv` (including the program name) and run it. Exit codes: 0 when
/// every check passes, 1 when a check fails or errors, 2 on bad usage.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr, report: None };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut report = Report::new(echo);
    if let Err(e) = dispatch(&cli, &mut report) {
        let code = if matches!(e, CliError::Usage(_)) { 2 } else { 1 };
        if code == 2 {
            return Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n"), report: None };
        }
        report.push(CheckResult::error("command", e.to_string()));
    }
    let code = if report.all_passed() { 0 } else { 1 };
    let stdout = if cli.json { report.to_json() } else { report.to_text() };
    Outcome { code, stdout, stderr: String::new(), report: Some(report) }
}

fn dispatch(cli: &Cli, r: &mut Report) -> Result<(), CliError> {
    let timings = cli.timings;
    match &cli.command {
        Command::Jones { knot: Knot::Fig8, n, range, nmax } => {
            let colors = match (n, range) {
                (Some(n), _) => vec![*n],
                (None, Some(s)) => parse_range(s)?,
                (None, None) => (1..=*nmax).collect(),
            };
            jones(r, &colors, timings);
        }
        Command::Groebner { polys, poly_file, order } => {
            let gens = match poly_file {
                Some(p) => read_lines(p)?,
                None => polys.iter().map(|s| resolve(s)).collect::<Result<_, _>>()?,
            };
            groebner(r, &gens, &order.order(), timings)?;
        }
        Command::Reduce { target, basis_from, poly_file, order } => {
            let f = match (poly_file, target) {
                (Some(p), _) => resolve(&read_file(p)?)?,
                (None, Some(t)) => resolve(t)?,
                (None, None) => return Err(CliError::Usage("a target is required".into())),
            };
            let gens: Vec<MultiLaurent> = basis_from.iter().map(|s| resolve(s)).collect::<Result<_, _>>()?;
            reduce_cmd(r, &f, &gens, &order.order(), timings)?;
        }
        Command::Derive { dump, compare_paper, paper_choices, order, nmax } => {
            let opts = if *paper_choices {
                PipelineOptions { order: order.order(), ..PipelineOptions::paper() }
            } else {
                PipelineOptions { order: order.order(), ..PipelineOptions::default() }
            };
            derive_cmd(r, &opts, dump.as_deref(), *compare_paper, *nmax, timings)?;
        }
        Command::VerifyPaper { nmax } => verify_paper(r, *nmax, timings),
        Command::Verify { operator, poly_file, nmax } => {
            let p = match (poly_file, operator) {
                (Some(path), _) => Operator::from_normal_ordered(&resolve(&read_file(path)?)?)?,
                (None, Some(s)) => resolve_operator(s)?,
                (None, None) => paper_operator(),
            };
            r.item("P", &p);
            conditions(r, "", &p, *nmax, timings);
        }
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<Vec<i64>, CliError> {
    let bad = || CliError::Usage(format!("invalid range {s:?}; expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn read_file(path: &Path) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    Ok(text.lines().filter(|l| !l.trim_start().starts_with('#')).collect::<Vec<_>>().join(" "))
}

fn read_lines(path: &Path) -> Result<Vec<MultiLaurent>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(resolve).collect()
}

/// Names accepted wherever a polynomial is expected, besides literal
/// expressions. Rational constants such as `b0` are left out.
pub fn constant_names() -> Vec<&'static str> {
    let mut v = vec!["A1", "B1", "C1", "A2", "B2", "C2"];
    v.extend(SOURCES.iter().filter(|(_, src)| parse_laurent(src).is_ok()).map(|(n, _)| *n));
    v
}

/// A named constant or an expression denoting a Laurent polynomial.
pub fn resolve(s: &str) -> Result<MultiLaurent, CliError> {
    let s = s.trim();
    let dio = || step2_build_dio();
    let v = match s {
        "A1" => dio().a,
        "B1" => dio().b,
        "C1" => dio().c,
        "A2" => dio().scaled(DIO_SCALE).a,
        "B2" => dio().scaled(DIO_SCALE).b,
        "C2" => dio().scaled(DIO_SCALE).c,
        _ => match source(s) {
            Some(src) => parse_laurent(src)?,
            None => parse_laurent(s)?,
        },
    };
    Ok(v)
}

fn resolve_operator(s: &str) -> Result<Operator, CliError> {
    match s.trim() {
        "P" => Ok(paper_operator()),
        "alpha" => Ok(pipeline::alpha_operator()),
        other => Ok(Operator::from_normal_ordered(&resolve(other)?)?),
    }
}

fn jones(r: &mut Report, colors: &[i64], timings: bool) {
    let values: Vec<_> = colors.iter().map(|&n| (n, colored_jones_fig8(n))).collect();
    for (n, v) in &values {
        r.item(&format!("J({n})"), v.to_multi());
    }
    r.check("palindromic", timings, || {
        let bad = values.iter().find(|(_, v)| !v.is_palindromic());
        Ok(CheckResult::from_bool("palindromic", bad.is_none(), || bad.unwrap().0.to_string()))
    });
}

fn groebner(r: &mut Report, gens: &[MultiLaurent], order: &MonomialOrder, timings: bool) -> Result<(), CliError> {
    let basis = buchberger_extended(gens, order)?;
    r.item("order", order);
    for (i, g) in basis.gens.iter().enumerate() {
        r.item(&format!("g{}", i + 1), g);
    }
    for (i, row) in basis.conversion.iter().enumerate() {
        for (j, m) in row.iter().enumerate() {
            r.item(&format!("m{}{}", i + 1, j + 1), m);
        }
    }
    r.check("conversion", timings, || {
        Ok(CheckResult::from_bool("conversion", basis.verify_conversion(), || "mat.input != gb".into()))
    });
    r.check("s-polynomials", timings, || {
        Ok(CheckResult::from_bool("s-polynomials", basis.s_polynomials_reduce(), || {
            "an S-polynomial has a nonzero remainder".into()
        }))
    });
    Ok(())
}

fn reduce_cmd(
    r: &mut Report,
    f: &MultiLaurent,
    gens: &[MultiLaurent],
    order: &MonomialOrder,
    timings: bool,
) -> Result<(), CliError> {
    let basis = buchberger_extended(gens, order)?;
    let m = basis.membership(f)?;
    r.item("remainder", &m.remainder);
    r.item("member", m.member);
    for (i, c) in m.cofactors.iter().enumerate() {
        r.item(&format!("cofactor{}", i + 1), c);
    }
    if f.is_polynomial() {
        let (q, rem) = reduce(f, &basis.gens, order)?;
        r.check("division identity", timings, || {
            let back = q.iter().zip(&basis.gens).fold(rem.clone(), |acc, (q, g)| &acc + &(q * g));
            Ok(CheckResult::from_bool("division identity", back == *f, || (&back - f).to_string()))
        });
    }
    if m.member {
        r.check("cofactor identity", timings, || {
            let back = m.cofactors.iter().zip(gens).fold(MultiLaurent::zero(), |acc, (c, g)| &acc + &(c * g));
            Ok(CheckResult::from_bool("cofactor identity", back == *f, || (&back - f).to_string()))
        });
    }
    Ok(())
}

fn colors(nmax: i64) -> Vec<i64> {
    (1..=nmax.max(1)).collect()
}

/// `verify_conditions` spread over individual checks named `prefix + name`.
fn conditions(r: &mut Report, prefix: &str, p: &Operator, nmax: i64, timings: bool) {
    let start = std::time::Instant::now();
    let result = RelationTable::paper_resolved().and_then(|t| verify_conditions(p, &t, &colors(nmax)));
    let ms = timings.then(|| u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX));
    match result {
        Ok(rep) => {
            for c in rep.checks {
                let name = format!("{prefix}{}", c.name);
                let mut cr = match c.witness {
                    Some(w) if !c.passed => CheckResult::fail(&name, w),
                    _ if !c.passed => CheckResult::fail(&name, "condition fails"),
                    _ => CheckResult::pass(&name),
                };
                cr.elapsed_ms = ms;
                r.push(cr);
            }
        }
        Err(e) => r.push(CheckResult::error(&format!("{prefix}conditions"), e.to_string())),
    }
}

fn derive_cmd(
    r: &mut Report,
    opts: &PipelineOptions,
    dump: Option<&Path>,
    compare: bool,
    nmax: i64,
    timings: bool,
) -> Result<(), CliError> {
    let d = pipeline::derive(opts)?;
    r.item("order", &opts.order);
    r.item("f", &d.f);
    r.item("k", &d.k);
    r.item("b0", &d.b0);
    for (k, name) in [(1, "p1"), (-1, "p-1"), (0, "p0")] {
        r.item(name, d.p.coeff(k));
    }
    if compare {
        let pc = PaperConstants::get();
        r.item("same b0 as published", d.b0 == pc.b0);
        r.item("same P as published", d.p == paper_operator());
    }
    if let Some(path) = dump {
        let text = serde_json::to_string_pretty(&d.state.to_json()).expect("state serializes") + "\n";
        std::fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })?;
    }
    conditions(r, "", &d.p, nmax, timings);
    Ok(())
}

fn diff_check(name: &str, lhs: &MultiLaurent, rhs: &MultiLaurent) -> CheckResult {
    CheckResult::from_bool(name, lhs == rhs, || (lhs - rhs).to_string())
}

/// Every published constant and claim, in the order of the derivation.
fn verify_paper(r: &mut Report, nmax: i64, t: bool) {
    let pc = PaperConstants::get();
    let m_var = MultiLaurent::var(Var::M);

    r.check("squaring", t, || {
        let sq = pc.a_prime.pow(2)?;
        let by_l = sq.coeffs_in(Var::L);
        let bad = [2, 1, 0, -1, -2].iter().zip(&pc.a_sq).find(|(k, a)| by_l.get(k).cloned().unwrap_or_default() != **a);
        Ok(CheckResult::from_bool("squaring", bad.is_none(), || format!("coefficient of L^{}", bad.unwrap().0)))
    });
    r.check("aj consistency", t, || {
        let lhs = pipeline::alpha_operator().epsilon();
        let factor = &m_var.pow(2)? - &m_var.pow(-2)?;
        Ok(diff_check("aj consistency", &lhs, &(&factor * &pc.a_prime)))
    });
    let dio = step2_build_dio();
    let dio2 = dio.scaled(DIO_SCALE);
    r.check("t=1 diophantine identity", t, || {
        let res = dio.at_t_one().residual(&pc.a_sq[2], &pc.a_sq[1]);
        Ok(CheckResult::from_bool("t=1 diophantine identity", res.is_zero(), || res.to_string()))
    });
    let mut lex_basis = None;
    for (name, order) in [("membership lex", MonomialOrder::lex()), ("membership grevlex", MonomialOrder::grevlex())] {
        r.check(name, t, || {
            let b = buchberger_extended(&[dio2.a.clone(), dio2.b.clone()], &order)?;
            let m = b.membership(&dio2.c)?;
            let ok = m.member && m.remainder.is_zero();
            if lex_basis.is_none() {
                lex_basis = Some(b);
            }
            Ok(CheckResult::from_bool(name, ok, || m.remainder.to_string()))
        });
    }
    let order = MonomialOrder::lex();
    if let Some(basis) = &lex_basis {
        r.check("published basis in ideal", t, || {
            for (i, g) in pc.g.iter().enumerate() {
                let (_, rem) = basis.reduce(g)?;
                if !rem.is_zero() {
                    return Ok(CheckResult::fail("published basis in ideal", format!("g{}: {rem}", i + 1)));
                }
            }
            Ok(CheckResult::pass("published basis in ideal"))
        });
        r.check("computed basis in published ideal", t, || {
            for g in &basis.gens {
                let (_, rem) = reduce(g, &pc.g, &order)?;
                if !rem.is_zero() {
                    return Ok(CheckResult::fail("computed basis in published ideal", rem.to_string()));
                }
            }
            Ok(CheckResult::pass("computed basis in published ideal"))
        });
    }
    for (i, (m1, m2)) in pc.m.iter().enumerate() {
        let name = format!("conversion row {}", i + 1);
        r.check(&name, t, || {
            let lhs = &(m1 * &dio2.a) + &(m2 * &dio2.b);
            Ok(diff_check(&name, &lhs, &pc.g[i]))
        });
    }
    r.check("quotients", t, || {
        let s = pc.q.iter().zip(&pc.g).fold(MultiLaurent::zero(), |acc, (q, g)| &acc + &(q * g));
        Ok(diff_check("quotients", &s, &dio2.c))
    });
    r.check("published particular", t, || {
        let res = dio2.residual(&pc.pt0, &pc.pt1);
        Ok(CheckResult::from_bool("published particular", res.is_zero(), || res.to_string()))
    });
    r.check("symmetry constraint", t, || {
        let s = pipeline::symmetry_constraint()?;
        Ok(diff_check("symmetry constraint", &s.rhs, &pc.sym.2))
    });
    let paper = pipeline::derive(&PipelineOptions::paper());
    match &paper {
        Ok(d) => {
            r.item("f-equation lhs", format!("({})*f(M) + ({})*f(1/M)", d.f_equation.c, d.f_equation.d));
            r.push(diff_check("f equation", &d.f_equation.rhs, &pc.eqf.2));
            r.push(diff_check("f(1,M)", &d.k_equation.f1, &pc.f_at_1));
            r.push(diff_check("k equation", &d.k_equation.rhs, &pc.k_rhs));
            r.item("h/k derived", &d.k_equation.scale);
            r.item("h/k printed", &pc.h_over_k_printed);
            r.push(CheckResult::from_bool("b0", d.b0 == pc.b0, || d.b0.to_string()));
            r.push(diff_check("p1", &d.p.coeff(1), &pc.p1));
            r.push(diff_check("p-1", &d.p.coeff(-1), &pc.pm1));
            r.push(diff_check("p0", &d.p.coeff(0), &pc.p0));
        }
        Err(e) => r.push(CheckResult::error("published choices", e.to_string())),
    }
    r.check("derived particular in family", t, || {
        let d = pipeline::derive(&PipelineOptions::default())?;
        let f = d.solution.parameter_of(&pc.pt0, &pc.pt1);
        Ok(CheckResult::from_bool("derived particular in family", f.is_some(), || {
            "difference is not a multiple of the modulus".into()
        }))
    });
    conditions(r, "published P: ", &paper_operator(), nmax, t);
    r.check("alpha annihilation", t, || {
        let v = qtorus_core::bracket::apply_operator(&pipeline::alpha_operator(), &*RelationTable::paper_resolved()?)?;
        Ok(CheckResult::from_bool("alpha annihilation", v.c1.is_zero() && v.cx.is_zero(), || {
            format!("c1 = {}, cx = {}", v.c1, v.cx)
        }))
    });
    jones_properties(r, nmax.max(1), t);
}

fn jones_properties(r: &mut Report, nmax: i64, t: bool) {
    r.check("jones properties", t, || {
        let j = qtorus_core::jones_fig8();
        if !j.value(0)?.is_zero() || *j.value(1)? != qtorus_core::LaurentT::one() {
            return Ok(CheckResult::fail("jones properties", "J(0) or J(1)"));
        }
        for n in 1..=nmax {
            let v = j.value(n)?;
            if *j.value(-n)? != -&*v || !v.is_palindromic() {
                return Ok(CheckResult::fail("jones properties", n.to_string()));
            }
        }
        Ok(CheckResult::pass("jones properties"))
    });
}
