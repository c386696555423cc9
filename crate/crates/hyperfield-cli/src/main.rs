use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperfield::counting::{self, CountingFn, ZeroList};
use hyperfield::exactmath::{format_sig, parse_poly, parse_rational, FpPoly, IntPoly};
use hyperfield::hypercore::{check_canonical_hypergroup, check_hyperring, FiniteGroup, HyperTable};
use hyperfield::quotients::{kg_hyperfield, quotient_hyperring, FiniteRing};
use hyperfield::rconvex::{c_add, c_add_set, parse_set};
use hyperfield::spec_k::{spec_add, spec_mul, HyperResult, SpecKPoint};
use hyperfield::spec_s::{glue_build, s_add, s_mul, SignError, SignPoint};
use hyperfield::Zeros;

const DIGITS: usize = 12;

#[derive(Parser)]
#[command(name = "hyperfield", version, about = "Hyperfields, hyperrings and their spectra")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check hypergroup and hyperring axioms on a named structure or a JSON table.
    Axioms {
        /// krasner, signs, kg:<n>[x<n>...], glue:<n>:<b,...>, quotient:<p>,<k>
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        structure: Option<String>,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Quotient hyperring F_{p^k}/G.
    Quotient {
        /// p,k
        #[arg(long)]
        field: String,
        /// full (all units), prime (F_p^×) or gens:<a,b,...> with element labels
        #[arg(long, default_value = "full")]
        units: String,
    },
    /// Hyperoperations on Hom(Z[T], K).
    Spec {
        #[command(subcommand)]
        op: SpecOp,
    },
    /// Hyperoperations on Hom(Q[T], S).
    Sign {
        #[command(subcommand)]
        op: SignOp,
    },
    /// Hyperaddition in R^convex.
    Rconvex {
        #[command(subcommand)]
        op: RconvexOp,
    },
    /// Counting distribution, ω(1) and the explicit formula from ζ zeros.
    Count {
        #[command(subcommand)]
        op: CountOp,
    },
    /// Soulé zeta limit, or Z(q, T) when --t is given.
    Zeta {
        /// p1, affine or poly:<c0,c1,...>
        #[arg(long)]
        model: String,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
        #[arg(long)]
        q: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        rmax: u64,
    },
}

#[derive(clap::Args)]
struct SpecArgs {
    /// 0 or p=<prime>
    #[arg(long)]
    fiber: String,
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    g: String,
}

#[derive(Subcommand)]
enum SpecOp {
    Add(SpecArgs),
    Mul(SpecArgs),
}

#[derive(Subcommand)]
enum SignOp {
    /// Sign of a polynomial at a point.
    Eval {
        #[arg(long)]
        point: String,
        /// +, - or 0; overrides the side in --point
        #[arg(long, allow_hyphen_values = true)]
        side: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    Add {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    Mul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}

#[derive(Subcommand)]
enum RconvexOp {
    /// x +_c y for rationals.
    Add {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Sum of two sign-convex sets written like `(-1,0) u {2}`.
    AddSet {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Subcommand)]
enum CountOp {
    /// Partial sums of N(u) on a grid, as CSV.
    #[command(name = "N")]
    N {
        #[arg(long)]
        zeros: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000)]
        m: usize,
        #[arg(long, default_value_t = 1.1)]
        u_from: f64,
        #[arg(long, default_value_t = 20.0)]
        u_to: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        /// Cesàro-smoothed partial sums instead of plain ones.
        #[arg(long)]
        smoothed: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// ω(1) partial sum against the closed form.
    Omega1 {
        #[arg(long)]
        zeros: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000)]
        m: usize,
    },
    /// Residual of the explicit formula for Σ_{n<x} n Λ(n).
    Explicit {
        #[arg(long)]
        zeros: Option<PathBuf>,
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 10_000)]
        m: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn domain(e: impl ToString) -> Failure {
    Failure::Domain(e.to_string())
}

fn num(x: f64) -> String {
    format_sig(x, DIGITS)
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn named_structure(spec: &str) -> Result<HyperTable, Failure> {
    let num_list = |s: &str| -> Result<Vec<usize>, Failure> {
        s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| usage(format!("bad number {t:?}")))).collect()
    };
    match spec.split_once(':') {
        None if spec == "krasner" => Ok(HyperTable::krasner()),
        None if spec == "signs" => Ok(HyperTable::signs()),
        Some(("kg", orders)) => {
            let mut g = FiniteGroup::cyclic(1);
            for o in orders.split('x') {
                let n: usize = o.parse().map_err(|_| usage(format!("bad group order {o:?}")))?;
                if n == 0 {
                    return Err(usage("group orders must be positive"));
                }
                g = FiniteGroup::product(&g, &FiniteGroup::cyclic(n));
            }
            kg_hyperfield(&g).map_err(domain)
        }
        Some(("glue", rest)) => {
            let (n, b) = rest.split_once(':').ok_or_else(|| usage("expected glue:<n>:<b,...>"))?;
            let n: usize = n.parse().map_err(|_| usage(format!("bad group order {n:?}")))?;
            if n == 0 {
                return Err(usage("group orders must be positive"));
            }
            let b = num_list(b)?;
            Ok(glue_build(&FiniteGroup::cyclic(n), &b).map_err(domain)?.table)
        }
        Some(("quotient", pk)) => {
            let r = parse_field(pk)?;
            Ok(quotient_hyperring(&r, &r.prime_units()).map_err(domain)?.table)
        }
        _ => Err(usage(format!("unknown structure {spec:?}"))),
    }
}

fn parse_field(pk: &str) -> Result<FiniteRing, Failure> {
    let (p, k) = pk.split_once(',').ok_or_else(|| usage("expected p,k"))?;
    let p: u64 = p.trim().parse().map_err(|_| usage(format!("bad prime {p:?}")))?;
    let k: usize = k.trim().parse().map_err(|_| usage(format!("bad degree {k:?}")))?;
    FiniteRing::field(p, k).map_err(domain)
}

fn report(t: &HyperTable) -> String {
    if t.has_mul() {
        check_hyperring(t).summary()
    } else {
        check_canonical_hypergroup(t).summary()
    }
}

fn parse_fiber(s: &str) -> Result<u64, Failure> {
    match s.trim() {
        "0" => Ok(0),
        other => other
            .strip_prefix("p=")
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| usage(format!("fiber must be 0 or p=<prime>, got {s:?}"))),
    }
}

fn spec_point(text: &str, p: u64) -> Result<SpecKPoint, Failure> {
    match (text.trim(), p) {
        ("delta", 0) => return Ok(SpecKPoint::Generic0),
        ("delta_p", p) if p > 0 => return SpecKPoint::generic_p(p).map_err(domain),
        ("delta", _) | ("delta_p", _) => return Err(usage(format!("{text} is not a point of this fiber"))),
        _ => {}
    }
    let q: IntPoly = parse_poly(text).map_err(usage)?;
    if p == 0 {
        SpecKPoint::closed0(&q).map_err(domain)
    } else {
        SpecKPoint::closed_p(&FpPoly::from_int_poly(&q, p)).map_err(domain)
    }
}

fn spec_output(r: &HyperResult) -> String {
    match r {
        HyperResult::Finite(v) if v.is_empty() => "EMPTY\n".into(),
        HyperResult::Finite(v) => lines(v),
        other => format!("{other}\n"),
    }
}

fn sign_point(text: &str) -> Result<SignPoint, Failure> {
    SignPoint::parse(text).map_err(|e| match e {
        SignError::Parse(..) | SignError::Math(_) => usage(e),
        other => domain(other),
    })
}

fn zeros_from(path: &Option<PathBuf>) -> Result<Zeros, Failure> {
    match path {
        Some(p) => ZeroList::from_file(p).map_err(domain),
        None => Ok(ZeroList::bundled()),
    }
}

fn counting_model(model: &str) -> Result<CountingFn, Failure> {
    match model {
        "p1" => Ok(CountingFn::P1),
        "affine" => Ok(CountingFn::AffineLine),
        other => {
            let coeffs = other.strip_prefix("poly:").ok_or_else(|| usage(format!("unknown model {model:?}")))?;
            let c: Result<Vec<f64>, _> = coeffs.split(',').map(|t| t.trim().parse::<f64>()).collect();
            Ok(CountingFn::Polynomial(c.map_err(|_| usage(format!("bad coefficients {coeffs:?}")))?))
        }
    }
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Axioms { structure, table } => {
            let t = match (structure, table) {
                (Some(s), _) => named_structure(&s)?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| domain(format!("{}: {e}", path.display())))?;
                    HyperTable::from_json(&text).map_err(domain)?
                }
                (None, None) => return Err(usage("give --structure or --table")),
            };
            Ok(report(&t) + "\n")
        }
        Command::Quotient { field, units } => {
            let r = parse_field(&field)?;
            let gens = match units.as_str() {
                "full" => r.units(),
                "prime" => r.prime_units(),
                other => {
                    let list = other.strip_prefix("gens:").ok_or_else(|| usage("units must be full, prime or gens:<list>"))?;
                    list.split(',')
                        .map(|e| r.parse_element(e).ok_or_else(|| usage(format!("unknown element {e:?}"))))
                        .collect::<Result<Vec<_>, _>>()?
                }
            };
            let q = quotient_hyperring(&r, &gens).map_err(domain)?;
            Ok(format!("{}\n{}\n", q.table.to_json(), report(&q.table)))
        }
        Command::Spec { op } => {
            let (args, add) = match op {
                SpecOp::Add(a) => (a, true),
                SpecOp::Mul(a) => (a, false),
            };
            let p = parse_fiber(&args.fiber)?;
            let (x, y) = (spec_point(&args.f, p)?, spec_point(&args.g, p)?);
            let r = if add { spec_add(&x, &y) } else { spec_mul(&x, &y) }.map_err(domain)?;
            Ok(spec_output(&r))
        }
        Command::Sign { op } => match op {
            SignOp::Eval { point, side, poly } => {
                let mut x = sign_point(&point)?;
                if let Some(side) = side {
                    let s = match side.as_str() {
                        "+" => 1,
                        "-" => -1,
                        "0" => 0,
                        _ => return Err(usage(format!("side must be +, - or 0, got {side:?}"))),
                    };
                    x = SignPoint::at(x.finite_re().map_err(domain)?.clone(), s);
                }
                let p = parse_poly(&poly).map_err(usage)?;
                Ok(format!("{}\n", x.eval(&p)))
            }
            SignOp::Add { a, b } => Ok(lines(s_add(&sign_point(&a)?, &sign_point(&b)?).map_err(domain)?)),
            SignOp::Mul { a, b } => Ok(lines(s_mul(&sign_point(&a)?, &sign_point(&b)?).map_err(domain)?)),
        },
        Command::Rconvex { op } => match op {
            RconvexOp::Add { x, y } => {
                let (x, y) = (parse_rational(&x).map_err(usage)?, parse_rational(&y).map_err(usage)?);
                Ok(format!("{}\n", c_add(&x, &y)))
            }
            RconvexOp::AddSet { a, b } => {
                let (a, b) = (parse_set(&a).map_err(usage)?, parse_set(&b).map_err(usage)?);
                Ok(format!("{}\n", c_add_set(&a, &b)))
            }
        },
        Command::Count { op } => run_count(op),
        Command::Zeta { model, s, q, t, rmax } => {
            let n = counting_model(&model)?;
            match (t, s) {
                (Some(t), _) => {
                    let z = counting::hasse_weil_z(&n, q, t, rmax).map_err(domain)?;
                    Ok(format!("Z {}\nlast_term {}\n", num(z.value), num(z.last_term)))
                }
                (None, Some(s)) => {
                    let v = counting::soule_zeta_limit(&n, s, q).map_err(domain)?;
                    Ok(format!("zeta_N {}\n", num(v)))
                }
                (None, None) => Err(usage("give --s for the limit or --t for Z(q, T)")),
            }
        }
    }
}

#[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN steps
fn run_count(op: CountOp) -> Result<String, Failure> {
    match op {
        CountOp::N { zeros, m, u_from, u_to, step, smoothed, out } => {
            if !(step > 0.0) || u_to < u_from {
                return Err(usage("need step > 0 and u-to >= u-from"));
            }
            let z = zeros_from(&zeros)?;
            let mut csv = String::from("u,N_partial,m\n");
            let count = ((u_to - u_from) / step + 1e-9).floor() as usize;
            for i in 0..=count {
                let u = u_from + i as f64 * step;
                let v = if smoothed { counting::counting_n_cesaro(u, m, &z) } else { counting::counting_n(u, m, &z) }
                    .map_err(domain)?;
                writeln!(csv, "{},{},{m}", num(u), num(v)).expect("string write");
            }
            match out {
                Some(path) => {
                    std::fs::write(&path, csv).map_err(|e| domain(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(csv),
            }
        }
        CountOp::Omega1 { zeros, m } => {
            let z = zeros_from(&zeros)?;
            let partial = counting::omega_partial(1.0, m, &z).map_err(domain)?;
            let closed = counting::omega_one_closed::<f64>();
            Ok(format!(
                "m {m}\nomega_partial {}\nomega_closed {}\nabs_error {}\n",
                num(partial),
                num(closed),
                num((partial - closed).abs())
            ))
        }
        CountOp::Explicit { zeros, x, m } => {
            let z = zeros_from(&zeros)?;
            let r = counting::explicit_formula_check(x, m, &z).map_err(domain)?;
            Ok(format!("x {}\nm {m}\nphi {}\nresidual {}\n", num(x), num(counting::phi_staircase(x)), num(r)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
