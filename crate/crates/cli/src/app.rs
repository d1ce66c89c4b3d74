//! Command-line grammar and dispatch.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rwinv_core::chern::{monomial_name, td_power, theta_power_in_polywheels, ChernVector};
use rwinv_core::genera::{chi_polynomials, chi_y_hilbert, chi_y_kummer, invert_chi, ChiVector};
use rwinv_core::homology::{basis, closure};
use rwinv_core::lie::{
    lie_weight_vector, solve_polywheel_coords, su2_closed_form, su2_recursion, LieData, PolywheelSolution,
};
use rwinv_core::spaces::{cobordism_distinguish, express_in_span, Engine, MatchCriterion, SpanSolution};
use rwinv_core::{canonicalize, ClassName, Partition, Q};

use crate::dsl::{
    format_graph, parse_even_partition, parse_graph, parse_graph_or_vector, parse_rational, parse_rationals,
};
use crate::error::CliError;
use crate::names::parse_space;
use crate::tables::{appendix, chi_line, render_text, render_tsv};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(
    name = "rwinv",
    version,
    about = "Graph homology, weight systems and Rozansky-Witten invariants in exact arithmetic"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Deterministic tie-breaking in canonical forms and bases; always on.
    #[arg(long, global = true)]
    pub seed_order: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Named basis of graph homology in degree k with canonical keys.
    Basis(DegreeArg),
    /// Expand a polywheel in the basis.
    ExpandPolywheel(PartitionArg),
    /// Reduce a graph or graph vector to basis coordinates.
    Reduce {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        input: String,
    },
    /// Canonical form and sign of a graph file.
    Canonical {
        #[arg(long)]
        graph: String,
    },
    /// Lie algebra weights.
    #[command(subcommand)]
    Weight(WeightCommand),
    /// Polywheel coordinates of a graph vector from su(2) weight products.
    PolywheelSolve {
        #[arg(long)]
        degree: usize,
        /// Graph vector file.
        #[arg(long, conflicts_with = "class")]
        input: Option<String>,
        /// Basis class name instead of a file.
        #[arg(long)]
        class: Option<String>,
    },
    /// Td^{1/2} or Td^{-1/2} in degree k.
    Td {
        #[arg(long, allow_hyphen_values = true)]
        power: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Basis::S)]
        basis: Basis,
    },
    /// Theta^k as a combination of polywheels.
    ThetaPolywheel(DegreeArg),
    /// chi_y genus of hilb:k or kummer:k.
    ChiY {
        #[arg(long)]
        space: String,
    },
    /// chi^m as polynomials in Chern numbers.
    ChiInChern {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Basis::C)]
        basis: Basis,
    },
    /// Chern numbers from chi^0..chi^k.
    InvertChi {
        #[arg(long)]
        degree: usize,
        /// chi^0..chi^k, comma separated; the rest follows by symmetry.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        /// Value of s = s2^4/48 in degree 4.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, value_enum, default_value_t = Basis::S)]
        basis: Basis,
    },
    /// Chern numbers and invariants of a space.
    Space {
        #[arg(long)]
        name: String,
    },
    /// One invariant of one space.
    Rw {
        #[arg(long)]
        space: String,
        #[arg(long)]
        class: String,
    },
    /// Express a space in the span of others.
    Span {
        #[arg(long)]
        target: String,
        /// Comma-separated space names.
        #[arg(long)]
        dictionary: String,
        #[arg(long, value_enum, default_value_t = Criterion::All)]
        r#match: Criterion,
    },
    /// Appendix tables.
    Tables {
        #[arg(long)]
        appendix: char,
    },
    /// Two combinations with equal Chern numbers and different invariants.
    CobordismDemo,
}

#[derive(Debug, Args)]
pub struct DegreeArg {
    #[arg(long)]
    pub degree: usize,
}

#[derive(Debug, Args)]
pub struct PartitionArg {
    /// Even wheel lengths, e.g. 4,2,2.
    #[arg(long)]
    pub partition: String,
}

#[derive(Debug, Subcommand)]
pub enum WeightCommand {
    /// su(2) weight of a graph, graph vector or basis class.
    Su2 {
        #[arg(long, conflicts_with = "class")]
        graph: Option<String>,
        #[arg(long)]
        class: Option<String>,
    },
    /// su(2) weight of a polywheel.
    Su2Polywheel {
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Recursion,
    Contract,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    S,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Criterion {
    All,
    Chern,
}

/// Output accumulated as `key: value` or `key<TAB>value` lines.
struct Out {
    format: Format,
    text: String,
}

impl Out {
    fn kv(&mut self, key: impl std::fmt::Display, value: impl std::fmt::Display) {
        let _ = match self.format {
            Format::Text => writeln!(self.text, "{key}: {value}"),
            Format::Tsv => writeln!(self.text, "{key}\t{value}"),
        };
    }

    fn line(&mut self, s: impl std::fmt::Display) {
        let _ = writeln!(self.text, "{s}");
    }
}

fn read(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{path}: {e}")))
}

fn class(s: &str) -> Result<ClassName, CliError> {
    ClassName::parse(s).map_err(|e| CliError::usage(e.to_string()))
}

fn join_partition(l: &Partition) -> String {
    l.to_string()
}

fn poly_terms(out: &mut Out, terms: impl IntoIterator<Item = (String, Q)>) {
    for (name, c) in terms {
        out.kv(name, c);
    }
}

fn c_terms(p: &rwinv_core::chern::SPolynomial) -> Vec<(String, Q)> {
    p.to_c_basis()
        .into_iter()
        .filter(|(_, c)| *c != Q::from_integer(0.into()))
        .map(|(l, c)| (monomial_name("c", &l).replace(' ', "*"), c))
        .collect()
}

fn s_terms(p: &rwinv_core::chern::SPolynomial) -> Vec<(String, Q)> {
    p.terms().iter().map(|(l, c)| (monomial_name("s", l).replace(' ', "*"), c.clone())).collect()
}

fn chern_lines(out: &mut Out, cv: &ChernVector, b: Basis) {
    match b {
        Basis::S => {
            for (l, v) in cv.s_values() {
                out.kv(monomial_name("s", l).replace(' ', "*"), v);
            }
        }
        Basis::C => {
            for (l, v) in cv.c_values() {
                out.kv(monomial_name("c", &l).replace(' ', "*"), v);
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let mut out = Out { format: cli.format, text: String::new() };
    match &cli.command {
        Command::Basis(DegreeArg { degree }) => {
            let b = basis(*degree)?;
            for (i, c) in b.classes().iter().enumerate() {
                let v = b.class_vector(i);
                let terms: Vec<String> = v.iter().map(|(k, q)| format!("{q} * {k}")).collect();
                out.kv(c, terms.join(" + "));
            }
        }
        Command::ExpandPolywheel(PartitionArg { partition }) => {
            let lam = parse_even_partition(partition)?;
            let v = closure(&lam)?;
            let b = basis(v.degree())?;
            for (c, x) in b.reduce_named(&v)? {
                out.kv(c, x);
            }
        }
        Command::Reduce { degree, input } => {
            let v = parse_graph_or_vector(&read(input)?)?;
            if v.degree() != *degree && !v.is_zero() {
                return Err(rwinv_core::Error::DegreeMismatch { expected: *degree, found: v.degree() }.into());
            }
            let b = basis(*degree)?;
            let coords = b.reduce_named(&v)?;
            if coords.is_empty() {
                out.line("0");
            }
            for (c, x) in coords {
                out.kv(c, x);
            }
        }
        Command::Canonical { graph } => {
            let g = parse_graph(&read(graph)?)?.graph;
            let c = canonicalize(&g);
            out.kv("sign", c.sign);
            if c.sign == 0 {
                out.line("# the graph vanishes modulo AS and has no canonical form");
            } else {
                out.kv("key", &c.key);
                out.text.push_str(&format_graph(&c.key.graph(), true));
            }
        }
        Command::Weight(WeightCommand::Su2 { graph, class: name }) => {
            let v = match (graph, name) {
                (Some(path), None) => parse_graph_or_vector(&read(path)?)?,
                (None, Some(name)) => {
                    let c = class(name)?;
                    let b = basis(c.degree() as usize)?;
                    rwinv_core::homology::GraphVector::from_graph(&b.class_graph(&c)?)
                }
                _ => return Err(CliError::usage("give exactly one of --graph or --class")),
            };
            out.line(lie_weight_vector(&v, &LieData::su2()));
        }
        Command::Weight(WeightCommand::Su2Polywheel { partition, method }) => {
            let lam = parse_even_partition(partition)?;
            let w = match method {
                Method::Closed => su2_closed_form(&lam)?,
                Method::Recursion => su2_recursion(&lam)?,
                Method::Contract => lie_weight_vector(&closure(&lam)?, &LieData::su2()),
            };
            out.line(w);
        }
        Command::PolywheelSolve { degree, input, class: name } => {
            let v = match (input, name) {
                (Some(path), None) => parse_graph_or_vector(&read(path)?)?,
                (None, Some(name)) => {
                    let c = class(name)?;
                    let b = basis(*degree)?;
                    rwinv_core::homology::GraphVector::from_graph(&b.class_graph(&c)?)
                }
                _ => return Err(CliError::usage("give exactly one of --input or --class")),
            };
            if v.degree() != *degree {
                return Err(rwinv_core::Error::DegreeMismatch { expected: *degree, found: v.degree() }.into());
            }
            match solve_polywheel_coords(&v, &LieData::su2())? {
                PolywheelSolution::Unique(x) => {
                    for (l, c) in x {
                        out.kv(join_partition(&l), c);
                    }
                }
                PolywheelSolution::Indeterminate { particular, nullspace } => {
                    out.kv("status", format!("indeterminate, {} free parameters", nullspace.len()));
                    for (l, c) in particular {
                        out.kv(join_partition(&l), c);
                    }
                }
                PolywheelSolution::Inconsistent => out.kv("status", "not in the polywheel span"),
            }
        }
        Command::Td { power, degree, basis: b } => {
            let sign = match power.as_str() {
                "+1/2" | "1/2" => 1,
                "-1/2" => -1,
                other => {
                    parse_rational(other)?;
                    return Err(CliError::usage(format!("power must be +1/2 or -1/2, got `{other}`")));
                }
            };
            let p = td_power(sign, *degree);
            match b {
                Basis::S => poly_terms(&mut out, s_terms(&p)),
                Basis::C => poly_terms(&mut out, c_terms(&p)),
            }
        }
        Command::ThetaPolywheel(DegreeArg { degree }) => {
            if *degree == 0 {
                return Err(CliError::usage("degree must be positive"));
            }
            for (p, a) in theta_power_in_polywheels(*degree) {
                out.kv(join_partition(&p.doubled()), a);
            }
        }
        Command::ChiY { space } => {
            let (name, chi) = if let Some(k) = space.strip_prefix("hilb:") {
                let k = k.parse().map_err(|_| CliError::usage(format!("bad degree in `{space}`")))?;
                (rwinv_core::spaces::hilbert_name(k), chi_y_hilbert(k)?)
            } else if let Some(k) = space.strip_prefix("kummer:") {
                let k = k.parse().map_err(|_| CliError::usage(format!("bad degree in `{space}`")))?;
                (rwinv_core::spaces::kummer_name(k), chi_y_kummer(k)?)
            } else {
                return Err(CliError::usage(format!("expected hilb:k or kummer:k, got `{space}`")));
            };
            let chi = ChiVector::new(chi)?;
            match out.format {
                Format::Text => out.line(chi_line(&name, &chi)),
                Format::Tsv => {
                    for (m, v) in chi.values().iter().enumerate() {
                        out.kv(format!("chi^{m}"), v);
                    }
                }
            }
        }
        Command::ChiInChern { degree, basis: b } => {
            for (m, p) in chi_polynomials(*degree)?.iter().enumerate() {
                let terms = match b {
                    Basis::S => s_terms(p),
                    Basis::C => c_terms(p),
                };
                let body: Vec<String> = terms.iter().map(|(n, c)| format!("{c}*{n}")).collect();
                out.kv(format!("chi^{m}"), body.join(" + "));
            }
        }
        Command::InvertChi { degree, values, s, basis: b } => {
            let half = parse_rationals(values)?;
            if half.len() != degree + 1 {
                return Err(CliError::usage(format!(
                    "degree {degree} needs {} values, got {}",
                    degree + 1,
                    half.len()
                )));
            }
            let chi = ChiVector::from_half(&half)?;
            let inv = invert_chi(&chi)?;
            match (&inv.direction, s) {
                (Some(_), None) => {
                    let dir = inv.direction.as_ref().expect("checked");
                    let (base, dir) = match b {
                        Basis::S => (inv.base.s_values().clone(), dir.s_values().clone()),
                        Basis::C => (inv.base.c_values(), dir.c_values()),
                    };
                    let prefix = if *b == Basis::S { "s" } else { "c" };
                    for (l, v) in &base {
                        let name = monomial_name(prefix, l).replace(' ', "*");
                        out.kv(name, format!("{}*s + {}", dir[l], v));
                    }
                }
                _ => {
                    let s = s.as_deref().map(parse_rational).transpose()?.unwrap_or_else(|| Q::from_integer(0.into()));
                    chern_lines(&mut out, &inv.at(&s)?, *b);
                }
            }
        }
        Command::Space { name } => {
            let mut e = Engine::new();
            let x = parse_space(&mut e, name)?;
            out.kv("name", x.name());
            out.kv("degree", x.degree());
            if let Some(s) = x.s_parameter() {
                out.kv("s", s);
            }
            if let Some(chi) = x.chi() {
                let v: Vec<String> = chi.values().iter().map(ToString::to_string).collect();
                out.kv("chi_y", v.join(" "));
            }
            chern_lines(&mut out, x.chern(), Basis::S);
            chern_lines(&mut out, x.chern(), Basis::C);
            for entry in x.report().entries() {
                match &entry.value {
                    Some((v, p)) => out.kv(format!("b[{}]", entry.class), format!("{v} ({p})")),
                    None => out.kv(format!("b[{}]", entry.class), "unknown"),
                }
            }
        }
        Command::Rw { space, class: name } => {
            let mut e = Engine::new();
            let x = parse_space(&mut e, space)?;
            let c = class(name)?;
            out.line(x.report().value(&c)?);
        }
        Command::Span { target, dictionary, r#match } => {
            let mut e = Engine::new();
            let t = parse_space(&mut e, target)?;
            let dict = dictionary.split(',').map(|n| parse_space(&mut e, n)).collect::<Result<Vec<_>, _>>()?;
            let criterion = match r#match {
                Criterion::All => MatchCriterion::AllInvariants,
                Criterion::Chern => MatchCriterion::ChernOnly,
            };
            match express_in_span(&t, &dict, criterion)? {
                SpanSolution::Unique(x) => {
                    for (d, c) in dict.iter().zip(x) {
                        out.kv(d.name(), c);
                    }
                }
                SpanSolution::NonUnique { particular, nullspace } => {
                    out.kv("status", format!("not unique, {} free parameters", nullspace.len()));
                    for (d, c) in dict.iter().zip(particular) {
                        out.kv(d.name(), c);
                    }
                }
                SpanSolution::Infeasible => out.kv("status", "infeasible"),
            }
        }
        Command::Tables { appendix: letter } => {
            let tables = appendix(*letter)?;
            out.text = match out.format {
                Format::Text => render_text(&tables),
                Format::Tsv => render_tsv(&tables),
            };
        }
        Command::CobordismDemo => {
            let mut e = Engine::new();
            let r = cobordism_distinguish(&mut e)?;
            let class = "theta2^2";
            out.kv("X", r.combination.name());
            out.kv("chern numbers of X equal those of T^[[4]]", r.chern_match);
            out.kv(format!("b[{class}](X)"), &r.b_combination);
            out.kv(format!("b[{class}](T^[[4]])"), &r.b_kummer);
            out.kv("distinguished", r.distinguished());
            out.kv("left", r.integral_left.name());
            out.kv("right", r.integral_right.name());
            out.kv("chern numbers of left and right agree", r.integral_chern_match);
            out.kv(format!("b[{class}](left)"), &r.b_integral_left);
            out.kv(format!("b[{class}](right)"), &r.b_integral_right);
            out.kv("note", "the right side uses SxS^[3], the only degree-four reading of its second term");
            out.kv("note", "values are paired with the side they are computed on; 336*57600 = 19353600 fixes the left");
        }
    }
    Ok(out.text)
}

/// Runs the command line, writing to `out` and `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
