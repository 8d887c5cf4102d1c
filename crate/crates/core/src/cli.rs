//! Command-line surface: JSON problem descriptions in, JSON reports on
//! stdout, human-readable tables on stderr (suppressed by `--quiet`),
//! resource caps from the `DFILAB_CAPS` environment variable, and exit
//! codes 0 (success), 1 (negative verdict), 2 (input error), 3 (cap or
//! budget exceeded).

use crate::algebra::{Field, TermOrder, Var, VarOrder};
use crate::caps::Caps;
use crate::cm::{cor_cmness_check, pd_and_cm};
use crate::dfi::{
    build_rdfi, clique_intersection_profile, is_lcm_closed, is_unit_interval,
    lcm_closed_order_sweep, RDfi,
};
use crate::encomplex::{build_en_complex, linear_strand_rank_check};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, is_groebner, necessity_search, Budget};
use crate::lcmlattice::{gpw_betti, MonomialIdeal};
use crate::simplicial::{clique_complex, Face, SimplicialComplex};
use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Deserialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

mod selftest;

/// Exact-arithmetic toolkit for determinantal facet ideals: clique
/// decompositions, lcm-closedness, Groebner verification, lcm-lattice
/// Betti numbers, sparse complex strands, and Cohen-Macaulay verdicts.
#[derive(Debug, Parser)]
#[command(name = "dfilab", version, about)]
pub struct Cli {
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    /// Monomial ideal generated by the lead terms of the facet minors.
    Lt,
    /// Lead terms of a computed reduced basis (the true initial ideal).
    Initial,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximal-clique decomposition and f-vector of the clique complex.
    Decompose { input: PathBuf },
    /// Decide the lcm-closed and unit-interval conditions.
    Check {
        input: PathBuf,
        /// Report the lcm-closed condition; exit 1 when it fails.
        #[arg(long)]
        lcm_closed: bool,
        /// Report the unit-interval condition; exit 1 when it fails.
        #[arg(long)]
        unit_interval: bool,
        /// Sweep every row-permuted lexicographic order and report
        /// diagonality and lcm-closedness per order.
        #[arg(long)]
        all_diagonal_lex: bool,
    },
    /// Compute the reduced basis of the facet minors, or verify that the
    /// minors already are one.
    Gb {
        input: PathBuf,
        /// Run the S-pair criterion on the generators without completing
        /// them; exit 1 and print the first failing pair when they are
        /// not a basis.
        #[arg(long)]
        verify_only: bool,
    },
    /// Multigraded Betti table of the lead-term or initial ideal.
    Betti {
        input: PathBuf,
        /// Which monomial ideal to resolve.
        #[arg(long, value_enum, default_value_t = Side::Lt)]
        side: Side,
        /// Override the coefficient field: `q` or `fp:P`.
        #[arg(long)]
        field: Option<String>,
        /// Include the per-multidegree detail in the JSON output.
        #[arg(long)]
        multigraded: bool,
    },
    /// i-nonfaces of the clique complex with a given cardinality.
    Nonfaces {
        input: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        card: usize,
    },
    /// Ranks of the sparse complex on the clique complex, the
    /// first-homology/1-nonface comparison, and the strand-rank check.
    En {
        input: PathBuf,
        /// Also compute one strand homology rank, e.g. `--homology 1,4`.
        #[arg(long, value_name = "I,DEG")]
        homology: Option<String>,
    },
    /// Cohen-Macaulay verdict for the lead-term ideal.
    Cm { input: PathBuf },
    /// Exhaustive sweep over all pure complexes with n-vertex facets on
    /// up to `mmax` vertices: does the basis property ever hold without
    /// lcm-closedness?
    Search {
        /// Minor size; the sweep covers the square case r = n.
        #[arg(long)]
        r: usize,
        /// Number of matrix rows.
        #[arg(long)]
        n: u16,
        /// Largest vertex count to sweep.
        #[arg(long)]
        mmax: u32,
        /// Stop after this many complexes.
        #[arg(long)]
        limit: Option<usize>,
        /// Emit JSON instead of CSV.
        #[arg(long)]
        json: bool,
    },
    /// Run the stored worked examples and print one pass/fail line each.
    Selftest,
}

// ---------------------------------------------------------------------
// input schema

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemSpec {
    n: u16,
    m: u32,
    r: usize,
    complex: ComplexSpec,
    #[serde(default)]
    order: Option<OrderSpec>,
    #[serde(default)]
    field: Option<FieldSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexSpec {
    #[serde(default)]
    facets: Option<Vec<Vec<u32>>>,
    #[serde(default)]
    intervals: Option<Vec<[u32; 2]>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderSpec {
    #[serde(rename = "type")]
    kind: String,
    variable_order: VarOrderSpec,
    #[serde(default)]
    weights: Option<Vec<u64>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum VarOrderSpec {
    Named(String),
    Explicit(Vec<(u16, u16)>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSpec {
    #[serde(rename = "type")]
    kind: String,
    #[serde(default)]
    p: Option<u64>,
}

/// A fully resolved problem: complex, matrix shape, order, and field.
pub struct Problem {
    pub n: u16,
    pub m: u32,
    pub r: usize,
    pub delta: SimplicialComplex,
    pub order: Arc<TermOrder>,
    pub field: Field,
}

impl Problem {
    pub fn build_dfi(&self) -> Result<RDfi> {
        build_rdfi(
            self.delta.clone(),
            self.n,
            self.r,
            self.order.clone(),
            self.field,
        )
    }
}

/// Read and validate a problem description from a JSON file.
pub fn load_problem(path: &Path) -> Result<Problem> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let spec: ProblemSpec = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("{} is not a valid problem: {e}", path.display())))?;
    resolve_problem(spec)
}

fn resolve_problem(spec: ProblemSpec) -> Result<Problem> {
    if spec.m > u16::MAX as u32 {
        return Err(Error::InvalidInput(format!(
            "m = {} exceeds the supported matrix width",
            spec.m
        )));
    }
    let facets = expand_complex(&spec.complex, spec.r, spec.m)?;
    let delta = SimplicialComplex::new(spec.m, facets)?;
    let order = resolve_order(spec.order.as_ref(), spec.n, spec.m as u16)?;
    let field = resolve_field(spec.field.as_ref())?;
    Ok(Problem {
        n: spec.n,
        m: spec.m,
        r: spec.r,
        delta,
        order,
        field,
    })
}

fn expand_complex(complex: &ComplexSpec, r: usize, m: u32) -> Result<Vec<Face>> {
    match (&complex.facets, &complex.intervals) {
        (Some(facets), None) => facets
            .iter()
            .map(|f| Face::new(f.clone()))
            .collect::<Result<Vec<_>>>(),
        (None, Some(intervals)) => {
            let mut out: Vec<Face> = Vec::new();
            for &[a, b] in intervals {
                if a > b || a == 0 || b > m {
                    return Err(Error::InvalidInput(format!(
                        "interval [{a},{b}] does not fit within 1..={m}"
                    )));
                }
                let clique: Vec<u32> = (a..=b).collect();
                if clique.len() < r {
                    return Err(Error::InvalidInput(format!(
                        "interval [{a},{b}] has fewer than r = {r} vertices"
                    )));
                }
                for subset in clique.into_iter().combinations(r) {
                    out.push(Face::new(subset)?);
                }
            }
            Ok(out)
        }
        _ => Err(Error::InvalidInput(
            "the complex needs exactly one of `facets` or `intervals`".into(),
        )),
    }
}

fn resolve_var_order(spec: &VarOrderSpec) -> Result<VarOrder> {
    match spec {
        VarOrderSpec::Named(name) if name == "row_major" => Ok(VarOrder::RowMajor),
        VarOrderSpec::Named(name) => Err(Error::InvalidInput(format!(
            "unknown variable order `{name}`; use \"row_major\" or an explicit [[row,col],...] listing"
        ))),
        VarOrderSpec::Explicit(pairs) => {
            if pairs.is_empty() {
                return Err(Error::InvalidInput("explicit variable order is empty".into()));
            }
            Ok(VarOrder::Explicit(
                pairs.iter().map(|&(r, c)| Var::x(r, c)).collect(),
            ))
        }
    }
}

fn resolve_order(spec: Option<&OrderSpec>, n: u16, m: u16) -> Result<Arc<TermOrder>> {
    let Some(spec) = spec else {
        return Ok(TermOrder::default_lex());
    };
    let var_order = resolve_var_order(&spec.variable_order)?;
    let ordered_vars: Vec<Var> = match &var_order {
        VarOrder::RowMajor => (1..=n)
            .flat_map(|r| (1..=m).map(move |c| Var::x(r, c)))
            .collect(),
        VarOrder::Explicit(vars) => vars.clone(),
    };
    match spec.kind.as_str() {
        "lex" | "grlex" if spec.weights.is_some() => Err(Error::InvalidInput(format!(
            "order type `{}` does not take weights",
            spec.kind
        ))),
        "lex" => Ok(Arc::new(TermOrder::Lex(var_order))),
        "grlex" => Ok(Arc::new(TermOrder::Weight {
            weights: ordered_vars.into_iter().map(|v| (v, 1)).collect(),
            tiebreak: var_order,
        })),
        "weight" => {
            let weights = spec.weights.as_ref().ok_or_else(|| {
                Error::InvalidInput("order type `weight` needs a weights array".into())
            })?;
            if weights.len() != ordered_vars.len() {
                return Err(Error::InvalidInput(format!(
                    "got {} weights for {} variables; list one weight per variable in \
                     variable order",
                    weights.len(),
                    ordered_vars.len()
                )));
            }
            Ok(Arc::new(TermOrder::Weight {
                weights: ordered_vars.into_iter().zip(weights.iter().copied()).collect(),
                tiebreak: var_order,
            }))
        }
        other => Err(Error::InvalidInput(format!(
            "unknown order type `{other}`; use \"lex\", \"grlex\" or \"weight\""
        ))),
    }
}

fn resolve_field(spec: Option<&FieldSpec>) -> Result<Field> {
    let Some(spec) = spec else {
        return Ok(Field::Rationals);
    };
    match (spec.kind.as_str(), spec.p) {
        ("rationals", None) => Ok(Field::Rationals),
        ("rationals", Some(_)) => Err(Error::InvalidInput(
            "field type `rationals` does not take a modulus".into(),
        )),
        ("prime", Some(p)) if Field::is_prime(p) => Ok(Field::Prime(p)),
        ("prime", Some(p)) => Err(Error::InvalidInput(format!("{p} is not prime"))),
        ("prime", None) => Err(Error::InvalidInput(
            "field type `prime` needs a modulus `p`".into(),
        )),
        (other, _) => Err(Error::InvalidInput(format!(
            "unknown field type `{other}`; use \"rationals\" or \"prime\""
        ))),
    }
}

/// Parse the `--field` override: `q` or `fp:P`.
fn parse_field_flag(flag: &str) -> Result<Field> {
    if flag == "q" {
        return Ok(Field::Rationals);
    }
    if let Some(p) = flag.strip_prefix("fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad field modulus in `{flag}`")))?;
        if !Field::is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        return Ok(Field::Prime(p));
    }
    Err(Error::InvalidInput(format!(
        "unknown field `{flag}`; use `q` or `fp:P`"
    )))
}

fn field_name(field: Field) -> String {
    match field {
        Field::Rationals => "Q".into(),
        Field::Prime(p) => format!("GF({p})"),
    }
}

// ---------------------------------------------------------------------
// driver

pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    match Caps::from_env().and_then(|caps| run(cli, &caps)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

struct Output {
    json: Value,
    human: String,
    exit: u8,
}

/// Write to stdout, treating a closed pipe as an orderly stop rather
/// than a panic (`dfilab ... | head` is legitimate usage).
fn print_stdout(text: &str) -> Result<()> {
    use std::io::Write;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(Error::InvalidInput(format!("cannot write report: {e}"))),
    }
}

fn emit(quiet: bool, out: Output) -> Result<u8> {
    if !out.json.is_null() {
        let text = serde_json::to_string_pretty(&out.json)
            .map_err(|e| Error::InvalidInput(format!("report serialization failed: {e}")))?;
        print_stdout(&text)?;
    }
    if !quiet && !out.human.is_empty() {
        eprintln!("{}", out.human);
    }
    Ok(out.exit)
}

/// Dispatch one parsed invocation. Returns the process exit code.
pub fn run(cli: Cli, caps: &Caps) -> Result<u8> {
    let out = match cli.command {
        Command::Decompose { input } => decompose(&load_problem(&input)?)?,
        Command::Check {
            input,
            lcm_closed,
            unit_interval,
            all_diagonal_lex,
        } => check(
            &load_problem(&input)?,
            lcm_closed,
            unit_interval,
            all_diagonal_lex,
        )?,
        Command::Gb { input, verify_only } => gb(&load_problem(&input)?, verify_only, caps)?,
        Command::Betti {
            input,
            side,
            field,
            multigraded,
        } => betti(&load_problem(&input)?, side, field.as_deref(), multigraded, caps)?,
        Command::Nonfaces { input, i, card } => nonfaces(&load_problem(&input)?, i, card)?,
        Command::En { input, homology } => en(&load_problem(&input)?, homology.as_deref(), caps)?,
        Command::Cm { input } => cm(&load_problem(&input)?, caps)?,
        Command::Search {
            r,
            n,
            mmax,
            limit,
            json,
        } => search(r, n, mmax, limit, json, caps)?,
        Command::Selftest => selftest::run(caps)?,
    };
    emit(cli.quiet, out)
}

// ---------------------------------------------------------------------
// subcommands

fn decompose(problem: &Problem) -> Result<Output> {
    let dfi = problem.build_dfi()?;
    let d = dfi.decomposition();
    let profile = clique_intersection_profile(&dfi);
    let json = json!({
        "n": problem.n,
        "m": problem.m,
        "r": problem.r,
        "facets": problem.delta.facets(),
        "cliques": d.cliques(),
        "f_vector": d.f_vector(),
        "max_face_cardinality": d.max_face_card(),
        "intersection_profile": {"max": profile.max, "pairs": profile.pairs},
        "generators": dfi.generators().len(),
    });
    let human = format!(
        "{} facet(s), {} maximal clique(s): {}\nf-vector {:?}, largest pairwise intersection {}",
        problem.delta.facets().len(),
        d.cliques().len(),
        d.cliques().iter().map(|c| c.to_string()).join(" "),
        d.f_vector(),
        profile.max,
    );
    Ok(Output {
        json,
        human,
        exit: 0,
    })
}

fn check(
    problem: &Problem,
    lcm_closed: bool,
    unit_interval: bool,
    all_diagonal_lex: bool,
) -> Result<Output> {
    let dfi = problem.build_dfi()?;
    let run_all = !lcm_closed && !unit_interval && !all_diagonal_lex;
    let mut body = serde_json::Map::new();
    let mut human = Vec::new();
    let mut exit = 0u8;

    if lcm_closed || run_all {
        let report = is_lcm_closed(&dfi);
        human.push(format!(
            "lcm-closed: {} ({} pair(s): {} coprime, {} resolved, {} missing)",
            report.verdict,
            report.pairs_checked,
            report.coprime_pairs,
            report.resolved.len(),
            report.missing.len()
        ));
        if lcm_closed && !report.verdict {
            exit = 1;
        }
        body.insert("lcm_closed".into(), serde_json::to_value(&report).unwrap());
    }
    if unit_interval || run_all {
        let verdict = is_unit_interval(&dfi);
        human.push(format!("unit-interval: {verdict}"));
        if unit_interval && !verdict {
            exit = 1;
        }
        body.insert("unit_interval".into(), json!(verdict));
    }
    if all_diagonal_lex {
        let rows = lcm_closed_order_sweep(&dfi)?;
        let diagonal = rows.iter().filter(|r| r.is_diagonal).count();
        let closed = rows
            .iter()
            .filter(|r| r.is_diagonal && r.lcm_closed)
            .count();
        human.push(format!(
            "row-permuted lex sweep: {closed}/{diagonal} diagonal order(s) lcm-closed \
             ({} orders total)",
            rows.len()
        ));
        body.insert("order_sweep".into(), serde_json::to_value(&rows).unwrap());
    }
    Ok(Output {
        json: Value::Object(body),
        human: human.join("\n"),
        exit,
    })
}

fn gb(problem: &Problem, verify_only: bool, caps: &Caps) -> Result<Output> {
    let dfi = problem.build_dfi()?;
    let gens = dfi.polynomials();
    let mut budget = Budget::new(caps.gb_steps);
    if verify_only {
        let check = is_groebner(&gens, &mut budget)?;
        let labels: Vec<String> = dfi.generators().iter().map(|g| g.label()).collect();
        let failure = check.failure.as_ref().map(|f| {
            json!({
                "first": f.first,
                "first_label": labels[f.first],
                "second": f.second,
                "second_label": labels[f.second],
                "lead_lcm": f.lead_lcm.to_string(),
                "normal_form": f.normal_form.to_string(),
            })
        });
        let human = match &check.failure {
            None => format!(
                "the {} facet minors form a reduced basis ({} pair(s) reduced, {} coprime)",
                gens.len(),
                check.pairs_reduced,
                check.coprime_skips
            ),
            Some(f) => format!(
                "not a basis: the pair {} x {} leaves the nonzero remainder {}",
                labels[f.first], labels[f.second], f.normal_form
            ),
        };
        Ok(Output {
            json: json!({
                "verdict": check.verdict,
                "pairs_reduced": check.pairs_reduced,
                "coprime_skips": check.coprime_skips,
                "failure": failure,
            }),
            human,
            exit: u8::from(!check.verdict),
        })
    } else {
        let basis = buchberger(&gens, &mut budget)?;
        let human = format!(
            "reduced basis with {} element(s) under {} (input had {})",
            basis.elements().len(),
            basis.order(),
            gens.len()
        );
        Ok(Output {
            json: json!({
                "order": basis.order().to_string(),
                "input_generators": gens.len(),
                "size": basis.elements().len(),
                "lead_terms": basis.lead_monomials().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "elements": basis.elements().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            }),
            human,
            exit: 0,
        })
    }
}

fn betti(
    problem: &Problem,
    side: Side,
    field_flag: Option<&str>,
    multigraded: bool,
    caps: &Caps,
) -> Result<Output> {
    let field = match field_flag {
        Some(flag) => parse_field_flag(flag)?,
        None => problem.field,
    };
    let dfi = build_rdfi(
        problem.delta.clone(),
        problem.n,
        problem.r,
        problem.order.clone(),
        field,
    )?;
    let ideal = match side {
        Side::Lt => MonomialIdeal::new(dfi.lead_monomials())?,
        Side::Initial => {
            let mut budget = Budget::new(caps.gb_steps);
            MonomialIdeal::new(buchberger(&dfi.polynomials(), &mut budget)?.lead_monomials())?
        }
    };
    let table = gpw_betti(&ideal, field, caps)?;
    let mut table_json = table.to_json();
    if !multigraded {
        table_json.as_object_mut().unwrap().remove("multigraded");
    }
    let side_name = match side {
        Side::Lt => "lt",
        Side::Initial => "initial",
    };
    Ok(Output {
        json: json!({
            "side": side_name,
            "field": field_name(field),
            "minimal_generators": ideal.num_gens(),
            "table": table_json,
        }),
        human: table.render(),
        exit: 0,
    })
}

fn nonfaces(problem: &Problem, i: usize, card: usize) -> Result<Output> {
    if i < 1 {
        return Err(Error::InvalidInput("i-nonfaces need i >= 1".into()));
    }
    if card < 2 {
        return Err(Error::InvalidInput(
            "an i-nonface has at least two vertices".into(),
        ));
    }
    let dfi = problem.build_dfi()?;
    let found = dfi.decomposition().i_nonfaces(i, card);
    let human = if found.is_empty() {
        format!("no {i}-nonfaces of cardinality {card}")
    } else {
        format!(
            "{} {i}-nonface(s) of cardinality {card}: {}",
            found.len(),
            found.iter().map(|f| f.to_string()).join(" ")
        )
    };
    Ok(Output {
        json: json!({"i": i, "card": card, "count": found.len(), "nonfaces": found}),
        human,
        exit: 0,
    })
}

fn en(problem: &Problem, homology: Option<&str>, caps: &Caps) -> Result<Output> {
    // The sparse complex depends on the clique decomposition and the row
    // count n alone: its modules sit on the n-vertex faces of the clique
    // complex, whatever the facet size r of the input complex is.
    let d = clique_complex(&problem.delta, problem.r)?;
    let complex = build_en_complex(&d, problem.n, &problem.order)?;
    let ranks: Vec<u64> = (0..=complex.top_degree()).map(|i| complex.rank(i)).collect();

    let h1 = complex.strand_homology(1, problem.n as u32 + 1, problem.field);
    let one_nonfaces = d.i_nonfaces(1, problem.n as usize + 1);
    let agrees = (h1 == 0) == one_nonfaces.is_empty();

    let strand_check = if one_nonfaces.is_empty() {
        Some(linear_strand_rank_check(
            &d,
            problem.n,
            &problem.order,
            problem.field,
            caps,
        )?)
    } else {
        None
    };

    let homology_section = match homology {
        None => None,
        Some(flag) => {
            let (i, degree) = flag
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<u32>().ok()?)))
                .ok_or_else(|| {
                    Error::InvalidInput(format!("`--homology {flag}` is not of the form i,degree"))
                })?;
            if i < 1 {
                return Err(Error::InvalidInput(
                    "strand homology is defined for homological degree i >= 1".into(),
                ));
            }
            let rank = complex.strand_homology(i, degree, problem.field);
            Some(json!({"i": i, "degree": degree, "rank": rank}))
        }
    };

    let mut human = vec![format!(
        "ranks {:?} over degrees 0..={}",
        ranks,
        complex.top_degree()
    )];
    human.push(format!(
        "H_1 in internal degree {} has rank {h1}; {} 1-nonface(s) of cardinality {} — {}",
        problem.n + 1,
        one_nonfaces.len(),
        problem.n + 1,
        if agrees { "consistent" } else { "INCONSISTENT" }
    ));
    if let Some(report) = &strand_check {
        human.push(format!(
            "strand ranks vs linear Betti numbers: {}",
            if report.all_equal { "equal" } else { "DIFFER" }
        ));
    }
    if let Some(section) = &homology_section {
        human.push(format!(
            "H_{} in internal degree {} has rank {}",
            section["i"], section["degree"], section["rank"]
        ));
    }

    Ok(Output {
        json: json!({
            "n": problem.n,
            "ranks": ranks,
            "top_degree": complex.top_degree(),
            "one_nonface": {
                "h1_rank": h1,
                "nonfaces": one_nonfaces,
                "agrees": agrees,
            },
            "strand_check": strand_check.map(|r| serde_json::to_value(&r).unwrap()),
            "homology": homology_section,
        }),
        human: human.join("\n"),
        exit: 0,
    })
}

fn cm(problem: &Problem, caps: &Caps) -> Result<Output> {
    let dfi = problem.build_dfi()?;
    let verdict = pd_and_cm(
        &MonomialIdeal::new(dfi.lead_monomials())?,
        problem.field,
        caps,
    )?;
    let (corollary, hypothesis_failure) = match cor_cmness_check(&dfi, caps) {
        Ok(report) => (Some(report), None),
        Err(Error::HypothesisFailed(msg)) => (None, Some(msg)),
        Err(e) => return Err(e),
    };
    let mut human = vec![format!(
        "lead-term ideal: height {}, projective dimension {} — {}",
        verdict.ht,
        verdict.pd,
        if verdict.cm_initial {
            "Cohen-Macaulay"
        } else {
            "NOT Cohen-Macaulay"
        }
    )];
    match (&corollary, &hypothesis_failure) {
        (Some(report), _) => human.push(format!(
            "small-intersection route: {:?}, cross-clique leads coprime: {}",
            report.path, report.cross_leads_coprime
        )),
        (None, Some(msg)) => human.push(format!("small-intersection route unavailable: {msg}")),
        _ => {}
    }
    let exit = u8::from(!verdict.cm_initial);
    Ok(Output {
        json: json!({
            "verdict": verdict,
            "corollary": corollary,
            "hypothesis_failure": hypothesis_failure,
        }),
        human: human.join("\n"),
        exit,
    })
}

fn search(
    r: usize,
    n: u16,
    mmax: u32,
    limit: Option<usize>,
    as_json: bool,
    caps: &Caps,
) -> Result<Output> {
    if r != n as usize {
        return Err(Error::InvalidInput(format!(
            "the sweep covers the square case; got r = {r}, n = {n}"
        )));
    }
    let report = necessity_search(
        n,
        mmax,
        &TermOrder::default_lex(),
        Field::Rationals,
        limit.unwrap_or(usize::MAX),
        caps.gb_steps,
    )?;
    let counterexamples = report.rows.iter().filter(|row| row.counterexample).count();
    let human = format!(
        "{} complex(es) swept{}; {} basis-without-lcm-closed counterexample(s)",
        report.rows.len(),
        if report.truncated { " (truncated)" } else { "" },
        counterexamples
    );
    if as_json {
        return Ok(Output {
            json: serde_json::to_value(&report)
                .map_err(|e| Error::InvalidInput(format!("report serialization failed: {e}")))?,
            human,
            exit: 0,
        });
    }
    let mut csv = String::from("m,facets,generators,lcm_closed,groebner,counterexample");
    for row in &report.rows {
        csv.push_str(&format!(
            "\n{},\"{}\",{},{},{},{}",
            row.m,
            row.facets.iter().map(|f| f.to_string()).join(";"),
            row.generators,
            row.lcm_closed,
            row.groebner,
            row.counterexample
        ));
    }
    // CSV goes to stdout verbatim; the JSON wrapper is bypassed.
    print_stdout(&csv)?;
    Ok(Output {
        json: Value::Null,
        human,
        exit: 0,
    })
}

// `search` prints CSV itself; every other subcommand flows through `emit`.
