//! Command-line front end: argument parsing, report assembly and rendering.
//!
//! Every command builds a [`Report`]; text and JSON are two renderings of it.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::cohomology::{character_identity_check, dimension_cross_check};
use crate::error::Error;
use crate::multengine::{auto_kappa, validate_e, vogan_norm_sq, EModule, Engine, KTypeTable};
use crate::pairspec::{PairConfig, ReductivePair};
use crate::parabolic::{check_containment, parabolic_for, CompatibleParabolic};
use crate::rational::{fmt_q, parse_q, qi, Matrix, Weight, Q};
use crate::WeightMultiset;

#[derive(Debug, Parser)]
#[command(name = "fundseries", version, about = "k-type multiplicities of fundamental series modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the pair data: root data of g and k, t-characters, rho, form on t*.
    Describe(DescribeArgs),
    /// Print the compatible parabolic chosen for mu.
    Parabolic(ParabolicArgs),
    /// Print the k-type table and the nonvanishing verdicts.
    Table(RunArgs),
    /// Run every check and print one PASS/FAIL line per check.
    Verify(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct DescribeArgs {
    /// Built-in pair name or path to a pair config file.
    #[arg(long)]
    pub pair: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ParabolicArgs {
    #[arg(long)]
    pub pair: String,
    /// Comma-separated t*-coordinates, e.g. `0` or `1,-1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    /// Order in which the t*-basis breaks ties, e.g. `1,0`.
    #[arg(long)]
    pub tiebreak: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub pair: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    /// Highest weight of E in simple-root coordinates of g, or `auto`.
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub kappa: String,
    /// Largest `||delta + 2 rho||^2` to tabulate; defaults to `16 ||mu + 2 rho||^2 + 16`.
    #[arg(long, allow_hyphen_values = true)]
    pub cutoff: Option<String>,
    #[arg(long)]
    pub tiebreak: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Failed(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

/// Exact rational as `[numerator, denominator]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rat(pub i64, pub i64);

pub type WeightJson = Vec<Rat>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultEntry {
    pub weight: WeightJson,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSummary {
    pub name: String,
    pub g_type: String,
    pub g_rank: usize,
    pub t_dim: usize,
    pub k_simple_roots: Vec<WeightJson>,
    pub k_positive_roots: Vec<WeightJson>,
    pub weyl_k_order: usize,
    pub rho: WeightJson,
    pub t_form: Vec<Vec<Rat>>,
    pub chi_t_g: Vec<MultEntry>,
    pub chi_t_k: Vec<MultEntry>,
    pub chi_t_perp: Vec<MultEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicSummary {
    pub mu: WeightJson,
    pub tiebreak: Vec<usize>,
    pub lex_rows: Vec<WeightJson>,
    pub n: Vec<MultEntry>,
    pub m: Vec<MultEntry>,
    pub n_cap_k: Vec<MultEntry>,
    pub n_cap_perp: Vec<MultEntry>,
    pub s: usize,
    pub rho_n: WeightJson,
    pub rho_n_perp: WeightJson,
    pub levi_roots: Vec<WeightJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ESummary {
    pub kappa: WeightJson,
    pub kappa_auto: bool,
    pub omega: WeightJson,
    pub dim_e: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowSummary {
    pub delta: WeightJson,
    pub vogan_norm_sq: Rat,
    pub chi: i64,
    pub bound_s: u64,
    pub bound_total: u64,
    pub lemma3_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSummary {
    pub cutoff: Rat,
    pub rows: Vec<RowSummary>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(name: &str, counterexample: Option<String>) -> Self {
        let status = if counterexample.is_some() { Status::Fail } else { Status::Pass };
        CheckResult { name: name.into(), status, detail: counterexample }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub pair: Option<PairSummary>,
    pub parabolic: Option<ParabolicSummary>,
    pub e: Option<ESummary>,
    pub table: Option<TableSummary>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            pair: None,
            parabolic: None,
            e: None,
            table: None,
            checks: Vec::new(),
            passed: true,
        }
    }

    fn push(&mut self, check: CheckResult) {
        if check.status == Status::Fail {
            self.passed = false;
        }
        self.checks.push(check);
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn rat(x: &Q) -> Result<Rat, Error> {
    match (x.numer().to_i64(), x.denom().to_i64()) {
        (Some(n), Some(d)) => Ok(Rat(n, d)),
        _ => Err(Error::Guard(format!("rational {} does not fit in 64 bits", fmt_q(x)))),
    }
}

fn weight_json(w: &Weight) -> Result<WeightJson, Error> {
    w.0.iter().map(rat).collect()
}

fn weights_json<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> Result<Vec<WeightJson>, Error> {
    ws.into_iter().map(weight_json).collect()
}

fn multiset_json(m: &WeightMultiset) -> Result<Vec<MultEntry>, Error> {
    m.iter().map(|(w, mult)| Ok(MultEntry { weight: weight_json(w)?, mult })).collect()
}

fn matrix_json(m: &Matrix) -> Result<Vec<Vec<Rat>>, Error> {
    m.to_rows().iter().map(|r| r.iter().map(rat).collect()).collect()
}

pub fn parse_weight(text: &str, dim: usize, what: &str) -> Result<Weight, CliError> {
    let coords = text
        .split(',')
        .map(|c| parse_q(c).map_err(|e| CliError::Usage(format!("--{what}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != dim {
        return Err(CliError::Usage(format!("--{what} `{text}` has {} coordinates, expected {dim}", coords.len())));
    }
    Ok(Weight(coords))
}

pub fn parse_tiebreak(text: Option<&str>, dim: usize) -> Result<Vec<usize>, CliError> {
    let order: Vec<usize> = match text {
        None => return Ok((0..dim).collect()),
        Some(t) => t
            .split(',')
            .map(|c| c.trim().parse().map_err(|_| CliError::Usage(format!("--tiebreak: `{c}` is not an index"))))
            .collect::<Result<_, _>>()?,
    };
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (0..dim).collect::<Vec<_>>() {
        return Err(CliError::Usage(format!("--tiebreak {order:?} is not a permutation of 0..{dim}")));
    }
    Ok(order)
}

fn load_pair(source: &str) -> Result<ReductivePair, Error> {
    PairConfig::load(source)?.build()
}

fn pair_summary(pair: &ReductivePair) -> Result<PairSummary, Error> {
    let positive: Vec<Weight> = pair.positive_k_roots().expanded();
    Ok(PairSummary {
        name: pair.name.clone(),
        g_type: pair.g_label.clone(),
        g_rank: pair.g.rank(),
        t_dim: pair.t_dim(),
        k_simple_roots: weights_json(pair.k.simple_roots())?,
        k_positive_roots: weights_json(&positive)?,
        weyl_k_order: pair.weyl_k.len(),
        rho: weight_json(&pair.rho_k)?,
        t_form: matrix_json(&pair.t_form)?,
        chi_t_g: multiset_json(&pair.chi_t_g)?,
        chi_t_k: multiset_json(&pair.chi_t_k)?,
        chi_t_perp: multiset_json(&pair.chi_t_perp)?,
    })
}

fn parabolic_summary(mu: &Weight, tiebreak: &[usize], p: &CompatibleParabolic) -> Result<ParabolicSummary, Error> {
    Ok(ParabolicSummary {
        mu: weight_json(mu)?,
        tiebreak: tiebreak.to_vec(),
        lex_rows: weights_json(p.lex.rows())?,
        n: multiset_json(&p.n_weights)?,
        m: multiset_json(&p.m_weights)?,
        n_cap_k: multiset_json(&p.n_cap_k)?,
        n_cap_perp: multiset_json(&p.n_cap_perp)?,
        s: p.s,
        rho_n: weight_json(&p.rho_n)?,
        rho_n_perp: weight_json(&p.rho_n_perp)?,
        levi_roots: weights_json(&p.levi_roots)?,
    })
}

fn table_summary(cutoff: &Q, table: &KTypeTable) -> Result<TableSummary, Error> {
    let rows = table
        .rows
        .iter()
        .map(|r| {
            Ok(RowSummary {
                delta: weight_json(&r.delta)?,
                vogan_norm_sq: rat(&r.vogan_norm_sq)?,
                chi: r.chi,
                bound_s: r.bound_i0,
                bound_total: r.bound_total,
                lemma3_ok: r.lemma3_ok,
            })
        })
        .collect::<Result<_, Error>>()?;
    Ok(TableSummary { cutoff: rat(cutoff)?, rows, warnings: table.warnings.clone() })
}

pub fn cmd_describe(args: &DescribeArgs) -> Result<Report, CliError> {
    let pair = load_pair(&args.pair)?;
    let mut report = Report::new("describe");
    report.pair = Some(pair_summary(&pair)?);
    Ok(report)
}

pub fn cmd_parabolic(args: &ParabolicArgs) -> Result<Report, CliError> {
    let pair = load_pair(&args.pair)?;
    let mu = parse_weight(&args.mu, pair.t_dim(), "mu")?;
    let tiebreak = parse_tiebreak(args.tiebreak.as_deref(), pair.t_dim())?;
    let parab = parabolic_for(&pair, &mu, Some(&tiebreak))?;
    let mut report = Report::new("parabolic");
    report.pair = Some(pair_summary(&pair)?);
    report.parabolic = Some(parabolic_summary(&mu, &tiebreak, &parab)?);
    let contained = check_containment(&pair, &parab, &mu);
    report.push(CheckResult::new(
        "containment",
        (!contained).then(|| "some weight of n pairs negatively with mu + 2 rho".to_string()),
    ));
    Ok(report)
}

/// Everything `table` and `verify` share.
struct Run {
    pair: ReductivePair,
    parab: CompatibleParabolic,
    e: EModule,
    mu: Weight,
    cutoff: Q,
    report: Report,
}

fn prepare(command: &str, args: &RunArgs) -> Result<Run, CliError> {
    let pair = load_pair(&args.pair)?;
    let mu = parse_weight(&args.mu, pair.t_dim(), "mu")?;
    let tiebreak = parse_tiebreak(args.tiebreak.as_deref(), pair.t_dim())?;
    let cutoff = match &args.cutoff {
        Some(c) => parse_q(c).map_err(|e| CliError::Usage(format!("--cutoff: {e}")))?,
        None => vogan_norm_sq(&pair, &mu) * qi(16) + qi(16),
    };
    if cutoff.is_negative() {
        return Err(CliError::Usage(format!("--cutoff {} is negative", fmt_q(&cutoff))));
    }
    let parab = parabolic_for(&pair, &mu, Some(&tiebreak))?;
    let kappa_auto = args.kappa.trim() == "auto";
    let kappa =
        if kappa_auto { auto_kappa(&pair, &parab, &mu)? } else { parse_weight(&args.kappa, pair.g.rank(), "kappa")? };
    let e = validate_e(&pair, &parab, &mu, &kappa)?;
    let mut report = Report::new(command);
    report.pair = Some(pair_summary(&pair)?);
    report.parabolic = Some(parabolic_summary(&mu, &tiebreak, &parab)?);
    report.e =
        Some(ESummary { kappa: weight_json(&e.kappa)?, kappa_auto, omega: weight_json(&e.omega)?, dim_e: e.dim_e });
    Ok(Run { pair, parab, e, mu, cutoff, report })
}

/// Lemma 1, Lemma 2, Lemma 3 over the table, and nonvanishing at `mu`.
fn nonvanishing_checks(engine: &Engine<'_>, mu: &Weight, table: &KTypeTable, report: &mut Report) -> Result<(), Error> {
    let mut lemma1 = None;
    for i in 1..=engine.pair.max_length() {
        if let Some((w, n)) = engine.prop1_condition(mu, i)?.into_iter().next() {
            lemma1 = Some(format!("w = {:?} (length {i}) admits n = {n:?}", w.word));
            break;
        }
    }
    report.push(CheckResult::new("lemma1", lemma1));

    let chi_mu = engine.euler_multiplicity(mu)?;
    let lemma2 = (chi_mu != engine.e.dim_e as i64).then(|| format!("chi(mu) = {chi_mu}, dim E = {}", engine.e.dim_e));
    report.push(CheckResult::new("lemma2", lemma2));

    let base = vogan_norm_sq(engine.pair, mu);
    let lemma3 = table.rows.iter().filter(|r| r.delta != *mu).find_map(|r| {
        let expansion = engine.lemma3_expansion(mu, &r.delta);
        match expansion {
            Some(x) if r.lemma3_ok && x.strict() => None,
            Some(x) if !x.balances() => Some(format!(
                "delta = {}: expansion does not balance ({} != {} + {} + {})",
                r.delta,
                fmt_q(&x.lhs),
                fmt_q(&x.base),
                fmt_q(&x.shift_norm_sq),
                fmt_q(&x.cross_sum())
            )),
            _ => Some(format!(
                "delta = {}: ||delta + 2rho||^2 = {} vs ||mu + 2rho||^2 = {}",
                r.delta,
                fmt_q(&r.vogan_norm_sq),
                fmt_q(&base)
            )),
        }
    });
    report.push(CheckResult::new("lemma3", lemma3));

    report.push(CheckResult::new("nonzero", (chi_mu == 0).then(|| "chi(mu) = 0".to_string())));
    Ok(())
}

pub fn cmd_table(args: &RunArgs) -> Result<Report, CliError> {
    let mut run = prepare("table", args)?;
    let engine = Engine::new(&run.pair, &run.parab, &run.e);
    let table = engine.enumerate_ktypes(&run.mu, &run.cutoff)?;
    run.report.table = Some(table_summary(&run.cutoff, &table)?);
    nonvanishing_checks(&engine, &run.mu, &table, &mut run.report)?;
    Ok(run.report)
}

pub fn cmd_verify(args: &RunArgs) -> Result<Report, CliError> {
    let mut run = match prepare("verify", args) {
        Ok(run) => run,
        Err(CliError::Failed(e)) => {
            let mut report = Report::new("verify");
            report.push(CheckResult::new("pair-validation", Some(e.to_string())));
            return Ok(report);
        }
        Err(usage) => return Err(usage),
    };
    run.report.push(CheckResult::new("pair-validation", None));
    let engine = Engine::new(&run.pair, &run.parab, &run.e);
    let table = engine.enumerate_ktypes(&run.mu, &run.cutoff)?;
    run.report.table = Some(table_summary(&run.cutoff, &table)?);

    let contained = check_containment(&run.pair, &run.parab, &run.mu);
    run.report.push(CheckResult::new(
        "containment",
        (!contained).then(|| "some weight of n pairs negatively with mu + 2 rho".to_string()),
    ));
    nonvanishing_checks(&engine, &run.mu, &table, &mut run.report)?;

    let dominance = table
        .rows
        .iter()
        .find(|r| r.chi.unsigned_abs() > r.bound_total)
        .map(|r| format!("delta = {}: |chi| = {} > {}", r.delta, r.chi.unsigned_abs(), r.bound_total));
    run.report.push(CheckResult::new("prop1-dominance", dominance));

    let mut deltas: Vec<Weight> = vec![run.mu.clone()];
    deltas.extend(table.rows.iter().map(|r| r.delta.clone()).filter(|d| *d != run.mu));

    let mut kostant = CheckResult::new("kostant", None);
    for d in &deltas {
        match character_identity_check(&run.pair.k, d) {
            Ok(true) => {}
            Ok(false) => {
                kostant = CheckResult::new("kostant", Some(format!("identity fails at delta = {d}")));
                break;
            }
            Err(Error::Guard(msg)) => {
                kostant = CheckResult { name: "kostant".into(), status: Status::Skip, detail: Some(msg) };
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    run.report.push(kostant);

    let mut weyl = None;
    for d in &deltas {
        let (dim, total) = dimension_cross_check(&run.pair.k, d)?;
        if dim != total {
            weyl = Some(format!("delta = {d}: Weyl dimension {dim}, Freudenthal sum {total}"));
            break;
        }
    }
    run.report.push(CheckResult::new("freudenthal-weyl", weyl));
    Ok(run.report)
}

pub fn run(cli: &Cli) -> Result<(Report, Format), CliError> {
    Ok(match &cli.command {
        Command::Describe(a) => (cmd_describe(a)?, a.format),
        Command::Parabolic(a) => (cmd_parabolic(a)?, a.format),
        Command::Table(a) => (cmd_table(a)?, a.format),
        Command::Verify(a) => (cmd_verify(a)?, a.format),
    })
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => render_text(report),
    }
}

fn r(x: &Rat) -> String {
    if x.1 == 1 {
        x.0.to_string()
    } else {
        format!("{}/{}", x.0, x.1)
    }
}

fn w(x: &WeightJson) -> String {
    format!("[{}]", x.iter().map(r).collect::<Vec<_>>().join(", "))
}

fn ws(xs: &[WeightJson]) -> String {
    format!("{{{}}}", xs.iter().map(w).collect::<Vec<_>>().join(", "))
}

fn ms(xs: &[MultEntry]) -> String {
    let items: Vec<String> =
        xs.iter().map(|e| if e.mult == 1 { w(&e.weight) } else { format!("{}^{}", w(&e.weight), e.mult) }).collect();
    format!("{{{}}}", items.join(", "))
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let line = |out: &mut String, key: &str, value: String| {
        let _ = writeln!(out, "  {key:<18}{value}");
    };
    if let Some(p) = &report.pair {
        let _ = writeln!(out, "pair {}", p.name);
        line(&mut out, "g", format!("{} (rank {})", p.g_type, p.g_rank));
        line(&mut out, "dim t", p.t_dim.to_string());
        let gram: Vec<String> = p.t_form.iter().map(w).collect();
        line(&mut out, "form on t*", format!("[{}]", gram.join(", ")));
        line(&mut out, "k simple roots", ws(&p.k_simple_roots));
        line(&mut out, "k positive roots", ws(&p.k_positive_roots));
        line(&mut out, "|W_k|", p.weyl_k_order.to_string());
        line(&mut out, "rho", w(&p.rho));
        line(&mut out, "ch_t(g)", ms(&p.chi_t_g));
        line(&mut out, "ch_t(k)", ms(&p.chi_t_k));
        line(&mut out, "ch_t(k^perp)", ms(&p.chi_t_perp));
    }
    if let Some(p) = &report.parabolic {
        let order: Vec<String> = p.tiebreak.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "parabolic mu = {} tiebreak {}", w(&p.mu), order.join(","));
        let rows: Vec<String> = p.lex_rows.iter().map(w).collect();
        line(&mut out, "lex rows", rows.join(" > "));
        line(&mut out, "n", ms(&p.n));
        line(&mut out, "m", ms(&p.m));
        line(&mut out, "n ∩ k", ms(&p.n_cap_k));
        line(&mut out, "n ∩ k^perp", ms(&p.n_cap_perp));
        line(&mut out, "s", p.s.to_string());
        line(&mut out, "rho_n", w(&p.rho_n));
        line(&mut out, "rho_perp_n", w(&p.rho_n_perp));
        line(&mut out, "Levi roots", ws(&p.levi_roots));
    }
    if let Some(e) = &report.e {
        let _ = writeln!(out, "E");
        let source = if e.kappa_auto { " (auto)" } else { "" };
        line(&mut out, "kappa", format!("{}{source}", w(&e.kappa)));
        line(&mut out, "omega", w(&e.omega));
        line(&mut out, "dim E", e.dim_e.to_string());
    }
    if let Some(t) = &report.table {
        let _ = writeln!(out, "table cutoff {}", r(&t.cutoff));
        let header = ["delta", "|delta+2rho|^2", "chi", "bound_s", "bound_total", "lemma3"];
        let mut cells: Vec<[String; 6]> = vec![header.map(String::from)];
        for row in &t.rows {
            cells.push([
                w(&row.delta),
                r(&row.vogan_norm_sq),
                row.chi.to_string(),
                row.bound_s.to_string(),
                row.bound_total.to_string(),
                if row.lemma3_ok { "ok" } else { "FAIL" }.to_string(),
            ]);
        }
        let widths: Vec<usize> =
            (0..6).map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0)).collect();
        for row in &cells {
            let padded: Vec<String> = row.iter().zip(&widths).map(|(s, n)| format!("{s:>n$}")).collect();
            let _ = writeln!(out, "  {}", padded.join("  "));
        }
        for warning in &t.warnings {
            let _ = writeln!(out, "warning: {warning}");
        }
    }
    if !report.checks.is_empty() {
        let _ = writeln!(out, "checks");
        for c in &report.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            match &c.detail {
                Some(d) => {
                    let _ = writeln!(out, "  {status} {}: {d}", c.name);
                }
                None => {
                    let _ = writeln!(out, "  {status} {}", c.name);
                }
            }
        }
        let _ = writeln!(out, "verdict {}", if report.passed { "PASS" } else { "FAIL" });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(pair: &str, mu: &str, cutoff: Option<&str>) -> RunArgs {
        RunArgs {
            pair: pair.into(),
            mu: mu.into(),
            kappa: "auto".into(),
            cutoff: cutoff.map(String::from),
            tiebreak: None,
            format: Format::Text,
        }
    }

    #[test]
    fn describe_principal() {
        let rep = cmd_describe(&DescribeArgs { pair: "principal-a1-in-a2".into(), format: Format::Text }).unwrap();
        let text = render(&rep, Format::Text);
        assert!(text.contains("ch_t(k^perp)      {[-4], [-2], [0], [2], [4]}"), "{text}");
        assert!(text.contains("form on t*        [[1/8]]"), "{text}");
    }

    #[test]
    fn describe_cartan() {
        let rep = cmd_describe(&DescribeArgs { pair: "cartan-in-a1".into(), format: Format::Text }).unwrap();
        let p = rep.pair.unwrap();
        assert_eq!(p.rho, vec![Rat(0, 1)]);
        assert_eq!(p.weyl_k_order, 1);
    }

    #[test]
    fn table_principal() {
        let rep = cmd_table(&run_args("principal-a1-in-a2", "0", Some("12.5"))).unwrap();
        let t = rep.table.as_ref().unwrap();
        let chis: Vec<i64> = t.rows.iter().map(|r| r.chi).collect();
        assert_eq!(chis, vec![1, 1, 2, 2, 3]);
        assert!(rep.passed);
        let e = rep.e.unwrap();
        assert_eq!(e.omega, vec![Rat(-6, 1)]);
    }

    #[test]
    fn table_diagonal() {
        let rep = cmd_table(&run_args("diagonal-a1-in-a1xa1", "0", Some("9"))).unwrap();
        let t = rep.table.as_ref().unwrap();
        assert_eq!(t.rows.len(), 3);
        assert!(t.rows.iter().all(|r| r.chi == 1));
        assert!(rep.passed);
    }

    #[test]
    fn wrong_kappa() {
        let mut args = run_args("principal-a1-in-a2", "0", None);
        args.kappa = "3/2,3/2".into();
        let err = cmd_table(&args).unwrap_err();
        assert!(matches!(err, CliError::Failed(Error::OmegaMismatch { .. })));
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(cmd_table(&run_args("principal-a1-in-a2", "0,1", None)).unwrap_err().exit_code(), 2);
        assert_eq!(cmd_table(&run_args("principal-a1-in-a2", "x", None)).unwrap_err().exit_code(), 2);
        assert_eq!(cmd_table(&run_args("principal-a1-in-a2", "0", Some("-1"))).unwrap_err().exit_code(), 2);
        assert!(parse_tiebreak(Some("0,0"), 2).is_err());
        assert_eq!(parse_tiebreak(Some("1,0"), 2).unwrap(), vec![1, 0]);
    }

    #[test]
    fn verify_builtins() {
        for pair in crate::pairspec::BUILTIN_PAIRS {
            let rep = cmd_verify(&run_args(pair, "0", None)).unwrap();
            assert!(rep.passed, "{}", render(&rep, Format::Text));
        }
    }

    #[test]
    fn json_round_trip() {
        let rep = cmd_verify(&run_args("principal-a1-in-a2", "2", None)).unwrap();
        let json = render(&rep, Format::Json);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        assert_eq!(render(&back, Format::Json), json);
    }
}
