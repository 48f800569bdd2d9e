//! Command-line surface. Reports go to `out` as JSON lines and a short
//! summary goes to `err`.
//!
//! Exit codes: 0 when every check passes, 1 when a theorem check fails,
//! 2 for usage, parse and validation errors.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{build_expression, parse_catalog, CatalogEntry, RawEntry};
use crate::census::harness::harness_pairs;
use crate::census::{
    analyze_pair, c_of_r, quadratic_form_classify, s_set_formula_check, tau_analysis, FormFamily,
    PairReport, QuadraticClass, SSetReport, TauReport, FAMILY_PARAMETER_LIMIT,
};
use crate::error::Error;
use crate::gf2::two_generated_scan;
use crate::group::{ElementSubset, GroupTable};
use crate::perm::PermGroup;
use crate::ratio::ExactRatio;
use crate::sample::sample_transitive;
use crate::suborbit::{
    bergman_lenstra_classify, conjecture_form_check, gap_scan, lemma_structure_check,
    suborbit_profile, ConjectureForm, GapReport, LemmaReport, SuborbitProfile, Trichotomy,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "suborbit-lab", version, about = "Suborbit ratios, GL(4,2) scans and Cayley graph census bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Suborbit profile, trichotomy and structure checks for each catalog entry.
    Analyze { catalog: PathBuf },
    /// Histogram of ratios; flags any ratio strictly between 5/6 and 1.
    GapScan {
        /// Catalog to scan.
        #[arg(conflicts_with = "sample")]
        catalog: Option<PathBuf>,
        /// Number of random transitive 2-generated groups of degree 4..=8.
        #[arg(long, requires = "seed")]
        sample: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Checks that each ratio above 1/2 has the form (q + 1)/2q with 2q an integer.
    Conjecture { catalog: PathBuf },
    /// Scans the 2-generated subgroups of GL(4,2).
    #[command(name = "verify-gl42")]
    VerifyGl42,
    /// Counting bounds for regular subgroups, and the tau and quadratic-form suite for tables.
    Census {
        #[arg(conflicts_with = "harness")]
        catalog: Option<PathBuf>,
        /// Use the built-in pairs instead of a catalog.
        #[arg(long, requires = "seed")]
        harness: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Builds a group from an expression and prints it as a catalog line.
    Construct {
        expr: String,
        #[arg(long)]
        name: Option<String>,
    },
}

/// A failed run: usage problems, or an engine error on an entry.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn entry_failure(entry: &CatalogEntry, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("line {}, entry {:?}: {}", entry.line, entry.name, f.message);
    f
}

struct Emitter<'a> {
    out: &'a mut dyn Write,
}

impl Emitter<'_> {
    fn line<T: Serialize>(&mut self, value: &T) -> std::io::Result<()> {
        let text = serde_json::to_string(value).map_err(std::io::Error::other)?;
        writeln!(self.out, "{text}")
    }
}

fn load(path: &Path) -> Result<Vec<CatalogEntry>, Failure> {
    let file = File::open(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(parse_catalog(BufReader::new(file))?)
}

#[derive(Serialize)]
struct TrichotomyLine {
    tag: Trichotomy,
    matching: Vec<Trichotomy>,
}

#[derive(Serialize)]
struct AnalyzeLine<'a> {
    name: &'a str,
    degree: usize,
    order: usize,
    ratio: ExactRatio,
    /// Number of points in suborbits of each size.
    parts: BTreeMap<usize, usize>,
    d: usize,
    x: &'a BTreeMap<usize, usize>,
    gap_violation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    trichotomy: Option<TrichotomyLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lemmas: Option<LemmaLine>,
    conjecture: ConjectureForm,
}

#[derive(Serialize)]
struct LemmaLine {
    #[serde(flatten)]
    report: LemmaReport,
    all_pass: bool,
}

fn five_sixths() -> ExactRatio {
    ExactRatio::new(5, 6).expect("nonzero")
}

fn half() -> ExactRatio {
    ExactRatio::new(1, 2).expect("nonzero")
}

fn profile_of(entry: &CatalogEntry) -> Result<(PermGroup, SuborbitProfile), Failure> {
    let group = entry.perm_group().map_err(|e| entry_failure(entry, e))?;
    let profile = suborbit_profile(&group, 0).map_err(|e| entry_failure(entry, e))?;
    Ok((group, profile))
}

fn run_analyze(path: &Path, em: &mut Emitter, err: &mut dyn Write) -> Result<bool, Failure> {
    let entries = load(path)?;
    let mut ok = true;
    let mut violations = 0;
    for entry in &entries {
        let (group, profile) = profile_of(entry)?;
        let gap_violation = profile.ratio.strictly_between(five_sixths(), ExactRatio::one());
        let trichotomy = if profile.ratio.is_one() {
            let v = bergman_lenstra_classify(&group).map_err(|e| entry_failure(entry, e))?;
            Some(TrichotomyLine {
                tag: v.tag,
                matching: v.matching,
            })
        } else {
            None
        };
        let lemmas = if profile.ratio.strictly_between(half(), ExactRatio::one()) {
            let report = lemma_structure_check(&group, 0).map_err(|e| entry_failure(entry, e))?;
            let all_pass = report.all_pass();
            Some(LemmaLine { report, all_pass })
        } else {
            None
        };
        let entry_ok = !gap_violation && lemmas.as_ref().is_none_or(|l| l.all_pass);
        if !entry_ok {
            violations += 1;
        }
        ok &= entry_ok;
        em.line(&AnalyzeLine {
            name: &entry.name,
            degree: group.degree(),
            order: group.order(),
            ratio: profile.ratio,
            parts: profile.sizes(),
            d: profile.d,
            x: &profile.x,
            gap_violation,
            trichotomy,
            lemmas,
            conjecture: conjecture_form_check(profile.ratio),
        })?;
    }
    writeln!(err, "analyze: {} entries, {violations} violations", entries.len())?;
    Ok(ok)
}

#[derive(Serialize)]
struct GapLine {
    #[serde(flatten)]
    report: GapReport,
    /// Groups with every suborbit of size at most 2.
    ratio_one: usize,
    /// Of those, how many fell in each family (first match).
    families: BTreeMap<String, usize>,
}

fn trichotomy_name(t: Trichotomy) -> String {
    serde_json::to_value(t)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn run_gap_scan(
    catalog: Option<&Path>,
    sample: Option<usize>,
    seed: Option<u64>,
    em: &mut Emitter,
    err: &mut dyn Write,
) -> Result<bool, Failure> {
    let named: Vec<(String, PermGroup)> = match (catalog, sample, seed) {
        (Some(path), None, None) => load(path)?
            .iter()
            .map(|e| Ok((e.name.clone(), e.perm_group().map_err(|x| entry_failure(e, x))?)))
            .collect::<Result<_, Failure>>()?,
        (None, Some(n), Some(s)) => sample_transitive(n, s)?
            .into_iter()
            .map(|g| (g.name, g.group))
            .collect(),
        _ => return Err(usage("gap-scan needs a catalog, or --sample N --seed S")),
    };
    let mut profiles = Vec::with_capacity(named.len());
    let mut ratio_one = 0;
    let mut families = BTreeMap::new();
    for (name, group) in &named {
        let profile = suborbit_profile(group, 0).map_err(|e| usage(format!("{name}: {e}")))?;
        if profile.ratio.is_one() {
            ratio_one += 1;
            let v = bergman_lenstra_classify(group)?;
            *families.entry(trichotomy_name(v.tag)).or_insert(0) += 1;
        }
        profiles.push((name.as_str(), profile));
    }
    let mut report = gap_scan(profiles.iter().map(|(n, p)| (*n, p)));
    report.seed = seed;
    let ok = report.violations.is_empty();
    writeln!(
        err,
        "gap-scan: {} groups, {} ratios strictly between 5/6 and 1",
        report.examined,
        report.violations.len()
    )?;
    em.line(&GapLine {
        report,
        ratio_one,
        families,
    })?;
    Ok(ok)
}

#[derive(Serialize)]
struct ConjectureLine<'a> {
    name: &'a str,
    ratio: ExactRatio,
    #[serde(flatten)]
    form: ConjectureForm,
    counterexample: bool,
}

fn run_conjecture(path: &Path, em: &mut Emitter, err: &mut dyn Write) -> Result<bool, Failure> {
    let entries = load(path)?;
    let mut counterexamples = 0;
    for entry in &entries {
        let (_, profile) = profile_of(entry)?;
        let form = conjecture_form_check(profile.ratio);
        counterexamples += usize::from(!form.conforms);
        em.line(&ConjectureLine {
            name: &entry.name,
            ratio: profile.ratio,
            form,
            counterexample: !form.conforms,
        })?;
    }
    writeln!(
        err,
        "conjecture: {} entries, {counterexamples} counterexamples",
        entries.len()
    )?;
    // A counterexample to the conjecture is a finding, not a failed check.
    Ok(true)
}

fn run_verify(em: &mut Emitter, err: &mut dyn Write) -> Result<bool, Failure> {
    let report = two_generated_scan();
    let ok = report.passed();
    writeln!(
        err,
        "verify-gl42: {} subgroups, {} selected frames, {} violations, {} ratio-5/6 classes",
        report.distinct_subgroups,
        report.selected,
        report.violations.len(),
        report.extremal_classes.len()
    )?;
    for n in &report.nonconforming {
        writeln!(
            err,
            "conjecture counterexample: ratio {} (q = {}) in {} frames, smallest degree {}",
            n.ratio, n.q, n.frames, n.degree
        )?;
    }
    writeln!(err, "{}", report.coverage)?;
    em.line(&report)?;
    Ok(ok)
}

#[derive(Serialize)]
struct PairLine<'a> {
    name: &'a str,
    #[serde(flatten)]
    report: PairReport,
}

#[derive(Serialize)]
struct SkipLine<'a> {
    name: &'a str,
    skipped: &'a str,
}

#[derive(Serialize)]
struct TauEntry {
    r: u32,
    #[serde(flatten)]
    report: TauReport,
}

#[derive(Serialize)]
struct FormEntry {
    r: u32,
    #[serde(flatten)]
    class: QuadraticClass,
}

#[derive(Serialize)]
struct TableLine<'a> {
    name: &'a str,
    order: usize,
    c_r: usize,
    tau: Vec<TauEntry>,
    forms: Vec<FormEntry>,
    holds: bool,
}

/// `τ` with `U = <r>` for every central involution `r`, and the
/// quadratic-form family wherever its preconditions hold.
fn table_suite<'a>(name: &'a str, table: &GroupTable) -> Result<TableLine<'a>, Error> {
    let mut tau = Vec::new();
    let mut forms = Vec::new();
    for r in table.elements().filter(|&r| table.is_involution(r) && table.is_central(r)) {
        if table.order() > 2 {
            let u = ElementSubset::from_iter(table.order(), [0, r]);
            tau.push(TauEntry {
                r,
                report: tau_analysis(table, &u, r)?,
            });
        }
        match quadratic_form_classify(table, r) {
            Ok(class) => forms.push(FormEntry { r, class }),
            Err(Error::NotExtraspecialShape(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let holds = tau.iter().all(|t| t.report.holds);
    Ok(TableLine {
        name,
        order: table.order(),
        c_r: c_of_r(table),
        tau,
        forms,
        holds,
    })
}

#[derive(Serialize)]
struct SSetLine {
    s_set: SSetReport,
}

fn run_census(
    catalog: Option<&Path>,
    harness: bool,
    seed: Option<u64>,
    em: &mut Emitter,
    err: &mut dyn Write,
) -> Result<bool, Failure> {
    let mut ok = true;
    let mut checked = 0;
    let mut failed = 0;
    let mut tally = |holds: bool| {
        checked += 1;
        failed += usize::from(!holds);
        holds
    };
    match (catalog, harness, seed) {
        (Some(path), false, None) => {
            for entry in &load(path)? {
                if let Some(table) = entry.table() {
                    let line = table_suite(&entry.name, table).map_err(|e| entry_failure(entry, e))?;
                    ok &= tally(line.holds);
                    em.line(&line)?;
                    continue;
                }
                let Some(regular) = entry.regular_subgroup() else {
                    em.line(&SkipLine {
                        name: &entry.name,
                        skipped: "no regular subgroup given",
                    })?;
                    continue;
                };
                let group = entry.perm_group().map_err(|e| entry_failure(entry, e))?;
                match analyze_pair(&group, regular, 0) {
                    Ok(report) => {
                        ok &= tally(report.holds);
                        em.line(&PairLine {
                            name: &entry.name,
                            report,
                        })?;
                    }
                    Err(Error::NotProper) => em.line(&SkipLine {
                        name: &entry.name,
                        skipped: "the group equals its regular subgroup",
                    })?,
                    Err(e) => return Err(entry_failure(entry, e)),
                }
            }
        }
        (None, true, Some(seed)) => {
            for pair in harness_pairs(seed)? {
                match analyze_pair(&pair.ambient, &pair.regular, 0) {
                    Ok(report) => {
                        ok &= tally(report.holds);
                        em.line(&PairLine {
                            name: &pair.name,
                            report,
                        })?;
                    }
                    Err(Error::NotProper) => {}
                    Err(e) => return Err(usage(format!("{}: {e}", pair.name)).with_code_of(e)),
                }
            }
            for family in [FormFamily::D8Chain, FormFamily::Q8Chain, FormFamily::C4Chain, FormFamily::C4C2] {
                let ts = if family == FormFamily::C4C2 { 0..=0 } else { 1..=FAMILY_PARAMETER_LIMIT };
                for t in ts {
                    for l in 0..=FAMILY_PARAMETER_LIMIT {
                        let s_set = s_set_formula_check(t, l, family)?;
                        ok &= tally(s_set.holds);
                        em.line(&SSetLine { s_set })?;
                    }
                }
            }
        }
        _ => return Err(usage("census needs a catalog, or --harness --seed S")),
    }
    writeln!(err, "census: {checked} checked, {failed} failed")?;
    Ok(ok)
}

impl Failure {
    fn with_code_of(mut self, e: Error) -> Self {
        self.code = Failure::from(e).code;
        self
    }
}

fn run_construct(expr: &str, name: Option<&str>, em: &mut Emitter, err: &mut dyn Write) -> Result<bool, Failure> {
    let built = build_expression(expr)?;
    let raw = RawEntry::from_built(name.unwrap_or(expr), &built);
    em.line(&raw)?;
    writeln!(err, "construct: {expr}")?;
    Ok(true)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, Failure> {
    let mut em = Emitter { out };
    match command {
        Command::Analyze { catalog } => run_analyze(&catalog, &mut em, err),
        Command::GapScan {
            catalog,
            sample,
            seed,
        } => run_gap_scan(catalog.as_deref(), sample, seed, &mut em, err),
        Command::Conjecture { catalog } => run_conjecture(&catalog, &mut em, err),
        Command::VerifyGl42 => run_verify(&mut em, err),
        Command::Census {
            catalog,
            harness,
            seed,
        } => run_census(catalog.as_deref(), harness, seed, &mut em, err),
        Command::Construct { expr, name } => run_construct(&expr, name.as_deref(), &mut em, err),
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_subcommand<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_VIOLATION,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
