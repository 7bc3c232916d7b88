//! `stanley <verb> [ideal | --file path] [flags]`.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 parse error, 3 resource
//! limit or timeout, 4 an invariant violation was found.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use stanley_core::bound::{
    build_split, size_inequality_check, theorem_main_bound, verify_direct_sum, BoundConfig, InequalityReport, Pivot,
    SdepthCache, DEFAULT_DEGREE_CAP, DEFAULT_MAX_COMPONENTS,
};
use stanley_core::sdepth::{sdepth_ideal, sdepth_quotient, DEFAULT_MAX_POINTS};
use stanley_core::{decompose, size, Decomposition, MonomialIdeal, SdepthConfig, DEFAULT_EXPONENT_CAP};

use crate::corpus::{generate_corpus, CorpusSpec, Family};
use crate::{parse_ideal, report, Deadline, Error, EXIT_VIOLATION};

#[derive(Parser, Debug)]
#[command(name = "stanley", version, about = "Stanley depth, size and decomposition bounds for monomial ideals")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Irredundant irreducible decomposition.
    Decompose(IdealArgs),
    /// The size invariant with its covering witness.
    Size(IdealArgs),
    /// Exact Stanley depth of S/I or of I.
    Sdepth {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long, value_enum, default_value_t = ModuleKind::Quotient)]
        module: ModuleKind,
    },
    /// Recursive lower bound on sdepth(S/I) from a pivot component.
    Bound {
        #[command(flatten)]
        input: IdealArgs,
        /// 1-based component index, or `all`.
        #[arg(long, default_value = "all", value_parser = parse_pivot)]
        pivot: Pivot,
    },
    /// Size, hypothesis, bound and exact sdepth(S/I), compared.
    Check(IdealArgs),
    /// Classify every monomial up to a degree into the direct-sum summands.
    VerifySum {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long, default_value = "all", value_parser = parse_pivot)]
        pivot: Pivot,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
    },
    /// Squarefree polarization.
    Polarize(IdealArgs),
    /// Run `check` over a seeded random corpus and write a summary.
    Corpus(CorpusArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModuleKind {
    Quotient,
    Ideal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Squarefree,
    General,
    HypothesisSatisfying,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Squarefree => Family::Squarefree,
            FamilyArg::General => Family::General,
            FamilyArg::HypothesisSatisfying => Family::HypothesisSatisfying,
        }
    }
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Largest characteristic poset the exact search will build.
    #[arg(long, default_value_t = DEFAULT_MAX_POINTS)]
    sdepth_cap_points: usize,
    /// Wall-clock limit per exact search, in milliseconds.
    #[arg(long)]
    sdepth_timeout_ms: Option<u64>,
    /// Write the JSON report to this path, or `-` for stdout only.
    #[arg(long)]
    json: Option<String>,
}

impl SearchArgs {
    fn sdepth(&self) -> SdepthConfig {
        SdepthConfig { max_points: self.sdepth_cap_points }
    }

    fn budget(&self) -> Deadline {
        Deadline::after(self.sdepth_timeout_ms.map(Duration::from_millis))
    }
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Ideal text, e.g. "x1^2, x2*x3".
    ideal: Option<String>,
    #[arg(long, conflicts_with = "ideal")]
    file: Option<PathBuf>,
    /// Number of variables; overrides any `ring` header.
    #[arg(long)]
    ring: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_EXPONENT_CAP)]
    exponent_cap: u32,
    /// Largest decomposition the bound engine accepts.
    #[arg(long, default_value_t = DEFAULT_MAX_COMPONENTS)]
    max_components: usize,
    #[command(flatten)]
    search: SearchArgs,
}

impl IdealArgs {
    fn load(&self) -> Result<MonomialIdeal, Error> {
        let text = match (&self.ideal, &self.file) {
            (Some(t), _) => t.clone(),
            (None, Some(p)) => {
                std::fs::read_to_string(p).map_err(|source| Error::Io { path: p.display().to_string(), source })?
            }
            (None, None) => return Err(Error::Usage("give an ideal or --file".into())),
        };
        Ok(parse_ideal(&text, self.ring, self.exponent_cap)?)
    }

    fn bound_config(&self) -> BoundConfig {
        BoundConfig { max_components: self.max_components, sdepth: self.search.sdepth() }
    }
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, value_enum, default_value_t = FamilyArg::General)]
    family: FamilyArg,
    /// Number of variables, `a..b` (inclusive) or a single value.
    #[arg(long, default_value = "3..5", value_parser = parse_range)]
    n: RangeInclusive<usize>,
    /// Generators drawn per ideal, before minimalization.
    #[arg(long, default_value = "1..4", value_parser = parse_range)]
    gens: RangeInclusive<usize>,
    #[arg(long, default_value_t = 3)]
    max_exp: u32,
    /// Reject ideals with more irreducible components than this.
    #[arg(long)]
    max_components: Option<usize>,
    /// Rejection-sampling attempts per ideal.
    #[arg(long, default_value_t = 10_000)]
    max_attempts: usize,
    #[command(flatten)]
    search: SearchArgs,
}

fn parse_pivot(s: &str) -> Result<Pivot, String> {
    if s == "all" {
        return Ok(Pivot::All);
    }
    match s.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(Pivot::Index(i - 1)),
        _ => Err(format!("expected `all` or a 1-based component index, got `{s}`")),
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range `{s}`"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => num(s)?..=num(s)?,
    };
    if r.is_empty() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(r)
}

/// Parse `args` (program name first), run the verb and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(cli.verb) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// A verb's result: human summary, JSON report and exit code.
struct Outcome {
    summary: String,
    json: Value,
    code: i32,
}

fn emit(out: Outcome, json: Option<&str>, default_path: Option<&str>) -> Result<i32, Error> {
    let text = serde_json::to_string_pretty(&out.json).expect("reports serialize") + "\n";
    match json.or(default_path) {
        Some("-") => print!("{text}"),
        Some(path) => {
            std::fs::write(path, text).map_err(|source| Error::Io { path: path.to_string(), source })?;
            print!("{}", out.summary);
        }
        None => print!("{}", out.summary),
    }
    Ok(out.code)
}

fn dispatch(verb: Verb) -> Result<i32, Error> {
    let (outcome, json, default_path) = match &verb {
        Verb::Decompose(a) => (cmd_decompose(a)?, &a.search.json, None),
        Verb::Size(a) => (cmd_size(a)?, &a.search.json, None),
        Verb::Sdepth { input, module } => (cmd_sdepth(input, *module)?, &input.search.json, None),
        Verb::Bound { input, pivot } => (cmd_bound(input, *pivot)?, &input.search.json, None),
        Verb::Check(a) => (cmd_check(a)?, &a.search.json, None),
        Verb::VerifySum { input, pivot, degree_cap } => {
            (cmd_verify_sum(input, *pivot, *degree_cap)?, &input.search.json, None)
        }
        Verb::Polarize(a) => (cmd_polarize(a)?, &a.search.json, None),
        Verb::Corpus(a) => (cmd_corpus(a)?, &a.search.json, Some("corpus_report.json")),
    };
    emit(outcome, json.as_deref(), default_path)
}

fn components_line(d: &Decomposition) -> String {
    d.components()
        .iter()
        .map(|q| {
            let gens: Vec<String> = q.powers().iter().map(|&(i, e)| power(i, e)).collect();
            format!("({})", gens.join(", "))
        })
        .collect::<Vec<_>>()
        .join(" & ")
}

fn power(i: usize, e: u32) -> String {
    if e == 1 {
        format!("x{}", i + 1)
    } else {
        format!("x{}^{}", i + 1, e)
    }
}

fn cmd_decompose(a: &IdealArgs) -> Result<Outcome, Error> {
    let ideal = a.load()?;
    let d = decompose(&ideal)?;
    let summary = format!("{ideal}\n{} components: {}\n", d.len(), components_line(&d));
    let json = json!({
        "ideal": report::ideal(&ideal),
        "n": ideal.nvars(),
        "s": d.len(),
        "decomposition": report::decomposition(&d),
    });
    Ok(Outcome { summary, json, code: 0 })
}

fn cmd_size(a: &IdealArgs) -> Result<Outcome, Error> {
    let ideal = a.load()?;
    let r = size(&ideal)?;
    let witness: Vec<String> = r.witness.iter().map(|i| (i + 1).to_string()).collect();
    let summary =
        format!("size {}  (n={}, h={}, v={}, witness components {})\n", r.size, r.n, r.h, r.v, witness.join(","));
    let json = json!({ "ideal": report::ideal(&ideal), "size": report::size(&r) });
    Ok(Outcome { summary, json, code: 0 })
}

fn cmd_sdepth(a: &IdealArgs, module: ModuleKind) -> Result<Outcome, Error> {
    let ideal = a.load()?;
    let mut budget = a.search.budget();
    let cfg = a.search.sdepth();
    let (sd, name) = match module {
        ModuleKind::Quotient => (sdepth_quotient(&ideal, &cfg, &mut budget)?, "S/I"),
        ModuleKind::Ideal => (sdepth_ideal(&ideal, &cfg, &mut budget)?, "I"),
    };
    let summary = format!("sdepth({name}) = {}  ({} intervals)\n", sd.sdepth, sd.intervals.len());
    let mut json = report::stanley(&sd);
    json["ideal"] = report::ideal(&ideal);
    json["module"] = json!(if module == ModuleKind::Quotient { "quotient" } else { "ideal" });
    Ok(Outcome { summary, json, code: 0 })
}

fn cmd_bound(a: &IdealArgs, pivot: Pivot) -> Result<Outcome, Error> {
    let ideal = a.load()?;
    let d = decompose(&ideal)?;
    let mut budget = a.search.budget();
    let b = theorem_main_bound(&d, pivot, &a.bound_config(), &mut SdepthCache::new(), &mut budget)?;
    let mut summary = format!("bound {}\n", b.value);
    for p in &b.per_pivot {
        let _ = writeln!(summary, "  pivot {}: r={} value={} ({} terms)", p.pivot + 1, p.r, p.value, p.terms.len());
    }
    let json = json!({
        "ideal": report::ideal(&ideal),
        "n": ideal.nvars(),
        "s": d.len(),
        "decomposition": report::decomposition(&d),
        "bound": report::bound(&b),
    });
    Ok(Outcome { summary, json, code: 0 })
}

fn check_summary(r: &InequalityReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ideal       {}  (n={})", r.ideal, r.ideal.nvars());
    let _ = writeln!(s, "components  {}: {}", r.decomposition.len(), components_line(&r.decomposition));
    let _ = writeln!(s, "size        {}  (h={}, v={})", r.size.size, r.size.h, r.size.v);
    let hyp = if r.hypothesis.satisfied { "satisfied" } else { "not satisfied" };
    let _ = writeln!(s, "hypothesis  {hyp}");
    let _ = writeln!(s, "bound       {}", r.bound.value);
    let _ = writeln!(s, "sdepth      {}", r.sdepth_exact());
    let _ = writeln!(s, "sdepth >= size: {}", if r.inequality_holds() { "yes" } else { "no" });
    if r.has_violation() {
        let _ = writeln!(s, "VIOLATION");
    }
    s
}

fn cmd_check(a: &IdealArgs) -> Result<Outcome, Error> {
    let ideal = a.load()?;
    let mut budget = a.search.budget();
    let r = size_inequality_check(&ideal, &a.bound_config(), &mut budget)?;
    let code = if r.has_violation() { EXIT_VIOLATION } else { 0 };
    Ok(Outcome { summary: check_summary(&r), json: report::check(&r), code })
}

fn cmd_verify_sum(a: &IdealArgs, pivot: Pivot, degree_cap: u32) -> Result<Outcome, Error> {
    let ideal = a.load()?;
    let d = decompose(&ideal)?;
    let pivots: Vec<usize> = match pivot {
        Pivot::All => (0..d.len()).collect(),
        Pivot::Index(k) if k < d.len() => vec![k],
        Pivot::Index(_) => return Err(Error::Usage(format!("pivot out of range; ideal has {} components", d.len()))),
    };
    let mut summary = String::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for p in pivots {
        let r = verify_direct_sum(&build_split(&d, p)?, degree_cap);
        if r.cap_too_small {
            eprintln!("warning: degree cap {degree_cap} does not exceed the largest generator degree");
        }
        ok &= r.ok();
        let _ = writeln!(
            summary,
            "pivot {}: {} monomials, {} first summand, {} tau summands, {} violations",
            p + 1,
            r.monomials,
            r.first_summand,
            r.tau_summand,
            r.violations.len()
        );
        reports.push(report::direct_sum(&r));
    }
    let json = json!({ "ideal": report::ideal(&ideal), "degree_cap": degree_cap, "pivots": reports, "ok": ok });
    Ok(Outcome { summary, json, code: if ok { 0 } else { EXIT_VIOLATION } })
}

fn cmd_polarize(a: &IdealArgs) -> Result<Outcome, Error> {
    let ideal = a.load()?;
    let p = ideal.polarize()?;
    let summary = format!("{}  (ring of {} variables, {} added)\n", p.ideal, p.ideal.nvars(), p.added);
    Ok(Outcome { summary, json: report::polarization(&ideal, &p), code: 0 })
}

fn cmd_corpus(a: &CorpusArgs) -> Result<Outcome, Error> {
    let spec = CorpusSpec {
        seed: a.seed,
        count: a.count,
        n_range: a.n.clone(),
        generator_count_range: a.gens.clone(),
        max_exponent: a.max_exp,
        family: a.family.into(),
        max_components: a.max_components,
        max_attempts: a.max_attempts,
    };
    let ideals = generate_corpus(&spec)?;
    let cfg = BoundConfig {
        max_components: a.max_components.unwrap_or(0).max(DEFAULT_MAX_COMPONENTS),
        sdepth: a.search.sdepth(),
    };
    let results: Vec<Result<InequalityReport, stanley_core::Error>> =
        ideals.par_iter().map(|i| size_inequality_check(i, &cfg, &mut a.search.budget())).collect();

    let mut records = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    let (mut holds, mut satisfied, mut errors, mut resource) = (0usize, 0usize, 0usize, false);
    let mut min_slack: Option<i64> = None;
    for (k, (ideal, res)) in ideals.iter().zip(&results).enumerate() {
        match res {
            Ok(r) => {
                holds += usize::from(r.inequality_holds());
                satisfied += usize::from(r.hypothesis.satisfied);
                let slack = r.sdepth_exact() as i64 - r.size.size as i64;
                min_slack = Some(min_slack.map_or(slack, |m| m.min(slack)));
                if r.has_violation() {
                    failures.push(json!({ "index": k, "ideal": report::ideal(ideal), "reason": "violation" }));
                }
                records.push(report::check(r));
            }
            Err(e) => {
                errors += 1;
                resource |= e.is_resource();
                failures.push(json!({ "index": k, "ideal": report::ideal(ideal), "reason": e.to_string() }));
                records.push(json!({ "ideal": report::ideal(ideal), "error": e.to_string() }));
            }
        }
    }
    let violations = failures.len() - errors;
    let summary_json = json!({
        "seed": a.seed,
        "family": spec.family.name(),
        "count": ideals.len(),
        "inequality_holds": holds,
        "hypothesis_satisfied": satisfied,
        "violations": violations,
        "errors": errors,
        "min_slack": min_slack,
        "failures": failures,
    });
    let summary = format!(
        "corpus {} seed {}: {} ideals, {} with sdepth >= size, {} hypothesis-satisfying, min slack {}, {} violations, {} errors\n",
        spec.family.name(),
        a.seed,
        ideals.len(),
        holds,
        satisfied,
        min_slack.map_or("n/a".to_string(), |m| m.to_string()),
        violations,
        errors
    );
    let code = if violations > 0 {
        EXIT_VIOLATION
    } else if errors > 0 {
        if resource {
            3
        } else {
            1
        }
    } else {
        0
    };
    Ok(Outcome { summary, json: json!({ "summary": summary_json, "records": records }), code })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pivots() {
        assert_eq!(parse_pivot("all"), Ok(Pivot::All));
        assert_eq!(parse_pivot("2"), Ok(Pivot::Index(1)));
        assert!(parse_pivot("0").is_err());
        assert!(parse_pivot("x").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..5"), Ok(4..=5));
        assert_eq!(parse_range("4..=5"), Ok(4..=5));
        assert_eq!(parse_range("3"), Ok(3..=3));
        assert!(parse_range("5..4").is_err());
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
