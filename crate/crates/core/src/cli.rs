//! The `morita` command-line interface.
//!
//! Exit codes: 0 pass, 1 failed check, 2 input error, 3 search budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use fixedbitset::FixedBitSet;

use crate::actions::{
    fullness_faithfulness_check, parse_action, q_of, sample_actions, unit_iso_check, ActionFile,
    ActionParseError, EtaleAction, RightAction,
};
use crate::biset::{
    biset_from_ordered_enlargement, biset_from_regular_enlargement, biset_paths, build_bipartite_u,
    build_r_semigroupoid, exhaustive_biset_search, morita_equivalent, parse_biset, ulc_check,
    verify_biset, write_biset, BisetError, EquivalenceBiset, DEFAULT_BUDGET,
};
use crate::category::{cauchy_completion, left_cancellative_category, write_category};
use crate::corpus::{builtin_corpus, curated_pairs, manifest, write_manifest};
use crate::groupoid::{
    inductive_groupoid_of, is_local_isomorphism, ordered_groupoid_of, OrderedFunctor,
};
use crate::report::Report;
use crate::semigroup::{
    parse_semigroup, write_semigroup, FiniteSemigroup, InverseSemigroup, ParseError, SemigroupError,
};

#[derive(Debug, Parser)]
#[command(
    name = "morita",
    version,
    about = "Morita equivalence of finite inverse semigroups"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Append the wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Seed for sampled inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cell-assignment budget for the exhaustive biset search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Cross-check `morita` with a biset search up to this many points.
    #[arg(long, global = true)]
    pub max_points: Option<usize>,
    /// Worker threads for corpus sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 1)]
    pub parallel: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    L,
    C,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check associativity and the inverse-semigroup axioms of a `.smg` file.
    Validate { path: PathBuf },
    /// Idempotents, natural order, local units and category sizes.
    Analyze { path: PathBuf },
    /// Decide Morita equivalence of two inverse semigroups.
    Morita { left: PathBuf, right: PathBuf },
    /// Verify an equivalence biset and its bipartite category.
    BisetCheck { path: PathBuf },
    /// Extract a biset from a regular joint enlargement.
    ///
    /// Subsets are `all`, `corner:NAME` (the corner eRe), or a
    /// space-separated list of element names.
    Enlarge {
        path: PathBuf,
        left: String,
        right: String,
        /// Write the biset here, with the two semigroups beside it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the semigroupoid of a biset and check its ordered groupoid.
    Boge { path: PathBuf },
    /// Check the presheaf equivalence on sampled closed actions.
    PshEquiv {
        path: PathBuf,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Write the builtin corpus and its verdict manifest.
    Corpus { outdir: PathBuf },
    /// Print `L(S)` or `C(S)` in the `.cat` format.
    DumpCat {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::C)]
        which: Which,
    },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Budget(String),
    /// A failed precondition, reported as a failing check.
    Failed {
        check: String,
        witness: String,
    },
}

pub enum Output {
    Report(Report),
    Raw(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed { .. } => 1,
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

fn failed(check: &str, witness: impl ToString) -> CliError {
    CliError::Failed {
        check: check.to_string(),
        witness: witness.to_string(),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Syntax problems are input errors; a table that is not associative is a
/// failed check.
fn load_semigroup(path: &Path) -> Result<FiniteSemigroup, CliError> {
    match parse_semigroup(&read(path)?) {
        Ok(s) => Ok(s),
        Err(ParseError::Semigroup(SemigroupError::NotAssociative(f))) => {
            Err(failed("associative", format!("({},{},{})", f.a, f.b, f.c)))
        }
        Err(e) => Err(CliError::Input(format!("{}: {e}", path.display()))),
    }
}

fn load_inverse(path: &Path) -> Result<InverseSemigroup, CliError> {
    load_semigroup(path)?
        .as_inverse()
        .map_err(|e| failed("inverse", format!("{}: {e}", path.display())))
}

fn load_biset(path: &Path) -> Result<EquivalenceBiset, CliError> {
    let text = read(path)?;
    let (left, right) =
        biset_paths(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let dir = path.parent().unwrap_or(Path::new(""));
    let s = load_inverse(&dir.join(left))?;
    let t = load_inverse(&dir.join(right))?;
    parse_biset(&text, &s, &t).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_subset(r: &FiniteSemigroup, text: &str) -> Result<FixedBitSet, CliError> {
    let elem = |name: &str| {
        r.index_of(name)
            .ok_or_else(|| CliError::Input(format!("unknown element `{name}`")))
    };
    if text == "all" {
        return Ok(r.full_set());
    }
    if let Some(name) = text.strip_prefix("corner:") {
        let e = r.subset([elem(name)?]);
        return Ok(r.product_set(&r.product_set(&e, &r.full_set()), &e));
    }
    let elems = text
        .split_whitespace()
        .map(elem)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(r.subset(elems))
}

fn budget_error(e: BisetError) -> CliError {
    match e {
        BisetError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
        other => failed("search", other),
    }
}

fn validate(path: &Path) -> Result<Report, CliError> {
    if path.extension().is_some_and(|e| e == "act") {
        return validate_action(path);
    }
    let mut r = Report::new("validate");
    let s = match load_semigroup(path) {
        Ok(s) => s,
        Err(CliError::Failed { check, witness }) => {
            r.check(check, false, || witness);
            return Ok(r.finish());
        }
        Err(e) => return Err(e),
    };
    r.value("order", s.order());
    r.check("associative", true, String::new);
    let no_inverse = s.elements().find(|&a| s.inverses_of(a).is_empty());
    r.check("regular", no_inverse.is_none(), || {
        format!("{} has no inverse", s.name(no_inverse.unwrap()))
    });
    let many = s.elements().find(|&a| s.inverses_of(a).len() > 1);
    r.check("unique-inverses", many.is_none(), || {
        let a = many.unwrap();
        let inv: Vec<&str> = s.inverses_of(a).iter().map(|&b| s.name(b)).collect();
        format!("{} has inverses {}", s.name(a), inv.join(" "))
    });
    let idem = s.idempotents();
    let clash = idem
        .iter()
        .flat_map(|&e| idem.iter().map(move |&f| (e, f)))
        .find(|&(e, f)| s.mul(e, f) != s.mul(f, e));
    r.check("idempotents-commute", clash.is_none(), || {
        let (e, f) = clash.unwrap();
        format!("{} {}", s.name(e), s.name(f))
    });
    if let Ok(inv) = s.as_inverse() {
        let w = natural_order_witness(&inv);
        r.check("natural-order", w.is_none(), || w.unwrap());
    }
    Ok(r.finish())
}

fn validate_action(path: &Path) -> Result<Report, CliError> {
    let text = read(path)?;
    let input = |e: &dyn std::fmt::Display| CliError::Input(format!("{}: {e}", path.display()));
    let smg = ActionFile::semigroup_path(&text).map_err(|e| input(&e))?;
    let s = load_semigroup(&path.parent().unwrap_or(Path::new("")).join(smg))?;
    let file = match parse_action(&text, &s) {
        Ok(f) => f,
        Err(ActionParseError::Action(e)) => return Err(failed("action", e)),
        Err(e) => return Err(input(&e)),
    };
    let x = &file.action;
    let mut r = Report::new("validate");
    r.value("points", x.len());
    r.check("action", true, String::new);
    r.value("unitary", x.is_unitary());
    match x.is_closed(&s) {
        Ok(closed) => r.value("closed", closed),
        Err(e) => r.value("closed", e),
    }
    if let Some(anchor) = &file.anchor {
        let inv = s.as_inverse().map_err(|e| failed("inverse", e))?;
        let etale = EtaleAction::new(x.clone(), anchor.clone(), &inv);
        r.check("etale", etale.is_ok(), || etale.unwrap_err().to_string());
    }
    Ok(r.finish())
}

/// A partial order, compatible with multiplication and inversion.
pub fn natural_order_witness(s: &InverseSemigroup) -> Option<String> {
    let n = |a| s.name(a);
    for a in s.elements() {
        if !s.natural_leq(a, a) {
            return Some(format!("{} not below itself", n(a)));
        }
        for b in s.elements().filter(|&b| s.natural_leq(a, b)) {
            if a != b && s.natural_leq(b, a) {
                return Some(format!("{} and {} below each other", n(a), n(b)));
            }
            if !s.natural_leq(s.star(a), s.star(b)) {
                return Some(format!("{} <= {} but not for inverses", n(a), n(b)));
            }
            for c in s.elements() {
                if s.natural_leq(b, c) && !s.natural_leq(a, c) {
                    return Some(format!("not transitive at {} {} {}", n(a), n(b), n(c)));
                }
                if !s.natural_leq(s.mul(a, c), s.mul(b, c))
                    || !s.natural_leq(s.mul(c, a), s.mul(c, b))
                {
                    return Some(format!("{} <= {} not preserved by {}", n(a), n(b), n(c)));
                }
            }
        }
    }
    None
}

fn analyze(path: &Path) -> Result<Report, CliError> {
    let s = load_inverse(path)?;
    let mut r = Report::new("analyze");
    r.value("order", s.order());
    let idem = s.idempotent_list();
    r.value("idempotents", idem.len());
    let names: Vec<&str> = idem.iter().map(|&e| s.name(e)).collect();
    r.value("idempotent-list", names.join(" "));
    let mut edges = Vec::new();
    for a in s.elements() {
        for b in s.elements() {
            let covers = a != b
                && s.natural_leq(a, b)
                && !s
                    .elements()
                    .any(|c| c != a && c != b && s.natural_leq(a, c) && s.natural_leq(c, b));
            if covers {
                edges.push(format!("{}<{}", s.name(a), s.name(b)));
            }
        }
    }
    r.value("hasse-edges", edges.len());
    r.value("hasse", edges.join(" "));
    let flags = s.local_unit_flags();
    r.value("right-local-units", flags.right_local_units);
    r.value("left-local-units", flags.left_local_units);
    r.value("local-units", flags.local_units);
    r.value("sandwich", flags.sandwich);
    r.value("locally-e-unitary", s.is_locally_e_unitary());
    r.value(
        "l-morphisms",
        left_cancellative_category(&s).morphism_count(),
    );
    r.value("c-morphisms", cauchy_completion(&s).morphism_count());
    Ok(r.finish())
}

fn hom_sizes(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn morita(cli: &Cli, left: &Path, right: &Path) -> Result<Report, CliError> {
    let s = load_inverse(left)?;
    let t = load_inverse(right)?;
    let d = morita_equivalent(&s, &t);
    let mut r = Report::new("morita");
    r.value("equivalent", d.equivalent);
    for (side, sk) in [("S", &d.skeleton_s), ("T", &d.skeleton_t)] {
        r.value(format!("skeleton.{side}.objects"), sk.objects);
        r.value(format!("skeleton.{side}.morphisms"), sk.morphisms);
        r.value(format!("skeleton.{side}.homs"), hom_sizes(&sk.hom_sizes));
    }
    if d.equivalent {
        r.check("witness-functors", d.witness_checks(), || {
            "a witness functor is not a weak equivalence".into()
        });
    }
    if let Some(k) = cli.max_points {
        let out = exhaustive_biset_search(&s, &t, k, cli.budget).map_err(budget_error)?;
        let found = out.biset.is_some();
        r.value("search.found", found);
        r.value("search.assignments", out.assignments);
        r.check("search.agrees", !found || d.equivalent, || {
            "search found a biset for a negative verdict".into()
        });
    }
    let passed = r.passed;
    let mut r = r.with_verdict(d.equivalent);
    r.passed = passed;
    Ok(r)
}

fn record_biset(r: &mut Report, b: &EquivalenceBiset) -> bool {
    let report = verify_biset(b);
    for c in &report.checks {
        let w = c.witness.clone();
        r.check(format!("axiom.{}", c.name), c.passed, || {
            w.unwrap_or_default()
        });
    }
    report.holds()
}

fn biset_check(path: &Path) -> Result<Report, CliError> {
    let b = load_biset(path)?;
    let mut r = Report::new("biset-check");
    r.value("points", b.len());
    if record_biset(&mut r, &b) {
        let ulc = ulc_check(&b);
        r.check("ulc", ulc, || "s != <x, s*x> for some x, s".into());
        let u = build_bipartite_u(&b).map_err(|e| failed("bipartite", e))?;
        r.value("u.objects", u.category.object_count());
        r.value("u.morphisms", u.category.morphism_count());
        let bip = u.bipartite_report();
        r.check("u.b1", bip.b1, || "parts overlap or miss an object".into());
        r.check("u.b2", bip.b2, || {
            "an object has no isomorphic partner".into()
        });
        r.check("u.morita-context", u.is_morita_context(), || {
            "an inclusion is not a weak equivalence".into()
        });
        let lc = u.category.left_cancellation_witness();
        r.check("u.left-cancellative", lc.is_none(), || {
            let (f, g, h) = lc.unwrap();
            format!(
                "{} {} {}",
                u.category.label(f),
                u.category.label(g),
                u.category.label(h)
            )
        });
    }
    Ok(r.finish())
}

fn enlarge(path: &Path, left: &str, right: &str, out: Option<&Path>) -> Result<Report, CliError> {
    let rs = load_semigroup(path)?;
    let s_sub = parse_subset(&rs, left)?;
    let t_sub = parse_subset(&rs, right)?;
    let mut r = Report::new("enlarge");
    let b = match biset_from_regular_enlargement(&rs, &s_sub, &t_sub) {
        Ok(b) => b,
        Err(e) => {
            r.check("precondition", false, || e.to_string());
            return Ok(r.finish());
        }
    };
    r.check("precondition", true, String::new);
    r.value("points", b.len());
    record_biset(&mut r, &b);
    if let Some(out) = out {
        let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("biset");
        let dir = out.parent().unwrap_or(Path::new(""));
        let (ls, rs) = (format!("{stem}.left.smg"), format!("{stem}.right.smg"));
        let write = |p: PathBuf, text: String| {
            fs::write(&p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))
        };
        write(dir.join(&ls), write_semigroup(&b.s))?;
        write(dir.join(&rs), write_semigroup(&b.t))?;
        write(out.to_path_buf(), write_biset(&b, &ls, &rs))?;
        r.value("written", out.display());
    }
    Ok(r.finish())
}

fn boge(path: &Path) -> Result<Report, CliError> {
    let b = load_biset(path)?;
    let mut r = Report::new("boge");
    if !record_biset(&mut r, &b) {
        return Ok(r.finish());
    }
    let rs = build_r_semigroupoid(&b).map_err(|e| failed("r.semigroupoid", e))?;
    r.check("r.inverse-semigroupoid", true, String::new);
    r.check("r.enlargement-identities", true, String::new);
    r.value("r.elements", rs.semigroupoid.order());
    let g = ordered_groupoid_of(&rs.semigroupoid).map_err(|e| failed("g.ordered-groupoid", e))?;
    r.value("g.objects", g.object_count());
    r.value("g.arrows", g.arrow_count());
    r.check(
        "g.principally-inductive",
        g.is_principally_inductive(),
        || "a down-set lacks a meet".into(),
    );
    for (side, part, sg) in [("S", &rs.s_part, &b.s), ("T", &rs.t_part, &b.t)] {
        let rep = g
            .enlargement_report(part)
            .map_err(|e| failed("g.subgroupoid", e))?;
        r.check(format!("g.enlargement.{side}"), rep.holds(), || {
            format!(
                "full={} order-ideal={} iso-dense={}",
                rep.full, rep.order_ideal, rep.iso_dense
            )
        });
        let sub = inductive_groupoid_of(sg);
        let theta = OrderedFunctor::inclusion(&g, &sub, part);
        let li = is_local_isomorphism(&theta, &sub, &g).map_err(|e| failed("g.functor", e))?;
        r.check(
            format!("g.local-iso.{side}"),
            li.holds() && li.l_weak_equivalence,
            || format!("li1={} li2={} l={}", li.li1, li.li2, li.l_weak_equivalence),
        );
    }
    let objects_of = |part: &[usize]| -> Vec<usize> { part.iter().map(|&a| g.dom(a)).collect() };
    let (so, to) = (objects_of(&rs.s_part), objects_of(&rs.t_part));
    let crosses = |from: &[usize], to: &[usize]| {
        from.iter()
            .find(|&&e| !(0..g.arrow_count()).any(|x| g.dom(x) == e && to.contains(&g.cod(x))))
            .copied()
    };
    let lonely = crosses(&so, &to).or(crosses(&to, &so));
    r.check("g.bipartite-objects", lonely.is_none(), || {
        g.objects()[lonely.unwrap()].clone()
    });
    let back = biset_from_ordered_enlargement(&g, &b.s, &b.t, &rs.s_part, &rs.t_part)
        .map_err(|e| failed("round-trip", e))?;
    let ok = verify_biset(&back).holds();
    r.check("round-trip", ok, || "extracted biset fails an axiom".into());
    Ok(r.finish())
}

fn psh_equiv(cli: &Cli, path: &Path, samples: usize) -> Result<Report, CliError> {
    let s = load_inverse(path)?;
    let mut r = Report::new("psh-equiv");
    let err = |e: crate::actions::ActionError| failed("action", e);
    let idem = s.idempotent_list();
    let bad = idem.iter().find(|&&e| {
        !unit_iso_check(&q_of(&RightAction::principal(&s, e), &s).unwrap(), &s).unwrap_or(false)
    });
    r.check("unit.representables", bad.is_none(), || {
        format!("e={}", s.name(*bad.unwrap()))
    });
    let actions = sample_actions(&s, samples, cli.seed);
    r.value("samples", actions.len());
    let mut unit_fail = None;
    for (name, x) in &actions {
        if !unit_iso_check(&q_of(x, &s).map_err(err)?, &s).map_err(err)? {
            unit_fail.get_or_insert(name.clone());
        }
    }
    r.check("unit.samples", unit_fail.is_none(), || {
        unit_fail.clone().unwrap()
    });
    let mut ff_fail = None;
    for i in 0..actions.len() {
        let (nx, x) = &actions[i];
        let (ny, y) = &actions[(i + 1) % actions.len()];
        let (ok, homs, nats) = fullness_faithfulness_check(&s, x, y).map_err(err)?;
        if !ok {
            ff_fail.get_or_insert(format!("{nx} -> {ny}: {homs} homs, {nats} transformations"));
        }
    }
    r.check("hom-nat.pairs", ff_fail.is_none(), || {
        ff_fail.clone().unwrap()
    });
    let mut principal_fail = None;
    for &d in idem {
        for &e in idem {
            let homs = RightAction::principal(&s, d)
                .homs(&RightAction::principal(&s, e))
                .len();
            let esd = s.product_set(
                &s.product_set(&s.subset([e]), &s.full_set()),
                &s.subset([d]),
            );
            if homs != esd.count_ones(..) {
                principal_fail.get_or_insert(format!("d={} e={}", s.name(d), s.name(e)));
            }
        }
    }
    r.check("hom-principal", principal_fail.is_none(), || {
        principal_fail.clone().unwrap()
    });
    Ok(r.finish())
}

fn corpus(cli: &Cli, outdir: &Path) -> Result<Report, CliError> {
    let io = |e: std::io::Error| CliError::Input(format!("{}: {e}", outdir.display()));
    fs::create_dir_all(outdir).map_err(io)?;
    let corpus = builtin_corpus();
    for (name, s) in &corpus {
        fs::write(outdir.join(format!("{name}.smg")), write_semigroup(s)).map_err(io)?;
    }
    let entries = manifest(&corpus, cli.parallel);
    fs::write(outdir.join("manifest.txt"), write_manifest(&entries)).map_err(io)?;
    let mut r = Report::new("corpus");
    r.value("semigroups", corpus.len());
    r.value("pairs", entries.len());
    let find = |n: &str| {
        &corpus
            .iter()
            .find(|(m, _)| m == n)
            .expect("curated names exist")
            .1
    };
    for e in curated_pairs() {
        let got = morita_equivalent(find(&e.left), find(&e.right)).equivalent;
        r.check(
            format!("curated.{}.{}", e.left, e.right),
            got == e.expected,
            || {
                format!(
                    "expected {} from {}, decided {got}",
                    e.expected, e.provenance
                )
            },
        );
    }
    Ok(r.finish())
}

fn dump_cat(path: &Path, which: Which) -> Result<String, CliError> {
    let s = load_semigroup(path)?;
    Ok(match which {
        Which::C => write_category(&cauchy_completion(&s)),
        Which::L => {
            let inv = s.as_inverse().map_err(|e| failed("inverse", e))?;
            write_category(&left_cancellative_category(&inv))
        }
    })
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let start = Instant::now();
    let report = match &cli.command {
        Command::Validate { path } => validate(path)?,
        Command::Analyze { path } => analyze(path)?,
        Command::Morita { left, right } => morita(cli, left, right)?,
        Command::BisetCheck { path } => biset_check(path)?,
        Command::Enlarge {
            path,
            left,
            right,
            out,
        } => enlarge(path, left, right, out.as_deref())?,
        Command::Boge { path } => boge(path)?,
        Command::PshEquiv { path, samples } => psh_equiv(cli, path, *samples)?,
        Command::Corpus { outdir } => corpus(cli, outdir)?,
        Command::DumpCat { path, which } => return Ok(Output::Raw(dump_cat(path, *which)?)),
    };
    let mut report = report;
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(Output::Report(report))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Analyze { .. } => "analyze",
        Command::Morita { .. } => "morita",
        Command::BisetCheck { .. } => "biset-check",
        Command::Enlarge { .. } => "enlarge",
        Command::Boge { .. } => "boge",
        Command::PshEquiv { .. } => "psh-equiv",
        Command::Corpus { .. } => "corpus",
        Command::DumpCat { .. } => "dump-cat",
    }
}

/// Runs the CLI and returns the text for stdout, the text for stderr and the exit code.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (String::new(), e.render().to_string(), code);
        }
    };
    let render = |r: &Report| match cli.format {
        Format::Text => r.to_text(),
        Format::Json => r.to_json(),
    };
    match execute(&cli) {
        Ok(Output::Raw(text)) => (text, String::new(), 0),
        Ok(Output::Report(r)) => (render(&r), String::new(), if r.passed { 0 } else { 1 }),
        Err(CliError::Failed { check, witness }) => {
            let mut r = Report::new(command_name(&cli.command));
            r.check(check, false, || witness);
            (render(&r.finish()), String::new(), 1)
        }
        Err(e @ (CliError::Input(_) | CliError::Budget(_))) => {
            let msg = match &e {
                CliError::Input(m) => format!("input error: {m}\n"),
                CliError::Budget(m) => format!("{m}\n"),
                CliError::Failed { .. } => unreachable!(),
            };
            (String::new(), msg, e.exit_code())
        }
    }
}
