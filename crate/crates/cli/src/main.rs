//! `congrkit`: command-line analysis of finite algebras, lattices and
//! residuated lattices.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use congrkit::catalog::{self, Signature};
use congrkit::cblp::{semilocal_decompose, DecompositionOutcome};
use congrkit::con::con;
use congrkit::iso::are_isomorphic;
use congrkit::report::{
    oracle_agrees, BlpReportJson, CblpReportJson, ClassifyReport, ConReport, SpectraReport,
    StarReportJson,
};
use congrkit::reslat::{validate_residuated, ResiduatedLattice};
use congrkit::text::{parse_document, write_algebra, write_lattice, Document};
use congrkit::{cg, crt_solve, product, quotient, Caps, Congruence, CongruenceLattice, FiniteAlgebra, FiniteLattice};

#[derive(Parser, Debug)]
#[command(name = "congrkit", version, about = "Congruence lattices, Boolean lifting properties and residuated lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit with status 1 when the reported property fails.
    #[arg(long, global = true)]
    assert: bool,
    /// Cross-check Con(A) against the enumeration of all partitions.
    #[arg(long = "brute-force", global = true)]
    brute_force: bool,
    /// Seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the size caps of the exhaustive searches.
    #[arg(long = "max-size", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_size: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyses of arbitrary finite algebras.
    Alg {
        #[command(subcommand)]
        cmd: AlgCmd,
    },
    /// Analyses of residuated lattices.
    Rl {
        #[command(subcommand)]
        cmd: RlCmd,
    },
    /// Lattice-theoretic properties.
    Lat {
        #[command(subcommand)]
        cmd: LatCmd,
    },
    /// Hasse diagram in DOT; algebras that are not lattices are drawn through Con(A).
    Hasse {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
        /// Draw Con(A) even when the input is a lattice.
        #[arg(long)]
        con: bool,
    },
    /// Built-in examples.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
}

#[derive(Subcommand, Debug)]
enum AlgCmd {
    Validate { file: PathBuf },
    Con { file: PathBuf },
    Spectra { file: PathBuf },
    Cblp { file: PathBuf },
    Star { file: PathBuf },
    /// Quotient by the congruence generated by the given pairs, or by a partition.
    Quotient {
        file: PathBuf,
        #[arg(long = "pair", value_name = "A,B")]
        pairs: Vec<String>,
        #[arg(long, value_name = "{..}{..}", conflicts_with = "pairs")]
        partition: Option<String>,
    },
    Product {
        #[arg(required = true, num_args = 1..)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Decompose { file: PathBuf },
    /// Solve x ≡ t_i (mod θ_i).
    Crt {
        file: PathBuf,
        #[arg(long = "congruence", value_name = "{..}{..}", required = true)]
        congruences: Vec<String>,
        #[arg(long = "target", required = true)]
        targets: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum RlCmd {
    Validate { file: PathBuf },
    Filters { file: PathBuf },
    Blp { file: PathBuf },
    Ilp { file: PathBuf },
    Classify { file: PathBuf },
    Reticulate {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    Crosscheck { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum LatCmd {
    Profile { file: PathBuf },
    Normality { file: PathBuf },
    Center { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
    Show { key: String },
    Export {
        key: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Seeded random algebras, written to DIR or printed.
    Random {
        #[arg(long, default_value = "lattice")]
        signature: String,
        #[arg(long)]
        size: usize,
        /// Omit to enumerate all (lattice and residuated only).
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Inconsistent(String),
}

impl From<congrkit::Error> for Failure {
    fn from(e: congrkit::Error) -> Self {
        match e {
            congrkit::Error::Inconsistent(m) => Failure::Inconsistent(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// Printed output plus the property verdict checked by `--assert`.
struct Outcome {
    output: String,
    verdict: Option<bool>,
}

struct Ctx {
    format: Format,
    brute_force: bool,
    seed: u64,
    caps: Caps,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> String {
        match self.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => text(),
        }
    }

    fn con(&self, alg: &FiniteAlgebra) -> Run<(CongruenceLattice, Option<bool>)> {
        let c = con(alg);
        if !self.brute_force {
            return Ok((c, None));
        }
        let agreed = oracle_agrees(&c, self.caps.brute_force)?;
        Ok((c, Some(agreed)))
    }
}

fn read(path: &Path) -> Run<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Run<()> {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Run<Document> {
    parse_document(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Run<FiniteAlgebra> {
    Ok(match load(path)? {
        Document::Algebra(a) => a,
        Document::Lattice(l) => l.to_algebra(),
    })
}

fn load_lattice(path: &Path) -> Run<FiniteLattice> {
    match load(path)? {
        Document::Lattice(l) => Ok(l),
        Document::Algebra(a) => Ok(FiniteLattice::from_algebra(&a)?),
    }
}

fn load_residuated(path: &Path) -> Run<ResiduatedLattice> {
    let alg = load_algebra(path)?;
    validate_residuated(&alg).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn element(alg: &FiniteAlgebra, token: &str) -> Run<usize> {
    alg.element(token.trim())
        .ok_or_else(|| Failure::Input(format!("unknown element `{token}`")))
}

/// Parses `{0,y,z}{x,1}` against the algebra's labels.
fn parse_partition(alg: &FiniteAlgebra, src: &str) -> Run<Congruence> {
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let body = compact
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Failure::Input(format!("malformed partition `{src}`")))?;
    let mut classes = Vec::new();
    for block in body.split("}{") {
        let members = block
            .split(',')
            .map(|t| element(alg, t))
            .collect::<Run<Vec<usize>>>()?;
        classes.push(members);
    }
    Ok(Congruence::from_classes(alg.size(), &classes)?)
}

fn labels_of(alg: &FiniteAlgebra, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| alg.label(x)).collect()
}

fn run_alg(ctx: &Ctx, cmd: AlgCmd) -> Run<Outcome> {
    let outcome = |output, verdict| Ok(Outcome { output, verdict });
    match cmd {
        AlgCmd::Validate { file } => {
            let alg = load_algebra(&file)?;
            let sig: Vec<String> = alg.signature().iter().map(|(n, k)| format!("{n}/{k}")).collect();
            let value = json!({"algebra": alg.name(), "valid": true, "size": alg.size(), "signature": sig});
            outcome(
                ctx.emit(&value, || format!("{}: valid, {} elements, {}\n", alg.name(), alg.size(), sig.join(" "))),
                Some(true),
            )
        }
        AlgCmd::Con { file } => {
            let alg = load_algebra(&file)?;
            let (c, oracle) = ctx.con(&alg)?;
            let mut r = ConReport::new(&c);
            r.oracle_agreed = oracle;
            let out = ctx.emit(&r, || r.text());
            check_oracle(oracle)?;
            outcome(out, None)
        }
        AlgCmd::Spectra { file } => {
            let alg = load_algebra(&file)?;
            let (c, oracle) = ctx.con(&alg)?;
            check_oracle(oracle)?;
            let r = SpectraReport::new(&c);
            outcome(ctx.emit(&r, || r.text()), Some(r.local))
        }
        AlgCmd::Cblp { file } => {
            let alg = load_algebra(&file)?;
            let (c, oracle) = ctx.con(&alg)?;
            let mut r = CblpReportJson::new(&c, &ctx.caps)?;
            r.oracle_agreed = oracle;
            let out = ctx.emit(&r, || r.text());
            check_oracle(oracle)?;
            if !r.equivalents.agree() {
                return Err(Failure::Inconsistent(format!(
                    "the equivalent forms of CBLP disagree: {:?}",
                    r.equivalents
                )));
            }
            outcome(out, Some(r.cblp))
        }
        AlgCmd::Star { file } => {
            let alg = load_algebra(&file)?;
            let (c, oracle) = ctx.con(&alg)?;
            check_oracle(oracle)?;
            let r = StarReportJson::new(&c);
            outcome(ctx.emit(&r, || r.text()), Some(r.star))
        }
        AlgCmd::Quotient { file, pairs, partition } => {
            let alg = load_algebra(&file)?;
            let theta = match partition {
                Some(p) => parse_partition(&alg, &p)?,
                None => {
                    let pairs = pairs
                        .iter()
                        .map(|p| {
                            let (a, b) = p
                                .split_once(',')
                                .ok_or_else(|| Failure::Input(format!("expected `A,B`, found `{p}`")))?;
                            Ok((element(&alg, a)?, element(&alg, b)?))
                        })
                        .collect::<Run<Vec<_>>>()?;
                    cg(&alg, &pairs)?
                }
            };
            let q = quotient(&alg, &theta)?;
            let labels = alg.labels();
            let value = json!({
                "algebra": alg.name(),
                "congruence": theta.labelled_classes(&labels),
                "quotient": write_algebra(&q.target),
            });
            outcome(
                ctx.emit(&value, || format!("# {}/{}\n{}", alg.name(), theta.render(&labels), write_algebra(&q.target))),
                None,
            )
        }
        AlgCmd::Product { files, output } => {
            let factors = files.iter().map(|f| load_algebra(f)).collect::<Run<Vec<_>>>()?;
            let (p, _) = product(&factors)?;
            let text = write_algebra(&p);
            if let Some(path) = output {
                write(&path, &text)?;
                let value = json!({"algebra": p.name(), "size": p.size(), "written": path.display().to_string()});
                return outcome(ctx.emit(&value, || format!("wrote {} ({} elements)\n", path.display(), p.size())), None);
            }
            let value = json!({"algebra": p.name(), "size": p.size(), "text": text});
            outcome(ctx.emit(&value, || text.clone()), None)
        }
        AlgCmd::Decompose { file } => {
            let alg = load_algebra(&file)?;
            let (c, oracle) = ctx.con(&alg)?;
            check_oracle(oracle)?;
            match semilocal_decompose(&c)? {
                DecompositionOutcome::Decomposed(d) => {
                    let factors: Vec<_> = d
                        .alphas
                        .iter()
                        .zip(&d.factors)
                        .map(|(&a, q)| {
                            json!({
                                "alpha": c.get(a).labelled_classes(&alg.labels()),
                                "size": q.target.size(),
                                "algebra": write_algebra(&q.target),
                            })
                        })
                        .collect();
                    let value = json!({"algebra": alg.name(), "decomposed": true, "factors": factors});
                    outcome(
                        ctx.emit(&value, || {
                            let mut s = format!("{}: {} local factors\n", alg.name(), d.factors.len());
                            for (&a, q) in d.alphas.iter().zip(&d.factors) {
                                s.push_str(&format!("# A/{}\n{}", c.render(a), write_algebra(&q.target)));
                            }
                            s
                        }),
                        Some(true),
                    )
                }
                DecompositionOutcome::NoCblp { theta, witness } => {
                    let value = json!({
                        "algebra": alg.name(),
                        "decomposed": false,
                        "failing_congruence": c.get(theta).labelled_classes(&alg.labels()),
                        "witness": c.get(witness).labelled_classes(&alg.labels()),
                    });
                    outcome(
                        ctx.emit(&value, || {
                            format!("{}: no CBLP; {} fails, witness {}\n", alg.name(), c.render(theta), c.render(witness))
                        }),
                        Some(false),
                    )
                }
            }
        }
        AlgCmd::Crt { file, congruences, targets } => {
            let alg = load_algebra(&file)?;
            let thetas = congruences
                .iter()
                .map(|p| parse_partition(&alg, p))
                .collect::<Run<Vec<_>>>()?;
            for t in &thetas {
                if let Some(op) = t.compatibility_violation(&alg) {
                    return Err(Failure::Input(format!("{} is not a congruence ({op})", t.render(&alg.labels()))));
                }
            }
            let targets = targets.iter().map(|t| element(&alg, t)).collect::<Run<Vec<_>>>()?;
            let solution = crt_solve(&alg, &thetas, &targets)?;
            let value = json!({"algebra": alg.name(), "solution": solution.map(|x| alg.label(x))});
            outcome(
                ctx.emit(&value, || match solution {
                    Some(x) => format!("solution {}\n", alg.label(x)),
                    None => "no solution\n".to_string(),
                }),
                Some(solution.is_some()),
            )
        }
    }
}

fn check_oracle(oracle: Option<bool>) -> Run<()> {
    match oracle {
        Some(false) => Err(Failure::Inconsistent(
            "Con(A) differs from the brute-force enumeration".into(),
        )),
        _ => Ok(()),
    }
}

fn run_rl(ctx: &Ctx, cmd: RlCmd) -> Run<Outcome> {
    let outcome = |output, verdict| Ok(Outcome { output, verdict });
    match cmd {
        RlCmd::Validate { file } => {
            let r = load_residuated(&file)?;
            let value = json!({"algebra": r.algebra().name(), "valid": true, "size": r.size()});
            outcome(
                ctx.emit(&value, || format!("{}: valid residuated lattice, {} elements\n", r.algebra().name(), r.size())),
                Some(true),
            )
        }
        RlCmd::Filters { file } => {
            let r = load_residuated(&file)?;
            let alg = r.algebra();
            let prime = r.prime_filters();
            let maximal = r.maximal_filters();
            let rows: Vec<_> = r
                .filters()
                .iter()
                .map(|f| {
                    json!({
                        "label": r.filter_label(f),
                        "members": labels_of(alg, f.members()),
                        "prime": prime.contains(f),
                        "maximal": maximal.contains(f),
                    })
                })
                .collect();
            let value = json!({"algebra": alg.name(), "filters": rows});
            outcome(
                ctx.emit(&value, || {
                    let mut s = format!("algebra {}\nfilters {}\n", alg.name(), rows.len());
                    for f in r.filters() {
                        let mut tags = Vec::new();
                        if prime.contains(&f) {
                            tags.push("prime");
                        }
                        if maximal.contains(&f) {
                            tags.push("maximal");
                        }
                        s.push_str(&format!(
                            "  {} = {{{}}} {}\n",
                            r.filter_label(&f),
                            labels_of(alg, f.members()).join(","),
                            tags.join(" ")
                        ));
                    }
                    s
                }),
                None,
            )
        }
        RlCmd::Blp { file } => {
            let r = load_residuated(&file)?;
            if ctx.brute_force {
                let (_, oracle) = ctx.con(r.algebra())?;
                check_oracle(oracle)?;
            }
            let rep = BlpReportJson::new(&r)?;
            outcome(ctx.emit(&rep, || rep.text()), Some(rep.blp))
        }
        RlCmd::Ilp { file } => {
            let r = load_residuated(&file)?;
            let rows = r
                .filters()
                .iter()
                .map(|f| Ok((r.filter_label(f), r.has_ilp(f)?)))
                .collect::<Run<Vec<_>>>()?;
            let holds = rows.iter().all(|(_, ok)| *ok);
            let value = json!({
                "algebra": r.algebra().name(),
                "ilp": holds,
                "filters": rows.iter().map(|(l, ok)| json!({"label": l, "ilp": ok})).collect::<Vec<_>>(),
            });
            outcome(
                ctx.emit(&value, || {
                    let mut s = format!("algebra {}\nilp {holds}\n", r.algebra().name());
                    for (l, ok) in &rows {
                        s.push_str(&format!("  {} {l}\n", if *ok { "ok  " } else { "FAIL" }));
                    }
                    s
                }),
                Some(holds),
            )
        }
        RlCmd::Classify { file } => {
            let r = load_residuated(&file)?;
            let rep = ClassifyReport::new(&r)?;
            outcome(ctx.emit(&rep, || rep.text()), None)
        }
        RlCmd::Reticulate { file, dot } => {
            let r = load_residuated(&file)?;
            let l = r.reticulation()?;
            let iso = are_isomorphic(&l.to_algebra(), &r.lattice().to_algebra(), ctx.caps.isomorphism).ok();
            if let Some(path) = dot {
                write(&path, &l.to_dot())?;
            }
            let value = json!({
                "algebra": r.algebra().name(),
                "size": l.size(),
                "elements": (0..l.size()).map(|x| l.label(x)).collect::<Vec<_>>(),
                "covers": l.hasse_edges().iter().map(|&(a, b)| [l.label(a), l.label(b)]).collect::<Vec<_>>(),
                "isomorphic_to_carrier": iso,
            });
            outcome(ctx.emit(&value, || write_lattice(&l)), None)
        }
        RlCmd::Crosscheck { file } => {
            let r = load_residuated(&file)?;
            let per_filter = r.blp_cblp_crosscheck()?;
            let eq = r.blp_equivalents()?;
            let boolean_principal = r.boolean_filters_are_principal()?;
            let value = json!({
                "algebra": r.algebra().name(),
                "per_filter": per_filter
                    .iter()
                    .map(|c| json!({"filter": r.filter_label(&c.filter), "blp": c.blp, "cblp": c.cblp}))
                    .collect::<Vec<_>>(),
                "equivalents": eq,
                "boolean_filters_are_principal": boolean_principal,
            });
            let out = ctx.emit(&value, || {
                let mut s = format!("algebra {}\n", r.algebra().name());
                for c in &per_filter {
                    s.push_str(&format!("  {} blp={} cblp={}\n", r.filter_label(&c.filter), c.blp, c.cblp));
                }
                s.push_str(&format!("equivalents {eq:?}\nboolean_filters_are_principal {boolean_principal}\n"));
                s
            });
            if !eq.agree() || !boolean_principal {
                return Err(Failure::Inconsistent(format!("equivalent forms of BLP disagree: {eq:?}")));
            }
            outcome(out, Some(eq.blp))
        }
    }
}

fn run_lat(ctx: &Ctx, cmd: LatCmd) -> Run<Outcome> {
    let outcome = |output, verdict| Ok(Outcome { output, verdict });
    match cmd {
        LatCmd::Profile { file } => {
            let l = load_lattice(&file)?;
            let p = l.profile();
            let value = json!({"lattice": l.name(), "size": l.size(), "profile": p});
            outcome(
                ctx.emit(&value, || {
                    format!(
                        "lattice {}\nsize {}\ndistributive {}\nmodular {}\nboolean {}\n",
                        l.name(),
                        l.size(),
                        p.is_distributive,
                        p.is_modular,
                        p.is_boolean
                    )
                }),
                None,
            )
        }
        LatCmd::Normality { file } => {
            let l = load_lattice(&file)?;
            let p = l.normality_profile()?;
            let value = json!({"lattice": l.name(), "normality": p});
            outcome(
                ctx.emit(&value, || {
                    format!(
                        "lattice {}\nnormal {}\nb_normal {}\nconormal {}\nb_conormal {}\n",
                        l.name(),
                        p.normal,
                        p.b_normal,
                        p.conormal,
                        p.b_conormal
                    )
                }),
                Some(p.b_normal),
            )
        }
        LatCmd::Center { file } => {
            let l = load_lattice(&file)?;
            let center = l.boolean_center();
            let rows: Vec<_> = center
                .elements
                .iter()
                .map(|&x| {
                    let comps: Vec<String> = center.all_complements[&x].iter().map(|&y| l.label(y)).collect();
                    (l.label(x), comps)
                })
                .collect();
            let value = json!({
                "lattice": l.name(),
                "center": rows.iter().map(|(x, c)| json!({"element": x, "complements": c})).collect::<Vec<_>>(),
                "unique_complements": !center.non_unique,
            });
            outcome(
                ctx.emit(&value, || {
                    let mut s = format!("lattice {}\ncenter {}\n", l.name(), rows.len());
                    for (x, c) in &rows {
                        s.push_str(&format!("  {x}: {}\n", c.join(" ")));
                    }
                    s
                }),
                None,
            )
        }
    }
}

fn run_catalog(ctx: &Ctx, cmd: CatalogCmd) -> Run<Outcome> {
    let outcome = |output, verdict| Ok(Outcome { output, verdict });
    match cmd {
        CatalogCmd::List => {
            let rows = catalog::keys()
                .into_iter()
                .map(|k| {
                    let f = catalog::fixture(&k)?;
                    Ok((k, f.description, f.algebra.size()))
                })
                .collect::<Run<Vec<_>>>()?;
            let value: Vec<_> = rows
                .iter()
                .map(|(k, d, n)| json!({"key": k, "size": n, "description": d}))
                .collect();
            outcome(
                ctx.emit(&value, || {
                    rows.iter()
                        .map(|(k, d, n)| format!("{k:<14} {n:>2}  {d}\n"))
                        .collect()
                }),
                None,
            )
        }
        CatalogCmd::Show { key } => {
            let f = catalog::fixture(&key)?;
            let checks = catalog::check_fixture(&f)?;
            let ok = checks.iter().all(|c| c.ok);
            let value = json!({
                "key": f.key,
                "kind": f.kind,
                "description": f.description,
                "size": f.algebra.size(),
                "facts": f.expected.iter().zip(&checks).map(|(fact, c)| json!({
                    "name": fact.name,
                    "expected": fact.value,
                    "actual": c.actual,
                    "ok": c.ok,
                    "anchor": fact.anchor,
                })).collect::<Vec<_>>(),
            });
            outcome(
                ctx.emit(&value, || {
                    let mut s = format!("{} ({} elements): {}\n", f.key, f.algebra.size(), f.description);
                    for (fact, c) in f.expected.iter().zip(&checks) {
                        s.push_str(&format!(
                            "  {} {} = {}  [{}]\n",
                            if c.ok { "ok  " } else { "FAIL" },
                            fact.name,
                            serde_json::to_string(&c.actual).expect("facts serialize"),
                            fact.anchor
                        ));
                    }
                    s
                }),
                Some(ok),
            )
        }
        CatalogCmd::Export { key, output } => {
            let f = catalog::fixture(&key)?;
            let text = write_algebra(&f.algebra);
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    outcome(String::new(), None)
                }
                None => outcome(text, None),
            }
        }
        CatalogCmd::Random { signature, size, count, out } => {
            let sig: Signature = signature.parse()?;
            let algs = catalog::random_algebras(sig, size, count, ctx.seed)?;
            if let Some(dir) = &out {
                fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            }
            let mut listing = String::new();
            for alg in &algs {
                let text = write_algebra(alg);
                match &out {
                    Some(dir) => {
                        let path = dir.join(format!("{}.alg", alg.name()));
                        write(&path, &text)?;
                        listing.push_str(&format!("{}\n", path.display()));
                    }
                    None => {
                        listing.push_str(&text);
                        listing.push('\n');
                    }
                }
            }
            outcome(listing, None)
        }
    }
}

fn run(cli: Cli) -> Run<Outcome> {
    let mut caps = Caps::from_env();
    if let Some(n) = cli.max_size {
        caps = caps.with_max_size(n as usize);
    }
    let ctx = Ctx {
        format: cli.format,
        brute_force: cli.brute_force,
        seed: cli.seed,
        caps,
    };
    match cli.command {
        Command::Alg { cmd } => run_alg(&ctx, cmd),
        Command::Rl { cmd } => run_rl(&ctx, cmd),
        Command::Lat { cmd } => run_lat(&ctx, cmd),
        Command::Catalog { cmd } => run_catalog(&ctx, cmd),
        Command::Hasse { file, dot, con: use_con } => {
            let lattice = match load(&file)? {
                Document::Lattice(l) if !use_con => l,
                Document::Lattice(l) => con(&l.to_algebra()).lattice().clone(),
                Document::Algebra(a) => match FiniteLattice::from_algebra(&a) {
                    Ok(l) if !use_con => l,
                    _ => con(&a).lattice().clone(),
                },
            };
            write(&dot, &lattice.to_dot())?;
            let value = json!({"lattice": lattice.name(), "size": lattice.size(), "dot": dot.display().to_string()});
            Ok(Outcome {
                output: ctx.emit(&value, || format!("wrote {} ({} nodes)\n", dot.display(), lattice.size())),
                verdict: None,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let assert = cli.assert;
    match run(cli) {
        Ok(o) => {
            print!("{}", o.output);
            if assert && o.verdict == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Inconsistent(m)) => {
            eprintln!("internal inconsistency: {m}");
            ExitCode::from(3)
        }
    }
}
