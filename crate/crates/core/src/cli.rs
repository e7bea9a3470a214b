//! JSON documents for categories, functors, transformations and adjunctions,
//! and the `fincat` command line built on them.
//!
//! Names are the only identifiers in a document; ids are assigned in file
//! order. Exit codes: 0 the property holds, 1 it fails, 2 invalid input,
//! 3 budget exceeded.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::adjoint::{find_left_adjoint, find_right_adjoint, AdjointSearch, Adjunction};
use crate::category::{validate_category, Cat, FinCat, Functor, IdempotentNat, Mor, NatTrans, Obj, RawCategory};
use crate::classify::classify_with;
use crate::coident::coidentifier;
use crate::completion::{complete, is_idempotent_complete, Karoubi};
use crate::error::{Error, Result};
use crate::gallery::rings::RingTable;
use crate::gallery::suite::{self, GalleryItem};
use crate::limits::{Budget, Limits};
use crate::monadics::{
    audit_with, em_category, is_separable_monad, kleisli_category, monad_of, ClauseStatus, TheoremReport,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: IndexMap<String, String>,
    /// Every composable pair `[g, f, g∘f]` exactly once.
    pub composition: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: CategoryDoc,
    pub target: CategoryDoc,
    pub objects: IndexMap<String, String>,
    pub morphisms: IndexMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationDoc {
    pub from: FunctorDoc,
    pub to: FunctorDoc,
    pub components: IndexMap<String, String>,
}

/// An idempotent natural transformation of the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdempotentDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<CategoryDoc>,
    pub components: IndexMap<String, String>,
}

/// `F ⊣ G`; the unit has components at the objects of the source of `F`, the
/// counit at the objects of its target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjunctionDoc {
    #[serde(rename = "F")]
    pub left: FunctorDoc,
    #[serde(rename = "G")]
    pub right: FunctorDoc,
    pub unit: IndexMap<String, String>,
    pub counit: IndexMap<String, String>,
}

/// Any document the command line reads or writes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Document {
    Adjunction(AdjunctionDoc),
    Transformation(TransformationDoc),
    Idempotent(IdempotentDoc),
    Functor(FunctorDoc),
    Category(CategoryDoc),
    Ring(RingTable),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Adjunction(_) => "adjunction",
            Document::Transformation(_) => "transformation",
            Document::Idempotent(_) => "idempotent",
            Document::Functor(_) => "functor",
            Document::Category(_) => "category",
            Document::Ring(_) => "ring",
        }
    }
}

pub fn category_doc(c: &FinCat) -> CategoryDoc {
    let raw = c.to_raw();
    CategoryDoc {
        objects: raw.objects,
        morphisms: raw.morphisms.into_iter().map(|(name, dom, cod)| MorphismDoc { name, dom, cod }).collect(),
        identities: raw.identities.into_iter().collect(),
        composition: raw.composition,
    }
}

pub fn parse_category(doc: &CategoryDoc) -> Result<Cat> {
    let raw = RawCategory {
        objects: doc.objects.clone(),
        morphisms: doc.morphisms.iter().map(|m| (m.name.clone(), m.dom.clone(), m.cod.clone())).collect(),
        identities: doc.identities.iter().map(|(x, m)| (x.clone(), m.clone())).collect(),
        composition: doc.composition.clone(),
    };
    validate_category(&raw).map(Arc::new).map_err(Error::InvalidCategory)
}

fn components_doc(alpha: &NatTrans) -> IndexMap<String, String> {
    let c = alpha.from().source();
    let d = alpha.from().target();
    c.objects().map(|x| (c.object_name(x).to_string(), d.name_of(alpha.at(x)).to_string())).collect()
}

pub fn functor_doc(f: &Functor) -> FunctorDoc {
    let (c, d) = (f.source(), f.target());
    FunctorDoc {
        source: category_doc(c),
        target: category_doc(d),
        objects: c.objects().map(|x| (c.object_name(x).to_string(), d.object_name(f.ob(x)).to_string())).collect(),
        morphisms: c.morphisms().map(|m| (c.name_of(m).to_string(), d.name_of(f.mor(m)).to_string())).collect(),
    }
}

pub fn transformation_doc(alpha: &NatTrans) -> TransformationDoc {
    TransformationDoc {
        from: functor_doc(alpha.from()),
        to: functor_doc(alpha.to()),
        components: components_doc(alpha),
    }
}

pub fn idempotent_doc(e: &IdempotentNat) -> IdempotentDoc {
    IdempotentDoc { category: Some(category_doc(e.category())), components: components_doc(e.nat()) }
}

pub fn adjunction_doc(a: &Adjunction) -> AdjunctionDoc {
    AdjunctionDoc {
        left: functor_doc(a.left()),
        right: functor_doc(a.right()),
        unit: components_doc(a.unit()),
        counit: components_doc(a.counit()),
    }
}

fn obj(c: &FinCat, name: &str) -> Result<Obj> {
    c.object_named(name).ok_or_else(|| Error::UnknownObject(name.to_string()))
}

fn mor(c: &FinCat, name: &str) -> Result<Mor> {
    c.morphism_named(name).ok_or_else(|| Error::UnknownMorphism(name.to_string()))
}

/// Reads one entry per key, in key order, rejecting extra entries.
fn lookup_all<K, V>(
    map: &IndexMap<String, String>,
    keys: impl Iterator<Item = K>,
    key_name: impl Fn(&K) -> String,
    value: impl Fn(&str) -> Result<V>,
) -> Result<Vec<V>> {
    let mut out = Vec::new();
    let mut seen = 0;
    for k in keys {
        let name = key_name(&k);
        let v = map.get(&name).ok_or_else(|| Error::Parse(format!("no entry for {name}")))?;
        out.push(value(v)?);
        seen += 1;
    }
    if seen != map.len() {
        return Err(Error::Parse("map has entries outside its domain".into()));
    }
    Ok(out)
}

fn functor_between(doc: &FunctorDoc, c: &Cat, d: &Cat) -> Result<Functor> {
    let objects = lookup_all(&doc.objects, c.objects(), |x| c.object_name(*x).to_string(), |v| obj(d, v))?;
    let morphisms = lookup_all(&doc.morphisms, c.morphisms(), |m| c.name_of(*m).to_string(), |v| mor(d, v))?;
    Functor::new(c, d, objects, morphisms)
}

pub fn parse_functor(doc: &FunctorDoc) -> Result<Functor> {
    let c = parse_category(&doc.source)?;
    let d = if doc.target == doc.source { c.clone() } else { parse_category(&doc.target)? };
    functor_between(doc, &c, &d)
}

fn components(map: &IndexMap<String, String>, c: &Cat, d: &Cat) -> Result<Vec<Mor>> {
    lookup_all(map, c.objects(), |x| c.object_name(*x).to_string(), |v| mor(d, v))
}

pub fn parse_transformation(doc: &TransformationDoc) -> Result<NatTrans> {
    let from = parse_functor(&doc.from)?;
    if doc.to.source != doc.from.source || doc.to.target != doc.from.target {
        return Err(Error::BoundaryMismatch("the two functors have different categories".into()));
    }
    let to = functor_between(&doc.to, from.source(), from.target())?;
    NatTrans::new(&from, &to, components(&doc.components, from.source(), from.target())?)
}

pub fn parse_idempotent(doc: &IdempotentDoc, category: Option<&Cat>) -> Result<IdempotentNat> {
    let c = match (&doc.category, category) {
        (_, Some(c)) => c.clone(),
        (Some(cd), None) => parse_category(cd)?,
        (None, None) => return Err(Error::Parse("the idempotent names no category".into())),
    };
    IdempotentNat::new(&c, components(&doc.components, &c, &c)?)
}

pub fn parse_adjunction(doc: &AdjunctionDoc) -> Result<Adjunction> {
    let f = parse_functor(&doc.left)?;
    if doc.right.source != doc.left.target || doc.right.target != doc.left.source {
        return Err(Error::BoundaryMismatch("G does not go back along F".into()));
    }
    let g = functor_between(&doc.right, f.target(), f.source())?;
    let gf = f.then(&g)?;
    let fg = g.then(&f)?;
    let eta = NatTrans::new(&Functor::identity(f.source()), &gf, components(&doc.unit, f.source(), f.source())?)?;
    let eps = NatTrans::new(&fg, &Functor::identity(f.target()), components(&doc.counit, f.target(), f.target())?)?;
    Adjunction::new(&f, &g, &eta, &eps)
}

pub fn item_document(item: &GalleryItem) -> Document {
    match item {
        GalleryItem::Category(c) => Document::Category(category_doc(c)),
        GalleryItem::Functor(f) => Document::Functor(functor_doc(f)),
        GalleryItem::Idempotent(e) => Document::Idempotent(idempotent_doc(e)),
        GalleryItem::Adjunction(a) => Document::Adjunction(adjunction_doc(a)),
        GalleryItem::Ring(r) => Document::Ring(r.clone()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "fincat", version, about = "Finite categories, completions, quotients and adjunctions")]
pub struct Cli {
    /// Search nodes allowed per individual search.
    #[arg(long, global = true, env = "FINCAT_BUDGET")]
    pub budget: Option<u64>,
    /// Recorded in reports; every algorithm is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Human-readable summary followed by indented JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MonadAction {
    Em,
    Kleisli,
    Separable,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check any document; `-` reads standard input.
    Validate { file: String },
    /// The Karoubi envelope of a category, or the completion of a functor.
    Complete {
        file: Option<String>,
        #[arg(long)]
        functor: Option<String>,
    },
    /// Decide faithful, full, semiseparable, separable, naturally full and more.
    Classify {
        #[arg(long)]
        functor: String,
    },
    /// The coidentifier of an idempotent natural transformation.
    Quotient {
        #[arg(long)]
        category: Option<String>,
        #[arg(long)]
        idempotent: String,
    },
    /// Search a left adjoint, or a right adjoint with `--right`.
    Adjoint {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        right: bool,
    },
    /// Algebras, Kleisli category or separability of the induced monad.
    Monad {
        #[arg(long)]
        adjunction: String,
        action: MonadAction,
    },
    /// Check every theorem clause on an adjunction.
    Audit {
        #[arg(long)]
        adjunction: String,
        /// Audit the opposite adjunction.
        #[arg(long)]
        dual: bool,
        /// Record elapsed time per clause.
        #[arg(long)]
        timing: bool,
    },
    /// Emit a gallery item as a document.
    Gallery {
        name: Option<String>,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        list: bool,
    },
}

/// The result of one subcommand.
struct Outcome {
    holds: bool,
    summary: String,
    result: Value,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<Document> {
        let text = if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            s
        } else {
            std::fs::read_to_string(path)?
        };
        Ok(serde_json::from_str(&text)?)
    }
}

fn expect_category(d: Document) -> Result<CategoryDoc> {
    match d {
        Document::Category(c) => Ok(c),
        other => Err(Error::Parse(format!("expected a category, found a {}", other.kind()))),
    }
}

fn expect_functor(d: Document) -> Result<FunctorDoc> {
    match d {
        Document::Functor(f) => Ok(f),
        other => Err(Error::Parse(format!("expected a functor, found a {}", other.kind()))),
    }
}

fn expect_adjunction(d: Document) -> Result<Adjunction> {
    match d {
        Document::Adjunction(a) => parse_adjunction(&a),
        other => Err(Error::Parse(format!("expected an adjunction, found a {}", other.kind()))),
    }
}

fn validate(doc: &Document) -> Result<Outcome> {
    let (objects, morphisms) = match doc {
        Document::Category(c) => {
            let c = parse_category(c)?;
            (c.num_objects(), c.num_morphisms())
        }
        Document::Functor(f) => {
            let f = parse_functor(f)?;
            (f.source().num_objects(), f.source().num_morphisms())
        }
        Document::Transformation(t) => {
            let t = parse_transformation(t)?;
            (t.from().source().num_objects(), t.from().source().num_morphisms())
        }
        Document::Idempotent(e) => {
            let e = parse_idempotent(e, None)?;
            (e.category().num_objects(), e.category().num_morphisms())
        }
        Document::Adjunction(a) => {
            let a = parse_adjunction(a)?;
            (a.lower().num_objects(), a.lower().num_morphisms())
        }
        Document::Ring(r) => {
            r.validate()?;
            (r.size(), r.size())
        }
    };
    Ok(Outcome {
        holds: true,
        summary: format!("valid {} ({objects} objects, {morphisms} morphisms)", doc.kind()),
        result: json!({"kind": doc.kind(), "valid": true, "objects": objects, "morphisms": morphisms}),
    })
}

fn run_command(cmd: &Command, io: &mut Io<'_>) -> Result<Outcome> {
    match cmd {
        Command::Validate { file } => validate(&io.read(file)?),
        Command::Complete { file, functor } => {
            if let Some(path) = functor {
                let f = parse_functor(&expect_functor(io.read(path)?)?)?;
                let (_, _, done) = complete(&f)?;
                return Ok(Outcome {
                    holds: true,
                    summary: format!(
                        "completed functor: {} -> {} objects",
                        done.source().num_objects(),
                        done.target().num_objects()
                    ),
                    result: json!({"functor": functor_doc(&done)}),
                });
            }
            let path = file.as_deref().ok_or_else(|| Error::Parse("complete needs a file or --functor".into()))?;
            let c = parse_category(&expect_category(io.read(path)?)?)?;
            let k = Karoubi::new(&c)?;
            let kc = k.category();
            let objects: Vec<Value> = kc
                .objects()
                .map(|x| {
                    let o = k.object_data(x);
                    json!({"name": kc.object_name(x), "base": c.object_name(o.base), "idempotent": c.name_of(o.idem)})
                })
                .collect();
            Ok(Outcome {
                holds: true,
                summary: format!("envelope with {} objects and {} morphisms", kc.num_objects(), kc.num_morphisms()),
                result: json!({
                    "base_idempotent_complete": is_idempotent_complete(&c),
                    "idempotent_complete": is_idempotent_complete(kc),
                    "objects": objects,
                    "category": category_doc(kc),
                }),
            })
        }
        Command::Classify { functor } => {
            let f = parse_functor(&expect_functor(io.read(functor)?)?)?;
            let report = classify_with(&f, &mut Budget::from_limits(), false)?;
            Ok(Outcome {
                holds: true,
                summary: format!(
                    "semiseparable {}, separable {}, naturally full {}, faithful {}, full {}",
                    report.semiseparable, report.separable, report.naturally_full, report.faithful, report.full
                ),
                result: serde_json::to_value(&report)?,
            })
        }
        Command::Quotient { category, idempotent } => {
            let c = match category {
                Some(p) => Some(parse_category(&expect_category(io.read(p)?)?)?),
                None => None,
            };
            let e = match io.read(idempotent)? {
                Document::Idempotent(doc) => parse_idempotent(&doc, c.as_ref())?,
                other => return Err(Error::Parse(format!("expected an idempotent, found a {}", other.kind()))),
            };
            let q = coidentifier(&e)?;
            let (base, quot, h) = (q.base(), q.quotient(), q.functor());
            let reps: IndexMap<String, String> = quot
                .morphisms()
                .map(|m| (quot.name_of(m).to_string(), base.name_of(q.representative(m)).to_string()))
                .collect();
            Ok(Outcome {
                holds: true,
                summary: format!("{} morphisms collapse to {}", base.num_morphisms(), quot.num_morphisms()),
                result: json!({
                    "quotient": category_doc(quot),
                    "functor": {
                        "objects": base.objects().map(|x| (base.object_name(x).to_string(), quot.object_name(h.ob(x)).to_string())).collect::<IndexMap<_, _>>(),
                        "morphisms": base.morphisms().map(|m| (base.name_of(m).to_string(), quot.name_of(h.mor(m)).to_string())).collect::<IndexMap<_, _>>(),
                    },
                    "representatives": reps,
                }),
            })
        }
        Command::Adjoint { functor, right } => {
            let f = parse_functor(&expect_functor(io.read(functor)?)?)?;
            let side = if *right { "right" } else { "left" };
            let search = if *right { find_right_adjoint(&f)? } else { find_left_adjoint(&f)? };
            Ok(match search {
                AdjointSearch::Found(a) => Outcome {
                    holds: true,
                    summary: format!("{side} adjoint found"),
                    result: json!({"found": true, "side": side, "adjunction": adjunction_doc(&a)}),
                },
                AdjointSearch::Missing(x) => {
                    let c = f.target();
                    Outcome {
                        holds: false,
                        summary: format!("no {side} adjoint: nothing universal at {}", c.object_name(x)),
                        result: json!({"found": false, "side": side, "missing_at": c.object_name(x)}),
                    }
                }
            })
        }
        Command::Monad { adjunction, action } => {
            let a = expect_adjunction(io.read(adjunction)?)?;
            let t = monad_of(&a)?;
            match action {
                MonadAction::Em => {
                    let em = em_category(&t)?;
                    let c = t.category();
                    let algebras: Vec<Value> = em
                        .objects()
                        .iter()
                        .map(|o| json!({"carrier": c.object_name(o.carrier), "action": c.name_of(o.action)}))
                        .collect();
                    Ok(Outcome {
                        holds: true,
                        summary: format!("{} algebras, {} morphisms", algebras.len(), em.category().num_morphisms()),
                        result: json!({"algebras": algebras, "category": category_doc(em.category())}),
                    })
                }
                MonadAction::Kleisli => {
                    let kl = kleisli_category(&t)?;
                    Ok(Outcome {
                        holds: true,
                        summary: format!("Kleisli category with {} morphisms", kl.category().num_morphisms()),
                        result: json!({"category": category_doc(kl.category())}),
                    })
                }
                MonadAction::Separable => {
                    let w = is_separable_monad(&t)?;
                    Ok(Outcome {
                        holds: w.is_some(),
                        summary: format!("separable monad: {}", w.is_some()),
                        result: json!({
                            "separable": w.is_some(),
                            "sigma": w.map(|w| components_doc(w.sigma())),
                        }),
                    })
                }
            }
        }
        Command::Audit { adjunction, dual, timing } => {
            let a = expect_adjunction(io.read(adjunction)?)?;
            let a = if *dual { a.opposite() } else { a };
            let report = audit_with(&a, *timing)?;
            Ok(audit_outcome(report)?)
        }
        Command::Gallery { .. } => Err(Error::Internal("gallery is handled separately".into())),
    }
}

fn audit_outcome(report: TheoremReport) -> Result<Outcome> {
    let passed = report.clauses.iter().filter(|c| c.status == ClauseStatus::Pass).count();
    let summary = report
        .clauses
        .iter()
        .map(|c| format!("{:?} {}", c.status, c.id))
        .chain(std::iter::once(format!("{passed}/{} clauses pass", report.clauses.len())))
        .collect::<Vec<_>>()
        .join("\n");
    if report.clauses.iter().any(|c| c.status == ClauseStatus::BudgetExceeded)
        && !report.clauses.iter().any(|c| matches!(c.status, ClauseStatus::Fail | ClauseStatus::Error))
    {
        return Err(Error::BudgetExceeded(summary));
    }
    Ok(Outcome { holds: report.all_pass(), summary, result: serde_json::to_value(&report)? })
}

/// Exit code and a short machine name for an error.
pub fn classify_error(e: &Error) -> (i32, &'static str) {
    match e {
        Error::BudgetExceeded(_) => (3, "budget_exceeded"),
        Error::PreconditionFailed(_) => (1, "precondition_failed"),
        Error::IsoNotFound(_) => (1, "iso_not_found"),
        Error::WitnessInvalid(_) => (1, "witness_invalid"),
        Error::Internal(_) => (1, "internal"),
        Error::InvalidCategory(_) => (2, "invalid_category"),
        Error::BoundaryMismatch(_) => (2, "boundary_mismatch"),
        Error::NotFunctor(_) => (2, "not_functor"),
        Error::NotNatural(_) => (2, "not_natural"),
        Error::NotIdempotent(_) => (2, "not_idempotent"),
        Error::MonadLaw(_) => (2, "monad_law"),
        Error::TriangleFailure(_) => (2, "triangle_failure"),
        Error::UnknownObject(_) => (2, "unknown_object"),
        Error::UnknownMorphism(_) => (2, "unknown_morphism"),
        Error::InvalidRing(_) => (2, "invalid_ring"),
        Error::NotABasis(_) => (2, "not_a_basis"),
        Error::NotCentralIdempotent(_) => (2, "not_central_idempotent"),
        Error::Parse(_) => (2, "parse"),
        Error::Json(_) => (2, "json"),
        Error::Io(_) => (2, "io"),
    }
}

fn diagnose(stderr: &mut dyn Write, e: &Error) -> i32 {
    let (code, kind) = classify_error(e);
    let lines: Vec<Value> = match e {
        Error::InvalidCategory(vs) => {
            vs.iter().map(|v| json!({"level": "error", "kind": kind, "exit": code, "message": v.to_string()})).collect()
        }
        _ => vec![json!({"level": "error", "kind": kind, "exit": code, "message": e.to_string()})],
    };
    for l in lines {
        let _ = writeln!(stderr, "{l}");
    }
    code
}

fn gallery(
    name: Option<&str>,
    params: &[String],
    output: Option<&PathBuf>,
    list: bool,
    pretty: bool,
    stdout: &mut dyn Write,
) -> Result<()> {
    if list || name.is_none() {
        for n in suite::ITEM_NAMES {
            writeln!(stdout, "{n}")?;
        }
        return Ok(());
    }
    let doc = item_document(&suite::item(name.unwrap_or_default(), params)?);
    let text = if pretty { serde_json::to_string_pretty(&doc)? } else { serde_json::to_string(&doc)? };
    match output {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => writeln!(stdout, "{text}")?,
    }
    Ok(())
}

/// Runs the command line on explicit streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or_default();
            let _ = writeln!(stderr, "{}", json!({"level": "error", "kind": "usage", "exit": 2, "message": first}));
            return 2;
        }
    };
    if let Some(nodes) = cli.budget {
        Limits { nodes, ..Limits::current() }.install();
    }
    if let Command::Gallery { name, params, output, list } = &cli.command {
        return match gallery(name.as_deref(), params, output.as_ref(), *list, cli.pretty, stdout) {
            Ok(()) => 0,
            Err(e) => diagnose(stderr, &e),
        };
    }
    let mut io = Io { stdin };
    match run_command(&cli.command, &mut io) {
        Ok(outcome) => {
            let report = json!({
                "command": command_name(&cli.command),
                "seed": cli.seed,
                "budget": Limits::current().nodes,
                "holds": outcome.holds,
                "result": outcome.result,
            });
            let written = if cli.pretty {
                serde_json::to_string_pretty(&report).map(|j| format!("{}\n\n{j}", outcome.summary))
            } else {
                serde_json::to_string(&report)
            };
            match written {
                Ok(text) => {
                    let _ = writeln!(stdout, "{text}");
                    if outcome.holds {
                        0
                    } else {
                        1
                    }
                }
                Err(e) => diagnose(stderr, &e.into()),
            }
        }
        Err(e) => diagnose(stderr, &e),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Complete { .. } => "complete",
        Command::Classify { .. } => "classify",
        Command::Quotient { .. } => "quotient",
        Command::Adjoint { .. } => "adjoint",
        Command::Monad { .. } => "monad",
        Command::Audit { .. } => "audit",
        Command::Gallery { .. } => "gallery",
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}
