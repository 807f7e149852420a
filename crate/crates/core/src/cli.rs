//! The `hpk` command line: load JSON fixtures, run one operation, print a
//! JSON report. Exit codes: 0 success, 1 a property violation was found,
//! 2 input error, 3 budget exceeded (or an answer left unknown).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::budget::{Budget, BUDGET_ENV, DEFAULT_SEARCH_BUDGET};
use crate::classify::{counit, transpose_to_loop, transpose_to_wbar, unit, w_total, wbar, LoopMap};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::groupoid::FiniteGroupoid;
use crate::loops::loop_groupoid;
use crate::presentation::Verdict;
use crate::sgpd::{dold_kan, moore_pi_n, pi0_sgpd, ChainFixture, SimplicialGroupoid};
use crate::site::{
    bounds, comma_site, generating_inclusions, homotopy_sheaf, is_sheaf, is_weak_equivalence,
    sheafify, sheafify_groups, solve_lifting, validate_site, y_u, Elements, FiniteSite,
    LiftOutcome, LiftingJson, PresheafJson, Sections, TransformationJson,
};
use crate::sset::{
    pi0_sset, pi_n_kan, pullback, pushout, standard_complex, validate_sset, Basepoint, ComplexKind,
    Components, SSetJson, SimplicialMap, TruncatedSimplicialSet,
};
use crate::two_gpd::{
    ms_fibration, ms_weak_equivalence, nerve, pi0_2gpd, pi1_2gpd, pi2_2gpd, validate_2gpd,
    whitehead_2gpd, MsVerdict, TwoFunctor, TwoGroupoid,
};

const CONVENTIONS: &str =
    "composition in function order; edge d0 is the source and d1 the target; \
W-bar strings are stored leading entry first; restrictions map values[target] to values[source]";

const BUDGET_HELP: &str =
    "Enumeration budget: candidates inspected by any exhaustive search before giving up \
(default 1000000, or the HPK_BUDGET environment variable). Exceeding it exits with code 3.";

#[derive(Debug, Parser)]
#[command(
    name = "hpk",
    version,
    about = "Finite simplicial groupoids, 2-groupoids, sites and sheaves",
    long_about = "Batch front end. Every command reads JSON fixtures and prints one JSON report \
carrying the conventions and budget used.\n\nExit codes: 0 success, 1 property violation found, \
2 input error, 3 budget exceeded or answer unknown.\n\nDepths: a truncated object stores levels 0..=depth. \
Each command's help states the depth it needs."
)]
pub struct Cli {
    /// Output format; `text` is a lossy summary for people and is never parsed back.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, help = BUDGET_HELP)]
    pub budget: Option<u64>,
    /// Worker threads for commands over several input files (`validate`).
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Write the report here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Sset,
    Sgpd,
    #[value(name = "2gpd")]
    TwoGpd,
    Groupoid,
    Site,
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Point,
    Simplex,
    Boundary,
    Horn,
    Sphere,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every law of each input file. Any depth.
    Validate {
        #[arg(long, value_enum, default_value_t = Kind::Sset)]
        kind: Kind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Emit a standard complex materialized through --depth (at least n).
    Complex {
        #[arg(long, value_enum)]
        shape: Shape,
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Missing vertex of a horn.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        depth: usize,
    },
    /// Pushout of two simplicial maps out of a common source (map files with
    /// source, target and map). All three complexes must share one depth.
    Pushout { left: PathBuf, right: PathBuf },
    /// Pullback of two simplicial maps into a common target (map files with
    /// source, target and map). All three complexes must share one depth.
    Pullback { left: PathBuf, right: PathBuf },
    /// Path components. Simplicial sets need depth 1.
    Pi0 {
        #[arg(long, value_enum, default_value_t = Kind::Sset)]
        kind: Kind,
        file: PathBuf,
    },
    /// pi_n of a finite Kan complex at a vertex; needs depth n + 1 and checks
    /// the Kan condition through it (budgeted).
    Pikan {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        /// Vertex name; defaults to the first vertex.
        #[arg(long)]
        base: Option<String>,
    },
    /// pi_n of a vertex simplicial group from its Moore complex; needs depth n + 1.
    Moore {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        object: Option<String>,
    },
    /// Simplicial abelian group of a finite chain complex, through --depth.
    Doldkan {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// Loop groupoid G(X) through --depth (at most depth(X) - 1).
    Loop {
        file: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Classifying complex W-bar A through --depth (at most depth(A) + 1); budgeted.
    Wbar {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// Total space W of a one-object simplicial groupoid through --depth
    /// (at most depth(A)); reports pi_0 and, from depth 2, whether pi_1 is trivial.
    Wtotal {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// Transpose across G -| W-bar. X must have depth(A) + 1. Give exactly one
    /// of --loop-map (a map G(X) -> A) or --wbar-map (names of a map X -> W-bar A).
    Transpose {
        #[arg(long)]
        sset: PathBuf,
        #[arg(long)]
        sgpd: PathBuf,
        #[arg(long)]
        loop_map: Option<PathBuf>,
        #[arg(long)]
        wbar_map: Option<PathBuf>,
    },
    /// Unit X -> W-bar G(X); needs depth 1 and a finite loop groupoid.
    Unit { file: PathBuf },
    /// Counit G(W-bar A) -> A; W-bar A is built through depth(A) + 1.
    Counit { file: PathBuf },
    /// Nerve of a 2-groupoid through --depth; budgeted.
    Nerve {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// pi_0, pi_1 and pi_2 of a 2-groupoid at an object. 2-groupoids carry no depth.
    Pi2gpd {
        file: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Presented 2-groupoid of a simplicial set; needs depth 3.
    Whitehead { file: PathBuf },
    /// Whether a 2-functor (JSON with source, target, objects, one, two) is a
    /// weak equivalence. No depth: the comparison is on pi_0, pi_1 and pi_2.
    Msweq { file: PathBuf },
    /// Whether a 2-functor is a fibration (1-cell and 2-cell lifting). No depth.
    Msfib { file: PathBuf },
    /// Category laws and coverage axioms of a finite site. Sites have no depth.
    SiteValidate { file: PathBuf },
    /// The comma site over an object. Sites have no depth.
    Comma {
        site: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// The presheaf Y_U of a simplicial set over an object, at the depth of the simplicial set.
    Yu {
        site: PathBuf,
        sset: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// Associated sheaf of a presheaf of sets or groups; budgeted. No depth.
    Sheafify { site: PathBuf, presheaf: PathBuf },
    /// Homotopy sheaf pi_n over the comma site at an object and basepoint.
    /// Simplicial sets and groupoids need depth n + 1; 2-groupoids take n in 1..=2.
    Hsheaf {
        site: PathBuf,
        presheaf: PathBuf,
        #[arg(long)]
        object: String,
        /// Vertex or object name; defaults to the first.
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        n: usize,
    },
    /// Weak-equivalence criterion through --nmax: isomorphism of the pi_0
    /// sheaf and every homotopy sheaf. Sections need depth nmax + 1; budgeted.
    Weq {
        site: PathBuf,
        source: PathBuf,
        target: PathBuf,
        map: PathBuf,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
    },
    /// Subpresheaves of every representable simplex, n <= --nmax <= 3; budgeted.
    Geninc {
        site: PathBuf,
        #[arg(long, default_value_t = 1)]
        nmax: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Solve a lifting square of presheaves of simplicial sets; budgeted.
    /// All eight presheaves and maps must share one depth.
    Lift { site: PathBuf, problem: PathBuf },
    /// Per-object cardinalities of a presheaf, level by level through its depth.
    Bounds { site: PathBuf, presheaf: PathBuf },
}

/// How a finished command ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violation,
    Unknown,
}

impl Status {
    fn of(v: Verdict) -> Self {
        match v {
            Verdict::Yes => Status::Ok,
            Verdict::No => Status::Violation,
            Verdict::Unknown => Status::Unknown,
        }
    }

    fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Unknown => 3,
        }
    }
}

/// Wire form of a simplicial map between files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub source: SSetJson,
    pub target: SSetJson,
    pub map: Vec<BTreeMap<String, String>>,
}

impl MapJson {
    pub fn from_map(m: &SimplicialMap) -> Self {
        MapJson {
            source: m.source.to_json(),
            target: m.target.to_json(),
            map: m.to_names(),
        }
    }

    pub fn to_map(&self) -> Result<SimplicialMap> {
        SimplicialMap::from_names(
            TruncatedSimplicialSet::from_json(&self.source)?,
            TruncatedSimplicialSet::from_json(&self.target)?,
            &self.map,
        )
    }
}

fn read<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

fn read_sset(path: &Path) -> Result<TruncatedSimplicialSet> {
    TruncatedSimplicialSet::from_json(&read(path)?)
}

fn read_sgpd(path: &Path) -> Result<SimplicialGroupoid> {
    let a: SimplicialGroupoid = read(path)?;
    match a.violations().first() {
        None => Ok(a),
        Some(v) => Err(Error::Invalid(format!("{}: {v}", path.display()))),
    }
}

fn read_2gpd(path: &Path) -> Result<TwoGroupoid> {
    let k: TwoGroupoid = read(path)?;
    match validate_2gpd(&k).first() {
        None => Ok(k),
        Some(v) => Err(Error::Invalid(format!("{}: {v}", path.display()))),
    }
}

fn read_site(path: &Path) -> Result<FiniteSite> {
    let c: FiniteSite = read(path)?;
    match validate_site(&c).first() {
        None => Ok(c),
        Some(v) => Err(Error::Invalid(format!("{}: {v}", path.display()))),
    }
}

fn components_json(names: &[String], k: &Components) -> Value {
    json!({
        "count": k.count,
        "representatives": k.representatives().iter().map(|&v| names[v].clone()).collect::<Vec<_>>(),
        "class_of": names.iter().cloned().zip(k.class_of.iter().copied()).collect::<BTreeMap<_, _>>(),
    })
}

fn group_json(g: &FiniteGroup) -> Value {
    json!({ "order": g.order(), "structure": g.describe(), "abelian": g.is_abelian() })
}

fn find(names: &[String], name: Option<&str>, what: &str) -> Result<usize> {
    match name {
        None if names.is_empty() => Err(Error::Invalid(format!("no {what} to default to"))),
        None => Ok(0),
        Some(n) => names
            .iter()
            .position(|x| x == n)
            .ok_or_else(|| Error::UnknownId {
                level: 0,
                id: n.to_string(),
            }),
    }
}

fn verdict_json(v: &MsVerdict) -> (Value, Status) {
    (json!(v), Status::of(v.verdict))
}

fn validate_file(kind: Kind, path: &Path) -> Result<Vec<String>> {
    Ok(match kind {
        Kind::Sset => validate_sset(&read_sset(path)?)
            .iter()
            .map(|v| format!("{} fails on {} at level {}", v.identity, v.simplex, v.level))
            .collect(),
        Kind::Sgpd => read::<SimplicialGroupoid>(path)?.violations(),
        Kind::TwoGpd => validate_2gpd(&read(path)?),
        Kind::Groupoid => read::<FiniteGroupoid>(path)?.violations(),
        Kind::Site => validate_site(&read(path)?),
        Kind::Chain => match read::<ChainFixture>(path)?.validate() {
            Ok(()) => Vec::new(),
            Err(e) => vec![e.to_string()],
        },
    })
}

impl Cli {
    fn budget(&self) -> Budget {
        match self.budget {
            Some(b) => Budget::new(b),
            None => Budget::search(),
        }
    }

    fn validate(&self, kind: Kind, files: &[PathBuf]) -> Result<(Value, Status)> {
        let jobs = self.jobs.max(1).min(files.len());
        let mut results: Vec<Option<Result<Vec<String>>>> = vec![None; files.len()];
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    s.spawn(move || {
                        (j..files.len())
                            .step_by(jobs)
                            .map(|i| (i, validate_file(kind, &files[i])))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                for (i, r) in h.join().expect("validation worker panicked") {
                    results[i] = Some(r);
                }
            }
        });
        let mut reports = Vec::new();
        let mut clean = true;
        for (path, r) in files.iter().zip(results) {
            let violations = r.expect("every file is validated")?;
            clean &= violations.is_empty();
            reports.push(json!({ "file": path.display().to_string(), "violations": violations }));
        }
        Ok((
            json!({ "files": reports }),
            if clean { Status::Ok } else { Status::Violation },
        ))
    }

    fn execute(&self) -> Result<(Value, Status)> {
        let budget = self.budget();
        let ok = |v: Value| Ok((v, Status::Ok));
        match &self.command {
            Command::Validate { kind, files } => self.validate(*kind, files),
            Command::Complex { shape, n, k, depth } => {
                let kind = match shape {
                    Shape::Point => ComplexKind::Point,
                    Shape::Simplex => ComplexKind::Simplex,
                    Shape::Boundary => ComplexKind::Boundary,
                    Shape::Horn => ComplexKind::Horn,
                    Shape::Sphere => ComplexKind::Sphere,
                };
                let x = standard_complex(kind, *n, *k, *depth)?;
                ok(json!({ "bounds": x.bounds(), "sset": x.to_json() }))
            }
            Command::Pushout { left, right } => {
                let (f, g) = (
                    read::<MapJson>(left)?.to_map()?,
                    read::<MapJson>(right)?.to_map()?,
                );
                let p = pushout(&f, &g)?;
                ok(json!({
                    "object": p.object.to_json(),
                    "from_left": p.from_left.to_names(),
                    "from_right": p.from_right.to_names(),
                }))
            }
            Command::Pullback { left, right } => {
                let (f, g) = (
                    read::<MapJson>(left)?.to_map()?,
                    read::<MapJson>(right)?.to_map()?,
                );
                let p = pullback(&f, &g)?;
                ok(json!({
                    "object": p.object.to_json(),
                    "to_left": p.to_left.to_names(),
                    "to_right": p.to_right.to_names(),
                }))
            }
            Command::Pi0 { kind, file } => match kind {
                Kind::Sset => {
                    let x = read_sset(file)?;
                    ok(components_json(x.names(0), &pi0_sset(&x)?))
                }
                Kind::Sgpd => {
                    let a = read_sgpd(file)?;
                    ok(components_json(a.objects(), &pi0_sgpd(&a)))
                }
                Kind::TwoGpd => {
                    let k = read_2gpd(file)?;
                    ok(components_json(&k.one.objects, &pi0_2gpd(&k)))
                }
                _ => Err(Error::Invalid("pi0 takes --kind sset, sgpd or 2gpd".into())),
            },
            Command::Pikan { file, n, base } => {
                let x = read_sset(file)?;
                let v = find(x.names(0), base.as_deref(), "vertex")?;
                let h = pi_n_kan(&x, Basepoint(v), *n, &budget)?;
                ok(json!({
                    "n": n,
                    "base": x.name(0, v),
                    "classes": h.class_count(),
                    "group": h.group.as_ref().map(group_json),
                    "representatives": h.representatives.iter().map(|&s| x.name(*n, s).to_string()).collect::<Vec<_>>(),
                }))
            }
            Command::Moore { file, n, object } => {
                let a = read_sgpd(file)?;
                let x = find(a.objects(), object.as_deref(), "object")?;
                let m = moore_pi_n(&a, x, *n)?;
                let names = &a.level(*n).arrows;
                ok(json!({
                    "n": n,
                    "object": a.objects()[x],
                    "group": group_json(&m.group),
                    "representatives": m.representatives.iter().map(|&g| names[g].name.clone()).collect::<Vec<_>>(),
                }))
            }
            Command::Doldkan { file, depth } => {
                let a = dold_kan(&read(file)?, *depth)?;
                let sizes: Vec<usize> = a.levels().iter().map(|l| l.arrow_count()).collect();
                ok(json!({ "level_sizes": sizes, "sgpd": a.to_json() }))
            }
            Command::Loop { file, depth } => {
                let x = read_sset(file)?;
                let d = depth.unwrap_or(x.depth().saturating_sub(1));
                let g = loop_groupoid(&x, d)?;
                let levels: Vec<Value> = (0..=g.depth())
                    .map(|n| {
                        let l = g.level(n);
                        json!({
                            "generators": l.generators.iter().map(|a| a.name.clone()).collect::<Vec<_>>(),
                            "forest": l.is_forest(),
                        })
                    })
                    .collect();
                let finite = if g.is_finite() {
                    Some(g.to_finite()?.to_json())
                } else {
                    None
                };
                ok(json!({ "levels": levels, "finite": finite }))
            }
            Command::Wbar { file, depth } => {
                let w = wbar(&read_sgpd(file)?, *depth, &budget)?;
                ok(json!({ "level_sizes": w.sset.level_sizes(), "sset": w.sset.to_json() }))
            }
            Command::Wtotal { file, depth } => {
                let t = w_total(&read_sgpd(file)?, *depth, &budget)?;
                let pi0 = if *depth >= 1 {
                    Some(pi0_sset(&t.total)?.count)
                } else {
                    None
                };
                let pi1_trivial = if *depth >= 2 {
                    pi_n_kan(&t.total, Basepoint(0), 1, &budget)?
                        .group
                        .map(|g| g.is_trivial())
                } else {
                    None
                };
                ok(json!({
                    "level_sizes": t.total.level_sizes(),
                    "pi0": pi0,
                    "pi1_trivial": pi1_trivial,
                    "sset": t.total.to_json(),
                }))
            }
            Command::Transpose {
                sset,
                sgpd,
                loop_map,
                wbar_map,
            } => {
                let (x, a) = (read_sset(sset)?, read_sgpd(sgpd)?);
                if x.depth() != a.depth() + 1 {
                    return Err(Error::Invalid("X must have one level more than A".into()));
                }
                let g = loop_groupoid(&x, a.depth())?;
                let w = wbar(&a, x.depth(), &budget)?;
                match (loop_map, wbar_map) {
                    (Some(path), None) => {
                        let f: LoopMap = read(path)?;
                        if let Some(v) = f.violations(&g, &a).first() {
                            return Err(Error::Invalid(format!("not a map G(X) -> A: {v}")));
                        }
                        let phi = transpose_to_wbar(&f, &g, &a, &w)?;
                        let back = transpose_to_loop(&phi, &g, &w);
                        ok(json!({ "wbar_map": phi.to_names(), "round_trip": back == f }))
                    }
                    (None, Some(path)) => {
                        let table: Vec<BTreeMap<String, String>> = read(path)?;
                        let phi = SimplicialMap::from_names(x.clone(), w.sset.clone(), &table)?;
                        let f = transpose_to_loop(&phi, &g, &w);
                        let back = transpose_to_wbar(&f, &g, &a, &w)?;
                        ok(json!({ "loop_map": f, "round_trip": back == phi }))
                    }
                    _ => Err(Error::Invalid(
                        "give exactly one of --loop-map and --wbar-map".into(),
                    )),
                }
            }
            Command::Unit { file } => {
                let u = unit(&read_sset(file)?, &budget)?;
                ok(json!({
                    "level_sizes": u.classifying.sset.level_sizes(),
                    "target": u.classifying.sset.to_json(),
                    "map": u.map.to_names(),
                }))
            }
            Command::Counit { file } => {
                let a = read_sgpd(file)?;
                let e = counit(&a, &budget)?;
                ok(json!({ "level_sizes": e.classifying.sset.level_sizes(), "map": e.map }))
            }
            Command::Nerve { file, depth } => {
                let n = nerve(&read_2gpd(file)?, *depth, &budget)?;
                ok(json!({ "level_sizes": n.sset.level_sizes(), "sset": n.sset.to_json() }))
            }
            Command::Pi2gpd { file, object } => {
                let k = read_2gpd(file)?;
                let x = find(&k.one.objects, object.as_deref(), "object")?;
                ok(json!({
                    "object": k.one.objects[x],
                    "pi0": pi0_2gpd(&k).count,
                    "pi1": group_json(&pi1_2gpd(&k, x)?),
                    "pi2": group_json(&pi2_2gpd(&k, x)?),
                }))
            }
            Command::Whitehead { file } => {
                let w = whitehead_2gpd(&read_sset(file)?)?;
                ok(json!({
                    "objects": w.one.objects,
                    "one_generators": w.one.generators.iter().map(|a| a.name.clone()).collect::<Vec<_>>(),
                    "two_generators": w.two,
                    "relations": w.relations,
                }))
            }
            Command::Msweq { file } => Ok(verdict_json(&ms_weak_equivalence(&read_functor(file)?))),
            Command::Msfib { file } => Ok(verdict_json(&ms_fibration(&read_functor(file)?))),
            Command::SiteValidate { file } => {
                let v = validate_site(&read(file)?);
                let status = if v.is_empty() {
                    Status::Ok
                } else {
                    Status::Violation
                };
                Ok((json!({ "violations": v }), status))
            }
            Command::Comma { site, object } => {
                let c = read_site(site)?;
                let u = c.object_id(object)?;
                let cs = comma_site(&c, u)?;
                ok(json!({ "site": cs.site, "objects": cs.site.objects }))
            }
            Command::Yu { site, sset, object } => {
                let c = read_site(site)?;
                let p = y_u(&c, &read_sset(sset)?, c.object_id(object)?)?;
                ok(json!(PresheafJson::from_presheaf(&c, &p)))
            }
            Command::Sheafify { site, presheaf } => {
                let c = read_site(site)?;
                let j: PresheafJson = read(presheaf)?;
                match j.kind.as_str() {
                    "sets" => {
                        let f = j.to_presheaf::<Elements>(&c)?;
                        let l2 = sheafify(&c, &f, &budget)?;
                        ok(json!({
                            "sheaf": PresheafJson::from_presheaf(&c, &l2),
                            "input_violations": is_sheaf(&c, &f, &budget)?,
                            "output_violations": is_sheaf(&c, &l2, &budget)?,
                        }))
                    }
                    "groups" => {
                        let f = j.to_presheaf::<FiniteGroup>(&c)?;
                        let l2 = sheafify_groups(&c, &f, &budget)?;
                        ok(json!({
                            "sheaf": PresheafJson::from_presheaf(&c, &l2),
                            "input_violations": is_sheaf(&c, &f, &budget)?,
                            "output_violations": is_sheaf(&c, &l2, &budget)?,
                        }))
                    }
                    other => Err(Error::Invalid(format!(
                        "sheafify takes sets or groups, not {other}"
                    ))),
                }
            }
            Command::Hsheaf {
                site,
                presheaf,
                object,
                point,
                n,
            } => {
                let c = read_site(site)?;
                let u = c.object_id(object)?;
                let x = read::<PresheafJson>(presheaf)?.to_sections(&c)?;
                let (cs, p) = match &x {
                    Sections::SSet(s) => {
                        let v = find(s.values[u].names(0), point.as_deref(), "vertex")?;
                        crate::site::homotopy_presheaf_sset(&c, s, u, v, *n, &budget)?
                    }
                    Sections::SGpd(s) => {
                        let v = find(s.values[u].objects(), point.as_deref(), "object")?;
                        crate::site::homotopy_presheaf_sgpd(&c, s, u, v, *n)?
                    }
                    Sections::TwoGpd(s) => {
                        let v = find(&s.values[u].one.objects, point.as_deref(), "object")?;
                        crate::site::homotopy_presheaf_2gpd(&c, s, u, v, *n)?
                    }
                };
                let sheaf = homotopy_sheaf(&cs, &p, &budget)?;
                let describe =
                    |q: &crate::site::Presheaf<FiniteGroup>| -> BTreeMap<String, String> {
                        cs.site
                            .objects
                            .iter()
                            .cloned()
                            .zip(q.values.iter().map(|g| g.describe()))
                            .collect()
                    };
                ok(json!({
                    "comma": cs.site,
                    "presheaf_values": describe(&p),
                    "sheaf_values": describe(&sheaf),
                    "sheaf": PresheafJson::from_presheaf(&cs.site, &sheaf),
                }))
            }
            Command::Weq {
                site,
                source,
                target,
                map,
                nmax,
            } => {
                let c = read_site(site)?;
                let x = read::<PresheafJson>(source)?.to_sections(&c)?;
                let y = read::<PresheafJson>(target)?.to_sections(&c)?;
                let f = read::<TransformationJson>(map)?.to_section_map(&c, &x, &y)?;
                let r = is_weak_equivalence(&c, &x, &y, &f, *nmax, &budget)?;
                let status = Status::of(r.verdict);
                Ok((
                    json!({ "weak_equivalence": r.verdict == Verdict::Yes, "report": r }),
                    status,
                ))
            }
            Command::Geninc { site, nmax, depth } => {
                let c = read_site(site)?;
                let mut names = Vec::new();
                for u in 0..c.object_count() {
                    for n in 0..=*nmax {
                        let incs = generating_inclusions(&c, u, n, (*depth).max(n), &budget)?;
                        names.push(json!({
                            "object": c.objects[u],
                            "n": n,
                            "count": incs.len(),
                            "inclusions": incs.iter().map(|i| i.name.clone()).collect::<Vec<_>>(),
                        }));
                    }
                }
                ok(json!({ "representables": names }))
            }
            Command::Lift { site, problem } => {
                let c = read_site(site)?;
                let pr = read::<LiftingJson>(problem)?.to_problem(&c)?;
                match solve_lifting(&c, &pr, &budget)? {
                    LiftOutcome::Lift(h) => ok(json!({
                        "outcome": "lift",
                        "lift": TransformationJson::from_transformation(&c, &pr.b, &pr.x, &h),
                    })),
                    LiftOutcome::NoLift => Ok((
                        json!({ "outcome": "no-lift", "search": "exhausted" }),
                        Status::Violation,
                    )),
                    LiftOutcome::BudgetExceeded => {
                        Ok((json!({ "outcome": "budget-exceeded" }), Status::Unknown))
                    }
                }
            }
            Command::Bounds { site, presheaf } => {
                let c = read_site(site)?;
                let j: PresheafJson = read(presheaf)?;
                let sizes: BTreeMap<String, Vec<usize>> = match j.kind.as_str() {
                    "sets" => {
                        let p = j.to_presheaf::<Elements>(&c)?;
                        c.objects
                            .iter()
                            .cloned()
                            .zip(p.values.iter().map(|v| vec![v.len()]))
                            .collect()
                    }
                    "groups" => {
                        let p = j.to_presheaf::<FiniteGroup>(&c)?;
                        c.objects
                            .iter()
                            .cloned()
                            .zip(p.values.iter().map(|v| vec![v.order()]))
                            .collect()
                    }
                    _ => match j.to_sections(&c)? {
                        Sections::SSet(p) => bounds(&c, &p),
                        Sections::SGpd(p) => c
                            .objects
                            .iter()
                            .cloned()
                            .zip(
                                p.values
                                    .iter()
                                    .map(|a| a.levels().iter().map(|l| l.arrow_count()).collect()),
                            )
                            .collect(),
                        Sections::TwoGpd(p) => c
                            .objects
                            .iter()
                            .cloned()
                            .zip(p.values.iter().map(|k| {
                                vec![k.object_count(), k.one.arrow_count(), k.cells.len()]
                            }))
                            .collect(),
                    },
                };
                ok(json!({ "kind": j.kind, "cardinalities": sizes }))
            }
        }
    }
}

fn read_functor(path: &Path) -> Result<TwoFunctor> {
    let f: TwoFunctor = read(path)?;
    match f.violations().first() {
        None => Ok(f),
        Some(v) => Err(Error::Invalid(format!("{}: {v}", path.display()))),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Complex { .. } => "complex",
        Command::Pushout { .. } => "pushout",
        Command::Pullback { .. } => "pullback",
        Command::Pi0 { .. } => "pi0",
        Command::Pikan { .. } => "pikan",
        Command::Moore { .. } => "moore",
        Command::Doldkan { .. } => "doldkan",
        Command::Loop { .. } => "loop",
        Command::Wbar { .. } => "wbar",
        Command::Wtotal { .. } => "wtotal",
        Command::Transpose { .. } => "transpose",
        Command::Unit { .. } => "unit",
        Command::Counit { .. } => "counit",
        Command::Nerve { .. } => "nerve",
        Command::Pi2gpd { .. } => "pi2gpd",
        Command::Whitehead { .. } => "whitehead",
        Command::Msweq { .. } => "msweq",
        Command::Msfib { .. } => "msfib",
        Command::SiteValidate { .. } => "site-validate",
        Command::Comma { .. } => "comma",
        Command::Yu { .. } => "yu",
        Command::Sheafify { .. } => "sheafify",
        Command::Hsheaf { .. } => "hsheaf",
        Command::Weq { .. } => "weq",
        Command::Geninc { .. } => "geninc",
        Command::Lift { .. } => "lift",
        Command::Bounds { .. } => "bounds",
    }
}

fn summary(report: &Value) -> String {
    let mut out = String::new();
    let render = |v: &Value| match v {
        Value::Array(a) => format!("[{} items]", a.len()),
        Value::Object(m) => format!("{{{} entries}}", m.len()),
        other => other.to_string(),
    };
    if let Some(m) = report.as_object() {
        for key in ["command", "status", "error"] {
            if let Some(v) = m.get(key) {
                out.push_str(&format!("{key}: {}\n", render(v)));
            }
        }
        if let Some(Value::Object(r)) = m.get("result") {
            for (k, v) in r {
                out.push_str(&format!("  {k}: {}\n", render(v)));
            }
        }
    }
    out
}

/// Runs one invocation and returns its exit code and report text.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let budget = cli.budget.unwrap_or_else(|| {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_SEARCH_BUDGET)
    });
    let name = command_name(&cli.command);
    let meta = json!({ "conventions": CONVENTIONS, "budget": budget });
    let (code, report) = match cli.execute() {
        Ok((result, status)) => (
            status.code(),
            json!({ "command": name, "meta": meta, "status": status, "result": result }),
        ),
        Err(e) => {
            let (code, status) = match e {
                Error::BudgetExceeded { .. } => (3, "budget-exceeded"),
                _ => (2, "input-error"),
            };
            (
                code,
                json!({ "command": name, "meta": meta, "status": status, "error": e.to_string() }),
            )
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
        Format::Text => summary(&report),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => (code, String::new()),
            Err(e) => (2, format!("cannot write {}: {e}\n", path.display())),
        },
        None => (code, text),
    }
}
