//! Verification suites: cases declared in TOML, run with per-case time budgets,
//! reported in declaration order.

mod checks;
pub mod properties;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{mpsc, Arc, Mutex};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use checks::{braid_h1_check, depth_check, kunneth_betti, CheckOutcome};

use crate::complex::{ComplexFile, SimplicialComplex};
use crate::corpus;
use crate::error::{Error, Result};
use crate::invariants::{
    abelianization, homology, pi1_presentation, CellComplex, HomologyResult, SkeletonView,
};
use crate::local::local_homotopical_dimension;
use crate::product::product_complex;
use crate::quotient::{braid_cells, braid_model, OrbitCellComplex};
use crate::retract::{delta_model, simplex_interval_model};

/// Default per-case ceiling in seconds.
pub const DEFAULT_BUDGET: f64 = 600.0;
pub const DEFAULT_STRETCH_BUDGET: f64 = 3600.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Builder {
    Complex,
    Product,
    DeltaModel,
    BraidModel,
    BraidCells,
    SimplexInterval,
    LocalDimension,
    BraidH1,
    Depth,
    Property,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub f_vector: Option<Vec<usize>>,
    pub components: Option<usize>,
    /// Every component has vanishing reduced homology.
    pub components_acyclic: Option<bool>,
    pub betti: Option<Vec<usize>>,
    pub reduced_betti: Option<Vec<usize>>,
    pub torsion: Option<Vec<Vec<u64>>>,
    /// Reduced homology vanishes in every degree up to this one.
    pub acyclic_through: Option<usize>,
    pub abelian_rank: Option<usize>,
    pub abelian_torsion: Option<Vec<u64>>,
    pub euler: Option<i64>,
    pub local_dimension: Option<i64>,
    /// For checks and properties.
    pub pass: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationCase {
    pub name: String,
    pub builder: Builder,
    /// Builtin complex name.
    pub complex: Option<String>,
    /// Complex file, used when `complex` is absent.
    pub file: Option<PathBuf>,
    pub property: Option<String>,
    #[serde(default)]
    pub n: usize,
    #[serde(default)]
    pub d: usize,
    pub max_dim: Option<usize>,
    /// Seconds.
    pub budget: Option<f64>,
    pub provenance: String,
    #[serde(default)]
    pub expect: Expectation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteFile {
    pub suite: String,
    pub budget: Option<f64>,
    #[serde(rename = "case", default)]
    pub cases: Vec<VerificationCase>,
}

impl SuiteFile {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn builtin(name: &str) -> Result<Self> {
        let text = match name {
            "core" => include_str!("../../suites/core.toml"),
            "paper" => include_str!("../../suites/paper.toml"),
            "stretch" => include_str!("../../suites/stretch.toml"),
            _ => return Err(Error::Parameter(format!("unknown suite {name:?}"))),
        };
        Self::from_toml(text)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub name: String,
    pub status: Status,
    pub seconds: f64,
    pub provenance: String,
    pub details: Vec<String>,
    pub observed: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    /// No failures and no errors; skipped cases do not count against the suite.
    pub fn passed(&self) -> bool {
        self.cases
            .iter()
            .all(|c| matches!(c.status, Status::Pass | Status::Skipped))
    }

    pub fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn table(&self) -> String {
        let width = self
            .cases
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let mut out = format!("{:<width$}  {:<7}  {:>9}\n", "case", "status", "seconds");
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
                Status::Error => "ERROR",
            };
            out.push_str(&format!(
                "{:<width$}  {:<7}  {:>9.2}\n",
                c.name, status, c.seconds
            ));
            if matches!(c.status, Status::Fail | Status::Error | Status::Skipped) {
                for d in &c.details {
                    out.push_str(&format!("{:width$}    {d}\n", ""));
                }
                if c.status != Status::Skipped {
                    out.push_str(&format!(
                        "{:width$}    expected per: {}\n",
                        "", c.provenance
                    ));
                }
            }
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed, {} errors, {} skipped\n",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error),
            self.count(Status::Skipped)
        ));
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub jobs: usize,
    /// Caps every case's budget, in seconds.
    pub budget: Option<f64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            jobs: 1,
            budget: None,
        }
    }
}

/// Runs every case, `jobs` at a time. A case still running when its budget
/// expires is reported as skipped and left to finish unobserved.
pub fn run_suite(suite: &SuiteFile, opts: RunOptions) -> SuiteReport {
    let default = if suite.suite == "stretch" {
        DEFAULT_STRETCH_BUDGET
    } else {
        DEFAULT_BUDGET
    };
    let cases: Arc<Vec<VerificationCase>> = Arc::new(suite.cases.clone());
    let next = Arc::new(AtomicUsize::new(0));
    let slots: Arc<Mutex<Vec<Option<CaseReport>>>> = Arc::new(Mutex::new(vec![None; cases.len()]));
    let workers: Vec<_> = (0..opts.jobs.max(1))
        .map(|_| {
            let (cases, next, slots) = (Arc::clone(&cases), Arc::clone(&next), Arc::clone(&slots));
            let file_budget = suite.budget;
            std::thread::spawn(move || loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= cases.len() {
                    break;
                }
                let mut budget = cases[i].budget.or(file_budget).unwrap_or(default);
                if let Some(cap) = opts.budget {
                    budget = budget.min(cap);
                }
                let report = run_with_budget(cases[i].clone(), budget);
                slots.lock().expect("report slots")[i] = Some(report);
            })
        })
        .collect();
    for w in workers {
        w.join().expect("suite worker panicked");
    }
    let slots = std::mem::take(&mut *slots.lock().expect("report slots"));
    SuiteReport {
        suite: suite.suite.clone(),
        cases: slots
            .into_iter()
            .map(|r| r.expect("every case ran"))
            .collect(),
    }
}

fn run_with_budget(case: VerificationCase, budget: f64) -> CaseReport {
    let (tx, rx) = mpsc::channel();
    let start = Instant::now();
    let name = case.name.clone();
    let provenance = case.provenance.clone();
    std::thread::spawn(move || {
        let outcome = std::panic::catch_unwind(|| run_case(&case));
        let _ = tx.send(outcome);
    });
    let (status, details, observed) =
        match rx.recv_timeout(Duration::from_secs_f64(budget.max(0.0))) {
            Ok(Ok(Ok((details, observed)))) => (
                if details.is_empty() {
                    Status::Pass
                } else {
                    Status::Fail
                },
                details,
                observed,
            ),
            Ok(Ok(Err(e))) => (Status::Error, vec![e.to_string()], BTreeMap::new()),
            Ok(Err(_)) => (Status::Error, vec!["panicked".into()], BTreeMap::new()),
            Err(_) => (
                Status::Skipped,
                vec![format!("budget of {budget} s exceeded")],
                BTreeMap::new(),
            ),
        };
    CaseReport {
        name,
        status,
        seconds: start.elapsed().as_secs_f64(),
        provenance,
        details,
        observed,
    }
}

fn load_complex(case: &VerificationCase) -> Result<SimplicialComplex> {
    match (&case.complex, &case.file) {
        (Some(name), _) => corpus::by_name(name),
        (None, Some(path)) => ComplexFile::read(path)?.to_complex(),
        (None, None) => Err(Error::Parameter(format!(
            "case {} names no complex",
            case.name
        ))),
    }
}

enum Built {
    Simplicial(SimplicialComplex, Option<usize>),
    Cells(OrbitCellComplex),
    Check(CheckOutcome),
    Local(i64, Option<i64>),
    Property(Vec<String>),
}

type Observed = BTreeMap<String, Value>;

/// Builds the case's object and compares every stated expectation exactly.
pub fn run_case(case: &VerificationCase) -> Result<(Vec<String>, Observed)> {
    let top = |x: &SimplicialComplex| x.dimension().max(0) as usize * case.n.max(1);
    let built = match case.builder {
        Builder::Complex => Built::Simplicial(load_complex(case)?, None),
        Builder::Product => Built::Simplicial(
            product_complex(&load_complex(case)?, case.n)?
                .complex()
                .clone(),
            None,
        ),
        Builder::DeltaModel => {
            let x = load_complex(case)?;
            let m = delta_model(&x, case.n, case.d, case.max_dim.unwrap_or_else(|| top(&x)))?;
            Built::Simplicial(m.w, m.skeleton_bound)
        }
        Builder::BraidModel => {
            let x = load_complex(case)?;
            let q = braid_model(&x, case.n, case.d, case.max_dim.unwrap_or_else(|| top(&x)))?;
            Built::Simplicial(q.quotient, q.skeleton_bound)
        }
        Builder::BraidCells => {
            let x = load_complex(case)?;
            Built::Cells(braid_cells(
                &x,
                case.n,
                case.d,
                case.max_dim.unwrap_or_else(|| top(&x)),
            )?)
        }
        Builder::SimplexInterval => {
            let m = simplex_interval_model(case.n, case.d)?;
            Built::Simplicial(m.w, None)
        }
        Builder::LocalDimension => {
            let ld = local_homotopical_dimension(&load_complex(case)?)?;
            Built::Local(ld.r, ld.combinatorial())
        }
        Builder::BraidH1 => Built::Check(braid_h1_check(
            &load_complex(case)?,
            case.n,
            case.d,
            case.max_dim.unwrap_or(2),
        )?),
        Builder::Depth => Built::Check(depth_check(
            &load_complex(case)?,
            case.n,
            case.d,
            case.max_dim.unwrap_or(1),
        )?),
        Builder::Property => {
            let name = case
                .property
                .as_deref()
                .ok_or_else(|| Error::Parameter("property case needs a name".into()))?;
            Built::Property(properties::run(name)?)
        }
    };
    let e = &case.expect;
    let mut r = Recorder::default();
    match &built {
        Built::Simplicial(k, bound) => {
            let view = SkeletonView {
                complex: k,
                bound: *bound,
            };
            if let Some(want) = &e.f_vector {
                r.compare("f_vector", json!(k.f_vector()), json!(want));
            }
            if let Some(want) = e.components {
                r.compare("components", json!(k.component_count()), json!(want));
            }
            if let Some(want) = e.components_acyclic {
                r.compare(
                    "components_acyclic",
                    json!(components_acyclic(k, *bound)?),
                    json!(want),
                );
            }
            if let Some(h) = homology_for(&view, e)? {
                compare_homology(&h, e, &mut r);
            }
            if e.abelian_rank.is_some() || e.abelian_torsion.is_some() {
                let ab = abelianization(&pi1_presentation(k, 0)?);
                r.maybe(
                    "abelian_rank",
                    json!(ab.rank),
                    e.abelian_rank.map(|v| json!(v)),
                );
                r.maybe(
                    "abelian_torsion",
                    json!(ab.torsion),
                    e.abelian_torsion.as_ref().map(|v| json!(v)),
                );
            }
            if let Some(want) = e.euler {
                if bound.is_some() {
                    return Err(Error::SkeletonBounded);
                }
                r.compare("euler", json!(k.euler_characteristic()), json!(want));
            }
        }
        Built::Cells(c) => {
            if let Some(h) = homology_for(c, e)? {
                compare_homology(&h, e, &mut r);
            }
            if let Some(want) = e.euler {
                r.compare("euler", json!(c.euler_characteristic()), json!(want));
            }
        }
        Built::Check(outcome) => {
            r.seen.insert("degrees".into(), json!(outcome.degrees));
            r.seen.insert("details".into(), json!(outcome.details));
            r.compare("pass", json!(outcome.pass), json!(e.pass.unwrap_or(true)));
        }
        Built::Local(level, comb) => {
            r.maybe(
                "local_dimension",
                json!(level),
                e.local_dimension.map(|v| json!(v)),
            );
            r.seen.insert("combinatorial".into(), json!(comb));
            if let Some(c) = comb {
                if c != level {
                    r.bad.push(format!(
                        "link value {level} disagrees with chamber criterion {c}"
                    ));
                }
            }
        }
        Built::Property(violations) => {
            r.seen.insert("violations".into(), json!(violations));
            r.compare(
                "pass",
                json!(violations.is_empty()),
                json!(e.pass.unwrap_or(true)),
            );
        }
    }
    Ok((r.bad, r.seen))
}

#[derive(Default)]
struct Recorder {
    bad: Vec<String>,
    seen: Observed,
}

impl Recorder {
    fn compare(&mut self, key: &str, got: Value, want: Value) {
        self.maybe(key, got, Some(want));
    }

    fn maybe(&mut self, key: &str, got: Value, want: Option<Value>) {
        if let Some(w) = want {
            if got != w {
                self.bad.push(format!("{key}: got {got}, expected {w}"));
            }
        }
        self.seen.insert(key.to_string(), got);
    }
}

fn homology_for<C: CellComplex + ?Sized>(c: &C, e: &Expectation) -> Result<Option<HomologyResult>> {
    let lens = [
        e.betti.as_ref().map(Vec::len),
        e.reduced_betti.as_ref().map(Vec::len),
        e.torsion.as_ref().map(Vec::len),
        e.acyclic_through.map(|k| k + 1),
    ];
    let Some(len) = lens.iter().flatten().max().copied() else {
        return Ok(None);
    };
    Ok(Some(homology(c, len.saturating_sub(1), false)?))
}

fn compare_homology(h: &HomologyResult, e: &Expectation, r: &mut Recorder) {
    let betti = h.betti_numbers();
    let mut reduced = betti.clone();
    if let Some(b0) = reduced.first_mut() {
        *b0 = b0.saturating_sub(1);
    }
    let torsion: Vec<&[u64]> = (0..betti.len()).map(|k| h.torsion(k)).collect();
    if let Some(want) = &e.betti {
        r.compare("betti", json!(betti[..want.len()]), json!(want));
    }
    if let Some(want) = &e.reduced_betti {
        r.compare("reduced_betti", json!(reduced[..want.len()]), json!(want));
    }
    if let Some(want) = &e.torsion {
        r.compare("torsion", json!(torsion[..want.len()]), json!(want));
    }
    if let Some(k) = e.acyclic_through {
        let got = (0..=k).all(|i| reduced[i] == 0 && torsion[i].is_empty());
        r.compare("acyclic_through", json!(got), json!(true));
    }
}

fn components_acyclic(k: &SimplicialComplex, bound: Option<usize>) -> Result<bool> {
    for comp in k.connected_components() {
        let c = comp.to_complex("component");
        let top = match bound {
            Some(b) => b.saturating_sub(1),
            None => c.dimension().max(0) as usize,
        };
        let view = SkeletonView { complex: &c, bound };
        if !homology(&view, top, true)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}
