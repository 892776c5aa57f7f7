//! Exhaustive and seeded generation of structures over small prime fields.
//!
//! Three targets are supported:
//!
//! - [`Target::RbFamily`]: operator families `(P_w)` with weights `(l_w)` on
//!   the base's single product satisfying
//!   `P_a(x) P_b(y) = P_a(x P_b(y)) + P_b(P_a(x) y) + l_b P_a(xy)`.
//! - [`Target::Endomorphism`]: maps `p` with `p(x o y) = p(x) o p(y)` for every
//!   product of the base.
//! - [`Target::CommutingTwist`]: endomorphisms that also commute with every
//!   operator of the base.
//!
//! Found twists are emitted as the twisted structure `(A, p o m, p)`.

mod catalog;
mod kernel;

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::axioms::{check_side_conditions_for, check_structure, Condition};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Scalar};
use crate::structures::{AlgebraDoc, BilinearFamily, CheckReport, Kind, OmegaSet, OperatorFamily, Role};

pub use catalog::{catalog, catalog_fixture, catalog_names};
#[cfg(test)]
use catalog::p_nil;

use kernel::{matrix_from_map, matrix_to_map, residue, Kernel, Tensor};

/// Default cap on the number of raw candidates.
pub const DEFAULT_BUDGET: u64 = 1 << 24;
/// Default number of draws [`seeded_sample`] makes before giving up.
pub const DEFAULT_SAMPLE_ATTEMPTS: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    RbFamily,
    Endomorphism,
    CommutingTwist,
}

impl Target {
    pub fn as_str(&self) -> &'static str {
        match self {
            Target::RbFamily => "rb-family",
            Target::Endomorphism => "endomorphism",
            Target::CommutingTwist => "commuting-twist",
        }
    }
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rb-family" | "rb" => Ok(Target::RbFamily),
            "endomorphism" => Ok(Target::Endomorphism),
            "commuting-twist" => Ok(Target::CommutingTwist),
            other => Err(Error::UnsupportedVariant(format!("search target {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub base: AlgebraDoc,
    /// Number of operator labels; only used by [`Target::RbFamily`].
    pub omega_size: usize,
    /// One weight per label; only used by [`Target::RbFamily`].
    pub weights: Vec<Scalar>,
    pub target: Target,
    pub limit: Option<usize>,
    pub budget: u64,
    pub sample_attempts: u64,
}

impl SearchSpec {
    /// One label of weight zero, no limit, default budget.
    pub fn new(base: AlgebraDoc, target: Target) -> Self {
        let zero = base.field().zero();
        SearchSpec {
            base,
            omega_size: 1,
            weights: vec![zero],
            target,
            limit: None,
            budget: DEFAULT_BUDGET,
            sample_attempts: DEFAULT_SAMPLE_ATTEMPTS,
        }
    }

    /// `n` labels, all of weight `w`.
    pub fn with_uniform_weight(mut self, n: usize, w: Scalar) -> Self {
        self.omega_size = n;
        self.weights = vec![w; n];
        self
    }

    pub fn with_weights(mut self, weights: Vec<Scalar>) -> Self {
        self.omega_size = weights.len();
        self.weights = weights;
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    fn labels(&self) -> usize {
        match self.target {
            Target::RbFamily => self.omega_size,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchResult {
    pub docs: Vec<AlgebraDoc>,
    /// Set when more results existed than the limit allowed.
    pub truncated: bool,
}

/// Worker pool sized by `HALG_THREADS` when set, hardware parallelism otherwise.
pub fn thread_pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("HALG_THREADS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
    })
}

/// A validated search problem in word-sized arithmetic.
struct Problem<'a> {
    spec: &'a SearchSpec,
    kernel: Kernel,
    /// The product the Rota-Baxter identity is taken over.
    tensors: Vec<Tensor>,
    weights: Vec<u32>,
    operators: Vec<Vec<u32>>,
    space: u64,
}

impl<'a> Problem<'a> {
    fn new(spec: &'a SearchSpec) -> Result<Self> {
        let base = &spec.base;
        let field = base.field();
        if !field.is_finite() {
            return Err(Error::NonFiniteField);
        }
        let p = field.characteristic();
        let d = base.dim();
        let labels = spec.labels();
        if labels == 0 {
            return Err(Error::shape("/omega", "search needs at least one label"));
        }
        let exponent = (d * d * labels) as u32;
        let candidates = BigUint::from(p).pow(exponent);
        if candidates > BigUint::from(spec.budget) {
            return Err(Error::BudgetExceeded {
                candidates: candidates.to_string(),
                budget: spec.budget,
            });
        }
        let space = BigUint::from(p).pow((d * d) as u32);
        let space = u64::try_from(space).expect("bounded by budget");

        let (tensors, weights, operators) = match spec.target {
            Target::RbFamily => {
                if spec.weights.len() != spec.omega_size {
                    return Err(Error::shape(
                        "/weights",
                        format!("expected {} weights, found {}", spec.omega_size, spec.weights.len()),
                    ));
                }
                if let Some(w) = spec.weights.iter().find(|w| !field.contains(w)) {
                    return Err(Error::FieldMismatch {
                        left: field.to_string(),
                        right: w.field().to_string(),
                    });
                }
                let m = rb_base_product(base)?;
                (vec![Tensor::from_map(m)], spec.weights.iter().map(residue).collect(), Vec::new())
            }
            Target::Endomorphism | Target::CommutingTwist => {
                if !base.has_identity_twist() {
                    return Err(Error::precondition("twist search needs a base with identity twist", None));
                }
                if spec.target == Target::Endomorphism && base.kind().is_rb() {
                    return Err(Error::precondition(
                        "a Rota-Baxter base is only twisted by maps commuting with its operators; use commuting-twist",
                        None,
                    ));
                }
                let report = check_structure(base);
                if !report.passed() {
                    return Err(Error::precondition("base does not satisfy its identities", Some(report)));
                }
                let tensors = base
                    .families()
                    .iter()
                    .flat_map(|f| f.maps.iter().map(Tensor::from_map))
                    .collect();
                let operators = match (spec.target, base.operators()) {
                    (Target::CommutingTwist, Some(ops)) => ops.ops.iter().map(matrix_from_map).collect(),
                    _ => Vec::new(),
                };
                (tensors, Vec::new(), operators)
            }
        };
        Ok(Problem {
            spec,
            kernel: Kernel::new(p, d),
            tensors,
            weights,
            operators,
            space,
        })
    }

    fn entries(&self) -> usize {
        self.kernel.d * self.kernel.d
    }

    /// Single-label screening: the diagonal Rota-Baxter equation or the twist conditions.
    fn accepts_single(&self, m: &[u32], label: usize) -> bool {
        match self.spec.target {
            Target::RbFamily => self.kernel.rota_baxter(&self.tensors[0], m, m, self.weights[label]),
            Target::Endomorphism | Target::CommutingTwist => {
                self.tensors.iter().all(|t| self.kernel.endomorphism(t, m))
                    && self.operators.iter().all(|q| self.kernel.commutes(m, q))
            }
        }
    }

    /// Cross conditions between a new label and every earlier one.
    fn accepts_cross(&self, chosen: &[&[u32]], m: &[u32]) -> bool {
        let b = chosen.len();
        let t = &self.tensors[0];
        chosen.iter().enumerate().all(|(a, pa)| {
            self.kernel.rota_baxter(t, pa, m, self.weights[b]) && self.kernel.rota_baxter(t, m, pa, self.weights[a])
        })
    }

    /// Every matrix passing single-label screening for `label`, in lexicographic order.
    fn single_solutions(&self, label: usize) -> Vec<Vec<u32>> {
        let chunk = 4096u64;
        let chunks = self.space.div_ceil(chunk);
        thread_pool().install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let start = c * chunk;
                    let end = (start + chunk).min(self.space);
                    let mut m = vec![0u32; self.entries()];
                    self.kernel.decode(start, &mut m);
                    let mut found = Vec::new();
                    for _ in start..end {
                        if self.accepts_single(&m, label) {
                            found.push(m.clone());
                        }
                        self.kernel.increment(&mut m);
                    }
                    found
                })
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        })
    }

    /// All solutions in lexicographic order, at most `cap` of them.
    fn solve(&self, cap: usize) -> Vec<Vec<Vec<u32>>> {
        let labels = self.spec.labels();
        let mut per_label: Vec<Vec<Vec<u32>>> = Vec::with_capacity(labels);
        for l in 0..labels {
            let same = (0..l).find(|&k| self.weights.get(k) == self.weights.get(l));
            let sols = match same {
                Some(k) => per_label[k].clone(),
                None => self.single_solutions(l),
            };
            per_label.push(sols);
        }
        let roots = &per_label[0];
        let per_root: Vec<Vec<Vec<Vec<u32>>>> = thread_pool().install(|| {
            roots
                .par_iter()
                .map(|root| {
                    let mut out = Vec::new();
                    let mut chosen: Vec<&[u32]> = vec![root.as_slice()];
                    self.extend(&per_label, &mut chosen, &mut out, cap);
                    out
                })
                .collect()
        });
        per_root.into_iter().flatten().take(cap).collect()
    }

    fn extend<'s>(
        &self,
        per_label: &'s [Vec<Vec<u32>>],
        chosen: &mut Vec<&'s [u32]>,
        out: &mut Vec<Vec<Vec<u32>>>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        let l = chosen.len();
        if l == per_label.len() {
            out.push(chosen.iter().map(|m| m.to_vec()).collect());
            return;
        }
        for m in &per_label[l] {
            if self.accepts_cross(chosen, m) {
                chosen.push(m);
                self.extend(per_label, chosen, out, cap);
                chosen.pop();
                if out.len() >= cap {
                    return;
                }
            }
        }
    }

    fn accepts(&self, mats: &[Vec<u32>]) -> bool {
        let mut chosen: Vec<&[u32]> = Vec::with_capacity(mats.len());
        for (l, m) in mats.iter().enumerate() {
            if !self.accepts_single(m, l) || !self.accepts_cross(&chosen, m) {
                return false;
            }
            chosen.push(m);
        }
        true
    }

    fn to_doc(&self, mats: &[Vec<u32>]) -> Result<AlgebraDoc> {
        let base = &self.spec.base;
        let field = base.field();
        let d = base.dim();
        let maps: Vec<LinearMap> = mats.iter().map(|m| matrix_to_map(field, d, m)).collect();
        match self.spec.target {
            Target::RbFamily => {
                let m = rb_base_product(base)?.clone();
                let role = if base.kind().is_lie() { Role::Bracket } else { Role::Dot };
                let kind = rb_output_kind(base.kind());
                let twist = if kind.is_plain() { None } else { base.twist().cloned() };
                AlgebraDoc::new(
                    field,
                    d,
                    OmegaSet::alphabetic(self.spec.omega_size),
                    kind,
                    vec![BilinearFamily::single(role, m)],
                    Some(OperatorFamily::new(maps, self.spec.weights.clone())),
                    twist,
                )
            }
            Target::Endomorphism | Target::CommutingTwist => {
                let p = maps.into_iter().next().expect("one map");
                let families = base
                    .families()
                    .iter()
                    .map(|f| BilinearFamily::new(f.role, f.maps.iter().map(|m| m.compose_left(&p)).collect()))
                    .collect();
                AlgebraDoc::new(
                    field,
                    d,
                    base.omega().clone(),
                    base.kind().hom_counterpart(),
                    families,
                    base.operators().cloned(),
                    Some(p),
                )
            }
        }
    }

    /// Re-checks a candidate with the exact checker.
    fn verified(&self, mats: &[Vec<u32>]) -> Result<AlgebraDoc> {
        let doc = self.to_doc(mats)?;
        let mut report = check_structure(&doc);
        if self.spec.target != Target::RbFamily {
            let conds: &[Condition] = match self.spec.target {
                Target::CommutingTwist => &[Condition::Endomorphism, Condition::Commutes],
                _ => &[Condition::Endomorphism],
            };
            report = report.merge(check_side_conditions_for(&self.spec.base, doc.twist_map().as_ref(), conds));
        }
        if report.passed() {
            Ok(doc)
        } else {
            Err(Error::TheoremCheckFailed {
                construction: "search",
                report,
            })
        }
    }
}

fn rb_base_product(base: &AlgebraDoc) -> Result<&crate::linalg::BilinearMap> {
    if let Some(m) = base.rb_product() {
        return Ok(m);
    }
    if (base.kind().is_assoc() || base.kind().is_lie()) && base.omega().len() == 1 {
        return Ok(&base.families()[0].maps[0]);
    }
    Err(Error::precondition(
        format!(
            "rb-family search needs a single associative or Lie product, found {} with {} labels",
            base.kind(),
            base.omega().len()
        ),
        None,
    ))
}

fn rb_output_kind(base: Kind) -> Kind {
    match base {
        Kind::PlainAssocMatchingRb | Kind::PlainLieMatchingRb | Kind::HomAssocMatchingRb | Kind::MatchingHomLieRb => base,
        k if k.is_lie() => Kind::MatchingHomLieRb,
        _ => Kind::HomAssocMatchingRb,
    }
}

/// The base product must satisfy its own identity; the zero family isolates it.
fn require_base(problem: &Problem<'_>) -> Result<()> {
    if problem.spec.target != Target::RbFamily {
        return Ok(());
    }
    let zero = vec![vec![0u32; problem.entries()]; problem.spec.omega_size];
    let doc = problem.to_doc(&zero)?;
    let report = check_structure(&doc);
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition("base product does not satisfy its identity", Some(report)))
    }
}

/// Every structure meeting the target, in lexicographic order of the
/// serialized matrices (label `a` most significant).
pub fn enumerate(spec: &SearchSpec) -> Result<SearchResult> {
    let problem = Problem::new(spec)?;
    require_base(&problem)?;
    let cap = spec.limit.map_or(usize::MAX, |l| l.saturating_add(1));
    let mut raw = problem.solve(cap);
    let truncated = spec.limit.is_some_and(|l| raw.len() > l);
    if let Some(l) = spec.limit {
        raw.truncate(l);
    }
    let docs = thread_pool().install(|| raw.par_iter().map(|m| problem.verified(m)).collect::<Result<Vec<_>>>())?;
    Ok(SearchResult { docs, truncated })
}

/// Up to `count` distinct structures found by uniform rejection sampling,
/// in order of discovery.
pub fn seeded_sample(spec: &SearchSpec, seed: u64, count: usize) -> Result<Vec<AlgebraDoc>> {
    let problem = Problem::new(spec)?;
    if count == 0 {
        return Ok(Vec::new());
    }
    require_base(&problem)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = problem.kernel.p as u32;
    let labels = spec.labels();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..spec.sample_attempts {
        let mats: Vec<Vec<u32>> = (0..labels)
            .map(|_| (0..problem.entries()).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        if problem.accepts(&mats) && seen.insert(mats.clone()) {
            out.push(problem.verified(&mats)?);
            if out.len() == count {
                break;
            }
        }
    }
    Ok(out)
}

/// Candidates `enumerate` rejects, drawn at random; for soundness spot checks.
pub fn sample_rejected(spec: &SearchSpec, seed: u64, count: usize) -> Result<Vec<AlgebraDoc>> {
    let problem = Problem::new(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = problem.kernel.p as u32;
    let mut out = Vec::new();
    for _ in 0..spec.sample_attempts {
        if out.len() == count {
            break;
        }
        let mats: Vec<Vec<u32>> = (0..spec.labels())
            .map(|_| (0..problem.entries()).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        if !problem.accepts(&mats) {
            out.push(problem.to_doc(&mats)?);
        }
    }
    Ok(out)
}

/// The exact verdict for a candidate of the given target, by the checker alone.
pub fn target_report(spec: &SearchSpec, doc: &AlgebraDoc) -> CheckReport {
    match spec.target {
        Target::RbFamily => check_structure(doc),
        Target::Endomorphism => check_side_conditions_for(&spec.base, doc.twist_map().as_ref(), &[Condition::Endomorphism]),
        Target::CommutingTwist => check_side_conditions_for(
            &spec.base,
            doc.twist_map().as_ref(),
            &[Condition::Endomorphism, Condition::Commutes],
        ),
    }
}
