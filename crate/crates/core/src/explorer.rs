//! Exhaustive scans over small labeled digraphs.
//!
//! Digraphs of a given order are numbered by arc bitmask: bit `k` stands for
//! the `k`-th ordered pair `(i, j)` in row-major order (pairs with `i == j`
//! only when loops are included). The optional isomorphism filter keeps a
//! digraph only when its bitmask is the least over all vertex permutations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::checkers;
use crate::constructions::{layered_grundy, layered_semi_grundy};
use crate::digraph::{Digraph, ValueMap, VertexSet};
use crate::error::{Error, Result};
use crate::io::DigraphDocument;
use crate::solvers::{
    enumerate_grundy, find_grundy, find_kernel, find_semi_grundy, find_semi_kernel,
    has_hereditary_semi_kernel, is_kernel_perfect, SolveResult,
};

/// Largest order the enumerator accepts.
pub const MAX_ORDER: usize = 7;
/// Largest order accepted by `verify_theorem`.
pub const MAX_VERIFY_ORDER: usize = 5;

const CHUNK: u64 = 1 << 12;

/// Ordered pairs that may carry an arc, in bit order.
pub fn arc_slots(order: usize, include_loops: bool) -> Vec<(usize, usize)> {
    (0..order)
        .flat_map(|i| (0..order).map(move |j| (i, j)))
        .filter(|&(i, j)| include_loops || i != j)
        .collect()
}

fn order_guard(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::TooLarge { what: "digraph enumeration", order, limit: MAX_ORDER });
    }
    Ok(())
}

/// Arc-bitmask codec for one order.
#[derive(Clone, Debug)]
pub struct Encoding {
    order: usize,
    slots: Vec<(usize, usize)>,
}

impl Encoding {
    pub fn new(order: usize, include_loops: bool) -> Result<Self> {
        order_guard(order)?;
        Ok(Encoding { order, slots: arc_slots(order, include_loops) })
    }

    /// Number of labeled digraphs: `2^slots`.
    pub fn count(&self) -> u64 {
        1u64 << self.slots.len()
    }

    pub fn decode(&self, mask: u64) -> Digraph {
        let arcs = self.slots.iter().enumerate().filter(|&(k, _)| mask >> k & 1 == 1).map(|(_, &a)| a);
        Digraph::new(self.order, arcs).expect("slots are in range")
    }

    pub fn encode(&self, d: &Digraph) -> Option<u64> {
        if d.order() != self.order {
            return None;
        }
        d.arcs().iter().try_fold(0u64, |m, a| Some(m | 1 << self.slots.iter().position(|s| s == a)?))
    }
}

/// Orbit-minimality test under all vertex permutations.
pub struct CanonicalFilter {
    /// For every permutation, the image slot of each slot.
    slot_maps: Vec<Vec<u8>>,
}

impl CanonicalFilter {
    pub fn new(enc: &Encoding) -> Self {
        let index = |a: (usize, usize)| enc.slots.iter().position(|&s| s == a).expect("slot") as u8;
        let slot_maps = permutations(enc.order)
            .into_iter()
            .map(|p| enc.slots.iter().map(|&(i, j)| index((p[i], p[j]))).collect())
            .collect();
        CanonicalFilter { slot_maps }
    }

    pub fn is_canonical(&self, mask: u64) -> bool {
        self.slot_maps.iter().all(|map| {
            let mut image = 0u64;
            let mut m = mask;
            while m != 0 {
                let k = m.trailing_zeros() as usize;
                image |= 1 << map[k];
                m &= m - 1;
            }
            image >= mask
        })
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every labeled digraph on `order` vertices in increasing bitmask order,
/// optionally keeping only orbit-minimal representatives.
pub fn enumerate_digraphs(
    order: usize,
    include_loops: bool,
    canonical_only: bool,
) -> Result<impl Iterator<Item = Digraph>> {
    let enc = Encoding::new(order, include_loops)?;
    let filter = canonical_only.then(|| CanonicalFilter::new(&enc));
    Ok((0..enc.count())
        .filter(move |&m| filter.as_ref().is_none_or(|f| f.is_canonical(m)))
        .map(move |m| enc.decode(m)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// Has a semi-kernel but no semi-Grundy function.
    SemikernelNotSemigrundy,
    /// Has a semi-Grundy function but no Grundy function.
    SemigrundyNotGrundy,
    /// Has a semi-Grundy function but no kernel.
    SemigrundyNotKernel,
    /// Has a semi-Grundy function while some induced subdigraph has none.
    SemigrundyNotHereditary,
    /// Two Grundy functions whose maxima differ by at least the given amount.
    GrundyGapAtLeast(usize),
}

impl Predicate {
    pub fn needs_semi_grundy_search(self) -> bool {
        !matches!(self, Predicate::GrundyGapAtLeast(_))
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::SemikernelNotSemigrundy => f.write_str("semikernel-not-semigrundy"),
            Predicate::SemigrundyNotGrundy => f.write_str("semigrundy-not-grundy"),
            Predicate::SemigrundyNotKernel => f.write_str("semigrundy-not-kernel"),
            Predicate::SemigrundyNotHereditary => f.write_str("semigrundy-not-hereditary"),
            Predicate::GrundyGapAtLeast(k) => write!(f, "grundy-gap:{k}"),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p = match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "semikernel-not-semigrundy" => Predicate::SemikernelNotSemigrundy,
            "semigrundy-not-grundy" => Predicate::SemigrundyNotGrundy,
            "semigrundy-not-kernel" => Predicate::SemigrundyNotKernel,
            "semigrundy-not-hereditary" => Predicate::SemigrundyNotHereditary,
            other => {
                let k = other
                    .strip_prefix("grundy-gap:")
                    .or_else(|| other.strip_prefix("grundy-gap-at-least:"))
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::Input(format!("unknown predicate {s:?}")))?;
                Predicate::GrundyGapAtLeast(k)
            }
        };
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub predicate: Predicate,
    pub max_order: usize,
    pub include_loops: bool,
    pub workers: usize,
    /// Skip digraphs that are not orbit-minimal. The first witness is the
    /// same either way; only the scan count changes.
    pub canonical_only: bool,
}

impl SearchSpec {
    pub fn new(predicate: Predicate, max_order: usize) -> Self {
        SearchSpec { predicate, max_order, include_loops: false, workers: 1, canonical_only: false }
    }

    pub fn validate(&self) -> Result<()> {
        order_guard(self.max_order)?;
        if self.workers == 0 {
            return Err(Error::Input("at least one worker is required".into()));
        }
        if self.predicate == Predicate::GrundyGapAtLeast(0) {
            return Err(Error::Input("a Grundy gap threshold must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Kernel,
    Grundy,
    SemiGrundy,
}

/// Machine-checkable evidence attached to a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    SemiKernel { set: Vec<usize> },
    SemiGrundy { function: Vec<usize> },
    GrundyPair { high: Vec<usize>, low: Vec<usize> },
    /// Exhaustive search found no object with `property` on the digraph, or
    /// on the subdigraph induced by `subset` when present.
    Absence {
        property: Property,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subset: Option<Vec<usize>>,
        solver: String,
        nodes_explored: u64,
    },
}

fn absence(property: Property, subset: Option<Vec<usize>>, r: &SolveResult) -> Certificate {
    let solver = match property {
        Property::Kernel => "find_kernel",
        Property::Grundy => "find_grundy",
        Property::SemiGrundy => "find_semi_grundy",
    };
    Certificate::Absence { property, subset, solver: solver.into(), nodes_explored: r.nodes_explored }
}

fn semi_grundy_cert(r: &SolveResult) -> Certificate {
    Certificate::SemiGrundy { function: r.witness_map().expect("found").into_inner() }
}

/// Certificates proving `predicate` on `d`, or `None` when it does not hold.
pub fn evaluate(predicate: Predicate, d: &Digraph) -> Result<Option<Vec<Certificate>>> {
    let certs = match predicate {
        Predicate::SemikernelNotSemigrundy => {
            let sk = find_semi_kernel(d)?;
            if !sk.found {
                return Ok(None);
            }
            let sg = find_semi_grundy(d)?;
            if sg.found {
                return Ok(None);
            }
            let set = sk.witness_set(d.order()).expect("found").to_vec();
            vec![Certificate::SemiKernel { set }, absence(Property::SemiGrundy, None, &sg)]
        }
        Predicate::SemigrundyNotGrundy => {
            let g = find_grundy(d)?;
            if g.found {
                return Ok(None);
            }
            let sg = find_semi_grundy(d)?;
            if !sg.found {
                return Ok(None);
            }
            vec![semi_grundy_cert(&sg), absence(Property::Grundy, None, &g)]
        }
        Predicate::SemigrundyNotKernel => {
            let k = find_kernel(d)?;
            if k.found {
                return Ok(None);
            }
            let sg = find_semi_grundy(d)?;
            if !sg.found {
                return Ok(None);
            }
            vec![semi_grundy_cert(&sg), absence(Property::Kernel, None, &k)]
        }
        Predicate::SemigrundyNotHereditary => {
            let sg = find_semi_grundy(d)?;
            if !sg.found {
                return Ok(None);
            }
            let Some((subset, missing)) = least_subset_without_semi_grundy(d)? else {
                return Ok(None);
            };
            vec![semi_grundy_cert(&sg), absence(Property::SemiGrundy, Some(subset), &missing)]
        }
        Predicate::GrundyGapAtLeast(k) => {
            let all = enumerate_grundy(d)?;
            let high = all.iter().max_by_key(|g| (g.max_value(), std::cmp::Reverse(*g)));
            let low = all.iter().min_by_key(|g| (g.max_value(), *g));
            match (high, low) {
                (Some(h), Some(l)) if h.max_value().unwrap_or(0) >= l.max_value().unwrap_or(0) + k => {
                    vec![Certificate::GrundyPair { high: h.values().to_vec(), low: l.values().to_vec() }]
                }
                _ => return Ok(None),
            }
        }
    };
    Ok(Some(certs))
}

/// Least nonempty vertex subset, by (cardinality, bitmask), whose induced
/// subdigraph has no semi-Grundy function.
fn least_subset_without_semi_grundy(d: &Digraph) -> Result<Option<(Vec<usize>, SolveResult)>> {
    let n = d.order();
    let mut subsets: Vec<u64> = (1..1u64 << n).collect();
    subsets.sort_by_key(|m| (m.count_ones(), *m));
    for m in subsets {
        let set = VertexSet::from_mask(n, m);
        let (sub, _) = d.induced_subdigraph(&set);
        let r = find_semi_grundy(&sub)?;
        if !r.found {
            return Ok(Some((set.to_vec(), r)));
        }
    }
    Ok(None)
}

/// Re-validates every certificate through the checkers and, for absence
/// tokens, by re-running the exhaustive solver.
pub fn verify_certificates(predicate: Predicate, d: &Digraph, certs: &[Certificate]) -> Result<bool> {
    let mut kinds = Vec::new();
    for c in certs {
        let ok = match c {
            Certificate::SemiKernel { set } => {
                kinds.push("sk");
                VertexSet::from_indices(d.order(), set.iter().copied())
                    .is_ok_and(|s| checkers::is_semi_kernel(d, &s))
            }
            Certificate::SemiGrundy { function } => {
                kinds.push("sg");
                checkers::is_semi_grundy(d, &ValueMap::new(function.clone()))
            }
            Certificate::GrundyPair { high, low } => {
                kinds.push("pair");
                let (h, l) = (ValueMap::new(high.clone()), ValueMap::new(low.clone()));
                let gap = match predicate {
                    Predicate::GrundyGapAtLeast(k) => k,
                    _ => return Ok(false),
                };
                checkers::is_grundy(d, &h)
                    && checkers::is_grundy(d, &l)
                    && h.max_value().unwrap_or(0) >= l.max_value().unwrap_or(0) + gap
            }
            Certificate::Absence { property, subset, .. } => {
                kinds.push(match (property, subset.is_some()) {
                    (Property::Kernel, false) => "no-kernel",
                    (Property::Grundy, false) => "no-grundy",
                    (Property::SemiGrundy, false) => "no-sg",
                    (Property::SemiGrundy, true) => "no-sg-below",
                    _ => "unexpected",
                });
                let target = match subset {
                    None => d.clone(),
                    Some(s) => {
                        let Ok(set) = VertexSet::from_indices(d.order(), s.iter().copied()) else {
                            return Ok(false);
                        };
                        d.induced_subdigraph(&set).0
                    }
                };
                let r = match property {
                    Property::Kernel => find_kernel(&target)?,
                    Property::Grundy => find_grundy(&target)?,
                    Property::SemiGrundy => find_semi_grundy(&target)?,
                };
                !r.found
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    let expected: &[&str] = match predicate {
        Predicate::SemikernelNotSemigrundy => &["sk", "no-sg"],
        Predicate::SemigrundyNotGrundy => &["sg", "no-grundy"],
        Predicate::SemigrundyNotKernel => &["sg", "no-kernel"],
        Predicate::SemigrundyNotHereditary => &["sg", "no-sg-below"],
        Predicate::GrundyGapAtLeast(_) => &["pair"],
    };
    Ok(kinds == expected)
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub predicate: Predicate,
    pub max_order: usize,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub digraph: Option<DigraphDocument>,
    /// Arc bitmask of the witness within its order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_mask: Option<u64>,
    pub certificates: Vec<Certificate>,
    /// Digraphs examined, up to and including the witness.
    pub digraphs_scanned: u64,
    pub wall_time: Duration,
}

impl WitnessReport {
    /// Equality of everything except the wall time.
    pub fn same_outcome(&self, other: &WitnessReport) -> bool {
        self.predicate == other.predicate
            && self.max_order == other.max_order
            && self.found == other.found
            && self.digraph == other.digraph
            && self.witness_mask == other.witness_mask
            && self.certificates == other.certificates
            && self.digraphs_scanned == other.digraphs_scanned
    }
}

/// Emitted after each fully scanned order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progress {
    pub order: usize,
    pub scanned: u64,
}

/// Witness bitmask and its certificates.
type Hit = (u64, Vec<Certificate>);

struct ChunkOutcome {
    scanned: u64,
    hit: Option<Hit>,
}

fn scan_chunk(
    spec: &SearchSpec,
    enc: &Encoding,
    filter: Option<&CanonicalFilter>,
    range: std::ops::Range<u64>,
) -> Result<ChunkOutcome> {
    let mut scanned = 0;
    for mask in range {
        if filter.is_some_and(|f| !f.is_canonical(mask)) {
            continue;
        }
        scanned += 1;
        if let Some(certs) = evaluate(spec.predicate, &enc.decode(mask))? {
            return Ok(ChunkOutcome { scanned, hit: Some((mask, certs)) });
        }
    }
    Ok(ChunkOutcome { scanned, hit: None })
}

/// Scans one order with `workers` threads pulling contiguous bitmask
/// chunks. Returns the scan count up to the least witness and the witness.
fn scan_order(
    spec: &SearchSpec,
    order: usize,
) -> Result<(u64, Option<Hit>)> {
    let enc = Encoding::new(order, spec.include_loops)?;
    let filter = spec.canonical_only.then(|| CanonicalFilter::new(&enc));
    let total = enc.count();
    let chunks = total.div_ceil(CHUNK);
    let next = AtomicU64::new(0);
    let best = AtomicU64::new(u64::MAX);
    let outcomes: Mutex<BTreeMap<u64, ChunkOutcome>> = Mutex::new(BTreeMap::new());
    let failure: Mutex<Option<Error>> = Mutex::new(None);

    let work = || loop {
        let c = next.fetch_add(1, Ordering::Relaxed);
        if c >= chunks || c > best.load(Ordering::Relaxed) {
            break;
        }
        let range = c * CHUNK..((c + 1) * CHUNK).min(total);
        match scan_chunk(spec, &enc, filter.as_ref(), range) {
            Ok(outcome) => {
                if outcome.hit.is_some() {
                    best.fetch_min(c, Ordering::Relaxed);
                }
                outcomes.lock().unwrap().insert(c, outcome);
            }
            Err(e) => {
                *failure.lock().unwrap() = Some(e);
                best.store(0, Ordering::Relaxed);
                break;
            }
        }
    };
    let threads = spec.workers.min(chunks as usize).max(1);
    std::thread::scope(|s| {
        for _ in 1..threads {
            s.spawn(work);
        }
        work();
    });
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }

    let outcomes = outcomes.into_inner().unwrap();
    let best = best.into_inner();
    let mut scanned = 0;
    for (c, outcome) in outcomes {
        if c > best {
            break;
        }
        scanned += outcome.scanned;
        if c == best {
            return Ok((scanned, outcome.hit));
        }
    }
    Ok((scanned, None))
}

/// Scans orders `1..=max_order` and reports the first digraph (by order, then
/// bitmask) satisfying the predicate. The result does not depend on the
/// number of workers.
pub fn find_witness(spec: &SearchSpec, progress: Option<&dyn Fn(Progress)>) -> Result<WitnessReport> {
    spec.validate()?;
    let start = Instant::now();
    let mut scanned = 0;
    for order in 1..=spec.max_order {
        let (count, hit) = scan_order(spec, order)?;
        scanned += count;
        if let Some((mask, certificates)) = hit {
            let enc = Encoding::new(order, spec.include_loops)?;
            return Ok(WitnessReport {
                predicate: spec.predicate,
                max_order: spec.max_order,
                found: true,
                digraph: Some(DigraphDocument::from_digraph(&enc.decode(mask))),
                witness_mask: Some(mask),
                certificates,
                digraphs_scanned: scanned,
                wall_time: start.elapsed(),
            });
        }
        if let Some(report) = progress {
            report(Progress { order, scanned });
        }
    }
    Ok(WitnessReport {
        predicate: spec.predicate,
        max_order: spec.max_order,
        found: false,
        digraph: None,
        witness_mask: None,
        certificates: Vec::new(),
        digraphs_scanned: scanned,
        wall_time: start.elapsed(),
    })
}

/// Total number of digraphs `find_witness` examines when nothing is found.
pub fn exhaustion_count(spec: &SearchSpec) -> Result<u64> {
    let mut total = 0;
    for order in 1..=spec.max_order {
        let enc = Encoding::new(order, spec.include_loops)?;
        total += if spec.canonical_only {
            let filter = CanonicalFilter::new(&enc);
            (0..enc.count()).filter(|&m| filter.is_canonical(m)).count() as u64
        } else {
            enc.count()
        };
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Hereditary semi-kernels imply a kernel.
    HereditarySkImpliesKernel,
    /// The zero class of a Grundy function is a kernel.
    GrundyZeroIsKernel,
    /// Kernel-perfect digraphs have a Grundy function.
    KernelPerfectImpliesGrundy,
    /// A semi-Grundy function yields a semi-kernel.
    SemiGrundyImpliesSemiKernel,
    /// Hereditary semi-kernels imply a semi-Grundy function.
    HereditarySkImpliesSemiGrundy,
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "hereditary-sk-implies-kernel" => Theorem::HereditarySkImpliesKernel,
            "grundy-zero-is-kernel" => Theorem::GrundyZeroIsKernel,
            "kernel-perfect-implies-grundy" => Theorem::KernelPerfectImpliesGrundy,
            "semi-grundy-implies-semi-kernel" => Theorem::SemiGrundyImpliesSemiKernel,
            "hereditary-sk-implies-semi-grundy" => Theorem::HereditarySkImpliesSemiGrundy,
            _ => return Err(Error::Input(format!("unknown theorem {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub max_order: usize,
    /// Loop-free labeled digraphs checked, per order `1..=max_order`.
    pub per_order: Vec<u64>,
    pub digraphs_checked: u64,
    /// Digraphs on which the hypothesis held.
    pub premise_held: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<DigraphDocument>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// `Some(conclusion)` when the hypothesis holds on `d`, `None` otherwise.
fn check_theorem(theorem: Theorem, d: &Digraph) -> Result<Option<bool>> {
    Ok(match theorem {
        Theorem::HereditarySkImpliesKernel => {
            has_hereditary_semi_kernel(d)?.then(|| find_kernel(d).map(|r| r.found)).transpose()?
        }
        Theorem::GrundyZeroIsKernel => {
            let all = enumerate_grundy(d)?;
            (!all.is_empty()).then(|| all.iter().all(|g| checkers::is_kernel(d, &g.class(0))))
        }
        Theorem::KernelPerfectImpliesGrundy => {
            if is_kernel_perfect(d)? {
                let g = layered_grundy(d)?;
                Some(find_grundy(d)?.found && checkers::is_grundy(d, &g))
            } else {
                None
            }
        }
        Theorem::SemiGrundyImpliesSemiKernel => match find_semi_grundy(d)?.witness_map() {
            Some(s) => {
                let sk = checkers::semi_kernel_from_semi_grundy(d, &s)?;
                Some(checkers::is_semi_kernel(d, &sk) && find_semi_kernel(d)?.found)
            }
            None => None,
        },
        Theorem::HereditarySkImpliesSemiGrundy => {
            if has_hereditary_semi_kernel(d)? {
                let layered = layered_semi_grundy(d)?;
                Some(
                    find_semi_grundy(d)?.found
                        && layered.values().is_some_and(|s| checkers::is_semi_grundy(d, s)),
                )
            } else {
                None
            }
        }
    })
}

/// Checks an implication on every loop-free labeled digraph of order
/// `1..=max_order`, stopping at the first counterexample.
pub fn verify_theorem(theorem: Theorem, max_order: usize) -> Result<TheoremReport> {
    if max_order > MAX_VERIFY_ORDER {
        return Err(Error::TooLarge { what: "verify_theorem", order: max_order, limit: MAX_VERIFY_ORDER });
    }
    let mut report = TheoremReport {
        theorem,
        max_order,
        per_order: Vec::new(),
        digraphs_checked: 0,
        premise_held: 0,
        counterexample: None,
    };
    for order in 1..=max_order {
        let mut count = 0;
        for d in enumerate_digraphs(order, false, false)? {
            count += 1;
            match check_theorem(theorem, &d)? {
                None => {}
                Some(true) => report.premise_held += 1,
                Some(false) => {
                    report.premise_held += 1;
                    report.counterexample = Some(DigraphDocument::from_digraph(&d));
                    report.per_order.push(count);
                    report.digraphs_checked += count;
                    return Ok(report);
                }
            }
        }
        report.per_order.push(count);
        report.digraphs_checked += count;
    }
    Ok(report)
}
