//! Exhaustive existence solvers.
//!
//! All of these questions are NP-complete in general, so the solvers are
//! exact desk-scale oracles: set searches run over single-word bitmasks
//! (at most 64 vertices) and the hereditary checks visit every vertex subset.
//! Witnesses are chosen deterministically: sets by (cardinality, bitmask),
//! value maps lexicographically by vertex index.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::checkers;
use crate::digraph::{low_bits, Digraph, ValueMap, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by the subset searches.
pub const MASK_LIMIT: usize = 64;
/// Largest order accepted by `is_kernel_perfect` and `has_hereditary_semi_kernel`.
pub const HEREDITARY_LIMIT: usize = 20;
/// Largest order accepted by `enumerate_grundy`.
pub const ENUMERATE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Set(Vec<usize>),
    Map(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub found: bool,
    pub witness: Option<Witness>,
    pub nodes_explored: u64,
}

impl SolveResult {
    fn set(set: Option<VertexSet>, nodes_explored: u64) -> Self {
        SolveResult {
            found: set.is_some(),
            witness: set.map(|s| Witness::Set(s.to_vec())),
            nodes_explored,
        }
    }

    fn map(map: Option<ValueMap>, nodes_explored: u64) -> Self {
        SolveResult {
            found: map.is_some(),
            witness: map.map(|m| Witness::Map(m.into_inner())),
            nodes_explored,
        }
    }

    /// The witness as a vertex set over `order` vertices.
    pub fn witness_set(&self, order: usize) -> Option<VertexSet> {
        match &self.witness {
            Some(Witness::Set(s)) => VertexSet::from_indices(order, s.iter().copied()).ok(),
            _ => None,
        }
    }

    pub fn witness_map(&self) -> Option<ValueMap> {
        match &self.witness {
            Some(Witness::Map(m)) => Some(ValueMap::new(m.clone())),
            _ => None,
        }
    }
}

fn guard(d: &Digraph, what: &'static str, limit: usize) -> Result<()> {
    if d.order() > limit {
        return Err(Error::TooLarge { what, order: d.order(), limit });
    }
    Ok(())
}

pub(crate) fn masks(d: &Digraph, what: &'static str) -> Result<Vec<u64>> {
    guard(d, what, MASK_LIMIT)?;
    Ok(d.out_masks().expect("order fits in a word"))
}

fn in_masks(out: &[u64]) -> Vec<u64> {
    let mut inn = vec![0u64; out.len()];
    for (t, &m) in out.iter().enumerate() {
        for h in bits(m) {
            inn[h] |= 1 << t;
        }
    }
    inn
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

/// Masks with exactly `k` of the low `n` bits set, in increasing order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u128> = if k > n { None } else { Some((1u128 << k) - 1) };
    std::iter::from_fn(move || {
        let x = next?;
        if x >= limit {
            return None;
        }
        next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            Some((((r ^ x) >> 2) / c) | r)
        };
        Some(x as u64)
    })
}

fn independent_mask(out: &[u64], set: u64) -> bool {
    bits(set).all(|v| out[v] & set == 0)
}

/// `set` is a kernel of the subdigraph induced by `universe`.
pub(crate) fn kernel_mask(out: &[u64], universe: u64, set: u64) -> bool {
    independent_mask(out, set) && bits(universe & !set).all(|v| out[v] & set != 0)
}

/// `set` is a semi-kernel of the subdigraph induced by `universe`.
pub(crate) fn semi_kernel_mask(out: &[u64], universe: u64, set: u64) -> bool {
    set != 0
        && independent_mask(out, set)
        && bits(set).all(|s| bits(out[s] & universe & !set).all(|z| out[z] & set != 0))
}

fn least_set(n: usize, nodes: &mut u64, pred: impl Fn(u64) -> bool) -> Option<u64> {
    for k in 0..=n {
        for m in combinations(n, k) {
            *nodes += 1;
            if pred(m) {
                return Some(m);
            }
        }
    }
    None
}

/// Least nonempty semi-kernel under (cardinality, bitmask).
pub fn find_semi_kernel(d: &Digraph) -> Result<SolveResult> {
    let out = masks(d, "find_semi_kernel")?;
    let full = low_bits(d.order());
    let mut nodes = 0;
    let found = least_set(d.order(), &mut nodes, |m| semi_kernel_mask(&out, full, m))
        .map(|m| VertexSet::from_mask(d.order(), m));
    if let Some(s) = &found {
        assert!(checkers::is_semi_kernel(d, s), "unsound semi-kernel witness");
    }
    Ok(SolveResult::set(found, nodes))
}

/// Least kernel under (cardinality, bitmask).
pub fn find_kernel(d: &Digraph) -> Result<SolveResult> {
    let out = masks(d, "find_kernel")?;
    let full = low_bits(d.order());
    let mut nodes = 0;
    let found = least_set(d.order(), &mut nodes, |m| kernel_mask(&out, full, m))
        .map(|m| VertexSet::from_mask(d.order(), m));
    if let Some(n) = &found {
        assert!(checkers::is_kernel(d, n), "unsound kernel witness");
    }
    Ok(SolveResult::set(found, nodes))
}

/// Backtracking existence test for kernels (`absorb_all`) or semi-kernels
/// of the subdigraph induced by `universe`.
struct SetSearch<'a> {
    out: &'a [u64],
    inn: &'a [u64],
    universe: u64,
    absorb_all: bool,
}

impl SetSearch<'_> {
    fn run(&self) -> bool {
        if self.absorb_all && self.universe == 0 {
            return true;
        }
        self.branch(0, 0)
    }

    /// Vertices that must end up with an arc into the chosen set.
    fn demanding(&self, chosen: u64, rejected: u64) -> u64 {
        if self.absorb_all {
            rejected
        } else {
            bits(chosen).fold(0, |acc, s| acc | self.out[s]) & self.universe & !chosen
        }
    }

    fn branch(&self, chosen: u64, rejected: u64) -> bool {
        let open = self.universe & !chosen & !rejected;
        let reachable = chosen | open;
        if bits(self.demanding(chosen, rejected)).any(|z| self.out[z] & reachable == 0) {
            return false;
        }
        if open == 0 {
            return (self.absorb_all || chosen != 0)
                && bits(self.demanding(chosen, rejected)).all(|z| self.out[z] & chosen != 0);
        }
        let v = open.trailing_zeros() as usize;
        let bit = 1u64 << v;
        if self.out[v] & bit == 0 {
            let blocked = (self.out[v] | self.inn[v]) & open & !bit;
            if self.branch(chosen | bit, rejected | blocked) {
                return true;
            }
        }
        self.branch(chosen, rejected | bit)
    }
}

pub(crate) fn has_kernel_mask(out: &[u64], inn: &[u64], universe: u64) -> bool {
    SetSearch { out, inn, universe, absorb_all: true }.run()
}

pub(crate) fn has_semi_kernel_mask(out: &[u64], inn: &[u64], universe: u64) -> bool {
    SetSearch { out, inn, universe, absorb_all: false }.run()
}

fn every_subset(d: &Digraph, what: &'static str, test: impl Fn(&[u64], &[u64], u64) -> bool) -> Result<bool> {
    guard(d, what, HEREDITARY_LIMIT)?;
    let out = d.out_masks().expect("order fits in a word");
    let inn = in_masks(&out);
    let count = 1u64 << d.order();
    Ok((1..count).all(|x| test(&out, &inn, x)))
}

/// Every induced subdigraph has a kernel. Each vertex subset is decided
/// once, by a backtracking kernel search restricted to it.
pub fn is_kernel_perfect(d: &Digraph) -> Result<bool> {
    every_subset(d, "is_kernel_perfect", has_kernel_mask)
}

/// Every nonempty induced subdigraph has a nonempty semi-kernel.
pub fn has_hereditary_semi_kernel(d: &Digraph) -> Result<bool> {
    every_subset(d, "has_hereditary_semi_kernel", has_semi_kernel_mask)
}

/// Shared backtracking over value maps in vertex-index order.
struct MapSearch<'a> {
    d: &'a Digraph,
    values: Vec<usize>,
    nodes: u64,
    /// Grundy: vertices whose closed out-neighborhood is assigned at step v.
    grundy_ready: Vec<Vec<usize>>,
    /// Semi-Grundy: arcs `(x, y)` whose second condition is decidable at step v.
    answer_ready: Vec<Vec<(usize, usize)>>,
}

impl<'a> MapSearch<'a> {
    fn new(d: &'a Digraph) -> Self {
        let n = d.order();
        let mut grundy_ready = vec![Vec::new(); n];
        let mut answer_ready = vec![Vec::new(); n];
        let reach = |y: usize| d.successors(y).iter().copied().max().unwrap_or(0).max(y);
        for y in d.vertices() {
            grundy_ready[reach(y)].push(y);
        }
        for &(x, y) in d.arcs() {
            answer_ready[reach(y).max(x)].push((x, y));
        }
        MapSearch { d, values: vec![0; n], nodes: 0, grundy_ready, answer_ready }
    }

    fn proper_at(&self, v: usize) -> bool {
        let val = self.values[v];
        self.d.successors(v).iter().all(|&u| u > v || self.values[u] != val)
            && self.d.predecessors(v).iter().all(|&u| u > v || self.values[u] != val)
    }

    fn grundy<F>(&mut self, v: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if v == self.d.order() {
            return visit(&self.values);
        }
        for val in 0..=self.d.out_degree(v) {
            self.nodes += 1;
            self.values[v] = val;
            if !self.proper_at(v) {
                continue;
            }
            let d = self.d;
            let ok = self.grundy_ready[v].iter().all(|&y| {
                self.values[y] == crate::digraph::mex(d.successors(y).iter().map(|&z| self.values[z]))
            });
            if ok {
                self.grundy(v + 1, visit)?;
            }
        }
        ControlFlow::Continue(())
    }

    fn semi_grundy<F>(&mut self, v: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.d.order();
        if v == n {
            return visit(&self.values);
        }
        for val in 0..n {
            self.nodes += 1;
            self.values[v] = val;
            if !self.proper_at(v) {
                continue;
            }
            let d = self.d;
            let ok = self.answer_ready[v].iter().all(|&(x, y)| {
                self.values[y] < self.values[x]
                    || d.successors(y).iter().any(|&z| self.values[z] == self.values[x])
            });
            if ok {
                self.semi_grundy(v + 1, visit)?;
            }
        }
        ControlFlow::Continue(())
    }
}

fn first_map(
    d: &Digraph,
    run: impl FnOnce(&mut MapSearch, &mut dyn FnMut(&[usize]) -> ControlFlow<()>),
) -> (Option<ValueMap>, u64) {
    let mut search = MapSearch::new(d);
    let mut found = None;
    run(&mut search, &mut |vals: &[usize]| {
        found = Some(ValueMap::new(vals.to_vec()));
        ControlFlow::Break(())
    });
    (found, search.nodes)
}

/// Lexicographically least Grundy function, searching `g(v) <= outdeg(v)`.
pub fn find_grundy(d: &Digraph) -> Result<SolveResult> {
    let (found, nodes) = first_map(d, |s, f| {
        let _ = s.grundy(0, &mut |v| f(v));
    });
    if let Some(g) = &found {
        assert!(checkers::is_grundy(d, g), "unsound Grundy witness");
    }
    Ok(SolveResult::map(found, nodes))
}

/// Lexicographically least semi-Grundy function with values below the order.
///
/// Such a map is always normalized: relabeling any valid map onto
/// consecutive values keeps it valid and never increases a coordinate. The
/// search is therefore complete over ordered partitions into independent
/// classes.
pub fn find_semi_grundy(d: &Digraph) -> Result<SolveResult> {
    let (found, nodes) = first_map(d, |s, f| {
        let _ = s.semi_grundy(0, &mut |v| f(v));
    });
    if let Some(s) = &found {
        assert!(checkers::is_semi_grundy(d, s), "unsound semi-Grundy witness");
        assert!(s.is_normalized(), "least semi-Grundy witness must be normalized");
    }
    Ok(SolveResult::map(found, nodes))
}

/// All Grundy functions in lexicographic order.
pub fn enumerate_grundy(d: &Digraph) -> Result<Vec<ValueMap>> {
    guard(d, "enumerate_grundy", ENUMERATE_LIMIT)?;
    let mut search = MapSearch::new(d);
    let mut all = Vec::new();
    let _ = search.grundy(0, &mut |vals: &[usize]| {
        all.push(ValueMap::new(vals.to_vec()));
        ControlFlow::Continue(())
    });
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn arc() -> Digraph {
        Digraph::new(2, [(0, 1)]).unwrap()
    }

    fn two_cycle() -> Digraph {
        Digraph::new(2, [(0, 1), (1, 0)]).unwrap()
    }

    fn k1() -> Digraph {
        Digraph::empty(1)
    }

    fn set_of(r: &SolveResult) -> Vec<usize> {
        match &r.witness {
            Some(Witness::Set(s)) => s.clone(),
            other => panic!("expected a set witness, got {other:?}"),
        }
    }

    fn map_of(r: &SolveResult) -> Vec<usize> {
        r.witness_map().expect("map witness").into_inner()
    }

    #[test]
    fn combinations_are_ordered() {
        let all: Vec<u64> = combinations(4, 2).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(64, 64).count(), 1);
    }

    #[test]
    fn semi_kernel_search() {
        assert!(!find_semi_kernel(&c3()).unwrap().found);
        assert_eq!(set_of(&find_semi_kernel(&arc()).unwrap()), vec![1]);
        assert_eq!(set_of(&find_semi_kernel(&k1()).unwrap()), vec![0]);
        assert!(!find_semi_kernel(&Digraph::empty(0)).unwrap().found);
    }

    #[test]
    fn kernel_search() {
        assert!(!find_kernel(&c3()).unwrap().found);
        assert_eq!(set_of(&find_kernel(&two_cycle()).unwrap()), vec![0]);
        let empty = find_kernel(&Digraph::empty(0)).unwrap();
        assert!(empty.found);
        assert_eq!(set_of(&empty), Vec::<usize>::new());
    }

    #[test]
    fn hereditary_checks() {
        assert!(!is_kernel_perfect(&c3()).unwrap());
        assert!(is_kernel_perfect(&k1()).unwrap());
        let dag = Digraph::new(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(is_kernel_perfect(&dag).unwrap());

        assert!(!has_hereditary_semi_kernel(&c3()).unwrap());
        assert!(has_hereditary_semi_kernel(&arc()).unwrap());
        assert!(has_hereditary_semi_kernel(&k1()).unwrap());

        let big = Digraph::empty(21);
        assert!(matches!(is_kernel_perfect(&big), Err(Error::TooLarge { limit: 20, .. })));
    }

    #[test]
    fn grundy_search() {
        assert!(!find_grundy(&c3()).unwrap().found);
        assert_eq!(map_of(&find_grundy(&two_cycle()).unwrap()), vec![0, 1]);
        assert_eq!(map_of(&find_grundy(&k1()).unwrap()), vec![0]);
        assert!(find_grundy(&Digraph::empty(0)).unwrap().found);
    }

    #[test]
    fn semi_grundy_search() {
        assert!(!find_semi_grundy(&c3()).unwrap().found);
        assert_eq!(map_of(&find_semi_grundy(&arc()).unwrap()), vec![1, 0]);
        assert_eq!(map_of(&find_semi_grundy(&k1()).unwrap()), vec![0]);
    }

    #[test]
    fn grundy_enumeration() {
        let all = enumerate_grundy(&two_cycle()).unwrap();
        assert_eq!(all, vec![ValueMap::new(vec![0, 1]), ValueMap::new(vec![1, 0])]);
        assert!(enumerate_grundy(&c3()).unwrap().is_empty());
        assert_eq!(enumerate_grundy(&k1()).unwrap(), vec![ValueMap::new(vec![0])]);
        assert!(matches!(enumerate_grundy(&Digraph::empty(13)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn loops_block_everything() {
        let looped = Digraph::new(2, [(0, 0), (1, 0)]).unwrap();
        assert!(!find_grundy(&looped).unwrap().found);
        assert!(!find_semi_grundy(&looped).unwrap().found);
        // {1} leaks through 1 -> 0 and nothing answers back
        assert!(!find_semi_kernel(&looped).unwrap().found);
        assert!(!find_kernel(&looped).unwrap().found);
    }

    #[test]
    fn repeated_runs_agree() {
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(find_semi_grundy(&d).unwrap(), find_semi_grundy(&d).unwrap());
        assert_eq!(find_kernel(&d).unwrap(), find_kernel(&d).unwrap());
    }
}
