//! Brute-force oracles and generators shared by the integration tests.
//!
//! The oracles work straight from the definitions on arc lists and do not
//! call the library's checkers or solvers.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use semigrundy::{solvers, Digraph, ValueMap};

pub type Arcs = Vec<(usize, usize)>;

/// Every loop-free labeled arc set on `n` vertices.
pub fn all_arc_sets(n: usize) -> impl Iterator<Item = Arcs> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    (0u64..1 << pairs.len()).map(move |m| {
        pairs.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &p)| p).collect()
    })
}

pub fn all_digraphs(max_order: usize) -> impl Iterator<Item = Digraph> {
    (1..=max_order).flat_map(|n| all_arc_sets(n).map(move |a| Digraph::new(n, a).unwrap()))
}

/// Every map `{0..n} -> {0..=bound}` in lexicographic order.
pub fn all_maps(n: usize, bound: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (bound + 1).pow(n as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = k % (bound + 1);
            k /= bound + 1;
        }
        v
    })
}

fn succ(arcs: &[(usize, usize)], x: usize) -> impl Iterator<Item = usize> + '_ {
    arcs.iter().filter(move |a| a.0 == x).map(|a| a.1)
}

pub fn oracle_is_grundy(n: usize, arcs: &[(usize, usize)], g: &[usize]) -> bool {
    (0..n).all(|x| {
        let vals: Vec<usize> = succ(arcs, x).map(|y| g[y]).collect();
        let mex = (0..).find(|v| !vals.contains(v)).unwrap();
        g[x] == mex
    })
}

pub fn oracle_is_semi_grundy(arcs: &[(usize, usize)], s: &[usize]) -> bool {
    arcs.iter().all(|&(x, y)| s[x] != s[y])
        && arcs
            .iter()
            .all(|&(x, y)| s[y] < s[x] || succ(arcs, y).any(|z| s[z] == s[x]))
}

pub fn oracle_is_kernel(n: usize, arcs: &[(usize, usize)], set: &[bool]) -> bool {
    let independent = arcs.iter().all(|&(x, y)| !(set[x] && set[y]));
    independent && (0..n).all(|z| set[z] || succ(arcs, z).any(|y| set[y]))
}

pub fn oracle_is_semi_kernel(arcs: &[(usize, usize)], set: &[bool]) -> bool {
    set.iter().any(|&b| b)
        && arcs.iter().all(|&(x, y)| !(set[x] && set[y]))
        && arcs
            .iter()
            .filter(|&&(x, _)| set[x])
            .all(|&(_, z)| succ(arcs, z).any(|w| set[w]))
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |m| (0..n).map(|i| m >> i & 1 == 1).collect())
}

pub fn oracle_has_kernel(d: &Digraph) -> bool {
    subsets(d.order()).any(|s| oracle_is_kernel(d.order(), d.arcs(), &s))
}

pub fn oracle_has_semi_kernel(d: &Digraph) -> bool {
    subsets(d.order()).any(|s| oracle_is_semi_kernel(d.arcs(), &s))
}

/// Values never need to exceed `n - 1`: the rank of a value among the used
/// ones preserves both conditions.
pub fn oracle_has_semi_grundy(d: &Digraph) -> bool {
    let n = d.order();
    all_maps(n, n.saturating_sub(1)).any(|s| oracle_is_semi_grundy(d.arcs(), &s))
}

/// Grundy values are bounded by the out-degree, hence by `n - 1`.
pub fn oracle_grundy_functions(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.order();
    all_maps(n, n.saturating_sub(1)).filter(|g| oracle_is_grundy(n, d.arcs(), g)).collect()
}

pub fn random_digraph(rng: &mut ChaCha8Rng, order: usize, density: f64) -> Digraph {
    let arcs: Arcs = (0..order)
        .flat_map(|i| (0..order).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .filter(|_| rng.gen_bool(density))
        .collect();
    Digraph::new(order, arcs).unwrap()
}

/// Transitive tournament on `m + 1` vertices; its Grundy function is
/// `[m, m-1, …, 0]` with maximum `m`.
pub fn transitive_tournament(m: usize) -> (Digraph, ValueMap) {
    let arcs: Arcs = (0..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
    (Digraph::new(m + 1, arcs).unwrap(), ValueMap::new((0..=m).rev().collect()))
}

/// Random digraph on at most `max_order` vertices with its least semi-Grundy
/// function, by rejection.
pub fn random_semi_grundy_factor(rng: &mut ChaCha8Rng, max_order: usize) -> (Digraph, ValueMap) {
    loop {
        let order = rng.gen_range(1..=max_order);
        let density = rng.gen_range(0.1..0.6);
        let d = random_digraph(rng, order, density);
        if let Some(s) = solvers::find_semi_grundy(&d).unwrap().witness_map() {
            return (d, s);
        }
    }
}

/// Random factor whose least semi-Grundy function has maximum exactly `m`.
pub fn random_factor_with_max(rng: &mut ChaCha8Rng, m: usize) -> (Digraph, ValueMap) {
    for _ in 0..200 {
        let (d, s) = random_semi_grundy_factor(rng, m + 3);
        if s.max_value() == Some(m) {
            return (d, s);
        }
    }
    transitive_tournament(m)
}

/// Equal value maps up to a relabeling of values.
pub fn same_partition(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] == a[j]) == (b[i] == b[j])))
}
