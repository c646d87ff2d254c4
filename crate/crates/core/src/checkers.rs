//! Polynomial-time validators for kernels, semi-kernels, Grundy and
//! semi-Grundy functions, plus the extractions that turn a valid function
//! into a kernel or semi-kernel.

use crate::digraph::{mex, Digraph, ValueMap, VertexSet};
use crate::error::{Error, Result};

fn same_universe(d: &Digraph, set: &VertexSet) -> bool {
    set.order() == d.order()
}

/// Nonempty independent `S` such that every arc leaving `S` is answered by an
/// arc from its head back into `S`.
pub fn is_semi_kernel(d: &Digraph, s: &VertexSet) -> bool {
    if !same_universe(d, s) || s.is_empty() || !d.is_independent(s) {
        return false;
    }
    s.iter().all(|x| {
        d.successors(x)
            .iter()
            .all(|&z| s.contains(z) || d.successor_set(z).intersects(s))
    })
}

/// Independent `N` absorbing every vertex outside it.
pub fn is_kernel(d: &Digraph, n: &VertexSet) -> bool {
    if !same_universe(d, n) || !d.is_independent(n) {
        return false;
    }
    d.vertices().all(|z| n.contains(z) || d.successor_set(z).intersects(n))
}

pub fn is_grundy(d: &Digraph, g: &ValueMap) -> bool {
    if g.len() != d.order() {
        return false;
    }
    d.vertices()
        .all(|x| g.get(x) == mex(d.successors(x).iter().map(|&y| g.get(y))))
}

/// Checks both semi-Grundy conditions: no arc joins equal values, and every
/// arc `(x, y)` with `s(y) > s(x)` has some `z` in `Γ⁺(y)` with `s(z) = s(x)`.
///
/// Values need not be consecutive.
pub fn is_semi_grundy(d: &Digraph, s: &ValueMap) -> bool {
    if s.len() != d.order() {
        return false;
    }
    if d.arcs().iter().any(|&(x, y)| s.get(x) == s.get(y)) {
        return false;
    }
    // sorted successor values per vertex
    let succ_values: Vec<Vec<usize>> = d
        .vertices()
        .map(|y| {
            let mut vals: Vec<usize> = d.successors(y).iter().map(|&z| s.get(z)).collect();
            vals.sort_unstable();
            vals.dedup();
            vals
        })
        .collect();
    d.arcs().iter().all(|&(x, y)| {
        s.get(y) < s.get(x) || succ_values[y].binary_search(&s.get(x)).is_ok()
    })
}

/// The value-0 class of a Grundy function, which is a kernel.
pub fn kernel_from_grundy(d: &Digraph, g: &ValueMap) -> Result<VertexSet> {
    if !is_grundy(d, g) {
        return Err(Error::Contract("value map is not a Grundy function".into()));
    }
    Ok(g.class(0))
}

/// The minimum-value class of a semi-Grundy function, which is a semi-kernel.
pub fn semi_kernel_from_semi_grundy(d: &Digraph, s: &ValueMap) -> Result<VertexSet> {
    if d.order() == 0 {
        return Err(Error::Input("the empty digraph has no semi-kernel".into()));
    }
    if !is_semi_grundy(d, s) {
        return Err(Error::Contract("value map is not a semi-Grundy function".into()));
    }
    let min = s.min_value().expect("nonempty");
    Ok(s.class(min))
}

/// Number of distinct values. For a semi-Grundy function the classes are
/// independent, so this bounds the chromatic number from above.
pub fn coloring_classes(s: &ValueMap) -> usize {
    s.image().len()
}
