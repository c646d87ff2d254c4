//! Cartesian product of a base digraph with one factor per base vertex:
//! every base vertex is replaced by its factor, and every base arc `(u, v)`
//! becomes all arcs from factor `u` to factor `v`.

use std::ops::Range;

use super::normalize;
use crate::checkers::{is_semi_grundy, is_semi_kernel};
use crate::digraph::{Digraph, ValueMap, VertexSet};
use crate::error::{Error, Result};
use crate::solvers::{find_kernel, is_kernel_perfect};

/// A base digraph, one factor per base vertex, and the product they span.
///
/// Product vertices are numbered factor by factor: the vertices of factor `v`
/// occupy a contiguous block starting at the sum of the earlier factor orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyAssignment {
    base: Digraph,
    factors: Vec<Digraph>,
    product: Digraph,
    offsets: Vec<usize>,
    owners: Vec<(usize, usize)>,
}

impl FamilyAssignment {
    pub fn base(&self) -> &Digraph {
        &self.base
    }

    pub fn factors(&self) -> &[Digraph] {
        &self.factors
    }

    pub fn product(&self) -> &Digraph {
        &self.product
    }

    /// Product index of vertex `x` of factor `v`.
    pub fn product_vertex(&self, v: usize, x: usize) -> usize {
        assert!(x < self.factors[v].order(), "vertex {x} outside factor {v}");
        self.offsets[v] + x
    }

    /// `(base vertex, factor vertex)` of a product vertex.
    pub fn owner(&self, p: usize) -> (usize, usize) {
        self.owners[p]
    }

    /// Product indices of factor `v`.
    pub fn block(&self, v: usize) -> Range<usize> {
        self.offsets[v]..self.offsets[v] + self.factors[v].order()
    }

    /// Restriction of a product labeling to factor `v`.
    pub fn restrict(&self, s: &ValueMap, v: usize) -> ValueMap {
        ValueMap::new(s.values()[self.block(v)].to_vec())
    }

    fn check_funcs(&self, funcs: &[ValueMap]) -> Result<()> {
        if funcs.len() != self.base.order() {
            return Err(Error::LengthMismatch { expected: self.base.order(), found: funcs.len() });
        }
        for (v, (factor, f)) in self.factors.iter().zip(funcs).enumerate() {
            f.check_len(factor.order())?;
            if !is_semi_grundy(factor, f) {
                return Err(Error::Contract(format!(
                    "function for base vertex {v} is not semi-Grundy on its factor"
                )));
            }
        }
        Ok(())
    }
}

pub fn cartesian_product(base: &Digraph, factors: Vec<Digraph>) -> Result<FamilyAssignment> {
    if factors.len() != base.order() {
        return Err(Error::LengthMismatch { expected: base.order(), found: factors.len() });
    }
    if let Some(v) = factors.iter().position(|f| f.order() == 0) {
        return Err(Error::Input(format!("factor of base vertex {v} is empty")));
    }
    let mut offsets = Vec::with_capacity(factors.len());
    let mut owners = Vec::new();
    for (v, f) in factors.iter().enumerate() {
        offsets.push(owners.len());
        owners.extend((0..f.order()).map(|x| (v, x)));
    }
    let mut arcs = Vec::new();
    for (v, f) in factors.iter().enumerate() {
        arcs.extend(f.arcs().iter().map(|&(a, b)| (offsets[v] + a, offsets[v] + b)));
    }
    for &(u, v) in base.arcs() {
        for x in 0..factors[u].order() {
            for y in 0..factors[v].order() {
                arcs.push((offsets[u] + x, offsets[v] + y));
            }
        }
    }
    let labels = owners
        .iter()
        .map(|&(v, x)| format!("{}_{}", base.name(v), factors[v].name(x)))
        .collect();
    let product = Digraph::new(owners.len(), arcs)?.with_labels(labels)?;
    Ok(FamilyAssignment { base: base.clone(), factors, product, offsets, owners })
}

/// One round of the kernel-driven assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    /// Least kernel of the base restricted to unexhausted vertices.
    pub kernel: VertexSet,
    /// `(y, smallest open factor value)` for each `y` in the kernel.
    pub minima: Vec<(usize, usize)>,
    /// Product vertices receiving value `i`.
    pub assigned: VertexSet,
    /// Base vertices whose whole factor is assigned after this stage.
    pub exhausted: VertexSet,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LayeringTrace {
    pub stages: Vec<Stage>,
}

/// Semi-Grundy function on the product of a kernel-perfect base.
///
/// Stage `i` takes the least kernel of the base restricted to vertices
/// whose factor still has unassigned vertices. For every `y` in that kernel
/// the unassigned vertices of factor `y` with the smallest factor value get
/// value `i`.
/// Stops once every factor is exhausted.
pub fn product_semi_grundy_kp(
    fa: &FamilyAssignment,
    funcs: &[ValueMap],
) -> Result<(ValueMap, LayeringTrace)> {
    fa.check_funcs(funcs)?;
    if !is_kernel_perfect(&fa.base)? {
        return Err(Error::Contract("base digraph is not kernel-perfect".into()));
    }
    let base_order = fa.base.order();
    let product_order = fa.product.order();
    let mut values = vec![usize::MAX; product_order];
    let mut assigned_total = VertexSet::empty(product_order);
    let mut exhausted = VertexSet::empty(base_order);
    let mut trace = LayeringTrace::default();

    while exhausted.len() < base_order {
        let stage = trace.stages.len();
        let active = exhausted.complement();
        let (sub, map) = fa.base.induced_subdigraph(&active);
        let local = find_kernel(&sub)?
            .witness_set(sub.order())
            .ok_or_else(|| Error::Contract("residual base digraph has no kernel".into()))?;
        let kernel = VertexSet::from_indices(
            base_order,
            fa.base.vertices().filter(|&v| map[v].is_some_and(|i| local.contains(i))),
        )?;

        let mut assigned = VertexSet::empty(product_order);
        let mut minima = Vec::new();
        for y in kernel.iter() {
            let open = || fa.block(y).filter(|&p| !assigned_total.contains(p));
            let min = open()
                .map(|p| funcs[y].get(fa.owner(p).1))
                .min()
                .expect("active factors have unassigned vertices");
            minima.push((y, min));
            for p in open().filter(|&p| funcs[y].get(fa.owner(p).1) == min).collect::<Vec<_>>() {
                assigned.insert(p);
            }
        }
        for p in assigned.iter() {
            values[p] = stage;
        }
        assigned_total = assigned_total.union(&assigned);
        for v in fa.base.vertices() {
            if fa.block(v).all(|p| assigned_total.contains(p)) {
                exhausted.insert(v);
            }
        }
        trace.stages.push(Stage { kernel, minima, assigned, exhausted: exhausted.clone() });
    }

    let values = ValueMap::new(values);
    assert!(is_semi_grundy(&fa.product, &values), "kernel-driven product labeling is not semi-Grundy");
    Ok((values, trace))
}

/// `max(s) <= sum of factor maxima + base order - 1`.
pub fn product_bound_check(funcs: &[ValueMap], base_order: usize, s: &ValueMap) -> bool {
    let Some(max) = s.max_value() else {
        return true;
    };
    let factor_sum: usize = funcs.iter().filter_map(ValueMap::max_value).sum();
    max < factor_sum + base_order
}

/// Recovers a semi-kernel of the base and a semi-Grundy function per factor
/// from a semi-Grundy function of the product.
///
/// The semi-kernel is the set of base vertices whose factor meets the
/// minimum-value class; each factor function is the normalized restriction.
pub fn extract_factors(fa: &FamilyAssignment, s: &ValueMap) -> Result<(VertexSet, Vec<ValueMap>)> {
    s.check_len(fa.product.order())?;
    if !is_semi_grundy(&fa.product, s) {
        return Err(Error::Contract("value map is not semi-Grundy on the product".into()));
    }
    let funcs: Vec<ValueMap> = fa.base.vertices().map(|v| normalize(&fa.restrict(s, v))).collect();
    let semi_kernel = match s.min_value() {
        Some(min) => VertexSet::from_indices(
            fa.base.order(),
            fa.base.vertices().filter(|&v| fa.block(v).any(|p| s.get(p) == min)),
        )?,
        None => VertexSet::empty(0),
    };
    if fa.base.order() > 0 {
        assert!(is_semi_kernel(&fa.base, &semi_kernel), "extracted set is not a semi-kernel");
    }
    for (v, f) in funcs.iter().enumerate() {
        assert!(is_semi_grundy(&fa.factors[v], f), "extracted factor function is not semi-Grundy");
    }
    Ok((semi_kernel, funcs))
}

/// Semi-Grundy function on the product built from a normalized semi-Grundy
/// function `f` of the base: for `x` in factor `u` with `f(u) = i`,
/// the value is `max_0 + … + max_{i-1} + i + funcs[u](x)`, where `max_j` is
/// the common maximum of the factor functions on level `j`.
///
/// Factor functions must be normalized and share their maximum within each
/// level of `f`; the result then peaks at exactly `max(f)` plus the sum of the level maxima.
pub fn stratified_product_semi_grundy(
    fa: &FamilyAssignment,
    f: &ValueMap,
    funcs: &[ValueMap],
) -> Result<ValueMap> {
    f.check_len(fa.base.order())?;
    if !is_semi_grundy(&fa.base, f) {
        return Err(Error::Contract("base function is not semi-Grundy".into()));
    }
    if !f.is_normalized() {
        return Err(Error::Input("base function must take the values 0..=n".into()));
    }
    fa.check_funcs(funcs)?;
    if let Some(v) = funcs.iter().position(|s| !s.is_normalized()) {
        return Err(Error::Input(format!("factor function of base vertex {v} is not normalized")));
    }

    let levels = f.max_value().map_or(0, |n| n + 1);
    let mut level_max: Vec<Option<(usize, usize)>> = vec![None; levels];
    for u in fa.base.vertices() {
        let m = funcs[u].max_value().expect("factors are nonempty");
        match level_max[f.get(u)] {
            None => level_max[f.get(u)] = Some((u, m)),
            Some((w, mw)) if mw != m => {
                return Err(Error::Input(format!(
                    "level {}: factor maxima differ ({} at vertex {w}, {} at vertex {u})",
                    f.get(u),
                    mw,
                    m
                )));
            }
            Some(_) => {}
        }
    }
    let mut offsets = Vec::with_capacity(levels);
    let mut acc = 0;
    for (i, entry) in level_max.iter().enumerate() {
        offsets.push(acc + i);
        acc += entry.expect("normalized levels are nonempty").1;
    }

    let values = (0..fa.product.order())
        .map(|p| {
            let (u, x) = fa.owner(p);
            offsets[f.get(u)] + funcs[u].get(x)
        })
        .collect();
    let values = ValueMap::new(values);
    assert!(is_semi_grundy(&fa.product, &values), "stratified product labeling is not semi-Grundy");
    Ok(values)
}
