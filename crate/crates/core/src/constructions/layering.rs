use crate::checkers;
use crate::digraph::{Digraph, ValueMap, VertexSet};
use crate::error::{Error, Result};
use crate::solvers::{find_kernel, find_semi_kernel, SolveResult};

/// Outcome of peeling semi-kernels off successive residual subdigraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Layering {
    /// Every residual had a semi-kernel; layer k carries value k.
    Complete { values: ValueMap, layers: Vec<VertexSet> },
    /// The residual `residual` has no semi-kernel.
    Stuck { layers: Vec<VertexSet>, residual: VertexSet },
}

impl Layering {
    pub fn values(&self) -> Option<&ValueMap> {
        match self {
            Layering::Complete { values, .. } => Some(values),
            Layering::Stuck { .. } => None,
        }
    }
}

/// Repeatedly removes a set chosen by `pick` from the residual subdigraph.
/// Returns the layers and, if `pick` fails, the residual it failed on.
fn peel(
    d: &Digraph,
    pick: impl Fn(&Digraph) -> Result<SolveResult>,
) -> Result<(Vec<VertexSet>, Option<VertexSet>)> {
    let mut residual = d.full_set();
    let mut layers = Vec::new();
    while !residual.is_empty() {
        let (sub, map) = d.induced_subdigraph(&residual);
        let Some(local) = pick(&sub)?.witness_set(sub.order()) else {
            return Ok((layers, Some(residual)));
        };
        let layer = VertexSet::from_indices(
            d.order(),
            d.vertices().filter(|&v| map[v].is_some_and(|i| local.contains(i))),
        )?;
        residual = residual.difference(&layer);
        layers.push(layer);
    }
    Ok((layers, None))
}

fn values_from_layers(order: usize, layers: &[VertexSet]) -> ValueMap {
    let mut values = vec![0; order];
    for (k, layer) in layers.iter().enumerate() {
        for v in layer.iter() {
            values[v] = k;
        }
    }
    ValueMap::new(values)
}

/// Semi-Grundy function from successive least semi-kernels of the residuals.
///
/// Succeeds whenever every induced subdigraph has a semi-kernel; a residual
/// without one is reported as [`Layering::Stuck`].
pub fn layered_semi_grundy(d: &Digraph) -> Result<Layering> {
    let (layers, stuck) = peel(d, find_semi_kernel)?;
    if let Some(residual) = stuck {
        return Ok(Layering::Stuck { layers, residual });
    }
    let values = values_from_layers(d.order(), &layers);
    assert!(checkers::is_semi_grundy(d, &values), "semi-kernel layering is not semi-Grundy");
    Ok(Layering::Complete { values, layers })
}

/// Grundy function of a kernel-perfect digraph: the k-th successive kernel
/// gets value k.
pub fn layered_grundy(d: &Digraph) -> Result<ValueMap> {
    let (layers, stuck) = peel(d, find_kernel)?;
    if let Some(residual) = stuck {
        return Err(Error::Contract(format!(
            "digraph is not kernel-perfect: residual {:?} has no kernel",
            residual.to_vec()
        )));
    }
    let values = values_from_layers(d.order(), &layers);
    assert!(checkers::is_grundy(d, &values), "kernel layering is not Grundy");
    Ok(values)
}
