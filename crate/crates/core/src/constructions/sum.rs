use crate::checkers::is_semi_grundy;
use crate::digraph::{Digraph, ValueMap};
use crate::error::{Error, Result};

/// The cartesian sum of a list of digraphs together with the bijection
/// between product indices and coordinate tuples.
///
/// Tuples are indexed in lexicographic order, first coordinate most
/// significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianSum {
    pub digraph: Digraph,
    radices: Vec<usize>,
}

impl CartesianSum {
    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut coords = vec![0; self.radices.len()];
        for (slot, &r) in coords.iter_mut().zip(&self.radices).rev() {
            *slot = index % r;
            index /= r;
        }
        coords
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().zip(&self.radices).fold(0, |acc, (&x, &r)| acc * r + x)
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.digraph.order()).map(|i| self.tuple(i))
    }
}

/// Tuples move along exactly one factor arc at a time.
pub fn cartesian_sum(factors: &[Digraph]) -> Result<CartesianSum> {
    if factors.is_empty() {
        return Err(Error::Input("cartesian sum needs at least one factor".into()));
    }
    if let Some(i) = factors.iter().position(|f| f.order() == 0) {
        return Err(Error::Input(format!("factor {i} is empty")));
    }
    let radices: Vec<usize> = factors.iter().map(Digraph::order).collect();
    let order = radices
        .iter()
        .try_fold(1usize, |acc, &r| acc.checked_mul(r))
        .ok_or_else(|| Error::Input("cartesian sum is too large".into()))?;
    let shell = CartesianSum { digraph: Digraph::empty(0), radices };
    let mut arcs = Vec::new();
    for index in 0..order {
        let tuple = shell.tuple(index);
        for (j, factor) in factors.iter().enumerate() {
            for &next in factor.successors(tuple[j]) {
                let mut moved = tuple.clone();
                moved[j] = next;
                arcs.push((index, shell.index(&moved)));
            }
        }
    }
    Ok(CartesianSum { digraph: Digraph::new(order, arcs)?, ..shell })
}

/// Ordinary integer sum of coordinate values.
pub fn sum_semi_grundy(factors: &[Digraph], funcs: &[ValueMap]) -> Result<ValueMap> {
    if factors.len() != funcs.len() {
        return Err(Error::LengthMismatch { expected: factors.len(), found: funcs.len() });
    }
    for (i, (f, s)) in factors.iter().zip(funcs).enumerate() {
        if !is_semi_grundy(f, s) {
            return Err(Error::Contract(format!("function {i} is not semi-Grundy on its factor")));
        }
    }
    let sum = cartesian_sum(factors)?;
    let values = sum
        .tuples()
        .map(|t| t.iter().zip(funcs).map(|(&x, s)| s.get(x)).sum())
        .collect();
    Ok(ValueMap::new(values))
}
