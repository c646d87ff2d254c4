//! The `R_n` family: digraphs carrying two Grundy functions whose maxima
//! are 1 and `n`.
//!
//! Vertex `x̄_p` (residue `x` mod 4, level `0 <= p <= n`) has dense index
//! `4p + x`. Level `m + 1` sends `x̄_{m+1}` to every `x̄_{m-2i}` and to every
//! `(x+1)‾_{m-2i-1}`. The base `R_2` is the rule-generated digraph on levels
//! 0..=2 plus the arcs `1̄_0 → 1̄_1` and `3̄_0 → 3̄_1`, which give the odd level-0
//! vertices the successor of parity value 0 they need.

use crate::checkers::is_grundy;
use crate::digraph::{Digraph, ValueMap};
use crate::error::{Error, Result};
use crate::solvers::enumerate_grundy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RnVertex {
    pub residue: usize,
    pub level: usize,
}

impl RnVertex {
    pub fn index(self) -> usize {
        4 * self.level + self.residue
    }

    pub fn from_index(i: usize) -> Self {
        RnVertex { residue: i % 4, level: i / 4 }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Input(format!("R_n is defined for n >= 2, got {n}")));
    }
    Ok(())
}

/// Arcs leaving level `m + 1`.
fn level_arcs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..4).flat_map(move |x| {
        let tail = RnVertex { residue: x, level: m + 1 }.index();
        let same = (0..=m).rev().step_by(2).map(move |p| RnVertex { residue: x, level: p });
        let shifted = (0..m).rev().step_by(2).map(move |p| RnVertex { residue: (x + 1) % 4, level: p });
        same.chain(shifted).map(move |v| (tail, v.index()))
    })
}

pub fn build_rn(n: usize) -> Result<Digraph> {
    check_n(n)?;
    let order = 4 * (n + 1);
    let repair = [(1, 1), (3, 1)]
        .into_iter()
        .map(|(x, p)| (RnVertex { residue: x, level: 0 }.index(), RnVertex { residue: x, level: p }.index()));
    let arcs: Vec<(usize, usize)> = (0..n).flat_map(level_arcs).chain(repair).collect();
    let labels = (0..order)
        .map(|i| {
            let v = RnVertex::from_index(i);
            format!("{}_{}", v.residue, v.level)
        })
        .collect();
    let d = Digraph::new(order, arcs)?.with_labels(labels)?;
    if n == 2 {
        assert!(is_grundy(&d, &rn_g1(2)?) && is_grundy(&d, &rn_g2(2)?), "R_2 base must carry both functions");
    }
    Ok(d)
}

/// Parity labeling `(x + p) mod 2`.
pub fn rn_g1(n: usize) -> Result<ValueMap> {
    check_n(n)?;
    Ok(ValueMap::new(
        (0..4 * (n + 1))
            .map(|i| {
                let v = RnVertex::from_index(i);
                (v.residue + v.level) % 2
            })
            .collect(),
    ))
}

/// Level labeling `p`.
pub fn rn_g2(n: usize) -> Result<ValueMap> {
    check_n(n)?;
    Ok(ValueMap::new((0..4 * (n + 1)).map(|i| RnVertex::from_index(i).level).collect()))
}

/// Largest difference between the maxima of two Grundy functions of `d`,
/// or `None` when `d` has no Grundy function.
pub fn grundy_gap(d: &Digraph) -> Result<Option<usize>> {
    let maxima: Vec<usize> = enumerate_grundy(d)?
        .iter()
        .map(|g| g.max_value().unwrap_or(0))
        .collect();
    let (Some(hi), Some(lo)) = (maxima.iter().max(), maxima.iter().min()) else {
        return Ok(None);
    };
    Ok(Some(hi - lo))
}
