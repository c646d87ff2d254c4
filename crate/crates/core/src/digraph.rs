//! Dense-index digraphs, vertex subsets and vertex labelings.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of `0..order` stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    order: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        VertexSet { order, words: vec![0; order.div_ceil(WORD)] }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        for v in 0..order {
            s.insert(v);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, indices: I) -> Result<Self> {
        let mut s = Self::empty(order);
        for v in indices {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from the low `order` bits of `mask`. Requires `order <= 64`.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        assert!(order <= WORD, "from_mask needs order <= 64");
        let mut s = Self::empty(order);
        if order > 0 {
            s.words[0] = mask & low_bits(order);
        }
        s
    }

    /// The set as a single word, when the universe fits in one.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.order, "vertex {v} outside 0..{}", self.order);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.order {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        if let Some(last) = s.words.last_mut() {
            let rem = self.order % WORD;
            if rem != 0 {
                *last &= low_bits(rem);
            }
        }
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.order, other.order, "vertex sets over different universes");
        VertexSet {
            order: self.order,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= WORD {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A total labeling of the vertices by natural numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueMap(Vec<usize>);

impl ValueMap {
    pub fn new(values: Vec<usize>) -> Self {
        ValueMap(values)
    }

    pub fn constant(order: usize, value: usize) -> Self {
        ValueMap(vec![value; order])
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn max_value(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    pub fn min_value(&self) -> Option<usize> {
        self.0.iter().copied().min()
    }

    /// Vertices carrying `value`.
    pub fn class(&self, value: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.0.len());
        for (v, &x) in self.0.iter().enumerate() {
            if x == value {
                s.insert(v);
            }
        }
        s
    }

    /// Distinct values in increasing order.
    pub fn image(&self) -> Vec<usize> {
        self.0.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// True when the image is exactly `0..=max`.
    pub fn is_normalized(&self) -> bool {
        let image = self.image();
        image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub(crate) fn check_len(&self, order: usize) -> Result<()> {
        if self.0.len() != order {
            return Err(Error::LengthMismatch { expected: order, found: self.0.len() });
        }
        Ok(())
    }
}

impl From<Vec<usize>> for ValueMap {
    fn from(values: Vec<usize>) -> Self {
        ValueMap(values)
    }
}

/// Smallest natural number not in `values`.
pub fn mex<I: IntoIterator<Item = usize>>(values: I) -> usize {
    let values: Vec<usize> = values.into_iter().collect();
    // the answer never exceeds the number of values
    let mut seen = vec![false; values.len() + 1];
    for x in values {
        if x < seen.len() {
            seen[x] = true;
        }
    }
    seen.iter().position(|&b| !b).expect("at least one slot stays empty")
}

/// A finite digraph on dense vertex indices `0..order`.
///
/// Arcs form a set; self-loops are allowed and read literally by every
/// checker.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    order: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    out_sets: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    /// Builds a digraph, silently dropping repeated arcs.
    pub fn new<I>(order: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (tail, head) in arcs {
            if tail >= order || head >= order {
                return Err(Error::ArcOutOfRange { tail, head, order });
            }
            set.insert((tail, head));
        }
        let mut out = vec![Vec::new(); order];
        let mut inn = vec![Vec::new(); order];
        let mut out_sets = vec![VertexSet::empty(order); order];
        for &(t, h) in &set {
            out[t].push(h);
            inn[h].push(t);
            out_sets[t].insert(h);
        }
        Ok(Digraph { order, arcs: set.into_iter().collect(), out, inn, out_sets, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::LengthMismatch { expected: self.order, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn empty(order: usize) -> Self {
        Digraph::new(order, []).expect("no arcs")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in increasing `(tail, head)` order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label, or its index.
    pub fn name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Out-neighbors in increasing order.
    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn successor_set(&self, v: usize) -> &VertexSet {
        &self.out_sets[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.out_sets[tail].contains(head)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_arc(v, v)
    }

    /// Out-neighborhoods as single-word masks; `None` above 64 vertices.
    pub fn out_masks(&self) -> Option<Vec<u64>> {
        self.out_sets.iter().map(VertexSet::as_mask).collect()
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    /// `D[X]`, reindexed densely in increasing vertex order, with the
    /// old-to-new map (`None` for vertices outside `X`).
    pub fn induced_subdigraph(&self, subset: &VertexSet) -> (Digraph, Vec<Option<usize>>) {
        assert_eq!(subset.order(), self.order, "subset over a different universe");
        let mut map = vec![None; self.order];
        let mut kept = Vec::new();
        for v in subset.iter() {
            map[v] = Some(kept.len());
            kept.push(v);
        }
        let arcs = self.arcs.iter().filter_map(|&(t, h)| Some((map[t]?, map[h]?)));
        let mut sub = Digraph::new(kept.len(), arcs).expect("reindexed arcs stay in range");
        if let Some(labels) = &self.labels {
            sub.labels = Some(kept.iter().map(|&v| labels[v].clone()).collect());
        }
        (sub, map)
    }

    /// No arc has both endpoints in `set`; a looped member breaks independence.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.out_sets[v].intersects(set))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph").field("order", &self.order).field("arcs", &self.arcs).finish()
    }
}
