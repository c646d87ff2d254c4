//! Constructive algorithms producing Grundy and semi-Grundy functions.

mod layering;
mod product;
mod sum;

pub use layering::{layered_grundy, layered_semi_grundy, Layering};
pub use product::{
    cartesian_product, extract_factors, product_bound_check, product_semi_grundy_kp,
    stratified_product_semi_grundy, FamilyAssignment, LayeringTrace, Stage,
};
pub use sum::{cartesian_sum, sum_semi_grundy, CartesianSum};

use crate::digraph::ValueMap;

/// Order-preserving relabeling onto `0..r`: the k-th smallest value maps to k.
pub fn normalize(s: &ValueMap) -> ValueMap {
    let image = s.image();
    let ranked = s
        .values()
        .iter()
        .map(|x| image.binary_search(x).expect("value is in the image"))
        .collect();
    ValueMap::new(ranked)
}
