use std::collections::HashSet;

use super::Element;
use crate::error::{Error, Result};

/// Monge-Elkan over atomic elements: the fraction of elements of `a` that
/// occur somewhere in `b`. Not symmetric.
pub fn monge_elkan_seq(a: &[Element], b: &[Element]) -> Result<f64> {
    if a.is_empty() {
        return Err(Error::EmptyLeftOperand);
    }
    if b.is_empty() {
        return Ok(0.0);
    }
    let present: HashSet<Element> = b.iter().copied().collect();
    let hits = a.iter().filter(|e| present.contains(e)).count();
    Ok(hits as f64 / a.len() as f64)
}

/// Jaccard index of the two element sets.
pub fn jaccard2(a: &[Element], b: &[Element]) -> f64 {
    let sa: HashSet<Element> = a.iter().copied().collect();
    let sb: HashSet<Element> = b.iter().copied().collect();
    let union = sa.union(&sb).count();
    if union == 0 {
        return 1.0;
    }
    sa.intersection(&sb).count() as f64 / union as f64
}
