//! Tree-expander series: exact spanning-tree counts along a graph family,
//! the per-point root t^(1/(order-1)), and a tail-minimum estimate of the
//! limiting root c_d.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::families::{Family, FamilyError};
use crate::spectral;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExpanderError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("closed form disagrees with exact elimination at index {index}: {closed} vs {exact}")]
    ClosedFormMismatch { index: usize, closed: String, exact: String },
    #[error("series has {points} points, need at least {needed}")]
    InsufficientPoints { points: usize, needed: usize },
}

/// One family member: exact count, growth root, and spectral gap.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesPoint {
    pub index: usize,
    pub order: usize,
    pub size: usize,
    /// Exact spanning-tree count, decimal string.
    pub tree_count: String,
    /// t^(1/(order-1)).
    pub root: f64,
    /// Smallest nonzero Laplacian eigenvalue.
    pub x1: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExpanderSeries {
    pub label: String,
    pub points: Vec<SeriesPoint>,
}

/// Builds the series for `make(index)` over the given indices. Tree counts
/// come from exact elimination; where the family carries a closed form the
/// two are required to agree exactly.
pub fn series(
    label: &str,
    indices: &[usize],
    make: impl Fn(usize) -> Family,
) -> Result<ExpanderSeries, ExpanderError> {
    let mut points = Vec::with_capacity(indices.len());
    for &index in indices {
        let family = make(index);
        let g = family.build()?;
        let exact = spectral::tree_count_exact(&g);
        if let Some(closed) = family.tree_count_closed_form() {
            if closed != exact {
                return Err(ExpanderError::ClosedFormMismatch {
                    index,
                    closed: closed.to_string(),
                    exact: exact.to_string(),
                });
            }
        }
        let spectrum = spectral::eigenvalues(&g, 1e-10).expect("symmetric eigensolver converges");
        points.push(SeriesPoint {
            index,
            order: g.order(),
            size: g.size(),
            root: root_of(&exact, g.order()),
            x1: spectrum.values[1],
            tree_count: exact.to_string(),
        });
    }
    Ok(ExpanderSeries { label: label.to_string(), points })
}

/// t^(1/(order-1)) through a big-integer logarithm, good to well over 30
/// significant bits even when t has hundreds of digits.
pub fn root_of(tree_count: &BigUint, order: usize) -> f64 {
    if order <= 1 {
        return 1.0;
    }
    (big_ln(tree_count) / (order - 1) as f64).exp()
}

/// Natural log of a positive big integer: mantissa from the top bits plus
/// an exact power-of-two offset.
pub fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 53 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_f64().expect("53-bit mantissa");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Tail-minimum proxy for the limiting root: the minimum of `root` over the
/// last `tail_count` points. An estimate, not the limit itself.
pub fn limiting_root_estimate(
    series: &ExpanderSeries,
    tail_count: usize,
) -> Result<f64, ExpanderError> {
    if tail_count == 0 || series.points.len() < tail_count {
        return Err(ExpanderError::InsufficientPoints {
            points: series.points.len(),
            needed: tail_count.max(1),
        });
    }
    Ok(series.points[series.points.len() - tail_count..]
        .iter()
        .map(|p| p.root)
        .fold(f64::INFINITY, f64::min))
}
