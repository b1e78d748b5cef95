//! Continued-fraction evaluation of the local-type generating function.
//!
//! `S_i` is the commutative image of the series of labeled paths that start
//! and end at height `i`, never go below `i`, and stay at most `h - i` above
//! it. Splitting a path at its returns to height `i` gives
//!
//! ```text
//! S_i = ( γ_i + Σ_{l=1..k} α_{i,l} · Π_{m=1..l} S_{i+m} β_{i+m} )^*
//! γ_i   = (i+1) t Σ_v z[1,v]          level step at height i
//! α_i,l = (i+1) t Σ_v z[l+1,v]        rise by l from height i
//! β_j   = (j+1) t z[0,1]              fall from height j
//! ```
//!
//! where `x^*` is the quasi-inverse and `S_j = 0` for `j > h`. The weight
//! `(j+1)` counts the possibility choices of a step starting at height `j`.

use num_bigint::BigInt;

use super::poly::{MarkerLayout, TruncatedSeries};
use crate::bijections::VariantMap;

/// `C_0` truncated at `t^max_deg`, computed with height bound `k · max_deg`.
pub fn cf_series(k: usize, max_deg: u32) -> TruncatedSeries {
    cf_series_with_height(k, max_deg, default_height(k, max_deg))
}

pub fn default_height(k: usize, max_deg: u32) -> usize {
    k * max_deg as usize
}

/// `C_0^{[h]}` truncated at `t^max_deg`.
pub fn cf_series_with_height(k: usize, max_deg: u32, h: usize) -> TruncatedSeries {
    evaluate(MarkerLayout::full(k), max_deg, h)
}

/// Coefficients of `C_0` at all markers equal to one, evaluated directly in
/// the specialised ring.
pub fn cf_all_ones(k: usize, max_deg: u32) -> Vec<BigInt> {
    evaluate(
        MarkerLayout::unmarked(k),
        max_deg,
        default_height(k, max_deg),
    )
    .all_ones_coefficients()
}

/// Largest degree of `S_i` that can still reach `t^max_deg` in `S_0`: a path
/// visiting height `i` spends at least `⌈i/k⌉` rises and `i` falls outside
/// the excursion above `i`.
fn level_budget(k: usize, max_deg: u32, i: usize) -> Option<u32> {
    let spent = i + i.div_ceil(k);
    (max_deg as usize).checked_sub(spent).map(|b| b as u32)
}

fn evaluate(layout: MarkerLayout, max_deg: u32, h: usize) -> TruncatedSeries {
    let k = layout.k();
    let map = VariantMap::new(k);
    // levels[i] = S_i, or None where S_i can no longer contribute
    let mut levels: Vec<Option<TruncatedSeries>> = vec![None; h + 1];
    for i in (0..=h).rev() {
        let Some(budget) = level_budget(k, max_deg, i) else {
            continue;
        };
        let weight = i as u64 + 1;
        let mut kernel =
            TruncatedSeries::weighted_marker_sum(&layout, budget, weight, 1, map.variant_count(0));
        for l in 1..=k {
            if i + l > h {
                break;
            }
            let mut term = TruncatedSeries::weighted_marker_sum(
                &layout,
                budget,
                weight,
                l + 1,
                map.variant_count(l),
            );
            for m in 1..=l {
                let j = i + m;
                let Some(inner) = &levels[j] else {
                    term = TruncatedSeries::zero(layout.clone(), budget);
                    break;
                };
                let fall =
                    TruncatedSeries::weighted_marker_sum(&layout, budget, j as u64 + 1, 0, 1);
                term = term
                    .mul_truncated(&inner.clone().with_max_deg(budget), budget)
                    .mul_truncated(&fall, budget);
            }
            kernel = kernel.add(&term);
        }
        levels[i] = Some(kernel.quasi_inverse());
    }
    levels[0]
        .take()
        .expect("level 0 always has a budget")
        .with_max_deg(max_deg)
}
