//! Truncated multivariate series for the local-type generating function.

mod cf;
mod poly;
mod words;

pub use cf::{cf_all_ones, cf_series, cf_series_with_height, default_height};
pub use poly::{MarkerLayout, MarkerVariable, Monomial, TruncatedSeries};
pub use words::{expand_words, words_image, LabeledLetter, LabeledWord, StepKind};

use num_bigint::BigInt;

use crate::bijections::VariantMap;
use crate::enumerate::{
    enum_stirling_with_prefix, history_prefixes, insertion_capacities, ObjectClass,
};
use crate::error::Result;
use crate::localtypes::local_types;
use crate::parallel::{map_reduce, Execution};

/// `Σ_σ t^N Π_i z(L_i(σ))` over all k-Stirling permutations of size `N`, by
/// direct classification of every permutation.
pub fn brute_force_type_gf(n: usize, k: usize) -> Result<TruncatedSeries> {
    brute_force_type_gf_with(n, k, Execution::best())
}

pub fn brute_force_type_gf_with(n: usize, k: usize, exec: Execution) -> Result<TruncatedSeries> {
    let caps = insertion_capacities(ObjectClass::Stirling, n, k)?;
    let prefixes = history_prefixes(&caps, 3);
    let layout = MarkerLayout::full(k);
    let map = VariantMap::new(k);
    let max_deg = n as u32;
    let zero = || TruncatedSeries::zero(layout.clone(), max_deg);
    let part = |prefix: &Vec<usize>| {
        let mut z = vec![0u32; layout.len()];
        let mut acc = zero();
        for sigma in enum_stirling_with_prefix(n, k, prefix).expect("k checked above") {
            z.iter_mut().for_each(|e| *e = 0);
            for ty in local_types(&sigma) {
                let marker = layout.marker_for_type(&map, ty);
                z[layout.index_of(marker).expect("marker in layout")] += 1;
            }
            let term =
                TruncatedSeries::monomial(layout.clone(), max_deg, BigInt::from(1), max_deg, &z)
                    .expect("layout-sized exponent vector");
            acc = acc.add(&term);
        }
        acc
    };
    Ok(map_reduce(&prefixes, exec, zero, part, |a, b| a.add(&b)))
}
