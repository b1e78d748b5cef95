//! Self-contained verification suites.
//!
//! Each suite checks a family of properties exhaustively up to a size bound
//! and reports one [`PropertyResult`] per property, with the number of cases
//! checked and the first counterexample if any.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

use crate::bijections::{
    enum_kary_diagrams, enum_port_diagrams, pathdiagram_to_tree, perm_to_tree,
    port_pathdiagram_to_tree, port_tree_to_pathdiagram, tree_to_pathdiagram, tree_to_perm,
};
use crate::count::{count_kary_trees, count_port, count_stirling};
use crate::enumerate::{enum_kary_trees, enum_ports, enum_stirling};
use crate::localtypes::{classic_name, local_types, node_types, ClassicType};
use crate::oracle;
use crate::parallel::{map_collect, Execution};
use crate::perm::KStirlingPermutation;
use crate::series::{
    brute_force_type_gf_with, cf_all_ones, cf_series, cf_series_with_height, expand_words,
    words_image,
};
use crate::stats::{
    block_profile, equidistribution_report_with, lr_profile, outdegree_profile,
    pointwise_block_lr_agreement,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Counts,
    Gessel,
    Types,
    PathDiagram,
    Series,
    Words,
    Stats,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Counts,
        Suite::Gessel,
        Suite::Types,
        Suite::PathDiagram,
        Suite::Series,
        Suite::Words,
        Suite::Stats,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Gessel => "gessel",
            Suite::Types => "types",
            Suite::PathDiagram => "pathdiagram",
            Suite::Series => "series",
            Suite::Words => "words",
            Suite::Stats => "stats",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
    /// Informational lines do not affect the verdict.
    pub informational: bool,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.informational || self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            let verdict = match (p.informational, p.failures) {
                (true, _) => "INFO",
                (false, 0) => "PASS",
                _ => "FAIL",
            };
            write!(
                f,
                "{verdict} {}/{} checked={} failures={}",
                self.suite, p.name, p.checked, p.failures
            )?;
            if let Some(ex) = &p.first_failure {
                write!(f, " first: {ex}")?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "{} suite {} (max_n={})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.max_n
        )
    }
}

/// Accumulates cases for one property.
struct Check {
    name: String,
    checked: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn done(self) -> PropertyResult {
        PropertyResult {
            name: self.name,
            checked: self.checked,
            failures: self.failures,
            first_failure: self.first_failure,
            informational: false,
        }
    }
}

pub fn run_suite(suite: Suite, max_n: usize, exec: Execution) -> SuiteReport {
    let properties = match suite {
        Suite::Counts => counts(max_n),
        Suite::Gessel => gessel(max_n),
        Suite::Types => types(max_n),
        Suite::PathDiagram => path_diagrams(max_n),
        Suite::Series => series(max_n, exec),
        Suite::Words => words(max_n),
        Suite::Stats => stats(max_n, exec),
    };
    SuiteReport {
        suite,
        max_n,
        properties,
    }
}

/// Runs the given suites, in parallel when `exec` allows, and returns the
/// reports in input order.
pub fn run_suites(suites: &[Suite], max_n: usize, exec: Execution) -> Vec<SuiteReport> {
    map_collect(suites, exec, |&s| run_suite(s, max_n, exec))
}

fn counts(max_n: usize) -> Vec<PropertyResult> {
    let mut by_enum = Check::new("count_stirling_matches_enumeration");
    let mut by_filter = Check::new("count_stirling_matches_rearrangement_filter");
    let mut trees = Check::new("count_kary_matches_enumeration");
    for k in 1..=3 {
        for n in 0..=max_n.min(6) {
            let want = count_stirling(n, k);
            let got = enum_stirling(n, k).expect("k ≥ 1").count();
            by_enum.case(BigUint::from(got) == want, || {
                format!("n={n} k={k}: {got} vs {want}")
            });
            let got = enum_kary_trees(n, k).expect("k ≥ 1").count();
            let want = count_kary_trees(n, k);
            trees.case(BigUint::from(got) == want, || {
                format!("n={n} k={k}: {got} vs {want}")
            });
            if oracle::multinomial(n, k) <= 400_000 {
                let want = count_stirling(n, k);
                let got = oracle::stirling_words_by_filter(n, k).len();
                by_filter.case(BigUint::from(got) == want, || {
                    format!("n={n} k={k}: {got} vs {want}")
                });
            }
        }
    }
    let mut ports = Check::new("count_port_next_equals_ternary");
    let mut port_enum = Check::new("count_port_matches_enumeration");
    for n in 1..=(max_n + 3) {
        let a = count_port(n + 1).expect("n + 1 ≥ 1");
        let b = count_stirling(n, 2);
        ports.case(a == b, || format!("n={n}: {a} vs {b}"));
    }
    for n in 1..=(max_n + 1).min(7) {
        let got = enum_ports(n).expect("n ≥ 1").count();
        let want = count_port(n).expect("n ≥ 1");
        port_enum.case(BigUint::from(got) == want, || {
            format!("n={n}: {got} vs {want}")
        });
    }
    vec![
        by_enum.done(),
        by_filter.done(),
        trees.done(),
        ports.done(),
        port_enum.done(),
    ]
}

fn gessel(max_n: usize) -> Vec<PropertyResult> {
    let mut perm_rt = Check::new("perm_tree_perm_identity");
    let mut tree_rt = Check::new("tree_perm_tree_identity");
    let mut injective = Check::new("tree_to_perm_injective");
    for k in 1..=3 {
        for n in 0..=max_n.min(5) {
            for sigma in enum_stirling(n, k).expect("k ≥ 1") {
                let back = tree_to_perm(&perm_to_tree(&sigma));
                perm_rt.case(back == sigma, || format!("k={k} σ={sigma}"));
            }
            let mut seen = HashSet::new();
            for tree in enum_kary_trees(n, k).expect("k ≥ 1") {
                let sigma = tree_to_perm(&tree);
                injective.case(seen.insert(sigma.clone()), || format!("k={k} σ={sigma}"));
                tree_rt.case(perm_to_tree(&sigma) == tree, || {
                    format!("k={k} tree={tree}")
                });
            }
        }
    }
    vec![perm_rt.done(), tree_rt.done(), injective.done()]
}

fn types(max_n: usize) -> Vec<PropertyResult> {
    let mut equal = Check::new("local_types_equal_node_types");
    let mut totals = Check::new("histogram_total_is_size");
    for k in 1..=3 {
        for n in 0..=max_n.min(5) {
            for tree in enum_kary_trees(n, k).expect("k ≥ 1") {
                let sigma = tree_to_perm(&tree);
                let l = local_types(&sigma);
                equal.case(l == node_types(&tree), || format!("k={k} tree={tree}"));
                totals.case(l.len() == n, || format!("k={k} σ={sigma}"));
            }
        }
    }
    let mut classic = Check::new("classic_shapes_match_direct_classification");
    let mut balance = Check::new("peaks_minus_valleys_is_one");
    for n in 1..=(max_n + 2).min(7) {
        for w in oracle::multiset_permutations(n, 1) {
            let shapes = oracle::ordinary_shapes(&w);
            let peaks = shapes.iter().filter(|&&s| s == 0).count();
            let valleys = shapes.iter().filter(|&&s| s == 1).count();
            balance.case(peaks == valleys + 1, || format!("{w:?}"));
            let sigma = KStirlingPermutation::new(w.clone(), 1).expect("ordinary permutation");
            let ok = local_types(&sigma)
                .into_iter()
                .zip(&shapes)
                .all(|(ty, &code)| {
                    let want = match code {
                        0 => ClassicType::Peak,
                        1 => ClassicType::Valley,
                        2 => ClassicType::DoubleRise,
                        _ => ClassicType::DoubleFall,
                    };
                    classic_name(ty).ok() == Some(want)
                });
            classic.case(ok, || format!("{w:?}"));
        }
    }
    vec![equal.done(), totals.done(), classic.done(), balance.done()]
}

fn path_diagrams(max_n: usize) -> Vec<PropertyResult> {
    let mut image = Check::new("kary_decode_image_size");
    let mut inverse = Check::new("kary_encode_decode_identity");
    for k in 1..=2 {
        for n in 0..=max_n.min(5) {
            let mut seen = HashSet::new();
            for d in enum_kary_diagrams(n, k) {
                match pathdiagram_to_tree(&d, k) {
                    Ok(tree) => {
                        let back = tree_to_pathdiagram(&tree);
                        inverse.case(back.as_ref() == Ok(&d), || format!("k={k} {d}"));
                        seen.insert(tree);
                    }
                    Err(e) => inverse.case(false, || format!("k={k} {d}: {e}")),
                }
            }
            let want = count_stirling(n + 1, k);
            image.case(BigUint::from(seen.len()) == want, || {
                format!("k={k} n={n}: {} trees vs {want}", seen.len())
            });
        }
    }
    let mut port_image = Check::new("port_decode_image_size");
    let mut port_inverse = Check::new("port_encode_decode_identity");
    for n in 0..=(max_n + 1).min(6) {
        let mut seen = HashSet::new();
        for d in enum_port_diagrams(n) {
            match port_pathdiagram_to_tree(&d) {
                Ok(tree) => {
                    port_inverse.case(port_tree_to_pathdiagram(&tree) == d, || d.to_string());
                    seen.insert(tree);
                }
                Err(e) => port_inverse.case(false, || format!("{d}: {e}")),
            }
        }
        let want = count_port(n + 1).expect("n + 1 ≥ 1");
        port_image.case(BigUint::from(seen.len()) == want, || {
            format!("n={n}: {} trees vs {want}", seen.len())
        });
    }
    vec![
        image.done(),
        inverse.done(),
        port_image.done(),
        port_inverse.done(),
    ]
}

fn series(max_n: usize, exec: Execution) -> Vec<PropertyResult> {
    let mut ones = Check::new("all_ones_coefficients_are_counts");
    for k in 1..=3 {
        let d = max_n.min(6) as u32;
        let want: Vec<BigInt> = (0..=d as usize)
            .map(|n| BigInt::from(count_stirling(n + 1, k)))
            .collect();
        let got = cf_all_ones(k, d);
        ones.case(got == want, || format!("k={k}: {got:?} vs {want:?}"));
        let marked = cf_series(k, d.min(4)).all_ones_coefficients();
        ones.case(marked[..] == want[..marked.len()], || {
            format!("k={k} marked: {marked:?}")
        });
    }
    let mut marker = Check::new("marker_level_matches_brute_force");
    for (k, top) in [(1, 5), (2, 4), (3, 3)] {
        for big_n in 1..=top.min(max_n.max(1)) {
            let brute = brute_force_type_gf_with(big_n, k, exec).expect("k ≥ 1");
            let cf = cf_series(k, big_n as u32 - 1)
                .homogeneous_component(big_n as u32 - 1)
                .mark_last_leaf();
            marker.case(brute == cf, || format!("k={k} N={big_n}"));
        }
    }
    let mut stable = Check::new("height_bound_stabilises");
    let mut degree = Check::new("degree_law");
    for k in 1..=2 {
        let d = max_n.min(5) as u32;
        let full = cf_series(k, d);
        degree.case(full.satisfies_degree_law(), || format!("k={k}"));
        // highest level a path of length d can visit and still return
        let h = (0..=d as usize)
            .take_while(|&h| h + h.div_ceil(k) <= d as usize)
            .last()
            .unwrap_or(0);
        let cut = cf_series_with_height(k, d, h);
        stable.case(cut == full, || format!("k={k} h={h}"));
        if h > 0 {
            let low = cf_series_with_height(k, d, h - 1);
            stable.case(low != full, || format!("k={k} h={} already stable", h - 1));
        }
    }
    vec![ones.done(), marker.done(), stable.done(), degree.done()]
}

fn words(max_n: usize) -> Vec<PropertyResult> {
    let mut multiset = Check::new("expansion_matches_positive_paths");
    let mut image = Check::new("expansion_image_matches_series");
    let len = (max_n + 1).min(6);
    for k in 1..=2 {
        let h = k * len;
        match expand_words(k, h, len) {
            Ok(words) => {
                let oracle = oracle::positive_paths(k, h, len);
                multiset.case(words == oracle, || {
                    format!("k={k}: {} words vs {} paths", words.len(), oracle.len())
                });
                let img = words_image(k, &words, len as u32);
                image.case(img == cf_series(k, len as u32), || format!("k={k}"));
            }
            Err(e) => multiset.case(false, || format!("k={k}: {e}")),
        }
    }
    vec![multiset.done(), image.done()]
}

fn stats(max_n: usize, exec: Execution) -> Vec<PropertyResult> {
    let mut laws = Check::new("profile_sum_laws");
    for n in 1..=max_n.min(6) {
        for sigma in enum_stirling(n, 2).expect("k = 2") {
            let b = block_profile(&sigma).expect("k = 2");
            laws.case(!b.counts.contains_key(&0), || format!("block σ={sigma}"));
        }
        for tree in enum_kary_trees(n, 2).expect("k = 2") {
            let p = lr_profile(&tree).expect("k = 2").profile;
            laws.case(p.sums().1 == n, || format!("lr tree={tree}"));
        }
        for tree in enum_ports(n).expect("n ≥ 1") {
            let p = outdegree_profile(&tree);
            laws.case(p.sums() == (n, n - 1), || format!("outdeg tree={tree}"));
        }
    }

    let mut out: Vec<Check> = Vec::new();
    let mut info: Vec<Check> = Vec::new();
    for n in 1..=max_n.min(6) {
        let report = equidistribution_report_with(n, 3, exec).expect("n ≥ 1");
        for c in &report.claimed {
            let slot = match out.iter_mut().position(|x| x.name == c.name) {
                Some(i) => i,
                None => {
                    out.push(Check::new(c.name));
                    out.len() - 1
                }
            };
            out[slot].case(c.equal(), || format!("n={n} {c}"));
        }
        for c in &report.supplementary {
            let slot = match info.iter_mut().position(|x| x.name == c.name) {
                Some(i) => i,
                None => {
                    info.push(Check::new(c.name));
                    info.len() - 1
                }
            };
            info[slot].case(c.equal(), || format!("n={n} {c}"));
        }
    }

    let mut results = vec![laws.done()];
    results.extend(out.into_iter().map(Check::done));
    results.extend(info.into_iter().map(|c| PropertyResult {
        informational: true,
        ..c.done()
    }));
    let (agree, total) = pointwise_block_lr_agreement(max_n.clamp(1, 6)).expect("k = 2");
    results.push(PropertyResult {
        name: "pointwise_block_equals_lr_of_gessel_tree".into(),
        checked: total,
        failures: total - agree,
        first_failure: None,
        informational: true,
    });
    results
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in [
            Suite::Counts,
            Suite::Gessel,
            Suite::Types,
            Suite::PathDiagram,
            Suite::Words,
        ] {
            let r = run_suite(s, 3, Execution::Sequential);
            assert!(r.passed(), "{r}");
        }
    }
}
