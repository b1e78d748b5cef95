//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use kstirling::bijections::{
    enum_kary_diagrams, enum_port_diagrams, pathdiagram_to_tree, port_pathdiagram_to_tree,
    port_tree_to_pathdiagram, tree_to_pathdiagram,
};
use kstirling::enumerate::{enum_kary_trees, enum_ports, enum_stirling, random_object};
use kstirling::series::{
    brute_force_type_gf, cf_series, cf_series_with_height, expand_words, LabeledLetter,
    LabeledWord, StepKind,
};
use kstirling::stats::{block_profile, equidistribution_report};
use kstirling::{
    count_port, count_stirling, local_types, node_types, perm_to_tree, tree_to_perm,
    KStirlingPermutation, KaryIncreasingTree, ObjectClass,
};

struct Outcome {
    passed: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            passed: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.passed = false;
            self.notes.push(format!("failed: {}", what.into()));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn word(s: &str) -> Vec<u32> {
    s.chars().map(|c| c.to_digit(10).unwrap()).collect()
}

fn perm(s: &str, k: usize) -> KStirlingPermutation {
    KStirlingPermutation::new(word(s), k).unwrap()
}

fn digits(sigma: &KStirlingPermutation) -> String {
    sigma.word().iter().map(|d| d.to_string()).collect()
}

// Oracle: Stirling words by filtering all rearrangements of 1^k … n^k.
fn filtered_stirling_count(n: usize, k: usize) -> usize {
    fn rec(counts: &mut [usize], w: &mut Vec<u32>, k: usize, out: &mut usize) {
        if counts.iter().all(|&c| c == k) {
            let ok = (1..=counts.len() as u32).all(|x| {
                let a = w.iter().position(|&y| y == x).unwrap();
                let b = w.iter().rposition(|&y| y == x).unwrap();
                w[a..=b].iter().all(|&y| y >= x)
            });
            *out += ok as usize;
            return;
        }
        for x in 0..counts.len() {
            if counts[x] < k {
                counts[x] += 1;
                w.push(x as u32 + 1);
                rec(counts, w, k, out);
                w.pop();
                counts[x] -= 1;
            }
        }
    }
    let mut out = 0;
    rec(&mut vec![0; n], &mut Vec::new(), k, &mut out);
    out
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let mut objects = 0usize;
    for k in 1..=3 {
        for n in 0..=6 {
            let all: Vec<_> = enum_stirling(n, k).unwrap().collect();
            objects += all.len();
            let distinct: HashSet<_> = all.iter().collect();
            o.check(
                BigUint::from(all.len()) == count_stirling(n, k) && distinct.len() == all.len(),
                format!("enumeration size n={n} k={k}"),
            );
            if n * k <= 9 {
                o.check(
                    filtered_stirling_count(n, k) == all.len(),
                    format!("rearrangement filter n={n} k={k}"),
                );
            }
        }
    }
    let two: HashSet<String> = enum_stirling(2, 3).unwrap().map(|s| digits(&s)).collect();
    let want: HashSet<String> = ["111222", "112221", "122211", "222111"]
        .into_iter()
        .map(String::from)
        .collect();
    o.check(
        count_stirling(2, 3) == BigUint::from(4u32),
        "count_stirling(2,3) = 4",
    );
    o.check(two == want, "Q_2(3) is the listed set");
    for n in 0..=8 {
        o.check(
            count_port(n + 1).unwrap() == count_stirling(n, 2),
            format!("count_port({}) = count_stirling({n},2)", n + 1),
        );
    }
    o.note(format!("{objects} objects enumerated"));
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let mut checked = 0usize;
    for k in 1..=3 {
        for n in 0..=5 {
            for sigma in enum_stirling(n, k).unwrap() {
                let t = perm_to_tree(&sigma);
                o.check(tree_to_perm(&t) == sigma, format!("k={k} σ={sigma}"));
                o.check(
                    perm_to_tree(&tree_to_perm(&t)) == t,
                    format!("k={k} tree of σ={sigma}"),
                );
                checked += 1;
            }
            let mut image = HashSet::new();
            for t in enum_kary_trees(n, k).unwrap() {
                image.insert(tree_to_perm(&t));
            }
            o.check(
                BigUint::from(image.len()) == count_stirling(n, k),
                format!("tree_to_perm bijective k={k} n={n}"),
            );
        }
    }
    o.note(format!("{checked} round trips"));
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let mut checked = 0usize;
    for k in 1..=3 {
        for n in 0..=5 {
            for t in enum_kary_trees(n, k).unwrap() {
                let l = local_types(&tree_to_perm(&t));
                o.check(l == node_types(&t), format!("k={k} tree {t}"));
                checked += 1;
            }
        }
    }
    o.note(format!("{checked} trees"));
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let strings =
        |v: Vec<kstirling::LocalType>| v.iter().map(|t| t.to_string()).collect::<Vec<_>>();

    let tau = strings(local_types(&perm("2534716", 1)));
    o.check(
        tau == ["11", "01", "11", "01", "00", "00", "00"],
        format!("τ=2534716 types {tau:?}"),
    );

    let sigma = strings(local_types(&perm("112233321445554666", 3)));
    let printed = ["0011", "0010", "0000", "0010", "0000", "0000"];
    if sigma != printed {
        let diff: Vec<String> = sigma
            .iter()
            .zip(printed)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| format!("L_{} computed {a}, expected {b}", i + 1))
            .collect();
        o.check(
            false,
            format!("σ=112233321445554666 types: {}", diff.join("; ")),
        );
        let tree = perm_to_tree(&perm("112233321445554666", 3));
        o.note(format!(
            "node types of its tree {} agree with the computed list: {}",
            tree,
            strings(node_types(&tree)) == sigma
        ));
    }

    let golden = KaryIncreasingTree::from_slots(
        2,
        vec![
            vec![Some(2), Some(5), Some(3)],
            vec![Some(4), None, Some(7)],
            vec![None; 3],
            vec![None; 3],
            vec![None, None, Some(6)],
            vec![None; 3],
            vec![None; 3],
        ],
    )
    .unwrap();
    let code = perm("44227715566133", 2);
    o.check(tree_to_perm(&golden) == code, "tree → 44227715566133");
    o.check(perm_to_tree(&code) == golden, "44227715566133 → tree");

    let b = block_profile(&perm("221553367788614499", 2)).unwrap();
    let want: BTreeMap<usize, usize> = [(2, 1), (3, 1), (4, 1)].into();
    o.check(b.counts == want, format!("block profile {b}"));
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    let mut diagrams = 0usize;
    for k in 1..=2 {
        for n in 0..=5 {
            let mut image = HashSet::new();
            let all = enum_kary_diagrams(n, k);
            diagrams += all.len();
            for d in &all {
                let t = pathdiagram_to_tree(d, k).unwrap();
                o.check(
                    tree_to_pathdiagram(&t).as_ref() == Ok(d),
                    format!("encode∘decode k={k} {d}"),
                );
                image.insert(t);
            }
            o.check(
                image.len() == all.len(),
                format!("decode injective k={k} n={n}"),
            );
            o.check(
                BigUint::from(image.len()) == count_stirling(n + 1, k),
                format!("image size k={k} n={n}: {}", image.len()),
            );
        }
    }
    for n in 0..=6 {
        let mut image = HashSet::new();
        let all = enum_port_diagrams(n);
        diagrams += all.len();
        for d in &all {
            let t = port_pathdiagram_to_tree(d).unwrap();
            o.check(
                port_tree_to_pathdiagram(&t) == *d,
                format!("PORT encode∘decode {d}"),
            );
            image.insert(t);
        }
        o.check(
            image.len() == all.len(),
            format!("PORT decode injective n={n}"),
        );
        o.check(
            BigUint::from(image.len()) == count_port(n + 1).unwrap(),
            format!("PORT image size n={n}: {}", image.len()),
        );
    }
    o.note(format!("{diagrams} diagrams"));
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let ints = |v: &[u64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    o.check(
        cf_series(2, 4).all_ones_coefficients() == ints(&[1, 3, 15, 105, 945]),
        "k=2 all-ones coefficients",
    );
    o.check(
        cf_series(1, 5).all_ones_coefficients() == ints(&[1, 2, 6, 24, 120, 720]),
        "k=1 all-ones coefficients",
    );
    for (k, top) in [(1usize, 5usize), (2, 4)] {
        for big_n in 1..=top {
            let brute = brute_force_type_gf(big_n, k).unwrap();
            let d = big_n as u32 - 1;
            let cf = cf_series(k, d).homogeneous_component(d).mark_last_leaf();
            o.check(brute == cf, format!("marker level k={k} N={big_n}"));
        }
    }
    for k in 1..=2usize {
        let d = 5u32;
        let full = cf_series(k, d);
        let reach = (0..=d as usize)
            .take_while(|&h| h + h.div_ceil(k) <= d as usize)
            .last()
            .unwrap();
        for h in reach..=reach + 2 {
            o.check(
                cf_series_with_height(k, d, h) == full,
                format!("k={k} stable at h={h}"),
            );
        }
        o.check(
            cf_series_with_height(k, d, reach - 1) != full,
            format!("k={k} h={} is too low", reach - 1),
        );
    }
    o
}

// Oracle: labeled positive paths of length ≤ max_len from height 0 to 0.
fn positive_paths(k: u32, max_len: usize) -> Vec<LabeledWord> {
    let mut out = Vec::new();
    let mut stack: Vec<(u32, Vec<LabeledLetter>)> = vec![(0, Vec::new())];
    while let Some((y, w)) = stack.pop() {
        if y == 0 {
            out.push(LabeledWord(w.clone()));
        }
        if w.len() == max_len {
            continue;
        }
        let mut moves = vec![(StepKind::Level, y)];
        if y > 0 {
            moves.push((StepKind::Fall, y - 1));
        }
        moves.extend((1..=k).map(|l| (StepKind::Rise(l), y + l)));
        for (kind, next) in moves {
            if (next as usize) < max_len - w.len() {
                let mut w2 = w.clone();
                w2.push(LabeledLetter { kind, height: y });
                stack.push((next, w2));
            }
        }
    }
    out.sort();
    out
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    for k in 1..=2usize {
        for len in 0..=6usize {
            match expand_words(k, k * len, len) {
                Ok(words) => {
                    let oracle = positive_paths(k as u32, len);
                    o.check(
                        words == oracle,
                        format!(
                            "k={k} len≤{len}: {} words vs {} paths",
                            words.len(),
                            oracle.len()
                        ),
                    );
                    if len == 6 {
                        o.note(format!("k={k}: {} words", words.len()));
                    }
                }
                Err(e) => o.check(false, format!("k={k} len≤{len}: {e}")),
            }
        }
    }
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    let reports: Vec<_> = (1..=6)
        .map(|n| equidistribution_report(n, 3).unwrap())
        .collect();
    let node_sized = reports
        .iter()
        .all(|r| r.supplementary.iter().all(|c| c.equal()));
    o.note(format!(
        "left-right components with j nodes vs outdegree j, all j, n ≤ 6: {}",
        if node_sized { "equal" } else { "differ" }
    ));
    for r in &reports {
        for c in r.failures() {
            o.check(false, format!("n={} {c}", r.n));
        }
    }
    // independent outdegree tally for the PORT side at n + 1 = 7
    let mut outdeg: HashMap<(usize, usize), u64> = HashMap::new();
    for t in enum_ports(7).unwrap() {
        let mut per = [0usize; 8];
        for v in 1..=7u32 {
            per[t.children(v).len()] += 1;
        }
        for (j, &c) in per.iter().enumerate().skip(3) {
            *outdeg.entry((j, c)).or_insert(0) += 1;
        }
    }
    let r = equidistribution_report(6, 3).unwrap();
    for c in r.claimed.iter().filter(|c| c.name == "block_vs_outdeg") {
        for (&v, &cnt) in &c.right {
            o.check(
                outdeg.get(&(c.j_right, v)).copied().unwrap_or(0) == cnt,
                format!("independent PORT tally j={} value={v}", c.j_right),
            );
        }
    }
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    let samples = 10_000u64;
    for class in [ObjectClass::Stirling, ObjectClass::Kary, ObjectClass::Port] {
        let cells = match class {
            ObjectClass::Port => 15usize,
            _ => 105,
        };
        let mut hist: HashMap<String, u64> = HashMap::new();
        for seed in 0..samples {
            let x = random_object(class, 4, 2, seed).unwrap();
            *hist.entry(x.to_string()).or_insert(0) += 1;
        }
        o.check(
            hist.len() == cells,
            format!("{class}: {} distinct of {cells}", hist.len()),
        );
        let e = samples as f64 / cells as f64;
        let chi2: f64 = hist
            .values()
            .map(|&c| (c as f64 - e).powi(2) / e)
            .sum::<f64>()
            + (cells - hist.len()) as f64 * e;
        let q = ChiSquared::new((cells - 1) as f64)
            .unwrap()
            .inverse_cdf(0.999);
        o.check(chi2 < q, format!("{class}: χ²={chi2:.2} ≥ {q:.2}"));
        o.note(format!("{class}: χ²={chi2:.2} < {q:.2}"));
        for seed in [0, 1, 12345, u64::MAX] {
            let a = random_object(class, 4, 2, seed).unwrap();
            let b = random_object(class, 4, 2, seed).unwrap();
            o.check(a == b, format!("{class}: seed {seed} not deterministic"));
        }
    }
    o
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("counting", criterion_1),
        ("gessel bijection round trips", criterion_2),
        ("local types equal node types", criterion_3),
        ("worked examples", criterion_4),
        ("path diagrams", criterion_5),
        ("continued fraction", criterion_6),
        ("word-level expansion", criterion_7),
        (
            "outdegree / left-right / block equidistribution",
            criterion_8,
        ),
        ("uniform sampling", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        println!(
            "criterion {} ({name}): {} [{secs:.1}s]",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" }
        );
        const SHOWN: usize = 12;
        for n in o.notes.iter().take(SHOWN) {
            println!("    {n}");
        }
        if o.notes.len() > SHOWN {
            println!("    … {} more", o.notes.len() - SHOWN);
        }
        failed += !o.passed as usize;
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
