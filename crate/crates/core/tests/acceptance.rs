//! Acceptance suite. Runs every criterion, prints one line each and exits
//! non-zero when a criterion fails that is not listed in `KNOWN_GAPS`.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cactus_core::cactus::{
    act_on_decgd, act_on_decgd_word, act_on_syt, act_on_word_boxes, cactus_relations, check_equivariance,
    default_frame_for, orbits, CactusWord,
};
use cactus_core::gaudin::{joint_spectrum, ParameterPoint};
use cactus_core::growth::{decgd_to_syt, enumerate_cgds, enumerate_decgds, generate_cgd, syt_to_decgd, Decgd};
use cactus_core::jdt::{evacuation, partial_evacuation, reading_q_symbol, xi_ssyt, SlideOracle};
use cactus_core::tableaux::{standard_tableaux, syt_count, Partition, RectangleFrame, SkewShape, SkewTableau};
use cactus_core::words::{enumerate_singular, lr_coefficient, p_symbol, q_symbol, rsk, star, Word};
use rayon::prelude::*;

/// Criteria that cannot hold as stated; the line still reports the outcome.
const KNOWN_GAPS: &[(usize, &str)] =
    &[(8, "the action fixes P-symbols, so orbits are P-fibers (Knuth classes), not Q-fibers of the word")];

struct Outcome {
    passed: bool,
    detail: String,
}

fn p(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed <= limit
}

fn figure_reproduction() -> Outcome {
    let start = Instant::now();
    let first: Vec<Partition> =
        [&[][..], &[1], &[1, 1], &[2, 1], &[3, 1], &[3, 2], &[3, 3]].iter().map(|r| p(r)).collect();
    let frame = RectangleFrame::new(2, 5).unwrap();
    let g = generate_cgd(&frame, &SkewTableau::from_chain(&first).unwrap()).unwrap();
    // rows j = 1..=7 of the figure, read eastward from γ_jj
    let a: [&[usize]; 7] = [&[], &[1], &[2], &[2, 1], &[2, 2], &[3, 2], &[3, 3]];
    let b: [&[usize]; 7] = [&[], &[1], &[2], &[3], &[3, 1], &[3, 2], &[3, 3]];
    let c: [&[usize]; 7] = [&[], &[1], &[1, 1], &[2, 1], &[3, 1], &[3, 2], &[3, 3]];
    let figure = [a, b, c, a, b, c, a];
    let mut matched = 0;
    for (row, expected) in figure.iter().enumerate() {
        let j = row as i64 + 1;
        for (t, rows) in expected.iter().enumerate() {
            if g.value(j - t as i64, j).unwrap() == &p(rows) {
                matched += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        passed: matched == 49 && within(elapsed, Duration::from_secs(1)),
        detail: format!("{matched}/49 partitions match, {elapsed:.2?}"),
    }
}

fn compositions(rem: usize, max_parts: usize, frame: &RectangleFrame) -> Vec<Vec<Partition>> {
    if rem == 0 {
        return vec![Vec::new()];
    }
    if max_parts == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for size in 1..=rem {
        for first in Partition::all_in_box(size, frame.r(), frame.cols()) {
            for rest in compositions(rem - size, max_parts - 1, frame) {
                let mut v = vec![first.clone()];
                v.extend(rest);
                out.push(v);
            }
        }
    }
    out
}

fn counting() -> Outcome {
    let start = Instant::now();
    let mut cases = Vec::new();
    for r in 1..=3 {
        for d in r + 1..=6 {
            let frame = RectangleFrame::new(r, d).unwrap();
            if frame.area() <= 8 {
                for shape in compositions(frame.area(), 5, &frame) {
                    cases.push((frame, shape));
                }
            }
        }
    }
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|(frame, shape)| {
            let found = enumerate_decgds(frame, shape, 8).unwrap().len() as u64;
            let expected = lr_coefficient(&frame.lambda(), shape).unwrap();
            (found != expected).then(|| format!("{shape:?}: {found} vs {expected}"))
        })
        .collect();
    let elapsed = start.elapsed();
    Outcome {
        passed: bad.is_empty() && within(elapsed, Duration::from_secs(300)),
        detail: format!("{} shapes, {} mismatches {:?}, {elapsed:.2?}", cases.len(), bad.len(), bad.first()),
    }
}

fn duality() -> Outcome {
    let start = Instant::now();
    let mut total = 0usize;
    let mut bad = 0usize;
    for r in 1..=4 {
        for n in 0..=7 {
            let words = Word::all(n, r);
            total += words.len();
            bad += words
                .par_iter()
                .filter(|w| {
                    let pair = rsk(w);
                    let lhs = rsk(&star(w));
                    lhs.p != xi_ssyt(&pair.p, r).unwrap() || lhs.q != evacuation(&pair.q).unwrap()
                })
                .count();
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        passed: bad == 0 && within(elapsed, Duration::from_secs(120)),
        detail: format!("{total} words, {bad} failures, {elapsed:.2?}"),
    }
}

fn relations() -> Outcome {
    let start = Instant::now();
    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    // tensor words
    for n in 2..=5 {
        let rels = cactus_relations(n);
        for r in 1..=3 {
            let words = Word::all(n, r);
            checks += words.len() * rels.len();
            failures.par_extend(words.par_iter().flat_map_iter(|w| {
                rels.iter()
                    .filter(|(a, b)| act_on_word_boxes(a, w).unwrap() != act_on_word_boxes(b, w).unwrap())
                    .map(|(a, b)| format!("words: {a} vs {b} on {w}"))
                    .collect::<Vec<_>>()
            }));
        }
    }
    // standard tableaux
    for size in 2..=6 {
        let rels = cactus_relations(size);
        for mu in Partition::all_of_size(size) {
            let tabs = standard_tableaux(&SkewShape::straight(mu));
            checks += tabs.len() * rels.len();
            failures.par_extend(tabs.par_iter().flat_map_iter(|t| {
                rels.iter()
                    .filter(|(a, b)| act_on_syt(a, t).unwrap() != act_on_syt(b, t).unwrap())
                    .map(|(a, b)| format!("syt: {a} vs {b}"))
                    .collect::<Vec<_>>()
            }));
        }
    }
    // decgds: every cgd of a frame with r(d - r) <= 8, acted on by J_k
    let mut diagrams: Vec<Decgd> = Vec::new();
    for r in 1..=8 {
        for d in r + 1..=r + 8 {
            let frame = RectangleFrame::new(r, d).unwrap();
            if frame.area() <= 8 && frame.area() >= 2 {
                diagrams.extend(enumerate_cgds(&frame, 8).unwrap().iter().map(|c| Decgd::from_cgd(c).unwrap()));
            }
        }
    }
    let jobs: Vec<(usize, usize)> = diagrams
        .iter()
        .enumerate()
        .flat_map(|(i, g)| (0..cactus_relations(g.period()).len()).map(move |k| (i, k)))
        .collect();
    let rel_cache: BTreeMap<usize, Vec<(CactusWord, CactusWord)>> = (2..=8).map(|k| (k, cactus_relations(k))).collect();
    checks += jobs.len();
    failures.par_extend(jobs.par_iter().filter_map(|&(i, k)| {
        let g = &diagrams[i];
        let (a, b) = &rel_cache[&g.period()][k];
        (act_on_decgd_word(a, g).unwrap() != act_on_decgd_word(b, g).unwrap()).then(|| format!("decgd: {a} vs {b}"))
    }));
    let elapsed = start.elapsed();
    Outcome {
        passed: failures.is_empty() && within(elapsed, Duration::from_secs(300)),
        detail: format!(
            "{checks} relation checks ({} decgds), {} failures {:?}, {elapsed:.2?}",
            diagrams.len(),
            failures.len(),
            failures.first()
        ),
    }
}

fn fundamental_equivariance() -> Outcome {
    let mut checks = 0usize;
    let mut bad = 0usize;
    for n in 1..=6 {
        for r in 1..=n {
            for mu in Partition::all_of_size(n).into_iter().filter(|m| m.num_rows() <= r) {
                for w in enumerate_singular(n, r, mu.rows()).unwrap() {
                    let q0 = q_symbol(w.letters());
                    for q in 2..=n {
                        checks += 1;
                        let out = act_on_word_boxes(&CactusWord::generator(n, 1, q).unwrap(), &w).unwrap();
                        if q_symbol(out.letters()) != partial_evacuation(&q0, q).unwrap() {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    Outcome { passed: bad == 0 && checks > 0, detail: format!("{checks} checks, {bad} failures") }
}

fn all_tuples(total: usize) -> Vec<Vec<Partition>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for size in 1..=total {
        for first in Partition::all_of_size(size) {
            for rest in all_tuples(total - size) {
                let mut v = vec![first.clone()];
                v.extend(rest);
                out.push(v);
            }
        }
    }
    out
}

fn general_equivariance() -> Outcome {
    let mut cases = Vec::new();
    for total in 1..=6 {
        for shape in all_tuples(total) {
            for mu in Partition::all_of_size(total) {
                cases.push((shape.clone(), mu));
            }
        }
    }
    let reports: Vec<_> = cases.par_iter().map(|(shape, mu)| check_equivariance(None, shape, mu).unwrap()).collect();
    let closed =
        check_equivariance(Some(&RectangleFrame::new(2, 5).unwrap()), &[p(&[2, 1]), p(&[1]), p(&[2])], &p(&[3, 3]))
            .unwrap();
    let checks: usize = reports.iter().map(|r| r.checks).sum::<usize>() + closed.checks;
    let nonempty = reports.iter().filter(|r| r.lr_coefficient > 0).count();
    let failed: Vec<String> = reports
        .iter()
        .chain(std::iter::once(&closed))
        .filter(|r| !r.passed())
        .map(|r| format!("{:?} / {}: {}", r.shape, r.mu, r.failures[0]))
        .collect();
    Outcome {
        passed: failed.is_empty(),
        detail: format!(
            "{} cases ({nonempty} with singular vectors), {checks} checks, {} failures {:?}",
            reports.len() + 1,
            failed.len(),
            failed.first()
        ),
    }
}

fn intertwiner() -> Outcome {
    let mut checks = 0usize;
    let mut bad = 0usize;
    for n in 1..=5 {
        for mu in Partition::all_of_size(n) {
            let frame = default_frame_for(&mu).unwrap();
            for t in standard_tableaux(&SkewShape::straight(mu.clone())) {
                let g = syt_to_decgd(&t, &frame).unwrap();
                for q in 2..=n {
                    checks += 1;
                    let lhs = decgd_to_syt(&act_on_decgd(1, q, &g).unwrap()).unwrap();
                    if lhs != partial_evacuation(&t, q).unwrap() {
                        bad += 1;
                    }
                }
            }
        }
    }
    Outcome { passed: bad == 0, detail: format!("{checks} checks, {bad} failures") }
}

type Blocks = BTreeSet<BTreeSet<String>>;
type Criterion = (&'static str, fn() -> Outcome);

fn fibers<K: Ord>(words: &[Word], key: impl Fn(&Word) -> K) -> Blocks {
    let mut map: BTreeMap<K, BTreeSet<String>> = BTreeMap::new();
    for w in words {
        map.entry(key(w)).or_default().insert(w.to_string());
    }
    map.into_values().collect()
}

fn cells() -> Outcome {
    let mut q_ok = true;
    let mut p_ok = true;
    let mut notes = Vec::new();
    for n in 1..=5 {
        let gens: Vec<(usize, usize)> = (2..=n).map(|q| (1, q)).collect();
        let act = |(a, b): (usize, usize), w: &Word| act_on_word_boxes(&CactusWord::generator(n, a, b).unwrap(), w);
        let words = Word::all_of_weight(&vec![1; n]);
        let report = orbits(words.clone(), &gens, act).unwrap();
        let orbit_blocks: Blocks =
            report.orbits.iter().map(|o| o.iter().map(|&i| report.elements[i].to_string()).collect()).collect();
        let by_q = fibers(&words, |w| q_symbol(w.letters()));
        let by_p = fibers(&words, |w| p_symbol(w.letters()));
        q_ok &= orbit_blocks == by_q;
        p_ok &= orbit_blocks == by_p;
        let singular: Vec<Word> = enumerate_singular(n, n, &vec![1; n]).unwrap();
        let sing_report = orbits(singular, &gens, act).unwrap();
        notes.push(format!("n={n}: {} orbits, {} singular orbit(s)", report.orbits.len(), sing_report.orbits.len()));
    }
    Outcome {
        passed: q_ok,
        detail: format!("orbits = Q-symbol fibers: {q_ok}; orbits = P-symbol fibers: {p_ok}; {}", notes.join("; ")),
    }
}

fn gaudin() -> Outcome {
    let mut cases = Vec::new();
    for n in 1..=5 {
        for r in 1..=3 {
            for mu in Partition::all_of_size(n).into_iter().filter(|m| m.num_rows() <= r) {
                for s in 0..10u64 {
                    cases.push((n, r, mu.clone(), 1000 * n as u64 + 100 * r as u64 + s));
                }
            }
        }
    }
    let results: Vec<(bool, f64, Duration, String)> = cases
        .par_iter()
        .map(|(n, r, mu, seed)| {
            let start = Instant::now();
            let z = ParameterPoint::random_sorted(*n, *seed);
            let label = format!("n={n} r={r} mu={mu} z={z}");
            match joint_spectrum(&z, *r, mu.rows()) {
                Ok(joint) => {
                    let ok = joint.simple
                        && joint.joint_spectrum.len() as u128 == syt_count(mu)
                        && joint.dimension as u128 == syt_count(mu);
                    (ok, joint.min_separation.unwrap_or(f64::INFINITY), start.elapsed(), label)
                }
                Err(e) => (false, 0.0, start.elapsed(), format!("{label}: {e}")),
            }
        })
        .collect();
    let failed: Vec<&String> = results.iter().filter(|r| !r.0).map(|r| &r.3).collect();
    let min_sep = results.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
    let slowest = results.iter().map(|r| r.2).max().unwrap_or_default();
    Outcome {
        passed: failed.is_empty() && within(slowest, Duration::from_secs(120)),
        detail: format!(
            "{} spectra, {} failures {:?}, smallest relative separation {min_sep:.3e}, slowest {slowest:.2?}",
            results.len(),
            failed.len(),
            failed.first()
        ),
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut oracle = SlideOracle::default();
    let mut shapes = 0usize;
    let mut bad = 0usize;
    for inner_size in 0..=5 {
        for inner in Partition::all_of_size(inner_size) {
            for cells in 1..=5 {
                for outer in Partition::all_of_size(inner_size + cells).into_iter().filter(|o| o.contains(&inner)) {
                    let shape = SkewShape::new(outer, inner.clone()).unwrap();
                    shapes += 1;
                    let tabs = standard_tableaux(&shape);
                    let depth = shape.outer.size();
                    let by_q: BTreeSet<BTreeSet<usize>> = {
                        let mut m: BTreeMap<Vec<Vec<u32>>, BTreeSet<usize>> = BTreeMap::new();
                        for (i, t) in tabs.iter().enumerate() {
                            m.entry(reading_q_symbol(t)).or_default().insert(i);
                        }
                        m.into_values().collect()
                    };
                    let by_slides: BTreeSet<BTreeSet<usize>> = {
                        let mut m: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
                        for (i, t) in tabs.iter().enumerate() {
                            m.entry(oracle.class_id(t, depth)).or_default().insert(i);
                        }
                        m.into_values().collect()
                    };
                    if by_q != by_slides {
                        bad += 1;
                    }
                }
            }
        }
    }
    Outcome { passed: bad == 0, detail: format!("{shapes} skew shapes, {bad} disagreements, {:.2?}", start.elapsed()) }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("figure reproduction", figure_reproduction),
        ("decgd counts equal LR coefficients", counting),
        ("RSK duality sweep", duality),
        ("cactus relations in three realizations", relations),
        ("fundamental-case equivariance", fundamental_equivariance),
        ("general equivariance", general_equivariance),
        ("decgd flips are partial evacuations", intertwiner),
        ("cells", cells),
        ("Gaudin simple spectrum", gaudin),
        ("dual equivalence oracles agree", oracle_equivalence),
    ];
    let mut unexpected = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let number = idx + 1;
        let out = run();
        let gap = KNOWN_GAPS.iter().find(|(k, _)| *k == number);
        let status = if out.passed { "PASS" } else { "FAIL" };
        match (out.passed, gap) {
            (false, Some((_, why))) => {
                println!("criterion {number:>2} {status} (known gap: {why}) {name}: {}", out.detail)
            }
            (false, None) => {
                unexpected += 1;
                println!("criterion {number:>2} {status} {name}: {}", out.detail)
            }
            _ => println!("criterion {number:>2} {status} {name}: {}", out.detail),
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
