use std::collections::{BTreeMap, BTreeSet};

use cactus_core::cactus::{
    act_on_decgd, act_on_syt, act_on_word_boxes, check_equivariance, orbits as orbit_report, CactusWord,
};
use cactus_core::gaudin::{joint_spectrum, ParameterPoint};
use cactus_core::growth::{decgd_to_syt, enumerate_cgds, enumerate_decgds, Decgd};
use cactus_core::jdt::{evacuation, xi_ssyt};
use cactus_core::json::{partition_from_str, partitions_from_str, to_value};
use cactus_core::tableaux::{standard_tableaux, syt_count, Partition, RectangleFrame, SkewShape};
use cactus_core::words::{enumerate_singular, lr_coefficient, p_symbol, q_symbol, rsk as rsk_pair, star, Word};
use serde_json::{json, Value};

use crate::{CliError, EnumerateKind, Options, Output, Realization, Suite, DEFAULT_AREA_BOUND, DEFAULT_SIZE_BOUND};

type CmdResult = Result<Output, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn line(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn report(v: Value, passed: bool) -> Output {
    Output { lines: vec![line(&v)], passed }
}

/// The size limit in force: `--bound` may only exceed `default` together
/// with `--i-know-this-is-big`, which alone lifts the limit.
fn limit(o: &Options, default: usize) -> Result<usize, CliError> {
    match o.bound {
        Some(b) if b > default && !o.big => {
            Err(usage(format!("--bound {b} exceeds the default {default}; add --i-know-this-is-big to allow it")))
        }
        Some(b) => Ok(b),
        None if o.big => Ok(usize::MAX),
        None => Ok(default),
    }
}

fn within(size: usize, bound: usize, what: &str) -> Result<(), CliError> {
    if size > bound {
        return Err(usage(format!(
            "{what} {size} exceeds the bound {bound}; raise it with --bound N --i-know-this-is-big"
        )));
    }
    Ok(())
}

fn frame(o: &Options) -> Result<RectangleFrame, CliError> {
    match (o.rank, o.degree) {
        (Some(r), Some(d)) => Ok(RectangleFrame::new(r, d)?),
        _ => Err(usage("this command needs --rank and --degree")),
    }
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    value.as_deref().ok_or_else(|| usage(format!("this command needs {flag}")))
}

fn weight_vector(o: &Options) -> Result<Vec<usize>, CliError> {
    serde_json::from_str(required(&o.weight, "--weight")?).map_err(|e| usage(format!("--weight: {e}")))
}

fn single_box() -> Partition {
    Partition::new(vec![1]).expect("valid partition")
}

fn json_sorted<T: serde::Serialize>(items: &[T]) -> Vec<String> {
    let mut lines: Vec<String> = items.iter().map(|x| line(&to_value(x))).collect();
    lines.sort();
    lines
}

/// Splits indices into blocks by a key; compared against orbits.
fn fibers<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> BTreeSet<BTreeSet<usize>> {
    let mut m: BTreeMap<K, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..n {
        m.entry(key(i)).or_default().insert(i);
    }
    m.into_values().collect()
}

fn blocks(orbits: &[Vec<usize>]) -> BTreeSet<BTreeSet<usize>> {
    orbits.iter().map(|o| o.iter().copied().collect()).collect()
}

/// Distinct values over an orbit, in JSON order.
fn distinct<T: serde::Serialize>(orbit: &[usize], f: impl Fn(usize) -> T) -> Vec<Value> {
    let set: BTreeSet<String> = orbit.iter().map(|&i| line(&to_value(&f(i)))).collect();
    set.iter().map(|s| serde_json::from_str(s).expect("round trip")).collect()
}

fn s1q_generators(n: usize) -> Vec<(usize, usize)> {
    (2..=n).map(|q| (1, q)).collect()
}

pub fn rsk(word: &str, o: &Options) -> CmdResult {
    let top = word.chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(1) as usize;
    let r = o.rank.unwrap_or(top.max(1));
    let w = Word::parse(word, r)?;
    let pair = rsk_pair(&w);
    Ok(report(json!({"word": w, "r": r, "p": pair.p, "q": pair.q, "seed": o.seed}), true))
}

pub fn enumerate(kind: EnumerateKind, o: &Options) -> CmdResult {
    let frame = frame(o)?;
    let bound = limit(o, DEFAULT_AREA_BOUND)?;
    within(frame.area(), bound, "rectangle area")?;
    let lambda = frame.lambda();
    let (kind_name, shape, mut lines) = match kind {
        EnumerateKind::Cgd => {
            let shape = vec![single_box(); frame.area()];
            ("cgd", shape, json_sorted(&enumerate_cgds(&frame, bound)?))
        }
        EnumerateKind::Decgd => {
            let shape = partitions_from_str(required(&o.shape, "--shape")?)?;
            let total: usize = shape.iter().map(Partition::size).sum();
            if total != frame.area() {
                return Err(usage(format!("the shape has {total} cells but the rectangle has {}", frame.area())));
            }
            let found = enumerate_decgds(&frame, &shape, bound)?;
            ("decgd", shape, json_sorted(&found))
        }
    };
    let count = lines.len() as u64;
    let lr = lr_coefficient(&lambda, &shape)?;
    let summary = json!({
        "kind": kind_name,
        "r": frame.r(),
        "d": frame.d(),
        "shape": shape,
        "count": count,
        "lr_coefficient": lr,
        "seed": o.seed,
    });
    lines.push(line(&summary));
    Ok(Output { lines, passed: count == lr })
}

pub fn orbits(realization: Realization, o: &Options) -> CmdResult {
    match realization {
        Realization::Words => word_orbits(o),
        Realization::Syt => syt_orbits(o),
        Realization::Decgd => decgd_orbits(o),
    }
}

fn word_orbits(o: &Options) -> CmdResult {
    let mut weight = weight_vector(o)?;
    let r = o.rank.unwrap_or(weight.len()).max(1);
    if weight.len() > r {
        return Err(usage(format!("the weight has {} entries but the alphabet has {r} letters", weight.len())));
    }
    weight.resize(r, 0);
    let n: usize = weight.iter().sum();
    within(n, limit(o, DEFAULT_SIZE_BOUND)?, "word length")?;
    let gens = s1q_generators(n);
    let act = |(p, q): (usize, usize), w: &Word| act_on_word_boxes(&CactusWord::generator(n, p, q)?, w);
    let rep = orbit_report(Word::all_of_weight(&weight), &gens, act)?;
    let els = &rep.elements;
    let fingerprints: Vec<Value> = rep
        .orbits
        .iter()
        .map(|orb| {
            json!({
                "q_symbols": distinct(orb, |i| q_symbol(els[i].letters())),
                "p_symbols": distinct(orb, |i| p_symbol(els[i].letters())),
            })
        })
        .collect();
    let orbit_blocks = blocks(&rep.orbits);
    let by_q = fibers(els.len(), |i| q_symbol(els[i].letters()).compact_rows());
    let by_p = fibers(els.len(), |i| p_symbol(els[i].letters()).compact_rows());
    let dominant = weight.windows(2).all(|w| w[0] >= w[1]);
    let singular = if dominant {
        let sing = orbit_report(enumerate_singular(n, r, &weight)?, &gens, act)?;
        json!({"elements": sing.elements, "orbits": sing.orbits, "generator_images": sing.generator_images})
    } else {
        Value::Null
    };
    let out = json!({
        "realization": "words",
        "n": n,
        "r": r,
        "weight": weight,
        "basepoint": "identity",
        "elements": rep.elements,
        "orbits": rep.orbits,
        "generator_images": rep.generator_images,
        "fingerprints": fingerprints,
        "orbits_equal_q_fibers": orbit_blocks == by_q,
        "orbits_equal_p_fibers": orbit_blocks == by_p,
        "singular": singular,
        "seed": o.seed,
    });
    Ok(report(out, true))
}

fn syt_orbits(o: &Options) -> CmdResult {
    let mu = partition_from_str(required(&o.shape, "--shape")?)?;
    let n = mu.size();
    within(n, limit(o, DEFAULT_SIZE_BOUND)?, "tableau size")?;
    let gens = s1q_generators(n);
    let act = |(p, q): (usize, usize), t: &_| act_on_syt(&CactusWord::generator(n, p, q)?, t);
    let rep = orbit_report(standard_tableaux(&SkewShape::straight(mu.clone())), &gens, act)?;
    let fingerprints: Vec<Value> =
        rep.orbits.iter().map(|orb| json!({"q_symbols": distinct(orb, |i| rep.elements[i].clone())})).collect();
    let out = json!({
        "realization": "syt",
        "n": n,
        "shape": mu,
        "basepoint": "identity",
        "elements": rep.elements,
        "orbits": rep.orbits,
        "generator_images": rep.generator_images,
        "fingerprints": fingerprints,
        "seed": o.seed,
    });
    Ok(report(out, true))
}

/// The last part of the shape plays the complement and stays fixed, so the
/// generators are `s_1q` for `q` below the number of parts.
fn decgd_orbits(o: &Options) -> CmdResult {
    let frame = frame(o)?;
    let bound = limit(o, DEFAULT_AREA_BOUND)?;
    within(frame.area(), bound, "rectangle area")?;
    let shape = partitions_from_str(required(&o.shape, "--shape")?)?;
    let seeds = enumerate_decgds(&frame, &shape, bound)?;
    let n = shape.len().saturating_sub(1);
    let gens = s1q_generators(n);
    let act = |(p, q): (usize, usize), d: &Decgd| act_on_decgd(p, q, d);
    let rep = orbit_report(seeds, &gens, act)?;
    let boxes = shape[..n].iter().all(|p| *p == single_box());
    let fingerprints: Vec<Value> = rep
        .orbits
        .iter()
        .map(|orb| {
            if boxes {
                json!({"q_symbols": distinct(orb, |i| decgd_to_syt(&rep.elements[i]).expect("box shape"))})
            } else {
                json!({"shapes": distinct(orb, |i| rep.elements[i].shape().to_vec())})
            }
        })
        .collect();
    let out = json!({
        "realization": "decgd",
        "r": frame.r(),
        "d": frame.d(),
        "shape": shape,
        "basepoint": "identity",
        "elements": rep.elements,
        "orbits": rep.orbits,
        "generator_images": rep.generator_images,
        "fingerprints": fingerprints,
        "seed": o.seed,
    });
    Ok(report(out, true))
}

pub fn check(suite: Suite, o: &Options) -> CmdResult {
    match suite {
        Suite::Duality => check_duality(o),
        Suite::Equivariance => check_equivariance_suite(o),
        Suite::Gaudin => check_gaudin(o),
    }
}

/// `RSK(w*) = (ξ P, evac Q)` over all words up to the given length and rank.
fn check_duality(o: &Options) -> CmdResult {
    let max_len = o.bound.unwrap_or(DEFAULT_SIZE_BOUND);
    within(max_len, limit(o, DEFAULT_SIZE_BOUND)?, "word length")?;
    let max_rank = o.rank.unwrap_or(3);
    if max_rank > 9 {
        return Err(usage("--rank is limited to 9 for this suite"));
    }
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for r in 1..=max_rank {
        for n in 0..=max_len {
            for w in Word::all(n, r) {
                cases += 1;
                let pair = rsk_pair(&w);
                let lhs = rsk_pair(&star(&w));
                if lhs.p != xi_ssyt(&pair.p, r)? || lhs.q != evacuation(&pair.q)? {
                    failures.push(json!({"word": w, "r": r}));
                }
            }
        }
    }
    let passed = failures.is_empty();
    let out = json!({
        "suite": "duality",
        "max_length": max_len,
        "max_rank": max_rank,
        "cases": cases,
        "failures": failures,
        "passed": passed,
        "seed": o.seed,
    });
    Ok(report(out, passed))
}

/// A single case from `--shape` and `--weight`, or every `(□^n, μ^c)` with
/// `n` up to the bound (default 5).
fn check_equivariance_suite(o: &Options) -> CmdResult {
    let mut cases: Vec<(Vec<Partition>, Partition)> = Vec::new();
    let explicit_frame = match (o.rank, o.degree) {
        (Some(r), Some(d)) => Some(RectangleFrame::new(r, d)?),
        _ => None,
    };
    if let (Some(shape), Some(mu)) = (&o.shape, &o.weight) {
        let shape = partitions_from_str(shape)?;
        let mu = partition_from_str(mu)?;
        within(mu.size(), limit(o, DEFAULT_SIZE_BOUND)?, "weight size")?;
        cases.push((shape, mu));
    } else {
        let max_n = o.bound.unwrap_or(5);
        within(max_n, limit(o, DEFAULT_SIZE_BOUND)?, "number of boxes")?;
        for n in 1..=max_n {
            for mu in Partition::all_of_size(n) {
                cases.push((vec![single_box(); n], mu));
            }
        }
    }
    let mut results = Vec::new();
    let mut failures = Vec::new();
    let mut checks = 0usize;
    for (shape, mu) in &cases {
        let rep = check_equivariance(explicit_frame.as_ref(), shape, mu)?;
        checks += rep.checks;
        let label = format!("shape {} mu {mu}", line(&to_value(shape)));
        failures.extend(rep.failures.iter().map(|f| format!("{label}: {f}")));
        results.push(json!({
            "shape": shape,
            "mu": mu,
            "r": rep.r,
            "d": rep.d,
            "lr_coefficient": rep.lr_coefficient,
            "singular_count": rep.singular_count,
            "decgd_count": rep.decgd_count,
            "checks": rep.checks,
            "passed": rep.passed(),
        }));
    }
    let passed = failures.is_empty();
    let out = json!({
        "suite": "equivariance",
        "cases": results,
        "checks": checks,
        "failures": failures,
        "passed": passed,
        "seed": o.seed,
    });
    Ok(report(out, passed))
}

fn parameter_point(o: &Options, n: usize) -> Result<ParameterPoint, CliError> {
    match &o.z {
        Some(csv) => {
            let z = ParameterPoint::parse_csv(csv)?;
            if z.len() != n {
                return Err(usage(format!("--z has {} values but the weight has size {n}", z.len())));
            }
            Ok(z)
        }
        None => Ok(ParameterPoint::random_sorted(n, o.seed.wrapping_mul(1_000_003).wrapping_add(n as u64))),
    }
}

/// Simplicity of the joint spectrum on every singular weight space with at
/// most `--bound` sites (default 4) and rank at most `--rank` (default 3).
fn check_gaudin(o: &Options) -> CmdResult {
    let max_rank = o.rank.unwrap_or(3);
    let sizes: Vec<usize> = match &o.z {
        Some(csv) => vec![ParameterPoint::parse_csv(csv)?.len()],
        None => (1..=o.bound.unwrap_or(4)).collect(),
    };
    within(*sizes.iter().max().unwrap_or(&0), limit(o, DEFAULT_SIZE_BOUND)?, "number of sites")?;
    let mut results = Vec::new();
    let mut failures = Vec::new();
    let mut min_sep = f64::INFINITY;
    for &n in &sizes {
        let z = parameter_point(o, n)?;
        for r in 1..=max_rank {
            for mu in Partition::all_of_size(n).into_iter().filter(|m| m.num_rows() <= r) {
                let joint = joint_spectrum(&z, r, mu.rows())?;
                let ok = joint.simple && joint.dimension as u128 == syt_count(&mu);
                if let Some(s) = joint.min_separation {
                    min_sep = min_sep.min(s);
                }
                if !ok {
                    failures.push(format!("z={z} r={r} mu={mu}"));
                }
                results.push(json!({
                    "z": joint.z,
                    "r": r,
                    "mu": joint.mu,
                    "dimension": joint.dimension,
                    "simple": joint.simple,
                    "min_separation": joint.min_separation,
                    "passed": ok,
                }));
            }
        }
    }
    let passed = failures.is_empty();
    let out = json!({
        "suite": "gaudin",
        "cases": results,
        "min_separation": min_sep.is_finite().then_some(min_sep),
        "failures": failures,
        "passed": passed,
        "seed": o.seed,
    });
    Ok(report(out, passed))
}

pub fn spectrum(o: &Options) -> CmdResult {
    let mu = partition_from_str(required(&o.weight, "--weight")?)?;
    let n = mu.size();
    within(n, limit(o, DEFAULT_SIZE_BOUND)?, "number of sites")?;
    let r = o.rank.unwrap_or(mu.num_rows().max(1));
    let z = parameter_point(o, n)?;
    let joint = joint_spectrum(&z, r, mu.rows())?;
    let mut out = to_value(&joint);
    out["r"] = json!(r);
    out["seed"] = json!(o.seed);
    Ok(report(out, joint.simple))
}
