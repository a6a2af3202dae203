//! The binding surface as plain functions over JSON values, so it can be
//! tested without an interpreter. Encodings match the command line.

use cactus_core::cactus::{
    act_on_syt as syt_action, act_on_word_boxes, check_equivariance as equivariance, orbits, CactusWord,
};
use cactus_core::gaudin::{joint_spectrum as spectrum, ParameterPoint};
use cactus_core::growth::{enumerate_cgds as cgds, enumerate_decgds as decgds};
use cactus_core::jdt;
use cactus_core::json::{to_value, word_from_json, word_to_json};
use cactus_core::tableaux::{standard_tableaux, Partition, RectangleFrame, SkewShape, SkewTableau};
use cactus_core::words::{self, RskPair, Word};
use cactus_core::{Error, Result};
use serde_json::{json, Value};

fn parse<T: serde::de::DeserializeOwned>(v: &Value, what: &str) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Json(format!("{what}: {e}")))
}

fn tableau(v: &Value) -> Result<SkewTableau> {
    parse(v, "tableau")
}

/// Alphabet size: the explicit rank, or the largest letter.
fn alphabet(word: &Value, r: Option<usize>) -> usize {
    let top = match word {
        Value::String(s) => s.chars().filter_map(|c| c.to_digit(10)).max().map(|x| x as usize),
        Value::Array(xs) => xs.iter().filter_map(Value::as_u64).max().map(|x| x as usize),
        _ => None,
    };
    r.unwrap_or(top.unwrap_or(1).max(1))
}

fn cactus_word(n: usize, generators: &Value) -> Result<CactusWord> {
    CactusWord::new(n, parse(generators, "generators")?)
}

pub fn rsk(word: &Value, r: Option<usize>) -> Result<Value> {
    let w = word_from_json(word, alphabet(word, r))?;
    Ok(to_value(&words::rsk(&w)))
}

pub fn rsk_inverse(p: &Value, q: &Value, r: usize) -> Result<Value> {
    let pair = RskPair { p: tableau(p)?, q: tableau(q)? };
    Ok(word_to_json(&words::rsk_inverse(&pair, r)?))
}

pub fn crystal_e(word: &Value, i: usize, r: Option<usize>) -> Result<Value> {
    let w = word_from_json(word, alphabet(word, r))?;
    Ok(words::crystal_e(&w, i)?.map_or(Value::Null, |x| word_to_json(&x)))
}

pub fn crystal_f(word: &Value, i: usize, r: Option<usize>) -> Result<Value> {
    let w = word_from_json(word, alphabet(word, r))?;
    Ok(words::crystal_f(&w, i)?.map_or(Value::Null, |x| word_to_json(&x)))
}

pub fn singular_words(n: usize, r: usize, mu: &Value) -> Result<Value> {
    let mu: Vec<usize> = parse(mu, "weight")?;
    Ok(to_value(&words::enumerate_singular(n, r, &mu)?))
}

pub fn lr_coefficient(target: &Value, parts: &Value) -> Result<u64> {
    words::lr_coefficient(&parse(target, "partition")?, &parse::<Vec<Partition>>(parts, "partitions")?)
}

pub fn rectify(t: &Value) -> Result<Value> {
    Ok(to_value(&jdt::rectify(&tableau(t)?)))
}

pub fn evacuation(t: &Value) -> Result<Value> {
    Ok(to_value(&jdt::evacuation(&tableau(t)?)?))
}

pub fn partial_evacuation(t: &Value, q: usize) -> Result<Value> {
    Ok(to_value(&jdt::partial_evacuation(&tableau(t)?, q)?))
}

pub fn dual_equivalent(s: &Value, t: &Value) -> Result<bool> {
    jdt::dual_equivalent(&tableau(s)?, &tableau(t)?)
}

/// Applies generators `[[p, q], ...]` in order to the letters of a word.
pub fn act_on_word(word: &Value, generators: &Value, r: Option<usize>) -> Result<Value> {
    let w: Word = word_from_json(word, alphabet(word, r))?;
    Ok(word_to_json(&act_on_word_boxes(&cactus_word(w.len(), generators)?, &w)?))
}

pub fn act_on_syt(t: &Value, generators: &Value) -> Result<Value> {
    let t = tableau(t)?;
    Ok(to_value(&syt_action(&cactus_word(t.size(), generators)?, &t)?))
}

pub fn enumerate_cgds(r: usize, d: usize, bound: usize) -> Result<Value> {
    Ok(to_value(&cgds(&RectangleFrame::new(r, d)?, bound)?))
}

pub fn enumerate_decgds(r: usize, d: usize, shape: &Value, bound: usize) -> Result<Value> {
    let shape: Vec<Partition> = parse(shape, "shape")?;
    Ok(to_value(&decgds(&RectangleFrame::new(r, d)?, &shape, bound)?))
}

/// Orbits of `s_1q` on the standard tableaux of a straight shape.
pub fn orbits_syt(shape: &Value) -> Result<Value> {
    let mu: Partition = parse(shape, "partition")?;
    let n = mu.size();
    let gens: Vec<(usize, usize)> = (2..=n).map(|q| (1, q)).collect();
    let seeds = standard_tableaux(&SkewShape::straight(mu));
    let report = orbits(seeds, &gens, |(p, q), t| syt_action(&CactusWord::generator(n, p, q)?, t))?;
    Ok(to_value(&report))
}

pub fn check_equivariance(shape: &Value, mu: &Value, r: Option<usize>, d: Option<usize>) -> Result<Value> {
    let shape: Vec<Partition> = parse(shape, "shape")?;
    let mu: Partition = parse(mu, "partition")?;
    let frame = match (r, d) {
        (Some(r), Some(d)) => Some(RectangleFrame::new(r, d)?),
        (None, None) => None,
        _ => return Err(Error::OutOfRange("give both r and d, or neither".into())),
    };
    let report = equivariance(frame.as_ref(), &shape, &mu)?;
    let passed = report.passed();
    let mut out = to_value(&report);
    out["passed"] = json!(passed);
    Ok(out)
}

/// `z` is a list of integers, floats or rational strings such as `"1/3"`.
pub fn joint_spectrum(z: &Value, mu: &Value, r: Option<usize>) -> Result<Value> {
    let parts: Vec<String> = match z {
        Value::Array(xs) => xs
            .iter()
            .map(|x| match x {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(Error::Json("z entries are numbers or strings".into())),
            })
            .collect::<Result<_>>()?,
        _ => return Err(Error::Json("z is a list".into())),
    };
    let z = ParameterPoint::parse_csv(&parts.join(","))?;
    let mu: Partition = parse(mu, "partition")?;
    let r = r.unwrap_or(mu.num_rows().max(1));
    Ok(to_value(&spectrum(&z, r, mu.rows())?))
}
