//! JSON encodings shared by the command line and the Python bindings.
//!
//! partition: `[3,3]`; tableau: `{"inner":[..],"rows":[[..]]}` with inner
//! cells omitted; class: `{"inner","outer","rep"}`; word: a digit string when
//! `r <= 9`, else an array.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::growth::{Cgd, Decgd};
use crate::jdt::DualEquivClass;
use crate::tableaux::{Partition, SkewTableau};
use crate::words::{RskPair, Word};

impl Serialize for SkewTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SkewTableau", 2)?;
        st.serialize_field("inner", self.inner())?;
        st.serialize_field("rows", &self.compact_rows())?;
        st.end()
    }
}

#[derive(Deserialize)]
struct TableauRepr {
    #[serde(default)]
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for SkewTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(d)?;
        SkewTableau::new(repr.inner, repr.rows).map_err(D::Error::custom)
    }
}

impl Serialize for DualEquivClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DualEquivClass", 3)?;
        st.serialize_field("inner", self.inner())?;
        st.serialize_field("outer", self.outer())?;
        st.serialize_field("rep", self.representative())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for DualEquivClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rep: SkewTableau,
        }
        let repr = Repr::deserialize(d)?;
        DualEquivClass::of(&repr.rep).map_err(D::Error::custom)
    }
}

impl Serialize for RskPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RskPair", 2)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("q", &self.q)?;
        st.end()
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        word_to_json(self).serialize(s)
    }
}

pub fn word_to_json(w: &Word) -> Value {
    if w.r() <= 9 {
        Value::String(w.to_string())
    } else {
        json!(w.letters())
    }
}

pub fn word_from_json(v: &Value, r: usize) -> Result<Word> {
    match v {
        Value::String(s) => Word::parse(s, r),
        Value::Array(_) => {
            let letters: Vec<u32> = serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
            Word::new(letters, r)
        }
        _ => Err(Error::Json("a word is a digit string or an array of letters".into())),
    }
}

fn key(i: i64, j: i64) -> String {
    format!("{i},{j}")
}

impl Serialize for Cgd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let gamma: BTreeMap<String, &Partition> = self.nodes().into_iter().map(|((i, j), p)| (key(i, j), p)).collect();
        let mut st = s.serialize_struct("Cgd", 5)?;
        st.serialize_field("r", &self.frame().r())?;
        st.serialize_field("d", &self.frame().d())?;
        st.serialize_field("k", &self.period())?;
        st.serialize_field("first_column", self.first_column())?;
        st.serialize_field("gamma", &gamma)?;
        st.end()
    }
}

impl Serialize for Decgd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let k = self.period() as i64;
        let mut gamma = BTreeMap::new();
        let mut alpha = BTreeMap::new();
        let mut beta = BTreeMap::new();
        for i in 1..=k {
            for j in i..=i + k {
                gamma.insert(key(i, j), self.gamma(i, j).expect("in domain"));
            }
            for j in i..i + k {
                alpha.insert(key(i, j), self.alpha(i, j).expect("in domain"));
                beta.insert(key(i, j), self.beta(i, j).expect("in domain"));
            }
        }
        let mut st = s.serialize_struct("Decgd", 6)?;
        st.serialize_field("r", &self.frame().r())?;
        st.serialize_field("d", &self.frame().d())?;
        st.serialize_field("shape", self.shape())?;
        st.serialize_field("gamma", &gamma)?;
        st.serialize_field("alpha", &alpha)?;
        st.serialize_field("beta", &beta)?;
        st.end()
    }
}

/// Parses a partition from a JSON array.
pub fn partition_from_str(s: &str) -> Result<Partition> {
    serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
}

/// Parses a list of partitions such as `[[2,1],[1],[2]]`.
pub fn partitions_from_str(s: &str) -> Result<Vec<Partition>> {
    serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_round_trip() {
        let t = SkewTableau::new(Partition::new(vec![1]).unwrap(), vec![vec![2, 3], vec![1]]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"inner":[1],"rows":[[2,3],[1]]}"#);
        let back: SkewTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<SkewTableau>(r#"{"rows":[[2,1]]}"#).is_err());
    }

    #[test]
    fn partition_and_word() {
        assert_eq!(serde_json::to_string(&Partition::new(vec![3, 3]).unwrap()).unwrap(), "[3,3]");
        assert!(partition_from_str("[1,2]").is_err());
        let w = Word::parse("2113", 3).unwrap();
        assert_eq!(word_to_json(&w), json!("2113"));
        let big = Word::new(vec![10, 1], 10).unwrap();
        assert_eq!(word_to_json(&big), json!([10, 1]));
        assert_eq!(word_from_json(&json!([10, 1]), 10).unwrap(), big);
    }

    #[test]
    fn pair_encoding() {
        let pair = crate::words::rsk(&Word::parse("2113", 3).unwrap());
        assert_eq!(
            serde_json::to_value(&pair).unwrap(),
            json!({"p": {"inner": [], "rows": [[1,1,3],[2]]}, "q": {"inner": [], "rows": [[1,3,4],[2]]}})
        );
    }
}
