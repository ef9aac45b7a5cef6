//! JSON form: a list of terms in canonical order,
//! `[{"m": {"a": 2, "z": -1}, "re": 1, "im": 0}, ...]`.
//!
//! Coefficients are written as JSON integers of any size.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

use super::{GaussInt, LaurentPoly, Monomial, Var};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonTerm {
    pub m: BTreeMap<String, i64>,
    pub re: Number,
    pub im: Number,
}

fn big_to_number(n: &BigInt) -> Number {
    n.to_string()
        .parse()
        .expect("integer literal is valid JSON")
}

fn number_to_big(n: &Number) -> Option<BigInt> {
    n.as_str().parse().ok()
}

impl LaurentPoly {
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms()
            .map(|(m, c)| JsonTerm {
                m: m.iter().map(|(v, e)| (v.name().to_string(), e)).collect(),
                re: big_to_number(&c.re),
                im: big_to_number(&c.im),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<LaurentPoly, String> {
        let mut out = LaurentPoly::zero();
        for t in terms {
            let re =
                number_to_big(&t.re).ok_or_else(|| format!("non-integer coefficient {}", t.re))?;
            let im =
                number_to_big(&t.im).ok_or_else(|| format!("non-integer coefficient {}", t.im))?;
            let mut pairs = Vec::with_capacity(t.m.len());
            for (name, &e) in &t.m {
                pairs.push((Var::try_new(name).map_err(|e| e.to_string())?, e));
            }
            let m = Monomial::from_pairs(pairs);
            out.add_term(m, &GaussInt::new(re, im));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializing a polynomial cannot fail")
    }

    pub fn from_json(s: &str) -> Result<LaurentPoly, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        LaurentPoly::from_json_terms(&terms).map_err(D::Error::custom)
    }
}
