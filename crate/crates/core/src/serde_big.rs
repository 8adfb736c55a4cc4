//! Serde helpers that write big integers as bare decimal JSON numbers of
//! arbitrary length (requires serde_json's `arbitrary_precision`).

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

fn to_number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("decimal integers are valid JSON numbers")
}

fn from_number<E: serde::de::Error>(n: Number) -> Result<BigInt, E> {
    BigInt::from_str(&n.to_string()).map_err(|_| E::custom(format!("{n} is not an integer")))
}

pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    to_number(x).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    from_number(Number::deserialize(d)?)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(to_number).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Number>::deserialize(d)?.into_iter().map(from_number).collect()
    }
}

pub mod rows {
    use super::*;

    pub fn serialize<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        rows.iter()
            .map(|r| r.iter().map(to_number).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Vec::<Vec<Number>>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_iter().map(from_number).collect())
            .collect()
    }
}
