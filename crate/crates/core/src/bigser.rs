//! Serde adapters for arbitrary-precision integers.
//!
//! Values that fit in 64 bits are written as JSON numbers; anything larger is
//! written as a decimal string so that no reader silently rounds it through a
//! float. Both forms are accepted on input.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

pub(crate) fn write_uint<S: Serializer>(value: &BigUint, ser: S) -> Result<S::Ok, S::Error> {
    match value.to_u64() {
        Some(v) => ser.serialize_u64(v),
        None => ser.serialize_str(&value.to_string()),
    }
}

pub(crate) fn write_int<S: Serializer>(value: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
    match value.to_i64() {
        Some(v) => ser.serialize_i64(v),
        None => ser.serialize_str(&value.to_string()),
    }
}

struct IntVisitor;

impl<'de> Visitor<'de> for IntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_i128<E: de::Error>(self, v: i128) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_u128<E: de::Error>(self, v: u128) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse()
            .map_err(|_| E::custom(format!("invalid integer string {v:?}")))
    }
}

pub(crate) fn read_int<'de, D: Deserializer<'de>>(de: D) -> Result<BigInt, D::Error> {
    de.deserialize_any(IntVisitor)
}

pub(crate) fn read_uint<'de, D: Deserializer<'de>>(de: D) -> Result<BigUint, D::Error> {
    let v = read_int(de)?;
    v.to_biguint()
        .ok_or_else(|| de::Error::custom(format!("expected a non-negative integer, got {v}")))
}

/// `#[serde(with = "...")]` module for a single `BigUint`.
pub(crate) mod uint {
    pub(crate) use super::read_uint as deserialize;
    pub(crate) use super::write_uint as serialize;
}

/// `#[serde(with = "...")]` module for a single `BigInt`.
pub(crate) mod int {
    pub(crate) use super::read_int as deserialize;
    pub(crate) use super::write_int as serialize;
}

pub(crate) mod opt_uint {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub(crate) fn serialize<S: Serializer>(v: &Option<BigUint>, ser: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => super::write_uint(v, ser),
            None => ser.serialize_none(),
        }
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<BigUint>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super::uint")] BigUint);
        Ok(Option::<Wrap>::deserialize(de)?.map(|w| w.0))
    }
}

pub(crate) mod vec_uint {
    use num_bigint::BigUint;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub(crate) fn serialize<S: Serializer>(v: &[BigUint], ser: S) -> Result<S::Ok, S::Error> {
        struct One<'a>(&'a BigUint);
        impl serde::Serialize for One<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                super::write_uint(self.0, ser)
            }
        }
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&One(x))?;
        }
        seq.end()
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigUint>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super::uint")] BigUint);
        Ok(Vec::<Wrap>::deserialize(de)?.into_iter().map(|w| w.0).collect())
    }
}
