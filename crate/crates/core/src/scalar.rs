//! The coefficient field.
//!
//! Everything in this crate is written against [`Scalar`], which is just
//! "a field we can print and build small integers in". The crate root fixes
//! the working instance to [`BigRational`](num_rational::BigRational); the
//! generic code also runs over `Ratio<i64>` and `f64`, which the tests use
//! for cheap sanity checks.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};

use crate::error::Error;

pub trait Scalar:
    Clone + PartialEq + PartialOrd + Debug + Display + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    /// Small integer as a field element.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every field of characteristic zero contains the integers")
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + PartialOrd + Debug + Display + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}

/// Parses `"p/q"`, `"-p/q"` or an integer into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Serde helpers for rationals stored as strings (`"p/q"` or an integer).
pub mod rational_str {
    use num_rational::BigRational;
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    struct RationalVisitor;

    impl Visitor<'_> for RationalVisitor {
        type Value = BigRational;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("a rational as \"p/q\" or an integer")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigRational, E> {
            super::parse_rational(v).map_err(E::custom)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigRational, E> {
            Ok(BigRational::from_integer(v.into()))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigRational, E> {
            Ok(BigRational::from_integer(v.into()))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }

    /// Same, for a `Vec<BigRational>`.
    pub mod vec {
        use num_rational::BigRational;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        #[derive(Serialize, Deserialize)]
        struct Wrap(#[serde(with = "super")] BigRational);

        pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(|q| q.to_string()))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
            let v: Vec<Wrap> = Vec::deserialize(d)?;
            Ok(v.into_iter().map(|w| w.0).collect())
        }
    }

    /// Same, for an `Option<Vec<BigRational>>`.
    pub mod opt_vec {
        use num_rational::BigRational;
        use serde::{Deserialize, Deserializer, Serializer};

        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super::vec")] Vec<BigRational>);

        pub fn serialize<S: Serializer>(v: &Option<Vec<BigRational>>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => super::vec::serialize(v, s),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Option<Vec<BigRational>>, D::Error> {
            Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
        }
    }

    /// Same, for a `BTreeMap<i64, BigRational>` keyed by stringified integers.
    pub mod index_map {
        use std::collections::BTreeMap;

        use num_rational::BigRational;
        use serde::de::Error as _;
        use serde::{Deserialize, Deserializer, Serializer};

        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super")] BigRational);

        pub fn serialize<S: Serializer>(m: &BTreeMap<i64, BigRational>, s: S) -> Result<S::Ok, S::Error> {
            s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v.to_string())))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<BTreeMap<i64, BigRational>, D::Error> {
            let raw: BTreeMap<String, Wrap> = BTreeMap::deserialize(d)?;
            raw.into_iter()
                .map(|(k, v)| {
                    let i: i64 = k
                        .trim()
                        .parse()
                        .map_err(|_| D::Error::custom(format!("label index {k:?} is not an integer")))?;
                    Ok((i, v.0))
                })
                .collect()
        }
    }
}
