//! JSON encodings with integers carried as decimal strings:
//! `{"num": [..], "den": [..]}` and `{"order": N, "coeffs": [..]}`.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{IntPoly, RationalFunction, TruncatedSeries};

fn to_strings(c: &[BigInt]) -> Vec<String> {
    c.iter().map(BigInt::to_string).collect()
}

fn from_strings<E: serde::de::Error>(c: &[String]) -> Result<Vec<BigInt>, E> {
    c.iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| E::custom(format!("invalid integer {s:?}")))
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: Vec<String>,
    den: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RationalRepr {
            num: to_strings(self.numerator().coeffs()),
            den: to_strings(self.denominator().coeffs()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(d)?;
        let num = IntPoly::new(from_strings(&repr.num)?);
        let den = IntPoly::new(from_strings(&repr.den)?);
        RationalFunction::new(num, den).map_err(D::Error::custom)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: to_strings(self.coeffs()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        Ok(TruncatedSeries::new(
            repr.order,
            from_strings(&repr.coeffs)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_shape() {
        let w = RationalFunction::from_i64s(&[6], &[1, 4]).unwrap();
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"num":["6"],"den":["1","4"]}"#
        );
        let s = TruncatedSeries::from_i64s(2, &[3, -6, 12]);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"order":2,"coeffs":["3","-6","12"]}"#
        );
    }

    #[test]
    fn big_integers_survive() {
        let text =
            r#"{"num":["123456789012345678901234567890"],"den":["1","-98765432109876543210"]}"#;
        let f: RationalFunction = serde_json::from_str(text).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), text);
    }

    #[test]
    fn malformed_inputs() {
        assert!(serde_json::from_str::<RationalFunction>(r#"{"num":["1"],"den":[]}"#).is_err());
        assert!(serde_json::from_str::<RationalFunction>(r#"{"num":["x"],"den":["1"]}"#).is_err());
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"order":2,"coeffs":["1"]}"#).is_err());
    }
}
