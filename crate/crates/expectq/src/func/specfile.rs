//! The on-disk function format: a small JSON document
//!
//! ```json
//! { "n": 2, "repr": "truth_table", "data": [1, 0, 0, "1/2"] }
//! ```
//!
//! `repr` selects how `data` is read:
//! - `truth_table`: 2^n rationals ordered by the integer point encoding
//! - `symmetric`: n+1 rationals, value per Hamming weight
//! - `monomials`: list of {"vars": [1-based indices], "coeff": rational}
//!
//! Rationals are integers or "num/den" strings.

use serde_json::Value;
use thiserror::Error;

use crate::func::{MultilinearPoly, PointFunction, SymmetricProfile};
use crate::rat::{format_rational, parse_rational, Rational};

#[derive(Debug, Error)]
pub enum SpecFileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("missing or invalid field {0:?}")]
    Field(&'static str),
    #[error("unknown repr {0:?}")]
    UnknownRepr(String),
    #[error("bad rational in data: {0}")]
    BadRational(String),
    #[error("monomial entry must be an object with \"vars\" and \"coeff\"")]
    BadMonomial,
    #[error("variable index {0} out of range 1..={1}")]
    VarOutOfRange(usize, usize),
    #[error(transparent)]
    Function(#[from] crate::func::PointFunctionError),
    #[error(transparent)]
    Profile(#[from] super::symmetric::SymmetricProfileError),
}

fn value_to_rational(v: &Value) -> Result<Rational, SpecFileError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(crate::rat::rat(i))
            } else {
                Err(SpecFileError::BadRational(n.to_string()))
            }
        }
        Value::String(s) => {
            parse_rational(s).map_err(|e| SpecFileError::BadRational(e.to_string()))
        }
        other => Err(SpecFileError::BadRational(other.to_string())),
    }
}

/// Parses a function spec document.
pub fn function_from_json(text: &str) -> Result<PointFunction, SpecFileError> {
    let doc: Value = serde_json::from_str(text)?;
    let n = doc
        .get("n")
        .and_then(Value::as_u64)
        .ok_or(SpecFileError::Field("n"))? as usize;
    let repr = doc
        .get("repr")
        .and_then(Value::as_str)
        .ok_or(SpecFileError::Field("repr"))?;
    let data = doc.get("data").ok_or(SpecFileError::Field("data"))?;

    match repr {
        "truth_table" => {
            let arr = data.as_array().ok_or(SpecFileError::Field("data"))?;
            let values = arr
                .iter()
                .map(value_to_rational)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PointFunction::new(n, values)?)
        }
        "symmetric" => {
            let arr = data.as_array().ok_or(SpecFileError::Field("data"))?;
            let profile = arr
                .iter()
                .map(value_to_rational)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(SymmetricProfile::new(n, profile)?.to_point_function()?)
        }
        "monomials" => {
            if n < 1 || n > crate::MAX_VARS {
                return Err(SpecFileError::Function(
                    crate::func::PointFunctionError::BadArity(n),
                ));
            }
            let arr = data.as_array().ok_or(SpecFileError::Field("data"))?;
            let mut p = MultilinearPoly::zero(n);
            for entry in arr {
                let obj = entry.as_object().ok_or(SpecFileError::BadMonomial)?;
                let vars = obj
                    .get("vars")
                    .and_then(Value::as_array)
                    .ok_or(SpecFileError::BadMonomial)?;
                let coeff = value_to_rational(obj.get("coeff").ok_or(SpecFileError::BadMonomial)?)?;
                let mut mask = 0usize;
                for v in vars {
                    let idx = v.as_u64().ok_or(SpecFileError::BadMonomial)? as usize;
                    if idx < 1 || idx > n {
                        return Err(SpecFileError::VarOutOfRange(idx, n));
                    }
                    mask |= 1 << (idx - 1);
                }
                let c = p.coeff(mask) + &coeff;
                p.set_coeff(mask, c);
            }
            let values = p.evaluate_all();
            Ok(PointFunction::new(n, values)?)
        }
        other => Err(SpecFileError::UnknownRepr(other.to_string())),
    }
}

/// Serializes a function as a truth-table spec document.
pub fn function_to_json(f: &PointFunction) -> String {
    let data: Vec<Value> = f
        .values()
        .iter()
        .map(|v| {
            if v.is_integer() {
                // keep integers bare when they fit
                if let Ok(i) = v.numer().try_into() {
                    let i: i64 = i;
                    return Value::from(i);
                }
            }
            Value::from(format_rational(v))
        })
        .collect();
    serde_json::json!({
        "n": f.n(),
        "repr": "truth_table",
        "data": data,
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn truth_table_round_trip() {
        let f = PointFunction::new(2, vec![rat(1), rat(0), ratio(1, 2), rat(3)]).unwrap();
        let text = function_to_json(&f);
        let g = function_from_json(&text).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn symmetric_repr() {
        let f = function_from_json(r#"{"n":2,"repr":"symmetric","data":[1,0,1]}"#).unwrap();
        assert_eq!(f.value(0b00), &rat(1));
        assert_eq!(f.value(0b01), &rat(0));
        assert_eq!(f.value(0b11), &rat(1));
    }

    #[test]
    fn monomials_repr() {
        // x1 + 2 x1 x2
        let f = function_from_json(
            r#"{"n":2,"repr":"monomials","data":[
                {"vars":[1],"coeff":1},
                {"vars":[1,2],"coeff":2}
            ]}"#,
        )
        .unwrap();
        assert_eq!(f.value(0b01), &rat(1));
        assert_eq!(f.value(0b11), &rat(3));
        assert_eq!(f.value(0b10), &rat(0));
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(function_from_json("not json").is_err());
        assert!(function_from_json(r#"{"repr":"truth_table","data":[]}"#).is_err());
        assert!(function_from_json(r#"{"n":2,"repr":"wat","data":[]}"#).is_err());
        assert!(function_from_json(r#"{"n":1,"repr":"truth_table","data":[1,"1/0"]}"#).is_err());
        // negative values are rejected at construction
        assert!(function_from_json(r#"{"n":1,"repr":"truth_table","data":[-1,0]}"#).is_err());
    }
}
