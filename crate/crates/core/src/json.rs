//! JSON helpers: integers are emitted as exact JSON numbers of any size.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Number;

use crate::mat2::Mat2;

pub fn num(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("integer is a valid JSON number")
}

pub fn mat(m: &Mat2) -> [[Number; 2]; 2] {
    [[num(&m.a11), num(&m.a12)], [num(&m.a21), num(&m.a22)]]
}

/// Inverse of [`mat`] for values read back from JSON.
pub fn mat_from_value(v: &serde_json::Value) -> Option<Mat2> {
    let rows = v.as_array()?;
    if rows.len() != 2 {
        return None;
    }
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        let cells = row.as_array()?;
        if cells.len() != 2 {
            return None;
        }
        for c in cells {
            let n = c.as_number()?;
            entries.push(BigInt::from_str(&n.to_string()).ok()?);
        }
    }
    let mut it = entries.into_iter();
    Some(Mat2 { a11: it.next()?, a12: it.next()?, a21: it.next()?, a22: it.next()? })
}
