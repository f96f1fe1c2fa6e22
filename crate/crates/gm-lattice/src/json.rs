//! JSON rendering of the core types.
//!
//! Shape conventions, shared with the CLI: Gram matrices are row-major
//! arrays of integers; rationals are `{"num": .., "den": ..}` objects;
//! integers render as JSON numbers while they fit in 64 bits and as decimal
//! strings beyond that.

use num_rational::Ratio;

use serde_json::{json, Value};

use crate::form::FiniteQuadraticForm;
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

pub fn int_value<T: Scalar>(x: &T) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn rat_value<T: Scalar>(r: &Ratio<T>) -> Value {
    json!({ "num": int_value(r.numer()), "den": int_value(r.denom()) })
}

pub fn int_row_value<T: Scalar>(row: &[T]) -> Value {
    Value::Array(row.iter().map(int_value).collect())
}

pub fn rat_row_value<T: Scalar>(row: &[Ratio<T>]) -> Value {
    Value::Array(row.iter().map(rat_value).collect())
}

pub fn matrix_value<T: Scalar>(m: &Matrix<T>) -> Value {
    Value::Array(m.rows_iter().map(int_row_value).collect())
}

pub fn lattice_value<T: Scalar>(l: &Lattice<T>) -> Value {
    json!({
        "gram": matrix_value(l.gram()),
        "rank": l.rank(),
        "even": l.is_even(),
        "signature": [l.signature().0, l.signature().1],
        "det": int_value(l.det()),
    })
}

pub fn form_value<T: Scalar>(f: &FiniteQuadraticForm<T>) -> Value {
    json!({
        "invariant_factors": int_row_value(f.invariant_factors()),
        "order": int_value(&f.order()),
        "generators": Value::Array(f.generators().iter().map(|g| rat_row_value(g)).collect()),
        "q_values": match f.q_values() {
            Some(qs) => rat_row_value(qs),
            None => Value::Null,
        },
        "b_matrix": Value::Array(
            (0..f.num_generators())
                .map(|i| Value::Array((0..f.num_generators()).map(|j| rat_value(&f.b_matrix()[(i, j)])).collect()))
                .collect(),
        ),
    })
}
