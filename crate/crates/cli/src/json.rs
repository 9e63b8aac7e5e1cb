use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use og10_lattice::document::LatticeDocument;
use og10_lattice::lattice::{DiscriminantGroup, IntegralLattice};
use og10_lattice::matrix::{IntMatrix, RatMatrix};
use serde_json::{json, Map, Value};

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(n) => Value::from(n),
        None => Value::from(x.to_string()),
    }
}

pub fn vector(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| vector(r)).collect())
}

pub fn rational(q: &BigRational) -> Value {
    if q.is_integer() {
        int(&q.to_integer())
    } else {
        Value::from(q.to_string())
    }
}

pub fn rat_matrix(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational).collect()))
            .collect(),
    )
}

/// The document's own fields, ready to receive extra keys.
pub fn document(doc: &LatticeDocument) -> Map<String, Value> {
    match serde_json::to_value(doc).expect("documents always serialize") {
        Value::Object(m) => m,
        _ => unreachable!("documents serialize to objects"),
    }
}

pub fn disc_group(g: &DiscriminantGroup) -> Value {
    json!({
        "invariant_factors": vector(&g.invariant_factors),
        "q_values": g.q_values.iter().map(rational).collect::<Vec<_>>(),
    })
}

/// Rank, determinant, signature, parity, scale and discriminant group.
pub fn invariants(l: &IntegralLattice, map: &mut Map<String, Value>) {
    map.insert("rank".into(), Value::from(l.rank()));
    map.insert("det".into(), int(&l.discriminant()));
    map.insert("signature".into(), serde_json::to_value(l.signature()).expect("serializable"));
    map.insert("even".into(), Value::from(l.is_even()));
    map.insert("scale".into(), int(&l.scale()));
    map.insert(
        "disc_group".into(),
        l.disc_group().map(|g| disc_group(&g)).unwrap_or(Value::Null),
    );
}
