//! Reading lattice documents and the small argument grammars.

use std::path::Path;

use num_bigint::BigInt;
use og10_lattice::catalog::{self, mukai_k3, mukai_kuznetsov};
use og10_lattice::document::{vector_to_i64, LatticeDocument};
use og10_lattice::lattice::GlueVector;

use crate::error::CliError;

/// Loads `source` as a JSON file, or, if no such file exists, as a catalog
/// name. The Mukai lattices come with their distinguished vectors.
pub fn load_document(source: &str) -> Result<LatticeDocument, CliError> {
    let path = Path::new(source);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {source}: {e}")))?;
        return LatticeDocument::from_json(&text)
            .map_err(|e| CliError::input(format!("{source}: {e}")));
    }
    catalog_document(source)
        .ok_or_else(|| CliError::input(format!("{source}: no such file and not a catalog name")))
}

pub fn catalog_document(name: &str) -> Option<LatticeDocument> {
    let lattice = catalog::by_name(name)?;
    let mut doc = LatticeDocument::from_lattice(&lattice).ok()?;
    doc.name = Some(name.to_string());
    let named: Vec<(&str, Vec<BigInt>)> = match name {
        "mukai-kuznetsov" => {
            let m = mukai_kuznetsov();
            vec![("lambda1", m.lambda1), ("lambda2", m.lambda2)]
        }
        "mukai-k3" => {
            let m = mukai_k3();
            vec![("h0", m.h0), ("h4", m.h4)]
        }
        _ => Vec::new(),
    };
    for (k, v) in named {
        doc.vectors.insert(k.to_string(), vector_to_i64(&v).ok()?);
    }
    Some(doc)
}

/// `"a,b,c"`
pub fn parse_vector(s: &str) -> Result<Vec<BigInt>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(CliError::input("empty vector"));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| CliError::input(format!("{:?} is not an integer", t.trim())))
        })
        .collect()
}

/// `"v1;v2;..."`
pub fn parse_span(s: &str) -> Result<Vec<Vec<BigInt>>, CliError> {
    s.split(';').map(parse_vector).collect()
}

pub fn parse_glue(s: &str) -> Result<GlueVector, CliError> {
    GlueVector::parse(s).map_err(|e| CliError::input(format!("glue {s:?}: {e}")))
}

/// `"l+,l-"`
pub fn parse_target(s: &str) -> Result<(usize, usize), CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::input(format!("target signature {s:?} must be \"l+,l-\" with nonnegative integers"));
    match parts.as_slice() {
        [p, m] => Ok((p.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?)),
        _ => Err(bad()),
    }
}

pub fn check_length(what: &str, v: &[BigInt], rank: usize) -> Result<(), CliError> {
    if v.len() != rank {
        return Err(CliError::input(format!(
            "{what} has {} entries, lattice has rank {rank}",
            v.len()
        )));
    }
    Ok(())
}
