use std::io::Write;

use num_bigint::BigInt;
use og10_lattice::document::LatticeDocument;
use og10_lattice::lattice::{IntegralLattice, Sublattice};
use og10_lattice::matrix::{row_basis, IntMatrix};
use serde_json::Value;

use super::{describe, emit_json};
use crate::error::CliError;
use crate::input::{check_length, load_document, parse_glue, parse_span, parse_vector};
use crate::json;
use crate::table::{vector, yes_no, KeyValue};

fn load(file: &str) -> Result<(LatticeDocument, IntegralLattice), CliError> {
    let doc = load_document(file)?;
    let l = doc.lattice()?;
    Ok((doc, l))
}

/// The span as a sublattice with an independent basis.
fn span_sublattice(l: &IntegralLattice, span: &str) -> Result<Sublattice, CliError> {
    let vectors = parse_span(span)?;
    for (i, v) in vectors.iter().enumerate() {
        check_length(&format!("span vector {}", i + 1), v, l.rank())?;
    }
    let m = IntMatrix::from_row_vectors(&vectors, l.rank()).map_err(|e| CliError::input(e.to_string()))?;
    Ok(Sublattice::new(l.clone(), row_basis(&m))?)
}

fn basis_rows(t: &mut KeyValue, label: &str, m: &IntMatrix) {
    if m.rows() == 0 {
        t.row(label, "(empty)");
    }
    for (i, r) in m.row_vectors().iter().enumerate() {
        t.row(if i == 0 { label } else { "" }, vector(r));
    }
}

fn sublattice_document(s: &Sublattice, name: &str) -> Result<LatticeDocument, CliError> {
    let mut doc = LatticeDocument::from_lattice(&s.lattice())?;
    doc.name = Some(name.to_string());
    Ok(doc)
}

pub fn info(file: &str, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let (doc, l) = load(file)?;
    if json {
        let mut map = json::document(&doc);
        json::invariants(&l, &mut map);
        return emit_json(out, map);
    }
    let mut t = KeyValue::new();
    if let Some(name) = &doc.name {
        t.row("name", name);
    }
    describe(&mut t, &l);
    t.write(out)?;
    Ok(())
}

pub fn div(file: &str, v: &str, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let (doc, l) = load(file)?;
    let v = parse_vector(v)?;
    check_length("vector", &v, l.rank())?;
    let d = l.divisibility(&v)?;
    let norm = l.norm(&v);
    if json {
        let mut map = json::document(&doc);
        map.insert("vector".into(), json::vector(&v));
        map.insert("norm".into(), json::int(&norm));
        map.insert("divisibility".into(), json::int(&d));
        return emit_json(out, map);
    }
    KeyValue::new()
        .row("vector", vector(&v))
        .row("norm", norm)
        .row("divisibility", d)
        .write(out)?;
    Ok(())
}

pub fn perp(file: &str, span: &str, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let (_, l) = load(file)?;
    let s = span_sublattice(&l, span)?;
    let c = s.orth_complement();
    let cl = c.lattice();
    if json {
        let mut map = json::document(&sublattice_document(&c, "perp")?);
        map.insert("basis".into(), json::matrix(c.basis()));
        json::invariants(&cl, &mut map);
        return emit_json(out, map);
    }
    let mut t = KeyValue::new();
    t.row("span rank", s.rank());
    basis_rows(&mut t, "basis", c.basis());
    describe(&mut t, &cl);
    t.write(out)?;
    Ok(())
}

pub fn saturate(file: &str, span: &str, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let (_, l) = load(file)?;
    let s = span_sublattice(&l, span)?;
    let sat = s.saturation();
    if json {
        let mut map = json::document(&sublattice_document(&sat.sublattice, "saturation")?);
        map.insert("basis".into(), json::matrix(sat.sublattice.basis()));
        map.insert("index".into(), json::int(&sat.index));
        map.insert("saturated".into(), Value::from(sat.index == BigInt::from(1)));
        return emit_json(out, map);
    }
    let mut t = KeyValue::new();
    t.row("rank", s.rank())
        .row("index", &sat.index)
        .row("saturated", yes_no(sat.index == BigInt::from(1)));
    basis_rows(&mut t, "basis", sat.sublattice.basis());
    t.write(out)?;
    Ok(())
}

pub fn glue(file: &str, glue: &[String], json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let (doc, l) = load(file)?;
    let mut vectors = doc.glue_vectors()?;
    for g in glue {
        vectors.push(parse_glue(g)?);
    }
    if vectors.is_empty() {
        return Err(CliError::input("no glue vectors: pass --glue or add \"glue\" to the document"));
    }
    for (i, g) in vectors.iter().enumerate() {
        if g.coords.len() != l.rank() {
            return Err(CliError::input(format!(
                "glue vector {} has {} entries, lattice has rank {}",
                i + 1,
                g.coords.len(),
                l.rank()
            )));
        }
    }
    let o = l.overlattice_from_glue(&vectors)?;
    if json {
        let mut over = LatticeDocument::from_lattice(&o.lattice)?;
        over.name = Some("overlattice".into());
        let mut map = json::document(&over);
        map.insert("index".into(), json::int(&o.index));
        map.insert("basis".into(), json::rat_matrix(&o.basis));
        map.insert("embedding".into(), json::matrix(&o.embedding));
        json::invariants(&o.lattice, &mut map);
        return emit_json(out, map);
    }
    let mut t = KeyValue::new();
    t.row("index", &o.index).row("gram", o.lattice.gram());
    for i in 0..o.basis.rows() {
        let row: Vec<String> = o.basis.row(i).iter().map(ToString::to_string).collect();
        t.row(if i == 0 { "basis" } else { "" }, format!("({})", row.join(", ")));
    }
    describe(&mut t, &o.lattice);
    t.write(out)?;
    Ok(())
}
