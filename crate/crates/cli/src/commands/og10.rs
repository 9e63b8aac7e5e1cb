use std::io::Write;

use num_bigint::BigInt;
use num_traits::Zero;
use og10_lattice::catalog::{mukai_k3, mukai_kuznetsov};
use og10_lattice::document::{vector_to_i64, LatticeDocument};
use og10_lattice::hassett;
use og10_lattice::lattice::{IntegralLattice, Sublattice};
use og10_lattice::matrix::{row_basis, IntMatrix};
use og10_lattice::og10::{
    self as core, birationality, contains_unimodular_u, gamma_lattice, quotient_order_by_lattice,
    FactorialityKind, MukaiVector, UEmbedding,
};
use serde_json::{json, Value};

use super::{describe, emit_json};
use crate::error::CliError;
use crate::input::{load_document, parse_vector};
use crate::json;
use crate::table::{vector, yes_no, KeyValue};

fn combine(gens: &[Vec<BigInt>], coeffs: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    for (g, c) in gens.iter().zip(coeffs) {
        for (x, y) in v.iter_mut().zip(g) {
            *x += c * y;
        }
    }
    v
}

/// The Mukai lattice and λ₀. Two-entry shorthand: `a·λ₁ + b·λ₂` for
/// cubics, the Mukai vector `(r, 0, s)` for K3 surfaces.
fn gamma_input(k3: bool, lambda0: Option<&str>) -> Result<(IntegralLattice, Vec<BigInt>), CliError> {
    let (lattice, short, default) = if k3 {
        let m = mukai_k3();
        (m.lattice, [m.h0, m.h4], [1, -1])
    } else {
        let m = mukai_kuznetsov();
        (m.lattice, [m.lambda1, m.lambda2], [1, 1])
    };
    let n = lattice.rank();
    let coeffs = match lambda0 {
        Some(s) => parse_vector(s)?,
        None => default.iter().map(|&x| BigInt::from(x)).collect(),
    };
    let l0 = match coeffs.len() {
        2 => combine(&short, &coeffs, n),
        len if len == n => coeffs,
        len => {
            return Err(CliError::input(format!(
                "λ₀ has {len} entries; expected {n} coordinates or the 2-entry shorthand"
            )))
        }
    };
    Ok((lattice, l0))
}

pub fn gamma(k3: bool, lambda0: Option<&str>, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let (mukai, l0) = gamma_input(k3, lambda0)?;
    let lam = MukaiVector::twice(&mukai, &l0)?;
    let g = gamma_lattice(&mukai, &lam)?;
    let sigma_sq = g.lattice.norm(&g.sigma);
    let sigma_div = g.lattice.divisibility(&g.sigma)?;
    let perp = g.perp.lattice();
    if json {
        let mut doc = LatticeDocument::from_lattice(&g.lattice)?;
        doc.vectors.insert("sigma".into(), vector_to_i64(&g.sigma)?);
        let mut map = json::document(&doc);
        json::invariants(&g.lattice, &mut map);
        map.insert("model".into(), Value::from(if k3 { "k3" } else { "cubic" }));
        map.insert("lambda0".into(), json::vector(&g.lambda0));
        map.insert("sigma_square".into(), json::int(&sigma_sq));
        map.insert("sigma_divisibility".into(), json::int(&sigma_div));
        map.insert("base_index".into(), json::int(&g.index));
        map.insert("glue_square".into(), json::rational(&g.glue_square()));
        let mut p = serde_json::Map::new();
        json::invariants(&perp, &mut p);
        map.insert("lambda_perp".into(), Value::Object(p));
        return emit_json(out, map);
    }
    let mut t = KeyValue::new();
    t.row("model", if k3 { "K3 Mukai lattice" } else { "Kuznetsov component" })
        .row("lambda0", vector(&g.lambda0))
        .row("lambda perp rank", perp.rank())
        .row(
            "lambda perp disc",
            perp.disc_group().map_or("degenerate".into(), |d| crate::table::factors(&d.invariant_factors)),
        );
    describe(&mut t, &g.lattice);
    t.row("sigma^2", &sigma_sq)
        .row("div(sigma)", &sigma_div)
        .row("base index", &g.index)
        .row("glue square", g.glue_square());
    t.write(out)?;
    Ok(())
}

pub fn factoriality(file: &str, lambda0: &str, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let doc = load_document(file)?;
    let ambient = doc.lattice()?;
    let n = ambient.rank();
    let gens: Vec<Vec<BigInt>> = doc.named_vectors().into_iter().map(|(_, v)| v).collect();
    let n_alg = if gens.is_empty() {
        Sublattice::whole(ambient.clone())
    } else {
        let m = IntMatrix::from_row_vectors(&gens, n).map_err(|e| CliError::input(e.to_string()))?;
        match Sublattice::new(ambient.clone(), m.clone()) {
            Ok(s) => s,
            Err(_) => Sublattice::new(ambient.clone(), row_basis(&m))?,
        }
    };
    let coeffs = parse_vector(lambda0)?;
    let l0 = if coeffs.len() == n {
        coeffs
    } else if !gens.is_empty() && coeffs.len() == gens.len() {
        combine(&gens, &coeffs, n)
    } else {
        return Err(CliError::input(format!(
            "λ₀ has {} entries; expected {n} coordinates{}",
            coeffs.len(),
            if gens.is_empty() { String::new() } else { format!(" or {} coefficients", gens.len()) }
        )));
    };
    let verdict = core::factoriality(&n_alg, &l0)?;
    // independent count inside Γ, available when Γ can be built
    let lattice_order = if n_alg.is_saturated() {
        MukaiVector::twice(&ambient, &l0)
            .ok()
            .and_then(|lam| gamma_lattice(&ambient, &lam).ok())
            .and_then(|g| quotient_order_by_lattice(&g, &n_alg).ok())
    } else {
        None
    };
    let pairings: Vec<BigInt> = n_alg.basis().row_vectors().iter().map(|u| ambient.pair(&l0, u)).collect();
    let kind = match verdict.kind {
        FactorialityKind::LocallyFactorial => "locally factorial",
        FactorialityKind::TwoFactorial => "2-factorial",
    };
    if json {
        let mut map = json::document(&doc);
        map.insert("lambda0".into(), json::vector(&l0));
        map.insert("kind".into(), serde_json::to_value(verdict.kind).expect("serializable"));
        map.insert("witness".into(), verdict.witness.as_deref().map_or(Value::Null, json::vector));
        map.insert("quotient_order".into(), Value::from(verdict.quotient_order));
        map.insert("quotient_order_lattice".into(), lattice_order.as_ref().map_or(Value::Null, json::int));
        map.insert("pairings".into(), json::vector(&pairings));
        return emit_json(out, map);
    }
    let mut t = KeyValue::new();
    t.row("lambda0", vector(&l0))
        .row("algebraic rank", n_alg.rank())
        .row("pairings", vector(&pairings))
        .row("verdict", kind)
        .row("witness", verdict.witness.as_deref().map_or("none".into(), vector))
        .row("quotient order", verdict.quotient_order)
        .row(
            "lattice check",
            lattice_order.map_or("n/a".into(), |o| format!("quotient order {o} in Gamma")),
        );
    t.write(out)?;
    Ok(())
}

fn u_verdict(u: &UEmbedding) -> (String, Value) {
    match u {
        UEmbedding::Yes { a, b } => (
            format!("yes: a = {}, b = {}", vector(a), vector(b)),
            json!({"verdict": "yes", "a": json::vector(a), "b": json::vector(b)}),
        ),
        UEmbedding::NoByScale { scale } => (
            format!("no (scale {scale})"),
            json!({"verdict": "no_by_scale", "scale": json::int(scale)}),
        ),
        UEmbedding::NotFoundWithinBound { bound } => (
            format!("not found with coefficients up to {bound} (inconclusive)"),
            json!({"verdict": "not_found_within_bound", "bound": bound}),
        ),
    }
}

pub fn picard_lpz(d: i64, bound: i64, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if bound < 1 {
        return Err(CliError::input(format!("--bound must be positive, got {bound}")));
    }
    let p = core::picard_lpz(d)?;
    let u = contains_unimodular_u(&p.lattice, bound);
    let (u_text, u_json) = u_verdict(&u);
    let lsv = core::lsv_birational(d);
    let scale = p.lattice.scale();
    if json {
        let mut doc = LatticeDocument::from_lattice(&p.lattice)?;
        doc.name = Some(p.normal_form());
        for (i, role) in p.basis_roles.iter().enumerate() {
            let mut v = vec![0; 3];
            v[i] = 1;
            doc.vectors.insert((*role).to_string(), v);
        }
        let mut map = json::document(&doc);
        map.insert("d".into(), Value::from(p.d));
        map.insert("k".into(), Value::from(p.k));
        map.insert("raw_gram".into(), json::matrix(p.raw.gram()));
        map.insert("glued".into(), Value::from(p.glued));
        map.insert("normal_form".into(), Value::from(p.normal_form()));
        map.insert("scale".into(), json::int(&scale));
        map.insert("u_embedding".into(), u_json);
        map.insert("lsv".into(), Value::from(lsv));
        return emit_json(out, map);
    }
    let k = p.k;
    let mut t = KeyValue::new();
    t.row("d", p.d).row("k", k).row("gram (e, f, D)", p.raw.gram());
    if p.glued {
        let ids = p.identities();
        t.row("glue", format!("A = (e + {k}f + D)/3, glued"))
            .row("basis", format!("A, f, Z = D + {}f", 2 * k))
            .row(
                "identities",
                format!(
                    "A^2 = {}, A.f = {}, A.D = {}, A.e = {}, Z.A = {}, Z.f = {}, Z^2 = {}",
                    ids.a_a, ids.a_f, ids.a_d, ids.a_e, ids.z_a, ids.z_f, ids.z_z
                ),
            )
            .row("gram (A, f, Z)", p.lattice.gram());
    } else {
        t.row("glue", format!("none (d = {} mod 6)", d.rem_euclid(6)));
    }
    t.row("normal form", p.normal_form())
        .row("scale", &scale)
        .row("unimodular U", u_text)
        .row("LSV", yes_no(lsv));
    t.write(out)?;
    Ok(())
}

pub fn birational(d: i64, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if d <= 0 {
        return Err(CliError::input(format!("discriminant must be positive, got {d}")));
    }
    let r = birationality(d);
    if json {
        let mut v = serde_json::to_value(&r).expect("serializable");
        v["admissible"] = Value::from(hassett::admissible(d));
        writeln!(out, "{v}")?;
        return Ok(());
    }
    KeyValue::new()
        .row("d", d)
        .row("admissible", yes_no(hassett::admissible(d)))
        .row("K3", yes_no(r.k3))
        .row("twisted-K3 (stratum-preserving criterion)", yes_no(r.twisted_k3))
        .row("LSV", yes_no(r.lsv))
        .row("note", r.caveat)
        .write(out)?;
    Ok(())
}
