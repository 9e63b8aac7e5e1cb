//! Reference examples re-derived from scratch on every run.

use std::io::Write;

use num_bigint::BigInt;
use og10_lattice::catalog::{make_e8_neg, make_u, mukai_k3, mukai_kuznetsov, mukai_lattice};
use og10_lattice::hassett;
use og10_lattice::lattice::{GlueVector, IntegralLattice, Sublattice};
use og10_lattice::matrix::{IntMatrix, Signature};
use og10_lattice::nikulin::disc_action;
use og10_lattice::og10::{
    contains_unimodular_u, factoriality, gamma_lattice, k3_moduli_birational, lambda_perp, lsv_birational,
    picard_lpz, transcendental, FactorialityKind, MukaiVector, UEmbedding, DEFAULT_SEARCH_BOUND,
};
use serde_json::json;

use crate::error::CliError;

type Check = fn() -> Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn e8_signature() -> Result<(), String> {
    let s = make_e8_neg().signature();
    ensure!(s == Signature::new(0, 8, 0), "signature {s}");
    Ok(())
}

fn e8_invariants() -> Result<(), String> {
    let e8 = make_e8_neg();
    ensure!(e8.discriminant() == big(1), "det {}", e8.discriminant());
    ensure!(e8.is_even(), "odd");
    Ok(())
}

fn mukai_invariants() -> Result<(), String> {
    let l = mukai_lattice();
    ensure!(l.rank() == 24, "rank {}", l.rank());
    ensure!(l.discriminant() == big(1), "det {}", l.discriminant());
    ensure!(l.signature() == Signature::new(4, 20, 0), "signature {}", l.signature());
    Ok(())
}

fn a2_classes() -> Result<(), String> {
    let m = mukai_kuznetsov();
    let (a, b) = (&m.lambda1, &m.lambda2);
    ensure!(m.lattice.norm(a) == big(2), "λ₁² = {}", m.lattice.norm(a));
    ensure!(m.lattice.norm(b) == big(2), "λ₂² = {}", m.lattice.norm(b));
    ensure!(m.lattice.pair(a, b) == big(-1), "(λ₁, λ₂) = {}", m.lattice.pair(a, b));
    Ok(())
}

fn a2_perp() -> Result<(), String> {
    let p = mukai_kuznetsov().a2().orth_complement().lattice();
    ensure!(p.rank() == 22, "rank {}", p.rank());
    ensure!(p.signature() == Signature::new(2, 20, 0), "signature {}", p.signature());
    let f = p.disc_group().map_err(|e| e.to_string())?.invariant_factors;
    ensure!(f == [big(3)], "disc {f:?}");
    Ok(())
}

fn lambda0_perp_disc() -> Result<(), String> {
    let m = mukai_kuznetsov();
    for l0 in [m.combination(1, 1), m.lambda1.clone()] {
        let lam = MukaiVector::twice(&m.lattice, &l0).map_err(|e| e.to_string())?;
        let p = lambda_perp(&m.lattice, &lam).map_err(|e| e.to_string())?.lattice();
        let f = p.disc_group().map_err(|e| e.to_string())?.invariant_factors;
        ensure!(f == [big(2)], "disc {f:?}");
    }
    Ok(())
}

fn z2_disc_isometries_act_trivially() -> Result<(), String> {
    let m = mukai_kuznetsov();
    let lam = MukaiVector::twice(&m.lattice, &m.combination(1, 1)).map_err(|e| e.to_string())?;
    let p = lambda_perp(&m.lattice, &lam).map_err(|e| e.to_string())?.lattice();
    let minus = IntMatrix::identity(p.rank()).scaled(&big(-1));
    let a = disc_action(&p, &minus).map_err(|e| e.to_string())?;
    ensure!(a.acts_trivially(), "−id acts as {}", a.matrix);
    Ok(())
}

fn u3_gram() -> Result<(), String> {
    let u3 = make_u(3).map_err(|e| e.to_string())?;
    ensure!(u3.gram() == &IntMatrix::from_i64(&[[0, 3], [3, 0]]), "gram {}", u3.gram());
    Ok(())
}

fn pfaffian_glue() -> Result<(), String> {
    let l = IntegralLattice::new(IntMatrix::from_i64(&[[0, 3, 0], [3, 0, 0], [0, 0, -42]])).map_err(|e| e.to_string())?;
    let g = GlueVector::parse("1/3,7/3,1/3")?;
    let o = l.overlattice_from_glue(&[g]).map_err(|e| e.to_string())?;
    ensure!(o.lattice.rank() == 3, "rank {}", o.lattice.rank());
    ensure!(o.lattice.is_even(), "odd");
    ensure!(o.lattice.discriminant() == big(42), "det {}", o.lattice.discriminant());
    Ok(())
}

fn pfaffian_normal_form() -> Result<(), String> {
    let p = picard_lpz(14).map_err(|e| e.to_string())?;
    let target = make_u(1)
        .map_err(|e| e.to_string())?
        .direct_sum(&IntegralLattice::new(IntMatrix::from_i64(&[[-42]])).map_err(|e| e.to_string())?);
    ensure!(p.lattice.same_coarse_invariants(&target), "invariants differ from U ⊕ ⟨−42⟩");
    let expected = IntMatrix::from_i64(&[[0, 1, 0], [1, 0, 0], [0, 0, -42]]);
    ensure!(p.lattice.gram() == &expected, "gram {}", p.lattice.gram());
    Ok(())
}

fn k3_mukai_vector() -> Result<(), String> {
    let k3 = mukai_k3();
    let v = k3.mukai_vector(2, &vec![big(0); k3.h2_rank()], -2);
    ensure!(k3.lattice.norm(&v) == big(8), "square {}", k3.lattice.norm(&v));
    Ok(())
}

fn gamma_invariants() -> Result<(), String> {
    let m = mukai_kuznetsov();
    let lam = MukaiVector::twice(&m.lattice, &m.combination(1, 1)).map_err(|e| e.to_string())?;
    let g = gamma_lattice(&m.lattice, &lam).map_err(|e| e.to_string())?;
    let l = &g.lattice;
    ensure!(l.rank() == 24, "rank {}", l.rank());
    ensure!(l.signature() == Signature::new(3, 21, 0), "signature {}", l.signature());
    ensure!(l.is_even(), "odd");
    let f = l.disc_group().map_err(|e| e.to_string())?.invariant_factors;
    ensure!(f == [big(3)], "disc {f:?}");
    ensure!(l.norm(&g.sigma) == big(-6), "σ² = {}", l.norm(&g.sigma));
    let div = l.divisibility(&g.sigma).map_err(|e| e.to_string())?;
    ensure!(div == big(3), "div(σ) = {div}");
    ensure!(g.index == big(2), "base index {}", g.index);
    // det ratio of the base and Γ
    let ratio = g.base.lattice().discriminant() / l.discriminant();
    ensure!(ratio == big(4), "det ratio {ratio}");
    Ok(())
}

fn factoriality_a2() -> Result<(), String> {
    let m = mukai_kuznetsov();
    let v = factoriality(&m.a2(), &m.combination(1, 1)).map_err(|e| e.to_string())?;
    ensure!(v.kind == FactorialityKind::TwoFactorial, "{:?}", v.kind);
    ensure!(v.witness.as_deref() == Some(m.lambda1.as_slice()), "witness {:?}", v.witness);
    ensure!(v.quotient_order == 2, "quotient order {}", v.quotient_order);
    Ok(())
}

fn very_general_transcendental() -> Result<(), String> {
    let t = transcendental(&mukai_kuznetsov().a2()).map_err(|e| e.to_string())?;
    ensure!(t.rank() == 22, "rank {}", t.rank());
    Ok(())
}

fn u3_sum_no_u() -> Result<(), String> {
    let l = picard_lpz(12).map_err(|e| e.to_string())?.lattice;
    let v = contains_unimodular_u(&l, DEFAULT_SEARCH_BOUND);
    ensure!(v == UEmbedding::NoByScale { scale: big(3) }, "{v:?}");
    Ok(())
}

fn pfaffian_u_witness() -> Result<(), String> {
    let p = picard_lpz(14).map_err(|e| e.to_string())?;
    let (a, f) = p.u_embedding.clone().ok_or("no recorded embedding")?;
    ensure!(p.lattice.norm(&a) == big(0) && p.lattice.pair(&a, &f) == big(1), "A² or A·f wrong");
    let v = contains_unimodular_u(&p.lattice, DEFAULT_SEARCH_BOUND);
    ensure!(v == UEmbedding::Yes { a, b: f }, "{v:?}");
    Ok(())
}

fn pfaffian_predicates() -> Result<(), String> {
    ensure!(lsv_birational(14), "LSV false");
    ensure!(k3_moduli_birational(14), "K3 false");
    let r = hassett::report(14).map_err(|e| e.to_string())?;
    ensure!(r.admissible && r.star2 && r.star2prime && r.lsv, "{r:?}");
    ensure!(r.witness_n == Some(2), "witness {:?}", r.witness_n);
    Ok(())
}

fn admissibility_bounds() -> Result<(), String> {
    ensure!(hassett::admissible(8), "8 rejected");
    ensure!(!hassett::admissible(6), "6 accepted");
    Ok(())
}

fn star2_pfaffian() -> Result<(), String> {
    let w = hassett::star2(14).map_err(|e| e.to_string())?;
    ensure!(w == Some(2), "witness {w:?}");
    Ok(())
}

fn a2_is_primitive() -> Result<(), String> {
    let s: Sublattice = mukai_kuznetsov().a2();
    ensure!(s.is_saturated(), "index {}", s.saturation().index);
    Ok(())
}

pub const CHECKS: &[(&str, Check)] = &[
    ("E8(-1) signature (0,8)", e8_signature),
    ("E8(-1) unimodular and even", e8_invariants),
    ("Mukai lattice rank 24, det 1, signature (4,20)", mukai_invariants),
    ("A2 classes: squares 2, pairing -1", a2_classes),
    ("A2 primitively embedded", a2_is_primitive),
    ("A2 perp: rank 22, signature (2,20), disc [3]", a2_perp),
    ("lambda0 perp has disc group Z/2", lambda0_perp_disc),
    ("isometries act trivially on Z/2 discriminant", z2_disc_isometries_act_trivially),
    ("U(3) Gram [[0,3],[3,0]]", u3_gram),
    ("glue (1/3,7/3,1/3): even, det 42", pfaffian_glue),
    ("d = 14 Picard lattice is U + <-42>", pfaffian_normal_form),
    ("Mukai vector (2,0,-2) has square 8", k3_mukai_vector),
    ("Gamma: rank 24, (3,21), disc [3], sigma^2 -6, div 3, index 2", gamma_invariants),
    ("A2 with lambda0 = l1 + l2 is 2-factorial", factoriality_a2),
    ("very general transcendental rank 22", very_general_transcendental),
    ("U(3) + <-36> has no unimodular U", u3_sum_no_u),
    ("d = 14: (A, f) spans U", pfaffian_u_witness),
    ("d = 14: admissible, (**) n=2, (**'), K3, LSV", pfaffian_predicates),
    ("admissible(8), not admissible(6)", admissibility_bounds),
    ("(**) for 14 with n = 2", star2_pfaffian),
];

pub struct Outcome {
    pub name: &'static str,
    pub result: Result<(), String>,
}

pub fn replay() -> Vec<Outcome> {
    CHECKS
        .iter()
        .map(|&(name, check)| Outcome {
            name,
            result: std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into())),
        })
        .collect()
}

pub(crate) fn run_replay(json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let outcomes = replay();
    let passed = outcomes.iter().filter(|o| o.result.is_ok()).count();
    for o in &outcomes {
        if json {
            let detail = o.result.as_ref().err();
            writeln!(out, "{}", json!({"name": o.name, "pass": o.result.is_ok(), "detail": detail}))?;
        } else {
            match &o.result {
                Ok(()) => writeln!(out, "PASS  {}", o.name)?,
                Err(e) => writeln!(out, "FAIL  {}: {e}", o.name)?,
            }
        }
    }
    if !json {
        writeln!(out, "{passed}/{} passed", outcomes.len())?;
    }
    Ok(if passed == outcomes.len() { 0 } else { 1 })
}
