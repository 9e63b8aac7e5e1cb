//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use og10_lattice::catalog::mukai_kuznetsov;
use og10_lattice::hassett;
use og10_lattice::lattice::{IntegralLattice, Sublattice};
use og10_lattice::matrix::{det, hnf, signature_of_symmetric, snf, IntMatrix};
use og10_lattice::og10::{
    contains_unimodular_u, factoriality, gamma_lattice, picard_lpz, quotient_order_by_lattice,
    FactorialityKind, MukaiVector, UEmbedding, DEFAULT_SEARCH_BOUND,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cli(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = og10_cli::run(std::iter::once("og10lat").chain(args.iter().copied()), &mut out, &mut err);
    let out = String::from_utf8(out).map_err(|e| e.to_string())?;
    ensure!(code == 0, "{args:?} exited {code}: {}", String::from_utf8_lossy(&err));
    Ok(out)
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    serde_json::from_str(cli(args)?.trim()).map_err(|e| e.to_string())
}

fn value_line<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines().find_map(|l| l.strip_prefix(key)).map(str::trim)
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    ensure!(t < limit, "took {t:?}, limit {limit:?}");
    Ok(())
}

fn gamma_invariants() -> Outcome {
    let start = Instant::now();
    let v = cli_json(&["og10", "gamma", "--cubic", "--json"])?;
    ensure!(v["rank"] == 24, "rank {}", v["rank"]);
    ensure!(v["signature"]["positive"] == 3 && v["signature"]["negative"] == 21, "signature {}", v["signature"]);
    ensure!(v["even"] == true, "odd");
    ensure!(v["disc_group"]["invariant_factors"] == serde_json::json!([3]), "disc {}", v["disc_group"]);
    ensure!(v["sigma_square"] == -6, "σ² {}", v["sigma_square"]);
    ensure!(v["sigma_divisibility"] == 3, "div(σ) {}", v["sigma_divisibility"]);
    ensure!(v["base_index"] == 2, "index {}", v["base_index"]);
    within(start, Duration::from_secs(1))
}

fn perp_invariants() -> Outcome {
    let start = Instant::now();
    for l0 in ["1,1", "1,0"] {
        let v = cli_json(&["og10", "gamma", "--cubic", "--lambda0", l0, "--json"])?;
        let p = &v["lambda_perp"];
        ensure!(p["rank"] == 23, "λ₀ = {l0}: rank {}", p["rank"]);
        ensure!(p["signature"]["positive"] == 3 && p["signature"]["negative"] == 20, "signature {}", p["signature"]);
        ensure!(p["disc_group"]["invariant_factors"] == serde_json::json!([2]), "disc {}", p["disc_group"]);
    }
    within(start, Duration::from_secs(1))
}

/// `e_i + f_i + Σ a_j e_j`: square 2, primitive.
fn random_lambda0(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigInt> {
    let i = rng.gen_range(0..4);
    let mut v = vec![BigInt::zero(); n];
    v[2 * i] = big(1);
    v[2 * i + 1] = big(1);
    for j in (0..4).filter(|&j| j != i) {
        v[2 * j] = big(rng.gen_range(-2..=2));
    }
    v
}

fn factoriality_criterion() -> Outcome {
    let v = cli_json(&["og10", "factoriality", "--picard", "mukai-kuznetsov", "--lambda0", "1,1", "--json"])?;
    ensure!(v["kind"] == "TwoFactorial", "A2: {}", v["kind"]);
    ensure!(v["witness"] == v["vectors"]["lambda1"], "witness {}", v["witness"]);

    let synthetic = IntegralLattice::new(IntMatrix::from_i64(&[[2, 0], [0, -4]])).map_err(|e| e.to_string())?;
    let s = factoriality(&Sublattice::whole(synthetic), &[big(1), big(0)]).map_err(|e| e.to_string())?;
    ensure!(s.kind == FactorialityKind::LocallyFactorial && s.quotient_order == 1, "synthetic: {s:?}");

    let m = mukai_kuznetsov();
    let n = m.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut counts = [0usize; 2];
    for trial in 0..1000 {
        let l0 = random_lambda0(&mut rng, n);
        let mut gens = vec![l0.clone()];
        for _ in 0..rng.gen_range(0..=3) {
            gens.push((0..n).map(|i| big(if i < 8 || rng.gen_bool(0.1) { rng.gen_range(-3..=3) } else { 0 })).collect());
        }
        let Ok(span) = Sublattice::from_vectors(m.lattice.clone(), &gens) else {
            continue;
        };
        let n_alg = span.saturation().sublattice;
        let v = factoriality(&n_alg, &l0).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure!(v.quotient_order == 1 || v.quotient_order == 2, "trial {trial}: order {}", v.quotient_order);
        ensure!(
            (v.kind == FactorialityKind::TwoFactorial) == v.witness.is_some()
                && v.witness.is_some() == (v.quotient_order == 2),
            "trial {trial}: inconsistent {v:?}"
        );
        if let Some(w) = &v.witness {
            ensure!(m.lattice.pair(&l0, w).is_odd(), "trial {trial}: witness pairs evenly");
        }
        if trial % 20 == 0 {
            let lam = MukaiVector::twice(&m.lattice, &l0).map_err(|e| e.to_string())?;
            let g = gamma_lattice(&m.lattice, &lam).map_err(|e| e.to_string())?;
            let order = quotient_order_by_lattice(&g, &n_alg).map_err(|e| e.to_string())?;
            ensure!(order == big(v.quotient_order.into()), "trial {trial}: lattice route gives {order}");
        }
        counts[(v.quotient_order - 1) as usize] += 1;
    }
    ensure!(counts[0] + counts[1] >= 900, "only {} valid inputs", counts[0] + counts[1]);
    ensure!(counts[0] > 0 && counts[1] > 0, "one kind never occurred: {counts:?}");
    Ok(())
}

fn hassett_table() -> Outcome {
    let start = Instant::now();
    let out = cli(&["hassett", "list", "--max", "200", "--json"])?;
    let reports: Vec<hassett::HassettReport> = out
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let ds: Vec<i64> = reports.iter().map(|r| r.d).collect();
    let filter: Vec<i64> = (1..=200).filter(|d| *d > 6 && (d % 6 == 0 || d % 6 == 2)).collect();
    ensure!(ds == filter, "admissible list {ds:?}");
    let star2: Vec<i64> = reports.iter().filter(|r| r.d <= 50 && r.star2).map(|r| r.d).collect();
    ensure!(star2 == [14, 26, 38, 42], "(**) subset {star2:?}");
    for r in &reports {
        let brute = (0..=10 * r.d).find(|n| (2 * n * n + 2 * n + 2) % r.d == 0);
        ensure!(r.star2 == brute.is_some(), "d = {}: (**) disagrees with scan", r.d);
        if let Some(n) = r.witness_n {
            ensure!((2 * n * n + 2 * n + 2) % r.d == 0, "d = {}: bad witness {n}", r.d);
        }
    }
    let star2p: Vec<i64> = reports.iter().filter(|r| r.d <= 32 && r.star2prime).map(|r| r.d).collect();
    ensure!(star2p == [8, 14, 18, 24, 26, 32], "(**') subset {star2p:?}");
    let lsv: Vec<i64> = reports.iter().filter(|r| r.lsv).map(|r| r.d).collect();
    let expected: Vec<i64> = filter.iter().copied().filter(|d| d % 6 == 2).collect();
    ensure!(lsv == expected, "LSV subset {lsv:?}");
    within(start, Duration::from_secs(1))
}

fn lpz_sweep() -> Outcome {
    let start = Instant::now();
    let q = |n: i64| BigRational::from_integer(big(n));
    for d in (8..=200).filter(|&d| hassett::admissible(d)) {
        let p = picard_lpz(d).map_err(|e| format!("d = {d}: {e}"))?;
        let k = d / 2;
        if d % 6 == 2 {
            let ids = p.identities();
            ensure!(ids.a_a == q(0) && ids.a_f == q(1) && ids.a_d == q(-2 * k) && ids.a_e == q(k), "d = {d}: {ids:?}");
            ensure!(ids.z_a == q(0) && ids.z_f == q(0) && ids.z_z == q(-6 * k), "d = {d}: {ids:?}");
            let expected = IntMatrix::from_i64(&[[0, 1, 0], [1, 0, 0], [0, 0, -6 * k]]);
            ensure!(p.glued && p.lattice.gram() == &expected, "d = {d}: gram {}", p.lattice.gram());
            let u = contains_unimodular_u(&p.lattice, DEFAULT_SEARCH_BOUND);
            ensure!(matches!(u, UEmbedding::Yes { .. }), "d = {d}: {u:?}");
        } else {
            ensure!(p.lattice.scale() == big(3), "d = {d}: scale {}", p.lattice.scale());
            let u = contains_unimodular_u(&p.lattice, DEFAULT_SEARCH_BOUND);
            ensure!(u == UEmbedding::NoByScale { scale: big(3) }, "d = {d}: {u:?}");
        }
    }
    within(start, Duration::from_secs(5))
}

fn pfaffian_end_to_end() -> Outcome {
    let out = cli(&["og10", "birational", "14"])?;
    for key in ["K3", "twisted-K3 (stratum-preserving criterion)", "LSV"] {
        ensure!(value_line(&out, key) == Some("yes"), "{key}: {:?}", value_line(&out, key));
    }
    let out = cli(&["og10", "picard-lpz", "14"])?;
    ensure!(out.contains("U ⊕ ⟨−42⟩"), "normal form missing:\n{out}");
    Ok(())
}

fn random_matrix(rng: &mut ChaCha8Rng, square: bool) -> IntMatrix {
    let r = rng.gen_range(1..=6);
    let c = if square { r } else { rng.gen_range(1..=6) };
    let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    IntMatrix::from_i64(&rows)
}

/// Product of random elementary row operations.
fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut t = IntMatrix::identity(n);
    for _ in 0..12 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut e = IntMatrix::identity(n);
        if i == j {
            e[(i, i)] = big(-1);
        } else {
            e[(i, j)] = big(rng.gen_range(-3..=3));
        }
        t = e.mul(&t).expect("square");
    }
    t
}

/// `b + bᵀ` for a random square `b`: symmetric and usually indefinite.
fn random_symmetric(rng: &mut ChaCha8Rng) -> IntMatrix {
    let b = random_matrix(rng, true);
    let mut s = b.clone();
    for i in 0..b.rows() {
        for j in 0..b.rows() {
            s[(i, j)] = &b[(i, j)] + &b[(j, i)];
        }
    }
    s
}

fn linalg_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..1000 {
        let m = random_matrix(&mut rng, trial % 2 == 0);
        let sd = snf(&m);
        let prod = sd.u.mul(&m).and_then(|x| x.mul(&sd.v)).map_err(|e| e.to_string())?;
        ensure!(prod == sd.s, "trial {trial}: u·m·v ≠ s for {m}");
        ensure!(det(&sd.u).map_err(|e| e.to_string())?.abs().is_one(), "trial {trial}: u not unimodular");
        ensure!(det(&sd.v).map_err(|e| e.to_string())?.abs().is_one(), "trial {trial}: v not unimodular");
        let diag = sd.diagonal();
        for w in diag.windows(2) {
            let ok = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            ensure!(ok, "trial {trial}: chain broken {diag:?}");
        }
        if m.is_square() {
            let p: BigInt = diag.iter().product();
            ensure!(det(&m).map_err(|e| e.to_string())?.abs() == p, "trial {trial}: det mismatch");
        }
        let h = hnf(&m);
        ensure!(hnf(&h) == h, "trial {trial}: hnf not idempotent");
    }
    for trial in 0..200 {
        let g = random_symmetric(&mut rng);
        let t = random_unimodular(&mut rng, g.rows());
        let conj = t.transpose().mul(&g).and_then(|x| x.mul(&t)).map_err(|e| e.to_string())?;
        let s1 = signature_of_symmetric(&g).map_err(|e| e.to_string())?;
        let s2 = signature_of_symmetric(&conj).map_err(|e| e.to_string())?;
        ensure!(s1 == s2, "trial {trial}: {s1} vs {s2}");
    }
    within(start, Duration::from_secs(10))
}

fn oracle_equivalences() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(1..=3);
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                let x = rng.gen_range(-12..=12);
                rows[i][j] = x;
                rows[j][i] = x;
            }
        }
        let l = IntegralLattice::new(IntMatrix::from_i64(&rows)).map_err(|e| e.to_string())?;
        if !l.is_nondegenerate() {
            continue;
        }
        done += 1;
        let order = l.disc_group().map_err(|e| e.to_string())?.order();
        ensure!(order == l.discriminant().abs(), "{}: order {order}", l.gram());
        let v: Vec<BigInt> = loop {
            let v: Vec<BigInt> = (0..n).map(|_| big(rng.gen_range(-6..=6))).collect();
            if v.iter().any(|x| !x.is_zero()) {
                break v;
            }
        };
        let div = l.divisibility(&v).map_err(|e| e.to_string())?;
        let mut scan = BigInt::zero();
        for _ in 0..1000 {
            let w: Vec<BigInt> = (0..n).map(|_| big(rng.gen_range(-20..=20))).collect();
            scan = scan.gcd(&l.pair(&v, &w));
        }
        ensure!(scan == div, "{} v = {v:?}: basis gcd {div}, scan {scan}", l.gram());
    }
    within(start, Duration::from_secs(5))
}

fn replay() -> Outcome {
    let out = cli(&["paper", "replay"])?;
    let failed: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
    ensure!(failed.is_empty(), "{failed:?}");
    ensure!(out.lines().any(|l| l.starts_with("PASS")), "no checks ran");
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Gamma invariants", gamma_invariants),
        ("lambda perp invariants", perp_invariants),
        ("factoriality", factoriality_criterion),
        ("Hassett table to 200", hassett_table),
        ("Picard lattice sweep to 200", lpz_sweep),
        ("d = 14 end to end", pfaffian_end_to_end),
        ("exact linear algebra properties", linalg_properties),
        ("oracle equivalences", oracle_equivalences),
        ("reference replay", replay),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(()) => println!("criterion {}: PASS  {name} ({ms} ms)", i + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {}: FAIL  {name} ({ms} ms): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
