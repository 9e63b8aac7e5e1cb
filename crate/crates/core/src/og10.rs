//! Lattices attached to OG10-type moduli spaces on cubic fourfolds.
//!
//! For a Mukai vector `λ = 2λ₀` with `λ₀` primitive of square 2, the
//! singular moduli space has second cohomology `λ⊥`, and its symplectic
//! desingularisation has the index-2 overlattice
//!
//! ```text
//! Γ_λ = { (x, kσ/2) ∈ (λ⊥)* ⊕ Zσ/2 : k even ⇔ x ∈ λ⊥ },   σ² = −6.
//! ```
//!
//! The Hodge-theoretic identifications are modelled as the identity on
//! lattice coordinates; only lattice invariants are computed here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::hassett;
use crate::lattice::{GlueVector, IntegralLattice, LatticeError, Sublattice};
use crate::matrix::{det, gcd_all, kernel_basis, IntMatrix, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Og10Error {
    #[error("Mukai vector is not divisible by 2")]
    NotTwiceAVector,
    #[error("λ₀ is not primitive (gcd of coordinates is {0})")]
    NotPrimitive(BigInt),
    #[error("λ₀ must have square 2, found {0}")]
    WrongSquare(BigInt),
    #[error("λ₀ does not lie in the given algebraic sublattice")]
    NotInSublattice,
    #[error("algebraic sublattice is degenerate")]
    DegenerateAlgebraic,
    #[error("discriminant {0} is odd")]
    OddDiscriminant(i64),
    #[error("discriminant {0} must exceed 6")]
    DiscriminantTooSmall(i64),
    #[error("discriminant {0} is not ≡ 0, 2 (mod 6)")]
    NotAdmissible(i64),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A vector of a Mukai lattice together with its square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MukaiVector {
    coords: Vec<BigInt>,
    square: BigInt,
}

impl MukaiVector {
    pub fn new(lattice: &IntegralLattice, coords: Vec<BigInt>) -> Result<Self, Og10Error> {
        lattice.check_vector(&coords)?;
        let square = lattice.norm(&coords);
        Ok(Self { coords, square })
    }

    /// `λ = 2λ₀`.
    pub fn twice(lattice: &IntegralLattice, lambda0: &[BigInt]) -> Result<Self, Og10Error> {
        Self::new(lattice, lambda0.iter().map(|x| x * 2).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn square(&self) -> &BigInt {
        &self.square
    }

    /// `λ₀ = λ/2`, checked to be primitive of square 2.
    pub fn half(&self) -> Result<Vec<BigInt>, Og10Error> {
        if self.coords.iter().any(|x| x.is_odd()) {
            return Err(Og10Error::NotTwiceAVector);
        }
        let lambda0: Vec<BigInt> = self.coords.iter().map(|x| x / 2).collect();
        check_primitive(&lambda0)?;
        let sq = &self.square / 4;
        if sq != BigInt::from(2) {
            return Err(Og10Error::WrongSquare(sq));
        }
        Ok(lambda0)
    }
}

fn check_primitive(v: &[BigInt]) -> Result<(), Og10Error> {
    let g = gcd_all(v);
    if !g.is_one() {
        return Err(Og10Error::NotPrimitive(g));
    }
    Ok(())
}

/// `λ⊥ = λ₀⊥` inside the Mukai lattice.
pub fn lambda_perp(mukai: &IntegralLattice, lam: &MukaiVector) -> Result<Sublattice, Og10Error> {
    let lambda0 = lam.half()?;
    Ok(Sublattice::from_vectors(mukai.clone(), &[lambda0])?.orth_complement())
}

/// The overlattice `Γ_λ` with its exceptional class σ.
#[derive(Clone, Debug)]
pub struct GammaLattice {
    pub lattice: IntegralLattice,
    /// σ in the basis of `lattice`.
    pub sigma: Vec<BigInt>,
    /// Image of `λ⊥ ⊕ Zσ`; its last basis vector is σ.
    pub base: Sublattice,
    /// `λ⊥` inside the Mukai lattice.
    pub perp: Sublattice,
    pub lambda0: Vec<BigInt>,
    /// The glue `(x*, σ/2)` in the coordinates of `λ⊥ ⊕ Zσ`.
    pub glue: GlueVector,
    pub index: BigInt,
}

impl GammaLattice {
    /// Square of the glue vector `(x*, σ/2)`, an even integer.
    pub fn glue_square(&self) -> BigRational {
        self.base.lattice().pair_rational(&self.glue.coords, &self.glue.coords)
    }

    /// Coordinates in Γ of a vector of `λ⊥` given in Mukai coordinates.
    pub fn embed_perp_vector(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut c = self.perp.coordinates_of(v)?;
        c.push(BigInt::zero());
        Some(self.base.to_ambient(&c))
    }
}

pub fn gamma_lattice(mukai: &IntegralLattice, lam: &MukaiVector) -> Result<GammaLattice, Og10Error> {
    let lambda0 = lam.half()?;
    let perp = Sublattice::from_vectors(mukai.clone(), std::slice::from_ref(&lambda0))?.orth_complement();
    let perp_lattice = perp.lattice();
    let group = perp_lattice.disc_group()?;
    if group.invariant_factors != [BigInt::from(2)] {
        return Err(Og10Error::Internal(format!(
            "discriminant group of λ⊥ has invariant factors {:?}, expected [2]",
            group.invariant_factors
        )));
    }
    let sigma_line = IntegralLattice::new(IntMatrix::from_i64(&[[-6]]))?;
    let sum = perp_lattice.direct_sum(&sigma_line);
    let mut coords = group.generators[0].clone();
    coords.push(BigRational::new(BigInt::one(), BigInt::from(2)));
    let glue = GlueVector::new(coords);
    let over = sum.overlattice_from_glue(std::slice::from_ref(&glue))?;
    if over.index != BigInt::from(2) {
        return Err(Og10Error::Internal(format!("glue index {} != 2", over.index)));
    }
    let r = perp.rank();
    let sigma = over.embedding.row(r).to_vec();
    let lattice = over.lattice.with_label("Gamma");
    let base = Sublattice::new(lattice.clone(), over.embedding)?;
    Ok(GammaLattice {
        lattice,
        sigma,
        base,
        perp,
        lambda0,
        glue,
        index: over.index,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorialityKind {
    LocallyFactorial,
    TwoFactorial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialityVerdict {
    pub kind: FactorialityKind,
    /// A basis vector `u` of the algebraic lattice with `(λ₀, u)` odd.
    pub witness: Option<Vec<BigInt>>,
    /// Order of the Weil-modulo-Cartier class group quotient.
    pub quotient_order: u32,
}

/// Locally factorial iff `(λ₀, u)` is even for every algebraic `u`.
///
/// Parity of `(λ₀, ·)` is linear, so checking the basis of `n_alg`
/// suffices; the first basis vector with odd pairing is the witness.
pub fn factoriality(n_alg: &Sublattice, lambda0: &[BigInt]) -> Result<FactorialityVerdict, Og10Error> {
    let ambient = n_alg.ambient();
    ambient.check_vector(lambda0)?;
    if !n_alg.contains(lambda0) {
        return Err(Og10Error::NotInSublattice);
    }
    check_primitive(lambda0)?;
    let sq = ambient.norm(lambda0);
    if sq != BigInt::from(2) {
        return Err(Og10Error::WrongSquare(sq));
    }
    let witness = n_alg
        .basis()
        .row_vectors()
        .into_iter()
        .find(|u| ambient.pair(lambda0, u).is_odd());
    Ok(match witness {
        Some(u) => FactorialityVerdict {
            kind: FactorialityKind::TwoFactorial,
            witness: Some(u),
            quotient_order: 2,
        },
        None => FactorialityVerdict {
            kind: FactorialityKind::LocallyFactorial,
            witness: None,
            quotient_order: 1,
        },
    })
}

/// Order of `Γ^{1,1} / ((λ⊥)^{1,1} ⊕ Zσ)` computed directly in Γ: the
/// algebraic part of `λ⊥` is `n_alg ∩ λ⊥`, and `Γ^{1,1}` is the saturation
/// of its span with σ.
pub fn quotient_order_by_lattice(gamma: &GammaLattice, n_alg: &Sublattice) -> Result<BigInt, Og10Error> {
    let ambient = n_alg.ambient();
    let b = n_alg.basis();
    let pairings = IntMatrix::try_from_rows(
        b.row_vectors()
            .iter()
            .map(|u| vec![ambient.pair(u, &gamma.lambda0)])
            .collect(),
        1,
    )
    .map_err(LatticeError::from)?;
    let coeffs = kernel_basis(&pairings);
    let mut gens = Vec::with_capacity(coeffs.rows() + 1);
    for c in coeffs.row_vectors() {
        let v = b.left_mul_vec(&c);
        let g = gamma
            .embed_perp_vector(&v)
            .ok_or_else(|| Og10Error::Internal("algebraic class outside λ⊥".into()))?;
        gens.push(g);
    }
    gens.push(gamma.sigma.clone());
    let s = Sublattice::from_vectors(gamma.lattice.clone(), &gens)?;
    Ok(s.saturation().index)
}

/// Transcendental lattice surrogate: the orthogonal complement of the
/// algebraic part.
pub fn transcendental(algebraic: &Sublattice) -> Result<Sublattice, Og10Error> {
    if !algebraic.lattice().is_nondegenerate() {
        return Err(Og10Error::DegenerateAlgebraic);
    }
    Ok(algebraic.orth_complement())
}

/// Picard lattice of the desingularised LPZ variety for a cubic fourfold
/// general in the Hassett divisor of discriminant `d`.
#[derive(Clone, Debug)]
pub struct PicardLpz {
    pub d: i64,
    pub k: i64,
    /// `U(3) ⊕ ⟨D⟩` in the basis `ē, f̄, D`, before gluing.
    pub raw: IntegralLattice,
    /// Final lattice; in the basis `A, f̄, Z` when glued.
    pub lattice: IntegralLattice,
    pub basis_roles: [&'static str; 3],
    pub glued: bool,
    /// `(A, f̄)` in the basis of `lattice`, spanning a copy of `U`.
    pub u_embedding: Option<(Vec<BigInt>, Vec<BigInt>)>,
    /// Rows `A, f̄, Z` in the rational coordinates of `raw`.
    pub change_of_basis: Option<RatMatrix>,
}

/// Intersection numbers of the classes `A = (ē + kf̄ + D)/3` and
/// `Z = D + 2kf̄`, computed in `U(3) ⊕ ⟨−6k⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpzIdentities {
    pub a_a: BigRational,
    pub a_f: BigRational,
    pub a_d: BigRational,
    pub a_e: BigRational,
    pub z_a: BigRational,
    pub z_f: BigRational,
    pub z_z: BigRational,
}

impl PicardLpz {
    /// Human-readable normal form, e.g. `U ⊕ ⟨−42⟩`.
    pub fn normal_form(&self) -> String {
        let hyp = if self.glued { "U" } else { "U(3)" };
        format!("{hyp} ⊕ ⟨−{}⟩", 6 * self.k)
    }

    pub fn identities(&self) -> LpzIdentities {
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let a = vec![q(1, 3), q(self.k, 3), q(1, 3)];
        let e = vec![q(1, 1), q(0, 1), q(0, 1)];
        let f = vec![q(0, 1), q(1, 1), q(0, 1)];
        let dv = vec![q(0, 1), q(0, 1), q(1, 1)];
        let z = vec![q(0, 1), q(2 * self.k, 1), q(1, 1)];
        let p = |x: &[BigRational], y: &[BigRational]| self.raw.pair_rational(x, y);
        LpzIdentities {
            a_a: p(&a, &a),
            a_f: p(&a, &f),
            a_d: p(&a, &dv),
            a_e: p(&a, &e),
            z_a: p(&z, &a),
            z_f: p(&z, &f),
            z_z: p(&z, &z),
        }
    }
}

fn check_lpz_discriminant(d: i64) -> Result<(), Og10Error> {
    if d % 2 != 0 {
        return Err(Og10Error::OddDiscriminant(d));
    }
    if d <= 6 {
        return Err(Og10Error::DiscriminantTooSmall(d));
    }
    if !hassett::admissible(d) {
        return Err(Og10Error::NotAdmissible(d));
    }
    Ok(())
}

pub fn picard_lpz(d: i64) -> Result<PicardLpz, Og10Error> {
    check_lpz_discriminant(d)?;
    let k = d / 2;
    let raw = IntegralLattice::new(IntMatrix::from_i64(&[[0, 3, 0], [3, 0, 0], [0, 0, -6 * k]]))?
        .with_label(format!("U(3) + <{}>", -6 * k));
    if d % 6 == 0 {
        return Ok(PicardLpz {
            d,
            k,
            lattice: raw.clone(),
            raw,
            basis_roles: ["e", "f", "D"],
            glued: false,
            u_embedding: None,
            change_of_basis: None,
        });
    }

    let q = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(3));
    let glue = GlueVector::new(vec![q(1), q(k), q(1)]);
    let over = raw.overlattice_from_glue(&[glue])?;
    let int = |n: i64| BigRational::from_integer(BigInt::from(n));
    let target = RatMatrix::from_row_vectors(
        &[
            vec![q(1), q(k), q(1)],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(2 * k), int(1)],
        ],
        3,
    );
    // express A, f̄, Z in the overlattice basis; they must form a Z-basis
    let change = target
        .mul(&over.basis.inverse().map_err(LatticeError::from)?)
        .map_err(LatticeError::from)?
        .to_int()
        .ok_or_else(|| Og10Error::Internal("A, f, Z do not lie in the glued lattice".into()))?;
    if !det(&change).map_err(LatticeError::from)?.abs().is_one() {
        return Err(Og10Error::Internal("A, f, Z do not form a basis".into()));
    }
    let gram = change
        .mul(over.lattice.gram())
        .and_then(|m| m.mul(&change.transpose()))
        .map_err(LatticeError::from)?;
    let expected = IntMatrix::from_i64(&[[0, 1, 0], [1, 0, 0], [0, 0, -6 * k]]);
    if gram != expected {
        return Err(Og10Error::Internal(format!("Gram in basis A, f, Z is {gram}")));
    }
    let lattice = IntegralLattice::new(gram)?.with_label(format!("U + <{}>", -6 * k));
    let unit = |i: usize| crate::catalog::unit_vector(3, i);
    Ok(PicardLpz {
        d,
        k,
        raw,
        lattice,
        basis_roles: ["A", "f", "Z"],
        glued: true,
        u_embedding: Some((unit(0), unit(1))),
        change_of_basis: Some(target),
    })
}

/// Outcome of the search for a primitive copy of `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UEmbedding {
    /// `a² = b² = 0`, `(a, b) = 1`.
    Yes { a: Vec<BigInt>, b: Vec<BigInt> },
    /// Every pairing is divisible by `scale > 1`, so no vectors pair to 1.
    NoByScale { scale: BigInt },
    /// Inconclusive: nothing found with coefficients in `[−bound, bound]`.
    NotFoundWithinBound { bound: i64 },
}

pub const DEFAULT_SEARCH_BOUND: i64 = 32;

/// Looks for a hyperbolic pair. The search walks shells of growing sup-norm
/// and considers one sign per isotropic vector; its cost grows like
/// `(2·bound + 1)^rank`, so it is only practical for small ranks.
pub fn contains_unimodular_u(l: &IntegralLattice, bound: i64) -> UEmbedding {
    let scale = l.scale();
    if scale > BigInt::one() {
        return UEmbedding::NoByScale { scale };
    }
    let n = l.rank();
    if n < 2 {
        return UEmbedding::NotFoundWithinBound { bound };
    }
    for r in 1..=bound {
        for a in shell(n, r) {
            let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
            if !l.norm(&a).is_zero() {
                continue;
            }
            let w = l.gram().left_mul_vec(&a);
            let Some(b) = bezout_vector(&w) else {
                continue;
            };
            let b_sq = l.norm(&b);
            if b_sq.is_odd() {
                continue;
            }
            // (b − t·a)² = b² − 2t when a² = 0 and (a, b) = 1
            let t = b_sq / 2;
            let b: Vec<BigInt> = b.iter().zip(&a).map(|(x, y)| x - &t * y).collect();
            return UEmbedding::Yes { a, b };
        }
    }
    UEmbedding::NotFoundWithinBound { bound }
}

/// Vectors of sup-norm exactly `r` whose first nonzero entry is positive,
/// ordered by L¹ norm and then by descending lexicographic order.
fn shell(n: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut v = vec![-r; n];
    loop {
        let sup = v.iter().map(|x| x.abs()).max().unwrap_or(0);
        let first = v.iter().find(|&&x| x != 0).copied().unwrap_or(0);
        if sup == r && first > 0 {
            out.push(v.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                out.sort_by(|x, y| {
                    let l1 = |v: &[i64]| v.iter().map(|x| x.abs()).sum::<i64>();
                    l1(x).cmp(&l1(y)).then_with(|| y.cmp(x))
                });
                return out;
            }
            i -= 1;
            if v[i] < r {
                v[i] += 1;
                break;
            }
            v[i] = -r;
        }
    }
}

/// Some `b` with `w · b = 1`, if the entries of `w` are coprime.
fn bezout_vector(w: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut g = BigInt::zero();
    let mut b = vec![BigInt::zero(); w.len()];
    for (i, wi) in w.iter().enumerate() {
        if wi.is_zero() {
            continue;
        }
        let eg = g.extended_gcd(wi);
        for x in b.iter_mut() {
            *x *= &eg.x;
        }
        b[i] = eg.y;
        g = eg.gcd;
    }
    if g.is_negative() {
        g = -g;
        for x in b.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    g.is_one().then_some(b)
}

pub fn lsv_birational(d: i64) -> bool {
    hassett::lsv(d)
}

/// Admissible and satisfying `d | 2n² + 2n + 2` for some `n`.
pub fn k3_moduli_birational(d: i64) -> bool {
    hassett::admissible(d) && matches!(hassett::star2(d), Ok(Some(_)))
}

/// Admissible and satisfying the even-exponent condition on `d/2`. The
/// birational statement additionally needs a stratum-preserving hypothesis
/// that is not numerical.
pub fn twisted_k3_stratum_birational(d: i64) -> bool {
    hassett::admissible(d) && d % 2 == 0 && matches!(hassett::star2prime(d), Ok(true))
}

pub const STRATUM_CAVEAT: &str =
    "numerical criterion only; birationality also requires a stratum-preserving isometry";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BirationalityReport {
    pub d: i64,
    pub k3: bool,
    pub twisted_k3: bool,
    pub lsv: bool,
    pub caveat: &'static str,
}

pub fn birationality(d: i64) -> BirationalityReport {
    BirationalityReport {
        d,
        k3: k3_moduli_birational(d),
        twisted_k3: twisted_k3_stratum_birational(d),
        lsv: lsv_birational(d),
        caveat: STRATUM_CAVEAT,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_u, mukai_k3, mukai_kuznetsov};
    use crate::matrix::Signature;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| big(x)).collect()
    }

    #[test]
    fn lambda_perp_invariants() {
        let m = mukai_kuznetsov();
        for (a, b) in [(1, 1), (1, 0)] {
            let lam = MukaiVector::twice(&m.lattice, &m.combination(a, b)).unwrap();
            let perp = lambda_perp(&m.lattice, &lam).unwrap();
            let pl = perp.lattice();
            assert_eq!(perp.rank(), 23);
            assert_eq!(pl.signature(), Signature::new(3, 20, 0));
            assert_eq!(pl.disc_group().unwrap().invariant_factors, ints(&[2]));
        }
    }

    #[test]
    fn lambda_validation() {
        let m = mukai_kuznetsov();
        let lam = MukaiVector::twice(&m.lattice, &m.combination(2, 0)).unwrap();
        assert!(matches!(lambda_perp(&m.lattice, &lam), Err(Og10Error::NotPrimitive(_))));
        let lam = MukaiVector::new(&m.lattice, m.lambda1.clone()).unwrap();
        assert_eq!(lambda_perp(&m.lattice, &lam).unwrap_err(), Og10Error::NotTwiceAVector);
        // e₁ is isotropic
        let lam = MukaiVector::twice(&m.lattice, &crate::catalog::unit_vector(24, 0)).unwrap();
        assert_eq!(lambda_perp(&m.lattice, &lam).unwrap_err(), Og10Error::WrongSquare(big(0)));
    }

    #[test]
    fn gamma_invariants() {
        let m = mukai_kuznetsov();
        let lam = MukaiVector::twice(&m.lattice, &m.combination(1, 1)).unwrap();
        let g = gamma_lattice(&m.lattice, &lam).unwrap();
        let l = &g.lattice;
        assert_eq!(l.rank(), 24);
        assert_eq!(l.signature(), Signature::new(3, 21, 0));
        assert!(l.is_even());
        assert_eq!(l.disc_group().unwrap().invariant_factors, ints(&[3]));
        assert_eq!(l.norm(&g.sigma), big(-6));
        assert_eq!(l.divisibility(&g.sigma).unwrap(), big(3));
        assert_eq!(g.index, big(2));
        assert_eq!(g.base.saturation().index, big(2));
        let gs = g.glue_square();
        assert!(gs.is_integer() && gs.to_integer().is_even());
    }

    #[test]
    fn gamma_on_k3_lattice() {
        let k3 = mukai_k3();
        let w = k3.mukai_vector(1, &vec![BigInt::zero(); 22], -1);
        let lam = MukaiVector::twice(&k3.lattice, &w).unwrap();
        assert_eq!(lam.square(), &big(8));
        let g = gamma_lattice(&k3.lattice, &lam).unwrap();
        assert_eq!(g.lattice.signature(), Signature::new(3, 21, 0));
        assert_eq!(g.lattice.divisibility(&g.sigma).unwrap(), big(3));
    }

    #[test]
    fn factoriality_examples() {
        let m = mukai_kuznetsov();
        let a2 = m.a2();
        let v = factoriality(&a2, &m.combination(1, 1)).unwrap();
        assert_eq!(v.kind, FactorialityKind::TwoFactorial);
        assert_eq!(v.witness.as_deref(), Some(m.lambda1.as_slice()));
        assert_eq!(v.quotient_order, 2);
        let v = factoriality(&a2, &m.lambda1).unwrap();
        assert_eq!(v.kind, FactorialityKind::TwoFactorial);

        // Gram [[2, 0], [0, -4]]: λ₁ and e₂ − 2f₂
        let mut w = vec![BigInt::zero(); 24];
        w[2] = big(1);
        w[3] = big(-2);
        let n_alg = Sublattice::from_vectors(m.lattice.clone(), &[m.lambda1.clone(), w]).unwrap();
        assert_eq!(n_alg.induced_gram(), IntMatrix::from_i64(&[[2, 0], [0, -4]]));
        let v = factoriality(&n_alg, &m.lambda1).unwrap();
        assert_eq!(v.kind, FactorialityKind::LocallyFactorial);
        assert_eq!(v.quotient_order, 1);
        assert!(v.witness.is_none());
    }

    #[test]
    fn factoriality_errors() {
        let m = mukai_kuznetsov();
        let line = Sublattice::from_vectors(m.lattice.clone(), &[m.lambda1.clone()]).unwrap();
        assert_eq!(
            factoriality(&line, &m.lambda2).unwrap_err(),
            Og10Error::NotInSublattice
        );
    }

    #[test]
    fn quotient_order_agrees_with_parity_on_examples() {
        let m = mukai_kuznetsov();
        let lam = MukaiVector::twice(&m.lattice, &m.combination(1, 1)).unwrap();
        let g = gamma_lattice(&m.lattice, &lam).unwrap();
        assert_eq!(quotient_order_by_lattice(&g, &m.a2()).unwrap(), big(2));
        let line = Sublattice::from_vectors(m.lattice.clone(), &[m.combination(1, 1)]).unwrap();
        assert_eq!(factoriality(&line, &m.combination(1, 1)).unwrap().quotient_order, 1);
        assert_eq!(quotient_order_by_lattice(&g, &line).unwrap(), big(1));
    }

    #[test]
    fn transcendental_ranks() {
        let m = mukai_kuznetsov();
        assert_eq!(transcendental(&m.a2()).unwrap().rank(), 22);
        assert_eq!(transcendental(&Sublattice::whole(m.lattice.clone())).unwrap().rank(), 0);
        // an extra class of square −6k orthogonal to A2: e₃ − 3f₃ (k = 1)
        let mut x = vec![BigInt::zero(); 24];
        x[4] = big(1);
        x[5] = big(-3);
        let alg = Sublattice::from_vectors(m.lattice.clone(), &[m.lambda1.clone(), m.lambda2.clone(), x])
            .unwrap();
        assert_eq!(alg.induced_gram()[(2, 2)], big(-6));
        assert_eq!(transcendental(&alg).unwrap().rank(), 21);
        let iso = Sublattice::from_vectors(m.lattice.clone(), &[crate::catalog::unit_vector(24, 0)]).unwrap();
        assert_eq!(transcendental(&iso).unwrap_err(), Og10Error::DegenerateAlgebraic);
    }

    #[test]
    fn picard_lpz_examples() {
        let p = picard_lpz(14).unwrap();
        assert!(p.glued);
        assert_eq!(p.lattice.gram(), &IntMatrix::from_i64(&[[0, 1, 0], [1, 0, 0], [0, 0, -42]]));
        assert_eq!(p.normal_form(), "U ⊕ ⟨−42⟩");
        let q = picard_lpz(12).unwrap();
        assert!(!q.glued);
        assert_eq!(q.lattice.scale(), big(3));
        assert_eq!(q.normal_form(), "U(3) ⊕ ⟨−36⟩");
        let r = picard_lpz(8).unwrap();
        let target = make_u(1).unwrap().direct_sum(
            &IntegralLattice::new(IntMatrix::from_i64(&[[-24]])).unwrap(),
        );
        assert!(r.lattice.same_coarse_invariants(&target));
    }

    #[test]
    fn picard_lpz_rejections() {
        assert_eq!(picard_lpz(15).unwrap_err(), Og10Error::OddDiscriminant(15));
        assert_eq!(picard_lpz(6).unwrap_err(), Og10Error::DiscriminantTooSmall(6));
        assert_eq!(picard_lpz(10).unwrap_err(), Og10Error::NotAdmissible(10));
    }

    #[test]
    fn identities_for_pfaffian() {
        let ids = picard_lpz(14).unwrap().identities();
        let q = |n: i64| BigRational::from_integer(big(n));
        assert_eq!(ids.a_a, q(0));
        assert_eq!(ids.a_f, q(1));
        assert_eq!(ids.a_d, q(-14));
        assert_eq!(ids.a_e, q(7));
        assert_eq!(ids.z_a, q(0));
        assert_eq!(ids.z_f, q(0));
        assert_eq!(ids.z_z, q(-42));
    }

    #[test]
    fn u_search() {
        let u3 = make_u(3)
            .unwrap()
            .direct_sum(&IntegralLattice::new(IntMatrix::from_i64(&[[-36]])).unwrap());
        assert_eq!(
            contains_unimodular_u(&u3, DEFAULT_SEARCH_BOUND),
            UEmbedding::NoByScale { scale: big(3) }
        );
        let p = picard_lpz(14).unwrap();
        assert_eq!(
            contains_unimodular_u(&p.lattice, DEFAULT_SEARCH_BOUND),
            UEmbedding::Yes { a: ints(&[1, 0, 0]), b: ints(&[0, 1, 0]) }
        );
        assert_eq!(
            contains_unimodular_u(&make_u(1).unwrap(), 4),
            UEmbedding::Yes { a: ints(&[1, 0]), b: ints(&[0, 1]) }
        );
        // definite: no isotropic vectors at all
        let a2 = crate::catalog::make_a2();
        assert_eq!(contains_unimodular_u(&a2, 3), UEmbedding::NotFoundWithinBound { bound: 3 });
    }

    #[test]
    fn u_search_reduces_b() {
        // U written in the basis e, e + f: Gram [[0,1],[1,2]]
        let l = IntegralLattice::new(IntMatrix::from_i64(&[[0, 1], [1, 2]])).unwrap();
        match contains_unimodular_u(&l, 2) {
            UEmbedding::Yes { a, b } => {
                assert!(l.norm(&a).is_zero());
                assert!(l.norm(&b).is_zero());
                assert!(l.pair(&a, &b).is_one());
            }
            other => panic!("expected a hyperbolic pair, got {other:?}"),
        }
    }

    #[test]
    fn birationality_predicates() {
        assert!(lsv_birational(14));
        assert!(!lsv_birational(12));
        assert!(lsv_birational(20));
        assert!(k3_moduli_birational(14));
        assert!(!k3_moduli_birational(8));
        assert!(twisted_k3_stratum_birational(8));
        assert!(!k3_moduli_birational(7));
        let r = birationality(14);
        assert!(r.k3 && r.twisted_k3 && r.lsv);
    }

    #[test]
    fn bezout() {
        let w = ints(&[6, 10, 15]);
        let b = bezout_vector(&w).unwrap();
        assert_eq!(crate::matrix::dot(&w, &b), big(1));
        assert!(bezout_vector(&ints(&[2, 4])).is_none());
    }
}
