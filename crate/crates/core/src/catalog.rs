//! Named lattices: hyperbolic planes, root lattices and the two Mukai
//! lattices with their distinguished classes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lattice::{IntegralLattice, LatticeError, Sublattice};
use crate::matrix::IntMatrix;

/// The hyperbolic plane `U(n)` with Gram `[[0, n], [n, 0]]`.
pub fn make_u(n: i64) -> Result<IntegralLattice, LatticeError> {
    if n == 0 {
        return Err(LatticeError::ZeroScale);
    }
    let label = if n == 1 { "U".to_string() } else { format!("U({n})") };
    Ok(IntegralLattice::new(IntMatrix::from_i64(&[[0, n], [n, 0]]))?.with_label(label))
}

pub fn make_a2() -> IntegralLattice {
    IntegralLattice::new(IntMatrix::from_i64(&[[2, -1], [-1, 2]]))
        .expect("symmetric")
        .with_label("A2")
}

/// Negative definite E8, as the negated Cartan matrix (Bourbaki numbering).
pub fn make_e8_neg() -> IntegralLattice {
    let mut m = IntMatrix::zeros(8, 8);
    for i in 0..8 {
        m[(i, i)] = BigInt::from(-2);
    }
    for (a, b) in [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)] {
        m[(a, b)] = BigInt::one();
        m[(b, a)] = BigInt::one();
    }
    IntegralLattice::new(m).expect("symmetric").with_label("E8(-1)")
}

/// `U^{⊕u} ⊕ E8(-1)^{⊕e}`.
pub fn hyperbolic_e8_sum(u: usize, e: usize) -> IntegralLattice {
    let hyp = make_u(1).expect("nonzero");
    let e8 = make_e8_neg();
    let parts = std::iter::repeat_n(&hyp, u).chain(std::iter::repeat_n(&e8, e));
    let gram = parts.fold(IntMatrix::zeros(0, 0), |acc, l| IntMatrix::block_diag(&acc, l.gram()));
    let label = match (u, e) {
        (0, _) => format!("E8(-1)^{e}"),
        (_, 0) => format!("U^{u}"),
        _ => format!("U^{u} + E8(-1)^{e}"),
    };
    IntegralLattice::new(gram).expect("symmetric").with_label(label)
}

/// The rank-24 even unimodular lattice `U^4 ⊕ E8(-1)^2` of signature (4,20).
pub fn mukai_lattice() -> IntegralLattice {
    hyperbolic_e8_sum(4, 2)
}

pub fn unit_vector(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// Mukai lattice of the Kuznetsov component of a cubic fourfold, marked by
/// the two classes spanning its algebraic `A2`.
#[derive(Clone, Debug)]
pub struct MarkedMukaiLattice {
    pub lattice: IntegralLattice,
    pub lambda1: Vec<BigInt>,
    pub lambda2: Vec<BigInt>,
}

impl MarkedMukaiLattice {
    pub fn a2(&self) -> Sublattice {
        Sublattice::from_vectors(self.lattice.clone(), &[self.lambda1.clone(), self.lambda2.clone()])
            .expect("λ₁, λ₂ are independent")
    }

    /// `a·λ₁ + b·λ₂`
    pub fn combination(&self, a: i64, b: i64) -> Vec<BigInt> {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        self.lambda1
            .iter()
            .zip(&self.lambda2)
            .map(|(x, y)| &a * x + &b * y)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }
}

/// `U^4 ⊕ E8(-1)^2` with basis `e₁, f₁, …, e₄, f₄, E8, E8` and
/// `λ₁ = e₁ + f₁`, `λ₂ = e₂ + f₂ − e₁`.
pub fn mukai_kuznetsov() -> MarkedMukaiLattice {
    let lattice = mukai_lattice().with_label("mukai-kuznetsov");
    let n = lattice.rank();
    let e = |i: usize| unit_vector(n, i);
    let add = |a: &[BigInt], b: &[BigInt]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let sub = |a: &[BigInt], b: &[BigInt]| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<_>>();
    let lambda1 = add(&e(0), &e(1));
    let lambda2 = sub(&add(&e(2), &e(3)), &e(0));
    let marked = MarkedMukaiLattice {
        lattice,
        lambda1,
        lambda2,
    };
    let l = &marked.lattice;
    assert_eq!(l.norm(&marked.lambda1), BigInt::from(2));
    assert_eq!(l.norm(&marked.lambda2), BigInt::from(2));
    assert_eq!(l.pair(&marked.lambda1, &marked.lambda2), BigInt::from(-1));
    assert!(marked.a2().is_saturated(), "marked A2 must be primitive");
    marked
}

/// Mukai lattice `H⁰ ⊕ H² ⊕ H⁴` of a K3 surface.
///
/// Coordinates are `(r, s, c₁, …, c₂₂)`: the first two span the
/// distinguished hyperbolic pair with Gram `[[0, -1], [-1, 0]]`, and `c`
/// lives in `H² = U^3 ⊕ E8(-1)^2`, so that `(r, c, s)² = c² − 2rs`.
#[derive(Clone, Debug)]
pub struct K3MukaiLattice {
    pub lattice: IntegralLattice,
    pub h0: Vec<BigInt>,
    pub h4: Vec<BigInt>,
}

impl K3MukaiLattice {
    pub fn h2_rank(&self) -> usize {
        self.lattice.rank() - 2
    }

    /// Coordinates of the Mukai vector `(r, c, s)`; `c` is given in the
    /// basis of `H²`.
    pub fn mukai_vector(&self, r: i64, c: &[BigInt], s: i64) -> Vec<BigInt> {
        assert_eq!(c.len(), self.h2_rank(), "H² class has wrong length");
        let mut v = vec![BigInt::from(r), BigInt::from(s)];
        v.extend_from_slice(c);
        v
    }

    pub fn distinguished_pair(&self) -> Sublattice {
        Sublattice::from_vectors(self.lattice.clone(), &[self.h0.clone(), self.h4.clone()])
            .expect("independent")
    }
}

pub fn mukai_k3() -> K3MukaiLattice {
    let pair = IntegralLattice::new(IntMatrix::from_i64(&[[0, -1], [-1, 0]])).expect("symmetric");
    let lattice = pair
        .direct_sum(&hyperbolic_e8_sum(3, 2))
        .with_label("mukai-k3");
    let n = lattice.rank();
    K3MukaiLattice {
        lattice,
        h0: unit_vector(n, 0),
        h4: unit_vector(n, 1),
    }
}

/// Looks up `U`, `U(n)`, `A2`, `E8-`, `mukai-k3`, `mukai-kuznetsov`.
pub fn by_name(name: &str) -> Option<IntegralLattice> {
    match name {
        "U" => make_u(1).ok(),
        "A2" => Some(make_a2()),
        "E8-" => Some(make_e8_neg()),
        "mukai-k3" => Some(mukai_k3().lattice),
        "mukai-kuznetsov" => Some(mukai_kuznetsov().lattice),
        _ => {
            let n = name.strip_prefix("U(")?.strip_suffix(')')?;
            make_u(n.trim().parse().ok()?).ok()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Signature;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn hyperbolic_planes() {
        let u = make_u(1).unwrap();
        assert_eq!(u.discriminant(), big(-1));
        assert_eq!(u.signature(), Signature::new(1, 1, 0));
        let u3 = make_u(3).unwrap();
        assert_eq!(u3.disc_group().unwrap().invariant_factors, vec![big(3), big(3)]);
        assert_eq!(make_u(-1).unwrap().discriminant(), big(-1));
        assert!(make_u(0).is_err());
    }

    #[test]
    fn root_lattices() {
        let a2 = make_a2();
        assert_eq!(a2.discriminant(), big(3));
        assert_eq!(a2.signature(), Signature::new(2, 0, 0));
        let e8 = make_e8_neg();
        assert_eq!(e8.discriminant(), big(1));
        assert_eq!(e8.signature(), Signature::new(0, 8, 0));
        assert!(e8.is_even());
    }

    #[test]
    fn kuznetsov_marking() {
        let m = mukai_kuznetsov();
        let l = &m.lattice;
        assert_eq!(l.rank(), 24);
        assert_eq!(l.discriminant(), big(1));
        assert_eq!(l.signature(), Signature::new(4, 20, 0));
        assert_eq!(l.norm(&m.lambda1), big(2));
        assert_eq!(l.pair(&m.lambda1, &m.lambda2), big(-1));
        assert_eq!(m.a2().saturation().index, big(1));
        let perp = m.a2().orth_complement();
        assert_eq!(perp.rank(), 22);
        assert_eq!(perp.lattice().disc_group().unwrap().invariant_factors, vec![big(3)]);
    }

    #[test]
    fn k3_mukai_lattice() {
        let k3 = mukai_k3();
        assert_eq!(k3.lattice.rank(), 24);
        assert_eq!(k3.lattice.discriminant(), big(1));
        assert_eq!(k3.lattice.signature(), Signature::new(4, 20, 0));
        assert_eq!(k3.distinguished_pair().lattice().discriminant(), big(-1));
        let v = k3.mukai_vector(2, &vec![BigInt::zero(); 22], -2);
        assert_eq!(k3.lattice.norm(&v), big(8));
        assert!(k3.lattice.same_coarse_invariants(&mukai_lattice()));
        assert!(mukai_kuznetsov().lattice.same_coarse_invariants(&mukai_lattice()));
    }

    #[test]
    fn catalog_names() {
        assert_eq!(by_name("U(3)").unwrap().gram(), make_u(3).unwrap().gram());
        assert_eq!(by_name("U( -2 )").unwrap().discriminant(), big(-4));
        assert_eq!(by_name("E8-").unwrap().rank(), 8);
        assert_eq!(by_name("mukai-k3").unwrap().rank(), 24);
        assert!(by_name("U(0)").is_none());
        assert!(by_name("D4").is_none());
    }

    #[test]
    fn constructors_are_deterministic() {
        assert_eq!(mukai_kuznetsov().lattice, mukai_kuznetsov().lattice);
        assert_eq!(mukai_k3().lattice, mukai_k3().lattice);
    }
}
