//! Integral lattices given by Gram matrices, their discriminant groups,
//! sublattices, orthogonal complements, saturations and glued overlattices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::matrix::{
    self, det, gcd_all, kernel_basis, rat_dot, rat_left_mul, row_basis, snf, IntMatrix,
    LinalgError, RatMatrix, Signature,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("Gram matrix must be symmetric")]
    NotSymmetric,
    #[error("lattice is degenerate (determinant 0)")]
    Degenerate,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("vector has length {found}, lattice has rank {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("sublattice basis vectors are linearly dependent")]
    DependentBasis,
    #[error("rescaling factor must be nonzero")]
    ZeroScale,
    #[error("glue vector {index} does not pair integrally with the lattice or the other glue vectors")]
    NonIntegralPairing { index: usize },
    #[error("glue vector {index} has odd or non-integral square on an even lattice")]
    OddGlueSquare { index: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A free Z-module with an integer-valued symmetric bilinear form.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegralLattice {
    gram: IntMatrix,
    label: Option<String>,
}

impl IntegralLattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        Ok(Self { gram, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// Signed determinant of the Gram matrix.
    pub fn discriminant(&self) -> BigInt {
        det(&self.gram).expect("Gram matrix is square")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.discriminant().is_zero()
    }

    pub fn signature(&self) -> Signature {
        matrix::signature_of_symmetric(&self.gram).expect("Gram matrix is symmetric")
    }

    /// Even iff every diagonal Gram entry is even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    /// gcd of all Gram entries, zero for the zero form.
    pub fn scale(&self) -> BigInt {
        gcd_all(self.gram.entries())
    }

    pub fn check_vector(&self, v: &[BigInt]) -> Result<(), LatticeError> {
        if v.len() != self.rank() {
            return Err(LatticeError::VectorLength {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn pair(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        self.gram.bilinear(u, v)
    }

    pub fn norm(&self, v: &[BigInt]) -> BigInt {
        self.pair(v, v)
    }

    pub fn pair_rational(&self, u: &[BigRational], v: &[BigRational]) -> BigRational {
        rat_dot(&rat_left_mul(u, &self.gram), v)
    }

    /// Positive generator of the ideal `(v, L)`.
    pub fn divisibility(&self, v: &[BigInt]) -> Result<BigInt, LatticeError> {
        self.check_vector(v)?;
        if v.iter().all(Zero::is_zero) {
            return Err(LatticeError::ZeroVector);
        }
        if !self.is_nondegenerate() {
            return Err(LatticeError::Degenerate);
        }
        Ok(gcd_all(&self.gram.left_mul_vec(v)))
    }

    pub fn disc_group(&self) -> Result<DiscriminantGroup, LatticeError> {
        DiscriminantGroup::of(self)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let label = match (self.label(), other.label()) {
            (Some(a), Some(b)) => Some(format!("{a} + {b}")),
            _ => None,
        };
        Self {
            gram: IntMatrix::block_diag(&self.gram, &other.gram),
            label,
        }
    }

    /// The lattice `L(n)`: same module, form multiplied by `n`.
    pub fn rescale(&self, n: i64) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::ZeroScale);
        }
        if n == 1 {
            return Ok(self.clone());
        }
        Ok(Self {
            gram: self.gram.scaled(&BigInt::from(n)),
            label: self.label.as_ref().map(|l| format!("{l}({n})")),
        })
    }

    /// The overlattice generated by `L` and the given rational glue vectors
    /// (coordinates in the basis of `L`).
    pub fn overlattice_from_glue(&self, glue: &[GlueVector]) -> Result<Overlattice, LatticeError> {
        let n = self.rank();
        for g in glue {
            if g.coords.len() != n {
                return Err(LatticeError::VectorLength {
                    expected: n,
                    found: g.coords.len(),
                });
            }
        }
        for (i, g) in glue.iter().enumerate() {
            if !rat_left_mul(&g.coords, &self.gram).iter().all(BigRational::is_integer) {
                return Err(LatticeError::NonIntegralPairing { index: i });
            }
            for h in &glue[..i] {
                if !self.pair_rational(&g.coords, &h.coords).is_integer() {
                    return Err(LatticeError::NonIntegralPairing { index: i });
                }
            }
            let sq = self.pair_rational(&g.coords, &g.coords);
            if !sq.is_integer() {
                return Err(LatticeError::NonIntegralPairing { index: i });
            }
            if self.is_even() && sq.to_integer().is_odd() {
                return Err(LatticeError::OddGlueSquare { index: i });
            }
        }
        if glue.is_empty() {
            return Ok(Overlattice {
                lattice: self.clone(),
                basis: RatMatrix::from_int(&IntMatrix::identity(n)),
                embedding: IntMatrix::identity(n),
                index: BigInt::one(),
            });
        }

        let denom = glue
            .iter()
            .flat_map(|g| g.coords.iter())
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut gens: Vec<Vec<BigInt>> = IntMatrix::identity(n)
            .scaled(&denom)
            .row_vectors();
        for g in glue {
            gens.push(
                g.coords
                    .iter()
                    .map(|x| (x * BigRational::from_integer(denom.clone())).to_integer())
                    .collect(),
            );
        }
        let scaled_basis = row_basis(&IntMatrix::try_from_rows(gens, n)?);
        debug_assert_eq!(scaled_basis.rows(), n);
        let mut basis = RatMatrix::from_int(&scaled_basis);
        let inv_denom = BigRational::new(BigInt::one(), denom.clone());
        for i in 0..n {
            for j in 0..n {
                basis[(i, j)] *= &inv_denom;
            }
        }
        let gram_q = basis
            .mul(&RatMatrix::from_int(&self.gram))?
            .mul(&basis.transpose())?;
        let gram = gram_q.to_int().ok_or(LatticeError::NonIntegralPairing { index: 0 })?;
        let embedding = basis
            .inverse()?
            .to_int()
            .expect("the original lattice is contained in its overlattice");
        let scaled_det = det(&scaled_basis)?.abs();
        let index = num_traits::pow(denom, n) / scaled_det;
        let lattice = Self {
            gram,
            label: self.label.as_ref().map(|l| format!("overlattice of {l}")),
        };
        if self.is_even() && !lattice.is_even() {
            return Err(LatticeError::OddGlueSquare { index: 0 });
        }
        Ok(Overlattice {
            lattice,
            basis,
            embedding,
            index,
        })
    }

    pub fn coarse_invariants(&self) -> CoarseInvariants {
        CoarseInvariants {
            rank: self.rank(),
            signature: self.signature(),
            determinant: self.discriminant(),
            even: self.is_even(),
            disc_factors: self.disc_group().ok().map(|g| g.invariant_factors),
        }
    }

    /// Rank, signature, determinant, parity and discriminant-group invariant
    /// factors agree. This is necessary for isometry but not sufficient.
    pub fn same_coarse_invariants(&self, other: &Self) -> bool {
        self.coarse_invariants() == other.coarse_invariants()
    }
}

impl fmt::Debug for IntegralLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegralLattice")
            .field("label", &self.label)
            .field("gram", &self.gram)
            .finish()
    }
}

/// Isometry-invariant data cheap enough to compare directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoarseInvariants {
    pub rank: usize,
    pub signature: Signature,
    pub determinant: BigInt,
    pub even: bool,
    pub disc_factors: Option<Vec<BigInt>>,
}

/// A rational vector in the basis of the lattice being extended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueVector {
    pub coords: Vec<BigRational>,
}

impl GlueVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    /// Parses `"1/3,7/3,1/3"`.
    pub fn parse(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

pub fn parse_rational(t: &str) -> Result<BigRational, String> {
    let bad = || format!("invalid rational number {t:?}");
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(format!("zero denominator in {t:?}"));
            }
            Ok(BigRational::new(p, q))
        }
        None => t.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
    }
}

/// Result of gluing: the new lattice, its basis in old rational coordinates
/// and the old basis expressed in the new one.
#[derive(Clone, Debug)]
pub struct Overlattice {
    pub lattice: IntegralLattice,
    /// Rows are the new basis vectors in the coordinates of the old lattice.
    pub basis: RatMatrix,
    /// Rows are the old basis vectors in the coordinates of the new lattice.
    pub embedding: IntMatrix,
    pub index: BigInt,
}

/// The finite group `L*/L` with its discriminant bilinear and quadratic
/// forms.
///
/// Generators are dual vectors written in the coordinates of `L`. For an
/// even lattice `q_values` lie in `[0, 2)`; for an odd lattice the
/// quadratic form is only defined modulo 1 and the values lie in `[0, 1)`.
/// `b_matrix` entries lie in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub invariant_factors: Vec<BigInt>,
    pub generators: Vec<Vec<BigRational>>,
    pub q_values: Vec<BigRational>,
    pub b_matrix: Vec<Vec<BigRational>>,
    pub even: bool,
    gram: IntMatrix,
    // coords(y) = (y · gram) · coords_map, reduced modulo the invariant factors
    coords_map: IntMatrix,
}

impl DiscriminantGroup {
    fn of(l: &IntegralLattice) -> Result<Self, LatticeError> {
        if !l.is_nondegenerate() {
            return Err(LatticeError::Degenerate);
        }
        let g = l.gram();
        let n = l.rank();
        // u · G · v = s. The row lattice Z^n·G equals Z^n·s·v⁻¹, so a dual
        // vector y (with y·G integral) has coordinates y·G·v modulo s, and
        // (row i of u)/dᵢ maps to the i-th unit vector.
        let sd = snf(g);
        let keep: Vec<usize> = (0..n).filter(|&i| !sd.s[(i, i)].is_one()).collect();
        let invariant_factors: Vec<BigInt> = keep.iter().map(|&i| sd.s[(i, i)].clone()).collect();
        let generators: Vec<Vec<BigRational>> = keep
            .iter()
            .map(|&i| {
                let d = &sd.s[(i, i)];
                sd.u.row(i)
                    .iter()
                    .map(|x| BigRational::new(x.clone(), d.clone()))
                    .collect()
            })
            .collect();
        let mut coords_map = IntMatrix::zeros(n, keep.len());
        for (c, &j) in keep.iter().enumerate() {
            for i in 0..n {
                coords_map[(i, c)] = sd.v[(i, j)].clone();
            }
        }
        let even = l.is_even();
        let q_modulus = if even { 2 } else { 1 };
        let q_values = generators
            .iter()
            .map(|x| reduce_mod(&l.pair_rational(x, x), q_modulus))
            .collect();
        let b_matrix = generators
            .iter()
            .map(|x| {
                generators
                    .iter()
                    .map(|y| reduce_mod(&l.pair_rational(x, y), 1))
                    .collect()
            })
            .collect();
        Ok(Self {
            invariant_factors,
            generators,
            q_values,
            b_matrix,
            even,
            gram: g.clone(),
            coords_map,
        })
    }

    /// |L*/L| = |det G|.
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    /// Minimal number of generators.
    pub fn length(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Coordinates of a dual vector with respect to the generators, each
    /// reduced into `[0, dᵢ)`. Returns `None` if `y` is not in `L*`.
    pub fn coordinates(&self, y: &[BigRational]) -> Option<Vec<BigInt>> {
        let paired = rat_left_mul(y, &self.gram);
        if !paired.iter().all(BigRational::is_integer) {
            return None;
        }
        let w: Vec<BigInt> = paired.iter().map(BigRational::to_integer).collect();
        let c = self.coords_map.left_mul_vec(&w);
        Some(
            c.into_iter()
                .zip(&self.invariant_factors)
                .map(|(x, d)| x.mod_floor(d))
                .collect(),
        )
    }

    /// Discriminant quadratic form of a dual vector.
    pub fn q(&self, y: &[BigRational]) -> BigRational {
        let v = rat_dot(&rat_left_mul(y, &self.gram), y);
        reduce_mod(&v, if self.even { 2 } else { 1 })
    }
}

/// Canonical representative of `x` in `[0, modulus)`.
pub fn reduce_mod(x: &BigRational, modulus: i64) -> BigRational {
    let m = BigRational::from_integer(BigInt::from(modulus));
    let k = (x / &m).floor();
    x - k * m
}

/// A lattice embedded in an ambient lattice by an integer basis matrix whose
/// rows are ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sublattice {
    ambient: IntegralLattice,
    basis: IntMatrix,
}

/// Primitive closure of a sublattice together with `[saturation : s]`.
#[derive(Clone, Debug)]
pub struct Saturation {
    pub sublattice: Sublattice,
    pub index: BigInt,
}

impl Sublattice {
    pub fn new(ambient: IntegralLattice, basis: IntMatrix) -> Result<Self, LatticeError> {
        if basis.cols() != ambient.rank() {
            return Err(LatticeError::VectorLength {
                expected: ambient.rank(),
                found: basis.cols(),
            });
        }
        if matrix::rank(&basis) != basis.rows() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(Self { ambient, basis })
    }

    pub fn from_vectors(ambient: IntegralLattice, vectors: &[Vec<BigInt>]) -> Result<Self, LatticeError> {
        for v in vectors {
            ambient.check_vector(v)?;
        }
        let basis = IntMatrix::from_row_vectors(vectors, ambient.rank())?;
        Self::new(ambient, basis)
    }

    pub fn whole(ambient: IntegralLattice) -> Self {
        let basis = IntMatrix::identity(ambient.rank());
        Self { ambient, basis }
    }

    pub fn ambient(&self) -> &IntegralLattice {
        &self.ambient
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn induced_gram(&self) -> IntMatrix {
        self.basis
            .mul(self.ambient.gram())
            .and_then(|m| m.mul(&self.basis.transpose()))
            .expect("basis width equals ambient rank")
    }

    /// The sublattice as an abstract lattice with the induced form.
    pub fn lattice(&self) -> IntegralLattice {
        IntegralLattice {
            gram: self.induced_gram(),
            label: None,
        }
    }

    /// `{x ∈ ambient : (x, s) = 0}`, always saturated.
    pub fn orth_complement(&self) -> Sublattice {
        let m = self
            .ambient
            .gram()
            .mul(&self.basis.transpose())
            .expect("basis width equals ambient rank");
        Sublattice {
            ambient: self.ambient.clone(),
            basis: kernel_basis(&m),
        }
    }

    pub fn saturation(&self) -> Saturation {
        let n = self.ambient.rank();
        // vectors orthogonal (for the standard dot product) to the span,
        // then everything orthogonal to those
        let k = kernel_basis(&self.basis.transpose());
        let basis = if k.rows() == 0 {
            IntMatrix::identity(n)
        } else {
            kernel_basis(&k.transpose())
        };
        let index = snf(&self.basis).elementary_divisors().iter().product();
        Saturation {
            sublattice: Sublattice {
                ambient: self.ambient.clone(),
                basis,
            },
            index,
        }
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation().index.is_one()
    }

    /// Ambient coordinates of `coeffs · basis`.
    pub fn to_ambient(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        self.basis.left_mul_vec(coeffs)
    }

    /// Coefficients of an ambient vector in this basis, if it lies in the
    /// sublattice.
    pub fn coordinates_of(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient.rank() {
            return None;
        }
        matrix::solve_left_integer(&self.basis, v)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates_of(v).is_some()
    }
}
