//! Discriminant-group actions of isometries and a sufficient criterion for
//! primitive embeddings into even unimodular lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::lattice::{IntegralLattice, LatticeError, Sublattice};
use crate::matrix::{rat_left_mul, IntMatrix, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NikulinError {
    #[error("lattice must be even")]
    OddLattice,
    #[error("lattice is degenerate (determinant 0)")]
    Degenerate,
    #[error("target signature ({0},{1}) is definite; the criterion needs an indefinite target")]
    DefiniteTarget(usize, usize),
    #[error("no even unimodular lattice has signature ({0},{1}): l+ - l- must be divisible by 8")]
    NoEvenUnimodular(usize, usize),
    #[error("matrix is not an isometry of the lattice")]
    NotAnIsometry,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Number of invariant factors of the discriminant group.
pub fn disc_group_length(l: &IntegralLattice) -> Result<usize, LatticeError> {
    Ok(l.disc_group()?.length())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EmbeddingVerdict {
    /// A primitive embedding exists (and is unique up to isometry).
    Exists,
    /// The sufficient criterion does not apply; nothing is claimed.
    Unknown,
}

/// Existence-and-uniqueness criterion for a primitive embedding of an even
/// lattice `T` into an even unimodular lattice of signature `(l+, l-)`
/// (Nikulin, Thm. 1.14.4):
///
/// `t+ < l+`, `t- < l-` and `rank L − rank T ≥ ℓ(A_T) + 2`.
fn nikulin_criterion(t: Signature, length: usize, l_plus: usize, l_minus: usize) -> bool {
    let corank = (l_plus + l_minus) as i64 - t.rank() as i64;
    t.positive < l_plus && t.negative < l_minus && corank >= length as i64 + 2
}

pub fn embedding_sufficient(
    t: &IntegralLattice,
    (l_plus, l_minus): (usize, usize),
) -> Result<EmbeddingVerdict, NikulinError> {
    if !t.is_even() {
        return Err(NikulinError::OddLattice);
    }
    if !t.is_nondegenerate() {
        return Err(NikulinError::Degenerate);
    }
    if l_plus == 0 || l_minus == 0 {
        return Err(NikulinError::DefiniteTarget(l_plus, l_minus));
    }
    if (l_plus as i64 - l_minus as i64).rem_euclid(8) != 0 {
        return Err(NikulinError::NoEvenUnimodular(l_plus, l_minus));
    }
    let length = disc_group_length(t)?;
    Ok(if nikulin_criterion(t.signature(), length, l_plus, l_minus) {
        EmbeddingVerdict::Exists
    } else {
        EmbeddingVerdict::Unknown
    })
}

/// Action of an isometry on `L*/L`, in the invariant-factor generators.
///
/// Row `i` holds the image of generator `i`; entry `(i, j)` is reduced
/// modulo the `j`-th invariant factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscAction {
    pub matrix: IntMatrix,
    pub factors: Vec<BigInt>,
}

impl DiscAction {
    pub fn acts_trivially(&self) -> bool {
        let m = self.factors.len();
        (0..m).all(|i| {
            (0..m).all(|j| {
                let expected = if i == j { BigInt::one() } else { BigInt::zero() };
                (&self.matrix[(i, j)] - expected).is_multiple_of(&self.factors[j])
            })
        })
    }

    /// Action of `self`'s isometry followed by `next`'s, matching the
    /// row-vector convention `x ↦ x · iso₁ · iso₂`.
    pub fn then(&self, next: &DiscAction) -> DiscAction {
        let mut matrix = self.matrix.mul(&next.matrix).expect("same group");
        for i in 0..matrix.rows() {
            for (j, d) in self.factors.iter().enumerate() {
                matrix[(i, j)] = matrix[(i, j)].mod_floor(d);
            }
        }
        DiscAction {
            matrix,
            factors: self.factors.clone(),
        }
    }
}

/// Induced action of `iso` (rows: images of basis vectors, so `x ↦ x · iso`)
/// on the discriminant group of `l`.
pub fn disc_action(l: &IntegralLattice, iso: &IntMatrix) -> Result<DiscAction, NikulinError> {
    let n = l.rank();
    if iso.rows() != n || iso.cols() != n {
        return Err(NikulinError::NotAnIsometry);
    }
    let image = iso
        .mul(l.gram())
        .and_then(|m| m.mul(&iso.transpose()))
        .map_err(LatticeError::from)?;
    if &image != l.gram() {
        return Err(NikulinError::NotAnIsometry);
    }
    let group = l.disc_group().map_err(|e| match e {
        LatticeError::Degenerate => NikulinError::Degenerate,
        other => other.into(),
    })?;
    let m = group.length();
    let mut matrix = IntMatrix::zeros(m, m);
    for (i, g) in group.generators.iter().enumerate() {
        let moved = rat_left_mul(g, iso);
        let c = group
            .coordinates(&moved)
            .expect("isometries preserve the dual lattice");
        for (j, x) in c.into_iter().enumerate() {
            matrix[(i, j)] = x;
        }
    }
    Ok(DiscAction {
        matrix,
        factors: group.invariant_factors,
    })
}

/// [`disc_action`] on the lattice induced on a sublattice.
pub fn disc_action_on(s: &Sublattice, iso: &IntMatrix) -> Result<DiscAction, NikulinError> {
    disc_action(&s.lattice(), iso)
}

pub fn acts_trivially(a: &DiscAction) -> bool {
    a.acts_trivially()
}
