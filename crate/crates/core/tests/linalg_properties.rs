use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use og10_lattice::matrix::{det, hnf, kernel_basis, signature_of_symmetric, snf, IntMatrix};
use proptest::prelude::*;

fn matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |xs| {
            let rows: Vec<Vec<i64>> = xs.chunks(c).map(<[i64]>::to_vec).collect();
            IntMatrix::from_i64(&rows)
        })
    })
}

fn square(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(|n| {
        proptest::collection::vec(-9i64..=9, n * n).prop_map(move |xs| {
            let rows: Vec<Vec<i64>> = xs.chunks(n).map(<[i64]>::to_vec).collect();
            IntMatrix::from_i64(&rows)
        })
    })
}

fn symmetric(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    square(max_dim).prop_map(|m| {
        let mut s = m.clone();
        for i in 0..m.rows() {
            for j in 0..i {
                s[(j, i)] = m[(i, j)].clone();
            }
        }
        s
    })
}

/// Product of elementary row operations: unimodular by construction.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut t = IntMatrix::identity(n);
        for (i, j, q, neg) in ops {
            let mut e = IntMatrix::identity(n);
            if i != j {
                e[(i, j)] = BigInt::from(q);
            } else if neg {
                e[(i, i)] = BigInt::from(-1);
            }
            t = e.mul(&t).unwrap();
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn snf_identity_and_chain(m in matrix(6)) {
        let sd = snf(&m);
        prop_assert_eq!(sd.u.mul(&m).unwrap().mul(&sd.v).unwrap(), sd.s.clone());
        prop_assert!(det(&sd.u).unwrap().abs().is_one());
        prop_assert!(det(&sd.v).unwrap().abs().is_one());
        let diag = sd.diagonal();
        for (i, d) in diag.iter().enumerate() {
            prop_assert!(!d.is_negative());
            if let Some(next) = diag.get(i + 1) {
                if d.is_zero() {
                    prop_assert!(next.is_zero());
                } else {
                    prop_assert!((next % d).is_zero());
                }
            }
        }
        for i in 0..sd.s.rows() {
            for j in 0..sd.s.cols() {
                if i != j {
                    prop_assert!(sd.s[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn det_is_product_of_invariant_factors(m in square(6)) {
        let d: BigInt = snf(&m).diagonal().iter().product();
        prop_assert_eq!(det(&m).unwrap().abs(), d);
    }

    #[test]
    fn hnf_is_idempotent(m in matrix(6)) {
        let h = hnf(&m);
        prop_assert_eq!(hnf(&h), h);
    }

    #[test]
    fn hnf_is_invariant_under_unimodular_row_change((m, t) in matrix(5).prop_flat_map(|m| {
        let r = m.rows();
        (Just(m), unimodular(r))
    })) {
        prop_assert_eq!(hnf(&t.mul(&m).unwrap()), hnf(&m));
    }

    #[test]
    fn kernel_rows_annihilate_and_are_saturated(m in matrix(6)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.cols(), m.rows());
        if k.rows() > 0 {
            prop_assert!(k.mul(&m).unwrap().is_zero());
            prop_assert!(snf(&k).elementary_divisors().iter().all(One::is_one));
        }
    }

    #[test]
    fn signature_invariant_under_congruence((g, t) in symmetric(6).prop_flat_map(|g| {
        let n = g.rows();
        (Just(g), unimodular(n))
    })) {
        let conj = t.transpose().mul(&g).unwrap().mul(&t).unwrap();
        let a = signature_of_symmetric(&g).unwrap();
        let b = signature_of_symmetric(&conj).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!(a.rank(), g.rows());
    }
}
