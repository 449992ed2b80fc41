use burnside_aug::zlattice::{self, det, express_in_basis, hnf, is_hnf, snf, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-12i64..=12, rows * cols).prop_map(move |xs| {
        let rows_v = xs
            .chunks(cols)
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        IntMatrix::from_rows(rows_v, cols)
    })
}

fn any_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..6).prop_flat_map(|n| matrix(n, n))
}

/// Elementary operation: 0 swap, 1 add k times, 2 negate.
type Op = (u8, usize, usize, i64);

fn ops() -> impl Strategy<Value = Vec<Op>> {
    prop::collection::vec((0u8..3, 0usize..8, 0usize..8, -3i64..=3), 0..24)
}

/// Applies row operations to the identity of size n.
fn unimodular(n: usize, ops: &[Op]) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for &(op, i, j, k) in ops {
        let (i, j) = (i % n, j % n);
        match op {
            0 => {
                for c in 0..n {
                    let t = u[(i, c)].clone();
                    u[(i, c)] = u[(j, c)].clone();
                    u[(j, c)] = t;
                }
            }
            1 if i != j => {
                for c in 0..n {
                    let t = &u[(j, c)] * BigInt::from(k);
                    u[(i, c)] += t;
                }
            }
            _ => {
                for c in 0..n {
                    u[(i, c)] = -u[(i, c)].clone();
                }
            }
        }
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hnf_postconditions(m in any_matrix()) {
        let (h, u) = hnf(&m);
        prop_assert!(is_hnf(&h));
        prop_assert_eq!(u.mul(&m), h.clone());
        prop_assert_eq!(det(&u).abs(), BigInt::one());
        prop_assert_eq!(zlattice::hnf_only(&h), h);
    }

    #[test]
    fn hnf_is_canonical_under_row_operations(m in any_matrix(), ops in ops()) {
        let v = unimodular(m.rows(), &ops);
        prop_assert_eq!(det(&v).abs(), BigInt::one());
        prop_assert_eq!(zlattice::hnf_only(&v.mul(&m)), zlattice::hnf_only(&m));
    }

    #[test]
    fn snf_postconditions(m in any_matrix()) {
        let (d, inv) = snf(&m);
        prop_assert!(d.is_diagonal());
        let n = m.rows().min(m.cols());
        let diag: Vec<BigInt> = (0..n).map(|i| d[(i, i)].clone()).collect();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        for pair in inv.divisors().windows(2) {
            prop_assert!(pair[1].is_multiple_of(&pair[0]));
        }
        prop_assert!(inv.divisors().iter().all(|x| *x > BigInt::one()));
        let rank = diag.iter().filter(|x| !x.is_zero()).count();
        prop_assert_eq!(inv.free_rank(), m.cols() - rank);
    }

    #[test]
    fn snf_product_is_determinant(m in square_matrix()) {
        let d = det(&m);
        let (_, inv) = snf(&m);
        if !d.is_zero() {
            prop_assert_eq!(inv.torsion_order(), d.abs());
            prop_assert_eq!(inv.free_rank(), 0);
        } else {
            prop_assert!(inv.free_rank() > 0);
        }
    }

    #[test]
    fn snf_invariant_under_unimodular(m in any_matrix(), left in ops(), right in ops()) {
        let p = unimodular(m.rows(), &left);
        let q = unimodular(m.cols(), &right);
        let moved = p.mul(&m).mul(&q);
        prop_assert_eq!(snf(&moved), snf(&m));
    }

    #[test]
    fn express_round_trip(m in square_matrix(), coeffs in prop::collection::vec(-9i64..=9, 5)) {
        let b = zlattice::lattice_basis(&m);
        let c: Vec<BigInt> = coeffs.iter().take(b.rows()).map(|&x| BigInt::from(x)).collect();
        let mut v = vec![BigInt::zero(); b.cols()];
        for (ci, i) in c.iter().zip(0..b.rows()) {
            for (vj, bj) in v.iter_mut().zip(b.row(i)) {
                *vj += ci * bj;
            }
        }
        let got = express_in_basis(&b, &v).unwrap();
        prop_assert_eq!(&got[..c.len()], &c[..]);
    }

    #[test]
    fn quotient_order_is_index(m in square_matrix(), ops in ops()) {
        // ambient is Z^n written in a scrambled basis
        let n = m.rows();
        prop_assume!(!det(&m).is_zero());
        let ambient = unimodular(n, &ops);
        let q = zlattice::quotient_invariants(&ambient, &m).unwrap();
        prop_assert_eq!(q.torsion_order(), det(&m).abs());
        prop_assert!(q.is_finite());
    }
}
