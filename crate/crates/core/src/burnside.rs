//! The Burnside ring over the basis of transitive G-sets `[G/K]`, one per
//! conjugacy class of subgroups.
//!
//! Multiplication goes through the table of marks: the mark vector of a
//! product is the componentwise product of mark vectors, and the table is
//! upper triangular when classes are sorted by order, so the coordinates of
//! the product come back out by exact back-substitution.

use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::group::{
    conjugacy_classes_of_subgroups, enumerate_subgroups, ConjugacyClassTable, FiniteGroup, Subgroup,
};
use crate::zlattice::{self, AbelianInvariants, IntMatrix, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurnsideError {
    #[error("back-substitution produced a non-integer at class {class}; the table of marks is inconsistent")]
    InternalInconsistency { class: usize },
    #[error("product of augmentation-ideal elements has nonzero augmentation {0}")]
    NotInIdeal(BigInt),
    #[error("power {n} of the augmentation ideal has rank {rank}, expected {expected}")]
    RankDrop {
        n: u32,
        rank: usize,
        expected: usize,
    },
    #[error("element has {got} coordinates, table has {expected} classes")]
    LengthMismatch { expected: usize, got: usize },
    #[error("ideal powers start at n = 1")]
    ZeroPower,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// An element of the Burnside ring in the `[G/K]` basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    coeffs: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn zero(len: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); len],
        }
    }

    /// The basis element `[G/K_i]`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut e = Self::zero(len);
        e.coeffs[i] = BigInt::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }
}

impl Add for &BurnsideElement {
    type Output = BurnsideElement;

    fn add(self, rhs: &BurnsideElement) -> BurnsideElement {
        assert_eq!(self.len(), rhs.len());
        BurnsideElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &BurnsideElement {
    type Output = BurnsideElement;

    fn sub(self, rhs: &BurnsideElement) -> BurnsideElement {
        assert_eq!(self.len(), rhs.len());
        BurnsideElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;

    fn neg(self) -> BurnsideElement {
        BurnsideElement {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul<&BurnsideElement> for &BigInt {
    type Output = BurnsideElement;

    fn mul(self, rhs: &BurnsideElement) -> BurnsideElement {
        rhs.scale(self)
    }
}

/// Number of cosets `gL` fixed by every element of `K`, i.e.
/// `#{g : g^-1 K g <= L} / |L|`.
pub fn mark<G: FiniteGroup>(group: &G, k: &Subgroup<G::Elem>, l: &Subgroup<G::Elem>) -> u64 {
    if k.order() > l.order() || l.order() % k.order() != 0 {
        return 0;
    }
    let gens = k.generators(group);
    let count = group
        .elements()
        .into_iter()
        .filter(|&g| gens.iter().all(|&x| l.contains(&group.conjugate(x, g))))
        .count() as u64;
    count / l.order()
}

/// Table of marks over canonically ordered class representatives: entry
/// `(i, j)` is the mark of `K_i` on `G/K_j`.
#[derive(Debug)]
pub struct MarksTable<E> {
    classes: ConjugacyClassTable<E>,
    marks: IntMatrix,
    group_order: u64,
    products: OnceLock<Result<Vec<Vec<BurnsideElement>>, BurnsideError>>,
}

impl<E: Copy + Ord + Hash> MarksTable<E> {
    pub fn classes(&self) -> &ConjugacyClassTable<E> {
        &self.classes
    }

    pub fn marks(&self) -> &IntMatrix {
        &self.marks
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// Number of conjugacy classes, the rank of the Burnside ring.
    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// Rank of the augmentation ideal.
    pub fn delta_rank(&self) -> usize {
        self.classes.len() - 1
    }

    /// Index of `[G/G]`, the multiplicative identity.
    pub fn identity_class(&self) -> usize {
        self.classes.top()
    }

    pub fn one(&self) -> BurnsideElement {
        BurnsideElement::unit(self.rank(), self.identity_class())
    }

    pub fn unit(&self, i: usize) -> BurnsideElement {
        BurnsideElement::unit(self.rank(), i)
    }

    fn check_len(&self, x: &BurnsideElement) -> Result<(), BurnsideError> {
        if x.len() != self.rank() {
            return Err(BurnsideError::LengthMismatch {
                expected: self.rank(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// The mark vector `(mark_K(x))_K`.
    pub fn marks_of(&self, x: &BurnsideElement) -> Vec<BigInt> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| !x.coeffs[j].is_zero())
                    .map(|j| &self.marks[(i, j)] * &x.coeffs[j])
                    .sum()
            })
            .collect()
    }

    /// Inverts [`MarksTable::marks_of`] by back-substitution.
    pub fn from_marks(&self, marks: &[BigInt]) -> Result<BurnsideElement, BurnsideError> {
        let n = self.rank();
        if marks.len() != n {
            return Err(BurnsideError::LengthMismatch {
                expected: n,
                got: marks.len(),
            });
        }
        let mut z = vec![BigInt::zero(); n];
        for i in (0..n).rev() {
            let mut rest = marks[i].clone();
            for (j, zj) in z.iter().enumerate().skip(i + 1) {
                if !zj.is_zero() {
                    rest -= &self.marks[(i, j)] * zj;
                }
            }
            let (q, r) = rest.div_rem(&self.marks[(i, i)]);
            if !r.is_zero() {
                return Err(BurnsideError::InternalInconsistency { class: i });
            }
            z[i] = q;
        }
        Ok(BurnsideElement { coeffs: z })
    }

    /// Product in the Burnside ring.
    pub fn multiply(
        &self,
        x: &BurnsideElement,
        y: &BurnsideElement,
    ) -> Result<BurnsideElement, BurnsideError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mx = self.marks_of(x);
        let my = self.marks_of(y);
        let prod: Vec<BigInt> = mx.iter().zip(&my).map(|(a, b)| a * b).collect();
        self.from_marks(&prod)
    }

    /// Fixed points under the whole group: the mark of the top class.
    pub fn augmentation(&self, x: &BurnsideElement) -> BigInt {
        let top = self.identity_class();
        (0..self.rank())
            .map(|j| &self.marks[(top, j)] * &x.coeffs[j])
            .sum()
    }

    /// Unit vectors of the proper-subgroup classes, in class order.
    pub fn delta_basis(&self) -> Vec<BurnsideElement> {
        (0..self.delta_rank()).map(|i| self.unit(i)).collect()
    }

    /// All products of basis elements, `products()[i][j] = [G/K_i][G/K_j]`.
    pub fn products(&self) -> Result<&Vec<Vec<BurnsideElement>>, BurnsideError> {
        self.products
            .get_or_init(|| {
                let n = self.rank();
                let mut table: Vec<Vec<BurnsideElement>> = Vec::with_capacity(n);
                for i in 0..n {
                    let row = (0..n)
                        .map(|j| {
                            if j < i {
                                Ok(table[j][i].clone())
                            } else {
                                self.multiply(&self.unit(i), &self.unit(j))
                            }
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    table.push(row);
                }
                Ok(table)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Bases of `Delta^1, ..., Delta^max_n`, each in Hermite normal form in
    /// Delta-coordinates.
    pub fn ideal_powers(&self, max_n: u32) -> Result<Vec<IdealLatticeBasis>, BurnsideError> {
        if max_n == 0 {
            return Err(BurnsideError::ZeroPower);
        }
        let r = self.delta_rank();
        let eps = self.identity_class();
        let products = self.products()?;

        let mut out = vec![IdealLatticeBasis {
            n: 1,
            basis: IntMatrix::identity(r),
        }];
        for n in 2..=max_n {
            let prev = &out.last().expect("nonempty").basis;
            let mut gens = Vec::with_capacity(r * prev.rows());
            for prod_i in products.iter().take(r) {
                for h in 0..prev.rows() {
                    let mut v = vec![BigInt::zero(); r + 1];
                    for (j, hj) in prev.row(h).iter().enumerate() {
                        if hj.is_zero() {
                            continue;
                        }
                        for (vk, ck) in v.iter_mut().zip(prod_i[j].coeffs()) {
                            if !ck.is_zero() {
                                *vk += hj * ck;
                            }
                        }
                    }
                    if !v[eps].is_zero() {
                        return Err(BurnsideError::NotInIdeal(v[eps].clone()));
                    }
                    v.truncate(r);
                    gens.push(v);
                }
            }
            let basis = zlattice::lattice_basis(&IntMatrix::from_rows(gens, r));
            if basis.rows() != r {
                return Err(BurnsideError::RankDrop {
                    n,
                    rank: basis.rows(),
                    expected: r,
                });
            }
            out.push(IdealLatticeBasis { n, basis });
        }
        Ok(out)
    }

    /// `Delta^n`.
    pub fn ideal_power(&self, n: u32) -> Result<IdealLatticeBasis, BurnsideError> {
        Ok(self.ideal_powers(n)?.pop().expect("nonempty"))
    }

    /// `Q_n = Delta^n / Delta^(n+1)`.
    pub fn quotient_qn(&self, n: u32) -> Result<AbelianInvariants, BurnsideError> {
        let powers = self.ideal_powers(n + 1)?;
        let (a, b) = (&powers[n as usize - 1], &powers[n as usize]);
        Ok(zlattice::quotient_invariants(&a.basis, &b.basis)?)
    }

    /// `Q_1, ..., Q_max_n` from a single run of the power iteration.
    pub fn quotient_series(&self, max_n: u32) -> Result<Vec<AbelianInvariants>, BurnsideError> {
        let powers = self.ideal_powers(max_n + 1)?;
        powers
            .windows(2)
            .map(|w| Ok(zlattice::quotient_invariants(&w[0].basis, &w[1].basis)?))
            .collect()
    }

    /// Delta-coordinates of an element of the augmentation ideal.
    pub fn to_delta_coords(&self, x: &BurnsideElement) -> Result<Vec<BigInt>, BurnsideError> {
        self.check_len(x)?;
        let aug = &x.coeffs[self.identity_class()];
        if !aug.is_zero() {
            return Err(BurnsideError::NotInIdeal(aug.clone()));
        }
        Ok(x.coeffs[..self.delta_rank()].to_vec())
    }
}

/// Builds the full table of marks of `group`.
pub fn table_of_marks<G: FiniteGroup>(group: &G) -> MarksTable<G::Elem> {
    let subs = enumerate_subgroups(group);
    let classes = conjugacy_classes_of_subgroups(group, &subs);
    marks_for_classes(group, classes)
}

/// Table of marks for an already computed class table.
pub fn marks_for_classes<G: FiniteGroup>(
    group: &G,
    classes: ConjugacyClassTable<G::Elem>,
) -> MarksTable<G::Elem> {
    let n = classes.len();
    let mut marks = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            marks[(i, j)] = BigInt::from(mark(
                group,
                classes.representative(i),
                classes.representative(j),
            ));
        }
    }
    MarksTable {
        classes,
        marks,
        group_order: group.order(),
        products: OnceLock::new(),
    }
}

/// A basis of `Delta^n` in Hermite normal form; rows are vectors in the
/// coordinates of the proper-subgroup classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealLatticeBasis {
    pub n: u32,
    pub basis: IntMatrix,
}

impl IdealLatticeBasis {
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// `self` is contained in `other` as a lattice.
    pub fn is_sublattice_of(&self, other: &IdealLatticeBasis) -> bool {
        zlattice::coordinates_in(&other.basis, &self.basis).is_ok()
    }
}
