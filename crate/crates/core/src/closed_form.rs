//! Explicit formulas for `H(p,m)`: the subgroups `N_i` and `M_kl`, the
//! multiplication table of the basis `alpha_i = [H/N_i]`,
//! `beta_kl = [H/M_kl]`, `epsilon = [H/H]`, the bases of the powers of the
//! augmentation ideal, and the structure of the augmentation quotients.
//!
//! Nothing in here calls into the table of marks. The generic pipeline in
//! [`crate::burnside`] is compared against these formulas, not built on them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::burnside::BurnsideElement;
use crate::group::{self, ConjugacyClassTable, Element, GroupParams, Subgroup};
use crate::zlattice::AbelianInvariants;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("closed forms require m >= 3 (got m = {0})")]
    UnsupportedParams(u32),
    #[error("label alignment failed: {0}")]
    AlignmentFailure(String),
}

/// `N_i = <a^(p^i)>`, of order `p^(m-i)`.
pub fn subgroup_n(params: &GroupParams, i: u32) -> Result<Subgroup<Element>, ClosedFormError> {
    if i > params.m() {
        return Err(ClosedFormError::IndexOutOfRange(format!(
            "N_{i} needs 0 <= i <= {}",
            params.m()
        )));
    }
    let step = params.p().pow(i);
    let count = params.a_order() / step;
    Ok(Subgroup::from_elements(
        (0..count).map(|t| params.element(0, t * step)),
    ))
}

/// `M_kl = union over j < p of (b a^(l p^(k-1)))^j N_k`, of order `p^(m-k+1)`.
pub fn subgroup_m(
    params: &GroupParams,
    k: u32,
    l: u64,
) -> Result<Subgroup<Element>, ClosedFormError> {
    if k == 0 || k > params.m() {
        return Err(ClosedFormError::IndexOutOfRange(format!(
            "M_{k},{l} needs 1 <= k <= {}",
            params.m()
        )));
    }
    let n_k = subgroup_n(params, k)?;
    let shift = (l % params.a_order()) as u128 * params.p().pow(k - 1) as u128;
    let g = params.element(1, (shift % params.a_order() as u128) as u64);
    let mut elements = Vec::with_capacity((params.p() * n_k.order()) as usize);
    for j in 0..params.p() {
        let head = group::pow(params, g, j);
        elements.extend(n_k.elements().iter().map(|&x| group::mul(params, head, x)));
    }
    Ok(Subgroup::from_elements(elements))
}

/// The whole group as a subgroup value.
pub fn whole_group(params: &GroupParams) -> Subgroup<Element> {
    let mut els = Vec::with_capacity(params.group_order() as usize);
    for u in 0..params.p() {
        for v in 0..params.a_order() {
            els.push(params.element(u, v));
        }
    }
    Subgroup::from_elements(els)
}

/// A basis symbol of the Burnside ring of `H(p,m)`.
///
/// Ordered as `alpha_0 < ... < alpha_m < beta_1,0 < ... < beta_m,0 < epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    Alpha(u32),
    Beta(u32, u64),
    Epsilon,
}

impl BasisLabel {
    pub fn alpha(params: &GroupParams, i: u32) -> Result<Self, ClosedFormError> {
        if i > params.m() {
            return Err(ClosedFormError::IndexOutOfRange(format!("alpha_{i}")));
        }
        Ok(Self::Alpha(i))
    }

    /// `beta_kl`, with `l` reduced mod `p` and forced to 0 when `k = m`
    /// (all `M_ml` are conjugate).
    pub fn beta(params: &GroupParams, k: u32, l: u64) -> Result<Self, ClosedFormError> {
        if k == 0 || k > params.m() {
            return Err(ClosedFormError::IndexOutOfRange(format!("beta_{k},{l}")));
        }
        let l = if k == params.m() { 0 } else { l % params.p() };
        Ok(Self::Beta(k, l))
    }

    pub fn is_epsilon(&self) -> bool {
        matches!(self, Self::Epsilon)
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Alpha(i) => write!(f, "alpha_{i}"),
            Self::Beta(k, l) => write!(f, "beta_{k},{l}"),
            Self::Epsilon => write!(f, "epsilon"),
        }
    }
}

/// Every basis label in label order; `epsilon` last.
pub fn all_labels(params: &GroupParams) -> Vec<BasisLabel> {
    let m = params.m();
    let mut out: Vec<BasisLabel> = (0..=m).map(BasisLabel::Alpha).collect();
    for k in 1..m {
        out.extend((0..params.p()).map(|l| BasisLabel::Beta(k, l)));
    }
    out.push(BasisLabel::Beta(m, 0));
    out.push(BasisLabel::Epsilon);
    out
}

/// Labels of the augmentation-ideal basis (everything but `epsilon`).
pub fn delta_labels(params: &GroupParams) -> Vec<BasisLabel> {
    let mut out = all_labels(params);
    out.pop();
    out
}

/// An integer combination of basis labels, kept sorted with no zero terms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LabelCombination {
    terms: Vec<(BigInt, BasisLabel)>,
}

impl LabelCombination {
    pub fn new(terms: impl IntoIterator<Item = (BigInt, BasisLabel)>) -> Self {
        let mut acc: BTreeMap<BasisLabel, BigInt> = BTreeMap::new();
        for (c, l) in terms {
            *acc.entry(l).or_default() += c;
        }
        Self {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, c)| (c, l))
                .collect(),
        }
    }

    pub fn single(label: BasisLabel) -> Self {
        Self::term(BigInt::one(), label)
    }

    pub fn term(coeff: BigInt, label: BasisLabel) -> Self {
        Self::new([(coeff, label)])
    }

    pub fn terms(&self) -> &[(BigInt, BasisLabel)] {
        &self.terms
    }

    pub fn coefficient(&self, label: BasisLabel) -> BigInt {
        self.terms
            .iter()
            .find(|(_, l)| *l == label)
            .map(|(c, _)| c.clone())
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.terms.iter().map(|(x, l)| (x * c, *l)))
    }

    /// Coordinates over the conjugacy classes picked out by `alignment`.
    pub fn to_element(&self, alignment: &LabelAlignment) -> BurnsideElement {
        let mut coeffs = vec![BigInt::zero(); alignment.len()];
        for (c, l) in &self.terms {
            coeffs[alignment.index(*l)] += c;
        }
        BurnsideElement::from_coeffs(coeffs)
    }
}

impl fmt::Display for LabelCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, l)| {
                if c.is_one() {
                    l.to_string()
                } else {
                    format!("{c}*{l}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn p_pow(params: &GroupParams, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(params.p()), e as usize)
}

/// The multiplication table of the basis labels.
pub fn closed_mul(params: &GroupParams, x: BasisLabel, y: BasisLabel) -> LabelCombination {
    use BasisLabel::*;
    let m = params.m();
    let term = |e: u32, l: BasisLabel| LabelCombination::term(p_pow(params, e), l);
    match (x, y) {
        (Epsilon, other) | (other, Epsilon) => LabelCombination::single(other),
        (Alpha(i), Alpha(j)) => term(i.min(j) + 1, Alpha(i.max(j))),
        (Alpha(i), Beta(k, _)) | (Beta(k, _), Alpha(i)) => term(i.min(k), Alpha(i.max(k))),
        (Beta(k1, l1), Beta(k2, l2)) => {
            // orient so that k >= r
            let ((k, l), (r, s)) = if k1 >= k2 {
                ((k1, l1), (k2, l2))
            } else {
                ((k2, l2), (k1, l1))
            };
            if r == m {
                // beta_m0^2 = p^(m-1) beta_m0 + (p^(m-1) - p^(m-2)) alpha_m
                let top = p_pow(params, m - 1);
                let corr = &top - p_pow(params, m - 2);
                LabelCombination::new([(top, Beta(m, 0)), (corr, Alpha(m))])
            } else if (k > r && s == 0) || (k == r && l == s) {
                term(r, Beta(k, l))
            } else {
                term(r - 1, Alpha(k))
            }
        }
    }
}

fn require_closed_form_range(params: &GroupParams) -> Result<(), ClosedFormError> {
    if params.m() < 3 {
        return Err(ClosedFormError::UnsupportedParams(params.m()));
    }
    Ok(())
}

/// A basis of `Delta^n`: the plain labels for `n = 1`, and for `n >= 2`
/// `p^(n-1) alpha_0`, `p^(n-2) alpha_i` (i >= 1), `p^(n-1) beta_kl`.
pub fn closed_delta_power_basis(
    params: &GroupParams,
    n: u32,
) -> Result<Vec<LabelCombination>, ClosedFormError> {
    require_closed_form_range(params)?;
    if n == 0 {
        return Err(ClosedFormError::IndexOutOfRange("n must be >= 1".into()));
    }
    Ok(delta_labels(params)
        .into_iter()
        .map(|label| {
            let e = match (n, label) {
                (1, _) => 0,
                (_, BasisLabel::Alpha(i)) if i >= 1 => n - 2,
                _ => n - 1,
            };
            LabelCombination::term(p_pow(params, e), label)
        })
        .collect())
}

/// Number of cyclic factors of order `p` in `Q_n`.
pub fn closed_qn_rank(params: &GroupParams, n: u32) -> u64 {
    let (p, m) = (params.p(), params.m() as u64);
    if n == 1 {
        (m - 1) * p + 2
    } else {
        (m - 1) * p + m + 2
    }
}

/// `Q_n = (C_p)^((m-1)p+2)` for `n = 1`, `(C_p)^((m-1)p+m+2)` for `n >= 2`.
pub fn closed_qn(params: &GroupParams, n: u32) -> Result<AbelianInvariants, ClosedFormError> {
    require_closed_form_range(params)?;
    if n == 0 {
        return Err(ClosedFormError::IndexOutOfRange("n must be >= 1".into()));
    }
    Ok(AbelianInvariants::elementary(
        &BigInt::from(params.p()),
        closed_qn_rank(params, n) as usize,
    ))
}

/// Bijection between basis labels and conjugacy-class indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelAlignment {
    by_label: BTreeMap<BasisLabel, usize>,
    by_class: Vec<BasisLabel>,
}

impl LabelAlignment {
    pub fn index(&self, label: BasisLabel) -> usize {
        self.by_label[&label]
    }

    pub fn get(&self, label: BasisLabel) -> Option<usize> {
        self.by_label.get(&label).copied()
    }

    pub fn label(&self, class: usize) -> BasisLabel {
        self.by_class[class]
    }

    pub fn labels_by_class(&self) -> &[BasisLabel] {
        &self.by_class
    }

    pub fn len(&self) -> usize {
        self.by_class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_class.is_empty()
    }

    /// Reads an element back as a label combination.
    pub fn to_combination(&self, x: &BurnsideElement) -> LabelCombination {
        LabelCombination::new(
            x.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), self.by_class[i])),
        )
    }
}

/// Matches each label to the class of its subgroup. For `beta_m0` every
/// `M_ml` must land in the same class.
pub fn label_alignment(
    params: &GroupParams,
    classes: &ConjugacyClassTable<Element>,
) -> Result<LabelAlignment, ClosedFormError> {
    let find = |s: &Subgroup<Element>, label: BasisLabel| {
        classes.class_of(s).ok_or_else(|| {
            ClosedFormError::AlignmentFailure(format!("subgroup of {label} is not classified"))
        })
    };
    let mut by_label = BTreeMap::new();
    for label in all_labels(params) {
        let idx = match label {
            BasisLabel::Alpha(i) => find(&subgroup_n(params, i)?, label)?,
            BasisLabel::Beta(k, l) if k < params.m() => find(&subgroup_m(params, k, l)?, label)?,
            BasisLabel::Beta(k, _) => {
                let idx = find(&subgroup_m(params, k, 0)?, label)?;
                for l in 1..params.p() {
                    if find(&subgroup_m(params, k, l)?, label)? != idx {
                        return Err(ClosedFormError::AlignmentFailure(format!(
                            "M_{k},{l} is not conjugate to M_{k},0"
                        )));
                    }
                }
                idx
            }
            BasisLabel::Epsilon => find(&whole_group(params), label)?,
        };
        by_label.insert(label, idx);
    }

    let mut by_class: Vec<Option<BasisLabel>> = vec![None; classes.len()];
    for (&label, &idx) in &by_label {
        if let Some(prev) = by_class[idx] {
            return Err(ClosedFormError::AlignmentFailure(format!(
                "{prev} and {label} share class {idx}"
            )));
        }
        by_class[idx] = Some(label);
    }
    let by_class = by_class
        .into_iter()
        .enumerate()
        .map(|(i, l)| {
            l.ok_or_else(|| ClosedFormError::AlignmentFailure(format!("class {i} has no label")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LabelAlignment { by_label, by_class })
}
