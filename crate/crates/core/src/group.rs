//! Finite groups: the modular p-group `H(p,m)` given by
//! `<a, b | a^(p^m) = b^p = 1, b^-1 a b = a^(p^(m-1)+1)>`, a cyclic test
//! fixture, and generic subgroup enumeration and conjugacy classification.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("p must be an odd prime (got {0})")]
    NotOddPrime(u64),
    #[error("m must be at least 2 (got {0})")]
    ExponentTooSmall(u32),
    #[error("group order {p}^{exp} does not fit in 64 bits")]
    TooLarge { p: u64, exp: u32 },
    #[error("cyclic group order must be positive")]
    EmptyCyclic,
}

/// A finite group with totally ordered, hashable elements.
///
/// `elements` must return every element exactly once, sorted ascending.
pub trait FiniteGroup: Sync {
    type Elem: Copy + Ord + Hash + fmt::Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn inv(&self, x: Self::Elem) -> Self::Elem;
    fn elements(&self) -> Vec<Self::Elem>;
    fn generators(&self) -> Vec<Self::Elem>;
    fn order(&self) -> u64;

    /// `g^-1 x g`
    fn conjugate(&self, x: Self::Elem, g: Self::Elem) -> Self::Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Validated parameters of `H(p,m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    p: u64,
    m: u32,
    a_order: u64,
}

impl GroupParams {
    pub fn new(p: u64, m: u32) -> Result<Self, GroupError> {
        if p < 3 || !is_prime(p) {
            return Err(GroupError::NotOddPrime(p));
        }
        if m < 2 {
            return Err(GroupError::ExponentTooSmall(m));
        }
        // the full group order p^(m+1) must fit, which also bounds p^m
        p.checked_pow(m + 1)
            .ok_or(GroupError::TooLarge { p, exp: m + 1 })?;
        Ok(Self {
            p,
            m,
            a_order: p.pow(m),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `p^m`, the order of `a`.
    pub fn a_order(&self) -> u64 {
        self.a_order
    }

    /// `p^(m+1)`
    pub fn group_order(&self) -> u64 {
        self.a_order * self.p
    }

    /// The twisting exponent `p^(m-1) + 1`.
    pub fn twist(&self) -> u64 {
        self.a_order / self.p + 1
    }

    /// The element `b^u a^v`, with both exponents reduced.
    pub fn element(&self, u: u64, v: u64) -> Element {
        Element {
            u: u % self.p,
            v: v % self.a_order,
        }
    }

    /// `b^u a^v` for possibly negative `v`.
    pub fn element_signed(&self, u: u64, v: i128) -> Element {
        let n = self.a_order as i128;
        Element {
            u: u % self.p,
            v: v.rem_euclid(n) as u64,
        }
    }

    pub fn a(&self) -> Element {
        self.element(0, 1)
    }

    pub fn b(&self) -> Element {
        self.element(1, 0)
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(p={}, m={})", self.p, self.m)
    }
}

/// An element `b^u a^v` of `H(p,m)` with `0 <= u < p`, `0 <= v < p^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    u: u64,
    v: u64,
}

impl Element {
    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn is_identity(&self) -> bool {
        self.u == 0 && self.v == 0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b^{} a^{}", self.u, self.v)
    }
}

fn mul_mod(x: u64, y: u64, n: u64) -> u64 {
    ((x as u128 * y as u128) % n as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Product in normal form: `b^u1 a^v1 b^u2 a^v2 = b^(u1+u2) a^(v1 r^u2 + v2)`
/// with `r = p^(m-1) + 1`, since `a b = b a^r`.
pub fn mul(params: &GroupParams, x: Element, y: Element) -> Element {
    let n = params.a_order;
    let twisted = mul_mod(x.v, pow_mod(params.twist(), y.u, n), n);
    Element {
        u: (x.u + y.u) % params.p,
        v: ((twisted as u128 + y.v as u128) % n as u128) as u64,
    }
}

pub fn inv(params: &GroupParams, x: Element) -> Element {
    let n = params.a_order;
    let u = (params.p - x.u) % params.p;
    let v = mul_mod(x.v, pow_mod(params.twist(), u, n), n);
    Element { u, v: (n - v) % n }
}

/// `x^j`. Elements of the form `b a^w` use the closed form
/// `(b a^w)^j = b^j a^(w (j(j-1)/2 p^(m-1) + j))`.
pub fn pow(params: &GroupParams, x: Element, j: u64) -> Element {
    let n = params.a_order as u128;
    match x.u {
        0 => Element {
            u: 0,
            v: ((x.v as u128 * (j as u128 % n)) % n) as u64,
        },
        1 => {
            let j128 = j as u128;
            // j(j-1) fits in u128 for any u64 j
            let tri = if j128 == 0 {
                0
            } else {
                (j128 * (j128 - 1) / 2) % n
            };
            let q = (params.a_order / params.p) as u128;
            let e = ((tri * q) % n + j128 % n) % n;
            Element {
                u: j % params.p,
                v: ((x.v as u128 * e) % n) as u64,
            }
        }
        _ => pow_generic(params, x, j),
    }
}

/// Square-and-multiply, valid for every element.
pub fn pow_generic(params: &GroupParams, x: Element, mut j: u64) -> Element {
    let mut acc = params.element(0, 0);
    let mut base = x;
    while j > 0 {
        if j & 1 == 1 {
            acc = mul(params, acc, base);
        }
        base = mul(params, base, base);
        j >>= 1;
    }
    acc
}

/// The group `H(p,m)` itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularGroup {
    params: GroupParams,
}

impl ModularGroup {
    pub fn new(params: GroupParams) -> Self {
        Self { params }
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }
}

impl FiniteGroup for ModularGroup {
    type Elem = Element;

    fn identity(&self) -> Element {
        self.params.element(0, 0)
    }

    fn mul(&self, x: Element, y: Element) -> Element {
        mul(&self.params, x, y)
    }

    fn inv(&self, x: Element) -> Element {
        inv(&self.params, x)
    }

    fn elements(&self) -> Vec<Element> {
        let mut out = Vec::with_capacity(self.params.group_order() as usize);
        for u in 0..self.params.p {
            for v in 0..self.params.a_order {
                out.push(Element { u, v });
            }
        }
        out
    }

    fn generators(&self) -> Vec<Element> {
        vec![self.params.a(), self.params.b()]
    }

    fn order(&self) -> u64 {
        self.params.group_order()
    }
}

/// The cyclic group `Z/n`, written additively. Used as a smoke-test fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicGroup {
    n: u64,
}

impl CyclicGroup {
    pub fn new(n: u64) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyCyclic);
        }
        Ok(Self { n })
    }
}

impl FiniteGroup for CyclicGroup {
    type Elem = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn mul(&self, x: u64, y: u64) -> u64 {
        ((x as u128 + y as u128) % self.n as u128) as u64
    }

    fn inv(&self, x: u64) -> u64 {
        (self.n - x) % self.n
    }

    fn elements(&self) -> Vec<u64> {
        (0..self.n).collect()
    }

    fn generators(&self) -> Vec<u64> {
        vec![1 % self.n]
    }

    fn order(&self) -> u64 {
        self.n
    }
}

/// A subgroup stored as its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup<E> {
    elements: Vec<E>,
}

impl<E: Copy + Ord> Subgroup<E> {
    /// Builds a subgroup from an arbitrary element collection; duplicates are
    /// dropped. Closure is not checked here, see [`Subgroup::is_closed`].
    pub fn from_elements(elements: impl IntoIterator<Item = E>) -> Self {
        let set: BTreeSet<E> = elements.into_iter().collect();
        Self {
            elements: set.into_iter().collect(),
        }
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, x: &E) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.elements.len() <= other.elements.len()
            && self.elements.iter().all(|x| other.contains(x))
    }

    /// Identity, closure under products and inverses.
    pub fn is_closed<G: FiniteGroup<Elem = E>>(&self, group: &G) -> bool {
        self.contains(&group.identity())
            && self.elements.iter().all(|&x| self.contains(&group.inv(x)))
            && self.elements.iter().all(|&x| {
                self.elements
                    .iter()
                    .all(|&y| self.contains(&group.mul(x, y)))
            })
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators<G: FiniteGroup<Elem = E>>(&self, group: &G) -> Vec<E> {
        let mut gens = Vec::new();
        let mut span = Subgroup::from_elements([group.identity()]);
        for &x in &self.elements {
            if !span.contains(&x) {
                gens.push(x);
                span = generate(group, &gens);
            }
            if span.order() == self.order() {
                break;
            }
        }
        gens
    }

    /// `g^-1 K g`
    pub fn conjugate_by<G: FiniteGroup<Elem = E>>(&self, group: &G, g: E) -> Self {
        Self::from_elements(self.elements.iter().map(|&x| group.conjugate(x, g)))
    }
}

/// The subgroup generated by `gens`.
pub fn generate<G: FiniteGroup>(group: &G, gens: &[G::Elem]) -> Subgroup<G::Elem> {
    let id = group.identity();
    let mut seen: HashSet<G::Elem> = HashSet::from([id]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = group.mul(x, g);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    Subgroup::from_elements(seen)
}

/// Every subgroup exactly once, sorted by `(order, element list)`.
///
/// Starts from all cyclic subgroups and closes the family under pairwise
/// joins until nothing new appears.
pub fn enumerate_subgroups<G: FiniteGroup>(group: &G) -> Vec<Subgroup<G::Elem>> {
    let mut known: HashMap<Vec<G::Elem>, Vec<G::Elem>> = HashMap::new();
    for x in group.elements() {
        let cyc = generate(group, &[x]);
        known.entry(cyc.elements).or_insert_with(|| vec![x]);
    }

    let mut family: Vec<_> = known
        .iter()
        .map(|(els, gens)| {
            (
                Subgroup {
                    elements: els.clone(),
                },
                gens.clone(),
            )
        })
        .collect();
    let mut start = 0;
    loop {
        let end = family.len();
        let mut fresh = Vec::new();
        for i in 0..end {
            for j in start.max(i + 1)..end {
                let (h, hg) = &family[i];
                let (k, kg) = &family[j];
                if h.is_subset_of(k) || k.is_subset_of(h) {
                    continue;
                }
                let gens: Vec<_> = hg.iter().chain(kg.iter()).copied().collect();
                let joined = generate(group, &gens);
                if !known.contains_key(&joined.elements) {
                    known.insert(joined.elements.clone(), gens.clone());
                    fresh.push((joined, gens));
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        start = end;
        family.extend(fresh);
    }

    let mut subs: Vec<_> = family.into_iter().map(|(s, _)| s).collect();
    subs.sort_by(canonical_cmp);
    subs
}

fn canonical_cmp<E: Ord>(x: &Subgroup<E>, y: &Subgroup<E>) -> std::cmp::Ordering {
    x.elements
        .len()
        .cmp(&y.elements.len())
        .then_with(|| x.elements.cmp(&y.elements))
}

/// `K` is normal iff it is stable under conjugation by each generator.
pub fn is_normal<G: FiniteGroup>(group: &G, k: &Subgroup<G::Elem>) -> bool {
    group.generators().into_iter().all(|g| {
        k.elements
            .iter()
            .all(|&x| k.contains(&group.conjugate(x, g)))
    })
}

/// Subgroups grouped into conjugacy classes.
///
/// Classes are ordered by `(order, representative element list)`; the
/// representative is the lexicographically least member of its class.
#[derive(Debug, Clone)]
pub struct ConjugacyClassTable<E> {
    classes: Vec<Vec<Subgroup<E>>>,
    index: HashMap<Vec<E>, usize>,
}

impl<E: Copy + Ord + Hash> ConjugacyClassTable<E> {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<Subgroup<E>>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[Subgroup<E>] {
        &self.classes[i]
    }

    pub fn representative(&self, i: usize) -> &Subgroup<E> {
        &self.classes[i][0]
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Subgroup<E>> {
        self.classes.iter().map(|c| &c[0])
    }

    /// Index of the class containing `k`, if `k` is one of the classified subgroups.
    pub fn class_of(&self, k: &Subgroup<E>) -> Option<usize> {
        self.index.get(&k.elements).copied()
    }

    /// The class of the whole group (always last).
    pub fn top(&self) -> usize {
        self.classes.len() - 1
    }
}

pub fn conjugacy_classes_of_subgroups<G: FiniteGroup>(
    group: &G,
    subs: &[Subgroup<G::Elem>],
) -> ConjugacyClassTable<G::Elem> {
    let gens = group.generators();
    let mut assigned: HashSet<Vec<G::Elem>> = HashSet::new();
    let mut classes: Vec<Vec<Subgroup<G::Elem>>> = Vec::new();

    for k in subs {
        if assigned.contains(&k.elements) {
            continue;
        }
        // orbit of k under conjugation, generated by the group generators
        let mut orbit = vec![k.clone()];
        assigned.insert(k.elements.clone());
        let mut cursor = 0;
        while cursor < orbit.len() {
            let cur = orbit[cursor].clone();
            for &g in &gens {
                let c = cur.conjugate_by(group, g);
                if assigned.insert(c.elements.clone()) {
                    orbit.push(c);
                }
            }
            cursor += 1;
        }
        orbit.sort();
        classes.push(orbit);
    }
    classes.sort_by(|x, y| canonical_cmp(&x[0], &y[0]));

    let mut index = HashMap::new();
    for (i, class) in classes.iter().enumerate() {
        for s in class {
            index.insert(s.elements.clone(), i);
        }
    }
    ConjugacyClassTable { classes, index }
}
