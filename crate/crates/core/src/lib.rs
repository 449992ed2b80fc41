//! Burnside rings, powers of the augmentation ideal, and augmentation
//! quotients for the modular p-groups
//! `H(p,m) = <a, b | a^(p^m) = b^p = 1, b^-1 a b = a^(p^(m-1)+1)>`.
//!
//! Two independent routes to the same answers:
//!
//! * [`burnside`] works for any finite group exposed through
//!   [`group::FiniteGroup`]: enumerate subgroups, build the table of marks,
//!   multiply through mark vectors, and compute `Delta^n` and
//!   `Q_n = Delta^n / Delta^(n+1)` with exact lattice arithmetic from
//!   [`zlattice`].
//! * [`closed_form`] writes down the subgroups, the multiplication table,
//!   the bases of `Delta^n` and the groups `Q_n` for `H(p,m)` explicitly.
//!
//! [`verify`] compares the two and [`cli`] exposes everything on the
//! command line.

pub mod burnside;
pub mod cli;
pub mod closed_form;
pub mod group;
pub mod verify;
pub mod zlattice;

pub use burnside::{table_of_marks, BurnsideElement, IdealLatticeBasis, MarksTable};
pub use closed_form::{BasisLabel, LabelCombination};
pub use group::{CyclicGroup, Element, FiniteGroup, GroupParams, ModularGroup, Subgroup};
pub use zlattice::{AbelianInvariants, IntMatrix};
