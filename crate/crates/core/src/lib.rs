//! Left Engel elements, Fitting subgroups and Engel graphs of finite
//! permutation groups.
//!
//! Groups are built by closure from permutation generators ([`group`]),
//! Engel sequences are decided exactly ([`engel`]), and the Engel graph on
//! `G \ L(G)` is analysed with exact graph algorithms ([`graph`]). The
//! [`survey`] module replays these over a catalog of small groups.

pub mod engel;
pub mod graph;
pub mod group;
pub mod io;
pub mod perm;
pub mod survey;

pub use group::{Elem, ElementSet, Group, GroupError};
pub use perm::Permutation;
