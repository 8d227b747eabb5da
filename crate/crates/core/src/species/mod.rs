//! Linear combinations of compositions and the Hopf operations on them.

mod decorated;
mod element;
mod qbasis;

pub use decorated::{Assignment, DecoratedCoproduct, DecoratedSigElement, Symbol};
pub use element::{antipode_of, tensor, Coproduct, SigElement};
pub use qbasis::{h_to_q, q_to_h};

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::Scalar;

/// Adds `c` at `key`, dropping the entry if it cancels.
pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}
