//! The Steinmann arrows: up biderivations adjoining fresh labels, their
//! iterates, retarded and advanced elements, the matching operations on
//! cells, and the curried series they define.

mod cells;
mod derivation;
mod series;

pub use cells::{cell_arrow, iterated_cell_arrow};
pub use derivation::{
    advanced_element, arrow, iterated_arrow, iterated_arrow_in_order, retarded_element,
    up_derivation, Direction, FreshLabelPool,
};
pub use series::{curried_arrow_series, fresh_set, TruncatedSeries, MAX_SERIES_ORDER};
