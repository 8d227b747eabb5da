//! Primitive elements of `Σ`: trees, cells of the adjoint braid arrangement,
//! Dynkin elements, Steinmann relations and Ruelle's identity.

mod cell;
mod dynkin;
mod ruelle;
mod steinmann;
mod tree;

pub use cell::{
    enumerate_cells, enumerate_cells_with_bound, random_generic_point, Cell, DEFAULT_CELL_BOUND,
    GENERIC_RETRIES, MAX_CELL_GROUND,
};
pub use dynkin::{
    dynkin_element, dynkin_rank, rank_of, stick_q, stirling2, total_advanced, total_retarded,
    zie_dimension, ZieElement,
};
pub use ruelle::{cell_completion, extends, ruelle_holds, verify_ruelle, Completion, COMPLETION_RETRIES};
pub use steinmann::{overlapping, relation_rank, steinmann_quadruples, Quadruple};
pub use tree::Tree;
