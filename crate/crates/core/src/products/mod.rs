//! Systems of T-products into a free target algebra: homomorphic extension
//! to `Σ`, reverse and R/A products, T-exponentials, perturbation by the
//! Steinmann arrows, the toy causal model, vacuum characters and vertex
//! renormalization.

mod causal;
mod exponential;
mod poly;
mod system;
mod vacuum;
mod vertex;

pub use causal::{respects, tits_kernel_elements, verify_causal_factorization};
pub use exponential::{
    bogoliubov_extract, generating_function, generating_function_product, interacting_observable,
    inverse_t_exponential, t_exponential, Perturbed, Source,
};
pub use poly::{
    Coupling, Monomial, TargetPoly, Trunc, Var, DEFAULT_ORDER_BOUND, MAX_HBAR_POWER, MAX_WORD_LEN,
};
pub use system::{
    a_product, constant_assignment, evaluate, evaluate_decorated, generalized_r, r_product,
    reverse, FreeSystem, ProductSystem, Registry, ToyModel,
};
pub use vacuum::{
    green_function, s_matrix_pair, scattering_sides, stability_holds, Character, ScalarSeries,
    ScatteringSides,
};
pub use vertex::{set_partitions, Combination, Renormalized, VertexMap, DEFAULT_VERTEX_BLOCK_BOUND};
