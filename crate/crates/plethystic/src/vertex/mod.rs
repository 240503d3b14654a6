//! Plethystic vertex operators.
//!
//! `V_π(z) = M(z) L^⊥(z̄) ∏_{k>0} L^⊥_{π/(k)}(z^k)` and
//! `V*_π(z) = L(z) M^⊥(z̄) ∏ M^⊥_{π/(1^{2k+1})}(z^{2k+1}) ∏_{k>0} L^⊥_{π/(1^{2k})}(z^{2k})`
//! are represented as [`FactorChain`]s and evaluated exactly inside
//! coefficient windows.

mod chain;
mod eval;
mod modes;
mod normal_order;
mod state;
mod zero_mode;

pub use chain::{build_dual_vertex, build_dual_vertex_in, build_vertex, build_vertex_in, Action, Factor, FactorChain};
pub use eval::{apply_chain, apply_operators, EvalConfig, LaurentMap, Window};
pub use modes::{
    anticommutator, anticommutator_with, mode, mode_exponent, mode_with, vertex_string, vertex_string_with, Kind, ModeConvention,
    DEFAULT_STRING_LENGTH,
};
pub use normal_order::{
    diagonal_chain, diagonal_skews, hook_collapsed_chain, hook_pairs, normal_order_product, reordering_lhs,
    reordering_rhs, NormalOrdered, ReorderCase,
};
pub use state::ChargedState;
pub use zero_mode::{act_directly, zero_mode_normal_form, NormalForm, ZeroMode};
