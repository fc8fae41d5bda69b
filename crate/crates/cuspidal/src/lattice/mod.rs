//! Weighted graphs of rational curves: discriminants, definiteness,
//! contraction, twigs and their barks and inductances.

mod chain;
mod graph;
mod text;
mod twigs;

pub use chain::Chain;
pub use graph::{bareiss_determinant, DualGraph};
pub use text::{parse_graph, render_adjacency, render_compact};
pub use twigs::{
    delta_of, inductance_forest, minus_two_twigs, twig_decomposition, InductanceMode, MinusTwoTwig, Twig,
    TwigDecomposition,
};
