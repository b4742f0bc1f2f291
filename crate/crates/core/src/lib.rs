//! Graph powers, girth-constrained root reconstruction, tree roots and
//! NP-hardness gadget constructions, with brute-force oracles for
//! desk-scale verification.

pub mod balls;
pub mod error;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod leafless;
pub mod recognize;
pub mod treeroot;

pub use balls::{balls, n_set, p_set, s_set, tail_neighborhoods, BallFamily, TailPartition};
pub use error::{GenError, GraphError, OracleError, TailError};
pub use graph::{Girth, Graph, Induced, VertexLabeling};
pub use leafless::{all_leafless_roots, reconstruct_from_one_edge, verify_root, RootSet};
pub use recognize::{
    core_vertices, depth_sets_closed_form, link_depth_assignment, noncore_filter, recognize,
    CoreDecomposition, Depth, RecognitionResult,
};
pub use treeroot::{
    build_restriction_gadget, restricted_tree_root, tree_root, tree_root_bruteforce,
    DepthPartition,
};
