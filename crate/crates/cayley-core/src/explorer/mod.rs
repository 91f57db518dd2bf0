//! Local exploration of the Cayley graph `Cay(<x,y,z>, {x,y,z})` via BFS
//! balls, plus a generic coset-graph builder for small groups.

mod ball;
mod coset;
mod export;

pub use ball::{
    automorphism_action_sample, bfs_ball, coset_consistency_check, coset_equality,
    coset_representative, girth_report, is_right_translation, walk_is_closed_through_root,
    ActionSampleReport, CayleyBall, ConsistencyReport, GirthReport,
};
pub use coset::{build_coset_graph, CosetGraph};
pub use export::{
    ball_from_json, ball_to_dot, ball_to_json, coset_graph_to_dot, coset_graph_to_json,
    export_ball, export_coset_graph,
};
