//! Solvers for LCTR and Downright, two impartial games played on Young diagrams.
//!
//! In LCTR a move deletes the top row or the left column of the diagram and
//! the player facing the empty board has no move. In Downright a rook starts
//! in the top-left box and steps one box down or right; a corner ends the
//! game. Misère LCTR has the same outcome classes as normal-play Downright
//! on every nonempty board.
//!
//! * [`fast`] evaluates Sprague-Grundy values with `O(log r)` part reads.
//! * [`oracle`] fills the full table of subposition values, one box at a time.
//! * [`graph`] builds explicit move graphs, truncates them and classifies
//!   positions by backward induction.
//! * [`analytics`] counts nodes, leaves and distinct states of game trees.
//! * [`engine`] picks optimal moves and runs play sessions.
//!
//! Partitions are generic over the unsigned integer used for parts;
//! [`Partition`] defaults to `u64` and the aliases below name the common
//! instantiations.

pub mod analytics;
pub mod engine;
pub mod fast;
pub mod graph;
pub mod num;
pub mod oracle;
pub mod partition;
pub mod sg;
pub mod view;

pub use analytics::{census, census_closed_form, state_space_bounds, AnalyticsError, TreeCensus};
pub use engine::{best_moves, choose_move, legal_moves, EngineError, GameSession, Move, MoveAdvice, SessionStore, Side};
pub use fast::{outcome, sg, sg_downright, sg_gamma, sg_lctr, sg_one_row, sg_rectangle, sg_three_row, sg_two_row, SolveError};
pub use graph::{generic_pn, truncate, GenericGame, GraphError, LctrPosition};
pub use num::PartInt;
pub use oracle::{oracle_misere_pn, oracle_sg_downright, oracle_sg_lctr, OracleError, PnGrid, SgGrid};
pub use partition::{make_family, FamilySpec, Partition, PartitionError};
pub use sg::{mex, mex2, Convention, Game, Outcome, Rules, SgValue};
pub use view::{ProbeCounter, SubpositionView};

/// Partition with 64-bit parts.
pub type Partition64 = Partition<u64>;
/// Partition with 32-bit parts, for very tall boards.
pub type Partition32 = Partition<u32>;
/// View into a [`Partition64`].
pub type View64<'a> = SubpositionView<'a, u64>;
/// View into a [`Partition32`].
pub type View32<'a> = SubpositionView<'a, u32>;
/// Oracle grid over a [`Partition64`].
pub type SgGrid64 = SgGrid<u64>;
