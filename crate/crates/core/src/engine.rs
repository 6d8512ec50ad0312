//! Move generation, optimal move selection and live game sessions.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use uuid::Uuid;

use crate::fast::{self, SolveError};
use crate::num::PartInt;
use crate::partition::Partition;
use crate::sg::{Convention, Game, Outcome, Rules};
use crate::view::{ProbeCounter, SubpositionView};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("{0:?} is not a legal move here")]
    IllegalMove(Move),
    #[error("the game is already over")]
    SessionFinished,
    #[error("it is not the {0:?} side's turn")]
    WrongTurn(Side),
    #[error("the position is terminal")]
    TerminalPosition,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Delete the top row (rook steps down) or the left column (rook steps right).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    TopRow,
    LeftColumn,
}

impl Move {
    /// Offset change `(rows, columns)` caused by the move.
    pub fn delta(self) -> (usize, u64) {
        match self {
            Move::TopRow => (1, 0),
            Move::LeftColumn => (0, 1),
        }
    }

    fn apply<'a, T: PartInt>(self, view: SubpositionView<'a, T>) -> SubpositionView<'a, T> {
        match self {
            Move::TopRow => view.subposition(1, T::zero()),
            Move::LeftColumn => view.subposition(0, T::one()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Human,
    Engine,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Human => Side::Engine,
            Side::Engine => Side::Human,
        }
    }
}

/// Legal moves in `TopRow, LeftColumn` order; empty exactly at terminal positions.
pub fn legal_moves<T: PartInt>(game: Game, view: SubpositionView<'_, T>, probes: &ProbeCounter) -> Vec<Move> {
    let first = view.part_at(0, probes);
    if first.is_zero() {
        return Vec::new();
    }
    match game.rules() {
        Rules::Lctr => vec![Move::TopRow, Move::LeftColumn],
        Rules::Downright => {
            let mut moves = Vec::with_capacity(2);
            if !view.part_at(1, probes).is_zero() {
                moves.push(Move::TopRow);
            }
            if first > T::one() {
                moves.push(Move::LeftColumn);
            }
            moves
        }
    }
}

/// Candidate moves from a nonterminal position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveAdvice {
    pub moves: Vec<Move>,
    /// `true` when `moves` lead to `P`-positions; `false` when the position
    /// is itself `P` and `moves` lists every legal (losing) move.
    pub winning: bool,
}

/// Moves to `P`-positions, or every legal move flagged as losing when there is none.
pub fn best_moves<T: PartInt>(game: Game, view: SubpositionView<'_, T>, probes: &ProbeCounter) -> Result<MoveAdvice, EngineError> {
    let legal = legal_moves(game, view, probes);
    if legal.is_empty() {
        return Err(EngineError::TerminalPosition);
    }
    let mut winning = Vec::new();
    for &m in &legal {
        if fast::outcome(game, m.apply(view), probes)? == Outcome::P {
            winning.push(m);
        }
    }
    Ok(if winning.is_empty() {
        MoveAdvice { moves: legal, winning: false }
    } else {
        MoveAdvice { moves: winning, winning: true }
    })
}

/// The engine's move: the first winning move, otherwise the losing move that
/// leaves the most rows plus columns to play.
pub fn choose_move<T: PartInt>(game: Game, view: SubpositionView<'_, T>, probes: &ProbeCounter) -> Result<Move, EngineError> {
    let advice = best_moves(game, view, probes)?;
    if advice.winning {
        return Ok(advice.moves[0]);
    }
    let extent = |m: Move| {
        let next = m.apply(view);
        let rows = next.column_length(T::zero(), probes) as u128;
        let cols = next.part_at(0, probes).to_u128().unwrap_or(u128::MAX);
        rows.saturating_add(cols)
    };
    let mut best = advice.moves[0];
    for &m in &advice.moves[1..] {
        if extent(m) > extent(best) {
            best = m;
        }
    }
    Ok(best)
}

/// A game between a human and the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameSession {
    pub id: Uuid,
    pub game: Game,
    pub base: Partition,
    pub offsets: (usize, u64),
    pub to_move: Side,
    pub history: Vec<Move>,
    pub finished: bool,
    pub winner: Option<Side>,
}

impl GameSession {
    pub fn new(game: Game, base: Partition, human_first: bool) -> Result<Self, EngineError> {
        if game.rules() == Rules::Downright && base.is_empty() {
            return Err(SolveError::EmptyBoard.into());
        }
        let mut s = GameSession {
            id: Uuid::new_v4(),
            game,
            base,
            offsets: (0, 0),
            to_move: if human_first { Side::Human } else { Side::Engine },
            history: Vec::new(),
            finished: false,
            winner: None,
        };
        s.settle();
        Ok(s)
    }

    /// Marks the game over when the side to move has no move: that side
    /// loses under normal play and wins under misère play.
    fn settle(&mut self) {
        if self.legal_moves().is_empty() {
            self.finished = true;
            self.winner = Some(match self.game.convention() {
                Convention::Normal => self.to_move.other(),
                Convention::Misere => self.to_move,
            });
        }
    }

    pub fn view(&self) -> SubpositionView<'_, u64> {
        self.base.at(self.offsets.0, self.offsets.1)
    }

    /// The board left to play on.
    pub fn current(&self) -> Partition {
        self.view().materialize()
    }

    pub fn legal_moves(&self) -> Vec<Move> {
        legal_moves(self.game, self.view(), &ProbeCounter::new())
    }

    /// Plays `m` for whichever side is to move.
    pub fn apply_move(&mut self, m: Move) -> Result<(), EngineError> {
        if self.finished {
            return Err(EngineError::SessionFinished);
        }
        if !self.legal_moves().contains(&m) {
            return Err(EngineError::IllegalMove(m));
        }
        let (di, dj) = m.delta();
        self.offsets = (self.offsets.0 + di, self.offsets.1 + dj);
        self.history.push(m);
        self.to_move = self.to_move.other();
        self.settle();
        Ok(())
    }

    /// Plays `m` on behalf of `side`, rejecting out-of-turn moves.
    pub fn apply_move_as(&mut self, side: Side, m: Move) -> Result<(), EngineError> {
        if self.finished {
            return Err(EngineError::SessionFinished);
        }
        if self.to_move != side {
            return Err(EngineError::WrongTurn(side));
        }
        self.apply_move(m)
    }

    /// Chooses and plays the engine's move.
    pub fn engine_move(&mut self) -> Result<Move, EngineError> {
        if self.finished {
            return Err(EngineError::SessionFinished);
        }
        if self.to_move != Side::Engine {
            return Err(EngineError::WrongTurn(Side::Engine));
        }
        let m = choose_move(self.game, self.view(), &ProbeCounter::new())?;
        self.apply_move(m)?;
        Ok(m)
    }

    /// Offsets obtained by replaying the history from the base board.
    pub fn replay_offsets(&self) -> (usize, u64) {
        self.history.iter().fold((0, 0), |(i, j), m| {
            let (di, dj) = m.delta();
            (i + di, j + dj)
        })
    }
}

/// In-memory sessions. Each session has its own lock, so moves on one
/// session serialize while different sessions proceed independently.
#[derive(Debug, Default)]
pub struct SessionStore {
    sessions: Mutex<HashMap<Uuid, Entry>>,
}

#[derive(Debug)]
struct Entry {
    session: Arc<Mutex<GameSession>>,
    touched: Instant,
}

impl SessionStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&self, session: GameSession) -> Arc<Mutex<GameSession>> {
        let id = session.id;
        let handle = Arc::new(Mutex::new(session));
        let entry = Entry { session: Arc::clone(&handle), touched: Instant::now() };
        self.sessions.lock().unwrap().insert(id, entry);
        handle
    }

    /// Looks a session up and marks it as used.
    pub fn get(&self, id: &Uuid) -> Option<Arc<Mutex<GameSession>>> {
        let mut map = self.sessions.lock().unwrap();
        map.get_mut(id).map(|e| {
            e.touched = Instant::now();
            Arc::clone(&e.session)
        })
    }

    pub fn len(&self) -> usize {
        self.sessions.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Drops sessions unused for longer than `max_idle`; returns how many.
    pub fn evict_idle(&self, max_idle: Duration) -> usize {
        let mut map = self.sessions.lock().unwrap();
        let before = map.len();
        map.retain(|_, e| e.touched.elapsed() <= max_idle);
        before - map.len()
    }
}
