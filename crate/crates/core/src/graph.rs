//! Finite acyclic games as explicit graphs, their truncation, and outcome
//! classes by backward induction.

use std::collections::HashMap;
use std::hash::Hash;

use thiserror::Error;

use crate::num::PartInt;
use crate::oracle::{row_lengths, OracleError, ORACLE_MAX_BOXES};
use crate::partition::Partition;
use crate::sg::{Convention, Outcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("move from position {from} to unknown position {to}")]
    UnknownPosition { from: usize, to: usize },
    #[error("start position {0} out of range")]
    BadStart(usize),
    #[error("the move graph has a cycle")]
    Cyclic,
    #[error("the start position is terminal, so the truncation has no start")]
    StartIsTerminal,
}

/// A finite acyclic impartial game: labelled positions, moves as adjacency
/// lists, and a start position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericGame<L> {
    labels: Vec<L>,
    moves: Vec<Vec<usize>>,
    start: usize,
}

impl<L: Clone + Eq + Hash> GenericGame<L> {
    pub fn new(labels: Vec<L>, moves: Vec<Vec<usize>>, start: usize) -> Result<Self, GraphError> {
        let n = labels.len();
        assert_eq!(n, moves.len(), "one adjacency list per position");
        if start >= n {
            return Err(GraphError::BadStart(start));
        }
        for (from, out) in moves.iter().enumerate() {
            if let Some(&to) = out.iter().find(|&&to| to >= n) {
                return Err(GraphError::UnknownPosition { from, to });
            }
        }
        let game = GenericGame { labels, moves, start };
        if game.topological_order().is_none() {
            return Err(GraphError::Cyclic);
        }
        Ok(game)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn label(&self, id: usize) -> &L {
        &self.labels[id]
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn moves(&self, id: usize) -> &[usize] {
        &self.moves[id]
    }

    pub fn is_terminal(&self, id: usize) -> bool {
        self.moves[id].is_empty()
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Every move as a pair of labels.
    pub fn edges(&self) -> Vec<(L, L)> {
        let mut out = Vec::new();
        for (from, tos) in self.moves.iter().enumerate() {
            for &to in tos {
                out.push((self.labels[from].clone(), self.labels[to].clone()));
            }
        }
        out
    }

    /// Positions ordered so that every move goes to a later position.
    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.labels.len();
        let mut indegree = vec![0usize; n];
        for out in &self.moves {
            for &to in out {
                indegree[to] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            order.push(v);
            for &to in &self.moves[v] {
                indegree[to] -= 1;
                if indegree[to] == 0 {
                    stack.push(to);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// The game without its terminal positions and without the moves into them.
    pub fn truncate(&self) -> Result<Self, GraphError> {
        if self.is_terminal(self.start) {
            return Err(GraphError::StartIsTerminal);
        }
        let mut remap = vec![usize::MAX; self.len()];
        let mut labels = Vec::new();
        for (id, slot) in remap.iter_mut().enumerate() {
            if !self.is_terminal(id) {
                *slot = labels.len();
                labels.push(self.labels[id].clone());
            }
        }
        let moves = (0..self.len())
            .filter(|&id| !self.is_terminal(id))
            .map(|id| {
                self.moves[id]
                    .iter()
                    .filter(|&&to| !self.is_terminal(to))
                    .map(|&to| remap[to])
                    .collect()
            })
            .collect();
        Ok(GenericGame { labels, moves, start: remap[self.start] })
    }

    /// Outcome class of every position (indexed like the positions).
    pub fn outcomes(&self, convention: Convention) -> Vec<Outcome> {
        let order = self.topological_order().expect("acyclic by construction");
        let terminal = match convention {
            Convention::Normal => Outcome::P,
            Convention::Misere => Outcome::N,
        };
        let mut out = vec![Outcome::N; self.len()];
        for &v in order.iter().rev() {
            out[v] = if self.moves[v].is_empty() {
                terminal
            } else if self.moves[v].iter().any(|&to| out[to] == Outcome::P) {
                Outcome::N
            } else {
                Outcome::P
            };
        }
        out
    }

    /// Outcome classes keyed by label.
    pub fn outcome_map(&self, convention: Convention) -> HashMap<L, Outcome> {
        self.labels.iter().cloned().zip(self.outcomes(convention)).collect()
    }
}

/// Standalone form of [`GenericGame::truncate`].
pub fn truncate<L: Clone + Eq + Hash>(game: &GenericGame<L>) -> Result<GenericGame<L>, GraphError> {
    game.truncate()
}

/// Standalone form of [`GenericGame::outcome_map`].
pub fn generic_pn<L: Clone + Eq + Hash>(game: &GenericGame<L>, convention: Convention) -> HashMap<L, Outcome> {
    game.outcome_map(convention)
}

/// Positions of an LCTR game: a box `(i, j)` naming the subposition
/// `λ[i, j]`, or the empty board.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LctrPosition {
    At(usize, usize),
    Empty,
}

/// The LCTR move graph of a partition, one position per box plus the empty board.
pub fn lctr_game<T: PartInt>(p: &Partition<T>) -> Result<GenericGame<LctrPosition>, OracleError> {
    let lens = row_lengths(p, ORACLE_MAX_BOXES)?;
    let (mut labels, ids) = box_ids(&lens);
    let empty = labels.len();
    labels.push(None);
    let mut moves = vec![Vec::new(); labels.len()];
    for (i, &len) in lens.iter().enumerate() {
        for j in 0..len {
            let here = ids[i][j];
            let down = ids.get(i + 1).and_then(|r| r.get(j)).copied().unwrap_or(empty);
            let right = ids[i].get(j + 1).copied().unwrap_or(empty);
            moves[here] = vec![down, right];
        }
    }
    let labels = labels
        .into_iter()
        .map(|l| l.map_or(LctrPosition::Empty, |(i, j)| LctrPosition::At(i, j)))
        .collect();
    let start = if lens.is_empty() { empty } else { 0 };
    Ok(GenericGame::new(labels, moves, start).expect("diagram moves are acyclic"))
}

/// The Downright move graph of a nonempty partition, one position per box.
pub fn downright_game<T: PartInt>(p: &Partition<T>) -> Result<GenericGame<(usize, usize)>, OracleError> {
    if p.is_empty() {
        return Err(OracleError::EmptyBoard);
    }
    let lens = row_lengths(p, ORACLE_MAX_BOXES)?;
    let (labels, ids) = box_ids(&lens);
    let mut moves = vec![Vec::new(); labels.len()];
    for (i, &len) in lens.iter().enumerate() {
        for j in 0..len {
            let here = ids[i][j];
            if let Some(&down) = ids.get(i + 1).and_then(|r| r.get(j)) {
                moves[here].push(down);
            }
            if let Some(&right) = ids[i].get(j + 1) {
                moves[here].push(right);
            }
        }
    }
    let labels = labels.into_iter().map(|l| l.unwrap()).collect();
    Ok(GenericGame::new(labels, moves, 0).expect("diagram moves are acyclic"))
}

type BoxIds = (Vec<Option<(usize, usize)>>, Vec<Vec<usize>>);

fn box_ids(lens: &[usize]) -> BoxIds {
    let mut labels = Vec::new();
    let mut ids = Vec::with_capacity(lens.len());
    for (i, &len) in lens.iter().enumerate() {
        let mut row = Vec::with_capacity(len);
        for j in 0..len {
            row.push(labels.len());
            labels.push(Some((i, j)));
        }
        ids.push(row);
    }
    (labels, ids)
}
