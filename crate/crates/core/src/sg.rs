//! Sprague-Grundy values, outcome classes and game selectors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A Sprague-Grundy value. Positions here have at most two moves, so the
/// value is always 0, 1 or 2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct SgValue(u8);

impl SgValue {
    pub const ZERO: SgValue = SgValue(0);
    pub const ONE: SgValue = SgValue(1);
    pub const TWO: SgValue = SgValue(2);

    pub fn new(value: u8) -> Option<Self> {
        (value <= 2).then_some(SgValue(value))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Normal-play outcome class of a position with this value.
    pub fn outcome(self) -> Outcome {
        if self.is_zero() {
            Outcome::P
        } else {
            Outcome::N
        }
    }

    pub fn digit(self) -> char {
        (b'0' + self.0) as char
    }
}

impl From<SgValue> for u8 {
    fn from(v: SgValue) -> u8 {
        v.0
    }
}

impl TryFrom<u8> for SgValue {
    type Error = String;

    fn try_from(v: u8) -> Result<Self, Self::Error> {
        SgValue::new(v).ok_or_else(|| format!("SG value {v} out of range"))
    }
}

impl fmt::Display for SgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Minimum excluded value of the present operands; `None` marks a missing move.
#[inline]
pub fn mex2(a: Option<SgValue>, b: Option<SgValue>) -> SgValue {
    let seen = |v: u8| a.map(|x| x.0) == Some(v) || b.map(|x| x.0) == Some(v);
    let mut m = 0;
    while seen(m) {
        m += 1;
    }
    SgValue(m)
}

/// `mex2` with both moves present.
#[inline]
pub fn mex(a: SgValue, b: SgValue) -> SgValue {
    mex2(Some(a), Some(b))
}

/// Outcome class: `P` when the previous player wins, `N` when the next player wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    P,
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

/// Move rules, independent of the play convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rules {
    /// Remove the top row or the left column; the empty board is terminal.
    Lctr,
    /// Move a rook one box down or right; corners are terminal.
    Downright,
}

impl Rules {
    pub fn name(self) -> &'static str {
        match self {
            Rules::Lctr => "lctr",
            Rules::Downright => "downright",
        }
    }
}

/// Who wins when the game ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// The player making the last move wins.
    Normal,
    /// The player making the last move loses.
    Misere,
}

/// The three supported game configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Game {
    #[serde(rename = "lctr")]
    LctrNormal,
    #[serde(rename = "downright")]
    DownrightNormal,
    #[serde(rename = "lctr-misere")]
    LctrMisere,
}

impl Game {
    pub const ALL: [Game; 3] = [Game::LctrNormal, Game::DownrightNormal, Game::LctrMisere];

    pub fn rules(self) -> Rules {
        match self {
            Game::LctrNormal | Game::LctrMisere => Rules::Lctr,
            Game::DownrightNormal => Rules::Downright,
        }
    }

    pub fn convention(self) -> Convention {
        match self {
            Game::LctrMisere => Convention::Misere,
            _ => Convention::Normal,
        }
    }

    /// Short name used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            Game::LctrNormal => "lctr",
            Game::DownrightNormal => "downright",
            Game::LctrMisere => "lctr-misere",
        }
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Game {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lctr" | "lctr-normal" => Ok(Game::LctrNormal),
            "downright" | "downright-normal" => Ok(Game::DownrightNormal),
            "lctr-misere" | "misere" => Ok(Game::LctrMisere),
            other => Err(format!("unknown game {other:?} (expected lctr, downright or lctr-misere)")),
        }
    }
}
