//! JSON HTTP API for playing against the engine and evaluating boards.
//!
//! | method | path                      | body / query               |
//! |--------|---------------------------|----------------------------|
//! | POST   | `/games`                  | `{partition, game, human_first}` |
//! | GET    | `/games/{id}`             |                            |
//! | POST   | `/games/{id}/moves`       | `{kind}`                   |
//! | POST   | `/games/{id}/engine-move` |                            |
//! | GET    | `/eval`                   | `?partition=&game=`        |
//! | GET    | `/eval/grid`              | `?partition=&game=`        |
//!
//! Errors come back as `{"error": message}` with status 400 (malformed
//! request), 404 (unknown session), 409 (wrong turn, illegal move, game over)
//! or 422 (board that cannot be parsed or played).

use std::net::SocketAddr;
use std::sync::Arc;
use std::time::Duration;

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use lctr_core::{
    best_moves, oracle_misere_pn, oracle_sg_downright, oracle_sg_lctr, outcome, sg, EngineError, Game, GameSession,
    Move, Outcome, Partition, ProbeCounter, SessionStore, Side, SolveError,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use uuid::Uuid;

/// Largest board, in boxes, for which `/eval/grid` returns the full table.
pub const GRID_MAX_BOXES: u64 = 10_000;
/// Sessions untouched for this long are dropped.
pub const SESSION_IDLE: Duration = Duration::from_secs(24 * 60 * 60);
const EVICT_EVERY: Duration = Duration::from_secs(60 * 60);

#[derive(Clone, Default)]
pub struct AppState {
    pub sessions: Arc<SessionStore>,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError { status, message: message.into() }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, message)
    }

    fn unprocessable(message: impl Into<String>) -> Self {
        Self::new(StatusCode::UNPROCESSABLE_ENTITY, message)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

impl From<EngineError> for ApiError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Solve(inner) => inner.into(),
            other => ApiError::new(StatusCode::CONFLICT, other.to_string()),
        }
    }
}

impl From<SolveError> for ApiError {
    fn from(e: SolveError) -> Self {
        ApiError::unprocessable(e.to_string())
    }
}

type ApiResult<T> = Result<T, ApiError>;

fn parse_board(text: &str) -> ApiResult<Partition> {
    text.parse().map_err(|e| ApiError::unprocessable(format!("cannot parse partition: {e}")))
}

fn parse_game(text: Option<&str>) -> ApiResult<Game> {
    text.map_or(Ok(Game::LctrNormal), |g| g.parse().map_err(ApiError::bad_request))
}

fn parse_body<T: DeserializeOwned>(body: &Bytes) -> ApiResult<T> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("malformed request body: {e}")))
}

/// Everything a client needs to draw the board and offer moves.
#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SessionState {
    pub id: String,
    pub game: Game,
    /// Starting board in exponent notation.
    pub partition: String,
    /// Board left to play on, in exponent notation and as row lengths.
    pub current: String,
    pub rows: Vec<u64>,
    pub offsets: (usize, u64),
    pub legal_moves: Vec<Move>,
    pub to_move: Side,
    pub finished: bool,
    pub winner: Option<Side>,
    pub history: Vec<Move>,
}

impl From<&GameSession> for SessionState {
    fn from(s: &GameSession) -> Self {
        let current = s.current();
        SessionState {
            id: s.id.to_string(),
            game: s.game,
            partition: s.base.to_string(),
            current: current.to_string(),
            rows: current.into_parts(),
            offsets: s.offsets,
            legal_moves: s.legal_moves(),
            to_move: s.to_move,
            finished: s.finished,
            winner: s.winner,
            history: s.history.clone(),
        }
    }
}

#[derive(Deserialize)]
struct NewGame {
    partition: String,
    game: Option<String>,
    human_first: Option<bool>,
}

#[derive(Serialize, Deserialize)]
pub struct Created {
    pub id: String,
    pub state: SessionState,
}

async fn create_game(State(app): State<AppState>, body: Bytes) -> ApiResult<(StatusCode, Json<Created>)> {
    let req: NewGame = parse_body(&body)?;
    let game = parse_game(req.game.as_deref())?;
    let board = parse_board(&req.partition)?;
    let session = GameSession::new(game, board, req.human_first.unwrap_or(true))?;
    let state = SessionState::from(&session);
    app.sessions.insert(session);
    Ok((StatusCode::CREATED, Json(Created { id: state.id.clone(), state })))
}

fn lookup(app: &AppState, id: &str) -> ApiResult<Arc<std::sync::Mutex<GameSession>>> {
    Uuid::parse_str(id)
        .ok()
        .and_then(|uuid| app.sessions.get(&uuid))
        .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no game {id}")))
}

async fn get_game(State(app): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<SessionState>> {
    let handle = lookup(&app, &id)?;
    let s = handle.lock().unwrap();
    Ok(Json(SessionState::from(&*s)))
}

#[derive(Deserialize)]
struct MoveRequest {
    kind: Move,
}

async fn human_move(
    State(app): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> ApiResult<Json<SessionState>> {
    let handle = lookup(&app, &id)?;
    let req: MoveRequest = parse_body(&body)?;
    let mut s = handle.lock().unwrap();
    s.apply_move_as(Side::Human, req.kind)?;
    Ok(Json(SessionState::from(&*s)))
}

#[derive(Serialize, Deserialize)]
pub struct EngineReply {
    #[serde(rename = "move")]
    pub played: Move,
    pub state: SessionState,
}

async fn engine_move(State(app): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<EngineReply>> {
    let handle = lookup(&app, &id)?;
    let mut s = handle.lock().unwrap();
    let played = s.engine_move()?;
    Ok(Json(EngineReply { played, state: SessionState::from(&*s) }))
}

#[derive(Deserialize)]
struct EvalQuery {
    partition: Option<String>,
    game: Option<String>,
}

fn eval_inputs(query: Result<Query<EvalQuery>, axum::extract::rejection::QueryRejection>) -> ApiResult<(Partition, Game)> {
    let Query(q) = query.map_err(|e| ApiError::bad_request(e.body_text()))?;
    let text = q.partition.ok_or_else(|| ApiError::bad_request("missing query parameter `partition`"))?;
    let game = parse_game(q.game.as_deref())?;
    Ok((parse_board(&text)?, game))
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Evaluation {
    pub game: Game,
    pub partition: String,
    /// Absent under misère play, which has outcome classes only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sg: Option<u8>,
    pub outcome: Outcome,
    /// Moves to `P`-positions, or every legal move when none wins; empty at
    /// terminal positions.
    pub best_moves: Vec<Move>,
    pub winning: bool,
    pub probes: u64,
}

async fn eval(
    query: Result<Query<EvalQuery>, axum::extract::rejection::QueryRejection>,
) -> ApiResult<Json<Evaluation>> {
    let (board, game) = eval_inputs(query)?;
    let probes = ProbeCounter::new();
    let class = outcome(game, board.view(), &probes)?;
    let value = match game {
        Game::LctrMisere => None,
        _ => Some(sg(game, board.view(), &probes)?.get()),
    };
    let (moves, winning) = match best_moves(game, board.view(), &probes) {
        Ok(advice) => (advice.moves, advice.winning),
        Err(EngineError::TerminalPosition) => (Vec::new(), false),
        Err(e) => return Err(e.into()),
    };
    Ok(Json(Evaluation {
        game,
        partition: board.to_string(),
        sg: value,
        outcome: class,
        best_moves: moves,
        winning,
        probes: probes.get(),
    }))
}

async fn eval_grid(
    query: Result<Query<EvalQuery>, axum::extract::rejection::QueryRejection>,
) -> ApiResult<Json<Value>> {
    let (board, game) = eval_inputs(query)?;
    let boxes = board.size().map_err(|e| ApiError::unprocessable(e.to_string()))?;
    if boxes > GRID_MAX_BOXES {
        return Err(ApiError::unprocessable(format!(
            "board has {boxes} boxes; grids are limited to {GRID_MAX_BOXES}"
        )));
    }
    let oracle_err = |e: lctr_core::OracleError| ApiError::unprocessable(e.to_string());
    let (values, text) = match game {
        Game::LctrNormal | Game::DownrightNormal => {
            let grid = if game == Game::LctrNormal { oracle_sg_lctr(&board) } else { oracle_sg_downright(&board) }
                .map_err(oracle_err)?;
            let values: Vec<Vec<Value>> =
                grid.rows().iter().map(|row| row.iter().map(|v| json!(v.get())).collect()).collect();
            (values, grid.to_string())
        }
        Game::LctrMisere => {
            let grid = oracle_misere_pn(&board).map_err(oracle_err)?;
            let values = grid.rows().iter().map(|row| row.iter().map(|o| json!(o.to_string())).collect()).collect();
            (values, grid.to_string())
        }
    };
    Ok(Json(json!({
        "game": game,
        "partition": board.to_string(),
        "values": values,
        "text": text,
    })))
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/games", post(create_game))
        .route("/games/{id}", get(get_game))
        .route("/games/{id}/moves", post(human_move))
        .route("/games/{id}/engine-move", post(engine_move))
        .route("/eval", get(eval))
        .route("/eval/grid", get(eval_grid))
        .with_state(state)
}

/// Serves the API on `addr` until interrupted, evicting idle sessions hourly.
pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let state = AppState::default();
    let sessions = Arc::clone(&state.sessions);
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(EVICT_EVERY);
        loop {
            tick.tick().await;
            sessions.evict_idle(SESSION_IDLE);
        }
    });
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(state))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
