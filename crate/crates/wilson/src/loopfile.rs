//! JSON loop files.
//!
//! A loop is either a start vertex with a move string over `R U L D`:
//!
//! ```json
//! {"origin": [0, 0], "moves": "URDL"}
//! ```
//!
//! or a closed vertex list whose first and last entries coincide:
//!
//! ```json
//! {"vertices": [[0, 0], [0, 1], [1, 1], [1, 0], [0, 0]]}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use wilson_core::{Loop, LoopError, Point};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed loop JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid loop: {0}")]
    Loop(#[from] LoopError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum LoopFile {
    Moves { origin: [i64; 2], moves: String },
    Vertices { vertices: Vec<[i64; 2]> },
}

impl LoopFile {
    pub fn from_loop(l: &Loop) -> Self {
        let s = l.start().unwrap_or(Point::ORIGIN);
        LoopFile::Moves {
            origin: [s.x, s.y],
            moves: l.moves(),
        }
    }

    pub fn to_loop(&self) -> Result<Loop, LoopError> {
        match self {
            LoopFile::Moves { origin, moves } => Loop::from_moves(Point::new(origin[0], origin[1]), moves),
            LoopFile::Vertices { vertices } => {
                let pts: Vec<Point> = vertices.iter().map(|v| Point::new(v[0], v[1])).collect();
                Loop::from_vertices(&pts)
            }
        }
    }
}

pub fn parse_loop(json: &str) -> Result<Loop, FormatError> {
    let file: LoopFile = serde_json::from_str(json)?;
    Ok(file.to_loop()?)
}

pub fn read_loop(path: &Path) -> Result<Loop, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_loop(&text)
}

pub fn loop_to_json(l: &Loop) -> String {
    serde_json::to_string(&LoopFile::from_loop(l)).expect("loop file serializes")
}
