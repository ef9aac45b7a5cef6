//! Text and JSON forms of braid words and Morse diagrams.
//!
//! * Braid text: `B<n>: g1 g2 ...`, e.g. `B2: 1 1 1`; negative letters are inverses.
//! * Morse text: whitespace-separated `cup@p cap@p x+@p x-@p`, read top to bottom.
//!   `#` starts a comment running to the end of the line.
//! * JSON: `{"strands": 2, "word": [1, 1]}` or `{"slices": ["cup@1", "cap@1"]}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{BraidWord, DiagramError, MorseDiagram, Slice};

/// Largest strand count accepted from text.
pub const MAX_STRANDS: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseDiagramError {
    #[error("braid text must look like `B<n>: g1 g2 ...`")]
    BraidHeader,
    #[error("bad braid letter `{0}`")]
    BadLetter(String),
    #[error("bad Morse token `{0}`")]
    BadToken(String),
    #[error("strand count {0} exceeds {MAX_STRANDS}")]
    TooManyStrands(usize),
    #[error("invalid JSON diagram: {0}")]
    Json(String),
    #[error(transparent)]
    Invalid(#[from] DiagramError),
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Slice::Cup(p) => write!(f, "cup@{p}"),
            Slice::Cap(p) => write!(f, "cap@{p}"),
            Slice::Pos(p) => write!(f, "x+@{p}"),
            Slice::Neg(p) => write!(f, "x-@{p}"),
        }
    }
}

impl FromStr for Slice {
    type Err = ParseDiagramError;
    fn from_str(tok: &str) -> Result<Self, Self::Err> {
        let bad = || ParseDiagramError::BadToken(tok.to_string());
        let (kind, pos) = tok.split_once('@').ok_or_else(bad)?;
        if pos.is_empty() || !pos.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let p: usize = pos.parse().map_err(|_| bad())?;
        if p == 0 || p > 2 * MAX_STRANDS {
            return Err(bad());
        }
        match kind {
            "cup" => Ok(Slice::Cup(p)),
            "cap" => Ok(Slice::Cap(p)),
            "x+" => Ok(Slice::Pos(p)),
            "x-" => Ok(Slice::Neg(p)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Slice {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slice {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for MorseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.slices().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for MorseDiagram {
    type Err = ParseDiagramError;
    fn from_str(src: &str) -> Result<Self, Self::Err> {
        let mut slices = Vec::new();
        for line in src.lines() {
            let line = line.split('#').next().unwrap_or("");
            for tok in line.split_whitespace() {
                slices.push(tok.parse()?);
            }
        }
        Ok(MorseDiagram::new(slices)?)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands())?;
        for g in self.word() {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = ParseDiagramError;
    fn from_str(src: &str) -> Result<Self, Self::Err> {
        let src = src.trim();
        let rest = src
            .strip_prefix('B')
            .ok_or(ParseDiagramError::BraidHeader)?;
        let (n, letters) = rest.split_once(':').ok_or(ParseDiagramError::BraidHeader)?;
        if n.is_empty() || !n.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseDiagramError::BraidHeader);
        }
        let n: usize = n
            .parse()
            .map_err(|_| ParseDiagramError::TooManyStrands(usize::MAX))?;
        if n > MAX_STRANDS {
            return Err(ParseDiagramError::TooManyStrands(n));
        }
        let word = letters
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| ParseDiagramError::BadLetter(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BraidWord::new(n, word)?)
    }
}

/// JSON mirror of the two text formats.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum DiagramJson {
    Braid { strands: usize, word: Vec<i64> },
    Morse { slices: Vec<Slice> },
}

impl DiagramJson {
    pub fn into_diagram(self) -> Result<MorseDiagram, ParseDiagramError> {
        match self {
            DiagramJson::Braid { strands, word } => {
                if strands > MAX_STRANDS {
                    return Err(ParseDiagramError::TooManyStrands(strands));
                }
                Ok(BraidWord::new(strands, word)?.closure())
            }
            DiagramJson::Morse { slices } => Ok(MorseDiagram::new(slices)?),
        }
    }
}

impl From<&BraidWord> for DiagramJson {
    fn from(b: &BraidWord) -> Self {
        DiagramJson::Braid {
            strands: b.strands(),
            word: b.word().to_vec(),
        }
    }
}

impl From<&MorseDiagram> for DiagramJson {
    fn from(d: &MorseDiagram) -> Self {
        DiagramJson::Morse {
            slices: d.slices().to_vec(),
        }
    }
}

/// Parses either JSON form into a diagram (braids are closed).
pub fn parse_diagram_json(src: &str) -> Result<MorseDiagram, ParseDiagramError> {
    let j: DiagramJson =
        serde_json::from_str(src).map_err(|e| ParseDiagramError::Json(e.to_string()))?;
    j.into_diagram()
}
