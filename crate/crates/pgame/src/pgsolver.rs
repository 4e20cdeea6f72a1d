//! PGSolver text format.
//!
//! ```text
//! parity <max-id>;
//! <id> <priority> <owner> <succ>(,<succ>)* ["<name>"];
//! ```
//!
//! Owner `0` is Even and `1` is Odd; the highest priority seen infinitely
//! often decides a play and even priorities are good for Even. The header is
//! optional on input and always written on output. On input it only bounds
//! the ids: files in the wild often put the vertex count there instead of
//! the largest id, so `parity 1; 0 0 0 0;` is a one-vertex game. Records
//! end at `;` and may share or span lines. A `start <id>;` directive is
//! accepted and ignored. Every id from 0 up to the largest declared one must
//! appear exactly once.

use std::fmt::Write as _;

use pgame_core::{GameError, ParityGame, Player, Priority, VertexRecord};
use thiserror::Error;

/// What went wrong on a particular line.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseReason {
    #[error("owner must be 0 or 1, found `{0}`")]
    BadOwner(String),
    #[error("successor {successor} of vertex {vertex} is not declared")]
    DanglingSuccessor { vertex: usize, successor: usize },
    #[error("vertex {0} is declared twice")]
    DuplicateVertex(usize),
    #[error("vertex {0} is never declared")]
    MissingVertex(usize),
    #[error("vertex {id} exceeds the header's maximum id {max}")]
    IdAboveHeader { id: usize, max: usize },
    #[error("expected {expected}, found `{found}`")]
    Syntax { expected: &'static str, found: String },
    #[error("unterminated record (missing `;`)")]
    Unterminated,
    #[error("no vertices")]
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: ParseReason },
    #[error("vertex {vertex} has no successors")]
    Totality { vertex: usize },
    #[error("cannot write a game without vertices")]
    EmptyGame,
}

impl FormatError {
    fn parse(line: usize, reason: ParseReason) -> Self {
        FormatError::Parse { line, reason }
    }
}

/// One `;`-terminated statement and the line its first token sits on.
struct Statement<'a> {
    line: usize,
    text: &'a str,
}

fn statements(text: &str) -> Result<Vec<Statement<'_>>, FormatError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut start: Option<(usize, usize)> = None;
    let mut in_name = false;
    for (i, c) in text.char_indices() {
        match c {
            '"' => in_name = !in_name,
            ';' if !in_name => {
                let (at, first_line) = start.take().unwrap_or((i, line));
                out.push(Statement {
                    line: first_line,
                    text: text[at..i].trim(),
                });
                continue;
            }
            _ => {}
        }
        if start.is_none() && !c.is_whitespace() {
            start = Some((i, line));
        }
        if c == '\n' {
            line += 1;
        }
    }
    if let Some((_, first_line)) = start {
        return Err(FormatError::parse(first_line, ParseReason::Unterminated));
    }
    Ok(out)
}

fn number<T: std::str::FromStr>(line: usize, token: Option<&str>, expected: &'static str) -> Result<T, FormatError> {
    let token = token.unwrap_or("");
    token.parse().map_err(|_| {
        FormatError::parse(
            line,
            ParseReason::Syntax {
                expected,
                found: token.to_string(),
            },
        )
    })
}

struct Parsed {
    priority: Priority,
    owner: Player,
    successors: Vec<(usize, usize)>,
}

fn parse_record(stmt: &Statement<'_>) -> Result<(usize, Parsed), FormatError> {
    let line = stmt.line;
    // Drop an optional trailing name.
    let body = match stmt.text.find('"') {
        Some(q) => {
            let name = &stmt.text[q..];
            if name.len() < 2 || !name.ends_with('"') || name[1..name.len() - 1].contains('"') {
                return Err(FormatError::parse(
                    line,
                    ParseReason::Syntax {
                        expected: "a quoted name at the end of the record",
                        found: name.to_string(),
                    },
                ));
            }
            &stmt.text[..q]
        }
        None => stmt.text,
    };
    let mut tokens = body.split_whitespace();
    let id: usize = number(line, tokens.next(), "a vertex id")?;
    let priority: Priority = number(line, tokens.next(), "a priority")?;
    let owner = match tokens.next() {
        Some("0") => Player::Even,
        Some("1") => Player::Odd,
        Some(other) => return Err(FormatError::parse(line, ParseReason::BadOwner(other.to_string()))),
        None => return Err(FormatError::parse(line, ParseReason::BadOwner(String::new()))),
    };
    let rest = remaining_after(body, 3);
    if rest.is_empty() {
        return Err(FormatError::Totality { vertex: id });
    }
    let mut successors = Vec::new();
    for part in rest.split(',') {
        let w: usize = number(line, Some(part.trim()), "a successor id")?;
        successors.push((w, line));
    }
    Ok((
        id,
        Parsed {
            priority,
            owner,
            successors,
        },
    ))
}

/// Text after the first `skip` whitespace-separated tokens.
fn remaining_after(body: &str, skip: usize) -> &str {
    let mut rest = body.trim_start();
    for _ in 0..skip {
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        rest = rest[end..].trim_start();
    }
    rest.trim()
}

/// Parses PGSolver text into a game.
pub fn parse_pgsolver(text: &str) -> Result<ParityGame, FormatError> {
    let stmts = statements(text)?;
    let mut header: Option<usize> = None;
    let mut records: Vec<Option<Parsed>> = Vec::new();
    let mut last_line = 1;
    for stmt in &stmts {
        last_line = stmt.line;
        if stmt.text.is_empty() {
            continue;
        }
        let keyword = stmt.text.split_whitespace().next().unwrap_or("");
        if keyword == "parity" || keyword == "start" {
            let mut tokens = stmt.text.split_whitespace().skip(1);
            let value: usize = number(stmt.line, tokens.next(), "an id after the keyword")?;
            if let Some(extra) = tokens.next() {
                return Err(FormatError::parse(
                    stmt.line,
                    ParseReason::Syntax {
                        expected: "`;`",
                        found: extra.to_string(),
                    },
                ));
            }
            if keyword == "parity" {
                if header.is_some() || !records.is_empty() {
                    return Err(FormatError::parse(
                        stmt.line,
                        ParseReason::Syntax {
                            expected: "a single header before all records",
                            found: stmt.text.to_string(),
                        },
                    ));
                }
                header = Some(value);
            }
            continue;
        }
        let (id, parsed) = parse_record(stmt)?;
        if let Some(max) = header {
            if id > max {
                return Err(FormatError::parse(stmt.line, ParseReason::IdAboveHeader { id, max }));
            }
        }
        if id >= records.len() {
            records.resize_with(id + 1, || None);
        }
        if records[id].is_some() {
            return Err(FormatError::parse(stmt.line, ParseReason::DuplicateVertex(id)));
        }
        records[id] = Some(parsed);
    }

    let n = records.len();
    if n == 0 {
        return Err(FormatError::parse(last_line, ParseReason::Empty));
    }
    let mut out = Vec::with_capacity(n);
    for (id, record) in records.into_iter().enumerate() {
        let record = record.ok_or_else(|| FormatError::parse(last_line, ParseReason::MissingVertex(id)))?;
        if let Some(&(w, line)) = record.successors.iter().find(|(w, _)| *w >= n) {
            return Err(FormatError::parse(
                line,
                ParseReason::DanglingSuccessor {
                    vertex: id,
                    successor: w,
                },
            ));
        }
        out.push(VertexRecord::new(
            record.owner,
            record.priority,
            record.successors.into_iter().map(|(w, _)| w),
        ));
    }
    ParityGame::new(out).map_err(|e| match e {
        GameError::EmptySuccessors(v) => FormatError::Totality { vertex: v.index() },
        // Ids were range-checked above; anything else means no vertices.
        _ => FormatError::parse(last_line, ParseReason::Empty),
    })
}

/// Writes the canonical text of a game: header, ascending ids and successors,
/// no names.
pub fn write_pgsolver(game: &ParityGame) -> Result<String, FormatError> {
    let n = game.vertex_count();
    if n == 0 {
        return Err(FormatError::EmptyGame);
    }
    let mut out = String::with_capacity(16 * (n + game.edge_count()));
    let _ = writeln!(out, "parity {};", n - 1);
    for v in game.vertices() {
        let owner = match game.owner(v) {
            Player::Even => 0,
            Player::Odd => 1,
        };
        let _ = write!(out, "{} {} {} ", v.index(), game.priority(v), owner);
        for (i, w) in game.successors(v).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", w.index());
        }
        out.push_str(";\n");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pgame_core::families::{gen_solitaire, gen_weak};

    #[test]
    fn single_self_loop() {
        let g = parse_pgsolver("parity 1; 0 0 0 0;").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(matches!(
            parse_pgsolver("0 0 0 2;\n2 0 0 0;"),
            Err(FormatError::Parse { reason: ParseReason::MissingVertex(1), .. })
        ));
        let g = parse_pgsolver("parity 0; 0 0 0 0;").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.owner(pgame_core::VertexId::new(0)), Player::Even);
        let g = parse_pgsolver("0 0 0 0;").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn solitaire_one_round_trips() {
        let text = "parity 2;\n0 2 0 0;\n1 3 0 0;\n2 1 0 1,2;\n";
        let g = parse_pgsolver(text).unwrap();
        assert_eq!(g, gen_solitaire(1, false));
        assert_eq!(write_pgsolver(&g).unwrap(), text);
    }

    #[test]
    fn weak_round_trip() {
        let g = gen_weak(4);
        assert_eq!(parse_pgsolver(&write_pgsolver(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn bad_owner() {
        let e = parse_pgsolver("parity 0;\n0 0 2 0;").unwrap_err();
        assert_eq!(
            e,
            FormatError::Parse {
                line: 2,
                reason: ParseReason::BadOwner("2".into())
            }
        );
    }

    #[test]
    fn dangling_successor() {
        let e = parse_pgsolver("0 1 0 1;\n1 1 1 0,5;").unwrap_err();
        assert_eq!(
            e,
            FormatError::Parse {
                line: 2,
                reason: ParseReason::DanglingSuccessor { vertex: 1, successor: 5 }
            }
        );
    }

    #[test]
    fn empty_successors() {
        assert_eq!(parse_pgsolver("0 1 0;").unwrap_err(), FormatError::Totality { vertex: 0 });
        assert_eq!(parse_pgsolver("0 1 0 \"lonely\";").unwrap_err(), FormatError::Totality { vertex: 0 });
    }

    #[test]
    fn names_and_layout_are_tolerated() {
        let g = parse_pgsolver("parity 1;\n1 0 1 0 \"b;c\";\n0 3 0\n  1 , 0 \"a\";\nstart 0;").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(write_pgsolver(&g).unwrap(), "parity 1;\n0 3 0 0,1;\n1 0 1 0;\n");
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            parse_pgsolver("0 0 0 0;\n0 1 1 0;"),
            Err(FormatError::Parse { line: 2, reason: ParseReason::DuplicateVertex(0) })
        ));
        assert!(matches!(
            parse_pgsolver("0 0 0 0"),
            Err(FormatError::Parse { reason: ParseReason::Unterminated, .. })
        ));
        assert!(matches!(
            parse_pgsolver("parity 0;\n1 0 0 0;"),
            Err(FormatError::Parse { reason: ParseReason::IdAboveHeader { id: 1, max: 0 }, .. })
        ));
        assert!(matches!(
            parse_pgsolver("   "),
            Err(FormatError::Parse { reason: ParseReason::Empty, .. })
        ));
        assert!(matches!(
            parse_pgsolver("0 x 0 0;"),
            Err(FormatError::Parse { reason: ParseReason::Syntax { .. }, .. })
        ));
    }

    #[test]
    fn empty_game_is_not_written() {
        let g = ParityGame::new(Vec::new()).unwrap();
        assert_eq!(write_pgsolver(&g), Err(FormatError::EmptyGame));
    }
}
