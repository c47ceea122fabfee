//! The LGG v1 text format.
//!
//! ```text
//! lgg 1 <n>
//! <row y = 0>
//! ...
//! <row y = n>
//! ```
//!
//! Each row has `n+1` characters, one per vertex `x = 0..=n`: `.` no edge,
//! `N` north only, `E` east only, `B` both. `N`/`B` may not appear in the top
//! row and `E`/`B` may not appear in the rightmost column. Rows are
//! newline-terminated; the parser also accepts a missing final newline.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::{GraphBuilder, LayeredGridGraph};

const MAGIC: &str = "lgg";
const VERSION: &str = "1";

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_lgg(text: &str) -> Result<LayeredGridGraph> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or("");
    let n = parse_header(header)?;

    let mut builder = GraphBuilder::new(n);
    let mut rows = 0;
    for (i, row) in lines.enumerate() {
        let line_no = i + 2;
        let y = i;
        if y > n {
            return Err(err(
                line_no,
                1,
                format!("row count mismatch: expected {} rows", n + 1),
            ));
        }
        let mut len = 0;
        for (x, c) in row.chars().enumerate() {
            let col = x + 1;
            len += 1;
            if x > n {
                return Err(err(
                    line_no,
                    col,
                    format!("row length mismatch: expected {} characters", n + 1),
                ));
            }
            let (north, east) = match c {
                '.' => (false, false),
                'N' => (true, false),
                'E' => (false, true),
                'B' => (true, true),
                other => {
                    return Err(err(line_no, col, format!("illegal character {other:?}")));
                }
            };
            if north {
                if y == n {
                    return Err(err(line_no, col, "north edge in the top row"));
                }
                builder.set_north(x, y, true)?;
            }
            if east {
                if x == n {
                    return Err(err(line_no, col, "east edge in the rightmost column"));
                }
                builder.set_east(x, y, true)?;
            }
        }
        if len != n + 1 {
            return Err(err(
                line_no,
                len + 1,
                format!(
                    "row length mismatch: expected {} characters, found {len}",
                    n + 1
                ),
            ));
        }
        rows += 1;
    }
    if rows != n + 1 {
        return Err(err(
            rows + 2,
            1,
            format!("row count mismatch: expected {} rows, found {rows}", n + 1),
        ));
    }
    Ok(builder.build())
}

fn parse_header(header: &str) -> Result<usize> {
    let mut parts = header.split(' ');
    let bad = || {
        err(
            1,
            1,
            format!("malformed header {header:?}, expected \"lgg 1 <n>\""),
        )
    };
    if parts.next() != Some(MAGIC) || parts.next() != Some(VERSION) {
        return Err(bad());
    }
    let n_text = parts.next().ok_or_else(bad)?;
    if parts.next().is_some() || n_text.is_empty() || !n_text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: usize = n_text.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(err(1, 7, "side must be at least 1"));
    }
    Ok(n)
}

/// Canonical LGG v1 text for `g`.
pub fn emit_lgg(g: &LayeredGridGraph) -> String {
    let n = g.n();
    let mut out = String::with_capacity((n + 2) * (n + 2) + 16);
    let _ = writeln!(out, "{MAGIC} {VERSION} {n}");
    for y in 0..=n {
        for x in 0..=n {
            out.push(match (g.has_north(x, y), g.has_east(x, y)) {
                (false, false) => '.',
                (true, false) => 'N',
                (false, true) => 'E',
                (true, true) => 'B',
            });
        }
        out.push('\n');
    }
    out
}
