use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{parse_dimacs_or_edgelist, parse_graph6, Format};

/// Lazily reads graphs from a source in source order.
///
/// graph6 sources yield one graph per non-empty line; DIMACS and edge-list
/// sources hold a single document and yield one graph. In lenient mode a bad
/// record yields a line-positioned error and reading continues; in strict mode
/// the stream ends after the first error.
pub struct GraphStream {
    reader: Box<dyn BufRead + Send>,
    format: Format,
    strict: bool,
    line: usize,
    consumed: usize,
    done: bool,
}

impl GraphStream {
    pub fn new(reader: impl BufRead + Send + 'static, format: Format, strict: bool) -> Self {
        GraphStream {
            reader: Box::new(reader),
            format,
            strict,
            line: 0,
            consumed: 0,
            done: false,
        }
    }

    pub fn from_path(path: impl AsRef<Path>, format: Format, strict: bool) -> Result<Self> {
        let file = File::open(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Ok(Self::new(BufReader::new(file), format, strict))
    }

    pub fn stdin(format: Format, strict: bool) -> Self {
        Self::new(BufReader::new(io::stdin()), format, strict)
    }

    pub fn from_text(text: impl Into<String>, format: Format, strict: bool) -> Self {
        Self::new(io::Cursor::new(text.into().into_bytes()), format, strict)
    }

    pub fn format(&self) -> Format {
        self.format
    }

    /// Records consumed so far, good or bad.
    pub fn position(&self) -> usize {
        self.consumed
    }

    fn next_graph6(&mut self) -> Option<Result<Graph>> {
        let mut buf = String::new();
        loop {
            buf.clear();
            match self.reader.read_line(&mut buf) {
                Ok(0) => return None,
                Ok(_) => {
                    self.line += 1;
                    let rec = buf.trim_end_matches(['\n', '\r']).trim();
                    if rec.is_empty() {
                        continue;
                    }
                    self.consumed += 1;
                    return Some(parse_graph6(rec).map_err(|e| e.at_line(self.line)));
                }
                Err(e) => return Some(Err(Error::from(e).at_line(self.line + 1))),
            }
        }
    }

    fn next_document(&mut self) -> Option<Result<Graph>> {
        let mut text = String::new();
        if let Err(e) = self.reader.read_to_string(&mut text) {
            return Some(Err(e.into()));
        }
        self.done = true;
        if text.trim().is_empty() {
            return None;
        }
        self.consumed += 1;
        Some(parse_dimacs_or_edgelist(&text, self.format))
    }
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        if self.done {
            return None;
        }
        let item = match self.format {
            Format::Graph6 => self.next_graph6(),
            Format::Dimacs | Format::EdgeList => self.next_document(),
        };
        match &item {
            None => self.done = true,
            Some(Err(_)) if self.strict => self.done = true,
            _ => {}
        }
        item
    }
}

/// Reads an entire reader into memory; handy for small inputs.
pub fn read_all(mut r: impl Read) -> Result<String> {
    let mut s = String::new();
    r.read_to_string(&mut s)?;
    Ok(s)
}
