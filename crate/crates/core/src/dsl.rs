//! A small language for naming graphs.
//!
//! ```text
//! expr := term { "+" term }                  disjoint union
//! term := atom { "*" atom }                  cartesian product
//! atom := "K" int | "C" int | "P" int | "E" int | "KB" int int
//!       | "petersen" | "W" | "file(" path ")"
//!       | "join(" expr "," [int ","] expr ["," int] ")"
//!       | "glue(" expr "," int int "," expr "," int int ")"
//!       | "(" expr ")"
//! ```
//!
//! `join` defaults to vertex 0 on each side.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{parse_edge_list, Family, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphExpr {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Edgeless(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    W,
    File(String),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Product(Box<GraphExpr>, Box<GraphExpr>),
    Join {
        left: Box<GraphExpr>,
        left_vertex: usize,
        right: Box<GraphExpr>,
        right_vertex: usize,
    },
    Glue {
        left: Box<GraphExpr>,
        left_edge: (usize, usize),
        right: Box<GraphExpr>,
        right_edge: (usize, usize),
    },
}

/// A syntax or range error at a byte offset of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    Path(String),
    Plus,
    Star,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Path(p) => format!("path {p:?}"),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> std::result::Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'*' => out.push((start, Tok::Star)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b',' => out.push((start, Tok::Comma)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse().map_err(|_| ParseError {
                    offset: start,
                    message: "integer too large".into(),
                    expected: vec![],
                })?;
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word = &src[start..i];
                out.push((start, Tok::Ident(word.to_string())));
                // the argument of file(...) is taken verbatim
                if word == "file" {
                    let mut j = i;
                    while j < bytes.len() && bytes[j].is_ascii_whitespace() {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j] == b'(' {
                        out.push((j, Tok::LParen));
                        let close =
                            src[j + 1..]
                                .find(')')
                                .map(|k| j + 1 + k)
                                .ok_or(ParseError {
                                    offset: j,
                                    message: "unterminated file(...)".into(),
                                    expected: vec!["`)`"],
                                })?;
                        out.push((j + 1, Tok::Path(src[j + 1..close].trim().to_string())));
                        i = close;
                    }
                }
                continue;
            }
            _ => {
                return Err(ParseError {
                    offset: start,
                    message: format!("unexpected character {:?}", c as char),
                    expected: vec![],
                })
            }
        }
        i += 1;
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

const ATOM_START: &[&str] = &[
    "K", "C", "P", "E", "KB", "petersen", "W", "file(", "join(", "glue(", "(",
];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&'static str]) -> PResult<T> {
        Err(ParseError {
            offset: self.offset(),
            message: format!("unexpected {}", self.peek().describe()),
            expected: expected.to_vec(),
        })
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn int(&mut self) -> PResult<usize> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => self.fail(&["integer"]),
        }
    }

    /// An integer parameter with a lower bound.
    fn param(&mut self, min: usize, what: &str) -> PResult<usize> {
        let at = self.offset();
        let n = self.int()?;
        if n < min {
            return Err(ParseError {
                offset: at,
                message: format!("{what} needs a parameter >= {min}, got {n}"),
                expected: vec![],
            });
        }
        Ok(n)
    }

    fn expr(&mut self) -> PResult<GraphExpr> {
        let mut lhs = self.term()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let rhs = self.term()?;
            lhs = GraphExpr::Union(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> PResult<GraphExpr> {
        let mut lhs = self.atom()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.atom()?;
            lhs = GraphExpr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> PResult<GraphExpr> {
        let word = match self.peek() {
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(e);
            }
            Tok::Ident(w) => w.clone(),
            _ => return self.fail(ATOM_START),
        };
        self.bump();
        Ok(match word.as_str() {
            "K" => GraphExpr::Complete(self.param(1, "K")?),
            "C" => GraphExpr::Cycle(self.param(1, "C")?),
            "P" => GraphExpr::Path(self.param(0, "P")?),
            "E" => GraphExpr::Edgeless(self.param(0, "E")?),
            "KB" => {
                let m = self.param(1, "KB")?;
                let n = self.param(1, "KB")?;
                GraphExpr::CompleteBipartite(m, n)
            }
            "W" => GraphExpr::W,
            w if w.eq_ignore_ascii_case("petersen") => GraphExpr::Petersen,
            "file" => {
                self.expect(Tok::LParen, "`(`")?;
                let path = match self.bump() {
                    Tok::Path(p) if !p.is_empty() => p,
                    _ => {
                        self.pos -= 1;
                        return self.fail(&["path"]);
                    }
                };
                self.expect(Tok::RParen, "`)`")?;
                GraphExpr::File(path)
            }
            "join" => {
                self.expect(Tok::LParen, "`(`")?;
                let left = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let left_vertex = if matches!(self.peek(), Tok::Int(_)) {
                    let v = self.int()?;
                    self.expect(Tok::Comma, "`,`")?;
                    v
                } else {
                    0
                };
                let right = self.expr()?;
                let right_vertex = if *self.peek() == Tok::Comma {
                    self.bump();
                    self.int()?
                } else {
                    0
                };
                self.expect(Tok::RParen, "`)`")?;
                GraphExpr::Join {
                    left: Box::new(left),
                    left_vertex,
                    right: Box::new(right),
                    right_vertex,
                }
            }
            "glue" => {
                self.expect(Tok::LParen, "`(`")?;
                let left = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let left_edge = (self.int()?, self.int()?);
                self.expect(Tok::Comma, "`,`")?;
                let right = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let right_edge = (self.int()?, self.int()?);
                self.expect(Tok::RParen, "`)`")?;
                GraphExpr::Glue {
                    left: Box::new(left),
                    left_edge,
                    right: Box::new(right),
                    right_edge,
                }
            }
            _ => {
                self.pos -= 1;
                return self.fail(ATOM_START);
            }
        })
    }
}

pub fn parse_expr(src: &str) -> std::result::Result<GraphExpr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["`+`", "`*`", "end of input"]);
    }
    Ok(e)
}

impl GraphExpr {
    /// Builds the graph; `file(...)` paths are read relative to the
    /// working directory.
    pub fn build(&self) -> Result<Graph> {
        self.build_in(Path::new("."))
    }

    /// Builds the graph, resolving relative `file(...)` paths against `base`.
    pub fn build_in(&self, base: &Path) -> Result<Graph> {
        Ok(match self {
            GraphExpr::Complete(n) => Family::Complete(*n).build()?,
            GraphExpr::Cycle(n) => Family::Cycle(*n).build()?,
            GraphExpr::Path(n) => Family::Path(*n).build()?,
            GraphExpr::Edgeless(n) => Family::Edgeless(*n).build()?,
            GraphExpr::CompleteBipartite(m, n) => Family::CompleteBipartite(*m, *n).build()?,
            GraphExpr::Petersen => Family::Petersen.build()?,
            GraphExpr::W => Family::WGraph.build()?,
            GraphExpr::File(p) => {
                let path = base.join(p);
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                parse_edge_list(&text)?
            }
            GraphExpr::Union(a, b) => a.build_in(base)?.disjoint_union(&b.build_in(base)?),
            GraphExpr::Product(a, b) => a.build_in(base)?.cartesian_product(&b.build_in(base)?),
            GraphExpr::Join {
                left,
                left_vertex,
                right,
                right_vertex,
            } => left.build_in(base)?.one_point_join(
                *left_vertex,
                &right.build_in(base)?,
                *right_vertex,
            )?,
            GraphExpr::Glue {
                left,
                left_edge,
                right,
                right_edge,
            } => left
                .build_in(base)?
                .edge_glue(*left_edge, &right.build_in(base)?, *right_edge)?,
        })
    }
}

/// Canonical source text; re-parses to an equal expression.
impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Complete(n) => write!(f, "K{n}"),
            GraphExpr::Cycle(n) => write!(f, "C{n}"),
            GraphExpr::Path(n) => write!(f, "P{n}"),
            GraphExpr::Edgeless(n) => write!(f, "E{n}"),
            GraphExpr::CompleteBipartite(m, n) => write!(f, "KB {m} {n}"),
            GraphExpr::Petersen => f.write_str("petersen"),
            GraphExpr::W => f.write_str("W"),
            GraphExpr::File(p) => write!(f, "file({p})"),
            GraphExpr::Union(a, b) => match **b {
                GraphExpr::Union(..) => write!(f, "{a} + ({b})"),
                _ => write!(f, "{a} + {b}"),
            },
            GraphExpr::Product(a, b) => {
                match **a {
                    GraphExpr::Union(..) => write!(f, "({a})")?,
                    _ => write!(f, "{a}")?,
                }
                match **b {
                    GraphExpr::Union(..) | GraphExpr::Product(..) => write!(f, " * ({b})"),
                    _ => write!(f, " * {b}"),
                }
            }
            GraphExpr::Join {
                left,
                left_vertex,
                right,
                right_vertex,
            } => write!(f, "join({left}, {left_vertex}, {right}, {right_vertex})"),
            GraphExpr::Glue {
                left,
                left_edge,
                right,
                right_edge,
            } => write!(
                f,
                "glue({left}, {} {}, {right}, {} {})",
                left_edge.0, left_edge.1, right_edge.0, right_edge.1
            ),
        }
    }
}
