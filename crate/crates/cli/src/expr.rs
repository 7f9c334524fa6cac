//! Graph expressions such as `conormal(path:3,complement(kpartite:2,2))`.
//!
//! ```text
//! expr   := op '(' expr (',' expr)* ')' | family ':' int (',' int)* | 'file:' path
//! op     := conormal | lex | strong | join | complement
//! family := path | cycle | complete | null | star | kpartite | rigid | rigidtree
//! ```
//!
//! Whitespace between tokens is ignored. Only `kpartite` takes more than one
//! integer; a comma after one of its integers continues the list when the
//! next token is a number.

use std::fmt;
use std::path::Path;

use conormal_core::families::{complete, complete_multipartite, cycle, null, path, star};
use conormal_core::products::Products;
use conormal_core::symmetry::{first_rigid_graph, first_rigid_tree};
use conormal_core::{Graph, Limits};

use crate::edgelist;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Null,
    Star,
    Kpartite,
    Rigid,
    RigidTree,
}

impl Family {
    const ALL: [Family; 8] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Null,
        Family::Star,
        Family::Kpartite,
        Family::Rigid,
        Family::RigidTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Null => "null",
            Family::Star => "star",
            Family::Kpartite => "kpartite",
            Family::Rigid => "rigid",
            Family::RigidTree => "rigidtree",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Conormal,
    Lex,
    Strong,
    Join,
    Complement,
}

impl Op {
    const ALL: [Op; 5] = [Op::Conormal, Op::Lex, Op::Strong, Op::Join, Op::Complement];

    pub fn name(self) -> &'static str {
        match self {
            Op::Conormal => "conormal",
            Op::Lex => "lex",
            Op::Strong => "strong",
            Op::Join => "join",
            Op::Complement => "complement",
        }
    }

    fn arity_ok(self, n: usize) -> bool {
        match self {
            Op::Conormal => n >= 2,
            Op::Complement => n == 1,
            _ => n == 2,
        }
    }

    fn arity_text(self) -> &'static str {
        match self {
            Op::Conormal => "at least 2 arguments",
            Op::Complement => "exactly 1 argument",
            _ => "exactly 2 arguments",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom { family: Family, params: Vec<usize> },
    File(String),
    Apply { op: Op, args: Vec<Expr> },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Graph(#[from] conormal_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    EdgeList { path: String, source: edgelist::EdgeListError },
    #[error("{0}")]
    NotFound(String),
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().map_or(0, char::len_utf8);
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn ident(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(self.rest().len());
        if len == 0 {
            return self.err("expected a name");
        }
        let id = &self.rest()[..len];
        self.pos += len;
        Ok(id)
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return self.err("expected a non-negative integer");
        }
        let digits = &self.rest()[..len];
        match digits.parse() {
            Ok(v) => {
                self.pos += len;
                Ok(v)
            }
            Err(_) => self.err(format!("integer {digits} is too large")),
        }
    }

    fn next_is_number(&mut self) -> bool {
        let save = self.pos;
        let ok = self.eat(',') && self.peek().is_some_and(|c| c.is_ascii_digit());
        self.pos = save;
        ok
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        if name == "file" {
            self.expect(':')?;
            self.skip_ws();
            let len = self.rest().find([',', ')']).unwrap_or(self.rest().len());
            let path = self.rest()[..len].trim_end();
            if path.is_empty() {
                return self.err("expected a file path");
            }
            self.pos += len;
            return Ok(Expr::File(path.to_string()));
        }
        if let Some(op) = Op::ALL.into_iter().find(|o| o.name() == name) {
            self.expect('(')?;
            let mut args = vec![self.expr()?];
            while self.eat(',') {
                args.push(self.expr()?);
            }
            self.expect(')')?;
            if !op.arity_ok(args.len()) {
                return Err(ParseError {
                    position: start,
                    message: format!("{name} takes {}, got {}", op.arity_text(), args.len()),
                });
            }
            return Ok(Expr::Apply { op, args });
        }
        let Some(family) = Family::ALL.into_iter().find(|f| f.name() == name) else {
            return Err(ParseError { position: start, message: format!("unknown family or operation {name:?}") });
        };
        self.expect(':')?;
        let mut params = vec![self.number()?];
        if family == Family::Kpartite {
            while self.next_is_number() {
                self.expect(',')?;
                params.push(self.number()?);
            }
        }
        Ok(Expr::Atom { family, params })
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

impl std::str::FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom { family, params } => {
                let ps: Vec<String> = params.iter().map(usize::to_string).collect();
                write!(f, "{}:{}", family.name(), ps.join(","))
            }
            Expr::File(p) => write!(f, "file:{p}"),
            Expr::Apply { op, args } => {
                write!(f, "{}(", op.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl Expr {
    /// Builds the graph. Relative file paths resolve against `base`.
    pub fn eval(&self, limits: &Limits, base: &Path) -> Result<Graph, EvalError> {
        let products = Products::from(limits);
        let g = match self {
            Expr::Atom { family, params } => {
                let p = params[0];
                match family {
                    Family::Path => path(p)?,
                    Family::Cycle => cycle(p)?,
                    Family::Complete => complete(p)?,
                    Family::Null => null(p)?,
                    Family::Star => star(p)?,
                    Family::Kpartite => complete_multipartite(params)?,
                    Family::Rigid => first_rigid_graph(p, limits)?.ok_or_else(|| {
                        EvalError::NotFound(format!("no rigid graph without a dominating vertex on {p} vertices"))
                    })?,
                    Family::RigidTree => first_rigid_tree(p, limits)?
                        .ok_or_else(|| EvalError::NotFound(format!("no rigid tree on {p} vertices")))?,
                }
            }
            Expr::File(p) => {
                let full = base.join(p);
                let text = std::fs::read_to_string(&full)
                    .map_err(|source| EvalError::Io { path: full.display().to_string(), source })?;
                edgelist::parse(&text).map_err(|source| EvalError::EdgeList { path: p.clone(), source })?
            }
            Expr::Apply { op, args } => {
                let gs = args.iter().map(|a| a.eval(limits, base)).collect::<Result<Vec<_>, _>>()?;
                match op {
                    Op::Conormal if gs.len() == 2 => products.conormal(&gs[0], &gs[1])?,
                    Op::Conormal => products.conormal_k(&gs)?,
                    Op::Lex => products.lexicographic(&gs[0], &gs[1])?,
                    Op::Strong => products.strong(&gs[0], &gs[1])?,
                    Op::Join => products.join(&gs[0], &gs[1])?,
                    Op::Complement => gs[0].complement(),
                }
            }
        };
        Ok(g.with_label(self.to_string()))
    }

    /// The factor expressions when this is a co-normal product, else itself.
    pub fn conormal_factors(&self) -> Vec<Expr> {
        match self {
            Expr::Apply { op: Op::Conormal, args } => args.clone(),
            other => vec![other.clone()],
        }
    }
}
