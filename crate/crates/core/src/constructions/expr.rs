//! Graph family expressions, e.g. `join(T(1,1,2),Kn1,T(1,1,2))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semistar::SemistarEntries;

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `P<n>`
    Path(usize),
    /// `C<n>`
    Cycle(usize),
    /// `Kn<n>`
    Clique(usize),
    /// `E<n>`
    Empty(usize),
    /// `KM(p1,...,pt)`
    CompleteMultipartite(Vec<usize>),
    /// `T(a,b,c)`
    Tripode(usize, usize, usize),
    /// `B(b1,...,bk)`
    Balloon(Vec<usize>),
    /// `K<b0>(b1,...,bk)`
    Semistar(SemistarEntries),
    /// `join(e1,...,en)`
    Join(Vec<Family>),
    /// `replace(K<b0>(...),e0,e1,...,ek)`
    Replacement {
        template: SemistarEntries,
        components: Vec<Family>,
    },
    /// `H(s,j)`
    Corollary { s: usize, j: usize },
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lx = Lexer::new(s);
        let f = lx.family()?;
        lx.finish()?;
        Ok(f)
    }
}

fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Clique(n) => write!(f, "Kn{n}"),
            Family::Empty(n) => write!(f, "E{n}"),
            Family::CompleteMultipartite(p) => {
                write!(f, "KM(")?;
                list(f, p)?;
                write!(f, ")")
            }
            Family::Tripode(a, b, c) => write!(f, "T({a},{b},{c})"),
            Family::Balloon(b) => {
                write!(f, "B(")?;
                list(f, b)?;
                write!(f, ")")
            }
            Family::Semistar(e) => write!(f, "{e}"),
            Family::Join(parts) => {
                write!(f, "join(")?;
                list(f, parts)?;
                write!(f, ")")
            }
            Family::Replacement {
                template,
                components,
            } => {
                write!(f, "replace({template}")?;
                for c in components {
                    write!(f, ",{c}")?;
                }
                write!(f, ")")
            }
            Family::Corollary { s, j } => write!(f, "H({s},{j})"),
        }
    }
}

/// Single-line lexer shared by the family and signature syntaxes.
pub(crate) struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Lexer { text, pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(1, self.text[..self.pos].chars().count() + 1, message)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of input"))),
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[start..]
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if digits == 0 {
            return Err(self.err("expected a non-negative integer"));
        }
        let value = self.text[start..start + digits]
            .parse()
            .map_err(|_| self.err("integer too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .bytes()
            .take_while(|b| b.is_ascii_alphabetic())
            .count();
        self.pos += len;
        &self.text[start..start + len]
    }

    fn numbers(&mut self) -> Result<Vec<u32>> {
        self.expect('(')?;
        let mut out = Vec::new();
        if self.peek() == Some(')') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("expected `,` or `)`")),
            }
        }
    }

    fn sizes(&mut self) -> Result<Vec<usize>> {
        Ok(self.numbers()?.into_iter().map(|v| v as usize).collect())
    }

    /// `K<b0>(b1,...,bk)`
    pub(crate) fn semistar(&mut self) -> Result<SemistarEntries> {
        self.skip_ws();
        let at = self.pos;
        if self.ident() != "K" {
            self.pos = at;
            return Err(self.err("expected `K<b0>(...)`"));
        }
        self.semistar_tail()
    }

    fn semistar_tail(&mut self) -> Result<SemistarEntries> {
        let center = self.number()?;
        let leaves = self.numbers()?;
        Ok(SemistarEntries::new(center, leaves))
    }

    pub(crate) fn family(&mut self) -> Result<Family> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident();
        let f = match name {
            "P" => Family::Path(self.number()? as usize),
            "C" => Family::Cycle(self.number()? as usize),
            "Kn" => Family::Clique(self.number()? as usize),
            "E" => Family::Empty(self.number()? as usize),
            "K" => Family::Semistar(self.semistar_tail()?),
            "KM" => Family::CompleteMultipartite(self.sizes()?),
            "B" => Family::Balloon(self.sizes()?),
            "T" => {
                let v = self.sizes()?;
                if v.len() != 3 {
                    self.pos = at;
                    return Err(self.err("tripode takes exactly three arm lengths"));
                }
                Family::Tripode(v[0], v[1], v[2])
            }
            "H" => {
                let v = self.sizes()?;
                if v.len() != 2 {
                    self.pos = at;
                    return Err(self.err("H takes (s,j)"));
                }
                Family::Corollary { s: v[0], j: v[1] }
            }
            "join" => Family::Join(self.families()?),
            "replace" => {
                self.expect('(')?;
                let template = self.semistar()?;
                let mut components = Vec::new();
                while self.peek() == Some(',') {
                    self.pos += 1;
                    components.push(self.family()?);
                }
                self.expect(')')?;
                Family::Replacement {
                    template,
                    components,
                }
            }
            _ => {
                self.pos = at;
                return Err(self.err("unknown graph family"));
            }
        };
        Ok(f)
    }

    fn families(&mut self) -> Result<Vec<Family>> {
        self.expect('(')?;
        let mut out = vec![self.family()?];
        loop {
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    out.push(self.family()?);
                }
                Some(')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("expected `,` or `)`")),
            }
        }
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }
}
