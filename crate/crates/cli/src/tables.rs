//! Shipped data files: the two-part partition tables and the RP tripode
//! table.

use rpgraph::conditions::ArmRule;
use rpgraph::{Error, Result, SemistarEntries};

pub const PAPER_TABLES: &str = include_str!("../data/paper_tables.txt");
pub const TRIPODE_TABLE: &str = include_str!("../data/table1.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperTableRow {
    pub table_id: String,
    pub lambda: u32,
    pub part_a: SemistarEntries,
    pub part_b: SemistarEntries,
    pub parent: SemistarEntries,
    /// Part B as printed, when the printed value is a known typo.
    pub printed: Option<SemistarEntries>,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperTable {
    pub id: String,
    pub parent: SemistarEntries,
    pub rows: Vec<PaperTableRow>,
}

/// Non-comment, non-blank lines with 1-based line numbers and the
/// whitespace-separated tokens with their 1-based columns.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<(usize, &str)>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push((s + 1, &body[s..col]));
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn entries(line: usize, (col, tok): (usize, &str)) -> Result<SemistarEntries> {
    tok.parse().map_err(|e: Error| match e {
        Error::Parse {
            column, message, ..
        } => Error::Parse {
            line,
            column: col + column - 1,
            message,
        },
        other => other,
    })
}

fn number<T: std::str::FromStr>(line: usize, (col, tok): (usize, &str)) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        column: col,
        message: format!("expected an integer, found `{tok}`"),
    })
}

pub fn parse_paper_tables(text: &str) -> Result<Vec<PaperTable>> {
    let mut tables: Vec<PaperTable> = Vec::new();
    for (line, tokens) in records(text) {
        if tokens[0].1 == "table" {
            if tokens.len() != 3 {
                return Err(Error::Parse {
                    line,
                    column: 1,
                    message: "expected `table <id> <parent>`".into(),
                });
            }
            tables.push(PaperTable {
                id: tokens[1].1.to_string(),
                parent: entries(line, tokens[2])?,
                rows: Vec::new(),
            });
            continue;
        }
        let Some(table) = tables.last_mut() else {
            return Err(Error::Parse {
                line,
                column: 1,
                message: "row before any `table` header".into(),
            });
        };
        if !(3..=4).contains(&tokens.len()) {
            return Err(Error::Parse {
                line,
                column: 1,
                message: "expected `<lambda> <part A> <part B> [printed=<signature>]`".into(),
            });
        }
        let printed = match tokens.get(3) {
            None => None,
            Some(&(col, tok)) => {
                let Some(value) = tok.strip_prefix("printed=") else {
                    return Err(Error::Parse {
                        line,
                        column: col,
                        message: format!("unexpected `{tok}`"),
                    });
                };
                Some(entries(line, (col + "printed=".len(), value))?)
            }
        };
        table.rows.push(PaperTableRow {
            table_id: table.id.clone(),
            lambda: number(line, tokens[0])?,
            part_a: entries(line, tokens[1])?,
            part_b: entries(line, tokens[2])?,
            parent: table.parent.clone(),
            printed,
            line,
        });
    }
    if tables.is_empty() {
        return Err(Error::Invalid("table file contains no tables".into()));
    }
    Ok(tables)
}

/// The tripode table as read from its data file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripodeTableFile {
    pub rows: Vec<(usize, TripodeRule)>,
    pub sporadic: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TripodeRule {
    Even,
    Mod3(Vec<usize>),
    Set(Vec<usize>),
}

impl TripodeRule {
    pub fn contains(&self, c: usize) -> bool {
        match self {
            TripodeRule::Even => c.is_multiple_of(2),
            TripodeRule::Mod3(r) => r.contains(&(c % 3)),
            TripodeRule::Set(s) => s.contains(&c),
        }
    }

    pub fn matches(&self, rule: &ArmRule) -> bool {
        match (self, rule) {
            (TripodeRule::Even, ArmRule::Even) => true,
            (TripodeRule::Mod3(a), ArmRule::Mod3(b)) | (TripodeRule::Set(a), ArmRule::Set(b)) => {
                a.as_slice() == *b
            }
            _ => false,
        }
    }
}

impl TripodeTableFile {
    /// Whether `T(a,b,c)` is RP according to the file.
    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        let mut t = [a, b, c];
        t.sort_unstable();
        self.sporadic.contains(&t)
            || (t[0] == 1
                && self
                    .rows
                    .iter()
                    .any(|(row, rule)| *row == t[1] && rule.contains(t[2])))
    }
}

pub fn parse_tripode_table(text: &str) -> Result<TripodeTableFile> {
    let mut out = TripodeTableFile {
        rows: Vec::new(),
        sporadic: Vec::new(),
    };
    for (line, tokens) in records(text) {
        let numbers = |from: usize| -> Result<Vec<usize>> {
            tokens[from..].iter().map(|&t| number(line, t)).collect()
        };
        match tokens[0].1 {
            "row" if tokens.len() >= 3 => {
                let b = number(line, tokens[1])?;
                let rule = match tokens[2].1 {
                    "even" if tokens.len() == 3 => TripodeRule::Even,
                    "mod3" => TripodeRule::Mod3(numbers(3)?),
                    "set" => TripodeRule::Set(numbers(3)?),
                    _ => {
                        return Err(Error::Parse {
                            line,
                            column: tokens[2].0,
                            message: "expected `even`, `mod3 <r>...` or `set <c>...`".into(),
                        })
                    }
                };
                out.rows.push((b, rule));
            }
            "sporadic" if tokens.len() == 4 => {
                let v = numbers(1)?;
                out.sporadic.push([v[0], v[1], v[2]]);
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    column: 1,
                    message: "expected a `row` or `sporadic` record".into(),
                })
            }
        }
    }
    Ok(out)
}
