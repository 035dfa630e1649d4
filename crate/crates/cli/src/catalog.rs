//! Machine-readable reference tables and their parser.
//!
//! Each table is a UTF-8 line-oriented file: a `table` header followed by
//! `chi` entry lines carrying symbolic signatures, conformal factors,
//! embedding relations and duality pairs over the formal labels `m1..m7`.
//! Expressions use only `+`, `-`, integer literals and labels (an integer
//! juxtaposed to a label is a coefficient, as in `2m3`); the `c` field
//! stores twice the conformal factor so everything stays integral.
//!
//! Tables are compiled in; the `MULTIPLEX_FIXTURE_DIR` environment variable
//! points the loader at a directory of `<name>.tbl` overrides instead.

use std::collections::BTreeMap;
use std::fmt;

use multiplex_core::Root;

use crate::CliError;

/// Linear integer expression over the formal labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    raw: String,
    /// (coefficient, label index); `None` is the constant term.
    terms: Vec<(i64, Option<usize>)>,
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr, String> {
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut i = 0;
        let mut first = true;
        while i < bytes.len() {
            let sign = match bytes[i] {
                b'+' => {
                    i += 1;
                    1
                }
                b'-' => {
                    i += 1;
                    -1
                }
                _ if first => 1,
                other => return Err(format!("unexpected '{}' in '{s}'", other as char)),
            };
            first = false;
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef: Option<i64> = if i > digits_start {
                Some(
                    s[digits_start..i]
                        .parse()
                        .map_err(|_| format!("bad integer in '{s}'"))?,
                )
            } else {
                None
            };
            let var = if i < bytes.len() && bytes[i] == b'm' {
                i += 1;
                let var_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == var_start {
                    return Err(format!("label without index in '{s}'"));
                }
                Some(
                    s[var_start..i]
                        .parse::<usize>()
                        .map_err(|_| format!("bad label index in '{s}'"))?,
                )
            } else {
                None
            };
            if coef.is_none() && var.is_none() {
                return Err(format!("empty term in '{s}'"));
            }
            terms.push((sign * coef.unwrap_or(1), var));
        }
        if terms.is_empty() {
            return Err(format!("empty expression '{s}'"));
        }
        Ok(Expr {
            raw: s.to_string(),
            terms,
        })
    }

    pub fn eval(&self, labels: &[i64]) -> Result<i64, String> {
        let mut acc = 0i64;
        for &(coef, var) in &self.terms {
            let value = match var {
                None => 1,
                Some(j) => {
                    if j == 0 || j > labels.len() {
                        return Err(format!("label m{j} out of range in '{}'", self.raw));
                    }
                    labels[j - 1]
                }
            };
            acc += coef * value;
        }
        Ok(acc)
    }

    pub fn raw(&self) -> &str {
        &self.raw
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.raw)
    }
}

/// Symbolic embedding relation `Lambda_id = Lambda_from - deg * root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedExpr {
    pub from: u32,
    pub root: Root,
    pub degree: Expr,
}

/// Transcription-defect note attached to an entry field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erratum {
    pub field: String,
    pub note: String,
}

/// One symbolic table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureEntry {
    pub id: u32,
    pub name: Option<String>,
    /// Designated zero labels for this row (falls back to the header set).
    pub zeros: Vec<usize>,
    pub sig: Vec<Expr>,
    /// Twice the conformal factor.
    pub c2: Expr,
    pub embeds: Vec<EmbedExpr>,
    pub pair: Option<u32>,
    pub errata: Vec<Erratum>,
}

/// A parsed reference table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureTable {
    pub name: String,
    pub matrix_size: usize,
    pub removed_index: usize,
    /// Containment check only: the table does not list every member.
    pub partial: bool,
    /// Each row additionally checks its generated Knapp-Stein partner
    /// (c negation and block-swapped inducing labels).
    pub dual: bool,
    pub header_zeros: Vec<usize>,
    pub entries: Vec<FixtureEntry>,
}

impl FixtureTable {
    /// Entries grouped by their effective designated-zero pattern,
    /// in first-appearance order.
    pub fn groups(&self) -> Vec<(Vec<usize>, Vec<&FixtureEntry>)> {
        let mut order: Vec<Vec<usize>> = Vec::new();
        let mut map: BTreeMap<Vec<usize>, Vec<&FixtureEntry>> = BTreeMap::new();
        for entry in &self.entries {
            let zeros = self.effective_zeros(entry);
            if !map.contains_key(&zeros) {
                order.push(zeros.clone());
            }
            map.entry(zeros).or_default().push(entry);
        }
        order
            .into_iter()
            .map(|z| {
                let entries = map[&z].clone();
                (z, entries)
            })
            .collect()
    }

    pub fn effective_zeros(&self, entry: &FixtureEntry) -> Vec<usize> {
        if entry.zeros.is_empty() {
            self.header_zeros.clone()
        } else {
            entry.zeros.clone()
        }
    }

    pub fn entry(&self, id: u32) -> Option<&FixtureEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn tokenize(line: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c == '"' {
            chars.next();
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some(ch) => s.push(ch),
                    None => return Err("unterminated quote".into()),
                }
            }
            out.push(s);
        } else {
            let mut s = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() {
                    break;
                }
                s.push(ch);
                chars.next();
            }
            out.push(s);
        }
    }
    Ok(out)
}

fn parse_csv_indices(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad index '{t}'"))
        })
        .collect()
}

/// Parses one table file.
pub fn parse_fixture(text: &str) -> Result<FixtureTable, String> {
    let mut table: Option<FixtureTable> = None;
    for (lineno, raw_line) in text.lines().enumerate() {
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens = tokenize(line).map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let mut it = tokens.into_iter().peekable();
        let head = it.next().unwrap();
        let fail = |msg: String| format!("line {}: {msg}", lineno + 1);
        match head.as_str() {
            "table" => {
                if table.is_some() {
                    return Err(fail("duplicate table header".into()));
                }
                let name = it.next().ok_or_else(|| fail("missing table name".into()))?;
                let mut t = FixtureTable {
                    name,
                    matrix_size: 0,
                    removed_index: 0,
                    partial: false,
                    dual: false,
                    header_zeros: Vec::new(),
                    entries: Vec::new(),
                };
                while let Some(tok) = it.next() {
                    match tok.as_str() {
                        "N" => {
                            t.matrix_size = it
                                .next()
                                .and_then(|v| v.parse().ok())
                                .ok_or_else(|| fail("bad N".into()))?
                        }
                        "k" => {
                            t.removed_index = it
                                .next()
                                .and_then(|v| v.parse().ok())
                                .ok_or_else(|| fail("bad k".into()))?
                        }
                        "zeros" => {
                            let csv = it.next().ok_or_else(|| fail("missing zeros".into()))?;
                            t.header_zeros = parse_csv_indices(&csv).map_err(fail)?;
                        }
                        "partial" => t.partial = true,
                        "dual" => t.dual = true,
                        other => return Err(fail(format!("unknown header field '{other}'"))),
                    }
                }
                if t.matrix_size < 2 || t.removed_index == 0 {
                    return Err(fail("header needs N and k".into()));
                }
                table = Some(t);
            }
            "chi" => {
                let t = table
                    .as_mut()
                    .ok_or_else(|| fail("entry before table header".into()))?;
                let id: u32 = it
                    .next()
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| fail("bad entry id".into()))?;
                let mut entry = FixtureEntry {
                    id,
                    name: None,
                    zeros: Vec::new(),
                    sig: Vec::new(),
                    c2: Expr::parse("0").unwrap(),
                    embeds: Vec::new(),
                    pair: None,
                    errata: Vec::new(),
                };
                let mut saw_sig = false;
                let mut saw_c = false;
                while let Some(tok) = it.next() {
                    match tok.as_str() {
                        "name" => {
                            entry.name = Some(it.next().ok_or_else(|| fail("missing name".into()))?)
                        }
                        "zeros" => {
                            let csv = it.next().ok_or_else(|| fail("missing zeros".into()))?;
                            entry.zeros = parse_csv_indices(&csv).map_err(fail)?;
                        }
                        "sig" => {
                            let csv = it.next().ok_or_else(|| fail("missing signature".into()))?;
                            entry.sig = csv
                                .split(',')
                                .map(Expr::parse)
                                .collect::<Result<_, _>>()
                                .map_err(fail)?;
                            saw_sig = true;
                        }
                        "c" => {
                            let e = it.next().ok_or_else(|| fail("missing c".into()))?;
                            entry.c2 = Expr::parse(&e).map_err(fail)?;
                            saw_c = true;
                        }
                        "embed" => {
                            let kw = it.next();
                            if kw.as_deref() != Some("from") {
                                return Err(fail("embed must read 'embed from <id> root <p>..<q> deg <expr>'".into()));
                            }
                            let from: u32 = it
                                .next()
                                .and_then(|v| v.parse().ok())
                                .ok_or_else(|| fail("bad embed source".into()))?;
                            if it.next().as_deref() != Some("root") {
                                return Err(fail("embed missing 'root'".into()));
                            }
                            let interval = it.next().ok_or_else(|| fail("missing root".into()))?;
                            let (p, q) = interval
                                .split_once("..")
                                .ok_or_else(|| fail(format!("bad root '{interval}'")))?;
                            let root = Root::new(
                                p.parse().map_err(|_| fail(format!("bad root '{interval}'")))?,
                                q.parse().map_err(|_| fail(format!("bad root '{interval}'")))?,
                            )
                            .map_err(|e| fail(e.to_string()))?;
                            if it.next().as_deref() != Some("deg") {
                                return Err(fail("embed missing 'deg'".into()));
                            }
                            let deg = it.next().ok_or_else(|| fail("missing degree".into()))?;
                            entry.embeds.push(EmbedExpr {
                                from,
                                root,
                                degree: Expr::parse(&deg).map_err(fail)?,
                            });
                        }
                        "pair" => {
                            entry.pair = Some(
                                it.next()
                                    .and_then(|v| v.parse().ok())
                                    .ok_or_else(|| fail("bad pair id".into()))?,
                            )
                        }
                        "errata" => {
                            let field = it.next().ok_or_else(|| fail("missing errata field".into()))?;
                            let note = it.next().ok_or_else(|| fail("missing errata note".into()))?;
                            entry.errata.push(Erratum { field, note });
                        }
                        other => return Err(fail(format!("unknown entry field '{other}'"))),
                    }
                }
                if !saw_sig || !saw_c {
                    return Err(fail("entry needs sig and c".into()));
                }
                if entry.sig.len() != t.matrix_size - 1 {
                    return Err(fail(format!(
                        "signature has {} components, expected {}",
                        entry.sig.len(),
                        t.matrix_size - 1
                    )));
                }
                if t.entries.iter().any(|e| e.id == id) {
                    return Err(fail(format!("duplicate entry id {id}")));
                }
                t.entries.push(entry);
            }
            other => return Err(fail(format!("unknown line head '{other}'"))),
        }
    }
    table.ok_or_else(|| "no table header found".into())
}

/// Names of the bundled tables, in catalog order.
pub const FIXTURE_NAMES: [&str; 15] = [
    "sl4-main",
    "sl4-dual",
    "sl4-reduced",
    "sl6-main",
    "sl6-dual",
    "sl6-reduced-1",
    "sl6-reduced-13",
    "sl6-reduced-14",
    "sl6-reduced-15",
    "sl6-reduced-135",
    "sl6-reduced-2",
    "sl6-reduced-24",
    "sl6-reduced-25",
    "sl6-reduced-3",
    "sl8-pairs",
];

fn builtin(name: &str) -> Option<&'static str> {
    Some(match name {
        "sl4-main" => include_str!("../fixtures/sl4-main.tbl"),
        "sl4-dual" => include_str!("../fixtures/sl4-dual.tbl"),
        "sl4-reduced" => include_str!("../fixtures/sl4-reduced.tbl"),
        "sl6-main" => include_str!("../fixtures/sl6-main.tbl"),
        "sl6-dual" => include_str!("../fixtures/sl6-dual.tbl"),
        "sl6-reduced-1" => include_str!("../fixtures/sl6-reduced-1.tbl"),
        "sl6-reduced-13" => include_str!("../fixtures/sl6-reduced-13.tbl"),
        "sl6-reduced-14" => include_str!("../fixtures/sl6-reduced-14.tbl"),
        "sl6-reduced-15" => include_str!("../fixtures/sl6-reduced-15.tbl"),
        "sl6-reduced-135" => include_str!("../fixtures/sl6-reduced-135.tbl"),
        "sl6-reduced-2" => include_str!("../fixtures/sl6-reduced-2.tbl"),
        "sl6-reduced-24" => include_str!("../fixtures/sl6-reduced-24.tbl"),
        "sl6-reduced-25" => include_str!("../fixtures/sl6-reduced-25.tbl"),
        "sl6-reduced-3" => include_str!("../fixtures/sl6-reduced-3.tbl"),
        "sl8-pairs" => include_str!("../fixtures/sl8-pairs.tbl"),
        _ => return None,
    })
}

/// Environment variable overriding the fixture directory.
pub const FIXTURE_DIR_VAR: &str = "MULTIPLEX_FIXTURE_DIR";

/// Loads a table by name, honoring the directory override.
pub fn load(name: &str) -> Result<FixtureTable, CliError> {
    let text: String = match std::env::var(FIXTURE_DIR_VAR) {
        Ok(dir) => {
            let path = std::path::Path::new(&dir).join(format!("{name}.tbl"));
            std::fs::read_to_string(&path).map_err(|e| {
                CliError::Usage(format!("unknown fixture '{name}': {} ({e})", path.display()))
            })?
        }
        Err(_) => builtin(name)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown fixture '{name}' (available: {})",
                    FIXTURE_NAMES.join(", ")
                ))
            })?
            .to_string(),
    };
    parse_fixture(&text).map_err(|e| CliError::Usage(format!("fixture '{name}': {e}")))
}

/// Concrete expectation from one table row at an integer assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteEntry {
    pub id: u32,
    pub name: Option<String>,
    pub signature: Vec<i64>,
    /// Twice the conformal factor.
    pub c2: i64,
    /// (source entry id, root, degree)
    pub embeds: Vec<(u32, Root, i64)>,
    pub pair: Option<u32>,
}

/// Evaluates the whole table at one assignment of the formal labels.
///
/// The assignment carries all `N-1` labels; designated zero positions must
/// hold zero, the rest must be strictly positive.
pub fn evaluate_fixture(
    table: &FixtureTable,
    labels: &[i64],
) -> Result<Vec<ConcreteEntry>, CliError> {
    if labels.len() != table.matrix_size - 1 {
        return Err(CliError::Domain(format!(
            "expected {} labels for {}, got {}",
            table.matrix_size - 1,
            table.name,
            labels.len()
        )));
    }
    let mut out = Vec::new();
    for entry in &table.entries {
        let zeros = table.effective_zeros(entry);
        let mut assignment = labels.to_vec();
        for &z in &zeros {
            if z == 0 || z > assignment.len() {
                return Err(CliError::Domain(format!(
                    "designated zero index {z} out of range"
                )));
            }
            assignment[z - 1] = 0;
        }
        let eval = |e: &Expr| e.eval(&assignment).map_err(CliError::Domain);
        let signature = entry.sig.iter().map(eval).collect::<Result<Vec<_>, _>>()?;
        let c2 = eval(&entry.c2)?;
        let embeds = entry
            .embeds
            .iter()
            .map(|em| Ok((em.from, em.root, eval(&em.degree)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        out.push(ConcreteEntry {
            id: entry.id,
            name: entry.name.clone(),
            signature,
            c2,
            embeds,
            pair: entry.pair,
        });
    }
    Ok(out)
}
