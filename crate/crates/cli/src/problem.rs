//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! vars: x, y, z
//! ideal:
//!   x*z - y^2
//! Q:
//!   1 1 1
//!   0 1 2
//! symmetry:
//!   (1 3)
//! ```
//!
//! Section headers start in column one; their contents are the following
//! indented lines. `vars` takes its list on the header line. `Q` rows are
//! kept as written, so a ragged matrix reaches validation intact and is
//! reported there.

use gitfan_core::exact::{parse_bigint, IntVector};
use gitfan_core::groebner::Ideal;
use gitfan_core::poly::{parse_polynomial, PolyError, Polynomial, Ring};
use gitfan_core::symmetry::Permutation;

use crate::CliError;

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
    /// Absent when the file has no `Q` section.
    pub q_rows: Option<Vec<IntVector>>,
    /// Absent when the file has no `symmetry` section.
    pub symmetry: Option<Vec<Permutation>>,
}

impl ProblemFile {
    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.generators.clone()).expect("parsed in this ring")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Ideal,
    Q,
    Symmetry,
}

fn error(line: usize, message: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("line {line}: {message}"))
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    let mut vars: Option<(Ring, usize)> = None;
    let mut ideal_lines: Option<Vec<(usize, String)>> = None;
    let mut q_lines: Option<Vec<(usize, String)>> = None;
    let mut sym_lines: Option<Vec<(usize, String)>> = None;
    let mut current: Option<Section> = None;

    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        if line.starts_with(|c: char| c.is_whitespace()) {
            let body = line.trim().to_string();
            let target = match current {
                Some(Section::Ideal) => &mut ideal_lines,
                Some(Section::Q) => &mut q_lines,
                Some(Section::Symmetry) => &mut sym_lines,
                None => return Err(error(n, "indented line outside a section")),
            };
            target.get_or_insert_with(Vec::new).push((n, body));
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| error(n, format!("expected a section header, found `{}`", line.trim())))?;
        let rest = rest.trim();
        let duplicate = |name: &str| error(n, format!("section `{name}` appears twice"));
        match key.trim() {
            "vars" => {
                if vars.is_some() {
                    return Err(duplicate("vars"));
                }
                let names: Vec<&str> = rest
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .collect();
                if names.is_empty() {
                    return Err(error(n, "at least one variable is required"));
                }
                let ring = Ring::new(names).map_err(|e| error(n, e))?;
                vars = Some((ring, n));
                current = None;
            }
            name @ ("ideal" | "Q" | "symmetry") => {
                let (section, slot) = match name {
                    "ideal" => (Section::Ideal, &mut ideal_lines),
                    "Q" => (Section::Q, &mut q_lines),
                    _ => (Section::Symmetry, &mut sym_lines),
                };
                if slot.is_some() {
                    return Err(duplicate(name));
                }
                let mut lines = Vec::new();
                if !rest.is_empty() {
                    lines.push((n, rest.to_string()));
                }
                *slot = Some(lines);
                current = Some(section);
            }
            other => return Err(error(n, format!("unknown section `{other}`"))),
        }
    }

    let (ring, _) = vars.ok_or_else(|| CliError::Parse("missing `vars:` section".into()))?;
    let mut generators = Vec::new();
    for (n, text) in ideal_lines.unwrap_or_default() {
        let p = parse_polynomial(&text, &ring).map_err(|e| match e {
            PolyError::Syntax { column, message, .. } => error(n, format!("column {column}: {message}")),
            PolyError::UnknownVariable { name, column, .. } => {
                error(n, format!("column {column}: unknown variable `{name}`"))
            }
            other => error(n, other),
        })?;
        generators.push(p);
    }
    let q_rows = q_lines
        .map(|lines| {
            lines
                .into_iter()
                .map(|(n, text)| {
                    text.split(|c: char| c.is_whitespace() || c == ',')
                        .filter(|s| !s.is_empty())
                        .map(|s| parse_bigint(s).map_err(|_| error(n, format!("`{s}` is not an integer"))))
                        .collect::<Result<IntVector, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    let symmetry = sym_lines
        .map(|lines| {
            lines
                .into_iter()
                .map(|(n, text)| Permutation::parse_cycles(&text, ring.nvars()).map_err(|e| error(n, e)))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    Ok(ProblemFile {
        ring,
        generators,
        q_rows,
        symmetry,
    })
}
