//! Command implementations behind the `gitfan` binary.
//!
//! Each command turns its inputs into a serializable document; the binary
//! only parses flags, writes files and maps [`CliError`] to exit codes.

pub mod document;
pub mod problem;

use std::path::Path;

use thiserror::Error;

use gitfan_core::cones::{newton_polytope, normal_fan, ConeError};
use gitfan_core::gitfan::{compute_gitfan, enumerate_afaces, GitFanError, GitFanOptions, GitFanResult, GitProblem};
use gitfan_core::groebner::buchberger;
use gitfan_core::poly::{parse_polynomial, MonomialOrder, Ring};
use gitfan_core::symmetry::{PermGroup, DEFAULT_MAX_ORDER};

use document::{AFaceStats, AFacesDocument, GroebnerDocument, OrbitEntry, ResultDocument, Stats};
use problem::{parse_problem, ProblemFile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    InvalidInput(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    /// 1 for unreadable or malformed input, 2 for well-formed input that
    /// violates the mathematical preconditions, 3 for failures during the
    /// computation itself.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::InvalidInput(_) => 2,
            CliError::Compute(_) => 3,
        }
    }
}

impl From<GitFanError> for CliError {
    fn from(e: GitFanError) -> Self {
        match e {
            GitFanError::InvalidInput(m) => CliError::InvalidInput(m),
            e @ GitFanError::SupportNotCovered => CliError::InvalidInput(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<ConeError> for CliError {
    fn from(e: ConeError) -> Self {
        CliError::Compute(e.to_string())
    }
}

pub fn load_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| match e {
        CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Settings shared by the `gitfan` and `afaces` commands.
#[derive(Clone, Debug)]
pub struct RunSettings {
    /// `None` means: use the symmetry section when the file has one.
    pub symmetry: Option<bool>,
    pub threads: usize,
    pub seed: u64,
}

impl Default for RunSettings {
    fn default() -> Self {
        RunSettings {
            symmetry: None,
            threads: gitfan_core::gitfan::default_threads(),
            seed: 0,
        }
    }
}

/// Validated problem; the group is attached only when symmetry is in use.
pub fn build_problem(file: &ProblemFile, settings: &RunSettings) -> Result<GitProblem, CliError> {
    let rows = file
        .q_rows
        .clone()
        .ok_or_else(|| CliError::Parse("missing `Q:` section".into()))?;
    let use_group = settings.symmetry.unwrap_or(true);
    let group = match (&file.symmetry, use_group) {
        (Some(perms), true) => Some(
            PermGroup::generate(file.ring.nvars(), perms.clone(), DEFAULT_MAX_ORDER)
                .map_err(|e| CliError::InvalidInput(e.to_string()))?,
        ),
        _ => None,
    };
    Ok(GitProblem::from_rows(file.ideal(), rows, group)?)
}

fn orbit_entries(result: &GitFanResult) -> Option<Vec<OrbitEntry>> {
    result.orbits.as_ref().map(|orbits| {
        orbits
            .iter()
            .map(|o| OrbitEntry {
                rep: o.rep,
                members: o.members.clone(),
            })
            .collect()
    })
}

pub fn gitfan_document(file: &ProblemFile, settings: &RunSettings) -> Result<ResultDocument, CliError> {
    let problem = build_problem(file, settings)?;
    let options = GitFanOptions {
        seed: settings.seed,
        threads: settings.threads,
        ..GitFanOptions::default()
    };
    let result = compute_gitfan(&problem, &options)?;
    let mut doc = ResultDocument::from_fan(&result.fan)?;
    doc.orbits = orbit_entries(&result);
    doc.afaces = Some(result.afaces.faces.iter().map(|f| f.to_bitstring()).collect());
    doc.stats = Stats {
        aface_tests: result.stats.aface_tests,
        cones: result.stats.cones,
        orbits: result.stats.orbits,
    };
    Ok(doc)
}

pub fn afaces_document(file: &ProblemFile, settings: &RunSettings) -> Result<AFacesDocument, CliError> {
    let problem = build_problem(file, settings)?;
    let found = enumerate_afaces(
        problem.ideal(),
        problem.symmetry().map(|s| s.group()),
        settings.threads,
    );
    let afaces: Vec<String> = found.faces.iter().map(|f| f.to_bitstring()).collect();
    let position = |f: &gitfan_core::face::Face| found.faces.binary_search_by_key(&f.bits(), |g| g.bits()).expect("member");
    let orbits = found.orbits.as_ref().map(|orbits| {
        orbits
            .iter()
            .map(|o| OrbitEntry {
                rep: position(&o.rep),
                members: o.members.iter().map(position).collect(),
            })
            .collect::<Vec<_>>()
    });
    let stats = AFaceStats {
        aface_tests: found.tests,
        afaces: afaces.len(),
        orbits: orbits.as_ref().map_or(afaces.len(), Vec::len),
    };
    Ok(AFacesDocument { afaces, orbits, stats })
}

pub fn groebner_document(file: &ProblemFile, order: MonomialOrder) -> GroebnerDocument {
    let basis = buchberger(&file.ideal(), order);
    GroebnerDocument {
        order: order.name().to_string(),
        generators: basis.elements().iter().map(|g| g.to_string_in(&file.ring)).collect(),
    }
}

/// Normal fan of the Newton polytope of `poly`, a polynomial in `vars`
/// (comma separated).
pub fn normalfan_document(poly: &str, vars: &str) -> Result<ResultDocument, CliError> {
    let names: Vec<&str> = vars.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if names.is_empty() {
        return Err(CliError::Parse("--vars needs at least one variable".into()));
    }
    let ring = Ring::new(names).map_err(|e| CliError::Parse(e.to_string()))?;
    let f = parse_polynomial(poly, &ring).map_err(|e| CliError::Parse(e.to_string()))?;
    let p = newton_polytope(&f).map_err(|e| CliError::InvalidInput(e.to_string()))?;
    ResultDocument::from_fan(&normal_fan(&p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Parse(String::new()).exit_code(), 1);
        assert_eq!(CliError::InvalidInput(String::new()).exit_code(), 2);
        assert_eq!(CliError::Compute(String::new()).exit_code(), 3);
    }

    #[test]
    fn cstar_document() {
        let file = parse_problem("vars: x, y\nQ:\n  1 1\n").unwrap();
        let doc = gitfan_document(&file, &RunSettings { threads: 1, ..RunSettings::default() }).unwrap();
        assert_eq!(doc.rays, vec![vec![1]]);
        assert_eq!(doc.maximal_cones, vec![vec![0]]);
        assert!(doc.adjacency.is_empty());
        assert_eq!(doc.afaces.unwrap().len(), 4);
    }

    #[test]
    fn missing_grading_is_a_parse_error() {
        let file = parse_problem("vars: x\n").unwrap();
        assert_eq!(gitfan_document(&file, &RunSettings::default()).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn normalfan_of_a_constant_is_the_whole_space() {
        let doc = normalfan_document("7", "x, y").unwrap();
        assert_eq!(doc.maximal_cones, vec![Vec::<usize>::new()]);
        assert_eq!(doc.lineality.len(), 2);
        assert!(normalfan_document("0", "x").is_err());
        assert_eq!(normalfan_document("x +", "x").unwrap_err().exit_code(), 1);
    }
}
