//! JSON and DOT output. Every array is emitted in a canonical order so equal
//! results serialize to identical bytes.

use std::fmt::Write;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use gitfan_core::cones::Fan;
use gitfan_core::exact::IntVector;

use crate::CliError;

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct OrbitEntry {
    pub rep: usize,
    pub members: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug, Default)]
pub struct Stats {
    pub aface_tests: usize,
    pub cones: usize,
    pub orbits: usize,
}

/// A fan: lex-sorted primitive rays, maximal cones as sorted ray-index
/// lists, adjacency as sorted index pairs.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ResultDocument {
    pub rays: Vec<Vec<i64>>,
    pub maximal_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitEntry>>,
    pub adjacency: Vec<[usize; 2]>,
    /// Bitstrings; character `i` is `1` iff variable `i + 1` is in the face.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub afaces: Option<Vec<String>>,
    pub stats: Stats,
    /// Basis of the common lineality space, omitted when trivial.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lineality: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug, Default)]
pub struct AFaceStats {
    pub aface_tests: usize,
    pub afaces: usize,
    pub orbits: usize,
}

/// A-faces as bitstrings, with orbits given as indices into `afaces`.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct AFacesDocument {
    pub afaces: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitEntry>>,
    pub stats: AFaceStats,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct GroebnerDocument {
    pub order: String,
    pub generators: Vec<String>,
}

fn small(v: &IntVector) -> Result<Vec<i64>, CliError> {
    v.iter()
        .map(|x| {
            x.to_i64()
                .ok_or_else(|| CliError::Compute(format!("coordinate {x} does not fit in 64 bits")))
        })
        .collect()
}

impl ResultDocument {
    /// Rays, cones, lineality and adjacency of `fan`; the remaining fields
    /// are left for the caller.
    pub fn from_fan(fan: &Fan) -> Result<Self, CliError> {
        let adjacency = fan.adjacency().into_iter().map(|(a, b)| [a, b]).collect();
        let n = fan.maximal_cones().len();
        Ok(ResultDocument {
            rays: fan.rays().iter().map(small).collect::<Result<_, _>>()?,
            maximal_cones: fan.maximal_cones().to_vec(),
            orbits: None,
            adjacency,
            afaces: None,
            stats: Stats {
                aface_tests: 0,
                cones: n,
                orbits: n,
            },
            lineality: fan.lineality().iter().map(small).collect::<Result<_, _>>()?,
        })
    }
}

/// Indented JSON with a trailing newline. Arrays of scalars stay on one
/// line, so every vector, cone and edge occupies a single line.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                write!(out, "{}{}: ", pad(depth + 1), Value::String(k.clone())).unwrap();
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            write!(out, "[{}]", parts.join(", ")).unwrap();
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Undirected adjacency graph of the maximal cones. Nodes carry their ray
/// indices and, when known, their orbit.
pub fn dot_graph(doc: &ResultDocument) -> String {
    let mut orbit_of = vec![None; doc.maximal_cones.len()];
    for (k, o) in doc.orbits.iter().flatten().enumerate() {
        for &m in &o.members {
            orbit_of[m] = Some(k);
        }
    }
    let mut out = String::from("graph gitfan {\n  node [shape=circle];\n");
    for (i, cone) in doc.maximal_cones.iter().enumerate() {
        let rays: Vec<String> = cone.iter().map(usize::to_string).collect();
        write!(out, "  c{i} [label=\"{i}\", rays=\"{}\"", rays.join(" ")).unwrap();
        if let Some(k) = orbit_of[i] {
            write!(out, ", orbit={k}").unwrap();
        }
        out.push_str("];\n");
    }
    for [a, b] in &doc.adjacency {
        writeln!(out, "  c{a} -- c{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
