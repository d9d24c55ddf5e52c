//! JSON reports and input handling shared by the subcommands.

use std::fs;
use std::path::Path;
use std::time::Duration;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use ucg::construction::Scaffold;
use ucg::io::{parse_graph_text, parse_named, to_graph6};
use ucg::{Bounds, Graph, VertexSet};

pub const SCHEMA: &str = "ucg-report/v1";

/// How a run ended. `Infeasible` still carries a report.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Infeasible(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Infeasible(_) => 1,
        }
    }
}

pub fn usage(msg: impl ToString) -> Failure {
    Failure::Usage(msg.to_string())
}

/// A graph read from the command line.
pub struct Input {
    pub role: &'static str,
    pub source: String,
    pub graph: Graph,
}

impl Input {
    /// `source` is a file holding graph6 or an edge list, or a named graph
    /// such as `k2`, `c5`, `2k2` or `hex_prism`. Existing files win.
    pub fn load(role: &'static str, source: &str) -> Result<Input, Failure> {
        let path = Path::new(source);
        let graph = if path.is_file() {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("{source}: {e}")))?;
            let g = parse_graph_text(&text).map_err(|e| usage(format!("{source}: {e}")))?;
            match manifest_labels(path, &g) {
                Some(l) => g.with_labels(l).map_err(|e| usage(format!("{source}: {e}")))?,
                None => g,
            }
        } else {
            match parse_named(source) {
                Some(r) => r.map_err(|e| usage(format!("{source}: {e}")))?,
                None => return Err(usage(format!("{source}: no such file or named graph"))),
            }
        };
        Ok(Input {
            role,
            source: source.to_string(),
            graph,
        })
    }

    fn to_json(&self) -> Value {
        let g6 = to_graph6(&self.graph);
        json!({
            "role": self.role,
            "source": self.source,
            "n": self.graph.n(),
            "graph6": g6,
            "sha256": hex::encode(Sha256::digest(g6.as_bytes())),
        })
    }
}

/// Vertex labels for a fixture file, taken from `manifest.json` in the same
/// directory when it lists the file with the same graph6.
fn manifest_labels(path: &Path, g: &Graph) -> Option<Vec<String>> {
    let name = path.file_name()?.to_str()?;
    let text = fs::read_to_string(path.with_file_name("manifest.json")).ok()?;
    let manifest: Value = serde_json::from_str(&text).ok()?;
    let g6 = to_graph6(g);
    let entry = manifest["fixtures"]
        .as_array()?
        .iter()
        .find(|e| e["file"] == name && e["graph6"] == g6.as_str())?;
    serde_json::from_value(entry["labels"].clone()).ok()
}

pub struct Report {
    pub command: &'static str,
    pub args: Vec<String>,
    pub bounds: Bounds,
    pub inputs: Vec<Input>,
}

impl Report {
    pub fn render(&self, result: &Value, elapsed: Duration) -> String {
        let out = json!({
            "schema": SCHEMA,
            "command": { "name": self.command, "args": self.args },
            "bounds": self.bounds,
            "inputs": self.inputs.iter().map(Input::to_json).collect::<Vec<_>>(),
            "result": result,
            "timing": { "elapsed_ms": elapsed.as_secs_f64() * 1000.0 },
        });
        serde_json::to_string_pretty(&out).expect("report values serialize")
    }
}

pub fn labels(g: &Graph, set: VertexSet) -> Vec<String> {
    set.iter().map(|v| g.label(v)).collect()
}

pub fn scaffold_json(s: &Scaffold) -> Value {
    let g = &s.graph;
    json!({
        "graph6": to_graph6(g),
        "n": g.n(),
        "added": s.added_vertices(),
        "labels": (0..g.n()).map(|v| g.label(v)).collect::<Vec<_>>(),
        "roles": s.roles,
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}
