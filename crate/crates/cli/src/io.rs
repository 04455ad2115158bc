//! graph6 file input.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use hamsquare::{graph6, Graph, GraphFamily, Provenance};

/// A graph read from a file, with its optional name and 1-based line number.
#[derive(Clone, Debug)]
pub struct Record {
    pub name: Option<String>,
    pub graph: Graph,
    pub line: usize,
}

/// Parses graph6 lines, optionally prefixed by `name<TAB>`. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_records(text: &str, label: &str) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, payload) = match line.split_once('\t') {
            Some((n, p)) => (Some(n.trim().to_owned()), p),
            None => (None, line),
        };
        let graph = graph6::decode_str(payload.trim()).map_err(|e| anyhow!("{label}: line {}: {e}", i + 1))?;
        out.push(Record { name, graph, line: i + 1 });
    }
    Ok(out)
}

pub fn read_records(path: &Path) -> Result<Vec<Record>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_records(&text, &path.display().to_string())
}

/// Reads a graph6 file into a family, recording the line each member came from.
pub fn import_graphs(path: &Path) -> Result<GraphFamily> {
    let label = path.display().to_string();
    let mut fam = GraphFamily::new(label.clone());
    for r in read_records(path)? {
        let prov = Provenance::GadgetFile { path: label.clone(), line: r.line, reconstruction: false };
        fam.insert(r.name.as_deref(), r.graph, prov)?;
    }
    Ok(fam)
}

/// A graph given on the command line: a graph6 string, a catalog name, or a file.
pub fn graph_arg(arg: &str) -> Result<Graph> {
    let p = Path::new(arg);
    if p.is_file() {
        let recs = read_records(p)?;
        return recs.into_iter().next().map(|r| r.graph).ok_or_else(|| anyhow!("{arg}: no graph in file"));
    }
    if let Ok(g) = graph6::decode_str(arg) {
        return Ok(g);
    }
    hamsquare::catalog::parse_name(arg).map_err(|e| anyhow!("{arg}: not a file, graph6 string or graph name ({e})"))
}
