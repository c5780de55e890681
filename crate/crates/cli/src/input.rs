use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use orientkit_core::format::{parse_edge_list, parse_graph6, to_graph6};
use orientkit_core::orientation::parse_orientation;
use orientkit_core::{families, Graph, Orientation};

fn read_source(source: &str) -> Result<String> {
    if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(source).with_context(|| format!("reading {source}"))
}

fn looks_like_edge_list(text: &str) -> bool {
    text.trim_start()
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_digit() || c == '#')
}

/// Loads a graph from `@fixture`, `-` (stdin) or a file. Files ending in
/// `.g6` are graph6; `.txt`, `.el` and `.edges` are edge lists; anything
/// else is decided by its first byte.
pub fn load_graph(source: &str) -> Result<Graph> {
    if let Some(name) = source.strip_prefix('@') {
        return families::named(name).ok_or_else(|| anyhow!("unknown fixture {source:?}"));
    }
    let text = read_source(source)?;
    let ext = Path::new(source).extension().and_then(|e| e.to_str()).unwrap_or("");
    let edge_list = match ext {
        "g6" => false,
        "txt" | "el" | "edges" => true,
        _ => looks_like_edge_list(&text),
    };
    let g = if edge_list {
        parse_edge_list(&text)
    } else {
        parse_graph6(text.trim())
    };
    g.with_context(|| format!("parsing {source}"))
}

/// Loads an orientation in its JSON or text form.
pub fn load_orientation(source: &str) -> Result<Orientation> {
    let text = read_source(source)?;
    if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).with_context(|| format!("parsing {source}"))
    } else {
        parse_orientation(&text).with_context(|| format!("parsing {source}"))
    }
}

/// Writes an orientation as JSON if `path` ends in `.json`, as text otherwise.
pub fn write_orientation(path: &Path, d: &Orientation) -> Result<()> {
    let body = if path.extension().is_some_and(|e| e == "json") {
        serde_json::to_string(d)? + "\n"
    } else {
        d.to_text()
    };
    fs::write(path, body).with_context(|| format!("writing {}", path.display()))
}

pub fn write_graph6(path: &Path, g: &Graph) -> Result<()> {
    fs::write(path, to_graph6(g) + "\n").with_context(|| format!("writing {}", path.display()))
}
