use std::fs::File;
use std::io::{self, BufReader};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use psdzf::families::{figure3_example, figure4_example, FamilySpec, NamedGraph};
use psdzf::{enumerate_graphs, parse_graph6, read_corpus};

/// Where graphs come from. Exactly one source kind per invocation.
#[derive(Args, Debug, Clone)]
#[group(multiple = false)]
pub struct InputArgs {
    /// graph6 string (repeatable)
    #[arg(long, value_name = "GRAPH6")]
    pub g6: Vec<String>,

    /// File with one graph6 per line; `-` reads stdin
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,

    /// Built-in family such as `path:5` or `lollipop:6,5` (repeatable)
    #[arg(long, value_name = "NAME:PARAMS")]
    pub family: Vec<String>,

    /// Example graph with named vertices
    #[arg(long, value_parser = ["figure3", "figure4"])]
    pub fixture: Option<String>,

    /// Every isomorphism class of this order (at most 8)
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,
}

/// A parsed input graph, or the reason it could not be read.
pub struct Item {
    pub source: String,
    pub graph: std::result::Result<NamedGraph, String>,
}

fn plain(graph: psdzf::Graph) -> NamedGraph {
    NamedGraph { graph, names: Default::default() }
}

impl InputArgs {
    pub fn is_empty(&self) -> bool {
        self.g6.is_empty() && self.file.is_none() && self.family.is_empty() && self.fixture.is_none() && self.enumerate.is_none()
    }

    pub fn load(&self) -> Result<Vec<Item>> {
        if !self.g6.is_empty() {
            return Ok(self
                .g6
                .iter()
                .map(|s| Item { source: s.clone(), graph: parse_graph6(s).map(plain).map_err(|e| e.to_string()) })
                .collect());
        }
        if let Some(path) = &self.file {
            let entries = if path.as_os_str() == "-" {
                read_corpus(io::stdin().lock())?
            } else {
                let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
                read_corpus(BufReader::new(f))?
            };
            return Ok(entries
                .into_iter()
                .map(|e| Item {
                    source: format!("line {}", e.line),
                    graph: e.graph.map(plain).map_err(|err| err.to_string()),
                })
                .collect());
        }
        if !self.family.is_empty() {
            return self
                .family
                .iter()
                .map(|spec| {
                    let parsed: FamilySpec = spec.parse()?;
                    Ok(Item { source: parsed.to_string(), graph: Ok(parsed.build()?) })
                })
                .collect();
        }
        if let Some(name) = &self.fixture {
            let graph = match name.as_str() {
                "figure3" => figure3_example(),
                "figure4" => figure4_example(),
                other => bail!("unknown fixture `{other}`"),
            };
            return Ok(vec![Item { source: name.clone(), graph: Ok(graph) }]);
        }
        if let Some(n) = self.enumerate {
            return Ok(enumerate_graphs(n, false)?
                .into_iter()
                .enumerate()
                .map(|(i, g)| Item { source: format!("n{n}#{i}"), graph: Ok(plain(g)) })
                .collect());
        }
        bail!("no input given (use --g6, --file, --family, --fixture or --enumerate)")
    }

    /// The single graph a per-graph command operates on.
    pub fn load_one(&self) -> Result<(String, NamedGraph)> {
        let mut items = self.load()?;
        if items.len() != 1 {
            bail!("this command takes exactly one graph, got {}", items.len());
        }
        let item = items.pop().expect("one item");
        let graph = item.graph.map_err(anyhow::Error::msg)?;
        Ok((item.source, graph))
    }
}
