//! Where a command's graph comes from: a named family, explicit part sizes,
//! a standard graph, or a file.

use std::path::PathBuf;

use clap::Args;
use kordered::generators::{gen_counterexample, gen_directed, gen_g, gen_h, gen_p, FamilyId};
use kordered::io::parse_any;
use kordered::{build_any_bracelet, AnyBracelet, AnyGraph, BraceletSpec, Digraph, Graph};

use crate::Failure;

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Bracelet family: G, H, P, directed or counterexample.
    #[arg(long)]
    pub family: Option<FamilyId>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Part count for the G family.
    #[arg(long)]
    pub parts: Option<usize>,
    /// Repetition count (H) or part count (P).
    #[arg(long)]
    pub m: Option<usize>,
    /// Part count for the directed family.
    #[arg(long)]
    pub l: Option<usize>,
    /// Filler part sizes for the counterexample family.
    #[arg(long, value_delimiter = ',')]
    pub filler: Vec<usize>,
    /// Explicit bracelet part sizes, e.g. 2,3,3,3.
    #[arg(long, value_delimiter = ',', conflicts_with = "family")]
    pub sizes: Vec<usize>,
    /// Complete graph on N vertices.
    #[arg(long, value_name = "N", conflicts_with_all = ["family", "sizes"])]
    pub complete: Option<usize>,
    /// Cycle on N vertices.
    #[arg(long, value_name = "N", conflicts_with_all = ["family", "sizes", "complete"])]
    pub cycle: Option<usize>,
    /// Build the directed version (for --sizes, --complete and --cycle).
    #[arg(long)]
    pub directed: bool,
    /// Edge list or bracelet file.
    #[arg(long, conflicts_with_all = ["family", "sizes", "complete", "cycle"])]
    pub input: Option<PathBuf>,
}

pub struct Loaded {
    pub label: String,
    pub graph: AnyGraph,
    pub bracelet: Option<AnyBracelet>,
}

fn need(v: Option<usize>, flag: &str, family: FamilyId) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::usage(format!("family {family} needs --{flag}")))
}

impl GraphArgs {
    pub fn load(&self) -> Result<Loaded, Failure> {
        if let Some(family) = self.family {
            return self.load_family(family);
        }
        if !self.sizes.is_empty() {
            let spec = BraceletSpec::new(self.sizes.clone())?;
            let b = build_any_bracelet(&spec, self.directed);
            let label = format!("bracelet{:?}", self.sizes);
            return Ok(with_bracelet(label, b));
        }
        if let Some(n) = self.complete {
            let graph = if self.directed { Digraph::complete(n).into() } else { Graph::complete(n).into() };
            return Ok(Loaded { label: format!("complete({n})"), graph, bracelet: None });
        }
        if let Some(n) = self.cycle {
            let graph = if self.directed { Digraph::directed_cycle(n)?.into() } else { Graph::cycle(n)?.into() };
            return Ok(Loaded { label: format!("cycle({n})"), graph, bracelet: None });
        }
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
            let graph = parse_any(&text)?;
            return Ok(Loaded { label: path.display().to_string(), graph, bracelet: None });
        }
        Err(Failure::usage("no graph given: use --family, --sizes, --complete, --cycle or --input"))
    }

    fn load_family(&self, family: FamilyId) -> Result<Loaded, Failure> {
        let k = need(self.k, "k", family)?;
        let (label, b) = match family {
            FamilyId::GUniform => {
                let parts = need(self.parts, "parts", family)?;
                (format!("G({k},{parts})"), AnyBracelet::Undirected(gen_g(k, parts)?))
            }
            FamilyId::HPattern => {
                let m = need(self.m, "m", family)?;
                (format!("H({k},{m})"), AnyBracelet::Undirected(gen_h(k, m)?))
            }
            FamilyId::PLowDegree => {
                let m = need(self.m, "m", family)?;
                (format!("P({k},{m})"), AnyBracelet::Undirected(gen_p(k, m)?))
            }
            FamilyId::DirectedBracelet => {
                let l = need(self.l, "l", family)?;
                (format!("directed({k},{l})"), AnyBracelet::Directed(gen_directed(k, l)?))
            }
            FamilyId::CounterexampleNeighborhood => {
                let c = gen_counterexample(k, &self.filler)?;
                (format!("counterexample({k},{:?})", self.filler), AnyBracelet::Undirected(c.bracelet))
            }
        };
        Ok(with_bracelet(label, b))
    }
}

fn with_bracelet(label: String, b: AnyBracelet) -> Loaded {
    let graph = match &b {
        AnyBracelet::Undirected(b) => AnyGraph::Undirected(b.graph().clone()),
        AnyBracelet::Directed(b) => AnyGraph::Directed(b.graph().clone()),
    };
    Loaded { label, graph, bracelet: Some(b) }
}
