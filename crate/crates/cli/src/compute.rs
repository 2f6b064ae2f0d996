use std::path::Path;
use std::time::Instant;

use grundy_core::forcing::closure;
use grundy_core::hypergraph::verify_cover_sequence;
use grundy_core::invariants::k_dominating_set;
use grundy_core::{
    edge_cover_number, grundy_cover_number_with, grundy_number_with, independence_number, is_k_forcing_set,
    is_zero_forcing_set, k_forcing_number_with, k_z_grundy_number_with, neighborhood_hypergraph,
    propagation_time_with, vertex_cover_number, verify_k_z_sequence, verify_sequence,
    zero_forcing_number_via_z_sequences, zero_forcing_number_with, BipartiteGraph, Error, Graph, GraphExpr,
    GrundySequence, Hypergraph, Invariant, Result, SearchOptions, Variant, VertexSet,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Largest order for which `--zf-route auto` uses the subset search.
pub const AUTO_SUBSET_MAX: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ZfRoute {
    Auto,
    Subset,
    Grz,
}

pub enum Input {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

/// A family expression, or a path to a graph (or hypergraph) file.
pub fn load(spec: &str, hypergraph: bool) -> Result<Input> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{spec}: {e}")))?;
        return if hypergraph {
            Hypergraph::parse(&text).map(Input::Hypergraph)
        } else {
            Graph::parse(&text).map(Input::Graph)
        };
    }
    if hypergraph {
        return Err(Error::Input(format!("hypergraph file {spec:?} not found")));
    }
    let expr = GraphExpr::parse(spec).map_err(|e| match e {
        Error::Input(msg) => Error::Input(format!("{spec:?} is neither a file nor a family expression: {msg}")),
        other => other,
    })?;
    expr.build().map(Input::Graph)
}

#[derive(Clone, Debug)]
pub struct ComputeOptions {
    pub k: usize,
    pub zf_route: ZfRoute,
    pub search: SearchOptions,
    pub ptime_budget: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub input: String,
    pub invariant: Invariant,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    pub elapsed_s: f64,
}

struct Outcome {
    value: usize,
    witness: Option<Value>,
    exact: bool,
    route: Option<String>,
}

impl Outcome {
    fn plain(value: usize) -> Self {
        Outcome {
            value,
            witness: None,
            exact: true,
            route: None,
        }
    }

    fn with(value: usize, witness: Value) -> Self {
        Outcome {
            witness: Some(witness),
            ..Outcome::plain(value)
        }
    }
}

fn replay_failed(what: &str) -> Error {
    Error::Contract(format!("{what} witness failed replay"))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("witness types serialize")
}

pub fn compute(label: &str, input: &Input, inv: Invariant, opts: &ComputeOptions) -> Result<RunReport> {
    let start = Instant::now();
    let out = match input {
        Input::Graph(g) => on_graph(g, inv, opts)?,
        Input::Hypergraph(h) => on_hypergraph(h, inv, opts)?,
    };
    Ok(RunReport {
        input: label.to_string(),
        invariant: inv,
        k: inv.uses_k().then_some(opts.k),
        value: out.value,
        witness: out.witness,
        exact: out.exact,
        route: out.route,
        elapsed_s: start.elapsed().as_secs_f64(),
    })
}

fn sequence(g: &Graph, variant: Variant, opts: &ComputeOptions) -> Result<Outcome> {
    let (value, seq) = grundy_number_with(g, variant, &opts.search)?;
    if !verify_sequence(g, variant, &seq.order).legal || seq.len() != value {
        return Err(replay_failed("sequence"));
    }
    Ok(Outcome::with(value, to_value(&seq)))
}

fn forcing_set(g: &Graph, k: usize, value: usize, set: VertexSet) -> Result<Outcome> {
    if set.len() != value || !is_k_forcing_set(g, &set, k) {
        return Err(replay_failed("forcing set"));
    }
    Ok(Outcome::with(value, to_value(&set)))
}

fn on_graph(g: &Graph, inv: Invariant, opts: &ComputeOptions) -> Result<Outcome> {
    let k = opts.k;
    match inv {
        Invariant::Grundy => sequence(g, Variant::Closed, opts),
        Invariant::GrundyTotal => sequence(g, Variant::Total, opts),
        Invariant::GrundyZ => sequence(g, Variant::Z, opts),
        Invariant::GrundyL => sequence(g, Variant::L, opts),
        Invariant::GrundyZk => {
            let (value, seq): (usize, GrundySequence) = k_z_grundy_number_with(g, k, &opts.search)?;
            if !verify_k_z_sequence(g, k, &seq.order).legal || seq.len() != value {
                return Err(replay_failed("k-Z sequence"));
            }
            Ok(Outcome::with(value, to_value(&seq)))
        }
        Invariant::ZeroForcing => {
            let use_grz = match opts.zf_route {
                ZfRoute::Subset => false,
                ZfRoute::Grz => true,
                ZfRoute::Auto => g.n() > AUTO_SUBSET_MAX,
            };
            let (value, set) = if use_grz {
                zero_forcing_number_via_z_sequences(g, &opts.search)?
            } else {
                zero_forcing_number_with(g, &opts.search)?
            };
            let mut out = forcing_set(g, 1, value, set)?;
            out.route = Some(if use_grz { "n - grz" } else { "subset search" }.into());
            Ok(out)
        }
        Invariant::KForcing => {
            let (value, set) = k_forcing_number_with(g, k, &opts.search)?;
            forcing_set(g, k, value, set)
        }
        Invariant::PropagationTime => {
            let pt = propagation_time_with(g, opts.ptime_budget, &opts.search)?;
            let (blue, process) = closure(g, &pt.witness, 1);
            if blue != g.vertices() || !is_zero_forcing_set(g, &pt.witness) || process.rounds() != pt.rounds {
                return Err(replay_failed("propagation"));
            }
            Ok(Outcome {
                value: pt.rounds,
                witness: Some(to_value(&process)),
                exact: pt.exact,
                route: Some(format!("{} minimum zero forcing sets examined", pt.examined)),
            })
        }
        Invariant::Independence => {
            g.check_search_size(opts.search.limit, opts.search.allow_large)?;
            Ok(Outcome::plain(independence_number(g)))
        }
        Invariant::VertexCover => {
            g.check_search_size(opts.search.limit, opts.search.allow_large)?;
            Ok(Outcome::plain(vertex_cover_number(g)))
        }
        Invariant::KDomination => {
            if k == 0 {
                return Err(Error::Input("k must be at least 1".into()));
            }
            g.check_search_size(opts.search.limit, opts.search.allow_large)?;
            let set = k_dominating_set(g, k);
            let dominated = g
                .vertices()
                .iter()
                .all(|v| set.contains(v) || g.nbhd(v).intersection(&set).len() >= k);
            if !dominated {
                return Err(replay_failed("k-dominating set"));
            }
            Ok(Outcome::with(set.len(), to_value(&set)))
        }
        Invariant::EdgeCover | Invariant::GrundyCover => {
            let bg = BipartiteGraph::from_coloring(g.clone())?;
            let h = neighborhood_hypergraph(&bg)?;
            let mut out = on_hypergraph(&h, inv, opts)?;
            out.route = Some(format!("H(G,B) with A = {:?}, B = {:?}", bg.a().to_vec(), bg.b().to_vec()));
            Ok(out)
        }
    }
}

fn on_hypergraph(h: &Hypergraph, inv: Invariant, opts: &ComputeOptions) -> Result<Outcome> {
    match inv {
        Invariant::EdgeCover => Ok(Outcome::plain(edge_cover_number(h)?)),
        Invariant::GrundyCover => {
            let (value, order) = grundy_cover_number_with(h, &opts.search)?;
            if verify_cover_sequence(h, &order).is_some() || order.len() != value {
                return Err(replay_failed("covering sequence"));
            }
            Ok(Outcome::with(value, json!(order)))
        }
        _ => Err(Error::Input(format!("{inv} is not defined on a hypergraph; use rho or rho-gr"))),
    }
}
