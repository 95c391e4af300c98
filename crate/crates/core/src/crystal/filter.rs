use serde::{Deserialize, Serialize};

use super::CrystalGraph;
use crate::cartan::{ClassicalWeight, Color};

/// Which end of each 0-string keeps its arrows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FilterMode {
    /// Level-`l` Demazure edges: keep `b' -> b` iff `eps_0(b) > l`.
    Head,
    /// Level-`l` dual Demazure edges: keep `b' -> b` iff `phi_0(b) >= l`.
    Tail,
}

impl std::str::FromStr for FilterMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "head" | "demazure" => Ok(FilterMode::Head),
            "tail" | "dual" => Ok(FilterMode::Tail),
            _ => Err(format!("unknown filter mode {s:?}")),
        }
    }
}

/// Removes 0-arrows by string position; `eps_0`/`phi_0` are those of the input graph.
pub fn demazure_filter(g: &CrystalGraph, level: usize, mode: FilterMode) -> CrystalGraph {
    g.retain_edges(|_, dst, i| {
        i != 0
            || match mode {
                FilterMode::Head => g.epsilon(dst, 0) > level,
                FilterMode::Tail => g.phi(dst, 0) >= level,
            }
    })
}

/// A weakly connected component: the induced subgraph together with the ids its
/// nodes had in the parent graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub nodes: Vec<usize>,
    pub graph: CrystalGraph,
}

impl Component {
    pub fn sorted_weights(&self) -> Vec<ClassicalWeight> {
        let mut w = self.graph.weights().to_vec();
        w.sort();
        w
    }
}

/// Weakly connected components, sorted by size and then by sorted weight multiset.
pub fn components(g: &CrystalGraph) -> Vec<Component> {
    let n = g.len();
    let mut comp = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = groups.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(b) = stack.pop() {
            for i in 0..=g.cartan().rank() {
                for nb in [g.f(b, i), g.e(b, i)].into_iter().flatten() {
                    if comp[nb] == usize::MAX {
                        comp[nb] = id;
                        members.push(nb);
                        stack.push(nb);
                    }
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }
    let mut out: Vec<Component> = groups
        .into_iter()
        .map(|nodes| Component {
            graph: g.subgraph(&nodes),
            nodes,
        })
        .collect();
    out.sort_by_cached_key(|c| (c.nodes.len(), c.sorted_weights(), c.nodes[0]));
    out
}

/// Weights of all nodes annihilated by every `e_i`, `i` in `colors`, sorted.
pub fn hw_census(g: &CrystalGraph, colors: &[Color]) -> Vec<ClassicalWeight> {
    let mut out: Vec<ClassicalWeight> = (0..g.len())
        .filter(|&b| colors.iter().all(|&i| g.e(b, i).is_none()))
        .map(|b| g.weight(b).clone())
        .collect();
    out.sort();
    out
}
