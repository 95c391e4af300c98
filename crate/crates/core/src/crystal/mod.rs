//! Abstract crystals, explored crystal graphs and their exports.

mod demazure;
mod export;
mod filter;
mod iso;
mod tensor;

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;
use std::sync::Arc;

use crate::cartan::{CartanData, ClassicalWeight, Color};
use crate::error::{Error, Result};

pub use demazure::{demazure_subset, similarity_check, weyl_action};
pub use export::{GraphJson, JsonAnchors, JsonEdge, JsonNode};
pub use filter::{components, demazure_filter, hw_census, Component, FilterMode};
pub use iso::{iso_check, iso_from, verify_isomorphism, AnchorMode};
pub use tensor::{tensor_f_two_factor, tensor_e_two_factor, TensorProduct};

/// Default cap on the number of explored nodes.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// A seminormal crystal given by its operators.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord;

    fn cartan(&self) -> &Arc<CartanData>;

    fn f(&self, b: &Self::Elem, i: Color) -> Option<Self::Elem>;

    fn e(&self, b: &Self::Elem, i: Color) -> Option<Self::Elem>;

    fn weight(&self, b: &Self::Elem) -> ClassicalWeight;

    fn repr(&self, b: &Self::Elem) -> String;

    fn epsilon(&self, b: &Self::Elem, i: Color) -> usize {
        let mut k = 0;
        let mut cur = b.clone();
        while let Some(x) = self.e(&cur, i) {
            cur = x;
            k += 1;
        }
        k
    }

    fn phi(&self, b: &Self::Elem, i: Color) -> usize {
        let mut k = 0;
        let mut cur = b.clone();
        while let Some(x) = self.f(&cur, i) {
            cur = x;
            k += 1;
        }
        k
    }
}

/// An explored crystal: nodes `0..len()` with `f_i`/`e_i` tables for colors `0..=n`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    cartan: Arc<CartanData>,
    colors: Vec<Color>,
    reprs: Vec<String>,
    weights: Vec<ClassicalWeight>,
    f: Vec<Vec<Option<usize>>>,
    e: Vec<Vec<Option<usize>>>,
    eps: Vec<Vec<usize>>,
    phi: Vec<Vec<usize>>,
}

impl CrystalGraph {
    /// Builds a graph from explicit nodes and `(src, dst, color)` edges, where an
    /// edge `src -> dst` of color `i` means `f_i(src) = dst`.
    pub fn from_edges(
        cartan: Arc<CartanData>,
        colors: Vec<Color>,
        reprs: Vec<String>,
        weights: Vec<ClassicalWeight>,
        edges: &[(usize, usize, Color)],
    ) -> Result<Self> {
        let n = reprs.len();
        if weights.len() != n {
            return Err(Error::Invalid("node and weight lists differ in length".into()));
        }
        let width = cartan.rank() + 1;
        let mut f = vec![vec![None; width]; n];
        let mut e = vec![vec![None; width]; n];
        for &(s, d, i) in edges {
            if s >= n || d >= n || i >= width {
                return Err(Error::Invalid(format!("edge ({s}, {d}, {i}) out of range")));
            }
            if f[s][i].is_some() || e[d][i].is_some() {
                return Err(Error::Invalid(format!(
                    "edge ({s}, {d}, {i}) duplicates an existing {i}-arrow"
                )));
            }
            f[s][i] = Some(d);
            e[d][i] = Some(s);
        }
        Ok(Self::from_tables(cartan, colors, reprs, weights, f, e))
    }

    fn from_tables(
        cartan: Arc<CartanData>,
        colors: Vec<Color>,
        reprs: Vec<String>,
        weights: Vec<ClassicalWeight>,
        f: Vec<Vec<Option<usize>>>,
        e: Vec<Vec<Option<usize>>>,
    ) -> Self {
        let string_len = |table: &Vec<Vec<Option<usize>>>, b: usize, i: Color| {
            let mut k = 0;
            let mut cur = b;
            while let Some(x) = table[cur][i] {
                cur = x;
                k += 1;
                assert!(k <= table.len(), "cyclic {i}-string through node {b}");
            }
            k
        };
        let width = cartan.rank() + 1;
        let eps = (0..reprs.len())
            .map(|b| (0..width).map(|i| string_len(&e, b, i)).collect())
            .collect();
        let phi = (0..reprs.len())
            .map(|b| (0..width).map(|i| string_len(&f, b, i)).collect())
            .collect();
        Self {
            cartan,
            colors,
            reprs,
            weights,
            f,
            e,
            eps,
            phi,
        }
    }

    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    /// Colors whose arrows were explored.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.reprs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reprs.is_empty()
    }

    pub fn repr(&self, b: usize) -> &str {
        &self.reprs[b]
    }

    pub fn reprs(&self) -> &[String] {
        &self.reprs
    }

    pub fn weight(&self, b: usize) -> &ClassicalWeight {
        &self.weights[b]
    }

    pub fn weights(&self) -> &[ClassicalWeight] {
        &self.weights
    }

    pub fn f(&self, b: usize, i: Color) -> Option<usize> {
        self.f[b][i]
    }

    pub fn e(&self, b: usize, i: Color) -> Option<usize> {
        self.e[b][i]
    }

    pub fn epsilon(&self, b: usize, i: Color) -> usize {
        self.eps[b][i]
    }

    pub fn phi(&self, b: usize, i: Color) -> usize {
        self.phi[b][i]
    }

    /// `f_i^k(b)`, or `None` if some step is undefined.
    pub fn f_pow(&self, b: usize, i: Color, k: usize) -> Option<usize> {
        (0..k).try_fold(b, |x, _| self.f(x, i))
    }

    pub fn e_pow(&self, b: usize, i: Color, k: usize) -> Option<usize> {
        (0..k).try_fold(b, |x, _| self.e(x, i))
    }

    /// All arrows `(src, dst, color)`, by source then color.
    pub fn edges(&self) -> Vec<(usize, usize, Color)> {
        let mut out = Vec::new();
        for (s, row) in self.f.iter().enumerate() {
            for (i, d) in row.iter().enumerate() {
                if let Some(d) = d {
                    out.push((s, *d, i));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.f.iter().flatten().filter(|x| x.is_some()).count()
    }

    pub fn edge_count_by_color(&self) -> Vec<usize> {
        let mut counts = vec![0; self.cartan.rank() + 1];
        for row in &self.f {
            for (i, d) in row.iter().enumerate() {
                if d.is_some() {
                    counts[i] += 1;
                }
            }
        }
        counts
    }

    pub fn find_repr(&self, repr: &str) -> Option<usize> {
        self.reprs.iter().position(|r| r == repr)
    }

    /// Node ids with the given weight.
    pub fn nodes_of_weight(&self, wt: &ClassicalWeight) -> Vec<usize> {
        (0..self.len()).filter(|&b| &self.weights[b] == wt).collect()
    }

    /// The same node set with only the arrows for which `keep(src, dst, color)` holds.
    pub fn retain_edges(&self, mut keep: impl FnMut(usize, usize, Color) -> bool) -> Self {
        let width = self.cartan.rank() + 1;
        let mut f = vec![vec![None; width]; self.len()];
        let mut e = vec![vec![None; width]; self.len()];
        for (s, d, i) in self.edges() {
            if keep(s, d, i) {
                f[s][i] = Some(d);
                e[d][i] = Some(s);
            }
        }
        Self::from_tables(
            Arc::clone(&self.cartan),
            self.colors.clone(),
            self.reprs.clone(),
            self.weights.clone(),
            f,
            e,
        )
    }

    /// The induced subgraph on `nodes`, renumbered in the given order.
    pub fn subgraph(&self, nodes: &[usize]) -> Self {
        let pos: HashMap<usize, usize> = nodes.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let width = self.cartan.rank() + 1;
        let mut f = vec![vec![None; width]; nodes.len()];
        let mut e = vec![vec![None; width]; nodes.len()];
        for (k, &b) in nodes.iter().enumerate() {
            for i in 0..width {
                if let Some(d) = self.f[b][i].and_then(|d| pos.get(&d)) {
                    f[k][i] = Some(*d);
                    e[*d][i] = Some(k);
                }
            }
        }
        Self::from_tables(
            Arc::clone(&self.cartan),
            self.colors.clone(),
            nodes.iter().map(|&b| self.reprs[b].clone()).collect(),
            nodes.iter().map(|&b| self.weights[b].clone()).collect(),
            f,
            e,
        )
    }

    /// Checks seminormality on the given colors: `phi_i - eps_i = <alpha_i^vee, wt>`,
    /// `wt(f_i b) = wt(b) - cl(alpha_i)` and `e_i f_i b = b`.
    pub fn check_seminormal(&self, colors: &[Color]) -> std::result::Result<(), String> {
        let c = &*self.cartan;
        for b in 0..self.len() {
            for &i in colors {
                let lhs = self.phi(b, i) as i64 - self.epsilon(b, i) as i64;
                let rhs = c.color_pairing(i, &self.weights[b]);
                if lhs != rhs {
                    return Err(format!(
                        "node {} ({}): phi_{i} - eps_{i} = {lhs} but <alpha_{i}^vee, wt> = {rhs}",
                        b, self.reprs[b]
                    ));
                }
                if let Some(d) = self.f(b, i) {
                    if self.e(d, i) != Some(b) {
                        return Err(format!("e_{i} f_{i} ({}) != itself", self.reprs[b]));
                    }
                    let expected = &self.weights[b] - &c.simple_root_weight(i);
                    if self.weights[d] != expected {
                        return Err(format!(
                            "wt(f_{i} {}) = {} but expected {expected}",
                            self.reprs[b], self.weights[d]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Dominance-extremal anchor: the unique node whose weight is maximal (or minimal)
    /// in dominance order, provided that weight class is a single node.
    pub fn anchor(&self, mode: AnchorMode) -> Result<usize> {
        let c = &*self.cartan;
        if self.is_empty() {
            return Err(Error::AmbiguousAnchor {
                mode: mode.name(),
                detail: "empty crystal".into(),
            });
        }
        let mut distinct: Vec<ClassicalWeight> = self.weights.clone();
        distinct.sort();
        distinct.dedup();
        let sign = match mode {
            AnchorMode::Max => 1,
            AnchorMode::Min => -1,
        };
        let keyed: Vec<(i64, &ClassicalWeight)> = distinct
            .iter()
            .map(|w| (sign * c.scaled_height(w), w))
            .collect();
        let extremal: Vec<&ClassicalWeight> = keyed
            .iter()
            .filter(|(h, w)| {
                !keyed.iter().any(|(h2, w2)| {
                    h2 > h
                        && match mode {
                            AnchorMode::Max => c.dominates(w2, w),
                            AnchorMode::Min => c.dominates(w, w2),
                        }
                })
            })
            .map(|(_, w)| *w)
            .collect();
        if extremal.len() != 1 {
            return Err(Error::AmbiguousAnchor {
                mode: mode.name(),
                detail: format!(
                    "{} dominance-extremal weights: {}",
                    extremal.len(),
                    extremal.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
                ),
            });
        }
        let nodes = self.nodes_of_weight(extremal[0]);
        if nodes.len() != 1 {
            return Err(Error::AmbiguousAnchor {
                mode: mode.name(),
                detail: format!("{} nodes of weight {}", nodes.len(), extremal[0]),
            });
        }
        Ok(nodes[0])
    }

    /// Whether the underlying undirected graph is connected.
    pub fn is_connected(&self) -> bool {
        self.len() <= 1 || components(self).len() == 1
    }
}

impl Crystal for CrystalGraph {
    type Elem = usize;

    fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    fn f(&self, b: &usize, i: Color) -> Option<usize> {
        self.f[*b][i]
    }

    fn e(&self, b: &usize, i: Color) -> Option<usize> {
        self.e[*b][i]
    }

    fn weight(&self, b: &usize) -> ClassicalWeight {
        self.weights[*b].clone()
    }

    fn repr(&self, b: &usize) -> String {
        self.reprs[*b].clone()
    }

    fn epsilon(&self, b: &usize, i: Color) -> usize {
        self.eps[*b][i]
    }

    fn phi(&self, b: &usize, i: Color) -> usize {
        self.phi[*b][i]
    }
}

/// Closure of `seeds` under `f_i` and `e_i` for `i` in `colors`. Nodes are numbered
/// in breadth-first order from each seed in turn, colors ascending, `f` before `e`.
pub fn explore<C: Crystal>(
    crystal: &C,
    seeds: &[C::Elem],
    colors: &[Color],
    cap: usize,
) -> Result<CrystalGraph> {
    let mut colors = colors.to_vec();
    colors.sort_unstable();
    colors.dedup();
    let mut ids: HashMap<C::Elem, usize> = HashMap::new();
    let mut elems: Vec<C::Elem> = Vec::new();
    let mut edges: Vec<(usize, usize, Color)> = Vec::new();
    let mut intern = |x: C::Elem, elems: &mut Vec<C::Elem>, queue: &mut VecDeque<usize>| -> Result<usize> {
        if let Some(&k) = ids.get(&x) {
            return Ok(k);
        }
        if elems.len() >= cap {
            return Err(Error::ResourceCap {
                what: "crystal node count",
                cap,
            });
        }
        let k = elems.len();
        ids.insert(x.clone(), k);
        elems.push(x);
        queue.push_back(k);
        Ok(k)
    };
    for seed in seeds {
        let mut queue = VecDeque::new();
        intern(seed.clone(), &mut elems, &mut queue)?;
        while let Some(k) = queue.pop_front() {
            for &i in &colors {
                let b = elems[k].clone();
                if let Some(y) = crystal.f(&b, i) {
                    let d = intern(y, &mut elems, &mut queue)?;
                    edges.push((k, d, i));
                }
                if let Some(y) = crystal.e(&b, i) {
                    intern(y, &mut elems, &mut queue)?;
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let reprs = elems.iter().map(|b| crystal.repr(b)).collect();
    let weights = elems.iter().map(|b| crystal.weight(b)).collect();
    CrystalGraph::from_edges(Arc::clone(crystal.cartan()), colors, reprs, weights, &edges)
}
