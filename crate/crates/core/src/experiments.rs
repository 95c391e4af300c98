//! Named verifications. Each check builds the crystals involved, compares them and
//! returns a [`Report`] carrying the evidence.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alcove::{AlcoveModel, ChainOrder};
use crate::cartan::{CartanData, ClassicalWeight, Family};
use crate::crystal::{
    components, demazure_filter, hw_census, iso_check, iso_from, AnchorMode, Component, CrystalGraph,
    FilterMode,
};
use crate::error::{Error, Result};
use crate::kr::{fixture_c2, kr_factor, kr_tensor, Fixture};
use crate::weyl::{dominantize, WeylGroup, DEFAULT_WEYL_CAP};

/// A tensor product `B^{r_1,s_1} ⊗ ... ⊗ B^{r_N,s_N}`, leftmost factor first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorSpec {
    pub cartan: String,
    pub factors: Vec<(usize, i64)>,
}

impl TensorSpec {
    pub fn new(cartan: &str, factors: &[(usize, i64)]) -> Self {
        Self {
            cartan: cartan.to_string(),
            factors: factors.to_vec(),
        }
    }

    /// Parses `r,s:r,s:...`; the empty string is the empty product.
    pub fn parse(cartan: &str, factors: &str) -> Result<Self> {
        Ok(Self::new(cartan, &parse_factors(factors)?))
    }

    pub fn cartan_data(&self) -> Result<Arc<CartanData>> {
        Ok(Arc::new(CartanData::parse(&self.cartan)?))
    }

    /// The maximal weight `sum_j s_j varpi_{r_j}`.
    pub fn max_weight(&self, c: &CartanData) -> ClassicalWeight {
        let mut w = ClassicalWeight::zero(c.rank());
        for &(r, s) in &self.factors {
            if (1..=c.rank()).contains(&r) {
                w.0[r - 1] += s;
            }
        }
        w
    }

    pub fn factors_string(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|(r, s)| format!("{r},{s}")).collect();
        parts.join(":")
    }
}

impl fmt::Display for TensorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{} (empty product)", self.cartan);
        }
        let parts: Vec<String> = self.factors.iter().map(|(r, s)| format!("B^{{{r},{s}}}")).collect();
        write!(f, "{} {}", self.cartan, parts.join(" ⊗ "))
    }
}

pub fn parse_factors(text: &str) -> Result<Vec<(usize, i64)>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(vec![]);
    }
    text.split(':')
        .map(|part| {
            let (r, s) = part
                .split_once(',')
                .ok_or_else(|| Error::Invalid(format!("factor {part:?} is not of the form r,s")))?;
            let r = r.trim().parse().map_err(|_| Error::Invalid(format!("bad r in {part:?}")))?;
            let s = s.trim().parse().map_err(|_| Error::Invalid(format!("bad s in {part:?}")))?;
            Ok((r, s))
        })
        .collect()
}

/// Which edges of the full crystal to keep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum View {
    #[default]
    None,
    /// `D~_l`: Demazure arrows only.
    Demazure,
    /// `DD~_l`: dual Demazure arrows only.
    Dual,
}

impl FromStr for View {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(View::None),
            "demazure" | "head" => Ok(View::Demazure),
            "dual" | "tail" => Ok(View::Dual),
            _ => Err(Error::Invalid(format!("unknown view {s:?}"))),
        }
    }
}

impl From<FilterMode> for View {
    fn from(m: FilterMode) -> Self {
        match m {
            FilterMode::Head => View::Demazure,
            FilterMode::Tail => View::Dual,
        }
    }
}

fn is_c2_fixture_factor(c: &CartanData, r: usize, s: i64) -> bool {
    c.family() == Family::C && c.rank() == 2 && r == 1 && s == 2
}

/// Builds the tensor product and applies the view. The `C_2` factor `B^{1,2}` only
/// exists as the transcribed level-1 Demazure graph.
pub fn build_view(spec: &TensorSpec, level: usize, view: View, cap: usize) -> Result<CrystalGraph> {
    let c = spec.cartan_data()?;
    if let Some(&(r, s)) = spec.factors.iter().find(|&&(r, s)| is_c2_fixture_factor(&c, r, s)) {
        if spec.factors.len() == 1 && view == View::Demazure && level == 1 {
            return Ok(fixture_c2(Fixture::B12));
        }
        return Err(Error::UnsupportedFactor {
            cartan: c.name(),
            r,
            s,
            reason: "C2 B^{1,2} is only available alone, with the level-1 demazure view",
        });
    }
    let g = kr_tensor(&c, &spec.factors, cap)?;
    Ok(match view {
        View::None => g,
        View::Demazure => demazure_filter(&g, level, FilterMode::Head),
        View::Dual => demazure_filter(&g, level, FilterMode::Tail),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    ComponentSizes {
        label: String,
        sizes: Vec<usize>,
    },
    WeightMultiset {
        label: String,
        weights: Vec<String>,
    },
    SizeLedger {
        lhs: usize,
        rhs: Vec<usize>,
    },
    Connectivity {
        label: String,
        connected: bool,
    },
    Isomorphism {
        left: String,
        right: String,
        anchor: String,
        /// `map[i]` is the image of the `i`-th node of the left graph.
        map: Vec<usize>,
    },
    MinimalElement {
        component: usize,
        node: String,
        weight: String,
        dominant: String,
        word: Vec<usize>,
    },
    EdgeAudit {
        label: String,
        removed: usize,
        added: usize,
    },
    Counterexample {
        detail: String,
        nodes: Vec<String>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(name: &str, parameters: &[(&str, String)]) -> Self {
        Self {
            name: name.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            status: Status::Pass,
            witnesses: vec![],
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn push(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    /// Marks the report failed; the counterexample is recorded with it.
    pub fn fail(&mut self, detail: impl Into<String>, nodes: Vec<String>) {
        self.status = Status::Fail;
        self.witnesses.push(Witness::Counterexample {
            detail: detail.into(),
            nodes,
        });
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &str> {
        self.witnesses.iter().filter_map(|w| match w {
            Witness::Counterexample { detail, .. } => Some(detail.as_str()),
            _ => None,
        })
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn sizes(comps: &[Component]) -> Vec<usize> {
    comps.iter().map(|c| c.nodes.len()).collect()
}

fn weight_strings(w: &[ClassicalWeight]) -> Vec<String> {
    w.iter().map(ToString::to_string).collect()
}

/// Forced-map isomorphism of two connected crystals. Anchors are tried first (max,
/// then min); when neither is unique every candidate image of a rarest-weight node
/// is tried.
pub fn component_iso(a: &CrystalGraph, b: &CrystalGraph) -> Option<(String, Vec<usize>)> {
    if a.len() != b.len() {
        return None;
    }
    if a.is_empty() {
        return Some(("empty".into(), vec![]));
    }
    for mode in [AnchorMode::Max, AnchorMode::Min] {
        match iso_check(a, b, mode) {
            Ok(found) => return found.map(|m| (mode.name().to_string(), m)),
            Err(_) => continue,
        }
    }
    let mut counts: HashMap<&ClassicalWeight, usize> = HashMap::new();
    for w in a.weights() {
        *counts.entry(w).or_default() += 1;
    }
    let x0 = (0..a.len())
        .min_by_key(|&x| (counts[a.weight(x)], x))
        .expect("nonempty");
    b.nodes_of_weight(a.weight(x0))
        .into_iter()
        .find_map(|y0| iso_from(a, x0, b, y0))
        .map(|m| ("search".to_string(), m))
}

#[derive(Clone, Debug)]
pub struct ComponentMatch {
    pub left: usize,
    pub right: usize,
    pub anchor: String,
    pub map: Vec<usize>,
}

/// Pairs the components of two graphs by isomorphism: greedily by size and weight
/// multiset, then by bipartite matching if the greedy pass gets stuck.
pub fn match_components(left: &[Component], right: &[Component]) -> std::result::Result<Vec<ComponentMatch>, String> {
    let mut ls = sizes(left);
    let mut rs = sizes(right);
    ls.sort_unstable();
    rs.sort_unstable();
    if ls != rs {
        return Err(format!("component sizes differ: {ls:?} vs {rs:?}"));
    }
    let lw: Vec<_> = left.iter().map(Component::sorted_weights).collect();
    let rw: Vec<_> = right.iter().map(Component::sorted_weights).collect();
    let mut cache: HashMap<(usize, usize), Option<(String, Vec<usize>)>> = HashMap::new();
    let mut iso = |l: usize, r: usize| -> Option<(String, Vec<usize>)> {
        cache
            .entry((l, r))
            .or_insert_with(|| {
                if lw[l] != rw[r] {
                    None
                } else {
                    component_iso(&left[l].graph, &right[r].graph)
                }
            })
            .clone()
    };
    let mut used = vec![false; right.len()];
    let mut greedy = Vec::new();
    for l in 0..left.len() {
        if let Some(r) = (0..right.len()).find(|&r| !used[r] && iso(l, r).is_some()) {
            used[r] = true;
            let (anchor, map) = iso(l, r).expect("checked");
            greedy.push(ComponentMatch { left: l, right: r, anchor, map });
        }
    }
    if greedy.len() == left.len() {
        return Ok(greedy);
    }
    let adj: Vec<Vec<usize>> = (0..left.len())
        .map(|l| (0..right.len()).filter(|&r| iso(l, r).is_some()).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; right.len()];
    fn augment(l: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &r in &adj[l] {
            if !seen[r] {
                seen[r] = true;
                if owner[r].is_none_or(|o| augment(o, adj, seen, owner)) {
                    owner[r] = Some(l);
                    return true;
                }
            }
        }
        false
    }
    for l in 0..left.len() {
        let mut seen = vec![false; right.len()];
        if !augment(l, &adj, &mut seen, &mut owner) {
            return Err(format!(
                "no partner for the component of size {} with weights {}",
                left[l].nodes.len(),
                weight_strings(&lw[l]).join(" ")
            ));
        }
    }
    let mut out: Vec<ComponentMatch> = owner
        .iter()
        .enumerate()
        .filter_map(|(r, l)| l.map(|l| (l, r)))
        .map(|(l, r)| {
            let (anchor, map) = iso(l, r).expect("matched pairs are isomorphic");
            ComponentMatch { left: l, right: r, anchor, map }
        })
        .collect();
    out.sort_by_key(|m| m.left);
    Ok(out)
}

fn check_levels(c: &CartanData, spec: &TensorSpec, level: usize) -> Result<()> {
    for &(r, s) in &spec.factors {
        if !(1..=c.rank()).contains(&r) {
            return Err(Error::UnsupportedFactor {
                cartan: c.name(),
                r,
                s,
                reason: "r must lie in 1..=n",
            });
        }
        let k = c.kr_level(r, s);
        if k > level as i64 {
            return Err(Error::Precondition(format!(
                "B^{{{r},{s}}} has level {k} > {level}"
            )));
        }
    }
    Ok(())
}

fn unique_node_of_weight(g: &CrystalGraph, w: &ClassicalWeight, what: &str) -> Result<usize> {
    let nodes = g.nodes_of_weight(w);
    if nodes.len() != 1 {
        return Err(Error::Invalid(format!(
            "{what}: {} nodes of weight {w}",
            nodes.len()
        )));
    }
    Ok(nodes[0])
}

/// Compares the `u_min` component of `D~_l` (head) or the `u_max` component of
/// `DD~_l` (tail) of two tensor products with the same maximal weight.
pub fn check_reduction(b: &TensorSpec, b2: &TensorSpec, level: usize, mode: FilterMode, cap: usize) -> Result<Report> {
    let start = Instant::now();
    let c = b.cartan_data()?;
    let c2 = b2.cartan_data()?;
    if c.cartan_type != c2.cartan_type {
        return Err(Error::Precondition(format!(
            "types differ: {} vs {}",
            c.name(),
            c2.name()
        )));
    }
    check_levels(&c, b, level)?;
    check_levels(&c, b2, level)?;
    let top = b.max_weight(&c);
    if top != b2.max_weight(&c) {
        return Err(Error::Precondition(format!(
            "maximal weights differ: {top} vs {}",
            b2.max_weight(&c)
        )));
    }
    let mut report = Report::new(
        "reduction",
        &[
            ("type", c.name()),
            ("left", b.factors_string()),
            ("right", b2.factors_string()),
            ("level", level.to_string()),
            ("mode", format!("{mode:?}").to_lowercase()),
        ],
    );
    let target = match mode {
        FilterMode::Head => WeylGroup::enumerate(Arc::clone(&c), DEFAULT_WEYL_CAP)?
            .longest()
            .act_weight(&top),
        FilterMode::Tail => top.clone(),
    };
    let mut picked = Vec::new();
    for (label, spec) in [("left", b), ("right", b2)] {
        let g = build_view(spec, level, mode.into(), cap)?;
        let comps = components(&g);
        report.push(Witness::ComponentSizes {
            label: label.into(),
            sizes: sizes(&comps),
        });
        let connected = comps.len() <= 1;
        report.push(Witness::Connectivity {
            label: label.into(),
            connected,
        });
        if let [(r, s)] = spec.factors[..] {
            if c.kr_level(r, s) == level as i64 && !connected {
                report.fail(
                    format!("{label} side B^{{{r},{s}}} is perfect of level {level} but splits into {} pieces", comps.len()),
                    vec![],
                );
            }
        }
        let u = unique_node_of_weight(&g, &target, label)?;
        let comp = comps
            .into_iter()
            .find(|k| k.nodes.binary_search(&u).is_ok())
            .expect("every node lies in a component");
        picked.push(comp);
    }
    match component_iso(&picked[0].graph, &picked[1].graph) {
        Some((anchor, map)) => report.push(Witness::Isomorphism {
            left: b.to_string(),
            right: b2.to_string(),
            anchor,
            map,
        }),
        None => {
            let nodes = vec![
                format!("left component: {} nodes", picked[0].nodes.len()),
                format!("right component: {} nodes", picked[1].nodes.len()),
            ];
            report.fail("extracted components are not isomorphic", nodes);
        }
    }
    Ok(report.timed(start))
}

/// Checks the `b_min` structure of every component of a `D~_l` graph.
pub fn check_bmin_graph(mut report: Report, g: &CrystalGraph, level: usize) -> Result<Report> {
    let start = Instant::now();
    let c = Arc::clone(g.cartan());
    let comps = components(g);
    report.push(Witness::ComponentSizes {
        label: "demazure".into(),
        sizes: sizes(&comps),
    });
    let mut dominant = Vec::new();
    for (k, comp) in comps.iter().enumerate() {
        let h = &comp.graph;
        let low = (0..h.len())
            .min_by_key(|&x| (c.scaled_height(h.weight(x)), x))
            .expect("components are nonempty");
        let w0 = h.weight(low).clone();
        let bad: Vec<String> = (0..h.len())
            .filter(|&x| x != low)
            .filter(|&x| {
                let gap = h.weight(x) - &w0;
                gap.is_zero() || !c.in_positive_cone(&gap)
            })
            .map(|x| h.repr(x).to_string())
            .collect();
        if !bad.is_empty() {
            report.fail(
                format!(
                    "component {k}: no unique minimal element below {}",
                    h.repr(low)
                ),
                bad,
            );
            continue;
        }
        let d = dominantize(&c, &w0, level as i64)?;
        report.push(Witness::MinimalElement {
            component: k,
            node: h.repr(low).to_string(),
            weight: w0.to_string(),
            dominant: d.weight.to_string(),
            word: d.word.clone(),
        });
        dominant.push(d.weight);
    }
    dominant.sort();
    let census = hw_census(g, &c.colors());
    report.push(Witness::WeightMultiset {
        label: "dominantized b_min".into(),
        weights: weight_strings(&dominant),
    });
    report.push(Witness::WeightMultiset {
        label: "highest weight census".into(),
        weights: weight_strings(&census),
    });
    if report.passed() && dominant != census {
        report.fail(
            "dominantized b_min weights differ from the highest weight census",
            weight_strings(&census),
        );
    }
    Ok(report.timed(start))
}

pub fn check_bmin(spec: &TensorSpec, level: usize, cap: usize) -> Result<Report> {
    let start = Instant::now();
    let c = spec.cartan_data()?;
    check_levels(&c, spec, level)?;
    let g = build_view(spec, level, View::Demazure, cap)?;
    let report = Report::new(
        "bmin",
        &[
            ("type", c.name()),
            ("factors", spec.factors_string()),
            ("level", level.to_string()),
        ],
    );
    Ok(check_bmin_graph(report, &g, level)?.timed(start))
}

/// `check_bmin` on one of the transcribed level-1 `C_2` graphs.
pub fn check_bmin_fixture(which: Fixture) -> Result<Report> {
    let start = Instant::now();
    let report = Report::new(
        "bmin",
        &[
            ("type", "C2~".into()),
            ("fixture", format!("{which:?}").to_lowercase()),
            ("level", "1".into()),
        ],
    );
    Ok(check_bmin_graph(report, &fixture_c2(which), 1)?.timed(start))
}

fn type_a(n: usize) -> Result<Arc<CartanData>> {
    Ok(Arc::new(crate::cartan::build_cartan(Family::A, n)?))
}

/// The crystal Q-system relation in type `A_n` at level `l`.
pub fn check_qsystem_type_a(n: usize, a: usize, m: i64, level: usize, cap: usize) -> Result<Report> {
    let start = Instant::now();
    if !(1..=n).contains(&a) || m < 1 || (level as i64) < m {
        return Err(Error::Precondition(format!(
            "need 1 <= a <= n, m >= 1 and level >= m; got a = {a}, m = {m}, level = {level}"
        )));
    }
    let c = type_a(n)?;
    let name = c.name();
    let mut report = Report::new(
        "qsystem",
        &[
            ("type", name.clone()),
            ("a", a.to_string()),
            ("m", m.to_string()),
            ("level", level.to_string()),
        ],
    );
    let lhs_spec = TensorSpec::new(&name, &[(a, m - 1), (a, m - 1)]);
    let rhs1_spec = TensorSpec::new(&name, &[(a, m), (a, m - 2)]);
    let nbrs: Vec<(usize, i64)> = c.classical_neighbors(a).into_iter().map(|b| (b, m - 1)).collect();
    let rhs2_spec = TensorSpec::new(&name, &nbrs);
    let lhs = build_view(&lhs_spec, level, View::Demazure, cap)?;
    let rhs1 = build_view(&rhs1_spec, level, View::Demazure, cap)?;
    let rhs2 = build_view(&rhs2_spec, level, View::Demazure, cap)?;
    report.push(Witness::SizeLedger {
        lhs: lhs.len(),
        rhs: vec![rhs1.len(), rhs2.len()],
    });
    if lhs.len() != rhs1.len() + rhs2.len() {
        report.fail(
            format!(
                "size ledger {} != {} + {}",
                lhs.len(),
                rhs1.len(),
                rhs2.len()
            ),
            vec![],
        );
        return Ok(report.timed(start));
    }
    let left = components(&lhs);
    let mut right = components(&rhs1);
    right.extend(components(&rhs2));
    report.push(Witness::ComponentSizes {
        label: "lhs".into(),
        sizes: sizes(&left),
    });
    report.push(Witness::ComponentSizes {
        label: "rhs".into(),
        sizes: sizes(&right),
    });
    match match_components(&left, &right) {
        Ok(pairs) => {
            for p in pairs {
                report.push(Witness::Isomorphism {
                    left: format!("lhs component {}", p.left),
                    right: format!("rhs component {}", p.right),
                    anchor: p.anchor,
                    map: p.map,
                });
            }
        }
        Err(e) => report.fail(e, vec![]),
    }
    Ok(report.timed(start))
}

/// A classical character as a weight multiset.
pub type Character = BTreeMap<ClassicalWeight, i64>;

pub fn character(g: &CrystalGraph) -> Character {
    let mut out = Character::new();
    for w in g.weights() {
        *out.entry(w.clone()).or_default() += 1;
    }
    out
}

pub fn character_product(x: &Character, y: &Character) -> Character {
    let mut out = Character::new();
    for (a, p) in x {
        for (b, q) in y {
            *out.entry(a + b).or_default() += p * q;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn character_sum(x: &Character, y: &Character) -> Character {
    let mut out = x.clone();
    for (w, k) in y {
        *out.entry(w.clone()).or_default() += k;
    }
    out.retain(|_, v| *v != 0);
    out
}

/// The character Q-system `(Q_m^a)^2 = Q_{m+1}^a Q_{m-1}^a + Q_m^{a-1} Q_m^{a+1}` in type `A_n`.
pub fn check_character_qsystem(n: usize, a: usize, m: i64) -> Result<Report> {
    let start = Instant::now();
    if !(1..=n).contains(&a) || m < 1 {
        return Err(Error::Precondition(format!(
            "need 1 <= a <= n and m >= 1; got a = {a}, m = {m}"
        )));
    }
    let c = type_a(n)?;
    let mut report = Report::new(
        "qchar",
        &[("type", c.name()), ("a", a.to_string()), ("m", m.to_string())],
    );
    let one = Character::from([(ClassicalWeight::zero(n), 1)]);
    let q = |b: usize, k: i64| -> Result<Character> {
        if b == 0 || b == n + 1 {
            return Ok(one.clone());
        }
        Ok(character(&kr_factor(&c, b, k, usize::MAX)?))
    };
    let qm = q(a, m)?;
    let lhs = character_product(&qm, &qm);
    let rhs = character_sum(
        &character_product(&q(a, m + 1)?, &q(a, m - 1)?),
        &character_product(&q(a - 1, m)?, &q(a + 1, m)?),
    );
    let total = |x: &Character| x.values().sum::<i64>();
    report.push(Witness::SizeLedger {
        lhs: total(&lhs) as usize,
        rhs: vec![total(&rhs) as usize],
    });
    if lhs != rhs {
        let diff: Vec<String> = lhs
            .keys()
            .chain(rhs.keys())
            .filter(|w| lhs.get(*w) != rhs.get(*w))
            .take(5)
            .map(|w| {
                format!(
                    "{w}: {} vs {}",
                    lhs.get(w).copied().unwrap_or(0),
                    rhs.get(w).copied().unwrap_or(0)
                )
            })
            .collect();
        report.fail("characters differ", diff);
    }
    Ok(report.timed(start))
}

/// The alcove-model crystal `A_l` against `DD~_l` of the column tensor product.
pub fn check_alcove_correspondence(
    cartan: &str,
    lambda: &ClassicalWeight,
    level: usize,
    order: ChainOrder,
    cap: usize,
) -> Result<Report> {
    let start = Instant::now();
    let c = Arc::new(CartanData::parse(cartan)?);
    if c.family() != Family::A {
        return Err(Error::Precondition(format!(
            "the column tensor product side is only available in type A, got {}",
            c.name()
        )));
    }
    if level < 1 {
        return Err(Error::Precondition("level must be >= 1".into()));
    }
    let model = AlcoveModel::for_weight(&c, lambda, order)?;
    let factors: Vec<(usize, i64)> = (1..=c.rank())
        .flat_map(|p| std::iter::repeat_n((p, 1), lambda.0[p - 1].max(0) as usize))
        .collect();
    let spec = TensorSpec::new(&c.name(), &factors);
    let mut report = Report::new(
        "alcove",
        &[
            ("type", c.name()),
            ("lambda", lambda.to_string()),
            ("level", level.to_string()),
            ("chain", format!("{order:?}").to_lowercase()),
        ],
    );
    let alcove = model.crystal(level as i64)?;
    if let Err(e) = alcove.check_seminormal(&c.classical_colors()) {
        report.fail(format!("alcove crystal is not seminormal: {e}"), vec![]);
    }
    if level >= 2 {
        let base = model.crystal(1)?;
        let expected = crate::alcove::level_from_level_one(&base, level);
        let have: std::collections::BTreeSet<_> = alcove.edges().into_iter().collect();
        let want: std::collections::BTreeSet<_> = expected.edges().into_iter().collect();
        report.push(Witness::EdgeAudit {
            label: format!("A_{level} against A_1 without the last {} arrows of each 0-string", level - 1),
            removed: want.difference(&have).count(),
            added: have.difference(&want).count(),
        });
        if have != want {
            let nodes = have
                .symmetric_difference(&want)
                .take(5)
                .map(|&(x, y, i)| format!("{} -{i}-> {}", alcove.repr(x), alcove.repr(y)))
                .collect();
            report.fail("level-l arrows are not the tails of the level-1 strings", nodes);
        }
    }
    let tensor = build_view(&spec, level, View::Dual, cap)?;
    let left = components(&alcove);
    let right = components(&tensor);
    report.push(Witness::ComponentSizes {
        label: "alcove".into(),
        sizes: sizes(&left),
    });
    report.push(Witness::ComponentSizes {
        label: spec.to_string(),
        sizes: sizes(&right),
    });
    match match_components(&left, &right) {
        Ok(pairs) => {
            for p in pairs {
                let map = p
                    .map
                    .iter()
                    .map(|&y| right[p.right].nodes[y])
                    .collect();
                report.push(Witness::Isomorphism {
                    left: format!("alcove component {}", p.left),
                    right: format!("tensor component {}", p.right),
                    anchor: p.anchor,
                    map,
                });
            }
        }
        Err(e) => report.fail(e, vec![]),
    }
    Ok(report.timed(start))
}

/// Rebuilds both graphs of the `C_2` figure and compares them with the transcription.
pub fn check_figure() -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("figure", &[("type", "C2~".into())]);
    let c = Arc::new(CartanData::parse("C2")?);
    let left = fixture_c2(Fixture::Tensor11);
    let right = fixture_c2(Fixture::B12);
    let computed = demazure_filter(
        &kr_tensor(&c, &[(1, 1), (1, 1)], usize::MAX)?,
        1,
        FilterMode::Head,
    );
    let by_repr = |g: &CrystalGraph| -> std::collections::BTreeSet<(String, String, usize)> {
        g.edges()
            .into_iter()
            .map(|(x, y, i)| (g.repr(x).to_string(), g.repr(y).to_string(), i))
            .collect()
    };
    let (drawn, built) = (by_repr(&left), by_repr(&computed));
    if drawn != built {
        let nodes = drawn
            .symmetric_difference(&built)
            .take(5)
            .map(|(x, y, i)| format!("{x} -{i}-> {y}"))
            .collect();
        report.fail("left graph differs from D~_1(B^{1,1} ⊗ B^{1,1})", nodes);
    }
    for (label, g, nodes, edges, zero) in [
        ("left", &left, 16, 15, ("-1 ⊗ 1", "1 ⊗ 1")),
        ("right", &right, 11, 11, ("∅", "[[1,1]]")),
    ] {
        report.push(Witness::ComponentSizes {
            label: format!("{label} edges by color"),
            sizes: g.edge_count_by_color(),
        });
        if g.len() != nodes || g.edge_count() != edges {
            report.fail(
                format!(
                    "{label}: {} nodes and {} edges, expected {nodes} and {edges}",
                    g.len(),
                    g.edge_count()
                ),
                vec![],
            );
        }
        let zeros: Vec<(String, String)> = g
            .edges()
            .into_iter()
            .filter(|e| e.2 == 0)
            .map(|(x, y, _)| (g.repr(x).to_string(), g.repr(y).to_string()))
            .collect();
        if zeros != [(zero.0.to_string(), zero.1.to_string())] {
            report.fail(
                format!("{label}: unexpected 0-arrows"),
                zeros.iter().map(|(x, y)| format!("{x} -0-> {y}")).collect(),
            );
        }
    }
    let comps = components(&left);
    report.push(Witness::ComponentSizes {
        label: "left".into(),
        sizes: sizes(&comps),
    });
    match comps.iter().find(|k| k.nodes.len() == right.len()) {
        Some(k) => match component_iso(&k.graph, &right) {
            Some((anchor, map)) => report.push(Witness::Isomorphism {
                left: "left component of size 11".into(),
                right: "right".into(),
                anchor,
                map,
            }),
            None => report.fail("the 11-node component is not isomorphic to the right graph", vec![]),
        },
        None => report.fail("no component of the left graph has 11 nodes", vec![]),
    }
    Ok(report.timed(start))
}

/// A check request, as accepted by [`run_batch`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum CheckSpec {
    Reduction {
        left: TensorSpec,
        right: TensorSpec,
        level: usize,
        mode: FilterMode,
    },
    Bmin {
        spec: TensorSpec,
        level: usize,
    },
    BminFixture {
        fixture: Fixture,
    },
    Qsystem {
        n: usize,
        a: usize,
        m: i64,
        level: usize,
    },
    Qchar {
        n: usize,
        a: usize,
        m: i64,
    },
    Alcove {
        cartan: String,
        lambda: Vec<i64>,
        level: usize,
        order: ChainOrder,
    },
    Figure,
}

impl CheckSpec {
    pub fn run(&self, cap: usize) -> Result<Report> {
        match self {
            CheckSpec::Reduction { left, right, level, mode } => check_reduction(left, right, *level, *mode, cap),
            CheckSpec::Bmin { spec, level } => check_bmin(spec, *level, cap),
            CheckSpec::BminFixture { fixture } => check_bmin_fixture(*fixture),
            CheckSpec::Qsystem { n, a, m, level } => check_qsystem_type_a(*n, *a, *m, *level, cap),
            CheckSpec::Qchar { n, a, m } => check_character_qsystem(*n, *a, *m),
            CheckSpec::Alcove { cartan, lambda, level, order } => {
                check_alcove_correspondence(cartan, &ClassicalWeight(lambda.clone()), *level, *order, cap)
            }
            CheckSpec::Figure => check_figure(),
        }
    }
}

/// Runs independent checks in parallel; results come back in input order.
pub fn run_batch(specs: &[CheckSpec], cap: usize) -> Vec<Result<Report>> {
    specs.par_iter().map(|s| s.run(cap)).collect()
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(ch),
        }
    }
    out
}

/// JUnit-style XML with one test case per report. Timings are left out so that
/// identical runs produce identical files.
pub fn junit_xml(suite: &str, reports: &[Report]) -> String {
    let failures = reports.iter().filter(|r| !r.passed()).count();
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<testsuite name=\"{}\" tests=\"{}\" failures=\"{failures}\">\n",
        xml_escape(suite),
        reports.len()
    ));
    for r in reports {
        let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!(
            "  <testcase classname=\"{}\" name=\"{}\"",
            xml_escape(&r.name),
            xml_escape(&params.join(" "))
        ));
        if r.passed() {
            out.push_str("/>\n");
        } else {
            let msg: Vec<&str> = r.counterexamples().collect();
            out.push_str(&format!(
                ">\n    <failure message=\"{}\"/>\n  </testcase>\n",
                xml_escape(&msg.join("; "))
            ));
        }
    }
    out.push_str("</testsuite>\n");
    out
}
