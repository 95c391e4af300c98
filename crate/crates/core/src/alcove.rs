//! The quantum alcove model: lambda-chains, foldings, admissible subsets and the
//! level-`l` crystal operators on them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, ClassicalWeight, Color, Root};
use crate::crystal::{CrystalGraph, FilterMode};
use crate::error::{Error, Result};
use crate::weyl::{qbg, EdgeKind, QuantumBruhatGraph, WeylElement};

/// Sort key used to order the pairs `(beta, k)` of a lambda-chain.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainOrder {
    /// `(k, c_1, ..., c_n) / <lambda, beta^vee>` compared lexicographically.
    #[default]
    Lex,
    /// As `Lex` with the coordinates `c_1, ..., c_n` taken in reverse order.
    ReverseLex,
}

/// A lambda-chain `(beta_1, ..., beta_m)` with its heights `l_i` and `l~_i`.
#[derive(Clone, Debug)]
pub struct LambdaChain {
    pub cartan: Arc<CartanData>,
    pub lambda: ClassicalWeight,
    /// Indices into `CartanData::positive_roots`.
    pub roots: Vec<usize>,
    pub l: Vec<i64>,
    pub l_tilde: Vec<i64>,
}

impl LambdaChain {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.cartan.positive_roots()[self.roots[k]]
    }

    /// Root-coordinate vectors of the chain.
    pub fn root_vectors(&self) -> Vec<Vec<i64>> {
        (0..self.len()).map(|k| self.root(k).0.clone()).collect()
    }

    /// Checks the multiplicity invariant and the recorded heights.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let c = &*self.cartan;
        for (idx, beta) in c.positive_roots().iter().enumerate() {
            let count = self.roots.iter().filter(|&&r| r == idx).count() as i64;
            let expected = c.pairing(beta, &self.lambda);
            if count != expected {
                return Err(format!("{beta} occurs {count} times, expected {expected}"));
            }
        }
        for k in 0..self.len() {
            let before = self.roots[..k].iter().filter(|&&r| r == self.roots[k]).count() as i64;
            let total = c.pairing(self.root(k), &self.lambda);
            if self.l[k] != before || self.l_tilde[k] != total - before {
                return Err(format!("wrong heights at position {}", k + 1));
            }
        }
        Ok(())
    }

    /// Verifies that the chain is a reduced alcove path from the fundamental alcove
    /// to `A_{-lambda}` by walking a generic interior point through the reflections.
    pub fn check_alcove_walk(&self) -> std::result::Result<(), String> {
        let c = &*self.cartan;
        let roots = c.positive_roots();
        let h = roots.iter().map(|b| c.pairing(b, &c.rho())).max().unwrap_or(0) + 1;
        // Points are stored scaled by `h`; the start point is `rho / h`.
        let mut q = c.rho();
        let floor_pairs = |x: &ClassicalWeight| -> Vec<i64> {
            roots.iter().map(|b| c.pairing(b, x).div_euclid(h)).collect()
        };
        let mut prev_floors = floor_pairs(&q);
        for k in 0..self.len() {
            let beta = self.root(k);
            let level = -self.l[k];
            let before = c.pairing(beta, &q);
            // s_{beta, level}(x) = x - (<x, beta^vee> - level) beta, scaled by h.
            let shift = before - level * h;
            q = &q - &(&c.root_to_weight(beta) * shift);
            let after = c.pairing(beta, &q);
            if !(before > level * h && after < level * h) {
                return Err(format!(
                    "step {} does not cross H_({beta}, {level}) in direction -beta",
                    k + 1
                ));
            }
            let floors = floor_pairs(&q);
            let crossed: i64 = floors
                .iter()
                .zip(&prev_floors)
                .map(|(a, b)| (a - b).abs())
                .sum();
            if crossed != 1 {
                return Err(format!("step {} crosses {crossed} hyperplanes", k + 1));
            }
            prev_floors = floors;
        }
        let end = &q + &(&self.lambda * h);
        let inside = roots.iter().all(|b| (1..h).contains(&c.pairing(b, &end)));
        if !inside {
            return Err("walk does not end in A_{-lambda}".into());
        }
        let expected: i64 = roots.iter().map(|b| c.pairing(b, &self.lambda)).sum();
        if self.len() as i64 != expected {
            return Err(format!("path has length {} but {expected} walls separate the ends", self.len()));
        }
        Ok(())
    }
}

/// The lexicographic lambda-chain. Coordinates in the sort key are those of the
/// coroot `beta^vee`, which makes the order agree with the order in which a
/// straight line from the fundamental alcove crosses the walls.
pub fn build_lambda_chain(
    cartan: &Arc<CartanData>,
    lambda: &ClassicalWeight,
    order: ChainOrder,
) -> Result<LambdaChain> {
    if lambda.rank() != cartan.rank() {
        return Err(Error::Invalid(format!("weight {lambda} has the wrong rank")));
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let c = &**cartan;
    let mut keyed: Vec<(Vec<Ratio<i64>>, usize, i64)> = Vec::new();
    for (idx, beta) in c.positive_roots().iter().enumerate() {
        let total = c.pairing(beta, lambda);
        let mut coords = c.coroot_coords(beta);
        if order == ChainOrder::ReverseLex {
            coords.reverse();
        }
        for k in 0..total {
            let mut key = vec![Ratio::new(k, total)];
            key.extend(coords.iter().map(|&x| Ratio::new(x, total)));
            keyed.push((key, idx, k));
        }
    }
    keyed.sort();
    for w in keyed.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::Invalid("lambda-chain sort key is not injective".into()));
        }
    }
    let roots: Vec<usize> = keyed.iter().map(|x| x.1).collect();
    let l: Vec<i64> = keyed.iter().map(|x| x.2).collect();
    let l_tilde = keyed
        .iter()
        .map(|(_, idx, k)| c.pairing(&c.positive_roots()[*idx], lambda) - k)
        .collect();
    let chain = LambdaChain {
        cartan: Arc::clone(cartan),
        lambda: lambda.clone(),
        roots,
        l,
        l_tilde,
    };
    chain.check_invariants().map_err(Error::Invalid)?;
    chain.check_alcove_walk().map_err(Error::Invalid)?;
    Ok(chain)
}

/// The folded chain `Gamma(J)` and its weight.
#[derive(Clone, Debug)]
pub struct Folding {
    pub gamma: Vec<Root>,
    pub levels: Vec<i64>,
    /// `gamma_inf = r_{j_1} ... r_{j_s}(rho)`.
    pub gamma_inf: ClassicalWeight,
    pub weight: ClassicalWeight,
    /// `phi(J) = r_{j_1} ... r_{j_s}`.
    pub direction: WeylElement,
}

/// Folds `Gamma` at the (0-based, sorted) positions of `j`.
pub fn fold(chain: &LambdaChain, j: &[usize]) -> Folding {
    let c = &*chain.cartan;
    let mut w = WeylElement::identity(c);
    let mut t = ClassicalWeight::zero(c.rank());
    let mut gamma = Vec::with_capacity(chain.len());
    let mut levels = Vec::with_capacity(chain.len());
    let mut next = j.iter().peekable();
    for k in 0..chain.len() {
        let beta = chain.root(k);
        let g = w.act_root(beta);
        // The affine map r^_{j_1} ... r^_{j_p} is x -> w x + t; it sends the wall
        // H_{beta_k, -l_k} to H_{|gamma_k|, -l_k^J}.
        let lj = g.sign() * (chain.l[k] - c.pairing(&g, &t));
        gamma.push(g);
        levels.push(lj);
        if next.peek() == Some(&&k) {
            next.next();
            let shift = w.act_weight(&(&c.root_to_weight(beta) * (-chain.l[k])));
            t = &t + &shift;
            w = w.mul(c, &WeylElement::reflection(c, beta));
        }
    }
    let weight = &w.act_weight(&chain.lambda) - &t;
    Folding {
        gamma,
        levels,
        gamma_inf: w.act_weight(&c.rho()),
        weight,
        direction: w,
    }
}

/// A position of `I^_alpha`: a chain position or `infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pos {
    At(usize),
    Infinity,
}

/// The piecewise-linear graph `g_alpha` of a folding, evaluated exactly.
#[derive(Clone, Debug)]
pub struct GGraph {
    pub alpha: Root,
    /// `I^_alpha` in increasing order, ending with `Infinity`.
    pub positions: Vec<Pos>,
    /// Slopes of the `2n + 1` linear pieces.
    pub slopes: Vec<i64>,
    /// `g_alpha(k - 1/2)` for `k = 1..=n+1`.
    pub heights: Vec<i64>,
    /// Maximum over the points `k - 1/2`.
    pub max: i64,
    /// Twice the maximum of `g_alpha` over the whole interval `[0, n + 1/2]`.
    pub continuous_max_doubled: i64,
    /// `l_alpha^infinity = <wt(J), sgn(alpha) alpha^vee>`.
    pub l_inf: i64,
}

/// Builds `g_{alpha_p}`; `p = 0` uses `alpha_0 = -theta` and reflects `g_theta`.
pub fn g_graph(chain: &LambdaChain, folding: &Folding, j: &[usize], p: Color) -> GGraph {
    let c = &*chain.cartan;
    let (alpha, sign) = if p == 0 {
        (-c.theta().clone(), -1)
    } else {
        (Root::simple(c.rank(), p), 1)
    };
    let pos_alpha = alpha.abs();
    let idx: Vec<usize> = (0..chain.len())
        .filter(|&k| folding.gamma[k].abs() == pos_alpha)
        .collect();
    let mut doubled = -1i64;
    let mut slopes = Vec::with_capacity(2 * idx.len() + 1);
    let mut points = vec![doubled];
    let mut heights = Vec::with_capacity(idx.len() + 1);
    for &k in &idx {
        let s = folding.gamma[k].sign();
        let eps = if j.binary_search(&k).is_ok() { -1 } else { 1 };
        doubled += s;
        slopes.push(s);
        points.push(doubled);
        heights.push(doubled / 2);
        doubled += eps * s;
        slopes.push(eps * s);
        points.push(doubled);
    }
    let last = c.pairing(&pos_alpha, &folding.gamma_inf).signum();
    doubled += last;
    slopes.push(last);
    points.push(doubled);
    heights.push(doubled / 2);
    if sign < 0 {
        for h in &mut heights {
            *h = -*h;
        }
        for x in &mut points {
            *x = -*x;
        }
        for s in &mut slopes {
            *s = -*s;
        }
    }
    let mut positions: Vec<Pos> = idx.iter().map(|&k| Pos::At(k)).collect();
    positions.push(Pos::Infinity);
    GGraph {
        alpha,
        positions,
        slopes,
        max: *heights.iter().max().expect("at least the point at infinity"),
        continuous_max_doubled: *points.iter().max().expect("nonempty"),
        heights,
        l_inf: c.pairing(&pos_alpha, &folding.weight),
    }
}

/// Admissible subsets, as sorted 0-based positions.
pub type Subset = Vec<usize>;

fn toggle(j: &[usize], remove: Pos, add: Pos) -> Subset {
    let mut out: Subset = j
        .iter()
        .copied()
        .filter(|&x| Pos::At(x) != remove)
        .collect();
    if let Pos::At(x) = add {
        out.push(x);
    }
    out.sort_unstable();
    out
}

/// The quantum alcove model for a fixed lambda-chain.
#[derive(Debug)]
pub struct AlcoveModel {
    pub chain: LambdaChain,
    qbg: Arc<QuantumBruhatGraph>,
    subsets: Vec<Subset>,
    index: HashMap<Subset, usize>,
}

impl AlcoveModel {
    pub fn new(chain: LambdaChain) -> Result<Self> {
        let qbg = qbg(&chain.cartan)?;
        let subsets = enumerate_admissible(&chain, &qbg);
        let index = subsets.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect();
        Ok(Self {
            chain,
            qbg,
            subsets,
            index,
        })
    }

    pub fn for_weight(cartan: &Arc<CartanData>, lambda: &ClassicalWeight, order: ChainOrder) -> Result<Self> {
        Self::new(build_lambda_chain(cartan, lambda, order)?)
    }

    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.chain.cartan
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn is_admissible(&self, j: &[usize]) -> bool {
        admissible_walk(&self.chain, &self.qbg, j).is_some()
    }

    pub fn position(&self, j: &[usize]) -> Option<usize> {
        self.index.get(j).copied()
    }

    /// `f_p` on `A_l(Gamma)`.
    pub fn f(&self, j: &[usize], p: Color, level: i64) -> Option<Subset> {
        let folding = fold(&self.chain, j);
        let g = g_graph(&self.chain, &folding, j, p);
        let threshold = if p == 0 { level } else { 0 };
        if g.max <= threshold {
            return None;
        }
        let at = g
            .heights
            .iter()
            .position(|&h| h == g.max)
            .expect("maximum is attained");
        let m = g.positions[at];
        assert!(
            matches!(m, Pos::Infinity) || matches!(m, Pos::At(x) if j.contains(&x)),
            "f_{p}({j:?}): m = {m:?} is neither in J nor infinity"
        );
        assert!(at > 0, "f_{p}({j:?}): m has no predecessor");
        let k = g.positions[at - 1];
        let Pos::At(kx) = k else { unreachable!() };
        assert!(!j.contains(&kx), "f_{p}({j:?}): predecessor {kx} lies in J");
        let out = toggle(j, m, k);
        assert!(self.is_admissible(&out), "f_{p}({j:?}) = {out:?} is not admissible");
        Some(out)
    }

    /// `e_p` on `A_l(Gamma)`.
    pub fn e(&self, j: &[usize], p: Color, level: i64) -> Option<Subset> {
        let folding = fold(&self.chain, j);
        let g = g_graph(&self.chain, &folding, j, p);
        let threshold = if p == 0 { level } else { 0 };
        let pairing = self.cartan().color_pairing(p, &folding.weight);
        if !(g.max > pairing && g.max >= threshold) {
            return None;
        }
        let n = g.positions.len() - 1;
        let at = (0..n)
            .rev()
            .find(|&a| g.heights[a] == g.max)
            .expect("maximum above the final height is attained at a finite position");
        let Pos::At(kx) = g.positions[at] else { unreachable!() };
        assert!(j.contains(&kx), "e_{p}({j:?}): k = {kx} is not in J");
        let m = g.positions[at + 1];
        assert!(
            matches!(m, Pos::Infinity) || matches!(m, Pos::At(x) if !j.contains(&x)),
            "e_{p}({j:?}): successor {m:?} lies in J"
        );
        let out = toggle(j, Pos::At(kx), m);
        assert!(self.is_admissible(&out), "e_{p}({j:?}) = {out:?} is not admissible");
        Some(out)
    }

    /// `phi_0(J) = max(M - 1, 0)` with `M` the maximum of `g_{alpha_0}`.
    pub fn phi0(&self, j: &[usize]) -> i64 {
        let folding = fold(&self.chain, j);
        (g_graph(&self.chain, &folding, j, 0).max - 1).max(0)
    }

    pub fn weight(&self, j: &[usize]) -> ClassicalWeight {
        fold(&self.chain, j).weight
    }

    /// The crystal `A_l(Gamma)` on all admissible subsets, in enumeration order.
    pub fn crystal(&self, level: i64) -> Result<CrystalGraph> {
        if level < 1 {
            return Err(Error::Precondition(format!("level must be >= 1, got {level}")));
        }
        let c = self.cartan();
        let mut edges = Vec::new();
        for (k, j) in self.subsets.iter().enumerate() {
            for p in 0..=c.rank() {
                if let Some(out) = self.f(j, p, level) {
                    let d = self.position(&out).expect("outputs are admissible");
                    edges.push((k, d, p));
                }
            }
        }
        CrystalGraph::from_edges(
            Arc::clone(c),
            c.colors(),
            self.subsets.iter().map(|j| subset_repr(j)).collect(),
            self.subsets.iter().map(|j| self.weight(j)).collect(),
            &edges,
        )
    }
}

/// Serialized form of an alcove model: the chain as root-coordinate vectors,
/// subsets as sorted 1-based positions, and the level-`l` arrows between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlcoveJson {
    pub cartan: String,
    pub lambda: Vec<i64>,
    pub level: i64,
    pub chain: Vec<Vec<i64>>,
    pub l: Vec<i64>,
    pub subsets: Vec<AlcoveJsonSubset>,
    pub edges: Vec<crate::crystal::JsonEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlcoveJsonSubset {
    pub id: usize,
    pub positions: Vec<usize>,
    pub wt: Vec<i64>,
}

impl AlcoveModel {
    pub fn to_json_value(&self, level: i64) -> Result<AlcoveJson> {
        let g = self.crystal(level)?;
        Ok(AlcoveJson {
            cartan: self.cartan().name(),
            lambda: self.chain.lambda.0.clone(),
            level,
            chain: self.chain.root_vectors(),
            l: self.chain.l.clone(),
            subsets: self
                .subsets
                .iter()
                .enumerate()
                .map(|(id, j)| AlcoveJsonSubset {
                    id,
                    positions: j.iter().map(|x| x + 1).collect(),
                    wt: g.weight(id).0.clone(),
                })
                .collect(),
            edges: g
                .edges()
                .into_iter()
                .map(|(src, dst, color)| crate::crystal::JsonEdge { src, dst, color })
                .collect(),
        })
    }

    pub fn to_json(&self, level: i64) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_json_value(level)?).expect("serializable") + "\n")
    }
}

impl std::str::FromStr for ChainOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(ChainOrder::Lex),
            "reverse-lex" => Ok(ChainOrder::ReverseLex),
            _ => Err(Error::Invalid(format!("unknown chain order {s:?} (expected lex or reverse-lex)"))),
        }
    }
}

/// `A_l` obtained from `A_1` by dropping the last `l - 1` arrows of every 0-string.
pub fn level_from_level_one(a1: &CrystalGraph, level: usize) -> CrystalGraph {
    crate::crystal::demazure_filter(a1, level - 1, FilterMode::Tail)
}

/// 1-based rendering such as `{1,3}`; the empty subset is `∅`.
pub fn subset_repr(j: &[usize]) -> String {
    if j.is_empty() {
        return "∅".into();
    }
    let parts: Vec<String> = j.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// QBG vertices visited by the walk of `J`, or `None` if some step is not an edge.
pub fn admissible_walk(chain: &LambdaChain, g: &QuantumBruhatGraph, j: &[usize]) -> Option<Vec<(usize, EdgeKind)>> {
    let mut w = g.group.identity_index();
    let mut out = Vec::with_capacity(j.len());
    let mut last = None;
    for &k in j {
        if k >= chain.len() || last.is_some_and(|l| k <= l) {
            return None;
        }
        let (next, kind) = g.step(w, chain.roots[k])?;
        out.push((next, kind));
        w = next;
        last = Some(k);
    }
    Some(out)
}

/// All admissible subsets in depth-first order with positions ascending.
pub fn enumerate_admissible(chain: &LambdaChain, g: &QuantumBruhatGraph) -> Vec<Subset> {
    fn go(chain: &LambdaChain, g: &QuantumBruhatGraph, w: usize, from: usize, cur: &mut Subset, out: &mut Vec<Subset>) {
        out.push(cur.clone());
        for k in from..chain.len() {
            if let Some((next, _)) = g.step(w, chain.roots[k]) {
                cur.push(k);
                go(chain, g, next, k + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(chain, g, g.group.identity_index(), 0, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for LambdaChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.len()).map(|k| self.root(k).to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
