//! Finite Weyl group arithmetic, Bruhat order, the quantum Bruhat graph and
//! level-`l` dominantization under the affine Weyl group.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use crate::cartan::{CartanData, ClassicalWeight, Color, Family, Root};
use crate::error::{Error, Result};

/// Default cap on `|W_0|` during enumeration.
pub const DEFAULT_WEYL_CAP: usize = 100_000;

/// An element of the finite Weyl group, stored as its matrices on the
/// fundamental-weight basis and on the simple-root basis.
#[derive(Clone, Debug)]
pub struct WeylElement {
    n: usize,
    /// Row-major: entry `(i, j)` is coordinate `i` of `w(varpi_j)`.
    weight_matrix: Vec<i64>,
    /// Row-major: entry `(i, j)` is coordinate `i` of `w(alpha_j)`.
    root_matrix: Vec<i64>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.weight_matrix == other.weight_matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.weight_matrix.hash(state);
    }
}

fn matmul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    out[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    out
}

fn apply(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
        .collect()
}

impl WeylElement {
    fn from_matrices(c: &CartanData, weight_matrix: Vec<i64>, root_matrix: Vec<i64>) -> Self {
        let n = c.rank();
        let length = c
            .positive_roots()
            .iter()
            .filter(|b| Root(apply(n, &root_matrix, &b.0)).is_negative())
            .count();
        Self {
            n,
            weight_matrix,
            root_matrix,
            length,
        }
    }

    pub fn identity(c: &CartanData) -> Self {
        let n = c.rank();
        let mut id = vec![0; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        Self {
            n,
            weight_matrix: id.clone(),
            root_matrix: id,
            length: 0,
        }
    }

    /// The simple reflection `s_i`, `i` a classical color.
    pub fn simple(c: &CartanData, i: usize) -> Self {
        Self::reflection(c, &Root::simple(c.rank(), i))
    }

    /// The reflection `s_beta` for a root `beta`.
    pub fn reflection(c: &CartanData, beta: &Root) -> Self {
        let n = c.rank();
        let beta = &beta.abs();
        let coroot = c.coroot_coords(beta);
        let beta_wt = c.root_to_weight(beta);
        let mut wm = vec![0; n * n];
        let mut rm = vec![0; n * n];
        for j in 0..n {
            // s_beta(varpi_j) = varpi_j - <beta^vee, varpi_j> beta
            for i in 0..n {
                wm[i * n + j] = i64::from(i == j) - coroot[j] * beta_wt.0[i];
            }
            // s_beta(alpha_j) = alpha_j - <beta^vee, alpha_j> beta
            let p: i64 = (0..n).map(|k| coroot[k] * c.cartan_entry(k + 1, j + 1)).sum();
            for i in 0..n {
                rm[i * n + j] = i64::from(i == j) - p * beta.0[i];
            }
        }
        Self::from_matrices(c, wm, rm)
    }

    /// Product of simple reflections `s_{i_1} s_{i_2} ...`.
    pub fn from_word(c: &CartanData, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(c), |w, &i| {
            w.mul(c, &Self::simple(c, i))
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// `self * other`.
    pub fn mul(&self, c: &CartanData, other: &Self) -> Self {
        let n = self.n;
        Self::from_matrices(
            c,
            matmul(n, &self.weight_matrix, &other.weight_matrix),
            matmul(n, &self.root_matrix, &other.root_matrix),
        )
    }

    pub fn inverse(&self, c: &CartanData) -> Self {
        let word: Vec<usize> = self.reduced_word(c).into_iter().rev().collect();
        Self::from_word(c, &word)
    }

    pub fn act_weight(&self, mu: &ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight(apply(self.n, &self.weight_matrix, &mu.0))
    }

    pub fn act_root(&self, beta: &Root) -> Root {
        Root(apply(self.n, &self.root_matrix, &beta.0))
    }

    /// Whether `s_i` is a right descent, i.e. `w(alpha_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.n;
        (0..n).all(|r| self.root_matrix[r * n + i - 1] <= 0)
    }

    /// A reduced word, recovered by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self, c: &CartanData) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length);
        while !w.is_identity() {
            let i = (1..=self.n)
                .find(|&i| w.has_right_descent(i))
                .expect("nonidentity element has a descent");
            w = w.mul(c, &Self::simple(c, i));
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// Canonical key: the weight matrix.
    pub fn key(&self) -> &[i64] {
        &self.weight_matrix
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.weight_matrix)
    }
}

/// Whether the word is reduced (its product has length equal to the word length).
pub fn is_reduced(c: &CartanData, word: &[usize]) -> bool {
    word.iter().all(|&i| (1..=c.rank()).contains(&i))
        && WeylElement::from_word(c, word).length() == word.len()
}

/// Strong Bruhat order `v <= w`, via the lifting property along right descents.
pub fn bruhat_leq(c: &CartanData, v: &WeylElement, w: &WeylElement) -> bool {
    if v.length() > w.length() {
        return false;
    }
    if w.is_identity() {
        return v.is_identity();
    }
    let i = (1..=c.rank())
        .find(|&i| w.has_right_descent(i))
        .expect("nonidentity element has a descent");
    let s = WeylElement::simple(c, i);
    let ws = w.mul(c, &s);
    if v.has_right_descent(i) {
        bruhat_leq(c, &v.mul(c, &s), &ws)
    } else {
        bruhat_leq(c, v, &ws)
    }
}

/// The finite Weyl group, enumerated and sorted by `(length, w(rho))`.
#[derive(Debug)]
pub struct WeylGroup {
    pub cartan: Arc<CartanData>,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
}

impl WeylGroup {
    pub fn enumerate(cartan: Arc<CartanData>, cap: usize) -> Result<Self> {
        let c = &*cartan;
        let simples: Vec<WeylElement> = (1..=c.rank()).map(|i| WeylElement::simple(c, i)).collect();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut elements = vec![WeylElement::identity(c)];
        seen.insert(elements[0].weight_matrix.clone());
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for s in &simples {
                let next = elements[k].mul(c, s);
                if !seen.contains(&next.weight_matrix) {
                    if elements.len() >= cap {
                        return Err(Error::ResourceCap {
                            what: "Weyl group order",
                            cap,
                        });
                    }
                    seen.insert(next.weight_matrix.clone());
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        let rho = c.rho();
        elements.sort_by_cached_key(|w| (w.length(), w.act_weight(&rho).0));
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.weight_matrix.clone(), k))
            .collect();
        Ok(Self {
            cartan,
            elements,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn get(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[&w.weight_matrix]
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    /// The longest element.
    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("group is nonempty")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Bruhat cover: `l(w s_beta) = l(w) + 1`.
    Up,
    /// Quantum edge: `l(w s_beta) = l(w) - 2<rho, beta^vee> + 1`.
    Down,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QbgEdge {
    pub src: usize,
    /// Index of `beta` in `CartanData::positive_roots`.
    pub root: usize,
    pub dst: usize,
    pub kind: EdgeKind,
}

/// The quantum Bruhat graph on `W_0`; vertices are indices into the group.
#[derive(Debug)]
pub struct QuantumBruhatGraph {
    pub group: WeylGroup,
    /// Outgoing edges per vertex, ordered by the lexicographic order of root coordinates.
    out: Vec<Vec<QbgEdge>>,
    /// `table[w][beta]` is the target and kind of the edge `w -> w s_beta`, if any.
    table: Vec<Vec<Option<(usize, EdgeKind)>>>,
}

/// `<rho, beta^vee>`, the height of the coroot.
pub fn rho_coroot(c: &CartanData, beta: &Root) -> i64 {
    c.pairing(beta, &c.rho())
}

pub fn build_qbg(cartan: Arc<CartanData>, cap: usize) -> Result<QuantumBruhatGraph> {
    let group = WeylGroup::enumerate(cartan, cap)?;
    let c = &*group.cartan;
    let roots = c.positive_roots();
    let refl: Vec<WeylElement> = roots.iter().map(|b| WeylElement::reflection(c, b)).collect();
    let heights: Vec<i64> = roots.iter().map(|b| rho_coroot(c, b)).collect();
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&a, &b| roots[a].cmp(&roots[b]));
    let mut out = Vec::with_capacity(group.len());
    let mut table = Vec::with_capacity(group.len());
    for (k, w) in group.elements().iter().enumerate() {
        let mut row = vec![None; roots.len()];
        let mut edges = Vec::new();
        for &r in &order {
            let ws = w.mul(c, &refl[r]);
            let lw = w.length() as i64;
            let lws = ws.length() as i64;
            let kind = if lws == lw + 1 {
                Some(EdgeKind::Up)
            } else if lws == lw - 2 * heights[r] + 1 {
                Some(EdgeKind::Down)
            } else {
                None
            };
            if let Some(kind) = kind {
                let dst = group.index_of(&ws);
                row[r] = Some((dst, kind));
                edges.push(QbgEdge {
                    src: k,
                    root: r,
                    dst,
                    kind,
                });
            }
        }
        out.push(edges);
        table.push(row);
    }
    Ok(QuantumBruhatGraph { group, out, table })
}

impl QuantumBruhatGraph {
    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.group.cartan
    }

    pub fn vertex_count(&self) -> usize {
        self.group.len()
    }

    pub fn out_edges(&self, w: usize) -> &[QbgEdge] {
        &self.out[w]
    }

    /// All edges, by source vertex (group order, i.e. by length) then root.
    pub fn edges(&self) -> impl Iterator<Item = &QbgEdge> {
        self.out.iter().flatten()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// The edge `w -> w s_beta` for a positive root index, if present.
    pub fn step(&self, w: usize, root: usize) -> Option<(usize, EdgeKind)> {
        self.table[w][root]
    }

    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertex_count();
        let reach = |forward: bool| {
            let mut adj = vec![Vec::new(); n];
            for e in self.edges() {
                if forward {
                    adj[e.src].push(e.dst);
                } else {
                    adj[e.dst].push(e.src);
                }
            }
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut stack = vec![0];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            seen.into_iter().all(|b| b)
        };
        reach(true) && reach(false)
    }

    /// DOT rendering: vertices labelled by reduced words, edges by root coordinates,
    /// down edges dashed.
    pub fn to_dot(&self) -> String {
        let c = self.cartan();
        let mut s = String::from("digraph qbg {\n");
        for (k, w) in self.group.elements().iter().enumerate() {
            let word: Vec<String> = w.reduced_word(c).iter().map(|i| i.to_string()).collect();
            let label = if word.is_empty() {
                "1".to_string()
            } else {
                format!("s{}", word.join(""))
            };
            s.push_str(&format!("  {k} [label=\"{label}\"];\n"));
        }
        for e in self.edges() {
            let style = match e.kind {
                EdgeKind::Up => "",
                EdgeKind::Down => ", style=dashed",
            };
            s.push_str(&format!(
                "  {} -> {} [label=\"{}\"{}];\n",
                e.src,
                e.dst,
                c.positive_roots()[e.root],
                style
            ));
        }
        s.push_str("}\n");
        s
    }
}

static QBG_CACHE: OnceLock<Mutex<HashMap<(Family, usize), Arc<QuantumBruhatGraph>>>> =
    OnceLock::new();

/// The memoized quantum Bruhat graph for the type of `cartan`, built with the default cap.
pub fn qbg(cartan: &Arc<CartanData>) -> Result<Arc<QuantumBruhatGraph>> {
    let key = (cartan.family(), cartan.rank());
    let cache = QBG_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().expect("qbg cache poisoned").get(&key) {
        return Ok(Arc::clone(g));
    }
    let g = Arc::new(build_qbg(Arc::clone(cartan), DEFAULT_WEYL_CAP)?);
    cache
        .lock()
        .expect("qbg cache poisoned")
        .entry(key)
        .or_insert_with(|| Arc::clone(&g));
    Ok(g)
}

/// Result of moving a level-`l` weight into the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dominantized {
    /// Classical part of the dominant weight `Lambda`.
    pub weight: ClassicalWeight,
    pub level: i64,
    /// Reduced word `i_1 ... i_k` of the minimal `w` with `w(Lambda) = mu + l Lambda_0`.
    pub word: Vec<Color>,
}

impl Dominantized {
    /// Coefficient of `Lambda_0`, i.e. `l - <theta^vee, Lambda>`.
    pub fn lambda0_coefficient(&self, c: &CartanData) -> i64 {
        self.level - c.pairing(c.theta(), &self.weight)
    }
}

/// `s_i` acting on the classical part of a level-`l` weight.
pub fn level_reflect(c: &CartanData, i: Color, mu: &ClassicalWeight, level: i64) -> ClassicalWeight {
    if i == 0 {
        let k = level - c.pairing(c.theta(), mu);
        mu + &(&c.root_to_weight(c.theta()) * k)
    } else {
        c.simple_reflect_weight(i, mu)
    }
}

/// `<alpha_i^vee, mu + l Lambda_0>`.
pub fn level_pairing(c: &CartanData, i: Color, mu: &ClassicalWeight, level: i64) -> i64 {
    if i == 0 {
        level - c.pairing(c.theta(), mu)
    } else {
        mu.0[i - 1]
    }
}

/// Applies `w = s_{i_1} ... s_{i_k}` to a level-`l` weight.
pub fn apply_level_word(
    c: &CartanData,
    word: &[Color],
    mu: &ClassicalWeight,
    level: i64,
) -> ClassicalWeight {
    word.iter()
        .rev()
        .fold(mu.clone(), |acc, &i| level_reflect(c, i, &acc, level))
}

/// Greedy ascent to the dominant chamber of the level-`l` affine action.
pub fn dominantize(c: &CartanData, mu: &ClassicalWeight, level: i64) -> Result<Dominantized> {
    if level < 1 {
        return Err(Error::Precondition(format!(
            "dominantize needs level >= 1, got {level}"
        )));
    }
    let mut cur = mu.clone();
    let mut word = Vec::new();
    while let Some(i) = (0..=c.rank()).find(|&i| level_pairing(c, i, &cur, level) < 0) {
        cur = level_reflect(c, i, &cur, level);
        word.push(i);
    }
    Ok(Dominantized {
        weight: cur,
        level,
        word,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;

    fn cd(f: Family, n: usize) -> Arc<CartanData> {
        Arc::new(build_cartan(f, n).unwrap())
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn group_orders() {
        for n in 1..=4 {
            let g = WeylGroup::enumerate(cd(Family::A, n), DEFAULT_WEYL_CAP).unwrap();
            assert_eq!(g.len(), factorial(n + 1));
        }
        for n in 2..=4 {
            for f in [Family::B, Family::C] {
                let g = WeylGroup::enumerate(cd(f, n), DEFAULT_WEYL_CAP).unwrap();
                assert_eq!(g.len(), (1 << n) * factorial(n));
            }
        }
        let g = WeylGroup::enumerate(cd(Family::D, 4), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(g.len(), 8 * 24);
    }

    #[test]
    fn cap_is_enforced() {
        let err = WeylGroup::enumerate(cd(Family::A, 3), 10).unwrap_err();
        assert!(matches!(err, Error::ResourceCap { cap: 10, .. }));
    }

    #[test]
    fn longest_element_negates_positive_roots() {
        for (f, n) in [(Family::A, 3), (Family::C, 3), (Family::B, 3), (Family::D, 4)] {
            let c = cd(f, n);
            let g = WeylGroup::enumerate(c.clone(), DEFAULT_WEYL_CAP).unwrap();
            let w0 = g.longest();
            assert_eq!(w0.length(), c.positive_roots().len());
            let images: HashSet<Root> = c
                .positive_roots()
                .iter()
                .map(|b| -w0.act_root(b))
                .collect();
            let pos: HashSet<Root> = c.positive_roots().iter().cloned().collect();
            assert_eq!(images, pos);
        }
    }

    #[test]
    fn reflection_examples() {
        let c = cd(Family::A, 2);
        let s1 = WeylElement::simple(&c, 1);
        let w1 = ClassicalWeight::fundamental(2, 1);
        assert_eq!(s1.act_weight(&w1), &w1 - &c.simple_root_weight(1));
        let st = WeylElement::reflection(&c, c.theta());
        assert_eq!(st.length(), 3);
        assert!(st.mul(&c, &st).is_identity());
        assert_eq!(st.act_root(c.theta()), -c.theta().clone());
    }

    #[test]
    fn reflections_are_involutions_everywhere() {
        for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let c = cd(f, n);
            for b in c.positive_roots() {
                let s = WeylElement::reflection(&c, b);
                assert!(s.mul(&c, &s).is_identity());
                assert_eq!(s.act_root(b), -b.clone());
                assert_eq!(s.length() % 2, 1);
            }
        }
    }

    #[test]
    fn reduced_words_round_trip() {
        let c = cd(Family::C, 3);
        let g = WeylGroup::enumerate(c.clone(), DEFAULT_WEYL_CAP).unwrap();
        for w in g.elements() {
            let word = w.reduced_word(&c);
            assert_eq!(word.len(), w.length());
            assert_eq!(&WeylElement::from_word(&c, &word), w);
            assert!(w.mul(&c, &w.inverse(&c)).is_identity());
        }
    }

    fn subword_leq(c: &CartanData, v: &WeylElement, w: &WeylElement) -> bool {
        let word = w.reduced_word(c);
        (0u32..(1 << word.len())).any(|mask| {
            let sub: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            &WeylElement::from_word(c, &sub) == v
        })
    }

    #[test]
    fn bruhat_matches_subword_criterion() {
        for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::A, 3)] {
            let c = cd(f, n);
            let g = WeylGroup::enumerate(c.clone(), DEFAULT_WEYL_CAP).unwrap();
            for v in g.elements() {
                for w in g.elements() {
                    assert_eq!(bruhat_leq(&c, v, w), subword_leq(&c, v, w));
                }
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let c = cd(Family::A, 2);
        let g = WeylGroup::enumerate(c.clone(), DEFAULT_WEYL_CAP).unwrap();
        let id = WeylElement::identity(&c);
        let w0 = g.longest().clone();
        for w in g.elements() {
            assert!(bruhat_leq(&c, &id, w));
            assert_eq!(bruhat_leq(&c, &w0, w), *w == w0);
        }
        let s1 = WeylElement::simple(&c, 1);
        let s2s1 = WeylElement::from_word(&c, &[2, 1]);
        assert!(bruhat_leq(&c, &s1, &s2s1));
    }

    #[test]
    fn qbg_a1() {
        let g = build_qbg(cd(Family::A, 1), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(g.vertex_count(), 2);
        let edges: Vec<_> = g.edges().cloned().collect();
        assert_eq!(edges.len(), 2);
        assert_eq!((edges[0].src, edges[0].dst, edges[0].kind), (0, 1, EdgeKind::Up));
        assert_eq!((edges[1].src, edges[1].dst, edges[1].kind), (1, 0, EdgeKind::Down));
    }

    /// Independent type-A oracle: permutations of `1..=n+1`, transpositions
    /// `(i j)` with `<rho, beta^vee> = j - i`, lengths by inversion count.
    fn perm_qbg(n: usize) -> (usize, usize) {
        fn perms(v: Vec<usize>) -> Vec<Vec<usize>> {
            if v.len() <= 1 {
                return vec![v];
            }
            let mut out = vec![];
            for k in 0..v.len() {
                let mut rest = v.clone();
                let x = rest.remove(k);
                for mut p in perms(rest) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        let inv = |p: &[usize]| {
            (0..p.len())
                .flat_map(|a| (a + 1..p.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| p[a] > p[b])
                .count() as i64
        };
        let (mut up, mut down) = (0, 0);
        for p in perms((0..=n).collect()) {
            for i in 0..=n {
                for j in i + 1..=n {
                    let mut q = p.clone();
                    q.swap(i, j);
                    let (lp, lq) = (inv(&p), inv(&q));
                    if lq == lp + 1 {
                        up += 1;
                    } else if lq == lp - 2 * (j - i) as i64 + 1 {
                        down += 1;
                    }
                }
            }
        }
        (up, down)
    }

    #[test]
    fn qbg_type_a_matches_permutation_oracle() {
        for n in 1..=3 {
            let g = build_qbg(cd(Family::A, n), DEFAULT_WEYL_CAP).unwrap();
            let up = g.edges().filter(|e| e.kind == EdgeKind::Up).count();
            let down = g.edges().filter(|e| e.kind == EdgeKind::Down).count();
            assert_eq!((up, down), perm_qbg(n), "A{n}");
        }
        let g = build_qbg(cd(Family::A, 2), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn qbg_invariants() {
        for (f, n) in [
            (Family::A, 2),
            (Family::A, 3),
            (Family::C, 2),
            (Family::C, 3),
            (Family::B, 3),
            (Family::D, 4),
        ] {
            let c = cd(f, n);
            let g = build_qbg(c.clone(), DEFAULT_WEYL_CAP).unwrap();
            assert!(g.is_strongly_connected(), "{f:?}{n}");
            for e in g.edges() {
                let lw = g.group.get(e.src).length() as i64;
                let lv = g.group.get(e.dst).length() as i64;
                let beta = &c.positive_roots()[e.root];
                let w = g.group.get(e.src);
                assert_eq!(
                    g.group.get(e.dst),
                    &w.mul(&c, &WeylElement::reflection(&c, beta))
                );
                match e.kind {
                    EdgeKind::Up => assert_eq!(lv, lw + 1),
                    EdgeKind::Down => assert_eq!(lw - lv, 2 * rho_coroot(&c, beta) - 1),
                }
            }
        }
    }

    #[test]
    fn qbg_is_memoized() {
        let c = cd(Family::C, 2);
        let a = qbg(&c).unwrap();
        let b = qbg(&c).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn dominantize_examples() {
        let a1 = cd(Family::A, 1);
        let d = dominantize(&a1, &ClassicalWeight(vec![-1]), 1).unwrap();
        assert_eq!(d.word, vec![1]);
        assert_eq!(d.weight, ClassicalWeight(vec![1]));

        let c2 = cd(Family::C, 2);
        let fixed = dominantize(&c2, &ClassicalWeight(vec![1, 0]), 1).unwrap();
        assert!(fixed.word.is_empty());

        let d = dominantize(&c2, &ClassicalWeight(vec![-2, 0]), 1).unwrap();
        assert_eq!(d.weight, ClassicalWeight(vec![0, 0]));
        assert_eq!(apply_level_word(&c2, &d.word, &d.weight, 1), ClassicalWeight(vec![-2, 0]));
    }

    /// Minimal number of simple reflections from `mu` to the dominant chamber,
    /// by breadth-first search over the level-`l` orbit.
    fn bfs_distance(c: &CartanData, mu: &ClassicalWeight, level: i64) -> usize {
        let dominant = |x: &ClassicalWeight| (0..=c.rank()).all(|i| level_pairing(c, i, x, level) >= 0);
        let mut seen = HashSet::from([mu.clone()]);
        let mut frontier = vec![mu.clone()];
        for d in 0.. {
            if frontier.iter().any(dominant) {
                return d;
            }
            let mut next = vec![];
            for x in &frontier {
                for i in 0..=c.rank() {
                    let y = level_reflect(c, i, x, level);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        unreachable!()
    }

    #[test]
    fn dominantize_is_minimal_and_round_trips() {
        for (f, n) in [(Family::A, 2), (Family::C, 2)] {
            let c = cd(f, n);
            for level in 1..=2 {
                for x in -3..=3 {
                    for y in -3..=3 {
                        let mu = ClassicalWeight(vec![x, y]);
                        let d = dominantize(&c, &mu, level).unwrap();
                        assert!(d.weight.is_dominant());
                        assert!(d.lambda0_coefficient(&c) >= 0);
                        assert_eq!(apply_level_word(&c, &d.word, &d.weight, level), mu);
                        assert_eq!(d.word.len(), bfs_distance(&c, &mu, level), "{mu} at {level}");
                    }
                }
            }
        }
    }
}
