//! Concrete Kirillov–Reshetikhin crystals: type `A_n^(1)` `B^{r,s}` on rectangular
//! tableaux, the single-box crystal of type `C_n^(1)`, and the two `C_2^(1)`
//! fixture graphs.

mod fixtures;
mod tableau;

use std::sync::Arc;

use crate::cartan::{CartanData, ClassicalWeight, Color, Family};
use crate::crystal::{explore, Crystal, CrystalGraph, TensorProduct, DEFAULT_NODE_CAP};
use crate::error::{Error, Result};

pub use fixtures::{fixture_c2, Fixture};
pub use tableau::{all_rect_tableaux, RectTableau};

/// How the 0-arrows of type-A `B^{r,s}` are conjugated from the 1-arrows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugation {
    /// `f_0 = pr^{-1} f_1 pr`.
    InverseOuter,
    /// `f_0 = pr f_1 pr^{-1}`.
    PromotionOuter,
}

/// Type-A KR crystal `B^{r,s}` with operators computed on tableaux.
#[derive(Clone, Debug)]
pub struct KrTypeA {
    cartan: Arc<CartanData>,
    rows: usize,
    cols: usize,
    conjugation: Conjugation,
}

impl KrTypeA {
    pub fn new(cartan: Arc<CartanData>, r: usize, s: usize, conjugation: Conjugation) -> Result<Self> {
        if cartan.family() != Family::A {
            return Err(Error::Precondition(format!(
                "tableau model needs type A, got {}",
                cartan.name()
            )));
        }
        if r < 1 || r > cartan.rank() {
            return Err(Error::UnsupportedFactor {
                cartan: cartan.name(),
                r,
                s: s as i64,
                reason: "r must lie in 1..=n",
            });
        }
        Ok(Self {
            cartan,
            rows: r,
            cols: s,
            conjugation,
        })
    }

    fn n(&self) -> usize {
        self.cartan.rank()
    }

    pub fn highest(&self) -> RectTableau {
        RectTableau::highest(self.rows, self.cols)
    }

    fn conjugate(&self, t: &RectTableau, op: impl Fn(&RectTableau) -> Option<RectTableau>) -> Option<RectTableau> {
        let n = self.n();
        match self.conjugation {
            Conjugation::InverseOuter => op(&t.promotion(n)).map(|u| u.promotion_inverse(n)),
            Conjugation::PromotionOuter => op(&t.promotion_inverse(n)).map(|u| u.promotion(n)),
        }
    }
}

impl Crystal for KrTypeA {
    type Elem = RectTableau;

    fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    fn f(&self, t: &RectTableau, i: Color) -> Option<RectTableau> {
        if i == 0 {
            self.conjugate(t, |u| u.f(1))
        } else {
            t.f(i as u8)
        }
    }

    fn e(&self, t: &RectTableau, i: Color) -> Option<RectTableau> {
        if i == 0 {
            self.conjugate(t, |u| u.e(1))
        } else {
            t.e(i as u8)
        }
    }

    fn weight(&self, t: &RectTableau) -> ClassicalWeight {
        ClassicalWeight(t.weight(self.n()))
    }

    fn repr(&self, t: &RectTableau) -> String {
        t.to_string()
    }
}

/// Checks `wt(f_0 b) = wt(b) + theta` and `e_0 f_0 b = b` on every tableau.
pub fn conjugation_is_consistent(cartan: &Arc<CartanData>, r: usize, s: usize, conj: Conjugation) -> bool {
    let Ok(kr) = KrTypeA::new(Arc::clone(cartan), r, s, conj) else {
        return false;
    };
    let theta = cartan.root_to_weight(cartan.theta());
    all_rect_tableaux(r, s, cartan.rank() as u8 + 1).iter().all(|t| match kr.f(t, 0) {
        Some(u) => kr.weight(&u) == &kr.weight(t) + &theta && kr.e(&u, 0).as_ref() == Some(t),
        None => true,
    })
}

/// Selects the conjugation satisfying the weight axiom for `f_0`.
pub fn select_conjugation(cartan: &Arc<CartanData>, r: usize, s: usize) -> Result<Conjugation> {
    [Conjugation::InverseOuter, Conjugation::PromotionOuter]
        .into_iter()
        .find(|&c| conjugation_is_consistent(cartan, r, s, c))
        .ok_or_else(|| Error::Precondition(format!("no promotion orientation works for B^{{{r},{s}}}")))
}

/// The explored type-A KR crystal `B^{r,s}` (colors `0..=n`), numbered from `u_max`.
pub fn kr_type_a(cartan: &Arc<CartanData>, r: usize, s: usize, cap: usize) -> Result<CrystalGraph> {
    let conj = select_conjugation(cartan, r, s)?;
    let kr = KrTypeA::new(Arc::clone(cartan), r, s, conj)?;
    explore(&kr, &[kr.highest()], &cartan.colors(), cap)
}

/// Convenience wrapper building the Cartan data of `A_n^(1)`.
pub fn kr_typea(n: usize, r: usize, s: usize) -> Result<CrystalGraph> {
    let c = Arc::new(crate::cartan::build_cartan(Family::A, n)?);
    kr_type_a(&c, r, s, DEFAULT_NODE_CAP)
}

/// Letters `1 < ... < n < n̄ < ... < 1̄` of type `C_n`, encoded as `0..2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnLetter(pub u8);

impl KnLetter {
    /// Signed value: `k` for the unbarred letter `k`, `-k` for `k̄`.
    pub fn signed(self, n: usize) -> i64 {
        let k = self.0 as i64;
        if (k as usize) < n {
            k + 1
        } else {
            -(2 * n as i64 - k)
        }
    }

    pub fn from_signed(v: i64, n: usize) -> Option<Self> {
        let n = n as i64;
        match v {
            1.. if v <= n => Some(KnLetter((v - 1) as u8)),
            _ if v < 0 && -v <= n => Some(KnLetter((2 * n + v) as u8)),
            _ => None,
        }
    }
}

/// The single-box crystal `B^{1,1}` of type `C_n^(1)`.
#[derive(Clone, Debug)]
pub struct KnOneBox {
    cartan: Arc<CartanData>,
}

impl KnOneBox {
    pub fn new(cartan: Arc<CartanData>) -> Result<Self> {
        if cartan.family() != Family::C {
            return Err(Error::Precondition(format!(
                "one-box C crystal needs type C, got {}",
                cartan.name()
            )));
        }
        Ok(Self { cartan })
    }

    fn n(&self) -> usize {
        self.cartan.rank()
    }
}

impl Crystal for KnOneBox {
    type Elem = KnLetter;

    fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    fn f(&self, b: &KnLetter, i: Color) -> Option<KnLetter> {
        let n = self.n() as i64;
        let v = b.signed(self.n());
        let i = i as i64;
        let out = if i == 0 {
            (v == -1).then_some(1)
        } else if i < n {
            if v == i {
                Some(i + 1)
            } else if v == -(i + 1) {
                Some(-i)
            } else {
                None
            }
        } else {
            (v == n).then_some(-n)
        };
        out.and_then(|w| KnLetter::from_signed(w, self.n()))
    }

    fn e(&self, b: &KnLetter, i: Color) -> Option<KnLetter> {
        (0..2 * self.n() as u8)
            .map(KnLetter)
            .find(|&x| self.f(&x, i) == Some(*b))
    }

    fn weight(&self, b: &KnLetter) -> ClassicalWeight {
        let n = self.n();
        let v = b.signed(n);
        let mut eps = vec![0i64; n];
        eps[v.unsigned_abs() as usize - 1] = v.signum();
        let mut mu: Vec<i64> = (0..n - 1).map(|k| eps[k] - eps[k + 1]).collect();
        mu.push(eps[n - 1]);
        ClassicalWeight(mu)
    }

    fn repr(&self, b: &KnLetter) -> String {
        b.signed(self.n()).to_string()
    }
}

/// The explored single-box crystal of type `C_n^(1)`, numbered from the letter `1`.
pub fn kr_c_onebox(cartan: &Arc<CartanData>) -> Result<CrystalGraph> {
    let kn = KnOneBox::new(Arc::clone(cartan))?;
    explore(&kn, &[KnLetter(0)], &cartan.colors(), DEFAULT_NODE_CAP)
}

/// The trivial crystal: one node of weight zero and no arrows.
pub fn trivial_crystal(cartan: &Arc<CartanData>) -> CrystalGraph {
    CrystalGraph::from_edges(
        Arc::clone(cartan),
        cartan.colors(),
        vec!["∅".into()],
        vec![ClassicalWeight::zero(cartan.rank())],
        &[],
    )
    .expect("trivial crystal is well formed")
}

/// The crystal with no elements.
pub fn empty_crystal(cartan: &Arc<CartanData>) -> CrystalGraph {
    CrystalGraph::from_edges(Arc::clone(cartan), cartan.colors(), vec![], vec![], &[])
        .expect("empty crystal is well formed")
}

/// A full KR crystal `B^{r,s}` that can be constructed generically: any `(r, s)` in
/// type A and `B^{1,1}` in type C. `s = 0` gives the trivial crystal.
pub fn kr_factor(cartan: &Arc<CartanData>, r: usize, s: i64, cap: usize) -> Result<CrystalGraph> {
    if r < 1 || r > cartan.rank() {
        return Err(Error::UnsupportedFactor {
            cartan: cartan.name(),
            r,
            s,
            reason: "r must lie in 1..=n",
        });
    }
    if s < 0 {
        return Err(Error::UnsupportedFactor {
            cartan: cartan.name(),
            r,
            s,
            reason: "s must be nonnegative",
        });
    }
    if s == 0 {
        return Ok(trivial_crystal(cartan));
    }
    match (cartan.family(), r, s) {
        (Family::A, _, _) => kr_type_a(cartan, r, s as usize, cap),
        (Family::C, 1, 1) => kr_c_onebox(cartan),
        _ => Err(Error::UnsupportedFactor {
            cartan: cartan.name(),
            r,
            s,
            reason: "only type A and the type C single box are built generically",
        }),
    }
}

/// Explores `B_L ⊗ ... ⊗ B_1` from every tuple (in lexicographic order of node ids),
/// so the numbering starts with the tensor of the factors' first nodes.
pub fn explore_tensor(
    cartan: &Arc<CartanData>,
    factors: Vec<Arc<CrystalGraph>>,
    colors: &[Color],
    cap: usize,
) -> Result<CrystalGraph> {
    let size: usize = factors.iter().map(|g| g.len()).product();
    if size > cap {
        return Err(Error::ResourceCap {
            what: "crystal node count",
            cap,
        });
    }
    let tp = TensorProduct::new(Arc::clone(cartan), factors);
    let mut seeds: Vec<Vec<usize>> = vec![vec![]];
    for g in tp.factors() {
        seeds = seeds
            .into_iter()
            .flat_map(|s| {
                (0..g.len()).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    explore(&tp, &seeds, colors, cap)
}

/// The tensor product of KR crystals `B^{r_1,s_1} ⊗ ...`, leftmost factor first.
/// A factor with `s < 0` makes the product empty.
pub fn kr_tensor(cartan: &Arc<CartanData>, factors: &[(usize, i64)], cap: usize) -> Result<CrystalGraph> {
    if factors.iter().any(|&(_, s)| s < 0) {
        return Ok(empty_crystal(cartan));
    }
    let graphs = factors
        .iter()
        .map(|&(r, s)| kr_factor(cartan, r, s, cap).map(Arc::new))
        .collect::<Result<Vec<_>>>()?;
    explore_tensor(cartan, graphs, &cartan.colors(), cap)
}

/// The classical highest-weight crystal `B(lambda)` (colors `1..=n`) of type A or C,
/// realized as the component of the Yamanouchi word in a tensor power of the
/// single-box crystal. Returns the graph and its highest-weight node.
pub fn highest_weight_crystal(cartan: &Arc<CartanData>, lambda: &ClassicalWeight) -> Result<(CrystalGraph, usize)> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let n = cartan.rank();
    let one_box = match cartan.family() {
        Family::A => kr_type_a(cartan, 1, 1, DEFAULT_NODE_CAP)?,
        Family::C => kr_c_onebox(cartan)?,
        _ => {
            return Err(Error::Precondition(format!(
                "highest-weight crystals are built for types A and C, not {}",
                cartan.name()
            )))
        }
    };
    // Column reading word of the tableau whose k-th row is filled with k.
    let mut letters = Vec::new();
    for (idx, &m) in lambda.0.iter().enumerate() {
        for _ in 0..m {
            letters.extend((1..=idx + 1).rev());
        }
    }
    let one_box = Arc::new(one_box);
    let seed: Vec<usize> = letters
        .iter()
        .map(|&k| one_box.find_repr(&format!("[[{k}]]")).or_else(|| one_box.find_repr(&k.to_string())))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invalid("missing letter in single-box crystal".into()))?;
    let tp = TensorProduct::new(Arc::clone(cartan), vec![Arc::clone(&one_box); letters.len()]);
    let classical: Vec<Color> = (1..=n).collect();
    let g = explore(&tp, &[seed], &classical, DEFAULT_NODE_CAP)?;
    debug_assert!(classical.iter().all(|&i| g.e(0, i).is_none()));
    debug_assert_eq!(g.weight(0), lambda);
    Ok((g, 0))
}

/// Column replication `B^{r,s} -> B^{r,ms}` on explored type-A graphs, as node ids.
pub fn column_replication(
    cartan: &Arc<CartanData>,
    source: &CrystalGraph,
    target: &CrystalGraph,
    m: usize,
) -> Result<Vec<usize>> {
    let n = cartan.rank();
    (0..source.len())
        .map(|b| {
            let t = parse_tableau(source.repr(b))
                .ok_or_else(|| Error::Invalid(format!("not a tableau: {}", source.repr(b))))?;
            let image = t.replicate_columns(m).to_string();
            target
                .find_repr(&image)
                .ok_or_else(|| Error::Invalid(format!("{image} not in target (n = {n})")))
        })
        .collect()
}

/// Parses the row-list form `[[1,1],[2,3]]`.
pub fn parse_tableau(s: &str) -> Option<RectTableau> {
    let rows: Vec<Vec<u8>> = serde_json::from_str(s).ok()?;
    RectTableau::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_cartan;
    use crate::crystal::{hw_census, AnchorMode};

    fn a(n: usize) -> Arc<CartanData> {
        Arc::new(build_cartan(Family::A, n).unwrap())
    }

    #[test]
    fn small_type_a_sizes() {
        let g = kr_typea(2, 1, 1).unwrap();
        assert_eq!(g.len(), 3);
        let three = g.find_repr("[[3]]").unwrap();
        let one = g.find_repr("[[1]]").unwrap();
        assert_eq!(g.f(three, 0), Some(one));
        assert_eq!(g.edge_count_by_color()[0], 1);
        assert_eq!(kr_typea(2, 1, 2).unwrap().len(), 6);
        let b21 = kr_typea(2, 2, 1).unwrap();
        assert_eq!(b21.len(), 3);
        assert_eq!(hw_census(&b21, &[1, 2]), vec![ClassicalWeight(vec![0, 1])]);
    }

    #[test]
    fn type_a_kr_crystals_are_seminormal_and_irreducible() {
        for n in 1..=3 {
            let c = a(n);
            for r in 1..=n {
                for s in 1..=3 {
                    if r * s > 6 {
                        continue;
                    }
                    assert_eq!(select_conjugation(&c, r, s).unwrap(), Conjugation::InverseOuter);
                    let g = kr_type_a(&c, r, s, DEFAULT_NODE_CAP).unwrap();
                    assert_eq!(g.len(), all_rect_tableaux(r, s, n as u8 + 1).len());
                    g.check_seminormal(&c.colors()).unwrap();
                    let top = &ClassicalWeight::fundamental(n, r) * s as i64;
                    assert_eq!(hw_census(&g, &c.classical_colors()), vec![top.clone()]);
                    let umax = g.anchor(AnchorMode::Max).unwrap();
                    let umin = g.anchor(AnchorMode::Min).unwrap();
                    assert_eq!(g.weight(umax), &top);
                    let grp = crate::weyl::WeylGroup::enumerate(c.clone(), 1000).unwrap();
                    assert_eq!(g.weight(umin), &grp.longest().act_weight(&top));
                }
            }
        }
    }

    #[test]
    fn c_one_box() {
        let c = Arc::new(build_cartan(Family::C, 2).unwrap());
        let g = kr_c_onebox(&c).unwrap();
        assert_eq!(g.reprs(), &["1", "-1", "2", "-2"]);
        let bar1 = g.find_repr("-1").unwrap();
        let one = g.find_repr("1").unwrap();
        assert_eq!(g.f(bar1, 0), Some(one));
        g.check_seminormal(&c.colors()).unwrap();
        assert_eq!(c.color_pairing(0, g.weight(one)), -1);
        for n in 2..=4 {
            let c = Arc::new(build_cartan(Family::C, n).unwrap());
            let g = kr_c_onebox(&c).unwrap();
            assert_eq!(g.len(), 2 * n);
            g.check_seminormal(&c.colors()).unwrap();
        }
    }

    #[test]
    fn highest_weight_crystal_sizes() {
        let c = a(2);
        let (g, _) = highest_weight_crystal(&c, &ClassicalWeight(vec![1, 1])).unwrap();
        assert_eq!(g.len(), 8);
        let (g, _) = highest_weight_crystal(&c, &ClassicalWeight(vec![2, 1])).unwrap();
        assert_eq!(g.len(), 15);
        let c2 = Arc::new(build_cartan(Family::C, 2).unwrap());
        let (g, _) = highest_weight_crystal(&c2, &ClassicalWeight(vec![1, 1])).unwrap();
        assert_eq!(g.len(), 16);
        let (g, _) = highest_weight_crystal(&c2, &ClassicalWeight(vec![0, 1])).unwrap();
        assert_eq!(g.len(), 5);
        let (g, _) = highest_weight_crystal(&c2, &ClassicalWeight(vec![2, 0])).unwrap();
        assert_eq!(g.len(), 10);
    }

    #[test]
    fn unsupported_factors() {
        let c = Arc::new(build_cartan(Family::C, 2).unwrap());
        assert!(matches!(
            kr_factor(&c, 1, 2, DEFAULT_NODE_CAP),
            Err(Error::UnsupportedFactor { r: 1, s: 2, .. })
        ));
        assert!(kr_factor(&c, 3, 1, DEFAULT_NODE_CAP).is_err());
        assert_eq!(kr_factor(&c, 2, 0, DEFAULT_NODE_CAP).unwrap().len(), 1);
    }
}
