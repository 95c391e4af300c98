use std::sync::Arc;

use super::{Crystal, CrystalGraph};
use crate::cartan::{CartanData, ClassicalWeight, Color};

/// `B_L ⊗ ... ⊗ B_1` over explored factors; elements are tuples of node ids,
/// leftmost factor first.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    cartan: Arc<CartanData>,
    factors: Vec<Arc<CrystalGraph>>,
}

/// Reduced signature of a tensor element for one color.
struct Signature {
    /// Factor holding the rightmost unmatched `-`.
    f_at: Option<usize>,
    /// Factor holding the leftmost unmatched `+`.
    e_at: Option<usize>,
    minus: usize,
    plus: usize,
}

impl TensorProduct {
    pub fn new(cartan: Arc<CartanData>, factors: Vec<Arc<CrystalGraph>>) -> Self {
        for g in &factors {
            assert_eq!(
                g.cartan().cartan_type,
                cartan.cartan_type,
                "tensor factors must share a Cartan type"
            );
        }
        Self { cartan, factors }
    }

    pub fn factors(&self) -> &[Arc<CrystalGraph>] {
        &self.factors
    }

    pub fn size(&self) -> usize {
        self.factors.iter().map(|g| g.len()).product()
    }

    /// Each factor contributes `-^{phi_i} +^{eps_i}`, reading left to right;
    /// adjacent `+ -` pairs cancel.
    fn signature(&self, b: &[usize], i: Color) -> Signature {
        let mut open: Vec<(usize, usize)> = Vec::new();
        let mut minus = 0;
        let mut f_at = None;
        for (k, (g, &x)) in self.factors.iter().zip(b).enumerate() {
            let mut m = g.phi(x, i);
            while m > 0 {
                match open.last_mut() {
                    Some(top) => {
                        let cancel = top.1.min(m);
                        top.1 -= cancel;
                        m -= cancel;
                        if top.1 == 0 {
                            open.pop();
                        }
                    }
                    None => {
                        minus += m;
                        f_at = Some(k);
                        m = 0;
                    }
                }
            }
            let p = g.epsilon(x, i);
            if p > 0 {
                open.push((k, p));
            }
        }
        Signature {
            f_at,
            e_at: open.first().map(|&(k, _)| k),
            minus,
            plus: open.iter().map(|&(_, p)| p).sum(),
        }
    }
}

impl Crystal for TensorProduct {
    type Elem = Vec<usize>;

    fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    fn f(&self, b: &Vec<usize>, i: Color) -> Option<Vec<usize>> {
        let k = self.signature(b, i).f_at?;
        let mut out = b.clone();
        out[k] = self.factors[k].f(b[k], i).expect("signature points at an f-able factor");
        Some(out)
    }

    fn e(&self, b: &Vec<usize>, i: Color) -> Option<Vec<usize>> {
        let k = self.signature(b, i).e_at?;
        let mut out = b.clone();
        out[k] = self.factors[k].e(b[k], i).expect("signature points at an e-able factor");
        Some(out)
    }

    fn weight(&self, b: &Vec<usize>) -> ClassicalWeight {
        let mut w = ClassicalWeight::zero(self.cartan.rank());
        for (g, &x) in self.factors.iter().zip(b) {
            w += g.weight(x);
        }
        w
    }

    fn repr(&self, b: &Vec<usize>) -> String {
        if b.is_empty() {
            return "∅".to_string();
        }
        self.factors
            .iter()
            .zip(b)
            .map(|(g, &x)| g.repr(x).to_string())
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }

    fn epsilon(&self, b: &Vec<usize>, i: Color) -> usize {
        self.signature(b, i).plus
    }

    fn phi(&self, b: &Vec<usize>, i: Color) -> usize {
        self.signature(b, i).minus
    }
}

/// Two-factor rule: `f_i(x ⊗ y) = f_i x ⊗ y` if `phi_i(y) <= eps_i(x)`, else `x ⊗ f_i y`.
pub fn tensor_f_two_factor(
    left: &CrystalGraph,
    right: &CrystalGraph,
    x: usize,
    y: usize,
    i: Color,
) -> Option<(usize, usize)> {
    if right.phi(y, i) <= left.epsilon(x, i) {
        left.f(x, i).map(|x2| (x2, y))
    } else {
        right.f(y, i).map(|y2| (x, y2))
    }
}

/// Two-factor rule: `e_i(x ⊗ y) = e_i x ⊗ y` if `phi_i(y) < eps_i(x)`, else `x ⊗ e_i y`.
pub fn tensor_e_two_factor(
    left: &CrystalGraph,
    right: &CrystalGraph,
    x: usize,
    y: usize,
    i: Color,
) -> Option<(usize, usize)> {
    if right.phi(y, i) < left.epsilon(x, i) {
        left.e(x, i).map(|x2| (x2, y))
    } else {
        right.e(y, i).map(|y2| (x, y2))
    }
}
