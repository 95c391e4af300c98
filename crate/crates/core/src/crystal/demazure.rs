use std::collections::BTreeSet;

use super::CrystalGraph;
use crate::cartan::Color;
use crate::error::{Error, Result};
use crate::weyl::is_reduced;

fn e_max(g: &CrystalGraph, b: usize, i: Color) -> usize {
    g.e_pow(b, i, g.epsilon(b, i)).expect("eps counts the e-string")
}

/// The Demazure crystal `B_w(lambda)` inside a highest-weight crystal with highest
/// weight element `hw`: all `b` with `e_{i_1}^max ... e_{i_k}^max b = hw` for the
/// reduced word `i_1 ... i_k` of `w`.
pub fn demazure_subset(g: &CrystalGraph, hw: usize, word: &[Color]) -> Result<BTreeSet<usize>> {
    if !is_reduced(g.cartan(), word) {
        return Err(Error::NotReduced(word.to_vec()));
    }
    Ok((0..g.len())
        .filter(|&b| word.iter().rev().fold(b, |x, &i| e_max(g, x, i)) == hw)
        .collect())
}

/// Kashiwara's action of the simple reflection `s_i` on `b`.
pub fn weyl_action(g: &CrystalGraph, b: usize, i: Color) -> usize {
    let k = g.cartan().color_pairing(i, g.weight(b));
    if k >= 0 {
        g.f_pow(b, i, k as usize).expect("seminormal string")
    } else {
        g.e_pow(b, i, (-k) as usize).expect("seminormal string")
    }
}

/// Whether `sigma: a -> b` is a similarity map of factor `m` on the colors of `a`:
/// `sigma e_i = e_i^m sigma`, `sigma f_i = f_i^m sigma`, `eps` and `phi` scale by
/// `m`, and weights scale by `m`.
pub fn similarity_check(sigma: &[usize], m: usize, a: &CrystalGraph, b: &CrystalGraph) -> bool {
    if sigma.len() != a.len() || sigma.iter().any(|&y| y >= b.len()) {
        return false;
    }
    (0..a.len()).all(|x| {
        let y = sigma[x];
        &(a.weight(x) * m as i64) == b.weight(y)
            && a.colors().iter().all(|&i| {
                a.f(x, i).map(|z| sigma[z]) == b.f_pow(y, i, m)
                    && a.e(x, i).map(|z| sigma[z]) == b.e_pow(y, i, m)
                    && b.epsilon(y, i) == m * a.epsilon(x, i)
                    && b.phi(y, i) == m * a.phi(x, i)
            })
    })
}
