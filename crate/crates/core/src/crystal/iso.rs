use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::CrystalGraph;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AnchorMode {
    Min,
    Max,
}

impl AnchorMode {
    pub fn name(self) -> &'static str {
        match self {
            AnchorMode::Min => "min",
            AnchorMode::Max => "max",
        }
    }
}

/// Extends the anchor-to-anchor assignment along arrows. Since each node has at
/// most one outgoing and one incoming arrow per color, the map is forced; it is
/// returned only if it is a weight- and arrow-preserving bijection.
pub fn iso_check(
    a: &CrystalGraph,
    b: &CrystalGraph,
    mode: AnchorMode,
) -> Result<Option<Vec<usize>>> {
    let x0 = a.anchor(mode)?;
    let y0 = b.anchor(mode)?;
    Ok(iso_from(a, x0, b, y0))
}

/// The forced map sending `x0` to `y0`, if it is an isomorphism of the whole graphs.
pub fn iso_from(a: &CrystalGraph, x0: usize, b: &CrystalGraph, y0: usize) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let width = a.cartan().rank() + 1;
    if b.cartan().rank() + 1 != width {
        return None;
    }
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    map[x0] = y0;
    used[y0] = true;
    let mut queue = VecDeque::from([x0]);
    while let Some(x) = queue.pop_front() {
        let y = map[x];
        if a.weight(x) != b.weight(y) {
            return None;
        }
        for i in 0..width {
            for (nx, ny) in [(a.f(x, i), b.f(y, i)), (a.e(x, i), b.e(y, i))] {
                match (nx, ny) {
                    (None, None) => {}
                    (Some(nx), Some(ny)) => {
                        if map[nx] == usize::MAX {
                            if used[ny] {
                                return None;
                            }
                            map[nx] = ny;
                            used[ny] = true;
                            queue.push_back(nx);
                        } else if map[nx] != ny {
                            return None;
                        }
                    }
                    _ => return None,
                }
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    verify_isomorphism(a, b, &map).then_some(map)
}

/// Independent check that `map` is a bijection `a -> b` preserving weights and
/// commuting with every `f_i` and `e_i`.
pub fn verify_isomorphism(a: &CrystalGraph, b: &CrystalGraph, map: &[usize]) -> bool {
    if a.len() != b.len() || map.len() != a.len() {
        return false;
    }
    let mut hit = vec![false; b.len()];
    for &y in map {
        if y >= b.len() || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    let width = a.cartan().rank() + 1;
    (0..a.len()).all(|x| {
        a.weight(x) == b.weight(map[x])
            && (0..width).all(|i| {
                a.f(x, i).map(|z| map[z]) == b.f(map[x], i)
                    && a.e(x, i).map(|z| map[z]) == b.e(map[x], i)
            })
    })
}
