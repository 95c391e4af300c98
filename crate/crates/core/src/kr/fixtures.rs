//! The two level-1 Demazure-filtered crystals of type `C_2^(1)` drawn for
//! `B^{1,1} ⊗ B^{1,1}` and `B^{1,2}`, transcribed node by node.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{build_cartan, CartanData, ClassicalWeight, Family};
use crate::crystal::CrystalGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fixture {
    /// `D̃_1(B^{1,1} ⊗ B^{1,1})`.
    Tensor11,
    /// `D̃_1(B^{1,2})`.
    B12,
}

impl std::str::FromStr for Fixture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tensor11" => Ok(Fixture::Tensor11),
            "B12" | "b12" => Ok(Fixture::B12),
            _ => Err(Error::Invalid(format!("unknown fixture {s:?}"))),
        }
    }
}

const LETTERS: [i64; 4] = [1, 2, -2, -1];

const TENSOR11_EDGES: [(usize, usize, usize); 15] = [
    (7, 11, 2),
    (2, 3, 1),
    (1, 5, 1),
    (6, 10, 2),
    (8, 9, 1),
    (1, 2, 2),
    (4, 8, 2),
    (12, 0, 0),
    (13, 14, 2),
    (11, 15, 1),
    (9, 13, 1),
    (0, 1, 1),
    (10, 11, 1),
    (5, 6, 2),
    (3, 7, 1),
];

/// Rows of the single-row tableaux; the empty row is `∅`.
const B12_NODES: [&[i64]; 11] = [
    &[],
    &[1, 1],
    &[1, 2],
    &[1, -2],
    &[1, -1],
    &[2, 2],
    &[2, -2],
    &[2, -1],
    &[-2, -2],
    &[-2, -1],
    &[-1, -1],
];

const B12_EDGES: [(usize, usize, usize); 11] = [
    (2, 3, 2),
    (4, 7, 1),
    (9, 10, 1),
    (8, 9, 1),
    (1, 2, 1),
    (0, 1, 0),
    (3, 4, 1),
    (7, 9, 2),
    (2, 5, 1),
    (5, 6, 2),
    (6, 8, 2),
];

fn letter_weight(v: i64) -> ClassicalWeight {
    // epsilon_1 = varpi_1, epsilon_2 = varpi_2 - varpi_1 in C_2.
    let eps = match v.abs() {
        1 => ClassicalWeight(vec![1, 0]),
        _ => ClassicalWeight(vec![-1, 1]),
    };
    if v > 0 {
        eps
    } else {
        -eps
    }
}

fn c2() -> Arc<CartanData> {
    Arc::new(build_cartan(Family::C, 2).expect("C2 is valid"))
}

/// The transcribed fixture graph.
pub fn fixture_c2(which: Fixture) -> CrystalGraph {
    let cartan = c2();
    let colors = cartan.colors();
    let (reprs, weights, edges): (Vec<String>, Vec<ClassicalWeight>, &[(usize, usize, usize)]) =
        match which {
            Fixture::Tensor11 => {
                let mut reprs = Vec::new();
                let mut weights = Vec::new();
                for a in LETTERS {
                    for b in LETTERS {
                        reprs.push(format!("{a} ⊗ {b}"));
                        weights.push(&letter_weight(a) + &letter_weight(b));
                    }
                }
                (reprs, weights, &TENSOR11_EDGES)
            }
            Fixture::B12 => {
                let reprs = B12_NODES
                    .iter()
                    .map(|row| {
                        if row.is_empty() {
                            "∅".to_string()
                        } else {
                            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                            format!("[[{}]]", cells.join(","))
                        }
                    })
                    .collect();
                let weights = B12_NODES
                    .iter()
                    .map(|row| {
                        row.iter()
                            .fold(ClassicalWeight::zero(2), |acc, &v| &acc + &letter_weight(v))
                    })
                    .collect();
                (reprs, weights, &B12_EDGES)
            }
        };
    CrystalGraph::from_edges(cartan, colors, reprs, weights, edges).expect("fixture is well formed")
}
