//! Affine and finite Cartan data for the untwisted types `A_n^(1)`, `B_n^(1)`,
//! `C_n^(1)` and `D_n^(1)`.
//!
//! Classical weights live in the fundamental-weight basis and roots in the
//! simple-root basis, so that the pairing `<beta^vee, mu>` is an integer dot
//! product against the coroot coordinates of `beta`.
//!
//! Colors follow the affine Dynkin labelling: color `0` is the affine node and
//! color `i >= 1` is the classical node `i`, stored at coordinate `i - 1`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A crystal color, i.e. a node of the affine Dynkin diagram.
pub type Color = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        }
    }
}

/// A Cartan type such as `C2~`; the trailing `~` is optional when parsing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(Self { family, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}~", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_suffix('~').unwrap_or(t);
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// A classical weight in the fundamental-weight basis: `coords[i-1]` is the
/// coefficient of `varpi_i`, which equals `<alpha_i^vee, mu>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassicalWeight(pub Vec<i64>);

impl ClassicalWeight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Self(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &ClassicalWeight {
    type Output = ClassicalWeight;
    fn add(self, rhs: Self) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ClassicalWeight {
    type Output = ClassicalWeight;
    fn sub(self, rhs: Self) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for ClassicalWeight {
    type Output = ClassicalWeight;
    fn add(self, rhs: Self) -> ClassicalWeight {
        &self + &rhs
    }
}

impl Sub for ClassicalWeight {
    type Output = ClassicalWeight;
    fn sub(self, rhs: Self) -> ClassicalWeight {
        &self - &rhs
    }
}

impl AddAssign<&ClassicalWeight> for ClassicalWeight {
    fn add_assign(&mut self, rhs: &ClassicalWeight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&ClassicalWeight> for ClassicalWeight {
    fn sub_assign(&mut self, rhs: &ClassicalWeight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for ClassicalWeight {
    type Output = ClassicalWeight;
    fn neg(self) -> ClassicalWeight {
        ClassicalWeight(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Mul<i64> for &ClassicalWeight {
    type Output = ClassicalWeight;
    fn mul(self, k: i64) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().map(|c| c * k).collect())
    }
}

/// A root of the finite root system in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c != 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c != 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `|beta|`, the positive root among `{beta, -beta}`.
    pub fn abs(&self) -> Root {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn sign(&self) -> i64 {
        if self.is_negative() {
            -1
        } else {
            1
        }
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        ClassicalWeight(self.0.clone()).fmt(f)
    }
}

/// Cartan data of an untwisted affine type together with its finite root system.
#[derive(Clone, Debug)]
pub struct CartanData {
    pub cartan_type: CartanType,
    /// `A_{ij} = <alpha_i^vee, alpha_j>` for `i, j` in `0..=n`.
    pub affine_cartan: Vec<Vec<i64>>,
    /// Kac labels `a_i`, the coefficients of the null root.
    pub kac_labels: Vec<i64>,
    /// Dual Kac labels `a_i^vee`, the coefficients of the canonical central element.
    pub dual_kac_labels: Vec<i64>,
    /// Squared lengths `(alpha_i, alpha_i)` of the classical simple roots
    /// (long roots have squared length 2, except in type C where short roots do).
    root_len_sq: Vec<i64>,
    /// Symmetrized finite form `(alpha_i, alpha_j)`.
    form: Vec<Vec<i64>>,
    inverse_cartan: Vec<Vec<Ratio<i64>>>,
    positive_roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    coroot_coords: Vec<Vec<i64>>,
    theta: Root,
}

/// Finite Cartan matrix `A_{ij} = <alpha_i^vee, alpha_j>` (0-based) and squared
/// simple root lengths.
fn finite_data(family: Family, n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut lens = vec![2i64; n];
    match family {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            if family == Family::B {
                a[n - 1][n - 2] = -2;
                lens[n - 1] = 1;
            } else if family == Family::C {
                a[n - 2][n - 1] = -2;
                lens[n - 1] = 4;
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
    }
    (a, lens)
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| Ratio::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| aug[r][col] != Ratio::from_integer(0))
            .expect("finite Cartan matrices are invertible");
        aug.swap(col, pivot);
        let p = aug[col][col];
        for x in aug[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let factor = aug[r][col];
                if factor != Ratio::from_integer(0) {
                    for c in 0..2 * n {
                        let v = aug[col][c];
                        aug[r][c] -= factor * v;
                    }
                }
            }
        }
    }
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Builds the Cartan data of `family_n^(1)`.
pub fn build_cartan(family: Family, rank: usize) -> Result<CartanData> {
    let cartan_type = CartanType::new(family, rank)?;
    let n = rank;
    let (a, lens) = finite_data(family, n);
    let form: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| a[i][j] * lens[i] / 2).collect())
        .collect();

    // Positive roots as the orbit of the simple roots under simple reflections.
    let mut roots: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    let mut seen: std::collections::HashSet<Root> = roots.iter().cloned().collect();
    let mut k = 0;
    while k < roots.len() {
        let beta = roots[k].clone();
        for i in 0..n {
            let p: i64 = (0..n).map(|j| a[i][j] * beta.0[j]).sum();
            let mut img = beta.clone();
            img.0[i] -= p;
            if !seen.contains(&img) {
                seen.insert(img.clone());
                roots.push(img);
            }
        }
        k += 1;
    }
    let mut positive: Vec<Root> = roots.into_iter().filter(Root::is_positive).collect();
    positive.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| x.cmp(y)));
    let theta = positive
        .iter()
        .max_by_key(|r| r.height())
        .cloned()
        .expect("root system is nonempty");

    let norm = |b: &Root| -> i64 {
        (0..n)
            .map(|i| (0..n).map(|j| b.0[i] * form[i][j] * b.0[j]).sum::<i64>())
            .sum()
    };
    let coroot_of = |b: &Root| -> Vec<i64> {
        let nb = norm(b);
        (0..n)
            .map(|i| {
                let num = b.0[i] * lens[i];
                debug_assert_eq!(num % nb, 0);
                num / nb
            })
            .collect()
    };
    let coroot_coords: Vec<Vec<i64>> = positive.iter().map(coroot_of).collect();
    let root_index = positive
        .iter()
        .enumerate()
        .map(|(k, r)| (r.clone(), k))
        .collect();

    // Affine row/column from alpha_0 = delta - theta.
    let theta_coroot = coroot_of(&theta);
    let mut affine = vec![vec![0i64; n + 1]; n + 1];
    affine[0][0] = 2;
    for j in 0..n {
        // <alpha_0^vee, alpha_j> = -<theta^vee, alpha_j>
        affine[0][j + 1] = -(0..n).map(|i| theta_coroot[i] * a[i][j]).sum::<i64>();
        // <alpha_i^vee, alpha_0> = -<alpha_i^vee, theta>
        affine[j + 1][0] = -(0..n).map(|k| a[j][k] * theta.0[k]).sum::<i64>();
        for i in 0..n {
            affine[i + 1][j + 1] = a[i][j];
        }
    }
    let mut kac_labels = vec![1];
    kac_labels.extend(theta.0.iter().copied());
    let mut dual_kac_labels = vec![1];
    dual_kac_labels.extend(theta_coroot.iter().copied());

    Ok(CartanData {
        cartan_type,
        affine_cartan: affine,
        kac_labels,
        dual_kac_labels,
        root_len_sq: lens,
        form,
        inverse_cartan: invert(&a),
        positive_roots: positive,
        root_index,
        coroot_coords,
        theta,
    })
}

impl CartanData {
    pub fn parse(name: &str) -> Result<CartanData> {
        let t: CartanType = name.parse()?;
        build_cartan(t.family, t.rank)
    }

    pub fn family(&self) -> Family {
        self.cartan_type.family
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn name(&self) -> String {
        self.cartan_type.to_string()
    }

    /// All colors `0..=n`.
    pub fn colors(&self) -> Vec<Color> {
        (0..=self.rank()).collect()
    }

    /// Classical colors `1..=n`.
    pub fn classical_colors(&self) -> Vec<Color> {
        (1..=self.rank()).collect()
    }

    /// Finite Cartan matrix entry `<alpha_i^vee, alpha_j>` for `i, j >= 1`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.affine_cartan[i][j]
    }

    /// `c_r = max(a_r / a_r^vee, 1)`.
    pub fn c_value(&self, r: usize) -> i64 {
        assert!((1..=self.rank()).contains(&r), "node {r} is not classical");
        (self.kac_labels[r] / self.dual_kac_labels[r]).max(1)
    }

    /// Level of `B^{r,s}`, i.e. `ceil(s / c_r)`.
    pub fn kr_level(&self, r: usize, s: i64) -> i64 {
        let c = self.c_value(r);
        (s + c - 1).div_euclid(c)
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn root_index(&self, beta: &Root) -> Option<usize> {
        self.root_index.get(beta).copied()
    }

    pub fn is_root(&self, beta: &Root) -> bool {
        self.root_index.contains_key(&beta.abs())
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    pub fn rho(&self) -> ClassicalWeight {
        ClassicalWeight(vec![1; self.rank()])
    }

    /// Squared length `(beta, beta)` in the normalization of this data.
    pub fn norm_sq(&self, beta: &Root) -> i64 {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| beta.0[i] * self.form[i][j] * beta.0[j]).sum::<i64>())
            .sum()
    }

    /// Coordinates of `beta^vee` in the simple-coroot basis.
    pub fn coroot_coords(&self, beta: &Root) -> Vec<i64> {
        if let Some(k) = self.root_index(beta) {
            return self.coroot_coords[k].clone();
        }
        let nb = self.norm_sq(beta);
        (0..self.rank())
            .map(|i| beta.0[i] * self.root_len_sq[i] / nb)
            .collect()
    }

    /// `<beta^vee, mu>`.
    pub fn pairing(&self, beta: &Root, mu: &ClassicalWeight) -> i64 {
        let c = match self.root_index(beta) {
            Some(k) => std::borrow::Cow::Borrowed(&self.coroot_coords[k]),
            None => std::borrow::Cow::Owned(self.coroot_coords(beta)),
        };
        c.iter().zip(&mu.0).map(|(a, b)| a * b).sum()
    }

    /// `<alpha_i^vee, mu>` for a color `i`; for `i = 0` this is `-<theta^vee, mu>`
    /// (the level-zero value).
    pub fn color_pairing(&self, i: Color, mu: &ClassicalWeight) -> i64 {
        if i == 0 {
            -self.pairing(&self.theta, mu)
        } else {
            mu.0[i - 1]
        }
    }

    /// A root expressed as a weight: `beta = sum_i <alpha_i^vee, beta> varpi_i`.
    pub fn root_to_weight(&self, beta: &Root) -> ClassicalWeight {
        let n = self.rank();
        ClassicalWeight(
            (0..n)
                .map(|i| (0..n).map(|j| self.affine_cartan[i + 1][j + 1] * beta.0[j]).sum())
                .collect(),
        )
    }

    /// Classical projection of the simple root `alpha_i` (with `cl(alpha_0) = -theta`).
    pub fn simple_root_weight(&self, i: Color) -> ClassicalWeight {
        if i == 0 {
            -self.root_to_weight(&self.theta)
        } else {
            self.root_to_weight(&Root::simple(self.rank(), i))
        }
    }

    /// Coordinates of `mu` in the simple-root basis, if `mu` lies in the root lattice.
    pub fn weight_to_root_coords(&self, mu: &ClassicalWeight) -> Option<Vec<i64>> {
        let n = self.rank();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Ratio::from_integer(0);
            for j in 0..n {
                acc += self.inverse_cartan[i][j] * mu.0[j];
            }
            if !acc.is_integer() {
                return None;
            }
            out.push(acc.to_integer());
        }
        Some(out)
    }

    /// `mu` in `Q_0^+` (nonnegative integer combination of simple roots).
    pub fn in_positive_cone(&self, mu: &ClassicalWeight) -> bool {
        self.weight_to_root_coords(mu)
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Dominance order `mu >= nu`.
    pub fn dominates(&self, mu: &ClassicalWeight, nu: &ClassicalWeight) -> bool {
        self.in_positive_cone(&(mu - nu))
    }

    /// `<rho^vee, mu>` scaled by a fixed positive integer so that it is integral;
    /// strictly monotone along the dominance order.
    pub fn scaled_height(&self, mu: &ClassicalWeight) -> i64 {
        let n = self.rank();
        let mut acc = Ratio::from_integer(0);
        for i in 0..n {
            for j in 0..n {
                acc += self.inverse_cartan[i][j] * mu.0[j];
            }
        }
        let denom = self.height_denominator();
        (acc * denom).to_integer()
    }

    fn height_denominator(&self) -> i64 {
        self.inverse_cartan
            .iter()
            .flatten()
            .fold(1i64, |l, r| lcm(l, *r.denom()))
    }

    /// `s_beta(mu) = mu - <beta^vee, mu> beta`.
    pub fn reflect_weight(&self, beta: &Root, mu: &ClassicalWeight) -> ClassicalWeight {
        let k = self.pairing(beta, mu);
        mu - &(&self.root_to_weight(beta) * k)
    }

    /// `s_i(mu)` for a classical color `i`.
    pub fn simple_reflect_weight(&self, i: usize, mu: &ClassicalWeight) -> ClassicalWeight {
        let k = mu.0[i - 1];
        mu - &(&self.simple_root_weight(i) * k)
    }

    /// `s_i(beta)` on a root in the simple-root basis.
    pub fn simple_reflect_root(&self, i: usize, beta: &Root) -> Root {
        let p: i64 = (1..=self.rank())
            .map(|j| self.affine_cartan[i][j] * beta.0[j - 1])
            .sum();
        let mut out = beta.clone();
        out.0[i - 1] -= p;
        out
    }

    /// Classical neighbours of node `a` in the finite Dynkin diagram.
    pub fn classical_neighbors(&self, a: usize) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&b| b != a && self.affine_cartan[a][b] != 0)
            .collect()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<(Family, usize)> {
        let mut v = vec![];
        for n in 1..=6 {
            v.push((Family::A, n));
        }
        for n in 2..=5 {
            v.push((Family::B, n));
            v.push((Family::C, n));
        }
        for n in 4..=6 {
            v.push((Family::D, n));
        }
        v
    }

    #[test]
    fn affine_a1() {
        let c = build_cartan(Family::A, 1).unwrap();
        assert_eq!(c.affine_cartan, vec![vec![2, -2], vec![-2, 2]]);
        assert_eq!(c.kac_labels, vec![1, 1]);
        assert_eq!(c.dual_kac_labels, vec![1, 1]);
    }

    #[test]
    fn labels_c2_solve_null_conditions() {
        // Oracle: brute-force the positive integer null vectors with a_0 = 1.
        let c = build_cartan(Family::C, 2).unwrap();
        let a = &c.affine_cartan;
        let mut found_a = None;
        let mut found_dual = None;
        for x in 1..=4i64 {
            for y in 1..=4i64 {
                let v = [1, x, y];
                if (0..3).all(|i| (0..3).map(|j| a[i][j] * v[j]).sum::<i64>() == 0) {
                    found_a = Some(v.to_vec());
                }
                if (0..3).all(|j| (0..3).map(|i| v[i] * a[i][j]).sum::<i64>() == 0) {
                    found_dual = Some(v.to_vec());
                }
            }
        }
        assert_eq!(found_a.unwrap(), vec![1, 2, 1]);
        assert_eq!(found_dual.unwrap(), vec![1, 1, 1]);
        assert_eq!(c.kac_labels, vec![1, 2, 1]);
        assert_eq!(c.dual_kac_labels, vec![1, 1, 1]);
    }

    #[test]
    fn a3_labels_all_one() {
        let c = build_cartan(Family::A, 3).unwrap();
        assert!(c.kac_labels.iter().all(|&x| x == 1));
        assert!(c.dual_kac_labels.iter().all(|&x| x == 1));
    }

    #[test]
    fn cartan_invariants_all_types() {
        for (f, n) in all_types() {
            let c = build_cartan(f, n).unwrap();
            let a = &c.affine_cartan;
            for i in 0..=n {
                assert_eq!(a[i][i], 2);
                for j in 0..=n {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0, "{f:?}{n} ({i},{j})");
                    }
                }
                let row: i64 = (0..=n).map(|j| a[i][j] * c.kac_labels[j]).sum();
                assert_eq!(row, 0, "{f:?}{n} null root row {i}");
                let col: i64 = (0..=n).map(|k| c.dual_kac_labels[k] * a[k][i]).sum();
                assert_eq!(col, 0, "{f:?}{n} central element column {i}");
            }
        }
    }

    #[test]
    fn rejects_bad_rank() {
        assert!(matches!(
            build_cartan(Family::D, 3),
            Err(Error::InvalidRank { family: 'D', rank: 3 })
        ));
        assert!(build_cartan(Family::C, 1).is_err());
        assert!(build_cartan(Family::A, 0).is_err());
    }

    #[test]
    fn parses_type_names() {
        let t: CartanType = "C2~".parse().unwrap();
        assert_eq!(t.family, Family::C);
        assert_eq!(t.rank, 2);
        let t: CartanType = "a3".parse().unwrap();
        assert_eq!(t.to_string(), "A3~");
        assert!("E6".parse::<CartanType>().is_err());
        assert!("Cx".parse::<CartanType>().is_err());
    }

    #[test]
    fn c_values() {
        for n in 1..=5 {
            let c = build_cartan(Family::A, n).unwrap();
            assert!((1..=n).all(|r| c.c_value(r) == 1));
        }
        let c2 = build_cartan(Family::C, 2).unwrap();
        assert_eq!(c2.c_value(1), 2);
        assert_eq!(c2.c_value(2), 1);
        for n in 2..=5 {
            let c = build_cartan(Family::C, n).unwrap();
            let b = build_cartan(Family::B, n).unwrap();
            for r in 1..n {
                assert_eq!(c.c_value(r), 2);
                assert_eq!(b.c_value(r), 1);
            }
            assert_eq!(c.c_value(n), 1);
            assert_eq!(b.c_value(n), 2);
        }
        for n in 4..=6 {
            let d = build_cartan(Family::D, n).unwrap();
            assert!((1..=n).all(|r| d.c_value(r) == 1));
        }
    }

    #[test]
    fn positive_root_counts() {
        let count = |f, n| build_cartan(f, n).unwrap().positive_roots().len();
        assert_eq!(count(Family::A, 2), 3);
        assert_eq!(count(Family::C, 2), 4);
        assert_eq!(count(Family::D, 4), 12);
        for n in 1..=6 {
            assert_eq!(count(Family::A, n), n * (n + 1) / 2);
        }
        for n in 2..=5 {
            assert_eq!(count(Family::B, n), n * n);
            assert_eq!(count(Family::C, n), n * n);
        }
        for n in 4..=6 {
            assert_eq!(count(Family::D, n), n * (n - 1));
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = build_cartan(Family::A, 2).unwrap();
        let w1 = ClassicalWeight::fundamental(2, 1);
        assert_eq!(a2.pairing(&Root::simple(2, 1), &w1), 1);
        assert_eq!(a2.pairing(&Root::simple(2, 2), &w1), 0);
        assert_eq!(a2.pairing(a2.theta(), &a2.rho()), 2);
        assert_eq!(a2.pairing(a2.theta(), &ClassicalWeight::zero(2)), 0);
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        for (f, n) in all_types() {
            let c = build_cartan(f, n).unwrap();
            for i in 1..=n {
                assert_eq!(c.pairing(&Root::simple(n, i), &c.rho()), 1);
            }
        }
    }

    #[test]
    fn root_weight_round_trip() {
        for (f, n) in all_types() {
            let c = build_cartan(f, n).unwrap();
            for beta in c.positive_roots() {
                let w = c.root_to_weight(beta);
                assert_eq!(c.weight_to_root_coords(&w).unwrap(), beta.0);
                assert_eq!(c.pairing(beta, &w), 2);
                assert_eq!(c.reflect_weight(beta, &w), -w.clone());
            }
        }
    }

    #[test]
    fn theta_coroot_in_c2() {
        let c = build_cartan(Family::C, 2).unwrap();
        assert_eq!(c.theta().0, vec![2, 1]);
        assert_eq!(c.coroot_coords(c.theta()), vec![1, 1]);
        // varpi_1 = epsilon_1 is not in the root lattice of C2; 2 varpi_1 = theta is.
        assert!(c.weight_to_root_coords(&ClassicalWeight(vec![1, 0])).is_none());
        assert_eq!(
            c.weight_to_root_coords(&ClassicalWeight(vec![2, 0])).unwrap(),
            vec![2, 1]
        );
    }
}
