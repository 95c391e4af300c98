use std::fmt;

use serde::{Deserialize, Serialize};

/// An `r x s` semistandard tableau over `1..=n+1`, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RectTableau {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl RectTableau {
    pub fn from_rows(rows: &[Vec<u8>]) -> Option<Self> {
        let r = rows.len();
        let s = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != s) {
            return None;
        }
        let t = Self {
            rows: r,
            cols: s,
            entries: rows.concat(),
        };
        t.is_semistandard().then_some(t)
    }

    /// The tableau whose `i`-th row is filled with `i`.
    pub fn highest(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: (0..rows).flat_map(|i| vec![i as u8 + 1; cols]).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: u8) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.entries.chunks(self.cols.max(1)).map(<[u8]>::to_vec).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                self.get(i, j) >= 1
                    && (j == 0 || self.get(i, j - 1) <= self.get(i, j))
                    && (i == 0 || self.get(i - 1, j) < self.get(i, j))
            })
        })
    }

    /// Column reading word: columns left to right, each read bottom to top.
    /// The word is identified with the tensor product of its letters, leftmost first.
    pub fn reading_positions(&self) -> Vec<(usize, usize)> {
        (0..self.cols)
            .flat_map(|j| (0..self.rows).rev().map(move |i| (i, j)))
            .collect()
    }

    /// Number of entries equal to `k`.
    pub fn content(&self, k: u8) -> i64 {
        self.entries.iter().filter(|&&x| x == k).count() as i64
    }

    /// Fundamental-weight coordinates for `A_n`: `mu_i = #i - #(i+1)`.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        (1..=n as u8)
            .map(|i| self.content(i) - self.content(i + 1))
            .collect()
    }

    /// Signature rule on the reading word for the classical color `i`. Returns the
    /// position of the rightmost unmatched `i` (for `f_i`) and of the leftmost
    /// unmatched `i+1` (for `e_i`).
    fn signature(&self, i: u8) -> (Option<(usize, usize)>, Option<(usize, usize)>) {
        let mut open: Vec<(usize, usize)> = Vec::new();
        let mut f_at = None;
        for (a, b) in self.reading_positions() {
            let x = self.get(a, b);
            if x == i {
                if open.pop().is_none() {
                    f_at = Some((a, b));
                }
            } else if x == i + 1 {
                open.push((a, b));
            }
        }
        (f_at, open.first().copied())
    }

    pub fn f(&self, i: u8) -> Option<Self> {
        let (pos, _) = self.signature(i);
        let (a, b) = pos?;
        let mut t = self.clone();
        t.set(a, b, i + 1);
        debug_assert!(t.is_semistandard());
        Some(t)
    }

    pub fn e(&self, i: u8) -> Option<Self> {
        let (_, pos) = self.signature(i);
        let (a, b) = pos?;
        let mut t = self.clone();
        t.set(a, b, i);
        debug_assert!(t.is_semistandard());
        Some(t)
    }

    /// Replaces every column by `m` copies of itself.
    pub fn replicate_columns(&self, m: usize) -> Self {
        let cols = self.cols * m;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries.extend(std::iter::repeat_n(self.get(i, j), m));
            }
        }
        Self {
            rows: self.rows,
            cols,
            entries,
        }
    }

    /// Schützenberger promotion on a rectangle with entries at most `n + 1`.
    pub fn promotion(&self, n: usize) -> Self {
        let top = n as u8 + 1;
        let mut grid: Vec<Vec<Option<u8>>> = self
            .to_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|x| (x != top).then_some(x)).collect())
            .collect();
        let holes: Vec<usize> = (0..self.cols)
            .filter(|&j| grid[self.rows - 1][j].is_none())
            .collect();
        for j0 in holes {
            let (mut i, mut j) = (self.rows - 1, j0);
            loop {
                let north = if i > 0 { grid[i - 1][j] } else { None };
                let west = if j > 0 { grid[i][j - 1] } else { None };
                match (north, west) {
                    (Some(nv), w) if w.is_none_or(|wv| nv >= wv) => {
                        grid[i][j] = Some(nv);
                        grid[i - 1][j] = None;
                        i -= 1;
                    }
                    (_, Some(wv)) => {
                        grid[i][j] = Some(wv);
                        grid[i][j - 1] = None;
                        j -= 1;
                    }
                    _ => break,
                }
            }
        }
        self.rebuild(&grid, |x| x + 1, 1)
    }

    /// Inverse promotion.
    pub fn promotion_inverse(&self, n: usize) -> Self {
        let mut grid: Vec<Vec<Option<u8>>> = self
            .to_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|x| (x != 1).then_some(x)).collect())
            .collect();
        let holes: Vec<usize> = (0..self.cols).filter(|&j| grid[0][j].is_none()).collect();
        for j0 in holes.into_iter().rev() {
            let (mut i, mut j) = (0, j0);
            loop {
                let south = if i + 1 < self.rows { grid[i + 1][j] } else { None };
                let east = if j + 1 < self.cols { grid[i][j + 1] } else { None };
                match (east, south) {
                    (Some(ev), s) if s.is_none_or(|sv| ev < sv) => {
                        grid[i][j] = Some(ev);
                        grid[i][j + 1] = None;
                        j += 1;
                    }
                    (_, Some(sv)) => {
                        grid[i][j] = Some(sv);
                        grid[i + 1][j] = None;
                        i += 1;
                    }
                    _ => break,
                }
            }
        }
        self.rebuild(&grid, |x| x - 1, n as u8 + 1)
    }

    fn rebuild(&self, grid: &[Vec<Option<u8>>], shift: impl Fn(u8) -> u8, fill: u8) -> Self {
        let t = Self {
            rows: self.rows,
            cols: self.cols,
            entries: grid
                .iter()
                .flatten()
                .map(|x| x.map_or(fill, &shift))
                .collect(),
        };
        debug_assert!(t.is_semistandard(), "promotion produced {t}");
        t
    }
}

impl fmt::Display for RectTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, row) in self.to_rows().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (l, x) in row.iter().enumerate() {
                if l > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// All `r x s` semistandard tableaux over `1..=max`, in lexicographic order of entries.
pub fn all_rect_tableaux(rows: usize, cols: usize, max: u8) -> Vec<RectTableau> {
    fn fill(t: &mut RectTableau, k: usize, max: u8, out: &mut Vec<RectTableau>) {
        if k == t.entries.len() {
            out.push(t.clone());
            return;
        }
        let (i, j) = (k / t.cols, k % t.cols);
        let lo = [
            if j > 0 { t.get(i, j - 1) } else { 1 },
            if i > 0 { t.get(i - 1, j) + 1 } else { 1 },
        ]
        .into_iter()
        .max()
        .unwrap();
        // Leave room for the strictly increasing column below.
        let hi = max.saturating_sub((t.rows - 1 - i) as u8);
        for v in lo..=hi {
            t.entries[k] = v;
            fill(t, k + 1, max, out);
        }
    }
    let mut out = Vec::new();
    if rows == 0 || cols == 0 {
        return vec![RectTableau {
            rows,
            cols,
            entries: vec![],
        }];
    }
    let mut t = RectTableau {
        rows,
        cols,
        entries: vec![0; rows * cols],
    };
    fill(&mut t, 0, max, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(all_rect_tableaux(1, 1, 3).len(), 3);
        assert_eq!(all_rect_tableaux(1, 2, 3).len(), 6);
        assert_eq!(all_rect_tableaux(2, 1, 3).len(), 3);
        assert_eq!(all_rect_tableaux(2, 2, 4).len(), 20);
        assert_eq!(all_rect_tableaux(2, 1, 4).len(), 6);
        assert!(all_rect_tableaux(2, 3, 4).iter().all(RectTableau::is_semistandard));
    }

    #[test]
    fn single_box_promotion_is_cyclic() {
        for k in 1..=3u8 {
            let t = RectTableau::from_rows(&[vec![k]]).unwrap();
            let p = t.promotion(2);
            assert_eq!(p.get(0, 0), if k == 3 { 1 } else { k + 1 });
        }
    }

    #[test]
    fn promotion_example() {
        // [[1,2],[2,3]] over 1..3: remove the 3, slide, increment, fill with 1.
        let t = RectTableau::from_rows(&[vec![1, 2], vec![2, 3]]).unwrap();
        let p = t.promotion(2);
        assert_eq!(p.to_string(), "[[1,2],[3,3]]");
        assert_eq!(p.promotion_inverse(2), t);
    }

    #[test]
    fn promotion_order_and_inverse_on_small_rectangles() {
        for n in 1..=4usize {
            for r in 1..=n {
                for s in 1..=6 / r {
                    for t in all_rect_tableaux(r, s, n as u8 + 1) {
                        let mut p = t.clone();
                        for _ in 0..=n {
                            p = p.promotion(n);
                        }
                        assert_eq!(p, t, "pr^(n+1) on {t}");
                        assert_eq!(t.promotion(n).promotion_inverse(n), t);
                        assert_eq!(t.promotion_inverse(n).promotion(n), t);
                    }
                }
            }
        }
    }

    #[test]
    fn promotion_rotates_content() {
        let n = 3;
        for t in all_rect_tableaux(2, 2, 4) {
            let p = t.promotion(n);
            for k in 1..=4u8 {
                let src = if k == 1 { 4 } else { k - 1 };
                assert_eq!(p.content(k), t.content(src));
            }
        }
    }

    #[test]
    fn classical_operators_stay_semistandard() {
        for t in all_rect_tableaux(2, 3, 4) {
            for i in 1..=3u8 {
                if let Some(u) = t.f(i) {
                    assert!(u.is_semistandard());
                    assert_eq!(u.e(i), Some(t.clone()));
                }
            }
        }
    }

    #[test]
    fn display_rows() {
        let t = RectTableau::from_rows(&[vec![1, 1], vec![2, 3]]).unwrap();
        assert_eq!(t.to_string(), "[[1,1],[2,3]]");
        assert!(RectTableau::from_rows(&[vec![2, 1]]).is_none());
    }
}
