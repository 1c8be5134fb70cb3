//! Bit-packed linear systems over GF(2) solved by Gauss-Jordan elimination.
//!
//! Each row stores its coefficients in `ceil(cols / 64)` words, column `j` at
//! bit `j % 64` of word `j / 64`. Solution vectors use the same packing.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2System {
    cols: usize,
    words: usize,
    coeffs: Vec<u64>,
    rhs: Vec<bool>,
}

/// Outcome of eliminating a [`Gf2System`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gf2Solution {
    Inconsistent {
        rank: usize,
    },
    /// Solution set `particular + span(nullspace)`.
    Solvable {
        rank: usize,
        particular: Vec<u64>,
        nullspace: Vec<Vec<u64>>,
    },
}

impl Gf2System {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            words: cols.div_ceil(64),
            coeffs: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rhs.len()
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    /// Appends a row given as packed words. Bits beyond `cols` must be zero.
    pub fn push_row_words(&mut self, words: &[u64], rhs: bool) {
        assert_eq!(words.len(), self.words, "row width does not match system");
        debug_assert!(
            self.cols.is_multiple_of(64) || words.last().is_none_or(|w| w >> (self.cols % 64) == 0),
            "row has bits beyond the last column"
        );
        self.coeffs.extend_from_slice(words);
        self.rhs.push(rhs);
    }

    pub fn push_row(&mut self, coeffs: impl IntoIterator<Item = bool>, rhs: bool) {
        let mut row = vec![0u64; self.words];
        let mut n = 0;
        for (j, c) in coeffs.into_iter().enumerate() {
            assert!(j < self.cols, "row longer than {} columns", self.cols);
            if c {
                row[j / 64] |= 1 << (j % 64);
            }
            n += 1;
        }
        assert_eq!(n, self.cols, "row shorter than {} columns", self.cols);
        self.push_row_words(&row, rhs);
    }

    #[inline]
    fn bit(&self, row: usize, col: usize) -> bool {
        (self.coeffs[row * self.words + col / 64] >> (col % 64)) & 1 == 1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words {
            self.coeffs.swap(a * self.words + w, b * self.words + w);
        }
        self.rhs.swap(a, b);
    }

    // row[dst] ^= row[src]
    fn xor_row(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.words, src * self.words);
        for w in 0..self.words {
            let v = self.coeffs[s + w];
            self.coeffs[d + w] ^= v;
        }
        self.rhs[dst] ^= self.rhs[src];
    }

    /// Reduces the system to reduced row echelon form and returns the pivot
    /// columns; the first `pivots.len()` rows are the pivot rows.
    fn eliminate(&mut self) -> Vec<usize> {
        let rows = self.rows();
        let mut pivots = Vec::new();
        for col in 0..self.cols {
            let rank = pivots.len();
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| self.bit(r, col)) else {
                continue;
            };
            self.swap_rows(rank, p);
            for r in 0..rows {
                if r != rank && self.bit(r, col) {
                    self.xor_row(r, rank);
                }
            }
            pivots.push(col);
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().len()
    }

    pub fn solve(mut self) -> Gf2Solution {
        let pivots = self.eliminate();
        let rank = pivots.len();
        // Non-pivot rows are all-zero after elimination.
        if self.rhs[rank..].iter().any(|&b| b) {
            return Gf2Solution::Inconsistent { rank };
        }

        let mut particular = vec![0u64; self.words];
        for (i, &col) in pivots.iter().enumerate() {
            if self.rhs[i] {
                particular[col / 64] |= 1 << (col % 64);
            }
        }

        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let nullspace = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![0u64; self.words];
                v[free / 64] |= 1 << (free % 64);
                for (i, &col) in pivots.iter().enumerate() {
                    if self.bit(i, free) {
                        v[col / 64] |= 1 << (col % 64);
                    }
                }
                v
            })
            .collect();

        Gf2Solution::Solvable {
            rank,
            particular,
            nullspace,
        }
    }
}

impl Gf2Solution {
    pub fn rank(&self) -> usize {
        match self {
            Gf2Solution::Inconsistent { rank } | Gf2Solution::Solvable { rank, .. } => *rank,
        }
    }

    /// Dimension of the solution space, `None` when inconsistent.
    pub fn deficit(&self) -> Option<usize> {
        match self {
            Gf2Solution::Inconsistent { .. } => None,
            Gf2Solution::Solvable { nullspace, .. } => Some(nullspace.len()),
        }
    }

    /// All solutions, in Gray-code order over the nullspace basis. Yields
    /// `2^deficit` vectors; callers bound the deficit.
    pub fn solutions(&self) -> Vec<Vec<u64>> {
        let Gf2Solution::Solvable {
            particular,
            nullspace,
            ..
        } = self
        else {
            return Vec::new();
        };
        let d = nullspace.len();
        assert!(d < 64, "refusing to enumerate 2^{d} solutions");
        let mut current = particular.clone();
        let mut out = Vec::with_capacity(1 << d);
        out.push(current.clone());
        for i in 1u64..(1 << d) {
            let flip = i.trailing_zeros() as usize;
            for (c, v) in current.iter_mut().zip(&nullspace[flip]) {
                *c ^= v;
            }
            out.push(current.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn apply(rows: &[Vec<bool>], x: &[bool]) -> Vec<bool> {
        rows.iter()
            .map(|r| r.iter().zip(x).fold(false, |acc, (&a, &b)| acc ^ (a & b)))
            .collect()
    }

    fn unpack(words: &[u64], cols: usize) -> Vec<bool> {
        (0..cols)
            .map(|j| (words[j / 64] >> (j % 64)) & 1 == 1)
            .collect()
    }

    #[test]
    fn identity_system() {
        let mut s = Gf2System::new(3);
        s.push_row([true, false, false], true);
        s.push_row([false, true, false], false);
        s.push_row([false, false, true], true);
        let sol = s.solve();
        assert_eq!(sol.rank(), 3);
        assert_eq!(sol.deficit(), Some(0));
        assert_eq!(sol.solutions(), vec![vec![0b101]]);
    }

    #[test]
    fn empty_system_has_full_nullspace() {
        let sol = Gf2System::new(4).solve();
        assert_eq!(sol.rank(), 0);
        assert_eq!(sol.deficit(), Some(4));
        let mut all: Vec<u64> = sol.solutions().into_iter().map(|v| v[0]).collect();
        all.sort();
        assert_eq!(all, (0..16).collect::<Vec<_>>());
    }

    #[test]
    fn zero_columns() {
        let mut s = Gf2System::new(0);
        s.push_row([], false);
        assert_eq!(s.clone().solve().deficit(), Some(0));
        s.push_row([], true);
        assert!(matches!(s.solve(), Gf2Solution::Inconsistent { rank: 0 }));
    }

    #[test]
    fn contradiction() {
        let mut s = Gf2System::new(2);
        s.push_row([true, true], true);
        s.push_row([true, true], false);
        assert!(matches!(s.solve(), Gf2Solution::Inconsistent { rank: 1 }));
    }

    #[test]
    fn wide_rows_span_words() {
        let cols = 130;
        let mut s = Gf2System::new(cols);
        for j in 0..cols {
            let row: Vec<bool> = (0..cols)
                .map(|c| c == j || c == (j + 1) % cols && j % 2 == 0)
                .collect();
            s.push_row(row, j % 3 == 0);
        }
        assert_eq!(s.words_per_row(), 3);
        assert_eq!(s.rank(), cols);
    }

    fn matrix_and_solution(max_cols: usize) -> impl Strategy<Value = (Vec<Vec<bool>>, Vec<bool>)> {
        (1..=max_cols, 0..=2 * max_cols).prop_flat_map(|(cols, rows)| {
            (
                proptest::collection::vec(proptest::collection::vec(any::<bool>(), cols), rows),
                proptest::collection::vec(any::<bool>(), cols),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn planted_solution_is_recovered((rows, planted) in matrix_and_solution(12)) {
            let cols = planted.len();
            let rhs = apply(&rows, &planted);
            let mut s = Gf2System::new(cols);
            for (r, b) in rows.iter().zip(&rhs) {
                s.push_row(r.iter().copied(), *b);
            }
            let sol = s.solve();
            prop_assert!(sol.rank() <= rows.len().min(cols));
            let solutions = sol.solutions();
            prop_assert_eq!(solutions.len(), 1 << (cols - sol.rank()));
            for v in &solutions {
                prop_assert_eq!(apply(&rows, &unpack(v, cols)), rhs.clone());
            }
            prop_assert!(solutions.iter().any(|v| unpack(v, cols) == planted));
            if sol.rank() == cols {
                prop_assert_eq!(unpack(&solutions[0], cols), planted);
            }
        }
    }
}
