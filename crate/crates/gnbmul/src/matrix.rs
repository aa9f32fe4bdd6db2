//! Normal-basis multiplication matrices and their structural properties.
//!
//! `M_0` is the k×k 0/1 matrix giving the first product bit,
//! `c_0 = Σ a_i · M_0[i][j] · b_j` over GF(2). Because squaring is a cyclic
//! coordinate shift, the matrix for bit l is the doubly shifted view
//! `M_l[i][j] = M_0[(i-l) mod k][(j-l) mod k]`; only `M_0` is ever stored.
//!
//! The entry `M_0[i][j]` is the parity of the number of exponent pairs
//! `(u, v) ∈ D_i × D_j` with `u + v ≡ 1 (mod p)`, plus the number with
//! `u + v ≡ 0 (mod p)`. The first term picks the coefficient of the coset
//! representative 1 ∈ D_0; the second folds the γ⁰ terms back in, since the
//! basis elements sum to 1. Scanning `u` over `[1, p-1]` and toggling the
//! cell `(F[u], F[v])` for both choices of `v` builds the matrix in O(p).

use crate::gnb::GnbParams;

/// The multiplication matrix `M_0` for output bit 0, with packed bit rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultMatrix {
    k: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl MultMatrix {
    /// Builds `M_0` from the coset structure of a Gaussian normal basis.
    pub fn from_params(params: &GnbParams) -> MultMatrix {
        let k = params.k();
        let p = params.p();
        let map = params.coset_map();
        let words_per_row = k.div_ceil(64);
        let mut m = MultMatrix {
            k,
            words_per_row,
            bits: vec![0; k * words_per_row],
        };
        for u in 1..p {
            // pairs summing to the representative 1 of D_0
            if u != 1 {
                let v = p + 1 - u;
                m.toggle(map.coset_of(u), map.coset_of(v));
            }
            // pairs summing to 0: the gamma^0 correction
            m.toggle(map.coset_of(u), map.coset_of(p - u));
        }
        m
    }

    /// Matrix dimension k.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.k && j < self.k, "matrix index out of range");
        (self.bits[i * self.words_per_row + j / 64] >> (j % 64)) & 1 == 1
    }

    fn toggle(&mut self, i: usize, j: usize) {
        self.bits[i * self.words_per_row + j / 64] ^= 1 << (j % 64);
    }

    /// `C_N`: the number of 1 entries, identical for every shifted view.
    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The shifted view for output bit l (`for_bit(0)` is the matrix itself).
    pub fn for_bit(&self, l: usize) -> MatrixView<'_> {
        assert!(l < self.k, "bit index {l} out of range for k={}", self.k);
        MatrixView { m0: self, shift: l }
    }

    /// All 1-cells `(i, j)` in row-major order.
    pub fn ones(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.count_ones());
        for i in 0..self.k {
            for j in 0..self.k {
                if self.get(i, j) {
                    cells.push((i, j));
                }
            }
        }
        cells
    }

    /// For each input index i, the number of output bits whose matrix view
    /// has a 1 at the anti-diagonal cell `(i, (i + k/2) mod k)`.
    ///
    /// For an odd-type GNB every count is `k - T + 1`; for a type 1 ONB every
    /// count is k. Requires even k.
    pub fn antidiagonal_usage(&self) -> Vec<usize> {
        assert!(self.k.is_multiple_of(2), "anti-diagonal needs even k");
        let k = self.k;
        (0..k)
            .map(|i| {
                (0..k)
                    .filter(|&l| self.for_bit(l).get(i, (i + k / 2) % k))
                    .count()
            })
            .collect()
    }
}

/// A cyclically shifted view of `M_0`: the matrix for one output bit.
#[derive(Debug, Clone, Copy)]
pub struct MatrixView<'a> {
    m0: &'a MultMatrix,
    shift: usize,
}

impl MatrixView<'_> {
    pub fn k(&self) -> usize {
        self.m0.k
    }

    /// Output bit this view belongs to.
    pub fn bit(&self) -> usize {
        self.shift
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        let k = self.m0.k;
        assert!(i < k && j < k, "matrix index out of range");
        self.m0
            .get((i + k - self.shift) % k, (j + k - self.shift) % k)
    }

    /// Rows of 0/1 cells joined by `sep`, one line per row.
    pub fn render(&self, sep: &str) -> String {
        let k = self.m0.k;
        let mut out = String::new();
        for i in 0..k {
            let row: Vec<&str> = (0..k).map(|j| if self.get(i, j) { "1" } else { "0" }).collect();
            out.push_str(&row.join(sep));
            out.push('\n');
        }
        out
    }
}
