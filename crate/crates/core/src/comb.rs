//! Binomial coefficients and lexicographic ranking of combinations and
//! multisets.
//!
//! A multiset `a_0 <= a_1 <= ... <= a_{k-1}` drawn from `0..t` is ranked
//! through the bijection `a_i + i`, which turns it into a strictly increasing
//! combination drawn from `0..t+k-1` and preserves lexicographic order.

use alloc::vec;
use alloc::vec::Vec;

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(acc)
}

/// Binomial coefficients `C(n, j)` for `n <= max_n`, `j <= max_k`.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    max_k: usize,
    rows: Vec<Vec<u64>>,
}

impl BinomialTable {
    pub fn new(max_n: usize, max_k: usize) -> Self {
        let mut rows = vec![vec![0u64; max_k + 1]; max_n + 1];
        for n in 0..=max_n {
            rows[n][0] = 1;
            for k in 1..=max_k.min(n) {
                rows[n][k] = rows[n - 1][k - 1].saturating_add(rows[n - 1][k]);
            }
        }
        BinomialTable { max_k, rows }
    }

    #[inline]
    pub fn get(&self, n: usize, k: usize) -> u64 {
        if k > self.max_k || n >= self.rows.len() {
            return 0;
        }
        self.rows[n][k]
    }
}

/// Lexicographic rank of the strictly increasing `combo` among all
/// `combo.len()`-subsets of `0..universe`.
pub fn rank_combination(table: &BinomialTable, universe: usize, combo: &[usize]) -> u64 {
    let k = combo.len();
    let total = table.get(universe, k);
    let mut colex = 0u64;
    for (i, &c) in combo.iter().enumerate() {
        colex += table.get(universe - 1 - c, k - i);
    }
    total - 1 - colex
}

/// Lexicographic rank of the sorted multiset `tokens` over `0..t`.
pub fn rank_multiset(table: &BinomialTable, t: usize, tokens: &[usize]) -> u64 {
    let k = tokens.len();
    if k == 0 {
        return 0;
    }
    let universe = t + k - 1;
    let total = table.get(universe, k);
    let mut colex = 0u64;
    for (i, &a) in tokens.iter().enumerate() {
        colex += table.get(universe - 1 - (a + i), k - i);
    }
    total - 1 - colex
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All sorted `k`-multisets over `0..t` in lexicographic order.
pub fn multisets(t: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if t == 0 {
        return Vec::new();
    }
    combinations(t + k - 1, k)
        .into_iter()
        .map(|c| c.into_iter().enumerate().map(|(i, x)| x - i).collect())
        .collect()
}
