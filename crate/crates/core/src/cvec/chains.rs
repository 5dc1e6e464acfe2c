//! Chain statistics on sets of subsets of `k` distinct powers.
//!
//! A subset of powers is a bitmask below `2^k`. For `n = p^(e_0) + ... +
//! p^(e_(k-1))` the support positions are exactly the partial sums, so a
//! set `T` of positions is a set of masks.

/// `h(x) = -(1 + Σ_{y ∈ T, y ⊋ x} h(y))`, indexed like `t`.
fn chain_heads(t: &[u32]) -> Vec<i64> {
    let mut order: Vec<usize> = (0..t.len()).collect();
    // supersets strictly increase popcount, so process from the top down
    order.sort_by_key(|&i| std::cmp::Reverse(t[i].count_ones()));
    let mut h = vec![0i64; t.len()];
    for (pos, &i) in order.iter().enumerate() {
        let x = t[i];
        let above: i64 = order[..pos]
            .iter()
            .filter(|&&j| t[j] != x && t[j] & x == x)
            .map(|&j| h[j])
            .sum();
        h[i] = -(1 + above);
    }
    h
}

fn dedup(t: &[u32], k: u32) -> Vec<u32> {
    let mut t: Vec<u32> = t.to_vec();
    t.sort_unstable();
    t.dedup();
    debug_assert!(t.iter().all(|&x| k >= 32 || x < 1 << k));
    t
}

/// `Σ (-1)^|c|` over chains `c` in `T` ordered by inclusion, the empty
/// chain counting `+1`.
pub fn chi(t: &[u32], k: u32) -> i64 {
    let t = dedup(t, k);
    1 + chain_heads(&t).iter().sum::<i64>()
}

/// The signed-family variant: a chain with least element `x` is weighted
/// by `2^(k - |x|)`.
pub fn chi_b(t: &[u32], k: u32) -> i64 {
    let t = dedup(t, k);
    let h = chain_heads(&t);
    1 + t
        .iter()
        .zip(&h)
        .map(|(&x, &hx)| hx << (k - x.count_ones()))
        .sum::<i64>()
}
