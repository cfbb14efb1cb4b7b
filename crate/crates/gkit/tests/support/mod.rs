//! Shared helpers for the integration suites: an independent brute-force
//! oracle for binomial expansions, kept deliberately separate from the
//! greedy implementation it checks.

/// Plain binomial coefficient on machine words; inputs stay far below
/// overflow for the oracle's search space (k <= 2000, bottoms <= 6).
pub fn binom_small(n: u64, k: u32) -> u64 {
    let k = k as u64;
    if n < k {
        return 0;
    }
    let mut acc: u128 = 1;
    for step in 0..k {
        acc = acc * (n - step) as u128 / (step + 1) as u128;
    }
    u64::try_from(acc).expect("oracle binomial fits u64")
}

/// Largest admissible sum using strictly decreasing tops below `cap` for
/// bottoms `t, t-1, ..., 1`; used to prune unreachable branches.
fn max_reachable(cap: u64, t: u32) -> u64 {
    let mut total = 0u64;
    let mut top = cap;
    let mut bottom = t;
    while bottom >= 1 {
        if top < bottom as u64 {
            break;
        }
        total += binom_small(top, bottom);
        if top == 0 {
            break;
        }
        top -= 1;
        bottom -= 1;
    }
    total
}

/// Every representation of `k` as `C(a_i, i) + C(a_{i-1}, i-1) + ... +
/// C(a_j, j)` with strictly decreasing tops, bottoms stepping down by one,
/// `a_j >= j >= 1`.  Exhaustive search; uniqueness of the result is the
/// theorem under test.
pub fn all_expansions(k: u64, i: u32) -> Vec<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    search(k, i, u64::MAX, &mut current, &mut out);
    return out;

    fn search(
        remaining: u64,
        bottom: u32,
        top_cap: u64,
        current: &mut Vec<(u64, u32)>,
        out: &mut Vec<Vec<(u64, u32)>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        if bottom == 0 {
            return;
        }
        // C(top, b) >= top whenever top > b >= 1, so tops beyond `remaining`
        // can only contribute via the trivial C(b, b) = 1 case.
        let cap = top_cap.min(remaining.max(bottom as u64));
        let mut top = cap;
        while top >= bottom as u64 {
            let value = binom_small(top, bottom);
            if value <= remaining
                && (remaining == value
                    || max_reachable(top.saturating_sub(1), bottom - 1) >= remaining - value)
            {
                current.push((top, bottom));
                search(remaining - value, bottom - 1, top - 1, current, out);
                current.pop();
            }
            if top == 0 {
                break;
            }
            top -= 1;
        }
    }
}
