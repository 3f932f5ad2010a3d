use num_bigint::BigInt;

use crate::abgroup::FgAbGroup;

pub(crate) const O_MAX_RANK: usize = 9;
pub(crate) const U_MAX_RANK: usize = 6;

// Cyclic orders per entry, 0 for ℤ; `None` marks a blank cell that lies in the
// stable range to the right of the boxed entry.
type Cell = Option<&'static [u64]>;

const Z: &[u64] = &[0];
const Z2: &[u64] = &[0, 0];
const T: &[u64] = &[];
const C2: &[u64] = &[2];
const C2X2: &[u64] = &[2, 2];
const C12: &[u64] = &[12];
const C12X2: &[u64] = &[12, 12];

/// `πᵢ(O(n))`, rows `i = 0..=7`, columns `n = 1..=9`.
#[rustfmt::skip]
const O_TABLE: [[Cell; O_MAX_RANK]; 8] = [
    [Some(C2), Some(C2), Some(C2), Some(C2), Some(C2), Some(C2), Some(C2), Some(C2), Some(C2)],
    [Some(T), Some(Z), Some(C2), None, None, None, None, None, None],
    [Some(T), Some(T), Some(T), Some(T), None, None, None, None, None],
    [Some(T), Some(T), Some(Z), Some(Z2), Some(Z), None, None, None, None],
    [Some(T), Some(T), Some(C2), Some(C2X2), Some(C2), Some(T), None, None, None],
    [Some(T), Some(T), Some(C2), Some(C2X2), Some(C2), Some(Z), Some(T), None, None],
    [Some(T), Some(T), Some(C12), Some(C12X2), Some(T), Some(T), Some(T), Some(T), None],
    [Some(T), Some(T), Some(C2), Some(C2X2), Some(Z), Some(Z), Some(Z), Some(Z2), Some(Z)],
];

/// `πᵢ(U(n))`, rows `i = 1..=7`, columns `n = 1..=6`.
#[rustfmt::skip]
const U_TABLE: [[&[u64]; U_MAX_RANK]; 7] = [
    [Z, Z, Z, Z, Z, Z],
    [T, T, T, T, T, T],
    [T, Z, Z, Z, Z, Z],
    [T, C2, T, T, T, T],
    [T, C2, Z, Z, Z, Z],
    [T, C12, &[6], T, T, T],
    [T, C2, T, Z, Z, Z],
];

fn group(orders: &[u64]) -> FgAbGroup {
    FgAbGroup::from_cyclic_orders(orders.iter().map(|&o| BigInt::from(o)))
}

pub(crate) fn o_entry(n: u32, i: u32) -> Option<FgAbGroup> {
    O_TABLE[i as usize][n as usize - 1].map(group)
}

/// The boxed entry of row `i ≥ 1`, which sits at `O(i + 2)`.
pub(crate) fn o_stable(i: u32) -> FgAbGroup {
    let boxed = O_TABLE[i as usize][i as usize + 1].expect("boxed entries are filled");
    group(boxed)
}

pub(crate) fn u_entry(n: u32, i: u32) -> FgAbGroup {
    group(U_TABLE[i as usize - 1][n as usize - 1])
}

/// Stable `πᵢ(U)`, read at the smallest `n` with `i ≤ 2n − 1`.
pub(crate) fn u_stable(i: u32) -> FgAbGroup {
    u_entry((i + 1).div_ceil(2), i)
}
