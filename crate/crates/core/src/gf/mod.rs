//! Generating functions for bonds and vertical separators.
//!
//! With `r(z, v) = z + 2z^2 v + 2z^3 v^2 + ...` (one maximal marked run:
//! a single entry, or an ascending or descending run of length `j >= 2`
//! carrying `j - 1` marked bonds):
//!
//! * `A(z, v) = sum_m m! r^m` counts permutations by marked bonds, and
//!   `B(z, u) = A(z, u - 1)` counts them by bonds.
//! * `g(z, v)` counts permutations by marked vertical separators. A
//!   permutation is the comb of its odd-position and even-position halves,
//!   and marked separators of the comb are exactly the marked bonds of the
//!   halves, so with `P_m(z) = r(z^2, v)^m`
//!
//!   `g = sum (m_o + m_e)! [P_{m_o} * P_{m_e}]
//!      + sum (m_o + m_e)! [z^-1 P_{m_o} * z P_{m_e}]`
//!
//!   where `*` is the Hadamard product in `z`. The first sum covers even
//!   lengths, the second odd lengths.
//! * `h(z, u) = g(z, u - 1)` counts permutations by vertical separators.

mod poly;
mod series;

pub use poly::MarkerPoly;
pub use series::{series_from_rows, BiSeries, SeriesError};

use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::numbers::factorial;

/// The one-run factor `z + sum_{j>=2} 2 z^j v^(j-1)`, truncated at `order`.
pub fn run_block_series(order: usize) -> BiSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(MarkerPoly::zero());
    for j in 1..=order {
        coeffs.push(if j == 1 {
            MarkerPoly::one()
        } else {
            MarkerPoly::monomial(BigInt::from(2), j - 1)
        });
    }
    BiSeries::from_coeffs(order, coeffs)
}

/// `[r^0, r^1, ..., r^max_power]`, each truncated at `r`'s order.
fn run_powers(r: &BiSeries, max_power: usize) -> Vec<BiSeries> {
    let mut powers = Vec::with_capacity(max_power + 1);
    powers.push(BiSeries::one(r.order()));
    for m in 1..=max_power {
        let next = powers[m - 1].mul(r).expect("same order");
        powers.push(next);
    }
    powers
}

/// `A(z, v)`: permutations counted by size and number of marked bonds.
pub fn bond_marked_gf(order: usize) -> BiSeries {
    let r = run_block_series(order);
    // r has valuation 1, so r^m vanishes below z^m
    let mut total = BiSeries::zero(order);
    for (m, power) in run_powers(&r, order).iter().enumerate() {
        total
            .add_assign(&power.scale(&factorial(m as u64)))
            .expect("same order");
    }
    total
}

/// `B(z, u) = A(z, u - 1)`: permutations counted by number of bonds.
pub fn bond_gf(order: usize) -> BiSeries {
    bond_marked_gf(order).substitute_marker(-1)
}

/// `g(z, v)`: permutations counted by number of marked vertical separators.
pub fn vertical_marked_gf(order: usize) -> BiSeries {
    // Each half has at most ceil(order / 2) entries; the odd terms read
    // P_{m_o} one step past `order`, so the P's are kept to order + 1.
    let half = order.div_ceil(2);
    let work = order + 1;
    let r = run_block_series(half);
    let p: Vec<BiSeries> = run_powers(&r, half)
        .iter()
        .map(|q| q.compose_z_squared(work))
        .collect();
    // z^2 P_m, truncated back to `work`
    let p_up: Vec<BiSeries> = p
        .iter()
        .map(|q| {
            q.z_shift(1)
                .and_then(|s| s.z_shift(1))
                .expect("shift up")
                .truncate(work)
        })
        .collect();

    let mut even = BiSeries::zero(work);
    let mut odd = BiSeries::zero(work);
    for (m_o, po) in p.iter().enumerate() {
        for m_e in 0..p.len() {
            let weight = factorial((m_o + m_e) as u64);
            let e_term = po.hadamard(&p[m_e]).expect("same order");
            even.add_assign(&e_term.scale(&weight)).expect("same order");
            // [z^-1 P_o] * [z P_e] = z^-1 [P_o * z^2 P_e]
            let o_term = po.hadamard(&p_up[m_e]).expect("same order");
            odd.add_assign(&o_term.scale(&weight)).expect("same order");
        }
    }
    let odd = odd.z_shift(-1).expect("z^2 P_e has no constant term");
    even.truncate(order).add(&odd).expect("same order")
}

/// `h(z, u) = g(z, u - 1)`: permutations counted by number of vertical
/// separators. The coefficient of `z^n u^m` is the number of permutations
/// of length `n` with exactly `m` vertical separators.
pub fn vertical_sep_gf(order: usize) -> BiSeries {
    vertical_marked_gf(order).substitute_marker(-1)
}
