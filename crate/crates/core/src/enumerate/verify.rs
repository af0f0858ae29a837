//! Cross-checks between the generating functions, the closed forms and
//! exhaustive enumeration.
//!
//! Every check takes precomputed sweeps (`sweeps[n]` is the full sweep of
//! `S_n`), so the expensive part can be produced elsewhere, for example in
//! parallel.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{
    expectation_formula, expectation_from, full_separator_perms, iterate_sn, max_separator_perms,
    separator_free_from, sn_size, sweep, EnumError, ExpectationKind, Histograms, StatKind,
};
use crate::gf::{bond_gf, vertical_marked_gf, vertical_sep_gf, MarkerPoly};
use crate::numbers::binomial;
use crate::perm::{Permutation, Word};
use crate::separators::{
    comb_marked, decode_marked, deletion_creates_new_bond, encode_marked, horizontal_separators,
    separator_report, split_marked, vertical_separators, MarkedWord,
};

/// Largest size for the per-permutation structural checks.
pub const STRUCTURAL_N: usize = 7;
/// Largest size for the marked-structure round trips.
pub const MARKED_N: usize = 6;

/// Which series a mismatch was found in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfName {
    /// Vertical separators, `h(z, u)`.
    VerticalSeparators,
    /// Bonds, `B(z, u)`.
    Bonds,
}

/// First differing coefficient in one row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfMismatch {
    pub series: GfName,
    pub n: usize,
    pub m: usize,
    /// From enumeration.
    pub expected: BigInt,
    /// From the generating function.
    pub actual: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfReport {
    pub n_max: usize,
    /// `h` rows `0..=n_max`.
    pub h_rows: Vec<MarkerPoly>,
    pub mismatches: Vec<GfMismatch>,
}

impl GfReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn first_difference(expected: &MarkerPoly, actual: &MarkerPoly) -> Option<(usize, BigInt, BigInt)> {
    let len = expected.coeffs().len().max(actual.coeffs().len());
    (0..len)
        .map(|m| (m, expected.coeff(m), actual.coeff(m)))
        .find(|(_, e, a)| e != a)
}

/// Compares `h` and `B` rows against exhaustive distributions.
pub fn verify_gf_against(sweeps: &[Histograms]) -> GfReport {
    let n_max = sweeps.len().saturating_sub(1);
    let h = vertical_sep_gf(n_max);
    let b = bond_gf(n_max);
    let mut mismatches = Vec::new();
    for (n, hist) in sweeps.iter().enumerate() {
        for (series, gf, kind) in [
            (GfName::VerticalSeparators, &h, StatKind::Vertical),
            (GfName::Bonds, &b, StatKind::Bonds),
        ] {
            let actual = &gf.coeffs()[n];
            if let Some((m, expected, actual)) = first_difference(&hist.table(kind).as_poly(), actual) {
                mismatches.push(GfMismatch {
                    series,
                    n,
                    m,
                    expected,
                    actual,
                });
            }
        }
    }
    GfReport {
        n_max,
        h_rows: h.coeffs().to_vec(),
        mismatches,
    }
}

pub fn verify_gf_vs_brute(n_max: usize) -> Result<GfReport, EnumError> {
    Ok(verify_gf_against(&sweeps_upto(n_max)?))
}

/// Sequential sweeps of `S_0 ..= S_{n_max}`.
pub fn sweeps_upto(n_max: usize) -> Result<Vec<Histograms>, EnumError> {
    (0..=n_max).map(sweep).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Empty on success; the first failing instance otherwise.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n_max: usize,
    pub gf: GfReport,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn check(name: &'static str, outcome: Result<(), String>) -> CheckResult {
    match outcome {
        Ok(()) => CheckResult {
            name,
            passed: true,
            detail: String::new(),
        },
        Err(detail) => CheckResult {
            name,
            passed: false,
            detail,
        },
    }
}

/// Runs the generating-function comparison and every invariant check.
pub fn run_suite(sweeps: &[Histograms]) -> VerificationReport {
    let n_max = sweeps.len().saturating_sub(1);
    let gf = verify_gf_against(sweeps);
    let gf_detail = gf
        .mismatches
        .first()
        .map(|m| {
            format!(
                "{:?} row n={} differs at m={}: enumeration {} vs series {}",
                m.series, m.n, m.m, m.expected, m.actual
            )
        })
        .unwrap_or_default();
    let structural = n_max.min(STRUCTURAL_N);
    let checks = alloc::vec![
        check("gf_matches_enumeration", if gf.passed() { Ok(()) } else { Err(gf_detail) }),
        check("marked_binomial_transform", check_binomial_transform(n_max)),
        check("gf_degree_bounds", check_degree_bounds(n_max)),
        check("table_totals", check_totals(sweeps)),
        check("vertical_horizontal_symmetry", check_symmetry(sweeps)),
        check("separator_free_oracles", check_separator_free(sweeps)),
        check("max_separator_count", check_max_separators(sweeps)),
        check("expectations", check_expectations(sweeps)),
        check("inverse_reverse_boundary", check_duality(structural)),
        check("children_and_king_downsets", check_downsets(structural)),
        check("new_bond_semantics", check_new_bonds(structural)),
        check("marked_round_trips", check_marked(n_max.min(MARKED_N))),
    ];
    VerificationReport { n_max, gf, checks }
}

fn check_binomial_transform(n_max: usize) -> Result<(), String> {
    let g = vertical_marked_gf(n_max);
    let h = vertical_sep_gf(n_max);
    for n in 0..=n_max {
        let hn = &h.coeffs()[n];
        for m in 0..=n {
            let expected: BigInt = (0..hn.coeffs().len())
                .map(|k| hn.coeff(k) * binomial(k as u64, m as u64))
                .sum();
            if g.coeffs()[n].coeff(m) != expected {
                return Err(format!("g row {n} differs from the binomial transform of h at m={m}"));
            }
        }
    }
    Ok(())
}

fn check_degree_bounds(n_max: usize) -> Result<(), String> {
    let h = vertical_sep_gf(n_max);
    for (n, row) in h.coeffs().iter().enumerate() {
        if row.has_negative_coeff() {
            return Err(format!("h row {n} has a negative coefficient"));
        }
        // only interior entries can be vertical separators
        let bound = n.saturating_sub(2);
        if row.degree().unwrap_or(0) > bound {
            return Err(format!("h row {n} has degree above {bound}"));
        }
    }
    Ok(())
}

fn check_totals(sweeps: &[Histograms]) -> Result<(), String> {
    for (n, hist) in sweeps.iter().enumerate() {
        let expected = sn_size(n).map_err(|e| format!("{e}"))?;
        for kind in StatKind::ALL {
            if hist.table(kind).total() != expected.into() {
                return Err(format!("{kind} table for n={n} does not sum to n!"));
            }
        }
    }
    Ok(())
}

fn check_symmetry(sweeps: &[Histograms]) -> Result<(), String> {
    for (n, hist) in sweeps.iter().enumerate() {
        if hist.table(StatKind::Vertical).counts != hist.table(StatKind::Horizontal).counts {
            return Err(format!("vertical and horizontal tables differ at n={n}"));
        }
    }
    Ok(())
}

fn check_separator_free(sweeps: &[Histograms]) -> Result<(), String> {
    for hist in sweeps {
        separator_free_from(hist).map_err(|e| format!("{e}"))?;
    }
    Ok(())
}

fn check_max_separators(sweeps: &[Histograms]) -> Result<(), String> {
    for (n, hist) in sweeps.iter().enumerate().skip(1) {
        let count = hist.all_separators_count();
        let expected = if n % 4 == 0 {
            let k = (n / 4) as u64;
            (1u64 << k) * (1..=k).product::<u64>()
        } else {
            0
        };
        if count != expected {
            return Err(format!("n={n}: {count} permutations with n separators, expected {expected}"));
        }
        if n % 4 == 0 {
            let built = max_separator_perms(n / 4).map_err(|e| format!("{e}"))?;
            let found = full_separator_perms(n).map_err(|e| format!("{e}"))?;
            if built != found {
                return Err(format!("n={n}: constructed inflations differ from the exhaustive set"));
            }
        }
    }
    Ok(())
}

fn check_expectations(sweeps: &[Histograms]) -> Result<(), String> {
    for (n, hist) in sweeps.iter().enumerate() {
        for kind in [ExpectationKind::Vertical, ExpectationKind::Both, ExpectationKind::Any] {
            let formula = expectation_formula(n as u64, kind);
            let empirical = expectation_from(hist, kind.stat());
            if formula != empirical {
                return Err(format!("n={n} {kind}: formula {formula} vs enumeration {empirical}"));
            }
        }
        let x = expectation_formula(n as u64, ExpectationKind::Vertical);
        let y = expectation_formula(n as u64, ExpectationKind::Both);
        let z = expectation_formula(n as u64, ExpectationKind::Any);
        if n >= 3 && z != x.clone() + x - y {
            return Err(format!("E[Z] != 2E[X] - E[Y] at n={n}"));
        }
    }
    Ok(())
}

fn perms(n: usize) -> impl Iterator<Item = Permutation> {
    iterate_sn(n).expect("structural sizes are small")
}

fn check_duality(n_max: usize) -> Result<(), String> {
    for n in 0..=n_max {
        for p in perms(n) {
            let v = vertical_separators(&p);
            let h = horizontal_separators(&p);
            let inv = p.inverse();
            // the vertical separator p_i becomes the horizontal separator i of p^-1
            let v_as_positions: BTreeSet<usize> =
                v.iter().map(|&d| p.position_of(d).expect("value present")).collect();
            if horizontal_separators(&inv) != v_as_positions {
                return Err(format!("{p:?}: Sep_H of the inverse is not the image of Sep_V"));
            }
            let r = p.reverse();
            if vertical_separators(&r) != v || horizontal_separators(&r) != h {
                return Err(format!("{p:?}: separators change under reversal"));
            }
            if n > 0 {
                let ends = [p.entries()[0], p.entries()[n - 1]];
                if h.contains(&1) || h.contains(&n) || ends.iter().any(|e| v.contains(e)) {
                    return Err(format!("{p:?}: boundary rule violated"));
                }
            }
        }
    }
    Ok(())
}

fn check_downsets(n_max: usize) -> Result<(), String> {
    for n in 1..=n_max {
        for p in perms(n) {
            let children = p.children();
            if children.len() != n - p.bond_count() {
                return Err(format!("{p:?}: {} children, expected n - bonds", children.len()));
            }
            if p.is_king() {
                let kings = children.iter().filter(|c| c.is_king()).count();
                let sep = separator_report(&p).sep_count;
                if kings != n - sep {
                    return Err(format!("{p:?}: {kings} king children, expected n - sep = {}", n - sep));
                }
            }
        }
    }
    Ok(())
}

fn check_new_bonds(n_max: usize) -> Result<(), String> {
    for n in 0..=n_max {
        for p in perms(n) {
            for d in separator_report(&p).all() {
                let pos = p.position_of(d).expect("value present");
                if !deletion_creates_new_bond(&p, pos) {
                    return Err(format!("{p:?}: deleting separator {d} creates no new bond"));
                }
            }
        }
    }
    Ok(())
}

fn check_marked(n_max: usize) -> Result<(), String> {
    for n in 0..=n_max {
        for p in perms(n) {
            for mp in MarkedWord::all_markings(&Word::from(&p)) {
                let (lambda, sigma) = encode_marked(&mp).map_err(|e| format!("{e}"))?;
                if lambda.total() != n || sigma.len() != lambda.len() {
                    return Err(format!("{mp:?}: malformed encoding"));
                }
                if decode_marked(&lambda, &sigma).map_err(|e| format!("{e}"))? != mp {
                    return Err(format!("{mp:?}: encode/decode round trip failed"));
                }
            }
            let (odd, even) = p.comb_split();
            for mo in MarkedWord::all_markings(&odd) {
                for me in MarkedWord::all_markings(&even) {
                    let combed = comb_marked(&mo, &me).map_err(|e| format!("{e}"))?;
                    if combed.marked_seps().len() != mo.marked_count() + me.marked_count() {
                        return Err(format!("{p:?}: marks not conserved"));
                    }
                    let back = split_marked(&combed).map_err(|e| format!("{e}"))?;
                    if back != (mo.clone(), me.clone()) {
                        return Err(format!("{p:?}: comb/split round trip failed"));
                    }
                }
            }
        }
    }
    Ok(())
}
