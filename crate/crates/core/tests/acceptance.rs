//! Acceptance criteria. Prints one `[PASS]` or `[FAIL]` line per criterion
//! and exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use sepstat_core::enumerate::{
    expectation_empirical, expectation_formula, full_separator_perms, max_separator_perms,
    separator_free_count, ExpectationKind,
};
use sepstat_core::gf::{bond_gf, bond_marked_gf, vertical_sep_gf, MarkerPoly};
use sepstat_core::separators::{
    comb_marked, decode_marked, encode_marked, horizontal_separators, sep_count, split_marked,
    vertical_separators, MarkedWord,
};
use sepstat_core::{Permutation, Rational, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

fn poly(counts: &[u64]) -> MarkerPoly {
    MarkerPoly::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

fn ac1() -> Outcome {
    let h = vertical_sep_gf(8);
    for n in 0..=8 {
        let expected = poly(&common::distribution(n, |p| common::vsep(p).len()));
        let row = h.coeff(n).map_err(|e| e.to_string())?;
        if *row != expected {
            return Err(format!("n={n}: series row {row} vs enumeration {expected}"));
        }
    }
    Ok("rows n=0..8 match".into())
}

fn ac2() -> Outcome {
    let b = bond_gf(8);
    for n in 0..=8 {
        let expected = poly(&common::distribution(n, common::bonds));
        let row = b.coeff(n).map_err(|e| e.to_string())?;
        if *row != expected {
            return Err(format!("n={n}: series row {row} vs enumeration {expected}"));
        }
    }
    let a3 = bond_marked_gf(8).coeff(3).map_err(|e| e.to_string())?.clone();
    if a3 != MarkerPoly::from_i64s(&[6, 8, 2]) {
        return Err(format!("[z^3] A = {a3}"));
    }
    Ok(format!("rows n=0..8 match; [z^3] A = {a3}"))
}

fn ac3() -> Outcome {
    let mut found = Vec::new();
    for n in 1..=8usize {
        let full: BTreeSet<Vec<usize>> = common::heap_perms(n)
            .into_iter()
            .filter(|p| common::sep(p) == n)
            .collect();
        let expected = if n % 4 == 0 {
            let k = n / 4;
            (1u64 << k) * common::factorial(k)
        } else {
            0
        };
        if full.len() as u64 != expected {
            return Err(format!("n={n}: {} permutations, expected {expected}", full.len()));
        }
        let listed: BTreeSet<Vec<usize>> = full_separator_perms(n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(Permutation::into_entries)
            .collect();
        if listed != full {
            return Err(format!("n={n}: library list differs from brute force"));
        }
        if n % 4 == 0 {
            let built: BTreeSet<Vec<usize>> = max_separator_perms(n / 4)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(Permutation::into_entries)
                .collect();
            if built != full {
                return Err(format!("n={n}: inflations differ from the exhaustive set"));
            }
        }
        if n == 4 && full != BTreeSet::from([vec![2, 4, 1, 3], vec![3, 1, 4, 2]]) {
            return Err(format!("n=4: {full:?}"));
        }
        found.push(full.len());
    }
    Ok(format!("counts for n=1..8: {found:?}"))
}

fn brute_mean(n: usize, stat: impl Fn(&[usize]) -> usize) -> Rational {
    let total: u64 = common::heap_perms(n).iter().map(|p| stat(p) as u64).sum();
    Rational::new(total.into(), common::factorial(n).into())
}

fn ac4() -> Outcome {
    use ExpectationKind::{Any, Both, Vertical};
    for n in 3..=8usize {
        let brute = [
            (Vertical, brute_mean(n, |p| common::vsep(p).len())),
            (
                Both,
                brute_mean(n, |p| common::vsep(p).intersection(&common::hsep(p)).count()),
            ),
            (Any, brute_mean(n, common::sep)),
        ];
        for (kind, mean) in brute {
            let formula = expectation_formula(n as u64, kind);
            let empirical = expectation_empirical(n, kind).map_err(|e| e.to_string())?;
            if formula != mean || empirical != mean {
                return Err(format!(
                    "n={n} {kind}: formula {formula}, library sweep {empirical}, brute {mean}"
                ));
            }
        }
    }
    let spots = [(Vertical, q(1, 1)), (Both, q(1, 6)), (Any, q(11, 6))];
    for (kind, value) in spots {
        if expectation_formula(4, kind) != value {
            return Err(format!("n=4 {kind}: {}", expectation_formula(4, kind)));
        }
    }
    let mut sizes: Vec<u64> = (3..=2000).collect();
    sizes.extend([10_000, 1_000_000, 1 << 40]);
    for &n in &sizes {
        let x = expectation_formula(n, Vertical);
        let y = expectation_formula(n, Both);
        let z = expectation_formula(n, Any);
        if z != &x + &x - &y {
            return Err(format!("E[Z] != 2E[X] - E[Y] at n={n}"));
        }
    }
    Ok("formula = sweep = brute for n=3..8; spot values; identity on 2001 sizes".into())
}

fn ac5() -> Outcome {
    let mut checked = 0;
    for n in 0..=7 {
        for p in common::heap_perms(n) {
            let s = perm(&p);
            let v = vertical_separators(&s);
            let h = horizontal_separators(&s);
            if v != common::vsep(&p) || h != common::hsep(&p) {
                return Err(format!("{p:?}: separator sets differ from brute force"));
            }
            let inv = s.inverse();
            if inv.entries() != common::inverse(&p) {
                return Err(format!("{p:?}: wrong inverse"));
            }
            let image: BTreeSet<usize> = v.iter().map(|&d| s.position_of(d).unwrap()).collect();
            if horizontal_separators(&inv) != image {
                return Err(format!("{p:?}: Sep_H(inverse) is not the position image of Sep_V"));
            }
            let v_image: BTreeSet<usize> = h.iter().map(|&d| s.position_of(d).unwrap()).collect();
            if vertical_separators(&inv) != v_image {
                return Err(format!("{p:?}: Sep_V(inverse) is not the position image of Sep_H"));
            }
            let r = s.reverse();
            if vertical_separators(&r) != v || horizontal_separators(&r) != h {
                return Err(format!("{p:?}: not invariant under reversal"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} permutations, zero exceptions"))
}

fn ac6() -> Outcome {
    let mut kings = 0;
    for n in 1..=7 {
        for p in common::heap_perms(n) {
            let s = perm(&p);
            let kids = s.children();
            let brute = common::children(&p);
            let listed: BTreeSet<Vec<usize>> = kids.iter().map(|c| c.entries().to_vec()).collect();
            if listed != brute || kids.len() != n - common::bonds(&p) {
                return Err(format!("{p:?}: {} children, bonds {}", kids.len(), common::bonds(&p)));
            }
            if common::bonds(&p) == 0 {
                kings += 1;
                let king_kids = brute.iter().filter(|c| common::bonds(c) == 0).count();
                let library = kids.iter().filter(|c| c.is_king()).count();
                let sep = common::sep(&p);
                if king_kids != n - sep || library != king_kids || sep_count(&s) != sep {
                    return Err(format!("{p:?}: {king_kids} king children, sep {sep}"));
                }
            }
        }
    }
    Ok(format!("all of S_1..S_7, {kings} kings"))
}

fn ac7() -> Outcome {
    let (mut encoded, mut combed) = (0u64, 0u64);
    for n in 0..=6 {
        for p in common::heap_perms(n) {
            let s = perm(&p);
            for mp in MarkedWord::all_markings(&Word::from(&s)) {
                let (lambda, sigma) = encode_marked(&mp).map_err(|e| e.to_string())?;
                let back = decode_marked(&lambda, &sigma).map_err(|e| e.to_string())?;
                if back != mp || lambda.total() != n {
                    return Err(format!("{mp:?}: encode/decode round trip failed"));
                }
                encoded += 1;
            }
            let (odd, even) = s.comb_split();
            if Permutation::comb(&odd, &even).map_err(|e| e.to_string())? != s {
                return Err(format!("{p:?}: comb of the halves differs"));
            }
            for mo in MarkedWord::all_markings(&odd) {
                for me in MarkedWord::all_markings(&even) {
                    let msp = comb_marked(&mo, &me).map_err(|e| e.to_string())?;
                    if msp.perm() != &s
                        || msp.marked_seps().len() != mo.marked_count() + me.marked_count()
                    {
                        return Err(format!("{p:?}: marks not conserved by combing"));
                    }
                    if split_marked(&msp).map_err(|e| e.to_string())? != (mo.clone(), me.clone()) {
                        return Err(format!("{p:?}: split does not invert comb"));
                    }
                    combed += 1;
                }
            }
        }
    }
    Ok(format!("{encoded} marked permutations, {combed} marked combs"))
}

fn ac8() -> Outcome {
    let mut counts = Vec::new();
    for n in 0..=8 {
        let by_knight = common::heap_perms(n)
            .iter()
            .filter(|p| !common::knight_attack(p))
            .count() as u64;
        let by_sep = common::heap_perms(n)
            .iter()
            .filter(|p| common::sep(p) == 0)
            .count() as u64;
        let library = separator_free_count(n).map_err(|e| e.to_string())?;
        if by_knight != by_sep || library != by_sep {
            return Err(format!("n={n}: knight {by_knight}, report {by_sep}, library {library}"));
        }
        counts.push(library);
    }
    if counts[1] != 1 || counts[3] != 2 {
        return Err(format!("counts {counts:?}"));
    }
    Ok(format!("counts for n=0..8: {counts:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1", "vertical separator series matches enumeration", ac1),
        ("AC2", "bond series matches enumeration", ac2),
        ("AC3", "permutations with every digit a separator", ac3),
        ("AC4", "expected separator counts", ac4),
        ("AC5", "inverse duality and reversal invariance", ac5),
        ("AC6", "children and king downsets", ac6),
        ("AC7", "marked structure round trips", ac7),
        ("AC8", "separator-free counts by two oracles", ac8),
    ];
    let mut failed = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {detail} ({secs:.2}s)");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
