//! Brute-force oracles shared by the integration tests. Written directly
//! from the definitions, without calling into the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// All permutations of `1..=n` by Heap's algorithm (order differs from the
/// library's lexicographic sweep on purpose).
pub fn heap_perms(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn bonds(p: &[usize]) -> usize {
    p.windows(2).filter(|w| w[0].abs_diff(w[1]) == 1).count()
}

pub fn vsep(p: &[usize]) -> BTreeSet<usize> {
    let mut s = BTreeSet::new();
    for i in 1..p.len().saturating_sub(1) {
        if p[i - 1].abs_diff(p[i + 1]) == 1 {
            s.insert(p[i]);
        }
    }
    s
}

pub fn hsep(p: &[usize]) -> BTreeSet<usize> {
    let where_is = |v: usize| p.iter().position(|&x| x == v).unwrap();
    let n = p.len();
    let mut s = BTreeSet::new();
    for a in 2..n {
        if where_is(a - 1).abs_diff(where_is(a + 1)) == 1 {
            s.insert(a);
        }
    }
    s
}

pub fn sep(p: &[usize]) -> usize {
    vsep(p).union(&hsep(p)).count()
}

/// Some two entries a knight's move apart on the permutation matrix.
pub fn knight_attack(p: &[usize]) -> bool {
    for i in 0..p.len() {
        for j in 0..p.len() {
            let (dx, dy) = (i.abs_diff(j), p[i].abs_diff(p[j]));
            if (dx, dy) == (1, 2) || (dx, dy) == (2, 1) {
                return true;
            }
        }
    }
    false
}

pub fn standardize(w: &[usize]) -> Vec<usize> {
    w.iter().map(|&x| 1 + w.iter().filter(|&&y| y < x).count()).collect()
}

pub fn children(p: &[usize]) -> BTreeSet<Vec<usize>> {
    (0..p.len())
        .map(|i| {
            let mut w = p.to_vec();
            w.remove(i);
            standardize(&w)
        })
        .collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// counts[m] = #{p in S_n : stat(p) = m}
pub fn distribution(n: usize, stat: impl Fn(&[usize]) -> usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for p in heap_perms(n) {
        counts[stat(&p)] += 1;
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}
