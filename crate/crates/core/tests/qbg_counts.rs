//! Edge counts of the quantum Bruhat graph from an independent
//! (signed) permutation model.

use chevalley_core::qbg::{EdgeKind, Qbg};
use chevalley_core::RootSystem;

fn permutations(n: usize) -> Vec<Vec<i64>> {
    fn go(cur: &mut Vec<i64>, used: &mut Vec<bool>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v as i64 + 1);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn inversions(w: &[i64]) -> i64 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

fn classify(lx: i64, ly: i64, ht: i64, counts: &mut (usize, usize)) {
    if ly == lx + 1 {
        counts.0 += 1;
    } else if ly == lx - 2 * ht + 1 {
        counts.1 += 1;
    }
}

/// Type A_{n-1}: roots e_i - e_j, x s_α swaps positions i and j.
fn type_a_counts(n: usize) -> (usize, usize) {
    let mut counts = (0, 0);
    for x in permutations(n) {
        for i in 0..n {
            for j in i + 1..n {
                let mut y = x.clone();
                y.swap(i, j);
                classify(inversions(&x), inversions(&y), (j - i) as i64, &mut counts);
            }
        }
    }
    counts
}

fn d_length(w: &[i64]) -> i64 {
    let mut c = inversions(w);
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] + w[j] < 0 {
                c += 1;
            }
        }
    }
    c
}

/// Type D_n: signed permutations with an even number of sign changes, with
/// simple roots e_2 - e_1, …, e_n - e_{n-1}, e_1 + e_2 so that the length is
/// inv + #{i<j : w(i)+w(j) < 0}.
fn type_d_counts(n: usize) -> (usize, usize) {
    let mut counts = (0, 0);
    for p in permutations(n) {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() % 2 == 1 {
                continue;
            }
            let x: Vec<i64> = p.iter().enumerate().map(|(k, &v)| if mask & (1 << k) != 0 { -v } else { v }).collect();
            for i in 0..n {
                for j in i + 1..n {
                    // e_j - e_i
                    let mut y = x.clone();
                    y.swap(i, j);
                    classify(d_length(&x), d_length(&y), (j - i) as i64, &mut counts);
                    // e_i + e_j
                    let mut y = x.clone();
                    y[i] = -x[j];
                    y[j] = -x[i];
                    classify(d_length(&x), d_length(&y), (i + j) as i64, &mut counts);
                }
            }
        }
    }
    counts
}

fn engine_counts(name: &str) -> (usize, usize) {
    let rs = RootSystem::from_name(name).unwrap();
    let g = Qbg::new(&rs).unwrap();
    (g.count(EdgeKind::Bruhat), g.count(EdgeKind::Quantum))
}

#[test]
fn a3_edge_counts() {
    let want = type_a_counts(4);
    assert_eq!(want, (58, 46));
    assert_eq!(engine_counts("A3"), want);
}

#[test]
fn a4_edge_counts() {
    assert_eq!(engine_counts("A4"), type_a_counts(5));
}

#[test]
fn d4_edge_counts() {
    let want = type_d_counts(4);
    assert_eq!(want, (790, 546));
    assert_eq!(engine_counts("D4"), want);
}
