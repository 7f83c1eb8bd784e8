//! Type A specifics: `ε`-coordinates, permutations, the closed form for
//! `e^{ε_i} · [O(w∘)]`, the first q-Toda operator and the diagram automorphism.

use crate::error::{Error, Result};
use crate::heisenberg::{h_mul, BasisClass, HeisElt, LaurentQ};
use crate::root_system::{Family, RootSystem, Weight};
use crate::weyl::WeylElt;

fn require_a(rs: &RootSystem) -> Result<usize> {
    if rs.cartan_type().family() == Family::A {
        Ok(rs.rank())
    } else {
        Err(Error::RequiresTypeA(rs.cartan_type().to_string()))
    }
}

/// `ε_i = ϖ_i - ϖ_{i-1}` for `1 ≤ i ≤ n+1`, with `ϖ_0 = ϖ_{n+1} = 0`.
pub fn epsilon_weight(rs: &RootSystem, i: usize) -> Result<Weight> {
    let n = require_a(rs)?;
    if i == 0 || i > n + 1 {
        return Err(Error::IndexOutOfRange { index: i, max: n + 1 });
    }
    let mut w = rs.zero_weight();
    if i <= n {
        w.0[i - 1] += 1;
    }
    if i >= 2 {
        w.0[i - 2] -= 1;
    }
    Ok(w)
}

/// `ε_i - ε_j` as a weight.
fn eps_diff(rs: &RootSystem, i: usize, j: usize) -> Result<Weight> {
    Ok(&epsilon_weight(rs, i)? - &epsilon_weight(rs, j)?)
}

/// One-line notation `[w(1), …, w(n+1)]` with `w ε_i = ε_{w(i)}`.
pub fn to_permutation(rs: &RootSystem, w: &WeylElt) -> Result<Vec<usize>> {
    let n = require_a(rs)?;
    let eps: Vec<Weight> = (1..=n + 1).map(|i| epsilon_weight(rs, i)).collect::<Result<_>>()?;
    eps.iter()
        .map(|e| {
            let img = w.apply(e);
            eps.iter().position(|f| *f == img).map(|j| j + 1).ok_or_else(|| Error::Internal("ε not permuted".into()))
        })
        .collect()
}

/// The element acting on `ε`-coordinates by the permutation `perm`.
pub fn from_permutation(rs: &RootSystem, perm: &[usize]) -> Result<WeylElt> {
    let n = require_a(rs)?;
    let mut seen = vec![false; n + 2];
    if perm.len() != n + 1 {
        return Err(Error::RankMismatch { expected: n + 1, got: perm.len() });
    }
    for &p in perm {
        if p == 0 || p > n + 1 || seen[p] {
            return Err(Error::Parse(format!("{perm:?} is not a permutation of 1..{}", n + 1)));
        }
        seen[p] = true;
    }
    // ρ ≡ Σ (n+1-i) ε_i, so w(ρ) has ε-coefficient n+1-i at position w(i)
    let mut c = vec![0i64; n + 1];
    for (i, &p) in perm.iter().enumerate() {
        c[p - 1] = (n - i) as i64;
    }
    let key = Weight((0..n).map(|k| c[k] - c[k + 1]).collect());
    WeylElt::from_key(rs, &key)
}

/// The cycle `c_1 → c_2 → … → c_k → c_1` on `1..=n+1`.
fn cycle(n: usize, cyc: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n + 1).collect();
    for (k, &a) in cyc.iter().enumerate() {
        p[a - 1] = cyc[(k + 1) % cyc.len()];
    }
    p
}

fn inverse_perm(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        q[v - 1] = i + 1;
    }
    q
}

/// The closed form for `e^{ε_i} · [O(w∘)]` in `SL(n+1)`.
pub fn closed_form_w0(rs: &RootSystem, i: usize) -> Result<BasisClass> {
    let n = require_a(rs)?;
    if i == 0 || i > n + 1 {
        return Err(Error::IndexOutOfRange { index: i, max: n + 1 });
    }
    let w0 = WeylElt::longest(rs);
    let neg_w0 = |v: &Weight| -rs.w0_weight(v);
    let mut out = BasisClass::zero();
    out.add_term(w0.clone(), rs.zero_weight(), -epsilon_weight(rs, i)?, LaurentQ::one());
    if i < n + 1 {
        out.add_term(
            w0.clone(),
            neg_w0(&eps_diff(rs, i, i + 1)?),
            -epsilon_weight(rs, i + 1)?,
            LaurentQ::q_pow(1).scale(-1),
        );
    }
    // subsets {i_1 < … < i_a} of {1, …, i-1}
    for mask in 1u32..(1 << (i - 1)) {
        let subset: Vec<usize> = (1..i).filter(|k| mask & (1 << (k - 1)) != 0).collect();
        let a = subset.len();
        let mut cyc = subset.clone();
        cyc.push(i);
        let g = inverse_perm(&cycle(n, &cyc));
        let elt = from_permutation(rs, &g)?.compose(rs, &w0);
        let sign = if a.is_multiple_of(2) { 1 } else { -1 };
        out.add_term(elt, neg_w0(&eps_diff(rs, subset[0], i)?), -epsilon_weight(rs, i)?, LaurentQ::constant(sign));
    }
    // subsets {j_1 < … < j_b} of {i+1, …, n+1}
    let top = n + 1 - i;
    for mask in 1u32..(1 << top) {
        let subset: Vec<usize> = (i + 1..=n + 1).filter(|k| mask & (1 << (k - i - 1)) != 0).collect();
        let b = subset.len();
        let jb = *subset.last().expect("nonempty");
        let mut cyc = vec![i];
        cyc.extend(&subset);
        let g = inverse_perm(&cycle(n, &cyc));
        let elt = from_permutation(rs, &g)?.compose(rs, &w0);
        let sign = if (b - 1).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(elt, neg_w0(&eps_diff(rs, i, jb)?), -epsilon_weight(rs, jb)?, LaurentQ::q_pow(1).scale(sign));
    }
    Ok(out)
}

/// `X^{-w∘ε_1} + Σ_{i=2}^{n+1} X^{-w∘ε_i} (1 - q t_{-w∘α_{i-1}} X^{-w∘α_{i-1}})`.
pub fn q_toda_operator(rs: &RootSystem) -> Result<HeisElt> {
    let n = require_a(rs)?;
    let neg_w0 = |v: &Weight| -rs.w0_weight(v);
    let mut out = HeisElt::x(neg_w0(&epsilon_weight(rs, 1)?));
    for i in 2..=n + 1 {
        let a = neg_w0(&rs.root_to_weight(&rs.simple_root(i - 2)));
        let tail = HeisElt::one(n).sub(&HeisElt::monomial(a.clone(), a, LaurentQ::q_pow(1)));
        out.add_assign(&h_mul(rs, &HeisElt::x(neg_w0(&epsilon_weight(rs, i)?)), &tail));
    }
    Ok(out)
}

/// Compares the symmetrization of `e^{ϖ_1}` with the q-Toda operator.
pub fn q_toda_check(rs: &RootSystem) -> Result<(bool, HeisElt, HeisElt)> {
    require_a(rs)?;
    let got = crate::chevalley::spherical_symmetrization(rs, 0)?;
    let want = q_toda_operator(rs)?;
    Ok((got == want, got, want))
}

/// `[O(w t_β)(μ)] ↦ [O(w∘ w w∘ t_{-w∘β})(-w∘μ)]`.
pub fn apply_diagram_automorphism(rs: &RootSystem, c: &BasisClass) -> Result<BasisClass> {
    require_a(rs)?;
    let w0 = WeylElt::longest(rs);
    let mut out = BasisClass::zero();
    for ((w, xi, mu), f) in c.terms() {
        let v = w0.compose(rs, w).compose(rs, &w0);
        out.add_term(v, -rs.w0_weight(xi), -rs.w0_weight(mu), f.clone());
    }
    Ok(out)
}
