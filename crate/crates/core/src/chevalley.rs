//! Inverse Chevalley formulas: multiplication of K-classes by `e^λ`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::heisenberg::{h_mul, tilde_x, BasisClass, HeisElt, LaurentQ, ModuleClass};
use crate::root_system::{Root, RootSystem, Weight};
use crate::walks::{enumerate_decorations, enumerate_quantum_walks, pivot_weight, Move, Walk};
use crate::weyl::{MinusculeDatum, WeylElt};

fn check_weight(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check_rank(lambda.rank())?;
    if rs.cartan_type().is_e8() {
        return Err(Error::UnsupportedWeight("E8 has no nonzero minuscule weights".into()));
    }
    Ok(())
}

/// `X̃^β`, or zero when truncating.
fn xt(rs: &RootSystem, beta: &Root, truncate: bool) -> HeisElt {
    if truncate {
        HeisElt::zero()
    } else {
        tilde_x(rs, beta).expect("walk labels are roots")
    }
}

/// The factors `g̃⁻` and `g̃⁺` of a quantum walk.
pub fn walk_factors(rs: &RootSystem, walk: &Walk, truncate: bool) -> (HeisElt, HeisElt) {
    let one = HeisElt::one(rs.rank());
    let mut gm = one.clone();
    let mut gp = one.clone();
    for t in 1..=walk.n() {
        let beta = rs.w0_root(&walk.inv_eta(t));
        let c = walk.rho_pairing(t);
        let f = match (t <= walk.l, walk.step_move(t)) {
            (true, Move::Stationary) if c == 1 => one.sub(&xt(rs, &-beta, truncate)),
            (true, Move::Down) => xt(rs, &beta, truncate).neg(),
            (false, Move::Stationary) if c == -1 => one.sub(&xt(rs, &beta, truncate)),
            (false, Move::Down) => xt(rs, &beta, truncate),
            (false, Move::Up) => one.neg(),
            _ => continue,
        };
        if t <= walk.l {
            gm = h_mul(rs, &gm, &f);
        } else {
            gp = h_mul(rs, &gp, &f);
        }
    }
    (gm, gp)
}

/// `e^λ · [O(w)]` in module form, as a sum over quantum walks of
/// `[O(w_n)] · g̃⁺ X^{-w∘ w_l^{-1} λ} g̃⁻`.
pub fn inverse_chevalley_algebraic(rs: &RootSystem, lambda: &Weight, w: &WeylElt) -> Result<ModuleClass> {
    check_weight(rs, lambda)?;
    let datum = MinusculeDatum::new(rs, lambda)?;
    Ok(algebraic_row(rs, &datum, w, false))
}

/// The algebraic row for a prescribed datum; `truncate` sets every `X̃` to 0.
pub fn algebraic_row(rs: &RootSystem, datum: &MinusculeDatum, w: &WeylElt, truncate: bool) -> ModuleClass {
    let mut out = ModuleClass::zero();
    for walk in enumerate_quantum_walks(rs, datum, w) {
        let (gm, gp) = walk_factors(rs, &walk, truncate);
        let x = HeisElt::x(pivot_weight(rs, &walk));
        let h = h_mul(rs, &h_mul(rs, &gp, &x), &gm);
        out.add_term(walk.end().clone(), h);
    }
    out
}

/// `e^λ · [O(w)]` in basis form, as a signed sum over decorated quantum walks.
pub fn decorated_row(rs: &RootSystem, datum: &MinusculeDatum, w: &WeylElt) -> Result<BasisClass> {
    let mut out = BasisClass::zero();
    for walk in enumerate_quantum_walks(rs, datum, w) {
        for d in enumerate_decorations(rs, &walk)? {
            out.add_term(walk.end().clone(), d.translation(rs), d.bundle(rs), LaurentQ::monomial(d.deg.into(), d.sign));
        }
    }
    Ok(out)
}

/// `e^λ · c` for minuscule `λ` and a basis-form class `c`. Classes with a
/// translation or a twist are reduced to `[O(w)]` through the right action,
/// which commutes with multiplication by `e^λ`.
pub fn inverse_chevalley(rs: &RootSystem, lambda: &Weight, c: &BasisClass) -> Result<BasisClass> {
    check_weight(rs, lambda)?;
    if lambda.is_zero() {
        return Ok(c.clone());
    }
    let datum = MinusculeDatum::new(rs, lambda)?;
    inverse_chevalley_with_datum(rs, &datum, c)
}

pub fn inverse_chevalley_with_datum(rs: &RootSystem, datum: &MinusculeDatum, c: &BasisClass) -> Result<BasisClass> {
    let mut rows: HashMap<WeylElt, BasisClass> = HashMap::new();
    let mut out = BasisClass::zero();
    for ((w, xi, mu), f) in c.terms() {
        if !rows.contains_key(w) {
            rows.insert(w.clone(), decorated_row(rs, datum, w)?);
        }
        let h = HeisElt::monomial(-rs.w0_weight(xi), mu.clone(), f.clone());
        out.add_assign(&rows[w].act(rs, &h)?);
    }
    out.check_integral()?;
    Ok(out)
}

/// Writes `λ` as a sum of nonzero minuscule weights. Greedy: repeatedly
/// subtract the minuscule weight closest to the remainder while that brings
/// it strictly closer to 0; whatever is left is split through a coset
/// representative and simple roots `α_i = μ - s_i μ`.
pub fn minuscule_decomposition(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    check_weight(rs, lambda)?;
    let mins = rs.minuscule_weights();
    let mut parts = Vec::new();
    let mut r = lambda.clone();
    loop {
        if r.is_zero() {
            return Ok(parts);
        }
        let norm = rs.pairing(&r, &r);
        let best = mins
            .iter()
            .map(|m| {
                let d = &r - m;
                (rs.pairing(&d, &d), m)
            })
            .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
        match best {
            Some((n, m)) if n < norm => {
                parts.push(m.clone());
                r -= m;
            }
            _ => break,
        }
    }
    let nu = mins.iter().find(|m| rs.in_root_lattice(&(&r - *m))).cloned().unwrap_or_else(|| rs.zero_weight());
    if !nu.is_zero() {
        parts.push(nu.clone());
    }
    let coords = rs.root_lattice_coords(&(&r - &nu)).ok_or_else(|| Error::Internal("coset split failed".into()))?;
    for (i, &c) in coords.iter().enumerate() {
        let mu = mins
            .iter()
            .find(|m| m.0[i] == 1)
            .ok_or_else(|| Error::Internal(format!("no minuscule weight pairs to 1 with α{}", i + 1)))?;
        let smu = rs.reflect(&rs.simple_root(i), mu)?;
        // α_i = μ + (-s_i μ), -α_i = s_i μ + (-μ)
        let (a, b) = if c > 0 { (mu.clone(), -&smu) } else { (smu, -mu) };
        for _ in 0..c.abs() {
            parts.push(a.clone());
            parts.push(b.clone());
        }
    }
    Ok(parts)
}

/// `e^λ · c` for arbitrary `λ ∈ P`.
pub fn scalar_multiply_general(rs: &RootSystem, lambda: &Weight, c: &BasisClass) -> Result<BasisClass> {
    let parts = minuscule_decomposition(rs, lambda)?;
    let mut cur = c.clone();
    for p in parts {
        cur = inverse_chevalley(rs, &p, &cur)?;
    }
    Ok(cur)
}

/// `D_i [O(w t_ξ)(μ)] = [O(s_i w t_ξ)(μ)]` if `s_i w < w`, unchanged otherwise.
pub fn demazure(rs: &RootSystem, i: usize, c: &BasisClass) -> Result<BasisClass> {
    if i >= rs.rank() {
        return Err(Error::IndexOutOfRange { index: i + 1, max: rs.rank() });
    }
    let mut out = BasisClass::zero();
    for ((w, xi, mu), f) in c.terms() {
        let v = if w.has_left_descent(i) { w.left_mul_simple(rs, i) } else { w.clone() };
        out.add_term(v, xi.clone(), mu.clone(), f.clone());
    }
    Ok(out)
}

/// Drops every term with a nonzero translation part.
pub fn truncate_classical(c: &BasisClass) -> BasisClass {
    let mut out = BasisClass::zero();
    for ((w, xi, mu), f) in c.terms() {
        if xi.is_zero() {
            out.add_term(w.clone(), xi.clone(), mu.clone(), f.clone());
        }
    }
    out
}

/// The classical row `e^λ · [O(w)]` in `K_H(G/B)`, obtained by setting
/// every `X̃` to zero.
pub fn classical_row(rs: &RootSystem, lambda: &Weight, w: &WeylElt) -> Result<ModuleClass> {
    check_weight(rs, lambda)?;
    let datum = MinusculeDatum::new(rs, lambda)?;
    Ok(algebraic_row(rs, &datum, w, true))
}

/// `Σ_{λ ∈ W ϖ_k} e^λ · [O(e)]`, which must be `[O(e)] · f` for a single
/// Heisenberg element `f`; returns `f`.
pub fn spherical_symmetrization(rs: &RootSystem, k: usize) -> Result<HeisElt> {
    if k >= rs.rank() {
        return Err(Error::IndexOutOfRange { index: k + 1, max: rs.rank() });
    }
    let wk = rs.fundamental_weight(k);
    if !rs.is_minuscule(&wk) {
        return Err(Error::UnsupportedWeight(format!("ϖ{} is not minuscule", k + 1)));
    }
    let e = WeylElt::identity(rs);
    let start = BasisClass::generator(rs, e.clone());
    let mut total = BasisClass::zero();
    for lambda in rs.orbit(&wk) {
        total.add_assign(&inverse_chevalley(rs, &lambda, &start)?);
    }
    let m = total.to_module_form(rs)?;
    if let Some((w, _)) = m.terms().find(|(w, _)| !w.is_identity()) {
        return Err(Error::Internal(format!("symmetrization has support at {}", w.word_string(rs))));
    }
    Ok(m.get(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> RootSystem {
        RootSystem::from_name("A1").unwrap()
    }

    #[test]
    fn a1_identity_row() {
        let r = a1();
        let w1 = r.fundamental_weight(0);
        let e = WeylElt::identity(&r);
        let m = inverse_chevalley_algebraic(&r, &w1, &e).unwrap();
        let mut want = ModuleClass::zero();
        want.add_term(e, HeisElt::x(w1.clone()));
        want.add_term(WeylElt::simple(&r, 0), HeisElt::x(w1).neg());
        assert_eq!(m, want);
    }

    #[test]
    fn a1_s1_row() {
        let r = a1();
        let w1 = r.fundamental_weight(0);
        let s1 = WeylElt::simple(&r, 0);
        let e = WeylElt::identity(&r);
        let m = inverse_chevalley_algebraic(&r, &w1, &s1).unwrap();
        let a = r.simple_root(0);
        let x = HeisElt::x(-&w1);
        let xt = tilde_x(&r, &a).unwrap();
        let mut want = ModuleClass::zero();
        want.add_term(s1.clone(), h_mul(&r, &HeisElt::one(1).sub(&xt), &x));
        want.add_term(e.clone(), h_mul(&r, &xt, &x));
        assert_eq!(m, want);

        // [O(s1)(-ϖ1)] - q [O(s1 t_α1)(ϖ1)] + q [O(t_α1)(ϖ1)]
        let b = inverse_chevalley(&r, &w1, &BasisClass::generator(&r, s1.clone())).unwrap();
        let al = r.root_to_weight(&a);
        let mut want = BasisClass::zero();
        want.add_term(s1.clone(), r.zero_weight(), -&w1, LaurentQ::one());
        want.add_term(s1, al.clone(), w1.clone(), LaurentQ::q_pow(1).scale(-1));
        want.add_term(e, al, w1, LaurentQ::q_pow(1));
        assert_eq!(b, want);
        assert_eq!(m.to_basis_form(&r).unwrap(), b);
    }

    #[test]
    fn a1_negative_weight() {
        let r = a1();
        let w1 = r.fundamental_weight(0);
        let s1 = WeylElt::simple(&r, 0);
        let b = inverse_chevalley(&r, &-&w1, &BasisClass::generator(&r, s1.clone())).unwrap();
        let al = r.root_to_weight(&r.simple_root(0));
        let mut want = BasisClass::zero();
        want.add_term(s1, r.zero_weight(), w1.clone(), LaurentQ::one());
        want.add_term(WeylElt::identity(&r), al, w1, LaurentQ::constant(-1));
        assert_eq!(b, want);
    }

    #[test]
    fn a1_symmetrization() {
        let r = a1();
        let w1 = r.fundamental_weight(0);
        let al = r.root_to_weight(&r.simple_root(0));
        let f = spherical_symmetrization(&r, 0).unwrap();
        let tail = HeisElt::one(1).sub(&HeisElt::monomial(al.clone(), al, LaurentQ::q_pow(1)));
        let want = HeisElt::x(w1.clone()).add(&h_mul(&r, &HeisElt::x(-&w1), &tail));
        assert_eq!(f, want);
    }

    #[test]
    fn demazure_examples() {
        let r = a1();
        let e = WeylElt::identity(&r);
        let s1 = WeylElt::simple(&r, 0);
        let c = BasisClass::generator(&r, s1);
        assert_eq!(demazure(&r, 0, &c).unwrap(), BasisClass::generator(&r, e.clone()));
        let c = BasisClass::generator(&r, e);
        assert_eq!(demazure(&r, 0, &c).unwrap(), c);
        assert!(demazure(&r, 1, &c).is_err());
    }

    #[test]
    fn decompositions_sum_back() {
        for name in ["A1", "A3", "D4", "D5", "E6", "E7"] {
            let r = RootSystem::from_name(name).unwrap();
            let mins = r.minuscule_weights();
            let mut tests = vec![r.rho(), r.zero_weight(), r.root_to_weight(r.highest_root())];
            tests.extend((0..r.rank()).map(|i| r.fundamental_weight(i)));
            for lam in tests {
                let parts = minuscule_decomposition(&r, &lam).unwrap();
                let sum = parts.iter().fold(r.zero_weight(), |a, b| &a + b);
                assert_eq!(sum, lam, "{name}");
                assert!(parts.iter().all(|p| mins.contains(p)));
            }
        }
        let e8 = RootSystem::from_name("E8").unwrap();
        assert!(minuscule_decomposition(&e8, &e8.rho()).is_err());
    }

    #[test]
    fn zero_weight_is_identity() {
        let r = RootSystem::from_name("A2").unwrap();
        let c = BasisClass::generator(&r, WeylElt::longest(&r));
        assert_eq!(scalar_multiply_general(&r, &r.zero_weight(), &c).unwrap(), c);
        assert_eq!(inverse_chevalley(&r, &r.zero_weight(), &c).unwrap(), c);
    }
}
