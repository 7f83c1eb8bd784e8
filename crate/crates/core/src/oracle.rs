//! Independent computation of the `v → 0` limit of the row
//! `κ(G⁻_{β_l}⋯G⁻_{β_1}) · t^{-(ρ,λ)}κ(t_λ) · κ(G⁺_{γ_1}⋯G⁺_{γ_m})`
//! by exact per-path arithmetic in factored form, and comparison with the
//! closed expression as a sum over quantum walks.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::heisenberg::{h_mul, HeisElt, LaurentQ, ModuleClass};
use crate::root_system::{Root, RootSystem, Weight};
use crate::walks::{enumerate_quantum_walks, Move, Walk};
use crate::weyl::{MinusculeDatum, Sign, WeylElt};

/// `1 + sign · v^a X^x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub sign: i64,
    pub a: i64,
    pub x: Weight,
}

/// `coeff · v^{v_exp} X^x · Π num / Π den`. Denominator factors always have
/// `a > 0`, so they are units at `v = 0`; numerator factors may have `a = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredTerm {
    pub coeff: i64,
    pub v_exp: i64,
    pub x: Weight,
    pub num: Vec<Factor>,
    pub den: Vec<Factor>,
}

/// A monomial `c v^e X^x`.
type Mono = (i64, i64, Weight);

impl FactoredTerm {
    pub fn one(rank: usize) -> Self {
        Self { coeff: 1, v_exp: 0, x: Weight::zero(rank), num: Vec::new(), den: Vec::new() }
    }

    /// Normalizes a binomial `m1 + m2` by pulling out its lower-order
    /// monomial.
    pub fn binomial(m1: Mono, m2: Mono) -> Self {
        let (lo, hi) = if m1.1 <= m2.1 { (m1, m2) } else { (m2, m1) };
        let (c, e, x) = lo;
        // hi / lo must be ±v^a X^y
        debug_assert!(hi.0 % c == 0 && (hi.0 / c).abs() == 1);
        let f = Factor { sign: hi.0 / c, a: hi.1 - e, x: &hi.2 - &x };
        Self { coeff: c, v_exp: e, x, num: vec![f], den: Vec::new() }
    }

    pub fn mul(&self, other: &FactoredTerm) -> FactoredTerm {
        FactoredTerm {
            coeff: self.coeff * other.coeff,
            v_exp: self.v_exp + other.v_exp,
            x: &self.x + &other.x,
            num: self.num.iter().chain(&other.num).cloned().collect(),
            den: self.den.iter().chain(&other.den).cloned().collect(),
        }
    }

    pub fn div(&self, other: &FactoredTerm) -> Result<FactoredTerm> {
        if other.coeff.abs() != 1 || !other.den.is_empty() {
            return Err(Error::Internal("only unit binomials can be divided by".into()));
        }
        if other.num.iter().any(|f| f.a <= 0) {
            return Err(Error::Internal("denominator factor is not a unit at v = 0".into()));
        }
        Ok(FactoredTerm {
            coeff: self.coeff * other.coeff,
            v_exp: self.v_exp - other.v_exp,
            x: &self.x - &other.x,
            num: self.num.clone(),
            den: self.den.iter().chain(&other.num).cloned().collect(),
        })
    }

    /// The v-order.
    pub fn order(&self) -> i64 {
        self.v_exp
    }

    /// Value of `v^{-order} · self` at `v = 0`, as a polynomial in `X`.
    pub fn leading_value(&self) -> HeisElt {
        let r = self.x.rank();
        let mut out = HeisElt::monomial(Weight::zero(r), self.x.clone(), LaurentQ::constant(self.coeff));
        for f in self.num.iter().filter(|f| f.a == 0) {
            let g = HeisElt::one(r).add(&HeisElt::monomial(Weight::zero(r), f.x.clone(), LaurentQ::constant(f.sign)));
            out = mul_x_only(&out, &g);
        }
        out
    }
}

/// Product of two elements without translations (commutative).
fn mul_x_only(a: &HeisElt, b: &HeisElt) -> HeisElt {
    let mut out = HeisElt::zero();
    for ((_, xa), ca) in a.terms() {
        for ((t, xb), cb) in b.terms() {
            out.add_term(t.clone(), xa + xb, ca * cb);
        }
    }
    out
}

/// The entry `κ(G^±_η)_{w,u}` for `u ∈ {w, s_η w}`, with `t = v²`,
/// `β = w^{-1}η` and `c = (ρ, β)`.
pub fn kappa_g_entry(rs: &RootSystem, eta: &Root, sign: Sign, w: &WeylElt, u: &WeylElt) -> Result<FactoredTerm> {
    if !rs.is_root(eta) {
        return Err(Error::NotARoot(eta.0.clone()));
    }
    if !eta.is_positive() {
        return Err(Error::NotPositive(eta.0.clone()));
    }
    let r = rs.rank();
    let zero = Weight::zero(r);
    let beta_root = w.apply_inverse_root(eta);
    let c = beta_root.height();
    let beta = rs.root_to_weight(&beta_root);
    let tpow = match sign {
        Sign::Plus => 2,
        Sign::Minus => -2,
    };
    let diagonal = u == w;
    if !diagonal && *u != w.left_mul_reflection(rs, eta) {
        return Err(Error::Parse("column is neither w nor s_η w".into()));
    }
    let (num, den) = if diagonal {
        (
            FactoredTerm::binomial((1, tpow, zero.clone()), (-1, -2 * c, beta.clone())),
            FactoredTerm::binomial((1, 0, zero.clone()), (-1, -2 * c, beta)),
        )
    } else {
        (
            FactoredTerm::binomial((1, tpow, zero.clone()), (-1, 0, zero.clone())),
            FactoredTerm::binomial((1, 0, zero), (-1, 2 * c, -&beta)),
        )
    };
    num.div(&den)
}

/// The limit row as a map `u ↦ coefficient`, plus path bookkeeping.
#[derive(Debug, Clone)]
pub struct OracleRow {
    pub row: ModuleClass,
    pub paths: usize,
    /// Vertex sequences `w_1..w_n` of the paths with order 0.
    pub surviving: BTreeSet<Vec<Weight>>,
}

/// Computes the limit row over all `2^n` paths.
pub fn rho0_row(rs: &RootSystem, datum: &MinusculeDatum, w: &WeylElt) -> Result<OracleRow> {
    let eta = datum.eta();
    let l = datum.l();
    let lambda = &datum.lambda;
    let mut st = State { row: ModuleClass::zero(), paths: 0, surviving: BTreeSet::new() };
    let mut verts = vec![w.clone()];
    let mut left = vec![FactoredTerm::one(rs.rank())];
    path_dfs(rs, &eta, l, lambda, &mut verts, &mut left, &mut st)?;
    Ok(OracleRow { row: st.row, paths: st.paths, surviving: st.surviving })
}

struct State {
    row: ModuleClass,
    paths: usize,
    surviving: BTreeSet<Vec<Weight>>,
}

fn path_dfs(
    rs: &RootSystem,
    eta: &[Root],
    l: usize,
    lambda: &Weight,
    verts: &mut Vec<WeylElt>,
    acc: &mut Vec<FactoredTerm>,
    st: &mut State,
) -> Result<()> {
    let t = verts.len() - 1;
    if t == eta.len() {
        return finish_path(rs, l, lambda, verts, &acc[..], st);
    }
    let cur = verts[t].clone();
    let sign = if t < l { Sign::Minus } else { Sign::Plus };
    for next in [cur.clone(), cur.left_mul_reflection(rs, &eta[t])] {
        let entry = kappa_g_entry(rs, &eta[t], sign, &cur, &next)?;
        // acc[0] is the product of the G⁻ entries, acc[1] (once t ≥ l) of the G⁺ entries
        let (idx, fresh) = if t < l { (0, false) } else { (1, t == l) };
        if fresh {
            acc.push(FactoredTerm::one(rs.rank()));
        }
        let saved = acc[idx].clone();
        acc[idx] = acc[idx].mul(&entry);
        verts.push(next);
        path_dfs(rs, eta, l, lambda, verts, acc, st)?;
        verts.pop();
        acc[idx] = saved;
        if fresh {
            acc.pop();
        }
    }
    Ok(())
}

fn finish_path(
    rs: &RootSystem,
    l: usize,
    lambda: &Weight,
    verts: &[WeylElt],
    acc: &[FactoredTerm],
    st: &mut State,
) -> Result<()> {
    st.paths += 1;
    let left = &acc[0];
    let one = FactoredTerm::one(rs.rank());
    let right = acc.get(1).unwrap_or(&one);
    let mu = verts[l].apply_inverse(lambda);
    let diff = rs
        .root_lattice_coords(&(&mu - lambda))
        .ok_or_else(|| Error::Internal("w_l^{-1}λ - λ is not in the root lattice".into()))?;
    let middle_order = 2 * diff.iter().sum::<i64>();
    let order = left.order() + middle_order + right.order();
    if order < 0 {
        return Err(Error::Internal(format!("path with negative v-order {order}")));
    }
    if order > 0 {
        return Ok(());
    }
    let value = h_mul(rs, &h_mul(rs, &left.leading_value(), &HeisElt::t(mu)), &right.leading_value());
    st.row.add_term(verts.last().expect("nonempty").clone(), value);
    st.surviving.insert(verts[1..].iter().map(|v| v.key().clone()).collect());
    Ok(())
}

/// `g⁻ t_{w_l^{-1}λ} g⁺` for a quantum walk, with plain `X`.
pub fn walk_rhs_term(rs: &RootSystem, walk: &Walk) -> HeisElt {
    let r = rs.rank();
    let one = HeisElt::one(r);
    let x = |b: &Root| HeisElt::x(rs.root_to_weight(b));
    let mut gm = one.clone();
    let mut gp = one.clone();
    for t in 1..=walk.n() {
        let b = walk.inv_eta(t);
        let c = b.height();
        let f = match (t <= walk.l, walk.step_move(t)) {
            (true, Move::Stationary) if c == 1 => one.sub(&x(&-b)),
            (true, Move::Down) => x(&b).neg(),
            (false, Move::Stationary) if c == -1 => one.sub(&x(&b)),
            (false, Move::Down) => x(&b),
            (false, Move::Up) => one.neg(),
            _ => continue,
        };
        if t <= walk.l {
            gm = h_mul(rs, &gm, &f);
        } else {
            gp = h_mul(rs, &gp, &f);
        }
    }
    let mu = walk.vertex(walk.l).apply_inverse(&walk.lambda);
    h_mul(rs, &h_mul(rs, &gm, &HeisElt::t(mu)), &gp)
}

/// The closed expression for the limit row as a sum over quantum walks.
pub fn walk_sum_row(rs: &RootSystem, datum: &MinusculeDatum, w: &WeylElt) -> ModuleClass {
    let mut out = ModuleClass::zero();
    for walk in enumerate_quantum_walks(rs, datum, w) {
        out.add_term(walk.end().clone(), walk_rhs_term(rs, &walk));
    }
    out
}

#[derive(Debug, Clone)]
pub struct RowComparison {
    pub u: WeylElt,
    pub matches: bool,
    pub lhs: HeisElt,
    pub rhs: HeisElt,
}

#[derive(Debug, Clone)]
pub struct RowReport {
    pub lambda: Weight,
    pub w: WeylElt,
    pub rows: Vec<RowComparison>,
    pub paths: usize,
    /// Whether the order-0 paths are exactly the quantum walks.
    pub support_matches: bool,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.support_matches && self.rows.iter().all(|r| r.matches)
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        json!({
            "type": rs.cartan_type().to_string(),
            "lambda": self.lambda.0,
            "w": self.w.word_string(rs),
            "paths": self.paths,
            "support_matches": self.support_matches,
            "rows": self.rows.iter().map(|r| json!({
                "u": r.u.word_string(rs),
                "match": r.matches,
                "lhs": r.lhs.to_json(rs),
                "rhs": r.rhs.to_json(rs),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Compares the limit row with the sum over quantum walks.
pub fn verify_row(rs: &RootSystem, lambda: &Weight, w: &WeylElt) -> Result<RowReport> {
    let datum = MinusculeDatum::new(rs, lambda)?;
    verify_row_with_datum(rs, &datum, w)
}

pub fn verify_row_with_datum(rs: &RootSystem, datum: &MinusculeDatum, w: &WeylElt) -> Result<RowReport> {
    let lhs = rho0_row(rs, datum, w)?;
    let rhs = walk_sum_row(rs, datum, w);
    let mut us: BTreeSet<WeylElt> = lhs.row.terms().map(|(u, _)| u.clone()).collect();
    us.extend(rhs.terms().map(|(u, _)| u.clone()));
    let rows = us
        .into_iter()
        .map(|u| {
            let (a, b) = (lhs.row.get(&u), rhs.get(&u));
            RowComparison { matches: a == b, lhs: a, rhs: b, u }
        })
        .collect();
    let walks: BTreeSet<Vec<Weight>> = enumerate_quantum_walks(rs, datum, w)
        .iter()
        .map(|wk| wk.vertices[1..].iter().map(|v| v.key().clone()).collect())
        .collect();
    Ok(RowReport {
        lambda: datum.lambda.clone(),
        w: w.clone(),
        rows,
        paths: lhs.paths,
        support_matches: walks == lhs.surviving,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> RootSystem {
        RootSystem::from_name("A1").unwrap()
    }

    #[test]
    fn entry_normal_forms() {
        let r = a1();
        let e = WeylElt::identity(&r);
        let s1 = WeylElt::simple(&r, 0);
        let a = r.simple_root(0);
        // (t - t^{-1}X^α)/(1 - t^{-1}X^α): lowest term 1
        let d = kappa_g_entry(&r, &a, Sign::Plus, &e, &e).unwrap();
        assert_eq!(d.order(), 0);
        assert_eq!(d.leading_value(), HeisElt::one(1));
        // (ρ, s1 α1) = -1: lowest term t(1 - X^{-α1})
        let d = kappa_g_entry(&r, &a, Sign::Plus, &s1, &s1).unwrap();
        assert_eq!(d.order(), 2);
        let xm = HeisElt::x(r.root_to_weight(&-a.clone()));
        assert_eq!(d.leading_value(), HeisElt::one(1).sub(&xm));
        // off-diagonal minus entry from e: lowest term t^{-1}
        let d = kappa_g_entry(&r, &a, Sign::Minus, &e, &s1).unwrap();
        assert_eq!(d.order(), -2);
        assert_eq!(d.leading_value(), HeisElt::one(1));
    }

    #[test]
    fn a1_rows() {
        let r = a1();
        let w1 = r.fundamental_weight(0);
        let d = MinusculeDatum::new(&r, &w1).unwrap();
        let e = WeylElt::identity(&r);
        let s1 = WeylElt::simple(&r, 0);
        let row = rho0_row(&r, &d, &e).unwrap().row;
        let mut want = ModuleClass::zero();
        want.add_term(e.clone(), HeisElt::t(w1.clone()));
        want.add_term(s1.clone(), HeisElt::t(w1.clone()).neg());
        assert_eq!(row, want);

        let row = rho0_row(&r, &d, &s1).unwrap().row;
        let mu = -&w1;
        let xm = HeisElt::x(r.root_to_weight(&Root(vec![-1])));
        let mut want = ModuleClass::zero();
        want.add_term(s1.clone(), h_mul(&r, &HeisElt::t(mu.clone()), &HeisElt::one(1).sub(&xm)));
        want.add_term(e, h_mul(&r, &HeisElt::t(mu), &xm));
        assert_eq!(row, want);
        for w in [WeylElt::identity(&r), s1] {
            assert!(verify_row(&r, &w1, &w).unwrap().passed());
            assert!(verify_row(&r, &-&w1, &w).unwrap().passed());
        }
    }
}
