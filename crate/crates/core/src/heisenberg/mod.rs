//! The q-Heisenberg algebra spanned by `t_μ X^ν` and its right action on
//! K-classes.

mod kclass;
mod laurent;

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem, Weight};

pub use kclass::{BasisClass, BasisKey, ModuleClass};
pub use laurent::LaurentQ;

/// A finite sum of `c(q) t_μ X^ν`, kept in normal form, keyed by `(μ, ν)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisElt {
    terms: BTreeMap<(Weight, Weight), LaurentQ>,
}

impl HeisElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), Weight::zero(rank), LaurentQ::one())
    }

    pub fn monomial(t: Weight, x: Weight, c: LaurentQ) -> Self {
        let mut out = Self::zero();
        out.add_term(t, x, c);
        out
    }

    pub fn t(mu: Weight) -> Self {
        let r = mu.rank();
        Self::monomial(mu, Weight::zero(r), LaurentQ::one())
    }

    pub fn x(nu: Weight) -> Self {
        let r = nu.rank();
        Self::monomial(Weight::zero(r), nu, LaurentQ::one())
    }

    pub fn scalar(rank: usize, c: LaurentQ) -> Self {
        Self::monomial(Weight::zero(rank), Weight::zero(rank), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `((μ, ν), c)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&(Weight, Weight), &LaurentQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Weight, x: &Weight) -> LaurentQ {
        self.terms.get(&(t.clone(), x.clone())).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, t: Weight, x: Weight, c: LaurentQ) {
        if c.is_zero() {
            return;
        }
        let key = (t, x);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &HeisElt) -> HeisElt {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &HeisElt) {
        for ((t, x), c) in &other.terms {
            self.add_term(t.clone(), x.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &HeisElt) -> HeisElt {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HeisElt {
        self.scale(&LaurentQ::constant(-1))
    }

    pub fn scale(&self, c: &LaurentQ) -> HeisElt {
        let mut out = HeisElt::zero();
        for ((t, x), d) in &self.terms {
            out.add_term(t.clone(), x.clone(), d * c);
        }
        out
    }

    /// Whether every translation lies in `Q`, so the element is in `H`.
    pub fn translations_in_q(&self, rs: &RootSystem) -> bool {
        self.terms.keys().all(|(t, _)| rs.in_root_lattice(t))
    }

    pub fn check_integral(&self) -> Result<()> {
        self.terms.values().try_for_each(LaurentQ::check_integral)
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((t, x), c)| {
                    json!({
                        "t": translation_coords(rs, t),
                        "x": x.0,
                        "coeff": c.to_json(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(rs: &RootSystem, v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("expected a term list".into()))?;
        let mut out = Self::zero();
        for term in arr {
            let t = translation_from_json(rs, &term["t"])?;
            let x = Weight(int_list(&term["x"])?);
            rs.check_rank(x.rank())?;
            out.add_term(t, x, LaurentQ::from_json(&term["coeff"])?);
        }
        Ok(out)
    }

    /// Readable form such as `q t[1] X(1) - X(-1)`; translations in root
    /// coordinates when they lie in `Q`.
    pub fn display(&self, rs: &RootSystem) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for ((t, x), c) in &self.terms {
            let mut mon = Vec::new();
            if !t.is_zero() {
                match rs.root_lattice_coords(t) {
                    Some(r) => mon.push(format!("t{}", Root(r))),
                    None => mon.push(format!("t({})", fmt_coords(&t.0))),
                }
            }
            if !x.is_zero() {
                mon.push(format!("X({})", fmt_coords(&x.0)));
            }
            let mon = mon.join(" ");
            let coeff = if c.is_one() && !mon.is_empty() {
                String::new()
            } else if c.len() == 1 {
                c.to_string()
            } else {
                format!("({c})")
            };
            parts.push(match (coeff.is_empty(), mon.is_empty()) {
                (true, _) => mon,
                (false, true) => coeff,
                (false, false) => format!("{coeff} {mon}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

pub(crate) fn fmt_coords(v: &[i64]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// Translation coordinates for serialization: root coordinates when the
/// translation lies in `Q`, otherwise fundamental coordinates tagged as such.
fn translation_coords(rs: &RootSystem, t: &Weight) -> Value {
    match rs.root_lattice_coords(t) {
        Some(r) => json!(r),
        None => json!({ "weight": t.0 }),
    }
}

fn translation_from_json(rs: &RootSystem, v: &Value) -> Result<Weight> {
    let w = if let Some(obj) = v.as_object() {
        Weight(int_list(obj.get("weight").unwrap_or(&Value::Null))?)
    } else {
        let r = Root(int_list(v)?);
        rs.check_rank(r.0.len())?;
        rs.root_to_weight(&r)
    };
    rs.check_rank(w.rank())?;
    Ok(w)
}

pub(crate) fn int_list(v: &Value) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an integer list".into()))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| Error::Parse("expected an integer".into())))
        .collect()
}

/// `(t_a X^b)(t_c X^d) = q^{(c,b)} t_{a+c} X^{b+d}`.
pub fn h_mul(rs: &RootSystem, a: &HeisElt, b: &HeisElt) -> HeisElt {
    let mut out = HeisElt::zero();
    for ((ta, xa), ca) in &a.terms {
        for ((tb, xb), cb) in &b.terms {
            let e: Rational64 = rs.pairing(tb, xa);
            out.add_term(ta + tb, xa + xb, (ca * cb).shift(e));
        }
    }
    out
}

/// `X̃^β = q t_β X^β`.
pub fn tilde_x(rs: &RootSystem, beta: &Root) -> Result<HeisElt> {
    if !rs.is_root(beta) {
        return Err(Error::NotARoot(beta.0.clone()));
    }
    let b = rs.root_to_weight(beta);
    Ok(HeisElt::monomial(b.clone(), b, LaurentQ::q_pow(1)))
}
