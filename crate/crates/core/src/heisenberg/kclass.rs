//! Classes in the equivariant K-group, in basis form and in module form.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{fmt_coords, int_list, HeisElt, LaurentQ};
use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem, Weight};
use crate::weyl::{format_word, WeylElt};

/// `(w, ξ, μ)` standing for `[O(w t_ξ)(μ)]`; `ξ ∈ Q` is stored as a weight.
pub type BasisKey = (WeylElt, Weight, Weight);

/// A finite combination of the classes `[O(w t_ξ)(μ)]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasisClass {
    terms: BTreeMap<BasisKey, LaurentQ>,
}

/// A finite combination `Σ_w [O(w)] · h_w` with `h_w` in the Heisenberg
/// algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleClass {
    terms: BTreeMap<WeylElt, HeisElt>,
}

impl BasisClass {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `[O(w)]`.
    pub fn generator(rs: &RootSystem, w: WeylElt) -> Self {
        Self::basis(w, rs.zero_weight(), rs.zero_weight())
    }

    /// `[O(w t_ξ)(μ)]`.
    pub fn basis(w: WeylElt, xi: Weight, mu: Weight) -> Self {
        let mut out = Self::zero();
        out.add_term(w, xi, mu, LaurentQ::one());
        out
    }

    pub fn add_term(&mut self, w: WeylElt, xi: Weight, mu: Weight, c: LaurentQ) {
        if c.is_zero() {
            return;
        }
        let key = (w, xi, mu);
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

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &LaurentQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &WeylElt, xi: &Weight, mu: &Weight) -> LaurentQ {
        self.terms.get(&(w.clone(), xi.clone(), mu.clone())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &BasisClass) {
        for ((w, xi, mu), c) in &other.terms {
            self.add_term(w.clone(), xi.clone(), mu.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &BasisClass) -> BasisClass {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &BasisClass) -> BasisClass {
        self.add(&other.scale(&LaurentQ::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentQ) -> BasisClass {
        let mut out = Self::zero();
        for ((w, xi, mu), d) in &self.terms {
            out.add_term(w.clone(), xi.clone(), mu.clone(), d * c);
        }
        out
    }

    pub fn check_integral(&self) -> Result<()> {
        self.terms.values().try_for_each(LaurentQ::check_integral)
    }

    /// Right action of an element of `H`:
    /// `[O(w t_ξ)(μ)] · t_β X^ν = q^{(β,μ)} [O(w t_{ξ - w∘β})(μ + ν)]`.
    pub fn act(&self, rs: &RootSystem, h: &HeisElt) -> Result<BasisClass> {
        if !h.translations_in_q(rs) {
            return Err(Error::UnsupportedWeight("translation outside the root lattice".into()));
        }
        let mut out = Self::zero();
        for ((w, xi, mu), c) in &self.terms {
            rs.check_rank(mu.rank())?;
            for ((beta, nu), d) in h.terms() {
                rs.check_rank(beta.rank())?;
                let e = rs.pairing(beta, mu);
                out.add_term(w.clone(), xi - &rs.w0_weight(beta), mu + nu, (c * d).shift(e));
            }
        }
        out.check_integral()?;
        Ok(out)
    }

    /// `[O(w t_ξ)(μ)] = [O(w)] · t_{-w∘ξ} X^μ`.
    pub fn to_module_form(&self, rs: &RootSystem) -> Result<ModuleClass> {
        let mut out = ModuleClass::zero();
        for ((w, xi, mu), c) in &self.terms {
            if !rs.in_root_lattice(xi) {
                return Err(Error::Unreachable(format!("translation {xi} is not in the root lattice")));
            }
            out.add_term(w.clone(), HeisElt::monomial(-rs.w0_weight(xi), mu.clone(), c.clone()));
        }
        Ok(out)
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((w, xi, mu), c)| {
                json!({
                    "w": one_based(&w.reduced_word(rs)),
                    "xi": rs.root_lattice_coords(xi).unwrap_or_else(|| xi.0.clone()),
                    "mu": mu.0,
                    "coeff": c.to_json(),
                })
            })
            .collect();
        json!({ "form": "basis", "terms": terms })
    }

    pub fn from_json(rs: &RootSystem, v: &Value) -> Result<Self> {
        let terms = v["terms"].as_array().ok_or_else(|| Error::Parse("expected `terms`".into()))?;
        let mut out = Self::zero();
        for t in terms {
            let w = word_from_json(rs, &t["w"])?;
            let xi = Root(int_list(&t["xi"])?);
            rs.check_rank(xi.0.len())?;
            let mu = Weight(int_list(&t["mu"])?);
            rs.check_rank(mu.rank())?;
            out.add_term(w, rs.root_to_weight(&xi), mu, LaurentQ::from_json(&t["coeff"])?);
        }
        Ok(out)
    }

    /// One line per term: `coeff · [O(word | t: ξ)(μ)]`.
    pub fn display(&self, rs: &RootSystem) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut lines = Vec::new();
        for ((w, xi, mu), c) in &self.terms {
            let mut idx = w.word_string(rs);
            if !xi.is_zero() {
                let r = rs.root_lattice_coords(xi).unwrap_or_else(|| xi.0.clone());
                idx.push_str(&format!(" | t: {}", fmt_coords(&r)));
            }
            lines.push(format!("{c} · [O({idx})({})]", fmt_coords(&mu.0)));
        }
        lines.join("\n")
    }
}

impl ModuleClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(rs: &RootSystem, w: WeylElt) -> Self {
        let mut out = Self::zero();
        out.add_term(w, HeisElt::one(rs.rank()));
        out
    }

    pub fn add_term(&mut self, w: WeylElt, h: HeisElt) {
        if h.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        e.add_assign(&h);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElt, &HeisElt)> {
        self.terms.iter()
    }

    pub fn get(&self, w: &WeylElt) -> HeisElt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ModuleClass) -> ModuleClass {
        let mut out = self.clone();
        for (w, h) in &other.terms {
            out.add_term(w.clone(), h.clone());
        }
        out
    }

    /// Right multiplication of every coefficient by `h`.
    pub fn act(&self, rs: &RootSystem, h: &HeisElt) -> ModuleClass {
        let mut out = Self::zero();
        for (w, g) in &self.terms {
            out.add_term(w.clone(), super::h_mul(rs, g, h));
        }
        out
    }

    pub fn to_basis_form(&self, rs: &RootSystem) -> Result<BasisClass> {
        let mut out = BasisClass::zero();
        for (w, h) in &self.terms {
            for ((t, x), c) in h.terms() {
                if !rs.in_root_lattice(t) {
                    return Err(Error::Unreachable(format!("translation {t} is not in the root lattice")));
                }
                out.add_term(w.clone(), -rs.w0_weight(t), x.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, h)| json!({ "w": one_based(&w.reduced_word(rs)), "h": h.to_json(rs) }))
            .collect();
        json!({ "form": "module", "terms": terms })
    }

    pub fn from_json(rs: &RootSystem, v: &Value) -> Result<Self> {
        let terms = v["terms"].as_array().ok_or_else(|| Error::Parse("expected `terms`".into()))?;
        let mut out = Self::zero();
        for t in terms {
            out.add_term(word_from_json(rs, &t["w"])?, HeisElt::from_json(rs, &t["h"])?);
        }
        Ok(out)
    }

    pub fn display(&self, rs: &RootSystem) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, h)| format!("{} ↦ {}", format_word(&w.reduced_word(rs)), h.display(rs)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|i| i + 1).collect()
}

fn word_from_json(rs: &RootSystem, v: &Value) -> Result<WeylElt> {
    let word = int_list(v)?
        .into_iter()
        .map(|i| {
            if i < 1 || i as usize > rs.rank() {
                Err(Error::IndexOutOfRange { index: i.max(0) as usize, max: rs.rank() })
            } else {
                Ok(i as usize - 1)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    WeylElt::from_word(rs, &word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_examples() {
        let a1 = RootSystem::from_name("A1").unwrap();
        let e = WeylElt::identity(&a1);
        let w1 = a1.fundamental_weight(0);
        let c = BasisClass::generator(&a1, e.clone());
        let got = c.act(&a1, &HeisElt::x(w1.clone())).unwrap();
        assert_eq!(got, BasisClass::basis(e.clone(), a1.zero_weight(), w1.clone()));

        let al = a1.root_to_weight(&a1.simple_root(0));
        let got = got.act(&a1, &HeisElt::t(al.clone())).unwrap();
        let mut want = BasisClass::zero();
        want.add_term(e.clone(), al.clone(), w1.clone(), LaurentQ::q_pow(1));
        assert_eq!(got, want);

        assert_eq!(c.act(&a1, &HeisElt::one(1)).unwrap(), c);
        assert!(c.act(&a1, &HeisElt::t(w1)).is_err());
    }

    #[test]
    fn form_conversions() {
        let a1 = RootSystem::from_name("A1").unwrap();
        let e = WeylElt::identity(&a1);
        let m = ModuleClass::generator(&a1, e.clone());
        assert_eq!(m.to_basis_form(&a1).unwrap(), BasisClass::generator(&a1, e.clone()));

        let al = a1.root_to_weight(&a1.simple_root(0));
        let w1 = a1.fundamental_weight(0);
        let mut m = ModuleClass::zero();
        m.add_term(e.clone(), HeisElt::monomial(al.clone(), w1.clone(), LaurentQ::one()));
        let b = m.to_basis_form(&a1).unwrap();
        // -w∘α1 = α1 in A1, and no power of q appears
        assert_eq!(b, BasisClass::basis(e, al, w1));
        assert_eq!(b.to_module_form(&a1).unwrap(), m);
    }

    #[test]
    fn json_round_trip() {
        let a2 = RootSystem::from_name("A2").unwrap();
        let mut b = BasisClass::zero();
        b.add_term(
            WeylElt::from_word(&a2, &[0, 1]).unwrap(),
            a2.root_to_weight(&Root(vec![1, 1])),
            a2.fundamental_weight(1),
            LaurentQ::q_pow(-2),
        );
        b.add_term(WeylElt::longest(&a2), a2.zero_weight(), a2.zero_weight(), LaurentQ::constant(3));
        assert_eq!(BasisClass::from_json(&a2, &b.to_json(&a2)).unwrap(), b);
        let m = b.to_module_form(&a2).unwrap();
        assert_eq!(ModuleClass::from_json(&a2, &m.to_json(&a2)).unwrap(), m);
    }
}
