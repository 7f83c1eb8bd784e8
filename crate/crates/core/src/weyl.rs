//! Weyl group elements, coset representatives and the data attached to a
//! minuscule weight.
//!
//! An element is stored as its matrix on fundamental-weight coordinates
//! together with its matrix on simple-root coordinates. Because the pairing
//! of roots with weights is the plain dot product, the two matrices are
//! inverse-transposes of each other, which makes inversion free.
//! Equality, hashing and ordering go through the key `w(ρ)`, which determines
//! `w` uniquely.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem, Weight};

#[derive(Clone, Debug)]
pub struct WeylElt {
    rank: usize,
    fund: Vec<i64>,
    root: Vec<i64>,
    key: Weight,
    length: usize,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by length first, then by key.
impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.length.cmp(&other.length).then_with(|| other.key.cmp(&self.key))
    }
}

fn matmul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

fn transpose(n: usize, a: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j];
        }
    }
    out
}

fn matvec(n: usize, a: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n).map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum()).collect()
}

impl WeylElt {
    fn from_matrices(rs: &RootSystem, fund: Vec<i64>, root: Vec<i64>) -> Self {
        let n = rs.rank();
        let key = Weight((0..n).map(|i| fund[i * n..(i + 1) * n].iter().sum()).collect());
        let length = rs.positive_roots().iter().filter(|a| rs.pair_root_weight(a, &key) < 0).count();
        WeylElt { rank: n, fund, root, key, length }
    }

    pub fn identity(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let mut id = vec![0; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        WeylElt { rank: n, fund: id.clone(), root: id, key: rs.rho(), length: 0 }
    }

    /// The reflection `s_α`.
    pub fn reflection(rs: &RootSystem, alpha: &Root) -> Result<Self> {
        if !rs.is_root(alpha) {
            return Err(Error::NotARoot(alpha.0.clone()));
        }
        let n = rs.rank();
        let af = rs.root_to_weight(alpha);
        let mut fund = vec![0; n * n];
        let mut root = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let d = i64::from(i == j);
                // λ ↦ λ - (α·λ) α on fundamental coordinates
                fund[i * n + j] = d - af.0[i] * alpha.0[j];
                // c ↦ c - (α, c) α on root coordinates
                root[i * n + j] = d - alpha.0[i] * af.0[j];
            }
        }
        Ok(Self::from_matrices(rs, fund, root))
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        Self::reflection(rs, &rs.simple_root(i)).expect("simple roots are roots")
    }

    /// `s_{a_1} s_{a_2} ⋯ s_{a_k}` for a word of 0-based node indices.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs);
        for &i in word.iter().rev() {
            if i >= rs.rank() {
                return Err(Error::IndexOutOfRange { index: i + 1, max: rs.rank() });
            }
            w = w.left_mul_simple(rs, i);
        }
        Ok(w)
    }

    /// The element with `w(ρ) = key`.
    pub fn from_key(rs: &RootSystem, key: &Weight) -> Result<Self> {
        rs.check_rank(key.rank())?;
        let (dom, applied) = rs.dominant_representative(key);
        if dom != rs.rho() {
            return Err(Error::Parse(format!("{key} is not in the orbit of rho")));
        }
        Self::from_word(rs, &applied)
    }

    pub fn longest(rs: &RootSystem) -> Self {
        Self::from_key(rs, &-rs.rho()).expect("-rho is in the orbit of rho")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `w(ρ)` in fundamental coordinates.
    pub fn key(&self) -> &Weight {
        &self.key
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn compose(&self, rs: &RootSystem, other: &WeylElt) -> WeylElt {
        let n = self.rank;
        Self::from_matrices(rs, matmul(n, &self.fund, &other.fund), matmul(n, &self.root, &other.root))
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElt {
        let n = self.rank;
        Self::from_matrices(rs, transpose(n, &self.root), transpose(n, &self.fund))
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(matvec(self.rank, &self.fund, &w.0))
    }

    pub fn apply_root(&self, r: &Root) -> Root {
        Root(matvec(self.rank, &self.root, &r.0))
    }

    /// `w^{-1}(λ)` without forming the inverse.
    pub fn apply_inverse(&self, w: &Weight) -> Weight {
        // (w^{-1})_fund = (w_root)^T
        let n = self.rank;
        Weight((0..n).map(|i| (0..n).map(|j| self.root[j * n + i] * w.0[j]).sum()).collect())
    }

    pub fn apply_inverse_root(&self, r: &Root) -> Root {
        let n = self.rank;
        Root((0..n).map(|i| (0..n).map(|j| self.fund[j * n + i] * r.0[j]).sum()).collect())
    }

    /// `s_α w`.
    pub fn left_mul_reflection(&self, rs: &RootSystem, alpha: &Root) -> WeylElt {
        let n = self.rank;
        let af = rs.root_to_weight(alpha);
        // fund' = F - af (α^T F); root' = R - α (af^T R)
        let mut fund = self.fund.clone();
        let mut root = self.root.clone();
        for j in 0..n {
            let a: i64 = (0..n).map(|k| alpha.0[k] * self.fund[k * n + j]).sum();
            let b: i64 = (0..n).map(|k| af.0[k] * self.root[k * n + j]).sum();
            for i in 0..n {
                fund[i * n + j] -= af.0[i] * a;
                root[i * n + j] -= alpha.0[i] * b;
            }
        }
        Self::from_matrices(rs, fund, root)
    }

    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> WeylElt {
        self.left_mul_reflection(rs, &rs.simple_root(i))
    }

    pub fn right_mul_simple(&self, rs: &RootSystem, i: usize) -> WeylElt {
        self.compose(rs, &Self::simple(rs, i))
    }

    /// `s_i w < w`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.key.0[i] < 0
    }

    /// `w s_i < w`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.rank;
        (0..n).map(|k| self.root[k * n + i]).sum::<i64>() < 0
    }

    /// Lexicographically smallest reduced word (0-based indices), built by
    /// repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let cm = rs.cartan_matrix();
        let mut key = self.key.clone();
        let mut word = Vec::with_capacity(self.length);
        while let Some(i) = key.0.iter().position(|&c| c < 0) {
            let c = key.0[i];
            for (j, row) in cm.iter().enumerate() {
                key.0[j] -= c * row[i];
            }
            word.push(i);
        }
        word
    }

    /// `Inv(w) = Δ⁺ ∩ w(-Δ⁺)`, as indices into the positive-root list.
    pub fn inversion_indices(&self, rs: &RootSystem) -> Vec<usize> {
        rs.positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, a)| rs.pair_root_weight(a, &self.key) < 0)
            .map(|(k, _)| k)
            .collect()
    }

    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Root> {
        self.inversion_indices(rs).into_iter().map(|k| rs.positive_roots()[k].clone()).collect()
    }

    /// Whether the positive root `α` lies in `Inv(w)`.
    pub fn is_inversion(&self, rs: &RootSystem, alpha: &Root) -> bool {
        alpha.is_positive() && rs.pair_root_weight(alpha, &self.key) < 0
    }

    /// Minimal representative of the coset `w W_J`.
    pub fn min_coset_rep(&self, rs: &RootSystem, j: &[usize]) -> WeylElt {
        let mut w = self.clone();
        while let Some(&i) = j.iter().find(|&&i| w.has_right_descent(i)) {
            w = w.right_mul_simple(rs, i);
        }
        w
    }

    /// Bruhat order `self ≤ other`, by descending along the lex-min reduced
    /// word of `other` (the subword property in its greedy form).
    pub fn bruhat_le(&self, rs: &RootSystem, other: &WeylElt) -> bool {
        let mut u = self.clone();
        let mut w = other.clone();
        loop {
            if u.length > w.length {
                return false;
            }
            if w.length == 0 {
                return u.length == 0;
            }
            let i = (0..self.rank).find(|&i| w.has_left_descent(i)).expect("nontrivial element has a descent");
            if u.has_left_descent(i) {
                u = u.left_mul_simple(rs, i);
            }
            w = w.left_mul_simple(rs, i);
        }
    }

    /// Human-readable 1-based word, `e` for the identity.
    pub fn word_string(&self, rs: &RootSystem) -> String {
        format_word(&self.reduced_word(rs))
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// An element `w t_ξ` of `W ⋉ Q`; `ξ` is stored as a weight lying in `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElt {
    pub w: WeylElt,
    pub xi: Weight,
}

impl AffineWeylElt {
    pub fn new(rs: &RootSystem, w: WeylElt, xi: Weight) -> Result<Self> {
        rs.check_rank(xi.rank())?;
        if !rs.in_root_lattice(&xi) {
            return Err(Error::Parse(format!("translation {xi} is not in the root lattice")));
        }
        Ok(Self { w, xi })
    }

    pub fn finite(rs: &RootSystem, w: WeylElt) -> Self {
        Self { w, xi: rs.zero_weight() }
    }

    pub fn display(&self, rs: &RootSystem) -> String {
        let mut s = self.w.word_string(rs);
        if !self.xi.is_zero() {
            let c = rs.root_lattice_coords(&self.xi).expect("translation in Q");
            let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!(" | t: {}", c.join(",")));
        }
        s
    }
}

/// Enumerates the whole group when it is small enough.
#[derive(Debug, Clone)]
pub struct WeylTable {
    elements: Vec<WeylElt>,
    index: HashMap<Weight, usize>,
}

/// Upper bound on `|W|` for full enumeration.
pub const MAX_TABLE_ORDER: u64 = 60_000;

pub fn group_order(rs: &RootSystem) -> u64 {
    use crate::root_system::Family;
    let t = rs.cartan_type();
    let n = t.rank() as u64;
    let fact = |k: u64| (1..=k).product::<u64>();
    match t.family() {
        Family::A => fact(n + 1),
        Family::D => (1u64 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
    }
}

impl WeylTable {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let order = group_order(rs);
        if order > MAX_TABLE_ORDER {
            return Err(Error::TooLarge(format!("Weyl group of {} (order {order})", rs.cartan_type())));
        }
        let id = WeylElt::identity(rs);
        let mut index = HashMap::new();
        index.insert(id.key.clone(), 0);
        let mut elements = vec![id];
        let mut k = 0;
        while k < elements.len() {
            for i in 0..rs.rank() {
                if elements[k].has_left_descent(i) {
                    continue;
                }
                let next = elements[k].left_mul_simple(rs, i);
                if !index.contains_key(&next.key) {
                    index.insert(next.key.clone(), elements.len());
                    elements.push(next);
                }
            }
            k += 1;
        }
        debug_assert_eq!(elements.len() as u64, order);
        elements.sort();
        let index = elements.iter().enumerate().map(|(k, w)| (w.key.clone(), k)).collect();
        Ok(Self { elements, index })
    }

    /// Elements ordered by length, then key.
    pub fn elements(&self) -> &[WeylElt] {
        &self.elements
    }

    pub fn index_of(&self, w: &WeylElt) -> Option<usize> {
        self.index.get(&w.key).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// The data `(x, y, β, γ)` attached to a minuscule weight `λ = x ϖ_k`,
/// with `⌊w∘⌋ = y x` in `W^J`, `J = I \ {k}`.
#[derive(Debug, Clone)]
pub struct MinusculeDatum {
    pub lambda: Weight,
    /// 0-based node of the dominant weight in the orbit of `λ`.
    pub k: usize,
    pub x: WeylElt,
    pub y: WeylElt,
    pub w0_min: WeylElt,
    /// `x = s_{a_1} ⋯ s_{a_l}`, so `j_r = a_{l+1-r}`.
    pub x_word: Vec<usize>,
    /// `y = s_{b_1} ⋯ s_{b_m}`, so `i_s = b_s`.
    pub y_word: Vec<usize>,
    /// `β_1, …, β_l`.
    pub beta: Vec<Root>,
    /// `γ_1, …, γ_m`.
    pub gamma: Vec<Root>,
}

impl MinusculeDatum {
    /// Builds the datum with lex-min reduced words for `x` and `y`.
    pub fn new(rs: &RootSystem, lambda: &Weight) -> Result<Self> {
        let (k, x, y, w0_min) = Self::elements(rs, lambda)?;
        let xw = x.reduced_word(rs);
        let yw = y.reduced_word(rs);
        Self::assemble(rs, lambda, k, x, y, w0_min, xw, yw)
    }

    /// Same as [`Self::new`] but with caller-chosen reduced words
    /// (`x = s_{a_1}⋯s_{a_l}`, `y = s_{b_1}⋯s_{b_m}`).
    pub fn with_words(rs: &RootSystem, lambda: &Weight, x_word: &[usize], y_word: &[usize]) -> Result<Self> {
        let (k, x, y, w0_min) = Self::elements(rs, lambda)?;
        let xw = WeylElt::from_word(rs, x_word)?;
        let yw = WeylElt::from_word(rs, y_word)?;
        if xw != x || x_word.len() != x.length() {
            return Err(Error::Parse("word is not a reduced word for x".into()));
        }
        if yw != y || y_word.len() != y.length() {
            return Err(Error::Parse("word is not a reduced word for y".into()));
        }
        Self::assemble(rs, lambda, k, x, y, w0_min, x_word.to_vec(), y_word.to_vec())
    }

    fn elements(rs: &RootSystem, lambda: &Weight) -> Result<(usize, WeylElt, WeylElt, WeylElt)> {
        rs.check_rank(lambda.rank())?;
        if rs.cartan_type().is_e8() {
            return Err(Error::UnsupportedWeight("E8 has no nonzero minuscule weights".into()));
        }
        if lambda.is_zero() {
            return Err(Error::UnsupportedWeight("the zero weight has no minuscule datum".into()));
        }
        if !rs.is_minuscule(lambda) {
            return Err(Error::UnsupportedWeight(format!("{lambda} is not minuscule")));
        }
        let (dom, applied) = rs.dominant_representative(lambda);
        let k = dom.0.iter().position(|&c| c != 0).expect("nonzero");
        debug_assert_eq!(dom, rs.fundamental_weight(k));
        let j: Vec<usize> = (0..rs.rank()).filter(|&i| i != k).collect();
        // λ = s_{i_1} ⋯ s_{i_p} ϖ_k for the reflections applied in order.
        let x = WeylElt::from_word(rs, &applied)?.min_coset_rep(rs, &j);
        let w0_min = WeylElt::longest(rs).min_coset_rep(rs, &j);
        let y = w0_min.compose(rs, &x.inverse(rs));
        if y.length() + x.length() != w0_min.length() {
            return Err(Error::Internal("l(y) + l(x) != l(w0^J)".into()));
        }
        Ok((k, x, y, w0_min))
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        rs: &RootSystem,
        lambda: &Weight,
        k: usize,
        x: WeylElt,
        y: WeylElt,
        w0_min: WeylElt,
        x_word: Vec<usize>,
        y_word: Vec<usize>,
    ) -> Result<Self> {
        let l = x_word.len();
        // β_r = s_{a_1} ⋯ s_{a_{l-r}} (α_{a_{l-r+1}})
        let mut beta = Vec::with_capacity(l);
        for r in 1..=l {
            let prefix = WeylElt::from_word(rs, &x_word[..l - r])?;
            beta.push(prefix.apply_root(&rs.simple_root(x_word[l - r])));
        }
        // γ_s = s_{b_m} ⋯ s_{b_{s+1}} (α_{b_s})
        let m = y_word.len();
        let mut gamma = Vec::with_capacity(m);
        for s in 1..=m {
            let suffix: Vec<usize> = y_word[s..].iter().rev().copied().collect();
            let pre = WeylElt::from_word(rs, &suffix)?;
            gamma.push(pre.apply_root(&rs.simple_root(y_word[s - 1])));
        }
        Ok(Self { lambda: lambda.clone(), k, x, y, w0_min, x_word, y_word, beta, gamma })
    }

    pub fn l(&self) -> usize {
        self.beta.len()
    }

    pub fn m(&self) -> usize {
        self.gamma.len()
    }

    pub fn n(&self) -> usize {
        self.l() + self.m()
    }

    /// `η = (β_l, …, β_1, γ_1, …, γ_m)`.
    pub fn eta(&self) -> Vec<Root> {
        self.beta.iter().rev().chain(self.gamma.iter()).cloned().collect()
    }

    /// `ℓ⁻_{λ,r}(w)` (`Sign::Minus`, `1 ≤ r ≤ l`) or `ℓ⁺_{λ,s}(w)`
    /// (`Sign::Plus`, `1 ≤ s ≤ m`).
    pub fn ell_partial(&self, rs: &RootSystem, w: &WeylElt, index: usize, sign: Sign) -> Result<usize> {
        let list = match sign {
            Sign::Minus => &self.beta,
            Sign::Plus => &self.gamma,
        };
        if index == 0 || index > list.len() {
            return Err(Error::IndexOutOfRange { index, max: list.len() });
        }
        Ok(list[index - 1..].iter().filter(|r| w.is_inversion(rs, r)).count())
    }
}

/// `ℓ^±_λ(w)`: inversions of `w` pairing to `±1` with `λ`.
pub fn ell_lambda(rs: &RootSystem, w: &WeylElt, lambda: &Weight, sign: Sign) -> Result<usize> {
    if !rs.is_minuscule(lambda) {
        return Err(Error::UnsupportedWeight(format!("{lambda} is not minuscule")));
    }
    let target = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    Ok(w.inversion_set(rs).iter().filter(|a| rs.pair_root_weight(a, lambda) == target).count())
}

/// Inversion set as a sorted set of positive-root indices.
pub fn inversion_index_set(rs: &RootSystem, w: &WeylElt) -> BTreeSet<usize> {
    w.inversion_indices(rs).into_iter().collect()
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    #[test]
    fn w0_involution_matches_longest_element() {
        for name in ["A1", "A4", "D4", "D5", "D6", "E6", "E7"] {
            let r = rs(name);
            let w0 = WeylElt::longest(&r);
            for i in 0..r.rank() {
                let f = r.fundamental_weight(i);
                assert_eq!(w0.apply(&f), r.w0_weight(&f), "{name}");
                assert_eq!(w0.apply_root(&r.simple_root(i)), r.w0_root(&r.simple_root(i)), "{name}");
            }
        }
    }

    #[test]
    fn group_laws() {
        let r = rs("A2");
        let s1 = WeylElt::simple(&r, 0);
        assert!(s1.compose(&r, &s1).is_identity());
        let w = WeylElt::from_word(&r, &[0, 1]).unwrap();
        assert!(w.compose(&r, &w.inverse(&r)).is_identity());
        let w0 = WeylElt::longest(&r);
        assert_eq!(w0.apply(&r.fundamental_weight(0)), -&r.fundamental_weight(1));
        assert_eq!(w.apply_root(&r.simple_root(0)), r.simple_root(1));
        assert_eq!(w.apply_inverse(&w.apply(&r.rho())), r.rho());
    }

    #[test]
    fn inversion_sets() {
        let r = rs("A2");
        assert!(WeylElt::identity(&r).inversion_set(&r).is_empty());
        assert_eq!(WeylElt::longest(&r).inversion_set(&r).len(), 3);
        let w = WeylElt::from_word(&r, &[0, 1]).unwrap();
        let mut inv = w.inversion_set(&r);
        inv.sort();
        assert_eq!(inv, vec![Root(vec![1, 0]), Root(vec![1, 1])]);
    }

    #[test]
    fn reduced_words() {
        let r = rs("A2");
        assert!(WeylElt::identity(&r).reduced_word(&r).is_empty());
        assert_eq!(WeylElt::longest(&r).reduced_word(&r), vec![0, 1, 0]);
        let r3 = rs("A3");
        assert_eq!(WeylElt::simple(&r3, 1).reduced_word(&r3), vec![1]);
    }

    #[test]
    fn coset_reps() {
        let r = rs("A2");
        let w0 = WeylElt::longest(&r);
        assert_eq!(w0.min_coset_rep(&r, &[1]), WeylElt::from_word(&r, &[1, 0]).unwrap());
        assert!(WeylElt::simple(&r, 1).min_coset_rep(&r, &[1]).is_identity());
        assert_eq!(w0.min_coset_rep(&r, &[]), w0);
    }

    #[test]
    fn minuscule_data_examples() {
        let r = rs("A2");
        let d = MinusculeDatum::new(&r, &r.fundamental_weight(0)).unwrap();
        assert_eq!(d.l(), 0);
        assert_eq!(d.y, WeylElt::from_word(&r, &[1, 0]).unwrap());
        assert_eq!(d.gamma, vec![Root(vec![1, 1]), Root(vec![1, 0])]);

        let eps2 = r.reflect(&r.simple_root(0), &r.fundamental_weight(0)).unwrap();
        let d = MinusculeDatum::new(&r, &eps2).unwrap();
        assert_eq!(d.x, WeylElt::simple(&r, 0));
        assert_eq!(d.beta, vec![Root(vec![1, 0])]);
        assert_eq!(d.y, WeylElt::simple(&r, 1));
        assert_eq!(d.gamma, vec![Root(vec![0, 1])]);

        let r1 = rs("A1");
        let d = MinusculeDatum::new(&r1, &r1.fundamental_weight(0)).unwrap();
        assert!(d.beta.is_empty());
        assert_eq!(d.gamma, vec![Root(vec![1])]);
    }

    #[test]
    fn minuscule_datum_errors() {
        let r = rs("A2");
        assert!(matches!(MinusculeDatum::new(&r, &r.rho()), Err(Error::UnsupportedWeight(_))));
        assert!(matches!(MinusculeDatum::new(&r, &r.zero_weight()), Err(Error::UnsupportedWeight(_))));
        let e8 = rs("E8");
        assert!(matches!(MinusculeDatum::new(&e8, &e8.fundamental_weight(7)), Err(Error::UnsupportedWeight(_))));
    }

    #[test]
    fn ell_lambda_examples() {
        let r = rs("A2");
        let w1 = r.fundamental_weight(0);
        let w0 = WeylElt::longest(&r);
        assert_eq!(ell_lambda(&r, &WeylElt::identity(&r), &w1, Sign::Plus).unwrap(), 0);
        assert_eq!(ell_lambda(&r, &w0, &w1, Sign::Minus).unwrap(), 0);
        assert_eq!(ell_lambda(&r, &w0, &w1, Sign::Plus).unwrap(), 2);
        assert!(ell_lambda(&r, &w0, &r.rho(), Sign::Plus).is_err());
    }

    #[test]
    fn ell_partial_examples() {
        let r = rs("A2");
        let eps2 = r.reflect(&r.simple_root(0), &r.fundamental_weight(0)).unwrap();
        let d = MinusculeDatum::new(&r, &eps2).unwrap();
        assert_eq!(d.ell_partial(&r, &WeylElt::identity(&r), 1, Sign::Minus).unwrap(), 0);
        assert_eq!(d.ell_partial(&r, &WeylElt::longest(&r), 1, Sign::Minus).unwrap(), 1);
        assert!(d.ell_partial(&r, &WeylElt::longest(&r), 2, Sign::Minus).is_err());
        let d1 = MinusculeDatum::new(&r, &r.fundamental_weight(0)).unwrap();
        assert_eq!(d1.ell_partial(&r, &WeylElt::simple(&r, 1), 2, Sign::Plus).unwrap(), 0);
        assert!(d1.ell_partial(&r, &WeylElt::simple(&r, 1), 0, Sign::Plus).is_err());
    }

    #[test]
    fn table_orders() {
        for (name, order) in [("A1", 2), ("A3", 24), ("D4", 192), ("D5", 1920)] {
            let r = rs(name);
            assert_eq!(WeylTable::new(&r).unwrap().len(), order);
            assert_eq!(group_order(&r), order as u64);
        }
        assert!(WeylTable::new(&rs("E7")).is_err());
    }

    #[test]
    fn bruhat_order_matches_subword_enumeration() {
        let r = rs("A3");
        let table = WeylTable::new(&r).unwrap();
        for w in table.elements() {
            let word = w.reduced_word(&r);
            // all subwords of the reduced word
            let mut below = BTreeSet::new();
            for mask in 0u32..(1 << word.len()) {
                let sub: Vec<usize> =
                    word.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &s)| s).collect();
                below.insert(WeylElt::from_word(&r, &sub).unwrap().key().clone());
            }
            for u in table.elements() {
                assert_eq!(u.bruhat_le(&r, w), below.contains(u.key()));
            }
        }
    }

    #[test]
    fn lengths_and_forms() {
        let r = rs("D4");
        let table = WeylTable::new(&r).unwrap();
        let rho = r.rho();
        for w in table.elements().iter().step_by(7) {
            assert_eq!(w.reduced_word(&r).len(), w.length());
            assert_eq!(WeylElt::from_word(&r, &w.reduced_word(&r)).unwrap(), *w);
            let a = r.fundamental_weight(1);
            assert_eq!(r.pairing(&w.apply(&a), &w.apply(&rho)), r.pairing(&a, &rho));
        }
    }
}
