//! Simply-laced root data.
//!
//! Weights are stored in fundamental-weight coordinates, roots in
//! simple-root coordinates. The bilinear form is normalized so that every root
//! has square length 2, which identifies roots with coroots; the pairing of a
//! root with a weight is then the dot product of the two coordinate vectors.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_e8(&self) -> bool {
        self.family == Family::E && self.rank == 8
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `A1`..`A9`, `D4`..`D8`, `E6`, `E7`, `E8` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCartanType(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let in_range = match family {
            Family::A => (1..=9).contains(&rank),
            Family::D => (4..=8).contains(&rank),
            Family::E => (6..=8).contains(&rank),
        };
        if !in_range {
            return Err(bad());
        }
        Self::new(family, rank)
    }
}

/// An integral weight in fundamental-weight coordinates: `coords[i]` is the
/// pairing with the simple coroot `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// Fundamental weight, 0-based node index.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w:")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Roots are either nonnegative or nonpositive in every coordinate.
    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    /// The positive root among `±self`.
    pub fn abs(&self) -> Root {
        if self.is_positive() {
            self.clone()
        } else {
            -self
        }
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `e * C^{-1}`, integral by the choice of `e`.
    inv_cartan_scaled: Vec<Vec<i64>>,
    lattice_constant: i64,
    positive: Vec<Root>,
    positive_weights: Vec<Weight>,
    index: HashMap<Vec<i64>, usize>,
    theta: Root,
}

fn dynkin_edges(t: CartanType) -> Vec<(usize, usize)> {
    let n = t.rank;
    match t.family {
        Family::A => (0..n - 1).map(|i| (i, i + 1)).collect(),
        Family::D => {
            let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            e
        }
        // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
        Family::E => {
            let mut e = vec![(0, 2), (1, 3), (2, 3)];
            e.extend((3..n - 1).map(|i| (i, i + 1)));
            e
        }
    }
}

fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrix is invertible");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                #[allow(clippy::needless_range_loop)]
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank;
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in dynkin_edges(cartan_type) {
            cartan[i][j] = -1;
            cartan[j][i] = -1;
        }
        let inv = invert_rational(&cartan);
        let lattice_constant = inv.iter().flatten().fold(1i64, |acc, x| acc.lcm(x.denom()));
        let inv_cartan_scaled =
            inv.iter().map(|row| row.iter().map(|x| (x * lattice_constant).to_integer()).collect()).collect();

        // Closure by height: in simply-laced type, beta + alpha_i is a root
        // exactly when (beta, alpha_i) = -1.
        let mut positive: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let mut index: HashMap<Vec<i64>, usize> = positive.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        let mut frontier: Vec<usize> = (0..n).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &k in &frontier {
                for i in 0..n {
                    let ip: i64 = (0..n).map(|j| positive[k].0[j] * cartan[j][i]).sum();
                    if ip == -1 {
                        let mut c = positive[k].0.clone();
                        c[i] += 1;
                        if !index.contains_key(&c) {
                            index.insert(c.clone(), positive.len());
                            next.push(positive.len());
                            positive.push(Root(c));
                        }
                    }
                }
            }
            frontier = next;
        }
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        let index = positive.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        let theta = positive.last().cloned().expect("nonempty root system");
        let positive_weights = positive
            .iter()
            .map(|r| Weight((0..n).map(|i| (0..n).map(|j| cartan[i][j] * r.0[j]).sum()).collect()))
            .collect();
        RootSystem {
            cartan_type,
            rank: n,
            cartan,
            inv_cartan_scaled,
            lattice_constant,
            positive,
            positive_weights,
            index,
            theta,
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(Self::new(name.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Inverse Cartan matrix entry `(C^{-1})_{ij} = (ϖ_i, ϖ_j)`.
    pub fn inverse_cartan(&self, i: usize, j: usize) -> Rational64 {
        Rational64::new(self.inv_cartan_scaled[i][j], self.lattice_constant)
    }

    /// Smallest positive `e` with `e (P, P) ⊂ Z`.
    pub fn lattice_constant(&self) -> i64 {
        self.lattice_constant
    }

    /// Positive roots, sorted by height.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots as weights, in the same order as [`Self::positive_roots`].
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_weights
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    pub fn highest_root(&self) -> &Root {
        &self.theta
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.rank)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    pub fn check_rank(&self, len: usize) -> Result<()> {
        if len == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, got: len })
        }
    }

    /// Index of a positive root in [`Self::positive_roots`].
    pub fn positive_index(&self, root: &Root) -> Option<usize> {
        self.index.get(&root.0).copied()
    }

    pub fn is_root(&self, v: &Root) -> bool {
        self.positive_index(&v.abs()).is_some() && !v.0.iter().all(|&c| c == 0)
    }

    pub fn root_to_weight(&self, root: &Root) -> Weight {
        let n = self.rank;
        Weight((0..n).map(|i| (0..n).map(|j| self.cartan[i][j] * root.0[j]).sum()).collect())
    }

    /// Simple-root coordinates of a weight, if it lies in the root lattice.
    pub fn root_lattice_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        let n = self.rank;
        let e = self.lattice_constant;
        (0..n)
            .map(|i| {
                let s: i64 = (0..n).map(|j| self.inv_cartan_scaled[i][j] * w.0[j]).sum();
                if s % e == 0 {
                    Some(s / e)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.root_lattice_coords(w).is_some()
    }

    /// Interprets a weight as a root, failing if it is not one.
    pub fn weight_as_root(&self, w: &Weight) -> Result<Root> {
        self.check_rank(w.rank())?;
        match self.root_lattice_coords(w).map(Root) {
            Some(r) if self.is_root(&r) => Ok(r),
            _ => Err(Error::NotARoot(w.0.clone())),
        }
    }

    /// The normalized invariant form on `P`.
    pub fn pairing(&self, a: &Weight, b: &Weight) -> Rational64 {
        Rational64::new(self.pairing_scaled(a, b), self.lattice_constant)
    }

    /// `e * (a, b)`, always an integer.
    pub fn pairing_scaled(&self, a: &Weight, b: &Weight) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            let mut t = 0;
            for j in 0..n {
                t += self.inv_cartan_scaled[i][j] * b.0[j];
            }
            s += a.0[i] * t;
        }
        s
    }

    /// Checked variant of [`Self::pairing`].
    pub fn try_pairing(&self, a: &Weight, b: &Weight) -> Result<Rational64> {
        self.check_rank(a.rank())?;
        self.check_rank(b.rank())?;
        Ok(self.pairing(a, b))
    }

    /// `(α, λ)` for a root given in root coordinates.
    pub fn pair_root_weight(&self, root: &Root, w: &Weight) -> i64 {
        root.0.iter().zip(&w.0).map(|(a, b)| a * b).sum()
    }

    pub fn pair_roots(&self, a: &Root, b: &Root) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a.0[i] * self.cartan[i][j] * b.0[j];
            }
        }
        s
    }

    /// `(ρ, λ)`.
    pub fn rho_pairing(&self, w: &Weight) -> Rational64 {
        self.pairing(&self.rho(), w)
    }

    /// `s_α(λ) = λ - (λ, α) α`.
    pub fn reflect(&self, alpha: &Root, w: &Weight) -> Result<Weight> {
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.0.clone()));
        }
        self.check_rank(w.rank())?;
        let c = self.pair_root_weight(alpha, w);
        Ok(w - &(c * &self.root_to_weight(alpha)))
    }

    pub fn reflect_root(&self, alpha: &Root, beta: &Root) -> Root {
        let c = self.pair_roots(alpha, beta);
        Root(beta.0.iter().zip(&alpha.0).map(|(b, a)| b - c * a).collect())
    }

    /// Pairings with all roots lie in `{0, ±1}`.
    pub fn is_minuscule(&self, w: &Weight) -> bool {
        w.rank() == self.rank && self.positive.iter().all(|r| self.pair_root_weight(r, w).abs() <= 1)
    }

    /// Nodes `k` whose fundamental weight is minuscule (0-based).
    pub fn minuscule_nodes(&self) -> Vec<usize> {
        (0..self.rank).filter(|&k| self.is_minuscule(&self.fundamental_weight(k))).collect()
    }

    /// Moves a weight into the dominant chamber by simple reflections.
    /// Returns the dominant weight and the indices applied, in order.
    pub fn dominant_representative(&self, w: &Weight) -> (Weight, Vec<usize>) {
        let mut cur = w.clone();
        let mut applied = Vec::new();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            let c = cur.0[i];
            for j in 0..self.rank {
                cur.0[j] -= c * self.cartan[j][i];
            }
            applied.push(i);
        }
        (cur, applied)
    }

    /// The full Weyl orbit of a weight, sorted.
    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(w.clone());
        let mut stack = vec![w.clone()];
        while let Some(cur) = stack.pop() {
            for i in 0..self.rank {
                let c = cur.0[i];
                if c == 0 {
                    continue;
                }
                let mut next = cur.clone();
                for j in 0..self.rank {
                    next.0[j] -= c * self.cartan[j][i];
                }
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The involution `σ` of the nodes with `w∘ ϖ_i = -ϖ_{σ(i)}`.
    pub fn w0_involution(&self, i: usize) -> usize {
        let n = self.rank;
        match (self.cartan_type.family(), n) {
            (Family::A, _) => n - 1 - i,
            (Family::D, _) if n % 2 == 1 && i >= n - 2 => 2 * n - 3 - i,
            (Family::E, 6) => [5, 1, 4, 3, 2, 0][i],
            _ => i,
        }
    }

    /// `w∘ λ`.
    pub fn w0_weight(&self, w: &Weight) -> Weight {
        Weight((0..self.rank).map(|j| -w.0[self.w0_involution(j)]).collect())
    }

    /// `w∘ β` in root coordinates.
    pub fn w0_root(&self, r: &Root) -> Root {
        Root((0..self.rank).map(|j| -r.0[self.w0_involution(j)]).collect())
    }

    /// All nonzero minuscule weights (the union of the minuscule orbits).
    pub fn minuscule_weights(&self) -> Vec<Weight> {
        let mut all: Vec<Weight> =
            self.minuscule_nodes().into_iter().flat_map(|k| self.orbit(&self.fundamental_weight(k))).collect();
        all.sort();
        all.dedup();
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    #[test]
    fn parses_types() {
        assert!("A1".parse::<CartanType>().is_ok());
        assert!("e8".parse::<CartanType>().is_ok());
        assert!("D3".parse::<CartanType>().is_err());
        assert!("B2".parse::<CartanType>().is_err());
        assert!("A10".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("".parse::<CartanType>().is_err());
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in
            [("A1", 1), ("A2", 3), ("A4", 10), ("D4", 12), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120)]
        {
            assert_eq!(rs(name).num_positive_roots(), count, "{name}");
        }
    }

    #[test]
    fn a1_lattice_constant_and_norm() {
        let r = rs("A1");
        assert_eq!(r.lattice_constant(), 2);
        let w1 = r.fundamental_weight(0);
        assert_eq!(r.pairing(&w1, &w1), Rational64::new(1, 2));
    }

    #[test]
    fn lattice_constants() {
        for (name, e) in [("A2", 3), ("A3", 4), ("D4", 2), ("D5", 4), ("E6", 3), ("E7", 2), ("E8", 1)] {
            assert_eq!(rs(name).lattice_constant(), e, "{name}");
        }
    }

    #[test]
    fn a2_pairings_and_theta() {
        let r = rs("A2");
        let a1 = r.root_to_weight(&r.simple_root(0));
        let a2 = r.root_to_weight(&r.simple_root(1));
        assert_eq!(r.pairing(&a1, &a1), Rational64::from_integer(2));
        assert_eq!(r.pairing(&a1, &a2), Rational64::from_integer(-1));
        assert_eq!(r.highest_root(), &Root(vec![1, 1]));
    }

    #[test]
    fn reflections() {
        let r = rs("A1");
        let w1 = r.fundamental_weight(0);
        let a1 = r.simple_root(0);
        assert_eq!(r.reflect(&a1, &w1).unwrap(), &w1 - &r.root_to_weight(&a1));

        let r = rs("A2");
        let w2 = r.fundamental_weight(1);
        assert_eq!(r.reflect(&r.simple_root(0), &w2).unwrap(), w2);
        let theta = r.highest_root().clone();
        let rho = r.rho();
        let expect = &rho - &(2 * &r.root_to_weight(&theta));
        assert_eq!(r.reflect(&theta, &rho).unwrap(), expect);
        assert!(r.reflect(&Root(vec![1, -1]), &rho).is_err());
    }

    #[test]
    fn minuscule_detection() {
        let a3 = rs("A3");
        assert!(a3.is_minuscule(&a3.fundamental_weight(0)));
        assert!(!rs("A2").is_minuscule(&rs("A2").rho()));
        assert!(a3.is_minuscule(&a3.zero_weight()));
        assert_eq!(a3.minuscule_nodes(), vec![0, 1, 2]);
        assert_eq!(rs("D5").minuscule_nodes(), vec![0, 3, 4]);
        assert_eq!(rs("E6").minuscule_nodes(), vec![0, 5]);
        assert_eq!(rs("E7").minuscule_nodes(), vec![6]);
        assert!(rs("E8").minuscule_nodes().is_empty());
    }

    #[test]
    fn root_pairings_in_range() {
        for name in ["A3", "D4", "E6"] {
            let r = rs(name);
            for a in r.positive_roots() {
                for b in r.positive_roots() {
                    let p = r.pair_roots(a, b);
                    assert!((-2..=2).contains(&p));
                    assert_eq!(p.abs() == 2, a == b);
                }
            }
        }
    }

    #[test]
    fn theta_height_matches_rho_pairing() {
        for name in ["A4", "D5", "E6", "E7", "E8"] {
            let r = rs(name);
            let t = r.highest_root();
            assert_eq!(r.rho_pairing(&r.root_to_weight(t)), Rational64::from_integer(t.height()));
        }
    }

    #[test]
    fn minuscule_orbits_stay_minuscule() {
        for name in ["A3", "D4", "E6", "E7"] {
            let r = rs(name);
            for w in r.minuscule_weights() {
                assert!(r.is_minuscule(&w));
                assert!(r.is_minuscule(&-&w));
            }
        }
    }
}
