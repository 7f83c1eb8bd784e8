//! Walks along the root sequence `η`, quantum walks and their decorations.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qbg::{classify_step, EdgeKind};
use crate::root_system::{Root, RootSystem, Weight};
use crate::weyl::{MinusculeDatum, WeylElt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Stay,
    Cross,
}

/// How a single step moves in the Bruhat order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Stationary,
    Up,
    Down,
}

/// A sequence `w_0 = w, w_1, …, w_n` with `w_t ∈ {w_{t-1}, s_{η_t} w_{t-1}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub lambda: Weight,
    pub l: usize,
    pub eta: Vec<Root>,
    pub steps: Vec<Step>,
    /// `w_0, …, w_n`.
    pub vertices: Vec<WeylElt>,
}

impl Walk {
    pub fn new(rs: &RootSystem, datum: &MinusculeDatum, start: &WeylElt, steps: &[Step]) -> Result<Self> {
        let eta = datum.eta();
        if steps.len() != eta.len() {
            return Err(Error::RankMismatch { expected: eta.len(), got: steps.len() });
        }
        let mut vertices = vec![start.clone()];
        for (s, e) in steps.iter().zip(&eta) {
            let last = vertices.last().expect("nonempty");
            vertices.push(match s {
                Step::Stay => last.clone(),
                Step::Cross => last.left_mul_reflection(rs, e),
            });
        }
        Ok(Self { lambda: datum.lambda.clone(), l: datum.l(), eta, steps: steps.to_vec(), vertices })
    }

    pub fn n(&self) -> usize {
        self.steps.len()
    }

    pub fn start(&self) -> &WeylElt {
        &self.vertices[0]
    }

    /// `w_t` for `0 ≤ t ≤ n`.
    pub fn vertex(&self, t: usize) -> &WeylElt {
        &self.vertices[t]
    }

    pub fn end(&self) -> &WeylElt {
        &self.vertices[self.n()]
    }

    /// `w_{t-1}^{-1} η_t` for `1 ≤ t ≤ n`.
    pub fn inv_eta(&self, t: usize) -> Root {
        self.vertices[t - 1].apply_inverse_root(&self.eta[t - 1])
    }

    /// `(ρ, w_{t-1}^{-1} η_t)`.
    pub fn rho_pairing(&self, t: usize) -> i64 {
        self.inv_eta(t).height()
    }

    pub fn step_move(&self, t: usize) -> Move {
        let (a, b) = (self.vertices[t - 1].length(), self.vertices[t].length());
        match self.steps[t - 1] {
            Step::Stay => Move::Stationary,
            Step::Cross if b > a => Move::Up,
            Step::Cross => Move::Down,
        }
    }

    /// Whether every crossing step is an edge of the quantum Bruhat graph.
    pub fn is_quantum(&self, rs: &RootSystem) -> bool {
        (1..=self.n()).all(|t| {
            self.steps[t - 1] == Step::Stay || classify_step(rs, &self.vertices[t - 1], &self.eta[t - 1]).is_some()
        })
    }

    pub fn steps_string(&self) -> String {
        self.steps.iter().map(|s| if *s == Step::Stay { 'S' } else { 'C' }).collect()
    }
}

/// All `2^n` walks from `w`, ordered by step sequence.
pub fn enumerate_walks(rs: &RootSystem, datum: &MinusculeDatum, w: &WeylElt) -> Vec<Walk> {
    let n = datum.n();
    (0u64..(1 << n))
        .map(|bits| {
            let steps: Vec<Step> =
                (0..n).map(|t| if bits >> (n - 1 - t) & 1 == 1 { Step::Cross } else { Step::Stay }).collect();
            Walk::new(rs, datum, w, &steps).expect("length matches")
        })
        .collect()
}

/// Quantum walks from `w`, by depth-first search that only crosses along
/// QBG edges. Ordered by step sequence with `Stay < Cross`.
pub fn enumerate_quantum_walks(rs: &RootSystem, datum: &MinusculeDatum, w: &WeylElt) -> Vec<Walk> {
    let eta = datum.eta();
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(eta.len());
    let mut vertices = vec![w.clone()];
    dfs(rs, &eta, &mut steps, &mut vertices, &mut |steps, vertices| {
        out.push(Walk {
            lambda: datum.lambda.clone(),
            l: datum.l(),
            eta: eta.clone(),
            steps: steps.to_vec(),
            vertices: vertices.to_vec(),
        })
    });
    out
}

fn dfs(
    rs: &RootSystem,
    eta: &[Root],
    steps: &mut Vec<Step>,
    vertices: &mut Vec<WeylElt>,
    emit: &mut impl FnMut(&[Step], &[WeylElt]),
) {
    let t = steps.len();
    if t == eta.len() {
        emit(steps, vertices);
        return;
    }
    let cur = vertices[t].clone();
    steps.push(Step::Stay);
    vertices.push(cur.clone());
    dfs(rs, eta, steps, vertices, emit);
    steps.pop();
    vertices.pop();
    if let Some((next, _)) = classify_step(rs, &cur, &eta[t]) {
        steps.push(Step::Cross);
        vertices.push(next);
        dfs(rs, eta, steps, vertices, emit);
        steps.pop();
        vertices.pop();
    }
}

/// `(S⁻, S⁺)` as sorted 1-based step indices.
pub fn stationary_sets(rs: &RootSystem, walk: &Walk) -> Result<(Vec<usize>, Vec<usize>)> {
    if !walk.is_quantum(rs) {
        return Err(Error::NotQuantum);
    }
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for t in 1..=walk.n() {
        if walk.steps[t - 1] != Step::Stay {
            continue;
        }
        let c = walk.rho_pairing(t);
        if t <= walk.l && c == 1 {
            minus.push(t);
        } else if t > walk.l && c == -1 {
            plus.push(t);
        }
    }
    Ok((minus, plus))
}

/// A quantum walk together with a decoration `b: S(w) → {0,1}` and its
/// statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedWalk {
    pub walk: Walk,
    pub s_minus: Vec<usize>,
    pub s_plus: Vec<usize>,
    pub b: BTreeMap<usize, u8>,
    pub sign: i64,
    /// `wt_0, …, wt_n` (weights lying in `Q`).
    pub partial_wt: Vec<Weight>,
    /// `d_1, …, d_n`.
    pub deltas: Vec<Weight>,
    /// Degrees after each step; entry `l` already includes the pivot term.
    pub partial_deg: Vec<i64>,
    pub pivot: i64,
    pub wt: Weight,
    pub deg: i64,
}

impl DecoratedWalk {
    /// The bundle weight `-w∘ w_l^{-1} λ + wt` of the resulting term.
    pub fn bundle(&self, rs: &RootSystem) -> Weight {
        &pivot_weight(rs, &self.walk) + &self.wt
    }

    /// The translation `-w∘ wt` of the resulting term.
    pub fn translation(&self, rs: &RootSystem) -> Weight {
        -rs.w0_weight(&self.wt)
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let b: BTreeMap<String, u8> = self.b.iter().map(|(t, v)| (t.to_string(), *v)).collect();
        json!({
            "b": b,
            "sign": self.sign,
            "wt": rs.root_lattice_coords(&self.wt).unwrap_or_else(|| self.wt.0.clone()),
            "deg": self.deg,
        })
    }
}

/// `-w∘ w_l^{-1} λ`.
pub fn pivot_weight(rs: &RootSystem, walk: &Walk) -> Weight {
    -rs.w0_weight(&walk.vertex(walk.l).apply_inverse(&walk.lambda))
}

fn integral_pairing(rs: &RootSystem, a: &Weight, b: &Weight) -> Result<i64> {
    let p = rs.pairing(a, b);
    if p.is_integer() {
        Ok(p.to_integer())
    } else {
        Err(Error::Internal(format!("non-integral degree contribution ({a}, {b}) = {p}")))
    }
}

/// All `2^{|S|}` decorations of a quantum walk, ordered by `b` read as a
/// binary number over `S` in increasing step order.
pub fn enumerate_decorations(rs: &RootSystem, walk: &Walk) -> Result<Vec<DecoratedWalk>> {
    let (s_minus, s_plus) = stationary_sets(rs, walk)?;
    let s: Vec<usize> = s_minus.iter().chain(&s_plus).copied().collect();
    let n = walk.n();
    let l = walk.l;
    let moves: Vec<Move> = (1..=n).map(|t| walk.step_move(t)).collect();
    let images: Vec<Weight> = (1..=n).map(|t| rs.w0_weight(&rs.root_to_weight(&walk.inv_eta(t)))).collect();
    let pivot_w = pivot_weight(rs, walk);
    let base_sign: i64 = (1..=n)
        .filter(|&t| (t <= l && moves[t - 1] == Move::Down) || (t > l && moves[t - 1] == Move::Up))
        .fold(1, |acc, _| -acc);

    let mut out = Vec::with_capacity(1 << s.len());
    for bits in 0u64..(1 << s.len()) {
        let b: BTreeMap<usize, u8> =
            s.iter().enumerate().map(|(k, &t)| (t, ((bits >> (s.len() - 1 - k)) & 1) as u8)).collect();
        let mut sign = base_sign;
        for v in b.values() {
            if *v == 1 {
                sign = -sign;
            }
        }
        let mut wt = rs.zero_weight();
        let mut partial_wt = vec![wt.clone()];
        let mut deltas = Vec::with_capacity(n);
        let mut deg = 0i64;
        let mut partial_deg = vec![0];
        let mut pivot = 0;
        if l == 0 {
            pivot = integral_pairing(rs, &pivot_w, &wt)?;
            deg += pivot;
            partial_deg[0] = deg;
        }
        for t in 1..=n {
            let img = &images[t - 1];
            let d = match (b.get(&t), moves[t - 1]) {
                (Some(1), _) if t <= l => -img,
                (Some(1), _) => img.clone(),
                (Some(_), _) => rs.zero_weight(),
                (None, Move::Down) => img.clone(),
                (None, _) => rs.zero_weight(),
            };
            let sq = integral_pairing(rs, &d, &d)?;
            if sq % 2 != 0 {
                return Err(Error::Internal(format!("odd norm for step delta {d}")));
            }
            deg += sq / 2 + integral_pairing(rs, &d, &wt)?;
            wt += &d;
            deltas.push(d);
            partial_wt.push(wt.clone());
            if t == l {
                pivot = integral_pairing(rs, &pivot_w, &wt)?;
                deg += pivot;
            }
            partial_deg.push(deg);
        }
        if !rs.in_root_lattice(&wt) {
            return Err(Error::Internal(format!("decorated walk weight {wt} outside the root lattice")));
        }
        out.push(DecoratedWalk {
            walk: walk.clone(),
            s_minus: s_minus.clone(),
            s_plus: s_plus.clone(),
            b,
            sign,
            partial_wt,
            deltas,
            partial_deg,
            pivot,
            wt,
            deg,
        });
    }
    Ok(out)
}

/// JSON dump of one walk and its decorations.
pub fn walk_json(rs: &RootSystem, walk: &Walk, decorations: &[DecoratedWalk]) -> Value {
    json!({
        "start_word": walk.start().word_string(rs),
        "eta": walk.eta.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
        "steps": walk.steps_string(),
        "vertices": walk.vertices[1..].iter().map(|w| w.word_string(rs)).collect::<Vec<_>>(),
        "decorations": decorations.iter().map(|d| d.to_json(rs)).collect::<Vec<_>>(),
    })
}

/// Kind of each crossing step, `None` for stationary steps.
pub fn edge_kinds(rs: &RootSystem, walk: &Walk) -> Vec<Option<EdgeKind>> {
    (1..=walk.n())
        .map(|t| match walk.steps[t - 1] {
            Step::Stay => None,
            Step::Cross => classify_step(rs, walk.vertex(t - 1), &walk.eta[t - 1]).map(|(_, k)| k),
        })
        .collect()
}
