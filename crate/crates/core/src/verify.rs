//! Verification suites: oracle rows, agreement of the two expansions, the
//! q-Toda identity and the statistics of the minuscule datum.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chevalley::{algebraic_row, decorated_row};
use crate::error::{Error, Result};
use crate::oracle::verify_row_with_datum;
use crate::root_system::{Family, Root, RootSystem, Weight};
use crate::type_a::q_toda_check;
use crate::weyl::{ell_lambda, group_order, MinusculeDatum, Sign, WeylElt, WeylTable, MAX_TABLE_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Row,
    Theorems,
    Toda,
    PropL,
    All,
}

impl std::str::FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" => Ok(Scope::Row),
            "theorems" => Ok(Scope::Theorems),
            "toda" => Ok(Scope::Toda),
            "propL" | "propl" => Ok(Scope::PropL),
            "all" => Ok(Scope::All),
            _ => Err(Error::Parse(format!("unknown scope {s:?}"))),
        }
    }
}

/// Which `(λ, w)` pairs a suite visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    Seeded { count: usize, seed: u64 },
}

/// Outcome of one suite.
#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
    pub details: Vec<Value>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self { name: name.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, failures: Vec<String>) {
        self.checks += 1;
        self.failures.extend(failures);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.name,
            "checks": self.checks,
            "passed": self.passed(),
            "failures": self.failures,
            "details": self.details,
        })
    }
}

/// A uniformly random element, from the full table when it is small enough
/// and from a random word of length `4 · #Δ⁺` otherwise.
pub fn random_element(rs: &RootSystem, table: Option<&WeylTable>, rng: &mut ChaCha8Rng) -> WeylElt {
    if let Some(t) = table {
        return t.elements()[rng.random_range(0..t.len())].clone();
    }
    let mut w = WeylElt::identity(rs);
    for _ in 0..4 * rs.num_positive_roots() {
        w = w.right_mul_simple(rs, rng.random_range(0..rs.rank()));
    }
    w
}

fn small_table(rs: &RootSystem) -> Option<WeylTable> {
    if group_order(rs) <= MAX_TABLE_ORDER {
        WeylTable::new(rs).ok()
    } else {
        None
    }
}

/// The `(λ, w)` pairs for a sampling plan; λ ranges over nonzero minuscule weights.
pub fn pairs(rs: &RootSystem, sampling: Sampling) -> Result<Vec<(Weight, WeylElt)>> {
    let lambdas = rs.minuscule_weights();
    if lambdas.is_empty() {
        return Err(Error::UnsupportedWeight(format!("{} has no nonzero minuscule weights", rs.cartan_type())));
    }
    match sampling {
        Sampling::Exhaustive => {
            let table = WeylTable::new(rs)?;
            Ok(lambdas.iter().flat_map(|l| table.elements().iter().map(move |w| (l.clone(), w.clone()))).collect())
        }
        Sampling::Seeded { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let table = small_table(rs);
            Ok((0..count)
                .map(|_| {
                    let l = lambdas[rng.random_range(0..lambdas.len())].clone();
                    (l, random_element(rs, table.as_ref(), &mut rng))
                })
                .collect())
        }
    }
}

fn datum_for(rs: &RootSystem, lambda: &Weight) -> Result<MinusculeDatum> {
    MinusculeDatum::new(rs, lambda)
}

/// Oracle rows against the walk-sum formula.
pub fn suite_rows(rs: &RootSystem, sampling: Sampling, keep_details: bool) -> Result<SuiteReport> {
    let ps = pairs(rs, sampling)?;
    let results: Vec<Result<(bool, Value, String)>> = ps
        .par_iter()
        .map(|(l, w)| {
            let d = datum_for(rs, l)?;
            let rep = verify_row_with_datum(rs, &d, w)?;
            let tag = format!("row λ={} w={}", l, w.word_string(rs));
            Ok((rep.passed(), rep.to_json(rs), tag))
        })
        .collect();
    let mut out = SuiteReport::new("row");
    for r in results {
        let (ok, detail, tag) = r?;
        out.record(if ok { vec![] } else { vec![tag] });
        if keep_details || !ok {
            out.details.push(detail);
        }
    }
    Ok(out)
}

/// Heisenberg product expansion against the decorated-walk expansion.
pub fn suite_theorems(rs: &RootSystem, sampling: Sampling) -> Result<SuiteReport> {
    let ps = pairs(rs, sampling)?;
    let results: Vec<Result<Option<String>>> = ps
        .par_iter()
        .map(|(l, w)| {
            let d = datum_for(rs, l)?;
            let alg = algebraic_row(rs, &d, w, false).to_basis_form(rs)?;
            let dec = decorated_row(rs, &d, w)?;
            alg.check_integral()?;
            Ok((alg != dec).then(|| format!("theorems λ={} w={}", l, w.word_string(rs))))
        })
        .collect();
    let mut out = SuiteReport::new("theorems");
    for r in results {
        out.record(r?.into_iter().collect());
    }
    Ok(out)
}

/// Symmetrization of `e^{ϖ_1}` against the q-Toda operator (type A).
pub fn suite_toda(rs: &RootSystem) -> Result<SuiteReport> {
    let (ok, got, want) = q_toda_check(rs)?;
    let mut out = SuiteReport::new("toda");
    out.record(if ok { vec![] } else { vec![format!("toda {}", rs.cartan_type())] });
    out.details.push(json!({ "symmetrized": got.display(rs), "operator": want.display(rs), "match": ok }));
    Ok(out)
}

fn inv_set(rs: &RootSystem, w: &WeylElt) -> BTreeSet<Root> {
    w.inversion_set(rs).into_iter().collect()
}

/// Statements about the datum alone: `ℓ(x)`, the `β`/`γ` lists and the
/// pairings and heights among the `β_r`.
pub fn check_datum(rs: &RootSystem, d: &MinusculeDatum) -> Vec<String> {
    let mut fails = Vec::new();
    let tag = format!("λ={}", d.lambda);
    let l = d.l();
    let mut fail = |s: String| fails.push(format!("{tag}: {s}"));

    // (1) 2ℓ(x) − ℓ(⌊w∘⌋) = −2(ρ,λ)
    let lhs = 2 * d.x.length() as i64 - d.w0_min.length() as i64;
    let rhs = rs.rho_pairing(&d.lambda) * -2;
    if num_rational::Rational64::from_integer(lhs) != rhs {
        fail(format!("2ℓ(x) - ℓ(w0^J) = {lhs}, -2(ρ,λ) = {rhs}"));
    }
    if inv_set(rs, &d.x) != d.beta.iter().cloned().collect() {
        fail("Inv(x) != {β}".into());
    }
    if inv_set(rs, &d.y.inverse(rs)) != d.gamma.iter().cloned().collect() {
        fail("Inv(y^-1) != {γ}".into());
    }
    for (r, br) in d.beta.iter().enumerate() {
        let h = br.height();
        if rs.pair_root_weight(br, &d.lambda) != -1 {
            fail(format!("(λ, β_r) != -1 at r={}", r + 1));
        }
        for (t, bt) in d.beta.iter().enumerate() {
            if t != r && !matches!(rs.pair_roots(br, bt), 0 | 1) {
                fail(format!("(β_r, β_t) not in {{0, 1}} at r={} t={}", r + 1, t + 1));
            }
            if r < t && rs.pair_roots(br, bt) == 1 && br.height() <= bt.height() {
                fail(format!("ht(β_r) <= ht(β_t) with (β_r, β_t) = 1 at r={} t={}", r + 1, t + 1));
            }
        }
        // counts of B_r and R_r
        let b_r: BTreeSet<Root> = d.beta[r + 1..l].iter().filter(|bt| rs.pair_roots(bt, br) == 1).cloned().collect();
        if b_r.len() as i64 != h - 1 {
            fail(format!("#B_r != ht(β_r) - 1 at r={}", r + 1));
        }
        let r_r: BTreeSet<Root> =
            rs.positive_roots().iter().filter(|a| a.height() < h && rs.pair_roots(a, br) == 1).cloned().collect();
        if r_r.len() as i64 != 2 * (h - 1) {
            fail(format!("#R_r != 2(ht(β_r) - 1) at r={}", r + 1));
        }
        // σ(α) = β_r - α
        let sigma = |a: &Root| Root(br.0.iter().zip(&a.0).map(|(x, y)| x - y).collect());
        if !r_r.iter().all(|a| {
            let s = sigma(a);
            r_r.contains(&s) && s != *a && sigma(&s) == *a
        }) {
            fail(format!("σ is not a free involution of R_r at r={}", r + 1));
        }
        if !b_r.is_subset(&r_r) {
            fail(format!("B_r ⊄ R_r at r={}", r + 1));
        }
        let images: BTreeSet<Root> = b_r.iter().map(sigma).collect();
        if !images.is_disjoint(&b_r) || images.union(&b_r).cloned().collect::<BTreeSet<_>>() != r_r {
            fail(format!("σ(B_r) ⊔ B_r != R_r at r={}", r + 1));
        }
    }
    fails
}

/// Statements about a single `w`: the two pairing identities and the
/// length differences along `β_r` and `γ_s`.
pub fn check_element(rs: &RootSystem, d: &MinusculeDatum, w: &WeylElt) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let tag = format!("λ={} w={}", d.lambda, w.word_string(rs));
    let plus = ell_lambda(rs, w, &d.lambda, Sign::Plus)? as i64;
    let minus = ell_lambda(rs, w, &d.lambda, Sign::Minus)? as i64;
    let diff = &rs.rho() - &w.apply(&rs.rho());
    if rs.pairing(&diff, &d.lambda) != num_rational::Rational64::from_integer(plus - minus) {
        fails.push(format!("{tag}: (ρ - wρ, λ) != ℓ⁺ - ℓ⁻"));
    }
    let inv = inv_set(rs, w);
    let neg: BTreeSet<Root> = inv.iter().filter(|a| rs.pair_root_weight(a, &d.lambda) == -1).cloned().collect();
    let pos: BTreeSet<Root> = inv.iter().filter(|a| rs.pair_root_weight(a, &d.lambda) == 1).cloned().collect();
    if neg != inv.intersection(&inv_set(rs, &d.x)).cloned().collect() {
        fails.push(format!("{tag}: Inv(w)⁻ != Inv(w) ∩ Inv(x)"));
    }
    if pos != inv.intersection(&inv_set(rs, &d.y.inverse(rs))).cloned().collect() {
        fails.push(format!("{tag}: Inv(w)⁺ != Inv(w) ∩ Inv(y⁻¹)"));
    }
    for (list, sign, part) in [(&d.beta, Sign::Minus, "β"), (&d.gamma, Sign::Plus, "γ")] {
        for (k, root) in list.iter().enumerate() {
            let v = w.left_mul_reflection(rs, root);
            if v.length() >= w.length() {
                continue;
            }
            let lhs = w.length() as i64 - v.length() as i64;
            let a = d.ell_partial(rs, w, k + 1, sign)? as i64;
            let b = d.ell_partial(rs, &v, k + 1, sign)? as i64;
            if lhs != 2 * (a - b) - 1 {
                fails.push(format!("{tag}: length drop along {part}_{} is not 2Δℓ - 1", k + 1));
            }
        }
    }
    Ok(fails)
}

/// Datum statements for every minuscule λ plus element statements on the sampled pairs.
pub fn suite_prop_l(rs: &RootSystem, sampling: Sampling) -> Result<SuiteReport> {
    let mut out = SuiteReport::new("propL");
    for l in rs.minuscule_weights() {
        out.record(check_datum(rs, &datum_for(rs, &l)?));
    }
    let ps = pairs(rs, sampling)?;
    let results: Vec<Result<Vec<String>>> =
        ps.par_iter().map(|(l, w)| check_element(rs, &datum_for(rs, l)?, w)).collect();
    for r in results {
        out.record(r?);
    }
    Ok(out)
}

/// Runs the requested suites. `toda` is skipped outside type A under `all`.
pub fn run(rs: &RootSystem, scope: Scope, sampling: Sampling, keep_details: bool) -> Result<Vec<SuiteReport>> {
    let mut out = Vec::new();
    if matches!(scope, Scope::Row | Scope::All) {
        out.push(suite_rows(rs, sampling, keep_details)?);
    }
    if matches!(scope, Scope::Theorems | Scope::All) {
        out.push(suite_theorems(rs, sampling)?);
    }
    if scope == Scope::Toda || (scope == Scope::All && rs.cartan_type().family() == Family::A) {
        out.push(suite_toda(rs)?);
    }
    if matches!(scope, Scope::PropL | Scope::All) {
        out.push(suite_prop_l(rs, sampling)?);
    }
    Ok(out)
}
