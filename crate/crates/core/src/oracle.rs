//! Randomized cross-checks with a fixed seed. A pass only says that no
//! counterexample turned up inside the sampled bounds.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{bracket_basis, bracket_realized, to_realization, BasisSymbol, LieElement};
use crate::criterion::{
    condition_row, detect_common_recurrence, reducibility_witness, sigma_series, WitnessOptions,
    WitnessPolynomial,
};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::verma::{singular_at_minus_one, LieWord, ModuleVector, PbwMonomial, Strategy, Straightener, Weight};
use crate::verma::DEFAULT_MAX_ROWS;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub trials: usize,
    /// Largest `|a|` for sampled generators `L[a,i]`.
    pub degree_bound: i64,
    /// Largest `|i|`.
    pub index_bound: i64,
    /// Longest sampled PBW monomial or word.
    pub length_bound: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self { seed: 0x5eed, trials: 500, degree_bound: 6, index_bound: 6, length_bound: 4 }
    }
}

impl SampleConfig {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OracleReport {
    pub name: String,
    pub seed: u64,
    pub trials: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub note: String,
}

impl OracleReport {
    fn new(name: &str, cfg: &SampleConfig, checked: usize, counterexample: Option<String>) -> Self {
        Self {
            name: name.into(),
            seed: cfg.seed,
            trials: checked,
            passed: counterexample.is_none(),
            counterexample,
            note: "sampled bounds only".into(),
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} (seed {}, {} trials, {})", self.name, self.seed, self.trials, self.note)?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn random_rational(rng: &mut impl Rng, bound: i64) -> Q {
    Q::new(BigInt::from(rng.gen_range(-bound..=bound)), BigInt::from(rng.gen_range(1..=bound)))
}

fn random_gen(rng: &mut impl Rng, cfg: &SampleConfig) -> BasisSymbol {
    BasisSymbol::gen(
        rng.gen_range(-cfg.degree_bound..=cfg.degree_bound),
        rng.gen_range(-cfg.index_bound..=cfg.index_bound),
    )
}

fn random_monomial(rng: &mut impl Rng, cfg: &SampleConfig, max_deg: i64) -> PbwMonomial {
    let len = rng.gen_range(0..=cfg.length_bound);
    let mut factors: Vec<(i64, i64)> = (0..len)
        .map(|_| (rng.gen_range(1..=max_deg), rng.gen_range(-cfg.index_bound..=cfg.index_bound)))
        .collect();
    factors.sort();
    PbwMonomial::new(factors).expect("sorted positive factors")
}

fn random_finite_weight(rng: &mut impl Rng) -> Weight<Q> {
    let start = rng.gen_range(-3..=4);
    let width = rng.gen_range(1..=8);
    let labels: Vec<(i64, Q)> = (start..start + width).map(|i| (i, random_rational(rng, 20))).collect();
    let c = if rng.gen_bool(0.5) { Q::zero() } else { random_rational(rng, 20) };
    Weight::finite(c, labels)
}

/// Brackets to scan: the real one and two corruptions of its central term.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BracketVariant {
    Standard,
    /// Central term removed; still a Lie algebra.
    DropCentral,
    /// Central term `a³ C` in place of `a C`; violates Jacobi.
    CubicCocycle,
}

impl BracketVariant {
    pub fn bracket(self, x: BasisSymbol, y: BasisSymbol) -> LieElement<Q> {
        let (BasisSymbol::Gen { deg: a, idx: i }, BasisSymbol::Gen { deg: b, idx: j }) = (x, y) else {
            return LieElement::zero();
        };
        match self {
            BracketVariant::Standard => bracket_basis(x, y),
            BracketVariant::DropCentral | BracketVariant::CubicCocycle => {
                let mut out = LieElement::zero();
                out.add_term(BasisSymbol::gen(a + b, i + j), q((i + 1) * b - (j + 1) * a));
                if self == BracketVariant::CubicCocycle && a == -b && i + j == -2 {
                    out.add_term(BasisSymbol::Central, q(a * a * a));
                }
                out
            }
        }
    }

    fn extend(self, x: &LieElement<Q>, y: &LieElement<Q>) -> LieElement<Q> {
        let mut out = LieElement::zero();
        for (s, c) in x.terms() {
            for (t, d) in y.terms() {
                for (u, e) in self.bracket(*s, *t).terms() {
                    out.add_term(*u, c.clone() * d.clone() * e.clone());
                }
            }
        }
        out
    }

    pub fn jacobiator(self, x: BasisSymbol, y: BasisSymbol, z: BasisSymbol) -> LieElement<Q> {
        let (x, y, z) = (LieElement::basis(x), LieElement::basis(y), LieElement::basis(z));
        self.extend(&x, &self.extend(&y, &z))
            + self.extend(&y, &self.extend(&z, &x))
            + self.extend(&z, &self.extend(&x, &y))
    }
}

/// A basis triple whose jacobiator is nonzero, or a pair that is not antisymmetric.
#[derive(Clone, PartialEq, Debug)]
pub enum AxiomViolation {
    Antisymmetry { pair: [BasisSymbol; 2], sum: LieElement<Q> },
    Jacobi { triple: [BasisSymbol; 3], jacobiator: LieElement<Q> },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Antisymmetry { pair: [x, y], sum } => write!(f, "[{x}, {y}] + [{y}, {x}] = {sum}"),
            AxiomViolation::Jacobi { triple: [x, y, z], jacobiator } => {
                write!(f, "({x}, {y}, {z}): jacobiator = {jacobiator}")
            }
        }
    }
}

/// First violation among `cfg.trials` sampled triples, with the trial count reached.
/// Half the triples are forced to total degree 0 and total index -2, where the
/// central term lives.
pub fn find_axiom_violation(cfg: &SampleConfig, variant: BracketVariant) -> (usize, Option<AxiomViolation>) {
    let mut rng = cfg.rng();
    for n in 0..cfg.trials {
        let x = random_gen(&mut rng, cfg);
        let y = random_gen(&mut rng, cfg);
        let z = if n % 2 == 0 {
            let (BasisSymbol::Gen { deg: a, idx: i }, BasisSymbol::Gen { deg: b, idx: j }) = (x, y) else {
                unreachable!()
            };
            BasisSymbol::gen(-a - b, -2 - i - j)
        } else {
            random_gen(&mut rng, cfg)
        };
        let sum = variant.bracket(x, y) + variant.bracket(y, x);
        if !sum.is_zero() {
            return (n + 1, Some(AxiomViolation::Antisymmetry { pair: [x, y], sum }));
        }
        let jacobiator = variant.jacobiator(x, y, z);
        if !jacobiator.is_zero() {
            return (n + 1, Some(AxiomViolation::Jacobi { triple: [x, y, z], jacobiator }));
        }
    }
    (cfg.trials, None)
}

pub fn jacobi_scan_with(cfg: &SampleConfig, variant: BracketVariant) -> OracleReport {
    let (n, v) = find_axiom_violation(cfg, variant);
    OracleReport::new("jacobi", cfg, n, v.map(|v| v.to_string()))
}

pub fn jacobi_scan(cfg: &SampleConfig) -> OracleReport {
    jacobi_scan_with(cfg, BracketVariant::Standard)
}

/// Compares the structure constants with the polynomial realization on random
/// basis pairs, on 50 pairs `L[a,i], L[-a,-2-i]` that carry a residue, and on
/// `(L[1,1], L[-1,0])` and `(L[1,-1], L[-1,-1])`.
pub fn realization_scan(cfg: &SampleConfig) -> OracleReport {
    let mut rng = cfg.rng();
    let forced = 50;
    let fixed = [(BasisSymbol::gen(1, 1), BasisSymbol::gen(-1, 0)), (BasisSymbol::gen(1, -1), BasisSymbol::gen(-1, -1))];
    let total = cfg.trials + forced + fixed.len();
    for n in 0..total {
        let (x, y) = if n < cfg.trials {
            (random_gen(&mut rng, cfg), random_gen(&mut rng, cfg))
        } else if n < cfg.trials + forced {
            let (deg, idx) = (rng.gen_range(-cfg.degree_bound..=cfg.degree_bound), rng.gen_range(-cfg.index_bound..=cfg.index_bound));
            (BasisSymbol::gen(deg, idx), BasisSymbol::gen(-deg, -2 - idx))
        } else {
            fixed[n - cfg.trials - forced]
        };
        let direct = to_realization(&bracket_basis::<Q>(x, y));
        let realized = bracket_realized(&to_realization(&LieElement::basis(x)), &to_realization(&LieElement::basis(y)));
        if direct != realized {
            return OracleReport::new(
                "realization",
                cfg,
                n + 1,
                Some(format!("[{x}, {y}]: structure constants and realization disagree")),
            );
        }
    }
    OracleReport::new("realization", cfg, total, None)
}

/// `x(y v) - y(x v) = [x,y] v` on random basis pairs and PBW monomials, with a
/// fresh random weight every 25 trials. Generators are confined to
/// `|a| <= 3` so the straightening stays small.
pub fn representation_scan(cfg: &SampleConfig) -> OracleReport {
    let mut rng = cfg.rng();
    let small = SampleConfig { degree_bound: cfg.degree_bound.min(3), ..*cfg };
    let mut weight = random_finite_weight(&mut rng);
    for n in 0..cfg.trials {
        if n % 25 == 24 {
            weight = random_finite_weight(&mut rng);
        }
        let x = random_gen(&mut rng, &small);
        let y = random_gen(&mut rng, &small);
        let m = random_monomial(&mut rng, &small, 3);
        let v = ModuleVector::monomial(Q::one(), m.clone());
        let mut st = Straightener::new(&weight, Strategy::Leftmost);
        let (ex, ey) = (LieElement::basis(x), LieElement::basis(y));
        let yv = st.act(&ey, &v);
        let xv = st.act(&ex, &v);
        let lhs = st.act(&ex, &yv).sub(&st.act(&ey, &xv));
        let rhs = st.act(&ex.bracket(&ey), &v);
        if lhs != rhs {
            return OracleReport::new(
                "representation",
                cfg,
                n + 1,
                Some(format!("x = {x}, y = {y}, v = {m}: {lhs} != {rhs}")),
            );
        }
    }
    OracleReport::new("representation", cfg, cfg.trials, None)
}

/// Leftmost and rightmost straightening agree on random words.
pub fn confluence_scan(cfg: &SampleConfig) -> OracleReport {
    let mut rng = cfg.rng();
    let small = SampleConfig { degree_bound: cfg.degree_bound.min(3), ..*cfg };
    let mut weight = random_finite_weight(&mut rng);
    for n in 0..cfg.trials {
        if n % 25 == 24 {
            weight = random_finite_weight(&mut rng);
        }
        let len = rng.gen_range(1..=small.length_bound);
        let word: Vec<BasisSymbol> = (0..len)
            .map(|_| if rng.gen_ratio(1, 10) { BasisSymbol::Central } else { random_gen(&mut rng, &small) })
            .collect();
        let left = Straightener::new(&weight, Strategy::Leftmost).reduce(&word);
        let right = Straightener::new(&weight, Strategy::Rightmost).reduce(&word);
        if left != right {
            let shown: Vec<String> = word.iter().map(ToString::to_string).collect();
            return OracleReport::new(
                "confluence",
                cfg,
                n + 1,
                Some(format!("{} v: {left} != {right}", shown.join(""))),
            );
        }
    }
    OracleReport::new("confluence", cfg, cfg.trials, None)
}

/// The condition row `s_k` against the module action: the vacuum coefficient
/// of `L[1,k-1] (Σ_j a_j L[-1,j-1]) v` must be `-s_k`.
pub fn row_oracle<T: Scalar>(
    weight: &Weight<T>,
    f: &WitnessPolynomial<T>,
    ks: impl IntoIterator<Item = i64>,
) -> std::result::Result<usize, String> {
    let lowering: LieElement<T> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, a)| (BasisSymbol::gen(-1, j as i64 - 1), a.clone()))
        .collect();
    let mut st = Straightener::new(weight, Strategy::Leftmost);
    let mut checked = 0;
    for k in ks {
        let word = LieWord::new(vec![LieElement::gen(1, k - 1), lowering.clone()]).expect("nonempty word");
        let scalar = st.act_word(&word).coeff(&PbwMonomial::vacuum());
        let row = condition_row(weight, f, k);
        if scalar != -row.clone() {
            return Err(format!("k = {k}: action gives {scalar}, row gives {row}"));
        }
        checked += 1;
    }
    Ok(checked)
}

/// One weight of [`equivalence_scan`] and what each test said.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct EquivalenceCase {
    pub weight: String,
    pub witness: Option<String>,
    pub singular_dimension: usize,
    pub common_recurrence: Option<Vec<String>>,
}

impl EquivalenceCase {
    pub fn agrees(&self) -> bool {
        let a = self.witness.is_some();
        a == (self.singular_dimension > 0) && a == self.common_recurrence.is_some()
    }
}

fn describe(w: &Weight<Q>) -> String {
    let labels: Vec<String> = w.finite_labels().iter().map(|(i, l)| format!("{i}: {l}")).collect();
    let rec = w
        .recurrent()
        .map(|r| format!(", recurrent {:?}", r.char_poly().iter().map(ToString::to_string).collect::<Vec<_>>()))
        .unwrap_or_default();
    format!("c = {}, labels {{{}}}{rec}", w.central_charge(), labels.join(", "))
}

/// Runs the witness search (degree <= 8), the singular search on
/// `L[-1,i] v`, `i ∈ [-10,10]`, and common Σ recurrence detection
/// (j ∈ [-2,2], 24 terms) on one weight.
pub fn equivalence_case(weight: &Weight<Q>) -> Result<EquivalenceCase> {
    let witness = reducibility_witness(weight, 8, &WitnessOptions::default())?.witness;
    let singular = singular_at_minus_one(weight, -10..=10, -10..=10, DEFAULT_MAX_ROWS)?;
    let windows: Vec<_> = (-2..=2).map(|j| sigma_series(weight, j, 24)).collect();
    let rec = detect_common_recurrence(&windows, 12)?;
    Ok(EquivalenceCase {
        weight: describe(weight),
        witness: witness.map(|f| f.to_string()),
        singular_dimension: singular.basis.len(),
        common_recurrence: rec.map(|r| r.char_poly.iter().map(ToString::to_string).collect()),
    })
}

/// The geometric weights `r ∈ {2, 3, 1/2, -1}`, then `trials` random
/// finite-support weights; every tenth one is supported on `Λ_{-1}` alone
/// (reducible) so both verdicts occur.
pub fn equivalence_weights(cfg: &SampleConfig) -> Vec<Weight<Q>> {
    let mut rng = cfg.rng();
    let mut weights: Vec<Weight<Q>> = [q(2), q(3), Q::new(1.into(), 2.into()), q(-1)]
        .into_iter()
        .map(|r| Weight::geometric(r).expect("nonzero ratio"))
        .collect();
    for n in 0..cfg.trials {
        weights.push(if n % 10 == 9 {
            Weight::finite(Q::zero(), [(-1, random_rational(&mut rng, 20))])
        } else {
            random_finite_weight(&mut rng)
        });
    }
    weights.shuffle(&mut rng);
    weights
}

pub fn equivalence_scan(cfg: &SampleConfig) -> Result<(OracleReport, Vec<EquivalenceCase>)> {
    let weights = equivalence_weights(cfg);
    let mut cases = Vec::with_capacity(weights.len());
    let mut counterexample = None;
    for w in &weights {
        let case = equivalence_case(w)?;
        if counterexample.is_none() && !case.agrees() {
            counterexample = Some(format!("{case:?}"));
        }
        cases.push(case);
    }
    Ok((OracleReport::new("equivalence", cfg, weights.len(), counterexample), cases))
}

/// Every scan, for the `selftest` command.
pub fn run_all(cfg: &SampleConfig) -> Result<Vec<OracleReport>> {
    let mut out = vec![
        jacobi_scan(cfg),
        realization_scan(cfg),
        representation_scan(cfg),
        confluence_scan(cfg),
    ];
    let mut rng = cfg.rng();
    let mut rows_fail = None;
    let mut rows_checked = 0;
    for _ in 0..cfg.trials.min(50) {
        let w = random_finite_weight(&mut rng);
        let deg = rng.gen_range(0..=3);
        let coeffs: Vec<Q> = (0..=deg).map(|_| random_rational(&mut rng, 9)).chain([Q::one()]).collect();
        let f = WitnessPolynomial::new(coeffs)?;
        match row_oracle(&w, &f, -12..=12) {
            Ok(n) => rows_checked += n,
            Err(e) => {
                rows_fail = Some(format!("{}, f = {f}: {e}", describe(&w)));
                break;
            }
        }
    }
    out.push(OracleReport::new("condition rows", cfg, rows_checked, rows_fail));
    let eq_cfg = SampleConfig { trials: cfg.trials.min(40), ..*cfg };
    out.push(equivalence_scan(&eq_cfg)?.0);
    Ok(out)
}
