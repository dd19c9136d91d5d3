//! Verma modules `M(Λ)` over the Block algebra on `Z`.
//!
//! A vector is a combination of normal-ordered monomials
//! `L[-a1,i1] ... L[-ak,ik] v` with `a1 <= ... <= ak` and `is <= is+1`
//! whenever `as = as+1`. Lie elements act by straightening: commute the
//! acting factor towards `v`, where positive-degree generators kill `v`,
//! degree-zero generators and `C` act by the weight, and every swap of two
//! out-of-order factors costs one bracket.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::algebra::{bracket_basis, write_signed_sum, BasisSymbol, LieElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Two-sided sequence `u` with `Σ_s ρ_s u(n+s) = 0` for every `n`, pinned by
/// `deg ρ` consecutive initial values. Both ends of `ρ` are nonzero, so the
/// sequence extends uniquely in both directions.
#[derive(Clone, PartialEq, Debug)]
pub struct Recurrence<T> {
    char_poly: Vec<T>,
    start: i64,
    window: Vec<T>,
}

impl<T: Scalar> Recurrence<T> {
    /// `char_poly` is ascending (`ρ_0, ..., ρ_d`); `initial` must cover exactly
    /// `d` consecutive indices.
    pub fn new(char_poly: Vec<T>, initial: BTreeMap<i64, T>) -> Result<Self> {
        let (Some(first), Some(last)) = (char_poly.first(), char_poly.last()) else {
            return Err(Error::InvalidWeight("empty characteristic polynomial".into()));
        };
        if first.is_zero() || last.is_zero() {
            return Err(Error::InvalidWeight(
                "characteristic polynomial needs nonzero constant and leading coefficients".into(),
            ));
        }
        let d = char_poly.len() - 1;
        if initial.len() != d {
            return Err(Error::InvalidWeight(format!(
                "recurrence of order {d} needs {d} initial values, got {}",
                initial.len()
            )));
        }
        let start = initial.keys().next().copied().unwrap_or(0);
        for (offset, k) in initial.keys().enumerate() {
            if *k != start + offset as i64 {
                return Err(Error::InvalidWeight("initial window must be contiguous".into()));
            }
        }
        Ok(Self { char_poly, start, window: initial.into_values().collect() })
    }

    pub fn order(&self) -> usize {
        self.char_poly.len() - 1
    }

    pub fn char_poly(&self) -> &[T] {
        &self.char_poly
    }

    pub fn initial(&self) -> BTreeMap<i64, T> {
        (self.start..).zip(self.window.iter().cloned()).collect()
    }

    /// Values on `lo..=hi`.
    pub fn values(&self, lo: i64, hi: i64) -> Vec<T> {
        if hi < lo {
            return Vec::new();
        }
        let d = self.order();
        if d == 0 {
            return vec![T::zero(); (hi - lo + 1) as usize];
        }
        let end = self.start + d as i64 - 1;
        let from = lo.min(self.start);
        let to = hi.max(end);
        let mut seq = vec![T::zero(); (to - from + 1) as usize];
        let base = (self.start - from) as usize;
        seq[base..base + d].clone_from_slice(&self.window);
        let rho = &self.char_poly;
        // forward: u(n+d) = -(Σ_{s<d} ρ_s u(n+s)) / ρ_d
        for pos in base + d..seq.len() {
            let n = pos - d;
            let mut acc = T::zero();
            for s in 0..d {
                acc = acc + rho[s].clone() * seq[n + s].clone();
            }
            seq[pos] = -acc / rho[d].clone();
        }
        // backward: u(n) = -(Σ_{s>=1} ρ_s u(n+s)) / ρ_0
        for pos in (0..base).rev() {
            let mut acc = T::zero();
            for s in 1..=d {
                acc = acc + rho[s].clone() * seq[pos + s].clone();
            }
            seq[pos] = -acc / rho[0].clone();
        }
        let off = (lo - from) as usize;
        seq[off..off + (hi - lo + 1) as usize].to_vec()
    }

    pub fn value(&self, i: i64) -> T {
        self.values(i, i).pop().expect("one value")
    }
}

/// A highest weight: central charge `c = Λ(C)` and labels `Λ_i = Λ(L[0,i-1])`.
/// Labels are a finitely supported part plus an optional two-sided recurrent part.
#[derive(Clone, PartialEq, Debug)]
pub struct Weight<T> {
    central_charge: T,
    finite_labels: BTreeMap<i64, T>,
    recurrent: Option<Recurrence<T>>,
}

impl<T: Scalar> Weight<T> {
    pub fn new(central_charge: T, finite_labels: BTreeMap<i64, T>, recurrent: Option<Recurrence<T>>) -> Self {
        let finite_labels = finite_labels.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Self { central_charge, finite_labels, recurrent }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), BTreeMap::new(), None)
    }

    /// Only finitely many nonzero labels.
    pub fn finite(central_charge: T, labels: impl IntoIterator<Item = (i64, T)>) -> Self {
        Self::new(central_charge, labels.into_iter().collect(), None)
    }

    /// `Λ_i = rⁱ`, `c = 0`.
    pub fn geometric(r: T) -> Result<Self> {
        let rec = Recurrence::new(vec![-r, T::one()], BTreeMap::from([(0, T::one())]))?;
        Ok(Self::new(T::zero(), BTreeMap::new(), Some(rec)))
    }

    pub fn with_central_charge(mut self, c: T) -> Self {
        self.central_charge = c;
        self
    }

    pub fn central_charge(&self) -> &T {
        &self.central_charge
    }

    pub fn finite_labels(&self) -> &BTreeMap<i64, T> {
        &self.finite_labels
    }

    pub fn recurrent(&self) -> Option<&Recurrence<T>> {
        self.recurrent.as_ref()
    }

    pub fn label(&self, i: i64) -> T {
        let mut v = self.finite_labels.get(&i).cloned().unwrap_or_else(T::zero);
        if let Some(r) = &self.recurrent {
            v = v + r.value(i);
        }
        v
    }

    /// Labels on `lo..=hi` in one pass.
    pub fn labels(&self, lo: i64, hi: i64) -> Vec<T> {
        let mut out = match &self.recurrent {
            Some(r) => r.values(lo, hi),
            None => vec![T::zero(); (hi - lo + 1).max(0) as usize],
        };
        for (i, v) in self.finite_labels.range(lo..=hi) {
            let slot = &mut out[(i - lo) as usize];
            *slot = slot.clone() + v.clone();
        }
        out
    }

    /// True when every label and the central charge vanish.
    pub fn is_zero(&self) -> bool {
        self.central_charge.is_zero()
            && self.finite_labels.is_empty()
            && self.recurrent.as_ref().is_none_or(|r| r.window.iter().all(T::is_zero))
    }

    /// Scalar by which a degree-zero symbol acts on `v`; `None` for other degrees.
    fn eval_on_vacuum(&self, s: BasisSymbol) -> Option<T> {
        match s {
            BasisSymbol::Central => Some(self.central_charge.clone()),
            BasisSymbol::Gen { deg: 0, idx } => Some(self.label(idx + 1)),
            BasisSymbol::Gen { .. } => None,
        }
    }
}

/// Normal-ordered monomial `L[-a1,i1] ... L[-ak,ik] v`, stored as `(a, i)` pairs with `a > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PbwMonomial {
    factors: Vec<(i64, i64)>,
}

impl PbwMonomial {
    pub fn vacuum() -> Self {
        Self::default()
    }

    /// Fails unless every `a > 0` and the pairs are non-decreasing.
    pub fn new(factors: Vec<(i64, i64)>) -> Result<Self> {
        if factors.iter().any(|&(a, _)| a <= 0) {
            return Err(Error::InvalidArgument("PBW factors need positive depth".into()));
        }
        if factors.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument("PBW factors are not in normal order".into()));
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[(i64, i64)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `-Σ a_s`.
    pub fn degree(&self) -> i64 {
        -self.factors.iter().map(|&(a, _)| a).sum::<i64>()
    }

    fn symbols(&self) -> impl Iterator<Item = BasisSymbol> + '_ {
        self.factors.iter().map(|&(a, i)| BasisSymbol::gen(-a, i))
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors
            .len()
            .cmp(&other.factors.len())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("v");
        }
        f.write_str("* ")?;
        for (a, i) in &self.factors {
            write!(f, "L[-{a},{i}]")?;
        }
        f.write_str(" v")
    }
}

/// Finite combination of PBW monomials.
#[derive(Clone, PartialEq, Debug)]
pub struct ModuleVector<T> {
    terms: BTreeMap<PbwMonomial, T>,
}

impl<T: Scalar> Default for ModuleVector<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> ModuleVector<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// The highest weight vector `v`.
    pub fn vacuum() -> Self {
        Self::monomial(T::one(), PbwMonomial::vacuum())
    }

    pub fn monomial(c: T, m: PbwMonomial) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &T)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &T) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone() * s.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &T::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-T::one());
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(PbwMonomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Graded components keyed by degree.
    pub fn degree_decompose(&self) -> BTreeMap<i64, ModuleVector<T>> {
        let mut out: BTreeMap<i64, ModuleVector<T>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// `Σ_i c_i L[-1,i] v`.
    pub fn from_depth_one(coeffs: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut v = Self::zero();
        for (i, c) in coeffs {
            v.add_term(PbwMonomial { factors: vec![(1, i)] }, c);
        }
        v
    }
}

impl<T: Scalar> fmt::Display for ModuleVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.terms.iter().map(|(m, c)| (c.clone(), m.to_string())))
    }
}

/// Element of the enveloping algebra as a product of Lie elements, applied right to left.
#[derive(Clone, PartialEq, Debug)]
pub struct LieWord<T> {
    factors: Vec<LieElement<T>>,
}

impl<T: Scalar> LieWord<T> {
    pub fn new(factors: Vec<LieElement<T>>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument("empty Lie word".into()));
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[LieElement<T>] {
        &self.factors
    }
}

/// Which out-of-order adjacent pair to resolve first.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Straightening engine bound to one weight. The memo lives as long as the
/// value, so share one across a batch of actions on the same weight.
pub struct Straightener<'w, T> {
    weight: &'w Weight<T>,
    strategy: Strategy,
    memo: HashMap<Vec<BasisSymbol>, ModuleVector<T>>,
}

/// Sort key placing lowering generators in normal order and everything
/// else after them.
fn normal_key(s: &BasisSymbol) -> (u8, i64, i64) {
    match *s {
        BasisSymbol::Gen { deg, idx } if deg < 0 => (0, -deg, idx),
        _ => (1, 0, 0),
    }
}

impl<'w, T: Scalar> Straightener<'w, T> {
    pub fn new(weight: &'w Weight<T>, strategy: Strategy) -> Self {
        Self { weight, strategy, memo: HashMap::new() }
    }

    /// The product `word[0] word[1] ... v` in the PBW basis.
    pub fn reduce(&mut self, word: &[BasisSymbol]) -> ModuleVector<T> {
        if let Some(v) = self.memo.get(word) {
            return v.clone();
        }
        let v = self.reduce_uncached(word);
        self.memo.insert(word.to_vec(), v.clone());
        v
    }

    fn reduce_uncached(&mut self, word: &[BasisSymbol]) -> ModuleVector<T> {
        if let Some(p) = word.iter().position(|s| *s == BasisSymbol::Central) {
            let c = self.weight.central_charge.clone();
            if c.is_zero() {
                return ModuleVector::zero();
            }
            let rest: Vec<_> = word[..p].iter().chain(&word[p + 1..]).copied().collect();
            return self.reduce(&rest).scale(&c);
        }
        let Some((&last, prefix)) = word.split_last() else {
            return ModuleVector::vacuum();
        };
        if last.degree() >= 0 {
            return match self.weight.eval_on_vacuum(last) {
                Some(s) if !s.is_zero() => self.reduce(prefix).scale(&s),
                _ => ModuleVector::zero(),
            };
        }
        let mut inversions = (0..word.len() - 1).filter(|&p| normal_key(&word[p]) > normal_key(&word[p + 1]));
        let pos = match self.strategy {
            Strategy::Leftmost => inversions.next(),
            Strategy::Rightmost => inversions.next_back(),
        };
        let Some(p) = pos else {
            let factors = word
                .iter()
                .map(|s| match *s {
                    BasisSymbol::Gen { deg, idx } => (-deg, idx),
                    BasisSymbol::Central => unreachable!("central factors were extracted"),
                })
                .collect();
            return ModuleVector::monomial(T::one(), PbwMonomial { factors });
        };
        // AB = BA + [A,B]
        let mut swapped = word.to_vec();
        swapped.swap(p, p + 1);
        let mut out = self.reduce(&swapped);
        let comm = bracket_basis::<T>(word[p], word[p + 1]);
        for (s, c) in comm.terms() {
            let shorter: Vec<_> = word[..p].iter().chain(std::iter::once(s)).chain(&word[p + 2..]).copied().collect();
            let v = self.reduce(&shorter);
            out.add_scaled(&v, c);
        }
        out
    }

    pub fn act_basis(&mut self, a: BasisSymbol, m: &PbwMonomial) -> ModuleVector<T> {
        let word: Vec<_> = std::iter::once(a).chain(m.symbols()).collect();
        self.reduce(&word)
    }

    pub fn act(&mut self, x: &LieElement<T>, v: &ModuleVector<T>) -> ModuleVector<T> {
        let mut out = ModuleVector::zero();
        for (s, a) in x.terms() {
            for (m, b) in v.terms() {
                let r = self.act_basis(*s, m);
                out.add_scaled(&r, &(a.clone() * b.clone()));
            }
        }
        out
    }

    pub fn act_word(&mut self, w: &LieWord<T>) -> ModuleVector<T> {
        w.factors
            .iter()
            .rev()
            .fold(ModuleVector::vacuum(), |v, x| self.act(x, &v))
    }
}

pub fn act_basis<T: Scalar>(a: BasisSymbol, m: &PbwMonomial, weight: &Weight<T>) -> ModuleVector<T> {
    Straightener::new(weight, Strategy::Leftmost).act_basis(a, m)
}

pub fn act<T: Scalar>(x: &LieElement<T>, v: &ModuleVector<T>, weight: &Weight<T>) -> ModuleVector<T> {
    Straightener::new(weight, Strategy::Leftmost).act(x, v)
}

pub fn act_word<T: Scalar>(w: &LieWord<T>, weight: &Weight<T>) -> ModuleVector<T> {
    Straightener::new(weight, Strategy::Leftmost).act_word(w)
}

/// Finite set of raising rows `k` certified to imply the full row condition.
///
/// Rows have the shape `r(k) = Σ_{s ∈ shifts} a_s τ(k+s)` with
/// `τ(n) = n Λ_{n-1} - δ(n,0) c`. The finitely supported part of `τ` is
/// nonzero only on finitely many `n`; the recurrent part satisfies the
/// recurrence with characteristic polynomial `ρ²` (order `2d`), so once the
/// finite rows are covered, `2d` extra consecutive zero rows on each side
/// force the recurrent part of `r` to vanish identically.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RowCertificate {
    pub lo: i64,
    pub hi: i64,
    /// Rows carrying the finitely supported part, if any.
    pub finite_rows: Option<(i64, i64)>,
    /// Order of the recurrence the recurrent part of the rows obeys (`2d`).
    pub recurrence_order: usize,
}

impl RowCertificate {
    pub fn range(&self) -> RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1).max(0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }
}

/// Default cap on certificate length.
pub const DEFAULT_MAX_ROWS: usize = 10_000;

/// Certified row range for shifts `lo..=hi`, widened to include `floor`.
pub fn certified_rows<T: Scalar>(
    weight: &Weight<T>,
    shifts: RangeInclusive<i64>,
    floor: Option<RangeInclusive<i64>>,
    max_rows: usize,
) -> Result<RowCertificate> {
    let (s_lo, s_hi) = (*shifts.start(), *shifts.end());
    // support of the finite part of τ
    let mut support: Vec<i64> = weight.finite_labels.keys().map(|i| i + 1).filter(|&n| n != 0).collect();
    if !weight.central_charge.is_zero() {
        support.push(0);
    }
    let finite_rows = match (support.iter().min(), support.iter().max()) {
        (Some(&lo), Some(&hi)) => Some((lo - s_hi, hi - s_lo)),
        _ => None,
    };
    let ext = 2 * weight.recurrent.as_ref().map_or(0, Recurrence::order) as i64;
    let mut range: Option<(i64, i64)> = match (finite_rows, ext) {
        (Some((lo, hi)), e) => Some((lo - e, hi + e)),
        (None, 0) => None,
        (None, e) => Some((-e, e)),
    };
    if let Some(f) = floor.filter(|f| !f.is_empty()) {
        range = Some(match range {
            Some((lo, hi)) => (lo.min(*f.start()), hi.max(*f.end())),
            None => (*f.start(), *f.end()),
        });
    }
    let (lo, hi) = range.unwrap_or((0, -1));
    let cert = RowCertificate { lo, hi, finite_rows, recurrence_order: ext as usize };
    if cert.len() > max_rows {
        return Err(Error::WindowInsufficient { needed: cert.len(), limit: max_rows });
    }
    Ok(cert)
}

/// Result of [`singular_at_minus_one`].
#[derive(Clone, PartialEq, Debug)]
pub struct SingularSearch<T> {
    pub basis: Vec<ModuleVector<T>>,
    pub certificate: RowCertificate,
}

/// Basis of the degree -1 vectors supported on `L[-1,i] v`, `i ∈ i_window`,
/// killed by every `L[1,k]`. The rows `k` come from [`certified_rows`];
/// `k_floor` only widens them.
pub fn singular_at_minus_one<T: Scalar>(
    weight: &Weight<T>,
    i_window: RangeInclusive<i64>,
    k_floor: RangeInclusive<i64>,
    max_rows: usize,
) -> Result<SingularSearch<T>> {
    if i_window.is_empty() || k_floor.is_empty() {
        return Err(Error::InvalidArgument("windows must be nonempty".into()));
    }
    // L[1,k] L[-1,i] v involves τ(k+i+2)
    let shifts = i_window.start() + 2..=i_window.end() + 2;
    let cert = certified_rows(weight, shifts, Some(k_floor), max_rows)?;
    let cols: Vec<i64> = i_window.collect();
    let mut st = Straightener::new(weight, Strategy::Leftmost);
    let rows: Vec<Vec<T>> = cert
        .range()
        .map(|k| {
            cols.iter()
                .map(|&i| {
                    let m = PbwMonomial { factors: vec![(1, i)] };
                    st.act_basis(BasisSymbol::gen(1, k), &m).coeff(&PbwMonomial::vacuum())
                })
                .collect()
        })
        .collect();
    let basis = crate::linalg::kernel(rows, cols.len())
        .into_iter()
        .map(|v| ModuleVector::from_depth_one(cols.iter().copied().zip(v)))
        .collect();
    Ok(SingularSearch { basis, certificate: cert })
}

#[derive(Clone, PartialEq, Debug)]
pub struct SingularCheck {
    pub singular: bool,
    /// First row `k` with `L[1,k] v != 0`.
    pub failing_row: Option<i64>,
    pub certificate: RowCertificate,
}

/// Whether a degree -1 vector is killed by every `L[1,k]` (and hence by all
/// of the positive part, since degrees above zero are empty).
pub fn is_singular<T: Scalar>(
    v: &ModuleVector<T>,
    weight: &Weight<T>,
    k_floor: RangeInclusive<i64>,
    max_rows: usize,
) -> Result<SingularCheck> {
    if v.terms().any(|(m, _)| m.factors.len() != 1 || m.factors[0].0 != 1) {
        return Err(Error::WrongDegree(
            "expected a combination of L[-1,i] v terms (degree -1)".into(),
        ));
    }
    let idx: Vec<i64> = v.terms().map(|(m, _)| m.factors[0].1).collect();
    let shifts = match (idx.iter().min(), idx.iter().max()) {
        (Some(lo), Some(hi)) => lo + 2..=hi + 2,
        _ => 0..=0,
    };
    let cert = certified_rows(weight, shifts, Some(k_floor), max_rows)?;
    let mut st = Straightener::new(weight, Strategy::Leftmost);
    let failing_row = cert
        .range()
        .find(|&k| !st.act(&LieElement::gen(1, k), v).is_zero());
    Ok(SingularCheck { singular: failing_row.is_none(), failing_row, certificate: cert })
}

/// All normal-ordered monomials of degree `-n` with second indices in `window`.
pub fn pbw_basis(n: i64, window: RangeInclusive<i64>) -> Vec<PbwMonomial> {
    fn go(
        rest: i64,
        min: (i64, i64),
        window: &RangeInclusive<i64>,
        acc: &mut Vec<(i64, i64)>,
        out: &mut Vec<PbwMonomial>,
    ) {
        if rest == 0 {
            out.push(PbwMonomial { factors: acc.clone() });
            return;
        }
        for a in min.0..=rest {
            let lo = if a == min.0 { min.1 } else { *window.start() };
            for i in lo..=*window.end() {
                acc.push((a, i));
                go(rest - a, (a, i), window, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 && !window.is_empty() {
        go(n, (1, *window.start()), &window, &mut Vec::new(), &mut out);
    }
    out
}
