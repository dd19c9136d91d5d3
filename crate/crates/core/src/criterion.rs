//! Reducibility of `M(Λ)` and quasifiniteness of its irreducible quotient.
//!
//! Everything reduces to one two-sided sequence
//!
//! ```text
//! τ(n) = n Λ_{n-1} - δ(n,0) c
//! ```
//!
//! `x⁻¹f(t) v` with `f = Σ a_j tʲ` is singular iff every condition row
//! `s_k = Σ_j a_j τ(k+j)` vanishes, and the exponential-basis coefficients of
//! the `j`-th `Σ` series are the window `τ(-j), τ(1-j), ...`. So a witness
//! polynomial, a degree -1 singular vector, and a constant-coefficient
//! recurrence shared by all `Σ` series are three views of the same fact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::Rref;
use crate::scalar::Scalar;
use crate::verma::{certified_rows, RowCertificate, Weight, DEFAULT_MAX_ROWS};

/// `f(t) = Σ_j a_j tʲ` with nonzero leading coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct WitnessPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> WitnessPolynomial<T> {
    /// Ascending coefficients; trailing zeros are dropped. Fails on the zero polynomial.
    pub fn new(mut coeffs: Vec<T>) -> Result<Self> {
        while coeffs.last().is_some_and(T::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("witness polynomial must be nonzero".into()));
        }
        Ok(Self { coeffs })
    }

    /// `(t - r)^k`.
    pub fn power_of_linear(r: T, k: usize) -> Self {
        let mut c = vec![T::one()];
        for _ in 0..k {
            let mut next = vec![T::zero(); c.len() + 1];
            for (n, a) in c.iter().enumerate() {
                next[n + 1] = next[n + 1].clone() + a.clone();
                next[n] = next[n].clone() - a.clone() * r.clone();
            }
            c = next;
        }
        Self { coeffs: c }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `a_n`, zero outside `0..=m`.
    pub fn coeff(&self, n: i64) -> T {
        usize::try_from(n)
            .ok()
            .and_then(|n| self.coeffs.get(n).cloned())
            .unwrap_or_else(T::zero)
    }

    pub fn monic(&self) -> Self {
        let lead = self.coeffs.last().expect("nonzero").clone();
        Self { coeffs: self.coeffs.iter().map(|a| a.clone() / lead.clone()).collect() }
    }

    pub fn to_laurent(&self) -> LaurentPoly<T> {
        LaurentPoly::from_coeffs(&self.coeffs)
    }
}

impl<T: Scalar> fmt::Display for WitnessPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_laurent().fmt(f)
    }
}

/// `τ(n) = n Λ_{n-1} - δ(n,0) c` on `lo..=hi`.
pub fn tau_window<T: Scalar>(weight: &Weight<T>, lo: i64, hi: i64) -> Vec<T> {
    weight
        .labels(lo - 1, hi - 1)
        .into_iter()
        .zip(lo..)
        .map(|(l, n)| {
            let v = T::from_int(n) * l;
            if n == 0 {
                v - weight.central_charge().clone()
            } else {
                v
            }
        })
        .collect()
}

/// `s_k = Σ_j a_j (k+j) Λ_{k+j-1} - a_{-k} c`.
pub fn condition_row<T: Scalar>(weight: &Weight<T>, f: &WitnessPolynomial<T>, k: i64) -> T {
    let m = f.degree() as i64;
    let labels = weight.labels(k - 1, k + m - 1);
    let mut s = T::zero();
    for (j, (a, l)) in f.coeffs.iter().zip(labels).enumerate() {
        s = s + a.clone() * T::from_int(k + j as i64) * l;
    }
    s - f.coeff(-k) * weight.central_charge().clone()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessOptions {
    /// Rows always included, in addition to the certified ones.
    pub k_floor: Option<RangeInclusive<i64>>,
    pub max_rows: usize,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        Self { k_floor: None, max_rows: DEFAULT_MAX_ROWS }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct WitnessSearch<T> {
    pub witness: Option<WitnessPolynomial<T>>,
    /// Rows used at the last degree tried.
    pub certificate: RowCertificate,
    pub max_degree: usize,
}

/// Smallest-degree monic `f` with every condition row zero, searching degrees `0..=max_degree`.
pub fn reducibility_witness<T: Scalar>(
    weight: &Weight<T>,
    max_degree: usize,
    opts: &WitnessOptions,
) -> Result<WitnessSearch<T>> {
    let mut certificate = None;
    for m in 0..=max_degree {
        let cert = certified_rows(weight, 0..=m as i64, opts.k_floor.clone(), opts.max_rows)?;
        let tau = if cert.is_empty() {
            Vec::new()
        } else {
            tau_window(weight, cert.lo, cert.hi + m as i64)
        };
        let rows: Vec<Vec<T>> = (0..cert.len()).map(|r| tau[r..=r + m].to_vec()).collect();
        let kernel = Rref::new(rows, m + 1).kernel();
        if let Some(v) = kernel.into_iter().next() {
            let f = strip_low_powers(v);
            return Ok(WitnessSearch {
                witness: Some(WitnessPolynomial::new(f)?.monic()),
                certificate: cert,
                max_degree,
            });
        }
        certificate = Some(cert);
    }
    Ok(WitnessSearch {
        witness: None,
        certificate: certificate.expect("at least degree 0 is tried"),
        max_degree,
    })
}

/// `f / t^s` for the largest `s` with `t^s | f`. The row system is shift
/// invariant, so this keeps `f` a witness.
fn strip_low_powers<T: Scalar>(mut v: Vec<T>) -> Vec<T> {
    let lead_zeros = v.iter().take_while(|a| a.is_zero()).count();
    v.drain(..lead_zeros.min(v.len().saturating_sub(1)));
    v
}

/// Coefficients `b_0..=b_n` of a series in the basis `zⁱ / i!`.
#[derive(Clone, PartialEq, Debug)]
pub struct SeriesWindow<T> {
    pub j: i64,
    pub coeffs: Vec<T>,
}

/// `Δ^(j)(z) = Σ_i Λ_{i+j} zⁱ/i!`, terms `0..=n`.
pub fn delta_series<T: Scalar>(weight: &Weight<T>, j: i64, n: usize) -> SeriesWindow<T> {
    SeriesWindow { j, coeffs: weight.labels(j, j + n as i64) }
}

/// `Σ^(j)(z) = z Δ^(-j)(z) - j Δ^(-j-1)(z) - c zʲ/j!`, terms `0..=n`.
///
/// Coefficient `i` is `(i-j) Λ_{i-j-1} - c δ(i,j)`. For `j < 0` the last
/// summand is dropped (`1/j! = 0`), which never matters for `i >= 0` anyway.
pub fn sigma_series<T: Scalar>(weight: &Weight<T>, j: i64, n: usize) -> SeriesWindow<T> {
    SeriesWindow { j, coeffs: tau_window(weight, -j, n as i64 - j) }
}

/// Monic `ρ` (ascending) with `Σ_s ρ_s b_{i+s} = 0` for every `i` in `rows`.
#[derive(Clone, PartialEq, Debug)]
pub struct RecurrenceCertificate<T> {
    pub char_poly: Vec<T>,
    pub rows: (usize, usize),
}

impl<T: Scalar> RecurrenceCertificate<T> {
    pub fn order(&self) -> usize {
        self.char_poly.len() - 1
    }
}

/// True iff `Σ_s ρ_s b_{i+s} = 0` for every `i` where the window reaches.
pub fn annihilates<T: Scalar>(char_poly: &[T], window: &[T]) -> bool {
    let d = char_poly.len().saturating_sub(1);
    (0..window.len().saturating_sub(d)).all(|i| {
        char_poly
            .iter()
            .zip(&window[i..])
            .fold(T::zero(), |acc, (r, b)| acc + r.clone() * b.clone())
            .is_zero()
    })
}

/// Smallest-order recurrence `ρ` with `ρ_0 != 0` satisfied by the window.
///
/// A nonzero constant term is required: the windows come from a two-sided
/// sequence, on which `tˢ g(t)` annihilates iff `g` does, and it keeps a
/// window that ends in zeros from being "explained" by `tˢ`.
pub fn detect_recurrence<T: Scalar>(
    w: &SeriesWindow<T>,
    max_order: usize,
) -> Result<Option<RecurrenceCertificate<T>>> {
    detect_common_recurrence(std::slice::from_ref(w), max_order)
}

/// Like [`detect_recurrence`], but one `ρ` for all windows at once.
pub fn detect_common_recurrence<T: Scalar>(
    windows: &[SeriesWindow<T>],
    max_order: usize,
) -> Result<Option<RecurrenceCertificate<T>>> {
    let shortest = windows.iter().map(|w| w.coeffs.len()).min().unwrap_or(0);
    if shortest < 2 * max_order || shortest == 0 {
        return Err(Error::WindowTooShort(format!(
            "recurrence detection up to order {max_order} needs {} terms, have {shortest}",
            (2 * max_order).max(1)
        )));
    }
    for d in 0..=max_order {
        let rows: Vec<Vec<T>> = windows
            .iter()
            .flat_map(|w| (0..w.coeffs.len() - d).map(move |i| w.coeffs[i..=i + d].to_vec()))
            .collect();
        let kernel = Rref::new(rows, d + 1).kernel();
        if let Some(rho) = pick_reversible(&kernel, d) {
            let lead = rho[d].clone();
            let char_poly = rho.into_iter().map(|a| a / lead.clone()).collect();
            return Ok(Some(RecurrenceCertificate { char_poly, rows: (0, shortest - d - 1) }));
        }
    }
    Ok(None)
}

/// A kernel vector with nonzero first and last entries, if the kernel has one.
fn pick_reversible<T: Scalar>(kernel: &[Vec<T>], d: usize) -> Option<Vec<T>> {
    let lead = kernel.iter().find(|v| !v[d].is_zero())?;
    if !lead[0].is_zero() {
        return Some(lead.clone());
    }
    let low = kernel.iter().find(|v| !v[0].is_zero())?;
    // lead + λ low: first entry is λ low[0] != 0, last entry vanishes for at most one λ
    (1..=2).map(T::from_int).find_map(|l| {
        let v: Vec<T> = lead.iter().zip(low).map(|(a, b)| a.clone() + l.clone() * b.clone()).collect();
        (!v[d].is_zero()).then_some(v)
    })
}

/// `-i j t^(j-1) f g - i tʲ f' g + tʲ f g'`: the `t`-part of `[x⁻¹tʲf, x⁻ⁱg]`.
pub fn parabolic_step<T: Scalar>(f: &WitnessPolynomial<T>, i: i64, g: &LaurentPoly<T>, j: i64) -> LaurentPoly<T> {
    let f = f.to_laurent();
    let fg = f.mul(g);
    let a = fg.shift(j - 1).scale(&T::from_int(-i * j));
    let b = f.derivative().mul(g).shift(j).scale(&T::from_int(-i));
    let c = f.mul(&g.derivative()).shift(j);
    a.add(&b).add(&c)
}

/// Generators `g` with `x^(-depth) g(t)` in the parabolic subalgebra.
#[derive(Clone, PartialEq, Debug)]
pub struct ParabolicSlice<T> {
    pub depth: usize,
    pub generators: Vec<LaurentPoly<T>>,
}

/// Starting from `x⁻¹f`, applies [`parabolic_step`] with each `j` in `shifts`
/// to produce generators at depths `1..=max_depth`. Keeps only nonzero results.
pub fn parabolic_chain<T: Scalar>(
    f: &WitnessPolynomial<T>,
    max_depth: usize,
    shifts: RangeInclusive<i64>,
) -> Vec<ParabolicSlice<T>> {
    let mut slices = vec![ParabolicSlice { depth: 1, generators: vec![f.to_laurent()] }];
    while slices.len() < max_depth {
        let last = slices.last().expect("nonempty");
        let i = last.depth as i64;
        let generators = last
            .generators
            .iter()
            .take(1)
            .flat_map(|g| shifts.clone().map(move |j| parabolic_step(f, i, g, j)))
            .filter(|p| !p.is_zero())
            .collect();
        slices.push(ParabolicSlice { depth: last.depth + 1, generators });
        if slices.last().is_some_and(|s| s.generators.is_empty()) {
            break;
        }
    }
    slices
}

/// Codimension of `f · (Laurent polynomials that fit)` inside the Laurent
/// polynomials supported on `window`.
pub fn p1_codimension<T: Scalar>(f: &WitnessPolynomial<T>, window: RangeInclusive<i64>) -> Result<usize> {
    let (lo, hi) = (*window.start(), *window.end());
    let width = (hi - lo + 1).max(0) as usize;
    if width <= 2 * f.degree() {
        return Err(Error::WindowTooShort(format!(
            "window of {width} exponents, need more than {}",
            2 * f.degree()
        )));
    }
    let fl = f.to_laurent();
    let (f_lo, f_hi) = (fl.min_degree().unwrap_or(0), fl.max_degree().unwrap_or(0));
    let rows: Vec<Vec<T>> = (lo - f_lo..=hi - f_hi)
        .map(|s| {
            let p = fl.shift(s);
            (lo..=hi).map(|n| p.coeff(n)).collect()
        })
        .collect();
    let rank = Rref::new(rows, width).rank();
    Ok(width - rank)
}

/// Verdict of the reducibility search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// A witness exists: `M(Λ)` is reducible and its irreducible quotient is quasifinite.
    Reducible,
    /// No witness of degree at most the bound.
    IrreducibleUpTo(usize),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Reducible => f.write_str("REDUCIBLE"),
            Verdict::IrreducibleUpTo(m) => write!(f, "IRREDUCIBLE-UP-TO({m})"),
        }
    }
}

impl std::str::FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "REDUCIBLE" {
            return Ok(Verdict::Reducible);
        }
        s.strip_prefix("IRREDUCIBLE-UP-TO(")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|m| m.parse().ok())
            .map(Verdict::IrreducibleUpTo)
            .ok_or_else(|| Error::Parse(format!("unknown verdict {s:?}")))
    }
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Verdict {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnalysisParams {
    pub max_degree: usize,
    pub j_set: Vec<i64>,
    /// Index of the last series coefficient; windows hold `terms + 1` values.
    pub terms: usize,
    pub witness: WitnessOptions,
}

impl Default for AnalysisParams {
    fn default() -> Self {
        Self { max_degree: 8, j_set: vec![-2, -1, 0, 1, 2], terms: 24, witness: WitnessOptions::default() }
    }
}

impl AnalysisParams {
    /// Largest recurrence order tried: keeps every order's system at least square.
    pub fn max_order(&self) -> usize {
        self.terms / 2
    }
}

/// One `Σ` series in a [`Report`]. Rationals are `"p/q"` strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeriesResult {
    pub j: i64,
    pub coeffs: Vec<String>,
    /// Smallest recurrence found for this window alone, ascending and monic.
    pub minimal_recurrence: Option<Vec<String>>,
    /// Whether the witness coefficients annihilate the window; absent without a witness.
    pub witness_annihilates: Option<bool>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Conventions {
    pub negative_j: String,
    pub series_basis: String,
    pub recurrence: String,
}

impl Default for Conventions {
    fn default() -> Self {
        Self {
            negative_j: "c z^j/j! is taken as 0 for j < 0".into(),
            series_basis: "coefficient i multiplies z^i/i!".into(),
            recurrence: "monic, nonzero constant term, ascending coefficients".into(),
        }
    }
}

/// Full analysis of one weight. Every rational is a `"p/q"` string, so the
/// JSON form round-trips exactly.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub verdict: Verdict,
    pub quasifinite_quotient: bool,
    pub max_degree: usize,
    /// Ascending coefficients of the monic witness.
    pub witness: Option<Vec<String>>,
    pub witness_text: Option<String>,
    pub rows: RowCertificate,
    pub j_set: Vec<i64>,
    pub terms: usize,
    pub max_order: usize,
    pub series: Vec<SeriesResult>,
    /// Smallest recurrence shared by every `Σ` window.
    pub common_recurrence: Option<Vec<String>>,
    /// Witness annihilates every window (absent without a witness).
    pub uniform_witness_check: Option<bool>,
    pub conventions: Conventions,
}

fn strings<T: Scalar>(v: &[T]) -> Vec<String> {
    v.iter().map(T::to_string).collect()
}

/// Witness search, `Σ` windows for every `j`, and the cross-checks between them.
pub fn quasifinite_verdict<T: Scalar>(weight: &Weight<T>, params: &AnalysisParams) -> Result<Report> {
    let search = reducibility_witness(weight, params.max_degree, &params.witness)?;
    let max_order = params.max_order();
    let windows: Vec<SeriesWindow<T>> = params.j_set.iter().map(|&j| sigma_series(weight, j, params.terms)).collect();
    let mut series = Vec::with_capacity(windows.len());
    for w in &windows {
        let rec = detect_recurrence(w, max_order)?;
        series.push(SeriesResult {
            j: w.j,
            coeffs: strings(&w.coeffs),
            minimal_recurrence: rec.map(|r| strings(&r.char_poly)),
            witness_annihilates: search.witness.as_ref().map(|f| annihilates(f.coeffs(), &w.coeffs)),
        });
    }
    let common = if windows.is_empty() {
        None
    } else {
        detect_common_recurrence(&windows, max_order)?
    };
    let uniform = search
        .witness
        .as_ref()
        .map(|_| series.iter().all(|s| s.witness_annihilates == Some(true)));
    let verdict = match search.witness {
        Some(_) => Verdict::Reducible,
        None => Verdict::IrreducibleUpTo(params.max_degree),
    };
    Ok(Report {
        verdict,
        quasifinite_quotient: verdict == Verdict::Reducible,
        max_degree: params.max_degree,
        witness: search.witness.as_ref().map(|f| strings(f.coeffs())),
        witness_text: search.witness.as_ref().map(ToString::to_string),
        rows: search.certificate,
        j_set: params.j_set.clone(),
        terms: params.terms,
        max_order,
        series,
        common_recurrence: common.map(|r| strings(&r.char_poly)),
        uniform_witness_check: uniform,
        conventions: Conventions::default(),
    })
}

fn poly_text(coeffs: &[String]) -> String {
    let parsed: Option<Vec<num_rational::BigRational>> =
        coeffs.iter().map(|c| crate::scalar::parse_rational(c).ok()).collect();
    match parsed {
        Some(p) => LaurentPoly::from_coeffs(&p).to_string(),
        None => format!("{coeffs:?}"),
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(f, "quasifinite quotient: {}", if self.quasifinite_quotient { "yes" } else { "not established" })?;
        match &self.witness_text {
            Some(w) => writeln!(f, "witness: {w}")?,
            None => writeln!(f, "witness: none up to degree {}", self.max_degree)?,
        }
        writeln!(
            f,
            "rows: k in [{}, {}] (recurrence order {})",
            self.rows.lo, self.rows.hi, self.rows.recurrence_order
        )?;
        writeln!(f, "series: terms 0..={}, recurrence order <= {}", self.terms, self.max_order)?;
        for s in &self.series {
            let rec = s.minimal_recurrence.as_deref().map_or("none".to_string(), poly_text);
            write!(f, "  j={}: [{}]; minimal recurrence {rec}", s.j, s.coeffs.join(", "))?;
            if let Some(ok) = s.witness_annihilates {
                write!(f, "; witness annihilates: {ok}")?;
            }
            writeln!(f)?;
        }
        let common = self.common_recurrence.as_deref().map_or("none".to_string(), poly_text);
        writeln!(f, "common recurrence: {common}")?;
        if let Some(u) = self.uniform_witness_check {
            writeln!(f, "witness annihilates every series: {u}")?;
        }
        writeln!(f, "conventions: {}; {}; {}", self.conventions.negative_j, self.conventions.series_basis, self.conventions.recurrence)
    }
}

/// Grouped labels for reporting, `index -> "p/q"`.
pub fn label_strings<T: Scalar>(weight: &Weight<T>, lo: i64, hi: i64) -> BTreeMap<i64, String> {
    (lo..=hi).zip(weight.labels(lo, hi)).map(|(i, v)| (i, v.to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&n| q(n)).collect()
    }

    fn poly(v: &[i64]) -> WitnessPolynomial<Q> {
        WitnessPolynomial::new(qs(v)).unwrap()
    }

    #[test]
    fn rows_for_geometric_weight() {
        let w = Weight::geometric(q(2)).unwrap();
        let sq = poly(&[4, -4, 1]);
        for k in -6..=6 {
            assert_eq!(condition_row(&w, &sq, k), q(0), "k={k}");
        }
        // 2^0 (1·f(2) + 2·f'(2)) with f = t - 2
        assert_eq!(condition_row(&w, &poly(&[-2, 1]), 1), q(2));
        assert_eq!(condition_row(&Weight::zero(), &sq, 3), q(0));
    }

    #[test]
    fn witnesses() {
        let opts = WitnessOptions::default();
        let s = reducibility_witness(&Weight::<Q>::zero(), 4, &opts).unwrap();
        assert_eq!(s.witness.unwrap(), poly(&[1]));

        let c1 = Weight::<Q>::zero().with_central_charge(q(1));
        assert!(reducibility_witness(&c1, 8, &opts).unwrap().witness.is_none());

        let g = Weight::geometric(q(2)).unwrap();
        let s = reducibility_witness(&g, 2, &opts).unwrap();
        assert_eq!(s.witness.unwrap(), poly(&[4, -4, 1]));
        assert!(reducibility_witness(&g, 1, &opts).unwrap().witness.is_none());

        let f = Weight::finite(q(0), [(1, q(1))]);
        assert!(reducibility_witness(&f, 6, &opts).unwrap().witness.is_none());

        // Λ_{-1} never reaches a row
        let hidden = Weight::finite(q(0), [(-1, q(9))]);
        assert_eq!(reducibility_witness(&hidden, 3, &opts).unwrap().witness.unwrap(), poly(&[1]));
    }

    #[test]
    fn series_windows() {
        let f = Weight::finite(q(0), [(1, q(1))]);
        assert_eq!(delta_series(&f, 1, 2).coeffs, qs(&[1, 0, 0]));
        let g = Weight::geometric(q(2)).unwrap();
        assert_eq!(delta_series(&g, 0, 3).coeffs, qs(&[1, 2, 4, 8]));
        assert_eq!(delta_series(&Weight::<Q>::zero(), -4, 3).coeffs, qs(&[0, 0, 0, 0]));

        let c1 = Weight::<Q>::zero().with_central_charge(q(1));
        assert_eq!(sigma_series(&c1, 2, 3).coeffs, qs(&[0, 0, -1, 0]));
        let f0 = Weight::finite(q(0), [(0, q(5))]);
        assert_eq!(sigma_series(&f0, 0, 2).coeffs, qs(&[0, 5, 0]));
        assert!(sigma_series(&Weight::<Q>::zero(), -3, 5).coeffs.iter().all(|x| *x == q(0)));
    }

    #[test]
    fn recurrence_detection() {
        let geo = SeriesWindow { j: 0, coeffs: qs(&[1, 2, 4, 8, 16, 32]) };
        let r = detect_recurrence(&geo, 2).unwrap().unwrap();
        assert_eq!(r.char_poly, qs(&[-2, 1]));

        let zeros = SeriesWindow { j: 0, coeffs: qs(&[0, 0, 0, 0]) };
        assert_eq!(detect_recurrence(&zeros, 2).unwrap().unwrap().char_poly, qs(&[1]));

        let spike = SeriesWindow { j: 0, coeffs: qs(&[0, 1, 0, 0, 0, 0, 0]) };
        assert!(detect_recurrence(&spike, 2).unwrap().is_none());

        assert!(matches!(detect_recurrence(&spike, 4), Err(Error::WindowTooShort(_))));
    }

    #[test]
    fn reversible_pick_when_kernel_is_wide() {
        // window [1, 1] admits every order-1 ρ with ρ_0 = -ρ_1 and nothing else
        let w = SeriesWindow { j: 0, coeffs: qs(&[1, 1]) };
        assert_eq!(detect_recurrence(&w, 1).unwrap().unwrap().char_poly, qs(&[-1, 1]));
        // rows [0, 1] only: kernel at order 1 is spanned by (1, 0), i.e. ρ = 1 (order 0 fails)
        let kernel = vec![qs(&[1, 0]), qs(&[0, 1])];
        assert_eq!(pick_reversible(&kernel, 1).unwrap(), qs(&[1, 1]));
        assert!(pick_reversible(&[qs(&[0, 1])], 1).is_none());
    }

    #[test]
    fn parabolic_steps() {
        let one = poly(&[1]);
        assert!(parabolic_step(&one, 1, &LaurentPoly::one(), 0).is_zero());
        let lin = poly(&[-2, 1]);
        assert_eq!(
            parabolic_step(&lin, 1, &LaurentPoly::one(), 1),
            LaurentPoly::from_coeffs(&qs(&[2, -2]))
        );
        let f = poly(&[3, 0, -1, 2]);
        assert!(parabolic_step(&f, 1, &f.to_laurent(), 0).is_zero());
    }

    #[test]
    fn chain_is_nontrivial() {
        let chain = parabolic_chain(&poly(&[4, -4, 1]), 5, 0..=2);
        assert_eq!(chain.len(), 5);
        assert!(chain.iter().all(|s| !s.generators.is_empty()));
    }

    #[test]
    fn codimension() {
        assert_eq!(p1_codimension(&poly(&[1]), -3..=3).unwrap(), 0);
        assert_eq!(p1_codimension(&poly(&[4, -4, 1]), -6..=6).unwrap(), 2);
        assert_eq!(p1_codimension(&poly(&[1, 0, 0, 1]), -8..=8).unwrap(), 3);
        assert!(p1_codimension(&poly(&[1, 0, 0, 1]), 0..=5).is_err());
    }

    #[test]
    fn verdict_strings_round_trip() {
        for v in [Verdict::Reducible, Verdict::IrreducibleUpTo(8)] {
            assert_eq!(v.to_string().parse::<Verdict>().unwrap(), v);
        }
        assert!("IRREDUCIBLE".parse::<Verdict>().is_err());
    }

    #[test]
    fn analysis_of_geometric_weight() {
        let w = Weight::geometric(q(2)).unwrap();
        let r = quasifinite_verdict(&w, &AnalysisParams::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Reducible);
        assert_eq!(r.witness_text.as_deref(), Some("t^2 - 4t + 4"));
        assert_eq!(r.uniform_witness_check, Some(true));
        assert_eq!(r.common_recurrence, Some(vec!["4".into(), "-4".into(), "1".into()]));
        assert_eq!(r.series.len(), 5);
    }
}
