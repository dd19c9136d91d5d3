//! Compatible total orders on `Γ = Zʳ`.
//!
//! Two families: lexicographic orders (any axis priority, any sign per axis)
//! and embeddings `x ↦ Σ x_k w_k` into `Q(√d) ⊂ R` with `Q`-independent
//! weights. Signs in `Q(√d)` are decided exactly, so comparisons never touch
//! floating point.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{bracket_basis, BasisSymbol, LieElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::verma::{Recurrence, Weight};

/// `rational + surd·√d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticSurd {
    pub rational: BigRational,
    pub surd: BigRational,
    pub d: u64,
}

impl QuadraticSurd {
    pub fn new(rational: BigRational, surd: BigRational, d: u64) -> Self {
        Self { rational, surd, d }
    }

    /// Exact sign: when the parts disagree, compare `a²` with `b²d`.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.rational);
        let sb = sign_of(&self.surd);
        if sa == 0 || sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        let a2 = &self.rational * &self.rational;
        let b2d = &self.surd * &self.surd * BigRational::from_integer(BigInt::from(self.d));
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }
}

fn sign_of(q: &BigRational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn is_squarefree(d: u64) -> bool {
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GammaGroup {
    pub rank: usize,
}

impl GammaGroup {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidOrder("rank must be positive".into()));
        }
        Ok(Self { rank })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrderSpec {
    /// Compare coordinates in `axes` priority order (0-based); `signs[k]` flips coordinate `k`.
    Lex { axes: Vec<usize>, signs: Vec<i8> },
    /// Compare images `Σ x_k (p_k + q_k √d)`.
    Embedding { d: u64, weights: Vec<(BigRational, BigRational)> },
}

impl OrderSpec {
    /// Axis 0 most significant, all signs positive.
    pub fn standard(rank: usize) -> Self {
        OrderSpec::Lex { axes: (0..rank).collect(), signs: vec![1; rank] }
    }

    pub fn lex(axes: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let r = axes.len();
        if r == 0 || signs.len() != r {
            return Err(Error::InvalidOrder("lex order needs one sign per axis".into()));
        }
        let mut seen = vec![false; r];
        for &a in &axes {
            if a >= r || std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidOrder(format!("axes {axes:?} are not a permutation")));
            }
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::InvalidOrder("signs must be +1 or -1".into()));
        }
        Ok(OrderSpec::Lex { axes, signs })
    }

    /// Fails unless `d >= 2` is squarefree and the weights are `Q`-independent
    /// (so the embedding is injective on `Zʳ`).
    pub fn embedding(d: u64, weights: Vec<(BigRational, BigRational)>) -> Result<Self> {
        if d < 2 || !is_squarefree(d) {
            return Err(Error::InvalidOrder(format!("d = {d} is not a squarefree integer >= 2")));
        }
        let independent = match weights.as_slice() {
            [(p, q)] => !(p.is_zero() && q.is_zero()),
            [(p1, q1), (p2, q2)] => !(p1 * q2 - p2 * q1).is_zero(),
            _ => false,
        };
        if !independent {
            return Err(Error::InvalidOrder(format!(
                "{} weights in Q(sqrt {d}) are Q-dependent; the order would not be total",
                weights.len()
            )));
        }
        Ok(OrderSpec::Embedding { d, weights })
    }

    pub fn rank(&self) -> usize {
        match self {
            OrderSpec::Lex { axes, .. } => axes.len(),
            OrderSpec::Embedding { weights, .. } => weights.len(),
        }
    }

    fn check_rank(&self, x: &[i64]) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: x.len() });
        }
        Ok(())
    }

    fn image(&self, x: &[i64]) -> Option<QuadraticSurd> {
        let OrderSpec::Embedding { d, weights } = self else {
            return None;
        };
        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        for (&c, (p, q)) in x.iter().zip(weights) {
            let c = BigRational::from_integer(BigInt::from(c));
            a += &c * p;
            b += &c * q;
        }
        Some(QuadraticSurd::new(a, b, *d))
    }

    /// `-1`, `0`, `1` for `x ≺ 0`, `x = 0`, `x ≻ 0`.
    pub fn signum(&self, x: &[i64]) -> Result<i32> {
        self.check_rank(x)?;
        Ok(match self {
            OrderSpec::Lex { axes, signs } => axes
                .iter()
                .map(|&a| i32::from(signs[a]) * x[a].signum() as i32)
                .find(|s| *s != 0)
                .unwrap_or(0),
            OrderSpec::Embedding { .. } => self.image(x).expect("embedding").signum(),
        })
    }

    pub fn is_positive(&self, x: &[i64]) -> Result<bool> {
        Ok(self.signum(x)? > 0)
    }
}

/// Translation-invariant comparison: `x ≻ y` iff `x - y ≻ 0`.
pub fn compare(o: &OrderSpec, x: &[i64], y: &[i64]) -> Result<Ordering> {
    if x.len() != y.len() {
        return Err(Error::RankMismatch { expected: x.len(), found: y.len() });
    }
    let diff: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    Ok(o.signum(&diff)?.cmp(&0))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    Dense,
    Discrete,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Dense => "dense",
            OrderKind::Discrete => "discrete",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderClassification {
    pub kind: OrderKind,
    /// The `a ≻ 0` with nothing strictly between `0` and `a` (discrete orders only).
    pub minimal_positive: Option<Vec<i64>>,
    pub archimedean: bool,
}

fn unit(rank: usize, axis: usize, sign: i64) -> Vec<i64> {
    let mut e = vec![0; rank];
    e[axis] = sign;
    e
}

pub fn classify(o: &OrderSpec, g: GammaGroup) -> Result<OrderClassification> {
    if g.rank != o.rank() {
        return Err(Error::RankMismatch { expected: o.rank(), found: g.rank });
    }
    let r = g.rank;
    Ok(match o {
        OrderSpec::Lex { axes, signs } => {
            let least = *axes.last().expect("rank >= 1");
            OrderClassification {
                kind: OrderKind::Discrete,
                minimal_positive: Some(unit(r, least, i64::from(signs[least]))),
                archimedean: r == 1,
            }
        }
        OrderSpec::Embedding { .. } if r == 1 => {
            let e = if o.is_positive(&[1])? { vec![1] } else { vec![-1] };
            OrderClassification { kind: OrderKind::Discrete, minimal_positive: Some(e), archimedean: true }
        }
        OrderSpec::Embedding { .. } => {
            OrderClassification { kind: OrderKind::Dense, minimal_positive: None, archimedean: true }
        }
    })
}

/// Every `β` with `|β_k| <= bound` and `0 ≺ β ≺ α`, in lexicographic coordinate order.
pub fn b_alpha_sample(o: &OrderSpec, alpha: &[i64], bound: i64) -> Result<Vec<Vec<i64>>> {
    if !o.is_positive(alpha)? {
        return Err(Error::InvalidArgument(format!("{alpha:?} is not positive")));
    }
    if bound < 1 {
        return Err(Error::InvalidArgument("coefficient bound must be positive".into()));
    }
    let r = alpha.len();
    let mut out = Vec::new();
    let mut beta = vec![-bound; r];
    loop {
        if o.is_positive(&beta)? && compare(o, &beta, alpha)? == Ordering::Less {
            out.push(beta.clone());
        }
        // odometer
        let mut k = r;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if beta[k] < bound {
                beta[k] += 1;
                break;
            }
            beta[k] = -bound;
        }
    }
}

/// Smallest `n >= 1` with `n·x ≻ y`, searching up to `limit`.
pub fn archimedean_multiplier(o: &OrderSpec, x: &[i64], y: &[i64], limit: i64) -> Result<Option<i64>> {
    if !o.is_positive(x)? || !o.is_positive(y)? {
        return Err(Error::InvalidArgument("both elements must be positive".into()));
    }
    let beats = |n: i64| -> Result<bool> {
        let nx: Vec<i64> = x.iter().map(|c| c * n).collect();
        Ok(compare(o, &nx, y)? == Ordering::Greater)
    };
    // n ↦ n·x - y is increasing, so bracket then bisect
    let mut hi = 1;
    while !beats(hi)? {
        if hi >= limit {
            return Ok(None);
        }
        hi = (hi * 2).min(limit);
    }
    let mut lo = hi / 2;
    if lo == 0 {
        return Ok(Some(hi));
    }
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if beats(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

/// For lex orders of rank >= 2: `x` = the minimal positive unit, `y` = the
/// next more significant unit, with `n·x ≺ y` for every `n` in `1..=n_max`.
pub fn non_archimedean_witness(o: &OrderSpec, n_max: i64) -> Result<Option<(Vec<i64>, Vec<i64>)>> {
    let OrderSpec::Lex { axes, signs } = o else {
        return Ok(None);
    };
    let r = axes.len();
    if r < 2 {
        return Ok(None);
    }
    let least = axes[r - 1];
    let next = axes[r - 2];
    let x = unit(r, least, i64::from(signs[least]));
    let y = unit(r, next, i64::from(signs[next]));
    for n in 1..=n_max {
        let nx: Vec<i64> = x.iter().map(|c| c * n).collect();
        if compare(o, &nx, &y)? != Ordering::Less {
            return Ok(None);
        }
    }
    Ok(Some((x, y)))
}

/// Irreducibility of the Verma module for a given order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrderVerdict {
    /// Dense order: irreducible iff the weight is nonzero. For the zero weight the
    /// augmentation submodule is irreducible iff the order is archimedean.
    Dense { weight_is_zero: bool, archimedean: bool },
    /// Discrete order: irreducible iff the module over the `aZ` subalgebra
    /// generated by `v` is; analyze the rescaled weight over `Z`.
    Delegated { generator: Vec<i64> },
}

impl OrderVerdict {
    /// `Some` for dense orders.
    pub fn verma_irreducible(&self) -> Option<bool> {
        match self {
            OrderVerdict::Dense { weight_is_zero, .. } => Some(!weight_is_zero),
            OrderVerdict::Delegated { .. } => None,
        }
    }

    /// `Some` only for a dense order and the zero weight.
    pub fn augmentation_irreducible(&self) -> Option<bool> {
        match self {
            OrderVerdict::Dense { weight_is_zero: true, archimedean } => Some(*archimedean),
            _ => None,
        }
    }
}

impl fmt::Display for OrderVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderVerdict::Dense { weight_is_zero: false, .. } => {
                f.write_str("IRREDUCIBLE (dense order, nonzero weight)")
            }
            OrderVerdict::Dense { weight_is_zero: true, archimedean } => write!(
                f,
                "REDUCIBLE (dense order, zero weight); augmentation submodule {}",
                if *archimedean { "irreducible (archimedean)" } else { "reducible (non-archimedean)" }
            ),
            OrderVerdict::Delegated { generator } => write!(
                f,
                "DELEGATED({}): irreducible iff the submodule over the subalgebra of degrees in aZ is; rescale the weight by a and analyze over Z",
                fmt_element(generator)
            ),
        }
    }
}

pub fn fmt_element(x: &[i64]) -> String {
    if x.len() == 1 {
        return x[0].to_string();
    }
    let parts: Vec<String> = x.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn irreducibility_verdict(o: &OrderSpec, g: GammaGroup, weight_is_zero: bool) -> Result<OrderVerdict> {
    let c = classify(o, g)?;
    Ok(match c.kind {
        OrderKind::Dense => OrderVerdict::Dense { weight_is_zero, archimedean: c.archimedean },
        OrderKind::Discrete => OrderVerdict::Delegated {
            generator: c.minimal_positive.expect("discrete orders have a minimal positive element"),
        },
    })
}

/// Weight of the `Z`-algebra seen through `L'[n,i] = L[na,i]/a`, `C' = C/a`:
/// charge and labels divided by `a`.
pub fn rescale_weight<T: Scalar>(weight: &Weight<T>, a: &T) -> Result<Weight<T>> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("rescaling factor must be nonzero".into()));
    }
    let div = |m: &BTreeMap<i64, T>| -> BTreeMap<i64, T> {
        m.iter().map(|(i, v)| (*i, v.clone() / a.clone())).collect()
    };
    let recurrent = weight
        .recurrent()
        .map(|r| Recurrence::new(r.char_poly().to_vec(), div(&r.initial())))
        .transpose()?;
    Ok(Weight::new(weight.central_charge().clone() / a.clone(), div(weight.finite_labels()), recurrent))
}

/// `L[α,i]` with a rational degree, for brackets inside `B(Q)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RationalSymbol {
    pub deg: BigRational,
    pub idx: i64,
}

/// `[L[α,i], L[β,j]]` in `B(Q)`: the `L[α+β,i+j]` coefficient and the `C` coefficient.
pub fn rational_bracket(x: &RationalSymbol, y: &RationalSymbol) -> (BigRational, RationalSymbol, BigRational) {
    let one = BigRational::one();
    let ii = BigRational::from_integer(x.idx.into());
    let jj = BigRational::from_integer(y.idx.into());
    let coeff = (&ii + &one) * &y.deg - (&jj + &one) * &x.deg;
    let central = if (&x.deg + &y.deg).is_zero() && x.idx + y.idx == -2 {
        x.deg.clone()
    } else {
        BigRational::zero()
    };
    (coeff, RationalSymbol { deg: &x.deg + &y.deg, idx: x.idx + y.idx }, central)
}

/// Checks `[L'[n,i], L'[m,j]]`, computed inside `B(Q)` and rewritten in the
/// primed basis, against the `Z`-algebra bracket of `L[n,i]` and `L[m,j]`.
pub fn rescaling_preserves_bracket(a: &BigRational, (n, i): (i64, i64), (m, j): (i64, i64)) -> bool {
    let big = |k: i64| BigRational::from_integer(k.into());
    let x = RationalSymbol { deg: big(n) * a, idx: i };
    let y = RationalSymbol { deg: big(m) * a, idx: j };
    // (1/a)(1/a) [L[na,i], L[ma,j]]
    let (coeff, sym, central) = rational_bracket(&x, &y);
    let inv2 = (a * a).recip();
    // L[ka,l] = a L'[k,l] and C = a C'
    let k = &sym.deg / a;
    assert!(k.is_integer(), "degrees stay in aZ");
    let k = k.to_integer().try_into().expect("small degree");
    let lhs: LieElement<BigRational> = [
        (BasisSymbol::gen(k, sym.idx), coeff * &inv2 * a),
        (BasisSymbol::Central, central * &inv2 * a),
    ]
    .into_iter()
    .collect();
    lhs == bracket_basis(BasisSymbol::gen(n, i), BasisSymbol::gen(m, j))
}
