//! The Block Lie algebra over `Z`: basis `L[a,i]` (`a, i ∈ Z`) and a central `C`,
//! with
//!
//! ```text
//! [L[a,i], L[b,j]] = ((i+1)b - (j+1)a) L[a+b, i+j] + a δ(a,-b) δ(i+j,-2) C
//! [C, L[a,i]]      = 0
//! ```
//!
//! plus the polynomial realization `L[i,j] = xⁱ t^(j+1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// A basis vector of the algebra. Ordered by `(degree, index)` with `C` last.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisSymbol {
    Gen { deg: i64, idx: i64 },
    Central,
}

impl BasisSymbol {
    pub const fn gen(deg: i64, idx: i64) -> Self {
        BasisSymbol::Gen { deg, idx }
    }

    /// Grading degree; `C` sits in degree zero.
    pub fn degree(&self) -> i64 {
        match self {
            BasisSymbol::Gen { deg, .. } => *deg,
            BasisSymbol::Central => 0,
        }
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSymbol::Gen { deg, idx } => write!(f, "L[{deg},{idx}]"),
            BasisSymbol::Central => f.write_str("C"),
        }
    }
}

/// Finite linear combination of basis symbols.
#[derive(Clone, PartialEq, Debug)]
pub struct LieElement<T> {
    terms: BTreeMap<BasisSymbol, T>,
}

impl<T: Scalar> Default for LieElement<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> LieElement<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn basis(s: BasisSymbol) -> Self {
        Self::term(T::one(), s)
    }

    pub fn term(c: T, s: BasisSymbol) -> Self {
        let mut e = Self::zero();
        e.add_term(s, c);
        e
    }

    pub fn gen(deg: i64, idx: i64) -> Self {
        Self::basis(BasisSymbol::gen(deg, idx))
    }

    pub fn central() -> Self {
        Self::basis(BasisSymbol::Central)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &BasisSymbol) -> T {
        self.terms.get(s).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in canonical symbol order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisSymbol, &T)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, s: BasisSymbol, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(s).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c.clone() * s.clone())).collect(),
        }
    }

    /// The common degree if every term has the same degree. The zero element
    /// has no degree.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(BasisSymbol::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Splits into graded components keyed by degree.
    pub fn degree_decompose(&self) -> BTreeMap<i64, LieElement<T>> {
        let mut out: BTreeMap<i64, LieElement<T>> = BTreeMap::new();
        for (s, c) in &self.terms {
            out.entry(s.degree()).or_default().add_term(*s, c.clone());
        }
        out
    }

    /// Bilinear extension of [`bracket_basis`].
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let coef = x.clone() * y.clone();
                for (s, c) in bracket_basis::<T>(*a, *b).terms {
                    out.add_term(s, c * coef.clone());
                }
            }
        }
        out
    }
}

impl<T: Scalar> Add for LieElement<T> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (s, c) in rhs.terms {
            self.add_term(s, c);
        }
        self
    }
}

impl<T: Scalar> Neg for LieElement<T> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Sub for LieElement<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> FromIterator<(BasisSymbol, T)> for LieElement<T> {
    fn from_iter<I: IntoIterator<Item = (BasisSymbol, T)>>(iter: I) -> Self {
        let mut e = Self::zero();
        for (s, c) in iter {
            e.add_term(s, c);
        }
        e
    }
}

/// Writes `sign coeff body` triples the way all canonical renderings in this
/// crate do: `-2 L[0,0] + 1/3 C`, `0` when empty.
pub(crate) fn write_signed_sum<T: Scalar>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (T, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, body) in terms {
        let negative = c < T::zero();
        let mag = if negative { -c } else { c };
        let sep = match (first, negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        write!(f, "{sep}{mag} {body}")?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<T: Scalar> fmt::Display for LieElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.terms.iter().map(|(s, c)| (c.clone(), s.to_string())))
    }
}

/// Bracket of two basis symbols.
pub fn bracket_basis<T: Scalar>(a: BasisSymbol, b: BasisSymbol) -> LieElement<T> {
    let (BasisSymbol::Gen { deg: alpha, idx: i }, BasisSymbol::Gen { deg: beta, idx: j }) = (a, b)
    else {
        return LieElement::zero();
    };
    let mut out = LieElement::zero();
    let structure = (i + 1) * beta - (j + 1) * alpha;
    out.add_term(BasisSymbol::gen(alpha + beta, i + j), T::from_int(structure));
    if alpha == -beta && i + j == -2 {
        out.add_term(BasisSymbol::Central, T::from_int(alpha));
    }
    out
}

/// An element of `F[x^±1, t^±1] ⊕ F C`, stored as x-degree → Laurent polynomial in `t`.
#[derive(Clone, PartialEq, Debug)]
pub struct RealizedElement<T> {
    terms: BTreeMap<i64, LaurentPoly<T>>,
    central: T,
}

impl<T: Scalar> Default for RealizedElement<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> RealizedElement<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new(), central: T::zero() }
    }

    /// `xⁱ f(t)`.
    pub fn x_times(i: i64, f: LaurentPoly<T>) -> Self {
        let mut e = Self::zero();
        e.add_part(i, &f);
        e
    }

    pub fn central_coeff(&self) -> &T {
        &self.central
    }

    pub fn part(&self, i: i64) -> LaurentPoly<T> {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn parts(&self) -> impl Iterator<Item = (i64, &LaurentPoly<T>)> + '_ {
        self.terms.iter().map(|(i, p)| (*i, p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central.is_zero()
    }

    fn add_part(&mut self, i: i64, f: &LaurentPoly<T>) {
        let sum = self.part(i).add(f);
        if sum.is_zero() {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, sum);
        }
    }

    /// `[xⁱf, xʲg] = x^(i+j) (j f' g - i f g') + i δ(i,-j) Res_t(t⁻¹ f g) C`, extended bilinearly;
    /// central parts bracket to zero.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&i, f) in &self.terms {
            for (&j, g) in &other.terms {
                let body = f
                    .derivative()
                    .mul(g)
                    .scale(&T::from_int(j))
                    .sub(&f.mul(&g.derivative()).scale(&T::from_int(i)));
                out.add_part(i + j, &body);
                if i == -j {
                    let res = f.mul(g).shift(-1).residue();
                    out.central = out.central.clone() + T::from_int(i) * res;
                }
            }
        }
        out
    }
}

pub fn to_realization<T: Scalar>(e: &LieElement<T>) -> RealizedElement<T> {
    let mut out = RealizedElement::zero();
    for (s, c) in e.terms() {
        match *s {
            BasisSymbol::Gen { deg, idx } => {
                out.add_part(deg, &LaurentPoly::monomial(c.clone(), idx + 1));
            }
            BasisSymbol::Central => out.central = out.central.clone() + c.clone(),
        }
    }
    out
}

pub fn from_realization<T: Scalar>(p: &RealizedElement<T>) -> LieElement<T> {
    let mut out = LieElement::zero();
    for (i, f) in p.parts() {
        for (n, c) in f.terms() {
            out.add_term(BasisSymbol::gen(i, n - 1), c.clone());
        }
    }
    out.add_term(BasisSymbol::Central, p.central.clone());
    out
}

pub fn bracket_realized<T: Scalar>(p: &RealizedElement<T>, q: &RealizedElement<T>) -> RealizedElement<T> {
    p.bracket(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type E = LieElement<BigRational>;
    type P = LaurentPoly<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn central_brackets_vanish() {
        assert!(bracket_basis::<BigRational>(BasisSymbol::Central, BasisSymbol::gen(5, 3)).is_zero());
        assert!(bracket_basis::<BigRational>(BasisSymbol::gen(5, 3), BasisSymbol::Central).is_zero());
    }

    #[test]
    fn hand_computed_brackets() {
        // ((0+1)(-1) - (0+1)(1)) L[0,0]
        assert_eq!(E::gen(1, 0).bracket(&E::gen(-1, 0)), E::term(q(-2), BasisSymbol::gen(0, 0)));
        // structure constant 0·(-1) - 0·1 = 0, central term 1·C
        assert_eq!(E::gen(1, -1).bracket(&E::gen(-1, -1)), E::central());
        assert!(E::gen(0, 1).bracket(&E::gen(0, 4)).is_zero());
        let x = E::term(q(2), BasisSymbol::gen(1, 0));
        let y = E::term(q(3), BasisSymbol::gen(-1, 0));
        assert_eq!(x.bracket(&y), E::term(q(-12), BasisSymbol::gen(0, 0)));
        assert!(x.bracket(&x).is_zero());
        assert!(E::zero().bracket(&y).is_zero());
    }

    #[test]
    fn realization_correspondence() {
        let one = to_realization(&E::gen(0, -1));
        assert_eq!(one.part(0), P::one());
        let xt2 = to_realization(&E::gen(1, 1));
        assert_eq!(xt2.part(1), P::monomial(q(1), 2));
        let c = to_realization(&E::central());
        assert_eq!(*c.central_coeff(), q(1));
        assert_eq!(c.parts().count(), 0);
        assert_eq!(from_realization(&xt2), E::gen(1, 1));
    }

    #[test]
    fn realized_brackets() {
        let a = RealizedElement::x_times(1, P::monomial(q(1), 2));
        let b = RealizedElement::x_times(-1, P::monomial(q(1), 1));
        let r = bracket_realized(&a, &b);
        assert_eq!(r, RealizedElement::x_times(0, P::monomial(q(-3), 2)));
        assert_eq!(from_realization(&r), E::term(q(-3), BasisSymbol::gen(0, 1)));

        let r = bracket_realized(&RealizedElement::x_times(1, P::one()), &RealizedElement::x_times(-1, P::one()));
        assert_eq!(from_realization(&r), E::central());

        let r = bracket_realized(
            &RealizedElement::x_times(0, P::monomial(q(1), 3)),
            &RealizedElement::x_times(0, P::monomial(q(1), -5)),
        );
        assert!(r.is_zero());
    }

    #[test]
    fn grading() {
        let e = E::gen(2, 0) + E::central();
        let d = e.degree_decompose();
        assert_eq!(d.len(), 2);
        assert_eq!(d[&2], E::gen(2, 0));
        assert_eq!(d[&0], E::central());
        assert!(E::zero().degree_decompose().is_empty());

        let x = E::gen(2, 3) + E::term(q(5), BasisSymbol::gen(2, -4));
        let y = E::gen(3, 1) - E::gen(3, 7);
        let d = x.bracket(&y).degree_decompose();
        assert_eq!(d.keys().copied().collect::<Vec<_>>(), vec![5]);
    }

    #[test]
    fn canonical_rendering() {
        let e = E::term(q(-2), BasisSymbol::gen(0, 0)) + E::term(BigRational::new(1.into(), 3.into()), BasisSymbol::Central);
        assert_eq!(e.to_string(), "-2 L[0,0] + 1/3 C");
        let e = E::gen(1, 0) - E::gen(-1, 3);
        assert_eq!(e.to_string(), "-1 L[-1,3] + 1 L[1,0]");
        assert_eq!(E::zero().to_string(), "0");
    }

    #[test]
    fn generic_over_machine_rationals() {
        use num_rational::Ratio;
        let e: LieElement<Ratio<i64>> = LieElement::gen(3, 2).bracket(&LieElement::gen(-3, -4));
        // ((2+1)(-3) - (-4+1)(3)) = 0, central 3
        assert_eq!(e, LieElement::term(Ratio::from_integer(3), BasisSymbol::Central));
    }
}
