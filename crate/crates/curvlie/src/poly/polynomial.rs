use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{format_rational, Quad, Rational};

use super::monomial::{Monomial, MonomialOrder};
use super::table::VariableTable;
use super::PolyError;

/// Coefficient requirements for polynomial arithmetic.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;
}

impl Coeff for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl<const D: u64> Coeff for Quad<D> {
    fn from_rational(q: &Rational) -> Self {
        Quad::from_rational(q.clone())
    }
}

/// Conversion of a coefficient into an evaluation scalar. Rationals embed
/// into every coefficient type; other coefficients only evaluate into
/// themselves.
pub trait ToScalar<S> {
    fn to_scalar(&self) -> S;
}

impl<S: Coeff> ToScalar<S> for Rational {
    fn to_scalar(&self) -> S {
        S::from_rational(self)
    }
}

impl<const D: u64> ToScalar<Quad<D>> for Quad<D> {
    fn to_scalar(&self) -> Quad<D> {
        self.clone()
    }
}

/// A sparse multivariate polynomial: a map from power products to nonzero
/// coefficients, tied to a shared variable table.
#[derive(Debug, Clone)]
pub struct Polynomial<C: Coeff = Rational> {
    table: Arc<VariableTable>,
    terms: BTreeMap<Monomial, C>,
}

/// Polynomials with coefficients in Q(sqrt(D)); produced by partial
/// evaluation during back-solving.
pub type QuadPolynomial<const D: u64> = Polynomial<Quad<D>>;

impl<C: Coeff> Polynomial<C> {
    pub fn zero(table: Arc<VariableTable>) -> Self {
        Polynomial { table, terms: BTreeMap::new() }
    }

    pub fn constant(table: Arc<VariableTable>, c: C) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.table.len()), c);
        }
        p
    }

    pub fn one_poly(table: Arc<VariableTable>) -> Self {
        Self::constant(table, C::one())
    }

    pub fn variable(table: Arc<VariableTable>, var: usize) -> Self {
        let m = Monomial::variable(table.len(), var, 1);
        let mut p = Self::zero(table);
        p.terms.insert(m, C::one());
        p
    }

    pub fn var_named(table: &Arc<VariableTable>, name: &str) -> Result<Self, PolyError> {
        let idx = table.require(name)?;
        Ok(Self::variable(table.clone(), idx))
    }

    pub fn from_term(table: Arc<VariableTable>, m: Monomial, c: C) -> Self {
        debug_assert_eq!(m.nvars(), table.len());
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn constant_term(&self) -> C {
        self.terms
            .get(&Monomial::one(self.table.len()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// `Some(c)` when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &C)> {
        match order {
            MonomialOrder::Lex => self.terms.iter().next_back(),
            MonomialOrder::GrevLex => {
                self.terms.iter().max_by(|(a, _), (b, _)| order.cmp(a, b))
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.degree_in(var)).max().unwrap_or(0)
    }

    /// Indices of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let n = self.table.len();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for v in 0..n {
                if m.exponent(v) > 0 {
                    used[v] = true;
                }
            }
        }
        (0..n).filter(|&v| used[v]).collect()
    }

    pub fn same_table(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.table, &other.table) || self.table == other.table
    }

    fn check_table(&self, other: &Self) -> Result<(), PolyError> {
        if self.same_table(other) {
            Ok(())
        } else {
            Err(PolyError::TableMismatch)
        }
    }

    fn insert_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_table(other)?;
        let mut out = Self::zero(self.table.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn mul_scalar(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.table.clone());
        }
        let mut out = Self::zero(self.table.clone());
        for (m, a) in &self.terms {
            out.insert_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.table.clone());
        }
        let mut out = Self::zero(self.table.clone());
        for (ma, ca) in &self.terms {
            out.insert_term(ma.mul(m), ca.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one_poly(self.table.clone());
        for _ in 0..e {
            out = out.try_mul(self).expect("same table");
        }
        out
    }

    /// Map coefficients into another scalar type, dropping any that map to
    /// zero.
    pub fn map_coefficients<S: Coeff>(&self, f: impl Fn(&C) -> S) -> Polynomial<S> {
        let mut out = Polynomial::<S>::zero(self.table.clone());
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), f(c));
        }
        out
    }

    /// Substitute values for a subset of variables, leaving the rest
    /// symbolic. `values[v] = Some(s)` assigns variable `v`.
    pub fn eval_partial<S: Coeff>(&self, values: &[Option<S>]) -> Polynomial<S>
    where
        C: ToScalar<S>,
    {
        assert_eq!(values.len(), self.table.len());
        let n = self.table.len();
        let mut out = Polynomial::<S>::zero(self.table.clone());
        for (m, c) in &self.terms {
            let mut coeff: S = c.to_scalar();
            let mut rest = vec![0u16; n];
            for v in 0..n {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                match &values[v] {
                    Some(s) => {
                        for _ in 0..e {
                            coeff = coeff * s.clone();
                        }
                    }
                    None => rest[v] = e,
                }
            }
            out.insert_term(Monomial::from_exponents(&rest), coeff);
        }
        out
    }

    /// Full evaluation; every variable that occurs must have a value.
    pub fn eval<S: Coeff>(&self, values: &[Option<S>]) -> Result<S, PolyError>
    where
        C: ToScalar<S>,
    {
        for v in self.support() {
            if values[v].is_none() {
                return Err(PolyError::MissingVariable(self.table.name(v).to_string()));
            }
        }
        Ok(self.eval_partial(values).constant_term())
    }

    /// Substitute polynomials for variables. Every variable occurring in
    /// `self` must be mapped; images must live in `target`.
    pub fn substitute(
        &self,
        images: &BTreeMap<usize, Polynomial<C>>,
        target: &Arc<VariableTable>,
    ) -> Result<Polynomial<C>, PolyError> {
        let mut out = Polynomial::<C>::zero(target.clone());
        for (m, c) in &self.terms {
            let mut term = Polynomial::<C>::constant(target.clone(), c.clone());
            for v in 0..self.table.len() {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                let img = images
                    .get(&v)
                    .ok_or_else(|| PolyError::MissingVariable(self.table.name(v).to_string()))?;
                term = term.try_mul(&img.pow(e as u32))?;
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Reinterpret in a table that has this table's names as a prefix,
    /// padding exponents with zeros.
    pub fn extend_to(&self, target: &Arc<VariableTable>) -> Result<Polynomial<C>, PolyError> {
        if target.len() < self.table.len() {
            return Err(PolyError::TableMismatch);
        }
        for (i, name) in self.table.names().iter().enumerate() {
            if target.name(i) != name {
                return Err(PolyError::TableMismatch);
            }
        }
        let mut out = Polynomial::<C>::zero(target.clone());
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            exps.resize(target.len(), 0);
            out.insert_term(Monomial::from_exponents(&exps), c.clone());
        }
        Ok(out)
    }

    /// Coefficients as a univariate polynomial in `var`; index `i` holds the
    /// coefficient of `var^i`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial<C>> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.table.clone()); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            out[e].insert_term(Monomial::from_exponents(&exps), c.clone());
        }
        out
    }
}

impl<C: Coeff> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.same_table(other) && self.terms == other.terms
    }
}

impl<C: Coeff> Eq for Polynomial<C> {}

impl<C: Coeff + Hash> Hash for Polynomial<C> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.try_add(rhs).expect("variable-table mismatch")
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.try_sub(rhs).expect("variable-table mismatch")
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.try_mul(rhs).expect("variable-table mismatch")
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.map_coefficients(|c| -c.clone())
    }
}

impl Polynomial<Rational> {
    /// Positive rational `r` such that `self / r` has coprime integer
    /// coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// `self = factor * primitive` with the primitive part having coprime
    /// integer coefficients and a positive lexicographic leading
    /// coefficient. Returns `(factor, primitive)`.
    pub fn normalize_primitive(&self) -> (Rational, Polynomial<Rational>) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let mut c = self.content();
        let lead = self.leading_term(MonomialOrder::Lex).unwrap().1;
        if lead.is_negative() {
            c = -c;
        }
        let inv = c.recip();
        (c, self.mul_scalar(&inv))
    }

    /// Primitive, positive-leading-coefficient representative.
    pub fn primitive_part(&self) -> Polynomial<Rational> {
        self.normalize_primitive().1
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial<Rational> {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.mul_scalar(&inv)
            }
        }
    }
}

/// Multivariate division with remainder: returns quotients `q_i` and a
/// remainder `r` with `f = sum_i q_i g_i + r` and no monomial of `r`
/// divisible by any leading monomial of `divisors`. Divisors are tried in
/// slice order, so the result is deterministic.
pub fn divmod(
    f: &Polynomial<Rational>,
    divisors: &[Polynomial<Rational>],
    order: MonomialOrder,
) -> (Vec<Polynomial<Rational>>, Polynomial<Rational>) {
    let table = f.table().clone();
    let mut quotients = vec![Polynomial::zero(table.clone()); divisors.len()];
    let mut remainder = Polynomial::zero(table.clone());
    let mut work = f.clone();
    let leads: Vec<Option<(Monomial, Rational)>> = divisors
        .iter()
        .map(|g| g.leading_term(order).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    while let Some((wm, wc)) = work.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let mut divided = false;
        for (i, lead) in leads.iter().enumerate() {
            if let Some((gm, gc)) = lead {
                if gm.divides(&wm) {
                    let qm = gm.div_into(&wm);
                    let qc = &wc / gc;
                    let t = Polynomial::from_term(table.clone(), qm.clone(), qc.clone());
                    quotients[i] = quotients[i].try_add(&t).unwrap();
                    let sub = divisors[i].mul_term(&qm, &qc);
                    work = work.try_sub(&sub).unwrap();
                    divided = true;
                    break;
                }
            }
        }
        if !divided {
            let t = Polynomial::from_term(table.clone(), wm.clone(), wc.clone());
            remainder = remainder.try_add(&t).unwrap();
            work = work.try_sub(&t).unwrap();
        }
    }
    (quotients, remainder)
}

/// Normal form of `f` modulo `divisors` under `order`.
pub fn reduce(
    f: &Polynomial<Rational>,
    divisors: &[Polynomial<Rational>],
    order: MonomialOrder,
) -> Polynomial<Rational> {
    divmod(f, divisors, order).1
}

/// Splitting a coefficient into sign and printable magnitude keeps the term
/// printer shared between rational and quadratic coefficients.
trait CoeffDisplay: Coeff {
    fn sign_mag(&self) -> (i32, String);
    fn mag_is_one(&self) -> bool;
}

impl CoeffDisplay for Rational {
    fn sign_mag(&self) -> (i32, String) {
        if self.is_negative() {
            (-1, format_rational(&-self.clone()))
        } else {
            (1, format_rational(self))
        }
    }
    fn mag_is_one(&self) -> bool {
        self.abs().is_one()
    }
}

impl<const D: u64> CoeffDisplay for Quad<D> {
    fn sign_mag(&self) -> (i32, String) {
        match self.signum() {
            crate::exact::Sign::Negative => (-1, format!("({})", -self.clone())),
            _ => (1, format!("({})", self)),
        }
    }
    fn mag_is_one(&self) -> bool {
        self.is_one() || (-self.clone()).is_one()
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    table: &Arc<VariableTable>,
    m: &Monomial,
    mag: &str,
    mag_is_one: bool,
) -> fmt::Result {
    if m.is_constant() {
        return write!(f, "{mag}");
    }
    let mut wrote = false;
    if !mag_is_one {
        write!(f, "{mag}")?;
        wrote = true;
    }
    for v in 0..m.nvars() {
        let e = m.exponent(v);
        if e == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        wrote = true;
        if e == 1 {
            write!(f, "{}", table.name(v))?;
        } else {
            write!(f, "{}^{}", table.name(v), e)?;
        }
    }
    Ok(())
}

fn fmt_poly<C: CoeffDisplay>(p: &Polynomial<C>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    // descending order reads naturally
    for (m, c) in p.terms.iter().rev() {
        let (sign, mag) = c.sign_mag();
        if first {
            if sign < 0 {
                write!(f, "-")?;
            }
            first = false;
        } else if sign < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write_term(f, p.table(), m, &mag, c.mag_is_one())?;
    }
    Ok(())
}

impl fmt::Display for Polynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl<const D: u64> fmt::Display for Polynomial<Quad<D>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn tbl() -> Arc<VariableTable> {
        VariableTable::new(&["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &tbl()).unwrap()
    }

    #[test]
    fn product_of_sum_and_difference() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
    }

    #[test]
    fn addition_identity_and_square() {
        let f = p("3/4*x*y - z");
        assert_eq!(f.try_add(&p("0")).unwrap(), f);
        assert_eq!(p("x + 1").pow(2), p("x^2 + 2*x + 1"));
    }

    #[test]
    fn canonical_form_is_unique() {
        let f = p("x + y - y");
        assert_eq!(f, p("x"));
        let z = f.try_sub(&f).unwrap();
        assert!(z.is_zero());
        assert_eq!(z, Polynomial::zero(tbl()));
    }

    #[test]
    fn table_mismatch_is_an_error() {
        let other = VariableTable::new(&["a", "b"]).unwrap();
        let g = parse_polynomial("a + b", &other).unwrap();
        assert_eq!(p("x").try_add(&g), Err(PolyError::TableMismatch));
    }

    #[test]
    fn leading_term_product_rule() {
        // over an integral domain: LM(f*g) = LM(f)*LM(g)
        let f = p("x^2*y + y^3 - 1");
        let g = p("x*z^2 + y");
        let order = MonomialOrder::Lex;
        let lm_f = f.leading_term(order).unwrap().0.clone();
        let lm_g = g.leading_term(order).unwrap().0.clone();
        let prod = &f * &g;
        assert_eq!(prod.leading_term(order).unwrap().0, &lm_f.mul(&lm_g));
    }

    #[test]
    fn reduce_examples() {
        let order = MonomialOrder::Lex;
        // x^2 by {x} -> 0
        assert!(reduce(&p("x^2"), &[p("x")], order).is_zero());
        // a nonzero constant is irreducible by nonconstant leads
        assert_eq!(reduce(&p("5"), &[p("x - 1"), p("y^2 - z")], order), p("5"));
        // xy - 1 by {x - y} under lex x>y: substitute x := y
        assert_eq!(reduce(&p("x*y - 1"), &[p("x - y")], order), p("y^2 - 1"));
    }

    #[test]
    fn divmod_reconstructs_input() {
        let order = MonomialOrder::Lex;
        let f = p("x^3*y - 2*x*y^2 + x + 7");
        let gs = [p("x*y - 1"), p("y^2 - x")];
        let (qs, r) = divmod(&f, &gs, order);
        let mut acc = r.clone();
        for (q, g) in qs.iter().zip(&gs) {
            acc = acc.try_add(&q.try_mul(g).unwrap()).unwrap();
        }
        assert_eq!(acc, f);
        // remainder has no monomial divisible by a leading monomial
        for (m, _) in r.terms() {
            for g in &gs {
                assert!(!g.leading_term(order).unwrap().0.divides(m));
            }
        }
    }

    #[test]
    fn eval_exact() {
        use crate::exact::QSqrt3;
        let t = tbl();
        let f = parse_polynomial("x^2 - 3", &t).unwrap();
        let values = vec![Some(QSqrt3::radical()), None, None];
        assert!(f.eval(&values).unwrap().is_zero());
        // missing variable is an error
        let g = parse_polynomial("x + y", &t).unwrap();
        assert!(matches!(
            g.eval(&values),
            Err(PolyError::MissingVariable(v)) if v == "y"
        ));
        // constants evaluate under any assignment
        let c = parse_polynomial("5", &t).unwrap();
        assert_eq!(c.eval::<QSqrt3>(&[None, None, None]).unwrap(), QSqrt3::from_int(5));
    }

    #[test]
    fn content_and_primitive() {
        let f = p("4/3*x^2 - 2*y");
        let (c, prim) = f.normalize_primitive();
        assert_eq!(c, Rational::new(2.into(), 3.into()));
        assert_eq!(prim, p("2*x^2 - 3*y"));
        let g = p("-x + y");
        let (c, prim) = g.normalize_primitive();
        assert_eq!(c, Rational::from_integer((-1).into()));
        assert_eq!(prim, p("x - y"));
    }

    #[test]
    fn substitution_composes() {
        let t = tbl();
        let f = parse_polynomial("x^2 + y", &t).unwrap();
        let mut images = BTreeMap::new();
        images.insert(0, parse_polynomial("z + 1", &t).unwrap());
        images.insert(1, parse_polynomial("-z^2", &t).unwrap());
        let g = f.substitute(&images, &t).unwrap();
        assert_eq!(g, parse_polynomial("2*z + 1", &t).unwrap());
    }

    #[test]
    fn display_round_trip() {
        for s in ["-2*x*y + 3/4*z", "x^2 - 1", "0", "-x - 1", "1/2*x"] {
            let f = p(s);
            assert_eq!(parse_polynomial(&f.to_string(), &tbl()).unwrap(), f);
        }
        assert_eq!(p("-2*x*y + 3/4*z").to_string(), "-2*x*y + 3/4*z");
    }
}
