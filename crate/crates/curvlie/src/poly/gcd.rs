//! Multivariate polynomial gcd over the rationals.
//!
//! Strategy: monomial content first, then cheap structural shortcuts (exact
//! division either way, disjoint supports), then a primitive
//! pseudo-remainder sequence recursing on one variable at a time. Contents
//! with respect to the recursion variable are extracted with recursive gcds,
//! which keeps intermediate coefficients small. This is adequate for the
//! cofactor/determinant-sized inputs produced by the curvature engine.

use num_traits::One;

use crate::exact::Rational;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;

/// Exact division: `Some(f / g)` when `g` divides `f`, else `None`.
pub fn try_exact_div(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    assert!(!g.is_zero(), "division by the zero polynomial");
    if f.is_zero() {
        return Some(f.clone());
    }
    let order = MonomialOrder::Lex;
    let table = f.table().clone();
    let (gm, gc) = g.leading_term(order).map(|(m, c)| (m.clone(), c.clone()))?;
    let mut quotient = Polynomial::zero(table.clone());
    let mut work = f.clone();
    while let Some((wm, wc)) = work.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        if !gm.divides(&wm) {
            return None;
        }
        let qm = gm.div_into(&wm);
        let qc = &wc / &gc;
        let t = Polynomial::from_term(table.clone(), qm.clone(), qc.clone());
        quotient = quotient.try_add(&t).unwrap();
        work = work.try_sub(&g.mul_term(&qm, &qc)).unwrap();
    }
    Some(quotient)
}

/// Greatest common divisor, returned as a primitive polynomial with positive
/// leading coefficient. `gcd(0, g) = primitive(g)`; the gcd of two nonzero
/// constants is `1`.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.primitive_part();
    }
    if g.is_zero() {
        return f.primitive_part();
    }

    // Split off the monomial content; the rest has a constant term in at
    // least one variable direction.
    let (mf, pf) = strip_monomial(f);
    let (mg, pg) = strip_monomial(g);
    let shared = mf.gcd(&mg);
    let core = gcd_primitive(&pf.primitive_part(), &pg.primitive_part());
    core.mul_term(&shared, &Rational::one())
}

/// Monomial gcd of all terms, and the polynomial with it divided out.
fn strip_monomial(f: &Polynomial) -> (Monomial, Polynomial) {
    let mut iter = f.terms();
    let mut common = iter.next().expect("nonzero").0.clone();
    for (m, _) in iter {
        common = common.gcd(m);
    }
    if common.is_constant() {
        return (common, f.clone());
    }
    let quotient = try_exact_div(
        f,
        &Polynomial::from_term(f.table().clone(), common.clone(), Rational::one()),
    )
    .expect("monomial content divides");
    (common, quotient)
}

fn gcd_primitive(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let table = f.table().clone();
    let one = Polynomial::one_poly(table.clone());
    if f.as_constant().is_some() || g.as_constant().is_some() {
        return one;
    }
    if f == g {
        return f.clone();
    }
    // exact-division shortcuts cover the common pipeline cases
    if try_exact_div(g, f).is_some() {
        return f.clone();
    }
    if try_exact_div(f, g).is_some() {
        return g.clone();
    }
    let sf = f.support();
    let sg = g.support();
    let common: Vec<usize> = sf.iter().copied().filter(|v| sg.contains(v)).collect();
    if common.is_empty() {
        return one;
    }
    // recurse on the common variable with the smallest degree bound
    let var = *common
        .iter()
        .min_by_key(|&&v| f.degree_in(v).min(g.degree_in(v)))
        .unwrap();

    let (cf, pf) = content_wrt(f, var);
    let (cg, pg) = content_wrt(g, var);
    let cont = gcd(&cf, &cg);

    // primitive PRS in `var`
    let (mut a, mut b) = if pf.degree_in(var) >= pg.degree_in(var) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    while !b.is_zero() {
        if b.degree_in(var) == 0 {
            // a unit with respect to `var`: the gcd reduces to the contents
            return cont;
        }
        let r = pseudo_rem(&a, &b, var);
        a = b;
        b = if r.is_zero() { r } else { content_wrt(&r, var).1 };
    }
    let pp = if a.degree_in(var) == 0 {
        one
    } else {
        a.primitive_part()
    };
    pp.try_mul(&cont).unwrap().primitive_part()
}

/// Content and primitive part with respect to one variable: the content is
/// the gcd of the coefficient polynomials of the powers of `var`.
fn content_wrt(f: &Polynomial, var: usize) -> (Polynomial, Polynomial) {
    let coeffs = f.coefficients_in(var);
    let mut c = Polynomial::zero(f.table().clone());
    for q in &coeffs {
        if q.is_zero() {
            continue;
        }
        c = gcd(&c, q);
        if c.as_constant().map(|k| k.is_one()).unwrap_or(false) {
            break;
        }
    }
    if c.as_constant().map(|k| k.is_one()).unwrap_or(false) {
        return (c, f.clone());
    }
    let pp = try_exact_div(f, &c).expect("content divides");
    (c, pp)
}

/// Pseudo-remainder of `a` by `b` with respect to `var`: the remainder of
/// `lc(b)^k * a` under univariate division over the coefficient ring.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let db = b.degree_in(var);
    debug_assert!(db > 0);
    let lc_b = b.coefficients_in(var)[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lc_r = r.coefficients_in(var)[dr as usize].clone();
        let shift = Polynomial::from_term(
            r.table().clone(),
            Monomial::variable(r.table().len(), var, dr - db),
            Rational::one(),
        );
        let scaled = r.try_mul(&lc_b).unwrap();
        let sub = b.try_mul(&lc_r).unwrap().try_mul(&shift).unwrap();
        r = scaled.try_sub(&sub).unwrap();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, VariableTable};
    use std::sync::Arc;

    fn tbl() -> Arc<VariableTable> {
        VariableTable::new(&["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &tbl()).unwrap()
    }

    #[test]
    fn exact_division() {
        assert_eq!(try_exact_div(&p("x^2 - 1"), &p("x - 1")), Some(p("x + 1")));
        assert_eq!(try_exact_div(&p("x^2 + 1"), &p("x - 1")), None);
        assert_eq!(
            try_exact_div(&p("x^2*y + x*y^2"), &p("x*y")),
            Some(p("x + y"))
        );
    }

    #[test]
    fn univariate_gcd() {
        assert_eq!(gcd(&p("x^2 - 1"), &p("x^2 + x - 2")), p("x - 1"));
        assert_eq!(gcd(&p("x^2 - 1"), &p("x + 2")), p("1"));
        // unit content is stripped
        assert_eq!(gcd(&p("2*x + 2"), &p("4*x + 4")), p("x + 1"));
    }

    #[test]
    fn multivariate_gcd() {
        let f = &p("x + y") * &p("x - y");
        let g = &p("x + y") * &p("y");
        assert_eq!(gcd(&f, &g), p("x + y"));
        // three variables, nontrivial cofactors
        let a = &(&p("x*y - z") * &p("x + z")) * &p("y + 1");
        let b = &p("x*y - z") * &p("x - z");
        assert_eq!(gcd(&a, &b), p("x*y - z"));
        // disjoint supports
        assert_eq!(gcd(&p("x^2 + x"), &p("y + 1")), p("1"));
    }

    #[test]
    fn monomial_content_handled() {
        assert_eq!(gcd(&p("x^2*y"), &p("x*y^2")), p("x*y"));
        assert_eq!(gcd(&p("2*x^3"), &p("3*x")), p("x"));
    }

    #[test]
    fn gcd_divides_both() {
        let f = &p("x^2 + 2*x*y + y^2") * &p("z - 1");
        let g = &p("x + y") * &p("z^2 - z");
        let d = gcd(&f, &g);
        assert_eq!(d, &p("x + y") * &p("z - 1"));
        assert!(try_exact_div(&f, &d).is_some());
        assert!(try_exact_div(&g, &d).is_some());
    }

    #[test]
    fn zero_cases() {
        let z = Polynomial::zero(tbl());
        assert_eq!(gcd(&z, &p("2*x")), p("x"));
        assert_eq!(gcd(&p("-3*y"), &z), p("y"));
    }
}
