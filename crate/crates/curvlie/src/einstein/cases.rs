//! Generators of one-parameter subgroups up to automorphisms of
//! SL(2,R) x SL(2,R): the seven families
//!
//! ```text
//! (E1, r E1) r >= 0    (E3, r E3) r >= 0    (N, 0)
//! (E1, r E3) r > 0     (E3, N)              (N, N)
//! (E1, N)
//! ```
//!
//! where `r = 1` and `r = 0` of the scaling families get their own metric
//! ansatz patterns, giving eleven patterns in total.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::Rational;
use crate::liealg::{e1, e3, nilpotent_n, pair_element, AlgebraElement};

use super::EinsteinError;

/// The seven generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorFamily {
    /// `(E1, r E1)`, `r >= 0`
    E1RE1,
    /// `(E1, r E3)`, `r > 0`
    E1RE3,
    /// `(E1, N)`
    E1N,
    /// `(E3, r E3)`, `r >= 0`
    E3RE3,
    /// `(E3, N)`
    E3N,
    /// `(N, 0)`
    N0,
    /// `(N, N)`
    NN,
}

impl GeneratorFamily {
    pub fn all() -> [GeneratorFamily; 7] {
        use GeneratorFamily::*;
        [E1RE1, E1RE3, E1N, E3RE3, E3N, N0, NN]
    }

    pub fn label(&self) -> &'static str {
        match self {
            GeneratorFamily::E1RE1 => "(E1,rE1)",
            GeneratorFamily::E1RE3 => "(E1,rE3)",
            GeneratorFamily::E1N => "(E1,N)",
            GeneratorFamily::E3RE3 => "(E3,rE3)",
            GeneratorFamily::E3N => "(E3,N)",
            GeneratorFamily::N0 => "(N,0)",
            GeneratorFamily::NN => "(N,N)",
        }
    }

    pub fn takes_r(&self) -> bool {
        matches!(
            self,
            GeneratorFamily::E1RE1 | GeneratorFamily::E1RE3 | GeneratorFamily::E3RE3
        )
    }
}

/// A generator family with its scaling parameter pinned (when the family
/// has one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCase {
    pub family: GeneratorFamily,
    pub r: Option<Rational>,
}

/// The metric-ansatz pattern a concrete case falls under; the eleven rows
/// of the invariant-form tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnsatzPattern {
    E1RE1Generic,
    E1E1,
    E1Zero,
    E1RE3Generic,
    E1N,
    E3RE3Generic,
    E3E3,
    E3Zero,
    E3N,
    NZero,
    NN,
}

impl AnsatzPattern {
    pub fn all() -> [AnsatzPattern; 11] {
        use AnsatzPattern::*;
        [
            E1RE1Generic,
            E1E1,
            E1Zero,
            E1RE3Generic,
            E1N,
            E3RE3Generic,
            E3E3,
            E3Zero,
            E3N,
            NZero,
            NN,
        ]
    }

    pub fn label(&self) -> &'static str {
        match self {
            AnsatzPattern::E1RE1Generic => "(E1,rE1)",
            AnsatzPattern::E1E1 => "(E1,E1)",
            AnsatzPattern::E1Zero => "(E1,0)",
            AnsatzPattern::E1RE3Generic => "(E1,rE3)",
            AnsatzPattern::E1N => "(E1,N)",
            AnsatzPattern::E3RE3Generic => "(E3,rE3)",
            AnsatzPattern::E3E3 => "(E3,E3)",
            AnsatzPattern::E3Zero => "(E3,0)",
            AnsatzPattern::E3N => "(E3,N)",
            AnsatzPattern::NZero => "(N,0)",
            AnsatzPattern::NN => "(N,N)",
        }
    }

    /// Whether the second diagonal block is only constrained up to the
    /// five-form classification (so the ansatz splits into Q sub-cases).
    pub fn has_q_block(&self) -> bool {
        matches!(self, AnsatzPattern::E1Zero | AnsatzPattern::E3Zero | AnsatzPattern::NZero)
    }
}

impl GeneratorCase {
    pub fn new(family: GeneratorFamily, r: Option<Rational>) -> Result<Self, EinsteinError> {
        match (family.takes_r(), &r) {
            (true, Some(v)) => {
                if v.is_negative() {
                    return Err(EinsteinError::BadParameter(format!(
                        "r must be non-negative, got {v}"
                    )));
                }
                if family == GeneratorFamily::E1RE3 && v.is_zero() {
                    return Err(EinsteinError::BadParameter(
                        "(E1,rE3) requires r > 0; r = 0 is the (E1,0) case".into(),
                    ));
                }
                Ok(GeneratorCase { family, r })
            }
            (true, None) => Ok(GeneratorCase { family, r: None }),
            (false, None) => Ok(GeneratorCase { family, r: None }),
            (false, Some(_)) => Err(EinsteinError::BadParameter(format!(
                "{} takes no parameter",
                family.label()
            ))),
        }
    }

    /// Parse `"(E1,rE1)"`, `"(E1,E1)"`, `"(E1,0)"`, `"(N,N)"`, ... Labels
    /// with an explicit `r` in them leave the parameter to be supplied
    /// separately; `(E1,E1)` pins `r = 1` and `(E1,0)` pins `r = 0`.
    pub fn parse(s: &str) -> Result<Self, EinsteinError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let one = Rational::one();
        let zero = Rational::zero();
        match compact.as_str() {
            "(E1,rE1)" => GeneratorCase::new(GeneratorFamily::E1RE1, None),
            "(E1,E1)" => GeneratorCase::new(GeneratorFamily::E1RE1, Some(one)),
            "(E1,0)" => GeneratorCase::new(GeneratorFamily::E1RE1, Some(zero)),
            "(E1,rE3)" => GeneratorCase::new(GeneratorFamily::E1RE3, None),
            "(E1,E3)" => GeneratorCase::new(GeneratorFamily::E1RE3, Some(one)),
            "(E1,N)" => GeneratorCase::new(GeneratorFamily::E1N, None),
            "(E3,rE3)" => GeneratorCase::new(GeneratorFamily::E3RE3, None),
            "(E3,E3)" => GeneratorCase::new(GeneratorFamily::E3RE3, Some(one)),
            "(E3,0)" => GeneratorCase::new(GeneratorFamily::E3RE3, Some(zero)),
            "(E3,N)" => GeneratorCase::new(GeneratorFamily::E3N, None),
            "(N,0)" => GeneratorCase::new(GeneratorFamily::N0, None),
            "(N,N)" => GeneratorCase::new(GeneratorFamily::NN, None),
            _ => Err(EinsteinError::BadCase(s.to_string())),
        }
    }

    /// Pin the scaling parameter (no-op for parameterless families).
    pub fn with_r(&self, r: Rational) -> Result<Self, EinsteinError> {
        if self.family.takes_r() && self.r.is_none() {
            GeneratorCase::new(self.family, Some(r))
        } else {
            Ok(self.clone())
        }
    }

    /// The generator as an element of `sl2 + sl2`. Families with a free `r`
    /// must have it pinned first.
    pub fn element(&self) -> Result<AlgebraElement, EinsteinError> {
        let r = match (self.family.takes_r(), &self.r) {
            (true, Some(r)) => r.clone(),
            (true, None) => {
                return Err(EinsteinError::BadParameter(format!(
                    "{} needs r pinned before instantiation",
                    self.family.label()
                )))
            }
            _ => Rational::zero(),
        };
        let zero3 = AlgebraElement::zero(3);
        Ok(match self.family {
            GeneratorFamily::E1RE1 => pair_element(&e1(), &e1().scale(&r)),
            GeneratorFamily::E1RE3 => pair_element(&e1(), &e3().scale(&r)),
            GeneratorFamily::E1N => pair_element(&e1(), &nilpotent_n()),
            GeneratorFamily::E3RE3 => pair_element(&e3(), &e3().scale(&r)),
            GeneratorFamily::E3N => pair_element(&e3(), &nilpotent_n()),
            GeneratorFamily::N0 => pair_element(&nilpotent_n(), &zero3),
            GeneratorFamily::NN => pair_element(&nilpotent_n(), &nilpotent_n()),
        })
    }

    /// Which invariant-form pattern applies.
    pub fn pattern(&self) -> Result<AnsatzPattern, EinsteinError> {
        let need_r = || {
            EinsteinError::BadParameter(format!(
                "{} needs r pinned to select an ansatz",
                self.family.label()
            ))
        };
        Ok(match self.family {
            GeneratorFamily::E1RE1 => {
                let r = self.r.as_ref().ok_or_else(need_r)?;
                if r.is_zero() {
                    AnsatzPattern::E1Zero
                } else if r.is_one() {
                    AnsatzPattern::E1E1
                } else {
                    AnsatzPattern::E1RE1Generic
                }
            }
            GeneratorFamily::E1RE3 => AnsatzPattern::E1RE3Generic,
            GeneratorFamily::E1N => AnsatzPattern::E1N,
            GeneratorFamily::E3RE3 => {
                let r = self.r.as_ref().ok_or_else(need_r)?;
                if r.is_zero() {
                    AnsatzPattern::E3Zero
                } else if r.is_one() {
                    AnsatzPattern::E3E3
                } else {
                    AnsatzPattern::E3RE3Generic
                }
            }
            GeneratorFamily::E3N => AnsatzPattern::E3N,
            GeneratorFamily::N0 => AnsatzPattern::NZero,
            GeneratorFamily::NN => AnsatzPattern::NN,
        })
    }
}

impl fmt::Display for GeneratorCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.r {
            Some(r) => write!(f, "{} r={}", self.family.label(), r),
            None => write!(f, "{}", self.family.label()),
        }
    }
}

/// The seven generator families, with `r` left free where the family has
/// one.
pub fn generator_catalog() -> Vec<GeneratorCase> {
    GeneratorFamily::all()
        .into_iter()
        .map(|family| GeneratorCase { family, r: None })
        .collect()
}
