use std::cmp::Ordering;

use smallvec::SmallVec;

/// A power product, stored as one exponent per table variable.
///
/// The derived `Ord` is the lexicographic monomial order for the table's
/// variable priority: exponent vectors compare position by position, most
/// significant variable first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    // 24 inline slots cover the 22-variable master table plus adjoined
    // symbols without heap traffic.
    exps: SmallVec<[u16; 24]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn variable(nvars: usize, var: usize, power: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var] = power;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must know `self.divides(other)`.
    pub fn div_into(&self, other: &Self) -> Self {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// True when the power products share no variable.
    pub fn coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Total orders on monomials compatible with multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Pure lexicographic order; the one every Einstein system is solved in.
    #[default]
    Lex,
    /// Graded reverse lexicographic order.
    GrevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let (da, db) = (a.total_degree(), b.total_degree());
                if da != db {
                    return da.cmp(&db);
                }
                // Equal degree: the monomial with the smaller exponent in the
                // last differing variable is the larger one.
                for (ea, eb) in a.exps.iter().zip(&b.exps).rev() {
                    if ea != eb {
                        return eb.cmp(ea);
                    }
                }
                Ordering::Equal
            }
        }
    }
}
