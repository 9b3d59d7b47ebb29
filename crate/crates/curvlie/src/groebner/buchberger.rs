use std::collections::{BTreeSet, HashSet};

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::poly::{reduce, Monomial, MonomialOrder, Polynomial};

/// Caps on the work a basis computation may do. Exceeding either cap aborts
/// with a partial result instead of consuming unbounded time or memory.
#[derive(Debug, Clone, Copy)]
pub struct GroebnerBudget {
    /// Maximum number of S-pairs taken off the queue.
    pub max_pairs: usize,
    /// Maximum total number of stored terms across the working basis.
    pub max_monomials: usize,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget { max_pairs: 200_000, max_monomials: 5_000_000 }
    }
}

#[derive(Debug, Clone, Error)]
pub enum GroebnerError {
    #[error("budget exceeded after {pairs_processed} pairs ({monomials} stored monomials)")]
    BudgetExceeded {
        pairs_processed: usize,
        monomials: usize,
        /// The inter-reduced working basis at the point of abort. It
        /// generates the same ideal but need not be a Groebner basis.
        partial: Vec<Polynomial>,
    },
    #[error("no generators given")]
    EmptyInput,
}

/// A reduced Groebner basis: inter-reduced, primitive integer coefficients,
/// positive leading coefficients, sorted by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    polys: Vec<Polynomial>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Normal form modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.polys, self.order)
    }

    /// Ideal membership: true iff the normal form vanishes.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].as_constant().is_some()
    }

    /// Check the Buchberger criterion directly: every S-polynomial of basis
    /// pairs reduces to zero. Returns a transcript certificate.
    pub fn certify(&self, inputs: &[Polynomial]) -> Result<Certificate, String> {
        let mut lines = Vec::new();
        for i in 0..self.polys.len() {
            for j in (i + 1)..self.polys.len() {
                let s = s_polynomial(&self.polys[i], &self.polys[j], self.order);
                let r = self.normal_form(&s);
                if !r.is_zero() {
                    return Err(format!(
                        "S-polynomial of basis elements {i} and {j} does not reduce to zero"
                    ));
                }
                lines.push(format!("spair {i} {j} -> 0"));
            }
        }
        for (k, g) in inputs.iter().enumerate() {
            if !self.contains(g) {
                return Err(format!("input generator {k} is not in the ideal of the basis"));
            }
            lines.push(format!("generator {k} -> 0"));
        }
        let mut hasher = Sha256::new();
        for line in &lines {
            hasher.update(line.as_bytes());
            hasher.update(b"\n");
        }
        Ok(Certificate {
            spairs_checked: self.polys.len() * self.polys.len().saturating_sub(1) / 2,
            generators_checked: inputs.len(),
            transcript_sha256: format!("{:x}", hasher.finalize()),
        })
    }
}

/// Evidence that a basis passed the S-pair and generator reduction checks.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Certificate {
    pub spairs_checked: usize,
    pub generators_checked: usize,
    pub transcript_sha256: String,
}

/// `S(f, g) = (lcm/LT(f)) f - (lcm/LT(g)) g` for the leading-monomial lcm.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&fm.div_into(&lcm), &fc.recip());
    let b = g.mul_term(&gm.div_into(&lcm), &gc.recip());
    a.try_sub(&b).expect("same table")
}

/// Sortable encoding of a monomial under the given order, so the pair queue
/// can use a plain `BTreeSet`. Smaller key = smaller monomial.
fn order_key(m: &Monomial, order: MonomialOrder) -> Vec<u32> {
    match order {
        MonomialOrder::Lex => m.exponents().iter().map(|&e| e as u32).collect(),
        MonomialOrder::GrevLex => {
            let mut key = Vec::with_capacity(m.nvars() + 1);
            key.push(m.total_degree());
            for &e in m.exponents().iter().rev() {
                key.push(u16::MAX as u32 - e as u32);
            }
            key
        }
    }
}

/// Buchberger's algorithm with the normal selection strategy (smallest
/// leading-monomial lcm first, ties broken by generator index). Applies the
/// coprime-leading-monomial criterion and the chain criterion. Output is
/// deterministic for a fixed input order.
pub fn buchberger(
    generators: &[Polynomial],
    order: MonomialOrder,
    budget: GroebnerBudget,
) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        if !g.is_zero() {
            let p = g.primitive_part();
            if !basis.contains(&p) {
                basis.push(p);
            }
        }
    }
    if basis.is_empty() {
        return Err(GroebnerError::EmptyInput);
    }

    let lead = |p: &Polynomial| p.leading_term(order).unwrap().0.clone();

    let mut queue: BTreeSet<(Vec<u32>, usize, usize)> = BTreeSet::new();
    let enqueue = |queue: &mut BTreeSet<(Vec<u32>, usize, usize)>,
                       basis: &[Polynomial],
                       i: usize,
                       j: usize| {
        let lcm = lead(&basis[i]).lcm(&lead(&basis[j]));
        queue.insert((order_key(&lcm, order), i, j));
    };
    for j in 1..basis.len() {
        for i in 0..j {
            enqueue(&mut queue, &basis, i, j);
        }
    }

    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs_processed = 0usize;

    while let Some(entry) = queue.iter().next().cloned() {
        queue.remove(&entry);
        let (_, i, j) = entry;
        pairs_processed += 1;
        let monomials: usize = basis.iter().map(|p| p.num_terms()).sum();
        if pairs_processed > budget.max_pairs || monomials > budget.max_monomials {
            return Err(GroebnerError::BudgetExceeded {
                pairs_processed,
                monomials,
                partial: reduce_basis(basis, order),
            });
        }

        treated.insert((i, j));
        let (lm_i, lm_j) = (lead(&basis[i]), lead(&basis[j]));

        // coprime-lead criterion: the S-polynomial reduces to zero
        if lm_i.coprime(&lm_j) {
            continue;
        }
        // chain criterion: some k with LM(k) | lcm(i,j) whose pairs with i
        // and j were both already treated
        let lcm = lm_i.lcm(&lm_j);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis[k]).divides(&lcm)
                && treated.contains(&(i.min(k), i.max(k)))
                && treated.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        // primitive-part reduction keeps integer growth bounded
        let r = r.primitive_part();
        basis.push(r);
        let t = basis.len() - 1;
        for i in 0..t {
            enqueue(&mut queue, &basis, i, t);
        }
    }

    Ok(GroebnerBasis { polys: reduce_basis(basis, order), order })
}

/// Minimalize and inter-reduce, normalize to primitive positive-lead
/// polynomials, sort ascending by leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    basis.retain(|p| !p.is_zero());
    // minimal: drop any element whose leading monomial is divisible by the
    // leading monomial of another surviving element
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lm_i = basis[i].leading_term(order).unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lm_j = basis[j].leading_term(order).unwrap().0.clone();
            if lm_j.divides(&lm_i) && (lm_j != lm_i || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> =
        basis.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect();

    // fully reduce each element against the others until stable
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, p)| (j != i).then(|| p.clone()))
                .collect();
            let r = reduce(&minimal[i], &others, order);
            let r = if r.is_zero() { r } else { r.primitive_part() };
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        minimal.retain(|p| !p.is_zero());
        if !changed {
            break;
        }
    }

    minimal.sort_by(|a, b| {
        let la = a.leading_term(order).unwrap().0;
        let lb = b.leading_term(order).unwrap().0;
        order.cmp(la, lb)
    });
    minimal
}
