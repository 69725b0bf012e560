//! Ideals in a polynomial ring and the Gröbner machinery behind them:
//! normal forms, reduced bases, elimination, saturation, intersection and
//! colon ideals.

mod buchberger;
mod lift;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

use buchberger::Sorted;

/// A reduced Gröbner basis: monic, tail-reduced, leads pairwise
/// non-divisible, sorted descending by leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: TermOrder,
    polys: Vec<Polynomial>,
    sorted: Vec<Sorted>,
}

impl GroebnerBasis {
    fn compute(ring: &Ring, gens: &[Polynomial], order: &TermOrder) -> Self {
        let sorted = buchberger::reduced_basis(gens, order);
        let polys = sorted.iter().map(|t| buchberger::to_polynomial(ring, t)).collect();
        GroebnerBasis {
            order: order.clone(),
            polys,
            sorted,
        }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t[0].monomial.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0][0].monomial.is_one()
    }

    /// Remainder of `f` modulo the basis; zero iff `f` is in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let idx: Vec<usize> = (0..self.sorted.len()).collect();
        let r = buchberger::reduce(buchberger::sort_under(f, &self.order), &self.sorted, &idx, &self.order);
        Polynomial::from_terms(f.ring(), r)
    }

    /// Membership test for `f`.
    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// An ideal given by generators, with reduced Gröbner bases cached per
/// term order.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: RwLock<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "ideal({})", gens.join(", "))
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert!(
                Arc::ptr_eq(g.ring(), ring) || **g.ring() == **ring,
                "generator from a different ring"
            );
        }
        Ideal {
            ring: ring.clone(),
            gens,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal generated by monomials.
    pub fn from_monomials(ring: &Ring, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        Ideal::new(
            ring,
            monomials
                .into_iter()
                .map(|m| Polynomial::from_monomial(ring, m))
                .collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis under `order`, computed once and cached.
    pub fn groebner(&self, order: &TermOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(order) {
            return gb.clone();
        }
        let gb = Arc::new(GroebnerBasis::compute(&self.ring, &self.gens, order));
        let mut cache = self.cache.write().expect("cache lock");
        cache.entry(order.clone()).or_insert(gb).clone()
    }

    pub fn reduced_gb(&self, order: &TermOrder) -> Vec<Polynomial> {
        self.groebner(order).polys().to_vec()
    }

    pub fn normal_form(&self, f: &Polynomial, order: &TermOrder) -> Polynomial {
        self.groebner(order).normal_form(f)
    }

    /// Membership test (grevlex basis).
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner(&TermOrder::Grevlex).reduces_to_zero(f)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.contains(&Polynomial::from_monomial(&self.ring, m.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.groebner(&TermOrder::Grevlex).is_unit()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero() || g.is_monomial())
    }

    /// The generators as a monomial ideal, if they are all terms.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.is_monomial() {
            return None;
        }
        Some(MonomialIdeal::new(
            &self.ring,
            self.gens.iter().filter_map(|g| g.as_monomial().cloned()),
        ))
    }

    /// The initial ideal under `order`.
    pub fn initial_ideal(&self, order: &TermOrder) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.groebner(order).leading_monomials())
    }

    /// `R/I` is finite-dimensional.
    pub fn is_zero_dimensional(&self) -> bool {
        self.initial_ideal(&TermOrder::Grevlex).is_artinian()
    }

    /// `m^s ⊆ I` for some `s`. For graded `I` this is zero-dimensionality;
    /// otherwise each `I ∩ k[x_i]` must be generated by a power of `x_i`.
    pub fn is_artinian(&self) -> bool {
        if !self.is_zero_dimensional() {
            return false;
        }
        if self.is_homogeneous() {
            return true;
        }
        let n = self.ring.nvars();
        (0..n).all(|i| {
            let others: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            self.elimination_gens(&others).iter().all(|g| g.is_monomial())
        })
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, e: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// `I ∩ k[remaining variables]`, as an ideal of the subring on the
    /// remaining variables (in their original relative order).
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        let keep: Vec<usize> = (0..self.ring.nvars()).filter(|v| !drop.contains(v)).collect();
        if keep.is_empty() {
            return Err(Error::Precondition("cannot eliminate every variable".into()));
        }
        let target = self.ring.restrict(&keep)?;
        let gens = self
            .elimination_gens(drop)
            .into_iter()
            .map(|g| g.project(&target, &keep).expect("eliminated"))
            .collect();
        Ok(Ideal::new(&target, gens))
    }

    /// Generators of `I ∩ k[remaining]` inside this ring: the elements of
    /// the block-order reduced basis that avoid `drop`.
    pub fn elimination_gens(&self, drop: &[usize]) -> Vec<Polynomial> {
        let order = TermOrder::elimination(self.ring.nvars(), drop);
        self.groebner(&order)
            .polys()
            .iter()
            .filter(|g| !g.involves_any(drop))
            .cloned()
            .collect()
    }

    /// `I : m^∞` via one auxiliary variable `t` and the generator `t·m - 1`.
    pub fn saturate(&self, m: &Monomial) -> Ideal {
        let n = self.ring.nvars();
        let gens = saturation_basis(&self.ring, &self.gens, m, &[(0..n).collect()]);
        Ideal::new(&self.ring, gens)
    }

    /// `I : m^∞` by iterating `I : m` until it stabilizes. Slower; kept as
    /// an independent route for cross-checks.
    pub fn saturate_iterated(&self, m: &Monomial) -> Ideal {
        let mp = Polynomial::from_monomial(&self.ring, m.clone());
        let mut cur = self.clone();
        loop {
            let next = cur.colon(&mp).expect("monomial is nonzero");
            if next.is_subset_of(&cur) {
                return cur;
            }
            cur = next;
        }
    }

    /// `I ∩ J` via `t·I + (1 - t)·J` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert_eq!(*self.ring, *other.ring, "intersect: rings differ");
        let n = self.ring.nvars();
        let ext = self.ring.extend("t", 1);
        let map: Vec<usize> = (0..n).collect();
        let t = Polynomial::var(&ext, n);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|f| &t * &f.embed(&ext, &map))
            .collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.embed(&ext, &map)));
        let elim = Ideal::new(&ext, gens).elimination_gens(&[n]);
        Ideal::new(
            &self.ring,
            elim.into_iter()
                .map(|g| g.project(&self.ring, &map).expect("t eliminated"))
                .collect(),
        )
    }

    /// `I : g = (I ∩ (g)) / g`.
    pub fn colon(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if g.is_unit() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()]);
        let inter = self.intersect(&principal);
        let gens = inter
            .gens
            .iter()
            .map(|h| h.exact_div(g).expect("elements of (g) are divisible by g"))
            .collect();
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `I : J = ∩_j I : f_j` over the nonzero generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Ideal {
        let mut acc: Option<Ideal> = None;
        for f in other.gens.iter().filter(|f| !f.is_zero()) {
            let c = self.colon(f).expect("nonzero");
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(&self.ring))
    }

    /// Cofactors `c_i` with `sum c_i · gens[i] = f`, or `None` if `f ∉ I`.
    pub fn lift(&self, f: &Polynomial) -> Option<Vec<Polynomial>> {
        lift::lift(&self.ring, &self.gens, f)
    }

    /// The reduced grevlex basis as a new ideal (same ideal, tidier
    /// generators).
    pub fn trimmed(&self) -> Ideal {
        Ideal::new(&self.ring, self.reduced_gb(&TermOrder::Grevlex))
    }
}

/// Reduced Gröbner basis of `(gens) : m^∞` under the grevlex block order
/// `tail_blocks` on the original variables. Adds `t` with `t·m - 1`, uses
/// the block order `[t | tail_blocks...]` and keeps the `t`-free part,
/// which is a reduced basis for the restricted order.
pub(crate) fn saturation_basis(
    ring: &Ring,
    gens: &[Polynomial],
    m: &Monomial,
    tail_blocks: &[Vec<usize>],
) -> Vec<Polynomial> {
    let n = ring.nvars();
    let map: Vec<usize> = (0..n).collect();
    let ext = ring.extend("t", 1);
    let mut ext_gens: Vec<Polynomial> = gens.iter().map(|g| g.embed(&ext, &map)).collect();
    if !m.is_one() {
        let mut e: Vec<u32> = m.exponents().to_vec();
        e.push(1);
        let tm = Polynomial::from_monomial(&ext, Monomial::new(e));
        ext_gens.push(&tm - &Polynomial::one(&ext));
    }
    let mut blocks = vec![vec![n]];
    blocks.extend(tail_blocks.iter().cloned());
    let order = TermOrder::blocks(&blocks);
    let gb = GroebnerBasis::compute(&ext, &ext_gens, &order);
    gb.polys()
        .iter()
        .filter(|g| !g.involves_any(&[n]))
        .map(|g| g.project(ring, &map).expect("t-free"))
        .collect()
}

#[cfg(test)]
mod tests;
