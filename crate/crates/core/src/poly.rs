//! Sparse multivariate polynomials.
//!
//! Terms are kept sorted strictly descending under grevlex, with no zero
//! coefficients and no repeated monomials; the empty term list is `0`.
//! Gröbner computations under other orders re-sort internally.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{Coeff, FieldSpec};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub monomial: Monomial,
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

fn same_ring(a: &Ring, b: &Ring) {
    assert!(
        Arc::ptr_eq(a, b) || a == b,
        "polynomials live in different rings: {} vs {}",
        a.declaration(),
        b.declaration()
    );
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::term(ring, ring.field().one(), Monomial::var_power(ring.nvars(), i, 1))
    }

    /// The monomial `x^m` with coefficient 1.
    pub fn from_monomial(ring: &Ring, m: Monomial) -> Self {
        Self::term(ring, ring.field().one(), m)
    }

    pub fn term(ring: &Ring, c: Coeff, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff: c, monomial: m }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds the canonical form of an arbitrary term list (like monomials
    /// are combined, zeros dropped).
    pub fn from_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for t in terms {
            assert_eq!(t.monomial.nvars(), ring.nvars());
            match acc.get_mut(&t.monomial) {
                Some(c) => *c = &*c + &t.coeff,
                None => {
                    acc.insert(t.monomial, t.coeff);
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coeff)| Term { coeff, monomial })
            .collect();
        terms.sort_by(|a, b| TermOrder::Grevlex.cmp(&b.monomial, &a.monomial));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| TermOrder::Grevlex.greater(&w[0].monomial, &w[1].monomial)));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    /// A single term `c·x^a` (any nonzero `c`).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.is_monomial() {
            Some(&self.terms[0].monomial)
        } else {
            None
        }
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<&Term> {
        match order {
            TermOrder::Grevlex => self.terms.first(),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp(&a.monomial, &b.monomial)),
        }
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|t| &t.monomial)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|s| s.monomial.degree() == d)
            }
        }
    }

    /// Largest exponent of `x_var` over the terms.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.monomial.exponent(var)).max().unwrap_or(0)
    }

    /// Does any term involve one of `vars`?
    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .any(|t| vars.iter().any(|&v| t.monomial.exponent(v) > 0))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    /// `c·x^m·self`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the grevlex leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(&t.coeff.inv().expect("nonzero leading coefficient")),
        }
    }

    /// `self / g` when `g` divides `self` exactly.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        same_ring(&self.ring, &g.ring);
        let lead = g.terms.first()?;
        let inv = lead.coeff.inv()?;
        let mut quotient = Vec::new();
        let mut rem = self.clone();
        while let Some(t) = rem.terms.first() {
            let m = t.monomial.checked_div(&lead.monomial)?;
            let c = &t.coeff * &inv;
            rem = &rem - &g.mul_term(&c, &m);
            quotient.push(Term { coeff: c, monomial: m });
        }
        // quotient terms were produced in strictly descending order
        Some(Polynomial::from_sorted_terms(&self.ring, quotient))
    }

    /// Maps variable `i` of this ring to variable `var_map[i]` of `target`.
    pub fn embed(&self, target: &Ring, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0u32; n];
                for (i, &j) in var_map.iter().enumerate() {
                    e[j] += t.monomial.exponent(i);
                }
                Term {
                    coeff: t.coeff.clone(),
                    monomial: Monomial::new(e),
                }
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Restricts to the variables `keep` (in that order) of `target`;
    /// `None` if a dropped variable occurs.
    pub fn project(&self, target: &Ring, keep: &[usize]) -> Option<Polynomial> {
        let dropped: Vec<usize> = (0..self.ring.nvars()).filter(|v| !keep.contains(v)).collect();
        if self.involves_any(&dropped) {
            return None;
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                monomial: Monomial::new(keep.iter().map(|&v| t.monomial.exponent(v))),
            })
            .collect();
        Some(Polynomial::from_terms(target, terms))
    }

    /// Sets the listed variables to 1 and drops them, keeping `keep` in order.
    pub fn specialize_to_one(&self, target: &Ring, keep: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                monomial: Monomial::new(keep.iter().map(|&v| t.monomial.exponent(v))),
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Multi-homogenization against fresh variables: `target` holds this
    /// ring's `n` variables followed by `n` new ones `y_1..y_n`, and each
    /// term `x^a` is multiplied by `prod y_i^(d_i - a_i)` with `d_i` the
    /// largest exponent of `x_i` in `self`.
    pub fn multi_homogenize(&self, target: &Ring) -> Polynomial {
        let n = self.ring.nvars();
        assert_eq!(target.nvars(), 2 * n, "target ring must double the variables");
        let d: Vec<u32> = (0..n).map(|i| self.degree_in(i)).collect();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let a = t.monomial.exponents();
                let e = a.iter().copied().chain((0..n).map(|i| d[i] - a[i]));
                Term {
                    coeff: t.coeff.clone(),
                    monomial: Monomial::new(e),
                }
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Display form for ideal generators: over `QQ` denominators cleared and
    /// content removed; over `ZZ/p` made monic. Leading coefficient positive.
    pub fn normalized_for_display(&self) -> Polynomial {
        let Some(lead) = self.terms.first() else {
            return self.clone();
        };
        match self.field() {
            FieldSpec::PrimeField(_) => self.monic(),
            FieldSpec::Rationals => {
                let mut den_lcm = BigInt::one();
                let mut num_gcd = BigInt::zero();
                for t in &self.terms {
                    let q = t.coeff.to_rational();
                    den_lcm = den_lcm.lcm(q.denom());
                    num_gcd = num_gcd.gcd(q.numer());
                }
                let mut factor = num_rational::BigRational::new(den_lcm, num_gcd);
                if lead.coeff.to_rational().is_negative() {
                    factor = -factor;
                }
                self.scale(&Coeff::Q(factor))
            }
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        same_ring(&self.ring, &other.ring);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let conv = |t: &Term| {
            if negate_other {
                Term {
                    coeff: -&t.coeff,
                    monomial: t.monomial.clone(),
                }
            } else {
                t.clone()
            }
        };
        while i < a.len() && j < b.len() {
            match TermOrder::Grevlex.cmp(&a[i].monomial, &b[j].monomial) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(conv(&b[j]));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a[i].monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(conv));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Formats with `*`, `^`, and ` + `/` - ` separators; parses back to
    /// the same polynomial.
    pub fn display(&self) -> String {
        self.to_string()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        same_ring(&self.ring, &rhs.ring);
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return rhs.mul_term(&t.coeff, &t.monomial);
        }
        if rhs.terms.len() == 1 {
            let t = &rhs.terms[0];
            return self.mul_term(&t.coeff, &t.monomial);
        }
        let mut acc = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                acc.push(Term {
                    coeff: &a.coeff * &b.coeff,
                    monomial: a.monomial.mul(&b.monomial),
                });
            }
        }
        Polynomial::from_terms(&self.ring, acc)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.var_names();
        for (k, t) in self.terms.iter().enumerate() {
            let q = t.coeff.to_rational();
            let neg = q.is_negative();
            let abs = q.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.monomial.display(names))?;
            } else {
                write!(f, "{abs}*{}", t.monomial.display(names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn ring(names: &[&str]) -> Ring {
        RingContext::with_names(FieldSpec::Rationals, names).unwrap()
    }

    #[test]
    fn arithmetic_and_display() {
        let r = ring(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &(&x + &y) * &(&x - &y);
        assert_eq!(f.to_string(), "x^2 - y^2");
        assert!((&f - &f).is_zero());
        let half = Polynomial::constant(&r, FieldSpec::Rationals.from_ratio(&1.into(), &2.into()).unwrap());
        assert_eq!((&half * &x).to_string(), "1/2*x");
        assert_eq!((&half * &x).normalized_for_display().to_string(), "x");
        assert_eq!((-&(&x + &half)).normalized_for_display().to_string(), "2*x + 1");
    }

    #[test]
    fn multi_homogenize_examples() {
        let r = ring(&["x", "y"]);
        let t = r.extend("y", 2);
        let f = &Polynomial::var(&r, 0) + &Polynomial::var(&r, 1);
        // x*y2 + y*y1
        let h = f.multi_homogenize(&t);
        let expected = &(&Polynomial::var(&t, 0) * &Polynomial::var(&t, 3))
            + &(&Polynomial::var(&t, 1) * &Polynomial::var(&t, 2));
        assert_eq!(h, expected);

        let cube = Polynomial::var(&r, 0).pow(3);
        assert_eq!(cube.multi_homogenize(&t), cube.embed(&t, &[0, 1]));
        assert!(Polynomial::zero(&r).multi_homogenize(&t).is_zero());
    }

    #[test]
    fn multi_homogenize_three_vars() {
        // xy(x+y+z) with d = (2, 2, 1)
        let r = ring(&["x", "y", "z"]);
        let t = r.extend("y", 3);
        let (x, y, z) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
        let f = &(&x * &y) * &(&(&x + &y) + &z);
        let h = f.multi_homogenize(&t);
        let v = |i| Polynomial::var(&t, i);
        let expected = &(&(&(&v(0).pow(2) * &v(1)) * &(&v(4) * &v(5)))
            + &(&(&v(0) * &v(1).pow(2)) * &(&v(3) * &v(5))))
            + &(&(&(&v(0) * &v(1)) * &v(2)) * &(&v(3) * &v(4)));
        assert_eq!(h, expected);
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let g = &x + &y;
        let f = &(&x - &y) * &g;
        assert_eq!(f.exact_div(&g), Some(&x - &y));
        assert_eq!((&f + &x).exact_div(&g), None);
    }

    mod props {
        use proptest::prelude::*;

        use super::super::*;
        use crate::parse::parse_polynomial;
        use crate::ring::RingContext;

        fn field() -> impl Strategy<Value = FieldSpec> {
            prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::PrimeField(7))]
        }

        /// Random polynomials in `x, y, z` with small rational coefficients.
        fn poly(field: FieldSpec) -> impl Strategy<Value = Polynomial> {
            let term = ((-6i64..6), (1i64..4), proptest::collection::vec(0u32..4, 3));
            proptest::collection::vec(term, 0..6).prop_map(move |ts| {
                let r = RingContext::with_names(field, &["x", "y", "z"]).unwrap();
                let terms = ts
                    .into_iter()
                    .filter_map(|(num, den, e)| {
                        let coeff = field.from_ratio(&num.into(), &den.into())?;
                        Some(Term {
                            coeff,
                            monomial: Monomial::new(e),
                        })
                    })
                    .collect();
                Polynomial::from_terms(&r, terms)
            })
        }

        fn triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
            field().prop_flat_map(|k| (poly(k), poly(k), poly(k)))
        }

        proptest! {
            #[test]
            fn print_then_parse_is_identity(f in field().prop_flat_map(poly)) {
                let back = parse_polynomial(f.ring(), &f.to_string()).unwrap();
                prop_assert_eq!(back, f);
            }

            #[test]
            fn homogenize_then_specialize_is_identity(f in field().prop_flat_map(poly)) {
                let ext = f.ring().extend("y", 3);
                let h = f.multi_homogenize(&ext);
                prop_assert_eq!(h.specialize_to_one(f.ring(), &[0, 1, 2]), f.clone());
                // x_i + y_i degree is constant across the terms
                for i in 0..3 {
                    let d: Vec<u32> = h.terms().iter().map(|t| t.monomial.exponent(i) + t.monomial.exponent(i + 3)).collect();
                    prop_assert!(d.windows(2).all(|w| w[0] == w[1]));
                }
            }

            #[test]
            fn ring_axioms((f, g, h) in triple()) {
                prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
                prop_assert_eq!(&f * &Polynomial::one(f.ring()), f.clone());
                prop_assert!((&f - &f).is_zero());
                prop_assert_eq!(&f * &g, &g * &f);
                prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            }
        }
    }
}
