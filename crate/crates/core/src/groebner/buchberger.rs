//! Buchberger's algorithm over term lists sorted under an arbitrary order.

use std::cmp::Ordering;

use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// Terms sorted strictly descending under some term order.
pub(crate) type Sorted = Vec<Term>;

pub(crate) fn sort_under(f: &Polynomial, order: &TermOrder) -> Sorted {
    let mut t = f.terms().to_vec();
    if *order != TermOrder::Grevlex {
        t.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
    }
    t
}

/// `p - c·x^m·g`, all sorted under `order`.
pub(crate) fn sub_scaled(p: &[Term], c: &Coeff, m: &Monomial, g: &[Term], order: &TermOrder) -> Sorted {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |t: &Term| Term {
        coeff: -&(&t.coeff * c),
        monomial: t.monomial.mul(m),
    };
    while i < p.len() && j < g.len() {
        let gm = g[j].monomial.mul(m);
        match order.cmp(&p[i].monomial, &gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    coeff: -&(&g[j].coeff * c),
                    monomial: gm,
                });
                j += 1;
            }
            Ordering::Equal => {
                let coeff = &p[i].coeff - &(&g[j].coeff * c);
                if !coeff.is_zero() {
                    out.push(Term { coeff, monomial: gm });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    out.extend(g[j..].iter().map(scaled));
    out
}

pub(crate) fn make_monic(p: &mut Sorted) {
    if let Some(lead) = p.first() {
        if lead.coeff.is_one() {
            return;
        }
        let inv = lead.coeff.inv().expect("nonzero lead");
        for t in p.iter_mut() {
            t.coeff = &t.coeff * &inv;
        }
    }
}

/// Fully reduces `p` modulo the monic reducers `basis[k]` for `k` in `use_idx`.
pub(crate) fn reduce(mut p: Sorted, basis: &[Sorted], use_idx: &[usize], order: &TermOrder) -> Sorted {
    let mut rem: Sorted = Vec::new();
    while !p.is_empty() {
        let lead = &p[0];
        let hit = use_idx
            .iter()
            .map(|&k| &basis[k])
            .find(|g| g[0].monomial.divides(&lead.monomial));
        match hit {
            Some(g) => {
                debug_assert!(g[0].coeff.is_one());
                let m = lead.monomial.checked_div(&g[0].monomial).expect("divides");
                let c = lead.coeff.clone();
                p = sub_scaled(&p, &c, &m, g, order);
            }
            None => {
                rem.push(p.remove(0));
            }
        }
    }
    rem
}

fn s_polynomial(f: &[Term], g: &[Term], order: &TermOrder) -> Sorted {
    // both monic
    let lcm = f[0].monomial.lcm(&g[0].monomial);
    let mf = lcm.checked_div(&f[0].monomial).expect("lcm");
    let mg = lcm.checked_div(&g[0].monomial).expect("lcm");
    let one = f[0].coeff.field().one();
    let fm: Sorted = f[1..]
        .iter()
        .map(|t| Term {
            coeff: t.coeff.clone(),
            monomial: t.monomial.mul(&mf),
        })
        .collect();
    sub_scaled(&fm, &one, &mg, &g[1..], order)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'o> {
    order: &'o TermOrder,
    polys: Vec<Sorted>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lead(&self, k: usize) -> &Monomial {
        &self.polys[k][0].monomial
    }

    /// Gebauer–Möller update after adding `polys[h]`.
    fn update(&mut self, h: usize) {
        let lh = self.lead(h).clone();
        let mut c: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, self.lead(g).lcm(&lh)))
            .collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while !c.is_empty() {
            let (g1, l1) = c.remove(0);
            let coprime = self.lead(g1).is_coprime(&lh);
            let dominated = c.iter().chain(d.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                d.push((g1, l1));
            }
        }
        let e: Vec<Pair> = d
            .into_iter()
            .filter(|(g, _)| !self.lead(*g).is_coprime(&lh))
            .map(|(g, lcm)| Pair { i: g, j: h, lcm })
            .collect();
        let mut kept = Vec::with_capacity(self.pairs.len() + e.len());
        for p in self.pairs.drain(..) {
            let li = self.polys[p.i][0].monomial.lcm(&lh);
            let lj = self.polys[p.j][0].monomial.lcm(&lh);
            let drop = lh.divides(&p.lcm) && li != p.lcm && lj != p.lcm;
            if !drop {
                kept.push(p);
            }
        }
        kept.extend(e);
        self.pairs = kept;
        let polys = &self.polys;
        self.active.retain(|&g| !lh.divides(&polys[g][0].monomial));
        self.active.push(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`,
/// as monic term lists sorted descending by leading monomial.
pub(crate) fn reduced_basis(gens: &[Polynomial], order: &TermOrder) -> Vec<Sorted> {
    let mut st = State {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut inputs: Vec<Sorted> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| sort_under(g, order))
        .collect();
    // smaller leads first keeps the initial reductions cheap
    inputs.sort_by(|a, b| order.cmp(&a[0].monomial, &b[0].monomial));
    for f in inputs {
        let mut r = reduce(f, &st.polys, &st.active, order);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        if r[0].monomial.is_one() {
            return vec![r];
        }
        st.polys.push(r);
        let h = st.polys.len() - 1;
        st.update(h);
    }
    while let Some(pair) = st.next_pair() {
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j], order);
        let mut r = reduce(s, &st.polys, &st.active, order);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        if r[0].monomial.is_one() {
            return vec![r];
        }
        st.polys.push(r);
        let h = st.polys.len() - 1;
        st.update(h);
    }
    interreduce(st.active.iter().map(|&k| st.polys[k].clone()).collect(), order)
}

/// Minimalizes and tail-reduces a Gröbner basis.
pub(crate) fn interreduce(mut basis: Vec<Sorted>, order: &TermOrder) -> Vec<Sorted> {
    basis.sort_by(|a, b| order.cmp(&a[0].monomial, &b[0].monomial));
    let mut minimal: Vec<Sorted> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| m[0].monomial.divides(&g[0].monomial)) {
            minimal.push(g);
        }
    }
    let n = minimal.len();
    let mut out: Vec<Sorted> = Vec::with_capacity(n);
    for k in 0..n {
        let others: Vec<usize> = (0..n).filter(|&j| j != k).collect();
        let g = &minimal[k];
        let tail = reduce(g[1..].to_vec(), &minimal, &others, order);
        let mut r = Vec::with_capacity(tail.len() + 1);
        r.push(g[0].clone());
        r.extend(tail);
        make_monic(&mut r);
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(&b[0].monomial, &a[0].monomial));
    out
}

pub(crate) fn to_polynomial(ring: &Ring, t: &Sorted) -> Polynomial {
    Polynomial::from_terms(ring, t.clone())
}
