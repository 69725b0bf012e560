//! Extended Buchberger (grevlex) that tracks how each basis element is
//! built from the original generators, so membership can be certified by
//! explicit cofactors.

use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone)]
struct Tracked {
    p: Polynomial,
    cof: Vec<Polynomial>,
}

impl Tracked {
    fn scale_monic(mut self) -> Tracked {
        if let Some(lead) = self.p.terms().first() {
            let inv = lead.coeff.inv().expect("nonzero lead");
            self.p = self.p.scale(&inv);
            self.cof = self.cof.iter().map(|c| c.scale(&inv)).collect();
        }
        self
    }
}

fn reduce(mut t: Tracked, basis: &[Tracked]) -> Tracked {
    let ring = t.p.ring().clone();
    let mut rem = Polynomial::zero(&ring);
    while let Some(lead) = t.p.terms().first().cloned() {
        match basis
            .iter()
            .find(|g| g.p.terms()[0].monomial.divides(&lead.monomial))
        {
            Some(g) => {
                let gl = &g.p.terms()[0];
                let c = &lead.coeff * &gl.coeff.inv().expect("nonzero");
                let m = lead.monomial.checked_div(&gl.monomial).expect("divides");
                t.p = &t.p - &g.p.mul_term(&c, &m);
                for (a, b) in t.cof.iter_mut().zip(&g.cof) {
                    *a = &*a - &b.mul_term(&c, &m);
                }
            }
            None => {
                let lt = Polynomial::term(&ring, lead.coeff.clone(), lead.monomial.clone());
                rem = &rem + &lt;
                t.p = &t.p - &lt;
            }
        }
    }
    t.p = rem;
    t
}

pub(super) fn lift(ring: &Ring, gens: &[Polynomial], f: &Polynomial) -> Option<Vec<Polynomial>> {
    let k = gens.len();
    let zero = Polynomial::zero(ring);
    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut cof = vec![zero.clone(); k];
        cof[i] = Polynomial::one(ring);
        basis.push(Tracked { p: g.clone(), cof }.scale_monic());
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (li, lj) = (&basis[i].p.terms()[0].monomial, &basis[j].p.terms()[0].monomial);
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let mi = lcm.checked_div(li).expect("lcm");
        let mj = lcm.checked_div(lj).expect("lcm");
        let one = ring.field().one();
        let s = Tracked {
            p: &basis[i].p.mul_term(&one, &mi) - &basis[j].p.mul_term(&one, &mj),
            cof: basis[i]
                .cof
                .iter()
                .zip(&basis[j].cof)
                .map(|(a, b)| &a.mul_term(&one, &mi) - &b.mul_term(&one, &mj))
                .collect(),
        };
        let r = reduce(s, &basis);
        if r.p.is_zero() {
            continue;
        }
        let r = r.scale_monic();
        let h = basis.len();
        basis.push(r);
        pairs.extend((0..h).map(|i| (i, h)));
    }
    let target = Tracked {
        p: f.clone(),
        cof: vec![zero.clone(); k],
    };
    let r = reduce(target, &basis);
    if !r.p.is_zero() {
        return None;
    }
    // f - sum(q_k g_k) = 0 with the reduction having subtracted multiples,
    // so f = -(tracked cofactors)
    Some(r.cof.iter().map(|c| -c).collect())
}
