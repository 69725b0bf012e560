//! Monomial ideals and their combinatorics: colons, intersections,
//! radicals, standard monomials, socles, irreducible decompositions, and
//! the equal-colon witness search.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::groebner::Ideal;
use crate::linalg;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A monomial ideal, stored by its minimal generators sorted
/// grevlex-descending.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.nvars() == other.ring.nvars() && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

fn minimalize(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| TermOrder::Grevlex.cmp(b, a))
    });
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| TermOrder::Grevlex.cmp(b, a));
    out
}

/// Sorts a monomial list grevlex-descending.
pub fn sort_monomials(ms: &mut [Monomial]) {
    ms.sort_by(|a, b| TermOrder::Grevlex.cmp(b, a));
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            assert_eq!(g.nvars(), ring.nvars());
        }
        MonomialIdeal {
            ring: ring.clone(),
            gens: minimalize(gens),
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal::new(ring, [])
    }

    pub fn unit(ring: &Ring) -> Self {
        MonomialIdeal::new(ring, [Monomial::one(ring.nvars())])
    }

    /// `m = (x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Self {
        Self::pure_powers(ring, &vec![1; ring.nvars()])
    }

    /// `m^d`.
    pub fn maximal_power(ring: &Ring, d: u32) -> Self {
        MonomialIdeal::new(ring, monomials_of_degree(ring.nvars(), d))
    }

    /// `m^b = (x_1^b_1, ..., x_n^b_n)`.
    pub fn pure_powers(ring: &Ring, b: &[u32]) -> Self {
        assert_eq!(b.len(), ring.nvars());
        let n = ring.nvars();
        MonomialIdeal::new(ring, b.iter().enumerate().map(|(i, &e)| Monomial::var_power(n, i, e)))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::from_monomials(&self.ring, self.gens.iter().cloned())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        MonomialIdeal::new(&self.ring, gens)
    }

    /// `u·M`.
    pub fn times_monomial(&self, u: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.gens.iter().map(|g| g.mul(u)))
    }

    /// `M : u`, generated by `lcm(g, u) / u`.
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.gens.iter().map(|g| g.quotient_by_gcd(u)))
    }

    /// `M : N = ∩_{n} M : n` over generators of `N`; `(1)` if `N = 0`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> MonomialIdeal {
        other
            .gens
            .iter()
            .map(|u| self.colon(u))
            .reduce(|a, b| a.intersect(&b))
            .unwrap_or_else(|| MonomialIdeal::unit(&self.ring))
    }

    /// Pairwise lcms of generators, minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(&self.ring, gens)
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.gens.iter().map(|g| g.squarefree_part()))
    }

    /// For each variable, the least `e` with `x_i^e ∈ M`, if any.
    pub fn pure_power_exponents(&self) -> Vec<Option<u32>> {
        (0..self.nvars())
            .map(|i| {
                self.gens
                    .iter()
                    .filter(|g| g.is_one() || g.pure_power_var() == Some(i))
                    .map(|g| g.exponent(i))
                    .min()
            })
            .collect()
    }

    pub fn is_artinian(&self) -> bool {
        self.pure_power_exponents().iter().all(|e| e.is_some())
    }

    fn require_artinian(&self) -> Result<()> {
        if self.is_artinian() {
            Ok(())
        } else {
            Err(Error::NotArtinian(format!("{self} has no pure power of some variable")))
        }
    }

    /// Degree-`d` monomials outside `M`, grevlex-descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = monomials_of_degree(self.nvars(), d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect();
        sort_monomials(&mut out);
        out
    }

    /// Dimension of `(R/M)_d` for `d = 0..=max_degree`.
    pub fn hilbert_function(&self, max_degree: u32) -> Vec<usize> {
        (0..=max_degree).map(|d| self.standard_monomials(d).len()).collect()
    }

    /// Least `s` with `m^s ⊆ M` (one more than the top standard degree).
    pub fn power_gap(&self) -> Result<u32> {
        self.require_artinian()?;
        if self.is_unit() {
            return Ok(0);
        }
        // every standard monomial lies in the box below the pure powers
        let bound: u32 = self
            .pure_power_exponents()
            .iter()
            .map(|e| e.expect("artinian") - 1)
            .sum();
        let top = (0..=bound)
            .rev()
            .find(|&d| !self.standard_monomials(d).is_empty())
            .expect("1 is standard in a proper ideal");
        Ok(top + 1)
    }

    /// All standard monomials of an Artinian `M`, by increasing degree.
    pub fn all_standard_monomials(&self) -> Result<Vec<Monomial>> {
        let gap = self.power_gap()?;
        Ok((0..gap).flat_map(|d| self.standard_monomials(d)).collect())
    }

    /// Standard monomials `u` with `x_i·u ∈ M` for every `i`.
    pub fn socle_monomials(&self) -> Result<Vec<Monomial>> {
        let n = self.nvars();
        let mut out: Vec<Monomial> = self
            .all_standard_monomials()?
            .into_iter()
            .filter(|u| (0..n).all(|i| self.contains(&u.times_var(i))))
            .collect();
        sort_monomials(&mut out);
        Ok(out)
    }

    /// Exponent vectors `b + 1` of the irreducible components `m^(b+1)`,
    /// one per socle monomial `x^b`.
    pub fn irreducible_decomposition(&self) -> Result<Vec<Monomial>> {
        Ok(self
            .socle_monomials()?
            .iter()
            .map(|b| Monomial::new(b.exponents().iter().map(|e| e + 1)))
            .collect())
    }

    /// Gorenstein test for an Artinian `M`: one socle monomial, checked
    /// against the pure-power form `m^b`.
    pub fn is_gorenstein(&self) -> Result<bool> {
        let by_socle = self.socle_monomials()?.len() == 1;
        let by_form = self.gens.len() == self.nvars() && self.gens.iter().all(|g| g.pure_power_var().is_some());
        if by_socle != by_form {
            return Err(Error::Disagreement(format!(
                "Gorenstein tests disagree on {self}: socle says {by_socle}, generator form says {by_form}"
            )));
        }
        Ok(by_socle)
    }

    /// Every variable dividing a minimal generator has a pure power in `M`.
    pub fn is_primary(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        let pure = self.pure_power_exponents();
        self.gens
            .iter()
            .flat_map(|g| g.support())
            .all(|v| pure[v].is_some())
    }

    /// Minimal generators are variables.
    pub fn is_prime(&self) -> bool {
        !self.is_unit() && self.gens.iter().all(|g| g.degree() == 1)
    }

    /// Same-degree standard monomials with equal colon ideals, grouped by
    /// colon. Only classes with at least two members are returned.
    pub fn equal_colon_witnesses(&self, max_degree: Option<u32>) -> Result<Vec<WitnessClass>> {
        let cap = match max_degree {
            Some(d) => d,
            None => match self.power_gap()? {
                0 => return Ok(Vec::new()),
                s => s - 1,
            },
        };
        let mut classes = Vec::new();
        for d in 0..=cap {
            let mut groups: BTreeMap<Vec<Vec<u32>>, Vec<Monomial>> = BTreeMap::new();
            for u in self.standard_monomials(d) {
                let key: Vec<Vec<u32>> = self.colon(&u).gens.iter().map(|g| g.exponents().to_vec()).collect();
                groups.entry(key).or_default().push(u);
            }
            let mut found: Vec<WitnessClass> = groups
                .into_values()
                .filter(|members| members.len() >= 2)
                .map(|members| WitnessClass {
                    degree: d,
                    colon: self.colon(&members[0]),
                    members,
                })
                .collect();
            found.sort_by(|a, b| TermOrder::Grevlex.cmp(&b.members[0], &a.members[0]));
            classes.extend(found);
        }
        Ok(classes)
    }

    pub fn display_gens(&self) -> Vec<String> {
        let names = self.ring.var_names();
        self.gens.iter().map(|g| g.display(names).to_string()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("ideal(0)");
        }
        write!(f, "ideal({})", self.display_gens().join(", "))
    }
}

/// Standard monomials of one degree sharing the colon ideal `M : u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessClass {
    pub degree: u32,
    pub colon: MonomialIdeal,
    pub members: Vec<Monomial>,
}

impl WitnessClass {
    /// All unordered pairs within the class.
    pub fn pairs(&self) -> Vec<(Monomial, Monomial)> {
        let mut out = Vec::new();
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                out.push((self.members[i].clone(), self.members[j].clone()));
            }
        }
        out
    }
}

/// Linear combinations `f_j = sum_i a_ij u_i` of the socle monomials `u_i`
/// of a monomial ideal, as an `r × s` coefficient matrix.
#[derive(Clone, Debug)]
pub struct SocleMatrix {
    pub socle_monomials: Vec<Monomial>,
    /// Row `i`, column `j` holds `a_ij`.
    pub coeffs: Vec<Vec<Coeff>>,
    pub field: FieldSpec,
}

impl SocleMatrix {
    /// Reads off the coefficient matrix of polynomials supported on the
    /// socle monomials of `m`.
    pub fn from_polynomials(m: &MonomialIdeal, fs: &[Polynomial]) -> Result<SocleMatrix> {
        let socle = m.socle_monomials()?;
        let field = m.ring().field();
        let mut coeffs = vec![vec![field.zero(); fs.len()]; socle.len()];
        for (j, f) in fs.iter().enumerate() {
            for t in f.terms() {
                let i = socle.iter().position(|u| *u == t.monomial).ok_or_else(|| {
                    Error::Precondition(format!("{f} is not a combination of socle monomials"))
                })?;
                coeffs[i][j] = t.coeff.clone();
            }
        }
        Ok(SocleMatrix {
            socle_monomials: socle,
            coeffs,
            field,
        })
    }

    pub fn ncols(&self) -> usize {
        self.coeffs.first().map_or(0, |r| r.len())
    }

    /// True iff no standard basis vector `e_i` lies in the column span,
    /// i.e. adjoining the `f_j` to `M` adds no monomial.
    pub fn test(&self) -> bool {
        let r = self.socle_monomials.len();
        (0..r).all(|i| {
            let e: Vec<Coeff> = (0..r)
                .map(|k| if k == i { self.field.one() } else { self.field.zero() })
                .collect();
            !linalg::in_column_span(&self.coeffs, &e, self.field)
        })
    }
}

/// Is the Artinian monomial subideal `m ⊆ ideal` all of `mono(ideal)`?
/// Decided by checking that no socle monomial of `m` lies in `ideal`.
pub fn mono_subideal_criterion(ideal: &Ideal, m: &MonomialIdeal) -> Result<bool> {
    if let Some(g) = m.gens().iter().find(|g| !ideal.contains_monomial(g)) {
        return Err(Error::Precondition(format!(
            "{} is not contained in the ideal",
            g.display(m.ring().var_names())
        )));
    }
    Ok(!m.socle_monomials()?.iter().any(|u| ideal.contains_monomial(u)))
}

#[cfg(test)]
mod tests;
