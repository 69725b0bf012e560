//! `mono(I)`, the largest monomial ideal inside `I`, computed three
//! independent ways, and `Mono(I)`, the smallest monomial ideal containing
//! `I`.
//!
//! * [`mono_via_gb`] multi-homogenizes the generators against fresh
//!   variables `y_1..y_n`, saturates by `y_1⋯y_n`, and keeps the monomials of
//!   the reduced basis under a `y`-before-`x` elimination order.
//! * [`mono_via_puv`] evaluates `(β) : Mono((β) : I)` for a monomial regular
//!   sequence `β ⊆ I` of length `codim I` (unmixed `I`).
//! * [`mono_oracle`] brute-forces membership of every monomial below the
//!   degree where `I` swallows all of `m^s` (Artinian `I` only).

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{saturation_basis, Ideal};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::monomial_ideal::{sort_monomials, MonomialIdeal};
use crate::parse::parse_source_with_field;
use crate::poly::Polynomial;

/// Default degree ceiling for the Artinian searches.
pub const DEFAULT_DEGREE_CEILING: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Gb,
    Puv,
    Oracle,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Gb => "gb",
            Method::Puv => "puv",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "gb" => Ok(Method::Gb),
            "puv" => Ok(Method::Puv),
            "oracle" => Ok(Method::Oracle),
            _ => Err(format!("unknown method `{s}` (expected gb, puv or oracle)")),
        }
    }
}

/// A membership proof `u = sum c_i f_i` over the generators `f_i` of `I`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub monomial: Monomial,
    pub cofactors: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct MonoResult {
    pub mono: MonomialIdeal,
    pub method: Method,
    pub field: FieldSpec,
    pub certificate: Option<Vec<Certificate>>,
}

impl MonoResult {
    /// Wraps a computed ideal after checking that every generator lies in `I`.
    fn checked(ideal: &Ideal, mono: MonomialIdeal, method: Method) -> Result<Self> {
        if let Some(g) = mono.gens().iter().find(|g| !ideal.contains_monomial(g)) {
            return Err(Error::Disagreement(format!(
                "{method}: generator {} is not in the ideal",
                g.display(ideal.ring().var_names())
            )));
        }
        Ok(MonoResult {
            mono,
            method,
            field: ideal.ring().field(),
            certificate: None,
        })
    }

    /// Attaches explicit cofactors for every generator.
    pub fn certify(mut self, ideal: &Ideal) -> Result<Self> {
        let mut certs = Vec::with_capacity(self.mono.gens().len());
        for g in self.mono.gens() {
            let f = Polynomial::from_monomial(ideal.ring(), g.clone());
            let cofactors = ideal.lift(&f).ok_or_else(|| {
                Error::Disagreement(format!("no cofactors for {}", g.display(ideal.ring().var_names())))
            })?;
            certs.push(Certificate {
                monomial: g.clone(),
                cofactors,
            });
        }
        self.certificate = Some(certs);
        Ok(self)
    }

    /// Re-expands every certificate against the generators of `ideal`.
    pub fn verify_certificate(&self, ideal: &Ideal) -> bool {
        let Some(certs) = &self.certificate else {
            return false;
        };
        certs.iter().all(|c| {
            let mut sum = Polynomial::zero(ideal.ring());
            for (q, f) in c.cofactors.iter().zip(ideal.gens()) {
                sum = &sum + &(q * f);
            }
            sum == Polynomial::from_monomial(ideal.ring(), c.monomial.clone())
        })
    }
}

/// `mono(I)` through saturation of the multi-homogenized generators.
pub fn mono_via_gb(ideal: &Ideal) -> Result<MonoResult> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let gens: Vec<&Polynomial> = ideal.gens().iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return MonoResult::checked(ideal, MonomialIdeal::zero(ring), Method::Gb);
    }
    let ext = ring.extend("y", n);
    let homog: Vec<Polynomial> = gens.iter().map(|g| g.multi_homogenize(&ext)).collect();
    let ys: Vec<usize> = (n..2 * n).collect();
    let xs: Vec<usize> = (0..n).collect();
    let prod_y = Monomial::new((0..2 * n).map(|i| u32::from(i >= n)));
    let basis = saturation_basis(&ext, &homog, &prod_y, &[ys, xs.clone()]);
    let monomials = basis
        .iter()
        .filter_map(|g| g.as_monomial())
        .map(|m| Monomial::new(xs.iter().map(|&i| m.exponent(i))));
    MonoResult::checked(ideal, MonomialIdeal::new(ring, monomials), Method::Gb)
}

/// `Mono(I)`: the monomial ideal generated by every term of every generator.
pub fn mono_upper(ideal: &Ideal) -> MonomialIdeal {
    MonomialIdeal::new(
        ideal.ring(),
        ideal
            .gens()
            .iter()
            .flat_map(|g| g.terms().iter().map(|t| t.monomial.clone())),
    )
}

/// Least `a` with `x_var^a ∈ I`, searched up to `ceiling`.
pub fn least_pure_power(ideal: &Ideal, var: usize, ceiling: u32) -> Option<u32> {
    let n = ideal.ring().nvars();
    let member = |a: u32| ideal.contains_monomial(&Monomial::var_power(n, var, a));
    let known = ideal
        .gens()
        .iter()
        .filter_map(|g| g.as_monomial())
        .filter(|m| m.pure_power_var() == Some(var) || m.is_one())
        .map(|m| m.exponent(var))
        .min();
    let mut hi = match known {
        Some(a) => a,
        None => {
            let mut a = 1;
            loop {
                if member(a) {
                    break a;
                }
                if a >= ceiling {
                    return None;
                }
                a = (a * 2).min(ceiling);
            }
        }
    };
    if hi == 0 {
        return Some(0);
    }
    let mut lo = 0; // x^lo ∉ I unless I is the unit ideal
    if member(0) {
        return Some(0);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if member(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// The pure powers `x_i^{a_i}` of least exponent in an Artinian `I`.
pub fn auto_beta(ideal: &Ideal, ceiling: u32) -> Result<Vec<Monomial>> {
    let n = ideal.ring().nvars();
    (0..n)
        .map(|i| {
            least_pure_power(ideal, i, ceiling)
                .map(|a| Monomial::var_power(n, i, a))
                .ok_or_else(|| {
                    Error::NotArtinian(format!(
                        "no power of {} up to degree {ceiling} lies in the ideal",
                        ideal.ring().var_names()[i]
                    ))
                })
        })
        .collect()
}

/// `mono(I) = (β) : Mono((β) : I)`. With `beta = None` the pure powers of
/// least degree are used, which requires `I` Artinian. A caller-supplied
/// `beta` must lie in `I` and have pairwise disjoint supports; unmixedness
/// of `I` and `|β| = codim I` are the caller's responsibility.
pub fn mono_via_puv(ideal: &Ideal, beta: Option<&[Monomial]>, ceiling: u32) -> Result<MonoResult> {
    let ring = ideal.ring();
    let beta: Vec<Monomial> = match beta {
        Some(b) => b.to_vec(),
        None => {
            if !ideal.is_artinian() {
                return Err(Error::NotArtinian(
                    "PUV needs an explicit regular sequence for non-Artinian input".into(),
                ));
            }
            auto_beta(ideal, ceiling)?
        }
    };
    if beta.iter().any(|b| b.is_one()) {
        // I is the unit ideal
        return MonoResult::checked(ideal, MonomialIdeal::unit(ring), Method::Puv);
    }
    for (i, b) in beta.iter().enumerate() {
        if !ideal.contains_monomial(b) {
            return Err(Error::Precondition(format!(
                "{} is not in the ideal",
                b.display(ring.var_names())
            )));
        }
        if beta[..i].iter().any(|c| !c.is_coprime(b)) {
            return Err(Error::Precondition(
                "beta is not a regular sequence (supports overlap)".into(),
            ));
        }
    }
    let beta_ideal = MonomialIdeal::new(ring, beta);
    let inner = beta_ideal.to_ideal().colon_ideal(ideal).trimmed();
    let upper = mono_upper(&inner);
    MonoResult::checked(ideal, beta_ideal.colon_ideal(&upper), Method::Puv)
}

/// Brute-force `mono(I)` for Artinian `I`: find the least `s` with every
/// degree-`s` monomial in `I`, then collect the lower-degree monomials of
/// `I` alongside the generators of `m^s`.
pub fn mono_oracle(ideal: &Ideal, ceiling: u32) -> Result<MonoResult> {
    let ring = ideal.ring();
    let n = ring.nvars();
    for i in 0..n {
        if !ideal.contains_monomial(&Monomial::var_power(n, i, ceiling)) {
            return Err(Error::NotArtinian(format!(
                "{}^{ceiling} is not in the ideal (degree ceiling {ceiling})",
                ring.var_names()[i]
            )));
        }
    }
    let limit = n as u32 * (ceiling - 1) + 1;
    let mut found: Vec<Monomial> = Vec::new();
    for s in 0..=limit {
        let degree_s = monomials_of_degree(n, s);
        let members: Vec<Monomial> = degree_s
            .iter()
            .filter(|m| ideal.contains_monomial(m))
            .cloned()
            .collect();
        if members.len() == degree_s.len() {
            found.extend(degree_s);
            return MonoResult::checked(ideal, MonomialIdeal::new(ring, found), Method::Oracle);
        }
        found.extend(members);
    }
    unreachable!("every pure power is a member, so m^limit lies in the ideal")
}

pub fn mono(ideal: &Ideal, method: Method, ceiling: u32) -> Result<MonoResult> {
    match method {
        Method::Gb => mono_via_gb(ideal),
        Method::Puv => mono_via_puv(ideal, None, ceiling),
        Method::Oracle => mono_oracle(ideal, ceiling),
    }
}

/// Runs all three methods on an Artinian ideal and insists they agree.
pub fn mono_cross_checked(ideal: &Ideal, ceiling: u32) -> Result<MonomialIdeal> {
    let gb = mono_via_gb(ideal)?;
    let puv = mono_via_puv(ideal, None, ceiling)?;
    let oracle = mono_oracle(ideal, ceiling)?;
    for other in [&puv, &oracle] {
        if other.mono != gb.mono {
            return Err(Error::Disagreement(format!(
                "gb gives {} but {} gives {}",
                gb.mono, other.method, other.mono
            )));
        }
    }
    Ok(gb.mono)
}

/// One row of a characteristic scan.
#[derive(Clone, Debug)]
pub struct FieldResult {
    pub field: FieldSpec,
    pub result: MonoResult,
}

/// A generator seen in some field, with the fields whose `mono` contains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPresence {
    pub monomial: Monomial,
    pub present_in: Vec<FieldSpec>,
    pub absent_in: Vec<FieldSpec>,
}

#[derive(Clone, Debug)]
pub struct CharScanReport {
    pub ideal_name: String,
    pub var_names: Vec<String>,
    pub rows: Vec<FieldResult>,
}

impl CharScanReport {
    pub fn result_for(&self, field: FieldSpec) -> Option<&MonoResult> {
        self.rows.iter().find(|r| r.field == field).map(|r| &r.result)
    }

    /// Every minimal generator from any field, with membership of that
    /// monomial in each field's `mono`.
    pub fn presence(&self) -> Vec<GeneratorPresence> {
        let mut all: Vec<Monomial> = Vec::new();
        for row in &self.rows {
            for g in row.result.mono.gens() {
                if !all.contains(g) {
                    all.push(g.clone());
                }
            }
        }
        sort_monomials(&mut all);
        all.into_iter()
            .map(|m| {
                let (present, absent): (Vec<&FieldResult>, Vec<&FieldResult>) =
                    self.rows.iter().partition(|r| r.result.mono.contains(&m));
                GeneratorPresence {
                    monomial: m,
                    present_in: present.iter().map(|r| r.field).collect(),
                    absent_in: absent.iter().map(|r| r.field).collect(),
                }
            })
            .collect()
    }

    /// Generators not contained in every field's `mono`.
    pub fn differences(&self) -> Vec<GeneratorPresence> {
        self.presence()
            .into_iter()
            .filter(|p| !p.absent_in.is_empty())
            .collect()
    }

    pub fn uniform(&self) -> bool {
        self.differences().is_empty()
    }
}

/// Computes `mono` of the named ideal of an integer-coefficient source
/// over each requested prime field (and `QQ` first if asked).
pub fn char_scan(source: &str, ideal_name: &str, primes: &[u64], include_rationals: bool) -> Result<CharScanReport> {
    let mut fields = Vec::new();
    if include_rationals {
        fields.push(FieldSpec::Rationals);
    }
    for &p in primes {
        let f = FieldSpec::prime(p)?;
        if !fields.contains(&f) {
            fields.push(f);
        }
    }
    let over_q = parse_source_with_field(source, Some(FieldSpec::Rationals))?;
    let ideal = over_q
        .ideal(ideal_name)
        .ok_or_else(|| Error::Precondition(format!("no ideal named `{ideal_name}`")))?;
    for g in ideal.gens() {
        if g.terms().iter().any(|t| !t.coeff.to_rational().is_integer()) {
            return Err(Error::Precondition(format!("{g} has non-integer coefficients")));
        }
    }
    let rows = fields
        .par_iter()
        .map(|&field| -> Result<FieldResult> {
            let src = parse_source_with_field(source, Some(field))?;
            let ideal = src.ideal(ideal_name).expect("present over QQ");
            Ok(FieldResult {
                field,
                result: mono_via_gb(ideal)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharScanReport {
        ideal_name: ideal_name.to_string(),
        var_names: over_q.ring.var_names().to_vec(),
        rows,
    })
}
