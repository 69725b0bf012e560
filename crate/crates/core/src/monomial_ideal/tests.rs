use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::parse::parse_polynomial;
use crate::ring::RingContext;

fn ring(names: &[&str]) -> Ring {
    RingContext::with_names(FieldSpec::Rationals, names).unwrap()
}

fn mono(r: &Ring, s: &str) -> Monomial {
    parse_polynomial(r, s).unwrap().as_monomial().unwrap().clone()
}

fn mi(r: &Ring, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::new(r, gens.iter().map(|s| mono(r, s)))
}

fn names(r: &Ring, ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| m.display(r.var_names()).to_string()).collect()
}

#[test]
fn colon_examples() {
    let r = ring(&["x", "y", "z"]);
    let m = mi(&r, &["x^2", "x*y", "x*z", "y^2", "z^2"]);
    assert_eq!(m.colon(&mono(&r, "x")), MonomialIdeal::maximal(&r));
    assert_eq!(m.colon(&mono(&r, "y")), mi(&r, &["x", "y", "z^2"]));
    assert_eq!(m.colon(&Monomial::one(3)), m);
}

#[test]
fn intersection_and_radical_examples() {
    let r = ring(&["x", "y"]);
    assert_eq!(mi(&r, &["x^2"]).intersect(&mi(&r, &["y"])), mi(&r, &["x^2*y"]));
    assert_eq!(mi(&r, &["x^2*y"]).radical(), mi(&r, &["x*y"]));
    assert_eq!(mi(&r, &["x^2", "x*y", "y^3"]).radical(), mi(&r, &["x", "y"]));
    assert_eq!(
        mi(&r, &["x^2", "y"]).intersect(&mi(&r, &["x", "y^2"])),
        mi(&r, &["x^2", "x*y", "y^2"])
    );
}

#[test]
fn artinian_and_power_gap() {
    let r = ring(&["x", "y"]);
    let m = mi(&r, &["x^2", "y^3"]);
    assert!(m.is_artinian());
    // x*y^2 is a standard monomial of degree 3; every degree-4 monomial is in M
    assert_eq!(m.power_gap().unwrap(), 4);
    assert!(!mi(&r, &["x"]).is_artinian());
    assert!(matches!(mi(&r, &["x"]).power_gap(), Err(Error::NotArtinian(_))));
    assert_eq!(MonomialIdeal::maximal(&r).power_gap().unwrap(), 1);
}

#[test]
fn standard_monomials_and_hilbert_function() {
    let r = ring(&["x", "y"]);
    let m = MonomialIdeal::maximal_power(&r, 2);
    assert_eq!(names(&r, &m.standard_monomials(1)), ["x", "y"]);
    assert_eq!(m.hilbert_function(3), [1, 2, 0, 0]);

    let r3 = ring(&["x", "y", "z"]);
    let m = mi(&r3, &["x^2", "y^2"])
        .product(&MonomialIdeal::maximal(&r3))
        .sum(&mi(&r3, &["z^3"]));
    assert_eq!(m.hilbert_function(5), [1, 3, 6, 3, 1, 0]);
    assert!(MonomialIdeal::maximal(&r3).standard_monomials(2).is_empty());
}

#[test]
fn socle_examples() {
    let r = ring(&["x", "y", "z"]);
    let m = mi(&r, &["x^2", "x*y", "x*z", "y^2", "z^2"]);
    assert_eq!(names(&r, &m.socle_monomials().unwrap()), ["y*z", "x"]);

    let r4 = ring(&["x", "y", "z", "w"]);
    let mb = MonomialIdeal::pure_powers(&r4, &[2, 2, 3, 3]);
    assert_eq!(names(&r4, &mb.socle_monomials().unwrap()), ["x*y*z^2*w^2"]);
    assert_eq!(names(&r, &MonomialIdeal::maximal(&r).socle_monomials().unwrap()), ["1"]);
    assert!(mi(&r, &["x", "y"]).socle_monomials().is_err());
}

fn components(r: &Ring, m: &MonomialIdeal) -> Vec<MonomialIdeal> {
    m.irreducible_decomposition()
        .unwrap()
        .iter()
        .map(|b| MonomialIdeal::pure_powers(r, b.exponents()))
        .collect()
}

#[test]
fn irreducible_decomposition_examples() {
    let r = ring(&["x", "y"]);
    let m = MonomialIdeal::maximal_power(&r, 2);
    // socle {x, y}: components (x^2, y) and (x, y^2)
    let comps = components(&r, &m);
    assert_eq!(comps.len(), 2);
    assert!(comps.contains(&mi(&r, &["x", "y^2"])));
    assert!(comps.contains(&mi(&r, &["x^2", "y"])));
    assert_eq!(comps[0].intersect(&comps[1]), m);

    let mb = mi(&r, &["x^3", "y^2"]);
    assert_eq!(components(&r, &mb), vec![mb.clone()]);

    let r3 = ring(&["x", "y", "z"]);
    let m = mi(&r3, &["x^2", "x*y", "x*z", "y^2", "z^2"]);
    let comps = components(&r3, &m);
    assert_eq!(comps.len(), 2);
    assert!(comps.contains(&mi(&r3, &["x^2", "y", "z"])));
    assert!(comps.contains(&mi(&r3, &["x", "y^2", "z^2"])));
    assert_eq!(comps[0].intersect(&comps[1]), m);
}

#[test]
fn gorenstein_primary_prime() {
    let r = ring(&["x", "y", "z"]);
    let r2 = ring(&["x", "y"]);
    assert!(mi(&r2, &["x^2", "y^3"]).is_gorenstein().unwrap());
    assert!(!MonomialIdeal::maximal_power(&r2, 2).is_gorenstein().unwrap());
    assert!(!mi(&r2, &["x^2", "x*y"]).is_primary());
    assert!(mi(&r, &["x", "z"]).is_prime());
    assert!(mi(&r, &["x^2", "x*z", "z^4"]).is_primary());
    assert!(!mi(&r, &["x^2", "z"]).is_prime());
    assert!(!MonomialIdeal::unit(&r).is_prime());
}

#[test]
fn witness_examples() {
    let r = ring(&["x", "y", "z"]);
    let m = mi(&r, &["x^2", "x*y", "x*z", "y^2", "z^2"]);
    assert!(m.equal_colon_witnesses(None).unwrap().is_empty());
    assert!(MonomialIdeal::pure_powers(&r, &[2, 3, 2])
        .equal_colon_witnesses(None)
        .unwrap()
        .is_empty());

    let r2 = ring(&["x", "y"]);
    let classes = MonomialIdeal::maximal_power(&r2, 2).equal_colon_witnesses(None).unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].degree, 1);
    assert_eq!(classes[0].colon, MonomialIdeal::maximal(&r2));
    assert_eq!(classes[0].pairs(), vec![(mono(&r2, "x"), mono(&r2, "y"))]);
}

#[test]
fn socle_matrix_examples() {
    let q = FieldSpec::Rationals;
    let identity = SocleMatrix {
        socle_monomials: vec![Monomial::new([1, 0]), Monomial::new([0, 1])],
        coeffs: vec![vec![q.one(), q.zero()], vec![q.zero(), q.one()]],
        field: q,
    };
    assert!(!identity.test());
    let ones = SocleMatrix {
        socle_monomials: identity.socle_monomials.clone(),
        coeffs: vec![vec![q.one()], vec![q.one()]],
        field: q,
    };
    assert!(ones.test());
}

#[test]
fn socle_matrix_from_level_ideal() {
    // m^b + (x^(b-1)) with b = (2,2,3,3); the socle is x^(b-1)/x_i
    let r = ring(&["x", "y", "z", "w"]);
    let m = MonomialIdeal::pure_powers(&r, &[2, 2, 3, 3]).sum(&mi(&r, &["x*y*z^2*w^2"]));
    let s: Vec<Polynomial> = ["y*z^2*w^2", "x*z^2*w^2", "x*y*z*w^2", "x*y*z^2*w"]
        .iter()
        .map(|t| parse_polynomial(&r, t).unwrap())
        .collect();
    let fs: Vec<Polynomial> = s[1..].iter().map(|si| &s[0] - si).collect();
    let sm = SocleMatrix::from_polynomials(&m, &fs).unwrap();
    assert_eq!(sm.socle_monomials.len(), 4);
    assert_eq!(sm.ncols(), 3);
    assert!(sm.test());
    // a polynomial off the socle is rejected
    assert!(SocleMatrix::from_polynomials(&m, &[parse_polynomial(&r, "x").unwrap()]).is_err());
}

#[test]
fn subideal_criterion_examples() {
    let r = ring(&["x", "y", "z"]);
    let m = mi(&r, &["x^2", "x*y", "x*z", "y^2", "z^2"]);
    let mut gens = m.to_ideal().gens().to_vec();
    gens.push(parse_polynomial(&r, "x + y*z").unwrap());
    assert!(mono_subideal_criterion(&Ideal::new(&r, gens), &m).unwrap());

    let r2 = ring(&["x", "y"]);
    let m2 = MonomialIdeal::maximal_power(&r2, 2);
    let i = m2.sum(&mi(&r2, &["x"])).to_ideal();
    assert!(!mono_subideal_criterion(&i, &m2).unwrap());
    // M must sit inside I
    assert!(matches!(
        mono_subideal_criterion(&mi(&r2, &["x^3", "y^3"]).to_ideal(), &m2),
        Err(Error::Precondition(_))
    ));
}

fn random_monomial_ideal(rng: &mut ChaCha8Rng, r: &Ring, artinian: bool) -> MonomialIdeal {
    let n = r.nvars();
    let mut gens: Vec<Monomial> = (0..rng.gen_range(1..=4))
        .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=3))))
        .filter(|m| !m.is_one())
        .collect();
    if artinian {
        for i in 0..n {
            gens.push(Monomial::var_power(n, i, rng.gen_range(1..=4)));
        }
    }
    if gens.is_empty() {
        gens.push(Monomial::var_power(n, 0, 1));
    }
    MonomialIdeal::new(r, gens)
}

#[test]
fn combinatorial_ops_agree_with_groebner() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    for n in 1..=3 {
        let r = ring(&["x", "y", "z"][..n]);
        for _ in 0..40 {
            let a = random_monomial_ideal(&mut rng, &r, false);
            let b = random_monomial_ideal(&mut rng, &r, false);
            let u = Monomial::new((0..n).map(|_| rng.gen_range(0..=2)));
            let o = TermOrder::Grevlex;
            let inter = a.to_ideal().intersect(&b.to_ideal());
            assert_eq!(inter.initial_ideal(&o), a.intersect(&b));
            let col = a
                .to_ideal()
                .colon(&Polynomial::from_monomial(&r, u.clone()))
                .unwrap();
            assert_eq!(col.initial_ideal(&o), a.colon(&u));
            assert_eq!(a.to_ideal().colon_ideal(&b.to_ideal()).initial_ideal(&o), a.colon_ideal(&b));
            checked += 1;
        }
    }
    assert!(checked >= 100);
}

#[test]
fn radical_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let r = ring(&["x", "y", "z"]);
    for _ in 0..50 {
        let a = random_monomial_ideal(&mut rng, &r, false);
        let b = random_monomial_ideal(&mut rng, &r, false);
        assert_eq!(a.radical().radical(), a.radical());
        assert_eq!(a.intersect(&b).radical(), a.radical().intersect(&b.radical()));
    }
}

#[test]
fn artinian_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in 1..=3 {
        let r = ring(&["x", "y", "z"][..n]);
        let maximal = MonomialIdeal::maximal(&r);
        for _ in 0..30 {
            let m = random_monomial_ideal(&mut rng, &r, true);
            // decomposition soundness
            let comps = components(&r, &m);
            let back = comps.iter().skip(1).fold(comps[0].clone(), |acc, c| acc.intersect(c));
            assert_eq!(back, m);
            // both Gorenstein tests run inside and must agree
            m.is_gorenstein().unwrap();
            // socle monomials are exactly the standard u with M : u = m
            let socle = m.socle_monomials().unwrap();
            for u in m.all_standard_monomials().unwrap() {
                assert_eq!(socle.contains(&u), m.colon(&u) == maximal);
            }
        }
    }
}

#[test]
fn pure_power_ideals_have_no_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let r = ring(&["x", "y", "z", "w"][..n]);
        let b: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=4)).collect();
        let m = MonomialIdeal::pure_powers(&r, &b);
        assert!(m.equal_colon_witnesses(None).unwrap().is_empty(), "{b:?}");
        assert!(m.is_gorenstein().unwrap());
    }
}
