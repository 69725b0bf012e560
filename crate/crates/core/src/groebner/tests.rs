use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::field::FieldSpec;
use crate::parse::parse_polynomial;
use crate::ring::RingContext;

fn ring(field: FieldSpec, names: &[&str]) -> Ring {
    RingContext::with_names(field, names).unwrap()
}

fn p(r: &Ring, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| p(r, s)).collect())
}

fn gb_strings(i: &Ideal, o: &TermOrder) -> Vec<String> {
    i.reduced_gb(o).iter().map(|g| g.to_string()).collect()
}

#[test]
fn normal_form_examples() {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    for o in [TermOrder::Lex, TermOrder::Grevlex] {
        assert!(ideal(&r, &["x"]).normal_form(&p(&r, "x^2"), &o).is_zero());
        assert_eq!(ideal(&r, &["x"]).normal_form(&p(&r, "y"), &o), p(&r, "y"));
    }
    // one division step: x^2 + y - (x^2 - y) = 2y
    let nf = ideal(&r, &["x^2 - y"]).normal_form(&p(&r, "x^2 + y"), &TermOrder::Lex);
    assert_eq!(nf, p(&r, "2*y"));
}

#[test]
fn reduced_gb_examples() {
    let q = ring(FieldSpec::Rationals, &["x", "y"]);
    assert_eq!(gb_strings(&ideal(&q, &["x+y", "x-y"]), &TermOrder::Grevlex), ["x", "y"]);
    let f2 = ring(FieldSpec::PrimeField(2), &["x", "y"]);
    assert_eq!(gb_strings(&ideal(&f2, &["x+y", "x-y"]), &TermOrder::Grevlex), ["x + y"]);
    // leads x^2 and y^2 are coprime, so the S-pair reduces to zero and the
    // generators already form the reduced basis
    assert_eq!(
        gb_strings(&ideal(&q, &["x^2 - y", "y^2"]), &TermOrder::Lex),
        ["x^2 - y", "y^2"]
    );
}

#[test]
fn reduced_gb_is_reduced() {
    let r = ring(FieldSpec::Rationals, &["x", "y", "z"]);
    let i = ideal(&r, &["x^2*y - z", "x*y^2 - x", "y*z - x^2 + 1"]);
    for o in [TermOrder::Lex, TermOrder::Grevlex, TermOrder::elimination(3, &[2])] {
        let gb = i.groebner(&o);
        let leads = gb.leading_monomials();
        for (k, g) in gb.polys().iter().enumerate() {
            assert!(g.leading_term(&o).unwrap().coeff.is_one());
            for t in g.terms() {
                for (j, l) in leads.iter().enumerate() {
                    if j != k || t.monomial != *l {
                        assert!(!l.divides(&t.monomial), "{g} not reduced");
                    }
                }
            }
        }
        for w in leads.windows(2) {
            assert!(o.greater(&w[0], &w[1]));
        }
        for g in i.gens() {
            assert!(gb.reduces_to_zero(g));
        }
    }
}

#[test]
fn eliminate_examples() {
    let r = ring(FieldSpec::Rationals, &["t", "x", "y"]);
    let e = ideal(&r, &["x - t", "y - t^2"]).eliminate(&[0]).unwrap();
    assert_eq!(e.ring().var_names(), &["x", "y"]);
    let gens: Vec<String> = e.gens().iter().map(|g| g.normalized_for_display().to_string()).collect();
    assert_eq!(gens, ["x^2 - y"]);

    let r2 = ring(FieldSpec::Rationals, &["x", "y"]);
    let e = ideal(&r2, &["x"]).eliminate(&[1]).unwrap();
    assert_eq!(e.gens().len(), 1);
    assert_eq!(e.gens()[0].to_string(), "x");
    let e = ideal(&r2, &["y"]).eliminate(&[1]).unwrap();
    assert!(e.is_zero());
}

#[test]
fn saturate_examples() {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    let y = Monomial::new([0, 1]);
    let xy = Monomial::new([1, 1]);
    assert_eq!(gb_strings(&ideal(&r, &["x*y"]).saturate(&y), &TermOrder::Grevlex), ["x"]);
    assert!(ideal(&r, &["x^2*y", "x*y^2"]).saturate(&xy).is_unit_ideal());
    assert_eq!(gb_strings(&ideal(&r, &["x"]).saturate(&y), &TermOrder::Grevlex), ["x"]);
}

#[test]
fn intersect_examples() {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"]));
    assert_eq!(gb_strings(&i, &TermOrder::Grevlex), ["x*y"]);
    let i = ideal(&r, &["x^2"]).intersect(&ideal(&r, &["x"]));
    assert_eq!(gb_strings(&i, &TermOrder::Grevlex), ["x^2"]);
    let i = ideal(&r, &["x+y"]).intersect(&ideal(&r, &["x-y"]));
    assert_eq!(gb_strings(&i, &TermOrder::Grevlex), ["x^2 - y^2"]);
}

#[test]
fn colon_examples() {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    let c = ideal(&r, &["x*y"]).colon(&p(&r, "x")).unwrap();
    assert_eq!(gb_strings(&c, &TermOrder::Grevlex), ["y"]);
    let c = ideal(&r, &["x^2", "x*y", "y^2"]).colon(&p(&r, "x")).unwrap();
    assert_eq!(gb_strings(&c, &TermOrder::Grevlex), ["x", "y"]);
    let i = ideal(&r, &["x^2 + y", "x*y"]);
    assert!(i.colon(&Polynomial::one(&r)).unwrap().same_ideal(&i));
    assert_eq!(i.colon(&Polynomial::zero(&r)).unwrap_err(), Error::DivisionByZero);
    // colon by an ideal intersects the generator colons
    let c = ideal(&r, &["x^2", "y^2"]).colon_ideal(&ideal(&r, &["x", "y"]));
    assert!(c.same_ideal(&ideal(&r, &["x^2", "x*y", "y^2"])));
}

#[test]
fn membership_examples() {
    let r = ring(FieldSpec::Rationals, &["x"]);
    assert!(ideal(&r, &["x"]).contains(&p(&r, "x^2")));
    assert!(!ideal(&r, &["x^2"]).contains(&p(&r, "x")));
    let f2 = ring(FieldSpec::PrimeField(2), &["x", "y", "z"]);
    let i = ideal(&f2, &["x^3", "y^3", "z^3", "x*y*(x+y+z)"]);
    assert!(i.contains(&p(&f2, "x*y*z^2")));
    let q = ring(FieldSpec::Rationals, &["x", "y", "z"]);
    let i = ideal(&q, &["x^3", "y^3", "z^3", "x*y*(x+y+z)"]);
    assert!(!i.contains(&p(&q, "x*y*z^2")));
}

#[test]
fn membership_is_order_independent() {
    let r = ring(FieldSpec::Rationals, &["x", "y", "z"]);
    let i = ideal(&r, &["x^2 - y*z", "y^2 - x*z", "z^3"]);
    let orders = [TermOrder::Lex, TermOrder::Grevlex, TermOrder::elimination(3, &[1])];
    for f in ["x^3*y", "x*y*z", "x^2*y - y^2*z", "x^4", "y*z^2 + 1"] {
        let f = p(&r, f);
        let answers: Vec<bool> = orders.iter().map(|o| i.normal_form(&f, o).is_zero()).collect();
        assert!(answers.iter().all(|&a| a == answers[0]), "{f}: {answers:?}");
    }
}

fn random_poly(rng: &mut ChaCha8Rng, r: &Ring, terms: usize, max_exp: u32) -> Polynomial {
    let n = r.nvars();
    let ts = (0..terms)
        .map(|_| crate::poly::Term {
            coeff: r.field().from_i64(rng.gen_range(-3..=3)),
            monomial: Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp))),
        })
        .collect();
    Polynomial::from_terms(r, ts)
}

fn random_ideal(rng: &mut ChaCha8Rng, r: &Ring) -> Ideal {
    let k = rng.gen_range(1..=3);
    let mut gens: Vec<Polynomial> = (0..k)
        .map(|_| {
            let t = rng.gen_range(1..=2);
            random_poly(rng, r, t, 3)
        })
        .filter(|g| !g.is_zero())
        .collect();
    if gens.is_empty() {
        gens.push(Polynomial::var(r, 0));
    }
    Ideal::new(r, gens)
}

#[test]
fn division_cofactors_reexpand() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for field in [FieldSpec::Rationals, FieldSpec::PrimeField(7)] {
        let r = ring(field, &["x", "y", "z"]);
        for _ in 0..25 {
            let i = random_ideal(&mut rng, &r);
            // a member built from the generators, and a random polynomial
            let mut member = Polynomial::zero(&r);
            for g in i.gens() {
                member = &member + &(&random_poly(&mut rng, &r, 2, 2) * g);
            }
            let other = random_poly(&mut rng, &r, 3, 3);
            for f in [member, other] {
                let in_ideal = i.contains(&f);
                match i.lift(&f) {
                    Some(cof) => {
                        assert!(in_ideal, "lift found cofactors for non-member {f}");
                        let mut sum = Polynomial::zero(&r);
                        for (c, g) in cof.iter().zip(i.gens()) {
                            sum = &sum + &(c * g);
                        }
                        assert_eq!(sum, f);
                    }
                    None => assert!(!in_ideal, "{f} reduces to zero but has no cofactors"),
                }
            }
        }
    }
}

#[test]
fn reduced_basis_independent_of_generator_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let r = ring(FieldSpec::Rationals, &["x", "y", "z"]);
    for _ in 0..20 {
        let i = random_ideal(&mut rng, &r);
        let mut gens = i.gens().to_vec();
        gens.shuffle(&mut rng);
        let j = Ideal::new(&r, gens);
        for o in [TermOrder::Grevlex, TermOrder::Lex] {
            assert_eq!(i.reduced_gb(&o), j.reduced_gb(&o));
        }
    }
}

#[test]
fn saturation_agrees_with_iterated_colon() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let r = ring(FieldSpec::Rationals, &["x", "y", "z"]);
    for _ in 0..15 {
        let i = random_ideal(&mut rng, &r);
        let m = Monomial::new((0..3).map(|_| rng.gen_range(0..=1)));
        let a = i.saturate(&m);
        let b = i.saturate_iterated(&m);
        assert_eq!(
            a.reduced_gb(&TermOrder::Grevlex),
            b.reduced_gb(&TermOrder::Grevlex),
            "{i} : {m:?}"
        );
    }
}

#[test]
fn intersection_laws_and_colon_containment() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let r = ring(FieldSpec::Rationals, &["x", "y", "z"]);
    let binomial_ideal = |rng: &mut ChaCha8Rng| {
        let m = random_poly(rng, &r, 1, 2);
        let b = random_poly(rng, &r, 2, 2);
        Ideal::new(&r, vec![m, b].into_iter().filter(|g| !g.is_zero()).collect())
    };
    for _ in 0..8 {
        let (a, b, c) = (binomial_ideal(&mut rng), binomial_ideal(&mut rng), binomial_ideal(&mut rng));
        let o = TermOrder::Grevlex;
        assert_eq!(a.intersect(&b).reduced_gb(&o), b.intersect(&a).reduced_gb(&o));
        assert_eq!(
            a.intersect(&b).intersect(&c).reduced_gb(&o),
            a.intersect(&b.intersect(&c)).reduced_gb(&o)
        );
        let inter = a.intersect(&b);
        assert!(inter.is_subset_of(&a) && inter.is_subset_of(&b));
        let g = random_poly(&mut rng, &r, 2, 2);
        if !g.is_zero() {
            let q = a.colon(&g).unwrap();
            for h in q.gens() {
                assert!(a.contains(&(h * &g)));
            }
        }
    }
}

#[test]
fn artinian_means_a_power_of_the_maximal_ideal() {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    // finite colength, but three of the four zeros avoid the origin
    let i = ideal(&r, &["y^5", "x^4 + x"]);
    assert!(i.is_zero_dimensional());
    assert!(!i.is_artinian());
    assert!(ideal(&r, &["y^2", "x^3 + x*y"]).is_artinian());
    assert!(ideal(&r, &["x^2 - y", "y^2"]).is_artinian());
    assert!(!ideal(&r, &["x*y"]).is_artinian());
}
