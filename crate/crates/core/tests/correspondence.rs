use clomul::category::Category;
use clomul::closed::{check_cf_axioms, ClosedCategory, IdClosed};
use clomul::correspondence::{
    build_representing_multicategory, check_2cell_bijectivity, check_injectivity, check_u_functoriality,
    roundtrip_closed_functor, roundtrip_multifunctor, verify_essential_surjectivity, verify_underlying_closed,
    UFunctor, Underlying,
};
use clomul::instances::closed::{heyting2, terminal, z2_closed};
use clomul::instances::multi::{monoid_unit, shift_component, terminal_multi, z2, z3, MonoidEndo};
use clomul::multicat::{FnMultiNat, IdMulti, Multicategory};
use clomul::Caps;

#[test]
fn underlying_of_z2_is_a_closed_category() {
    let caps = Caps::default();
    let cm = z2(caps).unwrap();
    let u = Underlying::new(&cm, monoid_unit(0));
    let r = verify_underlying_closed(&u, &caps.budget).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    for name in [
        "CC1 via L^X preserves identities",
        "CC2 via the identity axiom of und C",
        "CC3 via L^X preserving composition",
        "CC4 via the displayed diagram",
        "CC5 via the γ factorization",
    ] {
        assert!(r.item(name).unwrap().instances > 0, "{name}");
    }
}

#[test]
fn underlying_of_z3_matches_the_group_oracle() {
    // with ev = 0, φ is the identity on elements, so und(f;1) = f and
    // und(1;g) = g, and every structure map is neutral
    let cm = z3(Caps::default()).unwrap();
    let u = Underlying::new(&cm, monoid_unit(0));
    let hom = u.hom(&(), &()).unwrap();
    assert_eq!(hom.len(), 3);
    for f in &hom {
        for g in &hom {
            assert_eq!(u.compose(f, g).unwrap().mor, (f.mor + g.mor) % 3);
            assert_eq!(u.hom_mor(f, g).unwrap().mor, (f.mor + g.mor) % 3);
        }
    }
    assert_eq!(u.i(&()).unwrap().mor, 0);
    assert_eq!(u.j(&()).unwrap().mor, 0);
    assert_eq!(u.l(&(), &(), &()).unwrap().mor, 0);
}

#[test]
fn lift_and_u_are_inverse_on_one_cells() {
    let caps = Caps::default();
    for n in [2, 3] {
        let cm = if n == 2 { z2(caps) } else { z3(caps) }.unwrap();
        let u = Underlying::new(&cm, monoid_unit(0));
        for c in 0..n {
            for f in [MonoidEndo::identity(n), MonoidEndo::inversion(n), MonoidEndo::twisted(n, c)] {
                let r = roundtrip_multifunctor(&u, &u, &f).unwrap();
                assert!(r.passed(), "{} {}", f.name, r.to_text());
                let uf = UFunctor { source: &u, target: &u, f: &f };
                let r = check_cf_axioms(&u, &u, &uf, &caps.budget).unwrap();
                assert!(r.passed(), "{} {}", f.name, r.to_text());
                let r = roundtrip_closed_functor(&u, &u, &uf).unwrap();
                assert!(r.passed(), "{} {}", f.name, r.to_text());
            }
        }
        let r = roundtrip_closed_functor(&u, &u, &IdClosed(&u)).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
    let t = terminal_multi(caps).unwrap();
    let ut = Underlying::new(&t, monoid_unit(0));
    assert!(roundtrip_multifunctor(&ut, &ut, &IdMulti).unwrap().passed());
}

#[test]
fn injectivity_and_two_cells() {
    let caps = Caps::default();
    let cm = z3(caps).unwrap();
    let u = Underlying::new(&cm, monoid_unit(0));
    let (id, inv) = (MonoidEndo::identity(3), MonoidEndo::inversion(3));
    let r = check_injectivity(&u, &u, &id, &inv).unwrap();
    assert!(r.passed());
    assert!(r.items[0].note.as_deref().unwrap().contains("U-images equal: false"));
    let r = check_injectivity(&u, &u, &inv, &inv).unwrap();
    assert!(r.items[0].note.as_deref().unwrap().contains("U-images equal: true"));

    for c in 0..3 {
        for k in 0..3 {
            let tw = MonoidEndo::twisted(3, c);
            let r = check_2cell_bijectivity(&u, &u, &id, &tw, &FnMultiNat(shift_component(k))).unwrap();
            assert!(r.passed(), "c={c} k={k} {}", r.to_text());
            let expect = format!("multinatural: {}", c == k);
            assert!(r.items[0].note.as_deref().unwrap().contains(&expect), "c={c} k={k}");
        }
    }
}

#[test]
fn u_is_a_functor() {
    let caps = Caps::default();
    let cm = z3(caps).unwrap();
    let u = Underlying::new(&cm, monoid_unit(0));
    let (f, g) = (MonoidEndo::inversion(3), MonoidEndo::twisted(3, 2));
    let r1 = FnMultiNat(shift_component(1));
    let r2 = FnMultiNat(shift_component(2));
    let r = check_u_functoriality(&u, &u, &u, &f, &g, Some((&r1, &r2)), &caps.budget).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn representing_multicategories_recover_their_base() {
    let caps = Caps::default();
    for (name, v) in [("terminal", terminal()), ("heyting2", heyting2()), ("z2", z2_closed())] {
        let v = v.unwrap();
        let r = verify_essential_surjectivity(&v, name, caps).unwrap();
        assert!(r.passed(), "{name}\n{}", r.to_text());
    }
}

#[test]
fn heyting_representing_homs_follow_iterated_implication() {
    let caps = Caps::default();
    let v = heyting2().unwrap();
    let (cm, _) = build_representing_multicategory(&v, "heyting2", caps).unwrap();
    let objs = v.objects().unwrap();
    let truth = |o: &clomul::category::ObjId| v.show_obj(o) == "1";
    for n in 0..=3usize {
        for code in 0..(1usize << n) {
            let xs: Vec<_> = (0..n).map(|k| objs[(code >> k) & 1]).collect();
            for y in &objs {
                // x1 ∧ ... ∧ xn <= y as a truth table
                let oracle = !xs.iter().all(&truth) || truth(y);
                let size = cm.m.hom(&xs, y).unwrap().len();
                assert_eq!(size, usize::from(oracle), "{xs:?} -> {y:?}");
            }
        }
    }
}
