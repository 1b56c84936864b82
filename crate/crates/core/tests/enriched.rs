use clomul::category::Category;
use clomul::closed::{ek_normalize, gamma, ClosedCategory, EFunctor, FinSet, IdClosed};
use clomul::enriched::{
    build_lf, build_lx, build_underlying_v_category, check_gamma_repr, check_l_functorial, check_vc_axioms,
    check_vf_axioms, check_vnat, compare_e_pushforward_with_w, enumerate_vnat, gamma_of_lf, gamma_repr,
    gamma_repr_inverse, pushforward, UnderlyingV, VCategory, VNatFamily,
};
use clomul::instances::closed::{heyting2, terminal, z2_closed};
use clomul::{Caps, SizeBudget, Status};

fn small_finset() -> FinSet {
    FinSet::new(2, SizeBudget::default()).unwrap()
}

fn suite<V: ClosedCategory>(v: &V, budget: &SizeBudget) {
    let a = build_underlying_v_category(v);
    let r = check_vc_axioms(&a, budget).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    for x in budget.objects(v.objects().unwrap()).unwrap() {
        let lx = build_lx(v, &x);
        let r = check_vf_axioms(&a, &a, &lx, budget).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
    let r = check_l_functorial(v, budget).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn underlying_v_category_is_enriched() {
    let budget = SizeBudget::default();
    suite(&terminal().unwrap(), &budget);
    suite(&heyting2().unwrap(), &budget);
    suite(&z2_closed().unwrap(), &budget);
}

#[test]
fn underlying_finset_is_enriched() {
    let v = small_finset();
    let a = build_underlying_v_category(&v);
    let r = check_vc_axioms(&a, &v.budget).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn heyting_hom_objects_are_implication() {
    let v = heyting2().unwrap();
    let a = UnderlyingV(&v);
    let truth = |o: &clomul::category::ObjId| v.show_obj(o) == "1";
    let objs = v.objects().unwrap();
    for x in &objs {
        for y in &objs {
            let h = a.hom_obj(x, y).unwrap();
            assert_eq!(truth(&h), !truth(x) || truth(y));
        }
    }
}

#[test]
fn finset_hom_objects_count_functions() {
    let v = small_finset();
    let a = UnderlyingV(&v);
    for x in v.objects().unwrap() {
        for y in v.objects().unwrap() {
            let h = a.hom_obj(&x, &y).unwrap();
            assert_eq!(h.card(), y.card().pow(x.card() as u32));
        }
    }
}

#[test]
fn l_of_a_morphism_is_v_natural_with_point_gamma() {
    let budget = SizeBudget::default();
    for v in [heyting2().unwrap(), z2_closed().unwrap()] {
        let a = UnderlyingV(&v);
        for (x, y, fs) in clomul::category::all_morphisms(&v, &budget).unwrap() {
            for f in fs {
                let lf = build_lf(&v, &f);
                let r = check_vnat(&a, &build_lx(&v, &y), &build_lx(&v, &x), &lf, &budget).unwrap();
                assert!(r.passed(), "{}", r.to_text());
                assert!(gamma_of_lf(&v, &f).unwrap());
                let point = gamma_repr(&v, &y, &lf).unwrap();
                assert!(v.mor_eq(&point, &gamma(&v, &f).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn gamma_inverse_recovers_l_of_f() {
    let caps = Caps::default();
    for v in [heyting2().unwrap(), z2_closed().unwrap()] {
        let objs = v.objects().unwrap();
        for (x, y, fs) in clomul::category::all_morphisms(&v, &caps.budget).unwrap() {
            let t = build_lx(&v, &x);
            for f in fs {
                let fam = gamma_repr_inverse(&v, &t, &y, &gamma(&v, &f).unwrap(), &caps).unwrap();
                let lf = build_lf(&v, &f);
                for (o, comp) in objs.iter().zip(&fam) {
                    assert!(v.mor_eq(comp, &lf.component(o).unwrap()).unwrap());
                }
            }
            let item = check_gamma_repr(&v, &t, &y, &caps).unwrap();
            assert_eq!(item.status, Status::Pass, "{item:?}");
        }
    }
}

#[test]
fn heyting_families_between_representables_match_points() {
    // families L^Y -> L^X correspond to morphisms X -> Y
    let caps = Caps::default();
    let v = heyting2().unwrap();
    let a = UnderlyingV(&v);
    let objs = v.objects().unwrap();
    let (zero, one) = (&objs[0], &objs[1]);
    assert_eq!(v.show_obj(zero), "0");
    let down = enumerate_vnat(&a, &build_lx(&v, one), &build_lx(&v, zero), &caps).unwrap();
    let up = enumerate_vnat(&a, &build_lx(&v, zero), &build_lx(&v, one), &caps).unwrap();
    assert_eq!(down.len(), v.hom(zero, one).unwrap().len());
    assert_eq!(up.len(), v.hom(one, zero).unwrap().len());
    assert_eq!((down.len(), up.len()), (1, 0));
}

#[test]
fn identity_pushforward_is_the_identity() {
    let budget = SizeBudget::default();
    let v = z2_closed().unwrap();
    let a = UnderlyingV(&v);
    let p = pushforward(IdClosed(&v), &a, &v);
    let objs = v.objects().unwrap();
    for x in &objs {
        assert!(v.mor_eq(&p.j(x).unwrap(), &a.j(x).unwrap()).unwrap());
        for y in &objs {
            assert_eq!(p.hom_obj(x, y).unwrap(), a.hom_obj(x, y).unwrap());
            for z in &objs {
                assert!(v.mor_eq(&p.l(x, y, z).unwrap(), &a.l(x, y, z).unwrap()).unwrap());
            }
        }
    }
    assert!(check_vc_axioms(&p, &budget).unwrap().passed());
}

#[test]
fn e_pushforward_is_enriched_and_matches_w() {
    let sets = small_finset();
    let budget = sets.budget;
    let h = heyting2().unwrap();
    let e = EFunctor::new(&h, &sets);
    let a = UnderlyingV(&h);
    let p = pushforward(&e, &a, &sets);
    let r = check_vc_axioms(&p, &budget).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    let w = ek_normalize(&h, &budget);
    let r = compare_e_pushforward_with_w(&h, &w, &sets, &budget).unwrap();
    assert!(r.passed(), "{}", r.to_text());

    let v = small_finset();
    let w = ek_normalize(&v, &budget);
    let r = compare_e_pushforward_with_w(&v, &w, &sets, &budget).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}
