use clomul::category::Category;
use clomul::closed::{ClosedCategory, SetObj};
use clomul::instances::closed::heyting2;
use clomul::instances::registry::{dump, dump_functor, find, finset, roundtrip, roundtrip_docs, run, run_doc, Expect, ENTRIES};
use clomul::interchange::{parse, print};
use clomul::suite::Suite;
use clomul::{Caps, Report, Status};

fn failing(reports: &[Report]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| r.failed_checks())
        .map(String::from)
        .collect()
}

#[test]
fn every_entry_meets_its_advertised_outcome() {
    let caps = Caps::default();
    for e in ENTRIES {
        let reports = run(e, &Default::default(), Suite::All, &caps).unwrap();
        match e.expect {
            Expect::Pass => {
                let text: String = reports.iter().map(Report::to_text).collect();
                assert!(failing(&reports).is_empty(), "{}\n{text}", e.name);
            }
            Expect::Fail { advertised, failing: expected } => {
                assert_eq!(failing(&reports), expected, "{}", e.name);
                let item = reports.iter().find_map(|r| r.item(advertised)).unwrap();
                assert_eq!(item.status, Status::Fail);
                assert!(!item.loci.is_empty(), "{} has no locus", e.name);
            }
        }
    }
}

#[test]
fn names_are_unique_and_findable() {
    for e in ENTRIES {
        assert_eq!(find(e.name).unwrap().name, e.name);
    }
    assert!(find("nope").is_err());
    let negatives = ENTRIES.iter().filter(|e| e.expect != Expect::Pass).count();
    assert!(negatives >= 4);
}

#[test]
fn dumps_round_trip_and_agree_with_the_native_instance() {
    // tabular copies give the same verdicts as the rule-backed instances
    let caps = Caps::default();
    for e in ENTRIES {
        let doc = dump(e, &Default::default(), &caps).unwrap();
        let text = print(&doc).unwrap();
        let back = parse(&text).unwrap();
        assert_eq!(back, doc, "{}", e.name);
        assert_eq!(print(&back).unwrap(), text);
        let native = run(e, &Default::default(), Suite::All, &caps).unwrap();
        let loaded = run_doc(&back, Suite::All, &caps).unwrap();
        assert_eq!(failing(&native), failing(&loaded), "{}", e.name);
        let items = |rs: &[Report]| rs.iter().flat_map(|r| r.items.iter().map(|i| i.check.clone())).collect::<Vec<_>>();
        assert_eq!(items(&native), items(&loaded), "{}", e.name);
    }
}

#[test]
fn functor_dumps_give_the_same_round_trip() {
    let caps = Caps::default();
    for name in ["z2", "z3"] {
        let e = find(name).unwrap();
        let m = dump(e, &Default::default(), &caps).unwrap();
        for f in e.functors {
            let native = roundtrip(e, f, &caps).unwrap();
            assert!(failing(&native).is_empty(), "{name} {f}");
            let fd = parse(&print(&dump_functor(e, f, &caps).unwrap()).unwrap()).unwrap();
            let loaded = roundtrip_docs(&m, &m, &fd, &caps).unwrap();
            assert!(failing(&loaded).is_empty(), "{name} {f}");
            let count = |rs: &[Report]| rs.iter().map(|r| r.items.len()).sum::<usize>();
            assert_eq!(count(&native), count(&loaded));
        }
    }
}

#[test]
fn finset_one_is_heyting2() {
    // the pool of one atom gives {} < {*}; hom-set sizes and internal homs
    // match 0 < 1 with implication
    let caps = Caps::default();
    let params = [("max_size".to_string(), 1)].into_iter().collect();
    let f = finset(&params, &caps).unwrap();
    let h = heyting2().unwrap();
    let (fo, ho) = (f.objects().unwrap(), h.objects().unwrap());
    assert_eq!(fo.len(), 2);
    let image = |x: &SetObj| ho[x.card() as usize];
    assert!(f.unit().card() == 1 && image(&f.unit()) == h.unit());
    for x in &fo {
        for y in &fo {
            assert_eq!(f.hom(x, y).unwrap().len(), h.hom(&image(x), &image(y)).unwrap().len());
            let und = f.hom_obj(x, y).unwrap();
            assert_eq!(ho[und.card() as usize], h.hom_obj(&image(x), &image(y)).unwrap());
        }
    }
    let reports = run(find("finset").unwrap(), &params, Suite::All, &caps).unwrap();
    assert!(failing(&reports).is_empty());
}

#[test]
fn params_are_checked() {
    let caps = Caps::default();
    let bad = [("size".to_string(), 1)].into_iter().collect();
    assert!(run(find("finset").unwrap(), &bad, Suite::Axioms, &caps).is_err());
    assert!(run(find("heyting2").unwrap(), &bad, Suite::Axioms, &caps).is_err());
}
