//! Named instances with their advertised outcomes.

use std::collections::BTreeMap;

use super::closed::{broken_compose, broken_j, broken_l, heyting2, terminal, z2_closed};
use super::multi::{
    broken_ev, broken_multi_compose, discrete_nat, meet_multi, meet_unit, monoid_unit, nat2, terminal_multi, z2, z3,
    MonoidEndo,
};
use crate::budget::Caps;
use crate::closed::FinSet;
use crate::correspondence::Underlying;
use crate::error::{Error, Result};
use crate::interchange::{
    category_from_doc, category_to_doc, closed_from_doc, closed_to_doc, multi_from_doc, multi_to_doc,
    multifunctor_from_doc, multifunctor_to_doc, tabulate_closed_multi, Doc, InstanceRef, LoadedMulti,
    TabularMultiFunctor,
};
use crate::report::Report;
use crate::suite::{
    category_suite, closed_multi_suite, closed_suite, multi_suite, roundtrip_suite, ClosedExtras, Suite,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Category,
    Closed,
    Multicategory,
    ClosedMulticategory,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Category => "category",
            Kind::Closed => "closed category",
            Kind::Multicategory => "multicategory",
            Kind::ClosedMulticategory => "closed multicategory",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    /// Every check of every suite passes.
    Pass,
    /// A negative fixture: `advertised` fails with a locus, and under
    /// `--suite all` the failing checks are exactly `failing`, the
    /// advertised one and its forced consequences.
    Fail {
        advertised: &'static str,
        failing: &'static [&'static str],
    },
}

#[derive(Debug, Clone, Copy)]
pub struct Entry {
    pub name: &'static str,
    pub kind: Kind,
    pub about: &'static str,
    pub expect: Expect,
    /// Multifunctors available to the `roundtrip` verb.
    pub functors: &'static [&'static str],
}

const CYCLIC2: &[&str] = &["identity", "inversion", "twisted0", "twisted1"];
const CYCLIC3: &[&str] = &["identity", "inversion", "twisted0", "twisted1", "twisted2"];

pub const ENTRIES: &[Entry] = &[
    Entry {
        name: "terminal",
        kind: Kind::Closed,
        about: "one object, one morphism",
        expect: Expect::Pass,
        functors: &[],
    },
    Entry {
        name: "heyting2",
        kind: Kind::Closed,
        about: "the two-element Heyting algebra 0 < 1 with implication",
        expect: Expect::Pass,
        functors: &[],
    },
    Entry {
        name: "finset",
        kind: Kind::Closed,
        about: "finite sets over a fixed atom pool, lazily evaluated (param max_size, default 2)",
        expect: Expect::Pass,
        functors: &[],
    },
    Entry {
        name: "z2-closed",
        kind: Kind::Closed,
        about: "Z/2 as a one-object closed category",
        expect: Expect::Pass,
        functors: &[],
    },
    Entry {
        name: "z2",
        kind: Kind::ClosedMulticategory,
        about: "the multicategory of Z/2 as a strict monoidal category",
        expect: Expect::Pass,
        functors: CYCLIC2,
    },
    Entry {
        name: "z3",
        kind: Kind::ClosedMulticategory,
        about: "the multicategory of Z/3 as a strict monoidal category",
        expect: Expect::Pass,
        functors: CYCLIC3,
    },
    Entry {
        name: "terminal-multi",
        kind: Kind::ClosedMulticategory,
        about: "the terminal multicategory",
        expect: Expect::Pass,
        functors: &["identity"],
    },
    Entry {
        name: "nat2",
        kind: Kind::ClosedMulticategory,
        about: "{0,1,2} under addition capped at 2, unit 0",
        expect: Expect::Pass,
        functors: &[],
    },
    Entry {
        name: "chain3",
        kind: Kind::ClosedMulticategory,
        about: "the chain 0 < 1 < 2 under meet with Heyting implication",
        expect: Expect::Pass,
        functors: &[],
    },
    Entry {
        name: "broken-j",
        kind: Kind::Closed,
        about: "Z/2 x heyting2 with one component of j replaced",
        expect: Expect::Fail {
            advertised: "CC1",
            failing: &["j.dinatural", "CC1", "CC2"],
        },
        functors: &[],
    },
    Entry {
        name: "broken-l",
        kind: Kind::Closed,
        about: "Z/2 x heyting2 with one component of L replaced",
        expect: Expect::Fail {
            advertised: "CC3",
            failing: &["L.natural-Y", "L.natural-Z", "L.dinatural-X", "CC1", "CC3", "CC4"],
        },
        functors: &[],
    },
    Entry {
        name: "broken-compose",
        kind: Kind::Category,
        about: "a path category with one composite mis-set",
        expect: Expect::Fail {
            advertised: "cat.associativity",
            failing: &["cat.associativity"],
        },
        functors: &[],
    },
    Entry {
        name: "broken-ev",
        kind: Kind::ClosedMulticategory,
        about: "nat2 with evaluation 1, so currying is not bijective",
        expect: Expect::Fail {
            advertised: "closed.phi-bijective",
            failing: &["closed.phi-bijective", "unit.und-u-iso"],
        },
        functors: &[],
    },
    Entry {
        name: "discrete-nat2",
        kind: Kind::ClosedMulticategory,
        about: "{0,1,2} under capped addition as a discrete monoidal category: no subtraction",
        expect: Expect::Fail {
            advertised: "closed.phi-bijective",
            failing: &["closed.witness-typing", "closed.phi-bijective", "closed.nary-factorization"],
        },
        functors: &[],
    },
    Entry {
        name: "nat2-unit1",
        kind: Kind::ClosedMulticategory,
        about: "nat2 with the non-unit candidate u = 1",
        expect: Expect::Fail {
            advertised: "unit.und-u-iso",
            failing: &["unit.und-u-iso", "unit.bar-bijective"],
        },
        functors: &[],
    },
    Entry {
        name: "broken-multi-compose",
        kind: Kind::Multicategory,
        about: "tabulated Z/2 with one composite mis-set",
        expect: Expect::Fail {
            advertised: "multi.associativity",
            failing: &["multi.associativity"],
        },
        functors: &[],
    },
];

pub fn find(name: &str) -> Result<&'static Entry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Parse(format!("no instance named {name:?}")))
}

pub type Params = BTreeMap<String, usize>;

fn param(params: &Params, key: &str, default: usize) -> usize {
    params.get(key).copied().unwrap_or(default)
}

pub fn finset(params: &Params, caps: &Caps) -> Result<FinSet> {
    for k in params.keys() {
        if k != "max_size" {
            return Err(Error::Parse(format!("finset has no parameter {k:?}")));
        }
    }
    FinSet::new(param(params, "max_size", 2), caps.budget)
}

fn no_params(name: &str, params: &Params) -> Result<()> {
    match params.keys().next() {
        Some(k) => Err(Error::Parse(format!("{name} has no parameter {k:?}"))),
        None => Ok(()),
    }
}

const EK: ClosedExtras = ClosedExtras {
    ek: true,
    represent: true,
};

/// Runs the suites of a registry instance.
pub fn run(entry: &Entry, params: &Params, suite: Suite, caps: &Caps) -> Result<Vec<Report>> {
    if entry.name != "finset" {
        no_params(entry.name, params)?;
    }
    let caps = *caps;
    let b = &caps.budget;
    match entry.name {
        "terminal" => closed_suite(&terminal()?, "terminal", suite, &caps, EK),
        "heyting2" => closed_suite(&heyting2()?, "heyting2", suite, &caps, EK),
        "z2-closed" => closed_suite(&z2_closed()?, "z2-closed", suite, &caps, EK),
        "finset" => {
            let extras = ClosedExtras {
                ek: true,
                represent: false,
            };
            closed_suite(&finset(params, &caps)?, "finset", suite, &caps, extras)
        }
        "broken-j" => closed_suite(&broken_j()?, "broken-j", suite, &caps, ClosedExtras::default()),
        "broken-l" => closed_suite(&broken_l()?, "broken-l", suite, &caps, ClosedExtras::default()),
        "broken-compose" => category_suite(&broken_compose()?, suite, b),
        "z2" => closed_multi_suite(&z2(caps)?, Some(&monoid_unit(0)), suite),
        "z3" => closed_multi_suite(&z3(caps)?, Some(&monoid_unit(0)), suite),
        "terminal-multi" => closed_multi_suite(&terminal_multi(caps)?, Some(&monoid_unit(0)), suite),
        "nat2" => closed_multi_suite(&nat2(caps)?, Some(&monoid_unit(0)), suite),
        "nat2-unit1" => closed_multi_suite(&nat2(caps)?, Some(&monoid_unit(1)), suite),
        "chain3" => closed_multi_suite(&meet_multi(3, caps)?, Some(&meet_unit(3)), suite),
        "broken-ev" => closed_multi_suite(&broken_ev(caps)?, Some(&monoid_unit(0)), suite),
        "discrete-nat2" => closed_multi_suite(&discrete_nat(caps)?, None, suite),
        "broken-multi-compose" => multi_suite(&broken_multi_compose(&caps)?, suite, &caps),
        other => Err(Error::Parse(format!("no instance named {other:?}"))),
    }
}

/// The serialized form: tables for tabular instances, a registry reference
/// for lazy ones.
pub fn dump(entry: &Entry, params: &Params, caps: &Caps) -> Result<Doc> {
    if entry.name != "finset" {
        no_params(entry.name, params)?;
    }
    let caps = *caps;
    let multi = |l: LoadedMulti| Doc::Multicategory(multi_to_doc(&l));
    Ok(match entry.name {
        "terminal" => Doc::Closed(closed_to_doc(&terminal()?)),
        "heyting2" => Doc::Closed(closed_to_doc(&heyting2()?)),
        "z2-closed" => Doc::Closed(closed_to_doc(&z2_closed()?)),
        "broken-j" => Doc::Closed(closed_to_doc(&broken_j()?)),
        "broken-l" => Doc::Closed(closed_to_doc(&broken_l()?)),
        "finset" => {
            finset(params, &caps)?;
            Doc::Instance(InstanceRef {
                name: "finset".into(),
                params: params.clone(),
            })
        }
        "broken-compose" => Doc::Category(category_to_doc(&broken_compose()?)),
        "z2" => multi(tabulate_closed_multi(&z2(caps)?, Some(&monoid_unit(0)), "z2")?.0),
        "z3" => multi(tabulate_closed_multi(&z3(caps)?, Some(&monoid_unit(0)), "z3")?.0),
        "terminal-multi" => multi(tabulate_closed_multi(&terminal_multi(caps)?, Some(&monoid_unit(0)), "terminal-multi")?.0),
        "nat2" => multi(tabulate_closed_multi(&nat2(caps)?, Some(&monoid_unit(0)), "nat2")?.0),
        "nat2-unit1" => multi(tabulate_closed_multi(&nat2(caps)?, Some(&monoid_unit(1)), "nat2-unit1")?.0),
        "chain3" => multi(tabulate_closed_multi(&meet_multi(3, caps)?, Some(&meet_unit(3)), "chain3")?.0),
        "broken-ev" => multi(tabulate_closed_multi(&broken_ev(caps)?, Some(&monoid_unit(0)), "broken-ev")?.0),
        "discrete-nat2" => multi(tabulate_closed_multi(&discrete_nat(caps)?, None, "discrete-nat2")?.0),
        "broken-multi-compose" => multi(LoadedMulti {
            table: broken_multi_compose(&caps)?,
            witness: None,
            unit: None,
        }),
        other => return Err(Error::Parse(format!("no instance named {other:?}"))),
    })
}

fn monoid_endo(entry: &Entry, functor: &str) -> Result<MonoidEndo> {
    if !entry.functors.contains(&functor) {
        return Err(Error::Parse(format!(
            "{} has no functor {functor:?}; available: {}",
            entry.name,
            entry.functors.join(", ")
        )));
    }
    let n = match entry.name {
        "z2" => 2,
        "z3" => 3,
        _ => 1,
    };
    Ok(match functor {
        "identity" => MonoidEndo::identity(n),
        "inversion" => MonoidEndo::inversion(n),
        t => MonoidEndo::twisted(n, t.trim_start_matches("twisted").parse().map_err(|_| {
            Error::Parse(format!("bad functor name {t:?}"))
        })?),
    })
}

fn monoid_multi(entry: &Entry, caps: Caps) -> Result<super::multi::MonoidMulti> {
    match entry.name {
        "z2" => z2(caps),
        "z3" => z3(caps),
        "terminal-multi" => terminal_multi(caps),
        other => Err(Error::Parse(format!("{other} has no registered functors"))),
    }
}

/// The round-trip suite of a registered endo-multifunctor.
pub fn roundtrip(entry: &Entry, functor: &str, caps: &Caps) -> Result<Vec<Report>> {
    let f = monoid_endo(entry, functor)?;
    let cm = monoid_multi(entry, *caps)?;
    let u = Underlying::new(&cm, monoid_unit(0));
    roundtrip_suite(&u, &u, &f)
}

/// A registered endo-multifunctor as a table against `dump(entry)`.
pub fn dump_functor(entry: &Entry, functor: &str, caps: &Caps) -> Result<Doc> {
    let f = monoid_endo(entry, functor)?;
    let cm = monoid_multi(entry, *caps)?;
    let (loaded, t) = tabulate_closed_multi(&cm, Some(&monoid_unit(0)), entry.name)?;
    let tf = TabularMultiFunctor::from_functor(functor, &cm.m, &t, &t, &f)?;
    Ok(Doc::Multifunctor(multifunctor_to_doc(&tf, &loaded.table, &loaded.table)))
}

/// Runs the suites of a parsed structure file.
pub fn run_doc(doc: &Doc, suite: Suite, caps: &Caps) -> Result<Vec<Report>> {
    match doc {
        Doc::Category(d) => category_suite(&category_from_doc(d)?, suite, &caps.budget),
        Doc::Closed(d) => {
            let v = closed_from_doc(d)?;
            closed_suite(&v, &v.cat.name.clone(), suite, caps, EK)
        }
        Doc::Multicategory(d) => {
            let l = multi_from_doc(d)?;
            match l.closed(*caps) {
                Some(cm) => closed_multi_suite(&cm, l.unit.as_ref(), suite),
                None => multi_suite(&l.table, suite, &caps.clip(l.table.cap)),
            }
        }
        Doc::Instance(r) => run(find(&r.name)?, &r.params, suite, caps),
        Doc::ClosedFunctor(_) | Doc::Multifunctor(_) => Err(Error::Parse(
            "a functor file is not a structure; pass it to roundtrip".into(),
        )),
    }
}

/// The round-trip suite of a multifunctor file between two closed
/// multicategory files.
pub fn roundtrip_docs(source: &Doc, target: &Doc, functor: &Doc, caps: &Caps) -> Result<Vec<Report>> {
    let load = |d: &Doc| -> Result<LoadedMulti> {
        match d {
            Doc::Multicategory(m) => multi_from_doc(m),
            _ => Err(Error::Parse("roundtrip needs closed multicategory files".into())),
        }
    };
    let (s, t) = (load(source)?, load(target)?);
    let Doc::Multifunctor(fd) = functor else {
        return Err(Error::Parse("roundtrip needs a multifunctor file".into()));
    };
    let f = multifunctor_from_doc(fd, &s.table, &t.table)?;
    let closed = |l: &LoadedMulti| {
        let cm = l.closed(*caps).ok_or_else(|| Error::Parse(format!("{} has no closedness witness", l.table.name)))?;
        let uw = l.unit.clone().ok_or_else(|| Error::Parse(format!("{} has no unit", l.table.name)))?;
        Ok::<_, Error>((cm, uw))
    };
    let ((sc, su), (tc, tu)) = (closed(&s)?, closed(&t)?);
    let (us, ut) = (Underlying::new(&sc, su), Underlying::new(&tc, tu));
    roundtrip_suite(&us, &ut, &f)
}
