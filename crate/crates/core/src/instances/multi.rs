//! Closed multicategories of strict monoidal categories, multifunctors
//! between them, and negative fixtures.

use crate::budget::Caps;
use crate::category::Category;
use crate::closed_multi::{ClosedMulti, ClosednessWitness, UnitWitness};
use crate::error::{Error, Result};
use crate::multicat::{
    tabularize_multi, DiscreteMonoid, HatMor, MeetSemilattice, Monoid, MultiFunctor, Multicategory,
    TabularMulticategory, Widehat,
};

pub type MonoidMulti = ClosedMulti<Widehat<Monoid>>;
pub type MeetMulti = ClosedMulti<Widehat<MeetSemilattice>>;
pub type DiscreteMulti = ClosedMulti<Widehat<DiscreteMonoid>>;
pub type MonoidMor = HatMor<(), usize>;

/// A commutative monoid's one-object multicategory with `und(*;*) = *` and
/// `ev` the element `ev`. With `ev` the neutral element it is closed.
pub fn monoid_multi_with_ev(monoid: Monoid, ev: usize, caps: Caps) -> Result<MonoidMulti> {
    let name = monoid.name.clone();
    let m = Widehat::new(monoid, &caps.budget)?.named(&name);
    let mut w = ClosednessWitness::default();
    w.hom_obj.insert(((), ()), ());
    w.ev.insert(((), ()), m.wrap(vec![(), ()], ev)?);
    Ok(ClosedMulti::new(m, w, caps))
}

pub fn monoid_multi(monoid: Monoid, caps: Caps) -> Result<MonoidMulti> {
    monoid_multi_with_ev(monoid, 0, caps)
}

/// `u = 0: () -> *`.
pub fn monoid_unit(element: usize) -> UnitWitness<(), MonoidMor> {
    UnitWitness {
        unit: (),
        u: HatMor {
            sources: Vec::new(),
            target: (),
            mor: element,
        },
    }
}

pub fn z2(caps: Caps) -> Result<MonoidMulti> {
    monoid_multi(Monoid::cyclic(2)?, caps)
}

pub fn z3(caps: Caps) -> Result<MonoidMulti> {
    monoid_multi(Monoid::cyclic(3)?, caps)
}

/// The terminal multicategory: the trivial monoid.
pub fn terminal_multi(caps: Caps) -> Result<MonoidMulti> {
    monoid_multi(Monoid::cyclic(1)?.renamed("terminal"), caps)
}

/// `{0, 1, 2}` under addition capped at 2. Closed, since its only object
/// has `ev = 0`; `0` is a unit and `1` is not.
pub fn nat2(caps: Caps) -> Result<MonoidMulti> {
    monoid_multi(Monoid::saturating(2)?, caps)
}

/// `nat2` with `ev = 1`: `φ` adds 1 and is neither injective nor
/// surjective.
pub fn broken_ev(caps: Caps) -> Result<MonoidMulti> {
    let mut cm = monoid_multi_with_ev(Monoid::saturating(2)?, 1, caps)?;
    cm.m = cm.m.named("broken-ev");
    Ok(cm)
}

/// The chain `0 < ... < n-1` under meet with Heyting implication as
/// internal hom.
pub fn meet_multi(n: usize, caps: Caps) -> Result<MeetMulti> {
    let chain = MeetSemilattice::chain(n);
    let imp = |x: usize, z: usize| if x <= z { n - 1 } else { z };
    let name = chain.name.clone();
    let m = Widehat::new(chain, &caps.budget)?.named(&name);
    let mut w = ClosednessWitness::default();
    for x in 0..n {
        for z in 0..n {
            let h = imp(x, z);
            w.hom_obj.insert((x, z), h);
            let src = m.base.meet[x][h];
            w.ev.insert((x, z), m.wrap(vec![x, h], (src, z))?);
        }
    }
    Ok(ClosedMulti::new(m, w, caps))
}

pub fn meet_unit(n: usize) -> UnitWitness<usize, HatMor<usize, (usize, usize)>> {
    UnitWitness {
        unit: n - 1,
        u: HatMor {
            sources: Vec::new(),
            target: n - 1,
            mor: (n - 1, n - 1),
        },
    }
}

/// `{0, 1, 2}` under capped addition as a discrete monoidal category. The
/// witness takes the least `H` with `X + H = Z` and omits pairs with none;
/// no choice makes `φ` bijective.
pub fn discrete_nat(caps: Caps) -> Result<DiscreteMulti> {
    let base = DiscreteMonoid::from_monoid(&Monoid::saturating(2)?);
    let m = Widehat::new(base, &caps.budget)?.named("discrete-nat2");
    let mut w = ClosednessWitness::default();
    let objs = m.base.objects()?;
    for &x in &objs {
        for &z in &objs {
            if let Some(&h) = objs.iter().find(|&&h| m.base.table[x][h] == Some(z)) {
                w.hom_obj.insert((x, z), h);
                w.ev.insert((x, z), m.wrap(vec![x, h], z)?);
            }
        }
    }
    Ok(ClosedMulti::new(m, w, caps))
}

/// The tabulated `Z/2` multicategory with `(s)·s` mis-set to `s`.
pub fn broken_multi_compose(caps: &Caps) -> Result<TabularMulticategory> {
    let z2 = Widehat::new(Monoid::cyclic(2)?, &caps.budget)?;
    let mut t = tabularize_multi(&z2, caps, "broken-multi-compose")?.table;
    let x = t.obj_by_name("*")?;
    let s1 = t
        .hom(&[x], &x)?
        .into_iter()
        .find(|&f| t.mor_name(f).starts_with('s'))
        .ok_or_else(|| Error::Malformed("no unary s".into()))?;
    t.set_compose(vec![s1], s1, s1);
    Ok(t)
}

/// The multifunctor of a cyclic group sending `x: *^k -> *` to
/// `map(x) + (1-k)·c`, where `map` is an automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidEndo {
    pub name: String,
    pub map: Vec<usize>,
    pub shift: usize,
    pub modulus: usize,
}

impl MonoidEndo {
    pub fn identity(n: usize) -> MonoidEndo {
        MonoidEndo {
            name: "identity".into(),
            map: (0..n).collect(),
            shift: 0,
            modulus: n,
        }
    }

    /// `x ↦ -x`.
    pub fn inversion(n: usize) -> MonoidEndo {
        MonoidEndo {
            name: "inversion".into(),
            map: (0..n).map(|a| (n - a) % n).collect(),
            shift: 0,
            modulus: n,
        }
    }

    /// `x ↦ x + (1-k)·c` on arity `k`.
    pub fn twisted(n: usize, c: usize) -> MonoidEndo {
        MonoidEndo {
            name: format!("twisted{c}"),
            map: (0..n).collect(),
            shift: c % n,
            modulus: n,
        }
    }

    /// `(G∘F)` as a single endomorphism: first `self`, then `g`.
    pub fn then(&self, g: &MonoidEndo) -> MonoidEndo {
        let n = self.modulus;
        MonoidEndo {
            name: format!("{};{}", self.name, g.name),
            map: self.map.iter().map(|&a| g.map[a]).collect(),
            shift: (g.map[self.shift] + g.shift) % n,
            modulus: n,
        }
    }

    fn image(&self, k: usize, x: usize) -> usize {
        let n = self.modulus;
        let coeff = (n + 1 - k % n) % n;
        (self.map[x] + coeff * self.shift) % n
    }
}

impl MultiFunctor<Widehat<Monoid>, Widehat<Monoid>> for MonoidEndo {
    fn obj(&self, _: &()) -> Result<()> {
        Ok(())
    }
    fn mor(&self, f: &MonoidMor) -> Result<MonoidMor> {
        if f.mor >= self.modulus {
            return Err(Error::Mismatch(format!("{} is outside Z/{}", f.mor, self.modulus)));
        }
        Ok(HatMor {
            sources: f.sources.clone(),
            target: (),
            mor: self.image(f.sources.len(), f.mor),
        })
    }
}

/// The multinatural transformation `id -> twisted(c)` with component `c`.
pub fn shift_component(c: usize) -> impl Fn(&()) -> Result<MonoidMor> {
    move |_| {
        Ok(HatMor {
            sources: vec![()],
            target: (),
            mor: c,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_multi::{check_closedness, check_unit_object, find_unit_object, verify_internal_lemmas};
    use crate::multicat::{check_multicategory_axioms, check_multifunctor, check_multinat, FnMultiNat, IdMulti};

    fn closed_suite<M: Multicategory>(cm: &ClosedMulti<M>, uw: &UnitWitness<M::Obj, M::Mor>) {
        let r = check_multicategory_axioms(&cm.m, &cm.caps).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = check_closedness(cm).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = verify_internal_lemmas(cm).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = check_unit_object(cm, uw).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn positive_multicategories_pass() {
        let caps = Caps::default();
        closed_suite(&z2(caps).unwrap(), &monoid_unit(0));
        closed_suite(&z3(caps).unwrap(), &monoid_unit(0));
        closed_suite(&terminal_multi(caps).unwrap(), &monoid_unit(0));
        closed_suite(&nat2(caps).unwrap(), &monoid_unit(0));
        closed_suite(&meet_multi(2, caps).unwrap(), &meet_unit(2));
    }

    #[test]
    fn z2_curry_is_group_division() {
        let cm = z2(Caps::default()).unwrap();
        // φ(g) = g + e, so ⟨f⟩ = f at every arity
        for n in 1..=3 {
            for f in cm.m.hom(&vec![(); n], &()).unwrap() {
                assert_eq!(cm.bracket(&f).unwrap().mor, f.mor);
            }
        }
    }

    #[test]
    fn unit_candidates() {
        let cm = z2(Caps::default()).unwrap();
        assert_eq!(find_unit_object(&cm).unwrap(), monoid_unit(0));
        // s is also a unit: units are unique only up to isomorphism
        assert!(check_unit_object(&cm, &monoid_unit(1)).unwrap().passed());
        let n = nat2(Caps::default()).unwrap();
        let r = check_unit_object(&n, &monoid_unit(1)).unwrap();
        assert_eq!(r.failed_checks(), vec!["unit.und-u-iso", "unit.bar-bijective"]);
    }

    #[test]
    fn endomorphisms_are_multifunctors() {
        let caps = Caps::default();
        for n in [2, 3] {
            let cm = monoid_multi(Monoid::cyclic(n).unwrap(), caps).unwrap();
            for c in 0..n {
                for f in [MonoidEndo::inversion(n), MonoidEndo::twisted(n, c), MonoidEndo::identity(n)] {
                    let r = check_multifunctor(&cm.m, &cm.m, &f, &caps).unwrap();
                    assert!(r.passed(), "{} {}", f.name, r.to_text());
                }
            }
        }
        let cm = z2(caps).unwrap();
        let id = MonoidEndo::identity(2);
        let r = check_multinat(&cm.m, &cm.m, &IdMulti, &MonoidEndo::twisted(2, 1), &FnMultiNat(shift_component(1)), &caps)
            .unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = check_multinat(&cm.m, &cm.m, &id, &MonoidEndo::twisted(2, 1), &FnMultiNat(shift_component(0)), &caps)
            .unwrap();
        assert_eq!(r.failed_checks(), vec!["multinat.equation"]);
    }

    #[test]
    fn fixtures_fail() {
        let caps = Caps::default();
        let r = check_closedness(&discrete_nat(caps).unwrap()).unwrap();
        assert!(r.failed_checks().contains(&"closed.phi-bijective"));
        let r = verify_internal_lemmas(&broken_ev(caps).unwrap()).unwrap();
        assert_eq!(r.first_failure().unwrap().check, "Lemma aux (a)");
        let r = check_multicategory_axioms(&broken_multi_compose(&caps).unwrap(), &caps).unwrap();
        assert_eq!(r.failed_checks(), vec!["multi.associativity"]);
    }
}
