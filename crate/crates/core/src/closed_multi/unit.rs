use super::ClosedMulti;
use crate::error::{Error, Result};
use crate::multicat::{show_sig, Multicategory};
use crate::report::{Check, Item, Report};

/// A candidate unit object `𝟙` with its nullary morphism `u: () -> 𝟙`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitWitness<O, M> {
    pub unit: O,
    pub u: M,
}

/// The inverse of `und(u;X): und(𝟙;X) -> X`, by search.
pub fn unit_iso_inverse<M: Multicategory>(
    cm: &ClosedMulti<M>,
    uw: &UnitWitness<M::Obj, M::Mor>,
    x: &M::Obj,
) -> Result<M::Mor> {
    let m = &cm.m;
    let a = cm.hom_pre(std::slice::from_ref(&uw.u), x)?;
    let h = cm.hom_obj(&uw.unit, x)?;
    let (ih, ix) = (m.identity(&h)?, m.identity(x)?);
    for n in cm.caps.budget.hom(m.hom(std::slice::from_ref(x), &h)?)? {
        if m.mor_eq(&m.compose(std::slice::from_ref(&a), &n)?, &ih)? && m.mor_eq(&m.compose(std::slice::from_ref(&n), &a)?, &ix)? {
            return Ok(n);
        }
    }
    Err(Error::NotUnique(format!(
        "und(u;{}) has no inverse",
        m.show_obj(x)
    )))
}

/// The unique `f̄: 𝟙 -> X` with `u · f̄ = f`.
pub fn bar<M: Multicategory>(cm: &ClosedMulti<M>, uw: &UnitWitness<M::Obj, M::Mor>, f: &M::Mor) -> Result<M::Mor> {
    let m = &cm.m;
    if !m.sources(f).is_empty() {
        return Err(Error::Mismatch(format!("{} is not nullary", m.show_mor(f))));
    }
    let x = m.target(f);
    let mut found = None;
    for h in cm.caps.budget.hom(m.hom(std::slice::from_ref(&uw.unit), &x)?)? {
        if m.mor_eq(&m.compose(std::slice::from_ref(&uw.u), &h)?, f)? {
            if found.is_some() {
                return Err(Error::NotUnique(format!("two morphisms h with u·h = {}", m.show_mor(f))));
            }
            found = Some(h);
        }
    }
    found.ok_or_else(|| Error::NotUnique(format!("no morphism h with u·h = {}", m.show_mor(f))))
}

/// Checks that `und(u;1)` is invertible at every object and that
/// `h ↦ u·h` is a bijection `C(𝟙;X) -> C(;X)`.
pub fn check_unit_object<M: Multicategory>(
    cm: &ClosedMulti<M>,
    uw: &UnitWitness<M::Obj, M::Mor>,
) -> Result<Report> {
    let m = &cm.m;
    let objs = cm.caps.budget.objects(m.objects()?)?;
    let mut report = Report::new(format!("unit object: {}", m.name()));
    report.push(Item::single(
        "unit.typing",
        "u: () -> 𝟙",
        m.sources(&uw.u).is_empty() && m.target(&uw.u) == uw.unit,
        format!("u = {}", m.show_mor(&uw.u)),
    ));
    let mut iso = Check::new("unit.und-u-iso", "und(u;1): und(𝟙;X) -> X is an isomorphism");
    let mut bij = Check::new("unit.bar-bijective", "every f: () -> X is u·f̄ for a unique f̄");
    for x in &objs {
        let r = match unit_iso_inverse(cm, uw, x) {
            Ok(_) => Ok(true),
            Err(Error::NotUnique(_)) => Ok(false),
            Err(e) => Err(e),
        };
        iso.record_result(r, || m.show_obj(x))?;
        let r = (|| {
            let from = cm.caps.budget.hom(m.hom(std::slice::from_ref(&uw.unit), x)?)?;
            let to = cm.caps.budget.hom(m.hom(&[], x)?)?;
            let mut keys = Vec::with_capacity(from.len());
            for h in &from {
                keys.push(m.mor_key(&m.compose(std::slice::from_ref(&uw.u), h)?)?);
            }
            let mut targets = Vec::with_capacity(to.len());
            for f in &to {
                targets.push(m.mor_key(f)?);
            }
            keys.sort();
            let n = keys.len();
            keys.dedup();
            targets.sort();
            Ok(n == keys.len() && keys == targets)
        })();
        bij.record_result(r, || show_sig(m, std::slice::from_ref(&uw.unit), x))?;
    }
    report.push(iso.finish());
    report.push(bij.finish());
    Ok(report)
}

/// The first `(𝟙, u)` in canonical order passing [`check_unit_object`].
pub fn find_unit_object<M: Multicategory>(cm: &ClosedMulti<M>) -> Result<UnitWitness<M::Obj, M::Mor>> {
    let m = &cm.m;
    for x in cm.caps.budget.objects(m.objects()?)? {
        for u in cm.caps.budget.hom(m.hom(&[], &x)?)? {
            let uw = UnitWitness { unit: x.clone(), u };
            if check_unit_object(cm, &uw)?.passed() {
                return Ok(uw);
            }
        }
    }
    Err(Error::NoUnitFound)
}
