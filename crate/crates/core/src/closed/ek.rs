//! The Eilenberg–Kelly form of a closed category: a basic functor into sets
//! with `C ∘ und(-,-)` equal to the hom-set functor. Every closed category
//! `V` is isomorphic to one, namely `W = E_* und V`.

use std::collections::BTreeMap;
use std::fmt;

use super::finset::{FinSet, SetMor, SetObj, STAR};
use super::{gamma, AsFunctor, GammaCache, ClosedCategory, ClosedFunctor};
use crate::budget::SizeBudget;
use crate::category::{all_morphisms, check_functor, Category, Functor};
use crate::error::{Error, Result};
use crate::hf::Hf;
use crate::report::{Check, Report};

/// A closed category with a basic functor into finite sets.
pub trait EkClosed: ClosedCategory {
    fn basic_obj(&self, x: &Self::Obj) -> Result<SetObj>;
    fn basic_mor(&self, f: &Self::Mor) -> Result<SetMor>;
    /// The distinguished element of the basic set of `𝟙`.
    fn basic_unit(&self) -> Result<Hf>;
}

impl EkClosed for FinSet {
    fn basic_obj(&self, x: &SetObj) -> Result<SetObj> {
        Ok(x.clone())
    }
    fn basic_mor(&self, f: &SetMor) -> Result<SetMor> {
        Ok(f.clone())
    }
    fn basic_unit(&self) -> Result<Hf> {
        Ok(Hf::atom(STAR))
    }
}

/// The basic functor of an EK category, as an ordinary functor into sets.
pub struct BasicFunctor<'a, C>(pub &'a C);

impl<'a, C: EkClosed> Functor<C, FinSet> for BasicFunctor<'a, C> {
    fn obj(&self, x: &C::Obj) -> Result<SetObj> {
        self.0.basic_obj(x)
    }
    fn mor(&self, f: &C::Mor) -> Result<SetMor> {
        self.0.basic_mor(f)
    }
}

/// CC0 on objects and morphisms, and CC5'.
pub fn check_ek_axioms<C: EkClosed>(c: &C, budget: &SizeBudget) -> Result<Report> {
    let objs = budget.objects(c.objects()?)?;
    let homs = all_morphisms(c, budget)?;
    let mut report = Report::new("EK axioms");

    let mut cc0o = Check::new("CC0.objects", "CC0");
    for x in &objs {
        for y in &objs {
            let r = (|| {
                let basic = c.basic_obj(&c.hom_obj(x, y)?)?.elements(budget)?;
                let mut keys = Vec::new();
                for f in budget.hom(c.hom(x, y)?)? {
                    keys.push(c.mor_key(&f)?);
                }
                keys.sort();
                let mut basic = basic;
                basic.sort();
                Ok(keys == basic)
            })();
            cc0o.record_result(r, || format!("X={}, Y={}", c.show_obj(x), c.show_obj(y)))?;
        }
    }
    report.push(cc0o.finish());

    let mut cc0m = Check::new("CC0.morphisms", "CC0");
    for (a, b, fs) in &homs {
        for (p, q, gs) in &homs {
            // f: a -> b acts contravariantly on und(b, p); g: p -> q covariantly
            let hs = budget.hom(c.hom(b, p)?)?;
            for f in fs {
                for g in gs {
                    let r = (|| {
                        let action = c.basic_mor(&c.hom_mor(f, g)?)?;
                        for h in &hs {
                            let lhs = action.apply(&c.mor_key(h)?, budget)?;
                            let rhs = c.mor_key(&c.compose(&c.compose(f, h)?, g)?)?;
                            if lhs != rhs {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    })();
                    cc0m.record_result(r, || {
                        format!("f={}, g={}", c.show_mor(f), c.show_mor(g))
                    })?;
                }
            }
            let _ = (a, q);
        }
    }
    report.push(cc0m.finish());

    let mut cc5 = Check::new("CC5'", "CC5'");
    for x in &objs {
        let r = (|| {
            let image = c.basic_mor(&c.j(x)?)?.apply(&c.basic_unit()?, budget)?;
            Ok(image == c.mor_key(&c.identity(x)?)?)
        })();
        cc5.record_result(r, || format!("X={}", c.show_obj(x)))?;
    }
    report.push(cc5.finish());
    Ok(report)
}

fn point_keys<C: ClosedCategory>(c: &C, x: &C::Obj, budget: &SizeBudget) -> Result<SetObj> {
    let mut keys = Vec::new();
    for h in budget.hom(c.hom(&c.unit(), x)?)? {
        keys.push(c.mor_key(&h)?);
    }
    Ok(SetObj::finite(keys))
}

/// The closed functor `E = (V(𝟙,-), ê, e⁰): V -> sets`.
pub struct EFunctor<'a, C: ClosedCategory> {
    pub source: &'a C,
    pub sets: &'a FinSet,
    gammas: GammaCache<C>,
}

impl<'a, C: ClosedCategory> EFunctor<'a, C> {
    pub fn new(source: &'a C, sets: &'a FinSet) -> Self {
        EFunctor {
            source,
            sets,
            gammas: GammaCache::default(),
        }
    }

    fn budget(&self) -> &SizeBudget {
        &self.sets.budget
    }
}

impl<'a, C: ClosedCategory> ClosedFunctor<C, FinSet> for EFunctor<'a, C> {
    fn obj(&self, x: &C::Obj) -> Result<SetObj> {
        point_keys(self.source, x, self.budget())
    }

    /// `h ↦ h·f`.
    fn mor(&self, f: &C::Mor) -> Result<SetMor> {
        let c = self.source;
        let (x, y) = (c.dom(f), c.cod(f));
        let mut table = BTreeMap::new();
        for h in self.budget().hom(c.hom(&c.unit(), &x)?)? {
            table.insert(c.mor_key(&h)?, c.mor_key(&c.compose(&h, f)?)?);
        }
        Ok(SetMor::table(self.obj(&x)?, self.obj(&y)?, table))
    }

    /// `g ↦ (h ↦ h·γ⁻¹(g))`.
    fn hat(&self, x: &C::Obj, y: &C::Obj) -> Result<SetMor> {
        let c = self.source;
        let (ex, ey) = (self.obj(x)?, self.obj(y)?);
        let hx = self.budget().hom(c.hom(&c.unit(), x)?)?;
        let mut table = BTreeMap::new();
        for g in self.budget().hom(c.hom(&c.unit(), &c.hom_obj(x, y)?)?)? {
            let f = self.gammas.inverse(c, x, y, &g)?;
            let mut inner = BTreeMap::new();
            for h in &hx {
                inner.insert(c.mor_key(h)?, c.mor_key(&c.compose(h, &f)?)?);
            }
            table.insert(c.mor_key(&g)?, Hf::from_map(inner));
        }
        let dom = self.obj(&c.hom_obj(x, y)?)?;
        Ok(SetMor::table(dom, self.sets.hom_obj(&ex, &ey)?, table))
    }

    /// `* ↦ 1_𝟙`.
    fn zero(&self) -> Result<SetMor> {
        let c = self.source;
        let one = c.mor_key(&c.identity(&c.unit())?)?;
        Ok(SetMor::table(
            SetObj::unit(),
            self.obj(&c.unit())?,
            [(Hf::atom(STAR), one)].into(),
        ))
    }
}

/// A morphism `X -> Y` of `W`: a point `𝟙 -> und(X,Y)` of `V`.
#[derive(Clone)]
pub struct WMor<O, M> {
    pub src: O,
    pub tgt: O,
    pub point: M,
}

impl<O, M: fmt::Debug> fmt::Debug for WMor<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}>", self.point)
    }
}

/// `W = E_* und V`. Objects are those of `V`, `W(X,Y) = V(𝟙, und(X,Y))`,
/// and the basic functor is `X ↦ V(𝟙,X)`.
pub struct EkNormalized<'a, C: ClosedCategory> {
    pub base: &'a C,
    pub budget: SizeBudget,
    gammas: GammaCache<C>,
}

/// Builds `W` over `V`; [`GammaIso`] is the comparison isomorphism.
pub fn ek_normalize<'a, C: ClosedCategory>(c: &'a C, budget: &SizeBudget) -> EkNormalized<'a, C> {
    EkNormalized {
        base: c,
        budget: *budget,
        gammas: GammaCache::default(),
    }
}

impl<'a, C: ClosedCategory> EkNormalized<'a, C> {
    pub fn ungamma(&self, x: &C::Obj, y: &C::Obj, g: &C::Mor) -> Result<C::Mor> {
        self.gammas.inverse(self.base, x, y, g)
    }

    /// `γ: V(X,Y) -> W(X,Y)`.
    pub fn lift(&self, f: &C::Mor) -> Result<WMor<C::Obj, C::Mor>> {
        let c = self.base;
        Ok(WMor {
            src: c.dom(f),
            tgt: c.cod(f),
            point: gamma(c, f)?,
        })
    }

    /// `γ⁻¹: W(X,Y) -> V(X,Y)`.
    pub fn lower(&self, f: &WMor<C::Obj, C::Mor>) -> Result<C::Mor> {
        self.ungamma(&f.src, &f.tgt, &f.point)
    }
}

impl<'a, C: ClosedCategory> Category for EkNormalized<'a, C> {
    type Obj = C::Obj;
    type Mor = WMor<C::Obj, C::Mor>;

    fn objects(&self) -> Result<Vec<C::Obj>> {
        self.base.objects()
    }

    fn objects_complete(&self) -> bool {
        self.base.objects_complete()
    }

    fn hom(&self, x: &C::Obj, y: &C::Obj) -> Result<Vec<Self::Mor>> {
        let c = self.base;
        let points = self.budget.hom(c.hom(&c.unit(), &c.hom_obj(x, y)?)?)?;
        Ok(points
            .into_iter()
            .map(|p| WMor {
                src: x.clone(),
                tgt: y.clone(),
                point: p,
            })
            .collect())
    }

    fn dom(&self, f: &Self::Mor) -> C::Obj {
        f.src.clone()
    }

    fn cod(&self, f: &Self::Mor) -> C::Obj {
        f.tgt.clone()
    }

    fn identity(&self, x: &C::Obj) -> Result<Self::Mor> {
        Ok(WMor {
            src: x.clone(),
            tgt: x.clone(),
            point: self.base.j(x)?,
        })
    }

    /// `(f, g) ↦ f·γ⁻¹(g·L^X_{YZ})`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        let c = self.base;
        if f.tgt != g.src {
            return Err(Error::Mismatch(format!(
                "cannot compose {f:?} then {g:?} in W"
            )));
        }
        let (x, y, z) = (&f.src, &f.tgt, &g.tgt);
        let gl = c.compose(&g.point, &c.l(x, y, z)?)?;
        let inner = self.ungamma(&c.hom_obj(x, y)?, &c.hom_obj(x, z)?, &gl)?;
        Ok(WMor {
            src: x.clone(),
            tgt: z.clone(),
            point: c.compose(&f.point, &inner)?,
        })
    }

    fn mor_key(&self, f: &Self::Mor) -> Result<Hf> {
        self.base.mor_key(&f.point)
    }

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        Ok(f.src == g.src && f.tgt == g.tgt && self.base.mor_eq(&f.point, &g.point)?)
    }

    fn show_obj(&self, x: &C::Obj) -> String {
        self.base.show_obj(x)
    }

    fn show_mor(&self, f: &Self::Mor) -> String {
        format!("<{}>", self.base.show_mor(&f.point))
    }
}

impl<'a, C: ClosedCategory> ClosedCategory for EkNormalized<'a, C> {
    fn unit(&self) -> C::Obj {
        self.base.unit()
    }

    fn hom_obj(&self, x: &C::Obj, y: &C::Obj) -> Result<C::Obj> {
        self.base.hom_obj(x, y)
    }

    /// `γ(und(γ⁻¹f, γ⁻¹g))`.
    fn hom_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.lift(&self.base.hom_mor(&self.lower(f)?, &self.lower(g)?)?)
    }

    fn i(&self, x: &C::Obj) -> Result<Self::Mor> {
        self.lift(&self.base.i(x)?)
    }

    fn i_inv(&self, x: &C::Obj) -> Result<Self::Mor> {
        self.lift(&self.base.i_inv(x)?)
    }

    fn j(&self, x: &C::Obj) -> Result<Self::Mor> {
        self.lift(&self.base.j(x)?)
    }

    fn l(&self, x: &C::Obj, y: &C::Obj, z: &C::Obj) -> Result<Self::Mor> {
        self.lift(&self.base.l(x, y, z)?)
    }
}

impl<'a, C: ClosedCategory> EkClosed for EkNormalized<'a, C> {
    fn basic_obj(&self, x: &C::Obj) -> Result<SetObj> {
        point_keys(self.base, x, &self.budget)
    }

    /// `h ↦ h·γ⁻¹(f)`.
    fn basic_mor(&self, f: &Self::Mor) -> Result<SetMor> {
        let c = self.base;
        let lowered = self.lower(f)?;
        let mut table = BTreeMap::new();
        for h in self.budget.hom(c.hom(&c.unit(), &f.src)?)? {
            table.insert(c.mor_key(&h)?, c.mor_key(&c.compose(&h, &lowered)?)?);
        }
        Ok(SetMor::table(
            self.basic_obj(&f.src)?,
            self.basic_obj(&f.tgt)?,
            table,
        ))
    }

    fn basic_unit(&self) -> Result<Hf> {
        let c = self.base;
        c.mor_key(&c.identity(&c.unit())?)
    }
}

/// The closed isomorphism `(Id, γ, 1, 1): V -> W`.
pub struct GammaIso<'w, 'a, C: ClosedCategory>(pub &'w EkNormalized<'a, C>);

impl<'w, 'a, C: ClosedCategory> ClosedFunctor<C, EkNormalized<'a, C>> for GammaIso<'w, 'a, C> {
    fn obj(&self, x: &C::Obj) -> Result<C::Obj> {
        Ok(x.clone())
    }
    fn mor(&self, f: &C::Mor) -> Result<WMor<C::Obj, C::Mor>> {
        self.0.lift(f)
    }
    fn hat(&self, x: &C::Obj, y: &C::Obj) -> Result<WMor<C::Obj, C::Mor>> {
        self.0.identity(&self.0.base.hom_obj(x, y)?)
    }
    fn zero(&self) -> Result<WMor<C::Obj, C::Mor>> {
        self.0.identity(&self.0.base.unit())
    }
}

/// `γ: V -> W` is an isomorphism of categories: a functor, the identity on
/// objects, and bijective on every hom-set.
pub fn check_gamma_iso<C: ClosedCategory>(
    c: &C,
    w: &EkNormalized<'_, C>,
    budget: &SizeBudget,
) -> Result<Report> {
    let mut report = Report::new("γ as an isomorphism V -> W");
    let iso = GammaIso(w);
    for mut item in check_functor(c, w, &AsFunctor(&iso), budget)?.items {
        item.check = format!("gamma.{}", item.check);
        report.push(item);
    }
    let objs = budget.objects(c.objects()?)?;
    let mut bij = Check::new("gamma.hom-bijection", "CC5");
    for x in &objs {
        for y in &objs {
            let r = (|| {
                let mut images = Vec::new();
                for f in budget.hom(c.hom(x, y)?)? {
                    images.push(w.mor_key(&w.lift(&f)?)?);
                }
                let mut points = Vec::new();
                for p in w.hom(x, y)? {
                    points.push(w.mor_key(&p)?);
                }
                images.sort();
                images.dedup();
                points.sort();
                Ok(images == points)
            })();
            bij.record_result(r, || format!("X={}, Y={}", c.show_obj(x), c.show_obj(y)))?;
        }
    }
    report.push(bij.finish());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::check_cf_axioms;

    #[test]
    fn finset_is_already_ek() {
        let c = FinSet::new(2, SizeBudget::default()).unwrap();
        let r = check_ek_axioms(&c, &c.budget).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn e_functor_on_finset_passes() {
        let c = FinSet::new(2, SizeBudget::default()).unwrap();
        let e = EFunctor::new(&c, &c);
        let x = SetObj::finite([Hf::atom("a"), Hf::atom(STAR)]);
        assert_eq!(e.obj(&x).unwrap().card(), 2);
        let r = check_cf_axioms(&c, &c, &e, &c.budget).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn w_over_finset_is_ek_and_isomorphic() {
        let c = FinSet::new(2, SizeBudget::default()).unwrap();
        let w = ek_normalize(&c, &c.budget);
        let r = check_gamma_iso(&c, &w, &c.budget).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = check_ek_axioms(&w, &c.budget).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
