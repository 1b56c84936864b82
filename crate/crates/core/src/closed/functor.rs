use super::{hom_post, hom_pre, ClosedCategory};
use crate::budget::SizeBudget;
use crate::category::{all_morphisms, check_functor, check_natural, Category, Functor, NatTrans};
use crate::error::{Error, Result};
use crate::report::{Check, Item, Report};

/// A closed functor `(φ, φ̂, φ⁰): C -> D`.
pub trait ClosedFunctor<C: ClosedCategory, D: ClosedCategory> {
    fn obj(&self, x: &C::Obj) -> Result<D::Obj>;
    fn mor(&self, f: &C::Mor) -> Result<D::Mor>;
    /// `φ̂_{X,Y}: φ und(X,Y) -> und(φX, φY)`.
    fn hat(&self, x: &C::Obj, y: &C::Obj) -> Result<D::Mor>;
    /// `φ⁰: 𝟙 -> φ𝟙`.
    fn zero(&self) -> Result<D::Mor>;
}

impl<C: ClosedCategory, D: ClosedCategory, F: ClosedFunctor<C, D> + ?Sized> ClosedFunctor<C, D>
    for &F
{
    fn obj(&self, x: &C::Obj) -> Result<D::Obj> {
        (**self).obj(x)
    }
    fn mor(&self, f: &C::Mor) -> Result<D::Mor> {
        (**self).mor(f)
    }
    fn hat(&self, x: &C::Obj, y: &C::Obj) -> Result<D::Mor> {
        (**self).hat(x, y)
    }
    fn zero(&self) -> Result<D::Mor> {
        (**self).zero()
    }
}

/// The underlying ordinary functor of a closed functor.
pub struct AsFunctor<'a, F>(pub &'a F);

impl<'a, C: ClosedCategory, D: ClosedCategory, F: ClosedFunctor<C, D>> Functor<C, D>
    for AsFunctor<'a, F>
{
    fn obj(&self, x: &C::Obj) -> Result<D::Obj> {
        self.0.obj(x)
    }
    fn mor(&self, f: &C::Mor) -> Result<D::Mor> {
        self.0.mor(f)
    }
}

/// `(Id, 1, 1)`.
pub struct IdClosed<'a, C>(pub &'a C);

impl<'a, C: ClosedCategory> ClosedFunctor<C, C> for IdClosed<'a, C> {
    fn obj(&self, x: &C::Obj) -> Result<C::Obj> {
        Ok(x.clone())
    }
    fn mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(f.clone())
    }
    fn hat(&self, x: &C::Obj, y: &C::Obj) -> Result<C::Mor> {
        self.0.identity(&self.0.hom_obj(x, y)?)
    }
    fn zero(&self) -> Result<C::Mor> {
        self.0.identity(&self.0.unit())
    }
}

/// `ψ ∘ φ` with `χ̂ = ψφ̂ · ψ̂` and `χ⁰ = ψ⁰ · ψφ⁰`.
pub struct ComposedClosed<'a, B, E, F, G> {
    pub mid: &'a B,
    pub target: &'a E,
    pub first: F,
    pub second: G,
}

impl<'a, C, B, E, F, G> ClosedFunctor<C, E> for ComposedClosed<'a, B, E, F, G>
where
    C: ClosedCategory,
    B: ClosedCategory,
    E: ClosedCategory,
    F: ClosedFunctor<C, B>,
    G: ClosedFunctor<B, E>,
{
    fn obj(&self, x: &C::Obj) -> Result<E::Obj> {
        self.second.obj(&self.first.obj(x)?)
    }
    fn mor(&self, f: &C::Mor) -> Result<E::Mor> {
        self.second.mor(&self.first.mor(f)?)
    }
    fn hat(&self, x: &C::Obj, y: &C::Obj) -> Result<E::Mor> {
        let inner = self.second.mor(&self.first.hat(x, y)?)?;
        let outer = self
            .second
            .hat(&self.first.obj(x)?, &self.first.obj(y)?)?;
        self.target.compose(&inner, &outer)
    }
    fn zero(&self) -> Result<E::Mor> {
        let z = self.second.mor(&self.first.zero()?)?;
        self.target.compose(&self.second.zero()?, &z)
    }
}

/// A closed functor whose every component is the unique morphism of its
/// type in the target. Exhibits isomorphisms between posetal closed
/// categories.
pub struct UniqueClosedFunctor<'a, C: ClosedCategory, D: ClosedCategory> {
    pub source: &'a C,
    pub target: &'a D,
    pub objects: Vec<(C::Obj, D::Obj)>,
}

impl<'a, C: ClosedCategory, D: ClosedCategory> UniqueClosedFunctor<'a, C, D> {
    fn unique(&self, x: &D::Obj, y: &D::Obj) -> Result<D::Mor> {
        let mut hom = self.target.hom(x, y)?;
        if hom.len() != 1 {
            return Err(Error::NotUnique(format!(
                "hom({}, {}) has {} elements",
                self.target.show_obj(x),
                self.target.show_obj(y),
                hom.len()
            )));
        }
        Ok(hom.remove(0))
    }
}

impl<'a, C: ClosedCategory, D: ClosedCategory> ClosedFunctor<C, D> for UniqueClosedFunctor<'a, C, D> {
    fn obj(&self, x: &C::Obj) -> Result<D::Obj> {
        self.objects
            .iter()
            .find(|(a, _)| a == x)
            .map(|(_, b)| b.clone())
            .ok_or_else(|| Error::Malformed(format!("object {x:?} has no image")))
    }
    fn mor(&self, f: &C::Mor) -> Result<D::Mor> {
        let x = self.obj(&self.source.dom(f))?;
        let y = self.obj(&self.source.cod(f))?;
        self.unique(&x, &y)
    }
    fn hat(&self, x: &C::Obj, y: &C::Obj) -> Result<D::Mor> {
        let a = self.obj(&self.source.hom_obj(x, y)?)?;
        let b = self.target.hom_obj(&self.obj(x)?, &self.obj(y)?)?;
        self.unique(&a, &b)
    }
    fn zero(&self) -> Result<D::Mor> {
        let b = self.obj(&self.source.unit())?;
        self.unique(&self.target.unit(), &b)
    }
}

fn prefixed(report: Report, prefix: &str) -> Vec<Item> {
    report
        .items
        .into_iter()
        .map(|mut i| {
            i.check = format!("{prefix}{}", i.check);
            i
        })
        .collect()
}

/// CF1–CF3 plus functoriality of `φ` and naturality of `φ̂`.
pub fn check_cf_axioms<C, D, F>(c: &C, d: &D, f: &F, budget: &SizeBudget) -> Result<Report>
where
    C: ClosedCategory,
    D: ClosedCategory,
    F: ClosedFunctor<C, D>,
{
    let objs = budget.objects(c.objects()?)?;
    let homs = all_morphisms(c, budget)?;
    let mut report = Report::new("closed functor axioms");
    for item in prefixed(check_functor(c, d, &AsFunctor(f), budget)?, "cf.") {
        report.push(item);
    }

    let mut nat = Check::new("cf.hat-natural", "φ̂ natural in both arguments");
    for (_, _, ms) in &homs {
        for m in ms {
            for y in &objs {
                // m: X' -> X in the first argument
                let r = (|| {
                    let (xp, x) = (c.dom(m), c.cod(m));
                    let lhs = d.compose(&f.mor(&hom_pre(c, m, y)?)?, &f.hat(&xp, y)?)?;
                    let rhs = d.compose(&f.hat(&x, y)?, &hom_pre(d, &f.mor(m)?, &f.obj(y)?)?)?;
                    d.mor_eq(&lhs, &rhs)
                })();
                nat.record_result(r, || format!("first argument {}, Y={}", c.show_mor(m), c.show_obj(y)))?;
                let r = (|| {
                    let (a, b) = (c.dom(m), c.cod(m));
                    let lhs = d.compose(&f.mor(&hom_post(c, y, m)?)?, &f.hat(y, &b)?)?;
                    let rhs = d.compose(&f.hat(y, &a)?, &hom_post(d, &f.obj(y)?, &f.mor(m)?)?)?;
                    d.mor_eq(&lhs, &rhs)
                })();
                nat.record_result(r, || format!("X={}, second argument {}", c.show_obj(y), c.show_mor(m)))?;
            }
        }
    }
    report.push(nat.finish());

    let mut cf1 = Check::new("CF1", "CF1");
    let mut cf2 = Check::new("CF2", "CF2");
    for x in &objs {
        let r = (|| {
            let lhs = d.compose(&d.compose(&f.zero()?, &f.mor(&c.j(x)?)?)?, &f.hat(x, x)?)?;
            d.mor_eq(&lhs, &d.j(&f.obj(x)?)?)
        })();
        cf1.record_result(r, || format!("X={}", c.show_obj(x)))?;
        let r = (|| {
            let fx = f.obj(x)?;
            let lhs = d.compose(&f.mor(&c.i(x)?)?, &f.hat(&c.unit(), x)?)?;
            let lhs = d.compose(&lhs, &hom_pre(d, &f.zero()?, &fx)?)?;
            d.mor_eq(&lhs, &d.i(&fx)?)
        })();
        cf2.record_result(r, || format!("X={}", c.show_obj(x)))?;
    }
    report.push(cf1.finish());
    report.push(cf2.finish());

    let mut cf3 = Check::new("CF3", "CF3");
    for x in &objs {
        for y in &objs {
            for z in &objs {
                let r = (|| {
                    let xy = c.hom_obj(x, y)?;
                    let xz = c.hom_obj(x, z)?;
                    let (fx, fy, fz) = (f.obj(x)?, f.obj(y)?, f.obj(z)?);
                    let lhs = d.compose(&f.mor(&c.l(x, y, z)?)?, &f.hat(&xy, &xz)?)?;
                    let lhs = d.compose(&lhs, &hom_post(d, &f.obj(&xy)?, &f.hat(x, z)?)?)?;
                    let rhs = d.compose(&f.hat(y, z)?, &d.l(&fx, &fy, &fz)?)?;
                    let rhs = d.compose(&rhs, &hom_pre(d, &f.hat(x, y)?, &d.hom_obj(&fx, &fz)?)?)?;
                    d.mor_eq(&lhs, &rhs)
                })();
                cf3.record_result(r, || {
                    format!("X={}, Y={}, Z={}", c.show_obj(x), c.show_obj(y), c.show_obj(z))
                })?;
            }
        }
    }
    report.push(cf3.finish());
    Ok(report)
}

/// CN1, CN2 and naturality of `η: φ -> ψ`.
pub fn check_cn_axioms<C, D, F, G, T>(
    c: &C,
    d: &D,
    f: &F,
    g: &G,
    eta: &T,
    budget: &SizeBudget,
) -> Result<Report>
where
    C: ClosedCategory,
    D: ClosedCategory,
    F: ClosedFunctor<C, D>,
    G: ClosedFunctor<C, D>,
    T: NatTrans<C, D>,
{
    let objs = budget.objects(c.objects()?)?;
    let mut report = Report::new("closed transformation axioms");
    for item in prefixed(
        check_natural(c, d, &AsFunctor(f), &AsFunctor(g), eta, budget)?,
        "cn.",
    ) {
        report.push(item);
    }
    let mut cn1 = Check::new("CN1", "CN1");
    let r = (|| {
        let lhs = d.compose(&f.zero()?, &eta.component(&c.unit())?)?;
        d.mor_eq(&lhs, &g.zero()?)
    })();
    cn1.record_result(r, || "unit".into())?;
    report.push(cn1.finish());

    let mut cn2 = Check::new("CN2", "CN2");
    for x in &objs {
        for y in &objs {
            let r = (|| {
                let gy = g.obj(y)?;
                let lhs = d.compose(&eta.component(&c.hom_obj(x, y)?)?, &g.hat(x, y)?)?;
                let lhs = d.compose(&lhs, &hom_pre(d, &eta.component(x)?, &gy)?)?;
                let rhs = d.compose(&f.hat(x, y)?, &hom_post(d, &f.obj(x)?, &eta.component(y)?)?)?;
                d.mor_eq(&lhs, &rhs)
            })();
            cn2.record_result(r, || format!("X={}, Y={}", c.show_obj(x), c.show_obj(y)))?;
        }
    }
    report.push(cn2.finish());
    Ok(report)
}

/// Componentwise `η · θ`.
pub struct VerticalNat<'a, D, S, T> {
    pub target: &'a D,
    pub first: S,
    pub second: T,
}

impl<'a, C: Category, D: Category, S: NatTrans<C, D>, T: NatTrans<C, D>> NatTrans<C, D>
    for VerticalNat<'a, D, S, T>
{
    fn component(&self, x: &C::Obj) -> Result<D::Mor> {
        self.target
            .compose(&self.first.component(x)?, &self.second.component(x)?)
    }
}

/// Horizontal composite of `η: φ -> ψ` (on `C -> B`) and `θ: φ' -> ψ'`
/// (on `B -> E`): the component at `X` is `θ_{φX} · ψ'(η_X)`.
pub struct HorizontalNat<'a, B, E, Phi, PsiPrime, S, T> {
    pub mid: &'a B,
    pub target: &'a E,
    pub phi: Phi,
    pub psi_prime: PsiPrime,
    pub inner: S,
    pub outer: T,
}

impl<'a, C, B, E, Phi, PsiPrime, S, T> NatTrans<C, E> for HorizontalNat<'a, B, E, Phi, PsiPrime, S, T>
where
    C: Category,
    B: Category,
    E: Category,
    Phi: Functor<C, B>,
    PsiPrime: Functor<B, E>,
    S: NatTrans<C, B>,
    T: NatTrans<B, E>,
{
    fn component(&self, x: &C::Obj) -> Result<E::Mor> {
        let a = self.outer.component(&self.phi.obj(x)?)?;
        let b = self.psi_prime.mor(&self.inner.component(x)?)?;
        self.target.compose(&a, &b)
    }
}

/// Compares two closed functors component by component on every enumerated
/// object and morphism.
pub fn closed_functors_equal<C, D, F, G>(
    c: &C,
    d: &D,
    f: &F,
    g: &G,
    budget: &SizeBudget,
) -> Result<Report>
where
    C: ClosedCategory,
    D: ClosedCategory,
    F: ClosedFunctor<C, D>,
    G: ClosedFunctor<C, D>,
{
    let objs = budget.objects(c.objects()?)?;
    let mut report = Report::new("closed functor equality");
    let mut obj = Check::new("eq.objects", "same object map");
    for x in &objs {
        let r = (|| Ok(f.obj(x)? == g.obj(x)?))();
        obj.record_result(r, || c.show_obj(x))?;
    }
    report.push(obj.finish());
    let mut mor = Check::new("eq.morphisms", "same morphism map");
    for (_, _, ms) in all_morphisms(c, budget)? {
        for m in &ms {
            let r = (|| d.mor_eq(&f.mor(m)?, &g.mor(m)?))();
            mor.record_result(r, || c.show_mor(m))?;
        }
    }
    report.push(mor.finish());
    let mut hat = Check::new("eq.hat", "same φ̂");
    for x in &objs {
        for y in &objs {
            let r = (|| d.mor_eq(&f.hat(x, y)?, &g.hat(x, y)?))();
            hat.record_result(r, || format!("X={}, Y={}", c.show_obj(x), c.show_obj(y)))?;
        }
    }
    report.push(hat.finish());
    let r = (|| d.mor_eq(&f.zero()?, &g.zero()?))();
    let mut zero = Check::new("eq.zero", "same φ⁰");
    zero.record_result(r, || "φ⁰".into())?;
    report.push(zero.finish());
    Ok(report)
}

/// Closed-functor axioms plus: bijective on the enumerated objects, bijective
/// on every hom-set, and `φ̂`, `φ⁰` invertible.
pub fn check_closed_iso<C, D, F>(c: &C, d: &D, f: &F, budget: &SizeBudget) -> Result<Report>
where
    C: ClosedCategory,
    D: ClosedCategory,
    F: ClosedFunctor<C, D>,
{
    let mut report = check_cf_axioms(c, d, f, budget)?;
    report.subject = "closed isomorphism".into();
    let objs = budget.objects(c.objects()?)?;
    let dobjs = budget.objects(d.objects()?)?;
    let mut images = Vec::new();
    for x in &objs {
        images.push(f.obj(x)?);
    }
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let mut dsorted = dobjs.clone();
    dsorted.sort();
    report.push(Item::single(
        "iso.objects",
        "bijective on objects",
        sorted.len() == images.len() && sorted == dsorted,
        "object map is not a bijection onto the enumerated objects",
    ));

    let mut homs = Check::new("iso.hom-sets", "bijective on hom-sets");
    for x in &objs {
        for y in &objs {
            let r = (|| {
                let src = budget.hom(c.hom(x, y)?)?;
                let tgt = budget.hom(d.hom(&f.obj(x)?, &f.obj(y)?)?)?;
                if src.len() != tgt.len() {
                    return Ok(false);
                }
                let mut keys = Vec::new();
                for m in &src {
                    keys.push(d.mor_key(&f.mor(m)?)?);
                }
                let mut tkeys = Vec::new();
                for m in &tgt {
                    tkeys.push(d.mor_key(m)?);
                }
                keys.sort();
                keys.dedup();
                tkeys.sort();
                Ok(keys == tkeys)
            })();
            homs.record_result(r, || format!("X={}, Y={}", c.show_obj(x), c.show_obj(y)))?;
        }
    }
    report.push(homs.finish());

    let mut inv = Check::new("iso.structure-maps", "φ̂ and φ⁰ invertible");
    for x in &objs {
        for y in &objs {
            let r = (|| is_iso(d, &f.hat(x, y)?))();
            inv.record_result(r, || format!("φ̂ at X={}, Y={}", c.show_obj(x), c.show_obj(y)))?;
        }
    }
    let r = (|| is_iso(d, &f.zero()?))();
    inv.record_result(r, || "φ⁰".into())?;
    report.push(inv.finish());
    Ok(report)
}

fn is_iso<D: Category>(d: &D, m: &D::Mor) -> Result<bool> {
    let (a, b) = (d.dom(m), d.cod(m));
    let ia = d.identity(&a)?;
    let ib = d.identity(&b)?;
    for n in d.hom(&b, &a)? {
        if d.mor_eq(&d.compose(m, &n)?, &ia)? && d.mor_eq(&d.compose(&n, m)?, &ib)? {
            return Ok(true);
        }
    }
    Ok(false)
}
