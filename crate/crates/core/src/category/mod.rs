//! Categories, functors and natural transformations with decidable equality.

mod tabular;

pub use tabular::{tabularize, MorId, ObjId, TabularCategory, Tabularized};
pub(crate) use tabular::check_name;

use std::fmt::Debug;
use std::hash::Hash;

use crate::budget::SizeBudget;
use crate::error::{Error, Result};
use crate::hf::Hf;
use crate::report::{Check, Report};

/// A category whose hom-sets can be enumerated on demand.
///
/// Composition is written in diagrammatic order: `compose(f, g)` is "first
/// `f`, then `g`".
pub trait Category {
    type Obj: Clone + Ord + Hash + Debug;
    type Mor: Clone + Debug;

    /// Objects in canonical order. For lazy categories this is the sample
    /// of test objects allowed by the budget.
    fn objects(&self) -> Result<Vec<Self::Obj>>;

    /// Whether [`Category::objects`] lists every object.
    fn objects_complete(&self) -> bool {
        true
    }

    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Vec<Self::Mor>>;
    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Result<Self::Mor>;
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// Canonical encoding of a morphism: equal keys iff equal morphisms
    /// within a hom-set.
    fn mor_key(&self, f: &Self::Mor) -> Result<Hf>;

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        if self.dom(f) != self.dom(g) || self.cod(f) != self.cod(g) {
            return Ok(false);
        }
        Ok(self.mor_key(f)? == self.mor_key(g)?)
    }

    fn show_obj(&self, x: &Self::Obj) -> String {
        format!("{x:?}")
    }

    fn show_mor(&self, f: &Self::Mor) -> String {
        format!("{f:?}")
    }
}

impl<T: Category + ?Sized> Category for &T {
    type Obj = T::Obj;
    type Mor = T::Mor;
    fn objects(&self) -> Result<Vec<T::Obj>> {
        (**self).objects()
    }
    fn objects_complete(&self) -> bool {
        (**self).objects_complete()
    }
    fn hom(&self, x: &T::Obj, y: &T::Obj) -> Result<Vec<T::Mor>> {
        (**self).hom(x, y)
    }
    fn dom(&self, f: &T::Mor) -> T::Obj {
        (**self).dom(f)
    }
    fn cod(&self, f: &T::Mor) -> T::Obj {
        (**self).cod(f)
    }
    fn identity(&self, x: &T::Obj) -> Result<T::Mor> {
        (**self).identity(x)
    }
    fn compose(&self, f: &T::Mor, g: &T::Mor) -> Result<T::Mor> {
        (**self).compose(f, g)
    }
    fn mor_key(&self, f: &T::Mor) -> Result<Hf> {
        (**self).mor_key(f)
    }
    fn mor_eq(&self, f: &T::Mor, g: &T::Mor) -> Result<bool> {
        (**self).mor_eq(f, g)
    }
    fn show_obj(&self, x: &T::Obj) -> String {
        (**self).show_obj(x)
    }
    fn show_mor(&self, f: &T::Mor) -> String {
        (**self).show_mor(f)
    }
}

/// Composes a non-empty path left to right.
pub fn compose_path<C: Category>(c: &C, path: &[&C::Mor]) -> Result<C::Mor> {
    let (first, rest) = path
        .split_first()
        .ok_or_else(|| Error::Malformed("empty composition path".into()))?;
    let mut acc = (*first).clone();
    for g in rest {
        acc = c.compose(&acc, g)?;
    }
    Ok(acc)
}

pub fn check_endpoints<C: Category>(c: &C, f: &C::Mor, x: &C::Obj, y: &C::Obj) -> Result<()> {
    if c.dom(f) != *x || c.cod(f) != *y {
        return Err(Error::Mismatch(format!(
            "{} is not a morphism {} -> {}",
            c.show_mor(f),
            c.show_obj(x),
            c.show_obj(y)
        )));
    }
    Ok(())
}

/// All morphisms between enumerated objects, grouped by (source, target).
pub fn all_morphisms<C: Category>(
    c: &C,
    budget: &SizeBudget,
) -> Result<Vec<(C::Obj, C::Obj, Vec<C::Mor>)>> {
    let objs = budget.objects(c.objects()?)?;
    let mut out = Vec::new();
    for x in &objs {
        for y in &objs {
            out.push((x.clone(), y.clone(), budget.hom(c.hom(x, y)?)?));
        }
    }
    Ok(out)
}

pub fn check_category_axioms<C: Category>(c: &C, budget: &SizeBudget) -> Result<Report> {
    let objs = budget.objects(c.objects()?)?;
    let homs = all_morphisms(c, budget)?;
    let hom_of = |x: &C::Obj, y: &C::Obj| -> &Vec<C::Mor> {
        let i = objs.iter().position(|o| o == x).unwrap();
        let j = objs.iter().position(|o| o == y).unwrap();
        &homs[i * objs.len() + j].2
    };
    let mut report = Report::new("category axioms");

    let mut typing = Check::new("cat.typing", "hom-set endpoints");
    for (x, y, fs) in &homs {
        for f in fs {
            typing.record(c.dom(f) == *x && c.cod(f) == *y, || {
                format!("{} listed in hom({}, {})", c.show_mor(f), c.show_obj(x), c.show_obj(y))
            });
        }
    }
    for x in &objs {
        let r = c.identity(x).map(|i| c.dom(&i) == *x && c.cod(&i) == *x);
        typing.record_result(r, || format!("identity of {}", c.show_obj(x)))?;
    }
    report.push(typing.finish());

    let mut left = Check::new("cat.identity-left", "identity axiom");
    let mut right = Check::new("cat.identity-right", "identity axiom");
    for (x, y, fs) in &homs {
        let ix = c.identity(x)?;
        let iy = c.identity(y)?;
        for f in fs {
            let r = c.compose(&ix, f).and_then(|h| c.mor_eq(&h, f));
            left.record_result(r, || format!("1·{}", c.show_mor(f)))?;
            let r = c.compose(f, &iy).and_then(|h| c.mor_eq(&h, f));
            right.record_result(r, || format!("{}·1", c.show_mor(f)))?;
        }
    }
    report.push(left.finish());
    report.push(right.finish());

    let mut ctyping = Check::new("cat.compose-typing", "composition lands in hom(X,Z)");
    let mut assoc = Check::new("cat.associativity", "associativity");
    for x in &objs {
        for y in &objs {
            for z in &objs {
                for f in hom_of(x, y) {
                    for g in hom_of(y, z) {
                        let fg = c.compose(f, g);
                        let r = fg.as_ref().map(|h| c.dom(h) == *x && c.cod(h) == *z).map_err(Clone::clone);
                        ctyping.record_result(r, || format!("{};{}", c.show_mor(f), c.show_mor(g)))?;
                        let Ok(fg) = fg else { continue };
                        for w in &objs {
                            for h in hom_of(z, w) {
                                let r = (|| {
                                    let l = c.compose(&fg, h)?;
                                    let gh = c.compose(g, h)?;
                                    let r = c.compose(f, &gh)?;
                                    c.mor_eq(&l, &r)
                                })();
                                assoc.record_result(r, || {
                                    format!(
                                        "f={}, g={}, h={}",
                                        c.show_mor(f),
                                        c.show_mor(g),
                                        c.show_mor(h)
                                    )
                                })?;
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(ctyping.finish());
    report.push(assoc.finish());
    Ok(report)
}

/// A functor `C -> D`.
pub trait Functor<C: Category, D: Category> {
    fn obj(&self, x: &C::Obj) -> Result<D::Obj>;
    fn mor(&self, f: &C::Mor) -> Result<D::Mor>;
}

/// A natural transformation between two functors `C -> D`.
pub trait NatTrans<C: Category, D: Category> {
    fn component(&self, x: &C::Obj) -> Result<D::Mor>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IdFunctor;

impl<C: Category> Functor<C, C> for IdFunctor {
    fn obj(&self, x: &C::Obj) -> Result<C::Obj> {
        Ok(x.clone())
    }
    fn mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(f.clone())
    }
}

/// The identity transformation on a functor `F: C -> D`.
pub struct IdNat<'a, D, F> {
    pub target: &'a D,
    pub functor: &'a F,
}

impl<'a, C: Category, D: Category, F: Functor<C, D>> NatTrans<C, D> for IdNat<'a, D, F> {
    fn component(&self, x: &C::Obj) -> Result<D::Mor> {
        self.target.identity(&self.functor.obj(x)?)
    }
}

pub fn check_functor<C: Category, D: Category, F: Functor<C, D>>(
    c: &C,
    d: &D,
    f: &F,
    budget: &SizeBudget,
) -> Result<Report> {
    let objs = budget.objects(c.objects()?)?;
    let homs = all_morphisms(c, budget)?;
    let mut report = Report::new("functor");

    let mut typing = Check::new("functor.typing", "preserves domains and codomains");
    for (x, y, ms) in &homs {
        let fx = f.obj(x)?;
        let fy = f.obj(y)?;
        for m in ms {
            let r = f.mor(m).map(|fm| d.dom(&fm) == fx && d.cod(&fm) == fy);
            typing.record_result(r, || c.show_mor(m))?;
        }
    }
    report.push(typing.finish());

    let mut ident = Check::new("functor.identity", "preserves identities");
    for x in &objs {
        let r = (|| d.mor_eq(&f.mor(&c.identity(x)?)?, &d.identity(&f.obj(x)?)?))();
        ident.record_result(r, || c.show_obj(x))?;
    }
    report.push(ident.finish());

    let mut comp = Check::new("functor.composition", "preserves composition");
    for (_, y, ms) in &homs {
        for (y2, _, ns) in &homs {
            if y != y2 {
                continue;
            }
            for m in ms {
                for n in ns {
                    let r = (|| {
                        let lhs = f.mor(&c.compose(m, n)?)?;
                        let rhs = d.compose(&f.mor(m)?, &f.mor(n)?)?;
                        d.mor_eq(&lhs, &rhs)
                    })();
                    comp.record_result(r, || format!("{};{}", c.show_mor(m), c.show_mor(n)))?;
                }
            }
        }
    }
    report.push(comp.finish());
    Ok(report)
}

/// Checks `t: F -> G` is natural: `F m · t_Y = t_X · G m` for every `m: X -> Y`.
pub fn check_natural<C, D, F, G, T>(
    c: &C,
    d: &D,
    f: &F,
    g: &G,
    t: &T,
    budget: &SizeBudget,
) -> Result<Report>
where
    C: Category,
    D: Category,
    F: Functor<C, D>,
    G: Functor<C, D>,
    T: NatTrans<C, D>,
{
    let objs = budget.objects(c.objects()?)?;
    let mut report = Report::new("natural transformation");
    let mut typing = Check::new("nat.typing", "components X: FX -> GX");
    for x in &objs {
        let r = (|| {
            let tx = t.component(x)?;
            Ok(d.dom(&tx) == f.obj(x)? && d.cod(&tx) == g.obj(x)?)
        })();
        typing.record_result(r, || c.show_obj(x))?;
    }
    report.push(typing.finish());

    let mut square = Check::new("nat.square", "naturality square");
    for (x, y, ms) in all_morphisms(c, budget)? {
        for m in &ms {
            let r = (|| {
                let lhs = d.compose(&f.mor(m)?, &t.component(&y)?)?;
                let rhs = d.compose(&t.component(&x)?, &g.mor(m)?)?;
                d.mor_eq(&lhs, &rhs)
            })();
            square.record_result(r, || format!("{} : {} -> {}", c.show_mor(m), c.show_obj(&x), c.show_obj(&y)))?;
        }
    }
    report.push(square.finish());
    Ok(report)
}
