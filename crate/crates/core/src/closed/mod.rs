//! Closed categories: the internal hom, the transformations `i`, `j`, `L`,
//! the bijection `γ`, closed functors and closed transformations.

mod ek;
mod finset;
mod functor;
mod tabular;

pub use ek::{
    check_ek_axioms, check_gamma_iso, ek_normalize, BasicFunctor, EFunctor, EkClosed, EkNormalized, GammaIso, WMor,
};
pub use finset::{FinSet, SetMor, SetObj, STAR};
pub use functor::{
    check_cf_axioms, check_closed_iso, check_cn_axioms, closed_functors_equal, AsFunctor,
    ClosedFunctor, ComposedClosed, HorizontalNat, IdClosed, UniqueClosedFunctor, VerticalNat,
};
pub use tabular::{tabularize_closed, TabularClosed, TabularClosedFunctor};

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::budget::SizeBudget;
use crate::hf::Hf;
use crate::category::{all_morphisms, check_endpoints, compose_path, Category};
use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// A closed category `(C, und(-,-), 𝟙, i, j, L)`.
pub trait ClosedCategory: Category {
    fn unit(&self) -> Self::Obj;

    /// The internal hom object `und(X,Y)`.
    fn hom_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj>;

    /// `und(f,g): und(X,Y) -> und(X',Y')` for `f: X' -> X` and `g: Y -> Y'`.
    fn hom_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// `i_X: X -> und(𝟙,X)`.
    fn i(&self, x: &Self::Obj) -> Result<Self::Mor>;
    fn i_inv(&self, x: &Self::Obj) -> Result<Self::Mor>;

    /// `j_X: 𝟙 -> und(X,X)`.
    fn j(&self, x: &Self::Obj) -> Result<Self::Mor>;

    /// `L^X_{YZ}: und(Y,Z) -> und(und(X,Y), und(X,Z))`.
    fn l(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor>;
}

impl<T: ClosedCategory + ?Sized> ClosedCategory for &T {
    fn unit(&self) -> T::Obj {
        (**self).unit()
    }
    fn hom_obj(&self, x: &T::Obj, y: &T::Obj) -> Result<T::Obj> {
        (**self).hom_obj(x, y)
    }
    fn hom_mor(&self, f: &T::Mor, g: &T::Mor) -> Result<T::Mor> {
        (**self).hom_mor(f, g)
    }
    fn i(&self, x: &T::Obj) -> Result<T::Mor> {
        (**self).i(x)
    }
    fn i_inv(&self, x: &T::Obj) -> Result<T::Mor> {
        (**self).i_inv(x)
    }
    fn j(&self, x: &T::Obj) -> Result<T::Mor> {
        (**self).j(x)
    }
    fn l(&self, x: &T::Obj, y: &T::Obj, z: &T::Obj) -> Result<T::Mor> {
        (**self).l(x, y, z)
    }
}

/// `und(f,1): und(X,Y) -> und(X',Y)` for `f: X' -> X`.
pub fn hom_pre<C: ClosedCategory>(c: &C, f: &C::Mor, y: &C::Obj) -> Result<C::Mor> {
    c.hom_mor(f, &c.identity(y)?)
}

/// `und(1,g): und(X,Y) -> und(X,Y')` for `g: Y -> Y'`.
pub fn hom_post<C: ClosedCategory>(c: &C, x: &C::Obj, g: &C::Mor) -> Result<C::Mor> {
    c.hom_mor(&c.identity(x)?, g)
}

/// `γ(f) = j_X · und(1,f): 𝟙 -> und(X,Y)` for `f: X -> Y`.
pub fn gamma<C: ClosedCategory>(c: &C, f: &C::Mor) -> Result<C::Mor> {
    let x = c.dom(f);
    c.compose(&c.j(&x)?, &hom_post(c, &x, f)?)
}

/// The unique `f: X -> Y` with `γ(f) = g`, by exhaustive search.
pub fn gamma_inverse<C: ClosedCategory>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
    g: &C::Mor,
) -> Result<C::Mor> {
    let mut found = None;
    for f in c.hom(x, y)? {
        if c.mor_eq(&gamma(c, &f)?, g)? {
            if found.is_some() {
                return Err(Error::NotBijective(format!(
                    "two preimages of {} under γ in hom({}, {})",
                    c.show_mor(g),
                    c.show_obj(x),
                    c.show_obj(y)
                )));
            }
            found = Some(f);
        }
    }
    found.ok_or_else(|| {
        Error::NotBijective(format!(
            "no preimage of {} under γ in hom({}, {})",
            c.show_mor(g),
            c.show_obj(x),
            c.show_obj(y)
        ))
    })
}

type GammaTables<C> = HashMap<(<C as Category>::Obj, <C as Category>::Obj), Arc<HashMap<Hf, <C as Category>::Mor>>>;

/// `γ⁻¹` with one exhaustive inversion per hom-set, shared across calls.
/// Safe for concurrent use; racing fills write equal tables.
pub struct GammaCache<C: Category> {
    tables: Mutex<GammaTables<C>>,
}

impl<C: ClosedCategory> Default for GammaCache<C> {
    fn default() -> Self {
        GammaCache {
            tables: Mutex::new(HashMap::new()),
        }
    }
}

impl<C: ClosedCategory> GammaCache<C> {
    fn table(&self, c: &C, x: &C::Obj, y: &C::Obj) -> Result<Arc<HashMap<Hf, C::Mor>>> {
        let key = (x.clone(), y.clone());
        if let Some(t) = self.tables.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let mut table = HashMap::new();
        for f in c.hom(x, y)? {
            if let Some(prev) = table.insert(c.mor_key(&gamma(c, &f)?)?, f.clone()) {
                return Err(Error::NotBijective(format!(
                    "{} and {} have the same image under γ",
                    c.show_mor(&prev),
                    c.show_mor(&f)
                )));
            }
        }
        let table = Arc::new(table);
        self.tables.lock().unwrap().insert(key, table.clone());
        Ok(table)
    }

    /// The unique `f: X -> Y` with `γ(f) = g`.
    pub fn inverse(&self, c: &C, x: &C::Obj, y: &C::Obj, g: &C::Mor) -> Result<C::Mor> {
        self.table(c, x, y)?
            .get(&c.mor_key(g)?)
            .cloned()
            .ok_or_else(|| {
                Error::NotBijective(format!(
                    "no preimage of {} under γ in hom({}, {})",
                    c.show_mor(g),
                    c.show_obj(x),
                    c.show_obj(y)
                ))
            })
    }
}

fn eq_paths<C: Category>(c: &C, lhs: &[&C::Mor], rhs: &[&C::Mor]) -> Result<bool> {
    c.mor_eq(&compose_path(c, lhs)?, &compose_path(c, rhs)?)
}

fn show_objs<C: Category>(c: &C, names: &[&str], objs: &[&C::Obj]) -> String {
    names
        .iter()
        .zip(objs)
        .map(|(n, o)| format!("{n}={}", c.show_obj(o)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Every axiom of a closed category, itemized, evaluated over the enumerated
/// objects and morphisms.
pub fn check_cc_axioms<C: ClosedCategory>(c: &C, budget: &SizeBudget) -> Result<Report> {
    let objs = budget.objects(c.objects()?)?;
    let homs = all_morphisms(c, budget)?;
    let unit = c.unit();
    let mut report = Report::new("closed category axioms");

    let mut hid = Check::new("hom.identity", "und(1,1) = 1");
    for x in &objs {
        for y in &objs {
            let r = (|| {
                let lhs = c.hom_mor(&c.identity(x)?, &c.identity(y)?)?;
                c.mor_eq(&lhs, &c.identity(&c.hom_obj(x, y)?)?)
            })();
            hid.record_result(r, || show_objs(c, &["X", "Y"], &[x, y]))?;
        }
    }
    report.push(hid.finish());

    let mut contra = Check::new("hom.contravariant", "und(f1·f2,1) = und(f2,1)·und(f1,1)");
    let mut cov = Check::new("hom.covariant", "und(1,g1·g2) = und(1,g1)·und(1,g2)");
    for (a, b, fs1) in &homs {
        for (b2, _, fs2) in &homs {
            if b != b2 {
                continue;
            }
            for f1 in fs1 {
                for f2 in fs2 {
                    for y in &objs {
                        let r = (|| {
                            let lhs = hom_pre(c, &c.compose(f1, f2)?, y)?;
                            let rhs = c.compose(&hom_pre(c, f2, y)?, &hom_pre(c, f1, y)?)?;
                            c.mor_eq(&lhs, &rhs)
                        })();
                        contra.record_result(r, || {
                            format!("f1={}, f2={}, Y={}", c.show_mor(f1), c.show_mor(f2), c.show_obj(y))
                        })?;
                        let r = (|| {
                            let lhs = hom_post(c, y, &c.compose(f1, f2)?)?;
                            let rhs = c.compose(&hom_post(c, y, f1)?, &hom_post(c, y, f2)?)?;
                            c.mor_eq(&lhs, &rhs)
                        })();
                        cov.record_result(r, || {
                            format!("X={}, g1={}, g2={}", c.show_obj(y), c.show_mor(f1), c.show_mor(f2))
                        })?;
                    }
                }
            }
            let _ = a;
        }
    }
    report.push(contra.finish());
    report.push(cov.finish());

    let mut bif = Check::new("hom.bifunctor", "und(f,1)·und(1,g) = und(f,g) = und(1,g)·und(f,1)");
    for (_, _, fs) in &homs {
        for (_, _, gs) in &homs {
            for f in fs {
                for g in gs {
                    let r = (|| {
                        let both = c.hom_mor(f, g)?;
                        let one = c.compose(&hom_pre(c, f, &c.dom(g))?, &hom_post(c, &c.dom(f), g)?)?;
                        let two = c.compose(&hom_post(c, &c.cod(f), g)?, &hom_pre(c, f, &c.cod(g))?)?;
                        Ok(c.mor_eq(&both, &one)? && c.mor_eq(&both, &two)?)
                    })();
                    bif.record_result(r, || format!("f={}, g={}", c.show_mor(f), c.show_mor(g)))?;
                }
            }
        }
    }
    report.push(bif.finish());

    let mut iinv = Check::new("i.inverse", "i is an isomorphism with inverse i_inv");
    for x in &objs {
        let r = (|| {
            let i = c.i(x)?;
            let ii = c.i_inv(x)?;
            check_endpoints(c, &i, x, &c.hom_obj(&unit, x)?)?;
            Ok(c.mor_eq(&c.compose(&i, &ii)?, &c.identity(x)?)?
                && c.mor_eq(&c.compose(&ii, &i)?, &c.identity(&c.dom(&ii))?)?)
        })();
        iinv.record_result(r, || show_objs(c, &["X"], &[x]))?;
    }
    report.push(iinv.finish());

    let mut inat = Check::new("i.natural", "i_X·und(1,f) = f·i_Y");
    let mut jdin = Check::new("j.dinatural", "j_X·und(1,f) = j_Y·und(f,1)");
    for (x, y, fs) in &homs {
        for f in fs {
            let r = (|| eq_paths(c, &[&c.i(x)?, &hom_post(c, &unit, f)?], &[f, &c.i(y)?]))();
            inat.record_result(r, || format!("f={}", c.show_mor(f)))?;
            let r = (|| {
                eq_paths(
                    c,
                    &[&c.j(x)?, &hom_post(c, x, f)?],
                    &[&c.j(y)?, &hom_pre(c, f, y)?],
                )
            })();
            jdin.record_result(r, || format!("f={}", c.show_mor(f)))?;
        }
    }
    report.push(inat.finish());
    report.push(jdin.finish());

    let mut lny = Check::new("L.natural-Y", "L^X_{Y'Z}·und(und(1,g),1) = und(g,1)·L^X_{YZ}");
    let mut lnz = Check::new("L.natural-Z", "L^X_{YZ}·und(1,und(1,h)) = und(1,h)·L^X_{YZ'}");
    let mut ldx = Check::new("L.dinatural-X", "L^X_{YZ}·und(und(f,1),1) = L^X'_{YZ}·und(1,und(f,1))");
    for (a, b, fs) in &homs {
        for f in fs {
            for p in &objs {
                for q in &objs {
                    // f: a -> b plays g: Y -> Y' with X=p, Z=q
                    let r = (|| {
                        let lhs = [
                            &c.l(p, b, q)?,
                            &hom_pre(c, &hom_post(c, p, f)?, &c.hom_obj(p, q)?)?,
                        ];
                        let rhs = [&hom_pre(c, f, q)?, &c.l(p, a, q)?];
                        eq_paths(c, &lhs, &rhs)
                    })();
                    lny.record_result(r, || {
                        format!("X={}, g={}, Z={}", c.show_obj(p), c.show_mor(f), c.show_obj(q))
                    })?;
                    // f: a -> b plays h: Z -> Z' with X=p, Y=q
                    let r = (|| {
                        let lhs = [
                            &c.l(p, q, a)?,
                            &hom_post(c, &c.hom_obj(p, q)?, &hom_post(c, p, f)?)?,
                        ];
                        let rhs = [&hom_post(c, q, f)?, &c.l(p, q, b)?];
                        eq_paths(c, &lhs, &rhs)
                    })();
                    lnz.record_result(r, || {
                        format!("X={}, Y={}, h={}", c.show_obj(p), c.show_obj(q), c.show_mor(f))
                    })?;
                    // f: a -> b plays f: X -> X' with Y=p, Z=q
                    let r = (|| {
                        let lhs = [
                            &c.l(a, p, q)?,
                            &hom_pre(c, &hom_pre(c, f, p)?, &c.hom_obj(a, q)?)?,
                        ];
                        let rhs = [
                            &c.l(b, p, q)?,
                            &hom_post(c, &c.hom_obj(b, p)?, &hom_pre(c, f, q)?)?,
                        ];
                        eq_paths(c, &lhs, &rhs)
                    })();
                    ldx.record_result(r, || {
                        format!("f={}, Y={}, Z={}", c.show_mor(f), c.show_obj(p), c.show_obj(q))
                    })?;
                }
            }
        }
    }
    report.push(lny.finish());
    report.push(lnz.finish());
    report.push(ldx.finish());

    let mut cc1 = Check::new("CC1", "CC1");
    let mut cc2 = Check::new("CC2", "CC2");
    let mut cc4 = Check::new("CC4", "CC4");
    for x in &objs {
        for y in &objs {
            let r = (|| {
                eq_paths(c, &[&c.j(y)?, &c.l(x, y, y)?], &[&c.j(&c.hom_obj(x, y)?)?])
            })();
            cc1.record_result(r, || show_objs(c, &["X", "Y"], &[x, y]))?;
            let r = (|| {
                let lhs = [&c.l(x, x, y)?, &hom_pre(c, &c.j(x)?, &c.hom_obj(x, y)?)?];
                eq_paths(c, &lhs, &[&c.i(&c.hom_obj(x, y)?)?])
            })();
            cc2.record_result(r, || show_objs(c, &["X", "Y"], &[x, y]))?;
            // here x plays Y and y plays Z
            let r = (|| {
                let lhs = [&c.l(&unit, x, y)?, &hom_pre(c, &c.i(x)?, &c.hom_obj(&unit, y)?)?];
                eq_paths(c, &lhs, &[&hom_post(c, x, &c.i(y)?)?])
            })();
            cc4.record_result(r, || show_objs(c, &["Y", "Z"], &[x, y]))?;
        }
    }
    report.push(cc1.finish());
    report.push(cc2.finish());

    let mut cc3 = Check::new("CC3", "CC3");
    for x in &objs {
        for y in &objs {
            for u in &objs {
                for v in &objs {
                    let r = (|| {
                        let xy = c.hom_obj(x, y)?;
                        let xu = c.hom_obj(x, u)?;
                        let xv = c.hom_obj(x, v)?;
                        let lhs = [
                            &c.l(x, u, v)?,
                            &c.l(&xy, &xu, &xv)?,
                            &hom_pre(c, &c.l(x, y, u)?, &c.hom_obj(&xy, &xv)?)?,
                        ];
                        let rhs = [
                            &c.l(y, u, v)?,
                            &hom_post(c, &c.hom_obj(y, u)?, &c.l(x, y, v)?)?,
                        ];
                        eq_paths(c, &lhs, &rhs)
                    })();
                    cc3.record_result(r, || show_objs(c, &["X", "Y", "U", "V"], &[x, y, u, v]))?;
                }
            }
        }
    }
    report.push(cc3.finish());
    report.push(cc4.finish());

    let mut cc5 = Check::new("CC5", "CC5");
    for x in &objs {
        for y in &objs {
            let r = gamma_is_bijective(c, x, y, budget);
            cc5.record_result(r, || show_objs(c, &["X", "Y"], &[x, y]))?;
        }
    }
    report.push(cc5.finish());
    Ok(report)
}

fn gamma_is_bijective<C: ClosedCategory>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
    budget: &SizeBudget,
) -> Result<bool> {
    let dom = budget.hom(c.hom(x, y)?)?;
    let cod = budget.hom(c.hom(&c.unit(), &c.hom_obj(x, y)?)?)?;
    if dom.len() != cod.len() {
        return Ok(false);
    }
    let mut images = Vec::new();
    for f in &dom {
        let g = gamma(c, f)?;
        for h in &images {
            if c.mor_eq(h, &g)? {
                return Ok(false);
            }
        }
        images.push(g);
    }
    for g in &cod {
        let mut hit = false;
        for h in &images {
            if c.mor_eq(h, g)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Consequences of the axioms, re-evaluated as independent equations.
pub fn verify_derived_cc_theorems<C: ClosedCategory>(c: &C, budget: &SizeBudget) -> Result<Report> {
    let objs = budget.objects(c.objects()?)?;
    let homs = all_morphisms(c, budget)?;
    let unit = c.unit();
    let mut report = Report::new("derived closed-category theorems");

    let mut ion = Check::new("thm.i-on-hom-unit", "Prop. i on und(1,X)");
    for x in &objs {
        let r = (|| {
            let ux = c.hom_obj(&unit, x)?;
            c.mor_eq(&c.i(&ux)?, &hom_post(c, &unit, &c.i(x)?)?)
        })();
        ion.record_result(r, || show_objs(c, &["X"], &[x]))?;
    }
    report.push(ion.finish());

    let r = (|| c.mor_eq(&c.j(&unit)?, &c.i(&unit)?))();
    let mut j1 = Check::new("thm.j1-equals-i1", "Prop. j_1 = i_1");
    j1.record_result(r, || "unit".into())?;
    report.push(j1.finish());

    let mut gid = Check::new("thm.gamma-identity", "CC5: γ(1_X) = j_X");
    for x in &objs {
        let r = (|| c.mor_eq(&gamma(c, &c.identity(x)?)?, &c.j(x)?))();
        gid.record_result(r, || show_objs(c, &["X"], &[x]))?;
    }
    report.push(gid.finish());

    let mut cor = Check::new("thm.gamma-point", "Corollary: γ then C(1,i^-1) is the identity");
    for x in &objs {
        for f in budget.hom(c.hom(&unit, x)?)? {
            let r = (|| c.mor_eq(&c.compose(&gamma(c, &f)?, &c.i_inv(x)?)?, &f))();
            cor.record_result(r, || format!("f={}", c.show_mor(&f)))?;
        }
    }
    report.push(cor.finish());

    let mut sq = Check::new("thm.gamma-L-square", "Prop. γ/L square");
    for (_, _, fs) in &homs {
        for f in fs {
            for x in &objs {
                let r = (|| {
                    let lhs = c.compose(&gamma(c, f)?, &c.l(x, &c.dom(f), &c.cod(f))?)?;
                    let rhs = gamma(c, &hom_post(c, x, f)?)?;
                    c.mor_eq(&lhs, &rhs)
                })();
                sq.record_result(r, || format!("X={}, f={}", c.show_obj(x), c.show_mor(f)))?;
            }
        }
    }
    report.push(sq.finish());

    let mut right = Check::new("thm.gamma-compose-post", "Prop. γ(f·g) = γ(f)·und(1,g)");
    let mut left = Check::new("thm.gamma-compose-pre", "Prop. γ(f·g) = γ(g)·und(f,1)");
    for (x, y, fs) in &homs {
        for (y2, _, gs) in &homs {
            if y != y2 {
                continue;
            }
            for f in fs {
                for g in gs {
                    let locus = || format!("f={}, g={}", c.show_mor(f), c.show_mor(g));
                    let fg = c.compose(f, g).and_then(|h| gamma(c, &h));
                    let r = (|| {
                        let rhs = c.compose(&gamma(c, f)?, &hom_post(c, x, g)?)?;
                        c.mor_eq(fg.as_ref().map_err(Clone::clone)?, &rhs)
                    })();
                    right.record_result(r, locus)?;
                    let r = (|| {
                        let rhs = c.compose(&gamma(c, g)?, &hom_pre(c, f, &c.cod(g))?)?;
                        c.mor_eq(fg.as_ref().map_err(Clone::clone)?, &rhs)
                    })();
                    left.record_result(r, locus)?;
                }
            }
        }
    }
    report.push(right.finish());
    report.push(left.finish());
    Ok(report)
}
