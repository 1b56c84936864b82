//! The passage from closed multicategories with a unit object to closed
//! categories, its inverse on 1-cells, and the representing multicategory.

mod lift;
mod represent;

use std::sync::Arc;

pub use lift::{check_2cell_bijectivity, check_injectivity, roundtrip_closed_functor, roundtrip_multifunctor, Lift};
pub use represent::{
    build_representing_multicategory, verify_essential_surjectivity, LFunctor, RMor, RepresentingMulti,
};

use crate::budget::SizeBudget;
use crate::category::{Category, NatTrans};
use crate::closed::{check_cc_axioms, gamma, hom_post, hom_pre, ClosedCategory, ClosedFunctor};
use crate::closed::{closed_functors_equal, ComposedClosed, IdClosed};
use crate::closed_multi::{bar, closing, unit_iso_inverse, ClosedMulti, UnitWitness};
use crate::error::{Error, Result};
use crate::hf::Hf;
use crate::multicat::{ComposedMulti, IdMulti, MultiFunctor, MultiNat, Multicategory};
use crate::report::{Check, Item, Report};

/// The closed category `und C` of unary morphisms of a closed multicategory
/// with a unit object: `i_X = und(u;X)⁻¹`, `j_X = ū` of `1^{und C}_X`, and
/// `L` from its defining equation.
pub struct Underlying<'c, M: Multicategory> {
    pub cm: &'c ClosedMulti<M>,
    pub uw: Arc<UnitWitness<M::Obj, M::Mor>>,
}

impl<'c, M: Multicategory> Underlying<'c, M> {
    pub fn new(cm: &'c ClosedMulti<M>, uw: UnitWitness<M::Obj, M::Mor>) -> Self {
        Underlying { cm, uw: Arc::new(uw) }
    }

    fn unary(&self, f: &M::Mor) -> Result<M::Obj> {
        match self.cm.m.sources(f).as_slice() {
            [x] => Ok(x.clone()),
            _ => Err(Error::Mismatch(format!("{} is not unary", self.cm.m.show_mor(f)))),
        }
    }
}

impl<'c, M: Multicategory> Category for Underlying<'c, M> {
    type Obj = M::Obj;
    type Mor = M::Mor;

    fn objects(&self) -> Result<Vec<M::Obj>> {
        self.cm.m.objects()
    }
    fn hom(&self, x: &M::Obj, y: &M::Obj) -> Result<Vec<M::Mor>> {
        self.cm.m.hom(std::slice::from_ref(x), y)
    }
    fn dom(&self, f: &M::Mor) -> M::Obj {
        self.cm.m.sources(f).swap_remove(0)
    }
    fn cod(&self, f: &M::Mor) -> M::Obj {
        self.cm.m.target(f)
    }
    fn identity(&self, x: &M::Obj) -> Result<M::Mor> {
        self.cm.m.identity(x)
    }
    fn compose(&self, f: &M::Mor, g: &M::Mor) -> Result<M::Mor> {
        self.unary(f)?;
        self.unary(g)?;
        self.cm.m.compose(std::slice::from_ref(f), g)
    }
    fn mor_key(&self, f: &M::Mor) -> Result<Hf> {
        self.cm.m.mor_key(f)
    }
    fn mor_eq(&self, f: &M::Mor, g: &M::Mor) -> Result<bool> {
        self.cm.m.mor_eq(f, g)
    }
    fn show_obj(&self, x: &M::Obj) -> String {
        self.cm.m.show_obj(x)
    }
    fn show_mor(&self, f: &M::Mor) -> String {
        self.cm.m.show_mor(f)
    }
}

impl<'c, M: Multicategory> ClosedCategory for Underlying<'c, M> {
    fn unit(&self) -> M::Obj {
        self.uw.unit.clone()
    }
    fn hom_obj(&self, x: &M::Obj, y: &M::Obj) -> Result<M::Obj> {
        self.cm.hom_obj(x, y)
    }
    /// `und(f;Y)·und(W;g): und(X;Y) -> und(W;Z)` for `f: W -> X`, `g: Y -> Z`.
    fn hom_mor(&self, f: &M::Mor, g: &M::Mor) -> Result<M::Mor> {
        let w = self.unary(f)?;
        let y = self.unary(g)?;
        let pre = self.cm.hom_pre(std::slice::from_ref(f), &y)?;
        let post = self.cm.hom_post(&[w], g)?;
        self.cm.m.compose(&[pre], &post)
    }
    fn i(&self, x: &M::Obj) -> Result<M::Mor> {
        unit_iso_inverse(self.cm, &self.uw, x)
    }
    fn i_inv(&self, x: &M::Obj) -> Result<M::Mor> {
        self.cm.hom_pre(std::slice::from_ref(&self.uw.u), x)
    }
    fn j(&self, x: &M::Obj) -> Result<M::Mor> {
        bar(self.cm, &self.uw, &self.cm.unit_hom(x)?)
    }
    fn l(&self, x: &M::Obj, y: &M::Obj, z: &M::Obj) -> Result<M::Mor> {
        self.cm.l(x, y, z)
    }
}

/// `U F`: the closed functor of a multifunctor, with `φ̂ = und F` and
/// `φ⁰ = bar(F u)`.
pub struct UFunctor<'a, 'c, M: Multicategory, N: Multicategory, F> {
    pub source: &'a Underlying<'c, M>,
    pub target: &'a Underlying<'c, N>,
    pub f: F,
}

impl<'a, 'c, M, N, F> ClosedFunctor<Underlying<'c, M>, Underlying<'c, N>> for UFunctor<'a, 'c, M, N, F>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
{
    fn obj(&self, x: &M::Obj) -> Result<N::Obj> {
        self.f.obj(x)
    }
    fn mor(&self, g: &M::Mor) -> Result<N::Mor> {
        self.f.mor(g)
    }
    fn hat(&self, x: &M::Obj, y: &M::Obj) -> Result<N::Mor> {
        closing(self.source.cm, self.target.cm, &self.f, std::slice::from_ref(x), y)
    }
    fn zero(&self) -> Result<N::Mor> {
        bar(self.target.cm, &self.target.uw, &self.f.mor(&self.source.uw.u)?)
    }
}

/// `U r`: a multinatural transformation read as a closed one, with the same
/// components.
pub struct UNat<R>(pub R);

impl<'c, M: Multicategory, N: Multicategory, R: MultiNat<M, N>> NatTrans<Underlying<'c, M>, Underlying<'c, N>>
    for UNat<R>
{
    fn component(&self, x: &M::Obj) -> Result<N::Mor> {
        self.0.component(x)
    }
}

fn tag(report: Report, prefix: &str) -> Vec<Item> {
    report
        .items
        .into_iter()
        .map(|mut i| {
            i.check = format!("{prefix}{}", i.check);
            i
        })
        .collect()
}

/// The closed-category axioms of `und C`, each paired with the multicategory
/// fact its proof rests on.
pub fn verify_underlying_closed<M: Multicategory>(u: &Underlying<'_, M>, budget: &SizeBudget) -> Result<Report> {
    let cm = u.cm;
    let m = &cm.m;
    let objs = budget.objects(m.objects()?)?;
    let unit = u.unit();
    let mut report = check_cc_axioms(u, budget)?;
    report.subject = format!("underlying closed category: {}", m.name());
    let eq = |a: Result<M::Mor>, b: Result<M::Mor>| -> Result<bool> { m.mor_eq(&a?, &b?) };

    let mut cc1 = Check::new("CC1 via L^X preserves identities", "CC1; L^X preserves identities");
    let mut cc2 = Check::new("CC2 via the identity axiom of und C", "CC2; identity axiom of und C");
    let mut cc4 = Check::new("CC4 via the displayed diagram", "CC4; L^𝟙·und(1,und(u;1)) = und(und(u;1),1)");
    let mut cc5 = Check::new("CC5 via the γ factorization", "CC5; φ(u·γ(f)) = f");
    for x in &objs {
        for y in &objs {
            let locus = || format!("X={}, Y={}", m.show_obj(x), m.show_obj(y));
            let r = (|| {
                let hxy = cm.hom_obj(x, y)?;
                let lemma = eq(m.compose(&[cm.unit_hom(y)?], &cm.l(x, y, y)?), cm.unit_hom(&hxy))?;
                let ax = eq(u.compose(&u.j(y)?, &u.l(x, y, y)?), u.j(&hxy))?;
                Ok(lemma && ax)
            })();
            cc1.record_result(r, locus)?;
            let r = (|| {
                let hxy = cm.hom_obj(x, y)?;
                let one = m.identity(&hxy)?;
                let lemma = eq(m.compose(&[cm.unit_hom(x)?, one.clone()], &cm.mu(x, x, y)?), Ok(one))?;
                let lhs = u.compose(&u.l(x, x, y)?, &hom_pre(u, &u.j(x)?, &hxy)?);
                Ok(lemma && eq(lhs, u.i(&hxy))?)
            })();
            cc2.record_result(r, locus)?;
            // here x plays Y and y plays Z
            let r = (|| {
                let h1x = cm.hom_obj(&unit, x)?;
                let pre_y = cm.hom_pre(std::slice::from_ref(&u.uw.u), y)?;
                let pre_x = cm.hom_pre(std::slice::from_ref(&u.uw.u), x)?;
                let lhs = m.compose(&[cm.l(&unit, x, y)?], &cm.hom_post(&[h1x], &pre_y)?);
                let lemma = eq(lhs, cm.hom_pre(&[pre_x], y))?;
                let ax = eq(
                    u.compose(&u.l(&unit, x, y)?, &hom_pre(u, &u.i(x)?, &cm.hom_obj(&unit, y)?)?),
                    hom_post(u, x, &u.i(y)?),
                )?;
                Ok(lemma && ax)
            })();
            cc4.record_result(r, || format!("Y={}, Z={}", m.show_obj(x), m.show_obj(y)))?;
            let r = (|| {
                for f in budget.hom(u.hom(x, y)?)? {
                    let point = m.compose(std::slice::from_ref(&u.uw.u), &gamma(u, &f)?)?;
                    if !m.mor_eq(&cm.phi(std::slice::from_ref(x), y, &point)?, &f)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })();
            let ok = r.clone().unwrap_or(false) && report.item("CC5").map(|i| i.failures == 0).unwrap_or(false);
            cc5.record_result(r.map(|_| ok), locus)?;
        }
    }
    let mut cc3 = Check::new("CC3 via L^X preserving composition", "CC3; L^X preserves composition");
    for x in &objs {
        for y in &objs {
            for z in &objs {
                for w in &objs {
                    let r = (|| {
                        let lhs = m.compose(&[cm.mu(y, z, w)?], &cm.l(x, y, w)?);
                        let (a, b, c) = (cm.hom_obj(x, y)?, cm.hom_obj(x, z)?, cm.hom_obj(x, w)?);
                        let rhs = m.compose(&[cm.l(x, y, z)?, cm.l(x, z, w)?], &cm.mu(&a, &b, &c)?);
                        Ok(eq(lhs, rhs)? && report.item("CC3").map(|i| i.failures == 0).unwrap_or(false))
                    })();
                    cc3.record_result(r, || {
                        format!("X={}, Y={}, U={}, V={}", m.show_obj(x), m.show_obj(y), m.show_obj(z), m.show_obj(w))
                    })?;
                }
            }
        }
    }
    report.push(cc1.finish());
    report.push(cc2.finish());
    report.push(cc3.finish());
    report.push(cc4.finish());
    report.push(cc5.finish());
    Ok(report)
}

/// `U(G∘F) = U G ∘ U F`, `U(Id) = Id`, and `U` on vertical composites of
/// 2-cells, componentwise.
pub fn check_u_functoriality<A, B, E, F, G, R, S>(
    a: &Underlying<'_, A>,
    b: &Underlying<'_, B>,
    e: &Underlying<'_, E>,
    f: &F,
    g: &G,
    two_cells: Option<(&R, &S)>,
    budget: &SizeBudget,
) -> Result<Report>
where
    A: Multicategory,
    B: Multicategory,
    E: Multicategory,
    F: MultiFunctor<A, B>,
    G: MultiFunctor<B, E>,
    R: MultiNat<A, B>,
    S: MultiNat<A, B>,
{
    let mut report = Report::new("U is a Cat-functor");
    let gf = ComposedMulti {
        mid: &b.cm.m,
        first: f,
        second: g,
    };
    let u_gf = UFunctor {
        source: a,
        target: e,
        f: &gf,
    };
    let composed = ComposedClosed {
        mid: b,
        target: e,
        first: UFunctor { source: a, target: b, f },
        second: UFunctor { source: b, target: e, f: g },
    };
    for item in tag(closed_functors_equal(a, e, &u_gf, &composed, budget)?, "U.composition.") {
        report.push(item);
    }
    let u_id = UFunctor {
        source: a,
        target: a,
        f: IdMulti,
    };
    for item in tag(closed_functors_equal(a, a, &u_id, &IdClosed(a), budget)?, "U.identity.") {
        report.push(item);
    }
    if let Some((r, s)) = two_cells {
        // U(s ∘ r) has components r_X · s_X, which is how vertical
        // composition of closed transformations is defined
        let mut vert = Check::new("U.vertical", "U preserves vertical composition of 2-cells");
        for x in budget.objects(a.cm.m.objects()?)? {
            let res = (|| {
                let multi = b.cm.m.compose(&[r.component(&x)?], &s.component(&x)?)?;
                let closed = b.compose(&UNat(r).component(&x)?, &UNat(s).component(&x)?)?;
                b.cm.m.mor_eq(&multi, &closed)
            })();
            vert.record_result(res, || a.cm.m.show_obj(&x))?;
        }
        report.push(vert.finish());
    }
    Ok(report)
}
