//! Multicategories, multifunctors and multinatural transformations, checked
//! exhaustively up to an arity cap.

mod monoidal;
mod tabular;

pub use monoidal::{
    check_strict_monoidal, DiscreteMonoid, HatMor, MeetSemilattice, Monoid, StrictMonoidal,
    Widehat,
};
pub use tabular::{tabularize_multi, MultiTabularized, TabularMulticategory};

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::budget::Caps;
use crate::error::{Error, Result};
use crate::hf::Hf;
use crate::report::{Check, Report};

/// A multicategory whose hom-sets can be enumerated on demand.
///
/// `compose(fs, g)` is `(f_1, ..., f_n) · g`; for nullary `g` the list is
/// empty and the result is `g`.
pub trait Multicategory {
    type Obj: Clone + Ord + Hash + Debug;
    type Mor: Clone + Debug;

    fn objects(&self) -> Result<Vec<Self::Obj>>;
    fn hom(&self, sources: &[Self::Obj], target: &Self::Obj) -> Result<Vec<Self::Mor>>;
    fn sources(&self, f: &Self::Mor) -> Vec<Self::Obj>;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Result<Self::Mor>;
    fn compose(&self, fs: &[Self::Mor], g: &Self::Mor) -> Result<Self::Mor>;

    /// Canonical encoding: equal keys iff equal morphisms within a hom-set.
    fn mor_key(&self, f: &Self::Mor) -> Result<Hf>;

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        if self.target(f) != self.target(g) || self.sources(f) != self.sources(g) {
            return Ok(false);
        }
        Ok(self.mor_key(f)? == self.mor_key(g)?)
    }

    fn name(&self) -> String {
        "multicategory".into()
    }

    fn show_obj(&self, x: &Self::Obj) -> String {
        format!("{x:?}")
    }

    fn show_mor(&self, f: &Self::Mor) -> String {
        format!("{f:?}")
    }
}

impl<T: Multicategory + ?Sized> Multicategory for &T {
    type Obj = T::Obj;
    type Mor = T::Mor;
    fn objects(&self) -> Result<Vec<T::Obj>> {
        (**self).objects()
    }
    fn hom(&self, sources: &[T::Obj], target: &T::Obj) -> Result<Vec<T::Mor>> {
        (**self).hom(sources, target)
    }
    fn sources(&self, f: &T::Mor) -> Vec<T::Obj> {
        (**self).sources(f)
    }
    fn target(&self, f: &T::Mor) -> T::Obj {
        (**self).target(f)
    }
    fn identity(&self, x: &T::Obj) -> Result<T::Mor> {
        (**self).identity(x)
    }
    fn compose(&self, fs: &[T::Mor], g: &T::Mor) -> Result<T::Mor> {
        (**self).compose(fs, g)
    }
    fn mor_key(&self, f: &T::Mor) -> Result<Hf> {
        (**self).mor_key(f)
    }
    fn mor_eq(&self, f: &T::Mor, g: &T::Mor) -> Result<bool> {
        (**self).mor_eq(f, g)
    }
    fn name(&self) -> String {
        (**self).name()
    }
    fn show_obj(&self, x: &T::Obj) -> String {
        (**self).show_obj(x)
    }
    fn show_mor(&self, f: &T::Mor) -> String {
        (**self).show_mor(f)
    }
}

/// `X1,X2;Y`.
pub fn show_sig<M: Multicategory>(m: &M, sources: &[M::Obj], target: &M::Obj) -> String {
    let xs: Vec<String> = sources.iter().map(|x| m.show_obj(x)).collect();
    format!("{};{}", xs.join(","), m.show_obj(target))
}

/// `f1,f2|g`.
pub fn show_composite<M: Multicategory>(m: &M, fs: &[M::Mor], g: &M::Mor) -> String {
    let names: Vec<String> = fs.iter().map(|f| m.show_mor(f)).collect();
    format!("{}|{}", names.join(","), m.show_mor(g))
}

/// Rejects `(f_1, ..., f_n) · g` unless the targets of the `f_i` are the
/// sources of `g`.
pub fn check_composable<M: Multicategory>(m: &M, fs: &[M::Mor], g: &M::Mor) -> Result<()> {
    let ys = m.sources(g);
    let ok = ys.len() == fs.len() && fs.iter().zip(&ys).all(|(f, y)| m.target(f) == *y);
    if !ok {
        return Err(Error::Mismatch(format!(
            "cannot compose ({}) with {}",
            fs.iter().map(|f| m.show_mor(f)).collect::<Vec<_>>().join(","),
            m.show_mor(g)
        )));
    }
    Ok(())
}

/// Concatenated sources of a tuple of morphisms.
pub fn concat_sources<M: Multicategory>(m: &M, fs: &[M::Mor]) -> Vec<M::Obj> {
    fs.iter().flat_map(|f| m.sources(f)).collect()
}

/// Identities on a list of objects.
pub fn identities<M: Multicategory>(m: &M, xs: &[M::Obj]) -> Result<Vec<M::Mor>> {
    xs.iter().map(|x| m.identity(x)).collect()
}

/// All lists of exactly `len` objects, in lexicographic order.
pub fn signatures<O: Clone>(objs: &[O], len: usize) -> Vec<Vec<O>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * objs.len());
        for s in &out {
            for o in objs {
                let mut t = s.clone();
                t.push(o.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Every morphism of arity at most the cap, grouped by target.
pub struct Catalog<M: Multicategory> {
    pub objects: Vec<M::Obj>,
    pub arity: usize,
    into: BTreeMap<M::Obj, Vec<M::Mor>>,
}

impl<M: Multicategory> Catalog<M> {
    pub fn build(m: &M, caps: &Caps) -> Result<Catalog<M>> {
        let objects = caps.budget.objects(m.objects()?)?;
        let mut into: BTreeMap<M::Obj, Vec<M::Mor>> = BTreeMap::new();
        let mut total = 0;
        for y in &objects {
            let list = into.entry(y.clone()).or_default();
            for n in 0..=caps.arity {
                for xs in signatures(&objects, n) {
                    let hom = caps.budget.hom(m.hom(&xs, y)?)?;
                    total += hom.len();
                    caps.guard(total)?;
                    list.extend(hom);
                }
            }
        }
        Ok(Catalog {
            objects,
            arity: caps.arity,
            into,
        })
    }

    pub fn into(&self, y: &M::Obj) -> &[M::Mor] {
        self.into.get(y).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn all(&self) -> impl Iterator<Item = &M::Mor> {
        self.into.values().flatten()
    }

    /// Visits every tuple `(f_1, ..., f_n)` with `f_i` into `targets[i]` and
    /// total arity at most `max_total`.
    pub fn for_each_tuple(
        &self,
        m: &M,
        targets: &[M::Obj],
        max_total: usize,
        visit: &mut dyn FnMut(&[M::Mor]) -> Result<()>,
    ) -> Result<()> {
        let mut stack = Vec::with_capacity(targets.len());
        self.tuples_rec(m, targets, max_total, &mut stack, visit)
    }

    fn tuples_rec(
        &self,
        m: &M,
        targets: &[M::Obj],
        remaining: usize,
        stack: &mut Vec<M::Mor>,
        visit: &mut dyn FnMut(&[M::Mor]) -> Result<()>,
    ) -> Result<()> {
        let Some((y, rest)) = targets.split_first() else {
            return visit(stack);
        };
        for f in self.into(y) {
            let k = m.sources(f).len();
            if k > remaining {
                continue;
            }
            stack.push(f.clone());
            self.tuples_rec(m, rest, remaining - k, stack, visit)?;
            stack.pop();
        }
        Ok(())
    }
}

pub fn check_multicategory_axioms<M: Multicategory>(m: &M, caps: &Caps) -> Result<Report> {
    let cat = Catalog::build(m, caps)?;
    let mut report = Report::new(format!("multicategory axioms: {}", m.name()));

    let mut typing = Check::new("multi.typing", "hom-set signatures");
    for y in &cat.objects {
        for n in 0..=caps.arity {
            for xs in signatures(&cat.objects, n) {
                for f in m.hom(&xs, y)? {
                    typing.record(m.sources(&f) == xs && m.target(&f) == *y, || {
                        format!("{} listed in {}", m.show_mor(&f), show_sig(m, &xs, y))
                    });
                }
            }
        }
        let r = m.identity(y).map(|i| m.sources(&i) == vec![y.clone()] && m.target(&i) == *y);
        typing.record_result(r, || format!("identity of {}", m.show_obj(y)))?;
    }
    report.push(typing.finish());

    let mut left = Check::new("multi.identity-left", "identity axiom (1,...,1)·g = g");
    let mut right = Check::new("multi.identity-right", "identity axiom f·1 = f");
    for g in cat.all() {
        let r = (|| {
            let ids = identities(m, &m.sources(g))?;
            m.mor_eq(&m.compose(&ids, g)?, g)
        })();
        left.record_result(r, || m.show_mor(g))?;
        let r = (|| m.mor_eq(&m.compose(std::slice::from_ref(g), &m.identity(&m.target(g))?)?, g))();
        right.record_result(r, || m.show_mor(g))?;
    }
    report.push(left.finish());
    report.push(right.finish());

    let mut ctyping = Check::new("multi.compose-typing", "composite signature");
    let mut assoc = Check::new("multi.associativity", "associativity axiom");
    let mut count = 0usize;
    for g in cat.all() {
        let ys = m.sources(g);
        cat.for_each_tuple(m, &ys, caps.arity, &mut |fs| {
            let xs = concat_sources(m, fs);
            let fg = m.compose(fs, g);
            let r = fg
                .as_ref()
                .map(|h| m.sources(h) == xs && m.target(h) == m.target(g))
                .map_err(Clone::clone);
            ctyping.record_result(r, || show_composite(m, fs, g))?;
            let Ok(fg) = fg else { return Ok(()) };
            cat.for_each_tuple(m, &xs, caps.arity, &mut |hs| {
                count += 1;
                caps.guard(count)?;
                let r = (|| {
                    let lhs = m.compose(hs, &fg)?;
                    let mut inner = Vec::with_capacity(fs.len());
                    let mut at = 0;
                    for f in fs {
                        let k = m.sources(f).len();
                        inner.push(m.compose(&hs[at..at + k], f)?);
                        at += k;
                    }
                    let rhs = m.compose(&inner, g)?;
                    m.mor_eq(&lhs, &rhs)
                })();
                assoc.record_result(r, || {
                    format!("h=({}), f=({}), g={}", show_list(m, hs), show_list(m, fs), m.show_mor(g))
                })
            })
        })?;
    }
    report.push(ctyping.finish());
    report.push(assoc.finish());
    Ok(report)
}

pub fn show_list<M: Multicategory>(m: &M, fs: &[M::Mor]) -> String {
    fs.iter().map(|f| m.show_mor(f)).collect::<Vec<_>>().join(",")
}

/// A multifunctor `M -> N`.
pub trait MultiFunctor<M: Multicategory, N: Multicategory> {
    fn obj(&self, x: &M::Obj) -> Result<N::Obj>;
    fn mor(&self, f: &M::Mor) -> Result<N::Mor>;
}

impl<M: Multicategory, N: Multicategory, F: MultiFunctor<M, N> + ?Sized> MultiFunctor<M, N> for &F {
    fn obj(&self, x: &M::Obj) -> Result<N::Obj> {
        (**self).obj(x)
    }
    fn mor(&self, f: &M::Mor) -> Result<N::Mor> {
        (**self).mor(f)
    }
}

/// A multinatural transformation between multifunctors `M -> N`.
pub trait MultiNat<M: Multicategory, N: Multicategory> {
    fn component(&self, x: &M::Obj) -> Result<N::Mor>;
}

impl<M: Multicategory, N: Multicategory, R: MultiNat<M, N> + ?Sized> MultiNat<M, N> for &R {
    fn component(&self, x: &M::Obj) -> Result<N::Mor> {
        (**self).component(x)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IdMulti;

impl<M: Multicategory> MultiFunctor<M, M> for IdMulti {
    fn obj(&self, x: &M::Obj) -> Result<M::Obj> {
        Ok(x.clone())
    }
    fn mor(&self, f: &M::Mor) -> Result<M::Mor> {
        Ok(f.clone())
    }
}

/// `G ∘ F`: first `F: M -> B`, then `G: B -> N`.
pub struct ComposedMulti<'a, B, F, G> {
    pub mid: &'a B,
    pub first: F,
    pub second: G,
}

impl<'a, M, B, N, F, G> MultiFunctor<M, N> for ComposedMulti<'a, B, F, G>
where
    M: Multicategory,
    B: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, B>,
    G: MultiFunctor<B, N>,
{
    fn obj(&self, x: &M::Obj) -> Result<N::Obj> {
        self.second.obj(&self.first.obj(x)?)
    }
    fn mor(&self, f: &M::Mor) -> Result<N::Mor> {
        self.second.mor(&self.first.mor(f)?)
    }
}

/// The identity transformation on `F`.
pub struct IdMultiNat<'a, N, F> {
    pub target: &'a N,
    pub functor: F,
}

impl<'a, M: Multicategory, N: Multicategory, F: MultiFunctor<M, N>> MultiNat<M, N> for IdMultiNat<'a, N, F> {
    fn component(&self, x: &M::Obj) -> Result<N::Mor> {
        self.target.identity(&self.functor.obj(x)?)
    }
}

/// Components given by a closure.
pub struct FnMultiNat<T>(pub T);

impl<M: Multicategory, N: Multicategory, T: Fn(&M::Obj) -> Result<N::Mor>> MultiNat<M, N> for FnMultiNat<T> {
    fn component(&self, x: &M::Obj) -> Result<N::Mor> {
        (self.0)(x)
    }
}

pub fn check_multifunctor<M, N, F>(m: &M, n: &N, f: &F, caps: &Caps) -> Result<Report>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
{
    let cat = Catalog::build(m, caps)?;
    let mut report = Report::new("multifunctor");

    let mut typing = Check::new("multifunctor.typing", "preserves signatures");
    for g in cat.all() {
        let r = (|| {
            let fg = f.mor(g)?;
            let xs: Vec<N::Obj> = m.sources(g).iter().map(|x| f.obj(x)).collect::<Result<_>>()?;
            Ok(n.sources(&fg) == xs && n.target(&fg) == f.obj(&m.target(g))?)
        })();
        typing.record_result(r, || m.show_mor(g))?;
    }
    report.push(typing.finish());

    let mut ident = Check::new("multifunctor.identity", "preserves identities");
    for x in &cat.objects {
        let r = (|| n.mor_eq(&f.mor(&m.identity(x)?)?, &n.identity(&f.obj(x)?)?))();
        ident.record_result(r, || m.show_obj(x))?;
    }
    report.push(ident.finish());

    let mut comp = Check::new("multifunctor.composition", "preserves composition");
    let mut count = 0usize;
    for g in cat.all() {
        let ys = m.sources(g);
        cat.for_each_tuple(m, &ys, caps.arity, &mut |fs| {
            count += 1;
            caps.guard(count)?;
            let r = (|| {
                let lhs = f.mor(&m.compose(fs, g)?)?;
                let ffs: Vec<N::Mor> = fs.iter().map(|h| f.mor(h)).collect::<Result<_>>()?;
                let rhs = n.compose(&ffs, &f.mor(g)?)?;
                n.mor_eq(&lhs, &rhs)
            })();
            comp.record_result(r, || show_composite(m, fs, g))
        })?;
    }
    report.push(comp.finish());
    Ok(report)
}

/// Checks `F f · r_Y = (r_{X1}, ..., r_{Xn}) · G f` for every `f` within the cap.
pub fn check_multinat<M, N, F, G, R>(m: &M, n: &N, f: &F, g: &G, r: &R, caps: &Caps) -> Result<Report>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
    G: MultiFunctor<M, N>,
    R: MultiNat<M, N>,
{
    let cat = Catalog::build(m, caps)?;
    let mut report = Report::new("multinatural transformation");
    let mut typing = Check::new("multinat.typing", "components r_X: FX -> GX");
    for x in &cat.objects {
        let res = (|| {
            let rx = r.component(x)?;
            Ok(n.sources(&rx) == vec![f.obj(x)?] && n.target(&rx) == g.obj(x)?)
        })();
        typing.record_result(res, || m.show_obj(x))?;
    }
    report.push(typing.finish());

    let mut eq = Check::new("multinat.equation", "Ff·r_Y = (r_X1,...,r_Xn)·Gf");
    for h in cat.all() {
        let res = (|| {
            let lhs = n.compose(&[f.mor(h)?], &r.component(&m.target(h))?)?;
            let rs: Vec<N::Mor> = m.sources(h).iter().map(|x| r.component(x)).collect::<Result<_>>()?;
            let rhs = n.compose(&rs, &g.mor(h)?)?;
            n.mor_eq(&lhs, &rhs)
        })();
        eq.record_result(res, || m.show_mor(h))?;
    }
    report.push(eq.finish());
    Ok(report)
}

/// Compares two multifunctors on every object and every morphism within the cap.
pub fn multifunctors_equal<M, N, F, G>(m: &M, n: &N, f: &F, g: &G, caps: &Caps) -> Result<Report>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
    G: MultiFunctor<M, N>,
{
    let cat = Catalog::build(m, caps)?;
    let mut report = Report::new("multifunctor equality");
    let mut obj = Check::new("multi-eq.objects", "same object map");
    for x in &cat.objects {
        let r = (|| Ok(f.obj(x)? == g.obj(x)?))();
        obj.record_result(r, || m.show_obj(x))?;
    }
    report.push(obj.finish());
    let mut mor = Check::new("multi-eq.morphisms", "same morphism map on every signature");
    for h in cat.all() {
        let r = (|| n.mor_eq(&f.mor(h)?, &g.mor(h)?))();
        mor.record_result(r, || m.show_mor(h))?;
    }
    report.push(mor.finish());
    Ok(report)
}
