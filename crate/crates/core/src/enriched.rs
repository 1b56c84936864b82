//! Categories, functors and natural families enriched in a closed category,
//! in the form with `L_{XYZ}: A(Y,Z) -> und(A(X,Y), A(X,Z))` in place of a
//! composition map.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::budget::{Caps, SizeBudget};
use crate::category::Category;
use crate::closed::{
    gamma, hom_post, hom_pre, ClosedCategory, ClosedFunctor, EFunctor, EkNormalized, FinSet, SetObj,
};
use crate::error::{Error, Result};
use crate::hf::Hf;
use crate::report::{Check, Item, Report};

type BaseObj<A> = <<A as VCategory>::Base as Category>::Obj;
type BaseMor<A> = <<A as VCategory>::Base as Category>::Mor;

/// A category enriched in the closed category `Base`.
pub trait VCategory {
    type Base: ClosedCategory;
    type Obj: Clone + Ord + Hash + Debug;

    fn base(&self) -> &Self::Base;
    fn objects(&self) -> Result<Vec<Self::Obj>>;
    fn hom_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Result<BaseObj<Self>>;
    /// `j_X: 𝟙 -> A(X,X)`.
    fn j(&self, x: &Self::Obj) -> Result<BaseMor<Self>>;
    /// `L_{XYZ}: A(Y,Z) -> und(A(X,Y), A(X,Z))`.
    fn l(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<BaseMor<Self>>;
    fn show_obj(&self, x: &Self::Obj) -> String {
        format!("{x:?}")
    }
}

/// A V-functor: an object map and `F_{XY}: A(X,Y) -> B(FX,FY)`.
pub trait VFunctor<A: VCategory, B: VCategory<Base = A::Base>> {
    fn obj(&self, x: &A::Obj) -> Result<B::Obj>;
    fn hom(&self, x: &A::Obj, y: &A::Obj) -> Result<BaseMor<A>>;
}

/// A family `α_X: FX -> GX` of base morphisms between V-functors into
/// `und V`.
pub trait VNatFamily<A: VCategory> {
    fn component(&self, x: &A::Obj) -> Result<BaseMor<A>>;
}

/// Components listed in the order of the source's objects.
pub struct TableFamily<'a, O, M> {
    pub objects: &'a [O],
    pub comps: &'a [M],
}

impl<'a, A: VCategory> VNatFamily<A> for TableFamily<'a, A::Obj, BaseMor<A>> {
    fn component(&self, x: &A::Obj) -> Result<BaseMor<A>> {
        self.objects
            .iter()
            .position(|o| o == x)
            .map(|k| self.comps[k].clone())
            .ok_or_else(|| Error::Malformed(format!("no component at {x:?}")))
    }
}

/// `und V`: objects of `V`, `A(X,Y) = und(X,Y)`, `j` and `L` from `V`.
pub struct UnderlyingV<'v, V>(pub &'v V);

impl<'v, V: ClosedCategory> VCategory for UnderlyingV<'v, V> {
    type Base = V;
    type Obj = V::Obj;

    fn base(&self) -> &V {
        self.0
    }
    fn objects(&self) -> Result<Vec<V::Obj>> {
        self.0.objects()
    }
    fn hom_obj(&self, x: &V::Obj, y: &V::Obj) -> Result<V::Obj> {
        self.0.hom_obj(x, y)
    }
    fn j(&self, x: &V::Obj) -> Result<V::Mor> {
        self.0.j(x)
    }
    fn l(&self, x: &V::Obj, y: &V::Obj, z: &V::Obj) -> Result<V::Mor> {
        self.0.l(x, y, z)
    }
    fn show_obj(&self, x: &V::Obj) -> String {
        self.0.show_obj(x)
    }
}

pub fn build_underlying_v_category<V: ClosedCategory>(v: &V) -> UnderlyingV<'_, V> {
    UnderlyingV(v)
}

/// `L^{Xn}∘...∘L^{X1}: und V -> und V`, sending `A` to
/// `und(Xn, ... und(X1, A))`. With one object this is `L^X`; with none it
/// is the identity.
pub struct Iterated<'v, V: ClosedCategory> {
    pub v: &'v V,
    pub xs: Vec<V::Obj>,
}

impl<'v, V: ClosedCategory> Iterated<'v, V> {
    fn obj_upto(&self, n: usize, a: &V::Obj) -> Result<V::Obj> {
        self.xs[..n].iter().try_fold(a.clone(), |acc, x| self.v.hom_obj(x, &acc))
    }

    fn hom_upto(&self, n: usize, a: &V::Obj, b: &V::Obj) -> Result<V::Mor> {
        let v = self.v;
        if n == 0 {
            return v.identity(&v.hom_obj(a, b)?);
        }
        let rest = self.hom_upto(n - 1, a, b)?;
        let l = v.l(&self.xs[n - 1], &self.obj_upto(n - 1, a)?, &self.obj_upto(n - 1, b)?)?;
        v.compose(&rest, &l)
    }
}

impl<'v, 'w, V: ClosedCategory> VFunctor<UnderlyingV<'w, V>, UnderlyingV<'w, V>> for Iterated<'v, V> {
    fn obj(&self, a: &V::Obj) -> Result<V::Obj> {
        self.obj_upto(self.xs.len(), a)
    }
    /// `T_{AB} = L^{X1}_{AB} · L^{X2}_{T1 A, T1 B} · ...`.
    fn hom(&self, a: &V::Obj, b: &V::Obj) -> Result<V::Mor> {
        self.hom_upto(self.xs.len(), a, b)
    }
}

/// `L^X` as a V-functor `und V -> und V`.
pub fn build_lx<'v, V: ClosedCategory>(v: &'v V, x: &V::Obj) -> Iterated<'v, V> {
    Iterated { v, xs: vec![x.clone()] }
}

/// `L^f: L^Y -> L^X` for `f: X -> Y`, with components `und(f,1)`.
pub struct LF<'v, V: ClosedCategory> {
    pub v: &'v V,
    pub f: V::Mor,
}

impl<'v, 'w, V: ClosedCategory> VNatFamily<UnderlyingV<'w, V>> for LF<'v, V> {
    fn component(&self, a: &V::Obj) -> Result<V::Mor> {
        hom_pre(self.v, &self.f, a)
    }
}

pub fn build_lf<'v, V: ClosedCategory>(v: &'v V, f: &V::Mor) -> LF<'v, V> {
    LF { v, f: f.clone() }
}

/// VC1 `j_Y·L_{XYY} = j_{A(X,Y)}`, VC2 `L_{XXY}·und(j_X,1) = i_{A(X,Y)}`,
/// VC3 `L_{XUV}·L^{A(X,Y)}·und(L_{XYU},1) = L_{YUV}·und(1,L_{XYV})`.
pub fn check_vc_axioms<A: VCategory>(a: &A, budget: &SizeBudget) -> Result<Report> {
    let v = a.base();
    let objs = budget.objects(a.objects()?)?;
    let mut report = Report::new("V-category axioms");
    let mut vc1 = Check::new("VC1", "VC1");
    let mut vc2 = Check::new("VC2", "VC2");
    for x in &objs {
        for y in &objs {
            let locus = || format!("X={}, Y={}", a.show_obj(x), a.show_obj(y));
            let r = (|| {
                let lhs = v.compose(&a.j(y)?, &a.l(x, y, y)?)?;
                v.mor_eq(&lhs, &v.j(&a.hom_obj(x, y)?)?)
            })();
            vc1.record_result(r, locus)?;
            let r = (|| {
                let axy = a.hom_obj(x, y)?;
                let lhs = v.compose(&a.l(x, x, y)?, &hom_pre(v, &a.j(x)?, &axy)?)?;
                v.mor_eq(&lhs, &v.i(&axy)?)
            })();
            vc2.record_result(r, locus)?;
        }
    }
    report.push(vc1.finish());
    report.push(vc2.finish());
    let mut vc3 = Check::new("VC3", "VC3");
    for x in &objs {
        for y in &objs {
            for u in &objs {
                for w in &objs {
                    let r = (|| {
                        let (axy, axu, axw) = (a.hom_obj(x, y)?, a.hom_obj(x, u)?, a.hom_obj(x, w)?);
                        let lhs = v.compose(&a.l(x, u, w)?, &v.l(&axy, &axu, &axw)?)?;
                        let lhs = v.compose(&lhs, &hom_pre(v, &a.l(x, y, u)?, &v.hom_obj(&axy, &axw)?)?)?;
                        let rhs = v.compose(&a.l(y, u, w)?, &hom_post(v, &a.hom_obj(y, u)?, &a.l(x, y, w)?)?)?;
                        v.mor_eq(&lhs, &rhs)
                    })();
                    vc3.record_result(r, || {
                        format!(
                            "X={}, Y={}, U={}, V={}",
                            a.show_obj(x),
                            a.show_obj(y),
                            a.show_obj(u),
                            a.show_obj(w)
                        )
                    })?;
                }
            }
        }
    }
    report.push(vc3.finish());
    Ok(report)
}

/// VF1 `j_X·F_{XX} = j_{FX}` and VF2
/// `F_{YZ}·L_{FX,FY,FZ}·und(F_{XY},1) = L_{XYZ}·und(1,F_{XZ})`.
pub fn check_vf_axioms<A, B, F>(a: &A, b: &B, f: &F, budget: &SizeBudget) -> Result<Report>
where
    A: VCategory,
    B: VCategory<Base = A::Base>,
    F: VFunctor<A, B>,
{
    let v = a.base();
    let objs = budget.objects(a.objects()?)?;
    let mut report = Report::new("V-functor axioms");
    let mut vf1 = Check::new("VF1", "VF1");
    for x in &objs {
        let r = (|| {
            let lhs = v.compose(&a.j(x)?, &f.hom(x, x)?)?;
            v.mor_eq(&lhs, &b.j(&f.obj(x)?)?)
        })();
        vf1.record_result(r, || a.show_obj(x))?;
    }
    report.push(vf1.finish());
    let mut vf2 = Check::new("VF2", "VF2");
    for x in &objs {
        for y in &objs {
            for z in &objs {
                let r = (|| {
                    let (fx, fy, fz) = (f.obj(x)?, f.obj(y)?, f.obj(z)?);
                    let lhs = v.compose(&f.hom(y, z)?, &b.l(&fx, &fy, &fz)?)?;
                    let lhs = v.compose(&lhs, &hom_pre(v, &f.hom(x, y)?, &b.hom_obj(&fx, &fz)?)?)?;
                    let rhs = v.compose(&a.l(x, y, z)?, &hom_post(v, &a.hom_obj(x, y)?, &f.hom(x, z)?)?)?;
                    v.mor_eq(&lhs, &rhs)
                })();
                vf2.record_result(r, || {
                    format!("X={}, Y={}, Z={}", a.show_obj(x), a.show_obj(y), a.show_obj(z))
                })?;
            }
        }
    }
    report.push(vf2.finish());
    Ok(report)
}

/// `F_{XY}·und(1,α_Y) = G_{XY}·und(α_X,1)` as maps
/// `A(X,Y) -> und(FX, GY)`.
fn vnat_square<'v, A, F, G>(
    a: &A,
    f: &F,
    g: &G,
    x: &A::Obj,
    y: &A::Obj,
    ax: &BaseMor<A>,
    ay: &BaseMor<A>,
) -> Result<bool>
where
    A: VCategory,
    A::Base: 'v,
    F: VFunctor<A, UnderlyingV<'v, A::Base>>,
    G: VFunctor<A, UnderlyingV<'v, A::Base>>,
{
    let v = a.base();
    let lhs = v.compose(&f.hom(x, y)?, &hom_post(v, &f.obj(x)?, ay)?)?;
    let rhs = v.compose(&g.hom(x, y)?, &hom_pre(v, ax, &g.obj(y)?)?)?;
    v.mor_eq(&lhs, &rhs)
}

pub fn check_vnat<'v, A, F, G, T>(a: &A, f: &F, g: &G, t: &T, budget: &SizeBudget) -> Result<Report>
where
    A: VCategory,
    A::Base: 'v,
    F: VFunctor<A, UnderlyingV<'v, A::Base>>,
    G: VFunctor<A, UnderlyingV<'v, A::Base>>,
    T: VNatFamily<A>,
{
    let objs = budget.objects(a.objects()?)?;
    let mut report = Report::new("V-natural family");
    let mut sq = Check::new("vnat.square", "V-naturality square");
    for x in &objs {
        for y in &objs {
            let r = (|| vnat_square(a, f, g, x, y, &t.component(x)?, &t.component(y)?))();
            sq.record_result(r, || format!("X={}, Y={}", a.show_obj(x), a.show_obj(y)))?;
        }
    }
    report.push(sq.finish());
    Ok(report)
}

/// Every V-natural family `F -> G`, components in object order, generated
/// object by object and pruned at the first failing square.
pub fn enumerate_vnat<'v, A, F, G>(a: &A, f: &F, g: &G, caps: &Caps) -> Result<Vec<Vec<BaseMor<A>>>>
where
    A: VCategory,
    A::Base: 'v,
    F: VFunctor<A, UnderlyingV<'v, A::Base>>,
    G: VFunctor<A, UnderlyingV<'v, A::Base>>,
{
    let v = a.base();
    let objs = caps.budget.objects(a.objects()?)?;
    let mut cands = Vec::with_capacity(objs.len());
    for x in &objs {
        cands.push(caps.budget.hom(v.hom(&f.obj(x)?, &g.obj(x)?)?)?);
    }
    let mut found = Vec::new();
    let mut chosen = Vec::with_capacity(objs.len());
    let mut visited = 0usize;
    search(a, f, g, &objs, &cands, &mut chosen, &mut found, &mut visited, caps)?;
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn search<'v, A, F, G>(
    a: &A,
    f: &F,
    g: &G,
    objs: &[A::Obj],
    cands: &[Vec<BaseMor<A>>],
    chosen: &mut Vec<BaseMor<A>>,
    found: &mut Vec<Vec<BaseMor<A>>>,
    visited: &mut usize,
    caps: &Caps,
) -> Result<()>
where
    A: VCategory,
    A::Base: 'v,
    F: VFunctor<A, UnderlyingV<'v, A::Base>>,
    G: VFunctor<A, UnderlyingV<'v, A::Base>>,
{
    let k = chosen.len();
    if k == objs.len() {
        found.push(chosen.clone());
        return Ok(());
    }
    let y = &objs[k];
    'next: for ay in &cands[k] {
        *visited += 1;
        caps.guard(*visited)?;
        for (i, x) in objs[..=k].iter().enumerate() {
            let ax = if i == k { ay } else { &chosen[i] };
            if !vnat_square(a, f, g, x, y, ax, ay)? || !vnat_square(a, f, g, y, x, ay, ax)? {
                continue 'next;
            }
        }
        chosen.push(ay.clone());
        search(a, f, g, objs, cands, chosen, found, visited, caps)?;
        chosen.pop();
    }
    Ok(())
}

/// `Γ(p) = (V p_W)(1_W)`, read through `E = V(𝟙,-)`: the point
/// `j_W · p_W: 𝟙 -> T W`.
pub fn gamma_repr<'v, V: ClosedCategory, P: VNatFamily<UnderlyingV<'v, V>>>(
    v: &'v V,
    w: &V::Obj,
    p: &P,
) -> Result<V::Mor> {
    v.compose(&v.j(w)?, &p.component(w)?)
}

/// The unique V-natural family `L^W -> T` with `Γ(p) = point`, by
/// exhaustive enumeration.
pub fn gamma_repr_inverse<'v, V, T>(v: &'v V, t: &T, w: &V::Obj, point: &V::Mor, caps: &Caps) -> Result<Vec<V::Mor>>
where
    V: ClosedCategory,
    T: VFunctor<UnderlyingV<'v, V>, UnderlyingV<'v, V>>,
{
    let u = UnderlyingV(v);
    let objs = u.objects()?;
    let k = objs
        .iter()
        .position(|o| o == w)
        .ok_or_else(|| Error::Malformed(format!("{} is not an enumerated object", v.show_obj(w))))?;
    let key = v.mor_key(point)?;
    let mut hit = None;
    for fam in enumerate_vnat(&u, &build_lx(v, w), t, caps)? {
        if v.mor_key(&v.compose(&v.j(w)?, &fam[k])?)? == key {
            if hit.is_some() {
                return Err(Error::NotBijective(format!(
                    "two V-natural families with point {}",
                    v.show_mor(point)
                )));
            }
            hit = Some(fam);
        }
    }
    hit.ok_or_else(|| Error::NotBijective(format!("no V-natural family with point {}", v.show_mor(point))))
}

/// Γ is a bijection from V-natural families `L^W -> T` onto `V(𝟙, T W)`.
pub fn check_gamma_repr<'v, V, T>(v: &'v V, t: &T, w: &V::Obj, caps: &Caps) -> Result<Item>
where
    V: ClosedCategory,
    T: VFunctor<UnderlyingV<'v, V>, UnderlyingV<'v, V>>,
{
    let u = UnderlyingV(v);
    let objs = u.objects()?;
    let mut check = Check::new("gamma-repr.bijective", "Γ: V-Cat(L^W, T) -> V(𝟙, T W)");
    let r = (|| {
        let k = objs.iter().position(|o| o == w).ok_or_else(|| Error::Malformed("object".into()))?;
        let mut keys = Vec::new();
        for fam in enumerate_vnat(&u, &build_lx(v, w), t, caps)? {
            keys.push(v.mor_key(&v.compose(&v.j(w)?, &fam[k])?)?);
        }
        let mut points = Vec::new();
        for p in caps.budget.hom(v.hom(&v.unit(), &t.obj(w)?)?)? {
            points.push(v.mor_key(&p)?);
        }
        let n = keys.len();
        keys.sort();
        keys.dedup();
        points.sort();
        Ok(n == keys.len() && keys == points)
    })();
    check.record_result(r, || format!("W={}", v.show_obj(w)))?;
    Ok(check.finish())
}


/// `Φ_*A`: objects of `A`, homs `Φ A(X,Y)`, `j = φ⁰·Φj` and `L = ΦL·φ̂`.
pub struct Pushforward<'a, A, W, P> {
    pub a: &'a A,
    pub target: &'a W,
    pub phi: P,
}

impl<'a, A, W, P> VCategory for Pushforward<'a, A, W, P>
where
    A: VCategory,
    W: ClosedCategory,
    P: ClosedFunctor<A::Base, W>,
{
    type Base = W;
    type Obj = A::Obj;

    fn base(&self) -> &W {
        self.target
    }
    fn objects(&self) -> Result<Vec<A::Obj>> {
        self.a.objects()
    }
    fn hom_obj(&self, x: &A::Obj, y: &A::Obj) -> Result<W::Obj> {
        self.phi.obj(&self.a.hom_obj(x, y)?)
    }
    fn j(&self, x: &A::Obj) -> Result<W::Mor> {
        self.target.compose(&self.phi.zero()?, &self.phi.mor(&self.a.j(x)?)?)
    }
    fn l(&self, x: &A::Obj, y: &A::Obj, z: &A::Obj) -> Result<W::Mor> {
        let hat = self.phi.hat(&self.a.hom_obj(x, y)?, &self.a.hom_obj(x, z)?)?;
        self.target.compose(&self.phi.mor(&self.a.l(x, y, z)?)?, &hat)
    }
    fn show_obj(&self, x: &A::Obj) -> String {
        self.a.show_obj(x)
    }
}

pub fn pushforward<'a, A, W, P>(phi: P, a: &'a A, target: &'a W) -> Pushforward<'a, A, W, P> {
    Pushforward { a, target, phi }
}

/// `E_* und V` compared with `W = ek_normalize(V)`: the same hom-sets,
/// identities `j_X(*)` and composites `L_{XYZ}(g)(f) = f·γ⁻¹(g·L^X_{YZ})`.
pub fn compare_e_pushforward_with_w<V: ClosedCategory>(
    v: &V,
    w: &EkNormalized<'_, V>,
    sets: &FinSet,
    budget: &SizeBudget,
) -> Result<Report> {
    let und = UnderlyingV(v);
    let e = EFunctor::new(v, sets);
    let push = pushforward(&e, &und, sets);
    let objs = budget.objects(v.objects()?)?;
    let star = Hf::atom(crate::closed::STAR);
    let mut report = Report::new("E_* und V = W");
    let mut homs = Check::new("E*.hom-sets", "E_*A(X,Y) = W(X,Y)");
    let mut ids = Check::new("E*.identities", "j_X(*) = 1^W_X");
    for x in &objs {
        let r = (|| {
            let jx = push.j(x)?;
            Ok(jx.apply(&star, budget)? == w.mor_key(&w.identity(x)?)?)
        })();
        ids.record_result(r, || v.show_obj(x))?;
        for y in &objs {
            let r = (|| {
                let mut keys = Vec::new();
                for p in w.hom(x, y)? {
                    keys.push(w.mor_key(&p)?);
                }
                Ok(push.hom_obj(x, y)? == SetObj::finite(keys))
            })();
            homs.record_result(r, || format!("X={}, Y={}", v.show_obj(x), v.show_obj(y)))?;
        }
    }
    report.push(homs.finish());
    report.push(ids.finish());
    let mut comp = Check::new("E*.composition", "L_{XYZ}(g)(f) = f·γ⁻¹(g·L^X_{YZ})");
    for x in &objs {
        for y in &objs {
            for z in &objs {
                let r = (|| {
                    let l = push.l(x, y, z)?;
                    for f in w.hom(x, y)? {
                        for g in w.hom(y, z)? {
                            let post = l.apply(&w.mor_key(&g)?, budget)?;
                            let image = post
                                .apply(&w.mor_key(&f)?)
                                .cloned()
                                .ok_or_else(|| Error::Malformed("L(g) is not a function table".into()))?;
                            if image != w.mor_key(&w.compose(&f, &g)?)? {
                                return Ok(false);
                            }
                        }
                    }
                    Ok(true)
                })();
                comp.record_result(r, || {
                    format!("X={}, Y={}, Z={}", v.show_obj(x), v.show_obj(y), v.show_obj(z))
                })?;
            }
        }
    }
    report.push(comp.finish());
    Ok(report)
}

/// `L^{f·g} = L^g · L^f` componentwise and `L^{1_X} = 1`.
pub fn check_l_functorial<V: ClosedCategory>(v: &V, budget: &SizeBudget) -> Result<Report> {
    let objs = budget.objects(v.objects()?)?;
    let homs = crate::category::all_morphisms(v, budget)?;
    let mut report = Report::new("X ↦ L^X, f ↦ L^f");
    let mut ident = Check::new("L.identity-family", "L^{1_X} = 1");
    for x in &objs {
        let lf = build_lf(v, &v.identity(x)?);
        for a in &objs {
            let r = (|| v.mor_eq(&lf.component(a)?, &v.identity(&v.hom_obj(x, a)?)?))();
            ident.record_result(r, || format!("X={}, A={}", v.show_obj(x), v.show_obj(a)))?;
        }
    }
    report.push(ident.finish());
    let mut comp = Check::new("L.contravariant", "L^{f·g} = L^g · L^f");
    let mut by_dom: BTreeMap<V::Obj, Vec<V::Mor>> = BTreeMap::new();
    for (x, _, ms) in &homs {
        by_dom.entry(x.clone()).or_default().extend(ms.iter().cloned());
    }
    for (_, _, fs) in &homs {
        for f in fs {
            for g in by_dom.get(&v.cod(f)).map(Vec::as_slice).unwrap_or(&[]) {
                for a in &objs {
                    let r = (|| {
                        let lhs = build_lf(v, &v.compose(f, g)?).component(a)?;
                        let rhs = v.compose(&build_lf(v, g).component(a)?, &build_lf(v, f).component(a)?)?;
                        v.mor_eq(&lhs, &rhs)
                    })();
                    comp.record_result(r, || format!("f={}, g={}, A={}", v.show_mor(f), v.show_mor(g), v.show_obj(a)))?;
                }
            }
        }
    }
    report.push(comp.finish());
    Ok(report)
}

/// `Γ(L^f) = γ(f)`.
pub fn gamma_of_lf<V: ClosedCategory>(v: &V, f: &V::Mor) -> Result<bool> {
    let y = v.cod(f);
    let lhs = v.compose(&v.j(&y)?, &build_lf(v, f).component(&y)?)?;
    v.mor_eq(&lhs, &gamma(v, f)?)
}
