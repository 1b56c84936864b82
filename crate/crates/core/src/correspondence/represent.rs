use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::{tag, Underlying};
use crate::budget::Caps;
use crate::category::Category;
use crate::closed::{check_closed_iso, ClosedCategory, ClosedFunctor};
use crate::closed_multi::{check_closedness, check_unit_object, ClosedMulti, ClosednessWitness, UnitWitness};
use crate::enriched::{build_lx, enumerate_vnat, Iterated, UnderlyingV, VFunctor};
use crate::error::{Error, Result};
use crate::hf::Hf;
use crate::multicat::{check_composable, check_multicategory_axioms, concat_sources, show_sig, signatures, Multicategory};
use crate::report::{Check, Report};

/// A morphism `X1,...,Xn -> Y` of the representing multicategory: a
/// V-natural family `p_A: und(Y,A) -> T(A)` with
/// `T(A) = und(Xn, ... und(X1, A))`, stored with its point
/// `Γ(p) = j_Y · p_Y: 𝟙 -> T(Y)`.
#[derive(Clone)]
pub struct RMor<O, M> {
    pub sources: Vec<O>,
    pub target: O,
    /// Components in the order of the enumerated objects.
    pub comps: Arc<Vec<M>>,
    pub gamma: M,
}

impl<O: fmt::Debug, M: fmt::Debug> fmt::Debug for RMor<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ⁻¹({:?}): {:?} -> {:?}", self.gamma, self.sources, self.target)
    }
}

type Families<V> = Arc<Vec<RMor<<V as Category>::Obj, <V as Category>::Mor>>>;

/// The multicategory of V-natural families `L^Y -> L^{Xn}∘...∘L^{X1}`.
pub struct RepresentingMulti<'v, V: ClosedCategory> {
    pub v: &'v V,
    pub name: String,
    pub caps: Caps,
    objs: Vec<V::Obj>,
    index: HashMap<V::Obj, usize>,
    cache: Mutex<HashMap<(Vec<V::Obj>, V::Obj), Families<V>>>,
}

impl<'v, V: ClosedCategory> RepresentingMulti<'v, V> {
    pub fn new(v: &'v V, name: &str, caps: Caps) -> Result<Self> {
        let objs = caps.budget.objects(v.objects()?)?;
        let index = objs.iter().enumerate().map(|(k, x)| (x.clone(), k)).collect();
        Ok(RepresentingMulti {
            v,
            name: name.to_string(),
            caps,
            objs,
            index,
            cache: Mutex::new(HashMap::new()),
        })
    }

    fn pos(&self, a: &V::Obj) -> Result<usize> {
        self.index
            .get(a)
            .copied()
            .ok_or_else(|| Error::Malformed(format!("{} is not an enumerated object", self.v.show_obj(a))))
    }

    /// `T(A) = und(Xn, ... und(X1, A))`.
    pub fn t_obj(&self, xs: &[V::Obj], a: &V::Obj) -> Result<V::Obj> {
        let t = Iterated { v: self.v, xs: xs.to_vec() };
        VFunctor::<UnderlyingV<'_, V>, UnderlyingV<'_, V>>::obj(&t, a)
    }

    fn make(&self, sources: Vec<V::Obj>, target: V::Obj, comps: Vec<V::Mor>) -> Result<RMor<V::Obj, V::Mor>> {
        let gamma = self.v.compose(&self.v.j(&target)?, &comps[self.pos(&target)?])?;
        Ok(RMor {
            sources,
            target,
            comps: Arc::new(comps),
            gamma,
        })
    }

    /// Every V-natural family into `T` for the signature `xs; y`.
    pub fn families(&self, xs: &[V::Obj], y: &V::Obj) -> Result<Families<V>> {
        let key = (xs.to_vec(), y.clone());
        if let Some(f) = self.cache.lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let t = Iterated { v: self.v, xs: xs.to_vec() };
        let mut found = Vec::new();
        for comps in enumerate_vnat(&UnderlyingV(self.v), &build_lx(self.v, y), &t, &self.caps)? {
            found.push(self.make(xs.to_vec(), y.clone(), comps)?);
        }
        let out: Families<V> = Arc::new(found);
        self.cache.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// The family with a given point, `Γ⁻¹(g)`.
    pub fn from_gamma(&self, xs: &[V::Obj], y: &V::Obj, g: &V::Mor) -> Result<RMor<V::Obj, V::Mor>> {
        let key = self.v.mor_key(g)?;
        for p in self.families(xs, y)?.iter() {
            if self.v.mor_key(&p.gamma)? == key {
                return Ok(p.clone());
            }
        }
        Err(Error::NotBijective(format!(
            "{}: no V-natural family with point {}",
            self.name,
            self.v.show_mor(g)
        )))
    }

    /// Component at `A` of the horizontal composite of the `fs`, from
    /// `L^{Yn}∘...∘L^{Y1}(A)` to `Tn∘...∘T1(A)`.
    fn horizontal(&self, fs: &[RMor<V::Obj, V::Mor>], a: &V::Obj) -> Result<V::Mor> {
        let Some((last, init)) = fs.split_last() else {
            return self.v.identity(a);
        };
        let rest = self.horizontal(init, a)?;
        let inner: Vec<V::Obj> = init.iter().flat_map(|f| f.sources.iter().cloned()).collect();
        let ra = self.t_obj(&inner, a)?;
        let lifted = self.v.hom_mor(&self.v.identity(&last.target)?, &rest)?;
        self.v.compose(&lifted, &last.comps[self.pos(&ra)?])
    }

    /// Objects in enumeration order.
    pub fn object_list(&self) -> &[V::Obj] {
        &self.objs
    }
}

impl<'v, V: ClosedCategory> Multicategory for RepresentingMulti<'v, V> {
    type Obj = V::Obj;
    type Mor = RMor<V::Obj, V::Mor>;

    fn objects(&self) -> Result<Vec<V::Obj>> {
        Ok(self.objs.clone())
    }
    fn hom(&self, sources: &[V::Obj], target: &V::Obj) -> Result<Vec<Self::Mor>> {
        if sources.len() > self.caps.arity {
            return Err(Error::BudgetExceeded(format!(
                "{}: arity {} exceeds the cap {}",
                self.name,
                sources.len(),
                self.caps.arity
            )));
        }
        Ok(self.families(sources, target)?.to_vec())
    }
    fn sources(&self, f: &Self::Mor) -> Vec<V::Obj> {
        f.sources.clone()
    }
    fn target(&self, f: &Self::Mor) -> V::Obj {
        f.target.clone()
    }
    fn identity(&self, x: &V::Obj) -> Result<Self::Mor> {
        let comps = self
            .objs
            .iter()
            .map(|a| self.v.identity(&self.v.hom_obj(x, a)?))
            .collect::<Result<_>>()?;
        self.make(vec![x.clone()], x.clone(), comps)
    }
    fn compose(&self, fs: &[Self::Mor], g: &Self::Mor) -> Result<Self::Mor> {
        check_composable(self, fs, g)?;
        let mut comps = Vec::with_capacity(self.objs.len());
        for (k, a) in self.objs.iter().enumerate() {
            comps.push(self.v.compose(&g.comps[k], &self.horizontal(fs, a)?)?);
        }
        self.make(concat_sources(self, fs), g.target.clone(), comps)
    }
    fn mor_key(&self, f: &Self::Mor) -> Result<Hf> {
        self.v.mor_key(&f.gamma)
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        if f.sources != g.sources || f.target != g.target {
            return Ok(false);
        }
        for (a, b) in f.comps.iter().zip(g.comps.iter()) {
            if !self.v.mor_eq(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    fn name(&self) -> String {
        self.name.clone()
    }
    fn show_obj(&self, x: &V::Obj) -> String {
        self.v.show_obj(x)
    }
    fn show_mor(&self, f: &Self::Mor) -> String {
        format!("Γ⁻¹({})", self.v.show_mor(&f.gamma))
    }
}

/// The representing multicategory with `und(X;Z) = und(X,Z)`,
/// `Γ(ev_{X;Z}) = j_{und(X,Z)}` and unit `u_A = i_A⁻¹`.
pub fn build_representing_multicategory<'v, V: ClosedCategory>(
    v: &'v V,
    name: &str,
    caps: Caps,
) -> Result<(ClosedMulti<RepresentingMulti<'v, V>>, UnitWitness<V::Obj, RMor<V::Obj, V::Mor>>)> {
    let m = RepresentingMulti::new(v, name, caps)?;
    let mut witness = ClosednessWitness::default();
    for x in &m.objs {
        for z in &m.objs {
            let h = v.hom_obj(x, z)?;
            let ev = m.from_gamma(&[x.clone(), h.clone()], z, &v.j(&h)?)?;
            witness.hom_obj.insert((x.clone(), z.clone()), h);
            witness.ev.insert((x.clone(), z.clone()), ev);
        }
    }
    let unit = v.unit();
    let comps = m.objs.iter().map(|a| v.i_inv(a)).collect::<Result<_>>()?;
    let u = m.make(Vec::new(), unit.clone(), comps)?;
    Ok((ClosedMulti::new(m, witness, caps), UnitWitness { unit, u }))
}

/// `(L, 1, 1): V -> und(mcV)`, sending `f: X -> Y` to the family
/// `und(f,1): und(Y,A) -> und(X,A)`.
pub struct LFunctor<'a, 'v, V: ClosedCategory> {
    pub m: &'a RepresentingMulti<'v, V>,
}

impl<'a, 'c, 'v, V: ClosedCategory> ClosedFunctor<V, Underlying<'c, RepresentingMulti<'v, V>>> for LFunctor<'a, 'v, V> {
    fn obj(&self, x: &V::Obj) -> Result<V::Obj> {
        Ok(x.clone())
    }
    fn mor(&self, f: &V::Mor) -> Result<RMor<V::Obj, V::Mor>> {
        let v = self.m.v;
        let comps = self
            .m
            .objs
            .iter()
            .map(|a| v.hom_mor(f, &v.identity(a)?))
            .collect::<Result<_>>()?;
        self.m.make(vec![v.dom(f)], v.cod(f), comps)
    }
    fn hat(&self, x: &V::Obj, y: &V::Obj) -> Result<RMor<V::Obj, V::Mor>> {
        self.m.identity(&self.m.v.hom_obj(x, y)?)
    }
    fn zero(&self) -> Result<RMor<V::Obj, V::Mor>> {
        self.m.identity(&self.m.v.unit())
    }
}

/// Builds mcV and checks that it is a closed multicategory with a unit
/// object whose underlying closed category is isomorphic to `V` via
/// `(L, 1, 1)`, with `i`, `j` and `L` matching on the nose.
pub fn verify_essential_surjectivity<V: ClosedCategory>(v: &V, name: &str, caps: Caps) -> Result<Report> {
    let (cm, uw) = build_representing_multicategory(v, name, caps)?;
    let m = &cm.m;
    let mut report = Report::new(format!("representing multicategory of {name}"));
    for item in tag(check_multicategory_axioms(m, &caps)?, "mcV.") {
        report.push(item);
    }

    let mut gam = Check::new("represent.gamma-bijective", "Γ: V-natural families -> points of T(Y)");
    for n in 0..=caps.arity {
        for xs in signatures(&m.objs, n) {
            for y in &m.objs {
                let r = (|| {
                    let mut keys = Vec::new();
                    for p in m.families(&xs, y)?.iter() {
                        keys.push(v.mor_key(&p.gamma)?);
                    }
                    let mut points = Vec::new();
                    for g in caps.budget.hom(v.hom(&v.unit(), &m.t_obj(&xs, y)?)?)? {
                        points.push(v.mor_key(&g)?);
                    }
                    let n = keys.len();
                    keys.sort();
                    keys.dedup();
                    points.sort();
                    Ok(n == keys.len() && keys == points)
                })();
                gam.record_result(r, || show_sig(m, &xs, y))?;
            }
        }
    }
    report.push(gam.finish());

    for item in tag(check_closedness(&cm)?, "mcV.") {
        report.push(item);
    }
    for item in tag(check_unit_object(&cm, &uw)?, "mcV.") {
        report.push(item);
    }

    // und(Xs;Z) and the T of φ(g) unfold to the same object of V
    let mut gp = Check::new("represent.gamma-phi", "Γ(φ(g)) = Γ(g)");
    for n in 1..=caps.arity {
        for xs in signatures(&m.objs, n) {
            for k in 0..=caps.arity - n {
                for ys in signatures(&m.objs, k) {
                    for z in &m.objs {
                        let r = (|| {
                            for g in m.hom(&ys, &cm.hom_obj_n(&xs, z)?)? {
                                if !v.mor_eq(&cm.phi(&xs, z, &g)?.gamma, &g.gamma)? {
                                    return Ok(false);
                                }
                            }
                            Ok(true)
                        })();
                        gp.record_result(r, || {
                            format!("Xs=({}), Ys=({}), Z={}", show_objs(m, &xs), show_objs(m, &ys), m.show_obj(z))
                        })?;
                    }
                }
            }
        }
    }
    report.push(gp.finish());

    let mut evc = Check::new("ident.ev-components", "(ev_{X;Z})_A = L^X_{ZA}");
    for x in &m.objs {
        for z in &m.objs {
            let r = (|| {
                let ev = cm.ev(x, z)?;
                for (k, a) in m.objs.iter().enumerate() {
                    if !v.mor_eq(&ev.comps[k], &v.l(x, z, a)?)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })();
            evc.record_result(r, || format!("X={}, Z={}", v.show_obj(x), v.show_obj(z)))?;
        }
    }
    report.push(evc.finish());

    // the internal identity of und(X,Z) is j
    let mut gev = Check::new("ident.gamma-ev", "Γ(ev_{X;Z}) = 1 = j_{und(X,Z)}");
    for x in &m.objs {
        for z in &m.objs {
            let r = (|| v.mor_eq(&cm.ev(x, z)?.gamma, &v.j(&v.hom_obj(x, z)?)?))();
            gev.record_result(r, || format!("X={}, Z={}", v.show_obj(x), v.show_obj(z)))?;
        }
    }
    report.push(gev.finish());

    let u = Underlying::new(&cm, uw);
    let lf = LFunctor { m };
    for item in tag(check_closed_iso(v, &u, &lf, &caps.budget)?, "(L,1,1).") {
        report.push(item);
    }
    let mut ii = Check::new("ident.i", "i^{mcV}_X = L^{i_X}");
    let mut jj = Check::new("ident.j", "j^{mcV}_X = L^{j_X}");
    let mut ll = Check::new("ident.L", "L^{X,mcV}_{YZ} = L^{L^X_{YZ}}");
    for x in &m.objs {
        let r = (|| m.mor_eq(&u.i(x)?, &lf.mor(&v.i(x)?)?))();
        ii.record_result(r, || v.show_obj(x))?;
        let r = (|| m.mor_eq(&u.j(x)?, &lf.mor(&v.j(x)?)?))();
        jj.record_result(r, || v.show_obj(x))?;
        for y in &m.objs {
            for z in &m.objs {
                let r = (|| m.mor_eq(&u.l(x, y, z)?, &lf.mor(&v.l(x, y, z)?)?))();
                ll.record_result(r, || {
                    format!("X={}, Y={}, Z={}", v.show_obj(x), v.show_obj(y), v.show_obj(z))
                })?;
            }
        }
    }
    report.push(ii.finish());
    report.push(jj.finish());
    report.push(ll.finish());
    Ok(report)
}

fn show_objs<M: Multicategory>(m: &M, xs: &[M::Obj]) -> String {
    xs.iter().map(|x| m.show_obj(x)).collect::<Vec<_>>().join(",")
}
