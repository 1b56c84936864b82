//! Closed multicategories: internal hom-objects, currying, the hom actions,
//! the internal category `und C`, unit objects and closing transformations.

mod closing;
mod unit;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

pub use closing::{check_closing_composite, closing, verify_closing_lemmas, verify_closing_multinat};
pub use unit::{bar, check_unit_object, find_unit_object, unit_iso_inverse, UnitWitness};

use crate::budget::Caps;
use crate::error::{Error, Result};
use crate::hf::Hf;
use crate::multicat::{identities, show_list, show_sig, signatures, Catalog, Multicategory};
use crate::report::{Check, Report};

/// Unary internal hom-objects `und(X;Z)` with evaluations
/// `ev: X, und(X;Z) -> Z`. The choice is verified, never canonicalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosednessWitness<O: Ord, M> {
    pub hom_obj: BTreeMap<(O, O), O>,
    pub ev: BTreeMap<(O, O), M>,
}

impl<O: Ord, M> Default for ClosednessWitness<O, M> {
    fn default() -> Self {
        ClosednessWitness {
            hom_obj: BTreeMap::new(),
            ev: BTreeMap::new(),
        }
    }
}

type CurryKey<O> = (Vec<O>, Vec<O>, O);
type CurryTable<M> = Arc<HashMap<Hf, <M as Multicategory>::Mor>>;

/// A multicategory with a closedness witness. Curry tables are filled on
/// demand; concurrent fills write equal tables.
pub struct ClosedMulti<M: Multicategory> {
    pub m: M,
    pub witness: ClosednessWitness<M::Obj, M::Mor>,
    pub caps: Caps,
    tables: Mutex<HashMap<CurryKey<M::Obj>, CurryTable<M>>>,
}

impl<M: Multicategory> ClosedMulti<M> {
    pub fn new(m: M, witness: ClosednessWitness<M::Obj, M::Mor>, caps: Caps) -> ClosedMulti<M> {
        ClosedMulti {
            m,
            witness,
            caps,
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn hom_obj(&self, x: &M::Obj, z: &M::Obj) -> Result<M::Obj> {
        self.witness
            .hom_obj
            .get(&(x.clone(), z.clone()))
            .cloned()
            .ok_or_else(|| self.not_closed(x, z))
    }

    pub fn ev(&self, x: &M::Obj, z: &M::Obj) -> Result<M::Mor> {
        self.witness
            .ev
            .get(&(x.clone(), z.clone()))
            .cloned()
            .ok_or_else(|| self.not_closed(x, z))
    }

    fn not_closed(&self, x: &M::Obj, z: &M::Obj) -> Error {
        Error::NotClosed(format!(
            "{}: no internal hom for {}",
            self.m.name(),
            show_sig(&self.m, std::slice::from_ref(x), z)
        ))
    }

    /// `und(X1,...,Xm;Z)`, peeling the last argument:
    /// `und(Xm; und(X1,...,X(m-1);Z))`, with `und(;Z) = Z`.
    pub fn hom_obj_n(&self, xs: &[M::Obj], z: &M::Obj) -> Result<M::Obj> {
        match xs.split_last() {
            None => Ok(z.clone()),
            Some((last, init)) => self.hom_obj(last, &self.hom_obj_n(init, z)?),
        }
    }

    /// `ev: X1,...,Xm, und(X1,...,Xm;Z) -> Z`, with `ev_{;Z} = 1_Z`.
    pub fn ev_n(&self, xs: &[M::Obj], z: &M::Obj) -> Result<M::Mor> {
        let Some((last, init)) = xs.split_last() else {
            return self.m.identity(z);
        };
        let inner = self.hom_obj_n(init, z)?;
        let mut args = identities(&self.m, init)?;
        args.push(self.ev(last, &inner)?);
        self.m.compose(&args, &self.ev_n(init, z)?)
    }

    /// `φ(g) = (1_X1, ..., 1_Xm, g) · ev` for `g: Ys -> und(Xs;Z)`.
    pub fn phi(&self, xs: &[M::Obj], z: &M::Obj, g: &M::Mor) -> Result<M::Mor> {
        let mut args = identities(&self.m, xs)?;
        args.push(g.clone());
        self.m.compose(&args, &self.ev_n(xs, z)?)
    }

    fn table(&self, xs: &[M::Obj], ys: &[M::Obj], z: &M::Obj) -> Result<CurryTable<M>> {
        let key = (xs.to_vec(), ys.to_vec(), z.clone());
        if let Some(t) = self.tables.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let h = self.hom_obj_n(xs, z)?;
        let hom = self.caps.budget.hom(self.m.hom(ys, &h)?)?;
        let mut table = HashMap::with_capacity(hom.len());
        for g in hom {
            let k = self.m.mor_key(&self.phi(xs, z, &g)?)?;
            if let Some(prev) = table.insert(k, g.clone()) {
                return Err(Error::NotBijective(format!(
                    "{}: φ identifies {} and {} in {}",
                    self.m.name(),
                    self.m.show_mor(&prev),
                    self.m.show_mor(&g),
                    show_sig(&self.m, ys, &h)
                )));
            }
        }
        let table = Arc::new(table);
        self.tables.lock().unwrap().insert(key, table.clone());
        Ok(table)
    }

    /// The unique `g: X(split+1),... -> und(X1,...,Xsplit;Z)` with `φ(g) = f`.
    pub fn curry(&self, split: usize, f: &M::Mor) -> Result<M::Mor> {
        if split == 0 {
            return Ok(f.clone());
        }
        let sources = self.m.sources(f);
        if split > sources.len() {
            return Err(Error::Mismatch(format!(
                "cannot curry {} arguments of {}",
                split,
                self.m.show_mor(f)
            )));
        }
        let (xs, ys) = sources.split_at(split);
        let z = self.m.target(f);
        self.table(xs, ys, &z)?
            .get(&self.m.mor_key(f)?)
            .cloned()
            .ok_or_else(|| {
                Error::NotBijective(format!(
                    "{}: {} has no preimage under φ",
                    self.m.name(),
                    self.m.show_mor(f)
                ))
            })
    }

    /// `⟨f⟩`: currying of the first argument.
    pub fn bracket(&self, f: &M::Mor) -> Result<M::Mor> {
        self.curry(1, f)
    }

    /// `und(f1,...,fn;Z): und(Y1,...,Yn;Z) -> und(concatenated sources;Z)`.
    pub fn hom_pre(&self, fs: &[M::Mor], z: &M::Obj) -> Result<M::Mor> {
        let ys: Vec<M::Obj> = fs.iter().map(|f| self.m.target(f)).collect();
        let h = self.hom_obj_n(&ys, z)?;
        let mut args = fs.to_vec();
        args.push(self.m.identity(&h)?);
        let body = self.m.compose(&args, &self.ev_n(&ys, z)?)?;
        let k = fs.iter().map(|f| self.m.sources(f).len()).sum();
        self.curry(k, &body)
    }

    /// `und(X1,...,Xn;g): und(Xs;Y) -> und(Xs;Z)` for unary `g: Y -> Z`.
    pub fn hom_post(&self, xs: &[M::Obj], g: &M::Mor) -> Result<M::Mor> {
        let y = self.unary_source(g)?;
        let body = self.m.compose(&[self.ev_n(xs, &y)?], g)?;
        self.curry(xs.len(), &body)
    }

    fn unary_source(&self, g: &M::Mor) -> Result<M::Obj> {
        match self.m.sources(g).as_slice() {
            [y] => Ok(y.clone()),
            _ => Err(Error::Mismatch(format!("{} is not unary", self.m.show_mor(g)))),
        }
    }

    /// `μ: und(X;Y), und(Y;Z) -> und(X;Z)`, the curried composite of two
    /// evaluations.
    pub fn mu(&self, x: &M::Obj, y: &M::Obj, z: &M::Obj) -> Result<M::Mor> {
        let hyz = self.hom_obj(y, z)?;
        let first = [self.ev(x, y)?, self.m.identity(&hyz)?];
        let body = self.m.compose(&first, &self.ev(y, z)?)?;
        self.curry(1, &body)
    }

    /// `1^{und C}_X = ⟨1_X⟩: () -> und(X;X)`.
    pub fn unit_hom(&self, x: &M::Obj) -> Result<M::Mor> {
        self.curry(1, &self.m.identity(x)?)
    }

    /// `L^X_{YZ}: und(Y;Z) -> und(und(X;Y); und(X;Z))`, determined by
    /// `(1, L^X_{YZ}) · ev = μ`.
    pub fn l(&self, x: &M::Obj, y: &M::Obj, z: &M::Obj) -> Result<M::Mor> {
        self.curry(1, &self.mu(x, y, z)?)
    }

    /// Every n-ary hom-object and evaluation with `1 <= n <= cap - 1`.
    pub fn derive_nary_homs(&self) -> Result<Vec<(Vec<M::Obj>, M::Obj, M::Obj, M::Mor)>> {
        let objs = self.caps.budget.objects(self.m.objects()?)?;
        let mut out = Vec::new();
        for n in 1..self.caps.arity {
            for xs in signatures(&objs, n) {
                for z in &objs {
                    out.push((xs.clone(), z.clone(), self.hom_obj_n(&xs, z)?, self.ev_n(&xs, z)?));
                }
            }
        }
        Ok(out)
    }
}

fn eq_mor<M: Multicategory>(m: &M, a: Result<M::Mor>, b: Result<M::Mor>) -> Result<bool> {
    m.mor_eq(&a?, &b?)
}

/// Witness typing, bijectivity of `φ` at every signature within the cap,
/// the `m = 0` conventions and the two-step factorization of n-ary `φ`.
pub fn check_closedness<M: Multicategory>(cm: &ClosedMulti<M>) -> Result<Report> {
    let m = &cm.m;
    let caps = &cm.caps;
    let objs = caps.budget.objects(m.objects()?)?;
    let mut report = Report::new(format!("closedness: {}", m.name()));

    let mut typing = Check::new("closed.witness-typing", "internal Hom-object and ev: X, und(X;Z) -> Z");
    for x in &objs {
        for z in &objs {
            let r = (|| {
                let h = cm.hom_obj(x, z)?;
                let e = cm.ev(x, z)?;
                Ok(m.sources(&e) == vec![x.clone(), h] && m.target(&e) == *z)
            })();
            typing.record_result(r, || show_sig(m, std::slice::from_ref(x), z))?;
        }
    }
    report.push(typing.finish());

    let mut bij = Check::new("closed.phi-bijective", "φ is bijective");
    for n in 1..=caps.arity {
        for xs in signatures(&objs, n) {
            for k in 0..=caps.arity - n {
                for ys in signatures(&objs, k) {
                    for z in &objs {
                        let r = (|| {
                            let table = cm.table(&xs, &ys, z)?;
                            let mut all: Vec<M::Obj> = xs.clone();
                            all.extend(ys.iter().cloned());
                            let hom = caps.budget.hom(m.hom(&all, z)?)?;
                            if hom.len() != table.len() {
                                return Ok(false);
                            }
                            for f in &hom {
                                if !table.contains_key(&m.mor_key(f)?) {
                                    return Ok(false);
                                }
                            }
                            Ok(true)
                        })();
                        bij.record_result(r, || {
                            format!("Xs=({}), Ys=({}), Z={}", show_objs(m, &xs), show_objs(m, &ys), m.show_obj(z))
                        })?;
                    }
                }
            }
        }
    }
    report.push(bij.finish());

    let mut m0 = Check::new("closed.m0-convention", "und(;Z) = Z, ev = 1_Z, φ is the identity");
    for z in &objs {
        let r = (|| {
            if cm.hom_obj_n(&[], z)? != *z || !m.mor_eq(&cm.ev_n(&[], z)?, &m.identity(z)?)? {
                return Ok(false);
            }
            for k in 0..=caps.arity {
                for ys in signatures(&objs, k) {
                    for g in caps.budget.hom(m.hom(&ys, z)?)? {
                        if !m.mor_eq(&cm.phi(&[], z, &g)?, &g)? {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        })();
        m0.record_result(r, || m.show_obj(z))?;
    }
    report.push(m0.finish());

    let mut fact = Check::new(
        "closed.nary-factorization",
        "n-ary φ is the composite of two bijections",
    );
    for n in 2..=caps.arity {
        for xs in signatures(&objs, n) {
            let (last, init) = xs.split_last().unwrap();
            for k in 0..=caps.arity - n {
                for ys in signatures(&objs, k) {
                    for z in &objs {
                        let r = (|| {
                            let inner = cm.hom_obj_n(init, z)?;
                            let h = cm.hom_obj_n(&xs, z)?;
                            for g in caps.budget.hom(m.hom(&ys, &h)?)? {
                                let step = cm.phi(std::slice::from_ref(last), &inner, &g)?;
                                let two = cm.phi(init, z, &step)?;
                                if !m.mor_eq(&cm.phi(&xs, z, &g)?, &two)? {
                                    return Ok(false);
                                }
                            }
                            Ok(true)
                        })();
                        fact.record_result(r, || {
                            format!("Xs=({}), Ys=({}), Z={}", show_objs(m, &xs), show_objs(m, &ys), m.show_obj(z))
                        })?;
                    }
                }
            }
        }
    }
    report.push(fact.finish());
    Ok(report)
}

fn show_objs<M: Multicategory>(m: &M, xs: &[M::Obj]) -> String {
    xs.iter().map(|x| m.show_obj(x)).collect::<Vec<_>>().join(",")
}

/// Re-derives the decompositions of `⟨(f1,...,fn)·g⟩`, the functoriality of
/// the hom actions, the internal category laws and `L^X` as a functor.
pub fn verify_internal_lemmas<M: Multicategory>(cm: &ClosedMulti<M>) -> Result<Report> {
    let m = &cm.m;
    let caps = &cm.caps;
    let cat = Catalog::build(m, caps)?;
    let objs = cat.objects.clone();
    let mut report = Report::new(format!("internal lemmas: {}", m.name()));

    let mut a = Check::new("Lemma aux (a)", "f1 nullary: (f)·g = ((f2,...,fn)·⟨g⟩)·und(f1;Z)");
    let mut b = Check::new("Lemma aux (b)", "f1 unary: ⟨(f)·g⟩ = ((f2,...,fn)·⟨g⟩)·und(f1;Z)");
    let mut c = Check::new("Lemma aux (c)", "⟨(f)·g⟩ = (⟨f1⟩, (f2,...,fn)·⟨g⟩)·μ");
    let mut d = Check::new("Lemma aux (d)", "⟨f1·g⟩ = ⟨f1⟩·und(X;g)");
    let mut count = 0usize;
    for g in cat.all() {
        let ys = m.sources(g);
        if ys.is_empty() {
            continue;
        }
        let z = m.target(g);
        cat.for_each_tuple(m, &ys, caps.arity, &mut |fs| {
            count += 1;
            caps.guard(count)?;
            let f1 = &fs[0];
            let k1 = m.sources(f1).len();
            let locus = || format!("f=({}), g={}", show_list(m, fs), m.show_mor(g));
            let rest = || -> Result<M::Mor> { m.compose(&fs[1..], &cm.bracket(g)?) };
            let fg = || m.compose(fs, g);
            if k1 == 0 {
                let r = eq_mor(m, fg(), (|| m.compose(&[rest()?], &cm.hom_pre(&fs[..1], &z)?))());
                a.record_result(r, locus)?;
                return Ok(());
            }
            if k1 == 1 {
                let r = eq_mor(
                    m,
                    (|| cm.bracket(&fg()?))(),
                    (|| m.compose(&[rest()?], &cm.hom_pre(&fs[..1], &z)?))(),
                );
                b.record_result(r, locus)?;
            }
            let x = m.sources(f1)[0].clone();
            let r = eq_mor(
                m,
                (|| cm.bracket(&fg()?))(),
                (|| m.compose(&[cm.bracket(f1)?, rest()?], &cm.mu(&x, &ys[0], &z)?))(),
            );
            c.record_result(r, locus)?;
            if fs.len() == 1 {
                let r = eq_mor(
                    m,
                    (|| cm.bracket(&fg()?))(),
                    (|| m.compose(&[cm.bracket(f1)?], &cm.hom_post(std::slice::from_ref(&x), g)?))(),
                );
                d.record_result(r, locus)?;
            }
            Ok(())
        })?;
    }
    for item in [a, b, c, d] {
        report.push(item.finish());
    }

    let unary: Vec<&M::Mor> = cat.all().filter(|f| m.sources(f).len() == 1).collect();
    let pairs: Vec<(&M::Mor, &M::Mor)> = unary
        .iter()
        .flat_map(|f| unary.iter().map(move |g| (*f, *g)))
        .filter(|(f, g)| m.target(f) == m.sources(g)[0])
        .collect();

    let mut post = Check::new("und(W;f·g)", "und(W;f·g) = und(W;f)·und(W;g), und(W;1) = 1");
    let mut pre = Check::new("und(f·g;Z)", "und(f·g;Z) = und(g;Z)·und(f;Z), und(1;Z) = 1");
    for w in &objs {
        for (f, g) in &pairs {
            let r = eq_mor(
                m,
                (|| cm.hom_post(std::slice::from_ref(w), &m.compose(&[(*f).clone()], g)?))(),
                (|| m.compose(&[cm.hom_post(std::slice::from_ref(w), f)?], &cm.hom_post(std::slice::from_ref(w), g)?))(),
            );
            post.record_result(r, || format!("W={}, f={}, g={}", m.show_obj(w), m.show_mor(f), m.show_mor(g)))?;
            let r = eq_mor(
                m,
                (|| cm.hom_pre(&[m.compose(&[(*f).clone()], g)?], w))(),
                (|| m.compose(&[cm.hom_pre(&[(*g).clone()], w)?], &cm.hom_pre(&[(*f).clone()], w)?))(),
            );
            pre.record_result(r, || format!("Z={}, f={}, g={}", m.show_obj(w), m.show_mor(f), m.show_mor(g)))?;
        }
        for x in &objs {
            let r = (|| {
                let hwx = cm.hom_obj(w, x)?;
                m.mor_eq(&cm.hom_post(std::slice::from_ref(w), &m.identity(x)?)?, &m.identity(&hwx)?)
            })();
            post.record_result(r, || format!("W={}, 1_{}", m.show_obj(w), m.show_obj(x)))?;
            let r = (|| {
                let hxw = cm.hom_obj(x, w)?;
                m.mor_eq(&cm.hom_pre(&[m.identity(x)?], w)?, &m.identity(&hxw)?)
            })();
            pre.record_result(r, || format!("Z={}, 1_{}", m.show_obj(w), m.show_obj(x)))?;
        }
    }
    report.push(post.finish());
    report.push(pre.finish());

    let mut mixed = Check::new("mixed", "und(f;Y)·und(W;g) = und(X;g)·und(f;Z)");
    for f in &unary {
        for g in &unary {
            let (w, x) = (m.sources(f)[0].clone(), m.target(f));
            let y = m.sources(g)[0].clone();
            let r = eq_mor(
                m,
                (|| m.compose(&[cm.hom_pre(&[(*f).clone()], &y)?], &cm.hom_post(std::slice::from_ref(&w), g)?))(),
                (|| {
                    m.compose(
                        &[cm.hom_post(std::slice::from_ref(&x), g)?],
                        &cm.hom_pre(&[(*f).clone()], &m.target(g))?,
                    )
                })(),
            );
            mixed.record_result(r, || format!("f={}, g={}", m.show_mor(f), m.show_mor(g)))?;
        }
    }
    report.push(mixed.finish());

    let mut assoc = Check::new("mu.associativity", "μ is associative");
    let mut units = Check::new("mu.units", "(1^und_X, 1)·μ = 1 = (1, 1^und_Y)·μ");
    let mut lid = Check::new("L^X.identities", "L^X preserves identities");
    let mut lcomp = Check::new("L^X.composition", "L^X preserves composition");
    let mut ldef = Check::new("L.defining-equation", "(1, L^X_YZ)·ev = μ");
    let mut cev = Check::new("curry-ev", "⟨ev⟩ = 1");
    for x in &objs {
        for y in &objs {
            let r = (|| {
                let hxy = cm.hom_obj(x, y)?;
                let one = m.identity(&hxy)?;
                let left = m.compose(&[cm.unit_hom(x)?, one.clone()], &cm.mu(x, x, y)?)?;
                let right = m.compose(&[one.clone(), cm.unit_hom(y)?], &cm.mu(x, y, y)?)?;
                Ok(m.mor_eq(&left, &one)? && m.mor_eq(&right, &one)?)
            })();
            units.record_result(r, || format!("X={}, Y={}", m.show_obj(x), m.show_obj(y)))?;
            let r = (|| {
                let hxy = cm.hom_obj(x, y)?;
                m.mor_eq(&cm.bracket(&cm.ev(x, y)?)?, &m.identity(&hxy)?)
            })();
            cev.record_result(r, || format!("X={}, Z={}", m.show_obj(x), m.show_obj(y)))?;
            let r = (|| {
                let lhs = m.compose(&[cm.unit_hom(y)?], &cm.l(x, y, y)?)?;
                m.mor_eq(&lhs, &cm.unit_hom(&cm.hom_obj(x, y)?)?)
            })();
            lid.record_result(r, || format!("X={}, Y={}", m.show_obj(x), m.show_obj(y)))?;
            for z in &objs {
                let r = (|| {
                    let (hxy, hxz) = (cm.hom_obj(x, y)?, cm.hom_obj(x, z)?);
                    let lhs = m.compose(&[m.identity(&hxy)?, cm.l(x, y, z)?], &cm.ev(&hxy, &hxz)?)?;
                    m.mor_eq(&lhs, &cm.mu(x, y, z)?)
                })();
                ldef.record_result(r, || {
                    format!("X={}, Y={}, Z={}", m.show_obj(x), m.show_obj(y), m.show_obj(z))
                })?;
                for w in &objs {
                    let r = (|| {
                        let (hxy, hzw) = (cm.hom_obj(x, y)?, cm.hom_obj(z, w)?);
                        let lhs = m.compose(
                            &[cm.mu(x, y, z)?, m.identity(&hzw)?],
                            &cm.mu(x, z, w)?,
                        )?;
                        let rhs = m.compose(
                            &[m.identity(&hxy)?, cm.mu(y, z, w)?],
                            &cm.mu(x, y, w)?,
                        )?;
                        m.mor_eq(&lhs, &rhs)
                    })();
                    let locus = || {
                        format!(
                            "X={}, Y={}, Z={}, W={}",
                            m.show_obj(x),
                            m.show_obj(y),
                            m.show_obj(z),
                            m.show_obj(w)
                        )
                    };
                    assoc.record_result(r, locus)?;
                    // L^X on μ_{Y,Z,W}
                    let r = (|| {
                        let lhs = m.compose(&[cm.mu(y, z, w)?], &cm.l(x, y, w)?)?;
                        let (a, b, c) = (cm.hom_obj(x, y)?, cm.hom_obj(x, z)?, cm.hom_obj(x, w)?);
                        let rhs = m.compose(&[cm.l(x, y, z)?, cm.l(x, z, w)?], &cm.mu(&a, &b, &c)?)?;
                        m.mor_eq(&lhs, &rhs)
                    })();
                    lcomp.record_result(r, locus)?;
                }
            }
        }
    }
    for item in [assoc, units, lid, lcomp, ldef, cev] {
        report.push(item.finish());
    }
    Ok(report)
}
