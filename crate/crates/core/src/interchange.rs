//! JSON interchange for tabular structures. Every table is keyed by names:
//! `"X,Y"` for category homs, `"f;g"` for composites, `"X,Y;Z"` for
//! multicategory homs (`";Z"` when nullary) and `"f1,f2|g"` for multi
//! composites. Printing is canonical, so print·parse·print = print.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::budget::Caps;
use crate::category::{Category, MorId, ObjId, TabularCategory};
use crate::closed::{ClosedCategory, TabularClosed, TabularClosedFunctor};
use crate::closed_multi::{ClosedMulti, ClosednessWitness, UnitWitness};
use crate::error::{Error, Result};
use crate::multicat::{tabularize_multi, MultiFunctor, Multicategory, TabularMulticategory};

type Table = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Doc {
    Category(CategoryDoc),
    Closed(ClosedDoc),
    Multicategory(MultiDoc),
    ClosedFunctor(ClosedFunctorDoc),
    Multifunctor(MultiFunctorDoc),
    /// A registry instance by name, for structures that are only lazily
    /// finite.
    Instance(InstanceRef),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub name: String,
    pub objects: Vec<String>,
    pub hom: BTreeMap<String, Vec<String>>,
    pub compose: Table,
    pub id: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedDoc {
    #[serde(flatten)]
    pub category: CategoryDoc,
    pub unit: String,
    /// `und(X,Y)` keyed `"X,Y"`.
    pub hom2: Table,
    /// `und(f,g)` keyed `"f,g"`.
    pub hom2_mor: Table,
    pub i: Table,
    pub i_inv: Table,
    pub j: Table,
    /// `L^X_{YZ}` keyed `"X,Y,Z"`.
    #[serde(rename = "L")]
    pub l: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiDoc {
    pub name: String,
    /// Every signature and composite of total arity at most `cap` is listed.
    pub cap: usize,
    pub objects: Vec<String>,
    pub hom: BTreeMap<String, Vec<String>>,
    pub compose: Table,
    pub id: Table,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<WitnessDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<UnitDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    /// `und(X;Z)` keyed `"X;Z"`.
    pub hom_obj: Table,
    /// `ev: X, und(X;Z) -> Z` keyed `"X;Z"`.
    pub ev: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitDoc {
    pub unit: String,
    pub u: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFunctorDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    pub obj: Table,
    pub mor: Table,
    /// `φ̂_{X,Y}` keyed `"X,Y"`.
    pub hat: Table,
    pub zero: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiFunctorDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    pub obj: Table,
    pub mor: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRef {
    pub name: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, usize>,
}

pub fn parse(text: &str) -> Result<Doc> {
    Ok(serde_json::from_str(text)?)
}

pub fn print(doc: &Doc) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

fn split(key: &str, sep: char, n: usize) -> Result<Vec<&str>> {
    let parts: Vec<&str> = key.split(sep).collect();
    if parts.len() != n {
        return Err(Error::Parse(format!("key {key:?} needs {n} parts separated by {sep:?}")));
    }
    Ok(parts)
}

fn list(s: &str) -> Vec<&str> {
    if s.is_empty() {
        Vec::new()
    } else {
        s.split(',').collect()
    }
}

// categories

pub fn category_to_doc(c: &TabularCategory) -> CategoryDoc {
    let objs: Vec<ObjId> = c.object_ids().collect();
    let mut hom = BTreeMap::new();
    for &x in &objs {
        for &y in &objs {
            let ms = c.hom_ids(x, y);
            if !ms.is_empty() {
                let key = format!("{},{}", c.obj_name(x), c.obj_name(y));
                hom.insert(key, ms.iter().map(|&m| c.mor_name(m).to_string()).collect());
            }
        }
    }
    let compose = c
        .compose_entries()
        .into_iter()
        .map(|(f, g, h)| (format!("{};{}", c.mor_name(f), c.mor_name(g)), c.mor_name(h).to_string()))
        .collect();
    let id = objs
        .iter()
        .filter_map(|&x| c.identity_id(x).map(|m| (c.obj_name(x).to_string(), c.mor_name(m).to_string())))
        .collect();
    CategoryDoc {
        name: c.name.clone(),
        objects: objs.iter().map(|&x| c.obj_name(x).to_string()).collect(),
        hom,
        compose,
        id,
    }
}

pub fn category_from_doc(d: &CategoryDoc) -> Result<TabularCategory> {
    let mut c = TabularCategory::new(&d.name);
    for o in &d.objects {
        c.add_object(o)?;
    }
    for (key, ms) in &d.hom {
        let p = split(key, ',', 2)?;
        let (x, y) = (c.obj_by_name(p[0])?, c.obj_by_name(p[1])?);
        for m in ms {
            c.add_morphism(m, x, y)?;
        }
    }
    for (x, m) in &d.id {
        let (x, m) = (c.obj_by_name(x)?, c.mor_by_name(m)?);
        c.set_identity(x, m);
    }
    for (key, h) in &d.compose {
        let p = split(key, ';', 2)?;
        let (f, g, h) = (c.mor_by_name(p[0])?, c.mor_by_name(p[1])?, c.mor_by_name(h)?);
        if c.cod(&f) != c.dom(&g) || c.dom(&h) != c.dom(&f) || c.cod(&h) != c.cod(&g) {
            return Err(Error::Malformed(format!("composite {key} is mistyped")));
        }
        c.set_compose(f, g, h);
    }
    c.validate()?;
    Ok(c)
}

// closed categories

pub fn closed_to_doc(v: &TabularClosed) -> ClosedDoc {
    let c = &v.cat;
    let (on, mn) = (|x: ObjId| c.obj_name(x).to_string(), |m: MorId| c.mor_name(m).to_string());
    ClosedDoc {
        category: category_to_doc(c),
        unit: on(v.unit),
        hom2: v
            .hom_obj_entries()
            .map(|(x, y, h)| (format!("{},{}", on(x), on(y)), on(h)))
            .collect(),
        hom2_mor: v
            .hom_mor_entries()
            .map(|(f, g, h)| (format!("{},{}", mn(f), mn(g)), mn(h)))
            .collect(),
        i: v.i_entries().map(|(x, m)| (on(x), mn(m))).collect(),
        i_inv: v.i_inv_entries().map(|(x, m)| (on(x), mn(m))).collect(),
        j: v.j_entries().map(|(x, m)| (on(x), mn(m))).collect(),
        l: v
            .l_entries()
            .map(|(x, y, z, m)| (format!("{},{},{}", on(x), on(y), on(z)), mn(m)))
            .collect(),
    }
}

pub fn closed_from_doc(d: &ClosedDoc) -> Result<TabularClosed> {
    let cat = category_from_doc(&d.category)?;
    let unit = cat.obj_by_name(&d.unit)?;
    let mut v = TabularClosed::new(cat, unit);
    for (key, h) in &d.hom2 {
        let p = split(key, ',', 2)?;
        let (x, y, h) = (v.obj(p[0])?, v.obj(p[1])?, v.obj(h)?);
        v.set_hom_obj(x, y, h);
    }
    for (key, h) in &d.hom2_mor {
        let p = split(key, ',', 2)?;
        let (f, g, h) = (v.mor(p[0])?, v.mor(p[1])?, v.mor(h)?);
        v.set_hom_mor(f, g, h);
    }
    for (x, m) in &d.i {
        let (x, m) = (v.obj(x)?, v.mor(m)?);
        v.set_i(x, m);
    }
    for (x, m) in &d.i_inv {
        let (x, m) = (v.obj(x)?, v.mor(m)?);
        v.set_i_inv(x, m);
    }
    for (x, m) in &d.j {
        let (x, m) = (v.obj(x)?, v.mor(m)?);
        v.set_j(x, m);
    }
    for (key, m) in &d.l {
        let p = split(key, ',', 3)?;
        let (x, y, z, m) = (v.obj(p[0])?, v.obj(p[1])?, v.obj(p[2])?, v.mor(m)?);
        v.set_l(x, y, z, m);
    }
    v.validate()?;
    Ok(v)
}

pub fn closed_functor_to_doc(
    f: &TabularClosedFunctor,
    source: &TabularClosed,
    target: &TabularClosed,
) -> ClosedFunctorDoc {
    let (s, t) = (&source.cat, &target.cat);
    let mut mor: Vec<_> = f.mor.iter().collect();
    mor.sort();
    ClosedFunctorDoc {
        name: f.name.clone(),
        source: s.name.clone(),
        target: t.name.clone(),
        obj: f
            .obj
            .iter()
            .map(|(&x, &y)| (s.obj_name(x).to_string(), t.obj_name(y).to_string()))
            .collect(),
        mor: mor
            .into_iter()
            .map(|(&a, &b)| (s.mor_name(a).to_string(), t.mor_name(b).to_string()))
            .collect(),
        hat: f
            .hat
            .iter()
            .map(|(&(x, y), &m)| (format!("{},{}", s.obj_name(x), s.obj_name(y)), t.mor_name(m).to_string()))
            .collect(),
        zero: t.mor_name(f.zero).to_string(),
    }
}

fn check_names(doc: (&str, &str), source: &str, target: &str) -> Result<()> {
    if doc != (source, target) {
        return Err(Error::Parse(format!(
            "functor is between {} and {}, not {source} and {target}",
            doc.0, doc.1
        )));
    }
    Ok(())
}

pub fn closed_functor_from_doc(
    d: &ClosedFunctorDoc,
    source: &TabularClosed,
    target: &TabularClosed,
) -> Result<TabularClosedFunctor> {
    check_names((&d.source, &d.target), &source.cat.name, &target.cat.name)?;
    let mut obj = BTreeMap::new();
    for (x, y) in &d.obj {
        obj.insert(source.obj(x)?, target.obj(y)?);
    }
    let mut mor = HashMap::new();
    for (a, b) in &d.mor {
        mor.insert(source.mor(a)?, target.mor(b)?);
    }
    let mut hat = BTreeMap::new();
    for (key, m) in &d.hat {
        let p = split(key, ',', 2)?;
        hat.insert((source.obj(p[0])?, source.obj(p[1])?), target.mor(m)?);
    }
    Ok(TabularClosedFunctor {
        name: d.name.clone(),
        obj,
        mor,
        hat,
        zero: target.mor(&d.zero)?,
    })
}

// multicategories

fn sig_key(m: &TabularMulticategory, xs: &[ObjId], y: ObjId) -> String {
    let xs: Vec<&str> = xs.iter().map(|&x| m.obj_name(x)).collect();
    format!("{};{}", xs.join(","), m.obj_name(y))
}

/// A tabular multicategory with its optional closedness and unit witnesses.
#[derive(Debug, Clone)]
pub struct LoadedMulti {
    pub table: TabularMulticategory,
    pub witness: Option<ClosednessWitness<ObjId, MorId>>,
    pub unit: Option<UnitWitness<ObjId, MorId>>,
}

impl LoadedMulti {
    /// The closed multicategory. Checking closedness at arity `n` composes
    /// with `ev` at arity `n + 1`, so the arity cap is clipped one below the
    /// table's.
    pub fn closed(&self, caps: Caps) -> Option<ClosedMulti<TabularMulticategory>> {
        let caps = caps.clip(self.table.cap.saturating_sub(1));
        let w = self.witness.clone()?;
        Some(ClosedMulti::new(self.table.clone(), w, caps))
    }
}

pub fn multi_to_doc(l: &LoadedMulti) -> MultiDoc {
    let m = &l.table;
    let mn = |f: MorId| m.mor_name(f).to_string();
    let mut hom: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for f in m.morphism_ids() {
        hom.entry(sig_key(m, &m.sources(&f), m.target(&f))).or_default().push(mn(f));
    }
    let compose = m
        .compose_entries()
        .into_iter()
        .map(|(fs, g, h)| {
            let fs: Vec<&str> = fs.iter().map(|&f| m.mor_name(f)).collect();
            (format!("{}|{}", fs.join(","), m.mor_name(g)), mn(h))
        })
        .collect();
    let closed = l.witness.as_ref().map(|w| WitnessDoc {
        hom_obj: w
            .hom_obj
            .iter()
            .map(|(&(x, z), &h)| (sig_key(m, &[x], z), m.obj_name(h).to_string()))
            .collect(),
        ev: w.ev.iter().map(|(&(x, z), &e)| (sig_key(m, &[x], z), mn(e))).collect(),
    });
    MultiDoc {
        name: m.name.clone(),
        cap: m.cap,
        objects: m.object_ids().map(|x| m.obj_name(x).to_string()).collect(),
        hom,
        compose,
        id: m
            .identity_entries()
            .map(|(x, f)| (m.obj_name(x).to_string(), mn(f)))
            .collect(),
        closed,
        unit: l.unit.as_ref().map(|u| UnitDoc {
            unit: m.obj_name(u.unit).to_string(),
            u: mn(u.u),
        }),
    }
}

pub fn multi_from_doc(d: &MultiDoc) -> Result<LoadedMulti> {
    let mut m = TabularMulticategory::new(&d.name, d.cap);
    for o in &d.objects {
        m.add_object(o)?;
    }
    for (key, fs) in &d.hom {
        let p = split(key, ';', 2)?;
        let xs = list(p[0]).into_iter().map(|x| m.obj_by_name(x)).collect::<Result<Vec<_>>>()?;
        let y = m.obj_by_name(p[1])?;
        for f in fs {
            m.add_morphism(f, xs.clone(), y)?;
        }
    }
    for (x, f) in &d.id {
        let (x, f) = (m.obj_by_name(x)?, m.mor_by_name(f)?);
        m.set_identity(x, f);
    }
    for (key, h) in &d.compose {
        let p = split(key, '|', 2)?;
        let fs = list(p[0]).into_iter().map(|f| m.mor_by_name(f)).collect::<Result<Vec<_>>>()?;
        let (g, h) = (m.mor_by_name(p[1])?, m.mor_by_name(h)?);
        m.set_compose(fs, g, h);
    }
    m.validate()?;
    let pair = |key: &str| -> Result<(ObjId, ObjId)> {
        let p = split(key, ';', 2)?;
        Ok((m.obj_by_name(p[0])?, m.obj_by_name(p[1])?))
    };
    let witness = match &d.closed {
        None => None,
        Some(w) => {
            let mut out = ClosednessWitness::default();
            for (key, h) in &w.hom_obj {
                out.hom_obj.insert(pair(key)?, m.obj_by_name(h)?);
            }
            for (key, e) in &w.ev {
                out.ev.insert(pair(key)?, m.mor_by_name(e)?);
            }
            Some(out)
        }
    };
    let unit = match &d.unit {
        None => None,
        Some(u) => Some(UnitWitness {
            unit: m.obj_by_name(&u.unit)?,
            u: m.mor_by_name(&u.u)?,
        }),
    };
    Ok(LoadedMulti { table: m, witness, unit })
}

/// Tabulates a closed multicategory and its unit one arity above the caps,
/// so that the table supports the same checks.
pub fn tabulate_closed_multi<M: Multicategory>(
    cm: &ClosedMulti<M>,
    unit: Option<&UnitWitness<M::Obj, M::Mor>>,
    name: &str,
) -> Result<(LoadedMulti, crate::multicat::MultiTabularized<M>)> {
    let t = tabularize_multi(&cm.m, &cm.caps.with_extra_arity(), name)?;
    let mut w = ClosednessWitness::default();
    for ((x, z), h) in &cm.witness.hom_obj {
        w.hom_obj.insert((t.obj_id(x)?, t.obj_id(z)?), t.obj_id(h)?);
    }
    for ((x, z), e) in &cm.witness.ev {
        w.ev.insert((t.obj_id(x)?, t.obj_id(z)?), t.mor_id(&cm.m, e)?);
    }
    let unit = match unit {
        None => None,
        Some(u) => Some(UnitWitness {
            unit: t.obj_id(&u.unit)?,
            u: t.mor_id(&cm.m, &u.u)?,
        }),
    };
    let loaded = LoadedMulti {
        table: t.table.clone(),
        witness: Some(w),
        unit,
    };
    Ok((loaded, t))
}

/// A multifunctor between tabular multicategories, given by tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabularMultiFunctor {
    pub name: String,
    pub obj: BTreeMap<ObjId, ObjId>,
    pub mor: BTreeMap<MorId, MorId>,
}

impl MultiFunctor<TabularMulticategory, TabularMulticategory> for TabularMultiFunctor {
    fn obj(&self, x: &ObjId) -> Result<ObjId> {
        self.obj
            .get(x)
            .copied()
            .ok_or_else(|| Error::Malformed(format!("{}: no image for object {}", self.name, x.0)))
    }
    fn mor(&self, f: &MorId) -> Result<MorId> {
        self.mor
            .get(f)
            .copied()
            .ok_or_else(|| Error::Malformed(format!("{}: no image for morphism {}", self.name, f.0)))
    }
}

impl TabularMultiFunctor {
    /// Tabulates `f: M -> N` against tabulations of both ends.
    pub fn from_functor<M, N, F>(
        name: &str,
        n: &N,
        tm: &crate::multicat::MultiTabularized<M>,
        tn: &crate::multicat::MultiTabularized<N>,
        f: &F,
    ) -> Result<TabularMultiFunctor>
    where
        M: Multicategory,
        N: Multicategory,
        F: MultiFunctor<M, N>,
    {
        let mut obj = BTreeMap::new();
        for (k, x) in tm.obj_back.iter().enumerate() {
            obj.insert(ObjId(k as u32), tn.obj_id(&f.obj(x)?)?);
        }
        let mut mor = BTreeMap::new();
        for (k, g) in tm.mor_back.iter().enumerate() {
            mor.insert(MorId(k as u32), tn.mor_id(n, &f.mor(g)?)?);
        }
        Ok(TabularMultiFunctor {
            name: name.into(),
            obj,
            mor,
        })
    }
}

pub fn multifunctor_to_doc(
    f: &TabularMultiFunctor,
    source: &TabularMulticategory,
    target: &TabularMulticategory,
) -> MultiFunctorDoc {
    MultiFunctorDoc {
        name: f.name.clone(),
        source: source.name.clone(),
        target: target.name.clone(),
        obj: f
            .obj
            .iter()
            .map(|(&x, &y)| (source.obj_name(x).to_string(), target.obj_name(y).to_string()))
            .collect(),
        mor: f
            .mor
            .iter()
            .map(|(&a, &b)| (source.mor_name(a).to_string(), target.mor_name(b).to_string()))
            .collect(),
    }
}

pub fn multifunctor_from_doc(
    d: &MultiFunctorDoc,
    source: &TabularMulticategory,
    target: &TabularMulticategory,
) -> Result<TabularMultiFunctor> {
    check_names((&d.source, &d.target), &source.name, &target.name)?;
    let mut obj = BTreeMap::new();
    for (x, y) in &d.obj {
        obj.insert(source.obj_by_name(x)?, target.obj_by_name(y)?);
    }
    let mut mor = BTreeMap::new();
    for (a, b) in &d.mor {
        mor.insert(source.mor_by_name(a)?, target.mor_by_name(b)?);
    }
    Ok(TabularMultiFunctor {
        name: d.name.clone(),
        obj,
        mor,
    })
}

/// Tabulates a closed category whose enumerated objects are closed under
/// `und(-,-)`.
pub fn closed_doc_of<C: ClosedCategory>(c: &C, name: &str, budget: &crate::budget::SizeBudget) -> Result<ClosedDoc> {
    let (t, _) = crate::closed::tabularize_closed(c, name, budget)?;
    Ok(closed_to_doc(&t))
}
