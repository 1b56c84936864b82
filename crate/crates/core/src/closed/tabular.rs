use std::collections::{BTreeMap, HashMap};

use super::{ClosedCategory, ClosedFunctor};
use crate::budget::SizeBudget;
use crate::category::{tabularize, Category, MorId, ObjId, TabularCategory, Tabularized};
use crate::error::{Error, Result};
use crate::hf::Hf;

/// A closed category given by explicit tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabularClosed {
    pub cat: TabularCategory,
    pub unit: ObjId,
    hom_obj: BTreeMap<(ObjId, ObjId), ObjId>,
    hom_mor: BTreeMap<(MorId, MorId), MorId>,
    i: BTreeMap<ObjId, MorId>,
    i_inv: BTreeMap<ObjId, MorId>,
    j: BTreeMap<ObjId, MorId>,
    l: BTreeMap<(ObjId, ObjId, ObjId), MorId>,
}

impl TabularClosed {
    pub fn new(cat: TabularCategory, unit: ObjId) -> TabularClosed {
        TabularClosed {
            cat,
            unit,
            hom_obj: BTreeMap::new(),
            hom_mor: BTreeMap::new(),
            i: BTreeMap::new(),
            i_inv: BTreeMap::new(),
            j: BTreeMap::new(),
            l: BTreeMap::new(),
        }
    }

    pub fn set_hom_obj(&mut self, x: ObjId, y: ObjId, h: ObjId) {
        self.hom_obj.insert((x, y), h);
    }
    pub fn set_hom_mor(&mut self, f: MorId, g: MorId, h: MorId) {
        self.hom_mor.insert((f, g), h);
    }
    pub fn set_i(&mut self, x: ObjId, m: MorId) {
        self.i.insert(x, m);
    }
    pub fn set_i_inv(&mut self, x: ObjId, m: MorId) {
        self.i_inv.insert(x, m);
    }
    pub fn set_j(&mut self, x: ObjId, m: MorId) {
        self.j.insert(x, m);
    }
    pub fn set_l(&mut self, x: ObjId, y: ObjId, z: ObjId, m: MorId) {
        self.l.insert((x, y, z), m);
    }

    pub fn hom_obj_entries(&self) -> impl Iterator<Item = (ObjId, ObjId, ObjId)> + '_ {
        self.hom_obj.iter().map(|(&(x, y), &h)| (x, y, h))
    }
    pub fn hom_mor_entries(&self) -> impl Iterator<Item = (MorId, MorId, MorId)> + '_ {
        self.hom_mor.iter().map(|(&(f, g), &h)| (f, g, h))
    }
    pub fn i_entries(&self) -> impl Iterator<Item = (ObjId, MorId)> + '_ {
        self.i.iter().map(|(&x, &m)| (x, m))
    }
    pub fn i_inv_entries(&self) -> impl Iterator<Item = (ObjId, MorId)> + '_ {
        self.i_inv.iter().map(|(&x, &m)| (x, m))
    }
    pub fn j_entries(&self) -> impl Iterator<Item = (ObjId, MorId)> + '_ {
        self.j.iter().map(|(&x, &m)| (x, m))
    }
    pub fn l_entries(&self) -> impl Iterator<Item = (ObjId, ObjId, ObjId, MorId)> + '_ {
        self.l.iter().map(|(&(x, y, z), &m)| (x, y, z, m))
    }

    pub fn obj(&self, name: &str) -> Result<ObjId> {
        self.cat.obj_by_name(name)
    }
    pub fn mor(&self, name: &str) -> Result<MorId> {
        self.cat.mor_by_name(name)
    }

    fn missing(&self, what: &str, at: String) -> Error {
        Error::Malformed(format!("{}: {what} missing at {at}", self.cat.name))
    }

    /// Checks that every structure table is total.
    pub fn validate(&self) -> Result<()> {
        self.cat.validate()?;
        let objs: Vec<ObjId> = self.cat.object_ids().collect();
        for &x in &objs {
            self.i(&x)?;
            self.i_inv(&x)?;
            self.j(&x)?;
            for &y in &objs {
                self.hom_obj(&x, &y)?;
                for &z in &objs {
                    self.l(&x, &y, &z)?;
                }
            }
        }
        let mors: Vec<MorId> = self.cat.morphism_ids().collect();
        for &f in &mors {
            for &g in &mors {
                self.hom_mor(&f, &g)?;
            }
        }
        Ok(())
    }

    /// The componentwise product; objects and morphisms are named `a&b`.
    pub fn product(a: &TabularClosed, b: &TabularClosed, name: &str) -> Result<TabularClosed> {
        let mut cat = TabularCategory::new(name);
        let aobjs: Vec<ObjId> = a.cat.object_ids().collect();
        let bobjs: Vec<ObjId> = b.cat.object_ids().collect();
        let amors: Vec<MorId> = a.cat.morphism_ids().collect();
        let bmors: Vec<MorId> = b.cat.morphism_ids().collect();
        let mut opair = BTreeMap::new();
        for &x in &aobjs {
            for &y in &bobjs {
                let id = cat.add_object(&format!("{}&{}", a.cat.obj_name(x), b.cat.obj_name(y)))?;
                opair.insert((x, y), id);
            }
        }
        let mut mpair = BTreeMap::new();
        for &f in &amors {
            for &g in &bmors {
                let id = cat.add_morphism(
                    &format!("{}&{}", a.cat.mor_name(f), b.cat.mor_name(g)),
                    opair[&(a.dom(&f), b.dom(&g))],
                    opair[&(a.cod(&f), b.cod(&g))],
                )?;
                mpair.insert((f, g), id);
            }
        }
        for (&(x, y), &o) in &opair {
            cat.set_identity(o, mpair[&(a.identity(&x)?, b.identity(&y)?)]);
        }
        for &f in &amors {
            for &f2 in &amors {
                if a.cod(&f) != a.dom(&f2) {
                    continue;
                }
                let ff = a.compose(&f, &f2)?;
                for &g in &bmors {
                    for &g2 in &bmors {
                        if b.cod(&g) != b.dom(&g2) {
                            continue;
                        }
                        let gg = b.compose(&g, &g2)?;
                        cat.set_compose(mpair[&(f, g)], mpair[&(f2, g2)], mpair[&(ff, gg)]);
                    }
                }
            }
        }
        let mut out = TabularClosed::new(cat, opair[&(a.unit, b.unit)]);
        for (&(x, y), &o) in &opair {
            out.set_i(o, mpair[&(a.i(&x)?, b.i(&y)?)]);
            out.set_i_inv(o, mpair[&(a.i_inv(&x)?, b.i_inv(&y)?)]);
            out.set_j(o, mpair[&(a.j(&x)?, b.j(&y)?)]);
            for (&(x2, y2), &o2) in &opair {
                out.set_hom_obj(o, o2, opair[&(a.hom_obj(&x, &x2)?, b.hom_obj(&y, &y2)?)]);
                for (&(x3, y3), &o3) in &opair {
                    out.set_l(o, o2, o3, mpair[&(a.l(&x, &x2, &x3)?, b.l(&y, &y2, &y3)?)]);
                }
            }
        }
        for (&(f, g), &m) in &mpair {
            for (&(f2, g2), &m2) in &mpair {
                out.set_hom_mor(m, m2, mpair[&(a.hom_mor(&f, &f2)?, b.hom_mor(&g, &g2)?)]);
            }
        }
        Ok(out)
    }
}

impl Category for TabularClosed {
    type Obj = ObjId;
    type Mor = MorId;

    fn objects(&self) -> Result<Vec<ObjId>> {
        self.cat.objects()
    }
    fn hom(&self, x: &ObjId, y: &ObjId) -> Result<Vec<MorId>> {
        self.cat.hom(x, y)
    }
    fn dom(&self, f: &MorId) -> ObjId {
        self.cat.dom(f)
    }
    fn cod(&self, f: &MorId) -> ObjId {
        self.cat.cod(f)
    }
    fn identity(&self, x: &ObjId) -> Result<MorId> {
        self.cat.identity(x)
    }
    fn compose(&self, f: &MorId, g: &MorId) -> Result<MorId> {
        self.cat.compose(f, g)
    }
    fn mor_key(&self, f: &MorId) -> Result<Hf> {
        self.cat.mor_key(f)
    }
    fn mor_eq(&self, f: &MorId, g: &MorId) -> Result<bool> {
        Ok(f == g)
    }
    fn show_obj(&self, x: &ObjId) -> String {
        self.cat.show_obj(x)
    }
    fn show_mor(&self, f: &MorId) -> String {
        self.cat.show_mor(f)
    }
}

impl ClosedCategory for TabularClosed {
    fn unit(&self) -> ObjId {
        self.unit
    }
    fn hom_obj(&self, x: &ObjId, y: &ObjId) -> Result<ObjId> {
        self.hom_obj.get(&(*x, *y)).copied().ok_or_else(|| {
            self.missing("hom object", format!("({}, {})", self.show_obj(x), self.show_obj(y)))
        })
    }
    fn hom_mor(&self, f: &MorId, g: &MorId) -> Result<MorId> {
        self.hom_mor.get(&(*f, *g)).copied().ok_or_else(|| {
            self.missing("hom action", format!("({}, {})", self.show_mor(f), self.show_mor(g)))
        })
    }
    fn i(&self, x: &ObjId) -> Result<MorId> {
        self.i.get(x).copied().ok_or_else(|| self.missing("i", self.show_obj(x)))
    }
    fn i_inv(&self, x: &ObjId) -> Result<MorId> {
        self.i_inv.get(x).copied().ok_or_else(|| self.missing("i_inv", self.show_obj(x)))
    }
    fn j(&self, x: &ObjId) -> Result<MorId> {
        self.j.get(x).copied().ok_or_else(|| self.missing("j", self.show_obj(x)))
    }
    fn l(&self, x: &ObjId, y: &ObjId, z: &ObjId) -> Result<MorId> {
        self.l.get(&(*x, *y, *z)).copied().ok_or_else(|| {
            self.missing(
                "L",
                format!("({}, {}, {})", self.show_obj(x), self.show_obj(y), self.show_obj(z)),
            )
        })
    }
}

/// Evaluates all structure of a closed category into tables. The enumerated
/// objects must be closed under `und(-,-)` and contain the unit.
pub fn tabularize_closed<C: ClosedCategory>(
    c: &C,
    name: &str,
    budget: &SizeBudget,
) -> Result<(TabularClosed, Tabularized<C>)> {
    let tab = tabularize(c, name, budget)?;
    let mut out = TabularClosed::new(tab.table.clone(), tab.obj_id(&c.unit())?);
    let objs = tab.objects.clone();
    for x in &objs {
        let xi = tab.obj_id(x)?;
        out.set_i(xi, tab.mor_id(c, &c.i(x)?)?);
        out.set_i_inv(xi, tab.mor_id(c, &c.i_inv(x)?)?);
        out.set_j(xi, tab.mor_id(c, &c.j(x)?)?);
        for y in &objs {
            let yi = tab.obj_id(y)?;
            out.set_hom_obj(xi, yi, tab.obj_id(&c.hom_obj(x, y)?)?);
            for z in &objs {
                out.set_l(xi, yi, tab.obj_id(z)?, tab.mor_id(c, &c.l(x, y, z)?)?);
            }
        }
    }
    for (a, f) in tab.morphisms.iter().enumerate() {
        for (b, g) in tab.morphisms.iter().enumerate() {
            let h = tab.mor_id(c, &c.hom_mor(f, g)?)?;
            out.set_hom_mor(MorId(a as u32), MorId(b as u32), h);
        }
    }
    Ok((out, tab))
}

/// A closed functor between tabular closed categories, given by tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabularClosedFunctor {
    pub name: String,
    pub obj: BTreeMap<ObjId, ObjId>,
    pub mor: HashMap<MorId, MorId>,
    pub hat: BTreeMap<(ObjId, ObjId), MorId>,
    pub zero: MorId,
}

impl TabularClosedFunctor {
    /// Tabulates any closed functor between tabular closed categories.
    pub fn from_functor<F: ClosedFunctor<TabularClosed, TabularClosed>>(
        name: &str,
        c: &TabularClosed,
        f: &F,
    ) -> Result<TabularClosedFunctor> {
        let mut obj = BTreeMap::new();
        let mut hat = BTreeMap::new();
        let objs: Vec<ObjId> = c.cat.object_ids().collect();
        for &x in &objs {
            obj.insert(x, f.obj(&x)?);
            for &y in &objs {
                hat.insert((x, y), f.hat(&x, &y)?);
            }
        }
        let mut mor = HashMap::new();
        for m in c.cat.morphism_ids() {
            mor.insert(m, f.mor(&m)?);
        }
        Ok(TabularClosedFunctor {
            name: name.into(),
            obj,
            mor,
            hat,
            zero: f.zero()?,
        })
    }
}

impl ClosedFunctor<TabularClosed, TabularClosed> for TabularClosedFunctor {
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
    fn hat(&self, x: &ObjId, y: &ObjId) -> Result<MorId> {
        self.hat
            .get(&(*x, *y))
            .copied()
            .ok_or_else(|| Error::Malformed(format!("{}: no φ̂ at ({}, {})", self.name, x.0, y.0)))
    }
    fn zero(&self) -> Result<MorId> {
        Ok(self.zero)
    }
}
