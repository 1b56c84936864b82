use std::collections::{BTreeMap, HashMap};

use super::{all_morphisms, Category};
use crate::budget::SizeBudget;
use crate::error::{Error, Result};
use crate::hf::Hf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorId(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
struct MorInfo {
    name: String,
    dom: ObjId,
    cod: ObjId,
}

/// A category given by explicit tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabularCategory {
    pub name: String,
    objects: Vec<String>,
    obj_index: HashMap<String, ObjId>,
    mors: Vec<MorInfo>,
    mor_index: HashMap<String, MorId>,
    hom: BTreeMap<(ObjId, ObjId), Vec<MorId>>,
    compose: HashMap<(MorId, MorId), MorId>,
    identity: BTreeMap<ObjId, MorId>,
}

pub(crate) fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.contains([',', ';', '|']) {
        return Err(Error::Parse(format!(
            "name {name:?} must be non-empty and free of ',', ';' and '|'"
        )));
    }
    Ok(())
}

impl TabularCategory {
    pub fn new(name: impl Into<String>) -> TabularCategory {
        TabularCategory {
            name: name.into(),
            objects: Vec::new(),
            obj_index: HashMap::new(),
            mors: Vec::new(),
            mor_index: HashMap::new(),
            hom: BTreeMap::new(),
            compose: HashMap::new(),
            identity: BTreeMap::new(),
        }
    }

    pub fn add_object(&mut self, name: &str) -> Result<ObjId> {
        check_name(name)?;
        if self.obj_index.contains_key(name) {
            return Err(Error::Parse(format!("duplicate object {name}")));
        }
        let id = ObjId(self.objects.len() as u32);
        self.objects.push(name.to_string());
        self.obj_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_morphism(&mut self, name: &str, dom: ObjId, cod: ObjId) -> Result<MorId> {
        check_name(name)?;
        if self.mor_index.contains_key(name) {
            return Err(Error::Parse(format!("duplicate morphism {name}")));
        }
        let id = MorId(self.mors.len() as u32);
        self.mors.push(MorInfo {
            name: name.to_string(),
            dom,
            cod,
        });
        self.mor_index.insert(name.to_string(), id);
        self.hom.entry((dom, cod)).or_default().push(id);
        Ok(id)
    }

    pub fn set_identity(&mut self, x: ObjId, m: MorId) {
        self.identity.insert(x, m);
    }

    pub fn set_compose(&mut self, f: MorId, g: MorId, h: MorId) {
        self.compose.insert((f, g), h);
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len() as u32).map(ObjId)
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = MorId> {
        (0..self.mors.len() as u32).map(MorId)
    }

    pub fn obj_name(&self, x: ObjId) -> &str {
        &self.objects[x.0 as usize]
    }

    pub fn mor_name(&self, f: MorId) -> &str {
        &self.mors[f.0 as usize].name
    }

    pub fn obj_by_name(&self, name: &str) -> Result<ObjId> {
        self.obj_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown object {name}")))
    }

    pub fn mor_by_name(&self, name: &str) -> Result<MorId> {
        self.mor_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown morphism {name}")))
    }

    pub fn hom_ids(&self, x: ObjId, y: ObjId) -> &[MorId] {
        self.hom.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn identity_id(&self, x: ObjId) -> Option<MorId> {
        self.identity.get(&x).copied()
    }

    pub fn compose_id(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.compose.get(&(f, g)).copied()
    }

    /// Composition table sorted by argument ids.
    pub fn compose_entries(&self) -> Vec<(MorId, MorId, MorId)> {
        let mut v: Vec<_> = self.compose.iter().map(|(&(f, g), &h)| (f, g, h)).collect();
        v.sort();
        v
    }

    /// Checks that every object has an identity in its own hom-set.
    pub fn validate(&self) -> Result<()> {
        for x in self.object_ids() {
            let i = self.identity_id(x).ok_or_else(|| {
                Error::Malformed(format!("object {} has no identity", self.obj_name(x)))
            })?;
            let info = &self.mors[i.0 as usize];
            if info.dom != x || info.cod != x {
                return Err(Error::Malformed(format!(
                    "identity {} of {} is not an endomorphism of it",
                    info.name,
                    self.obj_name(x)
                )));
            }
        }
        Ok(())
    }
}

impl Category for TabularCategory {
    type Obj = ObjId;
    type Mor = MorId;

    fn objects(&self) -> Result<Vec<ObjId>> {
        Ok(self.object_ids().collect())
    }

    fn hom(&self, x: &ObjId, y: &ObjId) -> Result<Vec<MorId>> {
        Ok(self.hom_ids(*x, *y).to_vec())
    }

    fn dom(&self, f: &MorId) -> ObjId {
        self.mors[f.0 as usize].dom
    }

    fn cod(&self, f: &MorId) -> ObjId {
        self.mors[f.0 as usize].cod
    }

    fn identity(&self, x: &ObjId) -> Result<MorId> {
        self.identity_id(*x)
            .ok_or_else(|| Error::Malformed(format!("no identity for {}", self.obj_name(*x))))
    }

    fn compose(&self, f: &MorId, g: &MorId) -> Result<MorId> {
        if self.cod(f) != self.dom(g) {
            return Err(Error::Mismatch(format!(
                "cannot compose {} then {}",
                self.mor_name(*f),
                self.mor_name(*g)
            )));
        }
        self.compose_id(*f, *g).ok_or_else(|| {
            Error::Malformed(format!(
                "composite {};{} is not tabulated",
                self.mor_name(*f),
                self.mor_name(*g)
            ))
        })
    }

    fn mor_key(&self, f: &MorId) -> Result<Hf> {
        Ok(Hf::atom(self.mor_name(*f)))
    }

    fn mor_eq(&self, f: &MorId, g: &MorId) -> Result<bool> {
        Ok(f == g)
    }

    fn show_obj(&self, x: &ObjId) -> String {
        self.obj_name(*x).to_string()
    }

    fn show_mor(&self, f: &MorId) -> String {
        self.mor_name(*f).to_string()
    }
}

/// Result of [`tabularize`]: the table plus the translation maps.
pub struct Tabularized<C: Category> {
    pub table: TabularCategory,
    pub objects: Vec<C::Obj>,
    pub morphisms: Vec<C::Mor>,
    key_index: HashMap<(usize, usize, Hf), MorId>,
}

impl<C: Category> Tabularized<C> {
    pub fn obj_id(&self, x: &C::Obj) -> Result<ObjId> {
        self.objects
            .iter()
            .position(|o| o == x)
            .map(|i| ObjId(i as u32))
            .ok_or_else(|| Error::Malformed(format!("object {x:?} outside the tabulated range")))
    }

    pub fn mor_id(&self, c: &C, f: &C::Mor) -> Result<MorId> {
        let x = self.obj_id(&c.dom(f))?.0 as usize;
        let y = self.obj_id(&c.cod(f))?.0 as usize;
        let key = c.mor_key(f)?;
        self.key_index
            .get(&(x, y, key))
            .copied()
            .ok_or_else(|| Error::Malformed(format!("morphism {} not tabulated", c.show_mor(f))))
    }
}

fn unique_name(base: String, taken: &mut HashMap<String, usize>) -> String {
    let clean: String = base
        .chars()
        .map(|ch| if matches!(ch, ',' | ';' | '|') { '/' } else { ch })
        .collect();
    let clean = if clean.is_empty() { "_".to_string() } else { clean };
    let n = taken.entry(clean.clone()).or_insert(0);
    *n += 1;
    if *n == 1 {
        clean
    } else {
        format!("{clean}#{n}")
    }
}

/// Evaluates every hom-set and composite of `c` within the budget.
pub fn tabularize<C: Category>(c: &C, name: &str, budget: &SizeBudget) -> Result<Tabularized<C>> {
    let objs = budget.objects(c.objects()?)?;
    let mut table = TabularCategory::new(name);
    let mut taken = HashMap::new();
    for x in &objs {
        table.add_object(&unique_name(c.show_obj(x), &mut taken))?;
    }
    let mut morphisms = Vec::new();
    let mut key_index = HashMap::new();
    let mut mtaken = HashMap::new();
    for (x, y, fs) in all_morphisms(c, budget)? {
        let xi = objs.iter().position(|o| *o == x).unwrap();
        let yi = objs.iter().position(|o| *o == y).unwrap();
        for f in fs {
            let id = table.add_morphism(
                &unique_name(c.show_mor(&f), &mut mtaken),
                ObjId(xi as u32),
                ObjId(yi as u32),
            )?;
            key_index.insert((xi, yi, c.mor_key(&f)?), id);
            morphisms.push(f);
        }
    }
    let mut tab = Tabularized {
        table,
        objects: objs,
        morphisms,
        key_index,
    };
    for x in tab.objects.clone() {
        let i = tab.mor_id(c, &c.identity(&x)?)?;
        let xi = tab.obj_id(&x)?;
        tab.table.set_identity(xi, i);
    }
    let n = tab.morphisms.len();
    for a in 0..n {
        for b in 0..n {
            let (f, g) = (&tab.morphisms[a], &tab.morphisms[b]);
            if c.cod(f) != c.dom(g) {
                continue;
            }
            let h = tab.mor_id(c, &c.compose(f, g)?)?;
            tab.table.set_compose(MorId(a as u32), MorId(b as u32), h);
        }
    }
    Ok(tab)
}
