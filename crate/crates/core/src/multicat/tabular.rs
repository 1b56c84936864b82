use std::collections::{BTreeMap, HashMap};

use super::{check_composable, signatures, Catalog, Multicategory};
use crate::budget::Caps;
use crate::category::{MorId, ObjId};
use crate::error::{Error, Result};
use crate::hf::Hf;

#[derive(Debug, Clone, PartialEq, Eq)]
struct MorInfo {
    name: String,
    sources: Vec<ObjId>,
    target: ObjId,
}

/// A multicategory given by explicit tables for every signature of arity at
/// most `cap`. Queries beyond the cap exceed the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabularMulticategory {
    pub name: String,
    pub cap: usize,
    objects: Vec<String>,
    obj_index: HashMap<String, ObjId>,
    mors: Vec<MorInfo>,
    mor_index: HashMap<String, MorId>,
    hom: BTreeMap<(Vec<ObjId>, ObjId), Vec<MorId>>,
    compose: HashMap<(Vec<MorId>, MorId), MorId>,
    identity: BTreeMap<ObjId, MorId>,
}

impl TabularMulticategory {
    pub fn new(name: impl Into<String>, cap: usize) -> TabularMulticategory {
        TabularMulticategory {
            name: name.into(),
            cap,
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
        crate::category::check_name(name)?;
        if self.obj_index.contains_key(name) {
            return Err(Error::Parse(format!("duplicate object {name}")));
        }
        let id = ObjId(self.objects.len() as u32);
        self.objects.push(name.into());
        self.obj_index.insert(name.into(), id);
        Ok(id)
    }

    pub fn add_morphism(&mut self, name: &str, sources: Vec<ObjId>, target: ObjId) -> Result<MorId> {
        crate::category::check_name(name)?;
        if self.mor_index.contains_key(name) {
            return Err(Error::Parse(format!("duplicate morphism {name}")));
        }
        if sources.len() > self.cap {
            return Err(Error::Parse(format!("{name} has arity above the cap {}", self.cap)));
        }
        let id = MorId(self.mors.len() as u32);
        self.hom.entry((sources.clone(), target)).or_default().push(id);
        self.mors.push(MorInfo {
            name: name.into(),
            sources,
            target,
        });
        self.mor_index.insert(name.into(), id);
        Ok(id)
    }

    pub fn set_identity(&mut self, x: ObjId, m: MorId) {
        self.identity.insert(x, m);
    }

    pub fn set_compose(&mut self, fs: Vec<MorId>, g: MorId, h: MorId) {
        self.compose.insert((fs, g), h);
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

    pub fn identity_entries(&self) -> impl Iterator<Item = (ObjId, MorId)> + '_ {
        self.identity.iter().map(|(&x, &m)| (x, m))
    }

    /// Composition table sorted by argument ids.
    pub fn compose_entries(&self) -> Vec<(Vec<MorId>, MorId, MorId)> {
        let mut v: Vec<_> = self
            .compose
            .iter()
            .map(|((fs, g), &h)| (fs.clone(), *g, h))
            .collect();
        v.sort();
        v
    }

    pub fn validate(&self) -> Result<()> {
        for x in self.object_ids() {
            let i = self.identity.get(&x).ok_or_else(|| {
                Error::Malformed(format!("object {} has no identity", self.obj_name(x)))
            })?;
            let info = &self.mors[i.0 as usize];
            if info.sources != [x] || info.target != x {
                return Err(Error::Malformed(format!(
                    "identity {} of {} has the wrong signature",
                    info.name,
                    self.obj_name(x)
                )));
            }
        }
        for ((fs, g), h) in &self.compose {
            let ys: Vec<ObjId> = fs.iter().map(|f| self.mors[f.0 as usize].target).collect();
            let g = &self.mors[g.0 as usize];
            let xs: Vec<ObjId> = fs
                .iter()
                .flat_map(|f| self.mors[f.0 as usize].sources.iter().copied())
                .collect();
            let h = &self.mors[h.0 as usize];
            if ys != g.sources || h.sources != xs || h.target != g.target {
                return Err(Error::Malformed(format!("composite of {} is mistyped", g.name)));
            }
        }
        Ok(())
    }
}

impl Multicategory for TabularMulticategory {
    type Obj = ObjId;
    type Mor = MorId;

    fn objects(&self) -> Result<Vec<ObjId>> {
        Ok(self.object_ids().collect())
    }

    fn hom(&self, sources: &[ObjId], target: &ObjId) -> Result<Vec<MorId>> {
        if sources.len() > self.cap {
            return Err(Error::BudgetExceeded(format!(
                "{}: arity {} above the tabulated cap {}",
                self.name,
                sources.len(),
                self.cap
            )));
        }
        Ok(self
            .hom
            .get(&(sources.to_vec(), *target))
            .cloned()
            .unwrap_or_default())
    }

    fn sources(&self, f: &MorId) -> Vec<ObjId> {
        self.mors[f.0 as usize].sources.clone()
    }

    fn target(&self, f: &MorId) -> ObjId {
        self.mors[f.0 as usize].target
    }

    fn identity(&self, x: &ObjId) -> Result<MorId> {
        self.identity
            .get(x)
            .copied()
            .ok_or_else(|| Error::Malformed(format!("no identity for {}", self.obj_name(*x))))
    }

    fn compose(&self, fs: &[MorId], g: &MorId) -> Result<MorId> {
        check_composable(self, fs, g)?;
        if let Some(h) = self.compose.get(&(fs.to_vec(), *g)) {
            return Ok(*h);
        }
        if fs.is_empty() {
            return Ok(*g);
        }
        let total: usize = fs.iter().map(|f| self.mors[f.0 as usize].sources.len()).sum();
        if total > self.cap {
            return Err(Error::BudgetExceeded(format!(
                "{}: composite of arity {total} above the tabulated cap {}",
                self.name, self.cap
            )));
        }
        Err(Error::Malformed(format!(
            "{}: missing composite ({})|{}",
            self.name,
            fs.iter().map(|f| self.mor_name(*f)).collect::<Vec<_>>().join(","),
            self.mor_name(*g)
        )))
    }

    fn mor_key(&self, f: &MorId) -> Result<Hf> {
        Ok(Hf::atom(self.mor_name(*f)))
    }

    fn mor_eq(&self, f: &MorId, g: &MorId) -> Result<bool> {
        Ok(f == g)
    }

    fn name(&self) -> String {
        self.name.clone()
    }

    fn show_obj(&self, x: &ObjId) -> String {
        self.obj_name(*x).into()
    }

    fn show_mor(&self, f: &MorId) -> String {
        self.mor_name(*f).into()
    }
}

/// A tabulated copy of a multicategory within the caps, with the maps back
/// to the original.
pub struct MultiTabularized<M: Multicategory> {
    pub table: TabularMulticategory,
    objs: HashMap<M::Obj, ObjId>,
    pub obj_back: Vec<M::Obj>,
    pub mor_back: Vec<M::Mor>,
    mors: HashMap<(Vec<M::Obj>, M::Obj, Hf), MorId>,
}

impl<M: Multicategory> MultiTabularized<M> {
    pub fn obj_id(&self, x: &M::Obj) -> Result<ObjId> {
        self.objs
            .get(x)
            .copied()
            .ok_or_else(|| Error::Malformed(format!("object {x:?} not tabulated")))
    }

    pub fn mor_id(&self, m: &M, f: &M::Mor) -> Result<MorId> {
        let key = (m.sources(f), m.target(f), m.mor_key(f)?);
        self.mors
            .get(&key)
            .copied()
            .ok_or_else(|| Error::Malformed(format!("morphism {} not tabulated", m.show_mor(f))))
    }
}

/// Tabulates every signature and composite of arity at most the cap.
/// Morphism names come from `show_mor`, suffixed `#k` where ambiguous.
pub fn tabularize_multi<M: Multicategory>(m: &M, caps: &Caps, name: &str) -> Result<MultiTabularized<M>> {
    let cat = Catalog::build(m, caps)?;
    let mut table = TabularMulticategory::new(name, caps.arity);
    let mut objs = HashMap::new();
    for x in &cat.objects {
        objs.insert(x.clone(), table.add_object(&m.show_obj(x))?);
    }
    let mut listed = Vec::new();
    for n in 0..=caps.arity {
        for xs in signatures(&cat.objects, n) {
            for y in &cat.objects {
                listed.extend(m.hom(&xs, y)?);
            }
        }
    }
    let mut uses: HashMap<String, usize> = HashMap::new();
    for f in &listed {
        *uses.entry(m.show_mor(f)).or_default() += 1;
    }
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut mors = HashMap::new();
    let mut mor_back = Vec::new();
    for f in &listed {
        let base = m.show_mor(f);
        let label = if uses[&base] > 1 {
            let k = seen.entry(base.clone()).or_default();
            *k += 1;
            format!("{base}#{k}")
        } else {
            base
        };
        let sources = m.sources(f).iter().map(|x| objs[x]).collect();
        let id = table.add_morphism(&label, sources, objs[&m.target(f)])?;
        mors.insert((m.sources(f), m.target(f), m.mor_key(f)?), id);
        mor_back.push(f.clone());
    }
    let lookup = |f: &M::Mor| -> Result<MorId> {
        mors.get(&(m.sources(f), m.target(f), m.mor_key(f)?))
            .copied()
            .ok_or_else(|| Error::Malformed(format!("{} is not in any listed hom-set", m.show_mor(f))))
    };
    for x in &cat.objects {
        table.set_identity(objs[x], lookup(&m.identity(x)?)?);
    }
    let mut entries = Vec::new();
    for g in cat.all() {
        let ys = m.sources(g);
        cat.for_each_tuple(m, &ys, caps.arity, &mut |fs| {
            let h = m.compose(fs, g)?;
            let ids = fs.iter().map(&lookup).collect::<Result<Vec<_>>>()?;
            entries.push((ids, lookup(g)?, lookup(&h)?));
            caps.guard(entries.len())
        })?;
    }
    for (fs, g, h) in entries {
        table.set_compose(fs, g, h);
    }
    table.validate()?;
    Ok(MultiTabularized {
        table,
        objs,
        obj_back: cat.objects.clone(),
        mor_back,
        mors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multicat::{check_multicategory_axioms, identities, Monoid, Widehat};

    #[test]
    fn z2_tabularization_agrees_with_rule() {
        let caps = Caps::default();
        let z2 = Widehat::new(Monoid::cyclic(2).unwrap(), &caps.budget).unwrap();
        let t = tabularize_multi(&z2, &caps, "z2-table").unwrap();
        // 2 elements at each arity 0..=3
        assert_eq!(t.table.morphism_ids().count(), 8);
        let cat = Catalog::build(&z2, &caps).unwrap();
        for g in cat.all() {
            let ys = z2.sources(g);
            cat.for_each_tuple(&z2, &ys, caps.arity, &mut |fs| {
                let h = t.mor_id(&z2, &z2.compose(fs, g)?)?;
                let ids = fs.iter().map(|f| t.mor_id(&z2, f)).collect::<Result<Vec<_>>>()?;
                assert_eq!(t.table.compose(&ids, &t.mor_id(&z2, g)?)?, h);
                Ok(())
            })
            .unwrap();
        }
        assert!(check_multicategory_axioms(&t.table, &caps).unwrap().passed());
    }

    #[test]
    fn beyond_cap_is_a_budget_error() {
        let caps = Caps::with_arity(2);
        let z2 = Widehat::new(Monoid::cyclic(2).unwrap(), &caps.budget).unwrap();
        let t = tabularize_multi(&z2, &caps, "z2-table").unwrap();
        let x = t.obj_id(&()).unwrap();
        assert!(t.table.hom(&[x, x, x], &x).unwrap_err().is_budget());
        let two = t.table.hom(&[x, x], &x).unwrap()[0];
        let ids = identities(&t.table, &[x, x]).unwrap();
        assert_eq!(t.table.compose(&ids, &two).unwrap(), two);
        let err = t.table.compose(&[two, two], &two).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn corrupted_entry_is_localized() {
        let caps = Caps::with_arity(2);
        let z2 = Widehat::new(Monoid::cyclic(2).unwrap(), &caps.budget).unwrap();
        let mut t = tabularize_multi(&z2, &caps, "z2-table").unwrap().table;
        let x = t.obj_by_name("*").unwrap();
        let s1 = t.hom(&[x], &x).unwrap()[1];
        // s·s should be e
        t.set_compose(vec![s1], s1, s1);
        let report = check_multicategory_axioms(&t, &caps).unwrap();
        assert_eq!(report.failed_checks(), vec!["multi.associativity"]);
    }
}
