//! The closed category of finite sets, evaluated lazily.
//!
//! Objects are finite sets of hereditarily finite values. Function-set
//! objects too large to list are kept symbolic; morphisms are symbolic
//! composites evaluated pointwise, so a check only ever enumerates the
//! domain of the morphisms it compares.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::ClosedCategory;
use crate::budget::SizeBudget;
use crate::category::Category;
use crate::error::{Error, Result};
use crate::hf::Hf;

/// The element of the chosen singleton `𝟙 = {*}`.
pub const STAR: &str = "*";

/// Function sets up to this many elements are listed explicitly; larger ones
/// stay symbolic. Both forms denote the same set, and a given set always gets
/// the same form, so structural equality is set equality.
const MATERIALIZE: u128 = 4096;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetObj {
    Finite(Arc<BTreeSet<Hf>>),
    /// All functions from the first set to the second.
    Exp(Arc<SetObj>, Arc<SetObj>),
}

impl SetObj {
    pub fn finite<I: IntoIterator<Item = Hf>>(elems: I) -> SetObj {
        SetObj::Finite(Arc::new(elems.into_iter().collect()))
    }

    pub fn unit() -> SetObj {
        SetObj::finite([Hf::atom(STAR)])
    }

    pub fn card(&self) -> u128 {
        match self {
            SetObj::Finite(s) => s.len() as u128,
            SetObj::Exp(a, b) => {
                let (a, b) = (a.card(), b.card());
                match u32::try_from(a) {
                    Ok(a) => b.checked_pow(a).unwrap_or(u128::MAX),
                    Err(_) if b <= 1 => b,
                    Err(_) => u128::MAX,
                }
            }
        }
    }

    /// Depth of the deepest element.
    pub fn elem_depth(&self) -> usize {
        match self {
            SetObj::Finite(s) => s.iter().map(Hf::depth).max().unwrap_or(0),
            SetObj::Exp(a, b) => 1 + a.elem_depth().max(b.elem_depth()),
        }
    }

    /// The set of functions `a -> b`.
    pub fn exp(a: &SetObj, b: &SetObj, budget: &SizeBudget) -> Result<SetObj> {
        let card = SetObj::Exp(Arc::new(a.clone()), Arc::new(b.clone())).card();
        if card > MATERIALIZE {
            return Ok(SetObj::Exp(Arc::new(a.clone()), Arc::new(b.clone())));
        }
        let fns = functions(&a.elements(budget)?, &b.elements(budget)?, budget)?;
        Ok(SetObj::Finite(Arc::new(fns.into_iter().collect())))
    }

    pub fn elements(&self, budget: &SizeBudget) -> Result<Vec<Hf>> {
        match self {
            SetObj::Finite(s) => Ok(s.iter().cloned().collect()),
            SetObj::Exp(a, b) => {
                let card = self.card();
                if card > budget.max_hom as u128 {
                    return Err(Error::BudgetExceeded(format!(
                        "cannot enumerate {self}: {card} elements"
                    )));
                }
                functions(&a.elements(budget)?, &b.elements(budget)?, budget)
            }
        }
    }

    pub fn contains(&self, x: &Hf, budget: &SizeBudget) -> Result<bool> {
        match self {
            SetObj::Finite(s) => Ok(s.contains(x)),
            SetObj::Exp(a, b) => {
                let Some(m) = x.as_fn() else { return Ok(false) };
                let dom = a.elements(budget)?;
                if m.len() != dom.len() || !dom.iter().all(|d| m.contains_key(d)) {
                    return Ok(false);
                }
                for v in m.values() {
                    if !b.contains(v, budget)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

fn functions(dom: &[Hf], cod: &[Hf], budget: &SizeBudget) -> Result<Vec<Hf>> {
    let depth = 1 + dom
        .iter()
        .chain(cod)
        .map(Hf::depth)
        .max()
        .unwrap_or(0);
    if depth > budget.max_depth {
        return Err(Error::BudgetExceeded(format!(
            "function tables of depth {depth} exceed the limit of {}",
            budget.max_depth
        )));
    }
    let count = (cod.len() as u128).checked_pow(dom.len() as u32).unwrap_or(u128::MAX);
    if count > budget.max_hom as u128 {
        return Err(Error::BudgetExceeded(format!("{count} functions to enumerate")));
    }
    if cod.is_empty() {
        return Ok(if dom.is_empty() {
            vec![Hf::from_map(BTreeMap::new())]
        } else {
            Vec::new()
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut idx = vec![0usize; dom.len()];
    loop {
        out.push(Hf::from_map(
            dom.iter()
                .cloned()
                .zip(idx.iter().map(|&i| cod[i].clone()))
                .collect(),
        ));
        let mut k = dom.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < cod.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

impl fmt::Display for SetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetObj::Finite(s) => write!(f, "{}", Hf::Set(s.clone())),
            SetObj::Exp(a, b) => write!(f, "[{a} => {b}]"),
        }
    }
}

impl fmt::Debug for SetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone)]
enum Kind {
    Table(Arc<BTreeMap<Hf, Hf>>),
    Id,
    Compose(SetMor, SetMor),
    /// `und(f,g)`: `h ↦ f·h·g`.
    Hom(SetMor, SetMor),
    /// `i_X(x)(*) = x`.
    Point,
    Unpoint,
    /// `j_X(*) = 1_X`, carrying `X`.
    J(SetObj),
    /// `L(g)(f) = f·g`, carrying `und(X,Y)`.
    L(SetObj),
}

/// A function between finite sets, evaluated on demand.
#[derive(Clone)]
pub struct SetMor {
    pub dom: SetObj,
    pub cod: SetObj,
    kind: Arc<Kind>,
}

fn compose_tables(f: &Hf, g: &Hf) -> Result<Hf> {
    let (Some(fm), Some(_)) = (f.as_fn(), g.as_fn()) else {
        return Err(Error::Malformed(format!("{f} or {g} is not a function table")));
    };
    let mut out = BTreeMap::new();
    for (k, v) in fm {
        let w = g
            .apply(v)
            .ok_or_else(|| Error::Malformed(format!("{v} outside the domain of {g}")))?;
        out.insert(k.clone(), w.clone());
    }
    Ok(Hf::from_map(out))
}

impl SetMor {
    pub fn table(dom: SetObj, cod: SetObj, map: BTreeMap<Hf, Hf>) -> SetMor {
        SetMor {
            dom,
            cod,
            kind: Arc::new(Kind::Table(Arc::new(map))),
        }
    }

    pub fn apply(&self, x: &Hf, budget: &SizeBudget) -> Result<Hf> {
        match &*self.kind {
            Kind::Table(m) => m
                .get(x)
                .cloned()
                .ok_or_else(|| Error::Malformed(format!("{x} outside the domain of the table"))),
            Kind::Id => Ok(x.clone()),
            Kind::Compose(f, g) => g.apply(&f.apply(x, budget)?, budget),
            Kind::Hom(f, g) => {
                let mut out = BTreeMap::new();
                for a in f.dom.elements(budget)? {
                    let b = f.apply(&a, budget)?;
                    let c = x.apply(&b).ok_or_else(|| {
                        Error::Malformed(format!("{b} outside the domain of {x}"))
                    })?;
                    out.insert(a, g.apply(c, budget)?);
                }
                Ok(Hf::from_map(out))
            }
            Kind::Point => Ok(Hf::from_map([(Hf::atom(STAR), x.clone())].into())),
            Kind::Unpoint => x
                .apply(&Hf::atom(STAR))
                .cloned()
                .ok_or_else(|| Error::Malformed(format!("{x} is not a point"))),
            Kind::J(a) => Ok(Hf::from_map(
                a.elements(budget)?.into_iter().map(|e| (e.clone(), e)).collect(),
            )),
            Kind::L(xy) => {
                let mut out = BTreeMap::new();
                for f in xy.elements(budget)? {
                    let fg = compose_tables(&f, x)?;
                    out.insert(f, fg);
                }
                Ok(Hf::from_map(out))
            }
        }
    }

    /// The function as an explicit table over its domain.
    pub fn to_table(&self, budget: &SizeBudget) -> Result<BTreeMap<Hf, Hf>> {
        let mut out = BTreeMap::new();
        for x in self.dom.elements(budget)? {
            let y = self.apply(&x, budget)?;
            out.insert(x, y);
        }
        Ok(out)
    }
}

impl fmt::Debug for SetMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.kind {
            Kind::Table(m) => write!(f, "{}", Hf::Fn(m.clone())),
            Kind::Id => write!(f, "1"),
            Kind::Compose(a, b) => write!(f, "({a:?} ; {b:?})"),
            Kind::Hom(a, b) => write!(f, "und({a:?}, {b:?})"),
            Kind::Point => write!(f, "i"),
            Kind::Unpoint => write!(f, "i^-1"),
            Kind::J(_) => write!(f, "j"),
            Kind::L(_) => write!(f, "L"),
        }
    }
}

/// The lazy closed category of finite sets. Test objects are all subsets of
/// the first `max_size` atoms of the pool `*, a, b, c, ...`.
#[derive(Debug, Clone)]
pub struct FinSet {
    pub max_size: usize,
    pub budget: SizeBudget,
}

const POOL: [&str; 8] = [STAR, "a", "b", "c", "d", "e", "f", "g"];

impl FinSet {
    pub fn new(max_size: usize, budget: SizeBudget) -> Result<FinSet> {
        if max_size == 0 || max_size > POOL.len() {
            return Err(Error::Malformed(format!(
                "max_size must lie in 1..={}",
                POOL.len()
            )));
        }
        Ok(FinSet { max_size, budget })
    }

    fn mk(&self, dom: SetObj, cod: SetObj, kind: Kind) -> SetMor {
        SetMor {
            dom,
            cod,
            kind: Arc::new(kind),
        }
    }

    fn exp(&self, a: &SetObj, b: &SetObj) -> Result<SetObj> {
        SetObj::exp(a, b, &self.budget)
    }
}

impl Category for FinSet {
    type Obj = SetObj;
    type Mor = SetMor;

    fn objects(&self) -> Result<Vec<SetObj>> {
        let pool = &POOL[..self.max_size];
        let mut out: Vec<SetObj> = (0u32..1 << pool.len())
            .map(|mask| {
                SetObj::finite(
                    pool.iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, a)| Hf::atom(a)),
                )
            })
            .collect();
        out.sort();
        self.budget.objects(out)
    }

    fn objects_complete(&self) -> bool {
        false
    }

    fn hom(&self, x: &SetObj, y: &SetObj) -> Result<Vec<SetMor>> {
        let fns = self.exp(x, y)?.elements(&self.budget)?;
        let fns = self.budget.hom(fns)?;
        Ok(fns
            .into_iter()
            .map(|t| SetMor::table(x.clone(), y.clone(), t.as_fn().unwrap().clone()))
            .collect())
    }

    fn dom(&self, f: &SetMor) -> SetObj {
        f.dom.clone()
    }

    fn cod(&self, f: &SetMor) -> SetObj {
        f.cod.clone()
    }

    fn identity(&self, x: &SetObj) -> Result<SetMor> {
        Ok(self.mk(x.clone(), x.clone(), Kind::Id))
    }

    fn compose(&self, f: &SetMor, g: &SetMor) -> Result<SetMor> {
        if f.cod != g.dom {
            return Err(Error::Mismatch(format!(
                "codomain {} differs from domain {}",
                f.cod, g.dom
            )));
        }
        match (&*f.kind, &*g.kind) {
            (Kind::Id, _) => Ok(g.clone()),
            (_, Kind::Id) => Ok(f.clone()),
            (Kind::Table(a), Kind::Table(b)) => {
                let mut out = BTreeMap::new();
                for (k, v) in a.iter() {
                    let w = b.get(v).ok_or_else(|| {
                        Error::Malformed(format!("{v} outside the domain of the table"))
                    })?;
                    out.insert(k.clone(), w.clone());
                }
                Ok(SetMor::table(f.dom.clone(), g.cod.clone(), out))
            }
            _ => Ok(self.mk(
                f.dom.clone(),
                g.cod.clone(),
                Kind::Compose(f.clone(), g.clone()),
            )),
        }
    }

    fn mor_key(&self, f: &SetMor) -> Result<Hf> {
        Ok(Hf::from_map(f.to_table(&self.budget)?))
    }

    fn mor_eq(&self, f: &SetMor, g: &SetMor) -> Result<bool> {
        if f.dom != g.dom || f.cod != g.cod {
            return Ok(false);
        }
        for x in f.dom.elements(&self.budget)? {
            if f.apply(&x, &self.budget)? != g.apply(&x, &self.budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn show_obj(&self, x: &SetObj) -> String {
        x.to_string()
    }

    fn show_mor(&self, f: &SetMor) -> String {
        format!("{f:?}")
    }
}

impl ClosedCategory for FinSet {
    fn unit(&self) -> SetObj {
        SetObj::unit()
    }

    fn hom_obj(&self, x: &SetObj, y: &SetObj) -> Result<SetObj> {
        self.exp(x, y)
    }

    fn hom_mor(&self, f: &SetMor, g: &SetMor) -> Result<SetMor> {
        let dom = self.exp(&f.cod, &g.dom)?;
        let cod = self.exp(&f.dom, &g.cod)?;
        Ok(self.mk(dom, cod, Kind::Hom(f.clone(), g.clone())))
    }

    fn i(&self, x: &SetObj) -> Result<SetMor> {
        Ok(self.mk(x.clone(), self.exp(&self.unit(), x)?, Kind::Point))
    }

    fn i_inv(&self, x: &SetObj) -> Result<SetMor> {
        Ok(self.mk(self.exp(&self.unit(), x)?, x.clone(), Kind::Unpoint))
    }

    fn j(&self, x: &SetObj) -> Result<SetMor> {
        Ok(self.mk(self.unit(), self.exp(x, x)?, Kind::J(x.clone())))
    }

    fn l(&self, x: &SetObj, y: &SetObj, z: &SetObj) -> Result<SetMor> {
        let xy = self.exp(x, y)?;
        let cod = self.exp(&xy, &self.exp(x, z)?)?;
        Ok(self.mk(self.exp(y, z)?, cod, Kind::L(xy)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(names: &[&str]) -> SetObj {
        SetObj::finite(names.iter().map(|n| Hf::atom(n)))
    }

    fn fs() -> FinSet {
        FinSet::new(2, SizeBudget::default()).unwrap()
    }

    #[test]
    fn test_objects_are_subsets_of_the_pool() {
        let objs = fs().objects().unwrap();
        assert_eq!(objs.len(), 4);
        assert!(objs.contains(&set(&[])));
        assert!(objs.contains(&set(&["*", "a"])));
    }

    #[test]
    fn function_sets_have_the_right_size() {
        let c = fs();
        let x = set(&["a", "b"]);
        assert_eq!(c.hom_obj(&x, &x).unwrap().card(), 4);
        assert_eq!(c.hom_obj(&set(&[]), &x).unwrap().card(), 1);
        assert_eq!(c.hom_obj(&x, &set(&[])).unwrap().card(), 0);
        let big = c.hom_obj(&c.hom_obj(&x, &x).unwrap(), &c.hom_obj(&x, &x).unwrap()).unwrap();
        assert_eq!(big.card(), 256);
        assert!(matches!(big, SetObj::Finite(_)));
        let huge = c.hom_obj(&big, &big).unwrap();
        assert!(matches!(huge, SetObj::Exp(_, _)));
    }

    #[test]
    fn i_points_at_the_element() {
        let c = fs();
        let x = set(&["a", "b"]);
        let v = c.i(&x).unwrap().apply(&Hf::atom("a"), &c.budget).unwrap();
        assert_eq!(v.apply(&Hf::atom(STAR)), Some(&Hf::atom("a")));
    }

    #[test]
    fn j_is_the_identity_table() {
        let c = fs();
        let x = set(&["a", "b"]);
        let v = c.j(&x).unwrap().apply(&Hf::atom(STAR), &c.budget).unwrap();
        let id = Hf::fn_table([(Hf::atom("a"), Hf::atom("a")), (Hf::atom("b"), Hf::atom("b"))]).unwrap();
        assert_eq!(v, id);
    }

    #[test]
    fn l_precomposes() {
        let c = fs();
        let x = set(&["a", "b"]);
        let swap = Hf::fn_table([(Hf::atom("a"), Hf::atom("b")), (Hf::atom("b"), Hf::atom("a"))]).unwrap();
        let konst = Hf::fn_table([(Hf::atom("a"), Hf::atom("a")), (Hf::atom("b"), Hf::atom("a"))]).unwrap();
        let lg = c.l(&x, &x, &x).unwrap().apply(&swap, &c.budget).unwrap();
        // L(g)(f) = f·g, so L(swap)(konst) = konst then swap: everything to b
        let expect = Hf::fn_table([(Hf::atom("a"), Hf::atom("b")), (Hf::atom("b"), Hf::atom("b"))]).unwrap();
        assert_eq!(lg.apply(&konst), Some(&expect));
    }

    #[test]
    fn depth_budget_is_enforced() {
        let c = FinSet::new(2, SizeBudget { max_depth: 1, ..SizeBudget::default() }).unwrap();
        let x = set(&["a", "b"]);
        let xx = c.hom_obj(&x, &x).unwrap();
        assert!(matches!(c.hom_obj(&xx, &xx), Err(Error::BudgetExceeded(_))));
    }
}
