//! Strict monoidal categories and the multicategory `Ĉ` they induce, with
//! `Ĉ(X1,...,Xn;Y) = C(X1⊗...⊗Xn, Y)`.

use std::fmt;

use super::{check_composable, Multicategory};
use crate::budget::SizeBudget;
use crate::category::Category;
use crate::error::{Error, Result};
use crate::hf::Hf;
use crate::report::{Check, Report};

pub trait StrictMonoidal: Category {
    fn unit_obj(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn tensor_objs(&self, xs: &[Self::Obj]) -> Result<Self::Obj> {
        let mut acc = self.unit_obj();
        for x in xs {
            acc = self.tensor_obj(&acc, x)?;
        }
        Ok(acc)
    }

    fn tensor_mors(&self, fs: &[Self::Mor]) -> Result<Self::Mor> {
        let mut acc = self.identity(&self.unit_obj())?;
        for f in fs {
            acc = self.tensor_mor(&acc, f)?;
        }
        Ok(acc)
    }
}

/// Strictness and functoriality of the tensor, on objects and morphisms.
pub fn check_strict_monoidal<S: StrictMonoidal>(s: &S, budget: &SizeBudget) -> Result<Report> {
    let objs = budget.objects(s.objects()?)?;
    let mut mors = Vec::new();
    for x in &objs {
        for y in &objs {
            mors.extend(budget.hom(s.hom(x, y)?)?);
        }
    }
    let mut report = Report::new("strict monoidal structure");
    let i = s.unit_obj();

    let mut unit = Check::new("monoidal.unit-objects", "I⊗X = X = X⊗I");
    let mut assoc = Check::new("monoidal.assoc-objects", "(X⊗Y)⊗Z = X⊗(Y⊗Z)");
    for x in &objs {
        let r = (|| Ok(s.tensor_obj(&i, x)? == *x && s.tensor_obj(x, &i)? == *x))();
        unit.record_result(r, || s.show_obj(x))?;
        for y in &objs {
            for z in &objs {
                let r = (|| {
                    let l = s.tensor_obj(&s.tensor_obj(x, y)?, z)?;
                    let r = s.tensor_obj(x, &s.tensor_obj(y, z)?)?;
                    Ok(l == r)
                })();
                assoc.record_result(r, || {
                    format!("{},{},{}", s.show_obj(x), s.show_obj(y), s.show_obj(z))
                })?;
            }
        }
    }
    report.push(unit.finish());
    report.push(assoc.finish());

    let mut typing = Check::new("monoidal.tensor-typing", "f⊗g: X⊗X' -> Y⊗Y'");
    let mut ident = Check::new("monoidal.tensor-identities", "1⊗1 = 1");
    let mut munit = Check::new("monoidal.unit-morphisms", "1_I⊗f = f = f⊗1_I");
    let mut massoc = Check::new("monoidal.assoc-morphisms", "(f⊗g)⊗h = f⊗(g⊗h)");
    let mut inter = Check::new("monoidal.interchange", "(f⊗g)·(f'⊗g') = (f·f')⊗(g·g')");
    let one = s.identity(&i)?;
    for x in &objs {
        for y in &objs {
            let r = (|| {
                let t = s.tensor_mor(&s.identity(x)?, &s.identity(y)?)?;
                s.mor_eq(&t, &s.identity(&s.tensor_obj(x, y)?)?)
            })();
            ident.record_result(r, || format!("{},{}", s.show_obj(x), s.show_obj(y)))?;
        }
    }
    for f in &mors {
        let r = (|| Ok(s.mor_eq(&s.tensor_mor(&one, f)?, f)? && s.mor_eq(&s.tensor_mor(f, &one)?, f)?))();
        munit.record_result(r, || s.show_mor(f))?;
        for g in &mors {
            let r = (|| {
                let t = s.tensor_mor(f, g)?;
                Ok(s.dom(&t) == s.tensor_obj(&s.dom(f), &s.dom(g))?
                    && s.cod(&t) == s.tensor_obj(&s.cod(f), &s.cod(g))?)
            })();
            typing.record_result(r, || format!("{}⊗{}", s.show_mor(f), s.show_mor(g)))?;
            for h in &mors {
                let r = (|| {
                    let l = s.tensor_mor(&s.tensor_mor(f, g)?, h)?;
                    let r = s.tensor_mor(f, &s.tensor_mor(g, h)?)?;
                    s.mor_eq(&l, &r)
                })();
                massoc.record_result(r, || {
                    format!("{},{},{}", s.show_mor(f), s.show_mor(g), s.show_mor(h))
                })?;
            }
        }
    }
    for f in &mors {
        for g in &mors {
            for f2 in mors.iter().filter(|m| s.dom(m) == s.cod(f)) {
                for g2 in mors.iter().filter(|m| s.dom(m) == s.cod(g)) {
                    let r = (|| {
                        let l = s.compose(&s.tensor_mor(f, g)?, &s.tensor_mor(f2, g2)?)?;
                        let r = s.tensor_mor(&s.compose(f, f2)?, &s.compose(g, g2)?)?;
                        s.mor_eq(&l, &r)
                    })();
                    inter.record_result(r, || {
                        format!(
                            "f={}, g={}, f'={}, g'={}",
                            s.show_mor(f),
                            s.show_mor(g),
                            s.show_mor(f2),
                            s.show_mor(g2)
                        )
                    })?;
                }
            }
        }
    }
    report.push(typing.finish());
    report.push(ident.finish());
    report.push(munit.finish());
    report.push(massoc.finish());
    report.push(inter.finish());
    Ok(report)
}

/// A commutative monoid as a one-object strict monoidal category; tensor and
/// composition are both the monoid operation. Element 0 is neutral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monoid {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl Monoid {
    pub fn new(name: &str, elements: &[&str], table: Vec<Vec<usize>>) -> Result<Monoid> {
        let n = elements.len();
        let bad = |what: &str| Err(Error::Malformed(format!("{name}: {what}")));
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return bad("table is not an n×n table over the elements");
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return bad("element 0 is not neutral");
            }
            for b in 0..n {
                if table[a][b] != table[b][a] {
                    return bad("not commutative");
                }
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        Ok(Monoid {
            name: name.into(),
            elements: elements.iter().map(|e| e.to_string()).collect(),
            table,
        })
    }

    /// `Z/n` with elements named `0..n`, or `e, s` for `n = 2`.
    pub fn cyclic(n: usize) -> Result<Monoid> {
        let names: Vec<String> = if n == 2 {
            vec!["e".into(), "s".into()]
        } else {
            (0..n).map(|i| i.to_string()).collect()
        };
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Monoid::new(&format!("z{n}"), &refs, table)
    }

    /// `{0, 1, ..., top}` under addition truncated at `top`.
    pub fn saturating(top: usize) -> Result<Monoid> {
        let names: Vec<String> = (0..=top).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table = (0..=top).map(|a| (0..=top).map(|b| (a + b).min(top)).collect()).collect();
        Monoid::new(&format!("nat{top}"), &refs, table)
    }

    pub fn renamed(mut self, name: &str) -> Monoid {
        self.name = name.into();
        self
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::Parse(format!("{}: unknown element {name}", self.name)))
    }

    pub fn is_invertible(&self, a: usize) -> bool {
        (0..self.len()).any(|b| self.op(a, b) == 0)
    }

    /// `k·a`.
    pub fn times(&self, k: usize, a: usize) -> usize {
        (0..k).fold(0, |acc, _| self.op(acc, a))
    }
}

impl Category for Monoid {
    type Obj = ();
    type Mor = usize;
    fn objects(&self) -> Result<Vec<()>> {
        Ok(vec![()])
    }
    fn hom(&self, _: &(), _: &()) -> Result<Vec<usize>> {
        Ok((0..self.len()).collect())
    }
    fn dom(&self, _: &usize) {}
    fn cod(&self, _: &usize) {}
    fn identity(&self, _: &()) -> Result<usize> {
        Ok(0)
    }
    fn compose(&self, f: &usize, g: &usize) -> Result<usize> {
        Ok(self.op(*f, *g))
    }
    fn mor_key(&self, f: &usize) -> Result<Hf> {
        Ok(Hf::atom(&self.elements[*f]))
    }
    fn show_obj(&self, _: &()) -> String {
        "*".into()
    }
    fn show_mor(&self, f: &usize) -> String {
        self.elements[*f].clone()
    }
}

impl StrictMonoidal for Monoid {
    fn unit_obj(&self) {}
    fn tensor_obj(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn tensor_mor(&self, f: &usize, g: &usize) -> Result<usize> {
        Ok(self.op(*f, *g))
    }
}

/// A monoid as a discrete strict monoidal category: objects are elements,
/// only identities, tensor is the operation. `None` entries mark products
/// outside the represented range; reaching one exceeds the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteMonoid {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<Option<usize>>>,
}

impl DiscreteMonoid {
    pub fn new(name: &str, elements: &[&str], table: Vec<Vec<Option<usize>>>) -> DiscreteMonoid {
        DiscreteMonoid {
            name: name.into(),
            elements: elements.iter().map(|e| e.to_string()).collect(),
            table,
        }
    }

    pub fn from_monoid(m: &Monoid) -> DiscreteMonoid {
        DiscreteMonoid {
            name: format!("{}-discrete", m.name),
            elements: m.elements.clone(),
            table: m.table.iter().map(|r| r.iter().map(|&v| Some(v)).collect()).collect(),
        }
    }

    /// Words `1, a, aa, ...` of length at most `max_len` under concatenation.
    pub fn truncated_free(max_len: usize) -> DiscreteMonoid {
        let names: Vec<String> = (0..=max_len)
            .map(|k| if k == 0 { "1".into() } else { "a".repeat(k) })
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table = (0..=max_len)
            .map(|a| (0..=max_len).map(|b| (a + b <= max_len).then_some(a + b)).collect())
            .collect();
        DiscreteMonoid::new(&format!("free{max_len}"), &refs, table)
    }

    fn op(&self, a: usize, b: usize) -> Result<usize> {
        self.table[a][b].ok_or_else(|| {
            Error::BudgetExceeded(format!(
                "{}: {}⊗{} lies outside the represented elements",
                self.name, self.elements[a], self.elements[b]
            ))
        })
    }
}

impl Category for DiscreteMonoid {
    type Obj = usize;
    type Mor = usize;
    fn objects(&self) -> Result<Vec<usize>> {
        Ok((0..self.elements.len()).collect())
    }
    fn hom(&self, x: &usize, y: &usize) -> Result<Vec<usize>> {
        Ok(if x == y { vec![*x] } else { Vec::new() })
    }
    fn dom(&self, f: &usize) -> usize {
        *f
    }
    fn cod(&self, f: &usize) -> usize {
        *f
    }
    fn identity(&self, x: &usize) -> Result<usize> {
        Ok(*x)
    }
    fn compose(&self, f: &usize, g: &usize) -> Result<usize> {
        if f != g {
            return Err(Error::Mismatch(format!("{} then {}", self.elements[*f], self.elements[*g])));
        }
        Ok(*f)
    }
    fn mor_key(&self, f: &usize) -> Result<Hf> {
        Ok(Hf::atom(&self.elements[*f]))
    }
    fn show_obj(&self, x: &usize) -> String {
        self.elements[*x].clone()
    }
    fn show_mor(&self, f: &usize) -> String {
        format!("1{}", self.elements[*f])
    }
}

impl StrictMonoidal for DiscreteMonoid {
    fn unit_obj(&self) -> usize {
        0
    }
    fn tensor_obj(&self, a: &usize, b: &usize) -> Result<usize> {
        self.op(*a, *b)
    }
    fn tensor_mor(&self, f: &usize, g: &usize) -> Result<usize> {
        self.op(*f, *g)
    }
}

/// A finite meet-semilattice with top as a posetal strict monoidal category
/// under meet. Morphisms are pairs `(a, b)` with `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetSemilattice {
    pub name: String,
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub meet: Vec<Vec<usize>>,
    pub top: usize,
}

impl MeetSemilattice {
    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> MeetSemilattice {
        MeetSemilattice {
            name: format!("chain{n}"),
            elements: (0..n).map(|i| i.to_string()).collect(),
            leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect(),
            meet: (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect(),
            top: n - 1,
        }
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::Parse(format!("{}: unknown element {name}", self.name)))
    }
}

impl Category for MeetSemilattice {
    type Obj = usize;
    type Mor = (usize, usize);
    fn objects(&self) -> Result<Vec<usize>> {
        Ok((0..self.elements.len()).collect())
    }
    fn hom(&self, x: &usize, y: &usize) -> Result<Vec<(usize, usize)>> {
        Ok(if self.leq[*x][*y] { vec![(*x, *y)] } else { Vec::new() })
    }
    fn dom(&self, f: &(usize, usize)) -> usize {
        f.0
    }
    fn cod(&self, f: &(usize, usize)) -> usize {
        f.1
    }
    fn identity(&self, x: &usize) -> Result<(usize, usize)> {
        Ok((*x, *x))
    }
    fn compose(&self, f: &(usize, usize), g: &(usize, usize)) -> Result<(usize, usize)> {
        if f.1 != g.0 {
            return Err(Error::Mismatch(format!("{} then {}", self.show_mor(f), self.show_mor(g))));
        }
        Ok((f.0, g.1))
    }
    fn mor_key(&self, _: &(usize, usize)) -> Result<Hf> {
        Ok(Hf::atom("<="))
    }
    fn show_obj(&self, x: &usize) -> String {
        self.elements[*x].clone()
    }
    fn show_mor(&self, f: &(usize, usize)) -> String {
        format!("{}<={}", self.elements[f.0], self.elements[f.1])
    }
}

impl StrictMonoidal for MeetSemilattice {
    fn unit_obj(&self) -> usize {
        self.top
    }
    fn tensor_obj(&self, a: &usize, b: &usize) -> Result<usize> {
        Ok(self.meet[*a][*b])
    }
    fn tensor_mor(&self, f: &(usize, usize), g: &(usize, usize)) -> Result<(usize, usize)> {
        Ok((self.meet[f.0][g.0], self.meet[f.1][g.1]))
    }
}

/// A morphism `X1,...,Xn -> Y` of `Ĉ`: a morphism `X1⊗...⊗Xn -> Y` of `C`
/// tagged with its source list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HatMor<O, M> {
    pub sources: Vec<O>,
    pub target: O,
    pub mor: M,
}

impl<O: fmt::Debug, M: fmt::Debug> fmt::Debug for HatMor<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{:?}->{:?}", self.mor, self.sources, self.target)
    }
}

/// The multicategory `Ĉ` of a strict monoidal category.
pub struct Widehat<S> {
    pub base: S,
    name: String,
}

impl<S: StrictMonoidal> Widehat<S> {
    /// Validates strictness first; a tensor leaving the represented range
    /// surfaces as a budget error.
    pub fn new(base: S, budget: &SizeBudget) -> Result<Widehat<S>> {
        let report = check_strict_monoidal(&base, budget)?;
        if let Some(item) = report.first_failure() {
            return Err(Error::Malformed(format!(
                "not strict monoidal: {} fails at {}",
                item.check,
                item.loci.first().cloned().unwrap_or_default()
            )));
        }
        Ok(Widehat::unchecked(base))
    }

    pub fn unchecked(base: S) -> Widehat<S> {
        Widehat {
            base,
            name: String::new(),
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.into();
        self
    }

    /// Wraps a base morphism `X1⊗...⊗Xn -> Y`.
    pub fn wrap(&self, sources: Vec<S::Obj>, mor: S::Mor) -> Result<HatMor<S::Obj, S::Mor>> {
        if self.base.dom(&mor) != self.base.tensor_objs(&sources)? {
            return Err(Error::Mismatch(format!(
                "{} does not start at the tensor of its sources",
                self.base.show_mor(&mor)
            )));
        }
        Ok(HatMor {
            target: self.base.cod(&mor),
            sources,
            mor,
        })
    }
}

impl<S: StrictMonoidal> Multicategory for Widehat<S> {
    type Obj = S::Obj;
    type Mor = HatMor<S::Obj, S::Mor>;

    fn objects(&self) -> Result<Vec<S::Obj>> {
        self.base.objects()
    }

    fn hom(&self, sources: &[S::Obj], target: &S::Obj) -> Result<Vec<Self::Mor>> {
        let x = self.base.tensor_objs(sources)?;
        Ok(self
            .base
            .hom(&x, target)?
            .into_iter()
            .map(|mor| HatMor {
                sources: sources.to_vec(),
                target: target.clone(),
                mor,
            })
            .collect())
    }

    fn sources(&self, f: &Self::Mor) -> Vec<S::Obj> {
        f.sources.clone()
    }

    fn target(&self, f: &Self::Mor) -> S::Obj {
        f.target.clone()
    }

    fn identity(&self, x: &S::Obj) -> Result<Self::Mor> {
        Ok(HatMor {
            sources: vec![x.clone()],
            target: x.clone(),
            mor: self.base.identity(x)?,
        })
    }

    fn compose(&self, fs: &[Self::Mor], g: &Self::Mor) -> Result<Self::Mor> {
        check_composable(self, fs, g)?;
        let ms: Vec<S::Mor> = fs.iter().map(|f| f.mor.clone()).collect();
        let t = self.base.tensor_mors(&ms)?;
        Ok(HatMor {
            sources: fs.iter().flat_map(|f| f.sources.iter().cloned()).collect(),
            target: g.target.clone(),
            mor: self.base.compose(&t, &g.mor)?,
        })
    }

    fn mor_key(&self, f: &Self::Mor) -> Result<Hf> {
        self.base.mor_key(&f.mor)
    }

    fn name(&self) -> String {
        if self.name.is_empty() {
            "widehat".into()
        } else {
            self.name.clone()
        }
    }

    fn show_obj(&self, x: &S::Obj) -> String {
        self.base.show_obj(x)
    }

    fn show_mor(&self, f: &Self::Mor) -> String {
        self.base.show_mor(&f.mor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Caps;
    use crate::multicat::check_multicategory_axioms;

    #[test]
    fn z2_hat_composes_by_group_multiplication() {
        let z2 = Widehat::new(Monoid::cyclic(2).unwrap(), &SizeBudget::default()).unwrap();
        let s = z2.hom(&[(), ()], &()).unwrap()[1].clone();
        let e1 = z2.hom(&[()], &()).unwrap()[0].clone();
        let s0 = z2.hom(&[], &()).unwrap()[1].clone();
        let c = z2.compose(&[s0.clone(), e1], &s).unwrap();
        assert_eq!(c.sources, vec![()]);
        // s + e + s = e
        assert_eq!(c.mor, 0);
        assert_eq!(z2.compose(&[], &s0).unwrap(), s0);
    }

    #[test]
    fn positive_monoidal_inputs_pass() {
        let caps = Caps::default();
        let z2 = Widehat::new(Monoid::cyclic(2).unwrap(), &caps.budget).unwrap();
        assert!(check_multicategory_axioms(&z2, &caps).unwrap().passed());
        let triv = Widehat::new(Monoid::cyclic(1).unwrap(), &caps.budget).unwrap();
        assert!(check_multicategory_axioms(&triv, &caps).unwrap().passed());
        let h = Widehat::new(MeetSemilattice::chain(2), &caps.budget).unwrap();
        assert!(check_multicategory_axioms(&h, &caps).unwrap().passed());
        let d = Widehat::new(DiscreteMonoid::from_monoid(&Monoid::saturating(2).unwrap()), &caps.budget).unwrap();
        assert!(check_multicategory_axioms(&d, &caps).unwrap().passed());
    }

    #[test]
    fn truncated_free_monoid_exceeds_budget() {
        let err = Widehat::new(DiscreteMonoid::truncated_free(3), &SizeBudget::default())
            .err()
            .unwrap();
        assert!(err.is_budget());
        let w = Widehat::unchecked(DiscreteMonoid::truncated_free(3));
        assert_eq!(w.hom(&[1, 2], &3).unwrap().len(), 1);
        assert!(w.hom(&[2, 2], &3).unwrap_err().is_budget());
    }

    #[test]
    fn non_commutative_monoid_is_rejected() {
        // {0, a, b} with a·b = a, b·a = b: a left-zero style semigroup plus unit
        let t = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]];
        assert!(Monoid::new("lz", &["0", "a", "b"], t).is_err());
    }
}
