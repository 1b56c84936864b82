//! Checker suites per kind of structure, shared by the registry and the CLI.

use std::str::FromStr;

use crate::budget::{Caps, SizeBudget};
use crate::category::{check_category_axioms, Category};
use crate::closed::{
    check_cc_axioms, check_cf_axioms, check_ek_axioms, check_gamma_iso, ek_normalize, verify_derived_cc_theorems,
    ClosedCategory, FinSet, IdClosed,
};
use crate::closed_multi::{check_closedness, check_unit_object, verify_closing_lemmas, verify_internal_lemmas};
use crate::closed_multi::{ClosedMulti, UnitWitness};
use crate::correspondence::{
    check_2cell_bijectivity, check_injectivity, roundtrip_closed_functor, roundtrip_multifunctor,
    verify_essential_surjectivity, verify_underlying_closed, UFunctor, Underlying,
};
use crate::enriched::{build_underlying_v_category, check_l_functorial, check_vc_axioms, compare_e_pushforward_with_w};
use crate::error::{Error, Result};
use crate::multicat::{check_multicategory_axioms, IdMulti, IdMultiNat, MultiFunctor, Multicategory};
use crate::report::{Item, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Theorems,
    All,
}

impl Suite {
    pub fn axioms(self) -> bool {
        matches!(self, Suite::Axioms | Suite::All)
    }
    pub fn theorems(self) -> bool {
        matches!(self, Suite::Theorems | Suite::All)
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "theorems" => Ok(Suite::Theorems),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

/// Runs a check; an error other than a budget overrun becomes a report
/// with one failed item named `check`.
pub fn guarded(subject: &str, check: &str, f: impl FnOnce() -> Result<Report>) -> Result<Report> {
    match f() {
        Ok(r) => Ok(r),
        Err(e) if e.is_budget() => Err(e),
        Err(e) => {
            let mut r = Report::new(subject);
            r.push(Item::single(check, "construction", false, e.to_string()));
            Ok(r)
        }
    }
}

fn skipped(subject: &str, check: &str, why: &str) -> Report {
    let mut r = Report::new(subject);
    r.push(Item::skipped(check, "construction", why));
    r
}

fn failing_checks(reports: &[Report]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| r.failed_checks())
        .map(String::from)
        .collect()
}

/// A theorem suite is only meaningful on a model of the axioms it assumes.
fn presupposes(subject: &str, check: &str, failing: &[String]) -> Report {
    skipped(subject, check, &format!("presupposes axioms that fail: {}", failing.join(", ")))
}

pub fn category_suite<C: Category>(c: &C, suite: Suite, budget: &SizeBudget) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    if suite.axioms() {
        out.push(check_category_axioms(c, budget)?);
    }
    Ok(out)
}

/// Optional parts of the closed-category theorem suite.
#[derive(Debug, Clone, Copy, Default)]
pub struct ClosedExtras {
    /// `ek_normalize` and the comparison with `E_* und V`.
    pub ek: bool,
    /// The representing multicategory and its recovery of V.
    pub represent: bool,
}

pub fn closed_suite<V: ClosedCategory>(
    v: &V,
    name: &str,
    suite: Suite,
    caps: &Caps,
    extras: ClosedExtras,
) -> Result<Vec<Report>> {
    let budget = &caps.budget;
    let axioms = vec![check_category_axioms(v, budget)?, check_cc_axioms(v, budget)?];
    let failing = failing_checks(&axioms);
    let mut out = Vec::new();
    if suite.axioms() {
        out.extend(axioms);
    }
    if !suite.theorems() {
        return Ok(out);
    }
    if !failing.is_empty() {
        out.push(presupposes("theorems of closed categories", "thm.construction", &failing));
        return Ok(out);
    }
    out.push(verify_derived_cc_theorems(v, budget)?);
    out.push(guarded("und V as a V-category", "enriched.construction", || {
        let mut r = check_vc_axioms(&build_underlying_v_category(v), budget)?;
        r.extend(check_l_functorial(v, budget)?);
        Ok(r)
    })?);
    if extras.ek {
        let w = ek_normalize(v, budget);
        out.push(guarded("EK normalization", "ek.construction", || {
            let mut r = check_ek_axioms(&w, budget)?;
            r.subject = "EK axioms of W".into();
            r.extend(check_gamma_iso(v, &w, budget)?);
            Ok(r)
        })?);
        out.push(guarded("E_* und V = W", "ek.construction", || {
            let sets = FinSet::new(2, *budget)?;
            compare_e_pushforward_with_w(v, &w, &sets, budget)
        })?);
    }
    if extras.represent {
        out.push(guarded("representing multicategory", "represent.construction", || {
            verify_essential_surjectivity(v, name, *caps)
        })?);
    }
    Ok(out)
}

pub fn multi_suite<M: Multicategory>(m: &M, suite: Suite, caps: &Caps) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    if suite.axioms() {
        out.push(check_multicategory_axioms(m, caps)?);
    }
    Ok(out)
}

/// Multicategory axioms, closedness and the unit; then the internal and
/// closing lemmas, the underlying closed category and the identity round
/// trip, each only where its hypotheses hold.
pub fn closed_multi_suite<M: Multicategory>(
    cm: &ClosedMulti<M>,
    unit: Option<&UnitWitness<M::Obj, M::Mor>>,
    suite: Suite,
) -> Result<Vec<Report>> {
    let caps = &cm.caps;
    let mut axioms = vec![check_multicategory_axioms(&cm.m, caps)?, check_closedness(cm)?];
    let failing = failing_checks(&axioms);
    if let Some(uw) = unit {
        axioms.push(check_unit_object(cm, uw)?);
    }
    let failing_unit = failing_checks(&axioms);
    let mut out = Vec::new();
    if suite.axioms() {
        out.extend(axioms);
    }
    if !suite.theorems() {
        return Ok(out);
    }
    if !failing.is_empty() {
        out.push(presupposes("lemmas of closed multicategories", "lemmas.construction", &failing));
        return Ok(out);
    }
    out.push(guarded("internal lemmas", "lemmas.construction", || verify_internal_lemmas(cm))?);
    out.push(guarded("closing lemmas", "closing.construction", || {
        verify_closing_lemmas(cm, cm, &IdMulti)
    })?);
    let Some(uw) = unit else {
        out.push(skipped("underlying closed category", "U.construction", "no unit object given"));
        return Ok(out);
    };
    if !failing_unit.is_empty() {
        out.push(presupposes("underlying closed category", "U.construction", &failing_unit));
        return Ok(out);
    }
    let u = Underlying::new(cm, uw.clone());
    out.push(guarded("underlying closed category", "U.construction", || {
        verify_underlying_closed(&u, &caps.budget)
    })?);
    out.push(guarded("derived theorems of und C", "U.construction", || {
        verify_derived_cc_theorems(&u, &caps.budget)
    })?);
    out.extend(roundtrip_suite(&u, &u, &IdMulti)?);
    out.push(guarded("U(lift 1) = 1", "lift.construction", || {
        roundtrip_closed_functor(&u, &u, &IdClosed(&u))
    })?);
    Ok(out)
}

/// `lift(U F) = F`, `U F` closed, `U(lift U F) = U F`, and the injectivity
/// and 2-cell checks at `F` with its identity transformation.
pub fn roundtrip_suite<M, N, F>(c: &Underlying<'_, M>, d: &Underlying<'_, N>, f: &F) -> Result<Vec<Report>>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
{
    let budget = &c.cm.caps.budget;
    let uf = UFunctor { source: c, target: d, f };
    let mut out = vec![guarded("lift(U F) = F", "lift.construction", || roundtrip_multifunctor(c, d, f))?];
    let closed = guarded("U F is a closed functor", "U.construction", || {
        let mut r = check_cf_axioms(c, d, &uf, budget)?;
        r.subject = "U F is a closed functor".into();
        Ok(r)
    })?;
    let closed_ok = closed.passed();
    out.push(closed);
    if closed_ok {
        out.push(guarded("U(lift U F) = U F", "lift.construction", || {
            roundtrip_closed_functor(c, d, &uf)
        })?);
    }
    out.push(guarded("U is injective on 1-cells", "U.construction", || {
        check_injectivity(c, d, f, f)
    })?);
    let id = IdMultiNat {
        target: &d.cm.m,
        functor: f,
    };
    out.push(guarded("U is bijective on 2-cells", "U.construction", || {
        check_2cell_bijectivity(c, d, f, f, &id)
    })?);
    Ok(out)
}
