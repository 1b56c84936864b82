use std::collections::HashMap;
use std::sync::Mutex;

use super::{tag, UFunctor, UNat, Underlying};
use crate::closed::{check_cn_axioms, closed_functors_equal, ClosedFunctor};
use crate::closed_multi::bar;
use crate::error::Result;
use crate::hf::Hf;
use crate::multicat::{check_multifunctor, check_multinat, multifunctors_equal, MultiFunctor, MultiNat, Multicategory};
use crate::report::{Check, Report};

type LiftKey<O> = (Vec<O>, O, Hf);

/// The multifunctor of a closed functor `Φ: und C -> und D`: nullary `f`
/// goes to `u·φ⁰·Φf̄`, and `F f` for `n >= 1` is determined by
/// `⟨F f⟩ = F⟨f⟩ · φ̂_{X1,Y}`.
pub struct Lift<'a, 'c, M: Multicategory, N: Multicategory, P> {
    pub source: &'a Underlying<'c, M>,
    pub target: &'a Underlying<'c, N>,
    pub phi: P,
    memo: Mutex<HashMap<LiftKey<M::Obj>, N::Mor>>,
}

impl<'a, 'c, M: Multicategory, N: Multicategory, P> Lift<'a, 'c, M, N, P> {
    pub fn new(source: &'a Underlying<'c, M>, target: &'a Underlying<'c, N>, phi: P) -> Self {
        Lift {
            source,
            target,
            phi,
            memo: Mutex::new(HashMap::new()),
        }
    }
}

impl<'a, 'c, M, N, P> MultiFunctor<M, N> for Lift<'a, 'c, M, N, P>
where
    M: Multicategory,
    N: Multicategory,
    P: ClosedFunctor<Underlying<'c, M>, Underlying<'c, N>>,
{
    fn obj(&self, x: &M::Obj) -> Result<N::Obj> {
        self.phi.obj(x)
    }

    fn mor(&self, f: &M::Mor) -> Result<N::Mor> {
        let (c, d) = (self.source.cm, self.target.cm);
        let xs = c.m.sources(f);
        let y = c.m.target(f);
        let key = (xs.clone(), y.clone(), c.m.mor_key(f)?);
        if let Some(g) = self.memo.lock().unwrap().get(&key) {
            return Ok(g.clone());
        }
        let out = match xs.first() {
            None => {
                let image = self.phi.mor(&bar(c, &self.source.uw, f)?)?;
                let point = d.m.compose(&[self.phi.zero()?], &image)?;
                d.m.compose(std::slice::from_ref(&self.target.uw.u), &point)?
            }
            Some(x1) => {
                let inner = self.mor(&c.bracket(f)?)?;
                let curried = d.m.compose(&[inner], &self.phi.hat(x1, &y)?)?;
                d.phi(&[self.phi.obj(x1)?], &self.phi.obj(&y)?, &curried)?
            }
        };
        self.memo.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }
}

/// `lift(U F) = F` on every morphism within the cap.
pub fn roundtrip_multifunctor<M, N, F>(c: &Underlying<'_, M>, d: &Underlying<'_, N>, f: &F) -> Result<Report>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
{
    let u = UFunctor { source: c, target: d, f };
    let lift = Lift::new(c, d, &u);
    let mut report = multifunctors_equal(&c.cm.m, &d.cm.m, &lift, f, &c.cm.caps)?;
    report.subject = format!("lift(U F) = F: {} -> {}", c.cm.m.name(), d.cm.m.name());
    Ok(report)
}

/// `lift Φ` is a multifunctor and `U(lift Φ) = Φ`.
pub fn roundtrip_closed_functor<'c, M, N, P>(
    c: &Underlying<'c, M>,
    d: &Underlying<'c, N>,
    phi: &P,
) -> Result<Report>
where
    M: Multicategory,
    N: Multicategory,
    P: ClosedFunctor<Underlying<'c, M>, Underlying<'c, N>>,
{
    let lift = Lift::new(c, d, phi);
    let mut report = Report::new(format!("U(lift Φ) = Φ: {} -> {}", c.cm.m.name(), d.cm.m.name()));
    for item in tag(check_multifunctor(&c.cm.m, &d.cm.m, &lift, &c.cm.caps)?, "lift.") {
        report.push(item);
    }
    let u = UFunctor {
        source: c,
        target: d,
        f: &lift,
    };
    let budget = &c.cm.caps.budget;
    for item in closed_functors_equal(c, d, &u, phi, budget)?.items {
        report.push(item);
    }
    Ok(report)
}

/// `U F = U G` implies `F = G`. When the images differ the implication
/// holds vacuously and the note says so.
pub fn check_injectivity<M, N, F, G>(c: &Underlying<'_, M>, d: &Underlying<'_, N>, f: &F, g: &G) -> Result<Report>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
    G: MultiFunctor<M, N>,
{
    let uf = UFunctor { source: c, target: d, f };
    let ug = UFunctor { source: c, target: d, f: g };
    let u_equal = closed_functors_equal(c, d, &uf, &ug, &c.cm.caps.budget)?.passed();
    let equal = multifunctors_equal(&c.cm.m, &d.cm.m, f, g, &c.cm.caps)?.passed();
    let mut check = Check::new("injectivity", "U F = U G implies F = G");
    check.note(format!("U-images equal: {u_equal}; multifunctors equal: {equal}"));
    check.record(!u_equal || equal, || "U F = U G but F ≠ G".into());
    let mut report = Report::new("U is injective on 1-cells");
    report.push(check.finish());
    Ok(report)
}

/// `r` is multinatural exactly when `U r` is a closed transformation.
pub fn check_2cell_bijectivity<M, N, F, G, R>(
    c: &Underlying<'_, M>,
    d: &Underlying<'_, N>,
    f: &F,
    g: &G,
    r: &R,
) -> Result<Report>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
    G: MultiFunctor<M, N>,
    R: MultiNat<M, N>,
{
    let multinat = check_multinat(&c.cm.m, &d.cm.m, f, g, r, &c.cm.caps)?.passed();
    let uf = UFunctor { source: c, target: d, f };
    let ug = UFunctor { source: c, target: d, f: g };
    let closed = check_cn_axioms(c, d, &uf, &ug, &UNat(r), &c.cm.caps.budget)?.passed();
    let mut check = Check::new("2cell.bijectivity", "r multinatural iff U r closed");
    check.note(format!("multinatural: {multinat}; closed: {closed}"));
    check.record(multinat == closed, || format!("multinatural: {multinat}, closed: {closed}"));
    let mut report = Report::new("U is bijective on 2-cells");
    report.push(check.finish());
    Ok(report)
}
