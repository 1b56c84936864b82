use super::{eq_mor, show_objs, ClosedMulti};
use crate::error::Result;
use crate::multicat::{identities, signatures, ComposedMulti, MultiFunctor, MultiNat, Multicategory};
use crate::report::{Check, Report};

fn map_objs<M: Multicategory, N: Multicategory, F: MultiFunctor<M, N>>(f: &F, xs: &[M::Obj]) -> Result<Vec<N::Obj>> {
    xs.iter().map(|x| f.obj(x)).collect()
}

/// `und F_{Xs;Z}: F und(Xs;Z) -> und(FXs;FZ)`, the curried image of `ev`.
pub fn closing<M, N, F>(c: &ClosedMulti<M>, d: &ClosedMulti<N>, f: &F, xs: &[M::Obj], z: &M::Obj) -> Result<N::Mor>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
{
    d.curry(xs.len(), &f.mor(&c.ev_n(xs, z)?)?)
}

/// The defining triangle of `und F`, its compatibility with `φ`, and `und F`
/// as a functor of internal categories.
pub fn verify_closing_lemmas<M, N, F>(c: &ClosedMulti<M>, d: &ClosedMulti<N>, f: &F) -> Result<Report>
where
    M: Multicategory,
    N: Multicategory,
    F: MultiFunctor<M, N>,
{
    let (cm, dm) = (&c.m, &d.m);
    let caps = &c.caps;
    let objs = caps.budget.objects(cm.objects()?)?;
    let mut report = Report::new(format!("closing transformation lemmas: {}", cm.name()));

    let mut tri = Check::new("closing.triangle", "(1, und F)·ev = F ev");
    let mut sq = Check::new("closing.phi-square", "F φ(g) = φ(Fg·und F)");
    for n in 1..=caps.arity {
        for xs in signatures(&objs, n) {
            for z in &objs {
                let locus = || format!("Xs=({}), Z={}", show_objs(cm, &xs), cm.show_obj(z));
                if n < caps.arity {
                    let r = (|| {
                        let fxs = map_objs(f, &xs)?;
                        let mut args = identities(dm, &fxs)?;
                        args.push(closing(c, d, f, &xs, z)?);
                        let lhs = dm.compose(&args, &d.ev_n(&fxs, &f.obj(z)?)?)?;
                        dm.mor_eq(&lhs, &f.mor(&c.ev_n(&xs, z)?)?)
                    })();
                    tri.record_result(r, locus)?;
                }
                for k in 0..=caps.arity - n {
                    for ys in signatures(&objs, k) {
                        let r = (|| {
                            let h = c.hom_obj_n(&xs, z)?;
                            let fxs = map_objs(f, &xs)?;
                            let fz = f.obj(z)?;
                            let und = closing(c, d, f, &xs, z)?;
                            for g in caps.budget.hom(cm.hom(&ys, &h)?)? {
                                let lhs = f.mor(&c.phi(&xs, z, &g)?)?;
                                let rhs = d.phi(&fxs, &fz, &dm.compose(&[f.mor(&g)?], &und)?)?;
                                if !dm.mor_eq(&lhs, &rhs)? {
                                    return Ok(false);
                                }
                            }
                            Ok(true)
                        })();
                        sq.record_result(r, || format!("{}, Ys=({})", locus(), show_objs(cm, &ys)))?;
                    }
                }
            }
        }
    }
    report.push(tri.finish());
    report.push(sq.finish());

    let mut ids = Check::new("closing.identities", "und F preserves identities");
    let mut comp = Check::new("closing.composition", "und F preserves composition");
    for x in &objs {
        let r = eq_mor(
            dm,
            (|| dm.compose(&[f.mor(&c.unit_hom(x)?)?], &closing(c, d, f, std::slice::from_ref(x), x)?))(),
            (|| d.unit_hom(&f.obj(x)?))(),
        );
        ids.record_result(r, || cm.show_obj(x))?;
        for y in &objs {
            for z in &objs {
                let r = eq_mor(
                    dm,
                    (|| {
                        let und = closing(c, d, f, std::slice::from_ref(x), z)?;
                        dm.compose(&[f.mor(&c.mu(x, y, z)?)?], &und)
                    })(),
                    (|| {
                        let a = closing(c, d, f, std::slice::from_ref(x), y)?;
                        let b = closing(c, d, f, std::slice::from_ref(y), z)?;
                        dm.compose(&[a, b], &d.mu(&f.obj(x)?, &f.obj(y)?, &f.obj(z)?)?)
                    })(),
                );
                comp.record_result(r, || {
                    format!("X={}, Y={}, Z={}", cm.show_obj(x), cm.show_obj(y), cm.show_obj(z))
                })?;
            }
        }
    }
    report.push(ids.finish());
    report.push(comp.finish());
    Ok(report)
}

/// `und(G∘F) = G(und F) · und G` at every signature within the cap.
pub fn check_closing_composite<A, B, E, F, G>(
    a: &ClosedMulti<A>,
    b: &ClosedMulti<B>,
    e: &ClosedMulti<E>,
    f: &F,
    g: &G,
) -> Result<Report>
where
    A: Multicategory,
    B: Multicategory,
    E: Multicategory,
    F: MultiFunctor<A, B>,
    G: MultiFunctor<B, E>,
{
    let caps = &a.caps;
    let objs = caps.budget.objects(a.m.objects()?)?;
    let gf = ComposedMulti {
        mid: &b.m,
        first: f,
        second: g,
    };
    let mut report = Report::new("closing transformation of a composite");
    let mut check = Check::new("closing.composite", "und(G∘F) = G(und F)·und G");
    for n in 1..caps.arity {
        for xs in signatures(&objs, n) {
            for z in &objs {
                let r = eq_mor(
                    &e.m,
                    closing(a, e, &gf, &xs, z),
                    (|| {
                        let inner = g.mor(&closing(a, b, f, &xs, z)?)?;
                        let outer = closing(b, e, g, &map_objs(f, &xs)?, &f.obj(z)?)?;
                        e.m.compose(&[inner], &outer)
                    })(),
                );
                check.record_result(r, || format!("Xs=({}), Z={}", show_objs(&a.m, &xs), a.m.show_obj(z)))?;
            }
        }
    }
    report.push(check.finish());
    Ok(report)
}

/// The hexagon relating `und F`, `und G` and a multinatural `r: F -> G`:
/// `r_{und(X;Y)}·und G·und(r_X;GY) = und F·und(FX;r_Y)`.
pub fn verify_closing_multinat<M, N, F, G, R>(
    c: &ClosedMulti<M>,
    d: &ClosedMulti<N>,
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
    let (cm, dm) = (&c.m, &d.m);
    let objs = c.caps.budget.objects(cm.objects()?)?;
    let mut report = Report::new("closing transformations of a multinatural transformation");
    let mut hex = Check::new("closing.multinatural-hexagon", "r_und·und G·und(r_X;1) = und F·und(1;r_Y)");
    for x in &objs {
        for y in &objs {
            let res = eq_mor(
                dm,
                (|| {
                    let h = c.hom_obj(x, y)?;
                    let und_g = closing(c, d, g, std::slice::from_ref(x), y)?;
                    let step = dm.compose(&[r.component(&h)?], &und_g)?;
                    dm.compose(&[step], &d.hom_pre(&[r.component(x)?], &g.obj(y)?)?)
                })(),
                (|| {
                    let und_f = closing(c, d, f, std::slice::from_ref(x), y)?;
                    dm.compose(&[und_f], &d.hom_post(&[f.obj(x)?], &r.component(y)?)?)
                })(),
            );
            hex.record_result(res, || format!("X={}, Y={}", cm.show_obj(x), cm.show_obj(y)))?;
        }
    }
    report.push(hex.finish());
    Ok(report)
}
