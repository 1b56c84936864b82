//! Hand-built closed categories.

use crate::category::{Category, MorId, ObjId, TabularCategory};
use crate::closed::TabularClosed;
use crate::error::{Error, Result};

/// A posetal closed category: at most one morphism `a<=b` per pair, every
/// structure map the unique morphism of its type.
pub fn posetal_closed(
    name: &str,
    objects: &[&str],
    leq: impl Fn(usize, usize) -> bool,
    hom: impl Fn(usize, usize) -> usize,
    unit: usize,
) -> Result<TabularClosed> {
    let n = objects.len();
    let mut cat = TabularCategory::new(name);
    let ids: Vec<ObjId> = objects
        .iter()
        .map(|o| cat.add_object(o))
        .collect::<Result<_>>()?;
    let mut arrow = vec![vec![None; n]; n];
    for a in 0..n {
        for b in 0..n {
            if leq(a, b) {
                let m = cat.add_morphism(&format!("{}<={}", objects[a], objects[b]), ids[a], ids[b])?;
                arrow[a][b] = Some(m);
            }
        }
    }
    let get = |a: usize, b: usize| -> Result<MorId> {
        arrow[a][b].ok_or_else(|| {
            Error::Malformed(format!("{name}: {} <= {} fails", objects[a], objects[b]))
        })
    };
    for a in 0..n {
        cat.set_identity(ids[a], get(a, a)?);
        for b in 0..n {
            for c in 0..n {
                if let (Some(f), Some(g)) = (arrow[a][b], arrow[b][c]) {
                    cat.set_compose(f, g, get(a, c)?);
                }
            }
        }
    }
    let mut out = TabularClosed::new(cat, ids[unit]);
    for x in 0..n {
        let ux = hom(unit, x);
        out.set_i(ids[x], get(x, ux)?);
        out.set_i_inv(ids[x], get(ux, x)?);
        out.set_j(ids[x], get(unit, hom(x, x))?);
        for y in 0..n {
            out.set_hom_obj(ids[x], ids[y], ids[hom(x, y)]);
            for z in 0..n {
                let lhs = hom(y, z);
                let rhs = hom(hom(x, y), hom(x, z));
                out.set_l(ids[x], ids[y], ids[z], get(lhs, rhs)?);
            }
        }
    }
    // und(f,g) for f: x' <= x and g: y <= y' is und(x,y) <= und(x',y')
    for xp in 0..n {
        for x in 0..n {
            for y in 0..n {
                for yp in 0..n {
                    if let (Some(f), Some(g)) = (arrow[xp][x], arrow[y][yp]) {
                        out.set_hom_mor(f, g, get(hom(x, y), hom(xp, yp))?);
                    }
                }
            }
        }
    }
    out.validate()?;
    Ok(out)
}

/// The terminal closed category.
pub fn terminal() -> Result<TabularClosed> {
    posetal_closed("terminal", &["*"], |_, _| true, |_, _| 0, 0)
}

/// The Heyting algebra `{0 <= 1}` with implication as internal hom and unit 1.
pub fn heyting2() -> Result<TabularClosed> {
    posetal_closed(
        "heyting2",
        &["0", "1"],
        |a, b| a <= b,
        |a, b| if a <= b { 1 } else { b },
        1,
    )
}

/// A commutative monoid as a one-object closed category: `und(*,*) = *`,
/// `und(f,g) = f+g`, and `i`, `j`, `L` all the neutral element. This is the
/// underlying closed category of the monoid's multicategory with `ev = 0`.
pub fn monoid_closed(name: &str, elements: &[&str], add: &[Vec<usize>]) -> Result<TabularClosed> {
    let n = elements.len();
    for a in 0..n {
        if add[0][a] != a || add[a][0] != a {
            return Err(Error::Malformed(format!("{name}: element 0 is not neutral")));
        }
        for b in 0..n {
            if add[a][b] != add[b][a] {
                return Err(Error::Malformed(format!("{name}: not commutative")));
            }
            for c in 0..n {
                if add[add[a][b]][c] != add[a][add[b][c]] {
                    return Err(Error::Malformed(format!("{name}: not associative")));
                }
            }
        }
    }
    let mut cat = TabularCategory::new(name);
    let o = cat.add_object("*")?;
    let ms: Vec<MorId> = elements
        .iter()
        .map(|e| cat.add_morphism(e, o, o))
        .collect::<Result<_>>()?;
    cat.set_identity(o, ms[0]);
    for a in 0..n {
        for b in 0..n {
            cat.set_compose(ms[a], ms[b], ms[add[a][b]]);
        }
    }
    let mut out = TabularClosed::new(cat, o);
    out.set_hom_obj(o, o, o);
    out.set_i(o, ms[0]);
    out.set_i_inv(o, ms[0]);
    out.set_j(o, ms[0]);
    out.set_l(o, o, o, ms[0]);
    for a in 0..n {
        for b in 0..n {
            out.set_hom_mor(ms[a], ms[b], ms[add[a][b]]);
        }
    }
    out.validate()?;
    Ok(out)
}

/// Addition table of `Z/n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// `Z/2 = {e, s}` as a one-object closed category.
pub fn z2_closed() -> Result<TabularClosed> {
    monoid_closed("z2", &["e", "s"], &cyclic_table(2))
}

/// The base of the corrupted fixtures: `z2 × heyting2`, which has a
/// one-object factor to corrupt and a two-object factor to localize with.
fn corruptible() -> Result<TabularClosed> {
    TabularClosed::product(&z2_closed()?, &heyting2()?, "z2xheyting2")
}

/// `j` at `*&0` replaced by the other endomorphism of the unit.
pub fn broken_j() -> Result<TabularClosed> {
    let mut c = corruptible()?;
    c.cat.name = "broken-j".into();
    let x = c.obj("*&0")?;
    c.set_j(x, c.mor("s&1<=1")?);
    Ok(c)
}

/// `L^X_{YZ}` at `X = *&1, Y = Z = *&0` replaced by its twin.
pub fn broken_l() -> Result<TabularClosed> {
    let mut c = corruptible()?;
    c.cat.name = "broken-L".into();
    let (zero, one) = (c.obj("*&0")?, c.obj("*&1")?);
    // L: und(0,0) = 1 -> und(und(1,0), und(1,0)) = und(0,0) = 1
    c.set_l(one, zero, zero, c.mor("s&1<=1")?);
    Ok(c)
}

/// The path `A -f-> B -g-> C -h-> D` with a second morphism `q: A -> D`
/// and the composite `fg;h` mis-set to `q` instead of `fgh`. Exactly the
/// triple `(f, g, h)` violates associativity.
pub fn broken_compose() -> Result<TabularCategory> {
    let mut cat = TabularCategory::new("broken-compose");
    let objs: Vec<ObjId> = ["A", "B", "C", "D"]
        .iter()
        .map(|o| cat.add_object(o))
        .collect::<Result<_>>()?;
    let (a, b, c, d) = (objs[0], objs[1], objs[2], objs[3]);
    let ids: Vec<MorId> = ["1A", "1B", "1C", "1D"]
        .iter()
        .zip(&objs)
        .map(|(n, &o)| cat.add_morphism(n, o, o))
        .collect::<Result<_>>()?;
    for (&o, &i) in objs.iter().zip(&ids) {
        cat.set_identity(o, i);
    }
    let f = cat.add_morphism("f", a, b)?;
    let g = cat.add_morphism("g", b, c)?;
    let h = cat.add_morphism("h", c, d)?;
    let fg = cat.add_morphism("fg", a, c)?;
    let gh = cat.add_morphism("gh", b, d)?;
    let fgh = cat.add_morphism("fgh", a, d)?;
    let q = cat.add_morphism("q", a, d)?;
    let non_identity = [f, g, h, fg, gh, fgh, q];
    for &m in &non_identity {
        let (x, y) = (cat.dom(&m), cat.cod(&m));
        cat.set_compose(ids[x.0 as usize], m, m);
        cat.set_compose(m, ids[y.0 as usize], m);
    }
    for &i in &ids {
        cat.set_compose(i, i, i);
    }
    cat.set_compose(f, g, fg);
    cat.set_compose(g, h, gh);
    cat.set_compose(f, gh, fgh);
    cat.set_compose(fg, h, q);
    Ok(cat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::SizeBudget;
    use crate::category::check_category_axioms;
    use crate::closed::{check_cc_axioms, verify_derived_cc_theorems, ClosedCategory};

    fn passes(c: &TabularClosed) {
        let b = SizeBudget::default();
        let r = check_category_axioms(c, &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = check_cc_axioms(c, &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = verify_derived_cc_theorems(c, &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn positive_instances_pass() {
        passes(&terminal().unwrap());
        passes(&heyting2().unwrap());
        passes(&z2_closed().unwrap());
        passes(&corruptible().unwrap());
    }

    #[test]
    fn heyting_implication_table() {
        let h = heyting2().unwrap();
        let (z, o) = (h.obj("0").unwrap(), h.obj("1").unwrap());
        assert_eq!(h.hom_obj(&z, &o).unwrap(), o);
        assert_eq!(h.hom_obj(&o, &z).unwrap(), z);
        assert_eq!(h.hom_obj(&z, &z).unwrap(), o);
        assert_eq!(h.hom_obj(&o, &o).unwrap(), o);
        assert_eq!(h.hom(&o, &z).unwrap().len(), 0);
    }

    #[test]
    fn fixtures_fail() {
        let b = SizeBudget::default();
        let r = check_cc_axioms(&broken_j().unwrap(), &b).unwrap();
        assert_eq!(r.failed_checks(), vec!["j.dinatural", "CC1", "CC2"]);
        assert!(!r.item("CC1").unwrap().loci.is_empty());
        let r = check_cc_axioms(&broken_l().unwrap(), &b).unwrap();
        assert_eq!(
            r.failed_checks(),
            vec!["L.natural-Y", "L.natural-Z", "L.dinatural-X", "CC1", "CC3", "CC4"]
        );
        assert!(!r.item("CC3").unwrap().loci.is_empty());
        let r = check_category_axioms(&broken_compose().unwrap(), &b).unwrap();
        assert_eq!(r.failed_checks(), vec!["cat.associativity"]);
        let item = r.item("cat.associativity").unwrap();
        assert_eq!(item.failures, 1);
        assert_eq!(item.loci, vec!["f=f, g=g, h=h".to_string()]);
    }
}
