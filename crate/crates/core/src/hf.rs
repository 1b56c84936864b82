//! Hereditarily finite values.
//!
//! Sets and function tables are stored in canonical sorted form, so derived
//! structural equality coincides with extensional equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hf {
    Atom(Arc<str>),
    Tuple(Arc<[Hf]>),
    Set(Arc<BTreeSet<Hf>>),
    /// A total function on the key set.
    Fn(Arc<BTreeMap<Hf, Hf>>),
}

impl Hf {
    pub fn atom(name: &str) -> Hf {
        Hf::Atom(Arc::from(name))
    }

    pub fn tuple<I: IntoIterator<Item = Hf>>(items: I) -> Hf {
        Hf::Tuple(items.into_iter().collect::<Vec<_>>().into())
    }

    pub fn set<I: IntoIterator<Item = Hf>>(items: I) -> Hf {
        Hf::Set(Arc::new(items.into_iter().collect()))
    }

    /// Builds a function table from `(argument, value)` pairs. Repeated
    /// arguments are accepted only when they agree.
    pub fn fn_table<I: IntoIterator<Item = (Hf, Hf)>>(pairs: I) -> Result<Hf> {
        let mut map = BTreeMap::new();
        for (k, v) in pairs {
            if let Some(old) = map.get(&k) {
                if *old != v {
                    return Err(Error::Malformed(format!(
                        "function table maps {k} to both {old} and {v}"
                    )));
                }
            }
            map.insert(k, v);
        }
        Ok(Hf::Fn(Arc::new(map)))
    }

    pub fn from_map(map: BTreeMap<Hf, Hf>) -> Hf {
        Hf::Fn(Arc::new(map))
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Hf::Atom(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_set(&self) -> Option<&BTreeSet<Hf>> {
        match self {
            Hf::Set(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_fn(&self) -> Option<&BTreeMap<Hf, Hf>> {
        match self {
            Hf::Fn(m) => Some(m),
            _ => None,
        }
    }

    /// Applies a function table. `None` if `self` is not a table or `x` lies
    /// outside its domain.
    pub fn apply(&self, x: &Hf) -> Option<&Hf> {
        self.as_fn().and_then(|m| m.get(x))
    }

    /// Nesting depth; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Hf::Atom(_) => 0,
            Hf::Tuple(items) => 1 + items.iter().map(Hf::depth).max().unwrap_or(0),
            Hf::Set(s) => 1 + s.iter().map(Hf::depth).max().unwrap_or(0),
            Hf::Fn(m) => {
                1 + m
                    .iter()
                    .map(|(k, v)| k.depth().max(v.depth()))
                    .max()
                    .unwrap_or(0)
            }
        }
    }
}

/// Extensional equality.
pub fn hf_equal(a: &Hf, b: &Hf) -> bool {
    a == b
}

impl fmt::Display for Hf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hf::Atom(a) => write!(f, "{a}"),
            Hf::Tuple(items) => {
                write!(f, "(")?;
                for (n, x) in items.iter().enumerate() {
                    if n > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Hf::Set(s) => {
                write!(f, "{{")?;
                for (n, x) in s.iter().enumerate() {
                    if n > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "}}")
            }
            Hf::Fn(m) => {
                write!(f, "[")?;
                for (n, (k, v)) in m.iter().enumerate() {
                    if n > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{k}->{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Debug for Hf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Hf {
        Hf::atom(s)
    }

    #[test]
    fn atoms_compare_by_name() {
        assert!(hf_equal(&a("x"), &a("x")));
        assert!(!hf_equal(&a("x"), &a("y")));
    }

    #[test]
    fn table_order_is_irrelevant() {
        let f = Hf::fn_table([(a("0"), a("1")), (a("1"), a("0"))]).unwrap();
        let g = Hf::fn_table([(a("1"), a("0")), (a("0"), a("1"))]).unwrap();
        assert!(hf_equal(&f, &g));
    }

    #[test]
    fn tables_on_different_domains_differ() {
        let f = Hf::fn_table([(a("0"), a("1")), (a("1"), a("0"))]).unwrap();
        let g = Hf::fn_table([(a("0"), a("1"))]).unwrap();
        assert!(!hf_equal(&f, &g));
    }

    #[test]
    fn conflicting_table_is_rejected() {
        assert!(Hf::fn_table([(a("0"), a("1")), (a("0"), a("0"))]).is_err());
        assert!(Hf::fn_table([(a("0"), a("1")), (a("0"), a("1"))]).is_ok());
    }

    #[test]
    fn depth_counts_nesting() {
        assert_eq!(a("x").depth(), 0);
        assert_eq!(Hf::set([a("x")]).depth(), 1);
        let t = Hf::fn_table([(a("0"), Hf::set([a("x")]))]).unwrap();
        assert_eq!(t.depth(), 2);
        assert_eq!(Hf::set([]).depth(), 1);
    }

    #[test]
    fn display_is_readable() {
        let t = Hf::fn_table([(a("b"), a("a")), (a("a"), a("b"))]).unwrap();
        assert_eq!(t.to_string(), "[a->b, b->a]");
        assert_eq!(Hf::tuple([a("x"), Hf::set([])]).to_string(), "(x, {})");
    }
}
