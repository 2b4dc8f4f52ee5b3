//! Expectation domains given by explicit finite operation tables.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::relation::{Relation, RelationKind};
use crate::value::Value;

/// Parsed table-domain description, as consumed from a problem document.
/// Orders are pair lists over the carriers; the reflexive diagonal is
/// implied. Law checking is deferred to domain validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub utility_carrier: Vec<String>,
    pub plaus_carrier: Vec<String>,
    pub valuation_carrier: Vec<String>,
    pub bottom: String,
    pub top: String,
    pub oplus: BTreeMap<(String, String), String>,
    pub otimes: BTreeMap<(String, String), String>,
    pub utility_order: Vec<(String, String)>,
    pub plaus_order: Vec<(String, String)>,
    pub valuation_order: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct TableDomain {
    u: Vec<String>,
    p: Vec<String>,
    v: Vec<String>,
    bottom: u32,
    top: u32,
    oplus: Vec<u32>,  // v * |v| + v -> v
    otimes: Vec<u32>, // p * |u| + u -> v
    /// Explicit order relations over the carriers, reflexively closed. The
    /// plausibility order's partial-orderhood is a law checked by domain
    /// validation, so no structural claim is made here.
    u_order: Relation<Value>,
    p_order: Relation<Value>,
    v_order: Relation<Value>,
    identity: Option<u32>,
}

fn index_of(carrier: &[String], sym: &str, what: &'static str) -> Result<u32, Error> {
    carrier
        .iter()
        .position(|s| s == sym)
        .map(|i| i as u32)
        .ok_or_else(|| Error::OutsideCarrier(sym.to_string(), what))
}

fn unique(carrier: &[String], what: &'static str) -> Result<(), Error> {
    let mut seen = BTreeSet::new();
    for s in carrier {
        if !seen.insert(s) {
            return Err(Error::DuplicateId { what, id: s.clone() });
        }
    }
    if carrier.is_empty() {
        return Err(Error::EmptySituationPart("table carrier must be nonempty"));
    }
    Ok(())
}

impl TableDomain {
    pub fn new(spec: &TableSpec) -> Result<Self, Error> {
        unique(&spec.utility_carrier, "utility symbol")?;
        unique(&spec.plaus_carrier, "plausibility symbol")?;
        unique(&spec.valuation_carrier, "valuation symbol")?;
        // The utility carrier must embed in the valuation carrier.
        for u in &spec.utility_carrier {
            if !spec.valuation_carrier.contains(u) {
                return Err(Error::TableNotClosed(format!(
                    "utility symbol {u:?} is missing from the valuation carrier"
                )));
            }
        }
        let bottom = index_of(&spec.plaus_carrier, &spec.bottom, "plausibility")?;
        let top = index_of(&spec.plaus_carrier, &spec.top, "plausibility")?;
        let nv = spec.valuation_carrier.len();
        let nu = spec.utility_carrier.len();
        let np = spec.plaus_carrier.len();
        let mut oplus = vec![u32::MAX; nv * nv];
        for ((x, y), z) in &spec.oplus {
            let ix = index_of(&spec.valuation_carrier, x, "valuation")?;
            let iy = index_of(&spec.valuation_carrier, y, "valuation")?;
            let iz = spec.valuation_carrier.iter().position(|s| s == z).ok_or_else(|| {
                Error::TableNotClosed(format!("{x} ⊕ {y} = {z:?} is outside the valuation carrier"))
            })?;
            oplus[ix as usize * nv + iy as usize] = iz as u32;
        }
        for x in 0..nv {
            for y in 0..nv {
                if oplus[x * nv + y] == u32::MAX {
                    return Err(Error::TableIncomplete(format!(
                        "{} ⊕ {}",
                        spec.valuation_carrier[x], spec.valuation_carrier[y]
                    )));
                }
            }
        }
        let mut otimes = vec![u32::MAX; np * nu];
        for ((x, y), z) in &spec.otimes {
            let ix = index_of(&spec.plaus_carrier, x, "plausibility")?;
            let iy = index_of(&spec.utility_carrier, y, "utility")?;
            let iz = spec.valuation_carrier.iter().position(|s| s == z).ok_or_else(|| {
                Error::TableNotClosed(format!("{x} ⊗ {y} = {z:?} is outside the valuation carrier"))
            })?;
            otimes[ix as usize * nu + iy as usize] = iz as u32;
        }
        for x in 0..np {
            for y in 0..nu {
                if otimes[x * nu + y] == u32::MAX {
                    return Err(Error::TableIncomplete(format!(
                        "{} ⊗ {}",
                        spec.plaus_carrier[x], spec.utility_carrier[y]
                    )));
                }
            }
        }
        let order = |pairs: &[(String, String)],
                     carrier: &[String],
                     what: &'static str|
         -> Result<Relation<Value>, Error> {
            for (a, b) in pairs {
                index_of(carrier, a, what)?;
                index_of(carrier, b, what)?;
            }
            let elems: Vec<Value> = carrier.iter().cloned().map(Value::TableElem).collect();
            Relation::new(
                elems,
                pairs
                    .iter()
                    .map(|(a, b)| (Value::TableElem(a.clone()), Value::TableElem(b.clone()))),
                RelationKind::Reflexive,
            )
            .map_err(|v| Error::OutsideCarrier(format!("{v:?}"), what))
        };
        let mut dom = TableDomain {
            u: spec.utility_carrier.clone(),
            p: spec.plaus_carrier.clone(),
            v: spec.valuation_carrier.clone(),
            bottom,
            top,
            oplus,
            otimes,
            u_order: order(&spec.utility_order, &spec.utility_carrier, "utility")?,
            p_order: order(&spec.plaus_order, &spec.plaus_carrier, "plausibility")?,
            v_order: order(&spec.valuation_order, &spec.valuation_carrier, "valuation")?,
            identity: None,
        };
        dom.identity = dom.find_identity();
        Ok(dom)
    }

    /// The identity element, when `(⊥ ⊗ u) ⊕ x = x` holds uniformly.
    fn find_identity(&self) -> Option<u32> {
        let nu = self.u.len();
        let nv = self.v.len();
        let e = self.otimes[self.bottom as usize * nu];
        for u in 0..nu {
            if self.otimes[self.bottom as usize * nu + u] != e {
                return None;
            }
        }
        for x in 0..nv {
            if self.oplus[e as usize * nv + x] != x as u32 {
                return None;
            }
        }
        Some(e)
    }

    pub fn spec(&self) -> TableSpec {
        let nv = self.v.len();
        let nu = self.u.len();
        let mut oplus = BTreeMap::new();
        for x in 0..nv {
            for y in 0..nv {
                oplus.insert(
                    (self.v[x].clone(), self.v[y].clone()),
                    self.v[self.oplus[x * nv + y] as usize].clone(),
                );
            }
        }
        let mut otimes = BTreeMap::new();
        for x in 0..self.p.len() {
            for y in 0..nu {
                otimes.insert(
                    (self.p[x].clone(), self.u[y].clone()),
                    self.v[self.otimes[x * nu + y] as usize].clone(),
                );
            }
        }
        let order = |rel: &Relation<Value>| {
            rel.pairs()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| {
                    (
                        a.as_symbol().expect("table carrier").to_string(),
                        b.as_symbol().expect("table carrier").to_string(),
                    )
                })
                .collect()
        };
        TableSpec {
            utility_carrier: self.u.clone(),
            plaus_carrier: self.p.clone(),
            valuation_carrier: self.v.clone(),
            bottom: self.p[self.bottom as usize].clone(),
            top: self.p[self.top as usize].clone(),
            oplus,
            otimes,
            utility_order: order(&self.u_order),
            plaus_order: order(&self.p_order),
            valuation_order: order(&self.v_order),
        }
    }

    pub fn bottom(&self) -> Value {
        Value::TableElem(self.p[self.bottom as usize].clone())
    }

    pub fn top(&self) -> Value {
        Value::TableElem(self.p[self.top as usize].clone())
    }

    pub fn identity(&self) -> Option<Value> {
        self.identity.map(|e| Value::TableElem(self.v[e as usize].clone()))
    }

    fn uid(&self, x: &Value) -> Result<u32, Error> {
        index_of(&self.u, x.as_symbol()?, "utility")
    }

    fn pid(&self, x: &Value) -> Result<u32, Error> {
        index_of(&self.p, x.as_symbol()?, "plausibility")
    }

    fn vid(&self, x: &Value) -> Result<u32, Error> {
        index_of(&self.v, x.as_symbol()?, "valuation")
    }

    pub fn le_u(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        self.u_order
            .le(x, y)
            .ok_or_else(|| Error::OutsideCarrier(format!("{x:?} or {y:?}"), "utility"))
    }

    pub fn le_p(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        self.p_order
            .le(x, y)
            .ok_or_else(|| Error::OutsideCarrier(format!("{x:?} or {y:?}"), "plausibility"))
    }

    pub fn le_v(&self, x: &Value, y: &Value) -> Result<bool, Error> {
        self.v_order
            .le(x, y)
            .ok_or_else(|| Error::OutsideCarrier(format!("{x:?} or {y:?}"), "valuation"))
    }

    pub fn oplus(&self, x: &Value, y: &Value) -> Result<Value, Error> {
        let r = self.oplus[self.vid(x)? as usize * self.v.len() + self.vid(y)? as usize];
        Ok(Value::TableElem(self.v[r as usize].clone()))
    }

    pub fn otimes(&self, p: &Value, u: &Value) -> Result<Value, Error> {
        let r = self.otimes[self.pid(p)? as usize * self.u.len() + self.uid(u)? as usize];
        Ok(Value::TableElem(self.v[r as usize].clone()))
    }

    /// Membership of a valuation value in the embedded utility carrier.
    pub fn unembed(&self, v: &Value) -> Option<Value> {
        let sym = v.as_symbol().ok()?;
        self.u.contains(&sym.to_string()).then(|| v.clone())
    }

    pub fn u_carrier(&self) -> Vec<Value> {
        self.u.iter().cloned().map(Value::TableElem).collect()
    }

    pub fn p_carrier(&self) -> Vec<Value> {
        self.p.iter().cloned().map(Value::TableElem).collect()
    }

    pub fn v_carrier(&self) -> Vec<Value> {
        self.v.iter().cloned().map(Value::TableElem).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two-element boolean-like algebra: ⊕ = or, ⊗ = and.
    pub(crate) fn bool_spec() -> TableSpec {
        let syms = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let mut oplus = BTreeMap::new();
        let mut otimes = BTreeMap::new();
        for x in ["0", "1"] {
            for y in ["0", "1"] {
                let or = if x == "1" || y == "1" { "1" } else { "0" };
                let and = if x == "1" && y == "1" { "1" } else { "0" };
                oplus.insert((x.to_string(), y.to_string()), or.to_string());
                otimes.insert((x.to_string(), y.to_string()), and.to_string());
            }
        }
        TableSpec {
            utility_carrier: syms(&["0", "1"]),
            plaus_carrier: syms(&["0", "1"]),
            valuation_carrier: syms(&["0", "1"]),
            bottom: "0".into(),
            top: "1".into(),
            oplus,
            otimes,
            utility_order: vec![("0".into(), "1".into())],
            plaus_order: vec![("0".into(), "1".into())],
            valuation_order: vec![("0".into(), "1".into())],
        }
    }

    #[test]
    fn boolean_table_round_trips() {
        let dom = TableDomain::new(&bool_spec()).unwrap();
        assert_eq!(dom.identity(), Some(Value::TableElem("0".into())));
        let one = Value::TableElem("1".into());
        let zero = Value::TableElem("0".into());
        assert_eq!(dom.otimes(&one, &zero).unwrap(), zero);
        assert!(dom.le_v(&zero, &one).unwrap());
        assert!(!dom.le_v(&one, &zero).unwrap());
        assert_eq!(TableDomain::new(&dom.spec()).unwrap(), dom);
    }

    #[test]
    fn missing_entries_are_rejected() {
        let mut spec = bool_spec();
        spec.oplus.remove(&("0".to_string(), "1".to_string()));
        assert!(matches!(TableDomain::new(&spec), Err(Error::TableIncomplete(_))));
    }

    #[test]
    fn non_closed_tables_are_rejected() {
        let mut spec = bool_spec();
        spec.oplus.insert(("0".into(), "1".into()), "2".into());
        assert!(matches!(TableDomain::new(&spec), Err(Error::TableNotClosed(_))));
    }
}
