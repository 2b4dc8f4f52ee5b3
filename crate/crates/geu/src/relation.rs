//! Explicit finite relations with validated structure.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

/// What a relation claims to be. Reflexivity always holds (enforced by
/// closure at construction); stronger claims are validated on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    Reflexive,
    PartialOrder,
    TotalPreorderClaimed,
}

/// A violated structural law of a relation, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationViolation<T> {
    Antisymmetry(T, T),
    Transitivity(T, T, T),
    Totality(T, T),
}

/// A binary relation over an explicit finite carrier, closed under
/// reflexivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation<T: Ord + Clone> {
    carrier: Vec<T>,
    index: BTreeMap<T, u32>,
    pairs: BTreeSet<(u32, u32)>,
    kind: RelationKind,
}

impl<T: Ord + Clone + Debug> Relation<T> {
    /// Builds the relation; duplicate carrier elements are merged, pairs
    /// referencing elements outside the carrier are rejected by the caller
    /// via [`Relation::index_of`]. The reflexive diagonal is added.
    pub fn new(
        carrier: Vec<T>,
        pairs: impl IntoIterator<Item = (T, T)>,
        kind: RelationKind,
    ) -> Result<Self, T> {
        let mut index = BTreeMap::new();
        let mut uniq = Vec::with_capacity(carrier.len());
        for x in carrier {
            if !index.contains_key(&x) {
                index.insert(x.clone(), uniq.len() as u32);
                uniq.push(x);
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            let ia = *index.get(&a).ok_or(a)?;
            let ib = *index.get(&b).ok_or_else(|| b.clone())?;
            set.insert((ia, ib));
        }
        for i in 0..uniq.len() as u32 {
            set.insert((i, i));
        }
        Ok(Relation { carrier: uniq, index, pairs: set, kind })
    }

    pub fn kind(&self) -> RelationKind {
        self.kind
    }

    pub fn carrier(&self) -> &[T] {
        &self.carrier
    }

    pub fn index_of(&self, x: &T) -> Option<u32> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index.contains_key(x)
    }

    /// x ≾ y; `None` when either element is outside the carrier.
    pub fn le(&self, x: &T, y: &T) -> Option<bool> {
        let ix = self.index_of(x)?;
        let iy = self.index_of(y)?;
        Some(self.pairs.contains(&(ix, iy)))
    }

    pub fn le_ids(&self, x: u32, y: u32) -> bool {
        self.pairs.contains(&(x, y))
    }

    /// Related pairs as carrier elements, diagonal included.
    pub fn pairs(&self) -> impl Iterator<Item = (&T, &T)> {
        self.pairs.iter().map(|(a, b)| (&self.carrier[*a as usize], &self.carrier[*b as usize]))
    }

    /// First violation of antisymmetry or transitivity, in carrier order.
    pub fn partial_order_violation(&self) -> Option<RelationViolation<T>> {
        let n = self.carrier.len() as u32;
        for a in 0..n {
            for b in 0..n {
                if a != b && self.le_ids(a, b) && self.le_ids(b, a) {
                    return Some(RelationViolation::Antisymmetry(
                        self.carrier[a as usize].clone(),
                        self.carrier[b as usize].clone(),
                    ));
                }
            }
        }
        self.transitivity_violation()
    }

    /// First violation of transitivity, in carrier order.
    pub fn transitivity_violation(&self) -> Option<RelationViolation<T>> {
        let n = self.carrier.len() as u32;
        for a in 0..n {
            for b in 0..n {
                if !self.le_ids(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.le_ids(b, c) && !self.le_ids(a, c) {
                        return Some(RelationViolation::Transitivity(
                            self.carrier[a as usize].clone(),
                            self.carrier[b as usize].clone(),
                            self.carrier[c as usize].clone(),
                        ));
                    }
                }
            }
        }
        None
    }

    /// First pair related in neither direction, in carrier order.
    pub fn totality_violation(&self) -> Option<RelationViolation<T>> {
        let n = self.carrier.len() as u32;
        for a in 0..n {
            for b in a + 1..n {
                if !self.le_ids(a, b) && !self.le_ids(b, a) {
                    return Some(RelationViolation::Totality(
                        self.carrier[a as usize].clone(),
                        self.carrier[b as usize].clone(),
                    ));
                }
            }
        }
        None
    }

    /// True iff the relation is a total preorder (total and transitive).
    pub fn is_total_preorder(&self) -> bool {
        self.totality_violation().is_none() && self.transitivity_violation().is_none()
    }
}
