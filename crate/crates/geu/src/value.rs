//! Carrier values for expectation domains.
//!
//! Every quantity that flows through evaluation — utilities, plausibilities
//! and valuations — is a [`Value`]. The union is closed: exact rationals,
//! rational pairs, state subsets, subsets of state-consequence pairs, tagged
//! pair sets, and symbols of explicit finite carriers. Equality is structural
//! and decidable for every variant, which is what makes order and law checks
//! exact; there is no floating point anywhere.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Index of a state in its situation's declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub u32);

/// Index of a consequence in its situation's declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConsId(pub u32);

/// Id of a preference relation interned into a shared-domain registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrefId(pub u32);

/// A set of (state, consequence) pairs; acts are exactly the total ones.
pub type PairSet = BTreeSet<(StateId, ConsId)>;

/// An element of some expectation-domain carrier.
///
/// The derived `Ord` is a canonical structural order used for deterministic
/// iteration and deduplication only; domain orders are separate relations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Value {
    /// Exact rational, always in lowest terms with positive denominator.
    Rational(BigRational),
    /// Pair of exact rationals (componentwise carriers).
    RationalPair(BigRational, BigRational),
    /// Subset of the state set.
    StateSet(BTreeSet<StateId>),
    /// Subset of state-consequence pairs.
    PairSet(PairSet),
    /// Pair set together with a set of interned preference-relation ids.
    Tagged(PairSet, BTreeSet<PrefId>),
    /// Interned symbol of an explicit finite carrier.
    TableElem(String),
}

impl Value {
    /// Rational from an integer.
    pub fn int(n: i64) -> Self {
        Value::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Rational `num/den`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Value::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Rational pair from two integer fractions.
    pub fn ratio_pair(n1: i64, d1: i64, n2: i64, d2: i64) -> Self {
        Value::RationalPair(
            BigRational::new(BigInt::from(n1), BigInt::from(d1)),
            BigRational::new(BigInt::from(n2), BigInt::from(d2)),
        )
    }

    /// State subset from raw indices.
    pub fn state_set<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        Value::StateSet(ids.into_iter().map(StateId).collect())
    }

    /// Pair set from raw (state, consequence) index pairs.
    pub fn pair_set<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        Value::PairSet(pairs.into_iter().map(|(s, c)| (StateId(s), ConsId(c))).collect())
    }

    /// Short name of the variant, for diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Rational(_) => "rational",
            Value::RationalPair(..) => "rational-pair",
            Value::StateSet(_) => "state-set",
            Value::PairSet(_) => "pair-set",
            Value::Tagged(..) => "tagged",
            Value::TableElem(_) => "table-symbol",
        }
    }

    pub fn as_rational(&self) -> Result<&BigRational, Error> {
        match self {
            Value::Rational(r) => Ok(r),
            _ => Err(Error::carrier_mismatch("rational", self)),
        }
    }

    pub fn as_rational_pair(&self) -> Result<(&BigRational, &BigRational), Error> {
        match self {
            Value::RationalPair(a, b) => Ok((a, b)),
            _ => Err(Error::carrier_mismatch("rational-pair", self)),
        }
    }

    pub fn as_state_set(&self) -> Result<&BTreeSet<StateId>, Error> {
        match self {
            Value::StateSet(x) => Ok(x),
            _ => Err(Error::carrier_mismatch("state-set", self)),
        }
    }

    pub fn as_pair_set(&self) -> Result<&PairSet, Error> {
        match self {
            Value::PairSet(x) => Ok(x),
            _ => Err(Error::carrier_mismatch("pair-set", self)),
        }
    }

    pub fn as_tagged(&self) -> Result<(&PairSet, &BTreeSet<PrefId>), Error> {
        match self {
            Value::Tagged(x, t) => Ok((x, t)),
            _ => Err(Error::carrier_mismatch("tagged", self)),
        }
    }

    pub fn as_symbol(&self) -> Result<&str, Error> {
        match self {
            Value::TableElem(s) => Ok(s),
            _ => Err(Error::carrier_mismatch("table-symbol", self)),
        }
    }
}

/// Parses "p/q" or an integer string into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let text = text.trim();
    let bad = || Error::BadRational(text.to_string());
    if let Some((num, den)) = text.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = BigInt::from_str(text).map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

/// True iff `r` lies in the closed unit interval.
pub fn in_unit_interval(r: &BigRational) -> bool {
    !r.is_negative() && *r <= BigRational::one()
}

/// Renders a value with state/consequence names resolved.
///
/// Rationals render as `p/q` or plain integers; subsets as sorted id lists
/// in braces; tagged values as `(pairs, {#id, ...})`.
pub struct ValueDisplay<'a> {
    pub value: &'a Value,
    pub states: &'a [String],
    pub consequences: &'a [String],
}

impl fmt::Display for ValueDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn pairs(
            f: &mut fmt::Formatter<'_>,
            x: &PairSet,
            states: &[String],
            cons: &[String],
        ) -> fmt::Result {
            write!(f, "{{")?;
            for (i, (s, c)) in x.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "({}, {})", states[s.0 as usize], cons[c.0 as usize])?;
            }
            write!(f, "}}")
        }
        match self.value {
            Value::Rational(r) => write!(f, "{r}"),
            Value::RationalPair(a, b) => write!(f, "({a}, {b})"),
            Value::StateSet(x) => {
                write!(f, "{{")?;
                for (i, s) in x.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", self.states[s.0 as usize])?;
                }
                write!(f, "}}")
            }
            Value::PairSet(x) => pairs(f, x, self.states, self.consequences),
            Value::Tagged(x, tags) => {
                write!(f, "(")?;
                pairs(f, x, self.states, self.consequences)?;
                write!(f, ", {{")?;
                for (i, t) in tags.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "#{}", t.0)?;
                }
                write!(f, "}})")
            }
            Value::TableElem(s) => write!(f, "{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalize_to_lowest_terms() {
        assert_eq!(Value::ratio(2, 4), Value::ratio(1, 2));
        assert_eq!(Value::ratio(3, -6), Value::ratio(-1, 2));
    }

    #[test]
    fn parse_accepts_fractions_and_integers() {
        assert_eq!(parse_rational("3/10").unwrap(), *Value::ratio(3, 10).as_rational().unwrap());
        assert_eq!(parse_rational("-4").unwrap(), *Value::int(-4).as_rational().unwrap());
        assert_eq!(parse_rational("6/4").unwrap(), *Value::ratio(3, 2).as_rational().unwrap());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn structural_equality_is_exact() {
        let a = Value::pair_set([(0, 1), (1, 0)]);
        let b = Value::pair_set([(1, 0), (0, 1)]);
        assert_eq!(a, b);
        assert_ne!(a, Value::pair_set([(0, 1)]));
    }
}
