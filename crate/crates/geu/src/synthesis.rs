//! Synthesis of GEU representations for arbitrary preference relations.
//!
//! Three constructions are provided. The per-preference construction builds
//! an act-valued domain in which each act evaluates to its own graph, so the
//! induced ordering is exactly the input preference. Its monotonic variant
//! extends the valuation order along common `⊕`-summands without relating
//! any new pairs of expected-utility values. The shared construction fixes
//! one tag-valued domain and one plausibility measure per situation; each
//! preference is interned and selected purely by the utility function.

use crate::algebra::ExpectationDomain;
use crate::decision::DecisionProblem;
use crate::error::Error;
use crate::measures::PlausibilityMeasure;
use crate::pref::PreferenceRelation;
use crate::situation::{subsets_lex, DecisionSituation, Subset};
use crate::value::{ConsId, PrefId, Value};

/// Which construction produced a synthesized problem. The wire tokens are
/// `thm1`, `corollary`, and `fixed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Canonical,
    Monotonic,
    Fixed,
}

impl Construction {
    pub fn token(self) -> &'static str {
        match self {
            Construction::Canonical => "thm1",
            Construction::Monotonic => "corollary",
            Construction::Fixed => "fixed",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        match token {
            "thm1" => Some(Construction::Canonical),
            "corollary" => Some(Construction::Monotonic),
            "fixed" => Some(Construction::Fixed),
            _ => None,
        }
    }
}

/// A decision problem synthesized to represent a given preference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesizedProblem {
    pub problem: DecisionProblem,
    pub construction: Construction,
    /// The preference the problem was built from; the induced preference of
    /// `problem` round-trips to it exactly.
    pub source: PreferenceRelation,
    /// Interned preference id, for the shared construction.
    pub pref_id: Option<PrefId>,
}

/// Builds the act-valued representation of a preference. Fails only when
/// extensionally equal acts are related differently, in which case no
/// representation exists.
pub fn canonical_representation(
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
) -> Result<SynthesizedProblem, Error> {
    build_canonical(situation, pref, false)
}

/// As [`canonical_representation`], with the valuation order extended to be
/// monotonic; the result is additive, has ⊕ identity ∅, and still
/// round-trips the preference.
pub fn monotonic_representation(
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
) -> Result<SynthesizedProblem, Error> {
    build_canonical(situation, pref, true)
}

fn build_canonical(
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
    monotonic: bool,
) -> Result<SynthesizedProblem, Error> {
    let domain = ExpectationDomain::canonical_with_preference(situation, pref, monotonic)?;
    let utility = situation
        .cons_ids()
        .map(|c| domain.canonical_utility(c).expect("canonical domain"))
        .collect();
    let problem = DecisionProblem::new(
        situation.clone(),
        domain,
        utility,
        PlausibilityMeasure::identity(situation),
    )?;
    Ok(SynthesizedProblem {
        problem,
        construction: if monotonic { Construction::Monotonic } else { Construction::Canonical },
        source: pref.clone(),
        pref_id: None,
    })
}

/// One expectation domain and one plausibility measure that work for every
/// preference on the situation. The pair depends only on the situation.
pub fn fixed_domain(situation: &DecisionSituation) -> (ExpectationDomain, PlausibilityMeasure) {
    (ExpectationDomain::tagged(situation), PlausibilityMeasure::identity(situation))
}

/// Interns a preference into a shared domain and returns the utility map
/// that selects it: `u(c) = (S x {c}, {id})`.
pub fn utility_for(
    domain: &ExpectationDomain,
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
) -> Result<(Vec<Value>, PrefId), Error> {
    let id = domain.intern_preference(situation, pref)?;
    let utility = situation
        .cons_ids()
        .map(|c| domain.tagged_utility(c, id).expect("tagged domain"))
        .collect();
    Ok((utility, id))
}

/// Assembles the shared-construction representation of a preference.
pub fn fixed_representation(
    fixed: &(ExpectationDomain, PlausibilityMeasure),
    situation: &DecisionSituation,
    pref: &PreferenceRelation,
) -> Result<SynthesizedProblem, Error> {
    let (utility, id) = utility_for(&fixed.0, situation, pref)?;
    let problem =
        DecisionProblem::new(situation.clone(), fixed.0.clone(), utility, fixed.1.clone())?;
    Ok(SynthesizedProblem {
        problem,
        construction: Construction::Fixed,
        source: pref.clone(),
        pref_id: Some(id),
    })
}

/// One side of a mixed-expression witness: `⊕_i Pl(X_i) ⊗ u(c_i)`.
pub type ExpressionFamily = Vec<(Subset, ConsId)>;

/// Outcome of the minimality comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityCheck {
    pub holds: bool,
    pub witness: Option<MinimalityWitness>,
    /// Number of expression pairs compared in the mixed implication.
    pub compared: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityWitness {
    Plausibility(Subset, Subset),
    Utility(ConsId, ConsId),
    Mixed(ExpressionFamily, ExpressionFamily),
}

/// Verifies that the act-valued representation relates only what any other
/// representation of the same preference must relate: plausibility
/// comparisons, utility comparisons, and comparisons of mixed sums
/// `⊕_i Pl(X_i) ⊗ u(c_i)` over families of at most `max_terms` pairwise
/// disjoint nonempty events each.
pub fn minimality_check(
    canon: &SynthesizedProblem,
    other: &DecisionProblem,
    max_terms: usize,
) -> Result<MinimalityCheck, Error> {
    let situation = canon.problem.situation();
    if situation != other.situation() {
        return Err(Error::NotARepresentation);
    }
    if other.induced_preference()? != canon.source {
        return Err(Error::NotARepresentation);
    }
    let n = situation.n_states();
    let canon_problem = &canon.problem;

    for x in subsets_lex(n) {
        for y in subsets_lex(n) {
            let canon_le = canon_problem
                .domain()
                .le_p(&canon_problem.plausibility().assign(x), &canon_problem.plausibility().assign(y))?;
            if canon_le {
                let other_le = other
                    .domain()
                    .le_p(&other.plausibility().assign(x), &other.plausibility().assign(y))?;
                if !other_le {
                    return Ok(MinimalityCheck {
                        holds: false,
                        witness: Some(MinimalityWitness::Plausibility(x, y)),
                        compared: 0,
                    });
                }
            }
        }
    }

    for c in situation.cons_ids() {
        for d in situation.cons_ids() {
            if canon_problem.domain().le_u(canon_problem.utility(c), canon_problem.utility(d))? {
                let other_le = other.domain().le_u(other.utility(c), other.utility(d))?;
                if !other_le {
                    return Ok(MinimalityCheck {
                        holds: false,
                        witness: Some(MinimalityWitness::Utility(c, d)),
                        compared: 0,
                    });
                }
            }
        }
    }

    let families = expression_families(situation, max_terms);
    let evaluate = |problem: &DecisionProblem, family: &ExpressionFamily| -> Result<Value, Error> {
        let terms: Vec<Value> = family
            .iter()
            .map(|(x, c)| {
                problem.domain().otimes(&problem.plausibility().assign(*x), problem.utility(*c))
            })
            .collect::<Result<_, _>>()?;
        problem.domain().fold_sum(&terms)
    };
    let canon_values: Vec<Value> =
        families.iter().map(|f| evaluate(canon_problem, f)).collect::<Result<_, _>>()?;
    let other_values: Vec<Value> =
        families.iter().map(|f| evaluate(other, f)).collect::<Result<_, _>>()?;
    let mut compared = 0;
    for (i, lhs) in families.iter().enumerate() {
        for (j, rhs) in families.iter().enumerate() {
            compared += 1;
            if canon_problem.domain().le_v(&canon_values[i], &canon_values[j])?
                && !other.domain().le_v(&other_values[i], &other_values[j])?
            {
                return Ok(MinimalityCheck {
                    holds: false,
                    witness: Some(MinimalityWitness::Mixed(lhs.clone(), rhs.clone())),
                    compared,
                });
            }
        }
    }
    Ok(MinimalityCheck { holds: true, witness: None, compared })
}

/// All families of up to `max_terms` (event, consequence) terms with
/// pairwise disjoint nonempty events, in deterministic order.
fn expression_families(situation: &DecisionSituation, max_terms: usize) -> Vec<ExpressionFamily> {
    let subsets: Vec<Subset> =
        subsets_lex(situation.n_states()).into_iter().filter(|x| !x.is_empty()).collect();
    let cons: Vec<ConsId> = situation.cons_ids().collect();
    let mut out = Vec::new();
    let mut current: ExpressionFamily = Vec::new();
    fn extend(
        subsets: &[Subset],
        cons: &[ConsId],
        from: usize,
        used: Subset,
        max_terms: usize,
        current: &mut ExpressionFamily,
        out: &mut Vec<ExpressionFamily>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == max_terms {
            return;
        }
        for (i, &x) in subsets.iter().enumerate().skip(from) {
            if !used.is_disjoint(x) {
                continue;
            }
            for &c in cons {
                current.push((x, c));
                extend(subsets, cons, i + 1, used.union(x), max_terms, current, out);
                current.pop();
            }
        }
    }
    extend(&subsets, &cons, 0, Subset::EMPTY, max_terms, &mut current, &mut out);
    out
}
