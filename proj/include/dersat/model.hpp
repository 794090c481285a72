#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dersat/clause.hpp"
#include "dersat/closure.hpp"
#include "dersat/ordering.hpp"
#include "dersat/rewrite.hpp"
#include "dersat/term.hpp"

namespace dersat {

// One rule of the candidate system together with the closure that produced
// it. lit indexes the producing literal inside the closure's clause.
struct Production {
  Rule rule;
  GroundClosure producer;
  size_t lit = 0;
};

// The candidate system assembled by induction over the term ordering. At
// each candidate left side at most one rule is added; the log keeps the
// productions in ascending order of their left sides.
struct CandidateInterpretation {
  GroundRewriteSystem rstar;
  std::vector<Production> log;

  // the rule with left side s, if one was produced
  std::optional<Rule> rule_at(const Term& s) const;
  // the stage system: all produced rules with left side smaller than s
  GroundRewriteSystem below(const OrderingConfig& cfg, const Term& s) const;
};

// Builds the candidate system for a finite set of ground closures. Candidate
// left sides are the larger sides of positive instance literals, visited in
// ascending order; at each of them the smallest closure in the stage
// normalization ordering that satisfies the productivity conditions of the
// chosen variant contributes its oriented rule.
CandidateInterpretation construct_rstar(const OrderingConfig& cfg,
                                        const std::vector<GroundClosure>& n,
                                        ClosureVariant variant);

// Truth of a closure set under a convergent system. On failure carries the
// false closure that is smallest in the normalization ordering of r.
struct ModelCheck {
  bool holds = true;
  std::optional<GroundClosure> failing;
};

ModelCheck check_model(const OrderingConfig& cfg, const GroundRewriteSystem& r,
                       const std::vector<GroundClosure>& n,
                       ClosureVariant variant);

}  // namespace dersat
