#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dersat/clause.hpp"
#include "dersat/closure.hpp"
#include "dersat/ordering.hpp"
#include "dersat/rewrite.hpp"

namespace dersat {

enum class RuleTag {
  Input,
  Superposition,  // parallel form: rewrites every occurrence of the overlapped term
  EqResolution,
  EqFactoring,
  GroundSuperposition,     // overlap at a non-variable position of the clause part
  GroundSuperpositionVar,  // rewrite inside the substitution, at or below a variable
  GroundEqResolution,
  GroundEqFactoring,
  Der,
  Demodulation,
  CondRewrite,
  Subsumption,
  Tautology,
  Condense,
  Oracle,  // scripted deletion injected by an experiment, not a proof rule
};

std::string to_string(RuleTag tag);

// One generated inference. Binary rules list the rewriting premise first;
// 'acting' holds the rewritten or resolved occurrences in the last premise.
struct Inference {
  RuleTag tag;
  std::vector<Clause> premises;
  Clause conclusion;
  Substitution unifier;
  std::vector<ClausePosition> acting;
};

// Premises must not share variables; throws invalid_argument otherwise.
// guard_always tightens the ordering guard to fire even when every rewritten
// occurrence sits at the top of a positive literal.
std::vector<Inference> superposition(const OrderingConfig& cfg,
                                     const Clause& left, const Clause& right,
                                     bool guard_always = false);
std::vector<Inference> eq_resolution(const OrderingConfig& cfg, const Clause& c);
std::vector<Inference> eq_factoring(const OrderingConfig& cfg, const Clause& c);

// Ground-closure inference. Binary rules require variable-disjoint clause
// parts; the two substitutions are then merged into one.
struct GroundInference {
  RuleTag tag;
  std::vector<GroundClosure> premises;
  GroundClosure conclusion;
  Substitution unifier;
  std::optional<Rule> rewrite_rule;  // instance-level rule of a rewrite step
};

std::vector<GroundInference> ground_superposition(const OrderingConfig& cfg,
                                                  const GroundClosure& left,
                                                  const GroundClosure& right);
std::vector<GroundInference> ground_superposition_var(const OrderingConfig& cfg,
                                                      const GroundClosure& left,
                                                      const GroundClosure& right);
std::vector<GroundInference> ground_eq_resolution(const OrderingConfig& cfg,
                                                  const GroundClosure& c);
std::vector<GroundInference> ground_eq_factoring(const OrderingConfig& cfg,
                                                 const GroundClosure& c);

}  // namespace dersat
