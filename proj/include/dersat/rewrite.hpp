#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dersat/ordering.hpp"
#include "dersat/term.hpp"

namespace dersat {

struct Rule {
  Term lhs, rhs;
  bool operator==(const Rule& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

int rule_compare(const Rule& a, const Rule& b);
std::string to_string(const Rule& r);

// Finite set of ground rewrite rules, kept sorted and duplicate-free.
class GroundRewriteSystem {
 public:
  GroundRewriteSystem() = default;
  explicit GroundRewriteSystem(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }
  size_t size() const { return rules_.size(); }

  // no left hand side is reducible by another rule
  bool left_reduced() const { return left_reduced_; }
  // lhs > rhs for every rule
  bool contained_in(const OrderingConfig& cfg) const;

  GroundRewriteSystem with_rule(const Rule& r) const;
  bool has_rule(const Rule& r) const;

  bool operator==(const GroundRewriteSystem& o) const { return rules_ == o.rules_; }
  bool operator!=(const GroundRewriteSystem& o) const { return !(*this == o); }

 private:
  std::vector<Rule> rules_;
  bool left_reduced_ = true;
};

std::string to_string(const GroundRewriteSystem& r);

bool is_left_reduced(const std::vector<Rule>& rules);

struct RewriteStep {
  Position pos;
  size_t rule;  // index into rules()
};

// leftmost-innermost redex, if any
std::optional<RewriteStep> find_step(const GroundRewriteSystem& r, const Term& t);
bool irreducible(const GroundRewriteSystem& r, const Term& t);

// rewrites to normal form; throws runtime_error when the step budget runs out
Term normalize(const GroundRewriteSystem& r, const Term& t,
               size_t max_steps = 100000);

struct LabeledTerm {
  Term t;
  int label;  // 0, 1 or 2
  bool operator==(const LabeledTerm& o) const {
    return label == o.label && t == o.t;
  }
};

// lexicographic: term first, then label
Cmp labeled_compare(const OrderingConfig& cfg, const LabeledTerm& a,
                    const LabeledTerm& b);

std::string to_string(const LabeledTerm& lt);
std::string to_string(const std::vector<LabeledTerm>& m);

// Labeled multiset of redexes contracted on the way to the normal form of t.
// Every redex keeps label m, except that below-top redexes are promoted to 1
// when m is 0. Requires a left-reduced system; the multiset is then
// independent of the rewrite strategy.
std::vector<LabeledTerm> rm_horn(const GroundRewriteSystem& r, const Term& t, int m);

// test hook: same multiset computed under a caller-chosen strategy
std::vector<LabeledTerm> rm_horn_with_strategy(
    const GroundRewriteSystem& r, const Term& t, int m,
    const std::function<size_t(const std::vector<RewriteStep>&)>& choose);

// all redex steps available in t (every position, every matching rule)
std::vector<RewriteStep> all_steps(const GroundRewriteSystem& r, const Term& t);

}  // namespace dersat
