#include "dersat/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace dersat {

int rule_compare(const Rule& a, const Rule& b) {
  if (int c = syntactic_compare(a.lhs, b.lhs)) return c;
  return syntactic_compare(a.rhs, b.rhs);
}

std::string to_string(const Rule& r) {
  return to_string(r.lhs) + " -> " + to_string(r.rhs);
}

GroundRewriteSystem::GroundRewriteSystem(std::vector<Rule> rules)
    : rules_(std::move(rules)) {
  for (const Rule& r : rules_)
    if (!r.lhs.ground() || !r.rhs.ground())
      throw std::invalid_argument("rewrite rule is not ground: " + to_string(r));
  std::sort(rules_.begin(), rules_.end(),
            [](const Rule& a, const Rule& b) { return rule_compare(a, b) < 0; });
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  left_reduced_ = is_left_reduced(rules_);
}

bool GroundRewriteSystem::contained_in(const OrderingConfig& cfg) const {
  for (const Rule& r : rules_)
    if (term_compare(cfg, r.lhs, r.rhs) != Cmp::Greater) return false;
  return true;
}

GroundRewriteSystem GroundRewriteSystem::with_rule(const Rule& r) const {
  auto rs = rules_;
  rs.push_back(r);
  return GroundRewriteSystem(std::move(rs));
}

bool GroundRewriteSystem::has_rule(const Rule& r) const {
  return std::find(rules_.begin(), rules_.end(), r) != rules_.end();
}

std::string to_string(const GroundRewriteSystem& r) {
  std::string out = "{";
  for (size_t i = 0; i < r.rules().size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.rules()[i]);
  }
  return out + "}";
}

bool is_left_reduced(const std::vector<Rule>& rules) {
  for (size_t i = 0; i < rules.size(); ++i)
    for (size_t j = 0; j < rules.size(); ++j) {
      if (i == j) continue;
      if (contains_subterm(rules[i].lhs, rules[j].lhs)) return false;
    }
  return true;
}

namespace {

// innermost first, arguments left to right, root last
bool find_step_rec(const GroundRewriteSystem& r, const Term& t, Position& cur,
                   RewriteStep& out) {
  if (!t.is_var()) {
    for (size_t i = 0; i < t.args().size(); ++i) {
      cur.push_back(static_cast<int>(i + 1));
      if (find_step_rec(r, t.args()[i], cur, out)) return true;
      cur.pop_back();
    }
  }
  for (size_t k = 0; k < r.rules().size(); ++k) {
    if (t == r.rules()[k].lhs) {
      out.pos = cur;
      out.rule = k;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<RewriteStep> find_step(const GroundRewriteSystem& r, const Term& t) {
  RewriteStep out;
  Position cur;
  if (find_step_rec(r, t, cur, out)) return out;
  return std::nullopt;
}

bool irreducible(const GroundRewriteSystem& r, const Term& t) {
  return !find_step(r, t).has_value();
}

Term normalize(const GroundRewriteSystem& r, const Term& t, size_t max_steps) {
  Term cur = t;
  for (size_t n = 0; n < max_steps; ++n) {
    auto step = find_step(r, cur);
    if (!step) return cur;
    cur = replace_at(cur, step->pos, r.rules()[step->rule].rhs);
  }
  throw std::runtime_error("normalize: step budget exhausted on " + to_string(t));
}

Cmp labeled_compare(const OrderingConfig& cfg, const LabeledTerm& a,
                    const LabeledTerm& b) {
  Cmp c = term_compare(cfg, a.t, b.t);
  if (c != Cmp::Equal) return c;
  if (a.label > b.label) return Cmp::Greater;
  if (a.label < b.label) return Cmp::Less;
  return Cmp::Equal;
}

std::string to_string(const LabeledTerm& lt) {
  return "(" + to_string(lt.t) + "," + std::to_string(lt.label) + ")";
}

std::string to_string(const std::vector<LabeledTerm>& m) {
  std::string out = "{";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += to_string(m[i]);
  }
  return out + "}";
}

std::vector<RewriteStep> all_steps(const GroundRewriteSystem& r, const Term& t) {
  std::vector<RewriteStep> out;
  for (size_t k = 0; k < r.rules().size(); ++k)
    for (const auto& p : term_occurrences(t, r.rules()[k].lhs))
      out.push_back(RewriteStep{p, k});
  return out;
}

std::vector<LabeledTerm> rm_horn_with_strategy(
    const GroundRewriteSystem& r, const Term& t, int m,
    const std::function<size_t(const std::vector<RewriteStep>&)>& choose) {
  if (!r.left_reduced())
    throw std::invalid_argument(
        "reduction multisets need a left-reduced system, got " + to_string(r));
  std::vector<LabeledTerm> out;
  Term cur = t;
  for (size_t n = 0;; ++n) {
    if (n > 100000)
      throw std::runtime_error("reduction multiset: step budget exhausted");
    auto steps = all_steps(r, cur);
    if (steps.empty()) return out;
    const RewriteStep& s = steps[choose(steps) % steps.size()];
    const Rule& rule = r.rules()[s.rule];
    int label = (!s.pos.empty() && m == 0) ? 1 : m;
    out.push_back(LabeledTerm{rule.lhs, label});
    cur = replace_at(cur, s.pos, rule.rhs);
  }
}

std::vector<LabeledTerm> rm_horn(const GroundRewriteSystem& r, const Term& t, int m) {
  return rm_horn_with_strategy(
      r, t, m, [](const std::vector<RewriteStep>&) { return size_t{0}; });
}

}  // namespace dersat
