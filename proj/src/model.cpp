#include "dersat/model.hpp"

#include <algorithm>
#include <vector>

namespace dersat {

std::optional<Rule> CandidateInterpretation::rule_at(const Term& s) const {
  for (const Production& p : log)
    if (p.rule.lhs == s) return p.rule;
  return std::nullopt;
}

GroundRewriteSystem CandidateInterpretation::below(const OrderingConfig& cfg,
                                                   const Term& s) const {
  std::vector<Rule> rules;
  for (const Production& p : log)
    if (term_compare(cfg, p.rule.lhs, s) == Cmp::Less) rules.push_back(p.rule);
  return GroundRewriteSystem(std::move(rules));
}

namespace {

// s beats every other side occurrence of the instance; a second occurrence
// of s itself disqualifies it, and occurrences of s inside another side are
// impossible once all other sides are smaller
bool strictly_max_term(const OrderingConfig& cfg, const Clause& inst,
                       size_t lit, int side) {
  const Term& s = side == 0 ? inst.lits[lit].lhs : inst.lits[lit].rhs;
  for (size_t i = 0; i < inst.lits.size(); ++i) {
    for (int sd = 0; sd < 2; ++sd) {
      if (i == lit && sd == side) continue;
      const Term& other = sd == 0 ? inst.lits[i].lhs : inst.lits[i].rhs;
      if (term_compare(cfg, s, other) != Cmp::Greater) return false;
    }
  }
  return true;
}

bool strictly_max_literal(const OrderingConfig& cfg, const Clause& inst,
                          size_t lit) {
  for (size_t i = 0; i < inst.lits.size(); ++i) {
    if (i == lit) continue;
    if (literal_compare(cfg, inst.lits[lit], inst.lits[i]) != Cmp::Greater)
      return false;
  }
  return true;
}

Clause without_lit(const Clause& c, size_t lit) {
  Clause out;
  for (size_t i = 0; i < c.lits.size(); ++i)
    if (i != lit) out.lits.push_back(c.lits[i]);
  return out;
}

struct Offer {
  const GroundClosure* clo;
  size_t lit;
  Term rhs;
};

// the producing literal of clo at candidate s, under the variant's
// conditions; the stage system rs already leaves s irreducible and the
// instance false
std::optional<Offer> offer_at(const OrderingConfig& cfg,
                              const GroundRewriteSystem& rs,
                              const GroundClosure& clo, const Term& s,
                              ClosureVariant variant) {
  const Clause& inst = clo.instance;
  for (size_t i = 0; i < inst.lits.size(); ++i) {
    const Literal& l = inst.lits[i];
    if (!l.positive) continue;
    int side;
    if (l.lhs == s && term_compare(cfg, s, l.rhs) == Cmp::Greater)
      side = 0;
    else if (l.rhs == s && term_compare(cfg, s, l.lhs) == Cmp::Greater)
      side = 1;
    else
      continue;
    const Term& other = side == 0 ? l.rhs : l.lhs;
    if (variant == ClosureVariant::Horn) {
      if (!strictly_max_term(cfg, inst, i, side)) continue;
    } else {
      if (!strictly_max_literal(cfg, inst, i)) continue;
      // the rest of the instance must stay false once the rule is added
      if (clause_true_in(rs.with_rule({s, other}), without_lit(inst, i)))
        continue;
    }
    return Offer{&clo, i, other};
  }
  return std::nullopt;
}

}  // namespace

CandidateInterpretation construct_rstar(const OrderingConfig& cfg,
                                        const std::vector<GroundClosure>& n,
                                        ClosureVariant variant) {
  // only the larger side of a positive instance literal can head a rule
  TermSet heads;
  for (const GroundClosure& clo : n) {
    for (const Literal& l : clo.instance.lits) {
      if (!l.positive) continue;
      const Cmp c = term_compare(cfg, l.lhs, l.rhs);
      if (c == Cmp::Greater)
        heads.insert(l.lhs);
      else if (c == Cmp::Less)
        heads.insert(l.rhs);
    }
  }
  std::vector<Term> order(heads.begin(), heads.end());
  std::sort(order.begin(), order.end(), [&](const Term& a, const Term& b) {
    return term_compare(cfg, a, b) == Cmp::Less;
  });

  CandidateInterpretation out;
  std::vector<Rule> acc;
  for (const Term& s : order) {
    const GroundRewriteSystem rs(acc);
    if (!irreducible(rs, s)) continue;
    std::optional<Offer> best;
    for (const GroundClosure& clo : n) {
      if (clause_true_in(rs, clo.instance)) continue;
      const auto cand = offer_at(cfg, rs, clo, s, variant);
      if (!cand) continue;
      if (!best) {
        best = cand;
        continue;
      }
      const Cmp c = closure_compare(cfg, rs, variant, *cand->clo, *best->clo);
      if (c == Cmp::Less ||
          (c != Cmp::Greater && closure_key(*cand->clo) < closure_key(*best->clo)))
        best = cand;
    }
    if (!best) continue;
    const Rule rule{s, best->rhs};
    acc.push_back(rule);
    out.log.push_back(Production{rule, *best->clo, best->lit});
  }
  out.rstar = GroundRewriteSystem(std::move(acc));
  return out;
}

ModelCheck check_model(const OrderingConfig& cfg, const GroundRewriteSystem& r,
                       const std::vector<GroundClosure>& n,
                       ClosureVariant variant) {
  ModelCheck out;
  for (const GroundClosure& clo : n) {
    if (clause_true_in(r, clo.instance)) continue;
    out.holds = false;
    if (!out.failing) {
      out.failing = clo;
      continue;
    }
    const Cmp c = closure_compare(cfg, r, variant, clo, *out.failing);
    if (c == Cmp::Less ||
        (c != Cmp::Greater && closure_key(clo) < closure_key(*out.failing)))
      out.failing = clo;
  }
  return out;
}

}  // namespace dersat
