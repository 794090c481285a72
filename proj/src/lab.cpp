#include "dersat/lab.hpp"

#include <algorithm>
#include <stdexcept>

namespace dersat {

std::vector<Term> ground_universe(const UniverseBound& b) {
  TermSet u;
  for (const Term& s : b.seeds) {
    if (!s.ground()) throw std::invalid_argument("universe seeds must be ground");
    const TermSet subs = subterms(s);
    u.insert(subs.begin(), subs.end());
  }

  std::vector<FunId> constants, builders;
  for (FunId f : b.signature) {
    (Signature::instance().arity(f) == 0 ? constants : builders).push_back(f);
  }
  std::vector<Term> layer;  // everything of depth < d at the top of the loop
  for (FunId f : constants) {
    layer.push_back(Term::app(f));
    u.insert(layer.back());
  }
  if (u.size() > b.max_terms)
    throw std::length_error("ground universe exceeds the configured term cap");

  for (int d = 1; d <= b.max_depth; ++d) {
    std::vector<Term> next = layer;
    for (FunId f : builders) {
      const int n = Signature::instance().arity(f);
      if (layer.empty()) break;
      std::vector<size_t> odo(static_cast<size_t>(n), 0);
      for (;;) {
        std::vector<Term> args;
        args.reserve(static_cast<size_t>(n));
        for (size_t i : odo) args.push_back(layer[i]);
        const Term t = Term::app(f, std::move(args));
        if (u.insert(t).second) {
          next.push_back(t);
          if (u.size() > b.max_terms)
            throw std::length_error(
                "ground universe exceeds the configured term cap");
        }
        size_t i = 0;
        while (i < odo.size() && ++odo[i] == layer.size()) odo[i++] = 0;
        if (i == odo.size()) break;
      }
    }
    layer = std::move(next);
  }
  return {u.begin(), u.end()};
}

std::vector<GroundClosure> ground_instances(const Clause& c,
                                            const UniverseBound& b) {
  const std::set<VarId> vset = vars(c);
  const std::vector<VarId> vs(vset.begin(), vset.end());
  if (vs.empty()) return {GroundClosure(c, {})};

  const std::vector<Term> u = ground_universe(b);
  if (u.empty()) return {};

  std::vector<GroundClosure> out;
  std::vector<size_t> odo(vs.size(), 0);
  for (;;) {
    Substitution th;
    for (size_t i = 0; i < vs.size(); ++i) th.bind(vs[i], u[odo[i]]);
    out.push_back(GroundClosure(c, th));
    size_t i = 0;
    while (i < odo.size() && ++odo[i] == u.size()) odo[i++] = 0;
    if (i == odo.size()) break;
  }
  return out;
}

LeftReducedStream::LeftReducedStream(const UniverseBound& b,
                                     const OrderingConfig& cfg,
                                     size_t candidate_cap) {
  const std::vector<Term> u = ground_universe(b);
  for (const Term& l : u) {
    for (const Term& r : u) {
      if (term_compare(cfg, l, r) == Cmp::Greater) cands_.push_back({l, r});
    }
  }
  if (cands_.size() > candidate_cap)
    throw std::length_error("rule candidate count exceeds the enumeration cap");
  std::sort(cands_.begin(), cands_.end(),
            [](const Rule& a, const Rule& b2) { return rule_compare(a, b2) < 0; });
  level_ = {{}};  // the empty system opens the stream
}

void LeftReducedStream::extend(size_t start, size_t need,
                               std::vector<size_t>& cur) {
  if (need == 0) {
    level_.push_back(cur);
    return;
  }
  for (size_t i = start; i < cands_.size(); ++i) {
    bool ok = true;
    for (size_t j : cur) {
      // left sides may not overlap, and a left side used twice would make
      // the earlier rule reduce the later one
      if (contains_subterm(cands_[j].lhs, cands_[i].lhs) ||
          contains_subterm(cands_[i].lhs, cands_[j].lhs)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    cur.push_back(i);
    extend(i + 1, need - 1, cur);
    cur.pop_back();
  }
}

void LeftReducedStream::fill_level() {
  level_.clear();
  pos_ = 0;
  std::vector<size_t> cur;
  extend(0, k_, cur);
}

std::optional<GroundRewriteSystem> LeftReducedStream::next() {
  if (done_) return std::nullopt;
  while (pos_ == level_.size()) {
    ++k_;
    if (k_ > cands_.size()) {
      done_ = true;
      return std::nullopt;
    }
    fill_level();
    if (level_.empty()) {
      done_ = true;
      return std::nullopt;
    }
  }
  std::vector<Rule> sel;
  sel.reserve(k_);
  for (size_t i : level_[pos_]) sel.push_back(cands_[i]);
  ++pos_;
  return GroundRewriteSystem(std::move(sel));
}

std::vector<GroundRewriteSystem> all_left_reduced(const UniverseBound& b,
                                                  const OrderingConfig& cfg,
                                                  size_t candidate_cap) {
  LeftReducedStream s(b, cfg, candidate_cap);
  std::vector<GroundRewriteSystem> out;
  while (auto r = s.next()) out.push_back(std::move(*r));
  return out;
}

bool classically_redundant(const OrderingConfig& cfg, const Clause& c,
                           const std::vector<Clause>& n) {
  std::vector<Clause> smaller;
  for (const Clause& d : n) {
    if (clause_compare(cfg, d, c) == Cmp::Less) smaller.push_back(d);
  }
  return ground_entails(smaller, c);
}

bool closure_redundant(const OrderingConfig& cfg, const GroundClosure& clo,
                       const std::vector<GroundClosure>& n,
                       const UniverseBound& b, ClosureVariant variant,
                       size_t candidate_cap) {
  LeftReducedStream stream(b, cfg, candidate_cap);
  while (auto r = stream.next()) {
    if (closure_true_in(*r, clo)) continue;
    bool witness = false;
    for (const GroundClosure& d : n) {
      if (closure_true_in(*r, d)) continue;
      if (closure_compare(cfg, *r, variant, d, clo) == Cmp::Less) {
        witness = true;
        break;
      }
    }
    if (!witness) return false;
  }
  return true;
}

bool inference_redundant(const OrderingConfig& cfg, const GroundInference& inf,
                         const std::vector<GroundClosure>& n,
                         const UniverseBound& b, ClosureVariant variant,
                         size_t candidate_cap) {
  const bool sup = inf.tag == RuleTag::GroundSuperposition ||
                   inf.tag == RuleTag::GroundSuperpositionVar;
  const GroundClosure& right = inf.premises.back();

  LeftReducedStream stream(b, cfg, candidate_cap);
  while (auto r = stream.next()) {
    if (closure_true_in(*r, inf.conclusion)) continue;
    if (sup && inf.rewrite_rule &&
        term_compare(cfg, inf.rewrite_rule->lhs, inf.rewrite_rule->rhs) ==
            Cmp::Greater &&
        !r->has_rule(*inf.rewrite_rule))
      continue;
    if (sup && inf.premises.size() == 2 &&
        closure_compare(cfg, *r, variant, inf.premises.front(), right) !=
            Cmp::Less)
      continue;
    bool witness = false;
    for (const GroundClosure& d : n) {
      if (closure_true_in(*r, d)) continue;
      if (closure_compare(cfg, *r, variant, d, right) == Cmp::Less) {
        witness = true;
        break;
      }
    }
    if (!witness) return false;
  }
  return true;
}

}  // namespace dersat
