#include "dersat/ordering.hpp"

#include <stdexcept>

namespace dersat {

Cmp flip(Cmp c) {
  switch (c) {
    case Cmp::Greater: return Cmp::Less;
    case Cmp::Less: return Cmp::Greater;
    default: return c;
  }
}

std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::Greater: return "greater";
    case Cmp::Less: return "less";
    case Cmp::Equal: return "equal";
    case Cmp::Incomparable: return "incomparable";
  }
  return "?";
}

int OrderingConfig::prec(FunId f) const {
  auto it = precedence.find(f);
  if (it == precedence.end())
    throw std::invalid_argument("no precedence for symbol " +
                                Signature::instance().name(f));
  return it->second;
}

uint64_t OrderingConfig::weight_of(FunId f) const {
  auto it = weights.find(f);
  if (it == weights.end())
    throw std::invalid_argument("no kbo weight for symbol " +
                                Signature::instance().name(f));
  return it->second;
}

void OrderingConfig::validate() const {
  if (kind != OrderKind::Kbo) return;
  if (var_weight < 1)
    throw std::invalid_argument("kbo variable weight must be at least 1");
  auto& sig = Signature::instance();
  for (auto& [f, w] : weights) {
    if (sig.arity(f) == 0 && w < var_weight)
      throw std::invalid_argument("kbo weight of constant " + sig.name(f) +
                                  " is below the variable weight");
    if (sig.arity(f) == 1 && w == 0) {
      for (auto& [g, pg] : precedence)
        if (g != f && pg >= prec(f))
          throw std::invalid_argument(
              "kbo weight-zero unary symbol " + sig.name(f) +
              " must be greatest in the precedence");
    }
  }
}

std::map<FunId, int> precedence_desc(const std::vector<FunId>& desc) {
  std::map<FunId, int> out;
  int p = static_cast<int>(desc.size());
  for (FunId f : desc) out[f] = p--;
  return out;
}

uint64_t term_weight(const OrderingConfig& cfg, const Term& t) {
  if (t.is_var()) return cfg.var_weight;
  uint64_t w = cfg.weight_of(t.fun());
  for (const auto& a : t.args()) w += term_weight(cfg, a);
  return w;
}

namespace {

void var_count_delta(const Term& t, std::map<VarId, int>& delta, int sign) {
  if (t.is_var()) {
    delta[t.var_id()] += sign;
    return;
  }
  for (const auto& a : t.args()) var_count_delta(a, delta, sign);
}

Cmp kbo(const OrderingConfig& cfg, const Term& s, const Term& t) {
  if (s == t) return Cmp::Equal;
  if (s.is_var())
    return contains_subterm(t, s) ? Cmp::Less : Cmp::Incomparable;
  if (t.is_var())
    return contains_subterm(s, t) ? Cmp::Greater : Cmp::Incomparable;

  std::map<VarId, int> delta;
  var_count_delta(s, delta, +1);
  var_count_delta(t, delta, -1);
  bool ge = true, le = true;
  for (auto& [v, d] : delta) {
    if (d < 0) ge = false;
    if (d > 0) le = false;
  }

  uint64_t ws = term_weight(cfg, s), wt = term_weight(cfg, t);
  if (ws > wt) return ge ? Cmp::Greater : Cmp::Incomparable;
  if (ws < wt) return le ? Cmp::Less : Cmp::Incomparable;

  int ps = cfg.prec(s.fun()), pt = cfg.prec(t.fun());
  if (ps > pt) return ge ? Cmp::Greater : Cmp::Incomparable;
  if (ps < pt) return le ? Cmp::Less : Cmp::Incomparable;
  if (s.fun() != t.fun())
    throw std::invalid_argument("kbo precedence is not injective on symbols " +
                                Signature::instance().name(s.fun()) + ", " +
                                Signature::instance().name(t.fun()));

  for (size_t i = 0; i < s.args().size(); ++i) {
    Cmp c = kbo(cfg, s.args()[i], t.args()[i]);
    if (c == Cmp::Equal) continue;
    if (c == Cmp::Greater) return ge ? Cmp::Greater : Cmp::Incomparable;
    if (c == Cmp::Less) return le ? Cmp::Less : Cmp::Incomparable;
    return Cmp::Incomparable;
  }
  return Cmp::Equal;
}

bool lpo_gt(const OrderingConfig& cfg, const Term& s, const Term& t) {
  if (s == t) return false;
  if (s.is_var()) return false;
  if (t.is_var()) return contains_subterm(s, t);

  for (const auto& si : s.args())
    if (si == t || lpo_gt(cfg, si, t)) return true;

  int ps = cfg.prec(s.fun()), pt = cfg.prec(t.fun());
  if (ps > pt) {
    for (const auto& tj : t.args())
      if (!lpo_gt(cfg, s, tj)) return false;
    return true;
  }
  if (ps == pt && s.fun() == t.fun()) {
    for (size_t i = 0; i < s.args().size(); ++i) {
      if (s.args()[i] == t.args()[i]) continue;
      if (!lpo_gt(cfg, s.args()[i], t.args()[i])) return false;
      for (const auto& tj : t.args())
        if (!lpo_gt(cfg, s, tj)) return false;
      return true;
    }
    return false;
  }
  return false;
}

}  // namespace

Cmp term_compare(const OrderingConfig& cfg, const Term& s, const Term& t) {
  if (cfg.kind == OrderKind::Kbo) return kbo(cfg, s, t);
  if (s == t) return Cmp::Equal;
  if (lpo_gt(cfg, s, t)) return Cmp::Greater;
  if (lpo_gt(cfg, t, s)) return Cmp::Less;
  return Cmp::Incomparable;
}

std::vector<Term> literal_term_multiset(const Literal& l) {
  if (l.positive) return {l.lhs, l.rhs};
  return {l.lhs, l.lhs, l.rhs, l.rhs};
}

Cmp literal_compare(const OrderingConfig& cfg, const Literal& a, const Literal& b) {
  auto base = [&cfg](const Term& s, const Term& t) {
    return term_compare(cfg, s, t);
  };
  return multiset_extend(base, literal_term_multiset(a), literal_term_multiset(b));
}

Cmp clause_compare(const OrderingConfig& cfg, const Clause& a, const Clause& b) {
  auto base = [&cfg](const Literal& x, const Literal& y) {
    return literal_compare(cfg, x, y);
  };
  return multiset_extend(base, a.lits, b.lits);
}

bool literal_maximal(const OrderingConfig& cfg, const Clause& c, size_t idx,
                     bool strict) {
  for (size_t j = 0; j < c.lits.size(); ++j) {
    if (j == idx) continue;
    Cmp cmp = literal_compare(cfg, c.lits[j], c.lits[idx]);
    if (cmp == Cmp::Greater) return false;
    if (strict && cmp == Cmp::Equal) return false;
  }
  return true;
}

}  // namespace dersat
